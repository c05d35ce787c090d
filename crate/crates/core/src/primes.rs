//! Small-integer primality by trial division; adequate for desk-scale moduli.

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(17) && is_prime(293));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(21) && !is_prime(25));
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(63), vec![3, 7]);
        assert_eq!(prime_factors(16), vec![2]);
        assert_eq!(prime_factors(1), Vec::<usize>::new());
    }
}
