//! GF(2^m) arithmetic on polynomial bit-vectors, just enough for trace
//! sequences: multiplication modulo a primitive polynomial, the absolute
//! trace, and a table of default primitive polynomials.

use crate::error::{Error, Result};

/// Default primitive polynomial per extension degree, as coefficient bits
/// with the most significant bit first (degree m down to the constant term).
/// The degree-6 entry is x^6 + x + 1.
pub const DEFAULT_POLYNOMIALS: [(usize, u64); 15] = [
    (2, 0b111),
    (3, 0b1011),
    (4, 0b10011),
    (5, 0b100101),
    (6, 0b1000011),
    (7, 0b10001001),
    (8, 0b100011101),
    (9, 0b1000010001),
    (10, 0b10000001001),
    (11, 0b100000000101),
    (12, 0b1000001010011),
    (13, 0b10000000011011),
    (14, 0b100010001000011),
    (15, 0b1000000000000011),
    (16, 0b10001000000001011),
];

pub fn default_polynomial(m: usize) -> Result<u64> {
    DEFAULT_POLYNOMIALS
        .iter()
        .find(|&&(deg, _)| deg == m)
        .map(|&(_, poly)| poly)
        .ok_or_else(|| Error::InvalidParameter(format!("no default polynomial for degree {m}")))
}

/// A binary extension field GF(2^m) presented by a primitive polynomial.
/// Elements are bit-vectors of degree < m; `alpha` (the class of x) is a
/// multiplicative generator, which `new` verifies by an order check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryFieldSpec {
    m: usize,
    poly: u64,
}

impl BinaryFieldSpec {
    pub fn new(m: usize, poly: u64) -> Result<Self> {
        if !(2..=16).contains(&m) {
            return Err(Error::InvalidParameter(format!(
                "extension degree {m} outside supported range 2..=16"
            )));
        }
        if poly >> m != 1 {
            return Err(Error::InvalidParameter(format!(
                "polynomial {poly:#b} does not have degree {m}"
            )));
        }
        let field = Self { m, poly };
        if !field.alpha_has_full_order() {
            return Err(Error::NotPrimitive { poly, degree: m });
        }
        Ok(field)
    }

    pub fn with_default_polynomial(m: usize) -> Result<Self> {
        Self::new(m, default_polynomial(m)?)
    }

    /// Parse coefficient bits written most significant first, e.g. "1000011"
    /// for x^6 + x + 1.
    pub fn from_bit_string(bits: &str) -> Result<Self> {
        let poly = u64::from_str_radix(bits, 2).map_err(|_| {
            Error::InvalidParameter(format!("polynomial bits {bits:?} are not binary"))
        })?;
        if poly < 4 {
            return Err(Error::InvalidParameter(format!(
                "polynomial bits {bits:?} have degree < 2"
            )));
        }
        let m = 63 - poly.leading_zeros() as usize;
        Self::new(m, poly)
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn polynomial(&self) -> u64 {
        self.poly
    }

    /// Field order minus one: the multiplicative group size 2^m - 1.
    pub fn period(&self) -> usize {
        (1usize << self.m) - 1
    }

    /// The reciprocal polynomial x^m p(1/x), also primitive.
    pub fn reciprocal(&self) -> Result<Self> {
        let mut rev = 0u64;
        for i in 0..=self.m {
            if self.poly >> i & 1 == 1 {
                rev |= 1 << (self.m - i);
            }
        }
        Self::new(self.m, rev)
    }

    pub fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let mut acc = 0u64;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.m & 1 == 1 {
                a ^= self.poly;
            }
        }
        acc
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp != 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Absolute trace to GF(2): `Tr(b) = b + b^2 + b^4 + ... + b^(2^(m-1))`.
    pub fn trace(&self, b: u64) -> u8 {
        let mut acc = 0u64;
        let mut x = b;
        for _ in 0..self.m {
            acc ^= x;
            x = self.mul(x, x);
        }
        debug_assert!(acc <= 1, "trace landed outside GF(2)");
        acc as u8
    }

    fn alpha_has_full_order(&self) -> bool {
        let order = self.period() as u64;
        if self.pow(2, order) != 1 {
            return false;
        }
        // alpha is primitive iff alpha^(order/q) != 1 for every prime q | order
        let mut rest = order;
        let mut q = 2u64;
        while q * q <= rest {
            if rest % q == 0 {
                if self.pow(2, order / q) == 1 {
                    return false;
                }
                while rest % q == 0 {
                    rest /= q;
                }
            }
            q += 1;
        }
        if rest > 1 && self.pow(2, order / rest) == 1 {
            return false;
        }
        true
    }
}
