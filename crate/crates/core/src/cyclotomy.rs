//! Quartic cyclotomy over Z_n for an odd prime n = 4f + 1: the four power
//! classes of a generator, the sixteen cyclotomic numbers (counted directly
//! and in closed form), the six two-class support sequences, and the closed
//! forms for all of their correlations.
//!
//! The quadratic-form parameters in n = x^2 + 4y^2 are recovered from the
//! counted cyclotomic numbers rather than from an independent decomposition:
//! the sign conventions of (x, y) depend on the generator choice, and
//! recovery from counts anchors the closed forms to exactly the convention
//! in force.

use crate::error::{Error, Result};
use crate::primes::{is_prime, prime_factors};
use crate::seq::BinarySequence;

/// 4x4 table of cyclotomic numbers: entry (i, j) counts elements w of class
/// C_i with w + 1 in class C_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumberTable {
    entries: [[i64; 4]; 4],
}

impl CyclotomicNumberTable {
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[[i64; 4]; 4] {
        &self.entries
    }
}

/// An odd prime n = 4f + 1 with a chosen generator of Z_n*, the quartic
/// power classes, the recovered (x, y) with n = x^2 + 4y^2, and the counted
/// cyclotomic-number table (verified against the closed forms on build).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticSystem {
    n: usize,
    f: usize,
    generator: usize,
    classes: [Vec<usize>; 4],
    class_of: Vec<u8>,
    x: i64,
    y: i64,
    table: CyclotomicNumberTable,
}

impl QuarticSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn classes(&self) -> &[Vec<usize>; 4] {
        &self.classes
    }

    /// Class index of a nonzero residue; zero has no class.
    pub fn class_of(&self, residue: usize) -> Option<usize> {
        let r = residue % self.n;
        if r == 0 {
            None
        } else {
            Some(self.class_of[r] as usize)
        }
    }

    pub fn table(&self) -> &CyclotomicNumberTable {
        &self.table
    }
}

fn mul_mod(a: usize, b: usize, n: usize) -> usize {
    (a as u64 * b as u64 % n as u64) as usize
}

fn pow_mod(mut base: usize, mut exp: usize, n: usize) -> usize {
    let mut acc = 1usize;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

fn generates(candidate: usize, n: usize) -> bool {
    if candidate % n == 0 {
        return false;
    }
    prime_factors(n - 1)
        .into_iter()
        .all(|q| pow_mod(candidate, (n - 1) / q, n) != 1)
}

/// Smallest generator of the multiplicative group of Z_n, n prime.
pub fn find_generator(n: usize) -> Result<usize> {
    if !is_prime(n) || n < 3 {
        return Err(Error::NotPrime(n));
    }
    (2..n)
        .find(|&a| generates(a, n))
        .ok_or(Error::NotPrime(n)) // unreachable for prime n >= 3
}

/// Build the quartic system for prime n = 1 mod 4 and a verified generator.
pub fn build_system(n: usize, generator: usize) -> Result<QuarticSystem> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if n % 4 != 1 {
        return Err(Error::NotOneModFour { n });
    }
    if !generates(generator, n) {
        return Err(Error::NotGenerator { candidate: generator, n });
    }
    let f = (n - 1) / 4;

    let mut classes: [Vec<usize>; 4] = Default::default();
    let mut class_of = vec![0u8; n];
    let mut power = 1usize;
    for exp in 0..n - 1 {
        let class = exp % 4;
        classes[class].push(power);
        class_of[power] = class as u8;
        power = mul_mod(power, generator, n);
    }
    for class in &mut classes {
        class.sort_unstable();
    }

    // -1 = alpha^(2f) lands in C_2 for odd f, C_0 for even f.
    debug_assert_eq!(class_of[n - 1] as usize, if f % 2 == 1 { 2 } else { 0 });

    let mut entries = [[0i64; 4]; 4];
    for w in 1..n {
        let w1 = (w + 1) % n;
        if w1 == 0 {
            continue;
        }
        entries[class_of[w] as usize][class_of[w1] as usize] += 1;
    }
    let table = CyclotomicNumberTable { entries };

    let (x, y) = recover_xy(n as i64, f, &table);
    assert_eq!(
        (n as i64),
        x * x + 4 * y * y,
        "recovered (x, y) = ({x}, {y}) inconsistent for n = {n}"
    );

    let system = QuarticSystem {
        n,
        f,
        generator,
        classes,
        class_of,
        x,
        y,
        table,
    };
    let closed = cyclotomic_numbers_closed_form(&system);
    assert_eq!(
        closed, system.table,
        "closed-form cyclotomic numbers disagree with counts for n = {n}, alpha = {generator}"
    );
    Ok(system)
}

/// Solve the closed forms for (x, y) from the counted entries (0,2) and
/// (0,1). For odd f: (0,2) = (n+1-6x)/16 and (0,1) = (n+1+2x-8y)/16; for
/// even f: (0,2) = (n-3+2x)/16 and (0,1) = (n-3+2x+8y)/16.
fn recover_xy(n: i64, f: usize, table: &CyclotomicNumberTable) -> (i64, i64) {
    let c = table.entry(0, 2);
    let b = table.entry(0, 1);
    if f % 2 == 1 {
        let x_num = n + 1 - 16 * c;
        assert_eq!(x_num % 6, 0, "non-integral x recovery for n = {n}");
        let x = x_num / 6;
        let y_num = n + 1 + 2 * x - 16 * b;
        assert_eq!(y_num % 8, 0, "non-integral y recovery for n = {n}");
        (x, y_num / 8)
    } else {
        let x_num = 16 * c - n + 3;
        assert_eq!(x_num % 2, 0, "non-integral x recovery for n = {n}");
        let x = x_num / 2;
        let y_num = 16 * b - n + 3 - 2 * x;
        assert_eq!(y_num % 8, 0, "non-integral y recovery for n = {n}");
        (x, y_num / 8)
    }
}

/// The sixteen cyclotomic numbers from the five letter values and the
/// parity-specific layout.
pub fn cyclotomic_numbers_closed_form(system: &QuarticSystem) -> CyclotomicNumberTable {
    let n = system.n as i64;
    let (x, y) = (system.x, system.y);
    let sixteenth = |num: i64| -> i64 {
        assert_eq!(num % 16, 0, "non-integer cyclotomic number for n = {n}");
        num / 16
    };
    let entries = if system.f % 2 == 1 {
        let a = sixteenth(n - 7 + 2 * x);
        let b = sixteenth(n + 1 + 2 * x - 8 * y);
        let c = sixteenth(n + 1 - 6 * x);
        let d = sixteenth(n + 1 + 2 * x + 8 * y);
        let e = sixteenth(n - 3 - 2 * x);
        [[a, b, c, d], [e, e, d, b], [a, e, a, e], [e, d, b, e]]
    } else {
        let a = sixteenth(n - 11 - 6 * x);
        let b = sixteenth(n - 3 + 2 * x + 8 * y);
        let c = sixteenth(n - 3 + 2 * x);
        let d = sixteenth(n - 3 + 2 * x - 8 * y);
        let e = sixteenth(n + 1 - 2 * x);
        [[a, b, c, d], [b, d, e, e], [c, e, c, e], [d, e, e, b]]
    };
    CyclotomicNumberTable { entries }
}

/// Which (x, y) sign convention a theorem requires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConventionTarget {
    /// y = -1; reachable only when n = x^2 + 4.
    YMinusOne,
    /// x = +1 or -1; reachable only when n = 1 + 4y^2.
    XUnit,
}

impl ConventionTarget {
    fn met(&self, system: &QuarticSystem) -> bool {
        match self {
            Self::YMinusOne => system.y == -1,
            Self::XUnit => system.x.abs() == 1,
        }
    }

    fn describe(&self) -> &'static str {
        match self {
            Self::YMinusOne => "y = -1",
            Self::XUnit => "x = +-1",
        }
    }
}

/// Try generators in increasing order until the recovered (x, y) meet the
/// target convention.
pub fn select_system_for_convention(n: usize, target: ConventionTarget) -> Result<QuarticSystem> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if n % 4 != 1 {
        return Err(Error::NotOneModFour { n });
    }
    let mut achievable = Vec::new();
    for alpha in 2..n {
        if !generates(alpha, n) {
            continue;
        }
        let system = build_system(n, alpha)?;
        if target.met(&system) {
            return Ok(system);
        }
        let pair = (system.x, system.y);
        if !achievable.contains(&pair) {
            achievable.push(pair);
        }
    }
    Err(Error::ConventionUnreachable {
        n,
        target: target.describe().to_string(),
        achievable: achievable
            .iter()
            .map(|(x, y)| format!("({x}, {y})"))
            .collect::<Vec<_>>()
            .join(", "),
    })
}

/// The six length-n binary sequences supported on unions of two classes:
/// s1 on C0 u C1, s2 on C0 u C2, s3 on C0 u C3, s4 on C1 u C2, s5 on C1 u C3,
/// s6 on C2 u C3. Every sequence is 0 at index 0.
#[derive(Debug, Clone)]
pub struct SixSequences {
    sequences: [BinarySequence; 6],
}

impl SixSequences {
    /// 1-based accessor matching the s_1 .. s_6 naming.
    pub fn get(&self, index: usize) -> &BinarySequence {
        assert!((1..=6).contains(&index), "sequence index {index} outside 1..=6");
        &self.sequences[index - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BinarySequence)> {
        self.sequences.iter().enumerate().map(|(i, s)| (i + 1, s))
    }
}

/// Support class pairs of s_1 .. s_6, then their complement classes.
const SUPPORT_SPLIT: [[usize; 4]; 6] = [
    [0, 1, 2, 3],
    [0, 2, 1, 3],
    [0, 3, 1, 2],
    [1, 2, 0, 3],
    [1, 3, 0, 2],
    [2, 3, 0, 1],
];

pub fn six_sequences(system: &QuarticSystem) -> SixSequences {
    let build = |split: &[usize; 4]| {
        let mut support: Vec<usize> = system.classes[split[0]].clone();
        support.extend_from_slice(&system.classes[split[1]]);
        BinarySequence::from_support(system.n, &support).expect("class elements are < n")
    };
    SixSequences {
        sequences: [
            build(&SUPPORT_SPLIT[0]),
            build(&SUPPORT_SPLIT[1]),
            build(&SUPPORT_SPLIT[2]),
            build(&SUPPORT_SPLIT[3]),
            build(&SUPPORT_SPLIT[4]),
            build(&SUPPORT_SPLIT[5]),
        ],
    }
}

/// The signed sum of sixteen cyclotomic numbers giving the interior part of
/// `R_{s_i,s_j}(tau)`: classes of the support of s_i count +, complement
/// classes count -, and the table is read at `(i_l - k, j_m - k)` for tau in
/// class k. (Reading the indices in the other order fails the counting
/// oracle when f is odd.)
pub fn delta(system: &QuarticSystem, i: usize, j: usize, tau: usize) -> Result<i64> {
    assert!((1..=6).contains(&i) && (1..=6).contains(&j), "sequence indices outside 1..=6");
    if tau % system.n == 0 {
        return Err(Error::ZeroShift);
    }
    if tau >= system.n {
        return Err(Error::ShiftOutOfRange { tau, len: system.n });
    }
    let k = system.class_of[tau] as usize;
    let pi = &SUPPORT_SPLIT[i - 1];
    let pj = &SUPPORT_SPLIT[j - 1];
    let mut total = 0i64;
    for (l, &ci) in pi.iter().enumerate() {
        for (m, &cj) in pj.iter().enumerate() {
            let sign = if (l < 2) == (m < 2) { 1 } else { -1 };
            total += sign * system.table.entry((ci + 4 - k) % 4, (cj + 4 - k) % 4);
        }
    }
    Ok(total)
}

/// Linear form c_x * x + c_y * y + c_0 in the recovered parameters.
type Form = (i64, i64, i64);

const fn form(cx: i64, cy: i64, c0: i64) -> Form {
    (cx, cy, c0)
}

/// Rows for 1 <= i <= j <= 6, f odd: value of R_{s_i,s_j}(tau) per class of
/// tau.
const ROWS_F_ODD: [((usize, usize), [Form; 4]); 21] = [
    ((1, 1), [form(0, -2, -1), form(0, 2, -1), form(0, -2, -1), form(0, 2, -1)]),
    ((2, 2), [form(0, 0, -3), form(0, 0, 1), form(0, 0, -3), form(0, 0, 1)]),
    ((3, 3), [form(0, 2, -1), form(0, -2, -1), form(0, 2, -1), form(0, -2, -1)]),
    ((4, 4), [form(0, 2, -1), form(0, -2, -1), form(0, 2, -1), form(0, -2, -1)]),
    ((5, 5), [form(0, 0, 1), form(0, 0, -3), form(0, 0, 1), form(0, 0, -3)]),
    ((6, 6), [form(0, -2, -1), form(0, 2, -1), form(0, -2, -1), form(0, 2, -1)]),
    ((1, 2), [form(-1, 2, 0), form(1, 2, 2), form(1, -2, -2), form(-1, -2, 0)]),
    ((1, 3), [form(1, 0, 0), form(-1, 0, 2), form(1, 0, 0), form(-1, 0, -2)]),
    ((1, 4), [form(-1, 0, 2), form(1, 0, 0), form(-1, 0, -2), form(1, 0, 0)]),
    ((1, 5), [form(1, -2, 2), form(-1, -2, 0), form(-1, 2, 0), form(1, 2, -2)]),
    ((1, 6), [form(0, 2, 3), form(0, -2, 3), form(0, 2, -1), form(0, -2, -1)]),
    ((2, 3), [form(1, 2, -2), form(1, -2, 2), form(-1, -2, 0), form(-1, 2, 0)]),
    ((2, 4), [form(-1, -2, 0), form(-1, 2, 0), form(1, 2, -2), form(1, -2, 2)]),
    ((2, 5), [form(0, 0, 1), form(0, 0, 1), form(0, 0, 1), form(0, 0, 1)]),
    ((2, 6), [form(-1, 2, 0), form(1, 2, 2), form(1, -2, -2), form(-1, -2, 0)]),
    ((3, 4), [form(0, -2, 3), form(0, 2, -1), form(0, -2, -1), form(0, 2, 3)]),
    ((3, 5), [form(1, 2, 2), form(1, -2, -2), form(-1, -2, 0), form(-1, 2, 0)]),
    ((3, 6), [form(-1, 0, 2), form(1, 0, 0), form(-1, 0, -2), form(1, 0, 0)]),
    ((4, 5), [form(-1, -2, 0), form(-1, 2, 0), form(1, 2, 2), form(1, -2, -2)]),
    ((4, 6), [form(1, 0, 0), form(-1, 0, 2), form(1, 0, 0), form(-1, 0, -2)]),
    ((5, 6), [form(1, -2, 2), form(-1, -2, 0), form(-1, 2, 0), form(1, 2, -2)]),
];

/// Rows for 1 <= i <= j <= 6, f even.
const ROWS_F_EVEN: [((usize, usize), [Form; 4]); 21] = [
    ((1, 1), [form(0, 2, -3), form(0, -2, -3), form(0, 2, 1), form(0, -2, 1)]),
    ((2, 2), [form(0, 0, -3), form(0, 0, 1), form(0, 0, -3), form(0, 0, 1)]),
    ((3, 3), [form(0, -2, -3), form(0, 2, 1), form(0, -2, 1), form(0, 2, -3)]),
    ((4, 4), [form(0, -2, 1), form(0, 2, -3), form(0, -2, -3), form(0, 2, 1)]),
    ((5, 5), [form(0, 0, 1), form(0, 0, -3), form(0, 0, 1), form(0, 0, -3)]),
    ((6, 6), [form(0, 2, 1), form(0, -2, 1), form(0, 2, -3), form(0, -2, -3)]),
    ((1, 2), [form(-1, 2, -2), form(1, 2, 0), form(1, -2, 0), form(-1, -2, 2)]),
    ((1, 3), [form(-1, 0, -2), form(1, 0, 0), form(-1, 0, 2), form(1, 0, 0)]),
    ((1, 4), [form(1, 0, 0), form(-1, 0, -2), form(1, 0, 0), form(-1, 0, 2)]),
    ((1, 5), [form(1, -2, 0), form(-1, -2, -2), form(-1, 2, 2), form(1, 2, 0)]),
    ((1, 6), [form(0, -2, 1), form(0, 2, 1), form(0, -2, 1), form(0, 2, 1)]),
    ((2, 3), [form(-1, -2, -2), form(-1, 2, 2), form(1, 2, 0), form(1, -2, 0)]),
    ((2, 4), [form(1, 2, 0), form(1, -2, 0), form(-1, -2, -2), form(-1, 2, 2)]),
    ((2, 5), [form(0, 0, 1), form(0, 0, 1), form(0, 0, 1), form(0, 0, 1)]),
    ((2, 6), [form(1, -2, 0), form(-1, -2, 2), form(-1, 2, -2), form(1, 2, 0)]),
    ((3, 4), [form(0, 2, 1), form(0, -2, 1), form(0, 2, 1), form(0, -2, 1)]),
    ((3, 5), [form(1, 2, 0), form(1, -2, 0), form(-1, -2, 2), form(-1, 2, -2)]),
    ((3, 6), [form(1, 0, 0), form(-1, 0, 2), form(1, 0, 0), form(-1, 0, -2)]),
    ((4, 5), [form(-1, -2, 2), form(-1, 2, -2), form(1, 2, 0), form(1, -2, 0)]),
    ((4, 6), [form(-1, 0, 2), form(1, 0, 0), form(-1, 0, -2), form(1, 0, 0)]),
    ((5, 6), [form(-1, 2, 2), form(1, 2, 0), form(1, -2, 0), form(-1, -2, -2)]),
];

fn row(f_odd: bool, i: usize, j: usize) -> &'static [Form; 4] {
    let rows: &[((usize, usize), [Form; 4]); 21] = if f_odd { &ROWS_F_ODD } else { &ROWS_F_EVEN };
    &rows
        .iter()
        .find(|((ri, rj), _)| *ri == i && *rj == j)
        .expect("row exists for every 1 <= i <= j <= 6")
        .1
}

/// Closed-form value of `R_{s_i,s_j}(tau)`.
///
/// Zero shift: n when i = j; 2 - n when i + j = 7 (the two sequences agree
/// only at index 0); 1 otherwise. Nonzero shifts read the tabulated row for
/// (min, max) at the class of tau; for i > j with f odd, the row is read at
/// the class of -tau instead (class k + 2), since -1 lies in class 2.
pub fn predicted_correlation(system: &QuarticSystem, i: usize, j: usize, tau: usize) -> i64 {
    assert!((1..=6).contains(&i) && (1..=6).contains(&j), "sequence indices outside 1..=6");
    assert!(tau < system.n, "shift {tau} out of range for n = {}", system.n);
    let n = system.n as i64;
    if tau == 0 {
        return if i == j {
            n
        } else if i + j == 7 {
            2 - n
        } else {
            1
        };
    }
    let f_odd = system.f % 2 == 1;
    let mut k = system.class_of[tau] as usize;
    let (a, b) = if i <= j {
        (i, j)
    } else {
        if f_odd {
            k = (k + 2) % 4;
        }
        (j, i)
    };
    let (cx, cy, c0) = row(f_odd, a, b)[k];
    cx * system.x + cy * system.y + c0
}
