//! Exact periodic correlation over the Gaussian integers.
//!
//! Every correlation value is a sum of roots of unity: `+-1` for binary
//! sequences, `{1, i, -1, -i}` for quaternary ones, so all arithmetic here is
//! integer arithmetic. There is no floating point anywhere in this crate.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::seq::{QuaternarySequence, Sequence};

/// A complex integer `re + im*i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: Self = Self::new(0, 0);

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: i64) -> Self {
        Self::new(re, 0)
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// Squared magnitude `re^2 + im^2`, exact.
    pub fn norm_sqr(self) -> u64 {
        (self.re * self.re + self.im * self.im) as u64
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else if self.im < 0 {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// All correlation values of one source/target pair, indexed by shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationSpectrum {
    values: Vec<GaussianInt>,
}

impl CorrelationSpectrum {
    pub fn from_values(values: Vec<GaussianInt>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, tau: usize) -> GaussianInt {
        self.values[tau]
    }

    pub fn values(&self) -> &[GaussianInt] {
        &self.values
    }

    /// Render as CSV with a `tau,re,im` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau,re,im\n");
        for (tau, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{tau},{},{}\n", v.re, v.im));
        }
        out
    }

    /// Parse the `to_csv` format; rows must be dense from tau = 0.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if idx == 0 {
                if line.trim() != "tau,re,im" {
                    return Err(Error::Parse {
                        line: 1,
                        message: "expected header tau,re,im".into(),
                    });
                }
                continue;
            }
            let parse_err = || Error::Parse {
                line: idx + 1,
                message: format!("invalid spectrum row {line:?}"),
            };
            let mut fields = line.split(',');
            let tau: usize = fields.next().ok_or_else(parse_err)?.trim().parse().map_err(|_| parse_err())?;
            let re: i64 = fields.next().ok_or_else(parse_err)?.trim().parse().map_err(|_| parse_err())?;
            let im: i64 = fields.next().ok_or_else(parse_err)?.trim().parse().map_err(|_| parse_err())?;
            if tau != values.len() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected tau {} in order, got {tau}", values.len()),
                });
            }
            values.push(GaussianInt::new(re, im));
        }
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { values })
    }

    /// Maximum squared magnitude over out-of-phase shifts `1 <= tau < N`.
    pub fn r_max_squared(&self) -> Result<u64> {
        if self.values.len() < 2 {
            return Err(Error::NoOutOfPhaseShift);
        }
        Ok(self
            .values
            .iter()
            .skip(1)
            .map(|v| v.norm_sqr())
            .max()
            .expect("nonempty"))
    }
}

/// `R_{s,t}(tau) = sum_i xi^(s(i) - t(i+tau))` with `xi = exp(2 pi i / H)`,
/// indices mod the common length.
pub fn cross_correlation<S: Sequence>(s: &S, t: &S, tau: usize) -> Result<GaussianInt> {
    let n = s.len();
    if t.len() != n {
        return Err(Error::LengthMismatch { left: n, right: t.len() });
    }
    if tau >= n {
        return Err(Error::ShiftOutOfRange { tau, len: n });
    }
    Ok(cross_unchecked(s.symbols(), t.symbols(), S::MODULUS, tau))
}

fn cross_unchecked(s: &[u8], t: &[u8], modulus: u8, tau: usize) -> GaussianInt {
    let n = s.len();
    let mut re = 0i64;
    let mut im = 0i64;
    for (i, &si) in s.iter().enumerate() {
        let j = i + tau;
        let j = if j >= n { j - n } else { j };
        let k = (si + modulus - t[j]) % modulus;
        match (modulus, k) {
            (2, 0) | (4, 0) => re += 1,
            (2, 1) | (4, 2) => re -= 1,
            (4, 1) => im += 1,
            (4, 3) => im -= 1,
            _ => unreachable!("symbols validated at construction"),
        }
    }
    GaussianInt::new(re, im)
}

/// Cross-correlation at every shift.
pub fn cross_spectrum<S: Sequence>(s: &S, t: &S) -> Result<CorrelationSpectrum> {
    let n = s.len();
    if t.len() != n {
        return Err(Error::LengthMismatch { left: n, right: t.len() });
    }
    let values = (0..n)
        .map(|tau| cross_unchecked(s.symbols(), t.symbols(), S::MODULUS, tau))
        .collect();
    Ok(CorrelationSpectrum { values })
}

/// Autocorrelation at every shift; `values[0]` is always the length.
pub fn auto_spectrum<S: Sequence>(s: &S) -> CorrelationSpectrum {
    cross_spectrum(s, s).expect("equal lengths")
}

/// Shortcut for `auto_spectrum(s).r_max_squared()`.
pub fn r_max_squared<S: Sequence>(s: &S) -> Result<u64> {
    auto_spectrum(s).r_max_squared()
}

/// Per-shift detail behind an optimality verdict.
#[derive(Debug, Clone)]
pub struct OptimalityReport {
    pub optimal: bool,
    pub r_max_squared: u64,
    /// Every out-of-phase shift with its correlation value.
    pub entries: Vec<(usize, GaussianInt)>,
}

/// A quaternary sequence of even length is optimal when `R_max = 2`,
/// i.e. when the maximum out-of-phase squared magnitude is exactly 4.
pub fn is_optimal_even_length(u: &QuaternarySequence) -> Result<OptimalityReport> {
    if u.len() % 2 != 0 {
        return Err(Error::OddLength(u.len()));
    }
    let spectrum = auto_spectrum(u);
    let r_max_squared = spectrum.r_max_squared()?;
    let entries = spectrum
        .values()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(tau, &v)| (tau, v))
        .collect();
    Ok(OptimalityReport {
        optimal: r_max_squared == 4,
        r_max_squared,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::BinarySequence;

    fn bin(symbols: &[u8]) -> BinarySequence {
        BinarySequence::new(symbols.to_vec()).unwrap()
    }

    #[test]
    fn antipodal_two_terms() {
        let s = bin(&[0, 1]);
        assert_eq!(cross_correlation(&s, &s, 1).unwrap(), GaussianInt::real(-2));
    }

    #[test]
    fn zero_shift_is_length() {
        let s = bin(&[0, 1, 1, 0, 1]);
        assert_eq!(cross_correlation(&s, &s, 0).unwrap(), GaussianInt::real(5));
    }

    #[test]
    fn all_zero_spectrum_is_constant() {
        let s = BinarySequence::zeros(7).unwrap();
        let spec = auto_spectrum(&s);
        assert!(spec.values().iter().all(|&v| v == GaussianInt::real(7)));
    }

    #[test]
    fn length_and_shift_errors() {
        let s = bin(&[0, 1]);
        let t = bin(&[0, 1, 1]);
        assert!(matches!(
            cross_correlation(&s, &t, 0),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
        assert!(matches!(
            cross_correlation(&s, &s, 2),
            Err(Error::ShiftOutOfRange { tau: 2, len: 2 })
        ));
    }

    #[test]
    fn quaternary_units() {
        // (0,1) over Z_4 at tau=1: exponents 0-1=3 -> -i and 1-0=1 -> i, sum 0.
        let u = QuaternarySequence::new(vec![0, 1]).unwrap();
        assert_eq!(cross_correlation(&u, &u, 1).unwrap(), GaussianInt::ZERO);
        let u = QuaternarySequence::new(vec![0, 1, 0, 0]).unwrap();
        let spec = auto_spectrum(&u);
        assert_eq!(spec.value(0), GaussianInt::real(4));
        assert_eq!(spec.value(1), GaussianInt::real(2));
        assert_eq!(spec.value(3), spec.value(1).conj());
    }

    #[test]
    fn r_max_squared_rejects_length_one() {
        let s = bin(&[1]);
        assert!(matches!(
            auto_spectrum(&s).r_max_squared(),
            Err(Error::NoOutOfPhaseShift)
        ));
    }

    #[test]
    fn constant_four_is_not_optimal() {
        let u = QuaternarySequence::new(vec![0, 0, 0, 0]).unwrap();
        let report = is_optimal_even_length(&u).unwrap();
        assert!(!report.optimal);
        assert_eq!(report.r_max_squared, 16);
        assert_eq!(report.entries[0], (1, GaussianInt::real(4)));
    }

    #[test]
    fn odd_length_rejected() {
        let u = QuaternarySequence::new(vec![0, 1, 2]).unwrap();
        assert!(matches!(is_optimal_even_length(&u), Err(Error::OddLength(3))));
    }

    #[test]
    fn perfect_sequence_has_zero_out_of_phase_energy() {
        // (0,1) over Z_4: R(1) = -i + i = 0.
        let u = QuaternarySequence::new(vec![0, 1]).unwrap();
        assert_eq!(auto_spectrum(&u).r_max_squared().unwrap(), 0);
    }

    #[test]
    fn stored_examples_are_optimal() {
        let report = is_optimal_even_length(&crate::fixtures::example2_u()).unwrap();
        assert!(report.optimal);
        let report = is_optimal_even_length(&crate::fixtures::example3_u()).unwrap();
        assert!(report.optimal);
        assert_eq!(report.r_max_squared, 4);
    }

    #[test]
    fn csv_round_trip() {
        let s = bin(&[0, 1, 1, 0, 1]);
        let spec = auto_spectrum(&s);
        let csv = spec.to_csv();
        assert_eq!(CorrelationSpectrum::from_csv(&csv).unwrap(), spec);
        assert!(CorrelationSpectrum::from_csv("bogus\n1,2,3").is_err());
        assert!(CorrelationSpectrum::from_csv("tau,re,im\n1,2,0").is_err());
    }
}
