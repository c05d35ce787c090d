//! Component-sequence families: trace m-sequences, Legendre pairs,
//! twin-prime pairs, and GMW pairs, plus the pair fixture file format.
//!
//! The external references define the twin-prime and GMW companions only
//! loosely, so each pair constructor is pinned by an executable acceptance
//! property: the spectrum its consuming theorem asserts. Constructors verify
//! that property before returning; when the default convention fails, the
//! small space of alternatives is searched and the winning convention is
//! recorded in the pair's parameter string.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::construction::{construct, verify_pattern, ConstructionInput, SpectrumPattern};
use crate::corr::auto_spectrum;
use crate::error::{Error, Result};
use crate::fields::BinaryFieldSpec;
use crate::primes::is_prime;
use crate::seq::{BinarySequence, Sequence};

/// True when every out-of-phase autocorrelation value equals -1.
pub fn is_ideal(s: &BinarySequence) -> bool {
    let spectrum = auto_spectrum(s);
    spectrum.values().iter().skip(1).all(|v| v.re == -1 && v.im == 0)
}

/// Trace sequence of the field's generator: `s(i) = Tr(alpha^i)`, length
/// 2^m - 1. Always balanced and ideal.
pub fn m_sequence(field: &BinaryFieldSpec) -> BinarySequence {
    let mut symbols = Vec::with_capacity(field.period());
    let mut power = 1u64;
    for _ in 0..field.period() {
        symbols.push(field.trace(power));
        power = field.mul(power, 2);
    }
    BinarySequence::new(symbols).expect("period >= 3")
}

/// Which family produced a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    Legendre,
    TwinPrime,
    Gmw,
    Fixture,
}

impl FamilyTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Legendre => "legendre",
            Self::TwinPrime => "twin_prime",
            Self::Gmw => "gmw",
            Self::Fixture => "fixture",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "legendre" => Ok(Self::Legendre),
            "twin_prime" => Ok(Self::TwinPrime),
            "gmw" => Ok(Self::Gmw),
            "fixture" => Ok(Self::Fixture),
            other => Err(Error::Parse {
                line: 1,
                message: format!("unknown family tag {other:?}"),
            }),
        }
    }
}

/// Two equal-length binary sequences with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair {
    pub first: BinarySequence,
    pub second: BinarySequence,
    pub family_tag: FamilyTag,
    /// Family-specific parameters, including any convention chosen by search.
    pub params: String,
}

impl SequencePair {
    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Theorem-spectrum acceptance check shared by the pair constructors:
/// Construction I on (s, t, s, t) with the given e must match `pattern`.
fn pair_check(s: &BinarySequence, t: &BinarySequence, e: [u8; 3], pattern: SpectrumPattern) -> Result<bool> {
    let input = ConstructionInput::new([s.clone(), t.clone(), s.clone(), t.clone()], e)?;
    Ok(verify_pattern(&construct(&input), pattern)?.matched)
}

/// Legendre pair of odd prime length: quadratic residues support the first
/// sequence, non-residues the second. Index 0 carries 0 in the first
/// sequence; in the second it carries 1 exactly when p = 3 mod 4 (the
/// spectrum check fails for every other assignment in that case).
pub fn legendre_pair(p: usize) -> Result<SequencePair> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::InvalidParameter("legendre pair needs an odd prime".into()));
    }
    let mut residue = vec![false; p];
    for i in 1..p {
        residue[i * i % p] = true;
    }
    let base_first: Vec<u8> = (0..p).map(|i| u8::from(i != 0 && residue[i])).collect();
    let base_second: Vec<u8> = (0..p).map(|i| u8::from(i != 0 && !residue[i])).collect();

    let default = if p % 4 == 3 { (0u8, 1u8) } else { (0u8, 0u8) };
    let mut candidates = vec![default];
    for s0 in [0u8, 1] {
        for t0 in [0u8, 1] {
            if (s0, t0) != default {
                candidates.push((s0, t0));
            }
        }
    }

    let mut tried = Vec::new();
    for (s0, t0) in candidates {
        let mut first = base_first.clone();
        let mut second = base_second.clone();
        first[0] = s0;
        second[0] = t0;
        let first = BinarySequence::new(first).expect("nonempty");
        let second = BinarySequence::new(second).expect("nonempty");
        if pair_check(&first, &second, [0, 0, 1], SpectrumPattern::Ideal)? {
            return Ok(SequencePair {
                first,
                second,
                family_tag: FamilyTag::Legendre,
                params: format!("p={p};s0={s0};t0={t0}"),
            });
        }
        tried.push(format!("s(0)={s0},t(0)={t0}"));
    }
    Err(Error::PairConventionMismatch {
        family: "legendre".into(),
        detail: format!("no index-0 assignment passes the spectrum check; tried {}", tried.join("; ")),
    })
}

/// One twin-prime base-sequence convention: the values at index 0, at
/// nonzero multiples of p, at nonzero multiples of q = p + 2, and the
/// character-product sign that marks the support elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct TwinPrimeConvention {
    v0: u8,
    vp: u8,
    vq: u8,
    eps: i8,
}

impl fmt::Display for TwinPrimeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v0={},vp={},vq={},eps={}",
            self.v0,
            self.vp,
            self.vq,
            if self.eps > 0 { "+1" } else { "-1" }
        )
    }
}

fn quadratic_character(modulus: usize) -> Vec<i8> {
    let mut chi = vec![-1i8; modulus];
    chi[0] = 0;
    for i in 1..modulus {
        chi[i * i % modulus] = 1;
    }
    chi
}

fn twin_prime_base(p: usize, convention: TwinPrimeConvention) -> BinarySequence {
    let q = p + 2;
    let n = p * q;
    let chi_p = quadratic_character(p);
    let chi_q = quadratic_character(q);
    let symbols = (0..n)
        .map(|i| {
            if i == 0 {
                convention.v0
            } else if i % q == 0 {
                convention.vq
            } else if i % p == 0 {
                convention.vp
            } else {
                u8::from(chi_p[i % p] * chi_q[i % q] == convention.eps)
            }
        })
        .collect();
    BinarySequence::new(symbols).expect("n >= 15")
}

/// Twin-prime pair of length p(p+2). The first sequence is the classical
/// twin-prime (Jacobi character) sequence: support on the nonzero multiples
/// of p together with the residues where the characters mod p and mod p+2
/// agree. The companion flips the first at every multiple of p+2, index 0
/// included. If that default fails the spectrum check, the remaining
/// convention variants are searched and the winner recorded.
pub fn twin_prime_pair(p: usize) -> Result<SequencePair> {
    let q = p + 2;
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::NotPrime(if is_prime(p) { q } else { p }));
    }
    let n = p * q;
    let pattern = SpectrumPattern::Modulus(q);

    let default = TwinPrimeConvention { v0: 0, vp: 1, vq: 0, eps: 1 };
    let mut conventions = vec![default];
    for v0 in [0u8, 1] {
        for vp in [0u8, 1] {
            for vq in [0u8, 1] {
                for eps in [1i8, -1] {
                    let c = TwinPrimeConvention { v0, vp, vq, eps };
                    if c != default {
                        conventions.push(c);
                    }
                }
            }
        }
    }

    let mut tried = Vec::new();
    for convention in conventions {
        let first = twin_prime_base(p, convention);
        for (flip_name, flip_modulus) in [("q", q), ("p", p)] {
            let second = BinarySequence::new(
                first
                    .symbols()
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| if i % flip_modulus == 0 { 1 - b } else { b })
                    .collect(),
            )
            .expect("nonempty");
            if pair_check(&first, &second, [0, 0, 1], pattern)? {
                return Ok(SequencePair {
                    first,
                    second,
                    family_tag: FamilyTag::TwinPrime,
                    params: format!("p={p};q={q};{convention};flip={flip_name}"),
                });
            }
            tried.push(format!("{convention},flip={flip_name}"));
        }
    }
    Err(Error::PairUnresolved {
        family: "twin_prime".into(),
        detail: format!("no convention meets the modulus-{q} spectrum over length {n}; tried {}", tried.len()),
    })
}

/// GMW pair of length 2^(2k) - 1: the field's trace m-sequence together with
/// its modification at the subfield positions, i.e. flipped at every index
/// divisible by 2^k + 1 (where the trace vanishes). Verified against the
/// modulus-(2^k + 1) spectrum before returning.
pub fn gmw_pair(k: usize, field: &BinaryFieldSpec) -> Result<SequencePair> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("gmw pair needs k >= 2, got {k}")));
    }
    if field.degree() != 2 * k {
        return Err(Error::InvalidParameter(format!(
            "gmw pair for k = {k} needs a degree-{} field, got degree {}",
            2 * k,
            field.degree()
        )));
    }
    let modulus = (1usize << k) + 1;
    let first = m_sequence(field);
    let second = BinarySequence::new(
        first
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % modulus == 0 { 1 - b } else { b })
            .collect(),
    )
    .expect("nonempty");
    let report = {
        let input = ConstructionInput::new(
            [first.clone(), second.clone(), first.clone(), second.clone()],
            [0, 0, 1],
        )?;
        verify_pattern(&construct(&input), SpectrumPattern::Modulus(modulus))?
    };
    if !report.matched {
        let failing: Vec<String> = report
            .mismatches
            .iter()
            .take(8)
            .map(|m| format!("tau={} value={}", m.tau, m.actual))
            .collect();
        return Err(Error::PairUnresolved {
            family: "gmw".into(),
            detail: format!("modulus-{modulus} spectrum check failed at {}", failing.join(", ")),
        });
    }
    Ok(SequencePair {
        first,
        second,
        family_tag: FamilyTag::Gmw,
        params: format!("k={k};poly={:b}", field.polynomial()),
    })
}

/// Serialize a pair in the three-line fixture format:
/// `n=<len> family=<tag> params=<text>` then one sequence per line.
pub fn pair_to_string(pair: &SequencePair) -> String {
    format!(
        "n={} family={} params={}\n{}\n{}\n",
        pair.len(),
        pair.family_tag,
        pair.params,
        pair.first,
        pair.second
    )
}

/// Parse the fixture format; the recorded family tag is preserved so that
/// load and save round-trip byte-exactly.
pub fn pair_from_str(text: &str) -> Result<SequencePair> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header line".into(),
    })?;

    let rest = header.strip_prefix("n=").ok_or_else(|| Error::Parse {
        line: 1,
        message: "header must start with n=".into(),
    })?;
    let (n_text, rest) = rest.split_once(' ').ok_or_else(|| Error::Parse {
        line: 1,
        message: "header missing family field".into(),
    })?;
    let n: usize = n_text.parse().map_err(|_| Error::Parse {
        line: 1,
        message: format!("invalid length {n_text:?}"),
    })?;
    let rest = rest.strip_prefix("family=").ok_or_else(|| Error::Parse {
        line: 1,
        message: "header missing family= field".into(),
    })?;
    let (family_text, params) = match rest.split_once(' ') {
        Some((fam, tail)) => {
            let params = tail.strip_prefix("params=").ok_or_else(|| Error::Parse {
                line: 1,
                message: "header missing params= field".into(),
            })?;
            (fam, params.to_string())
        }
        None => (rest, String::new()),
    };
    let family_tag: FamilyTag = family_text.parse()?;

    let first_line = lines.next().ok_or_else(|| Error::Parse {
        line: 2,
        message: "missing first sequence".into(),
    })?;
    let first: BinarySequence = first_line.parse().map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line: 2, message },
        other => other,
    })?;
    let second_line = lines.next().ok_or_else(|| Error::Parse {
        line: 3,
        message: "missing second sequence".into(),
    })?;
    let second: BinarySequence = second_line.parse().map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line: 3, message },
        other => other,
    })?;

    if first.len() != second.len() {
        return Err(Error::LengthMismatch { left: first.len(), right: second.len() });
    }
    if first.len() != n {
        return Err(Error::Parse {
            line: 2,
            message: format!("header says n={n} but sequence has length {}", first.len()),
        });
    }
    Ok(SequencePair { first, second, family_tag, params })
}

pub fn save_pair(pair: &SequencePair, path: &Path) -> Result<()> {
    fs::write(path, pair_to_string(pair)).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

pub fn load_pair(path: &Path) -> Result<SequencePair> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    pair_from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_m_sequences() {
        let field = BinaryFieldSpec::with_default_polynomial(2).unwrap();
        assert_eq!(m_sequence(&field).symbols(), &[0, 1, 1]);
        for m in 3..=8 {
            let field = BinaryFieldSpec::with_default_polynomial(m).unwrap();
            let s = m_sequence(&field);
            assert!(is_ideal(&s), "m={m}");
            assert_eq!(s.weight(), 1 << (m - 1), "m={m}");
        }
        for m in 9..=16 {
            let field = BinaryFieldSpec::with_default_polynomial(m).unwrap();
            assert_eq!(m_sequence(&field).weight(), 1 << (m - 1), "m={m}");
        }
    }

    #[test]
    fn ideal_rejects_flat_sequences() {
        assert!(!is_ideal(&BinarySequence::zeros(7).unwrap()));
    }

    #[test]
    fn first_example_sources_are_not_ideal() {
        let pair = crate::fixtures::example1_pair();
        assert!(!is_ideal(&pair.first));
        assert!(!is_ideal(&pair.second));
        assert!(is_ideal(&crate::fixtures::example2_pair().first));
    }

    #[test]
    fn legendre_supports() {
        let pair = legendre_pair(7).unwrap();
        assert_eq!(pair.first.support(), vec![1, 2, 4]);
        // p = 7 = 3 mod 4: the companion carries 1 at index 0.
        assert_eq!(pair.second.support(), vec![0, 3, 5, 6]);
        assert_eq!(pair.params, "p=7;s0=0;t0=1");

        let pair = legendre_pair(5).unwrap();
        assert_eq!(pair.first.support(), vec![1, 4]);
        assert_eq!(pair.second.support(), vec![2, 3]);

        assert!(matches!(legendre_pair(4), Err(Error::NotPrime(4))));
        assert!(legendre_pair(2).is_err());
    }

    #[test]
    fn legendre_components_complementary_off_zero() {
        for p in [5usize, 7, 11, 13] {
            let pair = legendre_pair(p).unwrap();
            for i in 1..p {
                assert_eq!(pair.first.symbols()[i] + pair.second.symbols()[i], 1);
            }
        }
    }

    #[test]
    fn twin_prime_smallest() {
        let pair = twin_prime_pair(3).unwrap();
        assert_eq!(pair.len(), 15);
        assert!(is_ideal(&pair.first));
        assert_eq!(pair.params, "p=3;q=5;v0=0,vp=1,vq=0,eps=+1;flip=q");
        // The companion differs exactly at multiples of 5.
        let diff: Vec<usize> = (0..15)
            .filter(|&i| pair.first.symbols()[i] != pair.second.symbols()[i])
            .collect();
        assert_eq!(diff, vec![0, 5, 10]);
        assert!(matches!(twin_prime_pair(7), Err(Error::NotPrime(9))));
        assert!(matches!(twin_prime_pair(8), Err(Error::NotPrime(8))));
    }

    #[test]
    fn gmw_dimension_checks() {
        let field = BinaryFieldSpec::with_default_polynomial(6).unwrap();
        assert!(gmw_pair(2, &field).is_err());
        assert!(gmw_pair(1, &BinaryFieldSpec::with_default_polynomial(2).unwrap()).is_err());
        let pair = gmw_pair(3, &field).unwrap();
        assert_eq!(pair.len(), 63);
        let diff: Vec<usize> = (0..63)
            .filter(|&i| pair.first.symbols()[i] != pair.second.symbols()[i])
            .collect();
        assert_eq!(diff, vec![0, 9, 18, 27, 36, 45, 54]);
    }

    #[test]
    fn pair_file_round_trip() {
        let pair = legendre_pair(7).unwrap();
        let text = pair_to_string(&pair);
        let loaded = pair_from_str(&text).unwrap();
        assert_eq!(loaded, pair);
        assert_eq!(pair_to_string(&loaded), text);
    }

    #[test]
    fn pair_parse_errors_carry_line_numbers() {
        assert!(matches!(
            pair_from_str("garbage"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            pair_from_str("n=3 family=fixture params=\n0,1,1"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            pair_from_str("n=3 family=fixture params=\n0,1,1\n0,1"),
            Err(Error::LengthMismatch { left: 3, right: 2 })
        ));
        assert!(matches!(
            pair_from_str("n=4 family=fixture params=\n0,1,1\n0,1,0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            pair_from_str("n=3 family=unknown params=\n0,1,1\n0,1,0"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
