//! The generic quaternary construction: interleave four odd-length binary
//! sequences into two components, fuse them with the inverse Gray map, and
//! predict/verify the resulting autocorrelation.

use std::fmt;
use std::str::FromStr;

use crate::corr::{auto_spectrum, cross_correlation, cross_spectrum, CorrelationSpectrum, GaussianInt};
use crate::cyclotomy::QuarticSystem;
use crate::error::{Error, Result};
use crate::families::{self, SequencePair};
use crate::fields::BinaryFieldSpec;
use crate::gray::gray_compose;
use crate::interleave::{interleave, InterleaveSpec};
use crate::seq::{BinarySequence, QuaternarySequence, Sequence};

/// Input tuple for the construction: four binary sequences of equal odd
/// length n and a complement-selector triple e. The derived column shift is
/// `lambda = (n + 1) / 2`; the output length is `2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionInput {
    sources: [BinarySequence; 4],
    e: [u8; 3],
}

impl ConstructionInput {
    pub fn new(sources: [BinarySequence; 4], e: [u8; 3]) -> Result<Self> {
        let n = sources[0].len();
        if n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        for s in &sources[1..] {
            if s.len() != n {
                return Err(Error::LengthMismatch { left: n, right: s.len() });
            }
        }
        for &bit in &e {
            if bit > 1 {
                return Err(Error::InvalidSymbol { symbol: bit, modulus: 2 });
            }
        }
        Ok(Self { sources, e })
    }

    pub fn source(&self, i: usize) -> &BinarySequence {
        &self.sources[i]
    }

    pub fn e(&self) -> [u8; 3] {
        self.e
    }

    pub fn source_len(&self) -> usize {
        self.sources[0].len()
    }

    pub fn lambda(&self) -> usize {
        (self.source_len() + 1) / 2
    }

    pub fn output_len(&self) -> usize {
        2 * self.source_len()
    }
}

fn maybe_complement(s: &BinarySequence, flip: u8) -> BinarySequence {
    if flip == 1 {
        s.complement()
    } else {
        s.clone()
    }
}

/// The two binary components: `c = I(a0, e0 + L^lambda(a1))` and
/// `d = I(e1 + a2, e2 + L^lambda(a3))`.
pub fn build_components(input: &ConstructionInput) -> (BinarySequence, BinarySequence) {
    let lambda = input.lambda();
    let [e0, e1, e2] = input.e;
    let c = interleave(
        &InterleaveSpec::new(
            input.sources[0].clone(),
            maybe_complement(&input.sources[1], e0),
            0,
            lambda,
        )
        .expect("equal source lengths"),
    );
    let d = interleave(
        &InterleaveSpec::new(
            maybe_complement(&input.sources[2], e1),
            maybe_complement(&input.sources[3], e2),
            0,
            lambda,
        )
        .expect("equal source lengths"),
    );
    (c, d)
}

/// Inverse-Gray fusion of the two components: the length-2n quaternary output.
pub fn construct(input: &ConstructionInput) -> QuaternarySequence {
    let (c, d) = build_components(input);
    gray_compose(&c, &d).expect("components share a length")
}

fn sign(bit: u8) -> i64 {
    if bit & 1 == 1 {
        -1
    } else {
        1
    }
}

fn halve(value: i64) -> i64 {
    assert!(value % 2 == 0, "autocorrelation halving hit an odd value: {value}");
    value / 2
}

struct SourceCorrelations<'a> {
    input: &'a ConstructionInput,
    /// spectra[i][j] = all shifts of R_{a_i, a_j}; filled lazily per use site.
    spectra: Vec<Vec<CorrelationSpectrum>>,
}

impl<'a> SourceCorrelations<'a> {
    fn precomputed(input: &'a ConstructionInput) -> Self {
        let spectra = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        cross_spectrum(&input.sources[i], &input.sources[j])
                            .expect("equal source lengths")
                    })
                    .collect()
            })
            .collect();
        Self { input, spectra }
    }

    fn value(&self, i: usize, j: usize, shift: usize) -> i64 {
        self.spectra[i][j].value(shift).re
    }

    fn theorem_one_value(&self, tau: usize) -> GaussianInt {
        let n = self.input.source_len();
        let [e0, e1, e2] = self.input.e;
        let sigma = sign(e0 + e1 + e2);
        if tau % 2 == 0 {
            let t0 = tau / 2;
            let re = halve(
                self.value(0, 0, t0) + self.value(1, 1, t0) + self.value(2, 2, t0) + self.value(3, 3, t0),
            );
            let im = sign(e1)
                * halve(
                    self.value(0, 2, t0) - self.value(2, 0, t0)
                        + sigma * (self.value(1, 3, t0) - self.value(3, 1, t0)),
                );
            GaussianInt::new(re, im)
        } else {
            let t0 = tau / 2;
            let t2 = (t0 + self.input.lambda()) % n;
            let re = sign(e0)
                * halve(
                    self.value(0, 1, t2) + self.value(1, 0, t2)
                        + sigma * (self.value(2, 3, t2) + self.value(3, 2, t2)),
                );
            let im = sign(e2)
                * halve(
                    self.value(0, 3, t2) - self.value(3, 0, t2)
                        + sigma * (self.value(1, 2, t2) - self.value(2, 1, t2)),
                );
            GaussianInt::new(re, im)
        }
    }
}

/// Theorem-1 closed form for the autocorrelation of `construct(input)` at a
/// single shift, evaluated from source-sequence correlations only.
pub fn predicted_autocorrelation(input: &ConstructionInput, tau: usize) -> Result<GaussianInt> {
    let len = input.output_len();
    if tau >= len {
        return Err(Error::ShiftOutOfRange { tau, len });
    }
    let n = input.source_len();
    let [e0, e1, e2] = input.e;
    let sigma = sign(e0 + e1 + e2);
    let r = |i: usize, j: usize, shift: usize| -> i64 {
        cross_correlation(&input.sources[i], &input.sources[j], shift)
            .expect("validated shift")
            .re
    };
    let value = if tau % 2 == 0 {
        let t0 = tau / 2;
        GaussianInt::new(
            halve(r(0, 0, t0) + r(1, 1, t0) + r(2, 2, t0) + r(3, 3, t0)),
            sign(e1) * halve(r(0, 2, t0) - r(2, 0, t0) + sigma * (r(1, 3, t0) - r(3, 1, t0))),
        )
    } else {
        let t2 = (tau / 2 + input.lambda()) % n;
        GaussianInt::new(
            sign(e0) * halve(r(0, 1, t2) + r(1, 0, t2) + sigma * (r(2, 3, t2) + r(3, 2, t2))),
            sign(e2) * halve(r(0, 3, t2) - r(3, 0, t2) + sigma * (r(1, 2, t2) - r(2, 1, t2))),
        )
    };
    Ok(value)
}

/// Theorem-1 closed form at every shift, with the source correlations
/// computed once.
pub fn predicted_auto_spectrum(input: &ConstructionInput) -> CorrelationSpectrum {
    let corr = SourceCorrelations::precomputed(input);
    CorrelationSpectrum::from_values(
        (0..input.output_len())
            .map(|tau| corr.theorem_one_value(tau))
            .collect(),
    )
}

/// Outcome of the optimality test on the four correlation conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corollary1Report {
    /// Index (1-4) of the first failing condition and its witness shift.
    pub failure: Option<(u8, usize)>,
}

impl Corollary1Report {
    pub fn satisfied(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check the four sufficient conditions for `R_max(u) = 2`.
///
/// The fourth condition is evaluated as `R_{a0,a3} - R_{a3,a0} +
/// (-1)^(e0+e1+e2) (R_{a1,a2} - R_{a2,a1}) = 0`: the difference form that the
/// odd-shift imaginary part of the autocorrelation actually takes.
pub fn corollary1_check(input: &ConstructionInput) -> Corollary1Report {
    let corr = SourceCorrelations::precomputed(input);
    let n = input.source_len();
    let [e0, e1, e2] = input.e;
    let sigma = sign(e0 + e1 + e2);
    let r = |i: usize, j: usize, shift: usize| corr.value(i, j, shift);

    for t0 in 1..n {
        let sum = r(0, 0, t0) + r(1, 1, t0) + r(2, 2, t0) + r(3, 3, t0);
        if !matches!(sum, 0 | 4 | -4) {
            return Corollary1Report { failure: Some((1, t0)) };
        }
    }
    for t0 in 1..n {
        if r(0, 2, t0) - r(2, 0, t0) + sigma * (r(1, 3, t0) - r(3, 1, t0)) != 0 {
            return Corollary1Report { failure: Some((2, t0)) };
        }
    }
    for t0 in 0..n {
        let sum = r(0, 1, t0) + r(1, 0, t0) + sigma * (r(2, 3, t0) + r(3, 2, t0));
        if !matches!(sum, 0 | 4 | -4) {
            return Corollary1Report { failure: Some((3, t0)) };
        }
    }
    for t0 in 0..n {
        if r(0, 3, t0) - r(3, 0, t0) + sigma * (r(1, 2, t0) - r(2, 1, t0)) != 0 {
            return Corollary1Report { failure: Some((4, t0)) };
        }
    }
    Corollary1Report { failure: None }
}

/// Expected off-phase autocorrelation shape of a constructed sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumPattern {
    /// -2 at even shifts, 0 at odd shifts.
    Ideal,
    /// 0 at odd shifts; at even shifts `2 tau0`: -2 when `tau0 % modulus == 0`,
    /// +2 otherwise.
    Modulus(usize),
    /// Exactly +2 or -2 (real) at every off-phase shift.
    PlusMinusTwo,
    /// -2 at even shifts; +-2i at odd shifts except the single shift N/2,
    /// which is 0. Arises from mixed source tuples whose odd-shift real part
    /// cancels; the sequence is still optimal since every magnitude is <= 2.
    OddShiftImaginary,
}

impl fmt::Display for SpectrumPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ideal => write!(f, "ideal"),
            Self::Modulus(m) => write!(f, "modulus({m})"),
            Self::PlusMinusTwo => write!(f, "pm2"),
            Self::OddShiftImaginary => write!(f, "odd-imaginary"),
        }
    }
}

impl SpectrumPattern {
    /// Admissible values at off-phase shift `tau` of a length-`len` sequence.
    pub fn expected(&self, tau: usize, len: usize) -> Vec<GaussianInt> {
        match self {
            Self::Ideal => {
                if tau % 2 == 0 {
                    vec![GaussianInt::real(-2)]
                } else {
                    vec![GaussianInt::ZERO]
                }
            }
            Self::Modulus(m) => {
                if tau % 2 == 1 {
                    vec![GaussianInt::ZERO]
                } else if (tau / 2) % m == 0 {
                    vec![GaussianInt::real(-2)]
                } else {
                    vec![GaussianInt::real(2)]
                }
            }
            Self::PlusMinusTwo => vec![GaussianInt::real(2), GaussianInt::real(-2)],
            Self::OddShiftImaginary => {
                if tau % 2 == 0 {
                    vec![GaussianInt::real(-2)]
                } else if tau == len / 2 {
                    vec![GaussianInt::ZERO]
                } else {
                    vec![GaussianInt::new(0, 2), GaussianInt::new(0, -2)]
                }
            }
        }
    }
}

/// One disagreement between a measured spectrum and a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMismatch {
    pub tau: usize,
    pub actual: GaussianInt,
    pub expected: Vec<GaussianInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternReport {
    pub matched: bool,
    pub mismatches: Vec<PatternMismatch>,
}

/// Compare the measured autocorrelation of `u` against `pattern` at every
/// out-of-phase shift.
pub fn verify_pattern(u: &QuaternarySequence, pattern: SpectrumPattern) -> Result<PatternReport> {
    if u.len() % 2 != 0 {
        return Err(Error::OddLength(u.len()));
    }
    let spectrum = auto_spectrum(u);
    let mut mismatches = Vec::new();
    for tau in 1..u.len() {
        let actual = spectrum.value(tau);
        let expected = pattern.expected(tau, u.len());
        if !expected.contains(&actual) {
            mismatches.push(PatternMismatch { tau, actual, expected });
        }
    }
    Ok(PatternReport { matched: mismatches.is_empty(), mismatches })
}

/// Identifiers for the cataloged construction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        Self::T2,
        Self::T3,
        Self::T4,
        Self::T5,
        Self::T6,
        Self::T7,
        Self::T8,
        Self::T9,
        Self::T10,
    ];

    /// Constraint the theorem places on the complement triple.
    pub fn e_requirement(&self) -> ERequirement {
        match self {
            Self::T2 | Self::T3 | Self::T4 => ERequirement::Exact([0, 0, 1]),
            Self::T5 | Self::T6 | Self::T9 => ERequirement::Parity(1),
            Self::T7 | Self::T8 | Self::T10 => ERequirement::Parity(0),
        }
    }

    pub fn canonical_e(&self) -> [u8; 3] {
        match self.e_requirement() {
            ERequirement::Exact(e) => e,
            ERequirement::Parity(0) => [0, 0, 0],
            ERequirement::Parity(_) => [0, 0, 1],
        }
    }

    /// The canonical triple, or every admissible triple when `sweep` is set.
    pub fn e_candidates(&self, sweep: bool) -> Vec<[u8; 3]> {
        match self.e_requirement() {
            ERequirement::Exact(e) => vec![e],
            ERequirement::Parity(p) => {
                if sweep {
                    let mut all = Vec::new();
                    for bits in 0u8..8 {
                        let e = [bits >> 2 & 1, bits >> 1 & 1, bits & 1];
                        if (e[0] + e[1] + e[2]) % 2 == p {
                            all.push(e);
                        }
                    }
                    all
                } else {
                    vec![self.canonical_e()]
                }
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            Self::T2 => 2,
            Self::T3 => 3,
            Self::T4 => 4,
            Self::T5 => 5,
            Self::T6 => 6,
            Self::T7 => 7,
            Self::T8 => 8,
            Self::T9 => 9,
            Self::T10 => 10,
        };
        write!(f, "T{n}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let digits = text.trim().trim_start_matches(['T', 't']);
        match digits {
            "2" => Ok(Self::T2),
            "3" => Ok(Self::T3),
            "4" => Ok(Self::T4),
            "5" => Ok(Self::T5),
            "6" => Ok(Self::T6),
            "7" => Ok(Self::T7),
            "8" => Ok(Self::T8),
            "9" => Ok(Self::T9),
            "10" => Ok(Self::T10),
            _ => Err(Error::InvalidParameter(format!("unknown theorem {text:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ERequirement {
    Exact([u8; 3]),
    Parity(u8),
}

/// Family-specific inputs for `catalog`.
#[derive(Debug, Clone)]
pub enum TheoremParams {
    /// One ideal sequence; used four times.
    Ideal(BinarySequence),
    /// Two ideal sequences of a common length.
    IdealPair(BinarySequence, BinarySequence),
    /// Legendre pair of odd prime length p.
    Legendre { p: usize },
    /// Twin-prime pair of length p(p+2).
    TwinPrime { p: usize },
    /// GMW pair of length 2^(2k) - 1 over the given field of degree 2k.
    Gmw { k: usize, field: BinaryFieldSpec },
    /// Quartic cyclotomic system meeting the theorem's (x, y) convention.
    Quartic(QuarticSystem),
}

/// One admissible input, labeled by the printed source tuple.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: String,
    pub input: ConstructionInput,
}

/// All admissible inputs of a theorem for one parameter set and one e.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub theorem: TheoremId,
    pub pattern: SpectrumPattern,
    pub entries: Vec<CatalogEntry>,
}

const PAIR_TUPLES: [[usize; 4]; 4] = [[0, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 0], [1, 0, 0, 1]];

const T7_TUPLES: [[usize; 4]; 8] = [
    [2, 1, 2, 1],
    [1, 2, 1, 2],
    [6, 2, 6, 2],
    [2, 6, 2, 6],
    [5, 4, 5, 4],
    [4, 5, 4, 5],
    [3, 5, 3, 5],
    [5, 3, 5, 3],
];

const T8_TUPLES: [[usize; 4]; 8] = [
    [1, 2, 2, 1],
    [2, 1, 1, 2],
    [2, 6, 6, 2],
    [6, 2, 2, 6],
    [4, 5, 5, 4],
    [5, 4, 4, 5],
    [5, 3, 3, 5],
    [3, 5, 5, 3],
];

const T9_TUPLES: [[usize; 4]; 8] = [
    [2, 1, 6, 2],
    [2, 6, 1, 2],
    [5, 3, 4, 5],
    [5, 4, 3, 5],
    [6, 2, 2, 1],
    [1, 2, 2, 6],
    [3, 5, 5, 4],
    [4, 5, 5, 3],
];

const T10_TUPLES: [[usize; 4]; 16] = [
    [6, 3, 4, 1],
    [6, 4, 3, 1],
    [4, 6, 3, 1],
    [3, 6, 4, 1],
    [4, 1, 6, 3],
    [6, 4, 1, 3],
    [1, 4, 6, 3],
    [4, 6, 1, 3],
    [3, 1, 6, 4],
    [6, 3, 1, 4],
    [1, 3, 6, 4],
    [3, 6, 1, 4],
    [4, 1, 3, 6],
    [3, 1, 4, 6],
    [1, 3, 4, 6],
    [1, 4, 3, 6],
];

fn check_e(id: TheoremId, e: [u8; 3]) -> Result<()> {
    match id.e_requirement() {
        ERequirement::Exact(want) if e != want => Err(Error::Hypothesis(format!(
            "{id} requires e = ({},{},{})",
            want[0], want[1], want[2]
        ))),
        ERequirement::Parity(p) if (e[0] + e[1] + e[2]) % 2 != p => Err(Error::Hypothesis(
            format!("{id} requires e(0)+e(1)+e(2) = {p} mod 2"),
        )),
        _ => Ok(()),
    }
}

fn pair_entries(pair: &SequencePair, e: [u8; 3]) -> Result<Vec<CatalogEntry>> {
    let seqs = [&pair.first, &pair.second];
    PAIR_TUPLES
        .iter()
        .map(|tuple| {
            let label = format!(
                "({},{},{},{})",
                ["s", "t"][tuple[0]],
                ["s", "t"][tuple[1]],
                ["s", "t"][tuple[2]],
                ["s", "t"][tuple[3]]
            );
            let input = ConstructionInput::new(
                [
                    seqs[tuple[0]].clone(),
                    seqs[tuple[1]].clone(),
                    seqs[tuple[2]].clone(),
                    seqs[tuple[3]].clone(),
                ],
                e,
            )?;
            Ok(CatalogEntry { label, input })
        })
        .collect()
}

fn quartic_entries(
    system: &QuarticSystem,
    tuples: &[[usize; 4]],
    e: [u8; 3],
) -> Result<Vec<CatalogEntry>> {
    let six = crate::cyclotomy::six_sequences(system);
    tuples
        .iter()
        .map(|tuple| {
            let label = format!("(s{},s{},s{},s{})", tuple[0], tuple[1], tuple[2], tuple[3]);
            let input = ConstructionInput::new(
                [
                    six.get(tuple[0]).clone(),
                    six.get(tuple[1]).clone(),
                    six.get(tuple[2]).clone(),
                    six.get(tuple[3]).clone(),
                ],
                e,
            )?;
            Ok(CatalogEntry { label, input })
        })
        .collect()
}

/// Enumerate every admissible input tuple the theorem prints, paired with its
/// predicted spectrum pattern. Hypotheses (idealness, primality, f parity,
/// the (x, y) convention, the e constraint) are validated here.
pub fn catalog(id: TheoremId, params: &TheoremParams, e: [u8; 3]) -> Result<Catalog> {
    check_e(id, e)?;
    let (pattern, entries) = match (id, params) {
        (TheoremId::T2, TheoremParams::Ideal(a)) => {
            if !families::is_ideal(a) {
                return Err(Error::Hypothesis("T2 requires an ideal sequence".into()));
            }
            let input = ConstructionInput::new([a.clone(), a.clone(), a.clone(), a.clone()], e)?;
            (
                SpectrumPattern::Ideal,
                vec![CatalogEntry { label: "(a,a,a,a)".into(), input }],
            )
        }
        (TheoremId::T3, TheoremParams::IdealPair(a, b)) => {
            if a.len() != b.len() {
                return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
            }
            if !families::is_ideal(a) || !families::is_ideal(b) {
                return Err(Error::Hypothesis("T3 requires two ideal sequences".into()));
            }
            let input = ConstructionInput::new([a.clone(), a.clone(), b.clone(), b.clone()], e)?;
            (
                SpectrumPattern::Ideal,
                vec![CatalogEntry { label: "(a,a,b,b)".into(), input }],
            )
        }
        (TheoremId::T4, TheoremParams::Legendre { p }) => {
            let pair = families::legendre_pair(*p)?;
            (SpectrumPattern::Ideal, pair_entries(&pair, e)?)
        }
        (TheoremId::T5, TheoremParams::TwinPrime { p }) => {
            let pair = families::twin_prime_pair(*p)?;
            (SpectrumPattern::Modulus(p + 2), pair_entries(&pair, e)?)
        }
        (TheoremId::T6, TheoremParams::Gmw { k, field }) => {
            let pair = families::gmw_pair(*k, field)?;
            (SpectrumPattern::Modulus((1 << k) + 1), pair_entries(&pair, e)?)
        }
        (TheoremId::T7 | TheoremId::T8 | TheoremId::T9, TheoremParams::Quartic(system)) => {
            if system.f() % 2 == 0 {
                return Err(Error::Hypothesis(format!("{id} requires f odd, got f = {}", system.f())));
            }
            if system.y() != -1 {
                return Err(Error::Hypothesis(format!("{id} requires y = -1, got y = {}", system.y())));
            }
            let tuples: &[[usize; 4]] = match id {
                TheoremId::T7 => &T7_TUPLES,
                TheoremId::T8 => &T8_TUPLES,
                _ => &T9_TUPLES,
            };
            // The mixed T9 tuples provably yield imaginary odd-shift values
            // with a single zero at shift n; the sequence is still optimal.
            let pattern = if id == TheoremId::T9 {
                SpectrumPattern::OddShiftImaginary
            } else {
                SpectrumPattern::PlusMinusTwo
            };
            (pattern, quartic_entries(system, tuples, e)?)
        }
        (TheoremId::T10, TheoremParams::Quartic(system)) => {
            if system.f() % 2 == 1 {
                return Err(Error::Hypothesis(format!("T10 requires f even, got f = {}", system.f())));
            }
            if system.x().abs() != 1 {
                return Err(Error::Hypothesis(format!("T10 requires x = +-1, got x = {}", system.x())));
            }
            (SpectrumPattern::PlusMinusTwo, quartic_entries(system, &T10_TUPLES, e)?)
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "parameters do not match theorem {id}"
            )))
        }
    };
    Ok(Catalog { theorem: id, pattern, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corr::is_optimal_even_length;

    fn bin(symbols: &[u8]) -> BinarySequence {
        BinarySequence::new(symbols.to_vec()).unwrap()
    }

    #[test]
    fn all_zero_components() {
        let z = BinarySequence::zeros(3).unwrap();
        let input = ConstructionInput::new([z.clone(), z.clone(), z.clone(), z], [0, 0, 0]).unwrap();
        let (c, d) = build_components(&input);
        assert_eq!(c.symbols(), &[0; 6]);
        assert_eq!(d.symbols(), &[0; 6]);
        assert_eq!(construct(&input).symbols(), &[0; 6]);
    }

    #[test]
    fn input_validation() {
        let z4 = BinarySequence::zeros(4).unwrap();
        assert!(matches!(
            ConstructionInput::new([z4.clone(), z4.clone(), z4.clone(), z4], [0, 0, 0]),
            Err(Error::EvenLength(4))
        ));
        let z3 = BinarySequence::zeros(3).unwrap();
        let z5 = BinarySequence::zeros(5).unwrap();
        assert!(matches!(
            ConstructionInput::new([z3.clone(), z5, z3.clone(), z3.clone()], [0, 0, 0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(ConstructionInput::new([z3.clone(), z3.clone(), z3.clone(), z3], [0, 2, 0]).is_err());
    }

    #[test]
    fn zero_shift_prediction_is_2n() {
        let a = bin(&[0, 1, 1, 0, 1]);
        let b = bin(&[1, 0, 1, 1, 0]);
        let input = ConstructionInput::new([a.clone(), b.clone(), b, a], [1, 0, 1]).unwrap();
        assert_eq!(
            predicted_autocorrelation(&input, 0).unwrap(),
            GaussianInt::real(10)
        );
    }

    #[test]
    fn prediction_matches_measurement_small() {
        let a = bin(&[0, 1, 1, 0, 1, 0, 0]);
        let b = bin(&[1, 1, 0, 1, 0, 0, 1]);
        let c = bin(&[0, 0, 1, 1, 0, 1, 1]);
        let d = bin(&[1, 0, 1, 0, 0, 1, 0]);
        for bits in 0u8..8 {
            let e = [bits >> 2 & 1, bits >> 1 & 1, bits & 1];
            let input = ConstructionInput::new([a.clone(), b.clone(), c.clone(), d.clone()], e).unwrap();
            let measured = auto_spectrum(&construct(&input));
            let predicted = predicted_auto_spectrum(&input);
            assert_eq!(predicted, measured, "e={e:?}");
            for tau in 0..input.output_len() {
                assert_eq!(
                    predicted_autocorrelation(&input, tau).unwrap(),
                    measured.value(tau)
                );
            }
        }
    }

    #[test]
    fn all_zero_fails_corollary_with_witness() {
        let z = BinarySequence::zeros(3).unwrap();
        let input = ConstructionInput::new([z.clone(), z.clone(), z.clone(), z], [0, 1, 0]).unwrap();
        let report = corollary1_check(&input);
        assert_eq!(report.failure, Some((1, 1)));
        assert!(!report.satisfied());
    }

    #[test]
    fn corollary_sound_on_random_ideal_pairs() {
        // T3-shaped inputs built from shifts of one ideal sequence pass the
        // check and are optimal.
        let field = BinaryFieldSpec::with_default_polynomial(4).unwrap();
        let a = families::m_sequence(&field);
        for shift in 0..5i64 {
            let b = a.shift(shift);
            let input = ConstructionInput::new([a.clone(), a.clone(), b.clone(), b], [0, 0, 1]).unwrap();
            assert!(corollary1_check(&input).satisfied());
            let report = is_optimal_even_length(&construct(&input)).unwrap();
            assert!(report.optimal);
        }
    }

    fn example1_input() -> ConstructionInput {
        let pair = crate::fixtures::example1_pair();
        ConstructionInput::new(
            [pair.first.clone(), pair.second.clone(), pair.first, pair.second],
            [0, 0, 1],
        )
        .unwrap()
    }

    #[test]
    fn example1_prediction_at_shift_two() {
        // R_{a0}(1) = -3 and R_{a1}(1) = 1, so the even branch gives
        // (-3 + 1 - 3 + 1)/2 = -2.
        let input = example1_input();
        assert_eq!(
            predicted_autocorrelation(&input, 2).unwrap(),
            GaussianInt::real(-2)
        );
    }

    #[test]
    fn example_inputs_pass_the_optimality_conditions() {
        assert!(corollary1_check(&example1_input()).satisfied());

        let system = crate::cyclotomy::build_system(17, 3).unwrap();
        let six = crate::cyclotomy::six_sequences(&system);
        let input = ConstructionInput::new(
            [six.get(6).clone(), six.get(3).clone(), six.get(4).clone(), six.get(1).clone()],
            [0, 0, 0],
        )
        .unwrap();
        assert!(corollary1_check(&input).satisfied());
    }

    #[test]
    fn example1_components_deinterleave_to_the_sources() {
        // With e = (0,0,1), c = I(a0, L^lambda(a1)): splitting it recovers
        // a0 and the lambda-shifted a1.
        use crate::interleave::deinterleave;
        let input = example1_input();
        let (c, d) = build_components(&input);
        let (col0, col1) = deinterleave(&c).unwrap();
        assert_eq!(&col0, input.source(0));
        assert_eq!(col1, input.source(1).shift(input.lambda() as i64));
        let (col0, col1) = deinterleave(&d).unwrap();
        assert_eq!(&col0, input.source(2));
        assert_eq!(
            col1,
            input.source(3).shift(input.lambda() as i64).complement()
        );
    }

    #[test]
    fn example2_pattern_verdicts() {
        let u = crate::fixtures::example2_u();
        assert!(verify_pattern(&u, SpectrumPattern::Modulus(9)).unwrap().matched);
        // Against the ideal pattern it fails exactly at the even shifts
        // whose value is +2.
        let report = verify_pattern(&u, SpectrumPattern::Ideal).unwrap();
        assert!(!report.matched);
        assert!(!report.mismatches.is_empty());
        for m in &report.mismatches {
            assert_eq!(m.tau % 2, 0);
            assert_eq!(m.actual, GaussianInt::real(2));
        }
    }

    #[test]
    fn example3_matches_pm2() {
        let u = crate::fixtures::example3_u();
        assert!(verify_pattern(&u, SpectrumPattern::PlusMinusTwo).unwrap().matched);
        assert!(matches!(
            verify_pattern(&QuaternarySequence::new(vec![0, 1, 2]).unwrap(), SpectrumPattern::Ideal),
            Err(Error::OddLength(3))
        ));
    }

    #[test]
    fn catalog_shapes() {
        // T10 over n = 17: sixteen tuples, the first being (s6,s3,s4,s1).
        let system = crate::cyclotomy::build_system(17, 3).unwrap();
        let cat = catalog(TheoremId::T10, &TheoremParams::Quartic(system), [0, 0, 0]).unwrap();
        assert_eq!(cat.entries.len(), 16);
        assert_eq!(cat.entries[0].label, "(s6,s3,s4,s1)");
        assert_eq!(cat.pattern, SpectrumPattern::PlusMinusTwo);

        // T7 over n = 13: eight self-paired tuples (a0 = a2, a1 = a3).
        let system = crate::cyclotomy::build_system(13, 2).unwrap();
        assert_eq!(system.y(), -1);
        let cat = catalog(TheoremId::T7, &TheoremParams::Quartic(system.clone()), [0, 0, 0]).unwrap();
        assert_eq!(cat.entries.len(), 8);
        assert_eq!(cat.entries[0].label, "(s2,s1,s2,s1)");
        for entry in &cat.entries {
            assert_eq!(entry.input.source(0), entry.input.source(2));
            assert_eq!(entry.input.source(1), entry.input.source(3));
        }

        // T5 over p = 3: four length-15 pairs with modulus p + 2.
        let cat = catalog(TheoremId::T5, &TheoremParams::TwinPrime { p: 3 }, [1, 0, 0]).unwrap();
        assert_eq!(cat.entries.len(), 4);
        assert_eq!(cat.pattern, SpectrumPattern::Modulus(5));
        assert_eq!(cat.entries[0].input.source_len(), 15);

        // Hypothesis gates.
        assert!(matches!(
            catalog(TheoremId::T7, &TheoremParams::Quartic(crate::cyclotomy::build_system(17, 3).unwrap()), [0, 0, 0]),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            catalog(TheoremId::T7, &TheoremParams::Quartic(system), [0, 0, 1]),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            catalog(TheoremId::T2, &TheoremParams::Ideal(BinarySequence::zeros(7).unwrap()), [0, 0, 1]),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            catalog(TheoremId::T4, &TheoremParams::TwinPrime { p: 3 }, [0, 0, 1]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn pattern_expectations() {
        assert_eq!(
            SpectrumPattern::Ideal.expected(2, 10),
            vec![GaussianInt::real(-2)]
        );
        assert_eq!(
            SpectrumPattern::Modulus(5).expected(10, 30),
            vec![GaussianInt::real(-2)]
        );
        assert_eq!(
            SpectrumPattern::Modulus(5).expected(12, 30),
            vec![GaussianInt::real(2)]
        );
        assert_eq!(
            SpectrumPattern::OddShiftImaginary.expected(15, 30),
            vec![GaussianInt::ZERO]
        );
    }

    #[test]
    fn theorem_id_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.to_string().parse::<TheoremId>().unwrap(), id);
        }
        assert!("T11".parse::<TheoremId>().is_err());
    }

    #[test]
    fn e_candidates_by_parity() {
        assert_eq!(TheoremId::T4.e_candidates(true), vec![[0, 0, 1]]);
        let sweep = TheoremId::T5.e_candidates(true);
        assert_eq!(sweep.len(), 4);
        assert!(sweep.iter().all(|e| (e[0] + e[1] + e[2]) % 2 == 1));
        assert_eq!(TheoremId::T7.e_candidates(false), vec![[0, 0, 0]]);
    }
}
