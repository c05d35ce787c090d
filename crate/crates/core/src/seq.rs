//! Periodic sequences over Z_2 and Z_4.
//!
//! Sequences are immutable value objects; shifting and complementing return
//! new sequences. The text format is comma-separated symbols with optional
//! surrounding brackets, e.g. `0,1,2,3` or `(0,1,2,3)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

mod sealed {
    pub trait Sealed {}
    impl Sealed for super::BinarySequence {}
    impl Sealed for super::QuaternarySequence {}
}

/// A finite periodic sequence over Z_H with H = 2 or 4.
pub trait Sequence: sealed::Sealed + Clone {
    /// Alphabet modulus H.
    const MODULUS: u8;

    fn symbols(&self) -> &[u8];

    fn len(&self) -> usize {
        self.symbols().len()
    }

    fn is_empty(&self) -> bool {
        false // construction rejects empty sequences
    }

    /// Cyclic left shift: `result(i) = self(i + tau mod n)`. Negative shifts
    /// are reduced mod the length.
    fn shift(&self, tau: i64) -> Self;
}

fn cyclic_shift(symbols: &[u8], tau: i64) -> Vec<u8> {
    let n = symbols.len();
    let t = tau.rem_euclid(n as i64) as usize;
    (0..n).map(|i| symbols[(i + t) % n]).collect()
}

fn validate(symbols: &[u8], modulus: u8) -> Result<()> {
    if symbols.is_empty() {
        return Err(Error::EmptySequence);
    }
    for &s in symbols {
        if s >= modulus {
            return Err(Error::InvalidSymbol { symbol: s, modulus });
        }
    }
    Ok(())
}

fn parse_symbols(text: &str) -> Result<Vec<u8>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix(['(', '['])
        .and_then(|rest| rest.strip_suffix([')', ']']))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Err(Error::EmptySequence);
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim().parse::<u8>().map_err(|_| Error::Parse {
                line: 1,
                message: format!("invalid symbol {tok:?}"),
            })
        })
        .collect()
}

fn fmt_symbols(symbols: &[u8], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, s) in symbols.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

/// A sequence over {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence(Vec<u8>);

impl BinarySequence {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        validate(&symbols, 2)?;
        Ok(Self(symbols))
    }

    /// The all-zero sequence of length `n`.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    /// Characteristic sequence of `support`: `s(i) = 1` iff `i` is in the set.
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        let mut symbols = vec![0u8; n];
        for &i in support {
            if i >= n {
                return Err(Error::SupportOutOfRange { index: i, len: n });
            }
            symbols[i] = 1;
        }
        Self::new(symbols)
    }

    /// Indices where the sequence equals 1, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    /// Flip every symbol.
    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|&b| 1 - b).collect())
    }
}

impl Sequence for BinarySequence {
    const MODULUS: u8 = 2;

    fn symbols(&self) -> &[u8] {
        &self.0
    }

    fn shift(&self, tau: i64) -> Self {
        Self(cyclic_shift(&self.0, tau))
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Self::new(parse_symbols(text)?)
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbols(&self.0, f)
    }
}

/// A sequence over {0, 1, 2, 3}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuaternarySequence(Vec<u8>);

impl QuaternarySequence {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        validate(&symbols, 4)?;
        Ok(Self(symbols))
    }
}

impl Sequence for QuaternarySequence {
    const MODULUS: u8 = 4;

    fn symbols(&self) -> &[u8] {
        &self.0
    }

    fn shift(&self, tau: i64) -> Self {
        Self(cyclic_shift(&self.0, tau))
    }
}

impl FromStr for QuaternarySequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Self::new(parse_symbols(text)?)
    }
}

impl fmt::Display for QuaternarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbols(&self.0, f)
    }
}
