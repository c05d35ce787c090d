//! Two-column interleaving of length-n sequences into length-2n sequences,
//! and the closed form for correlations of interleaved sequences.

use crate::corr::{cross_correlation, GaussianInt};
use crate::error::{Error, Result};
use crate::seq::{BinarySequence, Sequence};

/// Column sequences plus per-column starting shifts: the interleaved sequence
/// reads row by row from the n x 2 matrix whose column j is the cyclic shift
/// of `column_j` by `g_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleaveSpec {
    column0: BinarySequence,
    column1: BinarySequence,
    g0: usize,
    g1: usize,
}

impl InterleaveSpec {
    pub fn new(column0: BinarySequence, column1: BinarySequence, g0: usize, g1: usize) -> Result<Self> {
        let n = column0.len();
        if column1.len() != n {
            return Err(Error::LengthMismatch { left: n, right: column1.len() });
        }
        Ok(Self {
            column0,
            column1,
            g0: g0 % n,
            g1: g1 % n,
        })
    }

    pub fn column_len(&self) -> usize {
        self.column0.len()
    }
}

/// `u(2i + j) = column_j(g_j + i mod n)`; the result has length 2n.
pub fn interleave(spec: &InterleaveSpec) -> BinarySequence {
    let n = spec.column_len();
    let c0 = spec.column0.symbols();
    let c1 = spec.column1.symbols();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        out.push(c0[(spec.g0 + i) % n]);
        out.push(c1[(spec.g1 + i) % n]);
    }
    BinarySequence::new(out).expect("columns are valid binary sequences")
}

/// Split an even-length sequence back into its two columns
/// (`column_j(i) = u(2i + j)`), undoing `interleave` with zero shifts.
pub fn deinterleave(u: &BinarySequence) -> Result<(BinarySequence, BinarySequence)> {
    if u.len() % 2 != 0 {
        return Err(Error::OddLength(u.len()));
    }
    let symbols = u.symbols();
    let column0 = symbols.iter().step_by(2).copied().collect();
    let column1 = symbols.iter().skip(1).step_by(2).copied().collect();
    Ok((
        BinarySequence::new(column0).expect("nonempty"),
        BinarySequence::new(column1).expect("nonempty"),
    ))
}

/// Closed form for the cross-correlation of two interleaved sequences at
/// shift `tau = 2 tau1 + tau2`: the sum of two column cross-correlations,
/// with inner shifts reduced mod n. Equals the direct correlation of the
/// interleaved sequences.
pub fn shifted_interleave_correlation(
    u: &InterleaveSpec,
    v: &InterleaveSpec,
    tau: usize,
) -> Result<GaussianInt> {
    let n = u.column_len();
    if v.column_len() != n {
        return Err(Error::LengthMismatch { left: n, right: v.column_len() });
    }
    if tau >= 2 * n {
        return Err(Error::ShiftOutOfRange { tau, len: 2 * n });
    }
    let tau1 = (tau / 2) as i64;
    let (g0, g1) = (u.g0 as i64, u.g1 as i64);
    let (f0, f1) = (v.g0 as i64, v.g1 as i64);
    let reduce = |shift: i64| shift.rem_euclid(n as i64) as usize;
    let value = if tau % 2 == 0 {
        cross_correlation(&u.column0, &v.column0, reduce(tau1 + f0 - g0))?
            + cross_correlation(&u.column1, &v.column1, reduce(tau1 + f1 - g1))?
    } else {
        cross_correlation(&u.column0, &v.column1, reduce(tau1 + f1 - g0))?
            + cross_correlation(&u.column1, &v.column0, reduce(tau1 + 1 + f0 - g1))?
    };
    Ok(value)
}
