//! The Gray bijection between Z_4 and pairs of bits, and the Krone-Sarwate
//! decomposition of a quaternary autocorrelation into the binary correlations
//! of its two component sequences.

use crate::corr::{cross_correlation, GaussianInt};
use crate::error::{Error, Result};
use crate::seq::{BinarySequence, QuaternarySequence, Sequence};

/// Inverse Gray map: (0,0)->0, (0,1)->1, (1,1)->2, (1,0)->3.
const INVERSE_GRAY: [[u8; 2]; 2] = [[0, 1], [3, 2]];

/// Gray map: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0).
const GRAY: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 1), (1, 0)];

/// Fuse two equal-length binary component sequences into a quaternary
/// sequence via the inverse Gray map.
pub fn gray_compose(c: &BinarySequence, d: &BinarySequence) -> Result<QuaternarySequence> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch { left: c.len(), right: d.len() });
    }
    let symbols = c
        .symbols()
        .iter()
        .zip(d.symbols())
        .map(|(&ci, &di)| INVERSE_GRAY[ci as usize][di as usize])
        .collect();
    Ok(QuaternarySequence::new(symbols).expect("valid quaternary symbols"))
}

/// Split a quaternary sequence into its two binary component sequences.
pub fn gray_decompose(u: &QuaternarySequence) -> (BinarySequence, BinarySequence) {
    let mut c = Vec::with_capacity(u.len());
    let mut d = Vec::with_capacity(u.len());
    for &s in u.symbols() {
        let (ci, di) = GRAY[s as usize];
        c.push(ci);
        d.push(di);
    }
    (
        BinarySequence::new(c).expect("nonempty"),
        BinarySequence::new(d).expect("nonempty"),
    )
}

fn halve(value: i64) -> i64 {
    assert!(value % 2 == 0, "Krone-Sarwate halving hit an odd value: {value}");
    value / 2
}

/// Autocorrelation of `gray_compose(c, d)` computed from binary correlations
/// only: `(R_c + R_d)/2 + i (R_{c,d} - R_{d,c})/2`. Both halved quantities
/// are always even; a failed parity assertion indicates an arithmetic bug.
pub fn krone_sarwate_autocorrelation(
    c: &BinarySequence,
    d: &BinarySequence,
    tau: usize,
) -> Result<GaussianInt> {
    let rc = cross_correlation(c, c, tau)?;
    let rd = cross_correlation(d, d, tau)?;
    let rcd = cross_correlation(c, d, tau)?;
    let rdc = cross_correlation(d, c, tau)?;
    Ok(GaussianInt::new(
        halve(rc.re + rd.re),
        halve(rcd.re - rdc.re),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corr::auto_spectrum;

    fn bin(symbols: &[u8]) -> BinarySequence {
        BinarySequence::new(symbols.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        let u = gray_compose(&bin(&[0, 1]), &bin(&[0, 0])).unwrap();
        assert_eq!(u.symbols(), &[0, 3]);
        let c = bin(&[0, 1, 1, 0]);
        let u = gray_compose(&c, &c).unwrap();
        assert_eq!(u.symbols(), &[0, 2, 2, 0]);
        assert!(gray_compose(&bin(&[0]), &bin(&[0, 1])).is_err());
    }

    #[test]
    fn decompose_mapping_table() {
        let u = QuaternarySequence::new(vec![0, 1, 2, 3]).unwrap();
        let (c, d) = gray_decompose(&u);
        assert_eq!(c.symbols(), &[0, 0, 1, 1]);
        assert_eq!(d.symbols(), &[0, 1, 1, 0]);
        assert_eq!(gray_compose(&c, &d).unwrap(), u);
    }

    #[test]
    fn equal_components_reduce_to_binary_correlation() {
        let c = bin(&[0, 1, 1, 0, 1, 0, 0, 1, 1]);
        for tau in 0..9 {
            let expected = cross_correlation(&c, &c, tau).unwrap();
            assert_eq!(krone_sarwate_autocorrelation(&c, &c, tau).unwrap(), expected);
        }
    }

    #[test]
    fn closed_form_equals_direct() {
        let c = bin(&[0, 1, 1, 0, 1, 0, 0, 1, 1]);
        let d = bin(&[1, 1, 0, 0, 0, 1, 0, 1, 0]);
        let u = gray_compose(&c, &d).unwrap();
        let direct = auto_spectrum(&u);
        for tau in 0..9 {
            assert_eq!(
                krone_sarwate_autocorrelation(&c, &d, tau).unwrap(),
                direct.value(tau),
                "tau={tau}"
            );
        }
    }

    #[test]
    fn first_example_components_at_shift_two() {
        let (c, d) = gray_decompose(&crate::fixtures::example1_u());
        assert_eq!(
            krone_sarwate_autocorrelation(&c, &d, 2).unwrap(),
            GaussianInt::real(-2)
        );
    }
}
