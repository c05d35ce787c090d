//! Construction and exact analysis of binary and quaternary sequences with
//! low periodic autocorrelation.
//!
//! The crate builds optimal quaternary sequences of even length 2n by
//! interleaving four odd-length binary sequences into two components and
//! fusing the components with the inverse Gray map. Component families
//! (m-sequences, Legendre pairs, twin-prime pairs, GMW pairs, and the six
//! quartic-cyclotomy sequences) live in [`families`] and [`cyclotomy`];
//! the construction itself, its closed-form autocorrelation, and the
//! per-theorem input catalogs live in [`construction`].
//!
//! All correlation arithmetic is exact over the Gaussian integers: no
//! floating point anywhere.

pub mod construction;
pub mod corr;
pub mod cyclotomy;
pub mod error;
pub mod families;
pub mod fields;
pub mod fixtures;
pub mod gray;
pub mod interleave;
mod primes;
pub mod seq;

pub use corr::{
    auto_spectrum, cross_correlation, cross_spectrum, is_optimal_even_length, r_max_squared,
    CorrelationSpectrum, GaussianInt, OptimalityReport,
};
pub use error::{Error, Result};
pub use seq::{BinarySequence, QuaternarySequence, Sequence};
