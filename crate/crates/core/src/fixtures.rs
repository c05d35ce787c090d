//! Embedded regression fixtures: the three worked examples' source pairs,
//! quaternary outputs, and autocorrelation spectra, transcribed once and
//! pinned by checksum tests.
//!
//! The second example's printed spectrum contains transcription-level typos
//! in the original listing; the file ships verbatim so the reproduction
//! command can report exactly where it disagrees with the computed spectrum.

use crate::corr::CorrelationSpectrum;
use crate::families::{pair_from_str, SequencePair};
use crate::seq::QuaternarySequence;

pub const EXAMPLE1_PAIR: &str = include_str!("../fixtures/example1_pair.txt");
pub const EXAMPLE1_U: &str = include_str!("../fixtures/example1_u.txt");
pub const EXAMPLE1_SPECTRUM: &str = include_str!("../fixtures/example1_spectrum.csv");
pub const EXAMPLE2_PAIR: &str = include_str!("../fixtures/example2_pair.txt");
pub const EXAMPLE2_U: &str = include_str!("../fixtures/example2_u.txt");
pub const EXAMPLE2_SPECTRUM_PRINTED: &str = include_str!("../fixtures/example2_spectrum_printed.csv");
pub const EXAMPLE3_U: &str = include_str!("../fixtures/example3_u.txt");
pub const EXAMPLE3_SPECTRUM: &str = include_str!("../fixtures/example3_spectrum.csv");

/// File names as shipped, for directory-override lookups.
pub const FILE_NAMES: [(&str, &str); 8] = [
    ("example1_pair.txt", EXAMPLE1_PAIR),
    ("example1_u.txt", EXAMPLE1_U),
    ("example1_spectrum.csv", EXAMPLE1_SPECTRUM),
    ("example2_pair.txt", EXAMPLE2_PAIR),
    ("example2_u.txt", EXAMPLE2_U),
    ("example2_spectrum_printed.csv", EXAMPLE2_SPECTRUM_PRINTED),
    ("example3_u.txt", EXAMPLE3_U),
    ("example3_spectrum.csv", EXAMPLE3_SPECTRUM),
];

pub fn example1_pair() -> SequencePair {
    pair_from_str(EXAMPLE1_PAIR).expect("embedded fixture parses")
}

pub fn example1_u() -> QuaternarySequence {
    EXAMPLE1_U.trim().parse().expect("embedded fixture parses")
}

pub fn example1_spectrum() -> CorrelationSpectrum {
    CorrelationSpectrum::from_csv(EXAMPLE1_SPECTRUM).expect("embedded fixture parses")
}

pub fn example2_pair() -> SequencePair {
    pair_from_str(EXAMPLE2_PAIR).expect("embedded fixture parses")
}

pub fn example2_u() -> QuaternarySequence {
    EXAMPLE2_U.trim().parse().expect("embedded fixture parses")
}

/// The printed spectrum rows of the second example, starting at tau = 1,
/// exactly as listed (including its irregular entries).
pub fn example2_printed_spectrum_rows() -> Vec<(usize, i64)> {
    EXAMPLE2_SPECTRUM_PRINTED
        .lines()
        .skip(1)
        .map(|line| {
            let mut fields = line.split(',');
            let tau = fields.next().unwrap().parse().unwrap();
            let re = fields.next().unwrap().parse().unwrap();
            (tau, re)
        })
        .collect()
}

pub fn example3_u() -> QuaternarySequence {
    EXAMPLE3_U.trim().parse().expect("embedded fixture parses")
}

pub fn example3_spectrum() -> CorrelationSpectrum {
    CorrelationSpectrum::from_csv(EXAMPLE3_SPECTRUM).expect("embedded fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corr::auto_spectrum;
    use crate::seq::Sequence;
    use sha2::{Digest, Sha256};

    fn sha256(text: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(text.as_bytes());
        format!("{:x}", hasher.finalize())
    }

    /// Transcription anchors: any edit to a fixture file fails here.
    #[test]
    fn fixture_checksums() {
        let expected = [
            ("example1_pair.txt", "5be9dfeb8b355df92502c9b1a59b063738653b605783bb0bbc89533dc65cff93"),
            ("example1_u.txt", "305e28fa7f5dc3089a63a8decb37aba75f74f3ce8ca7bcf38705f3aa0ca99d33"),
            ("example1_spectrum.csv", "dc8fe32f13da00593aad03cc2a14015787e42bae162a0d026afec0902cdc1303"),
            ("example2_pair.txt", "9bed74f4f67ded269596193ba5887d4be302adef08d16cc1db723631d3f2106e"),
            ("example2_u.txt", "8187193b653b49b627c57056d75e5ed4734955a49a6c299279db3b24c47c3830"),
            ("example2_spectrum_printed.csv", "e6a781ad70c2d20a84a5b2583d62557262d8abd8a5607adde4747b4ea5f1d5f7"),
            ("example3_u.txt", "ec51373d73533fd824f001678f8c38873449b9d5cc436e80f05390dd50e50a79"),
            ("example3_spectrum.csv", "e39f7713ad9edd5f13890d4abe19fc969726391a137bc145541f97966522cb88"),
        ];
        for (name, want) in expected {
            let text = FILE_NAMES
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, t)| *t)
                .unwrap();
            assert_eq!(sha256(text), want, "checksum drift in {name}");
        }
    }

    #[test]
    fn fixtures_parse_and_cohere() {
        let p1 = example1_pair();
        assert_eq!(p1.len(), 25);
        assert_eq!(example1_u().len(), 50);
        assert_eq!(example1_spectrum().len(), 50);
        assert_eq!(auto_spectrum(&example1_u()), example1_spectrum());

        let p2 = example2_pair();
        assert_eq!(p2.len(), 63);
        assert_eq!(example2_u().len(), 126);
        assert_eq!(example2_printed_spectrum_rows().len(), 125);

        assert_eq!(example3_u().len(), 34);
        assert_eq!(auto_spectrum(&example3_u()), example3_spectrum());
    }
}
