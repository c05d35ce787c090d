use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use seqforge_core::corr::{auto_spectrum, is_optimal_even_length, CorrelationSpectrum};
use seqforge_core::error::{Error, Result};
use seqforge_core::seq::{BinarySequence, QuaternarySequence, Sequence};

use crate::util::gaussian_json;
use crate::{render, CommandOutcome, ReportBuilder, EXIT_INVALID, EXIT_OK};

/// Resolve the input: a path to a file (fixture header lines are skipped) or
/// inline sequence text.
fn load_text(input: &str) -> Result<String> {
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {input}: {e}"),
        })?;
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty() && !l.starts_with("n="))
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: "file contains no sequence line".into(),
            })?;
        Ok(line.to_string())
    } else {
        Ok(input.to_string())
    }
}

struct Analyzed {
    alphabet: u8,
    length: usize,
    spectrum: CorrelationSpectrum,
    optimal: Option<bool>,
    r_max_squared: u64,
}

fn analyze(text: &str, alphabet: Option<u8>) -> Result<Analyzed> {
    let symbols: Vec<i64> = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse { line: 1, message: format!("invalid symbol {tok:?}") })
        })
        .collect::<Result<_>>()?;
    let max = symbols.iter().copied().max().unwrap_or(0);
    let alphabet = match alphabet {
        Some(a @ (2 | 4)) => a,
        Some(a) => {
            return Err(Error::InvalidParameter(format!("alphabet must be 2 or 4, got {a}")))
        }
        None => {
            if max >= 2 {
                4
            } else {
                2
            }
        }
    };
    if alphabet == 2 {
        let s: BinarySequence = text.parse()?;
        let spectrum = auto_spectrum(&s);
        let r_max_squared = spectrum.r_max_squared()?;
        Ok(Analyzed { alphabet, length: s.len(), spectrum, optimal: None, r_max_squared })
    } else {
        let s: QuaternarySequence = text.parse()?;
        let spectrum = auto_spectrum(&s);
        let r_max_squared = spectrum.r_max_squared()?;
        let optimal = if s.len() % 2 == 0 {
            Some(is_optimal_even_length(&s)?.optimal)
        } else {
            None
        };
        Ok(Analyzed { alphabet, length: s.len(), spectrum, optimal, r_max_squared })
    }
}

pub(crate) fn execute(
    report: &ReportBuilder,
    input: &str,
    csv: bool,
    alphabet: Option<u8>,
    output: Option<&str>,
) -> CommandOutcome {
    let inputs = json!({ "input": input, "alphabet": alphabet, "csv": csv });
    let analyzed = match load_text(input).and_then(|text| analyze(&text, alphabet)) {
        Ok(a) => a,
        Err(err) => {
            let outputs = json!({ "error": err.to_string() });
            return CommandOutcome::new(EXIT_INVALID, render(&report.finish(inputs, outputs)));
        }
    };
    let csv_text = analyzed.spectrum.to_csv();
    if let Some(path) = output {
        if let Err(err) = fs::write(path, &csv_text) {
            let outputs = json!({ "error": format!("cannot write {path}: {err}") });
            return CommandOutcome::new(EXIT_INVALID, render(&report.finish(inputs, outputs)));
        }
    }
    if csv {
        return CommandOutcome::new(EXIT_OK, csv_text);
    }
    let values: Vec<Value> = analyzed
        .spectrum
        .values()
        .iter()
        .enumerate()
        .map(|(tau, v)| json!({ "tau": tau, "re": v.re, "im": v.im }))
        .collect();
    let outputs = json!({
        "alphabet": analyzed.alphabet,
        "length": analyzed.length,
        "r_max_squared": analyzed.r_max_squared,
        "optimal": analyzed.optimal,
        "spectrum": values,
        "spectrum_head": analyzed
            .spectrum
            .values()
            .iter()
            .take(8)
            .map(|v| gaussian_json(*v))
            .collect::<Vec<_>>(),
    });
    CommandOutcome::new(EXIT_OK, render(&report.finish(inputs, outputs)))
}
