use std::fs;

use serde_json::json;

use seqforge_core::cyclotomy::{build_system, find_generator, six_sequences};
use seqforge_core::error::{Error, Result};
use seqforge_core::families::{
    gmw_pair, legendre_pair, m_sequence, pair_to_string, twin_prime_pair, SequencePair,
};
use seqforge_core::seq::{BinarySequence, Sequence};

use crate::util::field_from_options;
use crate::{error_exit_code, render, CommandOutcome, ReportBuilder, EXIT_INVALID, EXIT_OK};

enum Generated {
    Pair(SequencePair),
    Single { family: String, params: String, sequence: BinarySequence },
}

impl Generated {
    fn fixture_text(&self) -> String {
        match self {
            Self::Pair(pair) => pair_to_string(pair),
            Self::Single { family, params, sequence } => {
                format!("n={} family={family} params={params}\n{sequence}\n", sequence.len())
            }
        }
    }

    fn length(&self) -> usize {
        match self {
            Self::Pair(pair) => pair.len(),
            Self::Single { sequence, .. } => sequence.len(),
        }
    }

    fn family(&self) -> String {
        match self {
            Self::Pair(pair) => pair.family_tag.to_string(),
            Self::Single { family, .. } => family.clone(),
        }
    }
}

fn build(
    family: &str,
    param: usize,
    poly: Option<&str>,
    alpha: Option<usize>,
) -> Result<Generated> {
    match family {
        "legendre" => Ok(Generated::Pair(legendre_pair(param)?)),
        "twin_prime" => Ok(Generated::Pair(twin_prime_pair(param)?)),
        "gmw" => {
            let field = field_from_options(2 * param, poly)?;
            Ok(Generated::Pair(gmw_pair(param, &field)?))
        }
        "mseq" => {
            let field = field_from_options(param, poly)?;
            Ok(Generated::Single {
                family: "mseq".into(),
                params: format!("m={param};poly={:b}", field.polynomial()),
                sequence: m_sequence(&field),
            })
        }
        _ => {
            if let Some(index_text) = family.strip_prefix("cyclotomic_s") {
                let index: usize = index_text.parse().map_err(|_| {
                    Error::InvalidParameter(format!("unknown family {family:?}"))
                })?;
                if !(1..=6).contains(&index) {
                    return Err(Error::InvalidParameter(format!(
                        "cyclotomic sequence index {index} outside 1..=6"
                    )));
                }
                let generator = match alpha {
                    Some(a) => a,
                    None => find_generator(param)?,
                };
                let system = build_system(param, generator)?;
                let sequence = six_sequences(&system).get(index).clone();
                Ok(Generated::Single {
                    family: family.to_string(),
                    params: format!("n={param};alpha={generator}"),
                    sequence,
                })
            } else {
                Err(Error::InvalidParameter(format!("unknown family {family:?}")))
            }
        }
    }
}

pub(crate) fn execute(
    report: &ReportBuilder,
    family: &str,
    param: usize,
    output: Option<&str>,
    poly: Option<&str>,
    alpha: Option<usize>,
) -> CommandOutcome {
    let inputs = json!({
        "family": family,
        "param": param,
        "output": output,
        "poly": poly,
        "alpha": alpha,
    });
    let generated = match build(family, param, poly, alpha) {
        Ok(g) => g,
        Err(err) => {
            let outputs = json!({ "error": err.to_string() });
            return CommandOutcome::new(
                error_exit_code(&err),
                render(&report.finish(inputs, outputs)),
            );
        }
    };
    let text = generated.fixture_text();
    if let Some(path) = output {
        if let Err(err) = fs::write(path, &text) {
            let outputs = json!({ "error": format!("cannot write {path}: {err}") });
            return CommandOutcome::new(EXIT_INVALID, render(&report.finish(inputs, outputs)));
        }
    }
    let outputs = json!({
        "family": generated.family(),
        "n": generated.length(),
        "written": output,
        "fixture": text,
    });
    CommandOutcome::new(EXIT_OK, render(&report.finish(inputs, outputs)))
}
