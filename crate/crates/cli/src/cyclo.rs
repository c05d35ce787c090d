use serde_json::json;

use seqforge_core::cyclotomy::{
    build_system, cyclotomic_numbers_closed_form, find_generator, select_system_for_convention,
    ConventionTarget, QuarticSystem,
};
use seqforge_core::error::{Error, Result};

use crate::{error_exit_code, render, CommandOutcome, ReportBuilder, EXIT_OK};

fn build(n: usize, alpha: Option<usize>, convention: Option<&str>) -> Result<QuarticSystem> {
    if let Some(target) = convention {
        let target = match target {
            "y-minus-one" => ConventionTarget::YMinusOne,
            "x-unit" => ConventionTarget::XUnit,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown convention {other:?}; use y-minus-one or x-unit"
                )))
            }
        };
        return select_system_for_convention(n, target);
    }
    let generator = match alpha {
        Some(a) => a,
        None => find_generator(n)?,
    };
    build_system(n, generator)
}

pub(crate) fn execute(
    report: &ReportBuilder,
    n: usize,
    alpha: Option<usize>,
    convention: Option<&str>,
) -> CommandOutcome {
    let inputs = json!({ "n": n, "alpha": alpha, "convention": convention });
    match build(n, alpha, convention) {
        Ok(system) => {
            let closed = cyclotomic_numbers_closed_form(&system);
            let outputs = json!({
                "n": system.n(),
                "f": system.f(),
                "alpha": system.generator(),
                "x": system.x(),
                "y": system.y(),
                "classes": system.classes(),
                "cyclotomic_numbers": system.table().entries(),
                "closed_form_matches_counts": closed == *system.table(),
            });
            CommandOutcome::new(EXIT_OK, render(&report.finish(inputs, outputs)))
        }
        Err(err) => {
            let outputs = json!({ "error": err.to_string() });
            CommandOutcome::new(error_exit_code(&err), render(&report.finish(inputs, outputs)))
        }
    }
}
