//! Chern-class calculus on presented cohomology rings of the parameter
//! spaces of lines and conics, and the degree-one and degree-two counts
//! computed on them.

mod bundle;
mod scenarios;
mod space;

pub use bundle::{grassmann_relations, projective_bundle_relation, series_inverse, FormalBundle};
pub use scenarios::{run_scenario, scenario, shipped_spaces, Scenario, ScenarioResult, SCENARIO_IDS};
pub use space::SpaceModel;

use thiserror::Error;

use crate::exact::rat;
use crate::expected::SCENARIO_VALUES;
use crate::presentation::PresentationError;
use crate::report::{Check, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntersectionError {
    #[error("exterior square is only implemented for ranks 1 to 3, got {0}")]
    UnsupportedRank(i64),
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("bad space model: {0}")]
    Space(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Runs every catalogued computation and compares it with the reference
/// values; also checks that each parameter space has a one-dimensional top
/// degree.
pub fn verify_scenarios() -> VerificationReport {
    let mut checks = Vec::new();
    for (id, main, correction) in SCENARIO_VALUES {
        let check = match run_scenario(id) {
            Ok(r) => {
                let ok = r.main == rat(main) && r.correction == rat(correction);
                let detail = if ok { r.to_string() } else { format!("{r}, expected main={main} correction={correction}") };
                Check::new(format!("scenario/{id}"), ok, detail)
            }
            Err(e) => Check::fail(format!("scenario/{id}"), e.to_string()),
        };
        checks.push(check);
    }
    for s in shipped_spaces() {
        let top = s.top_degree();
        let ok = s.ring().dimension(top) == 1 && s.ring().dimension(top + 1) == 0;
        checks.push(Check::new(format!("space/{}", s.name()), ok, format!("top degree {top}")));
    }
    VerificationReport::new("scenarios", checks)
}
