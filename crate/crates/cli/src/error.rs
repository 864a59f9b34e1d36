//! Error codes and exit discipline.

use polyinv_core::bns::BnsError;
use polyinv_core::chain3m::ChainError;
use polyinv_core::json::{self, JsonError};
use polyinv_core::{GrothError, LatticeError, MarkedError, WordError};
use serde_json::Value;

pub const EXIT_IO: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;
pub const EXIT_DISCREPANCY: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub exit: u8,
    pub code: &'static str,
    pub detail: Value,
}

impl CliError {
    pub fn new(exit: u8, code: &'static str, detail: impl Into<Value>) -> Self {
        CliError {
            exit,
            code,
            detail: detail.into(),
        }
    }

    pub fn io(detail: impl ToString) -> Self {
        CliError::new(EXIT_IO, "io", detail.to_string())
    }

    pub fn validation(code: &'static str, detail: impl ToString) -> Self {
        CliError::new(EXIT_VALIDATION, code, detail.to_string())
    }

    pub fn unsupported(code: &'static str, detail: impl ToString) -> Self {
        CliError::new(EXIT_UNSUPPORTED, code, detail.to_string())
    }

    pub fn to_json(&self) -> Value {
        json::error(self.code, self.detail.clone())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::UnsupportedDimension { .. } => {
                CliError::unsupported("unsupported_dimension", e)
            }
            LatticeError::ZeroDirection => CliError::validation("bad_phi", e),
            _ => CliError::validation("invalid_input", e),
        }
    }
}

impl From<GrothError> for CliError {
    fn from(e: GrothError) -> Self {
        match e {
            GrothError::Lattice(l) => l.into(),
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::ZeroElement => CliError::unsupported("zero_element", e),
            _ => CliError::validation("parse_error", e),
        }
    }
}

impl From<MarkedError> for CliError {
    fn from(e: MarkedError) -> Self {
        match e {
            MarkedError::Lattice(l) => l.into(),
            MarkedError::Word(w) => w.into(),
            MarkedError::Groth(g) => g.into(),
            MarkedError::NotNice { ref reasons } => CliError::new(
                EXIT_VALIDATION,
                "not_nice",
                serde_json::json!({ "message": e.to_string(), "reasons": reasons }),
            ),
            MarkedError::WrongB1 { .. } => CliError::unsupported("unsupported_b1", e),
            MarkedError::Dimension(_) => CliError::unsupported("unsupported_dimension", e),
            MarkedError::DegenerateRoutes => CliError::unsupported("degenerate_routes", e),
            MarkedError::Discrepancy {
                route,
                ref walk,
                ref fox,
            } => CliError::new(
                EXIT_DISCREPANCY,
                "route_discrepancy",
                serde_json::json!({
                    "message": e.to_string(),
                    "route": route.to_string(),
                    "walk": walk,
                    "fox": fox,
                }),
            ),
            MarkedError::ErosionFailed { .. } | MarkedError::InconsistentMarking { .. } => {
                CliError::new(EXIT_DISCREPANCY, "internal_discrepancy", e.to_string())
            }
            MarkedError::BadIndex { .. } | MarkedError::NotMarkedSegment => {
                CliError::validation("invalid_input", e)
            }
        }
    }
}

impl From<BnsError> for CliError {
    fn from(e: BnsError) -> Self {
        match e {
            BnsError::Marked(m) => m.into(),
            BnsError::Lattice(l) => l.into(),
            BnsError::UnsupportedB1 => CliError::unsupported("unsupported_b1", e),
            BnsError::CharacterRank { .. } | BnsError::NotEpimorphic { .. } => {
                CliError::validation("bad_phi", e)
            }
            BnsError::NegativeThickness { .. } => CliError::unsupported("inapplicable", e),
        }
    }
}

impl From<ChainError> for CliError {
    fn from(e: ChainError) -> Self {
        match e {
            ChainError::Word(w) => w.into(),
            ChainError::Groth(g) => g.into(),
            ChainError::Inapplicable(_) | ChainError::VanishingB { .. } => {
                CliError::unsupported("inapplicable", e)
            }
        }
    }
}

impl From<JsonError> for CliError {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Lattice(l) => l.into(),
            _ => CliError::validation("invalid_json", e),
        }
    }
}
