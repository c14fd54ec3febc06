//! JSON documents written by the CLI. Every document carries
//! `schema_version` and `command`; big integers are decimal strings.

use num_bigint::BigUint;
use rrcensus::census::CensusReport;
use rrcensus::leading_terms::PatternKind;
use rrcensus::qseries::IdentityReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsDoc {
    pub schema_version: u32,
    pub command: String,
    pub n: u32,
    #[serde(with = "rrcensus::decimal")]
    pub dim_2theta: BigUint,
    #[serde(with = "rrcensus::decimal")]
    pub dim_3theta: BigUint,
    #[serde(with = "rrcensus::decimal")]
    pub dim_3theta_minus_alpha: BigUint,
    #[serde(with = "rrcensus::decimal")]
    pub sum: BigUint,
    #[serde(with = "rrcensus::decimal")]
    pub expected: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub a: u32,
    pub b: u32,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDoc {
    #[serde(rename = "type")]
    pub kind: PatternKind,
    pub first: CellDoc,
    pub second: CellDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingTermsDoc {
    pub schema_version: u32,
    pub command: String,
    pub n: u32,
    pub same_degree_count: String,
    pub adjacent_degree_count: String,
    pub patterns: Vec<PatternDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub schema_version: u32,
    pub command: String,
    pub n: u32,
    pub all_match: bool,
    pub reports: Vec<CensusReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDoc {
    pub schema_version: u32,
    pub command: String,
    #[serde(flatten)]
    pub report: IdentityReport,
}
