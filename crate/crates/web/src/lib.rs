//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string, so the same functions are exercised
//! natively by the tests.

use rrcensus::census::census_degree;
use rrcensus::qseries::identity_report;
use rrcensus::root_system::{q3_dimension_closed_form, weyl_dim};
use rrcensus::{LeadingTermSet, Part, Rank, WeightVec};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MAX_RANK: u32 = 8;
const MAX_CENSUS_RANK: u32 = 5;
const MAX_TRUNCATION: usize = 80;

fn rank(n: u32, max: u32) -> Result<Rank, String> {
    if n > max {
        return Err(format!("the demo is limited to n <= {max}"));
    }
    Rank::new(n).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct NeighbourCell {
    a: u32,
    b: u32,
    label: String,
    /// `x(-j) y(-j)` is a leading term.
    same: bool,
    /// `y(-j-1) x(-j)` is a leading term.
    lower: bool,
    /// `x(-j) y(-j+1)` is a leading term.
    higher: bool,
}

#[derive(Serialize)]
struct Explorer {
    n: u32,
    size: u32,
    selected: String,
    cells: Vec<NeighbourCell>,
}

/// For the selected cell `x = x_ab`, marks every cell `y` that forms a
/// quadratic leading term with it at the same or an adjacent degree.
#[wasm_bindgen]
pub fn leading_term_neighbours(n: u32, a: u32, b: u32) -> Result<String, String> {
    let rank = rank(n, MAX_RANK)?;
    let x = rank.cell(a, b).map_err(|e| e.to_string())?;
    let lt = LeadingTermSet::new(rank);
    let cells = rank
        .cells()
        .map(|y| NeighbourCell {
            a: y.column(),
            b: y.row(),
            label: y.label(rank),
            same: lt.is_leading_pair(Part::new(x, -2), Part::new(y, -2)),
            lower: lt.is_leading_pair(Part::new(y, -3), Part::new(x, -2)),
            higher: lt.is_leading_pair(Part::new(x, -2), Part::new(y, -1)),
        })
        .collect();
    to_json(&Explorer {
        n,
        size: rank.size(),
        selected: x.label(rank),
        cells,
    })
}

/// Coefficients of the product, congruence and difference-condition sides.
#[wasm_bindgen]
pub fn identity_table(n: u32, max: usize) -> Result<String, String> {
    let rank = rank(n, MAX_RANK)?;
    if !(1..=MAX_TRUNCATION).contains(&max) {
        return Err(format!("N must lie in 1..={MAX_TRUNCATION}"));
    }
    to_json(&identity_report(rank, max))
}

#[derive(Serialize)]
struct DimsAndCensus {
    n: u32,
    m: i32,
    dim_2theta: String,
    dim_3theta: String,
    dim_3theta_minus_alpha: String,
    expected: String,
    census: rrcensus::census::CensusReport,
}

/// The three Weyl dimensions together with the census at degree `m`.
#[wasm_bindgen]
pub fn dims_and_census(n: u32, m: i32) -> Result<String, String> {
    let rank = rank(n, MAX_CENSUS_RANK)?;
    let dim = |w: WeightVec| weyl_dim(rank, &w).map(|d| d.to_string()).map_err(|e| e.to_string());
    let census = census_degree(rank, m).map_err(|e| e.to_string())?;
    to_json(&DimsAndCensus {
        n,
        m,
        dim_2theta: dim(WeightVec::theta_multiple(rank, 2))?,
        dim_3theta: dim(WeightVec::theta_multiple(rank, 3))?,
        dim_3theta_minus_alpha: dim(WeightVec::three_theta_minus_alpha1(rank))?,
        expected: q3_dimension_closed_form(rank).to_string(),
        census,
    })
}
