//! Leading terms of the level one relations.
//!
//! Every leading term is a quadratic monomial of one of two kinds, written in
//! reindexed (numeric) row/column indices:
//!
//! - same degree, `x_{a1 b1}(-j) x_{a2 b2}(-j)` with `b2 >= b1` and `a2 <= a1`
//!   (the second cell lies in the rectangle below and to the left of the
//!   first);
//! - adjacent degree, `x_{a1 b1}(-j-1) x_{a2 b2}(-j)` with `b1 <= a2`.
//!
//! Membership depends only on the two cells and the degree gap, so the set
//! is never materialised.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{ColoredPartition, Part};
use crate::root_system::{Cell, Rank};

/// A quadratic leading term `p1 p2` with `p1 ⪯ p2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeadingTerm {
    pub first: Part,
    pub second: Part,
}

impl LeadingTerm {
    pub fn to_partition(self) -> ColoredPartition {
        ColoredPartition::new(vec![self.first, self.second])
    }

    pub fn gap(self) -> i32 {
        self.second.deg - self.first.deg
    }
}

/// `second` lies in the rectangle of `first`.
fn same_degree_pattern(first: Cell, second: Cell) -> bool {
    second.row() >= first.row() && second.column() <= first.column()
}

fn adjacent_degree_pattern(lower: Cell, higher: Cell) -> bool {
    lower.row() <= higher.column()
}

/// The set `ℓt(R̄)` for the basic module of C_n^(1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeadingTermSet {
    rank: Rank,
}

impl LeadingTermSet {
    pub fn new(rank: Rank) -> Self {
        LeadingTermSet { rank }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Whether the monomial `p q` is a leading term. The order of the
    /// arguments does not matter.
    pub fn is_leading_pair(&self, p: Part, q: Part) -> bool {
        let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
        match hi.deg - lo.deg {
            0 => same_degree_pattern(lo.cell, hi.cell) || same_degree_pattern(hi.cell, lo.cell),
            1 => adjacent_degree_pattern(lo.cell, hi.cell),
            _ => false,
        }
    }

    pub fn is_leading_term(&self, pair: &ColoredPartition) -> Result<bool> {
        match pair.parts() {
            &[p, q] => Ok(self.is_leading_pair(p, q)),
            parts => Err(Error::WrongLength {
                expected: 2,
                got: parts.len(),
            }),
        }
    }

    /// Adjacent-degree membership through the triangles: the pair is a leading
    /// term iff the lower degree cell lies in `Δ_r` and the higher degree cell
    /// in `^rΔ` for some row `r`.
    pub fn is_leading_term_via_triangles(&self, pair: &ColoredPartition) -> Result<bool> {
        let (lo, hi) = match pair.parts() {
            &[p, q] => (p, q),
            parts => {
                return Err(Error::WrongLength {
                    expected: 2,
                    got: parts.len(),
                })
            }
        };
        if hi.deg - lo.deg != 1 {
            return Err(Error::NotAdjacent(lo.deg, hi.deg));
        }
        for r in 1..=self.rank.size() {
            if self.rank.in_lower_triangle(lo.cell, r)? && self.rank.in_upper_triangle(hi.cell, r)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `ℰ(π)`: the distinct leading terms embedded in `pi`.
    pub fn enumerate_leading_subsets(&self, pi: &ColoredPartition) -> Vec<LeadingTerm> {
        let parts = pi.parts();
        let mut found = Vec::new();
        for (i, &p) in parts.iter().enumerate() {
            for &q in &parts[i + 1..] {
                if self.is_leading_pair(p, q) {
                    found.push(LeadingTerm { first: p, second: q });
                }
            }
        }
        // parts are sorted, so repeated sub-multisets are adjacent after sorting
        found.sort();
        found.dedup();
        found
    }

    /// The cell patterns of all leading terms at a fixed `j`.
    pub fn patterns(&self) -> Vec<LeadingPattern> {
        let cells: Vec<Cell> = self.rank.cells().collect();
        let mut out = Vec::new();
        for &first in &cells {
            for &second in &cells {
                if same_degree_pattern(first, second) {
                    out.push(LeadingPattern {
                        kind: PatternKind::SameDegree,
                        first,
                        second,
                    });
                }
            }
        }
        for &lower in &cells {
            for &higher in &cells {
                if adjacent_degree_pattern(lower, higher) {
                    out.push(LeadingPattern {
                        kind: PatternKind::AdjacentDegree,
                        first: lower,
                        second: higher,
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    SameDegree,
    AdjacentDegree,
}

impl PatternKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PatternKind::SameDegree => "same_degree",
            PatternKind::AdjacentDegree => "adjacent_degree",
        }
    }
}

/// A leading term shape. For [`PatternKind::SameDegree`], `first` is the
/// cell whose rectangle contains `second`; for
/// [`PatternKind::AdjacentDegree`], `first` carries degree `-j-1` and
/// `second` degree `-j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeadingPattern {
    pub kind: PatternKind,
    pub first: Cell,
    pub second: Cell,
}

/// Number of leading terms with the given degree gap at a fixed `j`.
///
/// Gap 0: `Σ_{a<=b} a (2n - b + 1)`, the sizes of the rectangles.
/// Gap 1: `Σ_r r T(2n - r + 1)` with `T(m) = m(m+1)/2`: the lower cell has
/// row exactly `r`, the higher cell any column `>= r`.
pub fn count_leading_terms(rank: Rank, gap: u32) -> BigUint {
    let size = rank.size() as u64;
    let total: u64 = match gap {
        0 => (1..=size)
            .flat_map(|b| (1..=b).map(move |a| a * (size - b + 1)))
            .sum(),
        1 => (1..=size)
            .map(|r| {
                let m = size - r + 1;
                r * m * (m + 1) / 2
            })
            .sum(),
        _ => 0,
    };
    BigUint::from(total)
}
