//! Census of embedded leading terms in length three partitions.
//!
//! For a colored partition `π` let `N(π) = max(#ℰ(π) - 1, 0)` where `ℰ(π)`
//! is the set of leading terms embedded in `π`. The basis theorem for the
//! basic module reduces to
//!
//! ```text
//! Σ_{π ∈ P^3(m)} N(π) = dim Q_3(m) = 2n C(2n+4, 5)   for every m <= -3.
//! ```
//!
//! `N(π) >= 1` needs two leading-term sub-pairs, and leading terms have
//! degree gap 0 or 1. With degrees `d1 <= d2 <= d3` this leaves exactly the
//! shapes `(d, d+1, d+1)`, `(d, d, d+1)`, `(d, d+1, d+2)` and `(d, d, d)`, so
//! the otherwise infinite set `P^3(m)` can be replaced by these four finite
//! families. The value of `m` fixes which families occur and at which `j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leading_terms::LeadingTermSet;
use crate::partitions::{enumerate_with_shape, ColoredPartition};
use crate::root_system::{q3_dimension_closed_form, Rank};

/// The shape families of `P^3(m)` that can carry `N(π) >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `(-j-1, -j, -j)`, `m = -3j - 1`
    I,
    /// `(-j-1, -j-1, -j)`, `m = -3j - 2`
    II,
    /// `(-j-2, -j-1, -j)`, `m = -3j - 3`
    IIIa,
    /// `(-j-1, -j-1, -j-1)`, `m = -3j - 3`
    IIIb,
}

impl Family {
    pub fn shape(self, j: i32) -> [i32; 3] {
        match self {
            Family::I => [-j - 1, -j, -j],
            Family::II => [-j - 1, -j - 1, -j],
            Family::IIIa => [-j - 2, -j - 1, -j],
            Family::IIIb => [-j - 1, -j - 1, -j - 1],
        }
    }

    /// The families present at degree `m` together with their `j`.
    pub fn for_degree(m: i32) -> Result<Vec<(Family, i32)>> {
        if m > -3 {
            return Err(Error::CensusDegree(m));
        }
        let k = -m;
        Ok(match k % 3 {
            1 => vec![(Family::I, (k - 1) / 3)],
            2 => vec![(Family::II, (k - 2) / 3)],
            _ => {
                let j = (k - 3) / 3;
                vec![(Family::IIIa, j), (Family::IIIb, j)]
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Subcases of family I, `x1(-j-1) x2(-j) x3(-j)` with `x2 ⪯ x3`.
///
/// Labels follow the closed-form sums: `I4` is the case where `x1 x2` and
/// `x2 x3` are leading terms but `x1 x3` is not, `I5` the case where
/// `x1 x3` and `x2 x3` are leading terms but `x1 x2` is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subcase {
    /// all three pairs are leading terms, `x2 != x3`; `N = 2`
    I1,
    /// `x2 = x3` and `x1 x2` is a leading term; `N = 1`
    I2,
    /// only the two adjacent-degree pairs are leading terms
    I3,
    /// `x1 x2` and `x2 x3` are leading terms
    I4,
    /// `x1 x3` and `x2 x3` are leading terms
    I5,
}

impl Subcase {
    pub const ALL: [Subcase; 5] = [Subcase::I1, Subcase::I2, Subcase::I3, Subcase::I4, Subcase::I5];
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: u32,
    pub m: i32,
    #[serde(with = "crate::decimal")]
    pub total: BigUint,
    #[serde(with = "crate::decimal")]
    pub expected: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(with = "crate::decimal::map")]
    pub per_family: BTreeMap<Family, BigUint>,
    /// Present only when family I occurs.
    #[serde(with = "crate::decimal::option_map", default)]
    pub per_subcase: Option<BTreeMap<Subcase, BigUint>>,
}

/// `N(π) = max(#ℰ(π) - 1, 0)`.
pub fn n_of_pi(leading_terms: &LeadingTermSet, pi: &ColoredPartition) -> u64 {
    (leading_terms.enumerate_leading_subsets(pi).len() as u64).saturating_sub(1)
}

/// Which subcase of family I the partition falls into, or `None` when
/// `N(π) = 0`.
pub fn classify_case_one(leading_terms: &LeadingTermSet, pi: &ColoredPartition) -> Result<Option<Subcase>> {
    let &[x1, x2, x3] = pi.parts() else {
        return Err(Error::NotCaseOne(format!("{:?}", pi.shape())));
    };
    if x2.deg != x3.deg || x1.deg + 1 != x2.deg {
        return Err(Error::NotCaseOne(format!("{:?}", pi.shape())));
    }
    let a = leading_terms.is_leading_pair(x1, x2);
    let b = leading_terms.is_leading_pair(x1, x3);
    let c = leading_terms.is_leading_pair(x2, x3);
    if x2 == x3 {
        return Ok(a.then_some(Subcase::I2));
    }
    Ok(match (a, b, c) {
        (true, true, true) => Some(Subcase::I1),
        (true, true, false) => Some(Subcase::I3),
        (true, false, true) => Some(Subcase::I4),
        (false, true, true) => Some(Subcase::I5),
        _ => None,
    })
}

/// Runs the census at degree `m <= -3`.
///
/// Enumeration runs on the current rayon pool; the sums are integer
/// additions, so the report does not depend on the pool width.
pub fn census_degree(rank: Rank, m: i32) -> Result<CensusReport> {
    let leading_terms = LeadingTermSet::new(rank);
    let mut per_family = BTreeMap::new();
    let mut per_subcase = None;
    for (family, j) in Family::for_degree(m)? {
        let partitions = enumerate_with_shape(rank, &family.shape(j));
        let sum: u64 = partitions
            .par_iter()
            .map(|pi| n_of_pi(&leading_terms, pi))
            .sum();
        per_family.insert(family, BigUint::from(sum));

        if family == Family::I {
            let tallies = partitions
                .par_iter()
                .map(|pi| {
                    let mut t = [0u64; 5];
                    if let Some(s) = classify_case_one(&leading_terms, pi).expect("family I shape") {
                        t[s as usize] += n_of_pi(&leading_terms, pi);
                    }
                    t
                })
                .reduce(|| [0; 5], |x, y| std::array::from_fn(|i| x[i] + y[i]));
            per_subcase = Some(
                Subcase::ALL
                    .iter()
                    .map(|&s| (s, BigUint::from(tallies[s as usize])))
                    .collect(),
            );
        }
    }
    let total: BigUint = per_family.values().sum();
    let expected = q3_dimension_closed_form(rank);
    Ok(CensusReport {
        n: rank.get(),
        m,
        matches: total == expected,
        total,
        expected,
        per_family,
        per_subcase,
    })
}

/// The five quadruple sums for the subcases of family I, evaluated term by
/// term over `k1 in 1..=2n`, `l1 in 1..=k1`, `k2 in k1..=2n`, `l2 in k1..=k2`.
pub fn subcase_sums_closed_form(rank: Rank) -> BTreeMap<Subcase, BigUint> {
    let size = rank.size() as u64;
    let mut sums = [0u64; 5];
    for k1 in 1..=size {
        for _l1 in 1..=k1 {
            for k2 in k1..=size {
                for l2 in k1..=k2 {
                    sums[0] += 2 * (l2 - k1) + (k2 - l2) * (k2 - l2 + 1);
                    sums[1] += 1;
                    let twice = (l2 - k1) * (2 * k2 - k1 - l2 + 1);
                    debug_assert!(twice % 2 == 0);
                    sums[2] += twice / 2;
                    sums[3] += k1 - 1;
                    // (k3, l3) of the last sum run over the same region as (k2, l2)
                    sums[4] += (size - k2) * (k1 - 1);
                }
            }
        }
    }
    Subcase::ALL
        .iter()
        .map(|&s| (s, BigUint::from(sums[s as usize])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn pi(n: u32, s: &str) -> ColoredPartition {
        ColoredPartition::parse(rank(n), s).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn n_of_pi_examples() {
        let lt = LeadingTermSet::new(rank(2));
        assert_eq!(n_of_pi(&lt, &pi(2, "11(-1)*22(-1)")), 0);
        assert_eq!(n_of_pi(&lt, &pi(2, "11(-2)*11(-1)*11(-1)")), 1);
        assert_eq!(n_of_pi(&lt, &pi(2, "12(-3)")), 0);
        assert_eq!(n_of_pi(&lt, &ColoredPartition::empty()), 0);
    }

    #[test]
    fn families_for_degree() {
        assert_eq!(Family::for_degree(-4).unwrap(), vec![(Family::I, 1)]);
        assert_eq!(Family::for_degree(-5).unwrap(), vec![(Family::II, 1)]);
        assert_eq!(
            Family::for_degree(-3).unwrap(),
            vec![(Family::IIIa, 0), (Family::IIIb, 0)]
        );
        assert_eq!(Family::for_degree(-2), Err(Error::CensusDegree(-2)));
        for m in -30..=-3 {
            for (f, j) in Family::for_degree(m).unwrap() {
                assert_eq!(f.shape(j).iter().sum::<i32>(), m);
                assert!(f.shape(j).iter().all(|&d| d <= 0));
            }
        }
    }

    #[test]
    fn census_examples() {
        let r = census_degree(rank(2), -4).unwrap();
        assert_eq!(r.total, big(224));
        assert!(r.matches);
        assert!(census_degree(rank(2), -5).unwrap().matches);
        let r = census_degree(rank(3), -6).unwrap();
        assert_eq!(r.total, big(1512));
        assert_eq!(r.per_family.len(), 2);
        assert!(r.per_subcase.is_none());
        assert!(census_degree(rank(2), -2).is_err());
    }

    #[test]
    fn census_degree_independent() {
        for n in 2..=3 {
            for m in -12..=-3 {
                let r = census_degree(rank(n), m).unwrap();
                assert!(r.matches, "n={n} m={m}: {} != {}", r.total, r.expected);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let r = rank(2);
        let lt = LeadingTermSet::new(r);
        // x1 = 11 is in every Δ_r, so both adjacent pairs are leading; 11, 12
        // at the same degree is leading as well.
        assert_eq!(
            classify_case_one(&lt, &pi(2, "11(-2)*12(-1)*11(-1)")).unwrap(),
            Some(Subcase::I1)
        );
        // 11 and 22 at the same degree are not a leading term
        assert_eq!(
            classify_case_one(&lt, &pi(2, "11(-2)*22(-1)*11(-1)")).unwrap(),
            Some(Subcase::I3)
        );
        assert_eq!(
            classify_case_one(&lt, &pi(2, "11(-2)*22(-1)*22(-1)")).unwrap(),
            Some(Subcase::I2)
        );
        // x1 = 1_bar1_bar only forms a leading term with x = 1_bar1_bar
        assert_eq!(
            classify_case_one(&lt, &pi(2, "1_bar1_bar(-2)*11(-1)*22(-1)")).unwrap(),
            None
        );
        // x2 = 21_bar, x3 = 11_bar in the same row: x1 x2 leading, x1 x3 not
        assert_eq!(
            classify_case_one(&lt, &pi(2, "22(-2)*21_bar(-1)*11_bar(-1)")).unwrap(),
            Some(Subcase::I4)
        );
        // x2 = 11_bar lies in the rectangle of x3 = 22: x1 x3 leading, x1 x2 not
        assert_eq!(
            classify_case_one(&lt, &pi(2, "22(-2)*11_bar(-1)*22(-1)")).unwrap(),
            Some(Subcase::I5)
        );
        assert!(classify_case_one(&lt, &pi(2, "11(-2)*11(-2)*11(-1)")).is_err());
        assert!(classify_case_one(&lt, &pi(2, "11(-2)*11(-1)")).is_err());
    }

    #[test]
    fn classified_n_matches_subcase_weight() {
        let r = rank(3);
        let lt = LeadingTermSet::new(r);
        for p in enumerate_with_shape(r, &Family::I.shape(2)) {
            let n = n_of_pi(&lt, &p);
            match classify_case_one(&lt, &p).unwrap() {
                Some(Subcase::I1) => assert_eq!(n, 2),
                Some(_) => assert_eq!(n, 1),
                None => assert_eq!(n, 0),
            }
        }
    }

    /// Σ_{I2} is the number of adjacent-degree leading-term cell pairs.
    #[test]
    fn i2_counts_index_region() {
        let r = rank(2);
        let sums = subcase_sums_closed_form(r);
        let region = (1..=4u64)
            .flat_map(|k1| (1..=k1).flat_map(move |_| (k1..=4).flat_map(move |k2| (k1..=k2).map(move |_| ()))))
            .count();
        assert_eq!(sums[&Subcase::I2], big(region as u64));
        assert_eq!(sums[&Subcase::I2], big(35));
    }

    #[test]
    fn subcases_match_brute_force() {
        for n in 2..=4 {
            let r = rank(n);
            let report = census_degree(r, -4).unwrap();
            assert_eq!(report.per_subcase.unwrap(), subcase_sums_closed_form(r));
        }
    }

    #[test]
    fn subcase_total_is_q3_dimension() {
        for n in 2..=6 {
            let r = rank(n);
            let total: BigUint = subcase_sums_closed_form(r).values().sum();
            assert_eq!(total, q3_dimension_closed_form(r));
        }
    }

    #[test]
    fn report_json_shape() {
        let report = census_degree(rank(2), -4).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["total"], "224");
        assert_eq!(v["match"], true);
        assert_eq!(v["per_family"]["I"], "224");
        assert_eq!(v["per_subcase"]["I1"], "98");
        let back: CensusReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn width_independent() {
        let run = |w| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .unwrap()
                .install(|| census_degree(rank(3), -7).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(2));
        assert_eq!(one, run(4));
    }

    #[test]
    fn boundary_degree_uses_degree_zero_parts() {
        assert_eq!(Family::IIIa.shape(0), [-2, -1, 0]);
        let r = census_degree(rank(2), -3).unwrap();
        assert!(r.matches);
        // same cells one degree lower give the same family total
        let lower = census_degree(rank(2), -6).unwrap();
        assert_eq!(r.per_family, lower.per_family);
    }
}
