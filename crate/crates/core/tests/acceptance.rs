//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use rrcensus::census::{census_degree, subcase_sums_closed_form, Family, Subcase};
use rrcensus::partitions::{multiply, partition_order_less};
use rrcensus::qseries::{congruence_side, product_side, rr_side};
use rrcensus::root_system::{binomial, q3_dimension_closed_form, weyl_dim};
use rrcensus::{Cell, ColoredPartition, LeadingTermSet, Part, Rank, WeightVec};

fn rank(n: u32) -> Rank {
    Rank::new(n).unwrap()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn weyl_dimensions() {
    for n in 2..=10u32 {
        let r = rank(n);
        let m = 2 * n as u64;
        let d2 = weyl_dim(r, &WeightVec::theta_multiple(r, 2)).unwrap();
        let d3 = weyl_dim(r, &WeightVec::theta_multiple(r, 3)).unwrap();
        let d3a = weyl_dim(r, &WeightVec::three_theta_minus_alpha1(r)).unwrap();
        assert_eq!(d2, binomial(m + 3, 4), "n = {n}");
        assert_eq!(d3, binomial(m + 5, 6), "n = {n}");
        let expected = binomial(m + 3, 4) * big(m + 5) * big(n as u64 - 1);
        assert_eq!(&d3a * big(3), expected, "n = {n}");
        let sum = d2 + d3 + d3a;
        assert_eq!(sum, big(m) * binomial(m + 4, 5), "n = {n}");
        assert_eq!(sum, q3_dimension_closed_form(r), "n = {n}");
    }
}

fn census_identity() {
    for (n, expected) in [(2u32, 224u64), (3, 1512)] {
        for m in -12..=-3 {
            let report = census_degree(rank(n), m).unwrap();
            assert_eq!(report.total, big(expected), "n = {n}, m = {m}");
            assert!(report.matches);
        }
    }
}

/// Tallies family I directly over cell triples `x1(-j-1) x2(-j) x3(-j)`
/// with `x2 <= x3`.
fn brute_force_subcases(r: Rank) -> [u64; 5] {
    let lt = LeadingTermSet::new(r);
    let cells = r.sorted_cells();
    let mut tally = [0u64; 5];
    for &x1 in &cells {
        for (i, &x2) in cells.iter().enumerate() {
            for &x3 in &cells[i..] {
                let (p1, p2, p3) = (Part::new(x1, -2), Part::new(x2, -1), Part::new(x3, -1));
                let a = lt.is_leading_pair(p1, p2);
                let b = lt.is_leading_pair(p1, p3);
                let c = lt.is_leading_pair(p2, p3);
                let subcase = if x2 == x3 {
                    a.then_some(Subcase::I2)
                } else {
                    match (a, b, c) {
                        (true, true, true) => Some(Subcase::I1),
                        (true, true, false) => Some(Subcase::I3),
                        (true, false, true) => Some(Subcase::I4),
                        (false, true, true) => Some(Subcase::I5),
                        _ => None,
                    }
                };
                let mut pairs = vec![(p1, p2), (p1, p3), (p2, p3)];
                pairs.retain(|&(p, q)| lt.is_leading_pair(p, q));
                pairs.sort();
                pairs.dedup();
                let weight = (pairs.len() as u64).saturating_sub(1);
                match subcase {
                    Some(s) => tally[s as usize] += weight,
                    None => assert_eq!(weight, 0),
                }
            }
        }
    }
    tally
}

fn subcase_decomposition() {
    for n in 2..=4u32 {
        let r = rank(n);
        let closed = subcase_sums_closed_form(r);
        let brute = brute_force_subcases(r);
        for s in Subcase::ALL {
            assert_eq!(closed[&s], big(brute[s as usize]), "n = {n}, {s}");
        }
        let report = census_degree(r, -4).unwrap();
        assert_eq!(report.per_subcase.as_ref().unwrap(), &closed, "n = {n}");
        assert_eq!(report.per_family[&Family::I], closed.values().sum::<BigUint>());
        let total: BigUint = closed.values().sum();
        assert_eq!(total, q3_dimension_closed_form(r), "n = {n}");
    }
    let n2: Vec<BigUint> = subcase_sums_closed_form(rank(2)).into_values().collect();
    assert_eq!(n2, [98u64, 35, 35, 42, 14].map(big));
}

fn rogers_ramanujan() {
    for (n, n_max) in [(2u32, 40usize), (3, 30)] {
        let r = rank(n);
        let product = product_side(r, n_max);
        assert_eq!(product, congruence_side(r, n_max), "n = {n}");
        assert_eq!(product, rr_side(r, n_max), "n = {n}");
    }
}

/// Counts RR partitions by principal degree, growing partitions one part at
/// a time in decreasing part order and pruning as soon as a leading term
/// appears.
fn rr_partition_counts(r: Rank, n_max: usize) -> Vec<u64> {
    let lt = LeadingTermSet::new(r);
    let size = r.size() as usize;
    let degree = |c: Cell, j: usize| c.column() as usize + c.row() as usize - 1 + size * (j - 1);
    let mut parts: Vec<(Part, usize)> = Vec::new();
    for j in 1.. {
        let row: Vec<(Part, usize)> = r
            .cells()
            .map(|c| (Part::new(c, -(j as i32)), degree(c, j)))
            .filter(|&(_, d)| d <= n_max)
            .collect();
        if row.is_empty() {
            break;
        }
        parts.extend(row);
    }
    parts.sort_by_key(|&(p, _)| std::cmp::Reverse(p));

    fn go(
        lt: &LeadingTermSet,
        parts: &[(Part, usize)],
        start: usize,
        pi: &ColoredPartition,
        sum: usize,
        counts: &mut [u64],
    ) {
        counts[sum] += 1;
        for (k, &(p, d)) in parts.iter().enumerate().skip(start) {
            if sum + d >= counts.len() {
                continue;
            }
            let next = pi.multiply(&ColoredPartition::new(vec![p]));
            if next.is_rr(lt).unwrap() {
                go(lt, parts, k, &next, sum + d, counts);
            }
        }
    }

    let mut counts = vec![0u64; n_max + 1];
    go(&lt, &parts, 0, &ColoredPartition::empty(), 0, &mut counts);
    counts
}

fn pipeline_cross_oracle() {
    for n in [2u32, 3] {
        let r = rank(n);
        let oracle = rr_partition_counts(r, 30);
        let series = rr_side(r, 30);
        for (i, &c) in oracle.iter().enumerate() {
            assert_eq!(series.coeff(i), &c.into(), "n = {n}, N = {i}");
        }
    }
}

fn all_partitions(r: Rank, degs: std::ops::RangeInclusive<i32>, max_len: usize) -> Vec<ColoredPartition> {
    let parts: Vec<ColoredPartition> = degs
        .flat_map(|d| r.cells().map(move |c| ColoredPartition::new(vec![Part::new(c, d)])))
        .collect();
    let mut layer = vec![ColoredPartition::empty()];
    let mut out = layer.clone();
    for _ in 0..max_len {
        let mut next: Vec<ColoredPartition> = layer
            .iter()
            .flat_map(|pi| parts.iter().map(move |p| multiply(pi, p)))
            .collect();
        next.sort();
        next.dedup();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn property_suites() {
    // order axioms on all partitions of length <= 2 with parts in degrees -2..-1
    let r = rank(2);
    let family = all_partitions(r, -2..=-1, 2);
    assert_eq!(family.len(), 1 + 20 + 210);
    for x in &family {
        assert!(!partition_order_less(x, x));
        for y in &family {
            let (lt, gt) = (partition_order_less(x, y), partition_order_less(y, x));
            assert_eq!(lt as u8 + gt as u8 + (x == y) as u8, 1);
            for z in &family {
                if lt && partition_order_less(y, z) {
                    assert!(partition_order_less(x, z));
                }
                if lt {
                    assert!(partition_order_less(&multiply(x, z), &multiply(y, z)));
                }
            }
        }
    }

    // triangle characterization for every adjacent-degree pair, n <= 4
    for n in 2..=4 {
        let r = rank(n);
        let lt = LeadingTermSet::new(r);
        for lo in r.cells() {
            for hi in r.cells() {
                let pair = ColoredPartition::new(vec![Part::new(lo, -2), Part::new(hi, -1)]);
                assert_eq!(
                    lt.is_leading_term(&pair).unwrap(),
                    lt.is_leading_term_via_triangles(&pair).unwrap(),
                    "n = {n}"
                );
            }
        }
    }

    // shift invariance
    for n in 2..=4 {
        let r = rank(n);
        let lt = LeadingTermSet::new(r);
        for p in r.cells() {
            for q in r.cells() {
                for (dp, dq) in [(-1, -1), (-2, -1), (-1, -2), (-3, -1)] {
                    let base = lt.is_leading_pair(Part::new(p, dp), Part::new(q, dq));
                    for s in 1..=4 {
                        assert_eq!(base, lt.is_leading_pair(Part::new(p, dp - s), Part::new(q, dq - s)));
                    }
                }
            }
        }
    }

    // determinism under pool width
    let run = || {
        let census: Vec<_> = (-9..=-3).map(|m| census_degree(rank(3), m).unwrap()).collect();
        (census, rr_side(rank(3), 24))
    };
    let reference = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(run);
    for width in [2, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(width).build().unwrap();
        assert!(pool.install(run) == reference, "width {width}");
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 6] = [
        ("weyl dimensions, n = 2..10", weyl_dimensions),
        ("census identity, n = 2, 3, m = -12..-3", census_identity),
        ("subcase decomposition, n = 2..4", subcase_decomposition),
        ("identity coefficients, n = 2 to N = 40, n = 3 to N = 30", rogers_ramanujan),
        ("RR partitions match difference conditions, N <= 30", pipeline_cross_oracle),
        ("order, triangle, shift and determinism properties", property_suites),
    ];
    panic::set_hook(Box::new(|info| eprintln!("  {info}")));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(check).is_ok();
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {status}  {name}  ({:.2?})", i + 1, start.elapsed());
        failed += usize::from(!ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
