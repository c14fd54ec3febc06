//! Finite type C_n data.
//!
//! Basis vectors `x_ab` of C_n are laid out in a lower triangular scheme with
//! column `a` and row `b`, `1 <= a <= b <= 2n`. Indices are stored after the
//! reindexation `k -> k`, `k_bar -> 2n - k + 1`; the barred alphabet only
//! appears when a cell is rendered with [`Cell::label`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The rank `n >= 2` of C_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of rows (and columns) of the scheme, `2n`.
    pub fn size(self) -> u32 {
        2 * self.0
    }

    /// `dim C_n = n(2n + 1)`, the number of cells.
    pub fn dim(self) -> usize {
        (self.0 * (2 * self.0 + 1)) as usize
    }

    pub fn cell(self, a: u32, b: u32) -> Result<Cell> {
        if a < 1 || a > b || b > self.size() {
            return Err(Error::InvalidCell { a, b, n: self.0 });
        }
        Ok(Cell { a, b })
    }

    pub fn contains(self, cell: Cell) -> bool {
        cell.b <= self.size()
    }

    /// All cells in reading order of the scheme: row by row, left to right.
    pub fn cells(self) -> impl Iterator<Item = Cell> + Clone {
        let size = self.size();
        (1..=size).flat_map(|b| (1..=b).map(move |a| Cell { a, b }))
    }

    /// All cells sorted ascending in the cell order.
    pub fn sorted_cells(self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.cells().collect();
        cells.sort();
        cells
    }

    fn check_row(self, r: u32) -> Result<()> {
        if r < 1 || r > self.size() {
            return Err(Error::RowOutOfRange { r, max: self.size() });
        }
        Ok(())
    }

    /// `cell ∈ Δ_r`: the cell lies in rows `1..=r`.
    pub fn in_lower_triangle(self, cell: Cell, r: u32) -> Result<bool> {
        self.check_row(r)?;
        Ok(cell.b <= r)
    }

    /// `cell ∈ ^rΔ`: the cell lies in columns `r..=2n`.
    pub fn in_upper_triangle(self, cell: Cell, r: u32) -> Result<bool> {
        self.check_row(r)?;
        Ok(cell.a >= r)
    }

    /// Renders a reindexed row/column index in the barred alphabet,
    /// e.g. `3` or `3_bar`.
    pub fn index_label(self, k: u32) -> String {
        if k <= self.0 {
            k.to_string()
        } else {
            format!("{}_bar", self.size() + 1 - k)
        }
    }

    /// Inverse of [`Rank::index_label`].
    pub fn parse_index(self, s: &str) -> Option<u32> {
        let (digits, barred) = match s.strip_suffix("_bar") {
            Some(d) => (d, true),
            None => (s, false),
        };
        let k: u32 = digits.parse().ok()?;
        if k < 1 || k > self.0 {
            return None;
        }
        Some(if barred { self.size() + 1 - k } else { k })
    }
}

impl TryFrom<u32> for Rank {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Rank::new(n)
    }
}

impl From<Rank> for u32 {
    fn from(rank: Rank) -> u32 {
        rank.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A basis vector `x_ab`, column `a`, row `b`.
///
/// The ordering is the reverse lexicographic order of the scheme: lower rows
/// are smaller, and within a row cells further right are smaller. `(1, 1)`,
/// i.e. `x_θ`, is the largest cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    a: u32,
    b: u32,
}

impl Cell {
    pub fn column(self) -> u32 {
        self.a
    }

    pub fn row(self) -> u32 {
        self.b
    }

    /// Barred-alphabet label such as `12`, `3_bar1` or `1_bar1_bar`.
    /// Indices are separated by a comma when either label has more than one
    /// digit (only possible for `n >= 10`).
    pub fn label(self, rank: Rank) -> String {
        let a = rank.index_label(self.a);
        let b = rank.index_label(self.b);
        if rank.get() >= 10 {
            format!("{a},{b}")
        } else {
            format!("{a}{b}")
        }
    }

    pub fn parse_label(rank: Rank, s: &str) -> Result<Cell> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (a, b) = if let Some((a, b)) = s.split_once(',') {
            (a, b)
        } else {
            let rest = s.get(1..).ok_or_else(|| err("expected two indices"))?;
            let split = if rest.starts_with("_bar") { 5 } else { 1 };
            if s.len() <= split || !s.is_char_boundary(split) {
                return Err(err("expected two indices"));
            }
            s.split_at(split)
        };
        let a = rank.parse_index(a).ok_or_else(|| err("bad column index"))?;
        let b = rank.parse_index(b).ok_or_else(|| err("bad row index"))?;
        rank.cell(a, b)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        other.b.cmp(&self.b).then(other.a.cmp(&self.a))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `c1 ≺ c2` in the cell order.
pub fn cell_order_less(c1: Cell, c2: Cell) -> bool {
    c1 < c2
}

/// A weight in ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(rank: Rank) -> Self {
        WeightVec(vec![0; rank.get() as usize])
    }

    /// `ρ = (n, n-1, ..., 1)`.
    pub fn rho(rank: Rank) -> Self {
        let n = rank.get() as i64;
        WeightVec((0..n).map(|i| n - i).collect())
    }

    /// `kθ = 2k ε_1`.
    pub fn theta_multiple(rank: Rank, k: i64) -> Self {
        let mut coords = vec![0; rank.get() as usize];
        coords[0] = 2 * k;
        WeightVec(coords)
    }

    /// `3θ - α_1 = 5ε_1 + ε_2`.
    pub fn three_theta_minus_alpha1(rank: Rank) -> Self {
        let mut coords = vec![0; rank.get() as usize];
        coords[0] = 5;
        coords[1] = 1;
        WeightVec(coords)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&x| x >= 0)
    }
}

/// Weyl dimension formula for C_n:
/// `∏_{α>0} <λ+ρ, α> / <ρ, α>` over `ε_i ± ε_j (i < j)` and `2ε_i`.
pub fn weyl_dim(rank: Rank, lambda: &WeightVec) -> Result<BigUint> {
    let n = rank.get() as usize;
    if lambda.0.len() != n {
        return Err(Error::WeightLength {
            expected: n,
            got: lambda.0.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominantWeight(lambda.0.clone()));
    }
    let rho = WeightVec::rho(rank).0;
    let shifted: Vec<i64> = lambda.0.iter().zip(&rho).map(|(l, r)| l + r).collect();

    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut factor = |top: i64, bottom: i64| {
        // Both are positive for a dominant λ.
        num *= top as u64;
        den *= bottom as u64;
    };
    for i in 0..n {
        for j in i + 1..n {
            factor(shifted[i] - shifted[j], rho[i] - rho[j]);
            factor(shifted[i] + shifted[j], rho[i] + rho[j]);
        }
        factor(shifted[i], rho[i]);
    }
    if !(&num % &den).is_zero() {
        return Err(Error::Internal(format!(
            "Weyl dimension {num}/{den} is not integral"
        )));
    }
    Ok(num / den)
}

/// `dim L(2θ) + dim L(3θ) + dim L(3θ - α*)`.
pub fn q3_dimension(rank: Rank) -> BigUint {
    [
        WeightVec::theta_multiple(rank, 2),
        WeightVec::theta_multiple(rank, 3),
        WeightVec::three_theta_minus_alpha1(rank),
    ]
    .iter()
    .map(|w| weyl_dim(rank, w).expect("dominant by construction"))
    .sum()
}

/// `2n C(2n+4, 5)`, the closed form of [`q3_dimension`].
pub fn q3_dimension_closed_form(rank: Rank) -> BigUint {
    let n = rank.get() as u64;
    BigUint::from(2 * n) * binomial(2 * n + 4, 5)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rank_below_two_is_rejected() {
        assert_eq!(Rank::new(1), Err(Error::InvalidRank(1)));
        assert!(Rank::new(0).is_err());
    }

    #[test]
    fn cell_bounds() {
        let r = rank(2);
        assert!(r.cell(1, 4).is_ok());
        assert!(r.cell(2, 1).is_err());
        assert!(r.cell(0, 1).is_err());
        assert!(r.cell(1, 5).is_err());
    }

    #[test]
    fn cell_count_is_dim() {
        for n in 2..=10 {
            let r = rank(n);
            assert_eq!(r.cells().count(), r.dim());
            assert_eq!(r.dim() as u32, n * (2 * n + 1));
        }
    }

    #[test]
    fn lower_row_is_smaller() {
        let r = rank(3);
        assert!(cell_order_less(r.cell(1, 2).unwrap(), r.cell(1, 1).unwrap()));
        let c = r.cell(2, 3).unwrap();
        assert!(!cell_order_less(c, c));
    }

    #[test]
    fn sorted_cells_n2() {
        let got: Vec<(u32, u32)> = rank(2)
            .sorted_cells()
            .into_iter()
            .map(|c| (c.column(), c.row()))
            .collect();
        let expected = vec![
            (4, 4),
            (3, 4),
            (2, 4),
            (1, 4),
            (3, 3),
            (2, 3),
            (1, 3),
            (2, 2),
            (1, 2),
            (1, 1),
        ];
        assert_eq!(got, expected);

        // pairwise comparison table agrees with positions in the sorted list
        for (i, x) in got.iter().enumerate() {
            for (j, y) in got.iter().enumerate() {
                let cx = rank(2).cell(x.0, x.1).unwrap();
                let cy = rank(2).cell(y.0, y.1).unwrap();
                assert_eq!(cell_order_less(cx, cy), i < j);
            }
        }
    }

    #[test]
    fn strict_total_order_exhaustive() {
        for n in 2..=3 {
            let cells: Vec<Cell> = rank(n).cells().collect();
            for &x in &cells {
                for &y in &cells {
                    let lt = cell_order_less(x, y);
                    let gt = cell_order_less(y, x);
                    assert_eq!([lt, gt, x == y].iter().filter(|&&t| t).count(), 1);
                    for &z in &cells {
                        if lt && cell_order_less(y, z) {
                            assert!(cell_order_less(x, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triangles() {
        let r3 = rank(3);
        assert!(r3.in_lower_triangle(r3.cell(3, 4).unwrap(), 4).unwrap());
        assert!(r3.in_upper_triangle(r3.cell(4, 6).unwrap(), 4).unwrap());
        let top = r3.cell(1, 1).unwrap();
        for r in 1..=6 {
            assert!(r3.in_lower_triangle(top, r).unwrap());
        }
        assert!(r3.cells().all(|c| r3.in_upper_triangle(c, 1).unwrap()));

        let r2 = rank(2);
        let lower = r2
            .cells()
            .filter(|&c| r2.in_lower_triangle(c, 2).unwrap())
            .count();
        assert_eq!(lower, 3);
        let upper = r2
            .cells()
            .filter(|&c| r2.in_upper_triangle(c, 3).unwrap())
            .count();
        assert_eq!(upper, 3);
    }

    #[test]
    fn triangle_row_out_of_range() {
        let r = rank(2);
        let c = r.cell(1, 1).unwrap();
        assert_eq!(
            r.in_lower_triangle(c, 0),
            Err(Error::RowOutOfRange { r: 0, max: 4 })
        );
        assert!(r.in_upper_triangle(c, 5).is_err());
    }

    #[test]
    fn triangle_split_iff_row_below_column() {
        for n in 2..=4 {
            let r = rank(n);
            for c1 in r.cells() {
                for c2 in r.cells() {
                    let split = (1..=r.size()).any(|k| {
                        r.in_lower_triangle(c1, k).unwrap() && r.in_upper_triangle(c2, k).unwrap()
                    });
                    assert_eq!(split, c1.row() <= c2.column());
                }
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        for n in [2, 3, 9, 10, 12] {
            let r = rank(n);
            for c in r.cells() {
                assert_eq!(Cell::parse_label(r, &c.label(r)).unwrap(), c);
            }
        }
        let r3 = rank(3);
        assert_eq!(r3.cell(3, 4).unwrap().label(r3), "33_bar");
        assert_eq!(r3.cell(6, 6).unwrap().label(r3), "1_bar1_bar");
        assert!(Cell::parse_label(r3, "4").is_err());
        assert!(Cell::parse_label(r3, "21").is_err());
    }

    #[test]
    fn weyl_dims_from_the_examples() {
        assert_eq!(
            weyl_dim(rank(2), &WeightVec::theta_multiple(rank(2), 2)).unwrap(),
            big(35)
        );
        assert_eq!(weyl_dim(rank(4), &WeightVec::zero(rank(4))).unwrap(), big(1));
        assert_eq!(
            weyl_dim(rank(3), &WeightVec(vec![5, 1, 0])).unwrap(),
            big(924)
        );
        // standard representation has dimension 2n
        assert_eq!(weyl_dim(rank(5), &WeightVec(vec![1, 0, 0, 0, 0])).unwrap(), big(10));
    }

    #[test]
    fn weyl_dim_rejects_bad_weights() {
        let r = rank(3);
        assert!(matches!(
            weyl_dim(r, &WeightVec(vec![0, 1, 0])),
            Err(Error::NonDominantWeight(_))
        ));
        assert!(weyl_dim(r, &WeightVec(vec![1, 1, -1])).is_err());
        assert!(matches!(
            weyl_dim(r, &WeightVec(vec![1, 0])),
            Err(Error::WeightLength { .. })
        ));
    }

    #[test]
    fn weyl_dims_match_closed_forms() {
        for n in 2..=10u32 {
            let r = rank(n);
            let m = n as u64;
            let d2 = weyl_dim(r, &WeightVec::theta_multiple(r, 2)).unwrap();
            let d3 = weyl_dim(r, &WeightVec::theta_multiple(r, 3)).unwrap();
            let d3a = weyl_dim(r, &WeightVec::three_theta_minus_alpha1(r)).unwrap();
            assert_eq!(d2, binomial(2 * m + 3, 4));
            assert_eq!(d3, binomial(2 * m + 5, 6));
            assert_eq!(
                d3a,
                BigUint::from((2 * m + 5) * (m - 1)) * binomial(2 * m + 3, 4) / 3u32
            );
            assert_eq!(q3_dimension(r), q3_dimension_closed_form(r));
        }
    }

    #[test]
    fn q3_dimension_small_ranks() {
        assert_eq!(q3_dimension(rank(2)), big(224));
        assert_eq!(q3_dimension(rank(3)), big(1512));
        assert_eq!(q3_dimension(rank(5)), big(10) * binomial(14, 5));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 4), big(35));
        assert_eq!(binomial(10, 5), big(252));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }
}
