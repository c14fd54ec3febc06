//! Exact truncated q-series and the three sides of the Rogers-Ramanujan type
//! identity for the basic C_n^(1)-module.
//!
//! - [`product_side`]: the principally specialized product
//!   `∏_{j odd} (1-q^j)^{-1} ∏_{j ≢ 0,±1 mod n+2} (1-q^{2j})^{-1}`.
//! - [`congruence_side`]: ordinary partitions with no part `≡ 0, ±2 mod 2n+4`,
//!   counted by the divisor-sum recurrence (no product expansion).
//! - [`rr_side`]: colored partitions over the alphabet `D_n` obeying the
//!   difference conditions, counted by backtracking.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::root_system::{Cell, Rank};

/// A power series `Σ c_i q^i` known up to and including `q^trunc`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from coefficients, padding with zeros or dropping
    /// terms beyond `trunc`.
    pub fn from_coeffs<I, T>(coeffs: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(trunc);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    /// `1 / (1 - q^d)`.
    pub fn geometric(d: usize, trunc: usize) -> Self {
        assert!(d > 0, "geometric series needs a positive step");
        let mut s = Self::zero(trunc);
        for i in (0..=trunc).step_by(d) {
            s.coeffs[i] = BigInt::one();
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies in place by `1 / (1 - q^d)`.
    pub fn divide_by_one_minus_q_pow(&mut self, d: usize) {
        assert!(d > 0, "geometric series needs a positive step");
        for i in d..self.coeffs.len() {
            let prev = self.coeffs[i - d].clone();
            self.coeffs[i] += prev;
        }
    }

    fn common_trunc(&self, other: &QSeries) -> usize {
        self.trunc().min(other.trunc())
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let t = self.common_trunc(rhs);
        QSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let t = self.common_trunc(rhs);
        let mut out = QSeries::zero(t);
        for (i, a) in self.coeffs[..=t].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=t - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

/// Whether an ordinary part `m` is allowed: `m ≢ 0, ±2 (mod 2n+4)`.
pub fn part_allowed(rank: Rank, m: usize) -> bool {
    let modulus = 2 * rank.get() as usize + 4;
    let r = m % modulus;
    r != 0 && r != 2 && r != modulus - 2
}

/// The product formula, expanded factor by factor.
pub fn product_side(rank: Rank, n_max: usize) -> QSeries {
    let modulus = rank.get() as usize + 2;
    let mut s = QSeries::one(n_max);
    for j in (1..=n_max).step_by(2) {
        s.divide_by_one_minus_q_pow(j);
    }
    for j in (1..=n_max / 2).filter(|j| {
        let r = j % modulus;
        r != 0 && r != 1 && r != modulus - 1
    }) {
        s.divide_by_one_minus_q_pow(2 * j);
    }
    s
}

/// Partitions into allowed parts, via `N p(N) = Σ_k σ(k) p(N-k)` where
/// `σ(k)` sums the allowed divisors of `k`.
pub fn congruence_side(rank: Rank, n_max: usize) -> QSeries {
    let sigma: Vec<BigInt> = (0..=n_max)
        .map(|k| {
            if k == 0 {
                return BigInt::zero();
            }
            let s: usize = (1..=k).filter(|d| k % d == 0 && part_allowed(rank, *d)).sum();
            BigInt::from(s)
        })
        .collect();
    let mut c = vec![BigInt::one()];
    for total in 1..=n_max {
        let acc: BigInt = (1..=total).map(|k| &sigma[k] * &c[total - k]).sum();
        let (q, r) = acc.div_rem(&BigInt::from(total));
        assert!(r.is_zero(), "divisor-sum recurrence must divide exactly");
        c.push(q);
    }
    QSeries { coeffs: c }
}

/// An element `m_b` of the colored alphabet `D_n`, the principal degree
/// `m = a + b - 1 + 2n(j-1)` of `X_ab(-j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredInteger {
    pub m: usize,
    pub b: u32,
    pub a: u32,
    pub j: u32,
}

impl ColoredInteger {
    /// Recovers `(a, j)` from `(m, b)`; `None` when `m_b` is not in `D_n`.
    pub fn from_degree(rank: Rank, m: usize, b: u32) -> Option<Self> {
        let size = rank.size() as usize;
        if b < 1 || b as usize > size || m < b as usize {
            return None;
        }
        let offset = m - b as usize;
        let j = offset / size + 1;
        let a = offset % size + 1;
        (a <= b as usize).then_some(ColoredInteger {
            m,
            b,
            a: a as u32,
            j: j as u32,
        })
    }

    pub fn from_cell(rank: Rank, cell: Cell, j: u32) -> Self {
        let (a, b) = (cell.column(), cell.row());
        ColoredInteger {
            m: principal_degree(rank, cell, j),
            b,
            a,
            j,
        }
    }

    pub fn cell(self, rank: Rank) -> Cell {
        rank.cell(self.a, self.b).expect("alphabet cells are valid")
    }

    pub fn label(self) -> String {
        format!("{}_{}", self.m, self.b)
    }
}

/// `|X_ab(-j)| = a + b - 1 + 2n(j - 1)`.
pub fn principal_degree(rank: Rank, cell: Cell, j: u32) -> usize {
    (cell.column() + cell.row() - 1 + rank.size() * (j - 1)) as usize
}

/// All `m_b ∈ D_n` with `m <= n_max`, sorted by `(m, b)`.
pub fn colored_alphabet(rank: Rank, n_max: usize) -> Vec<ColoredInteger> {
    let mut out: Vec<ColoredInteger> = (1..=n_max)
        .flat_map(|m| (1..=rank.size()).filter_map(move |b| ColoredInteger::from_degree(rank, m, b)))
        .collect();
    out.sort();
    out
}

/// The difference conditions: `f_x + f_y <= 1` for such pairs.
///
/// - `x = m_ab(-j-1)`, `y = m'_a'b'(-j)` with `b <= a'`;
/// - `x = m_ab(-j)`, `y = m'_a'b'(-j)` with `b <= b'` and `a >= a'`.
///
/// The second rule applied to `x = y` forbids repeated letters.
pub fn forbidden_pair(x: &ColoredInteger, y: &ColoredInteger) -> bool {
    if x.j == y.j {
        (x.b <= y.b && x.a >= y.a) || (y.b <= x.b && y.a >= x.a)
    } else if x.j == y.j + 1 {
        x.b <= y.a
    } else if y.j == x.j + 1 {
        y.b <= x.a
    } else {
        false
    }
}

/// Counts colored partitions over `D_n` with the difference conditions, by
/// depth-first search over the alphabet in decreasing `|m_b|`.
pub fn rr_side(rank: Rank, n_max: usize) -> QSeries {
    let mut alphabet = colored_alphabet(rank, n_max);
    alphabet.reverse();

    fn go(alphabet: &[ColoredInteger], start: usize, sum: usize, chosen: &mut Vec<ColoredInteger>, counts: &mut [u64]) {
        counts[sum] += 1;
        let room = counts.len() - 1 - sum;
        let first = start.max(alphabet.partition_point(|x| x.m > room));
        for (k, x) in alphabet.iter().enumerate().skip(first) {
            if chosen.iter().any(|y| forbidden_pair(x, y)) {
                continue;
            }
            chosen.push(*x);
            go(alphabet, k + 1, sum + x.m, chosen, counts);
            chosen.pop();
        }
    }

    // split on the largest letter so branches can run in parallel
    let branches: Vec<Vec<u64>> = (0..alphabet.len())
        .into_par_iter()
        .map(|k| {
            let mut counts = vec![0u64; n_max + 1];
            let x = alphabet[k];
            let mut chosen = vec![x];
            go(&alphabet, k + 1, x.m, &mut chosen, &mut counts);
            counts
        })
        .collect();
    let mut counts = vec![0u64; n_max + 1];
    counts[0] = 1;
    for branch in branches {
        for (c, b) in counts.iter_mut().zip(branch) {
            *c += b;
        }
    }
    QSeries::from_coeffs(counts, n_max)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(with = "crate::decimal")]
    pub product: BigInt,
    #[serde(with = "crate::decimal")]
    pub congruence: BigInt,
    #[serde(with = "crate::decimal")]
    pub rr: BigInt,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: u32,
    pub max: usize,
    pub all_equal: bool,
    pub rows: Vec<IdentityRow>,
}

/// Compares the three sides coefficient by coefficient for `N <= n_max`.
pub fn identity_report(rank: Rank, n_max: usize) -> IdentityReport {
    let product = product_side(rank, n_max);
    let congruence = congruence_side(rank, n_max);
    let rr = rr_side(rank, n_max);
    let rows: Vec<IdentityRow> = (0..=n_max)
        .map(|i| {
            let (p, c, r) = (product.coeff(i), congruence.coeff(i), rr.coeff(i));
            IdentityRow {
                n: i,
                equal: p == c && c == r,
                product: p.clone(),
                congruence: c.clone(),
                rr: r.clone(),
            }
        })
        .collect();
    IdentityReport {
        n: rank.get(),
        max: n_max,
        all_equal: rows.iter().all(|r| r.equal),
        rows,
    }
}
