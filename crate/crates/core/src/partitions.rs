//! Colored partitions over the basis `x_ab(j)` of the loop algebra.
//!
//! A [`ColoredPartition`] is a finite multiset of [`Part`]s kept sorted
//! ascending in the part order, so equal multisets have equal
//! representations. The total order on partitions compares, in turn,
//! length (longer is smaller), degree, shape and colors; shapes and colors
//! are compared in reverse lexicographic order, i.e. from the largest part
//! downwards.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leading_terms::LeadingTermSet;
use crate::root_system::{Cell, Rank};

/// A part `x_ab(deg)`. Parts of `P_{<0}` have negative `deg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub cell: Cell,
    pub deg: i32,
}

impl Part {
    pub fn new(cell: Cell, deg: i32) -> Self {
        Part { cell, deg }
    }

    pub fn label(self, rank: Rank) -> String {
        format!("{}({})", self.cell.label(rank), self.deg)
    }

    pub fn parse(rank: Rank, s: &str) -> Result<Part> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (cell, rest) = s.split_once('(').ok_or_else(|| err("missing '('"))?;
        let deg = rest
            .strip_suffix(')')
            .ok_or_else(|| err("missing ')'"))?
            .parse()
            .map_err(|_| err("bad degree"))?;
        Ok(Part::new(Cell::parse_label(rank, cell)?, deg))
    }
}

impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then(self.cell.cmp(&other.cell))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn part_order_less(p1: Part, p2: Part) -> bool {
    p1 < p2
}

/// A colored partition in canonical (sorted) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Part>", into = "Vec<Part>")]
pub struct ColoredPartition {
    parts: Vec<Part>,
}

impl ColoredPartition {
    pub fn new(mut parts: Vec<Part>) -> Self {
        parts.sort();
        ColoredPartition { parts }
    }

    /// The empty partition, the unit of the monoid.
    pub fn empty() -> Self {
        ColoredPartition::default()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|π| = Σ j_i`.
    pub fn degree(&self) -> i64 {
        self.parts.iter().map(|p| p.deg as i64).sum()
    }

    /// Degrees of the parts, ascending.
    pub fn shape(&self) -> Vec<i32> {
        self.parts.iter().map(|p| p.deg).collect()
    }

    pub fn colors(&self) -> Vec<Cell> {
        self.parts.iter().map(|p| p.cell).collect()
    }

    /// The product `κρ`: multiset union.
    pub fn multiply(&self, other: &ColoredPartition) -> ColoredPartition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] <= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        ColoredPartition { parts }
    }

    /// Whether `rho ⊂ self`, i.e. `self = κρ` for some `κ`.
    pub fn contains(&self, rho: &ColoredPartition) -> bool {
        let mut it = self.parts.iter();
        rho.parts.iter().all(|p| it.by_ref().any(|q| q == p))
    }

    pub fn render(&self, rank: Rank) -> String {
        if self.parts.is_empty() {
            return "1".to_string();
        }
        self.parts
            .iter()
            .map(|p| p.label(rank))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Inverse of [`ColoredPartition::render`].
    pub fn parse(rank: Rank, s: &str) -> Result<ColoredPartition> {
        let s = s.trim();
        if s == "1" {
            return Ok(ColoredPartition::empty());
        }
        let parts = s
            .split('*')
            .map(|p| Part::parse(rank, p.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ColoredPartition::new(parts))
    }

    /// Whether `self ∈ RR`: no leading term embeds in it.
    pub fn is_rr(&self, leading_terms: &LeadingTermSet) -> Result<bool> {
        if let Some(p) = self.parts.iter().find(|p| p.deg >= 0) {
            return Err(Error::NonNegativeDegree(p.deg));
        }
        // Leading terms are quadratic, so only 2-element sub-multisets matter.
        for (i, &p) in self.parts.iter().enumerate() {
            for &q in &self.parts[i + 1..] {
                if leading_terms.is_leading_pair(p, q) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl From<Vec<Part>> for ColoredPartition {
    fn from(parts: Vec<Part>) -> Self {
        ColoredPartition::new(parts)
    }
}

impl From<ColoredPartition> for Vec<Part> {
    fn from(pi: ColoredPartition) -> Self {
        pi.parts
    }
}

fn reverse_lex<T: Ord>(x: &[T], y: &[T]) -> Ordering {
    x.iter().rev().cmp(y.iter().rev())
}

impl Ord for ColoredPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| reverse_lex(&self.shape(), &other.shape()))
            .then_with(|| reverse_lex(&self.colors(), &other.colors()))
    }
}

impl PartialOrd for ColoredPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn partition_order_less(pi: &ColoredPartition, kappa: &ColoredPartition) -> bool {
    pi < kappa
}

pub fn multiply(kappa: &ColoredPartition, rho: &ColoredPartition) -> ColoredPartition {
    kappa.multiply(rho)
}

/// Number of embeddings `rho ⊂ pi`: 1 if contained, else 0.
pub fn embeddings_of(rho: &ColoredPartition, pi: &ColoredPartition) -> u32 {
    u32::from(pi.contains(rho))
}

pub fn is_rr(pi: &ColoredPartition, leading_terms: &LeadingTermSet) -> Result<bool> {
    pi.is_rr(leading_terms)
}

/// All colored partitions with the given shape (as a multiset of degrees).
pub fn enumerate_with_shape(rank: Rank, shape: &[i32]) -> Vec<ColoredPartition> {
    let mut by_degree: BTreeMap<i32, usize> = BTreeMap::new();
    for &d in shape {
        *by_degree.entry(d).or_default() += 1;
    }
    let cells = rank.sorted_cells();
    let mut out = vec![Vec::new()];
    for (&deg, &mult) in &by_degree {
        let blocks = multisets(&cells, mult);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Part>| {
                blocks.iter().map(move |block| {
                    let mut parts = prefix.clone();
                    parts.extend(block.iter().map(|&c| Part::new(c, deg)));
                    parts
                })
            })
            .collect();
    }
    out.into_iter().map(ColoredPartition::new).collect()
}

/// Sorted multisets of size `k` over `items`.
fn multisets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], start: usize, k: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, k, &mut Vec::with_capacity(k), &mut out);
    out
}
