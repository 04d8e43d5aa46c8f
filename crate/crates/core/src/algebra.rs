//! Degree profiles, Young-diagram indices, and finitely generated abelian
//! groups.
//!
//! Everything downstream consumes the two combinatorial indices defined here:
//! `N(p)`, the area of the Young diagram `(d1+1, ..., dn+1)` strictly left of
//! column `p+1`, and `Υ(p)`, the number of degrees `d_i >= p` with the same
//! parity as `p`. Groups are kept in a canonical sparse form so structural
//! equality is semantic equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sorted degree sequence `d1 >= d2 >= ... >= dn` of a homogeneous system.
///
/// Degrees absent from the profile extend as zero: `degree(k) = 0` for
/// `k > n`. The closed-form tables are stated with `d2` and `d3` present even
/// for one- and two-form systems, and the zero extension reproduces those
/// degenerations exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    degrees: Vec<u32>,
}

impl DegreeProfile {
    /// Builds a profile from raw degrees, sorting them non-increasing.
    ///
    /// Degree-zero constants would change the geometry of the resultant
    /// variety, so every entry must be at least 1.
    pub fn new<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut degrees = Vec::new();
        for d in raw {
            if d < 1 {
                return Err(Error::NonPositiveDegree(d));
            }
            degrees.push(d as u32);
        }
        if degrees.is_empty() {
            return Err(Error::EmptyProfile);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeProfile { degrees })
    }

    /// Number of forms in the system.
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Dimension `D = sum (d_i + 1)` of the coefficient space.
    pub fn total_dim(&self) -> u32 {
        self.degrees.iter().map(|d| d + 1).sum()
    }

    /// `d(k)`, 1-based, extended by zero for `k > n`.
    pub fn degree(&self, k: usize) -> u32 {
        assert!(k >= 1, "degree index is 1-based");
        self.degrees.get(k - 1).copied().unwrap_or(0)
    }

    /// `N(p)`: area of the Young diagram `(d1+1, ..., dn+1)` strictly left of
    /// column `p+1`, i.e. `sum_i min(d_i + 1, p)`. This is the codimension of
    /// the stratum of systems vanishing on `p` chosen lines.
    pub fn young_area(&self, p: u32) -> u32 {
        assert!(p >= 1, "young_area is defined for p >= 1");
        self.degrees.iter().map(|d| (d + 1).min(p)).sum()
    }

    /// `Υ(p)`: number of degrees `d_i >= p` with `d_i ≡ p (mod 2)`. Its
    /// parity decides whether the coefficient bundle over the configuration
    /// space of `p` root lines is orientable.
    pub fn parity_matches(&self, p: u32) -> u32 {
        assert!(p >= 1, "parity_matches is defined for p >= 1");
        self.degrees
            .iter()
            .filter(|&&d| d >= p && d % 2 == p % 2)
            .count() as u32
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Finitely generated abelian group in canonical form: a free rank plus a
/// multiset of cyclic torsion orders, each `>= 2`, sorted ascending.
///
/// Only order-2 torsion ever arises from the tables computed here, but the
/// type stores arbitrary orders so tests can assert that fact instead of
/// assuming it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    free_rank: u32,
    torsion: Vec<u64>,
}

impl FinAbGroup {
    pub fn zero() -> Self {
        FinAbGroup::default()
    }

    /// The free group `Z^rank`.
    pub fn free(rank: u32) -> Self {
        FinAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// The cyclic group `Z/order`.
    pub fn cyclic(order: u64) -> Self {
        assert!(order >= 2, "cyclic torsion order must be at least 2");
        FinAbGroup {
            free_rank: 0,
            torsion: vec![order],
        }
    }

    /// Builds `Z^rank + Z/t1 + Z/t2 + ...`, canonicalizing the order list.
    pub fn with_torsion(rank: u32, mut torsion: Vec<u64>) -> Self {
        assert!(torsion.iter().all(|&t| t >= 2));
        torsion.sort_unstable();
        FinAbGroup {
            free_rank: rank,
            torsion,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Direct sum: ranks add, torsion multisets merge.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = Vec::with_capacity(self.torsion.len() + other.torsion.len());
        torsion.extend_from_slice(&self.torsion);
        torsion.extend_from_slice(&other.torsion);
        torsion.sort_unstable();
        FinAbGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion,
        }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sparse graded group: dimension -> [`FinAbGroup`], zero groups omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedGroup {
    entries: BTreeMap<u32, FinAbGroup>,
}

impl GradedGroup {
    pub fn new() -> Self {
        GradedGroup::default()
    }

    /// Direct-sums `group` into dimension `dim`, dropping zero summands.
    pub fn put(mut self, dim: u32, group: FinAbGroup) -> Self {
        if group.is_zero() {
            return self;
        }
        match self.entries.remove(&dim) {
            Some(existing) => {
                self.entries.insert(dim, existing.direct_sum(&group));
            }
            None => {
                self.entries.insert(dim, group);
            }
        }
        self
    }

    pub fn get(&self, dim: u32) -> Option<&FinAbGroup> {
        self.entries.get(&dim)
    }

    /// Free rank in dimension `dim` (0 when the slot is empty).
    pub fn rank_at(&self, dim: u32) -> u32 {
        self.entries.get(&dim).map_or(0, FinAbGroup::free_rank)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &FinAbGroup)> {
        self.entries.iter().map(|(&d, g)| (d, g))
    }

    /// Dimension-wise direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (dim, g) in other.iter() {
            out = out.put(dim, g.clone());
        }
        out
    }

    /// Rational Euler characteristic: torsion contributes nothing.
    pub fn euler_char(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&d, g)| {
                let sign = if d % 2 == 0 { 1 } else { -1 };
                sign * i64::from(g.free_rank())
            })
            .sum()
    }

    /// Rank vector over the rationals, sorted by dimension; torsion-only
    /// entries are dropped.
    pub fn poincare(&self) -> Vec<(u32, u32)> {
        self.entries
            .iter()
            .filter(|(_, g)| g.free_rank() > 0)
            .map(|(&d, g)| (d, g.free_rank()))
            .collect()
    }
}
