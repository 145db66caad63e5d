//! Ladder multisegments indexed by partitions, their interval sets, and the
//! interval-set reducibility test for products of two ladders on one line.
//!
//! For a partition `α = (α₁ ≥ … ≥ α_r)` and an integer `x` the ladder has
//! rows `[x-i+1, x-i+αᵢ]`, and its interval set is every integer strictly
//! left of the support (`≤ x-r`) together with each row end plus one.

use std::collections::BTreeSet;
use std::fmt;

use crate::criteria::{Clause, Criterion, Status, Verdict, Witness};
use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::{bounds::Bounds, Line};
use crate::speh::SpehParams;

/// Weakly decreasing, nonempty list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// `width` repeated `rows` times.
    pub fn constant(width: u32, rows: usize) -> Result<Self> {
        Self::new(vec![width; rows])
    }

    /// Parses a comma list such as `4,4`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_constant(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A set of integers of the form `(-∞, ray_max] ∪ extra`, with every extra
/// element above `ray_max + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RaySet {
    ray_max: i64,
    extra: BTreeSet<i64>,
}

impl RaySet {
    /// Normalizes: extras at or below the ray are dropped and extras
    /// adjacent to the ray are absorbed into it.
    pub fn new(ray_max: i64, extra: impl IntoIterator<Item = i64>) -> Self {
        let mut extra: BTreeSet<i64> = extra.into_iter().filter(|&v| v > ray_max).collect();
        let mut ray_max = ray_max;
        while extra.remove(&(ray_max + 1)) {
            ray_max += 1;
        }
        RaySet { ray_max, extra }
    }

    pub fn ray_max(&self) -> i64 {
        self.ray_max
    }

    pub fn extra(&self) -> &BTreeSet<i64> {
        &self.extra
    }

    pub fn contains(&self, v: i64) -> bool {
        v <= self.ray_max || self.extra.contains(&v)
    }

    /// `self \ other`, always finite.
    pub fn difference(&self, other: &RaySet) -> BTreeSet<i64> {
        let from_ray = (other.ray_max + 1)..=self.ray_max;
        from_ray
            .chain(self.extra.iter().copied())
            .filter(|&v| !other.contains(v))
            .collect()
    }
}

/// `s1 \ s2`.
pub fn rayset_diff(s1: &RaySet, s2: &RaySet) -> BTreeSet<i64> {
    s1.difference(s2)
}

/// Smallest segment containing a finite set; `None` for the empty set.
pub fn hull(set: &BTreeSet<i64>) -> Option<Bounds> {
    Some((*set.first()?, *set.last()?))
}

/// Rows `[x-i+1, x-i+αᵢ]`, `i = 1..=r`.
pub fn ladder_multisegment(alpha: &Partition, x: i64, line: &Line) -> Multisegment {
    let rows = alpha.parts.iter().enumerate().map(|(k, &p)| {
        let i = k as i64 + 1;
        (x - i + 1, x - i + p as i64)
    });
    Multisegment::on_line(line, rows).expect("parts are positive")
}

/// `(-∞, x-r] ∪ {x-i+αᵢ+1}`.
pub fn i_set(alpha: &Partition, x: i64) -> RaySet {
    let r = alpha.rows() as i64;
    let extra = alpha
        .parts
        .iter()
        .enumerate()
        .map(|(k, &p)| x - (k as i64 + 1) + p as i64 + 1);
    RaySet::new(x - r, extra)
}

/// `(-∞, A-1] ∪ [B+1, D+1]` for a staircase.
pub fn i_set_speh(p: &SpehParams) -> RaySet {
    RaySet::new(p.a() - 1, (p.b() + 1)..=(p.d() + 1))
}

/// A ladder: partition plus the beginning of its top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ladder {
    pub alpha: Partition,
    pub x: i64,
}

impl Ladder {
    pub fn new(alpha: Partition, x: i64) -> Self {
        Ladder { alpha, x }
    }

    /// A staircase as the constant partition `(B-A+1)^(C-A+1)` at `x = C`.
    pub fn from_speh(p: &SpehParams) -> Self {
        Ladder {
            alpha: Partition::constant(p.width() as u32, p.rows()).expect("nonempty"),
            x: p.c(),
        }
    }

    pub fn i_set(&self) -> RaySet {
        i_set(&self.alpha, self.x)
    }

    pub fn multisegment(&self, line: &Line) -> Multisegment {
        ladder_multisegment(&self.alpha, self.x, line)
    }
}

fn meets_hull(set: &BTreeSet<i64>, of: &BTreeSet<i64>) -> bool {
    match hull(of) {
        Some((lo, hi)) => set.range(lo..=hi).next().is_some(),
        None => false,
    }
}

/// Hull form of the test. With `X = I(α,x) \ I(β,y)` and
/// `Y = I(β,y) \ I(α,x)`: for `y < x` reducible iff `[X] ∩ Y ≠ ∅`; for
/// `x < y` iff `X ∩ [Y] ≠ ∅`; for `x = y` iff both.
pub fn lnt_condition(l1: &Ladder, l2: &Ladder) -> bool {
    let (i1, i2) = (l1.i_set(), l2.i_set());
    let x_minus = i1.difference(&i2);
    let y_minus = i2.difference(&i1);
    let left = meets_hull(&y_minus, &x_minus);
    let right = meets_hull(&x_minus, &y_minus);
    match l2.x.cmp(&l1.x) {
        std::cmp::Ordering::Less => left,
        std::cmp::Ordering::Greater => right,
        std::cmp::Ordering::Equal => left && right,
    }
}

/// Pattern form of the same test. For `y < x`: some `i < j < k` with
/// `i, k ∈ X` and `j ∈ Y`; for `x < y` the roles swap; for `x = y`: some
/// `i < j < k < l` or `j < i < l < k` with `i, k ∈ X` and `j, l ∈ Y`.
pub fn lnt_condition_pattern(l1: &Ladder, l2: &Ladder) -> bool {
    let (i1, i2) = (l1.i_set(), l2.i_set());
    let xs: Vec<i64> = i1.difference(&i2).into_iter().collect();
    let ys: Vec<i64> = i2.difference(&i1).into_iter().collect();
    let sandwich = |outer: &[i64], inner: &[i64]| {
        outer
            .iter()
            .any(|&i| inner.iter().any(|&j| j > i && outer.iter().any(|&k| k > j)))
    };
    let interleave = |p: &[i64], q: &[i64]| {
        p.iter().any(|&i| {
            q.iter()
                .any(|&j| j > i && p.iter().any(|&k| k > j && q.iter().any(|&l| l > k)))
        })
    };
    match l2.x.cmp(&l1.x) {
        std::cmp::Ordering::Less => sandwich(&xs, &ys),
        std::cmp::Ordering::Greater => sandwich(&ys, &xs),
        std::cmp::Ordering::Equal => interleave(&xs, &ys) || interleave(&ys, &xs),
    }
}

/// Verdict for the product of two ladders. Never `Unknown`. Pairs of
/// constant partitions are staircases and can be cross-checked; the
/// witness marks other pairs as `LNT-only`.
pub fn lnt_reducible(l1: &Ladder, l2: &Ladder, same_line: bool) -> Verdict {
    if !same_line {
        return Verdict::new(Status::Irreducible, Criterion::Lnt, Clause::DifferentLines);
    }
    let (i1, i2) = (l1.i_set(), l2.i_set());
    let provenance = if l1.alpha.is_constant() && l2.alpha.is_constant() {
        "staircase"
    } else {
        "LNT-only"
    };
    let witness = Witness::IntervalSets {
        first_minus_second: i1.difference(&i2).into_iter().collect(),
        second_minus_first: i2.difference(&i1).into_iter().collect(),
        provenance: provenance.to_string(),
    };
    let v = if lnt_condition(l1, l2) {
        Verdict::new(Status::Reducible, Criterion::Lnt, Clause::LntConditionHolds)
    } else {
        Verdict::new(
            Status::Irreducible,
            Criterion::Lnt,
            Clause::LntConditionFails,
        )
    };
    v.with_witness(witness)
}
