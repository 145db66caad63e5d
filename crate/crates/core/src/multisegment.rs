//! Finite multisets of segments kept in canonical order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::segment::{bounds::Bounds, Line, Segment};

/// A finite multiset of segments.
///
/// Items are always sorted by (line, beginning, end), so two multisegments
/// are equal exactly when their item sequences are.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    items: Vec<Segment>,
}

impl Multisegment {
    pub fn new() -> Self {
        Multisegment { items: Vec::new() }
    }

    pub fn from_segments<I: IntoIterator<Item = Segment>>(segments: I) -> Self {
        let mut items: Vec<Segment> = segments.into_iter().collect();
        items.sort();
        Multisegment { items }
    }

    /// Builds a multisegment on one line from `(b, e)` pairs.
    pub fn on_line<I: IntoIterator<Item = Bounds>>(line: &Line, bounds: I) -> Result<Self> {
        let segments = bounds
            .into_iter()
            .map(|(b, e)| Segment::new(line.clone(), b, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_segments(segments))
    }

    /// Same as [`Multisegment::on_line`] on the default line. Panics on an
    /// empty segment; meant for tests and examples.
    pub fn rho<I: IntoIterator<Item = Bounds>>(bounds: I) -> Self {
        Self::on_line(&Line::default(), bounds).expect("valid segments")
    }

    pub fn segments(&self) -> &[Segment] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.items.iter()
    }

    /// Number of segments counted with multiplicity.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Total number of exponents counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.items.iter().map(Segment::len).sum()
    }

    pub fn lines(&self) -> Vec<Line> {
        let mut out: Vec<Line> = Vec::new();
        for s in &self.items {
            if out.last() != Some(s.line()) {
                out.push(s.line().clone());
            }
        }
        out
    }

    /// The line carrying every segment, if there is exactly one.
    pub fn single_line(&self) -> Option<&Line> {
        let first = self.items.first()?.line();
        self.items
            .iter()
            .all(|s| s.line() == first)
            .then_some(first)
    }

    /// Segments grouped per line as sorted `(b, e)` pairs.
    pub fn by_line(&self) -> BTreeMap<Line, Vec<Bounds>> {
        let mut out: BTreeMap<Line, Vec<Bounds>> = BTreeMap::new();
        for s in &self.items {
            out.entry(s.line().clone()).or_default().push(s.bounds());
        }
        out
    }

    /// Reassembles a multisegment from per-line `(b, e)` pairs. Pairs must
    /// satisfy `b <= e`.
    pub fn from_line_parts<'a, I>(parts: I) -> Self
    where
        I: IntoIterator<Item = (&'a Line, &'a [Bounds])>,
    {
        let mut items = Vec::new();
        for (line, bs) in parts {
            for &(b, e) in bs {
                debug_assert!(b <= e);
                items.push(Segment::new(line.clone(), b, e).expect("b <= e"));
            }
        }
        Self::from_segments(items)
    }

    /// Multiset sum.
    pub fn sum(&self, other: &Multisegment) -> Multisegment {
        Self::from_segments(self.items.iter().chain(other.items.iter()).cloned())
    }

    pub fn shifted(&self, k: i64) -> Multisegment {
        Multisegment {
            items: self.items.iter().map(|s| s.shifted(k)).collect(),
        }
    }

    /// Shifts every line so that its smallest beginning becomes 0.
    pub fn shift_normalized(&self) -> Multisegment {
        let mut items = Vec::with_capacity(self.items.len());
        for (line, bs) in self.by_line() {
            let lo = bs.iter().map(|s| s.0).min().unwrap_or(0);
            for (b, e) in bs {
                items.push(Segment::new(line.clone(), b - lo, e - lo).expect("b <= e"));
            }
        }
        Self::from_segments(items)
    }

    /// Each `[b, e]` on line `L` becomes `[-e, -b]` on the dual of `L`.
    pub fn contragredient(&self) -> Multisegment {
        Self::from_segments(self.items.iter().map(Segment::contragredient))
    }

    /// Exponent multiplicities, per line.
    pub fn support(&self) -> Support {
        let mut points: BTreeMap<Line, BTreeMap<i64, usize>> = BTreeMap::new();
        for s in &self.items {
            let line = points.entry(s.line().clone()).or_default();
            for x in s.begin()..=s.end() {
                *line.entry(x).or_default() += 1;
            }
        }
        Support { points }
    }

    /// The set of exponents, per line, as maximal disjoint segments.
    pub fn underlying_support(&self) -> BTreeMap<Line, Vec<Bounds>> {
        self.support()
            .points
            .into_iter()
            .map(|(line, pts)| (line, runs(pts.keys().copied())))
            .collect()
    }
}

fn runs(sorted: impl Iterator<Item = i64>) -> Vec<Bounds> {
    let mut out: Vec<Bounds> = Vec::new();
    for x in sorted {
        match out.last_mut() {
            Some(last) if last.1 + 1 == x => last.1 = x,
            _ => out.push((x, x)),
        }
    }
    out
}

impl Add for &Multisegment {
    type Output = Multisegment;
    fn add(self, rhs: &Multisegment) -> Multisegment {
        self.sum(rhs)
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<T: IntoIterator<Item = Segment>>(iter: T) -> Self {
        Self::from_segments(iter)
    }
}

impl<'a> IntoIterator for &'a Multisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_multisegment(self))
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_multisegment(self))
    }
}

/// Cuspidal support: exponent multiplicities per line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Support {
    pub points: BTreeMap<Line, BTreeMap<i64, usize>>,
}

impl Support {
    pub fn multiplicity(&self, line: &Line, x: i64) -> usize {
        self.points
            .get(line)
            .and_then(|p| p.get(&x))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The rectangle `a(n, d)`: `n` segments of length `d`, beginnings `0..n`.
pub fn a_nd(n: usize, d: usize, line: &Line) -> Result<Multisegment> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidSpeh {
            a: 0,
            b: d as i64 - 1,
            c: n as i64 - 1,
            d: (n + d) as i64 - 2,
        });
    }
    Multisegment::on_line(line, (0..n as i64).map(|i| (i, i + d as i64 - 1)))
}
