//! Segments on labeled cuspidal lines.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label of a cuspidal line.
///
/// Exponents on different lines never interact. A trailing `~` marks the
/// contragredient line; [`Line::dual`] toggles it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Line(Arc<str>);

impl Line {
    pub const DEFAULT: &'static str = "rho";

    pub fn new(label: &str) -> Result<Self> {
        let ok = !label.is_empty()
            && !label
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '[' | ']' | ',' | '+' | '@'));
        if ok {
            Ok(Line(Arc::from(label)))
        } else {
            Err(Error::InvalidLine(label.to_string()))
        }
    }

    pub fn label(&self) -> &str {
        &self.0
    }

    pub fn dual(&self) -> Line {
        match self.0.strip_suffix('~') {
            Some(base) if !base.is_empty() => Line(Arc::from(base)),
            _ => Line(Arc::from(format!("{}~", self.0))),
        }
    }
}

impl Default for Line {
    fn default() -> Self {
        Line(Arc::from(Self::DEFAULT))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl TryFrom<String> for Line {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Line::new(&s)
    }
}

impl From<Line> for String {
    fn from(l: Line) -> String {
        l.0.to_string()
    }
}

/// An integer segment `[b, e]` with `b <= e` on a line.
///
/// The derived ordering is the canonical one: line label, then beginning,
/// then end.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    line: Line,
    b: i64,
    e: i64,
}

impl Segment {
    pub fn new(line: Line, b: i64, e: i64) -> Result<Self> {
        if b > e {
            return Err(Error::EmptySegment { b, e });
        }
        Ok(Segment { line, b, e })
    }

    /// Segment on the default line `rho`. Panics if `b > e`.
    pub fn rho(b: i64, e: i64) -> Self {
        Segment::new(Line::default(), b, e).expect("segment with b <= e")
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    /// Beginning exponent.
    pub fn begin(&self) -> i64 {
        self.b
    }

    /// End exponent.
    pub fn end(&self) -> i64 {
        self.e
    }

    pub fn bounds(&self) -> (i64, i64) {
        (self.b, self.e)
    }

    /// Number of exponents in the segment.
    pub fn len(&self) -> usize {
        (self.e - self.b + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        self.b <= x && x <= self.e
    }

    pub fn shifted(&self, k: i64) -> Segment {
        Segment {
            line: self.line.clone(),
            b: self.b + k,
            e: self.e + k,
        }
    }

    /// `[-e, -b]` on the dual line.
    pub fn contragredient(&self) -> Segment {
        Segment {
            line: self.line.dual(),
            b: -self.e,
            e: -self.b,
        }
    }

    /// The union, when it is again a segment on the same line.
    pub fn union(&self, other: &Segment) -> Option<Segment> {
        if self.line != other.line {
            return None;
        }
        bounds::union(self.bounds(), other.bounds()).map(|(b, e)| Segment {
            line: self.line.clone(),
            b,
            e,
        })
    }

    pub fn intersection(&self, other: &Segment) -> Option<Segment> {
        if self.line != other.line {
            return None;
        }
        bounds::intersection(self.bounds(), other.bounds()).map(|(b, e)| Segment {
            line: self.line.clone(),
            b,
            e,
        })
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.b, self.e)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]@{}", self.b, self.e, self.line)
    }
}

/// True iff both segments lie on one line, their union is a segment, and
/// the union is neither of them.
pub fn is_linked(s1: &Segment, s2: &Segment) -> bool {
    s1.line == s2.line && bounds::linked(s1.bounds(), s2.bounds())
}

/// `s1` precedes `s2`: they are linked and `s1` starts first.
pub fn precedes(s1: &Segment, s2: &Segment) -> bool {
    s1.line == s2.line && bounds::precedes(s1.bounds(), s2.bounds())
}

/// Disjoint segments on one line whose union is a segment.
pub fn is_juxtaposed(s1: &Segment, s2: &Segment) -> bool {
    s1.line == s2.line && bounds::juxtaposed(s1.bounds(), s2.bounds())
}

/// The same predicates on bare `(b, e)` pairs of a single line. The hot
/// loops of the involution and the order work on these.
pub mod bounds {
    pub type Bounds = (i64, i64);

    pub fn union(s: Bounds, t: Bounds) -> Option<Bounds> {
        if s.0 <= t.1 + 1 && t.0 <= s.1 + 1 {
            Some((s.0.min(t.0), s.1.max(t.1)))
        } else {
            None
        }
    }

    pub fn intersection(s: Bounds, t: Bounds) -> Option<Bounds> {
        let (b, e) = (s.0.max(t.0), s.1.min(t.1));
        (b <= e).then_some((b, e))
    }

    pub fn linked(s: Bounds, t: Bounds) -> bool {
        match union(s, t) {
            Some(u) => u != s && u != t,
            None => false,
        }
    }

    pub fn precedes(s: Bounds, t: Bounds) -> bool {
        linked(s, t) && s.0 < t.0
    }

    pub fn juxtaposed(s: Bounds, t: Bounds) -> bool {
        s.1 + 1 == t.0 || t.1 + 1 == s.0
    }
}
