use std::fmt;

use serde::Serialize;

/// Outcome of a reducibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Reducible,
    Irreducible,
    /// The certificate was inconclusive. Only the general-multisegment
    /// certificates produce this.
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Reducible => "Reducible",
            Status::Irreducible => "Irreducible",
            Status::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

/// Which test produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// Non-additivity of the involution on a sum.
    Rc,
    /// Downset scan certifying irreducibility of a t-additive sum.
    Badulescu,
    /// Support union is a segment and the quadruples strongly dominate.
    StrongDominance,
    /// Linked supports and crossed multisegments.
    LinkedCrossed,
    /// Interval-set test on ladder data.
    Lnt,
    /// Linking condition on `(t, a, b)` parameters.
    MwLinking,
    /// Pairwise test over a product of several factors.
    Product,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("serializable");
        f.write_str(s.as_str().unwrap_or_default())
    }
}

/// Identifier of the clause that decided a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    DifferentLines,
    UnionNotSegment,
    NoStrongDominance,
    #[serde(rename = "strong-dominance-12")]
    StrongDominance12,
    #[serde(rename = "strong-dominance-21")]
    StrongDominance21,
    SupportsNotLinked,
    NotCrossed,
    LinkedAndCrossed,
    #[serde(rename = "t-nonadditive")]
    TNonadditive,
    #[serde(rename = "t-additive")]
    TAdditive,
    DownsetClean,
    DownsetViolation,
    Budget,
    LntConditionHolds,
    LntConditionFails,
    Linked,
    NotLinked,
    PairReducible,
    AllPairsIrreducible,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("serializable");
        f.write_str(s.as_str().unwrap_or_default())
    }
}

/// Data backing a verdict. Multisegments appear in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `(a+b)^t` next to `a^t + b^t`, and a segment in one but not the other.
    Duals {
        joint: String,
        separate: String,
        differing: String,
    },
    /// `c < a+b` with `c^t < (a+b)^t`.
    DownsetViolation { below: String, below_dual: String },
    /// Number of downset states visited before giving up.
    Budget { visited: usize },
    /// Indices (from 1) of the first offending pair of a product.
    Pair {
        first: usize,
        second: usize,
        inner: Box<Evidence>,
    },
    /// The two finite differences of the interval sets.
    IntervalSets {
        first_minus_second: Vec<i64>,
        second_minus_first: Vec<i64>,
        provenance: String,
    },
    /// Downset sizes that were scanned.
    Scanned { below: usize, below_dual: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub criterion: Criterion,
    pub clause: Clause,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn new(status: Status, criterion: Criterion, clause: Clause) -> Self {
        Verdict {
            status,
            evidence: Evidence {
                criterion,
                clause,
                witness: None,
            },
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.evidence.witness = Some(w);
        self
    }

    pub fn is_reducible(&self) -> bool {
        self.status == Status::Reducible
    }

    pub fn is_irreducible(&self) -> bool {
        self.status == Status::Irreducible
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}: {})",
            self.status, self.evidence.criterion, self.evidence.clause
        )
    }
}
