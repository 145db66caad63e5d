//! Reducibility of products of two (or more) Speh multisegments.

use crate::error::{Error, Result};
use crate::segment::bounds;
use crate::speh::SpehParams;

use super::contact::is_crossed;
use super::verdict::{Clause, Criterion, Status, Verdict, Witness};

/// Componentwise strict inequality of the quadruples (false across lines).
pub fn strong_less(p1: &SpehParams, p2: &SpehParams) -> bool {
    p1.line() == p2.line()
        && p1.a() < p2.a()
        && p1.b() < p2.b()
        && p1.c() < p2.c()
        && p1.d() < p2.d()
}

/// `[A1,D1] ∪ [A2,D2]` is a segment.
pub fn supports_union_is_segment(p1: &SpehParams, p2: &SpehParams) -> bool {
    bounds::union(p1.hull(), p2.hull()).is_some()
}

/// The underlying sets `[A1,D1]` and `[A2,D2]` are linked segments.
pub fn supports_linked(p1: &SpehParams, p2: &SpehParams) -> bool {
    bounds::linked(p1.hull(), p2.hull())
}

/// Reducible iff the supports' union is a segment and one quadruple
/// strongly dominates the other. Never `Unknown`.
pub fn speh_reducible_by_dominance(p1: &SpehParams, p2: &SpehParams) -> Verdict {
    let v = |status, clause| Verdict::new(status, Criterion::StrongDominance, clause);
    if p1.line() != p2.line() {
        return v(Status::Irreducible, Clause::DifferentLines);
    }
    if !supports_union_is_segment(p1, p2) {
        return v(Status::Irreducible, Clause::UnionNotSegment);
    }
    if strong_less(p1, p2) {
        v(Status::Reducible, Clause::StrongDominance12)
    } else if strong_less(p2, p1) {
        v(Status::Reducible, Clause::StrongDominance21)
    } else {
        v(Status::Irreducible, Clause::NoStrongDominance)
    }
}

/// Reducible iff the supports are linked and the staircases are crossed.
/// Never `Unknown`.
pub fn speh_reducible_by_crossing(p1: &SpehParams, p2: &SpehParams) -> Verdict {
    let v = |status, clause| Verdict::new(status, Criterion::LinkedCrossed, clause);
    if p1.line() != p2.line() {
        return v(Status::Irreducible, Clause::DifferentLines);
    }
    if !supports_linked(p1, p2) {
        return v(Status::Irreducible, Clause::SupportsNotLinked);
    }
    if is_crossed(&p1.multisegment(), &p2.multisegment()) {
        v(Status::Reducible, Clause::LinkedAndCrossed)
    } else {
        v(Status::Irreducible, Clause::NotCrossed)
    }
}

/// A product of several staircases is irreducible iff every pair is.
/// On reducibility the evidence names the first offending pair (1-based).
pub fn product_irreducible(ps: &[SpehParams]) -> Result<Verdict> {
    if ps.is_empty() {
        return Err(Error::EmptyProduct);
    }
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let v = speh_reducible_by_dominance(&ps[i], &ps[j]);
            if v.is_reducible() {
                return Ok(Verdict::new(
                    Status::Reducible,
                    Criterion::Product,
                    Clause::PairReducible,
                )
                .with_witness(Witness::Pair {
                    first: i + 1,
                    second: j + 1,
                    inner: Box::new(v.evidence),
                }));
            }
        }
    }
    Ok(Verdict::new(
        Status::Irreducible,
        Criterion::Product,
        Clause::AllPairsIrreducible,
    ))
}
