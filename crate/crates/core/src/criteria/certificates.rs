//! Certificates for general multisegments: the involution non-additivity
//! test for reducibility and the downset scan for irreducibility.

use super::contact::is_crossed;
use crate::error::Error;
use crate::involution::{dual_bounds, mwa_left};
use crate::multisegment::Multisegment;
use crate::order::line_downset;
use crate::segment::Line;

use super::verdict::{Clause, Criterion, Status, Verdict, Witness};

/// `(Σ aᵢ)^t = Σ aᵢ^t`.
pub fn is_t_additive(parts: &[&Multisegment]) -> bool {
    let total = parts.iter().fold(Multisegment::new(), |acc, p| acc.sum(p));
    let separate = parts
        .iter()
        .fold(Multisegment::new(), |acc, p| acc.sum(&mwa_left(p)));
    mwa_left(&total) == separate
}

/// Reducible when `(a+b)^t ≠ a^t + b^t`; otherwise inconclusive.
pub fn rc_check(a: &Multisegment, b: &Multisegment) -> Verdict {
    let joint = mwa_left(&a.sum(b));
    let separate = mwa_left(a).sum(&mwa_left(b));
    if joint == separate {
        return Verdict::new(Status::Unknown, Criterion::Rc, Clause::TAdditive);
    }
    let differing = joint
        .iter()
        .find(|s| {
            joint.iter().filter(|t| t == s).count() != separate.iter().filter(|t| t == s).count()
        })
        .or_else(|| {
            separate.iter().find(|s| {
                joint.iter().filter(|t| t == s).count()
                    != separate.iter().filter(|t| t == s).count()
            })
        })
        .map(|s| format!("{s}@{}", s.line()))
        .unwrap_or_default();
    Verdict::new(Status::Reducible, Criterion::Rc, Clause::TNonadditive).with_witness(
        Witness::Duals {
            joint: joint.to_string(),
            separate: separate.to_string(),
            differing,
        },
    )
}

/// Irreducibility certificate for a t-additive sum.
///
/// Falls back to [`rc_check`] when the sum is not t-additive. Otherwise
/// scans every `c < a+b` and certifies irreducibility when no `c` has
/// `c^t < (a+b)^t`. A violating `c` or an exhausted budget gives
/// `Unknown`, never a wrong verdict.
pub fn badulescu_check(a: &Multisegment, b: &Multisegment, budget: usize) -> Verdict {
    let rc = rc_check(a, b);
    if rc.status == Status::Reducible {
        return rc;
    }
    let sum = a.sum(b);
    let mut scanned = (0usize, 0usize);
    // c^t < s^t with c < s can be checked one line at a time: the
    // involution is a bijection on each line that fixes the support.
    for (line, segs) in sum.by_line() {
        let result = line_violation(&line, &segs, budget);
        match result {
            Ok(Scan::Clean { below, below_dual }) => {
                scanned.0 += below;
                scanned.1 += below_dual;
            }
            Ok(Scan::Violation { below, below_dual }) => {
                return Verdict::new(
                    Status::Unknown,
                    Criterion::Badulescu,
                    Clause::DownsetViolation,
                )
                .with_witness(Witness::DownsetViolation {
                    below: below.to_string(),
                    below_dual: below_dual.to_string(),
                });
            }
            Err(visited) => {
                return Verdict::new(Status::Unknown, Criterion::Badulescu, Clause::Budget)
                    .with_witness(Witness::Budget { visited });
            }
        }
    }
    Verdict::new(
        Status::Irreducible,
        Criterion::Badulescu,
        Clause::DownsetClean,
    )
    .with_witness(Witness::Scanned {
        below: scanned.0,
        below_dual: scanned.1,
    })
}

/// RC for reducibility, then the crossing obstruction (uncrossed pairs
/// are irreducible), then [`badulescu_check`] for the crossed,
/// t-additive pairs that remain.
pub fn certificate_route(a: &Multisegment, b: &Multisegment, budget: usize) -> Verdict {
    let rc = rc_check(a, b);
    if rc.is_reducible() {
        return rc;
    }
    if !is_crossed(a, b) {
        return Verdict::new(
            Status::Irreducible,
            Criterion::LinkedCrossed,
            Clause::NotCrossed,
        );
    }
    badulescu_check(a, b, budget)
}

enum Scan {
    Clean {
        below: usize,
        below_dual: usize,
    },
    Violation {
        below: Multisegment,
        below_dual: Multisegment,
    },
}

fn line_violation(line: &Line, segs: &[(i64, i64)], budget: usize) -> Result<Scan, usize> {
    let exhausted = |e: Error| match e {
        Error::BudgetExceeded { visited } => visited,
        _ => 0,
    };
    let below = line_downset(segs, budget).map_err(exhausted)?;
    if below.is_empty() {
        return Ok(Scan::Clean {
            below: 0,
            below_dual: 0,
        });
    }
    let top_dual = dual_bounds(segs);
    let below_dual = line_downset(&top_dual, budget).map_err(exhausted)?;
    // iterate in sorted order so the reported witness is deterministic
    let mut candidates: Vec<&Vec<(i64, i64)>> = below.iter().collect();
    candidates.sort();
    for c in candidates {
        let cd = dual_bounds(c);
        if below_dual.contains(&cd) {
            let m =
                |v: &[(i64, i64)]| Multisegment::on_line(line, v.iter().copied()).expect("valid");
            return Ok(Scan::Violation {
                below: m(c),
                below_dual: m(&cd),
            });
        }
    }
    Ok(Scan::Clean {
        below: below.len(),
        below_dual: below_dual.len(),
    })
}
