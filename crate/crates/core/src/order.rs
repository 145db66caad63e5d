//! The partial order generated by elementary linkings.
//!
//! `c ≺ b` when `c` is obtained from `b` by replacing a linked pair by its
//! union and intersection (dropping an empty intersection); `≤` is the
//! reflexive-transitive closure. Linked pairs never straddle lines, so every
//! search here runs per line and recombines.

use std::collections::BTreeSet;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::{bounds, bounds::Bounds, Line};

/// Visited-state cap used when no explicit budget is given.
pub const DEFAULT_BUDGET: usize = 200_000;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "MULTISEG_BUDGET";

/// [`DEFAULT_BUDGET`], unless `MULTISEG_BUDGET` holds a positive integer.
pub fn default_budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// Every `c` with `c ≺ b`.
pub fn elementary_linkings(b: &Multisegment) -> BTreeSet<Multisegment> {
    let parts = b.by_line();
    let mut out = BTreeSet::new();
    for (line, segs) in &parts {
        for moved in linkings(segs) {
            let rebuilt = parts.iter().map(|(l, s)| {
                if l == line {
                    (l, moved.as_slice())
                } else {
                    (l, s.as_slice())
                }
            });
            out.insert(Multisegment::from_line_parts(rebuilt));
        }
    }
    out
}

/// All multisegments reachable from a sorted single-line multisegment by one
/// elementary linking, each sorted.
pub(crate) fn linkings(segs: &[Bounds]) -> Vec<Vec<Bounds>> {
    let mut out: Vec<Vec<Bounds>> = Vec::new();
    for i in 0..segs.len() {
        if i > 0 && segs[i] == segs[i - 1] {
            continue;
        }
        for j in i + 1..segs.len() {
            if segs[j] == segs[j - 1] && j - 1 > i {
                continue;
            }
            let (s, t) = (segs[i], segs[j]);
            if !bounds::linked(s, t) {
                continue;
            }
            let mut next: Vec<Bounds> = Vec::with_capacity(segs.len());
            next.extend(segs[..i].iter().copied());
            next.extend(segs[i + 1..j].iter().copied());
            next.extend(segs[j + 1..].iter().copied());
            insert_sorted(&mut next, bounds::union(s, t).expect("linked"));
            if let Some(meet) = bounds::intersection(s, t) {
                insert_sorted(&mut next, meet);
            }
            out.push(next);
        }
    }
    out
}

fn insert_sorted(v: &mut Vec<Bounds>, x: Bounds) {
    let pos = v.partition_point(|y| *y < x);
    v.insert(pos, x);
}

/// Strict downset of a single line: every `c < segs`, breadth first.
/// `budget` caps the number of visited states (the start included).
pub(crate) fn line_downset(segs: &[Bounds], budget: usize) -> Result<FxHashSet<Vec<Bounds>>> {
    let mut root = segs.to_vec();
    root.sort_unstable();
    let mut seen: FxHashSet<Vec<Bounds>> = FxHashSet::default();
    let mut frontier = vec![root.clone()];
    let mut visited = 1usize;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for state in &frontier {
            for c in linkings(state) {
                if !seen.contains(&c) {
                    visited += 1;
                    if visited > budget {
                        return Err(Error::BudgetExceeded {
                            visited: visited - 1,
                        });
                    }
                    seen.insert(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    debug_assert!(!seen.contains(&root));
    Ok(seen)
}

/// `{c : c < b}`.
///
/// Fails with [`Error::BudgetExceeded`] once more than `budget` states have
/// been visited (counting every line, and the combined product when `b`
/// spans several lines).
pub fn strict_downset(b: &Multisegment, budget: usize) -> Result<BTreeSet<Multisegment>> {
    let parts = b.by_line();
    let mut per_line: Vec<(Line, Vec<Vec<Bounds>>)> = Vec::new();
    let mut visited = 0usize;
    for (line, segs) in &parts {
        let down = line_downset(segs, budget.saturating_sub(visited)).map_err(|e| match e {
            Error::BudgetExceeded { visited: v } => Error::BudgetExceeded {
                visited: visited + v,
            },
            other => other,
        })?;
        visited += down.len() + 1;
        let mut all: Vec<Vec<Bounds>> = down.into_iter().collect();
        all.push(segs.clone());
        all.sort();
        per_line.push((line.clone(), all));
    }
    let total = per_line
        .iter()
        .map(|(_, v)| v.len())
        .try_fold(1usize, |acc, n| acc.checked_mul(n));
    match total {
        Some(n) if n <= budget => {}
        _ => return Err(Error::BudgetExceeded { visited }),
    }
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; per_line.len()];
    loop {
        let pick = per_line
            .iter()
            .zip(&choice)
            .map(|((l, v), &k)| (l, v[k].as_slice()));
        let m = Multisegment::from_line_parts(pick);
        if &m != b {
            out.insert(m);
        }
        // odometer over the per-line choices
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < per_line[i].1.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `b1 ≤ b2`.
pub fn leq(b1: &Multisegment, b2: &Multisegment, budget: usize) -> Result<bool> {
    if b1 == b2 {
        return Ok(true);
    }
    lt(b1, b2, budget)
}

/// `b1 < b2`.
pub fn lt(b1: &Multisegment, b2: &Multisegment, budget: usize) -> Result<bool> {
    if b1 == b2 || b1.support() != b2.support() {
        return Ok(false);
    }
    let p1 = b1.by_line();
    let p2 = b2.by_line();
    let mut used = 0usize;
    for (line, segs2) in &p2 {
        let segs1 = &p1[line];
        if segs1 == segs2 {
            continue;
        }
        let down = line_downset(segs2, budget.saturating_sub(used))?;
        if !down.contains(segs1) {
            return Ok(false);
        }
        used += down.len() + 1;
    }
    Ok(true)
}
