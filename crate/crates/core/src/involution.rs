//! The Zelevinsky involution `a -> a^t` computed by the two
//! Moeglin-Waldspurger algorithms.
//!
//! The end-descending algorithm ([`mwa_left`]) repeatedly picks the segment
//! with the largest end (ties: largest beginning) and then, one stage at a
//! time, a segment ending one lower that precedes the previous pick (largest
//! beginning wins). A step with `k` stages starting at end `x` produces
//! `[x-k+1, x]` and shortens every used segment by dropping its end.
//! The beginning-ascending algorithm ([`mwa_right`]) is the mirror image.
//! Both act line by line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::{bounds::Bounds, Line, Segment};

/// Which of the two algorithms to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Descending ends, shortening segments at their end.
    Left,
    /// Ascending beginnings, shortening segments at their beginning.
    Right,
}

/// One step of an algorithm run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepTrace {
    /// The segment of `a^t` produced by this step.
    pub produced: Segment,
    /// Segments consumed, one per stage, in stage order.
    pub used: Vec<Segment>,
    /// What is left for the following steps.
    pub remainder: Multisegment,
}

/// JSON shape of a trace entry: `{"produced": [b,e], "used": [[b,e],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTraceJson {
    pub line: Line,
    pub produced: [i64; 2],
    pub used: Vec<[i64; 2]>,
}

impl StepTrace {
    pub fn to_json(&self) -> StepTraceJson {
        StepTraceJson {
            line: self.produced.line().clone(),
            produced: [self.produced.begin(), self.produced.end()],
            used: self.used.iter().map(|s| [s.begin(), s.end()]).collect(),
        }
    }
}

/// First step of the end-descending algorithm on a single-line multisegment.
pub fn mwa_left_step(a: &Multisegment) -> Result<StepTrace> {
    step(a, Algorithm::Left)
}

/// First step of the beginning-ascending algorithm on a single-line
/// multisegment.
pub fn mwa_right_step(a: &Multisegment) -> Result<StepTrace> {
    step(a, Algorithm::Right)
}

fn step(a: &Multisegment, algo: Algorithm) -> Result<StepTrace> {
    if a.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    let line = a.single_line().ok_or(Error::MultipleLines)?.clone();
    let mut segs: Vec<Bounds> = a.iter().map(Segment::bounds).collect();
    let (produced, used) = match algo {
        Algorithm::Left => left_step(&mut segs),
        Algorithm::Right => right_step(&mut segs),
    };
    let seg = |(b, e): Bounds| Segment::new(line.clone(), b, e).expect("b <= e");
    Ok(StepTrace {
        produced: seg(produced),
        used: used.into_iter().map(seg).collect(),
        remainder: Multisegment::from_segments(segs.into_iter().map(seg)),
    })
}

/// `a^t` by the end-descending algorithm.
pub fn mwa_left(a: &Multisegment) -> Multisegment {
    run(a, Algorithm::Left)
}

/// `a^t` by the beginning-ascending algorithm.
pub fn mwa_right(a: &Multisegment) -> Multisegment {
    run(a, Algorithm::Right)
}

/// Alias for [`mwa_left`].
pub fn dual(a: &Multisegment) -> Multisegment {
    mwa_left(a)
}

fn run(a: &Multisegment, algo: Algorithm) -> Multisegment {
    let parts: Vec<(Line, Vec<Bounds>)> = a
        .by_line()
        .into_iter()
        .map(|(line, segs)| {
            let out = match algo {
                Algorithm::Left => dual_bounds(&segs),
                Algorithm::Right => dual_bounds_right(&segs),
            };
            (line, out)
        })
        .collect();
    Multisegment::from_line_parts(parts.iter().map(|(l, s)| (l, s.as_slice())))
}

/// Runs an algorithm to completion and keeps every step.
pub fn dual_with_trace(a: &Multisegment, algo: Algorithm) -> (Multisegment, Vec<StepTrace>) {
    let mut traces = Vec::new();
    let mut produced = Vec::new();
    for (line, segs) in a.by_line() {
        let mut rest = Multisegment::on_line(&line, segs).expect("valid");
        while !rest.is_empty() {
            let t = step(&rest, algo).expect("nonempty single-line input");
            produced.push(t.produced.clone());
            rest = t.remainder.clone();
            traces.push(t);
        }
    }
    (Multisegment::from_segments(produced), traces)
}

/// `a^t` of a single line given as bare bounds (end-descending algorithm).
/// The result is sorted.
pub fn dual_bounds(segs: &[Bounds]) -> Vec<Bounds> {
    let mut work = segs.to_vec();
    let mut out = Vec::with_capacity(work.len());
    while !work.is_empty() {
        out.push(left_step(&mut work).0);
    }
    out.sort_unstable();
    out
}

/// `a^t` of a single line by the beginning-ascending algorithm.
pub fn dual_bounds_right(segs: &[Bounds]) -> Vec<Bounds> {
    let mut work = segs.to_vec();
    let mut out = Vec::with_capacity(work.len());
    while !work.is_empty() {
        out.push(right_step(&mut work).0);
    }
    out.sort_unstable();
    out
}

/// Performs one step in place. Returns the produced segment and the used
/// segments (as they were before shortening).
fn left_step(segs: &mut Vec<Bounds>) -> (Bounds, Vec<Bounds>) {
    debug_assert!(!segs.is_empty());
    let mut first = 0;
    for (i, s) in segs.iter().enumerate() {
        if (s.1, s.0) > (segs[first].1, segs[first].0) {
            first = i;
        }
    }
    let x = segs[first].1;
    let mut used_idx = vec![first];
    let mut cur = segs[first];
    loop {
        let mut next: Option<usize> = None;
        for (i, s) in segs.iter().enumerate() {
            if s.1 == cur.1 - 1 && s.0 < cur.0 && next.is_none_or(|j| s.0 > segs[j].0) {
                next = Some(i);
            }
        }
        #[cfg(debug_assertions)]
        check_stage_facts(segs, &used_idx, cur, next, Algorithm::Left);
        match next {
            Some(j) => {
                used_idx.push(j);
                cur = segs[j];
            }
            None => break,
        }
    }
    let k = used_idx.len() as i64;
    let used: Vec<Bounds> = used_idx.iter().map(|&i| segs[i]).collect();
    shorten(segs, &mut used_idx, |s| {
        (s.0 < s.1).then_some((s.0, s.1 - 1))
    });
    ((x - k + 1, x), used)
}

fn right_step(segs: &mut Vec<Bounds>) -> (Bounds, Vec<Bounds>) {
    debug_assert!(!segs.is_empty());
    let mut first = 0;
    for (i, s) in segs.iter().enumerate() {
        if *s < segs[first] {
            first = i;
        }
    }
    let x = segs[first].0;
    let mut used_idx = vec![first];
    let mut cur = segs[first];
    loop {
        let mut next: Option<usize> = None;
        for (i, s) in segs.iter().enumerate() {
            if s.0 == cur.0 + 1 && s.1 > cur.1 && next.is_none_or(|j| s.1 < segs[j].1) {
                next = Some(i);
            }
        }
        #[cfg(debug_assertions)]
        check_stage_facts(segs, &used_idx, cur, next, Algorithm::Right);
        match next {
            Some(j) => {
                used_idx.push(j);
                cur = segs[j];
            }
            None => break,
        }
    }
    let k = used_idx.len() as i64;
    let used: Vec<Bounds> = used_idx.iter().map(|&i| segs[i]).collect();
    shorten(segs, &mut used_idx, |s| {
        (s.0 < s.1).then_some((s.0 + 1, s.1))
    });
    ((x, x + k - 1), used)
}

fn shorten(segs: &mut Vec<Bounds>, idx: &mut [usize], f: impl Fn(Bounds) -> Option<Bounds>) {
    idx.sort_unstable_by(|a, b| b.cmp(a));
    for &i in idx.iter() {
        match f(segs[i]) {
            Some(s) => segs[i] = s,
            None => {
                segs.swap_remove(i);
            }
        }
    }
}

/// Stepping facts that hold at every stage of the end-descending algorithm
/// (and their mirror images): a shifted copy of the last pick is taken when
/// available, a pick starting at or before every remaining beginning ends
/// the step, and picks never get shorter within a step.
#[cfg(debug_assertions)]
fn check_stage_facts(
    segs: &[Bounds],
    used: &[usize],
    cur: Bounds,
    next: Option<usize>,
    algo: Algorithm,
) {
    let available = || {
        segs.iter()
            .enumerate()
            .filter(|(i, _)| !used.contains(i))
            .map(|(_, s)| *s)
    };
    let (shifted, starts_first) = match algo {
        Algorithm::Left => ((cur.0 - 1, cur.1 - 1), available().all(|s| cur.0 <= s.0)),
        Algorithm::Right => ((cur.0 + 1, cur.1 + 1), available().all(|s| cur.1 >= s.1)),
    };
    if available().any(|s| s == shifted) {
        debug_assert_eq!(next.map(|j| segs[j]), Some(shifted));
    }
    if starts_first {
        debug_assert!(next.is_none());
    }
    if let Some(j) = next {
        debug_assert!(segs[j].1 - segs[j].0 >= cur.1 - cur.0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::a_nd;

    fn b(s: &[Segment]) -> Vec<Bounds> {
        s.iter().map(Segment::bounds).collect()
    }

    #[test]
    fn left_step_examples() {
        let t = mwa_left_step(&Multisegment::rho([(0, 2), (1, 3)])).unwrap();
        assert_eq!(t.produced.bounds(), (2, 3));
        assert_eq!(b(&t.used), vec![(1, 3), (0, 2)]);
        assert_eq!(t.remainder, Multisegment::rho([(0, 1), (1, 2)]));

        let t = mwa_left_step(&Multisegment::rho([(1, 3)])).unwrap();
        assert_eq!(t.produced.bounds(), (3, 3));
        assert_eq!(b(&t.used), vec![(1, 3)]);
        assert_eq!(t.remainder, Multisegment::rho([(1, 2)]));

        // sum of the staircases (0,1,2,3) and (1,2,3,4)
        let a = Multisegment::rho([(0, 1), (1, 2), (1, 2), (2, 3), (2, 3), (3, 4)]);
        let t = mwa_left_step(&a).unwrap();
        assert_eq!(t.produced.bounds(), (1, 4));
        assert_eq!(b(&t.used), vec![(3, 4), (2, 3), (1, 2), (0, 1)]);
        assert_eq!(
            t.remainder,
            Multisegment::rho([(0, 0), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
        );
        assert_eq!(t.remainder.degree() + t.produced.len(), a.degree());
    }

    #[test]
    fn step_errors() {
        assert_eq!(
            mwa_left_step(&Multisegment::new()),
            Err(Error::EmptyMultisegment)
        );
        let two = crate::text::parse_multisegment("[0,0]@a+[0,0]@b").unwrap();
        assert_eq!(mwa_right_step(&two), Err(Error::MultipleLines));
    }

    #[test]
    fn full_runs() {
        let single = Multisegment::rho([(1, 3)]);
        let singles = Multisegment::rho([(1, 1), (2, 2), (3, 3)]);
        assert_eq!(mwa_left(&single), singles);
        assert_eq!(mwa_right(&single), singles);
        let rho = Line::default();
        assert_eq!(
            mwa_left(&a_nd(2, 3, &rho).unwrap()),
            a_nd(3, 2, &rho).unwrap()
        );
        assert_eq!(
            mwa_right(&a_nd(2, 3, &rho).unwrap()),
            a_nd(3, 2, &rho).unwrap()
        );
        let sq = Multisegment::rho([(0, 1), (1, 2)]);
        assert_eq!(mwa_left(&sq), sq);
        assert_eq!(mwa_left(&Multisegment::new()), Multisegment::new());
        assert_eq!(mwa_right(&Multisegment::new()), Multisegment::new());
    }

    #[test]
    fn right_step_mirrors_left() {
        let t = mwa_right_step(&Multisegment::rho([(0, 2), (1, 3)])).unwrap();
        assert_eq!(t.produced.bounds(), (0, 1));
        assert_eq!(b(&t.used), vec![(0, 2), (1, 3)]);
        assert_eq!(t.remainder, Multisegment::rho([(1, 2), (2, 3)]));
    }

    #[test]
    fn traces_reassemble_the_dual() {
        let a = crate::text::parse_multisegment("[0,2]+[1,3]+[1,1]@mu+[0,4]").unwrap();
        for algo in [Algorithm::Left, Algorithm::Right] {
            let (d, traces) = dual_with_trace(&a, algo);
            assert_eq!(d, mwa_left(&a));
            for t in &traces {
                assert_eq!(t.produced.len(), t.used.len());
                for w in t.used.windows(2) {
                    match algo {
                        Algorithm::Left => assert_eq!(w[1].end(), w[0].end() - 1),
                        Algorithm::Right => assert_eq!(w[1].begin(), w[0].begin() + 1),
                    }
                }
            }
        }
    }

    #[test]
    fn multi_line_acts_linewise() {
        let a = crate::text::parse_multisegment("[0,1]@a+[5,7]@b").unwrap();
        let expect = crate::text::parse_multisegment("[0,0]+[1,1]@a+[5,5]+[6,6]+[7,7]@b").unwrap();
        assert_eq!(mwa_left(&a), expect);
    }
}
