//! Property sweeps over finite grids, with JSON reports.
//!
//! Each [`Suite`] checks one family of identities on an exhaustive grid
//! (plus seeded random samples where noted) and returns a [`Report`]
//! listing every failing case. Cases run on the rayon pool when
//! [`Config::parallel`] is set; the failure list is in case order either
//! way, so reports depend only on the configuration.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::criteria::{
    badulescu_check, certificate_route, contact_speh, dashed_intervals_meet, is_contact,
    is_crossed, is_t_additive, joint_normalize, mw_linked, rc_check, same_lattice,
    speh_reducible_by_crossing, speh_reducible_by_dominance, supports_linked, MwParams, Status,
    Verdict,
};
use crate::involution::{mwa_left, mwa_right};
use crate::lnt::{
    i_set, i_set_speh, lnt_condition, lnt_condition_pattern, lnt_reducible, Ladder, Partition,
};
use crate::multisegment::{a_nd, Multisegment};
use crate::order::{strict_downset, DEFAULT_BUDGET};
use crate::segment::{bounds, Line};
use crate::speh::SpehParams;

/// Parameters shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Largest endpoint of the enumerated grids (smallest is 0).
    pub max_end: i64,
    /// Most segments in an exhaustively enumerated multisegment.
    pub max_segments: usize,
    /// Downset budget passed to the certificates.
    pub budget: usize,
    pub seed: u64,
    /// Random cases added to sampled suites.
    pub samples: usize,
    #[serde(skip)]
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_end: 7,
            max_segments: 5,
            budget: DEFAULT_BUDGET,
            seed: 0,
            samples: 10_000,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    fn new(inputs: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        Failure {
            inputs: inputs.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

/// Outcome of one suite. An empty `failures` list means the suite passed.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    /// Seconds.
    pub wall_time: f64,
    pub config: Config,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `(a^t)^t = a`, both algorithms agree, duality commutes with the
    /// contragredient, and the degree is preserved.
    Involution,
    /// `a(n,d)^t = a(d,n)`.
    Rectangle,
    /// Dual segments are no longer than the spread of ends (or beginnings).
    LengthBounds,
    /// Dominance and crossing criteria agree, and RC plus the downset
    /// scan decide every pair in agreement with them.
    SpehCrossValidation,
    /// RC, then the crossing obstruction, then the downset scan.
    CertificateRoute,
    /// The `(t,a,b)` linking condition against strong dominance.
    MwEquivalence,
    /// Ladder interval sets against strong dominance; hull form against
    /// pattern form.
    LntEquivalence,
    /// Nested supports: additivity, the dual downset condition, and the
    /// downset scan certificate.
    Containment,
    /// Closed-form contact against direct contact.
    Contact,
    /// Shrinking an irreducible pair, and additivity of pairwise
    /// irreducible triples.
    Lemma73Kfold,
    /// Reducible pairs are crossed.
    Blm,
    /// Verdicts are symmetric and invariant under the contragredient.
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Involution,
        Suite::Rectangle,
        Suite::LengthBounds,
        Suite::SpehCrossValidation,
        Suite::CertificateRoute,
        Suite::MwEquivalence,
        Suite::LntEquivalence,
        Suite::Containment,
        Suite::Contact,
        Suite::Lemma73Kfold,
        Suite::Blm,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Involution => "involution",
            Suite::Rectangle => "rectangle",
            Suite::LengthBounds => "length-bounds",
            Suite::SpehCrossValidation => "speh-cross-validation",
            Suite::CertificateRoute => "certificate-route",
            Suite::MwEquivalence => "mw-equivalence",
            Suite::LntEquivalence => "lnt-equivalence",
            Suite::Containment => "containment",
            Suite::Contact => "contact",
            Suite::Lemma73Kfold => "lemma73-kfold",
            Suite::Blm => "blm",
            Suite::Symmetry => "symmetry",
        }
    }

    pub fn run(self, config: &Config) -> Report {
        let start = Instant::now();
        let (cases_run, failures) = match self {
            Suite::Involution => involution(config),
            Suite::Rectangle => rectangle(config),
            Suite::LengthBounds => length_bounds(config),
            Suite::SpehCrossValidation => speh_cross_validation(config),
            Suite::CertificateRoute => certificate_route_sweep(config),
            Suite::MwEquivalence => mw_equivalence(config),
            Suite::LntEquivalence => lnt_equivalence(config),
            Suite::Containment => containment(config),
            Suite::Contact => contact(config),
            Suite::Lemma73Kfold => lemma73_kfold(config),
            Suite::Blm => blm(config),
            Suite::Symmetry => symmetry(config),
        };
        Report {
            suite: self,
            cases_run,
            failures,
            wall_time: start.elapsed().as_secs_f64(),
            config: config.clone(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite `{}`", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Runs every suite in [`Suite::ALL`] order.
pub fn run_all(config: &Config) -> Vec<Report> {
    Suite::ALL.iter().map(|s| s.run(config)).collect()
}

// populations

/// Every multiset of at most `max_segments` segments with endpoints in
/// `[0, max_end]`, on the default line. Includes the empty multisegment.
pub fn enumerate_multisegments(max_end: i64, max_segments: usize) -> Vec<Multisegment> {
    let segs: Vec<(i64, i64)> = (0..=max_end)
        .flat_map(|b| (b..=max_end).map(move |e| (b, e)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        segs: &[(i64, i64)],
        from: usize,
        left: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Multisegment>,
    ) {
        out.push(Multisegment::rho(stack.iter().map(|&i| segs[i])));
        if left == 0 {
            return;
        }
        for i in from..segs.len() {
            stack.push(i);
            rec(segs, i, left - 1, stack, out);
            stack.pop();
        }
    }
    rec(&segs, 0, max_segments, &mut stack, &mut out);
    out
}

/// Seeded random single-line multisegments, larger than the exhaustive
/// population: `max_segments+1 ..= 2*max_segments+2` segments with
/// endpoints in `[0, 2*max_end]`.
pub fn random_multisegments(config: &Config, count: usize) -> Vec<Multisegment> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let hi = 2 * config.max_end.max(1);
    let (lo_n, hi_n) = (config.max_segments + 1, 2 * config.max_segments + 2);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo_n..=hi_n);
            Multisegment::rho((0..n).map(|_| {
                let b = rng.gen_range(0..=hi);
                let e = rng.gen_range(b..=hi);
                (b, e)
            }))
        })
        .collect()
}

fn generic_population(config: &Config) -> Vec<Multisegment> {
    let mut pop = enumerate_multisegments(config.max_end, config.max_segments);
    pop.extend(random_multisegments(config, config.samples));
    pop
}

fn speh_grid(config: &Config) -> Vec<SpehParams> {
    SpehParams::grid(&Line::default(), 0, config.max_end)
}

fn pairs<T: Clone>(xs: &[T]) -> Vec<(T, T)> {
    xs.iter()
        .flat_map(|p| xs.iter().map(move |q| (p.clone(), q.clone())))
        .collect()
}

/// Applies `check` to every case, in parallel if requested, and
/// concatenates failures in case order.
fn sweep<T, F>(cases: &[T], parallel: bool, check: F) -> (usize, Vec<Failure>)
where
    T: Sync,
    F: Fn(&T) -> Vec<Failure> + Sync,
{
    let failures: Vec<Vec<Failure>> = if parallel {
        cases.par_iter().map(&check).collect()
    } else {
        cases.iter().map(&check).collect()
    };
    (cases.len(), failures.into_iter().flatten().collect())
}

fn pair_name(p: &SpehParams, q: &SpehParams) -> String {
    format!("{p} x {q}")
}

// suites

fn involution(config: &Config) -> (usize, Vec<Failure>) {
    let pop = generic_population(config);
    sweep(&pop, config.parallel, |a| {
        let mut out = Vec::new();
        let t = mwa_left(a);
        let name = || a.to_string();
        let back = mwa_left(&t);
        if &back != a {
            out.push(Failure::new(format!("involutive {}", name()), a, back));
        }
        let right = mwa_right(a);
        if right != t {
            out.push(Failure::new(format!("left = right {}", name()), &t, right));
        }
        let lhs = mwa_left(&a.contragredient());
        let rhs = t.contragredient();
        if lhs != rhs {
            out.push(Failure::new(
                format!("contragredient {}", name()),
                format!("{rhs:?}"),
                format!("{lhs:?}"),
            ));
        }
        if t.degree() != a.degree() {
            out.push(Failure::new(
                format!("degree {}", name()),
                a.degree(),
                t.degree(),
            ));
        }
        out
    })
}

fn rectangle(config: &Config) -> (usize, Vec<Failure>) {
    let top = (config.max_end + 1).max(1) as usize;
    let cases: Vec<(usize, usize)> = (1..=top)
        .flat_map(|n| (1..=top).map(move |d| (n, d)))
        .collect();
    let rho = Line::default();
    sweep(&cases, config.parallel, |&(n, d)| {
        let a = a_nd(n, d, &rho).expect("positive");
        let expected = a_nd(d, n, &rho).expect("positive");
        let got = mwa_left(&a);
        if got == expected {
            vec![]
        } else {
            vec![Failure::new(format!("a({n},{d})"), expected, got)]
        }
    })
}

fn spread(values: impl Iterator<Item = i64>) -> Option<usize> {
    let v: Vec<i64> = values.collect();
    let (lo, hi) = (v.iter().min()?, v.iter().max()?);
    Some((hi - lo + 1) as usize)
}

fn length_bounds(config: &Config) -> (usize, Vec<Failure>) {
    let pop = generic_population(config);
    sweep(&pop, config.parallel, |a| {
        let mut out = Vec::new();
        let t = mwa_left(a);
        let longest = t.iter().map(|s| s.len()).max().unwrap_or(0);
        if let Some(m) = spread(a.iter().map(|s| s.end())) {
            if longest > m {
                out.push(Failure::new(
                    format!("ends {a}"),
                    format!("dual lengths <= {m}"),
                    longest,
                ));
            }
        }
        if let Some(m) = spread(a.iter().map(|s| s.begin())) {
            if longest > m {
                out.push(Failure::new(
                    format!("beginnings {a}"),
                    format!("dual lengths <= {m}"),
                    longest,
                ));
            }
        }
        out
    })
}

fn speh_cross_validation(config: &Config) -> (usize, Vec<Failure>) {
    let cases = pairs(&speh_grid(config));
    sweep(&cases, config.parallel, |(p, q)| {
        let mut out = Vec::new();
        let name = pair_name(p, q);
        let dom = speh_reducible_by_dominance(p, q);
        let crossing = speh_reducible_by_crossing(p, q);
        if dom.status != crossing.status {
            out.push(Failure::new(
                format!("dominance vs crossing {name}"),
                &dom,
                &crossing,
            ));
        }
        let (a, b) = (p.multisegment(), q.multisegment());
        let oracle = badulescu_check(&a, &b, config.budget);
        match oracle.status {
            Status::Unknown => {
                let crossed = is_crossed(&a, &b);
                out.push(Failure::new(
                    format!("certificate decisive {name}"),
                    format!("{} (decided)", dom.status),
                    format!("{oracle}, crossed={crossed}"),
                ));
            }
            s if s != dom.status => {
                out.push(Failure::new(
                    format!("certificate agrees {name}"),
                    &dom,
                    &oracle,
                ));
            }
            _ => {}
        }
        if supports_linked(p, q) && is_crossed(&a, &b) {
            let rc = rc_check(&a, &b);
            if !rc.is_reducible() {
                out.push(Failure::new(
                    format!("linked and crossed gives non-additive {name}"),
                    "Reducible",
                    &rc,
                ));
            }
        }
        out
    })
}

fn certificate_route_sweep(config: &Config) -> (usize, Vec<Failure>) {
    let cases = pairs(&speh_grid(config));
    sweep(&cases, config.parallel, |(p, q)| {
        let dom = speh_reducible_by_dominance(p, q);
        let v = certificate_route(&p.multisegment(), &q.multisegment(), config.budget);
        if v.status == dom.status {
            vec![]
        } else {
            vec![Failure::new(pair_name(p, q), &dom, &v)]
        }
    })
}

fn mw_equivalence(config: &Config) -> (usize, Vec<Failure>) {
    let window = 2 * (config.max_end + 1);
    let mut params = Vec::new();
    for t2 in 0..=6 {
        for a2 in 0..window {
            for b2 in (a2..window).step_by(2) {
                params.push(MwParams::rho(t2, a2, b2));
            }
        }
    }
    let (n, failures) = sweep(&params, config.parallel, |j1| {
        let mut out = Vec::new();
        for j2 in &params {
            let linked = mw_linked(j1, j2);
            let name = || format!("{j1:?} vs {j2:?}");
            match joint_normalize(j1, j2) {
                None => {
                    if linked {
                        out.push(Failure::new(
                            format!("lattice condition fails {}", name()),
                            false,
                            true,
                        ));
                    }
                }
                Some((p, q)) => {
                    debug_assert!(same_lattice(j1, j2));
                    let dom = speh_reducible_by_dominance(&p, &q);
                    if dom.is_reducible() != linked {
                        out.push(Failure::new(
                            format!("{} as {}", name(), pair_name(&p, &q)),
                            &dom,
                            linked,
                        ));
                    }
                }
            }
        }
        out
    });
    (n * params.len(), failures)
}

fn small_partitions(max_part: u32, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(max_part: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if !cur.is_empty() {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
        }
        if left == 0 {
            return;
        }
        let top = cur.last().copied().unwrap_or(max_part);
        for p in 1..=top {
            cur.push(p);
            rec(max_part, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(max_part, max_rows, &mut Vec::new(), &mut out);
    out
}

fn lnt_equivalence(config: &Config) -> (usize, Vec<Failure>) {
    let grid = speh_grid(config);
    let rho = Line::default();
    let cases = pairs(&grid);
    let (n1, mut failures) = sweep(&cases, config.parallel, |(p, q)| {
        let mut out = Vec::new();
        let (l1, l2) = (Ladder::from_speh(p), Ladder::from_speh(q));
        let name = pair_name(p, q);
        let dom = speh_reducible_by_dominance(p, q);
        let lnt = lnt_reducible(&l1, &l2, true);
        if lnt.status != dom.status {
            out.push(Failure::new(
                format!("ladder vs dominance {name}"),
                &dom,
                &lnt,
            ));
        }
        let (hull, pattern) = (lnt_condition(&l1, &l2), lnt_condition_pattern(&l1, &l2));
        if hull != pattern {
            out.push(Failure::new(
                format!("hull vs pattern {name}"),
                hull,
                pattern,
            ));
        }
        let swapped = lnt_reducible(&l2, &l1, true);
        if swapped.status != lnt.status {
            out.push(Failure::new(format!("symmetry {name}"), &lnt, &swapped));
        }
        out
    });
    let (n2, f2) = sweep(&grid, config.parallel, |p| {
        let mut out = Vec::new();
        let ladder = Ladder::from_speh(p);
        if i_set_speh(p) != i_set(&ladder.alpha, ladder.x) {
            out.push(Failure::new(
                format!("interval set {p}"),
                format!("{:?}", i_set_speh(p)),
                format!("{:?}", ladder.i_set()),
            ));
        }
        if ladder.multisegment(&rho) != p.multisegment() {
            out.push(Failure::new(
                format!("ladder rows {p}"),
                p.multisegment(),
                ladder.multisegment(&rho),
            ));
        }
        out
    });
    failures.extend(f2);
    // hull and pattern forms on general ladders
    let shapes = small_partitions(4, 3);
    let xs: Vec<i64> = (0..=4).collect();
    let ladders: Vec<Ladder> = shapes
        .iter()
        .flat_map(|a| xs.iter().map(move |&x| Ladder::new(a.clone(), x)))
        .collect();
    let (n3, f3) = sweep(&ladders, config.parallel, |l1| {
        let mut out = Vec::new();
        for l2 in &ladders {
            let (hull, pattern) = (lnt_condition(l1, l2), lnt_condition_pattern(l1, l2));
            if hull != pattern {
                out.push(Failure::new(
                    format!("hull vs pattern {l1:?} x {l2:?}"),
                    hull,
                    pattern,
                ));
            }
            if lnt_condition(l2, l1) != hull {
                out.push(Failure::new(
                    format!("symmetry {l1:?} x {l2:?}"),
                    hull,
                    !hull,
                ));
            }
        }
        out
    });
    failures.extend(f3);
    (n1 + n2 + n3 * ladders.len(), failures)
}

fn contains(outer: (i64, i64), inner: (i64, i64)) -> bool {
    outer.0 <= inner.0 && inner.1 <= outer.1
}

/// `c^t` is never strictly below `a^t` for `c < a`. Returns failures.
fn dual_downset_condition(p: &SpehParams, budget: usize) -> Vec<Failure> {
    let a = p.multisegment();
    let below = strict_downset(&a, budget);
    let below_dual = strict_downset(&mwa_left(&a), budget);
    let (below, below_dual) = match (below, below_dual) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            return vec![Failure::new(format!("downset of {p}"), "enumerated", e)]
        }
    };
    let below_dual: FxHashSet<Multisegment> = below_dual.into_iter().collect();
    below
        .iter()
        .filter_map(|c| {
            let ct = mwa_left(c);
            below_dual.contains(&ct).then(|| {
                Failure::new(
                    format!("dual downset {p} at {c}"),
                    "c^t not below a^t",
                    format!("c^t = {ct}"),
                )
            })
        })
        .collect()
}

fn containment(config: &Config) -> (usize, Vec<Failure>) {
    let grid = speh_grid(config);
    let cases: Vec<(SpehParams, SpehParams)> = pairs(&grid)
        .into_iter()
        .filter(|(p, q)| contains(p.hull(), q.hull()))
        .collect();
    let (n1, mut failures) = sweep(&cases, config.parallel, |(p, q)| {
        let mut out = Vec::new();
        let (a, b) = (p.multisegment(), q.multisegment());
        let name = pair_name(p, q);
        if !is_t_additive(&[&a, &b]) {
            out.push(Failure::new(
                format!("additive {name}"),
                mwa_left(&a).sum(&mwa_left(&b)),
                mwa_left(&a.sum(&b)),
            ));
        }
        let v = badulescu_check(&a, &b, config.budget);
        if !v.is_irreducible() {
            out.push(Failure::new(
                format!("downset scan {name}"),
                "Irreducible",
                &v,
            ));
        }
        out
    });
    // the dual downset condition for each inner factor that occurs
    let mut inner: Vec<SpehParams> = cases.iter().map(|(_, q)| q.clone()).collect();
    inner.sort_by_key(|p| p.quadruple());
    inner.dedup();
    let budget = config.budget;
    let (n2, f2) = sweep(&inner, config.parallel, |p| {
        dual_downset_condition(p, budget)
    });
    failures.extend(f2);
    (n1 + n2, failures)
}

fn contact(config: &Config) -> (usize, Vec<Failure>) {
    let cases = pairs(&speh_grid(config));
    sweep(&cases, config.parallel, |(p, q)| {
        let mut out = Vec::new();
        let name = pair_name(p, q);
        let direct = is_contact(&p.multisegment(), &q.multisegment());
        let closed = contact_speh(p, q);
        if direct != closed {
            out.push(Failure::new(format!("closed form {name}"), direct, closed));
        }
        if bounds::precedes(p.hull(), q.hull()) && direct != dashed_intervals_meet(p, q) {
            out.push(Failure::new(
                format!("dashed intervals {name}"),
                direct,
                !direct,
            ));
        }
        out
    })
}

/// The hypotheses of the shrinking step: irreducible pair,
/// `C2+D2 <= C1+D1`, and `1 <= D1-B1 <= D2-B2` on equality.
pub fn shrink_hypotheses(p1: &SpehParams, p2: &SpehParams) -> bool {
    let (s1, s2) = (p1.c() + p1.d(), p2.c() + p2.d());
    speh_reducible_by_dominance(p1, p2).is_irreducible()
        && s2 <= s1
        && (s2 != s1 || (1 <= p1.d() - p1.b() && p1.d() - p1.b() <= p2.d() - p2.b()))
}

/// `(A,B,C-1,D-1)`, or `None` when that would have no rows.
pub fn shrink(p: &SpehParams) -> Option<SpehParams> {
    SpehParams::new(p.line().clone(), p.a(), p.b(), p.c() - 1, p.d() - 1).ok()
}

fn lemma73_kfold(config: &Config) -> (usize, Vec<Failure>) {
    let grid = speh_grid(config);
    let cases: Vec<(SpehParams, SpehParams)> = pairs(&grid)
        .into_iter()
        .filter(|(p, q)| shrink_hypotheses(p, q))
        .collect();
    let (n1, mut failures) = sweep(&cases, config.parallel, |(p, q)| match shrink(p) {
        None => vec![],
        Some(s) => {
            let v = speh_reducible_by_dominance(&s, q);
            if v.is_irreducible() {
                vec![]
            } else {
                vec![Failure::new(
                    format!("shrunk {} from {}", pair_name(&s, q), p),
                    "Irreducible",
                    &v,
                )]
            }
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x7d);
    let triples: Vec<[SpehParams; 3]> = (0..config.samples)
        .map(|_| {
            let mut pick = || grid.choose(&mut rng).expect("nonempty grid").clone();
            [pick(), pick(), pick()]
        })
        .collect();
    let (_, f2) = sweep(&triples, config.parallel, |t| {
        let irreducible = (0..3).all(|i| {
            (i + 1..3).all(|j| speh_reducible_by_dominance(&t[i], &t[j]).is_irreducible())
        });
        if !irreducible {
            return vec![];
        }
        let ms: Vec<Multisegment> = t.iter().map(|p| p.multisegment()).collect();
        if is_t_additive(&[&ms[0], &ms[1], &ms[2]]) {
            vec![]
        } else {
            let sep = ms
                .iter()
                .fold(Multisegment::new(), |acc, m| acc.sum(&mwa_left(m)));
            let joint = mwa_left(&ms.iter().fold(Multisegment::new(), |acc, m| acc.sum(m)));
            vec![Failure::new(
                format!("triple {} x {} x {}", t[0], t[1], t[2]),
                sep,
                joint,
            )]
        }
    });
    failures.extend(f2);
    (n1 + triples.len(), failures)
}

fn blm(config: &Config) -> (usize, Vec<Failure>) {
    let cases = pairs(&speh_grid(config));
    sweep(&cases, config.parallel, |(p, q)| {
        let dom = speh_reducible_by_dominance(p, q);
        if dom.is_reducible() && !is_crossed(&p.multisegment(), &q.multisegment()) {
            vec![Failure::new(pair_name(p, q), "crossed", "not crossed")]
        } else {
            vec![]
        }
    })
}

type PairCriterion = fn(&SpehParams, &SpehParams) -> Verdict;

fn symmetry(config: &Config) -> (usize, Vec<Failure>) {
    let cases = pairs(&speh_grid(config));
    sweep(&cases, config.parallel, |(p, q)| {
        let mut out = Vec::new();
        let name = pair_name(p, q);
        let (pc, qc) = (p.contragredient(), q.contragredient());
        let tests: [(&str, PairCriterion); 2] = [
            ("dominance", speh_reducible_by_dominance),
            ("crossing", speh_reducible_by_crossing),
        ];
        for (label, f) in tests {
            let v = f(p, q).status;
            let swapped = f(q, p).status;
            let dual = f(&pc, &qc).status;
            if swapped != v {
                out.push(Failure::new(format!("{label} swapped {name}"), v, swapped));
            }
            if dual != v {
                out.push(Failure::new(
                    format!("{label} contragredient {name}"),
                    v,
                    dual,
                ));
            }
        }
        let (a, b) = (p.multisegment(), q.multisegment());
        let rc = rc_check(&a, &b).status;
        if rc_check(&b, &a).status != rc {
            out.push(Failure::new(
                format!("rc swapped {name}"),
                rc,
                rc_check(&b, &a).status,
            ));
        }
        let crossed = is_crossed(&a, &b);
        if is_crossed(&a.contragredient(), &b.contragredient()) != crossed {
            out.push(Failure::new(
                format!("crossed contragredient {name}"),
                crossed,
                !crossed,
            ));
        }
        out
    })
}
