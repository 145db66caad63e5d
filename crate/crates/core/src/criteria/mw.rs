//! The `(t, a, b)` parameterization and its linking condition, in doubled
//! integer arithmetic: `t2 = 2t`, `a2 = 2a`, `b2 = 2b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::segment::Line;
use crate::speh::SpehParams;

use super::verdict::{Clause, Criterion, Status, Verdict};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MwParams {
    line: Line,
    t2: i64,
    a2: i64,
    b2: i64,
}

/// Result of converting `(t, a, b)` to a quadruple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MwQuadruple {
    Integral(SpehParams),
    /// Entries are half-integers; the doubled quadruple is kept.
    NonIntegral([i64; 4]),
}

impl MwParams {
    /// Requires `t2 >= 0` and `b2 - a2` a nonnegative even integer.
    pub fn new(line: Line, t2: i64, a2: i64, b2: i64) -> Result<Self> {
        if t2 >= 0 && b2 >= a2 && (b2 - a2) % 2 == 0 {
            Ok(MwParams { line, t2, a2, b2 })
        } else {
            Err(Error::InvalidMw { t2, a2, b2 })
        }
    }

    pub fn rho(t2: i64, a2: i64, b2: i64) -> Self {
        Self::new(Line::default(), t2, a2, b2).expect("valid parameters")
    }

    /// The parameters of a staircase: `t = (B-A)/2`, `a = (A+B)/2`,
    /// `b = (C+D)/2`.
    pub fn from_speh(p: &SpehParams) -> Self {
        MwParams {
            line: p.line().clone(),
            t2: p.b() - p.a(),
            a2: p.a() + p.b(),
            b2: p.c() + p.d(),
        }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }
    pub fn t2(&self) -> i64 {
        self.t2
    }
    pub fn a2(&self) -> i64 {
        self.a2
    }
    pub fn b2(&self) -> i64 {
        self.b2
    }

    /// `(a-t, a+t, b-t, b+t)`, doubled.
    pub fn doubled_quadruple(&self) -> [i64; 4] {
        [
            self.a2 - self.t2,
            self.a2 + self.t2,
            self.b2 - self.t2,
            self.b2 + self.t2,
        ]
    }

    pub fn to_speh(&self) -> MwQuadruple {
        let q = self.doubled_quadruple();
        if q[0].rem_euclid(2) == 0 {
            let [a, b, c, d] = q.map(|v| v / 2);
            MwQuadruple::Integral(
                SpehParams::new(self.line.clone(), a, b, c, d).expect("valid by construction"),
            )
        } else {
            MwQuadruple::NonIntegral(q)
        }
    }
}

impl fmt::Debug for MwParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(2t={},2a={},2b={})@{}",
            self.t2, self.a2, self.b2, self.line
        )
    }
}

/// The quadruple of `j`, or `None` on the half-shifted lattice.
pub fn mw_to_speh(j: &MwParams) -> MwQuadruple {
    j.to_speh()
}

/// `(a-t) - (a'-t')` is an integer.
pub fn same_lattice(j1: &MwParams, j2: &MwParams) -> bool {
    ((j1.a2 - j1.t2) - (j2.a2 - j2.t2)).rem_euclid(2) == 0
}

/// The linking condition: same line, same lattice, and
/// `b > b'+|t-t'|`, `a > a'+|t-t'|`, `a-b' <= 1+t+t'` (or the mirror).
pub fn mw_linked(j1: &MwParams, j2: &MwParams) -> bool {
    if j1.line != j2.line || !same_lattice(j1, j2) {
        return false;
    }
    let dominates = |x: &MwParams, y: &MwParams| {
        let dt = (x.t2 - y.t2).abs();
        x.b2 > y.b2 + dt && x.a2 > y.a2 + dt && x.a2 - y.b2 <= 2 + x.t2 + y.t2
    };
    dominates(j1, j2) || dominates(j2, j1)
}

/// Both quadruples shifted by one common half-integer (if needed) onto
/// integers. `None` when the lines or lattices differ.
pub fn joint_normalize(j1: &MwParams, j2: &MwParams) -> Option<(SpehParams, SpehParams)> {
    if j1.line != j2.line || !same_lattice(j1, j2) {
        return None;
    }
    let shift = (j1.a2 - j1.t2).rem_euclid(2);
    let to = |j: &MwParams| {
        let [a, b, c, d] = j.doubled_quadruple().map(|v| (v + shift) / 2);
        SpehParams::new(j.line.clone(), a, b, c, d).expect("valid by construction")
    };
    Some((to(j1), to(j2)))
}

/// Verdict from the linking condition: linked pairs reduce, others don't.
pub fn mw_verdict(j1: &MwParams, j2: &MwParams) -> Verdict {
    if mw_linked(j1, j2) {
        Verdict::new(Status::Reducible, Criterion::MwLinking, Clause::Linked)
    } else if j1.line != j2.line {
        Verdict::new(
            Status::Irreducible,
            Criterion::MwLinking,
            Clause::DifferentLines,
        )
    } else {
        Verdict::new(Status::Irreducible, Criterion::MwLinking, Clause::NotLinked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversion_examples() {
        assert_eq!(
            mw_to_speh(&MwParams::rho(1, 1, 5)),
            MwQuadruple::Integral(SpehParams::rho(0, 1, 2, 3))
        );
        assert_eq!(
            mw_to_speh(&MwParams::rho(0, 0, 4)),
            MwQuadruple::Integral(SpehParams::rho(0, 0, 2, 2))
        );
        assert_eq!(
            mw_to_speh(&MwParams::rho(2, 1, 3)),
            MwQuadruple::NonIntegral([-1, 3, 1, 5])
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(MwParams::new(Line::default(), -1, 0, 0).is_err());
        assert!(MwParams::new(Line::default(), 0, 2, 0).is_err());
        assert!(MwParams::new(Line::default(), 0, 0, 1).is_err());
    }

    #[test]
    fn linking_examples() {
        assert!(mw_linked(&MwParams::rho(1, 1, 5), &MwParams::rho(1, 3, 7)));
        assert!(!mw_linked(&MwParams::rho(1, 1, 5), &MwParams::rho(0, 2, 6)));
        let mu = Line::new("mu").unwrap();
        assert!(!mw_linked(
            &MwParams::rho(1, 1, 5),
            &MwParams::new(mu, 1, 3, 7).unwrap()
        ));
    }

    #[test]
    fn speh_round_trip() {
        for p in SpehParams::grid(&Line::default(), -2, 4) {
            assert_eq!(MwParams::from_speh(&p).to_speh(), MwQuadruple::Integral(p));
        }
    }

    #[test]
    fn half_lattice_normalization() {
        // t = 1/2, a = 1, b = 2 gives (1/2, 3/2, 3/2, 5/2)
        let j1 = MwParams::rho(1, 2, 4);
        let j2 = MwParams::rho(0, 1, 1);
        assert!(matches!(j1.to_speh(), MwQuadruple::NonIntegral(_)));
        let (p1, p2) = joint_normalize(&j1, &j2).unwrap();
        assert_eq!(p1, SpehParams::rho(1, 2, 2, 3));
        assert_eq!(p2, SpehParams::rho(1, 1, 1, 1));
        assert!(joint_normalize(&j1, &MwParams::rho(0, 0, 0)).is_none());
    }
}
