//! Speh quadruples `(A, B, C, D)`: the staircase `[A,B], [A+1,B+1], ..., [C,D]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::{bounds::Bounds, Line};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpehParams {
    line: Line,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl SpehParams {
    /// Requires `A <= B`, `A <= C` and `A + D = B + C`.
    pub fn new(line: Line, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a <= b && a <= c && a + d == b + c {
            Ok(SpehParams { line, a, b, c, d })
        } else {
            Err(Error::InvalidSpeh { a, b, c, d })
        }
    }

    /// Quadruple on the default line. Panics when invalid.
    pub fn rho(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(Line::default(), a, b, c, d).expect("valid Speh quadruple")
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn quadruple(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Number of segments.
    pub fn rows(&self) -> usize {
        (self.c - self.a + 1) as usize
    }

    /// Common length of the segments.
    pub fn width(&self) -> usize {
        (self.b - self.a + 1) as usize
    }

    /// `[A, D]`, the underlying set of the support.
    pub fn hull(&self) -> Bounds {
        (self.a, self.d)
    }

    pub fn with_line(&self, line: Line) -> SpehParams {
        SpehParams {
            line,
            ..self.clone()
        }
    }

    pub fn shifted(&self, k: i64) -> SpehParams {
        SpehParams {
            line: self.line.clone(),
            a: self.a + k,
            b: self.b + k,
            c: self.c + k,
            d: self.d + k,
        }
    }

    /// Quadruple of the contragredient: `(-D, -C, -B, -A)` on the dual line.
    pub fn contragredient(&self) -> SpehParams {
        SpehParams {
            line: self.line.dual(),
            a: -self.d,
            b: -self.c,
            c: -self.b,
            d: -self.a,
        }
    }

    pub fn segment_bounds(&self) -> impl Iterator<Item = Bounds> + '_ {
        (0..=self.c - self.a).map(move |i| (self.a + i, self.b + i))
    }

    pub fn multisegment(&self) -> Multisegment {
        Multisegment::on_line(&self.line, self.segment_bounds()).expect("b <= e by construction")
    }

    /// Enumerates every quadruple with `lo <= A` and `D <= hi`.
    pub fn grid(line: &Line, lo: i64, hi: i64) -> Vec<SpehParams> {
        let mut out = Vec::new();
        for a in lo..=hi {
            for b in a..=hi {
                for c in a..=hi {
                    let d = b + c - a;
                    if d <= hi {
                        out.push(SpehParams {
                            line: line.clone(),
                            a,
                            b,
                            c,
                            d,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Builds the Speh multisegment, rejecting invalid quadruples.
pub fn speh_multisegment(line: &Line, a: i64, b: i64, c: i64, d: i64) -> Result<Multisegment> {
    Ok(SpehParams::new(line.clone(), a, b, c, d)?.multisegment())
}

impl fmt::Debug for SpehParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})@{}",
            self.a, self.b, self.c, self.d, self.line
        )
    }
}

impl fmt::Display for SpehParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::a_nd;

    #[test]
    fn staircases() {
        assert_eq!(
            SpehParams::rho(0, 1, 2, 3).multisegment(),
            Multisegment::rho([(0, 1), (1, 2), (2, 3)])
        );
        assert_eq!(
            SpehParams::rho(0, 2, 0, 2).multisegment(),
            Multisegment::rho([(0, 2)])
        );
        assert_eq!(
            SpehParams::rho(0, 0, 2, 2).multisegment(),
            Multisegment::rho([(0, 0), (1, 1), (2, 2)])
        );
    }

    #[test]
    fn invalid_quadruples() {
        let rho = Line::default();
        for (a, b, c, d) in [(1, 0, 1, 0), (0, 1, 2, 4), (2, 3, 1, 2)] {
            let err = speh_multisegment(&rho, a, b, c, d).unwrap_err();
            assert!(err.to_string().starts_with("invalid Speh quadruple"));
        }
    }

    #[test]
    fn rectangle_is_a_staircase() {
        let rho = Line::default();
        for n in 1..5usize {
            for d in 1..5usize {
                let p = SpehParams::rho(0, d as i64 - 1, n as i64 - 1, (n + d) as i64 - 2);
                assert_eq!(a_nd(n, d, &rho).unwrap(), p.multisegment());
                assert_eq!((p.rows(), p.width()), (n, d));
            }
        }
    }

    #[test]
    fn grid_size() {
        // 0 <= A <= B, C <= D <= 7: sum over s = 2..=9 of s(s-1)/2
        assert_eq!(SpehParams::grid(&Line::default(), 0, 7).len(), 120);
    }

    #[test]
    fn contragredient_matches_multisegment() {
        for p in SpehParams::grid(&Line::default(), 0, 4) {
            assert_eq!(
                p.contragredient().multisegment(),
                p.multisegment().contragredient()
            );
        }
    }
}
