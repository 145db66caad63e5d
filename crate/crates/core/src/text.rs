//! Text and JSON forms of multisegments.
//!
//! Text grammar: `term ('+' term)*` where `term = '[' int ',' int ']'`,
//! optionally followed by `@label`. A label applies to every preceding
//! term that has no label yet; unlabeled trailing terms go to `rho`.
//! The empty string is the empty multisegment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::{Line, Segment};

pub fn parse_multisegment(text: &str) -> Result<Multisegment> {
    Parser { src: text, pos: 0 }.parse()
}

/// Canonical text. The label is omitted when every segment is on `rho`.
pub fn format_multisegment(a: &Multisegment) -> String {
    let parts = a.by_line();
    let only_default = parts.len() == 1 && parts.keys().next().unwrap().label() == Line::DEFAULT;
    let mut groups = Vec::with_capacity(parts.len());
    for (line, segs) in &parts {
        let body = segs
            .iter()
            .map(|(b, e)| format!("[{b},{e}]"))
            .collect::<Vec<_>>()
            .join("+");
        if only_default {
            groups.push(body);
        } else {
            groups.push(format!("{body}@{line}"));
        }
    }
    groups.join("+")
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let lit = &self.src[start..self.pos];
        match lit.parse::<i64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected integer")
            }
        }
    }

    fn label(&mut self) -> Result<Line> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_whitespace() || matches!(c, '[' | ']' | ',' | '+' | '@') {
                break;
            }
            self.pos += c.len_utf8();
        }
        if start == self.pos {
            return self.err("expected line label");
        }
        Line::new(&self.src[start..self.pos])
    }

    fn parse(mut self) -> Result<Multisegment> {
        let mut done: Vec<Segment> = Vec::new();
        let mut pending: Vec<(i64, i64)> = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(Multisegment::new());
        }
        loop {
            self.expect('[')?;
            let b = self.int()?;
            self.expect(',')?;
            let e = self.int()?;
            self.expect(']')?;
            if b > e {
                return Err(Error::EmptySegment { b, e });
            }
            pending.push((b, e));
            self.skip_ws();
            if self.peek() == Some('@') {
                self.pos += 1;
                let line = self.label()?;
                for (b, e) in pending.drain(..) {
                    done.push(Segment::new(line.clone(), b, e)?);
                }
                self.skip_ws();
            }
            match self.peek() {
                None => break,
                Some('+') => self.pos += 1,
                Some(c) => return self.err(format!("unexpected '{c}'")),
            }
        }
        let rho = Line::default();
        for (b, e) in pending {
            done.push(Segment::new(rho.clone(), b, e)?);
        }
        Ok(Multisegment::from_segments(done))
    }
}

/// JSON object for the segments of one line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineSegments {
    pub line: Line,
    pub segments: Vec<[i64; 2]>,
}

/// JSON value: a single object when the multisegment lives on one line,
/// otherwise an array of per-line objects (empty array when empty).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultisegmentJson {
    Single(LineSegments),
    Many(Vec<LineSegments>),
}

pub fn to_json(a: &Multisegment) -> MultisegmentJson {
    let mut groups: Vec<LineSegments> = a
        .by_line()
        .into_iter()
        .map(|(line, segs)| LineSegments {
            line,
            segments: segs.iter().map(|&(b, e)| [b, e]).collect(),
        })
        .collect();
    if groups.len() == 1 {
        MultisegmentJson::Single(groups.pop().unwrap())
    } else {
        MultisegmentJson::Many(groups)
    }
}

pub fn from_json(v: &MultisegmentJson) -> Result<Multisegment> {
    let groups: &[LineSegments] = match v {
        MultisegmentJson::Single(g) => std::slice::from_ref(g),
        MultisegmentJson::Many(gs) => gs,
    };
    let mut items = Vec::new();
    for g in groups {
        for &[b, e] in &g.segments {
            items.push(Segment::new(g.line.clone(), b, e)?);
        }
    }
    Ok(Multisegment::from_segments(items))
}

pub fn to_json_string(a: &Multisegment) -> String {
    serde_json::to_string(&to_json(a)).expect("serializable")
}

pub fn from_json_str(s: &str) -> Result<Multisegment> {
    let v: MultisegmentJson = serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_multisegment("[0,1]+[1,2]").unwrap(),
            Multisegment::rho([(0, 1), (1, 2)])
        );
        let mu = Line::new("mu").unwrap();
        let a = parse_multisegment("[2,3]+[0,1]@mu").unwrap();
        assert_eq!(a, Multisegment::on_line(&mu, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(format_multisegment(&a), "[0,1]+[2,3]@mu");
        let err = parse_multisegment("[3,1]").unwrap_err();
        assert!(err.to_string().contains("empty segment"));
    }

    #[test]
    fn malformed_text_reports_position() {
        match parse_multisegment("[0,1]+[1 2]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_multisegment("[0,1]+"),
            Err(Error::Parse { pos: 6, .. })
        ));
        assert!(matches!(
            parse_multisegment("[0,1]@"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_multisegment("[a,1]"),
            Err(Error::Parse { pos: 1, .. })
        ));
    }

    #[test]
    fn mixed_lines() {
        let a = parse_multisegment("[0,1]@mu + [-2,-1]@nu + [0,0]").unwrap();
        assert_eq!(format_multisegment(&a), "[0,1]@mu+[-2,-1]@nu+[0,0]@rho");
        assert_eq!(parse_multisegment(&format_multisegment(&a)).unwrap(), a);
    }

    #[test]
    fn empty_text() {
        assert_eq!(parse_multisegment("  ").unwrap(), Multisegment::new());
        assert_eq!(format_multisegment(&Multisegment::new()), "");
    }

    #[test]
    fn json_forms() {
        let a = Multisegment::rho([(1, 2), (0, 1)]);
        assert_eq!(
            to_json_string(&a),
            r#"{"line":"rho","segments":[[0,1],[1,2]]}"#
        );
        assert_eq!(from_json_str(&to_json_string(&a)).unwrap(), a);
        let b = parse_multisegment("[0,0]@a+[1,1]@b").unwrap();
        assert_eq!(
            to_json_string(&b),
            r#"[{"line":"a","segments":[[0,0]]},{"line":"b","segments":[[1,1]]}]"#
        );
        assert_eq!(from_json_str(&to_json_string(&b)).unwrap(), b);
        assert_eq!(to_json_string(&Multisegment::new()), "[]");
        assert!(from_json_str(r#"{"line":"rho","segments":[[2,1]]}"#).is_err());
        assert!(from_json_str(r#"{"line":"r o","segments":[]}"#).is_err());
    }
}
