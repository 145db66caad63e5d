//! Dot diagrams: one row per segment, one column per exponent.

use std::fmt::Write;

use clap::ValueEnum;
use multiseg::Multisegment;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Svg,
}

/// Marks used for successive blocks (factors).
const MARKS: [char; 4] = ['o', 'x', '+', '#'];
const FILLS: [&str; 4] = ["black", "white", "gray", "silver"];

struct Row {
    block: usize,
    label: String,
    b: i64,
    e: i64,
}

fn rows(blocks: &[Multisegment]) -> Vec<Row> {
    let several_lines = blocks
        .iter()
        .flat_map(|m| m.lines())
        .collect::<std::collections::BTreeSet<_>>()
        .len()
        > 1;
    blocks
        .iter()
        .enumerate()
        .flat_map(|(block, m)| {
            m.iter().map(move |s| {
                let label = if several_lines {
                    format!("[{},{}]@{}", s.begin(), s.end(), s.line())
                } else {
                    format!("[{},{}]", s.begin(), s.end())
                };
                Row {
                    block,
                    label,
                    b: s.begin(),
                    e: s.end(),
                }
            })
        })
        .collect()
}

pub fn render(blocks: &[Multisegment], format: Format) -> String {
    let rows = rows(blocks);
    match format {
        Format::Text => text(&rows),
        Format::Svg => svg(&rows),
    }
}

fn text(rows: &[Row]) -> String {
    let mut out = String::new();
    let (Some(lo), Some(hi)) = (
        rows.iter().map(|r| r.b).min(),
        rows.iter().map(|r| r.e).max(),
    ) else {
        return out;
    };
    let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let cell = (lo..=hi).map(|x| x.to_string().len()).max().unwrap_or(1) + 1;
    let mut header = " ".repeat(width);
    for x in lo..=hi {
        write!(header, "{x:>cell$}").unwrap();
    }
    out.push_str(header.trim_end());
    out.push('\n');
    let mut last_block = 0;
    for r in rows {
        if r.block != last_block {
            out.push('\n');
            last_block = r.block;
        }
        let mut line = format!("{:<width$}", r.label);
        for x in lo..=hi {
            let mark = if (r.b..=r.e).contains(&x) {
                MARKS[r.block % MARKS.len()]
            } else {
                ' '
            };
            write!(line, "{mark:>cell$}").unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn svg(rows: &[Row]) -> String {
    const STEP: i64 = 24;
    const LEFT: i64 = 96;
    const TOP: i64 = 32;
    let lo = rows.iter().map(|r| r.b).min().unwrap_or(0);
    let hi = rows.iter().map(|r| r.e).max().unwrap_or(0);
    let width = LEFT + (hi - lo + 1) * STEP + STEP / 2;
    let height = TOP + rows.len() as i64 * STEP + STEP / 2;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<g font-family="monospace" font-size="12">"#).unwrap();
    if !rows.is_empty() {
        for x in lo..=hi {
            let cx = LEFT + (x - lo) * STEP + STEP / 2;
            writeln!(
                out,
                r#"<text x="{cx}" y="{}" text-anchor="middle">{x}</text>"#,
                TOP - 12
            )
            .unwrap();
        }
    }
    for (i, r) in rows.iter().enumerate() {
        let cy = TOP + i as i64 * STEP + STEP / 2;
        writeln!(out, r#"<text x="4" y="{}">{}</text>"#, cy + 4, r.label).unwrap();
        let fill = FILLS[r.block % FILLS.len()];
        for x in r.b..=r.e {
            let cx = LEFT + (x - lo) * STEP + STEP / 2;
            writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="6" fill="{fill}" stroke="black"/>"#
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
