//! `multiseg`: command-line access to the involution, the linking order
//! and the reducibility criteria.
//!
//! Verdicts are printed as data. The exit status only reports operational
//! problems: 2 for bad input, 3 when the two involution algorithms
//! disagree, 4 when a downset enumeration runs out of budget, and 1 when a
//! verification suite records failures.

mod diagram;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multiseg::criteria::{
    badulescu_check, mw_verdict, product_irreducible, rc_check, speh_reducible_by_crossing,
    speh_reducible_by_dominance, MwParams, Status, Verdict,
};
use multiseg::involution::{dual_with_trace, Algorithm, StepTrace};
use multiseg::lnt::{lnt_reducible, Ladder, Partition};
use multiseg::order::{default_budget, strict_downset};
use multiseg::text::to_json;
use multiseg::verify::{Config, Report, Suite};
use multiseg::{parse_multisegment, Error, Line, Multisegment, SpehParams};

#[derive(Parser)]
#[command(
    name = "multiseg",
    version,
    about = "Multisegment combinatorics and Speh reducibility criteria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zelevinsky dual of a multisegment, e.g. "[0,2]+[1,3]".
    Dual {
        multisegment: String,
        #[arg(long, value_enum, default_value_t = AlgoChoice::Left)]
        algo: AlgoChoice,
        /// Print every step of the algorithm.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reducibility of the product of two Speh multisegments.
    Speh {
        /// Quadruple A,B,C,D.
        #[arg(long, value_parser = parse_quadruple, allow_hyphen_values = true)]
        p1: [i64; 4],
        #[arg(long, value_parser = parse_quadruple, allow_hyphen_values = true)]
        p2: [i64; 4],
        #[arg(long, default_value = "rho")]
        line1: String,
        #[arg(long, default_value = "rho")]
        line2: String,
        #[arg(long, value_enum, default_value_t = CriterionChoice::Thm72)]
        criterion: CriterionChoice,
        #[arg(long)]
        json: bool,
    },
    /// Irreducibility of a product of several Speh multisegments.
    Product {
        /// Quadruple A,B,C,D, optionally followed by @line. Repeat for each factor.
        #[arg(long = "p", required = true, allow_hyphen_values = true)]
        factors: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Multisegments below the given one in the linking order.
    Downset {
        multisegment: String,
        /// Largest number of states to visit (default: MULTISEG_BUDGET or 200000).
        #[arg(long)]
        limit: Option<usize>,
        /// Leave out the multisegment itself.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Ladder reducibility from partitions and top-row beginnings.
    Lnt {
        #[arg(long)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
        #[arg(long, default_value = "rho")]
        line1: String,
        #[arg(long, default_value = "rho")]
        line2: String,
        #[arg(long)]
        json: bool,
    },
    /// Dot diagram of a multisegment or of Speh quadruples.
    Diagram {
        multisegment: Option<String>,
        /// Quadruple A,B,C,D. Repeat to draw several factors.
        #[arg(long = "p", value_parser = parse_quadruple, allow_hyphen_values = true)]
        quadruples: Vec<[i64; 4]>,
        #[arg(long, value_enum, default_value_t = diagram::Format::Text)]
        format: diagram::Format,
    },
    /// Run verification suites and report failures.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_end: i64,
        #[arg(long, default_value_t = 5)]
        max_segments: usize,
        /// Downset budget (default: MULTISEG_BUDGET or 200000).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases for the sampled suites.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        json: bool,
        /// Spread cases over all cores.
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionChoice {
    Thm72,
    Thm71,
    Rc,
    Badulescu,
    Lnt,
    Mw,
    All,
}

impl CriterionChoice {
    fn name(self) -> &'static str {
        match self {
            CriterionChoice::Thm72 => "thm72",
            CriterionChoice::Thm71 => "thm71",
            CriterionChoice::Rc => "rc",
            CriterionChoice::Badulescu => "badulescu",
            CriterionChoice::Lnt => "lnt",
            CriterionChoice::Mw => "mw",
            CriterionChoice::All => "all",
        }
    }
}

fn parse_quadruple(s: &str) -> Result<[i64; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected A,B,C,D, got `{s}`"));
    }
    let mut q = [0; 4];
    for (slot, p) in q.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not an integer"))?;
    }
    Ok(q)
}

/// Failure modes mapped to exit codes.
enum Failure {
    Input(String),
    Mismatch(String),
    Budget(usize),
    SuitesFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { visited } => Failure::Budget(visited),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Budget(visited)) => {
            eprintln!("error: downset budget exceeded after {visited} states");
            ExitCode::from(4)
        }
        Err(Failure::SuitesFailed) => ExitCode::from(1),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Dual {
            multisegment,
            algo,
            trace,
            json,
        } => cmd_dual(&multisegment, algo, trace, json),
        Command::Speh {
            p1,
            p2,
            line1,
            line2,
            criterion,
            json,
        } => {
            let p1 = speh(p1, &line1)?;
            let p2 = speh(p2, &line2)?;
            cmd_speh(&p1, &p2, criterion, json)
        }
        Command::Product { factors, json } => cmd_product(&factors, json),
        Command::Downset {
            multisegment,
            limit,
            strict,
            json,
        } => cmd_downset(
            &multisegment,
            limit.unwrap_or_else(default_budget),
            strict,
            json,
        ),
        Command::Lnt {
            alpha,
            x,
            beta,
            y,
            line1,
            line2,
            json,
        } => {
            let alpha = Partition::parse(&alpha)?;
            let beta = Partition::parse(&beta)?;
            let same = Line::new(&line1)? == Line::new(&line2)?;
            cmd_lnt(Ladder::new(alpha, x), Ladder::new(beta, y), same, json)
        }
        Command::Diagram {
            multisegment,
            quadruples,
            format,
        } => {
            let blocks = match (multisegment, quadruples.is_empty()) {
                (Some(text), true) => vec![parse_multisegment(&text)?],
                (None, false) => quadruples
                    .iter()
                    .map(|&q| speh(q, "rho").map(|p| p.multisegment()))
                    .collect::<Result<Vec<_>, _>>()?,
                _ => {
                    return Err(Failure::Input(
                        "give either a multisegment or --p quadruples".into(),
                    ))
                }
            };
            print!("{}", diagram::render(&blocks, format));
            Ok(())
        }
        Command::Verify {
            suite,
            max_end,
            max_segments,
            budget,
            seed,
            samples,
            json,
            parallel,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite
                    .parse()
                    .map_err(|e: multiseg::verify::UnknownSuite| Failure::Input(e.to_string()))?]
            };
            let config = Config {
                max_end,
                max_segments,
                budget: budget.unwrap_or_else(default_budget),
                seed,
                samples,
                parallel,
            };
            cmd_verify(&suites, &config, json)
        }
    }
}

fn speh([a, b, c, d]: [i64; 4], line: &str) -> Result<SpehParams, Failure> {
    Ok(SpehParams::new(Line::new(line)?, a, b, c, d)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_dual(text: &str, algo: AlgoChoice, trace: bool, json: bool) -> Result<(), Failure> {
    let a = parse_multisegment(text)?;
    let runs: Vec<(Algorithm, Multisegment, Vec<StepTrace>)> = match algo {
        AlgoChoice::Left => vec![Algorithm::Left],
        AlgoChoice::Right => vec![Algorithm::Right],
        AlgoChoice::Both => vec![Algorithm::Left, Algorithm::Right],
    }
    .into_iter()
    .map(|al| {
        let (d, t) = dual_with_trace(&a, al);
        (al, d, t)
    })
    .collect();
    if let [(_, left, _), (_, right, _)] = runs.as_slice() {
        if left != right {
            return Err(Failure::Mismatch(format!(
                "algorithms disagree: left {left}, right {right}"
            )));
        }
    }
    let result = &runs[0].1;
    if json {
        let mut out = json!({ "input": to_json(&a), "dual": to_json(result) });
        if algo == AlgoChoice::Both {
            out["agree"] = json!(true);
        }
        if trace {
            let traces: serde_json::Map<String, Value> = runs
                .iter()
                .map(|(al, _, t)| {
                    let steps: Vec<Value> = t
                        .iter()
                        .map(|s| serde_json::to_value(s.to_json()).unwrap())
                        .collect();
                    (algo_name(*al).to_string(), Value::Array(steps))
                })
                .collect();
            out["traces"] = Value::Object(traces);
        }
        print_json(&out);
    } else {
        println!("{result}");
        if trace {
            for (al, _, t) in &runs {
                println!("{} algorithm:", algo_name(*al));
                for (i, s) in t.iter().enumerate() {
                    let used: Vec<String> = s.used.iter().map(|u| u.to_string()).collect();
                    println!("  step {}: {} from {}", i + 1, s.produced, used.join(" "));
                }
            }
        }
    }
    Ok(())
}

fn algo_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Left => "left",
        Algorithm::Right => "right",
    }
}

fn cmd_speh(
    p1: &SpehParams,
    p2: &SpehParams,
    criterion: CriterionChoice,
    json: bool,
) -> Result<(), Failure> {
    let budget = default_budget();
    let (a, b) = (p1.multisegment(), p2.multisegment());
    let evaluate = |c: CriterionChoice| -> Verdict {
        match c {
            CriterionChoice::Thm72 | CriterionChoice::All => speh_reducible_by_dominance(p1, p2),
            CriterionChoice::Thm71 => speh_reducible_by_crossing(p1, p2),
            CriterionChoice::Rc => rc_check(&a, &b),
            CriterionChoice::Badulescu => badulescu_check(&a, &b, budget),
            CriterionChoice::Lnt => lnt_reducible(
                &Ladder::from_speh(p1),
                &Ladder::from_speh(p2),
                p1.line() == p2.line(),
            ),
            CriterionChoice::Mw => mw_verdict(&MwParams::from_speh(p1), &MwParams::from_speh(p2)),
        }
    };
    let chosen: Vec<CriterionChoice> = if criterion == CriterionChoice::All {
        use CriterionChoice::*;
        vec![Thm72, Thm71, Rc, Badulescu, Lnt, Mw]
    } else {
        vec![criterion]
    };
    let results: Vec<(CriterionChoice, Verdict)> =
        chosen.into_iter().map(|c| (c, evaluate(c))).collect();
    let reference = results[0].1.status;
    let decisive: Vec<&Verdict> = results
        .iter()
        .map(|(_, v)| v)
        .filter(|v| v.status != Status::Unknown)
        .collect();
    let agree = decisive.iter().all(|v| v.status == decisive[0].status);
    let status = if criterion == CriterionChoice::All && !agree {
        reference
    } else {
        decisive.first().map_or(reference, |v| v.status)
    };
    if json {
        let rows: Vec<Value> = results
            .iter()
            .map(|(c, v)| json!({ "criterion": c.name(), "verdict": serde_json::to_value(v).unwrap() }))
            .collect();
        print_json(&json!({
            "p1": p1.to_string(),
            "p2": p2.to_string(),
            "status": serde_json::to_value(status).unwrap(),
            "results": rows,
            "agree": agree,
        }));
    } else if results.len() == 1 {
        println!("{}", results[0].1);
    } else {
        println!("{status}");
        for (c, v) in &results {
            println!("  {:<10} {v}", c.name());
        }
        if agree {
            println!("all decisive criteria agree");
        } else {
            println!("criteria DISAGREE");
        }
    }
    Ok(())
}

fn parse_factor(s: &str) -> Result<SpehParams, Failure> {
    let (quad, line) = s.split_once('@').unwrap_or((s, "rho"));
    speh(parse_quadruple(quad).map_err(Failure::Input)?, line)
}

fn cmd_product(factors: &[String], json: bool) -> Result<(), Failure> {
    let ps: Vec<SpehParams> = factors
        .iter()
        .map(|f| parse_factor(f))
        .collect::<Result<_, _>>()?;
    let v = product_irreducible(&ps)?;
    if json {
        print_json(&json!({
            "factors": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "verdict": serde_json::to_value(&v).unwrap(),
        }));
    } else {
        match &v.evidence.witness {
            Some(multiseg::criteria::Witness::Pair {
                first,
                second,
                inner,
            }) => {
                println!(
                    "{} (pair {first},{second}: {}: {})",
                    v.status, inner.criterion, inner.clause
                )
            }
            _ => println!("{v}"),
        }
    }
    Ok(())
}

fn cmd_downset(text: &str, limit: usize, strict: bool, json: bool) -> Result<(), Failure> {
    let a = parse_multisegment(text)?;
    let mut elements: Vec<Multisegment> = strict_downset(&a, limit)?.into_iter().collect();
    if !strict {
        elements.push(a.clone());
        elements.sort();
    }
    if json {
        print_json(&json!({
            "multisegment": to_json(&a),
            "strict": strict,
            "count": elements.len(),
            "elements": elements.iter().map(to_json).collect::<Vec<_>>(),
        }));
    } else {
        let noun = if elements.len() == 1 {
            "element"
        } else {
            "elements"
        };
        println!("{} {noun}", elements.len());
        for e in &elements {
            println!("{e}");
        }
    }
    Ok(())
}

fn cmd_lnt(l1: Ladder, l2: Ladder, same_line: bool, json: bool) -> Result<(), Failure> {
    let v = lnt_reducible(&l1, &l2, same_line);
    if json {
        print_json(&serde_json::to_value(&v).unwrap());
    } else {
        println!("{v}");
        if let Some(multiseg::criteria::Witness::IntervalSets {
            first_minus_second,
            second_minus_first,
            provenance,
        }) = &v.evidence.witness
        {
            println!("  I1 \\ I2 = {first_minus_second:?}");
            println!("  I2 \\ I1 = {second_minus_first:?}");
            println!("  provenance: {provenance}");
        }
    }
    Ok(())
}

fn cmd_verify(suites: &[Suite], config: &Config, json: bool) -> Result<(), Failure> {
    let reports: Vec<Report> = suites.iter().map(|s| s.run(config)).collect();
    if json {
        let v = if reports.len() == 1 {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(&reports)
        };
        print_json(&v.expect("serializable"));
    } else {
        for r in &reports {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            println!(
                "{verdict} {:<22} {:>9} cases {:>6} failures {:>8.2}s",
                r.suite.name(),
                r.cases_run,
                r.failures.len(),
                r.wall_time
            );
            for f in r.failures.iter().take(5) {
                println!("    {}: expected {}, got {}", f.inputs, f.expected, f.got);
            }
            if r.failures.len() > 5 {
                println!("    ... {} more", r.failures.len() - 5);
            }
        }
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::SuitesFailed)
    }
}
