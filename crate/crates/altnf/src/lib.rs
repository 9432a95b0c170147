//! Command-line front end for `altnf-core`.
//!
//! [`run`] takes the full argument vector and two output streams and returns
//! the process exit code: 0 on success, 1 when a verification fails, 2 on
//! usage, parse or library errors.

use std::io::Write;
use std::ops::Range;

use altnf_core::{
    builtin_script, census_solutions, check_assignment, check_bijectivity, check_carmichael, check_stationarity,
    encode_perm, enumerate_range, group_order, nf_evaluate, nf_to_word, normalize_word, normalize_word_traced, rank,
    standard_images, unrank, verify_script_all, v_to_x, x_to_v, Error, NormalFormTuple, Payload,
    Permutation, StatValue, VerificationReport, Witness, Word, DEFAULT_CENSUS_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

#[derive(Debug, Parser)]
#[command(name = "altnf", version, about = "Normal forms and presentations of the alternating groups")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Carmichael,
    Local,
}

#[derive(Debug, Args)]
struct Degree {
    /// Degree of the alternating group
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite a word in x-letters to its normal form
    Normalize {
        #[command(flatten)]
        degree: Degree,
        /// Print every rewriting step
        #[arg(long)]
        trace: bool,
        word: String,
    },
    /// Normal form of an even permutation (one-line or cycle notation)
    Encode {
        #[command(flatten)]
        degree: Degree,
        perm: String,
    },
    /// Evaluate a word (x- or v-letters) to a permutation
    Evaluate {
        #[command(flatten)]
        degree: Degree,
        word: String,
    },
    /// Mixed-radix rank of a normal-form tuple
    Rank {
        #[command(flatten)]
        degree: Degree,
        tuple: String,
    },
    /// Normal-form tuple of a rank
    Unrank {
        #[command(flatten)]
        degree: Degree,
        rank: u128,
    },
    /// List normal forms in rank order
    Enumerate {
        #[command(flatten)]
        degree: Degree,
        /// Half-open rank range `a..b`
        #[arg(long)]
        range: Option<String>,
        /// Print only the number of elements
        #[arg(long)]
        count_only: bool,
    },
    /// Rewrite a word between the local and the Carmichael generators
    Convert {
        #[command(flatten)]
        degree: Degree,
        #[arg(long, value_enum)]
        to: Target,
        word: String,
    },
    /// Run verification checks
    Verify {
        #[command(flatten)]
        degree: Degree,
        /// relations, bijectivity, theorem2, collisions, carmichael, stationarity or solutions
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        check: Option<String>,
        /// Run every applicable check
        #[arg(long)]
        all: bool,
        /// Step limit for the solution census
        #[arg(long, default_value_t = DEFAULT_CENSUS_BUDGET)]
        budget: u64,
    },
}

const CHECKS: [&str; 7] = ["relations", "bijectivity", "theorem2", "collisions", "carmichael", "stationarity", "solutions"];

#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let text = e.render().to_string();
                    let parts: Vec<&str> = text
                        .lines()
                        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .collect();
                    let _ = writeln!(err, "{}", parts.join(" "));
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(passed) => i32::from(!passed),
        Err(f) => {
            let msg = match f {
                Failure::Usage(m) => m,
                Failure::Library(e) => e.to_string(),
                Failure::Io(e) => e.to_string(),
            };
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool, Failure> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Normalize { degree, trace, word } => {
            let n = degree.n;
            let w = Word::parse(word)?;
            let (t, steps) = if *trace { normalize_word_traced(&w, n)? } else { (normalize_word(&w, n)?, Vec::new()) };
            let p = nf_evaluate(&t);
            if json {
                let mut obj = element_json(&t, &p);
                if *trace {
                    let steps: Vec<Value> = steps
                        .iter()
                        .map(|s| json!({"rule": s.rule.to_string(), "before": s.before.to_string(), "after": s.after.to_string()}))
                        .collect();
                    obj.insert("trace".into(), Value::Array(steps));
                }
                writeln!(out, "{}", Value::Object(obj))?;
            } else {
                for s in &steps {
                    writeln!(out, "step\t{}\t{}\t{}", s.rule, s.before, s.after)?;
                }
                element_text(out, &t, &p)?;
            }
        }
        Command::Encode { degree, perm } => {
            let p = Permutation::parse(perm, degree.n)?;
            let t = encode_perm(&p)?;
            if json {
                writeln!(out, "{}", Value::Object(element_json(&t, &p)))?;
            } else {
                element_text(out, &t, &p)?;
            }
        }
        Command::Evaluate { degree, word } => {
            let p = Word::parse(word)?.evaluate(degree.n)?;
            if json {
                writeln!(out, "{}", json!({"perm": p.to_cycle_string(), "one_line": p.to_string()}))?;
            } else {
                writeln!(out, "{}", p.to_cycle_string())?;
                writeln!(out, "{p}")?;
            }
        }
        Command::Rank { degree, tuple } => {
            let t = parse_tuple(tuple, degree.n)?;
            let r = rank(&t)?;
            if json {
                writeln!(out, "{}", json!({"tuple": t.coords(), "rank": r.to_string()}))?;
            } else {
                writeln!(out, "{r}")?;
            }
        }
        Command::Unrank { degree, rank } => {
            let t = unrank(degree.n, *rank)?;
            if json {
                writeln!(out, "{}", json!({"rank": rank.to_string(), "tuple": t.coords()}))?;
            } else {
                writeln!(out, "{t}")?;
            }
        }
        Command::Enumerate { degree, range, count_only } => {
            let n = degree.n;
            let order = group_order(n)?;
            let ranks = match range {
                Some(r) => parse_range(r)?,
                None => 0..order,
            };
            if *count_only {
                let count = ranks.end.min(order).saturating_sub(ranks.start);
                if ranks.start > order {
                    return Err(Error::RankOutOfRange { rank: ranks.start, order }.into());
                }
                if json {
                    writeln!(out, "{}", json!({"n": n, "count": count.to_string()}))?;
                } else {
                    writeln!(out, "{count}")?;
                }
                return Ok(true);
            }
            for (r, (t, p)) in (ranks.start..).zip(enumerate_range(n, ranks)?) {
                if json {
                    writeln!(out, "{}", json!({"rank": r.to_string(), "tuple": t.coords(), "perm": p.to_string()}))?;
                } else {
                    writeln!(out, "{r}\t{t}\t{p}")?;
                }
            }
        }
        Command::Convert { degree, to, word } => {
            let w = Word::parse(word)?;
            let converted = match to {
                Target::Carmichael => x_to_v(&w, degree.n)?,
                Target::Local => v_to_x(&w, degree.n)?,
            };
            if json {
                writeln!(out, "{}", json!({"word": converted.to_string()}))?;
            } else {
                writeln!(out, "{converted}")?;
            }
        }
        Command::Verify { degree, check, all, budget } => {
            let n = degree.n;
            let names: Vec<&str> = if *all {
                CHECKS
                    .iter()
                    .copied()
                    .filter(|&c| match c {
                        "bijectivity" => n <= 8,
                        "solutions" => (5..=7).contains(&n),
                        "theorem2" | "stationarity" => n >= 5,
                        "collisions" | "carmichael" => n >= 4,
                        _ => true,
                    })
                    .collect()
            } else {
                let name = check.as_deref().unwrap_or_default();
                if !CHECKS.contains(&name) {
                    return Err(Failure::Usage(format!(
                        "unknown check '{name}' (expected one of: {})",
                        CHECKS.join(", ")
                    )));
                }
                vec![name]
            };
            let mut reports = Vec::new();
            for name in names {
                reports.push(run_check(name, n, *budget)?);
            }
            let passed = reports.iter().all(|r| r.passed);
            if json {
                if *all {
                    let list: Vec<Value> = reports.iter().map(report_json).collect();
                    writeln!(out, "{}", json!({"check": "all", "n": n, "passed": passed, "reports": list}))?;
                } else {
                    writeln!(out, "{}", report_json(&reports[0]))?;
                }
            } else {
                for r in &reports {
                    report_text(out, r)?;
                }
            }
            return Ok(passed);
        }
    }
    Ok(true)
}

fn run_check(name: &str, n: usize, budget: u64) -> Result<VerificationReport, Failure> {
    Ok(match name {
        "relations" => check_assignment(&standard_images(n)?, n)?,
        "bijectivity" => check_bijectivity(n)?,
        "theorem2" => script_report("theorem2", &["theorem2"], n)?,
        "collisions" => script_report("collisions", &["xtop_square", "collision", "n4_special"], n)?,
        "carmichael" => check_carmichael(n)?,
        "stationarity" => check_stationarity(n)?,
        "solutions" => census_solutions(n, budget)?,
        _ => unreachable!("check names are validated"),
    })
}

/// Runs the named derivation scripts over every admissible parameter and folds
/// the results into one report.
fn script_report(check: &str, scripts: &[&str], n: usize) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new(check, n);
    let mut lines = 0u64;
    let mut parameters = 0u64;
    for name in scripts {
        let script = builtin_script(name).expect("builtin script");
        if script.range(n).is_empty() {
            report.notes.push(format!("{name}: no admissible parameter at degree {n}"));
            continue;
        }
        let sub = verify_script_all(&script, n)?;
        lines += sub.count("steps").unwrap_or(0);
        parameters += sub.count("parameters").unwrap_or(0);
        if let Some(c) = sub.counterexample {
            report.fail(c);
        }
        report.stat(&format!("{name}_passed"), sub.passed);
    }
    report.stat("parameters", parameters);
    report.stat("steps", lines);
    Ok(report)
}

fn parse_tuple(text: &str, n: usize) -> Result<NormalFormTuple, Error> {
    let t = NormalFormTuple::parse(text)?;
    if t.degree() != n {
        return Err(Error::TupleLength { n, got: t.coords().len(), expected: n.saturating_sub(2) });
    }
    Ok(t)
}

fn parse_range(text: &str) -> Result<Range<u128>, Failure> {
    let bad = || Failure::Usage(format!("invalid range '{text}': expected a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: u128 = a.trim().parse().map_err(|_| bad())?;
    let b: u128 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..b)
}

fn element_text(out: &mut dyn Write, t: &NormalFormTuple, p: &Permutation) -> Result<(), Failure> {
    writeln!(out, "tuple\t{t}")?;
    writeln!(out, "word\t{}", nf_to_word(t))?;
    writeln!(out, "perm\t{}", p.to_cycle_string())?;
    if let Ok(r) = rank(t) {
        writeln!(out, "rank\t{r}")?;
    }
    Ok(())
}

fn element_json(t: &NormalFormTuple, p: &Permutation) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("tuple".into(), json!(t.coords()));
    obj.insert("word".into(), json!(nf_to_word(t).to_string()));
    obj.insert("perm".into(), json!(p.to_cycle_string()));
    obj.insert("one_line".into(), json!(p.to_string()));
    if let Ok(r) = rank(t) {
        obj.insert("rank".into(), json!(r.to_string()));
    }
    obj
}

fn stat_json(v: &StatValue) -> Value {
    match v {
        StatValue::Count(c) => json!(c),
        StatValue::Flag(b) => json!(b),
        StatValue::Text(s) => json!(s),
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Word(w) => json!({"word": w.to_string()}),
        Witness::Permutation(p) => json!({"perm": p.to_cycle_string(), "one_line": p.to_string()}),
        Witness::Tuple(t) => json!({"tuple": t.coords()}),
    }
}

fn payload_json(p: &Payload) -> Value {
    let mut witnesses = Map::new();
    for (label, w) in &p.witnesses {
        witnesses.insert(label.clone(), witness_json(w));
    }
    json!({"description": p.description, "witnesses": witnesses})
}

/// `{check, n, passed, counterexample?, stats, samples?, notes?}`.
pub fn report_json(r: &VerificationReport) -> Value {
    let mut obj = Map::new();
    obj.insert("check".into(), json!(r.check));
    obj.insert("n".into(), json!(r.n));
    obj.insert("passed".into(), json!(r.passed));
    if let Some(c) = &r.counterexample {
        obj.insert("counterexample".into(), payload_json(c));
    }
    let stats: Map<String, Value> = r.stats.iter().map(|(k, v)| (k.clone(), stat_json(v))).collect();
    obj.insert("stats".into(), Value::Object(stats));
    if !r.samples.is_empty() {
        obj.insert("samples".into(), Value::Array(r.samples.iter().map(payload_json).collect()));
    }
    if !r.notes.is_empty() {
        obj.insert("notes".into(), json!(r.notes));
    }
    Value::Object(obj)
}

fn report_text(out: &mut dyn Write, r: &VerificationReport) -> Result<(), Failure> {
    writeln!(out, "{r}")?;
    if let Some(c) = &r.counterexample {
        writeln!(out, "  counterexample: {}", c.description)?;
        for (label, w) in &c.witnesses {
            writeln!(out, "    {label} = {}", witness_text(w))?;
        }
    }
    for s in &r.samples {
        let parts: Vec<String> = s.witnesses.iter().map(|(l, w)| format!("{l}={}", witness_text(w))).collect();
        writeln!(out, "  {}: {}", s.description, parts.join(" "))?;
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Permutation(p) => p.to_cycle_string(),
        other => other.to_string(),
    }
}
