use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tsscpp::constterm::{constant_term, constant_term_with_cap, CtRequest};
use tsscpp::exactmath::{Matrix, SparsePoly};
use tsscpp::genfun::{brute_side, gf_pfaffian, GfRequest, WeightKind};
use tsscpp::pfaffian::{pfaffian, SkewMatrix};
use tsscpp::ppart::{
    cspp_to_tsscpp, enumerate_cspp, enumerate_mt, enumerate_tspp, stat_row, subset_filter, SubsetFilter,
};
use tsscpp::refnum::{asm_doubly, asm_refined, avs_number, avs_refined, card_cspp};
use tsscpp::structmat::{build_b, build_skew, BMode, SkewKind};
use tsscpp::verify::{self, Report, Suite, VerifyOptions};

#[derive(Parser)]
#[command(name = "tsscpp", version, about = "Plane partition classes, their statistics and Pfaffian generating functions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Cspp,
    Tspp,
    Mt,
    Tsscpp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Pfaffian,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Compare {
    Pfaffian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Asm,
    Asm2,
    Avs,
    Card,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    S,
    Sbar,
    R,
    C,
    Rbar,
    Cbar,
    L,
    Lbar,
    B,
    Block,
}

#[derive(Subcommand)]
enum Command {
    /// Pfaffian of a skew-symmetric matrix given as JSON (argument, file or stdin).
    Pfaffian {
        /// JSON array of rows of polynomial strings; `-` or absent reads stdin.
        matrix: Option<String>,
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Print one of the structured matrices as JSON rows.
    Matrix {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        /// Size of a skew family.
        #[arg(long)]
        size: Option<usize>,
        /// Parameter of R, C, Rbar, Cbar or the eps of L, Lbar.
        #[arg(long, default_value = "t")]
        param: String,
        /// Number of columns `n` (B, block) or index-set size `m` (L, Lbar).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// B mode: plain, refined, doubly-refined or truncated (uses --k).
        #[arg(long, default_value = "plain")]
        mode: String,
        /// Weight for the block matrix.
        #[arg(long)]
        weight: Option<String>,
    },
    /// Enumerate a class with an optional filter.
    Enumerate {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// all, rows-even, cols-even, rows<=K, cspp-kxy:K,X,Y, tspp-k:K, tspp-kxy:K,X,Y, mt-k:K, mt-kxy:K,X,Y.
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Generating function of a weight by enumeration, by Pfaffian, or both.
    Gf {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Row bound for the `mt` weight.
        #[arg(long)]
        k: Option<usize>,
        /// Statistic index r for the enumeration side (defaults to the largest).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Generating function as a constant term.
    Constterm {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Truncation degree per variable.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum)]
        compare: Option<Compare>,
    },
    /// Reference number tables as CSV.
    Tables {
        #[arg(long, value_enum)]
        family: Family,
        /// Largest n (for avs: largest odd size).
        #[arg(long, default_value_t = 7)]
        max: usize,
    },
    /// Run verification suites; exit code 0 iff every theorem case matches.
    Verify {
        /// A suite name or `all`.
        suite: String,
        #[arg(long = "max-nm")]
        max_nm: Option<usize>,
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let fmt = cli.format;
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Pfaffian { matrix, file } => {
            let text = match (matrix, file) {
                (_, Some(path)) => std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?,
                (Some(s), None) if s != "-" => s,
                _ => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let rows: Vec<Vec<SparsePoly>> = serde_json::from_str(&text).context("matrix must be a JSON array of rows")?;
            let a = SkewMatrix::new(Matrix::from_rows(rows)?)?;
            let p = pfaffian(&a);
            match fmt {
                Format::Json => writeln!(out, "{}", json!({ "pfaffian": p }))?,
                _ => writeln!(out, "{p}")?,
            }
        }
        Command::Matrix { kind, size, param, n, m, k, big_n, mode, weight } => {
            let rows = matrix_rows(kind, size, &param, n, m, k, big_n, &mode, weight.as_deref())?;
            write_matrix(&mut out, fmt, &rows)?;
        }
        Command::Enumerate { class, n, m, filter } => {
            let f: SubsetFilter = filter.parse()?;
            enumerate(&mut out, fmt, class, n, m, f)?;
        }
        Command::Gf { weight, n, m, big_n, k, r, method } => {
            let kind = parse_weight(&weight, k)?;
            let req = match big_n {
                Some(b) => GfRequest::with_big_n(kind, n, m, b)?,
                None => GfRequest::new(kind, n, m)?,
            };
            let r = r.unwrap_or_else(|| *kind.r_values(n, m).last().unwrap_or(&0));
            let brute = matches!(method, Method::Brute | Method::Both).then(|| brute_side(kind, n, m, r)).transpose()?;
            let pf = matches!(method, Method::Pfaffian | Method::Both).then(|| gf_pfaffian(&req)).transpose()?;
            let matched = match (&brute, &pf) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            match fmt {
                Format::Json => {
                    let v = json!({
                        "weight": kind.to_string(), "n": n, "m": m, "N": req.big_n, "r": r,
                        "brute": brute, "pfaffian": pf, "match": matched,
                    });
                    writeln!(out, "{v}")?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["method", "polynomial"])?;
                    if let Some(p) = &brute {
                        w.write_record(["brute", &p.to_string()])?;
                    }
                    if let Some(p) = &pf {
                        w.write_record(["pfaffian", &p.to_string()])?;
                    }
                    w.flush()?;
                }
                Format::Pretty => {
                    for p in brute.iter().chain(pf.iter()) {
                        writeln!(out, "{p}")?;
                    }
                    if let Some(mt) = matched {
                        writeln!(out, "{}", if mt { "MATCH" } else { "MISMATCH" })?;
                    }
                }
            }
            if matched == Some(false) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Constterm { weight, n, m, k, cap, compare } => {
            let kind = parse_weight(&weight, k)?;
            let req = CtRequest::for_kind(kind, n, m)?;
            let ct = match cap {
                Some(c) => constant_term_with_cap(&req, c)?,
                None => constant_term(&req)?,
            };
            let pf = compare.map(|_| GfRequest::new(kind, n, m).and_then(|r| gf_pfaffian(&r))).transpose()?;
            let matched = pf.as_ref().map(|p| *p == ct);
            match fmt {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"weight": kind.to_string(), "n": n, "m": m, "kernel": req.kernel.name(), "constterm": ct, "pfaffian": pf, "match": matched})
                )?,
                _ => {
                    writeln!(out, "{ct}")?;
                    if let Some(p) = &pf {
                        writeln!(out, "{p}")?;
                        writeln!(out, "{}", if matched == Some(true) { "MATCH" } else { "MISMATCH" })?;
                    }
                }
            }
            if matched == Some(false) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Tables { family, max } => tables(&mut out, family, max)?,
        Command::Verify { suite, max_nm, id, n, k } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let report = verify::run(&suites, &VerifyOptions { max_nm, id, n, k });
            write_report(&mut out, fmt, &report)?;
            if !report.theorems_ok() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_weight(name: &str, k: Option<usize>) -> Result<WeightKind> {
    if name.eq_ignore_ascii_case("mt") {
        let k = k.ok_or_else(|| anyhow!("weight mt needs --k"))?;
        return Ok(WeightKind::Mt(k));
    }
    Ok(name.parse()?)
}

#[allow(clippy::too_many_arguments)]
fn matrix_rows(
    kind: MatrixKind,
    size: Option<usize>,
    param: &str,
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    big_n: Option<usize>,
    mode: &str,
    weight: Option<&str>,
) -> Result<Vec<Vec<SparsePoly>>> {
    let p: SparsePoly = param.parse()?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("--{flag} is required for this kind"));
    let skew = |k: SkewKind| -> Result<Vec<Vec<SparsePoly>>> { Ok(build_skew(&k, need(size, "size")?)?.matrix().to_rows()) };
    match kind {
        MatrixKind::S => skew(SkewKind::S),
        MatrixKind::Sbar => skew(SkewKind::SBar),
        MatrixKind::R => skew(SkewKind::R(p)),
        MatrixKind::C => skew(SkewKind::C(p)),
        MatrixKind::Rbar => skew(SkewKind::RBar(p)),
        MatrixKind::Cbar => skew(SkewKind::CBar(p)),
        MatrixKind::L => skew(SkewKind::L { m: need(m, "m")?, k: need(k, "k")?, eps: p }),
        MatrixKind::Lbar => skew(SkewKind::LBar { m: need(m, "m")?, k: need(k, "k")?, eps: p }),
        MatrixKind::B => {
            let (n, m) = (need(n, "n")?, m.unwrap_or(0));
            let big_n = big_n.unwrap_or_else(|| tsscpp::genfun::default_big_n(n, m));
            let t = || "t".parse::<SparsePoly>();
            let mode = match mode {
                "plain" => BMode::Plain,
                "refined" => BMode::Refined(t()?),
                "doubly-refined" => BMode::DoublyRefined(t()?, "u".parse()?),
                "truncated" => BMode::Truncated { k: need(k, "k")?, t: t()? },
                other => bail!("unknown B mode '{other}'"),
            };
            Ok(build_b(n, m, big_n, &mode)?.to_rows())
        }
        MatrixKind::Block => {
            let w = weight.ok_or_else(|| anyhow!("--weight is required for the block matrix"))?;
            let kind = parse_weight(w, k)?;
            let (n, m) = (need(n, "n")?, m.unwrap_or(0));
            let req = match big_n {
                Some(b) => GfRequest::with_big_n(kind, n, m, b)?,
                None => GfRequest::new(kind, n, m)?,
            };
            Ok(req.block()?.matrix().to_rows())
        }
    }
}

fn write_matrix(out: &mut impl Write, fmt: Format, rows: &[Vec<SparsePoly>]) -> Result<()> {
    match fmt {
        Format::Json => writeln!(out, "{}", serde_json::to_string(rows)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.write_record(r.iter().map(|p| p.to_string()))?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
            let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
            for r in cells {
                let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{}", line.join("  "))?;
            }
        }
    }
    Ok(())
}

fn enumerate(out: &mut impl Write, fmt: Format, class: Class, n: usize, m: usize, f: SubsetFilter) -> Result<()> {
    let (objects, texts, stats): (Vec<Value>, Vec<String>, Option<Vec<tsscpp::ppart::StatRow>>) = match class {
        Class::Cspp => {
            let cs = subset_filter(&enumerate_cspp(n, m)?, f)?;
            let stats = cs.iter().map(stat_row).collect();
            (cs.iter().map(|c| json!(c.rows)).collect(), cs.iter().map(|c| c.to_string()).collect(), Some(stats))
        }
        Class::Tspp => {
            let ts = subset_filter(&enumerate_tspp(n, m)?, f)?;
            (ts.iter().map(|b| json!(b.rows)).collect(), ts.iter().map(|b| b.to_string()).collect(), None)
        }
        Class::Mt => {
            let mts = subset_filter(&enumerate_mt(n)?, f)?;
            (mts.iter().map(|t| json!(t.rows)).collect(), mts.iter().map(|t| t.to_string()).collect(), None)
        }
        Class::Tsscpp => {
            if f != SubsetFilter::All {
                bail!("tsscpp takes no filter");
            }
            let ps: Vec<_> = enumerate_cspp(n, m)?.iter().map(cspp_to_tsscpp).collect::<tsscpp::Result<_>>()?;
            let texts = ps.iter().map(|p| serde_json::to_string(&p.heights)).collect::<serde_json::Result<_>>()?;
            (ps.iter().map(|p| json!(p.heights)).collect(), texts, None)
        }
    };
    match fmt {
        Format::Json => {
            for o in &objects {
                writeln!(out, "{}", json!({ "rows": o }))?;
            }
            if let Some(stats) = &stats {
                writeln!(out, "{}", json!({ "statistics": stats_json(stats, n + m) }))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let h = n + m;
            let mut header = vec!["object".to_string()];
            if stats.is_some() {
                header.extend((1..=h).map(|r| format!("Ubar_{r}")));
                header.extend(["V^R", "V^C", "profile", "size"].map(String::from));
            }
            w.write_record(&header)?;
            for (i, t) in texts.iter().enumerate() {
                let mut rec = vec![t.clone()];
                if let Some(stats) = &stats {
                    let s = &stats[i];
                    rec.extend(s.ubar.iter().map(|v| v.to_string()));
                    rec.extend([s.vr, s.vc, s.profile, s.size].map(|v| v.to_string()));
                }
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            for t in &texts {
                writeln!(out, "{t}")?;
            }
            if class == Class::Cspp && f == SubsetFilter::All {
                write!(out, "{}", verify::statistics_table(n, m)?)?;
            }
        }
    }
    Ok(())
}

fn stats_json(stats: &[tsscpp::ppart::StatRow], h: usize) -> Value {
    let mut cols = serde_json::Map::new();
    for r in 1..=h {
        cols.insert(format!("Ubar_{r}"), json!(stats.iter().map(|s| s.ubar[r - 1]).collect::<Vec<_>>()));
    }
    cols.insert("V^R".into(), json!(stats.iter().map(|s| s.vr).collect::<Vec<_>>()));
    cols.insert("V^C".into(), json!(stats.iter().map(|s| s.vc).collect::<Vec<_>>()));
    cols.insert("profile".into(), json!(stats.iter().map(|s| s.profile).collect::<Vec<_>>()));
    cols.insert("size".into(), json!(stats.iter().map(|s| s.size).collect::<Vec<_>>()));
    Value::Object(cols)
}

fn tables(out: &mut impl Write, family: Family, max: usize) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match family {
        Family::Asm => {
            w.write_record(["n", "r", "value"])?;
            for n in 1..=max {
                for r in 1..=n {
                    w.write_record([n.to_string(), r.to_string(), asm_refined(n, r)?.to_string()])?;
                }
            }
        }
        Family::Asm2 => {
            w.write_record(["n", "k", "l", "value"])?;
            for n in 2..=max {
                for (k, row) in asm_doubly(n)?.iter().enumerate() {
                    for (l, v) in row.iter().enumerate() {
                        w.write_record([n.to_string(), (k + 1).to_string(), (l + 1).to_string(), v.to_string()])?;
                    }
                }
            }
        }
        Family::Avs => {
            w.write_record(["size", "r", "value"])?;
            for size in (3..=max.max(3)).step_by(2) {
                w.write_record([size.to_string(), "total".to_string(), avs_number(size)?.to_string()])?;
                for r in 1..size {
                    w.write_record([size.to_string(), r.to_string(), avs_refined(size, r)?.to_string()])?;
                }
            }
        }
        Family::Card => {
            w.write_record(["n", "m", "value"])?;
            for n in 1..=max {
                for m in 0..=max {
                    w.write_record([n.to_string(), m.to_string(), card_cspp(n, m).to_string()])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn write_report(out: &mut impl Write, fmt: Format, report: &Report) -> Result<()> {
    match fmt {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(report)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["case", "kind", "params", "lhs", "rhs", "match", "method_lhs", "method_rhs", "note"])?;
            for c in &report.cases {
                let kind = serde_json::to_value(c.kind)?;
                w.write_record([
                    c.case.as_str(),
                    kind.as_str().unwrap_or(""),
                    &c.params.to_string(),
                    &c.lhs,
                    &c.rhs,
                    if c.matched { "true" } else { "false" },
                    &c.method_lhs,
                    &c.method_rhs,
                    c.note.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            for c in &report.cases {
                let kind = serde_json::to_value(c.kind)?;
                writeln!(
                    out,
                    "{:8} {:10} {} {}\n    {}: {}\n    {}: {}",
                    if c.matched { "MATCH" } else { "MISMATCH" },
                    kind.as_str().unwrap_or(""),
                    c.case,
                    c.params,
                    c.method_lhs,
                    c.lhs,
                    c.method_rhs,
                    c.rhs
                )?;
                if let Some(note) = &c.note {
                    writeln!(out, "    note: {note}")?;
                }
            }
            for (kind, (ok, total)) in report.counts() {
                writeln!(out, "{kind}: {ok}/{total} match")?;
            }
            writeln!(out, "theorems: {}", if report.theorems_ok() { "all match" } else { "MISMATCH" })?;
        }
    }
    Ok(())
}
