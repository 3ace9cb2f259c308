//! Text format, command dispatch and report rendering for the `infalg` binary.

pub mod format;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cochain::{Family, ScalarCochain};
use crate::coderiv::{bracket_families, modified_bracket_families, Convention};
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::homology::{self, cyclic, CohomologyReport, Window};
use crate::reversion::{self, ReversionContext};
use crate::structures::{InfinityStructure, DEFAULT_MAX_ARITY};

use format::{AlgebraFile, Direction, NamedMap};

#[derive(Debug, Parser)]
#[command(name = "infalg", version, about = "Exact A-infinity and L-infinity computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Sign convention of the input structure.
    #[arg(long, global = true, default_value = "w-of-v", value_parser = parse_convention)]
    pub convention: Convention,
    /// Inclusive arity window `a..b`.
    #[arg(long, global = true, default_value = "1..4")]
    pub window: Window,
    /// Largest arity a file may declare.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ARITY)]
    pub max_arity: usize,
    /// Plain text or one JSON object per line.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the structure relations by three independent routes.
    Validate { file: PathBuf },
    /// Bracket two named maps (default: the structure with itself).
    Bracket {
        file: PathBuf,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        /// Plain coderivation bracket instead of the modified one.
        #[arg(long)]
        plain: bool,
    },
    /// Cohomology with adjoint coefficients over the window.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        representatives: bool,
    },
    /// Cyclic cohomology over the window.
    Cyclic {
        file: PathBuf,
        /// Use the inner-product-free cyclic complex.
        #[arg(long)]
        ip_free: bool,
        #[arg(long)]
        representatives: bool,
    },
    /// Classify the file's deformation directions.
    Deform {
        file: PathBuf,
        #[arg(long)]
        direction: Option<String>,
    },
    /// Print the structure in the other sign convention.
    Convert {
        file: PathBuf,
        /// Print the conjugated codifferential on the parity-reversed space.
        #[arg(long)]
        reversed: bool,
    },
}

impl Command {
    pub fn file(&self) -> &PathBuf {
        match self {
            Command::Validate { file }
            | Command::Bracket { file, .. }
            | Command::Cohomology { file, .. }
            | Command::Cyclic { file, .. }
            | Command::Deform { file, .. }
            | Command::Convert { file, .. } => file,
        }
    }
}

fn parse_convention(s: &str) -> std::result::Result<Convention, String> {
    Convention::parse(s).ok_or_else(|| format!("unknown convention `{s}` (expected w-of-v or v-of-w)"))
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// One reported fact, in both renderings.
struct Record {
    text: String,
    json: Value,
}

/// Ordered facts plus the mathematical verdict.
#[derive(Default)]
pub struct Report {
    records: Vec<Record>,
    pub failed: bool,
}

impl Report {
    fn push(&mut self, text: impl Into<String>, json: Value) {
        self.records.push(Record { text: text.into(), json });
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        for r in &self.records {
            match format {
                OutputFormat::Text => {
                    out.push_str(&r.text);
                    if !r.text.ends_with('\n') {
                        out.push('\n');
                    }
                }
                OutputFormat::JsonLines if r.json.is_null() => {}
                OutputFormat::JsonLines => {
                    let _ = writeln!(out, "{}", r.json);
                }
            }
        }
        out
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: EXIT_OK }
                }
                _ => Outcome { stdout: String::new(), stderr: text, code: EXIT_INPUT },
            };
        }
    };
    let path = cli.command.file().clone();
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return input_error(format!("error: cannot read {}: {e}", path.display())),
    };
    let file = match format::parse(&text) {
        Ok(f) => f,
        Err(e) => return input_error(format!("{}:{e}", path.display())),
    };
    match run(&cli.command, &file, &cli.options) {
        Ok(report) => Outcome {
            stdout: report.render(cli.options.format),
            stderr: String::new(),
            code: if report.failed { EXIT_FAILURE } else { EXIT_OK },
        },
        Err(e @ Error::Validation(_)) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_FAILURE },
        Err(e) => input_error(format!("error: {e}")),
    }
}

fn input_error(message: String) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("{message}\n"), code: EXIT_INPUT }
}

/// Runs one command on a parsed file.
pub fn run(command: &Command, file: &AlgebraFile, options: &Options) -> Result<Report> {
    match command {
        Command::Validate { .. } => validate(file, options),
        Command::Bracket { left, right, plain, .. } => bracket(file, options, left.as_deref(), right.as_deref(), *plain),
        Command::Cohomology { representatives, .. } => cohomology(file, options, *representatives),
        Command::Cyclic { ip_free, representatives, .. } => cyclic_report(file, options, *ip_free, *representatives),
        Command::Deform { direction, .. } => deform(file, options, direction.as_deref()),
        Command::Convert { reversed, .. } => convert(file, options, *reversed),
    }
}

fn names(space: &GradedSpace, tuple: &[usize]) -> Vec<String> {
    tuple.iter().map(|&i| space.name(i).to_string()).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn structure_line(s: &InfinityStructure, report: &mut Report) {
    let field = s.space().field();
    report.push(
        format!("structure: {} on {} basis elements over {field}, convention {}", s.kind(), s.space().dim(), s.convention()),
        json!({"fact": "structure", "kind": s.kind().to_string(), "dim": s.space().dim(),
               "field": field.to_string(), "convention": s.convention().to_string()}),
    );
}

fn validate(file: &AlgebraFile, options: &Options) -> Result<Report> {
    let s = file.structure(options.convention, options.max_arity)?;
    let mut report = Report::default();
    structure_line(&s, &mut report);
    let v = s.validate()?;
    report.push(
        match v.checked_up_to {
            0 => "no relations to check".to_string(),
            n => format!("relations checked for n = 1..{n}"),
        },
        json!({"fact": "checked", "up_to": v.checked_up_to}),
    );
    if let Some(f) = &v.failure {
        report.push(
            format!(
                "relation n = {} fails on {}: residual {}",
                f.n,
                s.space().format_tuple(&f.tuple),
                f.residual.format(s.space())
            ),
            json!({"fact": "failure", "n": f.n, "tuple": names(s.space(), &f.tuple),
                   "residual": f.residual.format(s.space())}),
        );
    }
    let routes = s.validation_routes()?;
    report.push(
        format!(
            "routes: relations {}, bracket {}, reversed square {}",
            if routes.relations { "vanish" } else { "fail" },
            if routes.bracket { "vanishes" } else { "fails" },
            if routes.reversed { "vanishes" } else { "fails" },
        ),
        json!({"fact": "routes", "relations": routes.relations, "bracket": routes.bracket,
               "reversed": routes.reversed}),
    );
    let ok = v.is_ok() && routes.agree();
    report.push(if ok { "ok" } else { "failed" }, json!({"fact": "result", "ok": ok}));
    report.failed = !ok;
    Ok(report)
}

fn lookup(file: &AlgebraFile, name: Option<&str>) -> Result<(String, Family)> {
    match name {
        None => Ok(("m".to_string(), file.family())),
        Some(n) => file
            .named(n)
            .or_else(|| file.direction(n).map(Direction::family))
            .map(|f| (n.to_string(), f))
            .ok_or_else(|| Error::Argument(format!("no map or deformation named `{n}`"))),
    }
}

fn family_records(report: &mut Report, label: &str, family: &Family) {
    let space = family.space();
    if family.is_zero() {
        report.push(format!("{label} = 0"), json!({"fact": "zero", "name": label}));
        return;
    }
    for part in family.parts() {
        for (t, v) in part.entries() {
            report.push(
                format!("{label}{} = {}", space.format_tuple(t), v.format(space)),
                json!({"fact": "entry", "name": label, "arity": part.arity(), "tuple": names(space, t),
                       "value": v.format(space)}),
            );
        }
    }
}

fn scalar_records(report: &mut Report, label: &str, f: &ScalarCochain) {
    let space = f.space();
    if f.is_zero() {
        report.push(format!("{label} = 0"), json!({"fact": "zero", "name": label}));
        return;
    }
    for (t, c) in f.entries() {
        report.push(
            format!("{label}{} = {c}", space.format_tuple(t)),
            json!({"fact": "entry", "name": label, "tuple": names(space, t), "value": c.to_string()}),
        );
    }
}

fn bracket(file: &AlgebraFile, options: &Options, left: Option<&str>, right: Option<&str>, plain: bool) -> Result<Report> {
    let (a_name, a) = lookup(file, left)?;
    let (b_name, b) = lookup(file, right)?;
    let label = if plain { format!("[{a_name},{b_name}]") } else { format!("{{{a_name},{b_name}}}") };
    let result = if plain { bracket_families(&a, &b)? } else { modified_bracket_families(&a, &b, options.convention)? };
    let mut report = Report::default();
    family_records(&mut report, &label, &result);
    Ok(report)
}

fn table<R>(report: &mut Report, symbol: &str, r: &CohomologyReport<R>) {
    let kind = if r.graded_exact { "exact" } else { "truncated" };
    report.push(
        format!("{symbol} over window {} ({kind})", r.window),
        json!({"fact": "window", "start": r.window.start, "end": r.window.end, "graded_exact": r.graded_exact}),
    );
    report.push(format!("{:<8}{:<10}{:<14}{}", "degree", "cocycles", "coboundaries", "dim"), Value::Null);
    for d in &r.degrees {
        report.push(
            format!("{:<8}{:<10}{:<14}{}", d.degree, d.cocycles, d.coboundaries, d.dim),
            json!({"fact": "degree", "degree": d.degree, "cocycles": d.cocycles,
                   "coboundaries": d.coboundaries, "dim": d.dim}),
        );
    }
}

fn cohomology(file: &AlgebraFile, options: &Options, representatives: bool) -> Result<Report> {
    let s = file.structure(options.convention, options.max_arity)?;
    let r = homology::cohomology(&s, options.window)?;
    let mut report = Report::default();
    table(&mut report, "H", &r);
    if representatives {
        for d in &r.degrees {
            for (i, rep) in d.representatives.iter().enumerate() {
                family_records(&mut report, &format!("h{}_{}", d.degree, i + 1), rep);
            }
        }
    }
    Ok(report)
}

fn cyclic_report(file: &AlgebraFile, options: &Options, ip_free: bool, representatives: bool) -> Result<Report> {
    let s = file.structure(options.convention, options.max_arity)?;
    let ip = match (&file.inner_product, ip_free) {
        (_, true) => None,
        (Some(ip), false) => Some(ip),
        (None, false) => return Err(Error::Argument("the file has no inner_product block; pass --ip-free".into())),
    };
    let r = cyclic::cyclic_cohomology(&s, ip, options.window)?;
    let mut report = Report::default();
    table(&mut report, "HC", &r);
    if representatives {
        for d in &r.degrees {
            for (i, rep) in d.representatives.iter().enumerate() {
                scalar_records(&mut report, &format!("c{}_{}", d.degree, i + 1), rep);
            }
        }
    }
    Ok(report)
}

fn deform(file: &AlgebraFile, options: &Options, only: Option<&str>) -> Result<Report> {
    let s = file.structure(options.convention, options.max_arity)?;
    let chosen: Vec<&Direction> = match only {
        Some(n) => vec![file.direction(n).ok_or_else(|| Error::Argument(format!("no deformation named `{n}`")))?],
        None => file.directions.iter().collect(),
    };
    if chosen.is_empty() {
        return Err(Error::Argument("the file declares no deformation".into()));
    }
    let mut report = Report::default();
    for dir in chosen {
        let c = homology::classify_deformation(&s, &dir.family(), file.inner_product.as_ref(), options.window.start)?;
        let u = if dir.parameter.is_odd() { "odd" } else { "even" };
        report.push(format!("deformation {} ({u} parameter)", dir.name), json!({"fact": "deformation", "name": dir.name, "parameter": u}));
        report.push(format!("  cocycle: {}", yes_no(c.cocycle)), json!({"fact": "cocycle", "name": dir.name, "value": c.cocycle}));
        report.push(format!("  coboundary: {}", c.coboundary), json!({"fact": "coboundary", "name": dir.name, "value": c.coboundary}));
        if let Some(w) = &c.witness {
            let mut sub = Report::default();
            family_records(&mut sub, "beta", w);
            for r in sub.records {
                report.push(format!("  witness {}", r.text), json!({"fact": "witness", "name": dir.name, "entry": r.json}));
            }
        }
        if let Some(p) = c.preserves_ip {
            report.push(format!("  preserves inner product: {}", yes_no(p)), json!({"fact": "preserves_ip", "name": dir.name, "value": p}));
        }
        if let Some(m) = c.cyclic_coboundary {
            report.push(format!("  cyclic coboundary: {m}"), json!({"fact": "cyclic_coboundary", "name": dir.name, "value": m}));
        }
        report.failed |= !c.cocycle;
    }
    Ok(report)
}

fn convert(file: &AlgebraFile, options: &Options, reversed: bool) -> Result<Report> {
    let out = if reversed {
        let s = file.structure(options.convention, options.max_arity)?;
        let ctx = ReversionContext::new(&file.space, options.convention);
        let delta = s.reversed();
        AlgebraFile {
            space: ctx.w_space().clone(),
            flavor: delta.flavor(),
            maps: delta.parts().map(|c| NamedMap { name: "d".into(), cochain: c.clone() }).collect(),
            inner_product: None,
            directions: Vec::new(),
        }
    } else {
        let flip = |c: &crate::cochain::Cochain| reversion::convert(&Family::single(c.clone())).parts().next().cloned().unwrap_or_else(|| c.clone());
        AlgebraFile {
            maps: file.maps.iter().map(|m| NamedMap { name: m.name.clone(), cochain: flip(&m.cochain) }).collect(),
            directions: file
                .directions
                .iter()
                .map(|d| Direction { name: d.name.clone(), parameter: d.parameter, parts: d.parts.iter().map(flip).collect() })
                .collect(),
            ..file.clone()
        }
    };
    let target = if reversed { options.convention } else { options.convention.other() };
    let text = out.to_text();
    let mut report = Report::default();
    let header = if reversed { format!("# reversed side, convention {target}") } else { format!("# convention {target}") };
    report.push(
        format!("{header}\n{text}"),
        json!({"fact": "converted", "convention": target.to_string(), "reversed": reversed, "text": text}),
    );
    Ok(report)
}
