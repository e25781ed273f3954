//! Subcommand dispatch. Every command renders into a string so the binary and
//! the tests see identical bytes.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rescalc_core::residue::DEFAULT_SEED;
use rescalc_core::{
    annihilator_with_seed, arm_product, coleff_herrera, decompose_with_seed, duality_check, pv_mul, res_mul,
    sep_check, Current, CurrentVector, DecompositionReport, Error, MonModule, Monomial, PolyCoeff,
};

use crate::json::{current_to_json, module_to_json, prime_to_json, report_to_json, to_string_canonical};
use crate::parse::{parse_current, parse_module, parse_monomials, parse_prime, parse_set, ParseError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug, Clone)]
#[command(name = "rescalc", version, about = "Exact calculus of monomial residue currents")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    /// Number of variables.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Current expression; repeat for the components of a vector.
    #[arg(long, global = true)]
    pub current: Vec<String>,
    /// Comma separated monomials.
    #[arg(long, global = true)]
    pub ideal: Option<String>,
    /// Module generators such as `e1: z^2, e2: w`.
    #[arg(long, global = true)]
    pub module: Option<String>,
    /// Module rank when it exceeds the largest basis index used.
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Set expression over coordinate cells.
    #[arg(long, global = true)]
    pub set: Option<String>,
    /// Number of residue factors in `arm`.
    #[arg(long, global = true)]
    pub q: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized certification pass.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Print the normal form of a current.
    Normalize,
    /// Restrict a current to a constructible set.
    Restrict,
    /// Monomial annihilator of a current or current vector.
    Ann,
    /// Coleff-Herrera product of the given monomials.
    Ch,
    /// Product with `q` residue factors followed by principal values.
    Arm,
    /// Split R along the associated primes of J and verify the decomposition.
    Decompose,
    /// Primary decomposition of a monomial ideal or module.
    Primdec,
    /// Individual verification checks.
    #[command(subcommand)]
    Check(Check),
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Both Leibniz identities for the monomial in --ideal and the current.
    Leibniz,
    /// ann of the Coleff-Herrera product equals the complete intersection ideal.
    Duality,
    /// The decomposition verdicts for R and J.
    Prima,
    /// Standard extension property of the current along the prime in --ideal.
    Sep,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Normalize => "normalize",
            Command::Restrict => "restrict",
            Command::Ann => "ann",
            Command::Ch => "ch",
            Command::Arm => "arm",
            Command::Decompose => "decompose",
            Command::Primdec => "primdec",
            Command::Check(Check::Leibniz) => "check leibniz",
            Command::Check(Check::Duality) => "check duality",
            Command::Check(Check::Prima) => "check prima",
            Command::Check(Check::Sep) => "check sep",
        }
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::Input(format!("parse error at {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NonMonomialAnnihilator { .. }
            | Error::ComponentAnnihilator { .. }
            | Error::DualityMismatch { .. } => Failure::Verification(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Rendered {
    text: String,
    result: Value,
    ok: bool,
}

impl Rendered {
    fn ok(text: String, result: Value) -> Rendered {
        Rendered { text, result, ok: true }
    }
}

/// Parse arguments (without the program name handling clap does) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let o = &cli.opts;
    match execute(cli.command, o) {
        Ok(r) => {
            let stdout = if o.json {
                let doc = json!({
                    "version": SCHEMA_VERSION,
                    "command": cli.command.name(),
                    "inputs": inputs_json(o),
                    "result": r.result,
                    "ok": r.ok,
                });
                to_string_canonical(&doc)
            } else {
                r.text
            };
            Outcome { code: if r.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Input(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Verification(msg)) => {
            let stdout = if o.json {
                let doc = json!({
                    "version": SCHEMA_VERSION,
                    "command": cli.command.name(),
                    "inputs": inputs_json(o),
                    "result": {"failure": msg},
                    "ok": false,
                });
                to_string_canonical(&doc)
            } else {
                format!("FAIL: {msg}\n")
            };
            Outcome { code: 1, stdout, stderr: String::new() }
        }
    }
}

fn inputs_json(o: &Opts) -> Value {
    let mut m = serde_json::Map::new();
    if let Some(n) = o.n {
        m.insert("n".into(), n.into());
    }
    if !o.current.is_empty() {
        m.insert("current".into(), o.current.clone().into());
    }
    for (key, v) in [("ideal", &o.ideal), ("module", &o.module), ("set", &o.set)] {
        if let Some(s) = v {
            m.insert(key.into(), s.clone().into());
        }
    }
    if let Some(r) = o.rank {
        m.insert("rank".into(), r.into());
    }
    if let Some(q) = o.q {
        m.insert("q".into(), q.into());
    }
    if let Some(s) = o.seed {
        m.insert("seed".into(), s.into());
    }
    Value::Object(m)
}

fn need_n(o: &Opts) -> Result<usize, Failure> {
    match o.n {
        Some(n) if (1..=rescalc_core::MAX_VARS).contains(&n) => Ok(n),
        Some(n) => Err(Failure::Input(format!("--n {n} is outside 1..={}", rescalc_core::MAX_VARS))),
        None => Err(Failure::Input("--n is required".into())),
    }
}

fn one_current(o: &Opts, n: usize) -> Result<Current, Failure> {
    match o.current.as_slice() {
        [src] => Ok(parse_current(src, n)?),
        [] => Err(Failure::Input("--current is required".into())),
        _ => Err(Failure::Input("this command takes a single --current".into())),
    }
}

fn vector(o: &Opts, n: usize) -> Result<CurrentVector, Failure> {
    if o.current.is_empty() {
        return Err(Failure::Input("--current is required".into()));
    }
    let comps = o.current.iter().map(|s| parse_current(s, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(CurrentVector::new(comps)?)
}

fn monomials(o: &Opts, n: usize) -> Result<Vec<Monomial>, Failure> {
    match &o.ideal {
        Some(s) => Ok(parse_monomials(s, n)?),
        None => Err(Failure::Input("--ideal is required".into())),
    }
}

fn module(o: &Opts, n: usize) -> Result<MonModule, Failure> {
    match (&o.ideal, &o.module) {
        (Some(_), Some(_)) => Err(Failure::Input("give either --ideal or --module".into())),
        (Some(s), None) => {
            let gens = parse_monomials(s, n)?;
            let rank = o.rank.unwrap_or(1);
            Ok(MonModule::from_gens(n, rank, gens.into_iter().map(|m| (0, m)).collect())?)
        }
        (None, Some(s)) => Ok(parse_module(s, n, o.rank)?),
        (None, None) => Err(Failure::Input("--ideal or --module is required".into())),
    }
}

fn seed(o: &Opts) -> u64 {
    o.seed.unwrap_or(DEFAULT_SEED)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn execute(cmd: Command, o: &Opts) -> Result<Rendered, Failure> {
    let n = need_n(o)?;
    match cmd {
        Command::Normalize => {
            let t = one_current(o, n)?;
            Ok(Rendered::ok(format!("{t}\n"), current_to_json(&t)))
        }
        Command::Restrict => {
            let t = one_current(o, n)?;
            let w = match &o.set {
                Some(s) => parse_set(s, n)?,
                None => return Err(Failure::Input("--set is required".into())),
            };
            let r = w.restrict(&t)?;
            Ok(Rendered::ok(format!("{r}\n"), current_to_json(&r)))
        }
        Command::Ann => {
            let t = vector(o, n)?;
            let ann = annihilator_with_seed(&t, seed(o))?;
            Ok(Rendered::ok(format!("{ann}\n"), module_to_json(&ann)))
        }
        Command::Ch => {
            let f = monomials(o, n)?;
            let t = coleff_herrera(n, &f)?;
            Ok(Rendered::ok(format!("{t}\n"), current_to_json(&t)))
        }
        Command::Arm => {
            let f = monomials(o, n)?;
            let q = o.q.ok_or_else(|| Failure::Input("--q is required".into()))?;
            let t = arm_product(&f, q, &PolyCoeff::one(n))?;
            Ok(Rendered::ok(format!("{t}\n"), current_to_json(&t)))
        }
        Command::Decompose => {
            let report = decompose_with_seed(&vector(o, n)?, &module(o, n)?, seed(o))?;
            Ok(Rendered { text: render_report(&report), result: report_to_json(&report), ok: report.all_passed() })
        }
        Command::Primdec => {
            let j = module(o, n)?;
            let comps = j.primary_decomposition_oracle()?;
            let mut text = String::new();
            let mut list = Vec::new();
            for (p, q) in &comps {
                writeln!(text, "{p}: {q}").unwrap();
                list.push(json!({"prime": prime_to_json(p), "component": module_to_json(q)}));
            }
            Ok(Rendered::ok(text, Value::from(list)))
        }
        Command::Check(Check::Leibniz) => {
            let g = match monomials(o, n)?.as_slice() {
                [g] => g.clone(),
                _ => return Err(Failure::Input("--ideal must hold exactly one monomial g".into())),
            };
            let t = one_current(o, n)?;
            let lhs1 = pv_mul(&g, &t)?.dbar();
            let rhs1 = res_mul(&g, &t)?.add(&pv_mul(&g, &t.dbar())?)?;
            let lhs2 = res_mul(&g, &t)?.dbar();
            let rhs2 = res_mul(&g, &t.dbar())?.neg();
            let (ok1, ok2) = (lhs1 == rhs1, lhs2 == rhs2);
            let mut text = String::new();
            writeln!(text, "dbar(pv) = res + pv(dbar): {}", mark(ok1)).unwrap();
            if !ok1 {
                writeln!(text, "  lhs = {lhs1}\n  rhs = {rhs1}").unwrap();
            }
            writeln!(text, "dbar(res) = -res(dbar): {}", mark(ok2)).unwrap();
            if !ok2 {
                writeln!(text, "  lhs = {lhs2}\n  rhs = {rhs2}").unwrap();
            }
            let result = json!({"pv_identity": ok1, "res_identity": ok2});
            Ok(Rendered { text, result, ok: ok1 && ok2 })
        }
        Command::Check(Check::Duality) => {
            let f = monomials(o, n)?;
            let ok = duality_check(n, &f)?;
            let mut text = format!("ann CH = (f): {}\n", mark(ok));
            if !ok {
                let ann = annihilator_with_seed(&CurrentVector::single(coleff_herrera(n, &f)?), seed(o))?;
                writeln!(text, "  ann = {ann}").unwrap();
            }
            Ok(Rendered { text, result: json!({"duality": ok}), ok })
        }
        Command::Check(Check::Prima) => {
            let report = decompose_with_seed(&vector(o, n)?, &module(o, n)?, seed(o))?;
            Ok(Rendered { text: render_verdicts(&report), result: report_to_json(&report), ok: report.all_passed() })
        }
        Command::Check(Check::Sep) => {
            let t = vector(o, n)?;
            let p = match &o.ideal {
                Some(s) => parse_prime(s, n)?,
                None => return Err(Failure::Input("--ideal must list the variables of the prime".into())),
            };
            let ok = sep_check(&t, &p)?;
            let text = format!("sep {p}: {}\n", mark(ok));
            Ok(Rendered { text, result: json!({"prime": prime_to_json(&p), "sep": ok}), ok })
        }
    }
}

fn render_verdicts(r: &DecompositionReport) -> String {
    let mut s = String::new();
    for (label, v) in r.verdicts() {
        match &v.witness {
            Some(w) if !v.passed => writeln!(s, "  {label}: FAIL ({w})").unwrap(),
            _ => writeln!(s, "  {label}: {}", mark(v.passed)).unwrap(),
        }
    }
    s
}

/// Human readable decomposition report.
pub fn render_report(r: &DecompositionReport) -> String {
    let mut s = String::new();
    writeln!(s, "R = {}", r.r).unwrap();
    writeln!(s, "J = {}", r.j).unwrap();
    let primes: Vec<String> = r.components.keys().map(|p| p.to_string()).collect();
    writeln!(s, "associated primes: {}", primes.join(", ")).unwrap();
    for (p, c) in &r.components {
        writeln!(s, "component {p}:").unwrap();
        writeln!(s, "  R^p = {}", c.rp).unwrap();
        writeln!(s, "  ann R^p = {}", c.q).unwrap();
    }
    writeln!(s, "checks:").unwrap();
    s.push_str(&render_verdicts(r));
    writeln!(s, "{}", if r.all_passed() { "all checks PASS" } else { "some checks FAIL" }).unwrap();
    s
}
