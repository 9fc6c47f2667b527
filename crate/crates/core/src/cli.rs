//! The `bihom` command line: load documents, run one library operation,
//! print a text or JSON report.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 for
//! usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{check_bihom_lie, check_prelie, subadjacent};
use crate::cohomology::{CochainComplex, CohomologyReport};
use crate::deformation::{
    check_equivalence, check_lie_linear_deformation, check_linear_deformation, check_nijenhuis_prelie,
    nijenhuis_trivial_deformation, push_deformation_to_lie, DeformationCandidate,
};
use crate::error::Error;
use crate::json::{self, DocError};
use crate::operators::{check_o_operator, check_rota_baxter, induced_prelie_from_o, rb_induced_prelie, LinearOperator};
use crate::report::AxiomReport;
use crate::representation::{
    adjoint_rep, check_lie_rep, check_prelie_rep, check_twist_hypotheses, induced_lie_rep, semidirect_lie,
    semidirect_prelie, tensor_rep, trivial_rep, twist_rep, InducedVariant,
};

#[derive(Debug, Parser)]
#[command(name = "bihom", version, about = "Exact checks and constructions for BiHom-pre-Lie algebras")]
pub struct Cli {
    /// Print a machine-readable JSON report
    #[arg(long, global = true)]
    json: bool,
    /// Write the constructed document here instead of printing it
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variant {
    Left,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an algebra or representation document against its axioms
    Verify { file: PathBuf },
    /// Build the sub-adjacent BiHom-Lie algebra
    Subadjacent { algebra: PathBuf },
    /// Build the semidirect product of a representation
    Semidirect { rep: PathBuf },
    /// Build the induced representation of the sub-adjacent algebra
    InducedRep {
        rep: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        variant: Variant,
    },
    /// Yau-twist a classical representation
    TwistRep { rep: PathBuf, twists: PathBuf },
    /// Tensor product of two representations of one algebra
    TensorRep { first: PathBuf, second: PathBuf },
    /// Check an O-operator and build the product it induces
    OOperator { rep: PathBuf, operator: PathBuf },
    /// Check a Rota-Baxter operator and build the product it induces
    RotaBaxter { algebra: PathBuf, operator: PathBuf },
    /// Cohomology dimensions per degree
    Cohomology {
        algebra: PathBuf,
        /// adjoint, trivial, or a representation document
        #[arg(long, default_value = "adjoint")]
        rep: String,
        /// Inclusive range such as 1..3
        #[arg(long, default_value = "1..2")]
        degrees: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Check a linear deformation
    DeformCheck { algebra: PathBuf, deformation: PathBuf },
    /// Check a Nijenhuis operator and build its trivial deformation
    Nijenhuis { algebra: PathBuf, operator: PathBuf },
    /// Check that an operator makes two deformations equivalent
    Equivalence { algebra: PathBuf, pi1: PathBuf, pi2: PathBuf, operator: PathBuf },
    /// Push a deformation down to the sub-adjacent BiHom-Lie algebra
    PushLie { algebra: PathBuf, deformation: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Subadjacent { .. } => "subadjacent",
            Command::Semidirect { .. } => "semidirect",
            Command::InducedRep { .. } => "induced-rep",
            Command::TwistRep { .. } => "twist-rep",
            Command::TensorRep { .. } => "tensor-rep",
            Command::OOperator { .. } => "o-operator",
            Command::RotaBaxter { .. } => "rota-baxter",
            Command::Cohomology { .. } => "cohomology",
            Command::DeformCheck { .. } => "deform-check",
            Command::Nijenhuis { .. } => "nijenhuis",
            Command::Equivalence { .. } => "equivalence",
            Command::PushLie { .. } => "push-lie",
        }
    }
}

#[derive(Debug, Default)]
struct Outcome {
    checks: Vec<(String, AxiomReport)>,
    cohomology: Vec<CohomologyReport>,
    result: Option<Value>,
}

impl Outcome {
    fn check(&mut self, name: &str, report: AxiomReport) -> bool {
        let ok = report.passed();
        self.checks.push((name.to_string(), report));
        ok
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(_, r)| r.passed())
    }
}

enum Failure {
    Input(String),
    Defect(String),
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run<T = ()> = Result<T, Failure>;

/// Library errors split into failed checks (recorded in `out`) and input errors.
fn lib<T>(out: &mut Outcome, r: Result<T, Error>) -> Run<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Invalid { what, report }) => {
            out.check(what, report);
            Ok(None)
        }
        Err(Error::Defect(msg)) => Err(Failure::Defect(msg)),
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn load(path: &Path) -> Run<Value> {
    Ok(json::read_file(path)?)
}

fn in_file<T>(path: &Path, r: Result<T, DocError>) -> Run<T> {
    r.map_err(|mut e| {
        if e.file.is_none() {
            e.file = Some(path.display().to_string());
        }
        Failure::from(e)
    })
}

fn prelie(path: &Path) -> Run<crate::BiHomPreLieAlgebra> {
    let v = load(path)?;
    in_file(path, json::parse_prelie(&v))
}

fn prelie_rep(path: &Path) -> Run<crate::PreLieRep> {
    let v = load(path)?;
    in_file(path, json::parse_prelie_rep(&v, &dir_of(path)))
}

fn lie_rep(path: &Path) -> Run<crate::LieRep> {
    let v = load(path)?;
    in_file(path, json::parse_lie_rep(&v, &dir_of(path)))
}

fn operator(path: &Path) -> Run<crate::Matrix> {
    let v = load(path)?;
    in_file(path, json::parse_operator(&v))
}

fn deformation(path: &Path, n: usize) -> Run<DeformationCandidate> {
    let v = load(path)?;
    in_file(path, json::parse_deformation(&v, n)).map(DeformationCandidate::new)
}

fn parse_degrees(range: &str, max: usize) -> Run<(usize, usize)> {
    let bad = || Failure::Input(format!("--degrees: expected a..b with 1 <= a <= b, got {range:?}"));
    let (a, b) = match range.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (range, range),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    if b > max {
        return Err(Failure::Input(format!("--degrees: degree {b} exceeds --max-degree {max}")));
    }
    Ok((a, b))
}

fn execute(cmd: &Command) -> Run<Outcome> {
    let mut out = Outcome::default();
    match cmd {
        Command::Verify { file } => {
            let v = load(file)?;
            let base = dir_of(file);
            if v.get("L").is_some() {
                let r = in_file(file, json::parse_prelie_rep(&v, &base))?;
                out.check("BiHom-pre-Lie", check_prelie(r.algebra()));
                out.check("representation", check_prelie_rep(&r));
            } else if v.get("rho").is_some() {
                let r = in_file(file, json::parse_lie_rep(&v, &base))?;
                out.check("BiHom-Lie", check_bihom_lie(r.algebra()));
                out.check("BiHom-Lie representation", check_lie_rep(&r));
            } else if v.get("product").is_some() {
                out.check("BiHom-pre-Lie", check_prelie(&in_file(file, json::parse_prelie(&v))?));
            } else if v.get("bracket").is_some() {
                out.check("BiHom-Lie", check_bihom_lie(&in_file(file, json::parse_lie(&v))?));
            } else {
                return Err(Failure::Input(format!(
                    "{}: not an algebra or representation document (expected \"product\", \"bracket\", \"L\" or \"rho\")",
                    file.display()
                )));
            }
        }
        Command::Subadjacent { algebra } => {
            let a = prelie(algebra)?;
            if out.check("BiHom-pre-Lie", check_prelie(&a)) {
                let g = subadjacent(&a);
                out.check("BiHom-Lie", check_bihom_lie(&g));
                out.result = Some(json::lie_to_json(&g));
            }
        }
        Command::Semidirect { rep } => {
            if load(rep)?.get("rho").is_some() {
                let r = lie_rep(rep)?;
                if let Some(s) = lib(&mut out, semidirect_lie(&r))? {
                    out.check("representation", AxiomReport::new());
                    out.check("BiHom-Lie", check_bihom_lie(&s));
                    out.result = Some(json::lie_to_json(&s));
                }
            } else {
                let r = prelie_rep(rep)?;
                if let Some(s) = lib(&mut out, semidirect_prelie(&r))? {
                    out.check("representation", AxiomReport::new());
                    out.check("BiHom-pre-Lie", check_prelie(&s));
                    out.result = Some(json::prelie_to_json(&s));
                }
            }
        }
        Command::InducedRep { rep, variant } => {
            let r = prelie_rep(rep)?;
            if out.check("representation", check_prelie_rep(&r)) {
                let variant = match variant {
                    Variant::Left => InducedVariant::LeftOnly,
                    Variant::Full => InducedVariant::Full,
                };
                if let Some(l) = lib(&mut out, induced_lie_rep(&r, variant))? {
                    out.check("BiHom-Lie representation", check_lie_rep(&l));
                    out.result = Some(json::lie_rep_to_json(&l));
                }
            }
        }
        Command::TwistRep { rep, twists } => {
            let r = prelie_rep(rep)?;
            let v = load(twists)?;
            let t = in_file(twists, json::parse_twist_doc(&v, r.algebra().dim(), r.vdim()))?;
            let hyp = lib(&mut out, check_twist_hypotheses(&r, &t.alpha, &t.beta, &t.phi, &t.psi))?;
            if out.check("twist hypotheses", hyp.unwrap_or_default()) {
                if let Some(tr) = lib(&mut out, twist_rep(&r, t.alpha, t.beta, t.phi, t.psi))? {
                    out.check("representation", check_prelie_rep(&tr));
                    out.result = Some(json::prelie_rep_to_json(&tr));
                }
            }
        }
        Command::TensorRep { first, second } => {
            let (rv, rw) = (prelie_rep(first)?, prelie_rep(second)?);
            let ok_v = out.check("first representation", check_prelie_rep(&rv));
            let ok_w = out.check("second representation", check_prelie_rep(&rw));
            if ok_v && ok_w {
                if let Some(t) = lib(&mut out, tensor_rep(&rv, &rw))? {
                    out.check("tensor representation", check_prelie_rep(&t));
                    out.result = Some(json::prelie_rep_to_json(&t));
                }
            }
        }
        Command::OOperator { rep, operator: op } => {
            let r = lie_rep(rep)?;
            let t = LinearOperator::new(operator(op)?);
            if let Some(report) = lib(&mut out, check_o_operator(&t, &r))? {
                if out.check("O-operator", report) {
                    if let Some(a) = lib(&mut out, induced_prelie_from_o(&t, &r))? {
                        out.check("BiHom-pre-Lie", check_prelie(&a));
                        out.result = Some(json::prelie_to_json(&a));
                    }
                }
            }
        }
        Command::RotaBaxter { algebra, operator: op } => {
            let v = load(algebra)?;
            let g = in_file(algebra, json::parse_lie_or_subadjacent(&v))?;
            let rb = LinearOperator::new(operator(op)?);
            if let Some(report) = lib(&mut out, check_rota_baxter(&rb, &g))? {
                if out.check("Rota-Baxter", report) {
                    if let Some(a) = lib(&mut out, rb_induced_prelie(&rb, &g))? {
                        out.check("BiHom-pre-Lie", check_prelie(&a));
                        out.result = Some(json::prelie_to_json(&a));
                    }
                }
            }
        }
        Command::Cohomology { algebra, rep, degrees, max_degree } => {
            let (lo, hi) = parse_degrees(degrees, *max_degree)?;
            let a = prelie(algebra)?;
            let r = match rep.as_str() {
                "adjoint" => adjoint_rep(&a),
                "trivial" => trivial_rep(&a),
                path => prelie_rep(Path::new(path))?,
            };
            if let Some(cx) = lib(&mut out, CochainComplex::new(&a, &r))? {
                for n in lo..=hi {
                    if let Some(c) = lib(&mut out, cx.cohomology(n))? {
                        out.cohomology.push(c);
                    }
                }
            }
        }
        Command::DeformCheck { algebra, deformation: d } => {
            let a = prelie(algebra)?;
            let pi = deformation(d, a.dim())?;
            if let Some(report) = lib(&mut out, check_linear_deformation(&a, &pi))? {
                out.check("linear deformation", report);
            }
        }
        Command::Nijenhuis { algebra, operator: op } => {
            let a = prelie(algebra)?;
            let n = operator(op)?;
            if let Some(report) = lib(&mut out, check_nijenhuis_prelie(&a, &n))? {
                if out.check("Nijenhuis operator", report) {
                    if let Some((pi, report)) = lib(&mut out, nijenhuis_trivial_deformation(&a, &n))? {
                        out.check("trivial deformation", report);
                        out.result = Some(json::deformation_to_json(pi.pi()));
                    }
                }
            }
        }
        Command::Equivalence { algebra, pi1, pi2, operator: op } => {
            let a = prelie(algebra)?;
            let (p1, p2) = (deformation(pi1, a.dim())?, deformation(pi2, a.dim())?);
            let n = operator(op)?;
            for (name, p) in [("first deformation", &p1), ("second deformation", &p2)] {
                if let Some(report) = lib(&mut out, check_linear_deformation(&a, p))? {
                    out.check(name, report);
                }
            }
            if let Some(report) = lib(&mut out, check_equivalence(&a, &p1, &p2, &n))? {
                out.check("equivalence", report);
            }
        }
        Command::PushLie { algebra, deformation: d } => {
            let a = prelie(algebra)?;
            let pi = deformation(d, a.dim())?;
            if let Some(report) = lib(&mut out, check_linear_deformation(&a, &pi))? {
                if out.check("linear deformation", report) {
                    if let Some(pc) = lib(&mut out, push_deformation_to_lie(&a, &pi))? {
                        let g = subadjacent(&a);
                        if let Some(report) = lib(&mut out, check_lie_linear_deformation(&g, &pc))? {
                            out.check("BiHom-Lie deformation", report);
                        }
                        out.result = Some(json::deformation_to_json(pc.pi()));
                    }
                }
            }
        }
    }
    Ok(out)
}

struct Style {
    color: bool,
}

impl Style {
    fn status(&self, ok: bool) -> String {
        match (ok, self.color) {
            (true, true) => "\x1b[32mPASS\x1b[0m".into(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
            (true, false) => "PASS".into(),
            (false, false) => "FAIL".into(),
        }
    }
}

fn cohomology_json(c: &CohomologyReport) -> Value {
    json!({"degree": c.degree, "dim_c": c.dim_c, "dim_z": c.dim_z, "dim_b": c.dim_b, "dim_h": c.dim_h})
}

fn write_result(path: &Path, doc: &Value) -> Run {
    let text = json::to_pretty(doc);
    fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn render(cli: &Cli, out: &Outcome, stdout: &mut dyn Write, stderr: &mut dyn Write, style: &Style) -> Run<i32> {
    let status = if out.passed() { "pass" } else { "fail" };
    if let (Some(path), Some(doc)) = (&cli.output, &out.result) {
        write_result(path, doc)?;
    }
    let io = |e: std::io::Error| Failure::Input(e.to_string());
    if cli.json {
        let mut report = json!({
            "command": cli.command.name(),
            "status": status,
            "checks": out.checks.iter().map(|(name, r)| json!({
                "name": name,
                "status": if r.passed() { "pass" } else { "fail" },
                "violations": json::report_to_json(r),
            })).collect::<Vec<_>>(),
        });
        if !out.cohomology.is_empty() {
            report["cohomology"] = out.cohomology.iter().map(cohomology_json).collect();
        }
        match (&cli.output, &out.result) {
            (Some(path), Some(_)) => report["output"] = json!(path.display().to_string()),
            (None, Some(doc)) => report["result"] = doc.clone(),
            _ => {}
        }
        writeln!(stdout, "{}", json::to_pretty(&report)).map_err(io)?;
    } else {
        // a document on stdout must stay parseable, so status lines move aside
        let lines: &mut dyn Write = if cli.output.is_none() && out.result.is_some() { stderr } else { stdout };
        for (name, r) in &out.checks {
            writeln!(lines, "{name}: {}", style.status(r.passed())).map_err(io)?;
            for v in &r.violations {
                writeln!(lines, "  {v}").map_err(io)?;
            }
        }
        for c in &out.cohomology {
            writeln!(
                stdout,
                "H^{n} = {}  (dim C^{n} = {}, dim Z^{n} = {}, dim B^{n} = {})",
                c.dim_h,
                c.dim_c,
                c.dim_z,
                c.dim_b,
                n = c.degree
            )
            .map_err(io)?;
        }
        match (&cli.output, &out.result) {
            (Some(path), Some(_)) => writeln!(stdout, "wrote {}", path.display()).map_err(io)?,
            (None, Some(doc)) => {
                writeln!(stdout, "{}", json::to_pretty(doc)).map_err(io)?
            }
            _ => {}
        }
    }
    Ok(if out.passed() { 0 } else { 1 })
}

/// Runs one command with explicit output streams.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    let style = Style { color: color && !cli.json };
    let outcome = execute(&cli.command).and_then(|out| render(&cli, &out, stdout, stderr, &style));
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            let (code, kind, msg) = match failure {
                Failure::Input(msg) => (2, "input error", msg),
                Failure::Defect(msg) => (1, "internal defect", msg),
            };
            if cli.json {
                let report = json!({"command": cli.command.name(), "status": "error", "error": format!("{kind}: {msg}")});
                let _ = writeln!(stdout, "{}", json::to_pretty(&report));
            } else {
                let _ = writeln!(stderr, "error: {kind}: {msg}");
            }
            code
        }
    }
}

/// Entry point for the binary: process arguments, real streams, and
/// `BIHOM_COLOR=0` to turn styling off.
pub fn main_entry() -> i32 {
    let color = std::io::stdout().is_terminal() && std::env::var("BIHOM_COLOR").map_or(true, |v| v != "0");
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr(), color)
}
