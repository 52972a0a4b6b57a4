use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use prealt_core::altalg::{
    alt_dual_bimodule, alt_semidirect, check_alt_bimodule, check_alternative, check_associative, check_form, FormKind,
};
use prealt_core::bialg::{
    alt_coalgebra_check, alt_coboundary_condition_residuals, alt_dbialgebra_check, alt_double_bialgebra,
    bialgebra_check, coalgebra_check, coboundary_comult, coboundary_condition_residuals, dual_bialgebra, pad_double,
    AltBialgebra, PreAltBialgebra,
};
use prealt_core::catalog::{self, CatalogEntry};
use prealt_core::construct::{
    al_induce, check_al_operator, compatible_from_al, graded_split, symplectic_split, Grading,
};
use prealt_core::prealt::{
    associated_algebra, check_2cocycle, check_prealt_bimodule, check_prealternative, prealt_dual_bimodule,
    prealt_semidirect,
};
use prealt_core::report::{CheckReport, Violation, DEFAULT_MAX_WITNESSES};
use prealt_core::tensor::map_to_form;
use prealt_core::ybe::{
    aybe_residual, brute_search, canonical_r, pa_residuals, solves, Ambient, AybeVariant, CanonicalSign, Equation,
    PaResiduals, SearchHit, SearchTarget, DEFAULT_SEARCH_CAP,
};
use prealt_core::{FieldSpec, Tensor2};

use crate::error::{CliError, Result};
use crate::format::{AlgebraFile, Entry2, MapSection, ScalarJson, Structure};
use crate::report::{to_json, ReportFile, ResidualEntry, ResidualFile, SearchFile, SearchHitJson};

#[derive(Debug, Parser)]
#[command(name = "prealt", version, about = "Checks and constructions for alternative and pre-alternative algebras")]
pub struct Cli {
    /// Worker threads for the checks (default: all cores). Output does not
    /// depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Add wall-clock timing to reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an identity check on a file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Build a new structure from a file.
    Construct {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        sign: Option<Sign>,
        /// Degrees for graded-split, comma separated.
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<u32>>,
        /// Use the regular bimodule instead of an `actions` section, so
        /// al-induce and compatible-from-al take a Rota-Baxter operator.
        #[arg(long)]
        regular: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the residual tensors of an equation for the file's `r`.
    Residual {
        file: PathBuf,
        #[arg(long = "eq", value_enum)]
        equation: Eq,
    },
    /// Exhaustive search over a prime field.
    Search {
        #[arg(long)]
        field: u32,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u128,
        /// Catalog name (optionally suffixed `mod<p>`) or a file path;
        /// defaults to the zero algebra.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Print a built-in algebra.
    Catalog {
        name: String,
        /// `Q` or an odd prime.
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Alternative,
    Associative,
    Prealt,
    Bimodule,
    Coalgebra,
    Bialgebra,
    Dbialgebra,
    Form,
    Cocycle2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Invariant,
    Closed,
    Symplectic,
    Prealt,
    Alt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Semidirect,
    DualBimodule,
    Associated,
    GradedSplit,
    SymplecticSplit,
    AlInduce,
    CompatibleFromAl,
    Double,
    PadDouble,
    CanonicalR,
    DualBialgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    #[value(alias = "-")]
    Minus,
    #[value(alias = "+")]
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Eq {
    Aybe,
    AybeA2,
    Pa,
    CoboundaryCond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    AybeSkew,
    PaSym,
    AlOperator,
}

fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// The witness limit from `PREALT_MAX_WITNESSES`.
pub fn witness_limit() -> Result<usize> {
    match std::env::var("PREALT_MAX_WITNESSES") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("PREALT_MAX_WITNESSES must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_WITNESSES),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let limit = witness_limit()?;
    let body = || execute(&cli.command, limit, cli.timing);
    match cli.workers {
        Some(0) => Err(CliError::Usage("--workers must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?
            .install(body),
        None => body(),
    }
}

fn execute(cmd: &Command, limit: usize, timing: bool) -> Result<Outcome> {
    match cmd {
        Command::Check { file, suite, kind } => {
            let start = Instant::now();
            let f = load(file)?;
            let mut echo = vec!["check".into(), display(file), "--suite".into(), name(*suite)];
            if let Some(k) = kind {
                echo.extend(["--kind".into(), name(*k)]);
            }
            let report = check(&f, *suite, *kind)?.with_limit(limit);
            let mut doc = ReportFile::new(echo, &report);
            if timing {
                doc.timing = Some(start.elapsed().as_secs_f64());
            }
            Ok(Outcome { code: if doc.passed() { 0 } else { 1 }, stdout: to_json(&doc) })
        }
        Command::Construct { file, op, sign, degrees, regular, out } => {
            let f = load(file)?;
            let built = construct(&f, *op, *sign, degrees.as_deref(), *regular)?;
            let text = built.to_json();
            match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|source| CliError::Io { path: display(path), source })?;
                    Ok(Outcome { stdout: String::new(), code: 0 })
                }
                None => Ok(Outcome { stdout: text, code: 0 }),
            }
        }
        Command::Residual { file, equation } => {
            let f = load(file)?;
            let residuals = residual(&f, *equation)?;
            let zero = residuals.iter().all(|r| r.zero);
            let doc = ResidualFile {
                command: vec!["residual".into(), display(file), "--eq".into(), name(*equation)],
                verdict: if zero { "zero" } else { "nonzero" }.into(),
                residuals,
            };
            Ok(Outcome { stdout: to_json(&doc), code: if zero { 0 } else { 1 } })
        }
        Command::Search { field, dim, target, cap, algebra } => {
            let doc = search(*field, *dim, *target, *cap, algebra.as_deref())?;
            Ok(Outcome { stdout: to_json(&doc), code: 0 })
        }
        Command::Catalog { name, field } => {
            let f = parse_field(field)?;
            Ok(Outcome { stdout: catalog_file(name, f)?.to_json(), code: 0 })
        }
    }
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

pub fn load(path: &Path) -> Result<AlgebraFile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: display(path), source })?;
    AlgebraFile::parse(&text)
}

fn parse_field(s: &str) -> Result<FieldSpec> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let p: u32 = s.parse().map_err(|_| CliError::Usage(format!("field must be Q or an odd prime, got {s:?}")))?;
    Ok(FieldSpec::prime(p)?)
}

pub fn catalog_file(name: &str, f: FieldSpec) -> Result<AlgebraFile> {
    Ok(match catalog::by_name(name, f)? {
        CatalogEntry::Alternative(a) => AlgebraFile::from_alt(&a),
        CatalogEntry::PreAlternative(p) => AlgebraFile::from_prealt(&p),
    })
}

fn gate(report: CheckReport) -> std::result::Result<(), CheckReport> {
    if report.passed() {
        Ok(())
    } else {
        Err(report)
    }
}

/// Runs a suite. When a precondition of the suite fails, the report of
/// that precondition is returned instead.
pub fn check(f: &AlgebraFile, suite: Suite, kind: Option<Kind>) -> Result<CheckReport> {
    let s = f.structure()?;
    let report = match suite {
        Suite::Alternative => check_alternative(&s.alternative()),
        Suite::Associative => check_associative(&s.alternative()),
        Suite::Prealt => check_prealternative(s.prealternative()?),
        Suite::Bimodule => match &s {
            Structure::Alt(a) => {
                let act = f.alt_action()?;
                match gate(check_alternative(a)) {
                    Ok(()) => check_alt_bimodule(a, &act)?,
                    Err(r) => r,
                }
            }
            Structure::PreAlt(p) => {
                let act = f.prealt_action()?;
                match gate(check_prealternative(p)) {
                    Ok(()) => check_prealt_bimodule(p, &act)?,
                    Err(r) => r,
                }
            }
        },
        Suite::Coalgebra => {
            let alt = match kind {
                Some(Kind::Alt) => true,
                Some(Kind::Prealt) => false,
                None => f.delta.is_some() && f.alpha.is_none(),
                Some(k) => return Err(CliError::Usage(format!("kind {} does not apply to coalgebras", name(k)))),
            };
            if alt {
                alt_coalgebra_check(&f.require_delta()?)
            } else {
                coalgebra_check(&f.require_comult()?)
            }
        }
        Suite::Bialgebra => {
            let p = s.prealternative()?;
            let c = f.require_comult()?;
            match gate(check_prealternative(p)).and_then(|_| gate(coalgebra_check(&c))) {
                Ok(()) => bialgebra_check(p, &c)?,
                Err(r) => r,
            }
        }
        Suite::Dbialgebra => alt_dbialgebra_check(&s.alternative(), &f.require_delta()?)?,
        Suite::Form => {
            let k = match kind.unwrap_or(Kind::Symplectic) {
                Kind::Invariant => FormKind::Invariant,
                Kind::Closed => FormKind::Closed,
                Kind::Symplectic => FormKind::Symplectic,
                k => return Err(CliError::Usage(format!("kind {} does not apply to forms", name(k)))),
            };
            check_form(&s.alternative(), &f.require_form()?, k)?
        }
        Suite::Cocycle2 => {
            let c = check_2cocycle(s.prealternative()?, &f.require_form()?)?;
            let mut report = c.report;
            if !c.antisymmetrization_closed {
                report.push(Violation { identity: "cocycle2.closed".into(), witness: vec![], residual: vec![] });
            }
            report
        }
    };
    Ok(report)
}

fn revalidate(report: CheckReport, what: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        let first = &report.all_violations()[0];
        Err(CliError::Usage(format!(
            "constructed {what} fails its own check: {} at {:?}",
            first.identity, first.witness
        )))
    }
}

/// Every output is checked again before it is returned.
pub fn construct(
    f: &AlgebraFile,
    op: Op,
    sign: Option<Sign>,
    degrees: Option<&[u32]>,
    regular: bool,
) -> Result<AlgebraFile> {
    let s = f.structure()?;
    let alt_out = |a: prealt_core::altalg::AlternativeAlgebra| -> Result<AlgebraFile> {
        revalidate(check_alternative(&a), "algebra")?;
        Ok(AlgebraFile::from_alt(&a))
    };
    let prealt_out = |p: prealt_core::prealt::PreAlternativeAlgebra| -> Result<AlgebraFile> {
        revalidate(check_prealternative(&p), "algebra")?;
        Ok(AlgebraFile::from_prealt(&p))
    };
    match op {
        Op::Semidirect => match &s {
            Structure::Alt(a) => alt_out(alt_semidirect(a, &f.alt_action()?)?),
            Structure::PreAlt(p) => prealt_out(prealt_semidirect(p, &f.prealt_action()?)?),
        },
        Op::DualBimodule => match &s {
            Structure::Alt(a) => {
                let dual = alt_dual_bimodule(&f.alt_action()?);
                revalidate(check_alt_bimodule(a, &dual)?, "bimodule")?;
                Ok(AlgebraFile::from_alt(a).with_alt_action(&dual))
            }
            Structure::PreAlt(p) => {
                let dual = prealt_dual_bimodule(&f.prealt_action()?);
                revalidate(check_prealt_bimodule(p, &dual)?, "bimodule")?;
                Ok(AlgebraFile::from_prealt(p).with_prealt_action(&dual))
            }
        },
        Op::Associated => alt_out(associated_algebra(s.prealternative()?)),
        Op::GradedSplit => {
            let d = degrees.ok_or_else(|| CliError::Usage("graded-split needs --degrees".into()))?;
            prealt_out(graded_split(&s.alternative(), &Grading::new(d.to_vec())?)?)
        }
        Op::SymplecticSplit => prealt_out(symplectic_split(&s.alternative(), &f.require_form()?)?),
        Op::AlInduce | Op::CompatibleFromAl => {
            let a = s.alternative();
            let act = if regular { a.regular_action() } else { f.alt_action()? };
            let t = f.require_map()?;
            let p = if op == Op::AlInduce { al_induce(&a, &act, &t)? } else { compatible_from_al(&a, &act, &t)? };
            prealt_out(p)
        }
        Op::Double => {
            let b = AltBialgebra::new(s.alternative(), f.require_delta()?)?;
            let d = alt_double_bialgebra(&b)?;
            revalidate(check_alternative(d.algebra()), "double")?;
            Ok(AlgebraFile::from_alt(d.algebra()).with_delta(d.delta()))
        }
        Op::PadDouble | Op::DualBialgebra => {
            let p = s.prealternative()?.clone();
            let c = match (f.comult()?, f.r()?) {
                (Some(c), _) => c,
                (None, Some(r)) => coboundary_comult(&p, &r)?,
                (None, None) => return Err(CliError::MissingSection("alpha/beta or r")),
            };
            let b = PreAltBialgebra::new(p, c)?;
            let out = if op == Op::PadDouble { pad_double(&b)? } else { dual_bialgebra(&b) };
            revalidate(bialgebra_check(out.algebra(), out.comult())?, "bialgebra")?;
            Ok(AlgebraFile::from_prealt(out.algebra()).with_comult(out.comult()))
        }
        Op::CanonicalR => {
            let p = s.prealternative()?;
            let sign = match sign.unwrap_or(Sign::Minus) {
                Sign::Minus => CanonicalSign::Minus,
                Sign::Plus => CanonicalSign::Plus,
            };
            let rec = canonical_r(p, sign)?;
            let r = rec.r();
            match rec.ambient() {
                Ambient::Alternative(a) => {
                    let w = map_to_form(&r.to_map())?;
                    revalidate(check_form(a, &w, FormKind::Symplectic)?, "form")?;
                    Ok(AlgebraFile::from_alt(a).with_r(r).with_form(&w))
                }
                Ambient::PreAlternative(q) => {
                    let w = map_to_form(&r.to_map())?;
                    let c = check_2cocycle(q, &w)?;
                    revalidate(c.report, "form")?;
                    Ok(AlgebraFile::from_prealt(q).with_r(r).with_form(&w))
                }
            }
        }
    }
}

pub fn residual(f: &AlgebraFile, eq: Eq) -> Result<Vec<ResidualEntry>> {
    let s = f.structure()?;
    let r = f.require_r()?;
    let n = s.dim();
    Ok(match eq {
        Eq::Aybe => vec![ResidualEntry::new("aybe", vec![], &aybe_residual(&s.alternative(), &r, AybeVariant::A1)?)],
        Eq::AybeA2 => {
            vec![ResidualEntry::new("aybe.a2", vec![], &aybe_residual(&s.alternative(), &r, AybeVariant::A2)?)]
        }
        Eq::Pa => {
            let res = pa_residuals(s.prealternative()?, &r)?;
            PaResiduals::NAMES
                .iter()
                .map(|id| ResidualEntry::new(id, vec![], res.get(id).expect("known name")))
                .collect()
        }
        Eq::CoboundaryCond => {
            let mut out = Vec::new();
            match &s {
                Structure::PreAlt(p) => {
                    for x in 0..n {
                        let res = coboundary_condition_residuals(p, &r, x)?;
                        for (k, t) in res.iter().enumerate() {
                            out.push(ResidualEntry::new(&format!("cc.{}", k + 1), vec![x], t));
                        }
                    }
                }
                Structure::Alt(a) => {
                    if !r.is_skew() {
                        return Err(prealt_core::Error::WrongSymmetry("needs a skew tensor".into()).into());
                    }
                    for x in 0..n {
                        let res = alt_coboundary_condition_residuals(a, &r, x)?;
                        for (k, t) in res.iter().enumerate() {
                            out.push(ResidualEntry::new(&format!("cc.alt.{}", k + 1), vec![x], t));
                        }
                    }
                }
            }
            out
        }
    })
}

/// Resolves `--algebra`: a readable file, or a catalog name with an
/// optional `mod<p>` suffix that must agree with `--field`.
fn search_algebra(given: Option<&str>, f: FieldSpec, dim: usize) -> Result<(String, Structure)> {
    let Some(given) = given else {
        return Ok((
            format!("zero-{dim}"),
            Structure::PreAlt(prealt_core::prealt::PreAlternativeAlgebra::zero(f, dim)),
        ));
    };
    let path = Path::new(given);
    if path.is_file() {
        let file = load(path)?;
        if file.field_spec()? != f {
            return Err(CliError::Usage(format!("{given} is not over {f}")));
        }
        return Ok((given.to_string(), file.structure()?));
    }
    let base = match given.rsplit_once("mod") {
        Some((base, p)) if !base.is_empty() && p.parse::<u32>().is_ok() => {
            if FieldSpec::prime(p.parse().expect("checked"))? != f {
                return Err(CliError::Usage(format!("{given} does not match --field {f}")));
            }
            base
        }
        _ => given,
    };
    let s = match catalog::by_name(base, f)? {
        CatalogEntry::Alternative(a) => Structure::Alt(a),
        CatalogEntry::PreAlternative(p) => Structure::PreAlt(p),
    };
    Ok((given.to_string(), s))
}

fn tensor_entries(r: &Tensor2) -> Vec<Entry2> {
    let n = r.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = r.get(i, j);
            if !c.is_zero() {
                out.push((i, j, ScalarJson::of(c)));
            }
        }
    }
    out
}

pub fn search(p: u32, dim: usize, target: Target, cap: u128, algebra: Option<&str>) -> Result<SearchFile> {
    let f = FieldSpec::prime(p)?;
    let (label, s) = search_algebra(algebra, f, dim)?;
    if s.dim() != dim {
        return Err(
            prealt_core::Error::DimensionMismatch(format!("{label} has dimension {}, not {dim}", s.dim())).into()
        );
    }
    let alt = s.alternative();
    let reg = alt.regular_action();
    let t = match target {
        Target::AybeSkew => SearchTarget::AybeSkew(&alt),
        Target::PaSym => SearchTarget::PaSym(s.prealternative()?),
        Target::AlOperator => SearchTarget::AlOperator(&alt, &reg),
    };
    let hits = brute_search(&t, cap)?;
    let mut out = Vec::with_capacity(hits.len());
    for h in &hits {
        match h {
            SearchHit::Solution(rec) => {
                let eq = if target == Target::PaSym { Equation::Pa } else { Equation::Aybe };
                if !solves(rec.ambient(), rec.r(), eq)? {
                    return Err(CliError::Usage("search returned a non-solution".into()));
                }
                out.push(SearchHitJson { r: Some(tensor_entries(rec.r())), map: None });
            }
            SearchHit::Operator(m) => {
                if !check_al_operator(&alt, &reg, m)?.passed() {
                    return Err(CliError::Usage("search returned a non-operator".into()));
                }
                let file = AlgebraFile::from_alt(&alt).with_map(m);
                let map: MapSection = file.map.expect("just set");
                out.push(SearchHitJson { r: None, map: Some(map) });
            }
        }
    }
    let mut echo = vec![
        "search".into(),
        "--field".into(),
        p.to_string(),
        "--dim".into(),
        dim.to_string(),
        "--target".into(),
        name(target),
        "--cap".into(),
        cap.to_string(),
    ];
    if let Some(a) = algebra {
        echo.extend(["--algebra".into(), a.to_string()]);
    }
    Ok(SearchFile { command: echo, target: name(target), algebra: label, count: out.len(), hits: out })
}
