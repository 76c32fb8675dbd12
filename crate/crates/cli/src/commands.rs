//! Subcommand definitions and their execution.
//!
//! `run` never prints; it returns an [`Outcome`] holding both renderings so
//! the binary can choose the format and write `--out` files.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use qgr_core::coact::{
    cauchy_binet_check, coaction_axioms_check, coaction_square_check, coinvariant_basis,
    minor_products_coinvariance, PhiVariant,
};
use qgr_core::coeff::LaurentScalar;
use qgr_core::grassmann::{
    e_project_grass, eval_embed, graded_dimension, r_embed_grass, relation_basis, relation_transport_check,
    within_caps, MinorExpr,
};
use qgr_core::limits::{
    density_approx, limit_equal, rho_project, tower_compat_check, tower_from_finite, LimitElement,
    MayaDiagram,
};
use qgr_core::qmatrix::{level_project_e, Level, NCPoly};
use qgr_core::qsl::{
    hopf_check, hopf_squares_check, phi_project, quantum_minor, AntipodeConvention, MinorKey,
    SlElement,
};
use qgr_core::report::{AxiomResult, CheckReport};
use qgr_core::QgrError;

use crate::config::{Caps, Config};
use crate::parse::{parse_expr, ParseError, Parsed};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] QgrError),
    #[error("size cap exceeded: {0} (pass --force or raise the cap in --config)")]
    Cap(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// 2 for usage, parse and domain errors, 3 for size caps.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap(_) => 3,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qgr",
    version,
    about = "Exact computations in quantum matrix algebras, quantum Grassmannians and their limits"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file overriding the size caps.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Columns {
    Full,
    Rect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Transposed,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProjectMap {
    /// Grassmannian projection e.
    #[value(name = "e")]
    GrassE,
    /// Grassmannian embedding r.
    #[value(name = "r")]
    GrassR,
    /// Matrix-algebra projection E.
    #[value(name = "E")]
    MatrixE,
    /// Projection phi between SL quotients.
    #[value(name = "phi")]
    Phi,
    /// Projection rho from the direct limit.
    #[value(name = "rho")]
    Rho,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Hopf,
    Coaction,
    Coinvariant,
    Squares,
    Towers,
    Rewriting,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct LevelArg {
    /// Level as `M,N`.
    #[arg(long, value_parser = parse_level_pair, allow_hyphen_values = true)]
    pub level: (i32, i32),
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of an expression.
    Normalize {
        expr: String,
        #[command(flatten)]
        level: LevelArg,
        #[arg(long, value_enum, default_value_t = Columns::Full)]
        columns: Columns,
    },
    /// Expansion of a quantum minor.
    Minor {
        #[command(flatten)]
        level: LevelArg,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        rows: Vec<i32>,
        /// Defaults to the leading columns `-p..-1`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        cols: Option<Vec<i32>>,
    },
    /// Basis of the degree-d relations among Grassmannian generators.
    Relations {
        #[command(flatten)]
        level: LevelArg,
        #[arg(long)]
        degree: usize,
        /// Specialize the relations at q = 1.
        #[arg(long)]
        q1: bool,
        #[arg(long)]
        force: bool,
    },
    /// Maya diagram utilities.
    Maya {
        #[command(subcommand)]
        op: MayaOp,
    },
    /// Apply one of the projections or embeddings between levels.
    Project {
        #[arg(value_enum)]
        map: ProjectMap,
        expr: String,
        /// Source level; not needed for `rho`.
        #[arg(long, value_parser = parse_level_pair, allow_hyphen_values = true)]
        from: Option<(i32, i32)>,
        #[arg(long, value_parser = parse_level_pair, allow_hyphen_values = true)]
        to: (i32, i32),
    },
    /// Run a verification and report pass/fail with witnesses.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        level: LevelArg,
        /// Lower level for `squares`; defaults to `(m-1,n-1)` or `(m,n-1)`.
        #[arg(long, value_parser = parse_level_pair, allow_hyphen_values = true)]
        to: Option<(i32, i32)>,
        #[arg(long, value_enum, default_value_t = Convention::Transposed)]
        convention: Convention,
        /// Largest minor degree for `coinvariant`.
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Number of random samples for `towers` and `rewriting`.
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long)]
        force: bool,
    },
    /// Basis of the coinvariants of a given word length.
    Coinvariants {
        #[command(flatten)]
        level: LevelArg,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Columns::Rect)]
        columns: Columns,
        #[arg(long)]
        force: bool,
    },
    /// Recover a direct-limit element from its level-(k,k) slice.
    Approx {
        expr: String,
        #[arg(long)]
        k: i32,
    },
}

#[derive(Subcommand, Debug)]
pub enum MayaOp {
    /// Order of a diagram.
    Order { diagram: String },
    /// First `m` entries of a diagram.
    Truncate {
        diagram: String,
        #[arg(long)]
        m: usize,
    },
    /// Row set of the level-m generator a diagram projects to.
    Rows {
        diagram: String,
        #[arg(long)]
        m: usize,
    },
    /// Diagram extending the entries `l_1 < ... < l_k`.
    FromRows {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        rows: Vec<i32>,
        /// Defaults to the number of entries.
        #[arg(long)]
        m: Option<usize>,
    },
}

fn parse_level_pair(s: &str) -> Result<(i32, i32), String> {
    let parts = parse_int_list(s)?;
    match parts[..] {
        [m, n] if m >= 1 && n >= 0 => Ok((m, n)),
        [_, _] => Err(format!("level {s:?} needs m >= 1 and n >= 0")),
        _ => Err(format!("expected M,N, found {s:?}")),
    }
}

fn parse_int_list(s: &str) -> Result<Vec<i32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i32>()
                .map_err(|_| format!("not an integer: {p:?}"))
        })
        .collect()
}

/// What a command produced. `pass` is false only for failed verifications.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub pass: bool,
}

impl Outcome {
    fn value(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            pass: true,
        }
    }
}

/// JSON shape of every verification command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub level: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
    /// Wall-clock seconds.
    pub timing: f64,
    pub items: Vec<AxiomResult>,
}

impl Report {
    fn from_check(r: CheckReport, started: Instant) -> Self {
        Self {
            witnesses: r.witnesses(),
            check: r.check,
            level: r.level,
            pass: r.pass,
            timing: started.elapsed().as_secs_f64(),
            items: r.items,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} {}: {} ({:.3}s)\n",
            self.check,
            self.level,
            if self.pass { "PASS" } else { "FAIL" },
            self.timing
        );
        for item in &self.items {
            out.push_str(&format!(
                "  {} {}\n",
                if item.pass { "pass" } else { "FAIL" },
                item.name
            ));
            for w in &item.witnesses {
                out.push_str(&format!("      {w}\n"));
            }
        }
        out
    }

    fn into_outcome(self) -> Outcome {
        Outcome {
            text: self.render_text(),
            json: serde_json::to_value(&self).expect("report serializes"),
            pass: self.pass,
        }
    }
}

fn level(pair: (i32, i32)) -> Result<Level, CliError> {
    Ok(Level::new(pair.0, pair.1)?)
}

fn rect(pair: (i32, i32)) -> Result<Level, CliError> {
    Ok(Level::rect(pair.0, pair.1)?)
}

fn check_caps(level: Level, degree: usize, caps: &Caps, force: bool) -> Result<(), CliError> {
    if force || within_caps(level, degree, caps.max_degree, caps.max_size) {
        return Ok(());
    }
    Err(CliError::Cap(format!(
        "level {level} with degree {degree} exceeds max_size {} / max_degree {}",
        caps.max_size, caps.max_degree
    )))
}

fn check_size(level: Level, caps: &Caps, force: bool) -> Result<(), CliError> {
    if force || level.size() <= caps.max_check_size {
        return Ok(());
    }
    Err(CliError::Cap(format!(
        "level {level} exceeds max_check_size {}",
        caps.max_check_size
    )))
}

fn parsed_json(x: &Parsed) -> Value {
    match x {
        Parsed::Poly(p) => json!({
            "kind": "matrix",
            "level": p.level().to_string(),
            "text": p.to_string(),
            "terms": p,
        }),
        Parsed::Minor(e) => json!({
            "kind": "minor",
            "level": e.level().to_string(),
            "text": e.to_string(),
        }),
        Parsed::Limit(l) => json!({
            "kind": "limit",
            "text": l.to_string(),
        }),
    }
}

fn poly_outcome(x: NCPoly) -> Outcome {
    let p = Parsed::Poly(x);
    Outcome::value(format!("{p}\n"), parsed_json(&p))
}

fn minor_outcome(x: MinorExpr) -> Outcome {
    let p = Parsed::Minor(x);
    Outcome::value(format!("{p}\n"), parsed_json(&p))
}

fn limit_outcome(x: LimitElement) -> Outcome {
    let p = Parsed::Limit(x);
    Outcome::value(format!("{p}\n"), parsed_json(&p))
}

fn expect_poly(x: Parsed) -> Result<NCPoly, CliError> {
    match x {
        Parsed::Poly(p) => Ok(p),
        other => Err(CliError::Usage(format!(
            "expected an expression in a[i,j], found {other}"
        ))),
    }
}

fn expect_minor(x: Parsed) -> Result<MinorExpr, CliError> {
    match x {
        Parsed::Minor(p) => Ok(p),
        Parsed::Poly(p) if p.terms().keys().all(|w| w.is_empty()) => {
            Ok(MinorExpr::scalar(p.level().as_rect(), p.coeff(&Default::default())))
        }
        other => Err(CliError::Usage(format!(
            "expected an expression in D[rows], found {other}"
        ))),
    }
}

fn expect_limit(x: Parsed) -> Result<LimitElement, CliError> {
    match x {
        Parsed::Limit(p) => Ok(p),
        Parsed::Poly(p) if p.terms().keys().all(|w| w.is_empty()) => {
            Ok(LimitElement::scalar(p.coeff(&Default::default())))
        }
        other => Err(CliError::Usage(format!(
            "expected an expression in D[prefix|order], found {other}"
        ))),
    }
}

fn maya(s: &str) -> Result<MayaDiagram, CliError> {
    Ok(s.parse::<MayaDiagram>()?)
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(CliError::Usage)?,
        None => Config::default(),
    };
    let caps = config.caps;
    match &cli.command {
        Command::Normalize {
            expr,
            level: l,
            columns,
        } => {
            let lv = match columns {
                Columns::Full => level(l.level)?,
                Columns::Rect => rect(l.level)?,
            };
            Ok(match parse_expr(expr, lv)? {
                // minors are normalized through their expansion
                Parsed::Minor(x) => poly_outcome(eval_embed(&x)),
                Parsed::Limit(x) => limit_outcome(x),
                Parsed::Poly(x) => poly_outcome(x),
            })
        }
        Command::Minor { level: l, rows, cols } => {
            let lv = level(l.level)?;
            let key = match cols {
                Some(c) => MinorKey::new(lv, rows.clone(), c.clone())?,
                None => MinorKey::leading(lv, rows.clone())?,
            };
            Ok(poly_outcome(quantum_minor(&key)))
        }
        Command::Relations {
            level: l,
            degree,
            q1,
            force,
        } => {
            let lv = rect(l.level)?;
            check_caps(lv, *degree, &caps, *force)?;
            let rels = relation_basis(lv, *degree, *q1);
            let mut text = format!(
                "{} relations at {lv} in degree {degree}{} (graded dimension {})\n",
                rels.len(),
                if *q1 { " at q = 1" } else { "" },
                graded_dimension(lv, *degree)
            );
            for r in &rels {
                text.push_str(&format!("  {}\n", r.to_expr()));
            }
            let json = json!({
                "level": lv.to_string(),
                "degree": degree,
                "q1": q1,
                "count": rels.len(),
                "dimension": graded_dimension(lv, *degree),
                "relations": rels,
            });
            Ok(Outcome::value(text, json))
        }
        Command::Maya { op } => run_maya(op),
        Command::Project { map, expr, from, to } => run_project(*map, expr, *from, *to),
        Command::Check {
            kind,
            level: l,
            to,
            convention,
            degree,
            samples,
            force,
        } => {
            let lv = level(l.level)?;
            check_size(lv, &caps, *force)?;
            let started = Instant::now();
            let report = match kind {
                CheckKind::Hopf => {
                    let conv = match convention {
                        Convention::Transposed => AntipodeConvention::Transposed,
                        Convention::Literal => AntipodeConvention::Literal,
                    };
                    hopf_check(lv, conv)?
                }
                CheckKind::Coaction => {
                    let mut r = coaction_axioms_check(lv)?;
                    r.record("cauchy-binet", cauchy_binet_check(lv.as_rect())?);
                    r
                }
                CheckKind::Coinvariant => {
                    check_caps(lv.as_rect(), *degree, &caps, *force)?;
                    coinvariant_report(lv.as_rect(), *degree)?
                }
                CheckKind::Squares => {
                    let low = match to {
                        Some(p) => level(*p)?,
                        None => default_lower(lv)?,
                    };
                    squares_report(lv, low, &caps)?
                }
                CheckKind::Towers => towers_report(lv, cli.seed, *samples)?,
                CheckKind::Rewriting => rewriting_report(lv, cli.seed, *samples)?,
            };
            Ok(Report::from_check(report, started).into_outcome())
        }
        Command::Coinvariants {
            level: l,
            degree,
            columns,
            force,
        } => {
            if *columns != Columns::Rect {
                return Err(CliError::Usage(
                    "coinvariants are computed in the rectangular algebra; use --columns rect".into(),
                ));
            }
            let lv = rect(l.level)?;
            let m = lv.m() as usize;
            check_caps(lv, degree.div_ceil(m), &caps, *force)?;
            let basis = coinvariant_basis(lv, *degree)?;
            let mut text = format!(
                "{} coinvariants at {lv} of word length {degree}\n",
                basis.len()
            );
            for b in &basis {
                text.push_str(&format!("  {b}\n"));
            }
            let json = json!({
                "level": lv.to_string(),
                "degree": degree,
                "dimension": basis.len(),
                "basis": basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok(Outcome::value(text, json))
        }
        Command::Approx { expr, k } => {
            let lv = Level::rect((*k).max(1), (*k).max(1))?;
            let x = expect_limit(parse_expr(expr, lv)?)?;
            let approx = density_approx(&tower_from_finite(&x), *k)?;
            let text = format!("{approx}\n");
            let json = json!({
                "k": k,
                "input": x.to_string(),
                "approximation": approx.to_string(),
                "exact": limit_equal(&approx, &x),
            });
            Ok(Outcome::value(text, json))
        }
    }
}

fn run_maya(op: &MayaOp) -> Result<Outcome, CliError> {
    match op {
        MayaOp::Order { diagram } => {
            let d = maya(diagram)?;
            Ok(Outcome::value(
                format!("{}\n", d.order()),
                json!({"diagram": d, "order": d.order()}),
            ))
        }
        MayaOp::Truncate { diagram, m } => {
            let d = maya(diagram)?;
            let t = d.truncate(*m);
            Ok(Outcome::value(
                format!("{t:?}\n"),
                json!({"diagram": d, "m": m, "entries": t}),
            ))
        }
        MayaOp::Rows { diagram, m } => {
            let d = maya(diagram)?;
            let rows = d.row_set(*m);
            Ok(Outcome::value(
                format!("{rows:?}\n"),
                json!({"diagram": d, "m": m, "rows": rows}),
            ))
        }
        MayaOp::FromRows { rows, m } => {
            let d = MayaDiagram::from_rows(rows, m.unwrap_or(rows.len()))?;
            Ok(Outcome::value(format!("{d}\n"), json!({"diagram": d})))
        }
    }
}

fn run_project(
    map: ProjectMap,
    expr: &str,
    from: Option<(i32, i32)>,
    to: (i32, i32),
) -> Result<Outcome, CliError> {
    let need_from = || from.ok_or_else(|| CliError::Usage("this map needs --from M,N".into()));
    match map {
        ProjectMap::GrassE | ProjectMap::GrassR => {
            let src = rect(need_from()?)?;
            let x = expect_minor(parse_expr(expr, src)?)?;
            let dst = rect(to)?;
            let y = if map == ProjectMap::GrassE {
                e_project_grass(&x, dst)?
            } else {
                r_embed_grass(&x, dst)?
            };
            Ok(minor_outcome(y))
        }
        ProjectMap::MatrixE | ProjectMap::Phi => {
            let src = level(need_from()?)?;
            let x = expect_poly(parse_expr(expr, src)?)?;
            let dst = level(to)?;
            let y = if map == ProjectMap::MatrixE {
                level_project_e(&x, dst)?
            } else {
                phi_project(&SlElement::new(x), dst)?.rep().clone()
            };
            Ok(poly_outcome(y))
        }
        ProjectMap::Rho => {
            let dst = rect(to)?;
            let x = expect_limit(parse_expr(expr, dst)?)?;
            Ok(minor_outcome(rho_project(&x, dst)))
        }
    }
}

/// The next level down: `(m-1,n-1)` when both shrink, else whichever can.
fn default_lower(l: Level) -> Result<Level, CliError> {
    let (m, n) = (l.m(), l.n());
    let pair = if m > 1 && n > 0 {
        (m - 1, n - 1)
    } else if n > 0 {
        (m, n - 1)
    } else if m > 1 {
        (m - 1, n)
    } else {
        return Err(CliError::Usage(format!("level {l} has no lower level; pass --to")));
    };
    level(pair)
}

fn coinvariant_report(lv: Level, max_r: usize) -> Result<CheckReport, CliError> {
    let m = lv.m() as usize;
    let mut report = CheckReport::new("coinvariants", lv.to_string());
    for r in 1..=max_r {
        let found = coinvariant_basis(lv, r * m)?.len();
        let expected = graded_dimension(lv, r);
        let bad = if found == expected {
            vec![]
        } else {
            vec![format!("expected {expected}, found {found}")]
        };
        report.record(format!("dimension in minor degree {r}"), bad);
    }
    report.record(
        "minor products coinvariant",
        minor_products_coinvariance(lv, max_r.max(1))?,
    );
    Ok(report)
}

fn squares_report(from: Level, to: Level, caps: &Caps) -> Result<CheckReport, CliError> {
    let mut report = hopf_squares_check(from, to)?;
    report.record(
        "coaction square",
        coaction_square_check(from, to, PhiVariant::Standard)?,
    );
    let (hi, lo) = (from.as_rect(), to.as_rect());
    for d in 1..=2 {
        if within_caps(hi, d, caps.max_degree, caps.max_size) {
            report.record(
                format!("relations transported in degree {d}"),
                relation_transport_check(hi, lo, d)?,
            );
        }
    }
    Ok(report)
}

fn random_limit(rng: &mut ChaCha8Rng, pool: &[MayaDiagram]) -> LimitElement {
    let mut x = LimitElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let factors: Vec<MayaDiagram> = (0..rng.gen_range(1..=2))
            .map(|_| pool.choose(rng).expect("nonempty pool").clone())
            .collect();
        let c = LaurentScalar::monomial(
            num::BigRational::from_integer(rng.gen_range(-3i64..=3).into()),
            rng.gen_range(-2..=2),
        );
        x = x.add(&LimitElement::from_terms([(factors, c)]));
    }
    x
}

fn towers_report(base: Level, seed: u64, samples: usize) -> Result<CheckReport, CliError> {
    let base = base.as_rect();
    let mut report = CheckReport::new("towers", base.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = MayaDiagram::enumerate(3, -2);
    let up = |l: Level, k: i32| Level::rect(l.m() + k, l.n() + k);
    let pairs = [(up(base, 1)?, base), (up(base, 2)?, up(base, 1)?), (up(base, 2)?, base)];
    let (mut compat, mut density) = (Vec::new(), Vec::new());
    for _ in 0..samples {
        let x = random_limit(&mut rng, &pool);
        let t = tower_from_finite(&x);
        for pair in tower_compat_check(&t, &pairs)? {
            compat.push(format!("{x} at {pair}"));
        }
        let dom = x.dominating_level();
        let k = dom.m().max(dom.n());
        if !limit_equal(&density_approx(&t, k)?, &x) {
            density.push(format!("{x} at k = {k}"));
        }
    }
    report.record("projection compatibility", compat);
    report.record("density recovers the element", density);
    Ok(report)
}

fn rewriting_report(lv: Level, seed: u64, samples: usize) -> Result<CheckReport, CliError> {
    let mut report = CheckReport::new("rewriting", lv.to_string());
    let gens = lv.generators();
    let a = |i: i32, j: i32| NCPoly::gen(lv, i, j);
    let q = LaurentScalar::q();
    let mut relations = Vec::new();
    for &x in &gens {
        for &y in &gens {
            if x.row == y.row && x.col < y.col {
                // a_il a_ij = q a_ij a_il
                let lhs = a(y.row, y.col)?.nc_mul(&a(x.row, x.col)?)?;
                let rhs = a(x.row, x.col)?.nc_mul(&a(y.row, y.col)?)?.scale(&q);
                if lhs != rhs {
                    relations.push(format!("row relation {x} {y}"));
                }
            }
            if x.col == y.col && x.row < y.row {
                let lhs = a(y.row, y.col)?.nc_mul(&a(x.row, x.col)?)?;
                let rhs = a(x.row, x.col)?.nc_mul(&a(y.row, y.col)?)?.scale(&q);
                if lhs != rhs {
                    relations.push(format!("column relation {x} {y}"));
                }
            }
            if x.row < y.row && x.col < y.col {
                // a_il a_kj = a_kj a_il and a_kl a_ij - a_ij a_kl = (q - q^-1) a_il a_kj
                let (i, j, k, l) = (x.row, x.col, y.row, y.col);
                if a(i, l)?.commutator(&a(k, j)?)? != NCPoly::zero(lv) {
                    relations.push(format!("commuting pair a[{i},{l}] a[{k},{j}]"));
                }
                let lhs = a(k, l)?.commutator(&a(i, j)?)?;
                let rhs = a(i, l)?
                    .nc_mul(&a(k, j)?)?
                    .scale(&(&q - &LaurentScalar::q_pow(-1)));
                if lhs != rhs {
                    relations.push(format!("quartic relation {x} {y}"));
                }
            }
        }
    }
    report.record("defining relations", relations);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word = |rng: &mut ChaCha8Rng| -> Result<NCPoly, CliError> {
        let len = rng.gen_range(0..=3);
        let letters: Vec<_> = (0..len).map(|_| *gens.choose(rng).expect("generators")).collect();
        Ok(NCPoly::normalize(lv, &letters, LaurentScalar::one())?)
    };
    let mut assoc = Vec::new();
    for _ in 0..samples {
        let (x, y, z) = (word(&mut rng)?, word(&mut rng)?, word(&mut rng)?);
        if x.nc_mul(&y)?.nc_mul(&z)? != x.nc_mul(&y.nc_mul(&z)?)? {
            assoc.push(format!("({x}) ({y}) ({z})"));
        }
    }
    report.record("associativity", assoc);
    Ok(report)
}
