//! Command-line front end. `run` never exits the process so the verbs can be
//! driven from tests; `main` only forwards the outcome.

use clap::{Parser, Subcommand};
use polyptych::algebra::AlgebraElement;
use polyptych::convex::{point_convex_hull, PlHalfSpace, PlPolytope};
use polyptych::cox::{verify_claims, Claims, CoxInstance};
use polyptych::detrop::valuation;
use polyptych::figures::{self, polytope_panel, Panel};
use polyptych::lattice::{ChartId, Element, MElement};
use polyptych::points::point_axiom_check;
use polyptych::scalar::{fmt_q, parse_q, to_i64};
use polyptych::svg::chart_svg;
use polyptych::{PointTriple, ShearParam, Q};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "polyptych", version, about = "Exact computations on the rank-2 polyptych lattices M_s")]
pub struct Cli {
    /// Shear parameter (used when no instance file is given)
    #[arg(long, global = true)]
    pub s: Option<i64>,
    /// Output directory for `figures`
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write the JSON result to this file
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Write chart SVGs into this directory
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    /// Instance file
    #[arg(long, global = true)]
    pub instance: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regenerate figure JSON and SVG files
    Figures {
        #[arg(default_value = "all")]
        selector: String,
    },
    /// Chart images, vertices and flags of the instance polytope and its dual
    Polytope,
    /// The dual polytope, with the bidual check
    Dual,
    /// Point-convex hull of the instance elements
    Pconv,
    /// Min-plus valuation of an algebra element
    Valuation {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Cox ring pipeline and verification report
    Cox,
    /// Point checks
    Points {
        #[command(subcommand)]
        cmd: PointsCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum PointsCommand {
    /// Check the point axiom for a triple `a,b,c` on all pairs in a box
    CheckAxiom {
        #[arg(allow_hyphen_values = true)]
        triple: String,
        #[arg(long, default_value_t = 4)]
        radius: i64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit 2.
    Input(String),
    /// A requested verification failed: exit 1.
    Verification(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<polyptych::Error> for CliError {
    fn from(e: polyptych::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    fn to_q(&self) -> CliResult<Q> {
        match self {
            Num::Int(n) => Ok(Q::from_integer((*n).into())),
            Num::Str(t) => parse_q(t).ok_or_else(|| CliError::Input(format!("bad rational {t:?}"))),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub s: i64,
    #[serde(default)]
    pub points: Vec<[Num; 3]>,
    #[serde(default)]
    pub thresholds: Option<Vec<i64>>,
    #[serde(default)]
    pub elements: Option<Vec<[i64; 2]>>,
    #[serde(default)]
    pub expr: Option<String>,
}

/// Validated instance.
pub struct Instance {
    pub s: ShearParam,
    pub points: Vec<PointTriple<Q>>,
    pub thresholds: Vec<i64>,
    pub elements: Option<Vec<MElement>>,
    pub expr: Option<String>,
}

impl Instance {
    pub fn parse(text: &str) -> CliResult<Instance> {
        let f: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("instance: {e}")))?;
        let s = ShearParam::new(f.s)?;
        let mut points = Vec::new();
        for [a, b, c] in &f.points {
            points.push(PointTriple::new(s, a.to_q()?, b.to_q()?, c.to_q()?)?);
        }
        let thresholds = f.thresholds.unwrap_or_else(|| vec![-1; points.len()]);
        if thresholds.len() != points.len() {
            return Err(CliError::Input(format!("{} points but {} thresholds", points.len(), thresholds.len())));
        }
        let elements = f.elements.map(|v| v.iter().map(|&[x, y]| Element::new(x, y)).collect());
        Ok(Instance { s, points, thresholds, elements, expr: f.expr })
    }

    pub fn polytope(&self) -> CliResult<PlPolytope> {
        if self.points.is_empty() {
            return Err(CliError::Input("instance has no points".into()));
        }
        let hs = self.points.iter().zip(&self.thresholds).map(|(p, &t)| PlHalfSpace::new(p.clone(), Q::from_integer(t.into()))).collect();
        let p = PlPolytope::new(self.s, hs);
        if !p.is_compact() {
            return Err(CliError::Input("polytope is not compact".into()));
        }
        Ok(p)
    }
}

pub fn qpair(m: &Element<Q>) -> [String; 2] {
    [fmt_q(&m.x), fmt_q(&m.y)]
}

pub fn qtriple(p: &PointTriple<Q>) -> [String; 3] {
    [fmt_q(&p.a), fmt_q(&p.b), fmt_q(&p.c)]
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn write_atomic(path: &Path, body: &str) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Input(format!("{}: {e}", path.display()));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, body).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}

struct Ctx<'a> {
    cli: &'a Cli,
}

impl Ctx<'_> {
    fn instance(&self) -> CliResult<Option<Instance>> {
        let Some(path) = &self.cli.instance else { return Ok(None) };
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let inst = Instance::parse(&text)?;
        if let Some(s) = self.cli.s {
            if s != inst.s.get() {
                return Err(CliError::Input(format!("--s {s} disagrees with instance s = {}", inst.s.get())));
            }
        }
        Ok(Some(inst))
    }

    fn require_instance(&self) -> CliResult<Instance> {
        self.instance()?.ok_or_else(|| CliError::Input("this verb needs --instance <file>".into()))
    }

    fn shear(&self) -> CliResult<ShearParam> {
        Ok(ShearParam::new(self.cli.s.unwrap_or(1))?)
    }

    /// JSON to stdout and, with `--json`, to a file.
    fn emit<T: Serialize>(&self, v: &T) -> CliResult<String> {
        let body = to_json(v);
        if let Some(p) = &self.cli.json {
            write_atomic(p, &body)?;
        }
        Ok(body)
    }

    fn svgs(&self, stem: &str, p: &PlPolytope, marks: &[MElement]) -> CliResult<()> {
        let Some(dir) = &self.cli.svg else { return Ok(()) };
        for c in ChartId::BOTH {
            let ms: Vec<_> = marks.iter().map(|m| m.to_q().chart(p.s, c)).collect();
            let body = chart_svg(&format!("{stem} chart {}", c.index()), Some(p.chart_image(c)), &ms);
            write_atomic(&dir.join(format!("{stem}-chart{}.svg", c.index())), &body)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct PolytopeReport {
    s: i64,
    polytope: Panel,
    vertices: Vec<[String; 2]>,
    dual: Panel,
    dual_vertices: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bidual_equal: Option<bool>,
}

fn polytope_report(p: &PlPolytope, bidual: bool) -> CliResult<PolytopeReport> {
    let d = p.dual()?;
    let bidual_equal = if bidual { Some(d.dual()?.same_set(p)) } else { None };
    Ok(PolytopeReport {
        s: p.s.get(),
        polytope: polytope_panel("P", p),
        vertices: p.pl_vertices()?.iter().map(qpair).collect(),
        dual_vertices: d.pl_vertices()?.iter().map(qpair).collect(),
        dual: polytope_panel("dual", &d),
        bidual_equal,
    })
}

fn cmd_figures(ctx: &Ctx, selector: &str) -> CliResult<String> {
    let specs = if selector == "all" {
        figures::catalog()
    } else {
        vec![figures::lookup(selector).ok_or_else(|| CliError::Input(format!("unknown figure {selector:?}; expected all or fig3..fig16")))?]
    };
    let out = ctx.cli.out.clone().unwrap_or_else(|| PathBuf::from("figures"));
    let mut written = Vec::new();
    for f in &specs {
        let json = format!("{}.json", f.id);
        write_atomic(&out.join(&json), &to_json(&f.data()?))?;
        written.push(json);
        for (name, body) in f.svgs()? {
            write_atomic(&out.join(&name), &body)?;
            written.push(name);
        }
    }
    Ok(written.iter().map(|w| format!("{}\n", out.join(w).display())).collect())
}

fn cmd_polytope(ctx: &Ctx) -> CliResult<String> {
    let inst = ctx.require_instance()?;
    let p = inst.polytope()?;
    let rep = polytope_report(&p, false)?;
    ctx.svgs("polytope", &p, &[])?;
    ctx.svgs("dual", &p.dual()?, &[])?;
    ctx.emit(&rep)
}

fn cmd_dual(ctx: &Ctx) -> CliResult<String> {
    let inst = ctx.require_instance()?;
    let p = inst.polytope()?;
    let rep = polytope_report(&p, true)?;
    ctx.svgs("dual", &p.dual()?, &[])?;
    let body = ctx.emit(&rep)?;
    if rep.bidual_equal == Some(false) {
        return Err(CliError::Verification(format!("dual of the dual differs from P\n{body}")));
    }
    Ok(body)
}

#[derive(Serialize)]
struct HullReport {
    s: i64,
    elements: Vec<[i64; 2]>,
    hull: Panel,
    vertices: Vec<[String; 2]>,
}

fn cmd_pconv(ctx: &Ctx) -> CliResult<String> {
    let inst = ctx.require_instance()?;
    let els = inst.elements.clone().filter(|e| !e.is_empty()).ok_or_else(|| CliError::Input("instance needs a nonempty \"elements\" list".into()))?;
    let hull = point_convex_hull(inst.s, &els)?;
    ctx.svgs("pconv", &hull, &els)?;
    ctx.emit(&HullReport {
        s: inst.s.get(),
        elements: els.iter().map(|m| [m.x, m.y]).collect(),
        vertices: hull.pl_vertices()?.iter().map(qpair).collect(),
        hull: polytope_panel("p-conv(S)", &hull),
    })
}

#[derive(Serialize)]
struct ValuationReport {
    s: i64,
    expr: String,
    canonical: String,
    infinity: bool,
    pieces: Vec<[String; 3]>,
    point: Option<[String; 3]>,
}

fn cmd_valuation(ctx: &Ctx, expr: Option<&str>) -> CliResult<String> {
    let inst = ctx.instance()?;
    let s = match &inst {
        Some(i) => i.s,
        None => ctx.shear()?,
    };
    let expr = expr
        .map(str::to_string)
        .or_else(|| inst.and_then(|i| i.expr))
        .ok_or_else(|| CliError::Input("no expression given".into()))?;
    let f = AlgebraElement::parse(&expr, s)?;
    let v = valuation(&f, s);
    ctx.emit(&ValuationReport {
        s: s.get(),
        canonical: f.display(s),
        infinity: v.is_infinity(),
        pieces: v.pieces().iter().map(qtriple).collect(),
        point: v.as_point(s).map(qtriple),
        expr,
    })
}

fn cmd_cox(ctx: &Ctx) -> CliResult<String> {
    let inst = match ctx.instance()? {
        None => CoxInstance::pqr(),
        Some(i) => {
            if i.thresholds.iter().any(|&t| t != -1) {
                return Err(CliError::Input("the Cox pipeline needs all thresholds equal to -1".into()));
            }
            let mut pts = Vec::new();
            for p in &i.points {
                match (to_i64(&p.a), to_i64(&p.b), to_i64(&p.c)) {
                    (Some(a), Some(b), Some(c)) => pts.push(PointTriple::new(i.s, a, b, c)?),
                    _ => return Err(CliError::Input("the Cox pipeline needs integral points".into())),
                }
            }
            CoxInstance::new(i.s, pts)?
        }
    };
    let claims = if inst == CoxInstance::pqr() { Claims::pqr() } else { Claims::default() };
    let rep = verify_claims(&inst, &claims)?;
    let body = ctx.emit(&rep)?;
    if !rep.oracle_ok {
        return Err(CliError::Verification(format!("Hilbert basis oracle mismatch\n{body}")));
    }
    Ok(body)
}

#[derive(Serialize)]
struct AxiomReport {
    s: i64,
    triple: [String; 3],
    on_ts: bool,
    radius: i64,
    pairs_checked: usize,
    holds: bool,
    counterexample: Option<[[i64; 2]; 2]>,
}

fn cmd_check_axiom(ctx: &Ctx, triple: &str, radius: i64) -> CliResult<String> {
    let s = ctx.shear()?;
    let parts: Vec<Q> = triple
        .split(',')
        .map(|t| parse_q(t).ok_or_else(|| CliError::Input(format!("bad rational {t:?}"))))
        .collect::<CliResult<_>>()?;
    let [a, b, c] = <[Q; 3]>::try_from(parts).map_err(|_| CliError::Input("expected a,b,c".into()))?;
    if !(0..=20).contains(&radius) {
        return Err(CliError::Input("radius must lie in 0..=20".into()));
    }
    let p = PointTriple::raw(a, b, c);
    let box_pts: Vec<MElement> = (-radius..=radius).flat_map(|x| (-radius..=radius).map(move |y| Element::new(x, y))).collect();
    let mut checked = 0;
    let mut counterexample = None;
    'outer: for m in &box_pts {
        for m2 in &box_pts {
            checked += 1;
            if !point_axiom_check(s, &p, &m.to_q(), &m2.to_q()) {
                counterexample = Some([[m.x, m.y], [m2.x, m2.y]]);
                break 'outer;
            }
        }
    }
    let holds = counterexample.is_none();
    let body = ctx.emit(&AxiomReport { s: s.get(), triple: qtriple(&p), on_ts: p.is_valid(s), radius, pairs_checked: checked, holds, counterexample })?;
    if !holds {
        return Err(CliError::Verification(format!("point axiom fails\n{body}")));
    }
    Ok(body)
}

fn dispatch(cli: &Cli) -> CliResult<String> {
    let ctx = Ctx { cli };
    match &cli.cmd {
        Command::Figures { selector } => cmd_figures(&ctx, selector),
        Command::Polytope => cmd_polytope(&ctx),
        Command::Dual => cmd_dual(&ctx),
        Command::Pconv => cmd_pconv(&ctx),
        Command::Valuation { expr } => cmd_valuation(&ctx, expr.as_deref()),
        Command::Cox => cmd_cox(&ctx),
        Command::Points { cmd: PointsCommand::CheckAxiom { triple, radius } } => cmd_check_axiom(&ctx, triple, *radius),
    }
}

/// Parse `args` (including the program name) and run the verb.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome { code, stdout: text, stderr: String::new() } } else { Outcome { code, stdout: String::new(), stderr: text } };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(CliError::Verification(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("verification failed: {m}\n") },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("{e}\n") },
    }
}
