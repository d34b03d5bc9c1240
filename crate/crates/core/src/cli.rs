//! The `prv` command line: run the generators, the oracle, and emit figure data.
//!
//! Exit codes: 0 on success, 1 when a generated weight is missing from the
//! exact decomposition (or a pair file fails validation), 2 on usage errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;

use crate::generators::{
    all_components, default_max_axes, main_segments, ortho_rectangles, sym_rectangles, sym_segments,
    Hyperrectangle, Input, Options, Segment, TaggedComponent, Theorem,
};
use crate::oracle::{branch, tensor_decompose, verify_components, Decomposition};
use crate::pairs::{validate_pair, PairDocument, SphericalPair, BUILTIN_EXAMPLES};
use crate::rootsys::{GroupType, RootSystem, SimpleType, Weight};

#[derive(Debug, Parser)]
#[command(name = "prv", version, about = "Irreducible components of restrictions and tensor products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the dominant weights produced by the generators.
    Components(RunArgs),
    /// Compare the generators with the exact decomposition.
    Verify(RunArgs),
    /// Emit figure data: every weight of the decomposition with its tags.
    Figure(RunArgs),
    /// Inspect spherical pairs.
    Pairs {
        #[command(subcommand)]
        command: PairsCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum PairsCommand {
    /// List the built-in pairs.
    List,
    /// Validate a JSON pair file.
    Validate { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
    Svg,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Built-in pair name (`g2-spin7`, `diag:C3`, ...) or path to a JSON pair file.
    #[arg(long, default_value = "g2-spin7")]
    pub pair: String,
    /// Dominant Ĝ-weight, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub nuhat: Option<Weight>,
    /// First tensor factor (diagonal pairs).
    #[arg(long, allow_hyphen_values = true, requires = "nu", conflicts_with = "nuhat")]
    pub mu: Option<Weight>,
    /// Second tensor factor (diagonal pairs).
    #[arg(long, allow_hyphen_values = true, requires = "mu", conflicts_with = "nuhat")]
    pub nu: Option<Weight>,
    /// Generators to run: prv, main, ortho, sym-seg, sym-rect (default: all).
    #[arg(long, value_delimiter = ',')]
    pub theorems: Vec<Theorem>,
    /// Largest number of axes of a rectangle.
    #[arg(long)]
    pub max_axes: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Print weights in Bourbaki's epsilon coordinates.
    #[arg(long)]
    pub epsilon_basis: bool,
}

/// A resolved [`RunArgs`].
pub struct RunConfig {
    pub pair: SphericalPair,
    pub input: Input,
    pub options: Options,
    pub format: Format,
    pub epsilon_basis: bool,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> anyhow::Result<Self> {
        let pair = resolve_pair(&args.pair)?;
        let input = match (&args.nuhat, &args.mu, &args.nu) {
            (Some(nu_hat), None, None) => Input::Ambient(nu_hat.clone()),
            (None, Some(mu), Some(nu)) => Input::Tensor(mu.clone(), nu.clone()),
            _ => bail!("give either --nuhat or both --mu and --nu"),
        };
        if let Some(0) = args.max_axes {
            bail!("--max-axes must be at least 1");
        }
        let mut options = Options { max_axes: args.max_axes, ..Options::default() };
        if !args.theorems.is_empty() {
            options.theorems = args.theorems.iter().copied().collect();
        }
        Ok(RunConfig { pair, input, options, format: args.format, epsilon_basis: args.epsilon_basis })
    }

    /// The Ĝ-weight and, for diagonal pairs, the two tensor factors.
    fn split_input(&self) -> anyhow::Result<(Weight, Option<(Weight, Weight)>)> {
        Ok(match &self.input {
            Input::Ambient(nu_hat) => {
                let t = if self.pair.is_diagonal() { Some(self.pair.split_diagonal(nu_hat)?) } else { None };
                (nu_hat.clone(), t)
            }
            Input::Tensor(mu, nu) => (self.pair.join_diagonal(mu, nu)?, Some((mu.clone(), nu.clone()))),
        })
    }

    fn truth(&self) -> anyhow::Result<Decomposition> {
        Ok(match &self.input {
            Input::Tensor(mu, nu) => tensor_decompose(self.pair.sub(), mu, nu)?,
            Input::Ambient(nu_hat) => match self.pair.is_diagonal() {
                true => {
                    let (mu, nu) = self.pair.split_diagonal(nu_hat)?;
                    tensor_decompose(self.pair.sub(), &mu, &nu)?
                }
                false => branch(&self.pair, nu_hat)?,
            },
        })
    }
}

fn resolve_pair(name: &str) -> anyhow::Result<SphericalPair> {
    match SphericalPair::builtin(name) {
        Ok(p) => Ok(p),
        Err(_) if Path::new(name).is_file() => {
            let text = std::fs::read_to_string(name).with_context(|| format!("reading {name}"))?;
            let doc: PairDocument = serde_json::from_str(&text).with_context(|| format!("parsing {name}"))?;
            Ok(SphericalPair::from_document(name, &doc)?)
        }
        Err(e) => Err(anyhow!(e)),
    }
}

/// Parses arguments from the environment and runs; returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

/// Runs a parsed command, writing to `out`. Errors are usage errors.
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (text, code) = match &cli.command {
        Command::Components(args) => cmd_components(&RunConfig::from_args(args)?)?,
        Command::Verify(args) => cmd_verify(&RunConfig::from_args(args)?)?,
        Command::Figure(args) => cmd_figure(&RunConfig::from_args(args)?)?,
        Command::Pairs { command: PairsCommand::List } => (cmd_pairs_list(), 0),
        Command::Pairs { command: PairsCommand::Validate { file } } => cmd_pairs_validate(file)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(code)
}

#[derive(Serialize)]
struct ComponentRow<'a> {
    weight: &'a Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<Vec<String>>,
    tags: Vec<&'static str>,
    witnesses: &'a [crate::generators::Provenance],
}

fn tag_list(c: &TaggedComponent) -> String {
    c.tags.iter().map(Theorem::label).collect::<Vec<_>>().join(",")
}

fn shown(cfg: &RunConfig, w: &Weight) -> String {
    if cfg.epsilon_basis {
        format!("({})", epsilon_coords(cfg.pair.sub().group_type(), w).iter().map(fmt_ratio).collect::<Vec<_>>().join(","))
    } else {
        w.to_string()
    }
}

pub fn cmd_components(cfg: &RunConfig) -> anyhow::Result<(String, i32)> {
    let comps = all_components(&cfg.pair, &cfg.input, &cfg.options)?;
    let mut s = String::new();
    match cfg.format {
        Format::Table => {
            writeln!(s, "{:<20} tags", "weight")?;
            for c in &comps {
                writeln!(s, "{:<20} {}", shown(cfg, &c.weight), tag_list(c))?;
            }
        }
        Format::Tsv => {
            writeln!(s, "weight\ttags")?;
            for c in &comps {
                writeln!(s, "{}\t{}", shown(cfg, &c.weight), tag_list(c))?;
            }
        }
        Format::Json => {
            let rows: Vec<ComponentRow> = comps
                .iter()
                .map(|c| ComponentRow {
                    weight: &c.weight,
                    epsilon: cfg.epsilon_basis.then(|| {
                        epsilon_coords(cfg.pair.sub().group_type(), &c.weight).iter().map(fmt_ratio).collect()
                    }),
                    tags: c.tags.iter().map(Theorem::label).collect(),
                    witnesses: &c.witnesses,
                })
                .collect();
            s = serde_json::to_string_pretty(&rows)? + "\n";
        }
        Format::Svg => {
            let fig = FigureData::build(cfg, None)?;
            s = render_svg(cfg, &fig)?;
        }
    }
    Ok((s, 0))
}

/// Weights `rho(nu_hat) - alpha` for `alpha` in `Δ₁`: dominant, yet not
/// covered by any segment theorem.
fn negative_controls(cfg: &RunConfig) -> anyhow::Result<Vec<(Weight, usize)>> {
    let (nu_hat, _) = cfg.split_input()?;
    let top = cfg.pair.restrict(&nu_hat)?;
    let sub = cfg.pair.sub();
    Ok(cfg
        .pair
        .delta1()
        .iter()
        .map(|&(alpha, _)| (&top - &sub.simple_root(alpha), alpha))
        .filter(|(w, _)| sub.is_dominant(w))
        .collect())
}

pub fn cmd_verify(cfg: &RunConfig) -> anyhow::Result<(String, i32)> {
    let comps = all_components(&cfg.pair, &cfg.input, &cfg.options)?;
    let truth = cfg.truth()?;
    let report = verify_components(&comps, &truth);
    let controls = negative_controls(cfg)?;
    let mut s = String::new();
    match cfg.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Control {
                weight: Weight,
                root: usize,
                multiplicity: u64,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                report: &'a crate::oracle::VerificationReport,
                tally: String,
                controls: Vec<Control>,
            }
            let controls = controls
                .iter()
                .map(|(w, a)| Control { weight: w.clone(), root: a + 1, multiplicity: truth.multiplicity(w) })
                .collect();
            s = serde_json::to_string_pretty(&Out { report: &report, tally: report.tally(), controls })? + "\n";
        }
        Format::Tsv => {
            writeln!(s, "theorem\tcount\tnew")?;
            for t in &report.tags {
                writeln!(s, "{}\t{}\t{}", t.tag.label(), t.count, t.new)?;
            }
        }
        Format::Table => {
            write!(s, "{report}")?;
            for (w, a) in &controls {
                let m = truth.multiplicity(w);
                let status = if m == 0 { "absent".to_string() } else { format!("present (multiplicity {m})") };
                writeln!(s, "control      {} = rho(nuhat) - alpha_{}: {status}", shown(cfg, w), a + 1)?;
            }
        }
        Format::Svg => bail!("verify has no svg output"),
    }
    let code = if report.is_sound() { 0 } else { 1 };
    Ok((s, code))
}

struct FigureData {
    /// Every weight to plot: oracle weights plus anything generated.
    rows: Vec<(Weight, String, Option<u64>)>,
    tagged: BTreeMap<Weight, TaggedComponent>,
    segments: Vec<Segment>,
    rectangles: Vec<Hyperrectangle>,
}

impl FigureData {
    fn build(cfg: &RunConfig, truth: Option<&Decomposition>) -> anyhow::Result<Self> {
        let comps = all_components(&cfg.pair, &cfg.input, &cfg.options)?;
        let tagged: BTreeMap<Weight, TaggedComponent> = comps.iter().map(|c| (c.weight.clone(), c.clone())).collect();
        let (nu_hat, tensor) = cfg.split_input()?;
        let wants = |t| cfg.options.theorems.contains(&t);
        let max_axes = cfg.options.max_axes.unwrap_or_else(|| default_max_axes(&cfg.pair));
        let mut segments = Vec::new();
        let mut rectangles = Vec::new();
        if wants(Theorem::MainSegment) {
            segments.extend(main_segments(&cfg.pair, &nu_hat)?);
        }
        if wants(Theorem::OrthoRect) {
            rectangles.extend(ortho_rectangles(&cfg.pair, &nu_hat, max_axes)?);
        }
        if let Some((mu, nu)) = &tensor {
            if wants(Theorem::SymSegment) {
                segments.extend(sym_segments(&cfg.pair, mu, nu)?);
            }
            if wants(Theorem::SymRect) {
                rectangles.extend(sym_rectangles(&cfg.pair, mu, nu, max_axes)?);
            }
        }
        // only shapes that meet the dominant chamber
        let sub = cfg.pair.sub();
        segments.retain(|s| !s.dominant_points(sub).is_empty());
        rectangles.retain(|r| !r.dominant_points(sub).is_empty());

        let mut weights: Vec<TaggedComponent> = comps;
        if let Some(truth) = truth {
            for (w, _) in truth.iter() {
                if !tagged.contains_key(w) {
                    weights.push(TaggedComponent { weight: w.clone(), tags: Default::default(), witnesses: vec![] });
                }
            }
        }
        crate::generators::sort_by_height(sub, &mut weights);
        let rows = weights
            .into_iter()
            .map(|c| {
                let tags = if c.tags.is_empty() { "-".to_string() } else { tag_list(&c) };
                let m = truth.map(|t| t.multiplicity(&c.weight));
                (c.weight, tags, m)
            })
            .collect();
        Ok(FigureData { rows, tagged, segments, rectangles })
    }
}

pub fn cmd_figure(cfg: &RunConfig) -> anyhow::Result<(String, i32)> {
    let truth = cfg.truth()?;
    let fig = FigureData::build(cfg, Some(&truth))?;
    let gt = cfg.pair.sub().group_type();
    let mut s = String::new();
    match cfg.format {
        Format::Tsv | Format::Table => {
            let r = cfg.pair.sub().rank();
            let e = epsilon_dimension(gt);
            let mut header: Vec<String> = (1..=r).map(|i| format!("w{i}")).collect();
            header.extend((1..=e).map(|i| format!("e{i}")));
            header.extend(["tags".into(), "multiplicity".into()]);
            writeln!(s, "{}", header.join("\t"))?;
            for (w, tags, m) in &fig.rows {
                let mut cols: Vec<String> = w.coords().iter().map(ToString::to_string).collect();
                cols.extend(epsilon_coords(gt, w).iter().map(fmt_ratio));
                cols.push(tags.clone());
                cols.push(m.unwrap_or(0).to_string());
                writeln!(s, "{}", cols.join("\t"))?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                weight: &'a Weight,
                epsilon: Vec<String>,
                tags: &'a str,
                multiplicity: u64,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                rows: Vec<Row<'a>>,
                segments: &'a [Segment],
                rectangles: &'a [Hyperrectangle],
            }
            let rows = fig
                .rows
                .iter()
                .map(|(w, tags, m)| Row {
                    weight: w,
                    epsilon: epsilon_coords(gt, w).iter().map(fmt_ratio).collect(),
                    tags,
                    multiplicity: m.unwrap_or(0),
                })
                .collect();
            s = serde_json::to_string_pretty(&Out { rows, segments: &fig.segments, rectangles: &fig.rectangles })? + "\n";
        }
        Format::Svg => s = render_svg(cfg, &fig)?,
    }
    Ok((s, 0))
}

pub fn cmd_pairs_list() -> String {
    let mut s = String::new();
    for name in BUILTIN_EXAMPLES {
        let p = SphericalPair::builtin(name).expect("built-in pair");
        let d1: Vec<String> = p.delta1().iter().map(|(a, _)| format!("a{}", a + 1)).collect();
        let d2: Vec<String> = p.delta2().iter().map(|(a, _)| format!("a{}", a + 1)).collect();
        let _ = writeln!(
            s,
            "{:<12} {} in {}  delta1 [{}]  delta2 [{}]",
            name,
            p.sub().group_type(),
            p.amb().group_type(),
            d1.join(" "),
            d2.join(" ")
        );
    }
    s.push_str("diag:<type>  any reductive type, e.g. diag:C3xA1 or diag:A2xT1\n");
    s
}

pub fn cmd_pairs_validate(file: &Path) -> anyhow::Result<(String, i32)> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let doc: PairDocument = serde_json::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
    let sub = RootSystem::of(&doc.sub_type)?;
    let amb = RootSystem::of(&doc.amb_type)?;
    let report = validate_pair(&sub, &amb, &doc.rho);
    let mut s = report.to_string();
    let code = if report.passed() {
        s.push_str("valid\n");
        0
    } else {
        s.push_str("invalid\n");
        1
    };
    Ok((s, code))
}

fn epsilon_dimension(gt: &GroupType) -> usize {
    gt.factors
        .iter()
        .map(|f| match *f {
            SimpleType::A(n) => n + 1,
            SimpleType::G2 => 3,
            other => other.rank(),
        })
        .sum::<usize>()
        + gt.torus_rank
}

/// Fundamental weight `i` of a simple factor in Bourbaki's epsilon coordinates.
fn fundamental_in_epsilon(t: SimpleType, i: usize) -> Vec<Ratio<i64>> {
    let one = Ratio::from_integer(1);
    let half = Ratio::new(1, 2);
    let zero = Ratio::from_integer(0);
    let prefix = |len: usize, k: usize, c: Ratio<i64>| -> Vec<Ratio<i64>> {
        (0..len).map(|j| if j < k { c } else { zero }).collect()
    };
    match t {
        // GL-style: varpi_i = e_1 + ... + e_i
        SimpleType::A(n) => prefix(n + 1, i + 1, one),
        SimpleType::B(n) if i + 1 == n => prefix(n, n, half),
        SimpleType::D(n) if i + 1 == n => prefix(n, n, half),
        SimpleType::D(n) if i + 2 == n => {
            let mut v = prefix(n, n, half);
            v[n - 1] = -half;
            v
        }
        SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => prefix(n, i + 1, one),
        SimpleType::G2 => {
            let v: [i64; 3] = if i == 0 { [0, -1, 1] } else { [-1, -1, 2] };
            v.iter().map(|&x| Ratio::from_integer(x)).collect()
        }
    }
}

/// Coordinates of `w` in the epsilon basis of each factor, torus coordinates appended.
pub fn epsilon_coords(gt: &GroupType, w: &Weight) -> Vec<Ratio<i64>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for &f in &gt.factors {
        let mut acc = vec![Ratio::from_integer(0); epsilon_dimension(&GroupType { factors: vec![f], torus_rank: 0 })];
        for i in 0..f.rank() {
            let c = Ratio::from_integer(w.coords()[offset + i]);
            for (a, e) in acc.iter_mut().zip(fundamental_in_epsilon(f, i)) {
                *a += c * e;
            }
        }
        out.extend(acc);
        offset += f.rank();
    }
    out.extend(w.coords()[offset..].iter().map(|&x| Ratio::from_integer(x)));
    out
}

fn fmt_ratio(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Euclidean plane coordinates for rank-2 weights: Cholesky factor of the
/// Gram matrix of the fundamental weights.
fn plane_basis(rs: &RootSystem) -> [[f64; 2]; 2] {
    let d = rs.symmetrizer();
    let to_f = |r: Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
    // (varpi_i, varpi_j) = d_i * (root coordinate i of varpi_j)
    let gram = |i: usize, j: usize| d[i] as f64 * to_f(rs.to_root_coords(&rs.fundamental_weight(j))[i]);
    let (g11, g12, g22) = (gram(0, 0), gram(0, 1), gram(1, 1));
    let a = g11.sqrt();
    let b = g12 / a;
    let c = (g22 - b * b).max(0.0).sqrt();
    [[a, 0.0], [b, c]]
}

fn render_svg(cfg: &RunConfig, fig: &FigureData) -> anyhow::Result<String> {
    let rs = cfg.pair.sub();
    if rs.rank() != 2 || rs.semisimple_rank() != 2 {
        bail!("svg output needs a subgroup of semisimple rank 2 (this one has rank {}); use --format tsv", rs.rank());
    }
    let basis = plane_basis(rs);
    let project = |w: &Weight| -> (f64, f64) {
        let (x, y) = (w.coords()[0] as f64, w.coords()[1] as f64);
        (x * basis[0][0] + y * basis[1][0], x * basis[0][1] + y * basis[1][1])
    };
    let mut pts: Vec<(f64, f64)> = fig.rows.iter().map(|(w, _, _)| project(w)).collect();
    for s in &fig.segments {
        pts.push(project(&s.start));
        pts.push(project(&s.end));
    }
    for r in &fig.rectangles {
        pts.extend(r.points().iter().map(&project));
    }
    pts.push((0.0, 0.0));
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let span = (max_x - min_x).max(max_y - min_y).max(1.0);
    let scale = 480.0 / span;
    let margin = 40.0;
    let width = (max_x - min_x) * scale + 2.0 * margin;
    let height = (max_y - min_y) * scale + 2.0 * margin;
    let to_px = |(x, y): (f64, f64)| ((x - min_x) * scale + margin, (max_y - y) * scale + margin);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.1} {height:.1}">"#
    )?;
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    // walls of the dominant chamber
    let o = to_px((0.0, 0.0));
    for i in 0..2 {
        let far = Weight::from(if i == 0 { [0, 1] } else { [1, 0] }).scaled(1000);
        let (fx, fy) = project(&far);
        let len = (fx * fx + fy * fy).sqrt();
        let tip = to_px((fx / len * span * 2.0, fy / len * span * 2.0));
        writeln!(
            s,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="gray" stroke-dasharray="2,3"/>"#,
            o.0, o.1, tip.0, tip.1
        )?;
    }
    for r in &fig.rectangles {
        if r.axes.len() != 2 {
            continue;
        }
        let (a, b) = (&r.axes[0], &r.axes[1]);
        let corners = [
            r.corner.clone(),
            r.corner.sub_multiple(a.1, &a.0),
            r.corner.sub_multiple(a.1, &a.0).sub_multiple(b.1, &b.0),
            r.corner.sub_multiple(b.1, &b.0),
        ];
        let path: Vec<String> = corners
            .iter()
            .map(|c| {
                let p = to_px(project(c));
                format!("{:.1},{:.1}", p.0, p.1)
            })
            .collect();
        writeln!(s, r#"<polygon class="rectangle" points="{}" fill="magenta" fill-opacity="0.1" stroke="magenta"/>"#, path.join(" "))?;
    }
    for seg in &fig.segments {
        let (a, b) = (to_px(project(&seg.start)), to_px(project(&seg.end)));
        let colour = if seg.provenance.theorem == Theorem::SymSegment { "blue" } else { "red" };
        writeln!(
            s,
            r#"<line class="segment" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{colour}" stroke-width="1.5"/>"#,
            a.0, a.1, b.0, b.1
        )?;
    }
    for (w, _, m) in &fig.rows {
        let (x, y) = to_px(project(w));
        if let Some(c) = fig.tagged.get(w) {
            let (class, colour) = if c.tags.contains(&Theorem::Prv) { ("prv", "black") } else { ("generated", "green") };
            writeln!(s, r#"<circle class="{class}" cx="{x:.1}" cy="{y:.1}" r="4" fill="none" stroke="{colour}"/>"#)?;
        }
        if m.unwrap_or(0) > 0 {
            writeln!(
                s,
                r#"<path class="component" d="M{:.1},{y:.1}h6M{x:.1},{:.1}v6" stroke="black"/>"#,
                x - 3.0,
                y - 3.0
            )?;
        }
    }
    writeln!(s, "</svg>")?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn epsilon_conversions() {
        let g2: GroupType = "G2".parse().unwrap();
        let e = epsilon_coords(&g2, &Weight::from([1, 0]));
        assert_eq!(e, vec![r(0, 1), r(-1, 1), r(1, 1)]);
        let b3: GroupType = "B3".parse().unwrap();
        assert_eq!(epsilon_coords(&b3, &Weight::from([0, 0, 1])), vec![r(1, 2); 3]);
        let c3: GroupType = "C3".parse().unwrap();
        assert_eq!(epsilon_coords(&c3, &Weight::from([2, 0, 4])), vec![r(6, 1), r(4, 1), r(4, 1)]);
        let d4: GroupType = "D4".parse().unwrap();
        assert_eq!(epsilon_coords(&d4, &Weight::from([0, 0, 1, 0])), vec![r(1, 2), r(1, 2), r(1, 2), r(-1, 2)]);
        let a1t: GroupType = "A1xT1".parse().unwrap();
        assert_eq!(epsilon_coords(&a1t, &Weight::from([1, 5])), vec![r(1, 1), r(0, 1), r(5, 1)]);
    }

    #[test]
    fn plane_basis_of_g2_has_right_angle_between_the_simple_roots() {
        let rs = RootSystem::of("G2").unwrap();
        let b = plane_basis(&rs);
        let p = |w: [i64; 2]| {
            let (x, y) = (w[0] as f64, w[1] as f64);
            (x * b[0][0] + y * b[1][0], x * b[0][1] + y * b[1][1])
        };
        let (a1, a2) = (p([2, -1]), p([-3, 2]));
        let dot = a1.0 * a2.0 + a1.1 * a2.1;
        let n1 = (a1.0 * a1.0 + a1.1 * a1.1).sqrt();
        let n2 = (a2.0 * a2.0 + a2.1 * a2.1).sqrt();
        // 150 degrees, long root sqrt(3) times the short one
        assert!((dot / (n1 * n2) + 3f64.sqrt() / 2.0).abs() < 1e-9);
        assert!((n2 / n1 - 3f64.sqrt()).abs() < 1e-9);
    }
}
