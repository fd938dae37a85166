//! `latdom`: constructions, audits and exact solving for efficient domination
//! on lattice graphs.

mod render;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use latdom::constructions::{
    eds_p4_p4, eds_pn_p2, fset_pn_p2_even, fset_pn_p3, fset_square_small, knight_construction,
    lower_bound_f, near_grid_augment, AugmentedReport, AugmentedSet, Pendant,
};
use latdom::periodic::{
    expand_motif, hex_code_motif, rect_code_motif, tri_code_motif, verify_perfect, Motif,
};
use latdom::solver::{
    brute_force_f, check_conjecture, dp_f_rect, table_voids, RowStatus, DEFAULT_MAX_VERTICES,
    DEFAULT_MAX_WIDTH,
};
use latdom::{
    audit, transpose_set, DominationReport, Lattice, LatticeKind, Limits, Topology, VertexSet,
};
use render::{Format, RenderStyle};
use serde::{Deserialize, Serialize};

const AFTER_HELP: &str = "\
Exit status:
  0  success (verify: the set is an efficient dominating set)
  1  verify: a 2-packing with voids; construct, motif, augment, table,
     conjecture: the result does not meet its stated property
  2  usage, parse or input error, or a solver limit was hit
  3  verify: some vertex is dominated more than once

Lattices: rect:MxN, rect-torus:MxN, tri:S, tri-torus:MxN, hex:MxN, hex-torus:MxN
Set files: {\"lattice\": \"rect:4x4\", \"set\": [[1,2],[2,4]]} or a bare [[i,j],...] array.";

#[derive(Parser)]
#[command(
    name = "latdom",
    version,
    about = "Efficient domination on rectangular, triangular and hexagonal lattices"
)]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named 2-packing, audit it and print it as a set file
    Construct(ConstructArgs),
    /// Audit a set file
    Verify(VerifyArgs),
    /// Exact F(G) for a lattice
    Solve(SolveArgs),
    /// Void counts n^2 - F of n x n grids next to their prediction
    Table(RangeArgs),
    /// Exact F of n x n grids against the conjectured closed form
    Conjecture(RangeArgs),
    /// Check a periodic perfect code on its torus, optionally tiled into a window
    Motif(MotifArgs),
    /// Hang a pendant on every void of a 2-packing and re-audit
    Augment(AugmentArgs),
    /// Draw a set file
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// Efficient dominating set of the 2 x n grid, n odd
    EdsP2,
    /// Influence 2n-1 on the 2 x n grid, n even
    P2Even,
    /// Influence 3n - floor(n/3) on the 3 x n grid
    P3,
    /// Efficient dominating set of the 4 x 4 grid
    P4,
    /// Optimal sets of the 5 x 5 and 6 x 6 grids
    SquareSmall,
    /// Knight-move pattern on the n x n grid, n >= 7
    Knight,
}

#[derive(Args)]
struct GlyphArgs {
    #[arg(long, default_value_t = '@')]
    dominator: char,
    #[arg(long, default_value_t = '.')]
    dominated: char,
    #[arg(long = "void", default_value_t = 'o')]
    void_glyph: char,
    #[arg(long, default_value_t = 'x')]
    conflict: char,
}

impl GlyphArgs {
    fn style(&self, format: Format) -> Result<RenderStyle> {
        let style = RenderStyle {
            dominator: self.dominator,
            dominated: self.dominated,
            void: self.void_glyph,
            conflict: self.conflict,
            format,
        };
        style.validate()?;
        Ok(style)
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    name: Construction,
    /// Grid length (ignored by p4)
    #[arg(long)]
    n: Option<usize>,
    /// Print a picture instead of JSON
    #[arg(long, value_enum)]
    render: Option<Format>,
    /// Also write the JSON set file here
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    glyphs: GlyphArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Set file, or - for stdin
    file: PathBuf,
    /// Lattice descriptor; required if the file does not name one
    #[arg(long)]
    lattice: Option<Lattice>,
    #[arg(long, value_enum)]
    render: Option<Format>,
    #[command(flatten)]
    glyphs: GlyphArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Column sweep for bounded rectangular grids, backtracking otherwise
    Auto,
    Dp,
    Brute,
}

#[derive(Args)]
struct LimitArgs {
    /// Vertex cap for backtracking
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Cap on the shorter side for the column sweep
    #[arg(long, default_value_t = DEFAULT_MAX_WIDTH)]
    max_width: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        if self.max_vertices > DEFAULT_MAX_VERTICES {
            eprintln!(
                "warning: vertex limit raised to {}; backtracking may take very long",
                self.max_vertices
            );
        }
        if self.max_width > DEFAULT_MAX_WIDTH {
            eprintln!(
                "warning: width limit raised to {}; the sweep may need a lot of memory and time",
                self.max_width
            );
        }
        Limits {
            max_vertices: self.max_vertices,
            max_width: self.max_width,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    lattice: Lattice,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[command(flatten)]
    limits: LimitArgs,
    /// Include elapsed_ms in the JSON (makes output run-dependent)
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Text,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long, default_value_t = 7)]
    from: usize,
    #[arg(long, default_value_t = 13)]
    to: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_WIDTH)]
    max_width: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MotifLattice {
    Rect,
    Tri,
    Hex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MotifFormat {
    Json,
    Ascii,
}

#[derive(Args)]
struct MotifArgs {
    #[arg(long, value_enum)]
    lattice: MotifLattice,
    /// Residue class of the code (rect: mod 5, tri: mod 7; hex has a single motif)
    #[arg(long, default_value_t = 0)]
    residue: usize,
    /// Tile the motif into a bounded ROWSxCOLS window of the same lattice
    #[arg(long, value_parser = parse_window)]
    window: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value_t = MotifFormat::Json)]
    format: MotifFormat,
    #[command(flatten)]
    glyphs: GlyphArgs,
}

#[derive(Args)]
struct AugmentArgs {
    /// Set file, or - for stdin
    file: PathBuf,
    #[arg(long)]
    lattice: Option<Lattice>,
}

#[derive(Args)]
struct RenderArgs {
    /// Set file, or - for stdin
    file: PathBuf,
    #[arg(long)]
    lattice: Option<Lattice>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    #[command(flatten)]
    glyphs: GlyphArgs,
}

fn parse_window(s: &str) -> std::result::Result<(usize, usize), String> {
    let (r, c) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected ROWSxCOLS, got {s:?}"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected ROWSxCOLS, got {s:?}"))
    };
    let (r, c) = (num(r)?, num(c)?);
    if r == 0 || c == 0 {
        return Err("window dimensions must be positive".into());
    }
    Ok((r, c))
}

/// Accepted set-file shapes; unknown fields (such as an embedded report) are ignored.
#[derive(Deserialize)]
#[serde(untagged)]
enum SetFileIn {
    Full {
        lattice: Option<Lattice>,
        set: VertexSet,
    },
    Bare(VertexSet),
}

#[derive(Serialize)]
struct Audited<'a> {
    lattice: &'a Lattice,
    set: &'a VertexSet,
    report: &'a DominationReport,
}

#[derive(Serialize)]
struct Solved<'a> {
    lattice: &'a Lattice,
    #[serde(rename = "F")]
    f: usize,
    witness: &'a VertexSet,
    explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
struct Window {
    lattice: Lattice,
    set: VertexSet,
    report: DominationReport,
    interior_voids: usize,
}

#[derive(Serialize)]
struct MotifOut<'a> {
    torus: Lattice,
    motif: &'a Motif,
    density: f64,
    perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    window: Option<&'a Window>,
}

#[derive(Serialize)]
struct AugmentOut<'a> {
    lattice: &'a Lattice,
    set: &'a VertexSet,
    pendants: &'a [Pendant],
    augmented_set: &'a AugmentedSet,
    report: &'a AugmentedReport,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Solve(a) => solve(a),
        Command::Table(a) => table(a),
        Command::Conjecture(a) => conjecture(a),
        Command::Motif(a) => motif(a),
        Command::Augment(a) => augment(a),
        Command::Render(a) => render_cmd(a),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    Ok(text)
}

fn read_set_file(path: &Path, lattice: Option<Lattice>) -> Result<(Lattice, VertexSet)> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let parsed: SetFileIn = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{}: not a set file ({e})", path.display()))?;
    let (from_file, set) = match parsed {
        SetFileIn::Full { lattice, set } => (lattice, set),
        SetFileIn::Bare(set) => (None, set),
    };
    let lat = match (lattice, from_file) {
        (Some(a), Some(b)) if a != b => {
            bail!("--lattice {a} disagrees with the file's lattice {b}")
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => bail!("{}: no lattice in the file; pass --lattice", path.display()),
    };
    Ok((lat, set))
}

fn need_n(n: Option<usize>, name: &str) -> Result<usize> {
    n.ok_or_else(|| anyhow!("construction {name} needs --n"))
}

type Contract = Box<dyn Fn(&DominationReport) -> bool>;

/// Builds the named set and reports whether its audit meets the stated contract.
fn build(name: Construction, n: Option<usize>) -> Result<(Lattice, VertexSet, Contract)> {
    Ok(match name {
        Construction::EdsP2 => {
            let n = need_n(n, "eds-p2")?;
            (Lattice::rect(2, n)?, eds_pn_p2(n)?, Box::new(|r| r.is_eds))
        }
        Construction::P2Even => {
            let n = need_n(n, "p2-even")?;
            (
                Lattice::rect(2, n)?,
                fset_pn_p2_even(n)?,
                Box::new(move |r| r.is_two_packing && r.influence == 2 * n - 1),
            )
        }
        Construction::P3 => {
            let n = need_n(n, "p3")?;
            let want = if n == 3 { 7 } else { 3 * n - n / 3 };
            (
                Lattice::rect(3, n)?,
                fset_pn_p3(n)?,
                Box::new(move |r| r.is_two_packing && r.influence == want),
            )
        }
        Construction::P4 => (Lattice::rect(4, 4)?, eds_p4_p4(), Box::new(|r| r.is_eds)),
        Construction::SquareSmall => {
            let n = need_n(n, "square-small")?;
            let want = if n == 5 { 23 } else { 33 };
            (
                Lattice::rect(n, n)?,
                fset_square_small(n)?,
                Box::new(move |r| r.is_two_packing && r.influence == want),
            )
        }
        Construction::Knight => {
            let n = need_n(n, "knight")?;
            let set = knight_construction(n)?.full_set;
            let want = lower_bound_f(n)?;
            let boundary = move |r: &DominationReport| {
                r.voids
                    .iter()
                    .all(|v| v.i == 1 || v.j == 1 || v.i == n || v.j == n)
            };
            (
                Lattice::rect(n, n)?,
                set,
                Box::new(move |r| r.is_two_packing && r.influence == want && boundary(r)),
            )
        }
    })
}

fn construct(a: ConstructArgs) -> Result<u8> {
    let (lat, set, contract) = build(a.name, a.n)?;
    let report = audit(&lat, &set)?;
    let text = json(&Audited {
        lattice: &lat,
        set: &set,
        report: &report,
    })?;
    if let Some(path) = &a.out {
        fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    match a.render {
        Some(format) => print!("{}", a.glyphs.style(format)?.render(&lat, &set, &report)),
        None => print!("{text}"),
    }
    eprintln!(
        "{lat}: {} vertices chosen, influence {}, {} voids",
        set.len(),
        report.influence,
        report.voids.len()
    );
    if contract(&report) {
        Ok(0)
    } else {
        eprintln!("error: the construction does not meet its stated property");
        Ok(1)
    }
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let (lat, set) = read_set_file(&a.file, a.lattice)?;
    let report = audit(&lat, &set)?;
    match a.render {
        Some(format) => print!("{}", a.glyphs.style(format)?.render(&lat, &set, &report)),
        None => print!(
            "{}",
            json(&Audited {
                lattice: &lat,
                set: &set,
                report: &report
            })?
        ),
    }
    Ok(if report.is_eds {
        0
    } else if report.is_two_packing {
        eprintln!(
            "{} voids: {:?}",
            report.voids.len(),
            report.voids.iter().map(|c| (c.i, c.j)).collect::<Vec<_>>()
        );
        1
    } else {
        eprintln!(
            "{} vertices dominated more than once: {:?}",
            report.conflicts.len(),
            report
                .conflicts
                .iter()
                .map(|c| (c.i, c.j))
                .collect::<Vec<_>>()
        );
        3
    })
}

fn is_bounded_rect(lat: &Lattice) -> bool {
    lat.kind() == LatticeKind::Rectangular && lat.topology() == Topology::Bounded
}

fn solve(a: SolveArgs) -> Result<u8> {
    let lat = a.lattice;
    let limits = a.limits.limits();
    let start = Instant::now();
    let use_dp = match a.method {
        Method::Auto => is_bounded_rect(&lat),
        Method::Dp if !is_bounded_rect(&lat) => {
            bail!("the column sweep handles bounded rectangular grids only, got {lat}")
        }
        Method::Dp => true,
        Method::Brute => false,
    };
    let res = if use_dp {
        // sweep along the longer side so the profile is the shorter one
        if lat.rows() <= lat.cols() {
            dp_f_rect(lat.rows(), lat.cols(), &limits)?
        } else {
            let mut r = dp_f_rect(lat.cols(), lat.rows(), &limits)?;
            r.witness = transpose_set(&r.witness);
            r
        }
    } else {
        brute_force_f(&lat, &limits)?
    };
    let elapsed = start.elapsed();
    let out = Solved {
        lattice: &lat,
        f: res.f_value,
        witness: &res.witness,
        explored: res.explored,
        elapsed_ms: a.timing.then_some(elapsed.as_millis()),
    };
    print!("{}", json(&out)?);
    eprintln!(
        "{lat}: F = {} of {} vertices, {} via {}, {:.3} s",
        res.f_value,
        lat.vertex_count(),
        res.explored,
        if use_dp {
            "column sweep"
        } else {
            "backtracking"
        },
        elapsed.as_secs_f64()
    );
    Ok(0)
}

fn check_range(a: &RangeArgs) -> Result<()> {
    if a.from > a.to {
        bail!("--from {} is above --to {}", a.from, a.to);
    }
    if a.max_width > DEFAULT_MAX_WIDTH {
        eprintln!(
            "warning: width limit raised to {}; large n may take very long",
            a.max_width
        );
    }
    Ok(())
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn status_name(s: RowStatus) -> &'static str {
    match s {
        RowStatus::Match => "match",
        RowStatus::Mismatch => "MISMATCH",
        RowStatus::Skipped => "skipped",
    }
}

fn table(a: RangeArgs) -> Result<u8> {
    check_range(&a)?;
    let limits = Limits {
        max_width: a.max_width,
        ..Limits::default()
    };
    let rows = table_voids(a.from..=a.to, &limits)?;
    match a.format {
        TableFormat::Json => print!("{}", json(&rows)?),
        TableFormat::Text => {
            println!("{:>4} {:>6} {:>9}  status", "n", "voids", "predicted");
            for r in &rows {
                println!(
                    "{:>4} {:>6} {:>9}  {}",
                    r.n,
                    cell(r.voids),
                    r.predicted,
                    status_name(r.status)
                );
            }
        }
    }
    let skipped = rows
        .iter()
        .filter(|r| r.status == RowStatus::Skipped)
        .count();
    if skipped > 0 {
        eprintln!(
            "{skipped} rows above width {} left unverified",
            limits.max_width
        );
    }
    Ok(if rows.iter().any(|r| r.status == RowStatus::Mismatch) {
        1
    } else {
        0
    })
}

fn conjecture(a: RangeArgs) -> Result<u8> {
    check_range(&a)?;
    let limits = Limits {
        max_width: a.max_width,
        ..Limits::default()
    };
    let rows = check_conjecture(a.from..=a.to, &limits)?;
    match a.format {
        TableFormat::Json => print!("{}", json(&rows)?),
        TableFormat::Text => {
            println!("{:>4} {:>6} {:>11}  status", "n", "F", "conjectured");
            for r in &rows {
                println!(
                    "{:>4} {:>6} {:>11}  {}",
                    r.n,
                    cell(r.dp),
                    r.conjectured,
                    status_name(r.status)
                );
            }
        }
    }
    let skipped = rows
        .iter()
        .filter(|r| r.status == RowStatus::Skipped)
        .count();
    if skipped > 0 {
        eprintln!(
            "{skipped} rows above width {} left unverified",
            limits.max_width
        );
    }
    Ok(if rows.iter().any(|r| r.status == RowStatus::Mismatch) {
        1
    } else {
        0
    })
}

fn motif(a: MotifArgs) -> Result<u8> {
    let m = match a.lattice {
        MotifLattice::Rect => rect_code_motif(a.residue),
        MotifLattice::Tri => tri_code_motif(a.residue),
        MotifLattice::Hex if a.residue != 0 => bail!("the hexagonal motif takes no residue"),
        MotifLattice::Hex => hex_code_motif(),
    };
    let torus = m.torus()?;
    let report = verify_perfect(&m)?;
    let window = match a.window {
        Some((r, c)) => Some(motif_window(&m, r, c)?),
        None => None,
    };
    match a.format {
        MotifFormat::Json => {
            let out = MotifOut {
                torus,
                motif: &m,
                density: m.density(),
                perfect: report.is_eds,
                window: window.as_ref(),
            };
            print!("{}", json(&out)?);
        }
        MotifFormat::Ascii => {
            let style = a.glyphs.style(Format::Ascii)?;
            match &window {
                Some(w) => print!("{}", style.render(&w.lattice, &w.set, &w.report)),
                None => print!("{}", style.render(&torus, &m.cells, &report)),
            }
        }
    }
    eprintln!(
        "{torus}: {} cells, density {:.4}, perfect {}",
        m.cells.len(),
        m.density(),
        report.is_eds
    );
    Ok(if report.is_eds { 0 } else { 1 })
}

/// The motif tiled into a bounded patch. Triangular windows are the
/// triangle `tri:S` and need `ROWS = COLS = S`.
fn motif_window(m: &Motif, r: usize, c: usize) -> Result<Window> {
    let lat = match m.kind {
        LatticeKind::Rectangular => Lattice::rect(r, c)?,
        LatticeKind::Triangular if r != c => {
            bail!("a triangular window is a triangle; use --window SxS")
        }
        LatticeKind::Triangular => Lattice::tri(r)?,
        LatticeKind::Hexagonal => Lattice::hex(r, c)?,
    };
    let set: VertexSet = expand_motif(m, r, c)
        .iter()
        .filter(|&v| lat.contains(v))
        .collect();
    let report = audit(&lat, &set)?;
    let full = lat.kind().regular_degree();
    let mut interior_voids = 0;
    for v in &report.voids {
        if lat.degree(v)? == full {
            interior_voids += 1;
        }
    }
    Ok(Window {
        lattice: lat,
        set,
        report,
        interior_voids,
    })
}

fn augment(a: AugmentArgs) -> Result<u8> {
    let (lat, set) = read_set_file(&a.file, a.lattice)?;
    let (aug, chosen) = near_grid_augment(&lat, &set)?;
    let report = aug.audit(&chosen)?;
    let out = AugmentOut {
        lattice: &lat,
        set: &set,
        pendants: &aug.pendants,
        augmented_set: &chosen,
        report: &report,
    };
    print!("{}", json(&out)?);
    eprintln!(
        "{lat}: {} pendants added, {} vertices, efficient {}",
        aug.pendants.len(),
        aug.vertex_count(),
        report.is_eds
    );
    Ok(if report.is_eds { 0 } else { 1 })
}

fn render_cmd(a: RenderArgs) -> Result<u8> {
    let (lat, set) = read_set_file(&a.file, a.lattice)?;
    let report = audit(&lat, &set)?;
    print!("{}", a.glyphs.style(a.format)?.render(&lat, &set, &report));
    Ok(0)
}
