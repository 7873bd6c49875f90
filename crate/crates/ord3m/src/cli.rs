//! Command-line driver: classification queries, order comparisons, cone
//! searches, homology, representation solving, and presentation emitters,
//! with line-oriented `key: value` output stable enough for golden tests.
//!
//! Exit codes: 0 for a computed verdict or result, 2 for mathematically
//! honest "inconclusive" outcomes (a consistent cone, a Betti-number check
//! that decides nothing), 1 for usage or input errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conesearch::{build_ball, search_cone, verify_certificate, ConeCertificate, Mode};
use crate::homology::{abelianization, lo_via_betti, BettiVerdict};
use crate::magnus::{magnus_compare, Comparison, VarMap};
use crate::oracle::EqualityOracle;
use crate::reps;
use crate::seifert::{
    self, BaseSurface, SeifertInvariants, SeifertManifold, SpecialSeifert,
};
use crate::sol::{BoundaryKind, SolManifold, GL2Z};
use crate::surface::{surface_compare, SurfaceElement};
use crate::verdict::Verdict;
use crate::words::{parse_word, rss_presentation, Presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Parser)]
#[command(name = "ord3m", version, about = "orderability of 3-manifold groups")]
struct Cli {
    /// Output format: plain text or one JSON object per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a manifold's group.
    Classify {
        #[command(subcommand)]
        target: ClassifyTarget,
    },
    /// Compare group elements in a constructed order.
    Order {
        #[command(subcommand)]
        target: OrderTarget,
    },
    /// Positive-cone search over a Cayley ball.
    Cone {
        #[command(subcommand)]
        target: ConeTarget,
    },
    /// First homology of a finite presentation file.
    Homology { file: String },
    /// Figure-eight representation family.
    Rep {
        #[command(subcommand)]
        target: RepTarget,
    },
    /// Emit a presentation in the file format.
    Present {
        #[command(subcommand)]
        target: PresentTarget,
    },
}

#[derive(Subcommand)]
enum ClassifyTarget {
    /// Seifert fibred space, by invariants or by special name.
    Seifert(SeifertArgs),
    /// Sol manifold, by variant.
    Sol(SolArgs),
}

#[derive(Args)]
struct SeifertArgs {
    /// Base genus: g >= 0 orientable, g < 0 cross-caps.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<i64>,
    /// Section obstruction b.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    /// Exceptional fibres, e.g. `2/1,3/1,7/1` (alpha/beta).
    #[arg(long, value_delimiter = ',')]
    cones: Vec<String>,
    /// Named manifold outside the closed oriented notation.
    #[arg(long, value_enum)]
    special: Option<SpecialTag>,
    /// Circle-bundle base code (with --special circle-bundle).
    #[arg(long, allow_hyphen_values = true)]
    base: Option<i64>,
    /// Circle-bundle Euler number (with --special circle-bundle).
    #[arg(long, allow_hyphen_values = true)]
    euler: Option<i64>,
    #[arg(long, value_enum, default_value_t = Question::Lo)]
    question: Question,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpecialTag {
    S3,
    S1xs2,
    S1TwistS2,
    SolidTorus,
    SolidKleinBottle,
    P2xs1,
    CircleBundle,
    Bounded,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Question {
    Lo,
    Biorder,
    VirtuallyBiorder,
    Foliation,
}

#[derive(Args)]
struct SolArgs {
    #[arg(long, value_enum)]
    variant: SolVariant,
    /// Monodromy entries a,b,c,d (torus-bundle and union-torus-glue).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    matrix: Vec<i64>,
    /// Boundary piece kind (with --variant boundary).
    #[arg(long, value_enum)]
    kind: Option<BoundaryTag>,
    #[arg(long, value_enum, default_value_t = SolQuestion::Lo)]
    question: SolQuestion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolVariant {
    TorusBundle,
    KleinBottleBundle,
    UnionTorusGlue,
    UnionKleinGlue,
    Boundary,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundaryTag {
    Ball,
    SolidTorus,
    SolidKleinBottle,
    T2xI,
    TwistedIBundleK,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolQuestion {
    Lo,
    Biorder,
    VirtuallyBiorder,
}

#[derive(Subcommand)]
enum OrderTarget {
    /// Power-series bi-order on a free group.
    CompareFree {
        #[arg(long)]
        word1: String,
        #[arg(long)]
        word2: String,
        #[arg(long)]
        rank: usize,
    },
    /// Bi-order on `<a, b, c | a*b*a^-1*b^-1 = c^2>`.
    CompareSurface {
        #[arg(long)]
        word1: String,
        #[arg(long)]
        word2: String,
    },
}

#[derive(Subcommand)]
enum ConeTarget {
    Search {
        #[arg(long, value_enum)]
        family: Family,
        /// Rank for the free and free-abelian families.
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Order of the cyclic family.
        #[arg(long, default_value_t = 2)]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = ModeTag::Left)]
        mode: ModeTag,
        #[arg(long, default_value_t = 3)]
        radius: u32,
        /// Grow the radius from 3 until a refutation or the cap.
        #[arg(long)]
        auto: bool,
        #[arg(long, default_value_t = 10)]
        max_radius: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Free,
    FreeAbelian,
    Zn,
    Klein,
    Bsw,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeTag {
    Left,
    Bi,
}

#[derive(Subcommand)]
enum RepTarget {
    Fig8 {
        /// Filling slope p/q with |p/q| < 4, e.g. `1/2`, `0`, `-3`.
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        #[arg(long, default_value_t = reps::DEFAULT_GRID)]
        grid: f64,
        #[arg(long, default_value_t = reps::DEFAULT_SMAX)]
        smax: f64,
    },
}

#[derive(Subcommand)]
enum PresentTarget {
    /// Punctured-torus-bundle filling presentation.
    Rss {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Standard Seifert presentation from invariants.
    Seifert {
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
}

/// Accumulated `key: value` output lines.
#[derive(Default)]
pub struct Output {
    lines: Vec<(String, String)>,
    raw: Vec<String>,
}

impl Output {
    fn push(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    /// Lines already in final text form (the rep command's `k = v` format).
    fn push_raw(&mut self, line: String) {
        self.raw.push(line);
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for (k, v) in &self.lines {
                    let _ = writeln!(out, "{k}: {v}");
                }
                for line in &self.raw {
                    let _ = writeln!(out, "{line}");
                }
            }
            Format::JsonLines => {
                for (k, v) in &self.lines {
                    let mut obj = serde_json::Map::new();
                    obj.insert(k.clone(), serde_json::Value::String(v.clone()));
                    let _ = writeln!(out, "{}", serde_json::Value::Object(obj));
                }
                for line in &self.raw {
                    if let Some((k, v)) = line.split_once(" = ") {
                        let mut obj = serde_json::Map::new();
                        obj.insert(k.to_string(), serde_json::Value::String(v.to_string()));
                        let _ = writeln!(out, "{}", serde_json::Value::Object(obj));
                    }
                }
            }
        }
        out
    }
}

/// Runs the CLI on the given arguments; returns the exit code and stdout
/// text. Errors are reported as `(1, message)`.
pub fn execute<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the error path too
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            return (code, rendered);
        }
    };
    let format = cli.format;
    let mut out = Output::default();
    match run_command(cli.command, &mut out) {
        Ok(code) => (code, out.render(format)),
        Err(msg) => (EXIT_ERROR, format!("error: {msg}\n")),
    }
}

fn run_command(cmd: Command, out: &mut Output) -> Result<i32, String> {
    match cmd {
        Command::Classify { target } => match target {
            ClassifyTarget::Seifert(args) => classify_seifert(args, out),
            ClassifyTarget::Sol(args) => classify_sol(args, out),
        },
        Command::Order { target } => order(target, out),
        Command::Cone { target } => cone(target, out),
        Command::Homology { file } => homology(&file, out),
        Command::Rep { target } => rep(target, out),
        Command::Present { target } => present(target, out),
    }
}

fn parse_cones(specs: &[String]) -> Result<Vec<(i64, i64)>, String> {
    specs
        .iter()
        .map(|s| {
            let (a, b) = s
                .split_once('/')
                .ok_or_else(|| format!("cone `{s}` is not of the form alpha/beta"))?;
            let alpha: i64 = a.trim().parse().map_err(|_| format!("bad alpha in `{s}`"))?;
            let beta: i64 = b.trim().parse().map_err(|_| format!("bad beta in `{s}`"))?;
            Ok((alpha, beta))
        })
        .collect()
}

fn emit_verdict(out: &mut Output, v: &Verdict) -> i32 {
    out.push("verdict", if v.yes { "yes" } else { "no" });
    out.push("reason", v.reason);
    if let Some(w) = &v.witness {
        out.push("witness", w);
    }
    EXIT_OK
}

fn classify_seifert(args: SeifertArgs, out: &mut Output) -> Result<i32, String> {
    let manifold = if let Some(tag) = args.special {
        let special = match tag {
            SpecialTag::S3 => SpecialSeifert::S3,
            SpecialTag::S1xs2 => SpecialSeifert::S1xS2,
            SpecialTag::S1TwistS2 => SpecialSeifert::S1TwistS2,
            SpecialTag::SolidTorus => SpecialSeifert::SolidTorus,
            SpecialTag::SolidKleinBottle => SpecialSeifert::SolidKleinBottle,
            SpecialTag::P2xs1 => SpecialSeifert::P2xS1,
            SpecialTag::Bounded => SpecialSeifert::BoundedSeifert,
            SpecialTag::CircleBundle => {
                let base = args.base.ok_or("--special circle-bundle needs --base")?;
                let euler = args.euler.ok_or("--special circle-bundle needs --euler")?;
                SpecialSeifert::OrientableCircleBundle {
                    base: BaseSurface::from_code(base),
                    euler,
                }
            }
        };
        SeifertManifold::Special(special)
    } else {
        let g = args.g.ok_or("provide --g and --b, or --special")?;
        let b = args.b.ok_or("provide --g and --b, or --special")?;
        let cones = parse_cones(&args.cones)?;
        let inv = SeifertInvariants::from_fractions(g, b, &cones).map_err(|e| e.to_string())?;
        SeifertManifold::Invariants(inv)
    };

    let verdict = match args.question {
        Question::Lo => seifert::is_left_orderable(&manifold),
        Question::Biorder => seifert::is_biorderable(&manifold),
        Question::VirtuallyBiorder => seifert::is_virtually_biorderable(&manifold),
        Question::Foliation => match &manifold {
            SeifertManifold::Invariants(inv) => {
                seifert::has_horizontal_foliation(inv).map_err(|e| e.to_string())?
            }
            SeifertManifold::Special(_) => {
                return Err("--question foliation needs --g/--b/--cones invariants".to_string())
            }
        },
    };
    Ok(emit_verdict(out, &verdict))
}

fn classify_sol(args: SolArgs, out: &mut Output) -> Result<i32, String> {
    let matrix = |entries: &[i64]| -> Result<GL2Z, String> {
        if entries.len() != 4 {
            return Err("--matrix needs four entries a,b,c,d".to_string());
        }
        GL2Z::new(entries[0], entries[1], entries[2], entries[3]).map_err(|e| e.to_string())
    };
    let manifold = match args.variant {
        SolVariant::TorusBundle => {
            SolManifold::torus_bundle(matrix(&args.matrix)?).map_err(|e| e.to_string())?
        }
        SolVariant::UnionTorusGlue => {
            SolManifold::union_torus_glue(matrix(&args.matrix)?).map_err(|e| e.to_string())?
        }
        SolVariant::KleinBottleBundle => SolManifold::KleinBottleBundle,
        SolVariant::UnionKleinGlue => SolManifold::UnionTwistedIBundlesKleinGlue,
        SolVariant::Boundary => {
            let kind = args.kind.ok_or("--variant boundary needs --kind")?;
            SolManifold::Boundary(match kind {
                BoundaryTag::Ball => BoundaryKind::Ball,
                BoundaryTag::SolidTorus => BoundaryKind::SolidTorus,
                BoundaryTag::SolidKleinBottle => BoundaryKind::SolidKleinBottle,
                BoundaryTag::T2xI => BoundaryKind::TorusXInterval,
                BoundaryTag::TwistedIBundleK => BoundaryKind::TwistedIBundleOverK,
            })
        }
    };
    let verdict = match args.question {
        SolQuestion::Lo => crate::sol::sol_is_left_orderable(&manifold),
        SolQuestion::Biorder => crate::sol::sol_is_biorderable(&manifold),
        SolQuestion::VirtuallyBiorder => crate::sol::sol_is_virtually_biorderable(&manifold),
    };
    Ok(emit_verdict(out, &verdict))
}

fn comparison_name(c: Comparison) -> &'static str {
    match c {
        Comparison::Lt => "LT",
        Comparison::Eq => "EQ",
        Comparison::Gt => "GT",
    }
}

fn order(target: OrderTarget, out: &mut Output) -> Result<i32, String> {
    match target {
        OrderTarget::CompareFree { word1, word2, rank } => {
            if rank == 0 {
                return Err("rank must be positive".to_string());
            }
            let oracle = EqualityOracle::Free { rank };
            let gens = oracle.generators();
            let w1 = parse_word(&word1, &gens).map_err(|e| e.to_string())?;
            let w2 = parse_word(&word2, &gens).map_err(|e| e.to_string())?;
            let vars = VarMap::from_generators(&gens);
            let cmp = magnus_compare(&w1, &w2, &vars).map_err(|e| e.to_string())?;
            out.push("result", comparison_name(cmp));
            Ok(EXIT_OK)
        }
        OrderTarget::CompareSurface { word1, word2 } => {
            let g1 = SurfaceElement::parse(&word1).map_err(|e| e.to_string())?;
            let g2 = SurfaceElement::parse(&word2).map_err(|e| e.to_string())?;
            out.push("result", comparison_name(surface_compare(&g1, &g2)));
            Ok(EXIT_OK)
        }
    }
}

fn cone(target: ConeTarget, out: &mut Output) -> Result<i32, String> {
    let ConeTarget::Search { family, rank, modulus, mode, radius, auto, max_radius } = target;
    let oracle = match family {
        Family::Free => EqualityOracle::Free { rank },
        Family::FreeAbelian => EqualityOracle::FreeAbelian { rank },
        Family::Zn => EqualityOracle::Cyclic { modulus },
        Family::Klein => EqualityOracle::KleinBottle,
        Family::Bsw => EqualityOracle::BswAmalgam,
    };
    let mode = match mode {
        ModeTag::Left => Mode::LeftOrder,
        ModeTag::Bi => Mode::BiOrder,
    };
    let gens = oracle.generators();
    let radii: Vec<u32> = if auto {
        (3..=max_radius).collect()
    } else {
        vec![radius]
    };
    if radii.is_empty() {
        return Err("empty radius range".to_string());
    }
    let mut last: Option<(ConeCertificate, crate::conesearch::GroupBall)> = None;
    for r in radii {
        let ball = build_ball(&oracle, &gens, r).map_err(|e| e.to_string())?;
        let cert = search_cone(&ball, mode).map_err(|e| e.to_string())?;
        let done = cert.is_refutation();
        last = Some((cert, ball));
        if done {
            break;
        }
    }
    let (cert, ball) = last.expect("at least one radius was searched");
    let verified = verify_certificate(&ball, &cert, mode);
    match &cert {
        ConeCertificate::Refutation { radius, .. } => {
            out.push("certificate", "refutation");
            out.push("radius", radius);
            out.push("verified", verified);
            for line in cert.render(&ball).lines() {
                let (k, v) = line.split_once(": ").unwrap_or(("step", line));
                out.push(k, v);
            }
            Ok(EXIT_OK)
        }
        ConeCertificate::Consistent { radius, .. } => {
            out.push("certificate", "consistent");
            out.push("radius", radius);
            out.push("verified", verified);
            out.push("note", format!("no obstruction at radius {radius}; inconclusive for the full group"));
            for line in cert.render(&ball).lines() {
                let (k, v) = line.split_once(": ").unwrap_or(("sign", line));
                out.push(k, v);
            }
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn homology(file: &str, out: &mut Output) -> Result<i32, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
    let pres = Presentation::parse(&text).map_err(|e| e.to_string())?;
    let inv = abelianization(&pres);
    out.push("betti", inv.betti);
    let torsion: Vec<String> = inv.torsion.iter().map(|d| d.to_string()).collect();
    out.push("torsion", if torsion.is_empty() { "none".to_string() } else { torsion.join(",") });
    match lo_via_betti(&pres) {
        BettiVerdict::LoIfP2Irreducible => {
            out.push("verdict", "lo-if-p2-irreducible");
            Ok(EXIT_OK)
        }
        BettiVerdict::Inconclusive => {
            out.push("verdict", "inconclusive");
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn rep(target: RepTarget, out: &mut Output) -> Result<i32, String> {
    let RepTarget::Fig8 { slope, grid, smax } = target;
    let (p, q) = parse_slope(&slope)?;
    let roots = reps::solve_slope(p, q, grid, smax).map_err(|e| e.to_string())?;
    out.push("slope", format!("{p}/{q}"));
    out.push("roots", roots.len());
    for s in roots {
        let g = reps::g_of_s(s).map_err(|e| e.to_string())?;
        let residual = reps::relation_residual(s).map_err(|e| e.to_string())?;
        out.push_raw(format!("s = {s:.12}"));
        out.push_raw(format!("g(s) = {g:.12}"));
        out.push_raw(format!("residual = {residual:.3e}"));
    }
    Ok(EXIT_OK)
}

fn parse_slope(text: &str) -> Result<(i64, i64), String> {
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<i64>().map_err(|_| format!("bad slope `{text}`"))?,
            q.trim().parse::<i64>().map_err(|_| format!("bad slope `{text}`"))?,
        ),
        None => (text.trim().parse::<i64>().map_err(|_| format!("bad slope `{text}`"))?, 1),
    };
    if q == 0 {
        return Err("slope denominator is zero".to_string());
    }
    let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
    Ok((p, q))
}

fn present(target: PresentTarget, out: &mut Output) -> Result<i32, String> {
    let pres = match target {
        PresentTarget::Rss { p, q, m } => rss_presentation(p, q, m).map_err(|e| e.to_string())?,
        PresentTarget::Seifert { g, b, cones } => {
            let cones = parse_cones(&cones)?;
            let inv =
                SeifertInvariants::from_fractions(g, b, &cones).map_err(|e| e.to_string())?;
            seifert::seifert_presentation(&inv)
        }
    };
    for line in pres.to_file_string().lines() {
        let (k, v) = line.split_once(": ").unwrap_or(("line", line));
        out.push(k, v);
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let mut full = vec!["ord3m"];
        full.extend_from_slice(args);
        execute(full)
    }

    #[test]
    fn classify_seifert_foliation_witness() {
        let (code, out) = run(&[
            "classify", "seifert", "--g", "0", "--b", "-1", "--cones", "2/1,3/1,7/1",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("verdict: yes"));
        assert!(out.contains("reason: horizontal-foliation"));
        assert!(out.contains("witness: m=5 a=2"));
    }

    #[test]
    fn classify_sol_biorder() {
        let (code, out) = run(&[
            "classify", "sol", "--variant", "torus-bundle", "--matrix", "2,1,1,1",
            "--question", "biorder",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("verdict: yes"));
    }

    #[test]
    fn cone_auto_reaches_refutation() {
        let (code, out) = run(&["cone", "search", "--family", "zn", "--modulus", "2", "--mode", "left", "--auto"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("certificate: refutation"));
    }

    #[test]
    fn cone_consistent_is_inconclusive() {
        let (code, out) = run(&[
            "cone", "search", "--family", "klein", "--mode", "left", "--radius", "3",
        ]);
        assert_eq!(code, EXIT_INCONCLUSIVE, "{out}");
        assert!(out.contains("certificate: consistent"));
        assert!(out.contains("note: no obstruction at radius 3"));
    }

    #[test]
    fn bad_input_is_exit_one() {
        let (code, _) = run(&["present", "rss", "--p", "2", "--q", "2", "--m", "-3"]);
        assert_eq!(code, EXIT_ERROR);
        let (code, _) = run(&["classify", "seifert", "--g", "0", "--b", "0", "--cones", "4/2"]);
        assert_eq!(code, EXIT_ERROR);
        let (code, _) = run(&["nonsense"]);
        assert_eq!(code, EXIT_ERROR);
    }

    #[test]
    fn order_compare_free_runs() {
        let (code, out) = run(&[
            "order", "compare-free", "--word1", "a", "--word2", "a^2", "--rank", "2",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("result: LT"));
    }

    #[test]
    fn json_lines_format() {
        let (code, out) = run(&[
            "--format", "json-lines", "order", "compare-free", "--word1", "a", "--word2",
            "a^2", "--rank", "2",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("{\"result\":\"LT\"}"));
    }
}
