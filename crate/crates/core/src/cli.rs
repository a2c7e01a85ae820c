//! The `tolcx` command line.
//!
//! Exit codes: 0 when the command succeeds or a check passes, 1 when a
//! check fails, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bounds::{covering_number, eta_bruteforce, eta_closed, h_value, is_t_critical, minimum_cover, tuza_upper, Hypergraph};
use crate::collapse::{collapsibility_with_certificate, find_collapse, CollapseCertificate};
use crate::colorful::{verify_tolerant_colorful, verify_topological_colorful_helly, ColorfulMode, PartitionMatroid};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::format::{format_complex, read_complex};
use crate::geometry::{nerve_of_boxes, random_boxes, two_block_complex, BoxFamily};
use crate::leray::{leray_number_with_witness, leray_witness};
use crate::report::analyze;
use crate::suites::{self, SuiteOptions};
use crate::tolerance::tolerance_complex;

/// Vertex count above which `leray` needs `--force`.
pub const LERAY_VERTEX_CAP: usize = 14;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tolcx", version, about = "Tolerance complexes, Leray numbers and collapsibility")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of trials for `verify`.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Lift vertex and parameter caps.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, f-vector, Betti numbers, h, L, C and missing faces.
    Analyze { file: PathBuf },
    /// Write the t-tolerance complex.
    Tolerance {
        #[arg(short = 't')]
        t: usize,
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Decide d-collapsibility (or compute C when --d is absent).
    Collapse {
        file: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        /// Write the collapse sequence as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Decide d-Leray-ness (or compute L when --d is absent).
    Leray {
        file: PathBuf,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Evaluate h(t,d), η(r,t) or the upper bound on η.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Minimum vertex cover of a uniform hypergraph.
    Cover {
        file: PathBuf,
        /// Also report whether the hypergraph is t-critical.
        #[arg(long)]
        critical: Option<usize>,
    },
    /// Nerve of a box family.
    Nerve {
        file: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
    },
    /// Colorful Helly witnesses.
    Colorful {
        #[command(subcommand)]
        which: ColorfulCommand,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    H { t: usize, d: usize },
    Eta {
        r: usize,
        t: usize,
        /// Search graphs up to this many vertices instead of using a closed form.
        #[arg(long)]
        brute: Option<usize>,
    },
    Tuza { r: usize, t: usize },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Two disjoint (t+1)-sets as maximal faces.
    TwoBlock {
        t: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Random axis-parallel boxes with integer corners.
    Boxes {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        range: i64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Random complex.
    Complex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ColorfulCommand {
    Verify {
        file: PathBuf,
        #[arg(long)]
        mode: String,
        /// JSON list of classes, e.g. `[[0,1],[2,3]]`.
        #[arg(long)]
        classes: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Defaults to L(K) in plain mode, C(K) in tolerant mode, 2 in d2t1 mode.
        #[arg(long)]
        d: Option<usize>,
        /// Skip the premise checks.
        #[arg(long)]
        assume: bool,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or alias; omit with --list.
    suite: Option<String>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Largest vertex (or member) count drawn.
    #[arg(long)]
    n: Option<usize>,
    /// Re-run the check on a dumped instance.
    #[arg(long)]
    replay: Option<PathBuf>,
    #[arg(long, default_value = "counterexamples")]
    dump_dir: PathBuf,
    /// Do not write counterexample files.
    #[arg(long)]
    no_dump: bool,
    /// List the suites and exit.
    #[arg(long)]
    list: bool,
}

struct Ctx<'a> {
    json: bool,
    seed: u64,
    trials: Option<usize>,
    force: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, value: serde_json::Value, text: &str) -> Result<()> {
        if self.json {
            writeln!(self.out, "{}", serde_json::to_string_pretty(&value)?)?;
        } else {
            write!(self.out, "{text}")?;
            if !text.ends_with('\n') {
                writeln!(self.out)?;
            }
        }
        Ok(())
    }
}

fn write_or_print(ctx: &mut Ctx, path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => Ok(write!(ctx.out, "{text}")?),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, seed: cli.seed, trials: cli.trials, force: cli.force, out };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> Result<i32> {
    match command {
        Command::Analyze { file } => {
            let k = read_complex(&file)?;
            let a = analyze(&k);
            ctx.emit(serde_json::to_value(&a)?, &a.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Tolerance { t, input, output } => {
            let tk = tolerance_complex(&read_complex(&input)?, t);
            write_or_print(ctx, output.as_ref(), &format_complex(&tk))?;
            Ok(EXIT_OK)
        }
        Command::Collapse { file, d, certificate } => collapse(ctx, &read_complex(&file)?, d, certificate),
        Command::Leray { file, d } => leray(ctx, &read_complex(&file)?, d),
        Command::Bounds { which } => bounds(ctx, which),
        Command::Cover { file, critical } => {
            let h = Hypergraph::read(&file)?;
            let cover = minimum_cover(&h);
            let crit = critical.map(|t| is_t_critical(&h, t));
            let mut text = format!("covering number: {}\nminimum cover: {cover}\n", covering_number(&h));
            if let (Some(t), Some(c)) = (critical, crit) {
                text.push_str(&format!("{t}-critical: {c}\n"));
            }
            let value = json!({ "covering_number": cover.len(), "cover": cover, "uniformity": h.uniformity(), "critical": crit });
            ctx.emit(value, &text)?;
            Ok(EXIT_OK)
        }
        Command::Nerve { file, output } => {
            let family = BoxFamily::read(&file)?;
            let n = nerve_of_boxes(&family);
            if ctx.json {
                ctx.emit(json!({ "vertices": n.ambient(), "maximal_faces": n.maximal_faces() }), "")?;
            } else {
                write_or_print(ctx, output.as_ref(), &format_complex(&n))?;
            }
            Ok(EXIT_OK)
        }
        Command::Gen { which } => generate(ctx, which),
        Command::Colorful { which: ColorfulCommand::Verify { file, mode, classes, t, d, assume } } => {
            let k = read_complex(&file)?;
            let m = PartitionMatroid::from_json(&std::fs::read_to_string(&classes)?, k.ambient())?;
            let mode: ColorfulMode = mode.parse()?;
            let report = match mode {
                ColorfulMode::Plain => {
                    let d = d.unwrap_or_else(|| leray_number_with_witness(&k).0);
                    verify_topological_colorful_helly(&k, &m, d, assume)?
                }
                ColorfulMode::Tolerant => {
                    let d = d.unwrap_or_else(|| crate::collapse::collapsibility_number(&k));
                    verify_tolerant_colorful(&k, &m, t, d, mode, assume)?
                }
                ColorfulMode::D2t1 => verify_tolerant_colorful(&k, &m, t, d.unwrap_or(2), mode, assume)?,
            };
            let text = match (report.witness, report.rank) {
                (Some(w), Some(r)) => format!("witness {w}: rank of the complement {r} <= {}\nresult: PASS\n", report.bound),
                _ => format!("no witness within bound {}\nresult: FAIL\n", report.bound),
            };
            ctx.emit(serde_json::to_value(&report)?, &text)?;
            Ok(if report.witness.is_some() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Verify(args) => verify(ctx, args),
    }
}

fn collapse(ctx: &mut Ctx, k: &SimplicialComplex, d: Option<usize>, certificate: Option<PathBuf>) -> Result<i32> {
    let (ok, d, cert): (bool, usize, Option<CollapseCertificate>) = match d {
        Some(d) => {
            let cert = find_collapse(k, d);
            (cert.is_some(), d, cert)
        }
        None => {
            let (c, cert) = collapsibility_with_certificate(k);
            (true, c, Some(cert))
        }
    };
    if let (Some(path), Some(cert)) = (&certificate, &cert) {
        std::fs::write(path, serde_json::to_string_pretty(cert)?)?;
    }
    let text = match cert.as_ref() {
        Some(c) => format!("{d}-collapsible: yes ({} elementary collapses)\n", c.len()),
        None => format!("{d}-collapsible: no\n"),
    };
    let value = json!({ "d": d, "collapsible": ok, "certificate": cert });
    ctx.emit(value, &text)?;
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn leray(ctx: &mut Ctx, k: &SimplicialComplex, d: Option<usize>) -> Result<i32> {
    let n = k.vertices().len();
    if n > LERAY_VERTEX_CAP && !ctx.force {
        return Err(Error::Refused(format!("{n} vertices exceed the cap of {LERAY_VERTEX_CAP} (use --force)")));
    }
    match d {
        Some(d) => {
            let w = leray_witness(k, d);
            let text = match &w {
                None => format!("{d}-Leray: yes\n"),
                Some(w) => format!("{d}-Leray: no (homology in dimension {} on {})\n", w.dim, w.subset),
            };
            ctx.emit(json!({ "d": d, "leray": w.is_none(), "witness": w }), &text)?;
            Ok(if w.is_none() { EXIT_OK } else { EXIT_FAIL })
        }
        None => {
            let (l, w) = leray_number_with_witness(k);
            let text = match &w {
                None => format!("leray number: {l}\n"),
                Some(w) => format!("leray number: {l} (homology in dimension {} on {})\n", w.dim, w.subset),
            };
            ctx.emit(json!({ "leray_number": l, "witness": w }), &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn bounds(ctx: &mut Ctx, which: BoundsCommand) -> Result<i32> {
    let (value, text) = match which {
        BoundsCommand::H { t, d } => {
            let h = h_value(t, d)?;
            (json!({ "t": t, "d": d, "h": h.to_string() }), format!("h({t},{d}) = {h}\n"))
        }
        BoundsCommand::Eta { r, t, brute: Some(n_max) } => {
            let n = eta_bruteforce(r, t, n_max)?;
            (json!({ "r": r, "t": t, "n_max": n_max, "eta": n }), format!("eta({r},{t}) on at most {n_max} vertices = {n}\n"))
        }
        BoundsCommand::Eta { r, t, brute: None } => {
            let eta = eta_closed(r, t).ok_or_else(|| {
                Error::Refused(format!("no closed form for eta({r},{t}); closed forms exist for r = 2 or t = 2 (try --brute)"))
            })?;
            (json!({ "r": r, "t": t, "eta": eta.to_string() }), format!("eta({r},{t}) = {eta}\n"))
        }
        BoundsCommand::Tuza { r, t } => {
            let b = tuza_upper(r, t)?;
            (json!({ "r": r, "t": t, "bound": b.to_string() }), format!("eta({r},{t}) < {b}\n"))
        }
    };
    ctx.emit(value, &text)?;
    Ok(EXIT_OK)
}

fn generate(ctx: &mut Ctx, which: GenCommand) -> Result<i32> {
    match which {
        GenCommand::TwoBlock { t, output } => {
            let k = two_block_complex(t)?;
            write_or_print(ctx, output.as_ref(), &format_complex(&k))?;
        }
        GenCommand::Boxes { d, n, range, output } => {
            if (n > 20 || d == 0) && !ctx.force {
                return Err(Error::Refused("box generation needs d >= 1 and at most 20 boxes (use --force)".into()));
            }
            let family = random_boxes(d, n, ctx.seed, range)?;
            let params = vec![("seed".to_string(), ctx.seed.to_string())];
            write_or_print(ctx, output.as_ref(), &family.format_with_params(&params))?;
        }
        GenCommand::Complex { n, density, output } => {
            if n > 12 && !ctx.force {
                return Err(Error::Refused("random complexes are capped at 12 vertices (use --force)".into()));
            }
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::precondition("density must lie in [0, 1]"));
            }
            let k = crate::geometry::random_complex(n, density, ctx.seed);
            write_or_print(ctx, output.as_ref(), &format_complex(&k))?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(ctx: &mut Ctx, args: VerifyArgs) -> Result<i32> {
    if args.list {
        let infos = suites::suite_infos();
        let mut text = String::new();
        for i in &infos {
            let aliases = if i.aliases.is_empty() { String::new() } else { format!(" ({})", i.aliases.join(", ")) };
            text.push_str(&format!("{}{aliases}: {}\n", i.name, i.summary));
        }
        ctx.emit(serde_json::to_value(&infos)?, &text)?;
        return Ok(EXIT_OK);
    }
    let report = match (&args.replay, &args.suite) {
        (Some(path), _) => suites::replay_file(path)?,
        (None, None) => return Err(Error::precondition("verify needs a suite name, --replay or --list")),
        (None, Some(name)) => {
            let opts = SuiteOptions {
                seed: ctx.seed,
                trials: ctx.trials,
                t: args.t,
                d: args.d,
                n: args.n,
                force: ctx.force,
                dump_dir: (!args.no_dump).then(|| args.dump_dir.clone()),
            };
            suites::run_suite(name, &opts)?
        }
    };
    ctx.emit(serde_json::to_value(&report)?, &report.to_text())?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("tolcx").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "no-such-suite"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bounds", "h", "-1", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bounds", "eta", "3", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn bounds_commands() {
        let (code, out, _) = run_args(&["bounds", "h", "1", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "h(1,2) = 8\n");
        let (_, out, _) = run_args(&["--json", "bounds", "eta", "3", "2"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["eta"], "6");
        let (code, out, _) = run_args(&["bounds", "eta", "2", "2", "--brute", "6"]);
        assert_eq!(code, 0);
        assert!(out.contains("= 4"));
    }

    #[test]
    fn help_and_list_succeed() {
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
        let (code, out, _) = run_args(&["verify", "--list"]);
        assert_eq!(code, 0);
        assert!(out.contains("tolerance-leray (thm1.5)"));
    }
}
