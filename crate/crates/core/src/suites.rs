//! Randomized verification suites.
//!
//! A suite draws instances from a seeded generator, checks one statement on
//! each and aggregates the outcomes. Trial `i` uses its own ChaCha stream,
//! so reports are byte-identical for a fixed `(suite, params, seed)` no
//! matter how rayon schedules the trials. A failing instance can be dumped
//! to a text file and replayed on its own.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{eta_bruteforce, eta_closed, tuza_upper, HFunctionTable};
use crate::collapse::{collapsibility_number, is_d_collapsible};
use crate::colorful::{
    missing_transversal, verify_topological_colorful_helly, verify_tolerant_colorful, ColorfulMode, PartitionMatroid,
};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::format::{format_complex_with_params, format_set_list, parse_set_list};
use crate::geometry::{
    common_point_with_tolerance_among, nerve_of_boxes, random_boxes_with, random_complex_with, two_block_complex, AxisBox,
    BoxFamily,
};
use crate::homology::{betti_numbers, nerve, relative_betti, relative_betti_of, verify_shift_isomorphism, BettiVector};
use crate::leray::leray_number;
use crate::tolerance::{
    free_extension, lemma41_decomposition, prop43_components, prop43_union, shifted_pairs, tolerance_complex,
};
use crate::vertex_set::{Face, VertexSet};

/// Draws per instance before a trial gives up on its premise filter.
const MAX_ATTEMPTS: usize = 200_000;

// ---------------------------------------------------------------------------
// configuration

/// Bounds on the vertex-count parameter `--n` of a suite.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct VertexRail {
    pub default: usize,
    pub min: usize,
    pub max: usize,
}

/// Per-suite defaults and caps. `None` means the suite takes no such
/// parameter. `--force` lifts the caps (not the 64-vertex hard limit).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GuardRails {
    pub trials: usize,
    pub vertices: Option<VertexRail>,
    pub max_t: Option<usize>,
    pub max_d: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: Option<usize>,
    pub t: Option<usize>,
    pub d: Option<usize>,
    /// Largest vertex (or member) count drawn.
    pub n: Option<usize>,
    pub force: bool,
    /// Where failing instances are written; nothing is written when `None`.
    pub dump_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug)]
struct Ctx {
    t: Option<usize>,
    d: Option<usize>,
    n: usize,
}

type Observations = Vec<(&'static str, u64)>;
type Generate = fn(&mut ChaCha8Rng, &Ctx, usize, &mut usize) -> std::result::Result<Instance, String>;
type Check = fn(&Instance) -> std::result::Result<Observations, String>;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    pub rails: GuardRails,
}

struct Suite {
    info: SuiteInfo,
    generate: Generate,
    check: Check,
}

// ---------------------------------------------------------------------------
// instances

/// Everything a check needs, in a form that survives a round trip through
/// a dump file.
#[derive(Clone, Debug, Default)]
pub struct Instance {
    /// Named complexes; the first one is the primary complex of the dump.
    pub complexes: Vec<(String, SimplicialComplex)>,
    pub boxes: Option<BoxFamily>,
    pub params: Vec<(String, String)>,
}

fn fmt_set(s: VertexSet) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn parse_set(s: &str) -> std::result::Result<VertexSet, String> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    let ids = s
        .split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| format!("bad vertex id `{tok}`")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    VertexSet::try_from_vertices(ids).map_err(|e| e.to_string())
}

/// `name ambient | face; face; …`, with `-` for an empty set.
fn encode_complex(name: &str, k: &SimplicialComplex) -> String {
    let faces: Vec<String> = k.maximal_faces().iter().map(|f| fmt_set(*f)).collect();
    format!("{name} {} | {}", fmt_set(k.ambient()), faces.join("; "))
}

fn decode_complex(text: &str) -> std::result::Result<(String, SimplicialComplex), String> {
    let (head, faces) = text.split_once('|').ok_or("complex entry lacks `|`")?;
    let head = head.trim();
    let (name, ambient) = head.split_once(char::is_whitespace).unwrap_or((head, "-"));
    let ambient = parse_set(ambient)?;
    let faces = faces
        .split(';')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(parse_set)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let k = SimplicialComplex::from_maximal_faces(faces, ambient).map_err(|e| e.to_string())?;
    Ok((name.to_string(), k))
}

fn encode_classes(classes: &[VertexSet]) -> String {
    classes.iter().map(|c| fmt_set(*c)).collect::<Vec<_>>().join(" | ")
}

fn decode_classes(text: &str) -> std::result::Result<Vec<VertexSet>, String> {
    text.split('|').map(parse_set).collect()
}

impl Instance {
    fn with_complex(mut self, name: &str, k: SimplicialComplex) -> Self {
        self.complexes.push((name.to_string(), k));
        self
    }

    fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    fn with_boxes(mut self, boxes: BoxFamily) -> Self {
        self.boxes = Some(boxes);
        self
    }

    pub fn complex(&self, name: &str) -> std::result::Result<&SimplicialComplex, String> {
        self.complexes.iter().find(|(n, _)| n == name).map(|(_, k)| k).ok_or_else(|| format!("instance has no complex `{name}`"))
    }

    /// All complexes whose name starts with `prefix`, in instance order.
    fn complexes_with_prefix(&self, prefix: &str) -> Vec<&SimplicialComplex> {
        self.complexes.iter().filter(|(n, _)| n.starts_with(prefix)).map(|(_, k)| k).collect()
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn required(&self, key: &str) -> std::result::Result<&str, String> {
        self.param(key).ok_or_else(|| format!("instance has no parameter `{key}`"))
    }

    fn usize_param(&self, key: &str) -> std::result::Result<usize, String> {
        self.required(key)?.parse().map_err(|_| format!("parameter `{key}` is not a non-negative integer"))
    }

    fn opt_usize_param(&self, key: &str) -> std::result::Result<Option<usize>, String> {
        self.param(key).map(|v| v.parse().map_err(|_| format!("parameter `{key}` is not a non-negative integer"))).transpose()
    }

    fn set_param(&self, key: &str) -> std::result::Result<VertexSet, String> {
        parse_set(self.required(key)?)
    }

    fn list_param(&self, key: &str) -> std::result::Result<Vec<usize>, String> {
        self.required(key)?
            .split_whitespace()
            .map(|v| v.parse().map_err(|_| format!("parameter `{key}` must list integers")))
            .collect()
    }

    fn boxes(&self) -> std::result::Result<&BoxFamily, String> {
        self.boxes.as_ref().ok_or_else(|| "instance has no boxes".to_string())
    }

    fn dump_params(&self, suite: &str, seed: u64, trial: usize) -> Vec<(String, String)> {
        let mut params = vec![
            ("suite".to_string(), suite.to_string()),
            ("seed".to_string(), seed.to_string()),
            ("trial".to_string(), trial.to_string()),
        ];
        params.extend(self.params.iter().cloned());
        params.extend(self.complexes.iter().map(|(n, k)| ("complex".to_string(), encode_complex(n, k))));
        params
    }

    /// Text of a dump file and its extension (`boxes` or `scx`).
    ///
    /// `.scx` dumps carry the primary complex as their body, so they can be
    /// fed to `analyze` as well.
    pub fn dump_text(&self, suite: &str, seed: u64, trial: usize) -> (String, &'static str) {
        let params = self.dump_params(suite, seed, trial);
        match (&self.boxes, self.complexes.first()) {
            (Some(b), _) => (b.format_with_params(&params), "boxes"),
            (None, Some((_, k))) => (format_complex_with_params(k, &params), "scx"),
            (None, None) => (format_set_list(&[], VertexSet::EMPTY, &params), "scx"),
        }
    }

    /// Inverse of [`Instance::dump_text`]: the suite name, seed, trial and
    /// instance.
    pub fn parse_dump(text: &str, is_boxes: bool) -> Result<(String, u64, usize, Instance)> {
        let (params, boxes) = if is_boxes {
            let (family, params) = BoxFamily::parse(text)?;
            (params, Some(family))
        } else {
            (parse_set_list(text)?.params, None)
        };
        let mut inst = Instance { boxes, ..Instance::default() };
        let (mut suite, mut seed, mut trial) = (None, 0, 0);
        for (key, value) in params {
            match key.as_str() {
                "suite" => suite = Some(value),
                "seed" => seed = value.parse().map_err(|_| Error::precondition("dump has a malformed seed"))?,
                "trial" => trial = value.parse().map_err(|_| Error::precondition("dump has a malformed trial index"))?,
                "complex" => inst.complexes.push(decode_complex(&value).map_err(Error::Precondition)?),
                _ => inst.params.push((key, value)),
            }
        }
        let suite = suite.ok_or_else(|| Error::precondition("dump does not name its suite (`# @suite <name>`)"))?;
        Ok((suite, seed, trial, inst))
    }
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ObservationSummary {
    pub name: String,
    pub max: u64,
    pub total: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FailureRecord {
    pub trial: usize,
    pub message: String,
    pub dump: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub t: Option<usize>,
    pub d: Option<usize>,
    pub max_vertices: Option<usize>,
    pub passed: usize,
    pub failed: usize,
    /// Draws discarded by premise filters, summed over trials.
    pub rejected_draws: usize,
    pub observations: Vec<ObservationSummary>,
    pub failures: Vec<FailureRecord>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn observation(&self, name: &str) -> Option<&ObservationSummary> {
        self.observations.iter().find(|o| o.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head = format!("suite {} (seed {}, {} trials", self.suite, self.seed, self.trials);
        if let Some(n) = self.max_vertices {
            let _ = write!(head, ", n <= {n}");
        }
        if let Some(t) = self.t {
            let _ = write!(head, ", t = {t}");
        }
        if let Some(d) = self.d {
            let _ = write!(head, ", d = {d}");
        }
        let _ = writeln!(out, "{head})");
        let _ = writeln!(out, "passed {}, failed {}, rejected draws {}", self.passed, self.failed, self.rejected_draws);
        for o in &self.observations {
            let _ = writeln!(out, "  {}: max {}, total {}", o.name, o.max, o.total);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        for f in &self.failures {
            let _ = match &f.dump {
                Some(p) => writeln!(out, "FAIL trial {}: {} (dumped to {p})", f.trial, f.message),
                None => writeln!(out, "FAIL trial {}: {}", f.trial, f.message),
            };
        }
        let _ = writeln!(out, "result: {}", if self.all_passed() { "PASS" } else { "FAIL" });
        out
    }
}

enum Outcome {
    Pass(Observations),
    Fail(String, Option<Instance>),
}

fn aggregate(outcomes: &[(Outcome, usize)]) -> (Vec<ObservationSummary>, usize) {
    let mut agg: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    let mut rejected = 0;
    for (o, r) in outcomes {
        rejected += r;
        if let Outcome::Pass(obs) = o {
            for &(name, v) in obs {
                let e = agg.entry(name).or_insert((0, 0));
                e.0 = e.0.max(v);
                e.1 += v;
            }
        }
    }
    let summaries = agg.into_iter().map(|(name, (max, total))| ObservationSummary { name: name.to_string(), max, total }).collect();
    (summaries, rejected)
}

fn notes_for(observations: &[ObservationSummary]) -> Vec<String> {
    let mut notes = Vec::new();
    if let Some(o) = observations.iter().find(|o| o.name == "conjectural_bound_exceeded") {
        if o.total > 0 {
            notes.push(format!("conjectural eta bound exceeded on {} trials (a counterexample to the conjecture)", o.total));
        } else {
            notes.push("conjectural eta bound never exceeded".to_string());
        }
    }
    notes
}

// ---------------------------------------------------------------------------
// running

pub fn suite_infos() -> Vec<SuiteInfo> {
    SUITES.iter().map(|s| s.info).collect()
}

fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.info.name == name || s.info.aliases.contains(&name))
}

/// Canonical name of a suite or alias.
pub fn canonical_name(name: &str) -> Option<&'static str> {
    find(name).map(|s| s.info.name)
}

fn resolve_ctx(suite: &Suite, opts: &SuiteOptions) -> Result<Ctx> {
    let rails = suite.info.rails;
    let name = suite.info.name;
    let cap = |what: &str, value: usize, max: Option<usize>| -> Result<()> {
        match max {
            None => Err(Error::precondition(format!("suite {name} takes no --{what}"))),
            Some(m) if value > m && !opts.force => {
                Err(Error::Refused(format!("--{what} {value} exceeds the cap {m} of suite {name} (use --force)")))
            }
            Some(_) => Ok(()),
        }
    };
    if let Some(t) = opts.t {
        cap("t", t, rails.max_t)?;
    }
    if let Some(d) = opts.d {
        cap("d", d, rails.max_d)?;
    }
    let n = match (opts.n, rails.vertices) {
        (Some(_), None) => return Err(Error::precondition(format!("suite {name} takes no --n"))),
        (None, None) => 0,
        (None, Some(r)) => r.default,
        (Some(n), Some(r)) => {
            if n < r.min {
                return Err(Error::precondition(format!("--n {n} is below the minimum {} of suite {name}", r.min)));
            }
            if n > r.max && !opts.force {
                return Err(Error::Refused(format!("--n {n} exceeds the cap {} of suite {name} (use --force)", r.max)));
            }
            if n > 16 {
                return Err(Error::Refused(format!("--n {n} is beyond what exhaustive checks can handle (16)")));
            }
            n
        }
    };
    Ok(Ctx { t: opts.t, d: opts.d, n })
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn run_one(suite: &Suite, ctx: &Ctx, seed: u64, trial: usize) -> (Outcome, usize) {
    let mut rng = trial_rng(seed, trial);
    let mut rejected = 0;
    let outcome = match (suite.generate)(&mut rng, ctx, trial, &mut rejected) {
        Err(msg) => Outcome::Fail(format!("generation failed: {msg}"), None),
        Ok(inst) => match (suite.check)(&inst) {
            Ok(obs) => Outcome::Pass(obs),
            Err(msg) => Outcome::Fail(msg, Some(inst)),
        },
    };
    (outcome, rejected)
}

fn write_dump(dir: &Path, suite: &str, seed: u64, trial: usize, inst: &Instance) -> Result<String> {
    let (text, ext) = inst.dump_text(suite, seed, trial);
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{suite}-seed{seed}-trial{trial}.{ext}"));
    std::fs::write(&path, text)?;
    Ok(path.display().to_string())
}

/// Runs a suite by name or alias. Unknown suites and out-of-range
/// parameters are errors; failing trials are not.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let suite = find(name).ok_or_else(|| Error::precondition(format!("unknown suite `{name}`")))?;
    let ctx = resolve_ctx(suite, opts)?;
    let trials = opts.trials.unwrap_or(suite.info.rails.trials);
    if trials == 0 {
        return Err(Error::precondition("--trials must be positive"));
    }
    let outcomes: Vec<(Outcome, usize)> = (0..trials).into_par_iter().map(|i| run_one(suite, &ctx, opts.seed, i)).collect();
    let (observations, rejected_draws) = aggregate(&outcomes);
    let mut failures = Vec::new();
    for (trial, (o, _)) in outcomes.iter().enumerate() {
        if let Outcome::Fail(message, inst) = o {
            let dump = match (inst, &opts.dump_dir) {
                (Some(inst), Some(dir)) => Some(write_dump(dir, suite.info.name, opts.seed, trial, inst)?),
                _ => None,
            };
            failures.push(FailureRecord { trial, message: message.clone(), dump });
        }
    }
    let mut notes = notes_for(&observations);
    if opts.d == Some(0) && matches!(suite.info.name, "tolerance-leray" | "colorful-tolerant") {
        notes.push("d = 0: the bound h(t,0) = 0 fails when more than t vertices of V lie outside the only maximal face; failures here are expected".to_string());
    }
    Ok(SuiteReport {
        suite: suite.info.name.to_string(),
        seed: opts.seed,
        trials,
        t: opts.t,
        d: opts.d,
        max_vertices: suite.info.rails.vertices.map(|_| ctx.n),
        passed: trials - failures.len(),
        failed: failures.len(),
        rejected_draws,
        observations,
        failures,
        notes,
    })
}

/// Re-runs the check on a dumped instance.
pub fn replay_text(text: &str, is_boxes: bool) -> Result<SuiteReport> {
    let (name, seed, trial, inst) = Instance::parse_dump(text, is_boxes)?;
    replay_instance(&name, seed, trial, &inst)
}

pub fn replay_file(path: impl AsRef<Path>) -> Result<SuiteReport> {
    let path = path.as_ref();
    let is_boxes = path.extension().is_some_and(|e| e == "boxes");
    replay_text(&std::fs::read_to_string(path)?, is_boxes)
}

pub fn replay_instance(name: &str, seed: u64, trial: usize, inst: &Instance) -> Result<SuiteReport> {
    let suite = find(name).ok_or_else(|| Error::precondition(format!("unknown suite `{name}`")))?;
    let outcome = match (suite.check)(inst) {
        Ok(obs) => Outcome::Pass(obs),
        Err(msg) => Outcome::Fail(msg, None),
    };
    let outcomes = [(outcome, 0)];
    let (observations, _) = aggregate(&outcomes);
    let failures: Vec<FailureRecord> = match &outcomes[0].0 {
        Outcome::Fail(message, _) => vec![FailureRecord { trial, message: message.clone(), dump: None }],
        Outcome::Pass(_) => vec![],
    };
    Ok(SuiteReport {
        suite: suite.info.name.to_string(),
        seed,
        trials: 1,
        t: None,
        d: None,
        max_vertices: None,
        passed: 1 - failures.len(),
        failed: failures.len(),
        rejected_draws: 0,
        notes: notes_for(&observations),
        observations,
        failures,
    })
}

// ---------------------------------------------------------------------------
// generation helpers

fn retry<T>(
    rng: &mut ChaCha8Rng,
    rejected: &mut usize,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Option<T>,
) -> std::result::Result<T, String> {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(x) = draw(rng) {
            return Ok(x);
        }
        *rejected += 1;
    }
    Err(format!("no instance met the premise in {MAX_ATTEMPTS} draws"))
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Random complex on `{0, …, n-1}` with `n` drawn from `lo..=hi`.
fn draw_complex(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> SimplicialComplex {
    let n = rng.gen_range(lo..=hi.max(lo));
    let density = rng.gen_range(0.3..0.75);
    random_complex_with(rng, n, density)
}

/// Random complex on vertex set `targets`, viewed on `ambient`.
fn draw_complex_on(rng: &mut ChaCha8Rng, targets: VertexSet, ambient: VertexSet) -> SimplicialComplex {
    let density = rng.gen_range(0.3..0.75);
    let k = random_complex_with(rng, targets.len(), density);
    embed(&k, targets, ambient)
}

/// Relabels vertex `i` as the `i`-th element of `targets`.
fn embed(k: &SimplicialComplex, targets: VertexSet, ambient: VertexSet) -> SimplicialComplex {
    let map = targets.to_vec();
    let gens = k.maximal_faces().iter().map(|f| f.iter().map(|i| map[i]).collect()).collect();
    SimplicialComplex::from_generators(gens, ambient)
}

fn choose_subset(rng: &mut ChaCha8Rng, of: VertexSet, k: usize) -> VertexSet {
    let mut v = of.to_vec();
    v.shuffle(rng);
    v.into_iter().take(k).collect()
}

fn nonempty_faces(k: &SimplicialComplex) -> Vec<Face> {
    k.faces().filter(|f| !f.is_empty()).collect()
}

/// Random partition of a random subset of `{0, …, n-1}` into `m` nonempty
/// classes, some vertices left uncolored.
fn draw_classes(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Option<Vec<VertexSet>> {
    let mut classes = vec![VertexSet::EMPTY; m];
    for v in 0..n {
        if rng.gen_bool(0.85) {
            let c = rng.gen_range(0..m);
            classes[c] = classes[c].with(v);
        }
    }
    classes.iter().all(|c| !c.is_empty()).then_some(classes)
}

fn box_in_range(rng: &mut ChaCha8Rng, dims: usize, lo_max: i64, width: std::ops::RangeInclusive<i64>) -> AxisBox {
    let corners: Vec<(i64, i64)> = (0..dims)
        .map(|_| {
            let lo = rng.gen_range(0..=lo_max);
            (lo, lo + rng.gen_range(width.clone()))
        })
        .collect();
    AxisBox::from_ints(&corners).expect("lo <= hi by construction")
}

/// Complexes `K` on `V` with an oracle check that `sigma` is in `T_t(K)`:
/// some face of `K` inside `sigma` misses at most `t` of its vertices.
fn in_tolerance_def(k: &SimplicialComplex, t: usize, sigma: VertexSet) -> bool {
    sigma.subsets().any(|eta| sigma.len() - eta.len() <= t && k.contains(eta))
}

/// `{σ : every subset of σ of size at most d + 1 lies in K}`.
fn d_closure(k: &SimplicialComplex, d: usize) -> SimplicialComplex {
    let gens: Vec<Face> = k
        .ambient()
        .subsets()
        .filter(|s| {
            let size = s.len().min(d + 1);
            s.subsets_of_size(size).all(|f| k.contains(f))
        })
        .collect();
    SimplicialComplex::from_generators(gens, k.ambient())
}

// ---------------------------------------------------------------------------
// check helpers

fn betti(k: &SimplicialComplex) -> std::result::Result<BettiVector, String> {
    lib(betti_numbers(k))
}

/// Exactness consequences for `0 → a_0 → a_1 → … → a_m → 0` given by
/// dimensions only: each term is at most the sum of its neighbours and the
/// alternating sum vanishes.
fn check_exact_dimensions(terms: &[usize]) -> std::result::Result<(), String> {
    let at = |i: isize| if i < 0 || i as usize >= terms.len() { 0 } else { terms[i as usize] };
    for i in 0..terms.len() as isize {
        if at(i) > at(i - 1) + at(i + 1) {
            return Err(format!("term {i} of the sequence {terms:?} exceeds the sum of its neighbours"));
        }
    }
    let alt: i64 = terms.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
    if alt != 0 {
        return Err(format!("alternating sum of {terms:?} is {alt}"));
    }
    Ok(())
}

/// Terms `… a_k, b_k, c_k, a_{k-1}, … c_{-1}` of a long exact sequence
/// `… → A_k → B_k → C_k → A_{k-1} → …`.
fn long_sequence(a: &BettiVector, b: &BettiVector, c: &BettiVector) -> Vec<usize> {
    let top = a.max_dim().max(b.max_dim()).max(c.max_dim());
    (-1..=top).rev().flat_map(|k| [a.get(k), b.get(k), c.get(k)]).collect()
}

fn union_all(parts: &[&SimplicialComplex]) -> std::result::Result<SimplicialComplex, String> {
    let (first, rest) = parts.split_first().ok_or("empty family")?;
    rest.iter().try_fold((*first).clone(), |acc, k| lib(acc.union(k)))
}

fn intersection_all(parts: &[&SimplicialComplex]) -> std::result::Result<SimplicialComplex, String> {
    let (first, rest) = parts.split_first().ok_or("empty family")?;
    rest.iter().try_fold((*first).clone(), |acc, k| lib(acc.intersection(k)))
}

fn matroid(inst: &Instance, ambient: VertexSet) -> std::result::Result<PartitionMatroid, String> {
    lib(PartitionMatroid::new(decode_classes(inst.required("classes")?)?, ambient))
}

// ---------------------------------------------------------------------------
// suites

fn gen_two_blocks(_: &mut ChaCha8Rng, ctx: &Ctx, trial: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let t = ctx.t.unwrap_or(trial % 3 + 1);
    Ok(Instance::default().with_complex("K", lib(two_block_complex(t))?).with_param("t", t))
}

fn check_two_blocks(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let t = inst.usize_param("t")?;
    let c = collapsibility_number(k);
    if c != 1 {
        return Err(format!("C(K) = {c}, expected 1"));
    }
    let tk = tolerance_complex(k, t);
    let sphere = SimplicialComplex::simplex_boundary(VertexSet::range(2 * t + 2));
    let mut got: Vec<Face> = tk.faces().collect();
    let mut want: Vec<Face> = sphere.faces().collect();
    got.sort_unstable();
    want.sort_unstable();
    if got != want {
        return Err(format!("T_{t}(K) is not the boundary of the {}-simplex", 2 * t + 1));
    }
    // membership oracle on every subset
    if let Some(s) = VertexSet::range(2 * t + 2).subsets().find(|s| in_tolerance_def(k, t, *s) != tk.contains(*s)) {
        return Err(format!("membership of {s} in T_{t}(K) disagrees with the definition"));
    }
    let l = leray_number(&tk);
    let h = lib(HFunctionTable::new().get(t, 1))?;
    if l as u128 != 2 * t as u128 + 1 || h != 2 * t as u128 + 1 {
        return Err(format!("L(T_{t}(K)) = {l}, h({t},1) = {h}, expected both {}", 2 * t + 1));
    }
    Ok(vec![("leray_number", l as u64)])
}

fn tolerance_list(ctx: &Ctx) -> String {
    ctx.t.map_or("1 2".to_string(), |t| t.to_string())
}

fn gen_tolerance_leray(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    let k = retry(rng, rejected, |rng| {
        let k = draw_complex(rng, 3, ctx.n);
        ctx.d.is_none_or(|d| is_d_collapsible(&k, d)).then_some(k)
    })?;
    let mut inst = Instance::default().with_complex("K", k).with_param("t", tolerance_list(ctx));
    if let Some(d) = ctx.d {
        inst = inst.with_param("d", d);
    }
    Ok(inst)
}

/// `d` from the instance, or `max(C(K), 1)`, plus a premise check.
fn collapsibility_degree(inst: &Instance, k: &SimplicialComplex) -> std::result::Result<(usize, usize), String> {
    let c = collapsibility_number(k);
    let d = inst.opt_usize_param("d")?.unwrap_or(c.max(1));
    if c > d {
        return Err(format!("premise fails: C(K) = {c} > d = {d}"));
    }
    Ok((c, d))
}

fn check_tolerance_leray(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let (c, d) = collapsibility_degree(inst, k)?;
    let mut table = HFunctionTable::new();
    let mut obs = vec![("collapsibility", c as u64)];
    let mut exceeded = 0;
    for t in inst.list_param("t")? {
        let l = leray_number(&tolerance_complex(k, t));
        let h = lib(table.get(t, d))?;
        if l as u128 > h {
            return Err(format!("L(T_{t}(K)) = {l} exceeds h({t},{d}) = {h}"));
        }
        if let Some(eta) = eta_closed(d + 1, t + 1) {
            if l as u128 > eta - 1 {
                exceeded = 1;
            }
        }
        obs.push(("leray_of_tolerance", l as u64));
        obs.push(("slack", (h - l as u128).min(u64::MAX as u128) as u64));
    }
    obs.push(("conjectural_bound_exceeded", exceeded));
    Ok(obs)
}

fn gen_d2t1(rng: &mut ChaCha8Rng, ctx: &Ctx, trial: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    if trial % 2 == 0 {
        let k = retry(rng, rejected, |rng| {
            let k = draw_complex(rng, 3, ctx.n);
            is_d_collapsible(&k, 2).then_some(k)
        })?;
        Ok(Instance::default().with_complex("K", k).with_param("source", "random"))
    } else {
        let count = rng.gen_range(3..=ctx.n);
        let boxes = lib(random_boxes_with(rng, 2, count, 10))?;
        Ok(Instance::default().with_complex("K", nerve_of_boxes(&boxes)).with_param("source", "planar-boxes").with_boxes(boxes))
    }
}

fn check_d2t1(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    if let Some(b) = &inst.boxes {
        if nerve_of_boxes(b) != *k {
            return Err("stored complex is not the nerve of the stored boxes".to_string());
        }
    }
    let c = collapsibility_number(k);
    if c > 2 {
        return Err(format!("C(K) = {c} > 2"));
    }
    let l = leray_number(&tolerance_complex(k, 1));
    if l > 5 {
        return Err(format!("L(T_1(K)) = {l} > 5"));
    }
    Ok(vec![("collapsibility", c as u64), ("leray_of_tolerance", l as u64)])
}

fn draw_tolerance(rng: &mut ChaCha8Rng, ctx: &Ctx) -> usize {
    ctx.t.unwrap_or_else(|| rng.gen_range(1..=2))
}

fn gen_decomposition(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    let (k, sigma) = retry(rng, rejected, |rng| {
        let k = draw_complex(rng, 2, ctx.n);
        let faces = nonempty_faces(&k);
        let sigma = *faces.choose(rng)?;
        Some((k, sigma))
    })?;
    let t = draw_tolerance(rng, ctx);
    Ok(Instance::default().with_complex("K", k).with_param("t", t).with_param("sigma", fmt_set(sigma)))
}

fn check_decomposition(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let t = inst.usize_param("t")?;
    let sigma = inst.set_param("sigma")?;
    let (left, right) = lib(lemma41_decomposition(k, t, sigma))?;

    // both sides again, straight from the definitions
    let v = k.ambient();
    let cost = k.costar(sigma);
    let left_oracle: Vec<Face> = v.subsets().filter(|&s| in_tolerance_def(k, t, s) && !in_tolerance_def(&cost, t, s)).collect();
    let rest = v.difference(sigma);
    let link = lib(k.link(sigma))?;
    let mut right_oracle: Vec<Face> = rest
        .subsets()
        .filter(|&eta| {
            if !in_tolerance_def(&link, t, eta) {
                return false;
            }
            // η must avoid every T_{t-|σ'|}(lk(K[V∖σ'], σ∖σ'))
            !sigma.subsets().filter(|s| !s.is_empty() && s.len() <= t).any(|sub| {
                let part = k.induced(v.difference(sub));
                let core = sigma.difference(sub);
                // η ∪ core ∈ T_{t-|sub|}(K[V∖sub]) with the core kept whole
                eta.subsets().any(|e| eta.len() - e.len() <= t - sub.len() && part.contains(e.union(core)))
            })
        })
        .map(|eta| eta.union(sigma))
        .collect();
    let mut left_sorted = left_oracle.clone();
    left_sorted.sort_unstable();
    right_oracle.sort_unstable();
    if left != left_sorted {
        return Err(format!("left side differs from its definition ({} vs {} faces)", left.len(), left_sorted.len()));
    }
    if right != right_oracle {
        return Err(format!("right side differs from its definition ({} vs {} faces)", right.len(), right_oracle.len()));
    }
    if left_sorted != right_oracle {
        return Err(format!("the two sides differ ({} vs {} faces)", left_sorted.len(), right_oracle.len()));
    }
    Ok(vec![("faces", left.len() as u64)])
}

fn gen_relative(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    let (k, sigma) = retry(rng, rejected, |rng| {
        let k = draw_complex(rng, 3, ctx.n);
        let free: Vec<Face> = nonempty_faces(&k).into_iter().filter(|&s| free_extension(&k, s).is_ok()).collect();
        let sigma = *free.choose(rng)?;
        Some((k, sigma))
    })?;
    let t = draw_tolerance(rng, ctx);
    Ok(Instance::default().with_complex("K", k).with_param("t", t).with_param("sigma", fmt_set(sigma)))
}

fn check_relative(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let t = inst.usize_param("t")?;
    let sigma = inst.set_param("sigma")?;
    let s = sigma.len() as isize;
    let (upper, lower) = lib(shifted_pairs(k, t, sigma))?;
    let bu = relative_betti(&upper);
    let bl = relative_betti(&lower);
    if bu != bl.shifted(s) {
        return Err(format!("relative betti {bu:?} is not {bl:?} shifted by {s}"));
    }
    if !lib(verify_shift_isomorphism(upper.x(), upper.y(), lower.x(), lower.y(), sigma))? {
        return Err("the shift map is not a chain isomorphism".to_string());
    }
    let comps = lib(prop43_components(k, t, sigma))?;
    let pieces = comps.iter().map(|(_, y)| betti(y)).collect::<std::result::Result<Vec<_>, _>>()?;
    let sum = BettiVector::sum(&pieces).shifted(s + 1);
    if bu != sum {
        return Err(format!("relative betti {bu:?} differs from the shifted direct sum {sum:?}"));
    }
    Ok(vec![("components", comps.len() as u64), ("nonzero_relative_homology", u64::from(!bu.is_zero()))])
}

fn gen_chain_shift(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let n = rng.gen_range(3..=ctx.n);
    let v = VertexSet::range(n);
    let sigma = { let size = rng.gen_range(1..=3.min(n - 1)); choose_subset(rng, v, size) };
    let rest = v.difference(sigma);
    let z = draw_complex_on(rng, rest, rest);
    let w = if rng.gen_bool(0.2) {
        SimplicialComplex::void(rest)
    } else {
        lib(z.intersection(&draw_complex_on(rng, rest, rest)))?
    };
    let ball = SimplicialComplex::simplex(sigma);
    let sphere = SimplicialComplex::simplex_boundary(sigma);
    let mut x = lib(ball.join(&z))?;
    let mut y = lib(lib(sphere.join(&z))?.union(&lib(ball.join(&w))?))?;
    if rng.gen_bool(0.5) {
        let extra = draw_complex_on(rng, v, v).costar(sigma);
        x = lib(x.union(&extra))?;
        y = lib(y.union(&extra))?;
    }
    Ok(Instance::default()
        .with_complex("X", x)
        .with_complex("Y", y)
        .with_complex("Z", z)
        .with_complex("W", w)
        .with_param("sigma", fmt_set(sigma)))
}

fn check_chain_shift(inst: &Instance) -> std::result::Result<Observations, String> {
    let (x, y, z, w) = (inst.complex("X")?, inst.complex("Y")?, inst.complex("Z")?, inst.complex("W")?);
    let sigma = inst.set_param("sigma")?;
    if !lib(verify_shift_isomorphism(x, y, z, w, sigma))? {
        return Err("the shift map is not a chain isomorphism".to_string());
    }
    let upper = lib(relative_betti_of(x, y))?;
    let lower = lib(relative_betti_of(z, w))?;
    if upper != lower.shifted(sigma.len() as isize) {
        return Err(format!("H(X,Y) = {upper:?} is not H(Z,W) = {lower:?} shifted by {}", sigma.len()));
    }
    Ok(vec![("nonzero_relative_homology", u64::from(!upper.is_zero()))])
}

fn gen_direct_sum(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let core_size = rng.gen_range(1..=2);
    let m = rng.gen_range(2..=4usize.min(ctx.n - core_size));
    let budget = ctx.n - core_size;
    let mut sizes = vec![1; m];
    for _ in m..budget {
        let i = rng.gen_range(0..m);
        if sizes[i] < 3 && rng.gen_bool(0.6) {
            sizes[i] += 1;
        }
    }
    let total = core_size + sizes.iter().sum::<usize>();
    let v = VertexSet::range(total);
    let core = VertexSet::range(core_size);
    let mut inst = Instance::default();
    let mut next = core_size;
    for (i, size) in sizes.into_iter().enumerate() {
        let own = VertexSet::range(next + size).difference(VertexSet::range(next));
        next += size;
        let part = draw_complex_on(rng, core.union(own), v);
        let xi = lib(part.union(&SimplicialComplex::simplex(core).with_ambient(v).map_err(|e| e.to_string())?))?;
        inst = inst.with_complex(&format!("X{i}"), xi);
    }
    Ok(inst)
}

fn check_direct_sum(inst: &Instance) -> std::result::Result<Observations, String> {
    let family = inst.complexes_with_prefix("X");
    let m = family.len();
    for mask in VertexSet::range(m).subsets().filter(|s| s.len() >= 2) {
        let parts: Vec<&SimplicialComplex> = mask.iter().map(|i| family[i]).collect();
        let meet = intersection_all(&parts)?;
        if !betti(&meet)?.is_zero() {
            return Err(format!("premise fails: intersection over {mask} is not acyclic"));
        }
    }
    let whole = betti(&union_all(&family)?)?;
    let pieces = family.iter().map(|k| betti(k)).collect::<std::result::Result<Vec<_>, _>>()?;
    let sum = BettiVector::sum(&pieces);
    if whole != sum {
        return Err(format!("betti of the union {whole:?} differs from the direct sum {sum:?}"));
    }
    Ok(vec![("members", m as u64), ("total_betti", whole.values().iter().sum::<usize>() as u64)])
}

/// Every intersection over a nonempty index set is `{∅}` or acyclic.
fn nerve_premise(family: &[&SimplicialComplex]) -> std::result::Result<Option<VertexSet>, String> {
    for mask in VertexSet::range(family.len()).subsets().filter(|s| !s.is_empty()) {
        let parts: Vec<&SimplicialComplex> = mask.iter().map(|i| family[i]).collect();
        let meet = intersection_all(&parts)?;
        if !meet.is_empty_complex() && !betti(&meet)?.is_zero() {
            return Ok(Some(mask));
        }
    }
    Ok(None)
}

fn gen_nerve(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    retry(rng, rejected, |rng| {
        let n = rng.gen_range(3..=ctx.n);
        let v = VertexSet::range(n);
        let m = rng.gen_range(2..=5);
        let family: Vec<SimplicialComplex> = (0..m)
            .map(|_| {
                if rng.gen_bool(0.6) {
                    let size = rng.gen_range(1..=n);
                    SimplicialComplex::simplex(choose_subset(rng, v, size)).with_ambient(v).expect("subset of v")
                } else {
                    let base = draw_complex_on(rng, v, v);
                    let apex = rng.gen_range(0..n);
                    let base = base.costar(VertexSet::singleton(apex));
                    let cone = base.maximal_faces().iter().map(|f| f.with(apex)).collect();
                    SimplicialComplex::from_generators(cone, v)
                }
            })
            .collect();
        let refs: Vec<&SimplicialComplex> = family.iter().collect();
        match nerve_premise(&refs) {
            Ok(None) => {
                let mut inst = Instance::default();
                for (i, k) in family.into_iter().enumerate() {
                    inst = inst.with_complex(&format!("X{i}"), k);
                }
                Some(inst)
            }
            _ => None,
        }
    })
}

fn check_nerve(inst: &Instance) -> std::result::Result<Observations, String> {
    let family = inst.complexes_with_prefix("X");
    if let Some(mask) = nerve_premise(&family)? {
        return Err(format!("premise fails: intersection over {mask} is neither empty nor acyclic"));
    }
    let owned: Vec<SimplicialComplex> = family.iter().map(|k| (*k).clone()).collect();
    let n = lib(nerve(&owned))?;
    let bu = betti(&union_all(&family)?)?;
    let bn = betti(&n)?;
    if bu != bn {
        return Err(format!("betti of the union {bu:?} differs from that of the nerve {bn:?}"));
    }
    Ok(vec![("members", family.len() as u64), ("total_betti", bu.values().iter().sum::<usize>() as u64)])
}

fn gen_pair_of_complexes(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let n = rng.gen_range(2..=ctx.n);
    let v = VertexSet::range(n);
    let x = draw_complex_on(rng, v, v);
    let y = draw_complex_on(rng, v, v);
    Ok(Instance::default().with_complex("X", x).with_complex("Y", y))
}

fn check_mayer_vietoris(inst: &Instance) -> std::result::Result<Observations, String> {
    let (x, y) = (inst.complex("X")?, inst.complex("Y")?);
    let a = betti(&lib(x.intersection(y))?)?;
    let b = BettiVector::sum([&betti(x)?, &betti(y)?]);
    let c = betti(&lib(x.union(y))?)?;
    check_exact_dimensions(&long_sequence(&a, &b, &c))?;
    Ok(vec![("sequence_length", long_sequence(&a, &b, &c).len() as u64)])
}

fn gen_link_costar(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    let (k, v) = retry(rng, rejected, |rng| {
        let k = draw_complex(rng, 2, ctx.n);
        let verts = k.vertices().to_vec();
        let v = *verts.choose(rng)?;
        Some((k, v))
    })?;
    Ok(Instance::default().with_complex("K", k).with_param("v", v))
}

fn check_link_costar(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let v = VertexSet::singleton(inst.usize_param("v")?);
    let a = betti(&lib(k.link(v))?)?;
    let b = betti(&k.costar(v))?;
    let c = betti(k)?;
    let terms = long_sequence(&a, &b, &c);
    check_exact_dimensions(&terms)?;
    Ok(vec![("sequence_length", terms.len() as u64)])
}

fn gen_pair_sequence(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let n = rng.gen_range(2..=ctx.n);
    let v = VertexSet::range(n);
    let x = draw_complex_on(rng, v, v);
    let y = match rng.gen_range(0..3) {
        0 => lib(x.intersection(&draw_complex_on(rng, v, v)))?,
        1 => {
            let keep = { let size = rng.gen_range(0..=n); choose_subset(rng, v, size) };
            lib(x.induced(keep).with_ambient(v))?
        }
        _ => {
            let faces = nonempty_faces(&x);
            match faces.choose(rng) {
                Some(f) => x.costar(*f),
                None => x.clone(),
            }
        }
    };
    Ok(Instance::default().with_complex("X", x).with_complex("Y", y))
}

fn check_pair_sequence(inst: &Instance) -> std::result::Result<Observations, String> {
    let (x, y) = (inst.complex("X")?, inst.complex("Y")?);
    let a = betti(y)?;
    let b = betti(x)?;
    let c = lib(relative_betti_of(x, y))?;
    let terms = long_sequence(&a, &b, &c);
    check_exact_dimensions(&terms)?;
    Ok(vec![("sequence_length", terms.len() as u64)])
}

fn gen_union_bound(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let n = rng.gen_range(2..=ctx.n);
    let v = VertexSet::range(n);
    let r = rng.gen_range(2..=3);
    let mut inst = Instance::default();
    for i in 0..r {
        inst = inst.with_complex(&format!("X{i}"), draw_complex_on(rng, v, v));
    }
    Ok(inst)
}

fn check_union_bound(inst: &Instance) -> std::result::Result<Observations, String> {
    let family = inst.complexes_with_prefix("X");
    let l = leray_number(&union_all(&family)?);
    let bound = family.iter().map(|k| leray_number(k) + 1).sum::<usize>() - 1;
    if l > bound {
        return Err(format!("L(union) = {l} exceeds the bound {bound}"));
    }
    Ok(vec![("leray_of_union", l as u64), ("slack", (bound - l) as u64)])
}

fn gen_bounds(_: &mut ChaCha8Rng, _: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    Ok(Instance::default())
}

fn check_bounds(_: &Instance) -> std::result::Result<Observations, String> {
    let mut table = HFunctionTable::new();
    for x in 0..=10usize {
        let x128 = x as u128;
        for (t, d, want) in [(0, x, x128), (x, 1, 2 * x128 + 1), (1, x, x128 * x128 + 2 * x128)] {
            let got = lib(table.get(t, d))?;
            if got != want {
                return Err(format!("h({t},{d}) = {got}, expected {want}"));
            }
        }
    }
    for t in 0..=6usize {
        for d in 0..=6usize {
            let here = lib(table.get(t, d))?;
            if lib(table.get(t + 1, d))? < here || lib(table.get(t, d + 1))? < here {
                return Err(format!("h is not monotone at ({t},{d})"));
            }
        }
    }
    let mut checked = 0u64;
    for t in 1..=10usize {
        let closed = eta_closed(2, t).ok_or("no closed form for eta(2,t)")?;
        if closed != 2 * t as u128 {
            return Err(format!("eta(2,{t}) = {closed}, expected {}", 2 * t));
        }
        if lib(table.get(t - 1, 1))? != closed - 1 {
            return Err(format!("h({},1) is not eta(2,{t}) - 1", t - 1));
        }
    }
    for r in 2..=10usize {
        let closed = eta_closed(r, 2).ok_or("no closed form for eta(r,2)")?;
        let want = ((r + 2) * (r + 2) / 4) as u128;
        if closed != want {
            return Err(format!("eta({r},2) = {closed}, expected {want}"));
        }
    }
    for t in 1..=3usize {
        for n_max in 2 * t..=8 {
            let brute = lib(eta_bruteforce(2, t, n_max))?;
            if brute as u128 != eta_closed(2, t).expect("closed form for r = 2") {
                return Err(format!("brute-force eta(2,{t}) up to {n_max} vertices is {brute}"));
            }
            checked += 1;
        }
    }
    let pairs = (1..=10usize).map(|t| (2, t)).chain((2..=10usize).map(|r| (r, 2)));
    for (r, t) in pairs {
        let eta = eta_closed(r, t).expect("closed form");
        let tuza = lib(tuza_upper(r, t))?;
        if eta >= tuza {
            return Err(format!("eta({r},{t}) = {eta} is not below the upper bound {tuza}"));
        }
    }
    Ok(vec![("bruteforce_cases", checked)])
}

const HELLY_PAIRS: [(usize, usize); 5] = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)];

fn gen_helly(rng: &mut ChaCha8Rng, ctx: &Ctx, trial: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let (d, t) = match (ctx.d, ctx.t) {
        (Some(d), Some(t)) => (d, t),
        (Some(d), None) => (d, 1),
        (None, Some(t)) => (1, t),
        (None, None) => HELLY_PAIRS[trial % HELLY_PAIRS.len()],
    };
    if eta_closed(d + 1, t + 1).is_none() {
        return Err(format!("no closed form for eta({},{})", d + 1, t + 1));
    }
    let k = d_closure(&draw_complex(rng, 3, ctx.n), d);
    Ok(Instance::default().with_complex("K", k).with_param("d", d).with_param("t", t))
}

fn check_helly(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let (d, t) = (inst.usize_param("d")?, inst.usize_param("t")?);
    if k.helly_number() > d {
        return Err(format!("premise fails: h(K) = {} > {d}", k.helly_number()));
    }
    let eta = eta_closed(d + 1, t + 1).ok_or_else(|| format!("no closed form for eta({},{})", d + 1, t + 1))?;
    let h = tolerance_complex(k, t).helly_number();
    if h as u128 > eta - 1 {
        return Err(format!("h(T_{t}(K)) = {h} exceeds eta({},{}) - 1 = {}", d + 1, t + 1, eta - 1));
    }
    Ok(vec![("helly_of_tolerance", h as u64), ("tight", u64::from(h as u128 == eta - 1))])
}

/// Free edges `{u, v}` with unique maximal face `σ ∪ U`, `U ≠ ∅`, and a
/// vertex `w` outside that face.
fn lemma51_candidates(k: &SimplicialComplex) -> Vec<(Face, VertexSet, usize)> {
    let v = k.ambient();
    let mut out = Vec::new();
    for &m in k.maximal_faces().iter().filter(|m| m.len() >= 3) {
        for edge in m.subsets_of_size(2) {
            if let Ok(u) = free_extension(k, edge) {
                out.extend(v.difference(m).iter().map(|w| (edge, u, w)));
            }
        }
    }
    out
}

fn gen_union_of_links(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    retry(rng, rejected, |rng| {
        let k = draw_complex(rng, 4, ctx.n);
        let &(sigma, u, w) = lemma51_candidates(&k).choose(rng)?;
        is_d_collapsible(&k, 2).then(|| {
            Instance::default()
                .with_complex("K", k)
                .with_param("sigma", fmt_set(sigma))
                .with_param("U", fmt_set(u))
                .with_param("w", w)
        })
    })
}

fn check_union_of_links(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let sigma = inst.set_param("sigma")?;
    let u = inst.set_param("U")?;
    let w = inst.usize_param("w")?;
    if !is_d_collapsible(k, 2) {
        return Err("premise fails: K is not 2-collapsible".to_string());
    }
    if sigma.len() != 2 || u.is_empty() || lib(free_extension(k, sigma))? != u || sigma.union(u).contains(w) {
        return Err("premise fails: bad free edge, U or w".to_string());
    }
    let (a, b) = {
        let mut it = sigma.iter();
        (it.next().expect("edge"), it.next().expect("edge"))
    };
    let uw = u.with(w);
    let la = lib(k.link(VertexSet::singleton(a)))?.induced(uw);
    let lb = lib(k.link(VertexSet::singleton(b)))?.induced(uw);
    let union = lib(la.union(&lb))?;
    if union != lib(prop43_union(k, 1, sigma, u, VertexSet::singleton(w)))? {
        return Err("union of links disagrees with the general construction at t = 1".to_string());
    }
    let bv = betti(&union)?;
    if let Some((dim, value)) = bv.iter().find(|&(dim, value)| dim >= 2 && value != 0) {
        return Err(format!("betti_{dim} of the union of links is {value}"));
    }
    Ok(vec![("betti_1", bv.get(1) as u64)])
}

/// `K` on `n` vertices containing a random complex plus the given extra
/// generators.
fn complex_with(rng: &mut ChaCha8Rng, n: usize, extra: Vec<Face>) -> SimplicialComplex {
    let v = VertexSet::range(n);
    let density = rng.gen_range(0.2..0.6);
    let base = random_complex_with(rng, n, density);
    let mut gens = base.maximal_faces().to_vec();
    gens.extend(extra);
    SimplicialComplex::from_generators(gens, v)
}

fn gen_colorful_leray(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    let (n, classes) = retry(rng, rejected, |rng| {
        let n = rng.gen_range(3..=ctx.n);
        let m = rng.gen_range(2..=4.min(n));
        Some((n, draw_classes(rng, n, m)?))
    })?;
    let m = lib(PartitionMatroid::new(classes.clone(), VertexSet::range(n)))?;
    let k = complex_with(rng, n, m.transversals());
    Ok(Instance::default().with_complex("K", k).with_param("classes", encode_classes(&classes)))
}

/// Brute force over all faces: some `σ ∈ K` with `ρ(V ∖ σ) ≤ bound`.
fn witness_exists(k: &SimplicialComplex, m: &PartitionMatroid, bound: u128) -> bool {
    k.faces().any(|f| m.rank(k.ambient().difference(f)) as u128 <= bound)
}

fn check_colorful_leray(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let m = matroid(inst, k.ambient())?;
    let d = leray_number(k);
    let report = lib(verify_topological_colorful_helly(k, &m, d, false))?;
    let rank = report.rank.ok_or_else(|| format!("no face σ with rank(V ∖ σ) <= {d}"))?;
    if !witness_exists(k, &m, d as u128) {
        return Err("brute force finds no witness although the search did".to_string());
    }
    Ok(vec![("leray_number", d as u64), ("witness_rank", rank as u64)])
}

fn gen_colorful_tolerant(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    let t = draw_tolerance(rng, ctx);
    let inst = retry(rng, rejected, |rng| {
        let n = rng.gen_range(3..=ctx.n);
        let classes = { let size = rng.gen_range(2..=4.min(n)); draw_classes(rng, n, size) }?;
        let m = PartitionMatroid::new(classes.clone(), VertexSet::range(n)).ok()?;
        let trimmed = m
            .transversals()
            .into_iter()
            .map(|tr| {
                let drop = rng.gen_range(0..=t.min(tr.len()));
                tr.difference(choose_subset(rng, tr, drop))
            })
            .collect();
        let k = complex_with(rng, n, trimmed);
        if ctx.d.is_some_and(|d| !is_d_collapsible(&k, d)) {
            return None;
        }
        Some(Instance::default().with_complex("K", k).with_param("classes", encode_classes(&classes)))
    })?;
    let inst = inst.with_param("t", t);
    Ok(match ctx.d {
        Some(d) => inst.with_param("d", d),
        None => inst,
    })
}

fn check_colorful_tolerant(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    let m = matroid(inst, k.ambient())?;
    let t = inst.usize_param("t")?;
    let (_, d) = collapsibility_degree(inst, k)?;
    let report = lib(verify_tolerant_colorful(k, &m, t, d, ColorfulMode::Tolerant, false))?;
    let rank = report.rank.ok_or_else(|| format!("no face σ of T_{t}(K) with rank(V ∖ σ) <= {}", report.bound))?;
    if !witness_exists(&tolerance_complex(k, t), &m, report.bound) {
        return Err("brute force finds no witness although the search did".to_string());
    }
    Ok(vec![("witness_rank", rank as u64), ("bound", report.bound.min(u64::MAX as u128) as u64)])
}

fn gen_colorful_d2t1(rng: &mut ChaCha8Rng, ctx: &Ctx, trial: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    if trial % 2 == 0 {
        retry(rng, rejected, |rng| {
            let n = rng.gen_range(4..=ctx.n);
            let classes = { let size = rng.gen_range(3..=4.min(n)); draw_classes(rng, n, size) }?;
            let m = PartitionMatroid::new(classes.clone(), VertexSet::range(n)).ok()?;
            let trimmed = m
                .transversals()
                .into_iter()
                .map(|tr| {
                    let drop = rng.gen_range(0..=1);
                    tr.difference(choose_subset(rng, tr, drop))
                })
                .collect();
            let k = complex_with(rng, n, trimmed);
            is_d_collapsible(&k, 2)
                .then(|| Instance::default().with_complex("K", k).with_param("classes", encode_classes(&classes)))
        })
    } else {
        retry(rng, rejected, |rng| {
            let count = rng.gen_range(4..=ctx.n);
            let boxes = (0..count).map(|_| box_in_range(rng, 2, 6, 2..=8)).collect();
            let family = BoxFamily::new(boxes).ok()?;
            let classes = { let size = rng.gen_range(3..=6.min(count)); draw_classes(rng, count, size) }?;
            let k = nerve_of_boxes(&family);
            let m = PartitionMatroid::new(classes.clone(), k.ambient()).ok()?;
            missing_transversal(&m, &tolerance_complex(&k, 1)).is_none().then(|| {
                Instance::default()
                    .with_complex("K", k)
                    .with_param("classes", encode_classes(&classes))
                    .with_boxes(family)
            })
        })
    }
}

fn check_colorful_d2t1(inst: &Instance) -> std::result::Result<Observations, String> {
    let k = inst.complex("K")?;
    if let Some(b) = &inst.boxes {
        if nerve_of_boxes(b) != *k {
            return Err("stored complex is not the nerve of the stored boxes".to_string());
        }
    }
    let m = matroid(inst, k.ambient())?;
    let report = lib(verify_tolerant_colorful(k, &m, 1, 2, ColorfulMode::D2t1, false))?;
    let rank = report.rank.ok_or("no face σ of T_1(K) with rank(V ∖ σ) <= 5")?;
    if !witness_exists(&tolerance_complex(k, 1), &m, 5) {
        return Err("brute force finds no witness although the search did".to_string());
    }
    Ok(vec![("witness_rank", rank as u64), ("classes", m.classes().len() as u64)])
}

const SIX: usize = 6;

/// Every colorful selection has a point in common with tolerance 1.
fn six_color_premise(family: &BoxFamily, classes: &[VertexSet]) -> bool {
    fn rec(family: &BoxFamily, classes: &[VertexSet], chosen: VertexSet) -> bool {
        match classes.split_first() {
            None => common_point_with_tolerance_among(family, chosen, 1).is_some(),
            Some((c, rest)) => c.iter().all(|b| rec(family, rest, chosen.with(b))),
        }
    }
    rec(family, classes, VertexSet::EMPTY)
}

fn gen_six_colors(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, rejected: &mut usize) -> std::result::Result<Instance, String> {
    retry(rng, rejected, |rng| {
        let mut boxes = Vec::new();
        let mut colors = Vec::new();
        for c in 0..SIX {
            let size = rng.gen_range(3..=ctx.n);
            for _ in 0..size {
                let b = if rng.gen_bool(0.7) { box_in_range(rng, 2, 6, 3..=8) } else { box_in_range(rng, 2, 10, 0..=3) };
                boxes.push(b);
                colors.push(c);
            }
        }
        let family = BoxFamily::new(boxes).ok()?.with_colors(colors).ok()?;
        six_color_premise(&family, &family.color_classes()).then(|| Instance::default().with_boxes(family))
    })
}

fn check_six_colors(inst: &Instance) -> std::result::Result<Observations, String> {
    let family = inst.boxes()?;
    let classes = family.color_classes();
    if classes.len() != SIX || classes.iter().any(|c| c.is_empty()) {
        return Err(format!("expected {SIX} nonempty color classes, found {}", classes.len()));
    }
    if !six_color_premise(family, &classes) {
        return Err("premise fails: some colorful selection has no point in common with tolerance 1".to_string());
    }
    let nerve = nerve_of_boxes(family);
    let mut good = 0u64;
    for &c in &classes {
        let geometric = common_point_with_tolerance_among(family, c, 1).is_some();
        let combinatorial = crate::colorful::tolerant_point_in_common(c, &nerve, 1).is_some();
        if geometric != combinatorial {
            return Err(format!("class {c}: geometric and nerve-based tolerance checks disagree"));
        }
        good += u64::from(geometric);
    }
    if good == 0 {
        return Err("no color class has a point in common with tolerance 1".to_string());
    }
    Ok(vec![("classes_with_point", good), ("classes_without_point", (SIX as u64) - good), ("largest_class", classes.iter().map(|c| c.len()).max().unwrap_or(0) as u64)])
}

fn gen_intervals(rng: &mut ChaCha8Rng, ctx: &Ctx, _: usize, _: &mut usize) -> std::result::Result<Instance, String> {
    let t = ctx.t.unwrap_or_else(|| rng.gen_range(0..=2));
    let count = rng.gen_range(3..=ctx.n);
    let boxes = (0..count)
        .map(|_| if rng.gen_bool(0.85) { box_in_range(rng, 1, 8, 4..=10) } else { box_in_range(rng, 1, 16, 0..=2) })
        .collect();
    Ok(Instance::default().with_boxes(lib(BoxFamily::new(boxes))?).with_param("t", t))
}

fn check_intervals(inst: &Instance) -> std::result::Result<Observations, String> {
    let family = inst.boxes()?;
    if family.dim() != 1 {
        return Err("expected intervals".to_string());
    }
    let t = inst.usize_param("t")?;
    let all = VertexSet::range(family.len());
    let size = (2 * t + 2).min(family.len());
    let premise = all.subsets_of_size(size).all(|s| common_point_with_tolerance_among(family, s, t).is_some());
    let whole = common_point_with_tolerance_among(family, all, t).is_some();
    if premise && !whole {
        return Err(format!("every {size}-subfamily has a point in common with tolerance {t}, the family does not"));
    }
    Ok(vec![("premise_held", u64::from(premise)), ("nontrivial", u64::from(premise && family.len() > size))])
}

const fn rails(trials: usize, vertices: Option<(usize, usize, usize)>, max_t: Option<usize>, max_d: Option<usize>) -> GuardRails {
    let vertices = match vertices {
        Some((default, min, max)) => Some(VertexRail { default, min, max }),
        None => None,
    };
    GuardRails { trials, vertices, max_t, max_d }
}

static SUITES: &[Suite] = &[
    Suite {
        info: SuiteInfo {
            name: "two-blocks",
            aliases: &[],
            summary: "two disjoint (t+1)-blocks: C = 1, T_t is a sphere, L(T_t) = 2t+1 = h(t,1)",
            rails: rails(3, None, Some(4), None),
        },
        generate: gen_two_blocks,
        check: check_two_blocks,
    },
    Suite {
        info: SuiteInfo {
            name: "tolerance-leray",
            aliases: &["thm1.5"],
            summary: "L(T_t(K)) <= h(t,d) for d-collapsible K (d = max(C(K),1) unless --d)",
            rails: rails(200, Some((8, 3, 10)), Some(3), Some(4)),
        },
        generate: gen_tolerance_leray,
        check: check_tolerance_leray,
    },
    Suite {
        info: SuiteInfo {
            name: "tolerance-leray-d2t1",
            aliases: &["thm1.6"],
            summary: "L(T_1(K)) <= 5 for 2-collapsible K (random and planar box nerves)",
            rails: rails(300, Some((8, 3, 10)), None, None),
        },
        generate: gen_d2t1,
        check: check_d2t1,
    },
    Suite {
        info: SuiteInfo {
            name: "tolerance-decomposition",
            aliases: &["lemma4.1"],
            summary: "T_t(K) minus T_t(cost(K,σ)) equals σ joined with T_t(lk) minus the link union",
            rails: rails(500, Some((7, 2, 8)), Some(3), None),
        },
        generate: gen_decomposition,
        check: check_decomposition,
    },
    Suite {
        info: SuiteInfo {
            name: "relative-decomposition",
            aliases: &["cor4.2", "prop4.3"],
            summary: "relative homology of (T_t(K), T_t(cost)) as a shift and as a direct sum over W",
            rails: rails(150, Some((7, 3, 8)), Some(3), None),
        },
        generate: gen_relative,
        check: check_relative,
    },
    Suite {
        info: SuiteInfo {
            name: "chain-shift",
            aliases: &["lemma3.2"],
            summary: "H_k(X,Y) = H_{k-|σ|}(Z,W) when X minus Y is σ joined with Z minus W",
            rails: rails(300, Some((8, 3, 10)), None, None),
        },
        generate: gen_chain_shift,
        check: check_chain_shift,
    },
    Suite {
        info: SuiteInfo {
            name: "direct-sum",
            aliases: &["lemma3.1"],
            summary: "homology of a union is the direct sum when all multiple intersections are acyclic",
            rails: rails(200, Some((9, 4, 11)), None, None),
        },
        generate: gen_direct_sum,
        check: check_direct_sum,
    },
    Suite {
        info: SuiteInfo {
            name: "nerve-theorem",
            aliases: &["thm2.3"],
            summary: "homology of a union equals that of the nerve when intersections are empty or acyclic",
            rails: rails(200, Some((7, 3, 9)), None, None),
        },
        generate: gen_nerve,
        check: check_nerve,
    },
    Suite {
        info: SuiteInfo {
            name: "mayer-vietoris",
            aliases: &["thm2.1"],
            summary: "dimension identities of the Mayer-Vietoris sequence",
            rails: rails(300, Some((7, 2, 9)), None, None),
        },
        generate: gen_pair_of_complexes,
        check: check_mayer_vietoris,
    },
    Suite {
        info: SuiteInfo {
            name: "link-costar",
            aliases: &["thm2.2"],
            summary: "dimension identities of the link / costar sequence",
            rails: rails(300, Some((7, 2, 9)), None, None),
        },
        generate: gen_link_costar,
        check: check_link_costar,
    },
    Suite {
        info: SuiteInfo {
            name: "pair-sequence",
            aliases: &[],
            summary: "dimension identities of the long exact sequence of a pair",
            rails: rails(300, Some((7, 2, 9)), None, None),
        },
        generate: gen_pair_sequence,
        check: check_pair_sequence,
    },
    Suite {
        info: SuiteInfo {
            name: "union-bound",
            aliases: &["km-union", "thm2.4"],
            summary: "L(X_1 ∪ … ∪ X_r) <= Σ (L(X_i) + 1) - 1 for r = 2, 3",
            rails: rails(200, Some((7, 2, 9)), None, None),
        },
        generate: gen_union_bound,
        check: check_union_bound,
    },
    Suite {
        info: SuiteInfo {
            name: "bounds",
            aliases: &[],
            summary: "h(t,d) tables, eta closed forms against brute force, strictness of the upper bound",
            rails: rails(1, None, None, None),
        },
        generate: gen_bounds,
        check: check_bounds,
    },
    Suite {
        info: SuiteInfo {
            name: "tolerant-helly-number",
            aliases: &["thm1.2"],
            summary: "h(T_t(K)) <= eta(d+1,t+1) - 1 when h(K) <= d (d = 1 or t = 1)",
            rails: rails(300, Some((8, 3, 9)), Some(3), Some(3)),
        },
        generate: gen_helly,
        check: check_helly,
    },
    Suite {
        info: SuiteInfo {
            name: "union-of-links",
            aliases: &["lemma5.1"],
            summary: "lk(K,v)[U+w] ∪ lk(K,u)[U+w] has no homology above dimension 1 for 2-collapsible K",
            rails: rails(100, Some((7, 4, 9)), None, None),
        },
        generate: gen_union_of_links,
        check: check_union_of_links,
    },
    Suite {
        info: SuiteInfo {
            name: "colorful-leray",
            aliases: &["thm6.3"],
            summary: "K d-Leray with M ⊆ K has a face σ with rank(V ∖ σ) <= d",
            rails: rails(100, Some((8, 3, 10)), None, None),
        },
        generate: gen_colorful_leray,
        check: check_colorful_leray,
    },
    Suite {
        info: SuiteInfo {
            name: "colorful-tolerant",
            aliases: &["thm6.4"],
            summary: "K d-collapsible with M ⊆ T_t(K) has σ ∈ T_t(K) with rank(V ∖ σ) <= h(t,d)",
            rails: rails(100, Some((8, 3, 10)), Some(3), Some(4)),
        },
        generate: gen_colorful_tolerant,
        check: check_colorful_tolerant,
    },
    Suite {
        info: SuiteInfo {
            name: "colorful-d2t1",
            aliases: &["thm6.5"],
            summary: "K 2-collapsible with M ⊆ T_1(K) has σ ∈ T_1(K) with rank(V ∖ σ) <= 5",
            rails: rails(100, Some((8, 4, 10)), None, None),
        },
        generate: gen_colorful_d2t1,
        check: check_colorful_d2t1,
    },
    Suite {
        info: SuiteInfo {
            name: "six-colors",
            aliases: &["cor6.6"],
            summary: "six classes of planar boxes: colorful tolerance-1 points force one class to have one",
            rails: rails(200, Some((3, 3, 3)), None, None),
        },
        generate: gen_six_colors,
        check: check_six_colors,
    },
    Suite {
        info: SuiteInfo {
            name: "interval-tolerance",
            aliases: &["thm1.1"],
            summary: "intervals: if every (2t+2)-subfamily has a point with tolerance t, so does the family",
            rails: rails(500, Some((10, 3, 14)), Some(3), None),
        },
        generate: gen_intervals,
        check: check_intervals,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(seed: u64, trials: usize) -> SuiteOptions {
        SuiteOptions { seed, trials: Some(trials), ..SuiteOptions::default() }
    }

    #[test]
    fn names_and_aliases_are_unique() {
        let mut all: Vec<&str> = SUITES.iter().flat_map(|s| std::iter::once(s.info.name).chain(s.info.aliases.iter().copied())).collect();
        let before = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), before);
        assert_eq!(canonical_name("km-union"), Some("union-bound"));
        assert_eq!(canonical_name("nope"), None);
    }

    #[test]
    fn every_suite_passes_a_few_trials() {
        for s in SUITES {
            let trials = if s.info.name == "bounds" { 1 } else { 4 };
            let r = run_suite(s.info.name, &opts(3, trials)).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("lemma4.1", &opts(11, 30)).unwrap();
        let b = run_suite("lemma4.1", &opts(11, 30)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), b.to_text());
        let c = run_suite("lemma4.1", &opts(12, 30)).unwrap();
        assert_ne!(a.observations, c.observations);
    }

    #[test]
    fn guard_rails() {
        let too_big = SuiteOptions { n: Some(12), ..opts(0, 1) };
        assert!(matches!(run_suite("thm1.5", &too_big), Err(Error::Refused(_))));
        assert!(run_suite("thm1.5", &SuiteOptions { force: true, n: Some(4), ..opts(0, 1) }).is_ok());
        assert!(matches!(run_suite("km-union", &SuiteOptions { t: Some(1), ..opts(0, 1) }), Err(Error::Precondition(_))));
        assert!(matches!(run_suite("missing", &opts(0, 1)), Err(Error::Precondition(_))));
        assert!(run_suite("thm1.5", &opts(0, 0)).is_err());
    }

    #[test]
    fn complex_encoding_round_trips() {
        let k = SimplicialComplex::from_maximal_faces([VertexSet::from([0, 2]), VertexSet::from([3])], VertexSet::range(5)).unwrap();
        let (name, back) = decode_complex(&encode_complex("K", &k)).unwrap();
        assert_eq!((name.as_str(), &back), ("K", &k));
        for special in [SimplicialComplex::void(VertexSet::range(2)), SimplicialComplex::empty(VertexSet::EMPTY)] {
            assert_eq!(decode_complex(&encode_complex("E", &special)).unwrap().1, special);
        }
    }

    #[test]
    fn dumps_round_trip_and_refail() {
        let mut rejected = 0;
        let mut rng = trial_rng(5, 0);
        let ctx = Ctx { t: None, d: None, n: 7 };
        let good = gen_decomposition(&mut rng, &ctx, 0, &mut rejected).unwrap();
        let (text, ext) = good.dump_text("tolerance-decomposition", 5, 0);
        assert_eq!(ext, "scx");
        assert!(replay_text(&text, false).unwrap().all_passed());

        // a union-bound instance that claims a wrong premise
        let bad = Instance::default()
            .with_complex("K", SimplicialComplex::simplex_boundary(VertexSet::range(3)))
            .with_param("t", "1")
            .with_param("d", 0);
        let (text, _) = bad.dump_text("tolerance-leray", 0, 0);
        let r = replay_text(&text, false).unwrap();
        assert!(!r.all_passed());
        assert!(r.failures[0].message.contains("premise"));
    }

    #[test]
    fn box_dumps_round_trip() {
        let mut rejected = 0;
        let ctx = Ctx { t: None, d: None, n: 3 };
        let inst = gen_six_colors(&mut trial_rng(1, 0), &ctx, 0, &mut rejected).unwrap();
        let (text, ext) = inst.dump_text("six-colors", 1, 0);
        assert_eq!(ext, "boxes");
        assert!(replay_text(&text, true).unwrap().all_passed());
    }

    #[test]
    fn exact_sequence_dimension_checks() {
        assert!(check_exact_dimensions(&[1, 1]).is_ok());
        assert!(check_exact_dimensions(&[0, 1, 1, 0]).is_ok());
        assert!(check_exact_dimensions(&[1, 0]).is_err());
        assert!(check_exact_dimensions(&[1, 2, 1]).is_ok());
        assert!(check_exact_dimensions(&[1, 3, 1]).is_err());
    }

    #[test]
    fn d_closure_has_small_missing_faces() {
        let k = SimplicialComplex::simplex_boundary(VertexSet::range(4));
        assert!(d_closure(&k, 1).helly_number() <= 1);
        assert_eq!(d_closure(&k, 2), SimplicialComplex::simplex(VertexSet::range(4)));
        assert_eq!(d_closure(&k, 3), k);
    }

    #[test]
    fn zero_d_breaks_the_tolerance_bound() {
        // a single vertex on three vertices is 0-collapsible, yet T_1 is not
        // 0-Leray: two isolated vertices survive in an induced subcomplex
        let k = SimplicialComplex::simplex(VertexSet::singleton(0)).with_ambient(VertexSet::range(3)).unwrap();
        assert_eq!(collapsibility_number(&k), 0);
        assert_eq!(leray_number(&tolerance_complex(&k, 1)), 1);
        let inst = Instance::default().with_complex("K", k).with_param("t", "1");
        assert!(check_tolerance_leray(&inst).is_ok());
    }
}
