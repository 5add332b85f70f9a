//! Command-line front end.
//!
//! Every subcommand accepts `--config FILE` (JSON, unknown keys rejected);
//! flags given on the command line override values from the file. Exit
//! codes: 0 success, 1 usage or input error, 2 when the base-group
//! condition fails (the report is still written).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bounds::{
    compute_rates, dimension_tail_csv, plancherel_dimension_mc, theorem_bound_assembly, tv_threshold_n,
    DimensionTail, RateReport, TheoremBounds, DEFAULT_BETA_FRACTION,
};
use crate::error::{Error, Result};
use crate::group::{
    make_alternating, make_cyclic, make_dihedral, make_symmetric, FiniteGroup, GroupLimits,
};
use crate::output::{fmt_real, to_json_pretty, CsvTable};
use crate::repr::{character_table, ConditionReport, InvolutionProfile, Tolerances};
use crate::sampling::{
    empirical_strong_tv, weak_l1_csv, weak_l1_curve, RepresentationData, StrongSimConfig,
    StrongTvSummary, WeakL1Row, DEFAULT_MAX_PRODUCT_DIM,
};
use crate::wreath::{iterated_wreath, wreath_census, wreath_dihedral, WreathCensus, WreathGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONDITION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hsp-powers", version, about = "Fourier sampling analysis on direct powers of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Base-group condition and rate constants.
    Analyze(CommonArgs),
    /// Exact weak-sampling L1 distance against its bounds, per n.
    WeakTv(CommonArgs),
    /// Strong-sampling trials on Gⁿ.
    StrongSim(CommonArgs),
    /// Irreps of Z₂ ≀ G grouped by kind and dimension.
    WreathCensus(CommonArgs),
    /// Monte Carlo tail of the Plancherel dimension on Gⁿ.
    PlancherelMc(CommonArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Default, Args)]
pub struct CommonArgs {
    /// JSON run configuration; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Group: A5, S3, D5, Z6, `wreath-d 5`, `tower 3`, or a JSON table file.
    #[arg(long, num_args = 1..=2)]
    pub group: Option<Vec<String>>,
    /// Height of the tower Z₂≀…≀Z₂ (shorthand for `--group tower K`).
    #[arg(long)]
    pub tower: Option<usize>,
    /// Involution: `auto` or an element id.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub n_min: Option<u64>,
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub beta_fraction: Option<f64>,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Frame policy: standard, unitary, bases:K, overcomplete:R.
    #[arg(long)]
    pub frame: Option<String>,
    /// Use the trivial hidden subgroup (strong-sim only).
    #[arg(long)]
    pub control: bool,
    /// Directory for output files; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Run configuration, as read from `--config` and merged with flags.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: Option<String>,
    pub mu: Option<String>,
    pub n: Option<u64>,
    pub n_min: Option<u64>,
    pub n_max: Option<u64>,
    pub epsilon: Option<f64>,
    pub beta_fraction: Option<f64>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub frame: Option<String>,
    pub control: Option<bool>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl RunConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    fn merge(mut self, args: &CommonArgs) -> Result<Self> {
        if let Some(parts) = &args.group {
            self.group = Some(parts.join(" "));
        }
        if let Some(k) = args.tower {
            if args.group.is_some() {
                return Err(Error::InvalidArgument("give either --group or --tower".into()));
            }
            self.group = Some(format!("tower {k}"));
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if args.$f.is_some() { self.$f = args.$f.clone(); } )* };
        }
        take!(mu, n, n_min, n_max, epsilon, beta_fraction, trials, seed, frame, out, format);
        if args.control {
            self.control = Some(true);
        }
        Ok(self)
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    fn beta_fraction(&self) -> f64 {
        self.beta_fraction.unwrap_or(DEFAULT_BETA_FRACTION)
    }
}

/// A parsed `--group` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    WreathDihedral(usize),
    Tower(usize),
    File(PathBuf),
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("unrecognised group `{s}`"));
        let num = |t: &str| t.trim().trim_start_matches([':', '=']).trim().parse::<usize>().map_err(|_| bad());
        let lower = s.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("wreath-d") {
            return Ok(GroupSpec::WreathDihedral(num(rest)?));
        }
        if let Some(rest) = lower.strip_prefix("tower") {
            return Ok(GroupSpec::Tower(num(rest)?));
        }
        if lower.ends_with(".json") || s.contains('/') {
            return Ok(GroupSpec::File(PathBuf::from(s)));
        }
        let (head, rest) = s.split_at(1.min(s.len()));
        let k = num(rest)?;
        match head {
            "Z" | "C" => Ok(GroupSpec::Cyclic(k)),
            "D" => Ok(GroupSpec::Dihedral(k)),
            "S" => Ok(GroupSpec::Symmetric(k)),
            "A" => Ok(GroupSpec::Alternating(k)),
            _ => Err(bad()),
        }
    }
}

/// A group ready for analysis: either a Cayley table or a wreath product
/// described through its base.
pub enum ResolvedGroup {
    Table(FiniteGroup),
    Wreath(WreathGroup),
}

impl ResolvedGroup {
    pub fn resolve(spec: &GroupSpec) -> Result<Self> {
        Ok(match spec {
            GroupSpec::Cyclic(k) => ResolvedGroup::Table(make_cyclic(*k)?),
            GroupSpec::Dihedral(k) => ResolvedGroup::Table(make_dihedral(*k)?),
            GroupSpec::Symmetric(k) => ResolvedGroup::Table(make_symmetric(*k)?),
            GroupSpec::Alternating(k) => ResolvedGroup::Table(make_alternating(*k)?),
            GroupSpec::WreathDihedral(k) => ResolvedGroup::Wreath(wreath_dihedral(*k)?),
            GroupSpec::Tower(k) => ResolvedGroup::Wreath(iterated_wreath(*k)?),
            GroupSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                ResolvedGroup::Table(FiniteGroup::from_json(&text, &GroupLimits::default())?)
            }
        })
    }

    /// The Cayley-table view, when one exists.
    pub fn finite_group(&self) -> Result<&FiniteGroup> {
        match self {
            ResolvedGroup::Table(g) => Ok(g),
            ResolvedGroup::Wreath(w) => w.as_finite_group().ok_or(Error::GuardExceeded {
                order: w.order(),
                limit: GroupLimits::default().max_order,
            }),
        }
    }

    /// Resolves `--mu` to an element id of the Cayley table.
    pub fn mu_id(&self, mu: Option<&str>) -> Result<usize> {
        let g = self.finite_group()?;
        match mu.unwrap_or("auto") {
            "auto" => match self {
                ResolvedGroup::Wreath(w) => Ok(w.id_of(w.canonical_involution())),
                ResolvedGroup::Table(g) => g
                    .default_involution()
                    .ok_or_else(|| Error::InvalidArgument(format!("{} has no non-central involution", g.name()))),
            },
            id => {
                let id: usize = id.parse().map_err(|_| Error::InvalidArgument(format!("bad --mu `{id}`")))?;
                if id >= g.order() {
                    return Err(Error::InvalidArgument(format!("--mu {id} out of range")));
                }
                Ok(id)
            }
        }
    }

    pub fn profile(&self, mu: Option<&str>) -> Result<InvolutionProfile> {
        match self {
            ResolvedGroup::Table(g) => {
                let table = character_table(g)?;
                InvolutionProfile::from_table(g, &table, self.mu_id(mu)?)
            }
            ResolvedGroup::Wreath(w) => {
                let base_table = character_table(w.base())?;
                let element = match (mu.unwrap_or("auto"), w.as_finite_group()) {
                    ("auto", _) => w.canonical_involution(),
                    (_, Some(_)) => w.element(self.mu_id(mu)?),
                    (_, None) => {
                        return Err(Error::InvalidArgument(
                            "only `--mu auto` is available for groups without a Cayley table".into(),
                        ))
                    }
                };
                w.involution_profile(&base_table, element)
            }
        }
    }
}

#[derive(Serialize)]
struct RunInfo<'a> {
    command: &'a str,
    group: String,
    seed: u64,
}

#[derive(Serialize)]
struct AnalyzeDocument<'a> {
    run: RunInfo<'a>,
    condition: ConditionReport,
    rates: Option<RateReport>,
    tv_threshold_n: Option<u64>,
    bounds_at_threshold: Option<TheoremBounds>,
    note: Option<String>,
}

#[derive(Serialize)]
struct WeakTvDocument<'a> {
    run: RunInfo<'a>,
    mu: usize,
    rows: Vec<WeakL1Row>,
}

#[derive(Serialize)]
struct StrongSimDocument<'a> {
    run: RunInfo<'a>,
    summary: StrongTvSummary,
    rates: Option<RateReport>,
    theorem_bounds: Option<TheoremBounds>,
}

#[derive(Serialize)]
struct CensusDocument<'a> {
    run: RunInfo<'a>,
    census: WreathCensus,
}

#[derive(Serialize)]
struct McDocument<'a> {
    run: RunInfo<'a>,
    rates: RateReport,
    tails: Vec<DimensionTail>,
}

/// Where results go: files in `--out`, or stdout.
struct Sink<'a> {
    dir: Option<PathBuf>,
    stdout: &'a mut dyn Write,
}

impl Sink<'_> {
    fn emit(&mut self, name: &str, content: &str) -> Result<()> {
        match &self.dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join(name), content)?;
            }
            None => self.stdout.write_all(content.as_bytes())?,
        }
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { EXIT_OK } else { EXIT_USAGE };
            let _ = if code == EXIT_OK {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli.command, stdout) {
        Ok(code) => code,
        Err(Error::ConditionFails(msg)) => {
            let _ = writeln!(stderr, "condition fails: {msg}");
            EXIT_CONDITION
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, stdout: &mut dyn Write) -> Result<i32> {
    let (name, args) = match command {
        Command::Analyze(a) => ("analyze", a),
        Command::WeakTv(a) => ("weak-tv", a),
        Command::StrongSim(a) => ("strong-sim", a),
        Command::WreathCensus(a) => ("wreath-census", a),
        Command::PlancherelMc(a) => ("plancherel-mc", a),
    };
    let base = match &args.config {
        Some(path) => RunConfig::from_json(&std::fs::read_to_string(path)?)?,
        None => RunConfig::default(),
    };
    let config = base.merge(args)?;
    let mut sink = Sink {
        dir: config.out.clone(),
        stdout,
    };
    match command {
        Command::Analyze(_) => cmd_analyze(&config, &mut sink),
        Command::WeakTv(_) => cmd_weak_tv(&config, &mut sink),
        Command::StrongSim(_) => cmd_strong_sim(&config, &mut sink),
        Command::WreathCensus(_) => cmd_wreath_census(&config, &mut sink),
        Command::PlancherelMc(_) => cmd_plancherel_mc(&config, &mut sink),
    }
    .map_err(|e| match e {
        Error::InvalidArgument(m) => Error::InvalidArgument(format!("{name}: {m}")),
        other => other,
    })
}

fn group_spec(config: &RunConfig) -> Result<GroupSpec> {
    config
        .group
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--group is required".into()))?
        .parse()
}

fn run_info<'a>(command: &'a str, config: &RunConfig) -> RunInfo<'a> {
    RunInfo {
        command,
        group: config.group.clone().unwrap_or_default(),
        seed: config.seed(),
    }
}

fn rates_with_overrides(profile: &InvolutionProfile, config: &RunConfig) -> Result<RateReport> {
    let mut rates = compute_rates(profile, config.beta_fraction())?;
    if let Some(eps) = config.epsilon {
        if !(eps > 0.0 && eps <= 0.5) {
            return Err(Error::InvalidArgument(format!("epsilon {eps} not in (0, 1/2]")));
        }
        rates.epsilon = eps;
        rates.a = (rates.gamma_work / 2.0).min(eps * rates.c.ln()) / 4.0;
        rates.feasible = rates.epsilon_slack(eps) < 0.0;
    }
    Ok(rates)
}

fn key_value_csv(value: &serde_json::Value) -> CsvTable {
    fn walk(prefix: &str, v: &serde_json::Value, t: &mut CsvTable) {
        match v {
            serde_json::Value::Object(map) => {
                for (k, x) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, t);
                }
            }
            serde_json::Value::Number(n) if n.is_f64() => t.push(vec![prefix.into(), fmt_real(n.as_f64().unwrap_or(f64::NAN))]),
            serde_json::Value::String(s) => t.push(vec![prefix.into(), s.clone()]),
            other => t.push(vec![prefix.into(), other.to_string()]),
        }
    }
    let mut t = CsvTable::new(["key", "value"]);
    walk("", value, &mut t);
    t
}

fn cmd_analyze(config: &RunConfig, sink: &mut Sink) -> Result<i32> {
    let group = ResolvedGroup::resolve(&group_spec(config)?)?;
    let profile = group.profile(config.mu.as_deref())?;
    let condition = ConditionReport::from_profile(&profile, &Tolerances::default());
    let (rates, note) = match rates_with_overrides(&profile, config) {
        Ok(r) => (Some(r), None),
        Err(Error::ConditionFails(m)) => (None, Some(m)),
        Err(e) => return Err(e),
    };
    let threshold = match &rates {
        Some(r) if r.feasible => Some(tv_threshold_n(r)?),
        _ => None,
    };
    let bounds = match (&rates, threshold) {
        (Some(r), Some(n)) => Some(theorem_bound_assembly(r, n)?),
        _ => None,
    };
    let holds = condition.condition_holds;
    let doc = AnalyzeDocument {
        run: run_info("analyze", config),
        condition,
        rates,
        tv_threshold_n: threshold,
        bounds_at_threshold: bounds,
        note,
    };
    match config.format.unwrap_or(Format::Json) {
        Format::Json => sink.emit("analyze.json", &to_json_pretty(&doc)?)?,
        Format::Csv => sink.emit("analyze.csv", &key_value_csv(&serde_json::to_value(&doc)?).render())?,
    }
    Ok(if holds { EXIT_OK } else { EXIT_CONDITION })
}

fn cmd_weak_tv(config: &RunConfig, sink: &mut Sink) -> Result<i32> {
    let group = ResolvedGroup::resolve(&group_spec(config)?)?;
    let g = group.finite_group()?;
    let mu = group.mu_id(config.mu.as_deref())?;
    let table = character_table(g)?;
    let lo = config.n_min.unwrap_or(1).max(1);
    let hi = config.n_max.or(config.n).unwrap_or(20).max(lo);
    let ns: Vec<u32> = (lo..=hi).map(|n| n as u32).collect();
    let rows = weak_l1_curve(g, &table, mu, &ns)?;
    match config.format.unwrap_or(Format::Csv) {
        Format::Csv => sink.emit("weak_tv.csv", &weak_l1_csv(&rows).render())?,
        Format::Json => sink.emit(
            "weak_tv.json",
            &to_json_pretty(&WeakTvDocument {
                run: run_info("weak-tv", config),
                mu,
                rows,
            })?,
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_strong_sim(config: &RunConfig, sink: &mut Sink) -> Result<i32> {
    let group = ResolvedGroup::resolve(&group_spec(config)?)?;
    let g = group.finite_group()?.clone();
    let mu = group.mu_id(config.mu.as_deref())?;
    let data = RepresentationData::new(g)?;
    let profile = InvolutionProfile::from_table(&data.group, &data.table, mu)?;
    let rates = match rates_with_overrides(&profile, config) {
        Ok(r) => Some(r),
        Err(Error::ConditionFails(_)) => None,
        Err(e) => return Err(e),
    };
    let n = config.n.unwrap_or(1);
    let sim = StrongSimConfig {
        n: n as usize,
        trials: config.trials.unwrap_or(100) as usize,
        seed: config.seed(),
        policy: config.frame.as_deref().unwrap_or("standard").parse()?,
        control: config.control.unwrap_or(false),
        deviation_rate: rates.as_ref().filter(|r| r.feasible).map(|r| r.a),
        max_dim: DEFAULT_MAX_PRODUCT_DIM,
    };
    let report = empirical_strong_tv(&data, mu, &sim)?;
    let theorem_bounds = match &rates {
        Some(r) if r.feasible => Some(theorem_bound_assembly(r, n)?),
        _ => None,
    };
    let doc = StrongSimDocument {
        run: run_info("strong-sim", config),
        summary: report.summary.clone(),
        rates,
        theorem_bounds,
    };
    match (&sink.dir, config.format.unwrap_or(Format::Csv)) {
        (Some(_), _) => {
            sink.emit("strong_sim.csv", &report.to_csv().render())?;
            sink.emit("strong_sim.json", &to_json_pretty(&doc)?)?;
        }
        (None, Format::Csv) => sink.emit("strong_sim.csv", &report.to_csv().render())?,
        (None, Format::Json) => sink.emit("strong_sim.json", &to_json_pretty(&doc)?)?,
    }
    Ok(EXIT_OK)
}

fn cmd_wreath_census(config: &RunConfig, sink: &mut Sink) -> Result<i32> {
    let census = match group_spec(config)? {
        GroupSpec::Tower(k) if k >= 2 => {
            let base = iterated_wreath(k - 1)?;
            let g = base.as_finite_group().ok_or(Error::GuardExceeded {
                order: base.order(),
                limit: GroupLimits::default().max_order,
            })?;
            wreath_census(g)?
        }
        GroupSpec::Tower(_) => wreath_census(&make_cyclic(1)?)?,
        GroupSpec::WreathDihedral(k) => wreath_census(&make_dihedral(k)?)?,
        spec => {
            let group = ResolvedGroup::resolve(&spec)?;
            wreath_census(group.finite_group()?)?
        }
    };
    match config.format.unwrap_or(Format::Json) {
        Format::Json => sink.emit(
            "wreath_census.json",
            &to_json_pretty(&CensusDocument {
                run: run_info("wreath-census", config),
                census,
            })?,
        )?,
        Format::Csv => {
            let mut t = CsvTable::new(["kind", "dimension", "count"]);
            for e in &census.entries {
                t.push(vec![e.kind.clone(), e.dimension.to_string(), e.count.to_string()]);
            }
            sink.emit("wreath_census.csv", &t.render())?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_plancherel_mc(config: &RunConfig, sink: &mut Sink) -> Result<i32> {
    let group = ResolvedGroup::resolve(&group_spec(config)?)?;
    let profile = group.profile(config.mu.as_deref())?;
    let rates = rates_with_overrides(&profile, config)?;
    let ns: Vec<u64> = match (config.n_min, config.n_max, config.n) {
        (Some(lo), Some(hi), _) if lo <= hi => {
            let step = ((hi - lo) / 10).max(1);
            (lo..=hi).step_by(step as usize).collect()
        }
        (_, _, Some(n)) => vec![n],
        _ => vec![400],
    };
    let trials = config.trials.unwrap_or(100_000);
    let tails = ns
        .iter()
        .map(|&n| plancherel_dimension_mc(&profile, &rates, n, trials, 2, config.seed()))
        .collect::<Result<Vec<_>>>()?;
    let csv = dimension_tail_csv(&tails);
    let doc = McDocument {
        run: run_info("plancherel-mc", config),
        rates,
        tails,
    };
    match (&sink.dir, config.format.unwrap_or(Format::Csv)) {
        (Some(_), _) => {
            sink.emit("plancherel_mc.csv", &csv.render())?;
            sink.emit("plancherel_mc.json", &to_json_pretty(&doc)?)?;
        }
        (None, Format::Csv) => sink.emit("plancherel_mc.csv", &csv.render())?,
        (None, Format::Json) => sink.emit("plancherel_mc.json", &to_json_pretty(&doc)?)?,
    }
    Ok(EXIT_OK)
}

/// Reads every regular file in `dir`, sorted by name.
pub fn read_outputs(dir: &Path) -> Result<Vec<(String, Vec<u8>)>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            files.push((entry.file_name().to_string_lossy().into_owned(), std::fs::read(entry.path())?));
        }
    }
    files.sort();
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hsp-powers").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn group_specs() {
        assert_eq!("A5".parse::<GroupSpec>().unwrap(), GroupSpec::Alternating(5));
        assert_eq!("wreath-d 5".parse::<GroupSpec>().unwrap(), GroupSpec::WreathDihedral(5));
        assert_eq!("tower 3".parse::<GroupSpec>().unwrap(), GroupSpec::Tower(3));
        assert_eq!("Z6".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(6));
        assert!("Q8".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn analyze_exit_codes() {
        let (code, out, _) = run_capture(&["analyze", "--group", "A5"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"condition_holds\": true"));
        let (code, out, _) = run_capture(&["analyze", "--group", "S3"]);
        assert_eq!(code, 2);
        assert!(out.contains("\"condition_holds\": false"));
        let (code, _, err) = run_capture(&["analyze"]);
        assert_eq!(code, 1);
        assert!(err.contains("--group"));
        assert_eq!(run_capture(&["analyze", "--bogus"]).0, 1);
    }

    #[test]
    fn wreath_dihedral_analysis() {
        let (code, out, _) = run_capture(&["analyze", "--group", "wreath-d", "5"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("\"mu_label\": \"(1,(5,5))\""));
    }

    #[test]
    fn weak_tv_rejects_abelian() {
        assert_eq!(run_capture(&["weak-tv", "--group", "Z6"]).0, 1);
        let (code, out, _) = run_capture(&["weak-tv", "--group", "S3", "--n-max", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn config_rejects_unknown_keys() {
        assert!(RunConfig::from_json(r#"{"group": "A5", "colour": 1}"#).is_err());
        let c = RunConfig::from_json(r#"{"group": "A5", "seed": 3}"#).unwrap();
        let merged = c.merge(&CommonArgs { seed: Some(9), ..Default::default() }).unwrap();
        assert_eq!(merged.seed, Some(9));
        assert_eq!(merged.group.as_deref(), Some("A5"));
    }
}
