//! The `talkwalk` command line. Each subcommand loads its inputs, runs one
//! analysis and writes its outputs plus a `manifest.json` into `--out`.

mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub use output::{fmt6, to_json};
use output::{opt6, write_csv, write_file, write_predictions};

use crate::dataset::{
    dataset_stats, generate_synthetic, load_dataset, save_dataset, Dataset, DatasetPaths, SynthConfig,
};
use crate::error::{Error, Result};
use crate::eval::{
    influence_presenter, influence_same_talk, EvaluationReport, DEFAULT_PRESENTER_THRESHOLDS,
};
use crate::graphs::{edge_rows, WeightMode};
use crate::predict::{
    baseline_majority, baseline_room, cosine_predict, sweep, CosineMode, HrprContext, Population,
    SweepPoint,
};
use crate::text::{build_vectors, silhouette_sessions, Stopwords, TalkRepresentation, VectorSpace};
use crate::walk::WalkConfig;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "TALKWALK_THREADS";

#[derive(Debug, Parser)]
#[command(name = "talkwalk", version, about = "Predict talk attendance from contacts and interests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Contact network and attendance statistics.
    Stats(DataArgs),
    /// Same-talk probabilities by contact category and the presenter-contact curve.
    Influence {
        #[command(flatten)]
        data: DataArgs,
        /// Minimum contact seconds for the presenter curve.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PRESENTER_THRESHOLDS)]
        thresholds: Vec<i64>,
    },
    /// Track-majority and first-room baselines.
    Baseline {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        reference: bool,
    },
    /// Cosine similarity between interest profiles and talks.
    Cosine {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        text: TextArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
    },
    /// Hybrid rooted random walk predictor for one layer mixture.
    Hrpr {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        text: TextArgs,
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, default_value_t = 0.4)]
        p_cosine: f64,
        #[arg(long, default_value_t = 0.3)]
        p_presenter: f64,
        #[arg(long, default_value_t = 0.3)]
        p_break: f64,
        /// Also write every slot graph to edges.csv.
        #[arg(long)]
        edges: bool,
        #[arg(long)]
        reference: bool,
    },
    /// Evaluate the hybrid walk over the whole mixture simplex.
    Sweep {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        text: TextArgs,
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long)]
        reference: bool,
    },
    /// Average silhouette of the parallel sessions of each slot.
    Silhouette {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        stopwords: Option<PathBuf>,
        /// Limit to one representation; all three by default.
        #[arg(long, value_enum)]
        representation: Option<ReprArg>,
    },
    /// Generate a synthetic conference with planted topics.
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
struct DataArgs {
    #[arg(long)]
    schedule: PathBuf,
    #[arg(long)]
    attendance: PathBuf,
    #[arg(long)]
    contacts: PathBuf,
    /// Directory of participant publications: <participant>/<doc>.txt.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Contacts shorter than this many seconds are dropped.
    #[arg(long, default_value_t = crate::dataset::DEFAULT_RESOLUTION)]
    resolution: i64,
    /// Recorded in the manifest; the analyses themselves are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Args)]
struct TextArgs {
    #[arg(long)]
    stopwords: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReprArg::Abstract)]
    representation: ReprArg,
}

#[derive(Debug, Clone, Args)]
struct WalkArgs {
    #[arg(long, default_value_t = crate::walk::DEFAULT_ALPHA)]
    alpha: f64,
    #[arg(long = "tol", default_value_t = crate::walk::DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[arg(long = "max-iter", default_value_t = crate::walk::DEFAULT_MAX_ITERATIONS)]
    max_iterations: usize,
    /// Collapse each session's talks into one node.
    #[arg(long)]
    merged: bool,
    #[arg(long, value_enum, default_value_t = WeightArg::Duration)]
    weight_mode: WeightArg,
    #[arg(long, value_enum, default_value_t = PopulationArg::Auto)]
    population: PopulationArg,
}

#[derive(Debug, Clone, Args)]
struct SynthArgs {
    #[arg(long, default_value_t = 60)]
    participants: usize,
    #[arg(long, default_value_t = 7)]
    slots: usize,
    #[arg(long, default_value_t = 2)]
    rooms: usize,
    #[arg(long, default_value_t = 3)]
    talks_per_session: usize,
    #[arg(long, default_value_t = 2)]
    topics: usize,
    #[arg(long, default_value_t = 0.9)]
    interest_strength: f64,
    #[arg(long, default_value_t = 0.8)]
    contact_homophily: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReprArg {
    Paper,
    Abstract,
    Title,
}

impl From<ReprArg> for TalkRepresentation {
    fn from(r: ReprArg) -> Self {
        match r {
            ReprArg::Paper => TalkRepresentation::FullPaper,
            ReprArg::Abstract => TalkRepresentation::Abstract,
            ReprArg::Title => TalkRepresentation::Title,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WeightArg {
    Duration,
    Binary,
}

impl From<WeightArg> for WeightMode {
    fn from(w: WeightArg) -> Self {
        match w {
            WeightArg::Duration => WeightMode::Duration,
            WeightArg::Binary => WeightMode::Binary,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PopulationArg {
    Core,
    All,
    Auto,
}

impl From<PopulationArg> for Population {
    fn from(p: PopulationArg) -> Self {
        match p {
            PopulationArg::Core => Population::Core,
            PopulationArg::All => Population::All,
            PopulationArg::Auto => Population::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    TalkWise,
    SessionMax,
    SessionAvg,
    All,
}

/// Everything that determines a run, echoed into `manifest.json`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub schedule: Option<PathBuf>,
    pub attendance: Option<PathBuf>,
    pub contacts: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub resolution: Option<i64>,
    pub representation: Option<String>,
    pub alpha: Option<f64>,
    pub tolerance: Option<f64>,
    pub max_iterations: Option<usize>,
    pub merged: Option<bool>,
    pub weight_mode: Option<String>,
    pub population: Option<String>,
    pub step: Option<f64>,
    pub seed: Option<u64>,
    pub out: PathBuf,
    /// Subcommand-specific parameters.
    pub parameters: serde_json::Value,
}

impl RunConfig {
    fn from_data(command: &str, data: &DataArgs) -> Self {
        RunConfig {
            command: command.into(),
            schedule: Some(data.schedule.clone()),
            attendance: Some(data.attendance.clone()),
            contacts: Some(data.contacts.clone()),
            corpus: data.corpus.clone(),
            resolution: Some(data.resolution),
            seed: Some(data.seed),
            out: data.out.clone(),
            parameters: json!({}),
            ..Default::default()
        }
    }

    fn with_text(mut self, text: &TextArgs) -> Self {
        self.stopwords = text.stopwords.clone();
        self.representation = Some(TalkRepresentation::from(text.representation).name().into());
        self
    }

    fn with_walk(mut self, walk: &WalkArgs, population: Population) -> Self {
        self.alpha = Some(walk.alpha);
        self.tolerance = Some(walk.tolerance);
        self.max_iterations = Some(walk.max_iterations);
        self.merged = Some(walk.merged);
        self.weight_mode = Some(
            match WeightMode::from(walk.weight_mode) {
                WeightMode::Duration => "duration",
                WeightMode::Binary => "binary",
            }
            .into(),
        );
        self.population = Some(population.name().into());
        self
    }
}

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    outputs: Vec<String>,
}

/// Parses arguments and runs the command. Returns the process exit code:
/// 0 on success, 1 on invalid input or configuration, 2 on usage errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    configure_threads();
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // a pool may already exist when run is called repeatedly in one process
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Stats(data) => stats(&data),
        Command::Influence { data, thresholds } => influence(&data, &thresholds),
        Command::Baseline { data, reference } => baseline(&data, reference),
        Command::Cosine { data, text, mode } => cosine(&data, &text, mode),
        Command::Hrpr {
            data,
            text,
            walk,
            p_cosine,
            p_presenter,
            p_break,
            edges,
            reference,
        } => hrpr(&data, &text, &walk, [p_cosine, p_presenter, p_break], edges, reference),
        Command::Sweep {
            data,
            text,
            walk,
            step,
            reference,
        } => run_sweep(&data, &text, &walk, step, reference),
        Command::Silhouette {
            data,
            stopwords,
            representation,
        } => silhouette(&data, stopwords.as_deref(), representation),
        Command::Synth(args) => synth(&args),
    }
}

fn load(data: &DataArgs) -> Result<Dataset> {
    load_dataset(&DatasetPaths {
        schedule: data.schedule.clone(),
        attendance: data.attendance.clone(),
        contacts: data.contacts.clone(),
        corpus: data.corpus.clone(),
        resolution: data.resolution,
    })
}

fn stopwords(path: Option<&Path>) -> Result<Stopwords> {
    match path {
        Some(p) => Stopwords::from_file(p),
        None => Ok(Stopwords::english()),
    }
}

fn vectors(dataset: &Dataset, data: &DataArgs, text: &TextArgs) -> Result<Option<VectorSpace>> {
    if data.corpus.is_none() {
        return Ok(None);
    }
    let sw = stopwords(text.stopwords.as_deref())?;
    build_vectors(&dataset.corpus, &dataset.schedule, text.representation.into(), &sw).map(Some)
}

fn finish(config: &RunConfig, outputs: &[&str]) -> Result<()> {
    let mut outputs: Vec<String> = outputs.iter().map(|s| s.to_string()).collect();
    outputs.push("manifest.json".into());
    let manifest = Manifest {
        tool: "talkwalk",
        version: env!("CARGO_PKG_VERSION"),
        config,
        outputs,
    };
    write_file(&config.out.join("manifest.json"), &to_json(&manifest)?)
}

fn write_histogram(path: &Path, hist: &[(i64, usize)]) -> Result<()> {
    write_csv(path, &["x", "count"], hist.iter().map(|(x, c)| vec![x.to_string(), c.to_string()]))
}

fn stats(data: &DataArgs) -> Result<()> {
    let dataset = load(data)?;
    let report = dataset_stats(&dataset);
    let out = &data.out;
    write_file(&out.join("stats.json"), &to_json(&report)?)?;
    write_histogram(&out.join("contact_length_histogram.csv"), &report.contact_length_histogram)?;
    write_histogram(
        &out.join("aggregated_contact_length_histogram.csv"),
        &report.aggregated_contact_length_histogram,
    )?;
    write_histogram(
        &out.join("papers_per_participant_histogram.csv"),
        &report.papers_per_participant_histogram,
    )?;
    finish(
        &RunConfig::from_data("stats", data),
        &[
            "stats.json",
            "contact_length_histogram.csv",
            "aggregated_contact_length_histogram.csv",
            "papers_per_participant_histogram.csv",
        ],
    )
}

fn influence(data: &DataArgs, thresholds: &[i64]) -> Result<()> {
    let dataset = load(data)?;
    let same = influence_same_talk(&dataset);
    let curve = influence_presenter(&dataset, thresholds)?;
    let rows = same
        .iter()
        .map(|(c, p)| (c.name().to_string(), p))
        .chain(curve.iter().map(|(t, p)| (format!("presenter_{t}"), p)))
        .map(|(name, p)| vec![name, opt6(p.probability), opt6(p.ci_low), opt6(p.ci_high), p.n.to_string()]);
    write_csv(
        &data.out.join("influence.csv"),
        &["category", "probability", "ci_lo", "ci_hi", "n"],
        rows,
    )?;
    let mut config = RunConfig::from_data("influence", data);
    config.parameters = json!({ "thresholds": thresholds });
    finish(&config, &["influence.csv"])
}

/// Published reference values and ours, with the difference.
#[derive(Serialize)]
struct ReferenceRow {
    metric: &'static str,
    reference: f64,
    ours: f64,
    delta: f64,
}

fn reference_row(metric: &'static str, reference: f64, ours: f64) -> ReferenceRow {
    ReferenceRow {
        metric,
        reference,
        ours,
        delta: ours - reference,
    }
}

fn baseline(data: &DataArgs, reference: bool) -> Result<()> {
    let dataset = load(data)?;
    let majority = baseline_majority(&dataset)?;
    let room = baseline_room(&dataset)?;
    write_predictions(&data.out.join("predictions_majority.csv"), &majority)?;
    write_predictions(&data.out.join("predictions_room.csv"), &room)?;
    let reports = vec![
        EvaluationReport::new("majority", "all", &majority)?,
        EvaluationReport::new("room", "all", &room)?,
    ];
    write_file(&data.out.join("metrics.json"), &to_json(&reports)?)?;
    let mut outputs = vec!["predictions_majority.csv", "predictions_room.csv", "metrics.json"];
    if reference {
        let rows = [
            reference_row("majority_accuracy", 0.5405, reports[0].accuracy),
            reference_row("room_accuracy", 0.5953, reports[1].accuracy),
        ];
        write_file(&data.out.join("reference.json"), &to_json(&rows)?)?;
        outputs.push("reference.json");
    }
    let mut config = RunConfig::from_data("baseline", data);
    config.parameters = json!({ "reference": reference });
    finish(&config, &outputs)
}

fn cosine(data: &DataArgs, text: &TextArgs, mode: ModeArg) -> Result<()> {
    let dataset = load(data)?;
    let space = vectors(&dataset, data, text)?
        .ok_or_else(|| Error::config("the cosine predictor needs --corpus"))?;
    let modes: Vec<CosineMode> = match mode {
        ModeArg::TalkWise => vec![CosineMode::TalkWise],
        ModeArg::SessionMax => vec![CosineMode::SessionMax],
        ModeArg::SessionAvg => vec![CosineMode::SessionAvg],
        ModeArg::All => CosineMode::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    let mut files = Vec::new();
    for m in modes {
        let decisions = cosine_predict(&dataset, &space, m)?;
        let file = format!("predictions_cosine_{}.csv", m.name());
        write_predictions(&data.out.join(&file), &decisions)?;
        reports.push(EvaluationReport::new(format!("cosine-{}", m.name()), "core", &decisions)?);
        files.push(file);
    }
    write_file(&data.out.join("metrics.json"), &to_json(&reports)?)?;
    files.push("metrics.json".into());
    let mut config = RunConfig::from_data("cosine", data).with_text(text);
    config.population = Some("core".into());
    config.parameters = json!({ "mode": format!("{mode:?}") });
    finish(&config, &files.iter().map(String::as_str).collect::<Vec<_>>())
}

fn walk_config(walk: &WalkArgs, mixture: Vec<f64>) -> Result<WalkConfig> {
    WalkConfig::new(walk.alpha, mixture)?.with_tolerance(walk.tolerance, walk.max_iterations)
}

fn hrpr(
    data: &DataArgs,
    text: &TextArgs,
    walk: &WalkArgs,
    [p_cosine, p_presenter, p_break]: [f64; 3],
    edges: bool,
    reference: bool,
) -> Result<()> {
    let dataset = load(data)?;
    let space = vectors(&dataset, data, text)?;
    let config = walk_config(walk, vec![p_cosine, p_break, p_presenter])?;
    let population = Population::from(walk.population).resolve(p_cosine);
    let context = HrprContext::new(&dataset, space.as_ref(), walk.weight_mode.into())?;
    let decisions = context.predict(&config, walk.merged, population)?;
    write_predictions(&data.out.join("predictions_hrpr.csv"), &decisions)?;

    // with a corpus, report both populations
    let mut reports = vec![EvaluationReport::new("hrpr", population.name(), &decisions)?];
    if space.is_some() {
        let other = if population == Population::Core {
            Population::All
        } else {
            Population::Core
        };
        let alt = context.predict(&config, walk.merged, other)?;
        reports.push(EvaluationReport::new("hrpr", other.name(), &alt)?);
    }
    write_file(&data.out.join("metrics.json"), &to_json(&reports)?)?;
    let mut outputs = vec!["predictions_hrpr.csv", "metrics.json"];

    if edges {
        let mut rows = Vec::new();
        for slot in dataset.schedule.slots() {
            let graph = if walk.merged {
                context.merged(&slot.id).map(|m| &m.graph)
            } else {
                context.graph(&slot.id)
            }
            .expect("every slot has a graph");
            rows.extend(
                edge_rows(graph)
                    .into_iter()
                    .map(|(s, l, a, b, w)| vec![s, l.to_string(), a, b, fmt6(w)]),
            );
        }
        write_csv(&data.out.join("edges.csv"), &["slot", "layer", "src", "dst", "weight"], rows)?;
        outputs.push("edges.csv");
    }
    if reference {
        let r = &reports[0];
        let rows: Vec<ReferenceRow> = match (p_cosine, p_presenter, p_break, walk.merged) {
            (1.0, _, _, false) => vec![
                reference_row("cosine_only_auc", 0.630, r.auc),
                reference_row("cosine_only_accuracy", 0.610, r.accuracy),
            ],
            (_, _, 1.0, _) => vec![reference_row("break_only_auc", 0.596, r.auc)],
            (_, 1.0, _, false) => vec![reference_row("presenter_only_auc", 0.474, r.auc)],
            _ => Vec::new(),
        };
        write_file(&data.out.join("reference.json"), &to_json(&rows)?)?;
        outputs.push("reference.json");
    }
    let mut run = RunConfig::from_data("hrpr", data).with_text(text).with_walk(walk, population);
    run.parameters = json!({
        "p_cosine": p_cosine,
        "p_presenter": p_presenter,
        "p_break": p_break,
        "edges": edges,
        "reference": reference,
    });
    finish(&run, &outputs)
}

fn run_sweep(data: &DataArgs, text: &TextArgs, walk: &WalkArgs, step: f64, reference: bool) -> Result<()> {
    let dataset = load(data)?;
    let space = vectors(&dataset, data, text)?;
    // one population for the whole surface
    let population = match Population::from(walk.population) {
        Population::Auto if space.is_some() => Population::Core,
        Population::Auto => Population::All,
        p => p,
    };
    let base = walk_config(walk, vec![1.0, 0.0, 0.0])?;
    let context = HrprContext::new(&dataset, space.as_ref(), walk.weight_mode.into())?;
    let points = sweep(&context, &base, walk.merged, step, population)?;
    write_sweep(&data.out.join("sweep.csv"), &points)?;
    let mut outputs = vec!["sweep.csv"];
    if reference && walk.merged {
        let best_auc = points.iter().map(|p| p.auc).fold(f64::NEG_INFINITY, f64::max);
        let best_acc = points.iter().map(|p| p.accuracy).fold(f64::NEG_INFINITY, f64::max);
        let rows = [
            reference_row("merged_best_auc", 0.703, best_auc),
            reference_row("merged_best_accuracy", 0.666, best_acc),
        ];
        write_file(&data.out.join("reference.json"), &to_json(&rows)?)?;
        outputs.push("reference.json");
    }
    let mut run = RunConfig::from_data("sweep", data).with_text(text).with_walk(walk, population);
    run.step = Some(step);
    run.parameters = json!({ "reference": reference });
    finish(&run, &outputs)
}

fn write_sweep(path: &Path, points: &[SweepPoint]) -> Result<()> {
    let rows = points.iter().map(|p| {
        vec![
            format!("{:.1}", p.p_cosine),
            format!("{:.1}", p.p_presenter),
            format!("{:.1}", p.p_break),
            fmt6(p.auc),
            fmt6(p.accuracy),
        ]
    });
    write_csv(path, &["p_cosine", "p_presenter", "p_break", "auc", "accuracy"], rows)
}

fn silhouette(data: &DataArgs, stopwords_path: Option<&Path>, representation: Option<ReprArg>) -> Result<()> {
    let dataset = load(data)?;
    if data.corpus.is_none() {
        return Err(Error::config("silhouette needs --corpus for the idf universe"));
    }
    let sw = stopwords(stopwords_path)?;
    let reprs: Vec<TalkRepresentation> = match representation {
        Some(r) => vec![r.into()],
        None => TalkRepresentation::ALL.to_vec(),
    };
    let schedule = &dataset.schedule;
    let mut rows = Vec::new();
    let mut talk_rows = Vec::new();
    for repr in &reprs {
        let space = build_vectors(&dataset.corpus, schedule, *repr, &sw)?;
        for slot in schedule.slots() {
            let sessions: Vec<Vec<&str>> = slot
                .sessions
                .iter()
                .map(|s| schedule.session(s).expect("slot session exists").talks.iter().map(String::as_str).collect())
                .collect();
            let refs: Vec<&[&str]> = sessions.iter().map(Vec::as_slice).collect();
            let result = silhouette_sessions(&refs, &space.talks)?;
            rows.push(vec![slot.id.clone(), repr.name().to_string(), fmt6(result.average)]);
            talk_rows.extend(
                result
                    .values
                    .into_iter()
                    .map(|(t, s)| vec![slot.id.clone(), repr.name().to_string(), t, fmt6(s)]),
            );
        }
    }
    write_csv(&data.out.join("silhouette.csv"), &["slot", "representation", "avg_silh"], rows)?;
    write_csv(
        &data.out.join("silhouette_talks.csv"),
        &["slot", "representation", "talk", "silh"],
        talk_rows,
    )?;
    let mut config = RunConfig::from_data("silhouette", data);
    config.stopwords = stopwords_path.map(Path::to_path_buf);
    config.representation = representation.map(|r| TalkRepresentation::from(r).name().to_string());
    finish(&config, &["silhouette.csv", "silhouette_talks.csv"])
}

fn synth(args: &SynthArgs) -> Result<()> {
    let config = SynthConfig {
        participants: args.participants,
        slots: args.slots,
        rooms: args.rooms,
        talks_per_session: args.talks_per_session,
        topic_count: args.topics,
        interest_strength: args.interest_strength,
        contact_homophily: args.contact_homophily,
        seed: args.seed,
    };
    let output = generate_synthetic(&config)?;
    save_dataset(&output.dataset, &args.out)?;
    write_file(&args.out.join("truth.json"), &to_json(&output.truth)?)?;
    let run = RunConfig {
        command: "synth".into(),
        seed: Some(args.seed),
        out: args.out.clone(),
        parameters: serde_json::to_value(&config)?,
        ..Default::default()
    };
    finish(
        &run,
        &["schedule.json", "attendance.csv", "contacts.csv", "corpus/", "talks/", "truth.json"],
    )
}
