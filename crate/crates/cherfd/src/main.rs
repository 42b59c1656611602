//! Command-line front end: weight queries, truncated characters, the
//! finite-dimensionality obstruction, classification closing, and the
//! bundled E8 self-check.
//!
//! Exit codes are a stable contract:
//!   0  success (for `findim`: an infinite-dimensionality certificate)
//!   1  no certificate (`findim` inconclusive, `classify` count mismatch)
//!   2  dataset, format or configuration errors
//!   3  unknown label
//!   4  column analysis refused (unsupported expansion, incomplete inventory)
//!   5  self-check mismatch in `verify-e8`

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cherfd::decomp::{expansion, AnalysisError, GrothExpansion};
use cherfd::findim::{
    analyze, character_of_expansion, classify, sl2_symmetry_test, CandidateStatus, FindimOutcome,
    PipelineError, Verdict,
};
use cherfd::gseries::{verma_series, GradedSeries, SeriesError};
use cherfd::rat::{parse_rat, rint, Rat, UpperBound};
use cherfd::repdata::{
    load_decomp_from_str, load_group_from_str, DataError, DecompMatrix, GroupData, IrrepLabel,
};
use cherfd::weights::{h_weight, labels_in_window, WeightError};

const E8_GROUP_JSON: &str = include_str!("../data/e8_c13_paper.json");
const E8_DECOMP_JSON: &str = include_str!("../data/e8_c13_decomp.json");
const E8_EXPECTED_JSON: &str = include_str!("../data/e8_c13_expected.json");

/// Default truncation margin above the lowest weight when an expansion is
/// valid on an unbounded window and no --hi was given.
const DEFAULT_CAP_STEPS: i64 = 16;

#[derive(Parser)]
#[command(
    name = "cherfd",
    version,
    about = "Exact graded characters and the finite-dimensionality obstruction \
             for rational Cherednik category O"
)]
struct Cli {
    /// Output mode for results
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    MachineReadable,
}

#[derive(Subcommand)]
enum Command {
    /// Exact lowest weights h_c(tau) for one or more labels
    Hweight {
        #[arg(long)]
        group: PathBuf,
        /// Parameter c as `p/q` or an integer
        #[arg(long, value_parser = parse_rat_arg)]
        c: Rat,
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// Truncated graded character of a Verma module
    VermaChar {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        c: Rat,
        /// Exclusive upper end of the window
        #[arg(long, value_parser = parse_rat_arg)]
        hi: Rat,
        label: String,
    },
    /// Truncated graded character of a simple module
    SimpleChar {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        c: Rat,
        /// Truncation used only when the expansion is valid everywhere
        #[arg(long, value_parser = parse_rat_arg)]
        hi: Option<Rat>,
        label: String,
    },
    /// Run the finite-dimensionality obstruction for one candidate
    Findim {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        c: Rat,
        #[arg(long, value_parser = parse_rat_arg)]
        hi: Option<Rat>,
        label: String,
    },
    /// End-to-end self-check against the bundled E8 dataset at c = 1/3
    VerifyE8,
    /// Close a classification from a candidates file and an expected count
    Classify {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        c: Rat,
        /// Externally known number of finite-dimensional simples
        #[arg(long)]
        expect: usize,
        /// JSON array of candidate labels
        #[arg(long)]
        candidates: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        hi: Option<Rat>,
    },
}

fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

struct CliError {
    code: u8,
    message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<DataError> for CliError {
    fn from(e: DataError) -> Self {
        let code = match &e {
            DataError::UnknownLabel(_) => 3,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<WeightError> for CliError {
    fn from(e: WeightError) -> Self {
        let code = match &e {
            WeightError::UnknownLabel(_) => 3,
            WeightError::MissingWeightData(_) => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        let code = match &e {
            AnalysisError::Weight(WeightError::UnknownLabel(_)) => 3,
            AnalysisError::Weight(WeightError::MissingWeightData(_)) => 2,
            AnalysisError::UnknownColumn(_) => 3,
            AnalysisError::MissingTwist(_) | AnalysisError::RowNotAboveDiagonal { .. } => 2,
            AnalysisError::AmbiguousLevel { .. }
            | AnalysisError::NoWitness(_)
            | AnalysisError::IncompleteInventory(_)
            | AnalysisError::UnsupportedExpansion(_) => 4,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Weight(w) => w.into(),
            other => CliError { code: 2, message: other.to_string() },
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Weight(w) => w.into(),
            PipelineError::Analysis(a) => a.into(),
            PipelineError::Series(s) => s.into(),
            PipelineError::UncappedInfiniteWindow(_) | PipelineError::MissingVerdict(_) => {
                CliError { code: 2, message: e.to_string() }
            }
            PipelineError::CountMismatch { .. } => CliError { code: 1, message: e.to_string() },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Hweight { group, c, labels } => cmd_hweight(group, c, labels, cli.output),
        Command::VermaChar { group, c, hi, label } => {
            cmd_verma_char(group, c, hi, label, cli.output)
        }
        Command::SimpleChar { group, decomp, c, hi, label } => {
            cmd_simple_char(group, decomp, c, hi.as_ref(), label, cli.output)
        }
        Command::Findim { group, decomp, c, hi, label } => {
            cmd_findim(group, decomp, c, hi.as_ref(), label, cli.output)
        }
        Command::VerifyE8 => cmd_verify_e8(cli.output),
        Command::Classify { group, decomp, c, expect, candidates, hi } => {
            cmd_classify(group, decomp, c, *expect, candidates, hi.as_ref(), cli.output)
        }
    }
}

fn load_group_file(path: &Path) -> Result<GroupData, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(load_group_from_str(&text, &path.display().to_string())?)
}

fn load_decomp_file(path: &Path, group: &GroupData) -> Result<DecompMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(load_decomp_from_str(&text, &path.display().to_string(), group)?)
}

fn series_terms_json(series: &GradedSeries) -> serde_json::Value {
    json!(series
        .terms()
        .map(|(e, c)| json!({"exponent": e.to_string(), "coefficient": c.to_string()}))
        .collect::<Vec<_>>())
}

fn window_json(series: &GradedSeries) -> serde_json::Value {
    let (lo, hi) = series.window();
    json!({"lo": lo.to_string(), "hi": hi.to_string()})
}

fn expansion_json(exp: &GrothExpansion) -> serde_json::Value {
    json!({
        "target": exp.target.to_string(),
        "terms": exp.terms.iter()
            .map(|(c, l)| json!({"coefficient": c.to_string(), "label": l.to_string()}))
            .collect::<Vec<_>>(),
        "valid_below": exp.valid_below.to_string(),
    })
}

fn verdict_json(verdict: &Verdict) -> serde_json::Value {
    match verdict {
        Verdict::InfiniteDimensional { witness_exponent, dim_neg, dim_pos } => json!({
            "kind": "INFINITE_DIMENSIONAL",
            "witness_exponent": witness_exponent.to_string(),
            "dim_neg": dim_neg.to_string(),
            "dim_pos": dim_pos.to_string(),
        }),
        Verdict::Inconclusive { window: (lo, hi) } => json!({
            "kind": "INCONCLUSIVE",
            "window": {"lo": lo.to_string(), "hi": hi.to_string()},
        }),
    }
}

fn print_doc(doc: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("json"));
}

fn cmd_hweight(
    group_path: &Path,
    c: &Rat,
    labels: &[String],
    output: OutputMode,
) -> Result<u8, CliError> {
    let group = load_group_file(group_path)?;
    let mut values = Vec::new();
    for name in labels {
        let label = IrrepLabel::new(name.clone());
        let h = h_weight(&group, c, &label)?;
        values.push((label, h));
    }
    match output {
        OutputMode::Text => {
            for (label, h) in &values {
                println!("{label}: {h}");
            }
        }
        OutputMode::MachineReadable => print_doc(&json!({
            "command": "hweight",
            "group": group.name(),
            "c": c.to_string(),
            "values": values.iter()
                .map(|(l, h)| json!({"label": l.to_string(), "h": h.to_string()}))
                .collect::<Vec<_>>(),
        })),
    }
    Ok(0)
}

fn cmd_verma_char(
    group_path: &Path,
    c: &Rat,
    hi: &Rat,
    label: &str,
    output: OutputMode,
) -> Result<u8, CliError> {
    let group = load_group_file(group_path)?;
    let label = IrrepLabel::new(label);
    let series = verma_series(&group, c, &label, hi)?;
    match output {
        OutputMode::Text => {
            let (lo, hi) = series.window();
            println!("window: [{lo}, {hi})");
            println!("{series}");
        }
        OutputMode::MachineReadable => print_doc(&json!({
            "command": "verma-char",
            "group": group.name(),
            "c": c.to_string(),
            "label": label.to_string(),
            "window": window_json(&series),
            "terms": series_terms_json(&series),
        })),
    }
    Ok(0)
}

/// Default truncation for an expansion valid everywhere: 16 steps above the
/// lowest weight, for display only.
fn default_cap(group: &GroupData, c: &Rat, tau: &IrrepLabel) -> Result<Rat, CliError> {
    Ok(h_weight(group, c, tau)? + rint(DEFAULT_CAP_STEPS))
}

fn cmd_simple_char(
    group_path: &Path,
    decomp_path: &Path,
    c: &Rat,
    hi: Option<&Rat>,
    label: &str,
    output: OutputMode,
) -> Result<u8, CliError> {
    let group = load_group_file(group_path)?;
    let matrix = load_decomp_file(decomp_path, &group)?;
    let label = IrrepLabel::new(label);
    let exp = expansion(&matrix, &label, &group, c)?;
    let cap;
    let cap_ref = match hi {
        Some(h) => Some(h),
        None => {
            cap = default_cap(&group, c, &label)?;
            Some(&cap)
        }
    };
    let series = character_of_expansion(&group, c, &exp, cap_ref)?;
    match output {
        OutputMode::Text => {
            let (lo, hi) = series.window();
            println!("expansion: {exp}");
            println!("window: [{lo}, {hi})");
            println!("character: {series}");
        }
        OutputMode::MachineReadable => print_doc(&json!({
            "command": "simple-char",
            "group": group.name(),
            "c": c.to_string(),
            "label": label.to_string(),
            "expansion": expansion_json(&exp),
            "window": window_json(&series),
            "terms": series_terms_json(&series),
        })),
    }
    Ok(0)
}

fn run_findim(
    group: &GroupData,
    matrix: &DecompMatrix,
    c: &Rat,
    hi: Option<&Rat>,
    label: &IrrepLabel,
) -> Result<FindimOutcome, CliError> {
    let cap;
    let cap_ref = match hi {
        Some(h) => Some(h),
        None => {
            cap = default_cap(group, c, label)?;
            Some(&cap)
        }
    };
    Ok(analyze(group, c, matrix, label, cap_ref)?)
}

fn cmd_findim(
    group_path: &Path,
    decomp_path: &Path,
    c: &Rat,
    hi: Option<&Rat>,
    label: &str,
    output: OutputMode,
) -> Result<u8, CliError> {
    let group = load_group_file(group_path)?;
    let matrix = load_decomp_file(decomp_path, &group)?;
    let label = IrrepLabel::new(label);
    let outcome = run_findim(&group, &matrix, c, hi, &label)?;
    match output {
        OutputMode::Text => {
            let (lo, hi) = outcome.character.window();
            println!("expansion: {}", outcome.expansion);
            println!("window: [{lo}, {hi})");
            println!("character: {}", outcome.character);
            println!("{}", outcome.verdict.render(&label));
        }
        OutputMode::MachineReadable => print_doc(&json!({
            "command": "findim",
            "group": group.name(),
            "c": c.to_string(),
            "label": label.to_string(),
            "expansion": expansion_json(&outcome.expansion),
            "window": window_json(&outcome.character),
            "character": series_terms_json(&outcome.character),
            "verdict": verdict_json(&outcome.verdict),
        })),
    }
    Ok(if outcome.verdict.is_infinite_dimensional() { 0 } else { 1 })
}

/// Per-candidate statuses for a classification run: candidates with a
/// column get a full analysis; candidates an analysis refuses to certify
/// stay untested rather than acquiring a verdict.
fn candidate_statuses(
    group: &GroupData,
    matrix: &DecompMatrix,
    c: &Rat,
    hi: Option<&Rat>,
    candidates: &[IrrepLabel],
) -> Result<(BTreeMap<IrrepLabel, CandidateStatus>, Vec<(IrrepLabel, String)>), CliError> {
    let mut statuses = BTreeMap::new();
    let mut notes = Vec::new();
    for candidate in candidates {
        if group.irrep(candidate).is_none() {
            return Err(WeightError::UnknownLabel(candidate.clone()).into());
        }
        let raw_col = matrix
            .columns()
            .iter()
            .find(|(raw, _)| {
                cherfd::decomp::resolve_labels(matrix, raw, group)
                    .map(|col| col.col_label() == candidate)
                    .unwrap_or(false)
            })
            .map(|(raw, _)| raw.clone());
        let Some(raw_col) = raw_col else {
            statuses.insert(candidate.clone(), CandidateStatus::Untested);
            notes.push((candidate.clone(), "no column in the matrix".to_owned()));
            continue;
        };
        match run_findim(group, matrix, c, hi, &raw_col) {
            Ok(outcome) => {
                notes.push((candidate.clone(), outcome.verdict.render(candidate)));
                statuses.insert(candidate.clone(), CandidateStatus::Tested(outcome.verdict));
            }
            Err(e) if e.code == 4 => {
                notes.push((candidate.clone(), format!("not certifiable: {}", e.message)));
                statuses.insert(candidate.clone(), CandidateStatus::Untested);
            }
            Err(e) => return Err(e),
        }
    }
    Ok((statuses, notes))
}

fn read_candidates(path: &Path) -> Result<Vec<IrrepLabel>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let names: Vec<String> = serde_json::from_str(&text).map_err(|e| CliError {
        code: 2,
        message: format!("malformed candidates file {}: {e}", path.display()),
    })?;
    let labels: Vec<IrrepLabel> = names.into_iter().map(IrrepLabel::new).collect();
    let mut seen = std::collections::BTreeSet::new();
    for label in &labels {
        if !seen.insert(label.clone()) {
            return Err(CliError {
                code: 2,
                message: format!("duplicate candidate {label}"),
            });
        }
    }
    Ok(labels)
}

fn cmd_classify(
    group_path: &Path,
    decomp_path: &Path,
    c: &Rat,
    expect: usize,
    candidates_path: &Path,
    hi: Option<&Rat>,
    output: OutputMode,
) -> Result<u8, CliError> {
    let group = load_group_file(group_path)?;
    let matrix = load_decomp_file(decomp_path, &group)?;
    let candidates = read_candidates(candidates_path)?;
    let (statuses, notes) = candidate_statuses(&group, &matrix, c, hi, &candidates)?;
    let outcome = classify(&candidates, expect, &statuses);
    match output {
        OutputMode::Text => {
            for (label, note) in &notes {
                let status = &statuses[label];
                match status {
                    CandidateStatus::Tested(_) => println!("{note}"),
                    CandidateStatus::Untested => println!("{label}: untested ({note})"),
                }
            }
            match &outcome {
                Ok(kept) => println!("classification: {}", join_labels(kept)),
                Err(e) => println!("{e}"),
            }
        }
        OutputMode::MachineReadable => {
            let statuses_json: Vec<_> = candidates
                .iter()
                .map(|label| {
                    json!({
                        "label": label.to_string(),
                        "status": statuses[label].to_string(),
                    })
                })
                .collect();
            let doc = match &outcome {
                Ok(kept) => json!({
                    "command": "classify",
                    "expected_count": expect,
                    "statuses": statuses_json,
                    "classification": kept.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                }),
                Err(e) => json!({
                    "command": "classify",
                    "expected_count": expect,
                    "statuses": statuses_json,
                    "error": e.to_string(),
                }),
            };
            print_doc(&doc);
        }
    }
    match outcome {
        Ok(_) => Ok(0),
        Err(PipelineError::CountMismatch { .. }) => Ok(1),
        Err(e) => Err(e.into()),
    }
}

fn join_labels(labels: &[IrrepLabel]) -> String {
    labels
        .iter()
        .map(|l| l.as_str().to_owned())
        .collect::<Vec<_>>()
        .join(" ")
}

// ---------------------------------------------------------------------------
// verify-e8
// ---------------------------------------------------------------------------

/// Expected results for the bundled self-check, stored as data so the run
/// is a genuine end-to-end comparison rather than printed constants.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpectedManifest {
    target: String,
    c: String,
    h_target: String,
    window_0_1_empty: bool,
    witness: String,
    h_witness: String,
    expansion: Vec<(String, String)>,
    valid_below: String,
    dim_at_minus_one: String,
    dim_at_plus_one: String,
    verdict: String,
    witness_exponent: String,
    candidates: Vec<String>,
    expected_count: usize,
    classification: Vec<String>,
}

struct Check {
    name: &'static str,
    expected: String,
    actual: String,
}

impl Check {
    fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

fn bundled_text(dir: Option<&Path>, name: &str, fallback: &'static str) -> Result<String, CliError> {
    match dir {
        Some(dir) => {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|e| CliError {
                code: 2,
                message: format!("cannot read bundled file {}: {e}", path.display()),
            })
        }
        None => Ok(fallback.to_owned()),
    }
}

fn cmd_verify_e8(output: OutputMode) -> Result<u8, CliError> {
    let override_dir = std::env::var_os("CHERFD_DATA").map(PathBuf::from);
    let dir = override_dir.as_deref();

    let group_text = bundled_text(dir, "e8_c13_paper.json", E8_GROUP_JSON)?;
    let decomp_text = bundled_text(dir, "e8_c13_decomp.json", E8_DECOMP_JSON)?;
    let expected_text = bundled_text(dir, "e8_c13_expected.json", E8_EXPECTED_JSON)?;

    let group = load_group_from_str(&group_text, "e8_c13_paper.json")?;
    let matrix = load_decomp_from_str(&decomp_text, "e8_c13_decomp.json", &group)?;
    let manifest: ExpectedManifest =
        serde_json::from_str(&expected_text).map_err(|e| CliError {
            code: 2,
            message: format!("malformed expected-results manifest: {e}"),
        })?;
    let c = parse_rat(&manifest.c).map_err(|e| CliError {
        code: 2,
        message: format!("manifest c: {e}"),
    })?;

    let target = IrrepLabel::new(manifest.target.clone());
    let witness = IrrepLabel::new(manifest.witness.clone());
    let mut checks = Vec::new();

    let h_target = h_weight(&group, &c, &target)?;
    checks.push(Check {
        name: "h(target)",
        expected: manifest.h_target.clone(),
        actual: h_target.to_string(),
    });

    let h_witness = h_weight(&group, &c, &witness)?;
    checks.push(Check {
        name: "h(witness)",
        expected: manifest.h_witness.clone(),
        actual: h_witness.to_string(),
    });

    let window = labels_in_window(&group, &c, &rint(0), &rint(1));
    checks.push(Check {
        name: "no weights in (0, 1]",
        expected: manifest.window_0_1_empty.to_string(),
        actual: (window.labels.is_empty() && window.exhaustive).to_string(),
    });

    let exp = expansion(&matrix, &target, &group, &c)?;
    let expected_exp = render_manifest_expansion(&manifest)?;
    checks.push(Check {
        name: "expansion",
        expected: expected_exp,
        actual: exp.to_string(),
    });

    let character = character_of_expansion(&group, &c, &exp, None)?;
    let dim_neg = character.coeff_at(&rint(-1)).map_err(PipelineError::from)?;
    let dim_pos = character.coeff_at(&rint(1)).map_err(PipelineError::from)?;
    checks.push(Check {
        name: "dim L[-1]",
        expected: manifest.dim_at_minus_one.clone(),
        actual: dim_neg.to_string(),
    });
    checks.push(Check {
        name: "dim L[+1]",
        expected: manifest.dim_at_plus_one.clone(),
        actual: dim_pos.to_string(),
    });

    let verdict = sl2_symmetry_test(&character);
    let (kind, witness_exp) = match &verdict {
        Verdict::InfiniteDimensional { witness_exponent, .. } => {
            ("INFINITE_DIMENSIONAL", witness_exponent.to_string())
        }
        Verdict::Inconclusive { .. } => ("INCONCLUSIVE", String::new()),
    };
    checks.push(Check {
        name: "verdict",
        expected: manifest.verdict.clone(),
        actual: kind.to_owned(),
    });
    checks.push(Check {
        name: "witness exponent",
        expected: manifest.witness_exponent.clone(),
        actual: witness_exp,
    });

    let candidates: Vec<IrrepLabel> =
        manifest.candidates.iter().map(IrrepLabel::new).collect();
    let mut statuses: BTreeMap<IrrepLabel, CandidateStatus> = candidates
        .iter()
        .map(|l| (l.clone(), CandidateStatus::Untested))
        .collect();
    statuses.insert(target.clone(), CandidateStatus::Tested(verdict.clone()));
    let classification = classify(&candidates, manifest.expected_count, &statuses)
        .map(|kept| join_labels(&kept))
        .unwrap_or_else(|e| format!("<{e}>"));
    checks.push(Check {
        name: "classification",
        expected: manifest.classification.join(" "),
        actual: classification.clone(),
    });

    let all_pass = checks.iter().all(Check::pass);
    match output {
        OutputMode::Text => {
            for check in &checks {
                if check.pass() {
                    println!("[ok]   {}: {}", check.name, check.actual);
                } else {
                    println!(
                        "[FAIL] {}: expected {}, got {}",
                        check.name, check.expected, check.actual
                    );
                }
            }
            println!("{}", verdict.render(&target));
            if all_pass {
                println!("classification: {classification}");
            }
        }
        OutputMode::MachineReadable => print_doc(&json!({
            "command": "verify-e8",
            "c": c.to_string(),
            "checks": checks.iter().map(|check| json!({
                "name": check.name,
                "expected": check.expected,
                "actual": check.actual,
                "pass": check.pass(),
            })).collect::<Vec<_>>(),
            "verdict": verdict_json(&verdict),
            "classification": if all_pass {
                json!(classification.split(' ').collect::<Vec<_>>())
            } else {
                json!(null)
            },
            "pass": all_pass,
        })),
    }
    Ok(if all_pass { 0 } else { 5 })
}

fn render_manifest_expansion(manifest: &ExpectedManifest) -> Result<String, CliError> {
    let mut terms = Vec::new();
    for (coeff, label) in &manifest.expansion {
        let coeff: BigInt = coeff.parse().map_err(|_| CliError {
            code: 2,
            message: format!("manifest expansion coefficient {coeff:?} is not an integer"),
        })?;
        terms.push((coeff, IrrepLabel::new(label.clone())));
    }
    let valid_below = if manifest.valid_below == "inf" {
        UpperBound::Infinite
    } else {
        UpperBound::Finite(parse_rat(&manifest.valid_below).map_err(|e| CliError {
            code: 2,
            message: format!("manifest valid_below: {e}"),
        })?)
    };
    Ok(GrothExpansion {
        target: IrrepLabel::new(manifest.target.clone()),
        terms,
        valid_below,
    }
    .to_string())
}
