//! `aura` — command-line interface over the aura-topology library.
//!
//! Exit codes: 0 on success, 1 when a validation or property check fails,
//! 2 on usage or parse errors.

mod deploy;
mod document;
mod report;

use aura_topology::classes::{classify_set, enumerate_class, ClassName};
use aura_topology::props::{run_suite, SuiteConfig};
use aura_topology::rough::{approximate, refinement_report};
use aura_topology::separation::separation_profile;
use aura_topology::spread::{apply_distancing, apply_quarantine, spread_components, spread_trace};
use aura_topology::{
    coverage_report, fixture, fixture_names, AuraSpace, Fixture, GridSpace, SensorDeployment,
    SpaceMap,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use document::{decode_aura_table, decode_space, encode_space, parse_label_set, DecodedSpace};
use report::{Format, InputEcho, Report};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "aura",
    version,
    about = "Finite topological spaces with per-point scopes: operators, classifiers, approximations, spread, and coverage"
)]
struct Cli {
    /// Report rendering: indented or single-line
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Report)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Report,
    Compact,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Report => Format::Report,
            FormatArg::Compact => Format::Compact,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Space document to read
    file: Option<PathBuf>,
    /// Use a named fixture instead of a file
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a space document against the topology and scope axioms
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Closure, interior, trace, class flags, and approximation of one set
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated point labels
        #[arg(long)]
        set: String,
    },
    /// List every subset in one of the eleven open-set classes
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// One of: open, semi_open, pre_open, alpha_open, beta_open,
        /// a_open, a_semi_open, a_pre_open, a_alpha_open, a_beta_open, a_b_open
        #[arg(long)]
        class: String,
    },
    /// Separation axioms of the aura topology and the ambient topology
    Separation {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Validate a point mapping between two spaces and profile its continuity
    Map {
        /// Source space document
        source: Option<PathBuf>,
        /// Target space document
        target: Option<PathBuf>,
        /// Pairs like a=x,b=y covering every source point
        #[arg(long)]
        mapping: String,
        #[arg(long, conflicts_with = "source")]
        source_fixture: Option<String>,
        #[arg(long, conflicts_with = "target")]
        target_fixture: Option<String>,
    },
    /// Rough-set approximation of a target set, optionally compared under a refined scope
    Rough {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        set: String,
        /// Document holding the refined space
        #[arg(long)]
        refined: Option<PathBuf>,
        #[arg(long, conflicts_with = "refined")]
        refined_fixture: Option<String>,
    },
    /// Trace forward spread from a seed set, after optional interventions
    Spread {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated labels of the initially affected points
        #[arg(long)]
        seed_set: String,
        /// Points whose aura collapses to themselves
        #[arg(long)]
        quarantine: Option<String>,
        /// TOML file with an [aura] table of pointwise-smaller auras
        #[arg(long)]
        distancing: Option<PathBuf>,
    },
    /// Grid coverage analysis of a sensor deployment
    Sensor {
        /// Deployment document to read
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        fixture: Option<String>,
        /// Target rectangle x0,y0,x1,y1
        #[arg(long)]
        target: String,
    },
    /// List fixtures, print one as a document, or write them all out
    Fixtures {
        /// Print the named fixture as a document
        #[arg(long)]
        show: Option<String>,
        /// Write every fixture document into a directory
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run the seeded property suite over generated spaces, maps, and refinements
    Fuzz {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: u64,
        /// Largest universe size to generate (2 to 8)
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
    },
}

/// Usage and parse problems exit with 2; failed checks exit with 1.
enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    fn usage(e: impl ToString) -> CliError {
        CliError::Usage(e.to_string())
    }

    fn failed(e: impl ToString) -> CliError {
        CliError::Failed(e.to_string())
    }
}

type CliResult = Result<(String, bool), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.into();
    match run(cli.command, format) {
        Ok((text, ok)) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, format: Format) -> CliResult {
    match command {
        Command::Validate { input } => cmd_validate(input, format),
        Command::Analyze { input, set } => cmd_analyze(input, &set, format),
        Command::Enumerate { input, class } => cmd_enumerate(input, &class, format),
        Command::Separation { input } => cmd_separation(input, format),
        Command::Map {
            source,
            target,
            mapping,
            source_fixture,
            target_fixture,
        } => cmd_map(source, target, &mapping, source_fixture, target_fixture, format),
        Command::Rough {
            input,
            set,
            refined,
            refined_fixture,
        } => cmd_rough(input, &set, refined, refined_fixture, format),
        Command::Spread {
            input,
            seed_set,
            quarantine,
            distancing,
        } => cmd_spread(input, &seed_set, quarantine, distancing, format),
        Command::Sensor {
            file,
            fixture,
            target,
        } => cmd_sensor(file, fixture, &target, format),
        Command::Fixtures { show, emit } => cmd_fixtures(show, emit, format),
        Command::Fuzz { seed, cases, max_n } => cmd_fuzz(seed, cases, max_n, format),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

/// Loads a decoded (possibly invalid) space plus its input echo.
fn load_decoded(input: &InputArgs) -> Result<(DecodedSpace, InputEcho), CliError> {
    match (&input.file, &input.fixture) {
        (Some(path), None) => {
            let text = read_file(path)?;
            let decoded = decode_space(&text).map_err(CliError::usage)?;
            Ok((decoded, InputEcho::new(format!("file:{}", path.display()), text.as_bytes())))
        }
        (None, Some(name)) => {
            let space = aura_topology::fixture_space(name).map_err(CliError::usage)?;
            let text = encode_space(&space, Some(name), None).map_err(CliError::usage)?;
            let decoded = decode_space(&text).map_err(CliError::usage)?;
            Ok((decoded, InputEcho::new(format!("fixture:{name}"), text.as_bytes())))
        }
        _ => Err(CliError::usage(
            "provide exactly one input: a document path or --fixture NAME",
        )),
    }
}

/// Loads a space that must be valid.
fn load_space(input: &InputArgs) -> Result<(AuraSpace, InputEcho), CliError> {
    let (decoded, echo) = load_decoded(input)?;
    let space = decoded.into_space().map_err(CliError::failed)?;
    Ok((space, echo))
}

fn load_space_from(path: Option<PathBuf>, fixture_name: Option<String>) -> Result<(AuraSpace, InputEcho), CliError> {
    load_space(&InputArgs {
        file: path,
        fixture: fixture_name,
    })
}

fn cmd_validate(input: InputArgs, format: Format) -> CliResult {
    let (decoded, echo) = load_decoded(&input)?;

    #[derive(Serialize)]
    struct ValidateResult {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        description: Option<String>,
        points: usize,
        valid: bool,
        violations: Vec<document::Violation>,
    }

    let violations = decoded.violations();
    let valid = violations.is_empty();
    let report = Report {
        command: "validate".into(),
        inputs: vec![echo],
        ok: valid,
        result: ValidateResult {
            name: decoded.name.clone(),
            description: decoded.description.clone(),
            points: decoded.topology.universe_size(),
            valid,
            violations,
        },
    };
    Ok((report.render(format), valid))
}

fn cmd_analyze(input: InputArgs, set_text: &str, format: Format) -> CliResult {
    let (space, echo) = load_space(&input)?;
    let set = parse_label_set(&space, set_text).map_err(CliError::usage)?;

    #[derive(Serialize)]
    struct AnalyzeResult {
        set: Vec<String>,
        aura_closure: Vec<String>,
        aura_interior: Vec<String>,
        closure_trace: report::TraceJson,
        classes: report::ClassProfileJson,
        approximation: report::ApproximationJson,
    }

    let result = AnalyzeResult {
        set: report::labels_of(&space, &set),
        aura_closure: report::labels_of(&space, &space.aura_closure(&set)),
        aura_interior: report::labels_of(&space, &space.aura_interior(&set)),
        closure_trace: report::closure_trace_json(&space, &space.closure_trace(&set)),
        classes: classify_set(&space, &set).into(),
        approximation: report::approximation_json(&space, &approximate(&space, &set)),
    };
    let report = Report {
        command: "analyze".into(),
        inputs: vec![echo],
        ok: true,
        result,
    };
    Ok((report.render(format), true))
}

fn cmd_enumerate(input: InputArgs, class_text: &str, format: Format) -> CliResult {
    let class: ClassName = class_text.parse().map_err(CliError::usage)?;
    let (space, echo) = load_space(&input)?;
    let members = enumerate_class(&space, class).map_err(CliError::failed)?;

    #[derive(Serialize)]
    struct EnumerateResult {
        class: String,
        count: usize,
        members: Vec<Vec<String>>,
    }

    let result = EnumerateResult {
        class: class.to_string(),
        count: members.len(),
        members: members.iter().map(|m| report::labels_of(&space, m)).collect(),
    };
    let report = Report {
        command: "enumerate".into(),
        inputs: vec![echo],
        ok: true,
        result,
    };
    Ok((report.render(format), true))
}

fn cmd_separation(input: InputArgs, format: Format) -> CliResult {
    let (space, echo) = load_space(&input)?;
    let profile = separation_profile(&space).map_err(CliError::failed)?;
    let report = Report {
        command: "separation".into(),
        inputs: vec![echo],
        ok: true,
        result: report::separation_json(&space, &profile),
    };
    Ok((report.render(format), true))
}

fn parse_mapping(
    source: &AuraSpace,
    target: &AuraSpace,
    text: &str,
) -> Result<Vec<usize>, CliError> {
    let source_labels = source.topology().labels().unwrap().to_vec();
    let target_labels = target.topology().labels().unwrap().to_vec();
    let mut mapping: Vec<Option<usize>> = vec![None; source_labels.len()];
    for pair in text.split(',') {
        let (from, to) = pair
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("bad mapping entry `{pair}`; use from=to")))?;
        let from_index = source_labels
            .iter()
            .position(|l| l == from.trim())
            .ok_or_else(|| CliError::usage(format!("unknown source label `{from}`")))?;
        let to_index = target_labels
            .iter()
            .position(|l| l == to.trim())
            .ok_or_else(|| CliError::usage(format!("unknown target label `{to}`")))?;
        if mapping[from_index].is_some() {
            return Err(CliError::usage(format!("source label `{from}` mapped twice")));
        }
        mapping[from_index] = Some(to_index);
    }
    mapping
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                CliError::usage(format!("source point `{}` has no image", source_labels[i]))
            })
        })
        .collect()
}

fn cmd_map(
    source_path: Option<PathBuf>,
    target_path: Option<PathBuf>,
    mapping_text: &str,
    source_fixture: Option<String>,
    target_fixture: Option<String>,
    format: Format,
) -> CliResult {
    let (source, source_echo) = load_space_from(source_path, source_fixture)?;
    let (target, target_echo) = load_space_from(target_path, target_fixture)?;
    let mapping = parse_mapping(&source, &target, mapping_text)?;
    let map = SpaceMap::new(source.clone(), target.clone(), mapping);
    let violations: Vec<String> = map.validate().iter().map(|v| v.to_string()).collect();
    let profile = map.continuity_profile().map_err(CliError::failed)?;

    #[derive(Serialize)]
    struct MapResult {
        mapping: Vec<(String, String)>,
        valid: bool,
        violations: Vec<String>,
        continuity: report::ContinuityJson,
    }

    let source_labels = source.topology().labels().unwrap();
    let target_labels = target.topology().labels().unwrap();
    let result = MapResult {
        mapping: map
            .mapping()
            .iter()
            .enumerate()
            .map(|(i, &j)| (source_labels[i].clone(), target_labels[j].clone()))
            .collect(),
        valid: violations.is_empty(),
        violations,
        continuity: profile.into(),
    };
    let report = Report {
        command: "map".into(),
        inputs: vec![source_echo, target_echo],
        ok: true,
        result,
    };
    Ok((report.render(format), true))
}

fn cmd_rough(
    input: InputArgs,
    set_text: &str,
    refined: Option<PathBuf>,
    refined_fixture: Option<String>,
    format: Format,
) -> CliResult {
    let (space, echo) = load_space(&input)?;
    let set = parse_label_set(&space, set_text).map_err(CliError::usage)?;
    let mut inputs = vec![echo];

    #[derive(Serialize)]
    struct RefinementJson {
        coarse: report::ApproximationJson,
        fine: report::ApproximationJson,
        lower_grows: bool,
        upper_shrinks: bool,
        boundary_shrinks: bool,
    }

    #[derive(Serialize)]
    struct RoughResult {
        set: Vec<String>,
        approximation: report::ApproximationJson,
        #[serde(skip_serializing_if = "Option::is_none")]
        refinement: Option<RefinementJson>,
    }

    let refinement = if refined.is_some() || refined_fixture.is_some() {
        let (fine, fine_echo) = load_space_from(refined, refined_fixture)?;
        inputs.push(fine_echo);
        let comparison = refinement_report(&space, &fine, &set).map_err(CliError::failed)?;
        Some(RefinementJson {
            coarse: report::approximation_json(&space, &comparison.coarse),
            fine: report::approximation_json(&fine, &comparison.fine),
            lower_grows: comparison.lower_grows,
            upper_shrinks: comparison.upper_shrinks,
            boundary_shrinks: comparison.boundary_shrinks,
        })
    } else {
        None
    };

    let result = RoughResult {
        set: report::labels_of(&space, &set),
        approximation: report::approximation_json(&space, &approximate(&space, &set)),
        refinement,
    };
    let report = Report {
        command: "rough".into(),
        inputs,
        ok: true,
        result,
    };
    Ok((report.render(format), true))
}

fn cmd_spread(
    input: InputArgs,
    seed_text: &str,
    quarantine: Option<String>,
    distancing: Option<PathBuf>,
    format: Format,
) -> CliResult {
    let (space, echo) = load_space(&input)?;
    let seed = parse_label_set(&space, seed_text).map_err(CliError::usage)?;
    let mut inputs = vec![echo];

    let mut effective = space.clone();
    let quarantined = match &quarantine {
        Some(text) => {
            let q = parse_label_set(&space, text).map_err(CliError::usage)?;
            effective = apply_quarantine(&effective, &q).map_err(CliError::failed)?;
            Some(report::labels_of(&space, &q))
        }
        None => None,
    };
    let distanced = match &distancing {
        Some(path) => {
            let text = read_file(path)?;
            inputs.push(InputEcho::new(
                format!("file:{}", path.display()),
                text.as_bytes(),
            ));
            let replacement = decode_aura_table(&effective, &text).map_err(CliError::usage)?;
            effective = apply_distancing(&effective, replacement).map_err(CliError::failed)?;
            true
        }
        None => false,
    };

    #[derive(Serialize)]
    struct ComponentJson {
        reach: Vec<String>,
        generators: Vec<String>,
    }

    #[derive(Serialize)]
    struct SpreadResult {
        seed_set: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        quarantined: Option<Vec<String>>,
        distancing_applied: bool,
        trace: report::SpreadTraceJson,
        components: Vec<ComponentJson>,
    }

    let trace = spread_trace(&effective, &seed);
    let result = SpreadResult {
        seed_set: report::labels_of(&space, &seed),
        quarantined,
        distancing_applied: distanced,
        trace: report::spread_trace_json(&effective, &trace),
        components: spread_components(&effective)
            .iter()
            .map(|c| ComponentJson {
                reach: report::labels_of(&effective, &c.reach),
                generators: report::labels_of(&effective, &c.generators),
            })
            .collect(),
    };
    let report = Report {
        command: "spread".into(),
        inputs,
        ok: true,
        result,
    };
    Ok((report.render(format), true))
}

fn cmd_sensor(
    file: Option<PathBuf>,
    fixture_name: Option<String>,
    target_text: &str,
    format: Format,
) -> CliResult {
    let (deployment, echo): (SensorDeployment, InputEcho) = match (&file, &fixture_name) {
        (Some(path), None) => {
            let text = read_file(path)?;
            let deployment = deploy::decode_deployment(&text).map_err(CliError::usage)?;
            (deployment, InputEcho::new(format!("file:{}", path.display()), text.as_bytes()))
        }
        (None, Some(name)) => {
            let deployment = aura_topology::fixture_deployment(name).map_err(CliError::usage)?;
            let text = deploy::encode_deployment(&deployment).map_err(CliError::usage)?;
            (deployment, InputEcho::new(format!("fixture:{name}"), text.as_bytes()))
        }
        _ => {
            return Err(CliError::usage(
                "provide exactly one input: a deployment path or --fixture NAME",
            ))
        }
    };
    let rect = deploy::parse_rect(target_text).map_err(CliError::usage)?;
    let grid = GridSpace::build(&deployment).map_err(CliError::failed)?;
    let target = grid.rect_points(&rect);
    let coverage = coverage_report(&grid, &target);

    #[derive(Serialize)]
    struct SensorResult {
        grid: GridJson,
        target: TargetJson,
        coverage: CoverageJson,
    }

    #[derive(Serialize)]
    struct GridJson {
        nx: usize,
        ny: usize,
        points: usize,
    }

    #[derive(Serialize)]
    struct TargetJson {
        rect: [f64; 4],
        count: usize,
        labels: Vec<String>,
    }

    #[derive(Serialize)]
    struct CoverageJson {
        full_coverage: bool,
        lower_count: usize,
        upper_count: usize,
        boundary_count: usize,
        lower: Vec<String>,
        upper: Vec<String>,
        boundary: Vec<String>,
    }

    let space = grid.space();
    let (nx, ny) = grid.dimensions();
    let approx = &coverage.approximation;
    let result = SensorResult {
        grid: GridJson {
            nx,
            ny,
            points: grid.universe_size(),
        },
        target: TargetJson {
            rect: [rect.x0, rect.y0, rect.x1, rect.y1],
            count: target.len(),
            labels: report::labels_of(space, &target),
        },
        coverage: CoverageJson {
            full_coverage: coverage.full_coverage,
            lower_count: approx.lower.len(),
            upper_count: approx.upper.len(),
            boundary_count: approx.boundary.len(),
            lower: report::labels_of(space, &approx.lower),
            upper: report::labels_of(space, &approx.upper),
            boundary: report::labels_of(space, &approx.boundary),
        },
    };
    let report = Report {
        command: "sensor".into(),
        inputs: vec![echo],
        ok: true,
        result,
    };
    Ok((report.render(format), true))
}

fn fixture_document(name: &str) -> Result<String, CliError> {
    let description = fixture_names()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, d)| d.to_string());
    match fixture(name).map_err(CliError::usage)? {
        Fixture::Space(space) => {
            encode_space(&space, Some(name), description.as_deref()).map_err(CliError::usage)
        }
        Fixture::Deployment(deployment) => {
            deploy::encode_deployment(&deployment).map_err(CliError::usage)
        }
    }
}

fn cmd_fixtures(show: Option<String>, emit: Option<PathBuf>, format: Format) -> CliResult {
    if let Some(name) = show {
        return Ok((fixture_document(&name)?, true));
    }

    #[derive(Serialize)]
    struct FixtureJson {
        name: String,
        description: String,
        kind: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        written: Option<String>,
    }

    let mut entries = Vec::new();
    for (name, description) in fixture_names() {
        let kind = match fixture(name).map_err(CliError::usage)? {
            Fixture::Space(_) => "space",
            Fixture::Deployment(_) => "deployment",
        };
        let written = match &emit {
            Some(dir) => {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CliError::usage(format!("cannot create {}: {e}", dir.display())))?;
                let path = dir.join(format!("{name}.toml"));
                std::fs::write(&path, fixture_document(name)?)
                    .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
                Some(path.display().to_string())
            }
            None => None,
        };
        entries.push(FixtureJson {
            name: name.to_string(),
            description: description.to_string(),
            kind: kind.to_string(),
            written,
        });
    }

    #[derive(Serialize)]
    struct FixturesResult {
        fixtures: Vec<FixtureJson>,
    }

    let report = Report {
        command: "fixtures".into(),
        inputs: Vec::new(),
        ok: true,
        result: FixturesResult { fixtures: entries },
    };
    Ok((report.render(format), true))
}

fn cmd_fuzz(seed: u64, cases: u64, max_n: usize, format: Format) -> CliResult {
    if cases < 1 {
        return Err(CliError::usage("cases must be at least 1"));
    }
    if !(2..=8).contains(&max_n) {
        return Err(CliError::usage("max-n must lie between 2 and 8"));
    }
    let config = SuiteConfig::standard(seed, cases, max_n);
    let outcomes = run_suite(&config);

    #[derive(Serialize)]
    struct CounterexampleJson {
        case: u64,
        detail: String,
        space_document: String,
    }

    #[derive(Serialize)]
    struct PropertyJson {
        name: String,
        cases: u64,
        passed: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<CounterexampleJson>,
    }

    #[derive(Serialize)]
    struct FuzzResult {
        seed: u64,
        cases: u64,
        map_cases: u64,
        refinement_cases: u64,
        max_n: usize,
        all_passed: bool,
        properties: Vec<PropertyJson>,
    }

    let mut properties = Vec::new();
    let mut all_passed = true;
    for outcome in &outcomes {
        all_passed &= outcome.passed();
        let counterexample = match &outcome.counterexample {
            Some(ce) => Some(CounterexampleJson {
                case: ce.case,
                detail: ce.detail.clone(),
                space_document: encode_space(&ce.space, Some("counterexample"), None)
                    .map_err(CliError::failed)?,
            }),
            None => None,
        };
        properties.push(PropertyJson {
            name: outcome.name.to_string(),
            cases: outcome.cases,
            passed: outcome.passed(),
            counterexample,
        });
    }

    let report = Report {
        command: "fuzz".into(),
        inputs: Vec::new(),
        ok: all_passed,
        result: FuzzResult {
            seed,
            cases,
            map_cases: config.map_cases,
            refinement_cases: config.refinement_cases,
            max_n,
            all_passed,
            properties,
        },
    };
    Ok((report.render(format), all_passed))
}
