//! Command-line front end.
//!
//! [`run`] parses arguments, executes one library call and returns the text
//! for stdout and stderr together with the exit code: 0 on success, 1 for a
//! domain error, 2 for malformed input or arguments.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use sixlines::atlas::atlas;
use sixlines::field::ParseError;
use sixlines::invariants::classify::{identify_class, resolve_for_kind};
use sixlines::invariants::{chirality_graph, report, signature, signature_spectrum};
use sixlines::io::{parse_lines6, parse_points, DocumentError, LinesDocument};
use sixlines::joins::{build_join, canonical_coarse, is_irreducible_join, Perm};
use sixlines::planar::{general_position_check, inseparability_graph, planar_kind, segre_permutation, SixPoints};
use sixlines::schlafli::{
    clebsch_lines, clebsch_schlafli_sixes, complementary_six, double_six, is_schlafli_six, schlafli_kind,
    segre_pentagrams, SchlafliWitness,
};
use sixlines::{Config, Error};

pub mod diagram;

#[derive(Parser, Debug)]
#[command(name = "sixlines", version, about = "Invariants of configurations of skew lines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the join configuration of a permutation.
    Join {
        #[arg(long)]
        perm: String,
        /// Full invariant report (six lines only).
        #[arg(long)]
        report: bool,
        /// Print the lines as a lines6 document instead of JSON.
        #[arg(long)]
        emit_coords: bool,
    },
    /// Invariant report of a lines6 file.
    Invariants {
        #[arg(long)]
        file: PathBuf,
    },
    /// Deformation class of a lines6 file.
    Classify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Schläfli six operations.
    Schlafli {
        #[arg(value_enum)]
        action: SchlafliAction,
        #[arg(long)]
        file: PathBuf,
    },
    /// Six points in the plane.
    Planar {
        #[arg(value_enum)]
        action: PlanarAction,
        #[arg(long)]
        points: PathBuf,
    },
    /// The 27 lines of the Clebsch diagonal cubic.
    Clebsch(ClebschArgs),
    /// Table of deformation classes.
    Atlas {
        #[arg(long, value_enum, default_value_t = AtlasFormat::Json)]
        format: AtlasFormat,
    },
    /// SVG or DOT drawings.
    Diagram(DiagramArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SchlafliAction {
    Check,
    Complement,
    Kind,
    Pentagram,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PlanarAction {
    Check,
    Graph,
    Kind,
    Pentagram,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AtlasFormat {
    Json,
    Md,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ClebschTarget {
    /// All 27 lines.
    #[arg(long)]
    list: bool,
    /// All Schläfli sixes among them.
    #[arg(long)]
    sixes: bool,
    /// The six at this position of the `--sixes` list, as a lines6 document.
    #[arg(long)]
    six: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ClebschArgs {
    #[command(flatten)]
    target: ClebschTarget,
    /// With `--sixes`, only the count per kind.
    #[arg(long, requires = "sixes")]
    census: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphKind {
    Chirality,
    Inseparability,
}

#[derive(Args, Debug)]
pub struct DiagramArgs {
    /// Broken-line diagram of a permutation.
    #[arg(long, conflicts_with_all = ["graph", "file"])]
    perm: Option<String>,
    /// Graph of a lines6 file (chirality) or a points file (inseparability).
    #[arg(long, value_enum, requires = "file")]
    graph: Option<GraphKind>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "dot")]
    svg: bool,
    #[arg(long)]
    dot: bool,
}

/// Result of one invocation.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(Error),
    Input(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Parse(p) => Failure::Input(parse_error_json(&p)),
            DocumentError::Invalid { line, error } => {
                Failure::Input(json!({"error": error.name(), "line": line, "message": error.to_string()}))
            }
        }
    }
}

fn parse_error_json(p: &ParseError) -> Value {
    json!({
        "error": "ParseError",
        "line": p.line,
        "column": p.column,
        "token": p.token,
        "message": p.message,
    })
}

type Run = Result<String, Failure>;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| {
        Failure::Input(json!({"error": "Io", "path": path.display().to_string(), "message": e.to_string()}))
    })
}

fn load_config(path: &Path) -> Result<Config, Failure> {
    Ok(parse_lines6(&read(path)?)?.to_config()?)
}

fn load_points(path: &Path) -> Result<SixPoints, Failure> {
    Ok(parse_points(&read(path)?)?.to_six()?)
}

fn parse_perm(text: &str) -> Result<Perm, Failure> {
    text.parse::<Perm>()
        .map_err(|e| Failure::Input(json!({"error": "InvalidPermutation", "token": text, "message": e.to_string()})))
}

fn join(perm: &str, with_report: bool, emit_coords: bool) -> Run {
    let sigma = parse_perm(perm)?;
    let c = build_join(&sigma);
    if emit_coords {
        return Ok(LinesDocument::from_config(&c).to_string());
    }
    let token = canonical_coarse(&sigma);
    let mut out = json!({
        "perm": sigma,
        "signature": signature(&c),
        "spectrum": signature_spectrum(&c).to_string(),
        "canonical": token.canonical,
        "coarse_canonical": token.coarse_canonical,
        "irreducible": is_irreducible_join(&sigma),
    });
    if with_report {
        out["report"] = serde_json::to_value(report(&c)?).expect("report serializes");
    }
    Ok(to_json(&out))
}

fn classify(c: &Config) -> Run {
    let ident = identify_class(c)?;
    let schlafli = is_schlafli_six(c)?.is_schlafli;
    let kind = if schlafli { Some(schlafli_kind(c)?) } else { None };
    let resolved = kind.and_then(|k| resolve_for_kind(&ident, k));
    Ok(to_json(&json!({
        "identification": ident,
        "label": ident.to_string(),
        "schlafli": schlafli,
        "kind": kind,
        "resolved": resolved,
    })))
}

fn witness_json(w: &SchlafliWitness) -> Value {
    let lines = |v: &[sixlines::projgeom::PluckerLine]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>();
    match w {
        SchlafliWitness::Transversals(v) => json!({"type": "transversals", "lines": lines(v)}),
        SchlafliWitness::NoTransversal { omitted } => json!({"type": "no_transversal", "omitted": omitted}),
        SchlafliWitness::CommonTransversals(v) => json!({"type": "common_transversals", "lines": lines(v)}),
        SchlafliWitness::CommonQuadric => json!({"type": "common_quadric"}),
    }
}

fn schlafli(action: SchlafliAction, c: &Config) -> Run {
    let out = match action {
        SchlafliAction::Check => {
            let check = is_schlafli_six(c)?;
            json!({"is_schlafli": check.is_schlafli, "witness": witness_json(&check.witness)})
        }
        SchlafliAction::Complement => {
            let d = double_six(c)?;
            json!({
                "meeting_pairs": d.meeting_pairs().len(),
                "complement": LinesDocument::from_config(&complementary_six(c)?).to_string(),
            })
        }
        SchlafliAction::Kind => json!({"kind": schlafli_kind(c)?}),
        SchlafliAction::Pentagram => json!({"pentagrams": segre_pentagrams(c)?}),
    };
    Ok(to_json(&out))
}

fn planar(action: PlanarAction, s: &SixPoints) -> Run {
    let out = match action {
        PlanarAction::Check => match general_position_check(s) {
            Ok(()) => json!({"general_position": true}),
            Err(v) => json!({"general_position": false, "violation": v, "message": v.to_string()}),
        },
        PlanarAction::Graph => {
            let g = inseparability_graph(s)?;
            json!({"degrees": g.degrees(), "edges": g.edges})
        }
        PlanarAction::Kind => json!({"kind": planar_kind(s)?}),
        PlanarAction::Pentagram => {
            let perms = (0..6).map(|r| segre_permutation(s, r)).collect::<Result<Vec<_>, _>>()?;
            let kind = planar_kind(s)?;
            json!({"pentagram": kind.pentagram(), "kind": kind, "role_permutations": perms})
        }
    };
    Ok(to_json(&out))
}

fn clebsch(args: &ClebschArgs) -> Run {
    if args.target.list {
        let lines: Vec<Value> = clebsch_lines()
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let lead = l
                    .coords()
                    .iter()
                    .find(|c| !c.is_zero())
                    .and_then(|c| c.inverse())
                    .expect("nonzero");
                let rational = l.coords().iter().all(|c| (c * &lead).as_rational().is_some());
                json!({"index": i, "plucker": l.to_string(), "rational": rational})
            })
            .collect();
        return Ok(to_json(&lines));
    }
    let sixes = clebsch_schlafli_sixes();
    if let Some(k) = args.target.six {
        let six = sixes.get(k).ok_or_else(|| {
            Failure::Input(json!({"error": "OutOfRange", "message": format!("there are {} sixes", sixes.len())}))
        })?;
        return Ok(LinesDocument::from_config(&six.config).to_string());
    }
    let rows = sixes
        .iter()
        .map(|s| {
            let kind = schlafli_kind(&s.config)?;
            let ident = identify_class(&s.config)?;
            Ok((s.indices, kind, ident))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    if args.census {
        let mut census: BTreeMap<String, usize> = BTreeMap::new();
        for (_, kind, _) in &rows {
            *census.entry(kind.to_string()).or_default() += 1;
        }
        return Ok(to_json(&json!({"total": rows.len(), "kinds": census})));
    }
    let out: Vec<Value> = rows
        .iter()
        .map(|(indices, kind, ident)| {
            json!({
                "indices": indices,
                "kind": kind,
                "class": ident.to_string(),
                "resolved": resolve_for_kind(ident, *kind).map(|c| c.to_string()),
            })
        })
        .collect();
    Ok(to_json(&out))
}

fn diagram_cmd(args: &DiagramArgs) -> Run {
    if let Some(p) = &args.perm {
        let sigma = parse_perm(p)?;
        return Ok(if args.dot {
            diagram::permutation_dot(&sigma)
        } else {
            diagram::permutation_svg(&sigma)
        });
    }
    let (Some(kind), Some(file)) = (args.graph, &args.file) else {
        return Err(Failure::Input(
            json!({"error": "Usage", "message": "give --perm, or --graph with --file"}),
        ));
    };
    let (prefix, name, edges) = match kind {
        GraphKind::Chirality => ("L", "chirality", chirality_graph(&load_config(file)?).edges),
        GraphKind::Inseparability => ("p", "inseparability", inseparability_graph(&load_points(file)?)?.edges),
    };
    let edges: Vec<(u8, u8)> = edges.into_iter().collect();
    Ok(if args.svg {
        diagram::graph_svg(prefix, 6, &edges)
    } else {
        diagram::graph_dot(name, prefix, 6, &edges)
    })
}

fn execute(cmd: &Command) -> Run {
    match cmd {
        Command::Join {
            perm,
            report,
            emit_coords,
        } => join(perm, *report, *emit_coords),
        Command::Invariants { file } => {
            let c = load_config(file)?;
            if c.len() == 6 {
                Ok(to_json(&report(&c)?))
            } else {
                Ok(to_json(&json!({
                    "lines": c.len(),
                    "signature": signature(&c),
                    "spectrum": signature_spectrum(&c).to_string(),
                })))
            }
        }
        Command::Classify { file } => classify(&load_config(file)?),
        Command::Schlafli { action, file } => schlafli(*action, &load_config(file)?),
        Command::Planar { action, points } => planar(*action, &load_points(points)?),
        Command::Clebsch(args) => clebsch(args),
        Command::Atlas { format } => {
            let a = atlas();
            Ok(match format {
                AtlasFormat::Json => {
                    let mut s = a.to_json();
                    s.push('\n');
                    s
                }
                AtlasFormat::Md => a.to_markdown(),
            })
        }
        Command::Diagram(args) => diagram_cmd(args),
    }
}

fn finish(result: Run) -> Outcome {
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: to_json(&json!({"error": e.name(), "message": e.to_string()})),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Input(v)) => Outcome {
            code: 2,
            stderr: format!("error: {}\n", v["message"].as_str().unwrap_or("invalid input")),
            stdout: to_json(&v),
        },
    }
}

/// Worker count from `SIXLINES_THREADS`, if set.
fn thread_count() -> Result<Option<usize>, Failure> {
    match std::env::var("SIXLINES_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::Input(
                json!({"error": "InvalidThreads", "token": v, "message": "SIXLINES_THREADS must be a positive integer"}),
            )),
        },
    }
}

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
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let threads = match thread_count() {
        Ok(t) => t,
        Err(f) => return finish(Err(f)),
    };
    match threads {
        None => finish(execute(&cli.command)),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => finish(pool.install(|| execute(&cli.command))),
            Err(e) => finish(Err(Failure::Input(
                json!({"error": "ThreadPool", "message": e.to_string()}),
            ))),
        },
    }
}
