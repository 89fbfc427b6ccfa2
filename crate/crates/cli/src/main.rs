//! Command-line surface over the crystal library: insertion maps, crystal
//! operators, Demazure enumerations, identity verification runs, plane
//! partitions, and DOT graph dumps.  Output is compact JSON by default
//! (sorted keys throughout, so identical inputs give identical bytes) or
//! human-oriented text with `--pretty`.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matrix_crystal::characters::{
    cauchy_sides, demazure_character, symmetric_cauchy_sides, Vars, WeightPolynomial,
};
use matrix_crystal::crystal::{Alphabet, Dir, Weight};
use matrix_crystal::demazure::{
    flagged_folded, flagged_pairs, folded_closure, matrix_closure, GrassmannianElement, Group,
};
use matrix_crystal::matrix::{FoldedMatrix, SparseMatrix};
use matrix_crystal::pp::{self, PlanePartition};
use matrix_crystal::shapes::{partitions_in_box, Partition, SkewShape};
use matrix_crystal::tableau::{self, Orientation};
use matrix_crystal::verma::BiTableau;

#[derive(Parser)]
#[command(name = "mcrystal", version, about = "Crystal structures on integer matrices")]
struct Cli {
    /// Emit human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for series arithmetic.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insertion correspondence between matrices and tableau pairs.
    #[command(subcommand)]
    Rsk(RskCmd),
    /// Crystal operators and bounded closures.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// Demazure sets attached to a shape.
    #[command(subcommand)]
    Demazure(DemazureCmd),
    /// Identity verification runs.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Plane partitions and their generating series.
    #[command(subcommand)]
    Pp(PpCmd),
    /// Graph dumps.
    #[command(subcommand)]
    Graph(GraphCmd),
}

#[derive(Args)]
struct MatrixInput {
    /// Dense rows as JSON, e.g. '[[1,0,1],[2,1,0],[0,2,0]]'.
    #[arg(long)]
    matrix: Option<String>,
    /// Read the payload from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum RskCmd {
    /// Insert a matrix into its tableau pair.
    Forward(MatrixInput),
    /// Recover the matrix of a tableau pair.
    Inverse {
        /// Pair as JSON with fields "s" and "t".
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum DirArg {
    Raise,
    Lower,
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Apply one operator to a matrix.
    Apply {
        #[command(flatten)]
        input: MatrixInput,
        /// Operator index.
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        #[arg(long, value_enum)]
        dir: DirArg,
    },
    /// Every matrix reachable from zero by lowering within the window.
    Closure {
        /// Operators with |index| at most this bound participate.
        #[arg(long)]
        window: u32,
        #[arg(long)]
        sum_bound: u64,
    },
}

#[derive(Subcommand)]
enum DemazureCmd {
    /// Test whether a matrix lies in the set of a shape.
    Membership {
        /// Partition as a comma list, e.g. 2,1.
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        input: MatrixInput,
        /// Fold parameter for the symmetric variant.
        #[arg(long)]
        fold: Option<u32>,
    },
    /// Enumerate the whole set up to an entry-sum bound.
    Generate {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        sum_bound: u64,
        #[arg(long)]
        fold: Option<u32>,
    },
    /// Enumerate the flagged tableau image up to a cell bound.
    Tw {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        sum_bound: u64,
        #[arg(long)]
        fold: Option<u32>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Flagged Cauchy identity for one shape.
    Cauchy {
        #[arg(long)]
        shape: String,
        /// Number of variables on each side.
        #[arg(long)]
        vars: usize,
        /// Total-degree truncation.
        #[arg(long)]
        cap: u32,
    },
    /// Level character against the operator formula.
    DemazureChar {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        level: u32,
    },
    /// Norm counts against the product formulas.
    Macmahon {
        #[arg(long)]
        bound: u32,
        /// Entry ceiling; leave out for the unbounded family.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Symmetric Cauchy identity for one folded shape.
    Symmetric {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        fold: u32,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        cap: u32,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum FamilyArg {
    All,
    Bounded,
    Shape,
    Symmetric,
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Norm,
    Trace,
}

#[derive(Subcommand)]
enum PpCmd {
    /// Convert a matrix to its plane partition or back.
    Convert {
        /// Dense matrix rows as JSON.
        #[arg(long)]
        matrix: Option<String>,
        /// Plane partition rows as JSON, e.g. '[[3,1],[1]]'.
        #[arg(long)]
        pp: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Payload kind when reading from --file.
        #[arg(long, value_enum)]
        kind: Option<ConvertKind>,
    },
    /// Generating series of a family.
    Gf {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Entry ceiling for the bounded family.
        #[arg(long)]
        n: Option<u32>,
        /// Containing shape for the shape family.
        #[arg(long)]
        shape: Option<String>,
        /// Fold parameter for the symmetric family.
        #[arg(long)]
        fold: Option<u32>,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Largest norm enumerated.
        #[arg(long)]
        cap: u32,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum ConvertKind {
    Matrix,
    Pp,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Bounded crystal graph in DOT format.
    Dot {
        /// Operators with |index| at most this bound draw edges.
        #[arg(long)]
        window: u32,
        #[arg(long)]
        sum_bound: u64,
        /// Restrict nodes to the set of this shape.
        #[arg(long)]
        shape: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().ok();
    }
    match run(cli.command, cli.pretty) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(inline: Option<&str>, file: Option<&Path>, flag: &str) -> CliResult<String> {
    match (inline, file) {
        (Some(_), Some(_)) => Err(usage(format!("{flag} and --file are mutually exclusive"))),
        (Some(text), None) => Ok(text.to_string()),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| usage(format!("--file {}: {e}", path.display()))),
        (None, None) => Err(usage(format!("{flag} is required, inline or via --file"))),
    }
}

impl MatrixInput {
    fn parse(&self) -> CliResult<SparseMatrix> {
        let text = load(self.matrix.as_deref(), self.file.as_deref(), "--matrix")?;
        parse_matrix(&text)
    }
}

fn parse_matrix(text: &str) -> CliResult<SparseMatrix> {
    let rows: Vec<Vec<u64>> =
        serde_json::from_str(text).map_err(|e| usage(format!("--matrix: {e}")))?;
    SparseMatrix::from_dense(&rows).map_err(|e| usage(format!("--matrix: {e}")))
}

fn parse_shape(text: &str) -> CliResult<Partition> {
    let parts = text
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|e| usage(format!("--shape: {e}")))?;
    Partition::new(parts).map_err(|e| usage(format!("--shape: {e}")))
}

fn element(shape: &str, fold: Option<u32>) -> CliResult<GrassmannianElement> {
    let shape = parse_shape(shape)?;
    let group = match fold {
        Some(epsilon) => Group::Folded(epsilon),
        None => Group::Unfolded,
    };
    GrassmannianElement::new(shape, group).map_err(|e| match fold {
        Some(_) => usage(format!("--fold: {e}")),
        None => usage(format!("--shape: {e}")),
    })
}

fn dense(a: &SparseMatrix) -> Vec<Vec<u64>> {
    (1..=a.max_row()).map(|i| (1..=a.max_col()).map(|j| a.get(i, j)).collect()).collect()
}

fn emit(pretty: bool, text: String, value: Value) {
    if pretty {
        println!("{text}");
    } else {
        println!("{value}");
    }
}

fn join_matrices(set: &BTreeSet<SparseMatrix>) -> String {
    set.iter().map(SparseMatrix::to_string).collect::<Vec<_>>().join("\n\n")
}

fn run(command: Command, pretty: bool) -> CliResult<()> {
    match command {
        Command::Rsk(RskCmd::Forward(input)) => {
            let a = input.parse()?;
            let pair = BiTableau::from_matrix(&a);
            emit(
                pretty,
                format!("{}\n\n{}", pair.s().pretty(), pair.t().pretty()),
                serde_json::to_value(&pair).expect("pairs serialize"),
            );
        }
        Command::Rsk(RskCmd::Inverse { pair, file }) => {
            let text = load(pair.as_deref(), file.as_deref(), "--pair")?;
            let pair: BiTableau =
                serde_json::from_str(&text).map_err(|e| usage(format!("--pair: {e}")))?;
            let a = pair.matrix();
            emit(pretty, a.to_string(), json!(dense(&a)));
        }
        Command::Crystal(CrystalCmd::Apply { input, index, dir }) => {
            let a = input.parse()?;
            let dir = match dir {
                DirArg::Raise => Dir::Raise,
                DirArg::Lower => Dir::Lower,
            };
            match a.apply(index, dir) {
                Some(b) => emit(pretty, b.to_string(), json!({ "result": dense(&b) })),
                None => emit(pretty, "annihilated".to_string(), json!({ "result": null })),
            }
        }
        Command::Crystal(CrystalCmd::Closure { window, sum_bound }) => {
            let range = -(window as i64)..=window as i64;
            let set = SparseMatrix::closure_from_zero(range, sum_bound);
            let listed: Vec<Vec<Vec<u64>>> = set.iter().map(dense).collect();
            emit(pretty, join_matrices(&set), json!({ "count": set.len(), "matrices": listed }));
        }
        Command::Demazure(DemazureCmd::Membership { shape, input, fold }) => {
            let w = element(&shape, fold)?;
            let a = input.parse()?;
            let member = match fold {
                Some(epsilon) => {
                    let m = FoldedMatrix::new(a, epsilon)
                        .map_err(|e| usage(format!("--matrix: {e}")))?;
                    w.contains_folded(&m).expect("groups were matched above")
                }
                None => w.contains_matrix(&a),
            };
            emit(
                pretty,
                if member { "member".to_string() } else { "not a member".to_string() },
                json!({ "member": member }),
            );
        }
        Command::Demazure(DemazureCmd::Generate { shape, sum_bound, fold }) => {
            let w = element(&shape, fold)?;
            let set = match fold {
                Some(epsilon) => folded_closure(&w.canonical_word(), epsilon, sum_bound)
                    .expect("the word is nonnegative for folded shapes")
                    .iter()
                    .map(|m| m.base().clone())
                    .collect(),
                None => matrix_closure(&w.canonical_word(), sum_bound),
            };
            let listed: Vec<Vec<Vec<u64>>> = set.iter().map(dense).collect();
            emit(pretty, join_matrices(&set), json!({ "count": set.len(), "matrices": listed }));
        }
        Command::Demazure(DemazureCmd::Tw { shape, sum_bound, fold }) => {
            let w = element(&shape, fold)?;
            match fold {
                Some(_) => {
                    let set = flagged_folded(&w, sum_bound)
                        .map_err(|e| usage(format!("--shape: {e}")))?;
                    let text = set
                        .iter()
                        .map(|t| t.pretty())
                        .collect::<Vec<_>>()
                        .join("\n\n");
                    emit(
                        pretty,
                        text,
                        json!({
                            "count": set.len(),
                            "tableaux": serde_json::to_value(set.iter().collect::<Vec<_>>())
                                .expect("tableaux serialize"),
                        }),
                    );
                }
                None => {
                    let set =
                        flagged_pairs(&w, sum_bound).map_err(|e| usage(format!("--shape: {e}")))?;
                    let text = set
                        .iter()
                        .map(|p| format!("{}\n\n{}", p.s().pretty(), p.t().pretty()))
                        .collect::<Vec<_>>()
                        .join("\n\n---\n\n");
                    emit(
                        pretty,
                        text,
                        json!({
                            "count": set.len(),
                            "pairs": serde_json::to_value(set.iter().collect::<Vec<_>>())
                                .expect("pairs serialize"),
                        }),
                    );
                }
            }
        }
        Command::Verify(VerifyCmd::Cauchy { shape, vars, cap }) => {
            let w = element(&shape, None)?;
            let vars = Vars { x: vars, y: vars, cap };
            let (lhs, rhs) = cauchy_sides(&w, vars).map_err(|e| usage(format!("--vars: {e}")))?;
            if lhs != rhs {
                return Err(Failure::Verification("the Cauchy sides differ".to_string()));
            }
            emit(
                pretty,
                format!("OK\nlhs {lhs}\nrhs {rhs}"),
                json!({
                    "status": "ok",
                    "lhs": serde_json::to_value(&lhs).expect("series serialize"),
                    "rhs": serde_json::to_value(&rhs).expect("series serialize"),
                }),
            );
        }
        Command::Verify(VerifyCmd::DemazureChar { shape, level }) => {
            let w = element(&shape, None)?;
            let enumerated = level_pair_character(&w, level);
            let shifted = demazure_character(&w, level as i64)
                .expect("unfolded characters always evaluate")
                .shifted(&(Weight::level(level as i64) * -1));
            if enumerated != shifted {
                return Err(Failure::Verification(
                    "the enumeration character differs from the operator formula".to_string(),
                ));
            }
            emit(
                pretty,
                format!("OK ({} terms)", enumerated.len()),
                json!({ "status": "ok", "terms": enumerated.len() }),
            );
        }
        Command::Verify(VerifyCmd::Macmahon { bound, n }) => {
            let (family, product) = match n {
                Some(n) => (pp::Family::all().capped(n), pp::macmahon_bounded_series(n, bound)),
                None => (pp::Family::all(), pp::macmahon_series(bound)),
            };
            let counts = pp::norm_series(&family, bound);
            if counts != product {
                return Err(Failure::Verification(
                    "norm counts differ from the product formula".to_string(),
                ));
            }
            let digits: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            emit(
                pretty,
                format!("OK\n{}", digits.join(" ")),
                json!({ "status": "ok", "coefficients": digits }),
            );
        }
        Command::Verify(VerifyCmd::Symmetric { shape, fold, vars, cap }) => {
            let w = element(&shape, Some(fold))?;
            let vars = Vars { x: vars, y: vars, cap };
            let (lhs, rhs) =
                symmetric_cauchy_sides(&w, vars).map_err(|e| usage(format!("--vars: {e}")))?;
            if lhs != rhs {
                return Err(Failure::Verification("the symmetric sides differ".to_string()));
            }
            emit(
                pretty,
                format!("OK\nlhs {lhs}\nrhs {rhs}"),
                json!({
                    "status": "ok",
                    "lhs": serde_json::to_value(&lhs).expect("series serialize"),
                    "rhs": serde_json::to_value(&rhs).expect("series serialize"),
                }),
            );
        }
        Command::Pp(PpCmd::Convert { matrix, pp: stack, file, kind }) => {
            let (matrix, stack) = match (matrix, stack, &file, kind) {
                (m @ Some(_), None, None, _) | (m @ None, None, Some(_), Some(ConvertKind::Matrix)) =>
                    (Some(load(m.as_deref(), file.as_deref(), "--matrix")?), None),
                (None, p @ Some(_), None, _) | (None, p @ None, Some(_), Some(ConvertKind::Pp)) =>
                    (None, Some(load(p.as_deref(), file.as_deref(), "--pp")?)),
                (None, None, Some(_), None) =>
                    return Err(usage("--kind is required with --file")),
                _ => return Err(usage("give exactly one of --matrix or --pp")),
            };
            match (matrix, stack) {
                (Some(text), None) => {
                    let a = parse_matrix(&text)?;
                    let stack = pp::from_matrix(&a);
                    emit(
                        pretty,
                        format!("{:?}", stack.rows()),
                        serde_json::to_value(&stack).expect("plane partitions serialize"),
                    );
                }
                (None, Some(text)) => {
                    let stack: PlanePartition =
                        serde_json::from_str(&text).map_err(|e| usage(format!("--pp: {e}")))?;
                    let a = pp::to_matrix(&stack);
                    emit(pretty, a.to_string(), json!(dense(&a)));
                }
                _ => unreachable!("one side was selected above"),
            }
        }
        Command::Pp(PpCmd::Gf { family, n, shape, fold, mode, cap }) => {
            let family = build_family(family, n, shape.as_deref(), fold)?;
            match mode {
                ModeArg::Norm => {
                    let digits: Vec<String> =
                        pp::norm_series(&family, cap).iter().map(|c| c.to_string()).collect();
                    emit(
                        pretty,
                        digits.join(" "),
                        json!({ "mode": "norm", "coefficients": digits }),
                    );
                }
                ModeArg::Trace => {
                    let character = pp::trace_character(&family, cap);
                    let terms: Vec<Value> = character
                        .terms()
                        .map(|(w, c)| {
                            let traces: Vec<(i64, i64)> = pp::trace_vector(w)
                                .expect("family weights decompose")
                                .into_iter()
                                .collect();
                            json!({ "traces": traces, "count": c.to_string() })
                        })
                        .collect();
                    let text = terms
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join("\n");
                    emit(pretty, text, json!({ "mode": "trace", "terms": terms }));
                }
            }
        }
        Command::Graph(GraphCmd::Dot { window, sum_bound, shape }) => {
            let nodes = match shape {
                Some(text) => {
                    let w = element(&text, None)?;
                    matrix_closure(&w.canonical_word(), sum_bound)
                }
                None => SparseMatrix::closure_from_zero(
                    -(window as i64)..=window as i64,
                    sum_bound,
                ),
            };
            print!("{}", dot_graph(&nodes, window as i64, &color_overrides()?));
        }
    }
    Ok(())
}

/// Character of every flagged pair whose shape fits the level box.
fn level_pair_character(w: &GrassmannianElement, level: u32) -> WeightPolynomial {
    let flags = w.flags();
    let mut weights = Vec::new();
    for nu in partitions_in_box(flags.d as u32, level) {
        let skew = SkewShape::straight(nu);
        let ell = skew.outer().len();
        let left = tableau::flagged(
            Orientation::AntiNormal,
            Alphabet::NegativeDual,
            &skew,
            &flags.alpha[..ell],
        )
        .expect("flags are strictly decreasing");
        let right = tableau::flagged(
            Orientation::AntiNormal,
            Alphabet::Positive,
            &skew,
            &flags.beta[..ell],
        )
        .expect("flags are strictly decreasing");
        for s in &left {
            for t in &right {
                weights.push(s.weight() + t.weight());
            }
        }
    }
    WeightPolynomial::character(weights)
}

fn build_family(
    family: FamilyArg,
    n: Option<u32>,
    shape: Option<&str>,
    fold: Option<u32>,
) -> CliResult<pp::Family> {
    match family {
        FamilyArg::All => {
            if n.is_some() || shape.is_some() || fold.is_some() {
                return Err(usage("--family all takes no extra constraints"));
            }
            Ok(pp::Family::all())
        }
        FamilyArg::Bounded => {
            if shape.is_some() || fold.is_some() {
                return Err(usage("--family bounded takes only --n"));
            }
            let n = n.ok_or_else(|| usage("--n is required for --family bounded"))?;
            Ok(pp::Family::all().capped(n))
        }
        FamilyArg::Shape => {
            if n.is_some() || fold.is_some() {
                return Err(usage("--family shape takes only --shape"));
            }
            let text = shape.ok_or_else(|| usage("--shape is required for --family shape"))?;
            Ok(pp::Family::all().under(parse_shape(text)?))
        }
        FamilyArg::Symmetric => {
            if n.is_some() || shape.is_some() {
                return Err(usage("--family symmetric takes only --fold"));
            }
            let fold = fold.ok_or_else(|| usage("--fold is required for --family symmetric"))?;
            pp::Family::all().folded(fold).map_err(|e| usage(format!("--fold: {e}")))
        }
    }
}

fn color_overrides() -> CliResult<BTreeMap<i64, String>> {
    let Ok(raw) = std::env::var("GRAPH_DOT_COLORS") else {
        return Ok(BTreeMap::new());
    };
    let mut map = BTreeMap::new();
    for entry in raw.split(',').filter(|s| !s.trim().is_empty()) {
        let Some((idx, color)) = entry.split_once('=') else {
            return Err(usage(format!("GRAPH_DOT_COLORS: expected index=color, got {entry:?}")));
        };
        let idx = idx
            .trim()
            .parse::<i64>()
            .map_err(|e| usage(format!("GRAPH_DOT_COLORS: bad index {idx:?}: {e}")))?;
        map.insert(idx, color.trim().to_string());
    }
    Ok(map)
}

fn dot_graph(
    nodes: &BTreeSet<SparseMatrix>,
    window: i64,
    colors: &BTreeMap<i64, String>,
) -> String {
    const PALETTE: [&str; 9] = [
        "black",
        "crimson",
        "royalblue",
        "forestgreen",
        "darkorange",
        "purple",
        "saddlebrown",
        "teal",
        "magenta",
    ];
    let ids: BTreeMap<&SparseMatrix, usize> =
        nodes.iter().enumerate().map(|(k, a)| (a, k)).collect();
    let mut out = String::from(
        "digraph crystal {\n  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n",
    );
    for (a, k) in &ids {
        let label = a.to_string().replace('\n', "\\n");
        out += &format!("  n{k} [label=\"{label}\"];\n");
    }
    for (a, k) in &ids {
        for i in -window..=window {
            if let Some(b) = a.apply(i, Dir::Lower) {
                if let Some(kb) = ids.get(&b) {
                    let color = colors
                        .get(&i)
                        .map(String::as_str)
                        .unwrap_or(PALETTE[i.rem_euclid(PALETTE.len() as i64) as usize]);
                    out += &format!("  n{k} -> n{kb} [label=\"{i}\" color=\"{color}\"];\n");
                }
            }
        }
    }
    out + "}\n"
}
