//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code together with everything that would be written to stdout and
//! stderr, so the binary stays a thin wrapper and tests need no subprocess.
//!
//! Exit codes: `0` valid / passed, `1` property or validation failure,
//! `2` usage or parse error. Errors are reported as one line
//! `error: <code>: <message>`.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::attractor::{AttractorModel, MinimaxReport};
use crate::enumerate::{
    enumerate_with, property_harness_with, Engine, EnumerationConfig, DEFAULT_BOUND,
};
use crate::error::Error;
use crate::perm::{parse_permutation, IndexBase, SturmPermutation};
use crate::suspension::suspend_times;
use crate::svg::{render_svg, SvgStyle};
use crate::zeronum::{window_morse, window_z, MeanderWindow};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn ok(stdout: String) -> Self {
        CliOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_error(err: &Error) -> Self {
        CliOutcome {
            code: if err.is_usage() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", err.code(), err),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sturm",
    version,
    about = "Sturm permutations, meanders and their attractors"
)]
struct Cli {
    /// Read permutation input as 0-based values.
    #[arg(long, global = true)]
    zero_based_input: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PermInput {
    /// Permutation in one-line notation, whitespace or comma separated.
    #[arg(required = true, num_args = 1..)]
    permutation: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Filter,
    Backtrack,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Svg,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the dissipative, Morse and meander properties.
    Validate(PermInput),
    /// Morse vector, zero number matrix, connections and minimax reports as JSON.
    Analyze(PermInput),
    /// Target sets and minimax verdict for one unstable equilibrium.
    Minimax {
        #[command(flatten)]
        input: PermInput,
        /// Label of the base equilibrium.
        #[arg(long = "eq")]
        eq: usize,
    },
    /// Meander suspension.
    Suspend {
        #[command(flatten)]
        input: PermInput,
        #[arg(long, default_value_t = 1)]
        times: usize,
        /// Display the result 0-based.
        #[arg(long)]
        zero_based: bool,
    },
    /// Morse indices and zero numbers of a meander window.
    Window {
        #[arg(long, allow_hyphen_values = true)]
        anchor_morse: i64,
        /// Window labels 1..=L listed by increasing axis position.
        #[arg(long)]
        order: String,
    },
    /// List all Sturm permutations of size n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long)]
        zero_based: bool,
    },
    /// Meander drawing (SVG) or connection digraph (DOT).
    Render {
        #[command(flatten)]
        input: PermInput,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        #[arg(long, default_value_t = 40)]
        scale: u32,
        #[arg(long)]
        no_morse: bool,
    },
    /// Check every invariant over all Sturm permutations up to size n-max.
    Harness {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                CliOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutcome::ok(text)
            };
        }
    };
    let base = if cli.zero_based_input {
        IndexBase::Zero
    } else {
        IndexBase::One
    };
    match execute(cli.command, base) {
        Ok(outcome) => outcome,
        Err(err) => CliOutcome::from_error(&err),
    }
}

fn parse_input(input: &PermInput, base: IndexBase) -> Result<SturmPermutation, Error> {
    parse_permutation(&input.permutation.join(" "), base)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn list(values: impl IntoIterator<Item = impl ToString>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct AnalyzeReport {
    index_base: u8,
    n: usize,
    sigma: Vec<usize>,
    sigma_inverse: Vec<usize>,
    morse: Vec<i64>,
    z_matrix: Vec<Vec<i64>>,
    connections: Vec<(usize, usize)>,
    minimax: Vec<MinimaxReport>,
}

fn execute(command: Command, base: IndexBase) -> Result<CliOutcome, Error> {
    match command {
        Command::Validate(input) => {
            let p = parse_input(&input, base)?;
            let sturm = p.is_sturm();
            let mut out = String::new();
            let _ = writeln!(out, "dissipative: {}", p.is_dissipative());
            let _ = writeln!(out, "morse: {}", p.is_morse());
            let _ = writeln!(out, "meander: {}", p.is_meander());
            let _ = writeln!(out, "sturm: {sturm}");
            let _ = writeln!(out, "morse_vector: {}", p.morse_indices());
            Ok(CliOutcome {
                code: if sturm { 0 } else { 1 },
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::Analyze(input) => {
            let p = parse_input(&input, base)?;
            let model = AttractorModel::build(&p)?;
            let report = AnalyzeReport {
                index_base: 1,
                n: p.len(),
                sigma: p.map().to_vec(),
                sigma_inverse: p.inverse_map().to_vec(),
                morse: model.morse().as_slice().to_vec(),
                z_matrix: model.z().rows().to_vec(),
                connections: model.connections().iter().copied().collect(),
                minimax: model.minimax_reports(),
            };
            Ok(CliOutcome::ok(json(&report)))
        }
        Command::Minimax { input, eq } => {
            let p = parse_input(&input, base)?;
            let model = AttractorModel::build(&p)?;
            let report = model.minimax_report(eq)?;
            let code = if report.verdicts.passed() { 0 } else { 1 };
            Ok(CliOutcome {
                code,
                stdout: json(&report),
                stderr: String::new(),
            })
        }
        Command::Suspend {
            input,
            times,
            zero_based,
        } => {
            let p = parse_input(&input, base)?;
            let s = suspend_times(&p, times)?;
            let display = if zero_based {
                IndexBase::Zero
            } else {
                IndexBase::One
            };
            Ok(CliOutcome::ok(format!("{}\n", s.to_text(display))))
        }
        Command::Window {
            anchor_morse,
            order,
        } => {
            let labels = order
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        Error::InvalidWindow(format!("order token {t:?} is not a label"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let win = MeanderWindow::from_axis_order(&labels, anchor_morse)?;
            let morse = window_morse(&win)?;
            let z = window_z(&win)?;
            Ok(CliOutcome::ok(format!("morse: {}\n{}", list(morse), z)))
        }
        Command::Enumerate {
            n,
            count_only,
            engine,
            bound,
            zero_based,
        } => {
            let engine = match engine {
                EngineArg::Filter => Engine::Filter,
                EngineArg::Backtrack => Engine::Backtrack,
                EngineArg::Auto => Engine::Auto,
            };
            let perms = enumerate_with(n, &EnumerationConfig { bound, engine })?;
            if count_only {
                return Ok(CliOutcome::ok(format!("{}\n", perms.len())));
            }
            let display = if zero_based {
                IndexBase::Zero
            } else {
                IndexBase::One
            };
            let mut out = String::new();
            for p in &perms {
                out.push_str(&p.to_text(display));
                out.push('\n');
            }
            Ok(CliOutcome::ok(out))
        }
        Command::Render {
            input,
            format,
            scale,
            no_morse,
        } => {
            let p = parse_input(&input, base)?;
            let text = match format {
                RenderFormat::Svg => render_svg(
                    &p,
                    &SvgStyle {
                        scale,
                        show_morse: !no_morse,
                    },
                )?,
                RenderFormat::Dot => render_dot(&AttractorModel::build(&p)?),
            };
            Ok(CliOutcome::ok(text))
        }
        Command::Harness { n_max, bound } => {
            let report = property_harness_with(
                n_max,
                &EnumerationConfig {
                    bound,
                    engine: Engine::Auto,
                },
            )?;
            Ok(CliOutcome {
                code: if report.passed() { 0 } else { 1 },
                stdout: json(&report),
                stderr: String::new(),
            })
        }
    }
}

/// Connection digraph in Graphviz DOT: one node per label annotated with its
/// Morse index, one edge per connection.
pub fn render_dot(model: &AttractorModel) -> String {
    let graph = model.connection_graph();
    let mut out = String::from("digraph connections {\n");
    for node in &graph.nodes {
        let _ = writeln!(
            out,
            "  {} [label=\"{}\\ni={}\"];",
            node.label, node.label, node.morse
        );
    }
    for (j, k) in &graph.edges {
        let _ = writeln!(out, "  {j} -> {k};");
    }
    out.push_str("}\n");
    out
}
