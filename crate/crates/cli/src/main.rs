use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fullerene::error::Error;
use fullerene::pipeline::StageError;
use fullerene::{analyze_batch, validate_fullerene, AnalyzeOptions, FullereneGraph};
use fullerene_cli::format::{emit_planar_code, emit_rotation_text, parse_auto};
use fullerene_cli::report::ReportDocument;

// Exit codes: 0 certified pass, 1 validation failure, 2 pipeline/internal
// invariant failure, 3 budget exceeded.
const EXIT_VALIDATION: u8 = 1;
const EXIT_PIPELINE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "fullerene", about = "Perfect matchings in fullerene graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    PlanarCode,
    Rotation,
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every input graph is a fullerene.
    Validate {
        /// Input file; '-' or absent reads stdin.
        input: Option<PathBuf>,
    },
    /// Run the full pipeline and emit one report per input graph.
    Analyze {
        input: Option<PathBuf>,
        /// Run the exact Pfaffian matching count.
        #[arg(long = "exact-count", value_enum, default_value = "off")]
        exact_count: Switch,
        /// Materialization cap for switch enumeration.
        #[arg(long = "switch-cap", default_value_t = 1 << 20)]
        switch_cap: u64,
        /// Tie-order seed for the 4-coloring search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Exit 0 even when a degenerate patch was dropped.
        #[arg(long)]
        allow_uncertified: bool,
    },
    /// Exact number of perfect matchings of each input graph.
    Count {
        input: Option<PathBuf>,
    },
    /// Evaluate the lower-bound formulas at a vertex count.
    Bounds {
        p: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Emit a built-in fixture.
    Gen {
        /// dodecahedron, leapfrog, or leapfrog^k.
        #[arg(long)]
        fixture: String,
        #[arg(long, value_enum, default_value = "rotation")]
        output: GraphFormat,
    },
    /// Convert between planar_code and rotation text.
    Convert {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        to: GraphFormat,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

fn classify(err: &Error) -> u8 {
    match err {
        Error::SearchBudgetExceeded { .. } | Error::CapExceeded(_) => EXIT_BUDGET,
        Error::AsymmetricAdjacency { .. }
        | Error::LoopEdge(_)
        | Error::NonPlanarEmbedding { .. }
        | Error::NotCubic { .. }
        | Error::NotSimple(_)
        | Error::BadFaceSize { .. }
        | Error::PentagonCount(_)
        | Error::NotThreeConnected(..)
        | Error::BadVertexCount(_)
        | Error::ParseError { .. }
        | Error::TruncatedRecord(_)
        | Error::NeighborOutOfRange { .. }
        | Error::UnsupportedVertexCount(_) => EXIT_VALIDATION,
        _ => EXIT_PIPELINE,
    }
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<Vec<u8>> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read(p),
        _ => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn load_fullerenes(path: &Option<PathBuf>) -> Result<Vec<FullereneGraph>, Error> {
    let bytes = read_input(path).map_err(|e| Error::ParseError {
        line: 0,
        message: format!("cannot read input: {e}"),
    })?;
    parse_auto(&bytes)?.into_iter().map(validate_fullerene).collect()
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { input } => {
            let bytes = read_input(&input).map_err(|e| Error::ParseError {
                line: 0,
                message: format!("cannot read input: {e}"),
            })?;
            let graphs = parse_auto(&bytes)?;
            let mut failed = false;
            for (i, g) in graphs.into_iter().enumerate() {
                match validate_fullerene(g) {
                    Ok(f) => println!(
                        "graph {i}: fullerene, p={}, pentagons=12, hexagons={}",
                        f.p(),
                        f.hexagon_faces().len()
                    ),
                    Err(e) => {
                        println!("graph {i}: not a fullerene: {e}");
                        failed = true;
                    }
                }
            }
            Ok(if failed { ExitCode::from(EXIT_VALIDATION) } else { ExitCode::SUCCESS })
        }
        Command::Analyze { input, exact_count, switch_cap, seed, format, allow_uncertified } => {
            let graphs = load_fullerenes(&input)?;
            let opts = AnalyzeOptions {
                exact_count: matches!(exact_count, Switch::On),
                switch_cap,
                seed,
                color_budget: None,
            };
            let results = analyze_batch(&graphs, &opts);
            let mut code = ExitCode::SUCCESS;
            let stdout = std::io::stdout();
            for result in results {
                match result {
                    Ok(report) => {
                        let doc = ReportDocument::from(&report);
                        let rendered = match format {
                            OutputFormat::Json => {
                                format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
                            }
                            OutputFormat::Text => doc.to_text(),
                        };
                        stdout.lock().write_all(rendered.as_bytes()).ok();
                        if !report.certified && !allow_uncertified {
                            code = ExitCode::from(EXIT_PIPELINE);
                        }
                    }
                    Err(StageError { stage, source }) => {
                        eprintln!("error: stage {stage}: {source}");
                        code = ExitCode::from(classify(&source).max(EXIT_PIPELINE));
                    }
                }
            }
            Ok(code)
        }
        Command::Count { input } => {
            let graphs = load_fullerenes(&input)?;
            for g in &graphs {
                println!("{}", fullerene::count::count_perfect_matchings(g.graph())?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { p, format } => {
            let bounds = fullerene::lower_bounds(p)?;
            match format {
                OutputFormat::Json => {
                    let doc = fullerene_cli::report::BoundsDoc {
                        theorem1: bounds.theorem1.into(),
                        zz: bounds.zz,
                        km: bounds.km.into(),
                        corollary: bounds.corollary.into(),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                OutputFormat::Text => {
                    println!(
                        "theorem1 = 2^({}/{}) = {:.6}",
                        bounds.theorem1.exponent_num,
                        bounds.theorem1.exponent_den,
                        bounds.theorem1.value()
                    );
                    println!("zz = {}", bounds.zz);
                    println!("km = {:.6}", bounds.km.value());
                    println!("corollary = {:.6}", bounds.corollary.value());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { fixture, output } => {
            let g = fullerene_cli::fixture(&fixture)?;
            emit_graphs(&[g.graph().clone()], output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { input, to } => {
            let bytes = read_input(&input).map_err(|e| Error::ParseError {
                line: 0,
                message: format!("cannot read input: {e}"),
            })?;
            let graphs = parse_auto(&bytes)?;
            emit_graphs(&graphs, to)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_graphs(
    graphs: &[fullerene::PlanarGraph],
    format: GraphFormat,
) -> Result<(), Error> {
    match format {
        GraphFormat::PlanarCode => {
            let refs: Vec<&fullerene::PlanarGraph> = graphs.iter().collect();
            let bytes = emit_planar_code(&refs)?;
            std::io::stdout().write_all(&bytes).ok();
        }
        GraphFormat::Rotation => {
            for g in graphs {
                print!("{}", emit_rotation_text(g));
            }
        }
    }
    Ok(())
}
