//! `graph-iir`: design IIR graph filters, sample their responses and apply
//! them to signals on graphs.
//!
//! Band names follow the graph convention where small eigenvalues are the
//! high frequencies: `highpass` is the prototype itself, whose response
//! decays with λ.

mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_iir::filter::{apply_rational_matrix_filter, apply_spectral_filter};
use graph_iir::prototype::min_order;
use graph_iir::{
    design, Band, BandSpec, DesignDocument, DesignSpec, Error, Family, FilterDesign, Graph,
    GraphSignal,
};

#[derive(Parser)]
#[command(name = "graph-iir", version, about = "IIR filter design for graph signals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Design a filter and write it as JSON.
    Design {
        #[command(flatten)]
        spec: SpecArgs,
        /// Output file; JSON goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the minimal order for a specification.
    Order {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Sample a design's response on a uniform grid over [0, 2].
    Response {
        #[command(flatten)]
        source: DesignSource,
        /// Number of grid points.
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// CSV output; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also plot the response as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Filter a graph signal.
    Apply {
        /// Edge list: `u v [w]` per line, `#` comments, 0-based nodes.
        #[arg(long)]
        graph: PathBuf,
        /// One value per line, optionally with a header.
        #[arg(long)]
        signal: PathBuf,
        #[command(flatten)]
        source: DesignSource,
        /// Use the all-pass response h ≡ 1.
        #[arg(long, conflicts_with = "design")]
        identity: bool,
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
        /// CSV output; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Spectral,
    Matrix,
}

#[derive(Args, Clone)]
struct SpecArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long, default_value = "highpass")]
    band: Band,
    /// Passband edge (highpass, lowpass).
    #[arg(long)]
    lp: Option<f64>,
    /// Stopband edge (highpass, lowpass).
    #[arg(long)]
    ls: Option<f64>,
    /// Four increasing edges: `s1,p1,p2,s2` for bandpass, `p1,s1,s2,p2` for bandstop.
    #[arg(long, value_delimiter = ',')]
    edges: Option<Vec<f64>>,
    /// Maximum passband attenuation in dB.
    #[arg(long, default_value_t = 1.0)]
    rp: f64,
    /// Minimum stopband attenuation in dB.
    #[arg(long = "as", default_value_t = 30.0)]
    as_db: f64,
    /// Fixed order instead of the minimal one.
    #[arg(long)]
    order: Option<usize>,
}

/// A design read from JSON, or specification flags to design on the spot.
#[derive(Args)]
struct DesignSource {
    #[arg(long)]
    design: Option<PathBuf>,
    #[command(flatten)]
    spec: SpecArgs,
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Spec(_) | Error::Degenerate(_) | Error::Domain(_) => 2,
            Error::Parse(_) => 3,
            Error::Dimension { .. } => 4,
            Error::Stability(_) | Error::Pole { .. } | Error::Composition(_) => 5,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn spec_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    }
}

type Outcome<T> = Result<T, Failure>;

impl SpecArgs {
    fn to_spec(&self) -> Outcome<DesignSpec> {
        let family = self.family.ok_or_else(|| spec_error("--family is required"))?;
        let pair = || match (self.lp, self.ls) {
            (Some(lp), Some(ls)) if self.edges.is_none() => Ok((lp, ls)),
            _ => Err(spec_error(format!("band {} needs --lp and --ls", self.band))),
        };
        let edges = || match self.edges.as_deref() {
            Some(&[a, b, c, d]) if self.lp.is_none() && self.ls.is_none() => Ok([a, b, c, d]),
            _ => Err(spec_error(format!("band {} needs --edges with four values", self.band))),
        };
        let band = match self.band {
            Band::HighPass => pair().map(|(lambda_p, lambda_s)| BandSpec::HighPass { lambda_p, lambda_s })?,
            Band::LowPass => pair().map(|(lambda_p, lambda_s)| BandSpec::LowPass { lambda_p, lambda_s })?,
            Band::BandPass => BandSpec::BandPass { edges: edges()? },
            Band::BandStop => BandSpec::BandStop { edges: edges()? },
        };
        Ok(DesignSpec {
            family,
            band,
            rp_db: self.rp,
            as_db: self.as_db,
            order_override: self.order,
        })
    }
}

impl DesignSource {
    fn load(&self) -> Outcome<FilterDesign> {
        match &self.design {
            Some(path) => {
                let doc = DesignDocument::from_json(&read(path)?)?;
                Ok(doc.into_design()?)
            }
            None => Ok(design(&self.spec.to_spec()?)?),
        }
    }
}

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn emit(path: Option<&Path>, text: &str) -> Outcome<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_error(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary(d: &FilterDesign) -> String {
    let mut s = format!(
        "{} {}: N = {} (composed order {})\n",
        d.family(),
        d.band(),
        d.order(),
        d.composed_order()
    );
    for e in d.edge_report() {
        let (kind, bound) = if e.passband {
            ("passband", d.spec().rp_db)
        } else {
            ("stopband", d.spec().as_db)
        };
        let _ = writeln!(
            s,
            "  {kind} edge {:.6}: {:.6} dB (bound {bound} dB)",
            e.lambda, e.attenuation_db
        );
    }
    s
}

fn run_design(spec: &SpecArgs, out: Option<&Path>) -> Outcome<()> {
    let d = design(&spec.to_spec()?)?;
    let json = DesignDocument::from_design(&d).to_json()? + "\n";
    match out {
        Some(p) => {
            emit(Some(p), &json)?;
            print!("{}", summary(&d));
        }
        None => print!("{json}"),
    }
    Ok(())
}

fn run_order(spec: &SpecArgs) -> Outcome<()> {
    let (proto, _) = spec.to_spec()?.prototype()?;
    let (n, trace) = min_order(&proto)?;
    println!(
        "{} {}: order bound {:.6} -> N = {} (composed order {})",
        proto.family,
        spec.band,
        trace.min_order_real,
        n,
        2 * n
    );
    Ok(())
}

fn run_response(source: &DesignSource, grid: usize, out: Option<&Path>, svg_out: Option<&Path>) -> Outcome<()> {
    if grid < 2 {
        return Err(spec_error("--grid needs at least 2 points"));
    }
    let d = source.load()?;
    let samples: Vec<(f64, f64)> = (0..grid)
        .map(|i| {
            let l = 2.0 * i as f64 / (grid - 1) as f64;
            (l, d.response(l))
        })
        .collect();
    let mut csv = String::from("lambda,H,att_dB\n");
    for &(l, h) in &samples {
        let _ = writeln!(csv, "{l:.16e},{h:.16e},{:.16e}", graph_iir::response::attenuation_db(h));
    }
    emit(out, &csv)?;
    if let Some(p) = svg_out {
        let title = format!("{} {} N={}", d.family(), d.band(), d.order());
        emit(Some(p), &svg::plot(&samples, &title))?;
    }
    Ok(())
}

fn run_apply(
    graph: &Path,
    signal: &Path,
    source: &DesignSource,
    identity: bool,
    method: Method,
    out: Option<&Path>,
) -> Outcome<()> {
    let g = Graph::parse_edge_list(&read(graph)?)?;
    let x = GraphSignal::parse(&read(signal)?)?;
    x.check_len(g.node_count())?;
    let y = if identity {
        x
    } else {
        let d = source.load()?;
        match method {
            Method::Spectral => {
                let spectrum = g.laplacian_spectrum()?;
                apply_spectral_filter(&spectrum, |l| d.response(l), &x)?
            }
            Method::Matrix => {
                if !d.is_prototype() {
                    return Err(spec_error(format!(
                        "--method matrix needs a highpass design, got {}",
                        d.band()
                    )));
                }
                apply_rational_matrix_filter(&g, d.rational(), &x)?
            }
        }
    };
    emit(out, &y.to_csv())
}

fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Design { spec, out } => run_design(&spec, out.as_deref()),
        Command::Order { spec } => run_order(&spec),
        Command::Response { source, grid, out, svg } => {
            run_response(&source, grid, out.as_deref(), svg.as_deref())
        }
        Command::Apply {
            graph,
            signal,
            source,
            identity,
            method,
            out,
        } => run_apply(&graph, &signal, &source, identity, method, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
