use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use simrac::gen::{gen_cycle_matching, gen_outerplanar, gen_path_matching};
use simrac::io::{render_svg, DrawingFile, InstanceFile, LoadedDrawing, Metadata};
use simrac::layout::{compact_grid, layout_cycle_matching, layout_dual_outerplanar_with, layout_path_matching, Construction};
use simrac::{Profile, Report};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "simrac", version, about = "Simultaneous right-angle-crossing drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    PathMatching,
    CycleMatching,
    DualOuterplanar,
}

#[derive(Subcommand)]
enum Command {
    /// Draw an instance and write the verified drawing.
    Layout {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Merge grid columns and rows while the drawing stays valid.
        #[arg(long)]
        compact: bool,
        /// Allowed deviation of a crossing angle from 90 degrees, in radians.
        #[arg(long, value_name = "R")]
        angle_tol: Option<f64>,
        /// Distance below which real points count as incident.
        #[arg(long, value_name = "D")]
        incidence_tol: Option<f64>,
        /// Face placement for dual-outerplanar: chord or tangent.
        #[arg(long, default_value = "chord")]
        construction: Construction,
    },
    /// Check a drawing file; exit 1 if anything is wrong.
    Verify {
        #[arg(long, value_name = "FILE")]
        drawing: PathBuf,
        #[arg(long, value_name = "R")]
        angle_tol: Option<f64>,
        #[arg(long, value_name = "D")]
        incidence_tol: Option<f64>,
        /// Maximum extent in grid units, e.g. 3x2.
        #[arg(long, value_name = "WxH", value_parser = parse_bound)]
        grid_bound: Option<(i64, i64)>,
        /// Where to write the JSON report (default: standard output).
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
    /// Write a random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Fraction of vertices covered by the matching.
        #[arg(long, default_value_t = 1.0)]
        coverage: f64,
        /// Fraction of a full triangulation's chords.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

fn parse_bound(s: &str) -> Result<(i64, i64), String> {
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected WxH, got {s:?}"))?;
    let w = w.trim().parse().map_err(|e| format!("bad width: {e}"))?;
    let h = h.trim().parse().map_err(|e| format!("bad height: {e}"))?;
    Ok((w, h))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Rejected(String),
    #[error("{0}")]
    Unverified(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Rejected(_) => 1,
            CliError::Input(_) => 2,
            CliError::Unverified(_) => 3,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn profile(angle_tol: Option<f64>, incidence_tol: Option<f64>) -> Result<Profile, CliError> {
    let mut p = Profile::default();
    for (name, v) in [("angle", angle_tol), ("incidence", incidence_tol)] {
        if let Some(v) = v {
            if !(v.is_finite() && v >= 0.0) {
                return Err(CliError::Input(format!("{name} tolerance must be a non-negative number")));
            }
        }
    }
    if let Some(a) = angle_tol {
        p.tol.angle = a;
    }
    if let Some(i) = incidence_tol {
        p.tol.incidence = i;
    }
    Ok(p)
}

fn describe(report: &Report) -> String {
    let shown: Vec<String> = report.violations.iter().take(5).map(|v| v.to_string()).collect();
    let more = report.violations.len().saturating_sub(shown.len());
    let mut s = format!("{} violation(s): {}", report.violations.len(), shown.join("; "));
    if more > 0 {
        s.push_str(&format!("; and {more} more"));
    }
    s
}

fn layout_error(e: simrac::Error) -> CliError {
    match e {
        simrac::Error::Usage(_) | simrac::Error::Domain(_) => CliError::Input(e.to_string()),
        _ => CliError::Unverified(e.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_layout(
    kind: Kind,
    input: &Path,
    out: &Path,
    svg: Option<&Path>,
    compact: bool,
    profile: Profile,
    construction: Construction,
) -> Result<(), CliError> {
    let file = InstanceFile::parse(&read(input)?).map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
    let expected = match kind {
        Kind::PathMatching => "path-matching",
        Kind::CycleMatching => "cycle-matching",
        Kind::DualOuterplanar => "outerplanar",
    };
    if file.kind_name() != expected {
        return Err(CliError::Input(format!("{}: a {} instance cannot be drawn as {}", input.display(), file.kind_name(), kind.to_possible_value().expect("named").get_name())));
    }
    let invalid = |e: simrac::io::FormatError| CliError::Input(format!("{}: {e}", input.display()));
    let (drawing, algorithm) = match kind {
        Kind::PathMatching | Kind::CycleMatching => {
            let inst = file.to_instance().map_err(invalid)?;
            let (d, name) = if kind == Kind::PathMatching {
                (layout_path_matching(&inst).map_err(layout_error)?, "path-matching")
            } else {
                (layout_cycle_matching(&inst).map_err(layout_error)?, "cycle-matching")
            };
            let d = if compact { compact_grid(&d, &profile).map_err(layout_error)? } else { d };
            (LoadedDrawing::Grid(d), name)
        }
        Kind::DualOuterplanar => {
            let emb = file.to_embedding().map_err(invalid)?;
            let d = layout_dual_outerplanar_with::<f64>(&emb, construction).map_err(layout_error)?;
            (LoadedDrawing::Dual(d), "dual-outerplanar")
        }
    };
    let report = drawing.verify(&profile).map_err(|e| CliError::Unverified(format!("self-check failed: {e}")))?;
    if !report.is_ok() {
        return Err(CliError::Unverified(format!("self-check rejected the drawing: {}", describe(&report))));
    }
    let mut meta = Metadata::new(algorithm);
    let file = match &drawing {
        LoadedDrawing::Grid(d) => DrawingFile::from_grid(d, meta),
        LoadedDrawing::Real(d) => DrawingFile::from_real(d, meta),
        LoadedDrawing::Dual(d) => {
            meta.construction = Some(construction);
            DrawingFile::from_dual(d, meta)
        }
    };
    // what is written must be what was checked
    let reread = file.load().map_err(|e| CliError::Unverified(e.to_string()))?;
    let again = reread.verify(&profile).map_err(|e| CliError::Unverified(e.to_string()))?;
    if !again.is_ok() {
        return Err(CliError::Unverified(format!("written form fails verification: {}", describe(&again))));
    }
    write(out, &file.to_json())?;
    if let Some(svg) = svg {
        let text = render_svg(&file).map_err(|e| CliError::Unverified(e.to_string()))?;
        write(svg, &text)?;
    }
    Ok(())
}

fn run_verify(drawing: &Path, profile: Profile, report_path: Option<&Path>) -> Result<(), CliError> {
    let file = DrawingFile::parse(&read(drawing)?).map_err(|e| CliError::Input(format!("{}: {e}", drawing.display())))?;
    let loaded = file.load().map_err(|e| CliError::Input(format!("{}: {e}", drawing.display())))?;
    let report = loaded.verify(&profile).map_err(|e| CliError::Rejected(format!("cannot be checked: {e}")))?;
    let mut json = report.to_json();
    json.push('\n');
    match report_path {
        Some(p) => write(p, &json)?,
        None => print!("{json}"),
    }
    if report.is_ok() {
        Ok(())
    } else {
        Err(CliError::Rejected(describe(&report)))
    }
}

fn run_gen(kind: Kind, n: usize, coverage: f64, density: f64, seed: u64, out: &Path) -> Result<(), CliError> {
    let bad = |e: simrac::Error| CliError::Input(e.to_string());
    let file = match kind {
        Kind::PathMatching => InstanceFile::from_instance(&gen_path_matching(n, coverage, seed).map_err(bad)?),
        Kind::CycleMatching => InstanceFile::from_instance(&gen_cycle_matching(n, coverage, seed).map_err(bad)?),
        Kind::DualOuterplanar => InstanceFile::from_embedding(&gen_outerplanar(n, density, seed).map_err(bad)?),
    };
    write(out, &file.to_json())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Layout { kind, input, out, svg, compact, angle_tol, incidence_tol, construction } => {
            profile(angle_tol, incidence_tol).and_then(|p| run_layout(kind, &input, &out, svg.as_deref(), compact, p, construction))
        }
        Command::Verify { drawing, angle_tol, incidence_tol, grid_bound, report } => profile(angle_tol, incidence_tol).and_then(|mut p| {
            p.grid_bound = grid_bound;
            run_verify(&drawing, p, report.as_deref())
        }),
        Command::Gen { kind, n, coverage, density, seed, out } => run_gen(kind, n, coverage, density, seed, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("simrac: {e}");
            ExitCode::from(e.code())
        }
    }
}
