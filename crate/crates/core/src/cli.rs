//! `metricsub` command line.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or
//! precondition errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certify::{analyze, verify_bounds, verify_construction, AnalysisReport, CheckStatus};
use crate::codec::{read_graph6_lines, to_dot, write_graph6_lines};
use crate::construct::{ConstructionSpec, GalleryId, GALLERY_G6};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::metric_partition;
use crate::search::{
    regenerate_gallery, remark1_skeleton, remark2_search, reproduce_theorem10, skeleton_search, SearchResult,
};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "METRICSUB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "metricsub", version, about = "Center, annulus and periphery of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write it as graph6.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report eccentricities, metric subgraphs and lemma checks.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a preset skeleton search.
    Search {
        #[arg(long, value_enum)]
        preset: Preset,
        /// Edge budget for the remark1 preset.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        /// Directory for `<preset>.g6` and `<preset>.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a family member and certify it.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Convert between graph6 and DOT.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild the gallery cache by search.
    RegenGallery {
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 if the regenerated cache differs from the built-in one.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// graph6 file whose first graph is the seed `H`.
    #[arg(long)]
    h_file: Option<PathBuf>,
    #[arg(long)]
    id: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Theorem6,
    Theorem9,
    Theorem11,
    Gallery,
    Circulant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConvertTarget {
    G6,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Preset {
    Remark1,
    Theorem10,
    Remark2,
}

impl Preset {
    fn name(self) -> &'static str {
        match self {
            Preset::Remark1 => "remark1",
            Preset::Theorem10 => "theorem10",
            Preset::Remark2 => "remark2",
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `argv` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "check failed: {m}");
            1
        }
    }
}

fn default_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok())
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .max(1)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let f = fs::File::open(path).map_err(|e| Error::Graph6(format!("{}: {e}", path.display())))?;
    read_graph6_lines(BufReader::new(f))
}

fn spec_from(args: &FamilyArgs) -> std::result::Result<ConstructionSpec, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
    Ok(match args.family {
        Family::Theorem6 => ConstructionSpec::Theorem6 { n: need(args.n, "n")? },
        Family::Theorem9 => ConstructionSpec::Theorem9 {
            k: need(args.k, "k")?,
            n: need(args.n, "n")?,
        },
        Family::Circulant => ConstructionSpec::Circulant {
            n: need(args.n, "n")?,
            k: need(args.k, "k")?,
        },
        Family::Theorem11 => {
            let path = args
                .h_file
                .as_ref()
                .ok_or_else(|| Failure::Usage("--h-file is required".into()))?;
            let h = read_graphs(path)?
                .into_iter()
                .next()
                .ok_or_else(|| Failure::Usage(format!("{} holds no graph", path.display())))?;
            ConstructionSpec::Theorem11 { h }
        }
        Family::Gallery => {
            let id = args.id.as_deref().ok_or_else(|| Failure::Usage("--id is required".into()))?;
            ConstructionSpec::Gallery { id: id.parse::<GalleryId>()? }
        }
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Construct { family, out: path } => {
            let spec = spec_from(&family)?;
            let (g, _) = spec.build()?;
            emit(out, path.as_deref(), &write_graph6_lines(&[g])?)?;
        }
        Command::Analyze { input, format, out: path } => {
            let graphs = read_graphs(&input)?;
            let reports: Vec<AnalysisReport> = graphs.iter().map(analyze).collect::<Result<_>>()?;
            let text = match format {
                Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
                Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
                Format::Text => reports.iter().map(AnalysisReport::to_text).collect::<Vec<_>>().join("\n"),
                Format::Dot => graphs
                    .iter()
                    .map(|g| Ok(to_dot(g, Some(&metric_partition(g)?))))
                    .collect::<Result<String>>()?,
            };
            emit(out, path.as_deref(), &text)?;
            let failed: Vec<&str> = reports.iter().flat_map(|r| r.failures().map(|c| c.name)).collect();
            if !failed.is_empty() {
                return Err(Failure::Check(format!("bound checks failed: {failed:?}")));
            }
        }
        Command::Search { preset, budget, threads, out: dir } => {
            let threads = default_threads(threads);
            if budget.is_some() && !matches!(preset, Preset::Remark1) {
                return Err(Failure::Usage("--budget applies only to the remark1 preset".into()));
            }
            let result = match preset {
                Preset::Remark1 => skeleton_search(&remark1_skeleton(budget.unwrap_or(22)), threads)?,
                Preset::Theorem10 => reproduce_theorem10(threads)?,
                Preset::Remark2 => remark2_search(threads)?,
            };
            let summary = Summary::new(preset.name(), threads, &result);
            let json = serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n";
            if let Some(dir) = dir {
                fs::create_dir_all(&dir)?;
                fs::write(dir.join(format!("{}.g6", preset.name())), result.graph6_lines())?;
                fs::write(dir.join(format!("{}.json", preset.name())), &json)?;
            }
            out.write_all(json.as_bytes())?;
            if result.orbit_check_passes() == Some(false) {
                return Err(Failure::Check("labeled count disagrees with orbit arithmetic".into()));
            }
        }
        Command::Verify { family } => {
            let spec = spec_from(&family)?;
            let (g, layout) = spec.build()?;
            let verdict = verify_construction(&spec, &g, layout.as_ref());
            let checks = verify_bounds(&g)?;
            let report = serde_json::json!({ "construction": verdict, "checks": checks });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("verdict serializes"))?;
            if let Some(f) = verdict.failure {
                return Err(Failure::Check(f));
            }
            if let Some(c) = checks.iter().find(|c| c.status == CheckStatus::Fail) {
                return Err(Failure::Check(format!("{}: {}", c.name, c.detail)));
            }
        }
        Command::Convert { input, to, out: path } => {
            let graphs = read_graphs(&input)?;
            let text = match to {
                ConvertTarget::G6 => write_graph6_lines(&graphs)?,
                ConvertTarget::Dot => graphs.iter().map(|g| to_dot(g, None)).collect(),
            };
            emit(out, path.as_deref(), &text)?;
        }
        Command::RegenGallery { threads, out: path, check } => {
            let text = write_graph6_lines(&regenerate_gallery(default_threads(threads))?)?;
            emit(out, path.as_deref(), &text)?;
            if check && text != GALLERY_G6 {
                return Err(Failure::Check("regenerated gallery differs from the built-in cache".into()));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Summary<'a> {
    preset: &'a str,
    threads: usize,
    class_count: usize,
    labeled_count: u64,
    orbit_labeled_count: Option<u64>,
    min_size_found: Option<usize>,
    candidates_checked: u64,
    elapsed_ms: f64,
    sizes: Vec<usize>,
}

impl<'a> Summary<'a> {
    fn new(preset: &'a str, threads: usize, r: &SearchResult) -> Self {
        let mut sizes: Vec<usize> = r.witnesses.iter().map(|w| w.size).collect();
        sizes.sort_unstable();
        sizes.dedup();
        Summary {
            preset,
            threads,
            class_count: r.class_count,
            labeled_count: r.labeled_count,
            orbit_labeled_count: r.orbit_labeled_count,
            min_size_found: r.min_size_found,
            candidates_checked: r.candidates_checked,
            elapsed_ms: r.elapsed.as_secs_f64() * 1000.0,
            sizes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("metricsub").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["construct", "--family", "theorem9", "--bogus"]).0, 2);
        let (code, _, err) = call(&["construct", "--family", "theorem9", "--k", "3", "--n", "21"]);
        assert_eq!(code, 2);
        assert!(err.contains("even"), "{err}");
        assert_eq!(call(&["construct", "--family", "gallery", "--id", "nope"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn construct_to_stdout() {
        let (code, out, _) = call(&["construct", "--family", "theorem6", "--n", "13"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
        assert!(out.starts_with('L'));
    }

    #[test]
    fn verify_passes() {
        let (code, out, _) = call(&["verify", "--family", "theorem9", "--k", "4", "--n", "25"]);
        assert_eq!(code, 0, "{out}");
    }
}
