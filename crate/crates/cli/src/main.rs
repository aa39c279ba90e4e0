use std::io::{Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cubiclines_cli::input::InputDocument;
use cubiclines_cli::report::{run, Report, Status};
use cubiclines_cli::svg;

#[derive(Parser)]
#[command(name = "cubiclines", version, about = "Invariant straight lines of planar cubic systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a cubic system given as JSON {"p": {...}, "q": {...}}
    Classify(ClassifyArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Input file ("-" for stdin)
    #[arg(required_unless_present = "batch", conflicts_with = "batch")]
    file: Option<PathBuf>,
    /// Classify every *.json file in a directory
    #[arg(long, value_name = "DIR")]
    batch: Option<PathBuf>,
    /// Print the full report as JSON
    #[arg(long)]
    json: bool,
    /// Write the Poincaré-disc picture (a directory in batch mode)
    #[arg(long, value_name = "OUT")]
    svg: Option<PathBuf>,
    /// Include the decision path and checked conditions in the text report
    #[arg(long)]
    certificate: bool,
    /// List the invariant lines in the text report
    #[arg(long)]
    lines: bool,
}

struct Outcome {
    report: Report,
    status: Status,
    svg: Option<String>,
    millis: f64,
}

fn classify_text(text: &str, want_svg: bool) -> Outcome {
    let start = Instant::now();
    let doc = match InputDocument::from_json(text) {
        Ok(d) => d,
        Err(e) => {
            let (report, status) = Report::invalid(InputDocument::default(), &e);
            return Outcome { report, status, svg: None, millis: 0.0 };
        }
    };
    let system = match doc.to_system() {
        Ok(s) => s,
        Err(e) => {
            let (report, status) = Report::invalid(doc, &e);
            return Outcome { report, status, svg: None, millis: 0.0 };
        }
    };
    let (report, status, config) = run(&system);
    let caption = match report.class {
        Some(c) => format!("class {c}"),
        None => report.verdict.clone(),
    };
    let svg = config.filter(|_| want_svg).map(|c| svg::render(&c, &caption));
    Outcome { report, status, svg, millis: start.elapsed().as_secs_f64() * 1e3 }
}

// a closed pipe downstream is not an error worth panicking over
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn read_input(path: &Path) -> std::io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn single(args: &ClassifyArgs, path: &Path) -> Status {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cubiclines: cannot read {}: {e}", path.display());
            return Status::Invalid;
        }
    };
    let o = classify_text(&text, args.svg.is_some());
    if args.json {
        emit(&o.report.to_json());
    } else {
        emit(&o.report.to_text(args.lines, args.certificate));
        emit(&format!("time: {:.1} ms\n", o.millis));
    }
    if o.status == Status::Invalid {
        if let Some(reason) = &o.report.reason {
            eprintln!("cubiclines: {reason}");
        }
    }
    if let (Some(out), Some(picture)) = (&args.svg, &o.svg) {
        if let Err(e) = std::fs::write(out, picture) {
            eprintln!("cubiclines: cannot write {}: {e}", out.display());
            return Status::Internal;
        }
    }
    o.status
}

fn batch(args: &ClassifyArgs, dir: &Path) -> Status {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(e) => {
            eprintln!("cubiclines: cannot read {}: {e}", dir.display());
            return Status::Invalid;
        }
    };
    files.sort();
    if let Some(out) = &args.svg {
        if let Err(e) = std::fs::create_dir_all(out) {
            eprintln!("cubiclines: cannot create {}: {e}", out.display());
            return Status::Internal;
        }
    }
    // the library is pure, so files are classified in parallel; output stays in file order
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(files.len().max(1));
    let results: Vec<(PathBuf, std::io::Result<Outcome>)> = std::thread::scope(|sc| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let files = &files;
                sc.spawn(move || {
                    files
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| i % workers == w)
                        .map(|(i, f)| (i, read_input(f).map(|t| classify_text(&t, args.svg.is_some()))))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut all: Vec<_> = handles.into_iter().flat_map(|h| h.join().expect("worker")).collect();
        all.sort_by_key(|(i, _)| *i);
        all.into_iter().map(|(i, r)| (files[i].clone(), r)).collect()
    });
    let mut worst = Status::Classified;
    let mut json = serde_json::Map::new();
    for (path, res) in results {
        let name = path.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
        let o = match res {
            Ok(o) => o,
            Err(e) => {
                eprintln!("cubiclines: cannot read {}: {e}", path.display());
                worst = Status::Invalid;
                continue;
            }
        };
        match o.status {
            Status::Internal => worst = Status::Internal,
            Status::Invalid if worst != Status::Internal => worst = Status::Invalid,
            _ => {}
        }
        if args.json {
            json.insert(name.clone(), serde_json::to_value(&o.report).expect("report serialises"));
        } else {
            let verdict = match o.report.class {
                Some(c) => format!("class {c} {}", o.report.config.as_deref().unwrap_or("")),
                None => format!("{}: {}", o.report.verdict, o.report.reason.as_deref().unwrap_or("")),
            };
            emit(&format!("{name}: {verdict}\n"));
        }
        if let (Some(out), Some(picture)) = (&args.svg, &o.svg) {
            let target = out.join(Path::new(&name).with_extension("svg"));
            if let Err(e) = std::fs::write(&target, picture) {
                eprintln!("cubiclines: cannot write {}: {e}", target.display());
                worst = Status::Internal;
            }
        }
    }
    if args.json {
        emit(&(serde_json::to_string_pretty(&json).expect("report serialises") + "\n"));
    }
    worst
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Cmd::Classify(args) = cli.cmd;
    let status = match (&args.batch, &args.file) {
        (Some(dir), _) => batch(&args, dir),
        (None, Some(file)) => single(&args, file),
        (None, None) => unreachable!("clap requires a file or --batch"),
    };
    ExitCode::from(status.code() as u8)
}
