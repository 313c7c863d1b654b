use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use leaperforge::format::{parse_any, to_json, to_text};
use leaperforge::links::link_edge;
use leaperforge::render::to_svg;
use leaperforge::solver::{ham_cycle_search, SearchConfig};
use leaperforge::{ab23, ab25, cache, construct, feasibility_check, verify_tour};
use leaperforge::{BoardSpec, Error, Feasibility, LinkKind, MoveSpec, Tour};

const OK: u8 = 0;
const INVALID: u8 = 1;
const INFEASIBLE: u8 = 2;
const TIMEOUT: u8 = 3;
const USAGE: u8 = 4;

#[derive(Parser)]
#[command(name = "leaperforge", version, about = "Closed (a,b) leaper tours on square and cubic boards")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Txt,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Data {
    Corner23,
    Base25_14,
    Brick25,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct and verify a tour.
    Generate {
        #[arg(long = "move", value_name = "A,B")]
        mv: String,
        #[arg(long, value_name = "N1xN2[x...]")]
        dims: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check a tour file.
    Verify { file: PathBuf },
    /// Report a known obstruction, if any.
    Feasible {
        #[arg(long = "move", value_name = "A,B")]
        mv: String,
        #[arg(long, value_name = "N1xN2[x...]")]
        dims: String,
    },
    /// Backtracking search for a tour.
    Search {
        #[arg(long = "move", value_name = "A,B")]
        mv: String,
        #[arg(long, value_name = "MxN")]
        dims: String,
        #[arg(long = "require-link", value_delimiter = ',', value_name = "LINK,...")]
        require_link: Vec<String>,
        /// Seconds.
        #[arg(long, default_value_t = 120)]
        timeout: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Draw a tour file as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Recompute the stored base data.
    Regenerate {
        #[arg(value_enum)]
        which: Data,
        /// Defaults to $LEAPERFORGE_CACHE, then the current directory.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn code_of(e: &Error) -> u8 {
    match e {
        Error::Infeasible(_) | Error::Unsupported(_) | Error::Exhausted | Error::Precondition(_) => INFEASIBLE,
        Error::Timeout { .. } => TIMEOUT,
        Error::InvalidMove(_) | Error::InvalidBoard(_) => USAGE,
        _ => INVALID,
    }
}

fn fail(e: Error) -> u8 {
    eprintln!("error: {e}");
    code_of(&e)
}

fn parse_spec(mv: &str, dims: &str) -> Result<(MoveSpec, BoardSpec), Error> {
    Ok((MoveSpec::parse(mv)?, BoardSpec::parse(dims)?))
}

fn emit(t: &Tour, out: Option<&Path>, format: Option<Format>) -> Result<(), Error> {
    let format = format.unwrap_or_else(|| match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        Some("svg") => Format::Svg,
        _ => Format::Txt,
    });
    let body = match format {
        Format::Txt => to_text(t),
        Format::Json => to_json(t)?,
        Format::Svg => to_svg(t),
    };
    match out {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn read_tour(file: &Path) -> Result<Tour, Error> {
    parse_any(&std::fs::read_to_string(file)?)
}

fn generate(mv: &str, dims: &str, out: Option<&Path>, format: Option<Format>) -> u8 {
    let result = parse_spec(mv, dims).and_then(|(mv, board)| construct(&board, mv));
    match result.and_then(|t| {
        emit(&t, out, format)?;
        Ok(t.len())
    }) {
        Ok(n) => {
            eprintln!("verified tour of {n} vertices");
            OK
        }
        Err(e) => fail(e),
    }
}

fn verify(file: &Path) -> u8 {
    let t = match read_tour(file) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let report = verify_tour(&t);
    let summary = report.summary();
    println!("{summary}");
    if let Some((i, p, q)) = report.first_illegal_step.as_ref().filter(|_| !summary.contains("legal move")) {
        println!("first illegal step {i}: {p} to {q}");
    }
    for (kind, found) in &report.links {
        match found {
            Some(m) => println!("link {kind}: {}", m.edge),
            None => println!("link {kind}: absent"),
        }
    }
    if report.is_valid_tour() {
        OK
    } else {
        INVALID
    }
}

fn feasible(mv: &str, dims: &str) -> u8 {
    match parse_spec(mv, dims) {
        Ok((mv, board)) => match feasibility_check(&board, mv) {
            Feasibility::Feasible => {
                println!("no obstruction found");
                OK
            }
            Feasibility::Infeasible(ob) => {
                println!("infeasible: {ob}");
                INFEASIBLE
            }
        },
        Err(e) => fail(e),
    }
}

fn search(mv: &str, dims: &str, links: &[String], timeout: u64, out: Option<&Path>, format: Option<Format>) -> u8 {
    let run = || -> Result<Tour, Error> {
        let (mv, board) = parse_spec(mv, dims)?;
        if board.ndim() != 2 && !links.is_empty() {
            return Err(Error::InvalidBoard("links are defined on 2-D boards".into()));
        }
        let mut required = Vec::new();
        for l in links {
            required.push(link_edge(LinkKind::parse(l).map_err(|e| Error::InvalidMove(e.to_string()))?, &board, mv)?);
        }
        let cfg = SearchConfig::default().with_required(required).with_timeout(Duration::from_secs(timeout));
        let t = ham_cycle_search(&board, mv, &cfg)?;
        emit(&t, out, format)?;
        Ok(t)
    };
    match run() {
        Ok(t) => {
            eprintln!("found tour of {} vertices", t.len());
            OK
        }
        Err(Error::Exhausted) => {
            eprintln!("search exhausted: no tour exists");
            INFEASIBLE
        }
        Err(e) => fail(e),
    }
}

fn render(file: &Path, svg: &Path) -> u8 {
    match read_tour(file).and_then(|t| Ok(std::fs::write(svg, to_svg(&t))?)) {
        Ok(()) => OK,
        Err(e) => fail(e),
    }
}

fn regenerate(which: Data, dir: Option<PathBuf>) -> u8 {
    let dir = dir.or_else(cache::cache_dir).unwrap_or_else(|| PathBuf::from("."));
    let run = || -> Result<(), Error> {
        std::fs::create_dir_all(&dir)?;
        let all = matches!(which, Data::All);
        if all || matches!(which, Data::Corner23) {
            let c = ab23::regenerate_corner()?;
            std::fs::write(dir.join(cache::CORNER23), c.to_json()?)?;
        }
        if all || matches!(which, Data::Base25_14) {
            let t = ab25::regenerate_base_14()?;
            std::fs::write(dir.join(cache::BASE25_14), to_text(&t))?;
        }
        if all || matches!(which, Data::Brick25) {
            let cs = ab25::regenerate_brick()?;
            std::fs::write(dir.join(cache::BRICK25), cs.to_json()?)?;
        }
        Ok(())
    };
    match run() {
        Ok(()) => {
            eprintln!("wrote to {}", dir.display());
            OK
        }
        Err(e) => fail(e),
    }
}

fn run(argv: impl IntoIterator<Item = std::ffi::OsString>) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { USAGE } else { OK };
        }
    };
    match cli.cmd {
        Cmd::Generate { mv, dims, out, format } => generate(&mv, &dims, out.as_deref(), format),
        Cmd::Verify { file } => verify(&file),
        Cmd::Feasible { mv, dims } => feasible(&mv, &dims),
        Cmd::Search { mv, dims, require_link, timeout, out, format } => {
            search(&mv, &dims, &require_link, timeout, out.as_deref(), format)
        }
        Cmd::Render { file, svg } => render(&file, &svg),
        Cmd::Regenerate { which, dir } => regenerate(which, dir),
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}
