//! `polarbox`: convert between H- and V-files, take polars and check
//! HV-symmetry from the command line.
//!
//! Results go to standard output (or `-o`), statistics to standard error.
//!
//! Exit codes: 0 success, 1 negative verdict or other failure, 2 parse or
//! usage error, 3 infeasible, 4 not pointed (including a non-pointed polar),
//! 5 origin not contained, 6 brute-force cap exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::debug;

use polarbox::conversion::{
    count_cone_bases, count_feasible_bases, facet_enumeration_direct, facet_enumeration_lifted,
    homogenize, lifted_cone_rows, member_certificate, vertex_enumeration,
};
use polarbox::polarity::{bipolar_vrep, is_hv_symmetric, polar_hrep, verify_theorem1};
use polarbox::repr::{emit_rep, parse_rep};
use polarbox::{ConversionReport, Error, HRep, Rational, Rep, SymmetryReason, VRep};

#[derive(Parser, Debug)]
#[command(name = "polarbox", version, about = "Exact H/V conversion, polars and HV-symmetry")]
struct Cli {
    /// Largest number of subsets the brute-force basis counter may visit.
    #[arg(long, global = true, env = "POLARBOX_CAP", default_value_t = polarbox::DEFAULT_BRUTE_FORCE_CAP)]
    cap: u64,
    /// Seed recorded for reproducibility; every command is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// H-file to V-file, or V-file to H-file.
    Convert {
        /// For a V-file, go through the polar instead of the lifted cone.
        #[arg(long)]
        direct: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        input: PathBuf,
    },
    /// H-file of the polar P⁺.
    Polar { input: PathBuf },
    /// V-file of the bipolar P⁺⁺ = conv(P ∪ {0}).
    Bipolar { input: PathBuf },
    /// HV-symmetry verdict and the four equivalent conditions.
    Symcheck { input: PathBuf },
    /// Write a point as a convex plus conic combination of the generators.
    Certify {
        input: PathBuf,
        #[arg(last = true, required = true, allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Run both facet enumeration routes and compare them.
    Liftcompare {
        #[arg(long)]
        csv: Option<PathBuf>,
        input: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible => 3,
        Error::NotPointed { .. } | Error::PolarNotPointed { .. } => 4,
        Error::OriginNotContained => 5,
        Error::CapExceeded { .. } => 6,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    debug!("seed {}", cli.seed);
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verdict) => ExitCode::from(1),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Convert {
            direct,
            output,
            input,
        } => convert(read_rep(input)?, *direct, output.as_deref(), cli.cap),
        Command::Polar { input } => {
            let v = read_vrep(input)?;
            print!("{}", emit_rep(&Rep::H(polar_hrep(&v))));
            Ok(())
        }
        Command::Bipolar { input } => {
            let v = read_vrep(input)?;
            print!("{}", emit_rep(&Rep::V(bipolar_vrep(&v))));
            Ok(())
        }
        Command::Symcheck { input } => symcheck(&read_vrep(input)?),
        Command::Certify { input, point } => certify(&read_vrep(input)?, point),
        Command::Liftcompare { csv, input } => liftcompare(&read_vrep(input)?, csv.as_deref(), cli.cap),
    }
}

fn read_rep(path: &Path) -> Result<Rep, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_rep(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A V-file as is, or an H-file converted first.
fn read_vrep(path: &Path) -> Result<VRep, Failure> {
    match read_rep(path)? {
        Rep::V(v) => Ok(v),
        Rep::H(h) => Ok(vertex_enumeration(&h)?.0),
    }
}

fn write_output(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report(label: &str, r: &ConversionReport) {
    eprintln!("route: {label}");
    eprintln!("input rows: {}", r.input_rows);
    eprintln!("output rows: {}", r.output_rows);
    match r.feasible_basis_count {
        Some(c) => eprintln!("feasible bases: {c}"),
        None => eprintln!("feasible bases: not counted (over cap)"),
    }
    eprintln!("max intermediate rays: {}", r.max_intermediate_rays);
}

/// The count, or `None` when the cap is exceeded; other errors pass through.
fn optional_count(c: Result<u64, Error>) -> Result<Option<u64>, Error> {
    match c {
        Ok(c) => Ok(Some(c)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn convert(rep: Rep, direct: bool, output: Option<&Path>, cap: u64) -> Result<(), Failure> {
    let (out, label, mut r, count) = match rep {
        Rep::H(h) => {
            if direct {
                return Err(Failure::Usage("--direct applies to V-files only".into()));
            }
            let (v, r) = vertex_enumeration(&h)?;
            (Rep::V(v), "vertex enumeration", r, count_feasible_bases(&h, cap))
        }
        Rep::V(v) if direct => {
            let (h, r) = facet_enumeration_direct(&v)?;
            (Rep::H(h), "direct", r, count_cone_bases(&direct_system(&v), cap))
        }
        Rep::V(v) => {
            let (h, r) = facet_enumeration_lifted(&v)?;
            (Rep::H(h), "lifted", r, count_cone_bases(&lifted_cone_rows(&v).0, cap))
        }
    };
    r.feasible_basis_count = optional_count(count)?;
    write_output(&emit_rep(&out), output)?;
    report(label, &r);
    Ok(())
}

fn direct_system(v: &VRep) -> polarbox::RMatrix {
    homogenize(&polar_hrep(v))
}

fn tuple(t: (bool, bool, bool, bool)) -> String {
    format!("({},{},{},{})", t.0, t.1, t.2, t.3)
}

fn symcheck(v: &VRep) -> Result<(), Failure> {
    let verdict = is_hv_symmetric(v)?;
    let reason = match verdict.reason {
        SymmetryReason::Verified => "V(Q) encodes an H-representation of P",
        SymmetryReason::OriginOutside => "the origin is not in P",
        SymmetryReason::PolarNotPointed => "the polar is not pointed",
    };
    println!("HV-symmetric: {}", if verdict.symmetric { "yes" } else { "no" });
    println!("reason: {reason}");
    let check = verify_theorem1(v)?;
    println!("conditions (a,b,c,d): {}", tuple(check.as_tuple()));
    if !check.all_equal() {
        eprintln!("warning: the four conditions disagree");
    }
    if verdict.symmetric {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn list(xs: &[Rational]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", items.join(", "))
}

fn certify(v: &VRep, point: &[String]) -> Result<(), Failure> {
    let x: Vec<Rational> = point
        .iter()
        .map(|t| {
            t.parse::<Rational>()
                .map_err(|_| Failure::Usage(format!("{t:?} is not a rational number")))
        })
        .collect::<Result<_, _>>()?;
    if x.len() != v.dim() {
        return Err(Failure::Usage(format!(
            "point has {} coordinates, the polyhedron lives in dimension {}",
            x.len(),
            v.dim()
        )));
    }
    match member_certificate(v, &x)? {
        Some(c) => {
            println!("lambda = {}", list(&c.lambda));
            println!("mu = {}", list(&c.mu));
            Ok(())
        }
        None => {
            println!("not a member");
            Err(Failure::Verdict)
        }
    }
}

struct Row {
    route: &'static str,
    output_rows: usize,
    feasible_bases: u64,
    max_intermediate_rays: usize,
}

fn liftcompare(v: &VRep, csv: Option<&Path>, cap: u64) -> Result<(), Failure> {
    let (lifted, rl) = facet_enumeration_lifted(v)?;
    let (direct, rd) = facet_enumeration_direct(v)?;
    let rows = [
        Row {
            route: "lifted",
            output_rows: rl.output_rows,
            feasible_bases: count_cone_bases(&lifted_cone_rows(v).0, cap)?,
            max_intermediate_rays: rl.max_intermediate_rays,
        },
        Row {
            route: "direct",
            output_rows: rd.output_rows,
            feasible_bases: count_cone_bases(&direct_system(v), cap)?,
            max_intermediate_rays: rd.max_intermediate_rays,
        },
    ];
    if !same_h(&lifted, &direct) {
        eprintln!("error: the two routes produced different H-representations");
        return Err(Failure::Verdict);
    }

    println!(
        "{:<8} {:>11} {:>14} {:>21}",
        "route", "output_rows", "feasible_bases", "max_intermediate_rays"
    );
    let mut table = String::from("route,output_rows,feasible_bases,max_intermediate_rays\n");
    for r in &rows {
        println!(
            "{:<8} {:>11} {:>14} {:>21}",
            r.route, r.output_rows, r.feasible_bases, r.max_intermediate_rays
        );
        let _ = writeln!(
            table,
            "{},{},{},{}",
            r.route, r.output_rows, r.feasible_bases, r.max_intermediate_rays
        );
    }
    println!("H-representations identical: yes");
    if let Some(p) = csv {
        fs::write(p, table).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn same_h(a: &HRep, b: &HRep) -> bool {
    a.canonical() == b.canonical()
}
