//! Command-line surface: Schur polynomials by any route, exhaustive
//! identity verification (symbolic or numeric), proposition sweeps, engine
//! benchmarks, and elementary symmetric polynomials.
//!
//! Exit codes: 0 all checks pass, 1 an identity check failed, 2 usage
//! error. Output is text by default, JSON with `--json`; fixed seeds give
//! byte-identical output.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schurkit::{
    all_selections, build_p, det_bareiss, det_cofactor, det_hessenberg, elementary, minor_rows,
    schur_bialternant, schur_jacobi_trudi, schur_tableaux_with_cap, signed_elementary,
    verify_main_identity, verify_main_identity_numeric, verify_propositions,
    verify_selection_sweep, ColumnSelection, MultiPoly, Partition, VariableSet,
};

#[derive(Parser)]
#[command(name = "schurkit", version, about = "Exact Schur polynomial toolkit")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for numeric-mode sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cell cap for tableau enumeration.
    #[arg(long, global = true, default_value_t = 12)]
    max_cells: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Schur polynomial by one route or all three.
    Schur {
        /// Partition as comma-separated parts, e.g. "2,1"; empty for s = 1.
        #[arg(long)]
        lambda: String,
        /// Number of variables.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Check the main identity, exhaustively or for one selection.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Columns kept besides the last, e.g. "1,3"; omit to sweep all.
        #[arg(long, value_delimiter = ',')]
        i_set: Option<Vec<usize>>,
        /// Evaluate at random integer points instead of symbolically.
        #[arg(long)]
        numeric: bool,
        /// Trials per case in numeric mode.
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Check the special-case propositions up to the given bounds.
    Props {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
    },
    /// Time a determinant engine on the banded minor with consecutive
    /// trailing rows.
    Bench {
        #[arg(long, value_enum)]
        engine: Engine,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
    /// Print an elementary symmetric polynomial.
    Elem {
        /// Number of variables.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Use the signed convention (-1)^(k-1) * ebar_k, with e_0 = -1.
        #[arg(long)]
        signed: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Bialternant,
    JacobiTrudi,
    Ssyt,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Cofactor,
    Bareiss,
    Hessenberg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) = success, Ok(false) = an identity check failed, Err = usage.
fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Schur { lambda, n, method } => cmd_schur(cli, lambda, *n, *method),
        Command::Verify {
            n,
            r,
            i_set,
            numeric,
            trials,
        } => cmd_verify(cli, *n, *r, i_set.as_deref(), *numeric, *trials),
        Command::Props { max_n, max_r } => cmd_props(cli, *max_n, *max_r),
        Command::Bench {
            engine,
            n,
            r,
            repeat,
        } => cmd_bench(cli, *engine, *n, *r, *repeat),
        Command::Elem { n, k, signed } => cmd_elem(cli, *n, *k, *signed),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Bialternant => "bialternant",
        Method::JacobiTrudi => "jacobi-trudi",
        Method::Ssyt => "ssyt",
        Method::All => "all",
    }
}

fn compute_route(
    lam: &Partition,
    n: usize,
    method: Method,
    max_cells: usize,
) -> Result<MultiPoly, String> {
    let value = match method {
        Method::Bialternant => schur_bialternant(lam, n),
        Method::JacobiTrudi => schur_jacobi_trudi(lam, n),
        Method::Ssyt => schur_tableaux_with_cap(lam, n, max_cells),
        Method::All => unreachable!("routes are computed one at a time"),
    };
    value.map_err(|e| e.to_string())
}

fn cmd_schur(cli: &Cli, lambda: &str, n: usize, method: Method) -> Result<bool, String> {
    let lam = Partition::parse(lambda).map_err(|e| e.to_string())?;
    if lam.len() > n {
        return Err(format!("partition {lam} has more than {n} parts"));
    }
    if method != Method::All {
        let value = compute_route(&lam, n, method, cli.max_cells)?;
        if cli.json {
            println!(
                "{}",
                json!({
                    "lambda": lam.to_string(),
                    "n": n,
                    "method": method_name(method),
                    "value": value,
                })
            );
        } else {
            println!("{value}");
        }
        return Ok(true);
    }

    let a = compute_route(&lam, n, Method::Bialternant, cli.max_cells)?;
    let b = compute_route(&lam, n, Method::JacobiTrudi, cli.max_cells)?;
    let c = compute_route(&lam, n, Method::Ssyt, cli.max_cells)?;
    let agree = a == b && a == c;
    if cli.json {
        println!(
            "{}",
            json!({
                "lambda": lam.to_string(),
                "n": n,
                "method": "all",
                "values": {
                    "bialternant": a,
                    "jacobi-trudi": b,
                    "ssyt": c,
                },
                "agree": agree,
            })
        );
    } else {
        println!("bialternant: {a}");
        println!("jacobi-trudi: {b}");
        println!("ssyt: {c}");
        println!("agree={agree}");
    }
    Ok(agree)
}

fn cmd_verify(
    cli: &Cli,
    n: usize,
    r: usize,
    i_set: Option<&[usize]>,
    numeric: bool,
    trials: usize,
) -> Result<bool, String> {
    if n < 1 || r < 1 {
        return Err("n and r must be at least 1".into());
    }
    let selections: Vec<ColumnSelection> = match i_set {
        Some(set) => vec![ColumnSelection::new(n, r, set.to_vec()).map_err(|e| e.to_string())?],
        None => all_selections(n, r),
    };

    if numeric {
        let reports: Vec<_> = selections
            .iter()
            .map(|sel| verify_main_identity_numeric(sel, cli.seed, trials))
            .collect();
        let passed = reports.iter().filter(|rep| rep.pass).count();
        if cli.json {
            println!("{}", serde_json::to_string(&reports).expect("serializable"));
        } else {
            for rep in &reports {
                println!(
                    "n={} r={} i_set={:?} seed={} trials={} pass={} notes={}",
                    rep.n, rep.r, rep.i_set, rep.seed, rep.trials, rep.pass, rep.notes
                );
            }
            println!("passed {passed}/{}", reports.len());
        }
        return Ok(passed == reports.len());
    }

    let reports: Vec<_> = match i_set {
        Some(set) => vec![verify_main_identity(n, r, set).map_err(|e| e.to_string())?],
        None => verify_selection_sweep(n, r),
    };
    let passed = reports.iter().filter(|rep| rep.pass).count();
    if cli.json {
        println!("{}", serde_json::to_string(&reports).expect("serializable"));
    } else {
        for rep in &reports {
            println!(
                "n={} r={} i_set={:?} j_set={:?} sign={} pass={} notes={}",
                rep.n, rep.r, rep.i_set, rep.j_set, rep.sign_used, rep.pass, rep.notes
            );
        }
        println!("passed {passed}/{}", reports.len());
    }
    Ok(passed == reports.len())
}

fn cmd_props(cli: &Cli, max_n: usize, max_r: usize) -> Result<bool, String> {
    if max_n < 1 || max_r < 1 {
        return Err("bounds must be at least 1".into());
    }
    let reports = verify_propositions(max_n, max_r);
    let passed = reports.iter().filter(|rep| rep.pass).count();
    if cli.json {
        println!("{}", serde_json::to_string(&reports).expect("serializable"));
    } else {
        for rep in &reports {
            println!(
                "n={} r={} i_set={:?} pass={} notes={}",
                rep.n, rep.r, rep.i_set, rep.pass, rep.notes
            );
        }
        println!("passed {passed}/{}", reports.len());
    }
    Ok(passed == reports.len())
}

fn cmd_bench(cli: &Cli, engine: Engine, n: usize, r: usize, repeat: usize) -> Result<bool, String> {
    if n < 1 || r < 1 || repeat < 1 {
        return Err("n, r, and repeat must be at least 1".into());
    }
    let j_set: Vec<usize> = (n..n + r).collect();
    let q = minor_rows(&build_p(n, r), &j_set).map_err(|e| e.to_string())?;

    let mut timings = Vec::with_capacity(repeat);
    let mut terms = 0usize;
    for _ in 0..repeat {
        let start = Instant::now();
        let det = match engine {
            Engine::Cofactor => det_cofactor(&q).map_err(|e| e.to_string())?,
            Engine::Bareiss => det_bareiss(&q).map_err(|e| e.to_string())?,
            Engine::Hessenberg => det_hessenberg(n, r),
        };
        timings.push(start.elapsed().as_micros() as u64);
        terms = det.num_terms();
    }
    timings.sort_unstable();
    let median = timings[timings.len() / 2];
    let name = match engine {
        Engine::Cofactor => "cofactor",
        Engine::Bareiss => "bareiss",
        Engine::Hessenberg => "hessenberg",
    };
    if cli.json {
        println!(
            "{}",
            json!({
                "engine": name,
                "n": n,
                "r": r,
                "repeat": repeat,
                "median_us": median,
                "terms": terms,
            })
        );
    } else {
        println!("engine={name} n={n} r={r} repeat={repeat} median_us={median} terms={terms}");
    }
    Ok(true)
}

fn cmd_elem(cli: &Cli, n: usize, k: usize, signed: bool) -> Result<bool, String> {
    if n < 1 {
        return Err("n must be at least 1".into());
    }
    let vars = VariableSet::new(n);
    let value = if signed {
        if k > n {
            return Err(format!("signed variant needs k <= n, got k={k} n={n}"));
        }
        signed_elementary(&vars, k)
    } else {
        elementary(&vars, k)
    };
    if cli.json {
        println!(
            "{}",
            json!({
                "n": n,
                "k": k,
                "signed": signed,
                "value": value,
            })
        );
    } else {
        println!("{value}");
    }
    Ok(true)
}
