use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use alextop::bench::{self, BenchSpec};
use alextop::dot::quotient_hasse_dot;
use alextop::format::{load_space, point_display, set_display, FormatError};
use alextop::verify::{verify_up_to, VerifyError};
use alextop_core::{
    census, enumerate_posets, height, irreducible_closed_sets, kolmogorov_quotient,
    krull_dimension_bruteforce, EnumerateError, Preorder,
};

const EXIT_INVALID: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// The brute-force routes enumerate all down-sets, which is exponential
/// in the carrier; refuse inputs where that blows up.
const MAX_BRUTEFORCE_POINTS: usize = 24;

#[derive(Parser)]
#[command(name = "alextop", about = "Dimension of finite Alexandrov topological spaces", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DimMode {
    Fast,
    Bruteforce,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the dimension of a space, by one route or both.
    Dim {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        mode: DimMode,
        #[arg(long)]
        close: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compute the height (fast route only).
    Height {
        file: PathBuf,
        #[arg(long)]
        close: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the Kolmogorov quotient: classes, projection, order.
    Quotient {
        file: PathBuf,
        /// Emit the quotient's Hasse diagram as DOT.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        close: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the irreducible closed sets with their generating points.
    Irreducibles {
        file: PathBuf,
        #[arg(long)]
        close: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively verify every property over all spaces on 0..=max-n points.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit the census of all spaces on n points as CSV (or a JSON summary).
    Enumerate {
        n: usize,
        /// Restrict to T0 spaces (posets).
        #[arg(long)]
        posets: bool,
        #[arg(long)]
        json: bool,
    },
    /// Time the fast height path on a pseudo-random preorder.
    Bench {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CmdError {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl ToString) -> CmdError {
    CmdError { code, message: message.to_string() }
}

fn load(file: &Path, close: bool) -> Result<Preorder, CmdError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| fail(EXIT_INVALID, format!("cannot read {}: {}", file.display(), e)))?;
    load_space(&text, close).map_err(|e| match e {
        FormatError::Json(_) => fail(EXIT_INVALID, format!("parse error: {}", e)),
        other => fail(EXIT_INVALID, format!("validation error: {}", other)),
    })
}

fn guard_bruteforce(p: &Preorder) -> Result<(), CmdError> {
    if p.n() > MAX_BRUTEFORCE_POINTS {
        return Err(fail(
            EXIT_RESOURCE,
            format!(
                "brute-force route enumerates all down-sets; {} points exceeds the limit of {}",
                p.n(),
                MAX_BRUTEFORCE_POINTS
            ),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.cmd {
        Cmd::Dim { file, mode, close, json } => cmd_dim(&file, mode, close, json),
        Cmd::Height { file, close, json } => {
            let p = load(&file, close)?;
            let h = height(&p);
            if json {
                println!("{}", json!({ "height": h }));
            } else {
                println!("{}", h);
            }
            Ok(())
        }
        Cmd::Quotient { file, dot, close, json } => cmd_quotient(&file, dot, close, json),
        Cmd::Irreducibles { file, close, json } => cmd_irreducibles(&file, close, json),
        Cmd::Verify { max_n, json } => cmd_verify(max_n, json),
        Cmd::Enumerate { n, posets, json } => cmd_enumerate(n, posets, json),
        Cmd::Bench { points, edges, seed, json } => cmd_bench(points, edges, seed, json),
    }
}

fn cmd_dim(file: &Path, mode: DimMode, close: bool, json: bool) -> Result<(), CmdError> {
    let p = load(file, close)?;
    match mode {
        DimMode::Fast => {
            let h = height(&p);
            if json {
                println!("{}", json!({ "height": h }));
            } else {
                println!("{}", h);
            }
        }
        DimMode::Bruteforce => {
            guard_bruteforce(&p)?;
            let k = krull_dimension_bruteforce(&p);
            if json {
                println!("{}", json!({ "krull": k }));
            } else {
                println!("{}", k);
            }
        }
        DimMode::Both => {
            guard_bruteforce(&p)?;
            let k = krull_dimension_bruteforce(&p);
            let h = height(&p);
            let agree = k == h;
            if json {
                println!("{}", json!({ "krull": k, "height": h, "agree": agree }));
            } else {
                println!("krull={} height={} {}", k, h, if agree { "agree" } else { "DISAGREE" });
            }
            if !agree {
                return Err(fail(
                    EXIT_DISAGREEMENT,
                    format!("dimension routes disagree: krull={} height={}", k, h),
                ));
            }
        }
    }
    Ok(())
}

fn cmd_quotient(file: &Path, dot: bool, close: bool, json: bool) -> Result<(), CmdError> {
    let p = load(file, close)?;
    let labels = p.labels().map(<[String]>::to_vec);
    let q = kolmogorov_quotient(&p);
    if dot {
        print!("{}", quotient_hasse_dot(&q, labels.as_deref()));
        return Ok(());
    }
    let strict: Vec<(usize, usize)> = (0..q.poset.n())
        .flat_map(|c| (0..q.poset.n()).map(move |d| (c, d)))
        .filter(|&(c, d)| c != d && q.poset.leq(c, d))
        .collect();
    if json {
        let classes: Vec<Vec<String>> = q
            .class_members
            .iter()
            .map(|m| m.iter().map(|&x| point_display(x, labels.as_deref())).collect())
            .collect();
        println!("{}", json!({ "classes": classes, "pi": q.pi, "order": strict }));
        return Ok(());
    }
    println!("classes={}", q.class_members.len());
    for (cid, members) in q.class_members.iter().enumerate() {
        let names: Vec<String> = members.iter().map(|&x| point_display(x, labels.as_deref())).collect();
        println!("class {}: {{{}}}", cid, names.join(","));
    }
    let pi: Vec<String> = (0..p.n())
        .map(|x| format!("{}->{}", point_display(x, labels.as_deref()), q.pi[x]))
        .collect();
    println!("pi: {}", pi.join(" "));
    let order: Vec<String> = strict.iter().map(|(c, d)| format!("{}<{}", c, d)).collect();
    println!("order: {}", order.join(" "));
    Ok(())
}

fn cmd_irreducibles(file: &Path, close: bool, json: bool) -> Result<(), CmdError> {
    let p = load(file, close)?;
    guard_bruteforce(&p)?;
    let labels = p.labels().map(<[String]>::to_vec);
    let mut lines = Vec::new();
    let mut records = Vec::new();
    for a in irreducible_closed_sets(&p) {
        let generators: Vec<usize> = (0..p.n())
            .filter(|&x| p.point_closure(x).expect("point in range") == a)
            .collect();
        let names: Vec<String> = generators.iter().map(|&x| point_display(x, labels.as_deref())).collect();
        let mut line = set_display(a.points(), labels.as_deref());
        for g in &names {
            line.push_str(&format!("=cl{{{}}}", g));
        }
        lines.push(line);
        records.push(json!({
            "set": a.points().iter().map(|x| point_display(x, labels.as_deref())).collect::<Vec<_>>(),
            "generators": names,
        }));
    }
    if json {
        println!("{}", json!(records));
    } else {
        for line in lines {
            println!("{}", line);
        }
    }
    Ok(())
}

fn enumerate_code(e: &EnumerateError) -> u8 {
    match e {
        EnumerateError::CarrierTooLarge { .. } => EXIT_RESOURCE,
        EnumerateError::TheoremViolation { .. } => EXIT_DISAGREEMENT,
    }
}

fn cmd_verify(max_n: usize, json: bool) -> Result<(), CmdError> {
    let start = Instant::now();
    let outcomes = verify_up_to(max_n).map_err(|e| match &e {
        VerifyError::Enumerate(inner) => fail(enumerate_code(inner), &e),
        VerifyError::PropertyFailed { .. } => fail(EXIT_DISAGREEMENT, &e),
    })?;
    let elapsed = start.elapsed();
    let total: u64 = outcomes.iter().map(|o| o.spaces).sum();
    if json {
        println!(
            "{}",
            json!({
                "max_n": max_n,
                "per_n": outcomes,
                "total": total,
                "seconds": elapsed.as_secs_f64(),
            })
        );
    } else {
        for o in &outcomes {
            println!("{} spaces at n={}, all agree", o.spaces, o.n);
        }
        println!("verified {} spaces in {:.3}s", total, elapsed.as_secs_f64());
    }
    Ok(())
}

fn cmd_enumerate(n: usize, posets: bool, json: bool) -> Result<(), CmdError> {
    let (mut rows, mut summary) = census(n).map_err(|e| fail(enumerate_code(&e), e))?;
    if posets {
        // same order; posets are the T0 subset, renumbered sequentially
        let t0_codes: Vec<bool> = rows.iter().map(|r| r.is_t0).collect();
        debug_assert_eq!(t0_codes.len() as u64, summary.total);
        rows.retain(|r| r.is_t0);
        for (i, row) in rows.iter_mut().enumerate() {
            row.space_id = i as u64;
        }
        summary.total = rows.len() as u64;
        summary.by_dimension_t0.retain(|((_, t0), _)| *t0);
        let _ = enumerate_posets(n); // same guard path
    }
    if json {
        let by: Vec<_> = summary
            .by_dimension_t0
            .iter()
            .map(|((dim, t0), count)| json!({ "dimension": dim, "t0": t0, "count": count }))
            .collect();
        println!("{}", json!({ "n": summary.n, "total": summary.total, "by_dimension": by }));
    } else {
        println!("space_id,n,is_t0,quotient_size,dimension");
        for r in rows {
            println!("{},{},{},{},{}", r.space_id, r.n, r.is_t0, r.quotient_size, r.dimension);
        }
    }
    Ok(())
}

fn cmd_bench(points: usize, edges: usize, seed: u64, json: bool) -> Result<(), CmdError> {
    let spec = BenchSpec { points, arcs: edges, seed };
    let (report, elapsed) = bench::run(&spec).map_err(|e| fail(EXIT_RESOURCE, e))?;
    // timing goes to stderr so stdout is byte-identical for a fixed seed
    eprintln!("height computed in {:.3}s", elapsed.as_secs_f64());
    if json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!("{}", report);
    }
    Ok(())
}
