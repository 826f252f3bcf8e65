//! Command-line surface over the toolkit.
//!
//! Exit codes: 0 success, 2 invalid input, 3 predicate violation found,
//! 4 budget exhausted / indeterminate. All machine output goes to stdout
//! and is byte-deterministic given flags and seed; diagnostics and timing
//! go to stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hampow_core::batch::{acceptance_suite, render_records};
use hampow_core::digraph::Digraph;
use hampow_core::euler::{
    decompose, is_eulerian, is_minimally_eulerian, reduce_to_minimally_eulerian, Minimality,
    DEFAULT_CYCLE_CAP,
};
use hampow_core::families::{
    certify_gk, generate_gk, random_dag, random_eulerian, HExact, PRNG_ALGORITHM,
};
use hampow_core::io::{format_edge_list, format_edge_list_commented, parse_edge_list, to_dot};
use hampow_core::power::{ham_exponent, power, ExponentOutcome, SolverOptions, DEFAULT_BUDGET};
use hampow_core::theorem::{
    check_prop12, check_prop13, check_thm21, lexmin_decomposition, threshold_row, threshold_scan,
    BoundReport, TheoremError, DEFAULT_CIRCUIT_BUDGET,
};
use std::path::{Path, PathBuf};

const EXIT_OK: i32 = 0;
const EXIT_INVALID: i32 = 2;
const EXIT_VIOLATION: i32 = 3;
const EXIT_BUDGET: i32 = 4;

#[derive(Parser)]
#[command(name = "hampow", version, about = "Eulerian digraph powers toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate graphs (family members and random corpora)
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Run predicates against an edge-list file
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Remove removable dicycles until the graph is minimally Eulerian
    Reduce(InputArg),
    /// Edge-disjoint decomposition into p# dipaths plus dicycles
    Decompose(InputArg),
    /// Compute the k-th power
    Power {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Hamiltonicity exponent with certificate
    Exponent {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Dipath-decomposition search
    Thm21 {
        #[command(subcommand)]
        what: Thm21Cmd,
    },
    /// Bound predicates
    Bounds {
        #[command(subcommand)]
        what: BoundsCmd,
    },
    /// Family certificates
    Certify {
        #[command(subcommand)]
        what: CertifyCmd,
    },
    /// Run check suites end to end
    Batch {
        #[command(subcommand)]
        what: BatchCmd,
    },
}

#[derive(Args)]
struct InputArg {
    /// Edge-list file ("n m" header, one "u v" line per edge)
    #[arg(long)]
    input: PathBuf,
}

#[derive(Copy, Clone, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum GkFormat {
    Edges,
    Dot,
    Roles,
}

#[derive(Subcommand)]
enum GenCmd {
    /// The extremal family member for parameter k
    Gk {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = GkFormat::Edges)]
        format: GkFormat,
    },
    /// Union of random dicycles, Eulerian by construction
    RandomEulerian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycles: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random DAG: permutation plus forward edges at the given density
    RandomDag {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Balanced and connected
    Eulerian(InputArg),
    /// Eulerian with no removable dicycle
    Minimal {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
    },
}

#[derive(Subcommand)]
enum Thm21Cmd {
    /// Search Euler circuits for the lexicographically minimal
    /// decomposition and check its length bound
    Search {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_CIRCUIT_BUDGET)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Edge bound for acyclic digraphs
    Prop12 {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        table: bool,
    },
    /// Edge bound for minimally Eulerian digraphs
    Prop13 {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
        #[arg(long)]
        table: bool,
    },
    /// Scan f_bound(n) against n-1
    Threshold {
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
        /// Emit one record per n in [2, 6387]
        #[arg(long)]
        full_table: bool,
    },
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Check the family's claims for parameter k
    Gk {
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Skip the exact-exponent attempt
        #[arg(long)]
        skip_exponent: bool,
    },
}

#[derive(Subcommand)]
enum BatchCmd {
    /// The nine-check acceptance suite
    Acceptance {
        /// Required: all randomness flows from here
        #[arg(long)]
        seed: u64,
        /// Run only checks whose id starts with this prefix (repeatable);
        /// no match means an empty report
        #[arg(long)]
        only: Vec<String>,
    },
}

fn load_graph(path: &Path) -> Result<Digraph, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_INVALID
    })?;
    parse_edge_list(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_INVALID
    })
}

fn print_bound(report: &BoundReport, table: bool) -> i32 {
    println!("{}", report.record());
    if table {
        print!("{}", BoundReport::table(std::slice::from_ref(report)));
    }
    if report.holds {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Gen { what } => match what {
            GenCmd::Gk { k, format } => match generate_gk(k) {
                Ok(gk) => {
                    match format {
                        GkFormat::Edges => print!("{}", format_edge_list(&gk.graph)),
                        GkFormat::Dot => print!("{}", gk.to_dot()),
                        GkFormat::Roles => {
                            for r in &gk.roles {
                                println!(
                                    "{}",
                                    match r {
                                        hampow_core::families::Role::U => "u",
                                        hampow_core::families::Role::V => "v",
                                    }
                                );
                            }
                        }
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INVALID
                }
            },
            GenCmd::RandomEulerian { n, cycles, seed } => {
                if n < 3 || cycles < 1 {
                    eprintln!("error: need n >= 3 and cycles >= 1");
                    return EXIT_INVALID;
                }
                match random_eulerian(n, cycles, seed) {
                    Ok(g) => {
                        print!(
                            "{}",
                            format_edge_list_commented(
                                &g,
                                &[format!("prng={PRNG_ALGORITHM} seed={seed}")]
                            )
                        );
                        EXIT_OK
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        EXIT_BUDGET
                    }
                }
            }
            GenCmd::RandomDag { n, density, seed } => {
                if n < 1 || !(0.0..=1.0).contains(&density) {
                    eprintln!("error: need n >= 1 and density in [0, 1]");
                    return EXIT_INVALID;
                }
                let g = random_dag(n, density, seed);
                print!(
                    "{}",
                    format_edge_list_commented(&g, &[format!("prng={PRNG_ALGORITHM} seed={seed}")])
                );
                EXIT_OK
            }
        },
        Cmd::Check { what } => match what {
            CheckCmd::Eulerian(input) => match load_graph(&input.input) {
                Ok(g) => {
                    let ok = is_eulerian(&g);
                    println!("eulerian={ok}");
                    if ok {
                        EXIT_OK
                    } else {
                        EXIT_VIOLATION
                    }
                }
                Err(c) => c,
            },
            CheckCmd::Minimal { input, cycle_cap } => match load_graph(&input.input) {
                Ok(g) => match is_minimally_eulerian(&g, cycle_cap) {
                    Minimality::Minimal => {
                        println!("minimal=true");
                        EXIT_OK
                    }
                    Minimality::NotEulerian => {
                        println!("minimal=false reason=not-eulerian");
                        EXIT_VIOLATION
                    }
                    Minimality::Removable(c) => {
                        println!("minimal=false removable={c}");
                        EXIT_VIOLATION
                    }
                    Minimality::Indeterminate => {
                        println!("minimal=indeterminate");
                        EXIT_BUDGET
                    }
                },
                Err(c) => c,
            },
        },
        Cmd::Reduce(input) => match load_graph(&input.input) {
            Ok(g) => match reduce_to_minimally_eulerian(&g) {
                Ok((reduced, trace)) => {
                    let comments: Vec<String> =
                        trace.iter().map(|c| format!("removed {c}")).collect();
                    print!("{}", format_edge_list_commented(&reduced, &comments));
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INVALID
                }
            },
            Err(c) => c,
        },
        Cmd::Decompose(input) => match load_graph(&input.input) {
            Ok(g) => {
                let out = decompose(&g);
                println!(
                    "p_sharp={} dipaths={} dicycles={}",
                    g.p_sharp(),
                    out.dipaths.len(),
                    out.dicycles.len()
                );
                print!("{}", out.report());
                EXIT_OK
            }
            Err(c) => c,
        },
        Cmd::Power { input, k, format } => match load_graph(&input.input) {
            Ok(g) => {
                let p = power(&g, k);
                match format {
                    GraphFormat::Edges => print!("{}", format_edge_list(&p)),
                    GraphFormat::Dot => print!("{}", to_dot(&p)),
                }
                EXIT_OK
            }
            Err(c) => c,
        },
        Cmd::Exponent { input, budget } => {
            match load_graph(&input.input) {
                Ok(g) => {
                    let opts = SolverOptions {
                        budget,
                        ..Default::default()
                    };
                    match ham_exponent(&g, &opts) {
                        ExponentOutcome::Exact { h, cert } => {
                            println!("h={h}");
                            print!("{}", cert.serialize());
                            EXIT_OK
                        }
                        ExponentOutcome::NotApplicable => {
                            eprintln!("error: exponent undefined (graph not strongly connected or too small)");
                            EXIT_INVALID
                        }
                        ExponentOutcome::BudgetExhausted { lo, hi } => {
                            println!("h=indeterminate lo={lo} hi={hi}");
                            EXIT_BUDGET
                        }
                    }
                }
                Err(c) => c,
            }
        }
        Cmd::Thm21 { what } => match what {
            Thm21Cmd::Search { input, budget } => match load_graph(&input.input) {
                Ok(g) => match lexmin_decomposition(&g, budget) {
                    Ok((d, exact)) => {
                        let lens: Vec<String> =
                            d.sorted_lengths().iter().map(|l| l.to_string()).collect();
                        println!(
                            "exact={exact} max_len={} lengths={}",
                            d.max_len,
                            lens.join(",")
                        );
                        for (i, p) in d.paths.iter().enumerate() {
                            let verts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                            println!("path {i}: {}", verts.join(" "));
                        }
                        let report = check_thm21(&g, &d).expect("search output is valid");
                        println!("{}", report.record());
                        if !report.holds {
                            EXIT_VIOLATION
                        } else if !exact {
                            EXIT_BUDGET
                        } else {
                            EXIT_OK
                        }
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        EXIT_INVALID
                    }
                },
                Err(c) => c,
            },
        },
        Cmd::Bounds { what } => match what {
            BoundsCmd::Prop12 { input, table } => match load_graph(&input.input) {
                Ok(g) => match check_prop12(&g) {
                    Ok(r) => print_bound(&r, table),
                    Err(e) => {
                        eprintln!("error: {e}");
                        EXIT_INVALID
                    }
                },
                Err(c) => c,
            },
            BoundsCmd::Prop13 {
                input,
                cycle_cap,
                table,
            } => match load_graph(&input.input) {
                Ok(g) => match check_prop13(&g, cycle_cap) {
                    Ok(r) => print_bound(&r, table),
                    Err(e @ TheoremError::NotMinimallyEulerian) => {
                        eprintln!("error: {e}");
                        EXIT_INVALID
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        EXIT_INVALID
                    }
                },
                Err(c) => c,
            },
            BoundsCmd::Threshold { limit, full_table } => {
                if limit < 6388 {
                    eprintln!("error: --limit must be at least 6388");
                    return EXIT_INVALID;
                }
                let r = threshold_scan(limit);
                if full_table {
                    for &(n, _) in &r.table {
                        println!("{}", threshold_row(n).record());
                    }
                }
                println!(
                    "violations={} first_failure={}",
                    r.violations.len(),
                    r.first_failure
                        .map_or_else(|| "none".to_string(), |n| n.to_string())
                );
                if r.violations.is_empty() {
                    EXIT_OK
                } else {
                    EXIT_VIOLATION
                }
            }
        },
        Cmd::Certify { what } => match what {
            CertifyCmd::Gk {
                k,
                budget,
                skip_exponent,
            } => {
                let opts = SolverOptions {
                    budget: if skip_exponent { 0 } else { budget },
                    ..Default::default()
                };
                match certify_gk(k, &opts) {
                    Ok(cert) => {
                        print!("{}", cert.render());
                        if !cert.all_checked_ok() {
                            EXIT_VIOLATION
                        } else if matches!(cert.h_exact, HExact::Indeterminate { .. }) {
                            EXIT_BUDGET
                        } else {
                            EXIT_OK
                        }
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        EXIT_INVALID
                    }
                }
            }
        },
        Cmd::Batch { what } => match what {
            BatchCmd::Acceptance { seed, only } => {
                let started = std::time::Instant::now();
                let results: Vec<_> = acceptance_suite(seed)
                    .into_iter()
                    .filter(|r| {
                        only.is_empty() || only.iter().any(|f| r.id.starts_with(f.as_str()))
                    })
                    .collect();
                print!("{}", render_records(&results));
                eprintln!("wall_clock_ms={}", started.elapsed().as_millis());
                if results.iter().all(|r| r.pass) {
                    EXIT_OK
                } else {
                    EXIT_VIOLATION
                }
            }
        },
    }
}

fn main() {
    std::process::exit(run(Cli::parse()));
}
