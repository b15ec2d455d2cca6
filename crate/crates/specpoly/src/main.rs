//! `specpoly`: command-line front end for the polynomial constructions and
//! verification sweeps.
//!
//! Exit codes: 0 on success (including all-pass verification), 1 on any
//! verification failure, 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use specpoly::chebylucas::{lucas, spread, spread_value};
use specpoly::cyclotomic::cyclotomic;
use specpoly::cycloring::{w_value, UnitPoint};
use specpoly::format;
use specpoly::minpoly::{oracle_deviation, phi_big, phi_eval, phi_float_oracle, phi_min, psi};
use specpoly::minpoly::check_spread_factorization;
use specpoly::polyz::IntPoly;
use specpoly::theorems::{sweep, value_table};

#[derive(Parser)]
#[command(
    name = "specpoly",
    about = "Minimal polynomials of 4sin^2(pi/n): construction, tables, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Pretty,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Lucas polynomial L_n
    Lucas {
        n: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: PolyFormat,
    },
    /// Print the spread polynomial Z_n = 2 - L_n(2 - x)
    Spread {
        n: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: PolyFormat,
    },
    /// Print the periodic values Z_n(k) for k in 0..=4
    SpreadTable {
        #[arg(long, default_value_t = 12)]
        max: u64,
    },
    /// Print the cyclotomic polynomial C_n
    Cyclo {
        n: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: PolyFormat,
    },
    /// Print psi_n, the minimal polynomial of 2cos(2pi/n) (n >= 3)
    Psi {
        n: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: PolyFormat,
    },
    /// Print phi_n, the minimal polynomial of 4sin^2(pi/n)
    Phi {
        n: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: PolyFormat,
    },
    /// Print the spread factor Phi_n (phi_n squared for n >= 3)
    #[command(name = "Phi")]
    PhiBig {
        n: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: PolyFormat,
    },
    /// Evaluate a polynomial family member at an integer point
    Eval {
        /// One of: lucas, spread, cyclo, psi, phi, Phi
        which: String,
        n: u64,
        #[arg(allow_hyphen_values = true)]
        x: i64,
    },
    /// Print w(n, z) = C_n(z)/z^(totient(n)/2) at a unit of Z[zeta_12]
    W {
        n: u64,
        /// One of: sigma, i, omega, -1, 1
        #[arg(allow_hyphen_values = true)]
        unit: String,
    },
    /// Sweep-verify the sign theorems
    Verify {
        /// 1..5 or "all"
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 200)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Verify the factorization Z_n = prod over d | n of Phi_d
    Factorcheck {
        #[arg(long, default_value_t = 100)]
        max: u64,
    },
    /// Print the value table n, phi_n(0), phi_2n(4), phi_3n(3), phi_4n(2), phi_6n(1), v(n)
    Table {
        #[arg(long, default_value_t = 23)]
        max: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: TableFormat,
    },
    /// Compare the float root-product oracle for phi_n against the exact coefficients
    Oracle { n: u64 },
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("run `specpoly --help` for usage");
    2
}

fn print_poly(name: &str, n: u64, p: &IntPoly, format: PolyFormat) {
    match format {
        PolyFormat::Pretty => println!("{p}"),
        PolyFormat::Json => {
            let _ = name;
            println!("{}", format::poly_to_json(n, p));
        }
    }
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match cli.command {
        Command::Lucas { n, format } => {
            print_poly("lucas", n, &lucas(n), format);
            0
        }
        Command::Spread { n, format } => {
            if n < 1 {
                return usage_error("spread: n must be at least 1");
            }
            print_poly("spread", n, &spread(n), format);
            0
        }
        Command::SpreadTable { max } => {
            println!("n Z_n(0) Z_n(1) Z_n(2) Z_n(3) Z_n(4)");
            for n in 0..=max {
                println!(
                    "{n} {} {} {} {} {}",
                    spread_value(n, 0),
                    spread_value(n, 1),
                    spread_value(n, 2),
                    spread_value(n, 3),
                    spread_value(n, 4)
                );
            }
            0
        }
        Command::Cyclo { n, format } => {
            if n < 1 {
                return usage_error("cyclo: n must be at least 1");
            }
            print_poly("cyclo", n, &cyclotomic(n), format);
            0
        }
        Command::Psi { n, format } => {
            if n < 3 {
                return usage_error("psi: n must be at least 3");
            }
            print_poly("psi", n, &psi(n), format);
            0
        }
        Command::Phi { n, format } => {
            if n < 1 {
                return usage_error("phi: n must be at least 1");
            }
            print_poly("phi", n, &phi_min(n), format);
            0
        }
        Command::PhiBig { n, format } => {
            if n < 1 {
                return usage_error("Phi: n must be at least 1");
            }
            print_poly("Phi", n, &phi_big(n), format);
            0
        }
        Command::Eval { which, n, x } => {
            let value = match which.as_str() {
                "lucas" => lucas(n).eval_i64(x),
                "spread" if n >= 1 => spread(n).eval_i64(x),
                "cyclo" if n >= 1 => cyclotomic(n).eval_i64(x),
                "psi" if n >= 3 => psi(n).eval_i64(x),
                "phi" if n >= 1 => phi_eval(n, x),
                "Phi" if n >= 1 => phi_big(n).eval_i64(x),
                "spread" | "cyclo" | "psi" | "phi" | "Phi" => {
                    return usage_error(&format!("eval {which}: n = {n} is out of range"));
                }
                _ => {
                    return usage_error(&format!(
                        "eval: unknown family {which:?} (expected lucas, spread, cyclo, psi, phi or Phi)"
                    ));
                }
            };
            println!("{value}");
            0
        }
        Command::W { n, unit } => {
            let z = match unit.as_str() {
                "sigma" => UnitPoint::SIGMA,
                "i" => UnitPoint::I,
                "omega" => UnitPoint::OMEGA,
                "-1" => UnitPoint::MINUS_ONE,
                "1" => UnitPoint::ONE,
                _ => {
                    return usage_error(&format!(
                        "w: unknown unit {unit:?} (expected sigma, i, omega, -1 or 1)"
                    ));
                }
            };
            let defined = match z {
                UnitPoint::ONE => n >= 1,
                UnitPoint::MINUS_ONE => n >= 2,
                _ => n >= 3,
            };
            if !defined {
                return usage_error(&format!("w: n = {n} is out of range for unit {unit}"));
            }
            let w = w_value(n, z);
            match w.as_int() {
                Some(k) => println!("w({n}, {}) = {w} = {k}", z.name()),
                None => println!("w({n}, {}) = {w}", z.name()),
            }
            0
        }
        Command::Verify { theorem, max, jobs } => {
            let theorems: Vec<u8> = match theorem.as_str() {
                "all" => vec![1, 2, 3, 4, 5],
                t => match t.parse::<u8>() {
                    Ok(t @ 1..=5) => vec![t],
                    _ => return usage_error("verify: --theorem must be 1..5 or \"all\""),
                },
            };
            if max < 3 {
                return usage_error("verify: --max must be at least 3");
            }
            let mut any_failure = false;
            for t in theorems {
                let rows = sweep(t, 3, max, jobs);
                let mut failed = 0usize;
                for r in &rows {
                    if !r.pass {
                        failed += 1;
                        println!(
                            "FAIL theorem {t} n={}: computed {}, predicted {}",
                            r.n, r.computed, r.predicted
                        );
                    }
                }
                println!("theorem {t}: {}/{} passed", rows.len() - failed, rows.len());
                any_failure |= failed > 0;
            }
            i32::from(any_failure)
        }
        Command::Factorcheck { max } => {
            if max < 1 {
                return usage_error("factorcheck: --max must be at least 1");
            }
            let mut failed = 0usize;
            for n in 1..=max {
                if let Err(e) = check_spread_factorization(n) {
                    failed += 1;
                    println!("FAIL {e}");
                }
            }
            println!(
                "spread factorization: {}/{} passed",
                max as usize - failed,
                max
            );
            i32::from(failed > 0)
        }
        Command::Table { max, format } => {
            if max < 1 {
                return usage_error("table: --max must be at least 1");
            }
            let rows = value_table(max);
            match format {
                TableFormat::Csv => print!("{}", format::table_to_csv(&rows)),
                TableFormat::Json => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "n": r.n,
                                "phi_n_0": r.phi_n_0.to_string(),
                                "phi_2n_4": r.phi_2n_4.to_string(),
                                "phi_3n_3": r.phi_3n_3.to_string(),
                                "phi_4n_2": r.phi_4n_2.to_string(),
                                "phi_6n_1": r.phi_6n_1.to_string(),
                                "v_n": r.v_n,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(items));
                }
                TableFormat::Pretty => {
                    println!(
                        "{:>5} {:>10} {:>10} {:>10} {:>10} {:>10} {:>6}",
                        "n", "phi_n(0)", "phi_2n(4)", "phi_3n(3)", "phi_4n(2)", "phi_6n(1)", "v(n)"
                    );
                    for r in &rows {
                        let marker = if r.in_theorem_range() { " " } else { "*" };
                        println!(
                            "{:>5}{marker}{:>10} {:>10} {:>10} {:>10} {:>10} {:>6}",
                            r.n, r.phi_n_0, r.phi_2n_4, r.phi_3n_3, r.phi_4n_2, r.phi_6n_1, r.v_n
                        );
                    }
                    if rows.iter().any(|r| !r.in_theorem_range()) {
                        println!("* outside theorem range (the sign rules start at n = 3)");
                    }
                }
            }
            0
        }
        Command::Oracle { n } => {
            if n < 3 {
                return usage_error("oracle: n must be at least 3");
            }
            let approx = phi_float_oracle(n);
            let exact = phi_min(n);
            println!("exact  : {exact}");
            println!(
                "oracle : [{}]",
                approx
                    .iter()
                    .map(|c| format!("{c:.6}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("max relative deviation: {:.3e}", oracle_deviation(n));
            0
        }
    }
}

fn main() {
    std::process::exit(run());
}
