//! `cgqh`: verification suites, product and invariant queries, the
//! enumerative computations, the derivation pipeline and spectral checks.
//!
//! Exit status: 0 when everything checked passes, 1 when a verification
//! fails, 2 on bad arguments or unreadable data.

use std::path::PathBuf;
use std::process::ExitCode;

use cgqh_core::exact::{parse_rational, Rational};
use cgqh_core::intersection::{scenario, SCENARIO_IDS};
use cgqh_core::pipeline::{close_loop_with, ScenarioOutputs};
use cgqh_core::schubert::{Label, SchubertElement};
use cgqh_core::spectral::{charpoly_at, conjecture_o_check, SpectralReport};
use cgqh_core::suite::{run_suite, DataSet, Suite};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cgqh", version, about = "Exact checks of the quantum cohomology of the Cayley Grassmannian")]
struct Cli {
    /// Multiplication table (relative paths resolve against CG_DATA_DIR).
    #[arg(long, global = true)]
    table_file: Option<PathBuf>,
    /// Giambelli dictionary (relative paths resolve against CG_DATA_DIR).
    #[arg(long, global = true)]
    giambelli_file: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Quantum product of two Schubert classes.
    Product { a: String, b: String },
    /// Gromov-Witten invariant I_d(a, b, c).
    Gw { d: u32, a: String, b: String, c: String },
    /// One enumerative computation, or all of them.
    Scenario {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
    /// Rebuild the ring from the enumerative counts and compare.
    Derive,
    /// Characteristic polynomial of quantum multiplication by s1.
    Charpoly {
        #[arg(long, default_value = "1")]
        q: String,
    },
    /// Spectral radius and its eigenvalues.
    ConjectureO,
}

/// An error that maps to exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(cli: &Cli) -> Result<DataSet, Usage> {
    let dir = std::env::var_os("CG_DATA_DIR").map(PathBuf::from);
    Ok(DataSet::load(dir.as_deref(), cli.table_file.as_deref(), cli.giambelli_file.as_deref())?)
}

fn label(s: &str) -> Result<Label, Usage> {
    s.parse().map_err(|_| Usage(format!("unknown label {s:?}")))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { suite } => {
            let data = load(cli)?;
            let report = run_suite(*suite, &data);
            if cli.json {
                emit(&report);
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.all_passed())
        }
        Command::Product { a, b } => {
            let (a, b) = (label(a)?, label(b)?);
            let data = load(cli)?;
            let p = data.table.quantum_product(&SchubertElement::basis(a), &SchubertElement::basis(b));
            if cli.json {
                emit(&json!({ "a": a, "b": b, "product": p.to_string() }));
            } else {
                println!("{p}");
            }
            Ok(true)
        }
        Command::Gw { d, a, b, c } => {
            if *d > 4 {
                return Err(Usage(format!("degree {d} is out of range 0..=4")));
            }
            let (a, b, c) = (label(a)?, label(b)?, label(c)?);
            let data = load(cli)?;
            let v = data.table.gw_invariant(*d, a, b, c);
            if cli.json {
                emit(&json!({ "d": d, "a": a, "b": b, "c": c, "value": v.to_string() }));
            } else {
                println!("{v}");
            }
            Ok(true)
        }
        Command::Scenario { id, all } => {
            let ids: Vec<&str> = match (id, all) {
                (Some(id), false) => vec![id.as_str()],
                (None, true) => SCENARIO_IDS.to_vec(),
                _ => return Err(Usage("give a scenario id or --all".into())),
            };
            let mut rows = Vec::new();
            for id in ids {
                let s = scenario(id)?;
                let r = s.run().map_err(|e| Usage(format!("{id}: {e}")))?;
                rows.push((s, r));
            }
            if cli.json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|(s, r)| {
                        json!({
                            "id": s.id, "invariant": s.invariant, "space": s.space,
                            "main": r.main.to_string(), "correction": r.correction.to_string(), "value": r.value.to_string(),
                        })
                    })
                    .collect();
                emit(&if *all { json!(v) } else { v[0].clone() });
            } else if *all {
                for (s, r) in &rows {
                    println!("{} {}: {r}", s.id, s.invariant);
                }
            } else {
                println!("{}", rows[0].1);
            }
            Ok(true)
        }
        Command::Derive => {
            let data = load(cli)?;
            let outputs = ScenarioOutputs::computed()?;
            let run = match close_loop_with(outputs, &data.table) {
                Ok(run) => run,
                Err(e) => {
                    if cli.json {
                        emit(&json!({ "error": e.to_string() }));
                    } else {
                        println!("derivation failed: {e}");
                    }
                    return Ok(false);
                }
            };
            let report = run.report();
            if cli.json {
                emit(&report);
            } else {
                for u in &report.unknowns {
                    println!("{} = {}", u.name, u.value);
                }
                println!("s2*s2 = {}", report.s2_s2);
                println!("s4*s2 = {}", report.s4_s2);
                for r in &report.relations {
                    println!("relation: {r} = 0");
                }
                for (l, g) in &report.giambelli {
                    println!("{l} = {g}");
                }
                if report.diff.is_empty() {
                    println!("all 120 products agree with the table");
                } else {
                    for d in &report.diff {
                        println!("{}*{}: derived {}, table {}", d.a, d.b, d.derived, d.reference);
                    }
                }
            }
            Ok(report.diff.is_empty())
        }
        Command::Charpoly { q } => {
            let q: Rational = parse_rational(q)?;
            let data = load(cli)?;
            let p = charpoly_at(&data.table, &q);
            if cli.json {
                let mut coeffs: Vec<_> = p.terms().map(|(e, c)| json!([e, c.to_string()])).collect();
                coeffs.reverse();
                emit(&json!({ "q": q.to_string(), "char_poly": p.display_with("t"), "coefficients": coeffs }));
            } else {
                println!("{}", p.display_with("t"));
            }
            Ok(true)
        }
        Command::ConjectureO => {
            let data = load(cli)?;
            let rep = conjecture_o_check(&data.table);
            if cli.json {
                emit(&rep);
            } else {
                print_spectral(&rep);
            }
            Ok(rep.all_flags() && rep.galkin.as_ref().is_some_and(|g| g.bound_ok))
        }
    }
}

fn print_spectral(rep: &SpectralReport) {
    println!("det(tI - M) = {}", rep.char_poly);
    if let Some(f) = &rep.cubic {
        println!("f(y) = {f}  (det(tI - M) = t^3 f(t^4))");
    }
    if let Some(y) = &rep.y_max {
        println!("y_max = {} +- {}", y.decimal, y.radius);
    }
    if let Some(t) = &rep.t {
        println!("T = {} +- {}", t.decimal, t.radius);
    }
    if let Some(g) = &rep.galkin {
        println!("T(CG) = {} +- {}", g.t_cg.decimal, g.t_cg.radius);
        println!("T(CG) > {}: {}", g.bound, g.bound_ok);
    }
    println!("trace form rank {}, Gram determinant {}", rep.trace_form.rank, rep.trace_form.gram_determinant);
    for e in &rep.eigenvalues {
        println!("eigenvalue {:+.12} {:+.12}i  radius {:.1e}  multiplicity {}", e.re, e.im, e.radius, e.multiplicity);
    }
    println!("max_eigenvalue_real_simple: {}", rep.max_eigenvalue_real_simple);
    println!("modulus_t_set_is_t_times_fourth_roots: {}", rep.modulus_t_set_is_t_times_fourth_roots);
    println!("trace_form_nondegenerate: {}", rep.trace_form_nondegenerate);
    for d in &rep.diagnostics {
        println!("note: {d}");
    }
}
