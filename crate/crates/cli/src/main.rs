use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hecke_core::psmodule::{burnside_span_dim, ModuleDump};
use hecke_core::rational::{parse_rational, parse_rational_list};
use hecke_core::suite::{run_verify, SuiteConfig, MAX_RANK};
use hecke_core::{
    build_m, build_n, criterion_b, criterion_d, AlgebraContext, FullCharacter, HeckeError, MatrixModule, Rational,
    SignCharacter,
};

const EXIT_SIMPLE: u8 = 0;
const EXIT_NOT_SIMPLE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

/// Largest rank for which modules are built (`dim = n!`).
const MODULE_RANK_LIMIT: usize = 5;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Principal series of the type-B generalized graded Hecke algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether M(γ⊗μ) (type B) or N(γ⊗μ̄) (type D) is simple.
    Irreducible(ModuleQuery),
    /// Run the verification suite for one rank.
    Verify(VerifyQuery),
    /// Dump generator matrices, weights and isotypic blocks of a module.
    Module(ModuleQuery),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraType {
    B,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ModuleQuery {
    #[arg(long = "type", value_enum, default_value = "b", ignore_case = true)]
    algebra_type: AlgebraType,
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    k: String,
    /// Comma-separated rationals, e.g. `1/2,-3`.
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    /// Sign string such as `++-`; for type D either lift of μ̄.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Also run the Burnside span oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyQuery {
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    k: String,
    #[arg(long = "kc", allow_hyphen_values = true, default_value = "1/2")]
    k_c: String,
    #[arg(long = "degree", default_value_t = 3)]
    degree_bound: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

struct Parsed {
    chi: FullCharacter,
    k: Rational,
}

fn parse_query(q: &ModuleQuery) -> Result<Parsed, HeckeError> {
    let k = parse_rational(&q.k)?;
    let gamma = parse_rational_list(&q.gamma)?;
    let mu: SignCharacter = q.mu.parse()?;
    for len in [gamma.len(), mu.rank()] {
        if len != q.n {
            return Err(HeckeError::SizeMismatch {
                expected: q.n,
                found: len,
            });
        }
    }
    if q.n == 0 {
        return Err(HeckeError::IndexOutOfRange { index: 0, max: MODULE_RANK_LIMIT });
    }
    Ok(Parsed {
        chi: FullCharacter::new(gamma, mu)?,
        k,
    })
}

fn build(q: &ModuleQuery, p: &Parsed) -> Result<MatrixModule, HeckeError> {
    if q.n > MODULE_RANK_LIMIT {
        return Err(HeckeError::ResourceLimit(format!(
            "modules are built for n ≤ {MODULE_RANK_LIMIT}"
        )));
    }
    if q.oracle && q.n > MAX_RANK {
        return Err(HeckeError::ResourceLimit(format!("the oracle runs for n ≤ {MAX_RANK}")));
    }
    let ctx = AlgebraContext::new(q.n, p.k.clone())?;
    match q.algebra_type {
        AlgebraType::B => build_m(&p.chi, &ctx),
        AlgebraType::D => build_n(&p.chi, &ctx),
    }
}

fn error_exit(e: &HeckeError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        HeckeError::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_ERROR,
    })
}

fn print_dump(dump: &ModuleDump, format: Format) {
    match format {
        Format::Text => print!("{}", dump.render_text()),
        Format::Json => println!("{}", dump.to_json()),
    }
}

fn cmd_irreducible(q: &ModuleQuery) -> Result<u8, HeckeError> {
    let p = parse_query(q)?;
    let report = match q.algebra_type {
        AlgebraType::B => criterion_b(&p.chi.gamma, &p.chi.mu, &p.k)?,
        AlgebraType::D => criterion_d(&p.chi.gamma, &p.chi.mu, &p.k)?,
    };
    let mut code = if report.verdict.is_simple() {
        EXIT_SIMPLE
    } else {
        EXIT_NOT_SIMPLE
    };
    let mut oracle = None;
    let mut disagreement = None;
    let mut dim = 0;
    if q.oracle {
        let m = build(q, &p)?;
        dim = m.dim();
        let v = burnside_span_dim(&m);
        let agree = v.irreducible == report.verdict.is_simple();
        if !agree {
            code = EXIT_DISAGREE;
            disagreement = Some(ModuleDump::new(&m, false)?);
        }
        oracle = Some((v, agree));
    }
    match q.format {
        Format::Text => {
            print!("{report}");
            if let Some((v, agree)) = &oracle {
                let detail = match (v.span_dim, v.submodule_dim) {
                    (_, Some(s)) => format!("submodule of dim {s}"),
                    (Some(s), None) => format!("span {s} of {}", dim * dim),
                    (None, None) => String::new(),
                };
                println!(
                    "oracle: {} ({:?}, {detail}) {}",
                    if v.irreducible { "simple" } else { "not simple" },
                    v.method,
                    if *agree { "AGREE" } else { "DISAGREE" }
                );
            }
            if let Some(dump) = &disagreement {
                print!("{}", dump.render_text());
            }
        }
        Format::Json => {
            let mut out = json!({ "report": report });
            if let Some((v, agree)) = &oracle {
                out["oracle"] = json!(v);
                out["agree"] = json!(agree);
            }
            if let Some(dump) = &disagreement {
                out["module"] = json!(dump);
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(code)
}

fn cmd_module(q: &ModuleQuery) -> Result<u8, HeckeError> {
    let p = parse_query(q)?;
    let m = build(q, &p)?;
    print_dump(&ModuleDump::new(&m, q.oracle)?, q.format);
    Ok(EXIT_SIMPLE)
}

fn cmd_verify(q: &VerifyQuery) -> Result<u8, HeckeError> {
    let cfg = SuiteConfig {
        n: q.n,
        k: parse_rational(&q.k)?,
        k_c: parse_rational(&q.k_c)?,
        degree: q.degree_bound,
        seed: q.seed,
        samples: 20,
    };
    let report = run_verify(&cfg)?;
    match q.format {
        Format::Text => {
            for c in &report.checks {
                println!(
                    "{} {} ({} cases)",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.cases
                );
                if let Some(ce) = &c.counterexample {
                    println!("    counterexample: {ce}");
                }
            }
            let failed = report.failures().count();
            println!("{} checks, {failed} failed", report.checks.len());
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn init_threads() {
    if let Some(t) = std::env::var("HECKE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    let result = match &cli.command {
        Command::Irreducible(q) => cmd_irreducible(q),
        Command::Verify(q) => cmd_verify(q),
        Command::Module(q) => cmd_module(q),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => error_exit(&e),
    }
}
