use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use catkit::{load_file, run_catalog, summarize, verify_entry, CatalogEntry, Filter, Strategy, Summary};
use clap::{Parser, Subcommand};
use exactpoly::parse_with;
use liealg::{derive_seed, index, rng_from_seed};

/// Checks catalog entries of Lie algebras: index, Pfaffians, semicenters
/// of Frobenius extensions and symmetrization into the enveloping algebra.
#[derive(Parser)]
#[command(name = "frobsc", version)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse catalog files and report syntax or consistency errors.
    Validate { path: PathBuf },
    /// Print the index of an entry.
    Index { file: PathBuf },
    /// Print the Pfaffian of an even-dimensional entry.
    Pfaffian { file: PathBuf },
    /// Run the extension pipeline on an entry with a torus.
    Semicenter {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verify an entry or a whole catalog directory.
    Verify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Restrict to entries with dim=N, name=NAME or tag=TAG; repeatable.
        #[arg(long)]
        filter: Vec<Filter>,
    },
    /// Symmetrize a polynomial into the enveloping algebra of an entry.
    Symmetrize {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = pbw::DEFAULT_DEGREE_CAP)]
        cap: u32,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(path: &Path) -> Result<CatalogEntry, ExitCode> {
    load_file(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn print_summary(s: &Summary, json: bool) -> ExitCode {
    if json {
        println!("{}", s.to_json());
    } else {
        print!("{}", s.to_human());
    }
    if s.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Validate { path } => {
            let files = if path.is_dir() { catkit::catalog_files(&path).map_err(usage)? } else { vec![path] };
            let mut bad = 0;
            for f in &files {
                if let Err(e) = load_file(f) {
                    bad += 1;
                    eprintln!("{}: {e}", f.display());
                }
            }
            println!("{} files, {bad} invalid", files.len());
            Ok(if bad == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Index { file } => {
            let e = load(&file)?;
            let mut rng = rng_from_seed(derive_seed(cli.seed, &e.name));
            println!("{}", index(&e.algebra, &mut rng));
            Ok(ExitCode::SUCCESS)
        }
        Command::Pfaffian { file } => {
            let e = load(&file)?;
            let pf = frobsc::pfaffian_of(&e.algebra).map_err(usage)?;
            println!("{pf}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Semicenter { file, json } => {
            let e = load(&file)?;
            let inst = catkit::instantiate_parameters(&e, Strategy::Sequential, cli.seed).map_err(usage)?;
            let mut rng = rng_from_seed(derive_seed(cli.seed, &e.name));
            let sc = frobsc::semicenter(&e.algebra, &inst.torus, &mut rng).map_err(usage)?;
            let gens: Vec<String> = sc.generators.iter().map(|g| g.poly_in_g.normalized().to_string()).collect();
            if json {
                let value = serde_json::json!({
                    "entry": e.name,
                    "parameters": inst.values.iter().map(|(k, v)| (k.clone(), v.to_string())).collect::<Vec<_>>(),
                    "pfaffian": sc.pfaffian.to_string(),
                    "generators": gens,
                    "degree_sum": sc.degree_sum,
                    "c": sc.c_value,
                    "flags_pass": sc.flags.all_pass(),
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json values serialize"));
            } else {
                for (k, v) in &inst.values {
                    println!("{k} = {v}");
                }
                println!("Pf = {}", sc.pfaffian);
                for g in &gens {
                    println!("generator {g}");
                }
                println!("degree sum {} <= c = {}", sc.degree_sum, sc.c_value);
            }
            Ok(if sc.flags.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { path, json, filter } => {
            let summary = if path.is_dir() {
                run_catalog(&path, cli.seed, &filter).map_err(usage)?
            } else {
                let e = load(&path)?;
                let reports =
                    if filter.iter().all(|f| f.matches(&e)) { vec![verify_entry(&e, cli.seed)] } else { vec![] };
                summarize(cli.seed, reports, vec![])
            };
            Ok(print_summary(&summary, json))
        }
        Command::Symmetrize { file, poly, cap } => {
            let e = load(&file)?;
            let n = e.dim();
            let p = parse_with(&poly, n, &|name: &str| {
                e.expect.invariants.iter().find(|(k, _)| k == name).map(|(_, v)| v.clone())
            })
            .map_err(usage)?;
            let g = Arc::new(e.algebra.clone());
            let s = pbw::symmetrize_with_cap(&p, &g, cap).map_err(usage)?;
            println!("{s}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    run(cli).unwrap_or_else(|code| code)
}
