use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use doodle_core::classify::inner_complement;
use doodle_core::codes::enumerate_codes;
use doodle_core::gauss::rebuild_from_gauss;
use doodle_core::hamiltonian::cycle_code;
use doodle_core::{DoodleDiagram, GaussCode};
use doodles::catalog::{catalog_path, lookup, metadata_path, Name};
use doodles::{render, run_census, table};

#[derive(Parser)]
#[command(name = "doodles", version, about = "Enumerate and classify planar doodles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the prime doodle codes with n crossings.
    Codes { n: usize },
    /// Run the census for n crossings and write the catalog.
    Enumerate {
        n: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Defaults to census/doodles-NN.jsonl.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the count grid for 6 to N crossings.
    Table {
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "census")]
        dir: PathBuf,
    },
    /// Draw a catalog entry or a Gauss code as SVG.
    Render {
        target: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "census")]
        dir: PathBuf,
    },
    /// Describe a catalog entry.
    Inspect {
        name: String,
        #[arg(long, default_value = "census")]
        dir: PathBuf,
    },
    /// Print the twin-group word of a catalog entry.
    Twin {
        name: String,
        #[arg(long, default_value = "census")]
        dir: PathBuf,
    },
    /// Print a Hamiltonian cycle code of a catalog entry.
    Hamiltonian {
        name: String,
        #[arg(long, default_value = "census")]
        dir: PathBuf,
    },
}

fn load(dir: &Path, name: &str) -> Result<DoodleDiagram> {
    let e = lookup(dir, name)?;
    e.diagram().with_context(|| format!("{name}: bad key {}", e.key))
}

fn inspect(dir: &Path, name: &str) -> Result<()> {
    let e = lookup(dir, name)?;
    let d = e.diagram().with_context(|| format!("{name}: bad key {}", e.key))?;
    println!("name          {}", e.name);
    println!("code          {}", e.code);
    println!("components    {}", e.m);
    println!("connectivity  {}", e.connectivity);
    let class = if e.super_prime {
        "super prime"
    } else if e.prime {
        "prime"
    } else {
        "not prime"
    };
    println!("class         {class}");
    println!("gauss         {}", e.gauss);
    println!("key           {}", e.key);
    println!("hamiltonian   {}", e.hamiltonian_code.as_deref().unwrap_or("none"));
    println!("twin word     {}", e.twin_word);
    println!("inner complements:");
    for (i, r) in d.trace_regions()?.iter().enumerate() {
        let c = inner_complement(&d, r);
        println!(
            "  region {i:>2} ({}-gon): {} vertices, {} edges, {} regions, {} components, h1 {}, {}",
            r.size(),
            c.vertices.len(),
            c.edges.len(),
            c.regions.len(),
            c.components,
            c.h1,
            if c.is_disk() {
                "disk"
            } else if c.is_acyclic() {
                "acyclic"
            } else {
                "not acyclic"
            }
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Codes { n } => {
            for code in enumerate_codes(n, true)? {
                println!("{code}");
            }
        }
        Command::Enumerate { n, workers, out } => {
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()));
            let out = out.unwrap_or_else(|| catalog_path(Path::new("census"), n));
            let run = run_census(n, workers).with_context(|| format!("census for {n} crossings"))?;
            run.catalog.write_jsonl(&out)?;
            let meta = metadata_path(&out);
            let json = serde_json::to_string_pretty(&run.metadata())?;
            fs::write(&meta, json + "\n").with_context(|| format!("writing {}", meta.display()))?;
            eprintln!(
                "{} entries for n={n} in {:.2?} ({} non-prime left out) -> {}",
                run.catalog.entries.len(),
                run.elapsed,
                run.non_prime.len(),
                out.display()
            );
        }
        Command::Table { to, dir } => {
            if to < 6 {
                bail!("the table starts at 6 crossings");
            }
            print!("{}", table::render(&table::load_counts(&dir, to)?, to));
        }
        Command::Render { target, out, dir } => {
            let d = if target.parse::<Name>().is_ok() {
                load(&dir, &target)?
            } else {
                let code: GaussCode = target.parse().with_context(|| format!("{target:?} is neither a name nor a Gauss code"))?;
                rebuild_from_gauss(&code)?
            };
            let svg = render::render_svg(&d)?;
            fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Inspect { name, dir } => inspect(&dir, &name)?,
        Command::Twin { name, dir } => println!("{}", load(&dir, &name)?.to_twin_word()?),
        Command::Hamiltonian { name, dir } => {
            let d = load(&dir, &name)?;
            match d.find_hamiltonian() {
                Some(h) => println!("{}", cycle_code(&d, &h)),
                None => println!("none"),
            }
        }
    }
    Ok(())
}
