use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use embedcheck::catalog::{load_catalog, shipped_entry, surgered_group, SurgeryDescription};
use embedcheck::engine::{cover_record, run_report, verify_gk_complex, Config};
use embedcheck::{abelianize, parse_presentation, EmbedError, Epimorphism, Result};
use num_traits::ToPrimitive;

#[derive(Parser)]
#[command(name = "embedcheck", version, about = "Algebraic obstructions to abelian embeddings of 3-manifolds in S^4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the applicable battery on a shipped entry or every entry of a catalog file.
    Report {
        target: String,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, default_value_t = 97)]
        primes: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Abelianization of a presentation file.
    Abelianize { file: String },
    /// Homology of the cyclic cover given by generator images modulo `mod`.
    Cover {
        entry: String,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        map: Vec<i64>,
    },
    /// Check the chain complex C(k, n) over Z[Z + Z/k].
    Gk {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
    },
}

fn entries(target: &str) -> Result<Vec<SurgeryDescription>> {
    match shipped_entry(target) {
        Ok(e) => Ok(vec![e]),
        Err(EmbedError::UnknownEntry(_)) if Path::new(target).exists() => load_catalog(Path::new(target)),
        Err(e) => Err(e),
    }
}

fn epimorphism(s: &SurgeryDescription, modulus: u64, map: Vec<i64>) -> Result<Epimorphism> {
    let group = surgered_group(s)?;
    if map.len() != group.num_generators() {
        return Err(EmbedError::CountMismatch(format!("{} images for {} generators", map.len(), group.num_generators())));
    }
    if modulus < 2 {
        return Err(EmbedError::OutOfRange("modulus must be at least 2".into()));
    }
    let l = modulus as i64;
    let images: Vec<i64> = map.iter().map(|x| x.rem_euclid(l)).collect();
    for (index, r) in group.relators().iter().enumerate() {
        let v: i64 = r.letters().iter().map(|&(g, e)| images[g] * e).sum();
        if v.rem_euclid(l) != 0 {
            return Err(EmbedError::RelatorNotKilled { index });
        }
    }
    let ab = abelianize(&group);
    let covector = (0..ab.num_coordinates())
        .map(|i| {
            let v: num_bigint::BigInt = images.iter().enumerate().map(|(j, &x)| &ab.lifts[(i, j)] * x).sum();
            v.to_i64().expect("small").rem_euclid(l)
        })
        .collect();
    let epi = Epimorphism { modulus, covector, images };
    if !epi.is_surjective() {
        return Err(EmbedError::NotSurjective);
    }
    Ok(epi)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Report { target, bound, primes, format } => {
            let cfg = Config { basis_bound: bound, prime_bound: primes };
            let reports = entries(&target)?.iter().map(|e| run_report(e, &cfg)).collect::<Result<Vec<_>>>()?;
            Ok(match format {
                Format::Json if reports.len() == 1 => reports[0].to_json(),
                Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize"),
                Format::Text => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n"),
            })
        }
        Command::Abelianize { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| EmbedError::InvalidPresentation(format!("{file}: {e}")))?;
            let p = parse_presentation(&text)?;
            let ab = abelianize(&p);
            let mut out = format!("H1 = {}\n", ab.describe());
            for (j, name) in p.names().iter().enumerate() {
                let coords: Vec<String> = (0..ab.num_coordinates()).map(|i| ab.generator_images[(i, j)].to_string()).collect();
                out.push_str(&format!("{name} -> ({})\n", coords.join(", ")));
            }
            Ok(out.trim_end().to_string())
        }
        Command::Cover { entry, modulus, map } => {
            let s = shipped_entry(&entry)?;
            let epi = epimorphism(&s, modulus, map)?;
            let check = cover_record(&s, &surgered_group(&s)?, &epi)?;
            Ok(serde_json::to_string_pretty(&check.record).expect("record serializes"))
        }
        Command::Gk { k, n } => {
            let rec = verify_gk_complex(k, n)?;
            Ok(serde_json::to_string_pretty(&rec).expect("record serializes"))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
