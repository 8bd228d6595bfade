use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lie2kit::butterfly::strictified_semidirect;
use lie2kit::gradedend::{EndCrossedModule, TwoTermComplex};
use lie2kit::group2::{
    check_group_xmod, check_strict_rep, check_two_group, int_delta, semidirect_two_group, AutV, Group,
    GroupCrossedModule, StrictGroupRep,
};
use lie2kit::json::{self, JsonCodec};
use lie2kit::lie2::{check_crossed_module, check_lie2, CrossedModuleAlg, Lie2Algebra};
use lie2kit::omni::omni_report;
use lie2kit::rephomotopy::{check_rep, RepUpToHomotopy};
use lie2kit::{sample, Error, Report};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lie2kit", version, about = "Exact verification of Lie 2-algebras, crossed modules and their representations")]
struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Seed for every sampled check.
    #[arg(long, global = true, env = "LIE2KIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of random samples for group-level checks.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the L-infinity relations of a 2-term algebra.
    CheckLie2 { file: PathBuf },
    /// Check the crossed module axioms.
    CheckXmod { file: PathBuf },
    /// Check a representation up to homotopy.
    CheckRep { file: PathBuf },
    /// Build the crossed module End(V) of a 2-term complex.
    BuildEnd {
        file: PathBuf,
        /// Write the crossed module here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strictify the semidirect product of a representation.
    Strictify {
        file: PathBuf,
        /// Write the crossed module and both morphisms here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the semidirect-product 2-group of Aut(V) acting on V.
    #[command(name = "check-2group")]
    Check2group { file: PathBuf },
    /// Build and check the group crossed module Aut(V).
    BuildAutv {
        file: PathBuf,
        /// Write sampled elements and their boundaries here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the omni-Lie algebra of Q^n.
    Omni {
        #[arg(long)]
        dim: usize,
        /// Lie bracket on Q^n for the Dirac structure checks.
        #[arg(long)]
        bracket: Option<PathBuf>,
        /// Central subspace W, as {"dim": n, "basis": [...]}.
        #[arg(long)]
        center_sub: Option<PathBuf>,
    },
}

enum Failure {
    Parse(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Schema { .. } => Failure::Parse(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: invalid JSON: {e}", path.display())))
}

fn load<T: JsonCodec>(path: &Path) -> Result<T, Failure> {
    let v = read_json(path)?;
    T::from_json(&v).map_err(|e| match e {
        Error::Schema { .. } => Failure::Parse(format!("{}: {e}", path.display())),
        other => Failure::Check(format!("{}: {other}", path.display())),
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn write_artifact(out: &Option<PathBuf>, v: Value) -> Result<(), Failure> {
    match out {
        Some(p) => write(p, &serde_json::to_string_pretty(&v).expect("values serialize")),
        None => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let (seed, samples) = (cli.seed, cli.samples);
    Ok(match &cli.command {
        Command::CheckLie2 { file } => check_lie2(&load::<Lie2Algebra>(file)?),
        Command::CheckXmod { file } => check_crossed_module(&load::<CrossedModuleAlg>(file)?),
        Command::CheckRep { file } => check_rep(&load::<RepUpToHomotopy>(file)?),
        Command::BuildEnd { file, out } => {
            let c: TwoTermComplex = load(file)?;
            let end = EndCrossedModule::new(&c);
            let mut r = Report::new("End(V)");
            r.absorb("xmod", check_crossed_module(end.xmod()));
            let basis: Vec<Value> = end.k0_space().basis().iter().map(|v| json::vector_to_json(v)).collect();
            write_artifact(out, json!({"crossed_module": end.xmod().to_json(), "k0_basis": basis}))?;
            r
        }
        Command::Strictify { file, out } => {
            let rep: RepUpToHomotopy = load(file)?;
            let p = strictified_semidirect(&rep)?;
            write_artifact(
                out,
                json!({
                    "crossed_module": p.xmod.to_json(),
                    "equivalence": p.equivalence_morphism().to_json(),
                    "inclusion": p.inclusion_morphism().to_json(),
                }),
            )?;
            p.check()
        }
        Command::Check2group { file } => {
            let c: TwoTermComplex = load(file)?;
            let mut r = Report::sampled("semidirect 2-group of Aut(V) on V", seed, samples);
            let rep = StrictGroupRep::identity(&c);
            r.absorb("rep", check_strict_rep(&rep, samples, seed));
            match semidirect_two_group(rep, samples, seed) {
                Ok(tg) => {
                    r.absorb("two-group", check_two_group(&tg, samples, seed));
                    r.absorb("xmod", check_group_xmod(&tg.crossed_module(), samples, seed));
                }
                Err(e) => r.record("two-group", "semidirect product", Some(e.to_string())),
            }
            r
        }
        Command::BuildAutv { file, out } => {
            let c: TwoTermComplex = load(file)?;
            let autv = AutV::new(&c);
            let mut r = Report::sampled("Aut(V)", seed, samples);
            r.absorb("xmod", check_group_xmod(&autv, samples, seed));
            let mut rng = sample::rng(seed);
            let elements: Vec<Value> = (0..samples.min(5))
                .map(|_| {
                    let a = autv.h1().sample(&mut rng);
                    let x = autv.h0().sample(&mut rng);
                    json!({
                        "k1": json::k1_to_json(&c, &a),
                        "boundary": json::k0_to_json(&c, &int_delta(&c, &a)),
                        "k0": json::k0_to_json(&c, &x),
                    })
                })
                .collect();
            write_artifact(out, json!({"complex": c.to_json(), "samples": elements}))?;
            r
        }
        Command::Omni { dim, bracket, center_sub } => {
            let b = match bracket {
                Some(p) => Some(load::<LieAlgebraOrRaw>(p)?.0),
                None => None,
            };
            let w = match center_sub {
                Some(p) => Some(json::subspace_from_json(&read_json(p)?)?),
                None => None,
            };
            omni_report(*dim, b.as_ref(), w.as_ref())?
        }
    })
}

/// A bracket file is read without requiring the Jacobi identity, so that the
/// Dirac checks can report its failure.
struct LieAlgebraOrRaw(lie2kit::Tensor);

impl JsonCodec for LieAlgebraOrRaw {
    fn to_json(&self) -> Value {
        json!({"dim": self.0.out_dim(), "bracket": json::bracket_to_json(&self.0)})
    }

    fn from_json(v: &Value) -> lie2kit::Result<Self> {
        Ok(Self(json::bracket_at(v, "$")?.1))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{report}");
            if let Some(p) = &cli.json {
                if let Err(Failure::Parse(m) | Failure::Check(m)) = write(p, &report.to_json()) {
                    eprintln!("error: {m}");
                    return ExitCode::from(2);
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            println!("FAIL: {m}");
            ExitCode::from(1)
        }
    }
}
