//! Command-line front end: JSON in, JSON/CSV out, with exit codes scripts
//! can branch on (0 valid/pass, 1 invalid/fail, 2 usage or I/O error,
//! 3 inconclusive).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use aci3::aci::{check_table, decompose, Verdict};
use aci3::gorenstein::{validate_degree_sequence, CiMinProvider, MinAnswer, MinProvider};
use aci3::lab::{colon_ideal, minimal_resolution_fp, GradedIdealFp, OracleMinProvider};
use aci3::liaison::{link_aci_to_gorenstein, mapping_cone_resolution, LinkContext};
use aci3::monomial::{minimal_resolution_oracle, realize_t2, realize_t3, MonomialIdeal3};
use aci3::shifts::BettiTable;
use aci3::sweep::{sweep_mont2, sweep_mont3};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "aci3",
    about = "Structure of codimension-3 almost complete intersection and \
             Gorenstein Betti tables: analysis, liaison, realization, oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Gorenstein generator-degree sequence (e.g. "3,4,6,6,7")
    CheckGorensteinDegrees { degrees: String },
    /// Decompose a Betti table JSON into its (d, d*, s) shape
    AnalyzeBetti { table: PathBuf },
    /// Run the full characterization on a Betti table JSON
    CheckAci {
        table: PathBuf,
        #[arg(long, default_value = "ci")]
        min_provider: String,
        #[command(flatten)]
        seed: SeedArgs,
        /// degree cap for the oracle provider's candidate scan
        #[arg(long)]
        max_entry: Option<i64>,
    },
    /// Link an ACI table to its Gorenstein partner table
    Link { table: PathBuf },
    /// Mapping-cone resolution from a Gorenstein table G and a CI table K
    MappingCone {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        dstar: i64,
    },
    /// Minimal resolution of a monomial ideal JSON (lcm-lattice homology)
    ResolveMonomial { ideal: PathBuf },
    /// Produce a monomial ideal realizing a t=2 or t=3 table
    Realize { table: PathBuf },
    /// decompose -> realize -> resolve -> compare against the input table
    Roundtrip { table: PathBuf },
    /// Exhaustive consistency sweep over a monomial family, CSV output
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_exponent: i64,
        /// restrict to one parameter tuple, space-separated (repro aid)
        #[arg(long)]
        only: Option<String>,
        /// write CSV here instead of stdout
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Prime-field laboratory commands
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimal resolution of a polynomial ideal over F_p
    Resolve {
        ideal: PathBuf,
        #[arg(long, default_value_t = 20)]
        bound: i64,
    },
    /// Colon ideal Z : Q of polynomial ideals over F_p
    Colon {
        #[arg(long)]
        z: PathBuf,
        #[arg(long)]
        q: PathBuf,
        #[arg(long, default_value_t = 30)]
        bound: i64,
    },
    /// Probabilistic minimum of CI degrees inside a Gorenstein ideal
    MinDelta {
        degrees: String,
        #[arg(long, default_value_t = 6)]
        samples: u32,
        #[arg(long, default_value_t = 2)]
        trials: u32,
        #[arg(long, default_value_t = 8)]
        max_entry: i64,
        #[command(flatten)]
        seed: SeedArgs,
    },
}

#[derive(Args)]
struct SeedArgs {
    /// seed for randomized sampling (required for randomized commands)
    #[arg(long)]
    seed: Option<u64>,
    /// allow falling back to the ACI3_SEED environment variable
    #[arg(long)]
    allow_env_seed: bool,
}

impl SeedArgs {
    fn resolve(&self) -> Result<u64, String> {
        if let Some(s) = self.seed {
            return Ok(s);
        }
        if self.allow_env_seed {
            if let Ok(v) = std::env::var("ACI3_SEED") {
                return v
                    .parse()
                    .map_err(|_| format!("ACI3_SEED is not an integer: {v}"));
            }
            return Err("--allow-env-seed given but ACI3_SEED is not set".into());
        }
        Err("this command is randomized: pass --seed (or --allow-env-seed with ACI3_SEED)".into())
    }
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn parse_degrees(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad degree {x:?}: {e}")))
        .collect()
}

#[derive(Serialize)]
struct ShapeJson {
    d: [i64; 3],
    dstar: i64,
    s: Vec<i64>,
    t: usize,
    u: i64,
    dtotal: i64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::CheckGorensteinDegrees { degrees } => {
            let raw = match parse_degrees(&degrees) {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            };
            match validate_degree_sequence(&raw) {
                Ok(shape) => {
                    println!("valid: theta = {}", shape.theta);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    println!("invalid: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::AnalyzeBetti { table } => {
            let table: BettiTable = match read_json(&table) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            match decompose(&table) {
                Ok(dec) => {
                    let s = &dec.shape;
                    print_json(&ShapeJson {
                        d: s.d,
                        dstar: s.dstar,
                        s: s.s.clone(),
                        t: s.t(),
                        u: s.u(),
                        dtotal: s.dtotal(),
                    });
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("not an ACI table: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::CheckAci {
            table,
            min_provider,
            seed,
            max_entry,
        } => {
            let table: BettiTable = match read_json(&table) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let verdict = match min_provider.as_str() {
                "ci" => check_table(&table, &CiMinProvider),
                "oracle" => {
                    let seed = match seed.resolve() {
                        Ok(s) => s,
                        Err(e) => return usage_err(e),
                    };
                    let mut provider = OracleMinProvider::new(seed);
                    if let Some(m) = max_entry {
                        provider = provider.with_max_entry(m);
                    }
                    check_table(&table, &provider)
                }
                other => return usage_err(format!("unknown provider {other:?} (ci|oracle)")),
            };
            print_json(&verdict);
            match verdict {
                Verdict::Valid => ExitCode::from(EXIT_OK),
                Verdict::Invalid(_) => ExitCode::from(EXIT_FAIL),
                Verdict::Inconclusive => ExitCode::from(EXIT_INCONCLUSIVE),
            }
        }

        Command::Link { table } => {
            let table: BettiTable = match read_json(&table) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let dec = match decompose(&table) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("not an ACI table: {e}");
                    return ExitCode::from(EXIT_FAIL);
                }
            };
            match link_aci_to_gorenstein(&dec) {
                Ok(link) => {
                    print_json(&link);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("link failed: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::MappingCone { g, k, dstar } => {
            let g: BettiTable = match read_json(&g) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let k: BettiTable = match read_json(&k) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let c = k.codim;
            let theta_z = match k.modules.last() {
                Some(m) if m.rank() == 1 => m.sum(),
                _ => return usage_err("K must end in a rank-1 module"),
            };
            let ctx = match LinkContext::new(theta_z, dstar, c) {
                Ok(ctx) => ctx,
                Err(e) => return usage_err(e),
            };
            match mapping_cone_resolution(&g, &k, &ctx) {
                Ok(cone) => {
                    print_json(&cone);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("mapping cone failed: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::ResolveMonomial { ideal } => {
            let ideal: MonomialIdeal3 = match read_json(&ideal) {
                Ok(i) => i,
                Err(e) => return usage_err(e),
            };
            match minimal_resolution_oracle(&ideal) {
                Ok(table) => {
                    print_json(&table);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("resolution failed: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::Realize { table } => {
            let table: BettiTable = match read_json(&table) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            match realize_table(&table) {
                Ok(ideal) => {
                    print_json(&ideal);
                    ExitCode::from(EXIT_OK)
                }
                Err(RealizeFailure::Unsupported(msg)) => usage_err(msg),
                Err(RealizeFailure::Failed(msg)) => {
                    eprintln!("{msg}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::Roundtrip { table } => {
            let table: BettiTable = match read_json(&table) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            match realize_table(&table) {
                Ok(ideal) => match minimal_resolution_oracle(&ideal) {
                    Ok(resolved) if resolved == table => {
                        println!("roundtrip ok: {:?}", ideal.generators());
                        ExitCode::from(EXIT_OK)
                    }
                    Ok(_) => {
                        eprintln!("roundtrip mismatch: realized ideal resolves differently");
                        ExitCode::from(EXIT_FAIL)
                    }
                    Err(e) => {
                        eprintln!("oracle failed: {e}");
                        ExitCode::from(EXIT_FAIL)
                    }
                },
                Err(RealizeFailure::Unsupported(msg)) => usage_err(msg),
                Err(RealizeFailure::Failed(msg)) => {
                    eprintln!("{msg}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        Command::Sweep {
            family,
            max_exponent,
            only,
            out,
        } => {
            if !(1..=6).contains(&max_exponent) {
                return usage_err("--max-exponent must be between 1 and 6");
            }
            let mut report = match family.as_str() {
                "mont2" => sweep_mont2(max_exponent),
                "mont3" => sweep_mont3(max_exponent),
                other => return usage_err(format!("unknown family {other:?} (mont2|mont3)")),
            };
            if let Some(only) = only {
                let want: Vec<i64> = match only
                    .split_whitespace()
                    .map(|x| x.parse::<i64>())
                    .collect::<Result<_, _>>()
                {
                    Ok(v) => v,
                    Err(e) => return usage_err(format!("bad --only tuple: {e}")),
                };
                report.rows.retain(|r| r.params == want);
            }
            let csv = report.to_csv();
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &csv) {
                    return usage_err(format!("{}: {e}", path.display()));
                }
            } else {
                print!("{csv}");
            }
            eprintln!(
                "total {} | oracle mismatches {} | decompose failures {} | \
                 characterization counterexamples {} | realization failures {}",
                report.total,
                report.oracle_mismatches,
                report.decompose_failures,
                report.invalid,
                report.realization_failures
            );
            if report.all_consistent() {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }

        Command::Oracle(cmd) => oracle_command(cmd),
    }
}

enum RealizeFailure {
    Unsupported(String),
    Failed(String),
}

fn realize_table(table: &BettiTable) -> Result<MonomialIdeal3, RealizeFailure> {
    let dec = decompose(table)
        .map_err(|e| RealizeFailure::Failed(format!("not an ACI table: {e}")))?;
    match dec.shape.t() {
        2 => realize_t2(&dec.shape)
            .map_err(|e| RealizeFailure::Failed(format!("not realizable: {e}"))),
        3 => realize_t3(&dec.shape)
            .map_err(|e| RealizeFailure::Failed(format!("not realizable: {e}"))),
        t => Err(RealizeFailure::Unsupported(format!(
            "monomial realization only supports t = 2 or 3, got t = {t}"
        ))),
    }
}

fn oracle_command(cmd: OracleCommand) -> ExitCode {
    match cmd {
        OracleCommand::Resolve { ideal, bound } => {
            let json: aci3::lab::ideal::IdealJson = match read_json(&ideal) {
                Ok(j) => j,
                Err(e) => return usage_err(e),
            };
            let ideal = GradedIdealFp::from_json(&json);
            match minimal_resolution_fp(&ideal, bound) {
                Ok(table) => {
                    print_json(&table);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("resolution failed: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        OracleCommand::Colon { z, q, bound } => {
            let zj: aci3::lab::ideal::IdealJson = match read_json(&z) {
                Ok(j) => j,
                Err(e) => return usage_err(e),
            };
            let qj: aci3::lab::ideal::IdealJson = match read_json(&q) {
                Ok(j) => j,
                Err(e) => return usage_err(e),
            };
            if zj.p != qj.p {
                return usage_err(format!("prime mismatch: {} vs {}", zj.p, qj.p));
            }
            let z = GradedIdealFp::from_json(&zj);
            let q = GradedIdealFp::from_json(&qj);
            match colon_ideal(&z, &q, bound) {
                Ok(result) => {
                    print_json(&result.to_json());
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("colon failed: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }

        OracleCommand::MinDelta {
            degrees,
            samples,
            trials,
            max_entry,
            seed,
        } => {
            let raw = match parse_degrees(&degrees) {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            };
            let shape = match validate_degree_sequence(&raw) {
                Ok(s) => s,
                Err(e) => return usage_err(format!("invalid degree sequence: {e}")),
            };
            let seed = match seed.resolve() {
                Ok(s) => s,
                Err(e) => return usage_err(e),
            };
            let provider = OracleMinProvider::new(seed)
                .with_max_entry(max_entry)
                .with_attempts(samples, trials);
            match provider.min_ci(&shape) {
                MinAnswer::Exact(m) => {
                    println!("exact: {m:?}");
                    ExitCode::from(EXIT_OK)
                }
                MinAnswer::Probable(m) => {
                    println!("probable: {m:?}");
                    ExitCode::from(EXIT_OK)
                }
                MinAnswer::Unknown => {
                    println!("unknown");
                    ExitCode::from(EXIT_INCONCLUSIVE)
                }
            }
        }
    }
}
