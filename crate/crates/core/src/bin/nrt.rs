//! `nrt`: cohomology of spaces of non-resultant binary-form systems.
//!
//! Exit codes: 0 success (including a verified census), 1 partial batch
//! failure, 2 usage or validation error, 3 census mismatch.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nonres::closed_form::{self, MDiscParams};
use nonres::oracle::{self, winding_index};
use nonres::output::{self, Field};
use nonres::spectral;
use nonres::{DegreeProfile, Error};

#[derive(Parser)]
#[command(
    name = "nrt",
    version,
    about = "Cohomology of spaces of non-resultant binary-form systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LeafArg {
    #[value(name = "1")]
    One,
    Inf,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced integer cohomology of the complement of the real resultant variety
    Real {
        /// Degrees d1 d2 ... of the system
        #[arg(required = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        json: bool,
        /// Show unreduced cohomology (adds Z in dimension 0 when non-empty)
        #[arg(long)]
        unreduced: bool,
    },
    /// Reduced rational cohomology of the complex complement
    Complex {
        #[arg(required = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Rational cohomology of the complement of the m-discriminant
    Mdisc {
        /// Form degree
        #[arg(long)]
        d: i64,
        /// Multiplicity bound
        #[arg(long)]
        m: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print a page of the resolution spectral sequence
    Page {
        /// Which coefficient setting to tabulate
        field: FieldArg,
        #[arg(required = true)]
        degrees: Vec<i64>,
        /// Leaf to show: 1 or inf
        #[arg(long, value_enum, default_value = "1")]
        leaf: LeafArg,
        #[arg(long)]
        json: bool,
    },
    /// Sampling census of the complement's connected components
    Verify {
        #[arg(required = true)]
        degrees: Vec<i64>,
        /// Accepted samples to classify
        #[arg(long, default_value_t = 2000)]
        samples: u64,
        /// Coefficients are drawn uniformly from [-bound, bound]
        #[arg(long, default_value_t = 12)]
        bound: u32,
        /// RNG seed (default: NRT_SEED env var, then 42)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Construct a two-form system with a prescribed winding index
    Witness {
        d1: i64,
        d2: i64,
        /// The winding index to realize
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the real table for every profile in a file (JSON lines out)
    Batch {
        /// One whitespace-separated degree list per line; `#` comments
        file: PathBuf,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_BATCH_PARTIAL: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli.command))
}

fn validation_error(err: &Error) -> u8 {
    eprintln!("error: {err}");
    EXIT_VALIDATION
}

fn default_seed() -> u64 {
    std::env::var("NRT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(42)
}

fn parse_profile(degrees: &[i64]) -> Result<DegreeProfile, Error> {
    DegreeProfile::new(degrees.iter().copied())
}

fn print_json<T: serde::Serialize>(doc: &T) {
    println!("{}", serde_json::to_string(doc).expect("serializable doc"));
}

fn run(command: Command) -> u8 {
    match command {
        Command::Real {
            degrees,
            json,
            unreduced,
        } => {
            let profile = match parse_profile(&degrees) {
                Ok(p) => p,
                Err(e) => return validation_error(&e),
            };
            let result = closed_form::real_cohomology(&profile);
            if json {
                print_json(&output::real_doc(&profile, &result));
            } else {
                print!("{}", output::render_real_text(&profile, &result, unreduced));
            }
            EXIT_OK
        }
        Command::Complex { degrees, json } => {
            let profile = match parse_profile(&degrees) {
                Ok(p) => p,
                Err(e) => return validation_error(&e),
            };
            match closed_form::complex_cohomology(&profile) {
                Ok(reduced) => {
                    if json {
                        print_json(&output::complex_doc(&profile, &reduced));
                    } else {
                        print!("{}", output::render_complex_text(&profile, &reduced));
                    }
                    EXIT_OK
                }
                Err(e) => validation_error(&e),
            }
        }
        Command::Mdisc { d, m, json } => match MDiscParams::new(d, m) {
            Ok(params) => {
                let reduced = closed_form::m_discriminant_cohomology(&params);
                if json {
                    print_json(&output::mdisc_doc(&params, &reduced));
                } else {
                    print!("{}", output::render_mdisc_text(&params, &reduced));
                }
                EXIT_OK
            }
            Err(e) => validation_error(&e),
        },
        Command::Page {
            field,
            degrees,
            leaf,
            json,
        } => {
            let profile = match parse_profile(&degrees) {
                Ok(p) => p,
                Err(e) => return validation_error(&e),
            };
            let (page, doc_field) = match field {
                FieldArg::Real => {
                    let e1 = spectral::build_real_e1(&profile);
                    let page = match leaf {
                        LeafArg::One => e1,
                        LeafArg::Inf => {
                            spectral::run_real_cascade(&e1, &profile)
                                .expect("freshly built page")
                                .final_page
                        }
                    };
                    (page, Field::Integer)
                }
                FieldArg::Complex => {
                    let e1 = match spectral::build_complex_e1(&profile) {
                        Ok(p) => p,
                        Err(e) => return validation_error(&e),
                    };
                    let page = match leaf {
                        LeafArg::One => e1,
                        LeafArg::Inf => e1.as_survivors(),
                    };
                    (page, Field::Rational)
                }
            };
            if json {
                print_json(&output::page_doc(&profile, &page, doc_field));
            } else {
                print!("{}", output::render_page_text(&page, doc_field));
            }
            EXIT_OK
        }
        Command::Verify {
            degrees,
            samples,
            bound,
            seed,
            json,
        } => {
            let profile = match parse_profile(&degrees) {
                Ok(p) => p,
                Err(e) => return validation_error(&e),
            };
            let seed = seed.unwrap_or_else(default_seed);
            match oracle::component_census(&profile, seed, bound, samples) {
                Ok(report) => {
                    let ok = report.matches_prediction();
                    if json {
                        print_json(&output::verify_doc(&report));
                    } else {
                        print!("{}", output::render_report_text(&report));
                    }
                    if ok {
                        EXIT_OK
                    } else {
                        EXIT_MISMATCH
                    }
                }
                Err(Error::EmptyComplement) => {
                    if json {
                        print_json(&output::verify_doc_empty(&profile, seed));
                    } else {
                        println!("profile {profile}: complement is empty; nothing to verify");
                    }
                    EXIT_OK
                }
                Err(e) => validation_error(&e),
            }
        }
        Command::Witness { d1, d2, index, json } => {
            if d1 < 1 || d2 < 1 || d1 > i64::from(u32::MAX) || d2 > i64::from(u32::MAX) {
                return validation_error(&Error::IllegalIndex {
                    d1: d1.max(0) as u32,
                    d2: d2.max(0) as u32,
                    k: index,
                });
            }
            match oracle::witness_system(d1 as u32, d2 as u32, index) {
                Ok(sys) => {
                    let winding = winding_index(sys.form(0), sys.form(1))
                        .expect("witness lies off the resultant variety");
                    let doc = output::witness_doc(d1 as u32, d2 as u32, index, &sys, winding);
                    if json {
                        print_json(&doc);
                    } else {
                        print!("{}", output::render_witness_text(&doc));
                    }
                    EXIT_OK
                }
                Err(e) => validation_error(&e),
            }
        }
        Command::Batch { file } => {
            let content = match std::fs::read_to_string(&file) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return EXIT_VALIDATION;
                }
            };
            let mut failures = 0u32;
            for (lineno, line) in content.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let parsed: Result<Vec<i64>, _> =
                    line.split_whitespace().map(str::parse).collect();
                let profile = parsed
                    .map_err(|e| format!("line {}: {e}", lineno + 1))
                    .and_then(|ds| {
                        parse_profile(&ds).map_err(|e| format!("line {}: {e}", lineno + 1))
                    });
                match profile {
                    Ok(p) => {
                        let result = closed_form::real_cohomology(&p);
                        print_json(&output::real_doc(&p, &result));
                    }
                    Err(msg) => {
                        eprintln!("error: {msg}");
                        failures += 1;
                    }
                }
            }
            if failures > 0 {
                EXIT_BATCH_PARTIAL
            } else {
                EXIT_OK
            }
        }
    }
}
