//! `pdr`: command-line access to Kostka-Foulkes polynomials, fake degrees and
//! the Poisson-de Rham Hilbert series built from them.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! everything the process would print, so the binary is a thin wrapper and
//! tests can drive the tool in-process.

pub mod cache;
pub mod output;
pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pdr_core::kostka::CONVENTION_TAG;
use pdr_core::weyl::{type_a_characters, MolienData, DEFAULT_ENUMERATION_BUDGET};
use pdr_core::{
    fake_degree_qhook, hp0_slice_series, hp0_walg_full_series, ih_orbit_closure, ih_s3_variety,
    kostka_foulkes, pn_series, proudfoot_check, springer_fiber_series, Family, LaurentPoly,
    Partition, WeylType,
};
use serde_json::json;

pub use output::{Format, QueryResult};
pub use verify::{Suite, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pdr",
    version,
    about = "Kostka-Foulkes polynomials and Poisson-de Rham series"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Kostka table cache directory (default: $PDR_CACHE_DIR, else no cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Charge,
    Qhook,
    Molien,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kostka-Foulkes polynomial K_{lambda,mu}.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Fake degree of an S_n irreducible; cross-checks every algorithm by default.
    FakeDegree {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
    },
    /// Bigraded series P_N(x, y) of the nilpotent cone.
    Pn {
        /// Type A_{n-1}, summed over partitions of n.
        #[arg(long, conflicts_with_all = ["weyl_type", "rank"])]
        n: Option<u32>,
        /// Any supported type, by the Molien class average.
        #[arg(long = "type", value_name = "TYPE")]
        weyl_type: Option<Family>,
        #[arg(long)]
        rank: Option<usize>,
        /// Largest group to enumerate (E6 needs 51840).
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: usize,
    },
    /// Zeroth Poisson homology of the Slodowy slice at phi.
    Hp0 {
        #[arg(long)]
        phi: Partition,
    },
    /// HP_0 of the W-algebra at phi, truncated after y^truncate.
    Walg {
        #[arg(long)]
        phi: Partition,
        #[arg(long, allow_negative_numbers = true)]
        truncate: i64,
    },
    /// Intersection cohomology of an orbit closure.
    Ih {
        #[arg(long)]
        lambda: Partition,
    },
    /// Intersection cohomology of closure(O_nu) meeting the slice at phi.
    S3 {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        phi: Partition,
    },
    /// Bigraded cohomology of the Springer fiber over phi.
    SpringerFiber {
        #[arg(long)]
        phi: Partition,
    },
    /// Compare HP_0 of the slice at lambda with IH of the orbit closure at lambda^t.
    Proudfoot {
        #[arg(long)]
        lambda: Partition,
    },
    /// Run an identity suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
    },
}

/// Everything a run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

struct Ctx {
    format: Format,
    cache_dir: Option<PathBuf>,
    warnings: Vec<String>,
}

struct Computed {
    value: output::Value,
    params: Vec<(&'static str, String)>,
    extras: BTreeMap<String, serde_json::Value>,
    verdict: Option<bool>,
    cache_hit: bool,
}

impl Computed {
    fn new(value: output::Value, params: Vec<(&'static str, String)>) -> Self {
        Computed {
            value,
            params,
            extras: BTreeMap::new(),
            verdict: None,
            cache_hit: false,
        }
    }
}

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            return Outcome::usage(line.trim_start_matches("error: "));
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        cache_dir: cli
            .cache_dir
            .or_else(|| std::env::var_os(cache::CACHE_DIR_ENV).map(PathBuf::from)),
        warnings: Vec::new(),
    };
    let outcome = match cli.command {
        Command::Verify { suite, max_n } => run_verify(&ctx, suite, max_n),
        cmd => {
            let name = subcommand_name(&cmd);
            let start = Instant::now();
            match compute(&mut ctx, cmd) {
                Ok(c) => emit(&ctx, name, c, start.elapsed().as_millis() as u64),
                Err(Failure::Usage(msg)) => Outcome::usage(msg),
                Err(Failure::Disagreement(msg)) => Outcome {
                    code: EXIT_VERIFY,
                    stdout: String::new(),
                    stderr: format!("verification failed: {msg}\n"),
                },
            }
        }
    };
    let mut stderr: String = ctx
        .warnings
        .iter()
        .map(|w| format!("warning: {w}\n"))
        .collect();
    stderr += &outcome.stderr;
    Outcome { stderr, ..outcome }
}

fn subcommand_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Kostka { .. } => "kostka",
        Command::FakeDegree { .. } => "fake-degree",
        Command::Pn { .. } => "pn",
        Command::Hp0 { .. } => "hp0",
        Command::Walg { .. } => "walg",
        Command::Ih { .. } => "ih",
        Command::S3 { .. } => "s3",
        Command::SpringerFiber { .. } => "springer-fiber",
        Command::Proudfoot { .. } => "proudfoot",
        Command::Verify { .. } => "verify",
    }
}

enum Failure {
    Usage(String),
    Disagreement(String),
}

impl From<pdr_core::Error> for Failure {
    fn from(e: pdr_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn same_size(a: &Partition, b: &Partition) -> Result<(), Failure> {
    if a.size() != b.size() {
        return Err(Failure::Usage(format!(
            "{a} and {b} are partitions of different sizes"
        )));
    }
    Ok(())
}

fn compute(ctx: &mut Ctx, cmd: Command) -> Result<Computed, Failure> {
    use output::Value;
    Ok(match cmd {
        Command::Kostka { lambda, mu } => {
            same_size(&lambda, &mu)?;
            let params = vec![("lambda", lambda.to_string()), ("mu", mu.to_string())];
            let (k, hit) = match &ctx.cache_dir {
                Some(dir) => {
                    let loaded = cache::load_or_compute(Some(dir), lambda.size());
                    ctx.warnings.extend(loaded.warnings);
                    (loaded.table.get(&lambda, &mu), loaded.cache_hit)
                }
                None => (kostka_foulkes(&lambda, &mu)?, false),
            };
            let mut c = Computed::new(Value::Laurent(k.with_var("q")), params);
            c.cache_hit = hit;
            c
        }
        Command::FakeDegree { lambda, algorithm } => {
            let params = vec![
                ("lambda", lambda.to_string()),
                (
                    "algorithm",
                    algorithm.map_or("all".into(), |a| format!("{a:?}").to_lowercase()),
                ),
            ];
            let fd = match algorithm {
                Some(a) => fake_degree_by(&lambda, a)?,
                None => {
                    let all = [Algorithm::Charge, Algorithm::Qhook, Algorithm::Molien]
                        .map(|a| fake_degree_by(&lambda, a));
                    let [charge, qhook, molien] = all;
                    let (charge, qhook, molien) = (charge?, qhook?, molien?);
                    if charge != qhook || charge != molien {
                        return Err(Failure::Disagreement(format!(
                            "{lambda}: charge {charge}, q-hook {qhook}, molien {molien}"
                        )));
                    }
                    charge
                }
            };
            let mut c = Computed::new(Value::Laurent(fd), params);
            if algorithm.is_none() {
                c.verdict = Some(true);
            }
            c
        }
        Command::Pn {
            n,
            weyl_type,
            rank,
            budget,
        } => match (n, weyl_type) {
            (Some(n), _) => Computed::new(Value::Bi(pn_series(n).poly), vec![("n", n.to_string())]),
            (None, Some(family)) => {
                let rank = match (family, rank) {
                    (_, Some(r)) => r,
                    (Family::G2, None) => 2,
                    (Family::F4, None) => 4,
                    (Family::E6, None) => 6,
                    _ => return Err(Failure::Usage(format!("type {family} needs --rank"))),
                };
                let w = WeylType::new(family, rank)?;
                let poly = MolienData::new(&w, budget)
                    .and_then(|d| d.pn_series())
                    .map_err(|e| match e {
                        pdr_core::Error::EnumerationBudget { .. } => Failure::Usage(format!(
                            "{e}; {w} has {} elements, raise --budget",
                            w.order
                        )),
                        e => e.into(),
                    })?;
                let mut c = Computed::new(
                    Value::Bi(poly),
                    vec![("type", family.to_string()), ("rank", rank.to_string())],
                );
                c.extras.insert("order".into(), json!(w.order));
                c.extras.insert("degrees".into(), json!(w.degrees));
                c
            }
            (None, None) => return Err(Failure::Usage("pn needs --n or --type".into())),
        },
        Command::Hp0 { phi } => {
            let p = hp0_slice_series(&phi);
            Computed::new(Value::Laurent(p), vec![("phi", phi.to_string())])
        }
        Command::Walg { phi, truncate } => {
            if truncate < 0 {
                return Err(Failure::Usage(format!(
                    "--truncate must be nonnegative, got {truncate}"
                )));
            }
            let s = hp0_walg_full_series(&phi, truncate as usize);
            Computed::new(
                Value::Series(s),
                vec![("phi", phi.to_string()), ("truncate", truncate.to_string())],
            )
        }
        Command::Ih { lambda } => {
            let p = ih_orbit_closure(&lambda);
            Computed::new(Value::Laurent(p), vec![("lambda", lambda.to_string())])
        }
        Command::S3 { nu, phi } => {
            same_size(&nu, &phi)?;
            if !nu.dominates(&phi)? {
                ctx.warnings.push(format!(
                    "{nu} does not dominate {phi}; the variety is empty"
                ));
            }
            let p = ih_s3_variety(&nu, &phi)?;
            Computed::new(
                Value::Laurent(p),
                vec![("nu", nu.to_string()), ("phi", phi.to_string())],
            )
        }
        Command::SpringerFiber { phi } => {
            let s = springer_fiber_series(&phi);
            let mut c = Computed::new(Value::Bi(s.poly), vec![("phi", phi.to_string())]);
            c.extras.insert("x_grading".into(), json!(s.x_grading));
            c.extras.insert("y_grading".into(), json!(s.y_grading));
            c
        }
        Command::Proudfoot { lambda } => {
            let r = proudfoot_check(&lambda);
            let mut c = Computed::new(
                Value::Laurent(r.hp0.clone()),
                vec![("lambda", lambda.to_string())],
            );
            c.extras.insert("dual".into(), json!(r.dual.to_string()));
            c.extras.insert("ih".into(), json!(r.ih.to_string()));
            c.verdict = Some(r.equal);
            c
        }
        Command::Verify { .. } => unreachable!("handled by run_verify"),
    })
}

fn fake_degree_by(lambda: &Partition, a: Algorithm) -> Result<LaurentPoly, Failure> {
    let n = lambda.size();
    let fd = match a {
        Algorithm::Qhook => fake_degree_qhook(lambda),
        Algorithm::Charge => {
            // Reverse K_{lambda,(1^n)} back to q-degree.
            let big_n = (n * n.saturating_sub(1) / 2) as i64;
            kostka_foulkes(lambda, &Partition::column(n))?
                .reverse()
                .shift(big_n)
        }
        Algorithm::Molien => {
            let w = WeylType::symmetric(n as usize)?;
            MolienData::new(&w, 0)?.fake_degree(&type_a_characters(lambda))?
        }
    };
    Ok(fd.with_var("q"))
}

fn emit(ctx: &Ctx, name: &str, c: Computed, ms: u64) -> Outcome {
    let code = if c.verdict == Some(false) {
        EXIT_VERIFY
    } else {
        EXIT_OK
    };
    let stdout = match ctx.format {
        Format::Json => {
            let r = QueryResult {
                query: output::Query {
                    subcommand: name.into(),
                    params: c
                        .params
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v))
                        .collect(),
                },
                result: c.value.payload(),
                extras: c.extras,
                verdict: c.verdict,
                meta: output::Meta {
                    version: env!("CARGO_PKG_VERSION").into(),
                    convention: CONVENTION_TAG.into(),
                    ms,
                    cache_hit: c.cache_hit,
                },
            };
            r.to_json()
        }
        Format::Text => {
            let mut s = c.value.text();
            if let Some(v) = c.verdict {
                for (k, x) in &c.extras {
                    s += &format!(
                        "\n{k}: {}",
                        x.as_str().map_or(x.to_string(), str::to_string)
                    );
                }
                s += &format!("\nequal: {v}");
            }
            s
        }
        Format::Latex => c.value.latex(),
    };
    Outcome {
        code,
        stdout: stdout + "\n",
        stderr: String::new(),
    }
}

fn run_verify(ctx: &Ctx, suite: Suite, max_n: u32) -> Outcome {
    if max_n == 0 {
        return Outcome::usage("--max-n must be at least 1");
    }
    let report = verify::run_suite(suite, max_n);
    let stdout = match ctx.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("plain data serializes"),
        Format::Text => report.text(),
        Format::Latex => report.latex(),
    };
    Outcome {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY
        },
        stdout: stdout + "\n",
        stderr: String::new(),
    }
}
