//! `orbitc`: orbit classification, inverse spectral constructions, Pieri
//! sets and the sphere/Fock numerics from the command line.
//!
//! Results go to standard output as JSON (CSV for `fock limit-gap`).
//! Malformed input exits with status 2 and `{"error": …}` on standard output.

mod parse;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbitc_core::coadjoint::OrbitParam;
use orbitc_core::fock;
use orbitc_core::inverse_spectral as inv;
use orbitc_core::sphere::{self, SphereGrid};
use orbitc_core::topology::{self, DescriptorSpec, SequenceDescriptor};
use orbitc_core::weights;

#[derive(Parser)]
#[command(name = "orbitc", version, about = "Coadjoint orbits of U(n) ⋉ H_n and their limits")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// List the limit orbits of a sequence with weight entries in [-bound, bound]
    Classify {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: u64,
    },
    /// Build witness points and report their distances to a target orbit
    Verify {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Solve an inverse spectral problem
    #[command(subcommand)]
    Construct(Construct),
    /// Quadrature on the unit sphere
    #[command(subcommand)]
    Quad(Quad),
    /// Pieri set of lambda tensored with the m-th symmetric power (up) or its dual (down)
    Pieri {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Direction::Up)]
        direction: Direction,
    },
    /// Both sides of the partial-fraction sum identity
    Identity {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// 1-based index into x
        #[arg(long)]
        k: usize,
    },
    /// Fock-space limits
    #[command(subcommand)]
    Fock(Fock),
}

#[derive(Subcommand)]
enum Construct {
    /// z and x with spectrum(J_mu ⊕ 0 + arrowhead(z, x)) = lambda
    Arrowhead {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// z with spectrum(J_lambda + sign·i zz*) = beta
    RankOne {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// `+` or `-` (also `1`, `-1`)
        #[arg(long, allow_hyphen_values = true, default_value = "+")]
        sign: String,
    },
}

#[derive(Subcommand)]
enum Quad {
    /// Average of exp(-i(rv, z)) over the unit sphere: series, quadrature and Monte Carlo
    Sphere(SphereArgs),
}

#[derive(Args)]
struct SphereArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, default_value_t = 128)]
    grid: usize,
    /// Monte-Carlo sample count; omitted means no Monte-Carlo estimate
    #[arg(long)]
    mc: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Fock {
    /// |zeta(z, N, r²/2N) - target(r, z)| for each N, as CSV
    LimitGap {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long = "N", value_delimiter = ',')]
        big_n: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Up,
    Down,
}

enum Output {
    Json(Value),
    Text(String),
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn load_seq(path: &Path) -> Result<SequenceDescriptor> {
    let spec: DescriptorSpec = read_json(path)?;
    Ok(SequenceDescriptor::from_spec(spec)?)
}

fn complex_json(c: orbitc_core::Complex64) -> Value {
    json!([c.re, c.im])
}

fn check_rank(n: usize, z: &orbitc_core::matrix::CVector) -> Result<()> {
    if n == 0 || z.len() != n {
        bail!("--z has {} entries, --n is {n}", z.len());
    }
    Ok(())
}

fn run(verb: Verb) -> Result<Output> {
    Ok(match verb {
        Verb::Classify { seq, bound } => {
            let seq = load_seq(&seq)?;
            Output::Json(json!({ "limits": topology::enumerate_limit_orbits(&seq, bound) }))
        }
        Verb::Verify { seq, target, tol } => {
            let seq = load_seq(&seq)?;
            let target: OrbitParam = read_json(&target)?;
            target.validate()?;
            if target.rank() != seq.n() {
                bail!("target has rank {}, sequence has rank {}", target.rank(), seq.n());
            }
            if !(tol > 0.0) {
                bail!("--tol must be positive");
            }
            let limit = topology::is_limit_orbit(&seq, &target)?;
            let report = topology::verify_convergence(&seq, &target, tol);
            let mut v = serde_json::to_value(report)?;
            v["is_limit"] = json!(limit);
            Output::Json(v)
        }
        Verb::Construct(Construct::Arrowhead { mu, lambda }) => {
            let mu = parse::weight(&mu)?;
            let lambda = parse::weight(&lambda)?;
            let sol = inv::build_arrowhead(&mu, &lambda)?;
            let residual = inv::arrowhead_residual(&mu, &lambda, &sol)?;
            Output::Json(json!({ "zmods": sol.zmods, "x": sol.x, "residual": residual }))
        }
        Verb::Construct(Construct::RankOne { lambda, beta, sign }) => {
            let sign = match sign.trim() {
                "+" | "1" | "+1" => 1,
                "-" | "-1" => -1,
                other => bail!("--sign must be + or -, got '{other}'"),
            };
            let lambda = parse::weight(&lambda)?;
            let beta = parse::weight(&beta)?;
            let sol = inv::build_rank_one(&lambda, &beta, sign)?;
            let residual = inv::rank_one_residual(&lambda, &beta, &sol)?;
            Output::Json(json!({ "zmods": sol.zmods, "sign": sol.sign, "residual": residual }))
        }
        Verb::Quad(Quad::Sphere(a)) => {
            let z = parse::complex_vector(&a.z)?;
            check_rank(a.n, &z)?;
            if !(a.r.is_finite() && a.r >= 0.0) {
                bail!("--r must be a nonnegative number");
            }
            if a.grid == 0 {
                bail!("--grid must be positive");
            }
            let series = fock::bessel_sphere_target(a.r, &z);
            let quad = sphere::sphere_integral(
                |v| {
                    let p: f64 = v.iter().zip(z.iter()).map(|(x, y)| (x * y.conj()).re).sum();
                    orbitc_core::Complex64::new(0.0, -a.r * p).exp()
                },
                a.n,
                SphereGrid::uniform(a.grid),
            );
            let (mc, stderr) = match a.mc {
                Some(0) => bail!("--mc must be positive"),
                Some(samples) => {
                    let m = sphere::haar_unitary_integral(a.r, &z, samples, a.seed);
                    (complex_json(m.mean), json!(m.stderr))
                }
                None => (Value::Null, Value::Null),
            };
            Output::Json(json!({ "series": series, "quadrature": complex_json(quad), "montecarlo": mc, "stderr": stderr }))
        }
        Verb::Pieri { lambda, m, direction } => {
            let lambda = parse::weight(&lambda)?;
            let set = match direction {
                Direction::Up => weights::pieri_up(&lambda, m),
                Direction::Down => weights::pieri_down(&lambda, m),
            };
            let result: Vec<&[i64]> = set.iter().rev().map(|w| w.entries()).collect();
            Output::Json(json!({ "result": result }))
        }
        Verb::Identity { x, y, k } => {
            let x = parse::floats(&x)?;
            let y = parse::floats(&y)?;
            if k == 0 || k > x.len() {
                bail!("--k must lie in 1..={}", x.len());
            }
            let (lhs, rhs) = inv::sum_identity_sides(&x, &y, k - 1)?;
            Output::Json(json!({ "lhs": lhs, "rhs": rhs }))
        }
        Verb::Fock(Fock::LimitGap { n, r, z, big_n }) => {
            let z = parse::complex_vector(&z)?;
            check_rank(n, &z)?;
            if !(r.is_finite() && r > 0.0) {
                bail!("--r must be positive");
            }
            if big_n.is_empty() {
                bail!("--N needs at least one value");
            }
            let mut csv = String::from("N,gap\n");
            for nn in big_n {
                let gap = fock::limit_gap(r, &z, nn)?;
                csv.push_str(&format!("{nn},{gap}\n"));
            }
            Output::Text(csv)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(Output::Json(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let msg = format!("{e:#}");
            println!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}
