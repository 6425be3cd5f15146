//! Batch front door: parse a JSON system description, dispatch to the
//! lattice, resultant and discriminant engines, and emit canonical reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use toric_disc::disc::multiplicativity::{multiplicativity_check, CheckMode};
use toric_disc::disc::univariate::univariate_discriminant;
use toric_disc::disc::{mixed_discriminant, mm_form_from, predicted_bidegree, BidegreeMode};
use toric_disc::lattice::{
    is_full, lattice_index, mixed_volume, normalized_volume, SupportConfig,
};
use toric_disc::poly::laurent::LaurentPoly;
use toric_disc::report::{audit_json, boundary_json, build_poly, parse_system, serialize_report};
use toric_disc::resultant::{macaulay_dense_oracle, sparse_resultant, ResOptions};
use toric_disc::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Ce,
    Macaulay,
}

#[derive(Parser)]
#[command(name = "toric-disc", about = "Plane mixed discriminant workbench")]
struct Cli {
    /// Lifting seed for the sparse resultant engine.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Minimum number of distinct liftings entering the GCD.
    #[arg(long, global = true, default_value_t = 2)]
    liftings: usize,
    #[arg(long, global = true, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Include degree audit tables in the report.
    #[arg(long, global = true)]
    audit: bool,
    /// Canonical JSON output (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Plain key: value lines instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hulls, volumes, mixed volumes and the lattice index of a system.
    SupportInfo { file: PathBuf },
    /// Sparse resultant of a three-polynomial system.
    Resultant { file: PathBuf },
    /// Mixed discriminant of a two-polynomial system.
    Discriminant { file: PathBuf },
    /// Predicted discriminant bidegrees of a two-polynomial system.
    Bidegree { file: PathBuf },
    /// Check the boundary factorization of the Jacobian resultant.
    VerifyMainTheorem { file: PathBuf },
    /// Check the product formula on a (f', f'', f2) system.
    VerifyMultiplicativity { file: PathBuf },
    /// Discriminant of a univariate (y-degree zero) polynomial.
    UnivariateDisc { file: PathBuf },
}

fn load_polys(file: &PathBuf) -> Result<Vec<LaurentPoly>, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", file.display())))?;
    let spec = parse_system(&text)?;
    spec.polynomials.iter().map(build_poly).collect()
}

fn expect_polys(polys: &[LaurentPoly], n: usize) -> Result<(), Error> {
    if polys.len() != n {
        return Err(Error::Input(format!(
            "expected {n} polynomials, found {}",
            polys.len()
        )));
    }
    Ok(())
}

/// Degrees (d1, d2, d3) when the supports are exactly the dilated simplices
/// d_i * sigma, as the dense Macaulay path requires.
fn dense_degrees(polys: &[LaurentPoly]) -> Result<Vec<i64>, Error> {
    polys
        .iter()
        .map(|f| {
            let d = f
                .support()
                .points()
                .iter()
                .map(|p| p.x + p.y)
                .max()
                .unwrap_or(0);
            let dense = toric_disc::lattice::dilated_simplex(f.support().label(), d);
            let mut have: Vec<_> = f.support().points().to_vec();
            let mut want: Vec<_> = dense.points().to_vec();
            have.sort();
            want.sort();
            if have != want {
                return Err(Error::Input(
                    "macaulay method requires dense simplex supports".into(),
                ));
            }
            Ok(d)
        })
        .collect()
}

struct Outcome {
    body: Map<String, Value>,
    identity_failed: bool,
}

fn run(cli: &Cli, opts: &ResOptions) -> Result<Outcome, Error> {
    let mut body = Map::new();
    let mut identity_failed = false;
    match &cli.command {
        Command::SupportInfo { file } => {
            let polys = load_polys(file)?;
            let supports: Vec<&SupportConfig> = polys.iter().map(|f| f.support()).collect();
            let entries: Vec<Value> = supports
                .iter()
                .map(|a| {
                    json!({
                        "label": a.label(),
                        "points": a.points().len(),
                        "dim": a.dim(),
                        "volume": normalized_volume(a),
                        "full": is_full(a),
                    })
                })
                .collect();
            body.insert("supports".into(), Value::Array(entries));
            let mut mvs = Vec::new();
            for i in 0..supports.len() {
                for j in i + 1..supports.len() {
                    mvs.push(json!({
                        "labels": [supports[i].label(), supports[j].label()],
                        "mv": mixed_volume(supports[i], supports[j]),
                    }));
                }
            }
            body.insert("mixed_volumes".into(), Value::Array(mvs));
            let owned: Vec<SupportConfig> = supports.iter().map(|&a| a.clone()).collect();
            match lattice_index(&owned) {
                Ok(i) => body.insert("index".into(), json!(i)),
                Err(_) => body.insert("index".into(), Value::Null),
            };
        }
        Command::Resultant { file } => {
            let polys = load_polys(file)?;
            expect_polys(&polys, 3)?;
            match cli.method {
                Method::Macaulay => {
                    let d = dense_degrees(&polys)?;
                    let value =
                        macaulay_dense_oracle(&[&polys[0], &polys[1], &polys[2]], [d[0], d[1], d[2]])?;
                    body.insert("resultant".into(), json!(value.to_string()));
                    body.insert("method".into(), json!("macaulay"));
                }
                _ => {
                    let out = sparse_resultant(&polys[0], &polys[1], &polys[2], opts)?;
                    body.insert("resultant".into(), json!(out.value.to_string()));
                    body.insert("method".into(), json!(out.method.as_str()));
                    body.insert("liftings".into(), json!(out.liftings_used));
                    if cli.audit {
                        body.insert("audit".into(), audit_json(&out.degree_audit));
                    }
                }
            }
        }
        Command::Discriminant { file } => {
            let polys = load_polys(file)?;
            expect_polys(&polys, 2)?;
            let disc = mixed_discriminant(&polys[0], &polys[1], opts)?;
            body.insert("delta".into(), json!(disc.delta.to_string()));
            body.insert("E".into(), boundary_json(&disc.boundary.entries));
            body.insert(
                "bidegree".into(),
                json!({
                    "predicted": [disc.predicted_bidegree.0, disc.predicted_bidegree.1],
                    "achieved": [disc.achieved_bidegree.0, disc.achieved_bidegree.1],
                }),
            );
            body.insert("index".into(), json!(disc.index));
            body.insert("defective".into(), json!(disc.defective));
            if cli.audit {
                body.insert("audit".into(), audit_json(&disc.resultant.degree_audit));
            }
        }
        Command::Bidegree { file } => {
            let polys = load_polys(file)?;
            expect_polys(&polys, 2)?;
            let sparse = predicted_bidegree(
                polys[0].support(),
                polys[1].support(),
                BidegreeMode::Sparse,
            )?;
            body.insert("sparse".into(), json!([sparse.0, sparse.1]));
            match predicted_bidegree(
                polys[0].support(),
                polys[1].support(),
                BidegreeMode::DenseFan,
            ) {
                Ok(d) => body.insert("dense_fan".into(), json!([d.0, d.1])),
                Err(_) => body.insert("dense_fan".into(), Value::Null),
            };
        }
        Command::VerifyMainTheorem { file } => {
            let polys = load_polys(file)?;
            expect_polys(&polys, 2)?;
            match mixed_discriminant(&polys[0], &polys[1], opts) {
                Ok(disc) => match mm_form_from(&disc, &polys[0], &polys[1]) {
                    Ok(_) => {
                        body.insert("holds".into(), json!(true));
                        body.insert("delta".into(), json!(disc.delta.to_string()));
                        body.insert("E".into(), boundary_json(&disc.boundary.entries));
                        body.insert("defective".into(), json!(disc.defective));
                    }
                    Err(Error::MmFormInconsistency(msg)) => {
                        identity_failed = true;
                        body.insert("holds".into(), json!(false));
                        body.insert("reason".into(), json!(msg));
                    }
                    Err(e) => return Err(e),
                },
                Err(Error::FactorizationViolated) => {
                    identity_failed = true;
                    body.insert("holds".into(), json!(false));
                    body.insert("reason".into(), json!("boundary factor does not divide"));
                }
                Err(e) => return Err(e),
            }
        }
        Command::VerifyMultiplicativity { file } => {
            let polys = load_polys(file)?;
            expect_polys(&polys, 3)?;
            let report = multiplicativity_check(&polys[0], &polys[1], &polys[2], opts)?;
            let mode = match report.mode {
                CheckMode::Direct => "direct",
                CheckMode::Factored => "factored",
            };
            body.insert("mode".into(), json!(mode));
            body.insert("E".into(), json!(report.e_factor.to_string()));
            body.insert(
                "boundary_identity".into(),
                json!(report.boundary_identity),
            );
            let etas: Vec<Value> = report
                .eta_reports
                .iter()
                .map(|r| {
                    json!({
                        "eta": [r.eta.x, r.eta.y],
                        "mu": r.mu,
                        "exponent": r.exponent,
                    })
                })
                .collect();
            body.insert("etas".into(), Value::Array(etas));
            body.insert("rhs".into(), json!(report.rhs.to_string()));
            match report.holds {
                Some(h) => {
                    body.insert("holds".into(), json!(h));
                    if !h {
                        identity_failed = true;
                    }
                }
                None => {
                    body.insert("holds".into(), Value::Null);
                }
            }
            if !report.boundary_identity {
                identity_failed = true;
            }
        }
        Command::UnivariateDisc { file } => {
            let polys = load_polys(file)?;
            expect_polys(&polys, 1)?;
            let d = univariate_discriminant(&polys[0])?;
            body.insert("delta".into(), json!(d.to_string()));
            body.insert("terms".into(), json!(d.num_terms()));
            let xs: Vec<i64> = polys[0].support().points().iter().map(|p| p.x).collect();
            let min = xs.iter().min().copied().unwrap_or(0);
            let mut g: i64 = 0;
            for &x in &xs {
                g = num_integer::Integer::gcd(&g, &(x - min));
            }
            body.insert("index".into(), json!(g));
        }
    }
    Ok(Outcome { body, identity_failed })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::SupportInfo { .. } => "support-info",
        Command::Resultant { .. } => "resultant",
        Command::Discriminant { .. } => "discriminant",
        Command::Bidegree { .. } => "bidegree",
        Command::VerifyMainTheorem { .. } => "verify-main-theorem",
        Command::VerifyMultiplicativity { .. } => "verify-multiplicativity",
        Command::UnivariateDisc { .. } => "univariate-disc",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = ResOptions {
        seed: cli.seed,
        liftings: cli.liftings,
        budget: cli.liftings.max(4) * 2,
        expected_degrees: None,
    };
    match run(&cli, &opts) {
        Ok(outcome) => {
            if cli.text {
                println!("command: {}", command_name(&cli.command));
                println!("seed: {}", cli.seed);
                for (k, v) in &outcome.body {
                    println!("{k}: {v}");
                }
            } else {
                println!(
                    "{}",
                    serialize_report(command_name(&cli.command), cli.seed, outcome.body)
                );
            }
            if outcome.identity_failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
