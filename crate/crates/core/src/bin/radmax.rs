use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use radmax::formats::{self, Format};
use radmax::search::{self, ShardSpec};
use radmax::{
    build_radially_maximal, certificate, is_radially_maximal, verify_H_witnesses, ConstructionParams, Graph, MaximalityError,
};

/// Radially maximal graphs: build, verify, search, convert.
#[derive(Parser)]
#[command(name = "radmax", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a radially maximal graph of radius r, diameter d and order n.
    Construct {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        d: u32,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Write the label map and computed invariants as JSON to this file.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Exit 0 if the graph is radially maximal, 1 if not.
    Verify {
        /// graph6 string, file path, or `-` for stdin (default).
        input: Option<String>,
        /// Include the full witness certificate in the JSON output.
        #[arg(long)]
        certificate: bool,
    },
    /// Exhaustive labeled search at one order (or all orders up to it).
    Search {
        #[arg(long)]
        order: usize,
        /// Count non-self-centered radially maximal graphs of this radius
        /// at orders 1..=N instead of checking the diameter bound.
        #[arg(long)]
        radius: Option<u32>,
        /// Check the diameter bound at every order 1..=N.
        #[arg(long, conflicts_with = "radius")]
        up_to: bool,
        #[arg(long, default_value_t = 1)]
        shards: u64,
        #[arg(long, default_value_t = 0)]
        shard: u64,
    },
    /// Re-encode a graph (graph6, DOT or edge list in; chosen format out).
    Convert {
        input: Option<String>,
        #[arg(long, value_enum)]
        to: Format,
    },
    /// Check the named central/eccentric vertex facts of H(r, d).
    Witnesses {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        d: u32,
    },
}

/// Exit code plus diagnostic.
struct Failure(u8, String);

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Failure(2, msg.to_string())
    }
}

fn read_input(input: Option<&str>) -> Result<String, Failure> {
    match input {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(Failure::usage)?;
            Ok(buf)
        }
        Some(arg) if std::path::Path::new(arg).is_file() => std::fs::read_to_string(arg).map_err(Failure::usage),
        Some(literal) => Ok(literal.to_string()),
    }
}

fn parse_graph(input: Option<&str>) -> Result<Graph, Failure> {
    formats::decode(&read_input(input)?).map_err(Failure::usage)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[derive(Serialize)]
struct Sidecar<'a> {
    params: ConstructionParams,
    order: usize,
    radius: u32,
    diameter: u32,
    graph6: String,
    labels: BTreeMap<&'a str, usize>,
}

fn construct(r: u32, d: u32, n: usize, format: Format, sidecar: Option<PathBuf>) -> Result<u8, Failure> {
    let params = ConstructionParams::new(r, d, n);
    let built = build_radially_maximal(params).map_err(Failure::usage)?;
    print!("{}", formats::encode(&built.graph, format, Some(&built.labels)));
    if let Some(path) = sidecar {
        let p = built.graph.eccentricity_profile();
        let doc = Sidecar {
            params,
            order: built.graph.order(),
            radius: p.radius,
            diameter: p.diameter,
            graph6: formats::to_graph6(&built.graph),
            labels: built.labels.iter().enumerate().map(|(v, l)| (l.as_str(), v)).collect(),
        };
        let text = serde_json::to_string_pretty(&doc).expect("serializable");
        std::fs::write(&path, text + "\n").map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyOutput {
    radially_maximal: bool,
    order: usize,
    radius: u32,
    diameter: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<radmax::MaximalityCertificate>,
}

fn verify(input: Option<&str>, want_certificate: bool) -> Result<u8, Failure> {
    let g = parse_graph(input)?;
    let profile = g.eccentricity_profile();
    let mut out = VerifyOutput {
        radially_maximal: false,
        order: g.order(),
        radius: profile.radius,
        diameter: profile.diameter,
        reason: None,
        certificate: None,
    };
    if !profile.is_connected() {
        return Err(Failure::usage("graph is disconnected: radius is infinite, radial maximality is undefined"));
    }
    out.radially_maximal = is_radially_maximal(&g).map_err(Failure::usage)?;
    if want_certificate || !out.radially_maximal {
        match certificate(&g) {
            Ok(cert) => out.certificate = Some(cert),
            Err(e @ (MaximalityError::Complete | MaximalityError::NotMaximal { .. })) => out.reason = Some(e.to_string()),
            Err(e) => return Err(Failure::usage(e)),
        }
    }
    print_json(&out);
    Ok(if out.radially_maximal { 0 } else { 1 })
}

fn run_search(order: usize, radius: Option<u32>, up_to: bool, shard: ShardSpec) -> Result<u8, Failure> {
    let report = match radius {
        Some(r) => search::min_order_nonselfcentered_sharded(r, order, shard),
        None if up_to => (1..=order)
            .map(|n| search::check_bound_all_sharded(n, shard))
            .try_fold(None::<radmax::SearchReport>, |acc, next| {
                let next = next?;
                Ok(Some(match acc {
                    Some(a) => a.merge(next)?,
                    None => next,
                }))
            })
            .map(|r| r.expect("at least one order")),
        None => search::check_bound_all_sharded(order, shard),
    }
    .map_err(Failure::usage)?;
    print_json(&report);
    let witness_ok = report.constructed_witness.as_ref().is_none_or(|w| w.radially_maximal);
    Ok(if report.holds() && witness_ok { 0 } else { 1 })
}

fn convert(input: Option<&str>, to: Format) -> Result<u8, Failure> {
    let g = parse_graph(input)?;
    print!("{}", formats::encode(&g, to, None));
    Ok(0)
}

fn witnesses(r: u32, d: u32) -> Result<u8, Failure> {
    let report = verify_H_witnesses(r, d).map_err(Failure::usage)?;
    print_json(&report);
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { r, d, n, format, sidecar } => construct(r, d, n, format, sidecar),
        Command::Verify { input, certificate } => verify(input.as_deref(), certificate),
        Command::Search { order, radius, up_to, shards, shard } => {
            run_search(order, radius, up_to, ShardSpec { index: shard, count: shards })
        }
        Command::Convert { input, to } => convert(input.as_deref(), to),
        Command::Witnesses { r, d } => witnesses(r, d),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("radmax: {msg}");
            ExitCode::from(code)
        }
    }
}
