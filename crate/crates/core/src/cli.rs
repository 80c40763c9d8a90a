//! The `irred` command line. Every command builds one JSON value; the table
//! format is a rendering of that value.
//!
//! Exit codes: 0 success, 2 budget-limited, 3 not certified, 4 mixed
//! evidence, 64 usage, 65 bad data or unsupported group.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::arithmetic::{
    assess_irredundancy, assess_nielsen_irredundancy, certify_density, plan_primes, replay_certificate,
    DensityCertificate, DensityOutcome, EvidenceSummary, PlanConfig, PrimePlan, RationalTuple,
};
use crate::error::Error;
use crate::groups::{product_generates, GeneratingTuple, GroupSpec, ProductReason};
use crate::nielsen::{mu_rank, orbit_statistics, DEFAULT_ORBIT_BUDGET};
use crate::redundancy::{
    irredundant_witness, is_redundant, max_irredundant_size, z_witness, RankSearchResult, SearchLimits,
    WitnessConstraints, WitnessOutcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_NOT_CERTIFIED: i32 = 3;
pub const EXIT_MIXED: i32 = 4;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "irred", version, about = "Irredundant generating sets, Nielsen orbits and density certificates")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub node_budget: u64,
    /// Seconds.
    #[arg(long, global = true, default_value_t = 600)]
    pub time_budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Comma-separated primes to use instead of counting up from the floor.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    #[arg(long, global = true, default_value_t = 3)]
    pub exceptional_floor: u64,
    #[arg(long, global = true, default_value_t = 10)]
    pub max_primes: usize,
    /// Include wall-clock times in the output.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// m(G): largest irredundant generating set.
    Rank {
        group: String,
        #[arg(long)]
        max_size: Option<usize>,
        /// Sampling attempts for groups too large to tabulate.
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// μ(G): largest Nielsen-irredundant generating tuple.
    Mu { group: String },
    /// Certify density of a rational SL_n tuple by reduction mod primes.
    Certify {
        input: PathBuf,
        /// Also assess irredundancy at the first K planned primes.
        #[arg(long, value_name = "K")]
        evidence: Option<usize>,
        /// Make the evidence about Nielsen irredundancy.
        #[arg(long, requires = "evidence")]
        nielsen: bool,
        /// Write the bare certificate JSON here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate file.
    Replay { certificate: PathBuf },
    /// The irredundant generating n-tuple of Z.
    Zdemo { n: usize },
    /// Find an irredundant generating tuple of a given size.
    Witness {
        group: String,
        #[arg(long)]
        size: usize,
        /// Only involutions.
        #[arg(long)]
        involutions: bool,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Generation test for a tuple in a product of two simple groups.
    ProductCheck { input: PathBuf },
    /// Nielsen orbit statistics on generating n-tuples.
    Orbit { group: String, n: usize },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn data(e: impl std::fmt::Display) -> Self {
        Self { code: EXIT_DATA, message: e.to_string() }
    }
}

/// Group descriptors: syntax errors are usage errors, invalid groups are data errors.
fn parse_group(s: &str) -> Result<GroupSpec, Failure> {
    s.parse().map_err(|e: Error| Failure {
        code: if matches!(e, Error::Parse(_)) { EXIT_USAGE } else { EXIT_DATA },
        message: e.to_string(),
    })
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

impl Cli {
    fn limits(&self, samples: usize, max_size: Option<usize>) -> SearchLimits {
        SearchLimits {
            max_size,
            node_budget: self.node_budget,
            time_budget: Duration::from_secs(self.time_budget),
            seed: self.seed,
            samples,
        }
    }

    fn plan_config(&self) -> PlanConfig {
        PlanConfig {
            exceptional_floor: self.exceptional_floor,
            max_primes: self.max_primes,
            explicit_primes: self.primes.clone(),
        }
    }

    /// The settings that can affect results; thread count is left out
    /// since output does not depend on it.
    fn config_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "node_budget": self.node_budget,
            "time_budget_secs": self.time_budget,
            "primes": self.primes,
            "exceptional_floor": self.exceptional_floor,
            "max_primes": self.max_primes,
        })
    }
}

fn tuple_json(t: &GeneratingTuple) -> Value {
    Value::Array(t.items().iter().map(|x| Value::String(x.to_string())).collect())
}

fn rank_json(r: &RankSearchResult, timings: bool) -> Value {
    let mut stats = json!({
        "nodes": r.stats.nodes,
        "prunes": r.stats.prunes,
        "levels": r.stats.levels.iter().map(|l| json!({
            "size": l.size,
            "candidates": l.candidates,
            "classes": l.classes,
            "generating": l.generating,
            "irredundant_generating": l.irredundant_generating,
            "carried": l.carried,
        })).collect::<Vec<_>>(),
    });
    if timings {
        stats["wall_time_ms"] = json!(r.stats.wall_time.as_secs_f64() * 1000.0);
    }
    json!({
        "group": r.group.to_string(),
        "kind": r.kind.to_string(),
        "computed": r.computed,
        "exhaustive": r.exhaustive,
        "upper_bound": r.upper_bound,
        "stop": r.stop.map(|s| s.to_string()),
        "witness": r.witness.as_ref().map(tuple_json),
        "stats": stats,
    })
}

fn plan_json(plan: &PrimePlan) -> Value {
    json!({
        "candidates": plan.candidates,
        "excluded_denominator_primes": plan.excluded_denominator_primes,
        "exceptional_floor": plan.exceptional_floor,
        "floor_clamped_from": plan.floor_clamped_from,
        "max_primes_to_try": plan.max_primes_to_try,
    })
}

fn execute(cli: &Cli) -> Result<(i32, Value), Failure> {
    let started = Instant::now();
    let (code, mut body) = match &cli.command {
        Command::Rank { group, max_size, samples } => {
            let g = parse_group(group)?;
            let r = max_irredundant_size(&g, &cli.limits(*samples, *max_size)).map_err(Failure::data)?;
            let code = if r.exhaustive { EXIT_OK } else { EXIT_BUDGET };
            (code, rank_json(&r, cli.timings))
        }
        Command::Mu { group } => {
            let g = parse_group(group)?;
            let r = mu_rank(&g, &cli.limits(0, None)).map_err(Failure::data)?;
            let code = if r.exhaustive { EXIT_OK } else { EXIT_BUDGET };
            (code, rank_json(&r, cli.timings))
        }
        Command::Certify { input, evidence, nielsen, output } => {
            let t: RationalTuple = read(input)?.parse().map_err(Failure::data)?;
            let plan = plan_primes(&t, &cli.plan_config());
            let outcome = certify_density(&t, &plan).map_err(Failure::data)?;
            let mut code = if outcome.is_certified() { EXIT_OK } else { EXIT_NOT_CERTIFIED };
            let mut body = json!({ "plan": plan_json(&plan) });
            match &outcome {
                DensityOutcome::Certified(c) => {
                    body["outcome"] = json!("certified");
                    body["certificate"] = serde_json::to_value(c).expect("serializable");
                    if let Some(path) = output {
                        std::fs::write(path, c.to_json() + "\n")
                            .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
                    }
                }
                DensityOutcome::NotCertified(n) => {
                    body["outcome"] = json!("not-certified");
                    body["report"] = serde_json::to_value(n).expect("serializable");
                    body["note"] = json!("no tested prime gave a generating reduction; evidence against density, not a proof");
                }
            }
            if let Some(k) = *evidence {
                let ev = if *nielsen {
                    let budget = (cli.node_budget.min(DEFAULT_ORBIT_BUDGET as u64)) as usize;
                    assess_nielsen_irredundancy(&t, &plan, k, budget)
                } else {
                    assess_irredundancy(&t, &plan, k)
                }
                .map_err(Failure::data)?;
                if ev.summary == EvidenceSummary::Mixed && code == EXIT_OK {
                    code = EXIT_MIXED;
                }
                body["evidence"] = serde_json::to_value(&ev).expect("serializable");
            }
            (code, body)
        }
        Command::Replay { certificate } => {
            let text = read(certificate)?;
            let v: Value = serde_json::from_str(&text).map_err(Failure::data)?;
            let inner = v.get("certificate").cloned().unwrap_or(v);
            let cert: DensityCertificate = serde_json::from_value(inner).map_err(Failure::data)?;
            replay_certificate(&cert).map_err(Failure::data)?;
            (
                EXIT_OK,
                json!({ "replay": "ok", "witness_prime": cert.witness_prime, "fingerprint": cert.fingerprint }),
            )
        }
        Command::Zdemo { n } => {
            let t = z_witness(*n).map_err(Failure::data)?;
            let r = is_redundant(&t).map_err(Failure::data)?;
            (EXIT_OK, json!({ "n": n, "tuple": tuple_json(&t), "verdict": r.verdict.to_string() }))
        }
        Command::Witness { group, size, involutions, samples } => {
            let g = parse_group(group)?;
            let constraints = WitnessConstraints { involutions_only: *involutions };
            let out = irredundant_witness(&g, *size, constraints, &cli.limits(*samples, None)).map_err(Failure::data)?;
            let base = json!({ "group": g.to_string(), "size": size, "involutions_only": involutions });
            let (code, extra) = match out {
                WitnessOutcome::Found(t) => (EXIT_OK, json!({ "found": true, "witness": tuple_json(&t) })),
                WitnessOutcome::NoneExists => (EXIT_OK, json!({ "found": false, "exhaustive": true })),
                WitnessOutcome::Indeterminate(s) => {
                    (EXIT_BUDGET, json!({ "found": false, "exhaustive": false, "stop": s.to_string() }))
                }
            };
            (code, merge(base, extra))
        }
        Command::ProductCheck { input } => {
            let text = read(input)?;
            let mut lines = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty());
            let header = lines.next().ok_or_else(|| Failure::data("empty input"))?;
            let g: GroupSpec = header.parse().map_err(Failure::data)?;
            let items = lines.map(|l| g.parse_element(l)).collect::<Result<Vec<_>, _>>().map_err(Failure::data)?;
            let t = GeneratingTuple::new(g.clone(), items).map_err(Failure::data)?;
            let v = product_generates(&t).map_err(Failure::data)?;
            let mut body = json!({
                "group": g.to_string(),
                "tuple": tuple_json(&t),
                "generates": v.generates,
                "detail": v.reason.to_string(),
            });
            let diagnosis = match &v.reason {
                ProductReason::NonIsomorphicFactors | ProductReason::NoAligningIsomorphism { .. } => "generates",
                ProductReason::ProjectionProper { factor } => {
                    body["factor"] = json!(factor);
                    "projection proper"
                }
                ProductReason::GraphOfIsomorphism { isomorphism } => {
                    body["isomorphism"] = json!(isomorphism.to_string());
                    "graph of isomorphism"
                }
            };
            body["diagnosis"] = json!(diagnosis);
            (EXIT_OK, body)
        }
        Command::Orbit { group, n } => {
            let g = parse_group(group)?;
            let s = orbit_statistics(&g, *n).map_err(Failure::data)?;
            let (red, total) = s.redundant_fraction();
            (
                EXIT_OK,
                json!({
                    "group": g.to_string(),
                    "n": n,
                    "conjugacy_classes_of_tuples": s.classes,
                    "generating_tuples": s.generating_tuples.to_string(),
                    "orbits": s.orbits(),
                    "orbit_sizes": s.orbit_sizes.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "redundant_orbits": red,
                    "redundant_fraction": format!("{red}/{total}"),
                }),
            )
        }
    };
    let command = match &cli.command {
        Command::Rank { .. } => "rank",
        Command::Mu { .. } => "mu",
        Command::Certify { .. } => "certify",
        Command::Replay { .. } => "replay",
        Command::Zdemo { .. } => "zdemo",
        Command::Witness { .. } => "witness",
        Command::ProductCheck { .. } => "product-check",
        Command::Orbit { .. } => "orbit",
    };
    let mut head = json!({ "command": command, "exit_code": code, "config": cli.config_json() });
    if cli.timings {
        head["wall_time_ms"] = json!(started.elapsed().as_secs_f64() * 1000.0);
    }
    body = merge(head, body);
    Ok((code, body))
}

fn merge(a: Value, b: Value) -> Value {
    let mut out: Map<String, Value> = a.as_object().cloned().unwrap_or_default();
    if let Value::Object(m) = b {
        out.extend(m);
    }
    Value::Object(out)
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(xs.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

/// Indented `key: value` rendering of a JSON value.
pub fn render_table(v: &Value) -> String {
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            go(x, indent + 1, out);
                        }
                    }
                }
            }
            Value::Array(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}[{i}]\n"));
                            go(x, indent + 1, out);
                        }
                    }
                }
            }
            x => out.push_str(&format!("{pad}{}\n", scalar(x).unwrap_or_default())),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out
}

/// Parses arguments and runs one command, capturing its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: e.to_string() },
    };
    match pool.install(|| execute(&cli)) {
        Ok((code, v)) => Outcome {
            code,
            stdout: match cli.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                Format::Table => render_table(&v),
            },
            stderr: String::new(),
        },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(run(["irred", "zdemo", "3"]).code, EXIT_OK);
        assert_eq!(run(["irred", "rank", "psl2:4"]).code, EXIT_DATA);
        assert_eq!(run(["irred", "rank", "psl2"]).code, EXIT_USAGE);
        assert_eq!(run(["irred", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["irred", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn zdemo_output() {
        let o = run(["irred", "--format", "json", "zdemo", "3"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["tuple"], json!(["15", "10", "6"]));
        assert_eq!(v["verdict"], "IrredundantGenerating");
        let t = run(["irred", "zdemo", "3"]).stdout;
        assert!(t.contains("tuple: 15, 10, 6"), "{t}");
    }

    #[test]
    fn rank_is_thread_independent() {
        let a = run(["irred", "--format", "json", "--threads", "1", "rank", "psl2:5"]);
        let b = run(["irred", "--format", "json", "--threads", "3", "rank", "psl2:5"]);
        assert_eq!(a.code, EXIT_OK);
        assert_eq!(a.stdout, b.stdout);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["computed"], 3);
    }
}
