use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use e6rep::model::Model;
use e6rep::rep::{dump_text, Representation};
use e6rep::report::{time, Section};
use e6rep::rootsys::DEFAULT_SEED;
use e6rep::singular::{WeightVector, Weights};
use e6rep::suite::{self, Bounds};
use e6rep::Q;

/// Largest singular-census degree accepted without --force.
const SINGULAR_GUARD: u32 = 6;
/// Largest identity degree accepted without --force.
const IDENTITY_GUARD: u32 = 12;

#[derive(Parser, Debug)]
#[command(
    name = "e6rep",
    version,
    about = "Exact verification of the 27-dimensional E6-module and its Dickson invariant"
)]
struct Cli {
    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Seed for the sampled cocycle and Jacobi checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Lift the cost guards on degree bounds.
    #[arg(long, global = true)]
    force: bool,
    /// Include per-check runtimes (output is then not reproducible byte for byte).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root systems, cocycle laws and the Lie bracket.
    Roots,
    /// Derived representation against the printed operators and tables.
    Rep {
        /// Run the comparison checks (default when no flag is given).
        #[arg(long)]
        check: bool,
        /// Print every derived operator.
        #[arg(long)]
        dump: bool,
    },
    /// Singular vectors of one degree, or of every degree up to it.
    Singular {
        #[arg(long)]
        degree: u32,
        /// Weight in fundamental-weight coordinates, e.g. 0,0,0,0,0,1.
        #[arg(long, value_parser = parse_weight)]
        weight: Option<WeightVector>,
    },
    /// Dual family, cubic invariant and the operator identities.
    Invariant {
        /// Run the full lemma report (default when no flag is given).
        #[arg(long)]
        verify: bool,
        /// Print the invariant or the dual family.
        #[arg(long, value_enum)]
        dump: Option<DumpTarget>,
        /// Total degree bound for the family checks.
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Kernel dimensions of D and the direct-sum decomposition.
    Decompose {
        #[arg(long, default_value_t = 5)]
        degree: u32,
        /// Also build explicit kernel bases (degrees up to 4).
        #[arg(long)]
        materialize: bool,
    },
    /// The dimension generating-function identity.
    Identity {
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// Everything, in dependency order.
    All {
        /// Largest degree for the decomposition.
        #[arg(long, default_value_t = 5)]
        decomp_degree: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DumpTarget {
    Eta,
    Zeta,
}

fn parse_weight(s: &str) -> Result<WeightVector, String> {
    let parts: Vec<i32> = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i32>()
                .map_err(|e| format!("bad weight entry {p:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    let arr: [i32; 6] = parts
        .try_into()
        .map_err(|_| "a weight has 6 entries".to_string())?;
    Ok(WeightVector(arr))
}

struct Output {
    command: &'static str,
    sections: Vec<Section>,
    extra: Value,
}

fn guard(value: u32, bound: u32, force: bool) -> e6rep::Result<()> {
    if value > bound && !force {
        return Err(e6rep::Error::CostGuard {
            degree: value,
            bound,
        });
    }
    Ok(())
}

fn build_model() -> e6rep::Result<(Model<Q>, u64)> {
    let (rep, ms) = time(Representation::<Q>::build);
    Ok((Model::from_rep(rep?)?, ms))
}

fn run(cli: &Cli) -> e6rep::Result<Output> {
    let out = match &cli.command {
        Command::Roots => Output {
            command: "roots",
            sections: vec![suite::roots_section(cli.seed)?],
            extra: Value::Null,
        },
        Command::Rep { check, dump } => {
            let (rep, ms) = time(Representation::<Q>::build);
            let rep = rep?;
            let mut sections = Vec::new();
            if *check || !*dump {
                sections.push(suite::rep_section(&rep, ms)?);
            }
            let extra = if *dump {
                json!({"operators": dump_text(&rep)})
            } else {
                Value::Null
            };
            Output {
                command: "rep",
                sections,
                extra,
            }
        }
        Command::Singular { degree, weight } => {
            guard(*degree, SINGULAR_GUARD, cli.force)?;
            let rep = Representation::<Q>::build()?;
            let weights = Weights::from_rep(&rep);
            Output {
                command: "singular",
                sections: vec![suite::singular_section(&rep, &weights, *degree, *weight)],
                extra: Value::Null,
            }
        }
        Command::Invariant {
            verify,
            dump,
            max_degree,
        } => {
            guard(*max_degree, 9, cli.force)?;
            let (model, _) = build_model()?;
            let mut sections = Vec::new();
            if *verify || dump.is_none() {
                let bounds = Bounds {
                    lemma_degree: *max_degree,
                    annihilation_degree: (*max_degree).min(6),
                    ..Bounds::default()
                };
                sections.push(suite::invariant_section(&model, &bounds));
            }
            let extra = match dump {
                Some(DumpTarget::Eta) => json!({"eta": suite::dump_eta(&model)}),
                Some(DumpTarget::Zeta) => json!({"zeta": suite::dump_zeta(&model)}),
                None => Value::Null,
            };
            Output {
                command: "invariant",
                sections,
                extra,
            }
        }
        Command::Decompose {
            degree,
            materialize,
        } => {
            let (model, _) = build_model()?;
            let sec = suite::decompose_section(&model, *degree, *materialize, cli.force)?;
            Output {
                command: "decompose",
                sections: vec![sec],
                extra: Value::Null,
            }
        }
        Command::Identity { max_degree } => {
            guard(*max_degree, IDENTITY_GUARD, cli.force)?;
            Output {
                command: "identity",
                sections: vec![suite::identity_section(*max_degree)],
                extra: Value::Null,
            }
        }
        Command::All { decomp_degree } => {
            let bounds = Bounds {
                decomp_degree: *decomp_degree,
                ..Bounds::default()
            };
            let mut sections = vec![suite::roots_section(cli.seed)?];
            let (model, ms) = build_model()?;
            sections.push(suite::rep_section(&model.rep, ms)?);
            sections.push(suite::singular_section(
                &model.rep,
                &model.weights,
                bounds.singular_degree,
                None,
            ));
            sections.push(suite::invariant_section(&model, &bounds));
            sections.push(suite::decompose_section(
                &model,
                bounds.decomp_degree,
                false,
                cli.force,
            )?);
            sections.push(suite::closure_section(
                &model,
                bounds.closure_650,
                cli.force,
            )?);
            sections.push(suite::identity_section(bounds.identity_degree));
            Output {
                command: "all",
                sections,
                extra: Value::Null,
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            let doc = json!({"error": e.to_string()});
            if cli.text {
                eprintln!("error: {e}");
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            }
            return ExitCode::from(2);
        }
    };
    if !cli.timings {
        for s in &mut out.sections {
            s.strip_timings();
        }
    }
    let (pass, fail, flagged) = suite::tally(&out.sections);
    if cli.text {
        for s in &out.sections {
            print!("{}", s.render_text());
        }
        if let Value::Object(map) = &out.extra {
            for (k, v) in map {
                println!("== {k} ==");
                match v {
                    Value::String(s) => println!("{s}"),
                    other => println!(
                        "{}",
                        serde_json::to_string_pretty(other).expect("serializable")
                    ),
                }
            }
        }
        println!("summary: {pass} pass, {fail} fail, {flagged} flagged");
    } else {
        let doc = json!({
            "command": out.command,
            "sections": out.sections,
            "output": out.extra,
            "summary": {"pass": pass.to_string(), "fail": fail.to_string(), "flagged": flagged.to_string()},
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    }
    if fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
