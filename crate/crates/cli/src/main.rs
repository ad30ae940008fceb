use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grouplat_core::factory::parse_spec;
use grouplat_core::lattice::{self, group_json, interval_with_budget, palffy_check, DEFAULT_ELEMENT_BUDGET};
use grouplat_core::product::{
    affine_line_shortcut, goursat_decompose, interval_type, maximal_case, product_maximals, shortcut_novelty,
    skeleton_orders, DirectProduct,
};
use grouplat_core::verify::{evaluate_law, verify_suite, Budgets};
use grouplat_core::{Error, Group, Result};

#[derive(Parser)]
#[command(name = "grouplat", version, about = "Permutation groups, subgroup intervals and parity laws")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    emit: Emit,
    /// Element-iteration budget for interval searches.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_BUDGET)]
    element_budget: u128,
    /// Largest group order a verification check may touch.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_BUDGET)]
    order_budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum GoursatOp {
    Maximals,
    Classify,
    Shortcut,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a spec such as `proj:2,7,PGL` and describe it.
    Construct { spec: String },
    /// All subgroups between `--sub` and `--ambient`.
    Interval {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        sub: String,
    },
    /// Homogeneous marks hm(K, L) and hm(L, K) under the ambient group.
    Hm {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        k: String,
        #[arg(long)]
        l: String,
    },
    /// Evaluate a parity law, e.g. `--law powerset --params n=5,l=2,par=1`.
    Parity {
        #[arg(long)]
        law: String,
        #[arg(long, default_value = "")]
        params: String,
        /// Also build a witness and compare its parity.
        #[arg(long)]
        witness: bool,
    },
    /// Subgroups of a direct product of two groups.
    Goursat {
        #[arg(long, required_unless_present = "affine_example")]
        left: Option<String>,
        #[arg(long, required_unless_present = "affine_example")]
        right: Option<String>,
        #[arg(long, value_enum)]
        op: GoursatOp,
        /// Inner subgroup of the product, on the combined points.
        #[arg(long, requires = "outer")]
        inner: Option<String>,
        #[arg(long, requires = "inner")]
        outer: Option<String>,
        /// Use the affine-line example over GF(q) instead of explicit groups.
        #[arg(long, conflicts_with_all = ["left", "right", "inner", "outer"])]
        affine_example: Option<u64>,
    },
    /// Run a verification suite: thesis-core, parity, appendix-a or feit-palffy.
    Verify { suite: String },
}

/// What a command produced: a JSON document, its text rendering, and
/// optionally a DOT graph.
struct Output {
    json: Value,
    text: String,
    dot: Option<String>,
    code: u8,
}

impl Output {
    fn new(json: Value, text: String) -> Output {
        Output { json, text, dot: None, code: 0 }
    }
}

fn group(spec: &str) -> Result<Group> {
    Ok(parse_spec(spec)?.group)
}

fn describe(g: &Group) -> String {
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_cycle_string()).collect();
    format!("degree {}, order {}\ngenerators: {}", g.degree(), g.order(), gens.join(", "))
}

fn parse_params(s: &str) -> Result<BTreeMap<String, u64>> {
    s.split(',')
        .filter(|kv| !kv.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Input(format!("expected key=value, got {kv:?}")))?;
            let v = v.trim().parse::<u64>().map_err(|_| Error::Input(format!("{k} must be a non-negative integer")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Construct { spec } => {
            let c = parse_spec(spec)?;
            let mut j = group_json(&c.group);
            j["name"] = json!(c.name);
            j["labeling"] = json!(c.labeling);
            let text = format!("{}\n{}\npoints: {}", c.name, describe(&c.group), c.labeling);
            Ok(Output::new(j, text))
        }
        Command::Interval { ambient, sub } => {
            let iv = interval_with_budget(&group(sub)?, &group(ambient)?, cli.element_budget)?;
            let mut text = format!("shape {}\n", iv.shape);
            for (i, g) in iv.nodes.iter().enumerate() {
                text.push_str(&format!("n{i}: order {}\n", g.order()));
            }
            let edges: Vec<String> = iv.hasse.iter().map(|(a, b)| format!("n{a} -> n{b}")).collect();
            text.push_str(&format!("covers: {}", edges.join(", ")));
            let mut out = Output::new(iv.to_json(), text);
            out.dot = Some(iv.to_dot());
            Ok(out)
        }
        Command::Hm { ambient, k, l } => {
            let (g, k, l) = (group(ambient)?, group(k)?, group(l)?);
            let rep = palffy_check(&k, &l, &g)?;
            let text = format!(
                "hm(K, L) = {}\nhm(L, K) = {}\n|G:N(K)| = {}, |G:N(L)| = {}, identity holds: {}",
                rep.hm_k_l, rep.hm_l_k, rep.index_n_k, rep.index_n_l, rep.holds
            );
            let json = serde_json::to_value(&rep).expect("report serializes");
            Ok(Output { code: u8::from(!rep.holds), ..Output::new(json, text) })
        }
        Command::Parity { law, params, witness } => {
            let rep = evaluate_law(law, &parse_params(params)?, *witness)?;
            let mut text = format!("{} predicts {}", rep.prediction.law, if rep.prediction.value == 1 { "odd" } else { "even" });
            if let Some(w) = rep.witness {
                text.push_str(&format!("\nwitness is {}: {}", if w == 1 { "odd" } else { "even" }, if rep.agrees() { "agrees" } else { "DISAGREES" }));
            }
            let mut json = serde_json::to_value(&rep).expect("report serializes");
            json["agrees"] = json!(rep.agrees());
            Ok(Output { code: u8::from(!rep.agrees()), ..Output::new(json, text) })
        }
        Command::Goursat { left, right, op, inner, outer, affine_example } => goursat(cli, left, right, *op, inner, outer, *affine_example),
        Command::Verify { suite } => {
            let budgets = Budgets { element_budget: cli.element_budget, order_budget: cli.order_budget };
            let rep = verify_suite(suite, &budgets)?;
            let json = serde_json::to_value(&rep).expect("report serializes");
            Ok(Output { code: rep.exit_code() as u8, ..Output::new(json, rep.to_text().trim_end().to_string()) })
        }
    }
}

fn goursat(
    cli: &Cli,
    left: &Option<String>,
    right: &Option<String>,
    op: GoursatOp,
    inner: &Option<String>,
    outer: &Option<String>,
    affine_example: Option<u64>,
) -> Result<Output> {
    let (p, pair) = match (affine_example, left, right) {
        (Some(q), _, _) => {
            let (p, bottom, top) = affine_line_shortcut(q)?;
            (p, Some((bottom, top)))
        }
        (None, Some(l), Some(r)) => {
            let p = DirectProduct::new(&group(l)?, &group(r)?);
            let pair = match (inner, outer) {
                (Some(i), Some(o)) => Some((group(i)?, group(o)?)),
                _ => None,
            };
            (p, pair)
        }
        _ => return Err(Error::Input("give --left and --right, or --affine-example".into())),
    };
    match op {
        GoursatOp::Maximals => {
            let maxes = product_maximals(&p)?;
            let mut rows = Vec::new();
            let mut text = format!("{} maximal subgroups\n", maxes.len());
            for m in &maxes {
                let d = goursat_decompose(&p, m)?;
                let orders = [d.c.order(), d.a_ker.order(), d.d.order(), d.b_ker.order()];
                text.push_str(&format!("order {}: C {}, A {}, D {}, B {}\n", m.order(), orders[0], orders[1], orders[2], orders[3]));
                let mut j = group_json(m);
                j["goursat_orders"] = json!({"c": orders[0].to_string(), "a_ker": orders[1].to_string(), "d": orders[2].to_string(), "b_ker": orders[3].to_string()});
                rows.push(j);
            }
            Ok(Output::new(json!({"maximals": rows}), text.trim_end().to_string()))
        }
        GoursatOp::Classify => match pair {
            Some((i, o)) => {
                let case = maximal_case(&p, &i, &o)?;
                let t = interval_type(&p, &i, &o)?;
                let sk = skeleton_orders(&p, &i, &o)?;
                let text = format!("maximal: {}\ntype: {}\nskeleton orders: l = {}, r = {}", case.map_or("no".into(), |c| format!("{c:?}")), t.label(), sk.l, sk.r);
                Ok(Output::new(json!({"maximal_case": case, "type": t, "skeleton": sk}), text))
            }
            None => {
                let iv = interval_with_budget(&Group::trivial(p.whole.degree()), &p.whole, cli.element_budget)?;
                let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
                for &(a, b) in &iv.hasse {
                    *counts.entry(interval_type(&p, &iv.nodes[a], &iv.nodes[b])?.label()).or_default() += 1;
                }
                let text = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n");
                Ok(Output::new(json!({"subgroups": iv.nodes.len(), "covering_types": counts}), format!("{} subgroups\n{text}", iv.nodes.len())))
            }
        },
        GoursatOp::Shortcut => {
            let (i, o) = pair.ok_or_else(|| Error::Input("shortcut needs --inner and --outer".into()))?;
            let rep = shortcut_novelty(&p, &i, &o)?;
            let text = format!(
                "shape {}\nshortcut: {} {}\nnovelty: {}",
                rep.shape,
                rep.has_shortcut,
                rep.shortcut_tags.join(" "),
                rep.is_novelty
            );
            let mut out = Output::new(serde_json::to_value(&rep).expect("report serializes"), text);
            let nodes = lattice::overgroups(&i, &o, cli.element_budget)?;
            out.dot = Some(lattice::interval_from_nodes(nodes).to_dot());
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.emit {
                Emit::Json => serde_json::to_string_pretty(&out.json).expect("json output") + "\n",
                Emit::Text => out.text + "\n",
                Emit::Dot => match out.dot {
                    Some(d) => d,
                    None => {
                        eprintln!("error: this command has no DOT output");
                        return ExitCode::from(2);
                    }
                },
            };
            // a closed pipe on the reading side is not an error of ours
            let _ = std::io::stdout().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}
