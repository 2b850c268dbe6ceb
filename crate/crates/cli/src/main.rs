//! `seqlogic`: command-line front end.
//!
//! Exit codes: 0 success, 1 a golden or expected result failed to match,
//! 2 usage or input error, 3 no definite answer within the budgets.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use seqlogic::axioms::{bergstra_vdpol_suite, guzman_squier_suite};
use seqlogic::classify::{classify, Verdict, DEFAULT_DEPTH};
use seqlogic::lambdai::{bot_normalize_i, validate_lambda_i, BotNormal};
use seqlogic::logic::{compare_golden, truth_table, Arity, Connective, Decoded, Style};
use seqlogic::prop::{direct_eval, eval_prop, parse_assignment, parse_prop, russell_demo};
use seqlogic::reduce::{normalize, normalize_traced, ReduceOutcome, DEFAULT_FUEL};
use seqlogic::reproduce::reproduce;
use seqlogic::term::{free_vars, DefEnv, Term};
use seqlogic::trees::{berarducci_tree, bohm_tree, levy_longo_tree};
use seqlogic::{parse_script, parse_term, Error};

const TREE_DEPTH: usize = 16;

#[derive(Parser)]
#[command(
    name = "seqlogic",
    version,
    about = "λ-calculus workbench for left-sequential logics"
)]
struct Cli {
    /// Reduction steps available to each question.
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    fuel: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Read `Name = term` definitions and a final query term from a file
    /// instead of taking the term from the command line.
    #[arg(long, global = true)]
    file: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a term and print it back.
    Parse { term: Option<String> },
    /// Normal-order reduction to normal form.
    Reduce {
        term: Option<String>,
        #[arg(long)]
        trace: bool,
    },
    /// Solvable, unsolvable (HA, IL or O), or unknown.
    Classify {
        term: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Böhm tree, cut at the given depth.
    Bohm {
        term: Option<String>,
        #[arg(long, default_value_t = TREE_DEPTH)]
        depth: usize,
    },
    /// Lévy-Longo tree, cut at the given depth.
    LevyLongo {
        term: Option<String>,
        #[arg(long, default_value_t = TREE_DEPTH)]
        depth: usize,
    },
    /// Berarducci tree, cut at the given depth.
    Berarducci {
        term: Option<String>,
        #[arg(long, default_value_t = TREE_DEPTH)]
        depth: usize,
    },
    /// Truth table of a connective, computed by reduction.
    Table {
        /// neg, conj, disj or impl.
        connective: Connective,
        #[arg(long, default_value = "3", value_parser = parse_arity)]
        arity: Arity,
        #[arg(long, default_value = "church")]
        style: Style,
    },
    /// Check the axiom systems exhaustively.
    Axioms {
        /// guzman-squier, bergstra-vdpol or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "church")]
        style: Style,
    },
    /// Propositions.
    Prop {
        #[command(subcommand)]
        command: PropCommand,
    },
    /// λI-calculus.
    Lambdai {
        #[command(subcommand)]
        command: LambdaICommand,
    },
    /// Russell's paradox as a λ-term.
    Russell {
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
    /// Recompute every published table and axiom check.
    ReproducePaper,
}

#[derive(Subcommand)]
enum PropCommand {
    /// Compile to a λ-term, reduce and decode.
    Eval {
        prop: String,
        /// Variable values, e.g. `a=T,b=_|_`.
        #[arg(long, default_value = "")]
        assign: String,
        #[arg(long, default_value = "3", value_parser = parse_arity)]
        arity: Arity,
        #[arg(long, default_value = "church")]
        style: Style,
        /// Use the direct three-valued interpreter instead.
        #[arg(long)]
        direct: bool,
    },
}

#[derive(Subcommand)]
enum LambdaICommand {
    /// List abstractions that do not use their binder.
    Check { term: Option<String> },
    /// Normalize, sending subterms without a finite normal form to ⊥.
    Normalize { term: Option<String> },
}

fn parse_arity(s: &str) -> Result<Arity, String> {
    let n: u8 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    Arity::try_from(n).map_err(|e| e.to_string())
}

enum Failure {
    Mismatch(String),
    Usage(String),
    Undecided(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Undecided(_) => Failure::Undecided(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
}

fn out(text: String, json: impl Serialize) -> Output {
    Output {
        text,
        json: serde_json::to_value(json).expect("serializable output"),
    }
}

fn term_arg(cli_file: &Option<String>, term: &Option<String>) -> Result<Term, Failure> {
    match (cli_file, term) {
        (Some(path), None) => {
            let src =
                fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Ok(parse_script(&src, &DefEnv::standard())?.1)
        }
        (None, Some(src)) => Ok(parse_term(src, &DefEnv::standard())?),
        (Some(_), Some(_)) => Err(Failure::Usage(
            "give either a term or --file, not both".into(),
        )),
        (None, None) => Err(Failure::Usage("missing term".into())),
    }
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!("{v}\n");
    match v {
        Verdict::Unsolvable { evidence, .. } => {
            s.push_str(&format!("evidence: {}\n", evidence.describe()))
        }
        Verdict::Solvable { .. } | Verdict::Unknown { .. } => {}
    }
    s.push_str(&format!("steps: {}\n", v.steps()));
    s
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let fuel = cli.fuel;
    let term = |t: &Option<String>| term_arg(&cli.file, t);
    match &cli.command {
        Command::Parse { term: t } => {
            let t = term(t)?;
            let free: Vec<String> = free_vars(&t).iter().map(|x| x.to_string()).collect();
            Ok(out(
                format!("{t}\n"),
                serde_json::json!({ "term": t, "size": t.size(), "free_vars": free }),
            ))
        }
        Command::Reduce { term: t, trace } => {
            let t = term(t)?;
            let (outcome, tr) = if *trace {
                let (o, tr) = normalize_traced(&t, fuel);
                (o, Some(tr))
            } else {
                (normalize(&t, fuel), None)
            };
            let mut text = tr.as_ref().map(|tr| tr.render()).unwrap_or_default();
            text.push_str(&match &outcome {
                ReduceOutcome::NormalForm { term, steps } => {
                    format!("normal form: {term}\nsteps: {steps}\n")
                }
                ReduceOutcome::CycleDetected {
                    witness,
                    loop_length,
                    steps,
                } => format!(
                    "no normal form: `{witness}` recurs every {loop_length} steps\nsteps: {steps}\n"
                ),
                ReduceOutcome::FuelExhausted { last, steps } => {
                    return Err(Failure::Undecided(format!(
                        "no normal form within {steps} steps; last term: {last}"
                    )))
                }
            });
            Ok(out(
                text,
                serde_json::json!({ "outcome": outcome, "trace": tr }),
            ))
        }
        Command::Classify { term: t, depth } => {
            let v = classify(&term(t)?, fuel, *depth);
            if let Verdict::Unknown { .. } = v {
                return Err(Failure::Undecided(verdict_text(&v).trim_end().to_string()));
            }
            Ok(out(verdict_text(&v), &v))
        }
        Command::Bohm { term: t, depth } => {
            let tree = bohm_tree(&term(t)?, *depth, fuel);
            Ok(out(format!("{tree}\n"), &tree))
        }
        Command::LevyLongo { term: t, depth } => {
            let tree = levy_longo_tree(&term(t)?, *depth, fuel);
            Ok(out(format!("{tree}\n"), &tree))
        }
        Command::Berarducci { term: t, depth } => {
            let tree = berarducci_tree(&term(t)?, *depth, fuel);
            Ok(out(format!("{tree}\n"), &tree))
        }
        Command::Table {
            connective,
            arity,
            style,
        } => {
            let table = truth_table(*connective, *arity, *style, fuel)?;
            let golden = compare_golden(&table);
            let text = table.render();
            if let Some(g) = golden.as_ref().filter(|g| !g.passed()) {
                let cells: Vec<String> = g
                    .mismatches
                    .iter()
                    .chain(g.flagged.iter())
                    .map(|c| {
                        format!(
                            "{:?}: printed {}, computed {}",
                            c.inputs, c.printed, c.computed
                        )
                    })
                    .collect();
                return Err(Failure::Mismatch(format!(
                    "{text}golden mismatch: {}",
                    cells.join("; ")
                )));
            }
            Ok(out(
                text,
                serde_json::json!({ "table": table, "golden": golden }),
            ))
        }
        Command::Axioms { suite, style } => {
            let reports = match suite.as_str() {
                "guzman-squier" => vec![guzman_squier_suite(*style, fuel)?],
                "bergstra-vdpol" => vec![bergstra_vdpol_suite(*style, fuel)?],
                "all" => vec![
                    guzman_squier_suite(*style, fuel)?,
                    bergstra_vdpol_suite(*style, fuel)?,
                ],
                other => return Err(Failure::Usage(format!("unknown suite `{other}`"))),
            };
            let text: Vec<String> = reports.iter().map(|r| r.render()).collect();
            let text = text.join("\n");
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Mismatch(text));
            }
            Ok(out(text, &reports))
        }
        Command::Prop {
            command:
                PropCommand::Eval {
                    prop,
                    assign,
                    arity,
                    style,
                    direct,
                },
        } => {
            let (p, env) = parse_prop(prop)?;
            let asg = parse_assignment(assign)?;
            let value = if *direct {
                Decoded::Value(direct_eval(&p, &env, &asg)?)
            } else {
                eval_prop(&p, &env, &asg, *arity, *style, fuel)?
            };
            if let Decoded::Unknown(r) = value {
                return Err(Failure::Undecided(format!("{p}: {r}")));
            }
            Ok(out(format!("{value}\n"), value))
        }
        Command::Lambdai {
            command: LambdaICommand::Check { term: t },
        } => {
            let violations = validate_lambda_i(&term(t)?);
            let text = if violations.is_empty() {
                "λI-term\n".to_string()
            } else {
                violations.iter().map(|v| format!("{v}\n")).collect()
            };
            Ok(out(
                text,
                serde_json::json!({ "lambda_i": violations.is_empty(), "violations": violations }),
            ))
        }
        Command::Lambdai {
            command: LambdaICommand::Normalize { term: t },
        } => match bot_normalize_i(&term(t)?, fuel)? {
            BotNormal::Normal(n) => Ok(out(
                format!("{n}\n"),
                serde_json::json!({ "normal_form": n }),
            )),
            BotNormal::Unknown(r) => Err(Failure::Undecided(format!("Unknown({r})"))),
        },
        Command::Russell { steps } => {
            let r = russell_demo(*steps, fuel);
            Ok(out(r.render(), &r))
        }
        Command::ReproducePaper => {
            let r = reproduce(fuel)?;
            let text = r.render();
            if !r.passed() {
                return Err(Failure::Mismatch(text));
            }
            Ok(out(
                text,
                serde_json::json!({ "passed": true, "report": r }),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(o) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("valid JSON")
                );
            } else {
                print!("{}", o.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(msg)) => {
            print!("{msg}");
            if !msg.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Undecided(msg)) => {
            eprintln!("undecided: {msg}");
            ExitCode::from(3)
        }
    }
}
