//! Exhaustive checking of equational axioms over a finite logic, with both
//! sides evaluated through the λ-engine.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::logic::{tuples, Arity, Decoded, Style, TruthValue};
use crate::prop::{eval_prop, parse_prop, Assignment, Prop, RecEnv};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: Prop,
    pub rhs: Prop,
}

impl Equation {
    /// Parses `lhs = rhs`. Metavariables are `x`, `y` and `z`.
    pub fn parse(name: &str, src: &str) -> Result<Equation, Error> {
        let (l, r) = src.split_once('=').ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: "expected `lhs = rhs`".into(),
        })?;
        let side = |text: &str, offset: usize| -> Result<Prop, Error> {
            let (p, env) = parse_prop(text).map_err(|e| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos: pos + offset,
                    msg,
                },
                other => other,
            })?;
            if !env.is_empty() {
                return Err(Error::Syntax {
                    pos: offset,
                    msg: "recursive definitions are not allowed in axioms".into(),
                });
            }
            if let Some(v) = p
                .vars()
                .into_iter()
                .find(|v| !["x", "y", "z"].contains(&v.as_str()))
            {
                return Err(Error::UnboundVariable(v));
            }
            Ok(p)
        };
        Ok(Equation {
            name: name.to_string(),
            lhs: side(l, 0)?,
            rhs: side(r, l.len() + 1)?,
        })
    }

    pub fn vars(&self) -> Vec<String> {
        let mut vs = self.lhs.vars();
        for v in self.rhs.vars() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        vs.sort();
        vs
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AxiomStatus {
    Holds {
        assignments: usize,
    },
    CounterExample {
        assignment: Vec<(String, TruthValue)>,
        lhs: TruthValue,
        rhs: TruthValue,
    },
}

impl AxiomStatus {
    pub fn holds(&self) -> bool {
        matches!(self, AxiomStatus::Holds { .. })
    }
}

impl fmt::Display for AxiomStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomStatus::Holds { assignments } => write!(f, "holds ({assignments} assignments)"),
            AxiomStatus::CounterExample {
                assignment,
                lhs,
                rhs,
            } => {
                let asg: Vec<String> = assignment.iter().map(|(x, v)| format!("{x}={v}")).collect();
                write!(f, "counterexample {}: lhs {lhs}, rhs {rhs}", asg.join(", "))
            }
        }
    }
}

/// A constant that is not in the target logic but refines into several of
/// its values (`_D` in the five-valued logic) makes the equation range over
/// each refinement.
fn refinements(v: TruthValue, arity: Arity) -> Result<Vec<TruthValue>, Error> {
    if arity.contains(v) {
        return Ok(vec![v]);
    }
    match (v, arity) {
        (TruthValue::BotD, Arity::Five) => Ok(vec![TruthValue::BotIL, TruthValue::BotO]),
        _ => Err(Error::ValueOutsideArity {
            value: v.to_string(),
            arity: arity.as_u8(),
        }),
    }
}

/// Checks every assignment of the metavariables, in enumeration order, and
/// reports the first one on which the two sides differ.
pub fn check_equation(
    e: &Equation,
    arity: Arity,
    style: Style,
    fuel: usize,
) -> Result<AxiomStatus, Error> {
    let mut consts: Vec<TruthValue> = e.lhs.consts();
    consts.extend(e.rhs.consts());
    consts.sort();
    consts.dedup();
    let mut instances: Vec<Vec<(TruthValue, TruthValue)>> = vec![Vec::new()];
    for c in consts {
        let options = refinements(c, arity)?;
        instances = instances
            .into_iter()
            .flat_map(|inst| {
                options.iter().map(move |&o| {
                    let mut i = inst.clone();
                    i.push((c, o));
                    i
                })
            })
            .collect();
    }
    let vars = e.vars();
    let env = RecEnv::new();
    let mut checked = 0;
    for values in tuples(arity.values(), vars.len()) {
        let asg: Assignment = vars.iter().cloned().zip(values.iter().copied()).collect();
        for inst in &instances {
            let map = |v: TruthValue| inst.iter().find(|(c, _)| *c == v).map_or(v, |(_, o)| *o);
            let read = |p: &Prop| -> Result<TruthValue, Error> {
                match eval_prop(&p.map_consts(&map), &env, &asg, arity, style, fuel)? {
                    Decoded::Value(v) => Ok(v),
                    Decoded::Unknown(r) => {
                        let shown: Vec<String> =
                            asg.iter().map(|(x, v)| format!("{x}={v}")).collect();
                        Err(Error::Undecided(format!(
                            "axiom {} at {}: {r}",
                            e.name,
                            shown.join(", ")
                        )))
                    }
                }
            };
            let lhs = read(&e.lhs)?;
            let rhs = read(&e.rhs)?;
            checked += 1;
            if lhs != rhs {
                return Ok(AxiomStatus::CounterExample {
                    assignment: vars.iter().cloned().zip(values).collect(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(AxiomStatus::Holds {
        assignments: checked,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub name: String,
    pub equation: String,
    pub arity: Arity,
    pub expected: Expectation,
    pub status: AxiomStatus,
}

impl AxiomResult {
    pub fn as_expected(&self) -> bool {
        self.status.holds() == (self.expected == Expectation::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub title: String,
    pub style: Style,
    pub results: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::as_expected)
    }

    pub fn holding(&self) -> usize {
        self.results.iter().filter(|r| r.status.holds()).count()
    }

    pub fn find(&self, name: &str, arity: Arity) -> Option<&AxiomResult> {
        self.results
            .iter()
            .find(|r| r.name == name && r.arity == arity)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} [{} style]\n", self.title, self.style);
        for r in &self.results {
            out.push_str(&format!(
                "  {:<6} arity {}  {:<48} {}{}\n",
                r.name,
                r.arity,
                r.equation,
                r.status,
                if r.as_expected() { "" } else { "   UNEXPECTED" }
            ));
        }
        out.push_str(&format!(
            "  {} of {} hold; {}\n",
            self.holding(),
            self.results.len(),
            if self.passed() {
                "all as expected"
            } else {
                "NOT as expected"
            }
        ));
        out
    }
}

pub const GUZMAN_SQUIER: &[(&str, &str)] = &[
    ("(1)", "~T = F"),
    ("(2)", "~_|_ = _|_"),
    ("(3)", "~~x = x"),
    ("(4)", r"~(x /\ y) = ~x \/ ~y"),
    ("(5)", r"x -> y = ~x \/ y"),
    ("(6)", r"x /\ (y /\ z) = (x /\ y) /\ z"),
    ("(7)", r"T /\ x = x"),
    ("(8)", r"x \/ (x /\ y) = x"),
    ("(9)", r"x /\ (y \/ z) = (x /\ y) \/ (x /\ z)"),
    ("(10)", r"(x \/ y) /\ z = (x /\ z) \/ (~x /\ y /\ z)"),
    ("(11)", r"(x /\ y) \/ (y /\ x) = (y /\ x) \/ (x /\ y)"),
];

/// `_HA` is the meaningless value m, `_D` the divergent value d. `(9)` is
/// the form with a repeated last disjunct; `(9')` has the disjuncts of the
/// three-valued axiom (10).
pub const BERGSTRA_VAN_DE_POL: &[(&str, &str)] = &[
    ("(1)", "~_D = _D"),
    ("(2)", "~_HA = _HA"),
    ("(3)", "~T = F"),
    ("(4)", "~~x = x"),
    ("(5)", r"T /\ x = x"),
    ("(6)", r"F /\ x = F"),
    ("(7)", r"x \/ y = ~(~x /\ ~y)"),
    ("(8)", r"x /\ (y /\ z) = (x /\ y) /\ z"),
    (
        "(9)",
        r"(x \/ y) /\ z = (~x /\ y /\ z) \/ (x /\ z) \/ (x /\ z)",
    ),
    ("(9')", r"(x \/ y) /\ z = (x /\ z) \/ (~x /\ y /\ z)"),
];

fn run(
    title: &str,
    style: Style,
    fuel: usize,
    items: &[(&str, &str, Arity, Expectation)],
) -> Result<CheckReport, Error> {
    let mut results = Vec::new();
    for &(name, src, arity, expected) in items {
        let eq = Equation::parse(name, src)?;
        let status = check_equation(&eq, arity, style, fuel)?;
        results.push(AxiomResult {
            name: name.to_string(),
            equation: eq.to_string(),
            arity,
            expected,
            status,
        });
    }
    Ok(CheckReport {
        title: title.to_string(),
        style,
        results,
    })
}

/// The eleven three-valued axioms, at arity 3.
pub fn guzman_squier_suite(style: Style, fuel: usize) -> Result<CheckReport, Error> {
    let items: Vec<_> = GUZMAN_SQUIER
        .iter()
        .map(|&(n, s)| (n, s, Arity::Three, Expectation::Holds))
        .collect();
    run("Guzman-Squier axioms, three-valued", style, fuel, &items)
}

/// The four-valued axioms at arity 4 and 5 (with `_D` ranging over both
/// divergent values at arity 5), plus three-valued axiom (11), which must
/// fail at arity 4.
pub fn bergstra_vdpol_suite(style: Style, fuel: usize) -> Result<CheckReport, Error> {
    let mut items = Vec::new();
    for arity in [Arity::Four, Arity::Five] {
        for &(n, s) in BERGSTRA_VAN_DE_POL {
            items.push((n, s, arity, Expectation::Holds));
        }
    }
    let (n, s) = GUZMAN_SQUIER[10];
    let gs11 = format!("GS{n}");
    items.push((gs11.as_str(), s, Arity::Four, Expectation::Fails));
    run(
        "Bergstra-Van de Pol axioms, four- and five-valued",
        style,
        fuel,
        &items,
    )
}
