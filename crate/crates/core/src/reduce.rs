//! β-reduction: single steps, the normal-order, head and weak-head
//! strategies, fuel-bounded normalization with cycle detection, and traces.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::spine::{self, SpineEnd};
use crate::term::{alpha_eq, fingerprint, substitute, Path, Step, Term};

pub const DEFAULT_FUEL: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ReduceOutcome {
    NormalForm {
        term: Term,
        steps: usize,
    },
    FuelExhausted {
        last: Term,
        steps: usize,
    },
    /// `witness` recurs every `loop_length` steps of the strategy.
    CycleDetected {
        witness: Term,
        loop_length: usize,
        steps: usize,
    },
}

impl ReduceOutcome {
    pub fn steps(&self) -> usize {
        match self {
            ReduceOutcome::NormalForm { steps, .. }
            | ReduceOutcome::FuelExhausted { steps, .. }
            | ReduceOutcome::CycleDetected { steps, .. } => *steps,
        }
    }

    pub fn normal_form(&self) -> Option<&Term> {
        match self {
            ReduceOutcome::NormalForm { term, .. } => Some(term),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub term: Term,
    /// Position of the redex contracted to get the next entry; `None` on
    /// the last entry.
    pub redex: Option<Path>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub entries: Vec<TraceEntry>,
}

/// Contracts the redex at `pos`.
pub fn beta_step_at(t: &Term, pos: &[Step]) -> Result<Term, Error> {
    let not_redex = || Error::NotARedex(render_path(pos));
    t.replace_at(pos, &mut |sub| contract(sub))
        .ok_or_else(not_redex)
}

fn contract(t: &Term) -> Option<Term> {
    match t.unfold() {
        Term::App(f, a) => match f.unfold() {
            Term::Lam(x, body) => Some(substitute(body, x, a)),
            _ => None,
        },
        _ => None,
    }
}

pub fn is_redex(t: &Term) -> bool {
    matches!(t.unfold(), Term::App(f, _) if f.is_lam())
}

/// Path of the leftmost-outermost redex.
pub fn normal_order_redex(t: &Term) -> Option<Path> {
    fn go(t: &Term, path: &mut Path) -> bool {
        match t.unfold() {
            Term::App(f, a) => {
                if f.is_lam() {
                    return true;
                }
                path.push(Step::Fun);
                if go(f, path) {
                    return true;
                }
                path.pop();
                path.push(Step::Arg);
                if go(a, path) {
                    return true;
                }
                path.pop();
                false
            }
            Term::Lam(_, b) => {
                path.push(Step::Body);
                if go(b, path) {
                    return true;
                }
                path.pop();
                false
            }
            _ => false,
        }
    }
    let mut path = Vec::new();
    go(t, &mut path).then_some(path)
}

/// Path of the head redex of `λx1…xn.(λx.P) Q M1…Mm`, if any.
pub fn head_redex(t: &Term) -> Option<Path> {
    let mut path = Vec::new();
    let mut t = t.unfold();
    while let Term::Lam(_, b) = t {
        path.push(Step::Body);
        t = b.unfold();
    }
    let mut tail = weak_head_redex(t)?;
    path.append(&mut tail);
    Some(path)
}

/// Path of the redex at the bottom of the left spine, not under λ.
pub fn weak_head_redex(t: &Term) -> Option<Path> {
    let mut path = Vec::new();
    let mut t = t.unfold();
    while let Term::App(f, _) = t {
        if f.is_lam() {
            return Some(path);
        }
        path.push(Step::Fun);
        t = f.unfold();
    }
    None
}

pub fn head_step(t: &Term) -> Option<Term> {
    let path = head_redex(t)?;
    beta_step_at(t, &path).ok()
}

pub fn whnf_step(t: &Term) -> Option<Term> {
    let path = weak_head_redex(t)?;
    beta_step_at(t, &path).ok()
}

pub fn normal_order_step(t: &Term) -> Option<(Term, Path)> {
    let path = normal_order_redex(t)?;
    let next = beta_step_at(t, &path).ok()?;
    Some((next, path))
}

/// Leftmost-outermost reduction for at most `fuel` steps.
pub fn normalize(t: &Term, fuel: usize) -> ReduceOutcome {
    run_normal_order(t, fuel, None)
}

pub fn normalize_traced(t: &Term, fuel: usize) -> (ReduceOutcome, Trace) {
    let mut trace = Trace::default();
    let outcome = run_normal_order(t, fuel, Some(&mut trace));
    (outcome, trace)
}

fn run_normal_order(t: &Term, fuel: usize, mut trace: Option<&mut Trace>) -> ReduceOutcome {
    let mut current = t.clone();
    let mut seen: HashMap<u128, usize> = HashMap::new();
    let mut steps = 0;
    loop {
        let fp = fingerprint(&current);
        if let Some(&earlier) = seen.get(&fp) {
            let loop_length = steps - earlier;
            if returns_to_itself(&current, loop_length) {
                if let Some(tr) = trace.as_deref_mut() {
                    tr.entries.push(TraceEntry {
                        term: current.clone(),
                        redex: None,
                    });
                }
                return ReduceOutcome::CycleDetected {
                    witness: current,
                    loop_length,
                    steps,
                };
            }
        }
        seen.insert(fp, steps);

        let Some(path) = normal_order_redex(&current) else {
            if let Some(tr) = trace.as_deref_mut() {
                tr.entries.push(TraceEntry {
                    term: current.clone(),
                    redex: None,
                });
            }
            return ReduceOutcome::NormalForm {
                term: current.expand(),
                steps,
            };
        };
        if steps >= fuel {
            if let Some(tr) = trace.as_deref_mut() {
                tr.entries.push(TraceEntry {
                    term: current.clone(),
                    redex: None,
                });
            }
            return ReduceOutcome::FuelExhausted {
                last: current,
                steps,
            };
        }
        let next = beta_step_at(&current, &path).expect("normal-order redex exists");
        if let Some(tr) = trace.as_deref_mut() {
            tr.entries.push(TraceEntry {
                term: current,
                redex: Some(path),
            });
        }
        current = next;
        steps += 1;
    }
}

/// Whether `loop_length` normal-order steps from `t` lead back to `t`.
pub fn returns_to_itself(t: &Term, loop_length: usize) -> bool {
    if loop_length == 0 {
        return false;
    }
    let mut cur = t.clone();
    for _ in 0..loop_length {
        match normal_order_step(&cur) {
            Some((next, _)) => cur = next,
            None => return false,
        }
    }
    alpha_eq(&cur, t)
}

/// Weak-head reduction: only the redex at the bottom of the left spine is
/// contracted, until the term is an abstraction or has a variable (or ⊥)
/// at its head. A recurring spine generator, whether the spine grows or
/// not, is reported as a cycle.
pub fn whnf_search(t: &Term, fuel: usize) -> ReduceOutcome {
    let run = spine::run(t, fuel);
    let steps = run.steps;
    match run.end {
        SpineEnd::Abstraction(term) => ReduceOutcome::NormalForm { term, steps },
        SpineEnd::VarHead { head, args } => ReduceOutcome::NormalForm {
            term: crate::term::apps(Term::Var(head), args),
            steps,
        },
        SpineEnd::ConstHead { tag, args } => ReduceOutcome::NormalForm {
            term: crate::term::apps(Term::Const(tag), args),
            steps,
        },
        SpineEnd::RootActive {
            redex, loop_length, ..
        } => ReduceOutcome::CycleDetected {
            witness: redex,
            loop_length,
            steps,
        },
        SpineEnd::GrowingSpine {
            generator,
            loop_length,
            ..
        } => ReduceOutcome::CycleDetected {
            witness: generator,
            loop_length,
            steps,
        },
        SpineEnd::OutOfFuel(last) => ReduceOutcome::FuelExhausted { last, steps },
    }
}

pub fn render_path(path: &[Step]) -> String {
    if path.is_empty() {
        return "root".into();
    }
    path.iter()
        .map(|s| match s {
            Step::Fun => "fun",
            Step::Arg => "arg",
            Step::Body => "body",
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// Prints `t` with the subterm at `mark` in square brackets. Refs on the
/// marked path are unfolded so the redex is visible.
pub fn render_marked(t: &Term, mark: Option<&[Step]>) -> String {
    let mut out = String::new();
    write_marked(t, mark, &mut out);
    out
}

fn write_marked(t: &Term, mark: Option<&[Step]>, out: &mut String) {
    match mark {
        None => {
            let _ = write!(out, "{t}");
        }
        Some([]) => {
            out.push('[');
            write_marked(t, None, out);
            out.push(']');
        }
        Some(path) => match t.unfold() {
            Term::Lam(x, b) => {
                let _ = write!(out, "\\{x}. ");
                write_marked(b, Some(&path[1..]), out);
            }
            Term::App(f, a) => {
                let (fm, am) = match path[0] {
                    Step::Fun => (Some(&path[1..]), None),
                    _ => (None, Some(&path[1..])),
                };
                let f_paren = match fm {
                    Some([]) => false,
                    None => matches!(**f, Term::Lam(..)),
                    Some(_) => matches!(f.unfold(), Term::Lam(..)),
                };
                write_group(f, fm, f_paren, out);
                out.push(' ');
                let a_paren = match am {
                    Some([]) => false,
                    None => matches!(**a, Term::Lam(..) | Term::App(..)),
                    Some(_) => true,
                };
                write_group(a, am, a_paren, out);
            }
            _ => {
                let _ = write!(out, "{t}");
            }
        },
    }
}

fn write_group(t: &Term, mark: Option<&[Step]>, paren: bool, out: &mut String) {
    if paren {
        out.push('(');
    }
    write_marked(t, mark, out);
    if paren {
        out.push(')');
    }
}

impl Trace {
    /// One term per line, contracted redex in brackets.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            let arrow = if i == 0 { "   " } else { "-> " };
            let _ = writeln!(out, "{arrow}{}", render_marked(&e.term, e.redex.as_deref()));
        }
        out
    }
}
