//! Bounded semi-decision of solvability, and of the class of an unsolvable
//! term:
//!
//! * HA — head reduces to `λx⃗. R N⃗` with `R` root-active;
//! * IL — the left spine grows forever;
//! * O  — reduces to an infinite stream of abstractions.
//!
//! Head reduction is run as weak-head reduction on the spine, stripping each
//! abstraction it emits. Every definite answer carries an [`Evidence`] that
//! can be replayed independently; anything else is `Unknown`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::spine::{self, SpineEnd};
use crate::term::{
    alpha_eq, fingerprint, free_vars, fresh_name, substitute, BotTag, Name, Path, Step, Term,
};

/// Default bound on the number of binders stripped during head reduction.
pub const DEFAULT_DEPTH: usize = 64;

/// β-steps allowed when checking a candidate abstraction pattern. Not
/// charged to the caller's fuel.
const PATTERN_BUDGET: usize = 2_000;
/// Binders a pattern may emit before it has to come back.
const PATTERN_STRIPS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnsolvableClass {
    HA,
    IL,
    O,
}

impl UnsolvableClass {
    pub fn bot_tag(self) -> BotTag {
        match self {
            UnsolvableClass::HA => BotTag::BotHA,
            UnsolvableClass::IL => BotTag::BotIL,
            UnsolvableClass::O => BotTag::BotO,
        }
    }
}

impl fmt::Display for UnsolvableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnsolvableClass::HA => "HA",
            UnsolvableClass::IL => "IL",
            UnsolvableClass::O => "O",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnknownReason {
    FuelExhausted,
    DepthExhausted,
    /// Head is a ⊥ constant that does not name a single class (`_|_`, `_D`).
    Opaque,
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnknownReason::FuelExhausted => "fuel exhausted",
            UnknownReason::DepthExhausted => "depth exhausted",
            UnknownReason::Opaque => "opaque ⊥ constant at the head",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvidenceKind {
    /// `witness` weak-head reduces back to itself through its own root.
    RootActive,
    /// `witness ↠ witness D1 … D_growth`.
    GrowingSpine,
    /// Head reduction from `witness` emits `growth` abstractions and comes
    /// back to `witness`.
    BinderCycle,
    /// For every `E`, `witness[hole := E]` head reduces to `growth`
    /// abstractions around `witness[hole := E']`.
    BinderPattern,
    /// The head is a class-tagged ⊥ constant.
    Constant,
}

/// Where the certificate was observed: under which stripped binders, and
/// below how many untouched spine arguments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationPath {
    pub binders: Vec<Name>,
    pub spine_args: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub witness: Term,
    pub loop_length: usize,
    pub growth: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hole: Option<Name>,
    pub path: ObservationPath,
}

impl Evidence {
    /// Re-checks the certificate from the witness alone.
    pub fn replay(&self) -> bool {
        match self.kind {
            EvidenceKind::RootActive => spine::replay(&self.witness, self.loop_length, 0).is_some(),
            EvidenceKind::GrowingSpine => {
                self.growth > 0
                    && spine::replay(&self.witness, self.loop_length, self.growth).is_some()
            }
            EvidenceKind::BinderCycle => {
                replay_binder_cycle(&self.witness, self.loop_length, self.growth)
            }
            EvidenceKind::BinderPattern => match &self.hole {
                Some(hole) => {
                    check_pattern(&self.witness, hole) == Some((self.loop_length, self.growth))
                }
                None => false,
            },
            EvidenceKind::Constant => matches!(
                self.witness.unfold(),
                Term::Const(BotTag::BotHA | BotTag::BotIL | BotTag::BotO)
            ),
        }
    }

    pub fn describe(&self) -> String {
        let what = match self.kind {
            EvidenceKind::RootActive => format!(
                "root-active redex `{}`, back to itself in {} steps",
                self.witness, self.loop_length
            ),
            EvidenceKind::GrowingSpine => format!(
                "spine generator `{}` gains {} argument(s) every {} steps",
                self.witness, self.growth, self.loop_length
            ),
            EvidenceKind::BinderCycle => format!(
                "`{}` emits {} abstraction(s) and recurs every {} steps",
                self.witness, self.growth, self.loop_length
            ),
            EvidenceKind::BinderPattern => format!(
                "pattern `{}` (hole {}) emits {} abstraction(s) and recurs every {} steps",
                self.witness,
                self.hole.as_deref().unwrap_or("?"),
                self.growth,
                self.loop_length
            ),
            EvidenceKind::Constant => format!("head constant `{}`", self.witness),
        };
        format!(
            "{what}; observed under {} binder(s) and {} spine argument(s)",
            self.path.binders.len(),
            self.path.spine_args
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Solvable {
        binders: Vec<Name>,
        head: Name,
        arg_count: usize,
        steps: usize,
    },
    Unsolvable {
        class: UnsolvableClass,
        evidence: Evidence,
        steps: usize,
    },
    Unknown {
        reason: UnknownReason,
        steps: usize,
    },
}

impl Verdict {
    pub fn class(&self) -> Option<UnsolvableClass> {
        match self {
            Verdict::Unsolvable { class, .. } => Some(*class),
            _ => None,
        }
    }

    pub fn is_definite(&self) -> bool {
        !matches!(self, Verdict::Unknown { .. })
    }

    pub fn steps(&self) -> usize {
        match self {
            Verdict::Solvable { steps, .. }
            | Verdict::Unsolvable { steps, .. }
            | Verdict::Unknown { steps, .. } => *steps,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Solvable {
                binders,
                head,
                arg_count,
                ..
            } => {
                write!(f, "Solvable(")?;
                if !binders.is_empty() {
                    write!(f, "\\{}. ", binders.join(" "))?;
                }
                write!(f, "{head}")?;
                for _ in 0..*arg_count {
                    write!(f, " _")?;
                }
                write!(f, ")")
            }
            Verdict::Unsolvable { class, .. } => write!(f, "Unsolvable({class})"),
            Verdict::Unknown { reason, .. } => write!(f, "Unknown({reason})"),
        }
    }
}

/// Result of bounded head reduction.
#[derive(Clone, Debug)]
pub(crate) enum HeadOutcome {
    Hnf {
        binders: Vec<Name>,
        head: Name,
        args: Vec<Term>,
        steps: usize,
    },
    ConstHead {
        binders: Vec<Name>,
        tag: BotTag,
        args: Vec<Term>,
        steps: usize,
    },
    Unsolvable {
        class: UnsolvableClass,
        evidence: Evidence,
        steps: usize,
    },
    Unknown {
        reason: UnknownReason,
        steps: usize,
    },
}

pub(crate) fn head_reduce(t: &Term, fuel: usize, depth: usize) -> HeadOutcome {
    let mut current = t.clone();
    let mut binders: Vec<Name> = Vec::new();
    let mut steps = 0usize;
    // State after each strip, with the step count at which it was reached.
    let mut history: Vec<(Term, usize)> = Vec::new();
    let mut index: HashMap<u128, Vec<usize>> = HashMap::new();

    loop {
        let fp = fingerprint(&current);
        if let Some(earlier) = index.get(&fp) {
            for &i in earlier {
                let (seen, at) = &history[i];
                if alpha_eq(seen, &current) {
                    return HeadOutcome::Unsolvable {
                        class: UnsolvableClass::O,
                        evidence: Evidence {
                            kind: EvidenceKind::BinderCycle,
                            witness: current,
                            loop_length: steps - at,
                            growth: binders.len() - i,
                            hole: None,
                            path: ObservationPath {
                                binders: binders[..i].to_vec(),
                                spine_args: 0,
                            },
                        },
                        steps,
                    };
                }
            }
        }
        if let Some((prev, _)) = history.last() {
            if let Some((pattern, hole, loop_length, growth)) = find_pattern(prev, &current) {
                return HeadOutcome::Unsolvable {
                    class: UnsolvableClass::O,
                    evidence: Evidence {
                        kind: EvidenceKind::BinderPattern,
                        witness: pattern,
                        loop_length,
                        growth,
                        hole: Some(hole),
                        path: ObservationPath {
                            binders: binders[..binders.len() - 1].to_vec(),
                            spine_args: 0,
                        },
                    },
                    steps,
                };
            }
        }
        index.entry(fp).or_default().push(history.len());
        history.push((current.clone(), steps));

        let run = spine::run(&current, fuel - steps);
        steps += run.steps;
        match run.end {
            SpineEnd::Abstraction(Term::Lam(x, body)) => {
                if binders.len() >= depth {
                    return HeadOutcome::Unknown {
                        reason: UnknownReason::DepthExhausted,
                        steps,
                    };
                }
                binders.push(x);
                current = *body;
            }
            SpineEnd::Abstraction(_) => unreachable!("spine abstractions are λ nodes"),
            SpineEnd::VarHead { head, args } => {
                return HeadOutcome::Hnf {
                    binders,
                    head,
                    args,
                    steps,
                }
            }
            SpineEnd::ConstHead { tag, args } => {
                return HeadOutcome::ConstHead {
                    binders,
                    tag,
                    args,
                    steps,
                }
            }
            SpineEnd::RootActive {
                redex,
                outer,
                loop_length,
                ..
            } => {
                return HeadOutcome::Unsolvable {
                    class: UnsolvableClass::HA,
                    evidence: Evidence {
                        kind: EvidenceKind::RootActive,
                        witness: redex,
                        loop_length,
                        growth: 0,
                        hole: None,
                        path: ObservationPath {
                            binders,
                            spine_args: outer.len(),
                        },
                    },
                    steps,
                }
            }
            SpineEnd::GrowingSpine {
                generator,
                growth,
                outer,
                loop_length,
                ..
            } => {
                return HeadOutcome::Unsolvable {
                    class: UnsolvableClass::IL,
                    evidence: Evidence {
                        kind: EvidenceKind::GrowingSpine,
                        witness: generator,
                        loop_length,
                        growth: growth.len(),
                        hole: None,
                        path: ObservationPath {
                            binders,
                            spine_args: outer.len(),
                        },
                    },
                    steps,
                }
            }
            SpineEnd::OutOfFuel(_) => {
                return HeadOutcome::Unknown {
                    reason: UnknownReason::FuelExhausted,
                    steps,
                }
            }
        }
    }
}

fn replay_binder_cycle(witness: &Term, loop_length: usize, growth: usize) -> bool {
    if growth == 0 {
        return false;
    }
    let mut current = witness.clone();
    let mut steps = 0;
    for _ in 0..growth {
        let run = spine::run(&current, loop_length - steps);
        steps += run.steps;
        match run.end {
            SpineEnd::Abstraction(Term::Lam(_, body)) => current = *body,
            _ => return false,
        }
    }
    steps == loop_length && alpha_eq(&current, witness)
}

/// Looks for a context `P[ξ]` with `prev = P[E]` and `next = P[E']`, and
/// checks that `P[ξ]` head reduces to abstractions around another instance
/// of `P`. Reduction is closed under substitution, so every instance of `P`
/// then reduces to an infinite stream of abstractions.
fn find_pattern(prev: &Term, next: &Term) -> Option<(Term, Name, usize, usize)> {
    let path = mismatch_root(prev, next, &mut Vec::new())?;
    if path.is_empty() {
        return None;
    }
    let mut avoid = free_vars(prev);
    avoid.extend(free_vars(next));
    let hole = fresh_name("xi", &avoid);
    let filler = prev.subterm(&path)?.clone();
    let pattern = prev.replace_at(&path, &mut |_| Some(Term::Var(hole.clone())))?;
    if !alpha_eq(&substitute(&pattern, &hole, &filler), prev) {
        return None;
    }
    let (loop_length, growth) = check_pattern(&pattern, &hole)?;
    Some((pattern, hole, loop_length, growth))
}

/// Lowest common ancestor of the positions where `a` and `b` differ.
fn mismatch_root(a: &Term, b: &Term, here: &mut Path) -> Option<Path> {
    match (a, b) {
        (Term::Ref(x), Term::Ref(y)) if std::sync::Arc::ptr_eq(x, y) => None,
        (Term::Var(x), Term::Var(y)) if x == y => None,
        (Term::Const(x), Term::Const(y)) if x == y => None,
        (Term::Lam(x, p), Term::Lam(y, q)) if x == y => {
            here.push(Step::Body);
            let r = mismatch_root(p, q, here);
            here.pop();
            r
        }
        (Term::App(f, p), Term::App(g, q)) => {
            here.push(Step::Fun);
            let left = mismatch_root(f, g, here);
            here.pop();
            here.push(Step::Arg);
            let right = mismatch_root(p, q, here);
            here.pop();
            match (left, right) {
                (Some(_), Some(_)) => Some(here.clone()),
                (l, r) => l.or(r),
            }
        }
        _ => Some(here.clone()),
    }
}

/// Runs head reduction on the pattern (bounded by fixed budgets) and
/// returns `(steps, binders emitted)` once it is back to an instance of
/// itself.
fn check_pattern(pattern: &Term, hole: &Name) -> Option<(usize, usize)> {
    let hole_path = path_to_var(pattern, hole, &mut Vec::new())?;
    let fv = free_vars(pattern);
    let mut current = pattern.clone();
    let mut steps = 0;
    for strips in 1..=PATTERN_STRIPS {
        let run = spine::run(&current, PATTERN_BUDGET - steps);
        steps += run.steps;
        let SpineEnd::Abstraction(Term::Lam(z, body)) = run.end else {
            return None;
        };
        if fv.contains(&z) {
            return None;
        }
        current = *body;
        if let Some(filler) = current.subterm(&hole_path) {
            if alpha_eq(&substitute(pattern, hole, filler), &current) {
                return Some((steps, strips));
            }
        }
    }
    None
}

fn path_to_var(t: &Term, x: &Name, here: &mut Path) -> Option<Path> {
    match t {
        Term::Var(y) if y == x => Some(here.clone()),
        Term::Lam(y, b) if y != x => {
            here.push(Step::Body);
            let r = path_to_var(b, x, here);
            here.pop();
            r
        }
        Term::App(f, a) => {
            here.push(Step::Fun);
            let r = path_to_var(f, x, here);
            here.pop();
            if r.is_some() {
                return r;
            }
            here.push(Step::Arg);
            let r = path_to_var(a, x, here);
            here.pop();
            r
        }
        _ => None,
    }
}

/// Classifies `t` using at most `fuel` β-steps and stripping at most
/// `depth` binders.
pub fn classify(t: &Term, fuel: usize, depth: usize) -> Verdict {
    match head_reduce(t, fuel, depth) {
        HeadOutcome::Hnf {
            binders,
            head,
            args,
            steps,
        } => Verdict::Solvable {
            binders,
            head,
            arg_count: args.len(),
            steps,
        },
        HeadOutcome::ConstHead {
            binders,
            tag,
            args,
            steps,
        } => {
            let class = match tag {
                BotTag::BotHA => UnsolvableClass::HA,
                BotTag::BotIL => UnsolvableClass::IL,
                BotTag::BotO => UnsolvableClass::O,
                BotTag::BotPlain | BotTag::BotD => {
                    return Verdict::Unknown {
                        reason: UnknownReason::Opaque,
                        steps,
                    }
                }
            };
            Verdict::Unsolvable {
                class,
                evidence: Evidence {
                    kind: EvidenceKind::Constant,
                    witness: Term::Const(tag),
                    loop_length: 0,
                    growth: 0,
                    hole: None,
                    path: ObservationPath {
                        binders,
                        spine_args: args.len(),
                    },
                },
                steps,
            }
        }
        HeadOutcome::Unsolvable {
            class,
            evidence,
            steps,
        } => Verdict::Unsolvable {
            class,
            evidence,
            steps,
        },
        HeadOutcome::Unknown { reason, steps } => Verdict::Unknown { reason, steps },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "root_active", rename_all = "snake_case")]
pub enum RootActivity {
    Yes {
        evidence: Evidence,
    },
    /// A root-stable reduct: an abstraction, a variable- or ⊥-headed
    /// application, or an application whose function part never becomes an
    /// abstraction.
    No {
        stable: Term,
    },
    Unknown,
}

/// Root-activity under weak-head reduction of the spine.
pub fn is_root_active(t: &Term, fuel: usize) -> RootActivity {
    let run = spine::run(t, fuel);
    match run.end {
        SpineEnd::RootActive {
            redex,
            outer,
            loop_length,
            state,
        } => {
            if outer.is_empty() {
                RootActivity::Yes {
                    evidence: Evidence {
                        kind: EvidenceKind::RootActive,
                        witness: redex,
                        loop_length,
                        growth: 0,
                        hole: None,
                        path: ObservationPath::default(),
                    },
                }
            } else {
                RootActivity::No { stable: state }
            }
        }
        SpineEnd::GrowingSpine { state, .. } => RootActivity::No { stable: state },
        SpineEnd::Abstraction(t) => RootActivity::No { stable: t },
        SpineEnd::VarHead { head, args } => RootActivity::No {
            stable: crate::term::apps(Term::Var(head), args),
        },
        SpineEnd::ConstHead { tag, args } => RootActivity::No {
            stable: crate::term::apps(Term::Const(tag), args),
        },
        SpineEnd::OutOfFuel(_) => RootActivity::Unknown,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "solvable", content = "class", rename_all = "snake_case")]
pub enum Solvability {
    Yes,
    No(UnsolvableClass),
    Unknown,
}

pub fn is_solvable(t: &Term, fuel: usize) -> Solvability {
    match classify(t, fuel, DEFAULT_DEPTH) {
        Verdict::Solvable { .. } => Solvability::Yes,
        Verdict::Unsolvable { class, .. } => Solvability::No(class),
        Verdict::Unknown { .. } => Solvability::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn class_of(src: &str) -> Option<UnsolvableClass> {
        classify(&parse(src).unwrap(), 200, DEFAULT_DEPTH).class()
    }

    #[test]
    fn zoo() {
        assert_eq!(class_of("OMEGA"), Some(UnsolvableClass::HA));
        assert_eq!(class_of("OMEGA I"), Some(UnsolvableClass::HA));
        assert_eq!(class_of("THETA K"), Some(UnsolvableClass::O));
        assert_eq!(class_of(r"THETA (\x. x y)"), Some(UnsolvableClass::IL));
        assert_eq!(class_of(r"THETA (\x. x I)"), Some(UnsolvableClass::IL));
        assert_eq!(
            class_of(r"(\p. p p F T) (\p. p p F T)"),
            Some(UnsolvableClass::IL)
        );
        for s in ["I", "K", "T", "F", "T T F"] {
            let v = classify(&parse(s).unwrap(), 200, DEFAULT_DEPTH);
            assert!(matches!(v, Verdict::Solvable { .. }), "{s}: {v}");
        }
    }

    #[test]
    fn growing_binder_pattern_is_o() {
        let t = parse(r"\v. THETA (\x y z. x (y z)) v").unwrap();
        let v = classify(&t, 500, DEFAULT_DEPTH);
        let Verdict::Unsolvable {
            class, evidence, ..
        } = v
        else {
            panic!("{v}")
        };
        assert_eq!(class, UnsolvableClass::O);
        assert_eq!(evidence.kind, EvidenceKind::BinderPattern);
        assert!(evidence.replay());
    }

    #[test]
    fn solvable_head_data() {
        let v = classify(&parse(r"\a b. (\x. b x x) a").unwrap(), 100, 8);
        assert_eq!(
            v,
            Verdict::Solvable {
                binders: vec!["a".into(), "b".into()],
                head: "b".into(),
                arg_count: 2,
                steps: 1
            }
        );
    }

    #[test]
    fn root_activity() {
        let omega = parse("OMEGA").unwrap();
        match is_root_active(&omega, 100) {
            RootActivity::Yes { evidence } => {
                assert_eq!(evidence.loop_length, 1);
                assert!(evidence.replay());
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            is_root_active(&parse("OMEGA I").unwrap(), 100),
            RootActivity::No { .. }
        ));
        assert!(matches!(
            is_root_active(&parse("I").unwrap(), 100),
            RootActivity::No { .. }
        ));
        assert_eq!(
            is_root_active(&parse(r"THETA (\x. x)").unwrap(), 0),
            RootActivity::Unknown
        );
    }

    #[test]
    fn budgets() {
        let t = parse(r"\a b c. a").unwrap();
        assert_eq!(
            classify(&t, 10, 2),
            Verdict::Unknown {
                reason: UnknownReason::DepthExhausted,
                steps: 0
            }
        );
        let v = classify(&parse("THETA K").unwrap(), 1, 64);
        assert!(matches!(
            v,
            Verdict::Unknown {
                reason: UnknownReason::FuelExhausted,
                ..
            }
        ));
        assert!(matches!(
            classify(&parse("_D I").unwrap(), 10, 8),
            Verdict::Unknown {
                reason: UnknownReason::Opaque,
                ..
            }
        ));
        assert_eq!(class_of(r"\x. _IL x"), Some(UnsolvableClass::IL));
    }

    #[test]
    fn is_solvable_cases() {
        assert_eq!(is_solvable(&parse("I").unwrap(), 100), Solvability::Yes);
        assert_eq!(
            is_solvable(&parse("OMEGA").unwrap(), 100),
            Solvability::No(UnsolvableClass::HA)
        );
        assert_eq!(
            is_solvable(&parse(r"THETA (\x. x I)").unwrap(), 100),
            Solvability::No(UnsolvableClass::IL)
        );
    }

    #[test]
    fn evidence_replays() {
        for s in [
            "OMEGA",
            "OMEGA I",
            "THETA K",
            r"THETA (\x. x I)",
            r"\z. THETA (\x. x z)",
        ] {
            let v = classify(&parse(s).unwrap(), 500, DEFAULT_DEPTH);
            let Verdict::Unsolvable { evidence, .. } = &v else {
                panic!("{s}: {v}")
            };
            assert!(evidence.replay(), "{s}");
        }
    }
}
