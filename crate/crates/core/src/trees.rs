//! Depth-bounded prefixes of Böhm, Lévy-Longo and Berarducci trees.
//!
//! The three trees differ in which terms are collapsed to ⊥: unsolvable
//! terms, terms without a weak head normal form, and root-active terms.
//! Trees are built eagerly down to the depth budget. Every node gets its
//! own `fuel`.
//!
//! Depth accounting: a Böhm node (binders, head and arguments) costs one
//! level. In the other two trees each abstraction costs one level, and a
//! head costs one more only when no binder precedes it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{head_reduce, HeadOutcome, DEFAULT_DEPTH};
use crate::spine::{self, SpineEnd};
use crate::term::{BotTag, Name, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutReason {
    Depth,
    Fuel,
    /// The classifier could not settle the node.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum HeadSym {
    Var(Name),
    Bot(BotTag),
    /// An infinite left spine, cut at the depth budget.
    Cut(CutReason),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum TreeNode {
    Head {
        binders: Vec<Name>,
        head: HeadSym,
        args: Vec<TreeNode>,
    },
    Bot {
        tag: BotTag,
    },
    /// Abstractions with no head below them (yet).
    LamStream {
        binders: Vec<Name>,
        rest: Box<TreeNode>,
    },
    Cut {
        reason: CutReason,
    },
}

impl TreeNode {
    pub fn bot() -> TreeNode {
        TreeNode::Bot {
            tag: BotTag::BotPlain,
        }
    }

    pub fn cut(reason: CutReason) -> TreeNode {
        TreeNode::Cut { reason }
    }

    /// Puts `binders` in front of `self`, merging with its own binders.
    pub fn under(self, mut binders: Vec<Name>) -> TreeNode {
        if binders.is_empty() {
            return self;
        }
        match self {
            TreeNode::Head {
                binders: inner,
                head,
                args,
            } => {
                binders.extend(inner);
                TreeNode::Head {
                    binders,
                    head,
                    args,
                }
            }
            TreeNode::LamStream {
                binders: inner,
                rest,
            } => {
                binders.extend(inner);
                TreeNode::LamStream { binders, rest }
            }
            other => TreeNode::LamStream {
                binders,
                rest: Box::new(other),
            },
        }
    }

    pub fn has_cut(&self) -> bool {
        match self {
            TreeNode::Cut { .. } => true,
            TreeNode::Bot { .. } => false,
            TreeNode::LamStream { rest, .. } => rest.has_cut(),
            TreeNode::Head { head, args, .. } => {
                matches!(head, HeadSym::Cut(_)) || args.iter().any(TreeNode::has_cut)
            }
        }
    }

    /// Splits off the leading binders.
    fn peel(&self) -> (&[Name], Body<'_>) {
        match self {
            TreeNode::Head {
                binders,
                head,
                args,
            } => (binders, Body::Head(head, args)),
            TreeNode::LamStream { binders, rest } => {
                let (inner, body) = rest.peel();
                if inner.is_empty() {
                    (binders, body)
                } else {
                    // `under` never nests streams; treat as opaque.
                    (binders, Body::Other(rest))
                }
            }
            TreeNode::Bot { .. } => (&[], Body::Bot),
            TreeNode::Cut { .. } => (&[], Body::Cut),
        }
    }
}

enum Body<'a> {
    Head(&'a HeadSym, &'a [TreeNode]),
    Bot,
    Cut,
    Other(&'a TreeNode),
}

/// `lower ⊑ upper`: `lower` can be obtained from `upper` by replacing
/// subtrees with ⊥. A Cut on either side matches anything.
pub fn approximates(lower: &TreeNode, upper: &TreeNode) -> bool {
    let (lb, lbody) = lower.peel();
    let (ub, ubody) = upper.peel();
    let common = lb.len().min(ub.len());
    if lb[..common] != ub[..common] {
        return false;
    }
    match (lbody, ubody) {
        (Body::Bot | Body::Cut, _) if lb.len() <= ub.len() => true,
        (_, Body::Cut) if ub.len() <= lb.len() => true,
        _ if lb.len() != ub.len() => false,
        (Body::Head(lh, la), Body::Head(uh, ua)) => {
            let heads = match (lh, uh) {
                (HeadSym::Cut(_), _) | (_, HeadSym::Cut(_)) => return true,
                (HeadSym::Var(x), HeadSym::Var(y)) => x == y,
                (HeadSym::Bot(_), HeadSym::Bot(_)) => true,
                _ => false,
            };
            heads && la.len() == ua.len() && la.iter().zip(ua).all(|(l, u)| approximates(l, u))
        }
        (Body::Other(l), Body::Other(u)) => approximates(l, u),
        _ => false,
    }
}

/// Böhm tree: unsolvable subterms become ⊥.
pub fn bohm_tree(t: &Term, depth: usize, fuel: usize) -> TreeNode {
    if depth == 0 {
        return TreeNode::cut(CutReason::Depth);
    }
    match head_reduce(t, fuel, DEFAULT_DEPTH) {
        HeadOutcome::Hnf {
            binders,
            head,
            args,
            ..
        } => TreeNode::Head {
            binders,
            head: HeadSym::Var(head),
            args: args.iter().map(|a| bohm_tree(a, depth - 1, fuel)).collect(),
        },
        HeadOutcome::ConstHead { .. } | HeadOutcome::Unsolvable { .. } => TreeNode::bot(),
        HeadOutcome::Unknown { reason, .. } => TreeNode::cut(match reason {
            crate::classify::UnknownReason::FuelExhausted => CutReason::Fuel,
            _ => CutReason::Undecided,
        }),
    }
}

/// Lévy-Longo tree: subterms without a weak head normal form become ⊥.
pub fn levy_longo_tree(t: &Term, depth: usize, fuel: usize) -> TreeNode {
    whnf_tree(t, depth, fuel, Mode::LevyLongo)
}

/// Berarducci tree: root-active subterms become ⊥.
pub fn berarducci_tree(t: &Term, depth: usize, fuel: usize) -> TreeNode {
    whnf_tree(t, depth, fuel, Mode::Berarducci)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    LevyLongo,
    Berarducci,
}

fn whnf_tree(t: &Term, depth: usize, fuel: usize, mode: Mode) -> TreeNode {
    let mut binders: Vec<Name> = Vec::new();
    let mut current = t.clone();
    if depth == 0 {
        return TreeNode::cut(CutReason::Depth);
    }
    loop {
        let run = spine::run(&current, fuel);
        // Levels left for the arguments of a head at this point.
        let below = depth - binders.len().max(1);
        let children = |args: &[Term]| -> Vec<TreeNode> {
            args.iter()
                .map(|a| whnf_tree(a, below, fuel, mode))
                .collect()
        };
        let node = match run.end {
            SpineEnd::Abstraction(_) if binders.len() == depth => TreeNode::cut(CutReason::Depth),
            SpineEnd::Abstraction(Term::Lam(x, body)) => {
                binders.push(x);
                current = *body;
                continue;
            }
            SpineEnd::Abstraction(_) => unreachable!("spine abstractions are λ nodes"),
            SpineEnd::VarHead { head, args } => TreeNode::Head {
                binders: Vec::new(),
                head: HeadSym::Var(head),
                args: children(&args),
            },
            SpineEnd::ConstHead { tag, args } => {
                if args.is_empty() {
                    TreeNode::Bot { tag }
                } else {
                    TreeNode::Head {
                        binders: Vec::new(),
                        head: HeadSym::Bot(tag),
                        args: children(&args),
                    }
                }
            }
            SpineEnd::RootActive { outer, .. } => match mode {
                Mode::LevyLongo => TreeNode::bot(),
                Mode::Berarducci if outer.is_empty() => TreeNode::bot(),
                Mode::Berarducci => TreeNode::Head {
                    binders: Vec::new(),
                    head: HeadSym::Bot(BotTag::BotPlain),
                    args: children(&outer),
                },
            },
            SpineEnd::GrowingSpine { growth, outer, .. } => match mode {
                Mode::LevyLongo => TreeNode::bot(),
                Mode::Berarducci => {
                    // The generator keeps pushing the same arguments; show
                    // one copy per remaining level, innermost first.
                    let copies = depth - binders.len();
                    let mut args = Vec::with_capacity(copies * growth.len() + outer.len());
                    for _ in 0..copies {
                        args.extend(growth.iter().cloned());
                    }
                    args.extend(outer);
                    TreeNode::Head {
                        binders: Vec::new(),
                        head: HeadSym::Cut(CutReason::Depth),
                        args: children(&args),
                    }
                }
            },
            SpineEnd::OutOfFuel(_) => TreeNode::cut(CutReason::Fuel),
        };
        return node.under(binders);
    }
}

impl fmt::Display for HeadSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadSym::Var(x) => write!(f, "{x}"),
            HeadSym::Bot(tag) => write!(f, "{}", tag.symbol()),
            HeadSym::Cut(_) => write!(f, "..."),
        }
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeNode::Bot { tag } => write!(f, "{}", tag.symbol()),
            TreeNode::Cut { .. } => write!(f, "..."),
            TreeNode::LamStream { binders, rest } => {
                write!(f, "\\{}. {rest}", binders.join(" "))
            }
            TreeNode::Head {
                binders,
                head,
                args,
            } => {
                if !binders.is_empty() {
                    write!(f, "\\{}. ", binders.join(" "))?;
                }
                write!(f, "{head}")?;
                for a in args {
                    let atomic = match a {
                        TreeNode::Bot { .. } | TreeNode::Cut { .. } => true,
                        TreeNode::Head { binders, args, .. } => {
                            binders.is_empty() && args.is_empty()
                        }
                        TreeNode::LamStream { .. } => false,
                    };
                    if atomic {
                        write!(f, " {a}")?;
                    } else {
                        write!(f, " ({a})")?;
                    }
                }
                Ok(())
            }
        }
    }
}
