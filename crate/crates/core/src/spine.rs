//! Weak-head reduction on an explicit spine, with detection of the two ways
//! it can fail to reach a weak head normal form with a finite certificate:
//!
//! * a subterm `R` of the spine (the head applied to its innermost `s`
//!   arguments) recurs at the same spine level after its own root was
//!   contracted in between: `R` is root-active;
//! * such a generator recurs at a strictly higher level, so `R ↠ R D1 … Dr`
//!   while the arguments below it were never consumed: the left spine grows
//!   forever.
//!
//! Candidate recurrences are found by fingerprint and then confirmed by
//! replaying the generator on its own, so a hash collision can never produce
//! a verdict.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::term::{apps, fingerprint, substitute, BotTag, Name, Term};

#[derive(Clone, Debug)]
pub(crate) struct Spine {
    head: Term,
    /// Arguments, outermost first; the last entry is consumed next.
    stack: Vec<(Term, u128)>,
}

pub(crate) enum Popped {
    /// The head is not a λ applied to something.
    Stuck,
    /// One β-step done; the stack height right after the pop.
    Contracted(usize),
}

impl Spine {
    pub(crate) fn new(t: &Term) -> Self {
        let mut s = Spine {
            head: t.clone(),
            stack: Vec::new(),
        };
        s.settle();
        s
    }

    fn settle(&mut self) {
        loop {
            match &self.head {
                Term::App(f, a) => {
                    let (f, a) = ((**f).clone(), (**a).clone());
                    let id = fingerprint(&a);
                    self.stack.push((a, id));
                    self.head = f;
                }
                Term::Ref(d) => self.head = d.body().clone(),
                _ => break,
            }
        }
    }

    pub(crate) fn height(&self) -> usize {
        self.stack.len()
    }

    pub(crate) fn head(&self) -> &Term {
        &self.head
    }

    pub(crate) fn step(&mut self) -> Popped {
        let Term::Lam(x, body) = &self.head else {
            return Popped::Stuck;
        };
        let Some((arg, _)) = self.stack.pop() else {
            return Popped::Stuck;
        };
        let height = self.stack.len();
        self.head = substitute(body, x, &arg);
        self.settle();
        Popped::Contracted(height)
    }

    /// The head applied to the stack entries at levels `from..`.
    pub(crate) fn term_from(&self, from: usize) -> Term {
        apps(
            self.head.clone(),
            self.stack[from..].iter().rev().map(|(t, _)| t.clone()),
        )
    }

    pub(crate) fn term(&self) -> Term {
        self.term_from(0)
    }

    /// Stack entries at levels `range`, in application order.
    pub(crate) fn args(&self, range: std::ops::Range<usize>) -> Vec<Term> {
        self.stack[range]
            .iter()
            .rev()
            .map(|(t, _)| t.clone())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub(crate) enum SpineEnd {
    /// The whole term is an abstraction.
    Abstraction(Term),
    VarHead {
        head: Name,
        args: Vec<Term>,
    },
    ConstHead {
        tag: BotTag,
        args: Vec<Term>,
    },
    /// `redex` is root-active; `outer` are the untouched arguments around it.
    RootActive {
        redex: Term,
        outer: Vec<Term>,
        loop_length: usize,
        state: Term,
    },
    /// `generator ↠ generator growth…`, below the untouched `outer` args.
    GrowingSpine {
        generator: Term,
        growth: Vec<Term>,
        outer: Vec<Term>,
        loop_length: usize,
        state: Term,
    },
    OutOfFuel(Term),
}

#[derive(Clone, Debug)]
pub(crate) struct SpineRun {
    pub end: SpineEnd,
    pub steps: usize,
}

struct Seen {
    step: usize,
    level: usize,
    epoch: u64,
}

fn chain(prev: u128, next: u128) -> u128 {
    let mut lo = std::collections::hash_map::DefaultHasher::new();
    let mut hi = std::collections::hash_map::DefaultHasher::new();
    0x5Au8.hash(&mut hi);
    (prev, next).hash(&mut lo);
    (prev, next).hash(&mut hi);
    ((hi.finish() as u128) << 64) | lo.finish() as u128
}

/// Runs weak-head reduction from `t` for at most `fuel` β-steps.
pub(crate) fn run(t: &Term, fuel: usize) -> SpineRun {
    let mut m = Spine::new(t);
    let mut steps = 0usize;
    let mut seen: HashMap<u128, Vec<Seen>> = HashMap::new();
    // Entries recorded at level L stay valid while the stack never drops
    // below L; `epochs[L]` changes whenever that happens.
    let mut epochs: Vec<u64> = vec![0];
    let mut next_epoch = 1u64;
    // Step index of the most recent pop down to exactly level L.
    let mut last_pop: Vec<Option<usize>> = vec![None];

    loop {
        let k = m.height();
        match m.head() {
            Term::Lam(..) if k > 0 => {}
            Term::Lam(..) => {
                return SpineRun {
                    end: SpineEnd::Abstraction(m.head().clone()),
                    steps,
                }
            }
            Term::Var(x) => {
                return SpineRun {
                    end: SpineEnd::VarHead {
                        head: x.clone(),
                        args: m.args(0..k),
                    },
                    steps,
                }
            }
            Term::Const(tag) => {
                return SpineRun {
                    end: SpineEnd::ConstHead {
                        tag: *tag,
                        args: m.args(0..k),
                    },
                    steps,
                }
            }
            Term::App(..) | Term::Ref(_) => unreachable!("spine is settled"),
        }

        if epochs.len() <= k {
            epochs.resize(k + 1, 0);
            last_pop.resize(k + 1, None);
        }

        let mut key = fingerprint(m.head());
        let mut keys = Vec::with_capacity(k);
        for s in 1..=k {
            key = chain(key, m.stack[k - s].1);
            let level = k - s;
            keys.push((key, level));
            let Some(cands) = seen.get(&key) else {
                continue;
            };
            for cand in cands.iter().rev() {
                if cand.level > level || epochs[cand.level] != cand.epoch {
                    continue;
                }
                let loop_length = steps - cand.step;
                let generator = m.term_from(level);
                if cand.level == level {
                    let rooted = last_pop[level].is_some_and(|p| p > cand.step);
                    if rooted && replay(&generator, loop_length, 0).is_some() {
                        return SpineRun {
                            end: SpineEnd::RootActive {
                                redex: generator,
                                outer: m.args(0..level),
                                loop_length,
                                state: m.term(),
                            },
                            steps,
                        };
                    }
                } else {
                    let r = level - cand.level;
                    if let Some(growth) = replay(&generator, loop_length, r) {
                        return SpineRun {
                            end: SpineEnd::GrowingSpine {
                                generator,
                                growth,
                                outer: m.args(0..cand.level),
                                loop_length,
                                state: m.term(),
                            },
                            steps,
                        };
                    }
                }
            }
        }
        for (key, level) in keys {
            seen.entry(key).or_default().push(Seen {
                step: steps,
                level,
                epoch: epochs[level],
            });
        }

        if steps >= fuel {
            return SpineRun {
                end: SpineEnd::OutOfFuel(m.term()),
                steps,
            };
        }
        match m.step() {
            Popped::Contracted(h) => {
                steps += 1;
                last_pop[h] = Some(steps);
                for e in epochs.iter_mut().skip(h + 1) {
                    *e = next_epoch;
                    next_epoch += 1;
                }
            }
            Popped::Stuck => unreachable!("head is a λ with a non-empty stack"),
        }
    }
}

/// Runs `generator` alone for exactly `loop_length` steps and checks that
/// it came back as `generator D1 … D_growth` (α-equivalent). With
/// `growth == 0` the root of the generator must also have been contracted
/// along the way. Returns the `D`s in application order.
pub(crate) fn replay(generator: &Term, loop_length: usize, growth: usize) -> Option<Vec<Term>> {
    if loop_length == 0 {
        return None;
    }
    let mut m = Spine::new(generator);
    let mut rooted = false;
    for _ in 0..loop_length {
        match m.step() {
            Popped::Contracted(0) => rooted = true,
            Popped::Contracted(_) => {}
            Popped::Stuck => return None,
        }
    }
    if m.height() < growth {
        return None;
    }
    if growth == 0 && !rooted {
        return None;
    }
    let back = m.term_from(growth);
    if !crate::term::alpha_eq(&back, generator) {
        return None;
    }
    Some(m.args(0..growth))
}
