#![allow(dead_code)]

use proptest::prelude::*;
use seqlogic::logic::TruthValue;
use seqlogic::prop::Prop;
use seqlogic::reduce::{beta_step_at, is_redex};
use seqlogic::term::{app, free_vars, lam, occurs_free, var, Path, Step, Term};

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// Terms of exactly `n` nodes over a few reused names, so shadowing and
/// capture situations are common. Applications of abstractions are
/// favoured to get redexes. No named definitions.
pub fn sized_term(n: usize) -> BoxedStrategy<Term> {
    if n <= 1 {
        return prop::sample::select(&NAMES[..]).prop_map(var).boxed();
    }
    let abs = prop::sample::select(&NAMES[..])
        .prop_flat_map(move |x| sized_term(n - 1).prop_map(move |b| lam(x, b)));
    if n == 2 {
        return abs.boxed();
    }
    let application = (1..n - 1).prop_flat_map(move |k| {
        (sized_term(k), sized_term(n - 1 - k)).prop_map(|(f, a)| app(f, a))
    });
    if n < 4 {
        return prop_oneof![abs, application].boxed();
    }
    let redex = (prop::sample::select(&NAMES[..]), 1..n - 2).prop_flat_map(move |(x, k)| {
        (sized_term(k), sized_term(n - 2 - k)).prop_map(move |(b, a)| app(lam(x, b), a))
    });
    prop_oneof![1 => abs, 2 => application, 2 => redex].boxed()
}

pub fn term(max_size: usize) -> impl Strategy<Value = Term> {
    (1..=max_size).prop_flat_map(sized_term)
}

pub fn closed_term(max_size: usize) -> impl Strategy<Value = Term> {
    term(max_size).prop_map(|t| free_vars(&t).into_iter().fold(t, |body, x| lam(&x, body)))
}

/// Makes every abstraction use its binder by applying the body to it.
pub fn to_lambda_i(t: &Term) -> Term {
    match t {
        Term::Lam(x, b) => {
            let b = to_lambda_i(b);
            if occurs_free(x, &b) {
                Term::Lam(x.clone(), Box::new(b))
            } else {
                Term::Lam(x.clone(), Box::new(app(b, Term::Var(x.clone()))))
            }
        }
        Term::App(f, a) => app(to_lambda_i(f), to_lambda_i(a)),
        _ => t.clone(),
    }
}

/// Renames every binder to a name used nowhere else.
pub fn rename_bound(t: &Term, counter: &mut usize) -> Term {
    fn go(t: &Term, env: &[(String, String)], counter: &mut usize) -> Term {
        match t {
            Term::Var(x) => match env.iter().rev().find(|(from, _)| **from == **x) {
                Some((_, to)) => var(to),
                None => t.clone(),
            },
            Term::Lam(x, b) => {
                *counter += 1;
                let fresh = format!("r{counter}_");
                let mut env = env.to_vec();
                env.push((x.to_string(), fresh.clone()));
                lam(&fresh, go(b, &env, counter))
            }
            Term::App(f, a) => app(go(f, env, counter), go(a, env, counter)),
            _ => t.clone(),
        }
    }
    go(t, &[], counter)
}

/// Position of the rightmost innermost redex.
pub fn rightmost_innermost(t: &Term) -> Option<Path> {
    match t {
        Term::App(f, a) => {
            if let Some(mut p) = rightmost_innermost(a) {
                p.insert(0, Step::Arg);
                return Some(p);
            }
            if let Some(mut p) = rightmost_innermost(f) {
                p.insert(0, Step::Fun);
                return Some(p);
            }
            is_redex(t).then(Vec::new)
        }
        Term::Lam(_, b) => rightmost_innermost(b).map(|mut p| {
            p.insert(0, Step::Body);
            p
        }),
        Term::Ref(_) => rightmost_innermost(t.unfold()),
        _ => None,
    }
}

/// Reduces with the rightmost-innermost strategy. `None` when the step or
/// size budget runs out.
pub fn innermost_normalize(t: &Term, fuel: usize, max_size: usize) -> Option<Term> {
    let mut cur = t.expand();
    for _ in 0..fuel {
        match rightmost_innermost(&cur) {
            None => return Some(cur),
            Some(p) => cur = beta_step_at(&cur, &p).expect("redex at reported path"),
        }
        if cur.size() > max_size {
            return None;
        }
    }
    None
}

pub fn finite_prop(consts: &'static [TruthValue]) -> impl Strategy<Value = Prop> {
    let leaf = prop::sample::select(consts).prop_map(Prop::Const);
    leaf.prop_recursive(8, 64, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Prop::not),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Prop::and(p, q)),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Prop::or(p, q)),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Prop::implies(p, q)),
            (inner.clone(), inner.clone(), inner).prop_map(|(b, p, q)| Prop::ite(b, p, q)),
        ]
    })
}

pub fn prop_depth(p: &Prop) -> usize {
    match p {
        Prop::Var(_) | Prop::Const(_) | Prop::RecRef(_) => 0,
        Prop::Not(a) => 1 + prop_depth(a),
        Prop::And(a, b) | Prop::Or(a, b) | Prop::Implies(a, b) => {
            1 + prop_depth(a).max(prop_depth(b))
        }
        Prop::Ite(a, b, c) => 1 + prop_depth(a).max(prop_depth(b)).max(prop_depth(c)),
    }
}
