//! The λI restriction: validation, βbot normalization and the λI booleans.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{head_reduce, HeadOutcome, UnknownReason, DEFAULT_DEPTH};
use crate::error::Error;
use crate::logic::{
    compare_golden, encode_value, ite, truth_table, Arity, Connective, GoldenComparison, Style,
    TruthTable,
};
use crate::reduce::{normalize, render_path};
use crate::term::{
    alpha_eq, app, apps, fingerprint, free_vars, occurs_free, var, BotTag, Name, Path, Step, Term,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaIViolation {
    /// Position of the abstraction in the fully expanded term.
    pub path: Path,
    pub binder: Name,
}

impl fmt::Display for LambdaIViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "\\{} at {} does not use its binder",
            self.binder,
            render_path(&self.path)
        )
    }
}

/// Every abstraction whose binder is not free in its body, outermost
/// first. Named definitions are looked through.
pub fn validate_lambda_i(t: &Term) -> Vec<LambdaIViolation> {
    fn go(t: &Term, path: &mut Path, out: &mut Vec<LambdaIViolation>) {
        match t {
            Term::Var(_) | Term::Const(_) => {}
            Term::Ref(_) => go(t.unfold(), path, out),
            Term::Lam(x, body) => {
                if !occurs_free(x, body) {
                    out.push(LambdaIViolation {
                        path: path.clone(),
                        binder: x.clone(),
                    });
                }
                path.push(Step::Body);
                go(body, path, out);
                path.pop();
            }
            Term::App(f, a) => {
                path.push(Step::Fun);
                go(f, path, out);
                path.pop();
                path.push(Step::Arg);
                go(a, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

pub fn is_lambda_i(t: &Term) -> bool {
    validate_lambda_i(t).is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BotNormal {
    /// Either `_|_` or a normal form without any ⊥ in it.
    Normal(Term),
    Unknown(UnknownReason),
}

impl BotNormal {
    pub fn is_bot(&self) -> bool {
        matches!(self, BotNormal::Normal(Term::Const(BotTag::BotPlain)))
    }
}

impl fmt::Display for BotNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BotNormal::Normal(t) => write!(f, "{t}"),
            BotNormal::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}

/// Normalizes with the extra rule that a term without a finite normal form
/// becomes `_|_`.
///
/// No finite normal form is certified when a subterm is proved unsolvable,
/// has a ⊥ head, or reappears below itself in the Böhm tree. A ⊥ anywhere
/// in the result collapses the whole term, since a term with a ⊥ inside has
/// no finite normal form either. `fuel` bounds each head reduction and the
/// tree is explored to at most [`DEFAULT_DEPTH`] levels.
pub fn bot_normalize(t: &Term, fuel: usize) -> BotNormal {
    enum Out {
        Bot,
        Term(Term),
        Unknown(UnknownReason),
    }
    fn go(t: &Term, fuel: usize, ancestors: &mut Vec<(u128, Term)>) -> Out {
        let fp = fingerprint(t);
        if ancestors.iter().any(|(f, a)| *f == fp && alpha_eq(a, t)) {
            return Out::Bot;
        }
        if ancestors.len() >= DEFAULT_DEPTH {
            return Out::Unknown(UnknownReason::DepthExhausted);
        }
        match head_reduce(t, fuel, DEFAULT_DEPTH) {
            HeadOutcome::Unsolvable { .. } | HeadOutcome::ConstHead { .. } => Out::Bot,
            HeadOutcome::Unknown { reason, .. } => Out::Unknown(reason),
            HeadOutcome::Hnf {
                binders,
                head,
                args,
                ..
            } => {
                ancestors.push((fp, t.clone()));
                let mut done = Vec::with_capacity(args.len());
                let mut unknown = None;
                for a in &args {
                    match go(a, fuel, ancestors) {
                        Out::Bot => {
                            ancestors.pop();
                            return Out::Bot;
                        }
                        Out::Term(n) => done.push(n),
                        // Keep looking: a later ⊥ still settles the answer.
                        Out::Unknown(r) => {
                            unknown.get_or_insert(r);
                        }
                    }
                }
                ancestors.pop();
                if let Some(r) = unknown {
                    return Out::Unknown(r);
                }
                let body = apps(var(&head), done);
                Out::Term(
                    binders
                        .into_iter()
                        .rev()
                        .fold(body, |b, x| Term::Lam(x, Box::new(b))),
                )
            }
        }
    }
    match go(t, fuel, &mut Vec::new()) {
        Out::Bot => BotNormal::Normal(Term::Const(BotTag::BotPlain)),
        Out::Term(n) => BotNormal::Normal(n),
        Out::Unknown(r) => BotNormal::Unknown(r),
    }
}

/// [`bot_normalize`] restricted to λI-terms, where having no finite normal
/// form and being unsolvable coincide.
pub fn bot_normalize_i(t: &Term, fuel: usize) -> Result<BotNormal, Error> {
    let violations = validate_lambda_i(t);
    if let Some(v) = violations.first() {
        return Err(Error::NotLambdaI(v.to_string()));
    }
    Ok(bot_normalize(t, fuel))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IteICheck {
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IteIReport {
    pub checks: Vec<IteICheck>,
}

impl IteIReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<32} {}\n",
                c.claim,
                if c.holds { "ok" } else { "FAILS" }
            ));
        }
        out
    }
}

fn reduces_to(t: &Term, expected: &Term, fuel: usize) -> bool {
    normalize(t, fuel)
        .normal_form()
        .is_some_and(|n| alpha_eq(n, expected))
}

/// The λI conditional: `T_I M N` reduces to `N I I M` and `F_I M N` to
/// `M I I I N` for arbitrary `M`, `N`, and for boolean `M`, `N` both of those
/// collapse to the selected branch.
pub fn check_lambda_i_ite(fuel: usize) -> IteIReport {
    let (ti, fi) = (Style::LambdaI.truth(), Style::LambdaI.falsity());
    let i = crate::term::DefEnv::standard()
        .reference("I")
        .expect("standard library entry");
    let (m, n) = (var("m"), var("n"));
    let mut checks = vec![
        IteICheck {
            claim: "TI m n ->> n I I m".into(),
            holds: reduces_to(
                &ite(ti.clone(), m.clone(), n.clone()),
                &apps(n.clone(), [i.clone(), i.clone(), m.clone()]),
                fuel,
            ),
        },
        IteICheck {
            claim: "FI m n ->> m I I I n".into(),
            holds: reduces_to(
                &ite(fi.clone(), m.clone(), n.clone()),
                &apps(m, [i.clone(), i.clone(), i.clone(), n]),
                fuel,
            ),
        },
    ];
    let named = [("TI", ti.clone()), ("FI", fi.clone())];
    for (mn, mt) in &named {
        for (nn, nt) in &named {
            checks.push(IteICheck {
                claim: format!("{nn} I I {mn} ->> {mn}"),
                holds: reduces_to(
                    &apps(nt.clone(), [i.clone(), i.clone(), mt.clone()]),
                    mt,
                    fuel,
                ),
            });
            checks.push(IteICheck {
                claim: format!("{mn} I I I {nn} ->> {nn}"),
                holds: reduces_to(
                    &app(
                        apps(mt.clone(), [i.clone(), i.clone(), i.clone()]),
                        nt.clone(),
                    ),
                    nt,
                    fuel,
                ),
            });
            checks.push(IteICheck {
                claim: format!("TI {mn} {nn} ->> {mn}"),
                holds: reduces_to(&ite(ti.clone(), mt.clone(), nt.clone()), mt, fuel),
            });
            checks.push(IteICheck {
                claim: format!("FI {mn} {nn} ->> {nn}"),
                holds: reduces_to(&ite(fi.clone(), mt.clone(), nt.clone()), nt, fuel),
            });
        }
    }
    IteIReport { checks }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaITable {
    pub table: TruthTable,
    /// Against the published left-sequential table of the same arity.
    pub golden: Option<GoldenComparison>,
}

/// A truth table over λI encodings. Every encoded value and the connective
/// itself are checked to be λI-terms first.
pub fn truth_table_i(c: Connective, arity: Arity, fuel: usize) -> Result<LambdaITable, Error> {
    for &v in arity.values() {
        let t = encode_value(v, Style::LambdaI);
        if let Some(bad) = validate_lambda_i(&t).first() {
            return Err(Error::NotLambdaI(format!("encoding of {v}: {bad}")));
        }
    }
    let operands: Vec<Term> = ["p", "q"][..c.operands()].iter().map(|x| var(x)).collect();
    let skeleton = c.build(&operands, Style::LambdaI);
    debug_assert!(free_vars(&skeleton).len() == c.operands());
    if let Some(bad) = validate_lambda_i(&skeleton).first() {
        return Err(Error::NotLambdaI(format!("{}: {bad}", c.name())));
    }
    let table = truth_table(c, arity, Style::LambdaI, fuel)?;
    let golden = compare_golden(&table);
    Ok(LambdaITable { table, golden })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::TruthValue::{self, *};
    use crate::parse::parse;
    use crate::reduce::DEFAULT_FUEL;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn validation() {
        let v = validate_lambda_i(&p(r"\x y. x"));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].path, vec![Step::Body]);
        assert_eq!(&*v[0].binder, "y");
        for ok in [
            "TI",
            "FI",
            "OMEGA",
            "THETA",
            "I",
            r"THETA (\x. x I)",
            r"\v. THETA (\x y z. x (y z)) v",
        ] {
            assert!(is_lambda_i(&p(ok)), "{ok}");
        }
        for bad in ["K", "T", "F", "THETA K"] {
            assert!(!is_lambda_i(&p(bad)), "{bad}");
        }
        // z is vacuous here.
        let v = validate_lambda_i(&p(r"\v. THETA (\x y z. x y) v"));
        assert_eq!(v.len(), 1);
        assert_eq!(&*v[0].binder, "z");
    }

    #[test]
    fn bot_normal_forms() {
        let bot = Term::Const(BotTag::BotPlain);
        let nf = |s: &str| bot_normalize(&p(s), DEFAULT_FUEL);
        assert_eq!(nf("OMEGA"), BotNormal::Normal(bot.clone()));
        assert_eq!(
            nf(r"\v. THETA (\x y z. x y) v"),
            BotNormal::Normal(bot.clone())
        );
        assert_eq!(
            nf(r"\v. THETA (\x y z. x (y z)) v"),
            BotNormal::Normal(bot.clone())
        );
        assert_eq!(nf(r"x OMEGA"), BotNormal::Normal(bot.clone()));
        // An infinite but nowhere-⊥ Böhm tree still has no finite normal form.
        assert_eq!(nf("THETA x"), BotNormal::Normal(bot.clone()));
        match nf("TI TI FI") {
            BotNormal::Normal(t) => assert!(alpha_eq(&t, &p("TI"))),
            other => panic!("{other}"),
        }
        match nf(r"(\x. x x) (\y. y) z") {
            BotNormal::Normal(t) => assert!(alpha_eq(&t, &p("z"))),
            other => panic!("{other}"),
        }
        assert!(matches!(
            bot_normalize_i(&p("K"), DEFAULT_FUEL),
            Err(Error::NotLambdaI(_))
        ));
        assert!(bot_normalize_i(&p("OMEGA"), DEFAULT_FUEL).unwrap().is_bot());
    }

    #[test]
    fn conditional() {
        let r = check_lambda_i_ite(DEFAULT_FUEL);
        assert_eq!(r.checks.len(), 18);
        assert!(r.all_hold(), "{}", r.render());
    }

    // Without erasure every ⊥ operand is evaluated, so each cell with a ⊥
    // input is ⊥: the strict three-valued tables.
    fn strict(c: Connective, inputs: &[TruthValue]) -> TruthValue {
        if inputs.contains(&Bot) {
            return Bot;
        }
        let b = |v: TruthValue| v == T;
        let out = match c {
            Connective::Neg => !b(inputs[0]),
            Connective::Conj => b(inputs[0]) && b(inputs[1]),
            Connective::Disj => b(inputs[0]) || b(inputs[1]),
            Connective::Impl => !b(inputs[0]) || b(inputs[1]),
        };
        if out {
            T
        } else {
            F
        }
    }

    #[test]
    fn three_valued_tables_are_strict() {
        for c in [
            Connective::Neg,
            Connective::Conj,
            Connective::Disj,
            Connective::Impl,
        ] {
            let t = truth_table_i(c, Arity::Three, DEFAULT_FUEL).unwrap();
            for cell in &t.table.cells {
                assert_eq!(
                    cell.value,
                    strict(c, &cell.inputs),
                    "{} {:?}",
                    c.name(),
                    cell.inputs
                );
            }
        }
    }
}
