//! Propositions, possibly recursive, with two evaluators: compilation to a
//! λ-term that is then reduced and decoded, and a direct left-sequential
//! interpreter used as an oracle.
//!
//! ```text
//! expr    ::= 'rec' binding ('and' binding)* 'in' expr | imp
//! binding ::= NAME '=' expr
//! imp     ::= or ('->' or)*
//! or      ::= and ('\/' and)*
//! and     ::= unary ('/\' unary)*
//! unary   ::= '~' unary | atom
//! atom    ::= 'T' | 'F' | '_|_' | '_HA' | '_D' | '_IL' | '_O'
//!           | NAME | '(' expr ')' | 'if' expr 'then' expr 'else' expr
//! ```
//!
//! All binary operators associate to the left. A name bound by an enclosing
//! `rec` is a recursive reference, any other name is a propositional
//! variable. `¬ ∧ ∨ → ⊥` are accepted as well.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Verdict, DEFAULT_DEPTH};
use crate::error::Error;
use crate::logic::{
    conj, decode, disj, encode_value, implies, ite, neg, project, Arity, Decoded, Style, TruthValue,
};
use crate::reduce::normalize_traced;
use crate::term::{app, lam, DefEnv, Term};
use crate::trees::{bohm_tree, TreeNode};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prop {
    Var(String),
    Const(TruthValue),
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Implies(Box<Prop>, Box<Prop>),
    Ite(Box<Prop>, Box<Prop>, Box<Prop>),
    RecRef(String),
}

impl Prop {
    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Prop) -> Prop {
        Prop::Not(Box::new(p))
    }

    pub fn and(p: Prop, q: Prop) -> Prop {
        Prop::And(Box::new(p), Box::new(q))
    }

    pub fn or(p: Prop, q: Prop) -> Prop {
        Prop::Or(Box::new(p), Box::new(q))
    }

    pub fn implies(p: Prop, q: Prop) -> Prop {
        Prop::Implies(Box::new(p), Box::new(q))
    }

    pub fn ite(b: Prop, p: Prop, q: Prop) -> Prop {
        Prop::Ite(Box::new(b), Box::new(p), Box::new(q))
    }

    /// Applies `f` to every constant.
    pub fn map_consts(&self, f: &dyn Fn(TruthValue) -> TruthValue) -> Prop {
        let m = |p: &Prop| Box::new(p.map_consts(f));
        match self {
            Prop::Const(v) => Prop::Const(f(*v)),
            Prop::Var(_) | Prop::RecRef(_) => self.clone(),
            Prop::Not(p) => Prop::Not(m(p)),
            Prop::And(p, q) => Prop::And(m(p), m(q)),
            Prop::Or(p, q) => Prop::Or(m(p), m(q)),
            Prop::Implies(p, q) => Prop::Implies(m(p), m(q)),
            Prop::Ite(b, p, q) => Prop::Ite(m(b), m(p), m(q)),
        }
    }

    /// Free propositional variables, in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        fn go(p: &Prop, out: &mut Vec<String>) {
            match p {
                Prop::Var(x) => {
                    if !out.contains(x) {
                        out.push(x.clone())
                    }
                }
                Prop::Const(_) | Prop::RecRef(_) => {}
                Prop::Not(p) => go(p, out),
                Prop::And(p, q) | Prop::Or(p, q) | Prop::Implies(p, q) => {
                    go(p, out);
                    go(q, out)
                }
                Prop::Ite(b, p, q) => {
                    go(b, out);
                    go(p, out);
                    go(q, out)
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    pub fn consts(&self) -> Vec<TruthValue> {
        fn go(p: &Prop, out: &mut Vec<TruthValue>) {
            match p {
                Prop::Const(v) => out.push(*v),
                Prop::Var(_) | Prop::RecRef(_) => {}
                Prop::Not(p) => go(p, out),
                Prop::And(p, q) | Prop::Or(p, q) | Prop::Implies(p, q) => {
                    go(p, out);
                    go(q, out)
                }
                Prop::Ite(b, p, q) => {
                    go(b, out);
                    go(p, out);
                    go(q, out)
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    fn prec(&self) -> u8 {
        match self {
            Prop::Ite(..) => 0,
            Prop::Implies(..) => 1,
            Prop::Or(..) => 2,
            Prop::And(..) => 3,
            Prop::Not(_) => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Left operands may sit at the same level, right operands must bind
        // tighter.
        let side = |f: &mut fmt::Formatter<'_>, p: &Prop, min: u8| {
            if p.prec() < min {
                write!(f, "({p})")
            } else {
                write!(f, "{p}")
            }
        };
        match self {
            Prop::Var(x) | Prop::RecRef(x) => write!(f, "{x}"),
            Prop::Const(v) => write!(f, "{v}"),
            Prop::Not(p) => {
                write!(f, "~")?;
                side(f, p, 4)
            }
            Prop::And(p, q) | Prop::Or(p, q) | Prop::Implies(p, q) => {
                let (op, lvl) = match self {
                    Prop::And(..) => ("/\\", 3),
                    Prop::Or(..) => ("\\/", 2),
                    _ => ("->", 1),
                };
                side(f, p, lvl)?;
                write!(f, " {op} ")?;
                side(f, q, lvl + 1)
            }
            Prop::Ite(b, p, q) => write!(f, "if {b} then {p} else {q}"),
        }
    }
}

/// Recursive definitions, in order of appearance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecEnv {
    defs: Vec<(String, Prop)>,
}

impl RecEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn define(&mut self, name: &str, body: Prop) -> Result<(), Error> {
        if self.get(name).is_some() {
            return Err(Error::DuplicateRec(name.to_string()));
        }
        self.defs.push((name.to_string(), body));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Prop> {
        self.defs.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Prop)> {
        self.defs.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }
}

pub type Assignment = BTreeMap<String, TruthValue>;

/// Parses `a=T,b=_|_` style assignments.
pub fn parse_assignment(src: &str) -> Result<Assignment, Error> {
    let mut out = Assignment::new();
    for part in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("expected name=value, got `{part}`"),
        })?;
        out.insert(name.trim().to_string(), value.trim().parse()?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    Arrow,
    Open,
    Close,
    Eq,
    Value(TruthValue),
    Name(String),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let mut out = Vec::new();
    let mut rest = src;
    let mut pos = 0;
    let symbols: &[(&str, Tok)] = &[
        ("/\\", Tok::And),
        ("\\/", Tok::Or),
        ("->", Tok::Arrow),
        ("_|_", Tok::Value(TruthValue::Bot)),
        ("~", Tok::Not),
        ("¬", Tok::Not),
        ("∧", Tok::And),
        ("∨", Tok::Or),
        ("→", Tok::Arrow),
        ("⊥", Tok::Value(TruthValue::Bot)),
        ("(", Tok::Open),
        (")", Tok::Close),
        ("=", Tok::Eq),
    ];
    'outer: while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            pos += c.len_utf8();
            rest = &rest[c.len_utf8()..];
            continue;
        }
        for (s, tok) in symbols {
            if let Some(r) = rest.strip_prefix(s) {
                out.push((pos, tok.clone()));
                pos += s.len();
                rest = r;
                continue 'outer;
            }
        }
        if c.is_alphanumeric() || c == '_' || c == '\'' {
            let len = rest
                .find(|c: char| !(c.is_alphanumeric() || c == '_' || c == '\''))
                .unwrap_or(rest.len());
            let word = &rest[..len];
            let tok = match word {
                "T" => Tok::Value(TruthValue::T),
                "F" => Tok::Value(TruthValue::F),
                "_HA" => Tok::Value(TruthValue::BotHA),
                "_D" => Tok::Value(TruthValue::BotD),
                "_IL" => Tok::Value(TruthValue::BotIL),
                "_O" => Tok::Value(TruthValue::BotO),
                w if w.starts_with('_') => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("unknown constant `{w}`"),
                    })
                }
                w => Tok::Name(w.to_string()),
            };
            out.push((pos, tok));
            pos += len;
            rest = &rest[len..];
            continue;
        }
        return Err(Error::Syntax {
            pos,
            msg: format!("unexpected character `{c}`"),
        });
    }
    Ok(out)
}

const KEYWORDS: &[&str] = &["rec", "and", "in", "if", "then", "else"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    scope: Vec<String>,
    env: RecEnv,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Name(n)) if n == kw)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax {
            pos: self.toks.get(self.pos).map_or(self.end, |(p, _)| *p),
            msg: msg.into(),
        })
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), Error> {
        if self.at_keyword(kw) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{kw}`"))
        }
    }

    fn name(&mut self) -> Result<String, Error> {
        match self.peek() {
            Some(Tok::Name(n)) if !KEYWORDS.contains(&n.as_str()) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a name"),
        }
    }

    fn expr(&mut self) -> Result<Prop, Error> {
        if !self.at_keyword("rec") {
            return self.imp();
        }
        self.pos += 1;
        let depth = self.scope.len();
        let mut bindings = Vec::new();
        loop {
            let at = self.pos;
            let name = self.name()?;
            if self.scope[depth..].contains(&name) || self.env.get(&name).is_some() {
                self.pos = at;
                return self.err(format!("`{name}` is bound twice"));
            }
            self.scope.push(name.clone());
            if self.peek() != Some(&Tok::Eq) {
                return self.err("expected `=`");
            }
            self.pos += 1;
            bindings.push((name, self.pos));
            // Bodies are parsed once every name of the group is in scope.
            self.skip_binding_body()?;
            if self.at_keyword("and") {
                self.pos += 1;
                continue;
            }
            break;
        }
        let after = self.pos;
        for (name, start) in bindings {
            self.pos = start;
            let body = self.expr()?;
            self.env.define(&name, body)?;
        }
        self.pos = after;
        self.expect_keyword("in")?;
        let body = self.expr();
        self.scope.truncate(depth);
        body
    }

    /// Advances past a binding body: up to the `and`/`in` that closes the
    /// current `rec` group, respecting parentheses and nested groups.
    fn skip_binding_body(&mut self) -> Result<(), Error> {
        let mut parens = 0usize;
        let mut nested = 0usize;
        loop {
            match self.peek() {
                None => return self.err("unterminated `rec` binding"),
                Some(Tok::Open) => parens += 1,
                Some(Tok::Close) => {
                    if parens == 0 {
                        return self.err("unbalanced `)`");
                    }
                    parens -= 1
                }
                Some(Tok::Name(n)) if n == "rec" => nested += 1,
                Some(Tok::Name(n)) if n == "in" => {
                    if nested == 0 && parens == 0 {
                        return Ok(());
                    }
                    nested = nested.saturating_sub(1);
                }
                Some(Tok::Name(n)) if n == "and" && nested == 0 && parens == 0 => return Ok(()),
                _ => {}
            }
            self.pos += 1;
        }
    }

    fn binary(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Prop, Error>,
        make: fn(Prop, Prop) -> Prop,
    ) -> Result<Prop, Error> {
        let mut acc = next(self)?;
        while self.peek() == Some(&op) {
            self.pos += 1;
            acc = make(acc, next(self)?);
        }
        Ok(acc)
    }

    fn imp(&mut self) -> Result<Prop, Error> {
        self.binary(Tok::Arrow, Self::or, Prop::implies)
    }

    fn or(&mut self) -> Result<Prop, Error> {
        self.binary(Tok::Or, Self::and, Prop::or)
    }

    fn and(&mut self) -> Result<Prop, Error> {
        self.binary(Tok::And, Self::unary, Prop::and)
    }

    fn unary(&mut self) -> Result<Prop, Error> {
        if self.peek() == Some(&Tok::Not) {
            self.pos += 1;
            return Ok(Prop::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Prop, Error> {
        match self.peek().cloned() {
            Some(Tok::Value(v)) => {
                self.pos += 1;
                Ok(Prop::Const(v))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(p)
            }
            Some(Tok::Name(n)) if n == "if" => {
                self.pos += 1;
                let b = self.expr()?;
                self.expect_keyword("then")?;
                let p = self.expr()?;
                self.expect_keyword("else")?;
                let q = self.expr()?;
                Ok(Prop::ite(b, p, q))
            }
            Some(Tok::Name(n)) if n == "rec" => self.expr(),
            Some(Tok::Name(_)) => {
                let n = self.name()?;
                if self.scope.contains(&n) {
                    Ok(Prop::RecRef(n))
                } else {
                    Ok(Prop::Var(n))
                }
            }
            _ => self.err("expected a proposition"),
        }
    }
}

pub fn parse_prop(src: &str) -> Result<(Prop, RecEnv), Error> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
        scope: Vec::new(),
        env: RecEnv::new(),
    };
    let prop = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok((prop, p.env))
}

/// Compiles to a closed λ-term. Each recursive name `X` with body `B`
/// becomes `THETA (\X. [B])`; references inside their own definition are
/// the bound variable.
pub fn compile(
    p: &Prop,
    env: &RecEnv,
    assignment: &Assignment,
    style: Style,
) -> Result<Term, Error> {
    fn go(
        p: &Prop,
        env: &RecEnv,
        asg: &Assignment,
        style: Style,
        active: &mut Vec<String>,
    ) -> Result<Term, Error> {
        let mut sub = |q: &Prop| go(q, env, asg, style, active);
        Ok(match p {
            Prop::Var(x) => {
                let v = asg
                    .get(x)
                    .ok_or_else(|| Error::UnboundVariable(x.clone()))?;
                encode_value(*v, style)
            }
            Prop::Const(v) => encode_value(*v, style),
            Prop::Not(q) => neg(sub(q)?, style),
            Prop::And(q, r) => {
                let q = sub(q)?;
                conj(q, sub(r)?)
            }
            Prop::Or(q, r) => {
                let q = sub(q)?;
                disj(q, sub(r)?)
            }
            Prop::Implies(q, r) => {
                let q = sub(q)?;
                implies(q, sub(r)?, style)
            }
            Prop::Ite(b, q, r) => {
                let b = sub(b)?;
                let q = sub(q)?;
                ite(b, q, sub(r)?)
            }
            Prop::RecRef(x) => {
                if active.contains(x) {
                    return Ok(Term::Var(x.as_str().into()));
                }
                let body = env
                    .get(x)
                    .ok_or_else(|| Error::UnboundVariable(x.clone()))?;
                active.push(x.clone());
                let body = go(body, env, asg, style, active);
                active.pop();
                app(theta(), lam(x, body?))
            }
        })
    }
    go(p, env, assignment, style, &mut Vec::new())
}

fn theta() -> Term {
    DefEnv::standard()
        .reference("THETA")
        .expect("THETA is preloaded")
}

fn check_domain(p: &Prop, env: &RecEnv, asg: &Assignment, arity: Arity) -> Result<(), Error> {
    let consts = p
        .consts()
        .into_iter()
        .chain(env.iter().flat_map(|(_, b)| b.consts()))
        .chain(asg.values().copied());
    for v in consts {
        if !arity.contains(v) {
            return Err(Error::ValueOutsideArity {
                value: v.to_string(),
                arity: arity.as_u8(),
            });
        }
    }
    Ok(())
}

/// Compiles, reduces and decodes. Constants and assigned values must
/// belong to the logic of the requested arity.
pub fn eval_prop(
    p: &Prop,
    env: &RecEnv,
    assignment: &Assignment,
    arity: Arity,
    style: Style,
    fuel: usize,
) -> Result<Decoded, Error> {
    check_domain(p, env, assignment, arity)?;
    let term = compile(p, env, assignment, style)?;
    decode(&term, arity, style, fuel, DEFAULT_DEPTH)
}

/// Left-sequential three-valued evaluation without λ-terms. Assigned
/// values of finer logics are projected. Re-entering a recursive name that
/// is still being evaluated yields ⊥.
pub fn direct_eval(p: &Prop, env: &RecEnv, assignment: &Assignment) -> Result<TruthValue, Error> {
    fn go(
        p: &Prop,
        env: &RecEnv,
        asg: &Assignment,
        active: &mut Vec<String>,
    ) -> Result<TruthValue, Error> {
        use TruthValue::{Bot, F, T};
        let v = match p {
            Prop::Const(v) => project(*v, Arity::Three)?,
            Prop::Var(x) => {
                let v = asg
                    .get(x)
                    .ok_or_else(|| Error::UnboundVariable(x.clone()))?;
                project(*v, Arity::Three)?
            }
            Prop::Not(q) => match go(q, env, asg, active)? {
                T => F,
                F => T,
                _ => Bot,
            },
            Prop::And(q, r) => match go(q, env, asg, active)? {
                T => go(r, env, asg, active)?,
                F => F,
                _ => Bot,
            },
            Prop::Or(q, r) => match go(q, env, asg, active)? {
                T => T,
                F => go(r, env, asg, active)?,
                _ => Bot,
            },
            Prop::Implies(q, r) => match go(q, env, asg, active)? {
                T => go(r, env, asg, active)?,
                F => T,
                _ => Bot,
            },
            Prop::Ite(b, q, r) => match go(b, env, asg, active)? {
                T => go(q, env, asg, active)?,
                F => go(r, env, asg, active)?,
                _ => Bot,
            },
            Prop::RecRef(x) => {
                if active.contains(x) {
                    return Ok(Bot);
                }
                let body = env
                    .get(x)
                    .ok_or_else(|| Error::UnboundVariable(x.clone()))?;
                active.push(x.clone());
                let v = go(body, env, asg, active);
                active.pop();
                v?
            }
        };
        Ok(v)
    }
    go(p, env, assignment, &mut Vec::new())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RussellReport {
    pub term: Term,
    pub trace: Vec<String>,
    pub verdict: Verdict,
    pub bohm: TreeNode,
    pub value: Decoded,
}

impl RussellReport {
    pub fn render(&self) -> String {
        let mut out = format!("P = {}\n", self.term);
        out.push_str("normal-order steps:\n");
        for (i, line) in self.trace.iter().enumerate() {
            let arrow = if i == 0 { "  " } else { "->" };
            out.push_str(&format!("  {arrow} {line}\n"));
        }
        out.push_str(&format!("classification: {}\n", self.verdict));
        out.push_str(&format!("Böhm tree: {}\n", self.bohm));
        out.push_str(&format!("value at arity 3: {}\n", self.value));
        out
    }
}

/// `P = (λp. ¬(p p)) (λp. ¬(p p))` with `¬M` spelled out as `M F T`.
pub fn russell_demo(steps: usize, fuel: usize) -> RussellReport {
    let term = crate::parse::parse(r"(\p. p p F T) (\p. p p F T)").expect("fixed term parses");
    let (_, trace) = normalize_traced(&term, steps);
    RussellReport {
        trace: trace.entries.iter().map(|e| e.term.to_string()).collect(),
        verdict: classify(&term, fuel, DEFAULT_DEPTH),
        bohm: bohm_tree(&term, 4, fuel),
        value: decode(&term, Arity::Three, Style::Church, fuel, DEFAULT_DEPTH)
            .unwrap_or(Decoded::Unknown(crate::classify::UnknownReason::Opaque)),
        term,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::DEFAULT_FUEL;
    use TruthValue::*;

    fn p(src: &str) -> (Prop, RecEnv) {
        parse_prop(src).unwrap()
    }

    #[test]
    fn precedence_and_associativity() {
        let (q, _) = p(r"~a /\ b \/ c -> d -> e");
        assert_eq!(q.to_string(), r"~a /\ b \/ c -> d -> e");
        let (q, _) = p(r"a /\ (b \/ c)");
        assert_eq!(
            q,
            Prop::and(
                Prop::Var("a".into()),
                Prop::or(Prop::Var("b".into()), Prop::Var("c".into()))
            )
        );
        let (q, _) = p(r"F \/ (T \/ F)");
        assert_eq!(q.to_string(), r"F \/ (T \/ F)");
        let (q, _) = p("¬a ∧ ⊥ → b");
        assert_eq!(q.to_string(), r"~a /\ _|_ -> b");
    }

    #[test]
    fn recursive_bindings() {
        let (q, env) = p(r"rec X = T /\ X in X");
        assert_eq!(q, Prop::RecRef("X".into()));
        assert_eq!(env.get("X").unwrap().to_string(), r"T /\ X");
        let (_, env) = p("rec W = if a then T else (if b then W else W) in W");
        assert_eq!(env.get("W").unwrap().vars(), vec!["a", "b"]);
        let (_, env) = p(r"rec X = a /\ Y and Y = b \/ X in X");
        assert!(env.get("Y").is_some());
        assert!(matches!(
            parse_prop("rec X = T in rec X = F in X"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_prop("a /\\"),
            Err(Error::Syntax { pos: 4, .. })
        ));
    }

    #[test]
    fn compilation_shapes() {
        let none = Assignment::new();
        let c = |src: &str| {
            let (q, env) = p(src);
            compile(&q, &env, &none, Style::Church).unwrap().to_string()
        };
        assert_eq!(c(r"rec X = T \/ X in X"), r"THETA (\X. T T X)");
        assert_eq!(c(r"rec X = T /\ X in X"), r"THETA (\X. T X T)");
        assert_eq!(c("rec X = ~X in X"), r"THETA (\X. X F T)");
        let (q, env) = p(r"rec X = a /\ Y and Y = b \/ X in X");
        let asg = parse_assignment("a=T, b=F").unwrap();
        let t = compile(&q, &env, &asg, Style::Church).unwrap();
        assert!(crate::term::free_vars(&t).is_empty());
    }

    #[test]
    fn evaluation() {
        let none = Assignment::new();
        let e = |src: &str, arity| {
            let (q, env) = p(src);
            eval_prop(&q, &env, &none, arity, Style::Church, DEFAULT_FUEL).unwrap()
        };
        assert_eq!(e(r"rec X = T \/ X in X", Arity::Three), Decoded::Value(T));
        assert_eq!(e(r"rec X = T /\ X in X", Arity::Three), Decoded::Value(Bot));
        assert_eq!(
            e(r"rec X = T /\ X in X", Arity::Five),
            Decoded::Value(BotHA)
        );
        assert_eq!(e("rec X = ~X in X", Arity::Five), Decoded::Value(BotIL));
        let (q, env) = p("a");
        assert!(matches!(
            eval_prop(&q, &env, &none, Arity::Three, Style::Church, 100),
            Err(Error::UnboundVariable(_))
        ));
    }

    #[test]
    fn direct_evaluation() {
        let d = |src: &str, asg: &str| {
            let (q, env) = p(src);
            direct_eval(&q, &env, &parse_assignment(asg).unwrap()).unwrap()
        };
        assert_eq!(d(r"F \/ (T \/ F)", ""), T);
        assert_eq!(d(r"rec X = T /\ X in X", ""), Bot);
        assert_eq!(
            d("rec W = if a then T else (if b then W else W) in W", "a=T"),
            T
        );
        assert_eq!(d(r"F /\ _|_", ""), F);
        assert_eq!(d(r"_|_ /\ F", ""), Bot);
    }

    #[test]
    fn russell() {
        let r = russell_demo(3, DEFAULT_FUEL);
        assert_eq!(r.trace[1], r"(\p. p p F T) (\p. p p F T) F T");
        assert_eq!(
            r.verdict.class(),
            Some(crate::classify::UnsolvableClass::IL)
        );
        assert_eq!(r.bohm, TreeNode::bot());
        assert_eq!(r.value, Decoded::Value(Bot));
    }
}
