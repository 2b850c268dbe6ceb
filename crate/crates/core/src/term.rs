//! λ-terms, α-equivalence, capture-avoiding substitution and nameless
//! canonical forms.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Variable and binder names. Cheap to clone.
pub type Name = Arc<str>;

/// The ⊥ constants. `BotD` stands for the merged class IL ∪ O.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BotTag {
    BotPlain,
    BotHA,
    BotIL,
    BotO,
    BotD,
}

impl BotTag {
    pub const ALL: [BotTag; 5] = [
        BotTag::BotPlain,
        BotTag::BotHA,
        BotTag::BotIL,
        BotTag::BotO,
        BotTag::BotD,
    ];

    /// Concrete syntax of the constant.
    pub fn symbol(self) -> &'static str {
        match self {
            BotTag::BotPlain => "_|_",
            BotTag::BotHA => "_HA",
            BotTag::BotIL => "_IL",
            BotTag::BotO => "_O",
            BotTag::BotD => "_D",
        }
    }

    pub fn from_symbol(s: &str) -> Option<BotTag> {
        BotTag::ALL.into_iter().find(|t| t.symbol() == s)
    }
}

/// A named, closed definition. Refs point at one of these, so a Ref always
/// resolves.
#[derive(Debug)]
pub struct Definition {
    name: Name,
    body: Term,
    fingerprint: OnceLock<u128>,
}

impl Definition {
    pub fn name(&self) -> &Name {
        &self.name
    }

    pub fn body(&self) -> &Term {
        &self.body
    }

    fn fingerprint(&self) -> u128 {
        *self
            .fingerprint
            .get_or_init(|| fingerprint_in(&self.body, &mut Vec::new()))
    }
}

impl PartialEq for Definition {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.body == other.body
    }
}

impl Eq for Definition {}

impl Hash for Definition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Name),
    Lam(Name, Box<Term>),
    App(Box<Term>, Box<Term>),
    Const(BotTag),
    Ref(Arc<Definition>),
}

/// One edge of a path from the root of a term to a subterm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Fun,
    Arg,
    Body,
}

pub type Path = Vec<Step>;

pub fn var(name: &str) -> Term {
    Term::Var(Name::from(name))
}

pub fn lam(binder: &str, body: Term) -> Term {
    Term::Lam(Name::from(binder), Box::new(body))
}

/// `λx1 … xn. body`
pub fn lams(binders: &[&str], body: Term) -> Term {
    binders.iter().rev().fold(body, |acc, b| lam(b, acc))
}

pub fn app(fun: Term, arg: Term) -> Term {
    Term::App(Box::new(fun), Box::new(arg))
}

/// Left-associated application `head a1 … an`.
pub fn apps(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
    args.into_iter().fold(head, app)
}

impl Term {
    /// Follows Refs at the root until the term is not a Ref.
    pub fn unfold(&self) -> &Term {
        let mut t = self;
        while let Term::Ref(d) = t {
            t = &d.body;
        }
        t
    }

    pub fn is_lam(&self) -> bool {
        matches!(self.unfold(), Term::Lam(..))
    }

    /// Inline every Ref, recursively.
    pub fn expand(&self) -> Term {
        match self {
            Term::Var(_) | Term::Const(_) => self.clone(),
            Term::Lam(x, b) => Term::Lam(x.clone(), Box::new(b.expand())),
            Term::App(f, a) => app(f.expand(), a.expand()),
            Term::Ref(d) => d.body.expand(),
        }
    }

    /// Number of nodes, Refs counted as one node.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) | Term::Ref(_) => 1,
            Term::Lam(_, b) => 1 + b.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    /// Splits `h a1 … an` into its spine head and arguments (innermost first),
    /// without unfolding Refs.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut t = self;
        while let Term::App(f, a) = t {
            args.push(&**a);
            t = f;
        }
        args.reverse();
        (t, args)
    }

    pub fn subterm(&self, path: &[Step]) -> Option<&Term> {
        let mut t = self;
        for step in path {
            t = match (t.unfold(), step) {
                (Term::App(f, _), Step::Fun) => f,
                (Term::App(_, a), Step::Arg) => a,
                (Term::Lam(_, b), Step::Body) => b,
                _ => return None,
            };
        }
        Some(t)
    }

    /// Rebuilds the term with the subterm at `path` replaced by `f(subterm)`.
    /// Refs crossed by the path are unfolded.
    pub fn replace_at(
        &self,
        path: &[Step],
        f: &mut dyn FnMut(&Term) -> Option<Term>,
    ) -> Option<Term> {
        let Some((step, rest)) = path.split_first() else {
            return f(self);
        };
        match (self.unfold(), step) {
            (Term::App(g, a), Step::Fun) => Some(app(g.replace_at(rest, f)?, (**a).clone())),
            (Term::App(g, a), Step::Arg) => Some(app((**g).clone(), a.replace_at(rest, f)?)),
            (Term::Lam(x, b), Step::Body) => {
                Some(Term::Lam(x.clone(), Box::new(b.replace_at(rest, f)?)))
            }
            _ => None,
        }
    }
}

/// The definition library terms are parsed against.
#[derive(Clone, Debug)]
pub struct DefEnv {
    defs: BTreeMap<Name, Arc<Definition>>,
    preloaded: BTreeSet<Name>,
}

impl DefEnv {
    /// An environment with no definitions at all.
    pub fn empty() -> Self {
        DefEnv {
            defs: BTreeMap::new(),
            preloaded: BTreeSet::new(),
        }
    }

    /// The standard combinator library: K, I, OMEGA, THETA, T, F and the λI
    /// booleans TI, FI. `Ω`, `Θ`, `T_I` and `F_I` are accepted as aliases.
    pub fn standard() -> Self {
        static STANDARD: OnceLock<DefEnv> = OnceLock::new();
        STANDARD.get_or_init(build_standard).clone()
    }

    pub fn get(&self, name: &str) -> Option<&Arc<Definition>> {
        self.defs.get(name)
    }

    /// A Ref node for a defined name.
    pub fn reference(&self, name: &str) -> Result<Term, Error> {
        self.get(name)
            .map(|d| Term::Ref(d.clone()))
            .ok_or_else(|| Error::UnresolvedRef(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &Name> {
        self.defs.keys()
    }

    pub fn is_preloaded(&self, name: &str) -> bool {
        self.preloaded.contains(name)
    }

    /// Adds a user definition. The body must be closed and the name must not
    /// already be taken.
    pub fn define(&mut self, name: &str, body: Term) -> Result<(), Error> {
        if self.is_preloaded(name) {
            return Err(Error::ShadowsPreloaded(name.to_string()));
        }
        if self.defs.contains_key(name) {
            return Err(Error::Redefinition(name.to_string()));
        }
        let free = free_vars(&body);
        if !free.is_empty() {
            return Err(Error::OpenDefinition {
                name: name.to_string(),
                free: free.iter().map(|v| v.to_string()).collect(),
            });
        }
        self.insert(name, body);
        Ok(())
    }

    fn insert(&mut self, name: &str, body: Term) -> Arc<Definition> {
        let def = Arc::new(Definition {
            name: Name::from(name),
            body,
            fingerprint: OnceLock::new(),
        });
        self.defs.insert(Name::from(name), def.clone());
        def
    }

    fn alias(&mut self, alias: &str, target: &str) {
        let def = self.defs[target].clone();
        self.defs.insert(Name::from(alias), def);
        self.preloaded.insert(Name::from(alias));
    }
}

fn build_standard() -> DefEnv {
    let mut env = DefEnv::empty();
    let put = |env: &mut DefEnv, name: &str, body: Term| {
        env.insert(name, body);
        env.preloaded.insert(Name::from(name));
    };
    put(&mut env, "K", lams(&["x", "y"], var("x")));
    put(&mut env, "I", lam("x", var("x")));
    let self_app = lam("x", app(var("x"), var("x")));
    put(&mut env, "OMEGA", app(self_app.clone(), self_app));
    let turing = lams(
        &["x", "y"],
        app(var("y"), apps(var("x"), [var("x"), var("y")])),
    );
    put(&mut env, "THETA", app(turing.clone(), turing));
    put(&mut env, "T", lams(&["x", "y"], var("x")));
    put(&mut env, "F", lams(&["x", "y"], var("y")));
    let i = Term::Ref(env.defs["I"].clone());
    put(
        &mut env,
        "TI",
        lams(
            &["x", "y"],
            apps(var("y"), [i.clone(), i.clone(), var("x")]),
        ),
    );
    put(
        &mut env,
        "FI",
        lam("x", apps(var("x"), [i.clone(), i.clone(), i])),
    );
    env.alias("Ω", "OMEGA");
    env.alias("Θ", "THETA");
    env.alias("T_I", "TI");
    env.alias("F_I", "FI");
    env
}

/// Free variables. Refs are closed and contribute nothing.
pub fn free_vars(t: &Term) -> BTreeSet<Name> {
    fn go(t: &Term, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
        match t {
            Term::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            Term::Lam(x, b) => {
                bound.push(x.clone());
                go(b, bound, out);
                bound.pop();
            }
            Term::App(f, a) => {
                go(f, bound, out);
                go(a, bound, out);
            }
            Term::Const(_) | Term::Ref(_) => {}
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

pub fn occurs_free(x: &str, t: &Term) -> bool {
    match t {
        Term::Var(y) => &**y == x,
        Term::Lam(y, b) => &**y != x && occurs_free(x, b),
        Term::App(f, a) => occurs_free(x, f) || occurs_free(x, a),
        Term::Const(_) | Term::Ref(_) => false,
    }
}

/// Smallest `base<n>` (n ≥ 1) not in `avoid`, where `base` is `name` with
/// any trailing digits removed.
pub fn fresh_name(name: &str, avoid: &BTreeSet<Name>) -> Name {
    let base = name.trim_end_matches(|c: char| c.is_ascii_digit());
    let base = if base.is_empty() { "v" } else { base };
    (1..)
        .map(|n| format!("{base}{n}"))
        .find(|cand| !avoid.contains(cand.as_str()))
        .map(Name::from)
        .expect("unbounded suffix search")
}

/// Capture-avoiding substitution `body[var := value]`.
pub fn substitute(body: &Term, var: &str, value: &Term) -> Term {
    let fv = free_vars(value);
    subst(body, var, value, &fv)
}

fn subst(t: &Term, x: &str, v: &Term, fv_v: &BTreeSet<Name>) -> Term {
    match t {
        Term::Var(y) => {
            if &**y == x {
                v.clone()
            } else {
                t.clone()
            }
        }
        Term::Lam(y, b) => {
            if &**y == x || !occurs_free(x, b) {
                t.clone()
            } else if fv_v.contains(y) {
                let mut avoid = fv_v.clone();
                avoid.extend(free_vars(b));
                avoid.insert(Name::from(x));
                let y2 = fresh_name(y, &avoid);
                let renamed = subst(b, y, &Term::Var(y2.clone()), &BTreeSet::from([y2.clone()]));
                Term::Lam(y2, Box::new(subst(&renamed, x, v, fv_v)))
            } else {
                Term::Lam(y.clone(), Box::new(subst(b, x, v, fv_v)))
            }
        }
        Term::App(f, a) => app(subst(f, x, v, fv_v), subst(a, x, v, fv_v)),
        Term::Const(_) | Term::Ref(_) => t.clone(),
    }
}

/// Locally nameless form: bound variables become binding-depth indices,
/// Refs are inlined. Two terms are α-equivalent iff their nameless forms
/// are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamelessTerm {
    Free(Name),
    Bound(usize),
    Lam(Box<NamelessTerm>),
    App(Box<NamelessTerm>, Box<NamelessTerm>),
    Const(BotTag),
}

pub fn canonicalize(t: &Term) -> NamelessTerm {
    canonicalize_in(t, &[])
}

/// Canonical form where the names in `scope` (outermost first) are treated
/// as bound by enclosing binders.
pub fn canonicalize_in(t: &Term, scope: &[Name]) -> NamelessTerm {
    fn go(t: &Term, scope: &mut Vec<Name>) -> NamelessTerm {
        match t {
            Term::Var(x) => match scope.iter().rposition(|y| y == x) {
                Some(i) => NamelessTerm::Bound(scope.len() - 1 - i),
                None => NamelessTerm::Free(x.clone()),
            },
            Term::Lam(x, b) => {
                scope.push(x.clone());
                let body = go(b, scope);
                scope.pop();
                NamelessTerm::Lam(Box::new(body))
            }
            Term::App(f, a) => NamelessTerm::App(Box::new(go(f, scope)), Box::new(go(a, scope))),
            Term::Const(c) => NamelessTerm::Const(*c),
            Term::Ref(d) => go(&d.body, &mut Vec::new()),
        }
    }
    go(t, &mut scope.to_vec())
}

/// α-equivalence, with Refs resolved.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    fn go<'a>(a: &'a Term, b: &'a Term, env: &mut Vec<(&'a Name, &'a Name)>) -> bool {
        match (a, b) {
            (Term::Ref(x), Term::Ref(y)) if Arc::ptr_eq(x, y) => true,
            (Term::Ref(_), _) | (_, Term::Ref(_)) => go_expanded(a, b, env),
            (Term::Var(x), Term::Var(y)) => {
                for (l, r) in env.iter().rev() {
                    if *l == x || *r == y {
                        return *l == x && *r == y;
                    }
                }
                x == y
            }
            (Term::Lam(x, p), Term::Lam(y, q)) => {
                env.push((x, y));
                let r = go(p, q, env);
                env.pop();
                r
            }
            (Term::App(f, p), Term::App(g, q)) => go(f, g, env) && go(p, q, env),
            (Term::Const(c), Term::Const(d)) => c == d,
            _ => false,
        }
    }
    fn go_expanded(a: &Term, b: &Term, env: &mut Vec<(&Name, &Name)>) -> bool {
        let scope_a: Vec<Name> = env.iter().map(|(l, _)| (*l).clone()).collect();
        let scope_b: Vec<Name> = env.iter().map(|(_, r)| (*r).clone()).collect();
        canonicalize_in(a, &scope_a) == canonicalize_in(b, &scope_b)
    }
    go(a, b, &mut Vec::new())
}

/// α-invariant 128-bit fingerprint. Equal for α-equivalent terms; distinct
/// terms collide only with negligible probability, and every consumer
/// confirms a match by replay before relying on it.
pub fn fingerprint(t: &Term) -> u128 {
    fingerprint_in(t, &mut Vec::new())
}

fn mix(tag: u8, parts: &[u128], extra: &[u8]) -> u128 {
    let mut lo = DefaultHasher::new();
    let mut hi = DefaultHasher::new();
    0xA5u8.hash(&mut hi);
    for h in [&mut lo, &mut hi] {
        tag.hash(h);
        parts.hash(h);
        extra.hash(h);
    }
    ((hi.finish() as u128) << 64) | lo.finish() as u128
}

fn fingerprint_in(t: &Term, scope: &mut Vec<Name>) -> u128 {
    match t {
        Term::Var(x) => match scope.iter().rposition(|y| y == x) {
            Some(i) => mix(0, &[(scope.len() - 1 - i) as u128], &[]),
            None => mix(1, &[], x.as_bytes()),
        },
        Term::Lam(x, b) => {
            scope.push(x.clone());
            let h = fingerprint_in(b, scope);
            scope.pop();
            mix(2, &[h], &[])
        }
        Term::App(f, a) => {
            let hf = fingerprint_in(f, scope);
            let ha = fingerprint_in(a, scope);
            mix(3, &[hf, ha], &[])
        }
        Term::Const(c) => mix(4, &[], c.symbol().as_bytes()),
        Term::Ref(d) => d.fingerprint(),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => write!(f, "{x}"),
            Term::Const(c) => write!(f, "{}", c.symbol()),
            Term::Ref(d) => write!(f, "{}", d.name),
            Term::Lam(..) => {
                let mut binders = Vec::new();
                let mut body = self;
                while let Term::Lam(x, b) = body {
                    binders.push(x.to_string());
                    body = b;
                }
                write!(f, "\\{}. {}", binders.join(" "), body)
            }
            Term::App(fun, arg) => {
                match **fun {
                    Term::Lam(..) => write!(f, "({fun})")?,
                    _ => write!(f, "{fun}")?,
                }
                match **arg {
                    Term::Lam(..) | Term::App(..) => write!(f, " ({arg})"),
                    _ => write!(f, " {arg}"),
                }
            }
        }
    }
}

impl fmt::Display for NamelessTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamelessTerm::Free(x) => write!(f, "{x}"),
            NamelessTerm::Bound(i) => write!(f, "#{i}"),
            NamelessTerm::Lam(b) => write!(f, "\\. {b}"),
            NamelessTerm::App(g, a) => {
                match **g {
                    NamelessTerm::Lam(_) => write!(f, "({g})")?,
                    _ => write!(f, "{g}")?,
                }
                match **a {
                    NamelessTerm::Lam(_) | NamelessTerm::App(..) => write!(f, " ({a})"),
                    _ => write!(f, " {a}"),
                }
            }
            NamelessTerm::Const(c) => write!(f, "{}", c.symbol()),
        }
    }
}

impl Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::parse::parse(&text).map_err(serde::de::Error::custom)
    }
}
