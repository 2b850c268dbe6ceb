//! Truth values of the 2/3/4/5-valued left-sequential logics, their
//! λ-encodings, decoding of terms back into truth values, and truth tables
//! computed through the reduction engine.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, UnknownReason, UnsolvableClass, Verdict};
use crate::error::Error;
use crate::reduce::{normalize, ReduceOutcome};
use crate::term::{alpha_eq, apps, DefEnv, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TruthValue {
    T,
    F,
    /// The single undefined value of the three-valued logic.
    Bot,
    /// Meaningless: head-active.
    BotHA,
    /// Divergent: IL ∪ O, as one value.
    BotD,
    BotIL,
    BotO,
}

impl TruthValue {
    pub fn symbol(self) -> &'static str {
        match self {
            TruthValue::T => "T",
            TruthValue::F => "F",
            TruthValue::Bot => "_|_",
            TruthValue::BotHA => "_HA",
            TruthValue::BotD => "_D",
            TruthValue::BotIL => "_IL",
            TruthValue::BotO => "_O",
        }
    }

    pub fn is_bot(self) -> bool {
        !matches!(self, TruthValue::T | TruthValue::F)
    }

    /// The smallest arity whose domain contains this value.
    pub fn native_arity(self) -> Arity {
        match self {
            TruthValue::T | TruthValue::F => Arity::Two,
            TruthValue::Bot => Arity::Three,
            TruthValue::BotHA | TruthValue::BotD => Arity::Four,
            TruthValue::BotIL | TruthValue::BotO => Arity::Five,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for TruthValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "T" => TruthValue::T,
            "F" => TruthValue::F,
            "_|_" | "⊥" | "Bot" => TruthValue::Bot,
            "_HA" | "BotHA" | "m" => TruthValue::BotHA,
            "_D" | "BotD" | "d" => TruthValue::BotD,
            "_IL" | "BotIL" => TruthValue::BotIL,
            "_O" | "BotO" => TruthValue::BotO,
            _ => {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("`{s}` is not a truth value"),
                })
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Arity {
    Two,
    Three,
    Four,
    Five,
}

impl Arity {
    pub const ALL: [Arity; 4] = [Arity::Two, Arity::Three, Arity::Four, Arity::Five];

    /// The domain, in enumeration order.
    pub fn values(self) -> &'static [TruthValue] {
        use TruthValue::*;
        match self {
            Arity::Two => &[T, F],
            Arity::Three => &[T, F, Bot],
            Arity::Four => &[T, F, BotHA, BotD],
            Arity::Five => &[T, F, BotHA, BotIL, BotO],
        }
    }

    pub fn contains(self, v: TruthValue) -> bool {
        self.values().contains(&v)
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Arity::Two => 2,
            Arity::Three => 3,
            Arity::Four => 4,
            Arity::Five => 5,
        }
    }
}

impl TryFrom<u8> for Arity {
    type Error = Error;

    fn try_from(n: u8) -> Result<Self, Error> {
        match n {
            2 => Ok(Arity::Two),
            3 => Ok(Arity::Three),
            4 => Ok(Arity::Four),
            5 => Ok(Arity::Five),
            _ => Err(Error::BadArity(n)),
        }
    }
}

impl From<Arity> for u8 {
    fn from(a: Arity) -> u8 {
        a.as_u8()
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Maps `v` into a coarser (or equal) logic.
pub fn project(v: TruthValue, to: Arity) -> Result<TruthValue, Error> {
    use TruthValue::*;
    let out = match (v, to) {
        (T | F, _) => Some(v),
        (_, Arity::Two) => None,
        (_, Arity::Three) => Some(Bot),
        (BotHA, Arity::Four) => Some(BotHA),
        (BotD | BotIL | BotO, Arity::Four) => Some(BotD),
        (BotHA | BotIL | BotO, Arity::Five) => Some(v),
        _ => None,
    };
    out.ok_or(Error::ValueOutsideArity {
        value: v.to_string(),
        arity: to.as_u8(),
    })
}

/// The value an unsolvable term of class `class` takes in a logic.
pub fn class_value(class: UnsolvableClass, arity: Arity) -> Result<TruthValue, Error> {
    let v = match class {
        UnsolvableClass::HA => TruthValue::BotHA,
        UnsolvableClass::IL => TruthValue::BotIL,
        UnsolvableClass::O => TruthValue::BotO,
    };
    if arity == Arity::Two {
        return Err(Error::NotBoolean(class.to_string()));
    }
    project(v, arity)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Style {
    /// `T = λxy.x`, `F = λxy.y`.
    Church,
    /// `T_I = λxy.yIIx`, `F_I = λx.xIII`; every term used is a λI-term.
    LambdaI,
}

impl Style {
    pub fn truth(self) -> Term {
        lib(match self {
            Style::Church => "T",
            Style::LambdaI => "TI",
        })
    }

    pub fn falsity(self) -> Term {
        lib(match self {
            Style::Church => "F",
            Style::LambdaI => "FI",
        })
    }
}

impl FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "church" => Ok(Style::Church),
            "lambda-i" | "lambdai" => Ok(Style::LambdaI),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown style `{s}`"),
            }),
        }
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Church => "church",
            Style::LambdaI => "lambda-i",
        })
    }
}

fn lib(name: &str) -> Term {
    DefEnv::standard()
        .reference(name)
        .expect("standard library entry")
}

fn parse_std(src: &str) -> Term {
    crate::parse::parse(src).expect("built-in term parses")
}

/// Canonical closed representative of an unsolvable class.
pub fn representative(class: UnsolvableClass, style: Style) -> Term {
    match (class, style) {
        (UnsolvableClass::HA, _) => lib("OMEGA"),
        (UnsolvableClass::IL, _) => parse_std(r"THETA (\x. x I)"),
        (UnsolvableClass::O, Style::Church) => parse_std("THETA K"),
        // THETA K is not a λI-term (K drops its second argument).
        (UnsolvableClass::O, Style::LambdaI) => parse_std(r"\v. THETA (\x y z. x (y z)) v"),
    }
}

pub fn encode_value(v: TruthValue, style: Style) -> Term {
    match v {
        TruthValue::T => style.truth(),
        TruthValue::F => style.falsity(),
        TruthValue::Bot | TruthValue::BotHA => representative(UnsolvableClass::HA, style),
        TruthValue::BotIL | TruthValue::BotD => representative(UnsolvableClass::IL, style),
        TruthValue::BotO => representative(UnsolvableClass::O, style),
    }
}

pub fn ite(b: Term, m: Term, n: Term) -> Term {
    apps(b, [m, n])
}

pub fn neg(m: Term, style: Style) -> Term {
    ite(m, style.falsity(), style.truth())
}

pub fn conj(m: Term, n: Term) -> Term {
    ite(m.clone(), n, m)
}

pub fn disj(m: Term, n: Term) -> Term {
    ite(m.clone(), m, n)
}

pub fn implies(m: Term, n: Term, style: Style) -> Term {
    ite(m, n, style.truth())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connective {
    Neg,
    Conj,
    Disj,
    Impl,
}

impl Connective {
    pub const ALL: [Connective; 4] = [
        Connective::Neg,
        Connective::Conj,
        Connective::Disj,
        Connective::Impl,
    ];

    pub fn operands(self) -> usize {
        match self {
            Connective::Neg => 1,
            _ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Neg => "~",
            Connective::Conj => "/\\",
            Connective::Disj => "\\/",
            Connective::Impl => "->",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Connective::Neg => "neg",
            Connective::Conj => "conj",
            Connective::Disj => "disj",
            Connective::Impl => "impl",
        }
    }

    pub fn build(self, args: &[Term], style: Style) -> Term {
        match self {
            Connective::Neg => neg(args[0].clone(), style),
            Connective::Conj => conj(args[0].clone(), args[1].clone()),
            Connective::Disj => disj(args[0].clone(), args[1].clone()),
            Connective::Impl => implies(args[0].clone(), args[1].clone(), style),
        }
    }
}

impl FromStr for Connective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "neg" | "not" => Ok(Connective::Neg),
            "conj" | "and" => Ok(Connective::Conj),
            "disj" | "or" => Ok(Connective::Disj),
            "impl" | "implies" => Ok(Connective::Impl),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown connective `{s}`"),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "decoded", content = "value", rename_all = "snake_case")]
pub enum Decoded {
    Value(TruthValue),
    Unknown(UnknownReason),
}

impl Decoded {
    pub fn value(self) -> Option<TruthValue> {
        match self {
            Decoded::Value(v) => Some(v),
            Decoded::Unknown(_) => None,
        }
    }
}

impl fmt::Display for Decoded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decoded::Value(v) => write!(f, "{v}"),
            Decoded::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}

/// Reads a closed term as a truth value of the given logic.
pub fn decode(
    t: &Term,
    arity: Arity,
    style: Style,
    fuel: usize,
    depth: usize,
) -> Result<Decoded, Error> {
    match classify(t, fuel, depth) {
        Verdict::Solvable { .. } => match normalize(t, fuel) {
            ReduceOutcome::NormalForm { term, .. } => {
                if alpha_eq(&term, &style.truth()) {
                    Ok(Decoded::Value(TruthValue::T))
                } else if alpha_eq(&term, &style.falsity()) {
                    Ok(Decoded::Value(TruthValue::F))
                } else {
                    Err(Error::NotATruthValue(term.to_string()))
                }
            }
            ReduceOutcome::FuelExhausted { .. } => {
                Ok(Decoded::Unknown(UnknownReason::FuelExhausted))
            }
            ReduceOutcome::CycleDetected { witness, .. } => {
                Err(Error::NotATruthValue(witness.to_string()))
            }
        },
        Verdict::Unsolvable { class, .. } => class_value(class, arity).map(Decoded::Value),
        Verdict::Unknown { reason, .. } => Ok(Decoded::Unknown(reason)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub inputs: Vec<TruthValue>,
    pub value: TruthValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruthTable {
    pub connective: Connective,
    pub arity: Arity,
    pub style: Style,
    /// Row-major over the domain in enumeration order.
    pub cells: Vec<TableCell>,
}

impl TruthTable {
    pub fn get(&self, inputs: &[TruthValue]) -> Option<TruthValue> {
        self.cells
            .iter()
            .find(|c| c.inputs == inputs)
            .map(|c| c.value)
    }

    /// Aligned text: a column for unary connectives, a matrix with the
    /// first operand down the side for binary ones.
    pub fn render(&self) -> String {
        let dom = self.arity.values();
        let w = 4;
        let mut out = String::new();
        let sym = self.connective.symbol();
        if self.connective.operands() == 1 {
            out.push_str(&format!("{sym:<w$}|\n"));
            out.push_str(&format!("{}+{}\n", "-".repeat(w), "-".repeat(w)));
            for &a in dom {
                let v = self.get(&[a]).expect("total table");
                out.push_str(&format!("{:<w$}| {}\n", a.symbol(), v.symbol()));
            }
        } else {
            out.push_str(&format!("{sym:<w$}|"));
            for &b in dom {
                out.push_str(&format!(" {:<w$}", b.symbol()));
            }
            out.push('\n');
            out.push_str(&format!(
                "{}+{}\n",
                "-".repeat(w),
                "-".repeat((w + 1) * dom.len())
            ));
            for &a in dom {
                out.push_str(&format!("{:<w$}|", a.symbol()));
                for &b in dom {
                    let v = self.get(&[a, b]).expect("total table");
                    out.push_str(&format!(" {:<w$}", v.symbol()));
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Every value tuple of length `k` over `dom`, in lexicographic order.
pub fn tuples(dom: &[TruthValue], k: usize) -> Vec<Vec<TruthValue>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                dom.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Computes the table of `c` by encoding, applying and decoding every cell.
pub fn truth_table(
    c: Connective,
    arity: Arity,
    style: Style,
    fuel: usize,
) -> Result<TruthTable, Error> {
    let mut cells = Vec::new();
    for inputs in tuples(arity.values(), c.operands()) {
        let args: Vec<Term> = inputs.iter().map(|&v| encode_value(v, style)).collect();
        let term = c.build(&args, style);
        let cell = || {
            let shown: Vec<&str> = inputs.iter().map(|v| v.symbol()).collect();
            format!("{} {}", c.name(), shown.join(" "))
        };
        let value = match decode(&term, arity, style, fuel, crate::classify::DEFAULT_DEPTH)? {
            Decoded::Value(v) => v,
            Decoded::Unknown(r) => return Err(Error::Undecided(format!("{}: {r}", cell()))),
        };
        cells.push(TableCell { inputs, value });
    }
    Ok(TruthTable {
        connective: c,
        arity,
        style,
        cells,
    })
}

/// Published reference tables, transcribed as printed.
pub mod golden {
    use super::{Arity, Connective};

    /// Rows follow the domain order of the arity; unary tables have one
    /// column.
    pub fn table(c: Connective, arity: Arity) -> Option<&'static [&'static [&'static str]]> {
        use Connective::*;
        Some(match (arity, c) {
            (Arity::Two, Neg) => &[&["F"], &["T"]],
            (Arity::Two, Conj) => &[&["T", "F"], &["F", "F"]],
            (Arity::Two, Disj) => &[&["T", "T"], &["T", "F"]],
            (Arity::Two, Impl) => &[&["T", "F"], &["T", "T"]],
            (Arity::Three, Neg) => &[&["F"], &["T"], &["_|_"]],
            (Arity::Three, Conj) => &[&["T", "F", "_|_"], &["F", "F", "F"], &["_|_", "_|_", "_|_"]],
            (Arity::Three, Disj) => &[&["T", "T", "T"], &["T", "F", "_|_"], &["_|_", "_|_", "_|_"]],
            (Arity::Three, Impl) => &[&["T", "F", "_|_"], &["T", "T", "T"], &["_|_", "_|_", "_|_"]],
            (Arity::Four, Neg) => &[&["F"], &["T"], &["_HA"], &["_D"]],
            // The last cell of the first row is printed as `_IL`; see
            // `FLAGGED`.
            (Arity::Four, Conj) => &[
                &["T", "F", "_HA", "_IL"],
                &["F", "F", "F", "F"],
                &["_HA", "_HA", "_HA", "_HA"],
                &["_D", "_D", "_D", "_D"],
            ],
            (Arity::Four, Disj) => &[
                &["T", "T", "T", "T"],
                &["T", "F", "_HA", "_D"],
                &["_HA", "_HA", "_HA", "_HA"],
                &["_D", "_D", "_D", "_D"],
            ],
            (Arity::Five, Neg) => &[&["F"], &["T"], &["_HA"], &["_IL"], &["_O"]],
            (Arity::Five, Conj) => &[
                &["T", "F", "_HA", "_IL", "_O"],
                &["F", "F", "F", "F", "F"],
                &["_HA", "_HA", "_HA", "_HA", "_HA"],
                &["_IL", "_IL", "_IL", "_IL", "_IL"],
                &["_O", "_O", "_O", "_O", "_O"],
            ],
            (Arity::Five, Disj) => &[
                &["T", "T", "T", "T", "T"],
                &["T", "F", "_HA", "_IL", "_O"],
                &["_HA", "_HA", "_HA", "_HA", "_HA"],
                &["_IL", "_IL", "_IL", "_IL", "_IL"],
                &["_O", "_O", "_O", "_O", "_O"],
            ],
            _ => return None,
        })
    }

    /// Printed cells that name a value outside their own logic, with the
    /// value they must be read as: (arity, connective, row, column, reading).
    pub const FLAGGED: &[(Arity, Connective, usize, usize, &str)] =
        &[(Arity::Four, Connective::Conj, 0, 3, "_D")];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCell {
    pub inputs: Vec<TruthValue>,
    pub printed: String,
    pub computed: TruthValue,
    /// Set on flagged cells: the value the printed entry is read as.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reading: Option<TruthValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenComparison {
    pub connective: Connective,
    pub arity: Arity,
    pub matched: usize,
    pub mismatches: Vec<GoldenCell>,
    /// Flagged cells, each checked against its reading.
    pub flagged: Vec<GoldenCell>,
}

impl GoldenComparison {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.flagged.iter().all(|c| Some(c.computed) == c.reading)
    }
}

/// Compares a computed table with the reference one, if there is one.
pub fn compare_golden(table: &TruthTable) -> Option<GoldenComparison> {
    let rows = golden::table(table.connective, table.arity)?;
    let dom = table.arity.values();
    let mut cmp = GoldenComparison {
        connective: table.connective,
        arity: table.arity,
        matched: 0,
        mismatches: Vec::new(),
        flagged: Vec::new(),
    };
    for (i, row) in rows.iter().enumerate() {
        for (j, printed) in row.iter().enumerate() {
            let inputs = if table.connective.operands() == 1 {
                vec![dom[i]]
            } else {
                vec![dom[i], dom[j]]
            };
            let computed = table.get(&inputs).expect("total table");
            let flag = golden::FLAGGED.iter().find(|(a, c, r, col, _)| {
                *a == table.arity && *c == table.connective && *r == i && *col == j
            });
            let cell = GoldenCell {
                inputs,
                printed: printed.to_string(),
                computed,
                reading: flag.map(|f| f.4.parse().expect("flag reading is a value")),
            };
            if flag.is_some() {
                cmp.flagged.push(cell);
            } else if printed.parse::<TruthValue>().ok() == Some(computed) {
                cmp.matched += 1;
            } else {
                cmp.mismatches.push(cell);
            }
        }
    }
    Some(cmp)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IteRow {
    pub b0: TruthValue,
    pub b1: TruthValue,
    pub b2: TruthValue,
    pub ite: TruthValue,
    pub decomposed: TruthValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IteReport {
    pub rows: Vec<IteRow>,
}

impl IteReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.ite == r.decomposed)
    }

    pub fn render(&self) -> String {
        let mut out =
            String::from("b0  b1  b2  | if b0 then b1 else b2 | (b0 /\\ b1) \\/ (~b0 /\\ b2)\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<3} {:<3} {:<3} | {:<20} | {}{}\n",
                r.b0.symbol(),
                r.b1.symbol(),
                r.b2.symbol(),
                r.ite.symbol(),
                r.decomposed.symbol(),
                if r.ite == r.decomposed {
                    ""
                } else {
                    "   MISMATCH"
                }
            ));
        }
        out
    }
}

/// `if b0 then b1 else b2` against `(b0 ∧ b1) ∨ (¬b0 ∧ b2)` over the
/// three-valued domain.
pub fn check_ite_decomposition(style: Style, fuel: usize) -> Result<IteReport, Error> {
    let read = |t: &Term| -> Result<TruthValue, Error> {
        match decode(t, Arity::Three, style, fuel, crate::classify::DEFAULT_DEPTH)? {
            Decoded::Value(v) => Ok(v),
            Decoded::Unknown(r) => Err(Error::Undecided(format!("{t}: {r}"))),
        }
    };
    let mut rows = Vec::new();
    for bs in tuples(Arity::Three.values(), 3) {
        let [b0, b1, b2] = [bs[0], bs[1], bs[2]];
        let [e0, e1, e2] = [b0, b1, b2].map(|v| encode_value(v, style));
        let lhs = ite(e0.clone(), e1.clone(), e2.clone());
        let rhs = disj(conj(e0.clone(), e1), conj(neg(e0, style), e2));
        rows.push(IteRow {
            b0,
            b1,
            b2,
            ite: read(&lhs)?,
            decomposed: read(&rhs)?,
        });
    }
    Ok(IteReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::DEFAULT_FUEL;
    use TruthValue::*;

    #[test]
    fn projections() {
        assert_eq!(project(BotIL, Arity::Four).unwrap(), BotD);
        assert_eq!(project(BotO, Arity::Four).unwrap(), BotD);
        assert_eq!(project(BotHA, Arity::Four).unwrap(), BotHA);
        for v in Arity::Five.values() {
            assert_eq!(
                project(project(*v, Arity::Four).unwrap(), Arity::Three).unwrap(),
                project(*v, Arity::Three).unwrap()
            );
        }
        assert!(project(Bot, Arity::Two).is_err());
        assert!(project(Bot, Arity::Four).is_err());
    }

    #[test]
    fn encodings() {
        assert!(alpha_eq(
            &encode_value(T, Style::Church),
            &crate::parse::parse(r"\x y. x").unwrap()
        ));
        assert!(alpha_eq(
            &encode_value(F, Style::LambdaI),
            &crate::parse::parse(r"\x. x I I I").unwrap()
        ));
        assert_eq!(encode_value(BotO, Style::Church).to_string(), "THETA K");
    }

    #[test]
    fn decode_examples() {
        let d = |src: &str, a| {
            decode(
                &crate::parse::parse(src).unwrap(),
                a,
                Style::Church,
                DEFAULT_FUEL,
                64,
            )
            .unwrap()
        };
        assert_eq!(d("T T F", Arity::Two), Decoded::Value(T));
        assert_eq!(d(r"THETA (\X. T X T)", Arity::Three), Decoded::Value(Bot));
        assert_eq!(d(r"THETA (\X. T X T)", Arity::Five), Decoded::Value(BotHA));
        assert_eq!(d(r"THETA (\X. T T X)", Arity::Three), Decoded::Value(T));
        let err = decode(
            &crate::parse::parse("OMEGA").unwrap(),
            Arity::Two,
            Style::Church,
            100,
            64,
        );
        assert!(matches!(err, Err(Error::NotBoolean(_))));
        let err = decode(
            &crate::parse::parse("I").unwrap(),
            Arity::Three,
            Style::Church,
            100,
            64,
        );
        assert!(matches!(err, Err(Error::NotATruthValue(_))));
    }

    #[test]
    fn table_cells() {
        let t = truth_table(Connective::Conj, Arity::Three, Style::Church, DEFAULT_FUEL).unwrap();
        assert_eq!(t.get(&[Bot, T]), Some(Bot));
        assert_eq!(t.get(&[F, Bot]), Some(F));
        let t = truth_table(Connective::Disj, Arity::Five, Style::Church, DEFAULT_FUEL).unwrap();
        assert_eq!(t.get(&[F, BotIL]), Some(BotIL));
        let t = truth_table(Connective::Impl, Arity::Three, Style::Church, DEFAULT_FUEL).unwrap();
        assert_eq!(t.get(&[F, Bot]), Some(T));
    }

    #[test]
    fn rendering() {
        let t = truth_table(Connective::Neg, Arity::Two, Style::Church, 100).unwrap();
        assert_eq!(t.render(), "~   |\n----+----\nT   | F\nF   | T\n");
    }
}
