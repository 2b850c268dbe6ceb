//! A λ-calculus workbench for left-sequential (McCarthy-style) many-valued
//! propositional logic.
//!
//! Terms are reduced with explicit fuel budgets. Questions that are
//! undecidable in general (solvability, the HA/IL/O class of an unsolvable
//! term, finite normal forms) are answered with replayable cycle
//! certificates or with an honest `Unknown`.

pub mod axioms;
pub mod classify;
pub mod error;
pub mod lambdai;
pub mod logic;
pub mod parse;
pub mod prop;
pub mod reduce;
pub mod reproduce;
mod spine;
pub mod term;
pub mod trees;

pub use classify::{classify, is_root_active, is_solvable, Verdict, DEFAULT_DEPTH};
pub use error::Error;
pub use parse::{parse, parse_script, parse_term};
pub use reduce::{normalize, ReduceOutcome, DEFAULT_FUEL};
pub use term::{alpha_eq, canonicalize, free_vars, substitute, BotTag, DefEnv, NamelessTerm, Term};
