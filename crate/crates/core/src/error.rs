use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unresolved reference `{0}`")]
    UnresolvedRef(String),
    #[error("`{0}` is a preloaded definition and cannot be redefined")]
    ShadowsPreloaded(String),
    #[error("`{0}` is already defined")]
    Redefinition(String),
    #[error("definition `{name}` is not closed (free: {})", free.join(", "))]
    OpenDefinition { name: String, free: Vec<String> },
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("no β-redex at path {0}")]
    NotARedex(String),
    #[error("term is unsolvable ({0}) and has no Boolean reading")]
    NotBoolean(String),
    #[error("term reduces to `{0}`, which is not a truth value")]
    NotATruthValue(String),
    #[error("value {value} does not belong to the {arity}-valued logic")]
    ValueOutsideArity { value: String, arity: u8 },
    #[error("unsupported arity {0} (expected 2, 3, 4 or 5)")]
    BadArity(u8),
    #[error("unbound propositional variable `{0}`")]
    UnboundVariable(String),
    #[error("recursive name `{0}` is defined more than once")]
    DuplicateRec(String),
    #[error("undecided after the fuel/depth budget: {0}")]
    Undecided(String),
    #[error("not a λI-term: {0}")]
    NotLambdaI(String),
}
