//! Concrete syntax for terms:
//!
//! ```text
//! term  ::= ('\' | 'λ') ident+ '.' term | atom+
//! atom  ::= ident | '_|_' | '_HA' | '_IL' | '_O' | '_D' | '(' term ')'
//! ```
//!
//! An identifier bound by an enclosing abstraction is a variable. Otherwise
//! identifiers starting with an uppercase letter are references into the
//! [`DefEnv`], and everything else is a free variable.

use crate::error::Error;
use crate::term::{app, BotTag, DefEnv, Name, Term};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Lambda,
    Dot,
    Open,
    Close,
    Ident(String),
    Bot(BotTag),
}

fn is_ident_char(c: char) -> bool {
    (c.is_alphanumeric() || c == '_' || c == '\'') && c != 'λ'
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        match c {
            '\\' | 'λ' => {
                chars.next();
                out.push((pos, Tok::Lambda));
            }
            '.' => {
                chars.next();
                out.push((pos, Tok::Dot));
            }
            '(' => {
                chars.next();
                out.push((pos, Tok::Open));
            }
            ')' => {
                chars.next();
                out.push((pos, Tok::Close));
            }
            '⊥' => {
                chars.next();
                out.push((pos, Tok::Bot(BotTag::BotPlain)));
            }
            '_' => {
                let rest = &src[pos..];
                if rest.starts_with("_|_") {
                    for _ in 0..3 {
                        chars.next();
                    }
                    out.push((pos, Tok::Bot(BotTag::BotPlain)));
                    continue;
                }
                let mut end = pos;
                while let Some(&(i, c)) = chars.peek() {
                    if !is_ident_char(c) {
                        break;
                    }
                    end = i + c.len_utf8();
                    chars.next();
                }
                let word = &src[pos..end];
                let tag = BotTag::from_symbol(word).ok_or_else(|| Error::Syntax {
                    pos,
                    msg: format!("unknown constant `{word}`"),
                })?;
                out.push((pos, Tok::Bot(tag)));
            }
            c if is_ident_char(c) => {
                let mut end = pos;
                while let Some(&(i, c)) = chars.peek() {
                    if !is_ident_char(c) {
                        break;
                    }
                    end = i + c.len_utf8();
                    chars.next();
                }
                out.push((pos, Tok::Ident(src[pos..end].to_string())));
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    env: &'a DefEnv,
    scope: Vec<Name>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn term(&mut self) -> Result<Term, Error> {
        let mut acc: Option<Term> = None;
        loop {
            let (next, lambda_last) = match self.peek() {
                Some(Tok::Lambda) => (self.lambda()?, true),
                Some(Tok::Ident(_)) | Some(Tok::Bot(_)) | Some(Tok::Open) => (self.atom()?, false),
                _ => break,
            };
            acc = Some(match acc {
                None => next,
                Some(f) => app(f, next),
            });
            if lambda_last {
                break;
            }
        }
        match acc {
            Some(t) => Ok(t),
            None => self.err("expected a term"),
        }
    }

    fn lambda(&mut self) -> Result<Term, Error> {
        self.pos += 1;
        let mut binders = Vec::new();
        while let Some(Tok::Ident(x)) = self.peek() {
            binders.push(Name::from(x.as_str()));
            self.pos += 1;
        }
        if binders.is_empty() {
            return self.err("expected a binder after λ");
        }
        if self.peek() != Some(&Tok::Dot) {
            return self.err("expected `.` after binders");
        }
        self.pos += 1;
        let depth = self.scope.len();
        self.scope.extend(binders.iter().cloned());
        let body = self.term();
        self.scope.truncate(depth);
        let body = body?;
        Ok(binders
            .into_iter()
            .rev()
            .fold(body, |b, x| Term::Lam(x, Box::new(b))))
    }

    fn atom(&mut self) -> Result<Term, Error> {
        let (at, tok) = self.toks[self.pos].clone();
        self.pos += 1;
        match tok {
            Tok::Bot(tag) => Ok(Term::Const(tag)),
            Tok::Open => {
                let t = self.term()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(t)
            }
            Tok::Ident(x) => {
                if self.scope.iter().any(|b| **b == *x) {
                    return Ok(Term::Var(Name::from(x.as_str())));
                }
                let first = x.chars().next().unwrap_or('a');
                if first.is_uppercase() {
                    self.env.reference(&x).map_err(|_| Error::Syntax {
                        pos: at,
                        msg: format!("unresolved reference `{x}`"),
                    })
                } else {
                    Ok(Term::Var(Name::from(x.as_str())))
                }
            }
            _ => unreachable!("atom called on a non-atom token"),
        }
    }
}

/// Parses a term, resolving uppercase names in `env`.
pub fn parse_term(src: &str, env: &DefEnv) -> Result<Term, Error> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        env,
        scope: Vec::new(),
    };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(t)
}

/// Parses against the standard library.
pub fn parse(src: &str) -> Result<Term, Error> {
    parse_term(src, &DefEnv::standard())
}

/// A multi-definition script: `Name = term` lines followed by one query
/// term. Blank lines and `#` comments are ignored.
pub fn parse_script(src: &str, base: &DefEnv) -> Result<(DefEnv, Term), Error> {
    let mut env = base.clone();
    let mut query = None;
    let mut offset = 0;
    for line in src.lines() {
        let line_start = offset;
        offset += line.len() + 1;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if query.is_some() {
            return Err(Error::Syntax {
                pos: line_start,
                msg: "the query must be the last line".into(),
            });
        }
        let shift = |e: Error| match e {
            Error::Syntax { pos, msg } => Error::Syntax {
                pos: pos + line_start,
                msg,
            },
            other => other,
        };
        match text.split_once('=') {
            Some((name, body)) => {
                let name = name.trim();
                if name.is_empty() || !name.chars().all(is_ident_char) {
                    return Err(Error::Syntax {
                        pos: line_start,
                        msg: format!("bad definition name `{name}`"),
                    });
                }
                let body = parse_term(body, &env).map_err(shift)?;
                env.define(name, body)?;
            }
            None => query = Some(parse_term(text, &env).map_err(shift)?),
        }
    }
    let query = query.ok_or(Error::Syntax {
        pos: src.len(),
        msg: "script has no query term".into(),
    })?;
    Ok((env, query))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{alpha_eq, lam, var};

    #[test]
    fn multi_binder_sugar() {
        let t = parse(r"\x y. x").unwrap();
        assert_eq!(t, lam("x", lam("y", var("x"))));
        assert_eq!(parse("λx y. x").unwrap(), t);
    }

    #[test]
    fn application_is_left_associative() {
        let t = parse("a b c").unwrap();
        assert_eq!(t.to_string(), "a b c");
        assert_eq!(parse("a (b c)").unwrap().to_string(), "a (b c)");
    }

    #[test]
    fn lambda_extends_right() {
        let t = parse(r"a \x. x y").unwrap();
        assert_eq!(t.to_string(), r"a (\x. x y)");
    }

    #[test]
    fn bound_uppercase_is_a_variable() {
        let t = parse(r"THETA (\X. T T X)").unwrap();
        let reparsed = parse(&t.to_string()).unwrap();
        assert_eq!(t, reparsed);
    }

    #[test]
    fn constants_and_aliases() {
        let t = parse("_|_ _HA _IL _O _D").unwrap();
        assert_eq!(t.to_string(), "_|_ _HA _IL _O _D");
        assert!(alpha_eq(&parse("Ω").unwrap(), &parse("OMEGA").unwrap()));
        assert!(matches!(parse("_Q"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unresolved_reference_is_reported() {
        assert!(matches!(parse("NOPE x"), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse(r"(\x. x"),
            Err(Error::Syntax { pos: 6, .. })
        ));
        assert!(matches!(parse(r"\. x"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse("x )"), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn scripts_define_then_query() {
        let src = "# pairs\nPAIR = \\a b f. f a b\nFST = \\p. p T\nFST (PAIR x y)\n";
        let (env, q) = parse_script(src, &DefEnv::standard()).unwrap();
        assert!(env.get("PAIR").is_some());
        assert_eq!(q.to_string(), "FST (PAIR x y)");
    }

    #[test]
    fn scripts_cannot_shadow_the_library() {
        let err = parse_script("K = \\x. x\nK", &DefEnv::standard()).unwrap_err();
        assert_eq!(err, Error::ShadowsPreloaded("K".into()));
        let err = parse_script("Q = \\x. y\nQ", &DefEnv::standard()).unwrap_err();
        assert!(matches!(err, Error::OpenDefinition { .. }));
    }
}
