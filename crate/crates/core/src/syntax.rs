//! Concrete syntax for terms and problem files.
//!
//! ```text
//! term  := atom "." term            abstraction
//!        | { "(" atom atom ")" } Var suspension, outermost swapping first
//!        | "<>" | "<" term "," term ">"
//!        | sym term                  function application
//!        | atom
//!        | "(" term ")"
//! ```
//!
//! Atoms and function symbols start with a lowercase letter, variables with
//! an uppercase one. A lowercase identifier is an abstraction binder when
//! followed by `.`, a function symbol when followed by the start of a term,
//! and an atom otherwise.
//!
//! A problem file holds one problem per line: `t =? s` or `a #? t`. Lines
//! starting with `--` are comments.

use std::fmt;

use thiserror::Error;

use crate::term::{Atom, Permutation, Swapping, Term, VarName};
use crate::unify::{ProblemSet, UnifProblem};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Unit => f.write_str("<>"),
            Term::Pair(l, r) => write!(f, "<{l}, {r}>"),
            Term::Fun(sym, arg) => write!(f, "{sym} {arg}"),
            Term::Atom(a) => write!(f, "{a}"),
            Term::Abs(a, body) => write!(f, "{a}.{body}"),
            Term::Susp(p, x) => {
                for s in p.swaps() {
                    write!(f, "{s}")?;
                }
                write!(f, "{x}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lower(String),
    Upper(String),
    LAngle,
    RAngle,
    LParen,
    RParen,
    Comma,
    Dot,
    EqQ,
    FreshQ,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lower(s) | Tok::Upper(s) => format!("`{s}`"),
            Tok::LAngle => "`<`".into(),
            Tok::RAngle => "`>`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::EqQ => "`=?`".into(),
            Tok::FreshQ => "`#?`".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn starts_term(&self) -> bool {
        matches!(self, Tok::Lower(_) | Tok::Upper(_) | Tok::LAngle | Tok::LParen)
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str, line: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let err = |message: String| ParseError {
            line,
            column,
            message,
        };
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, width) = match c {
            '<' => (Tok::LAngle, 1),
            '>' => (Tok::RAngle, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            ',' => (Tok::Comma, 1),
            '.' => (Tok::Dot, 1),
            '=' | '#' => {
                if chars.get(i + 1) != Some(&'?') {
                    return Err(err(format!("expected `{c}?`")));
                }
                (if c == '=' { Tok::EqQ } else { Tok::FreshQ }, 2)
            }
            c if c.is_ascii_alphabetic() => {
                let end = chars[i..]
                    .iter()
                    .position(|c| !(c.is_ascii_alphanumeric() || *c == '_'))
                    .map_or(chars.len(), |n| i + n);
                let word: String = chars[i..end].iter().collect();
                let tok = if c.is_ascii_uppercase() {
                    Tok::Upper(word)
                } else {
                    Tok::Lower(word)
                };
                (tok, end - i)
            }
            other => return Err(err(format!("unexpected character `{other}`"))),
        };
        out.push(Spanned { tok, line, column });
        i += width;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, n: usize) -> &Tok {
        let idx = (self.pos + n).min(self.toks.len() - 1);
        &self.toks[idx].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError {
            line: s.line,
            column: s.column,
            message: message.into(),
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    /// `( lower lower )` followed by another swapping or a variable.
    fn at_swapping(&self) -> bool {
        matches!(
            (self.peek(), self.peek_at(1), self.peek_at(2), self.peek_at(3), self.peek_at(4)),
            (Tok::LParen, Tok::Lower(_), Tok::Lower(_), Tok::RParen, Tok::LParen | Tok::Upper(_))
        )
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::LAngle => {
                self.next();
                if *self.peek() == Tok::RAngle {
                    self.next();
                    return Ok(Term::Unit);
                }
                let l = self.term()?;
                self.expect(Tok::Comma)?;
                let r = self.term()?;
                self.expect(Tok::RAngle)?;
                Ok(Term::pair(l, r))
            }
            Tok::Upper(_) => self.suspension(),
            Tok::LParen if self.at_swapping() => self.suspension(),
            Tok::LParen => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Lower(name) => {
                self.next();
                if *self.peek() == Tok::Dot {
                    self.next();
                    let body = self.term()?;
                    Ok(Term::abs(Atom::new(name), body))
                } else if self.peek().starts_term() {
                    let arg = self.term()?;
                    Ok(Term::fun(name, arg))
                } else {
                    Ok(Term::atom(name))
                }
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn suspension(&mut self) -> Result<Term, ParseError> {
        let mut swaps = Vec::new();
        while *self.peek() == Tok::LParen {
            self.next();
            let first = self.atom()?;
            let second = self.atom()?;
            self.expect(Tok::RParen)?;
            swaps.push(Swapping::new(first, second));
        }
        match self.peek().clone() {
            Tok::Upper(x) => {
                self.next();
                Ok(Term::susp(Permutation::from_swaps(swaps), VarName::new(x)))
            }
            _ => Err(self.unexpected("a variable")),
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek().clone() {
            Tok::Lower(name) => {
                self.next();
                Ok(Atom::new(name))
            }
            _ => Err(self.unexpected("an atom")),
        }
    }

    fn problem(&mut self) -> Result<UnifProblem, ParseError> {
        if let (Tok::Lower(name), Tok::FreshQ) = (self.peek().clone(), self.peek_at(1)) {
            self.next();
            self.next();
            let t = self.term()?;
            return Ok(UnifProblem::Freshness(Atom::new(name), t));
        }
        let l = self.term()?;
        self.expect(Tok::EqQ)?;
        let r = self.term()?;
        Ok(UnifProblem::Equational(l, r))
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => Err(self.unexpected("end of input")),
        }
    }
}

fn parse_line<T>(
    input: &str,
    line: usize,
    f: impl FnOnce(&mut Parser) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser {
        toks: lex(input, line)?,
        pos: 0,
    };
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

/// Parses a single term. Newlines are treated as whitespace.
pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let joined = input.replace(['\n', '\r'], " ");
    parse_line(&joined, 1, Parser::term)
}

/// Parses one problem: `t =? s` or `a #? t`.
pub fn parse_problem(input: &str) -> Result<UnifProblem, ParseError> {
    parse_line(input, 1, Parser::problem)
}

pub fn parse_problem_file(input: &str) -> Result<ProblemSet, ParseError> {
    let mut problems = ProblemSet::new();
    for (idx, line) in input.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with("--") {
            continue;
        }
        problems.push(parse_line(line, idx + 1, Parser::problem)?);
    }
    Ok(problems)
}
