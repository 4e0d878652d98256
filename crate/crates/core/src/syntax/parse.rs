//! Recursive-descent parser for the ASCII formula grammar.
//!
//! ```text
//! imp    := junct ( "->" imp )?
//! junct  := unary ( ("&" unary)+ | ("|" unary)+ )?
//! unary  := "~" unary | atom
//! atom   := "p" digits | "bot" | "top" | "(" imp ")"
//! ifml   := "{" imp ("," imp)* "}" "=>" "{" imp ("," imp)* "}"
//! ```
//!
//! `&` and `|` share a precedence level, so mixing them without parentheses
//! is rejected. Chains of one connective nest to the right.

use std::collections::BTreeSet;

use thiserror::Error;

use super::formula::Formula;
use super::iformula::IFormula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("expected {expected} at position {pos}, found {found}")]
    Unexpected {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("letter index out of range at position {pos}")]
    BadLetter { pos: usize },
    #[error("parentheses required between & and | (position {pos})")]
    MixedJunction { pos: usize },
    #[error("i-formula side must be nonempty (position {pos})")]
    EmptySide { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::Unexpected { pos, .. }
            | ParseError::BadLetter { pos }
            | ParseError::MixedJunction { pos }
            | ParseError::EmptySide { pos } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Letter(u32),
    Bot,
    Top,
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Turnstile,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Letter(i) => format!("'p{i}'"),
            Tok::Bot => "'bot'".into(),
            Tok::Top => "'top'".into(),
            Tok::Not => "'~'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::Comma => "','".into(),
            Tok::Turnstile => "'=>'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b',' => Tok::Comma,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Turnstile
            }
            b'p' if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let index = text[i + 1..j]
                    .parse::<u32>()
                    .map_err(|_| ParseError::BadLetter { pos: start })?;
                i = j - 1;
                Tok::Letter(index)
            }
            b'b' if text[i..].starts_with("bot") && !ident_continues(bytes, i + 3) => {
                i += 2;
                Tok::Bot
            }
            b't' if text[i..].starts_with("top") && !ident_continues(bytes, i + 3) => {
                i += 2;
                Tok::Top
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError::UnexpectedChar { pos: start, ch });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

fn ident_continues(bytes: &[u8], at: usize) -> bool {
    bytes
        .get(at)
        .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].1.clone();
        if tok != Tok::End {
            self.at += 1;
        }
        tok
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::Unexpected {
            pos: self.pos(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.junction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn junction(&mut self) -> Result<Formula, ParseError> {
        let first = self.unary()?;
        let op = match self.peek() {
            Tok::And | Tok::Or => self.peek().clone(),
            _ => return Ok(first),
        };
        let mut operands = vec![first];
        loop {
            match self.peek() {
                t if *t == op => {
                    self.bump();
                    operands.push(self.unary()?);
                }
                Tok::And | Tok::Or => return Err(ParseError::MixedJunction { pos: self.pos() }),
                _ => break,
            }
        }
        Ok(if op == Tok::And {
            Formula::conj(operands)
        } else {
            Formula::disj(operands)
        })
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Not {
            self.bump();
            Ok(Formula::neg(self.unary()?))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Letter(i) => {
                self.bump();
                Ok(Formula::Letter(i))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.imp()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn side(&mut self) -> Result<BTreeSet<Formula>, ParseError> {
        let open = self.pos();
        self.expect(Tok::LBrace, "'{'")?;
        let mut out = BTreeSet::new();
        if *self.peek() == Tok::RBrace {
            return Err(ParseError::EmptySide { pos: open });
        }
        loop {
            out.insert(self.imp()?);
            match self.bump() {
                Tok::Comma => continue,
                Tok::RBrace => break,
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("',' or '}'"));
                }
            }
        }
        Ok(out)
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

/// Parses a formula in the ASCII grammar; `~a` becomes `a -> bot` and `top`
/// becomes `bot -> bot`.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = parser.imp()?;
    parser.finish()?;
    Ok(f)
}

/// Parses an i-formula written `{f1, f2} => {g1}`.
pub fn parse_iformula(text: &str) -> Result<IFormula, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let ante = parser.side()?;
    parser.expect(Tok::Turnstile, "'=>'")?;
    let succ = parser.side()?;
    parser.finish()?;
    // both sides were checked nonempty above
    Ok(IFormula::new(ante, succ).expect("nonempty sides"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: u32) -> Formula {
        Formula::letter(i)
    }

    #[test]
    fn grammar_cases() {
        assert_eq!(
            parse("p0 -> bot").unwrap(),
            Formula::imp(p(0), Formula::Bot)
        );
        assert_eq!(parse("~p0").unwrap(), Formula::imp(p(0), Formula::Bot));
        assert_eq!(
            parse("top").unwrap(),
            Formula::imp(Formula::Bot, Formula::Bot)
        );
        assert_eq!(
            parse("p0 -> p1 -> p2").unwrap(),
            Formula::imp(p(0), Formula::imp(p(1), p(2)))
        );
        assert_eq!(
            parse("~p0 & p1 -> p2").unwrap(),
            Formula::imp(Formula::and(Formula::neg(p(0)), p(1)), p(2))
        );
        assert_eq!(
            parse("p0 | p1 | p2").unwrap(),
            Formula::or(p(0), Formula::or(p(1), p(2)))
        );
        assert_eq!(parse(" ( p12 ) ").unwrap(), p(12));
    }

    #[test]
    fn mixed_junction_needs_parentheses() {
        let err = parse("p0 & p1 | p2").unwrap_err();
        assert_eq!(err, ParseError::MixedJunction { pos: 8 });
        assert!(parse("(p0 & p1) | p2").is_ok());
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse("p0 $").unwrap_err().position(), 3);
        assert_eq!(parse("p0 ->").unwrap_err().position(), 5);
        assert_eq!(parse("(p0").unwrap_err().position(), 3);
        assert!(matches!(
            parse("q").unwrap_err(),
            ParseError::UnexpectedChar { pos: 0, .. }
        ));
        assert!(parse("bottom").is_err());
        assert!(parse("p0 p1").is_err());
    }

    #[test]
    fn iformula_text() {
        let i = parse_iformula("{p0, p1 & p2} => {bot}").unwrap();
        assert_eq!(i.ante().len(), 2);
        assert!(i.succ().contains(&Formula::Bot));
        assert!(matches!(
            parse_iformula("{} => {p0}").unwrap_err(),
            ParseError::EmptySide { .. }
        ));
        assert!(parse_iformula("{p0} -> {p1}").is_err());
    }
}
