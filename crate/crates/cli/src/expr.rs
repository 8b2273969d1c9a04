//! Expressions over the harmonic algebra.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '·') unary)*
//! unary := '-' unary | atom
//! atom  := INT ['/' INT] | '[' [INT (',' INT)*] ']' | '(' expr ')'
//! ```
//!
//! `*` is both scalar multiplication and the stuffle product; which one is
//! decided by the operand kinds when the expression is evaluated.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use mzv_core::{Coefficient, Combination, Index};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Rational(Coefficient),
    Index(Index),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{n}"),
            Token::Plus => f.write_str("'+'"),
            Token::Minus => f.write_str("'-'"),
            Token::Star => f.write_str("'*'"),
            Token::Slash => f.write_str("'/'"),
            Token::Comma => f.write_str("','"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
            Token::LBracket => f.write_str("'['"),
            Token::RBracket => f.write_str("']'"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                tokens.push((start, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' | '·' | '∗' => Token::Star,
            '/' => Token::Slash,
            ',' => Token::Comma,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '[' => Token::LBracket,
            ']' => Token::RBracket,
            other => {
                return Err(ParseError { position: i, message: format!("unexpected character {other:?}") });
            }
        };
        tokens.push((i, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.offset(), message: message.into() })
    }

    fn next(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        tok
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => self.error(format!("expected {want}, found {t}")),
            None => self.error(format!("expected {want}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Token::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            Some(t) => self.error(format!("expected an integer, found {t}")),
            None => self.error("expected an integer, found end of input"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Token::Int(_)) => {
                let p = self.int()?;
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    let at = self.offset();
                    let q = self.int()?;
                    if q.is_zero() {
                        return Err(ParseError { position: at, message: "zero denominator".to_string() });
                    }
                    return Ok(Expr::Rational(BigRational::new(p, q)));
                }
                Ok(Expr::Rational(BigRational::from_integer(p)))
            }
            Some(Token::LBracket) => {
                self.pos += 1;
                let mut parts = Vec::new();
                if let Some(Token::RBracket) = self.peek() {
                    self.pos += 1;
                    return Ok(Expr::Index(Index::empty()));
                }
                loop {
                    let at = self.offset();
                    let k = self.int()?;
                    let k = u32::try_from(&k)
                        .ok()
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| ParseError {
                            position: at,
                            message: format!("index entry {k} must be a positive integer"),
                        })?;
                    parts.push(k);
                    match self.next() {
                        Some(Token::Comma) => continue,
                        Some(Token::RBracket) => break,
                        _ => {
                            self.pos -= 1;
                            return self.error("expected ',' or ']' in index");
                        }
                    }
                }
                Ok(Expr::Index(Index::new(parts).expect("entries checked above")))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(t) => self.error(format!("unexpected {t}")),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.chars().count() };
    let expr = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let t = parser.peek().expect("in range").clone();
        return parser.error(format!("unexpected {t} after expression"));
    }
    Ok(expr)
}

enum Value {
    Scalar(Coefficient),
    Element(Combination),
}

impl Value {
    fn into_combination(self) -> Combination {
        match self {
            Value::Scalar(c) => Combination::term(Index::empty(), c),
            Value::Element(u) => u,
        }
    }
}

impl Expr {
    fn value(&self) -> Value {
        use Value::*;
        match self {
            Expr::Rational(c) => Scalar(c.clone()),
            Expr::Index(ix) => Element(Combination::from(ix.clone())),
            Expr::Neg(e) => match e.value() {
                Scalar(c) => Scalar(-c),
                Element(u) => Element(-&u),
            },
            Expr::Add(a, b) => match (a.value(), b.value()) {
                (Scalar(x), Scalar(y)) => Scalar(x + y),
                (x, y) => Element(&x.into_combination() + &y.into_combination()),
            },
            Expr::Sub(a, b) => match (a.value(), b.value()) {
                (Scalar(x), Scalar(y)) => Scalar(x - y),
                (x, y) => Element(&x.into_combination() - &y.into_combination()),
            },
            Expr::Mul(a, b) => match (a.value(), b.value()) {
                (Scalar(x), Scalar(y)) => Scalar(x * y),
                (Scalar(c), Element(u)) | (Element(u), Scalar(c)) => Element(u.scale(&c)),
                (Element(u), Element(v)) => Element(u.stuffle(&v)),
            },
        }
    }

    /// Evaluates to a combination; a bare scalar `c` becomes `c·[]`.
    pub fn evaluate(&self) -> Combination {
        self.value().into_combination()
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(text: &str) -> Result<Combination, ParseError> {
    Ok(parse_expression(text)?.evaluate())
}
