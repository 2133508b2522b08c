//! Text grammar for ideals:
//!
//! ```text
//! ideal  := term ("," term)*
//! term   := factor ("*" factor)*
//! factor := var ("^" uint)?
//! var    := "x" | "y" | "z"
//! ```
//!
//! Whitespace is insignificant; a repeated variable in one term multiplies.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn end_offset(&self) -> usize {
        self.src.len()
    }

    fn syntax<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos, message: message.into() })
    }

    fn term(&mut self) -> Result<Monomial> {
        let mut exps = [0u32; 3];
        loop {
            let (pos, c) = match self.bump() {
                Some(t) => t,
                None => return self.syntax(self.end_offset(), "expected a variable"),
            };
            let v = match c {
                'x' => 0,
                'y' => 1,
                'z' => 2,
                c if c.is_ascii_alphabetic() => return Err(Error::UnknownVariable { pos, name: c }),
                c => return self.syntax(pos, format!("expected a variable, found '{c}'")),
            };
            let mut e = 1u32;
            if let Some((_, '^')) = self.peek() {
                self.bump();
                e = self.uint()?;
            }
            exps[v] = exps[v]
                .checked_add(e)
                .ok_or_else(|| Error::Syntax { pos, message: "exponent overflow".into() })?;
            match self.peek() {
                Some((_, '*')) => {
                    self.bump();
                }
                Some((_, ',')) | None => return Ok(Monomial::from_exps(exps)),
                Some((p, c)) => return self.syntax(p, format!("expected '*' or ',', found '{c}'")),
            }
        }
    }

    fn uint(&mut self) -> Result<u32> {
        let start = match self.peek() {
            Some((p, c)) if c.is_ascii_digit() => p,
            Some((p, c)) => return self.syntax(p, format!("expected an exponent, found '{c}'")),
            None => return self.syntax(self.end_offset(), "expected an exponent"),
        };
        let mut value: u32 = 0;
        while let Some((_, c)) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d))
                .ok_or_else(|| Error::Syntax { pos: start, message: "exponent overflow".into() })?;
            self.bump();
        }
        Ok(value)
    }
}

/// Parses and minimalizes an ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lx = Lexer::new(text);
    if lx.peek().is_none() {
        return Err(Error::EmptyIdeal);
    }
    let mut gens = Vec::new();
    loop {
        gens.push(lx.term()?);
        match lx.bump() {
            None => break,
            Some((_, ',')) => continue,
            Some((p, c)) => return lx.syntax(p, format!("unexpected '{c}'")),
        }
    }
    Ok(MonomialIdeal::new(gens))
}
