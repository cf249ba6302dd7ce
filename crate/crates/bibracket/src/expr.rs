//! Parser for element and tensor expressions.
//!
//! Elements: sums of terms like `2/3 * x*y^-1 - z^2 + e_pt`. `1` denotes
//! the total unit (the sum of all object units), `e_<obj>` a single object
//! unit. Tensor expressions join two element terms with the reserved
//! separator `(x)`, e.g. `(-1) * x (x) 1 + 1 (x) y`. Because `(x)` is
//! reserved, a parenthesized expression can never consist of the bare
//! identifier `x`.

use thiserror::Error;

use crate::algebra::{Algebra, Word};
use crate::ncpoly::NCPoly;
use crate::scalar::{int, ratio, Scalar};
use crate::tensor::TensorPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },
    #[error("unknown object unit `{name}`")]
    UnknownObjectUnit { name: String },
    #[error("negative power of a non-invertible element `{what}`")]
    InverseOfNonInvertible { what: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    TensorSep,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            '+' => {
                toks.push((start, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((start, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((start, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((start, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((start, Tok::Slash));
                i += 1;
            }
            '(' => {
                // the reserved tensor separator is exactly `(x)`
                if i + 2 < bytes.len() && bytes[i + 1] == b'x' && bytes[i + 2] == b')' {
                    toks.push((start, Tok::TensorSep));
                    i += 3;
                } else {
                    toks.push((start, Tok::LParen));
                    i += 1;
                }
            }
            ')' => {
                toks.push((start, Tok::RParen));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let mut j = i;
                while j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                    j += 1;
                }
                let n: u64 = input[i..j].parse().map_err(|_| ExprError::Syntax {
                    pos: start,
                    msg: "integer literal out of range".into(),
                })?;
                toks.push((start, Tok::Int(n)));
                i = j;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len() {
                    let cj = bytes[j] as char;
                    if cj.is_ascii_alphanumeric() || cj == '_' {
                        j += 1;
                    } else {
                        break;
                    }
                }
                toks.push((start, Tok::Ident(input[i..j].to_string())));
                i = j;
            }
            _ => {
                return Err(ExprError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    alg: &'a Algebra,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn err(&self, msg: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    /// expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<NCPoly, ExprError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// term := factor_pow (['*'] factor_pow)*  with `*` optional only
    /// before an explicit `*`; adjacency is not juxtaposition, so the
    /// grammar requires `*` between factors.
    fn term(&mut self) -> Result<NCPoly, ExprError> {
        let mut acc = self.factor_pow()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.mul(&self.factor_pow()?, self.alg);
        }
        Ok(acc)
    }

    /// factor_pow := factor ['^' ['-'] INT]
    fn factor_pow(&mut self) -> Result<NCPoly, ExprError> {
        let base = self.factor()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.bump();
        let mut neg = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            neg = true;
            self.bump();
        }
        let n = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => return Err(self.err("expected integer exponent after `^`")),
        };
        if !neg {
            return Ok(base.pow(n as u32, self.alg));
        }
        let inv = self.invert(&base)?;
        Ok(inv.pow(n as u32, self.alg))
    }

    fn invert(&self, p: &NCPoly) -> Result<NCPoly, ExprError> {
        let mut terms = p.terms();
        let only = match (terms.next(), terms.next()) {
            (Some(t), None) => t,
            _ => {
                return Err(ExprError::InverseOfNonInvertible {
                    what: p.display(self.alg),
                })
            }
        };
        let (word, coeff) = only;
        let wi = word
            .inverse(self.alg)
            .ok_or_else(|| ExprError::InverseOfNonInvertible {
                what: word.display(self.alg),
            })?;
        Ok(NCPoly::from_term(wi, int(1) / coeff.clone()))
    }

    /// factor := INT ['/' INT] | IDENT | '1' (as INT) | '(' expr ')'
    fn factor(&mut self) -> Result<NCPoly, ExprError> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut c: Scalar = int(n as i64);
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) if d != 0 => {
                            c = ratio(n as i64, d as i64);
                        }
                        Some(Tok::Int(_)) => return Err(self.err("zero denominator")),
                        _ => return Err(self.err("expected integer denominator after `/`")),
                    }
                }
                Ok(NCPoly::one(self.alg).scale(&c))
            }
            Some(Tok::Ident(name)) => self.ident_poly(&name),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(Tok::Minus) => {
                // unary minus inside parentheses, e.g. `(-1)`
                let inner = self.factor_pow()?;
                Ok(inner.neg())
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn ident_poly(&self, name: &str) -> Result<NCPoly, ExprError> {
        if let Some(g) = self.alg.lookup(name) {
            return Ok(NCPoly::gen(self.alg, g));
        }
        if let Some(rest) = name.strip_prefix("e_") {
            if let Some(obj) = self.alg.lookup_object(rest) {
                return Ok(NCPoly::unit_at(obj));
            }
            return Err(ExprError::UnknownObjectUnit {
                name: name.to_string(),
            });
        }
        Err(ExprError::UnknownGenerator {
            name: name.to_string(),
        })
    }

    /// tensor2 := ['-'] ttag (('+'|'-') ttag)* where ttag := term '(x)' term
    fn tensor2(&mut self) -> Result<TensorPoly, ExprError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let first = self.tensor_term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.tensor_term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.tensor_term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn tensor_term(&mut self) -> Result<TensorPoly, ExprError> {
        let left = self.term()?;
        match self.bump() {
            Some(Tok::TensorSep) => {}
            _ => return Err(self.err("expected tensor separator `(x)`")),
        }
        let right = self.term()?;
        Ok(TensorPoly::tensor2(&left, &right))
    }

    fn finish(&self) -> Result<(), ExprError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }
}

pub fn parse_element(alg: &Algebra, input: &str) -> Result<NCPoly, ExprError> {
    let toks = tokenize(input)?;
    let mut p = Parser { alg, toks, pos: 0 };
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

pub fn parse_tensor2(alg: &Algebra, input: &str) -> Result<TensorPoly, ExprError> {
    let toks = tokenize(input)?;
    // `0` denotes the zero tensor
    if toks.len() == 1 && toks[0].1 == Tok::Int(0) {
        return Ok(TensorPoly::zero(2));
    }
    let mut p = Parser { alg, toks, pos: 0 };
    let out = p.tensor2()?;
    p.finish()?;
    Ok(out)
}

/// Parse a single word (a monomial with coefficient 1), as used for
/// bibracket table keys and CLI arguments.
pub fn parse_word(alg: &Algebra, input: &str) -> Result<Word, ExprError> {
    let poly = parse_element(alg, input)?;
    let mut terms = poly.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if *c == int(1) => Ok(w.clone()),
        _ => Err(ExprError::Syntax {
            pos: 0,
            msg: format!("`{input}` is not a single monomial with coefficient 1"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::single_object;

    fn fixture() -> (Algebra, Vec<crate::algebra::GenId>) {
        single_object(&[("x", 0, true), ("y", 1, false), ("z", 2, false)])
    }

    #[test]
    fn parses_sums_and_powers() {
        let (alg, ids) = fixture();
        let y = NCPoly::gen(&alg, ids[1]);
        let z = NCPoly::gen(&alg, ids[2]);
        let got = parse_element(&alg, "2*y*z - z^2 + 1/2 * y").unwrap();
        let want = y
            .mul(&z, &alg)
            .scale(&int(2))
            .sub(&z.mul(&z, &alg))
            .add(&y.scale(&ratio(1, 2)));
        assert_eq!(got, want);
    }

    #[test]
    fn parses_inverses() {
        let (alg, ids) = fixture();
        let got = parse_element(&alg, "x^-1 * x").unwrap();
        assert_eq!(got, NCPoly::one(&alg));
        let got = parse_element(&alg, "x^-2 * x^2").unwrap();
        assert_eq!(got, NCPoly::one(&alg));
        let err = parse_element(&alg, "y^-1").unwrap_err();
        assert!(matches!(err, ExprError::InverseOfNonInvertible { .. }));
        let _ = ids;
    }

    #[test]
    fn parses_units_and_parens() {
        let (alg, ids) = fixture();
        assert_eq!(parse_element(&alg, "1").unwrap(), NCPoly::one(&alg));
        assert_eq!(
            parse_element(&alg, "e_pt").unwrap(),
            NCPoly::one(&alg),
            "single object: e_pt is the unit"
        );
        let y = NCPoly::gen(&alg, ids[1]);
        let got = parse_element(&alg, "(-1) * (y + y)").unwrap();
        assert_eq!(got, y.scale(&int(-2)));
    }

    #[test]
    fn unknown_names_error() {
        let (alg, _) = fixture();
        assert!(matches!(
            parse_element(&alg, "w"),
            Err(ExprError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            parse_element(&alg, "e_nowhere"),
            Err(ExprError::UnknownObjectUnit { .. })
        ));
    }

    #[test]
    fn parses_tensors() {
        let (alg, ids) = fixture();
        let y = NCPoly::gen(&alg, ids[1]);
        let one = NCPoly::one(&alg);
        let got = parse_tensor2(&alg, "(-1) * x (x) 1 + 1 (x) y").unwrap();
        let x = NCPoly::gen(&alg, ids[0]);
        let want = TensorPoly::tensor2(&x.neg(), &one).add(&TensorPoly::tensor2(&one, &y));
        assert_eq!(got, want);
        assert!(parse_tensor2(&alg, "0").unwrap().is_zero());
        // `(x)` is the separator, never a parenthesized generator
        assert!(parse_tensor2(&alg, "y (x) x^-1").is_ok());
    }

    #[test]
    fn word_parsing() {
        let (alg, _) = fixture();
        let w = parse_word(&alg, "x*y*x^-1").unwrap();
        assert_eq!(w.display(&alg), "x*y*x^-1");
        assert!(parse_word(&alg, "2*y").is_err());
        assert!(parse_word(&alg, "y + y").is_err());
    }
}
