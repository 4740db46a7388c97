//! Text notation for trees and polynomials.
//!
//! ```text
//! poly  := '0' | ['+'|'-'] term (('+'|'-') term)*
//! term  := [coeff '*'] mono
//! coeff := integer ['/' positive-integer]
//! mono  := '*' | '(' mono{m} ')'
//! ```
//!
//! Whitespace is ignored. The branching arity `m` comes from the caller.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::context::GradedContext;
use crate::error::{Error, ParseError, Result};
use crate::poly::{Coeff, TreePolynomial};
use crate::tree::PlanarTree;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    m: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> core::result::Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.text[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, want: char) -> core::result::Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.error(alloc::format!("expected '{want}', found '{c}'")),
            None => self.error(alloc::format!("expected '{want}', found end of input")),
        }
    }

    fn integer(&mut self) -> core::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn coeff(&mut self) -> core::result::Result<Coeff, ParseError> {
        let numer = self.integer()?;
        if self.peek() == Some('/') {
            self.bump();
            let at = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(ParseError { position: at, message: "zero denominator".to_string() });
            }
            return Ok(Coeff::new(numer, denom));
        }
        Ok(Coeff::from_integer(numer))
    }

    fn mono(&mut self, shape: &mut Vec<u8>) -> core::result::Result<(), ParseError> {
        match self.peek() {
            Some('*') => {
                self.bump();
                shape.push(0);
                Ok(())
            }
            Some('(') => {
                self.bump();
                shape.push(1);
                for k in 0..self.m {
                    if self.peek() == Some(')') {
                        return self.error(alloc::format!("vertex has {k} children, expected {}", self.m));
                    }
                    self.mono(shape)?;
                }
                if self.peek() != Some(')') {
                    return self.error(alloc::format!("vertex has more than {} children", self.m));
                }
                self.bump();
                Ok(())
            }
            Some(c) => self.error(alloc::format!("expected '*' or '(', found '{c}'")),
            None => self.error("expected a monomial, found end of input"),
        }
    }

    fn tree(&mut self) -> core::result::Result<PlanarTree, ParseError> {
        let mut shape = Vec::new();
        self.mono(&mut shape)?;
        Ok(PlanarTree::from_shape_unchecked(self.m, shape))
    }

    fn term(&mut self) -> core::result::Result<(Coeff, PlanarTree), ParseError> {
        let c = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.coeff()?;
            self.expect('*')?;
            c
        } else {
            Coeff::one()
        };
        Ok((c, self.tree()?))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parses one tree in nonassociative notation.
pub fn parse_tree(m: usize, text: &str) -> Result<PlanarTree> {
    if m < 2 {
        return Err(Error::BranchingArity(m));
    }
    let mut p = Parser { text, pos: 0, m };
    let tree = p.tree()?;
    if !p.at_end() {
        return Err(p.error::<()>("trailing input").unwrap_err().into());
    }
    Ok(tree)
}

/// Parses a polynomial. Every term must have the same arity.
pub fn parse_poly(ctx: GradedContext, text: &str) -> Result<TreePolynomial> {
    let mut p = Parser { text, pos: 0, m: ctx.m() };
    if p.peek() == Some('0') {
        let save = p.pos;
        p.bump();
        if p.at_end() {
            return Ok(TreePolynomial::zero(ctx));
        }
        p.pos = save;
    }
    let mut terms: Vec<(PlanarTree, Coeff)> = Vec::new();
    let mut first = true;
    loop {
        let negative = match p.peek() {
            Some('+') => {
                p.bump();
                false
            }
            Some('-') => {
                p.bump();
                true
            }
            _ if first => false,
            Some(c) => return Err(p.error::<()>(alloc::format!("expected '+' or '-', found '{c}'")).unwrap_err().into()),
            None => break,
        };
        let start = {
            p.skip_ws();
            p.pos
        };
        let (c, tree) = p.term()?;
        if let Some((prev, _)) = terms.first() {
            if prev.arity() != tree.arity() {
                return Err(ParseError {
                    position: start,
                    message: alloc::format!("term has arity {}, expected {}", tree.arity(), prev.arity()),
                }
                .into());
            }
        }
        terms.push((tree, if negative { -c } else { c }));
        first = false;
        if p.at_end() {
            break;
        }
    }
    TreePolynomial::from_terms(ctx, terms)
}

/// Prints terms in descending path-lex order, leading monomial first.
impl fmt::Display for TreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (tree, c)) in self.terms().rev().enumerate() {
            let sign = match (k, c.is_negative()) {
                (0, false) => "",
                (0, true) => "- ",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sign)?;
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{tree}")?;
        }
        Ok(())
    }
}

pub fn print_poly(f: &TreePolynomial) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{self, EVEN_TERNARY as EVEN};

    #[test]
    fn parses_basis_forms() {
        let alpha = parse_poly(EVEN, "((***)**) + (*(***)*) + (**(***))").unwrap();
        assert_eq!(alpha, presets::alpha(EVEN));
        let t = parse_poly(EVEN, "(***)").unwrap();
        assert_eq!(t, TreePolynomial::monomial(EVEN, PlanarTree::generator(3).unwrap()).unwrap());
        let nu = parse_poly(EVEN, "(**(**(**(***))))").unwrap();
        assert_eq!(nu.len(), 1);
        assert_eq!(nu, presets::nu(EVEN));
    }

    #[test]
    fn whitespace_coefficients_and_signs() {
        let f = parse_poly(EVEN, " - 2 * ( * * (***) ) + 1/3*(*(***)*) -(***)** ");
        assert!(f.is_err());
        let f = parse_poly(EVEN, " - 2 * ( * * (***) ) + 1/3*(*(***)*)").unwrap();
        assert_eq!(f.to_string(), "1/3*(*(***)*) - 2*(**(***))");
        assert_eq!(parse_poly(EVEN, "0").unwrap(), TreePolynomial::zero(EVEN));
        assert_eq!(parse_poly(EVEN, "(***) - (***)").unwrap(), TreePolynomial::zero(EVEN));
    }

    #[test]
    fn printing_matches_rewrite_rule_layout() {
        let f = parse_poly(EVEN, "-(**(***)) - (*(***)*)").unwrap();
        assert_eq!(f.to_string(), "- (*(***)*) - (**(***))");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = |s: &str| match parse_poly(EVEN, s) {
            Err(Error::Parse(e)) => e.position,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err("(**)"), 3);
        assert_eq!(err("(****)"), 4);
        assert_eq!(err("(***) + "), 8);
        assert_eq!(err("(***) (***)"), 6);
        assert_eq!(err("1/0*(***)"), 2);
        // arity-inhomogeneous input
        assert_eq!(err("(***) + ((***)**)"), 8);
        assert!(parse_tree(3, "(***)x").is_err());
    }

    #[test]
    fn binary_trees() {
        let ctx = GradedContext::new(2, crate::context::Parity::Even).unwrap();
        let f = parse_poly(ctx, "((**)*) - (*(**))").unwrap();
        assert_eq!(f.to_string(), "((**)*) - (*(**))");
        assert!(parse_poly(ctx, "(***)").is_err());
    }
}
