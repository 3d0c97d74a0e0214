//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*')? factor)*        juxtaposition multiplies
//! factor  := '-' factor | base
//! base    := primary ('^' integer)?
//! primary := integer | identifier | '(' expr ')'
//! ```
//!
//! An identifier that is not a declared variable is split greedily into a
//! product of declared variables, so `yz^3` over (x,y,z) reads as `y*z^3`
//! with the exponent binding to the final variable.

use num_bigint::BigInt;
use num_traits::Num;

use super::poly::Poly;
use super::{AlgebraError, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>, AlgebraError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = BigInt::from_str_radix(&digits, 10)
                    .map_err(|e| AlgebraError::Syntax(format!("bad integer `{digits}`: {e}")))?;
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(AlgebraError::Syntax(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

/// Split an identifier into declared variables, greedy longest match from
/// the left. `yz` over (x,y,z) gives [y, z]; a declared name wins whole.
fn split_ident(ring: &Ring, ident: &str) -> Result<Vec<usize>, AlgebraError> {
    if let Some(idx) = ring.var_index(ident) {
        return Ok(vec![idx]);
    }
    let mut rest = ident;
    let mut parts = Vec::new();
    'outer: while !rest.is_empty() {
        let mut len = rest.len();
        while len > 0 {
            if let Some(idx) = ring.var_index(&rest[..len]) {
                parts.push(idx);
                rest = &rest[len..];
                continue 'outer;
            }
            len -= 1;
        }
        return Err(AlgebraError::UnknownVariable(ident.to_string()));
    }
    Ok(parts)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition: a factor can start right here
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, AlgebraError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        self.base()
    }

    fn base(&mut self) -> Result<Poly, AlgebraError> {
        let p = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(p.pow(e));
        }
        Ok(p)
    }

    fn exponent(&mut self) -> Result<u32, AlgebraError> {
        match self.bump() {
            Some(Token::Int(n)) => u32::try_from(&n)
                .map_err(|_| AlgebraError::Syntax(format!("exponent `{n}` out of range"))),
            other => Err(AlgebraError::Syntax(format!(
                "expected integer exponent after `^`, found {other:?}"
            ))),
        }
    }

    fn primary(&mut self) -> Result<Poly, AlgebraError> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(Poly::constant(self.ring, n)),
            Some(Token::Ident(name)) => {
                let vars = split_ident(self.ring, &name)?;
                let (last, head) = vars.split_last().expect("split_ident is nonempty");
                let mut acc = Poly::one(self.ring);
                for &v in head {
                    acc = acc.mul(&Poly::var(self.ring, v));
                }
                // an exponent following a split identifier binds to its last variable
                let mut last_poly = Poly::var(self.ring, *last);
                if matches!(self.peek(), Some(Token::Caret)) {
                    self.pos += 1;
                    let e = self.exponent()?;
                    last_poly = last_poly.pow(e);
                }
                Ok(acc.mul(&last_poly))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(AlgebraError::Syntax(format!("expected `)`, found {other:?}"))),
                }
            }
            other => Err(AlgebraError::Syntax(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an expression into a (possibly inhomogeneous, possibly zero)
/// polynomial over the given ring.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly, AlgebraError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Syntax("empty expression".into()));
    }
    let mut parser = Parser { ring, tokens, pos: 0 };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(AlgebraError::Syntax(format!(
            "trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(vec!["x".into(), "y".into(), "z".into()]).unwrap()
    }

    #[test]
    fn juxtaposition_and_caret_binding() {
        let r = ring();
        let a = parse_poly("yz^3", &r).unwrap();
        let b = parse_poly("y*z^3", &r).unwrap();
        assert_eq!(a, b);
        let c = parse_poly("x^3(x+y+z)", &r).unwrap();
        let d = parse_poly("x^3*(x+y+z)", &r).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let p = parse_poly("(x+y)(x-y)", &r).unwrap();
        let q = parse_poly("x^2 - y^2", &r).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn cancellation_to_zero() {
        let r = ring();
        assert!(parse_poly("x - x", &r).unwrap().is_zero());
    }

    #[test]
    fn unknown_variable() {
        let r = ring();
        assert!(matches!(
            parse_poly("x + w", &r),
            Err(AlgebraError::UnknownVariable(_))
        ));
    }

    #[test]
    fn unary_minus_and_constants() {
        let r = ring();
        let p = parse_poly("-2x^2 + 3", &r).unwrap();
        let q = parse_poly("3 - 2*x^2", &r).unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_poly("2^3", &r).unwrap(), Poly::constant(&r, 8.into()));
    }

    #[test]
    fn syntax_errors() {
        let r = ring();
        assert!(parse_poly("", &r).is_err());
        assert!(parse_poly("x +", &r).is_err());
        assert!(parse_poly("(x", &r).is_err());
        assert!(parse_poly("x ^ y", &r).is_err());
        assert!(parse_poly("x $ y", &r).is_err());
    }
}
