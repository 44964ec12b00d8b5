//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! poly   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored; variable names match `[a-zA-Z_][a-zA-Z0-9_]*`.

use num_bigint::BigInt;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser { input: text.as_bytes(), pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.input.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return Err(self.error("expected a variable name")),
        }
        while self
            .input
            .get(self.pos)
            .map_or(false, |c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).unwrap().to_owned())
    }

    fn factor(&mut self, ctx: &VariableContext) -> Result<(usize, u32)> {
        let name = self.ident()?;
        let idx = ctx.index_of(&name).ok_or(Error::UnknownVariable(name))?;
        let exp = if self.eat(b'^') {
            let e = self.uint()?;
            u32::try_from(&e).map_err(|_| Error::ExponentOverflow)?
        } else {
            1
        };
        Ok((idx, exp))
    }

    fn term(&mut self, ctx: &VariableContext, field: Field) -> Result<(Vec<u32>, Scalar)> {
        let mut exps = vec![0u32; ctx.arity()];
        let starts_with_digit = matches!(self.peek(), Some(c) if c.is_ascii_digit());
        let coeff = if starts_with_digit {
            let n = self.uint()?;
            if self.eat(b'/') {
                let d = self.uint()?;
                Scalar::from_fraction(&n, &d, field)?
            } else {
                Scalar::from_bigint(&n, field)
            }
        } else {
            let (idx, e) = self.factor(ctx)?;
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::ExponentOverflow)?;
            Scalar::one(field)
        };
        while self.eat(b'*') {
            let (idx, e) = self.factor(ctx)?;
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok((exps, coeff))
    }
}

/// Parses `text` into a canonical polynomial over `ctx` with coefficients in
/// `field`.
pub fn parse_polynomial(text: &str, ctx: &VariableContext, field: Field) -> Result<Polynomial> {
    let mut p = Parser::new(text);
    let mut out = Polynomial::zero(ctx, field);
    let mut negate = match p.peek() {
        Some(b'-') => {
            p.bump();
            true
        }
        Some(b'+') => {
            p.bump();
            false
        }
        Some(_) => false,
        None => return Err(p.error("empty input")),
    };
    loop {
        let (exps, coeff) = p.term(ctx, field)?;
        let coeff = if negate { -&coeff } else { coeff };
        out.add_term(ctx.monomial(exps)?, coeff);
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.bump();
                negate = false;
            }
            Some(b'-') => {
                p.bump();
                negate = true;
            }
            Some(c) => return Err(p.error(format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_xy() -> VariableContext {
        VariableContext::lex(&["x", "y"]).unwrap()
    }

    #[test]
    fn parses_f2_for_n2() {
        let f = parse_polynomial("x^2*y^2 - y^4", &ctx_xy(), Field::Rationals).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "x^2*y^2 - y^4");
    }

    #[test]
    fn parses_zero() {
        let f = parse_polynomial("0", &ctx_xy(), Field::Rationals).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn merges_duplicate_terms_in_lowest_terms() {
        let f = parse_polynomial("1/2*x + 1/3*x", &ctx_xy(), Field::Rationals).unwrap();
        assert_eq!(f.to_string(), "5/6*x");
    }

    #[test]
    fn reports_position_on_syntax_error() {
        let err = parse_polynomial("x + $", &ctx_xy(), Field::Rationals).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 4, .. }), "{err:?}");
    }

    #[test]
    fn rejects_unknown_variable() {
        let err = parse_polynomial("x + t", &ctx_xy(), Field::Rationals).unwrap_err();
        assert_eq!(err, Error::UnknownVariable("t".into()));
    }

    #[test]
    fn rejects_zero_denominator() {
        let err = parse_polynomial("1/0*x", &ctx_xy(), Field::Rationals).unwrap_err();
        assert_eq!(err, Error::ZeroDenominator);
    }

    #[test]
    fn prime_field_coefficients_reduce() {
        let f5 = Field::prime(5).unwrap();
        let f = parse_polynomial("7*x + 1/2*y", &ctx_xy(), f5).unwrap();
        assert_eq!(f.to_string(), "2*x + 3*y");
        let err = parse_polynomial("1/5*x", &ctx_xy(), f5).unwrap_err();
        assert_eq!(err, Error::ZeroModulusDivision(5));
    }

    #[test]
    fn whitespace_is_ignored() {
        let a = parse_polynomial("  x ^ 2 * y - 3 ", &ctx_xy(), Field::Rationals).unwrap();
        let b = parse_polynomial("x^2*y-3", &ctx_xy(), Field::Rationals).unwrap();
        assert_eq!(a, b);
    }
}
