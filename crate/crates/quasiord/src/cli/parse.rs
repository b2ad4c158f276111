//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace-insensitive, no implicit multiplication):
//!
//! ```text
//! expr     := [sign] term (sign term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' natural]
//! atom     := rational | variable | '(' expr ')'
//! rational := digits ['/' digits]
//! variable := 'y' | 'x' nonzero-digit
//! ```

use crate::error::{Error, Result};
use crate::polyring::{MPoly, Rational, YPoly};
use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigUint),
    VarX(usize),
    VarY,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Token)>> {
        let mut lexer = Lexer { src: src.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            lexer.skip_ws();
            if lexer.pos >= lexer.src.len() {
                return Ok(out);
            }
            let start = lexer.pos;
            let token = lexer.next_token()?;
            out.push((start, token));
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_token(&mut self) -> Result<Token> {
        let c = self.src[self.pos];
        let simple = match c {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'^' => Some(Token::Caret),
            b'/' => Some(Token::Slash),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok(t);
        }
        if c == b'y' {
            self.pos += 1;
            return Ok(Token::VarY);
        }
        if c == b'x' {
            let digit = self.src.get(self.pos + 1).copied();
            match digit {
                Some(d @ b'1'..=b'9') => {
                    self.pos += 2;
                    return Ok(Token::VarX((d - b'0') as usize));
                }
                _ => {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: "variables are x1..x9 and y".into(),
                    })
                }
            }
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).expect("digits");
            let value = text
                .parse::<BigUint>()
                .map_err(|_| Error::Parse { pos: start, msg: "bad integer literal".into() })?;
            return Ok(Token::Number(value));
        }
        Err(Error::Parse { pos: self.pos, msg: format!("unexpected character '{}'", c as char) })
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    vars: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).map(|(_, t)| t.clone());
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.index += 1;
            Ok(())
        } else {
            Err(Error::Parse { pos: self.pos(), msg: format!("expected {what}") })
        }
    }

    fn expr(&mut self) -> Result<YPoly> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Plus | Token::Minus)) {
            negate = matches!(self.bump(), Some(Token::Minus));
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.index += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Token::Minus) => {
                    self.index += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<YPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.index += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<YPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.index += 1;
            let pos = self.pos();
            match self.bump() {
                Some(Token::Number(n)) => {
                    let exp = num_traits::ToPrimitive::to_u64(&n).ok_or_else(|| Error::Parse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    if exp > 4096 {
                        return Err(Error::Parse { pos, msg: "exponent too large".into() });
                    }
                    return Ok(base.pow(exp));
                }
                _ => return Err(Error::Parse { pos, msg: "expected a natural exponent".into() }),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<YPoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Number(n)) => {
                let mut value = Rational::from_integer(crate::polyring::Integer::from(n));
                if self.peek() == Some(&Token::Slash) {
                    self.index += 1;
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Token::Number(d)) => {
                            if d.is_zero() {
                                return Err(Error::Parse {
                                    pos: dpos,
                                    msg: "zero denominator".into(),
                                });
                            }
                            value /= Rational::from_integer(crate::polyring::Integer::from(d));
                        }
                        _ => {
                            return Err(Error::Parse {
                                pos: dpos,
                                msg: "expected a denominator".into(),
                            })
                        }
                    }
                }
                Ok(YPoly::constant(self.vars, MPoly::constant(self.vars, value)))
            }
            Some(Token::VarY) => Ok(YPoly::y_power(self.vars, 1)),
            Some(Token::VarX(i)) => {
                if i > self.vars {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unknown variable x{i}: only {} variable(s) declared", self.vars),
                    });
                }
                Ok(YPoly::constant(self.vars, MPoly::var(self.vars, i - 1)))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(Error::Parse { pos, msg: "expected a number, variable, or '('".into() }),
        }
    }
}

/// Parse an arbitrary polynomial expression. When `vars` is `None` the
/// variable count is inferred as the largest `x`-index present (at least 1).
pub fn parse_expression(text: &str, vars: Option<usize>) -> Result<(YPoly, usize)> {
    let tokens = Lexer::tokens(text)?;
    let inferred = tokens
        .iter()
        .filter_map(|(_, t)| match t {
            Token::VarX(i) => Some(*i),
            _ => None,
        })
        .max()
        .unwrap_or(1);
    let vars = match vars {
        Some(v) => {
            if v == 0 || v > 9 {
                return Err(Error::Contract("variable count must be between 1 and 9".into()));
            }
            v
        }
        None => inferred,
    };
    let end = text.len();
    let mut parser = Parser { tokens, index: 0, vars, end };
    let poly = parser.expr()?;
    if parser.index != parser.tokens.len() {
        return Err(Error::Parse { pos: parser.pos(), msg: "trailing input".into() });
    }
    Ok((poly, vars))
}

/// Parse a monic polynomial in `y` of positive degree, as required by the
/// analysis commands.
pub fn parse_poly(text: &str, vars: Option<usize>) -> Result<(YPoly, usize)> {
    let (poly, vars) = parse_expression(text, vars)?;
    if poly.is_zero() || poly.degree() == 0 || !poly.is_monic() {
        return Err(Error::Parse {
            pos: 0,
            msg: "polynomial must be monic of positive degree in y".into(),
        });
    }
    Ok((poly, vars))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_example() {
        let (p, vars) =
            parse_poly("y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2", None).unwrap();
        assert_eq!(vars, 2);
        assert_eq!(p, crate::testutil::example1());
    }

    #[test]
    fn parses_bare_y() {
        let (p, vars) = parse_poly("y", None).unwrap();
        assert_eq!(vars, 1);
        assert_eq!(p, YPoly::y_power(1, 1));
    }

    #[test]
    fn rejects_non_monic() {
        let err = parse_poly("2*y^2 - x1", None).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn rejects_unknown_variable() {
        let err = parse_poly("y^2 - x3", Some(2)).unwrap_err();
        let Error::Parse { msg, .. } = err else { panic!() };
        assert!(msg.contains("x3"));
    }

    #[test]
    fn rejects_implicit_multiplication() {
        assert!(parse_poly("y^2 - 2x1", None).is_err());
    }

    #[test]
    fn rational_coefficients_and_parens() {
        let (p, _) = parse_poly("(y + 1/2*x1)^2 - 1/4*x1^2", Some(1)).unwrap();
        // (y + x1/2)^2 - x1^2/4 = y^2 + x1 y
        let want = YPoly::from_coeffs_asc(
            1,
            vec![MPoly::zero(1), MPoly::var(1, 0), MPoly::one(1)],
        );
        assert_eq!(p, want);
    }

    #[test]
    fn error_positions_point_at_the_problem() {
        let err = parse_poly("y^2 - x1*", None).unwrap_err();
        let Error::Parse { pos, .. } = err else { panic!() };
        assert_eq!(pos, 9);
    }

    #[test]
    fn display_roundtrip_examples() {
        for f in [
            crate::testutil::example1(),
            crate::testutil::example2(),
            crate::testutil::example3(),
            crate::testutil::quartic_root(),
        ] {
            let printed = f.to_string();
            let (reparsed, _) = parse_poly(&printed, Some(2)).unwrap();
            assert_eq!(reparsed, f, "roundtrip failed for {printed}");
        }
    }
}
