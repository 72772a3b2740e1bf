//! Text grammar for polynomials: integers, rationals `p/q`, variables,
//! `+ - * ^`, parentheses. `^` binds tighter than `*`, which binds tighter
//! than `+`/`-`; unary minus is allowed; whitespace is insignificant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::ring::Ctx;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
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
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_tok(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(text.parse::<BigInt>().unwrap())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Ident(text.to_string())
            }
            other => {
                return Err(AlgebraError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        Ok(Some((start, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
    ctx: Ctx,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.idx)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut neg = false;
        // Leading sign chain.
        while let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Minus => {
                    neg = !neg;
                    self.bump();
                }
                Tok::Plus => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some((_, Tok::Minus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some((_, Tok::Star)) = self.peek() {
            self.bump();
            let f = self.power()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some((_, Tok::Caret)) = self.peek() {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some((_, Tok::Int(k))) => {
                    let e: u32 = k.try_into().map_err(|_| AlgebraError::Syntax {
                        pos,
                        msg: "exponent out of range".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(AlgebraError::Syntax {
                    pos,
                    msg: "expected a nonnegative integer exponent after `^`".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.here();
        match self.bump() {
            Some((_, Tok::Int(n))) => {
                // Rational literal p/q binds tighter than `*`.
                if let Some((_, Tok::Slash)) = self.peek() {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some((_, Tok::Int(d))) => {
                            if d.is_zero() {
                                return Err(AlgebraError::Syntax {
                                    pos: dpos,
                                    msg: "zero denominator".into(),
                                });
                            }
                            Ok(Polynomial::constant(&self.ctx, BigRational::new(n, d)))
                        }
                        _ => Err(AlgebraError::Syntax {
                            pos: dpos,
                            msg: "expected an integer denominator after `/`".into(),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(
                        &self.ctx,
                        BigRational::from_integer(n),
                    ))
                }
            }
            Some((p, Tok::Ident(name))) => match self.ctx.var_index(&name) {
                Some(i) => Ok(Polynomial::var(&self.ctx, i)),
                None => Err(AlgebraError::Syntax {
                    pos: p,
                    msg: format!("unknown variable `{}`", name),
                }),
            },
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                let pos = self.here();
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    _ => Err(AlgebraError::Syntax {
                        pos,
                        msg: "expected `)`".into(),
                    }),
                }
            }
            Some((_, Tok::Minus)) => {
                let inner = self.power()?;
                Ok(inner.neg())
            }
            _ => Err(AlgebraError::Syntax {
                pos,
                msg: "expected a number, variable, or `(`".into(),
            }),
        }
    }
}

/// Parse a polynomial over the given ring.
pub fn parse_poly(src: &str, ctx: &Ctx) -> Result<Polynomial> {
    let mut lexer = Lexer::new(src);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    let mut parser = Parser {
        toks,
        idx: 0,
        end: src.len(),
        ctx: ctx.clone(),
    };
    let p = parser.expr()?;
    if let Some((pos, _)) = parser.peek() {
        return Err(AlgebraError::Syntax {
            pos: *pos,
            msg: "trailing input".into(),
        });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    #[test]
    fn paper_polynomial_two_terms() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let p = parse_poly("x^3 + x*y^2*z", &ctx).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "x^3 + x*y^2*z");
    }

    #[test]
    fn zero_literal() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        assert!(parse_poly("0", &ctx).unwrap().is_zero());
    }

    #[test]
    fn product_expands_to_six_terms() {
        let ctx = RingContext::new(&["x", "y", "z"], &["s", "t"], &[]).unwrap();
        let p = parse_poly("(x^2 + y^2*z - s)*(x - t)", &ctx).unwrap();
        // Oracle: distribute term by term.
        let a = parse_poly("x^2 + y^2*z - s", &ctx).unwrap();
        let b = parse_poly("x - t", &ctx).unwrap();
        let mut expect = Polynomial::zero(&ctx);
        for (m, c) in a.terms() {
            for (m2, c2) in b.terms() {
                expect = expect.add(&Polynomial::term(&ctx, m.mul(m2), c * c2));
            }
        }
        assert_eq!(p, expect);
        assert_eq!(p.num_terms(), 6);
    }

    #[test]
    fn unary_minus_and_rationals() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        let p = parse_poly("-x^2 + 1/2*x - 3", &ctx).unwrap();
        assert_eq!(p.to_string(), "-x^2 + 1/2*x - 3");
        let q = parse_poly("-(x - 1) - -x", &ctx).unwrap();
        assert_eq!(q.to_string(), "1");
    }

    #[test]
    fn errors_carry_positions() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        match parse_poly("x + w", &ctx) {
            Err(AlgebraError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse_poly("x + ", &ctx) {
            Err(AlgebraError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse_poly("x ^ y", &ctx) {
            Err(AlgebraError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {:?}", other),
        }
    }

    #[test]
    fn caret_binds_tighter_than_star_and_plus() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let p = parse_poly("2*x^2 + x*y^3", &ctx).unwrap();
        assert_eq!(p.total_degree(), 4);
        assert_eq!(p.to_string(), "x*y^3 + 2*x^2");
    }
}
