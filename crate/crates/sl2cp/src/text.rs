//! Text forms of polynomials.
//!
//! Expanded polynomials are sums of terms, each term a product of an optional
//! signed integer coefficient and powers `z0`..`z3`, e.g.
//! `1*z0^2 + -1*z1^2 + -1*z2^1*z3^1` or `z0^2 - z1^2 - z2*z3`. The canonical
//! factored form is `z0^k * (z0^2 - s u)^e * ...` with `s` a perfect square.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use sl2cp_core::{CanonicalCP, Error, MultiPoly};

type Result<T> = std::result::Result<T, Error>;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadInput(msg.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(usize),
    U,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                out.push(Tok::Num(digits));
            }
            'z' => {
                chars.next();
                match chars.next() {
                    Some(d @ '0'..='3') => out.push(Tok::Var(d as usize - '0' as usize)),
                    _ => return Err(bad("variables are z0, z1, z2, z3")),
                }
            }
            'u' => {
                chars.next();
                out.push(Tok::U);
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                });
            }
            other => return Err(bad(format!("unexpected character {:?}", other))),
        }
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(bad(format!("expected {:?} at token {}", t, self.pos)))
        }
    }

    fn number(&mut self) -> Result<String> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(bad(format!("expected a number at token {}", self.pos))),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(&Tok::Caret) {
            self.number()?
                .parse()
                .map_err(|_| bad("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn done(&self) -> bool {
        self.pos == self.toks.len()
    }
}

/// Parses an expanded polynomial in `z0..z3`.
pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    let mut cur = Cursor {
        toks: lex(s)?,
        pos: 0,
    };
    if cur.done() {
        return Err(bad("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut first = true;
    while !cur.done() {
        let mut negative = false;
        if !first {
            match cur.peek() {
                Some(Tok::Plus) => {}
                Some(Tok::Minus) => negative = true,
                _ => return Err(bad(format!("expected + or - at token {}", cur.pos))),
            }
            cur.pos += 1;
        }
        first = false;
        while let Some(t @ (Tok::Plus | Tok::Minus)) = cur.peek() {
            negative ^= *t == Tok::Minus;
            cur.pos += 1;
        }
        let mut coeff = BigInt::from(1);
        let mut exps = [0u32; 4];
        loop {
            match cur.peek().cloned() {
                Some(Tok::Num(n)) => {
                    cur.pos += 1;
                    let k = cur.exponent()?;
                    coeff *= num_traits::pow(BigInt::from_str(&n).expect("digits"), k as usize);
                }
                Some(Tok::Var(i)) => {
                    cur.pos += 1;
                    exps[i] += cur.exponent()?;
                }
                _ => return Err(bad(format!("expected a factor at token {}", cur.pos))),
            }
            if !cur.eat(&Tok::Star) {
                break;
            }
        }
        terms.push((if negative { -coeff } else { coeff }, exps));
    }
    Ok(MultiPoly::from_terms(terms))
}

/// Parses the factored canonical form, e.g. `z0^3 * (z0^2 - 1 u)^1 * (z0^2 - 4 u)^2`.
/// A lone `1` is the empty product.
pub fn parse_canonical(s: &str) -> Result<CanonicalCP> {
    let mut cur = Cursor {
        toks: lex(s)?,
        pos: 0,
    };
    if cur.toks == [Tok::Num("1".into())] {
        return Ok(CanonicalCP::unit());
    }
    let mut d0 = 0u64;
    let mut factors: BTreeMap<u64, u64> = BTreeMap::new();
    loop {
        match cur.peek() {
            Some(Tok::Var(0)) => {
                cur.pos += 1;
                d0 += u64::from(cur.exponent()?);
            }
            Some(Tok::LParen) => {
                cur.pos += 1;
                cur.expect(&Tok::Var(0))?;
                cur.expect(&Tok::Caret)?;
                if cur.number()? != "2" {
                    return Err(bad("factors have the shape (z0^2 - s u)"));
                }
                cur.expect(&Tok::Minus)?;
                let s: u64 = match cur.peek() {
                    Some(Tok::U) => 1,
                    _ => cur
                        .number()?
                        .parse()
                        .map_err(|_| bad("factor out of range"))?,
                };
                cur.eat(&Tok::Star);
                cur.expect(&Tok::U)?;
                cur.expect(&Tok::RParen)?;
                let root = s.sqrt();
                if root * root != s || root == 0 {
                    return Err(bad(format!("{} is not a positive perfect square", s)));
                }
                *factors.entry(root).or_insert(0) += u64::from(cur.exponent()?);
            }
            _ => return Err(bad(format!("expected z0 or a factor at token {}", cur.pos))),
        }
        if cur.done() {
            break;
        }
        cur.expect(&Tok::Star)?;
    }
    factors.retain(|_, e| *e > 0);
    CanonicalCP::new(d0, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl2cp_core::poly::expand_canonical;

    #[test]
    fn display_round_trips() {
        let c = CanonicalCP::from_pairs(3, [(1, 1), (2, 2), (5, 1)]);
        assert_eq!(parse_canonical(&c.to_string()).unwrap(), c);
        let p = expand_canonical(&c);
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        assert_eq!(parse_canonical("1").unwrap(), CanonicalCP::unit());
    }

    #[test]
    fn human_forms() {
        let p = parse_poly("z0^2 - z1^2 - z2*z3").unwrap();
        assert_eq!(p, expand_canonical(&CanonicalCP::from_pairs(0, [(1, 1)])));
        let q = parse_poly("-3*z0 + 2^3 - - z1 + 0*z2").unwrap();
        assert_eq!(q.to_string(), "-3*z0^1 + 1*z1^1 + 8");
        assert_eq!(parse_poly("z0*z0").unwrap(), parse_poly("z0^2").unwrap());
        let c = parse_canonical("z0 * (z0^2 - u) * (z0^2 - 9*u)^2").unwrap();
        assert_eq!(c, CanonicalCP::from_pairs(1, [(1, 1), (3, 2)]));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "z4", "z0 +", "z0 ** 2", "x", "z0 z1"] {
            assert!(parse_poly(s).is_err(), "{:?}", s);
        }
        for s in [
            "(z0^2 - 2 u)",
            "(z0^3 - 4 u)",
            "z1",
            "z0 * ",
            "(z0^2 - 0 u)",
        ] {
            assert!(parse_canonical(s).is_err(), "{:?}", s);
        }
    }
}
