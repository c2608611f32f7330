//! A small expression language for symmetric functions and alphabets.
//!
//! `expr := term (('+'|'-') term)*`, `term := factor (('*'|'/') factor)*`,
//! `factor := atom ('^' int)? | '-' factor | '(' expr ')'`, where an atom is an
//! integer, a field variable (`q`, `t`, ...), a basis literal `e3`, `h[2,1]`,
//! `s[2,1]`, `m[1,1]`, `p2`, or a modified Macdonald polynomial `H[2,1]`.

use crate::error::{Error, Result};
use crate::macdonald::modified_h;
use crate::qfield::{parse_rat, Rat, Var};
use crate::symfunc::{basis_element, Alphabet, Basis, Partition, SymFunc};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Parse(format!("at position {pos}: {msg}")))
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<SymFunc> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SymFunc> {
        let mut acc = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let f = self.factor()?;
            if c == b'*' {
                acc = acc.mul(&f);
            } else {
                if !f.is_constant() || f.is_zero() {
                    return err(at, "division by a non-scalar or zero");
                }
                acc = acc.scale(&(Rat::one() / f.constant_term()));
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SymFunc> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = self.peek() == Some(b'-');
            if neg {
                self.pos += 1;
            }
            let at = self.pos;
            let k = self.integer().ok_or_else(|| Error::Parse(format!("at position {at}: expected exponent")))?;
            if neg {
                if !base.is_constant() || base.is_zero() {
                    return err(at, "negative power of a non-scalar");
                }
                return Ok(SymFunc::scalar(base.constant_term().pow(-(k as i64))));
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Option<u32> {
        self.skip_ws();
        let st = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[st..self.pos]).ok()?.parse().ok()
    }

    fn bracket_partition(&mut self) -> Result<Partition> {
        let st = self.pos;
        let end = self.s[st..].iter().position(|&c| c == b']').map(|i| st + i);
        let Some(end) = end else { return err(st, "unclosed '['") };
        let inner = std::str::from_utf8(&self.s[st + 1..end]).unwrap();
        self.pos = end + 1;
        Partition::parse(inner).map_err(|e| Error::Parse(format!("at position {st}: {e}")))
    }

    fn atom(&mut self) -> Result<SymFunc> {
        let Some(c) = self.peek() else { return err(self.pos, "unexpected end of input") };
        let at = self.pos;
        if c == b'(' {
            self.pos += 1;
            let v = self.expr()?;
            if self.peek() != Some(b')') {
                return err(self.pos, "expected ')'");
            }
            self.pos += 1;
            return Ok(v);
        }
        if c.is_ascii_digit() {
            let n = self.integer().unwrap();
            return Ok(SymFunc::scalar(Rat::int(n as i64)));
        }
        if !c.is_ascii_alphabetic() {
            return err(at, format!("unexpected '{}'", c as char));
        }
        self.pos += 1;
        let next = self.s.get(self.pos).copied();
        let indexed = matches!(next, Some(b'[')) || next.is_some_and(|d| d.is_ascii_digit());
        if c == b'H' {
            if !indexed {
                return err(at, "expected H[partition]");
            }
            let mu = self.index()?;
            return modified_h(&mu).map_err(|e| Error::Parse(format!("at position {at}: {e}")));
        }
        if let Some(b) = Basis::from_letter(c as char).filter(|_| indexed) {
            let l = self.index()?;
            return Ok(basis_element(b, &l));
        }
        if let Some(v) = Var::from_name(&(c as char).to_string()) {
            return Ok(SymFunc::scalar(Rat::var(v)));
        }
        err(at, format!("unknown symbol '{}'", c as char))
    }

    fn index(&mut self) -> Result<Partition> {
        if self.s.get(self.pos) == Some(&b'[') {
            self.bracket_partition()
        } else {
            let n = self.integer().unwrap();
            Ok(Partition::row(n))
        }
    }
}

/// Parses a symmetric-function expression.
pub fn parse_sym(text: &str) -> Result<SymFunc> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos, format!("unexpected trailing input '{}'", &text[p.pos..]));
    }
    Ok(v)
}

/// Parses an alphabet linear in `X`, such as `X+u`, `q*X`, `X/M`, `-X`, `X*(1-q)`.
/// `M` abbreviates `(1-q)*(1-t)`.
pub fn parse_alphabet(text: &str) -> Result<Alphabet> {
    if text.contains('x') {
        return Err(Error::Parse("use 'X' for the alphabet variable".into()));
    }
    let r = parse_rat(&text.replace('X', "x").replace('M', "((1-q)*(1-t))"))?;
    if r.den().contains_var(Var::X) || r.num().degree_in(Var::X) > 1 {
        return Err(Error::Parse(format!("alphabet '{text}' is not linear in X")));
    }
    let c1 = r.coeff_in(Var::X, 1)?;
    let c0 = r.coeff_in(Var::X, 0)?;
    let mut a = Alphabet::empty();
    if !c1.is_zero() {
        a = a.plus(&Alphabet::x_times(c1));
    }
    if !c0.is_zero() {
        a = a.plus(&Alphabet::scalar(c0));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{e, h, s};

    #[test]
    fn literals() {
        assert_eq!(parse_sym("e3").unwrap(), e(3));
        assert_eq!(parse_sym("h[2,1]").unwrap(), h(2).mul(&h(1)));
        assert_eq!(parse_sym("s[2,1] - 2*e1^3").unwrap(), s(&Partition::new(&[2, 1])).sub(&e(1).pow(3).scale(&Rat::int(2))));
        assert_eq!(parse_sym("(q+t)*e1/2").unwrap(), e(1).scale(&((Rat::q() + Rat::t()) / Rat::int(2))));
        assert!(parse_sym("e1 +").is_err());
        let err = parse_sym("e1 $").unwrap_err().to_string();
        assert!(err.contains("position 3"), "{err}");
    }

    #[test]
    fn alphabets() {
        let a = parse_alphabet("X+u").unwrap();
        assert_eq!(a.pk(2), (Rat::one(), Rat::var_pow(Var::U, 2)));
        let b = parse_alphabet("X/M").unwrap();
        assert_eq!(b.pk(1).0, Rat::one() / Alphabet::m());
        assert!(parse_alphabet("X^2").is_err());
    }
}
