//! Operator words: compositions of atoms with a canonical text form.

use super::diagonal::{delta, delta_inverse, nabla, pi_op, theta};
use super::expr::{parse_alphabet, parse_sym};
use crate::error::{Error, Result};
use crate::qfield::{parse_rat, Rat};
use crate::symfunc::{perp, plethysm, Alphabet, SymFunc};
use std::fmt;

/// A symmetric-function argument together with its display label.
#[derive(Clone, Debug, PartialEq)]
pub struct Arg {
    pub label: String,
    pub f: SymFunc,
}

impl Arg {
    /// Parses `label` as an expression.
    pub fn parse(label: &str) -> Result<Arg> {
        Ok(Arg { label: label.trim().to_string(), f: parse_sym(label)? })
    }

    pub fn new(label: impl Into<String>, f: SymFunc) -> Arg {
        Arg { label: label.into(), f }
    }

    fn degree_shift(&self) -> Option<i32> {
        self.f.is_homogeneous().then(|| self.f.degree() as i32)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Atom {
    Nabla { inverse: bool },
    Delta { f: Arg, inverse: bool },
    DeltaPrime { f: Arg },
    Pi { inverse: bool },
    Theta { f: Arg },
    Mult { f: Arg },
    Skew { f: Arg },
    /// `F ↦ F[A]`.
    Pleth { label: String, a: Alphabet },
    Scalar { c: Rat },
}

impl Atom {
    pub fn apply(&self, x: &SymFunc) -> Result<SymFunc> {
        match self {
            Atom::Nabla { inverse } => nabla(x, *inverse),
            Atom::Delta { f, inverse: false } => delta(&f.f, x, false),
            Atom::Delta { f, inverse: true } => delta_inverse(&f.f, x, false),
            Atom::DeltaPrime { f } => delta(&f.f, x, true),
            Atom::Pi { inverse } => pi_op(x, *inverse),
            Atom::Theta { f } => theta(&f.f, x),
            Atom::Mult { f } => Ok(f.f.mul(x)),
            Atom::Skew { f } => Ok(perp(&f.f, x)),
            Atom::Pleth { a, .. } => Ok(plethysm(x, a)),
            Atom::Scalar { c } => Ok(x.scale(c)),
        }
    }

    /// Degree shift on homogeneous inputs, if the atom has one.
    pub fn degree_shift(&self) -> Option<i32> {
        match self {
            Atom::Nabla { .. } | Atom::Delta { .. } | Atom::DeltaPrime { .. } | Atom::Pi { .. } | Atom::Scalar { .. } => Some(0),
            Atom::Theta { f } | Atom::Mult { f } => f.degree_shift(),
            Atom::Skew { f } => f.degree_shift().map(|d| -d),
            Atom::Pleth { a, .. } => {
                let homogeneous = a.terms.iter().all(|t| t.uses_x);
                homogeneous.then_some(0)
            }
        }
    }

    pub fn inverse(&self) -> Result<Atom> {
        match self {
            Atom::Nabla { inverse } => Ok(Atom::Nabla { inverse: !inverse }),
            Atom::Delta { f, inverse } => Ok(Atom::Delta { f: f.clone(), inverse: !inverse }),
            Atom::Pi { inverse } => Ok(Atom::Pi { inverse: !inverse }),
            Atom::Scalar { c } => Ok(Atom::Scalar { c: c.inv()? }),
            Atom::Pleth { a, label } => {
                if a.terms.len() == 1 && a.terms[0].uses_x && !a.terms[0].eps {
                    let c = a.terms[0].scalar.inv()?;
                    Ok(Atom::Pleth { label: format!("X/({})", c.inv()?), a: Alphabet::x_times(c) })
                } else {
                    Err(Error::NotInvertible(format!("pleth({label})")))
                }
            }
            other => Err(Error::NotInvertible(other.to_string())),
        }
    }

    /// Parses one atom such as `theta(e3)`, `pi^-1`, `pleth(X+u)`, `scalar(q/2)`.
    pub fn parse<'a>(text: &'a str) -> Result<Atom> {
        let text = text.trim();
        let (body, inverse) = match text.strip_suffix("^-1") {
            Some(b) => (b.trim_end(), true),
            None => (text, false),
        };
        let (name, arg) = match body.find('(') {
            Some(i) if body.ends_with(')') => (&body[..i], Some(&body[i + 1..body.len() - 1])),
            Some(_) => return Err(Error::Parse(format!("unbalanced parentheses in '{text}'"))),
            None => (body, None),
        };
        let need = |a: Option<&'a str>| -> Result<&'a str> { a.ok_or_else(|| Error::Parse(format!("'{name}' needs an argument"))) };
        let atom = match name {
            "nabla" if arg.is_none() => Atom::Nabla { inverse: false },
            "pi" if arg.is_none() => Atom::Pi { inverse: false },
            "delta" => Atom::Delta { f: Arg::parse(need(arg)?)?, inverse: false },
            "delta_prime" => Atom::DeltaPrime { f: Arg::parse(need(arg)?)? },
            "theta" => Atom::Theta { f: Arg::parse(need(arg)?)? },
            "mult" => Atom::Mult { f: Arg::parse(need(arg)?)? },
            "skew" => Atom::Skew { f: Arg::parse(need(arg)?)? },
            "pleth" => {
                let a = need(arg)?;
                Atom::Pleth { label: a.trim().to_string(), a: parse_alphabet(a)? }
            }
            "scalar" => Atom::Scalar { c: parse_rat(need(arg)?)? },
            _ => return Err(Error::Parse(format!("unknown operator '{body}'"))),
        };
        if inverse {
            atom.inverse()
        } else {
            Ok(atom)
        }
    }

    pub fn is_atom_text(token: &str) -> bool {
        let name = token.split(['(', '^']).next().unwrap_or("");
        matches!(name, "nabla" | "pi" | "delta" | "delta_prime" | "theta" | "mult" | "skew" | "pleth" | "scalar")
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = |b: bool| if b { "^-1" } else { "" };
        match self {
            Atom::Nabla { inverse } => write!(f, "nabla{}", inv(*inverse)),
            Atom::Delta { f: a, inverse } => write!(f, "delta({}){}", a.label, inv(*inverse)),
            Atom::DeltaPrime { f: a } => write!(f, "delta_prime({})", a.label),
            Atom::Pi { inverse } => write!(f, "pi{}", inv(*inverse)),
            Atom::Theta { f: a } => write!(f, "theta({})", a.label),
            Atom::Mult { f: a } => write!(f, "mult({})", a.label),
            Atom::Skew { f: a } => write!(f, "skew({})", a.label),
            Atom::Pleth { label, .. } => write!(f, "pleth({label})"),
            Atom::Scalar { c } => write!(f, "scalar({c})"),
        }
    }
}

/// A linear combination of words; each word is a composition applied right to left.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOp {
    terms: Vec<(Rat, Vec<Atom>)>,
}

impl LinearOp {
    pub fn identity() -> LinearOp {
        LinearOp { terms: vec![(Rat::one(), Vec::new())] }
    }

    pub fn word(atoms: Vec<Atom>) -> LinearOp {
        LinearOp { terms: vec![(Rat::one(), atoms)] }
    }

    pub fn atom(a: Atom) -> LinearOp {
        LinearOp::word(vec![a])
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &LinearOp) -> LinearOp {
        let mut terms = Vec::new();
        for (a, w1) in &self.terms {
            for (b, w2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((a * b, w));
            }
        }
        LinearOp { terms }
    }

    pub fn add(&self, o: &LinearOp) -> LinearOp {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        LinearOp { terms }
    }

    pub fn scale(&self, c: &Rat) -> LinearOp {
        LinearOp { terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect() }
    }

    pub fn apply(&self, x: &SymFunc) -> Result<SymFunc> {
        let mut parts = Vec::with_capacity(self.terms.len());
        for (c, w) in &self.terms {
            let mut y = x.clone();
            for a in w.iter().rev() {
                y = a.apply(&y)?;
            }
            parts.push((c.clone(), y));
        }
        Ok(SymFunc::lincomb(parts.iter().map(|(c, y)| (c.clone(), y))))
    }

    /// Common degree shift of all words, if defined.
    pub fn degree_shift(&self) -> Option<i32> {
        let mut shifts = self.terms.iter().map(|(_, w)| w.iter().map(Atom::degree_shift).sum::<Option<i32>>());
        let first = shifts.next()??;
        shifts.all(|s| s == Some(first)).then_some(first)
    }

    /// Inverse of a single word.
    pub fn inverse(&self) -> Result<LinearOp> {
        match self.terms.as_slice() {
            [(c, w)] => {
                let atoms = w.iter().rev().map(Atom::inverse).collect::<Result<Vec<_>>>()?;
                Ok(LinearOp::word(atoms).scale(&c.inv()?))
            }
            _ => Err(Error::NotInvertible("linear combination of words".into())),
        }
    }

    /// Parses atoms separated by ` . ` or whitespace, e.g. `skew(h2) . theta(e3) . pi^-1`.
    pub fn parse(text: &str) -> Result<LinearOp> {
        let toks = split_top_level(text);
        if toks.is_empty() || toks == ["id"] {
            return Ok(LinearOp::identity());
        }
        Ok(LinearOp::word(toks.iter().map(|t| Atom::parse(t)).collect::<Result<_>>()?))
    }
}

/// Splits at whitespace or `.` outside parentheses and brackets.
pub(crate) fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in text.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (c.is_whitespace() || c == '.') {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Builds the composition of the listed atoms (leftmost applied last).
pub fn op_from_word(word: &[&str]) -> Result<LinearOp> {
    Ok(LinearOp::word(word.iter().map(|t| Atom::parse(t)).collect::<Result<_>>()?))
}

/// Parses `word operand`, e.g. `theta(e1) e1`: leading atoms followed by an expression.
pub fn parse_applied(text: &str) -> Result<(LinearOp, SymFunc)> {
    let toks = split_top_level(text);
    let n_atoms = toks.iter().take_while(|t| Atom::is_atom_text(t)).count();
    if n_atoms == toks.len() {
        return Err(Error::Parse(format!("no operand in '{text}'")));
    }
    let op = LinearOp::word(toks[..n_atoms].iter().map(|t| Atom::parse(t)).collect::<Result<_>>()?);
    let operand = parse_sym(&toks[n_atoms..].join(" "))?;
    Ok((op, operand))
}

impl fmt::Display for LinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &[Atom]| {
            if w.is_empty() {
                "id".to_string()
            } else {
                w.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" . ")
            }
        };
        if let [(c, w)] = self.terms.as_slice() {
            if c.is_one() {
                return f.write_str(&word(w));
            }
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, w)| format!("({c}) * [{}]", word(w))).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{e, h};

    #[test]
    fn canonical_text_round_trip() {
        let op = LinearOp::parse("skew(h2) . theta(e3) . pi^-1").unwrap();
        assert_eq!(op.to_string(), "skew(h2) . theta(e3) . pi^-1");
        assert_eq!(LinearOp::parse(&op.to_string()).unwrap(), op);
        assert_eq!(op.degree_shift(), Some(1));
    }

    #[test]
    fn words_apply() {
        let op = op_from_word(&["skew(h1)", "theta(e2)"]).unwrap();
        assert_eq!(op.apply(&e(1)).unwrap(), e(2));
        assert_eq!(op_from_word(&[]).unwrap().apply(&h(3)).unwrap(), h(3));
        let nn = op_from_word(&["nabla", "nabla^-1"]).unwrap();
        assert_eq!(nn.apply(&h(3)).unwrap(), h(3));
        assert!(Atom::parse("theta(e2)^-1").is_err());
        let (op, x) = parse_applied("theta(e1) e1").unwrap();
        assert_eq!(op.apply(&x).unwrap(), e(2));
    }
}
