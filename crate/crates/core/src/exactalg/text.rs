//! Canonical text and JSON encodings of [`MPoly`].
//!
//! Text: terms in descending graded-lex order joined by ` + ` / ` - `,
//! factors joined by `*`, powers by `^`, e.g. `q*t^2 + q*t + t + 1`.
//! A coefficient is written only when its magnitude is not 1 (or the term is
//! constant). The zero polynomial is `0`.
//!
//! JSON: a list of `{"coeff": "<decimal>", "q": a, "t": b, "x": {"<k>": e}}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{MPoly, Monomial};
use crate::error::{Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    let mut push = |name: String, e: u32| match e {
        0 => {}
        1 => factors.push(name),
        _ => factors.push(format!("{name}^{e}")),
    };
    push("q".into(), m.q_exp());
    push("t".into(), m.t_exp());
    for (i, &e) in m.x_exps().iter().enumerate() {
        push(format!("x{}", i + 1), e);
    }
    write!(f, "{}", factors.join("*"))
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

fn parse_factor(tok: &str) -> Result<(Option<BigInt>, Monomial)> {
    let err = || Error::Parse(format!("bad factor `{tok}`"));
    if tok.chars().all(|c| c.is_ascii_digit()) && !tok.is_empty() {
        let c = BigInt::from_str(tok).map_err(|_| err())?;
        return Ok((Some(c), Monomial::one()));
    }
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err())?),
        None => (tok, 1),
    };
    let mono = match base {
        "q" => Monomial::q_pow(exp),
        "t" => Monomial::t_pow(exp),
        _ => {
            let idx = base
                .strip_prefix('x')
                .and_then(|s| s.strip_prefix('_').or(Some(s)))
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(err)?;
            Monomial::x_pow(idx, exp)
        }
    };
    Ok((None, mono))
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = MPoly::zero();
        let mut chars = compact.char_indices().peekable();
        let mut start = 0;
        let mut sign = BigInt::one();
        if let Some(&(_, c)) = chars.peek() {
            if c == '-' || c == '+' {
                if c == '-' {
                    sign = -sign;
                }
                chars.next();
                start = 1;
            }
        }
        let mut pieces: Vec<(BigInt, &str)> = Vec::new();
        for (i, c) in chars {
            if (c == '+' || c == '-') && i > start {
                pieces.push((sign.clone(), &compact[start..i]));
                sign = if c == '-' { -BigInt::one() } else { BigInt::one() };
                start = i + 1;
            }
        }
        pieces.push((sign, &compact[start..]));
        for (sign, term) in pieces {
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let mut coeff = sign;
            let mut mono = Monomial::one();
            for tok in term.split('*') {
                let (c, m) = parse_factor(tok)?;
                if let Some(c) = c {
                    coeff *= c;
                }
                mono = mono.mul(&m);
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub q: u32,
    pub t: u32,
    pub x: BTreeMap<String, u32>,
}

impl MPoly {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                q: m.q_exp(),
                t: m.t_exp(),
                x: m
                    .x_exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| ((i + 1).to_string(), e))
                    .collect(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("serializable")
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for term in terms {
            let c = BigInt::from_str(&term.coeff)
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", term.coeff)))?;
            let mut mono = Monomial::qt(term.q, term.t);
            for (k, &e) in &term.x {
                let idx: usize = k
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad x-index `{k}`")))?;
                mono = mono.mul(&Monomial::x_pow(idx, e));
            }
            out.add_term(mono, c);
        }
        Ok(out)
    }

    pub fn from_json(s: &str) -> Result<MPoly> {
        let terms: Vec<JsonTerm> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_terms(&terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        let p = &(&(MPoly::one() + MPoly::t()) * &(MPoly::one() + &MPoly::q() * &MPoly::t()))
            * &MPoly::one();
        assert_eq!(p.to_string(), "q*t^2 + q*t + t + 1");
        assert_eq!(MPoly::zero().to_string(), "0");
        let r = MPoly::one() - MPoly::q().pow(2);
        assert_eq!(r.to_string(), "-q^2 + 1");
        let s = &MPoly::x(3).scale(&BigInt::from(-3)) + &MPoly::constant(2);
        assert_eq!(s.to_string(), "-3*x3 + 2");
    }

    #[test]
    fn parse_examples() {
        let p: MPoly = "q*t^2 + q*t + t + 1".parse().unwrap();
        assert_eq!(p.to_string(), "q*t^2 + q*t + t + 1");
        let p: MPoly = "-3*x1^2*x3 - 2 + q".parse().unwrap();
        assert_eq!(p.to_string(), "-3*x1^2*x3 + q - 2");
        assert!("q*".parse::<MPoly>().is_err());
        assert!("y".parse::<MPoly>().is_err());
        assert!("x0".parse::<MPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let p: MPoly = "2*q*x2^3 - 1".parse().unwrap();
        let js = p.to_json();
        assert_eq!(
            js,
            r#"[{"coeff":"2","q":1,"t":0,"x":{"2":3}},{"coeff":"-1","q":0,"t":0,"x":{}}]"#
        );
        assert_eq!(MPoly::from_json(&js).unwrap(), p);
    }
}
