//! Text and JSON forms of elements.

use super::{Basis, BasisKey, Element, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

/// One term of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JsonTerm {
    pub basis: String,
    pub key: String,
    pub num: String,
    pub den: String,
}

impl JsonTerm {
    pub(crate) fn new(basis: Basis, key: String, c: &Q) -> Self {
        JsonTerm {
            basis: basis.name().to_string(),
            key,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let rest = self.rest();
        let end = rest.find(|c| !pred(c)).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn number(&mut self) -> Result<Option<Q>> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Ok(None);
        }
        let num: BigInt = digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "bad integer".into(),
        })?;
        if self.eat('/') {
            let dpos = self.pos;
            let den = self.take_while(|c| c.is_ascii_digit());
            let den: BigInt = den.parse().map_err(|_| Error::Parse {
                pos: dpos,
                msg: "expected a denominator".into(),
            })?;
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: dpos,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Some(Q::new(num, den)));
        }
        Ok(Some(Q::from_integer(num)))
    }
}

/// Parses `M[212] + 3*M[1122] - 1/2*M[1]`. A bare number is a multiple of
/// the unit; `0` is the zero element. All named terms must share one basis,
/// which must be among `allowed`; elements without named terms get
/// `default_basis`.
pub fn parse_element<K: BasisKey>(
    s: &str,
    allowed: &[Basis],
    default_basis: Basis,
) -> Result<Element<K>> {
    let mut cur = Cursor { src: s, pos: 0 };
    let mut basis: Option<Basis> = None;
    let mut terms: Vec<(K, Q)> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.err("empty expression"));
            }
            break;
        }
        let mut sign = Q::one();
        if cur.eat('-') {
            sign = -sign;
        } else if !cur.eat('+') && !first {
            return Err(cur.err("expected `+` or `-`"));
        }
        first = false;
        cur.skip_ws();
        let coeff = cur.number()?;
        cur.skip_ws();
        let named = match coeff {
            Some(_) => cur.eat('*'),
            None => true,
        };
        let c = sign * coeff.unwrap_or_else(Q::one);
        if !named {
            terms.push((K::unit(), c));
            continue;
        }
        cur.skip_ws();
        let name_pos = cur.pos;
        let name = cur.take_while(|ch| ch.is_ascii_alphanumeric() || ch == '*');
        if name == "1" {
            terms.push((K::unit(), c));
            continue;
        }
        let b = Basis::from_name(name).ok_or_else(|| Error::Parse {
            pos: name_pos,
            msg: if name.is_empty() {
                "expected a basis name".into()
            } else {
                format!("unknown basis `{name}`")
            },
        })?;
        if !allowed.contains(&b) {
            return Err(Error::Parse {
                pos: name_pos,
                msg: format!("basis {b} is not valid here"),
            });
        }
        if let Some(prev) = basis {
            if prev != b {
                return Err(Error::BasisMismatch { left: prev, right: b });
            }
        }
        basis = Some(b);
        if !cur.eat('[') {
            return Err(cur.err("expected `[`"));
        }
        let key_pos = cur.pos;
        let key_src = cur.take_while(|ch| ch != ']');
        if !cur.eat(']') {
            return Err(cur.err("unclosed `[`"));
        }
        let key = K::parse_key(key_src.trim(), b).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + key_pos,
                msg,
            },
            other => other,
        })?;
        terms.push((key, c));
    }
    Ok(Element::from_terms(basis.unwrap_or(default_basis), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::PackedWord;
    use crate::freemod::q;

    fn parse(s: &str) -> Result<Element<PackedWord>> {
        parse_element(s, &[Basis::M, Basis::Phi], Basis::M)
    }

    #[test]
    fn round_trip() {
        for s in ["M[212] + 3*M[1122]", "-M[1] + 1/2*M[21]", "1 - M[1]", "Phi[2|13]"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
        assert!(parse("0").unwrap().is_zero());
        assert_eq!(parse("2").unwrap().coefficient(&PackedWord::empty()), q(2));
    }

    #[test]
    fn accumulates_repeats() {
        let x = parse("M[1] + M[1] - 2*M[1]").unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("M[12"), Err(Error::Parse { .. })));
        assert!(matches!(parse("M[13]"), Err(Error::InvalidKey { .. })));
        assert!(matches!(parse("X[1]"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse("M[1] M[2]"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(
            parse("M[1] + Phi[1]"),
            Err(Error::BasisMismatch { .. })
        ));
        assert!(matches!(parse("F[1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse("1/0*M[1]"), Err(Error::Parse { .. })));
    }

    #[test]
    fn json_terms() {
        let x = parse("M[1] - 3/2*M[12]").unwrap();
        let j = serde_json::to_string(&x.to_json_terms()).unwrap();
        assert_eq!(
            j,
            r#"[{"basis":"M","key":"1","num":"1","den":"1"},{"basis":"M","key":"12","num":"-3","den":"2"}]"#
        );
    }
}
