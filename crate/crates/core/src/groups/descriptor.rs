//! Group descriptors: `sl<n>:<p>`, `psl<n>:<p>`, `cyclic:<m>^<k>`,
//! `prod(<desc>,<desc>,...)` and `z`.
//!
//! Syntax problems are [`Error::Parse`]; well-formed descriptors naming an
//! unsupported group fail with the validation error instead.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{psl_element, sl_element, Element, GroupSpec};
use crate::error::{Error, Result};
use crate::field::is_prime;

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (spec, rest) = parse_desc(s)?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse(format!("trailing input {rest:?} in {s:?}")));
        }
        Ok(spec)
    }
}

impl GroupSpec {
    /// Parses one element: whitespace-separated integers, row-major for
    /// matrix groups, with product components separated by `|`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let ints = |t: &str| -> Result<Vec<i64>> {
            t.split_whitespace()
                .map(|w| w.parse().map_err(|_| Error::Parse(format!("bad integer {w:?}"))))
                .collect()
        };
        let x = match self {
            GroupSpec::Sl { n, p } => sl_element(*n, *p as u64, &ints(text)?)?,
            GroupSpec::Psl { n, p } => psl_element(*n, *p as u64, &ints(text)?)?,
            GroupSpec::CyclicPower { modulus, .. } => Element::Vector(
                ints(text)?
                    .into_iter()
                    .map(|c| c.rem_euclid(*modulus as i64) as u32)
                    .collect(),
            ),
            GroupSpec::Integers => Element::Integer(
                BigInt::from_str(text.trim()).map_err(|_| Error::Parse(format!("bad integer {text:?}")))?,
            ),
            GroupSpec::Product(fs) => {
                let parts: Vec<&str> = text.split('|').collect();
                if parts.len() != fs.len() {
                    return Err(Error::DimensionMismatch(fs.len(), parts.len()));
                }
                Element::Tuple(fs.iter().zip(parts).map(|(f, t)| f.parse_element(t)).collect::<Result<_>>()?)
            }
            GroupSpec::Cayley(_) => {
                let [i] = ints(text)?[..] else {
                    return Err(Error::Parse(format!("expected one table index in {text:?}")));
                };
                Element::Table(u32::try_from(i).map_err(|_| Error::Parse(format!("bad index {i}")))?)
            }
        };
        self.check_member(&x)?;
        Ok(x)
    }
}

fn parse_uint<'a>(s: &'a str, what: &str) -> Result<(u64, &'a str)> {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if end == 0 {
        return Err(Error::Parse(format!("expected {what} at {s:?}")));
    }
    let v = s[..end]
        .parse()
        .map_err(|_| Error::Parse(format!("{what} too large in {s:?}")))?;
    Ok((v, &s[end..]))
}

fn expect<'a>(s: &'a str, token: &str) -> Result<&'a str> {
    s.strip_prefix(token)
        .ok_or_else(|| Error::Parse(format!("expected {token:?} at {s:?}")))
}

fn parse_desc(s: &str) -> Result<(GroupSpec, &str)> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix("prod(") {
        let mut factors = Vec::new();
        let mut rest = rest;
        loop {
            let (f, r) = parse_desc(rest)?;
            factors.push(f);
            let r = r.trim_start();
            if let Some(r) = r.strip_prefix(',') {
                rest = r;
            } else {
                rest = expect(r, ")")?;
                break;
            }
        }
        if factors.len() < 2 {
            return Err(Error::Parse("prod(...) needs at least two factors".into()));
        }
        return Ok((GroupSpec::product(factors)?, rest));
    }
    if let Some(rest) = s.strip_prefix("cyclic:") {
        let (m, rest) = parse_uint(rest, "modulus")?;
        let rest = expect(rest, "^")?;
        let (k, rest) = parse_uint(rest, "exponent")?;
        if m < 2 || k == 0 || m > u16::MAX as u64 || k > 16 {
            return Err(Error::Unsupported(format!("cyclic:{m}^{k}")));
        }
        return Ok((GroupSpec::cyclic_power(m as u32, k as usize)?, rest));
    }
    let (projective, rest) = if let Some(r) = s.strip_prefix("psl") {
        (true, r)
    } else if let Some(r) = s.strip_prefix("sl") {
        (false, r)
    } else if let Some(r) = s.strip_prefix('z') {
        return Ok((GroupSpec::Integers, r));
    } else {
        return Err(Error::Parse(format!("unknown group descriptor {s:?}")));
    };
    let (n, rest) = parse_uint(rest, "dimension")?;
    let rest = expect(rest, ":")?;
    let (p, rest) = parse_uint(rest, "prime")?;
    if p < 3 || !is_prime(p) {
        return Err(Error::Unsupported(format!("p must be prime ≥ 3, got {p}")));
    }
    let spec = if projective {
        GroupSpec::psl(n as usize, p)?
    } else {
        GroupSpec::sl(n as usize, p)?
    };
    Ok((spec, rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for d in ["sl2:5", "psl2:7", "cyclic:5^3", "z", "prod(psl2:5,psl2:7)", "sl3:3"] {
            let g: GroupSpec = d.parse().unwrap();
            assert_eq!(g.to_string(), d);
        }
        let nested: GroupSpec = "prod( psl2:5 , prod(cyclic:2^2,sl2:3))".parse().unwrap();
        assert_eq!(nested.to_string(), "prod(psl2:5,prod(cyclic:2^2,sl2:3))");
    }

    #[test]
    fn syntax_vs_validation() {
        assert!(matches!("psl2:4".parse::<GroupSpec>(), Err(Error::Unsupported(_))));
        assert!(matches!("sl2:2".parse::<GroupSpec>(), Err(Error::Unsupported(_))));
        assert!(matches!("cyclic:1^3".parse::<GroupSpec>(), Err(Error::Unsupported(_))));
        assert!(matches!("gl2:5".parse::<GroupSpec>(), Err(Error::Parse(_))));
        assert!(matches!("psl2".parse::<GroupSpec>(), Err(Error::Parse(_))));
        assert!(matches!("prod(psl2:5)".parse::<GroupSpec>(), Err(Error::Parse(_))));
        assert!(matches!("psl2:5x".parse::<GroupSpec>(), Err(Error::Parse(_))));
    }
}
