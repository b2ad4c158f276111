//! Text format for branch parametrizations.
//!
//! ```text
//! # comments and blank lines are skipped
//! n=8 e=2 N=1 trunc=160
//! term (2,2): 1
//! term (6,2): 1/4
//! term (10,2): -3/32
//! ```
//!
//! The header carries the conjugacy degree `n`, the variable count `e`, an
//! optional root-of-unity order `N` (conductor for the symbol `w` in
//! coefficients, default 1), and an optional truncation bound `trunc`
//! (default `n * (max term degree + n)`). Each term line gives a `t`-exponent
//! tuple and a coefficient: a sum of `rational [* w[^k]]` parts.

use crate::error::{Error, Result};
use crate::oracle::{BranchSeries, CycElem, UPoly};
use crate::polyring::{MultiIndex, Rational};

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad {what}: '{s}'") })
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: crate::polyring::Integer = num
        .parse()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad rational '{s}'") })?;
    let d: crate::polyring::Integer = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("bad rational '{s}'") })?,
        None => 1.into(),
    };
    if d == 0.into() {
        return Err(Error::Parse { pos: 0, msg: "zero denominator".into() });
    }
    Ok(Rational::new(n, d))
}

/// One additive part of a coefficient: `rational`, `w^k`, or `rational*w^k`.
fn parse_coeff_part(part: &str, conductor: u64) -> Result<CycElem> {
    let part = part.trim();
    let (scalar_text, w_text) = match part.split_once('*') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => {
            if part.starts_with('w') || part.starts_with("-w") {
                ("", Some(part))
            } else {
                (part, None)
            }
        }
    };
    let (scalar, w_text) = match w_text {
        Some(w) if scalar_text.is_empty() => {
            if let Some(rest) = w.strip_prefix('-') {
                (-Rational::from_integer(1.into()), Some(rest.trim()))
            } else {
                (Rational::from_integer(1.into()), Some(w))
            }
        }
        Some(w) => (parse_rational(scalar_text)?, Some(w)),
        None => (parse_rational(scalar_text)?, None),
    };
    match w_text {
        None => Ok(CycElem::from_rational(conductor, scalar)),
        Some(w) => {
            let k = match w.strip_prefix('w') {
                Some("") => 1,
                Some(rest) => {
                    let rest = rest
                        .strip_prefix('^')
                        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad coefficient part '{part}'") })?;
                    parse_u64(rest, "root-of-unity power")?
                }
                None => {
                    return Err(Error::Parse { pos: 0, msg: format!("bad coefficient part '{part}'") })
                }
            };
            Ok(CycElem::root_of_unity(conductor, k)?.scale(&scalar))
        }
    }
}

/// Coefficient expression: additive combination of parts.
fn parse_coefficient(text: &str, conductor: u64) -> Result<CycElem> {
    let mut acc = CycElem::new(conductor, UPoly::zero())?;
    let mut rest = text.trim();
    let mut sign = 1i32;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // find the next top-level + or - (not inside a rational's slash)
        let split = rest
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i);
        let (part, remainder) = match split {
            Some(i) => (&rest[..i], &rest[i..]),
            None => (rest, ""),
        };
        let mut value = parse_coeff_part(part, conductor)?;
        if sign < 0 {
            value = value.neg();
        }
        acc = acc.add(&value);
        if remainder.is_empty() {
            return Ok(acc);
        }
        sign = if remainder.starts_with('-') { -1 } else { 1 };
        rest = remainder[1..].trim_start();
    }
}

fn parse_exponents(text: &str, e: usize) -> Result<MultiIndex> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected (a,b,..), got '{text}'") })?;
    let parts: Vec<u64> = inner
        .split(',')
        .map(|p| parse_u64(p, "exponent"))
        .collect::<Result<_>>()?;
    if parts.len() != e {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("exponent tuple {text} has {} entries, expected {e}", parts.len()),
        });
    }
    Ok(MultiIndex::from_u64s(&parts))
}

/// Parse a branch-spec document. `truncation` overrides the header value.
pub fn parse_branch_spec(text: &str, truncation: Option<u64>) -> Result<BranchSeries> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse { pos: 0, msg: "empty branch spec".into() })?;
    let mut n = None;
    let mut e = None;
    let mut conductor = 1u64;
    let mut trunc = None;
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad header field '{field}'") })?;
        match key {
            "n" => n = Some(parse_u64(value, "n")? as usize),
            "e" => e = Some(parse_u64(value, "e")? as usize),
            "N" => conductor = parse_u64(value, "N")?,
            "trunc" => trunc = Some(parse_u64(value, "trunc")?),
            other => {
                return Err(Error::Parse { pos: 0, msg: format!("unknown header key '{other}'") })
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse { pos: 0, msg: "header must set n".into() })?;
    let e = e.ok_or_else(|| Error::Parse { pos: 0, msg: "header must set e".into() })?;
    let mut terms = Vec::new();
    for line in lines {
        let rest = line
            .strip_prefix("term")
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected 'term ...', got '{line}'") })?;
        let (exps, coeff) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("missing ':' in '{line}'") })?;
        terms.push((parse_exponents(exps, e)?, parse_coefficient(coeff, conductor)?));
    }
    let bound = truncation
        .or(trunc)
        .unwrap_or_else(|| BranchSeries::default_truncation(n, &terms));
    BranchSeries::new(n, e, bound, conductor, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::branch_to_poly;
    use crate::polyring::rat;

    #[test]
    fn parses_example_branch() {
        let spec = "# comment\n\
                    n=8 e=2 trunc=160\n\
                    term (2,2): 1\n\
                    term (6,2): 1/4\n\
                    term (10,2): -3/32\n";
        let b = parse_branch_spec(spec, None).unwrap();
        assert_eq!(b.n(), 8);
        assert_eq!(b.vars(), 2);
        assert_eq!(b.truncation(), 160);
        assert_eq!(b.terms().len(), 3);
    }

    #[test]
    fn parses_cyclotomic_coefficients() {
        let spec = "n=4 e=1 N=4\nterm (1): w\n";
        let b = parse_branch_spec(spec, None).unwrap();
        let f = branch_to_poly(&b).unwrap();
        // y = i t has minimal polynomial y^4 - x over x = t^4
        assert_eq!(f.to_string(), "y^4 - x1");
    }

    #[test]
    fn coefficient_sums() {
        let c = parse_coefficient("1/2 + 3*w^2 - w", 8).unwrap();
        let want = CycElem::from_rational(8, rat(1) / rat(2))
            .add(&CycElem::root_of_unity(8, 2).unwrap().scale(&rat(3)))
            .add(&CycElem::root_of_unity(8, 1).unwrap().neg());
        assert_eq!(c, want);
    }

    #[test]
    fn truncation_override_wins() {
        let spec = "n=2 e=1 trunc=100\nterm (3): 1\n";
        let b = parse_branch_spec(spec, Some(64)).unwrap();
        assert_eq!(b.truncation(), 64);
    }

    #[test]
    fn rejects_wrong_arity() {
        let spec = "n=2 e=2\nterm (3): 1\n";
        assert!(parse_branch_spec(spec, None).is_err());
    }
}
