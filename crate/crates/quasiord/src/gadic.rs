//! `g`-adic and multi-base expansions, the Tschirnhausen transform, and
//! approximate roots.

use crate::error::{Error, Result};
use crate::polyring::{MPoly, Rational, YPoly};
use num_traits::One;
use std::collections::BTreeMap;

/// The unique expansion `f = g^d + sum_i a_i g^(d-i)` with
/// `deg_y a_i < deg_y g` (`a_0 = 1` is implicit and never stored).
#[derive(Debug, Clone)]
pub struct GAdicExpansion {
    pub base: YPoly,
    pub exponent_d: usize,
    /// `a_1..a_d`, in that order.
    pub coefficients: Vec<YPoly>,
}

impl GAdicExpansion {
    /// The coefficient `a_i`, `1 <= i <= d`.
    pub fn a(&self, i: usize) -> &YPoly {
        &self.coefficients[i - 1]
    }

    /// Rebuild `g^d + sum a_i g^(d-i)`; used to check the expansion.
    pub fn reconstruct(&self) -> Result<YPoly> {
        let mut acc = self.base.pow(self.exponent_d as u64);
        for (i, a) in self.coefficients.iter().enumerate() {
            let power = self.base.pow((self.exponent_d - (i + 1)) as u64);
            acc = acc.add(&a.mul(&power)?)?;
        }
        Ok(acc)
    }
}

/// Expand monic `f` in base monic `g`, where `deg g` divides `deg f`.
pub fn g_adic(f: &YPoly, g: &YPoly) -> Result<GAdicExpansion> {
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if g.degree() == 0 {
        return Err(Error::NonMonicDivisor);
    }
    let n = f.degree();
    let m = g.degree();
    if n % m != 0 {
        return Err(Error::DegreeNotDivisible { degree: n, divisor: m });
    }
    let d = n / m;
    let mut coefficients = vec![YPoly::zero(f.vars()); d];
    let mut current = f.clone();
    for i in (1..=d).rev() {
        let (q, r) = current.divmod(g)?;
        coefficients[i - 1] = r;
        current = q;
    }
    if current != YPoly::one(f.vars()) {
        return Err(Error::Internal("g-adic expansion lost the leading term".into()));
    }
    Ok(GAdicExpansion { base: g.clone(), exponent_d: d, coefficients })
}

/// The multi-base expansion `f = sum_theta a_theta g_1^t1 ... g_h^th` over
/// `B = { theta : 0 <= theta_i < e_i for i < h }` with `a_theta` free of `y`.
#[derive(Debug, Clone)]
pub struct GSupport {
    pub bases: Vec<YPoly>,
    /// Nonzero coefficients indexed by their exponent tuple.
    pub entries: BTreeMap<Vec<u64>, MPoly>,
}

impl GSupport {
    /// Rebuild `sum a_theta g^theta`.
    pub fn reconstruct(&self) -> Result<YPoly> {
        let vars = self.bases[0].vars();
        let mut acc = YPoly::zero(vars);
        for (theta, c) in &self.entries {
            let mut term = YPoly::constant(vars, c.clone());
            for (g, &t) in self.bases.iter().zip(theta) {
                term = term.mul(&g.pow(t))?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Base-`g` digits of an arbitrary polynomial: `f = sum_j b_j g^j` with
/// `deg_y b_j < deg_y g`.
fn digits(f: &YPoly, g: &YPoly) -> Result<Vec<YPoly>> {
    let mut out = Vec::new();
    let mut current = f.clone();
    while !current.is_zero() {
        let (q, r) = current.divmod(g)?;
        out.push(r);
        current = q;
    }
    Ok(out)
}

fn expand_rec(f: &YPoly, bases: &[YPoly], theta_suffix: &mut Vec<u64>, out: &mut BTreeMap<Vec<u64>, MPoly>) -> Result<()> {
    match bases.split_last() {
        None => {
            if f.degree() > 0 {
                return Err(Error::Internal("multi-base digit still involves y".into()));
            }
            if !f.is_zero() {
                let mut theta = theta_suffix.clone();
                theta.reverse();
                out.insert(theta, f.coefficient(0));
            }
            Ok(())
        }
        Some((top, rest)) => {
            for (j, b) in digits(f, top)?.into_iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                theta_suffix.push(j as u64);
                expand_rec(&b, rest, theta_suffix, out)?;
                theta_suffix.pop();
            }
            Ok(())
        }
    }
}

/// The multi-base expansion of `f` over `bases = (g_1..g_h)`.
///
/// Requirements: each base monic, `deg g_1 = 1`, each degree dividing the
/// next; `bounds` gives `e_i = deg g_(i+1) / deg g_i` for `i < h` and `None`
/// (unbounded) in the last slot. The digit degrees force `theta_i < e_i`
/// automatically; `bounds` is validated against the ladder.
pub fn g_support(f: &YPoly, bases: &[YPoly], bounds: &[Option<u64>]) -> Result<GSupport> {
    if bases.is_empty() {
        return Err(Error::Contract("multi-base expansion needs at least one base".into()));
    }
    if bounds.len() != bases.len() {
        return Err(Error::Contract("one bound per base is required".into()));
    }
    for g in bases {
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
    }
    if bases[0].degree() != 1 {
        return Err(Error::Contract("the first base must have degree 1 in y".into()));
    }
    for i in 0..bases.len() - 1 {
        let lo = bases[i].degree();
        let hi = bases[i + 1].degree();
        if lo == 0 || hi % lo != 0 || hi <= lo {
            return Err(Error::DegreeNotDivisible { degree: hi, divisor: lo });
        }
        let e_i = (hi / lo) as u64;
        if bounds[i] != Some(e_i) {
            return Err(Error::Contract(format!(
                "bound for base {} must be {} (degree ladder), got {:?}",
                i + 1,
                e_i,
                bounds[i]
            )));
        }
    }
    if bounds[bases.len() - 1].is_some() {
        return Err(Error::Contract("the last base is unbounded".into()));
    }
    let mut entries = BTreeMap::new();
    expand_rec(f, bases, &mut Vec::new(), &mut entries)?;
    Ok(GSupport { bases: bases.to_vec(), entries })
}

/// Tschirnhausen transform `tau_f(g) = g + a_1/d` where `a_1` comes from the
/// `g`-adic expansion of `f`.
pub fn tschirnhausen(f: &YPoly, g: &YPoly) -> Result<YPoly> {
    let expansion = g_adic(f, g)?;
    let d = Rational::from_integer((expansion.exponent_d as i64).into());
    let correction = expansion.a(1).scale(&(Rational::one() / d));
    g.add(&correction)
}

/// The `d`-th approximate root of monic `f`: the unique monic `g` of degree
/// `n/d` with `deg_y(f - g^d) < n - n/d`. Computed by matching the top
/// `n/d` coefficients of `g^d` against `f` (a triangular solve in the
/// unknown coefficients of `g`), then re-verified through `a_1 = 0`.
pub fn approximate_root(f: &YPoly, d: usize) -> Result<YPoly> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    if d == 0 || n == 0 || n % d != 0 {
        return Err(Error::DegreeNotDivisible { degree: n, divisor: d });
    }
    let m = n / d;
    let vars = f.vars();
    let inv_d = Rational::one() / Rational::from_integer((d as i64).into());
    let mut g = YPoly::y_power(vars, m);
    for j in 1..=m {
        let power = g.pow(d as u64);
        let correction = f.a_coeff(j).sub(&power.a_coeff(j))?.scale(&inv_d);
        let bump = YPoly::constant(vars, correction).mul(&YPoly::y_power(vars, m - j))?;
        g = g.add(&bump)?;
    }
    let check = g_adic(f, &g)?;
    if !check.a(1).is_zero() {
        return Err(Error::Internal("approximate root failed the a_1 = 0 check".into()));
    }
    Ok(g)
}
