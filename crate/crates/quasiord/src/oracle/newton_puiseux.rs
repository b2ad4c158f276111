//! Classical one-variable irreducibility oracle.
//!
//! Decides whether a distinguished monic `f` in `Q[[x]][y]` is irreducible
//! over the algebraically closed coefficient field by the textbook Newton
//! polygon recursion: a single edge, an edge polynomial that is a perfect
//! power of a linear factor, and recursion into the sub-polynomial isolated
//! by a normalizing substitution and a Hensel split. Entirely independent of
//! the approximate-root machinery it is used to cross-check.
//!
//! Series are truncated at a generous working precision derived from the
//! input degrees; decisions never consult orders anywhere near it on
//! desk-scale inputs, and an explicit error fires if they would.

use super::upoly::UPoly;
use crate::error::{Error, Result};
use crate::polyring::{Rational, YPoly};
use num_traits::{One, Zero};

type Series = Vec<Rational>;

fn series_ord(s: &[Rational]) -> Option<usize> {
    s.iter().position(|c| !c.is_zero())
}

fn series_truncate(mut s: Series, prec: usize) -> Series {
    s.truncate(prec);
    s
}

/// Polynomial in `z` whose coefficients are `x`-series truncated at `prec`.
#[derive(Debug, Clone)]
struct SPoly {
    /// `z_coeffs[j]` is the series coefficient of `z^j`.
    z_coeffs: Vec<Series>,
    prec: usize,
}

impl SPoly {
    fn degree(&self) -> usize {
        self.z_coeffs.len() - 1
    }

    /// Slice at `x^i` as a polynomial in `z`.
    fn x_slice(&self, i: usize) -> UPoly {
        UPoly::new(
            self.z_coeffs
                .iter()
                .map(|s| s.get(i).cloned().unwrap_or_else(Rational::zero))
                .collect(),
        )
    }

    /// Subtract `x^shift * delta(z) * other(x, z)` in place.
    fn sub_scaled_product(&mut self, delta: &UPoly, other: &SPoly, shift: usize) {
        for (jd, cd) in delta.coeffs().iter().enumerate() {
            if cd.is_zero() {
                continue;
            }
            for (jo, so) in other.z_coeffs.iter().enumerate() {
                let j = jd + jo;
                for (v, cv) in so.iter().enumerate() {
                    let target = v + shift;
                    if target >= self.prec || cv.is_zero() {
                        continue;
                    }
                    let slot = &mut self.z_coeffs[j][target];
                    *slot -= cd * cv;
                }
            }
        }
    }
}

fn rational_pow(c: &Rational, k: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if k >= 0 { c.clone() } else { Rational::one() / c };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Extended Euclid on positive integers: returns `(alpha, beta)` with
/// `alpha*m - beta*u = 1`, for coprime `m`, `u`.
fn bezout(m: i64, u: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (m, u);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "bezout needs coprime inputs");
    // s0*m + t0*u = 1  ->  alpha = s0, beta = -t0
    (s0, -t0)
}

fn binomial_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for k in 1..=n {
        let prev = row[k - 1].clone();
        let factor = Rational::new(
            ((n - k + 1) as i64).into(),
            (k as i64).into(),
        );
        row.push(prev * factor);
    }
    row
}

/// `(z - 1)^n` as an exact polynomial.
fn z_minus_one_pow(n: usize) -> UPoly {
    UPoly::from_i64s(&[-1, 1]).pow(n as u64)
}

/// One Hensel lifting run: factor monic `s` (whose `x^0` slice is
/// `a0 * b0` with coprime monic factors) as `a * b mod x^prec` and return
/// the lift of `a0`.
fn hensel_factor(s: &SPoly, a0: &UPoly, b0: &UPoly) -> Result<SPoly> {
    let prec = s.prec;
    let q = s.degree();
    let (g, bez_s, bez_t) = a0.extended_gcd(b0);
    if !g.is_one() {
        return Err(Error::Internal("Hensel factors are not coprime".into()));
    }
    let mut a = SPoly {
        z_coeffs: (0..=a0.degree()).map(|j| vec![a0.coeff(j)]).collect(),
        prec,
    };
    let mut b = SPoly {
        z_coeffs: (0..=b0.degree()).map(|j| vec![b0.coeff(j)]).collect(),
        prec,
    };
    for c in &mut a.z_coeffs {
        c.resize(prec, Rational::zero());
    }
    for c in &mut b.z_coeffs {
        c.resize(prec, Rational::zero());
    }
    // residual r = s - a*b, updated incrementally
    let mut r = s.clone();
    let a0_full = a.x_slice(0);
    r.sub_scaled_product(&a0_full, &b, 0);
    for i in 1..prec {
        let delta = r.x_slice(i);
        if delta.is_zero() {
            continue;
        }
        if delta.degree() >= q {
            return Err(Error::Internal("Hensel residual degree escaped".into()));
        }
        let (_, delta_a) = bez_t.mul(&delta).divmod(a0);
        let delta_b = delta.sub(&delta_a.mul(b0)).exact_div(a0);
        // r -= x^i (delta_a * b + a * delta_b) + x^(2i) delta_a delta_b
        r.sub_scaled_product(&delta_a, &b, i);
        r.sub_scaled_product(&delta_b, &a, i);
        if 2 * i < prec {
            let cross = SPoly {
                z_coeffs: (0..=delta_b.degree())
                    .map(|j| {
                        let mut s = vec![Rational::zero(); prec];
                        s[0] = delta_b.coeff(j);
                        s
                    })
                    .collect(),
                prec,
            };
            r.sub_scaled_product(&delta_a, &cross, 2 * i);
        }
        for (j, c) in delta_a.coeffs().iter().enumerate() {
            a.z_coeffs[j][i] = c.clone();
        }
        for (j, c) in delta_b.coeffs().iter().enumerate() {
            b.z_coeffs[j][i] = c.clone();
        }
    }
    Ok(a)
}

/// The recursion. `budget` caps the number of steps.
fn recurse(g: SPoly, budget: &mut usize) -> Result<bool> {
    if *budget == 0 {
        return Err(Error::Internal("Newton polygon recursion exceeded its budget".into()));
    }
    *budget -= 1;
    let q = g.degree();
    if q == 1 {
        return Ok(true);
    }
    // constant coefficient; zero (to working precision) means y divides g
    let Some(v_q) = series_ord(&g.z_coeffs[0]) else {
        return Ok(false);
    };
    if v_q == 0 || g.prec <= 2 * (q + v_q) {
        return Err(Error::Internal("working precision exhausted in the oracle".into()));
    }
    // single-edge test: every point on or above the segment to (q, v_q)
    let mut orders = vec![None; q + 1];
    orders[q] = Some(v_q);
    for k in 1..q {
        let v_k = series_ord(&g.z_coeffs[q - k]);
        orders[k] = v_k;
        if let Some(v) = v_k {
            if v * q < k * v_q {
                return Ok(false);
            }
        }
    }
    let gcd_slope = num_integer::gcd(q, v_q);
    let m = q / gcd_slope;
    let u = v_q / gcd_slope;
    let n_classes = gcd_slope; // degree of the edge polynomial
    let mut edge = vec![Rational::zero(); n_classes + 1];
    edge[n_classes] = Rational::one(); // W^N from k = 0
    for j in 1..=n_classes {
        let k = j * m;
        if let Some(v) = orders[k] {
            if v * m == k * u {
                edge[n_classes - j] = g.z_coeffs[q - k][v].clone();
            }
        }
    }
    let edge = UPoly::new(edge);
    if n_classes == 1 {
        return Ok(true);
    }
    // the edge polynomial must be a perfect power of one linear factor
    let c0 = -edge.coeff(n_classes - 1) / Rational::from_integer((n_classes as i64).into());
    if c0.is_zero() {
        return Ok(false);
    }
    let linear = UPoly::new(vec![-c0.clone(), Rational::one()]);
    if linear.pow(n_classes as u64) != edge {
        return Ok(false);
    }
    // normalizing substitution x -> c^beta x^m, z -> c^alpha x^u z
    let (alpha, beta) = bezout(m as i64, u as i64);
    let new_prec = m * g.prec - q * u;
    let c_beta = rational_pow(&c0, beta);
    let mut new_coeffs = Vec::with_capacity(q + 1);
    for j in 0..=q {
        let mut s = vec![Rational::zero(); new_prec];
        let shift = (q - j) * u;
        // running factor c^(beta*v + (j-q)*alpha), advanced as v increases
        let mut running = rational_pow(&c0, (j as i64 - q as i64) * alpha);
        for (v, cv) in g.z_coeffs[j].iter().enumerate() {
            if !cv.is_zero() {
                let target = m * v;
                if target < shift {
                    return Err(Error::Internal("exponent dropped below zero in the shear".into()));
                }
                let target = target - shift;
                if target < new_prec {
                    s[target] = cv * &running;
                }
            }
            running *= &c_beta;
        }
        new_coeffs.push(s);
    }
    let normalized = SPoly { z_coeffs: new_coeffs, prec: new_prec };
    let zm_minus_one = {
        // (z^m - 1)^N
        let mut zm = vec![Rational::zero(); m + 1];
        zm[0] = -Rational::one();
        zm[m] = Rational::one();
        UPoly::new(zm).pow(n_classes as u64)
    };
    debug_assert_eq!(
        normalized.x_slice(0),
        zm_minus_one,
        "normalized initial slice should be (z^m - 1)^N"
    );
    let factor = if m == 1 {
        normalized
    } else {
        let a0 = z_minus_one_pow(n_classes);
        let b0 = zm_minus_one.exact_div(&a0);
        hensel_factor(&normalized, &a0, &b0)?
    };
    // shift z = 1 + w
    let deg = factor.degree();
    let prec = factor.prec;
    let mut shifted: Vec<Series> = vec![vec![Rational::zero(); prec]; deg + 1];
    for (j, s) in factor.z_coeffs.iter().enumerate() {
        let row = binomial_row(j);
        for (i, binom) in row.iter().enumerate() {
            for (v, cv) in s.iter().enumerate() {
                if !cv.is_zero() {
                    shifted[i][v] += cv * binom;
                }
            }
        }
    }
    recurse(SPoly { z_coeffs: shifted, prec }, budget)
}

/// Classical Newton polygon / Puiseux irreducibility test for `e = 1`.
///
/// Preconditions: one variable, monic, distinguished (`f(0, y) = y^n`).
pub fn newton_puiseux_irreducible_e1(f: &YPoly) -> Result<bool> {
    if f.vars() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.vars() });
    }
    if !f.is_monic() || f.degree() == 0 {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    for k in 0..n {
        if !f.coefficient(k).constant_term().is_zero() {
            return Err(Error::Contract("oracle needs a distinguished polynomial: f(0,y) = y^n".into()));
        }
    }
    if n == 1 {
        return Ok(true);
    }
    let max_deg = (0..=n)
        .filter_map(|k| {
            f.coefficient(k)
                .max_total_degree()
                .and_then(|d| num_traits::ToPrimitive::to_usize(&d))
        })
        .max()
        .unwrap_or(0);
    let prec = (2 * n + 1) * (max_deg + 2) + 32;
    let mut z_coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut s = vec![Rational::zero(); prec];
        for (m, c) in f.coefficient(k).terms() {
            let d = num_traits::ToPrimitive::to_usize(&m.total_degree())
                .ok_or_else(|| Error::Contract("coefficient degree too large".into()))?;
            if d < prec {
                s[d] = c.clone();
            }
        }
        z_coeffs.push(s);
    }
    let mut budget = prec;
    recurse(SPoly { z_coeffs, prec }, &mut budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::MPoly;

    fn poly(coeffs: Vec<MPoly>) -> YPoly {
        YPoly::from_coeffs_asc(1, coeffs)
    }

    fn x_pow(k: u64, c: i64) -> MPoly {
        MPoly::from_terms(1, &[(&[k], c)])
    }

    #[test]
    fn cusp_is_irreducible() {
        // y^2 - x^3
        let f = poly(vec![x_pow(3, -1), MPoly::zero(1), MPoly::one(1)]);
        assert!(newton_puiseux_irreducible_e1(&f).unwrap());
    }

    #[test]
    fn split_tangents_are_reducible() {
        // y^2 - 3xy + 2x^2 = (y - x)(y - 2x)
        let f = poly(vec![x_pow(2, 2), x_pow(1, -3), MPoly::one(1)]);
        assert!(!newton_puiseux_irreducible_e1(&f).unwrap());
    }

    #[test]
    fn two_characteristic_exponents() {
        // y^4 - 2x^3y^2 + x^6 - x^7: exponents 3/2 then 7/4
        let f = poly(vec![
            MPoly::from_terms(1, &[(&[6], 1), (&[7], -1)]),
            MPoly::zero(1),
            x_pow(3, -2),
            MPoly::zero(1),
            MPoly::one(1),
        ]);
        assert!(newton_puiseux_irreducible_e1(&f).unwrap());
    }

    #[test]
    fn same_initial_class_splits_deeper() {
        // (y^2 - x^3)(y^2 - x^3 - x^4): identical edge data, split after
        // the Hensel stage
        let a = poly(vec![x_pow(3, -1), MPoly::zero(1), MPoly::one(1)]);
        let b = poly(vec![
            MPoly::from_terms(1, &[(&[3], -1), (&[4], -1)]),
            MPoly::zero(1),
            MPoly::one(1),
        ]);
        let f = a.mul(&b).unwrap();
        assert!(!newton_puiseux_irreducible_e1(&f).unwrap());
    }

    #[test]
    fn perfect_square_is_reducible() {
        let a = poly(vec![x_pow(3, -1), MPoly::zero(1), MPoly::one(1)]);
        assert!(!newton_puiseux_irreducible_e1(&a.pow(2)).unwrap());
    }

    #[test]
    fn double_root_classes_with_different_tails() {
        // y^4 + 2x^3 y^2 + x^6 = (y^2 + x^3)^2: reducible
        let f = poly(vec![x_pow(6, 1), MPoly::zero(1), x_pow(3, 2), MPoly::zero(1), MPoly::one(1)]);
        assert!(!newton_puiseux_irreducible_e1(&f).unwrap());
    }

    #[test]
    fn non_distinguished_is_rejected() {
        // y^2 - 1 - x
        let f = poly(vec![
            MPoly::from_terms(1, &[(&[0], -1), (&[1], -1)]),
            MPoly::zero(1),
            MPoly::one(1),
        ]);
        assert!(newton_puiseux_irreducible_e1(&f).is_err());
    }

    #[test]
    fn rational_but_not_balanced_edge() {
        // y^4 - x^2(1+x) y^2 ... use y^2 - x^2(1+x): edge (W-1)(W+1)-like
        let f = poly(vec![
            MPoly::from_terms(1, &[(&[2], -1), (&[3], -1)]),
            MPoly::zero(1),
            MPoly::one(1),
        ]);
        // roots +-x sqrt(1+x): two distinct branches
        assert!(!newton_puiseux_irreducible_e1(&f).unwrap());
    }
}
