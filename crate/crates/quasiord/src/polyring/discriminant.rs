//! `y`-discriminant via the Sylvester resultant.

use super::{MPoly, YPoly};
use crate::error::{Error, Result};

/// Sylvester matrix of `p` (degree m) and `q` (degree n) in `y`:
/// an (m+n) x (m+n) matrix whose first `n` rows carry the coefficients of
/// `p` and the remaining `m` rows those of `q`, each in descending `y`-power
/// and shifted one column per row.
pub fn sylvester_matrix(p: &YPoly, q: &YPoly) -> Vec<Vec<MPoly>> {
    let vars = p.vars();
    let m = p.degree();
    let n = q.degree();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![MPoly::zero(vars); size];
        for (j, k) in (0..=m).rev().enumerate() {
            row[shift + j] = p.coefficient(k);
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![MPoly::zero(vars); size];
        for (j, k) in (0..=n).rev().enumerate() {
            row[shift + j] = q.coefficient(k);
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination. Exact over the
/// polynomial ring; every division performed is exact.
fn bareiss_determinant(mut m: Vec<Vec<MPoly>>, vars: usize) -> MPoly {
    let size = m.len();
    if size == 0 {
        return MPoly::one(vars);
    }
    let mut sign_negative = false;
    let mut prev_pivot = MPoly::one(vars);
    for r in 0..size {
        // Pick the sparsest nonzero pivot in the column to slow fill-in.
        let pivot_row = (r..size)
            .filter(|&i| !m[i][r].is_zero())
            .min_by_key(|&i| m[i][r].num_terms());
        let Some(p) = pivot_row else {
            return MPoly::zero(vars);
        };
        if p != r {
            m.swap(p, r);
            sign_negative = !sign_negative;
        }
        if r + 1 == size {
            break;
        }
        let pivot = m[r][r].clone();
        for i in r + 1..size {
            for j in r + 1..size {
                let t = pivot
                    .mul(&m[i][j])
                    .and_then(|a| a.sub(&m[i][r].mul(&m[r][j]).expect("same ring")))
                    .expect("same ring");
                m[i][j] = t
                    .div_exact(&prev_pivot)
                    .expect("same ring")
                    .expect("Bareiss division is exact");
            }
            m[i][r] = MPoly::zero(vars);
        }
        prev_pivot = pivot;
    }
    let det = m[size - 1][size - 1].clone();
    if sign_negative {
        det.neg()
    } else {
        det
    }
}

/// Resultant `Res_y(f, df/dy)`, reported exactly as the fraction-free
/// Sylvester determinant produces it (no sign or leading normalization).
/// For a quasi-ordinary `f` this is a monomial times a unit.
pub fn discriminant_y(f: &YPoly) -> Result<MPoly> {
    if f.is_zero() || f.degree() < 1 {
        return Err(Error::Contract("discriminant needs degree >= 1 in y".into()));
    }
    let fy = f.derivative_y();
    if fy.is_zero() {
        return Ok(MPoly::zero(f.vars()));
    }
    let m = sylvester_matrix(f, &fy);
    Ok(bareiss_determinant(m, f.vars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, MultiIndex};

    /// Independent oracle: determinant by naive cofactor expansion.
    fn cofactor_determinant(m: &[Vec<MPoly>], vars: usize) -> MPoly {
        let size = m.len();
        if size == 0 {
            return MPoly::one(vars);
        }
        if size == 1 {
            return m[0][0].clone();
        }
        let mut det = MPoly::zero(vars);
        for (col, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<MPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let sub = cofactor_determinant(&minor, vars);
            let signed = if col % 2 == 0 { entry.clone() } else { entry.neg() };
            det = det.add(&signed.mul(&sub).unwrap()).unwrap();
        }
        det
    }

    #[test]
    fn quadratic_monomial_discriminant() {
        // f = y^2 - x1 x2: Res(f, f') = -4 x1 x2 up to sign
        let f = YPoly::from_coeffs_asc(
            2,
            vec![MPoly::from_terms(2, &[(&[1, 1], -1)]), MPoly::zero(2), MPoly::one(2)],
        );
        let d = discriminant_y(&f).unwrap();
        let expected = MPoly::from_terms(2, &[(&[1, 1], -4)]);
        assert!(d == expected || d == expected.neg());
    }

    #[test]
    fn quadratic_sum_discriminant() {
        // f = y^2 - x1 - x2 -> 4(x1 + x2) up to sign
        let f = YPoly::from_coeffs_asc(
            2,
            vec![
                MPoly::from_terms(2, &[(&[1, 0], -1), (&[0, 1], -1)]),
                MPoly::zero(2),
                MPoly::one(2),
            ],
        );
        let d = discriminant_y(&f).unwrap();
        let expected = MPoly::from_terms(2, &[(&[1, 0], 4), (&[0, 1], 4)]);
        assert!(d == expected || d == expected.neg());
    }

    #[test]
    fn octic_discriminant_matches_cofactor_expansion_and_splits() {
        let f = crate::testutil::example1();
        let m = sylvester_matrix(&f, &f.derivative_y());
        let bareiss = discriminant_y(&f).unwrap();
        let cofactor = cofactor_determinant(&m, 2);
        assert_eq!(bareiss, cofactor);
        // quasi-ordinary shape: monomial times a unit
        let (n, u) = bareiss.monomial_unit_split().unwrap().expect("unit split");
        assert!(!u.constant_term().is_zero());
        assert!(!n.is_zero());
    }

    #[test]
    fn shared_branch_product_is_not_quasi_ordinary() {
        // f = y^2 - x1 x2 and g = y^2 - x1 x2 - x1^3 share initial root data;
        // the discriminant of f*g picks up Res(f,g)^2 and fails the split.
        let f = YPoly::from_coeffs_asc(
            2,
            vec![MPoly::from_terms(2, &[(&[1, 1], -1)]), MPoly::zero(2), MPoly::one(2)],
        );
        let g = YPoly::from_coeffs_asc(
            2,
            vec![
                MPoly::from_terms(2, &[(&[1, 1], -1), (&[3, 0], -1)]),
                MPoly::zero(2),
                MPoly::one(2),
            ],
        );
        let d = discriminant_y(&f.mul(&g).unwrap()).unwrap();
        assert!(d.monomial_unit_split().unwrap().is_none());
    }

    #[test]
    fn linear_discriminant_is_unit() {
        let f = YPoly::from_coeffs_asc(1, vec![MPoly::var(1, 0), MPoly::one(1)]);
        let d = discriminant_y(&f).unwrap();
        assert_eq!(d, MPoly::one(1));
        let (n, _) = d.monomial_unit_split().unwrap().unwrap();
        assert_eq!(n, MultiIndex::zero(1));
    }

    #[test]
    fn squareful_polynomial_has_zero_discriminant() {
        // (y^2 - x1)^2
        let g = YPoly::from_coeffs_asc(
            1,
            vec![MPoly::var(1, 0).neg(), MPoly::zero(1), MPoly::one(1)],
        );
        let f = g.pow(2);
        assert!(discriminant_y(&f).unwrap().is_zero());
        let _ = rat(0);
    }
}
