//! Truncated branch series, conjugate-product minimal polynomials, and
//! order computations straight from a parametrization.
//!
//! A branch is a finite series `y(t) = sum c_p t^p` declared to represent a
//! root of some `f(t_1^n, .., t_e^n, y) = 0` up to a stated truncation
//! bound. Conjugates arise by twisting `t_i -> w_i t_i` with `n`-th roots of
//! unity; the product over the distinct twists recovers the minimal
//! polynomial with rational coefficients.

use super::cyclotomic::{conductor_supported, CycElem};
use crate::charseq::{CharData, ExponentVector};
use crate::error::{Error, Result};
use crate::polyring::{Integer, MPoly, MultiIndex, Rational, YPoly};
use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Sparse series in `t_1..t_e` with cyclotomic coefficients. Internal to the
/// oracle; all arithmetic is exact.
#[derive(Debug, Clone)]
struct CSeries {
    terms: BTreeMap<MultiIndex, CycElem>,
    vars: usize,
    conductor: u64,
}

impl CSeries {
    fn zero(vars: usize, conductor: u64) -> Self {
        CSeries { terms: BTreeMap::new(), vars, conductor }
    }

    fn one(vars: usize, conductor: u64) -> Self {
        let mut s = Self::zero(vars, conductor);
        s.add_term(MultiIndex::zero(vars), CycElem::one(conductor));
        s
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: MultiIndex, c: CycElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars, self.conductor);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.neg());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars, self.conductor);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.add(mb), ca.mul(cb));
            }
        }
        out
    }

    /// The `exp` data: minimal total degree, then lexicographically greatest.
    fn exp(&self) -> Option<(&MultiIndex, &CycElem)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.cmp_exp_order(b))
    }
}

/// A truncated branch parametrization.
#[derive(Debug, Clone)]
pub struct BranchSeries {
    n: usize,
    vars: usize,
    /// Total-degree bound up to which the series is declared exact.
    truncation: u64,
    conductor: u64,
    terms: Vec<(MultiIndex, CycElem)>,
}

impl BranchSeries {
    pub fn new(
        n: usize,
        vars: usize,
        truncation: u64,
        conductor: u64,
        terms: Vec<(MultiIndex, CycElem)>,
    ) -> Result<Self> {
        if n == 0 || vars == 0 {
            return Err(Error::Contract("branch needs n >= 1 and e >= 1".into()));
        }
        if !conductor_supported(conductor) {
            return Err(Error::UnsupportedConductor(conductor));
        }
        let mut seen = BTreeSet::new();
        for (m, c) in &terms {
            if m.len() != vars {
                return Err(Error::DimensionMismatch { expected: vars, found: m.len() });
            }
            if c.is_zero() {
                return Err(Error::Contract("branch terms must have nonzero coefficients".into()));
            }
            if c.conductor() != conductor {
                return Err(Error::Contract("branch coefficients must share the conductor".into()));
            }
            if !seen.insert(m.clone()) {
                return Err(Error::Contract("duplicate exponent in branch".into()));
            }
            let deg = m.total_degree();
            if deg > BigUint::from(truncation) {
                return Err(Error::TruncationExceeded {
                    needed: deg.to_u64().unwrap_or(u64::MAX),
                    bound: truncation,
                });
            }
        }
        Ok(BranchSeries { n, vars, truncation, conductor, terms })
    }

    /// Branch with rational coefficients and the default truncation bound.
    pub fn from_rational_terms(
        n: usize,
        vars: usize,
        terms: &[(&[u64], Rational)],
    ) -> Result<Self> {
        let converted: Vec<(MultiIndex, CycElem)> = terms
            .iter()
            .map(|(m, c)| (MultiIndex::from_u64s(m), CycElem::from_rational(1, c.clone())))
            .collect();
        let bound = Self::default_truncation(n, &converted);
        Self::new(n, vars, bound, 1, converted)
    }

    /// Default bound: `n * (largest term degree + n)`.
    pub fn default_truncation(n: usize, terms: &[(MultiIndex, CycElem)]) -> u64 {
        let max_deg = terms
            .iter()
            .filter_map(|(m, _)| m.total_degree().to_u64())
            .max()
            .unwrap_or(0);
        (n as u64) * (max_deg + n as u64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn truncation(&self) -> u64 {
        self.truncation
    }

    pub fn with_truncation(mut self, bound: u64) -> Self {
        self.truncation = bound;
        self
    }

    pub fn terms(&self) -> &[(MultiIndex, CycElem)] {
        &self.terms
    }

    fn working_conductor(&self) -> Result<u64> {
        let lcm = (self.n as u64).lcm(&self.conductor);
        if !conductor_supported(lcm) {
            return Err(Error::UnsupportedConductor(lcm));
        }
        Ok(lcm)
    }

    fn max_term_degree(&self) -> u64 {
        self.terms
            .iter()
            .filter_map(|(m, _)| m.total_degree().to_u64())
            .max()
            .unwrap_or(0)
    }

    /// The twisted series `y(w^a t)` at the working conductor `big_n`, where
    /// the twist multiplies the coefficient of `t^p` by `zeta_n^<a,p>`.
    fn twisted(&self, a: &[u64], big_n: u64) -> Result<CSeries> {
        let n = self.n as u64;
        let step = big_n / n;
        let mut s = CSeries::zero(self.vars, big_n);
        for (m, c) in &self.terms {
            let mut pairing = 0u64;
            for (ai, p) in a.iter().zip(m.components()) {
                let p_mod = (p % BigUint::from(n)).to_u64().expect("reduced mod n");
                pairing = (pairing + ai * p_mod) % n;
            }
            let twist = CycElem::root_of_unity(big_n, pairing * step)?;
            s.add_term(m.clone(), c.embed(big_n)?.mul(&twist));
        }
        Ok(s)
    }

    /// Distinct twist exponents `a`, one per conjugate.
    fn orbit_representatives(&self) -> Result<Vec<Vec<u64>>> {
        let n = self.n as u64;
        let e = self.vars;
        let count = (n as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
        if count > 1_000_000 {
            return Err(Error::Contract("twist orbit enumeration too large".into()));
        }
        let supp: Vec<Vec<u64>> = self
            .terms
            .iter()
            .map(|(m, _)| {
                m.components()
                    .iter()
                    .map(|p| (p % BigUint::from(n)).to_u64().expect("reduced"))
                    .collect()
            })
            .collect();
        let mut reps: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
        let mut a = vec![0u64; e];
        loop {
            let signature: Vec<u64> = supp
                .iter()
                .map(|p| a.iter().zip(p).map(|(ai, pi)| ai * pi % n).sum::<u64>() % n)
                .collect();
            reps.entry(signature).or_insert_with(|| a.clone());
            // advance the counter
            let mut i = 0;
            loop {
                if i == e {
                    let reps: Vec<Vec<u64>> = reps.into_values().collect();
                    if reps.len() != self.n {
                        return Err(Error::OrbitSize { expected: self.n, found: reps.len() });
                    }
                    return Ok(reps);
                }
                a[i] += 1;
                if a[i] < n {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
        }
    }
}

/// Minimal polynomial of a branch: the product `prod_a (y - y(w^a t))` over
/// the distinct conjugates, pushed down from the `t`- to the `x`-grading.
///
/// Requires the stated truncation to cover the largest possible coefficient
/// degree (`n` times the largest branch exponent); the cyclotomic parts of
/// the product must cancel exactly.
pub fn branch_to_poly(branch: &BranchSeries) -> Result<YPoly> {
    let big_n = branch.working_conductor()?;
    let needed = (branch.n as u64) * branch.max_term_degree();
    if branch.truncation < needed {
        return Err(Error::TruncationExceeded { needed, bound: branch.truncation });
    }
    let reps = branch.orbit_representatives()?;
    let e = branch.vars;
    // coefficients of the product, ascending powers of y
    let mut coeffs = vec![CSeries::one(e, big_n)];
    for a in &reps {
        let root = branch.twisted(a, big_n)?;
        let mut next = vec![CSeries::zero(e, big_n); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].add(&c.mul(&root).neg());
        }
        coeffs = next;
    }
    let n_big = BigUint::from(branch.n as u64);
    let mut out = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        let mut p = MPoly::zero(e);
        for (m, coeff) in &c.terms {
            let mut reduced = Vec::with_capacity(e);
            for comp in m.components() {
                let (q, r) = comp.div_rem(&n_big);
                if !r.is_zero() {
                    return Err(Error::Internal(
                        "conjugate product exponent not divisible by n".into(),
                    ));
                }
                reduced.push(q);
            }
            let rational = coeff.as_rational().ok_or(Error::NonRationalCoefficient)?;
            p.add_term(MultiIndex::new(reduced), rational);
        }
        out.push(p);
    }
    let poly = YPoly::from_coeffs_asc(e, out);
    if !poly.is_monic() || poly.degree() != branch.n {
        return Err(Error::Internal("conjugate product is not monic of degree n".into()));
    }
    Ok(poly)
}

/// The order of `g` along the branch: `exp` of `g(t_1^n, .., t_e^n, y(t))`.
/// Errors when the substitution vanishes or its order reaches the
/// truncation bound, where the truncated data stops being trustworthy.
pub fn order_of(g: &YPoly, branch: &BranchSeries) -> Result<ExponentVector> {
    if g.vars() != branch.vars {
        return Err(Error::DimensionMismatch { expected: branch.vars, found: g.vars() });
    }
    let big_n = branch.working_conductor()?;
    let y_series = branch.twisted(&vec![0; branch.vars], big_n)?;
    let n = branch.n as u64;
    let mut acc = CSeries::zero(branch.vars, big_n);
    for k in (0..=g.degree()).rev() {
        acc = acc.mul(&y_series);
        for (m, c) in g.coefficient(k).terms() {
            acc.add_term(m.scale(n), CycElem::from_rational(1, c.clone()).embed(big_n)?);
        }
    }
    match acc.exp() {
        None => Err(Error::TruncationExceeded {
            needed: branch.truncation,
            bound: branch.truncation,
        }),
        Some((m, _)) => {
            let deg = m.total_degree();
            if deg >= BigUint::from(branch.truncation) {
                return Err(Error::TruncationExceeded {
                    needed: deg.to_u64().unwrap_or(u64::MAX),
                    bound: branch.truncation,
                });
            }
            Ok(ExponentVector::from_multi_index(m))
        }
    }
}

/// Predicted order from contact data: with `c` the contact of `g` (degree
/// `m`) with the branch of `cd`, the order is `n*m*c` when `n*c` misses
/// every lattice `M_q`, and `(r_q d_q + (nc - m_q) d_(q+1)) * m/n` for the
/// smallest `q` with `n*c` in `M_q` otherwise.
pub fn order_from_contact(cd: &CharData, m_deg: usize, c: &ExponentVector) -> ExponentVector {
    let n = cd.n as u64;
    let nc = c.scale_int(n);
    let q = smallest_lattice_index(cd, &nc);
    match q {
        None => c.scale_int(n * m_deg as u64),
        Some(q) => {
            let r_q = &cd.r_seq[q - 1];
            let m_q = &cd.m_seq[q - 1];
            let d_q = cd.d_seq[q - 1];
            let d_q1 = cd.d_seq[q];
            let ratio = Rational::new(Integer::from(m_deg as u64), Integer::from(n));
            r_q.scale_int(d_q)
                .add(&nc.sub(m_q).scale_int(d_q1))
                .scale(&ratio)
        }
    }
}

/// Smallest `q` with `v` in `M_q = (nZ)^e + m_1 Z + .. + m_q Z`, if any.
fn smallest_lattice_index(cd: &CharData, v: &ExponentVector) -> Option<usize> {
    if !v.is_integral() {
        return None;
    }
    let n = Integer::from(cd.n as u64);
    let v_int: Vec<Integer> = v.components().iter().map(Rational::to_integer).collect();
    let m_int: Vec<Vec<Integer>> = cd
        .m_seq
        .iter()
        .map(|m| m.components().iter().map(Rational::to_integer).collect())
        .collect();
    for q in 1..=cd.m_seq.len() {
        // lambda_j can be reduced mod n because n*m_j lies in (nZ)^e
        let mut lambda = vec![0u64; q];
        'enumerate: loop {
            let in_lattice = (0..cd.e).all(|i| {
                let mut acc = v_int[i].clone();
                for (l, m) in lambda.iter().zip(&m_int) {
                    acc -= Integer::from(*l) * &m[i];
                }
                acc.mod_floor(&n).is_zero()
            });
            if in_lattice {
                return Some(q);
            }
            let mut j = 0;
            loop {
                if j == q {
                    break 'enumerate;
                }
                lambda[j] += 1;
                if lambda[j] < cd.n as u64 {
                    break;
                }
                lambda[j] = 0;
                j += 1;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::{analyze, Config};
    use crate::polyring::{rat, ratio};

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(v)
    }

    /// Truncation of the example branch (x1 x2)^(1/4) (1 + x1^(1/2))^(1/4):
    /// binomial expansion t^(2,2) (1 + t1^4/4 - 3 t1^8/32 + ...).
    pub(crate) fn example1_branch() -> BranchSeries {
        BranchSeries::from_rational_terms(
            8,
            2,
            &[
                (&[2, 2], rat(1)),
                (&[6, 2], ratio(1, 4)),
                (&[10, 2], ratio(-3, 32)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_conjugates_of_a_cusp() {
        // y = t^3, n = 2 -> y^2 - x^3
        let b = BranchSeries::from_rational_terms(2, 1, &[(&[3], rat(1))]).unwrap();
        let f = branch_to_poly(&b).unwrap();
        let want = YPoly::from_coeffs_asc(
            1,
            vec![MPoly::from_terms(1, &[(&[3], -1)]), MPoly::zero(1), MPoly::one(1)],
        );
        assert_eq!(f, want);
    }

    #[test]
    fn example1_branch_reproduces_low_order_coefficients() {
        // The truncated branch generates a polynomial agreeing with the
        // degree-8 example on every coefficient the truncation certifies.
        let f = branch_to_poly(&example1_branch()).unwrap();
        let reference = crate::testutil::example1();
        // constant coefficient: certified through total degree 5
        assert_eq!(
            f.coefficient(0).truncate_total_degree(5),
            reference.coefficient(0)
        );
        // y^4 coefficient: certified through total degree 3
        assert_eq!(
            f.coefficient(4).truncate_total_degree(3),
            reference.coefficient(4)
        );
        // and the analysis data agrees completely
        let report = analyze(&f, Config::default()).unwrap();
        assert!(report.is_irreducible());
        let cd = report.char_data.unwrap();
        assert_eq!(cd.d_seq, vec![8, 2, 1]);
        assert_eq!(cd.r_seq, vec![ev(&[2, 2]), ev(&[12, 8])]);
    }

    #[test]
    fn quartic_plane_branch_is_irreducible() {
        // y = t^6 + t^7, n = 4: Puiseux exponents 3/2 then 7/4
        let b = BranchSeries::from_rational_terms(4, 1, &[(&[6], rat(1)), (&[7], rat(1))])
            .unwrap();
        let f = branch_to_poly(&b).unwrap();
        assert_eq!(f.degree(), 4);
        let report = analyze(&f, Config::default()).unwrap();
        assert!(report.is_irreducible());
    }

    #[test]
    fn orbit_size_mismatch_is_rejected() {
        // y = t^2 with n = 4: the orbit only has 2 distinct conjugates
        let b = BranchSeries::from_rational_terms(4, 1, &[(&[2], rat(1))]).unwrap();
        assert!(matches!(branch_to_poly(&b), Err(Error::OrbitSize { .. })));
    }

    #[test]
    fn orders_along_example_branch() {
        let b = example1_branch();
        let g1 = YPoly::y_power(2, 1);
        assert_eq!(order_of(&g1, &b).unwrap(), ev(&[2, 2]));
        let g2 = crate::testutil::quartic_root();
        assert_eq!(order_of(&g2, &b).unwrap(), ev(&[12, 8]));
        assert_eq!(order_of(&YPoly::one(2), &b).unwrap(), ev(&[0, 0]));
    }

    #[test]
    fn order_additivity() {
        let b = example1_branch();
        let g1 = YPoly::y_power(2, 1);
        let g2 = crate::testutil::quartic_root();
        let prod = g1.mul(&g2).unwrap();
        assert_eq!(
            order_of(&prod, &b).unwrap(),
            order_of(&g1, &b).unwrap().add(&order_of(&g2, &b).unwrap())
        );
    }

    #[test]
    fn truncation_is_reported() {
        let b = example1_branch();
        // substituting f itself leaves only terms past the bound
        let f = branch_to_poly(&b).unwrap();
        assert!(matches!(order_of(&f, &b), Err(Error::TruncationExceeded { .. })));
    }

    #[test]
    fn contact_order_formulas() {
        let report = analyze(&crate::testutil::example1(), Config::default()).unwrap();
        let cd = report.char_data.unwrap();
        // g = g_2 (degree 4), contact m_2 / n: case ii with q = 2
        let c = cd.m_seq[1].div_int(8);
        assert_eq!(order_from_contact(&cd, 4, &c), ev(&[12, 8]));
        // g = g_1 (degree 1), contact m_1 / n: case ii with q = 1
        let c = cd.m_seq[0].div_int(8);
        assert_eq!(order_from_contact(&cd, 1, &c), ev(&[2, 2]));
        // contact below m_1/n and off-lattice: case i
        let c = ExponentVector::new(vec![ratio(1, 8), ratio(1, 8)]);
        assert_eq!(order_from_contact(&cd, 1, &c), ev(&[1, 1]));
    }

    #[test]
    fn imaginary_coefficients_produce_rational_products() {
        // y = i t: conjugates over U_4 give y^4 - x^4... actually t -> w t
        // walks i t through all of i, -1, -i, 1 times t: product y^4 - t^4
        let i = CycElem::root_of_unity(4, 1).unwrap();
        let b = BranchSeries::new(4, 1, 32, 4, vec![(MultiIndex::from_u64s(&[1]), i)]).unwrap();
        let f = branch_to_poly(&b).unwrap();
        let want = YPoly::from_coeffs_asc(
            1,
            vec![
                MPoly::from_terms(1, &[(&[1], -1)]),
                MPoly::zero(1),
                MPoly::zero(1),
                MPoly::zero(1),
                MPoly::one(1),
            ],
        );
        assert_eq!(f, want);
    }
}
