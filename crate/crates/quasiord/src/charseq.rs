//! Lattice indices from gcds of minors, the `r`/`m` recursion, formal orders
//! and initial monomials with respect to a weight system, and bounded
//! semigroup membership.

use crate::error::{Error, Result};
use crate::gadic::g_support;
use crate::polyring::{Integer, MPoly, MultiIndex, Rational, YPoly};
use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A vector of exact rationals in the `t`-grading (`x_i = t_i^n`).
///
/// Holds `m_k`, `r_k`, the scaled basis vectors `r_0^i`, and formal-order
/// values.
#[derive(Clone, PartialEq, Eq)]
pub struct ExponentVector(Vec<Rational>);

impl ExponentVector {
    pub fn new(components: Vec<Rational>) -> Self {
        assert!(!components.is_empty());
        ExponentVector(components)
    }

    pub fn zero(e: usize) -> Self {
        Self::new(vec![Rational::zero(); e])
    }

    pub fn from_i64s(components: &[i64]) -> Self {
        Self::new(components.iter().map(|&c| crate::polyring::rat(c)).collect())
    }

    pub fn from_multi_index(m: &MultiIndex) -> Self {
        Self::new(
            m.components()
                .iter()
                .map(|c| Rational::from_integer(Integer::from(c.clone())))
                .collect(),
        )
    }

    /// `n` times the `i`-th unit vector (zero-based `i`).
    pub fn scaled_unit(e: usize, i: usize, n: u64) -> Self {
        let mut v = vec![Rational::zero(); e];
        v[i] = crate::polyring::rat(n as i64);
        Self::new(v)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; may produce negative entries, which callers
    /// validate where the context forbids them.
    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, k: u64) -> Self {
        self.scale(&crate::polyring::rat(k as i64))
    }

    pub fn div_int(&self, k: u64) -> Self {
        assert!(k > 0);
        self.scale(&(Rational::one() / crate::polyring::rat(k as i64)))
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|c| c.is_negative())
    }

    /// Integer parts, provided every entry is a nonnegative integer.
    pub fn to_biguints(&self) -> Option<Vec<BigUint>> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    c.to_integer().to_biguint()
                } else {
                    None
                }
            })
            .collect()
    }

    /// `true` when every component satisfies `self <= other`.
    pub fn le_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `true` when every component satisfies `self < other`.
    pub fn lt_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    /// Graded-lexicographic total order: compare coordinate sums, then the
    /// entries left to right.
    pub fn cmp_grlex(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len(), other.len());
        self.sum().cmp(&other.sum()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Two readings of a strict vector inequality `a < b`.
///
/// The weak-strict reading (componentwise `<=` plus `a != b`) is the one
/// consistent with the worked examples; strong-strict (`<` in every
/// coordinate) is exposed for sensitivity analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VectorStrictness {
    #[default]
    WeakStrict,
    StrongStrict,
}

/// `a < b` under the chosen strictness semantics.
pub fn strictly_less(a: &ExponentVector, b: &ExponentVector, mode: VectorStrictness) -> bool {
    match mode {
        VectorStrictness::WeakStrict => a.le_all(b) && a != b,
        VectorStrictness::StrongStrict => a.lt_all(b),
    }
}

/// Complete characteristic data of an irreducible quasi-ordinary branch.
#[derive(Debug, Clone)]
pub struct CharData {
    pub n: usize,
    pub e: usize,
    /// `D_1..D_(h+1)` with `D_1 = n^e` and `D_(h+1) = n^(e-1)`.
    pub big_d_seq: Vec<BigUint>,
    /// `d_k = D_k / n^(e-1)`; strictly decreasing, ends in 1.
    pub d_seq: Vec<u64>,
    /// `e_k = d_k / d_(k+1)`, `k = 1..h`.
    pub e_seq: Vec<u64>,
    pub r_seq: Vec<ExponentVector>,
    pub m_seq: Vec<ExponentVector>,
}

impl CharData {
    pub fn h(&self) -> usize {
        self.r_seq.len()
    }
}

// ---- gcd of minors ----

fn det_bigint(m: &[Vec<Integer>]) -> Integer {
    let size = m.len();
    match size {
        0 => Integer::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut det = Integer::zero();
            for col in 0..size {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Integer>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * det_bigint(&minor);
                if col % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
    }
}

/// gcd of the `(e,e)` minors of the `e x (e+k)` matrix `(n*I | v_1 .. v_k)`.
///
/// With no extra vectors this is `n^e`. Appending vectors never increases
/// the value, and the result is invariant under adding lattice vectors to a
/// column, which is why `r`-vectors can stand in for `m`-vectors here.
pub fn gcd_minors(n: u64, vectors: &[ExponentVector]) -> Result<BigUint> {
    let Some(first) = vectors.first() else {
        return Err(Error::Contract(
            "gcd_minors with no vectors needs an explicit dimension; use gcd_minors_dim".into(),
        ));
    };
    gcd_minors_dim(n, first.len(), vectors)
}

/// As [`gcd_minors`] with the ambient dimension passed explicitly, so the
/// empty vector list is well-defined.
pub fn gcd_minors_dim(n: u64, e: usize, vectors: &[ExponentVector]) -> Result<BigUint> {
    if n == 0 || e == 0 {
        return Err(Error::Contract("gcd_minors needs n >= 1 and e >= 1".into()));
    }
    let n_int = Integer::from(n);
    let mut columns: Vec<Vec<Integer>> = Vec::with_capacity(e + vectors.len());
    for i in 0..e {
        let mut col = vec![Integer::zero(); e];
        col[i] = n_int.clone();
        columns.push(col);
    }
    for v in vectors {
        if v.len() != e {
            return Err(Error::DimensionMismatch { expected: e, found: v.len() });
        }
        if !v.is_integral() {
            return Err(Error::NonIntegralVector);
        }
        columns.push(v.components().iter().map(Rational::to_integer).collect());
    }
    let total = columns.len();
    let mut gcd = BigUint::zero();
    let mut choice: Vec<usize> = (0..e).collect();
    loop {
        let m: Vec<Vec<Integer>> = (0..e)
            .map(|row| choice.iter().map(|&c| columns[c][row].clone()).collect())
            .collect();
        let det = det_bigint(&m);
        gcd = gcd.gcd(&det.abs().to_biguint().expect("nonnegative"));
        // next e-combination of column indices
        let mut i = e;
        loop {
            if i == 0 {
                return Ok(gcd);
            }
            i -= 1;
            if choice[i] + (e - i) < total {
                choice[i] += 1;
                for j in i + 1..e {
                    choice[j] = choice[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `D / n^(e-1)` when the division is exact, `None` otherwise (the lattice
/// conditions fail).
pub fn next_d(n: u64, e: usize, big_d: &BigUint) -> Option<u64> {
    let denom = BigUint::from(n).pow(e as u32 - 1);
    let (q, r) = big_d.div_rem(&denom);
    if !r.is_zero() {
        return None;
    }
    q.to_u64()
}

/// Direction of the affine recursion linking characteristic exponents to
/// semigroup generators: `r_1 = m_1`, `r_(k+1) = e_k r_k + m_(k+1) - m_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertDirection {
    MToR,
    RToM,
}

pub fn r_m_convert(
    direction: ConvertDirection,
    seq: &[ExponentVector],
    e_seq: &[u64],
) -> Result<Vec<ExponentVector>> {
    if seq.is_empty() {
        return Ok(Vec::new());
    }
    if e_seq.len() + 1 < seq.len() {
        return Err(Error::Contract("e-sequence too short for the recursion".into()));
    }
    let mut out = vec![seq[0].clone()];
    for k in 1..seq.len() {
        let prev_in = &seq[k - 1];
        let prev_out = &out[k - 1];
        let next = match direction {
            // r_(k+1) = e_k r_k + m_(k+1) - m_k
            ConvertDirection::MToR => out[k - 1]
                .scale_int(e_seq[k - 1])
                .add(&seq[k])
                .sub(prev_in),
            // m_(k+1) = r_(k+1) - e_k r_k + m_k
            ConvertDirection::RToM => seq[k]
                .sub(&prev_in.scale_int(e_seq[k - 1]))
                .add(prev_out),
        };
        if direction == ConvertDirection::RToM && next.has_negative() {
            return Err(Error::NegativeExponent { index: k + 1 });
        }
        out.push(next);
    }
    Ok(out)
}

// ---- formal order ----

/// Weights `(r_0^1/d, .., r_0^e/d, r_1/d, .., r_(k-1)/d)` pairing the
/// exponents of a multi-base expansion.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    /// One entry per variable; scalar multiples of the unit vectors.
    pub r0_weights: Vec<ExponentVector>,
    /// One entry per expansion base.
    pub base_weights: Vec<ExponentVector>,
}

impl WeightSystem {
    /// The step-`k` weight system: `r_0^i / d` and `r_j / d`.
    pub fn for_step(n: u64, e: usize, d: u64, r_prefix: &[ExponentVector]) -> Self {
        let r0_weights = (0..e)
            .map(|i| ExponentVector::scaled_unit(e, i, n).div_int(d))
            .collect();
        let base_weights = r_prefix.iter().map(|r| r.div_int(d)).collect();
        WeightSystem { r0_weights, base_weights }
    }

    pub fn vars(&self) -> usize {
        self.r0_weights.len()
    }
}

/// Result of the formal-order minimization over a multi-base support.
#[derive(Debug, Clone)]
pub struct FormalOrder {
    /// The minimal pairing value.
    pub value: ExponentVector,
    /// `exp` of the attaining coefficient.
    pub gamma: MultiIndex,
    /// The attaining exponent tuple.
    pub theta: Vec<u64>,
    /// `inco` of the attaining coefficient.
    pub coefficient: Rational,
    /// A second support element attaining the same value, when one exists.
    pub tie_with: Option<Vec<u64>>,
    /// Whether the winner is componentwise `<=` every competitor.
    pub dominant: bool,
}

fn pairing(w: &WeightSystem, gamma: &MultiIndex, theta: &[u64]) -> ExponentVector {
    let e = w.vars();
    let mut acc = ExponentVector::zero(e);
    for (i, g) in gamma.components().iter().enumerate() {
        let g = Rational::from_integer(Integer::from(g.clone()));
        acc = acc.add(&w.r0_weights[i].scale(&g));
    }
    for (j, &t) in theta.iter().enumerate() {
        if t > 0 {
            acc = acc.add(&w.base_weights[j].scale_int(t));
        }
    }
    acc
}

/// The formal order of `f` with respect to `(w, bases)`: the graded-lex
/// minimal pairing value over the multi-base support of `f`, together with
/// the attaining data. Ties and non-dominant minima are reported, never
/// silently broken.
pub fn formal_order(w: &WeightSystem, bases: &[YPoly], f: &YPoly) -> Result<FormalOrder> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if w.base_weights.len() != bases.len() {
        return Err(Error::Contract("one base weight per expansion base is required".into()));
    }
    if f.vars() != w.vars() {
        return Err(Error::DimensionMismatch { expected: w.vars(), found: f.vars() });
    }
    let support: Vec<(Vec<u64>, MPoly)> = if bases.is_empty() {
        if f.degree() > 0 {
            return Err(Error::Contract("no bases given but the polynomial involves y".into()));
        }
        vec![(Vec::new(), f.coefficient(0))]
    } else {
        let mut bounds: Vec<Option<u64>> = (0..bases.len() - 1)
            .map(|i| Some((bases[i + 1].degree() / bases[i].degree()) as u64))
            .collect();
        bounds.push(None);
        g_support(f, bases, &bounds)?
            .entries
            .into_iter()
            .collect()
    };
    let mut best: Option<FormalOrder> = None;
    let mut values: Vec<ExponentVector> = Vec::with_capacity(support.len());
    for (theta, c) in &support {
        let od = c.exp_lex()?;
        let value = pairing(w, &od.exponent, theta);
        values.push(value.clone());
        match &mut best {
            None => {
                best = Some(FormalOrder {
                    value,
                    gamma: od.exponent,
                    theta: theta.clone(),
                    coefficient: od.coefficient,
                    tie_with: None,
                    dominant: true,
                });
            }
            Some(b) => match value.cmp_grlex(&b.value) {
                Ordering::Less => {
                    *b = FormalOrder {
                        value,
                        gamma: od.exponent,
                        theta: theta.clone(),
                        coefficient: od.coefficient,
                        tie_with: None,
                        dominant: true,
                    };
                }
                Ordering::Equal => b.tie_with = Some(theta.clone()),
                Ordering::Greater => {}
            },
        }
    }
    let mut best = best.expect("nonzero polynomial has support");
    best.dominant = values.iter().all(|v| best.value.le_all(v));
    Ok(best)
}

/// The initial monomial with respect to `(w, bases)`: the coefficient,
/// `gamma`, and `theta` of the support element attaining the formal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialMonomial {
    pub coefficient: Rational,
    pub gamma: MultiIndex,
    pub theta: Vec<u64>,
}

pub fn initial_monomial(w: &WeightSystem, bases: &[YPoly], f: &YPoly) -> Result<InitialMonomial> {
    let fo = formal_order(w, bases, f)?;
    Ok(InitialMonomial { coefficient: fo.coefficient, gamma: fo.gamma, theta: fo.theta })
}

/// Decide by bounded enumeration whether `v` is a nonnegative integer
/// combination of `gens`. All inputs must be integral.
pub fn semigroup_membership(gens: &[ExponentVector], v: &ExponentVector) -> Result<bool> {
    let target = v.to_biguints().ok_or(Error::NonIntegralVector)?;
    let gens: Vec<Vec<BigUint>> = gens
        .iter()
        .map(|g| g.to_biguints().ok_or(Error::NonIntegralVector))
        .collect::<Result<_>>()?;
    fn search(gens: &[Vec<BigUint>], remaining: &[BigUint]) -> bool {
        if remaining.iter().all(BigUint::is_zero) {
            return true;
        }
        let Some((g, rest)) = gens.split_first() else {
            return false;
        };
        if g.iter().all(BigUint::is_zero) {
            return search(rest, remaining);
        }
        let cap = g
            .iter()
            .zip(remaining)
            .filter(|(gi, _)| !gi.is_zero())
            .map(|(gi, ri)| ri / gi)
            .min()
            .expect("nonzero generator");
        let mut c = BigUint::zero();
        while c <= cap {
            let reduced: Vec<BigUint> = remaining
                .iter()
                .zip(g)
                .map(|(ri, gi)| ri - gi * &c)
                .collect();
            if search(rest, &reduced) {
                return true;
            }
            c += 1u32;
        }
        false
    }
    Ok(search(&gens, &target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(v)
    }

    #[test]
    fn gcd_minors_empty_is_n_to_e() {
        assert_eq!(gcd_minors_dim(8, 2, &[]).unwrap(), BigUint::from(64u32));
    }

    #[test]
    fn gcd_minors_first_step() {
        assert_eq!(gcd_minors(8, &[ev(&[2, 2])]).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn gcd_minors_second_step() {
        assert_eq!(
            gcd_minors(8, &[ev(&[2, 2]), ev(&[12, 8])]).unwrap(),
            BigUint::from(8u32)
        );
    }

    #[test]
    fn gcd_minors_third_example() {
        assert_eq!(gcd_minors(8, &[ev(&[3, 2])]).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn gcd_minors_rejects_fractions() {
        let v = ExponentVector::new(vec![crate::polyring::ratio(1, 2), rat(1)]);
        assert!(matches!(gcd_minors(8, &[v]), Err(Error::NonIntegralVector)));
    }

    #[test]
    fn gcd_minors_never_increases_when_appending() {
        let base = gcd_minors(8, &[ev(&[2, 2])]).unwrap();
        for extra in [[12i64, 8], [5, 1], [0, 0], [7, 7]] {
            let with = gcd_minors(8, &[ev(&[2, 2]), ev(&extra)]).unwrap();
            assert!(with <= base, "appending {extra:?} grew the gcd");
            assert!(base.is_multiple_of(&with));
        }
    }

    #[test]
    fn gcd_minors_lattice_invariance() {
        // replacing v by v + n*unit or v + earlier column leaves it unchanged
        let d = gcd_minors(8, &[ev(&[2, 2]), ev(&[12, 8])]).unwrap();
        assert_eq!(gcd_minors(8, &[ev(&[2, 2]), ev(&[20, 8])]).unwrap(), d);
        assert_eq!(gcd_minors(8, &[ev(&[2, 2]), ev(&[14, 10])]).unwrap(), d);
    }

    #[test]
    fn next_d_divides() {
        assert_eq!(next_d(8, 2, &BigUint::from(16u32)), Some(2));
        assert_eq!(next_d(8, 2, &BigUint::from(8u32)), Some(1));
        assert_eq!(next_d(8, 2, &BigUint::from(4u32)), None);
    }

    #[test]
    fn m_to_r_derived_example() {
        // m = ((2,2),(6,2)), e_1 = 4  ->  r = ((2,2),(12,8))
        let r = r_m_convert(ConvertDirection::MToR, &[ev(&[2, 2]), ev(&[6, 2])], &[4]).unwrap();
        assert_eq!(r, vec![ev(&[2, 2]), ev(&[12, 8])]);
    }

    #[test]
    fn r_to_m_base_case() {
        let m = r_m_convert(ConvertDirection::RToM, &[ev(&[2, 2])], &[]).unwrap();
        assert_eq!(m, vec![ev(&[2, 2])]);
    }

    #[test]
    fn conversions_are_inverse() {
        let m = vec![ev(&[2, 2]), ev(&[6, 2]), ev(&[7, 3])];
        let e = [4u64, 2];
        let r = r_m_convert(ConvertDirection::MToR, &m, &e).unwrap();
        let back = r_m_convert(ConvertDirection::RToM, &r, &e).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn formal_order_example1_r2() {
        let w = WeightSystem::for_step(8, 2, 2, &[ev(&[2, 2])]);
        assert_eq!(w.r0_weights, vec![ev(&[4, 0]), ev(&[0, 4])]);
        assert_eq!(w.base_weights, vec![ev(&[1, 1])]);
        let g1 = YPoly::y_power(2, 1);
        let f = YPoly::constant(2, MPoly::from_terms(2, &[(&[3, 2], 1)]));
        let fo = formal_order(&w, &[g1], &f).unwrap();
        assert_eq!(fo.value, ev(&[12, 8]));
        assert_eq!(fo.theta, vec![0]);
        assert!(fo.tie_with.is_none());
        assert!(fo.dominant);
    }

    #[test]
    fn formal_order_example2_r2() {
        let w = WeightSystem::for_step(8, 2, 2, &[ev(&[2, 2])]);
        let g1 = YPoly::y_power(2, 1);
        let f = YPoly::constant(2, MPoly::from_terms(2, &[(&[4, 2], 1), (&[5, 3], 1)]));
        let fo = formal_order(&w, &[g1], &f).unwrap();
        assert_eq!(fo.value, ev(&[16, 8]));
    }

    #[test]
    fn formal_order_of_one_is_zero() {
        let w = WeightSystem::for_step(8, 2, 2, &[ev(&[2, 2])]);
        let fo = formal_order(&w, &[YPoly::y_power(2, 1)], &YPoly::one(2)).unwrap();
        assert_eq!(fo.value, ExponentVector::zero(2));
    }

    #[test]
    fn formal_order_reports_ties() {
        // weights ((1,0),(0,1)) and base weight (1,1): x1*x2 and g_1 pair equally
        let w = WeightSystem::for_step(2, 2, 2, &[ev(&[2, 2])]);
        let g1 = YPoly::y_power(2, 1);
        // F = x1*x2 + y: both support elements pair to (1,1)
        let f = YPoly::from_coeffs_asc(
            2,
            vec![MPoly::from_terms(2, &[(&[1, 1], 1)]), MPoly::one(2)],
        );
        let fo = formal_order(&w, &[g1], &f).unwrap();
        assert!(fo.tie_with.is_some());
    }

    #[test]
    fn initial_monomial_picks_attaining_term() {
        // Second-example coefficient: the x1^4 x2^2 term attains the minimum
        let w = WeightSystem::for_step(8, 2, 2, &[ev(&[2, 2])]);
        let g1 = YPoly::y_power(2, 1);
        let f = YPoly::constant(2, MPoly::from_terms(2, &[(&[4, 2], -1), (&[5, 3], -1)]));
        let im = initial_monomial(&w, &[g1], &f).unwrap();
        assert_eq!(im.gamma, MultiIndex::from_u64s(&[4, 2]));
        assert_eq!(im.coefficient, rat(-1));
        assert_eq!(im.theta, vec![0]);
    }

    #[test]
    fn initial_monomial_singleton_support() {
        let w = WeightSystem::for_step(8, 2, 1, &[ev(&[2, 2])]);
        let g1 = YPoly::y_power(2, 1);
        let f = g1.pow(2).scale(&rat(3));
        let im = initial_monomial(&w, &[g1], &f).unwrap();
        assert_eq!(im.theta, vec![2]);
        assert_eq!(im.coefficient, rat(3));
        assert_eq!(im.gamma, MultiIndex::zero(2));
    }

    #[test]
    fn semigroup_membership_examples() {
        let gens = [ev(&[8, 0]), ev(&[0, 8]), ev(&[2, 2])];
        assert!(!semigroup_membership(&gens, &ev(&[12, 8])).unwrap());
        assert!(semigroup_membership(&gens, &ev(&[10, 10])).unwrap());
        assert!(semigroup_membership(&gens, &ExponentVector::zero(2)).unwrap());
    }

    #[test]
    fn semigroup_membership_lattice_counterexample() {
        // e_1 * r_1 lands back in the coarse lattice: (8,8) = (8,0) + (0,8).
        let gens = [ev(&[8, 0]), ev(&[0, 8])];
        assert!(semigroup_membership(&gens, &ev(&[8, 8])).unwrap());
    }

    #[test]
    fn strictness_modes() {
        let a = ev(&[16, 16]);
        let b = ev(&[24, 16]);
        assert!(strictly_less(&a, &b, VectorStrictness::WeakStrict));
        assert!(!strictly_less(&a, &b, VectorStrictness::StrongStrict));
        assert!(!strictly_less(&a, &a, VectorStrictness::WeakStrict));
    }
}
