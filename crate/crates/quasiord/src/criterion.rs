//! The irreducibility decision loop.
//!
//! [`analyze`] builds, from the equation of a monic `f` alone, the
//! gcd-sequence `d_1 > d_2 > ... > d_(h+1) = 1`, the approximate roots
//! `g_k = App_(d_k)(f)`, the semigroup generators `r_k`, and the generalized
//! Newton polygons of consecutive roots, and decides whether `f` is an
//! irreducible quasi-ordinary polynomial. Every verdict ships with the
//! evidence that produced it.

use crate::charseq::{
    self, CharData, ConvertDirection, ExponentVector, VectorStrictness, WeightSystem,
};
use crate::error::{Error, Result};
use crate::gadic::{approximate_root, g_adic};
use crate::gnp::{build_gnp, straightness, GNPolygon, Straightness};
use crate::polyring::{MPoly, MultiIndex, Rational, YPoly};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Knobs for the deliberately ambiguous corners of the vector inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Config {
    /// Semantics of the strict vector comparisons in the growth condition
    /// and in strict straightness.
    pub strictness: VectorStrictness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    IrreducibleQuasiOrdinary,
    NotIrreducibleQuasiOrdinary,
}

/// Why the criterion rejected the input. The payload is enough to reproduce
/// the failed check.
#[derive(Debug, Clone, PartialEq)]
pub enum FailureKind {
    /// The constant coefficient vanishes, so `y` divides `f`.
    TrivialFactorY,
    /// `n^(e-1)` does not divide the gcd of minors (or an `r`-vector left
    /// the integer lattice), so no gcd-sequence exists.
    LatticeViolation { big_d: BigUint },
    /// The gcd-sequence repeated: `d_(k+1) = d_k`.
    LatticeStagnation { d: u64 },
    /// The growth condition `r_k d_k < r_(k+1) d_(k+1)` failed.
    OrderingViolation { left: ExponentVector, right: ExponentVector },
    /// A polygon failed strict straightness. `witness` holds the violating
    /// interior point and its bound when the failure is interior; `None`
    /// means the endpoint condition `fO(a_d) = d fO(g)` failed.
    StraightnessViolation {
        witness: Option<(usize, ExponentVector, ExponentVector)>,
    },
    /// An expansion coefficient `a_d` vanished: a proper base divides `f`.
    BaseDividesF,
    /// A formal-order minimum was attained twice; the result would depend on
    /// an arbitrary tie-break, so the analysis stops.
    AmbiguousInitialMonomial { theta_a: Vec<u64>, theta_b: Vec<u64> },
}

impl FailureKind {
    pub fn code(&self) -> &'static str {
        match self {
            FailureKind::TrivialFactorY => "trivial_factor_y",
            FailureKind::LatticeViolation { .. } => "lattice_violation",
            FailureKind::LatticeStagnation { .. } => "lattice_stagnation",
            FailureKind::OrderingViolation { .. } => "ordering_violation",
            FailureKind::StraightnessViolation { .. } => "straightness_violation",
            FailureKind::BaseDividesF => "base_divides_f",
            FailureKind::AmbiguousInitialMonomial { .. } => "ambiguous_initial_monomial",
        }
    }
}

/// A failed check, tagged with the step index `k` at which it fired.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub kind: FailureKind,
    pub step: usize,
}

/// One generalized Newton polygon checked by the criterion, with its verdict.
#[derive(Debug, Clone)]
pub struct PolygonRecord {
    /// The index `k` of the check: the polygon of `g_k` against `g_(k-1)`
    /// (`g_(h+1)` meaning `f` itself).
    pub step: usize,
    pub target: String,
    pub base: String,
    pub polygon: GNPolygon,
    pub straightness: Option<Straightness>,
}

/// Everything the analysis established, success or failure.
#[derive(Debug, Clone)]
pub struct Report {
    pub verdict: Verdict,
    pub failure: Option<Failure>,
    /// Complete characteristic data; present exactly on success.
    pub char_data: Option<CharData>,
    /// `D_1..` as far as the run got.
    pub big_d_seq: Vec<BigUint>,
    /// `d_1..` as far as the run got.
    pub d_seq: Vec<u64>,
    /// `r_1..` as far as the run got.
    pub r_seq: Vec<ExponentVector>,
    /// `g_1, g_2, ..` as far as the run got (roots of the normalized `f`).
    pub approximate_roots: Vec<YPoly>,
    pub polygons: Vec<PolygonRecord>,
    /// `r_0^1..r_0^e, r_1..r_h` on success, empty otherwise.
    pub semigroup_generators: Vec<ExponentVector>,
    /// The shift `s` with `f(y - s)` used throughout (`a_1` elimination).
    pub normalization_shift: MPoly,
    pub notes: Vec<String>,
    pub config: Config,
    pub n: usize,
    pub e: usize,
}

impl Report {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::IrreducibleQuasiOrdinary
    }

    /// `r_h * d_h`, defined on success with `h >= 1`.
    pub fn r_h_d_h(&self) -> Option<ExponentVector> {
        let cd = self.char_data.as_ref()?;
        let h = cd.h();
        if h == 0 {
            return None;
        }
        Some(cd.r_seq[h - 1].scale_int(cd.d_seq[h - 1]))
    }
}

/// Substitute `y -> y - a_1/n` so that the subleading coefficient vanishes.
/// Returns the normalized polynomial and the shift `s`.
pub fn normalize_a1(f: &YPoly) -> Result<(YPoly, MPoly)> {
    if !f.is_monic() || f.degree() == 0 {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    let a1 = f.a_coeff(1);
    if a1.is_zero() {
        return Ok((f.clone(), MPoly::zero(f.vars())));
    }
    let shift = a1.scale(&(Rational::one() / crate::polyring::rat(n as i64)));
    let normalized = f.shift_y(&shift.neg())?;
    if !normalized.a_coeff(1).is_zero() {
        return Err(Error::Internal("normalization failed to clear a_1".into()));
    }
    Ok((normalized, shift))
}

/// `y^n - c x^alpha` is irreducible iff `gcd(n, alpha_1..alpha_e) = 1`.
pub fn binomial_irreducible(n: u64, alpha: &MultiIndex) -> bool {
    use num_integer::Integer as _;
    let mut g = BigUint::from(n);
    for c in alpha.components() {
        g = g.gcd(c);
    }
    g.is_one()
}

struct Run {
    report: Report,
    f: YPoly,
}

impl Run {
    fn fail(mut self, kind: FailureKind, step: usize) -> Report {
        self.report.verdict = Verdict::NotIrreducibleQuasiOrdinary;
        self.report.failure = Some(Failure { kind, step });
        self.report
    }
}

/// Decide whether monic `f` is an irreducible quasi-ordinary polynomial.
///
/// The verdict "not irreducible quasi-ordinary" does not distinguish
/// reducibility from failure of quasi-ordinariness; the criterion
/// characterizes only the conjunction.
pub fn analyze(f: &YPoly, config: Config) -> Result<Report> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::Contract("analysis needs degree >= 1 in y".into()));
    }
    let e = f.vars();

    let mut report = Report {
        verdict: Verdict::IrreducibleQuasiOrdinary,
        failure: None,
        char_data: None,
        big_d_seq: vec![BigUint::from(n as u64).pow(e as u32)],
        d_seq: vec![n as u64],
        r_seq: Vec::new(),
        approximate_roots: Vec::new(),
        polygons: Vec::new(),
        semigroup_generators: Vec::new(),
        normalization_shift: MPoly::zero(e),
        notes: Vec::new(),
        config,
        n,
        e,
    };

    // Degree 1 is trivially an irreducible quasi-ordinary polynomial.
    if n == 1 {
        report.approximate_roots.push(f.clone());
        report.char_data = Some(CharData {
            n,
            e,
            big_d_seq: report.big_d_seq.clone(),
            d_seq: vec![1],
            e_seq: Vec::new(),
            r_seq: Vec::new(),
            m_seq: Vec::new(),
        });
        report.semigroup_generators =
            (0..e).map(|i| ExponentVector::scaled_unit(e, i, 1)).collect();
        report.notes.push("degree 1: trivially irreducible".into());
        return Ok(report);
    }

    let (normalized, shift) = normalize_a1(f)?;
    if !shift.is_zero() {
        report.notes.push("input normalized to eliminate the y^(n-1) coefficient".into());
    }
    report.normalization_shift = shift;

    let g1 = YPoly::y_power(e, 1);
    report.approximate_roots.push(g1);
    let mut run = Run { report, f: normalized };

    let a_n = run.f.a_coeff(n);
    if a_n.is_zero() {
        return Ok(run.fail(FailureKind::TrivialFactorY, 1));
    }
    // r_1 = m_1 = exp(a_n); the formal-order route with unit weights agrees.
    let r1 = ExponentVector::from_multi_index(&a_n.exp_lex()?.exponent);
    run.report.r_seq.push(r1);

    // d-sequence loop: d halves at minimum, so log2(n) + 2 steps suffice.
    let cap = (usize::BITS - n.leading_zeros()) as usize + 2;
    let h = loop {
        let k = run.report.r_seq.len();
        if k > cap {
            return Err(Error::Internal("gcd-sequence loop exceeded its bound".into()));
        }
        if run.report.r_seq.iter().any(|r| !r.is_integral() || r.has_negative()) {
            let big_d = run.report.big_d_seq.last().unwrap().clone();
            return Ok(run.fail(FailureKind::LatticeViolation { big_d }, k + 1));
        }
        let big_d = charseq::gcd_minors_dim(n as u64, e, &run.report.r_seq)?;
        run.report.big_d_seq.push(big_d.clone());
        let Some(d_next) = charseq::next_d(n as u64, e, &big_d) else {
            return Ok(run.fail(FailureKind::LatticeViolation { big_d }, k + 1));
        };
        run.report.d_seq.push(d_next);
        if d_next == run.report.d_seq[k - 1] {
            return Ok(run.fail(FailureKind::LatticeStagnation { d: d_next }, k + 1));
        }
        if d_next == 1 {
            break k;
        }
        let g_next = approximate_root(&run.f, d_next as usize)?;
        let expansion = g_adic(&run.f, &g_next)?;
        let beta_last = expansion.a(d_next as usize);
        if beta_last.is_zero() {
            return Ok(run.fail(FailureKind::BaseDividesF, k + 1));
        }
        let w = WeightSystem::for_step(n as u64, e, d_next, &run.report.r_seq);
        let fo = charseq::formal_order(&w, &run.report.approximate_roots, beta_last)?;
        if let Some(other) = fo.tie_with {
            return Ok(run.fail(
                FailureKind::AmbiguousInitialMonomial { theta_a: fo.theta, theta_b: other },
                k + 1,
            ));
        }
        if !fo.dominant {
            run.report
                .notes
                .push(format!("formal-order minimum at step {} is not componentwise dominant", k + 1));
        }
        run.report.r_seq.push(fo.value);
        run.report.approximate_roots.push(g_next);
    };

    // Growth condition: r_k d_k < r_(k+1) d_(k+1) for 1 <= k <= h-1.
    for k in 1..h {
        let left = run.report.r_seq[k - 1].scale_int(run.report.d_seq[k - 1]);
        let right = run.report.r_seq[k].scale_int(run.report.d_seq[k]);
        if !charseq::strictly_less(&left, &right, config.strictness) {
            return Ok(run.fail(FailureKind::OrderingViolation { left, right }, k));
        }
    }

    // Straightness of consecutive roots: polygons of g_k against g_(k-1)
    // for 2 <= k <= h+1, with g_(h+1) = f.
    for k in 2..=h + 1 {
        let target = if k <= h {
            run.report.approximate_roots[k - 1].clone()
        } else {
            run.f.clone()
        };
        let target_label = if k <= h { format!("g_{k}") } else { "f".into() };
        let base = run.report.approximate_roots[k - 2].clone();
        let d_k = run.report.d_seq[k - 1];
        let w = WeightSystem::for_step(n as u64, e, d_k, &run.report.r_seq[..k - 1]);
        let g_bases = &run.report.approximate_roots[..k - 1];
        let polygon = build_gnp(&target, &w, g_bases, &base)?;
        if let Some(&bad) = polygon.ambiguous_indices.first() {
            run.report.polygons.push(PolygonRecord {
                step: k,
                target: target_label,
                base: format!("g_{}", k - 1),
                polygon,
                straightness: None,
            });
            return Ok(run.fail(
                FailureKind::AmbiguousInitialMonomial {
                    theta_a: vec![bad as u64],
                    theta_b: Vec::new(),
                },
                k,
            ));
        }
        for &idx in &polygon.non_dominant_indices {
            run.report.notes.push(format!(
                "polygon at step {k}: formal order of a_{idx} is not componentwise dominant"
            ));
        }
        if !polygon.has_final_point() {
            run.report.polygons.push(PolygonRecord {
                step: k,
                target: target_label,
                base: format!("g_{}", k - 1),
                polygon,
                straightness: None,
            });
            return Ok(run.fail(FailureKind::BaseDividesF, k));
        }
        let class = straightness(&polygon, config.strictness)?;
        let witness = crate::gnp::first_interior_violation(&polygon, config.strictness);
        run.report.polygons.push(PolygonRecord {
            step: k,
            target: target_label,
            base: format!("g_{}", k - 1),
            polygon,
            straightness: Some(class),
        });
        if class != Straightness::StrictlyStraight {
            return Ok(run.fail(FailureKind::StraightnessViolation { witness }, k));
        }
    }

    // Success: assemble characteristic data and the semigroup generators.
    let mut report = run.report;
    let d_seq = report.d_seq.clone();
    let e_seq: Vec<u64> = (0..h).map(|k| d_seq[k] / d_seq[k + 1]).collect();
    let m_seq = charseq::r_m_convert(ConvertDirection::RToM, &report.r_seq, &e_seq)?;
    if m_seq.len() >= 2 {
        report.notes.push(
            "characteristic exponents recovered through the affine recursion from the r-sequence"
                .into(),
        );
    }
    report.char_data = Some(CharData {
        n,
        e,
        big_d_seq: report.big_d_seq.clone(),
        d_seq,
        e_seq,
        r_seq: report.r_seq.clone(),
        m_seq,
    });
    report.semigroup_generators = (0..e)
        .map(|i| ExponentVector::scaled_unit(e, i, n as u64))
        .chain(report.r_seq.iter().cloned())
        .collect();
    Ok(report)
}

/// Test-harness property from the order-bound fact: if `f` is irreducible
/// with data in `report` and `order = O(f, F)` exceeds `r_h d_h`
/// componentwise for a monic `F` of the same degree, `F` must be
/// irreducible too. Returns the truth of that implication (vacuously true
/// when the bound is not exceeded).
pub fn check_order_bound(
    report: &Report,
    f_check: &YPoly,
    order: &ExponentVector,
    config: Config,
) -> Result<bool> {
    if !report.is_irreducible() {
        return Err(Error::Contract("order-bound check needs an irreducible base report".into()));
    }
    if f_check.degree() != report.n {
        return Err(Error::Contract("order-bound check needs equal degrees".into()));
    }
    let Some(bound) = report.r_h_d_h() else {
        return Err(Error::Contract("order-bound check needs h >= 1".into()));
    };
    if !bound.lt_all(order) {
        return Ok(true);
    }
    Ok(analyze(f_check, config)?.is_irreducible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example1, example2, example3, quartic_root};

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(v)
    }

    #[test]
    fn normalize_quadratic() {
        // y^2 + 2 x1 y + x1^3 -> (y^2 + x1^3 - x1^2, shift x1)
        let f = YPoly::from_coeffs_asc(
            2,
            vec![
                MPoly::from_terms(2, &[(&[3, 0], 1)]),
                MPoly::from_terms(2, &[(&[1, 0], 2)]),
                MPoly::one(2),
            ],
        );
        let (g, s) = normalize_a1(&f).unwrap();
        assert_eq!(s, MPoly::var(2, 0));
        let want = YPoly::from_coeffs_asc(
            2,
            vec![
                MPoly::from_terms(2, &[(&[3, 0], 1), (&[2, 0], -1)]),
                MPoly::zero(2),
                MPoly::one(2),
            ],
        );
        assert_eq!(g, want);
    }

    #[test]
    fn normalize_fixed_point() {
        let f = example1();
        let (g, s) = normalize_a1(&f).unwrap();
        assert_eq!(g, f);
        assert!(s.is_zero());
    }

    #[test]
    fn normalize_perfect_cube() {
        // y^3 + 3 x2 y^2 + 3 x2^2 y + x2^3 -> (y^3, shift x2)
        let lin = YPoly::from_coeffs_asc(2, vec![MPoly::var(2, 1), MPoly::one(2)]);
        let f = lin.pow(3);
        let (g, s) = normalize_a1(&f).unwrap();
        assert_eq!(g, YPoly::y_power(2, 3));
        assert_eq!(s, MPoly::var(2, 1));
    }

    #[test]
    fn analyze_example1_is_irreducible() {
        let report = analyze(&example1(), Config::default()).unwrap();
        assert!(report.is_irreducible());
        let cd = report.char_data.as_ref().unwrap();
        assert_eq!(cd.d_seq, vec![8, 2, 1]);
        assert_eq!(cd.r_seq, vec![ev(&[2, 2]), ev(&[12, 8])]);
        assert_eq!(cd.m_seq, vec![ev(&[2, 2]), ev(&[6, 2])]);
        assert_eq!(report.approximate_roots[1], quartic_root());
        assert_eq!(
            report.semigroup_generators,
            vec![ev(&[8, 0]), ev(&[0, 8]), ev(&[2, 2]), ev(&[12, 8])]
        );
    }

    #[test]
    fn analyze_example2_stalls() {
        let report = analyze(&example2(), Config::default()).unwrap();
        assert!(!report.is_irreducible());
        let failure = report.failure.as_ref().unwrap();
        assert_eq!(failure.step, 3);
        assert_eq!(failure.kind, FailureKind::LatticeStagnation { d: 2 });
        assert_eq!(report.r_seq, vec![ev(&[2, 2]), ev(&[16, 8])]);
        assert_eq!(report.d_seq, vec![8, 2, 2]);
    }

    #[test]
    fn analyze_example3_straightness() {
        let report = analyze(&example3(), Config::default()).unwrap();
        assert!(!report.is_irreducible());
        let failure = report.failure.as_ref().unwrap();
        assert_eq!(failure.step, 2);
        match &failure.kind {
            FailureKind::StraightnessViolation { witness: Some((k, a, bound)) } => {
                assert_eq!(*k, 3);
                assert_eq!(a, &ev(&[8, 0]));
                assert_eq!(bound, &ev(&[9, 6]));
            }
            other => panic!("unexpected failure {other:?}"),
        }
    }

    #[test]
    fn strong_strictness_rejects_example1() {
        // r_1 d_1 = (16,16) vs r_2 d_2 = (24,16): equal second coordinate,
        // so the literal coordinatewise reading rejects the paper's own
        // irreducible example. That is exactly why weak-strict is default.
        let config = Config { strictness: VectorStrictness::StrongStrict };
        let report = analyze(&example1(), config).unwrap();
        assert!(!report.is_irreducible());
        assert!(matches!(
            report.failure.as_ref().unwrap().kind,
            FailureKind::OrderingViolation { .. }
        ));
    }

    #[test]
    fn trivial_y_factor_detected() {
        // y^3 - x1 y = y(y^2 - x1)
        let f = YPoly::from_coeffs_asc(
            1,
            vec![MPoly::zero(1), MPoly::var(1, 0).neg(), MPoly::zero(1), MPoly::one(1)],
        );
        let report = analyze(&f, Config::default()).unwrap();
        assert_eq!(report.failure.unwrap().kind, FailureKind::TrivialFactorY);
    }

    #[test]
    fn perfect_square_base_divides() {
        let f = quartic_root().pow(2);
        let report = analyze(&f, Config::default()).unwrap();
        assert_eq!(report.failure.unwrap().kind, FailureKind::BaseDividesF);
    }

    #[test]
    fn degree_one_is_trivially_irreducible() {
        let f = YPoly::from_coeffs_asc(2, vec![MPoly::var(2, 0), MPoly::one(2)]);
        let report = analyze(&f, Config::default()).unwrap();
        assert!(report.is_irreducible());
        assert_eq!(report.char_data.unwrap().d_seq, vec![1]);
    }

    #[test]
    fn unit_constant_coefficient_stalls() {
        // y^2 - 1 - x1: two units as roots, not a branch through the origin
        let f = YPoly::from_coeffs_asc(
            1,
            vec![
                MPoly::from_terms(1, &[(&[0], -1), (&[1], -1)]),
                MPoly::zero(1),
                MPoly::one(1),
            ],
        );
        let report = analyze(&f, Config::default()).unwrap();
        assert_eq!(report.failure.unwrap().kind, FailureKind::LatticeStagnation { d: 2 });
    }

    #[test]
    fn binomial_gcd_rule() {
        assert!(binomial_irreducible(8, &MultiIndex::from_u64s(&[3, 2])));
        assert!(!binomial_irreducible(4, &MultiIndex::from_u64s(&[2, 2])));
        assert!(binomial_irreducible(1, &MultiIndex::from_u64s(&[5, 0])));
    }

    #[test]
    fn verdict_stable_under_y_rescaling() {
        // analyze(c^n f(x, y/c)) matches analyze(f)
        let f = example1();
        let c = crate::polyring::ratio(3, 2);
        let n = f.degree();
        let mut coeffs = Vec::new();
        for i in 0..=n {
            // coefficient of y^i picks up c^(n-i)
            let mut scale = Rational::one();
            for _ in 0..(n - i) {
                scale *= &c;
            }
            coeffs.push(f.coefficient(i).scale(&scale));
        }
        let rescaled = YPoly::from_coeffs_asc(2, coeffs);
        let a = analyze(&f, Config::default()).unwrap();
        let b = analyze(&rescaled, Config::default()).unwrap();
        assert_eq!(a.verdict, b.verdict);
        assert_eq!(a.d_seq, b.d_seq);
        assert_eq!(a.r_seq, b.r_seq);
    }

    #[test]
    fn product_of_branches_rejected() {
        // (y^2 - x1 x2)(y^2 - x1^3 x2) is monic but reducible
        let a = YPoly::from_coeffs_asc(
            2,
            vec![MPoly::from_terms(2, &[(&[1, 1], -1)]), MPoly::zero(2), MPoly::one(2)],
        );
        let b = YPoly::from_coeffs_asc(
            2,
            vec![MPoly::from_terms(2, &[(&[3, 1], -1)]), MPoly::zero(2), MPoly::one(2)],
        );
        let report = analyze(&a.mul(&b).unwrap(), Config::default()).unwrap();
        assert!(!report.is_irreducible());
    }

    #[test]
    fn order_bound_guards() {
        let report = analyze(&example1(), Config::default()).unwrap();
        // degree mismatch violates the precondition
        let short = quartic_root();
        assert!(check_order_bound(&report, &short, &ev(&[100, 100]), Config::default()).is_err());
        // below the bound the implication is vacuous
        assert!(check_order_bound(&report, &example2(), &ev(&[1, 1]), Config::default()).unwrap());
    }
}
