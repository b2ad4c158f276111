//! Generalized Newton polygons and the straightness predicates.

use crate::charseq::{ExponentVector, FormalOrder, VectorStrictness, WeightSystem};
use crate::error::{Error, Result};
use crate::gadic::g_adic;
use crate::polyring::YPoly;

/// One point of a generalized Newton polygon: the pair
/// `(fO(a_k), (d-k)*fO(g))` at expansion index `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GNPoint {
    pub index: usize,
    pub a_order: ExponentVector,
    pub g_order_scaled: ExponentVector,
}

/// The generalized Newton polygon of `f` with respect to `(w, G, g)`: the
/// point at `k = 0` plus one point per nonzero expansion coefficient.
#[derive(Debug, Clone)]
pub struct GNPolygon {
    pub d: usize,
    pub g_order: ExponentVector,
    pub points: Vec<GNPoint>,
    /// Expansion indices whose formal order had a tied minimum.
    pub ambiguous_indices: Vec<usize>,
    /// Expansion indices whose formal-order winner was not componentwise
    /// below every competitor (diagnostic only).
    pub non_dominant_indices: Vec<usize>,
}

impl GNPolygon {
    pub fn point(&self, k: usize) -> Option<&GNPoint> {
        self.points.iter().find(|p| p.index == k)
    }

    /// Whether `a_d != 0`; when false, `g` divides the expanded polynomial.
    pub fn has_final_point(&self) -> bool {
        self.point(self.d).is_some()
    }

    /// The point pairs `(fO(a_k), (d-k) fO(g))` as plain data, for
    /// comparisons against printed listings.
    pub fn point_pairs(&self) -> Vec<(ExponentVector, ExponentVector)> {
        self.points
            .iter()
            .map(|p| (p.a_order.clone(), p.g_order_scaled.clone()))
            .collect()
    }
}

/// Classification of a polygon under Definition-style straightness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Straightness {
    NotStraight,
    Straight,
    StrictlyStraight,
}

/// Build the generalized Newton polygon of `f` with respect to the weight
/// system `w`, expansion bases `g_bases`, and expansion base `g`.
///
/// `f` expands `g`-adically with `d = deg f / deg g`; each nonzero `a_k` gets
/// the point `(fO(a_k), (d-k) fO(g))`, and `k = 0` contributes
/// `(0, d*fO(g))`.
pub fn build_gnp(
    f: &YPoly,
    w: &WeightSystem,
    g_bases: &[YPoly],
    g: &YPoly,
) -> Result<GNPolygon> {
    let expansion = g_adic(f, g)?;
    let d = expansion.exponent_d;
    let g_order = crate::charseq::formal_order(w, g_bases, g)?;
    let e = w.vars();
    let mut points = vec![GNPoint {
        index: 0,
        a_order: ExponentVector::zero(e),
        g_order_scaled: g_order.value.scale_int(d as u64),
    }];
    let mut ambiguous = Vec::new();
    let mut non_dominant = Vec::new();
    if g_order.tie_with.is_some() {
        ambiguous.push(0);
    }
    for k in 1..=d {
        let a_k = expansion.a(k);
        if a_k.is_zero() {
            continue;
        }
        let fo: FormalOrder = crate::charseq::formal_order(w, g_bases, a_k)?;
        if fo.tie_with.is_some() {
            ambiguous.push(k);
        }
        if !fo.dominant {
            non_dominant.push(k);
        }
        points.push(GNPoint {
            index: k,
            a_order: fo.value,
            g_order_scaled: g_order.value.scale_int((d - k) as u64),
        });
    }
    Ok(GNPolygon {
        d,
        g_order: g_order.value,
        points,
        ambiguous_indices: ambiguous,
        non_dominant_indices: non_dominant,
    })
}

/// First interior index violating the straightness inequality for the given
/// strictness, together with the bound `k*fO(g)` it had to clear.
pub fn first_interior_violation(
    p: &GNPolygon,
    mode: VectorStrictness,
) -> Option<(usize, ExponentVector, ExponentVector)> {
    for pt in &p.points {
        let k = pt.index;
        if k == 0 || k == p.d {
            continue;
        }
        let bound = p.g_order.scale_int(k as u64);
        let ok = match mode {
            VectorStrictness::WeakStrict => bound.le_all(&pt.a_order) && bound != pt.a_order,
            VectorStrictness::StrongStrict => bound.lt_all(&pt.a_order),
        };
        if !ok {
            return Some((k, pt.a_order.clone(), bound));
        }
    }
    None
}

/// Classify a polygon: `Straight` needs `fO(a_d) = d*fO(g)` and every
/// interior point on or above `k*fO(g)` componentwise; `StrictlyStraight`
/// tightens the interior inequalities per `mode`. Missing interior
/// coefficients satisfy the conditions vacuously.
///
/// Errors when `a_d = 0` (the base divides the polynomial); the caller
/// decides what that means.
pub fn straightness(p: &GNPolygon, mode: VectorStrictness) -> Result<Straightness> {
    let Some(final_point) = p.point(p.d) else {
        return Err(Error::Contract("a_d = 0: the base divides the polynomial".into()));
    };
    let endpoint_matches = final_point.a_order == p.g_order.scale_int(p.d as u64);
    let interior_straight = p.points.iter().all(|pt| {
        pt.index == 0
            || pt.index == p.d
            || p.g_order.scale_int(pt.index as u64).le_all(&pt.a_order)
    });
    if !endpoint_matches || !interior_straight {
        return Ok(Straightness::NotStraight);
    }
    if first_interior_violation(p, mode).is_none() {
        Ok(Straightness::StrictlyStraight)
    } else {
        Ok(Straightness::Straight)
    }
}
