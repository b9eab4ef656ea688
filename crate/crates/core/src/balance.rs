use std::collections::BTreeMap;

use crate::cycle::{reduce_indicator, BraidChain, TropicalCycle};
use crate::linalg;
use crate::subset::Subset;

/// Result of the exact balancing test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Balance {
    Balanced,
    /// The codimension-1 chain where the balancing condition fails.
    Unbalanced { facet: BraidChain },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced)
    }
}

/// Verifies the balancing condition of a braid-supported cycle at every
/// codimension-1 cone, by exact integer lattice arithmetic.
///
/// For each facet chain τ of a support cone, every adjacent support cone σ
/// contributes a lattice normal vector `v_σ` with
/// `span_Z(v_σ, L_τ ∩ Λ) = span_R(σ) ∩ Λ`; the cycle is balanced at τ when
/// `Σ w(σ) v_σ` lies in `L_τ`.
pub fn is_balanced(z: &TropicalCycle) -> Balance {
    let k = z.dim();
    if k == 0 || z.is_empty() {
        return Balance::Balanced;
    }
    let ambient = z.ambient();
    let n = ambient - 1;
    // facet chain -> cofacets given by the inserted set and its weight
    let mut facets: BTreeMap<BraidChain, Vec<(Subset, i64)>> = BTreeMap::new();
    for (sigma, w) in z.entries() {
        for i in 0..k {
            facets
                .entry(sigma.drop_entry(i))
                .or_default()
                .push((sigma.sets()[i], w));
        }
    }
    for (tau, cofacets) in facets {
        let w_cols = tau.reduced_generators(ambient);
        let mut sum = vec![0i128; n];
        for (g, w) in &cofacets {
            let v = lattice_normal(n, &w_cols, &reduce_indicator(*g, ambient));
            for (acc, x) in sum.iter_mut().zip(&v) {
                *acc += i128::from(*w) * x;
            }
        }
        if !linalg::in_rational_span(n, &w_cols, &sum) {
            return Balance::Unbalanced { facet: tau };
        }
    }
    Balance::Balanced
}

/// A lattice normal vector for the cofacet `τ + cone(g)` of τ: a vector
/// generating `(span(σ) ∩ Λ) / (L_τ ∩ Λ)` and pointing to the σ side.
///
/// Computed by saturating the σ lattice and completing the τ lattice to a
/// basis of it, never by assuming the generator `g` itself is primitive.
pub(crate) fn lattice_normal(n: usize, tau_cols: &[Vec<i128>], g: &[i128]) -> Vec<i128> {
    let mut span_cols = tau_cols.to_vec();
    span_cols.push(g.to_vec());
    let sat = linalg::saturation_basis(n, &span_cols);
    let k = sat.len();
    assert_eq!(k, tau_cols.len() + 1, "cofacet generators must be independent");
    // Coordinates of the τ lattice inside the saturated σ lattice.
    let x: Vec<Vec<i128>> = tau_cols
        .iter()
        .map(|w| linalg::solve_integer(n, &sat, w).expect("τ lattice lies in the saturation"))
        .collect();
    let completion = linalg::complete_saturated_to_basis(k, &x);
    let mut v = vec![0i128; n];
    for (j, col) in sat.iter().enumerate() {
        for i in 0..n {
            v[i] += completion[j] * col[i];
        }
    }
    // Orient towards the cofacet: the coefficient of g in v must be positive.
    let coeff = linalg::solve_rational(n, &span_cols, &v)
        .expect("v lies in span(σ)")
        .pop()
        .unwrap();
    assert!(coeff.num != 0, "normal vector degenerated into L_τ");
    if coeff.num < 0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}
