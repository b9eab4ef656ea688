//! Polynomial identities built from CSM cycle degrees: the degree
//! polynomial and its identity with the shifted reduced characteristic
//! polynomial, the Euler characteristic of an arrangement complement, and
//! the g-polynomial on the two families with closed forms (uniform matroids
//! and simple rank-3 matroids).

use crate::bergman::csm_cycle;
use crate::cycle::TropicalCycle;
use crate::error::{Error, Result};
use crate::intersect::{degree, degree_by_recursion};
use crate::lattice::{beta, reduced_characteristic_polynomial, FlatLattice};
use crate::matroid::Matroid;
use crate::poly::IntPoly;
use crate::subset::Subset;

/// Binomial coefficient with the convention `C(n, 0) = 1` for every `n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    if n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `Σ_k deg(csm_k(M)) t^k`, with degrees computed by iterated stable
/// intersection and cross-checked against the deletion-contraction
/// recursion.
pub fn csm_degree_polynomial(m: &Matroid) -> Result<IntPoly> {
    if m.has_loops() {
        return Ok(IntPoly::zero());
    }
    let d = m.full_rank() - 1;
    let mut coeffs = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let by_intersection = degree(&csm_cycle(m, k)?)?;
        let by_recursion = degree_by_recursion(m, k);
        if by_intersection != by_recursion {
            return Err(Error::Inconsistency(format!(
                "degree of csm_{k} is {by_intersection} by stable intersection \
                 but {by_recursion} by deletion-contraction"
            )));
        }
        coeffs.push(by_intersection);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Does `Σ deg(csm_k(M)) t^k = χ̄_M(1+t)` hold exactly?
pub fn check_hvector(m: &Matroid) -> Result<bool> {
    let lhs = csm_degree_polynomial(m)?;
    let rhs = reduced_characteristic_polynomial(m)?.compose_x_plus(1);
    Ok(lhs == rhs)
}

/// Euler characteristic of the complement of an essential arrangement with
/// matroid `M`: `(-1)^d β(M)`.
pub fn euler_char_complement(m: &Matroid) -> Result<i64> {
    if m.has_loops() {
        return Err(Error::InvalidParameters(
            "the complement formula needs a loopless matroid".into(),
        ));
    }
    let d = m.full_rank() - 1;
    let sign = if d % 2 == 1 { -1 } else { 1 };
    Ok(sign * beta(m))
}

/// g-polynomial of the uniform matroid `U_{rank,size}` by the closed form
/// `Σ_k C(n-k-1, d-k) C(n-d-1, k) t^{k+1}`.
pub fn g_polynomial_uniform(rank: usize, size: usize) -> Result<IntPoly> {
    if rank < 1 || size <= rank {
        return Err(Error::InvalidParameters(format!(
            "the uniform g-polynomial needs 1 <= rank < size, got rank {rank}, size {size}"
        )));
    }
    let (d, n) = (rank as i64 - 1, size as i64 - 1);
    let mut coeffs = vec![0i64; rank + 2];
    for k in 0..=d {
        coeffs[(k + 1) as usize] = binomial(n - k - 1, d - k) * binomial(n - d - 1, k);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

fn require_simple_rank3(m: &Matroid) -> Result<()> {
    if m.full_rank() != 3 {
        return Err(Error::UnsupportedFamily(format!(
            "rank-3 formulas need rank 3, got rank {}",
            m.full_rank()
        )));
    }
    if m.has_loops() {
        return Err(Error::UnsupportedFamily("matroid has a loop".into()));
    }
    for i in 0..m.size() {
        for j in i + 1..m.size() {
            if m.rank(Subset::from_elements([i, j])) < 2 {
                return Err(Error::UnsupportedFamily(format!(
                    "elements {i} and {j} are parallel; the rank-3 formulas need a simple matroid"
                )));
            }
        }
    }
    Ok(())
}

/// Self-intersection number of `csm_1` inside the Bergman fan of a simple
/// rank-3 matroid: `(n-2)² - Σ_{r(F)=2} (|F|-2)²`.
pub fn csm1_self_intersection_rank3(m: &Matroid) -> Result<i64> {
    require_simple_rank3(m)?;
    let n = m.size() as i64 - 1;
    let lattice = FlatLattice::new(m);
    let correction: i64 = lattice
        .flats_of_rank(2)
        .iter()
        .map(|f| {
            let excess = f.card() as i64 - 2;
            excess * excess
        })
        .sum();
    Ok((n - 2) * (n - 2) - correction)
}

/// g-polynomial of a simple rank-3 matroid, assembled from the beta
/// invariant, `deg(csm_1)` (by deletion-contraction), and the `csm_1`
/// self-intersection number.
pub fn g_polynomial_rank3(m: &Matroid) -> Result<IntPoly> {
    require_simple_rank3(m)?;
    let b = beta(m);
    let deg_csm1 = degree_by_recursion(m, 1);
    let self_int = csm1_self_intersection_rank3(m)?;
    let quadratic = deg_csm1 + self_int;
    let cubic = 1 + deg_csm1 + self_int - b;
    Ok(IntPoly::from_coeffs(vec![0, b, quadratic, cubic]))
}

/// The cycle `n_{d-k}` of the uniform matroid `U_{rank,size}` via its closed
/// form `C(n-d-1, k) · B(U_{d-k+1, n+1})`.
pub fn n_cycles_uniform(rank: usize, size: usize, k: usize) -> Result<TropicalCycle> {
    if rank < 1 || size < rank {
        return Err(Error::InvalidParameters(format!(
            "invalid uniform parameters rank {rank}, size {size}"
        )));
    }
    let d = rank - 1;
    if k > d {
        return Err(Error::InvalidDimension(format!(
            "n-cycle index {k} exceeds the top dimension {d}"
        )));
    }
    let (dd, nn) = (d as i64, size as i64 - 1);
    let coefficient = binomial(nn - dd - 1, k as i64);
    let base = csm_cycle(&Matroid::uniform(d - k + 1, size)?, d - k)?;
    Ok(base.scale(coefficient))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: usize, m: usize) -> Matroid {
        Matroid::uniform(r, m).unwrap()
    }

    #[test]
    fn degree_polynomial_u34() {
        // t² - t + 1, matching χ̄(1+t) with χ̄ = λ² - 3λ + 3.
        let p = csm_degree_polynomial(&u(3, 4)).unwrap();
        assert_eq!(p, IntPoly::from_coeffs(vec![1, -1, 1]));
        assert_eq!(
            p,
            reduced_characteristic_polynomial(&u(3, 4))
                .unwrap()
                .compose_x_plus(1)
        );
    }

    #[test]
    fn degree_polynomial_edges() {
        // Constant coefficient is (-1)^d β(M); loops give the zero polynomial.
        let m = u(2, 5);
        let p = csm_degree_polynomial(&m).unwrap();
        assert_eq!(p.coeff(0), -beta(&m));
        let loopy = Matroid::from_bases(2, [Subset::singleton(0)]).unwrap();
        assert!(csm_degree_polynomial(&loopy).unwrap().is_zero());
    }

    #[test]
    fn hvector_small() {
        for m in [u(2, 3), u(2, 4), u(3, 4), u(1, 1), u(3, 3), u(2, 5)] {
            assert!(check_hvector(&m).unwrap());
        }
        // Free matroid: both sides are t^d.
        let free = u(3, 3);
        assert_eq!(
            csm_degree_polynomial(&free).unwrap(),
            IntPoly::monomial(2)
        );
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char_complement(&u(2, 3)).unwrap(), -1);
        assert_eq!(euler_char_complement(&u(3, 4)).unwrap(), 1);
        assert_eq!(euler_char_complement(&u(2, 4)).unwrap(), -2);
        // Matches deg(csm_0).
        for m in [u(2, 3), u(3, 4), u(2, 4), u(3, 5)] {
            assert_eq!(
                euler_char_complement(&m).unwrap(),
                degree(&csm_cycle(&m, 0).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn g_polynomial_uniform_examples() {
        assert_eq!(
            g_polynomial_uniform(2, 4).unwrap(),
            IntPoly::from_coeffs(vec![0, 2, 1])
        );
        assert_eq!(
            g_polynomial_uniform(3, 4).unwrap(),
            IntPoly::from_coeffs(vec![0, 1])
        );
        assert!(g_polynomial_uniform(3, 3).is_err());
    }

    #[test]
    fn rank3_self_intersection_and_gpoly() {
        assert_eq!(csm1_self_intersection_rank3(&u(3, 4)).unwrap(), 1);
        assert_eq!(g_polynomial_rank3(&u(3, 4)).unwrap(), IntPoly::from_coeffs(vec![0, 1]));
        // U_{3,5}: csm₁² = 4, deg csm₁ = -2, β = 3.
        assert_eq!(csm1_self_intersection_rank3(&u(3, 5)).unwrap(), 4);
        assert_eq!(
            g_polynomial_rank3(&u(3, 5)).unwrap(),
            IntPoly::from_coeffs(vec![0, 3, 2])
        );
        assert_eq!(
            g_polynomial_rank3(&u(3, 5)).unwrap(),
            g_polynomial_uniform(3, 5).unwrap()
        );
        // A 3-point line contributes 1 to the correction term.
        let with_line = crate::catalog::simple_rank3(4)
            .into_iter()
            .find(|m| m != &u(3, 4))
            .unwrap();
        let n = with_line.size() as i64 - 1;
        assert_eq!(
            csm1_self_intersection_rank3(&with_line).unwrap(),
            (n - 2) * (n - 2) - 1
        );
        // Non-simple input is refused.
        assert!(g_polynomial_rank3(&u(2, 4)).is_err());
        let parallel = Matroid::from_bases(
            4,
            Subset::all(4).filter(|s| s.card() == 3 && !s.is_subset_of(Subset::from_elements([0, 1]))
                && s.intersection(Subset::from_elements([0, 1])).card() <= 1),
        );
        if let Ok(p) = parallel {
            if p.full_rank() == 3 {
                assert!(g_polynomial_rank3(&p).is_err());
            }
        }
    }

    #[test]
    fn n_cycles() {
        // n_d(M) = B(M).
        let top = n_cycles_uniform(3, 5, 0).unwrap();
        assert_eq!(top, csm_cycle(&u(3, 5), 2).unwrap());
        // U_{3,5}, k = 1: C(1,1) · B(U_{2,5}).
        let n1 = n_cycles_uniform(3, 5, 1).unwrap();
        assert_eq!(n1, csm_cycle(&u(2, 5), 1).unwrap());
        assert!(n_cycles_uniform(3, 5, 3).is_err());
    }

    #[test]
    fn binomial_alternating_identity() {
        // (-1)^k = Σ_i (-1)^{k-i} C(m+k-i, k-i) C(m, i) for m, k <= 8.
        for m in 0i64..=8 {
            for k in 0i64..=8 {
                let mut total = 0i64;
                for i in 0..=k {
                    let sign = if (k - i) % 2 == 1 { -1 } else { 1 };
                    total += sign * binomial(m + k - i, k - i) * binomial(m, i);
                }
                let expect = if k % 2 == 1 { -1 } else { 1 };
                assert_eq!(total, expect, "m={m}, k={k}");
            }
        }
    }

    #[test]
    fn uniform_g_coefficients_nonnegative() {
        for size in 2..=7usize {
            for rank in 1..size {
                let g = g_polynomial_uniform(rank, size).unwrap();
                assert!(g.coeffs().iter().all(|&c| c >= 0), "U_{{{rank},{size}}}");
            }
        }
    }
}
