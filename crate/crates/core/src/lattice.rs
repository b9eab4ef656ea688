use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::poly::IntPoly;
use crate::subset::Subset;

/// The lattice of flats of a matroid, with Möbius values from the bottom
/// flat precomputed.
///
/// Flats are grouped by rank. For a loopless matroid the bottom flat is the
/// empty set; a matroid with loops has bottom flat `closure(∅)` and no empty
/// flat.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats_by_rank: Vec<Vec<Subset>>,
    mobius_bottom: HashMap<Subset, i64>,
    rank_of: HashMap<Subset, usize>,
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> FlatLattice {
        let top_rank = m.full_rank();
        let mut flats_by_rank: Vec<Vec<Subset>> = vec![Vec::new(); top_rank + 1];
        let mut rank_of = HashMap::new();
        for s in Subset::all(m.size()) {
            if m.is_flat(s) {
                let r = m.rank(s);
                flats_by_rank[r].push(s);
                rank_of.insert(s, r);
            }
        }
        // Möbius values from the bottom flat, by the defining recursion in
        // order of increasing rank.
        let mut mobius_bottom = HashMap::new();
        for r in 0..=top_rank {
            for &f in &flats_by_rank[r] {
                let mut value = if r == 0 { 1 } else { 0 };
                for r2 in 0..r {
                    for &g in &flats_by_rank[r2] {
                        if g.is_proper_subset_of(f) {
                            value -= mobius_bottom[&g];
                        }
                    }
                }
                mobius_bottom.insert(f, value);
            }
        }
        FlatLattice {
            flats_by_rank,
            mobius_bottom,
            rank_of,
        }
    }

    pub fn top_rank(&self) -> usize {
        self.flats_by_rank.len() - 1
    }

    pub fn flats_of_rank(&self, r: usize) -> &[Subset] {
        &self.flats_by_rank[r]
    }

    pub fn flats(&self) -> impl Iterator<Item = Subset> + '_ {
        self.flats_by_rank.iter().flatten().copied()
    }

    /// Proper nonempty flats, excluding the bottom and top of the lattice.
    pub fn proper_flats(&self) -> impl Iterator<Item = Subset> + '_ {
        let top = self.top_rank();
        self.flats_by_rank[1..top].iter().flatten().copied()
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.rank_of.contains_key(&s)
    }

    pub fn flat_rank(&self, s: Subset) -> Option<usize> {
        self.rank_of.get(&s).copied()
    }

    /// `μ(bottom, F)`, which for a loopless matroid is `μ(∅, F)`.
    pub fn mobius_bottom(&self, f: Subset) -> Result<i64> {
        self.mobius_bottom
            .get(&f)
            .copied()
            .ok_or_else(|| Error::InvalidFlat(format!("{f} is not a flat")))
    }

    /// `μ(F, G)` by the defining recursion; 0 when `F ⊄ G`.
    pub fn mobius(&self, f: Subset, g: Subset) -> Result<i64> {
        if !self.is_flat(f) {
            return Err(Error::InvalidFlat(format!("{f} is not a flat")));
        }
        if !self.is_flat(g) {
            return Err(Error::InvalidFlat(format!("{g} is not a flat")));
        }
        let mut memo = HashMap::new();
        Ok(self.mobius_rec(f, g, &mut memo))
    }

    fn mobius_rec(&self, f: Subset, g: Subset, memo: &mut HashMap<Subset, i64>) -> i64 {
        if f == g {
            return 1;
        }
        if !f.is_subset_of(g) {
            return 0;
        }
        if let Some(&v) = memo.get(&g) {
            return v;
        }
        let mut value = 0;
        for h in self.flats() {
            if f.is_subset_of(h) && h.is_proper_subset_of(g) {
                value -= self.mobius_rec(f, h, memo);
            }
        }
        memo.insert(g, value);
        value
    }
}

/// Characteristic polynomial `χ_M(λ)`; identically zero when `M` has a loop.
pub fn characteristic_polynomial(m: &Matroid) -> IntPoly {
    if m.has_loops() {
        return IntPoly::zero();
    }
    let lattice = FlatLattice::new(m);
    let r = m.full_rank();
    let mut coeffs = vec![0i64; r + 1];
    for f in lattice.flats() {
        let rf = lattice.flat_rank(f).unwrap();
        coeffs[r - rf] += lattice.mobius_bottom(f).unwrap();
    }
    IntPoly::from_coeffs(coeffs)
}

/// Reduced characteristic polynomial `χ̄_M(λ) = χ_M(λ)/(λ-1)`, by exact
/// synthetic division. Zero for matroids with a loop and for the empty
/// matroid `U_{0,0}` (whose χ is the constant 1, not divisible by λ-1).
pub fn reduced_characteristic_polynomial(m: &Matroid) -> Result<IntPoly> {
    if m.has_loops() || m.size() == 0 {
        return Ok(IntPoly::zero());
    }
    let chi = characteristic_polynomial(m);
    let (quotient, rem) = chi.divide_by_linear(1);
    if rem != 0 {
        return Err(Error::Inconsistency(format!(
            "(λ-1) does not divide χ = {chi} of a loopless matroid"
        )));
    }
    Ok(quotient)
}

/// Beta invariant via the Möbius sum `(-1)^r Σ μ(∅,F) r(F)`.
pub fn beta_via_mobius(m: &Matroid) -> i64 {
    if m.has_loops() {
        return 0;
    }
    let lattice = FlatLattice::new(m);
    let sign = if m.full_rank() % 2 == 0 { 1 } else { -1 };
    let sum: i64 = lattice
        .flats()
        .map(|f| lattice.mobius_bottom(f).unwrap() * lattice.flat_rank(f).unwrap() as i64)
        .sum();
    sign * sum
}

/// Beta invariant via `(-1)^{r-1} χ̄_M(1)`.
pub fn beta_via_reduced_char(m: &Matroid) -> i64 {
    if m.has_loops() || m.full_rank() == 0 {
        return 0;
    }
    let reduced = reduced_characteristic_polynomial(m).expect("loopless division is exact");
    let sign = if (m.full_rank() - 1) % 2 == 0 { 1 } else { -1 };
    sign * reduced.eval(1)
}

/// Beta invariant, computed by both formulas as a built-in self-check.
pub fn beta(m: &Matroid) -> i64 {
    let a = beta_via_mobius(m);
    let b = beta_via_reduced_char(m);
    assert_eq!(
        a, b,
        "beta formulas disagree on matroid with bases {:?}",
        m.bases()
    );
    a
}
