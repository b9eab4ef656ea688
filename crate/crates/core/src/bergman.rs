use std::collections::HashMap;

use crate::cycle::{BraidChain, TropicalCycle};
use crate::error::{Error, Result};
use crate::lattice::{beta, FlatLattice};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// A strictly increasing chain `F_1 ⊊ ... ⊊ F_k` of proper nonempty flats of
/// a specific matroid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagOfFlats {
    chain: BraidChain,
}

impl FlagOfFlats {
    pub fn new(m: &Matroid, sets: Vec<Subset>) -> Result<FlagOfFlats> {
        for s in &sets {
            if !m.is_flat(*s) {
                return Err(Error::InvalidFlat(format!("{s} is not a flat")));
            }
        }
        let chain = BraidChain::new(m.size(), sets)?;
        Ok(FlagOfFlats { chain })
    }

    pub fn chain(&self) -> &BraidChain {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

/// All length-`k` flags of proper nonempty flats of `M`; empty when `M` has
/// a loop. `k` may be at most `d = r(M) - 1`.
pub fn bergman_skeleton(m: &Matroid, k: usize) -> Result<Vec<FlagOfFlats>> {
    let d = m
        .full_rank()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidDimension("rank-0 matroid has no Bergman fan".into()))?;
    if k > d {
        return Err(Error::InvalidDimension(format!(
            "skeleton dimension {k} exceeds the Bergman fan dimension {d}"
        )));
    }
    if m.has_loops() {
        return Ok(Vec::new());
    }
    let lattice = FlatLattice::new(m);
    let mut flags = Vec::new();
    let mut stack: Vec<Subset> = Vec::new();
    enumerate_flags(&lattice, k, Subset::EMPTY, &mut stack, &mut flags);
    Ok(flags
        .into_iter()
        .map(|sets| FlagOfFlats {
            chain: BraidChain::new_unchecked(sets),
        })
        .collect())
}

fn enumerate_flags(
    lattice: &FlatLattice,
    remaining: usize,
    below: Subset,
    stack: &mut Vec<Subset>,
    out: &mut Vec<Vec<Subset>>,
) {
    if remaining == 0 {
        out.push(stack.clone());
        return;
    }
    for f in lattice.proper_flats() {
        if below.is_proper_subset_of(f) {
            stack.push(f);
            enumerate_flags(lattice, remaining - 1, f, stack, out);
            stack.pop();
        }
    }
}

/// The CSM weight `(-1)^{d-k} Π β(M|F_{i+1}/F_i)` of the cone of a flag,
/// with `F_0 = ∅` and `F_{k+1}` the full ground set.
pub fn csm_weight(m: &Matroid, flag: &FlagOfFlats) -> Result<i64> {
    if m.has_loops() {
        return Err(Error::InvalidParameters(
            "CSM weights are defined for loopless matroids".into(),
        ));
    }
    for s in flag.chain().sets() {
        if !m.is_flat(*s) {
            return Err(Error::InvalidFlat(format!("{s} is not a flat")));
        }
    }
    let mut memo = HashMap::new();
    Ok(csm_weight_memo(m, flag.chain(), &mut memo))
}

/// Memoized weight computation over consecutive minors, shared across the
/// flags of one cycle construction.
fn csm_weight_memo(
    m: &Matroid,
    chain: &BraidChain,
    beta_memo: &mut HashMap<(Subset, Subset), i64>,
) -> i64 {
    let d = m.full_rank() - 1;
    let k = chain.len();
    let mut product = 1i64;
    let full = m.ground();
    for i in 0..=k {
        let lower = if i == 0 { Subset::EMPTY } else { chain.sets()[i - 1] };
        let upper = if i == k { full } else { chain.sets()[i] };
        let b = *beta_memo
            .entry((lower, upper))
            .or_insert_with(|| beta(&m.minor(upper, lower)));
        if b == 0 {
            return 0;
        }
        product *= b;
    }
    if (d - k) % 2 == 1 {
        -product
    } else {
        product
    }
}

/// The k-dimensional CSM cycle of `M`: the k-skeleton of the Bergman fan
/// with CSM weights. Empty when `M` has a loop.
pub fn csm_cycle(m: &Matroid, k: usize) -> Result<TropicalCycle> {
    let flags = bergman_skeleton(m, k)?;
    let mut cycle = TropicalCycle::empty(m.size(), k);
    let mut beta_memo = HashMap::new();
    for flag in flags {
        let w = csm_weight_memo(m, flag.chain(), &mut beta_memo);
        cycle.add_weight(flag.chain, w);
    }
    Ok(cycle)
}

/// The pairing of a monomial chain with a cycle: the weight of the
/// corresponding cone, zero outside the support.
pub fn pairing(chain: &BraidChain, z: &TropicalCycle) -> Result<i64> {
    if chain.len() != z.dim() {
        return Err(Error::InvalidDimension(format!(
            "chain of length {} paired with a cycle of dimension {}",
            chain.len(),
            z.dim()
        )));
    }
    Ok(z.weight(chain))
}

/// Checks that the support of `csm_k(M)` is exactly the set of flags whose
/// consecutive minors are all connected and loopless, with connectivity
/// computed independently through circuits.
pub fn coarse_support_check(m: &Matroid, k: usize) -> Result<bool> {
    if m.has_loops() {
        return Ok(true);
    }
    let cycle = csm_cycle(m, k)?;
    let flags = bergman_skeleton(m, k)?;
    let full = m.ground();
    for flag in &flags {
        let weight_nonzero = cycle.weight(flag.chain()) != 0;
        let mut minors_connected = true;
        let sets = flag.chain().sets();
        for i in 0..=sets.len() {
            let lower = if i == 0 { Subset::EMPTY } else { sets[i - 1] };
            let upper = if i == sets.len() { full } else { sets[i] };
            let minor = m.minor(upper, lower);
            if minor.has_loops() || !minor.is_connected() {
                minors_connected = false;
                break;
            }
        }
        if weight_nonzero != minors_connected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: usize, m: usize) -> Matroid {
        Matroid::uniform(r, m).unwrap()
    }

    fn flag(m: &Matroid, sets: &[&[usize]]) -> FlagOfFlats {
        FlagOfFlats::new(
            m,
            sets.iter()
                .map(|s| Subset::from_elements(s.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn skeleton_counts() {
        // Chains {i} ⊂ pair in U_{3,4}: 4 singletons × 3 extensions.
        assert_eq!(bergman_skeleton(&u(3, 4), 2).unwrap().len(), 12);
        let origin = bergman_skeleton(&u(3, 4), 0).unwrap();
        assert_eq!(origin.len(), 1);
        assert!(origin[0].is_empty());
        let loopy = Matroid::from_bases(2, [Subset::singleton(0)]).unwrap();
        assert!(bergman_skeleton(&loopy, 0).unwrap().is_empty());
        assert!(bergman_skeleton(&u(2, 4), 2).is_err());
    }

    #[test]
    fn csm_weights() {
        let m = u(3, 4);
        assert_eq!(csm_weight(&m, &flag(&m, &[&[0]])).unwrap(), -1);
        // Restriction to {0,1} is U_{2,2}, which is disconnected, so β = 0.
        assert_eq!(csm_weight(&m, &flag(&m, &[&[0, 1]])).unwrap(), 0);
        let m = u(2, 4);
        assert_eq!(csm_weight(&m, &flag(&m, &[])).unwrap(), -2);
        // Non-flat chains are rejected at flag construction.
        assert!(FlagOfFlats::new(&u(3, 4), vec![Subset::from_elements([0, 1, 2])]).is_err());
    }

    #[test]
    fn csm_cycles() {
        // Top cycle: all weights 1.
        let m = u(3, 4);
        let top = csm_cycle(&m, 2).unwrap();
        assert_eq!(top.support_size(), 12);
        assert!(top.entries().all(|(_, w)| w == 1));
        // csm_1(U_{3,4}): the four rays with weight -1.
        let mid = csm_cycle(&m, 1).unwrap();
        assert_eq!(mid.support_size(), 4);
        for i in 0..4 {
            let ray = BraidChain::new(4, vec![Subset::singleton(i)]).unwrap();
            assert_eq!(mid.weight(&ray), -1);
        }
        // csm_0(U_{2,3}) is the origin with weight -1.
        let z = csm_cycle(&u(2, 3), 0).unwrap();
        assert_eq!(z.weight(&BraidChain::EMPTY), -1);
    }

    #[test]
    fn csm_uniform_closed_form() {
        // csm_k(U_{d+1,n+1}) = (-1)^{d-k} C(n-k-1, d-k) · B(U_{k+1,n+1}).
        fn binom(n: i64, k: i64) -> i64 {
            match k {
                _ if k < 0 => 0,
                0 => 1,
                _ if n < k => 0,
                _ => (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)),
            }
        }
        for m_size in 2..=6usize {
            for r in 1..=m_size {
                let (d, n) = (r as i64 - 1, m_size as i64 - 1);
                for k in 0..r {
                    let lhs = csm_cycle(&u(r, m_size), k).unwrap();
                    let base = csm_cycle(&u(k + 1, m_size), k).unwrap();
                    let c = binom(n - k as i64 - 1, d - k as i64);
                    let sign = if (d - k as i64) % 2 == 1 { -1 } else { 1 };
                    assert_eq!(lhs, base.scale(sign * c), "U_{{{r},{m_size}}}, k={k}");
                }
            }
        }
    }

    #[test]
    fn pairing_round_trip() {
        let m = u(3, 4);
        let z = csm_cycle(&m, 1).unwrap();
        let f = flag(&m, &[&[0]]);
        assert_eq!(pairing(f.chain(), &z).unwrap(), -1);
        assert_eq!(pairing(f.chain(), &z).unwrap(), csm_weight(&m, &f).unwrap());
        // Chains outside the support pair to zero.
        let non_flat = BraidChain::new(4, vec![Subset::from_elements([0, 1, 2])]).unwrap();
        assert_eq!(pairing(&non_flat, &z).unwrap(), 0);
        // Dimension mismatch is an error.
        assert!(pairing(&BraidChain::EMPTY, &z).is_err());
        // Maximal flags of a loopless matroid pair to 1 with csm_d.
        let top = csm_cycle(&m, 2).unwrap();
        assert_eq!(pairing(flag(&m, &[&[1], &[1, 3]]).chain(), &top).unwrap(), 1);
    }

    #[test]
    fn coarse_support() {
        assert!(coarse_support_check(&u(3, 4), 1).unwrap());
        for k in 0..3 {
            assert!(coarse_support_check(&u(3, 5), k).unwrap());
        }
    }

    #[test]
    fn codim_one_weights_match_valency() {
        // Weight of a codimension-1 cone is 2 - (number of maximal cones
        // containing it).
        for m in [u(3, 5), u(2, 4), u(3, 4)] {
            let d = m.full_rank() - 1;
            if d == 0 {
                continue;
            }
            let codim1 = csm_cycle(&m, d - 1).unwrap();
            let top = bergman_skeleton(&m, d).unwrap();
            for flag in bergman_skeleton(&m, d - 1).unwrap() {
                let val = top
                    .iter()
                    .filter(|t| t.chain().common_count(flag.chain()) == d - 1)
                    .count() as i64;
                assert_eq!(codim1.weight(flag.chain()), 2 - val);
            }
        }
    }
}
