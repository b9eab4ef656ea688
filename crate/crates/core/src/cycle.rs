use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A strictly increasing chain of proper nonempty subsets of the ground set,
/// indexing a cone of the braid (permutohedral) fan.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BraidChain {
    sets: Vec<Subset>,
}

impl BraidChain {
    pub const EMPTY: BraidChain = BraidChain { sets: Vec::new() };

    pub fn new(ambient: usize, sets: Vec<Subset>) -> Result<BraidChain> {
        let full = Subset::full(ambient);
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() || *s == full || !s.is_subset_of(full) {
                return Err(Error::InvalidParameters(format!(
                    "chain entry {s} must be a proper nonempty subset of the ground set"
                )));
            }
            if i > 0 && !sets[i - 1].is_proper_subset_of(*s) {
                return Err(Error::InvalidParameters(format!(
                    "chain entries {} and {} are not strictly increasing",
                    sets[i - 1],
                    s
                )));
            }
        }
        Ok(BraidChain { sets })
    }

    /// Builds a chain without validity checks; used internally where the
    /// chain property holds by construction.
    pub(crate) fn new_unchecked(sets: Vec<Subset>) -> BraidChain {
        BraidChain { sets }
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The subchain with entry `i` removed.
    pub fn drop_entry(&self, i: usize) -> BraidChain {
        let mut sets = self.sets.clone();
        sets.remove(i);
        BraidChain { sets }
    }

    /// Number of common entries with another chain; the intersection of two
    /// braid cones is the cone of the common subchain.
    pub fn common_count(&self, other: &BraidChain) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.sets.len() && j < other.sets.len() {
            match self.sets[i].cmp(&other.sets[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// The common subchain (set intersection of the two chains).
    pub fn common(&self, other: &BraidChain) -> BraidChain {
        let sets = self
            .sets
            .iter()
            .filter(|s| other.sets.binary_search(s).is_ok())
            .copied()
            .collect();
        BraidChain { sets }
    }

    /// `e_S` generator columns reduced modulo the all-ones vector, by
    /// dropping coordinate 0 of `x - x_0·1`.
    pub fn reduced_generators(&self, ambient: usize) -> Vec<Vec<i128>> {
        self.sets
            .iter()
            .map(|s| reduce_indicator(*s, ambient))
            .collect()
    }
}

/// Indicator vector of `s` in `R^{ambient}/1`, reduced to `Z^{ambient-1}`.
pub fn reduce_indicator(s: Subset, ambient: usize) -> Vec<i128> {
    let base = i128::from(s.contains(0));
    (1..ambient)
        .map(|i| i128::from(s.contains(i)) - base)
        .collect()
}

impl fmt::Debug for BraidChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊂ ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A pure-dimensional integer-weighted fan supported on cones of the braid
/// fan: a finitely supported weight map on chains of fixed length.
///
/// Kept canonical: no zero weights are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TropicalCycle {
    ambient: usize,
    dim: usize,
    weights: BTreeMap<BraidChain, i64>,
}

impl TropicalCycle {
    pub fn empty(ambient: usize, dim: usize) -> TropicalCycle {
        TropicalCycle {
            ambient,
            dim,
            weights: BTreeMap::new(),
        }
    }

    pub fn from_weights<I>(ambient: usize, dim: usize, entries: I) -> Result<TropicalCycle>
    where
        I: IntoIterator<Item = (BraidChain, i64)>,
    {
        let mut cycle = TropicalCycle::empty(ambient, dim);
        for (chain, w) in entries {
            if chain.len() != dim {
                return Err(Error::InvalidDimension(format!(
                    "chain {chain:?} has length {} in a cycle of dimension {dim}",
                    chain.len()
                )));
            }
            cycle.add_weight(chain, w);
        }
        Ok(cycle)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    /// Weight of a chain, zero outside the support.
    pub fn weight(&self, chain: &BraidChain) -> i64 {
        self.weights.get(chain).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BraidChain, i64)> {
        self.weights.iter().map(|(c, &w)| (c, w))
    }

    pub(crate) fn add_weight(&mut self, chain: BraidChain, w: i64) {
        if w == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.weights.entry(chain) {
            Entry::Vacant(e) => {
                e.insert(w);
            }
            Entry::Occupied(mut e) => {
                let total = *e.get() + w;
                if total == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = total;
                }
            }
        }
    }

    fn check_compatible(&self, other: &TropicalCycle) -> Result<()> {
        if self.ambient != other.ambient || self.dim != other.dim {
            return Err(Error::OperandMismatch(format!(
                "cycles live in ambient {} dim {} vs ambient {} dim {}",
                self.ambient, self.dim, other.ambient, other.dim
            )));
        }
        Ok(())
    }

    /// Pointwise sum of weight functions.
    pub fn add(&self, other: &TropicalCycle) -> Result<TropicalCycle> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (chain, w) in other.entries() {
            out.add_weight(chain.clone(), w);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TropicalCycle) -> Result<TropicalCycle> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> TropicalCycle {
        if c == 0 {
            return TropicalCycle::empty(self.ambient, self.dim);
        }
        TropicalCycle {
            ambient: self.ambient,
            dim: self.dim,
            weights: self
                .weights
                .iter()
                .map(|(chain, &w)| (chain.clone(), w * c))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray(i: usize) -> BraidChain {
        BraidChain::new(4, vec![Subset::singleton(i)]).unwrap()
    }

    #[test]
    fn chain_validation() {
        assert!(BraidChain::new(3, vec![Subset::full(3)]).is_err());
        assert!(BraidChain::new(3, vec![Subset::EMPTY]).is_err());
        assert!(BraidChain::new(
            3,
            vec![Subset::from_elements([0, 1]), Subset::singleton(0)]
        )
        .is_err());
        assert!(BraidChain::new(
            4,
            vec![Subset::singleton(0), Subset::from_elements([0, 1])]
        )
        .is_ok());
    }

    #[test]
    fn group_laws() {
        let z = TropicalCycle::from_weights(4, 1, (0..4).map(|i| (ray(i), 1))).unwrap();
        let sum = z.add(&z.scale(-1)).unwrap();
        assert!(sum.is_empty());
        let doubled = z.add(&z).unwrap();
        assert_eq!(doubled, z.scale(2));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let a = TropicalCycle::from_weights(4, 1, vec![(ray(0), 1), (ray(2), -1)]).unwrap();
        let b = TropicalCycle::from_weights(4, 1, vec![(ray(2), -1), (ray(0), 1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mismatched_operands() {
        let a = TropicalCycle::empty(4, 1);
        let b = TropicalCycle::empty(5, 1);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn reduced_indicators() {
        assert_eq!(reduce_indicator(Subset::singleton(0), 4), vec![-1, -1, -1]);
        assert_eq!(reduce_indicator(Subset::singleton(2), 4), vec![0, 1, 0]);
        assert_eq!(
            reduce_indicator(Subset::from_elements([0, 1]), 4),
            vec![0, -1, -1]
        );
    }

    #[test]
    fn common_subchain() {
        let a = BraidChain::new(
            5,
            vec![
                Subset::singleton(0),
                Subset::from_elements([0, 1]),
                Subset::from_elements([0, 1, 2]),
            ],
        )
        .unwrap();
        let b = BraidChain::new(
            5,
            vec![
                Subset::singleton(0),
                Subset::from_elements([0, 2]),
                Subset::from_elements([0, 1, 2]),
            ],
        )
        .unwrap();
        assert_eq!(a.common_count(&b), 2);
        assert_eq!(a.common(&b).sets().len(), 2);
    }
}
