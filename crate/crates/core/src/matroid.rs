use crate::error::{Error, Result};
use crate::subset::Subset;

/// A matroid on the ground set `{0, ..., size-1}`, given by its bases.
///
/// Bases are stored explicitly as bitmasks, sorted and deduplicated, so two
/// matroids compare equal exactly when they have the same labeled bases.
/// Rank-0 and empty-ground-set matroids are legal; `U_{0,0}` has the single
/// empty basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    size: usize,
    bases: Vec<Subset>,
}

impl Matroid {
    /// The uniform matroid `U_{rank, size}`: bases are all rank-subsets.
    pub fn uniform(rank: usize, size: usize) -> Result<Matroid> {
        if rank > size || size > 16 {
            return Err(Error::InvalidParameters(format!(
                "uniform matroid needs rank <= size <= 16, got rank {rank}, size {size}"
            )));
        }
        let bases: Vec<Subset> = Subset::all(size).filter(|s| s.card() == rank).collect();
        Ok(Matroid { size, bases })
    }

    /// Builds a matroid from an explicit list of bases, validating the
    /// basis-exchange axiom by brute force.
    pub fn from_bases<I: IntoIterator<Item = Subset>>(size: usize, bases: I) -> Result<Matroid> {
        if size > 16 {
            return Err(Error::InvalidParameters(format!(
                "ground sets larger than 16 are not supported, got {size}"
            )));
        }
        let full = Subset::full(size);
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort();
        bases.dedup();
        if bases.is_empty() {
            return Err(Error::NotAMatroid("empty collection of bases".into()));
        }
        let card = bases[0].card();
        for b in &bases {
            if !b.is_subset_of(full) {
                return Err(Error::NotAMatroid(format!(
                    "basis {b} is not contained in the ground set of size {size}"
                )));
            }
            if b.card() != card {
                return Err(Error::NotAMatroid(format!(
                    "bases {} and {} have different cardinalities",
                    bases[0], b
                )));
            }
        }
        // Exchange axiom: for all bases A != B and a in A\B there is
        // b in B\A with A - a + b again a basis.
        for a in &bases {
            for b in &bases {
                if a == b {
                    continue;
                }
                for x in a.difference(*b).elements() {
                    let found = b
                        .difference(*a)
                        .elements()
                        .any(|y| bases.binary_search(&a.without(x).with(y)).is_ok());
                    if !found {
                        return Err(Error::NotAMatroid(format!(
                            "exchange fails for bases {a} and {b} at element {x}"
                        )));
                    }
                }
            }
        }
        Ok(Matroid { size, bases })
    }

    /// Internal constructor for bases known to satisfy exchange by theory
    /// (minors, direct sums, polytope faces). Sorts and deduplicates.
    pub(crate) fn from_presorted_bases(size: usize, mut bases: Vec<Subset>) -> Matroid {
        bases.sort();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        Matroid { size, bases }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> usize {
        self.bases[0].card()
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank(&self, s: Subset) -> usize {
        debug_assert!(s.is_subset_of(self.ground()));
        self.bases
            .iter()
            .map(|b| b.intersection(s).card())
            .max()
            .unwrap()
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.card()
    }

    /// Closure: all elements whose addition does not raise the rank.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        Subset::from_elements(
            (0..self.size).filter(|&i| s.contains(i) || self.rank(s.with(i)) == r),
        )
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// Restriction `M|T`, relabeled to `{0, ..., |T|-1}` preserving order.
    pub fn restriction(&self, t: Subset) -> Matroid {
        self.minor(t, Subset::EMPTY)
    }

    /// Deletion of a single element, relabeled.
    pub fn deletion(&self, i: usize) -> Matroid {
        assert!(i < self.size, "element {i} out of range");
        self.restriction(self.ground().without(i))
    }

    /// Contraction of a single element, relabeled. Contracting a loop is
    /// permitted and leaves the rank unchanged.
    pub fn contraction(&self, i: usize) -> Matroid {
        assert!(i < self.size, "element {i} out of range");
        self.minor(self.ground(), Subset::singleton(i))
    }

    /// The minor `M|T/S` for `S ⊆ T`, relabeled to `{0, ..., |T\S|-1}`.
    pub fn minor(&self, t: Subset, s: Subset) -> Matroid {
        let (m, _) = self.minor_with_labels(t, s);
        m
    }

    /// Like [`minor`](Self::minor), also returning the label map: entry `j`
    /// is the original ground-set element of new element `j`.
    pub fn minor_with_labels(&self, t: Subset, s: Subset) -> (Matroid, Vec<usize>) {
        assert!(
            s.is_subset_of(t) && t.is_subset_of(self.ground()),
            "minor needs S ⊆ T ⊆ ground set"
        );
        let rt = self.rank(t);
        let rs = self.rank(s);
        let labels: Vec<usize> = t.difference(s).elements().collect();
        // Bases of M|T/S: residues B∩(T\S) of bases with |B∩T| = r(T) and
        // |B∩S| = r(S); such bases exist because independent sets extend.
        let mut new_bases: Vec<Subset> = Vec::new();
        for b in &self.bases {
            if b.intersection(t).card() != rt || b.intersection(s).card() != rs {
                continue;
            }
            let residue = b.intersection(t).difference(s);
            let relabeled = Subset::from_elements(
                residue
                    .elements()
                    .map(|e| labels.binary_search(&e).unwrap()),
            );
            new_bases.push(relabeled);
        }
        new_bases.sort();
        new_bases.dedup();
        debug_assert!(!new_bases.is_empty());
        (
            Matroid {
                size: labels.len(),
                bases: new_bases,
            },
            labels,
        )
    }

    /// Direct sum: ground sets are concatenated, bases are unions of one
    /// basis from each summand.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let size = self.size + other.size;
        assert!(size <= 16, "direct sum exceeds supported ground-set size");
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in &self.bases {
            for b in &other.bases {
                bases.push(Subset(a.0 | (b.0 << self.size)));
            }
        }
        bases.sort();
        Matroid { size, bases }
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> Subset {
        let mut in_some = Subset::EMPTY;
        for b in &self.bases {
            in_some = in_some.union(*b);
        }
        self.ground().difference(in_some)
    }

    pub fn has_loops(&self) -> bool {
        !self.loops().is_empty()
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> Subset {
        let mut in_all = self.ground();
        for b in &self.bases {
            in_all = in_all.intersection(*b);
        }
        in_all
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.coloops().contains(i)
    }

    /// All circuits (minimal dependent sets), by brute-force enumeration.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut circuits = Vec::new();
        for s in Subset::all(self.size) {
            if s.is_empty() || self.is_independent(s) {
                continue;
            }
            if s.elements().all(|i| self.is_independent(s.without(i))) {
                circuits.push(s);
            }
        }
        circuits
    }

    /// Connected components of the relation "i ~ j iff some circuit contains
    /// both", plus reflexivity. Loops and coloops are singleton components.
    pub fn connected_components(&self) -> Vec<Subset> {
        let mut repr: Vec<usize> = (0..self.size).collect();
        fn find(repr: &mut Vec<usize>, i: usize) -> usize {
            if repr[i] != i {
                let r = find(repr, repr[i]);
                repr[i] = r;
            }
            repr[i]
        }
        for c in self.circuits() {
            let mut it = c.elements();
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut repr, first), find(&mut repr, e));
                    repr[a] = b;
                }
            }
        }
        let mut comps: Vec<Subset> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for i in 0..self.size {
            let r = find(&mut repr, i);
            match roots.iter().position(|&x| x == r) {
                Some(p) => comps[p] = comps[p].with(i),
                None => {
                    roots.push(r);
                    comps.push(Subset::singleton(i));
                }
            }
        }
        comps
    }

    /// A matroid is connected when it has exactly one component. The empty
    /// matroid has zero components and counts as disconnected here.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }
}
