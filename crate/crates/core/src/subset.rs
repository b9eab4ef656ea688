use std::fmt;

/// A subset of a ground set `{0, ..., n}`, stored as a bitmask.
///
/// Ground sets in this crate never exceed 16 elements, so a `u16` is enough.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Subset {
        debug_assert!(i < 16);
        Subset(1 << i)
    }

    /// The full ground set `{0, ..., size-1}`.
    pub fn full(size: usize) -> Subset {
        debug_assert!(size <= 16);
        if size == 16 {
            Subset(u16::MAX)
        } else {
            Subset((1u16 << size) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut bits = 0u16;
        for i in iter {
            debug_assert!(i < 16);
            bits |= 1 << i;
        }
        Subset(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 16 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..16).filter(move |i| bits & (1 << i) != 0)
    }

    /// All subsets of the ground set `{0, ..., size-1}`.
    pub fn all(size: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(size <= 16);
        (0..(1u32 << size)).map(|b| Subset(b as u16))
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        // Standard submask enumeration, ascending by value.
        std::iter::successors(Some(0u16), move |&s| {
            if s == mask {
                None
            } else {
                Some(((s as u32 | !mask as u32) + 1) as u16 & mask)
            }
        })
        .map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = Subset::from_elements([0, 2, 3]);
        assert_eq!(s.card(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.without(2), Subset::from_elements([0, 3]));
        assert!(Subset::from_elements([0, 3]).is_proper_subset_of(s));
        assert_eq!(Subset::full(4).card(), 4);
        assert_eq!(s.to_string(), "{0,2,3}");
    }

    #[test]
    fn submask_enumeration() {
        let s = Subset::from_elements([1, 4]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.contains(&Subset::EMPTY));
        assert!(subs.contains(&s));
    }

    #[test]
    fn all_subsets_count() {
        assert_eq!(Subset::all(5).count(), 32);
    }
}
