//! Bundled matroids used by the verification suites: uniform families, the
//! graphic matroid of K4, the Fano and non-Fano matroids, the matroid
//! subdivisions of the octahedron, and all simple rank-3 matroids on up to
//! six elements.

use crate::error::Result;
use crate::matroid::Matroid;
use crate::polytope::Subdivision;
use crate::subset::Subset;

fn triple(a: usize, b: usize, c: usize) -> Subset {
    Subset::from_elements([a, b, c])
}

/// The graphic matroid of the complete graph K4: edges 0..6 labeled
/// 01, 02, 03, 12, 13, 23 on vertices {0,1,2,3}; bases are spanning trees.
pub fn k4() -> Matroid {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut bases = Vec::new();
    for s in Subset::all(6) {
        if s.card() != 3 {
            continue;
        }
        // A 3-edge subset of K4 is a spanning tree iff it is not a triangle.
        let mut deg = [0usize; 4];
        for e in s.elements() {
            deg[edges[e].0] += 1;
            deg[edges[e].1] += 1;
        }
        if deg.iter().all(|&d| d > 0) {
            bases.push(s);
        }
    }
    Matroid::from_bases(6, bases).expect("K4 spanning trees form a matroid")
}

const FANO_LINES: [(usize, usize, usize); 7] = [
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
];

fn rank3_from_lines(size: usize, lines: &[Subset]) -> Result<Matroid> {
    let bases = Subset::all(size)
        .filter(|s| s.card() == 3 && !lines.iter().any(|l| s.is_subset_of(*l)));
    Matroid::from_bases(size, bases)
}

/// The Fano matroid: seven points, seven three-point lines.
pub fn fano() -> Matroid {
    let lines: Vec<Subset> = FANO_LINES.iter().map(|&(a, b, c)| triple(a, b, c)).collect();
    rank3_from_lines(7, &lines).expect("Fano is a matroid")
}

/// The non-Fano matroid: the Fano configuration with one line removed.
pub fn nonfano() -> Matroid {
    let lines: Vec<Subset> = FANO_LINES[..6]
        .iter()
        .map(|&(a, b, c)| triple(a, b, c))
        .collect();
    rank3_from_lines(7, &lines).expect("non-Fano is a matroid")
}

/// The three nontrivial matroid subdivisions of the octahedron `Q(U_{2,4})`,
/// each splitting it into two square pyramids. The split along the pair
/// `{a,b}` has one cell missing the basis `{a,b}` and the other missing its
/// complement.
pub fn octahedron_splits() -> Vec<Subdivision> {
    let parent = Matroid::uniform(2, 4).unwrap();
    let pairs = [(0usize, 1usize), (0, 2), (0, 3)];
    pairs
        .iter()
        .map(|&(a, b)| {
            let ab = Subset::from_elements([a, b]);
            let cd = Subset::full(4).difference(ab);
            let cell = |removed: Subset| {
                Matroid::from_bases(
                    4,
                    parent.bases().iter().copied().filter(|&s| s != removed),
                )
                .expect("square pyramid is a matroid")
            };
            Subdivision::new(parent.clone(), vec![cell(ab), cell(cd)]).unwrap()
        })
        .collect()
}

/// Canonical representative of the isomorphism class of a matroid: the
/// lexicographically least relabeled basis list over all permutations of the
/// ground set.
pub fn canonical_form(m: &Matroid) -> Matroid {
    let size = m.size();
    let mut perm: Vec<usize> = (0..size).collect();
    let mut best: Option<Vec<Subset>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut relabeled: Vec<Subset> = m
            .bases()
            .iter()
            .map(|b| Subset::from_elements(b.elements().map(|e| p[e])))
            .collect();
        relabeled.sort();
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    Matroid::from_presorted_bases(size, best.unwrap())
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// All simple rank-3 matroids on `size` elements, one per isomorphism class.
///
/// A simple rank-3 matroid is determined by its long lines (rank-2 flats
/// with at least three points), which form a family of proper subsets
/// pairwise meeting in at most one point; conversely every such family
/// yields one. Enumerates all families, builds the matroids, and
/// deduplicates up to relabeling.
pub fn simple_rank3(size: usize) -> Vec<Matroid> {
    assert!((3..=7).contains(&size));
    let candidates: Vec<Subset> = Subset::all(size)
        .filter(|s| s.card() >= 3 && s.card() <= size - 1)
        .collect();
    let mut families: Vec<Vec<Subset>> = Vec::new();
    let mut stack: Vec<Subset> = Vec::new();
    fn extend(
        candidates: &[Subset],
        start: usize,
        stack: &mut Vec<Subset>,
        out: &mut Vec<Vec<Subset>>,
    ) {
        out.push(stack.clone());
        for i in start..candidates.len() {
            let c = candidates[i];
            if stack.iter().all(|l| l.intersection(c).card() <= 1) {
                stack.push(c);
                extend(candidates, i + 1, stack, out);
                stack.pop();
            }
        }
    }
    extend(&candidates, 0, &mut stack, &mut families);

    let mut classes: Vec<Matroid> = Vec::new();
    let mut seen: std::collections::BTreeSet<Vec<Subset>> = std::collections::BTreeSet::new();
    for lines in families {
        let m = rank3_from_lines(size, &lines).expect("line family gives a matroid");
        let canon = canonical_form(&m);
        if seen.insert(canon.bases().to_vec()) {
            classes.push(canon);
        }
    }
    classes
}

/// The verification catalog: all uniform matroids `U_{r,m}` with
/// `1 <= r <= m <= max_size` (capped at 7), the graphic matroid of K4, the
/// Fano and non-Fano matroids, and all simple rank-3 matroids on up to six
/// elements, each with a stable name.
pub fn catalog(max_size: usize) -> Vec<(String, Matroid)> {
    let cap = max_size.min(7);
    let mut entries = Vec::new();
    for m in 1..=cap {
        for r in 1..=m {
            entries.push((format!("uniform_{r}_{m}"), Matroid::uniform(r, m).unwrap()));
        }
    }
    if cap >= 6 {
        entries.push(("k4".to_string(), k4()));
    }
    if cap >= 7 {
        entries.push(("fano".to_string(), fano()));
        entries.push(("nonfano".to_string(), nonfano()));
    }
    for size in 3..=cap.min(6) {
        for (i, m) in simple_rank3(size).into_iter().enumerate() {
            // Uniform matroids already appear above under their own name.
            if m == Matroid::uniform(3, size).unwrap() {
                continue;
            }
            entries.push((format!("simple_r3_{size}_{i:03}"), m));
        }
    }
    entries
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{beta, characteristic_polynomial};
    use crate::poly::IntPoly;

    #[test]
    fn k4_has_sixteen_spanning_trees() {
        let m = k4();
        assert_eq!(m.bases().len(), 16);
        assert_eq!(m.full_rank(), 3);
        assert!(m.is_connected());
        // χ of the cycle matroid of K4 is (λ-1)(λ-2)(λ-3).
        assert_eq!(
            characteristic_polynomial(&m),
            IntPoly::from_coeffs(vec![-6, 11, -6, 1])
        );
        assert_eq!(beta(&m), 2);
    }

    #[test]
    fn fano_and_nonfano() {
        let f = fano();
        assert_eq!(f.bases().len(), 28);
        assert_eq!(f.full_rank(), 3);
        // Oracle by hand over the flats lattice: seven points with μ = -1,
        // seven lines with μ = 2, so χ = λ³ - 7λ² + 14λ - 8.
        assert_eq!(
            characteristic_polynomial(&f),
            IntPoly::from_coeffs(vec![-8, 14, -7, 1])
        );
        assert_eq!(beta(&f), 3);
        let nf = nonfano();
        assert_eq!(nf.bases().len(), 29);
        assert_eq!(
            characteristic_polynomial(&nf),
            IntPoly::from_coeffs(vec![-9, 15, -7, 1])
        );
        assert_eq!(beta(&nf), 4);
    }

    #[test]
    fn canonical_form_identifies_isomorphic_matroids() {
        // Relabeled copies of the same configuration canonicalize equally.
        let a = rank3_from_lines(4, &[triple(0, 1, 2)]).unwrap();
        let b = rank3_from_lines(4, &[triple(1, 2, 3)]).unwrap();
        assert_ne!(a, b);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn simple_rank3_small_counts() {
        // Hand-counted classes: on 3 points only U_{3,3}; on 4 points
        // U_{3,4} and the 3-point line plus a free point; on 5 points the
        // empty family, one 3-line, two 3-lines sharing a point, one 4-line.
        assert_eq!(simple_rank3(3).len(), 1);
        assert_eq!(simple_rank3(4).len(), 2);
        assert_eq!(simple_rank3(5).len(), 4);
        // All generated matroids are simple of rank 3.
        for m in simple_rank3(6) {
            assert_eq!(m.full_rank(), 3);
            assert!(!m.has_loops());
            for i in 0..6 {
                for j in i + 1..6 {
                    assert_eq!(m.rank(Subset::from_elements([i, j])), 2);
                }
            }
        }
    }

    #[test]
    fn catalog_is_deduplicated() {
        let entries = catalog(7);
        let mut names: Vec<&str> = entries.iter().map(|(n, _)| n.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), entries.len());
        assert!(entries.iter().any(|(n, _)| n == "uniform_3_7"));
        assert!(entries.iter().any(|(n, _)| n == "fano"));
    }
}
