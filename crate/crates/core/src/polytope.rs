//! Matroid polytopes, their faces, subdivision validation, and the valuation
//! identity for CSM cycles.
//!
//! All face computations are matroid-theoretic: the face of `Q(M)` in a
//! direction from the open braid cone of a chain is the matroid polytope of
//! the direct sum of consecutive chain minors, which on the level of bases
//! is a pure filter on basis-rank counts. No convex-hull machinery is used.

use std::collections::{BTreeMap, BTreeSet};

use crate::bergman::csm_cycle;
use crate::cycle::{BraidChain, TropicalCycle};
use crate::error::{Error, Result};
use crate::lattice::beta;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// The matroid polytope `Q(M)`: the convex hull of the indicator vectors of
/// the bases. Its dimension is `size - c`, with `c` the number of connected
/// components.
#[derive(Clone, Debug)]
pub struct MatroidPolytope {
    matroid: Matroid,
}

impl MatroidPolytope {
    pub fn new(matroid: Matroid) -> MatroidPolytope {
        MatroidPolytope { matroid }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn vertices(&self) -> impl Iterator<Item = Subset> + '_ {
        self.matroid.bases().iter().copied()
    }

    pub fn dim(&self) -> usize {
        polytope_dim(&self.matroid)
    }
}

/// Dimension of `Q(M)`, computed as size minus the number of connected
/// components, never geometrically.
pub fn polytope_dim(m: &Matroid) -> usize {
    m.size() - m.connected_components().len()
}

/// The face of `Q(M)` maximizing any direction in the open cone of the
/// chain, as a matroid on the original ground set.
///
/// Its bases are exactly the bases `B` with `|B ∩ S_i| = r(S_i)` for every
/// chain entry, which is the direct sum of the consecutive chain minors with
/// component labels preserved.
pub fn face_in_direction(m: &Matroid, chain: &BraidChain) -> Matroid {
    let ranks: Vec<usize> = chain.sets().iter().map(|&s| m.rank(s)).collect();
    let bases: Vec<Subset> = m
        .bases()
        .iter()
        .copied()
        .filter(|b| {
            chain
                .sets()
                .iter()
                .zip(&ranks)
                .all(|(&s, &r)| b.intersection(s).card() == r)
        })
        .collect();
    Matroid::from_presorted_bases(m.size(), bases)
}

/// All faces of `Q(M)`, deduplicated by basis set, with their dimensions.
///
/// Faces are enumerated by ranging `face_in_direction` over every chain of
/// proper nonempty subsets of the ground set.
pub fn all_faces(m: &Matroid) -> Vec<(Matroid, usize)> {
    let mut seen: BTreeMap<Vec<Subset>, Matroid> = BTreeMap::new();
    let mut stack: Vec<Subset> = Vec::new();
    collect_faces(m, Subset::EMPTY, &mut stack, &mut seen);
    seen.into_values()
        .map(|f| {
            let dim = polytope_dim(&f);
            (f, dim)
        })
        .collect()
}

fn collect_faces(
    m: &Matroid,
    below: Subset,
    stack: &mut Vec<Subset>,
    seen: &mut BTreeMap<Vec<Subset>, Matroid>,
) {
    let face = face_in_direction(m, &BraidChain::new_unchecked(stack.clone()));
    seen.entry(face.bases().to_vec()).or_insert(face);
    let full = m.ground();
    for s in Subset::all(m.size()) {
        if !s.is_empty() && s != full && below.is_proper_subset_of(s) {
            stack.push(s);
            collect_faces(m, s, stack, seen);
            stack.pop();
        }
    }
}

/// A matroid polytope subdivision, given by its list of top-dimensional
/// cells. Cells must live on the parent's ground set with the parent's rank.
#[derive(Clone, Debug)]
pub struct Subdivision {
    parent: Matroid,
    cells: Vec<Matroid>,
}

impl Subdivision {
    pub fn new(parent: Matroid, cells: Vec<Matroid>) -> Result<Subdivision> {
        if cells.is_empty() {
            return Err(Error::InvalidParameters("a subdivision needs cells".into()));
        }
        for cell in &cells {
            if cell.size() != parent.size() {
                return Err(Error::InvalidParameters(format!(
                    "cell ground-set size {} differs from parent size {}",
                    cell.size(),
                    parent.size()
                )));
            }
            if cell.full_rank() != parent.full_rank() {
                return Err(Error::InvalidParameters(format!(
                    "cell rank {} differs from parent rank {}",
                    cell.full_rank(),
                    parent.full_rank()
                )));
            }
        }
        Ok(Subdivision { parent, cells })
    }

    pub fn trivial(parent: Matroid) -> Subdivision {
        let cells = vec![parent.clone()];
        Subdivision { parent, cells }
    }

    pub fn parent(&self) -> &Matroid {
        &self.parent
    }

    pub fn cells(&self) -> &[Matroid] {
        &self.cells
    }
}

/// Outcome of `validate_subdivision`, with a diagnostic for the first
/// violated clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub ok: bool,
    pub diagnostic: Option<String>,
}

impl Validation {
    fn pass() -> Validation {
        Validation {
            ok: true,
            diagnostic: None,
        }
    }

    fn fail(msg: String) -> Validation {
        Validation {
            ok: false,
            diagnostic: Some(msg),
        }
    }
}

/// A rational point with a common denominator, used for coverage probes.
#[derive(Clone, Debug)]
struct Probe {
    num: Vec<i64>,
    den: i64,
}

impl Probe {
    fn barycenter(vertices: &[Subset], size: usize) -> Probe {
        let mut num = vec![0i64; size];
        for v in vertices {
            for i in v.elements() {
                num[i] += 1;
            }
        }
        Probe {
            num,
            den: vertices.len() as i64,
        }
    }

    fn midpoint(a: &Probe, b: &Probe) -> Probe {
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * b.den + y * a.den)
            .collect();
        Probe {
            num,
            den: 2 * a.den * b.den,
        }
    }

    /// Membership in `Q(M)` via the rank inequalities: `x ≥ 0`,
    /// `x(S) ≤ r(S)` for all S, and `x(ground) = r(M)`.
    fn in_polytope(&self, m: &Matroid) -> bool {
        if self.num.iter().any(|&x| x < 0) {
            return false;
        }
        let total: i64 = self.num.iter().sum();
        if total != m.full_rank() as i64 * self.den {
            return false;
        }
        Subset::all(m.size()).all(|s| {
            let x_s: i64 = s.elements().map(|i| self.num[i]).sum();
            x_s <= m.rank(s) as i64 * self.den
        })
    }

    /// Strict membership in the relative interior. A rank constraint may be
    /// tight only when its subset is a union of connected components (those
    /// equalities cut out the affine hull), and a coordinate may vanish only
    /// on a loop.
    fn in_relative_interior(&self, m: &Matroid) -> bool {
        if !self.in_polytope(m) {
            return false;
        }
        let loops = m.loops();
        for (i, &x) in self.num.iter().enumerate() {
            if x == 0 && !loops.contains(i) {
                return false;
            }
        }
        let comps = m.connected_components();
        for s in Subset::all(m.size()) {
            if s.is_empty() || s == m.ground() {
                continue;
            }
            let x_s: i64 = s.elements().map(|i| self.num[i]).sum();
            if x_s == m.rank(s) as i64 * self.den {
                let is_component_union = comps
                    .iter()
                    .all(|c| c.intersection(s).is_empty() || c.is_subset_of(s));
                if !is_component_union {
                    return false;
                }
            }
        }
        true
    }
}

/// Validates a subdivision: vertex containment, coverage of the parent
/// polytope (exactly on vertices, by rational probes in the interior), and
/// the pairwise proper-face condition.
pub fn validate_subdivision(sub: &Subdivision) -> Validation {
    let parent = sub.parent();
    let size = parent.size();
    let parent_dim = polytope_dim(parent);
    let parent_bases: BTreeSet<Subset> = parent.bases().iter().copied().collect();

    // (a) cell vertices are parent vertices, and cells are full-dimensional.
    let mut union: BTreeSet<Subset> = BTreeSet::new();
    for (idx, cell) in sub.cells().iter().enumerate() {
        for b in cell.bases() {
            if !parent_bases.contains(b) {
                return Validation::fail(format!(
                    "cell {idx} has vertex {b} outside the parent polytope"
                ));
            }
            union.insert(*b);
        }
        if polytope_dim(cell) != parent_dim {
            return Validation::fail(format!(
                "cell {idx} has dimension {} but the parent has {}",
                polytope_dim(cell),
                parent_dim
            ));
        }
    }

    // (b) coverage: the union of cell vertex sets is the parent vertex set,
    // and interior probe points (cell barycenters and their pairwise
    // midpoints) land in some cell.
    if union != parent_bases {
        let missing = parent_bases.difference(&union).next().unwrap();
        return Validation::fail(format!("parent vertex {missing} is not covered by any cell"));
    }
    let barycenters: Vec<Probe> = sub
        .cells()
        .iter()
        .map(|c| Probe::barycenter(c.bases(), size))
        .collect();
    let mut probes: Vec<Probe> = barycenters.clone();
    probes.push(Probe::barycenter(parent.bases(), size));
    for i in 0..barycenters.len() {
        for j in i + 1..barycenters.len() {
            probes.push(Probe::midpoint(&barycenters[i], &barycenters[j]));
        }
    }
    for (pi, probe) in probes.iter().enumerate() {
        if probe.in_polytope(parent) && !sub.cells().iter().any(|c| probe.in_polytope(c)) {
            return Validation::fail(format!("probe point {pi} is covered by no cell"));
        }
    }
    // No probe may be interior to two distinct cells.
    for probe in &probes {
        let interior_count = sub
            .cells()
            .iter()
            .filter(|c| probe.in_relative_interior(c))
            .count();
        if interior_count > 1 {
            return Validation::fail("two cells share interior points".into());
        }
    }

    // (c) for each pair of cells, the convex hull of the common vertices is
    // a proper face of both.
    let proper_faces: Vec<BTreeSet<Vec<Subset>>> = sub
        .cells()
        .iter()
        .map(|cell| {
            all_faces(cell)
                .into_iter()
                .filter(|(f, _)| f.bases().len() != cell.bases().len())
                .map(|(f, _)| f.bases().to_vec())
                .collect()
        })
        .collect();
    for i in 0..sub.cells().len() {
        for j in i + 1..sub.cells().len() {
            let common: Vec<Subset> = sub.cells()[i]
                .bases()
                .iter()
                .filter(|b| sub.cells()[j].is_basis(**b))
                .copied()
                .collect();
            if common.is_empty() {
                continue;
            }
            if common.len() == sub.cells()[i].bases().len()
                || common.len() == sub.cells()[j].bases().len()
            {
                return Validation::fail(format!(
                    "cells {i} and {j} are nested, their intersection is not a proper face"
                ));
            }
            if !proper_faces[i].contains(&common) || !proper_faces[j].contains(&common) {
                return Validation::fail(format!(
                    "the common vertices of cells {i} and {j} do not form a face of both"
                ));
            }
        }
    }
    Validation::pass()
}

/// Interior faces of a validated subdivision: faces of any cell that are not
/// contained in a proper face of the parent polytope.
pub fn interior_faces(sub: &Subdivision) -> Vec<(Matroid, usize)> {
    let parent_proper_faces: Vec<BTreeSet<Subset>> = all_faces(sub.parent())
        .into_iter()
        .filter(|(_, dim)| *dim < polytope_dim(sub.parent()))
        .map(|(f, _)| f.bases().iter().copied().collect())
        .collect();
    let mut faces: BTreeMap<Vec<Subset>, (Matroid, usize)> = BTreeMap::new();
    for cell in sub.cells() {
        for (f, dim) in all_faces(cell) {
            faces.entry(f.bases().to_vec()).or_insert((f, dim));
        }
    }
    faces
        .into_values()
        .filter(|(f, _)| {
            let verts: BTreeSet<Subset> = f.bases().iter().copied().collect();
            !parent_proper_faces
                .iter()
                .any(|pf| verts.is_subset(pf))
        })
        .collect()
}

/// The valuation identity for CSM cycles: `csm_k(parent)` equals the signed
/// sum of `csm_k` over the interior faces of the subdivision, as an exact
/// cycle identity in the shared braid representation.
pub fn check_csm_valuation(sub: &Subdivision, k: usize) -> Result<bool> {
    let parent = sub.parent();
    let d = parent.full_rank() - 1;
    if k > d {
        return Err(Error::InvalidDimension(format!(
            "k = {k} exceeds the top CSM dimension {d}"
        )));
    }
    let dim_q = polytope_dim(parent) as i64;
    let lhs = csm_cycle(parent, k)?;
    let mut rhs = TropicalCycle::empty(parent.size(), k);
    for (face, dim) in interior_faces(sub) {
        let sign = if (dim_q - dim as i64) % 2 == 1 { -1 } else { 1 };
        let term = csm_cycle(&face, k)?;
        rhs = rhs.add(&term.scale(sign))?;
    }
    Ok(lhs == rhs)
}

/// The beta-invariant valuation: `β(parent) = Σ β` over top-dimensional
/// interior faces.
pub fn check_beta_valuation(sub: &Subdivision) -> bool {
    let top = polytope_dim(sub.parent());
    let total: i64 = interior_faces(sub)
        .into_iter()
        .filter(|(_, dim)| *dim == top)
        .map(|(f, _)| beta(&f))
        .sum();
    total == beta(sub.parent())
}
