use std::collections::HashMap;

use crate::cycle::{BraidChain, TropicalCycle};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Default parameter for the deterministic displacement vector
/// `v(t) = (1, t, t^2, ..., t^n)`.
const DEFAULT_SEED_T: i128 = 1_000_003;
const MAX_RETRIES: usize = 5;

/// The displacement parameter, overridable through `MATROID_CSM_SEED_T`
/// (an integer >= 2; smaller or unparsable values fall back to the default).
fn seed_t() -> i128 {
    std::env::var("MATROID_CSM_SEED_T")
        .ok()
        .and_then(|s| s.parse::<i128>().ok())
        .filter(|&t| t >= 2)
        .unwrap_or(DEFAULT_SEED_T)
}

/// The standard tropical hyperplane `B(U_{n,n+1})` in `R^{n+1}/1`: all
/// complete flags of subsets of sizes `1, ..., n-1`, each with weight 1.
pub fn standard_hyperplane(n_plus_1: usize) -> Result<TropicalCycle> {
    if n_plus_1 < 2 {
        return Err(Error::InvalidParameters(
            "the standard hyperplane needs an ambient ground set of size >= 2".into(),
        ));
    }
    let n = n_plus_1 - 1;
    let mut cycle = TropicalCycle::empty(n_plus_1, n - 1);
    let mut stack: Vec<Subset> = Vec::new();
    fn extend(
        n_plus_1: usize,
        depth: usize,
        stack: &mut Vec<Subset>,
        cycle: &mut TropicalCycle,
    ) {
        if depth == 0 {
            cycle.add_weight(BraidChain::new_unchecked(stack.clone()), 1);
            return;
        }
        let prev = stack.last().copied().unwrap_or(Subset::EMPTY);
        for i in 0..n_plus_1 {
            if !prev.contains(i) {
                stack.push(prev.with(i));
                extend(n_plus_1, depth - 1, stack, cycle);
                stack.pop();
            }
        }
    }
    extend(n_plus_1, n - 1, &mut stack, &mut cycle);
    Ok(cycle)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Meet {
    Yes,
    No,
    /// The displacement vector touched a boundary; retry with a new one.
    Degenerate,
}

/// Does `σ_a` meet `σ_b + v`? Exact test in braid-level coordinates.
///
/// A point of `σ_a` is constant on the layers of the chain `a` with
/// non-increasing level values, and similarly for `σ_b`; the intersection
/// condition becomes an integer difference-constraint system on the level
/// values. Any forced tie between level values means `v` touches a cone
/// boundary, which is reported as degenerate.
fn meets_displaced(a: &BraidChain, b: &BraidChain, v: &[i128], ambient: usize) -> Meet {
    let (k, l) = (a.len(), b.len());
    let nodes = k + l + 2;
    let level = |chain: &BraidChain, j: usize| {
        chain
            .sets()
            .iter()
            .position(|s| s.contains(j))
            .unwrap_or(chain.len())
    };

    // Equality edges: d_{lvl_a(j)} - c_{lvl_b(j)} = v_j, with the c-nodes
    // offset by k+1 in the numbering.
    let mut adj: Vec<Vec<(usize, i128)>> = vec![Vec::new(); nodes];
    for (j, &vj) in v.iter().enumerate().take(ambient) {
        let u = level(a, j);
        let w = k + 1 + level(b, j);
        adj[u].push((w, vj)); // pot[u] - pot[w] = vj
        adj[w].push((u, -vj));
    }

    // Propagate potentials over each component; a redundant consistent edge
    // is a non-generic coincidence, an inconsistent one means no solution.
    let mut pot = vec![0i128; nodes];
    let mut comp = vec![usize::MAX; nodes];
    let mut n_comps = 0usize;
    for start in 0..nodes {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = n_comps;
        pot[start] = 0;
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &(w, off) in &adj[u] {
                let expected = pot[u] - off;
                if comp[w] == usize::MAX {
                    comp[w] = n_comps;
                    pot[w] = expected;
                    queue.push(w);
                } else if pot[w] != expected {
                    return Meet::No;
                }
            }
        }
        n_comps += 1;
    }
    // Count edges per component to detect cycles in the equality graph:
    // a forest has exactly (nodes - components) edges.
    let n_edges = ambient;
    if n_edges != nodes - n_comps {
        // A consistent redundant equality: non-generic displacement.
        return Meet::Degenerate;
    }

    // Monotonicity constraints within each family of level values.
    let inf = i128::MAX / 4;
    let mut dist = vec![vec![inf; n_comps]; n_comps];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    let mut constraints: Vec<(usize, usize)> = Vec::new();
    for p in 0..k {
        constraints.push((p, p + 1));
    }
    for q in 0..l {
        constraints.push((k + 1 + q, k + 1 + q + 1));
    }
    for (hi, lo) in constraints {
        let diff = pot[hi] - pot[lo];
        if comp[hi] == comp[lo] {
            if diff < 0 {
                return Meet::No;
            }
            if diff == 0 {
                return Meet::Degenerate;
            }
        } else {
            // off[comp(lo)] <= off[comp(hi)] + diff
            let (u, w) = (comp[hi], comp[lo]);
            dist[u][w] = dist[u][w].min(diff);
        }
    }
    // Floyd-Warshall feasibility: a negative cycle is infeasible, a zero
    // cycle pins two components together (degenerate for a generic vector).
    for m in 0..n_comps {
        for u in 0..n_comps {
            if dist[u][m] == inf {
                continue;
            }
            for w in 0..n_comps {
                if dist[m][w] != inf {
                    dist[u][w] = dist[u][w].min(dist[u][m] + dist[m][w]);
                }
            }
        }
    }
    for u in 0..n_comps {
        if dist[u][u] < 0 {
            return Meet::No;
        }
        for w in u + 1..n_comps {
            if dist[u][w] != inf && dist[w][u] != inf && dist[u][w] + dist[w][u] == 0 {
                return Meet::Degenerate;
            }
        }
    }
    Meet::Yes
}

/// Stable intersection of two braid-supported cycles, by the fan
/// displacement rule with a deterministic moment-curve displacement vector.
pub fn stable_intersect(z1: &TropicalCycle, z2: &TropicalCycle) -> Result<TropicalCycle> {
    if z1.ambient() != z2.ambient() {
        return Err(Error::OperandMismatch(format!(
            "cycles live in different ambient spaces {} and {}",
            z1.ambient(),
            z2.ambient()
        )));
    }
    let ambient = z1.ambient();
    let n = ambient - 1;
    let (k, l) = (z1.dim(), z2.dim());
    if k + l < n {
        return Ok(TropicalCycle::empty(ambient, 0));
    }
    let out_dim = k + l - n;
    if z1.is_empty() || z2.is_empty() {
        return Ok(TropicalCycle::empty(ambient, out_dim));
    }
    let mut t = seed_t();
    for _ in 0..=MAX_RETRIES {
        let Some(v) = moment_vector(t, ambient) else {
            return Err(Error::GenericVectorExhausted);
        };
        if let Some(result) = intersect_attempt(z1, z2, &v, ambient, n, out_dim) {
            return Ok(result);
        }
        t = t.checked_mul(t).ok_or(Error::GenericVectorExhausted)?;
    }
    Err(Error::GenericVectorExhausted)
}

fn moment_vector(t: i128, ambient: usize) -> Option<Vec<i128>> {
    let mut v = vec![1i128; ambient];
    for j in 1..ambient {
        v[j] = v[j - 1].checked_mul(t)?;
    }
    Some(v)
}

/// One displacement attempt; `None` when a degenerate incidence demands a
/// fresh vector.
fn intersect_attempt(
    z1: &TropicalCycle,
    z2: &TropicalCycle,
    v: &[i128],
    ambient: usize,
    n: usize,
    out_dim: usize,
) -> Option<TropicalCycle> {
    let mut out = TropicalCycle::empty(ambient, out_dim);
    for (sigma, w1) in z1.entries() {
        for (tau, w2) in z2.entries() {
            // Only pairs whose cones intersect in the expected dimension can
            // contribute; the intersection of braid cones is the cone of the
            // common subchain.
            if sigma.common_count(tau) != out_dim {
                continue;
            }
            match meets_displaced(sigma, tau, v, ambient) {
                Meet::No => {}
                Meet::Degenerate => return None,
                Meet::Yes => {
                    let mut cols = sigma.reduced_generators(ambient);
                    cols.extend(tau.reduced_generators(ambient));
                    // Multiplicity is the index of Λ_σ + Λ_τ in the full
                    // lattice; chain-cone lattices are generated by their
                    // reduced indicator columns.
                    let index = linalg::lattice_index(n, &cols)?;
                    out.add_weight(sigma.common(tau), w1 * w2 * index as i64);
                }
            }
        }
    }
    Some(out)
}

/// Degree of a cycle: intersect with the standard hyperplane until
/// dimension 0, then sum the weights.
pub fn degree(z: &TropicalCycle) -> Result<i64> {
    let mut current = z.clone();
    for _ in 0..z.dim() {
        let h = standard_hyperplane(z.ambient())?;
        current = stable_intersect(&current, &h)?;
    }
    Ok(current.entries().map(|(_, w)| w).sum())
}

/// Degree of `csm_k(M)` by deletion-contraction, entirely independent of the
/// stable-intersection route.
///
/// Recursion on the smallest element that is neither a loop nor a coloop;
/// base cases are matroids with loops (degree 0) and free matroids (degree 1
/// exactly in the top dimension).
pub fn degree_by_recursion(m: &Matroid, k: usize) -> i64 {
    let mut memo = HashMap::new();
    degree_rec(m, k, &mut memo)
}

fn degree_rec(m: &Matroid, k: usize, memo: &mut HashMap<(Matroid, usize), i64>) -> i64 {
    if m.has_loops() {
        return 0;
    }
    let d = m.full_rank() - 1;
    if k > d {
        return 0;
    }
    if m.coloops() == m.ground() {
        return i64::from(k == d);
    }
    if let Some(&cached) = memo.get(&(m.clone(), k)) {
        return cached;
    }
    let i = (0..m.size())
        .find(|&i| !m.is_coloop(i) && !m.loops().contains(i))
        .expect("a loopless non-free matroid has a non-coloop element");
    let value = degree_rec(&m.deletion(i), k, memo) - degree_rec(&m.contraction(i), k, memo);
    memo.insert((m.clone(), k), value);
    value
}

/// Pushforward along the projection forgetting coordinate `i`.
///
/// Each chain maps entrywise by `S ↦ S \ {i}` (relabeled); chains whose
/// image degenerates contribute nothing, the rest transfer their weight
/// multiplied by the index of the projected cone lattice in its saturation.
pub fn pushforward_forget(z: &TropicalCycle, i: usize) -> Result<TropicalCycle> {
    let ambient = z.ambient();
    if i >= ambient {
        return Err(Error::InvalidParameters(format!(
            "element {i} out of range for ambient {ambient}"
        )));
    }
    if ambient < 2 {
        return Err(Error::InvalidParameters(
            "cannot project away the last coordinate".into(),
        ));
    }
    let new_ambient = ambient - 1;
    let full_new = Subset::full(new_ambient);
    let mut out = TropicalCycle::empty(new_ambient, z.dim());
    'chains: for (chain, w) in z.entries() {
        let mut image: Vec<Subset> = Vec::new();
        for s in chain.sets() {
            let t = Subset::from_elements(
                s.elements()
                    .filter(|&e| e != i)
                    .map(|e| if e < i { e } else { e - 1 }),
            );
            if t.is_empty() || t == full_new {
                continue 'chains;
            }
            if let Some(&last) = image.last() {
                if !last.is_proper_subset_of(t) {
                    continue 'chains;
                }
            }
            image.push(t);
        }
        let image = BraidChain::new_unchecked(image);
        let cols = image.reduced_generators(new_ambient);
        let (rank, covolume) = linalg::diag_product(new_ambient - 1, &cols);
        debug_assert_eq!(rank, cols.len(), "image chain generators are independent");
        out.add_weight(image, w * covolume as i64);
    }
    Ok(out)
}
