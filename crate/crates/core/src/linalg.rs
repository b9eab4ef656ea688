//! Small exact integer linear algebra: kernels, saturations, diagonal normal
//! forms and rational solves. Everything here works on matrices with at most
//! a dozen rows and columns, so naive algorithms with `i128` entries are both
//! exact and fast.

pub type Col = Vec<i128>;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A rational number with reduced `i128` numerator and denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rat {
    pub num: i128,
    pub den: i128,
}

impl Rat {
    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0);
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Rat {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn int(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn sub(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    pub fn mul(self, o: Rat) -> Rat {
        Rat::new(self.num * o.num, self.den * o.den)
    }

    pub fn div(self, o: Rat) -> Rat {
        assert!(o.num != 0);
        Rat::new(self.num * o.den, self.den * o.num)
    }
}

/// Rank of the matrix whose columns are `cols`, by fraction-free elimination.
pub fn rank_of_cols(n_rows: usize, cols: &[Col]) -> usize {
    let mut a: Vec<Col> = cols.to_vec();
    let mut rank = 0;
    let mut row = 0;
    while row < n_rows && rank < a.len() {
        // Find a pivot column at or after `rank` with a nonzero entry in `row`.
        match (rank..a.len()).find(|&j| a[j][row] != 0) {
            None => {
                row += 1;
                continue;
            }
            Some(p) => a.swap(rank, p),
        }
        let pivot = a[rank][row];
        for j in rank + 1..a.len() {
            let factor = a[j][row];
            if factor == 0 {
                continue;
            }
            for i in 0..n_rows {
                a[j][i] = a[j][i] * pivot - a[rank][i] * factor;
            }
            let g = a[j].iter().fold(0, |acc, &x| gcd(acc, x));
            if g > 1 {
                a[j].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

/// Does `v` lie in the rational span of `cols`?
pub fn in_rational_span(n_rows: usize, cols: &[Col], v: &[i128]) -> bool {
    let base = rank_of_cols(n_rows, cols);
    let mut extended = cols.to_vec();
    extended.push(v.to_vec());
    rank_of_cols(n_rows, &extended) == base
}

/// Basis of the integer kernel `{x ∈ Z^n : r · x = 0 for every r in rows}`.
///
/// Computed by unimodular column operations on the matrix with the given
/// rows; the columns of the accumulated transform corresponding to zeroed-out
/// columns form a basis of the kernel (which is automatically saturated).
pub fn integer_kernel(n: usize, rows: &[Col]) -> Vec<Col> {
    let mut a: Vec<Col> = (0..n)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect(); // a[j] = column j of the row matrix
    let m = rows.len();
    let mut v: Vec<Col> = (0..n)
        .map(|j| (0..n).map(|i| i128::from(i == j)).collect())
        .collect();
    let mut lead = 0usize;
    for row in 0..m {
        if lead >= n {
            break;
        }
        loop {
            // Gcd-reduce entries of `row` across columns lead..n.
            let mut best: Option<usize> = None;
            for j in lead..n {
                if a[j][row] != 0 && best.map_or(true, |b| a[j][row].abs() < a[b][row].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            a.swap(lead, b);
            v.swap(lead, b);
            let pivot = a[lead][row];
            let mut done = true;
            for j in lead + 1..n {
                let q = a[j][row].div_euclid(pivot);
                if q != 0 {
                    for i in 0..m {
                        a[j][i] -= q * a[lead][i];
                    }
                    for i in 0..n {
                        v[j][i] -= q * v[lead][i];
                    }
                }
                if a[j][row] != 0 {
                    done = false;
                }
            }
            if done {
                lead += 1;
                break;
            }
        }
    }
    // Columns past `lead` are zero on all processed rows; check the rest too.
    let mut kernel = Vec::new();
    for j in 0..n {
        if (0..m).all(|i| a[j][i] == 0) {
            kernel.push(v[j].clone());
        }
    }
    kernel
}

/// Basis of the saturation `span_Q(cols) ∩ Z^n` of a column lattice.
pub fn saturation_basis(n: usize, cols: &[Col]) -> Vec<Col> {
    let orth = integer_kernel(n, cols);
    integer_kernel(n, &orth)
}

/// Solves `Σ x_j cols[j] = target` over the rationals; `None` when
/// inconsistent. When the columns are dependent an arbitrary solution is
/// returned.
pub fn solve_rational(n_rows: usize, cols: &[Col], target: &[i128]) -> Option<Vec<Rat>> {
    let m = cols.len();
    // Augmented rational elimination, dimensions are tiny.
    let mut a: Vec<Vec<Rat>> = (0..n_rows)
        .map(|i| {
            (0..m)
                .map(|j| Rat::int(cols[j][i]))
                .chain([Rat::int(target[i])])
                .collect()
        })
        .collect();
    let mut pivot_col_of_row = vec![usize::MAX; n_rows];
    let mut r = 0usize;
    for c in 0..m {
        let Some(p) = (r..n_rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in 0..n_rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].div(pivot);
                for j in c..=m {
                    let s = a[r][j].mul(f);
                    a[i][j] = a[i][j].sub(s);
                }
            }
        }
        pivot_col_of_row[r] = c;
        r += 1;
        if r == n_rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero target.
    for i in r..n_rows {
        if !a[i][m].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::int(0); m];
    for i in 0..r {
        let c = pivot_col_of_row[i];
        x[c] = a[i][m].div(a[i][c]);
    }
    Some(x)
}

/// Integer solution of `Σ x_j cols[j] = target`, if the rational solution is
/// integral. Only correct when the columns are linearly independent.
pub fn solve_integer(n_rows: usize, cols: &[Col], target: &[i128]) -> Option<Vec<i128>> {
    let x = solve_rational(n_rows, cols, target)?;
    x.iter()
        .map(|r| r.is_integer().then_some(r.num))
        .collect()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det(n: usize, cols: &[Col]) -> i128 {
    assert_eq!(cols.len(), n);
    let mut a: Vec<Col> = cols.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&j| a[j][k] != 0) {
                Some(j) => {
                    a.swap(k, j);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for j in k + 1..n {
            for i in k + 1..n {
                a[j][i] = (a[j][i] * a[k][k] - a[j][k] * a[k][i]) / prev;
            }
            a[j][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Diagonalizes the matrix by unimodular row and column operations and
/// returns `(rank, |product of diagonal entries|)`. The product equals the
/// covolume of the column lattice inside the integer points of its span, so
/// with rank = n it is the index `[Z^n : L]`.
pub fn diag_product(n_rows: usize, cols: &[Col]) -> (usize, i128) {
    let mut a: Vec<Col> = cols.to_vec();
    let m = a.len();
    let mut rank = 0usize;
    let mut product = 1i128;
    let mut top = 0usize; // current pivot row
    while top < n_rows {
        // Locate the nonzero entry of minimal absolute value in the
        // remaining submatrix.
        let mut best: Option<(usize, usize)> = None;
        for j in rank..m {
            for i in top..n_rows {
                if a[j][i] != 0 && best.map_or(true, |(bj, bi)| a[j][i].abs() < a[bj][bi].abs()) {
                    best = Some((j, i));
                }
            }
        }
        let Some((bj, bi)) = best else { break };
        a.swap(rank, bj);
        for col in a.iter_mut().skip(rank) {
            col.swap(top, bi);
        }
        // Reduce the pivot row and pivot column until both are clean.
        loop {
            let pivot = a[rank][top];
            let mut dirty = false;
            for j in rank + 1..m {
                let q = a[j][top].div_euclid(pivot);
                if q != 0 {
                    for i in top..n_rows {
                        a[j][i] -= q * a[rank][i];
                    }
                }
                if a[j][top] != 0 {
                    dirty = true;
                }
            }
            for i in top + 1..n_rows {
                let q = a[rank][i].div_euclid(pivot);
                if q != 0 {
                    for col in a.iter_mut().skip(rank) {
                        col[i] -= q * col[top];
                    }
                }
                if a[rank][i] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // A smaller remainder now sits off-pivot; move it into place.
            let mut best = (rank, top);
            for j in rank..m {
                if a[j][top] != 0 && a[j][top].abs() < a[best.0][best.1].abs() {
                    best = (j, top);
                }
            }
            for i in top..n_rows {
                if a[rank][i] != 0 && a[rank][i].abs() < a[best.0][best.1].abs() {
                    best = (rank, i);
                }
            }
            a.swap(rank, best.0);
            for col in a.iter_mut().skip(rank) {
                col.swap(top, best.1);
            }
        }
        product *= a[rank][top].abs();
        rank += 1;
        top += 1;
        if rank == m {
            break;
        }
    }
    (rank, product)
}

/// Index `[Z^n : L]` of the column lattice, or `None` when the columns do
/// not span `Q^n`.
pub fn lattice_index(n: usize, cols: &[Col]) -> Option<i128> {
    let (rank, product) = diag_product(n, cols);
    (rank == n).then_some(product)
}

/// Gcd of all maximal minors; equals `lattice_index` for spanning column
/// sets. Kept as an independent cross-check of the normal-form route.
pub fn gcd_maximal_minors(n: usize, cols: &[Col]) -> i128 {
    fn rec(n: usize, cols: &[Col], start: usize, chosen: &mut Vec<usize>, acc: &mut i128) {
        if chosen.len() == n {
            let sub: Vec<Col> = chosen.iter().map(|&j| cols[j].clone()).collect();
            *acc = gcd(*acc, det(n, &sub));
            return;
        }
        let need = n - chosen.len();
        for j in start..cols.len() {
            if cols.len() - j < need {
                break;
            }
            chosen.push(j);
            rec(n, cols, j + 1, chosen, acc);
            chosen.pop();
        }
    }
    let mut acc = 0i128;
    rec(n, cols, 0, &mut Vec::new(), &mut acc);
    acc
}

/// Given a matrix `x` (k rows, k-1 independent columns) whose column lattice
/// is saturated in `Z^k`, returns a vector completing the columns to a basis
/// of `Z^k`.
pub fn complete_saturated_to_basis(k: usize, x: &[Col]) -> Col {
    assert_eq!(x.len(), k - 1);
    let mut a: Vec<Col> = x.to_vec();
    // uinv tracks the inverse of the accumulated row transform, stored as
    // columns: after processing, original = uinv * reduced.
    let mut uinv: Vec<Col> = (0..k)
        .map(|j| (0..k).map(|i| i128::from(i == j)).collect())
        .collect();
    for col in 0..k - 1 {
        // Clear rows below the pivot (col, col) with unimodular row ops.
        loop {
            let mut pivot_row = None;
            for i in col..k {
                if a[col][i] != 0
                    && pivot_row.map_or(true, |p: usize| a[col][i].abs() < a[col][p].abs())
                {
                    pivot_row = Some(i);
                }
            }
            let p = pivot_row.expect("columns must be independent");
            if p != col {
                // Swap rows col and p; uinv gets its columns col, p swapped.
                for c in a.iter_mut() {
                    c.swap(col, p);
                }
                uinv.swap(col, p);
            }
            let pivot = a[col][col];
            let mut clean = true;
            for i in col + 1..k {
                let q = a[col][i].div_euclid(pivot);
                if q != 0 {
                    // row_i -= q * row_col  =>  uinv col_col += q * col_i
                    for c in a.iter_mut() {
                        c[i] -= q * c[col];
                    }
                    for r in 0..k {
                        uinv[col][r] += q * uinv[i][r];
                    }
                }
                if a[col][i] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // Reduce later columns so their entries in this row shrink; pure
        // column ops do not affect the column lattice.
        let pivot = a[col][col];
        for j in col + 1..k - 1 {
            let q = a[j][col].div_euclid(pivot);
            if q != 0 {
                for i in 0..k {
                    a[j][i] -= q * a[col][i];
                }
            }
        }
        assert!(
            a[col][col].abs() == 1,
            "column lattice is not saturated (diagonal {})",
            a[col][col]
        );
    }
    uinv[k - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_span() {
        let cols = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(rank_of_cols(3, &cols), 2);
        assert!(in_rational_span(3, &cols, &[2, 3, 5]));
        assert!(!in_rational_span(3, &cols, &[0, 0, 1]));
    }

    #[test]
    fn kernel_is_correct() {
        // Kernel of the single row (1, 1, 1).
        let rows = vec![vec![1, 1, 1]];
        let kernel = integer_kernel(3, &rows);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert_eq!(v.iter().sum::<i128>(), 0);
        }
        assert_eq!(rank_of_cols(3, &kernel), 2);
    }

    #[test]
    fn saturation() {
        // The lattice spanned by (2, 0) has saturation spanned by (1, 0).
        let sat = saturation_basis(2, &[vec![2, 0]]);
        assert_eq!(sat.len(), 1);
        assert_eq!(sat[0][0].abs(), 1);
        assert_eq!(sat[0][1], 0);
    }

    #[test]
    fn solve_and_det() {
        let cols = vec![vec![2, 1], vec![1, 1]];
        assert_eq!(det(2, &cols), 1);
        let x = solve_integer(2, &cols, &[5, 3]).unwrap();
        assert_eq!(x, vec![2, 1]);
        assert_eq!(solve_rational(2, &[vec![1, 1]], &[1, 2]), None);
    }

    #[test]
    fn indexes_agree() {
        let cases: Vec<Vec<Col>> = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![2, 0], vec![0, 3]],
            vec![vec![1, 1], vec![1, -1]],
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1], vec![1, 1, 1]],
            vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 5], vec![2, 1, 5]],
        ];
        for cols in cases {
            let n = cols[0].len();
            let by_snf = lattice_index(n, &cols);
            let by_minors = gcd_maximal_minors(n, &cols);
            match by_snf {
                Some(ix) => assert_eq!(ix, by_minors),
                None => assert_eq!(by_minors, 0),
            }
        }
    }

    #[test]
    fn completion() {
        let x = vec![vec![1, 0, 2], vec![0, 1, 3]];
        let v = complete_saturated_to_basis(3, &x);
        let full = vec![x[0].clone(), x[1].clone(), v];
        assert_eq!(det(3, &full).abs(), 1);
    }
}
