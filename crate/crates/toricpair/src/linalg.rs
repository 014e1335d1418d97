//! Exact linear algebra on small integer matrices.
//!
//! Rows are lattice vectors. Everything here is sized for ambient rank <= 4
//! and a handful of rows, so the algorithms favour simplicity over
//! asymptotics: Bareiss determinants, rational Gaussian elimination, row
//! Hermite form, kernels, and a Smith-style diagonalization used to complete
//! a saturated lattice basis to a basis of Z^n.

use crate::lattice::{Int, LatticePoint, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix (rows as vectors), by Bareiss
/// fraction-free elimination.
pub fn det(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut prev = Int::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Rank over Q of an integer matrix (rows as vectors).
pub fn rank(rows: &[Vec<Int>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|c| Rat::from_integer(c.clone())).collect())
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in 0..nrows {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] / &pivot;
                for j in col..ncols {
                    let v = &m[rank][j] * &f;
                    m[i][j] = &m[i][j] - v;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

pub fn rank_of_points(points: &[LatticePoint]) -> usize {
    let rows: Vec<Vec<Int>> = points.iter().map(|p| p.coords().to_vec()).collect();
    rank(&rows)
}

/// Solve x * basis = target over Q, where `basis` has full row rank.
/// Returns None when the target is outside the row span.
pub fn solve_in_row_span(basis: &[Vec<Int>], target: &[Int]) -> Option<Vec<Rat>> {
    let k = basis.len();
    let n = target.len();
    // Augmented system: columns of basis^T, one equation per ambient coord.
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..k)
                .map(|i| Rat::from_integer(basis[i][j].clone()))
                .collect();
            row.push(Rat::from_integer(target[j].clone()));
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..n).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let pivot = aug[r][col].clone();
        for i in 0..n {
            if i != r && !aug[i][col].is_zero() {
                let f = &aug[i][col] / &pivot;
                for j in 0..=k {
                    let v = &aug[r][j] * &f;
                    aug[i][j] = &aug[i][j] - v;
                }
            }
        }
        pivot_cols.push((r, col));
        r += 1;
    }
    // Inconsistent if a zero row has nonzero rhs.
    for i in r..n {
        if !aug[i][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); k];
    for &(row, col) in &pivot_cols {
        x[col] = &aug[row][k] / &aug[row][col];
    }
    // Full row rank expected; verify the residual exactly.
    for j in 0..n {
        let mut acc = Rat::zero();
        for i in 0..k {
            acc += &x[i] * Rat::from_integer(basis[i][j].clone());
        }
        if acc != Rat::from_integer(target[j].clone()) {
            return None;
        }
    }
    Some(x)
}

/// Row Hermite normal form: echelon with positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
pub fn row_hnf(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    m.retain(|r| r.iter().any(|c| !c.is_zero()));
    if m.is_empty() {
        return m;
    }
    let ncols = m[0].len();
    let mut top = 0;
    for col in 0..ncols {
        loop {
            let mut nonzero: Vec<usize> = (top..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let i = nonzero[0];
                m.swap(top, i);
                break;
            }
            // Reduce all entries in this column by the smallest one.
            nonzero.sort_by_key(|&i| m[i][col].abs());
            let piv = nonzero[0];
            let piv_row = m[piv].clone();
            for &i in &nonzero[1..] {
                let q = m[i][col].div_floor(&piv_row[col]);
                for j in 0..ncols {
                    let v = &piv_row[j] * &q;
                    m[i][j] = &m[i][j] - v;
                }
            }
        }
        if top < m.len() && !m[top][col].is_zero() {
            if m[top][col].is_negative() {
                for j in 0..ncols {
                    m[top][j] = -m[top][j].clone();
                }
            }
            // Reduce the rows above into [0, pivot).
            let piv_row = m[top].clone();
            for i in 0..top {
                let q = m[i][col].div_floor(&piv_row[col]);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let v = &piv_row[j] * &q;
                        m[i][j] = &m[i][j] - v;
                    }
                }
            }
            top += 1;
        }
    }
    m.truncate(top);
    m
}

/// Basis (rows) of the integer kernel { x : rows * x = 0 }. The result is a
/// basis of the full (saturated) kernel lattice.
pub fn right_kernel(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    // Column-eliminate the matrix while applying the same column operations
    // to an identity; columns that end up zero give the kernel basis.
    let nrows = rows.len();
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut t: Vec<Vec<Int>> = (0..ncols)
        .map(|i| {
            let mut r = vec![Int::zero(); ncols];
            r[i] = Int::one();
            r
        })
        .collect();
    // Columns of the transform are tracked as rows of t: t[j] records the
    // current j-th column as a combination of the original basis vectors.
    let mut col_start = 0;
    for row in 0..nrows {
        loop {
            let nz: Vec<usize> = (col_start..ncols).filter(|&j| !m[row][j].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                m_swap_cols(&mut m, &mut t, col_start, nz[0]);
                break;
            }
            let mut nz_sorted = nz.clone();
            nz_sorted.sort_by_key(|&j| m[row][j].abs());
            let p = nz_sorted[0];
            for &j in &nz_sorted[1..] {
                let q = m[row][j].div_floor(&m[row][p]);
                for i in 0..nrows {
                    let v = &m[i][p] * &q;
                    m[i][j] = &m[i][j] - v;
                }
                for k in 0..ncols {
                    let v = &t[p][k] * &q;
                    t[j][k] = &t[j][k] - v;
                }
            }
        }
        if col_start < ncols && !m[row][col_start].is_zero() {
            col_start += 1;
            if col_start == ncols {
                break;
            }
        }
    }
    let mut kernel = Vec::new();
    for j in col_start..ncols {
        if (0..nrows).all(|i| m[i][j].is_zero()) {
            kernel.push(t[j].clone());
        }
    }
    row_hnf(&kernel)
}

fn m_swap_cols(m: &mut [Vec<Int>], t: &mut [Vec<Int>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    t.swap(a, b);
}

/// Saturation of the lattice generated by the rows: basis of
/// (row span over Q) intersected with Z^n.
pub fn saturate_rows(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let k = right_kernel(rows, ncols);
    if k.is_empty() {
        // Full rank: the saturation is all of Z^n intersect span = ...
        // span is everything, so the standard basis works.
        return (0..ncols)
            .map(|i| {
                let mut r = vec![Int::zero(); ncols];
                r[i] = Int::one();
                r
            })
            .collect();
    }
    right_kernel(&k, ncols)
}

/// Given a basis (rows) of a *saturated* rank-k lattice in Z^n, return a
/// unimodular n x n matrix whose first k rows span the same lattice.
pub fn complete_saturated_basis(basis: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let k = basis.len();
    if k == 0 {
        return (0..n)
            .map(|i| {
                let mut r = vec![Int::zero(); n];
                r[i] = Int::one();
                r
            })
            .collect();
    }
    // Diagonalize P * A * Q = D by row and column operations, tracking Q.
    let mut a: Vec<Vec<Int>> = basis.to_vec();
    let mut q: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut r = vec![Int::zero(); n];
            r[i] = Int::one();
            r
        })
        .collect();
    // q is applied on the right: we keep it as an n x n matrix, and column
    // operations on `a` are mirrored as column operations on `q`.
    let rows = a.len();
    let mut t = 0;
    while t < rows {
        // Find a pivot with minimal |value| in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..n {
                if !a[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        for row in q.iter_mut() {
            row.swap(t, bj);
        }
        let mut dirty = false;
        // Clear the row (column ops) and column (row ops).
        for j in t + 1..n {
            if !a[t][j].is_zero() {
                let f = a[t][j].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for i in 0..rows {
                        let v = &a[i][t] * &f;
                        a[i][j] = &a[i][j] - v;
                    }
                    for i in 0..n {
                        let v = &q[i][t] * &f;
                        q[i][j] = &q[i][j] - v;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
        }
        for i in t + 1..rows {
            if !a[i][t].is_zero() {
                let f = a[i][t].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for j in 0..n {
                        let v = &a[t][j] * &f;
                        a[i][j] = &a[i][j] - v;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
        }
        if !dirty {
            t += 1;
        }
    }
    // Saturated input means the diagonal is +-1 here.
    debug_assert!((0..k).all(|i| a[i][i].abs().is_one()));
    // basis = P^{-1} [I 0] Q^{-1}; the first k rows of Q^{-1} span the lattice.
    invert_unimodular(&q)
}

/// Inverse of a unimodular integer matrix.
pub fn invert_unimodular(m: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = m.len();
    let d = det(m);
    debug_assert!(d.abs().is_one());
    // Cofactor inverse, adequate for n <= 4.
    let mut inv = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Int>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let mut c = det(&minor);
            if (i + j) % 2 == 1 {
                c = -c;
            }
            inv[i][j] = &c * &d; // d = +-1, so this divides by d
        }
    }
    inv
}

/// gcd of all k x k minors of the matrix, where k = number of rows.
/// Zero when the rows are dependent.
pub fn gcd_of_maximal_minors(rows: &[Vec<Int>]) -> Int {
    let k = rows.len();
    if k == 0 {
        return Int::one();
    }
    let n = rows[0].len();
    if k > n {
        return Int::zero();
    }
    let mut g = Int::zero();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<Vec<Int>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        g = g.gcd(&det(&sub));
        // Next k-combination of columns.
        let mut i = k;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if cols[i] != i + n - k {
                cols[i] += 1;
                for j in i + 1..k {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn points_to_rows(points: &[LatticePoint]) -> Vec<Vec<Int>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}
