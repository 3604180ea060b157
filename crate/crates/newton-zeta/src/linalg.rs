//! Exact integer and rational linear algebra.
//!
//! Everything in this module is arbitrary precision: determinants and ranks
//! are computed by fraction-free (Bareiss) elimination over `BigInt`, linear
//! systems are solved over `BigRational`, and lattice questions (saturation,
//! invariant factors) go through an integer Smith normal form. No floating
//! point enters any computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact integer scalar used throughout the crate.
pub type Int = BigInt;
/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Int], k: &Int) -> Vec<Int> {
    a.iter().map(|x| x * k).collect()
}

/// gcd of the absolute values of all entries; zero only for the zero vector.
pub fn content(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// `v` divided by the gcd of its entries, keeping the direction.
/// Returns `None` for the zero vector.
pub fn primitive(v: &[Int]) -> Option<Vec<Int>> {
    let g = content(v);
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. All intermediate divisions are exact.
pub fn det(mat: &[Vec<Int>]) -> Int {
    let n = mat.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(mat.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<Int>> = mat.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Rank of an integer matrix over the rationals.
pub fn rank(mat: &[Vec<Int>]) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let cols = mat[0].len();
    let mut m: Vec<Vec<Rat>> = mat
        .iter()
        .map(|r| r.iter().map(|x| Rat::from(x.clone())).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = &m[i][c] / &pivot;
                for j in c..cols {
                    let t = &m[r][j] * &factor;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Normal of the hyperplane spanned by `n-1` direction vectors in `Z^n`,
/// as the vector of signed maximal minors (generalized cross product).
/// The zero vector signals linearly dependent directions.
pub fn cross_normal(dirs: &[Vec<Int>]) -> Vec<Int> {
    let n = dirs.len() + 1;
    debug_assert!(dirs.iter().all(|d| d.len() == n));
    let mut normal = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<Int>> = dirs
            .iter()
            .map(|d| {
                d.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let mut m = det(&minor);
        if j % 2 == 1 {
            m = -m;
        }
        normal.push(m);
    }
    normal
}

/// Solve `a * x = b` exactly over the rationals, where `a` is an `n x k`
/// matrix (possibly overdetermined). Returns `None` when the system is
/// inconsistent; when the solution space is positive-dimensional, one
/// solution (free variables set to zero) is returned.
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    debug_assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for j in c..=cols {
            m[r][j] = &m[r][j] / &pivot;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..=cols {
                    let t = &m[r][j] * &factor;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent iff a zero row has non-zero right-hand side.
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivot_col_of_row.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Some(x)
}

/// Express `target` as a rational combination of the rows of `basis`
/// (an `r x n` matrix). Returns `None` when `target` is outside the span.
pub fn solve_in_rows(basis: &[Vec<Int>], target: &[Int]) -> Option<Vec<Rat>> {
    let n = target.len();
    let r = basis.len();
    if r == 0 {
        return if target.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // x * basis = target, transposed into n equations in r unknowns.
    let a: Vec<Vec<Rat>> = (0..n)
        .map(|j| (0..r).map(|i| Rat::from(basis[i][j].clone())).collect())
        .collect();
    let b: Vec<Rat> = target.iter().map(|x| Rat::from(x.clone())).collect();
    solve_exact(&a, &b)
}

/// Smith normal form data for an integer matrix `D`.
///
/// `diag` holds the non-negative invariant factors (each dividing the next),
/// and `qinv` is the unimodular matrix with `D = P^-1 * S * Q^-1`; its first
/// `rank` rows are a basis of the saturation of the row lattice of `D`,
/// i.e. of `span_Q(rows) ∩ Z^n`.
pub struct Smith {
    pub diag: Vec<Int>,
    pub rank: usize,
    pub qinv: Vec<Vec<Int>>,
}

pub fn smith(mat: &[Vec<Int>]) -> Smith {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut s: Vec<Vec<Int>> = mat.to_vec();
    let mut qinv: Vec<Vec<Int>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();

    // Column operation on `s` paired with the inverse row operation on
    // `qinv`, so that `qinv` always equals Q^-1 for the accumulated Q.
    fn col_swap(s: &mut [Vec<Int>], qinv: &mut [Vec<Int>], i: usize, j: usize) {
        for row in s.iter_mut() {
            row.swap(i, j);
        }
        qinv.swap(i, j);
    }
    fn col_sub(s: &mut [Vec<Int>], qinv: &mut [Vec<Int>], j: usize, t: usize, q: &Int) {
        // col_j -= q * col_t  on s;  row_t += q * row_j  on qinv.
        for row in s.iter_mut() {
            let d = &row[t] * q;
            row[j] = &row[j] - d;
        }
        let add: Vec<Int> = qinv[j].iter().map(|x| x * q).collect();
        for (dst, a) in qinv[t].iter_mut().zip(add) {
            *dst += a;
        }
    }
    fn col_add(s: &mut [Vec<Int>], qinv: &mut [Vec<Int>], dst: usize, src: usize) {
        // col_dst += col_src  on s;  row_src -= row_dst  on qinv.
        for row in s.iter_mut() {
            let d = row[src].clone();
            row[dst] = &row[dst] + d;
        }
        let subr: Vec<Int> = qinv[dst].clone();
        for (x, d) in qinv[src].iter_mut().zip(subr) {
            *x -= d;
        }
    }

    let maxround = rows.min(cols);
    let mut t = 0;
    while t < maxround {
        // Locate a pivot in the trailing submatrix.
        let mut pivot = None;
        'search: for i in t..rows {
            for j in t..cols {
                if !s[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        s.swap(t, pi);
        col_swap(&mut s, &mut qinv, t, pj);
        loop {
            if s[t][t].is_negative() {
                for x in s[t].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let mut dirty = false;
            // Clear column t with row operations.
            for i in 0..rows {
                if i == t || s[i][t].is_zero() {
                    continue;
                }
                let q = s[i][t].div_floor(&s[t][t]);
                if !q.is_zero() {
                    let sub_row: Vec<Int> = s[t].iter().map(|x| x * &q).collect();
                    for (x, d) in s[i].iter_mut().zip(sub_row) {
                        *x -= d;
                    }
                }
                if !s[i][t].is_zero() {
                    s.swap(t, i);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            // Clear row t with column operations.
            for j in 0..cols {
                if j == t || s[t][j].is_zero() {
                    continue;
                }
                let q = s[t][j].div_floor(&s[t][t]);
                if !q.is_zero() {
                    col_sub(&mut s, &mut qinv, j, t, &q);
                }
                if !s[t][j].is_zero() {
                    col_swap(&mut s, &mut qinv, t, j);
                    dirty = true;
                    break;
                }
            }
            if !dirty {
                break;
            }
        }
        t += 1;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    let mut k = 0;
    while k + 1 < t {
        let (a, b) = (s[k][k].clone(), s[k + 1][k + 1].clone());
        if b.is_multiple_of(&a) {
            k += 1;
            continue;
        }
        col_add(&mut s, &mut qinv, k, k + 1);
        // Redo the local reduction starting at k; the disturbance is
        // confined to the trailing block.
        let mut tt = k;
        while tt < t {
            loop {
                if s[tt][tt].is_negative() {
                    for x in s[tt].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
                let mut dirty = false;
                for i in 0..rows {
                    if i == tt || s[i][tt].is_zero() {
                        continue;
                    }
                    let q = s[i][tt].div_floor(&s[tt][tt]);
                    if !q.is_zero() {
                        let sub_row: Vec<Int> = s[tt].iter().map(|x| x * &q).collect();
                        for (x, d) in s[i].iter_mut().zip(sub_row) {
                            *x -= d;
                        }
                    }
                    if !s[i][tt].is_zero() {
                        s.swap(tt, i);
                        dirty = true;
                        break;
                    }
                }
                if dirty {
                    continue;
                }
                for j in 0..cols {
                    if j == tt || s[tt][j].is_zero() {
                        continue;
                    }
                    let q = s[tt][j].div_floor(&s[tt][tt]);
                    if !q.is_zero() {
                        col_sub(&mut s, &mut qinv, j, tt, &q);
                    }
                    if !s[tt][j].is_zero() {
                        col_swap(&mut s, &mut qinv, tt, j);
                        dirty = true;
                        break;
                    }
                }
                if !dirty {
                    break;
                }
            }
            tt += 1;
        }
        k = 0;
    }

    let diag: Vec<Int> = (0..maxround).map(|i| s[i][i].abs()).collect();
    let rank = diag.iter().take_while(|d| !d.is_zero()).count();
    Smith {
        diag: diag.into_iter().filter(|d| !d.is_zero()).collect(),
        rank,
        qinv,
    }
}

/// Basis of the saturation of the row lattice: `span_Q(rows of mat) ∩ Z^n`.
/// Every integer point of the rational row span is a Z-combination of the
/// returned rows.
pub fn saturated_row_basis(mat: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if mat.is_empty() {
        return Vec::new();
    }
    let sm = smith(mat);
    sm.qinv.into_iter().take(sm.rank).collect()
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    &factorial(n) / (factorial(k) * factorial(n - k))
}

/// Convenience constructor for tests and examples.
pub fn vec_int(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}
