//! Exact dense linear algebra over the rationals.
//!
//! Small dimensions only; everything is Gaussian elimination with full
//! pivot bookkeeping so that membership tests and coordinates are exact.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratio::Rat;

/// Dense column vector.
pub type Vector = Vec<Rat>;

/// Dense row-major matrix.
pub type Matrix = Vec<Vec<Rat>>;

/// Zero vector of length `n`.
pub fn zero_vec(n: usize) -> Vector {
    vec![Rat::zero(); n]
}

/// True when every entry is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rat::from_integer(1.into());
    v
}

/// `y += c * x` componentwise.
pub fn axpy(y: &mut [Rat], c: &Rat, x: &[Rat]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += c * xi;
        }
    }
}

/// Componentwise difference `a - b`.
pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scalar multiple `c * v`.
pub fn scale_vec(c: &Rat, v: &[Rat]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Dense matrix-vector product.
pub fn mat_vec(m: &Matrix, v: &[Rat]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Dense matrix product.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = vec![zero_vec(cols); a.len()];
    for (i, arow) in a.iter().enumerate() {
        for (k, aik) in arow.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Transpose.
pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut out = vec![zero_vec(rows); cols];
    for i in 0..rows {
        for j in 0..cols {
            out[j][i] = m[i][j].clone();
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Incremental span with coordinate tracking
// ---------------------------------------------------------------------------

struct SpanRow {
    /// Fully reduced row; its pivot column is zero in every other row.
    vec: Vector,
    pivot: usize,
    /// Coordinates of `vec` over the successfully inserted originals.
    combo: Vec<Rat>,
}

/// A growing subspace of `Q^n` that remembers, for each reduced row, how it
/// was assembled from the inserted originals. Supports exact membership and
/// coordinate queries against the original insertion order.
pub struct Span {
    ncols: usize,
    rows: Vec<SpanRow>,
    inserted: usize,
}

impl Span {
    pub fn new(ncols: usize) -> Self {
        Span { ncols, rows: Vec::new(), inserted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the rows; returns the remainder and the
    /// multiplier applied for each row.
    fn reduce(&self, v: &[Rat]) -> (Vector, Vec<Rat>) {
        let mut rem = v.to_vec();
        let mut mults = vec![Rat::zero(); self.rows.len()];
        for (r, row) in self.rows.iter().enumerate() {
            let coeff = rem[row.pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            let m = &coeff / &row.vec[row.pivot];
            let neg = -m.clone();
            axpy(&mut rem, &neg, &row.vec);
            mults[r] = m;
        }
        (rem, mults)
    }

    /// Tries to add `v` to the span. Returns `true` when `v` was
    /// independent and became basis original number `self.dim() - 1`.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ncols, "span column mismatch");
        let (rem, mults) = self.reduce(v);
        let pivot = match rem.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        // combo for the new row: v minus the multiples taken from old rows.
        let mut combo = vec![Rat::zero(); self.inserted + 1];
        combo[self.inserted] = Rat::from_integer(1.into());
        for (r, m) in mults.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (b, c) in self.rows[r].combo.iter().enumerate() {
                combo[b] -= m * c;
            }
        }
        // Keep all rows fully reduced: clear the new pivot column above.
        let new_row = SpanRow { vec: rem, pivot, combo };
        for row in &mut self.rows {
            let coeff = row.vec[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            let m = &coeff / &new_row.vec[pivot];
            let neg = -m.clone();
            axpy(&mut row.vec, &neg, &new_row.vec);
            while row.combo.len() < new_row.combo.len() {
                row.combo.push(Rat::zero());
            }
            for (b, c) in new_row.combo.iter().enumerate() {
                row.combo[b] -= &m * c;
            }
        }
        self.rows.push(new_row);
        self.inserted += 1;
        true
    }

    /// Exact coordinates of `v` over the inserted originals, or `None`
    /// when `v` lies outside the span.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let (rem, mults) = self.reduce(v);
        if !is_zero_vec(&rem) {
            return None;
        }
        let mut coords = vec![Rat::zero(); self.inserted];
        for (r, m) in mults.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (b, c) in self.rows[r].combo.iter().enumerate() {
                coords[b] += m * c;
            }
        }
        Some(coords)
    }

    /// Membership test without coordinates.
    pub fn contains(&self, v: &[Rat]) -> bool {
        let (rem, _) = self.reduce(v);
        is_zero_vec(&rem)
    }
}

// ---------------------------------------------------------------------------
// One-shot solvers
// ---------------------------------------------------------------------------

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    let ncols = if m.is_empty() { 0 } else { m[0].len() };
    let mut span = Span::new(ncols);
    for row in m {
        span.insert(row);
    }
    span.dim()
}

/// Solves `A x = b` exactly. Returns one solution (free variables set to
/// zero) or `None` when inconsistent.
pub fn solve(a: &Matrix, b: &[Rat]) -> Option<Vector> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "solve shape mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    // RREF of the augmented matrix.
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let Some(sel) = (prow..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(prow, sel);
        let inv = aug[prow][col].clone();
        for x in aug[prow].iter_mut() {
            if !x.is_zero() {
                *x = &*x / &inv;
            }
        }
        for r in 0..rows {
            if r != prow && !aug[r][col].is_zero() {
                let m = aug[r][col].clone();
                for c in col..=cols {
                    let t = &m * &aug[prow][c];
                    aug[r][c] -= t;
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
        if prow == rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero augment.
    for r in prow..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = zero_vec(cols);
    for &(r, c) in &pivots {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis for the right kernel of `A`.
pub fn nullspace(a: &Matrix) -> Vec<Vector> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut prow = 0;
    for col in 0..cols {
        let Some(sel) = (prow..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(prow, sel);
        let inv = m[prow][col].clone();
        for x in m[prow].iter_mut() {
            if !x.is_zero() {
                *x = &*x / &inv;
            }
        }
        for r in 0..rows {
            if r != prow && !m[r][col].is_zero() {
                let c0 = m[r][col].clone();
                for c in 0..cols {
                    let t = &c0 * &m[prow][c];
                    m[r][c] -= t;
                }
            }
        }
        pivot_of_col[col] = Some(prow);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = zero_vec(cols);
        v[free] = Rat::from_integer(1.into());
        for (col, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = p {
                v[col] = -m[*r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Determinant by fraction-free-ish elimination (clones, small sizes).
pub fn det(m: &Matrix) -> Result<Rat> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::ShapeMismatch("determinant needs a square matrix".into()));
        }
    }
    let mut a = m.clone();
    let mut acc = Rat::from_integer(1.into());
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(Rat::zero());
        };
        if sel != col {
            a.swap(col, sel);
            acc = -acc;
        }
        let p = a[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let m = &a[r][col] / &p;
            for c in col..n {
                let t = &m * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Sparse operators for large ambient representations
// ---------------------------------------------------------------------------

/// Column-major sparse square operator; only used for ambient tensor
/// spaces where dense storage would be wasteful.
#[derive(Clone)]
pub struct SparseOp {
    pub dim: usize,
    /// `cols[j]` lists `(i, c)` with `M[i][j] = c != 0`.
    pub cols: Vec<Vec<(usize, Rat)>>,
}

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        SparseOp { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn apply(&self, v: &[Rat]) -> Vector {
        assert_eq!(v.len(), self.dim, "sparse op shape mismatch");
        let mut out = zero_vec(self.dim);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, c) in &self.cols[j] {
                out[*i] += c * x;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn v(entries: &[i64]) -> Vector {
        entries.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn span_tracks_original_coordinates() {
        let mut span = Span::new(3);
        assert!(span.insert(&v(&[1, 1, 0])));
        assert!(span.insert(&v(&[0, 1, 1])));
        assert!(!span.insert(&v(&[1, 2, 1])));
        let coords = span.coords(&v(&[2, 3, 1])).unwrap();
        assert_eq!(coords, v(&[2, 1]));
        assert!(span.coords(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn span_coords_match_after_interleaved_inserts() {
        let mut span = Span::new(4);
        let originals = [v(&[2, 0, 1, 0]), v(&[1, 1, 1, 1]), v(&[0, 0, 3, 1])];
        for o in &originals {
            assert!(span.insert(o));
        }
        // 1*o0 - 2*o1 + 5*o2
        let mut target = zero_vec(4);
        axpy(&mut target, &rat(1), &originals[0]);
        axpy(&mut target, &rat(-2), &originals[1]);
        axpy(&mut target, &rat(5), &originals[2]);
        assert_eq!(span.coords(&target).unwrap(), v(&[1, -2, 5]));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let x = solve(&a, &v(&[5, 11])).unwrap();
        assert_eq!(x, v(&[1, 2]));
        let sing = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&sing, &v(&[1, 3])).is_none());
        let x = solve(&sing, &v(&[1, 2])).unwrap();
        assert_eq!(mat_vec(&sing, &x), v(&[1, 2]));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3]]);
        let basis = nullspace(&a);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(is_zero_vec(&mat_vec(&a, b)));
        }
    }

    #[test]
    fn det_values() {
        assert_eq!(det(&m(&[&[2, 0], &[0, 3]])).unwrap(), rat(6));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])).unwrap(), rat(0));
        let a = vec![vec![ratio(1, 2), rat(1)], vec![rat(1), rat(4)]];
        assert_eq!(det(&a).unwrap(), rat(1));
    }

    #[test]
    fn sparse_apply_matches_dense() {
        let dense = m(&[&[0, 1, 0], &[0, 0, 2], &[0, 0, 0]]);
        let mut op = SparseOp::zero(3);
        for (i, row) in dense.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    op.cols[j].push((i, c.clone()));
                }
            }
        }
        let x = v(&[1, 2, 3]);
        assert_eq!(op.apply(&x), mat_vec(&dense, &x));
    }
}
