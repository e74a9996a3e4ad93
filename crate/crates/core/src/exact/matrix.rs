use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds from equal-length integer rows. An empty slice gives a 0x0 matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    /// Submatrix on the given column indices (all rows).
    fn select_columns(&self, columns: &[usize]) -> IntMatrix {
        let mut entries = Vec::with_capacity(self.rows * columns.len());
        for r in 0..self.rows {
            for &c in columns {
                entries.push(self.get(r, c).clone());
            }
        }
        IntMatrix {
            rows: self.rows,
            cols: columns.len(),
            entries,
        }
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.row_vecs();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Index of the lattice spanned by `vectors` inside its saturation
/// (the integer points of its real span). Equals the gcd of the maximal
/// minors of the matrix whose rows are the vectors.
pub fn lattice_index(vectors: &[Vec<i64>]) -> Result<BigInt> {
    if vectors.is_empty() {
        return Ok(BigInt::one());
    }
    let m = IntMatrix::from_rows(vectors)?;
    let k = m.rows();
    let n = m.cols();
    if k > n {
        return Err(Error::LinearlyDependent);
    }
    let mut g = BigInt::zero();
    for cols in combinations(n, k) {
        let d = det(&m.select_columns(&cols))?;
        g = num_integer::gcd(g, d);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return Err(Error::LinearlyDependent);
    }
    Ok(g)
}

/// All increasing `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=n.saturating_sub(need) {
            if n - i < need {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `cols` columns.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = rows.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b` for square nonsingular `A`; `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Homogenized columns `(1, p)` as rows of the transposed system.
fn homogenized(points: &[&[i64]]) -> Vec<Vec<Rational>> {
    let dim = points.first().map_or(0, |p| p.len());
    let mut rows = vec![vec![Rational::one(); points.len()]];
    for d in 0..dim {
        rows.push(
            points
                .iter()
                .map(|p| Rational::from_integer(BigInt::from(p[d])))
                .collect(),
        );
    }
    rows
}

/// Dimension of the affine hull of the points (`-1` is reported as 0 for empty input).
pub fn affine_rank(points: &[&[i64]]) -> usize {
    if points.is_empty() {
        return 0;
    }
    rank(&homogenized(points)) - 1
}

/// The unique (up to scale) affine dependency `Σ c_i p_i = 0, Σ c_i = 0`,
/// when the dependency space is one-dimensional.
pub fn affine_dependency(points: &[&[i64]]) -> Option<Vec<Rational>> {
    let ns = nullspace(&homogenized(points), points.len());
    (ns.len() == 1).then(|| ns.into_iter().next().unwrap())
}

/// Barycentric coordinates of `x` with respect to affinely independent
/// `points`; `None` if `x` is off their affine hull.
pub fn barycentric(points: &[&[i64]], x: &[Rational]) -> Option<Vec<Rational>> {
    let k = points.len();
    let mut rows = homogenized(points);
    let mut rhs = vec![Rational::one()];
    rhs.extend(x.iter().cloned());
    for (row, b) in rows.iter_mut().zip(&rhs) {
        row.push(b.clone());
    }
    let pivots = rref(&mut rows);
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some((0..k).map(|i| rows[i][k].clone()).collect())
}
