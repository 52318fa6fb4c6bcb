//! Dense matrices over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;

/// Dense row-major matrix. Zero-row matrices are allowed and keep their column count.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatRepr<F>", into = "MatRepr<F>", bound = "F: Scalar")]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

#[derive(Serialize, Deserialize)]
struct MatRepr<F> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<F>>,
}

impl<F: Scalar> From<Mat<F>> for MatRepr<F> {
    fn from(m: Mat<F>) -> Self {
        MatRepr { rows: m.rows, cols: m.cols, entries: m.to_rows() }
    }
}

impl<F: Scalar> TryFrom<MatRepr<F>> for Mat<F> {
    type Error = Error;
    fn try_from(r: MatRepr<F>) -> Result<Self> {
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(Error::DimensionMismatch("entries disagree with rows/cols".into()));
        }
        Ok(Mat { rows: r.rows, cols: r.cols, data: r.entries.concat() })
    }
}

/// Index of the first nonzero entry.
pub fn leading_index<F: Scalar>(v: &[F]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Index of the last nonzero entry.
pub fn trailing_index<F: Scalar>(v: &[F]) -> Option<usize> {
    v.iter().rposition(|x| !x.is_zero())
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (&x, &y)| acc + x * y)
}

/// `dst += c * src`, entrywise.
pub fn axpy<F: Scalar>(dst: &mut [F], c: F, src: &[F]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = *d + c * s;
    }
}

/// Largest number of vectors any brute-force enumeration will visit.
pub const ENUMERATION_CAP: u64 = 1 << 16;

/// All `q^k` coefficient vectors of length `k`, in lexicographic order.
pub fn coefficient_vectors<F: Scalar>(k: usize) -> Result<Vec<Vec<F>>> {
    let total = (F::ORDER as u64).checked_pow(k as u32).filter(|&t| t <= ENUMERATION_CAP);
    let Some(total) = total else {
        return Err(Error::TooLarge(format!("{}^{k} vectors", F::ORDER)));
    };
    let q = F::ORDER as u64;
    Ok((0..total)
        .map(|mut idx| {
            let mut v = vec![F::zero(); k];
            for slot in v.iter_mut().rev() {
                *slot = F::from_index((idx % q) as u32);
                idx /= q;
            }
            v
        })
        .collect())
}

impl<F: Scalar> Mat<F> {
    /// Every combination `u * self`, one per coefficient vector `u`.
    pub fn codewords(&self) -> Result<Vec<Vec<F>>> {
        Ok(coefficient_vectors::<F>(self.rows)?.iter().map(|u| self.combine(u)).collect())
    }

    /// `u * self` for a coefficient row `u`.
    pub fn combine(&self, u: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.cols];
        for (i, &c) in u.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, self.row(i));
            }
        }
        out
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from rows, which must share a length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Builds a matrix of `cols` columns from rows; allows zero rows.
    pub fn from_rows_with_cols(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("row length differs from column count".into()));
        }
        Ok(Mat { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Builds a matrix from integer literals, reducing them into the field.
    ///
    /// # Panics
    /// If the rows are ragged.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<F>> =
            rows.iter().map(|r| r.as_ref().iter().map(|&v| F::from_i64(v)).collect()).collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    pub fn diag(d: &[F]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// Permutation matrix with a one at `(i, perm[i])`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len(), perm.len());
        for (i, &j) in perm.iter().enumerate() {
            m[(i, j)] = F::one();
        }
        m
    }

    /// Outer product `x y^T`.
    pub fn outer(x: &[F], y: &[F]) -> Self {
        Self::from_fn(x.len(), y.len(), |i, j| x[i] * y[j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, c: F) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| c * x).collect() }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let src = rhs.row(k);
                axpy(out.row_mut(i), a, src);
            }
        }
        Ok(out)
    }

    fn checked_zip(&self, rhs: &Self, f: impl Fn(F, F) -> F) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_zip(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_zip(rhs, |a, b| a - b)
    }

    /// `(self | rhs)`.
    pub fn augment(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("augment needs equal row counts".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                rhs[(i, j - self.cols)]
            }
        }))
    }

    /// `self` on top of `below`.
    pub fn stack(&self, below: &Self) -> Result<Self> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch("stack needs equal column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Mat { rows: self.rows + below.rows, cols: self.cols, data })
    }

    /// Submatrix on the given row and column index lists, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &all)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.rows).collect();
        self.select(&all, cols)
    }

    /// Contiguous block `[r0, r0+h) x [c0, c0+w)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        Self::from_fn(h, w, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn reverse_rows(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(self.rows - 1 - i, j)])
    }

    pub fn reverse_cols(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, self.cols - 1 - j)])
    }

    /// Upper triangular part including the diagonal.
    pub fn upper(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| if j >= i { self[(i, j)] } else { F::zero() })
    }

    /// Lower triangular part including the diagonal.
    pub fn lower(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| if j <= i { self[(i, j)] } else { F::zero() })
    }

    pub fn strict_upper(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| if j > i { self[(i, j)] } else { F::zero() })
    }

    pub fn strict_lower(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| if j < i { self[(i, j)] } else { F::zero() })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.strict_lower().is_zero()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.strict_upper().is_zero()
    }

    pub fn diagonal_nonzero(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| !self[(i, i)].is_zero())
    }

    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && self.data.iter().all(|x| x.is_zero() || *x == F::one())
            && (0..self.rows).all(|i| self.row(i).iter().filter(|x| !x.is_zero()).count() == 1)
            && (0..self.cols).all(|j| self.col(j).iter().filter(|x| !x.is_zero()).count() == 1)
    }

    /// Gauss-Jordan elimination in place with pivots chosen from the left.
    /// Returns pivot columns; zero rows end up at the bottom.
    fn reduce_left(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().unwrap();
            for x in self.row_mut(r) {
                *x = *x * inv;
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let f = self[(i, c)];
                    if !f.is_zero() {
                        axpy(self.row_mut(i), -f, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Left reduced row echelon form: identity on the leading pivot columns,
    /// zero rows last.
    pub fn rref_left(&self) -> Self {
        let mut m = self.clone();
        m.reduce_left();
        m
    }

    /// Right reduced row echelon form: identity on the trailing pivot columns
    /// (rows ordered by pivot column), zero rows first.
    pub fn rref_right(&self) -> Self {
        self.reverse_cols().rref_left().reverse_cols().reverse_rows()
    }

    /// Leading pivot columns, ascending.
    pub fn leading_pivots(&self) -> Vec<usize> {
        self.clone().reduce_left()
    }

    /// Trailing pivot columns, ascending.
    pub fn trailing_pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> =
            self.reverse_cols().reduce_left_owned().iter().map(|&c| self.cols - 1 - c).collect();
        p.sort_unstable();
        p
    }

    fn reduce_left_owned(mut self) -> Vec<usize> {
        self.reduce_left()
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_left().len()
    }

    pub fn has_full_row_rank(&self) -> bool {
        self.rank() == self.rows
    }

    /// Basis of `{h : self * h^T = 0}`, one row per non-pivot column, with
    /// identity on those columns.
    pub fn null_space(&self) -> Self {
        let mut r = self.clone();
        let pivots = r.reduce_left();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out[(k, f)] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(k, p)] = -r[(i, f)];
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = self.augment(&Self::identity(n))?;
        let pivots = aug.reduce_left();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(aug.block(0, n, n, n))
    }

    /// Some `u` with `u * self = v`, taking free coordinates as zero.
    pub fn solve_left(&self, v: &[F]) -> Option<Vec<F>> {
        if v.len() != self.cols {
            return None;
        }
        let col = Self::from_fn(self.cols, 1, |i, _| v[i]);
        let aug = self.transpose().augment(&col).ok()?;
        let red = aug.rref_left();
        let mut u = vec![F::zero(); self.rows];
        for r in 0..red.rows {
            match leading_index(red.row(r)) {
                Some(p) if p == self.rows => return None,
                Some(p) => u[p] = red[(r, self.rows)],
                None => break,
            }
        }
        Some(u)
    }

    /// Basis of `{u : u * self = 0}`.
    pub fn left_null_space(&self) -> Self {
        self.transpose().null_space()
    }

    /// Whether `v` lies in the row space.
    pub fn spans_vector(&self, v: &[F]) -> bool {
        let mut m = self.clone();
        m.data.extend_from_slice(v);
        m.rows += 1;
        m.rank() == self.rank()
    }

    pub fn same_row_space(&self, other: &Self) -> bool {
        self.cols == other.cols && {
            let r = self.rank();
            r == other.rank() && self.stack(other).map(|s| s.rank() == r).unwrap_or(false)
        }
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on a dimension mismatch; see [`Mat::checked_mul`].
impl<F: Scalar> Mul for &Mat<F> {
    type Output = Mat<F>;
    fn mul(self, rhs: &Mat<F>) -> Mat<F> {
        self.checked_mul(rhs).unwrap()
    }
}

impl<F: Scalar> Add for &Mat<F> {
    type Output = Mat<F>;
    fn add(self, rhs: &Mat<F>) -> Mat<F> {
        self.checked_add(rhs).unwrap()
    }
}

impl<F: Scalar> Sub for &Mat<F> {
    type Output = Mat<F>;
    fn sub(self, rhs: &Mat<F>) -> Mat<F> {
        self.checked_sub(rhs).unwrap()
    }
}

impl<F: Scalar> Neg for &Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        self.scale(-F::one())
    }
}

impl<F: Scalar> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let line: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Leading and trailing pivot columns of a code and of its dual.
///
/// `j0` is the complement of `i0` (the dual's trailing pivots) and `j1` the
/// complement of `i1` (the dual's leading pivots).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotProfile {
    pub n: usize,
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
    pub j0: Vec<usize>,
    pub j1: Vec<usize>,
}

fn complement(set: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|c| !set.contains(c)).collect()
}

impl PivotProfile {
    /// Profile of the row space of `g` alone.
    pub fn of_code<F: Scalar>(g: &Mat<F>) -> Self {
        let n = g.cols();
        let i0 = g.leading_pivots();
        let i1 = g.trailing_pivots();
        PivotProfile { n, j0: complement(&i0, n), j1: complement(&i1, n), i0, i1 }
    }

    pub fn k(&self) -> usize {
        self.i0.len()
    }
}

/// Pivot profile of an orthogonal pair `(g, h)` of complementary rank.
pub fn pivot_profile<F: Scalar>(g: &Mat<F>, h: &Mat<F>) -> Result<PivotProfile> {
    if g.cols() != h.cols() {
        return Err(Error::NotOrthogonalPair);
    }
    let n = g.cols();
    if g.rank() + h.rank() != n || !(g * &h.transpose()).is_zero() {
        return Err(Error::NotOrthogonalPair);
    }
    let prof = PivotProfile::of_code(g);
    if h.leading_pivots() != prof.j1 || h.trailing_pivots() != prof.j0 {
        return Err(Error::NotOrthogonalPair);
    }
    Ok(prof)
}
