//! Circular spans, characteristic matrices and the duality between a
//! left-ordered characteristic matrix `X` and a right-ordered one `Y`.
//!
//! A characteristic pair is stored both folded (`x = x0 + x1`) and unwrapped
//! (`(x0|x1)`, `(y1|y0)`); spans are always read from the unwrapped rows.

mod band;
mod cuts;
mod displacement;
mod rooks;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use band::unwrap_band;
pub use cuts::{basis_at_cut, separating_check, IntervalFamily};
pub use displacement::{displacement, shift_conjugate, shift_displacement_check, shift_matrix, Displacement};
pub use rooks::{render_board, sigma_and_rooks, Board, Rook};
pub use verify::{
    circulant_left, circulant_right, cyclic_transpose_check, duality_report, duality_report_parts,
    right_spanlength, transpose_check, verify_characteristic, verify_characteristic_right, TransposeCheck,
};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{leading_index, trailing_index, Mat, PivotProfile};
use crate::report::Report;
use crate::spanform::{left_ordered_right_reduced, right_ordered_left_reduced};

/// Circular span `(start, end]` on `n` positions: the support runs from
/// `start` forward to `end`, both included, covering `len + 1` positions.
///
/// `len` ranges over `0..=n`; `len == n` only occurs for the unwrapped row of
/// a coordinate on which the code vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CircSpan {
    pub n: usize,
    pub start: usize,
    pub end: usize,
    pub len: usize,
}

impl CircSpan {
    pub fn new(n: usize, start: usize, end: usize) -> Self {
        CircSpan { n, start, end, len: (end + n - start) % n }
    }

    /// Span of an unwrapped row starting at `start < n` and ending at `uend < 2n`.
    pub fn from_unwrapped(n: usize, start: usize, uend: usize) -> Self {
        CircSpan { n, start, end: uend % n, len: uend - start }
    }

    /// Whether the span runs past position `n - 1` back to the front.
    pub fn wraps(&self) -> bool {
        self.start + self.len >= self.n
    }

    /// Whether position `k` is inside the support segment.
    pub fn contains(&self, k: usize) -> bool {
        self.len == self.n || (k + self.n - self.start) % self.n <= self.len
    }

    /// Whether the boundary between positions `t-1` and `t` (mod n) is inside the span.
    pub fn straddles(&self, t: usize) -> bool {
        let m = (t + self.n - self.start % self.n) % self.n;
        self.len == self.n || (m >= 1 && m <= self.len)
    }

    /// Whether the nonzero entries of `v` fit this span with nonzero endpoints.
    pub fn fits<F: Scalar>(&self, v: &[F]) -> bool {
        v.len() == self.n
            && !v[self.start].is_zero()
            && !v[self.end].is_zero()
            && (0..self.n).all(|k| v[k].is_zero() || self.contains(k))
    }
}

impl fmt::Display for CircSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}]", self.start, self.end)
    }
}

/// All minimal circular spans of `v`: one starting at each support position.
pub fn circ_spans<F: Scalar>(v: &[F]) -> Result<Vec<CircSpan>> {
    let n = v.len();
    let support: Vec<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
    if support.is_empty() {
        return Err(Error::ZeroVector);
    }
    let w = support.len();
    Ok((0..w).map(|a| CircSpan::new(n, support[a], support[(a + w - 1) % w])).collect())
}

/// Left-ordered characteristic matrix `X` and right-ordered `Y` for an
/// orthogonal pair of codes `row(g)`, `row(h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct CharPair<F> {
    pub p: u32,
    pub n: usize,
    /// Left-ordered right-reduced basis of the code.
    pub g: Mat<F>,
    /// Right-ordered left-reduced basis of the dual code.
    pub h: Mat<F>,
    pub x: Mat<F>,
    pub x0: Mat<F>,
    pub x1: Mat<F>,
    pub y: Mat<F>,
    pub y1: Mat<F>,
    pub y0: Mat<F>,
    pub x_spans: Vec<CircSpan>,
    pub y_spans: Vec<CircSpan>,
    pub profile: PivotProfile,
    pub sigma: Vec<usize>,
    pub reduced: bool,
}

fn zero_columns<F: Scalar>(m: &Mat<F>) -> Vec<usize> {
    (0..m.cols()).filter(|&j| m.col(j).iter().all(|x| x.is_zero())).collect()
}

/// Lower (`lower = true`) or upper triangular, with diagonal entries allowed
/// only at the listed coordinates.
fn triangular_except(m: &Mat<impl Scalar>, lower: bool, diag_ok: &[usize]) -> bool {
    let off = if lower { m.strict_upper() } else { m.strict_lower() };
    off.is_zero() && (0..m.rows()).all(|i| m[(i, i)].is_zero() || diag_ok.contains(&i))
}

impl<F: Scalar> CharPair<F> {
    /// Assembles a pair from its unwrapped halves and validates it.
    pub fn from_parts(x0: Mat<F>, x1: Mat<F>, y1: Mat<F>, y0: Mat<F>, g: Mat<F>, h: Mat<F>) -> Result<Self> {
        let n = x0.rows();
        let square = |m: &Mat<F>| m.rows() == n && m.cols() == n;
        if ![&x0, &x1, &y1, &y0].iter().all(|m| square(m)) || g.cols() != n || h.cols() != n {
            return Err(Error::DimensionMismatch("characteristic pair blocks must be n x n".into()));
        }
        let ux = x0.augment(&x1)?;
        let uy = y1.augment(&y0)?;
        let mut x_spans = Vec::with_capacity(n);
        let mut y_spans = Vec::with_capacity(n);
        for i in 0..n {
            match (leading_index(ux.row(i)), trailing_index(ux.row(i))) {
                (Some(s), Some(e)) if s == i => x_spans.push(CircSpan::from_unwrapped(n, i, e)),
                _ => return Err(Error::NotCharacteristic(format!("X row {i} does not start on the diagonal"))),
            }
            match (leading_index(uy.row(i)), trailing_index(uy.row(i))) {
                (Some(s), Some(e)) if e == n + i => {
                    y_spans.push(CircSpan { n, start: s % n, end: i, len: n + i - s })
                }
                _ => return Err(Error::NotCharacteristic(format!("Y row {i} does not end on the diagonal"))),
            }
        }
        let sigma = x_spans.iter().map(|s| s.end).collect();
        let pair = CharPair {
            p: F::ORDER,
            n,
            x: &x0 + &x1,
            y: &y1 + &y0,
            profile: PivotProfile::of_code(&g),
            g,
            h,
            x0,
            x1,
            y1,
            y0,
            x_spans,
            y_spans,
            sigma,
            reduced: false,
        };
        let report = pair.structure_report();
        if !report.all_pass() {
            return Err(Error::NotCharacteristic(report.failures().join(", ")));
        }
        Ok(pair)
    }

    /// Structural invariants of a characteristic pair.
    pub fn structure_report(&self) -> Report {
        let n = self.n;
        let mut r = Report::new();
        let zg = zero_columns(&self.g);
        let zh = zero_columns(&self.h);
        r.check("x0_upper_unit_diagonal", self.x0.is_upper_triangular() && self.x0.diagonal_nonzero());
        r.check("x1_strictly_lower", triangular_except(&self.x1, true, &zg));
        r.check("y0_lower_unit_diagonal", self.y0.is_lower_triangular() && self.y0.diagonal_nonzero());
        r.check("y1_strictly_upper", triangular_except(&self.y1, false, &zh));
        let hh = self.h.augment(&self.h).unwrap();
        let gg = self.g.augment(&self.g).unwrap();
        let ux = self.x0.augment(&self.x1).unwrap();
        let uy = self.y1.augment(&self.y0).unwrap();
        r.check("x_unwrapped_orthogonal_to_hh", (&ux * &hh.transpose()).is_zero());
        r.check("y_unwrapped_orthogonal_to_gg", (&uy * &gg.transpose()).is_zero());
        r.check("x_spans_code", self.x.same_row_space(&self.g));
        r.check("y_spans_dual", self.y.same_row_space(&self.h));
        let distinct = |v: Vec<usize>| {
            let mut s = v.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == v.len()
        };
        r.check("x_ends_distinct", distinct(self.x_spans.iter().map(|s| s.start + s.len).collect()));
        r.check("y_starts_distinct", distinct(self.y_spans.iter().map(|s| n + s.end - s.len).collect()));
        let xl: usize = self.x_spans.iter().map(|s| s.len).sum();
        let yl: usize = self.y_spans.iter().map(|s| s.len).sum();
        r.check("x_spanlength_j1_n", xl == self.profile.j1.len() * n);
        r.check("y_spanlength_i1_n", yl == self.profile.i1.len() * n);
        r.check("sigma_permutation", distinct(self.sigma.clone()));
        r.check("sigma_matches_y_spans", (0..n).all(|j| self.y_spans[j].start == self.sigma[j]));
        r
    }

    /// `(x0 | x1)`, n x 2n.
    pub fn unwrapped_x(&self) -> Mat<F> {
        self.x0.augment(&self.x1).unwrap()
    }

    /// `(y1 | y0)`, n x 2n.
    pub fn unwrapped_y(&self) -> Mat<F> {
        self.y1.augment(&self.y0).unwrap()
    }

    pub fn x_spanlength(&self) -> usize {
        self.x_spans.iter().map(|s| s.len).sum()
    }

    pub fn y_spanlength(&self) -> usize {
        self.y_spans.iter().map(|s| s.len).sum()
    }

    /// Code dimension.
    pub fn k(&self) -> usize {
        self.g.rows()
    }

    fn mark_reduced(mut self) -> Self {
        self.reduced = char_pair_reduced(&self.g).map(|r| r.x == self.x && r.y == self.y).unwrap_or(false);
        self
    }
}

fn reduced_bases<F: Scalar>(g: &Mat<F>) -> Result<(Mat<F>, Mat<F>)> {
    if g.rows() == 0 {
        return Err(Error::EmptyCode);
    }
    if !g.has_full_row_rank() {
        return Err(Error::RankDeficient);
    }
    let g01 = left_ordered_right_reduced(g);
    let h = g.null_space();
    let h10 = if h.rows() == 0 { h } else { right_ordered_left_reduced(&h) };
    Ok((g01, h10))
}

/// Unwrapped halves `(x0, x1)` of the reduced left-ordered characteristic
/// matrix of `row(g)`, from the reduced form of `[(-I | I); (0 | g)]`.
fn reduced_x_halves<F: Scalar>(g: &Mat<F>) -> (Mat<F>, Mat<F>) {
    let n = g.cols();
    let i = Mat::<F>::identity(n);
    let top = (-&i).augment(&i).unwrap();
    let bottom = Mat::zeros(g.rows(), n).augment(g).unwrap();
    let red = left_ordered_right_reduced(&top.stack(&bottom).unwrap());
    let mut ux = Mat::zeros(n, 2 * n);
    for r in 0..red.rows() {
        let s = leading_index(red.row(r)).unwrap();
        if s < n {
            ux.row_mut(s).copy_from_slice(red.row(r));
        }
    }
    (ux.block(0, 0, n, n), ux.block(0, n, n, n))
}

/// Unwrapped halves `(y1, y0)` of the reduced right-ordered characteristic
/// matrix of `row(h)`, from the reduced form of `[(h | 0); (I | -I)]`.
fn reduced_y_halves<F: Scalar>(h: &Mat<F>, n: usize) -> (Mat<F>, Mat<F>) {
    let i = Mat::<F>::identity(n);
    let top = h.augment(&Mat::zeros(h.rows(), n)).unwrap();
    let bottom = i.augment(&-&i).unwrap();
    let red = right_ordered_left_reduced(&top.stack(&bottom).unwrap());
    let mut uy = Mat::zeros(n, 2 * n);
    for r in 0..red.rows() {
        let e = trailing_index(red.row(r)).unwrap();
        if e >= n {
            uy.row_mut(e - n).copy_from_slice(red.row(r));
        }
    }
    (uy.block(0, 0, n, n), uy.block(0, n, n, n))
}

/// Reduced left-ordered characteristic matrix `X(C)` of the code `row(g)`.
pub fn x_reduced<F: Scalar>(g: &Mat<F>) -> Result<Mat<F>> {
    let (g01, _) = reduced_bases(g)?;
    let (x0, x1) = reduced_x_halves(&g01);
    Ok(&x0 + &x1)
}

/// Reduced right-ordered characteristic matrix `Y(C)` of the code `row(h)`.
pub fn y_reduced<F: Scalar>(h: &Mat<F>) -> Result<Mat<F>> {
    let (h01, _) = reduced_bases(h)?;
    let (y1, y0) = reduced_y_halves(&h01, h.cols());
    Ok(&y1 + &y0)
}

/// The reduced characteristic pair of `row(g)` and its dual.
pub fn char_pair_reduced<F: Scalar>(g: &Mat<F>) -> Result<CharPair<F>> {
    let (g01, h10) = reduced_bases(g)?;
    let (x0, x1) = reduced_x_halves(&g01);
    let (y1, y0) = reduced_y_halves(&h10, g.cols());
    let mut pair = CharPair::from_parts(x0, x1, y1, y0, g01, h10)?;
    pair.reduced = true;
    Ok(pair)
}

/// Partial inverses used by the direct construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectParts<F> {
    /// Support `J0`, `H'0 H^T = -I`.
    pub h0p: Mat<F>,
    /// Support `J1`, `H'1 H^T = I`.
    pub h1p: Mat<F>,
    /// Support `I0`, `G'0 G^T = -I`.
    pub g0p: Mat<F>,
    /// Support `I1`, `G'1 G^T = I`.
    pub g1p: Mat<F>,
}

/// Rows supported on `cols` with `result * m^T = c * I`.
fn partial_inverse<F: Scalar>(m: &Mat<F>, cols: &[usize], c: F) -> Result<Mat<F>> {
    let minor = m.select_cols(cols).transpose().inverse()?.scale(c);
    let mut out = Mat::zeros(m.rows(), m.cols());
    for r in 0..m.rows() {
        for (k, &col) in cols.iter().enumerate() {
            out[(r, col)] = minor[(r, k)];
        }
    }
    Ok(out)
}

/// Solves for `H'0, H'1, G'0, G'1` given reduced bases `g` and `h`.
pub fn direct_parts<F: Scalar>(g: &Mat<F>, h: &Mat<F>) -> Result<DirectParts<F>> {
    let prof = PivotProfile::of_code(g);
    let one = F::one();
    Ok(DirectParts {
        h0p: partial_inverse(h, &prof.j0, -one)?,
        h1p: partial_inverse(h, &prof.j1, one)?,
        g0p: partial_inverse(g, &prof.i0, -one)?,
        g1p: partial_inverse(g, &prof.i1, one)?,
    })
}

/// Characteristic pair built from `g`, `h` and the partial inverses
/// `H'0, H'1, G'0, G'1`, without reducing a stacked matrix.
pub fn char_pair_direct<F: Scalar>(g: &Mat<F>) -> Result<CharPair<F>> {
    let (g01, h10) = reduced_bases(g)?;
    let n = g.cols();
    let parts = direct_parts(&g01, &h10)?;
    let mut ux = Mat::zeros(n, 2 * n);
    let mut uy = Mat::zeros(n, 2 * n);
    let mut placed_x = vec![false; n];
    let mut placed_y = vec![false; n];
    let place = |m: &mut Mat<F>, placed: &mut Vec<bool>, at: usize, left: &[F], right: &[F]| -> Result<()> {
        if std::mem::replace(&mut placed[at], true) {
            return Err(Error::NotCharacteristic(format!("two rows claim position {at}")));
        }
        m.row_mut(at)[..n].copy_from_slice(left);
        m.row_mut(at)[n..].copy_from_slice(right);
        Ok(())
    };
    let zero = vec![F::zero(); n];
    for r in 0..g01.rows() {
        let s = leading_index(g01.row(r)).unwrap();
        place(&mut ux, &mut placed_x, s, g01.row(r), &zero)?;
        let e = trailing_index(parts.g0p.row(r)).ok_or(Error::Singular)?;
        place(&mut uy, &mut placed_y, e, parts.g1p.row(r), parts.g0p.row(r))?;
    }
    for r in 0..h10.rows() {
        let s = leading_index(parts.h0p.row(r)).ok_or(Error::Singular)?;
        place(&mut ux, &mut placed_x, s, parts.h0p.row(r), parts.h1p.row(r))?;
        let e = trailing_index(h10.row(r)).unwrap();
        place(&mut uy, &mut placed_y, e, &zero, h10.row(r))?;
    }
    let pair = CharPair::from_parts(
        ux.block(0, 0, n, n),
        ux.block(0, n, n, n),
        uy.block(0, 0, n, n),
        uy.block(0, n, n, n),
        g01,
        h10,
    )?;
    Ok(pair.mark_reduced())
}

/// Dual characteristic matrix from unwrapped halves of `X`:
/// `Y0 = -(X0^-1)^T` and `Y1^T = X0^-1 (I + X1 X0^-1)`.
pub fn dual_char_unwrapped<F: Scalar>(x0: &Mat<F>, x1: &Mat<F>) -> Result<CharPair<F>> {
    if !x0.is_square() || x0.rows() != x1.rows() || x0.cols() != x1.cols() {
        return Err(Error::DimensionMismatch("X0 and X1 must be square of equal size".into()));
    }
    let n = x0.rows();
    let x0_inv = x0
        .inverse()
        .map_err(|_| Error::NotCharacteristic("X0 is singular".into()))?;
    let y0 = -&x0_inv.transpose();
    let y1 = (&x0_inv * &(&Mat::identity(n) + &(x1 * &x0_inv))).transpose();
    if !y1.strict_lower().is_zero() {
        return Err(Error::NotCharacteristic("solved Y1 is not upper triangular".into()));
    }
    let x = x0 + x1;
    let basis = x.rref_left().select_rows(&(0..x.rank()).collect::<Vec<_>>());
    let (g01, h10) = reduced_bases(&basis)?;
    let pair = CharPair::from_parts(x0.clone(), x1.clone(), y1, y0, g01, h10)?;
    Ok(pair.mark_reduced())
}

/// Dual of a folded left-ordered characteristic matrix, split as
/// `X0 = upper(X)`, `X1 = strict_lower(X)`.
pub fn dual_char<F: Scalar>(x: &Mat<F>) -> Result<CharPair<F>> {
    if !x.is_square() {
        return Err(Error::NotSquare);
    }
    dual_char_unwrapped(&x.upper(), &x.strict_lower())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type M2 = Mat<Fp<2>>;
    type M3 = Mat<Fp<3>>;

    pub(crate) fn gf3_g() -> M3 {
        M3::from_ints(&[[2, 2, 1, 0], [1, 0, 1, 2]])
    }

    fn gf3_x() -> M3 {
        M3::from_ints(&[[2, 2, 1, 0], [0, 1, 1, 1], [1, 0, 1, 2], [2, 1, 0, 2]])
    }

    fn gf3_y() -> M3 {
        M3::from_ints(&[[1, 0, 1, 2], [1, 2, 0, 1], [1, 1, 2, 0], [0, 1, 1, 1]])
    }

    fn binary_g() -> M2 {
        M2::from_ints(&[[1, 1, 1, 0, 0], [0, 1, 1, 0, 1], [0, 0, 1, 1, 0]])
    }

    #[test]
    fn circ_span_examples() {
        let v: Vec<Fp<3>> = [2, 2, 1, 0].map(Fp::new).to_vec();
        assert!(circ_spans(&v).unwrap().contains(&CircSpan::new(4, 0, 2)));
        let v: Vec<Fp<3>> = [1, 0, 1, 2].map(Fp::new).to_vec();
        assert!(circ_spans(&v).unwrap().contains(&CircSpan::new(4, 2, 0)));
        let v: Vec<Fp<2>> = [1, 1, 1].map(Fp::new).to_vec();
        assert_eq!(
            circ_spans(&v).unwrap(),
            vec![CircSpan::new(3, 0, 2), CircSpan::new(3, 1, 0), CircSpan::new(3, 2, 1)]
        );
        assert_eq!(circ_spans(&[Fp::<2>::new(0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn circ_span_geometry() {
        let s = CircSpan::new(4, 2, 0);
        assert_eq!(s.len, 2);
        assert!(s.wraps());
        assert!(s.contains(3) && s.contains(0) && !s.contains(1));
        assert!(s.straddles(3) && s.straddles(0) && !s.straddles(2) && !s.straddles(1));
        let c = CircSpan::new(4, 0, 2);
        assert!(!c.wraps() && c.straddles(1) && c.straddles(2) && !c.straddles(0));
    }

    #[test]
    fn gf3_reduced_pair() {
        let pair = char_pair_reduced(&gf3_g()).unwrap();
        assert_eq!(pair.x, gf3_x());
        assert_eq!(pair.y, gf3_y());
        assert_eq!(pair.sigma, vec![2, 3, 0, 1]);
        assert_eq!(pair.x_spanlength(), 8);
    }

    #[test]
    fn gf3_direct_parts() {
        let (g01, h10) = reduced_bases(&gf3_g()).unwrap();
        assert_eq!(h10, M3::from_ints(&[[1, 1, 2, 0], [0, 1, 1, 1]]));
        let p = direct_parts(&g01, &h10).unwrap();
        assert_eq!(p.h0p, M3::from_ints(&[[0, 0, 1, 2], [0, 0, 0, 2]]));
        assert_eq!(p.h1p, M3::from_ints(&[[1, 0, 0, 0], [2, 1, 0, 0]]));
        assert_eq!(p.g1p, M3::from_ints(&[[0, 0, 1, 2], [0, 0, 0, 1]]));
        assert_eq!(p.g0p, M3::from_ints(&[[1, 0, 0, 0], [1, 2, 0, 0]]));
        let direct = char_pair_direct(&gf3_g()).unwrap();
        assert_eq!(direct.x, gf3_x());
        assert_eq!(direct.y, gf3_y());
        assert!(direct.reduced);
    }

    #[test]
    fn appendix_binary_pair() {
        let pair = char_pair_reduced(&binary_g()).unwrap();
        let x = M2::from_ints(&[[1, 1, 1, 0, 0], [0, 1, 1, 0, 1], [0, 0, 1, 1, 0], [0, 1, 0, 1, 1], [1, 0, 0, 0, 1]]);
        let y = M2::from_ints(&[[1, 0, 1, 1, 1], [1, 1, 0, 0, 1], [0, 1, 1, 1, 0], [0, 1, 1, 1, 0], [1, 0, 1, 1, 1]]);
        assert_eq!(pair.x, x);
        assert_eq!(pair.y, y);
        let xs: Vec<String> = pair.x_spans.iter().map(ToString::to_string).collect();
        assert_eq!(xs, ["(0,2]", "(1,4]", "(2,3]", "(3,1]", "(4,0]"]);
        let ys: Vec<String> = pair.y_spans.iter().map(ToString::to_string).collect();
        assert_eq!(ys, ["(2,0]", "(4,1]", "(3,2]", "(1,3]", "(0,4]"]);
    }

    #[test]
    fn identity_code() {
        let pair = char_pair_reduced(&M3::identity(3)).unwrap();
        assert_eq!(pair.x, M3::identity(3));
        assert!(pair.x1.is_zero());
        assert_eq!(pair.x_spanlength(), 0);
        assert_eq!(pair.h.rows(), 0);
        assert_eq!(pair.y1, M3::identity(3));
        assert_eq!(pair.y0, -&M3::identity(3));
        assert!(pair.y.is_zero());
    }

    #[test]
    fn dual_char_recovers_y() {
        let pair = dual_char(&gf3_x()).unwrap();
        assert_eq!(pair.y, gf3_y());
        assert!(pair.reduced);
        let d = dual_char(&M3::identity(2)).unwrap();
        assert_eq!(d.y0, -&M3::identity(2));
        assert_eq!(d.y1, M3::identity(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(char_pair_reduced(&M3::zeros(0, 3)), Err(Error::EmptyCode));
        assert_eq!(char_pair_reduced(&M3::from_ints(&[[1, 1], [2, 2]])), Err(Error::RankDeficient));
        assert!(matches!(dual_char(&M3::from_ints(&[[0, 1], [1, 1]])), Err(Error::NotCharacteristic(_))));
    }
}
