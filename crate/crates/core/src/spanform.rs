//! Conventional spans, minimal span forms and their reduced variants, and
//! LPU / Bruhat decompositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{axpy, leading_index, trailing_index, Mat};

/// Support interval `[start, end]` of a nonzero vector, both ends inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConvSpan {
    pub start: usize,
    pub end: usize,
}

impl ConvSpan {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    /// Whether the boundary between positions `t-1` and `t` lies inside the span.
    pub fn straddles(&self, t: usize) -> bool {
        self.start < t && t <= self.end
    }
}

impl fmt::Display for ConvSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

pub fn conv_span<F: Scalar>(v: &[F]) -> Result<ConvSpan> {
    match (leading_index(v), trailing_index(v)) {
        (Some(start), Some(end)) => Ok(ConvSpan { start, end }),
        _ => Err(Error::ZeroVector),
    }
}

fn row_spans<F: Scalar>(m: &Mat<F>) -> Result<Vec<ConvSpan>> {
    (0..m.rows())
        .map(|i| conv_span(m.row(i)).map_err(|_| Error::ZeroRow(i)))
        .collect()
}

pub fn total_spanlength(spans: &[ConvSpan]) -> usize {
    spans.iter().map(ConvSpan::len).sum()
}

fn distinct(mut v: Vec<usize>) -> bool {
    let n = v.len();
    v.sort_unstable();
    v.dedup();
    v.len() == n
}

/// Whether no two rows start in the same position and no two end in the same position.
pub fn is_msf<F: Scalar>(m: &Mat<F>) -> Result<bool> {
    let spans = row_spans(m)?;
    Ok(distinct(spans.iter().map(|s| s.start).collect())
        && distinct(spans.iter().map(|s| s.end).collect()))
}

/// Which reduced form a [`MsfReport`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// Rows sorted by start; each trailing pivot is the first nonzero in its
    /// column and equals one.
    LeftOrderedRightReduced,
    /// Rows sorted by end; each leading pivot is the last nonzero in its
    /// column and equals one.
    RightOrderedLeftReduced,
    /// Any minimal span form, rows sorted by start.
    Unreduced,
}

/// A minimal span form together with its pivot minors.
///
/// With rows sorted by start, `matrix|leading_pivots = upper` and
/// `matrix|trailing_pivots = perm * lower`. With rows sorted by end,
/// `matrix|leading_pivots = perm * upper` and `matrix|trailing_pivots = lower`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct MsfReport<F> {
    pub matrix: Mat<F>,
    pub spans: Vec<ConvSpan>,
    pub leading_pivots: Vec<usize>,
    pub trailing_pivots: Vec<usize>,
    pub upper: Mat<F>,
    pub lower: Mat<F>,
    pub perm: Mat<F>,
    pub flavor: Flavor,
}

impl<F: Scalar> MsfReport<F> {
    pub fn spanlength(&self) -> usize {
        total_spanlength(&self.spans)
    }

    fn build(matrix: Mat<F>, flavor: Flavor) -> Self {
        let spans = row_spans(&matrix).expect("minimal span form has no zero rows");
        let mut i0: Vec<usize> = spans.iter().map(|s| s.start).collect();
        let mut i1: Vec<usize> = spans.iter().map(|s| s.end).collect();
        i0.sort_unstable();
        i1.sort_unstable();
        let by_end = flavor == Flavor::RightOrderedLeftReduced;
        let pi: Vec<usize> = spans
            .iter()
            .map(|s| {
                if by_end {
                    i0.binary_search(&s.start).unwrap()
                } else {
                    i1.binary_search(&s.end).unwrap()
                }
            })
            .collect();
        let perm = Mat::permutation(&pi);
        let lead = matrix.select_cols(&i0);
        let trail = matrix.select_cols(&i1);
        let (upper, lower) = if by_end {
            (&perm.transpose() * &lead, trail)
        } else {
            (lead, &perm.transpose() * &trail)
        };
        MsfReport { matrix, spans, leading_pivots: i0, trailing_pivots: i1, upper, lower, perm, flavor }
    }
}

/// Greedy span reduction: while two rows share a start (or an end), subtract a
/// multiple of the shorter row from the longer one. Rows come back sorted by start.
pub fn to_msf<F: Scalar>(m: &Mat<F>) -> Result<MsfReport<F>> {
    if !m.has_full_row_rank() {
        return Err(Error::RankDeficient);
    }
    Ok(MsfReport::build(msf_rows(m), Flavor::Unreduced))
}

fn msf_rows<F: Scalar>(m: &Mat<F>) -> Mat<F> {
    let mut rows = m.to_rows();
    'outer: loop {
        let spans: Vec<ConvSpan> = rows.iter().map(|r| conv_span(r).unwrap()).collect();
        for a in 0..rows.len() {
            for b in 0..rows.len() {
                if a == b {
                    continue;
                }
                let (sa, sb) = (spans[a], spans[b]);
                // b is the row to shorten: same start with an end no earlier,
                // or same end with a start no later.
                let pos = if sa.start == sb.start && (sb.end, b) > (sa.end, a) {
                    sa.start
                } else if sa.end == sb.end && sb.start < sa.start {
                    sa.end
                } else {
                    continue;
                };
                let c = rows[b][pos] * rows[a][pos].inv().unwrap();
                let src = rows[a].clone();
                axpy(&mut rows[b], -c, &src);
                continue 'outer;
            }
        }
        break;
    }
    rows.sort_by_key(|r| leading_index(r));
    Mat::from_rows_with_cols(rows, m.cols()).unwrap()
}

pub(crate) fn left_ordered_right_reduced<F: Scalar>(m: &Mat<F>) -> Mat<F> {
    let mut g = msf_rows(m);
    let ends: Vec<usize> = (0..g.rows()).map(|i| trailing_index(g.row(i)).unwrap()).collect();
    let mut order: Vec<usize> = (0..g.rows()).collect();
    order.sort_by_key(|&r| std::cmp::Reverse(ends[r]));
    for r in order {
        let c = ends[r];
        let pivot_inv = g[(r, c)].inv().unwrap();
        let src = g.row(r).to_vec();
        for above in 0..r {
            let f = g[(above, c)];
            if !f.is_zero() {
                axpy(g.row_mut(above), -(f * pivot_inv), &src);
            }
        }
    }
    for r in 0..g.rows() {
        let s = g[(r, ends[r])].inv().unwrap();
        for x in g.row_mut(r) {
            *x = *x * s;
        }
    }
    g
}

/// Mirror image of [`left_ordered_right_reduced`]: rows sorted by end.
pub(crate) fn right_ordered_left_reduced<F: Scalar>(m: &Mat<F>) -> Mat<F> {
    left_ordered_right_reduced(&m.reverse_cols()).reverse_cols().reverse_rows()
}

/// Unique reduced minimal span form of the row space of `m`.
pub fn reduce_msf<F: Scalar>(m: &Mat<F>, flavor: Flavor) -> Result<MsfReport<F>> {
    if !m.has_full_row_rank() {
        return Err(Error::RankDeficient);
    }
    let matrix = match flavor {
        Flavor::Unreduced => msf_rows(m),
        Flavor::LeftOrderedRightReduced => left_ordered_right_reduced(m),
        Flavor::RightOrderedLeftReduced => right_ordered_left_reduced(m),
    };
    Ok(MsfReport::build(matrix, flavor))
}

/// Factors `A = L P U` with `L` unit lower triangular and `U` upper triangular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct Lpu<F> {
    pub l: Mat<F>,
    pub p: Mat<F>,
    pub u: Mat<F>,
}

/// Row-by-row elimination: each row is reduced against earlier rows only
/// while its leftmost nonzero collides with theirs, so `L^-1` records just the
/// operations needed to give every row a distinct leading position.
pub fn lpu<F: Scalar>(a: &Mat<F>) -> Result<Lpu<F>> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let n = a.rows();
    let mut b = a.clone();
    let mut ops = Mat::identity(n);
    let mut pi: Vec<usize> = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            let j = leading_index(b.row(k)).ok_or(Error::Singular)?;
            let Some(i) = pi.iter().position(|&p| p == j) else {
                pi.push(j);
                break;
            };
            let m = b[(k, j)] * b[(i, j)].inv().unwrap();
            let (src, osrc) = (b.row(i).to_vec(), ops.row(i).to_vec());
            axpy(b.row_mut(k), -m, &src);
            axpy(ops.row_mut(k), -m, &osrc);
        }
    }
    let p = Mat::permutation(&pi);
    let u = &p.transpose() * &b;
    Ok(Lpu { l: ops.inverse()?, p, u })
}

/// Corner whose submatrix ranks a Bruhat permutation records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Corner {
    /// `L^-1 A U^-1`, the LPU permutation.
    Nw,
    /// `L^-1 A L^-1`.
    Ne,
    /// `U^-1 A U^-1`, the standard Bruhat permutation.
    Sw,
    /// `U^-1 A L^-1`.
    Se,
}

/// Permutation whose corner `r x s` blocks carry as many ones as the rank of
/// the matching corner block of `a`.
pub fn bruhat_corner<F: Scalar>(a: &Mat<F>, corner: Corner) -> Result<Mat<F>> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    Ok(match corner {
        Corner::Nw => lpu(a)?.p,
        Corner::Ne => lpu(&a.reverse_cols())?.p.reverse_cols(),
        Corner::Sw => lpu(&a.reverse_rows())?.p.reverse_rows(),
        Corner::Se => lpu(&a.reverse_rows().reverse_cols())?.p.reverse_rows().reverse_cols(),
    })
}
