use std::collections::BTreeSet;

use super::CharPair;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Mat;

/// Rows of `X` whose span does not cross the boundary between `a - 1` and
/// `a`. They must be `|I1|` independent rows forming a basis of the code.
pub fn basis_at_cut<F: Scalar>(pair: &CharPair<F>, a: usize) -> Result<Vec<usize>> {
    if a >= pair.n {
        return Err(Error::DimensionMismatch(format!("cut {a} outside 0..{}", pair.n)));
    }
    let rows: Vec<usize> = (0..pair.n).filter(|&i| !pair.x_spans[i].straddles(a)).collect();
    let sel = pair.x.select_rows(&rows);
    if rows.len() != pair.profile.i1.len() || !sel.has_full_row_rank() || !sel.same_row_space(&pair.g) {
        return Err(Error::NotCharacteristic(format!("rows avoiding cut {a} are not a basis")));
    }
    Ok(rows)
}

/// Family of coordinate sets defining the subspaces `C(I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalFamily {
    /// `{a, ..., b}` with `a < b`.
    Intervals,
    /// Intervals together with their complements.
    IntervalsAndComplements,
}

fn family_sets(n: usize, family: IntervalFamily) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let inside: Vec<bool> = (0..n).map(|k| a <= k && k <= b).collect();
            if family == IntervalFamily::IntervalsAndComplements {
                out.push(inside.iter().map(|x| !x).collect());
            }
            out.push(inside);
        }
    }
    out
}

/// Whether the rows of `m` separate the subspaces `C(I)` of `row(g)`:
/// `C(I) = C(I')` exactly when both contain the same rows of `m`.
pub fn separating_check<F: Scalar>(m: &Mat<F>, g: &Mat<F>, family: IntervalFamily) -> Result<bool> {
    if m.cols() != g.cols() {
        return Err(Error::DimensionMismatch("matrix and code lengths differ".into()));
    }
    let words = g.codewords()?;
    let supported = |v: &[F], set: &[bool]| v.iter().zip(set).all(|(x, &ok)| ok || x.is_zero());
    let entries: Vec<(BTreeSet<Vec<F>>, Vec<usize>)> = family_sets(g.cols(), family)
        .iter()
        .map(|set| {
            let sub = words.iter().filter(|w| supported(w, set)).cloned().collect();
            let hits = (0..m.rows()).filter(|&r| g.spans_vector(m.row(r)) && supported(m.row(r), set)).collect();
            (sub, hits)
        })
        .collect();
    Ok(entries
        .iter()
        .enumerate()
        .all(|(i, (s1, h1))| entries[i + 1..].iter().all(|(s2, h2)| (s1 == s2) == (h1 == h2))))
}
