use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{bcjr_trellis, Sign, Trellis};
use crate::charmat::{displacement, CharPair, CircSpan};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{coefficient_vectors, Mat, ENUMERATION_CAP};
use crate::report::Report;

/// Walks every closed path of the trellis graph and collects its symbols.
fn cycle_labels<F: Scalar>(t: &Trellis<F>) -> Result<Vec<Vec<F>>> {
    let g = t.graph()?;
    let adj: Vec<_> = (0..t.n).map(|s| g.adjacency(s)).collect();
    let mut out = Vec::new();
    for start in &g.vertices[0] {
        let mut stack = vec![(start, 0usize, Vec::new())];
        while let Some((v, s, word)) = stack.pop() {
            if s == t.n {
                if v == start {
                    out.push(word);
                    if out.len() as u64 > ENUMERATION_CAP {
                        return Err(Error::TooLarge(format!("more than {ENUMERATION_CAP} cycles")));
                    }
                }
                continue;
            }
            for e in adj[s].get(v).into_iter().flatten() {
                let mut w = word.clone();
                w.push(e.symbol);
                stack.push((&e.to, s + 1, w));
            }
        }
    }
    Ok(out)
}

/// Whether the cycles of the trellis are in bijection with the codewords of
/// `row(g)`, each codeword read along exactly one cycle.
pub fn represents_one_to_one<F: Scalar>(t: &Trellis<F>, g: &Mat<F>) -> Result<bool> {
    let cycles = cycle_labels(t)?;
    let distinct: BTreeSet<Vec<F>> = cycles.iter().cloned().collect();
    let code: BTreeSet<Vec<F>> = g.codewords()?.into_iter().collect();
    Ok(distinct.len() == cycles.len() && distinct == code)
}

/// Dimension of the label code spanned by the generators.
pub fn label_code_dim<F: Scalar>(t: &Trellis<F>) -> usize {
    let rows = t
        .generators
        .iter()
        .map(|p| p.vertices.iter().flatten().chain(&p.symbols).copied().collect())
        .collect();
    Mat::from_rows_with_cols(rows, (t.n + 1) * t.width + t.n).map_or(0, |m| m.rank())
}

/// Whether some linear vertex maps carry `a` onto `b` edge for edge.
///
/// Each generator of `a` must map to a label-code element of `b` with the
/// same symbols; every choice of preimage coefficients is tried, and the
/// induced maps on each vertex space must be well defined and bijective.
pub fn linearly_isomorphic<F: Scalar>(a: &Trellis<F>, b: &Trellis<F>) -> Result<bool> {
    if a.n != b.n {
        return Ok(false);
    }
    let (ca, cb) = (a.symbol_matrix(), b.symbol_matrix());
    if !ca.same_row_space(&cb) || label_code_dim(a) != label_code_dim(b) {
        return Ok(false);
    }
    let kernel = cb.left_null_space();
    let base: Vec<Vec<F>> = match (0..ca.rows()).map(|r| cb.solve_left(ca.row(r))).collect::<Option<_>>() {
        Some(v) => v,
        None => return Ok(false),
    };
    let free = kernel.rows() * ca.rows();
    let total = (F::ORDER as f64).powi(free as i32);
    if total > ENUMERATION_CAP as f64 {
        return Err(Error::TooLarge(format!("{total} coefficient choices")));
    }
    let la: Vec<Mat<F>> = (0..=a.n).map(|t| a.labels_at(t)).collect();
    let lb: Vec<Mat<F>> = (0..=b.n).map(|t| b.labels_at(t)).collect();
    for z in coefficient_vectors::<F>(free)? {
        let rows: Vec<Vec<F>> = base
            .iter()
            .enumerate()
            .map(|(r, u)| {
                let mut u = u.clone();
                for s in 0..kernel.rows() {
                    crate::matrix::axpy(&mut u, z[r * kernel.rows() + s], kernel.row(s));
                }
                u
            })
            .collect();
        let map = Mat::from_rows_with_cols(rows, cb.rows())?;
        let ok = la.iter().zip(&lb).all(|(na, nb)| {
            let image = &map * nb;
            let r = na.rank();
            image.rank() == r && na.augment(&image).is_ok_and(|m| m.rank() == r) && nb.rank() == r
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Trellises built from a row selection `I` of `X` and its complement `J` in `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct TrellisDuality<F> {
    pub rows: Vec<usize>,
    pub dual_rows: Vec<usize>,
    /// Rows `X[I]` labelled by `Y[J]`.
    pub x_trellis: Trellis<F>,
    /// Rows `Y[J]` labelled by `X[I]`; absent when `J` is empty.
    pub y_trellis: Option<Trellis<F>>,
    pub report: Report,
}

/// Builds the trellis of `X[I]` and its dual on `Y[J]` and checks that the
/// dual rows are independent, that both start from the displacement blocks
/// `E[J, I]^T` and `D[I, J]^T`, and that these are negatives of each other.
pub fn trellis_duality_check<F: Scalar>(pair: &CharPair<F>, rows: &[usize]) -> Result<TrellisDuality<F>> {
    let n = pair.n;
    let mut i_rows = rows.to_vec();
    i_rows.sort_unstable();
    i_rows.dedup();
    if i_rows.iter().any(|&r| r >= n) {
        return Err(Error::DimensionMismatch(format!("row index out of range 0..{n}")));
    }
    if i_rows.is_empty() || !pair.x.select_rows(&i_rows).has_full_row_rank() {
        return Err(Error::DependentSelection);
    }
    let j_rows: Vec<usize> = (0..n).filter(|r| !i_rows.contains(r)).collect();
    let disp = displacement(pair)?;
    let with_spans = |m: &Mat<F>, sel: &[usize], spans: &[CircSpan]| -> Vec<(Vec<F>, CircSpan)> {
        sel.iter().map(|&r| (m.row(r).to_vec(), spans[r])).collect()
    };
    let all: Vec<usize> = (0..n).collect();
    let x_trellis =
        bcjr_trellis(&with_spans(&pair.x, &i_rows, &pair.x_spans), &pair.y.select(&j_rows, &all), Sign::Minus)?;
    let e_ji = disp.e.select(&j_rows, &i_rows);
    let d_ij = disp.d.select(&i_rows, &j_rows);
    let mut report = Report::new();
    report.check("dual_rows_independent", pair.y.select_rows(&j_rows).has_full_row_rank());
    report.check("x_initial_labels", x_trellis.labels_at(0) == e_ji.transpose());
    report.check("displacement_blocks_negated", e_ji.transpose() == -&d_ij);
    let y_trellis = if j_rows.is_empty() {
        None
    } else {
        let t = bcjr_trellis(&with_spans(&pair.y, &j_rows, &pair.y_spans), &pair.x.select(&i_rows, &all), Sign::Plus)?;
        report.check("y_initial_labels", t.labels_at(0) == d_ij.transpose());
        report.check("state_dims_equal", t.state_dims() == x_trellis.state_dims());
        Some(t)
    };
    Ok(TrellisDuality { rows: i_rows, dual_rows: j_rows, x_trellis, y_trellis, report })
}

/// One independent choice of `k` rows of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisChoice {
    pub rows: Vec<usize>,
    pub spans: Vec<CircSpan>,
    /// Whether the complementary rows of `Y` are independent too.
    pub dual_independent: bool,
    /// Total span length of the chosen rows.
    pub spanlength: usize,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Every `k`-subset of rows of `X` that is a basis of the code.
pub fn enumerate_bases<F: Scalar>(pair: &CharPair<F>) -> Result<Vec<BasisChoice>> {
    let n = pair.n;
    if n > 20 {
        return Err(Error::TooLarge(format!("{n} rows")));
    }
    let k = pair.k();
    let mut out = Vec::new();
    for rows in subsets(n, k) {
        if !pair.x.select_rows(&rows).has_full_row_rank() {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|r| !rows.contains(r)).collect();
        let spans: Vec<CircSpan> = rows.iter().map(|&r| pair.x_spans[r]).collect();
        out.push(BasisChoice {
            dual_independent: pair.y.select_rows(&rest).has_full_row_rank(),
            spanlength: spans.iter().map(|s| s.len).sum(),
            spans,
            rows,
        });
    }
    Ok(out)
}

/// Groups basis choices by their state-complexity profile.
pub fn profiles<F: Scalar>(pair: &CharPair<F>, bases: &[BasisChoice]) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for b in bases {
        out.entry(super::complexity_profile(&b.spans, pair.n)).or_default().push(b.rows.clone());
    }
    out
}
