use serde::{Deserialize, Serialize};

use super::{bcjr_trellis, render_path, LabelPath, Sign, Trellis};
use crate::charmat::{displacement, CharPair};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Mat;
use crate::report::Report;

/// Which matrix supplies the generators and which the vertex labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Rows of `X` labelled by partial syndromes against `Y` (sign minus).
    YLabelsX,
    /// Rows of `Y` labelled by partial syndromes against `X` (sign plus).
    XLabelsY,
}

/// Label code table of a characteristic pair, optionally restricted to a
/// row selection. With a selection, unselected rows are masked and only the
/// label coordinates in the complement are shown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct LabelCode<F> {
    pub direction: Direction,
    pub n: usize,
    pub selected: Vec<usize>,
    pub coords: Vec<usize>,
    /// Full trellis on all `n` rows.
    pub trellis: Trellis<F>,
    pub report: Report,
}

impl<F: Scalar> LabelCode<F> {
    /// Row `r` as `v_0 | c_0 | ... | v_n`, or `None` if masked.
    pub fn row(&self, r: usize) -> Option<String> {
        self.selected
            .contains(&r)
            .then(|| render_path(&self.trellis.generators[r], |k| self.coords.contains(&k)))
    }

    /// One line per row; masked rows print as dots.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 0..self.n {
            let line = self.row(r).unwrap_or_else(|| {
                let blank = LabelPath::<F>::zero(self.n, self.n);
                render_path(&blank, |_| false).replace(|c: char| c.is_ascii_digit(), ".")
            });
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// Label code of `pair` in the given direction. `selection` picks generator
/// rows; `None` keeps every row and every label coordinate. A generator whose
/// span covers the whole cycle (a coordinate where the code or its dual
/// vanishes) is rejected with `BadSpan`.
pub fn label_code<F: Scalar>(pair: &CharPair<F>, direction: Direction, selection: Option<&[usize]>) -> Result<LabelCode<F>> {
    let n = pair.n;
    let disp = displacement(pair)?;
    let (gens, labels, sign, spans, initial) = match direction {
        Direction::YLabelsX => (&pair.x, &pair.y, Sign::Minus, &pair.x_spans, disp.e.transpose()),
        Direction::XLabelsY => (&pair.y, &pair.x, Sign::Plus, &pair.y_spans, disp.d.transpose()),
    };
    if let Some(r) = (0..n).find(|&r| spans[r].len >= n) {
        return Err(Error::BadSpan(r));
    }
    let (selected, coords) = match selection {
        None => ((0..n).collect::<Vec<_>>(), (0..n).collect::<Vec<_>>()),
        Some(sel) => {
            if sel.iter().any(|&r| r >= n) {
                return Err(Error::DimensionMismatch(format!("row index out of range 0..{n}")));
            }
            let mut s = sel.to_vec();
            s.sort_unstable();
            s.dedup();
            let rest = (0..n).filter(|r| !s.contains(r)).collect();
            (s, rest)
        }
    };
    let rows: Vec<_> = (0..n).map(|r| (gens.row(r).to_vec(), spans[r])).collect();
    let trellis = bcjr_trellis(&rows, labels, sign)?;
    let mut report = Report::new();
    report.check("closed", trellis.generators_closed());
    report.check("n0_is_displacement", trellis.labels_at(0) == initial);
    let steps: Vec<Mat<F>> = (0..=n).map(|t| trellis.labels_at(t)).collect();
    report.check(
        "nt_systematic",
        steps.iter().all(|m| {
            let nz: Vec<usize> = (0..n).filter(|&r| m.row(r).iter().any(|x| !x.is_zero())).collect();
            m.select(&nz, &nz) == Mat::identity(nz.len())
        }),
    );
    report.check("nt_annihilates_generators", steps.iter().all(|m| (m * gens).is_zero()));
    report.check("rank_one_steps", steps.windows(2).all(|w| (&w[1] - &w[0]).rank() <= 1));
    Ok(LabelCode { direction, n, selected, coords, trellis, report })
}
