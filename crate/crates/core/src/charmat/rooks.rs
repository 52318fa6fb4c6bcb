use std::fmt;

use serde::Serialize;

use super::CharPair;
use crate::field::Scalar;

/// One rook: `black` marks the span of a conventional generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rook {
    pub row: usize,
    pub col: usize,
    pub label: String,
    pub black: bool,
}

/// Square board with at most one rook per cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Board {
    pub n: usize,
    pub rooks: Vec<Rook>,
}

impl Board {
    /// Board for a periodic span list `(i, j)`: row `i mod n`, column
    /// `(j - 1) mod n`, labelled with the period index `ceil(j / n)`.
    pub fn from_spans(n: usize, spans: &[(i64, i64)]) -> Board {
        let m = n as i64;
        let rooks = spans
            .iter()
            .map(|&(i, j)| Rook {
                row: i.rem_euclid(m) as usize,
                col: (j - 1).rem_euclid(m) as usize,
                label: (j + m - 1).div_euclid(m).to_string(),
                black: j - i < m,
            })
            .collect();
        Board { n, rooks }
    }

    /// Whether no two rooks share a row or a column.
    pub fn nonattacking(&self) -> bool {
        let mut rows = vec![false; self.n];
        let mut cols = vec![false; self.n];
        self.rooks.iter().all(|r| !std::mem::replace(&mut rows[r.row], true) && !std::mem::replace(&mut cols[r.col], true))
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_board(self))
    }
}

/// `sigma` together with the board holding a rook at `(i, sigma(i))`, marked
/// `B` for conventional spans and `W` for spans that wrap around.
pub fn sigma_and_rooks<F: Scalar>(pair: &CharPair<F>) -> (Vec<usize>, Board) {
    let rooks = pair
        .x_spans
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let black = !s.wraps();
            Rook { row: i, col: s.end, label: if black { "B" } else { "W" }.to_string(), black }
        })
        .collect();
    (pair.sigma.clone(), Board { n: pair.n, rooks })
}

/// One line per row, cells separated by spaces, `.` for empty cells.
pub fn render_board(board: &Board) -> String {
    let mut cells = vec![vec![".".to_string(); board.n]; board.n];
    for r in &board.rooks {
        cells[r.row][r.col] = r.label.clone();
    }
    cells.iter().map(|row| row.join(" ") + "\n").collect()
}
