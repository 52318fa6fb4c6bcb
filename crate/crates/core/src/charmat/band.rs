use super::CharPair;
use crate::field::Scalar;
use crate::matrix::Mat;

/// Renders `windows` block rows of one band. Block row `w` puts `left` at
/// columns `w n ..` and `right` at `(w + 1) n ..`; `in_left` and `in_right`
/// decide which positions belong to the triangular structure (others print
/// as `.` unless nonzero).
fn render<F: Scalar>(
    left: &Mat<F>,
    right: &Mat<F>,
    windows: usize,
    bar: usize,
    in_left: impl Fn(usize, usize) -> bool,
    in_right: impl Fn(usize, usize) -> bool,
) -> String {
    let n = left.rows();
    let width = (windows + 1) * n;
    let mut lines = Vec::new();
    for w in 0..windows {
        if w > 0 {
            lines.push("-".repeat(2 * width + 1));
        }
        for i in 0..n {
            let mut cells = vec![".".to_string(); width];
            for j in 0..n {
                if in_left(i, j) || !left[(i, j)].is_zero() {
                    cells[w * n + j] = left[(i, j)].to_string();
                }
                if in_right(i, j) || !right[(i, j)].is_zero() {
                    cells[(w + 1) * n + j] = right[(i, j)].to_string();
                }
            }
            cells.insert(bar, "|".to_string());
            lines.push(cells.join(" "));
        }
    }
    lines.iter().map(|l| format!("{l}\n")).collect()
}

/// Block-banded displays of the unit-memory codes `y_t = u_t X0 + u_{t-1} X1`
/// and its right-ordered counterpart, one block row per window. In-structure
/// zeros print as `0`, structural zeros as `.`.
pub fn unwrap_band<F: Scalar>(pair: &CharPair<F>, windows: usize) -> String {
    let n = pair.n;
    let x = render(&pair.x0, &pair.x1, windows, n, |i, j| j >= i, |i, j| j < i);
    let y = render(&pair.y1, &pair.y0, windows, windows * n, |i, j| j > i, |i, j| j <= i);
    format!("{x}\n{y}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmat::char_pair_reduced;
    use crate::field::Fp;

    #[test]
    fn gf3_band() {
        let pair = char_pair_reduced(&Mat::<Fp<3>>::from_ints(&[[2, 2, 1, 0], [1, 0, 1, 2]])).unwrap();
        let text = unwrap_band(&pair, 2);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "2 2 1 0 | . . . . . . . .");
        assert_eq!(lines[3], ". . . 2 | 2 1 0 . . . . .");
        assert_eq!(lines[4], "-".repeat(25));
        assert_eq!(lines[8], ". . . . | . . . 2 2 1 0 .");
        assert_eq!(lines[10], ". 0 1 2 1 . . . | . . . .");
        assert_eq!(lines[18], ". . . . . . . . | 0 1 1 1");
        assert_eq!(unwrap_band(&pair, 1).lines().next(), Some("2 2 1 0 | . . . ."));
    }
}
