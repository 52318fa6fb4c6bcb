//! Plain-text matrix format: a header line `p r c`, then `r` lines of `c` integers.
//!
//! Blank lines and lines starting with `#` are skipped. Negative literals are
//! reduced modulo `p`.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Mat;

/// Parsed matrix file before it is bound to a concrete field type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixText {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl MatrixText {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| parse_err("empty input"))?;
        let head: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| parse_err(format!("bad header token {t:?}"))))
            .collect::<Result<_>>()?;
        let [p, rows, cols] = head[..] else {
            return Err(parse_err("header must be `p r c`"));
        };
        let (rows, cols) = (rows as usize, cols as usize);
        let mut entries = Vec::with_capacity(rows);
        for (i, line) in lines.enumerate() {
            if i >= rows {
                return Err(parse_err(format!("more than {rows} matrix rows")));
            }
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| parse_err(format!("bad entry {t:?} in row {i}"))))
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(parse_err(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            entries.push(row);
        }
        if entries.len() != rows {
            return Err(parse_err(format!("expected {rows} rows, found {}", entries.len())));
        }
        Ok(MatrixText { p, rows, cols, entries })
    }

    pub fn field(&self) -> Result<Field> {
        Field::new(self.p)
    }

    /// Binds the entries to `F`, whose order must equal the header's modulus.
    pub fn to_mat<F: Scalar>(&self) -> Result<Mat<F>> {
        self.field()?;
        if F::ORDER as u64 != self.p {
            return Err(parse_err(format!("matrix is over GF({}), not GF({})", self.p, F::ORDER)));
        }
        let rows = self.entries.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect();
        Mat::from_rows_with_cols(rows, self.cols)
    }
}

pub fn format_matrix<F: Scalar>(m: &Mat<F>) -> String {
    format!("{} {} {}\n{}", F::ORDER, m.rows(), m.cols(), m)
}
