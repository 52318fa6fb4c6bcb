//! Worked examples with their expected outputs, transcribed as plain text.
//!
//! Matrices use the matrix file format. Label-code tables print each row as
//! `v_0 | c_0 | v_1 | ... | v_n` with masked entries as `.`.

use crate::field::gf4_concatenate;
use crate::text::format_matrix;

/// A named example: input matrices plus golden renderings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub p: u32,
    /// Named matrices in the matrix file format; the first one is the code.
    pub matrices: Vec<(&'static str, String)>,
    pub golden: Vec<(&'static str, String)>,
}

impl Fixture {
    pub fn matrix(&self, name: &str) -> Option<&str> {
        self.matrices.iter().find(|m| m.0 == name).map(|m| m.1.as_str())
    }

    /// The code matrix, when the fixture has one.
    pub fn code(&self) -> Option<&str> {
        self.matrices.first().map(|m| m.1.as_str())
    }

    pub fn golden(&self, name: &str) -> Option<&str> {
        self.golden.iter().find(|g| g.0 == name).map(|g| g.1.as_str())
    }
}

fn text(p: u32, rows: &[&[i64]]) -> String {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut s = format!("{p} {} {cols}\n", rows.len());
    for r in rows {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

fn lines(rows: &[&str]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

pub const GF3_G: [[i64; 4]; 2] = [[2, 2, 1, 0], [1, 0, 1, 2]];
pub const GF3_H: [[i64; 4]; 2] = [[2, 1, 0, 2], [0, 2, 2, 2]];
pub const GF3_X: [[i64; 4]; 4] = [[2, 2, 1, 0], [0, 1, 1, 1], [1, 0, 1, 2], [2, 1, 0, 2]];
pub const GF3_Y: [[i64; 4]; 4] = [[1, 0, 1, 2], [1, 2, 0, 1], [1, 1, 2, 0], [0, 1, 1, 1]];

pub const GF3_S_YX: [&str; 4] = [
    "0 0 0 0 | 2 | 1 1 1 0 | 2 | 1 0 2 1 | 1 | 0 0 0 0 | 0 | 0 0 0 0",
    "0 0 0 0 | 0 | 0 0 0 0 | 1 | 0 1 2 2 | 1 | 2 1 0 1 | 1 | 0 0 0 0",
    "1 1 1 0 | 1 | 0 0 0 0 | 0 | 0 0 0 0 | 1 | 2 0 1 2 | 2 | 1 1 1 0",
    "2 1 0 1 | 2 | 0 2 1 1 | 1 | 0 0 0 0 | 0 | 0 0 0 0 | 2 | 2 1 0 1",
];

pub const GF3_S_XY: [&str; 4] = [
    "1 0 2 1 | 1 | 0 0 0 0 | 0 | 0 0 0 0 | 1 | 1 1 1 0 | 2 | 1 0 2 1",
    "0 1 2 2 | 1 | 2 1 0 1 | 2 | 0 0 0 0 | 0 | 0 0 0 0 | 1 | 0 1 2 2",
    "0 0 0 0 | 1 | 2 0 1 2 | 1 | 1 1 1 0 | 2 | 0 0 0 0 | 0 | 0 0 0 0",
    "0 0 0 0 | 0 | 0 0 0 0 | 1 | 2 1 0 1 | 1 | 0 2 1 1 | 1 | 0 0 0 0",
];

/// Row 0 of the dual table as printed. Its symbol between the last two
/// labels reads 1, but those labels and the row of `Y` both force 2.
pub const GF3_S_XY_PRINTED_ROW0: &str = "1 0 2 1 | 1 | 0 0 0 0 | 0 | 0 0 0 0 | 1 | 1 1 1 0 | 1 | 1 0 2 1";

/// Product trellis on rows 0 and 2 of the ternary `X`: labels per boundary.
pub const GF3_PRODUCT_LABELS: [[&str; 5]; 2] =
    [["(0,0)", "(1,0)", "(1,0)", "(0,0)", "(0,0)"], ["(0,1)", "(0,0)", "(0,0)", "(0,1)", "(0,1)"]];
/// BCJR trellis of the ternary `G` against the parity matrix.
pub const GF3_BCJR_LABELS: [[&str; 5]; 2] =
    [["(0,0)", "(1,0)", "(0,1)", "(0,0)", "(0,0)"], ["(1,0)", "(0,0)", "(0,0)", "(0,2)", "(1,0)"]];

pub const BIN_G0: [[i64; 5]; 3] = [[1, 0, 0, 0, 1], [0, 1, 0, 1, 1], [0, 0, 1, 1, 0]];
pub const BIN_G01: [[i64; 5]; 3] = [[1, 1, 1, 0, 0], [0, 1, 1, 0, 1], [0, 0, 1, 1, 0]];
pub const BIN_H1: [[i64; 5]; 2] = [[0, 1, 1, 1, 0], [1, 1, 0, 0, 1]];
pub const BIN_H10: [[i64; 5]; 2] = [[0, 1, 1, 1, 0], [1, 0, 1, 1, 1]];
pub const BIN_X: [[i64; 5]; 5] = [[1, 1, 1, 0, 0], [0, 1, 1, 0, 1], [0, 0, 1, 1, 0], [0, 1, 0, 1, 1], [1, 0, 0, 0, 1]];
pub const BIN_Y: [[i64; 5]; 5] = [[1, 0, 1, 1, 1], [1, 1, 0, 0, 1], [0, 1, 1, 1, 0], [0, 1, 1, 1, 0], [1, 0, 1, 1, 1]];
pub const BIN_X_SPANS: [&str; 5] = ["(0,2]", "(1,4]", "(2,3]", "(3,1]", "(4,0]"];
pub const BIN_Y_SPANS: [&str; 5] = ["(2,0]", "(4,1]", "(3,2]", "(1,3]", "(0,4]"];

pub const BIN_S_YX: [&str; 5] = [
    "0 0 0 0 0 | 1 | 1 1 0 0 1 | 1 | 1 0 1 1 1 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 0 | 0 0 0 0 0",
    "0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 0 1 1 1 0 | 1 | 1 1 0 0 1 | 0 | 1 1 0 0 1 | 1 | 0 0 0 0 0",
    "0 0 0 0 0 | 0 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 1 0 1 1 1 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0",
    "0 1 1 1 0 | 0 | 0 1 1 1 0 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 1 0 1 1 1 | 1 | 0 1 1 1 0",
    "1 1 0 0 1 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 1 1 0 0 1",
];

pub const BIN_S_XY: [&str; 5] = [
    "1 0 0 0 1 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 1 1 1 0 0 | 1 | 1 1 0 1 0 | 1 | 1 0 0 0 1",
    "0 1 0 1 1 | 1 | 1 1 0 1 0 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 0 1 0 1 1",
    "0 0 1 1 0 | 0 | 0 0 1 1 0 | 1 | 1 1 1 0 0 | 1 | 0 0 0 0 0 | 1 | 0 0 1 1 0 | 0 | 0 0 1 1 0",
    "0 0 0 0 0 | 0 | 0 0 0 0 0 | 1 | 1 1 0 1 0 | 1 | 0 0 1 1 0 | 1 | 0 0 0 0 0 | 0 | 0 0 0 0 0",
    "0 0 0 0 0 | 1 | 1 0 0 0 1 | 0 | 1 0 0 0 1 | 1 | 0 1 1 0 1 | 1 | 0 1 0 1 1 | 1 | 0 0 0 0 0",
];

const MASKED: &str = ". . . . . | . | . . . . . | . | . . . . . | . | . . . . . | . | . . . . . | . | . . . . .";

/// Rows 0, 2, 4 of `X` with labels restricted to rows 1, 3 of `Y`.
pub const BIN_S_YX_MASKED: [&str; 5] = [
    ". 0 . 0 . | 1 | . 1 . 0 . | 1 | . 0 . 1 . | 1 | . 0 . 0 . | 0 | . 0 . 0 . | 0 | . 0 . 0 .",
    MASKED,
    ". 0 . 0 . | 0 | . 0 . 0 . | 0 | . 0 . 0 . | 1 | . 0 . 1 . | 1 | . 0 . 0 . | 0 | . 0 . 0 .",
    MASKED,
    ". 1 . 0 . | 1 | . 0 . 0 . | 0 | . 0 . 0 . | 0 | . 0 . 0 . | 0 | . 0 . 0 . | 1 | . 1 . 0 .",
];

/// Rows 1, 3 of `Y` with labels restricted to rows 0, 2, 4 of `X`.
pub const BIN_S_XY_MASKED: [&str; 5] = [
    MASKED,
    "0 . 0 . 1 | 1 | 1 . 0 . 0 | 1 | 0 . 0 . 0 | 0 | 0 . 0 . 0 | 0 | 0 . 0 . 0 | 1 | 0 . 0 . 1",
    MASKED,
    "0 . 0 . 0 | 0 | 0 . 0 . 0 | 1 | 1 . 0 . 0 | 1 | 0 . 1 . 0 | 1 | 0 . 0 . 0 | 0 | 0 . 0 . 0",
    MASKED,
];

/// Twelve GF(4) rows; the binary image has 24 columns.
pub const GOLAY_GF4: [&str; 12] = [
    "1ab1ba000000",
    "ab1a1b000000",
    "00b1a1ba0000",
    "00ab1ba10000",
    "00001ab1ba00",
    "0000ab1a1b00",
    "000000b1a1ba",
    "000000ab1ba1",
    "ba0000001ab1",
    "1b000000ab1a",
    "a1ba000000b1",
    "1ba1000000ab",
];

/// First block row `(A|B|C)` of the reduced characteristic matrix.
pub const GOLAY_ABC: [&str; 8] = [
    "110111101100000000000000",
    "011110001000101010000000",
    "001111011011000000000000",
    "000101110110001000100000",
    "000011100111110000000000",
    "000001010100110010101000",
    "000000111011011100000000",
    "000000010010101100101010",
];

pub const SUZUKI_SPANS: [(i64, i64); 13] = [
    (0, 0),
    (1, 8),
    (2, 16),
    (3, 10),
    (4, 18),
    (5, 12),
    (6, 20),
    (7, 28),
    (8, 22),
    (9, 30),
    (10, 24),
    (11, 32),
    (12, 40),
];

pub const SUZUKI_BOARD: [&str; 13] = [
    ". . . . . . . . . . . . 0",
    ". . . . . . . 1 . . . . .",
    ". . 2 . . . . . . . . . .",
    ". . . . . . . . . 1 . . .",
    ". . . . 2 . . . . . . . .",
    ". . . . . . . . . . . 1 .",
    ". . . . . . 2 . . . . . .",
    ". 3 . . . . . . . . . . .",
    ". . . . . . . . 2 . . . .",
    ". . . 3 . . . . . . . . .",
    ". . . . . . . . . . 2 . .",
    ". . . . . 3 . . . . . . .",
    "4 . . . . . . . . . . . .",
];

/// A characteristic matrix that is not reduced, for the self-dual code below.
pub const NONREDUCED_G: [[i64; 4]; 2] = [[1, 1, 0, 0], [0, 0, 1, 1]];
pub const NONREDUCED_X: [[i64; 4]; 4] = [[1, 1, 0, 0], [1, 1, 1, 1], [0, 0, 1, 1], [1, 1, 1, 1]];
pub const NONREDUCED_Y: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, 0, 0], [1, 1, 1, 1], [0, 0, 1, 1]];

/// Three binary codes sharing the characteristic spans `(0,3], (1,0], (2,4], (3,1], (4,2]`.
pub const TRIPLE: [[[i64; 5]; 2]; 3] = [
    [[1, 1, 0, 1, 0], [0, 0, 1, 0, 1]],
    [[1, 1, 0, 1, 0], [0, 0, 1, 1, 1]],
    [[1, 1, 1, 1, 0], [0, 0, 1, 0, 1]],
];
pub const TRIPLE_SPANS: [&str; 5] = ["(0,3]", "(1,0]", "(2,4]", "(3,1]", "(4,2]"];
/// The trellis with spans `(2,4]` and `(4,2]` exists for the second code only.
pub const TRIPLE_TRELLIS_ROWS: [[i64; 5]; 2] = [[0, 0, 1, 1, 1], [1, 1, 1, 0, 1]];

fn rows<const N: usize>(m: &[[i64; N]]) -> Vec<&[i64]> {
    m.iter().map(|r| &r[..]).collect()
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    let golay = gf4_concatenate(&GOLAY_GF4, true).expect("valid GF(4) grid");
    vec![
        Fixture {
            name: "gf3",
            summary: "ternary [4,2] code with its parity matrix, product and BCJR trellises",
            p: 3,
            matrices: vec![("g", text(3, &rows(&GF3_G))), ("h", text(3, &rows(&GF3_H)))],
            golden: vec![
                ("x", text(3, &rows(&GF3_X))),
                ("y", text(3, &rows(&GF3_Y))),
                ("s_yx", lines(&GF3_S_YX)),
                ("s_xy", lines(&GF3_S_XY)),
            ],
        },
        Fixture {
            name: "binary",
            summary: "binary [5,3] code and its dual in systematic and reduced span forms",
            p: 2,
            matrices: vec![("g0", text(2, &rows(&BIN_G0))), ("h1", text(2, &rows(&BIN_H1)))],
            golden: vec![("g01", text(2, &rows(&BIN_G01))), ("h10", text(2, &rows(&BIN_H10)))],
        },
        Fixture {
            name: "appendix-a",
            summary: "reduced dual pair of binary characteristic matrices with label codes",
            p: 2,
            matrices: vec![("g", text(2, &rows(&BIN_G01))), ("h", text(2, &rows(&BIN_H10)))],
            golden: vec![
                ("x", text(2, &rows(&BIN_X))),
                ("y", text(2, &rows(&BIN_Y))),
                ("x_spans", lines(&BIN_X_SPANS)),
                ("y_spans", lines(&BIN_Y_SPANS)),
                ("s_yx", lines(&BIN_S_YX)),
                ("s_xy", lines(&BIN_S_XY)),
                ("s_yx_rows_0_2_4", lines(&BIN_S_YX_MASKED)),
                ("s_xy_rows_1_3", lines(&BIN_S_XY_MASKED)),
            ],
        },
        Fixture {
            name: "golay",
            summary: "binary Golay code from twelve GF(4) rows, spanlength 108",
            p: 2,
            matrices: vec![("g", format_matrix(&golay))],
            golden: vec![("gf4", lines(&GOLAY_GF4)), ("abc", lines(&GOLAY_ABC))],
        },
        Fixture {
            name: "suzuki",
            summary: "periodic minimal spans of a function field as nonattacking rooks",
            p: 0,
            matrices: vec![],
            golden: vec![("board", lines(&SUZUKI_BOARD))],
        },
        Fixture {
            name: "nonreduced",
            summary: "self-dual binary code with a characteristic matrix that is not reduced",
            p: 2,
            matrices: vec![("g", text(2, &rows(&NONREDUCED_G))), ("x", text(2, &rows(&NONREDUCED_X)))],
            golden: vec![("y", text(2, &rows(&NONREDUCED_Y)))],
        },
        Fixture {
            name: "triple",
            summary: "three binary codes with equal characteristic spans",
            p: 2,
            matrices: vec![
                ("g", text(2, &rows(&TRIPLE[0]))),
                ("g1", text(2, &rows(&TRIPLE[1]))),
                ("g2", text(2, &rows(&TRIPLE[2]))),
            ],
            golden: vec![("spans", lines(&TRIPLE_SPANS)), ("trellis_rows", text(2, &rows(&TRIPLE_TRELLIS_ROWS)))],
        },
    ]
}

/// Looks a fixture up by name.
pub fn fixture(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}
