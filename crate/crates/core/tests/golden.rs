//! Worked examples reproduced exactly from their transcribed tables.

use mintrellis::charmat::{
    char_pair_reduced, circ_spans, dual_char, render_board, sigma_and_rooks, transpose_check, x_reduced, y_reduced, Board,
    CharPair,
};
use mintrellis::field::gf4_concatenate;
use mintrellis::fixtures::{self, fixture};
use mintrellis::spanform::{reduce_msf, to_msf, Flavor};
use mintrellis::text::MatrixText;
use mintrellis::trellis::{
    bcjr_trellis, enumerate_bases, label_code, linearly_isomorphic, product_trellis, represents_one_to_one, tuple,
    Direction, Sign,
};
use mintrellis::{Gf2, Gf3, Mat, Mat2, Mat3};

fn m2<const N: usize>(rows: &[[i64; N]]) -> Mat2 {
    Mat2::from_ints(rows)
}

fn m3<const N: usize>(rows: &[[i64; N]]) -> Mat3 {
    Mat3::from_ints(rows)
}

fn lines(rows: &[&str]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

fn spans(pair: &CharPair<Gf2>, y: bool) -> Vec<String> {
    let s = if y { &pair.y_spans } else { &pair.x_spans };
    s.iter().map(ToString::to_string).collect()
}

#[test]
fn ternary_pair_and_label_codes() {
    let pair = char_pair_reduced(&m3(&fixtures::GF3_G)).unwrap();
    assert_eq!(pair.x, m3(&fixtures::GF3_X));
    assert_eq!(pair.y, m3(&fixtures::GF3_Y));
    let s_yx = label_code(&pair, Direction::YLabelsX, None).unwrap();
    assert_eq!(s_yx.render(), lines(&fixtures::GF3_S_YX));
    let s_xy = label_code(&pair, Direction::XLabelsY, None).unwrap();
    assert_eq!(s_xy.render(), lines(&fixtures::GF3_S_XY));
    let printed = fixtures::GF3_S_XY_PRINTED_ROW0;
    let cells = |s: &str| s.split(" | ").map(String::from).collect::<Vec<_>>();
    let diff: Vec<usize> =
        (0..9).filter(|&c| cells(printed)[c] != cells(fixtures::GF3_S_XY[0])[c]).collect();
    assert_eq!(diff, [7]);
}

#[test]
fn ternary_trellises() {
    let pair = char_pair_reduced(&m3(&fixtures::GF3_G)).unwrap();
    let rows: Vec<_> = [0, 2].iter().map(|&r| (pair.x.row(r).to_vec(), pair.x_spans[r])).collect();
    let product = product_trellis(&rows).unwrap();
    let bcjr = bcjr_trellis(&rows, &m3(&fixtures::GF3_H), Sign::Plus).unwrap();
    for (t, want) in [(&product, fixtures::GF3_PRODUCT_LABELS), (&bcjr, fixtures::GF3_BCJR_LABELS)] {
        for (g, labels) in t.generators.iter().zip(want) {
            let got: Vec<String> = g.vertices.iter().map(|v| tuple(v)).collect();
            assert_eq!(got, labels);
        }
        assert!(represents_one_to_one(t, &pair.g).unwrap());
    }
    assert!(linearly_isomorphic(&product, &bcjr).unwrap());
    assert!(linearly_isomorphic(&bcjr, &product).unwrap());
}

#[test]
fn binary_reduced_forms() {
    let g01 = reduce_msf(&m2(&fixtures::BIN_G0), Flavor::LeftOrderedRightReduced).unwrap();
    assert_eq!(g01.matrix, m2(&fixtures::BIN_G01));
    let h10 = reduce_msf(&m2(&fixtures::BIN_H1), Flavor::RightOrderedLeftReduced).unwrap();
    assert_eq!(h10.matrix, m2(&fixtures::BIN_H10));
    assert_eq!(m2(&fixtures::BIN_G01).rref_left(), m2(&fixtures::BIN_G0));
    let f = fixture("binary").unwrap();
    assert_eq!(format!("2 3 5\n{}", g01.matrix), f.golden("g01").unwrap());
}

#[test]
fn appendix_pair() {
    let pair = char_pair_reduced(&m2(&fixtures::BIN_G01)).unwrap();
    assert_eq!(pair.x, m2(&fixtures::BIN_X));
    assert_eq!(pair.y, m2(&fixtures::BIN_Y));
    assert_eq!(pair.h, m2(&fixtures::BIN_H10));
    assert_eq!(spans(&pair, false), fixtures::BIN_X_SPANS);
    assert_eq!(spans(&pair, true), fixtures::BIN_Y_SPANS);
    assert_eq!(dual_char(&pair.x).unwrap().y, pair.y);
    assert_eq!(pair.sigma, vec![2, 4, 3, 1, 0]);
}

#[test]
fn appendix_label_codes() {
    let pair = char_pair_reduced(&m2(&fixtures::BIN_G01)).unwrap();
    let full = label_code(&pair, Direction::YLabelsX, None).unwrap();
    assert_eq!(full.render(), lines(&fixtures::BIN_S_YX));
    let full = label_code(&pair, Direction::XLabelsY, None).unwrap();
    assert_eq!(full.render(), lines(&fixtures::BIN_S_XY));
    let masked = label_code(&pair, Direction::YLabelsX, Some(&[0, 2, 4])).unwrap();
    assert_eq!(masked.render(), lines(&fixtures::BIN_S_YX_MASKED));
    let masked = label_code(&pair, Direction::XLabelsY, Some(&[1, 3])).unwrap();
    assert_eq!(masked.render(), lines(&fixtures::BIN_S_XY_MASKED));
}

#[test]
fn golay() {
    let g = gf4_concatenate(&fixtures::GOLAY_GF4, true).unwrap();
    assert_eq!((g.rows(), g.cols()), (12, 24));
    let circular: usize = (0..12).map(|i| circ_spans(g.row(i)).unwrap().iter().map(|s| s.len).min().unwrap()).sum();
    assert_eq!(circular, 108);
    assert_eq!(to_msf(&g).unwrap().spanlength(), 132);
    let pair = char_pair_reduced(&g).unwrap();
    let strip: Vec<String> = (0..8).map(|i| pair.x.row(i).iter().map(ToString::to_string).collect()).collect();
    assert_eq!(strip, fixtures::GOLAY_ABC);
    let block = |r: usize, c: usize| pair.x.block(8 * r, 8 * c, 8, 8);
    for r in 0..3 {
        for c in 0..3 {
            assert_eq!(block(r, c), block(0, (c + 3 - r) % 3));
        }
    }
    for (i, s) in pair.x_spans.iter().enumerate() {
        assert_eq!(s.len, if i % 2 == 0 { 9 } else { 15 }, "row {i}");
    }
}

#[test]
fn suzuki_board() {
    let board = Board::from_spans(13, &fixtures::SUZUKI_SPANS);
    assert!(board.nonattacking());
    assert_eq!(render_board(&board), lines(&fixtures::SUZUKI_BOARD));
}

#[test]
fn ternary_rooks() {
    let pair = char_pair_reduced(&m3(&fixtures::GF3_G)).unwrap();
    let (sigma, board) = sigma_and_rooks(&pair);
    assert_eq!(sigma, vec![2, 3, 0, 1]);
    assert_eq!(board.rooks.iter().filter(|r| r.black).count(), pair.k());
}

#[test]
fn nonreduced_example() {
    let x = m2(&fixtures::NONREDUCED_X);
    let pair = dual_char(&x).unwrap();
    assert_eq!(pair.y, m2(&fixtures::NONREDUCED_Y));
    assert!(!pair.reduced);
    let t = transpose_check(&pair).unwrap();
    assert_eq!((t.bound, t.xt_spanlength), (8, 10));
    let reduced = char_pair_reduced(&m2(&fixtures::NONREDUCED_G)).unwrap();
    assert_eq!(transpose_check(&reduced).unwrap().xt_spanlength, 8);
}

#[test]
fn triple_transposes_and_bases() {
    let codes: Vec<Mat2> = fixtures::TRIPLE.iter().map(|g| m2(g)).collect();
    for g in &codes {
        let pair = char_pair_reduced(g).unwrap();
        assert_eq!(spans(&pair, false), fixtures::TRIPLE_SPANS);
    }
    let xt = |g: &Mat2| x_reduced(g).unwrap().transpose();
    let y = |g: &Mat2| y_reduced(g).unwrap();
    assert_eq!(xt(&codes[0]), y(&codes[0]));
    assert_eq!(xt(&codes[1]), y(&codes[2]));
    assert_eq!(xt(&codes[2]), y(&codes[1]));

    let admits: Vec<bool> = codes
        .iter()
        .map(|g| {
            let pair = char_pair_reduced(g).unwrap();
            enumerate_bases(&pair).unwrap().iter().any(|b| b.rows == [2, 4])
        })
        .collect();
    assert_eq!(admits, [false, true, false]);
    let pair = char_pair_reduced(&codes[1]).unwrap();
    assert_eq!(pair.x.select_rows(&[2, 4]), m2(&fixtures::TRIPLE_TRELLIS_ROWS));
}

#[test]
fn fixtures_render_their_goldens() {
    let f = fixture("gf3").unwrap();
    let g: Mat<Gf3> = MatrixText::parse(f.code().unwrap()).unwrap().to_mat().unwrap();
    let pair = char_pair_reduced(&g).unwrap();
    assert_eq!(format!("3 4 4\n{}", pair.x), f.golden("x").unwrap());
    let f = fixture("appendix-a").unwrap();
    let g: Mat<Gf2> = MatrixText::parse(f.code().unwrap()).unwrap().to_mat().unwrap();
    let pair = char_pair_reduced(&g).unwrap();
    assert_eq!(label_code(&pair, Direction::YLabelsX, Some(&[0, 2, 4])).unwrap().render(), f.golden("s_yx_rows_0_2_4").unwrap());
}
