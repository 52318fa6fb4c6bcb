//! Structural invariants on random codes.

mod common;

use common::{random_code, random_nondegenerate_code, random_vec};
use mintrellis::charmat::{
    basis_at_cut, char_pair_direct, char_pair_reduced, displacement, dual_char, duality_report_parts, shift_displacement_check,
    sigma_and_rooks, transpose_check, verify_characteristic, verify_characteristic_right, CharPair,
};
use mintrellis::spanform::{bruhat_corner, is_msf, lpu, reduce_msf, to_msf, Corner, Flavor};
use mintrellis::text::{format_matrix, MatrixText};
use mintrellis::trellis::{
    bcjr_trellis, complexity_profile, label_code, linearly_isomorphic, product_trellis, represents_one_to_one,
    trellis_duality_check, viterbi_decode, Direction, Sign,
};
use mintrellis::{Fp, Mat, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type G2 = Fp<2>;
type G3 = Fp<3>;
type G5 = Fp<5>;

/// `(n, k, seed)` with `1 <= k < n <= max_n`.
fn dims(max_n: usize) -> impl Strategy<Value = (usize, usize, u64)> {
    (2..=max_n).prop_flat_map(|n| (Just(n), 1..n, any::<u64>()))
}

fn code<F: Scalar>(n: usize, k: usize, seed: u64) -> Mat<F> {
    random_code(&mut ChaCha8Rng::seed_from_u64(seed), k, n)
}

/// Reduced pair of a code where neither the code nor its dual vanishes on a
/// coordinate, so every span is shorter than `n`.
fn pair<F: Scalar>(n: usize, k: usize, seed: u64) -> CharPair<F> {
    let g = random_nondegenerate_code(&mut ChaCha8Rng::seed_from_u64(seed), k, n);
    char_pair_reduced(&g).unwrap()
}

fn reduced_pair_invariants<F: Scalar>(n: usize, k: usize, seed: u64) -> Result<(), TestCaseError> {
    let g = code::<F>(n, k, seed);
    let p = char_pair_reduced(&g).unwrap();
    prop_assert!(p.structure_report().all_pass(), "{}", p.structure_report());
    prop_assert!(duality_report_parts(&p.x0, &p.x1, &p.y1, &p.y0).unwrap().all_pass());
    prop_assert!(p.reduced);
    // a folded matrix only determines its halves when no span wraps fully
    if p.x_spans.iter().chain(&p.y_spans).all(|s| s.len < n) {
        prop_assert!(verify_characteristic(&p.x, &g).unwrap().all_pass());
        prop_assert!(verify_characteristic_right(&p.y, &p.h).unwrap().all_pass());
        prop_assert_eq!(&dual_char(&p.x).unwrap().y, &p.y);
    }
    prop_assert_eq!(p.x_spanlength(), p.profile.j1.len() * n);
    prop_assert_eq!(p.y_spanlength(), p.profile.i1.len() * n);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_pairs_gf2((n, k, seed) in dims(9)) { reduced_pair_invariants::<G2>(n, k, seed)?; }

    #[test]
    fn reduced_pairs_gf3((n, k, seed) in dims(8)) { reduced_pair_invariants::<G3>(n, k, seed)?; }

    #[test]
    fn reduced_pairs_gf5((n, k, seed) in dims(7)) { reduced_pair_invariants::<G5>(n, k, seed)?; }

    #[test]
    fn direct_pair_is_characteristic((n, k, seed) in dims(8)) {
        let g: Mat<G3> = random_nondegenerate_code(&mut ChaCha8Rng::seed_from_u64(seed), k, n);
        let p = char_pair_direct(&g).unwrap();
        prop_assert!(duality_report_parts(&p.x0, &p.x1, &p.y1, &p.y0).unwrap().all_pass());
        prop_assert!(verify_characteristic(&p.x, &g).unwrap().all_pass());
        prop_assert_eq!(&dual_char(&p.x).unwrap().y, &p.y);
    }

    #[test]
    fn msf_keeps_row_space((n, k, seed) in dims(9)) {
        let g = code::<G3>(n, k, seed);
        let m = to_msf(&g).unwrap();
        prop_assert!(is_msf(&m.matrix).unwrap());
        prop_assert!(m.matrix.same_row_space(&g));
        for flavor in [Flavor::LeftOrderedRightReduced, Flavor::RightOrderedLeftReduced] {
            let r = reduce_msf(&g, flavor).unwrap();
            prop_assert!(is_msf(&r.matrix).unwrap());
            prop_assert_eq!(r.spanlength(), m.spanlength());
            // unique: any basis of the same code reduces to the same matrix
            prop_assert_eq!(&reduce_msf(&g.rref_left(), flavor).unwrap().matrix, &r.matrix);
            prop_assert_eq!(&reduce_msf(&r.matrix, flavor).unwrap().matrix, &r.matrix);
        }
    }

    #[test]
    fn lpu_and_bruhat(n in 1usize..7, seed in any::<u64>()) {
        let a = code::<G5>(n, n, seed);
        let f = lpu(&a).unwrap();
        prop_assert!(f.l.is_lower_triangular() && f.l.diagonal_nonzero());
        prop_assert!(f.u.is_upper_triangular() && f.u.diagonal_nonzero());
        prop_assert!(f.p.is_permutation());
        prop_assert_eq!(&(&(&f.l * &f.p) * &f.u), &a);
        for corner in [Corner::Nw, Corner::Ne, Corner::Sw, Corner::Se] {
            prop_assert!(bruhat_corner(&a, corner).unwrap().is_permutation());
        }
    }

    #[test]
    fn displacement_and_shift((n, k, seed) in dims(8)) {
        let p = pair::<G3>(n, k, seed);
        prop_assert!(displacement(&p).unwrap().report.all_pass());
        prop_assert!(shift_displacement_check(&p).unwrap().all_pass());
        prop_assert!(transpose_check(&p).unwrap().report.all_pass());
    }

    #[test]
    fn label_codes((n, k, seed) in dims(8)) {
        let p = pair::<G3>(n, k, seed);
        for dir in [Direction::YLabelsX, Direction::XLabelsY] {
            let lc = label_code(&p, dir, None).unwrap();
            prop_assert!(lc.report.all_pass(), "{}", lc.report);
        }
    }

    #[test]
    fn rooks_nonattacking((n, k, seed) in dims(9)) {
        let p = pair::<G2>(n, k, seed);
        let (sigma, board) = sigma_and_rooks(&p);
        prop_assert!(board.nonattacking());
        let mut sorted = sigma.clone();
        sorted.sort();
        prop_assert_eq!(sorted, (0..n).collect::<Vec<_>>());
    }

    #[test]
    fn kv_trellis_at_every_cut((n, k, seed) in dims(7)) {
        let p = pair::<G2>(n, k, seed);
        for a in 0..n {
            let rows = basis_at_cut(&p, a).unwrap();
            let gens: Vec<_> = rows.iter().map(|&r| (p.x.row(r).to_vec(), p.x_spans[r])).collect();
            let t = product_trellis(&gens).unwrap();
            prop_assert!(t.generators_closed());
            prop_assert!(represents_one_to_one(&t, &p.g).unwrap());
            let spans: Vec<_> = gens.iter().map(|g| g.1).collect();
            prop_assert_eq!(t.state_dims(), complexity_profile(&spans, n));
            prop_assert_eq!(t.state_dims()[a], 0);
            let h = bcjr_trellis(&gens, &p.h, Sign::Plus).unwrap();
            prop_assert!(linearly_isomorphic(&t, &h).unwrap());
        }
    }

    #[test]
    fn trellis_duality_on_random_selections((n, k, seed) in dims(7), pick in any::<u64>()) {
        let p = pair::<G3>(n, k, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        // random independent selection of k rows
        let rows = loop {
            let mut all: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(&mut all[..], &mut rng);
            let mut rows = all[..k].to_vec();
            rows.sort();
            if p.x.select_rows(&rows).has_full_row_rank() {
                break rows;
            }
        };
        let d = trellis_duality_check(&p, &rows).unwrap();
        prop_assert!(d.report.all_pass(), "rows {:?}\n{}", rows, d.report);
    }

    #[test]
    fn viterbi_corrects_codewords((n, k, seed) in dims(7), word in any::<u64>()) {
        let p = pair::<G3>(n, k, seed);
        let rows = basis_at_cut(&p, 0).unwrap();
        let gens: Vec<_> = rows.iter().map(|&r| (p.x.row(r).to_vec(), p.x_spans[r])).collect();
        let t = product_trellis(&gens).unwrap();
        let u: Vec<G3> = random_vec(&mut ChaCha8Rng::seed_from_u64(word), k);
        let c = p.g.combine(&u);
        prop_assert_eq!(viterbi_decode(&t, &c).unwrap(), (c, 0));
    }

    #[test]
    fn matrix_text_round_trip(r in 1usize..6, c in 1usize..6, seed in any::<u64>()) {
        let m: Mat<G5> = Mat::from_fn(r, c, {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            move |_, _| random_vec::<G5, _>(&mut rng, 1)[0]
        });
        let back: Mat<G5> = MatrixText::parse(&format_matrix(&m)).unwrap().to_mat().unwrap();
        prop_assert_eq!(back, m);
    }
}
