//! Random instances and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use mintrellis::{Mat, Scalar};
use rand::Rng;

/// Random `k x n` matrix of full row rank.
pub fn random_code<F: Scalar, R: Rng>(rng: &mut R, k: usize, n: usize) -> Mat<F> {
    loop {
        let m = Mat::from_fn(k, n, |_, _| F::from_index(rng.gen_range(0..F::ORDER)));
        if m.has_full_row_rank() {
            return m;
        }
    }
}

/// Same, but with no coordinate on which the code vanishes.
pub fn random_full_support_code<F: Scalar, R: Rng>(rng: &mut R, k: usize, n: usize) -> Mat<F> {
    loop {
        let m = random_code::<F, R>(rng, k, n);
        if (0..n).all(|j| m.col(j).iter().any(|v| !v.is_zero())) {
            return m;
        }
    }
}

/// Neither the code nor its dual vanishes on a coordinate.
pub fn random_nondegenerate_code<F: Scalar, R: Rng>(rng: &mut R, k: usize, n: usize) -> Mat<F> {
    loop {
        let m = random_full_support_code::<F, R>(rng, k, n);
        let h = m.null_space();
        if (0..n).all(|j| h.col(j).iter().any(|v| !v.is_zero())) {
            return m;
        }
    }
}

pub fn random_vec<F: Scalar, R: Rng>(rng: &mut R, n: usize) -> Vec<F> {
    (0..n).map(|_| F::from_index(rng.gen_range(0..F::ORDER))).collect()
}

/// All `q^k` codewords, by plain enumeration of coefficient vectors.
pub fn codewords<F: Scalar>(g: &Mat<F>) -> Vec<Vec<F>> {
    let (k, n) = (g.rows(), g.cols());
    let q = F::ORDER as usize;
    let total = q.pow(k as u32);
    (0..total)
        .map(|mut idx| {
            let mut w = vec![F::zero(); n];
            for r in 0..k {
                let c = F::from_index((idx % q) as u32);
                idx /= q;
                for (j, x) in w.iter_mut().enumerate() {
                    *x = *x + c * g.row(r)[j];
                }
            }
            w
        })
        .collect()
}

pub fn weight<F: Scalar>(v: &[F]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn distance<F: Scalar>(a: &[F], b: &[F]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Conventional spanlength `last - first` of a nonzero vector.
pub fn conv_len<F: Scalar>(v: &[F]) -> usize {
    let first = v.iter().position(|x| !x.is_zero()).unwrap();
    let last = v.iter().rposition(|x| !x.is_zero()).unwrap();
    last - first
}

/// Smallest total spanlength over all bases of `row(g)`, by greedy
/// selection of shortest independent codewords (matroid exchange makes the
/// greedy choice optimal).
pub fn min_spanlength_oracle<F: Scalar>(g: &Mat<F>) -> usize {
    let mut words: Vec<Vec<F>> = codewords(g).into_iter().filter(|w| weight(w) > 0).collect();
    words.sort_by_key(|w| conv_len(w));
    let mut chosen: Vec<Vec<F>> = Vec::new();
    let mut total = 0;
    for w in words {
        let mut trial = chosen.clone();
        trial.push(w.clone());
        if Mat::from_rows(trial).unwrap().has_full_row_rank() {
            total += conv_len(&w);
            chosen.push(w);
            if chosen.len() == g.rows() {
                break;
            }
        }
    }
    total
}

/// Nearest word of `words`, smallest in lexicographic order among ties.
pub fn nearest_codeword<F: Scalar>(words: &[Vec<F>], received: &[F]) -> (Vec<F>, usize) {
    words.iter().map(|w| (distance(w, received), w)).min().map(|(d, w)| (w.clone(), d)).unwrap()
}
