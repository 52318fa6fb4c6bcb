use std::collections::BTreeMap;

use super::Trellis;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Number of positions where `a` and `b` differ.
pub fn hamming<F: Scalar>(a: &[F], b: &[F]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Maximum-likelihood decoding over the cycles of a tail-biting trellis:
/// one Viterbi pass per starting vertex, keeping the survivor of least
/// Hamming distance and, among ties, the lexicographically least codeword.
pub fn viterbi_decode<F: Scalar>(t: &Trellis<F>, received: &[F]) -> Result<(Vec<F>, usize)> {
    if received.len() != t.n {
        return Err(Error::DimensionMismatch(format!("received word needs length {}", t.n)));
    }
    let g = t.graph()?;
    let adj: Vec<_> = (0..t.n).map(|s| g.adjacency(s)).collect();
    let mut best: Option<(usize, Vec<F>)> = None;
    for start in &g.vertices[0] {
        let mut layer: BTreeMap<&Vec<F>, (usize, Vec<F>)> = BTreeMap::new();
        layer.insert(start, (0, Vec::with_capacity(t.n)));
        for (s, r) in received.iter().enumerate() {
            let mut next: BTreeMap<&Vec<F>, (usize, Vec<F>)> = BTreeMap::new();
            for (v, (cost, word)) in &layer {
                for e in adj[s].get(v).into_iter().flatten() {
                    let mut w = word.clone();
                    w.push(e.symbol);
                    let cand = (cost + usize::from(e.symbol != *r), w);
                    match next.get(&e.to) {
                        Some(cur) if *cur <= cand => {}
                        _ => {
                            next.insert(&e.to, cand);
                        }
                    }
                }
            }
            layer = next;
        }
        if let Some(c) = layer.remove(start) {
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.map(|(d, w)| (w, d)).ok_or(Error::EmptyCode)
}
