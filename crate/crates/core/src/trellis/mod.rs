//! Linear tail-biting trellises given by a basis of their label code.
//!
//! A path stores `n + 1` vertex labels `v_0..v_n` with `v_n = v_0` and the
//! `n` edge symbols between them. The vertex `v_t` sits on the boundary just
//! before symbol `t`.

mod analysis;
mod labelcode;
mod viterbi;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use analysis::{
    enumerate_bases, label_code_dim, linearly_isomorphic, represents_one_to_one, trellis_duality_check, BasisChoice,
    profiles, TrellisDuality,
};
pub use labelcode::{label_code, Direction, LabelCode};
pub use viterbi::{hamming, viterbi_decode};

use crate::charmat::CircSpan;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{coefficient_vectors, Mat};

/// One path of a trellis: vertex labels `v_0..v_n` and symbols `c_0..c_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct LabelPath<F> {
    pub vertices: Vec<Vec<F>>,
    pub symbols: Vec<F>,
}

impl<F: Scalar> LabelPath<F> {
    fn zero(n: usize, width: usize) -> Self {
        LabelPath { vertices: vec![vec![F::zero(); width]; n + 1], symbols: vec![F::zero(); n] }
    }

    fn add_scaled(&mut self, c: F, other: &Self) {
        for (a, b) in self.vertices.iter_mut().zip(&other.vertices) {
            crate::matrix::axpy(a, c, b);
        }
        crate::matrix::axpy(&mut self.symbols, c, &other.symbols);
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }
}

/// Sign in the partial-syndrome rule `v_{t+1} = v_t + sign * c_t * h_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value<F: Scalar>(self) -> F {
        match self {
            Sign::Plus => F::one(),
            Sign::Minus => -F::one(),
        }
    }
}

/// Linear tail-biting trellis generated by the label-code rows `generators`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct Trellis<F> {
    pub n: usize,
    /// Length of every vertex label vector.
    pub width: usize,
    pub spans: Vec<CircSpan>,
    pub generators: Vec<LabelPath<F>>,
}

/// Edge `(from, symbol, to)` of section `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct Edge<F> {
    pub from: Vec<F>,
    pub symbol: F,
    pub to: Vec<F>,
}

/// Materialized vertex layers `V_0..V_n` and edge sections `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct Graph<F> {
    pub vertices: Vec<Vec<Vec<F>>>,
    pub edges: Vec<Vec<Edge<F>>>,
}

impl<F: Scalar> Graph<F> {
    /// Whether every edge is determined by its endpoints.
    pub fn no_multiple_edges(&self) -> bool {
        self.edges.iter().all(|sec| {
            let ends: BTreeSet<(&Vec<F>, &Vec<F>)> = sec.iter().map(|e| (&e.from, &e.to)).collect();
            ends.len() == sec.len()
        })
    }

    /// Outgoing edges of section `t`, keyed by source vertex.
    pub(crate) fn adjacency(&self, t: usize) -> BTreeMap<&Vec<F>, Vec<&Edge<F>>> {
        let mut out: BTreeMap<&Vec<F>, Vec<&Edge<F>>> = BTreeMap::new();
        for e in &self.edges[t] {
            out.entry(&e.from).or_default().push(e);
        }
        out
    }
}

fn unit<F: Scalar>(width: usize, g: usize) -> Vec<F> {
    let mut v = vec![F::zero(); width];
    v[g] = F::one();
    v
}

fn check_vectors<F: Scalar>(rows: &[(Vec<F>, CircSpan)]) -> Result<usize> {
    let n = rows.first().map(|r| r.0.len()).ok_or(Error::EmptyCode)?;
    for (g, (v, s)) in rows.iter().enumerate() {
        if v.len() != n || s.n != n || s.start >= n {
            return Err(Error::BadSpan(g));
        }
    }
    Ok(n)
}

/// Product construction: the generator `g` with span `(i, j]` carries the
/// label `e_g` on boundaries `i+1..=j` and zero elsewhere.
pub fn product_trellis<F: Scalar>(rows: &[(Vec<F>, CircSpan)]) -> Result<Trellis<F>> {
    let n = check_vectors(rows)?;
    let k = rows.len();
    let mut generators = Vec::with_capacity(k);
    for (g, (v, s)) in rows.iter().enumerate() {
        if s.len >= n || !s.fits(v) {
            return Err(Error::BadSpan(g));
        }
        let vertices = (0..=n).map(|t| if s.straddles(t % n) { unit(k, g) } else { vec![F::zero(); k] }).collect();
        generators.push(LabelPath { vertices, symbols: v.clone() });
    }
    Ok(Trellis { n, width: k, spans: rows.iter().map(|r| r.1).collect(), generators })
}

/// BCJR construction: starting from the zero label at the span start, each
/// symbol adds `sign * c_t * h_t` with `h_t` the column `t` of `labels`.
pub fn bcjr_trellis<F: Scalar>(rows: &[(Vec<F>, CircSpan)], labels: &Mat<F>, sign: Sign) -> Result<Trellis<F>> {
    let n = check_vectors(rows)?;
    if labels.cols() != n {
        return Err(Error::DimensionMismatch(format!("labels need {n} columns")));
    }
    let width = labels.rows();
    let s: F = sign.value();
    let mut generators = Vec::with_capacity(rows.len());
    for (g, (c, span)) in rows.iter().enumerate() {
        let mut vertices = vec![vec![F::zero(); width]; n + 1];
        let mut v = vec![F::zero(); width];
        for step in 0..n {
            let t = (span.start + step) % n;
            if t == 0 {
                vertices[0] = v.clone();
            }
            crate::matrix::axpy(&mut v, s * c[t], &labels.col(t));
            vertices[t + 1] = v.clone();
        }
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::NotClosed(g));
        }
        generators.push(LabelPath { vertices, symbols: c.clone() });
    }
    Ok(Trellis { n, width, spans: rows.iter().map(|r| r.1).collect(), generators })
}

/// Number of spans whose interior contains boundary `t`, for `t = 0..=n`.
pub fn complexity_profile(spans: &[CircSpan], n: usize) -> Vec<usize> {
    (0..=n).map(|t| spans.iter().filter(|s| s.straddles(t % n)).count()).collect()
}

impl<F: Scalar> Trellis<F> {
    /// Matrix whose rows are the generators' labels at boundary `t`.
    pub fn labels_at(&self, t: usize) -> Mat<F> {
        Mat::from_rows_with_cols(self.generators.iter().map(|p| p.vertices[t].clone()).collect(), self.width)
            .expect("uniform label width")
    }

    /// Matrix whose rows are the generators' symbol sequences.
    pub fn symbol_matrix(&self) -> Mat<F> {
        Mat::from_rows_with_cols(self.generators.iter().map(|p| p.symbols.clone()).collect(), self.n)
            .expect("uniform length")
    }

    /// `dim V_t` for `t = 0..=n`.
    pub fn state_dims(&self) -> Vec<usize> {
        (0..=self.n).map(|t| self.labels_at(t).rank()).collect()
    }

    /// `|V_t| = q^dim V_t` for `t = 0..=n`.
    pub fn vertex_counts(&self) -> Vec<u64> {
        self.state_dims().iter().map(|&d| (F::ORDER as u64).pow(d as u32)).collect()
    }

    /// Every generator closes up and is a path of the trellis.
    pub fn generators_closed(&self) -> bool {
        self.generators.iter().all(LabelPath::is_closed)
    }

    /// The combination `sum u_r * generator_r`.
    pub fn combine(&self, u: &[F]) -> LabelPath<F> {
        let mut p = LabelPath::zero(self.n, self.width);
        for (c, g) in u.iter().zip(&self.generators) {
            if !c.is_zero() {
                p.add_scaled(*c, g);
            }
        }
        p
    }

    /// All label-code elements, one per coefficient vector (with repeats when
    /// the generators are dependent).
    pub fn label_code_elements(&self) -> Result<Vec<LabelPath<F>>> {
        Ok(coefficient_vectors::<F>(self.generators.len())?.iter().map(|u| self.combine(u)).collect())
    }

    /// Vertex layers and edge sections spanned by the label code.
    pub fn graph(&self) -> Result<Graph<F>> {
        let zero = vec![F::zero(); self.width];
        let mut edges = Vec::with_capacity(self.n);
        for t in 0..self.n {
            // only generators touching section t contribute to its edges
            let active: Vec<&LabelPath<F>> = self
                .generators
                .iter()
                .filter(|g| g.vertices[t] != zero || !g.symbols[t].is_zero() || g.vertices[t + 1] != zero)
                .collect();
            let mut section = BTreeSet::new();
            for u in coefficient_vectors::<F>(active.len())? {
                let mut e = Edge { from: zero.clone(), symbol: F::zero(), to: zero.clone() };
                for (&c, g) in u.iter().zip(&active) {
                    if !c.is_zero() {
                        crate::matrix::axpy(&mut e.from, c, &g.vertices[t]);
                        e.symbol = e.symbol + c * g.symbols[t];
                        crate::matrix::axpy(&mut e.to, c, &g.vertices[t + 1]);
                    }
                }
                section.insert(e);
            }
            edges.push(section.into_iter().collect::<Vec<_>>());
        }
        let mut vertices: Vec<Vec<Vec<F>>> = edges
            .iter()
            .map(|s| s.iter().map(|e| e.from.clone()).collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        let last = edges.last().map_or_else(Vec::new, |s| {
            s.iter().map(|e| e.to.clone()).collect::<BTreeSet<_>>().into_iter().collect()
        });
        vertices.push(last);
        Ok(Graph { vertices, edges })
    }

    /// Graphviz rendering: one rank per boundary, dashed edges for symbol 0.
    pub fn to_dot(&self) -> Result<String> {
        let g = self.graph()?;
        let name = |t: usize, v: &[F]| format!("\"{t}:{}\"", tuple(v));
        let mut out = String::from("digraph trellis {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n");
        for (t, layer) in g.vertices.iter().enumerate() {
            writeln!(out, "  subgraph cluster_{t} {{\n    label=\"V{t}\"; rank=same;").unwrap();
            for v in layer {
                writeln!(out, "    {} [label=\"{}\"];", name(t, v), tuple(v)).unwrap();
            }
            out.push_str("  }\n");
        }
        for (t, sec) in g.edges.iter().enumerate() {
            for e in sec {
                let style = if e.symbol.is_zero() { "dashed" } else { "solid" };
                writeln!(out, "  {} -> {} [label=\"{}\", style={style}];", name(t, &e.from), name(t + 1, &e.to), e.symbol)
                    .unwrap();
            }
        }
        out.push_str("}\n");
        Ok(out)
    }

    /// Label code rows as `v_0 | c_0 | v_1 | ... | v_n`.
    pub fn label_table(&self) -> String {
        let mut out = String::new();
        for p in &self.generators {
            out.push_str(&render_path(p, |_| true));
            out.push('\n');
        }
        out
    }
}

/// Vertex label as `(a,b,...)`, or `-` for an empty label.
pub fn tuple<F: Scalar>(v: &[F]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// One label-code row with label coordinates outside `show` printed as `.`.
pub(crate) fn render_path<F: Scalar>(p: &LabelPath<F>, show: impl Fn(usize) -> bool) -> String {
    let block = |v: &[F]| {
        v.iter()
            .enumerate()
            .map(|(k, x)| if show(k) { x.to_string() } else { ".".into() })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut cells = Vec::with_capacity(2 * p.symbols.len() + 1);
    for (t, c) in p.symbols.iter().enumerate() {
        cells.push(block(&p.vertices[t]));
        cells.push(c.to_string());
    }
    cells.push(block(p.vertices.last().map_or(&[][..], Vec::as_slice)));
    cells.join(" | ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type F3 = Fp<3>;

    fn v3(xs: &[i64]) -> Vec<F3> {
        xs.iter().map(|&x| F3::from_i64(x)).collect()
    }

    fn fig2_rows() -> Vec<(Vec<F3>, CircSpan)> {
        vec![(v3(&[2, 2, 1, 0]), CircSpan::new(4, 0, 2)), (v3(&[1, 0, 1, 2]), CircSpan::new(4, 2, 0))]
    }

    #[test]
    fn product_fig2() {
        let t = product_trellis(&fig2_rows()).unwrap();
        assert!(t.generators_closed());
        let labels: Vec<String> = t.generators[0].vertices.iter().map(|v| tuple(v)).collect();
        assert_eq!(labels, ["(0,0)", "(1,0)", "(1,0)", "(0,0)", "(0,0)"]);
        let labels: Vec<String> = t.generators[1].vertices.iter().map(|v| tuple(v)).collect();
        assert_eq!(labels, ["(0,1)", "(0,0)", "(0,0)", "(0,1)", "(0,1)"]);
        assert_eq!(t.state_dims(), vec![1; 5]);
        assert_eq!(complexity_profile(&t.spans, 4), vec![1; 5]);
        let g = t.graph().unwrap();
        assert!(g.no_multiple_edges());
        assert_eq!(g.vertices.iter().map(Vec::len).collect::<Vec<_>>(), vec![3; 5]);
    }

    #[test]
    fn bcjr_fig2() {
        let h = Mat::<F3>::from_ints(&[[2, 1, 0, 2], [0, 2, 2, 2]]);
        let t = bcjr_trellis(&fig2_rows(), &h, Sign::Plus).unwrap();
        let labels: Vec<String> = t.generators[0].vertices.iter().map(|v| tuple(v)).collect();
        assert_eq!(labels, ["(0,0)", "(1,0)", "(0,1)", "(0,0)", "(0,0)"]);
        let labels: Vec<String> = t.generators[1].vertices.iter().map(|v| tuple(v)).collect();
        assert_eq!(labels, ["(1,0)", "(0,0)", "(0,0)", "(0,2)", "(1,0)"]);
        assert!(t.to_dot().unwrap().contains("style=dashed"));
    }

    #[test]
    fn bcjr_rejects_non_codeword() {
        let h = Mat::<F3>::from_ints(&[[2, 1, 0, 2], [0, 2, 2, 2]]);
        let rows = vec![(v3(&[1, 0, 0, 0]), CircSpan::new(4, 0, 0))];
        assert_eq!(bcjr_trellis(&rows, &h, Sign::Plus), Err(Error::NotClosed(0)));
    }

    #[test]
    fn product_rejects_bad_span() {
        let rows = vec![(v3(&[2, 2, 1, 0]), CircSpan::new(4, 1, 2))];
        assert_eq!(product_trellis(&rows), Err(Error::BadSpan(0)));
    }

    #[test]
    fn single_conventional_generator() {
        let rows = vec![(v3(&[0, 1, 2, 0]), CircSpan::new(4, 1, 2))];
        let t = product_trellis(&rows).unwrap();
        assert_eq!(t.vertex_counts(), vec![1, 1, 3, 1, 1]);
    }

    #[test]
    fn conventional_profile() {
        let spans = [CircSpan::new(5, 0, 2), CircSpan::new(5, 1, 4), CircSpan::new(5, 2, 3)];
        assert_eq!(complexity_profile(&spans, 5), vec![0, 1, 2, 2, 1, 0]);
    }
}
