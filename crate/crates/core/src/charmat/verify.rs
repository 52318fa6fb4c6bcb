use serde::Serialize;

use super::{char_pair_reduced, x_reduced, y_reduced, CharPair};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{trailing_index, Mat, PivotProfile};
use crate::report::Report;
use crate::spanform::is_msf;

fn distinct(v: &[usize]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == v.len()
}

/// Checks a folded left-ordered matrix `x` against the code `row(g)`, with the
/// four equivalent characterizations (a)-(d) reported separately.
///
/// `x` is split as `x0 = upper(x)`, `x1 = strict_lower(x)`.
pub fn verify_characteristic<F: Scalar>(x: &Mat<F>, g: &Mat<F>) -> Result<Report> {
    let n = g.cols();
    if x.rows() != n || x.cols() != n {
        return Err(Error::DimensionMismatch(format!("X must be {n}x{n}")));
    }
    let prof = PivotProfile::of_code(g);
    let h = g.null_space();
    let x0 = x.upper();
    let x1 = x.strict_lower();
    let ux = x0.augment(&x1)?;
    let mut r = Report::new();
    r.check("rows_nonzero", (0..n).all(|i| x.row(i).iter().any(|v| !v.is_zero())));
    r.check("x0_nonzero_diagonal", x0.diagonal_nonzero());
    let hh = h.augment(&h)?;
    r.check("rows_orthogonal_to_hh", (&ux * &hh.transpose()).is_zero());
    r.check("row_space_equals_code", x.same_row_space(g));

    let ends: Vec<usize> = (0..n).map(|i| trailing_index(ux.row(i)).unwrap_or(i)).collect();
    let allowed = |e: usize| if e < n { prof.i1.contains(&e) } else { prof.j1.contains(&(e - n)) };
    r.check("a_distinct_ends", distinct(&ends) && ends.iter().all(|&e| allowed(e)));
    let total: usize = ends.iter().enumerate().map(|(i, &e)| e - i).sum();
    r.check("b_total_spanlength", total == prof.j1.len() * n);
    let inside = |a: usize| {
        (0..n)
            .filter(|&i| (a >= 1 && ends[i] < a) || (i >= a && ends[i] < a + n))
            .count()
    };
    r.check("c_cut_counts", (0..n).all(|a| inside(a) == prof.i1.len()));
    let straddle = |a: usize| (0..n).filter(|&i| (i < a && a <= ends[i]) || n + a <= ends[i]).count();
    r.check("d_straddle_counts", (0..n).all(|a| straddle(a) == prof.j1.len()));
    Ok(r)
}

/// Right-ordered counterpart of [`verify_characteristic`] for `y` against
/// `row(h)`, obtained by reversing rows and columns.
pub fn verify_characteristic_right<F: Scalar>(y: &Mat<F>, h: &Mat<F>) -> Result<Report> {
    verify_characteristic(&y.reverse_rows().reverse_cols(), &h.reverse_cols())
}

/// Total spanlength of a folded right-ordered matrix split as
/// `y1 = strict_upper(y)`, `y0 = lower(y)`.
pub fn right_spanlength<F: Scalar>(y: &Mat<F>) -> usize {
    let n = y.rows();
    let uy = y.strict_upper().augment(&y.lower()).unwrap();
    (0..n)
        .map(|j| match uy.row(j).iter().position(|v| !v.is_zero()) {
            Some(s) if s <= n + j => n + j - s,
            _ => 0,
        })
        .sum()
}

/// Duality identities for unwrapped halves.
pub fn duality_report_parts<F: Scalar>(x0: &Mat<F>, x1: &Mat<F>, y1: &Mat<F>, y0: &Mat<F>) -> Result<Report> {
    let n = x0.rows();
    if [x0, x1, y1, y0].iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::DimensionMismatch("duality blocks must be n x n".into()));
    }
    let i = Mat::<F>::identity(n);
    let mi = -&i;
    let z = Mat::<F>::zeros(n, n);
    let x = x0 + x1;
    let y = y1 + y0;
    let t = |m: &Mat<F>| m.transpose();
    let mut r = Report::new();
    r.check("x_yt_zero", (&x * &t(&y)).is_zero());
    r.check("x1t_y1_zero", (&t(x1) * y1).is_zero());
    r.check("x0_y1t_plus_x1_y0t_identity", &(x0 * &t(y1)) + &(x1 * &t(y0)) == i);
    r.check("x0_y0t_minus_identity", x0 * &t(y0) == mi);
    r.check("x1_y1t_zero", (x1 * &t(y1)).is_zero());
    r.check("y0t_x0_minus_identity", &t(y0) * x0 == mi);
    r.check("y0t_x1_plus_y1t_x0_identity", &(&t(y0) * x1) + &(&t(y1) * x0) == i);
    r.check("y1t_x1_zero", (&t(y1) * x1).is_zero());
    r.check("yt_x_zero", (&t(&y) * &x).is_zero());
    let left = x0.augment(x1)?.stack(&z.augment(x0)?)?;
    let right = y0.augment(&z)?.stack(&y1.augment(y0)?)?;
    let want = mi.augment(&i)?.stack(&z.augment(&mi)?)?;
    r.check("block_identity", &left * &right.transpose() == want);
    Ok(r)
}

/// Duality identities for folded matrices, split by triangular parts.
pub fn duality_report<F: Scalar>(x: &Mat<F>, y: &Mat<F>) -> Result<Report> {
    if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
        return Err(Error::DimensionMismatch("X and Y must be square of equal size".into()));
    }
    duality_report_parts(&x.upper(), &x.strict_lower(), &y.strict_upper(), &y.lower())
}

/// Result of [`transpose_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransposeCheck {
    /// Spanlength of `X^T` read as a right-ordered matrix.
    pub xt_spanlength: usize,
    /// `|J1| n`, the spanlength of any characteristic matrix of the column space.
    pub bound: usize,
    pub report: Report,
}

/// Whether `X^T` is a right-ordered characteristic matrix for the column
/// space of `X`, plus the factorizations available for reduced pairs.
pub fn transpose_check<F: Scalar>(pair: &CharPair<F>) -> Result<TransposeCheck> {
    let n = pair.n;
    let x = &pair.x;
    let xt = x.transpose();
    let w_basis = xt.rref_left().select_rows(&(0..xt.rank()).collect::<Vec<_>>());
    let bound = (n - w_basis.rows()) * n;
    let xt_spanlength = right_spanlength(&xt);
    let mut r = Report::new();
    let v = verify_characteristic_right(&xt, &w_basis)?;
    r.check("xt_characteristic_for_column_space", v.all_pass());
    r.check("xt_spanlength_is_j1_n", xt_spanlength == bound);
    if pair.reduced {
        let p = &pair.profile;
        let all: Vec<usize> = (0..n).collect();
        let g = x.select_rows(&p.i0);
        r.check("g_rows_of_x_are_g01", g == pair.g);
        let w = x.select(&all, &p.i1).transpose();
        r.check("w_in_msf", is_msf(&w).unwrap_or(false));
        let h = pair.y.select_rows(&p.j0);
        r.check("h_rows_of_y_are_h10", h == pair.h);
        let vv = pair.y.select(&all, &p.j1).transpose();
        r.check("v_in_msf", is_msf(&vv).unwrap_or(false));
        let w0t = &x.select(&all, &p.i1) * &x.select(&p.i0, &p.i1).inverse()?;
        r.check("x_equals_w0t_g01", &w0t * &pair.g == *x);
        r.check("w0_systematic_on_i0", w0t.select_rows(&p.i0) == Mat::identity(p.i0.len()));
        let v1t = &pair.y.select(&all, &p.j1) * &pair.y.select(&p.j0, &p.j1).inverse()?;
        r.check("y_equals_v1t_h10", &v1t * &pair.h == pair.y);
        r.check("v1_systematic_on_j0", v1t.select_rows(&p.j0) == Mat::identity(p.j0.len()));
    }
    Ok(TransposeCheck { xt_spanlength, bound, report: r })
}

fn poly_mul<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

fn trim<F: Scalar>(mut p: Vec<F>) -> Vec<F> {
    while p.len() > 1 && p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

/// Circulant left-ordered matrix: row `i` holds `x^i c(x) mod (x^n - 1)`.
pub fn circulant_left<F: Scalar>(c: &[F], n: usize) -> Mat<F> {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for (k, &ck) in c.iter().enumerate() {
            m[(i, (i + k) % n)] = m[(i, (i + k) % n)] + ck;
        }
    }
    m
}

/// Circulant right-ordered matrix: row `j` holds `d` reversed, ending at `j`.
pub fn circulant_right<F: Scalar>(d: &[F], n: usize) -> Mat<F> {
    let mut m = Mat::zeros(n, n);
    for j in 0..n {
        for (k, &dk) in d.iter().enumerate() {
            let col = (j + n * d.len() - k) % n;
            m[(j, col)] = m[(j, col)] + dk;
        }
    }
    m
}

/// Cyclic code generated by `c(x)`, `c(x) d(x) = x^n - 1`, coefficients low
/// degree first. Checks that the circulants are the reduced pair and that
/// transposition exchanges `X` and `Y` of the reversed code.
pub fn cyclic_transpose_check<F: Scalar>(c: &[F], d: &[F], n: usize) -> Result<Report> {
    let c = trim(c.to_vec());
    let d = trim(d.to_vec());
    let mut target = vec![F::zero(); n + 1];
    target[0] = -F::one();
    target[n] = F::one();
    if c.is_empty() || d.is_empty() || trim(poly_mul(&c, &d)) != target {
        return Err(Error::NotFactorOfXnMinus1);
    }
    let lead = *c.last().unwrap();
    let c: Vec<F> = c.iter().map(|&x| x * lead.inv().unwrap()).collect();
    let d: Vec<F> = d.iter().map(|&x| x * lead).collect();
    let k = n + 1 - c.len();
    let g = Mat::from_fn(k, n, |i, j| if j >= i && j - i < c.len() { c[j - i] } else { F::zero() });
    let pair = char_pair_reduced(&g)?;
    let xc = circulant_left(&c, n);
    let yd = circulant_right(&d, n);
    let rev = g.reverse_cols();
    let h = &pair.h;
    let mut r = Report::new();
    r.check("circulant_x_is_reduced", xc == pair.x);
    r.check("circulant_y_is_reduced_dual", yd == pair.y);
    r.check("x_transpose_is_y_of_reversed", xc.transpose() == y_reduced(&rev)?);
    r.check("y_transpose_is_x_of_reversed", y_reduced(&g)?.transpose() == x_reduced(&rev)?);
    if h.rows() > 0 {
        let hrev = h.reverse_cols();
        r.check("dual_y_transpose_is_x_of_reversed_dual", yd.transpose() == x_reduced(&hrev)?);
        r.check("dual_x_transpose_is_y_of_reversed_dual", x_reduced(h)?.transpose() == y_reduced(&hrev)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type M2 = Mat<Fp<2>>;
    type M3 = Mat<Fp<3>>;

    fn gf3_pair() -> CharPair<Fp<3>> {
        char_pair_reduced(&M3::from_ints(&[[2, 2, 1, 0], [1, 0, 1, 2]])).unwrap()
    }

    #[test]
    fn prop_conditions_on_reduced_x() {
        let p = gf3_pair();
        assert!(verify_characteristic(&p.x, &p.g).unwrap().all_pass());
        assert!(verify_characteristic_right(&p.y, &p.h).unwrap().all_pass());
        let id = M3::identity(3);
        assert!(verify_characteristic(&id, &id).unwrap().all_pass());
    }

    #[test]
    fn longer_span_fails_b() {
        let p = gf3_pair();
        let mut x = p.x.clone();
        let r1 = x.row(1).to_vec();
        crate::matrix::axpy(x.row_mut(0), Fp::new(1), &r1);
        let rep = verify_characteristic(&x, &p.g).unwrap();
        assert_eq!(rep.get("b_total_spanlength"), Some(false));
        assert_eq!(rep.get("row_space_equals_code"), Some(true));
    }

    #[test]
    fn duality_of_gf3_pair() {
        let p = gf3_pair();
        assert!(duality_report(&p.x, &p.y).unwrap().all_pass());
        let mut y2 = p.y.clone();
        for v in y2.row_mut(0) {
            *v *= Fp::new(2);
        }
        let r = duality_report(&p.x, &y2).unwrap();
        assert_eq!(r.get("x_yt_zero"), Some(true));
        assert_eq!(r.get("yt_x_zero"), Some(false));
    }

    #[test]
    fn transpose_examples() {
        let t = transpose_check(&gf3_pair()).unwrap();
        assert!(t.report.all_pass(), "{}", t.report);
        let x = M2::from_ints(&[[1, 1, 0, 0], [1, 1, 1, 1], [0, 0, 1, 1], [1, 1, 1, 1]]);
        let g = M2::from_ints(&[[1, 1, 0, 0], [0, 0, 1, 1]]);
        assert!(verify_characteristic(&x, &g).unwrap().all_pass());
        let pair = super::super::dual_char(&x).unwrap();
        assert!(!pair.reduced);
        let t = transpose_check(&pair).unwrap();
        assert_eq!(t.bound, 8);
        assert_eq!(t.xt_spanlength, 10);
        assert_eq!(t.report.get("xt_characteristic_for_column_space"), Some(false));
    }

    #[test]
    fn cyclic_examples() {
        let f3 = |v: &[i64]| v.iter().map(|&x| Fp::<3>::from_i64(x)).collect::<Vec<_>>();
        let r = cyclic_transpose_check(&f3(&[-1, 1]), &f3(&[1, 1, 1, 1]), 4).unwrap();
        assert!(r.all_pass(), "{r}");
        let r = cyclic_transpose_check(&f3(&[1]), &f3(&[-1, 0, 0, 1]), 3).unwrap();
        assert!(r.all_pass(), "{r}");
        let f2 = |v: &[i64]| v.iter().map(|&x| Fp::<2>::from_i64(x)).collect::<Vec<_>>();
        let r = cyclic_transpose_check(&f2(&[1, 1]), &f2(&[1, 1, 1]), 3).unwrap();
        assert!(r.all_pass(), "{r}");
        assert_eq!(cyclic_transpose_check(&f2(&[1, 1]), &f2(&[1, 1]), 3), Err(Error::NotFactorOfXnMinus1));
    }
}
