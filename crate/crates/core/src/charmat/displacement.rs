use serde::Serialize;

use super::{reduced_bases, CharPair};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Mat;
use crate::report::Report;

/// Displacement matrices `D = X0 Y1^T`, `E = Y0 X1^T` and the diagonal
/// selectors `D0` (ones on `I0`) and `E0` (ones on `J0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: Scalar")]
pub struct Displacement<F> {
    pub d: Mat<F>,
    pub e: Mat<F>,
    pub d0: Mat<F>,
    pub e0: Mat<F>,
    pub report: Report,
}

fn selector<F: Scalar>(n: usize, on: &[usize]) -> Mat<F> {
    Mat::from_fn(n, n, |i, j| if i == j && on.contains(&i) { F::one() } else { F::zero() })
}

/// Displacement matrices of a pair in duality, with their identities checked.
pub fn displacement<F: Scalar>(pair: &CharPair<F>) -> Result<Displacement<F>> {
    let dual = super::verify::duality_report_parts(&pair.x0, &pair.x1, &pair.y1, &pair.y0)?;
    if !dual.all_pass() {
        return Err(Error::NotInDuality);
    }
    let n = pair.n;
    let t = |m: &Mat<F>| m.transpose();
    let d = &pair.x0 * &t(&pair.y1);
    let e = &pair.y0 * &t(&pair.x1);
    let d0 = selector(n, &pair.profile.i0);
    let e0 = selector(n, &pair.profile.j0);
    let (x, y) = (&pair.x, &pair.y);
    let mut r = Report::new();
    r.check("d_plus_et_identity", &d + &t(&e) == Mat::identity(n));
    r.check("d_idempotent", &d * &d == d);
    r.check("e_idempotent", &e * &e == e);
    r.check("d_et_zero", (&d * &t(&e)).is_zero());
    r.check("et_d_zero", (&t(&e) * &d).is_zero());
    r.check("d_d0_is_d", &d * &d0 == d);
    r.check("d0_d_is_d0", &d0 * &d == d0);
    r.check("dt_y_zero", (&t(&d) * y).is_zero());
    r.check("e_e0_is_e", &e * &e0 == e);
    r.check("e0_e_is_e0", &e0 * &e == e0);
    r.check("et_x_zero", (&t(&e) * x).is_zero());
    r.check("x_is_d_d0_x", &d * &(&d0 * x) == *x);
    Ok(Displacement { d, e, d0, e0, report: r })
}

/// Cyclic shift `S` with `e_i S = e_{i+1}`.
pub fn shift_matrix<F: Scalar>(n: usize) -> Mat<F> {
    Mat::from_fn(n, n, |i, j| if j == (i + 1) % n { F::one() } else { F::zero() })
}

/// Unwrapped rows moved one position back: row `i` goes to `i - 1`, row 0 to `n - 1`.
fn shift_unwrapped<F: Scalar>(u: &Mat<F>) -> Mat<F> {
    let n = u.rows();
    Mat::from_fn(n, 2 * n, |i, c| {
        if i + 1 < n {
            if c + 1 < 2 * n { u[(i + 1, c + 1)] } else { F::zero() }
        } else if c + 1 >= n {
            u[(0, c + 1 - n)]
        } else {
            F::zero()
        }
    })
}

fn rotate_cols<F: Scalar>(m: &Mat<F>) -> Mat<F> {
    let n = m.cols();
    Mat::from_fn(m.rows(), n, |i, j| m[(i, (j + 1) % n)])
}

/// The conjugate pair `(S X S^T, S Y S^T)`, characteristic for `(G S^T, H S^T)`.
pub fn shift_conjugate<F: Scalar>(pair: &CharPair<F>) -> Result<CharPair<F>> {
    let n = pair.n;
    let ux = shift_unwrapped(&pair.unwrapped_x());
    let uy = shift_unwrapped(&pair.unwrapped_y());
    let (g, h) = reduced_bases(&rotate_cols(&pair.g))?;
    let out = CharPair::from_parts(
        ux.block(0, 0, n, n),
        ux.block(0, n, n, n),
        uy.block(0, 0, n, n),
        uy.block(0, n, n, n),
        g,
        h,
    )?;
    Ok(out.mark_reduced())
}

/// Rank-one update of the displacement matrices under one cyclic shift:
/// `S^T D(X^S) S = D(X) + x y^T` and `S^T E(Y^S) S = E(Y) - y x^T`, with
/// `x`, `y` the first columns of `X`, `Y`.
pub fn shift_displacement_check<F: Scalar>(pair: &CharPair<F>) -> Result<Report> {
    let shifted = shift_conjugate(pair)?;
    let before = displacement(pair)?;
    let after = displacement(&shifted)?;
    let s = shift_matrix::<F>(pair.n);
    let back = |m: &Mat<F>| &(&s.transpose() * m) * &s;
    let x = pair.x.col(0);
    let y = pair.y.col(0);
    let dd = &back(&after.d) - &before.d;
    let de = &back(&after.e) - &before.e;
    let mut r = Report::new();
    r.check("d_update_is_x_yt", dd == Mat::outer(&x, &y));
    r.check("e_update_is_minus_y_xt", de == -&Mat::outer(&y, &x));
    r.check("d_update_rank_at_most_one", dd.rank() <= 1);
    r.check("shifted_pair_in_duality", after.report.all_pass());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmat::char_pair_reduced;
    use crate::field::Fp;

    type M2 = Mat<Fp<2>>;
    type M3 = Mat<Fp<3>>;

    #[test]
    fn gf3_displacement() {
        let pair = char_pair_reduced(&M3::from_ints(&[[2, 2, 1, 0], [1, 0, 1, 2]])).unwrap();
        let d = displacement(&pair).unwrap();
        assert!(d.report.all_pass(), "{}", d.report);
        assert_eq!(d.d, M3::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [2, 2, 0, 0], [1, 2, 0, 0]]));
        assert_eq!(d.e, M3::from_ints(&[[0, 0, 1, 2], [0, 0, 1, 1], [0, 0, 1, 0], [0, 0, 0, 1]]));
    }

    #[test]
    fn identity_code_displacement() {
        let pair = char_pair_reduced(&M3::identity(3)).unwrap();
        let d = displacement(&pair).unwrap();
        assert!(d.report.all_pass());
        assert_eq!(d.d, M3::identity(3));
        assert!(d.e.is_zero());
    }

    #[test]
    fn shifts() {
        for pair in [
            char_pair_reduced(&M3::from_ints(&[[2, 2, 1, 0], [1, 0, 1, 2]])).unwrap(),
            char_pair_reduced(&M3::identity(2)).unwrap(),
        ] {
            let r = shift_displacement_check(&pair).unwrap();
            assert!(r.all_pass(), "{r}");
            let mut p = pair.clone();
            for _ in 0..pair.n {
                p = shift_conjugate(&p).unwrap();
            }
            assert_eq!((p.x, p.y), (pair.x.clone(), pair.y.clone()));
        }
        let bin = char_pair_reduced(&M2::from_ints(&[[1, 1, 1, 0, 0], [0, 1, 1, 0, 1], [0, 0, 1, 1, 0]])).unwrap();
        assert!(shift_displacement_check(&bin).unwrap().all_pass());
    }
}
