use faer::linalg::solvers::Solve;
use faer::Mat;
use num_complex::Complex64;

use super::matrix::CMatrix;
use crate::error::{Error, Result};

/// Eigendecomposition of a dense complex matrix. Eigenvalues are sorted by
/// real part (ties by imaginary part); `vectors` holds the matching
/// eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<Complex64>,
    pub vectors: CMatrix,
}

fn to_faer(m: &CMatrix) -> Mat<Complex64> {
    Mat::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
}

/// Dense non-Hermitian eigendecomposition. Contract: each returned pair
/// satisfies `‖Mv − λv‖ / (‖M‖‖v‖) < 1e-10`; non-convergence is reported as
/// [`Error::EigenFailed`].
pub fn eig_dense(m: &CMatrix) -> Result<Eigen> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let n = m.rows();
    let evd = to_faer(m).eigen().map_err(|_| Error::EigenFailed)?;
    let s = evd.S();
    let u = evd.U();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (za, zb) = (s[a], s[b]);
        za.re.total_cmp(&zb.re).then(za.im.total_cmp(&zb.im))
    });
    let values: Vec<Complex64> = order.iter().map(|&j| s[j]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| u[(i, order[j])]);
    Ok(Eigen { values, vectors })
}

/// Solve `A x = b` by partial-pivot LU. A numerically singular system is
/// reported rather than regularized: the solve is rejected when the solution
/// is non-finite or its growth relative to the data exceeds `1e10`.
pub fn solve_dense(a: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    let cols = solve_dense_multi(a, std::slice::from_ref(&b.to_vec()))?;
    Ok(cols.into_iter().next().unwrap())
}

/// Multi-right-hand-side variant of [`solve_dense`] sharing one factorization.
pub fn solve_dense_multi(a: &CMatrix, rhs: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
    assert!(a.is_square(), "solve needs a square matrix");
    let n = a.rows();
    for b in rhs {
        assert_eq!(b.len(), n, "rhs length mismatch");
    }
    let lu = to_faer(a).partial_piv_lu();
    let bmat = Mat::from_fn(n, rhs.len(), |i, j| rhs[j][i]);
    let x = lu.solve(&bmat);
    let mut out = Vec::with_capacity(rhs.len());
    for j in 0..rhs.len() {
        let col: Vec<Complex64> = (0..n).map(|i| x[(i, j)]).collect();
        let max_x = col.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let max_b = rhs[j].iter().map(|z| z.norm()).fold(0.0, f64::max);
        if !max_x.is_finite() {
            return Err(Error::SingularSystem { growth: f64::INFINITY });
        }
        let growth = max_x / (1.0 + max_b);
        if growth > 1e10 {
            return Err(Error::SingularSystem { growth });
        }
        out.push(col);
    }
    Ok(out)
}
