//! Kernel representations and algebra for the nonlocal interaction
//! `(F̂φ)(x) = ∫ dx' f(x, x') φ(x')`.
//!
//! Four representations are kept symbolic as long as possible:
//! local-diagonal `f(x) δ(x-x')` (stored as a profile, never as a discretized
//! delta), separable rank one `λ u(x) u(x')`, convolution `g(x-x')`, and
//! grid-sampled matrices. The kernel may be complex; Hermiticity of `F̂` is
//! the special case `f(x,x') = f*(x',x)`.

mod profile;

pub use profile::Profile;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{second_derivative_matrix, Bc, CMatrix, Grid};

/// Model constants. Natural units `ħ = m = c = ω = 1` by default; `theta`
/// parameterizes the complex-translation metric `η = e^{-θ p_x}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams {
    pub hbar: f64,
    pub m: f64,
    pub c: f64,
    pub omega: f64,
    pub theta: f64,
}

impl Default for PhysParams {
    fn default() -> Self {
        PhysParams { hbar: 1.0, m: 1.0, c: 1.0, omega: 1.0, theta: 0.0 }
    }
}

impl PhysParams {
    pub fn with_theta(theta: f64) -> Self {
        PhysParams { theta, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hbar > 0.0 && self.m > 0.0 && self.c > 0.0) {
            return Err(Error::InvalidInput(format!(
                "hbar, m, c must be positive (got {}, {}, {})",
                self.hbar, self.m, self.c
            )));
        }
        Ok(())
    }
}

/// Tagged representation of the interaction kernel `f(x, x')`.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    /// `f(x) δ(x - x')`: the local limit, stored as a profile and applied as
    /// a multiplication operator.
    LocalDiagonal(Profile),
    /// `λ u(x) u(x')`.
    SeparableRank1 { coupling: Complex64, form: Profile },
    /// `g(x - x')`.
    Convolution(Profile),
    /// Kernel values sampled on a grid: `values[(i, j)] = f(x_i, x_j)`.
    GridSampled { grid: Grid, values: CMatrix },
}

fn grids_compatible(a: &Grid, b: &Grid) -> bool {
    a.len() == b.len()
        && a.nodes()
            .iter()
            .zip(b.nodes())
            .all(|(x, y)| (x - y).abs() <= 1e-10 * (1.0 + x.abs()))
}

impl Kernel {
    pub fn local(profile: Profile) -> Kernel {
        Kernel::LocalDiagonal(profile)
    }

    pub fn separable(coupling: Complex64, form: Profile) -> Kernel {
        Kernel::SeparableRank1 { coupling, form }
    }

    pub fn convolution(profile: Profile) -> Kernel {
        Kernel::Convolution(profile)
    }

    pub fn is_local(&self) -> bool {
        matches!(self, Kernel::LocalDiagonal(_))
    }

    /// Kernel value `f(z, z')` for the integral representations, allowing
    /// complex arguments where the profile is analytic. Local-diagonal
    /// kernels are distributions and have no pointwise value.
    pub fn eval(&self, zx: Complex64, zxp: Complex64) -> Result<Complex64> {
        match self {
            Kernel::LocalDiagonal(_) => Err(Error::UnsupportedRepresentation(
                "local-diagonal kernels have no pointwise two-argument value".into(),
            )),
            Kernel::SeparableRank1 { coupling, form } => Ok(coupling * form.eval(zx) * form.eval(zxp)),
            Kernel::Convolution(g) => Ok(g.eval(zx - zxp)),
            Kernel::GridSampled { .. } => Err(Error::UnsupportedRepresentation(
                "grid-sampled kernels cannot be evaluated off their grid".into(),
            )),
        }
    }

    /// Kernel values on the grid (no quadrature weights). Errors for the
    /// local-diagonal representation, which is handled analytically.
    pub fn matrix(&self, grid: &Grid) -> Result<CMatrix> {
        let n = grid.len();
        let xs = grid.nodes();
        match self {
            Kernel::LocalDiagonal(_) => Err(Error::UnsupportedRepresentation(
                "local-diagonal kernels are never discretized as a delta; use weighted_matrix".into(),
            )),
            Kernel::SeparableRank1 { coupling, form } => {
                let u: Vec<Complex64> = xs.iter().map(|&x| form.eval_real(x)).collect();
                Ok(CMatrix::from_fn(n, n, |i, j| coupling * u[i] * u[j]))
            }
            Kernel::Convolution(g) => {
                Ok(CMatrix::from_fn(n, n, |i, j| g.eval_real(xs[i] - xs[j])))
            }
            Kernel::GridSampled { grid: g, values } => {
                if !grids_compatible(g, grid) {
                    return Err(Error::GridMismatch { expected: g.len(), got: grid.len() });
                }
                Ok(values.clone())
            }
        }
    }

    /// The discretized integral operator: `f(x_i, x_j) w_j` for integral
    /// kernels, the diagonal multiplication matrix for the local limit.
    pub fn weighted_matrix(&self, grid: &Grid) -> Result<CMatrix> {
        let n = grid.len();
        match self {
            Kernel::LocalDiagonal(p) => {
                let mut m = CMatrix::zeros(n, n);
                for (i, &x) in grid.nodes().iter().enumerate() {
                    m[(i, i)] = p.eval_real(x);
                }
                Ok(m)
            }
            _ => {
                let mut m = self.matrix(grid)?;
                let w = grid.weights();
                for i in 0..n {
                    for j in 0..n {
                        m[(i, j)] *= w[j];
                    }
                }
                Ok(m)
            }
        }
    }

    /// Apply the kernel to a sampled wave function:
    /// `(F̂φ)_i = Σ_j w_j f(x_i, x_j) φ_j`, or the pointwise product in the
    /// local limit.
    pub fn apply(&self, grid: &Grid, phi: &[Complex64]) -> Result<Vec<Complex64>> {
        if phi.len() != grid.len() {
            return Err(Error::GridMismatch { expected: grid.len(), got: phi.len() });
        }
        match self {
            Kernel::LocalDiagonal(p) => Ok(grid
                .nodes()
                .iter()
                .zip(phi)
                .map(|(&x, v)| p.eval_real(x) * v)
                .collect()),
            _ => Ok(self.weighted_matrix(grid)?.mul_vec(phi)),
        }
    }

    /// Star composition `(f ⋆ f)(x, x') = ∫ dy f(x, y) f(y, x')`, the
    /// coordinate-space form of `F̂²`. Closed forms are used where the
    /// representation allows: the local limit squares the profile and a
    /// rank-one kernel stays rank one with coupling `λ² c_u`,
    /// `c_u = ∫ u²`.
    pub fn compose(&self, grid: &Grid) -> Result<Kernel> {
        match self {
            Kernel::LocalDiagonal(p) => Ok(Kernel::LocalDiagonal(Profile::Squared(Box::new(p.clone())))),
            Kernel::SeparableRank1 { coupling, form } => {
                let cu: Complex64 = grid
                    .nodes()
                    .iter()
                    .zip(grid.weights())
                    .map(|(&x, &w)| {
                        let u = form.eval_real(x);
                        w * u * u
                    })
                    .sum();
                Ok(Kernel::SeparableRank1 { coupling: coupling * coupling * cu, form: form.clone() })
            }
            _ => {
                let k = self.matrix(grid)?;
                let n = grid.len();
                let w = grid.weights();
                let values = CMatrix::from_fn(n, n, |i, j| {
                    (0..n).map(|l| w[l] * k[(i, l)] * k[(l, j)]).sum()
                });
                Ok(Kernel::GridSampled { grid: grid.clone(), values })
            }
        }
    }

    /// Symmetric derivative `(∂_x + ∂_{x'}) f(x, x')`. Vanishes identically
    /// for convolution kernels; for the local limit the delta-derivative
    /// terms cancel and the profile derivative survives.
    pub fn sym_derivative(&self, grid: &Grid) -> Result<Kernel> {
        match self {
            Kernel::LocalDiagonal(p) => {
                Ok(Kernel::LocalDiagonal(Profile::Derivative(Box::new(p.clone()))))
            }
            Kernel::SeparableRank1 { coupling, form } => {
                let n = grid.len();
                let xs = grid.nodes();
                let u: Vec<Complex64> = xs.iter().map(|&x| form.eval_real(x)).collect();
                let du: Vec<Complex64> = xs.iter().map(|&x| form.deriv(Complex64::new(x, 0.0))).collect();
                let values = CMatrix::from_fn(n, n, |i, j| coupling * (du[i] * u[j] + u[i] * du[j]));
                Ok(Kernel::GridSampled { grid: grid.clone(), values })
            }
            Kernel::Convolution(_) => Ok(Kernel::Convolution(Profile::Zero)),
            Kernel::GridSampled { grid: g, values } => {
                if !grids_compatible(g, grid) {
                    return Err(Error::GridMismatch { expected: g.len(), got: grid.len() });
                }
                let d1 = crate::numerics::derivative_matrix(grid, 1, Bc::None, crate::numerics::DEFAULT_STENCIL)?;
                // (∂_x + ∂_{x'}) K = D·K + K·Dᵀ
                let left = d1.matrix.matmul(values);
                let mut right = CMatrix::zeros(grid.len(), grid.len());
                for i in 0..grid.len() {
                    for j in 0..grid.len() {
                        right[(i, j)] = (0..grid.len()).map(|l| values[(i, l)] * d1.matrix[(j, l)]).sum();
                    }
                }
                let mut out = left;
                out.add_assign(&right);
                Ok(Kernel::GridSampled { grid: grid.clone(), values: out })
            }
        }
    }

    /// Hermitian adjoint: the kernel of `F̂†`, `f†(x,x') = f*(x',x)`. Stays
    /// in the same representation.
    pub fn adjoint(&self) -> Kernel {
        match self {
            Kernel::LocalDiagonal(p) => Kernel::LocalDiagonal(p.clone().conjugated()),
            Kernel::SeparableRank1 { coupling, form } => Kernel::SeparableRank1 {
                coupling: coupling.conj(),
                form: form.clone().conjugated(),
            },
            Kernel::Convolution(g) => Kernel::Convolution(g.clone().reflected().conjugated()),
            Kernel::GridSampled { grid, values } => {
                Kernel::GridSampled { grid: grid.clone(), values: values.adjoint() }
            }
        }
    }

    /// Pseudo-Hermiticity residual under the complex-translation metric.
    ///
    /// Both kernel arguments are shifted by `+iħθ` and the result is tested
    /// for ordinary Hermiticity:
    /// `max |f(x_i+iħθ, x_j+iħθ) - f*(x_j+iħθ, x_i+iħθ)|` over the sampled
    /// nodes (diagonal only in the local limit). A vanishing residual means
    /// `e^{-θ p_x}` conjugates `F̂` into a Hermitian operator, so the Dirac
    /// Hamiltonian built on `f` is pseudo-Hermitian with metric
    /// `η = e^{-2θ p_x}`; at `θ = 0` the check reduces to ordinary kernel
    /// Hermiticity. For the shifted oscillator `f = mω(x - ia)` the residual
    /// vanishes at `θ = a/ħ`.
    ///
    /// This is a sufficiency check only: kernels failing it may still have
    /// real spectra.
    pub fn shift_residual(&self, params: &PhysParams, grid: &Grid) -> Result<f64> {
        params.validate()?;
        let shift = Complex64::new(0.0, params.hbar * params.theta);
        let xs = grid.nodes();
        match self {
            Kernel::GridSampled { .. } => Err(Error::UnsupportedRepresentation(
                "no continuation rule for grid-sampled kernels".into(),
            )),
            Kernel::LocalDiagonal(p) => {
                if !p.is_analytic() {
                    return Err(Error::UnsupportedRepresentation(
                        "shift residual requires a named analytic family".into(),
                    ));
                }
                let mut r: f64 = 0.0;
                for &x in xs {
                    let v = p.eval(Complex64::new(x, 0.0) + shift);
                    r = r.max((v - v.conj()).norm());
                }
                Ok(r)
            }
            _ => {
                let analytic = match self {
                    Kernel::SeparableRank1 { form, .. } => form.is_analytic(),
                    Kernel::Convolution(g) => g.is_analytic(),
                    _ => unreachable!(),
                };
                if !analytic {
                    return Err(Error::UnsupportedRepresentation(
                        "shift residual requires a named analytic family".into(),
                    ));
                }
                let n = grid.len();
                let zs: Vec<Complex64> = xs.iter().map(|&x| Complex64::new(x, 0.0) + shift).collect();
                let mut r: f64 = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        let a = self.eval(zs[i], zs[j])?;
                        let b = self.eval(zs[j], zs[i])?.conj();
                        r = r.max((a - b).norm());
                    }
                }
                Ok(r)
            }
        }
    }

    /// Smallest node beyond which every kernel row norm
    /// `∫ |f(x, x')| dx'` (or `|f(x)|` in the local limit) stays below `tol`.
    /// Returns `None` if the kernel has not decayed by the end of the grid.
    pub fn decay_radius(&self, grid: &Grid, tol: f64) -> Result<Option<f64>> {
        let n = grid.len();
        let norms: Vec<f64> = match self {
            Kernel::LocalDiagonal(p) => grid.nodes().iter().map(|&x| p.eval_real(x).norm()).collect(),
            _ => {
                let k = self.matrix(grid)?;
                (0..n)
                    .map(|i| (0..n).map(|j| grid.weights()[j] * k[(i, j)].norm()).sum())
                    .collect()
            }
        };
        // smallest x such that all rows at or beyond it are below tol
        let mut radius = None;
        for i in (0..n).rev() {
            if norms[i] >= tol {
                break;
            }
            radius = Some(grid.nodes()[i]);
        }
        Ok(radius)
    }

    /// Real-axis discontinuities relevant for differencing stencils.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Kernel::LocalDiagonal(p) => p.breakpoints(),
            _ => Vec::new(),
        }
    }
}
