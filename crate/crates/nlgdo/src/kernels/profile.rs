use num_complex::Complex64;

/// Scalar profile of one (possibly complex) argument. Profiles describe the
/// local superpotential `f(x)`, separable form factors `u(x)`, and
/// convolution shapes `g(s)`. Named families are hand-coded with exact
/// complex evaluators and closed-form derivatives of every order; the wrapper
/// variants close the family under the algebra the kernel operations need
/// (squaring, differentiation, conjugation, reflection, partner assembly).
///
/// Units: when used as a superpotential, `f` carries momentum units so that
/// `p_x - i f` is dimensionally consistent (1/length in natural units).
#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    /// Identically zero.
    Zero,
    /// Constant value.
    Constant { value: f64 },
    /// `slope * z`; the Moshinsky–Szczepaniak choice is `slope = m ω`.
    Linear { slope: f64 },
    /// `slope * (z - i offset)`: the complex-shifted oscillator profile.
    LinearShifted { slope: f64, offset: f64 },
    /// `exp(-z² / (2 width²))`.
    Gaussian { width: f64 },
    /// `-depth` on `[from, to]`, zero elsewhere. Real axis only; not
    /// analytic, so complex-shift checks reject it.
    SquareWell { depth: f64, from: f64, to: f64 },
    /// Pointwise square of the inner profile.
    Squared(Box<Profile>),
    /// Derivative of the inner profile.
    Derivative(Box<Profile>),
    /// SUSY partner potential of a superpotential: `base² ± ħ base'`.
    PartnerPotential { base: Box<Profile>, plus: bool, hbar: f64 },
    /// Conjugate function `z ↦ conj(p(conj z))`; agrees with pointwise
    /// complex conjugation on the real axis and stays analytic off it.
    Conjugated(Box<Profile>),
    /// Reflection `z ↦ p(-z)`.
    Reflected(Box<Profile>),
}

impl Profile {
    pub fn gaussian(width: f64) -> Profile {
        Profile::Gaussian { width }
    }

    pub fn linear(slope: f64) -> Profile {
        Profile::Linear { slope }
    }

    pub fn linear_shifted(slope: f64, offset: f64) -> Profile {
        Profile::LinearShifted { slope, offset }
    }

    pub fn square_well(depth: f64, from: f64, to: f64) -> Profile {
        Profile::SquareWell { depth, from, to }
    }

    pub fn partner_potential(base: Profile, plus: bool, hbar: f64) -> Profile {
        Profile::PartnerPotential { base: Box::new(base), plus, hbar }
    }

    pub fn conjugated(self) -> Profile {
        Profile::Conjugated(Box::new(self))
    }

    pub fn reflected(self) -> Profile {
        Profile::Reflected(Box::new(self))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.deriv_n(z, 0)
    }

    pub fn deriv(&self, z: Complex64) -> Complex64 {
        self.deriv_n(z, 1)
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    /// `n`-th derivative at `z`, in closed form for every variant.
    pub fn deriv_n(&self, z: Complex64, n: usize) -> Complex64 {
        match self {
            Profile::Zero => Complex64::ZERO,
            Profile::Constant { value } => {
                if n == 0 {
                    Complex64::new(*value, 0.0)
                } else {
                    Complex64::ZERO
                }
            }
            Profile::Linear { slope } => match n {
                0 => slope * z,
                1 => Complex64::new(*slope, 0.0),
                _ => Complex64::ZERO,
            },
            Profile::LinearShifted { slope, offset } => match n {
                0 => slope * (z - Complex64::new(0.0, *offset)),
                1 => Complex64::new(*slope, 0.0),
                _ => Complex64::ZERO,
            },
            Profile::Gaussian { width } => gaussian_deriv(z, *width, n),
            Profile::SquareWell { depth, from, to } => {
                // distributional edge terms are ignored for n >= 1
                if n == 0 && z.re >= *from && z.re <= *to {
                    Complex64::new(-depth, 0.0)
                } else {
                    Complex64::ZERO
                }
            }
            Profile::Squared(p) => leibniz_product(p, p, z, n),
            Profile::Derivative(p) => p.deriv_n(z, n + 1),
            Profile::PartnerPotential { base, plus, hbar } => {
                let sq = leibniz_product(base, base, z, n);
                let fd = base.deriv_n(z, n + 1);
                if *plus {
                    sq + hbar * fd
                } else {
                    sq - hbar * fd
                }
            }
            Profile::Conjugated(p) => p.deriv_n(z.conj(), n).conj(),
            Profile::Reflected(p) => {
                let d = p.deriv_n(-z, n);
                if n % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }

    /// Whether the profile admits analytic continuation off the real axis.
    pub fn is_analytic(&self) -> bool {
        match self {
            Profile::Zero
            | Profile::Constant { .. }
            | Profile::Linear { .. }
            | Profile::LinearShifted { .. }
            | Profile::Gaussian { .. } => true,
            Profile::SquareWell { .. } => false,
            Profile::Squared(p) | Profile::Derivative(p) | Profile::Conjugated(p) | Profile::Reflected(p) => {
                p.is_analytic()
            }
            Profile::PartnerPotential { base, .. } => base.is_analytic(),
        }
    }

    /// Real-axis discontinuity locations of the profile value.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Profile::SquareWell { from, to, .. } => vec![*from, *to],
            Profile::Squared(p) | Profile::Derivative(p) | Profile::Conjugated(p) => p.breakpoints(),
            Profile::PartnerPotential { base, .. } => base.breakpoints(),
            Profile::Reflected(p) => {
                let mut b: Vec<f64> = p.breakpoints().iter().map(|s| -s).collect();
                b.sort_by(f64::total_cmp);
                b
            }
            _ => Vec::new(),
        }
    }
}

/// d^n/dz^n exp(-z²/(2a²)) via the Hermite recurrence:
/// the n-th derivative equals (-1/(a√2))^n H_n(z/(a√2)) exp(-z²/(2a²)).
fn gaussian_deriv(z: Complex64, width: f64, n: usize) -> Complex64 {
    let s = 1.0 / (width * std::f64::consts::SQRT_2);
    let t = z * s;
    let value = (-t * t).exp();
    let mut h0 = Complex64::ONE;
    if n == 0 {
        return value;
    }
    let mut h1 = 2.0 * t;
    for k in 1..n {
        let h2 = 2.0 * t * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    Complex64::new(-s, 0.0).powu(n as u32) * h1 * value
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out = out * (n - i) as f64 / (i + 1) as f64;
    }
    out
}

fn leibniz_product(p: &Profile, q: &Profile, z: Complex64, n: usize) -> Complex64 {
    (0..=n)
        .map(|k| binomial(n, k) * p.deriv_n(z, k) * q.deriv_n(z, n - k))
        .sum()
}
