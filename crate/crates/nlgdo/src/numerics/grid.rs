use crate::error::{Error, Result};

/// Truncated 1D domain. The physics lives on the half-line `[0, ∞)` or the
/// full line; numerically we cut at `L` (or `±L`) and require refinement in
/// `L` to be checked wherever truncation error matters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// `[0, L]`
    HalfLine { l: f64 },
    /// `[-L, L]`
    FullLine { l: f64 },
}

impl Domain {
    pub fn bounds(&self) -> (f64, f64) {
        match *self {
            Domain::HalfLine { l } => (0.0, l),
            Domain::FullLine { l } => (-l, l),
        }
    }

    /// Length of the truncated interval.
    pub fn measure(&self) -> f64 {
        let (a, b) = self.bounds();
        b - a
    }

    pub fn cutoff(&self) -> f64 {
        match *self {
            Domain::HalfLine { l } | Domain::FullLine { l } => l,
        }
    }
}

/// Quadrature/collocation rule for [`Grid`] construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRule {
    /// Gauss–Legendre nodes and weights mapped onto the interval.
    GaussLegendre,
    /// Equally spaced nodes including both endpoints, trapezoidal weights.
    UniformTrapezoid,
    /// Equally spaced nodes on `[a, b)` with the endpoint identified with the
    /// start; flat weights. Required for periodic discretizations.
    UniformPeriodic,
}

/// Shared discretization contract: strictly increasing nodes with positive
/// quadrature weights summing to the measure of the truncated domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    domain: Domain,
    rule: QuadRule,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Grid {
    /// Build a grid with `n` nodes. Rejects `n < 8` and `L <= 0`, which
    /// signal an unusable discretization.
    pub fn new(domain: Domain, n: usize, rule: QuadRule) -> Result<Grid> {
        if n < 8 {
            return Err(Error::InvalidGrid(format!("need n >= 8 nodes, got {n}")));
        }
        let l = domain.cutoff();
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::InvalidGrid(format!("cutoff L must be positive, got {l}")));
        }
        let (a, b) = domain.bounds();
        let (nodes, weights) = match rule {
            QuadRule::GaussLegendre => {
                let (x, w) = gauss_legendre(n);
                let mid = 0.5 * (a + b);
                let half = 0.5 * (b - a);
                (
                    x.iter().map(|&t| mid + half * t).collect(),
                    w.iter().map(|&w| half * w).collect(),
                )
            }
            QuadRule::UniformTrapezoid => {
                let h = (b - a) / (n - 1) as f64;
                let nodes: Vec<f64> = (0..n).map(|j| a + j as f64 * h).collect();
                let mut weights = vec![h; n];
                weights[0] = 0.5 * h;
                weights[n - 1] = 0.5 * h;
                (nodes, weights)
            }
            QuadRule::UniformPeriodic => {
                let h = (b - a) / n as f64;
                let nodes: Vec<f64> = (0..n).map(|j| a + j as f64 * h).collect();
                (nodes, vec![h; n])
            }
        };
        Ok(Grid { domain, rule, nodes, weights })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rule(&self) -> QuadRule {
        self.rule
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Period of the underlying interval; only meaningful for periodic rules.
    pub fn period(&self) -> f64 {
        self.domain.measure()
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self.rule, QuadRule::UniformTrapezoid | QuadRule::UniformPeriodic)
    }

    /// Quadrature of a sampled integrand.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    /// Index of the node closest to `x`.
    pub fn nearest_node(&self, x: f64) -> usize {
        let mut best = 0;
        for (i, &xi) in self.nodes.iter().enumerate() {
            if (xi - x).abs() < (self.nodes[best] - x).abs() {
                best = i;
            }
        }
        best
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence. Exact for polynomials of degree `2n - 1`.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess, then Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_and_deriv(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_n_and_bad_cutoff() {
        assert!(Grid::new(Domain::HalfLine { l: 1.0 }, 7, QuadRule::UniformTrapezoid).is_err());
        assert!(Grid::new(Domain::HalfLine { l: 0.0 }, 16, QuadRule::UniformTrapezoid).is_err());
        assert!(Grid::new(Domain::FullLine { l: -2.0 }, 16, QuadRule::GaussLegendre).is_err());
    }

    #[test]
    fn trapezoid_weights_sum_to_measure() {
        for n in [8, 17, 64] {
            let g = Grid::new(Domain::HalfLine { l: 1.0 }, n, QuadRule::UniformTrapezoid).unwrap();
            let total: f64 = g.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-12, "n={n}: {total}");
        }
    }

    #[test]
    fn gauss_integrates_x2_exactly() {
        let g = Grid::new(Domain::FullLine { l: 5.0 }, 64, QuadRule::GaussLegendre).unwrap();
        let vals: Vec<f64> = g.nodes().iter().map(|x| x * x).collect();
        let got = g.integrate(&vals);
        let exact = 250.0 / 3.0;
        assert!((got - exact).abs() / exact < 1e-12, "{got} vs {exact}");
    }

    #[test]
    fn gauss_gaussian_tail_matches_adaptive_quadrature() {
        // Independent oracle: adaptive Simpson for ∫_0^8 e^{-y²} dy; the tail
        // beyond 8 is below 1e-28 so the truncated value stands in for √π/2.
        fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
            let c = 0.5 * (a + b);
            (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b))
        }
        fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64) -> f64 {
            let c = 0.5 * (a + b);
            let left = simpson(f, a, c);
            let right = simpson(f, c, b);
            if (left + right - whole).abs() < 15.0 * tol {
                left + right + (left + right - whole) / 15.0
            } else {
                adaptive(f, a, c, left, 0.5 * tol) + adaptive(f, c, b, right, 0.5 * tol)
            }
        }
        let f = |y: f64| (-y * y).exp();
        let oracle = adaptive(&f, 0.0, 8.0, simpson(&f, 0.0, 8.0), 1e-14);
        assert!((oracle - 0.886_226_925_452_758).abs() < 1e-12);

        let g = Grid::new(Domain::HalfLine { l: 8.0 }, 96, QuadRule::GaussLegendre).unwrap();
        let vals: Vec<f64> = g.nodes().iter().map(|&y| f(y)).collect();
        assert!((g.integrate(&vals) - oracle).abs() < 1e-10);
    }

    #[test]
    fn nodes_increase_and_weights_positive() {
        for rule in [QuadRule::GaussLegendre, QuadRule::UniformTrapezoid, QuadRule::UniformPeriodic] {
            let g = Grid::new(Domain::FullLine { l: 3.0 }, 33, rule).unwrap();
            for i in 1..g.len() {
                assert!(g.nodes()[i] > g.nodes()[i - 1]);
            }
            assert!(g.weights().iter().all(|&w| w > 0.0));
            let total: f64 = g.weights().iter().sum();
            assert!((total - 6.0).abs() < 6.0 * 1e-10);
        }
    }

    #[test]
    fn gauss_exact_for_degree_2n_minus_1() {
        // Quadrature exactness property: degree 2n-1 on the mapped interval.
        let n = 12;
        let g = Grid::new(Domain::HalfLine { l: 2.0 }, n, QuadRule::GaussLegendre).unwrap();
        let p = 2 * n - 1;
        let vals: Vec<f64> = g.nodes().iter().map(|x| x.powi(p as i32)).collect();
        let exact = 2.0f64.powi(p as i32 + 1) / (p as f64 + 1.0);
        assert!((g.integrate(&vals) - exact).abs() / exact < 1e-12);
    }
}
