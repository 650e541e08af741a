//! Test functions `phi` with analytic gradient and Hessian.
//!
//! The error-expansion measurements are themselves first order in the time
//! step, so the derivatives entering the generator and the source terms must
//! be exact rather than finite-differenced; finite differences appear only in
//! the consistency tests.

/// A function of the signal state with exact first and second derivatives.
#[derive(Debug, Clone, PartialEq)]
pub enum TestFn {
    /// Constant one.
    One,
    /// Coordinate `x_i`.
    Coord(usize),
    /// `x_i^2`.
    Square(usize),
    /// `tanh(x_i)`.
    TanhCoord(usize),
    /// `x_0^k`, the scalar Galerkin building block.
    Monomial(u32),
    /// Polynomial in `x_0` with coefficients `c_0 + c_1 x + ...`.
    Poly(Vec<f64>),
    /// The two-dimensional product `x_0 * x_1`.
    ProductXY,
}

impl TestFn {
    pub fn name(&self) -> String {
        match self {
            TestFn::One => "one".into(),
            TestFn::Coord(i) => format!("x{i}"),
            TestFn::Square(i) => format!("x{i}^2"),
            TestFn::TanhCoord(i) => format!("tanh(x{i})"),
            TestFn::Monomial(k) => format!("x^{k}"),
            TestFn::Poly(_) => "poly".into(),
            TestFn::ProductXY => "x0*x1".into(),
        }
    }

    /// Polynomial growth exponent `m` with `|phi(x)| <= C (1 + |x|^m)`.
    pub fn growth_degree(&self) -> u32 {
        match self {
            TestFn::One | TestFn::TanhCoord(_) => 0,
            TestFn::Coord(_) => 1,
            TestFn::Square(_) | TestFn::ProductXY => 2,
            TestFn::Monomial(k) => *k,
            TestFn::Poly(c) => c.len().saturating_sub(1) as u32,
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            TestFn::One => 1.0,
            TestFn::Coord(i) => x[*i],
            TestFn::Square(i) => x[*i] * x[*i],
            TestFn::TanhCoord(i) => x[*i].tanh(),
            TestFn::Monomial(k) => x[0].powi(*k as i32),
            TestFn::Poly(c) => horner(c, x[0]),
            TestFn::ProductXY => x[0] * x[1],
        }
    }

    /// Writes the gradient into `out` (length `x.len()`).
    pub fn grad(&self, x: &[f64], out: &mut [f64]) {
        out.fill(0.0);
        match self {
            TestFn::One => {}
            TestFn::Coord(i) => out[*i] = 1.0,
            TestFn::Square(i) => out[*i] = 2.0 * x[*i],
            TestFn::TanhCoord(i) => {
                let t = x[*i].tanh();
                out[*i] = 1.0 - t * t;
            }
            TestFn::Monomial(k) => {
                out[0] = if *k == 0 { 0.0 } else { *k as f64 * x[0].powi(*k as i32 - 1) };
            }
            TestFn::Poly(c) => out[0] = horner_d1(c, x[0]),
            TestFn::ProductXY => {
                out[0] = x[1];
                out[1] = x[0];
            }
        }
    }

    /// Writes the Hessian into `out` (row-major, length `x.len()^2`).
    pub fn hess(&self, x: &[f64], out: &mut [f64]) {
        let d = x.len();
        out.fill(0.0);
        match self {
            TestFn::One | TestFn::Coord(_) => {}
            TestFn::Square(i) => out[*i * d + *i] = 2.0,
            TestFn::TanhCoord(i) => {
                let t = x[*i].tanh();
                out[*i * d + *i] = -2.0 * t * (1.0 - t * t);
            }
            TestFn::Monomial(k) => {
                out[0] = if *k < 2 {
                    0.0
                } else {
                    (*k * (*k - 1)) as f64 * x[0].powi(*k as i32 - 2)
                };
            }
            TestFn::Poly(c) => out[0] = horner_d2(c, x[0]),
            TestFn::ProductXY => {
                out[1] = 1.0;
                out[d] = 1.0;
            }
        }
    }

    /// The standard scalar battery used by the filter diagnostics.
    pub fn battery() -> Vec<TestFn> {
        vec![TestFn::One, TestFn::Coord(0), TestFn::Square(0), TestFn::TanhCoord(0)]
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

fn horner_d1(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &ck) in c.iter().enumerate().rev() {
        if k >= 1 {
            acc = acc * x + k as f64 * ck;
        }
    }
    acc
}

fn horner_d2(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &ck) in c.iter().enumerate().rev() {
        if k >= 2 {
            acc = acc * x + (k * (k - 1)) as f64 * ck;
        }
    }
    acc
}

/// Central finite difference of a scalar function, used by consistency tests.
pub fn central_diff<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], i: usize, step: f64) -> f64 {
    let mut xp = x.to_vec();
    let mut xm = x.to_vec();
    xp[i] += step;
    xm[i] -= step;
    (f(&xp) - f(&xm)) / (2.0 * step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{RngStream, StreamPurpose};
    use approx::assert_abs_diff_eq;
    use rand_distr::{Distribution, StandardNormal};

    fn probes(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = RngStream::new(seed, StreamPurpose::Aux(1)).rng();
        (0..count)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        let z: f64 = StandardNormal.sample(&mut rng);
                        2.0 * z
                    })
                    .collect()
            })
            .collect()
    }

    /// Gradient against central differences of the value (step 1e-5), Hessian
    /// against central differences of the analytic gradient.
    fn assert_derivatives_consistent(f: &TestFn, dim: usize) {
        let step = 1e-5;
        let mut grad = vec![0.0; dim];
        let mut hess = vec![0.0; dim * dim];
        for x in probes(dim, 100, 23) {
            f.grad(&x, &mut grad);
            f.hess(&x, &mut hess);
            for i in 0..dim {
                let fd = central_diff(|p| f.eval(p), &x, i, step);
                let scale = grad[i].abs().max(1.0);
                assert!(
                    (grad[i] - fd).abs() / scale < 1e-6,
                    "{}: grad[{i}] {} vs fd {}",
                    f.name(),
                    grad[i],
                    fd
                );
                for j in 0..dim {
                    let fd2 = central_diff(
                        |p| {
                            let mut g = vec![0.0; dim];
                            f.grad(p, &mut g);
                            g[i]
                        },
                        &x,
                        j,
                        step,
                    );
                    let scale = hess[i * dim + j].abs().max(1.0);
                    assert!(
                        (hess[i * dim + j] - fd2).abs() / scale < 1e-6,
                        "{}: hess[{i},{j}] {} vs fd {}",
                        f.name(),
                        hess[i * dim + j],
                        fd2
                    );
                }
            }
        }
    }

    #[test]
    fn battery_derivatives_match_finite_differences() {
        for f in TestFn::battery() {
            assert_derivatives_consistent(&f, 1);
        }
        assert_derivatives_consistent(&TestFn::Monomial(5), 1);
        assert_derivatives_consistent(&TestFn::Poly(vec![0.3, -1.2, 0.5, 0.07]), 1);
        assert_derivatives_consistent(&TestFn::ProductXY, 2);
        assert_derivatives_consistent(&TestFn::Square(1), 3);
    }

    #[test]
    fn horner_matches_naive_polynomial() {
        let c = [1.0, -2.0, 3.0, 0.5];
        let x = 1.7;
        let naive: f64 = c.iter().enumerate().map(|(k, ck)| ck * x.powi(k as i32)).sum();
        assert_abs_diff_eq!(horner(&c, x), naive, epsilon = 1e-12);
        assert_abs_diff_eq!(horner_d1(&c, x), -2.0 + 6.0 * x + 1.5 * x * x, epsilon = 1e-12);
        assert_abs_diff_eq!(horner_d2(&c, x), 6.0 + 3.0 * x, epsilon = 1e-12);
    }

    #[test]
    fn monomial_zero_is_constant() {
        let f = TestFn::Monomial(0);
        let mut g = vec![7.0];
        f.grad(&[2.0], &mut g);
        assert_eq!(f.eval(&[2.0]), 1.0);
        assert_eq!(g[0], 0.0);
    }
}
