//! Asymptotic series for the minimizer `p_m` and the minimum `μ(d, k)`.
//!
//! Two regimes are covered, each with a fixed table of published coefficients.
//!
//! * [`LargeDistance`] (`d → ∞`, `k/d → 0`), in powers of `y = sqrt(κ / (2dQ(Q-1)))`:
//!   `p_m ≈ Σ a_i y^i` and `μ ≈ dQ + 2dQ(Q-1) Σ b_i y^i`.
//! * [`LargeDimension`] (`k → ∞`, `d/k → 0`), in powers of `θ = d/κ` with
//!   `λ = ln q` and `Λ = ln(θλ/(q-1))` held fixed:
//!   `1 - Q p_m ≈ λ/(q-1) Σ A_i(Λ) θ^i` and `μ ≈ κ/λ Σ B_i(Λ) θ^i`.
//!
//! Both work for linear and arbitrary codes. Only `κ` differs, and it comes
//! from the [`ThresholdProblem`].
//!
//! Partial sums follow the "number of terms" convention: one term is the
//! leading value alone (`dQ` or `κ/λ`), and each extra term adds one
//! correction. Convergence of the full series is not known, so nothing here
//! gates on accuracy.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mu_threshold::ThresholdProblem;
use crate::num;
use crate::ue_probability::big_q;

/// Partial sums of a `μ` series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesApprox {
    /// `partial_sums[t - 1]` is the approximation with `t` terms.
    pub partial_sums: Vec<f64>,
    /// Approximate minimizer from the matching `p` series. `None` when
    /// only the leading term was requested.
    pub p_approx: Option<f64>,
}

impl SeriesApprox {
    pub fn terms(&self) -> usize {
        self.partial_sums.len()
    }

    pub fn last(&self) -> f64 {
        *self.partial_sums.last().expect("at least one term")
    }
}

/// `a_1..a_4` and `b_1..b_4` as functions of `Q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceCoefficients {
    pub a: [f64; 4],
    pub b: [f64; 4],
}

impl DistanceCoefficients {
    pub fn new(big_q: f64) -> Self {
        let q = big_q;
        let (q2, q3) = (q * q, q * q * q);
        Self {
            a: [
                2.0,
                -(8.0 * q + 2.0) / 3.0,
                (26.0 * q2 + 22.0 * q - 1.0) / 9.0,
                -(368.0 * q3 + 708.0 * q2 - 12.0 * q + 8.0) / 135.0,
            ],
            b: [
                1.0,
                (2.0 * q - 1.0) / 3.0,
                (2.0 * q2 - 2.0 * q - 1.0) / 18.0,
                -(4.0 * q3 - 6.0 * q2 - 6.0 * q + 4.0) / 135.0,
            ],
        }
    }
}

/// The `d ≫ k` regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeDistance {
    d: f64,
    big_q: f64,
    kappa: f64,
    y: f64,
}

impl LargeDistance {
    /// Most terms supported: the leading term plus four published corrections.
    pub const MAX_TERMS: usize = 5;

    pub fn new(problem: &ThresholdProblem) -> Self {
        let big_q = big_q(problem.q());
        let d = problem.d() as f64;
        let kappa = problem.kappa();
        let y = num::sqrt(kappa / (2.0 * d * big_q * (big_q - 1.0)));
        Self { d, big_q, kappa, y }
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn big_q(&self) -> f64 {
        self.big_q
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn coefficients(&self) -> DistanceCoefficients {
        DistanceCoefficients::new(self.big_q)
    }

    pub fn mu_series(&self, terms: usize) -> Result<SeriesApprox> {
        check_terms(terms, Self::MAX_TERMS)?;
        let c = self.coefficients();
        let lead = self.d * self.big_q;
        let scale = 2.0 * self.d * self.big_q * (self.big_q - 1.0);

        let mut partial_sums = Vec::with_capacity(terms);
        let mut correction = 0.0;
        let mut yi = 1.0;
        partial_sums.push(lead);
        for b in c.b.iter().take(terms - 1) {
            yi *= self.y;
            correction += b * yi;
            partial_sums.push(lead + scale * correction);
        }
        let p_approx = (terms > 1).then(|| poly_tail(&c.a[..terms - 1], self.y));
        Ok(SeriesApprox {
            partial_sums,
            p_approx,
        })
    }
}

/// `Σ_{i≥1} c_i x^i`.
fn poly_tail(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| (acc + ci) * x)
}

fn check_terms(terms: usize, max: usize) -> Result<()> {
    if terms == 0 || terms > max {
        return Err(Error::UnsupportedTerms { max, got: terms });
    }
    Ok(())
}

/// The polynomials `A_1..A_3` and `B_0..B_3`, whose coefficients depend on `λ = ln q`.
///
/// `B_2(x) = -(2x + λ - 2)/2`. The often-quoted `-(2x - λ + 2)/2` has the
/// sign of `λ - 2` flipped, and it misses the exact minimum by far more than
/// the neighbouring partial sums do. The `b2_resolution` test fits the true
/// second-order coefficient against exact minima and confirms this form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionPolynomials {
    lambda: f64,
}

impl DimensionPolynomials {
    pub fn new(lambda: f64) -> Self {
        Self { lambda }
    }

    /// `A_i(x)` for `i = 1..=3`.
    pub fn a(&self, i: usize, x: f64) -> f64 {
        let l = self.lambda;
        match i {
            1 => 1.0,
            2 => x + l - 1.0,
            3 => (2.0 * x * x + (4.0 * l - 2.0) * x + 2.0 * l * l - 3.0 * l) / 2.0,
            _ => panic!("A_{i} is not tabulated"),
        }
    }

    /// `B_i(x)` for `i = 0..=3`.
    pub fn b(&self, i: usize, x: f64) -> f64 {
        let l = self.lambda;
        match i {
            0 => 1.0,
            1 => -(x - 1.0),
            2 => -(2.0 * x + l - 2.0) / 2.0,
            3 => -(3.0 * x * x + 3.0 * l * x + l * l - 3.0) / 6.0,
            _ => panic!("B_{i} is not tabulated"),
        }
    }
}

/// The `k ≫ d` regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeDimension {
    q: u32,
    kappa: f64,
    lead: f64,
    lambda: f64,
    theta: f64,
    big_lambda: f64,
}

impl LargeDimension {
    /// Most terms supported: `B_0` plus three corrections.
    pub const MAX_TERMS: usize = 4;

    pub fn new(problem: &ThresholdProblem) -> Self {
        let q = problem.q();
        let kappa = problem.kappa();
        let lambda = num::ln(q as f64);
        let theta = problem.d() as f64 / kappa;
        let big_lambda = num::ln(theta * lambda / (q as f64 - 1.0));
        Self {
            q,
            kappa,
            lead: problem.kappa_over_ln_q(),
            lambda,
            theta,
            big_lambda,
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `Λ = ln(θλ/(q-1))`.
    pub fn big_lambda(&self) -> f64 {
        self.big_lambda
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn polynomials(&self) -> DimensionPolynomials {
        DimensionPolynomials::new(self.lambda)
    }

    pub fn mu_series(&self, terms: usize) -> Result<SeriesApprox> {
        check_terms(terms, Self::MAX_TERMS)?;
        let poly = self.polynomials();
        let x = self.big_lambda;
        let lead = self.lead;

        let mut partial_sums = Vec::with_capacity(terms);
        let mut s = 0.0;
        let mut ti = 1.0;
        for i in 0..terms {
            s += poly.b(i, x) * ti;
            ti *= self.theta;
            partial_sums.push(lead * s);
        }

        let p_approx = (terms > 1).then(|| {
            let a: Vec<f64> = (1..terms).map(|i| poly.a(i, x)).collect();
            let one_minus_qp = self.lambda / (self.q as f64 - 1.0) * poly_tail(&a, self.theta);
            (1.0 - one_minus_qp) / big_q(self.q)
        });
        Ok(SeriesApprox {
            partial_sums,
            p_approx,
        })
    }
}
