//! The critical length `μ(d, k)`.
//!
//! For `p ∈ (0, (q-1)/q)` let
//!
//! ```text
//! f(p) = ln(1 - Qp) / ln(1 - p),    g(p) = -1 / ln(1 - p),
//! h(p) = d·f(p) + κ·g(p)
//! ```
//!
//! with `κ = k ln q - ln(q-1)` for linear codes and `κ = 2k ln q` (where
//! `k = log_q M`) for arbitrary codes. Any code of length `n ≥ h(p)` for some
//! `p` is bad, and so is its dual in the linear case. `h` is convex, and its
//! minimum over the interval is `μ(d, k)`.

use alloc::format;

use crate::error::{Error, Result};
use crate::num;
use crate::ue_probability::{big_q, check_q, p_max};

fn check_interior(q: u32, p: f64) -> Result<()> {
    check_q(q)?;
    let pmax = p_max(q);
    if !(p > 0.0 && p < pmax) {
        return Err(Error::Domain {
            name: "p",
            value: p,
            range: format!("(0, {pmax})"),
        });
    }
    Ok(())
}

/// `ln(1 - p)` and `ln(1 - Qp)`.
#[inline]
fn logs(q: u32, p: f64) -> (f64, f64) {
    (num::ln_1m(p), num::ln_1m(big_q(q) * p))
}

/// `f(p) = ln(1 - Qp) / ln(1 - p)`: increasing and convex, from `Q` at `0+` to `+∞`.
pub fn f_eval(q: u32, p: f64) -> Result<f64> {
    check_interior(q, p)?;
    let (l1, l2) = logs(q, p);
    Ok(l2 / l1)
}

/// `g(p) = -1 / ln(1 - p)`: decreasing and convex, from `+∞` down to `1/ln q`.
///
/// Unlike `f`, `g` is finite at `p = (q-1)/q`, so that endpoint is accepted.
pub fn g_eval(q: u32, p: f64) -> Result<f64> {
    check_q(q)?;
    if p != p_max(q) {
        check_interior(q, p)?;
    }
    Ok(-1.0 / num::ln_1m(p))
}

pub fn f_prime(q: u32, p: f64) -> Result<f64> {
    check_interior(q, p)?;
    let (l1, l2) = logs(q, p);
    let bq = big_q(q);
    let (a, b) = (1.0 - p, 1.0 - bq * p);
    Ok((-bq * a * l1 + b * l2) / (a * b * l1 * l1))
}

/// `g'(p) = -1 / ((1 - p) ln²(1 - p))`, negative since `g` decreases.
pub fn g_prime(q: u32, p: f64) -> Result<f64> {
    check_interior(q, p)?;
    let l1 = num::ln_1m(p);
    Ok(-1.0 / ((1.0 - p) * l1 * l1))
}

/// Parameters `(q, d, k)` of the threshold `h(p)`, linear or not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdProblem {
    q: u32,
    d: u64,
    k: f64,
    linear: bool,
    kappa: f64,
}

impl ThresholdProblem {
    /// Linear `[n, k, d]` codes: `κ = k ln q - ln(q-1)`.
    pub fn linear(q: u32, d: u64, k: u32) -> Result<Self> {
        Self::build(q, d, k as f64, true)
    }

    /// Arbitrary codes with `q^k` words: `κ = 2k ln q`.
    pub fn nonlinear(q: u32, d: u64, k: f64) -> Result<Self> {
        Self::build(q, d, k, false)
    }

    /// Arbitrary codes with `m` words, `k = log_q m`.
    pub fn nonlinear_with_words(q: u32, d: u64, m: u64) -> Result<Self> {
        check_q(q)?;
        Self::build(q, d, num::ln(m as f64) / num::ln(q as f64), false)
    }

    fn build(q: u32, d: u64, k: f64, linear: bool) -> Result<Self> {
        check_q(q)?;
        if d == 0 {
            return Err(Error::Domain {
                name: "d",
                value: 0.0,
                range: "[1, ∞)".into(),
            });
        }
        let lnq = num::ln(q as f64);
        let kappa = if linear {
            k * lnq - num::ln(q as f64 - 1.0)
        } else {
            2.0 * k * lnq
        };
        // written positively so that NaN fails too
        let valid = k > 0.0 && kappa > 0.0 && kappa.is_finite();
        if !valid {
            return Err(Error::Domain {
                name: "k",
                value: k,
                range: "(0, ∞) with κ > 0".into(),
            });
        }
        Ok(Self {
            q,
            d,
            k,
            linear,
            kappa,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `κ / ln q`, formed without dividing a rounded product by `ln q`.
    pub fn kappa_over_ln_q(&self) -> f64 {
        if self.linear {
            self.k - num::ln(self.q as f64 - 1.0) / num::ln(self.q as f64)
        } else {
            2.0 * self.k
        }
    }

    /// `h(p) = (d ln(1 - Qp) - κ) / ln(1 - p)`, which is `d·f(p) + κ·g(p)`.
    pub fn h(&self, p: f64) -> Result<f64> {
        check_interior(self.q, p)?;
        let (l1, l2) = logs(self.q, p);
        Ok((self.d as f64 * l2 - self.kappa) / l1)
    }

    pub fn h_prime(&self, p: f64) -> Result<f64> {
        check_interior(self.q, p)?;
        let (a, b, l1, _) = self.parts(p);
        Ok(self.h_prime_numerator(p) / (a * b * l1 * l1))
    }

    fn parts(&self, p: f64) -> (f64, f64, f64, f64) {
        let (l1, l2) = logs(self.q, p);
        (1.0 - p, 1.0 - big_q(self.q) * p, l1, l2)
    }

    // h' times its positive denominator (1-p)(1-Qp)ln²(1-p)
    fn h_prime_numerator(&self, p: f64) -> f64 {
        let (a, b, l1, l2) = self.parts(p);
        let d = self.d as f64;
        -d * big_q(self.q) * a * l1 + b * (d * l2 - self.kappa)
    }

    /// Lower bound on `μ`: `h > d·Q` and `h > κ/ln q` everywhere on the interval.
    pub fn mu_lower_bound(&self) -> f64 {
        (self.d as f64 * big_q(self.q)).max(self.kappa_over_ln_q())
    }

    /// Minimizes `h` by locating the root of `h'`.
    ///
    /// `h'` is increasing, negative near `0` and positive near `(q-1)/q`. The
    /// root is bracketed at `ε` and `(q-1)/q - ε` with `ε = 2^-40 (q-1)/q`, then
    /// narrowed by false position with a bisection fallback until the bracket is
    /// narrower than `1e-14 (q-1)/q`.
    pub fn minimize(&self) -> Result<MuResult> {
        const MAX_ITER: usize = 400;
        let pmax = p_max(self.q);
        let eps = pmax * libm::ldexp(1.0, -40);
        let tol = 1e-14 * pmax;

        let mut lo = eps;
        let mut flo = self.h_prime_numerator(lo);
        while !flo.is_finite() && lo < 0.25 * pmax {
            lo *= 2.0;
            flo = self.h_prime_numerator(lo);
        }
        let mut gap = eps;
        let mut hi = pmax - gap;
        let mut fhi = self.h_prime_numerator(hi);
        while !fhi.is_finite() && gap < 0.25 * pmax {
            gap *= 2.0;
            hi = pmax - gap;
            fhi = self.h_prime_numerator(hi);
        }
        if !(flo < 0.0 && fhi > 0.0) {
            return Err(Error::Bracket { lo, hi });
        }

        let mut iterations = 0;
        let mut last_width = hi - lo;
        let mut bisect = false;
        while hi - lo > tol && iterations < MAX_ITER {
            iterations += 1;
            let mut x = if bisect {
                0.5 * (lo + hi)
            } else {
                (lo * fhi - hi * flo) / (fhi - flo)
            };
            if !(x > lo && x < hi) {
                x = 0.5 * (lo + hi);
            }
            let fx = self.h_prime_numerator(x);
            if fx == 0.0 {
                lo = x;
                hi = x;
                break;
            }
            if fx < 0.0 {
                lo = x;
                flo = fx;
            } else {
                hi = x;
                fhi = fx;
            }
            // false position can creep from one side; force a bisection step
            // whenever a step fails to halve the bracket
            let width = hi - lo;
            bisect = !bisect && width > 0.5 * last_width;
            last_width = width;
        }
        if hi - lo > tol {
            return Err(Error::Bracket { lo, hi });
        }

        let p_m = 0.5 * (lo + hi);
        Ok(MuResult {
            p_m,
            mu: self.h(p_m)?,
            derivative_residual: self.h_prime(p_m)?,
            iterations,
        })
    }

    /// True iff `n ≥ μ`, in which case every code with these parameters is bad.
    pub fn beyond_threshold(&self, n: u64) -> Result<bool> {
        Ok(n as f64 >= self.minimize()?.mu)
    }
}

/// Minimum of `h`: `μ = h(p_m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuResult {
    pub p_m: f64,
    pub mu: f64,
    /// `h'(p_m)`.
    pub derivative_residual: f64,
    pub iterations: usize,
}
