//! Undetected-error probabilities on the q-ary symmetric channel.
//!
//! A word sent over the channel keeps each symbol with probability `1 - p` and
//! turns it into each of the other `q - 1` symbols with probability `p / (q-1)`.
//! An error goes undetected when the received word is a different codeword:
//!
//! ```text
//! P_ue(C, p)  = Σ_{i≥1} A_i (p/(q-1))^i (1-p)^(n-i)
//! P⊥_ue(C, p) = |C|⁻¹ Σ_{i≥0} A_i (1-Qp)^i - (1-p)^n,      Q = q/(q-1)
//! ```
//!
//! For a linear code `P⊥_ue(C, p) = P_ue(C⊥, p)`. For a non-linear code it is
//! only a formal quantity, but it still satisfies the duality identity checked
//! by [`dual_identity_residual`].
//!
//! `C` is *good* if `P_ue(C, p) ≤ (|C|-1)/q^n` for all `p ∈ (0, (q-1)/q]`, and
//! *bad* if `P_ue(C, p) ≥ |C|/q^n` for some `p`. A code may be neither.

use alloc::format;

use crate::code_model::{CodeSize, DistributionA};
use crate::error::{Error, Result};
use crate::num;

/// Above this length, powers are evaluated through logarithms.
pub const LOG_SPACE_LENGTH: usize = 64;

/// Relative tolerance used by [`classify`] at the good and bad boundaries.
pub const VERDICT_TOL: f64 = 1e-12;

/// Smallest grid accepted by [`classify`].
pub const MIN_GRID: usize = 64;

/// A channel parameter `p ∈ [0, (q-1)/q]` together with `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelPoint {
    q: u32,
    p: f64,
}

impl ChannelPoint {
    pub fn new(q: u32, p: f64) -> Result<Self> {
        check_q(q)?;
        let pmax = p_max(q);
        if !(0.0..=pmax).contains(&p) {
            return Err(Error::Domain {
                name: "p",
                value: p,
                range: format!("[0, {pmax}]"),
            });
        }
        Ok(Self { q, p })
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn p(self) -> f64 {
        self.p
    }

    /// `Q = q / (q - 1)`.
    pub fn big_q(self) -> f64 {
        big_q(self.q)
    }

    /// `1 - Qp`, clamped at zero.
    pub fn dual_argument(self) -> f64 {
        let q = self.q as f64;
        (((q - 1.0) - q * self.p) / (q - 1.0)).max(0.0)
    }
}

pub(crate) fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::Domain {
            name: "q",
            value: q as f64,
            range: "[2, ∞)".into(),
        });
    }
    Ok(())
}

/// `(q - 1) / q`, the worst channel.
#[inline]
pub fn p_max(q: u32) -> f64 {
    (q as f64 - 1.0) / q as f64
}

#[inline]
pub fn big_q(q: u32) -> f64 {
    q as f64 / (q as f64 - 1.0)
}

/// `Σ_i A_i x^i` for `x ≥ 0`, smallest `i` first.
fn poly_sum(a: &DistributionA, x: f64, log_space: bool) -> f64 {
    let ln_x = num::ln(x);
    let mut s = 0.0;
    for i in 0..=a.n() {
        let ai = a.numerators()[i];
        if ai == 0 {
            continue;
        }
        let pow = if i == 0 {
            1.0
        } else if log_space {
            num::exp(i as f64 * ln_x)
        } else {
            num::powi(x, i as u32)
        };
        s += ai as f64 * pow;
    }
    s / a.denominator() as f64
}

/// `P_ue(C, p)` from the weight (or distance) distribution.
pub fn pue(a: &DistributionA, q: u32, p: f64) -> Result<f64> {
    let ch = ChannelPoint::new(q, p)?;
    let n = a.n();
    if ch.p == 0.0 {
        return Ok(0.0);
    }
    let x = ch.p / (q as f64 - 1.0);
    let mut s = 0.0;
    if n > LOG_SPACE_LENGTH {
        let (ln_x, ln_1mp) = (num::ln(x), num::ln_1m(ch.p));
        for i in 1..=n {
            let ai = a.value(i);
            if ai > 0.0 {
                s += num::exp(num::ln(ai) + i as f64 * ln_x + (n - i) as f64 * ln_1mp);
            }
        }
    } else {
        let one_m_p = 1.0 - ch.p;
        for i in 1..=n {
            let ai = a.numerators()[i];
            if ai > 0 {
                s += ai as f64 * num::powi(x, i as u32) * num::powi(one_m_p, (n - i) as u32);
            }
        }
        s /= a.denominator() as f64;
    }
    Ok(s.clamp(0.0, 1.0))
}

/// `P⊥_ue(C, p) = |C|⁻¹ Σ A_i (1-Qp)^i - (1-p)^n`.
///
/// Equals `P_ue(C⊥, p)` for linear codes.
pub fn pue_perp(a: &DistributionA, q: u32, size: CodeSize, p: f64) -> Result<f64> {
    let ch = ChannelPoint::new(q, p)?;
    let n = a.n();
    let t = ch.dual_argument();
    let log_space = n > LOG_SPACE_LENGTH;
    let s = poly_sum(a, t, log_space);
    let norm = match size.count(q) {
        Some(c) if !log_space => s / c,
        _ => num::exp(num::ln(s) - size.ln(q)),
    };
    let tail = if log_space {
        num::exp(n as f64 * num::ln_1m(ch.p))
    } else {
        num::powi(1.0 - ch.p, n as u32)
    };
    Ok(norm - tail)
}

/// The involution `p ↦ ((q-1) - qp) / (q(1-p))`.
///
/// It is defined by `1 - Qπ = p / ((q-1)(1-p))` and swaps the roles of a code
/// and its dual: `π(0) = (q-1)/q` and `π((q-1)/q) = 0`.
pub fn pi_transform(q: u32, p: f64) -> Result<f64> {
    check_q(q)?;
    if !(0.0..1.0).contains(&p) {
        return Err(Error::Domain {
            name: "p",
            value: p,
            range: "[0, 1)".into(),
        });
    }
    let qf = q as f64;
    Ok(((qf - 1.0) - qf * p) / (qf * (1.0 - p)))
}

/// `|P_ue(C,p) - [(1-p)^n (|C| P⊥_ue(C,π) - 1) + |C| q^(-n)]|` with `π = pi_transform(q, p)`.
///
/// The bracketed expression equals `P_ue(C, p)` identically, so the residual
/// measures only rounding error. Used as a verification oracle.
pub fn dual_identity_residual(a: &DistributionA, q: u32, size: CodeSize, p: f64) -> Result<f64> {
    let pmax = p_max(q);
    if !(p > 0.0 && p < pmax) {
        return Err(Error::Domain {
            name: "p",
            value: p,
            range: format!("(0, {pmax})"),
        });
    }
    let n = a.n();
    let lhs = pue(a, q, p)?;
    let pi = pi_transform(q, p)?.clamp(0.0, pmax);
    let perp = pue_perp(a, q, size, pi)?;
    let ln_size = size.ln(q);
    let n_ln_1mp = n as f64 * num::ln_1m(p);
    // |C|·(1-p)^n·P⊥ - (1-p)^n + |C|·q^-n
    let rhs = num::exp(ln_size + n_ln_1mp) * perp - num::exp(n_ln_1mp)
        + num::exp(ln_size - n as f64 * num::ln(q as f64));
    Ok((lhs - rhs).abs())
}

/// `(|C| - 1) / q^n`, the value of `P_ue` at `p = (q-1)/q`.
pub fn good_bound(q: u32, size: CodeSize, n: usize) -> f64 {
    // |C| q^-n (1 - 1/|C|)
    let ln_size = size.ln(q);
    -libm::expm1(-ln_size) * bad_bound(q, size, n)
}

/// `|C| / q^n`.
pub fn bad_bound(q: u32, size: CodeSize, n: usize) -> f64 {
    num::exp(size.ln(q) - n as f64 * num::ln(q as f64))
}

/// Verdict of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Good,
    Bad,
    Neither,
    /// Within tolerance of the bad boundary.
    Inconclusive,
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Verdict::Good => "good",
            Verdict::Bad => "bad",
            Verdict::Neither => "neither",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Channel parameter where the largest `P_ue` was found.
    pub worst_p: f64,
    pub max_pue: f64,
    pub good_bound: f64,
    pub bad_bound: f64,
    pub grid_size: usize,
}

/// Decides whether a code is good, bad, or neither for error detection.
///
/// `P_ue` is sampled on `grid` evenly spaced points of `(0, (q-1)/q]` and the
/// maximum is refined by golden-section search between the neighbours of the
/// best grid point. With `tol = 1e-12 · bad_bound`:
///
/// * `max ≤ good_bound + tol` → [`Verdict::Good`]
/// * `|max - bad_bound| ≤ tol` → [`Verdict::Inconclusive`]
/// * `max > bad_bound + tol` → [`Verdict::Bad`]
/// * otherwise → [`Verdict::Neither`]
pub fn classify(a: &DistributionA, q: u32, size: CodeSize, grid: usize) -> Result<Classification> {
    check_q(q)?;
    if grid < MIN_GRID {
        return Err(Error::Domain {
            name: "grid",
            value: grid as f64,
            range: format!("[{MIN_GRID}, ∞)"),
        });
    }
    let n = a.n();
    let pmax = p_max(q);
    let at = |j: usize| pmax * j as f64 / grid as f64;
    let eval = |p: f64| pue(a, q, p.clamp(0.0, pmax));

    let (mut best_j, mut best) = (grid, eval(pmax)?);
    for j in 1..grid {
        let v = eval(at(j))?;
        if v > best {
            best_j = j;
            best = v;
        }
    }
    let mut worst_p = at(best_j);
    let lo = at(best_j - 1);
    let hi = at((best_j + 1).min(grid));
    let (p_ref, v_ref) = golden_max(lo, hi, |p| eval(p).unwrap_or(0.0));
    if v_ref > best {
        best = v_ref;
        worst_p = p_ref;
    }

    let good = good_bound(q, size, n);
    let bad = bad_bound(q, size, n);
    let tol = VERDICT_TOL * bad;
    let verdict = if best <= good + tol {
        Verdict::Good
    } else if (best - bad).abs() <= tol {
        Verdict::Inconclusive
    } else if best > bad {
        Verdict::Bad
    } else {
        Verdict::Neither
    };
    Ok(Classification {
        verdict,
        worst_p,
        max_pue: best,
        good_bound: good,
        bad_bound: bad,
        grid_size: grid,
    })
}

fn golden_max<F: Fn(f64) -> f64>(mut a: f64, mut b: f64, f: F) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= 1e-15 * b.abs().max(1e-300) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}
