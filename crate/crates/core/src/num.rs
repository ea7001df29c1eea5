//! Small float helpers the no_std build cannot take from `f64` methods.

/// `x^e` by repeated squaring.
pub(crate) fn powi(mut x: f64, mut e: u32) -> f64 {
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= x;
        }
        x *= x;
        e >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// `ln(1 - x)`, accurate for small `x`.
#[inline]
pub(crate) fn ln_1m(x: f64) -> f64 {
    libm::log1p(-x)
}

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}
