use core::f64::consts::PI;

/// `sin(πt)` with the argument reduced exactly modulo 2 before scaling by π.
pub(crate) fn sin_pi(t: f64) -> f64 {
    // remainder() is exact and lands in [-1, 1].
    let r = libm::remainder(t, 2.0);
    if r > 0.5 {
        libm::sin(PI * (1.0 - r))
    } else if r < -0.5 {
        -libm::sin(PI * (1.0 + r))
    } else {
        libm::sin(PI * r)
    }
}

/// `(1 + y)^{1/α}` evaluated as `exp(log1p(y) / α)`.
pub(crate) fn pow_inv(y: f64, alpha: f64) -> f64 {
    libm::exp(libm::log1p(y) / alpha)
}
