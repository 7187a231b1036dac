//! Entropy of uniform tree spaces and the Horton-law entropy rate.

mod horton;

pub use horton::{
    central_sequence, convergence_row, tkr_count, tkr_normalized_logcount, tkr_sequences,
    ConvergenceRow, TkrParams,
};

use crate::arith::{binomial, catalan, log2_big};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Base-2 logarithm of an exact big integer.
    ExactBigLog,
    /// Direct evaluation of a closed-form expression.
    ClosedForm,
}

/// A quantity measured in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBits {
    pub value: f64,
    pub provenance: Provenance,
}

impl LogBits {
    fn exact(value: f64) -> Self {
        LogBits {
            value,
            provenance: Provenance::ExactBigLog,
        }
    }

    fn closed(value: f64) -> Self {
        LogBits {
            value,
            provenance: Provenance::ClosedForm,
        }
    }
}

/// `H(z) = -z log2 z - (1-z) log2 (1-z)`, with `0 log 0 = 0`.
pub fn binary_entropy(z: f64) -> Result<LogBits> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::domain(format!("binary entropy needs z in [0, 1], got {z}")));
    }
    let a = if z > 0.0 { -z * z.log2() } else { 0.0 };
    let b = if z < 1.0 {
        -(1.0 - z) * (-z).ln_1p() / std::f64::consts::LN_2
    } else {
        0.0
    };
    Ok(LogBits::closed(a + b))
}

fn check_vertex_count(vertices: u64, min: u64) -> Result<()> {
    if vertices < min || !vertices.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "vertex count must be even and at least {min}, got {vertices}"
        )));
    }
    Ok(())
}

/// Entropy of a uniform tree with `vertices = 2n` vertices: `log2 C_{n-1}`.
pub fn entropy_tn(vertices: u64) -> Result<LogBits> {
    check_vertex_count(vertices, 2)?;
    let n = vertices / 2;
    Ok(LogBits::exact(log2_big(&catalan(n - 1))))
}

/// `entropy_tn(N) - (N - log2 N - 1)`.
pub fn entropy_asymptotic_residual(vertices: u64) -> Result<LogBits> {
    check_vertex_count(vertices, 4)?;
    let h = entropy_tn(vertices)?.value;
    let nf = vertices as f64;
    Ok(LogBits::exact(h - (nf - nf.log2() - 1.0)))
}

/// Entropy rate of the Horton-law space with exponent `r`:
/// `1 - (1 - H(2/r)) / (2 - 2/r)`. Defined for `r >= 2`.
pub fn entropy_rate(r: f64) -> Result<LogBits> {
    if r.is_nan() || r < 2.0 || r.is_infinite() {
        return Err(Error::domain(format!(
            "entropy rate needs a finite exponent R >= 2, got {r}"
        )));
    }
    let z = 2.0 / r;
    let h = binary_entropy(z)?.value;
    Ok(LogBits::closed(1.0 - (1.0 - h) / (2.0 - z)))
}

/// Locates the maximiser of [`entropy_rate`] on `[lo, hi]`: a uniform grid
/// scan followed by golden-section refinement around the best grid point.
pub fn entropy_rate_argmax(lo: f64, hi: f64) -> Result<(f64, f64)> {
    if !(lo >= 2.0 && hi > lo && hi.is_finite()) {
        return Err(Error::domain(format!("need 2 <= lo < hi, got [{lo}, {hi}]")));
    }
    let f = |r: f64| entropy_rate(r).map(|v| v.value).unwrap_or(f64::NEG_INFINITY);
    const GRID: usize = 4096;
    let step = (hi - lo) / GRID as f64;
    let best = (0..=GRID)
        .map(|i| lo + step * i as f64)
        .fold((lo, f(lo)), |acc, r| {
            let v = f(r);
            if v > acc.1 {
                (r, v)
            } else {
                acc
            }
        });
    let (mut a, mut b) = ((best.0 - step).max(lo), (best.0 + step).min(hi));
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if b - a < 1e-12 {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    Ok((x, f(x)))
}

/// Exact `log2 C(n, k)` next to the approximation `n H(k/n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomialLogCheck {
    pub exact: LogBits,
    pub approx: LogBits,
    /// `exact - approx`
    pub residual: f64,
}

pub fn log2_binom_check(n: u64, k: u64) -> Result<BinomialLogCheck> {
    if n == 0 || k > n {
        return Err(Error::domain(format!("need 0 <= k <= n and n >= 1, got n={n}, k={k}")));
    }
    let exact = log2_big(&binomial(n, k));
    let approx = n as f64 * binary_entropy(k as f64 / n as f64)?.value;
    Ok(BinomialLogCheck {
        exact: LogBits::exact(exact),
        approx: LogBits::closed(approx),
        residual: exact - approx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.0).unwrap().value, 0.0);
        assert_eq!(binary_entropy(1.0).unwrap().value, 0.0);
        assert_eq!(binary_entropy(0.5).unwrap().value, 1.0);
        // log2 3 - 2/3, evaluated independently
        let expect = 3f64.log2() - 2.0 / 3.0;
        assert!((binary_entropy(2.0 / 3.0).unwrap().value - expect).abs() < 1e-15);
        assert!((binary_entropy(2.0 / 3.0).unwrap().value - 0.918_295_834_054_489_7).abs() < 1e-15);
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(1.1).is_err());
        assert!(binary_entropy(f64::NAN).is_err());
    }

    #[test]
    fn catalan_entropy_values() {
        assert_eq!(entropy_tn(2).unwrap().value, 0.0);
        assert!((entropy_tn(8).unwrap().value - 5f64.log2()).abs() < 1e-14);
        assert!((entropy_tn(28).unwrap().value - 742_900f64.log2()).abs() < 1e-12);
        assert!(entropy_tn(7).is_err());
        assert!(entropy_tn(0).is_err());
        assert_eq!(entropy_tn(8).unwrap().provenance, Provenance::ExactBigLog);
    }

    #[test]
    fn residual_at_sixteen() {
        // C_7 = 429
        let r = entropy_asymptotic_residual(16).unwrap().value;
        let expect = 429f64.log2() - (16.0 - 4.0 - 1.0);
        assert!((r - expect).abs() < 1e-12);
        assert!(r.abs() <= 8.0);
        assert!(entropy_asymptotic_residual(2).is_err());
    }

    #[test]
    fn rate_point_values() {
        assert_eq!(entropy_rate(2.0).unwrap().value, 0.0);
        assert!((entropy_rate(4.0).unwrap().value - 1.0).abs() < 1e-12);
        assert!((entropy_rate(4.51).unwrap().value - 0.9941).abs() < 5e-4);
        assert!((entropy_rate(1e6).unwrap().value - 0.5).abs() < 1e-4);
        assert!(entropy_rate(1.99).is_err());
        assert!(entropy_rate(f64::INFINITY).is_err());
    }

    #[test]
    fn rate_argmax_is_four() {
        let (x, v) = entropy_rate_argmax(2.0, 100.0).unwrap();
        assert!((x - 4.0).abs() < 1e-6, "argmax {x}");
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn binomial_log_examples() {
        let c = log2_binom_check(2, 1).unwrap();
        assert_eq!(c.exact.value, 1.0);
        assert_eq!(c.approx.value, 2.0);
        assert_eq!(c.residual, -1.0);
        let c = log2_binom_check(50, 50).unwrap();
        assert_eq!((c.exact.value, c.approx.value), (0.0, 0.0));
        let c = log2_binom_check(1000, 500).unwrap();
        assert!(c.residual.abs() <= 3.0 * 1000f64.log2());
        assert!(log2_binom_check(3, 4).is_err());
    }
}
