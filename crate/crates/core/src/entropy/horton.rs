//! The Horton-law space `T_{K,R}`: every admissible sequence whose entries lie
//! strictly inside `(R^(K-k) - alpha^(K-k), R^(K-k) + alpha^(K-k))`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{entropy_rate, LogBits};
use crate::arith::log2_big;
use crate::counting::{level_factor, BigCount, HortonSequence};
use crate::error::{Error, Result};

pub const DEFAULT_ALPHA: f64 = 1.25;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TkrParams {
    order: u32,
    exponent: f64,
    alpha: f64,
}

impl TkrParams {
    /// Requires `K >= 1`, `R > 2` and `1 < alpha < R`.
    pub fn new(order: u32, exponent: f64, alpha: f64) -> Result<Self> {
        if order == 0 || order > 63 {
            return Err(Error::domain(format!("order K must be in 1..=63, got {order}")));
        }
        if !(exponent > 2.0 && exponent.is_finite()) {
            return Err(Error::domain(format!("Horton exponent R must exceed 2, got {exponent}")));
        }
        if !(alpha > 1.0 && alpha < exponent) {
            return Err(Error::domain(format!(
                "alpha must lie in (1, R) = (1, {exponent}), got {alpha}"
            )));
        }
        Ok(TkrParams {
            order,
            exponent,
            alpha,
        })
    }

    pub fn with_default_alpha(order: u32, exponent: f64) -> Result<Self> {
        Self::new(order, exponent, DEFAULT_ALPHA)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Centre and half-width of the interval for `N_k`.
    fn interval(&self, k: u32) -> (f64, f64) {
        let e = (self.order - k) as i32;
        (self.exponent.powi(e), self.alpha.powi(e))
    }

    /// Integers strictly inside the interval for `N_k`.
    fn level_range(&self, k: u32) -> std::ops::RangeInclusive<u64> {
        let (c, w) = self.interval(k);
        let lo = ((c - w).floor() + 1.0).max(1.0) as u64;
        let hi = ((c + w).ceil() - 1.0).max(0.0) as u64;
        lo..=hi
    }

    /// `2 R^(K-1)`, the vertex count the statistic is normalised by.
    pub fn normalizer(&self) -> f64 {
        2.0 * self.exponent.powi(self.order as i32 - 1)
    }
}

/// Admissible sequences of `T_{K,R}`, sorted lexicographically.
pub fn tkr_sequences(p: &TkrParams) -> Vec<HortonSequence> {
    let k = p.order;
    // partial sequences from N_K down to the current level, stored top-first
    let mut partial: Vec<Vec<u64>> = p
        .level_range(k)
        .filter(|&v| v == 1)
        .map(|v| vec![v])
        .collect();
    for level in (1..k).rev() {
        let range = p.level_range(level);
        let mut next = Vec::new();
        for tail in &partial {
            let above = tail[tail.len() - 1];
            for v in range.clone().filter(|&v| v >= 2 * above) {
                let mut t = tail.clone();
                t.push(v);
                next.push(t);
            }
        }
        partial = next;
    }
    let mut out: Vec<_> = partial
        .into_iter()
        .map(|mut t| {
            t.reverse();
            HortonSequence::new_unchecked(t)
        })
        .collect();
    out.sort();
    out
}

/// `|T_{K,R}|`, the exact sum of tree counts over [`tkr_sequences`].
///
/// Computed level by level: the weight of `N_k = v` is the sum over the
/// admissible `N_{k+1} = u` of `weight(u) * 2^(v-2u) * C(v-2, 2u-2)`, which
/// factors the per-sequence product without listing sequences.
pub fn tkr_count(p: &TkrParams) -> BigCount {
    let k = p.order;
    let mut weights: BTreeMap<u64, BigUint> = p
        .level_range(k)
        .filter(|&v| v == 1)
        .map(|v| (v, BigUint::one()))
        .collect();
    for level in (1..k).rev() {
        let mut next = BTreeMap::new();
        for v in p.level_range(level) {
            let w: BigUint = weights
                .range(..=v / 2)
                .map(|(&u, wu)| wu * level_factor(v, u))
                .sum();
            if !w.is_zero() {
                next.insert(v, w);
            }
        }
        weights = next;
    }
    weights.into_values().sum()
}

/// `log2 |T_{K,R}| / (2 R^(K-1))`.
pub fn tkr_normalized_logcount(p: &TkrParams) -> LogBits {
    let count = tkr_count(p);
    LogBits {
        value: log2_big(&count) / p.normalizer(),
        provenance: super::Provenance::ExactBigLog,
    }
}

/// Canonical single sequence of `T_{K,R}`: each `R^(K-k)` rounded to the
/// nearest integer, raised to `2 N_{k+1}` where admissibility requires it.
/// Fails when a raised value leaves its open interval.
pub fn central_sequence(p: &TkrParams) -> Result<HortonSequence> {
    let k = p.order;
    let mut rev: Vec<u64> = Vec::with_capacity(k as usize);
    for level in (1..=k).rev() {
        let (c, w) = p.interval(level);
        let mut v = c.round() as u64;
        if let Some(&above) = rev.last() {
            v = v.max(2 * above);
        }
        let vf = v as f64;
        if !(vf > c - w && vf < c + w) {
            return Err(Error::domain(format!(
                "no admissible central value for N{level}: {v} is outside ({}, {})",
                c - w,
                c + w
            )));
        }
        rev.push(v);
    }
    rev.reverse();
    HortonSequence::new(rev)
}

/// One line of a convergence table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub order: u32,
    pub exponent: f64,
    pub alpha: f64,
    pub sequences: usize,
    pub log2_count: f64,
    pub normalized: f64,
    pub closed_form: f64,
    pub abs_error: f64,
}

pub fn convergence_row(p: &TkrParams) -> ConvergenceRow {
    let log2_count = log2_big(&tkr_count(p));
    let normalized = log2_count / p.normalizer();
    let closed_form = entropy_rate(p.exponent).expect("R > 2").value;
    ConvergenceRow {
        order: p.order,
        exponent: p.exponent,
        alpha: p.alpha,
        sequences: tkr_sequences(p).len(),
        log2_count,
        normalized,
        closed_form,
        abs_error: (normalized - closed_form).abs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_trees;

    fn params(k: u32, r: f64, a: f64) -> TkrParams {
        TkrParams::new(k, r, a).unwrap()
    }

    fn strings(v: &[HortonSequence]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parameter_validation() {
        assert!(TkrParams::new(0, 3.0, 1.5).is_err());
        assert!(TkrParams::new(3, 2.0, 1.5).is_err());
        assert!(TkrParams::new(3, 3.0, 1.0).is_err());
        assert!(TkrParams::new(3, 3.0, 3.0).is_err());
        assert!(TkrParams::new(3, 3.0, 1.5).is_ok());
    }

    #[test]
    fn small_spaces() {
        assert_eq!(strings(&tkr_sequences(&params(1, 3.0, 1.5))), ["1"]);
        assert_eq!(
            strings(&tkr_sequences(&params(2, 3.0, 1.5))),
            ["2,1", "3,1", "4,1"]
        );
        // N2 in {2,3,4}, N1 in 7..=11 with N1 >= 2 N2
        let mut expect = Vec::new();
        for n1 in 7..=11u64 {
            for n2 in 2..=4u64 {
                if n1 >= 2 * n2 {
                    expect.push(format!("{n1},{n2},1"));
                }
            }
        }
        assert_eq!(strings(&tkr_sequences(&params(3, 3.0, 1.5))), expect);
    }

    #[test]
    fn counts() {
        assert_eq!(tkr_count(&params(1, 3.0, 1.25)), BigUint::one());
        assert_eq!(tkr_count(&params(2, 3.0, 1.5)), BigUint::from(7u32));
        assert_eq!(tkr_normalized_logcount(&params(1, 4.0, 1.25)).value, 0.0);
    }

    #[test]
    fn level_recursion_matches_direct_sum() {
        for (k, r, a) in [(3, 3.0, 1.5), (4, 3.0, 1.25), (5, 4.0, 1.25), (5, 3.3, 2.0), (6, 2.5, 1.7)] {
            let p = params(k, r, a);
            let direct: BigUint = tkr_sequences(&p).iter().map(count_trees).sum();
            assert_eq!(tkr_count(&p), direct, "K={k} R={r} alpha={a}");
        }
    }

    #[test]
    fn central_sequences() {
        let c = |k, r| central_sequence(&TkrParams::with_default_alpha(k, r).unwrap()).unwrap();
        assert_eq!(c(3, 4.0).as_slice(), &[16, 4, 1]);
        assert_eq!(c(3, 3.0).as_slice(), &[9, 3, 1]);
        assert_eq!(c(5, 4.51).as_slice(), &[414, 92, 20, 5, 1]);
    }
}
