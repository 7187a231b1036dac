//! Exact big-integer helpers: binomials, Catalan numbers and base-2 logarithms.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Below this `k` the multiplicative formula beats prime factorisation.
const SMALL_K: u64 = 48;

fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Exponent of the prime `p` in `n!`.
fn legendre(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut m = n;
    while m > 0 {
        m /= p;
        e += m;
    }
    e
}

/// Balanced product so that the expensive multiplications happen between
/// operands of similar size.
pub(crate) fn product(mut factors: Vec<BigUint>) -> BigUint {
    if factors.is_empty() {
        return BigUint::one();
    }
    while factors.len() > 1 {
        let mut next = Vec::with_capacity(factors.len().div_ceil(2));
        let mut it = factors.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        factors = next;
    }
    factors.pop().unwrap_or_else(BigUint::one)
}

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return BigUint::one();
    }
    if k <= SMALL_K {
        let mut acc = BigUint::one();
        for i in 1..=k {
            // acc == C(n-k+i-1, i-1) so the division is exact
            acc *= n - k + i;
            acc /= i;
        }
        return acc;
    }

    // Pack prime powers into machine words before going to BigUint.
    let mut words: Vec<BigUint> = Vec::new();
    let mut word: u64 = 1;
    for p in primes_up_to(n) {
        let e = legendre(n, p) - legendre(k, p) - legendre(n - k, p);
        for _ in 0..e {
            match word.checked_mul(p) {
                Some(w) => word = w,
                None => {
                    words.push(BigUint::from(word));
                    word = p;
                }
            }
        }
    }
    words.push(BigUint::from(word));
    product(words)
}

/// Exact Catalan number `C_m = (2m)! / (m! (m+1)!)`.
pub fn catalan(m: u64) -> BigUint {
    binomial(2 * m, m) / (m + 1)
}

/// Base-2 logarithm of a big integer from its top 128 bits plus the bit-length
/// offset. Returns `-inf` for zero.
pub fn log2_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(128);
    let top = (x >> shift).to_u128().expect("at most 128 bits remain");
    (top as f64).log2() + shift as f64
}

/// `ceil(log2(x))` for `x >= 1`, i.e. the bit length of `x - 1`.
pub fn ceil_log2(x: &BigUint) -> u64 {
    if x.is_zero() || x.is_one() {
        return 0;
    }
    (x - 1u32).bits()
}
