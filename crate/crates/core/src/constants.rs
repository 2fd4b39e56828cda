//! Independent high-precision enclosures for the two transcendental
//! constants everything else is measured against: ln 2 and Euler's
//! constant γ.
//!
//! ln 2 comes from the geometrically convergent series
//! 2·atanh(1/3) = ln 2. γ comes from Euler–Maclaurin summation of the
//! harmonic series at N = 2^m with a Bernoulli-number correction and a
//! runtime-verified remainder bound, so that the returned interval is a
//! guaranteed enclosure and not a heuristic estimate. Restricting N to
//! powers of two means the only transcendental ingredient of ln N is ln 2
//! itself, scaled by an exact integer.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{self, BigRational};
use crate::hpnum::{atanh_series_enclosure, pow10_inv, Enclosure};

/// Which constant a [`ConstantRequest`] asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Gamma,
    Ln2,
}

/// A request for one constant at a target precision P ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstantRequest {
    pub which: Which,
    pub digits: u32,
}

impl ConstantRequest {
    pub fn enclosure(&self) -> Result<Enclosure> {
        match self.which {
            Which::Gamma => gamma_em_enclosure(self.digits),
            Which::Ln2 => Ok(ln2_enclosure(self.digits)),
        }
    }
}

// Caches are keyed by the exact requested precision so that a given call is
// deterministic regardless of what other precisions were computed first or
// concurrently; entries are written once and never mutated.
static LN2_CACHE: RwLock<Option<HashMap<u32, Enclosure>>> = RwLock::new(None);
static GAMMA_CACHE: RwLock<Option<HashMap<u32, Enclosure>>> = RwLock::new(None);

fn cache_get(cache: &RwLock<Option<HashMap<u32, Enclosure>>>, p: u32) -> Option<Enclosure> {
    cache
        .read()
        .expect("constant cache poisoned")
        .as_ref()
        .and_then(|m| m.get(&p).cloned())
}

fn cache_put(cache: &RwLock<Option<HashMap<u32, Enclosure>>>, p: u32, e: &Enclosure) {
    cache
        .write()
        .expect("constant cache poisoned")
        .get_or_insert_with(HashMap::new)
        .entry(p)
        .or_insert_with(|| e.clone());
}

/// Enclosure of ln 2 with width ≤ 10^(−P), via 2·atanh(1/3).
///
/// The truncation remainder is bounded by the geometric tail and folded
/// outward on the positive side (t = 1/3 > 0, so the remainder is positive).
pub fn ln2_enclosure(p: u32) -> Enclosure {
    assert!(p >= 1, "precision must be ≥ 1");
    if let Some(e) = cache_get(&LN2_CACHE, p) {
        return e;
    }
    let t = BigRational::new(BigInt::one(), BigInt::from(3));
    let eps = pow10_inv(p + 2);
    let e = atanh_series_enclosure(&t, &eps, p + 4);
    debug_assert!(e.width_within(p));
    cache_put(&LN2_CACHE, p, &e);
    e
}

/// Decimal digit count of a small positive integer.
fn digits_of(n: u64) -> u32 {
    n.checked_ilog10().unwrap_or(0) + 1
}

/// Caps for the Euler–Maclaurin parameter search.
const M_CAP: u32 = 26;
const K_CAP: u64 = 400;

/// Float pre-screen: smallest (m, K) expected to push the remainder bound
/// 2·|B_{2K+2}| / ((2K+2)·N^(2K+2)) below 10^(−P−2), using the classical
/// envelope |B_{2k}| ≤ 4·(2k)! / (2π)^(2k) in log10 form with a one-digit
/// safety margin. The exact assertion afterwards is what soundness rests on;
/// this search only has to land close.
fn screen_parameters(p: u32) -> Option<(u32, u64)> {
    let target = -(p as f64) - 3.0; // one spare digit under the mandated −(P+2)
    let log10_2pi = (2.0 * std::f64::consts::PI).log10();
    for m in 4..=M_CAP {
        let log10_n = m as f64 * 2f64.log10();
        // Accumulate log10 of 4·(2k)!/(2π)^(2k) incrementally in k.
        let mut log10_fact = 0.0; // log10((2k+2)!), accumulated below
        for k in 0..=K_CAP {
            // After this step, log10_fact = log10((2k+2)!); the bound for
            // this K = k uses B_{2k+2}, (2k+2), and N^(2k+2).
            log10_fact += ((2 * k + 1) as f64).log10() + ((2 * k + 2) as f64).log10();
            let log10_b = 4f64.log10() + log10_fact - (2 * k + 2) as f64 * log10_2pi;
            let log10_bound = 2f64.log10() + log10_b
                - ((2 * k + 2) as f64).log10()
                - (2 * k + 2) as f64 * log10_n;
            if log10_bound <= target {
                return Some((m, k));
            }
        }
    }
    None
}

/// Exact Euler–Maclaurin remainder bound 2·|B_{2K+2}| / ((2K+2)·N^(2K+2)).
fn em_remainder_bound(n: &BigInt, k: u64) -> Result<BigRational> {
    let b = exact::bernoulli(2 * k + 2)?;
    let den = BigRational::from_integer(BigInt::from(2 * k + 2) * n.pow(2 * (k as u32) + 2));
    Ok(BigRational::from_integer(BigInt::from(2)) * b.abs() / den)
}

/// Enclosure of Euler's constant γ with width ≤ 10^(−P), via
/// γ = H_N − ln N − 1/(2N) + Σ_{k=1..K} B_{2k}/(2k·N^(2k)) + R, N = 2^m.
///
/// The remainder satisfies |R| ≤ 2·|B_{2K+2}|/((2K+2)·N^(2K+2)) — the first
/// omitted term of this enveloping alternating expansion, with a factor-2
/// safety margin. The implementation asserts this exact bound is ≤ 10^(−P−2)
/// at runtime for its chosen (m, K) and errors otherwise, so soundness never
/// depends on the parameter search being right.
pub fn gamma_em_enclosure(p: u32) -> Result<Enclosure> {
    assert!(p >= 1, "precision must be ≥ 1");
    if let Some(e) = cache_get(&GAMMA_CACHE, p) {
        return Ok(e);
    }

    let (m, mut k) = screen_parameters(p).ok_or_else(|| Error::ParametersInsufficient {
        context: format!(
            "no Euler–Maclaurin configuration with N ≤ 2^{M_CAP}, K ≤ {K_CAP} \
             reaches a remainder bound of 10^(-{})",
            p + 2
        ),
    })?;

    let n_int = BigInt::one() << m; // N = 2^m
    let target = pow10_inv(p + 2);

    // The screen errs on the safe side; nudge K upward if the exact bound
    // still misses, and fail honestly if the cap is exhausted.
    let mut bound = em_remainder_bound(&n_int, k)?;
    while bound > target {
        k += 1;
        if k > K_CAP {
            return Err(Error::ParametersInsufficient {
                context: format!(
                    "exact remainder bound stuck above 10^(-{}) at N = 2^{m}",
                    p + 2
                ),
            });
        }
        bound = em_remainder_bound(&n_int, k)?;
    }

    // r = H_N − 1/(2N) + Σ_{k=1..K} B_{2k}/(2k·N^(2k)), exactly.
    let h_n = exact::harmonic(1u64 << m)?;
    let n_rat = BigRational::from_integer(n_int.clone());
    let mut r = h_n - BigRational::one() / (BigRational::from_integer(BigInt::from(2)) * &n_rat);
    let n2 = &n_rat * &n_rat;
    let mut n_pow = n2.clone(); // N^(2k)
    for kk in 1..=k {
        let b = exact::bernoulli(2 * kk)?;
        r += b / (BigRational::from_integer(BigInt::from(2 * kk)) * &n_pow);
        if kk < k {
            n_pow *= &n2;
        }
    }

    // γ ∈ [r − bound, r + bound] − m·ln 2.
    let grid = p + 6;
    let sum_part = Enclosure::from_rational_bounds(&(&r - &bound), &(&r + &bound), grid);
    let ln2 = ln2_enclosure(p + 6 + digits_of(m as u64));
    let e = sum_part.sub(&ln2.scale_int(&BigInt::from(m)));
    debug_assert!(e.width_within(p));
    cache_put(&GAMMA_CACHE, p, &e);
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::exact::rat;
    use crate::hpnum::{ln_rational, ScaledDecimal};

    /// Interval [lit, lit + 10^(−digits)) for a decimal literal read as a
    /// truncation of the true value.
    fn prefix_window(lit: &str) -> (BigRational, BigRational) {
        let x = ScaledDecimal::parse(lit).expect("literal parses");
        let lo = x.to_rational();
        let hi = &lo + pow10_inv(x.precision());
        (lo, hi)
    }

    /// Interval [lit − u/2, lit + u/2] for a literal read as a rounding.
    fn rounding_window(lit: &str) -> (BigRational, BigRational) {
        let x = ScaledDecimal::parse(lit).expect("literal parses");
        let half = pow10_inv(x.precision()) / rat(2, 1);
        let v = x.to_rational();
        (&v - &half, &v + &half)
    }

    fn assert_inside(e: &Enclosure, window: (BigRational, BigRational), what: &str) {
        assert!(
            e.lo().to_rational() >= window.0 && e.hi().to_rational() <= window.1,
            "{what}: enclosure {e} escapes the digit window"
        );
    }

    #[test]
    fn ln2_known_digits_p15() {
        let e = ln2_enclosure(15);
        assert!(e.width_within(15));
        // Truncated literal: true value continues …309…
        assert_inside(&e, prefix_window("0.693147180559945"), "ln2 @ 15");
    }

    #[test]
    fn ln2_known_digits_p50() {
        let e = ln2_enclosure(50);
        assert!(e.width_within(50));
        // This 50-digit literal is a rounding (the 51st digit is 5).
        assert_inside(
            &e,
            rounding_window("0.69314718055994530941723212145817656807550013436026"),
            "ln2 @ 50",
        );
    }

    #[test]
    fn ln2_agrees_with_reduction_route() {
        for p in [5u32, 15, 30, 50] {
            let direct = ln2_enclosure(p);
            let reduced = ln_rational(&rat(2, 1), p).unwrap();
            assert!(direct.intersects(&reduced), "disagreement at P={p}");
        }
    }

    #[test]
    fn ln2_plus_ln_half_contains_zero() {
        let a = ln2_enclosure(20);
        let b = ln_rational(&rat(1, 2), 20).unwrap();
        assert!(a.add(&b).contains_rational(&BigRational::zero()));
    }

    #[test]
    fn ln2_refinement_is_nested() {
        for p in [8u32, 20, 40] {
            let coarse = ln2_enclosure(p);
            let fine = ln2_enclosure(p + 10);
            assert!(coarse.contains(&fine));
        }
    }

    #[test]
    fn gamma_known_digits_p20() {
        let e = gamma_em_enclosure(20).unwrap();
        assert!(e.width_within(20));
        // Truncated literal: true value continues …651…
        assert_inside(&e, prefix_window("0.57721566490153286060"), "gamma @ 20");
    }

    #[test]
    fn gamma_known_digits_p50() {
        let e = gamma_em_enclosure(50).unwrap();
        assert!(e.width_within(50));
        assert_inside(
            &e,
            prefix_window("0.57721566490153286060651209008240243104215933593992"),
            "gamma @ 50",
        );
    }

    #[test]
    fn gamma_refinements_intersect_and_nest() {
        let p10 = gamma_em_enclosure(10).unwrap();
        let p20 = gamma_em_enclosure(20).unwrap();
        let p30 = gamma_em_enclosure(30).unwrap();
        assert!(p10.intersects(&p20));
        assert!(p20.intersects(&p30));
        assert!(p10.contains(&p20));
        assert!(p20.contains(&p30));
    }

    #[test]
    fn gamma_unreachable_precision_errors() {
        let err = gamma_em_enclosure(50_000).unwrap_err();
        assert!(matches!(err, Error::ParametersInsufficient { .. }));
    }

    #[test]
    fn constant_request_dispatch() {
        let g = ConstantRequest {
            which: Which::Gamma,
            digits: 10,
        };
        let l = ConstantRequest {
            which: Which::Ln2,
            digits: 10,
        };
        assert!(g.enclosure().unwrap().width_within(10));
        assert!(l.enclosure().unwrap().width_within(10));
    }
}
