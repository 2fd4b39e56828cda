//! Exact rational building blocks: harmonic numbers, the two telescoping
//! sums with closed forms, and Bernoulli numbers.
//!
//! Everything in this module is exact — no rounding ever occurs here. Values
//! are [`BigRational`]s kept in lowest terms with a positive denominator by
//! construction.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec;

/// Exact arbitrary-precision rational, always reduced, denominator > 0.
pub type BigRational = num_rational::BigRational;

/// Convenience constructor from machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integer value.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Grain size for divide-and-conquer rational summation. Leaves below this
/// length are folded sequentially; the tree above is eligible for parallel
/// evaluation.
const SUM_GRAIN: u64 = 256;

/// H_n = 1 + 1/2 + … + 1/n, exactly.
///
/// Computed by balanced divide-and-conquer summation, which keeps
/// intermediate numerators and denominators near their minimal size and is
/// evaluated in parallel when the `parallel` feature is enabled.
pub fn harmonic(n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidIndex { got: 0, min: 1 });
    }
    Ok(exec::map_reduce(
        1,
        n,
        SUM_GRAIN,
        &|i| BigRational::new(BigInt::one(), BigInt::from(i)),
        &|a, b| a + b,
    ))
}

/// Sequential twin of [`harmonic`]; same reduction tree, same result.
pub fn harmonic_seq(n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidIndex { got: 0, min: 1 });
    }
    Ok(exec::map_reduce_seq(
        1,
        n,
        SUM_GRAIN,
        &|i| BigRational::new(BigInt::one(), BigInt::from(i)),
        &|a, b| a + b,
    ))
}

/// The two telescoping sums: `S1P` is Σ_{i=2..n} 1/(2i(i−1)) with limit 1/2,
/// `S2P` is Σ_{i=2..n} 1/(2(i+1)i) with limit 1/4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TelescopeId {
    S1P,
    S2P,
}

impl TelescopeId {
    /// The i-th term of the sum, i ≥ 2.
    pub fn term(self, i: u64) -> Result<BigRational> {
        if i < 2 {
            return Err(Error::InvalidIndex { got: i, min: 2 });
        }
        let i = BigInt::from(i);
        let den = match self {
            // 1/(2·i·(i−1))
            TelescopeId::S1P => 2 * &i * (&i - 1),
            // 1/(2·(i+1)·i)
            TelescopeId::S2P => 2 * (&i + 1) * &i,
        };
        Ok(BigRational::new(BigInt::one(), den))
    }

    /// Closed form of the partial sum through n.
    pub fn closed_partial(self, n: u64) -> Result<BigRational> {
        if n < 2 {
            return Err(Error::InvalidIndex { got: n, min: 2 });
        }
        let n = BigInt::from(n);
        Ok(match self {
            // (n−1)/(2n)
            TelescopeId::S1P => BigRational::new(&n - 1, 2 * &n),
            // (n−1)/(4(n+1))
            TelescopeId::S2P => BigRational::new(&n - 1, 4 * (&n + 1)),
        })
    }

    /// Exact limit of the full sum.
    pub fn limit(self) -> BigRational {
        match self {
            TelescopeId::S1P => rat(1, 2),
            TelescopeId::S2P => rat(1, 4),
        }
    }

    /// Exact distance from the n-th partial sum to the limit:
    /// 1/(2n) for `S1P`, 1/(2(n+1)) for `S2P`.
    pub fn distance_to_limit(self, n: u64) -> Result<BigRational> {
        if n < 2 {
            return Err(Error::InvalidIndex { got: n, min: 2 });
        }
        let n = BigInt::from(n);
        Ok(match self {
            TelescopeId::S1P => BigRational::new(BigInt::one(), 2 * &n),
            TelescopeId::S2P => BigRational::new(BigInt::one(), 2 * (&n + 1)),
        })
    }
}

/// Partial sum of a telescoping series through n (n ≥ 2), computed both
/// term-by-term and via the closed form; the two must agree exactly, and the
/// call panics on any discrepancy (that would be a theorem-level bug, not a
/// recoverable condition).
pub fn telescope_partial(kind: TelescopeId, n: u64) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::InvalidIndex { got: n, min: 2 });
    }
    let termwise = exec::map_reduce(
        2,
        n,
        SUM_GRAIN,
        &|i| kind.term(i).expect("index ≥ 2 by construction"),
        &|a, b| a + b,
    );
    let closed = kind.closed_partial(n)?;
    assert_eq!(
        termwise, closed,
        "telescoping identity violated at n = {n} for {kind:?}"
    );
    Ok(closed)
}

/// Write-once cache of Bernoulli numbers B_0, B_1, …; grows monotonically.
static BERNOULLI_CACHE: RwLock<Vec<BigRational>> = RwLock::new(Vec::new());

/// Exact Bernoulli number B_m for even m ≥ 2, via the recurrence
/// Σ_{j=0..m} C(m+1, j)·B_j = 0 with B_0 = 1, B_1 = −1/2.
///
/// Odd m ≥ 3 have B_m = 0 and are rejected along with m = 0 because no
/// caller has a use for them; the cache still stores them internally since
/// the recurrence consumes every earlier index.
pub fn bernoulli(m: u64) -> Result<BigRational> {
    if m == 0 || m % 2 != 0 {
        return Err(Error::InvalidIndex { got: m, min: 2 });
    }
    let m = m as usize;
    {
        let cache = BERNOULLI_CACHE.read().expect("bernoulli cache poisoned");
        if let Some(b) = cache.get(m) {
            return Ok(b.clone());
        }
    }
    let mut cache = BERNOULLI_CACHE.write().expect("bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(BigRational::one()); // B_0
        cache.push(rat(-1, 2)); // B_1
    }
    while cache.len() <= m {
        let k = cache.len(); // computing B_k
        let kp1 = BigInt::from(k + 1);
        let mut acc = BigRational::zero();
        for (j, bj) in cache.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            acc += bj * BigRational::from_integer(binomial(kp1.clone(), BigInt::from(j)));
        }
        // C(k+1, k) = k+1, so B_k = −acc/(k+1).
        let bk = -acc / BigRational::from_integer(kp1);
        cache.push(bk);
    }
    Ok(cache[m].clone())
}
