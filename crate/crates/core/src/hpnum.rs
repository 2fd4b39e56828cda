//! Fixed-point decimal interval arithmetic with outward rounding, and a
//! rigorous natural logarithm of rational arguments.
//!
//! A [`ScaledDecimal`] is the exact value `mantissa · 10^(−precision)`; an
//! [`Enclosure`] is a pair `[lo, hi]` of them guaranteed to contain a real
//! quantity. Every operation rounds `lo` toward −∞ and `hi` toward +∞, so
//! containment is preserved through arbitrary composition: if the inputs
//! contain the true values, the output contains the true result. That makes
//! a disjointness verdict downstream a genuine contradiction rather than a
//! rounding artifact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::constants;
use crate::error::{Error, Result};
use crate::exact::BigRational;

/// 10^p as a big integer.
pub(crate) fn pow10(p: u32) -> BigInt {
    BigInt::from(10u32).pow(p)
}

/// 10^(−p) as an exact rational.
pub(crate) fn pow10_inv(p: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow10(p))
}

/// An exact fixed-point decimal: the value `mantissa · 10^(−precision)`.
///
/// The representation is exact, never approximate. Two values with different
/// precisions compare by value (rescaling up is exact), so `0.50` at P = 2
/// equals `0.5` at P = 1.
#[derive(Debug, Clone)]
pub struct ScaledDecimal {
    mantissa: BigInt,
    precision: u32,
}

impl ScaledDecimal {
    pub fn new(mantissa: BigInt, precision: u32) -> Self {
        ScaledDecimal {
            mantissa,
            precision,
        }
    }

    pub fn zero(precision: u32) -> Self {
        ScaledDecimal::new(BigInt::zero(), precision)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.precision))
    }

    /// Exact rescale to a precision ≥ the current one.
    pub fn rescale_up(&self, precision: u32) -> Self {
        assert!(
            precision >= self.precision,
            "rescale_up cannot lower precision"
        );
        ScaledDecimal::new(
            &self.mantissa * pow10(precision - self.precision),
            precision,
        )
    }

    /// Round toward −∞ to an arbitrary precision (exact when raising).
    pub fn round_down(&self, precision: u32) -> Self {
        if precision >= self.precision {
            return self.rescale_up(precision);
        }
        let div = pow10(self.precision - precision);
        ScaledDecimal::new(self.mantissa.div_floor(&div), precision)
    }

    /// Round toward +∞ to an arbitrary precision (exact when raising).
    pub fn round_up(&self, precision: u32) -> Self {
        if precision >= self.precision {
            return self.rescale_up(precision);
        }
        let div = pow10(self.precision - precision);
        ScaledDecimal::new(self.mantissa.div_ceil(&div), precision)
    }

    /// Largest grid value ≤ q at the given precision: ⌊q·10^P⌋·10^(−P).
    pub fn from_rational_floor(q: &BigRational, precision: u32) -> Self {
        let scaled = q.numer() * pow10(precision);
        ScaledDecimal::new(scaled.div_floor(q.denom()), precision)
    }

    /// Smallest grid value ≥ q at the given precision: ⌈q·10^P⌉·10^(−P).
    pub fn from_rational_ceil(q: &BigRational, precision: u32) -> Self {
        let scaled = q.numer() * pow10(precision);
        ScaledDecimal::new(scaled.div_ceil(q.denom()), precision)
    }

    /// Render as an exact decimal string, e.g. `-0.050` at P = 3.
    pub fn to_decimal_string(&self) -> String {
        let neg = self.mantissa.is_negative();
        let digits = self.mantissa.magnitude().to_string();
        let p = self.precision as usize;
        let mut body = if digits.len() <= p {
            format!("0.{}{}", "0".repeat(p - digits.len()), digits)
        } else if p == 0 {
            digits
        } else {
            let (int_part, frac_part) = digits.split_at(digits.len() - p);
            format!("{int_part}.{frac_part}")
        };
        if neg {
            body.insert(0, '-');
        }
        body
    }

    /// Parse an exact decimal string; the precision is the number of digits
    /// after the point.
    pub fn parse(s: &str) -> Option<Self> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let digits = format!("{int_part}{frac_part}");
        let mut mantissa: BigInt = digits.parse().ok()?;
        if neg {
            mantissa = -mantissa;
        }
        Some(ScaledDecimal::new(mantissa, frac_part.len() as u32))
    }
}

impl PartialEq for ScaledDecimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ScaledDecimal {}

impl PartialOrd for ScaledDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScaledDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        // a·10^(−Pa) ≤ b·10^(−Pb)  ⟺  a·10^Pb ≤ b·10^Pa
        let lhs = &self.mantissa * pow10(other.precision);
        let rhs = &other.mantissa * pow10(self.precision);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ScaledDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

/// An interval `[lo, hi]` with exact decimal endpoints at a common precision,
/// guaranteed by construction to contain the real quantity it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: ScaledDecimal,
    hi: ScaledDecimal,
}

impl Enclosure {
    /// Build from endpoints, rescaling both (exactly) to the larger
    /// precision. Panics if `lo > hi` — an inverted interval is always an
    /// internal soundness bug, never a recoverable input condition.
    pub fn new(lo: ScaledDecimal, hi: ScaledDecimal) -> Self {
        let p = lo.precision.max(hi.precision);
        let lo = lo.rescale_up(p);
        let hi = hi.rescale_up(p);
        assert!(lo <= hi, "inverted enclosure: {lo} > {hi}");
        Enclosure { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    pub fn degenerate(x: ScaledDecimal) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    /// Tightest grid interval containing the exact rational q. One division
    /// serves both endpoints: hi = lo unless the remainder is nonzero.
    pub fn from_rational_outward(q: &BigRational, precision: u32) -> Self {
        let scaled = q.numer() * pow10(precision);
        let (quot, rem) = scaled.div_mod_floor(q.denom());
        let hi_mantissa = if rem.is_zero() { quot.clone() } else { &quot + 1 };
        Enclosure {
            lo: ScaledDecimal::new(quot, precision),
            hi: ScaledDecimal::new(hi_mantissa, precision),
        }
    }

    /// Exact interval for a rational pair `[lo_q, hi_q]`, rounded outward.
    pub fn from_rational_bounds(lo_q: &BigRational, hi_q: &BigRational, precision: u32) -> Self {
        Enclosure::new(
            ScaledDecimal::from_rational_floor(lo_q, precision),
            ScaledDecimal::from_rational_ceil(hi_q, precision),
        )
    }

    pub fn lo(&self) -> &ScaledDecimal {
        &self.lo
    }

    pub fn hi(&self) -> &ScaledDecimal {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.lo.precision
    }

    /// Exact width hi − lo as a rational.
    pub fn width(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    /// True iff width ≤ 10^(−p).
    pub fn width_within(&self, p: u32) -> bool {
        self.width() <= pow10_inv(p)
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// The overlap of two enclosures, or `None` when they are disjoint.
    /// Endpoints land on the finer of the two grids.
    pub fn intersection(&self, other: &Enclosure) -> Option<Enclosure> {
        if !self.intersects(other) {
            return None;
        }
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        Some(Enclosure::new(lo.clone(), hi.clone()))
    }

    /// Exact negation `[−hi, −lo]`.
    pub fn neg(&self) -> Self {
        Enclosure {
            lo: ScaledDecimal::new(-&self.hi.mantissa, self.hi.precision),
            hi: ScaledDecimal::new(-&self.lo.mantissa, self.lo.precision),
        }
    }

    /// Exact scaling by an integer (swapping endpoints when negative).
    pub fn scale_int(&self, k: &BigInt) -> Self {
        let a = ScaledDecimal::new(&self.lo.mantissa * k, self.lo.precision);
        let b = ScaledDecimal::new(&self.hi.mantissa * k, self.hi.precision);
        if k.is_negative() {
            Enclosure { lo: b, hi: a }
        } else {
            Enclosure { lo: a, hi: b }
        }
    }

    /// Outward rescale: exact when raising precision, floor/ceil when
    /// lowering it.
    pub fn rescale_outward(&self, precision: u32) -> Self {
        Enclosure {
            lo: self.lo.round_down(precision),
            hi: self.hi.round_up(precision),
        }
    }

    pub fn add(&self, other: &Enclosure) -> Self {
        enc_arith(ArithOp::Add, self, other)
    }

    pub fn sub(&self, other: &Enclosure) -> Self {
        enc_arith(ArithOp::Sub, self, other)
    }

    pub fn mul(&self, other: &Enclosure) -> Self {
        enc_arith(ArithOp::Mul, self, other)
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&enc_to_string(self))
    }
}

/// Binary interval operations with outward rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Interval arithmetic at the larger operand precision. Addition and
/// subtraction of common-grid values are exact; multiplication forms all
/// four endpoint products exactly (at precision Pa + Pb) and then rounds
/// outward to max(Pa, Pb).
pub fn enc_arith(op: ArithOp, a: &Enclosure, b: &Enclosure) -> Enclosure {
    let p = a.precision().max(b.precision());
    let (alo, ahi) = (a.lo.rescale_up(p), a.hi.rescale_up(p));
    let (blo, bhi) = (b.lo.rescale_up(p), b.hi.rescale_up(p));
    match op {
        ArithOp::Add => Enclosure {
            lo: ScaledDecimal::new(&alo.mantissa + &blo.mantissa, p),
            hi: ScaledDecimal::new(&ahi.mantissa + &bhi.mantissa, p),
        },
        ArithOp::Sub => Enclosure {
            lo: ScaledDecimal::new(&alo.mantissa - &bhi.mantissa, p),
            hi: ScaledDecimal::new(&ahi.mantissa - &blo.mantissa, p),
        },
        ArithOp::Mul => {
            // Four exact products at precision 2p, then outward to p.
            let products = [
                &alo.mantissa * &blo.mantissa,
                &alo.mantissa * &bhi.mantissa,
                &ahi.mantissa * &blo.mantissa,
                &ahi.mantissa * &bhi.mantissa,
            ];
            let lo2 = products.iter().min().expect("nonempty").clone();
            let hi2 = products.iter().max().expect("nonempty").clone();
            Enclosure {
                lo: ScaledDecimal::new(lo2, 2 * p).round_down(p),
                hi: ScaledDecimal::new(hi2, 2 * p).round_up(p),
            }
        }
    }
}

/// Interval division at the larger operand precision, outward-rounded.
/// Errors if the divisor interval contains zero.
pub fn enc_div(a: &Enclosure, b: &Enclosure) -> Result<Enclosure> {
    if !b.lo.mantissa.is_positive() && !b.hi.mantissa.is_negative() {
        return Err(Error::DivisorStraddlesZero);
    }
    let p = a.precision().max(b.precision());
    let quotients = [
        a.lo.to_rational() / b.lo.to_rational(),
        a.lo.to_rational() / b.hi.to_rational(),
        a.hi.to_rational() / b.lo.to_rational(),
        a.hi.to_rational() / b.hi.to_rational(),
    ];
    let lo_q = quotients.iter().min().expect("nonempty");
    let hi_q = quotients.iter().max().expect("nonempty");
    Ok(Enclosure::from_rational_bounds(lo_q, hi_q, p))
}

/// Enclosure of 2·atanh(t) = ln((1+t)/(1−t)) for an exact rational |t| < 1,
/// by the series 2·Σ_{j≥0} t^(2j+1)/(2j+1).
///
/// Terms are accumulated exactly; truncation stops once the geometric
/// remainder bound 2·|t|^(2J+3) / ((2J+3)·(1−t²)) drops to `eps` or below.
/// The remainder has the sign of `t` and is folded outward on that side.
/// Endpoints land on the 10^(−grid) lattice.
pub(crate) fn atanh_series_enclosure(t: &BigRational, eps: &BigRational, grid: u32) -> Enclosure {
    assert!(t.abs() < BigRational::one(), "|t| must be < 1");
    if t.is_zero() {
        return Enclosure::degenerate(ScaledDecimal::zero(grid));
    }
    let t2 = t * t;
    let one_minus_t2 = BigRational::one() - &t2;
    let two = BigRational::from_integer(BigInt::from(2));

    let mut partial = BigRational::zero();
    let mut pow = t.clone(); // t^(2j+1)
    let mut j: u64 = 0;
    let bound = loop {
        partial += &pow / BigRational::from_integer(BigInt::from(2 * j + 1));
        let next_pow_abs = pow.abs() * &t2; // |t|^(2j+3)
        let bound = &two * &next_pow_abs
            / (BigRational::from_integer(BigInt::from(2 * j + 3)) * &one_minus_t2);
        if bound <= *eps {
            break bound;
        }
        pow *= &t2;
        j += 1;
    };

    let value = &two * &partial; // 2·Σ so far; remainder in [0, bound]·sign(t)
    if t.is_positive() {
        Enclosure::from_rational_bounds(&value, &(&value + &bound), grid)
    } else {
        Enclosure::from_rational_bounds(&(&value - &bound), &value, grid)
    }
}

/// Rigorous enclosure of ln(q) for an exact rational q > 0, with final width
/// well inside the documented budget 10^(−P+2) (in practice ≤ 10^(−P)).
///
/// The argument is reduced by powers of two, q = y·2^k with y ∈ [2/3, 4/3],
/// so t = (y−1)/(y+1) satisfies |t| ≤ 1/5 and the atanh series converges
/// geometrically with ratio ≤ 1/25. The k·ln 2 contribution reuses the
/// independent ln 2 enclosure from the constants module, scaled exactly.
pub fn ln_rational(q: &BigRational, p: u32) -> Result<Enclosure> {
    if !q.is_positive() {
        return Err(Error::NonPositiveArgument);
    }
    let grid = p + 4;
    if q.is_one() {
        return Ok(Enclosure::degenerate(ScaledDecimal::zero(grid)));
    }

    // Reduce y into [2/3, 4/3] by powers of two; k may be negative.
    let four_thirds = BigRational::new(BigInt::from(4), BigInt::from(3));
    let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut y = q.clone();
    let mut k: i64 = 0;
    while y > four_thirds {
        y /= &two;
        k += 1;
    }
    while y < two_thirds {
        y *= &two;
        k -= 1;
    }

    let t = (&y - BigRational::one()) / (&y + BigRational::one());
    let eps = pow10_inv(p + 3);
    let series = atanh_series_enclosure(&t, &eps, grid);

    if k == 0 {
        return Ok(series);
    }
    // Precision for ln 2 so that |k|·width stays below 10^(−P−3).
    let k_digits = k.unsigned_abs().checked_ilog10().unwrap_or(0) + 1;
    let ln2 = constants::ln2_enclosure(p + 3 + k_digits);
    Ok(series.add(&ln2.scale_int(&BigInt::from(k))))
}

/// Render an enclosure as the longest common decimal prefix of its endpoints
/// followed by a bracket of the disagreeing suffixes, e.g. `0.12[3,4]`.
/// Parsing `prefix + lo_suffix` reproduces lo, and likewise for hi; equal
/// endpoints render as a single decimal string.
/// Compact rendering of a nonnegative width as an upper bound: `"0"` for an
/// exactly zero width, otherwise three significant digits in scientific
/// form, rounded *up* so the printed figure is still a true bound
/// (e.g. `"1.24e-5"` for 1.23456·10⁻⁵).
pub fn format_width(w: &BigRational) -> String {
    assert!(!w.is_negative(), "widths are nonnegative");
    if w.is_zero() {
        return "0".to_string();
    }
    let ten = BigRational::from_integer(BigInt::from(10));
    let hundred = BigRational::from_integer(BigInt::from(100));
    let thousand = BigRational::from_integer(BigInt::from(1000));
    // Scale into [100, 1000) by exact powers of ten; value = digits·10^(exp−2).
    let mut v = w.clone();
    let mut exp: i64 = 2;
    while v < hundred {
        v *= &ten;
        exp -= 1;
    }
    while v >= thousand {
        v /= &ten;
        exp += 1;
    }
    let mut digits = v.ceil().to_integer();
    if digits == BigInt::from(1000) {
        digits = BigInt::from(100);
        exp += 1;
    }
    let s = digits.to_string();
    format!("{}.{}e{}", &s[..1], &s[1..], exp)
}

pub fn enc_to_string(a: &Enclosure) -> String {
    let lo = a.lo.to_decimal_string();
    let hi = a.hi.to_decimal_string();
    if lo == hi {
        return lo;
    }
    let prefix_len = lo
        .bytes()
        .zip(hi.bytes())
        .take_while(|(x, y)| x == y)
        .count();
    let (prefix, lo_suf) = lo.split_at(prefix_len);
    let hi_suf = &hi[prefix_len..];
    format!("{prefix}[{lo_suf},{hi_suf}]")
}

/// Inverse of [`enc_to_string`] (used by round-trip tests and the CLI's
/// self-checks).
pub fn parse_enclosure(s: &str) -> Option<Enclosure> {
    match s.split_once('[') {
        None => {
            let x = ScaledDecimal::parse(s)?;
            Some(Enclosure::degenerate(x))
        }
        Some((prefix, rest)) => {
            let inner = rest.strip_suffix(']')?;
            let (lo_suf, hi_suf) = inner.split_once(',')?;
            let lo = ScaledDecimal::parse(&format!("{prefix}{lo_suf}"))?;
            let hi = ScaledDecimal::parse(&format!("{prefix}{hi_suf}"))?;
            Some(Enclosure::new(lo, hi))
        }
    }
}
