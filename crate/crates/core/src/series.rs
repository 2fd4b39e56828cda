//! The four slowly converging series α, β, S₁, S₂ and the related
//! partial-sum families γ_n (harmonic minus log) and S′_n (the alternating
//! half-area), as exact objects: term generators, closed-form partial sums,
//! rigorous tail sandwiches, and numeric enclosures.
//!
//! Series terms and partial sums are *symbolic* — an exact rational plus an
//! exact logarithm argument — so telescoping happens on rationals and all
//! approximation is deferred to a single ln evaluation. The α/β tails are
//! trapezoid-rule errors for ∫dx/x over unit intervals, which is what makes
//! the exact 1/(12n²)-scale sandwich bounds possible.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::constants;
use crate::error::{Error, Result};
use crate::exact::{self, rat, BigRational};
use crate::exec;
use crate::hpnum::{ln_rational, pow10_inv, Enclosure};

/// Identifies one of the series/partial-sum families.
///
/// `Alpha`, `Beta`, `S1`, `S2` are genuine infinite series indexed from
/// i = 2; `GammaN` and `SPrime` are partial-sum families indexed by n whose
/// closed forms exist but which have no termwise generator here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesId {
    Alpha,
    Beta,
    S1,
    S2,
    SPrime,
    GammaN,
}

impl SeriesId {
    pub fn name(self) -> &'static str {
        match self {
            SeriesId::Alpha => "alpha",
            SeriesId::Beta => "beta",
            SeriesId::S1 => "s1",
            SeriesId::S2 => "s2",
            SeriesId::SPrime => "sprime",
            SeriesId::GammaN => "gamma_n",
        }
    }
}

/// Whether a term's value is `rational − ln(arg)` or `ln(arg) − rational`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermForm {
    RationalMinusLog,
    LogMinusRational,
}

/// One exact series term: its value is determined by `form`, an exact
/// rational part, and an exact positive logarithm argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTerm {
    pub rational_part: BigRational,
    pub log_arg: BigRational,
    pub form: TermForm,
}

impl SeriesTerm {
    /// Enclosure of the term's real value.
    pub fn value_enclosure(&self, p: u32) -> Result<Enclosure> {
        let r = Enclosure::from_rational_outward(&self.rational_part, p + 8);
        let l = ln_rational(&self.log_arg, p + 6)?;
        Ok(match self.form {
            TermForm::RationalMinusLog => r.sub(&l),
            TermForm::LogMinusRational => l.sub(&r),
        })
    }
}

/// Exact i-th term (i ≥ 2) of α, β, S₁, or S₂.
///
/// α terms are `(i−1/2)/(i(i−1)) − ln(i/(i−1))` and β terms are
/// `(i+1/2)/((i+1)i) − ln((i+1)/i)` — both trapezoid-overestimates of a unit
/// strip of ∫dx/x, hence strictly positive. S₁ terms are
/// `ln(i/(i−1)) − 1/i`, S₂ terms are `1/i − ln((i+1)/i)`; both positive as
/// well.
pub fn term(id: SeriesId, i: u64) -> Result<SeriesTerm> {
    match id {
        SeriesId::Alpha | SeriesId::Beta | SeriesId::S1 | SeriesId::S2 => {}
        other => {
            return Err(Error::UnsupportedSeries {
                op: "term",
                id: other.name(),
            })
        }
    }
    if i < 2 {
        return Err(Error::InvalidIndex { got: i, min: 2 });
    }
    let ib = BigInt::from(i);
    Ok(match id {
        SeriesId::Alpha => SeriesTerm {
            // (i − 1/2)/(i(i−1)) = (2i−1)/(2i(i−1))
            rational_part: BigRational::new(2 * &ib - 1, 2 * &ib * (&ib - 1)),
            log_arg: BigRational::new(ib.clone(), &ib - 1),
            form: TermForm::RationalMinusLog,
        },
        SeriesId::Beta => SeriesTerm {
            // (i + 1/2)/((i+1)i) = (2i+1)/(2i(i+1))
            rational_part: BigRational::new(2 * &ib + 1, 2 * &ib * (&ib + 1)),
            log_arg: BigRational::new(&ib + 1, ib.clone()),
            form: TermForm::RationalMinusLog,
        },
        SeriesId::S1 => SeriesTerm {
            rational_part: BigRational::new(BigInt::one(), ib.clone()),
            log_arg: BigRational::new(ib.clone(), &ib - 1),
            form: TermForm::LogMinusRational,
        },
        SeriesId::S2 => SeriesTerm {
            rational_part: BigRational::new(BigInt::one(), ib.clone()),
            log_arg: BigRational::new(&ib + 1, ib.clone()),
            form: TermForm::RationalMinusLog,
        },
        _ => unreachable!(),
    })
}

/// The arch-shift identity: the (i+1)-th α term equals the i-th β term
/// exactly, field for field. This is what lets every β tail bound be read
/// off the α tail bounds one index later.
pub fn shift_check(i: u64) -> Result<bool> {
    let a = term(SeriesId::Alpha, i + 1)?;
    let b = term(SeriesId::Beta, i)?;
    Ok(a == b)
}

/// Exact symbolic partial sum: the value is `rational_part + log_coeff ·
/// ln(log_arg)` with `log_coeff ∈ {−1, 0, +1}`. The log argument is the
/// telescoped product of the term log arguments — telescoping happens on
/// exact rationals, never on evaluated logarithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSum {
    pub rational_part: BigRational,
    pub log_coeff: i8,
    pub log_arg: BigRational,
}

impl PartialSum {
    /// Enclosure of the partial sum's real value; see [`evaluate`].
    pub fn evaluate(&self, p: u32) -> Result<Enclosure> {
        evaluate(self, p)
    }
}

/// Exact closed form of the n-th partial sum (n ≥ 2; n ≥ 1 for γ_n):
///
/// * α_n  = H_n − 1/2 − 1/(2n) − ln n
/// * β_n  = H_n − 5/4 + 1/(2(n+1)) − ln((n+1)/2)
/// * S₁_n = 1 − H_n + ln n
/// * S₂_n = H_n − 1 − ln((n+1)/2)
/// * S′_n = ln(2n/(n+1))
/// * γ_n  = H_n − ln n
pub fn partial_closed(id: SeriesId, n: u64) -> Result<PartialSum> {
    let min = if id == SeriesId::GammaN { 1 } else { 2 };
    if n < min {
        return Err(Error::InvalidIndex { got: n, min });
    }
    let nb = BigInt::from(n);
    let h = exact::harmonic(n)?;
    Ok(match id {
        SeriesId::Alpha => PartialSum {
            rational_part: &h - rat(1, 2) - BigRational::new(BigInt::one(), 2 * &nb),
            log_coeff: -1,
            log_arg: BigRational::from_integer(nb),
        },
        SeriesId::Beta => PartialSum {
            rational_part: &h - rat(5, 4) + BigRational::new(BigInt::one(), 2 * (&nb + 1)),
            log_coeff: -1,
            log_arg: BigRational::new(&nb + 1, BigInt::from(2)),
        },
        SeriesId::S1 => PartialSum {
            rational_part: BigRational::one() - &h,
            log_coeff: 1,
            log_arg: BigRational::from_integer(nb),
        },
        SeriesId::S2 => PartialSum {
            rational_part: &h - BigRational::one(),
            log_coeff: -1,
            log_arg: BigRational::new(&nb + 1, BigInt::from(2)),
        },
        SeriesId::SPrime => PartialSum {
            rational_part: BigRational::zero(),
            log_coeff: 1,
            log_arg: BigRational::new(2 * &nb, &nb + 1),
        },
        SeriesId::GammaN => PartialSum {
            rational_part: h,
            log_coeff: -1,
            log_arg: BigRational::from_integer(nb),
        },
    })
}

fn termwise_form(id: SeriesId) -> Result<TermForm> {
    Ok(match id {
        SeriesId::Alpha | SeriesId::Beta | SeriesId::S2 => TermForm::RationalMinusLog,
        SeriesId::S1 => TermForm::LogMinusRational,
        other => {
            return Err(Error::UnsupportedSeries {
                op: "partial_termwise",
                id: other.name(),
            })
        }
    })
}

fn termwise_assemble(form: TermForm, parts: (BigRational, BigRational)) -> PartialSum {
    let (rat_sum, arg_prod) = parts;
    debug_assert!(arg_prod.is_positive());
    match form {
        TermForm::RationalMinusLog => PartialSum {
            rational_part: rat_sum,
            log_coeff: -1,
            log_arg: arg_prod,
        },
        TermForm::LogMinusRational => PartialSum {
            rational_part: -rat_sum,
            log_coeff: 1,
            log_arg: arg_prod,
        },
    }
}

/// Grain for parallel term accumulation.
const TERM_GRAIN: u64 = 256;

/// Partial sum accumulated term by term: rational parts are added exactly
/// and log arguments are multiplied exactly (they telescope to the closed
/// form's argument). Must equal [`partial_closed`] field for field — that
/// equality is one of the audited claims, so this function does *not*
/// assert it; the audit does.
pub fn partial_termwise(id: SeriesId, n: u64) -> Result<PartialSum> {
    let form = termwise_form(id)?;
    if n < 2 {
        return Err(Error::InvalidIndex { got: n, min: 2 });
    }
    let parts = exec::map_reduce(
        2,
        n,
        TERM_GRAIN,
        &|i| {
            let t = term(id, i).expect("index ≥ 2 by construction");
            (t.rational_part, t.log_arg)
        },
        &|a, b| (a.0 + b.0, a.1 * b.1),
    );
    Ok(termwise_assemble(form, parts))
}

/// Sequential twin of [`partial_termwise`]; same reduction tree, same result.
pub fn partial_termwise_seq(id: SeriesId, n: u64) -> Result<PartialSum> {
    let form = termwise_form(id)?;
    if n < 2 {
        return Err(Error::InvalidIndex { got: n, min: 2 });
    }
    let parts = exec::map_reduce_seq(
        2,
        n,
        TERM_GRAIN,
        &|i| {
            let t = term(id, i).expect("index ≥ 2 by construction");
            (t.rational_part, t.log_arg)
        },
        &|a, b| (a.0 + b.0, a.1 * b.1),
    );
    Ok(termwise_assemble(form, parts))
}

/// Exact rational bounds on the tail Σ_{i>n} of α or β: 0 ≤ lo ≤ tail ≤ hi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailSandwich {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl TailSandwich {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// The sandwich as an enclosure on the 10^(−grid) lattice.
    pub fn as_enclosure(&self, grid: u32) -> Enclosure {
        Enclosure::from_rational_bounds(&self.lo, &self.hi, grid)
    }
}

/// Exact tail sandwich for α or β after n terms (n ≥ 2).
///
/// Each α term i is the trapezoid-rule error for ∫dx/x over [i−1, i], which
/// for the convex integrand 1/x lies between 1/(12·i³)·(i−1)⁻⁰-style bounds;
/// summing the per-strip integral bounds telescopes to
/// lo = 1/(12(n+1)²), hi = 1/(12(n−1)²). β tails are α tails shifted one
/// index (the arch-shift identity), so tail(β, n) = tail(α, n+1) exactly.
pub fn tail_sandwich(id: SeriesId, n: u64) -> Result<TailSandwich> {
    if n < 2 {
        return Err(Error::InvalidIndex { got: n, min: 2 });
    }
    let twelfth = |k: u64| {
        let kb = BigInt::from(k);
        BigRational::new(BigInt::one(), 12 * &kb * &kb)
    };
    match id {
        SeriesId::Alpha => Ok(TailSandwich {
            lo: twelfth(n + 1),
            hi: twelfth(n - 1),
        }),
        SeriesId::Beta => Ok(TailSandwich {
            lo: twelfth(n + 2),
            hi: twelfth(n),
        }),
        other => Err(Error::UnsupportedSeries {
            op: "tail_sandwich",
            id: other.name(),
        }),
    }
}

/// Enclosure of a symbolic partial sum `r + c·ln(q)`: the rational part is
/// embedded outward and the single logarithm is evaluated at a precision
/// chosen so the final width lands well inside 10^(−P+2) (in practice near
/// 10^(−P−4)).
pub fn evaluate(ps: &PartialSum, p: u32) -> Result<Enclosure> {
    if ps.log_coeff != 0 && !ps.log_arg.is_positive() {
        return Err(Error::NonPositiveArgument);
    }
    let r = Enclosure::from_rational_outward(&ps.rational_part, p + 8);
    Ok(match ps.log_coeff {
        0 => r,
        1 => r.add(&ln_rational(&ps.log_arg, p + 6)?),
        -1 => r.sub(&ln_rational(&ps.log_arg, p + 6)?),
        c => panic!("log_coeff must be in {{-1, 0, 1}}, got {c}"),
    })
}

/// Largest n the limit construction will walk to before reporting that the
/// requested precision is out of reach for a 1/(3n³)-width sandwich.
pub const MAX_LIMIT_N: u64 = 5_000_000;

fn alpha_sandwich_width(n: u64) -> BigRational {
    let s = tail_sandwich(SeriesId::Alpha, n).expect("n ≥ 2");
    s.width()
}

/// Smallest n whose α tail sandwich is narrower than (999/1000)·10^(−P),
/// saturating at [`MAX_LIMIT_N`]; the flag reports whether the target was
/// actually reached. Float estimate seeds an exact binary search (the
/// sandwich width is strictly decreasing in n).
fn sandwich_n_saturating(p: u32) -> (u64, bool) {
    let target = rat(999, 1000) * pow10_inv(p);
    // Width ≈ 1/(3n³), so n ≈ 10^((p − log10 3)/3). Saturating float→int
    // casts make absurd p land on the cap and fail the reached check.
    let est = 10f64.powf((p as f64 - 3f64.log10()) / 3.0);
    let mut n = ((est * 0.9) as u64).clamp(2, MAX_LIMIT_N);
    let mut too_wide = 1u64;
    while alpha_sandwich_width(n) > target {
        too_wide = n;
        if n >= MAX_LIMIT_N {
            return (MAX_LIMIT_N, false);
        }
        n = (n + n / 4 + 1).min(MAX_LIMIT_N);
    }
    // Invariant: width(n) ≤ target, width(too_wide) > target (or too_wide = 1).
    while too_wide + 1 < n {
        let mid = too_wide + (n - too_wide) / 2;
        if alpha_sandwich_width(mid.max(2)) <= target {
            n = mid;
        } else {
            too_wide = mid;
        }
    }
    (n.max(2), true)
}

/// The n that [`limit_enclosure`] would sum to for α or β at P decimal
/// digits, saturating at [`MAX_LIMIT_N`] instead of erroring. Callers with
/// their own term budget can take the min of this and their cap.
pub fn suggested_n(p: u32) -> u64 {
    sandwich_n_saturating(p).0
}

fn choose_alpha_n(p: u32) -> Result<u64> {
    match sandwich_n_saturating(p) {
        (n, true) => Ok(n),
        (_, false) => Err(Error::ParametersInsufficient {
            context: format!(
                "tail sandwich width 10^(-{p}) needs n beyond the cap {MAX_LIMIT_N}"
            ),
        }),
    }
}

/// Enclosure of a series' limit.
///
/// α and β are evaluated as closed-form partial plus tail sandwich at an n
/// chosen for the requested width; S₁ and S₂ ride on them through the exact
/// identities S₁ = 1/2 − α and S₂ = 1/4 + β (certified independently by the
/// audit's finite-n checks); S′ **is** ln 2. γ_n has no limit operation here
/// because its limit is γ itself — that is the constants module's job.
pub fn limit_enclosure(id: SeriesId, p: u32) -> Result<Enclosure> {
    match id {
        SeriesId::SPrime => Ok(constants::ln2_enclosure(p)),
        SeriesId::Alpha => {
            let n = choose_alpha_n(p)?;
            let base = evaluate(&partial_closed(SeriesId::Alpha, n)?, p + 2)?;
            Ok(base.add(&tail_sandwich(SeriesId::Alpha, n)?.as_enclosure(p + 6)))
        }
        SeriesId::Beta => {
            // tail(β, n) = tail(α, n+1), so the α walk shifted by one.
            let n = choose_alpha_n(p)?.max(3) - 1;
            let base = evaluate(&partial_closed(SeriesId::Beta, n)?, p + 2)?;
            Ok(base.add(&tail_sandwich(SeriesId::Beta, n)?.as_enclosure(p + 6)))
        }
        SeriesId::S1 => {
            let half = Enclosure::from_rational_outward(&rat(1, 2), p.max(1));
            Ok(half.sub(&limit_enclosure(SeriesId::Alpha, p)?))
        }
        SeriesId::S2 => {
            let quarter = Enclosure::from_rational_outward(&rat(1, 4), p.max(2));
            Ok(quarter.add(&limit_enclosure(SeriesId::Beta, p)?))
        }
        SeriesId::GammaN => Err(Error::UnsupportedSeries {
            op: "limit_enclosure",
            id: SeriesId::GammaN.name(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::gamma_em_enclosure;
    use crate::exact::TelescopeId;
    use crate::hpnum::ScaledDecimal;

    #[test]
    fn term_examples() {
        let a2 = term(SeriesId::Alpha, 2).unwrap();
        assert_eq!(a2.rational_part, rat(3, 4));
        assert_eq!(a2.log_arg, rat(2, 1));
        assert_eq!(a2.form, TermForm::RationalMinusLog);

        let b2 = term(SeriesId::Beta, 2).unwrap();
        assert_eq!(b2.rational_part, rat(5, 12));
        assert_eq!(b2.log_arg, rat(3, 2));

        let b3 = term(SeriesId::Beta, 3).unwrap();
        assert_eq!(b3.rational_part, rat(7, 24));
        assert_eq!(b3.log_arg, rat(4, 3));

        let s1 = term(SeriesId::S1, 2).unwrap();
        assert_eq!(s1.rational_part, rat(1, 2));
        assert_eq!(s1.form, TermForm::LogMinusRational);
    }

    #[test]
    fn term_domain_errors() {
        assert!(matches!(
            term(SeriesId::Alpha, 1),
            Err(Error::InvalidIndex { .. })
        ));
        assert!(matches!(
            term(SeriesId::SPrime, 2),
            Err(Error::UnsupportedSeries { .. })
        ));
        assert!(matches!(
            term(SeriesId::GammaN, 2),
            Err(Error::UnsupportedSeries { .. })
        ));
    }

    #[test]
    fn term_values_are_positive() {
        for id in [SeriesId::Alpha, SeriesId::Beta, SeriesId::S1, SeriesId::S2] {
            for i in [2u64, 3, 10, 1000] {
                let enc = term(id, i).unwrap().value_enclosure(20).unwrap();
                assert!(
                    enc.lo().to_rational().is_positive(),
                    "{id:?} term {i} not provably positive: {enc}"
                );
            }
        }
    }

    #[test]
    fn term_pairs_recover_telescoping_sums() {
        // s1_i + α_i = 1/(2i(i−1)) and s2_i − β_i = 1/(2(i+1)i): with equal
        // log arguments the logs cancel, leaving exact rational identities.
        for i in [2u64, 3, 17, 4096] {
            let a = term(SeriesId::Alpha, i).unwrap();
            let s1 = term(SeriesId::S1, i).unwrap();
            assert_eq!(a.log_arg, s1.log_arg);
            assert_eq!(
                &a.rational_part - &s1.rational_part,
                TelescopeId::S1P.term(i).unwrap()
            );

            let b = term(SeriesId::Beta, i).unwrap();
            let s2 = term(SeriesId::S2, i).unwrap();
            assert_eq!(b.log_arg, s2.log_arg);
            assert_eq!(
                &s2.rational_part - &b.rational_part,
                TelescopeId::S2P.term(i).unwrap()
            );
        }
    }

    #[test]
    fn shift_identity_holds() {
        for i in [2u64, 3, 100, 9999] {
            assert!(shift_check(i).unwrap(), "shift failed at i = {i}");
        }
    }

    #[test]
    fn partial_closed_examples() {
        let a2 = partial_closed(SeriesId::Alpha, 2).unwrap();
        assert_eq!(a2.rational_part, rat(3, 4));
        assert_eq!(a2.log_coeff, -1);
        assert_eq!(a2.log_arg, rat(2, 1));

        let b2 = partial_closed(SeriesId::Beta, 2).unwrap();
        assert_eq!(b2.rational_part, rat(5, 12));
        assert_eq!(b2.log_arg, rat(3, 2));

        let sp = partial_closed(SeriesId::SPrime, 1000).unwrap();
        assert_eq!(sp.rational_part, rat(0, 1));
        assert_eq!(sp.log_coeff, 1);
        assert_eq!(sp.log_arg, rat(2000, 1001));

        let g1 = partial_closed(SeriesId::GammaN, 1).unwrap();
        assert_eq!(g1.rational_part, rat(1, 1));
        assert_eq!(g1.log_arg, rat(1, 1));
        assert!(partial_closed(SeriesId::GammaN, 0).is_err());
        assert!(partial_closed(SeriesId::Alpha, 1).is_err());
    }

    #[test]
    fn termwise_equals_closed() {
        let a3 = partial_termwise(SeriesId::Alpha, 3).unwrap();
        assert_eq!(a3.rational_part, rat(7, 6)); // 3/4 + 5/12
        assert_eq!(a3.log_arg, rat(3, 1)); // 2 · 3/2

        for id in [SeriesId::Alpha, SeriesId::Beta, SeriesId::S1, SeriesId::S2] {
            for n in [2u64, 3, 17, 1000] {
                assert_eq!(
                    partial_termwise(id, n).unwrap(),
                    partial_closed(id, n).unwrap(),
                    "{id:?} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn termwise_parallel_equals_sequential() {
        for id in [SeriesId::Alpha, SeriesId::S1] {
            for n in [2u64, 255, 1000] {
                assert_eq!(
                    partial_termwise(id, n).unwrap(),
                    partial_termwise_seq(id, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let s10 = tail_sandwich(SeriesId::Alpha, 10).unwrap();
        assert_eq!(s10.lo, rat(1, 1452)); // 1/(12·11²)
        assert_eq!(s10.hi, rat(1, 972)); // 1/(12·9²)

        // β sandwich is the α sandwich one index later.
        for n in [2u64, 10, 500] {
            assert_eq!(
                tail_sandwich(SeriesId::Beta, n).unwrap(),
                tail_sandwich(SeriesId::Alpha, n + 1).unwrap()
            );
        }

        let s100 = tail_sandwich(SeriesId::Alpha, 100).unwrap();
        assert!(s100.width() <= pow10_inv(5));

        assert!(tail_sandwich(SeriesId::S1, 10).is_err());
    }

    #[test]
    fn sandwich_contains_identity_routed_tail() {
        // tail(α, n) = α − α_n, with α from the limit construction at a
        // much tighter precision than the sandwich being validated.
        let alpha = limit_enclosure(SeriesId::Alpha, 14).unwrap();
        for n in [2u64, 10, 37, 100] {
            let partial = evaluate(&partial_closed(SeriesId::Alpha, n).unwrap(), 16).unwrap();
            let tail = alpha.sub(&partial);
            let s = tail_sandwich(SeriesId::Alpha, n).unwrap();
            assert!(
                s.lo <= tail.lo().to_rational() && tail.hi().to_rational() <= s.hi,
                "sandwich misses true tail at n = {n}"
            );
        }
    }

    #[test]
    fn evaluate_examples() {
        let zero = PartialSum {
            rational_part: rat(0, 1),
            log_coeff: 0,
            log_arg: rat(1, 1),
        };
        let e = evaluate(&zero, 30).unwrap();
        assert_eq!(e.width(), BigRational::zero());
        assert!(e.contains_rational(&BigRational::zero()));

        // 3/4 − ln 2 = 0.0568528194400546905…
        let ps = PartialSum {
            rational_part: rat(3, 4),
            log_coeff: -1,
            log_arg: rat(2, 1),
        };
        let e = evaluate(&ps, 12).unwrap();
        let lit = ScaledDecimal::parse("0.056852819440").unwrap().to_rational();
        assert!(e.lo().to_rational() >= lit);
        assert!(e.hi().to_rational() < &lit + pow10_inv(12));
    }

    #[test]
    fn evaluate_rejects_bad_log_arg() {
        let ps = PartialSum {
            rational_part: rat(1, 1),
            log_coeff: 1,
            log_arg: rat(-2, 1),
        };
        assert_eq!(evaluate(&ps, 10), Err(Error::NonPositiveArgument));
    }

    #[test]
    fn gamma_n_approaches_gamma_like_half_n() {
        // γ_n − γ ∈ (0.49/n, 0.51/n) at n = 10⁵.
        let n = 100_000u64;
        let gn = evaluate(&partial_closed(SeriesId::GammaN, n).unwrap(), 12).unwrap();
        let g = gamma_em_enclosure(12).unwrap();
        let diff = gn.sub(&g);
        assert!(diff.lo().to_rational() > rat(49, 10_000_000));
        assert!(diff.hi().to_rational() < rat(51, 10_000_000));
    }

    #[test]
    fn limit_enclosures_match_constant_identities() {
        // α = γ − 1/2, β = γ + ln2 − 5/4, S₁ = 1 − γ, S₂ = γ + ln2 − 1,
        // S′ = ln 2: all derived from the independent constants oracles.
        let p = 10;
        let g = gamma_em_enclosure(p + 2).unwrap();
        let l2 = constants::ln2_enclosure(p + 2);
        let emb = |q: BigRational| Enclosure::from_rational_outward(&q, p + 4);

        let alpha = limit_enclosure(SeriesId::Alpha, p).unwrap();
        assert!(alpha.width_within(p));
        assert!(alpha.intersects(&g.sub(&emb(rat(1, 2)))));

        let beta = limit_enclosure(SeriesId::Beta, p).unwrap();
        assert!(beta.width_within(p));
        assert!(beta.intersects(&g.add(&l2).sub(&emb(rat(5, 4)))));

        let s1 = limit_enclosure(SeriesId::S1, p).unwrap();
        assert!(s1.intersects(&emb(rat(1, 1)).sub(&g)));

        let s2 = limit_enclosure(SeriesId::S2, p).unwrap();
        assert!(s2.intersects(&g.add(&l2).sub(&emb(rat(1, 1)))));

        let sp = limit_enclosure(SeriesId::SPrime, p).unwrap();
        assert!(sp.intersects(&l2));

        assert!(matches!(
            limit_enclosure(SeriesId::GammaN, p),
            Err(Error::UnsupportedSeries { .. })
        ));
    }

    #[test]
    fn limit_digit_windows() {
        // α = 0.0772156649015… (truncation window), β = 0.0203628454614…
        // (the 10-digit literal 0.0203628455 is a rounding), S₁ =
        // 0.4227843350984… (0.4227843351 is a rounding).
        let alpha = limit_enclosure(SeriesId::Alpha, 10).unwrap();
        let lit = ScaledDecimal::parse("0.0772156649").unwrap().to_rational();
        let window = (lit.clone(), &lit + pow10_inv(10));
        assert!(
            alpha.hi().to_rational() >= window.0 && alpha.lo().to_rational() <= window.1,
            "alpha enclosure disjoint from its digit window"
        );

        let beta = limit_enclosure(SeriesId::Beta, 10).unwrap();
        let lit = ScaledDecimal::parse("0.0203628455").unwrap().to_rational();
        let half = pow10_inv(10) / rat(2, 1);
        assert!(beta.hi().to_rational() >= &lit - &half);
        assert!(beta.lo().to_rational() <= &lit + &half);

        let s1 = limit_enclosure(SeriesId::S1, 10).unwrap();
        let lit = ScaledDecimal::parse("0.4227843351").unwrap().to_rational();
        assert!(s1.hi().to_rational() >= &lit - &half);
        assert!(s1.lo().to_rational() <= &lit + &half);
    }

    #[test]
    fn suggested_n_is_minimal_for_target() {
        for p in [3u32, 8, 12] {
            let n = suggested_n(p);
            let target = rat(999, 1000) * pow10_inv(p);
            assert!(alpha_sandwich_width(n) <= target, "p = {p}: n too small");
            assert!(
                alpha_sandwich_width(n - 1) > target,
                "p = {p}: n = {n} not minimal"
            );
        }
        assert!(suggested_n(5) < suggested_n(10));
        // Beyond the cap it saturates rather than erroring.
        assert_eq!(suggested_n(25), MAX_LIMIT_N);
    }

    #[test]
    fn limit_unreachable_precision_errors() {
        assert!(matches!(
            limit_enclosure(SeriesId::Alpha, 25),
            Err(Error::ParametersInsufficient { .. })
        ));
        assert!(matches!(
            limit_enclosure(SeriesId::S2, 25),
            Err(Error::ParametersInsufficient { .. })
        ));
    }

    #[test]
    fn partials_strictly_increase() {
        // α_{n+1} > α_n with a gap far exceeding evaluation widths.
        for id in [SeriesId::Alpha, SeriesId::Beta] {
            for n in [2u64, 10, 50] {
                let a = evaluate(&partial_closed(id, n).unwrap(), 14).unwrap();
                let b = evaluate(&partial_closed(id, n + 1).unwrap(), 14).unwrap();
                assert!(
                    b.lo() > a.hi(),
                    "{id:?} partials not separated at n = {n}"
                );
            }
        }
    }
}
