//! Dedekind eta, eta-quotients, and their q-expansions on grain 24.
//!
//! `eta(z) = q^(1/24) prod_{n>=1} (1 - q^n)`, so every eta-quotient
//! `prod_{delta | N} eta(delta z)^{r_delta}` has exponents in `(1/24)Z`; all
//! expansions here live on grain 24 and callers down-convert with
//! [`QSeries::to_grain`] when the support is integral.
//!
//! [`modularity_check`] reports the two classical 24-divisibility conditions
//! under which an eta-quotient transforms with weight `(1/2) sum r_delta` and
//! real character `((-1)^k s / d)` on `Gamma_0(N)`.  It never decides
//! holomorphy at cusps; vanishing claims are tested on q-expansions only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::operators::is_prime;
use crate::ring::CoefficientRing;
use crate::series::{ceil_div, euler_product, QSeries};

/// A formal product `prod eta(delta z)^{r_delta}` with level metadata.
///
/// Factors are kept sorted by `delta` with distinct deltas and nonzero
/// exponents; every `delta` must divide the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u64, i64)>,
    level: u64,
}

impl EtaQuotient {
    /// Canonicalize a factor list (merge duplicate deltas, drop zero
    /// exponents, sort ascending) and validate it against `level`.
    pub fn new(factors: Vec<(u64, i64)>, level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidEtaQuotient("level must be positive".into()));
        }
        let mut merged: Vec<(u64, i64)> = Vec::new();
        for (delta, r) in factors {
            if delta == 0 {
                return Err(Error::InvalidEtaQuotient(
                    "delta must be a positive integer".into(),
                ));
            }
            match merged.iter_mut().find(|(d, _)| *d == delta) {
                Some((_, acc)) => *acc += r,
                None => merged.push((delta, r)),
            }
        }
        merged.retain(|&(_, r)| r != 0);
        merged.sort_by_key(|&(d, _)| d);
        for &(delta, _) in &merged {
            if level % delta != 0 {
                return Err(Error::InvalidEtaQuotient(format!(
                    "delta {} does not divide level {}",
                    delta, level
                )));
            }
        }
        Ok(EtaQuotient {
            factors: merged,
            level,
        })
    }

    /// Same factors with the level replaced (the level is metadata only; the
    /// q-expansion does not depend on it).
    pub fn with_level(&self, level: u64) -> Result<Self> {
        EtaQuotient::new(self.factors.clone(), level)
    }

    /// Parse the text format `"eta(1)^24 * eta(25)^-1"`.  Whitespace is
    /// ignored, `^1` may be omitted, and the level defaults to the lcm of the
    /// deltas.
    pub fn parse(expr: &str) -> Result<Self> {
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::EtaParse("empty expression".into()));
        }
        let mut factors = Vec::new();
        for part in compact.split('*') {
            let rest = part
                .strip_prefix("eta(")
                .ok_or_else(|| Error::EtaParse(format!("expected eta(...) in {:?}", part)))?;
            let close = rest
                .find(')')
                .ok_or_else(|| Error::EtaParse(format!("missing ')' in {:?}", part)))?;
            let delta: u64 = rest[..close]
                .parse()
                .map_err(|_| Error::EtaParse(format!("bad delta in {:?}", part)))?;
            let tail = &rest[close + 1..];
            let r: i64 = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .ok_or_else(|| Error::EtaParse(format!("expected '^' in {:?}", part)))?
                    .parse()
                    .map_err(|_| Error::EtaParse(format!("bad exponent in {:?}", part)))?
            };
            factors.push((delta, r));
        }
        let level = factors
            .iter()
            .fold(1u64, |acc, &(d, _)| acc.lcm(&d));
        EtaQuotient::new(factors, level)
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Twice the weight: `sum r_delta`.
    pub fn weight_times_2(&self) -> i64 {
        self.factors.iter().map(|&(_, r)| r).sum()
    }

    /// Leading exponent in grain-24 units: `sum delta * r_delta`.
    pub fn offset_grain24(&self) -> i64 {
        self.factors
            .iter()
            .map(|&(d, r)| d as i64 * r)
            .sum()
    }

    /// Concatenation of factor lists (formal product of two quotients).
    pub fn concat(&self, other: &EtaQuotient) -> Result<EtaQuotient> {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(other.factors());
        let level = self.level.lcm(&other.level);
        EtaQuotient::new(factors, level)
    }
}

impl std::fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(d, r)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if r == 1 {
                write!(f, "eta({})", d)?;
            } else {
                write!(f, "eta({})^{}", d, r)?;
            }
        }
        Ok(())
    }
}

/// q-expansion of `eta(z)` itself: grain 24, offset 1, computed from the
/// finite product `prod_{n <= bound} (1 - q^n)` with the bound chosen so the
/// truncation is exact below `prec_grain24`.
pub fn eta_expansion(prec_grain24: i64, ring: &CoefficientRing) -> Result<QSeries> {
    if prec_grain24 < 2 {
        return Err(Error::InsufficientPrecision {
            grain: 24,
            needed: 2,
            available: prec_grain24,
        });
    }
    let unit_len = ceil_div(prec_grain24 - 1, 24);
    let e = euler_product(unit_len.max(1), ring)?;
    e.to_grain(24)?.shift(1).truncated(prec_grain24)
}

/// q-expansion of an eta-quotient on grain 24.
///
/// Each factor `eta(delta z)^r = q^(delta r / 24) (prod (1 - q^(delta n)))^r`
/// is computed on a compressed grain-1 grid and inflated, so the cost scales
/// with the number of *nonzero* coefficients rather than with the grain-24
/// window; negative exponents go through series inversion (the lead of eta is
/// 1, so inversion never fails).
pub fn eta_quotient_expansion(
    eq: &EtaQuotient,
    prec_grain24: i64,
    ring: &CoefficientRing,
) -> Result<QSeries> {
    let total_offset = eq.offset_grain24();
    if prec_grain24 <= total_offset {
        return Err(Error::InsufficientPrecision {
            grain: 24,
            needed: total_offset + 1,
            available: prec_grain24,
        });
    }
    if eq.factors.is_empty() {
        return QSeries::constant(BigInt::one(), ceil_div(prec_grain24, 24).max(1), ring.clone())?
            .to_grain(24)?
            .truncated(prec_grain24);
    }
    let mut acc: Option<QSeries> = None;
    for &(delta, r) in &eq.factors {
        let d = delta as i64;
        // unit-part length so that the factor reaches prec_grain24 - (total_offset - d*r)
        let unit_len = ceil_div(prec_grain24 - total_offset, 24 * d).max(1);
        let unit = euler_product(unit_len, ring)?.pow(r)?;
        let factor = unit.dilate(d).to_grain(24)?.shift(d * r);
        acc = Some(match acc {
            None => factor,
            Some(prev) => prev.mul(&factor)?,
        });
    }
    acc.expect("nonempty factor list").truncated(prec_grain24)
}

/// The outcome of the eta-quotient modularity conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularityVerdict {
    /// `sum r_delta` = twice the weight (odd for half-integral weight).
    pub weight_times_2: i64,
    /// `sum delta r_delta == 0 (mod 24)`.
    pub cond_a: bool,
    /// `sum (N/delta) r_delta == 0 (mod 24)`.
    pub cond_b: bool,
    /// Top argument of the real character `(top / d)`: for integral weight
    /// `k` this is `(-1)^k * u * w` where `s = prod delta^{r_delta} = u/w` in
    /// lowest terms.  For half-integral weight the `(-1)^k` twist is not
    /// defined and the field carries the bare `u * w`.
    pub character_top: BigInt,
}

/// Report the two 24-divisibility conditions, the weight, and the character
/// data of an eta-quotient.  Holomorphy at cusps is never decided here.
pub fn modularity_check(eq: &EtaQuotient) -> ModularityVerdict {
    let weight_times_2 = eq.weight_times_2();
    let sum_delta_r = eq.offset_grain24();
    let sum_codelta_r: i64 = eq
        .factors
        .iter()
        .map(|&(d, r)| (eq.level / d) as i64 * r)
        .sum();

    // s = prod delta^{r_delta} as a reduced fraction u/w
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for &(d, r) in &eq.factors {
        let p = BigInt::from(d).pow(r.unsigned_abs() as u32);
        if r >= 0 {
            num *= p;
        } else {
            den *= p;
        }
    }
    let g = num.gcd(&den);
    let (u, w) = (num / &g, den / g);
    let mut character_top = u * w;
    if weight_times_2 % 2 == 0 && (weight_times_2 / 2) % 2 != 0 {
        character_top = -character_top;
    }

    ModularityVerdict {
        weight_times_2,
        cond_a: sum_delta_r.rem_euclid(24) == 0,
        cond_b: sum_codelta_r.rem_euclid(24) == 0,
        character_top,
    }
}

/// The eta-quotient `F_p` that reduces to the constant 1 mod p:
/// `eta(z)^{p^2} / eta(p^2 z)` for `p >= 5`, and `eta(z)^27 / eta(9z)^3` for
/// `p = 3`.  Its powers `F_p^{p^{s-1}} ≡ 1 (mod p^s)` shift a form into a
/// cusp-form space without changing it mod `p^s`.
pub fn f_p_quotient(p: u64) -> Result<EtaQuotient> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p == 3 {
        EtaQuotient::new(vec![(1, 27), (9, -3)], 9)
    } else {
        EtaQuotient::new(vec![(1, (p * p) as i64), (p * p, -1)], p * p)
    }
}
