//! Truncated Laurent q-expansions with exact coefficients.
//!
//! A [`QSeries`] stores the coefficients of `q^(n/d)` for `n` in the window
//! `[offset, prec)`, where `d` is the *grain* of the series.  Exponents below
//! `offset/d` are structurally zero; exponents at or above `prec/d` are
//! *unknown*, and reading them is an error rather than a silent zero.  All
//! arithmetic propagates precision conservatively:
//!
//! * `add`: result precision is the minimum of the two (after the grains are
//!   unified to their lcm),
//! * `mul`: result precision is `min(N_a + v_b, N_b + v_a)`,
//! * `invert`: a series known on `[v, N)` determines its inverse on
//!   `[-v, N - 2v)`.
//!
//! Coefficients are arbitrary-precision integers, or canonical residues in
//! `[0, m)` when the ring is `Z/m`.  Equality is always semantic
//! ([`QSeries::equal_up_to`]); stored zeros are never trimmed, so offsets
//! stay meaningful for Laurent series.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::CoefficientRing;

/// Largest residue modulus for which convolutions run on plain `u64`
/// accumulators: products stay below 2^32 and sums of up to 2^31 of them
/// below 2^63, so no intermediate reduction is needed.
const FAST_MODULUS_MAX: u64 = 0xffff;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    grain: i64,
    offset: i64,
    prec: i64,
    coeffs: Vec<BigInt>,
    ring: CoefficientRing,
}

impl QSeries {
    /// Build a series from explicit coefficients.  Entry `i` of `coeffs` is
    /// the coefficient of `q^((offset + i)/grain)`; the precision becomes
    /// `offset + coeffs.len()`.  Residue coefficients are reduced into
    /// canonical range.
    pub fn new(
        grain: i64,
        offset: i64,
        coeffs: Vec<BigInt>,
        ring: CoefficientRing,
    ) -> Result<Self> {
        if grain < 1 {
            return Err(Error::InvalidGrain(grain));
        }
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        let prec = offset + coeffs.len() as i64;
        let coeffs = coeffs.into_iter().map(|c| ring.normalize(c)).collect();
        Ok(QSeries {
            grain,
            offset,
            prec,
            coeffs,
            ring,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(grain: i64, offset: i64, coeffs: &[i64], ring: CoefficientRing) -> Result<Self> {
        QSeries::new(
            grain,
            offset,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            ring,
        )
    }

    /// The zero series with the stated window.
    pub fn zero(grain: i64, offset: i64, prec: i64, ring: CoefficientRing) -> Result<Self> {
        if grain < 1 {
            return Err(Error::InvalidGrain(grain));
        }
        if prec <= offset {
            return Err(Error::EmptyCoefficients);
        }
        Ok(QSeries {
            grain,
            offset,
            prec,
            coeffs: vec![BigInt::zero(); (prec - offset) as usize],
            ring,
        })
    }

    /// The constant series `c` on grain 1 with precision `prec`.
    pub fn constant(c: BigInt, prec: i64, ring: CoefficientRing) -> Result<Self> {
        let mut s = QSeries::zero(1, 0, prec.max(1), ring)?;
        s.coeffs[0] = s.ring.normalize(c);
        Ok(s)
    }

    pub fn grain(&self) -> i64 {
        self.grain
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact coefficient of `q^(n/grain)`.  `n` must lie in `[offset, prec)`;
    /// reading beyond the precision window is an error, not a zero.
    pub fn coefficient_at(&self, n: i64) -> Result<&BigInt> {
        if n < self.offset || n >= self.prec {
            return Err(Error::IndexOutOfRange {
                index: n,
                offset: self.offset,
                prec: self.prec,
                grain: self.grain,
            });
        }
        Ok(&self.coeffs[(n - self.offset) as usize])
    }

    /// Coefficient of `q^(n/grain)` when it is known: structural zero below
    /// the offset, stored value inside the window, `None` at or beyond the
    /// precision.
    pub(crate) fn known_coeff(&self, n: i64) -> Option<BigInt> {
        if n >= self.prec {
            None
        } else if n < self.offset {
            Some(BigInt::zero())
        } else {
            Some(self.coeffs[(n - self.offset) as usize].clone())
        }
    }

    fn require_same_ring(&self, other: &QSeries) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    /// Rescale to a compatible grain.  Upscaling (`grain | new_grain`) spreads
    /// the coefficients onto the finer grid and is always lossless;
    /// downscaling (`new_grain | grain`) errors if any nonzero coefficient
    /// sits at an exponent not representable in the target grain.
    pub fn to_grain(&self, new_grain: i64) -> Result<QSeries> {
        if new_grain < 1 {
            return Err(Error::InvalidGrain(new_grain));
        }
        if new_grain == self.grain {
            return Ok(self.clone());
        }
        if new_grain % self.grain == 0 {
            let f = new_grain / self.grain;
            let offset = self.offset * f;
            let prec = self.prec * f;
            let mut coeffs = vec![BigInt::zero(); (prec - offset) as usize];
            for (i, c) in self.coeffs.iter().enumerate() {
                coeffs[i * f as usize] = c.clone();
            }
            Ok(QSeries {
                grain: new_grain,
                offset,
                prec,
                coeffs,
                ring: self.ring.clone(),
            })
        } else if self.grain % new_grain == 0 {
            let f = self.grain / new_grain;
            for (i, c) in self.coeffs.iter().enumerate() {
                let n = self.offset + i as i64;
                if !c.is_zero() && n % f != 0 {
                    return Err(Error::NonIntegralSupport {
                        num: n,
                        den: self.grain,
                        target: new_grain,
                    });
                }
            }
            let offset = ceil_div(self.offset, f);
            let prec = ceil_div(self.prec, f);
            if prec <= offset {
                return Err(Error::EmptyCoefficients);
            }
            let mut coeffs = vec![BigInt::zero(); (prec - offset) as usize];
            for (i, c) in self.coeffs.iter().enumerate() {
                let n = self.offset + i as i64;
                if n % f == 0 {
                    coeffs[(n / f - offset) as usize] = c.clone();
                }
            }
            Ok(QSeries {
                grain: new_grain,
                offset,
                prec,
                coeffs,
                ring: self.ring.clone(),
            })
        } else {
            Err(Error::IncompatibleGrain {
                from: self.grain,
                to: new_grain,
            })
        }
    }

    /// Unify two series onto the lcm of their grains.
    fn unify(&self, other: &QSeries) -> Result<(QSeries, QSeries)> {
        self.require_same_ring(other)?;
        let g = self.grain.lcm(&other.grain);
        Ok((self.to_grain(g)?, other.to_grain(g)?))
    }

    /// Substitute `q -> q^t` within the same grain: the coefficient of
    /// `q^(n/d)` moves to `q^(tn/d)`.
    pub(crate) fn dilate(&self, t: i64) -> QSeries {
        assert!(t >= 1);
        if t == 1 {
            return self.clone();
        }
        let offset = self.offset * t;
        let prec = self.prec * t;
        let mut coeffs = vec![BigInt::zero(); (prec - offset) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * t as usize] = c.clone();
        }
        QSeries {
            grain: self.grain,
            offset,
            prec,
            coeffs,
            ring: self.ring.clone(),
        }
    }

    /// Multiply by the monomial `q^(k/grain)`.
    pub(crate) fn shift(&self, k: i64) -> QSeries {
        let mut s = self.clone();
        s.offset += k;
        s.prec += k;
        s
    }

    /// Drop knowledge beyond `new_prec` (grain units). Errors when asked to
    /// extend the window.
    pub(crate) fn truncated(&self, new_prec: i64) -> Result<QSeries> {
        if new_prec > self.prec {
            return Err(Error::InsufficientPrecision {
                grain: self.grain,
                needed: new_prec,
                available: self.prec,
            });
        }
        if new_prec <= self.offset {
            return Err(Error::EmptyCoefficients);
        }
        let mut s = self.clone();
        s.coeffs.truncate((new_prec - self.offset) as usize);
        s.prec = new_prec;
        Ok(s)
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        let (a, b) = self.unify(other)?;
        let offset = a.offset.min(b.offset);
        let prec = a.prec.min(b.prec);
        if prec <= offset {
            return Err(Error::EmptyCoefficients);
        }
        let mut coeffs = vec![BigInt::zero(); (prec - offset) as usize];
        for series in [&a, &b] {
            for (i, c) in series.coeffs.iter().enumerate() {
                let n = series.offset + i as i64;
                if n >= prec {
                    break;
                }
                coeffs[(n - offset) as usize] += c;
            }
        }
        let ring = a.ring.clone();
        let coeffs = coeffs.into_iter().map(|c| ring.normalize(c)).collect();
        Ok(QSeries {
            grain: a.grain,
            offset,
            prec,
            coeffs,
            ring,
        })
    }

    pub fn negate(&self) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.ring.normalize(-c))
            .collect();
        QSeries {
            grain: self.grain,
            offset: self.offset,
            prec: self.prec,
            coeffs,
            ring: self.ring.clone(),
        }
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.add(&other.negate())
    }

    /// Cauchy product.  Offsets add; the precision follows the sound rule
    /// `min(N_a + v_b, N_b + v_a)`.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        let (a, b) = self.unify(other)?;
        let offset = a.offset + b.offset;
        let prec = (a.prec + b.offset).min(b.prec + a.offset);
        if prec <= offset {
            return Err(Error::EmptyCoefficients);
        }
        let len = (prec - offset) as usize;
        let ring = a.ring.clone();

        let coeffs = match ring.modulus() {
            Some(m) if m <= FAST_MODULUS_MAX => convolve_u64(&a.coeffs, &b.coeffs, len, m),
            _ => convolve_bigint(&a.coeffs, &b.coeffs, len, &ring),
        };
        Ok(QSeries {
            grain: a.grain,
            offset,
            prec,
            coeffs,
            ring,
        })
    }

    /// Multiplicative inverse, computed to precision `out_prec` (grain
    /// units).  The leading coefficient (at the offset) must be a unit.  A
    /// series known on `[v, N)` determines its inverse on `[-v, N - 2v)`, so
    /// `out_prec` beyond `N - 2v` is an error.
    pub fn invert(&self, out_prec: i64) -> Result<QSeries> {
        let lead = &self.coeffs[0];
        let lead_inv = self.ring.inverse(lead).ok_or_else(|| {
            Error::NonUnitLead(lead.clone(), self.ring.clone())
        })?;
        let max_prec = self.prec - 2 * self.offset;
        if out_prec > max_prec {
            return Err(Error::InsufficientPrecision {
                grain: self.grain,
                needed: out_prec,
                available: max_prec,
            });
        }
        let offset = -self.offset;
        if out_prec <= offset {
            return Err(Error::EmptyCoefficients);
        }
        let len = (out_prec - offset) as usize;

        let coeffs = match self.ring.modulus() {
            Some(m) if m <= FAST_MODULUS_MAX => {
                invert_unit_part_u64(&self.coeffs, len, m, &lead_inv)
            }
            _ => invert_unit_part_bigint(&self.coeffs, len, &self.ring, &lead_inv),
        };
        Ok(QSeries {
            grain: self.grain,
            offset,
            prec: out_prec,
            coeffs,
            ring: self.ring.clone(),
        })
    }

    /// Integer power by binary exponentiation.  `e = 0` yields the constant
    /// one; negative `e` inverts first (requires a unit lead).
    pub fn pow(&self, e: i64) -> Result<QSeries> {
        if e == 0 {
            let prec = self.prec - self.offset;
            let mut one = QSeries::zero(self.grain, 0, prec, self.ring.clone())?;
            one.coeffs[0] = self.ring.normalize(BigInt::one());
            return Ok(one);
        }
        let base = if e < 0 {
            self.invert(self.prec - 2 * self.offset)?
        } else {
            self.clone()
        };
        let mut exp = e.unsigned_abs();
        let mut result: Option<QSeries> = None;
        let mut power = base;
        loop {
            if exp & 1 == 1 {
                result = Some(match result {
                    None => power.clone(),
                    Some(r) => r.mul(&power)?,
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            power = power.mul(&power)?;
        }
        Ok(result.expect("nonzero exponent"))
    }

    pub fn scalar_mul(&self, c: &BigInt) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| self.ring.normalize(x * c))
            .collect();
        QSeries {
            grain: self.grain,
            offset: self.offset,
            prec: self.prec,
            coeffs,
            ring: self.ring.clone(),
        }
    }

    /// Exact scalar division: over the integers every coefficient must be
    /// divisible by `c`; over residues `c` must be invertible.
    pub fn scalar_div_exact(&self, c: &BigInt) -> Result<QSeries> {
        match &self.ring {
            CoefficientRing::Integers => {
                if c.is_zero() {
                    return Err(Error::InexactDivision {
                        value: BigInt::zero(),
                        divisor: c.clone(),
                    });
                }
                let mut coeffs = Vec::with_capacity(self.coeffs.len());
                for x in &self.coeffs {
                    let (q, r) = x.div_rem(c);
                    if !r.is_zero() {
                        return Err(Error::InexactDivision {
                            value: x.clone(),
                            divisor: c.clone(),
                        });
                    }
                    coeffs.push(q);
                }
                Ok(QSeries {
                    grain: self.grain,
                    offset: self.offset,
                    prec: self.prec,
                    coeffs,
                    ring: self.ring.clone(),
                })
            }
            CoefficientRing::Residues { modulus } => {
                let inv = self.ring.inverse(c).ok_or_else(|| {
                    Error::NonInvertibleScalar(c.clone(), *modulus)
                })?;
                Ok(self.scalar_mul(&inv))
            }
        }
    }

    /// Reduce an integer series modulo `m`, keeping grain, offset, and
    /// precision.
    pub fn reduce_mod(&self, m: u64) -> Result<QSeries> {
        if self.ring.is_residues() {
            return Err(Error::AlreadyResidues);
        }
        let ring = CoefficientRing::residues(m)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| ring.normalize(c.clone()))
            .collect();
        Ok(QSeries {
            grain: self.grain,
            offset: self.offset,
            prec: self.prec,
            coeffs,
            ring,
        })
    }

    /// Semantic equality of all coefficients with exponent index below
    /// `n_max`, measured in the unified (lcm) grain.  When exactly one side
    /// is a residue series the other is reduced first; two residue rings
    /// must match.  Both series must know their coefficients up to `n_max`.
    pub fn equal_up_to(&self, other: &QSeries, n_max: i64) -> Result<bool> {
        let g = self.grain.lcm(&other.grain);
        let (a, b) = match (&self.ring, &other.ring) {
            (CoefficientRing::Integers, CoefficientRing::Residues { modulus }) => {
                (self.reduce_mod(*modulus)?.to_grain(g)?, other.to_grain(g)?)
            }
            (CoefficientRing::Residues { modulus }, CoefficientRing::Integers) => {
                (self.to_grain(g)?, other.reduce_mod(*modulus)?.to_grain(g)?)
            }
            (ra, rb) if ra == rb => (self.to_grain(g)?, other.to_grain(g)?),
            (ra, rb) => return Err(Error::RingMismatch(ra.clone(), rb.clone())),
        };
        for s in [&a, &b] {
            if s.prec < n_max {
                return Err(Error::InsufficientPrecision {
                    grain: g,
                    needed: n_max,
                    available: s.prec,
                });
            }
        }
        let lo = a.offset.min(b.offset);
        for n in lo..n_max {
            let x = a.known_coeff(n).expect("within precision");
            let y = b.known_coeff(n).expect("within precision");
            if x != y {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when every known coefficient with index below `n_max` vanishes.
    pub fn is_zero_through(&self, n_max: i64) -> Result<bool> {
        if self.prec < n_max {
            return Err(Error::InsufficientPrecision {
                grain: self.grain,
                needed: n_max,
                available: self.prec,
            });
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.offset + (i as i64) >= n_max {
                break;
            }
            if !c.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn convolve_bigint(a: &[BigInt], b: &[BigInt], len: usize, ring: &CoefficientRing) -> Vec<BigInt> {
    let nz_b: Vec<(usize, &BigInt)> = b
        .iter()
        .enumerate()
        .filter(|(j, c)| *j < len && !c.is_zero())
        .collect();
    let mut out = vec![BigInt::zero(); len];
    for (i, av) in a.iter().enumerate() {
        if i >= len {
            break;
        }
        if av.is_zero() {
            continue;
        }
        for &(j, bv) in &nz_b {
            if i + j >= len {
                break;
            }
            out[i + j] += av * bv;
        }
    }
    out.into_iter().map(|c| ring.normalize(c)).collect()
}

/// Convolution over Z/m on u64 accumulators; sound for m <= FAST_MODULUS_MAX
/// and output length below 2^31.
fn convolve_u64(a: &[BigInt], b: &[BigInt], len: usize, m: u64) -> Vec<BigInt> {
    assert!(len < (1usize << 31));
    let au: Vec<u64> = a.iter().map(|c| c.to_u64().expect("canonical residue")).collect();
    let nz_b: Vec<(usize, u64)> = b
        .iter()
        .enumerate()
        .take(len)
        .filter_map(|(j, c)| {
            let v = c.to_u64().expect("canonical residue");
            (v != 0).then_some((j, v))
        })
        .collect();
    let mut out = vec![0u64; len];
    for (i, &av) in au.iter().enumerate() {
        if i >= len {
            break;
        }
        if av == 0 {
            continue;
        }
        for &(j, bv) in &nz_b {
            if i + j >= len {
                break;
            }
            out[i + j] += av * bv;
        }
    }
    out.into_iter().map(|x| BigInt::from(x % m)).collect()
}

fn invert_unit_part_bigint(
    a: &[BigInt],
    len: usize,
    ring: &CoefficientRing,
    lead_inv: &BigInt,
) -> Vec<BigInt> {
    let nz_a: Vec<(usize, &BigInt)> = a
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(j, c)| *j < len && !c.is_zero())
        .collect();
    let mut c = vec![BigInt::zero(); len];
    c[0] = ring.normalize(lead_inv.clone());
    let neg_inv = ring.normalize(-lead_inv);
    for n in 1..len {
        let mut s = BigInt::zero();
        for &(k, ak) in &nz_a {
            if k > n {
                break;
            }
            if !c[n - k].is_zero() {
                s += ak * &c[n - k];
            }
        }
        c[n] = ring.normalize(&neg_inv * s);
    }
    c
}

fn invert_unit_part_u64(a: &[BigInt], len: usize, m: u64, lead_inv: &BigInt) -> Vec<BigInt> {
    assert!(len < (1usize << 31));
    let nz_a: Vec<(usize, u64)> = a
        .iter()
        .enumerate()
        .skip(1)
        .take(len)
        .filter_map(|(j, c)| {
            let v = c.to_u64().expect("canonical residue");
            (v != 0).then_some((j, v))
        })
        .collect();
    let inv0 = lead_inv.to_u64().expect("canonical residue");
    let mut c = vec![0u64; len];
    c[0] = inv0 % m;
    for n in 1..len {
        let mut s: u64 = 0;
        for &(k, ak) in &nz_a {
            if k > n {
                break;
            }
            s += ak * c[n - k];
        }
        c[n] = ((m - s % m) % m) * inv0 % m;
    }
    c.into_iter().map(BigInt::from).collect()
}

/// The truncated product `prod_{n>=1} (1 - q^n)` on grain 1, computed by
/// multiplying out the finitely many factors that can touch exponents below
/// `prec`.
pub fn euler_product(prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    telescoping_product(prec, ring, false)
}

/// The truncated product `prod_{n>=1} (1 + q^n)` on grain 1.
pub fn plus_product(prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    telescoping_product(prec, ring, true)
}

fn telescoping_product(prec: i64, ring: &CoefficientRing, plus: bool) -> Result<QSeries> {
    if prec < 1 {
        return Err(Error::InsufficientPrecision {
            grain: 1,
            needed: 1,
            available: prec,
        });
    }
    let len = prec as usize;
    match ring.modulus() {
        Some(m) if m <= FAST_MODULUS_MAX => {
            let mut c = vec![0u64; len];
            c[0] = 1;
            for n in 1..len {
                for i in (n..len).rev() {
                    let lower = c[i - n];
                    if plus {
                        c[i] += lower;
                        if c[i] >= m {
                            c[i] -= m;
                        }
                    } else {
                        c[i] += m - lower;
                        if c[i] >= m {
                            c[i] -= m;
                        }
                    }
                }
            }
            QSeries::new(1, 0, c.into_iter().map(BigInt::from).collect(), ring.clone())
        }
        _ => {
            let mut c = vec![BigInt::zero(); len];
            c[0] = BigInt::one();
            for n in 1..len {
                for i in (n..len).rev() {
                    let lower = c[i - n].clone();
                    if lower.is_zero() {
                        continue;
                    }
                    if plus {
                        c[i] += lower;
                    } else {
                        c[i] -= lower;
                    }
                    let v = std::mem::take(&mut c[i]);
                    c[i] = ring.normalize(v);
                }
            }
            QSeries::new(1, 0, c, ring.clone())
        }
    }
}

pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = self.offset + i as i64;
            let (mag, neg) = if c.is_negative() {
                (-c, true)
            } else {
                (c.clone(), false)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let g = n.gcd(&self.grain);
            let (num, den) = (n / g, self.grain / g);
            if n == 0 {
                write!(f, "{}", mag)?;
            } else {
                if mag != BigInt::one() {
                    write!(f, "{}*", mag)?;
                }
                if den == 1 {
                    if num == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", num)?;
                    }
                } else {
                    write!(f, "q^({}/{})", num, den)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        let g = self.prec.gcd(&self.grain);
        if self.grain / g == 1 {
            write!(f, " + O(q^{})", self.prec / g)
        } else {
            write!(f, " + O(q^({}/{}))", self.prec / g, self.grain / g)
        }
    }
}

// JSON form, with coefficients as decimal strings so downstream consumers
// never face 64-bit overflow:
// {"grain": d, "offset": v, "prec": N, "ring": "Z" | {"mod": m}, "coeffs": [...]}
impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QSeries", 5)?;
        st.serialize_field("grain", &self.grain)?;
        st.serialize_field("offset", &self.offset)?;
        st.serialize_field("prec", &self.prec)?;
        st.serialize_field("ring", &self.ring)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            grain: i64,
            offset: i64,
            prec: i64,
            ring: CoefficientRing,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs: std::result::Result<Vec<BigInt>, _> = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(de::Error::custom))
            .collect();
        let series = QSeries::new(raw.grain, raw.offset, coeffs?, raw.ring)
            .map_err(de::Error::custom)?;
        if series.prec != raw.prec {
            return Err(de::Error::custom(format!(
                "prec {} inconsistent with offset {} and {} coefficients",
                raw.prec,
                raw.offset,
                series.coeffs.len()
            )));
        }
        Ok(series)
    }
}
