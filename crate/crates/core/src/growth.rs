//! Conjugacy growth series of the finitary symmetric group, the finitary
//! alternating group, and wreath products `H wr Alt` with `M` conjugacy
//! classes in `H`, together with their Laurent embeddings on level 576.
//!
//! The three closed forms in play:
//!
//! * `Sym`:  `sum p(n) q^n = prod 1/(1-q^n)`,
//! * `Alt`:  `(1/2) prod 1/(1-q^n)^2 + (1/2) prod 1/(1-q^{2n})`, which also
//!   equals `(sum p(n) q^n) * (sum p_e(m) q^m)` with `p_e` counting
//!   partitions into an even number of parts,
//! * `wreath`: the `M`-th power of the `Alt` series.
//!
//! The Laurent form `f_M = (1/2 eta(12z)^-2 + 1/2 eta(24z)^-1)^M` carries the
//! same coefficients on the grid `12 nu - M`: `f_M(12 nu - M) = wreath_M(nu)`
//! and every off-grid coefficient is exactly zero.  Congruence checks on
//! progressions always extract from `f_M`, never evaluate the growth series
//! at rational arguments.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::eta::{eta_quotient_expansion, EtaQuotient};
use crate::ring::CoefficientRing;
use crate::series::{ceil_div, euler_product, floor_div, plus_product, QSeries};

/// `sum p(n) q^n` to the requested precision, via inversion of the Euler
/// product.
pub fn partition_series(prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    euler_product(prec, ring)?.invert(prec)
}

/// `sum p_e(m) q^m` where `p_e` counts partitions into an even number of
/// parts, computed by the even/odd sieve
/// `(1/2) [ prod (1-q^n)^-1 + prod (1+q^n)^-1 ]`.
pub fn even_parts_series(prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    let all = partition_series(prec, ring)?;
    let signed = plus_product(prec, ring)?.invert(prec)?;
    all.add(&signed)?.scalar_div_exact(&BigInt::from(2))
}

/// The alternating-group growth series
/// `(1/2) prod (1-q^n)^-2 + (1/2) prod (1-q^{2n})^-1`.
pub fn alt_series(prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    let p = partition_series(prec, ring)?;
    let doubled = p.mul(&p)?;
    let even_exp = euler_product(ceil_div(prec, 2).max(1), ring)?
        .invert(ceil_div(prec, 2).max(1))?
        .dilate(2)
        .truncated(prec)?;
    doubled.add(&even_exp)?.scalar_div_exact(&BigInt::from(2))
}

/// The wreath-product growth series: the `M`-th power of [`alt_series`].
/// Coefficient `n` counts the conjugacy classes of minimal word length `n`.
pub fn wreath_alt_series(m: i64, prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    if m < 1 {
        return Err(Error::NonPositiveParameter(m));
    }
    alt_series(prec, ring)?.pow(m)
}

/// The Laurent embedding `f_M(q) = q^-M * wreath_M(q^12)`, equal to
/// `(1/2 eta(12z)^-2 + 1/2 eta(24z)^-1)^M` as a grain-1 expansion with
/// offset `-M`.  Known below the exponent `prec`.
pub fn f_m_series(m: i64, prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    if m < 1 {
        return Err(Error::NonPositiveParameter(m));
    }
    if prec <= -m {
        return Err(Error::InsufficientPrecision {
            grain: 1,
            needed: -m + 1,
            available: prec,
        });
    }
    let inner = floor_div(prec - 1 + m, 12) + 1;
    wreath_alt_series(m, inner, ring)?
        .dilate(12)
        .shift(-m)
        .truncated(prec)
}

/// One binomial term of the Laurent embedding:
/// `F_{M,k} = eta(12z)^{-2(M-k)} eta(24z)^{-k}` as a grain-1 expansion
/// (offset `-M`, level metadata 576).  The binomial-weighted sum
/// `2^-M sum_k C(M,k) F_{M,k}` reproduces [`f_m_series`] exactly.
pub fn f_m_k_term(m: i64, k: i64, prec: i64, ring: &CoefficientRing) -> Result<QSeries> {
    if m < 1 {
        return Err(Error::NonPositiveParameter(m));
    }
    if k < 0 || k > m {
        return Err(Error::BinomialIndex { k, m });
    }
    let mut factors = Vec::new();
    if m - k > 0 {
        factors.push((12u64, -2 * (m - k)));
    }
    if k > 0 {
        factors.push((24u64, -k));
    }
    let eq = EtaQuotient::new(factors, 576)?;
    eta_quotient_expansion(&eq, 24 * prec, ring)?.to_grain(1)
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
