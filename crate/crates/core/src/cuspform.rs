//! Cusp-form candidate constructions on q-expansions: `U`-power tails, the
//! coprime-index projection `f|U_{p^r} - f|U_{p^{r+1}}|V_p`, and candidates
//! `f_proj * F_p^{p^beta}` that agree with the projection mod `p^j`.
//!
//! Everything here is a q-expansion transform.  Holomorphy or vanishing at
//! cusps is never decided; the congruence postconditions are verified on the
//! expansions themselves.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::eta::{eta_quotient_expansion, f_p_quotient};
use crate::operators::{
    hecke_half_integral, hecke_integer, is_prime, u_op, v_op, HeckeParams, WeightKind,
};
use crate::series::QSeries;

/// Parameters for a cusp-form candidate: odd prime `p`, tail depth `r`,
/// target prime-power exponent `j`, and the `F_p` power exponent `beta`
/// (which must be at least `j - 1`; that minimal value is the default).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuspCandidateParams {
    pub p: u64,
    pub r: u32,
    pub j: u32,
    pub beta: u32,
}

impl CuspCandidateParams {
    pub fn new(p: u64, r: u32, j: u32) -> Result<Self> {
        if p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if r < 1 {
            return Err(Error::NonPositiveParameter(r as i64));
        }
        if j < 1 {
            return Err(Error::NonPositiveParameter(j as i64));
        }
        Ok(CuspCandidateParams {
            p,
            r,
            j,
            beta: j - 1,
        })
    }

    /// Override `beta`; values below `j - 1` are rejected.
    pub fn with_beta(mut self, beta: u32) -> Result<Self> {
        if beta + 1 < self.j {
            return Err(Error::NonPositiveParameter(beta as i64));
        }
        self.beta = beta;
        Ok(self)
    }
}

fn checked_prime_power(p: u64, e: u32) -> Result<i64> {
    (p as i64)
        .checked_pow(e)
        .ok_or(Error::ExponentOverflow(e as i64))
}

/// `f | U_{p^r}`, the r-fold composition of `U_p`.
pub fn u_power(f: &QSeries, p: u64, r: u32) -> Result<QSeries> {
    u_op(f, checked_prime_power(p, r)?)
}

/// The projection `f|U_{p^r} - f|U_{p^{r+1}}|V_p`: it keeps exactly the
/// coefficients `a(p^r n)` with `p` coprime to `n` and kills everything
/// else.
pub fn coprime_projection(f: &QSeries, p: u64, r: u32) -> Result<QSeries> {
    let head = u_power(f, p, r)?;
    let deeper = v_op(&u_power(f, p, r + 1)?, p as i64)?;
    head.sub(&deeper)
}

/// A cusp-form candidate and its weight bookkeeping.
#[derive(Debug, Clone)]
pub struct CuspCandidate {
    pub series: QSeries,
    /// Twice the weight of the candidate: input weight plus the shift
    /// `p^beta (p^2 - 1)` contributed by `F_p^{p^beta}`.
    pub weight_times_2: i64,
}

/// Multiply a projected form by `F_p^{p^beta}` and truncate to `prec`.  The
/// congruence `result ≡ f_proj (mod p^j)` is verified before returning; a
/// mismatch is an error, not a silent result.
pub fn cusp_candidate(
    f_proj: &QSeries,
    params: &CuspCandidateParams,
    input_weight_times_2: i64,
    prec: i64,
) -> Result<CuspCandidate> {
    if f_proj.ring().is_residues() {
        return Err(Error::AlreadyResidues);
    }
    if f_proj.prec() < prec {
        return Err(Error::InsufficientPrecision {
            grain: f_proj.grain(),
            needed: prec,
            available: f_proj.prec(),
        });
    }
    let p = params.p;
    let fp_exponent = checked_prime_power(p, params.beta)?;
    let fp_prec = (prec - f_proj.offset()).max(1);
    let fp = eta_quotient_expansion(&f_p_quotient(p)?, 24 * fp_prec, f_proj.ring())?
        .to_grain(1)?
        .pow(fp_exponent)?;
    let series = f_proj.mul(&fp)?.truncated(prec)?;

    let modulus = (p as u64)
        .checked_pow(params.j)
        .ok_or(Error::ExponentOverflow(params.j as i64))?;
    let agree = series
        .reduce_mod(modulus)?
        .equal_up_to(&f_proj.truncated(prec)?.reduce_mod(modulus)?, prec)?;
    if !agree {
        return Err(Error::CheckFailed {
            check: "cusp_candidate congruence".into(),
            detail: format!("candidate differs from projection mod {}^{}", p, params.j),
        });
    }

    let shift = fp_exponent
        .checked_mul((p * p - 1) as i64)
        .ok_or(Error::ExponentOverflow(fp_exponent))?;
    Ok(CuspCandidate {
        series,
        weight_times_2: input_weight_times_2 + shift,
    })
}

/// Outcome of probing a single candidate annihilator prime `Q`.
#[derive(Debug, Clone)]
pub struct AnnihilationProbe {
    pub prime: u64,
    pub modulus: u64,
    /// The Hecke image vanished mod `modulus` on the whole checked window.
    pub annihilated: bool,
    /// Exponent bound the vanishing was checked below.
    pub checked_prec: i64,
    pub first_violation: Option<(i64, BigInt)>,
    /// Prime powers `Q^e` (odd `e` for integer weight, `e = 3 mod 4` for
    /// half-integral weight) whose index families `Q^e n`, `gcd(n, Q) = 1`,
    /// must then vanish within the input precision.
    pub consequence_powers: Vec<i64>,
}

/// Apply the Hecke operator named by `params` to `f` mod `modulus` and
/// report whether the image vanishes up to the available precision.  The
/// probe tests a *given* prime `Q`; it never searches for one, and a clean
/// probe certifies vanishing only on the checked window.
pub fn hecke_annihilation_probe(
    f: &QSeries,
    q: u64,
    params: &HeckeParams,
    modulus: u64,
) -> Result<AnnihilationProbe> {
    if (modulus % q == 0) || (params.level % q == 0) {
        return Err(Error::PrimeDividesLevel {
            prime: q,
            level: params.level * modulus,
        });
    }
    let reduced;
    let f = if f.ring().is_residues() {
        f
    } else {
        reduced = f.reduce_mod(modulus)?;
        &reduced
    };
    let image = match params.kind {
        WeightKind::Integer { .. } => hecke_integer(f, q, params)?,
        WeightKind::HalfIntegral { .. } => hecke_half_integral(f, q, params)?,
    };
    let mut first_violation = None;
    for n in image.offset()..image.prec() {
        let c = image.coefficient_at(n)?;
        if !c.is_zero() {
            first_violation = Some((n, c.clone()));
            break;
        }
    }
    let step = match params.kind {
        WeightKind::Integer { .. } => 2u32,
        WeightKind::HalfIntegral { .. } => 4u32,
    };
    let mut consequence_powers = Vec::new();
    let mut e = if step == 2 { 1u32 } else { 3u32 };
    while let Ok(power) = checked_prime_power(q, e) {
        if power >= f.prec() {
            break;
        }
        consequence_powers.push(power);
        e += step;
    }
    Ok(AnnihilationProbe {
        prime: q,
        modulus,
        annihilated: first_violation.is_none(),
        checked_prec: image.prec(),
        first_violation,
        consequence_powers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::f_m_k_term;
    use crate::ring::CoefficientRing;
    use crate::series::euler_product;

    fn z() -> CoefficientRing {
        CoefficientRing::integers()
    }

    #[test]
    fn u_power_composes() {
        let f = QSeries::from_i64(1, 0, &(0..200).collect::<Vec<i64>>(), z()).unwrap();
        let a = u_power(&u_power(&f, 2, 1).unwrap(), 2, 2).unwrap();
        let b = u_power(&f, 2, 3).unwrap();
        assert_eq!(a, b);
        let direct = u_op(&f, 8).unwrap();
        assert_eq!(a, direct);
    }

    #[test]
    fn u_power_picks_out_b1_indices() {
        // u_power(f_1, 5, 2) has coefficient(n) = b_1(25 n)
        let f1 = crate::growth::f_m_series(1, 25 * 40 + 1, &z()).unwrap();
        let tail = u_power(&f1, 5, 2).unwrap();
        for n in tail.offset()..tail.prec() {
            assert_eq!(
                tail.coefficient_at(n).unwrap(),
                f1.coefficient_at(25 * n).unwrap(),
                "n = {}",
                n
            );
        }
    }

    #[test]
    fn projection_keeps_coprime_indices_only() {
        // f supported on {p^r, p^{r+1}} -> projection supported at 1 only
        let (p, r) = (3u64, 2u32);
        let mut v = vec![0i64; 40];
        v[9] = 5; // 3^2 * 1
        v[27] = 7; // 3^2 * 3
        let f = QSeries::from_i64(1, 0, &v, z()).unwrap();
        let proj = coprime_projection(&f, p, r).unwrap();
        assert_eq!(proj.coefficient_at(1).unwrap(), &BigInt::from(5));
        for n in proj.offset()..proj.prec() {
            if n != 1 {
                assert!(proj.coefficient_at(n).unwrap().is_zero(), "n = {}", n);
            }
        }

        let zero = QSeries::zero(1, 0, 40, z()).unwrap();
        let proj = coprime_projection(&zero, 5, 1).unwrap();
        assert!(proj.coeffs().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn projection_kill_keep_law_on_f_1_0() {
        let (p, r) = (5u64, 1u32);
        let f = f_m_k_term(1, 0, 5 * 60 + 5, &z()).unwrap();
        let proj = coprime_projection(&f, p, r).unwrap();
        for n in proj.offset()..proj.prec().min(60) {
            let expect = if n.rem_euclid(p as i64) == 0 {
                BigInt::from(0)
            } else {
                f.coefficient_at(5 * n).unwrap().clone()
            };
            assert_eq!(proj.coefficient_at(n).unwrap(), &expect, "n = {}", n);
        }
    }

    #[test]
    fn candidate_matches_projection_mod_p() {
        // beta = 0: multiplication by F_p itself, congruent mod p
        let params = CuspCandidateParams::new(5, 1, 1).unwrap();
        assert_eq!(params.beta, 0);
        let f = f_m_k_term(1, 1, 5 * 40 + 5, &z()).unwrap();
        let proj = coprime_projection(&f, 5, 1).unwrap();
        let cand = cusp_candidate(&proj, &params, f_weight(1, 1), 40).unwrap();
        // (k - 2M)/2 - M ... here just check the bookkeeping shift
        assert_eq!(cand.weight_times_2, f_weight(1, 1) + 24);
        assert_eq!(cand.series.prec(), 40);
    }

    fn f_weight(m: i64, k: i64) -> i64 {
        // weight of eta(12z)^{-2(M-k)} eta(24z)^{-k} is k/2 - M
        k - 2 * m
    }

    #[test]
    fn beta_floor_enforced() {
        let params = CuspCandidateParams::new(5, 1, 3).unwrap();
        assert_eq!(params.beta, 2);
        assert!(params.with_beta(1).is_err());
        assert!(CuspCandidateParams::new(4, 1, 1).is_err());
        assert!(CuspCandidateParams::new(2, 1, 1).is_err());
    }

    #[test]
    fn probe_zero_series_is_annihilated() {
        let zero = QSeries::zero(1, 0, 50, z()).unwrap();
        let params = HeckeParams::integer_weight(12, 1, 1);
        let probe = hecke_annihilation_probe(&zero, 3, &params, 7).unwrap();
        assert!(probe.annihilated);
        assert!(probe.first_violation.is_none());
        assert_eq!(probe.consequence_powers, vec![3, 27]);
    }

    #[test]
    fn probe_rejects_dividing_prime() {
        let f = QSeries::from_i64(1, 0, &[1, 1, 1], z()).unwrap();
        let params = HeckeParams::integer_weight(12, 1, 1);
        assert!(matches!(
            hecke_annihilation_probe(&f, 7, &params, 7),
            Err(Error::PrimeDividesLevel { prime: 7, .. })
        ));
    }

    #[test]
    fn probe_detects_non_annihilation() {
        // the partition series is not annihilated by T_2 mod 5
        let p = euler_product(50, &z()).unwrap().invert(50).unwrap();
        let params = HeckeParams::integer_weight(2, 1, 1);
        let probe = hecke_annihilation_probe(&p, 2, &params, 5).unwrap();
        assert!(!probe.annihilated);
        assert!(probe.first_violation.is_some());
    }
}
