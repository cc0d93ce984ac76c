//! Coefficient transforms: `U_t`, `V_t`, Hecke operators of integer and
//! half-integral weight, the Kronecker symbol, and arithmetic-progression
//! extraction.
//!
//! The Hecke operators act on q-expansions only:
//!
//! * integer weight `k`:  `(f|T_p)(n) = a(pn) + chi(p) p^(k-1) a(n/p)`,
//! * half-integral weight `lambda + 1/2`:
//!   `(g|T(l^2))(m) = b(l^2 m) + chi*(l) (m/l) l^(lambda-1) b(m)
//!                    + chi*(l^2) l^(2 lambda - 1) b(m/l^2)`,
//!   with `chi*(x) = ((-1)^lambda / x) chi(x)`,
//!
//! where `a(n/p)` and `b(m/l^2)` vanish unless the division is exact.  All
//! characters are real Kronecker characters `(D / .)`.  Precision floors are
//! conservative: `floor(N/p)` and `floor(N/l^2)` respectively, and the
//! operators demand integral (grain-1) exponents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{ceil_div, floor_div, QSeries};

/// Weight data for a Hecke operator: integer weight `k`, or half-integral
/// weight `lambda + 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightKind {
    Integer { k: i64 },
    HalfIntegral { lambda: i64 },
}

/// Parameters of a Hecke operator: the weight kind, the top argument `D` of
/// the real character `(D / .)`, and the level (metadata used only for the
/// coprimality preconditions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeParams {
    pub kind: WeightKind,
    pub character_top: BigInt,
    pub level: u64,
}

impl HeckeParams {
    pub fn integer_weight(k: i64, character_top: impl Into<BigInt>, level: u64) -> Self {
        HeckeParams {
            kind: WeightKind::Integer { k },
            character_top: character_top.into(),
            level,
        }
    }

    pub fn half_integral(lambda: i64, character_top: impl Into<BigInt>, level: u64) -> Self {
        HeckeParams {
            kind: WeightKind::HalfIntegral { lambda },
            character_top: character_top.into(),
            level,
        }
    }
}

/// Full Kronecker symbol `(a / n)`, extended to all integers `n` (including
/// zero, negatives, and even values).  Completely multiplicative in both
/// arguments.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    let one = BigInt::from(1);
    if n.is_zero() {
        return if a.abs() == one { 1 } else { 0 };
    }
    let mut r: i32 = 1;
    let mut n = n.clone();
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            r = -r;
        }
    }
    // factor out 2s from n; (a/2) is 0 for even a, +1 for a = +-1 mod 8,
    // -1 for a = +-3 mod 8
    let eight = BigInt::from(8);
    while n.is_even() {
        n /= 2;
        if a.is_even() {
            return 0;
        }
        let m = a.mod_floor(&eight).to_i64().unwrap();
        if m == 3 || m == 5 {
            r = -r;
        }
    }
    if n == one {
        return r;
    }
    // Jacobi symbol for odd n > 1 by quadratic reciprocity
    let mut a = a.mod_floor(&n);
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let m = n.mod_floor(&eight).to_i64().unwrap();
            if m == 3 || m == 5 {
                r = -r;
            }
        }
        std::mem::swap(&mut a, &mut n);
        let four = BigInt::from(4);
        if a.mod_floor(&four).to_i64().unwrap() == 3 && n.mod_floor(&four).to_i64().unwrap() == 3 {
            r = -r;
        }
        a = a.mod_floor(&n);
    }
    if n == one {
        r
    } else {
        0
    }
}

/// Convenience wrapper for machine integers.
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&BigInt::from(a), &BigInt::from(n))
}

/// Deterministic trial-division primality test for `u64` inputs of the size
/// used here (operator primes are small).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `f | U_t`: the coefficient of `q^(n/d)` becomes the coefficient of
/// `q^(tn/d)` in `f`.
pub fn u_op(f: &QSeries, t: i64) -> Result<QSeries> {
    if t < 1 {
        return Err(Error::NonPositiveParameter(t));
    }
    let offset = ceil_div(f.offset(), t);
    let prec = ceil_div(f.prec(), t);
    if prec <= offset {
        return Err(Error::InsufficientPrecision {
            grain: f.grain(),
            needed: (offset + 1) * t,
            available: f.prec(),
        });
    }
    let mut coeffs = Vec::with_capacity((prec - offset) as usize);
    for n in offset..prec {
        coeffs.push(f.known_coeff(t * n).expect("t*n < prec"));
    }
    QSeries::new(f.grain(), offset, coeffs, f.ring().clone())
}

/// `f | V_t`: the coefficient of `q^(n/d)` moves to `q^(tn/d)`; everything
/// off the dilated grid is zero.
pub fn v_op(f: &QSeries, t: i64) -> Result<QSeries> {
    if t < 1 {
        return Err(Error::NonPositiveParameter(t));
    }
    Ok(f.dilate(t))
}

fn validate_hecke_input(f: &QSeries, prime: u64, level_context: u64) -> Result<()> {
    if f.grain() != 1 {
        return Err(Error::RequiresIntegralGrain(f.grain()));
    }
    if f.offset() < 0 {
        return Err(Error::NegativeOffset(f.offset()));
    }
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    if level_context % prime == 0 {
        return Err(Error::PrimeDividesLevel {
            prime,
            level: level_context,
        });
    }
    Ok(())
}

/// Integer-weight Hecke operator `T_{p,k,chi}` on a grain-1 expansion with
/// nonnegative offset.  Requires `p` prime not dividing the level.
pub fn hecke_integer(f: &QSeries, p: u64, params: &HeckeParams) -> Result<QSeries> {
    let k = match params.kind {
        WeightKind::Integer { k } => k,
        WeightKind::HalfIntegral { .. } => return Err(Error::WrongOperatorKind),
    };
    if k < 1 {
        return Err(Error::InvalidWeight(k));
    }
    validate_hecke_input(f, p, params.level)?;
    let pi = p as i64;
    let prec = floor_div(f.prec(), pi);
    if prec <= 0 {
        return Err(Error::InsufficientPrecision {
            grain: 1,
            needed: pi,
            available: f.prec(),
        });
    }
    let chi_p = kronecker(&params.character_top, &BigInt::from(p));
    let p_pow = BigInt::from(p).pow((k - 1) as u32);
    let twist = BigInt::from(chi_p) * &p_pow;

    let mut coeffs = Vec::with_capacity(prec as usize);
    for n in 0..prec {
        let mut c = f.known_coeff(pi * n).expect("pn < prec");
        if n % pi == 0 && !twist.is_zero() {
            let below = f.known_coeff(n / pi).expect("n/p < prec");
            c += &twist * below;
        }
        coeffs.push(c);
    }
    QSeries::new(1, 0, coeffs, f.ring().clone())
}

/// Half-integral-weight Hecke operator `T(l^2, lambda, chi)` on a grain-1
/// expansion with nonnegative offset.  Requires `l` an odd prime with
/// `l` coprime to `4 * level`.
pub fn hecke_half_integral(f: &QSeries, ell: u64, params: &HeckeParams) -> Result<QSeries> {
    let lambda = match params.kind {
        WeightKind::HalfIntegral { lambda } => lambda,
        WeightKind::Integer { .. } => return Err(Error::WrongOperatorKind),
    };
    if lambda < 1 {
        return Err(Error::InvalidWeight(lambda));
    }
    if ell % 2 == 0 {
        return Err(Error::NotOddPrime(ell));
    }
    validate_hecke_input(f, ell, 4 * params.level)?;
    let li = ell as i64;
    let l2 = li * li;
    let prec = floor_div(f.prec(), l2);
    if prec <= 0 {
        return Err(Error::InsufficientPrecision {
            grain: 1,
            needed: l2,
            available: f.prec(),
        });
    }

    // chi*(x) = ((-1)^lambda / x) (D / x)
    let minus_one_top = BigInt::from(if lambda % 2 == 0 { 1 } else { -1 });
    let chi_star = |x: &BigInt| -> i32 {
        kronecker(&minus_one_top, x) * kronecker(&params.character_top, x)
    };
    let ell_big = BigInt::from(ell);
    let chi_star_l = BigInt::from(chi_star(&ell_big));
    let chi_star_l2 = BigInt::from(chi_star(&(&ell_big * &ell_big)));
    let l_lam1 = BigInt::from(ell).pow((lambda - 1) as u32);
    let l_2lam1 = BigInt::from(ell).pow((2 * lambda - 1) as u32);
    let mid_twist = &chi_star_l * &l_lam1;
    let low_twist = &chi_star_l2 * &l_2lam1;

    let mut coeffs = Vec::with_capacity(prec as usize);
    for m in 0..prec {
        let mut c = f.known_coeff(l2 * m).expect("l^2 m < prec");
        if !mid_twist.is_zero() {
            let b_m = f.known_coeff(m).expect("m < prec");
            if !b_m.is_zero() {
                let m_over_l = kronecker(&BigInt::from(m), &ell_big);
                c += BigInt::from(m_over_l) * &mid_twist * b_m;
            }
        }
        if m % l2 == 0 && !low_twist.is_zero() {
            let below = f.known_coeff(m / l2).expect("m/l^2 < prec");
            c += &low_twist * below;
        }
        coeffs.push(c);
    }
    QSeries::new(1, 0, coeffs, f.ring().clone())
}

/// Extract the arithmetic progression `step * n + shift` from a grain-1
/// series: the result coefficient at `n` is the input coefficient at
/// `step*n + shift`, for every `n` the input window covers.
pub fn progression_extract(f: &QSeries, step: i64, shift: i64) -> Result<QSeries> {
    if step < 1 {
        return Err(Error::NonPositiveParameter(step));
    }
    if f.grain() != 1 {
        return Err(Error::RequiresIntegralGrain(f.grain()));
    }
    let offset = ceil_div(f.offset() - shift, step);
    let prec = floor_div(f.prec() - 1 - shift, step) + 1;
    if prec <= offset {
        return Err(Error::EmptyExtraction { step, shift });
    }
    let mut coeffs = Vec::with_capacity((prec - offset) as usize);
    for n in offset..prec {
        coeffs.push(f.known_coeff(step * n + shift).expect("within window"));
    }
    QSeries::new(1, offset, coeffs, f.ring().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CoefficientRing;

    fn z() -> CoefficientRing {
        CoefficientRing::integers()
    }

    fn series(offset: i64, coeffs: &[i64]) -> QSeries {
        QSeries::from_i64(1, offset, coeffs, z()).unwrap()
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker_i64(-1, 3), -1);
        assert_eq!(kronecker_i64(12, 5), -1);
        for a in -30..=30 {
            assert_eq!(kronecker_i64(a, 1), 1);
        }
        // classical table entries
        assert_eq!(kronecker_i64(2, 7), 1);
        assert_eq!(kronecker_i64(3, 7), -1);
        assert_eq!(kronecker_i64(2, 0), 0);
        assert_eq!(kronecker_i64(1, 0), 1);
        assert_eq!(kronecker_i64(-1, 0), 1);
        assert_eq!(kronecker_i64(5, 2), -1); // 5 = -3 mod 8
        assert_eq!(kronecker_i64(7, 2), 1);
        assert_eq!(kronecker_i64(-11, -3), -1);
    }

    #[test]
    fn u_op_examples() {
        // geometric series is a fixed point of U_2
        let g = series(0, &[1; 12]);
        let u = u_op(&g, 2).unwrap();
        assert_eq!(u.prec(), 6);
        assert!(u.coeffs().iter().all(|c| c == &BigInt::from(1)));

        // (q + q^7 + q^14) | U_7 = q + q^2
        let mut v = vec![0i64; 15];
        v[0] = 1; // exponent 1
        v[6] = 1; // exponent 7
        v[13] = 1; // exponent 14
        let f = series(1, &v);
        let u = u_op(&f, 7).unwrap();
        assert_eq!(u.offset(), 1);
        assert_eq!(u.prec(), 3);
        assert_eq!(u.coeffs(), &[BigInt::from(1), BigInt::from(1)]);

        assert!(matches!(u_op(&g, 0), Err(Error::NonPositiveParameter(0))));
    }

    #[test]
    fn v_op_examples() {
        let f = series(0, &[1, 1]);
        let v = v_op(&f, 3).unwrap();
        assert_eq!(v.prec(), 6);
        assert_eq!(v.coefficient_at(0).unwrap(), &BigInt::from(1));
        assert_eq!(v.coefficient_at(3).unwrap(), &BigInt::from(1));
        assert!(v.coefficient_at(1).unwrap().is_zero());

        // U_t . V_t is the identity
        let f = series(-2, &[5, 0, 3, 1, 0, 2, 7]);
        for t in 1..=4 {
            assert_eq!(u_op(&v_op(&f, t).unwrap(), t).unwrap(), f);
        }
    }

    #[test]
    fn v_then_u_coprime_interleave() {
        // monomial bookkeeping: (q^6)|V_2 = q^12, |U_3 = q^4
        let mut v = vec![0i64; 8];
        v[6] = 1;
        let f = series(0, &v);
        let g = u_op(&v_op(&f, 2).unwrap(), 3).unwrap();
        assert_eq!(g.coefficient_at(4).unwrap(), &BigInt::from(1));
        for n in 0..g.prec() {
            if n != 4 {
                assert!(g.coefficient_at(n).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn hecke_integer_zero_and_preconditions() {
        let zero = QSeries::zero(1, 0, 40, z()).unwrap();
        let params = HeckeParams::integer_weight(12, 1, 1);
        let t = hecke_integer(&zero, 2, &params).unwrap();
        assert!(t.coeffs().iter().all(|c| c.is_zero()));

        let bad_level = HeckeParams::integer_weight(12, 1, 14);
        assert!(matches!(
            hecke_integer(&zero, 7, &bad_level),
            Err(Error::PrimeDividesLevel { prime: 7, level: 14 })
        ));
        let half = HeckeParams::half_integral(1, 1, 1);
        assert!(matches!(
            hecke_integer(&zero, 2, &half),
            Err(Error::WrongOperatorKind)
        ));
        let frac = QSeries::from_i64(24, 0, &[1; 48], z()).unwrap();
        assert!(matches!(
            hecke_integer(&frac, 2, &params),
            Err(Error::RequiresIntegralGrain(24))
        ));
    }

    #[test]
    fn hecke_integer_two_term_support() {
        // f = q + q^p with k = 2, trivial character: (f|T_p)(1) picks up
        // a(p) = 1, and (f|T_p)(p) picks up chi(p) p a(1) = p.
        let p = 5u64;
        let mut v = vec![0i64; 30];
        v[0] = 1; // q
        v[4] = 1; // q^5
        let f = series(1, &v);
        let params = HeckeParams::integer_weight(2, 1, 1);
        let t = hecke_integer(&f, p, &params).unwrap();
        assert_eq!(t.coefficient_at(1).unwrap(), &BigInt::from(1));
        assert_eq!(t.coefficient_at(5).unwrap(), &BigInt::from(5));
        for n in 0..t.prec() {
            if n != 1 && n != 5 {
                assert!(t.coefficient_at(n).unwrap().is_zero(), "n = {}", n);
            }
        }
    }

    #[test]
    fn hecke_half_integral_examples() {
        let params = HeckeParams::half_integral(1, 1, 1);

        let zero = QSeries::zero(1, 0, 40, z()).unwrap();
        let t = hecke_half_integral(&zero, 3, &params).unwrap();
        assert!(t.coeffs().iter().all(|c| c.is_zero()));

        // support {1}: coefficient(1) = chi*(3) (1/3) 3^0 b(1) = -1
        let mut v = vec![0i64; 20];
        v[1] = 1;
        let f = QSeries::from_i64(1, 0, &v, z()).unwrap();
        let t = hecke_half_integral(&f, 3, &params).unwrap();
        assert_eq!(t.coefficient_at(1).unwrap(), &BigInt::from(-1));

        // support {9}: coefficient(1) = b(9) = 1
        let mut v = vec![0i64; 20];
        v[9] = 1;
        let f = QSeries::from_i64(1, 0, &v, z()).unwrap();
        let t = hecke_half_integral(&f, 3, &params).unwrap();
        assert_eq!(t.coefficient_at(1).unwrap(), &BigInt::from(1));

        assert!(matches!(
            hecke_half_integral(&f, 2, &params),
            Err(Error::NotOddPrime(2))
        ));
    }

    #[test]
    fn progression_extract_examples() {
        let ones = series(0, &[1; 20]);
        let e = progression_extract(&ones, 2, 1).unwrap();
        assert!(e.coeffs().iter().all(|c| c == &BigInt::from(1)));
        assert_eq!(e.prec(), 10);

        // q^10 + q^34 extracted along 24n + 10 -> 1 + q
        let mut v = vec![0i64; 35];
        v[10] = 1;
        v[34] = 1;
        let f = series(0, &v);
        let e = progression_extract(&f, 24, 10).unwrap();
        assert_eq!(e.offset(), 0);
        assert_eq!(e.coeffs(), &[BigInt::from(1), BigInt::from(1)]);

        // no integer n lands 5n + 3 inside the window [0, 2)
        assert!(matches!(
            progression_extract(&series(0, &[1, 1]), 5, 3),
            Err(Error::EmptyExtraction { step: 5, shift: 3 })
        ));
    }
}
