//! Acceptance suite: one test per shipped criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`).  Criterion 5 is a
//! long-running optional tier, ignored by default; run it with
//! `cargo test --release -p qgrowth-core --test acceptance -- --include-ignored`.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use qgrowth_core::congruence::{
    reproduce_section6, scan_congruences, synthetic_annihilated_half_integral,
    synthetic_annihilated_integer, verify_annihilation_propagation, verify_congruence,
    CongruenceClaim, PropagationVerdict, Verdict,
};
use qgrowth_core::cuspform::{coprime_projection, cusp_candidate, CuspCandidateParams};
use qgrowth_core::eta::{eta_quotient_expansion, f_p_quotient, EtaQuotient};
use qgrowth_core::growth::{
    alt_series, even_parts_series, f_m_k_term, partition_series, wreath_alt_series,
};
use qgrowth_core::operators::{hecke_integer, HeckeParams};
use qgrowth_core::oracle::{
    oracle_bfs_conjugacy_growth, oracle_partition_count, GeneratorSet, GroupFlavor, GroupSpec,
    PartitionPredicate,
};
use qgrowth_core::{CoefficientRing, QSeries};

fn zring() -> CoefficientRing {
    CoefficientRing::integers()
}

/// Criterion 1: the three routes to the alternating growth series (product
/// closed form, convolution of partition series, eta-quotient assembly)
/// agree coefficientwise through q^300, exactly, in under 5 seconds.
#[test]
fn acceptance_01_alt_series_triple_identity() {
    let start = Instant::now();
    let prec = 301i64;

    let product_form = alt_series(prec, &zring()).unwrap();

    let convolution_form = partition_series(prec, &zring())
        .unwrap()
        .mul(&even_parts_series(prec, &zring()).unwrap())
        .unwrap();

    let prec24 = 24 * (prec + 2);
    let eta_form = {
        let inv_eta_sq = eta_quotient_expansion(
            &EtaQuotient::new(vec![(1, -2)], 2).unwrap(),
            prec24,
            &zring(),
        )
        .unwrap();
        let inv_eta_2z = eta_quotient_expansion(
            &EtaQuotient::new(vec![(2, -1)], 2).unwrap(),
            prec24,
            &zring(),
        )
        .unwrap();
        // multiply by q^(1/12) = q^(2/24) and halve; the monomial carries
        // explicit zero padding so the precision rule keeps the window
        let q_twelfth = monomial24(2, prec24);
        let shifted = inv_eta_sq
            .mul(&q_twelfth)
            .unwrap()
            .add(&inv_eta_2z.mul(&q_twelfth).unwrap())
            .unwrap();
        shifted
            .scalar_div_exact(&BigInt::from(2))
            .unwrap()
            .to_grain(1)
            .unwrap()
    };

    assert!(product_form.equal_up_to(&convolution_form, prec).unwrap());
    assert!(product_form.equal_up_to(&eta_form, prec).unwrap());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {:?}", elapsed);
    println!(
        "PASS criterion 1: triple identity for the alternating series to q^300 ({:?})",
        elapsed
    );
}

fn monomial24(exp: i64, prec: i64) -> QSeries {
    let mut coeffs = vec![0i64; (prec - exp) as usize];
    coeffs[0] = 1;
    QSeries::from_i64(24, exp, &coeffs, zring()).unwrap()
}

/// Criterion 2: series coefficients match exhaustive partition enumeration
/// for all n <= 40, exactly.
#[test]
fn acceptance_02_partition_enumeration_oracle() {
    let p = partition_series(41, &zring()).unwrap();
    let pe = even_parts_series(41, &zring()).unwrap();
    for n in 0..=40i64 {
        let all = oracle_partition_count(n as u64, PartitionPredicate::All).unwrap();
        let even = oracle_partition_count(n as u64, PartitionPredicate::EvenPartCount).unwrap();
        assert_eq!(p.coefficient_at(n).unwrap(), &BigInt::from(all), "p({})", n);
        assert_eq!(
            pe.coefficient_at(n).unwrap(),
            &BigInt::from(even),
            "p_e({})",
            n
        );
    }
    println!("PASS criterion 2: p(n) and p_e(n) match enumeration for n <= 40");
}

/// Criterion 3: BFS conjugacy growth of Alt(9) with all 3-cycles matches the
/// alternating series on the recorded stable range n <= 2 (and the full
/// fixture is frozen).  Sym(8) with all transpositions matches p(n) for
/// n <= 4 the same way.
#[test]
fn acceptance_03_bfs_conjugacy_growth_oracle() {
    let start = Instant::now();
    let alt9 = oracle_bfs_conjugacy_growth(
        &GroupSpec {
            degree: 9,
            flavor: GroupFlavor::Alternating,
            generators: GeneratorSet::All3Cycles,
        },
        4,
    )
    .unwrap();
    // empirically recorded fixture: class splitting at finite degree starts
    // at length 3, so the stable range against the infinite group is n <= 2
    assert_eq!(alt9, vec![1, 1, 3, 6, 7]);
    let alt = alt_series(5, &zring()).unwrap();
    for n in 0..=2i64 {
        assert_eq!(
            alt.coefficient_at(n).unwrap(),
            &BigInt::from(alt9[n as usize]),
            "stable range mismatch at n = {}",
            n
        );
    }

    let sym8 = oracle_bfs_conjugacy_growth(
        &GroupSpec {
            degree: 8,
            flavor: GroupFlavor::Symmetric,
            generators: GeneratorSet::AllTranspositions,
        },
        7,
    )
    .unwrap();
    assert_eq!(sym8, vec![1, 1, 2, 3, 5, 5, 4, 1]);
    let p = partition_series(6, &zring()).unwrap();
    for n in 0..=4i64 {
        assert_eq!(p.coefficient_at(n).unwrap(), &BigInt::from(sym8[n as usize]));
    }
    println!(
        "PASS criterion 3: Alt(9)/Sym(8) BFS growth matches series on stable ranges ({:?})",
        start.elapsed()
    );
}

/// Criterion 4: gamma_{W'_1}(2 * 5^4 n + 1198) == 0 (mod 5) for n = 0..3
/// (indices up to 4948), exactly, in under 30 seconds mod 5.
#[test]
fn acceptance_04_wreath1_mod5_progression() {
    let start = Instant::now();
    let ring = CoefficientRing::residues(5).unwrap();
    let series = wreath_alt_series(1, 1250 * 3 + 1198 + 2, &ring).unwrap();
    let claim = CongruenceClaim {
        series_id: "wreath-alt:1".into(),
        step: 1250,
        shift: 1198,
        modulus: 5,
        n_max: 3,
        residue_filter: None,
    };
    let report = verify_congruence(&claim, &series).unwrap();
    assert_eq!(report.verdict, Verdict::HoldsOnRange, "{:?}", report.violations);
    assert_eq!(report.verified_count, 4);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {:?}", elapsed);
    println!(
        "PASS criterion 4: wreath M=1 progression 1250n + 1198 vanishes mod 5 for n <= 3 ({:?})",
        elapsed
    );
}

/// Criterion 5 (long-running optional tier): gamma_{W'_1}(2 * 7^6 n +
/// 225494) == 0 (mod 49) at n = 0.  O(N^2) convolution at N ~ 2.3e5 with
/// mod-49 coefficients.
#[test]
#[ignore = "long-running optional tier (O(N^2) convolution at N ~ 2.3e5)"]
fn acceptance_05_wreath1_mod49_progression() {
    let start = Instant::now();
    let ring = CoefficientRing::residues(49).unwrap();
    let series = wreath_alt_series(1, 225_494 + 2, &ring).unwrap();
    let claim = CongruenceClaim {
        series_id: "wreath-alt:1".into(),
        step: 2 * 117_649,
        shift: 225_494,
        modulus: 49,
        n_max: 0,
        residue_filter: None,
    };
    let report = verify_congruence(&claim, &series).unwrap();
    assert_eq!(report.verdict, Verdict::HoldsOnRange, "{:?}", report.violations);
    println!(
        "PASS criterion 5: wreath M=1 index 225494 vanishes mod 49 ({:?})",
        start.elapsed()
    );
}

/// Criterion 6: the bundled mod-7 chain passes end to end in under 2
/// minutes.  The progression identity is verified in both unit
/// normalizations: sum b_2(7n) q^n == 6 eta^10(24z) and (equivalently)
/// 4 sum b_2(7n) q^n == 3 eta^10(24z) mod 7.
#[test]
fn acceptance_06_section6_chain() {
    let start = Instant::now();
    let report = reproduce_section6().unwrap();
    assert_eq!(report.checks.len(), 5);
    for check in &report.checks {
        assert!(check.passed, "sub-check {} failed", check.name);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {:?}", elapsed);
    for check in &report.checks {
        println!(
            "PASS criterion 6 [{}]: {} (checked to {})",
            check.name, check.description, check.checked_to
        );
    }
    println!("PASS criterion 6: full chain in {:?}", elapsed);
}

/// Criterion 7: F_p == 1 (mod p) to q^300 for p in {3,5,7,11}; F_5^5 == 1
/// (mod 25) to q^200; the projection kill/keep law holds exhaustively for
/// (p, r) in {(5,1), (5,2), (7,1)} on the M = 1 binomial terms to n <= 200;
/// and cusp candidates agree with their projections mod p^j for
/// (p, j, beta) in {(5,1,0), (5,2,1), (7,2,1)}.
#[test]
fn acceptance_07_cusp_form_shadow() {
    let start = Instant::now();

    // F_p == 1 mod p through q^300
    for p in [3u64, 5, 7, 11] {
        let ring = CoefficientRing::residues(p).unwrap();
        let fp = eta_quotient_expansion(&f_p_quotient(p).unwrap(), 24 * 301, &ring)
            .unwrap()
            .to_grain(1)
            .unwrap();
        assert_eq!(fp.coefficient_at(0).unwrap(), &BigInt::from(1));
        for n in 1..301i64 {
            assert!(fp.coefficient_at(n).unwrap().is_zero(), "F_{} at {}", p, n);
        }
    }

    // F_5^5 == 1 mod 25 through q^200
    let ring25 = CoefficientRing::residues(25).unwrap();
    let f5 = eta_quotient_expansion(&f_p_quotient(5).unwrap(), 24 * 201, &ring25)
        .unwrap()
        .to_grain(1)
        .unwrap()
        .pow(5)
        .unwrap();
    assert_eq!(f5.coefficient_at(0).unwrap(), &BigInt::from(1));
    for n in 1..201i64 {
        assert!(f5.coefficient_at(n).unwrap().is_zero(), "F_5^5 at {}", n);
    }

    // projection kill/keep law, exhaustively to n <= 200
    for &(p, r) in &[(5u64, 1u32), (5, 2), (7, 1)] {
        let stride = (p as i64).pow(r);
        for k in 0..=1i64 {
            let f = f_m_k_term(1, k, stride * 201 + stride, &zring()).unwrap();
            let proj = coprime_projection(&f, p, r).unwrap();
            for n in proj.offset()..proj.prec().min(201) {
                let expect = if n.rem_euclid(p as i64) == 0 {
                    BigInt::zero()
                } else {
                    f.coefficient_at(stride * n).unwrap().clone()
                };
                assert_eq!(
                    proj.coefficient_at(n).unwrap(),
                    &expect,
                    "p = {}, r = {}, k = {}, n = {}",
                    p,
                    r,
                    k,
                    n
                );
            }
        }
    }

    // cusp candidates congruent to their projections mod p^j
    for &(p, j, beta) in &[(5u64, 1u32, 0u32), (5, 2, 1), (7, 2, 1)] {
        let params = CuspCandidateParams::new(p, 1, j)
            .unwrap()
            .with_beta(beta)
            .unwrap();
        let f = f_m_k_term(1, 1, (p as i64) * 160, &zring()).unwrap();
        let proj = coprime_projection(&f, p, 1).unwrap();
        let prec = 150i64.min(proj.prec());
        // the congruence postcondition is verified inside cusp_candidate
        let candidate = cusp_candidate(&proj, &params, -1, prec).unwrap();
        let shift = (p as i64).pow(beta) * ((p * p - 1) as i64);
        assert_eq!(candidate.weight_times_2, -1 + shift);
    }

    let elapsed = start.elapsed();
    println!("PASS criterion 7: cusp-form shadow checks ({:?})", elapsed);
}

/// Criterion 8: Delta | T_2 = -24 Delta through q^50 (tau(2) = -24), exact
/// over Z.  Operator linearity and reduction commutation run as property
/// tests (see tests/properties.rs); a deterministic 120-case sample runs
/// here so the acceptance suite is self-contained.
#[test]
fn acceptance_08_hecke_eigenform_sanity() {
    let start = Instant::now();
    let delta = eta_quotient_expansion(
        &EtaQuotient::new(vec![(1, 24)], 1).unwrap(),
        24 * 103,
        &zring(),
    )
    .unwrap()
    .to_grain(1)
    .unwrap();
    let params = HeckeParams::integer_weight(12, 1, 1);
    let image = hecke_integer(&delta, 2, &params).unwrap();
    let eigen = delta.scalar_mul(&BigInt::from(-24));
    assert!(image.equal_up_to(&eigen, 51).unwrap());

    // deterministic randomized linearity / reduction sample
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for case in 0..120 {
        let len = 24 + (next() % 40) as usize;
        let coeffs_a: Vec<i64> = (0..len).map(|_| (next() % 41) as i64 - 20).collect();
        let coeffs_b: Vec<i64> = (0..len).map(|_| (next() % 41) as i64 - 20).collect();
        let a = QSeries::from_i64(1, 0, &coeffs_a, zring()).unwrap();
        let b = QSeries::from_i64(1, 0, &coeffs_b, zring()).unwrap();
        let c = BigInt::from((next() % 19) as i64 - 9);
        let m = 2 + next() % 30;

        let combo = a.scalar_mul(&c).add(&b).unwrap();
        let lhs = hecke_integer(&combo, 3, &params).unwrap();
        let rhs = hecke_integer(&a, 3, &params)
            .unwrap()
            .scalar_mul(&c)
            .add(&hecke_integer(&b, 3, &params).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "linearity case {}", case);

        if m % 3 != 0 {
            let x = hecke_integer(&a.reduce_mod(m).unwrap(), 3, &params).unwrap();
            let y = hecke_integer(&a, 3, &params).unwrap().reduce_mod(m).unwrap();
            assert_eq!(x, y, "reduction case {}", case);
        }
    }
    println!(
        "PASS criterion 8: Delta|T_2 = -24 Delta to q^50 and 120 operator-law cases ({:?})",
        start.elapsed()
    );
}

/// Criterion 9: synthetic annihilated series pass the propagation checker
/// for both index patterns; adversarial series are rejected at the premise
/// stage.
#[test]
fn acceptance_09_propagation_bookkeeping() {
    let bound = 2000i64;

    // integer pattern p^{2t+1}
    let params_int = HeckeParams::integer_weight(4, 1, 1);
    let f = synthetic_annihilated_integer(&|n| (n * n + 3) % 23, 5, &params_int, 7, bound)
        .unwrap();
    let report =
        verify_annihilation_propagation(&f, &[(5, params_int.clone())], 7, bound).unwrap();
    assert_eq!(report.verdict, PropagationVerdict::Holds);
    assert!(report.premises.iter().all(|p| p.satisfied));
    assert!(report.conclusion_checked > 100);

    // half-integral pattern l^{4t+3}
    let params_half = HeckeParams::half_integral(2, 1, 1);
    let g = synthetic_annihilated_half_integral(&|m| (3 * m + 1) % 17, 3, &params_half, 25, bound)
        .unwrap();
    let report =
        verify_annihilation_propagation(&g, &[(3, params_half.clone())], 25, bound).unwrap();
    assert_eq!(report.verdict, PropagationVerdict::Holds);
    // indices 27n and 2187n below the bound
    assert!(report.conclusion_checked > 30);

    // the pattern is tight: some index off the 4t+3 family is nonzero,
    // so the checker is not vacuously passing
    let off_family = (0..bound)
        .filter(|&n| n % 9 == 0 && n % 27 != 0 && n > 0) // l^2 * coprime part
        .any(|n| !g.coefficient_at(n).unwrap().is_zero());
    assert!(off_family, "synthetic half-integral series collapsed to zero");

    // adversarial: the partition series is not annihilated; premise rejects
    let p = partition_series(bound, &zring()).unwrap();
    let report = verify_annihilation_propagation(
        &p,
        &[(5, HeckeParams::integer_weight(2, 1, 1))],
        5,
        bound,
    )
    .unwrap();
    assert_eq!(report.verdict, PropagationVerdict::PremiseFailed);
    assert_eq!(report.conclusion_checked, 0);

    println!("PASS criterion 9: propagation bookkeeping on synthetic and adversarial series");
}

/// Criterion 10: scanning the partition series mod 5 with A <= 5 and
/// n <= 200 returns exactly the progression (5, 4).
#[test]
fn acceptance_10_scan_regression() {
    let ring = CoefficientRing::residues(5).unwrap();
    let p = partition_series(5 * 201 + 5, &ring).unwrap();
    let claims = scan_congruences(&p, "sym", 5, 5, 200).unwrap();
    let cells: Vec<(i64, i64)> = claims.iter().map(|c| (c.step, c.shift)).collect();
    assert_eq!(cells, vec![(5, 4)]);
    println!("PASS criterion 10: scan finds exactly (5, 4) for p(n) mod 5, A <= 5");
}
