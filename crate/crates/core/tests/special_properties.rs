//! Identities of the elliptic special functions.

use std::f64::consts::FRAC_PI_2;

use graph_iir::special::{
    adjust_modulus_elliptic, complete_elliptic_k, complete_elliptic_k_comp, inverse_sn, jacobi_cd,
    jacobi_sn_cn_dn,
};
use graph_iir::{Complex64, Modulus};
use graph_iir_oracle as oracle;
use proptest::prelude::*;

const MODULI: [f64; 4] = [0.0, 0.3, 0.7, 0.95];

fn real_grid() -> impl Iterator<Item = Complex64> {
    (0..100).map(|i| Complex64::new(-5.0 + 10.0 * i as f64 / 99.0, 0.0))
}

fn complex_grid() -> impl Iterator<Item = Complex64> {
    (0..100).map(|i| {
        let (a, b) = (i % 10, i / 10);
        Complex64::new(-2.0 + 4.0 * a as f64 / 9.0, -1.2 + 2.4 * b as f64 / 9.0)
    })
}

#[test]
fn pythagorean_identities() {
    for k in MODULI {
        let m = Modulus::new(k).unwrap();
        for u in real_grid().chain(complex_grid()) {
            let (sn, cn, dn) = jacobi_sn_cn_dn(u, m).unwrap();
            let one = Complex64::new(1.0, 0.0);
            let e1 = (sn * sn + cn * cn - one).norm();
            let e2 = (dn * dn + k * k * sn * sn - one).norm();
            assert!(e1 < 1e-11 && e2 < 1e-11, "k={k} u={u}: {e1:e} {e2:e}");
        }
    }
}

#[test]
fn degenerate_moduli() {
    let zero = Modulus::new(0.0).unwrap();
    let near_one = Modulus::from_complement(1e-12).unwrap();
    for u in real_grid() {
        let (sn, _, _) = jacobi_sn_cn_dn(u, zero).unwrap();
        assert!((sn.re - u.re.sin()).abs() < 1e-9 && sn.im.abs() < 1e-15);
        let cd = jacobi_cd(u, zero).unwrap();
        assert!((cd.re - u.re.cos()).abs() < 1e-9);
        let (sn, _, _) = jacobi_sn_cn_dn(u, near_one).unwrap();
        assert!((sn.re - u.re.tanh()).abs() < 1e-9, "u={u}: {sn}");
    }
}

#[test]
fn real_values_match_integral_inversion() {
    for k in [0.1, 0.5, 0.9, 0.999] {
        let m = Modulus::new(k).unwrap();
        for u in real_grid() {
            let (sn, cn, dn) = jacobi_sn_cn_dn(u, m).unwrap();
            let (s, c, d) = oracle::sn_cn_dn(u.re, k);
            assert!((sn.re - s).abs() < 1e-12, "k={k} u={u}: sn {} vs {s}", sn.re);
            assert!((cn.re - c).abs() < 1e-12 && (dn.re - d).abs() < 1e-12);
        }
    }
}

#[test]
fn quarter_period() {
    assert!((complete_elliptic_k(Modulus::new(0.0).unwrap()) - FRAC_PI_2).abs() <= f64::EPSILON);
    let mut prev = 0.0;
    for i in 0..1000 {
        let k = i as f64 / 1000.0;
        let big_k = complete_elliptic_k(Modulus::new(k).unwrap());
        assert!(big_k > prev, "K not increasing at k={k}");
        let reference = oracle::complete_k(oracle::complement(k));
        assert!((big_k - reference).abs() <= 1e-13 * reference);
        prev = big_k;
    }
}

#[test]
fn inverse_round_trip_on_segments() {
    for k in [0.0, 0.3, 0.7, 0.95, 0.999_999] {
        let m = Modulus::new(k).unwrap();
        for i in 0..=200 {
            let t = -1.0 + i as f64 / 100.0;
            for w in [Complex64::new(t, 0.0), Complex64::new(0.0, 10.0 * t)] {
                let u = inverse_sn(w, m).unwrap();
                let (sn, _, _) = jacobi_sn_cn_dn(u, m).unwrap();
                assert!((sn - w).norm() < 1e-10, "k={k} w={w}: {sn}");
            }
        }
    }
}

/// `F(ω) = 1 / (k₁ F(1/(kω)))` for `F(ω) = cd(N u K₁, k₁)`, `ω = cd(u K, k)`.
#[test]
fn degree_identity_after_adjustment() {
    for (n, k1) in [(4, 0.0631), (9, 0.0108148), (3, 0.2), (7, 1e-4), (12, 0.05)] {
        let m1 = Modulus::new(k1).unwrap();
        let m = adjust_modulus_elliptic(n, m1).unwrap();
        let (kk, kk_comp) = (complete_elliptic_k(m), complete_elliptic_k_comp(m).unwrap());
        let kk1 = complete_elliptic_k(m1);
        for i in 1..50 {
            let u = i as f64 / 50.0;
            let f = jacobi_cd(Complex64::new(n as f64 * u * kk1, 0.0), m1).unwrap();
            // 1/(kω) = cd(uK + jK', k), so F there is cd(N(u + jK'/K)K₁, k₁).
            let shifted = Complex64::new(n as f64 * u * kk1, n as f64 * kk1 * kk_comp / kk);
            let g = jacobi_cd(shifted, m1).unwrap();
            let rhs = 1.0 / (k1 * g);
            assert!((f - rhs).norm() <= 1e-8 * f.norm().max(1.0), "N={n} u={u}: {f} vs {rhs}");
        }
    }
}

proptest! {
    #[test]
    fn pythagorean_random(k in 0.0..0.999f64, re in -10.0..10.0f64, im in -1.0..1.0f64) {
        let m = Modulus::new(k).unwrap();
        let u = Complex64::new(re, im * complete_elliptic_k_comp(m).unwrap_or(1.0) * 0.9);
        let (sn, cn, dn) = jacobi_sn_cn_dn(u, m).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let scale = 1.0 + sn.norm_sqr();
        prop_assert!((sn * sn + cn * cn - one).norm() < 1e-11 * scale);
        prop_assert!((dn * dn + k * k * sn * sn - one).norm() < 1e-11 * scale);
    }

    #[test]
    fn inverse_round_trip_random(k in 0.0..0.999f64, re in -1.0..1.0f64, im in -10.0..10.0f64) {
        let m = Modulus::new(k).unwrap();
        for w in [Complex64::new(re, 0.0), Complex64::new(0.0, im)] {
            let u = inverse_sn(w, m).unwrap();
            let (sn, _, _) = jacobi_sn_cn_dn(u, m).unwrap();
            prop_assert!((sn - w).norm() < 1e-10);
        }
    }

    #[test]
    fn adjusted_modulus_solves_degree_equation(n in 1usize..20, log_k1 in -8.0..-0.1f64) {
        let k1 = 10f64.powf(log_k1);
        let m = adjust_modulus_elliptic(n, Modulus::new(k1).unwrap()).unwrap();
        let reference = oracle::elliptic_selectivity(n, k1);
        prop_assert!((m.k() - reference).abs() < 1e-11, "{} vs {}", m.k(), reference);
        prop_assert!(m.k() >= k1 - 1e-15);
    }
}
