use proptest::prelude::*;

use qpdot_core::oracle::{characteristic_exact, thermo_exact, TruncationPolicy};
use qpdot_core::thermo::{characteristic_closed, thermo_closed};
use qpdot_core::{Constants, FieldConfig, PotentialParams, Pseudodot};

fn dot(v0: f64, r0: f64, b: f64, phi: f64) -> Pseudodot {
    Pseudodot::default()
        .with_potential(PotentialParams { v0, r0, k_osc: 1.0 })
        .with_fields(FieldConfig {
            b,
            phi_ab: phi,
            eps: 0.0,
        })
}

fn params() -> impl Strategy<Value = (f64, f64, f64, f64, i32)> {
    (
        0.1f64..20.0,
        0.3f64..5.0,
        0.0f64..10.0,
        0.0f64..20.0,
        -5i32..=5,
    )
}

proptest! {
    #[test]
    fn radial_energy_is_affine_in_n_r((v0, r0, b, phi, m) in params(), n in 0u32..20) {
        let s = dot(v0, r0, b, phi);
        let e: Vec<f64> = (n..n + 3).map(|k| s.radial_energy(k, m).unwrap()).collect();
        let second = e[2] - 2.0 * e[1] + e[0];
        prop_assert!(second.abs() <= 1e-12 * e[2].abs().max(1.0));
    }

    #[test]
    fn flux_quantum_shift_is_a_gauge_symmetry((v0, r0, b, phi, m) in params(), n in 0u32..6) {
        let s = dot(v0, r0, b, phi);
        let shifted = dot(v0, r0, b, phi - s.consts.flux_quantum());
        let e = s.radial_energy(n, m).unwrap();
        let g = shifted.radial_energy(n, m + 1).unwrap();
        prop_assert!((e - g).abs() <= 1e-12 * e.abs().max(1.0));
    }

    #[test]
    fn quantization_condition_holds((v0, r0, b, phi, m) in params(), n in 0u32..10) {
        let s = dot(v0, r0, b, phi);
        let d = s.derived(m);
        let eta = s.eta_of_energy(s.radial_energy(n, m).unwrap(), m);
        let recovered = eta / (4.0 * d.omega) - (d.gamma.abs() + 1.0) / 2.0;
        prop_assert!((recovered - n as f64).abs() < 1e-10);
    }

    #[test]
    fn rearranged_spectrum_agrees((v0, r0, b, phi, m) in params(), n in 0u32..10) {
        let s = dot(v0, r0, b, phi);
        let wc = b;
        let alpha = phi / (2.0 * std::f64::consts::PI);
        let beta = ((m as f64 + alpha).powi(2) + 2.0 * v0 * r0 * r0).sqrt();
        let rearranged = (wc * wc + 8.0 * v0 / (r0 * r0)).sqrt() * (n as f64 + (beta + 1.0) / 2.0)
            + wc * (m as f64 + alpha) / 2.0
            - 2.0 * v0;
        let e = s.radial_energy(n, m).unwrap();
        prop_assert!((e - rearranged).abs() <= 1e-12 * e.abs().max(1.0));
    }

    #[test]
    fn axial_spacing_is_constant(eps in 0.0f64..10.0, k in 0.1f64..10.0, n in 1u32..50) {
        let s = Pseudodot::default()
            .with_potential(PotentialParams { v0: 5.0, r0: 1.0, k_osc: k })
            .with_fields(FieldConfig { b: 0.0, phi_ab: 0.0, eps });
        let gap = s.axial_energy(n + 1).unwrap() - s.axial_energy(n).unwrap();
        prop_assert!((gap - 0.5 * k.sqrt()).abs() <= 1e-12 * gap.abs().max(1.0));
    }

    #[test]
    fn exact_characteristic_decreases(xi in -1.5f64..10.0, beta in 0.05f64..20.0, dxi in 0.01f64..2.0, db in 0.01f64..2.0) {
        let p = TruncationPolicy::default();
        let base = characteristic_exact(xi, 1.0, beta, &p).unwrap().value;
        prop_assert!(characteristic_exact(xi + dxi, 1.0, beta, &p).unwrap().value < base || base == 0.0);
        prop_assert!(characteristic_exact(xi, 1.0, beta + db, &p).unwrap().value < base || base == 0.0);
    }

    #[test]
    fn doubling_the_term_budget_stays_within_the_tail(xi in -1.5f64..5.0, beta in 0.01f64..1.0) {
        let tight = TruncationPolicy { rel_term_floor: 1e-6, max_terms: 100_000 };
        let loose = characteristic_exact(xi, 1.0, beta, &tight).unwrap();
        let doubled = TruncationPolicy { rel_term_floor: 1e-300, max_terms: 2 * loose.terms };
        let more = match characteristic_exact(xi, 1.0, beta, &doubled) {
            Ok(sum) => sum.value,
            Err(_) => {
                // The budget ran out before the floor; sum the 2N terms directly.
                (1..=2 * loose.terms)
                    .map(|n| -(-(-beta * (n as f64 + xi / 2.0)).exp()).ln_1p())
                    .sum()
            }
        };
        prop_assert!(more >= loose.value);
        prop_assert!(more - loose.value <= loose.tail_bound * (1.0 + 1e-9) + 1e-15 * more);
    }

    #[test]
    fn closed_form_is_affine_in_the_offset(a in -5.0f64..5.0, da in 0.01f64..3.0, beta in 0.01f64..20.0) {
        let k = Constants::NATURAL;
        let x = |a: f64| characteristic_closed(a, beta, &k);
        let second = x(a + 2.0 * da) - 2.0 * x(a + da) + x(a);
        let scale = x(a).abs().max(x(a + 2.0 * da).abs()).max(1.0);
        prop_assert!(second.abs() <= 1e-12 * scale);
    }

    #[test]
    fn closed_free_energy_identity(a in -5.0f64..5.0, t in 0.05f64..100.0) {
        let p = thermo_closed(a, t, &Constants::NATURAL).unwrap();
        prop_assert!((p.f - (p.u - t * p.s)).abs() <= 1e-10 * p.u.abs().max(p.f.abs()).max(1.0));
    }

    #[test]
    fn exact_entropy_is_non_negative(xi in -1.5f64..10.0, t in 0.05f64..50.0) {
        let p = thermo_exact(xi, 1.0, t, &TruncationPolicy::default()).unwrap();
        prop_assert!(p.s >= 0.0 && p.cv >= 0.0 && p.x >= 0.0);
    }
}
