use carlos_scales::analysis::{
    octave_fit, search_carlos2, search_generic, tolerance_check, Family,
};
use carlos_scales::builders::{carlos2, pentatonic};
use carlos_scales::interval::{cents, compose, invert, Catalog, JustInterval, Ratio};
use carlos_scales::optimizer::{numeric_minimize, objective, optimal_unit, Target, TargetSystem};
use carlos_scales::report::{export_scl, parse_scl, ScaleReport};
use proptest::prelude::*;

fn ratio() -> impl Strategy<Value = Ratio> {
    (1u64..5000, 1u64..5000).prop_map(|(n, d)| Ratio::new(n, d).unwrap())
}

/// Ratios in [1, 2].
fn within_octave() -> impl Strategy<Value = Ratio> {
    (1u64..10_000, 0u64..=10_000)
        .prop_map(|(d, extra)| Ratio::new(d + extra * d / 10_000, d).unwrap())
}

fn interval(r: Ratio) -> JustInterval {
    JustInterval::new(r.to_string(), r)
}

fn catalog_interval() -> impl Strategy<Value = JustInterval> {
    let pool: Vec<JustInterval> = Catalog::builtin()
        .iter()
        .filter(|i| i.ratio.is_ascending())
        .cloned()
        .collect();
    proptest::sample::select(pool)
}

fn system() -> impl Strategy<Value = TargetSystem> {
    proptest::collection::vec((1u32..=100, catalog_interval()), 1..=6).prop_map(|ts| {
        let targets: Vec<Target> = ts.into_iter().map(|(k, i)| Target::new(k, i)).collect();
        TargetSystem::new("prop", vec![], targets).unwrap()
    })
}

fn ordered_pair() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=200).prop_flat_map(|a| (Just(a), a + 1..=260))
}

proptest! {
    #[test]
    fn compose_commutes_and_associates(a in ratio(), b in ratio(), c in ratio()) {
        let (a, b, c) = (interval(a), interval(b), interval(c));
        prop_assert_eq!(compose(&a, &b).unwrap().ratio, compose(&b, &a).unwrap().ratio);
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.ratio, right.ratio);
    }

    #[test]
    fn compose_with_inversion_is_octave(r in within_octave()) {
        let i = interval(r);
        let inv = invert(&i).unwrap();
        prop_assert_eq!(compose(&i, &inv).unwrap().ratio, Ratio::OCTAVE);
    }

    #[test]
    fn cents_add_under_composition(a in ratio(), b in ratio()) {
        let sum = compose(&interval(a), &interval(b)).unwrap();
        prop_assert!((cents(sum.ratio) - (cents(a) + cents(b))).abs() < 1e-9);
    }

    #[test]
    fn ratios_are_reduced(n in 1u64..100_000, d in 1u64..100_000) {
        let r = Ratio::new(n, d).unwrap();
        prop_assert_eq!(num_integer::gcd(r.numer(), r.denom()), 1);
        prop_assert_eq!(r.numer() as u128 * d as u128, n as u128 * r.denom() as u128);
    }

    #[test]
    fn closed_form_is_stationary(sys in system()) {
        let s = optimal_unit(&sys);
        prop_assert!(s.unit_log2 > 0.0);
        let log2_sum: f64 = sys.targets().iter().zip(s.residuals_log2()).map(|(t, r)| f64::from(t.steps) * r).sum();
        prop_assert!(log2_sum.abs() < 1e-12, "{}", log2_sum);
        let cents_sum: f64 = sys.targets().iter().zip(&s.residuals).map(|(t, r)| f64::from(t.steps) * r).sum();
        prop_assert!(cents_sum.abs() < 1e-9, "{}", cents_sum);
    }

    #[test]
    fn closed_form_is_minimal(sys in system(), delta in -0.01f64..0.01) {
        let x0 = optimal_unit(&sys).unit_log2;
        prop_assert!(objective(&sys, x0 + delta) >= objective(&sys, x0));
    }

    #[test]
    fn scaling_steps_divides_unit(sys in system(), g in 1u32..=20) {
        let scaled: Vec<Target> = sys.targets().iter().map(|t| Target::new(t.steps * g, t.interval.clone())).collect();
        let scaled = TargetSystem::new("scaled", vec![], scaled).unwrap();
        let base = optimal_unit(&sys).unit_log2;
        let want = base / f64::from(g);
        let got = optimal_unit(&scaled).unit_log2;
        prop_assert!(((got - want) / want).abs() < 1e-15, "{} vs {}", got, want);
    }

    #[test]
    fn additive_triples_add(a in 1u32..=100, b in 1u32..=100, first in catalog_interval(), second in catalog_interval()) {
        prop_assume!(first.ratio != second.ratio);
        let sys = carlos_scales::builders::general_pair(&first, a, &second, b).unwrap();
        let s = optimal_unit(&sys);
        for (x, y, z) in sys.additive_triples() {
            prop_assert!((s.residuals[x] + s.residuals[y] - s.residuals[z]).abs() < 1e-9);
        }
    }

    #[test]
    fn octave_fit_bound(sys in system()) {
        let s = optimal_unit(&sys);
        let fit = octave_fit(&s);
        prop_assert!(fit.deviation_cents.abs() <= s.unit_cents / 2.0 + 1e-9);
    }

    #[test]
    fn report_json_round_trip(sys in system()) {
        let report = ScaleReport::new(&optimal_unit(&sys));
        let back = ScaleReport::from_json(&report.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, report);
    }

    #[test]
    fn scl_lines_increase((a, b) in ordered_pair(), steps in 1u32..=120) {
        let text = export_scl(&optimal_unit(&carlos2(a, b).unwrap()), steps, "prop");
        let parsed = parse_scl(&text).unwrap();
        prop_assert_eq!(parsed.pitches_cents.len(), steps as usize);
        prop_assert!(parsed.pitches_cents.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gcd_variants_subdivide((a, b) in ordered_pair(), g in 2u32..=6) {
        let base = optimal_unit(&carlos2(a, b).unwrap()).unit_log2;
        let scaled = optimal_unit(&carlos2(a * g, b * g).unwrap()).unit_log2;
        prop_assert!((scaled - base / f64::from(g)).abs() / scaled < 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn golden_section_agrees_with_closed_form(sys in system()) {
        let closed = optimal_unit(&sys).unit_log2;
        let numeric = numeric_minimize(&sys, (1e-4, 2.0), 1e-12).unwrap();
        prop_assert!((closed - numeric).abs() < 1e-10, "{} vs {}", closed, numeric);
    }
}

#[test]
fn search_is_deterministic() {
    assert_eq!(
        search_carlos2(40, 40, 5.0, false),
        search_carlos2(40, 40, 5.0, false)
    );
}

#[test]
fn search_gate_is_sound() {
    let hits = search_carlos2(30, 40, 5.0, false);
    for h in &hits {
        let (ok, max) = tolerance_check(&h.scale, 5.0);
        assert!(ok);
        assert_eq!(max, h.max_abs_deviation_cents);
    }
    for b in 2..=40 {
        for a in 1..b.min(31) {
            let hit = hits.iter().any(|h| h.params == [a, b]);
            let (ok, _) = tolerance_check(&optimal_unit(&carlos2(a, b).unwrap()), 5.0);
            assert_eq!(hit, ok, "({a},{b})");
        }
    }
}

#[test]
fn search_hits_are_ordered() {
    let hits = search_carlos2(40, 40, 5.0, false);
    let keys: Vec<(u32, u32)> = hits
        .iter()
        .map(|h| (h.params[0] + h.params[1], h.params[0]))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let pent = search_generic(&Family::Pentatonic, &[Some(20), Some(30)], 8.0).unwrap();
    let keys: Vec<(u32, Vec<u32>)> = pent
        .iter()
        .map(|h| (h.params.iter().sum(), h.params.clone()))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn gcd_hits_match_reduced_scale() {
    for h in search_carlos2(40, 40, 5.0, false)
        .iter()
        .filter(|h| h.gcd_trivial)
    {
        let g = num_integer::gcd(h.params[0], h.params[1]);
        let reduced = optimal_unit(&carlos2(h.params[0] / g, h.params[1] / g).unwrap());
        let rel = (h.scale.unit_log2 - reduced.unit_log2 / f64::from(g)).abs() / h.scale.unit_log2;
        assert!(rel < 1e-15, "{:?}", h.params);
    }
}

#[test]
fn pentatonic_seven_eleven_just_misses_tighter_gate() {
    let max = optimal_unit(&pentatonic(7, 11).unwrap()).max_abs_residual();
    assert!(max > 7.2 && max < 7.25);
}
