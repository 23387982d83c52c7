use layerlab::examples::*;
use layerlab::geometry::Budget;
use layerlab::scaling::fit_power_law;
use std::f64::consts::PI;

fn exponent(rows: &[ExampleResult]) -> f64 {
    fit_power_law(&rows.iter().map(|r| (r.lambda, r.ratio)).collect::<Vec<_>>()).unwrap().exponent
}

#[test]
fn annulus_two_point_quotient() {
    let a = annulus_slp_example(50).unwrap();
    let b = annulus_slp_example(100).unwrap();
    let slope = (b.ratio / a.ratio).ln() / (b.lambda / a.lambda).ln();
    assert!((slope + 5.0 / 6.0).abs() <= 0.1, "{slope}");
}

#[test]
fn modulation_drives_the_flat_rate() {
    let b = Budget::default();
    let with: Vec<_> = [100.0, 200.0].iter().map(|&l| flat_de_example(l, FlatDensity::Modulated, 10.0, &b).unwrap()).collect();
    let without: Vec<_> = [100.0, 200.0].iter().map(|&l| flat_de_example(l, FlatDensity::Plain, 10.0, &b).unwrap()).collect();
    let decay = |r: &[ExampleResult]| r[1].ratio / r[0].ratio;
    assert!(decay(&without) < decay(&with), "{} vs {}", decay(&without), decay(&with));
    for (m, p) in with.iter().zip(&without) {
        assert!(p.ratio < m.ratio);
    }
}

#[test]
fn neumann_ratio_floor_at_double_frequency() {
    let (l, lam) = neumann_index_near_double(50).unwrap();
    let r = disc_neumann_dlp_example(50, l).unwrap();
    assert_eq!(r.method, ExampleMethod::Both);
    let x = lam / 50.0;
    let exact = (PI * (1.0 - 1.0 / (x * x))).sqrt() / (2.0 * PI).sqrt();
    assert!((r.ratio - exact).abs() < 1e-12);
    assert!(r.ratio >= (PI * (1.0 - 1.0 / 3.61)).sqrt() / (2.0 * PI).sqrt());
}

#[test]
fn small_order_neumann_quadrature() {
    let r = disc_neumann_dlp_example(5, 1).unwrap();
    assert!(r.discrepancy.unwrap() <= 1e-8);
}

#[test]
fn glancing_modes_sit_in_a_band() {
    for k in [20, 60, 200] {
        let (_, v) = glancing_product(k).unwrap();
        assert!((0.8..=1.0).contains(&v), "k={k}: {v}");
    }
}

#[test]
fn curved_dlo_rate_is_insensitive_to_m() {
    let b = Budget::default();
    let lams = [100.0, 200.0, 400.0, 800.0];
    let e = |m: f64| exponent(&lams.iter().map(|&l| dlo_curved_example(l, m, 10.0, &b).unwrap()).collect::<Vec<_>>());
    let (e1, e2) = (e(1.0), e(2.0));
    assert!((e1 - e2).abs() <= 0.03, "{e1} {e2}");
}

#[test]
fn flat_dlo_rate() {
    let b = Budget::default();
    let rows: Vec<_> = [100.0, 200.0, 400.0, 800.0].iter().map(|&l| dlo_flat_example(l, 2.0, 10.0, &b).unwrap()).collect();
    let e = exponent(&rows);
    assert!((e - 0.25).abs() <= 0.08, "{e}");
}

#[test]
fn ratios_are_positive_and_finite() {
    let b = Budget::default();
    let rows = [
        annulus_slp_example(25).unwrap(),
        disc_neumann_dlp_example(20, 3).unwrap(),
        flat_de_example(40.0, FlatDensity::Modulated, 8.0, &b).unwrap(),
        dlo_flat_example(60.0, 1.0, 8.0, &b).unwrap(),
        dlo_curved_example(60.0, 1.0, 8.0, &b).unwrap(),
        slo_sharpness_via_de(SharpGeometry::Circle, 60.0, 8.0, &b).unwrap(),
    ];
    for r in rows {
        assert!(r.ratio.is_finite() && r.ratio > 0.0, "{r:?}");
    }
}
