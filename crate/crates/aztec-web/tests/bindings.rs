use aztec_web::{density_svg, inverse_entry, sample_svg, scheme};

#[test]
fn unknown_scheme_is_rejected() {
    assert!(scheme("hexagonal", 4, 1.0, 1.0, 1.0).is_err());
}

#[test]
fn sample_is_deterministic_svg() {
    let a = sample_svg("two-periodic", 12, 0.5, 1.0, 1.0, 5, true).unwrap();
    assert!(a.starts_with("<svg") || a.starts_with("<?xml"));
    assert_eq!(a, sample_svg("two-periodic", 12, 0.5, 1.0, 1.0, 5, true).unwrap());
}

#[test]
fn density_draws_every_edge() {
    let svg = density_svg("uniform", 3, 1.0, 1.0, 1.0).unwrap();
    assert_eq!(svg.matches("<line").count(), 4 * 3 * 3);
}

#[test]
fn order_one_entry() {
    let v = inverse_entry("one-periodic", 1, 1.0, 1.0, 1.0, 1, 0, 0, 1).unwrap();
    assert!(v[0].abs() < 1e-15 && (v[1] + 0.5).abs() < 1e-15);
}
