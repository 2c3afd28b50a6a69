use aztec::closed_form::{
    closed_form_inverse, moved_vertex_relations_check, FortressInverse, OnePeriodicInverse, QvolParams,
};
use aztec::oracle::KMatrix;
use aztec::{DiamondGraph, Field, GaussRational, Param, WeightScheme, C64};

fn p(v: f64) -> Param {
    Param::new(v).unwrap()
}

fn exact_oracle(s: &WeightScheme, n: usize) -> aztec::oracle::InverseKasteleyn<GaussRational> {
    let g = DiamondGraph::build(n).unwrap();
    KMatrix::<GaussRational>::assemble(&g, s).unwrap().invert().unwrap()
}

#[test]
fn one_periodic_matches_oracle_exactly() {
    for a in [0.5, 1.0, 2.0] {
        for n in 1..=4 {
            let s = WeightScheme::OnePeriodic { a: p(a) };
            let oracle = exact_oracle(&s, n);
            let closed = OnePeriodicInverse::new(n, p(a)).unwrap().table::<GaussRational>().unwrap();
            assert_eq!(closed.matrix(), oracle.matrix(), "a={a} n={n}");
        }
    }
}

#[test]
fn uniform_dispatch_matches_oracle() {
    let s = WeightScheme::Uniform;
    let closed: aztec::oracle::InverseKasteleyn<GaussRational> = closed_form_inverse(&s, 3).unwrap();
    assert_eq!(closed.matrix(), exact_oracle(&s, 3).matrix());
}

#[test]
fn qcol_matches_oracle() {
    for q in [0.8, 0.9, 0.95] {
        for n in 1..=3 {
            let s = WeightScheme::QCol { a: p(0.7), q: p(q) };
            let oracle = exact_oracle(&s, n);
            let closed = aztec::closed_form::qvol::qcol_table::<GaussRational>(&QvolParams { n, a: p(0.7), q: p(q) })
                .unwrap();
            assert_eq!(closed.matrix(), oracle.matrix(), "q={q} n={n}");
        }
    }
}

#[test]
fn qcol_at_unit_q_is_one_periodic() {
    for n in 1..=4 {
        let qp = QvolParams { n, a: p(1.5), q: Param::ONE };
        let closed = aztec::closed_form::qvol::qcol_table::<GaussRational>(&qp).unwrap();
        let one = OnePeriodicInverse::new(n, p(1.5)).unwrap().table::<GaussRational>().unwrap();
        assert_eq!(closed.matrix(), one.matrix(), "n={n}");
    }
}

#[test]
fn qcol_float_at_unit_q_merges_poles() {
    let qp = QvolParams { n: 4, a: p(0.5), q: Param::ONE };
    let closed = aztec::closed_form::qvol::qcol_table::<C64>(&qp).unwrap();
    let oracle = exact_oracle(&qp.scheme(), 4).map(|v| v.to_c64());
    assert!(closed.matrix().max_abs_diff(oracle.matrix()) < 1e-10);
}

#[test]
fn qdiag_matches_oracle() {
    for n in 1..=3 {
        let s = WeightScheme::QDiag { a: p(0.5), q: p(0.9) };
        let closed: aztec::oracle::InverseKasteleyn<GaussRational> = closed_form_inverse(&s, n).unwrap();
        assert_eq!(closed.matrix(), exact_oracle(&s, n).matrix(), "n={n}");
    }
}

#[test]
fn fortress_matches_oracle_at_order_four() {
    for a in [0.5, 1.0, 2.0] {
        let s = WeightScheme::TwoPeriodicEven { a: p(a), b: Param::ONE };
        let closed = FortressInverse::new(4, p(a)).unwrap().table::<GaussRational>().unwrap();
        assert_eq!(closed.matrix(), exact_oracle(&s, 4).matrix(), "a={a}");
    }
}

#[test]
fn relations_hold_for_closed_forms() {
    let cases = [
        WeightScheme::OnePeriodic { a: p(0.5) },
        WeightScheme::QCol { a: p(1.0), q: p(0.9) },
        WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE },
    ];
    for s in cases {
        let n = 4;
        let g = DiamondGraph::build(n).unwrap();
        let k = KMatrix::<C64>::assemble(&g, &s).unwrap();
        let inv: aztec::oracle::InverseKasteleyn<C64> = closed_form_inverse(&s, n).unwrap();
        let r = moved_vertex_relations_check(&k, &inv).unwrap();
        assert!(r.max() < 1e-10, "{s}: {r:?}");
    }
}

#[test]
fn odd_two_periodic_has_no_closed_form() {
    let s = WeightScheme::TwoPeriodicOdd { a: p(0.5), b: Param::ONE };
    assert!(closed_form_inverse::<C64>(&s, 3).is_err());
}
