use aztec::closed_form::closed_form_inverse;
use aztec::dpp::{joint_probability, EdgeEvent, EdgeProcess};
use aztec::oracle::{enumerate_matchings, InverseKasteleyn, KMatrix};
use aztec::sampler::{empirical_edge_freq, Shuffler};
use aztec::{DiamondGraph, Edge, Field, GaussRational, KCoord, Param, WeightScheme, C64};
use proptest::prelude::*;

fn p(v: f64) -> Param {
    Param::new(v).unwrap()
}

fn e(b: (i32, i32), w: (i32, i32)) -> Edge {
    Edge { black: KCoord::new(b.0, b.1), white: KCoord::new(w.0, w.1) }
}

fn exact(s: &WeightScheme, n: usize) -> (KMatrix<GaussRational>, InverseKasteleyn<GaussRational>) {
    let g = DiamondGraph::build(n).unwrap();
    let k = KMatrix::assemble(&g, s).unwrap();
    let inv = k.invert().unwrap();
    (k, inv)
}

fn float(s: &WeightScheme, n: usize) -> (KMatrix<C64>, InverseKasteleyn<C64>) {
    let g = DiamondGraph::build(n).unwrap();
    let k = KMatrix::assemble(&g, s).unwrap();
    let inv = closed_form_inverse(s, n).unwrap();
    (k, inv)
}

#[test]
fn order_one_uniform_events() {
    let (k, inv) = exact(&WeightScheme::Uniform, 1);
    let half = GaussRational::from_ratio(1, 2);
    let single = EdgeEvent::new(vec![e((0, 1), (1, 0))]).unwrap();
    assert_eq!(joint_probability(&k, &inv, &single).unwrap(), half);
    let vertical = EdgeEvent::new(vec![e((0, 1), (1, 0)), e((2, 1), (1, 2))]).unwrap();
    assert_eq!(joint_probability(&k, &inv, &vertical).unwrap(), half);
}

#[test]
fn overlapping_edges_are_rejected() {
    assert!(EdgeEvent::new(vec![e((0, 1), (1, 0)), e((0, 1), (1, 2))]).is_err());
}

/// Probability of an event by direct summation over matchings.
fn enumerated(s: &WeightScheme, n: usize, ev: &[Edge]) -> GaussRational {
    let g = DiamondGraph::build(n).unwrap();
    let list = enumerate_matchings::<GaussRational>(&g, s).unwrap();
    let mut hit = GaussRational::zero();
    for (m, w) in list.matchings.iter().zip(&list.weights) {
        if ev.iter().all(|x| m.contains(x)) {
            hit += w.clone();
        }
    }
    hit / list.total_weight()
}

use num_traits::Zero;

#[test]
fn single_and_pair_events_match_enumeration_exactly() {
    let s = WeightScheme::OnePeriodic { a: p(2.0) };
    let (k, inv) = exact(&s, 2);
    let dp = EdgeProcess::new(&k, &inv).unwrap();
    let edges = k.graph().edges();
    for x in &edges {
        assert_eq!(dp.edge_probability(*x).unwrap(), enumerated(&s, 2, &[*x]));
        for y in &edges {
            if let Ok(ev) = EdgeEvent::new(vec![*x, *y]) {
                if x != y {
                    assert_eq!(dp.joint_probability(&ev).unwrap(), enumerated(&s, 2, &[*x, *y]));
                }
            }
        }
    }
}

#[test]
fn vertex_sums_are_one() {
    let schemes = [
        WeightScheme::Uniform,
        WeightScheme::OnePeriodic { a: p(0.5) },
        WeightScheme::QCol { a: p(1.0), q: p(0.9) },
        WeightScheme::QDiag { a: p(1.0), q: p(0.9) },
        WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE },
    ];
    for s in schemes {
        for n in [2usize, 4, 6] {
            let g = DiamondGraph::build(n).unwrap();
            let k = KMatrix::<C64>::assemble(&g, &s).unwrap();
            let inv = k.invert().unwrap();
            let f = EdgeProcess::new(&k, &inv).unwrap().density_field().unwrap();
            assert!(f.vertex_sum_error() < 1e-9, "{s} n={n}");
            assert!(f.iter().all(|(_, v)| (0.0..=1.0).contains(&v.re)));
        }
    }
}

#[test]
fn closed_form_and_oracle_kernels_agree() {
    let s = WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE };
    let (k, closed) = float(&s, 4);
    let oracle = k.invert().unwrap();
    let a = EdgeProcess::new(&k, &closed).unwrap().density_field().unwrap();
    let b = EdgeProcess::new(&k, &oracle).unwrap().density_field().unwrap();
    for ((_, x), (_, y)) in a.iter().zip(b.iter()) {
        assert!((x - y).norm() < 1e-8);
    }
}

#[test]
fn uniform_corner_is_frozen_at_order_eight() {
    let (k, inv) = float(&WeightScheme::Uniform, 8);
    let pr = EdgeProcess::new(&k, &inv).unwrap().edge_probability(e((0, 1), (1, 0))).unwrap();
    assert!(pr.re >= 0.99);
}

#[test]
fn two_periodic_sampler_matches_density_field() {
    let s = WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE };
    let (k, inv) = float(&s, 4);
    let field = EdgeProcess::new(&k, &inv).unwrap().density_field().unwrap();
    let samples = Shuffler::new(&s, 4).unwrap().sample_many(20_000, 5).unwrap();
    for (edge, pr) in field.iter() {
        let f = empirical_edge_freq(&samples, *edge).unwrap();
        let sigma = (pr.re * (1.0 - pr.re) / f.count as f64).sqrt().max(1e-12);
        assert!((f.frequency - pr.re).abs() <= 4.0 * sigma + 1e-12, "{edge:?}: {f:?} vs {}", pr.re);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn inclusion_exclusion_bound(a in 0.2f64..3.0, i in 0usize..24, j in 0usize..24) {
        let s = WeightScheme::OnePeriodic { a: p(a) };
        let (k, inv) = float(&s, 3);
        let dp = EdgeProcess::new(&k, &inv).unwrap();
        let edges = k.graph().edges();
        let (x, y) = (edges[i % edges.len()], edges[j % edges.len()]);
        if let Ok(ev) = EdgeEvent::new(vec![x, y]) {
            let px = dp.edge_probability(x).unwrap().re;
            let py = dp.edge_probability(y).unwrap().re;
            let pxy = dp.joint_probability(&ev).unwrap().re;
            prop_assert!((0.0..=1.0).contains(&pxy));
            prop_assert!(px + py - pxy <= 1.0 + 1e-9);
        }
    }
}
