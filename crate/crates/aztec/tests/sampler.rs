use aztec::oracle::enumerate_matchings;
use aztec::sampler::{empirical_edge_freq, sample, DominoType, Shuffler, TilingConfiguration};
use aztec::{DiamondGraph, Edge, KCoord, Param, WeightScheme, C64};
use proptest::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn p(v: f64) -> Param {
    Param::new(v).unwrap()
}

fn chi_square_p_value(s: &WeightScheme, n: usize, count: usize, seed: u64) -> f64 {
    let g = DiamondGraph::build(n).unwrap();
    let list = enumerate_matchings::<C64>(&g, s).unwrap();
    let total: f64 = list.weights.iter().map(|w| w.norm()).sum();
    let samples = Shuffler::new(s, n).unwrap().sample_many(count, seed).unwrap();
    let mut observed = vec![0usize; list.len()];
    for t in &samples {
        let idx = list
            .matchings
            .iter()
            .position(|m| {
                let mut m = m.clone();
                m.sort();
                m == t.edges()
            })
            .expect("sample is a matching");
        observed[idx] += 1;
    }
    let stat: f64 = observed
        .iter()
        .zip(&list.weights)
        .map(|(&o, w)| {
            let e = count as f64 * w.norm() / total;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    1.0 - ChiSquared::new((list.len() - 1) as f64).unwrap().cdf(stat)
}

#[test]
fn small_orders_follow_the_weighted_distribution() {
    let schemes = [
        WeightScheme::Uniform,
        WeightScheme::OnePeriodic { a: p(2.0) },
        WeightScheme::QCol { a: p(1.0), q: p(0.9) },
        WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE },
    ];
    for s in schemes {
        for n in 1..=3 {
            if s.validate(n).is_err() {
                continue;
            }
            let pv = chi_square_p_value(&s, n, 40_000, 11);
            assert!(pv > 0.001, "{s} n={n} p={pv}");
        }
    }
}

#[test]
fn vertical_pair_frequency_at_order_one() {
    let vertical = Edge { black: KCoord::new(0, 1), white: KCoord::new(1, 0) };
    let uni = Shuffler::new(&WeightScheme::Uniform, 1).unwrap().sample_many(10_000, 3).unwrap();
    let f = empirical_edge_freq(&uni, vertical).unwrap();
    assert!((f.frequency - 0.5).abs() < 0.02);
    let one = Shuffler::new(&WeightScheme::OnePeriodic { a: p(2.0) }, 1).unwrap().sample_many(10_000, 3).unwrap();
    let f = empirical_edge_freq(&one, vertical).unwrap();
    assert!((f.frequency - 0.8).abs() < 0.02, "{f:?}");
}

#[test]
fn samples_are_reproducible() {
    let s = WeightScheme::QCol { a: p(1.0), q: p(0.95) };
    assert_eq!(sample(&s, 20, 99).unwrap(), sample(&s, 20, 99).unwrap());
    assert_ne!(sample(&s, 20, 99).unwrap(), sample(&s, 20, 100).unwrap());
}

#[test]
fn empirical_frequency_rejects_foreign_edges() {
    let t = sample(&WeightScheme::Uniform, 2, 0).unwrap();
    let bad = Edge { black: KCoord::new(0, 1), white: KCoord::new(3, 4) };
    assert!(empirical_edge_freq(&[t], bad).is_err());
}

#[test]
fn vertical_order_one_tiling_has_north_and_south_dominoes() {
    let t = TilingConfiguration::new(
        1,
        vec![
            Edge { black: KCoord::new(0, 1), white: KCoord::new(1, 0) },
            Edge { black: KCoord::new(2, 1), white: KCoord::new(1, 2) },
        ],
    )
    .unwrap();
    let mut types: Vec<DominoType> = t.dominoes().map(|(_, d, _)| d).collect();
    types.sort();
    assert_eq!(types, vec![DominoType::N, DominoType::S]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_sample_is_a_perfect_matching(n in 1usize..12, seed in any::<u64>(), a in 0.2f64..3.0) {
        let s = WeightScheme::OnePeriodic { a: p(a) };
        let t = sample(&s, n, seed).unwrap();
        prop_assert!(TilingConfiguration::new(n, t.edges().to_vec()).is_ok());
    }
}
