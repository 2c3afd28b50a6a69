use std::collections::BTreeSet;

use aztec::sampler::sample;
use aztec::sampler::TilingConfiguration;
use aztec::{classify, Color, DiamondGraph, Edge, Slot, WeightScheme};
use proptest::prelude::*;

#[test]
fn zero_order_is_rejected() {
    assert!(DiamondGraph::build(0).is_err());
}

#[test]
fn faces_partition_the_edges() {
    for n in 1..=6 {
        let g = DiamondGraph::build(n).unwrap();
        assert_eq!(g.whites().len(), n * (n + 1));
        assert_eq!(g.blacks().len(), n * (n + 1));
        let all: BTreeSet<Edge> = g.edges().into_iter().collect();
        let from_faces: Vec<Edge> = g.faces().iter().flat_map(|f| f.edges).collect();
        assert_eq!(from_faces.len(), 4 * n * n);
        assert_eq!(all, from_faces.into_iter().collect());
    }
}

#[test]
fn colours_follow_parity() {
    let g = DiamondGraph::build(3).unwrap();
    assert!(g.whites().iter().all(|&w| classify(w).unwrap().color == Color::White));
    assert!(g.blacks().iter().all(|&b| classify(b).unwrap().color == Color::Black));
}

#[test]
fn tiling_json_round_trip() {
    let t = sample(&WeightScheme::Uniform, 6, 11).unwrap();
    let text = serde_json::to_string(&t).unwrap();
    let back: TilingConfiguration = serde_json::from_str(&text).unwrap();
    assert_eq!(back, t);
    assert!(TilingConfiguration::new(back.order(), back.edges().to_vec()).is_ok());
}

#[test]
fn incomplete_matching_is_rejected() {
    let t = sample(&WeightScheme::Uniform, 3, 0).unwrap();
    let mut edges = t.edges().to_vec();
    edges.pop();
    assert!(TilingConfiguration::new(3, edges).is_err());
}

proptest! {
    #[test]
    fn locate_inverts_slot_edge(k in 0usize..50, l in 0usize..50, s in 0usize..4) {
        let slot = Slot::ALL[s];
        prop_assert_eq!(Slot::locate(&slot.edge(k, l)), Some((k, l, slot)));
    }
}
