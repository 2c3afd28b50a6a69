use std::collections::BTreeSet;
use std::time::Instant;

use aztec::render::{domino_rects, render_tiling, Palette, RenderSpec};
use aztec::sampler::{sample, DominoType, TilingConfiguration};
use aztec::{Edge, KCoord, Param, WeightScheme};
use proptest::prelude::*;

/// Unit squares of the order-`n` diamond in rectangle coordinates.
fn diamond_cells(n: i32) -> BTreeSet<(i32, i32)> {
    let mut out = BTreeSet::new();
    for x in 0..2 * n {
        for y in 0..2 * n {
            let (cx, cy) = (x as f64 + 0.5 - n as f64, y as f64 + 0.5 - n as f64);
            if cx.abs() + cy.abs() <= n as f64 {
                out.insert((x, y));
            }
        }
    }
    out
}

fn covered_cells(t: &TilingConfiguration) -> Option<BTreeSet<(i32, i32)>> {
    let mut cells = BTreeSet::new();
    for r in domino_rects(t) {
        for dx in 0..r.width {
            for dy in 0..r.height {
                if !cells.insert((r.x + dx, r.y + dy)) {
                    return None;
                }
            }
        }
    }
    Some(cells)
}

#[test]
fn vertical_order_one_renders_two_rectangles() {
    let t = TilingConfiguration::new(
        1,
        vec![
            Edge { black: KCoord::new(0, 1), white: KCoord::new(1, 0) },
            Edge { black: KCoord::new(2, 1), white: KCoord::new(1, 2) },
        ],
    )
    .unwrap();
    let rects = domino_rects(&t);
    assert_eq!(rects.len(), 2);
    assert!(rects.iter().all(|r| r.width == 1 && r.height == 2));
    let kinds: BTreeSet<DominoType> = rects.iter().map(|r| r.kind).collect();
    assert_eq!(kinds, [DominoType::N, DominoType::S].into_iter().collect());
    let svg = render_tiling(&t, &RenderSpec::default());
    assert_eq!(svg.matches("<rect").count(), 2);
}

#[test]
fn output_is_byte_identical_for_the_same_seed() {
    let s = WeightScheme::TwoPeriodicEven { a: Param::new(0.5).unwrap(), b: Param::ONE };
    let spec = RenderSpec { palette: Palette::Eight, scale: 4.0 };
    let a = render_tiling(&sample(&s, 16, 7).unwrap(), &spec);
    let b = render_tiling(&sample(&s, 16, 7).unwrap(), &spec);
    assert_eq!(a, b);
}

#[test]
fn order_hundred_renders_quickly() {
    let start = Instant::now();
    let svg = render_tiling(&sample(&WeightScheme::Uniform, 100, 1).unwrap(), &RenderSpec::default());
    assert_eq!(svg.matches("<rect").count(), 100 * 101);
    assert!(start.elapsed().as_secs_f64() < 5.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rectangles_tile_the_diamond(n in 1usize..=8, seed in any::<u64>()) {
        let t = sample(&WeightScheme::Uniform, n, seed).unwrap();
        let cells = covered_cells(&t);
        prop_assert_eq!(cells, Some(diamond_cells(n as i32)));
    }
}
