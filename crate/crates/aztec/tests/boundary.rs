use aztec::boundary::{
    boundary_ratios, fortress_boundary_table, fortress_recurrence_matrices,
    general_recurrence_step, one_periodic_boundary_ratio, qcol_boundary_ratio, qdiag_bgf_coeff,
    recurrence_partition_function, uniform_boundary_ratio, FortressRoute, ProductBound,
};
use aztec::oracle::KMatrix;
use aztec::{DiamondGraph, FaceWeights, Field, GaussRational, KCoord, Param, WeightScheme};
use num_rational::BigRational;

fn p(v: f64) -> Param {
    Param::new(v).unwrap()
}

fn oracle_ratio(s: &WeightScheme, n: usize, w: KCoord, b: KCoord) -> GaussRational {
    let g = DiamondGraph::build(n).unwrap();
    let k = KMatrix::<GaussRational>::assemble(&g, s).unwrap();
    k.removed_pf(w, b).unwrap() / k.partition_function().unwrap()
}

#[test]
fn uniform_ratio_examples() {
    assert_eq!(uniform_boundary_ratio(1, 0, 0), BigRational::new(1.into(), 2.into()));
    assert_eq!(uniform_boundary_ratio(2, 0, 0), BigRational::new(3.into(), 4.into()));
    assert_eq!(uniform_boundary_ratio(1, 1, 0), BigRational::from_integer(0.into()));
}

#[test]
fn one_periodic_ratio_matches_oracle() {
    for a in [0.5, 1.0, 2.0] {
        let s = WeightScheme::OnePeriodic { a: p(a) };
        for n in 1..=4 {
            for i in 0..n {
                for j in 0..n {
                    let closed: GaussRational = one_periodic_boundary_ratio(n, i as i64, j as i64, p(a));
                    let w = KCoord::new(2 * i as i32 + 1, 0);
                    let b = KCoord::new(0, 2 * j as i32 + 1);
                    assert_eq!(closed, oracle_ratio(&s, n, w, b), "n={n} i={i} j={j} a={a}");
                }
            }
        }
    }
}

fn random_faces(n: usize, seed: u64) -> FaceWeights<GaussRational> {
    let mut state = seed;
    FaceWeights::from_fn(n, |_, _| {
        std::array::from_fn(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let num = 1 + (state >> 33) % 9;
            GaussRational::from_ratio(num as i64, 4)
        })
    })
    .unwrap()
}

#[test]
fn general_engine_partition_and_ratios_match_oracle() {
    for n in 1..=4 {
        let fw = random_faces(n, 7 + n as u64);
        let k = KMatrix::from_faces(&fw).unwrap();
        let z = k.partition_function().unwrap();
        assert_eq!(recurrence_partition_function(&fw).unwrap(), z);
        let step = general_recurrence_step(&fw).unwrap();
        if let Some(child) = &step.child {
            let zc = KMatrix::from_faces(child).unwrap().partition_function().unwrap();
            assert_eq!(step.pf_factor.clone() * zc, z);
        }
        let ratios = boundary_ratios(&fw).unwrap();
        for i in 0..n {
            for j in 0..n {
                let w = KCoord::new(2 * i as i32 + 1, 0);
                let b = KCoord::new(0, 2 * j as i32 + 1);
                let want = k.removed_pf(w, b).unwrap() / z.clone();
                assert_eq!(ratios[i * n + j], want, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn qdiag_and_qcol_match_oracle() {
    for (a, q) in [(0.5, 0.8), (1.0, 0.9), (2.0, 0.5), (0.7, 1.0)] {
        for n in 1..=4 {
            let sd = WeightScheme::QDiag { a: p(a), q: p(q) };
            let sc = WeightScheme::QCol { a: p(a), q: p(q) };
            for i in 0..n as i32 {
                for j in 0..n as i32 {
                    let w = KCoord::new(2 * n as i32 - 2 * i - 1, 2 * n as i32);
                    let b = KCoord::new(2 * n as i32, 2 * n as i32 - 1 - 2 * j);
                    let d: GaussRational =
                        qdiag_bgf_coeff(n, i as i64, j as i64, p(a), p(q), ProductBound::Exclusive);
                    assert_eq!(d, oracle_ratio(&sd, n, w, b), "diag n={n} i={i} j={j}");
                    let c: GaussRational = qcol_boundary_ratio(n, i as i64, j as i64, p(a), p(q));
                    assert_eq!(c, oracle_ratio(&sc, n, w, b), "col n={n} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn fortress_routes_match_oracle() {
    let n = 4;
    for (a, b) in [(0.5, 1.0), (1.0, 1.0), (2.0, 1.0), (0.7, 1.3)] {
        let s = WeightScheme::TwoPeriodicEven { a: p(a), b: p(b) };
        let g = DiamondGraph::build(n).unwrap();
        let inv = KMatrix::<GaussRational>::assemble(&g, &s).unwrap().invert().unwrap();
        for route in [FortressRoute::Recurrence, FortressRoute::Eigen] {
            let t: Vec<GaussRational> = fortress_boundary_table(n, p(a), p(b), route).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let w = KCoord::new(2 * i as i32 + 1, 0);
                    let bl = KCoord::new(0, 2 * j as i32 + 1);
                    assert_eq!(t[i * n + j], inv.entry(w, bl).unwrap(), "{route:?} a={a} b={b} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn fortress_eigen_system() {
    let e = fortress_recurrence_matrices(p(0.5), p(1.0), p(0.3), p(0.7)).unwrap();
    assert!(e.residual() < 1e-13, "{}", e.residual());
}
