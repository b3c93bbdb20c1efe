mod common;

use common::{faces, is_planar, positive, reidemeister1, reidemeister2, scramble};
use proptest::prelude::*;
use qtlink::catalog::{self, CatalogKind};
use qtlink::diagram::{parse_pd, validate, LinkDiagram, PdCode, Sign, Violation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalog_diagrams() -> Vec<(&'static str, LinkDiagram)> {
    catalog::names(CatalogKind::Diagram).into_iter().map(|n| (n, catalog::get_diagram(n).unwrap())).collect()
}

#[test]
fn catalog_diagrams_are_planar() {
    for (name, d) in catalog_diagrams() {
        assert!(is_planar(&d), "{name}");
    }
}

#[test]
fn traced_signs_match_label_arithmetic() {
    for (name, d) in catalog_diagrams() {
        for c in 0..d.crossing_count() {
            assert_eq!(d.sign(c) == Sign::Positive, positive(&d, c), "{name} crossing {c}");
        }
    }
}

#[test]
fn catalog_linking_numbers() {
    let lk = |name: &str| catalog::get_diagram(name).unwrap().linking_matrix().unwrap();
    assert_eq!(lk("hopf"), vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(lk("borromean"), vec![vec![0; 3]; 3]);
    assert_eq!(lk("unlink3"), vec![vec![0; 3]; 3]);
    assert_eq!(catalog::get_diagram("figure8").unwrap().writhe(), 0);
    assert_eq!(catalog::get_diagram("trefoil").unwrap().writhe(), 3);
}

#[test]
fn borromean_is_alternating() {
    let d = catalog::get_diagram("borromean").unwrap();
    for i in 0..3 {
        let edges = d.component_edges(i);
        let under: Vec<bool> = edges.iter().map(|&e| d.crossings().iter().any(|r| r[2] == e)).collect();
        for w in 0..under.len() {
            assert_ne!(under[w], under[(w + 1) % under.len()], "component {i}");
        }
    }
}

#[test]
fn reidemeister_one_variants_change_writhe_by_one() {
    let d = catalog::get_diagram("trefoil").unwrap();
    for kind in 0..4u8 {
        for e in 1..=6 {
            let m = reidemeister1(&d, e, kind);
            assert!(is_planar(&m));
            assert_eq!(m.crossing_count(), 4);
            assert_eq!((m.writhe() - d.writhe()).abs(), 1);
        }
    }
}

#[test]
fn reidemeister_two_keeps_writhe_and_linking() {
    let d = catalog::get_diagram("hopf").unwrap();
    for face in faces(&d) {
        for &a in &face {
            for &b in &face {
                if a.0 == b.0 {
                    continue;
                }
                let m = reidemeister2(&d, a, b);
                assert!(is_planar(&m), "{a:?} over {b:?}");
                assert_eq!(m.writhe(), d.writhe());
                assert_eq!(m.linking_number(0, 1).unwrap(), 1);
            }
        }
    }
}

#[test]
fn validation_reports_one_entry_per_kind() {
    let pd = PdCode::parse("X 1 4 2 5 / X 3 6 4 1 / X 5 2 7 3").unwrap();
    assert_eq!(validate(&pd), vec![Violation::EdgeMultiplicity { offenders: vec![(6, 1), (7, 1)] }]);
    assert!(validate(&catalog::get_diagram("borromean").unwrap().pd().clone()).is_empty());
}

#[test]
fn text_round_trip_of_catalog() {
    for (name, d) in catalog_diagrams() {
        assert_eq!(parse_pd(&d.to_pd_text()).unwrap(), d, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scrambled_diagrams_keep_linking_numbers(seed in any::<u64>(), which in 0usize..4, steps in 1usize..5) {
        let base = ["hopf", "borromean", "trefoil", "figure8"][which];
        let d = catalog::get_diagram(base).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = scramble(&d, steps, |n| rng.gen_range(0..n));
        prop_assert!(is_planar(&m));
        prop_assert_eq!(m.component_count(), d.component_count());
        prop_assert_eq!(m.linking_matrix().unwrap(), d.linking_matrix().unwrap());
        for c in 0..m.crossing_count() {
            prop_assert_eq!(m.sign(c) == Sign::Positive, positive(&m, c));
        }
    }

    #[test]
    fn flips_are_involutions(seed in any::<u64>(), which in 0usize..4) {
        let base = ["hopf", "borromean", "trefoil_alt", "figure8"][which];
        let d = catalog::get_diagram(base).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = rng.gen_range(0..d.crossing_count());
        let f = d.flip_crossing(c).unwrap();
        prop_assert_eq!(f.diagram.sign(c), if d.sign(c) == Sign::Positive { Sign::Negative } else { Sign::Positive });
        prop_assert_eq!(f.self_crossing, d.is_self_crossing(c));
        prop_assert!(is_planar(&f.diagram));
        prop_assert_eq!(f.diagram.flip_crossing(c).unwrap().diagram, d);
    }
}
