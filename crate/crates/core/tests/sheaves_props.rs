mod common;

use std::collections::BTreeSet;

use common::{rank_of, rings};
use mhproj::proj::{all_points_prime, build_atlas};
use mhproj::relevance::{is_relevant_support, minimal_relevant_supports};
use mhproj::sheaves::{
    chart_sections, global_sections, is_line_bundle, local_triviality_witness, theorem_glsec_hypothesis,
};
use mhproj::SupportSet;
use proptest::prelude::*;

const BOX: u32 = 6;

fn twists(r: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_supports_match_rank_scan(ring in rings(3, 6, 3)) {
        let n = ring.n_variables();
        let relevant = |m: u32| {
            let cols: Vec<Vec<i64>> = (0..n).filter(|i| m & (1 << i) != 0).map(|i| ring.degree(i).to_vec()).collect();
            rank_of(&cols, ring.rank()) == ring.rank()
        };
        let expected: Vec<SupportSet> = {
            let mut v: Vec<SupportSet> = (1u32..(1 << n))
                .filter(|&m| relevant(m))
                .filter(|&m| (0..n).filter(|i| m & (1 << i) != 0).all(|i| !relevant(m & !(1 << i))))
                .map(SupportSet::from_mask)
                .collect();
            v.sort();
            v
        };
        let got = minimal_relevant_supports(&ring);
        prop_assert_eq!(&got, &expected);
        for (i, a) in got.iter().enumerate() {
            for b in &got[i + 1..] {
                prop_assert!(!a.is_subset_of(b) && !b.is_subset_of(a));
            }
        }
        for m in 1u32..(1 << n) {
            let s = SupportSet::from_mask(m);
            prop_assert_eq!(is_relevant_support(&ring, &s).unwrap().relevant, relevant(m));
        }
    }

    #[test]
    fn prime_point_witness_is_genuine(ring in rings(3, 6, 3)) {
        let rep = all_points_prime(&ring);
        match rep.witness {
            Some(w) => {
                prop_assert!(!rep.holds);
                let cols = w.columns.degrees(&ring);
                let det = common::laplace(&(0..ring.rank()).map(|t| cols.iter().map(|c| c[t]).collect()).collect::<Vec<_>>());
                prop_assert_eq!(num_bigint::BigInt::from(det), w.determinant.clone());
                prop_assert!(det.abs() > 1);
            }
            None => prop_assert!(rep.holds),
        }
    }

    #[test]
    fn sections_under_hypothesis_are_the_graded_piece(ring in rings(3, 5, 2), d in twists(3)) {
        prop_assume!(theorem_glsec_hypothesis(&ring));
        let atlas = build_atlas(&ring);
        let d = &d[..ring.rank()];
        let g = global_sections(&ring, &atlas, d, BOX).unwrap();
        let a = ring.graded_component(d, BOX).unwrap();
        prop_assert_eq!(g.monomials, a.exponent_vectors());
        prop_assert_eq!(g.complete, a.complete);
    }

    #[test]
    fn global_sections_are_the_chart_intersection(ring in rings(2, 4, 2), d in twists(2)) {
        let atlas = build_atlas(&ring);
        prop_assume!(atlas.nonempty);
        let d = &d[..ring.rank()];
        let b = i64::from(BOX);
        let in_box = |a: &Vec<i64>| a.iter().all(|x| x.abs() <= b);
        let g: BTreeSet<Vec<i64>> = global_sections(&ring, &atlas, d, BOX)
            .unwrap()
            .monomials
            .into_iter()
            .filter(in_box)
            .collect();
        let mut meet: Option<BTreeSet<Vec<i64>>> = None;
        for chart in &atlas.charts {
            let c: BTreeSet<Vec<i64>> = chart_sections(&ring, &atlas, &chart.support, d, BOX)
                .unwrap()
                .monomials
                .into_iter()
                .filter(in_box)
                .collect();
            for a in &g {
                prop_assert!(c.contains(a));
            }
            meet = Some(match meet {
                None => c,
                Some(m) => m.intersection(&c).cloned().collect(),
            });
        }
        prop_assert_eq!(meet.unwrap(), g);
    }

    #[test]
    fn line_bundle_twists_form_a_group(ring in rings(3, 5, 3), d in twists(3), e in twists(3)) {
        let atlas = build_atlas(&ring);
        prop_assume!(atlas.nonempty);
        let r = ring.rank();
        let (d, e) = (&d[..r], &e[..r]);
        let sum: Vec<i64> = d.iter().zip(e).map(|(a, b)| a + b).collect();
        let neg: Vec<i64> = d.iter().map(|a| -a).collect();
        let lb = |x: &[i64]| is_line_bundle(&ring, &atlas, x).unwrap();
        prop_assert!(lb(&vec![0; r]));
        if lb(d) && lb(e) {
            prop_assert!(lb(&sum));
        }
        prop_assert_eq!(lb(d), lb(&neg));
    }

    #[test]
    fn witnesses_exist_exactly_on_the_chart_lattice(ring in rings(3, 5, 3), d in twists(3)) {
        let atlas = build_atlas(&ring);
        let d = &d[..ring.rank()];
        for chart in &atlas.charts {
            let w = local_triviality_witness(&ring, &atlas, &chart.support, d).unwrap();
            prop_assert_eq!(w.is_some(), chart.degree_lattice.contains(d));
            if let Some(a) = w {
                prop_assert_eq!(ring.degree_of(&a).unwrap(), d.to_vec());
                for (i, &x) in a.iter().enumerate() {
                    prop_assert!(x == 0 || chart.support.contains(i));
                }
            }
        }
    }

    #[test]
    fn section_pairing_lands_in_degree_zero(ring in rings(2, 4, 2), d in twists(2)) {
        let atlas = build_atlas(&ring);
        prop_assume!(atlas.nonempty);
        let d = &d[..ring.rank()];
        let neg: Vec<i64> = d.iter().map(|x| -x).collect();
        let zero = vec![0; ring.rank()];
        let plus = global_sections(&ring, &atlas, d, BOX).unwrap();
        let minus = global_sections(&ring, &atlas, &neg, BOX).unwrap();
        let unit = global_sections(&ring, &atlas, &zero, 2 * BOX).unwrap();
        prop_assert!(unit.contains(&vec![0; ring.n_variables()]));
        for a in &plus.monomials {
            for b in &minus.monomials {
                let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                prop_assert!(unit.contains(&s), "{:?} + {:?} missing from degree zero", a, b);
            }
        }
    }
}
