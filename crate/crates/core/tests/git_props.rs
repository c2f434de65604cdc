mod common;

use common::rings;
use mhproj::git::{git_fan_from_table, orbit_cones, relevant_in_relint, DEFAULT_RAY_MULTIPLE_BOUND};
use mhproj::relevance::minimal_relevant_supports;
use mhproj::{RationalCone, SupportSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fan_invariants(ring in rings(3, 5, 2)) {
        let table = orbit_cones(&ring);
        prop_assert_eq!(table.get(&SupportSet::full(ring.n_variables())).unwrap(), &ring.weight_cone());
        let fan = git_fan_from_table(&ring, &table).unwrap();
        prop_assert_eq!(&fan.support, &ring.weight_cone());
        let orbit = table.distinct();

        for chamber in &fan.chambers {
            let m = chamber.relative_interior_point().unwrap_or(vec![0; ring.rank()]);
            // every chamber is lambda of its own interior points
            prop_assert_eq!(&table.git_cone(&m).unwrap(), chamber);
            prop_assert!(chamber.contains(&m));
            // every orbit cone is a union of chambers: a chamber meeting it
            // in a relative interior point lies inside it
            for o in &orbit {
                if o.contains(&m) {
                    prop_assert!(chamber.is_subcone_of(o));
                }
            }
        }
        // sample lattice points: m in lambda(m), lambda(m) is a chamber
        let r = ring.rank();
        let range: Vec<i64> = (-3..=3).collect();
        let mut points: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..r {
            points = points.iter().flat_map(|p| range.iter().map(move |&x| {
                let mut q = p.clone();
                q.push(x);
                q
            })).collect();
        }
        for m in points.iter().filter(|m| fan.support.contains(m)) {
            let l = table.git_cone(m).unwrap();
            prop_assert!(l.contains(m));
            prop_assert!(fan.chambers.contains(&l));
        }
    }

    #[test]
    fn semistability_is_constant_on_chambers(ring in rings(2, 5, 2)) {
        let table = orbit_cones(&ring);
        let fan = git_fan_from_table(&ring, &table).unwrap();
        for chamber in &fan.chambers {
            let Ok(p) = chamber.relative_interior_point() else { continue };
            let base = table.semistable_supports(&p).unwrap();
            let gens = chamber.generators();
            for g in &gens {
                let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| 2 * a + b).collect();
                if chamber.relint_contains(&q) {
                    prop_assert_eq!(&table.semistable_supports(&q).unwrap(), &base);
                }
            }
            // a point is semistable iff its support contains a listed one
            for s in &base {
                prop_assert!(table.get(s).unwrap().contains(&p));
            }
        }
    }

    #[test]
    fn chamber_witnesses_are_relevant(ring in rings(2, 5, 2)) {
        let fan = git_fan_from_table(&ring, &orbit_cones(&ring)).unwrap();
        let minimal = minimal_relevant_supports(&ring);
        for chamber in fan.chambers.iter().filter(|c: &&RationalCone| c.is_full_dimensional()) {
            let (support, u) = relevant_in_relint(&ring, chamber, DEFAULT_RAY_MULTIPLE_BOUND).unwrap();
            prop_assert!(chamber.relint_contains(&u));
            prop_assert!(minimal.iter().any(|s| s.is_subset_of(&support)));
        }
    }
}
