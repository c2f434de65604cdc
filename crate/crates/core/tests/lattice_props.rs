mod common;

use common::{laplace, subsets};
use mhproj::lattice::{integer_kernel, smith_normal_form, solve_integer};
use mhproj::{IntMatrix, LatticeIndex, Sublattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrices(max_dim: usize, e: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-e..=e, c), r))
}

/// gcd of all k x k minors.
fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> i128 {
    let (r, c) = (m.len(), m[0].len());
    let mut g = 0i128;
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let minor: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
            g = g.gcd(&laplace(&minor));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_invariants(m in matrices(4, 20)) {
        let mat = IntMatrix::from_rows(&m);
        let snf = smith_normal_form(&mat);
        prop_assert_eq!(snf.u.mul(&mat).mul(&snf.v), snf.s.clone());
        prop_assert!(snf.u.determinant().abs() == BigInt::from(1));
        prop_assert!(snf.v.determinant().abs() == BigInt::from(1));
        let d = snf.diagonal();
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    prop_assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        // d_1 * ... * d_k is the gcd of the k x k minors
        let mut prod = BigInt::from(1);
        for (k, dk) in d.iter().enumerate() {
            prod *= dk;
            prop_assert_eq!(prod.clone(), BigInt::from(determinantal_divisor(&m, k + 1)));
        }
    }

    #[test]
    fn index_is_absolute_determinant(m in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 3)) {
        let det = laplace(&m);
        let cols: Vec<Vec<i64>> = (0..3).map(|j| m.iter().map(|row| row[j]).collect()).collect();
        let l = Sublattice::from_generators(3, &cols).unwrap();
        if det == 0 {
            prop_assert_eq!(l.index(), LatticeIndex::Infinite);
        } else {
            prop_assert_eq!(l.index(), LatticeIndex::Finite(BigInt::from(det.abs())));
        }
        prop_assert_eq!(IntMatrix::from_rows(&m).determinant(), BigInt::from(det));
    }

    #[test]
    fn membership_matches_residues(
        gens in prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 2..=3),
        v in prop::collection::vec(-15i64..=15, 2),
    ) {
        let l = Sublattice::from_generators(2, &gens).unwrap();
        let LatticeIndex::Finite(index) = l.index() else {
            return Ok(());
        };
        let d: i64 = index.try_into().unwrap();
        prop_assume!(d <= 40);
        // d Z^2 lies in L, so membership only depends on residues mod d
        let mut hit = false;
        let k = gens.len();
        let mut coeffs = vec![0i64; k];
        'outer: loop {
            let s: Vec<i64> = (0..2).map(|t| (0..k).map(|i| coeffs[i] * gens[i][t]).sum()).collect();
            if (0..2).all(|t| (s[t] - v[t]).rem_euclid(d) == 0) {
                hit = true;
                break;
            }
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c < d {
                    continue 'outer;
                }
                *c = 0;
            }
            break;
        }
        prop_assert_eq!(l.contains(&v), hit);
        if hit {
            let coords = l.coordinates(&v).unwrap();
            let back = l.basis().mul_vec(&coords);
            prop_assert_eq!(back, v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn intersection_is_meet(
        a in prop::collection::vec(prop::collection::vec(-6i64..=6, 2), 1..=3),
        b in prop::collection::vec(prop::collection::vec(-6i64..=6, 2), 1..=3),
    ) {
        let la = Sublattice::from_generators(2, &a).unwrap();
        let lb = Sublattice::from_generators(2, &b).unwrap();
        let meet = la.intersection(&lb).unwrap();
        prop_assert!(meet.is_sublattice_of(&la));
        prop_assert!(meet.is_sublattice_of(&lb));
        prop_assert_eq!(lb.intersection(&la).unwrap(), meet.clone());
        for x in -12i64..=12 {
            for y in -12i64..=12 {
                let v = [x, y];
                prop_assert_eq!(meet.contains(&v), la.contains(&v) && lb.contains(&v));
            }
        }
    }

    #[test]
    fn kernel_and_solve(m in matrices(4, 6), x in prop::collection::vec(-5i64..=5, 4)) {
        let mat = IntMatrix::from_rows(&m);
        for k in integer_kernel(&mat) {
            prop_assert!(mat.mul_vec(&k).iter().all(|e| e.is_zero()));
        }
        let x: Vec<BigInt> = x[..mat.cols()].iter().map(|&e| BigInt::from(e)).collect();
        let b = mat.mul_vec(&x);
        let sol = solve_integer(&mat, &b).expect("b is in the image");
        prop_assert_eq!(mat.mul_vec(&sol), b);
    }

    #[test]
    fn hermite_form_is_canonical(
        gens in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 1..=4),
        u in prop::collection::vec(-2i64..=2, 3),
    ) {
        // adding an integer combination of the generators leaves the lattice unchanged
        let l = Sublattice::from_generators(3, &gens).unwrap();
        let extra: Vec<i64> = (0..3)
            .map(|t| gens.iter().zip(u.iter().cycle()).map(|(g, c)| g[t] * c).sum())
            .collect();
        let mut more = gens.clone();
        more.push(extra);
        more.reverse();
        prop_assert_eq!(Sublattice::from_generators(3, &more).unwrap(), l);
    }
}
