mod common;

use std::sync::Arc;

use common::{path_algebra, seeded, PRIMES};
use proptest::prelude::*;
use tilting::algebra::PathAlgebra;
use tilting::linalg::Mat;
use tilting::rep::{self, decompose, euler_form, ext1_dim, hom_basis, hom_dim, is_isomorphic, tau, tau_inverse, Rep};
use tilting::tilt::{Catalog, DEFAULT_CAP};

fn a3(p: u32) -> Arc<PathAlgebra> {
    path_algebra(p, &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")])
}

fn d4(p: u32) -> Arc<PathAlgebra> {
    path_algebra(p, &["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "3", "2"), ("c", "2", "4")])
}

/// A representation of 1 -> 2 -> 3 with the given dimensions and entries.
fn a3_rep(alg: &Arc<PathAlgebra>, dims: [usize; 3], entries: &[u32]) -> Rep {
    let f = alg.field();
    let (d1, d2, d3) = (dims[0], dims[1], dims[2]);
    let a = Mat::from_fn(f, d2, d1, |i, j| entries[i * d1 + j] % f.p());
    let off = d1 * d2;
    let b = Mat::from_fn(f, d3, d2, |i, j| entries[off + i * d2 + j] % f.p());
    Rep::new(Arc::clone(alg), dims.to_vec(), vec![a, b]).unwrap()
}

fn a3_reps() -> impl Strategy<Value = ([usize; 3], Vec<u32>)> {
    [0usize..=2, 0usize..=2, 0usize..=2]
        .prop_flat_map(|d| (Just(d), proptest::collection::vec(0u32..3, d[0] * d[1] + d[1] * d[2])))
}

#[test]
fn auslander_reiten_formula() {
    // Hereditary: dim Ext^1(N, M) = dim Hom(M, τN).
    for p in PRIMES {
        for alg in [a3(p), d4(p)] {
            let cat = Catalog::new(&alg, DEFAULT_CAP).unwrap();
            for n in cat.modules() {
                let tn = tau(n).unwrap();
                for m in cat.modules() {
                    assert_eq!(ext1_dim(n, m).unwrap(), hom_dim(m, &tn).unwrap());
                    let euler = euler_form(alg.quiver(), n.dims(), m.dims());
                    assert_eq!(hom_dim(n, m).unwrap() as i64 - ext1_dim(n, m).unwrap() as i64, euler);
                }
            }
        }
    }
}

#[test]
fn tau_round_trip() {
    for p in PRIMES {
        let alg = d4(p);
        let cat = Catalog::new(&alg, DEFAULT_CAP).unwrap();
        assert_eq!(cat.len(), 12);
        for (i, m) in cat.modules().iter().enumerate() {
            let t = tau(m).unwrap();
            let projective = (0..4).any(|v| cat.projective(v) == i);
            assert_eq!(t.is_zero(), projective);
            if !projective {
                assert!(is_isomorphic(&tau_inverse(&t).unwrap(), m).unwrap().is_some());
            }
        }
    }
}

#[test]
fn socle_inclusion_witness() {
    // S_2 sits inside 1/2 over 1 -> 2 -> 3, and the inclusion is injective.
    for p in PRIMES {
        let alg = a3(p);
        let s2 = rep::simple(&alg, 1);
        let m = a3_rep(&alg, [1, 1, 0], &[1]);
        let basis = hom_basis(&s2, &m).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].is_injective());
        assert_eq!(hom_dim(&m, &s2).unwrap(), 0);
        assert_eq!(rep::module_name(&m).unwrap(), "1/2");
    }
}

proptest! {
    #![proptest_config(seeded(64))]

    #[test]
    fn decomposition_is_faithful((dims, entries) in a3_reps()) {
        let alg = a3(3);
        let cat = Catalog::new(&alg, DEFAULT_CAP).unwrap();
        let m = a3_rep(&alg, dims, &entries);
        let parts = decompose(&m).unwrap();
        let mut total = [0usize; 3];
        for s in &parts {
            prop_assert!(cat.index_of(s).is_ok());
            for (t, d) in total.iter_mut().zip(s.dims()) {
                *t += d;
            }
        }
        prop_assert_eq!(total.to_vec(), m.dims().to_vec());
        let sum = Rep::direct_sum_all(&alg, &parts).unwrap();
        prop_assert!(is_isomorphic(&sum, &m).unwrap().is_some());
    }

    #[test]
    fn hom_is_additive((d1, e1) in a3_reps(), (d2, e2) in a3_reps()) {
        let alg = a3(2);
        let (m, n) = (a3_rep(&alg, d1, &e1), a3_rep(&alg, d2, &e2));
        let both = m.direct_sum(&n).unwrap();
        for x in [&m, &n] {
            prop_assert_eq!(hom_dim(x, &both).unwrap(), hom_dim(x, &m).unwrap() + hom_dim(x, &n).unwrap());
            prop_assert_eq!(hom_dim(&both, x).unwrap(), hom_dim(&m, x).unwrap() + hom_dim(&n, x).unwrap());
        }
        let euler = euler_form(alg.quiver(), m.dims(), n.dims());
        prop_assert_eq!(hom_dim(&m, &n).unwrap() as i64 - ext1_dim(&m, &n).unwrap() as i64, euler);
    }
}
