mod common;

use proptest::prelude::*;
use std::collections::HashSet;
use tilting::linalg::{Mat, PrimeField};

/// Rank by counting the column space: `p^rank` distinct combinations.
fn brute_rank(m: &Mat) -> usize {
    let p = m.field().p() as usize;
    let cols = m.columns();
    let mut seen = HashSet::new();
    for code in 0..p.pow(cols.len() as u32) {
        let mut v = vec![0u32; m.rows()];
        let mut c = code;
        for col in &cols {
            let coeff = (c % p) as u32;
            c /= p;
            for (x, y) in v.iter_mut().zip(col) {
                *x = m.field().add(*x, m.field().mul(coeff, *y));
            }
        }
        seen.insert(v);
    }
    let mut r = 0;
    while p.pow(r) < seen.len() {
        r += 1;
    }
    r as usize
}

fn matrix(p: u32) -> impl Strategy<Value = Mat> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p, r * c)
            .prop_map(move |v| Mat::from_fn(PrimeField::new(p).unwrap(), r, c, |i, j| v[i * c + j]))
    })
}

fn check_matrix(m: &Mat) {
    assert_eq!(m.rank(), brute_rank(m));
    assert_eq!(m.rank(), m.transpose().rank());
    let k = m.kernel_mat();
    assert!(m.mul(&k).is_zero());
    assert_eq!(k.cols() + m.rank(), m.cols());
    let ones = vec![1; m.cols()];
    let b = m.mul_vec(&ones);
    let x = m.solve(&b).unwrap().expect("consistent by construction");
    assert_eq!(m.mul_vec(&x), b);
}

proptest! {
    #![proptest_config(common::seeded(128))]

    #[test]
    fn rank_kernel_solve_f2(m in matrix(2)) {
        check_matrix(&m);
    }

    #[test]
    fn rank_kernel_solve_f3(m in matrix(3)) {
        check_matrix(&m);
    }
}

#[test]
fn inverse_round_trip() {
    let f = PrimeField::new(3).unwrap();
    let m = Mat::from_rows(f, &[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]);
    match m.inverse() {
        Some(inv) => assert_eq!(m.mul(&inv), Mat::identity(f, 3)),
        None => assert!(m.rank() < 3),
    }
}
