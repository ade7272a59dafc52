mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{lattice, path_algebra, PRIMES};
use tilting::algebra::PathAlgebra;
use tilting::linalg::Mat;
use tilting::rep::{hom_basis, hom_dim, tau, Rep};
use tilting::tilt::{Catalog, Lattice};

type Shape = (Vec<&'static str>, Vec<(&'static str, &'static str, &'static str)>);

/// Type A quivers in several orientations, with their Catalan numbers.
fn type_a() -> Vec<(Shape, usize)> {
    vec![
        ((vec!["1", "2"], vec![("a", "2", "1")]), 5),
        ((vec!["1", "2", "3"], vec![("a", "1", "2"), ("b", "2", "3")]), 14),
        ((vec!["1", "2", "3"], vec![("a", "1", "2"), ("b", "3", "2")]), 14),
        ((vec!["1", "2", "3"], vec![("a", "2", "1"), ("b", "2", "3")]), 14),
        ((vec!["1", "2", "3", "4"], vec![("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")]), 42),
        ((vec!["1", "2", "3", "4"], vec![("a", "2", "1"), ("b", "2", "3"), ("c", "4", "3")]), 42),
    ]
}

fn alg(p: u32, s: &Shape) -> Arc<PathAlgebra> {
    path_algebra(p, &s.0, &s.1)
}

/// Support τ-tilting pairs by brute force: τ-rigid sets of `n - |P|`
/// indecomposables vanishing on the excluded vertices.
fn brute_stt_count(cat: &Catalog, n: usize) -> usize {
    let mods = cat.modules();
    let taus: Vec<Rep> = mods.iter().map(|m| tau(m).unwrap()).collect();
    let rigid = |i: usize, j: usize| hom_dim(&mods[i], &taus[j]).unwrap() == 0;
    let mut count = 0;
    for excl in 0u32..(1 << n) {
        let need = n - excl.count_ones() as usize;
        let allowed: Vec<usize> =
            (0..mods.len()).filter(|&i| (0..n).all(|v| excl & (1 << v) == 0 || mods[i].dim_at(v) == 0)).collect();
        for set in 0u64..(1 << allowed.len()) {
            if set.count_ones() as usize != need {
                continue;
            }
            let idx: Vec<usize> = (0..allowed.len()).filter(|k| set & (1 << k) != 0).map(|k| allowed[k]).collect();
            if idx.iter().all(|&i| idx.iter().all(|&j| rigid(i, j))) {
                count += 1;
            }
        }
    }
    count
}

/// `N ∈ Fac M` iff the images of all maps `M -> N` span `N`.
fn trace_is_everything(m: &Rep, n: &Rep) -> bool {
    let basis = hom_basis(m, n).unwrap();
    (0..n.dims().len()).all(|v| {
        let mut span = Mat::zeros(n.field(), n.dim_at(v), 0);
        for g in &basis {
            span = span.hstack(g.block(v));
        }
        span.rank() == n.dim_at(v)
    })
}

#[test]
fn catalan_counts_match_brute_force() {
    for p in PRIMES {
        for (shape, catalan) in type_a() {
            let a = alg(p, &shape);
            let l = lattice(&a);
            assert_eq!(l.len(), catalan);
            assert_eq!(brute_stt_count(l.catalog(), shape.0.len()), catalan);
            for pair in l.pairs() {
                assert_eq!(pair.module.len() + pair.excluded.len(), shape.0.len());
            }
        }
    }
}

#[test]
fn torsion_classes_are_factor_closures() {
    for p in PRIMES {
        for (shape, _) in type_a().into_iter().take(4) {
            let l = lattice(&alg(p, &shape));
            let cat = l.catalog();
            for (i, pair) in l.pairs().iter().enumerate() {
                let m = pair.rep(cat);
                let members: Vec<usize> = (0..cat.len()).filter(|&k| trace_is_everything(&m, cat.module(k))).collect();
                assert_eq!(l.class(i).members, members);
            }
        }
    }
}

/// Covering relations of the member sets under inclusion.
fn brute_covers(l: &Lattice) -> BTreeSet<(usize, usize)> {
    let sets: Vec<BTreeSet<usize>> = l.classes().iter().map(|c| c.members.iter().copied().collect()).collect();
    let mut out = BTreeSet::new();
    for (i, big) in sets.iter().enumerate() {
        for (j, small) in sets.iter().enumerate() {
            let between = |k: usize| i != k && j != k && small.is_subset(&sets[k]) && sets[k].is_subset(big);
            if i != j && small.is_subset(big) && !(0..sets.len()).any(between) {
                out.insert((i, j));
            }
        }
    }
    out
}

fn count_chains(covers: &BTreeSet<(usize, usize)>, from: usize, to: usize) -> usize {
    if from == to {
        return 1;
    }
    covers.iter().filter(|e| e.0 == from).map(|e| count_chains(covers, e.1, to)).sum()
}

#[test]
fn hasse_quiver_is_regular_and_matches_inclusion() {
    for p in PRIMES {
        for (shape, _) in type_a() {
            let l = lattice(&alg(p, &shape));
            let n = shape.0.len();
            for i in 0..l.len() {
                assert_eq!(l.neighbours(i).len(), n);
            }
            let edges: BTreeSet<(usize, usize)> = l.edges().iter().map(|e| (e.from, e.to)).collect();
            assert_eq!(edges, brute_covers(&l));
            assert_eq!(l.maximal_green_sequences().len(), count_chains(&edges, l.top(), l.bottom()));
        }
    }
}

#[test]
fn green_sequences_of_small_quivers() {
    for p in PRIMES {
        let shapes = type_a();
        let l2 = lattice(&alg(p, &shapes[0].0));
        let seqs = l2.maximal_green_sequences();
        let lens: Vec<usize> = seqs.iter().map(|s| s.len()).collect();
        assert_eq!(seqs.len(), 2);
        assert!(lens.contains(&2) && lens.contains(&3));
        for s in &seqs {
            assert_eq!(s.chain.first(), Some(&l2.bottom()));
            assert_eq!(s.chain.last(), Some(&l2.top()));
            assert!(l2.is_complete_fho(&s.labels).unwrap());
        }
        let l3 = lattice(&alg(p, &shapes[1].0));
        assert_eq!(l3.maximal_green_sequences().len(), 9);
    }
}

#[test]
fn brick_labels_are_bricks() {
    for p in PRIMES {
        let l = lattice(&alg(p, &type_a()[4].0));
        for e in l.edges() {
            assert_eq!(hom_dim(l.catalog().module(e.label), l.catalog().module(e.label)).unwrap(), 1);
            assert!(l.class(e.from).contains(e.label) && !l.class(e.to).contains(e.label));
        }
    }
}
