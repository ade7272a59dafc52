mod common;

use std::collections::BTreeSet;

use common::{contexts, ctx_a2, ctx_a3, ctx_a4, PRIMES};
use tilting::glue::{
    bongartz_glued, check_exact_sequences, check_ladder, check_restriction_inclusion, cprime_invariants, glue_mgs,
    glue_semibrick, glue_stt_simple, monotonicity_report, reduce, sweep_all_pairs, GluingContext,
};
use tilting::rep::{check_approximation, hom_dim, is_isomorphic, tau};
use tilting::tilt::is_stt_pair_rep;

fn tau_tilting_b(ctx: &GluingContext) -> Vec<usize> {
    let nb = ctx.glued().nb();
    (0..ctx.b().len()).filter(|&i| ctx.b().pair(i).excluded.is_empty() && ctx.b().pair(i).module.len() == nb).collect()
}

#[test]
fn sweep_is_injective_and_sound() {
    for p in PRIMES {
        for (ctx, unglued) in contexts(p).iter().zip([1, 4, 17]) {
            let all = sweep_all_pairs(ctx).unwrap();
            assert_eq!(all.len(), ctx.b().len() * ctx.c().len());
            let nodes: BTreeSet<usize> = all.iter().map(|o| o.node).collect();
            assert_eq!(nodes.len(), all.len());
            assert_eq!(ctx.a().len() - nodes.len(), unglued);
            let b_targets: Vec<_> = (0..ctx.b().catalog().len()).map(|i| ctx.b().catalog().module(i).clone()).collect();
            for o in &all {
                // Recheck from the representations, away from the catalog tables.
                let z = o.pair.rep(ctx.a().catalog());
                assert!(is_stt_pair_rep(&z, &o.pair.excluded).unwrap());
                assert_eq!(hom_dim(&z, &tau(&z).unwrap()).unwrap(), 0);
                let targets: Vec<_> = ctx.b().class(o.x).members.iter().map(|&i| b_targets[i].clone()).collect();
                check_approximation(&targets, &o.approximation).unwrap();
                // Members of the glued class restrict into Fac X and Fac Y.
                for &m in &o.torsion.members {
                    let (xs, ys) = ctx.parts(m);
                    assert!(xs.iter().all(|&x| ctx.b().class(o.x).contains(x)));
                    assert!(ys.iter().all(|&y| ctx.c().class(o.y).contains(y)));
                }
            }
        }
    }
}

#[test]
fn ladder_and_recollement_identities() {
    for p in PRIMES {
        for ctx in contexts(p) {
            check_ladder(&ctx).unwrap();
            check_exact_sequences(&ctx).unwrap();
            check_restriction_inclusion(&ctx).unwrap();
        }
    }
}

#[test]
fn simple_gluing_agrees_when_defined() {
    for p in PRIMES {
        let ctx = ctx_a3(p);
        let mut defined = 0;
        for xi in 0..ctx.b().len() {
            for yi in 0..ctx.c().len() {
                if let Some(pair) = glue_stt_simple(&ctx, xi, yi).unwrap() {
                    defined += 1;
                    assert_eq!(pair.module.len() + pair.excluded.len(), 3);
                }
            }
        }
        // Y = 0 always qualifies; Y = C needs Hom(1/2, τX) = 0 and 1 not excluded.
        assert!(defined >= ctx.b().len());
        assert!(defined < ctx.b().len() * ctx.c().len());
    }
}

#[test]
fn monotone_on_small_cases() {
    for p in PRIMES {
        for ctx in contexts(p) {
            let all = sweep_all_pairs(&ctx).unwrap();
            let m = monotonicity_report(&ctx, &all);
            assert!(m.comparable_inputs >= all.len());
            assert_eq!(m.violations, 0);
        }
    }
}

#[test]
fn reduction_bongartz_and_cprime() {
    for p in PRIMES {
        for ctx in contexts(p) {
            let xs = tau_tilting_b(&ctx);
            assert!(!xs.is_empty());
            for xi in xs {
                let r = reduce(&ctx, xi).unwrap();
                assert_eq!(r.interval.len(), ctx.c().len());
                for (k, &c) in r.forward.iter().enumerate() {
                    assert_eq!(r.backward[c], r.interval[k]);
                }
                let b = bongartz_glued(&ctx, xi).unwrap();
                assert_eq!(b.pair.module.len(), ctx.glued().a().vertex_count());
                // The completion is the top of the interval.
                assert!(r.interval.contains(&b.node) && r.interval.iter().all(|&n| ctx.a().le(n, b.node)));
                let report = cprime_invariants(&ctx, xi).unwrap();
                assert_eq!(report.cprime, report.c);
                assert_eq!(
                    report.end_dim,
                    hom_dim(&b.pair.rep(ctx.a().catalog()), &b.pair.rep(ctx.a().catalog())).unwrap()
                );
            }
            // A non-τ-tilting X is refused.
            assert!(reduce(&ctx, ctx.b().bottom()).is_err());
        }
    }
}

#[test]
fn green_sequences_glue() {
    for p in PRIMES {
        for ctx in contexts(p) {
            let (sb, sc) = (ctx.b().maximal_green_sequences(), ctx.c().maximal_green_sequences());
            let mut seen = BTreeSet::new();
            for alpha in &sb {
                for beta in &sc {
                    let g = glue_mgs(&ctx, alpha, beta).unwrap();
                    assert_eq!(g.len(), alpha.len() + beta.len());
                    assert!(ctx.a().maximal_green_sequences().contains(&g));
                    seen.insert(g.labels);
                }
            }
            assert_eq!(seen.len(), sb.len() * sc.len());
        }
    }
}

#[test]
fn semibricks_glue() {
    for p in PRIMES {
        for ctx in contexts(p) {
            for xi in 0..ctx.b().len() {
                let sx = ctx.b().semibrick_of(xi).unwrap();
                for yi in 0..ctx.c().len() {
                    let sy = ctx.c().semibrick_of(yi).unwrap();
                    let glued = glue_semibrick(&ctx, &sx, &sy).unwrap();
                    assert_eq!(glued.len(), sx.len() + sy.len());
                }
            }
        }
    }
}

#[test]
fn a2_gluing_of_tops() {
    for p in PRIMES {
        let ctx = ctx_a2(p);
        let all = sweep_all_pairs(&ctx).unwrap();
        // mod B with mod C gives the top of A, and 0 with 0 the bottom.
        let top = all.iter().find(|o| o.x == ctx.b().top() && o.y == ctx.c().top()).unwrap();
        assert_eq!(top.node, ctx.a().top());
        let bottom = all.iter().find(|o| o.x == ctx.b().bottom() && o.y == ctx.c().bottom()).unwrap();
        assert_eq!(bottom.node, ctx.a().bottom());
        // The one pair never glued is 2 ⊕ 2/1: (0, S_2) already takes 2 alone.
        let unglued: Vec<usize> = (0..ctx.a().len()).filter(|n| all.iter().all(|o| o.node != *n)).collect();
        assert_eq!(unglued.len(), 1);
        let cat = ctx.a().catalog();
        let z = ctx.a().pair(unglued[0]).rep(cat);
        let a = ctx.glued().a();
        let expected = tilting::rep::simple(a, 1).direct_sum(&tilting::rep::projective(a, 1)).unwrap();
        assert!(is_isomorphic(&z, &expected).unwrap().is_some());
        assert!(ctx.a().pair(unglued[0]).excluded.is_empty());
    }
}

#[test]
fn a4_counts() {
    let ctx = ctx_a4(2);
    assert_eq!((ctx.b().len(), ctx.c().len(), ctx.a().len()), (5, 5, 42));
}
