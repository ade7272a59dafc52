//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{ctx_a2, ctx_a3, ctx_a4, field, lattice, path_algebra, PRIMES};
use tilting::algebra::SearchParams;
use tilting::glue::{
    bongartz_glued, cprime_invariants, glue_mgs, glue_semibrick, glue_torsion_class, reduce, sweep_all_pairs,
    GluingContext,
};
use tilting::golden::{fixture, verify_fixture, Report};
use tilting::linalg::Mat;
use tilting::rep::{
    check_approximation, ext1_dim, hom_basis, hom_dim, is_isomorphic, minimal_left_approximation, module_name, simple,
    tau, Rep,
};
use tilting::tilt::{Catalog, Lattice, DEFAULT_CAP};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn golden(p: u32, name: &str) -> Report {
    let mut report = Report::default();
    verify_fixture(fixture(name).expect("fixture"), field(p), SearchParams::default(), DEFAULT_CAP, &mut report)
        .expect("fixture evaluates");
    report
}

/// Golden checks whose item starts with one of `prefixes`.
fn golden_rows(p: u32, name: &str, prefixes: &[&str], min: usize) -> Outcome {
    let report = golden(p, name);
    let hits: Vec<_> = report.checks.iter().filter(|c| prefixes.iter().any(|s| c.item.starts_with(s))).collect();
    ensure(hits.len() >= min, || format!("{name}: only {} rows for {prefixes:?}", hits.len()))?;
    match hits.iter().find(|c| !c.ok) {
        Some(c) => Err(format!("p={p} {name} {}: expected {}, found {}", c.item, c.expected, c.found)),
        None => Ok(()),
    }
}

fn names(cat: &Catalog, idx: &[usize]) -> BTreeSet<String> {
    idx.iter().map(|&i| cat.name(i).to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// `N ∈ Fac M` iff the images of all maps `M -> N` span `N`.
fn in_fac(m: &Rep, n: &Rep) -> bool {
    let basis = hom_basis(m, n).unwrap();
    (0..n.dims().len()).all(|v| {
        let mut span = Mat::zeros(n.field(), n.dim_at(v), 0);
        for g in &basis {
            span = span.hstack(g.block(v));
        }
        span.rank() == n.dim_at(v)
    })
}

fn examples(p: u32) -> [GluingContext; 2] {
    [ctx_a2(p), ctx_a3(p)]
}

fn node_named(l: &Lattice, wanted: &[&str]) -> usize {
    (0..l.len()).find(|&n| names(l.catalog(), &l.pair(n).module) == set(wanted)).expect("node exists")
}

fn enumeration_counts() -> Outcome {
    for p in PRIMES {
        for (ctx, total, glued) in [(ctx_a2(p), 5, 4), (ctx_a3(p), 14, 10)] {
            let out = sweep_all_pairs(&ctx).map_err(|e| e.to_string())?;
            let hit: BTreeSet<usize> = out.iter().map(|o| o.node).collect();
            ensure(ctx.a().len() == total, || format!("p={p}: {} pairs, expected {total}", ctx.a().len()))?;
            ensure(hit.len() == glued, || format!("p={p}: {} glued, expected {glued}", hit.len()))?;
        }
        golden_rows(p, "a2", &["glued pair count", "unglued"], 2)?;
        golden_rows(p, "a3", &["glued pair count", "unglued"], 2)?;
    }
    Ok(())
}

fn gluing_tables() -> Outcome {
    for p in PRIMES {
        golden_rows(p, "a2", &["torsion row", "approximations"], 5)?;
        golden_rows(p, "a3", &["torsion row", "approximations"], 11)?;
        golden_rows(p, "a2", &["stt row"], 4)?;
        golden_rows(p, "a3", &["stt row"], 10)?;
        let mut approx = BTreeSet::new();
        for ctx in examples(p) {
            for o in sweep_all_pairs(&ctx).map_err(|e| e.to_string())? {
                // Support sets: X's and Y's excluded vertices, disjoint from the support.
                let (xp, yp) = (ctx.b().pair(o.x), ctx.c().pair(o.y));
                let nb = ctx.glued().nb();
                let mut expected: Vec<usize> =
                    xp.excluded.iter().copied().chain(yp.excluded.iter().map(|c| c + nb)).collect();
                expected.sort_unstable();
                ensure(o.pair.excluded == expected, || "excluded vertices".into())?;
                let z = o.pair.rep(ctx.a().catalog());
                ensure(o.pair.excluded.iter().all(|&v| z.dim_at(v) == 0), || "excluded vertex in the support".into())?;
                let y = ctx.c().pair(o.y).rep(ctx.c().catalog());
                if y.is_zero() {
                    continue;
                }
                let (src, tgt) = (ctx.j1(&y).unwrap(), ctx.attach(&y, &o.approximation.map).unwrap());
                if is_isomorphic(&src, &tgt).unwrap().is_none() {
                    approx.insert((module_name(&src).unwrap(), module_name(&tgt).unwrap()));
                }
            }
        }
        let want: BTreeSet<(String, String)> = [("2/1", "2"), ("3/1/2", "3/1"), ("3/1/2", "3")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        ensure(approx == want, || format!("p={p}: approximations {approx:?}"))?;
    }
    Ok(())
}

fn fac_equals_glued_class() -> Outcome {
    for p in PRIMES {
        for ctx in examples(p) {
            let cat = ctx.a().catalog();
            for o in sweep_all_pairs(&ctx).map_err(|e| e.to_string())? {
                let z = o.pair.rep(cat);
                let fac: Vec<usize> = (0..cat.len()).filter(|&i| in_fac(&z, cat.module(i))).collect();
                let glued =
                    glue_torsion_class(&ctx, ctx.b().class(o.x), ctx.c().class(o.y)).map_err(|e| e.to_string())?;
                ensure(fac == glued.members, || format!("p={p}: Fac({}) differs", o.pair.name(cat)))?;
            }
        }
    }
    Ok(())
}

fn semibricks() -> Outcome {
    for p in PRIMES {
        golden_rows(p, "a2", &["stt row"], 12)?;
        golden_rows(p, "a3", &["stt row"], 30)?;
        for ctx in examples(p) {
            for o in sweep_all_pairs(&ctx).map_err(|e| e.to_string())? {
                let sx = ctx.b().semibrick_of(o.x).unwrap();
                let sy = ctx.c().semibrick_of(o.y).unwrap();
                let glued = glue_semibrick(&ctx, &sx, &sy).map_err(|e| e.to_string())?;
                ensure(glued == ctx.a().semibrick_of(o.node).unwrap(), || {
                    format!("p={p}: semibrick of node {}", o.node)
                })?;
            }
        }
    }
    Ok(())
}

fn reduction() -> Outcome {
    for p in PRIMES {
        let ctx = ctx_a3(p);
        let xi = node_named(ctx.b(), &["1/2", "1"]);
        let r = reduce(&ctx, xi).map_err(|e| e.to_string())?;
        let (la, lc) = (ctx.a(), ctx.c());
        let got: BTreeSet<BTreeSet<String>> =
            r.interval.iter().map(|&n| names(la.catalog(), &la.pair(n).module)).collect();
        let want: BTreeSet<BTreeSet<String>> = [set(&["1/2", "1", "3/1/2"]), set(&["1/2", "1"])].into_iter().collect();
        ensure(got == want, || format!("p={p}: interval {got:?}"))?;
        ensure(r.forward.len() == lc.len() && r.backward.len() == lc.len(), || "not a bijection".into())?;
        for (k, &c) in r.forward.iter().enumerate() {
            ensure(r.backward[c] == r.interval[k], || "maps are not inverse".into())?;
            for (l, &d) in r.forward.iter().enumerate() {
                ensure(la.le(r.interval[k], r.interval[l]) == lc.le(c, d), || "order not preserved".into())?;
            }
        }
        // The completion sits over C itself, (X, 0) over 0.
        for (k, &n) in r.interval.iter().enumerate() {
            let full = la.pair(n).module.len() == 3;
            ensure(r.forward[k] == if full { lc.top() } else { lc.bottom() }, || "interval endpoints".into())?;
        }
        let b = bongartz_glued(&ctx, xi).map_err(|e| e.to_string())?;
        ensure(names(la.catalog(), &b.pair.module) == set(&["1/2", "1", "3/1/2"]), || "Bongartz completion".into())?;
        golden_rows(p, "a3", &["interval above", "completion of"], 3)?;
    }
    Ok(())
}

fn cprime() -> Outcome {
    for p in PRIMES {
        let ctx = ctx_a3(p);
        let r = cprime_invariants(&ctx, node_named(ctx.b(), &["1/2", "1"])).map_err(|e| e.to_string())?;
        let got = (r.cprime.dim, r.cprime.num_simples, r.cprime.radical_dim);
        ensure(got == (1, 1, 0) && r.cprime == r.c, || format!("p={p}: C' = {got:?}"))?;
        golden_rows(p, "a3", &["C' invariants"], 1)?;
    }
    Ok(())
}

fn label_names(l: &Lattice, labels: &[usize]) -> Vec<String> {
    labels.iter().map(|&i| l.catalog().name(i).to_string()).collect()
}

fn green_sequences() -> Outcome {
    for p in PRIMES {
        let a2 = ctx_a2(p);
        let seqs: BTreeSet<Vec<String>> =
            a2.a().maximal_green_sequences().iter().map(|s| label_names(a2.a(), &s.labels)).collect();
        let want: BTreeSet<Vec<String>> = [vec!["1", "2"], vec!["2", "2/1", "1"]]
            .into_iter()
            .map(|v| v.into_iter().map(String::from).collect())
            .collect();
        ensure(seqs == want, || format!("p={p}: A2 sequences {seqs:?}"))?;
        let a3 = ctx_a3(p);
        let mut glued = BTreeSet::new();
        for ctx in [a2, a3, ctx_a4(p)] {
            let is_a3 = ctx.glued().nb() == 2 && ctx.glued().nc() == 1;
            for alpha in ctx.b().maximal_green_sequences() {
                for beta in ctx.c().maximal_green_sequences() {
                    let g = glue_mgs(&ctx, &alpha, &beta).map_err(|e| e.to_string())?;
                    ensure(g.len() == alpha.len() + beta.len(), || "glued length".into())?;
                    if is_a3 {
                        glued.insert(label_names(ctx.a(), &g.labels));
                    }
                }
            }
        }
        let want: BTreeSet<Vec<String>> = [vec!["1", "1/2", "2", "3"], vec!["2", "1", "3"]]
            .into_iter()
            .map(|v| v.into_iter().map(String::from).collect())
            .collect();
        ensure(glued == want, || format!("p={p}: glued sequences {glued:?}"))?;
        golden_rows(p, "a2", &["mgs row", "maximal green", "glued sequence"], 5)?;
        golden_rows(p, "a3", &["mgs row", "glued sequence"], 9)?;
    }
    Ok(())
}

fn property_suites() -> Outcome {
    for p in PRIMES {
        for ctx in examples(p) {
            // AR duality on every pair of indecomposables.
            let cat = ctx.a().catalog();
            for m in cat.modules() {
                let tm = tau(m).unwrap();
                for n in cat.modules() {
                    ensure(ext1_dim(m, n).unwrap() == hom_dim(n, &tm).unwrap(), || format!("p={p}: AR duality"))?;
                }
            }
            // P(Fac M) = M, with Ext-projectivity read off the representations.
            for l in [ctx.b(), ctx.c(), ctx.a()] {
                let c = l.catalog();
                for (n, pair) in l.pairs().iter().enumerate() {
                    let members = &l.class(n).members;
                    let ext_proj: Vec<usize> = members
                        .iter()
                        .copied()
                        .filter(|&i| members.iter().all(|&j| ext1_dim(c.module(i), c.module(j)).unwrap() == 0))
                        .collect();
                    ensure(ext_proj == pair.module, || format!("p={p}: P(Fac M) for {}", pair.name(c)))?;
                }
            }
            for o in sweep_all_pairs(&ctx).map_err(|e| e.to_string())? {
                let targets: Vec<Rep> =
                    ctx.b().class(o.x).members.iter().map(|&i| ctx.b().catalog().module(i).clone()).collect();
                check_approximation(&targets, &o.approximation).map_err(|e| e.to_string())?;
            }
        }
        // Fac(P_1) over 1 -> 2 -> 3 is {1/2/3, 1/2, 1}; S_2 maps only to 1/2.
        let alg = path_algebra(p, &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
        let l = lattice(&alg);
        let cat = l.catalog();
        let p1 = cat.module(cat.projective(0)).clone();
        let targets: Vec<Rep> = cat.modules().iter().filter(|n| in_fac(&p1, n)).cloned().collect();
        ensure(targets.len() == 3, || "Fac(P_1) has three indecomposables".into())?;
        let approx = minimal_left_approximation(&simple(&alg, 1), &targets).map_err(|e| e.to_string())?;
        ensure(
            module_name(&approx.target).unwrap() == "1/2" && approx.map.is_injective() && !approx.map.is_zero(),
            || format!("p={p}: witness approximation ends at {}", module_name(&approx.target).unwrap()),
        )?;
        for (n, catalan) in [(2, 5), (3, 14), (4, 42)] {
            let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let names: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
            let v: Vec<&str> = vs.iter().map(String::as_str).collect();
            let arrows: Vec<(&str, &str, &str)> = (0..n - 1).map(|i| (names[i].as_str(), v[i], v[i + 1])).collect();
            let got = lattice(&path_algebra(p, &v, &arrows)).len();
            ensure(got == catalan, || format!("p={p}: linear A{n} has {got} pairs"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("enumeration counts", enumeration_counts),
        ("gluing tables", gluing_tables),
        ("Fac equals the glued torsion class", fac_equals_glued_class),
        ("semibricks", semibricks),
        ("reduction and Bongartz completion", reduction),
        ("C' invariants", cprime),
        ("maximal green sequences", green_sequences),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(()) => println!("PASS {} {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
