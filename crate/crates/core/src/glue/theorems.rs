use std::collections::{BTreeSet, HashSet};

use super::GluingContext;
use crate::algebra::{AlgebraInvariants, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rep::{self, end_algebra, hom_dim, is_brick, minimal_left_approximation, Approximation, Morph, Rep};
use crate::tilt::{ext_projectives, fac_class, filt_fac_closure, is_stt_pair, GreenSequence, SttPair, TorsionClass};

/// Result of gluing the `B`-pair `x` with the `C`-pair `y`.
#[derive(Clone, Debug)]
pub struct GlueOutcome {
    pub x: usize,
    pub y: usize,
    pub pair: SttPair,
    /// Node of `pair` in the `A`-lattice.
    pub node: usize,
    /// Minimal left `Fac X`-approximation `Y ⊗_C M -> X_Y`.
    pub approximation: Approximation,
    pub torsion: TorsionClass,
}

impl GluingContext {
    /// `A`-catalog index of `(S, 0)` for the `B`-indecomposable `i`.
    pub fn i0_index(&self, i: usize) -> Result<usize> {
        self.la.catalog().index_of(&self.i0(self.lb.catalog().module(i))?)
    }

    /// `A`-catalog index of `(0, S)` for the `C`-indecomposable `i`.
    pub fn j_minus1_index(&self, i: usize) -> Result<usize> {
        self.la.catalog().index_of(&self.j_minus1(self.lc.catalog().module(i))?)
    }

    fn basic_indices(&self, z: &Rep) -> Result<Vec<usize>> {
        let mut idx = self.la.catalog().indices_of(z)?;
        idx.dedup();
        Ok(idx)
    }

    fn glued_excluded(&self, xp: &SttPair, yp: &SttPair) -> Vec<usize> {
        let nb = self.glued.nb();
        let mut e: Vec<usize> = xp.excluded.iter().copied().chain(yp.excluded.iter().map(|&c| c + nb)).collect();
        e.sort_unstable();
        e
    }
}

/// `A`-indecomposables `(X, Y)_f` with `X ∈ T_X` and `Y ∈ T_Y`.
pub fn glue_torsion_class(ctx: &GluingContext, tx: &TorsionClass, ty: &TorsionClass) -> Result<TorsionClass> {
    let cat = ctx.la.catalog();
    let members: Vec<usize> = (0..cat.len())
        .filter(|&i| {
            let (xs, ys) = ctx.parts(i);
            xs.iter().all(|&x| tx.contains(x)) && ys.iter().all(|&y| ty.contains(y))
        })
        .collect();
    if ctx.la.index_of_members(&members).is_none() {
        return Err(Error::invariant("glued class is not a torsion class of A"));
    }
    let generator = ext_projectives(cat, &members);
    Ok(TorsionClass { members, generator })
}

/// `(X, 0) ⊕ (X_Y, Y)_f` where `f: Y ⊗_C M -> X_Y` is the minimal left
/// `Fac X`-approximation; checked to be support τ-tilting with
/// `Fac = glue_torsion_class(Fac X, Fac Y)`.
pub fn glue_stt(ctx: &GluingContext, xi: usize, yi: usize) -> Result<GlueOutcome> {
    let (lb, lc, la) = (&ctx.lb, &ctx.lc, &ctx.la);
    let (xp, yp) = (lb.pair(xi), lc.pair(yi));
    let x = xp.rep(lb.catalog());
    let y = yp.rep(lc.catalog());
    let w = ctx.tensor_with_m(&y)?;
    let targets: Vec<Rep> = lb.class(xi).members.iter().map(|&i| lb.catalog().module(i).clone()).collect();
    let approximation = minimal_left_approximation(&w, &targets)?;
    let xy = ctx.attach(&y, &approximation.map)?;
    let z = ctx.i0(&x)?.direct_sum(&xy)?;
    let pair = SttPair { module: ctx.basic_indices(&z)?, excluded: ctx.glued_excluded(xp, yp) };
    let name = pair.name(la.catalog());
    if !is_stt_pair(la.catalog(), &pair) {
        return Err(Error::invariant(format!("glued module {name} is not support τ-tilting")));
    }
    let node = la
        .index_of_pair(&pair)
        .ok_or_else(|| Error::invariant(format!("glued pair {name} is missing from the enumeration")))?;
    let torsion = glue_torsion_class(ctx, lb.class(xi), lc.class(yi))?;
    if la.class(node).members != torsion.members {
        return Err(Error::invariant(format!("Fac({name}) differs from the glued torsion class")));
    }
    Ok(GlueOutcome { x: xi, y: yi, pair, node, approximation, torsion })
}

/// `(X, 0) ⊕ (Y ⊗_C M, Y)` when `Hom(Y ⊗_C M, τX) = 0` and `Y ⊗_C M` vanishes
/// on the vertices excluded by `X`; `None` when either condition fails.
pub fn glue_stt_simple(ctx: &GluingContext, xi: usize, yi: usize) -> Result<Option<SttPair>> {
    let (xp, yp) = (ctx.lb.pair(xi), ctx.lc.pair(yi));
    let x = xp.rep(ctx.lb.catalog());
    let y = yp.rep(ctx.lc.catalog());
    let w = ctx.tensor_with_m(&y)?;
    if hom_dim(&w, &rep::tau(&x)?)? != 0 || xp.excluded.iter().any(|&e| w.dim_at(e) != 0) {
        return Ok(None);
    }
    let z = ctx.i0(&x)?.direct_sum(&ctx.j1(&y)?)?;
    let pair = SttPair { module: ctx.basic_indices(&z)?, excluded: ctx.glued_excluded(xp, yp) };
    if glue_stt(ctx, xi, yi)?.pair != pair {
        return Err(Error::invariant("direct gluing disagrees with the approximation construction"));
    }
    Ok(Some(pair))
}

/// `⊥(τM) = {N : Hom(N, τM) = 0}` over the `A`-catalog.
fn perp_tau(ctx: &GluingContext, m: &Rep) -> Result<Vec<usize>> {
    let t = rep::tau(m)?;
    let cat = ctx.la.catalog();
    let mut out = Vec::new();
    for i in 0..cat.len() {
        if hom_dim(cat.module(i), &t)? == 0 {
            out.push(i);
        }
    }
    Ok(out)
}

fn require_tau_tilting(ctx: &GluingContext, xi: usize) -> Result<()> {
    let xp = ctx.lb.pair(xi);
    if !xp.excluded.is_empty() || xp.module.len() != ctx.glued.nb() {
        return Err(Error::usage(format!("{} is not τ-tilting over B", xp.name(ctx.lb.catalog()))));
    }
    Ok(())
}

/// Glues a τ-tilting `X` with `C` itself; the result is the Bongartz
/// completion of `(X, 0)`, checked against `⊥τ(X, 0)`.
pub fn bongartz_glued(ctx: &GluingContext, xi: usize) -> Result<GlueOutcome> {
    require_tau_tilting(ctx, xi)?;
    let out = glue_stt(ctx, xi, ctx.lc.top())?;
    let x0 = ctx.i0(&ctx.lb.pair(xi).rep(ctx.lb.catalog()))?;
    if ctx.la.class(out.node).members != perp_tau(ctx, &x0)? {
        return Err(Error::invariant("Fac of the completion differs from ⊥τ(X, 0)"));
    }
    if !out.pair.excluded.is_empty() {
        return Err(Error::invariant("completion of a τ-tilting module is not τ-tilting"));
    }
    Ok(out)
}

/// `{(S, 0)} ∪ {(0, S')}` as `A`-catalog indices, checked to be a semibrick
/// generating the glued torsion class.
pub fn glue_semibrick(ctx: &GluingContext, sx: &[usize], sy: &[usize]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for &s in sx {
        out.push(ctx.i0_index(s)?);
    }
    for &s in sy {
        out.push(ctx.j_minus1_index(s)?);
    }
    out.sort_unstable();
    let cat = ctx.la.catalog();
    for &i in &out {
        if !is_brick(cat.module(i))? {
            return Err(Error::invariant(format!("{} is not a brick", cat.name(i))));
        }
        for &j in &out {
            if i != j && cat.hom(i, j) != 0 {
                return Err(Error::invariant("glued bricks are not Hom-orthogonal"));
            }
        }
    }
    let tx = ctx.lb.smallest_torsion_class(sx)?;
    let ty = ctx.lc.smallest_torsion_class(sy)?;
    if ctx.la.smallest_torsion_class(&out)?.members != glue_torsion_class(ctx, &tx, &ty)?.members {
        return Err(Error::invariant("T(glued semibrick) differs from the glued torsion class"));
    }
    Ok(out)
}

/// Bijection between the `A`-pairs above `(X, 0)` and the `C`-pairs.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// `A`-nodes in `[Fac(X, 0), ⊥τ(X, 0)]`, in lattice order.
    pub interval: Vec<usize>,
    /// `forward[k]` is the `C`-node of `interval[k]`.
    pub forward: Vec<usize>,
    /// `backward[c]` is the `A`-node glued from the `C`-node `c`.
    pub backward: Vec<usize>,
}

pub fn reduce(ctx: &GluingContext, xi: usize) -> Result<Reduction> {
    require_tau_tilting(ctx, xi)?;
    let (la, lc) = (&ctx.la, &ctx.lc);
    let x = ctx.lb.pair(xi).rep(ctx.lb.catalog());
    let x0 = ctx.i0(&x)?;
    let x0_idx = ctx.basic_indices(&x0)?;
    let lower = fac_class(la.catalog(), &x0_idx)?.members;
    let upper = perp_tau(ctx, &x0)?;
    let interval: Vec<usize> = (0..la.len())
        .filter(|&n| {
            let m = &la.class(n).members;
            lower.iter().all(|i| m.contains(i)) && m.iter().all(|i| upper.contains(i))
        })
        .collect();
    let mut forward = Vec::with_capacity(interval.len());
    for &n in &interval {
        let pair = la.pair(n);
        if !x0_idx.iter().all(|i| pair.module.contains(i)) {
            return Err(Error::invariant("interval member does not contain (X, 0)"));
        }
        let y = ctx.j0(&pair.rep(la.catalog()))?;
        let mut idx = lc.catalog().indices_of(&y)?;
        idx.dedup();
        let excluded: Vec<usize> = (0..y.dims().len()).filter(|&v| y.dim_at(v) == 0).collect();
        let c = lc
            .index_of_pair(&SttPair { module: idx, excluded })
            .ok_or_else(|| Error::invariant("restriction is not a support τ-tilting C-pair"))?;
        forward.push(c);
    }
    let mut backward = Vec::with_capacity(lc.len());
    for c in 0..lc.len() {
        backward.push(glue_stt(ctx, xi, c)?.node);
    }
    if interval.len() != lc.len() {
        return Err(Error::invariant(format!("interval has {} nodes, C has {}", interval.len(), lc.len())));
    }
    for (k, &n) in interval.iter().enumerate() {
        if backward[forward[k]] != n {
            return Err(Error::invariant("reduction maps are not mutually inverse"));
        }
    }
    for a in 0..lc.len() {
        for b in 0..lc.len() {
            if lc.le(a, b) != la.le(backward[a], backward[b]) {
                return Err(Error::invariant("reduction does not preserve the order"));
            }
        }
    }
    let position = |n: usize| interval.iter().position(|&m| m == n);
    let induced: BTreeSet<(usize, usize)> =
        la.edges().iter().filter_map(|e| Some((forward[position(e.from)?], forward[position(e.to)?]))).collect();
    let native: BTreeSet<(usize, usize)> = lc.edges().iter().map(|e| (e.from, e.to)).collect();
    if induced != native {
        return Err(Error::invariant("Hasse quiver of the interval differs from that of C"));
    }
    Ok(Reduction { interval, forward, backward })
}

/// Invariants of `C' = End_A(T) / <e>` next to those of `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CPrimeReport {
    pub cprime: AlgebraInvariants,
    pub c: AlgebraInvariants,
    pub end_dim: usize,
}

/// `T` the Bongartz completion of `(X, 0)`, `e` the projection onto its
/// `(X, 0)`-summands; `C' = End_A(T)/<e>` must match `C`.
pub fn cprime_invariants(ctx: &GluingContext, xi: usize) -> Result<CPrimeReport> {
    let out = bongartz_glued(ctx, xi)?;
    let la = &ctx.la;
    let cat = la.catalog();
    let summands = &out.pair.module;
    let t = cat.sum(summands);
    let end = end_algebra(&t)?;
    let d = end.basis.len();
    let mut table = vec![vec![Vec::new(); d]; d];
    for (i, bi) in end.basis.iter().enumerate() {
        for (j, bj) in end.basis.iter().enumerate() {
            table[i][j] = end.coords(&bi.after(bj)?).ok_or_else(|| Error::invariant("End is not closed"))?;
        }
    }
    let unit = end.coords(&Morph::identity(&t)).ok_or_else(|| Error::invariant("identity is not in End"))?;
    let labels = (0..d).map(|k| format!("φ{k}")).collect();
    let b_prime = FinDimAlgebra::new(t.field(), labels, table, unit)?;
    let x_idx: Vec<usize> = ctx.lb.pair(xi).module.iter().map(|&i| ctx.i0_index(i)).collect::<Result<_>>()?;
    let f = t.field();
    let blocks = (0..t.dims().len())
        .map(|v| {
            let mut e = Mat::zeros(f, t.dim_at(v), t.dim_at(v));
            let mut off = 0;
            for &s in summands {
                let dv = cat.module(s).dim_at(v);
                if x_idx.contains(&s) {
                    for k in off..off + dv {
                        e.set(k, k, 1);
                    }
                }
                off += dv;
            }
            e
        })
        .collect();
    let e = Morph::new(t.clone(), t.clone(), blocks)?;
    let e_coords = end.coords(&e).ok_or_else(|| Error::invariant("summand projection is not in End"))?;
    let params = ctx.glued.a().params();
    let cprime = b_prime.quotient_by_idempotent_ideal(&e_coords)?.invariants(params)?;
    let c = ctx.glued.c().to_findim().invariants(params)?;
    let report = CPrimeReport { cprime, c, end_dim: d };
    if cprime != c {
        return Err(Error::invariant(format!("C' has invariants {cprime:?}, C has {c:?}")));
    }
    Ok(report)
}

/// Concatenates `(X_i, 0)` along `α` with `(mod B, Y_j)` along `β`.
pub fn glue_mgs(ctx: &GluingContext, alpha: &GreenSequence, beta: &GreenSequence) -> Result<GreenSequence> {
    let (lb, lc, la) = (&ctx.lb, &ctx.lc, &ctx.la);
    let zero_c = lc.class(lc.bottom());
    let mod_b = lb.class(lb.top());
    let mut chain = Vec::new();
    for &n in &alpha.chain {
        chain.push(glue_torsion_class(ctx, lb.class(n), zero_c)?);
    }
    for &n in beta.chain.iter().skip(1) {
        chain.push(glue_torsion_class(ctx, mod_b, lc.class(n))?);
    }
    let nodes: Vec<usize> = chain
        .iter()
        .map(|c| la.index_of_members(&c.members).ok_or_else(|| Error::invariant("chain member is not a torsion class")))
        .collect::<Result<_>>()?;
    let mut labels = Vec::new();
    for w in nodes.windows(2) {
        let edge = la
            .edges()
            .iter()
            .find(|e| e.from == w[1] && e.to == w[0])
            .ok_or_else(|| Error::invariant("glued chain has a step that is not a covering relation"))?;
        labels.push(edge.label);
    }
    let expected = glue_cfhos(ctx, &alpha.labels, &beta.labels)?;
    if labels != expected {
        return Err(Error::invariant("labels of the glued chain differ from the glued brick sequence"));
    }
    if labels.len() != alpha.len() + beta.len() {
        return Err(Error::invariant("glued length is not l(α) + l(β)"));
    }
    if nodes.first() != Some(&la.bottom()) || nodes.last() != Some(&la.top()) {
        return Err(Error::invariant("glued chain does not run from 0 to mod A"));
    }
    Ok(GreenSequence { chain: nodes, labels })
}

/// `((S_1, 0), ..., (S_r, 0), (0, S'_1), ..., (0, S'_s))`, checked to be a
/// complete forward Hom-orthogonal sequence of `A`.
pub fn glue_cfhos(ctx: &GluingContext, bricks_b: &[usize], bricks_c: &[usize]) -> Result<Vec<usize>> {
    let mut seq = Vec::with_capacity(bricks_b.len() + bricks_c.len());
    for &s in bricks_b {
        seq.push(ctx.i0_index(s)?);
    }
    for &s in bricks_c {
        seq.push(ctx.j_minus1_index(s)?);
    }
    if !ctx.la.is_complete_fho(&seq)? {
        return Err(Error::invariant("glued brick sequence is not complete forward Hom-orthogonal"));
    }
    Ok(seq)
}

/// Every `(X, Y)` from the two enumerations glued; gluing must be injective.
pub fn sweep_all_pairs(ctx: &GluingContext) -> Result<Vec<GlueOutcome>> {
    let mut out = Vec::with_capacity(ctx.lb.len() * ctx.lc.len());
    let mut seen = HashSet::new();
    for xi in 0..ctx.lb.len() {
        for yi in 0..ctx.lc.len() {
            let o = glue_stt(ctx, xi, yi)?;
            if !seen.insert(o.node) {
                return Err(Error::invariant("two input pairs glue to the same A-pair"));
            }
            out.push(o);
        }
    }
    Ok(out)
}

/// Ladder identities and adjunction dimensions on all cached indecomposables.
pub fn check_ladder(ctx: &GluingContext) -> Result<()> {
    let iso = |a: &Rep, b: &Rep| -> Result<bool> { Ok(rep::is_isomorphic(a, b)?.is_some()) };
    let fail = |what: &str| Err(Error::invariant(format!("ladder check failed: {what}")));
    for x in ctx.lb.catalog().modules() {
        let z = ctx.i0(x)?;
        if ctx.i_minus1(&z)? != *x || !ctx.j0(&z)?.is_zero() {
            return fail("i_{-1} i_0 = id and j_0 i_0 = 0");
        }
        for w in ctx.la.catalog().modules() {
            if hom_dim(&z, w)? != hom_dim(x, &ctx.i_minus1(w)?)? {
                return fail("i_0 ⊣ i_{-1}");
            }
            if hom_dim(w, &z)? != hom_dim(&ctx.i1(w)?, x)? {
                return fail("i_1 ⊣ i_0");
            }
        }
    }
    for y in ctx.lc.catalog().modules() {
        if !iso(&ctx.j0(&ctx.j1(y)?)?, y)? || ctx.j0(&ctx.j_minus1(y)?)? != *y {
            return fail("j_0 j_1 = id and j_0 j_{-1} = id");
        }
        let (up, down) = (ctx.j1(y)?, ctx.j_minus1(y)?);
        for w in ctx.la.catalog().modules() {
            let yw = ctx.j0(w)?;
            if hom_dim(&up, w)? != hom_dim(y, &yw)? {
                return fail("j_1 ⊣ j_0");
            }
            if hom_dim(w, &down)? != hom_dim(&yw, y)? {
                return fail("j_0 ⊣ j_{-1}");
            }
        }
    }
    for c in 0..ctx.glued.nc() {
        let p = rep::projective(ctx.glued.c(), c);
        if !iso(&ctx.j1(&p)?, &rep::projective(ctx.glued.a(), ctx.glued.c_vertex(c)))? {
            return fail("j_1 P^C_c = P^A_c");
        }
    }
    Ok(())
}

/// `0 -> i_0 i_{-1} Z -> Z -> j_{-1} j_0 Z -> 0` is exact at every vertex.
pub fn check_exact_sequences(ctx: &GluingContext) -> Result<()> {
    let nb = ctx.glued.nb();
    for z in ctx.la.catalog().modules() {
        let sub = ctx.i0(&ctx.i_minus1(z)?)?;
        let quo = ctx.j_minus1(&ctx.j0(z)?)?;
        let f = z.field();
        let n = z.dims().len();
        let incl_blocks = (0..n)
            .map(|v| if v < nb { Mat::identity(f, z.dim_at(v)) } else { Mat::zeros(f, z.dim_at(v), 0) })
            .collect();
        let proj_blocks = (0..n)
            .map(|v| if v < nb { Mat::zeros(f, 0, z.dim_at(v)) } else { Mat::identity(f, z.dim_at(v)) })
            .collect();
        let incl = Morph::new(sub, z.clone(), incl_blocks)?;
        let proj = Morph::new(z.clone(), quo, proj_blocks)?;
        let exact = (0..n).all(|v| {
            let (a, b) = (incl.block(v), proj.block(v));
            b.mul(a).is_zero() && a.rank() == a.cols() && b.rank() == b.rows() && a.rank() + b.rank() == z.dim_at(v)
        });
        if !exact {
            return Err(Error::invariant("restriction sequence is not exact"));
        }
    }
    Ok(())
}

/// `j_0(Fac T) ⊆ Filt(Fac(j_0 T))` for every support τ-tilting `A`-module `T`.
pub fn check_restriction_inclusion(ctx: &GluingContext) -> Result<()> {
    let (la, lc) = (&ctx.la, &ctx.lc);
    for n in 0..la.len() {
        let t = la.pair(n).rep(la.catalog());
        let seeds = lc.catalog().indices_of(&ctx.j0(&t)?)?;
        let closure = filt_fac_closure(lc.catalog(), &seeds)?;
        for &z in &la.class(n).members {
            let (_, ys) = ctx.parts(z);
            if !ys.iter().all(|y| closure.contains(y)) {
                return Err(Error::invariant("restriction leaves Filt(Fac(j_0 T))"));
            }
        }
    }
    Ok(())
}

/// Whether gluing is monotone in both arguments, on the full enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monotonicity {
    pub comparable_inputs: usize,
    pub violations: usize,
}

pub fn monotonicity_report(ctx: &GluingContext, outcomes: &[GlueOutcome]) -> Monotonicity {
    let mut report = Monotonicity { comparable_inputs: 0, violations: 0 };
    for a in outcomes {
        for b in outcomes {
            if ctx.lb.le(a.x, b.x) && ctx.lc.le(a.y, b.y) {
                report.comparable_inputs += 1;
                if !ctx.la.le(a.node, b.node) {
                    report.violations += 1;
                }
            }
        }
    }
    report
}
