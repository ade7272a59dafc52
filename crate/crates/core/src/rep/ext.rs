use super::hom::{hom_dim, is_isomorphic};
use super::standard::min_proj_presentation;
use super::Rep;
use crate::algebra::Quiver;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Middle terms are enumerated only while `p^{dim Ext} <= 2^12`.
const MIDDLE_TERM_CAP: u64 = 1 << 12;

/// `<x, y> = sum_i x_i y_i - sum_{a: i -> j} x_i y_j`.
pub fn euler_form(q: &Quiver, x: &[usize], y: &[usize]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(a, b)| (a * b) as i64).sum();
    let arrows: i64 = q.arrows().iter().map(|a| (x[a.source] * y[a.target]) as i64).sum();
    diag - arrows
}

/// `dim Ext¹(M, N)` as the cokernel of `Hom(P0, N) -> Hom(P1, N)`, checked
/// against the Euler form.
pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    m.same_algebra(n)?;
    let alg = m.algebra();
    let pres = min_proj_presentation(m)?;
    let f = m.field();
    // Hom(P_i, N) = N_i; the map sends (n_v) to (sum_v N_{q_uv} n_v)_u.
    let rows: usize = pres.p1.iter().map(|&i| n.dim_at(i)).sum();
    let cols: usize = pres.p0.iter().map(|&j| n.dim_at(j)).sum();
    let mut big = Mat::zeros(f, rows, cols);
    let mut r0 = 0;
    for (u, &i) in pres.p1.iter().enumerate() {
        let mut c0 = 0;
        for (v, &j) in pres.p0.iter().enumerate() {
            let mut block = Mat::zeros(f, n.dim_at(i), n.dim_at(j));
            for (qi, &q) in alg.paths_between(j, i).iter().enumerate() {
                let c = pres.coeffs[u][v][qi];
                if c != 0 {
                    block = block.add(&n.path_matrix(q).scale(c));
                }
            }
            big.paste(r0, c0, &block);
            c0 += n.dim_at(j);
        }
        r0 += n.dim_at(i);
    }
    let ext = rows - big.rank();
    let euler = euler_form(alg.quiver(), m.dims(), n.dims());
    if hom_dim(m, n)? as i64 - euler != ext as i64 {
        return Err(Error::invariant(format!(
            "Ext dimension {ext} disagrees with the Euler form {euler} for dims {:?}, {:?}",
            m.dims(),
            n.dims()
        )));
    }
    Ok(ext)
}

/// Middle terms `E` of all extensions `0 -> N -> E -> M -> 0`, up to iso.
///
/// Cocycles are tuples `h_a: M_s -> N_t`; `E_a = [[N_a, h_a], [0, M_a]]`.
/// Coboundaries are `N_a g_s - g_t M_a`.
#[allow(clippy::needless_range_loop)]
pub fn ext1_middle_terms(m: &Rep, n: &Rep) -> Result<Vec<Rep>> {
    m.same_algebra(n)?;
    let f = m.field();
    let alg = m.algebra();
    let arrows = alg.quiver().arrows();
    let mut coc_off = Vec::new();
    let mut ncoc = 0;
    for a in arrows {
        coc_off.push(ncoc);
        ncoc += n.dim_at(a.target) * m.dim_at(a.source);
    }
    let nv = alg.vertex_count();
    let mut g_off = Vec::new();
    let mut ng = 0;
    for i in 0..nv {
        g_off.push(ng);
        ng += n.dim_at(i) * m.dim_at(i);
    }
    // delta: (g_i) -> (N_a g_s - g_t M_a)_a, column per unit g.
    let mut delta = Mat::zeros(f, ncoc, ng);
    for i in 0..nv {
        for r in 0..n.dim_at(i) {
            for c in 0..m.dim_at(i) {
                let col = g_off[i] + r * m.dim_at(i) + c;
                for (k, a) in arrows.iter().enumerate() {
                    let (ms, nt) = (m.dim_at(a.source), n.dim_at(a.target));
                    if a.source == i {
                        // N_a E_rc: column c gets N_a[:, r].
                        for t in 0..nt {
                            let v = n.map(k).get(t, r);
                            let row = coc_off[k] + t * ms + c;
                            delta.set(row, col, f.add(delta.get(row, col), v));
                        }
                    }
                    if a.target == i {
                        // E_rc M_a: row r gets M_a[c, :].
                        for s in 0..ms {
                            let v = m.map(k).get(c, s);
                            let row = coc_off[k] + r * ms + s;
                            delta.set(row, col, f.sub(delta.get(row, col), v));
                        }
                    }
                }
            }
        }
    }
    let image = delta.column_space();
    let reps = image.complement_indices();
    let ext = ext1_dim(m, n)?;
    if reps.len() != ext {
        return Err(Error::invariant("cocycle count disagrees with dim Ext¹"));
    }
    let p = f.p() as u64;
    if p.checked_pow(ext as u32).is_none_or(|c| c > MIDDLE_TERM_CAP) {
        return Err(Error::EnumerationCap(format!("{p}^{ext} extension classes")));
    }
    let mut found: Vec<Rep> = Vec::new();
    let mut coeffs = vec![0u32; ext];
    loop {
        let mut h = vec![0u32; ncoc];
        for (&k, &c) in reps.iter().zip(&coeffs) {
            h[k] = f.add(h[k], c);
        }
        let dims: Vec<usize> = (0..nv).map(|i| n.dim_at(i) + m.dim_at(i)).collect();
        let maps = arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (ms, nt) = (m.dim_at(a.source), n.dim_at(a.target));
                let ha = Mat::from_fn(f, nt, ms, |r, c| h[coc_off[k] + r * ms + c]);
                let mut e = Mat::zeros(f, dims[a.target], dims[a.source]);
                e.paste(0, 0, n.map(k));
                e.paste(0, n.dim_at(a.source), &ha);
                e.paste(nt, n.dim_at(a.source), m.map(k));
                e
            })
            .collect();
        let e = Rep::new(alg.clone(), dims, maps)?;
        let mut fresh = true;
        for other in &found {
            if is_isomorphic(other, &e)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            found.push(e);
        }
        let mut k = 0;
        while k < ext {
            coeffs[k] += 1;
            if coeffs[k] as u64 == p {
                coeffs[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
        if k == ext {
            break;
        }
    }
    Ok(found)
}
