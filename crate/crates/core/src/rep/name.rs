use super::decompose::decompose;
use super::Rep;
use crate::error::Result;
use crate::linalg::Mat;

/// Vertex multisets of the radical layers `rad^k M / rad^{k+1} M`, top first.
pub fn radical_layers(m: &Rep) -> Vec<Vec<usize>> {
    let f = m.field();
    let arrows = m.algebra().quiver().arrows();
    let n = m.dims().len();
    let mut current: Vec<Mat> = (0..n).map(|i| Mat::identity(f, m.dim_at(i))).collect();
    let mut layers = Vec::new();
    while current.iter().any(|b| b.cols() > 0) {
        let next: Vec<Mat> = (0..n)
            .map(|j| {
                let mut span = Mat::zeros(f, m.dim_at(j), 0);
                for (k, a) in arrows.iter().enumerate() {
                    if a.target == j {
                        span = span.hstack(&m.map(k).mul(&current[a.source]));
                    }
                }
                span.column_space()
            })
            .collect();
        let mut layer = Vec::new();
        for i in 0..n {
            for _ in 0..current[i].cols() - next[i].cols() {
                layer.push(i);
            }
        }
        layers.push(layer);
        current = next;
    }
    layers
}

fn indecomposable_name(m: &Rep) -> String {
    let q = m.algebra().quiver();
    radical_layers(m)
        .iter()
        .map(|layer| layer.iter().map(|&v| q.label(v)).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("/")
}

/// Stacked notation: radical layers separated by `/`, summands by `⊕`,
/// e.g. `1⊕3/1/2`. The zero module is `0`.
pub fn module_name(m: &Rep) -> Result<String> {
    if m.is_zero() {
        return Ok("0".into());
    }
    let mut parts: Vec<(usize, String)> =
        decompose(m)?.iter().map(|s| (s.total_dim(), indecomposable_name(s))).collect();
    parts.sort();
    Ok(parts.into_iter().map(|p| p.1).collect::<Vec<_>>().join("⊕"))
}
