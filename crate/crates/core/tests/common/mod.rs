#![allow(dead_code)]

use std::sync::Arc;

use proptest::test_runner::{Config, RngSeed};
use tilting::algebra::{GluedAlgebra, PathAlgebra, Quiver};
use tilting::glue::GluingContext;
use tilting::linalg::PrimeField;
use tilting::tilt::{Catalog, Lattice, DEFAULT_CAP};

pub const PRIMES: [u32; 2] = [2, 3];

pub fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn seeded(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x7a17), failure_persistence: None, ..Config::default() }
}

pub fn path_algebra(p: u32, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Arc<PathAlgebra> {
    PathAlgebra::new(Quiver::new(vertices, arrows).unwrap(), field(p))
}

pub fn lattice(alg: &Arc<PathAlgebra>) -> Lattice {
    Lattice::new(Catalog::new(alg, DEFAULT_CAP).unwrap()).unwrap()
}

/// k(1 <- 2) from two points.
pub fn ctx_a2(p: u32) -> GluingContext {
    let b = path_algebra(p, &["1"], &[]);
    let c = path_algebra(p, &["2"], &[]);
    GluingContext::new(GluedAlgebra::new(b, c, &[("a", "2", "1")]).unwrap(), DEFAULT_CAP).unwrap()
}

/// k(3 -> 1 -> 2) from k(1 -> 2) and a point.
pub fn ctx_a3(p: u32) -> GluingContext {
    let b = path_algebra(p, &["1", "2"], &[("b", "1", "2")]);
    let c = path_algebra(p, &["3"], &[]);
    GluingContext::new(GluedAlgebra::new(b, c, &[("a", "3", "1")]).unwrap(), DEFAULT_CAP).unwrap()
}

/// A of type A4: k(1 -> 2) and k(3 -> 4) joined by 3 -> 1.
pub fn ctx_a4(p: u32) -> GluingContext {
    let b = path_algebra(p, &["1", "2"], &[("b", "1", "2")]);
    let c = path_algebra(p, &["3", "4"], &[("c", "3", "4")]);
    GluingContext::new(GluedAlgebra::new(b, c, &[("a", "3", "1")]).unwrap(), DEFAULT_CAP).unwrap()
}

pub fn contexts(p: u32) -> Vec<GluingContext> {
    vec![ctx_a2(p), ctx_a3(p), ctx_a4(p)]
}

pub fn name_of(l: &Lattice, node: usize) -> String {
    l.pair(node).name(l.catalog())
}
