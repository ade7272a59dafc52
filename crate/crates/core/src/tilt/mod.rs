//! Support τ-tilting theory over representation-finite path algebras.

mod catalog;
mod lattice;

pub use catalog::{Catalog, DEFAULT_CAP};
pub use lattice::{
    enumerate_stt, ext_projectives, fac_class, filt_fac_closure, is_stt_pair, is_stt_pair_rep, is_tau_rigid,
    is_tau_rigid_rep, semibrick_of_summands, GreenSequence, HasseEdge, Lattice, SttPair, TorsionClass,
};
