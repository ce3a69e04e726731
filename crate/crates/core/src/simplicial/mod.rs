//! Finite stratified simplicial sets, their maps, and constructions on them.

mod complex;
mod decompose;
mod join;
mod map;
mod operator;
mod product;
mod slice;
mod trivial;

pub use complex::{Cell, ComplexBuilder, SimplexId, SimplexRef, StratifiedComplex, Violation};
pub use decompose::{mono_decomposition, recompose, Step};
pub use join::{join, Join};
pub use map::{ComplexMap, Inclusion, InclusionKind};
pub use operator::{surjections, MonotoneMap};
pub use product::{product, Product};
pub use slice::{slice, Side, Slice};
pub use trivial::{
    core, core_inclusion, core_members, is_n_trivial, trivialization_inclusion, trivialize,
};
