//! Representations of quivers over finite prime fields.

mod category;
pub mod fp;
mod quiver;
mod rep;

pub use category::{
    nilpotent_matrix_count, sub_dims, Classifier, HallTable, IsoClass, IsoLabel, OrbitClass, OrbitData,
    RepCategory, DEFAULT_BUDGET,
};
pub use fp::Mat;
pub use quiver::{euler_form_add, ArrowSpec, ParsedSpec, Quiver, QuiverSpec};
pub use rep::{
    aut_count_enumerate, aut_count_mobius, hom_basis, hom_dim, is_isomorphic, socle_basis, subrepresentations,
    Morphism, QuiverRep, SubQuotient,
};
