//! Representations over a prime field `F_p`, `p ∈ {2, 3, 5}`.

pub mod field;
pub mod hom;
pub mod indec;
pub mod reflect;
pub mod rep;
pub mod subreps;

pub use field::{Cokernel, FieldSpec, Matrix};
pub use hom::{ext1_dim, hom_basis, hom_dim, HomSpace};
pub use indec::{decompose, indec_of_real_root, is_indecomposable, IndecCatalog};
pub use reflect::{
    reflect_minus, reflect_minus_mor, reflect_plus, reflect_plus_mor, simple_multiplicity_at_sink,
    simple_multiplicity_at_source, strip_simple_summands,
};
pub use rep::{Morphism, Representation, RepresentationJson};
pub use subreps::{enumerate_extensions, enumerate_subreps, Subrep};
