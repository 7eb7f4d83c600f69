//! Quivers, their Weyl groups, `c`-sortable elements, and torsion-free
//! classes of representations of Dynkin quivers over small prime fields.

pub mod error;
pub mod linrep;
pub mod quiver;
pub mod roots;
pub mod torsion;
pub mod vector;
pub mod weyl;

pub use error::{Error, Result};
pub use linrep::{FieldSpec, Matrix, Morphism, Representation};
pub use quiver::{DynkinType, Quiver, VertexKind};
pub use roots::{classify_vector, positive_real_roots, RootClass, RootSet};
pub use vector::{IntMatrix, IntVector};
pub use weyl::{
    coxeter_of_quiver, enumerate_c_sortable, is_c_sortable, CoxeterElement, InversionSet, LengthBound,
    WeylElement, Word,
};
pub use torsion::{
    enumerate_tfc, is_torsion_free_class, sortable_of_tfc, tfc_of_sortable, verify_bijection, BijectionReport,
    TorsionFreeClass,
};
