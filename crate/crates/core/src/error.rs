use thiserror::Error;

/// Every failure the library can report. Variants are grouped loosely by the
/// module that raises them; [`Error::kind`] gives a stable machine-readable tag.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("arrow {source_vertex}->{target} is a loop")]
    Loop { source_vertex: usize, target: usize },

    #[error("quiver has an oriented cycle")]
    CyclicQuiver,

    #[error("vertex {vertex} is {kind}, expected {expected}")]
    WrongVertexKind { vertex: usize, kind: &'static str, expected: &'static str },

    #[error("objects belong to different quivers")]
    QuiverMismatch,

    #[error("root has (b,b) = 0; reflection undefined")]
    SingularRoot,

    #[error("reflection is not integral for this vector")]
    NonIntegral,

    #[error("word {0:?} is not reduced")]
    NonReducedWord(Vec<usize>),

    #[error("malformed Coxeter element: {0}")]
    MalformedCoxeter(String),

    #[error("vector is not a positive real root: {0}")]
    NotARealRoot(String),

    #[error("zero vector not allowed here")]
    ZeroVector,

    #[error("classification inconclusive within search bound {0}")]
    Inconclusive(usize),

    #[error("outside supported scope: {0}")]
    UnsupportedScope(String),

    #[error("resource guard exceeded: {what} ({value} > {limit})")]
    ResourceLimit { what: &'static str, value: u128, limit: u128 },

    #[error("unsupported field characteristic {0} (supported: 2, 3, 5)")]
    UnsupportedField(u32),

    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("element is not c-sortable")]
    NotSortable,

    #[error("set of roots is not a torsion-free class")]
    NotTorsionFree,

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable snake-case tag, used in the CLI's error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::Loop { .. } => "loop",
            Error::CyclicQuiver => "cyclic_quiver",
            Error::WrongVertexKind { .. } => "wrong_vertex_kind",
            Error::QuiverMismatch => "quiver_mismatch",
            Error::SingularRoot => "singular_root",
            Error::NonIntegral => "non_integral",
            Error::NonReducedWord(_) => "non_reduced_word",
            Error::MalformedCoxeter(_) => "malformed_coxeter",
            Error::NotARealRoot(_) => "not_a_real_root",
            Error::ZeroVector => "zero_vector",
            Error::Inconclusive(_) => "inconclusive",
            Error::UnsupportedScope(_) => "unsupported_scope",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::UnsupportedField(_) => "unsupported_field",
            Error::FieldMismatch(..) => "field_mismatch",
            Error::Shape(_) => "shape",
            Error::NotSortable => "not_sortable",
            Error::NotTorsionFree => "not_torsion_free",
            Error::Invariant(_) => "invariant",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
