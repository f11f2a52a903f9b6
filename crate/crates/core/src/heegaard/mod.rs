//! Combinatorial pointed Heegaard diagrams: periodic-domain lattices,
//! Euler and point measures, Chern-class evaluations, weak
//! admissibility, and the standard model diagram family.

pub(crate) mod diagram;
mod domains;
mod model;
pub(crate) mod tuples;

pub use diagram::{
    chern_evaluation, euler_measure, point_measure, DiagramError, GeneratorTuple,
    IntersectionPoint, MeasuredDiagram, PeriodicDomain, Region,
};
pub use domains::{
    periodic_domains, weak_admissibility, AdmissibilityReport, DEFAULT_COMBINATION_CAP,
    DEFAULT_SEARCH_BOX,
};
pub use model::{build_model_diagram, ModelDiagram, ModelVariant};
pub use tuples::{enumerate_tuples, minimal_chern_points, DEFAULT_TUPLE_CAP};
