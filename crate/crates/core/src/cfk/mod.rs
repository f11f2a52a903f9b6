//! Filtered chain-complex algebra over Z and Z/2: validation, homology
//! via integer normal forms, sublevels, mirror duals, filtered tensor
//! products, and the contact-class extraction.

mod complex;
mod contact;
mod homology;
mod ops;

pub use complex::{
    Arrow, BiGenerator, BifilteredComplex, CfkError, Chain, CoeffRing, HatFilteredComplex,
    HatGenerator, ValidationReport,
};
pub use contact::{contact_class, ContactClassReport};
pub use homology::{ClassStatus, HomologyEngine, HomologyPresentation};
pub use ops::{
    associated_graded, hat_column, homology, homology_bifiltered, include_chain, mirror_dual,
    sublevel, tensor_filtered, GradedLevel,
};
