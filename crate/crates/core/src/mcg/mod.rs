//! Open-book monodromy algebra: Dehn-twist words, the exact genus-1 word
//! problem and positivity via Garside normal forms in B3, homological
//! actions, Giroux moves, and surgery composition.

mod action;
mod braid;
mod hopf;
mod openbook;
mod word;

pub use action::{homological_action, is_symplectic, standard_symplectic_form, ActionMatrix};
pub use braid::{braid_normal_form, words_equal, BraidError, BraidNormalForm, Perm, WordsEqual};
pub use hopf::hopf_invariant;
pub use openbook::{
    boundary_connect_sum, compose_surgery, giroux_stabilize, is_positive, stein_certificate,
    OpenBook, OpenBookError, Positivity, SteinCertificate, SurgeryDescriptor,
};
pub use word::{Curve, TwistLetter, TwistWord, WordError};
