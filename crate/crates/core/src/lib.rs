//! floerkit: an exact-arithmetic toolkit for contact invariants of open
//! books. Three engines under one roof:
//!
//! * [`cfk`] — filtered knot Floer chain-complex algebra over Z and Z/2,
//!   with integer homology and the contact-class extraction;
//! * [`mcg`] — open-book monodromy words, an exact genus-1 word problem
//!   and positivity decision via Garside normal forms, homological
//!   actions, Giroux moves and surgery bookkeeping;
//! * [`heegaard`] — combinatorial pointed Heegaard diagrams, periodic
//!   domain lattices, Euler and point measures, Chern-class evaluations,
//!   and the standard model diagram family.
//!
//! The [`io`] module defines the text formats and [`cli`] the command
//! dispatcher behind the `floerkit` binary. All arithmetic is exact; all
//! outputs are deterministic given deterministic input order.
//!
//! ```
//! use floerkit::cfk::{contact_class, hat_column, mirror_dual, ClassStatus};
//! use floerkit::fixtures;
//!
//! // the right-handed trefoil carries a primitive class ...
//! let hat = hat_column(&mirror_dual(&fixtures::trefoil_right()));
//! let report = contact_class(&hat, 1)?;
//! assert_eq!(report.status, ClassStatus::Primitive);
//!
//! // ... and the left-handed one does not
//! let hat = hat_column(&mirror_dual(&fixtures::trefoil_left()));
//! assert_eq!(contact_class(&hat, 1)?.status, ClassStatus::Zero);
//! # Ok::<(), floerkit::cfk::CfkError>(())
//! ```

pub mod cfk;
pub mod cli;
pub mod fixtures;
pub mod heegaard;
pub mod io;
pub mod linalg;
pub mod mcg;
