//! Extraction of the contact class from the hat filtered complex of a
//! fibered knot: the homology of the bottom filtration sublevel must be a
//! single copy of Z (or Z/2), and its generator is pushed through the
//! inclusion and classified in the full homology.

use super::complex::{CfkError, Chain, CoeffRing, HatFilteredComplex};
use super::homology::{ClassStatus, HomologyEngine, HomologyPresentation};
use super::ops::{include_chain, sublevel};

#[derive(Clone, Debug)]
pub struct ContactClassReport {
    pub sublevel_homology: HomologyPresentation,
    pub status: ClassStatus,
    /// Inclusion of the sublevel generator, as a chain in the ambient
    /// complex; sign canonicalized (first nonzero coefficient positive).
    /// The class itself is only defined up to sign.
    pub representative: Chain,
}

fn sublevel_is_single_z(h: &HomologyPresentation, ring: CoeffRing) -> bool {
    match ring {
        CoeffRing::Z => h.free_rank == 1 && h.torsion.is_empty(),
        CoeffRing::Z2 => h.free_rank == 1,
    }
}

/// Contact class of the hat filtered complex of `(-Y, K)` for a fibered
/// knot of genus `g`. Errors with `FibrationHypothesisViolated` whenever
/// the input cannot be such a complex: alexander gradings outside
/// `[-g, g]`, an empty bottom sublevel, or bottom homology not Z.
pub fn contact_class(
    c: &HatFilteredComplex,
    genus: u32,
) -> Result<ContactClassReport, CfkError> {
    c.ensure_valid("contact_class")?;
    let g = genus as i64;
    for gen in &c.generators {
        if gen.alexander < -g || gen.alexander > g {
            return Err(CfkError::FibrationHypothesisViolated(format!(
                "generator {} has alexander grading {} outside [{}, {}]",
                gen.label, gen.alexander, -g, g
            )));
        }
    }

    let sub = sublevel(c, -g);
    if sub.generators.is_empty() {
        return Err(CfkError::FibrationHypothesisViolated(format!(
            "the sublevel at {} is empty",
            -g
        )));
    }
    let sub_h = HomologyEngine::new(&sub.differential(), sub.ring).presentation();
    if !sublevel_is_single_z(&sub_h, c.ring) {
        return Err(CfkError::FibrationHypothesisViolated(format!(
            "H(sublevel({})) has free rank {} and torsion {:?}, expected a single Z",
            -g, sub_h.free_rank, sub_h.torsion
        )));
    }

    let cycle = include_chain(&sub, c, &sub_h.basis_map[0])?;
    let engine = HomologyEngine::new(&c.differential(), c.ring);
    let status = engine.classify(&cycle.0);

    Ok(ContactClassReport {
        sublevel_homology: sub_h,
        status,
        representative: cycle.canonicalized(),
    })
}
