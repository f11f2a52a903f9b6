//! Structural operations on filtered complexes: sublevels, mirror duals,
//! the hat column of a bifiltered complex, filtered tensor products, and
//! the associated graded pieces.

use super::complex::{
    Arrow, BifilteredComplex, CfkError, Chain, HatFilteredComplex,
};
use super::homology::{HomologyEngine, HomologyPresentation};

/// Full subcomplex on generators with alexander grading <= m. Closure
/// under the differential is automatic because arrows never raise the
/// filtration.
pub fn sublevel(c: &HatFilteredComplex, m: i64) -> HatFilteredComplex {
    let mut kept = Vec::new();
    let mut index_map = vec![usize::MAX; c.generators.len()];
    for (idx, g) in c.generators.iter().enumerate() {
        if g.alexander <= m {
            index_map[idx] = kept.len();
            kept.push(g.clone());
        }
    }
    let arrows = c
        .arrows
        .iter()
        .filter(|a| index_map[a.src] != usize::MAX && index_map[a.dst] != usize::MAX)
        .map(|a| Arrow { src: index_map[a.src], dst: index_map[a.dst], coeff: a.coeff })
        .collect();
    HatFilteredComplex {
        name: format!("{}_le{}", c.name, m),
        ring: c.ring,
        generators: kept,
        arrows,
    }
}

/// Mirror dual: same generators starred, all arrows reversed with the
/// same coefficient, home positions negated. Maslov gradings negate so
/// that the differential still drops them by one.
pub fn mirror_dual(c: &BifilteredComplex) -> BifilteredComplex {
    BifilteredComplex {
        name: format!("{}_dual", c.name),
        ring: c.ring,
        generators: c
            .generators
            .iter()
            .map(|g| super::complex::BiGenerator {
                label: format!("{}*", g.label),
                i: -g.i,
                j: -g.j,
                maslov: g.maslov.map(|m| -m),
            })
            .collect(),
        arrows: c
            .arrows
            .iter()
            .map(|a| Arrow { src: a.dst, dst: a.src, coeff: a.coeff })
            .collect(),
    }
}

/// The i = 0 column: generators carry over with alexander grading
/// `j - i`; an arrow survives exactly when it preserves the i-filtration
/// (n_w = 0).
pub fn hat_column(c: &BifilteredComplex) -> HatFilteredComplex {
    HatFilteredComplex {
        name: format!("{}_hat", c.name),
        ring: c.ring,
        generators: c
            .generators
            .iter()
            .map(|g| super::complex::HatGenerator {
                label: g.label.clone(),
                alexander: g.j - g.i,
                maslov: g.maslov,
            })
            .collect(),
        arrows: c
            .arrows
            .iter()
            .filter(|a| c.generators[a.src].i == c.generators[a.dst].i)
            .copied()
            .collect(),
    }
}

/// Filtered tensor product: generators are pairs with alexander gradings
/// added, and the differential follows the graded product rule
/// `D(x (x) y) = Dx (x) y + (-1)^{|x|} x (x) Dy`. The sign parity is the
/// maslov grading when present and the generator's file-order index
/// otherwise; over Z/2 signs are irrelevant.
pub fn tensor_filtered(
    a: &HatFilteredComplex,
    b: &HatFilteredComplex,
) -> Result<HatFilteredComplex, CfkError> {
    if a.ring != b.ring {
        return Err(CfkError::RingMismatch(a.ring, b.ring));
    }
    a.ensure_valid("tensor_filtered")?;
    b.ensure_valid("tensor_filtered")?;

    let nb = b.generators.len();
    let pair_index = |ia: usize, ib: usize| ia * nb + ib;

    let mut out = HatFilteredComplex::new(format!("{}_x_{}", a.name, b.name), a.ring);
    for ga in &a.generators {
        for gb in &b.generators {
            let maslov = match (ga.maslov, gb.maslov) {
                (Some(ma), Some(mb)) => Some(ma + mb),
                _ => None,
            };
            out.add_generator(
                format!("{}.{}", ga.label, gb.label),
                ga.alexander + gb.alexander,
                maslov,
            );
        }
    }
    for arrow in &a.arrows {
        for ib in 0..nb {
            out.arrows.push(Arrow {
                src: pair_index(arrow.src, ib),
                dst: pair_index(arrow.dst, ib),
                coeff: arrow.coeff,
            });
        }
    }
    for (ia, _) in a.generators.iter().enumerate() {
        let sign = if a.parity(ia) == 1 { -1 } else { 1 };
        for arrow in &b.arrows {
            out.arrows.push(Arrow {
                src: pair_index(ia, arrow.src),
                dst: pair_index(ia, arrow.dst),
                coeff: sign * arrow.coeff,
            });
        }
    }

    let report = out.validate();
    if !report.is_valid() {
        if report.violations.iter().any(|v| v.contains("D^2")) {
            return Err(CfkError::TensorSigns);
        }
        return Err(CfkError::Invalid {
            name: out.name.clone(),
            first: report.violations[0].clone(),
        });
    }
    Ok(out)
}

/// One associated-graded level: the generators at a fixed alexander
/// grading with only the filtration-preserving arrows, plus its homology.
pub struct GradedLevel {
    pub level: i64,
    pub complex: HatFilteredComplex,
    pub homology: HomologyPresentation,
}

/// Associated graded complex, one level per alexander grading present,
/// in descending order.
pub fn associated_graded(c: &HatFilteredComplex) -> Vec<GradedLevel> {
    let mut levels: Vec<i64> = c.generators.iter().map(|g| g.alexander).collect();
    levels.sort_unstable();
    levels.dedup();
    levels.reverse();

    levels
        .into_iter()
        .map(|level| {
            let mut kept = Vec::new();
            let mut index_map = vec![usize::MAX; c.generators.len()];
            for (idx, g) in c.generators.iter().enumerate() {
                if g.alexander == level {
                    index_map[idx] = kept.len();
                    kept.push(g.clone());
                }
            }
            let arrows: Vec<Arrow> = c
                .arrows
                .iter()
                .filter(|a| index_map[a.src] != usize::MAX && index_map[a.dst] != usize::MAX)
                .map(|a| Arrow { src: index_map[a.src], dst: index_map[a.dst], coeff: a.coeff })
                .collect();
            let complex = HatFilteredComplex {
                name: format!("{}_gr{}", c.name, level),
                ring: c.ring,
                generators: kept,
                arrows,
            };
            let homology = HomologyEngine::new(&complex.differential(), complex.ring).presentation();
            GradedLevel { level, complex, homology }
        })
        .collect()
}

/// Homology of a complex that is already known to validate.
pub fn homology(c: &HatFilteredComplex) -> Result<HomologyPresentation, CfkError> {
    c.ensure_valid("homology")?;
    Ok(HomologyEngine::new(&c.differential(), c.ring).presentation())
}

pub fn homology_bifiltered(c: &BifilteredComplex) -> Result<HomologyPresentation, CfkError> {
    c.ensure_valid("homology")?;
    Ok(HomologyEngine::new(&c.differential(), c.ring).presentation())
}

/// Embed a chain of a sublevel complex back into the ambient complex by
/// matching labels.
pub fn include_chain(
    sub: &HatFilteredComplex,
    ambient: &HatFilteredComplex,
    chain: &Chain,
) -> Result<Chain, CfkError> {
    let mut out = vec![0i64; ambient.generators.len()];
    for (idx, &coeff) in chain.0.iter().enumerate() {
        if coeff == 0 {
            continue;
        }
        let label = &sub.generators[idx].label;
        let target = ambient
            .index_of(label)
            .ok_or_else(|| CfkError::UnknownLabel(label.clone()))?;
        out[target] = coeff;
    }
    Ok(Chain(out))
}
