//! Combinatorial pointed Heegaard diagrams.
//!
//! A diagram is a region list with rational Euler contributions and
//! corner counts, attaching curves, a sparse region-by-curve boundary
//! matrix, intersection points with their four adjacent region corners in
//! cyclic order, and the two basepoint regions. The Euler contribution of
//! a region is chi(region) - corners/4, so the contributions over all
//! regions reconstruct chi of the surface.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub id: String,
    /// chi(region) - corner_count/4, exact with denominator dividing 4.
    pub euler_contribution: Rational64,
    pub corner_count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub id: String,
    pub alpha: String,
    pub beta: String,
    /// Adjacent region ids in cyclic order; opposite entries are the two
    /// diagonal pairs.
    pub corners: [String; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasuredDiagram {
    pub name: String,
    /// Genus of the Heegaard surface.
    pub genus: u32,
    pub regions: Vec<Region>,
    pub alpha_curves: Vec<String>,
    pub beta_curves: Vec<String>,
    /// Sparse signed boundary multiplicities (region, curve, multiplicity).
    pub boundary: Vec<(String, String, i64)>,
    pub points: Vec<IntersectionPoint>,
    pub basepoint_w: String,
    pub basepoint_z: String,
}

/// Integer multiplicity per region, in diagram region order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicDomain {
    pub multiplicities: Vec<i64>,
}

/// One intersection point per alpha curve, on pairwise distinct beta
/// curves; stored as indices into the diagram's point list, in alpha
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTuple {
    pub points: Vec<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum DiagramError {
    #[error("diagram `{name}` fails validation: {first}")]
    Invalid { name: String, first: String },
    #[error("unknown {kind} id `{id}`")]
    UnknownId { kind: &'static str, id: String },
    #[error("domain has {got} multiplicities, diagram has {want} regions")]
    DomainLength { want: usize, got: usize },
    #[error("domain is not periodic: {0}")]
    NotPeriodic(String),
    #[error("chern evaluation is not an integer ({0}); corner data is malformed")]
    NonIntegralChern(Rational64),
    #[error("tuple is not a perfect matching: {0}")]
    BadTuple(String),
    #[error("generator tuple count exceeds the cap of {0}")]
    TupleCapExceeded(usize),
}

pub use crate::cfk::ValidationReport;

/// Index maps rebuilt on demand; diagrams are small.
pub(crate) struct DiagramIndex {
    pub region: HashMap<String, usize>,
}

impl MeasuredDiagram {
    pub(crate) fn index(&self) -> DiagramIndex {
        let region = self
            .regions
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id.clone(), i))
            .collect();
        DiagramIndex { region }
    }

    pub fn region_index(&self, id: &str) -> Option<usize> {
        self.regions.iter().position(|r| r.id == id)
    }

    pub fn point_index(&self, id: &str) -> Option<usize> {
        self.points.iter().position(|p| p.id == id)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let idx = self.index();

        let mut seen = std::collections::HashSet::new();
        for r in &self.regions {
            if !seen.insert(&r.id) {
                violations.push(format!("duplicate region id `{}`", r.id));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for c in self.alpha_curves.iter().chain(&self.beta_curves) {
            if !seen.insert(c) {
                violations.push(format!("duplicate curve id `{c}`"));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for p in &self.points {
            if !seen.insert(&p.id) {
                violations.push(format!("duplicate point id `{}`", p.id));
            }
        }

        // every point lies on exactly one alpha and one beta
        for p in &self.points {
            if !self.alpha_curves.contains(&p.alpha) {
                violations.push(format!("point {} lies on unknown alpha `{}`", p.id, p.alpha));
            }
            if !self.beta_curves.contains(&p.beta) {
                violations.push(format!("point {} lies on unknown beta `{}`", p.id, p.beta));
            }
            for c in &p.corners {
                if !idx.region.contains_key(c) {
                    violations.push(format!("point {} has unknown corner region `{c}`", p.id));
                }
            }
        }

        // Euler characteristic reconstructed from the contributions
        let total: Rational64 = self.regions.iter().map(|r| r.euler_contribution).sum();
        let expected = Rational64::from_integer(2 - 2 * self.genus as i64);
        if total != expected {
            violations.push(format!(
                "euler contributions sum to {total}, expected chi = {expected} for genus {}",
                self.genus
            ));
        }

        // corner bookkeeping: the declared corner counts match the points
        let mut counted: HashMap<&str, u32> = HashMap::new();
        for p in &self.points {
            for c in &p.corners {
                *counted.entry(c.as_str()).or_default() += 1;
            }
        }
        for r in &self.regions {
            let have = counted.get(r.id.as_str()).copied().unwrap_or(0);
            if have != r.corner_count {
                violations.push(format!(
                    "region {} declares {} corners but points attach {have}",
                    r.id, r.corner_count
                ));
            }
        }

        // closed-curve condition: signed multiplicities cancel per curve
        let mut col_sum: HashMap<&str, i64> = HashMap::new();
        for (region, curve, mult) in &self.boundary {
            if !idx.region.contains_key(region) {
                violations.push(format!("boundary row names unknown region `{region}`"));
            }
            if !self.alpha_curves.contains(curve) && !self.beta_curves.contains(curve) {
                violations.push(format!("boundary row names unknown curve `{curve}`"));
            }
            *col_sum.entry(curve.as_str()).or_default() += mult;
        }
        for curve in self.alpha_curves.iter().chain(&self.beta_curves) {
            let sum = col_sum.get(curve.as_str()).copied().unwrap_or(0);
            if sum != 0 {
                violations.push(format!(
                    "boundary multiplicities along {curve} sum to {sum}, not 0"
                ));
            }
        }

        for (kind, id) in [("w", &self.basepoint_w), ("z", &self.basepoint_z)] {
            if !idx.region.contains_key(id) {
                violations.push(format!("basepoint {kind} names unknown region `{id}`"));
            }
        }

        ValidationReport { subject: format!("diagram {}", self.name), violations }
    }

    pub fn ensure_valid(&self) -> Result<(), DiagramError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(DiagramError::Invalid {
                name: self.name.clone(),
                first: report.violations[0].clone(),
            })
        }
    }

    /// The per-point corner condition for a domain: opposite corners sum
    /// equally, which says the boundary follows whole attaching curves.
    pub fn domain_is_periodic(&self, domain: &PeriodicDomain) -> Result<(), DiagramError> {
        if domain.multiplicities.len() != self.regions.len() {
            return Err(DiagramError::DomainLength {
                want: self.regions.len(),
                got: domain.multiplicities.len(),
            });
        }
        let idx = self.index();
        let m = |id: &str| domain.multiplicities[idx.region[id]];
        let w = self
            .region_index(&self.basepoint_w)
            .ok_or_else(|| DiagramError::UnknownId { kind: "region", id: self.basepoint_w.clone() })?;
        if domain.multiplicities[w] != 0 {
            return Err(DiagramError::NotPeriodic(format!(
                "multiplicity {} at the w-region {}",
                domain.multiplicities[w], self.basepoint_w
            )));
        }
        for p in &self.points {
            let diag0 = m(&p.corners[0]) + m(&p.corners[2]);
            let diag1 = m(&p.corners[1]) + m(&p.corners[3]);
            if diag0 != diag1 {
                return Err(DiagramError::NotPeriodic(format!(
                    "corner condition fails at point {}: {diag0} != {diag1}",
                    p.id
                )));
            }
        }
        Ok(())
    }

    /// Signed multiplicity of every curve in the boundary of the domain,
    /// in (alpha, beta) curve order; zero entries skipped.
    pub fn domain_boundary(&self, domain: &PeriodicDomain) -> Vec<(String, i64)> {
        let idx = self.index();
        let mut out = Vec::new();
        for curve in self.alpha_curves.iter().chain(&self.beta_curves) {
            let mut total = 0i64;
            for (region, c, mult) in &self.boundary {
                if c == curve {
                    total += domain.multiplicities[idx.region[region]] * mult;
                }
            }
            if total != 0 {
                out.push((curve.clone(), total));
            }
        }
        out
    }
}

/// Multiplicity-weighted Euler measure of a domain.
pub fn euler_measure(d: &MeasuredDiagram, domain: &PeriodicDomain) -> Rational64 {
    d.regions
        .iter()
        .zip(&domain.multiplicities)
        .map(|(r, &m)| r.euler_contribution * Rational64::from_integer(m))
        .sum()
}

/// Point measure of a tuple: over its coordinates, the average of the
/// four adjacent local multiplicities.
pub fn point_measure(
    d: &MeasuredDiagram,
    tuple: &GeneratorTuple,
    domain: &PeriodicDomain,
) -> Rational64 {
    let idx = d.index();
    let mut total = Rational64::from_integer(0);
    for &pi in &tuple.points {
        let p = &d.points[pi];
        let sum: i64 = p
            .corners
            .iter()
            .map(|c| domain.multiplicities[idx.region[c.as_str()]])
            .sum();
        total += Rational64::new(sum, 4);
    }
    total
}

/// First-Chern-class evaluation against the class the domain represents:
/// euler measure plus twice the point measure. Must be an integer; a
/// fractional result flags malformed corner data.
pub fn chern_evaluation(
    d: &MeasuredDiagram,
    tuple: &GeneratorTuple,
    domain: &PeriodicDomain,
) -> Result<i64, DiagramError> {
    let value = euler_measure(d, domain) + Rational64::from_integer(2) * point_measure(d, tuple, domain);
    if !value.is_integer() {
        return Err(DiagramError::NonIntegralChern(value));
    }
    Ok(value.to_integer())
}

impl MeasuredDiagram {
    /// Resolve point ids into a tuple, checking the matching condition.
    pub fn tuple_from_ids(&self, ids: &[String]) -> Result<GeneratorTuple, DiagramError> {
        let mut points = Vec::new();
        for id in ids {
            let pi = self
                .point_index(id)
                .ok_or_else(|| DiagramError::UnknownId { kind: "point", id: id.clone() })?;
            points.push(pi);
        }
        let tuple = GeneratorTuple { points };
        self.check_tuple(&tuple)?;
        Ok(tuple)
    }

    pub fn check_tuple(&self, tuple: &GeneratorTuple) -> Result<(), DiagramError> {
        if tuple.points.len() != self.alpha_curves.len() {
            return Err(DiagramError::BadTuple(format!(
                "{} coordinates for {} alpha curves",
                tuple.points.len(),
                self.alpha_curves.len()
            )));
        }
        let mut alphas = std::collections::HashSet::new();
        let mut betas = std::collections::HashSet::new();
        for &pi in &tuple.points {
            let p = &self.points[pi];
            if !alphas.insert(&p.alpha) {
                return Err(DiagramError::BadTuple(format!("alpha {} used twice", p.alpha)));
            }
            if !betas.insert(&p.beta) {
                return Err(DiagramError::BadTuple(format!("beta {} used twice", p.beta)));
            }
        }
        Ok(())
    }

    pub fn tuple_ids(&self, tuple: &GeneratorTuple) -> Vec<String> {
        tuple.points.iter().map(|&pi| self.points[pi].id.clone()).collect()
    }
}

impl fmt::Display for PeriodicDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.multiplicities)
    }
}
