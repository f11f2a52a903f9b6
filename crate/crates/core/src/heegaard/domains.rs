//! Periodic-domain lattices and weak admissibility.
//!
//! A domain is periodic when its boundary follows whole attaching curves
//! (the per-point corner condition) and its multiplicity at the w-region
//! vanishes. The lattice of such domains is the integer kernel of the
//! stacked constraint system, reported in Hermite-reduced form.

use crate::linalg::{hermite_rows, kernel_basis, IntMat};

use super::diagram::{DiagramError, MeasuredDiagram, PeriodicDomain};

/// Deterministic basis of the periodic-domain lattice.
pub fn periodic_domains(d: &MeasuredDiagram) -> Result<Vec<PeriodicDomain>, DiagramError> {
    d.ensure_valid()?;
    let idx = d.index();
    let nregions = d.regions.len();
    let mut rows: Vec<Vec<i128>> = Vec::new();

    for p in &d.points {
        let mut row = vec![0i128; nregions];
        for (k, corner) in p.corners.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            row[idx.region[corner.as_str()]] += sign;
        }
        if row.iter().any(|&v| v != 0) {
            rows.push(row);
        }
    }
    let mut w_row = vec![0i128; nregions];
    w_row[idx.region[d.basepoint_w.as_str()]] = 1;
    rows.push(w_row);

    let constraints = IntMat::from_rows(rows);
    let kernel: Vec<Vec<i128>> = kernel_basis(&constraints);
    let reduced = hermite_rows(kernel);

    let basis: Vec<PeriodicDomain> = reduced
        .into_iter()
        .map(|row| PeriodicDomain { multiplicities: row.iter().map(|&v| v as i64).collect() })
        .collect();
    for dom in &basis {
        debug_assert!(d.domain_is_periodic(dom).is_ok());
    }
    Ok(basis)
}

#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// A nonzero periodic domain with multiplicities all of one sign,
    /// canonicalized non-negative; present exactly when not admissible.
    pub witness: Option<PeriodicDomain>,
    /// Half-width of the coefficient box searched over the lattice basis.
    pub search_box: i64,
    /// False when the combination cap truncated the search.
    pub exhausted: bool,
}

pub const DEFAULT_SEARCH_BOX: i64 = 3;
pub const DEFAULT_COMBINATION_CAP: usize = 2_000_000;

/// Weak admissibility for every Spin^c structure: every nontrivial
/// periodic domain must have both positive and negative multiplicities.
/// Checked over all basis combinations with coefficients in
/// `[-search_box, search_box]`, a semi-decision documented as such.
pub fn weak_admissibility(
    d: &MeasuredDiagram,
    search_box: i64,
    combination_cap: usize,
) -> Result<AdmissibilityReport, DiagramError> {
    let basis = periodic_domains(d)?;
    let rank = basis.len();
    if rank == 0 {
        return Ok(AdmissibilityReport {
            admissible: true,
            witness: None,
            search_box,
            exhausted: true,
        });
    }

    let one_signed = |mult: &[i64]| -> bool {
        let has_pos = mult.iter().any(|&m| m > 0);
        let has_neg = mult.iter().any(|&m| m < 0);
        let nonzero = has_pos || has_neg;
        nonzero && !(has_pos && has_neg)
    };

    let nregions = d.regions.len();
    let mut visited = 0usize;
    let mut exhausted = true;

    // shells of increasing sup-norm; within a shell, lexicographic order
    // with the sign canonicalized so the first nonzero coefficient is
    // positive
    'shells: for bound in 1..=search_box {
        let mut coeffs = vec![-bound; rank];
        loop {
            let on_shell = coeffs.iter().any(|&c| c.abs() == bound);
            let canonical = coeffs.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0);
            if on_shell && canonical {
                visited += 1;
                if visited > combination_cap {
                    exhausted = false;
                    break 'shells;
                }
                let mut mult = vec![0i64; nregions];
                for (c, dom) in coeffs.iter().zip(&basis) {
                    for (m, &dm) in mult.iter_mut().zip(&dom.multiplicities) {
                        *m += c * dm;
                    }
                }
                if one_signed(&mult) {
                    if mult.iter().any(|&m| m < 0) {
                        for m in &mut mult {
                            *m = -*m;
                        }
                    }
                    return Ok(AdmissibilityReport {
                        admissible: false,
                        witness: Some(PeriodicDomain { multiplicities: mult }),
                        search_box,
                        exhausted: true,
                    });
                }
            }
            // increment odometer
            let mut pos = rank;
            for i in (0..rank).rev() {
                if coeffs[i] < bound {
                    coeffs[i] += 1;
                    pos = i;
                    break;
                }
                coeffs[i] = -bound;
            }
            if pos == rank {
                break;
            }
        }
    }

    Ok(AdmissibilityReport { admissible: true, witness: None, search_box, exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    use crate::heegaard::diagram::Region;

    fn annulus_pair() -> MeasuredDiagram {
        // genus-2 surface: alpha and beta disjoint, each cutting off a
        // handle; the two handle regions support nonnegative domains.
        MeasuredDiagram {
            name: "annuli".into(),
            genus: 2,
            regions: vec![
                Region { id: "out".into(), euler_contribution: Rational64::from_integer(-2), corner_count: 0 },
                Region { id: "ha".into(), euler_contribution: Rational64::from_integer(0), corner_count: 0 },
                Region { id: "hb".into(), euler_contribution: Rational64::from_integer(0), corner_count: 0 },
            ],
            alpha_curves: vec!["alpha".into()],
            beta_curves: vec!["beta".into()],
            boundary: vec![
                ("ha".into(), "alpha".into(), 1),
                ("out".into(), "alpha".into(), -1),
                ("hb".into(), "beta".into(), 1),
                ("out".into(), "beta".into(), -1),
            ],
            points: vec![],
            basepoint_w: "out".into(),
            basepoint_z: "out".into(),
        }
    }

    #[test]
    fn disjoint_curves_give_torus_domains() {
        let d = annulus_pair();
        assert!(d.validate().is_valid());
        let basis = periodic_domains(&d).unwrap();
        // w pins "out" to zero; the two handle regions are free
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].multiplicities, vec![0, 1, 0]);
        assert_eq!(basis[1].multiplicities, vec![0, 0, 1]);
        let report = weak_admissibility(&d, 3, 100_000).unwrap();
        assert!(!report.admissible);
        let witness = report.witness.unwrap();
        assert!(witness.multiplicities.iter().all(|&m| m >= 0));
    }

    #[test]
    fn empty_lattice_is_vacuously_admissible() {
        let d = super::super::diagram::tests::square_torus();
        let basis = periodic_domains(&d).unwrap();
        assert!(basis.is_empty());
        let report = weak_admissibility(&d, 3, 100_000).unwrap();
        assert!(report.admissible);
        assert!(report.witness.is_none());
    }

    #[test]
    fn lattice_is_closed_under_scaling() {
        let d = annulus_pair();
        let basis = periodic_domains(&d).unwrap();
        let doubled: Vec<i64> = basis[0].multiplicities.iter().map(|m| 2 * m).collect();
        let rows: Vec<Vec<i128>> = basis
            .iter()
            .map(|b| b.multiplicities.iter().map(|&m| m as i128).collect())
            .collect();
        let target: Vec<i128> = doubled.iter().map(|&m| m as i128).collect();
        assert!(crate::linalg::solve_in_row_lattice(&rows, &target).is_some());
    }
}
