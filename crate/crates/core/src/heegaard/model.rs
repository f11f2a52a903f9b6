//! The standard model diagram for the genus-g fibered knot with identity
//! monodromy: a doubled genus-g page gives a Heegaard surface of genus
//! 2g+1 carrying alpha curves alpha1..alpha{2g+1} and beta curves
//! lambda (the wound-off longitude), beta2..beta{2g+1}.
//!
//! The combinatorics is schematic: regions are the multiplicity zones of
//! the distinguished periodic domain P with boundary alpha1 + lambda —
//! the D' bigon at -1, the two neck regions holding the basepoints at 0,
//! zone A and its per-handle annuli at 1, the reflected zone at 2 — and
//! the corner layout around the winding points is chosen to reproduce
//! the aggregate values the construction pins down: euler measure -6g,
//! point measure 2g at the distinguished tuple, Chern value -2g there,
//! a unique minimizer, and weak admissibility.

use num_rational::Rational64;

use super::diagram::{
    DiagramError, GeneratorTuple, IntersectionPoint, MeasuredDiagram, PeriodicDomain, Region,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelVariant {
    /// Twice-wound longitude with the D' bigon; fully wound handles.
    /// The default, fully admissible diagram.
    TwiceWound,
    /// The last finger move undone: no D' region, winding points u, v
    /// only. Exposes the two generators at Chern value 2-2g.
    OnceWound,
    /// Twice-wound longitude but handles not yet wound: the per-handle
    /// torus domains are untied and one-signed, so the diagram is not
    /// weakly admissible.
    PreWinding,
}

impl ModelVariant {
    pub fn label(self) -> &'static str {
        match self {
            ModelVariant::TwiceWound => "model",
            ModelVariant::OnceWound => "model_once_wound",
            ModelVariant::PreWinding => "model_pre_winding",
        }
    }
}

/// The built diagram together with its distinguished data: the tuple
/// x' = x1 x x2 x ... x x{2g+1} and the Seifert-class periodic domain P.
pub struct ModelDiagram {
    pub fiber_genus: u32,
    pub variant: ModelVariant,
    pub diagram: MeasuredDiagram,
    pub distinguished: GeneratorTuple,
    pub seifert_domain: PeriodicDomain,
}

pub fn build_model_diagram(fiber_genus: u32, variant: ModelVariant) -> ModelDiagram {
    assert!(fiber_genus >= 1, "the model needs fiber genus >= 1");
    let g = fiber_genus;
    let handles: Vec<u32> = (2..=2 * g + 1).collect();

    // region order: zoneA, per-handle annuli, zoneAbar, reflected annuli,
    // (Dprime), neck_w, neck_z
    let mut regions: Vec<(String, Rational64, i64)> = Vec::new(); // (id, euler, P-multiplicity)
    regions.push(("zoneA".into(), Rational64::from_integer(-(g as i64)), 1));
    for &i in &handles {
        regions.push((format!("torusA{i}"), Rational64::new(-1, 2), 1));
    }
    regions.push(("zoneAbar".into(), Rational64::from_integer(-(g as i64)), 2));
    for &i in &handles {
        regions.push((format!("torusAbar{i}"), Rational64::new(-1, 2), 2));
    }
    if variant != ModelVariant::OnceWound {
        regions.push(("Dprime".into(), Rational64::from_integer(0), -1));
    }
    regions.push(("neck_w".into(), Rational64::from_integer(0), 0));
    regions.push(("neck_z".into(), Rational64::from_integer(0), 0));

    let alpha_curves: Vec<String> = (1..=2 * g + 1).map(|i| format!("alpha{i}")).collect();
    let mut beta_curves: Vec<String> = vec!["lambda".into()];
    beta_curves.extend(handles.iter().map(|i| format!("beta{i}")));

    let corner = |a: &str, b: &str, c: &str, d: &str| -> [String; 4] {
        [a.into(), b.into(), c.into(), d.into()]
    };

    let mut points: Vec<IntersectionPoint> = Vec::new();
    let winding = |id: &str, corners: [String; 4]| IntersectionPoint {
        id: id.into(),
        alpha: "alpha1".into(),
        beta: "lambda".into(),
        corners,
    };
    match variant {
        ModelVariant::OnceWound => {
            points.push(winding("u", corner("neck_w", "zoneA", "zoneAbar", "zoneA")));
            points.push(winding("v", corner("neck_z", "zoneA", "zoneAbar", "zoneA")));
        }
        _ => {
            // x1 sits where the domain changes sign: its corner average
            // vanishes, which is what singles its tuple out below
            points.push(winding("x1", corner("Dprime", "neck_w", "zoneA", "neck_z")));
            points.push(winding("u", corner("neck_w", "zoneA", "zoneAbar", "zoneA")));
            points.push(winding("v", corner("neck_z", "zoneA", "zoneAbar", "zoneA")));
            points.push(winding("u'", corner("zoneA", "zoneAbar", "zoneA", "neck_w")));
            points.push(winding("v'", corner("zoneA", "zoneAbar", "zoneA", "neck_z")));
        }
    }
    for &i in &handles {
        let (xa, xb) = (format!("torusA{i}"), "zoneA".to_string());
        let corners = match variant {
            // wound handle: the annulus and the ambient zone alternate
            // around the crossing, tying their multiplicities together
            ModelVariant::TwiceWound | ModelVariant::OnceWound => {
                [xa.clone(), xb.clone(), xa.clone(), xb.clone()]
            }
            // unwound handle: the annulus engulfs the crossing
            ModelVariant::PreWinding => [xa.clone(), xa.clone(), xa.clone(), xa.clone()],
        };
        points.push(IntersectionPoint {
            id: format!("x{i}"),
            alpha: format!("alpha{i}"),
            beta: format!("beta{i}"),
            corners,
        });
    }
    for &i in &handles {
        let (xa, xb) = (format!("torusAbar{i}"), "zoneAbar".to_string());
        let corners = match variant {
            ModelVariant::TwiceWound | ModelVariant::OnceWound => {
                [xa.clone(), xb.clone(), xa.clone(), xb.clone()]
            }
            ModelVariant::PreWinding => [xa.clone(), xa.clone(), xa.clone(), xa.clone()],
        };
        points.push(IntersectionPoint {
            id: format!("xbar{i}"),
            alpha: format!("alpha{i}"),
            beta: format!("beta{i}"),
            corners,
        });
    }

    // reference-arc jumps: one +1/-1 pair per curve, so that m^T B reads
    // off the boundary of a domain in whole curves
    let mut boundary: Vec<(String, String, i64)> = vec![
        ("zoneA".into(), "alpha1".into(), 1),
        ("neck_w".into(), "alpha1".into(), -1),
        ("zoneAbar".into(), "lambda".into(), 1),
        ("zoneA".into(), "lambda".into(), -1),
    ];
    for &i in &handles {
        boundary.push((format!("torusA{i}"), format!("beta{i}"), 1));
        boundary.push(("zoneA".into(), format!("beta{i}"), -1));
        boundary.push((format!("torusAbar{i}"), format!("alpha{i}"), 1));
        boundary.push(("zoneAbar".into(), format!("alpha{i}"), -1));
    }

    // corner counts follow from the point list
    let mut counts: std::collections::HashMap<&str, u32> = std::collections::HashMap::new();
    for p in &points {
        for c in &p.corners {
            *counts.entry(c.as_str()).or_default() += 1;
        }
    }

    // the zone contributions absorb what the corner corrections leave
    // over, so that the totals below hold at every genus:
    //   sum of contributions = 2 - 2(2g+1)
    //   euler measure of P  = -6g
    let diagram = MeasuredDiagram {
        name: format!("{}_g{}", variant.label(), g),
        genus: 2 * g + 1,
        regions: regions
            .iter()
            .map(|(id, e, _)| Region {
                id: id.clone(),
                euler_contribution: *e,
                corner_count: counts.get(id.as_str()).copied().unwrap_or(0),
            })
            .collect(),
        alpha_curves,
        beta_curves,
        boundary,
        points,
        basepoint_w: "neck_w".into(),
        basepoint_z: "neck_z".into(),
    };

    let seifert_domain =
        PeriodicDomain { multiplicities: regions.iter().map(|(_, _, m)| *m).collect() };

    let first = if variant == ModelVariant::OnceWound { "u" } else { "x1" };
    let mut ids: Vec<String> = vec![first.into()];
    ids.extend(handles.iter().map(|i| format!("x{i}")));
    let distinguished = diagram.tuple_from_ids(&ids).expect("model tuple is a matching");

    debug_assert!(diagram.validate().is_valid(), "{}", diagram.validate());
    debug_assert!(diagram.domain_is_periodic(&seifert_domain).is_ok());

    ModelDiagram { fiber_genus: g, variant, diagram, distinguished, seifert_domain }
}

impl ModelDiagram {
    /// Chern evaluation at the distinguished tuple.
    pub fn distinguished_chern(&self) -> Result<i64, DiagramError> {
        super::diagram::chern_evaluation(&self.diagram, &self.distinguished, &self.seifert_domain)
    }
}
