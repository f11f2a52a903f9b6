#![allow(clippy::needless_range_loop)]

//! Property suites over random words, complexes and diagrams. Random
//! instances come from seeded generators in `common`, driven by proptest
//! through the seed, so failures shrink to a reproducible seed.

mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use floerkit::cfk::{
    associated_graded, contact_class, hat_column, mirror_dual, sublevel, tensor_filtered,
    CoeffRing, HomologyEngine,
};
use floerkit::fixtures;
use floerkit::heegaard::{
    build_model_diagram, euler_measure, periodic_domains, point_measure, weak_admissibility,
    MeasuredDiagram, ModelVariant, PeriodicDomain,
};
use floerkit::mcg::{
    braid_normal_form, giroux_stabilize, homological_action, is_positive, words_equal, OpenBook,
    Positivity, TwistWord, WordsEqual,
};

fn rng_of(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_decides_equality(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let len1 = rng.random_range(0..=14);
        let w1 = common::random_word(&mut rng, 1, len1);
        let len2 = rng.random_range(0..=14);
        let w2 = common::random_word(&mut rng, 1, len2);

        let n1 = braid_normal_form(&w1).unwrap();
        if n1.is_positive() {
            let again = braid_normal_form(&n1.positive_word()).unwrap();
            prop_assert_eq!(&n1, &again);
        }

        let n2 = braid_normal_form(&w2).unwrap();
        let verdict = words_equal(&w1, &w2).unwrap();
        prop_assert_eq!(verdict == WordsEqual::Equal, n1 == n2);
    }

    #[test]
    fn word_times_inverse_is_trivial(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let len = rng.random_range(0..=60);
        let w = common::random_word(&mut rng, 1, len);
        let nf = braid_normal_form(&w.concat(&w.inverse()).unwrap()).unwrap();
        prop_assert!(nf.is_trivial(), "{}", w);
    }

    #[test]
    fn braid_equality_implies_equal_action(seed in any::<u64>()) {
        // the transvection representation factors through the braid group
        let mut rng = rng_of(seed);
        let len1 = rng.random_range(0..=12);
        let w1 = common::random_word(&mut rng, 1, len1);
        let len2 = rng.random_range(0..=12);
        let w2 = common::random_word(&mut rng, 1, len2);
        if words_equal(&w1, &w2).unwrap() == WordsEqual::Equal {
            prop_assert_eq!(homological_action(&w1), homological_action(&w2));
        }
    }

    #[test]
    fn smith_form_agrees_with_minor_oracle(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let rows = rng.random_range(1..=5);
        let cols = rng.random_range(1..=5);
        let m: Vec<Vec<i128>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.random_range(-6..=6)).collect())
            .collect();
        let sm = floerkit::linalg::smith(&floerkit::linalg::IntMat::from_rows(m.clone()));
        prop_assert_eq!(sm.rank, common::oracle_rank_q(&m));
        let factors: Vec<i128> = sm.diag.iter().copied().filter(|&d| d != 0).collect();
        prop_assert_eq!(factors, common::oracle_invariant_factors(&m));
    }

    #[test]
    fn hermite_basis_ignores_generator_order(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let rows = rng.random_range(1..=5);
        let cols = rng.random_range(1..=5);
        let mut m: Vec<Vec<i128>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.random_range(-4..=4)).collect())
            .collect();
        let base = floerkit::linalg::hermite_rows(m.clone());
        for i in (1..m.len()).rev() {
            let j = rng.random_range(0..=i);
            m.swap(i, j);
        }
        prop_assert_eq!(floerkit::linalg::hermite_rows(m), base);
    }

    #[test]
    fn central_full_twist_commutes(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let len = rng.random_range(0..=10);
        let w = common::random_word(&mut rng, 1, len);
        let central = TwistWord::parse_with_genus("(b a)^6", 1).unwrap();
        let left = central.concat(&w).unwrap();
        let right = w.concat(&central).unwrap();
        prop_assert_eq!(words_equal(&left, &right).unwrap(), WordsEqual::Equal);
    }

    #[test]
    fn positivity_is_monoid_closed(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let len1 = rng.random_range(0..=8);
        let w1 = common::random_word(&mut rng, 1, len1);
        let len2 = rng.random_range(0..=8);
        let w2 = common::random_word(&mut rng, 1, len2);
        let certified = |w: &TwistWord| {
            matches!(
                is_positive(w).unwrap(),
                Positivity::PositiveSyntactic | Positivity::PositiveWithWitness(_)
            )
        };
        if certified(&w1) && certified(&w2) {
            prop_assert!(certified(&w1.concat(&w2).unwrap()));
        }
    }

    #[test]
    fn action_is_symplectic_homomorphism(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let genus = rng.random_range(1..=4);
        let len1 = rng.random_range(0..=20);
        let w1 = common::random_word(&mut rng, genus, len1);
        let len2 = rng.random_range(0..=20);
        let w2 = common::random_word(&mut rng, genus, len2);
        prop_assert!(floerkit::mcg::is_symplectic(&homological_action(&w1), genus));
        let cat = w1.concat(&w2).unwrap();
        let prod = mat_mul(&homological_action(&w1), &homological_action(&w2));
        prop_assert_eq!(homological_action(&cat), prod);
    }

    #[test]
    fn stabilization_acts_block_diagonally(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let genus = rng.random_range(1..=3);
        let len = rng.random_range(0..=12);
        let w = common::random_word(&mut rng, genus, len);
        let ob = OpenBook::new(genus, w.clone()).unwrap();
        let st = giroux_stabilize(&ob);
        prop_assert!(st.monodromy.letters.len() == w.letters.len() + 1);

        let small = homological_action(&w);
        let big = homological_action(&st.monodromy);
        let n = 2 * genus as usize;
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(big[i][j], small[i][j]);
            }
        }
        // off-diagonal blocks vanish; the new handle carries one twist
        for i in 0..n {
            for j in n..n + 2 {
                prop_assert_eq!(big[i][j], 0);
                prop_assert_eq!(big[j][i], 0);
            }
        }
        prop_assert_eq!(
            [[big[n][n], big[n][n + 1]], [big[n + 1][n], big[n + 1][n + 1]]],
            [[1, -1], [0, 1]]
        );
    }

    #[test]
    fn complex_operations_preserve_validity(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let ring = if rng.random_bool(0.5) { CoeffRing::Z } else { CoeffRing::Z2 };
        let c = common::random_hat_complex(&mut rng, "rand", ring, 3, 3);

        let m = rng.random_range(-4..=4);
        prop_assert!(sublevel(&c, m).validate().is_valid());

        let graded = associated_graded(&c);
        let total: usize = graded.iter().map(|l| l.complex.generators.len()).sum();
        prop_assert_eq!(total, c.generators.len());
        for level in &graded {
            prop_assert!(level.complex.validate().is_valid());
        }

        if ring == CoeffRing::Z2 {
            let d = common::random_hat_complex(&mut rng, "rand2", ring, 2, 2);
            let t = tensor_filtered(&c, &d).unwrap();
            prop_assert!(t.validate().is_valid());
            prop_assert_eq!(t.generators.len(), c.generators.len() * d.generators.len());
        }
    }

    #[test]
    fn kunneth_over_z2_on_random_pairs(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let a = common::random_hat_complex(&mut rng, "a", CoeffRing::Z2, 2, 2);
        let b = common::random_hat_complex(&mut rng, "b", CoeffRing::Z2, 2, 2);
        let t = tensor_filtered(&a, &b).unwrap();
        let rank = |c: &floerkit::cfk::HatFilteredComplex| {
            HomologyEngine::new(&c.differential(), c.ring).presentation().free_rank
        };
        prop_assert_eq!(rank(&t), rank(&a) * rank(&b));
        prop_assert_eq!(rank(&t), common::oracle_betti_f2(&common::differential_rows(&t)));
    }

    #[test]
    fn cfk_text_round_trips_random_complexes(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let ring = if rng.random_bool(0.5) { CoeffRing::Z } else { CoeffRing::Z2 };
        let c = common::random_hat_complex(&mut rng, "roundtrip", ring, 3, 3);
        let text = floerkit::io::emit_cfk_hat(&c);
        let parsed = floerkit::io::parse_cfk(&text).unwrap();
        prop_assert_eq!(parsed.to_string(), text);
        match parsed {
            floerkit::io::ParsedComplex::Hat(back) => prop_assert_eq!(back, c),
            _ => prop_assert!(false),
        }
    }

    #[test]
    fn measures_are_linear_in_the_domain(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let g = rng.random_range(1..=2);
        let m = build_model_diagram(g, ModelVariant::PreWinding);
        let basis = periodic_domains(&m.diagram).unwrap();
        let combine = |coeffs: &[i64]| -> PeriodicDomain {
            let mut mult = vec![0i64; m.diagram.regions.len()];
            for (c, dom) in coeffs.iter().zip(&basis) {
                for (slot, &v) in mult.iter_mut().zip(&dom.multiplicities) {
                    *slot += c * v;
                }
            }
            PeriodicDomain { multiplicities: mult }
        };
        let c1: Vec<i64> = (0..basis.len()).map(|_| rng.random_range(-2..=2)).collect();
        let c2: Vec<i64> = (0..basis.len()).map(|_| rng.random_range(-2..=2)).collect();
        let sum: Vec<i64> = c1.iter().zip(&c2).map(|(a, b)| a + b).collect();
        let (d1, d2, ds) = (combine(&c1), combine(&c2), combine(&sum));
        prop_assert!(m.diagram.domain_is_periodic(&ds).is_ok());
        prop_assert_eq!(
            euler_measure(&m.diagram, &ds),
            euler_measure(&m.diagram, &d1) + euler_measure(&m.diagram, &d2)
        );
        prop_assert_eq!(
            point_measure(&m.diagram, &m.distinguished, &ds),
            point_measure(&m.diagram, &m.distinguished, &d1)
                + point_measure(&m.diagram, &m.distinguished, &d2)
        );
    }

    #[test]
    fn admissibility_is_relabeling_invariant(seed in any::<u64>()) {
        let mut rng = rng_of(seed);
        let g = rng.random_range(1..=2);
        let variant = if rng.random_bool(0.5) {
            ModelVariant::TwiceWound
        } else {
            ModelVariant::PreWinding
        };
        let m = build_model_diagram(g, variant);
        let base = weak_admissibility(&m.diagram, 3, 500_000).unwrap().admissible;
        let shuffled = shuffle_regions(&mut rng, &m.diagram);
        prop_assert!(shuffled.validate().is_valid());
        let relabeled = weak_admissibility(&shuffled, 3, 500_000).unwrap().admissible;
        prop_assert_eq!(base, relabeled);
    }
}

/// Inclusion naturality: pushing the bottom-sublevel generator through
/// any intermediate sublevel gives the same classification in the full
/// complex.
#[test]
fn contact_class_factors_through_intermediate_sublevels() {
    for (c, g) in fixtures::fibered_hat_fixtures() {
        let direct = contact_class(&c, g).unwrap();
        let bottom = sublevel(&c, -(g as i64));
        let bottom_h = HomologyEngine::new(&bottom.differential(), bottom.ring).presentation();
        let cycle_in_bottom = &bottom_h.basis_map[0];

        let full_engine = HomologyEngine::new(&c.differential(), c.ring);
        for m in -(g as i64)..=(g as i64) {
            let mid = sublevel(&c, m);
            let in_mid =
                floerkit::cfk::include_chain(&bottom, &mid, cycle_in_bottom).unwrap();
            let mid_engine = HomologyEngine::new(&mid.differential(), mid.ring);
            let representative = mid_engine.reduce_cycle(&in_mid.0);
            // a representative chosen inside the intermediate sublevel
            // classifies identically in the full complex
            let moved = floerkit::cfk::include_chain(&mid, &c, &representative).unwrap();
            let direct_cycle =
                floerkit::cfk::include_chain(&bottom, &c, cycle_in_bottom).unwrap();
            assert_eq!(
                full_engine.classify(&moved.0),
                full_engine.classify(&direct_cycle.0),
                "{} at intermediate level {m}",
                c.name
            );
            assert_eq!(full_engine.classify(&direct_cycle.0), direct.status);
        }
    }
}

/// The dual route to the left-handed fixture: hat of the mirror of the
/// right trefoil classifies like the checked-in left-shaped fixture.
#[test]
fn mirror_route_matches_fixture_classification() {
    let via_mirror = hat_column(&mirror_dual(&fixtures::trefoil_right()));
    let a = contact_class(&via_mirror, 1).unwrap();
    let b = contact_class(&fixtures::trefoil_right_dual_hat(), 1).unwrap();
    assert_eq!(a.status, b.status);

    let back = mirror_dual(&mirror_dual(&fixtures::trefoil_right()));
    let c = contact_class(&hat_column(&back), 1).unwrap();
    let d = contact_class(&hat_column(&fixtures::trefoil_right()), 1).unwrap();
    assert_eq!(c.status, d.status);
}

/// Four-fold stabilization: the tensor fourth power of the right-trefoil
/// dual still carries a primitive class at genus 4, and one left factor
/// kills it.
#[test]
fn higher_tensor_powers_classify_correctly() {
    let right = fixtures::trefoil_right_dual_hat();
    let sq = tensor_filtered(&right, &right).unwrap();
    let quad = tensor_filtered(&sq, &sq).unwrap();
    assert_eq!(quad.generators.len(), 81);
    assert_eq!(contact_class(&quad, 4).unwrap().status, floerkit::cfk::ClassStatus::Primitive);

    let left = fixtures::trefoil_left_dual_hat();
    let spoiled = tensor_filtered(&sq, &tensor_filtered(&right, &left).unwrap()).unwrap();
    assert_eq!(contact_class(&spoiled, 4).unwrap().status, floerkit::cfk::ClassStatus::Zero);
}

#[test]
fn periodic_domains_vanish_at_w() {
    for variant in [ModelVariant::TwiceWound, ModelVariant::OnceWound, ModelVariant::PreWinding] {
        for g in 1..=2 {
            let m = build_model_diagram(g, variant);
            let w = m.diagram.region_index(&m.diagram.basepoint_w).unwrap();
            for dom in periodic_domains(&m.diagram).unwrap() {
                assert_eq!(dom.multiplicities[w], 0);
            }
        }
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

/// Permute regions (and nothing else semantic) to exercise relabeling
/// invariance.
fn shuffle_regions(rng: &mut StdRng, d: &MeasuredDiagram) -> MeasuredDiagram {
    let n = d.regions.len();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    let mut out = d.clone();
    out.regions = perm.iter().map(|&i| d.regions[i].clone()).collect();
    out
}
