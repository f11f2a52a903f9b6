//! The standard fixture complexes and monodromies: the unknot, the two
//! trefoils, their mirror-dual hat columns and tensor squares, and the
//! three genus-1 fibered monodromies. The checked-in fixture files under
//! `fixtures/` are emissions of these builders; a test keeps them in
//! sync.

use crate::cfk::{
    hat_column, mirror_dual, tensor_filtered, BifilteredComplex, CoeffRing, HatFilteredComplex,
};
use crate::mcg::TwistWord;

/// CFK-infinity of the unknot: one generator at the origin.
pub fn unknot() -> BifilteredComplex {
    let mut c = BifilteredComplex::new("unknot", CoeffRing::Z);
    c.add_generator("x", 0, 0, Some(0));
    c
}

pub fn unknot_hat() -> HatFilteredComplex {
    let mut c = HatFilteredComplex::new("unknot_hat", CoeffRing::Z);
    c.add_generator("x", 0, Some(0));
    c
}

/// CFK-infinity of the right-handed trefoil: x@(-1,0), y@(0,-1), z@(0,0)
/// with dz = x + y.
pub fn trefoil_right() -> BifilteredComplex {
    let mut c = BifilteredComplex::new("trefoil_right", CoeffRing::Z);
    c.add_generator("x", -1, 0, Some(-2));
    c.add_generator("y", 0, -1, Some(-2));
    c.add_generator("z", 0, 0, Some(-1));
    c.add_arrow("z", "x", 1).unwrap();
    c.add_arrow("z", "y", 1).unwrap();
    c
}

/// CFK-infinity of the left-handed trefoil: x@(1,0), y@(0,1), z@(0,0)
/// with dx = dy = z.
pub fn trefoil_left() -> BifilteredComplex {
    let mut c = BifilteredComplex::new("trefoil_left", CoeffRing::Z);
    c.add_generator("x", 1, 0, Some(2));
    c.add_generator("y", 0, 1, Some(2));
    c.add_generator("z", 0, 0, Some(1));
    c.add_arrow("x", "z", 1).unwrap();
    c.add_arrow("y", "z", 1).unwrap();
    c
}

/// Hat column of the mirror dual: the complex whose bottom sublevel
/// carries the contact class of the knot.
pub fn trefoil_right_dual_hat() -> HatFilteredComplex {
    let mut c = hat_column(&mirror_dual(&trefoil_right()));
    c.name = "trefoil_right_dual".into();
    c
}

pub fn trefoil_left_dual_hat() -> HatFilteredComplex {
    let mut c = hat_column(&mirror_dual(&trefoil_left()));
    c.name = "trefoil_left_dual".into();
    c
}

/// Tensor square of the right-trefoil dual hat complex (genus 2).
pub fn trefoil_right_dual_square() -> HatFilteredComplex {
    let h = trefoil_right_dual_hat();
    let mut c = tensor_filtered(&h, &h).unwrap();
    c.name = "trefoil_right_dual_sq".into();
    c
}

pub fn trefoil_left_dual_square() -> HatFilteredComplex {
    let h = trefoil_left_dual_hat();
    let mut c = tensor_filtered(&h, &h).unwrap();
    c.name = "trefoil_left_dual_sq".into();
    c
}

/// Mixed tensor: right-trefoil dual with left-trefoil dual (genus 2).
pub fn trefoil_mixed_dual_tensor() -> HatFilteredComplex {
    let mut c = tensor_filtered(&trefoil_right_dual_hat(), &trefoil_left_dual_hat()).unwrap();
    c.name = "trefoil_mixed_dual".into();
    c
}

/// The hat fixtures of fibered knots together with their fiber genus.
pub fn fibered_hat_fixtures() -> Vec<(HatFilteredComplex, u32)> {
    vec![
        (unknot_hat(), 0),
        (trefoil_right_dual_hat(), 1),
        (trefoil_left_dual_hat(), 1),
        (trefoil_right_dual_square(), 2),
        (trefoil_left_dual_square(), 2),
        (trefoil_mixed_dual_tensor(), 2),
    ]
}

/// Monodromy of the right-handed trefoil: two right twists.
pub fn monodromy_trefoil_right() -> TwistWord {
    TwistWord::parse_with_genus("a b", 1).unwrap()
}

/// Monodromy of the left-handed trefoil: two left twists.
pub fn monodromy_trefoil_left() -> TwistWord {
    TwistWord::parse_with_genus("a^-1 b^-1", 1).unwrap()
}

/// Monodromy of the figure-eight knot.
pub fn monodromy_figure_eight() -> TwistWord {
    TwistWord::parse_with_genus("a b^-1", 1).unwrap()
}

/// All three genus-1 fibered-knot monodromies.
pub fn genus_one_monodromies() -> Vec<(&'static str, TwistWord)> {
    vec![
        ("trefoil_right", monodromy_trefoil_right()),
        ("trefoil_left", monodromy_trefoil_left()),
        ("figure_eight", monodromy_figure_eight()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfk::contact_class;

    #[test]
    fn fixtures_validate() {
        assert!(unknot().validate().is_valid());
        assert!(trefoil_right().validate().is_valid());
        assert!(trefoil_left().validate().is_valid());
        for (c, _) in fibered_hat_fixtures() {
            let report = c.validate();
            assert!(report.is_valid(), "{report}");
        }
    }

    #[test]
    fn fibered_fixtures_have_z_bottom() {
        for (c, g) in fibered_hat_fixtures() {
            let report = contact_class(&c, g).expect(&c.name);
            assert_eq!(report.sublevel_homology.free_rank, 1, "{}", c.name);
            assert!(report.sublevel_homology.torsion.is_empty(), "{}", c.name);
        }
    }
}
