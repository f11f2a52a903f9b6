//! Garside left-normal form in the braid group B3.
//!
//! The mapping class group of a once-punctured torus is B3 on the twist
//! generators R_a, R_b, so the genus-1 word problem and the positive-braid
//! membership question are decided exactly here. The boundary twist is
//! the full central power: R_c = Delta^4 with Delta = R_a R_b R_a, which
//! the relation (R_b R_a)^6 = R_c pins down.
//!
//! Permutation braids are encoded by the permutation of three strands;
//! a word is carried to `Delta^p s_1 ... s_l` with each factor a
//! permutation braid other than 1 and Delta and each adjacent pair
//! left-weighted.

use std::fmt;

use super::word::{Curve, TwistLetter, TwistWord, WordError};

/// Permutation of {0, 1, 2} as the position-to-value table.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Perm(pub [u8; 3]);

pub const IDENTITY: Perm = Perm([0, 1, 2]);
pub const S1: Perm = Perm([1, 0, 2]);
pub const S2: Perm = Perm([0, 2, 1]);
pub const HALF_TWIST: Perm = Perm([2, 1, 0]);

impl Perm {
    /// `self` then `other`: (self.then(other))(i) = other(self(i)).
    pub fn then(self, other: Perm) -> Perm {
        Perm([
            other.0[self.0[0] as usize],
            other.0[self.0[1] as usize],
            other.0[self.0[2] as usize],
        ])
    }

    pub fn inversions(self) -> usize {
        let mut n = 0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if self.0[i] > self.0[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn is_identity(self) -> bool {
        self == IDENTITY
    }

    pub fn is_half_twist(self) -> bool {
        self == HALF_TWIST
    }

    fn atom(index: usize) -> Perm {
        if index == 0 {
            S1
        } else {
            S2
        }
    }

    /// Is s_i a left divisor (the factor starts with it)?
    fn left_divisible(self, index: usize) -> bool {
        Perm::atom(index).then(self).inversions() < self.inversions()
    }

    /// Is s_i a right divisor (the factor ends with it)?
    fn right_divisible(self, index: usize) -> bool {
        self.then(Perm::atom(index)).inversions() < self.inversions()
    }

    /// Conjugation by the half twist; an involution on B3 factors since
    /// Delta^2 is central.
    fn flip(self) -> Perm {
        HALF_TWIST.then(self).then(HALF_TWIST)
    }

    /// Canonical reduced word in the twist letters a, b.
    pub fn reduced_word(self) -> &'static str {
        match self.0 {
            [0, 1, 2] => "",
            [1, 0, 2] => "a",
            [0, 2, 1] => "b",
            [2, 0, 1] => "ab",
            [1, 2, 0] => "ba",
            [2, 1, 0] => "aba",
            _ => unreachable!(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidNormalForm {
    pub infimum: i64,
    pub factors: Vec<Perm>,
}

impl BraidNormalForm {
    pub fn is_trivial(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// The braid lies in the positive monoid exactly when the infimum is
    /// non-negative.
    pub fn is_positive(&self) -> bool {
        self.infimum >= 0
    }

    /// A positive twist word spelling the same braid; only meaningful
    /// when `is_positive()`.
    pub fn positive_word(&self) -> TwistWord {
        assert!(self.is_positive(), "no positive spelling for infimum < 0");
        let mut letters = Vec::new();
        let mut push = |s: &str| {
            for ch in s.chars() {
                let curve = if ch == 'a' { Curve::A(1) } else { Curve::B(1) };
                letters.push(TwistLetter { curve, sense: 1 });
            }
        };
        for _ in 0..self.infimum {
            push("aba");
        }
        for f in &self.factors {
            push(f.reduced_word());
        }
        TwistWord { genus: 1, letters }
    }
}

impl fmt::Display for BraidNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for p in &self.factors {
            write!(f, " {}", p.reduced_word())?;
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BraidError {
    #[error("the exact braid machinery is genus-1 only, got genus {0}")]
    GenusNotOne(u32),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Garside left-normal form of a genus-1 twist word. The boundary twist
/// expands to Delta^4 first.
pub fn braid_normal_form(word: &TwistWord) -> Result<BraidNormalForm, BraidError> {
    if word.genus != 1 {
        return Err(BraidError::GenusNotOne(word.genus));
    }
    let mut infimum: i64 = 0;
    let mut factors: Vec<Perm> = Vec::new();

    let push_negative_delta = |factors: &mut Vec<Perm>, infimum: &mut i64, tail: Perm| {
        // f Delta^{-1} = Delta^{-1} flip(f), so a Delta^{-1} walks to the
        // front by flipping everything already collected.
        *infimum -= 1;
        for f in factors.iter_mut() {
            *f = f.flip();
        }
        factors.push(tail);
    };

    for letter in &word.letters {
        match (letter.curve, letter.sense >= 0) {
            (Curve::Boundary, positive) => {
                // R_c = Delta^4 is central: the power moves freely.
                infimum += if positive { 4 } else { -4 };
            }
            (curve, true) => {
                factors.push(atom_of(curve));
            }
            (curve, false) => {
                // s^{-1} = Delta^{-1} (Delta s^{-1}); the complement
                // Delta s^{-1} is the permutation braid whose strand
                // permutation is "half twist, then s".
                let complement = HALF_TWIST.then(atom_of(curve));
                push_negative_delta(&mut factors, &mut infimum, complement);
            }
        }
    }

    left_normalize(&mut infimum, &mut factors);
    Ok(BraidNormalForm { infimum, factors })
}

fn atom_of(curve: Curve) -> Perm {
    match curve {
        Curve::A(1) => S1,
        Curve::B(1) => S2,
        _ => unreachable!("genus-1 words only carry a1, b1, c"),
    }
}

/// Left-normalize a positive factor sequence in place, extracting half
/// twists into the infimum and dropping identities.
fn left_normalize(infimum: &mut i64, factors: &mut Vec<Perm>) {
    loop {
        factors.retain(|f| !f.is_identity());
        // extract any full half twists, flipping the factors they pass
        let mut extracted = false;
        let mut idx = 0;
        while idx < factors.len() {
            if factors[idx].is_half_twist() {
                factors.remove(idx);
                *infimum += 1;
                for f in factors.iter_mut().take(idx) {
                    *f = f.flip();
                }
                extracted = true;
            } else {
                idx += 1;
            }
        }
        if extracted {
            continue;
        }

        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            loop {
                let (left, right) = (factors[i], factors[i + 1]);
                if right.is_identity() {
                    break;
                }
                // left-weighted means every starting atom of the right
                // factor already finishes the left one
                let movable = (0..2).find(|&s| right.left_divisible(s) && !left.right_divisible(s));
                let Some(s) = movable else { break };
                factors[i] = left.then(Perm::atom(s));
                factors[i + 1] = Perm::atom(s).then(right);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(factors
        .windows(2)
        .all(|w| (0..2).all(|s| !w[1].left_divisible(s) || w[0].right_divisible(s))));
    debug_assert!(factors.iter().all(|f| !f.is_identity() && !f.is_half_twist()));
}

/// Outcome of the word comparison: exact at genus 1, a homological
/// screening elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordsEqual {
    Equal,
    Unequal,
    Unknown,
}

impl fmt::Display for WordsEqual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordsEqual::Equal => write!(f, "EQUAL"),
            WordsEqual::Unequal => write!(f, "UNEQUAL"),
            WordsEqual::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

pub fn words_equal(w1: &TwistWord, w2: &TwistWord) -> Result<WordsEqual, BraidError> {
    if w1.genus != w2.genus {
        return Err(BraidError::Word(WordError::GenusMismatch(w1.genus, w2.genus)));
    }
    if w1.letters == w2.letters {
        return Ok(WordsEqual::Equal);
    }
    if w1.genus == 1 {
        let (n1, n2) = (braid_normal_form(w1)?, braid_normal_form(w2)?);
        return Ok(if n1 == n2 { WordsEqual::Equal } else { WordsEqual::Unequal });
    }
    let (m1, m2) = (
        super::action::homological_action(w1),
        super::action::homological_action(w2),
    );
    Ok(if m1 == m2 { WordsEqual::Unknown } else { WordsEqual::Unequal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str) -> BraidNormalForm {
        braid_normal_form(&TwistWord::parse_with_genus(text, 1).unwrap()).unwrap()
    }

    #[test]
    fn braid_relation() {
        assert_eq!(nf("a b a"), nf("b a b"));
        assert!(nf("a b a").factors.is_empty());
        assert_eq!(nf("a b a").infimum, 1);
    }

    #[test]
    fn boundary_twist_is_twelve_atoms() {
        // (R_b R_a)^6 = R_c, and both sides normalize to Delta^4
        let lhs = nf("(b a)^6");
        let rhs = nf("c");
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.infimum, 4);
        assert!(lhs.factors.is_empty());
    }

    #[test]
    fn free_cancellation() {
        let n = nf("a a^-1");
        assert!(n.is_trivial());
        assert!(nf("b b^-1 a a^-1").is_trivial());
    }

    #[test]
    fn single_inverse_is_not_positive() {
        let n = nf("a^-1");
        assert_eq!(n.infimum, -1);
        // Delta a^-1 = a b
        assert_eq!(n.factors, vec![HALF_TWIST.then(S1)]);
        assert!(!n.is_positive());
    }

    #[test]
    fn surgery_word_equals_torus_power() {
        // R_a^{-1} R_b^{-1} R_c = (R_b R_a)^5
        let w1 = TwistWord::parse_with_genus("a^-1 b^-1 c", 1).unwrap();
        let w2 = TwistWord::parse_with_genus("(b a)^5", 1).unwrap();
        assert_eq!(words_equal(&w1, &w2).unwrap(), WordsEqual::Equal);
        let n = braid_normal_form(&w1).unwrap();
        assert_eq!(n.infimum, 3);
        assert_eq!(n.factors, vec![S1]);
    }

    #[test]
    fn normal_form_idempotent_on_own_spelling() {
        for text in ["a^-1 b^-1 c", "a b^-1 c", "(b a)^4 a", "b b a a^-1 b"] {
            let n = nf(text);
            if n.is_positive() {
                let again = braid_normal_form(&n.positive_word()).unwrap();
                assert_eq!(n, again, "respelled normal form changed for {text}");
            }
        }
    }

    #[test]
    fn central_element_commutes() {
        for text in ["a", "b a^-1", "a b b", "b^-1"] {
            let w = TwistWord::parse_with_genus(text, 1).unwrap();
            let central = TwistWord::parse_with_genus("(b a)^6", 1).unwrap();
            let left = central.concat(&w).unwrap();
            let right = w.concat(&central).unwrap();
            assert_eq!(words_equal(&left, &right).unwrap(), WordsEqual::Equal);
        }
    }

    #[test]
    fn genus_two_screening() {
        let w1 = TwistWord::parse_with_genus("a1", 2).unwrap();
        let w2 = TwistWord::parse_with_genus("a2", 2).unwrap();
        assert_eq!(words_equal(&w1, &w2).unwrap(), WordsEqual::Unequal);
        assert_eq!(words_equal(&w1, &w1).unwrap(), WordsEqual::Equal);
        // same action, different spelling: stays unknown
        let w3 = TwistWord::parse_with_genus("a1 a2 a1^-1", 2).unwrap();
        let w4 = TwistWord::parse_with_genus("a2", 2).unwrap();
        assert_eq!(words_equal(&w3, &w4).unwrap(), WordsEqual::Unknown);
    }

    #[test]
    fn genus_mismatch_is_an_error() {
        let w1 = TwistWord::parse_with_genus("a", 1).unwrap();
        let w2 = TwistWord::parse_with_genus("a1", 2).unwrap();
        assert!(words_equal(&w1, &w2).is_err());
    }
}
