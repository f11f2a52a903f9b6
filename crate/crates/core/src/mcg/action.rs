//! Action of a twist word on the first homology of the page, in the
//! standard symplectic basis (a1, b1, ..., ag, bg) with <a_i, b_i> = +1.
//!
//! A right-handed twist along gamma acts by the transvection
//! x |-> x + <x, gamma> gamma; the boundary twist acts trivially because
//! the boundary is null-homologous in the capped surface. Matrices
//! multiply in word order, so the action is a homomorphism from words
//! under concatenation.

use super::word::{Curve, TwistWord};

pub type ActionMatrix = Vec<Vec<i64>>;

fn identity(n: usize) -> ActionMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &ActionMatrix, b: &ActionMatrix) -> ActionMatrix {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Symplectic pairing <e_p, e_q> in the (a1, b1, a2, b2, ...) basis.
fn pairing(p: usize, q: usize) -> i64 {
    if p / 2 == q / 2 {
        if p.is_multiple_of(2) && q % 2 == 1 {
            return 1;
        }
        if p % 2 == 1 && q.is_multiple_of(2) {
            return -1;
        }
    }
    0
}

/// Transvection matrix of a single signed twist: columns are the images
/// of the basis vectors.
fn transvection(curve: Curve, sense: i64, genus: u32) -> ActionMatrix {
    let n = 2 * genus as usize;
    let mut m = identity(n);
    let Some(handle) = curve.handle_index() else {
        return m; // boundary twist: trivial on homology
    };
    let gamma = match curve {
        Curve::A(_) => 2 * (handle as usize - 1),
        Curve::B(_) => 2 * (handle as usize - 1) + 1,
        Curve::Boundary => unreachable!(),
    };
    for (basis, slot) in m[gamma].iter_mut().enumerate() {
        *slot += sense * pairing(basis, gamma);
    }
    m
}

pub fn homological_action(word: &TwistWord) -> ActionMatrix {
    let n = 2 * word.genus as usize;
    let mut m = identity(n);
    for letter in &word.letters {
        let t = transvection(letter.curve, letter.sense as i64, word.genus);
        m = mat_mul(&m, &t);
    }
    m
}

/// The standard symplectic form J in the (a1, b1, ...) basis.
pub fn standard_symplectic_form(genus: u32) -> ActionMatrix {
    let n = 2 * genus as usize;
    let mut j = vec![vec![0i64; n]; n];
    for h in 0..genus as usize {
        j[2 * h][2 * h + 1] = 1;
        j[2 * h + 1][2 * h] = -1;
    }
    j
}

/// Checks M^T J M = J.
pub fn is_symplectic(m: &ActionMatrix, genus: u32) -> bool {
    let n = 2 * genus as usize;
    if m.len() != n {
        return false;
    }
    let j = standard_symplectic_form(genus);
    let mt: ActionMatrix = (0..n)
        .map(|i| (0..n).map(|k| m[k][i]).collect())
        .collect();
    mat_mul(&mat_mul(&mt, &j), m) == j
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_identity() {
        let w = TwistWord::identity(2);
        assert_eq!(homological_action(&w), identity(4));
    }

    #[test]
    fn boundary_twist_acts_trivially() {
        let w = TwistWord::parse_with_genus("c", 1).unwrap();
        assert_eq!(homological_action(&w), identity(2));
    }

    #[test]
    fn genus_one_a_twist() {
        // fixes [a], sends [b] to [b] - [a]
        let w = TwistWord::parse_with_genus("a", 1).unwrap();
        assert_eq!(homological_action(&w), vec![vec![1, -1], vec![0, 1]]);
    }

    #[test]
    fn action_is_homomorphism() {
        let w1 = TwistWord::parse_with_genus("a1 b2^-1", 2).unwrap();
        let w2 = TwistWord::parse_with_genus("b1 a2 a1^-1", 2).unwrap();
        let cat = w1.concat(&w2).unwrap();
        assert_eq!(
            homological_action(&cat),
            mat_mul(&homological_action(&w1), &homological_action(&w2))
        );
    }

    #[test]
    fn twists_are_symplectic() {
        for text in ["a", "b", "a b a", "a^-1 b", "c a b^-1"] {
            let w = TwistWord::parse_with_genus(text, 1).unwrap();
            assert!(is_symplectic(&homological_action(&w), 1), "{text}");
        }
        let w = TwistWord::parse_with_genus("a1 b2 a3^-1 b1^-1 a2", 3).unwrap();
        assert!(is_symplectic(&homological_action(&w), 3));
    }

    #[test]
    fn central_power_acts_trivially() {
        // (R_b R_a)^6 = R_c acts trivially on homology
        let w = TwistWord::parse_with_genus("(b a)^6", 1).unwrap();
        assert_eq!(homological_action(&w), identity(2));
    }
}
