//! Hopf invariant of a two-plane field from an almost-complex filling:
//! h = (c1^2 + 2 - 2*chi - 2*sigma) / 4, as an exact rational.

use num_rational::Rational64;

pub fn hopf_invariant(c1_squared: i64, euler_char: i64, signature: i64) -> Rational64 {
    Rational64::new(c1_squared + 2 - 2 * euler_char - 2 * signature, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cases() {
        assert_eq!(hopf_invariant(0, 1, 0), Rational64::new(0, 1));
        assert_eq!(hopf_invariant(-1, 2, -1), Rational64::new(-1, 4));
        assert_eq!(hopf_invariant(-4, 2, -1), Rational64::new(-1, 1));
    }
}
