//! Dehn-twist words on a genus-g surface with one boundary component.
//!
//! Curves are the standard handle curves `a1, b1, ..., ag, bg` plus the
//! boundary-parallel curve `c`. A word is a sequence of signed twists,
//! sense +1 for right-handed. The token grammar accepts `a2`, `b1^-1`,
//! `c`, bare `a`/`b` as genus-1 shorthand, powers `a^3`, and
//! parenthesized powers `(b a)^5` which expand at parse time.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Curve {
    A(u32),
    B(u32),
    /// Boundary-parallel curve of the whole page.
    Boundary,
}

impl Curve {
    pub fn handle_index(&self) -> Option<u32> {
        match self {
            Curve::A(i) | Curve::B(i) => Some(*i),
            Curve::Boundary => None,
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::A(i) => write!(f, "a{i}"),
            Curve::B(i) => write!(f, "b{i}"),
            Curve::Boundary => write!(f, "c"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistLetter {
    pub curve: Curve,
    /// +1 right-handed, -1 left-handed.
    pub sense: i8,
}

impl fmt::Display for TwistLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sense >= 0 {
            write!(f, "{}", self.curve)
        } else {
            write!(f, "{}^-1", self.curve)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    pub genus: u32,
    pub letters: Vec<TwistLetter>,
}

#[derive(Debug, thiserror::Error)]
pub enum WordError {
    #[error("cannot parse twist word at `{0}`: {1}")]
    Parse(String, String),
    #[error("curve {0} needs genus >= {1}, word has genus {2}")]
    CurveOutOfRange(String, u32, u32),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
}

impl TwistWord {
    pub fn new(genus: u32, letters: Vec<TwistLetter>) -> Result<Self, WordError> {
        for l in &letters {
            if let Some(i) = l.curve.handle_index() {
                if i == 0 || i > genus {
                    return Err(WordError::CurveOutOfRange(l.curve.to_string(), i, genus));
                }
            }
        }
        Ok(TwistWord { genus, letters })
    }

    pub fn identity(genus: u32) -> Self {
        TwistWord { genus, letters: Vec::new() }
    }

    pub fn is_syntactically_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sense > 0)
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            genus: self.genus,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TwistLetter { curve: l.curve, sense: -l.sense })
                .collect(),
        }
    }

    pub fn concat(&self, other: &TwistWord) -> Result<TwistWord, WordError> {
        if self.genus != other.genus {
            return Err(WordError::GenusMismatch(self.genus, other.genus));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(TwistWord { genus: self.genus, letters })
    }

    /// Smallest genus the letters fit on: the maximal handle index, and 1
    /// when only `c` or nothing appears in a nonempty word.
    pub fn inferred_genus(letters: &[TwistLetter]) -> u32 {
        let max_index = letters.iter().filter_map(|l| l.curve.handle_index()).max();
        match max_index {
            Some(i) => i,
            None if letters.is_empty() => 0,
            None => 1,
        }
    }

    /// Parse with the genus inferred from the letters.
    pub fn parse(text: &str) -> Result<TwistWord, WordError> {
        let letters = parse_letters(text)?;
        let genus = Self::inferred_genus(&letters);
        TwistWord::new(genus, letters)
    }

    /// Parse against an explicit genus.
    pub fn parse_with_genus(text: &str, genus: u32) -> Result<TwistWord, WordError> {
        let letters = parse_letters(text)?;
        TwistWord::new(genus, letters)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Expanded words are capped so that powers like `a^1000000000` fail
/// fast instead of exhausting memory.
const MAX_WORD_LETTERS: usize = 1_000_000;

fn parse_letters(text: &str) -> Result<Vec<TwistLetter>, WordError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    if rest == "id" {
        return Ok(out);
    }
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if let Some(tail) = rest.strip_prefix('(') {
            let close = tail.find(')').ok_or_else(|| {
                WordError::Parse(rest.into(), "unmatched `(`".into())
            })?;
            let inner = parse_letters(&tail[..close])?;
            let after = &tail[close + 1..];
            let (power, after) = parse_power(after)?;
            push_power(&mut out, &inner, power)
                .map_err(|_| WordError::Parse(text.into(), "word too long".into()))?;
            rest = after;
        } else {
            let end = rest
                .find(|ch: char| ch.is_whitespace() || ch == '(')
                .unwrap_or(rest.len());
            let token = &rest[..end];
            let (letter, power) = parse_token(token)?;
            push_power(&mut out, &[letter], power)
                .map_err(|_| WordError::Parse(text.into(), "word too long".into()))?;
            rest = &rest[end..];
        }
    }
    Ok(out)
}

struct TooLong;

fn push_power(out: &mut Vec<TwistLetter>, unit: &[TwistLetter], power: i64) -> Result<(), TooLong> {
    let grow = unit.len().saturating_mul(power.unsigned_abs() as usize);
    if out.len().saturating_add(grow) > MAX_WORD_LETTERS {
        return Err(TooLong);
    }
    if power >= 0 {
        for _ in 0..power {
            out.extend_from_slice(unit);
        }
    } else {
        let inv: Vec<TwistLetter> = unit
            .iter()
            .rev()
            .map(|l| TwistLetter { curve: l.curve, sense: -l.sense })
            .collect();
        for _ in 0..(-power) {
            out.extend_from_slice(&inv);
        }
    }
    Ok(())
}

/// `rest` begins right after a `)`: an optional `^<int>` exponent.
fn parse_power(rest: &str) -> Result<(i64, &str), WordError> {
    let Some(tail) = rest.strip_prefix('^') else {
        return Ok((1, rest));
    };
    let end = tail
        .find(|ch: char| ch.is_whitespace() || ch == '(')
        .unwrap_or(tail.len());
    let num = &tail[..end];
    let power: i64 = num
        .parse()
        .map_err(|_| WordError::Parse(rest.into(), format!("bad exponent `{num}`")))?;
    Ok((power, &tail[end..]))
}

fn parse_token(token: &str) -> Result<(TwistLetter, i64), WordError> {
    let (base, power) = match token.split_once('^') {
        Some((b, p)) => {
            let power: i64 = p.parse().map_err(|_| {
                WordError::Parse(token.into(), format!("bad exponent `{p}`"))
            })?;
            (b, power)
        }
        None => (token, 1),
    };
    let curve = match base {
        "a" => Curve::A(1),
        "b" => Curve::B(1),
        "c" => Curve::Boundary,
        _ => {
            let (kind, idx) = base.split_at(1);
            let index: u32 = idx.parse().map_err(|_| {
                WordError::Parse(token.into(), "expected a<k>, b<k> or c".into())
            })?;
            match kind {
                "a" => Curve::A(index),
                "b" => Curve::B(index),
                _ => {
                    return Err(WordError::Parse(
                        token.into(),
                        "expected a<k>, b<k> or c".into(),
                    ))
                }
            }
        }
    };
    // a^-3 means three left-handed twists; fold the sign into the letter
    let letter = TwistLetter { curve, sense: if power < 0 { -1 } else { 1 } };
    Ok((letter, power.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_tokens() {
        let w = TwistWord::parse("a b^-1 c").unwrap();
        assert_eq!(w.genus, 1);
        assert_eq!(w.letters.len(), 3);
        assert_eq!(w.letters[0], TwistLetter { curve: Curve::A(1), sense: 1 });
        assert_eq!(w.letters[1], TwistLetter { curve: Curve::B(1), sense: -1 });
        assert_eq!(w.letters[2], TwistLetter { curve: Curve::Boundary, sense: 1 });
    }

    #[test]
    fn parse_parenthesized_power() {
        let w = TwistWord::parse("(b a)^5").unwrap();
        assert_eq!(w.letters.len(), 10);
        assert_eq!(w.to_string(), "b1 a1 b1 a1 b1 a1 b1 a1 b1 a1");

        let inv = TwistWord::parse("(b a)^-2").unwrap();
        assert_eq!(inv.to_string(), "a1^-1 b1^-1 a1^-1 b1^-1");
    }

    #[test]
    fn parse_indexed_and_inferred_genus() {
        let w = TwistWord::parse("a1 b2 a3^-1").unwrap();
        assert_eq!(w.genus, 3);
        assert!(TwistWord::parse_with_genus("a2", 1).is_err());
        assert_eq!(TwistWord::parse("c").unwrap().genus, 1);
        assert_eq!(TwistWord::parse("").unwrap().genus, 0);
        assert_eq!(TwistWord::parse("id").unwrap().letters.len(), 0);
    }

    #[test]
    fn display_round_trip() {
        for text in ["a1 b1^-1 c", "a2 a2 b1", "id"] {
            let w = TwistWord::parse(text).unwrap();
            let again = TwistWord::parse(&w.to_string()).unwrap();
            assert_eq!(w.letters, again.letters);
        }
    }

    #[test]
    fn letter_powers_expand() {
        let w = TwistWord::parse("a^3 b^-2").unwrap();
        assert_eq!(w.to_string(), "a1 a1 a1 b1^-1 b1^-1");
    }

    #[test]
    fn bad_tokens_error() {
        assert!(TwistWord::parse("d1").is_err());
        assert!(TwistWord::parse("a^x").is_err());
        assert!(TwistWord::parse("(a b").is_err());
        assert!(TwistWord::parse("a0").is_err());
    }

    #[test]
    fn astronomic_powers_fail_fast() {
        assert!(TwistWord::parse("a^1000000000").is_err());
        assert!(TwistWord::parse("(a b)^-900000000000").is_err());
    }
}
