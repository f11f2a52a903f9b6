//! Open books with one binding component and the operations the
//! monodromy algebra needs: Giroux stabilization, boundary connected
//! sum, surgery composition, and the Stein-fillability certificate via
//! positive factorizations.

use std::fmt;

use super::braid::{braid_normal_form, BraidError};
use super::word::{Curve, TwistLetter, TwistWord, WordError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenBook {
    pub page_genus: u32,
    pub boundary_components: u32,
    pub monodromy: TwistWord,
}

#[derive(Debug, thiserror::Error)]
pub enum OpenBookError {
    #[error("monodromy genus {got} does not match page genus {want}")]
    GenusMismatch { want: u32, got: u32 },
    #[error("only one boundary component is supported, got {0}")]
    MultipleBoundaries(u32),
    #[error("boundary-parallel curve rejected: {0}")]
    BoundaryParallel(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

impl OpenBook {
    pub fn new(page_genus: u32, monodromy: TwistWord) -> Result<Self, OpenBookError> {
        if monodromy.genus != page_genus {
            return Err(OpenBookError::GenusMismatch {
                want: page_genus,
                got: monodromy.genus,
            });
        }
        Ok(OpenBook { page_genus, boundary_components: 1, monodromy })
    }

    pub fn trivial(page_genus: u32) -> Self {
        OpenBook {
            page_genus,
            boundary_components: 1,
            monodromy: TwistWord::identity(page_genus),
        }
    }
}

impl fmt::Display for OpenBook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(genus {}, monodromy {})", self.page_genus, self.monodromy)
    }
}

/// Simple Giroux stabilization: attach a handle, extend the monodromy by
/// the identity over it, and append one right-handed twist along the new
/// handle's core curve a_{g+1}.
pub fn giroux_stabilize(ob: &OpenBook) -> OpenBook {
    assert_eq!(ob.boundary_components, 1, "stabilization needs a connected binding");
    let genus = ob.page_genus + 1;
    let mut letters = ob.monodromy.letters.clone();
    letters.push(TwistLetter { curve: Curve::A(genus), sense: 1 });
    OpenBook {
        page_genus: genus,
        boundary_components: 1,
        monodromy: TwistWord { genus, letters },
    }
}

/// Boundary connected sum of pages: genera add and the second word's
/// handle indices shift past the first page. Boundary-parallel letters
/// are rejected because the curve they name stops being boundary-parallel
/// in the summed page.
pub fn boundary_connect_sum(ob1: &OpenBook, ob2: &OpenBook) -> Result<OpenBook, OpenBookError> {
    for ob in [ob1, ob2] {
        if ob.boundary_components != 1 {
            return Err(OpenBookError::MultipleBoundaries(ob.boundary_components));
        }
    }
    for (ob, side) in [(ob1, "first"), (ob2, "second")] {
        if ob.monodromy.letters.iter().any(|l| l.curve == Curve::Boundary) {
            return Err(OpenBookError::BoundaryParallel(format!(
                "the {side} monodromy twists along c, which has no standard name in the summed page"
            )));
        }
    }
    let genus = ob1.page_genus + ob2.page_genus;
    let mut letters = ob1.monodromy.letters.clone();
    let shift = ob1.page_genus;
    letters.extend(ob2.monodromy.letters.iter().map(|l| TwistLetter {
        curve: match l.curve {
            Curve::A(i) => Curve::A(i + shift),
            Curve::B(i) => Curve::B(i + shift),
            Curve::Boundary => unreachable!(),
        },
        sense: l.sense,
    }));
    Ok(OpenBook {
        page_genus: genus,
        boundary_components: 1,
        monodromy: TwistWord { genus, letters },
    })
}

/// Bookkeeping descriptor for +-1 surgery along a curve in a page.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryDescriptor {
    pub base: OpenBook,
    pub curve: Curve,
    pub coefficient: i8,
    pub result: OpenBook,
}

/// Surgery with framing -1 composes the monodromy with a right-handed
/// twist along the curve; +1 surgery with a left-handed one. The curve
/// must be one of the standard non-boundary curves.
pub fn compose_surgery(
    ob: &OpenBook,
    curve: Curve,
    coefficient: i8,
) -> Result<SurgeryDescriptor, OpenBookError> {
    assert!(coefficient == 1 || coefficient == -1, "coefficient must be +1 or -1");
    let Some(index) = curve.handle_index() else {
        return Err(OpenBookError::BoundaryParallel(
            "surgery composition needs a curve not homotopic to the boundary".into(),
        ));
    };
    if index == 0 || index > ob.page_genus {
        return Err(OpenBookError::Word(WordError::CurveOutOfRange(
            curve.to_string(),
            index,
            ob.page_genus,
        )));
    }
    let mut letters = ob.monodromy.letters.clone();
    letters.push(TwistLetter { curve, sense: -coefficient });
    let result = OpenBook {
        page_genus: ob.page_genus,
        boundary_components: 1,
        monodromy: TwistWord { genus: ob.page_genus, letters },
    };
    Ok(SurgeryDescriptor { base: ob.clone(), curve, coefficient, result })
}

/// Positivity of a twist word: syntactic positivity at any genus, the
/// exact Garside decision at genus 1, unknown otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    PositiveSyntactic,
    PositiveWithWitness(TwistWord),
    NotPositive,
    Unknown,
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Positivity::PositiveSyntactic => write!(f, "POSITIVE_SYNTACTIC"),
            Positivity::PositiveWithWitness(_) => write!(f, "POSITIVE_WITH_WITNESS"),
            Positivity::NotPositive => write!(f, "NOT_POSITIVE"),
            Positivity::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

pub fn is_positive(word: &TwistWord) -> Result<Positivity, BraidError> {
    if word.is_syntactically_positive() {
        return Ok(Positivity::PositiveSyntactic);
    }
    if word.genus != 1 {
        return Ok(Positivity::Unknown);
    }
    let nf = braid_normal_form(word)?;
    if nf.is_positive() {
        Ok(Positivity::PositiveWithWitness(nf.positive_word()))
    } else {
        Ok(Positivity::NotPositive)
    }
}

/// Stein-fillability certificate for the contact structure of an open
/// book: certified when the monodromy word is a product of right-handed
/// twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SteinCertificate {
    Certified(TwistWord),
    /// The word as written is not in the positive monoid. Positivity of
    /// some Giroux stabilization is left undecided.
    NotCertified,
    Unknown,
}

impl fmt::Display for SteinCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SteinCertificate::Certified(_) => write!(f, "CERTIFIED"),
            SteinCertificate::NotCertified => write!(f, "NOT_CERTIFIED"),
            SteinCertificate::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

pub fn stein_certificate(ob: &OpenBook) -> Result<SteinCertificate, BraidError> {
    Ok(match is_positive(&ob.monodromy)? {
        Positivity::PositiveSyntactic => SteinCertificate::Certified(ob.monodromy.clone()),
        Positivity::PositiveWithWitness(w) => SteinCertificate::Certified(w),
        Positivity::NotPositive => SteinCertificate::NotCertified,
        Positivity::Unknown => SteinCertificate::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::braid::{words_equal, WordsEqual};

    fn word(text: &str, genus: u32) -> TwistWord {
        TwistWord::parse_with_genus(text, genus).unwrap()
    }

    #[test]
    fn stabilize_unknot_book() {
        let ob = OpenBook::trivial(0);
        let st = giroux_stabilize(&ob);
        assert_eq!(st.page_genus, 1);
        assert_eq!(st.monodromy.to_string(), "a1");

        let tr = OpenBook::new(1, word("a b", 1)).unwrap();
        let st = giroux_stabilize(&tr);
        assert_eq!(st.page_genus, 2);
        assert_eq!(st.monodromy.to_string(), "a1 b1 a2");
        assert!(st.monodromy.is_syntactically_positive());
    }

    #[test]
    fn sum_shifts_indices() {
        let tr = OpenBook::new(1, word("a b", 1)).unwrap();
        let sum = boundary_connect_sum(&tr, &tr).unwrap();
        assert_eq!(sum.page_genus, 2);
        assert_eq!(sum.monodromy.to_string(), "a1 b1 a2 b2");

        let idg = OpenBook::trivial(2);
        let idh = OpenBook::trivial(3);
        let s = boundary_connect_sum(&idg, &idh).unwrap();
        assert_eq!(s.page_genus, 5);
        assert!(s.monodromy.letters.is_empty());

        let unknot = OpenBook::trivial(0);
        let s = boundary_connect_sum(&tr, &unknot).unwrap();
        assert_eq!(s.monodromy.letters, tr.monodromy.letters);
    }

    #[test]
    fn sum_rejects_boundary_letters() {
        let withc = OpenBook::new(1, word("a c", 1)).unwrap();
        let tr = OpenBook::new(1, word("a b", 1)).unwrap();
        assert!(matches!(
            boundary_connect_sum(&withc, &tr),
            Err(OpenBookError::BoundaryParallel(_))
        ));
    }

    #[test]
    fn surgery_appends_the_right_twist() {
        let ob = OpenBook::new(1, word("a^-1 b^-1", 1)).unwrap();
        let d = compose_surgery(&ob, Curve::A(1), -1).unwrap();
        assert_eq!(d.result.monodromy.to_string(), "a1^-1 b1^-1 a1");

        let d = compose_surgery(&ob, Curve::A(1), 1).unwrap();
        assert_eq!(d.result.monodromy.to_string(), "a1^-1 b1^-1 a1^-1");

        assert!(matches!(
            compose_surgery(&ob, Curve::Boundary, -1),
            Err(OpenBookError::BoundaryParallel(_))
        ));
    }

    #[test]
    fn positivity_cases() {
        assert_eq!(is_positive(&word("a b", 1)).unwrap(), Positivity::PositiveSyntactic);
        assert_eq!(is_positive(&word("a^-1", 1)).unwrap(), Positivity::NotPositive);
        assert_eq!(is_positive(&word("a1^-1", 2)).unwrap(), Positivity::Unknown);

        // left-handed trefoil monodromy with a boundary twist
        let w = word("a^-1 b^-1 c", 1);
        match is_positive(&w).unwrap() {
            Positivity::PositiveWithWitness(witness) => {
                assert!(witness.is_syntactically_positive());
                assert_eq!(words_equal(&witness, &w).unwrap(), WordsEqual::Equal);
                assert_eq!(
                    words_equal(&witness, &word("(b a)^5", 1)).unwrap(),
                    WordsEqual::Equal
                );
            }
            other => panic!("expected a positive witness, got {other:?}"),
        }

        // figure-eight monodromy with a boundary twist
        let w = word("a b^-1 c", 1);
        match is_positive(&w).unwrap() {
            Positivity::PositiveWithWitness(witness) => {
                assert!(witness.is_syntactically_positive());
                assert_eq!(
                    words_equal(&witness, &word("a a (b a)^5", 1)).unwrap(),
                    WordsEqual::Equal
                );
            }
            other => panic!("expected a positive witness, got {other:?}"),
        }
    }

    #[test]
    fn stein_wraps_positivity() {
        let tr = OpenBook::new(1, word("a b", 1)).unwrap();
        assert_eq!(
            stein_certificate(&tr).unwrap(),
            SteinCertificate::Certified(word("a b", 1))
        );

        let neg = OpenBook::new(1, word("a^-1", 1)).unwrap();
        assert_eq!(stein_certificate(&neg).unwrap(), SteinCertificate::NotCertified);

        let unknown = OpenBook::new(2, word("a1^-1", 2)).unwrap();
        assert_eq!(stein_certificate(&unknown).unwrap(), SteinCertificate::Unknown);

        // the -1-surgery-on-binding word for the left trefoil is certified
        let surg = OpenBook::new(1, word("a^-1 b^-1 c", 1)).unwrap();
        assert!(matches!(
            stein_certificate(&surg).unwrap(),
            SteinCertificate::Certified(_)
        ));
    }
}
