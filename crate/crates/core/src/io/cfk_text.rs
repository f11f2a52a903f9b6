//! The CFK text format.
//!
//! ```text
//! complex trefoil_right ring=Z kind=bifiltered
//! gen x i=-1 j=0 m=-2
//! gen y i=0 j=-1 m=-2
//! gen z i=0 j=0 m=-1
//! arrow z x 1
//! arrow z y 1
//! end
//! ```
//!
//! Hat complexes use `kind=hat` and `gen LABEL a=<int> [m=<int>]`. The
//! maslov key is optional. Lines starting with `#` and blank lines are
//! skipped by the parser; the emitter writes canonical text, and
//! `parse(emit(c)) == c` byte-for-byte on re-emission.

use std::fmt;

use crate::cfk::{BifilteredComplex, CoeffRing, HatFilteredComplex};

#[derive(Debug, thiserror::Error)]
#[error("line {line}, col {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedComplex {
    Bifiltered(BifilteredComplex),
    Hat(HatFilteredComplex),
}

impl ParsedComplex {
    pub fn name(&self) -> &str {
        match self {
            ParsedComplex::Bifiltered(c) => &c.name,
            ParsedComplex::Hat(c) => &c.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ParsedComplex::Bifiltered(_) => "bifiltered",
            ParsedComplex::Hat(_) => "hat",
        }
    }
}

impl fmt::Display for ParsedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedComplex::Bifiltered(c) => write!(f, "{}", emit_cfk_bifiltered(c)),
            ParsedComplex::Hat(c) => write!(f, "{}", emit_cfk_hat(c)),
        }
    }
}

struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn tokens(line: &str, lineno: usize) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut col = 0;
    for piece in line.split_inclusive(char::is_whitespace) {
        let trimmed = piece.trim_end_matches(char::is_whitespace);
        if !trimmed.is_empty() {
            out.push(Tok { text: trimmed, line: lineno, col: col + 1 });
        }
        col += piece.len();
    }
    out
}

fn err(tok: &Tok<'_>, msg: impl Into<String>) -> ParseError {
    ParseError { line: tok.line, col: tok.col, msg: msg.into() }
}

fn line_err(lineno: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line: lineno, col: 1, msg: msg.into() }
}

fn parse_int(tok: &Tok<'_>) -> Result<i64, ParseError> {
    tok.text
        .parse()
        .map_err(|_| err(tok, format!("expected an integer, got `{}`", tok.text)))
}

fn keyed<'a>(tok: &'a Tok<'a>, key: &str) -> Result<&'a str, ParseError> {
    match tok.text.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        Some((k, _)) => Err(err(tok, format!("unknown key `{k}`, expected `{key}=`"))),
        None => Err(err(tok, format!("expected `{key}=<value>`, got `{}`", tok.text))),
    }
}

fn keyed_int(tok: &Tok<'_>, key: &str) -> Result<i64, ParseError> {
    let v = keyed(tok, key)?;
    v.parse()
        .map_err(|_| err(tok, format!("expected an integer after `{key}=`, got `{v}`")))
}

pub fn parse_cfk(text: &str) -> Result<ParsedComplex, ParseError> {
    enum Kind {
        Bi,
        Hat,
    }
    let mut parsed: Option<ParsedComplex> = None;
    let mut kind: Option<Kind> = None;
    let mut ended = false;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if ended {
            return Err(line_err(lineno, "content after `end`"));
        }
        let toks = tokens(raw, lineno);
        let head = &toks[0];
        match head.text {
            "complex" => {
                if parsed.is_some() {
                    return Err(err(head, "duplicate `complex` header"));
                }
                if toks.len() != 4 {
                    return Err(err(
                        head,
                        "header is `complex <name> ring=<Z|Z/2> kind=<bifiltered|hat>`",
                    ));
                }
                let name = toks[1].text.to_string();
                let ring = match keyed(&toks[2], "ring")? {
                    "Z" => CoeffRing::Z,
                    "Z/2" => CoeffRing::Z2,
                    other => return Err(err(&toks[2], format!("unknown ring `{other}`"))),
                };
                match keyed(&toks[3], "kind")? {
                    "bifiltered" => {
                        kind = Some(Kind::Bi);
                        parsed = Some(ParsedComplex::Bifiltered(BifilteredComplex::new(name, ring)));
                    }
                    "hat" => {
                        kind = Some(Kind::Hat);
                        parsed = Some(ParsedComplex::Hat(HatFilteredComplex::new(name, ring)));
                    }
                    other => return Err(err(&toks[3], format!("unknown kind `{other}`"))),
                }
            }
            "gen" => {
                let Some(p) = parsed.as_mut() else {
                    return Err(err(head, "`gen` before the `complex` header"));
                };
                if toks.len() < 2 {
                    return Err(err(head, "generator is `gen <label> ...`"));
                }
                let label = toks[1].text.to_string();
                match (kind.as_ref().unwrap(), p) {
                    (Kind::Bi, ParsedComplex::Bifiltered(c)) => {
                        if toks.len() < 4 || toks.len() > 5 {
                            return Err(err(head, "generator is `gen <label> i=<int> j=<int> [m=<int>]`"));
                        }
                        let i = keyed_int(&toks[2], "i")?;
                        let j = keyed_int(&toks[3], "j")?;
                        let m = toks.get(4).map(|t| keyed_int(t, "m")).transpose()?;
                        c.add_generator(label, i, j, m);
                    }
                    (Kind::Hat, ParsedComplex::Hat(c)) => {
                        if toks.len() < 3 || toks.len() > 4 {
                            return Err(err(head, "generator is `gen <label> a=<int> [m=<int>]`"));
                        }
                        let a = keyed_int(&toks[2], "a")?;
                        let m = toks.get(3).map(|t| keyed_int(t, "m")).transpose()?;
                        c.add_generator(label, a, m);
                    }
                    _ => unreachable!(),
                }
            }
            "arrow" => {
                let Some(p) = parsed.as_mut() else {
                    return Err(err(head, "`arrow` before the `complex` header"));
                };
                if toks.len() != 4 {
                    return Err(err(head, "arrow is `arrow <src> <dst> <coeff>`"));
                }
                let coeff = parse_int(&toks[3])?;
                let (src, dst) = (toks[1].text, toks[2].text);
                let added = match p {
                    ParsedComplex::Bifiltered(c) => c.add_arrow(src, dst, coeff),
                    ParsedComplex::Hat(c) => c.add_arrow(src, dst, coeff),
                };
                if added.is_err() {
                    let missing = match p {
                        ParsedComplex::Bifiltered(c) => {
                            if c.index_of(src).is_none() {
                                &toks[1]
                            } else {
                                &toks[2]
                            }
                        }
                        ParsedComplex::Hat(c) => {
                            if c.index_of(src).is_none() {
                                &toks[1]
                            } else {
                                &toks[2]
                            }
                        }
                    };
                    return Err(err(
                        missing,
                        format!("arrow references unknown generator `{}`", missing.text),
                    ));
                }
            }
            "end" => {
                if parsed.is_none() {
                    return Err(err(head, "`end` before the `complex` header"));
                }
                ended = true;
            }
            other => return Err(err(head, format!("unknown directive `{other}`"))),
        }
    }
    if !ended {
        return Err(line_err(text.lines().count().max(1), "missing `end`"));
    }
    Ok(parsed.unwrap())
}

pub fn emit_cfk_bifiltered(c: &BifilteredComplex) -> String {
    let mut out = format!("complex {} ring={} kind=bifiltered\n", c.name, c.ring);
    for g in &c.generators {
        out.push_str(&format!("gen {} i={} j={}", g.label, g.i, g.j));
        if let Some(m) = g.maslov {
            out.push_str(&format!(" m={m}"));
        }
        out.push('\n');
    }
    for a in &c.arrows {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            c.generators[a.src].label, c.generators[a.dst].label, a.coeff
        ));
    }
    out.push_str("end\n");
    out
}

pub fn emit_cfk_hat(c: &HatFilteredComplex) -> String {
    let mut out = format!("complex {} ring={} kind=hat\n", c.name, c.ring);
    for g in &c.generators {
        out.push_str(&format!("gen {} a={}", g.label, g.alexander));
        if let Some(m) = g.maslov {
            out.push_str(&format!(" m={m}"));
        }
        out.push('\n');
    }
    for a in &c.arrows {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            c.generators[a.src].label, c.generators[a.dst].label, a.coeff
        ));
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL_RIGHT: &str = "complex trefoil_right ring=Z kind=bifiltered\n\
        gen x i=-1 j=0 m=-2\n\
        gen y i=0 j=-1 m=-2\n\
        gen z i=0 j=0 m=-1\n\
        arrow z x 1\n\
        arrow z y 1\n\
        end\n";

    #[test]
    fn round_trip_is_byte_identical() {
        let c = parse_cfk(TREFOIL_RIGHT).unwrap();
        let emitted = c.to_string();
        assert_eq!(emitted, TREFOIL_RIGHT);
        assert_eq!(parse_cfk(&emitted).unwrap(), c);
    }

    #[test]
    fn trefoil_fixture_validates() {
        let ParsedComplex::Bifiltered(c) = parse_cfk(TREFOIL_RIGHT).unwrap() else {
            panic!("wrong kind")
        };
        assert!(c.validate().is_valid());
        assert_eq!(c.generators[0].i, -1);
    }

    #[test]
    fn empty_complex_parses() {
        let c = parse_cfk("complex nothing ring=Z kind=hat\nend\n").unwrap();
        assert_eq!(c.name(), "nothing");
        let ParsedComplex::Hat(h) = c else { panic!() };
        assert!(h.generators.is_empty());
    }

    #[test]
    fn unknown_arrow_label_is_located() {
        let text = "complex c ring=Z kind=hat\ngen x a=0\narrow x ghost 1\nend\n";
        let e = parse_cfk(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.col, 9);
        assert!(e.msg.contains("ghost"));
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = "complex c ring=Z kind=hat\ngen x q=0\nend\n";
        let e = parse_cfk(text).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("unknown key `q`"));

        let text = "complex c ring=GF(3) kind=hat\nend\n";
        assert!(parse_cfk(text).is_err());
    }

    #[test]
    fn missing_end_is_an_error() {
        let e = parse_cfk("complex c ring=Z kind=hat\n").unwrap_err();
        assert!(e.msg.contains("missing `end`"));
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let text = "# a comment\n\ncomplex c ring=Z/2 kind=hat\ngen x a=0\n# another\nend\n";
        let c = parse_cfk(text).unwrap();
        assert_eq!(c.name(), "c");
    }
}
