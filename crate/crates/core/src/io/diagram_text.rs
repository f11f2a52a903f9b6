//! The diagram text format.
//!
//! ```text
//! diagram model_g1 genus=3
//! region zoneA e=-1/1 corners=13
//! alpha alpha1
//! beta lambda
//! boundary zoneA alpha1 1
//! point x1 alpha1 lambda Dprime,neck_w,zoneA,neck_z
//! basepoints w=neck_w z=neck_z
//! end
//! ```
//!
//! Euler contributions are written as numerator/denominator; corners are
//! the four adjacent region ids in cyclic order, comma-separated.

use num_rational::Rational64;

use crate::heegaard::{IntersectionPoint, MeasuredDiagram, Region};

use super::cfk_text::ParseError;

fn err(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col, msg: msg.into() }
}

struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut col = 0;
    for piece in line.split_inclusive(char::is_whitespace) {
        let trimmed = piece.trim_end_matches(char::is_whitespace);
        if !trimmed.is_empty() {
            out.push(Tok { text: trimmed, col: col + 1 });
        }
        col += piece.len();
    }
    out
}

fn keyed<'a>(tok: &'a Tok<'a>, key: &str, line: usize) -> Result<&'a str, ParseError> {
    match tok.text.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        _ => Err(err(line, tok.col, format!("expected `{key}=<value>`, got `{}`", tok.text))),
    }
}

pub fn parse_diagram(text: &str) -> Result<MeasuredDiagram, ParseError> {
    let mut diagram: Option<MeasuredDiagram> = None;
    let mut ended = false;
    let mut saw_basepoints = false;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if ended {
            return Err(err(lineno, 1, "content after `end`"));
        }
        let toks = tokens(raw);
        let head = &toks[0];
        let need = |n: usize, usage: &str| -> Result<(), ParseError> {
            if toks.len() != n {
                Err(err(lineno, head.col, format!("usage: {usage}")))
            } else {
                Ok(())
            }
        };
        match head.text {
            "diagram" => {
                if diagram.is_some() {
                    return Err(err(lineno, head.col, "duplicate `diagram` header"));
                }
                need(3, "diagram <name> genus=<int>")?;
                let genus: u32 = keyed(&toks[2], "genus", lineno)?
                    .parse()
                    .map_err(|_| err(lineno, toks[2].col, "genus must be a non-negative integer"))?;
                diagram = Some(MeasuredDiagram {
                    name: toks[1].text.into(),
                    genus,
                    regions: Vec::new(),
                    alpha_curves: Vec::new(),
                    beta_curves: Vec::new(),
                    boundary: Vec::new(),
                    points: Vec::new(),
                    basepoint_w: String::new(),
                    basepoint_z: String::new(),
                });
            }
            "region" => {
                let d = diagram
                    .as_mut()
                    .ok_or_else(|| err(lineno, head.col, "`region` before the `diagram` header"))?;
                need(4, "region <id> e=<num>/<den> corners=<int>")?;
                let e = keyed(&toks[2], "e", lineno)?;
                let (num, den) = e
                    .split_once('/')
                    .ok_or_else(|| err(lineno, toks[2].col, "euler contribution is <num>/<den>"))?;
                let num: i64 = num
                    .parse()
                    .map_err(|_| err(lineno, toks[2].col, "bad euler numerator"))?;
                let den: i64 = den
                    .parse()
                    .map_err(|_| err(lineno, toks[2].col, "bad euler denominator"))?;
                if den == 0 {
                    return Err(err(lineno, toks[2].col, "euler denominator is zero"));
                }
                let corners: u32 = keyed(&toks[3], "corners", lineno)?
                    .parse()
                    .map_err(|_| err(lineno, toks[3].col, "bad corner count"))?;
                d.regions.push(Region {
                    id: toks[1].text.into(),
                    euler_contribution: Rational64::new(num, den),
                    corner_count: corners,
                });
            }
            "alpha" | "beta" => {
                let d = diagram
                    .as_mut()
                    .ok_or_else(|| err(lineno, head.col, "curve before the `diagram` header"))?;
                need(2, "alpha|beta <id>")?;
                if head.text == "alpha" {
                    d.alpha_curves.push(toks[1].text.into());
                } else {
                    d.beta_curves.push(toks[1].text.into());
                }
            }
            "boundary" => {
                let d = diagram
                    .as_mut()
                    .ok_or_else(|| err(lineno, head.col, "`boundary` before the `diagram` header"))?;
                need(4, "boundary <region> <curve> <mult>")?;
                let mult: i64 = toks[3]
                    .text
                    .parse()
                    .map_err(|_| err(lineno, toks[3].col, "bad boundary multiplicity"))?;
                d.boundary.push((toks[1].text.into(), toks[2].text.into(), mult));
            }
            "point" => {
                let d = diagram
                    .as_mut()
                    .ok_or_else(|| err(lineno, head.col, "`point` before the `diagram` header"))?;
                need(5, "point <id> <alpha> <beta> <r1,r2,r3,r4>")?;
                let corners: Vec<&str> = toks[4].text.split(',').collect();
                if corners.len() != 4 {
                    return Err(err(lineno, toks[4].col, "points carry exactly four corners"));
                }
                d.points.push(IntersectionPoint {
                    id: toks[1].text.into(),
                    alpha: toks[2].text.into(),
                    beta: toks[3].text.into(),
                    corners: [
                        corners[0].into(),
                        corners[1].into(),
                        corners[2].into(),
                        corners[3].into(),
                    ],
                });
            }
            "basepoints" => {
                let d = diagram.as_mut().ok_or_else(|| {
                    err(lineno, head.col, "`basepoints` before the `diagram` header")
                })?;
                need(3, "basepoints w=<region> z=<region>")?;
                d.basepoint_w = keyed(&toks[1], "w", lineno)?.into();
                d.basepoint_z = keyed(&toks[2], "z", lineno)?.into();
                saw_basepoints = true;
            }
            "end" => {
                if diagram.is_none() {
                    return Err(err(lineno, head.col, "`end` before the `diagram` header"));
                }
                ended = true;
            }
            other => return Err(err(lineno, head.col, format!("unknown directive `{other}`"))),
        }
    }
    if !ended {
        return Err(err(text.lines().count().max(1), 1, "missing `end`"));
    }
    if !saw_basepoints {
        return Err(err(text.lines().count().max(1), 1, "missing `basepoints` line"));
    }
    Ok(diagram.unwrap())
}

pub fn emit_diagram(d: &MeasuredDiagram) -> String {
    let mut out = format!("diagram {} genus={}\n", d.name, d.genus);
    for r in &d.regions {
        out.push_str(&format!(
            "region {} e={}/{} corners={}\n",
            r.id,
            r.euler_contribution.numer(),
            r.euler_contribution.denom(),
            r.corner_count
        ));
    }
    for a in &d.alpha_curves {
        out.push_str(&format!("alpha {a}\n"));
    }
    for b in &d.beta_curves {
        out.push_str(&format!("beta {b}\n"));
    }
    for (region, curve, mult) in &d.boundary {
        out.push_str(&format!("boundary {region} {curve} {mult}\n"));
    }
    for p in &d.points {
        out.push_str(&format!(
            "point {} {} {} {}\n",
            p.id,
            p.alpha,
            p.beta,
            p.corners.join(",")
        ));
    }
    out.push_str(&format!("basepoints w={} z={}\n", d.basepoint_w, d.basepoint_z));
    out.push_str("end\n");
    out
}
