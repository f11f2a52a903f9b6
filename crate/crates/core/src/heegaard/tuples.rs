//! Generator-tuple enumeration: perfect matchings of alpha curves to
//! beta curves through the listed intersection points, with a hard cap
//! against combinatorial explosion, and the minimal-Chern filter.

use std::collections::HashMap;

use super::diagram::{
    chern_evaluation, DiagramError, GeneratorTuple, MeasuredDiagram, PeriodicDomain,
};

pub const DEFAULT_TUPLE_CAP: usize = 1_000_000;

/// All generator tuples, in a deterministic order (backtracking over
/// alpha curves in diagram order, points in listing order). Errors when
/// more than `cap` tuples exist.
pub fn enumerate_tuples(
    d: &MeasuredDiagram,
    cap: usize,
) -> Result<Vec<GeneratorTuple>, DiagramError> {
    d.ensure_valid()?;
    let beta_index: HashMap<&str, usize> = d
        .beta_curves
        .iter()
        .enumerate()
        .map(|(i, b)| (b.as_str(), i))
        .collect();
    let points_on_alpha: Vec<Vec<usize>> = d
        .alpha_curves
        .iter()
        .map(|a| {
            (0..d.points.len())
                .filter(|&pi| &d.points[pi].alpha == a)
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(d.alpha_curves.len());
    let mut beta_used = vec![false; d.beta_curves.len()];

    fn backtrack(
        d: &MeasuredDiagram,
        points_on_alpha: &[Vec<usize>],
        beta_index: &HashMap<&str, usize>,
        beta_used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<GeneratorTuple>,
        cap: usize,
    ) -> Result<(), DiagramError> {
        let depth = chosen.len();
        if depth == points_on_alpha.len() {
            if out.len() == cap {
                return Err(DiagramError::TupleCapExceeded(cap));
            }
            out.push(GeneratorTuple { points: chosen.clone() });
            return Ok(());
        }
        for &pi in &points_on_alpha[depth] {
            let b = beta_index[d.points[pi].beta.as_str()];
            if beta_used[b] {
                continue;
            }
            beta_used[b] = true;
            chosen.push(pi);
            let r = backtrack(d, points_on_alpha, beta_index, beta_used, chosen, out, cap);
            chosen.pop();
            beta_used[b] = false;
            r?;
        }
        Ok(())
    }

    backtrack(
        d,
        &points_on_alpha,
        &beta_index,
        &mut beta_used,
        &mut chosen,
        &mut out,
        cap,
    )?;
    Ok(out)
}

/// All tuples realizing the minimal Chern evaluation against the given
/// periodic domain.
pub fn minimal_chern_points(
    d: &MeasuredDiagram,
    domain: &PeriodicDomain,
    cap: usize,
) -> Result<(i64, Vec<GeneratorTuple>), DiagramError> {
    d.domain_is_periodic(domain)?;
    let tuples = enumerate_tuples(d, cap)?;
    let mut best: Option<i64> = None;
    let mut minimizers = Vec::new();
    for t in tuples {
        let value = chern_evaluation(d, &t, domain)?;
        match best {
            Some(b) if value > b => {}
            Some(b) if value == b => minimizers.push(t),
            _ => {
                best = Some(value);
                minimizers = vec![t];
            }
        }
    }
    let best = best.ok_or_else(|| DiagramError::BadTuple("diagram has no tuples".into()))?;
    Ok((best, minimizers))
}
