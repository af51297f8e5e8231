use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ExactVector, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeClass {
    NormConvergent,
    CoordinatewiseOnly,
    Divergent,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeRow {
    pub index: usize,
    /// `max_{c<W} |v_c − lim_c|`
    pub coord_gap: Rational,
    /// `‖v − lim‖` in the limit's norm.
    pub norm_gap: Scalar,
    pub norm_gap_approx: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub window: usize,
    pub tol: f64,
    pub rows: Vec<ProbeRow>,
    pub class: ProbeClass,
}

/// Coordinatewise versus norm gaps to `limit`, classified on the last
/// term: norm gap below `tol`, else coordinate gap below `tol`, else
/// divergent. A window analogue of weak convergence, not a decision of it.
pub fn weak_norm_convergence_probe(
    sequence: &[ExactVector],
    limit: &ExactVector,
    window: usize,
    tol: f64,
) -> Result<ProbeReport> {
    if sequence.is_empty() {
        return Err(Error::Domain("probe of an empty sequence".into()));
    }
    let dim = limit.dim();
    if dim < window {
        return Err(Error::Domain(format!("limit dimension {dim} below the window {window}")));
    }
    if let Some(i) = sequence.iter().position(|v| v.dim() != dim) {
        return Err(Error::Domain(format!("term {i} has dimension {} ≠ {dim}", sequence[i].dim())));
    }
    let tag = limit.norm_tag();
    let rows: Vec<ProbeRow> = sequence
        .iter()
        .enumerate()
        .map(|(index, v)| {
            let diff = v.sub(limit);
            let norm_gap = diff.norm_best_effort(tag);
            ProbeRow {
                index,
                coord_gap: diff.restrict(0..window).linf(),
                norm_gap_approx: norm_gap.to_float(),
                norm_gap,
            }
        })
        .collect();
    let last = rows.last().expect("nonempty");
    let class = if last.norm_gap_approx < tol {
        ProbeClass::NormConvergent
    } else if last.coord_gap.to_f64() < tol {
        ProbeClass::CoordinatewiseOnly
    } else {
        ProbeClass::Divergent
    };
    Ok(ProbeReport {
        window,
        tol,
        rows,
        class,
    })
}
