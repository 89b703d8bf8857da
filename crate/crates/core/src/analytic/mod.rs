//! Polynomial-time predictor.
//!
//! Single-site statistics of pseudo graph states come from closed forms in
//! `φ` and the vertex degree. Genuine graph-state correlators (`φ = π`) are
//! obtained by pushing the observable through `U_G` with exact Pauli phase
//! bookkeeping and reading the result off `|+⟩^V`; no state vector is built.

mod correlator;
mod topology;

use serde::Serialize;

use crate::entropy::binary_entropy;
use crate::error::Result;
use crate::graph::Graph;

pub use correlator::{
    all_two_point_predictions, general_direction_from_axes, neighborhood_observable,
    paper_two_point_value, plus_state_value, predict_correlator, predict_general_direction,
    predict_neighborhood_probe, push_through_ug, CorrelatorPrediction, Rule, SignProvenance,
};
pub use topology::{predict_topological, TopoAxis, TopologicalPrediction};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PgsPointStats {
    pub vertex: usize,
    pub degree: usize,
    pub phi: f64,
    pub ex: f64,
    pub ey: f64,
    pub ez: f64,
    /// Entanglement distance `1 - |⟨σ⟩|²`.
    pub ed: f64,
    /// Entropy of entanglement in bits.
    pub ed_entropy: f64,
}

/// Bloch vector, entanglement distance and entropy of vertex `ν` in `|G(φ)⟩`.
pub fn pgs_point_stats(g: &Graph, nu: usize, phi: f64) -> Result<PgsPointStats> {
    let degree = g.degree(nu)?;
    let k = degree as f64;
    let envelope = (phi / 2.0).cos().powi(degree as i32);
    let ex = (k * phi / 2.0).cos() * envelope;
    let ey = -(k * phi / 2.0).sin() * envelope;
    let ed = 1.0 - (phi / 2.0).cos().powi(2 * degree as i32);
    let r = (1.0 - ed).max(0.0).sqrt();
    Ok(PgsPointStats {
        vertex: nu,
        degree,
        phi,
        ex,
        ey,
        ez: 0.0,
        ed,
        ed_entropy: binary_entropy((1.0 + r) / 2.0),
    })
}

/// Leading-order entanglement distance near the genuine graph state,
/// `E(π + δφ) ≈ 1 - (δφ/2)^{2 n_ν}`.
pub fn ed_perturbation(degree: usize, delta_phi: f64) -> f64 {
    1.0 - (delta_phi / 2.0).powi(2 * degree as i32)
}

/// Upper bound on `|⟨P⟩(π + δφ) - ⟨P⟩(π)|` for any Pauli string with
/// `⟨P⟩(π) = ±1` on a graph with `edge_count` edges: `|E|² δφ² / 2`.
///
/// Such a `P` stabilizes `|G⟩` up to sign, so the first derivative in `φ`
/// vanishes; the second is bounded by `‖[H,[H,P]]‖ ≤ 4‖H - |E|/2‖² ≤ |E|²`
/// with `H` the sum of the `|11⟩⟨11|` edge projectors.
pub fn quasi_gs_error_bound(edge_count: usize, delta_phi: f64) -> f64 {
    let e = edge_count as f64;
    e * e * delta_phi * delta_phi / 2.0
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let pts: Vec<(f64, f64)> = xs.iter().zip(ys).map(|(x, y)| (x.ln(), y.ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
