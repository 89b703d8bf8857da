use serde::Serialize;

use super::correlator::{plus_state_value, push_through_ug};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::pauli::{Pauli, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TopoAxis {
    X,
    Y,
}

impl TopoAxis {
    pub fn letter(self) -> Pauli {
        match self {
            TopoAxis::X => Pauli::X,
            TopoAxis::Y => Pauli::Y,
        }
    }
}

/// `⟨G|σ_k^V|G⟩` for `k ∈ {x, y}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopologicalPrediction {
    pub axis: TopoAxis,
    /// From the phase bookkeeping; agrees with the statevector oracle.
    pub value: i8,
    /// `△_μ N(μ) = ∅` for x, `△_μ (N(μ) ∪ {μ}) = ∅` for y.
    pub magnitude_condition: bool,
    /// Literal closed form: `1` for x and `i^{|V|}` for y when the condition
    /// holds, else 0.
    pub paper_value: i8,
    /// `paper_value · (-1)^{|E|}`, the literal form with the sign picked up
    /// from reordering one `σ_x σ_z` pair per edge.
    pub edge_parity_value: i8,
}

impl TopologicalPrediction {
    pub fn sign_diverges(&self) -> bool {
        self.value != self.paper_value
    }
}

pub fn predict_topological(g: &Graph, axis: TopoAxis) -> Result<TopologicalPrediction> {
    let all = VertexSet::full(g.n());
    let q = push_through_ug(g, &PauliString::uniform(&all, axis.letter()))?;
    let value = plus_state_value(&q).map_or(0, |ph| {
        ph.real_sign()
            .expect("σ^V is hermitian, so its value is real")
    });

    let magnitude_condition = match axis {
        TopoAxis::X => g.neighborhood_sym_diff().is_empty(),
        TopoAxis::Y => g.closed_neighborhood_sym_diff().is_empty(),
    };
    if axis == TopoAxis::Y && magnitude_condition {
        // every degree odd, so an even vertex count by the handshaking lemma
        assert!(g.n().is_multiple_of(2) && g.odd_degree_count() == g.n());
    }
    assert_eq!(
        value != 0,
        magnitude_condition,
        "bookkeeping disagrees with the △ condition"
    );

    let paper_value = match (axis, magnitude_condition) {
        (_, false) => 0,
        (TopoAxis::X, true) => 1,
        (TopoAxis::Y, true) => {
            if g.n().is_multiple_of(4) {
                1
            } else {
                -1
            }
        }
    };
    let edge_parity_value = if g.edge_count().is_multiple_of(2) {
        paper_value
    } else {
        -paper_value
    };

    Ok(TopologicalPrediction {
        axis,
        value,
        magnitude_condition,
        paper_value,
        edge_parity_value,
    })
}
