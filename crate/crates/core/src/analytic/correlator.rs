use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pauli::{MeasurementDirection, Pauli, PauliString, Phase};

/// Which named case produced a correlator value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Twins,
    AdjacentTwins,
    Leaf,
    Zero,
    PushedGeneral,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Twins => "twins",
            Rule::AdjacentTwins => "adjacent_twins",
            Rule::Leaf => "leaf",
            Rule::Zero => "zero",
            Rule::PushedGeneral => "pushed_general",
        }
    }
}

/// Whether the sign is one the closed-form two-point rules state outright, or
/// one only the phase bookkeeping determines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignProvenance {
    PaperStated,
    PhaseBookkeeping,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelatorPrediction {
    pub observable: PauliString,
    /// `⟨G|P|G⟩ ∈ {-1, 0, 1}` at `φ = π`.
    pub value: i8,
    pub rule: Rule,
    pub sign_provenance: SignProvenance,
    /// The rewritten string `Q` with `⟨G|P|G⟩ = ⟨Ψ|Q|Ψ⟩`.
    pub pushed: PauliString,
}

/// Rewrites `P` into `Q = U_G P U_G`, so that `⟨G|P|G⟩ = ⟨+^V|Q|+^V⟩`.
///
/// Every X or Y letter on site `a` picks up `σ_z^{N(a)}`; Z letters pass
/// through. The factors are multiplied in site order so on-site
/// anticommutation signs land in the phase exactly.
pub fn push_through_ug(g: &Graph, p: &PauliString) -> Result<PauliString> {
    if p.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: p.n(),
            right: g.n(),
        });
    }
    let mut q = PauliString::identity(g.n()).with_phase(p.phase());
    for (a, &letter) in p.letters().iter().enumerate() {
        if letter == Pauli::I {
            continue;
        }
        q.right_mul_site(a, letter)?;
        if letter.flips() {
            for b in g.neighbors(a)? {
                q.right_mul_site(b, Pauli::Z)?;
            }
        }
    }
    Ok(q)
}

/// `⟨+^V|Q|+^V⟩`: the phase of `Q` if every letter is I or X, else `None` (zero).
pub fn plus_state_value(q: &PauliString) -> Option<Phase> {
    q.letters()
        .iter()
        .all(|&l| matches!(l, Pauli::I | Pauli::X))
        .then(|| q.phase())
}

/// Genuine graph-state correlator `⟨G|P|G⟩` for a hermitian `P`.
pub fn predict_correlator(g: &Graph, p: &PauliString) -> Result<CorrelatorPrediction> {
    if !p.is_hermitian() {
        return Err(Error::NotHermitian(p.to_string()));
    }
    let pushed = push_through_ug(g, p)?;
    let value = match plus_state_value(&pushed) {
        None => 0,
        Some(phase) => phase
            .real_sign()
            .expect("hermitian observables have real expectation values"),
    };

    let (rule, sign_provenance) = match two_point_sites(p) {
        Some((nu, a, mu, b)) => {
            let stated = paper_two_point_value(g, nu, a, mu, b)?;
            let prov = if stated == value {
                SignProvenance::PaperStated
            } else {
                SignProvenance::PhaseBookkeeping
            };
            (classify_two_point(g, value, nu, a, mu, b)?, prov)
        }
        None if value == 0 => (Rule::Zero, SignProvenance::PhaseBookkeeping),
        None => (Rule::PushedGeneral, SignProvenance::PhaseBookkeeping),
    };

    Ok(CorrelatorPrediction {
        observable: p.clone(),
        value,
        rule,
        sign_provenance,
        pushed,
    })
}

/// The two-point values read directly off the neighbourhood predicates:
/// `xx` ↔ twins, `xz`/`zx` ↔ leaf, `yy` ↔ adjacent twins, every other axis
/// pair vanishes. Independent of the phase bookkeeping.
pub fn paper_two_point_value(g: &Graph, nu: usize, a: Pauli, mu: usize, b: Pauli) -> Result<i8> {
    let rel = g.relation(nu, mu)?;
    let hit = match (a, b) {
        (Pauli::X, Pauli::X) => rel.twins,
        (Pauli::X, Pauli::Z) => rel.first_is_leaf_of_second,
        (Pauli::Z, Pauli::X) => rel.second_is_leaf_of_first,
        (Pauli::Y, Pauli::Y) => rel.adjacent_twins,
        _ => false,
    };
    Ok(hit as i8)
}

fn classify_two_point(
    g: &Graph,
    value: i8,
    nu: usize,
    a: Pauli,
    mu: usize,
    b: Pauli,
) -> Result<Rule> {
    if value == 0 {
        return Ok(Rule::Zero);
    }
    let rel = g.relation(nu, mu)?;
    Ok(match (a, b) {
        (Pauli::X, Pauli::X) if rel.twins => Rule::Twins,
        (Pauli::Y, Pauli::Y) if rel.adjacent_twins => Rule::AdjacentTwins,
        (Pauli::X, Pauli::Z) if rel.first_is_leaf_of_second => Rule::Leaf,
        (Pauli::Z, Pauli::X) if rel.second_is_leaf_of_first => Rule::Leaf,
        _ => Rule::PushedGeneral,
    })
}

/// `(ν, a, μ, b)` with `ν < μ` when `p` has exactly two non-identity sites.
fn two_point_sites(p: &PauliString) -> Option<(usize, Pauli, usize, Pauli)> {
    let mut sites = p
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l != Pauli::I);
    let (nu, &a) = sites.next()?;
    let (mu, &b) = sites.next()?;
    sites.next().is_none().then_some((nu, a, mu, b))
}

/// `⟨σ_v^ν σ_w^μ⟩` from the four predicate-gated terms.
pub fn predict_general_direction(
    g: &Graph,
    nu: usize,
    mu: usize,
    v_nu: &MeasurementDirection,
    v_mu: &MeasurementDirection,
) -> Result<f64> {
    let rel = g.relation(nu, mu)?;
    let [nx, ny, nz] = v_nu.components();
    let [mx, my, mz] = v_mu.components();
    let mut total = 0.0;
    if rel.twins {
        total += nx * mx;
    }
    if rel.first_is_leaf_of_second {
        total += nx * mz;
    }
    if rel.second_is_leaf_of_first {
        total += nz * mx;
    }
    if rel.adjacent_twins {
        total += ny * my;
    }
    Ok(total)
}

/// `Σ_{ij} v_i^ν v_j^μ ⟨σ_i^ν σ_j^μ⟩` with each term from [`predict_correlator`].
pub fn general_direction_from_axes(
    g: &Graph,
    nu: usize,
    mu: usize,
    v_nu: &MeasurementDirection,
    v_mu: &MeasurementDirection,
) -> Result<f64> {
    let mut total = 0.0;
    for a in Pauli::AXES {
        for b in Pauli::AXES {
            let p = PauliString::pair(g.n(), nu, a, mu, b)?;
            let value = predict_correlator(g, &p)?.value;
            total += v_nu.along(a) * v_mu.along(b) * f64::from(value);
        }
    }
    Ok(total)
}

/// `⟨G|σ_x^ν σ_z^{guess}|G⟩`, which is 1 exactly when `guess = N(ν)`.
pub fn predict_neighborhood_probe(g: &Graph, nu: usize, guess: &VertexSet) -> Result<i8> {
    Ok(predict_correlator(g, &neighborhood_observable(g.n(), nu, guess)?)?.value)
}

/// `σ_x^ν σ_z^{guess}`
pub fn neighborhood_observable(n: usize, nu: usize, guess: &VertexSet) -> Result<PauliString> {
    if guess.universe() != n {
        return Err(Error::SizeMismatch {
            left: guess.universe(),
            right: n,
        });
    }
    if guess.contains(nu) {
        return Err(Error::VertexInGuess { vertex: nu });
    }
    let mut p = PauliString::z_string(guess);
    p.set(nu, Pauli::X)?;
    Ok(p)
}

/// Every unordered pair of distinct vertices crossed with the nine axis pairs.
pub fn all_two_point_predictions(g: &Graph) -> Result<Vec<CorrelatorPrediction>> {
    let mut out = Vec::new();
    for nu in g.vertices() {
        for mu in nu + 1..g.n() {
            for a in Pauli::AXES {
                for b in Pauli::AXES {
                    out.push(predict_correlator(
                        g,
                        &PauliString::pair(g.n(), nu, a, mu, b)?,
                    )?);
                }
            }
        }
    }
    Ok(out)
}
