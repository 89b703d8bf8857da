//! Sampling-based verification of a hypothesised graph.
//!
//! Ideal graph-state correlators take only the values `-1`, `0` and `+1`, so
//! a single disagreeing pair of outcomes proves the value is 0, while `M`
//! unanimous outcomes leave a chance of at most `2^{-M}` per sign that a
//! zero-valued observable was mistaken for `±1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analytic::neighborhood_observable;
use crate::error::{Error, Result};
use crate::exact::{measure_pauli, measure_z, StateVector};
use crate::graph::{Graph, VertexSet};
use crate::pauli::{Pauli, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleBudget {
    pub epsilon: f64,
    /// Samples required for a `±1` verdict, `ceil(-log2 ε)`.
    pub m: usize,
    pub seed: u64,
}

impl SampleBudget {
    pub fn new(epsilon: f64, seed: u64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::BadEpsilon(epsilon));
        }
        let m = (-epsilon.log2()).ceil().max(1.0) as usize;
        Ok(Self { epsilon, m, seed })
    }

    /// Confidence attached to a `±1` verdict.
    pub fn confidence(&self) -> f64 {
        1.0 - 0.5f64.powi(self.m as i32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub value: i8,
    pub samples_used: usize,
}

/// Stops at the first outcome that disagrees with its predecessors (value 0)
/// or after `M` unanimous outcomes (value `±1`).
pub fn sequential_decide<I>(outcomes: I, budget: &SampleBudget) -> Result<Decision>
where
    I: IntoIterator<Item = i8>,
{
    let mut it = outcomes.into_iter();
    decide_with(budget, || it.next().map(Ok))
}

fn decide_with<F>(budget: &SampleBudget, mut next: F) -> Result<Decision>
where
    F: FnMut() -> Option<Result<i8>>,
{
    let mut first = None;
    let mut used = 0;
    while used < budget.m {
        let Some(outcome) = next().transpose()? else {
            return Err(if used == 0 {
                Error::EmptyStream
            } else {
                Error::StreamExhausted {
                    used,
                    needed: budget.m,
                }
            });
        };
        debug_assert!(outcome == 1 || outcome == -1);
        used += 1;
        match first {
            None => first = Some(outcome),
            Some(f) if f != outcome => {
                return Ok(Decision {
                    value: 0,
                    samples_used: used,
                })
            }
            Some(_) => {}
        }
    }
    Ok(Decision {
        value: first.expect("M >= 1"),
        samples_used: used,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeVerdict {
    pub observable: PauliString,
    pub decided_value: i8,
    pub samples_used: usize,
    /// `1 - 2^{-M}` for `±1`; a 0 verdict is certain.
    pub confidence: f64,
}

impl ProbeVerdict {
    fn new(observable: PauliString, d: Decision, budget: &SampleBudget) -> Self {
        let confidence = if d.value == 0 {
            1.0
        } else {
            budget.confidence()
        };
        Self {
            observable,
            decided_value: d.value,
            samples_used: d.samples_used,
            confidence,
        }
    }
}

/// Sequential decision on repeated measurements of `p`, one fresh copy of
/// `state` per shot.
pub fn probe_observable<R: Rng + ?Sized>(
    state: &StateVector,
    p: &PauliString,
    budget: &SampleBudget,
    rng: &mut R,
) -> Result<ProbeVerdict> {
    let d = decide_with(budget, || {
        let shot = state.clone();
        Some(measure_pauli(&shot, p, rng).map(|m| m.outcome))
    })?;
    Ok(ProbeVerdict::new(p.clone(), d, budget))
}

/// Samples `σ_x^ν σ_z^{guess}`.
pub fn verify_neighborhood<R: Rng + ?Sized>(
    state: &StateVector,
    nu: usize,
    guess: &VertexSet,
    budget: &SampleBudget,
    rng: &mut R,
) -> Result<ProbeVerdict> {
    probe_observable(
        state,
        &neighborhood_observable(state.n(), nu, guess)?,
        budget,
        rng,
    )
}

/// Tests for the edge `(a, b)`: z-measures every vertex of `mask`, then
/// measures `σ_y^a σ_y^b` on the post-measurement state.
///
/// Each `-1` z-outcome on a vertex `c` leaves `σ_z^{N(c)}` behind, which
/// flips the sign of `σ_y^a σ_y^b` once for every such `c` in
/// `N(a) △ N(b)`. The neighbourhoods are taken from `hypothesis`, and the
/// `σ_y σ_y` outcome is multiplied by that parity, so the corrected stream is
/// unanimously `+1` when the edge exists and the masked neighbourhoods match.
pub fn probe_link<R: Rng + ?Sized>(
    state: &StateVector,
    a: usize,
    b: usize,
    mask: &VertexSet,
    hypothesis: &Graph,
    budget: &SampleBudget,
    rng: &mut R,
) -> Result<ProbeVerdict> {
    let n = state.n();
    if hypothesis.n() != n {
        return Err(Error::SizeMismatch {
            left: hypothesis.n(),
            right: n,
        });
    }
    if mask.universe() != n {
        return Err(Error::SizeMismatch {
            left: mask.universe(),
            right: n,
        });
    }
    let yy = PauliString::pair(n, a, Pauli::Y, b, Pauli::Y)?;
    for v in [a, b] {
        if mask.contains(v) {
            return Err(Error::MaskOverlap(v));
        }
    }
    let parity_set = hypothesis
        .neighbors(a)?
        .sym_diff(hypothesis.neighbors(b)?)?
        .intersection(mask)?;

    let d = decide_with(budget, || {
        Some((|| {
            let mut shot = state.clone();
            let mut flips = 0usize;
            for c in mask.iter() {
                let m = measure_z(&shot, c, rng)?;
                if m.outcome < 0 && parity_set.contains(c) {
                    flips += 1;
                }
                shot = m.post_state;
            }
            let raw = measure_pauli(&shot, &yy, rng)?.outcome;
            Ok(if flips.is_multiple_of(2) { raw } else { -raw })
        })())
    })?;
    Ok(ProbeVerdict::new(yy, d, budget))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexVerdict {
    pub vertex: usize,
    pub guess: VertexSet,
    #[serde(flatten)]
    pub verdict: ProbeVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkVerdict {
    pub a: usize,
    pub b: usize,
    pub hypothesized: bool,
    /// Corrected `σ_y σ_y` decided `+1`.
    pub detected: bool,
    #[serde(flatten)]
    pub verdict: ProbeVerdict,
}

impl LinkVerdict {
    pub fn mismatch(&self) -> bool {
        self.hypothesized != self.detected
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphHypothesisReport {
    pub verdicts: Vec<VertexVerdict>,
    pub links: Vec<LinkVerdict>,
    pub failing_vertices: Vec<usize>,
    pub shots_total: usize,
    pub epsilon: f64,
    pub m: usize,
    pub seed: u64,
    pub pass: bool,
}

impl GraphHypothesisReport {
    /// Pairs whose link probe contradicts the hypothesis.
    pub fn suspect_edges(&self) -> Vec<(usize, usize)> {
        self.links
            .iter()
            .filter(|l| l.mismatch())
            .map(|l| (l.a, l.b))
            .collect()
    }
}

fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Checks every vertex neighbourhood of `hypothesis` against `state`. When
/// some fail, each pair of failing vertices is link-probed with every other
/// vertex masked.
///
/// Vertex `ν` draws from substream `ν` of the budget seed and the `k`-th link
/// probe from substream `n + k`, so the report is a pure function of the
/// inputs.
pub fn verify_graph(
    state: &StateVector,
    hypothesis: &Graph,
    budget: &SampleBudget,
) -> Result<GraphHypothesisReport> {
    let n = state.n();
    if hypothesis.n() != n {
        return Err(Error::SizeMismatch {
            left: hypothesis.n(),
            right: n,
        });
    }
    let mut verdicts = Vec::with_capacity(n);
    for v in hypothesis.vertices() {
        let guess = hypothesis.neighbors(v)?.clone();
        let mut rng = substream(budget.seed, v as u64);
        let verdict = verify_neighborhood(state, v, &guess, budget, &mut rng)?;
        verdicts.push(VertexVerdict {
            vertex: v,
            guess,
            verdict,
        });
    }
    let failing_vertices: Vec<usize> = verdicts
        .iter()
        .filter(|v| v.verdict.decided_value != 1)
        .map(|v| v.vertex)
        .collect();

    let mut links = Vec::new();
    let mut index = n as u64;
    for (i, &a) in failing_vertices.iter().enumerate() {
        for &b in &failing_vertices[i + 1..] {
            let mut mask = VertexSet::full(n);
            mask.remove(a)?;
            mask.remove(b)?;
            let mut rng = substream(budget.seed, index);
            index += 1;
            let verdict = probe_link(state, a, b, &mask, hypothesis, budget, &mut rng)?;
            links.push(LinkVerdict {
                a,
                b,
                hypothesized: hypothesis.has_edge(a, b)?,
                detected: verdict.decided_value == 1,
                verdict,
            });
        }
    }

    let shots_total = verdicts
        .iter()
        .map(|v| v.verdict.samples_used)
        .sum::<usize>()
        + links.iter().map(|l| l.verdict.samples_used).sum::<usize>();
    Ok(GraphHypothesisReport {
        pass: failing_vertices.is_empty(),
        verdicts,
        links,
        failing_vertices,
        shots_total,
        epsilon: budget.epsilon,
        m: budget.m,
        seed: budget.seed,
    })
}
