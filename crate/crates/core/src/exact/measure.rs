use num_complex::Complex64;
use rand::Rng;

use super::StateVector;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};

/// Branches below this probability are never projected onto.
pub const MIN_BRANCH_PROBABILITY: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    pub observable: PauliString,
    /// `+1` or `-1`.
    pub outcome: i8,
    pub probability: f64,
    pub post_state: StateVector,
}

/// `(I ± P)/2 |s⟩` without renormalization.
pub fn project_unnormalized(
    s: &StateVector,
    p: &PauliString,
    outcome: i8,
) -> Result<Vec<Complex64>> {
    if !p.is_hermitian() {
        return Err(Error::NotHermitian(p.to_string()));
    }
    let ps = s.apply_pauli(p)?;
    let sign = if outcome >= 0 { 0.5 } else { -0.5 };
    Ok(s.amplitudes()
        .iter()
        .zip(ps.amplitudes())
        .map(|(a, b)| a * 0.5 + b * sign)
        .collect())
}

/// Projects onto the `outcome` eigenspace of `p` and renormalizes.
/// Returns the Born probability of that branch and the post-measurement state.
pub fn project(s: &StateVector, p: &PauliString, outcome: i8) -> Result<(f64, StateVector)> {
    let raw = project_unnormalized(s, p, outcome)?;
    let prob: f64 = raw.iter().map(Complex64::norm_sqr).sum();
    if prob < MIN_BRANCH_PROBABILITY {
        return Err(Error::ZeroProbabilityBranch(prob));
    }
    Ok((prob, StateVector::normalize(s.n(), raw)?))
}

/// Samples a projective measurement of the hermitian string `p`.
pub fn measure_pauli<R: Rng + ?Sized>(
    s: &StateVector,
    p: &PauliString,
    rng: &mut R,
) -> Result<MeasurementOutcome> {
    let expectation = s.expectation_real(p)?;
    let mut p_plus = ((1.0 + expectation) / 2.0).clamp(0.0, 1.0);
    if p_plus < MIN_BRANCH_PROBABILITY {
        p_plus = 0.0;
    } else if 1.0 - p_plus < MIN_BRANCH_PROBABILITY {
        p_plus = 1.0;
    }
    let outcome = if rng.random::<f64>() < p_plus { 1 } else { -1 };
    let (probability, post_state) = project(s, p, outcome)?;
    Ok(MeasurementOutcome {
        observable: p.clone(),
        outcome,
        probability,
        post_state,
    })
}

/// z-basis measurement of a single qubit.
pub fn measure_z<R: Rng + ?Sized>(
    s: &StateVector,
    v: usize,
    rng: &mut R,
) -> Result<MeasurementOutcome> {
    measure_pauli(s, &PauliString::single(s.n(), v, Pauli::Z)?, rng)
}
