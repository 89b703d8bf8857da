//! Dense statevector oracle.
//!
//! Basis index bit `ν` holds the z-basis value of qubit `ν` (vertex 0 is the
//! least significant bit); bit value 1 is the `σ_z = -1` eigenstate. Pauli
//! strings act through bit masks and are never materialized as matrices.

mod dump;
mod entanglement;
mod measure;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{Pauli, PauliString};

pub use entanglement::{
    bloch_vector, entanglement_distance, entropy_of_entanglement, reduced_density_matrix,
    total_entanglement,
};
pub use measure::{measure_pauli, measure_z, project, project_unnormalized, MeasurementOutcome};

/// Default qubit cap: 2^24 amplitudes, 256 MiB.
pub const DEFAULT_CAP: usize = 24;

/// Basis indices are `u64` masks; nothing above this can be allocated anyway.
pub const HARD_CAP: usize = 40;

/// Normalization tolerance on construction.
pub const NORM_TOL: f64 = 1e-12;

#[derive(Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl std::fmt::Debug for StateVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StateVector")
            .field("n", &self.n)
            .finish_non_exhaustive()
    }
}

impl StateVector {
    /// `|+⟩^{⊗n}`
    pub fn plus_state(n: usize) -> Result<Self> {
        check_cap(n, DEFAULT_CAP)?;
        let a = Complex64::new((0.5f64).powf(n as f64 / 2.0), 0.0);
        Ok(Self {
            n,
            amps: vec![a; 1 << n],
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_cap(n, DEFAULT_CAP)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        *amps.get_mut(index).ok_or(Error::VertexOutOfRange {
            vertex: index,
            n: 1 << n,
        })? = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Takes ownership of `amps`; the norm must be 1 within [`NORM_TOL`].
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n > HARD_CAP || amps.len() != 1 << n {
            return Err(Error::BadAmplitudeCount { len: amps.len(), n });
        }
        let norm2 = norm_sqr(&amps);
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm2));
        }
        Ok(Self { n, amps })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalize(n: usize, mut amps: Vec<Complex64>) -> Result<Self> {
        if n > HARD_CAP || amps.len() != 1 << n {
            return Err(Error::BadAmplitudeCount { len: amps.len(), n });
        }
        let norm2 = norm_sqr(&amps);
        if norm2 < NORM_TOL {
            return Err(Error::ZeroProbabilityBranch(norm2));
        }
        let scale = 1.0 / norm2.sqrt();
        for a in amps.iter_mut() {
            *a *= scale;
        }
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amps)
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        same_size(self.n, other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Applies the link unitary `U_ab(φ)` in place.
    pub fn apply_link(&mut self, a: usize, b: usize, phi: f64) -> Result<()> {
        for v in [a, b] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        let diag = link_diagonal(phi);
        let one = Complex64::new(1.0, 0.0);
        for (bits, &factor) in diag.iter().enumerate() {
            if factor == one {
                continue;
            }
            let want_a = (bits & 1) as u64;
            let want_b = (bits >> 1) as u64;
            for (i, amp) in self.amps.iter_mut().enumerate() {
                let i = i as u64;
                if (i >> a) & 1 == want_a && (i >> b) & 1 == want_b {
                    *amp *= factor;
                }
            }
        }
        Ok(())
    }

    /// Applies `∏_{(a,b)∈E} U_ab(φ)`.
    pub fn apply_graph_unitary(&mut self, g: &Graph, phi: f64) -> Result<()> {
        same_size(self.n, g.n())?;
        for (a, b) in g.edges() {
            self.apply_link(a, b, phi)?;
        }
        Ok(())
    }

    /// `P|s⟩`. Pauli strings are unitary so the result stays normalized.
    pub fn apply_pauli(&self, p: &PauliString) -> Result<StateVector> {
        same_size(self.n, p.n())?;
        let (flip, sign, coeff) = pauli_action(p);
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (i, &a) in self.amps.iter().enumerate() {
            let s = parity_sign((i as u64) & sign);
            out[i ^ flip as usize] = coeff * s * a;
        }
        Ok(StateVector {
            n: self.n,
            amps: out,
        })
    }

    /// `⟨s|P|s⟩` including the phase of `P`.
    pub fn expectation(&self, p: &PauliString) -> Result<Complex64> {
        same_size(self.n, p.n())?;
        let (flip, sign, coeff) = pauli_action(p);
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &a) in self.amps.iter().enumerate() {
            let s = parity_sign((i as u64) & sign);
            acc += self.amps[i ^ flip as usize].conj() * a * s;
        }
        Ok(coeff * acc)
    }

    /// Expectation of a hermitian string, imaginary part dropped after a
    /// sanity check at `1e-9`.
    pub fn expectation_real(&self, p: &PauliString) -> Result<f64> {
        if !p.is_hermitian() {
            return Err(Error::NotHermitian(p.to_string()));
        }
        let e = self.expectation(p)?;
        debug_assert!(
            e.im.abs() < 1e-9,
            "hermitian expectation {e} has an imaginary part"
        );
        Ok(e.re)
    }
}

/// Pseudo graph state `∏ U_ab(φ) |+⟩^V` under the default cap.
pub fn build_pgs(g: &Graph, phi: f64) -> Result<StateVector> {
    build_pgs_capped(g, phi, DEFAULT_CAP)
}

pub fn build_pgs_capped(g: &Graph, phi: f64, cap: usize) -> Result<StateVector> {
    check_cap(g.n(), cap)?;
    let mut s = StateVector::plus_state(g.n())?;
    s.apply_graph_unitary(g, phi)?;
    Ok(s)
}

/// Pseudo graph state with one interaction strength per edge, in the order of
/// [`Graph::edges`].
pub fn build_pgs_with_edge_phases(g: &Graph, phases: &[f64], cap: usize) -> Result<StateVector> {
    check_cap(g.n(), cap)?;
    let edges = g.edges();
    if edges.len() != phases.len() {
        return Err(Error::SizeMismatch {
            left: edges.len(),
            right: phases.len(),
        });
    }
    let mut s = StateVector::plus_state(g.n())?;
    for ((a, b), &phi) in edges.into_iter().zip(phases) {
        s.apply_link(a, b, phi)?;
    }
    Ok(s)
}

/// Noise hook: every edge gets `φ + δ` with `δ` uniform in `[-jitter, jitter]`.
pub fn build_pgs_jittered<R: Rng + ?Sized>(
    g: &Graph,
    phi: f64,
    jitter: f64,
    rng: &mut R,
    cap: usize,
) -> Result<StateVector> {
    let phases: Vec<f64> = (0..g.edge_count())
        .map(|_| {
            if jitter > 0.0 {
                phi + rng.random_range(-jitter..=jitter)
            } else {
                phi
            }
        })
        .collect();
    build_pgs_with_edge_phases(g, &phases, cap)
}

/// `|⟨a|b⟩|²`
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(a.inner(b)?.norm_sqr())
}

/// Diagonal of `U_ab(φ)` indexed by `bit_a | bit_b << 1`, evaluated from the
/// product `e^{-iφ/4} e^{iφ/4 σ_z^a} e^{iφ/4 σ_z^b} e^{-iφ/4 σ_z^a σ_z^b}` on
/// each z-eigenvalue pair. Only the `|11⟩` entry differs from 1.
pub fn link_diagonal(phi: f64) -> [Complex64; 4] {
    let mut d = [Complex64::new(1.0, 0.0); 4];
    for (bits, entry) in d.iter_mut().enumerate() {
        let za = if bits & 1 == 0 { 1.0 } else { -1.0 };
        let zb = if bits & 2 == 0 { 1.0 } else { -1.0 };
        let exponent = -1.0 + za + zb - za * zb;
        if exponent != 0.0 {
            *entry = Complex64::from_polar(1.0, phi / 4.0 * exponent);
        }
    }
    d
}

fn pauli_action(p: &PauliString) -> (u64, u64, Complex64) {
    let ny = p.count(Pauli::Y) as i64;
    let coeff = (p.phase() * crate::pauli::Phase::from_exponent(ny)).to_complex();
    (p.flip_mask(), p.sign_mask(), coeff)
}

fn parity_sign(bits: u64) -> f64 {
    if bits.count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(Complex64::norm_sqr).sum()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

fn same_size(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}
