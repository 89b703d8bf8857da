use num_complex::Complex64;

use super::StateVector;
use crate::entropy::binary_entropy;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};

/// `(⟨σ_x^ν⟩, ⟨σ_y^ν⟩, ⟨σ_z^ν⟩)`
pub fn bloch_vector(s: &StateVector, v: usize) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (slot, axis) in out.iter_mut().zip(Pauli::AXES) {
        *slot = s.expectation_real(&PauliString::single(s.n(), v, axis)?)?;
    }
    Ok(out)
}

/// `1 - |⟨σ^ν⟩|²`: 0 for a factorizable qubit, 1 for a maximally entangled one.
pub fn entanglement_distance(s: &StateVector, v: usize) -> Result<f64> {
    let b = bloch_vector(s, v)?;
    let r2: f64 = b.iter().map(|x| x * x).sum();
    Ok((1.0 - r2).clamp(0.0, 1.0))
}

pub fn total_entanglement(s: &StateVector) -> Result<f64> {
    (0..s.n()).map(|v| entanglement_distance(s, v)).sum()
}

/// One-qubit reduced density matrix `[[ρ00, ρ01], [ρ10, ρ11]]` by partial trace.
pub fn reduced_density_matrix(s: &StateVector, v: usize) -> Result<[[Complex64; 2]; 2]> {
    if v >= s.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: s.n(),
        });
    }
    let bit = 1usize << v;
    let amps = s.amplitudes();
    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (i, &a0) in amps.iter().enumerate() {
        if i & bit != 0 {
            continue;
        }
        let a1 = amps[i | bit];
        rho[0][0] += a0 * a0.conj();
        rho[1][1] += a1 * a1.conj();
        rho[0][1] += a0 * a1.conj();
    }
    rho[1][0] = rho[0][1].conj();
    Ok(rho)
}

/// Von Neumann entropy (bits) of the one-qubit reduced state, from the
/// eigenvalues of the 2x2 reduced density matrix.
pub fn entropy_of_entanglement(s: &StateVector, v: usize) -> Result<f64> {
    let rho = reduced_density_matrix(s, v)?;
    let tr = rho[0][0].re + rho[1][1].re;
    let det = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).re;
    let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
    let lambda = tr / 2.0 + disc;
    Ok(binary_entropy(lambda))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    use super::*;
    use crate::exact::build_pgs;
    use crate::graph::Graph;

    #[test]
    fn product_state_is_unentangled() {
        let s = StateVector::plus_state(3).unwrap();
        let b = bloch_vector(&s, 0).unwrap();
        assert!((b[0] - 1.0).abs() < 1e-14 && b[1].abs() < 1e-15 && b[2].abs() < 1e-15);
        assert!(entanglement_distance(&s, 1).unwrap() < 1e-15);
        assert!(total_entanglement(&s).unwrap() < 1e-14);
        assert!(entropy_of_entanglement(&s, 2).unwrap() < 1e-12);
    }

    #[test]
    fn genuine_graph_state_is_maximally_entangled() {
        let s = build_pgs(&Graph::path(3), PI).unwrap();
        for v in 0..3 {
            let b = bloch_vector(&s, v).unwrap();
            assert!(b.iter().all(|x| x.abs() < 1e-12), "{b:?}");
            assert!((entanglement_distance(&s, v).unwrap() - 1.0).abs() < 1e-12);
            assert!((entropy_of_entanglement(&s, v).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((total_entanglement(&s).unwrap() - 3.0).abs() < 1e-12);
        let k2 = build_pgs(&Graph::path(2), PI).unwrap();
        assert!((total_entanglement(&k2).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn half_pi_single_edge_bloch_vector() {
        let s = build_pgs(&Graph::path(2), FRAC_PI_2).unwrap();
        for v in 0..2 {
            let b = bloch_vector(&s, v).unwrap();
            let want = [0.5, -0.5, 0.0];
            for k in 0..3 {
                assert!((b[k] - want[k]).abs() < 1e-14, "{b:?}");
            }
            let h = binary_entropy((1.0 + SQRT_2 / 2.0) / 2.0);
            assert!((entropy_of_entanglement(&s, v).unwrap() - h).abs() < 1e-12);
        }
    }

    #[test]
    fn half_pi_path_center() {
        let s = build_pgs(&Graph::path(3), FRAC_PI_2).unwrap();
        assert!((entanglement_distance(&s, 1).unwrap() - 0.75).abs() < 1e-14);
    }

    #[test]
    fn entropy_matches_bloch_norm() {
        let s = build_pgs(&Graph::cycle(5), 0.9).unwrap();
        for v in 0..5 {
            let b = bloch_vector(&s, v).unwrap();
            let r = b.iter().map(|x| x * x).sum::<f64>().sqrt();
            let h = binary_entropy((1.0 + r) / 2.0);
            assert!((entropy_of_entanglement(&s, v).unwrap() - h).abs() < 1e-10);
        }
    }
}
