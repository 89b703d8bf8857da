#![allow(dead_code)]

use std::f64::consts::PI;

use gslab_core::exact::{build_pgs, StateVector};
use gslab_core::graph::{standard_corpus, Graph, NamedGraph, VertexSet};
use gslab_core::pauli::{Pauli, PauliString, Phase};
use rand::Rng;

pub const CORPUS_SEED: u64 = 2024;

/// Named families plus 20 random graphs on at most 10 vertices.
pub fn corpus() -> Vec<NamedGraph> {
    standard_corpus(20, CORPUS_SEED)
}

pub fn random_graphs() -> Vec<NamedGraph> {
    corpus()
        .into_iter()
        .filter(|g| g.name.starts_with('G'))
        .collect()
}

pub fn gs(g: &Graph) -> StateVector {
    build_pgs(g, PI).unwrap()
}

pub fn oracle(s: &StateVector, p: &PauliString) -> f64 {
    s.expectation_real(p).unwrap()
}

/// Random hermitian string with at least one non-identity letter.
pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> PauliString {
    loop {
        let letters: Vec<Pauli> = (0..n)
            .map(|_| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.random_range(0..4)])
            .collect();
        let phase = if rng.random_bool(0.5) {
            Phase::ONE
        } else {
            Phase::MINUS_ONE
        };
        let p = PauliString::from_letters(letters, phase);
        if !p.is_identity_letters() {
            return p;
        }
    }
}

/// Random subset of `0..n` without `nu` that differs from `avoid`.
pub fn random_wrong_guess<R: Rng>(
    n: usize,
    nu: usize,
    avoid: &VertexSet,
    rng: &mut R,
) -> Option<VertexSet> {
    if n < 2 {
        return None;
    }
    loop {
        let mut s = VertexSet::empty(n);
        for v in (0..n).filter(|&v| v != nu) {
            if rng.random_bool(0.5) {
                s.insert(v).unwrap();
            }
        }
        if &s != avoid {
            return Some(s);
        }
    }
}
