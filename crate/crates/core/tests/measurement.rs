mod common;

use common::{corpus, gs};
use gslab_core::exact::{
    entanglement_distance, fidelity, project, project_unnormalized, StateVector,
};
use gslab_core::graph::{Graph, VertexSet};
use gslab_core::pauli::{Pauli, PauliString};
use num_complex::Complex64;

/// `|b⟩_a ⊗ |G∖a⟩`, built by filtering the amplitudes of `|G∖a⟩` directly.
fn removed_target(g: &Graph, a: usize, bit: usize) -> StateVector {
    let rest = gs(&g.remove_vertex(a).unwrap());
    let amps = rest
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            if (i >> a) & 1 == bit {
                z
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    StateVector::normalize(g.n(), amps).unwrap()
}

#[test]
fn z_measurement_isolates_the_vertex() {
    for ng in corpus() {
        let g = &ng.graph;
        let s = gs(g);
        for a in g.vertices() {
            let z = PauliString::single(g.n(), a, Pauli::Z).unwrap();
            let (p_plus, post) = project(&s, &z, 1).unwrap();
            assert!((p_plus - 0.5).abs() < 1e-12);
            assert!((fidelity(&post, &removed_target(g, a, 0)).unwrap() - 1.0).abs() < 1e-10);

            let (_, post) = project(&s, &z, -1).unwrap();
            let corrected = post
                .apply_pauli(&PauliString::z_string(g.neighbors(a).unwrap()))
                .unwrap();
            let f = fidelity(&corrected, &removed_target(g, a, 1)).unwrap();
            assert!((f - 1.0).abs() < 1e-10, "{} a={a}: {f}", ng.name);
            if g.degree(a).unwrap() > 0 {
                // without the correction the state differs
                assert!(fidelity(&post, &removed_target(g, a, 1)).unwrap() < 1.0 - 1e-6);
            }
        }
    }
}

#[test]
fn x_projector_equals_neighborhood_z_projector() {
    for ng in corpus() {
        let g = &ng.graph;
        let s = gs(g);
        for nu in g.vertices() {
            let x = PauliString::single(g.n(), nu, Pauli::X).unwrap();
            let zn = PauliString::z_string(g.neighbors(nu).unwrap());
            let px = project_unnormalized(&s, &x, 1).unwrap();
            let pz = project_unnormalized(&s, &zn, 1).unwrap();
            let diff: f64 = px.iter().zip(&pz).map(|(a, b)| (a - b).norm_sqr()).sum();
            assert!(diff.sqrt() <= 1e-10, "{} ν={nu}", ng.name);
        }
    }
}

/// `U_G |+⟩^{V∖N} ⊗ (|+⟩^N + |-⟩^N)/√2` from its computational-basis
/// amplitudes: the bracket keeps exactly the even-parity strings on `N`.
fn ghz_target(g: &Graph, nu: usize) -> StateVector {
    let n = g.n();
    let nb = g.neighbors(nu).unwrap();
    let mask: usize = nb.iter().map(|v| 1 << v).sum();
    let amps = (0..1usize << n)
        .map(|i| {
            if (i & mask).count_ones().is_multiple_of(2) {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    let mut s = StateVector::normalize(n, amps).unwrap();
    s.apply_graph_unitary(g, std::f64::consts::PI).unwrap();
    s
}

#[test]
fn x_measurement_on_star_center_prepares_ghz() {
    for k in 1..=6 {
        let g = Graph::star(k);
        let x = PauliString::single(g.n(), 0, Pauli::X).unwrap();
        let (_, post) = project(&gs(&g), &x, 1).unwrap();
        let f = fidelity(&post, &ghz_target(&g, 0)).unwrap();
        assert!((f - 1.0).abs() < 1e-10, "K1,{k}: {f}");
    }
}

#[test]
fn undoing_the_links_leaves_a_ghz_register() {
    for k in 2..=5 {
        let g = Graph::star(k);
        let x = PauliString::single(g.n(), 0, Pauli::X).unwrap();
        let (_, mut post) = project(&gs(&g), &x, 1).unwrap();
        post.apply_graph_unitary(&g, std::f64::consts::PI).unwrap();
        for a in 1..=k {
            assert!((entanglement_distance(&post, a).unwrap() - 1.0).abs() < 1e-10);
            for b in a + 1..=k {
                let xx = PauliString::pair(g.n(), a, Pauli::X, b, Pauli::X).unwrap();
                assert!((post.expectation_real(&xx).unwrap() - 1.0).abs() < 1e-10);
            }
        }
        let leaves = VertexSet::from_vertices(g.n(), 1..=k).unwrap();
        let zn = PauliString::z_string(&leaves);
        assert!((post.expectation_real(&zn).unwrap() - 1.0).abs() < 1e-10);
    }
}
