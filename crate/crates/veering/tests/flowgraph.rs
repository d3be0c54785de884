mod common;

use common::{fixtures, veering};
use proptest::prelude::*;
use veering::flowgraph::graphs_isomorphic_marked;
use veering::{flow_graph, graphs_isomorphic, FlowGraph, Track};

#[test]
fn three_arrows_per_tetrahedron() {
    for sig in fixtures() {
        let v = veering(&sig);
        for track in [Track::Lower, Track::Upper] {
            let g = flow_graph(&v, track);
            assert_eq!(g.vertices, v.size(), "{sig}");
            assert_eq!(g.arrows.len(), 3 * v.size(), "{sig}");
            assert_eq!(g.arrows.iter().filter(|a| a.2).count(), v.size(), "{sig}");
            // Each edge is the top diagonal of exactly one tetrahedron.
            let out = g.out_degrees();
            assert!(out.iter().all(|&d| d == 3), "{sig}: {out:?}");
        }
    }
}

#[test]
fn figure_eight_graphs() {
    let v = veering("cPcbbbiht_12");
    let lower = flow_graph(&v, Track::Lower);
    let upper = flow_graph(&v, Track::Upper);
    assert!(graphs_isomorphic(&lower, &upper));
    assert_eq!(lower.in_degrees().iter().sum::<usize>(), 6);
    assert_eq!(lower.valencies(), [6, 6]);
}

#[test]
fn noniso_pair_with_equal_polynomials() {
    let v = veering("hLMzMkbcdefggghhhqxqkc_1221002");
    let lower = flow_graph(&v, Track::Lower);
    let upper = flow_graph(&v, Track::Upper);
    assert!(!graphs_isomorphic(&lower, &upper));
    assert!(!graphs_isomorphic_marked(&lower, &upper));
    // Each graph is isomorphic to itself under reversal of the coorientation.
    let r = v.reversed();
    assert!(graphs_isomorphic(&lower, &flow_graph(&r, Track::Upper)));
}

#[test]
fn dot_output() {
    let g = flow_graph(&veering("cPcbbbiht_12"), Track::Lower);
    let dot = g.to_dot("lower");
    assert!(dot.starts_with("digraph \"lower\" {\n"));
    assert!(dot.ends_with("}\n"));
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert_eq!(dot.matches("arrowhead=normalnormal").count(), 2);
}

fn relabel(g: &FlowGraph, perm: &[usize]) -> FlowGraph {
    let mut arrows: Vec<_> = g.arrows.iter().map(|&(a, b, d)| (perm[a], perm[b], d)).collect();
    arrows.reverse();
    FlowGraph { vertices: g.vertices, arrows }
}

proptest! {
    #[test]
    fn isomorphism_ignores_labels(idx in 0usize..17, perm in Just((0..11).collect::<Vec<usize>>()).prop_shuffle()) {
        let sigs = fixtures();
        let v = veering(&sigs[idx % sigs.len()]);
        let g = flow_graph(&v, Track::Lower);
        let p: Vec<usize> = perm.into_iter().filter(|&x| x < g.vertices).collect();
        let h = relabel(&g, &p);
        prop_assert!(graphs_isomorphic(&g, &h));
        prop_assert!(graphs_isomorphic_marked(&g, &h));
        // Turning one arrow into a loop changes the graph when it had none.
        if g.arrows.iter().all(|x| x.0 != x.1) {
            let mut broken = h.clone();
            let (a, _, d) = broken.arrows[0];
            broken.arrows[0] = (a, a, d);
            prop_assert!(!graphs_isomorphic(&g, &broken));
        }
    }
}
