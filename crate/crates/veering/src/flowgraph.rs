//! Flow graphs and directed multigraph isomorphism.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::invariants::Track;
use crate::transverse::Veering;

/// Directed multigraph on the edge classes, three arrows per tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowGraph {
    pub vertices: usize,
    /// (source, target, joins two diagonals of one tetrahedron)
    pub arrows: Vec<(usize, usize, bool)>,
}

/// Lower: from the top diagonal to the bottom diagonal and to the two
/// equatorial edges coloured differently from the bottom diagonal. Upper:
/// the same with top and bottom exchanged.
pub fn flow_graph(v: &Veering, track: Track) -> FlowGraph {
    let tt = v.transverse();
    let tri = v.triangulation();
    let mut arrows = Vec::with_capacity(3 * v.size());
    for t in 0..v.size() {
        let (src, dst) = match track {
            Track::Lower => (tt.top_edge(t), tt.bottom_edge(t)),
            Track::Upper => (tt.bottom_edge(t), tt.top_edge(t)),
        };
        arrows.push((src, dst, true));
        for (a, b) in tt.equatorial_pairs(t) {
            let e = tri.edge_between(t, a, b);
            if v.colour(e) != v.colour(dst) {
                arrows.push((src, e, false));
            }
        }
    }
    FlowGraph { vertices: tri.num_edges(), arrows }
}

impl FlowGraph {
    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for &(s, _, _) in &self.arrows {
            d[s] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for &(_, t, _) in &self.arrows {
            d[t] += 1;
        }
        d
    }

    /// In-degree plus out-degree, loops counted twice.
    pub fn valencies(&self) -> Vec<usize> {
        let (o, i) = (self.out_degrees(), self.in_degrees());
        o.iter().zip(&i).map(|(a, b)| a + b).collect()
    }

    /// Graphviz text; diagonal arrows are drawn with a double head.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n");
        for v in 0..self.vertices {
            let _ = writeln!(s, "  {v};");
        }
        for &(a, b, diag) in &self.arrows {
            let style = if diag { " [arrowhead=normalnormal, penwidth=2]" } else { "" };
            let _ = writeln!(s, "  {a} -> {b}{style};");
        }
        s.push_str("}\n");
        s
    }

    fn adjacency(&self, marked: bool) -> Vec<Vec<(u32, u32)>> {
        let mut a = vec![vec![(0u32, 0u32); self.vertices]; self.vertices];
        for &(s, t, diag) in &self.arrows {
            if marked && diag {
                a[s][t].1 += 1;
            } else {
                a[s][t].0 += 1;
            }
        }
        a
    }
}

/// Whether the two graphs are isomorphic as directed multigraphs; the
/// diagonal marking is ignored.
pub fn graphs_isomorphic(g1: &FlowGraph, g2: &FlowGraph) -> bool {
    isomorphic_impl(g1, g2, false)
}

/// As [`graphs_isomorphic`], additionally requiring diagonal arrows to map
/// to diagonal arrows.
pub fn graphs_isomorphic_marked(g1: &FlowGraph, g2: &FlowGraph) -> bool {
    isomorphic_impl(g1, g2, true)
}

fn isomorphic_impl(g1: &FlowGraph, g2: &FlowGraph, marked: bool) -> bool {
    if g1.vertices != g2.vertices || g1.arrows.len() != g2.arrows.len() {
        return false;
    }
    let a1 = g1.adjacency(marked);
    let a2 = g2.adjacency(marked);
    let Some((c1, c2)) = refine(&a1, &a2) else { return false };
    let n = g1.vertices;
    // Assign vertices of g1 in order of increasing class size.
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&c1[v]], c1[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(0, &order, &a1, &a2, &c1, &c2, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    k: usize,
    order: &[usize],
    a1: &[Vec<(u32, u32)>],
    a2: &[Vec<(u32, u32)>],
    c1: &[usize],
    c2: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..a2.len() {
        if used[w] || c2[w] != c1[v] || a1[v][v] != a2[w][w] {
            continue;
        }
        let consistent = order[..k].iter().all(|&x| {
            let y = map[x];
            a1[v][x] == a2[w][y] && a1[x][v] == a2[y][w]
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(k + 1, order, a1, a2, c1, c2, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

type Signature = (usize, (u32, u32), Vec<(usize, (u32, u32))>, Vec<(usize, (u32, u32))>);

/// Joint colour refinement; `None` when the colour histograms differ.
fn refine(a1: &[Vec<(u32, u32)>], a2: &[Vec<(u32, u32)>]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a1.len();
    let mut c1 = vec![0usize; n];
    let mut c2 = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sig = |a: &[Vec<(u32, u32)>], c: &[usize], v: usize| -> Signature {
            let mut out: Vec<(usize, (u32, u32))> =
                (0..n).filter(|&w| a[v][w] != (0, 0)).map(|w| (c[w], a[v][w])).collect();
            let mut inc: Vec<(usize, (u32, u32))> =
                (0..n).filter(|&w| a[w][v] != (0, 0)).map(|w| (c[w], a[w][v])).collect();
            out.sort_unstable();
            inc.sort_unstable();
            (c[v], a[v][v], out, inc)
        };
        let s1: Vec<Signature> = (0..n).map(|v| sig(a1, &c1, v)).collect();
        let s2: Vec<Signature> = (0..n).map(|v| sig(a2, &c2, v)).collect();
        let mut ids: BTreeMap<&Signature, usize> = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let n1: Vec<usize> = s1.iter().map(|s| ids[s]).collect();
        let n2: Vec<usize> = s2.iter().map(|s| ids[s]).collect();
        let mut h1 = n1.clone();
        let mut h2 = n2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        let new_classes = ids.len();
        c1 = n1;
        c2 = n2;
        if new_classes == classes {
            return Some((c1, c2));
        }
        classes = new_classes;
    }
}
