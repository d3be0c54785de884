//! Transverse taut structures, veering colourings and edge links.

use std::collections::VecDeque;

use crate::error::TriangulationError;
use crate::perm::{Perm4, EDGE_VERTICES};
use crate::snf::IntMatrix;
use crate::triangulation::{TautStructure, Triangulation};

/// A triangulation with a taut structure and a coorientation on its faces.
///
/// Each tetrahedron has a top diagonal and a bottom diagonal (its two pi
/// edges); its top faces are the two faces containing the top diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransverseTaut {
    tri: Triangulation,
    taut: TautStructure,
    /// `false`: the top diagonal is the pi edge through vertex 0.
    flip: Vec<bool>,
    /// Per face class, the (tetrahedron, slot) in which it is a top face.
    below: Vec<(usize, usize)>,
    /// Per face class, the (tetrahedron, slot) in which it is a bottom face.
    above: Vec<(usize, usize)>,
    orient: Vec<i32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn swap(self) -> Self {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

/// One occurrence of a face around an edge: the face class and the vertex of
/// the face opposite the edge, labelled as in the tetrahedron below the face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceOcc {
    pub face: usize,
    pub apex: usize,
}

/// One side of an edge link, ordered from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub faces: Vec<FaceOcc>,
    /// `tets[i]` lies between `faces[i]` and `faces[i + 1]`.
    pub tets: Vec<usize>,
}

impl Side {
    pub fn face_indices(&self) -> Vec<usize> {
        self.faces.iter().map(|o| o.face).collect()
    }
}

/// The faces and tetrahedra around an edge, split at its two pi angles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLink {
    pub edge: usize,
    /// Tetrahedron with this edge as top diagonal.
    pub below_tet: usize,
    /// Tetrahedron with this edge as bottom diagonal.
    pub above_tet: usize,
    pub left: Side,
    pub right: Side,
}

impl EdgeLink {
    pub fn sides(&self) -> [&Side; 2] {
        [&self.left, &self.right]
    }

    pub fn degree(&self) -> usize {
        self.left.faces.len() + self.right.faces.len()
    }

    /// Side and position of a face occurrence.
    pub fn locate(&self, occ: FaceOcc) -> Option<(&Side, usize)> {
        self.sides()
            .into_iter()
            .find_map(|s| s.faces.iter().position(|&o| o == occ).map(|i| (s, i)))
    }
}

/// Dual graph: a vertex per tetrahedron, an edge per face directed upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: usize,
    /// `edges[f] = (tet below f, tet above f)`.
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    /// Faces of a breadth-first spanning tree from tetrahedron 0, always
    /// taking the lowest-index face first. Sorted ascending.
    pub fn spanning_tree(&self) -> Vec<usize> {
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices];
        for (f, &(a, b)) in self.edges.iter().enumerate() {
            incident[a].push((f, b));
            incident[b].push((f, a));
        }
        let mut seen = vec![false; self.vertices];
        let mut tree = Vec::new();
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(t) = queue.pop_front() {
            for &(f, s) in &incident[t] {
                if !seen[s] {
                    seen[s] = true;
                    tree.push(f);
                    queue.push_back(s);
                }
            }
        }
        tree.sort_unstable();
        tree
    }

    /// Whether `c` is a 1-cycle; on failure returns an offending vertex.
    pub fn check_cycle(&self, c: &[i64]) -> Result<(), usize> {
        let mut net = vec![0i64; self.vertices];
        for (f, &(a, b)) in self.edges.iter().enumerate() {
            net[a] -= c[f];
            net[b] += c[f];
        }
        match net.iter().position(|&x| x != 0) {
            Some(t) => Err(t),
            None => Ok(()),
        }
    }
}

fn pi_edges(d: u8, flip: bool) -> ((usize, usize), (usize, usize)) {
    let with0 = EDGE_VERTICES[d as usize];
    let other = EDGE_VERTICES[5 - d as usize];
    if flip {
        (other, with0)
    } else {
        (with0, other)
    }
}

impl TransverseTaut {
    /// Coorientation with the canonical sign: the top diagonal of
    /// tetrahedron 0 is its pi edge through vertex 0.
    pub fn recover(tri: Triangulation, taut: TautStructure) -> Result<Self, TriangulationError> {
        Self::recover_with(tri, taut, false)
    }

    /// As [`TransverseTaut::recover`], choosing the other pi edge of
    /// tetrahedron 0 as top diagonal when `flip0` is set.
    pub fn recover_with(
        tri: Triangulation,
        taut: TautStructure,
        flip0: bool,
    ) -> Result<Self, TriangulationError> {
        tri.check_taut(&taut)?;
        let n = tri.size();
        let mut flip: Vec<Option<bool>> = vec![None; n];
        flip[0] = Some(flip0);
        let mut queue = VecDeque::from([0]);
        let is_top = |d: u8, fl: bool, f: usize| {
            let (_, (c, e)) = pi_edges(d, fl);
            f == c || f == e
        };
        while let Some(t) = queue.pop_front() {
            let ft = flip[t].expect("visited");
            for f in 0..4 {
                let g = tri.gluing(t, f);
                let f2 = g.perm.apply(f);
                let want_top = !is_top(taut.pi_pair[t], ft, f);
                let d2 = taut.pi_pair[g.tet];
                match flip[g.tet] {
                    Some(fl) => {
                        if is_top(d2, fl, f2) != want_top {
                            return Err(TriangulationError::NotTransverse);
                        }
                    }
                    None => {
                        let fl = is_top(d2, true, f2) == want_top;
                        flip[g.tet] = Some(fl);
                        queue.push_back(g.tet);
                    }
                }
            }
        }
        let flip: Vec<bool> = flip.into_iter().map(|f| f.expect("connected")).collect();
        let orient = tri.orientations().ok_or(TriangulationError::NonOrientable)?;
        Ok(Self::assemble(tri, taut, flip, orient))
    }

    fn assemble(tri: Triangulation, taut: TautStructure, flip: Vec<bool>, orient: Vec<i32>) -> Self {
        let nf = tri.num_faces();
        let mut below = vec![(usize::MAX, 0); nf];
        let mut above = vec![(usize::MAX, 0); nf];
        for t in 0..tri.size() {
            let (_, (c, d)) = pi_edges(taut.pi_pair[t], flip[t]);
            for f in 0..4 {
                let face = tri.face(t, f);
                if f == c || f == d {
                    below[face] = (t, f);
                } else {
                    above[face] = (t, f);
                }
            }
        }
        TransverseTaut { tri, taut, flip, below, above, orient }
    }

    /// The opposite coorientation.
    pub fn reversed(&self) -> Self {
        let flip = self.flip.iter().map(|f| !f).collect();
        Self::assemble(self.tri.clone(), self.taut.clone(), flip, self.orient.clone())
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    pub fn taut(&self) -> &TautStructure {
        &self.taut
    }

    pub fn size(&self) -> usize {
        self.tri.size()
    }

    /// Orientation sign of a tetrahedron relative to tetrahedron 0.
    pub fn orientation(&self, t: usize) -> i32 {
        self.orient[t]
    }

    /// Vertex pair of the top diagonal.
    pub fn top_diagonal(&self, t: usize) -> (usize, usize) {
        pi_edges(self.taut.pi_pair[t], self.flip[t]).0
    }

    pub fn bottom_diagonal(&self, t: usize) -> (usize, usize) {
        pi_edges(self.taut.pi_pair[t], self.flip[t]).1
    }

    pub fn top_edge(&self, t: usize) -> usize {
        let (a, b) = self.top_diagonal(t);
        self.tri.edge_between(t, a, b)
    }

    pub fn bottom_edge(&self, t: usize) -> usize {
        let (a, b) = self.bottom_diagonal(t);
        self.tri.edge_between(t, a, b)
    }

    /// Whether face slot `f` of tetrahedron `t` is one of its top faces.
    pub fn is_top_face(&self, t: usize, f: usize) -> bool {
        let (c, d) = self.bottom_diagonal(t);
        f == c || f == d
    }

    /// Top faces of each tetrahedron, as face classes.
    pub fn top_faces(&self, t: usize) -> [usize; 2] {
        let (c, d) = self.bottom_diagonal(t);
        [self.tri.face(t, c), self.tri.face(t, d)]
    }

    pub fn bottom_faces(&self, t: usize) -> [usize; 2] {
        let (a, b) = self.top_diagonal(t);
        [self.tri.face(t, a), self.tri.face(t, b)]
    }

    /// (tetrahedron, slot) with `face` as a top face.
    pub fn face_below(&self, face: usize) -> (usize, usize) {
        self.below[face]
    }

    /// (tetrahedron, slot) with `face` as a bottom face.
    pub fn face_above(&self, face: usize) -> (usize, usize) {
        self.above[face]
    }

    /// Relabels vertex `v` of face slot `f` in tetrahedron `t` into the
    /// labels of the tetrahedron below the face.
    fn canonical_vertex(&self, t: usize, f: usize, v: usize) -> usize {
        if self.is_top_face(t, f) {
            v
        } else {
            self.tri.gluing(t, f).perm.apply(v)
        }
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph {
            vertices: self.size(),
            edges: (0..self.tri.num_faces()).map(|f| (self.below[f].0, self.above[f].0)).collect(),
        }
    }

    pub fn spanning_tree(&self) -> Vec<usize> {
        self.dual_graph().spanning_tree()
    }

    /// The tetrahedron whose top diagonal is each edge class.
    pub fn tet_below_edges(&self) -> Result<Vec<usize>, TriangulationError> {
        let mut out = vec![usize::MAX; self.tri.num_edges()];
        for t in 0..self.size() {
            let e = self.top_edge(t);
            if out[e] != usize::MAX {
                return Err(TriangulationError::NotTransverse);
            }
            out[e] = t;
        }
        if out.contains(&usize::MAX) {
            return Err(TriangulationError::NotTransverse);
        }
        Ok(out)
    }

    /// Walks around `edge`, starting at the tetrahedron below it.
    pub fn edge_link(&self, edge: usize) -> Result<EdgeLink, TriangulationError> {
        let below_tet = (0..self.size())
            .find(|&t| self.top_edge(t) == edge)
            .ok_or(TriangulationError::NotTransverse)?;
        let (a, b) = self.top_diagonal(below_tet);
        let (c, d) = self.bottom_diagonal(below_tet);
        let (s1, top1) = self.walk(below_tet, a, b, c, d)?;
        let (s2, top2) = self.walk(below_tet, a, b, d, c)?;
        if top1 != top2 {
            return Err(TriangulationError::NotTransverse);
        }
        let (left, right) = if s1.faces[0].face <= s2.faces[0].face { (s1, s2) } else { (s2, s1) };
        Ok(EdgeLink { edge, below_tet, above_tet: top1, left, right })
    }

    pub fn edge_links(&self) -> Result<Vec<EdgeLink>, TriangulationError> {
        (0..self.tri.num_edges()).map(|e| self.edge_link(e)).collect()
    }

    /// Leaves tetrahedron `t` through the face opposite `x`, crossing faces
    /// around edge `ab` until a tetrahedron with `ab` as bottom diagonal.
    fn walk(
        &self,
        t: usize,
        a: usize,
        b: usize,
        x: usize,
        y: usize,
    ) -> Result<(Side, usize), TriangulationError> {
        let (mut t, mut a, mut b, mut x, mut y) = (t, a, b, x, y);
        let mut side = Side { faces: Vec::new(), tets: Vec::new() };
        for _ in 0..=4 * self.size() {
            side.faces.push(FaceOcc {
                face: self.tri.face(t, x),
                apex: self.canonical_vertex(t, x, y),
            });
            let p: Perm4 = self.tri.gluing(t, x).perm;
            let t2 = self.tri.gluing(t, x).tet;
            let (a2, b2) = (p.apply(a), p.apply(b));
            let bottom = self.bottom_diagonal(t2);
            if bottom == (a2.min(b2), a2.max(b2)) {
                return Ok((side, t2));
            }
            if self.taut.is_pi(t2, crate::perm::edge_index(a2, b2)) {
                return Err(TriangulationError::NotTransverse);
            }
            side.tets.push(t2);
            (t, a, b, x, y) = (t2, a2, b2, p.apply(y), p.apply(x));
        }
        Err(TriangulationError::NotTransverse)
    }

    /// Branch equations matrix: faces by edges, column `e` is the sum of the
    /// left faces of `e` minus the sum of its right faces.
    pub fn branch_matrix(&self) -> Result<IntMatrix, TriangulationError> {
        let links = self.edge_links()?;
        Ok(branch_matrix_from_links(self.tri.num_faces(), &links))
    }

    /// Equatorial vertex pairs (the four edges other than the diagonals).
    pub fn equatorial_pairs(&self, t: usize) -> [(usize, usize); 4] {
        let (p, q) = self.top_diagonal(t);
        let (r, s) = self.bottom_diagonal(t);
        let ord = |x: usize, y: usize| (x.min(y), x.max(y));
        [ord(p, r), ord(q, s), ord(p, s), ord(q, r)]
    }

    /// Counterclockwise order (seen from above) of the vertices of `face`,
    /// labelled in the tetrahedron below it.
    pub fn face_ccw_from_above(&self, face: usize) -> [usize; 3] {
        let (t, x) = self.below[face];
        let mut vs = [0; 3];
        for (slot, v) in vs.iter_mut().zip((0..4).filter(|&v| v != x)) {
            *slot = v;
        }
        let parity = if x % 2 == 0 { 1 } else { -1 };
        if self.orient[t] * parity < 0 {
            vs
        } else {
            [vs[0], vs[2], vs[1]]
        }
    }

    /// Per (tetrahedron, slot), the canonical labelling of a face vertex.
    pub fn face_occurrence(&self, t: usize, f: usize, apex: usize) -> FaceOcc {
        FaceOcc { face: self.tri.face(t, f), apex: self.canonical_vertex(t, f, apex) }
    }
}

pub fn branch_matrix_from_links(faces: usize, links: &[EdgeLink]) -> IntMatrix {
    let mut b = IntMatrix::zeros(faces, links.len());
    for link in links {
        for o in &link.left.faces {
            b[(o.face, link.edge)] += 1;
        }
        for o in &link.right.faces {
            b[(o.face, link.edge)] -= 1;
        }
    }
    b
}

/// A transverse taut triangulation with a veering colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Veering {
    tt: TransverseTaut,
    colours: Vec<Colour>,
}

impl Veering {
    /// Recovers the colouring; the global swap is fixed by making edge 0 red.
    pub fn new(tt: TransverseTaut) -> Result<Self, TriangulationError> {
        let colours = recover_veering_colours(&tt)?;
        Ok(Veering { tt, colours })
    }

    /// Parses a census string and recovers all structure.
    pub fn from_census(s: &str) -> Result<Self, TriangulationError> {
        let (tri, taut) = crate::triangulation::parse_census_string(s)?;
        Self::new(TransverseTaut::recover(tri, taut)?)
    }

    pub fn from_parts(tt: TransverseTaut, colours: Vec<Colour>) -> Self {
        Veering { tt, colours }
    }

    pub fn transverse(&self) -> &TransverseTaut {
        &self.tt
    }

    pub fn triangulation(&self) -> &Triangulation {
        self.tt.triangulation()
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, e: usize) -> Colour {
        self.colours[e]
    }

    /// Colour of the edge between two vertices of a tetrahedron.
    pub fn colour_between(&self, t: usize, a: usize, b: usize) -> Colour {
        self.colours[self.tt.triangulation().edge_between(t, a, b)]
    }

    /// Both coorientations reversed and both colours swapped.
    pub fn reversed(&self) -> Self {
        Veering {
            tt: self.tt.reversed(),
            colours: self.colours.iter().map(|c| c.swap()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.tt.size()
    }
}

/// Edge colouring making every tetrahedron veering, with edge 0 red.
pub fn recover_veering_colours(tt: &TransverseTaut) -> Result<Vec<Colour>, TriangulationError> {
    let tri = tt.triangulation();
    let mut colours: Vec<Option<Colour>> = vec![None; tri.num_edges()];
    for t in 0..tt.size() {
        let (p, q) = tt.top_diagonal(t);
        let (r, s) = tt.bottom_diagonal(t);
        let chi = Perm4([p as u8, q as u8, r as u8, s as u8]).sign() * tt.orientation(t);
        let (first, second) = if chi > 0 { (Colour::Red, Colour::Blue) } else { (Colour::Blue, Colour::Red) };
        for ((x, y), col) in [((p, r), first), ((q, s), first), ((p, s), second), ((q, r), second)] {
            let e = tri.edge_between(t, x, y);
            match colours[e] {
                Some(c) if c != col => return Err(TriangulationError::NotVeering),
                _ => colours[e] = Some(col),
            }
        }
    }
    let mut out: Vec<Colour> = colours
        .into_iter()
        .map(|c| c.ok_or(TriangulationError::NotVeering))
        .collect::<Result<_, _>>()?;
    if out.first() == Some(&Colour::Blue) {
        out.iter_mut().for_each(|c| *c = c.swap());
    }
    Ok(out)
}
