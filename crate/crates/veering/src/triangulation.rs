//! Glued tetrahedra, their skeleta, and taut angle structures.

use crate::error::TriangulationError;
use crate::isosig::{self, Gluing};
use crate::perm::{Perm4, EDGE_VERTICES};

/// Ideal triangulation given by face gluings, with face, edge and vertex
/// classes numbered in order of first appearance (tetrahedra ascending;
/// faces 3 down to 0; edges and vertices ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    gluings: Vec<[Gluing; 4]>,
    face_of: Vec<[usize; 4]>,
    edge_of: Vec<[usize; 6]>,
    vertex_of: Vec<[usize; 4]>,
    faces: usize,
    edges: usize,
    vertices: usize,
}

/// Per tetrahedron, which opposite-edge pair carries the angle pi:
/// 0 for (01|23), 1 for (02|13), 2 for (03|12).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautStructure {
    pub pi_pair: Vec<u8>,
}

impl TautStructure {
    /// Whether edge slot `e` of tetrahedron `t` has angle pi.
    pub fn is_pi(&self, t: usize, e: usize) -> bool {
        let d = self.pi_pair[t] as usize;
        e == d || e == 5 - d
    }

    pub fn digits(&self) -> String {
        self.pi_pair.iter().map(|d| char::from(b'0' + d)).collect()
    }
}

impl Triangulation {
    pub fn from_gluings(gluings: Vec<[Gluing; 4]>) -> Result<Self, TriangulationError> {
        let n = gluings.len();
        if n == 0 {
            return Err(TriangulationError::Malformed("no tetrahedra".into()));
        }
        for (t, row) in gluings.iter().enumerate() {
            for (f, g) in row.iter().enumerate() {
                let bad = || TriangulationError::BadGluing { tet: t, face: f };
                if g.tet >= n {
                    return Err(bad());
                }
                let back = gluings[g.tet][g.perm.apply(f)];
                if back.tet != t || back.perm != g.perm.inverse() || (g.tet == t && g.perm.apply(f) == f) {
                    return Err(bad());
                }
            }
        }
        let mut tri = Triangulation {
            gluings,
            face_of: vec![[usize::MAX; 4]; n],
            edge_of: vec![[usize::MAX; 6]; n],
            vertex_of: vec![[usize::MAX; 4]; n],
            faces: 0,
            edges: 0,
            vertices: 0,
        };
        tri.number_faces();
        tri.number_edges();
        tri.number_vertices();
        Ok(tri)
    }

    fn number_faces(&mut self) {
        for t in 0..self.size() {
            for f in (0..4).rev() {
                if self.face_of[t][f] == usize::MAX {
                    let g = self.gluings[t][f];
                    self.face_of[t][f] = self.faces;
                    self.face_of[g.tet][g.perm.apply(f)] = self.faces;
                    self.faces += 1;
                }
            }
        }
    }

    fn number_edges(&mut self) {
        for t in 0..self.size() {
            for e in 0..6 {
                if self.edge_of[t][e] != usize::MAX {
                    continue;
                }
                let class = self.edges;
                self.edges += 1;
                let mut stack = vec![(t, e)];
                self.edge_of[t][e] = class;
                while let Some((s, k)) = stack.pop() {
                    let (a, b) = EDGE_VERTICES[k];
                    for f in (0..4).filter(|&f| f != a && f != b) {
                        let g = self.gluings[s][f];
                        let k2 = crate::perm::edge_index(g.perm.apply(a), g.perm.apply(b));
                        if self.edge_of[g.tet][k2] == usize::MAX {
                            self.edge_of[g.tet][k2] = class;
                            stack.push((g.tet, k2));
                        }
                    }
                }
            }
        }
    }

    fn number_vertices(&mut self) {
        for t in 0..self.size() {
            for v in 0..4 {
                if self.vertex_of[t][v] != usize::MAX {
                    continue;
                }
                let class = self.vertices;
                self.vertices += 1;
                let mut stack = vec![(t, v)];
                self.vertex_of[t][v] = class;
                while let Some((s, w)) = stack.pop() {
                    for f in (0..4).filter(|&f| f != w) {
                        let g = self.gluings[s][f];
                        let w2 = g.perm.apply(w);
                        if self.vertex_of[g.tet][w2] == usize::MAX {
                            self.vertex_of[g.tet][w2] = class;
                            stack.push((g.tet, w2));
                        }
                    }
                }
            }
        }
    }

    /// Number of tetrahedra.
    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn gluing(&self, t: usize, f: usize) -> Gluing {
        self.gluings[t][f]
    }

    pub fn gluings(&self) -> &[[Gluing; 4]] {
        &self.gluings
    }

    pub fn face(&self, t: usize, f: usize) -> usize {
        self.face_of[t][f]
    }

    pub fn edge(&self, t: usize, e: usize) -> usize {
        self.edge_of[t][e]
    }

    pub fn vertex(&self, t: usize, v: usize) -> usize {
        self.vertex_of[t][v]
    }

    /// Edge class between two vertices of a tetrahedron.
    pub fn edge_between(&self, t: usize, a: usize, b: usize) -> usize {
        self.edge_of[t][crate::perm::edge_index(a, b)]
    }

    /// Number of tetrahedron-edge embeddings of each edge class.
    pub fn edge_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.edges];
        for row in &self.edge_of {
            for &e in row {
                d[e] += 1;
            }
        }
        d
    }

    /// Orientation sign of every tetrahedron relative to tetrahedron 0, or
    /// `None` if the triangulation is not orientable. Gluings between
    /// coherently oriented tetrahedra are odd permutations.
    pub fn orientations(&self) -> Option<Vec<i32>> {
        let n = self.size();
        let mut o = vec![0; n];
        o[0] = 1;
        let mut stack = vec![0];
        while let Some(t) = stack.pop() {
            for g in &self.gluings[t] {
                let want = -g.perm.sign() * o[t];
                if o[g.tet] == 0 {
                    o[g.tet] = want;
                    stack.push(g.tet);
                } else if o[g.tet] != want {
                    return None;
                }
            }
        }
        Some(o)
    }

    /// Relabels the vertices of tetrahedron `t` by the involution `s`.
    fn relabel(&mut self, relabels: &[Perm4]) {
        let old = self.gluings.clone();
        for (t, row) in old.iter().enumerate() {
            let st = relabels[t];
            for (f, g) in row.iter().enumerate() {
                let sd = relabels[g.tet];
                let perm = sd.compose(g.perm).compose(st.inverse());
                self.gluings[t][st.apply(f)] = Gluing { tet: g.tet, perm };
            }
        }
    }

    /// Checks the taut condition: every edge class meets exactly two pi angles.
    pub fn check_taut(&self, taut: &TautStructure) -> Result<(), TriangulationError> {
        if taut.pi_pair.len() != self.size() {
            return Err(TriangulationError::AngleCount { digits: taut.pi_pair.len(), n: self.size() });
        }
        let mut pis = vec![0; self.edges];
        for t in 0..self.size() {
            for e in 0..6 {
                if taut.is_pi(t, e) {
                    pis[self.edge_of[t][e]] += 1;
                }
            }
        }
        match pis.iter().position(|&c| c != 2) {
            Some(edge) => Err(TriangulationError::NotTaut { edge, pis: pis[edge] }),
            None => Ok(()),
        }
    }

    /// Serializes in the structured text format read by [`Triangulation::parse_text`].
    pub fn to_text(&self, taut: &TautStructure) -> String {
        let mut s = format!("tetrahedra {}\n", self.size());
        for row in &self.gluings {
            let parts: Vec<String> = row.iter().map(|g| format!("{}:{}", g.tet, g.perm)).collect();
            s.push_str(&parts.join(" "));
            s.push('\n');
        }
        s.push_str(&format!("angles {}\n", taut.digits()));
        s
    }

    /// Reads the structured text format:
    ///
    /// ```text
    /// # comments allowed
    /// tetrahedra 2
    /// 1:3120 1:1230 1:1302 1:0321
    /// 0:2031 0:0321 0:3012 0:3120
    /// angles 12
    /// ```
    ///
    /// Line `t` of the table lists, for faces 0..3 of tetrahedron `t`, the
    /// partner tetrahedron and the images of vertices 0..3. No relabelling is
    /// applied.
    pub fn parse_text(text: &str) -> Result<(Self, TautStructure), TriangulationError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let fail = |line: usize, msg: &str| TriangulationError::Format { line, msg: msg.to_string() };
        let (ln, head) = lines.next().ok_or_else(|| fail(0, "empty input"))?;
        let n: usize = head
            .strip_prefix("tetrahedra")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| fail(ln, "expected `tetrahedra N`"))?;
        let mut gluings = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, l) = lines.next().ok_or_else(|| fail(0, "missing gluing line"))?;
            let parts: Vec<&str> = l.split_whitespace().collect();
            if parts.len() != 4 {
                return Err(fail(ln, "expected four gluings"));
            }
            let mut row = [Gluing { tet: 0, perm: Perm4::IDENTITY }; 4];
            for (slot, p) in row.iter_mut().zip(parts) {
                let (t, perm) = p.split_once(':').ok_or_else(|| fail(ln, "expected tet:perm"))?;
                let tet = t.parse().map_err(|_| fail(ln, "bad tetrahedron index"))?;
                let digits: Vec<u8> = perm.bytes().map(|b| b.wrapping_sub(b'0')).collect();
                let arr: [u8; 4] = digits.try_into().map_err(|_| fail(ln, "bad permutation"))?;
                let perm = Perm4::new(arr).ok_or_else(|| fail(ln, "bad permutation"))?;
                *slot = Gluing { tet, perm };
            }
            gluings.push(row);
        }
        let (ln, l) = lines.next().ok_or_else(|| fail(0, "missing angles line"))?;
        let digits = l.strip_prefix("angles").ok_or_else(|| fail(ln, "expected `angles DIGITS`"))?;
        let taut = parse_angle_digits(digits.trim())?;
        if let Some((ln, _)) = lines.next() {
            return Err(fail(ln, "unexpected trailing content"));
        }
        let tri = Triangulation::from_gluings(gluings)?;
        tri.check_taut(&taut)?;
        Ok((tri, taut))
    }
}

fn parse_angle_digits(s: &str) -> Result<TautStructure, TriangulationError> {
    let pi_pair = s
        .bytes()
        .map(|b| match b {
            b'0'..=b'2' => Ok(b - b'0'),
            _ => Err(TriangulationError::Angles(s.to_string())),
        })
        .collect::<Result<Vec<u8>, _>>()?;
    if pi_pair.is_empty() {
        return Err(TriangulationError::Malformed(s.to_string()));
    }
    Ok(TautStructure { pi_pair })
}

/// Parses `isoSig_digits`. Tetrahedra with negative orientation (relative to
/// tetrahedron 0) are relabelled by the transposition fixing their pi pair
/// (swap 0 with 1, 2 or 3 for digit 0, 1 or 2), so every gluing becomes
/// orientation reversing and the angle digits keep their meaning.
pub fn parse_census_string(s: &str) -> Result<(Triangulation, TautStructure), TriangulationError> {
    let s = s.trim();
    let (sig, digits) = s
        .split_once('_')
        .ok_or_else(|| TriangulationError::Malformed(s.to_string()))?;
    if sig.is_empty() || digits.is_empty() || digits.contains('_') {
        return Err(TriangulationError::Malformed(s.to_string()));
    }
    let gluings = isosig::decode(sig)?;
    let taut = parse_angle_digits(digits)?;
    if gluings.len() != taut.pi_pair.len() {
        return Err(TriangulationError::AngleCount { digits: taut.pi_pair.len(), n: gluings.len() });
    }
    let mut tri = Triangulation::from_gluings(gluings)?;
    tri.check_taut(&taut)?;
    let orient = tri.orientations().ok_or(TriangulationError::NonOrientable)?;
    if orient.iter().any(|&o| o < 0) {
        let relabels: Vec<Perm4> = orient
            .iter()
            .zip(&taut.pi_pair)
            .map(|(&o, &d)| if o < 0 { Perm4::transposition(0, d + 1) } else { Perm4::IDENTITY })
            .collect();
        tri.relabel(&relabels);
        tri = Triangulation::from_gluings(tri.gluings)?;
        tri.check_taut(&taut)?;
    }
    Ok((tri, taut))
}
