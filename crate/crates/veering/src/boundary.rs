//! Cusps, carried surfaces, boundary cycles and the Teichmüller polynomial.

use crate::error::ComputeError;
use crate::invariants::taut_polynomial;
use crate::laurent::LaurentPoly;
use crate::transverse::{EdgeLink, FaceOcc, TransverseTaut};

/// Ideal vertex class of every (tetrahedron, vertex slot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspStructure {
    pub classes: Vec<[usize; 4]>,
    pub count: usize,
}

impl CuspStructure {
    pub fn cusp(&self, t: usize, v: usize) -> usize {
        self.classes[t][v]
    }
}

pub fn cusps(tt: &TransverseTaut) -> CuspStructure {
    let tri = tt.triangulation();
    let classes = (0..tri.size())
        .map(|t| [tri.vertex(t, 0), tri.vertex(t, 1), tri.vertex(t, 2), tri.vertex(t, 3)])
        .collect();
    CuspStructure { classes, count: tri.num_vertices() }
}

/// Whether `w` is a nonzero, nonnegative solution of the branch equations.
pub fn verify_carried(tt: &TransverseTaut, w: &[i64]) -> Result<bool, ComputeError> {
    let b = tt.branch_matrix()?;
    if w.len() != b.rows() {
        return Err(ComputeError::Length { expected: b.rows(), found: w.len() });
    }
    if w.iter().any(|&x| x < 0) || w.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    Ok((0..b.cols()).all(|e| (0..b.rows()).map(|f| w[f] * b[(f, e)]).sum::<i64>() == 0))
}

/// Faces strictly above `occ` on its side of the link.
fn faces_above(link: &EdgeLink, occ: FaceOcc) -> Result<Vec<usize>, ComputeError> {
    let (side, i) = link.locate(occ).ok_or(ComputeError::NotCarried)?;
    Ok(side.faces[i + 1..].iter().map(|o| o.face).collect())
}

/// One vector per cusp recording the faces crossed by the boundary of the
/// carried surface after pushing it slightly upwards.
///
/// At a vertex `v` of face `f` the boundary curve runs along the two edges
/// of `f` meeting at `v`. Faces above the trailing edge on the same side
/// get `-w(f)`, faces above the leading edge get `+w(f)`; trailing and
/// leading are read counterclockwise as seen from above.
pub fn boundary_cycles(tt: &TransverseTaut, w: &[i64]) -> Result<Vec<Vec<i64>>, ComputeError> {
    if !verify_carried(tt, w)? {
        return Err(ComputeError::NotCarried);
    }
    let tri = tt.triangulation();
    let links = tt.edge_links()?;
    let cs = cusps(tt);
    let nf = tri.num_faces();
    let mut out = vec![vec![0i64; nf]; cs.count];
    for f in 0..nf {
        if w[f] == 0 {
            continue;
        }
        let (t, _) = tt.face_below(f);
        let ccw = tt.face_ccw_from_above(f);
        for i in 0..3 {
            let v = ccw[i];
            let next = ccw[(i + 1) % 3];
            let prev = ccw[(i + 2) % 3];
            let cusp = cs.cusp(t, v);
            let trailing = &links[tri.edge_between(t, v, prev)];
            for g in faces_above(trailing, FaceOcc { face: f, apex: next })? {
                out[cusp][g] -= w[f];
            }
            let leading = &links[tri.edge_between(t, v, next)];
            for g in faces_above(leading, FaceOcc { face: f, apex: prev })? {
                out[cusp][g] += w[f];
            }
        }
    }
    Ok(out)
}

/// Taut polynomial of the cover killing the boundary cycles of the listed
/// cusps. Only meaningful as a Teichmüller polynomial when `w` is a fibre.
pub fn teichmueller_polynomial(
    tt: &TransverseTaut,
    w: &[i64],
    fill: &[usize],
) -> Result<LaurentPoly, ComputeError> {
    let cycles = boundary_cycles(tt, w)?;
    let mut chosen = Vec::with_capacity(fill.len());
    for &c in fill {
        let v = cycles.get(c).ok_or(ComputeError::CuspIndex { index: c, cusps: cycles.len() })?;
        chosen.push(v.clone());
    }
    taut_polynomial(tt, &chosen)
}
