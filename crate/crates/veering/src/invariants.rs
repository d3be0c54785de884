//! Taut and veering polynomials.

use crate::cover::{triangulation_cover, FaceLaurents};
use crate::error::ComputeError;
use crate::laurent::LaurentPoly;
use crate::lmatrix::{maximal_minors_gcd, LaurentMatrix};
use crate::transverse::{EdgeLink, TransverseTaut, Veering};

/// Which train track a presentation matrix is read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Track {
    Lower,
    Upper,
}

/// Presentation matrix of the taut module: rows are edges, columns faces.
///
/// Walking up a side of edge `e` the running coefficient picks up
/// `Λ(f)^{-1}` for every face passed. For the lower track the lowermost face
/// of each side gets `+coefficient`, the others `-coefficient`; for the
/// upper track the uppermost face is the positive one.
pub fn taut_matrix(
    tt: &TransverseTaut,
    links: &[EdgeLink],
    lam: &FaceLaurents,
    track: Track,
) -> LaurentMatrix {
    let tri = tt.triangulation();
    let mut d = LaurentMatrix::zeros(lam.rank, tri.num_edges(), tri.num_faces());
    for link in links {
        for side in link.sides() {
            let mut coef = LaurentPoly::one(lam.rank);
            let last = side.faces.len() - 1;
            for (i, occ) in side.faces.iter().enumerate() {
                if i > 0 {
                    coef = &coef * &lam.inverse(side.faces[i - 1].face);
                }
                let positive = match track {
                    Track::Lower => i == 0,
                    Track::Upper => i == last,
                };
                let entry = &mut d[(link.edge, occ.face)];
                if positive {
                    *entry += &coef;
                } else {
                    *entry -= &coef;
                }
            }
        }
    }
    d
}

/// Taut polynomial of the cover determined by `cycles` (empty for the
/// maximal free abelian cover), normalized.
pub fn taut_polynomial(tt: &TransverseTaut, cycles: &[Vec<i64>]) -> Result<LaurentPoly, ComputeError> {
    let lam = triangulation_cover(tt, cycles)?;
    let links = tt.edge_links()?;
    taut_polynomial_with(tt, &links, &lam, Track::Lower)
}

pub fn taut_polynomial_with(
    tt: &TransverseTaut,
    links: &[EdgeLink],
    lam: &FaceLaurents,
    track: Track,
) -> Result<LaurentPoly, ComputeError> {
    let d = taut_matrix(tt, links, lam, track);
    let dy = d.delete_columns(&lam.tree);
    Ok(maximal_minors_gcd(&dy)?)
}

/// The matrix `N^L` with column `i` belonging to the tetrahedron whose top
/// diagonal is edge `i`.
pub fn lower_veering_matrix(
    tt: &TransverseTaut,
    links: &[EdgeLink],
    lam: &FaceLaurents,
) -> Result<LaurentMatrix, ComputeError> {
    let tri = tt.triangulation();
    let ne = tri.num_edges();
    if ne != tt.size() {
        return Err(ComputeError::NoDiagonalPairing(ne.min(tt.size())));
    }
    let col: Vec<usize> = (0..tt.size()).map(|t| tt.top_edge(t)).collect();
    let mut seen = vec![false; ne];
    for &c in &col {
        seen[c] = true;
    }
    if let Some(e) = seen.iter().position(|s| !s) {
        return Err(ComputeError::NoDiagonalPairing(e));
    }
    let r = lam.rank;
    let mut n = LaurentMatrix::zeros(r, ne, ne);
    for link in links {
        let e = link.edge;
        n[(e, col[link.below_tet])] += &LaurentPoly::one(r);
        let mut top = LaurentPoly::one(r);
        for occ in &link.left.faces {
            top = &top * &lam.inverse(occ.face);
        }
        n[(e, col[link.above_tet])] -= &top;
        for side in link.sides() {
            let mut coef = LaurentPoly::one(r);
            for i in 0..side.faces.len() - 1 {
                let t = side.tets[i];
                coef = &coef * &lam.inverse(side.faces[i].face);
                if i > 0 {
                    n[(e, col[t])] -= &coef;
                }
            }
        }
    }
    Ok(n)
}

/// Lower veering polynomial: the exact determinant of `N^L`, not normalized.
pub fn lower_veering_polynomial(v: &Veering) -> Result<LaurentPoly, ComputeError> {
    let tt = v.transverse();
    let lam = triangulation_cover(tt, &[])?;
    let links = tt.edge_links()?;
    Ok(lower_veering_matrix(tt, &links, &lam)?.det()?)
}

/// Upper veering polynomial: the lower veering polynomial of the reversed
/// triangulation with every variable inverted.
pub fn upper_veering_polynomial(v: &Veering) -> Result<LaurentPoly, ComputeError> {
    Ok(lower_veering_polynomial(&v.reversed())?.invert_variables())
}
