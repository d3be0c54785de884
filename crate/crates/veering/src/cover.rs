//! Face Laurents of free abelian covers (the fundamental domain is cut out
//! by a spanning tree of the dual graph).

use crate::error::ComputeError;
use crate::laurent::{LaurentPoly, Monomial};
use crate::snf::{smith_normal_form, IntMatrix};
use crate::transverse::TransverseTaut;

/// Monomial attached to every face; identity on spanning-tree faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLaurents {
    pub rank: usize,
    pub laurents: Vec<Monomial>,
    pub tree: Vec<usize>,
}

impl FaceLaurents {
    pub fn get(&self, f: usize) -> &Monomial {
        &self.laurents[f]
    }

    pub fn poly(&self, f: usize) -> LaurentPoly {
        LaurentPoly::monomial(self.laurents[f].clone())
    }

    pub fn inverse(&self, f: usize) -> LaurentPoly {
        LaurentPoly::monomial(self.laurents[f].inverse())
    }

    /// Product of `Λ(f)^c(f)` over all faces, as an exponent vector.
    pub fn evaluate(&self, c: &[i64]) -> Monomial {
        let mut e = vec![0; self.rank];
        for (m, &k) in self.laurents.iter().zip(c) {
            for (x, y) in e.iter_mut().zip(&m.0) {
                *x += k * y;
            }
        }
        Monomial(e)
    }
}

/// Checks lengths and the 1-cycle condition for every vector of `cycles`.
pub fn check_cycles(tt: &TransverseTaut, cycles: &[Vec<i64>]) -> Result<(), ComputeError> {
    let nf = tt.triangulation().num_faces();
    let graph = tt.dual_graph();
    for c in cycles {
        if c.len() != nf {
            return Err(ComputeError::Length { expected: nf, found: c.len() });
        }
        graph.check_cycle(c).map_err(|tet| ComputeError::NotCycle { tet })?;
    }
    Ok(())
}

/// The matrix `(B | C)` with the spanning-tree rows removed.
fn reduced_relations(tt: &TransverseTaut, cycles: &[Vec<i64>], tree: &[usize]) -> Result<IntMatrix, ComputeError> {
    let b = tt.branch_matrix()?;
    let nf = b.rows();
    let mut c = IntMatrix::zeros(nf, cycles.len());
    for (j, cyc) in cycles.iter().enumerate() {
        for (f, &x) in cyc.iter().enumerate() {
            c[(f, j)] = x;
        }
    }
    let bc = b.hstack(&c)?;
    let keep: Vec<usize> = (0..nf).filter(|f| !tree.contains(f)).collect();
    Ok(bc.select_rows(&keep))
}

/// Face Laurents of the free abelian cover determined by `cycles`.
pub fn triangulation_cover(tt: &TransverseTaut, cycles: &[Vec<i64>]) -> Result<FaceLaurents, ComputeError> {
    check_cycles(tt, cycles)?;
    let tree = tt.spanning_tree();
    let a = reduced_relations(tt, cycles, &tree)?;
    let snf = smith_normal_form(&a)?;
    let r = snf.zero_rows();
    let m = a.rows();
    let nf = tt.triangulation().num_faces();
    let mut laurents = vec![Monomial::one(r); nf];
    let non_tree = (0..nf).filter(|f| !tree.contains(f));
    for (i, f) in non_tree.enumerate() {
        laurents[f] = Monomial((m - r..m).map(|k| snf.u[(k, i)]).collect());
    }
    Ok(FaceLaurents { rank: r, laurents, tree })
}

/// Rank of the deck group of the cover determined by `cycles`.
pub fn rank_of_cover(tt: &TransverseTaut, cycles: &[Vec<i64>]) -> Result<usize, ComputeError> {
    check_cycles(tt, cycles)?;
    let tree = tt.spanning_tree();
    let a = reduced_relations(tt, cycles, &tree)?;
    Ok(a.rows() - a.rank())
}

/// The exponent map `M` with `to.get(f) = from.get(f) * M` for every face,
/// in the row convention of [`LaurentPoly::substitute`].
pub fn induced_map(from: &FaceLaurents, to: &FaceLaurents) -> Result<Vec<Vec<i64>>, ComputeError> {
    let rows = |fl: &FaceLaurents| fl.laurents.iter().map(|m| m.0.clone()).collect::<Vec<_>>();
    let l = IntMatrix::from_rows(&rows(from)).map_err(ComputeError::from)?;
    let lc = IntMatrix::from_rows(&rows(to)).map_err(ComputeError::from)?;
    let r = from.rank;
    if r == 0 {
        return Ok(Vec::new());
    }
    let snf = smith_normal_form(&l)?;
    if snf.invariant_factors() != vec![1; r] {
        return Err(ComputeError::NoInducedMap);
    }
    // L = U^-1 S V^-1 with S = [I; 0], so V S^T U is a left inverse of L.
    let st = snf.s.transpose();
    let left = snf.v.mul(&st)?.mul(&snf.u)?;
    let m = left.mul(&lc)?;
    if l.mul(&m)? != lc {
        return Err(ComputeError::NoInducedMap);
    }
    Ok(m.to_rows())
}
