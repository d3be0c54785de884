//! Equality of Laurent polynomials up to units and a change of basis of the
//! exponent lattice.

use num_bigint::BigInt;

use crate::laurent::LaurentPoly;
use crate::snf::IntMatrix;

/// Searches for `M` in GL(r, Z) with entries in `[-bound, bound]` such that
/// `p.substitute(M)` is unit-equal to `q`.
///
/// Any such `M` maps the support of `p` onto the support of `q` up to a
/// translation, so it is pinned down by the images of `r + 1` affinely
/// independent support points; the search runs over those images.
pub fn basis_change_to(p: &LaurentPoly, q: &LaurentPoly, bound: i64) -> Option<Vec<Vec<i64>>> {
    let r = p.rank();
    if q.rank() != r || p.len() != q.len() {
        return None;
    }
    if p.is_zero() {
        return Some(identity(r));
    }
    let sp = p.to_pairs();
    let sq = q.to_pairs();
    let frame = affine_frame(&sp, r)?;
    let base = &sp[frame[0]].0;
    let ds: Vec<Vec<i64>> = frame[1..].iter().map(|&i| diff(&sp[i].0, base)).collect();
    let ds = IntMatrix::from_rows(&ds).ok()?;
    let det = ds.det().ok()?;
    let adj = adjugate(&ds);
    let mut chosen = Vec::with_capacity(r + 1);
    let mut found = None;
    search(&sp, &sq, &frame, &adj, det, bound, p, q, &mut chosen, &mut found);
    found
}

fn identity(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Indices of `r + 1` affinely independent support points, if the support
/// spans the lattice rationally.
fn affine_frame(s: &[(Vec<i64>, BigInt)], r: usize) -> Option<Vec<usize>> {
    let mut frame = vec![0];
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for i in 1..s.len() {
        if frame.len() == r + 1 {
            break;
        }
        let mut trial = rows.clone();
        trial.push(diff(&s[i].0, &s[0].0));
        if IntMatrix::from_rows(&trial).ok()?.rank() == trial.len() {
            rows = trial;
            frame.push(i);
        }
    }
    (frame.len() == r + 1).then_some(frame)
}

fn adjugate(m: &IntMatrix) -> Vec<Vec<i128>> {
    let n = m.rows();
    let rows = m.to_rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    // adj[i][j] = (-1)^(i+j) * minor(j, i)
                    let minor: Vec<Vec<i64>> = rows
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, row)| {
                            row.iter().enumerate().filter(|&(l, _)| l != i).map(|(_, &x)| x).collect()
                        })
                        .collect();
                    let d = if n == 1 { 1 } else { IntMatrix::from_rows(&minor).unwrap().det().unwrap() };
                    if (i + j) % 2 == 0 { d } else { -d }
                })
                .collect()
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn search(
    sp: &[(Vec<i64>, BigInt)],
    sq: &[(Vec<i64>, BigInt)],
    frame: &[usize],
    adj: &[Vec<i128>],
    det: i128,
    bound: i64,
    p: &LaurentPoly,
    q: &LaurentPoly,
    chosen: &mut Vec<usize>,
    found: &mut Option<Vec<Vec<i64>>>,
) {
    if found.is_some() {
        return;
    }
    let k = chosen.len();
    if k == frame.len() {
        if let Some(m) = solve(sq, frame, chosen, adj, det, bound) {
            if let Ok(img) = p.substitute(&m) {
                if img.unit_equal(q) {
                    *found = Some(m);
                }
            }
        }
        return;
    }
    for j in 0..sq.len() {
        if chosen.contains(&j) {
            continue;
        }
        // Coefficients must agree up to one global sign.
        let (cp, cq) = (&sp[frame[k]].1, &sq[j].1);
        let ok = match chosen.first() {
            None => cp == cq || *cp == -cq,
            Some(&j0) => {
                let same = sp[frame[0]].1 == sq[j0].1;
                if same { cp == cq } else { *cp == -cq }
            }
        };
        if !ok {
            continue;
        }
        chosen.push(j);
        search(sp, sq, frame, adj, det, bound, p, q, chosen, found);
        chosen.pop();
    }
}

fn solve(
    sq: &[(Vec<i64>, BigInt)],
    frame: &[usize],
    chosen: &[usize],
    adj: &[Vec<i128>],
    det: i128,
    bound: i64,
) -> Option<Vec<Vec<i64>>> {
    let r = frame.len() - 1;
    let t0 = &sq[chosen[0]].0;
    let dt: Vec<Vec<i64>> = chosen[1..].iter().map(|&j| diff(&sq[j].0, t0)).collect();
    // D_S M = D_T, so M = adj(D_S) D_T / det(D_S).
    let mut m = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let num: i128 = (0..r).map(|k| adj[i][k] * dt[k][j] as i128).sum();
            if num % det != 0 {
                return None;
            }
            let x = num / det;
            if x.abs() > bound as i128 {
                return None;
            }
            m[i][j] = x as i64;
        }
    }
    let d = IntMatrix::from_rows(&m).ok()?.det().ok()?;
    (d.abs() == 1).then_some(m)
}
