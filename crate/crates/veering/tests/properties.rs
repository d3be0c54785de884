//! Structural properties checked on every fixture.

mod common;

use common::{fixtures, veering};
use veering::invariants::{taut_matrix, taut_polynomial_with};
use veering::lmatrix::minors_gcd;
use veering::{
    induced_map, lower_veering_polynomial, taut_polynomial, triangulation_cover, upper_veering_polynomial,
    LaurentPoly, Track, TransverseTaut,
};

#[test]
fn lower_and_upper_tracks_agree() {
    for sig in fixtures() {
        let tt = veering(&sig).transverse().clone();
        let lam = triangulation_cover(&tt, &[]).unwrap();
        let links = tt.edge_links().unwrap();
        let lower = taut_polynomial_with(&tt, &links, &lam, Track::Lower).unwrap();
        let upper = taut_polynomial_with(&tt, &links, &lam, Track::Upper).unwrap();
        assert!(lower.unit_equal(&upper), "{sig}");
        // Same for the reversed coorientation.
        let rev = tt.reversed();
        assert!(taut_polynomial(&rev, &[]).unwrap().unit_equal(&lower), "{sig}");
    }
}

#[test]
fn tree_columns_are_redundant() {
    for sig in fixtures() {
        let tt = veering(&sig).transverse().clone();
        if tt.size() > 5 {
            continue;
        }
        let lam = triangulation_cover(&tt, &[]).unwrap();
        let links = tt.edge_links().unwrap();
        let d = taut_matrix(&tt, &links, &lam, Track::Lower);
        let full = minors_gcd(&d, d.rows()).unwrap();
        let reduced = taut_polynomial_with(&tt, &links, &lam, Track::Lower).unwrap();
        assert!(full.unit_equal(&reduced), "{sig}: {full} vs {reduced}");
    }
}

/// For each tetrahedron, the two (top face, bottom face) pairs meeting
/// along the lower large edge of the bottom face.
fn face_pairs(tt: &TransverseTaut, t: usize) -> [(usize, usize); 2] {
    let tri = tt.triangulation();
    let (p, q) = tt.top_diagonal(t);
    let (r, s) = tt.bottom_diagonal(t);
    [p, q].map(|a| {
        let bottom = tri.face(t, a);
        let (tb, x) = tt.face_below(bottom);
        let g = tri.gluing(tb, x);
        assert_eq!((g.tet, g.perm.apply(x)), (t, a));
        let (y1, y2) = tt.top_diagonal(tb);
        let large = [g.perm.apply(y1), g.perm.apply(y2)];
        let b = if large.contains(&r) { s } else { r };
        assert!(large.contains(&r) ^ large.contains(&s), "lower large edge is equatorial");
        (tri.face(t, b), bottom)
    })
}

#[test]
fn tetrahedra_give_column_dependences() {
    for sig in fixtures() {
        let tt = veering(&sig).transverse().clone();
        let lam = triangulation_cover(&tt, &[]).unwrap();
        let links = tt.edge_links().unwrap();
        let d = taut_matrix(&tt, &links, &lam, Track::Lower);
        let column = |f: usize, scale: &LaurentPoly| -> Vec<LaurentPoly> {
            (0..d.rows()).map(|e| &d[(e, f)] * scale).collect()
        };
        let one = LaurentPoly::one(lam.rank);
        for t in 0..tt.size() {
            let [(f1, g1), (f2, g2)] = face_pairs(&tt, t);
            assert_ne!(f1, f2, "{sig} tet {t}");
            let lhs: Vec<LaurentPoly> =
                column(f1, &one).iter().zip(column(g1, &lam.inverse(g1))).map(|(a, b)| a + &b).collect();
            let rhs: Vec<LaurentPoly> =
                column(f2, &one).iter().zip(column(g2, &lam.inverse(g2))).map(|(a, b)| a + &b).collect();
            assert_eq!(lhs, rhs, "{sig} tet {t}");
        }
    }
}

#[test]
fn taut_divides_veering() {
    for sig in fixtures() {
        let v = veering(&sig);
        let theta = taut_polynomial(v.transverse(), &[]).unwrap();
        if theta.is_zero() {
            continue;
        }
        for p in [lower_veering_polynomial(&v).unwrap(), upper_veering_polynomial(&v).unwrap()] {
            assert!(theta.divides(&p), "{sig}");
        }
    }
}

#[test]
fn reversal_keeps_the_cover() {
    for sig in fixtures() {
        let tt = veering(&sig).transverse().clone();
        let a = triangulation_cover(&tt, &[]).unwrap();
        let b = triangulation_cover(&tt.reversed(), &[]).unwrap();
        assert_eq!(a.rank, b.rank, "{sig}");
        let m = induced_map(&a, &b).unwrap();
        let det = veering::IntMatrix::from_rows(&m).unwrap().det().unwrap();
        assert_eq!(det.abs(), 1, "{sig}");
    }
}

#[test]
fn cycle_product_is_trivial_on_its_own_cover() {
    for sig in fixtures() {
        let tt = veering(&sig).transverse().clone();
        let b = tt.branch_matrix().unwrap();
        // Every branch equation column is a 1-cycle; it is null-homologous.
        let col = b.column(0);
        let lam = triangulation_cover(&tt, std::slice::from_ref(&col)).unwrap();
        let full = triangulation_cover(&tt, &[]).unwrap();
        assert_eq!(lam.rank, full.rank, "{sig}");
        assert!(lam.evaluate(&col).is_one(), "{sig}");
    }
}

#[test]
fn reduction_divides_reduced_polynomial() {
    let cases = [
        ("eLMkbcddddedde_2100", vec![vec![7i64, 7, 0, 0, -4, 3, -7, 0]]),
        (
            "ivvPQQcfhghgfghfaaaaaaaaa_01122000",
            vec![vec![1, 1, 2, 0, -1, 2, 1, -3, 0, -1, 0, -2, -1, 0, 3, -2]],
        ),
    ];
    for (sig, cycles) in cases {
        let tt = common::reference_sign(sig);
        let full = triangulation_cover(&tt, &[]).unwrap();
        let quotient = triangulation_cover(&tt, &cycles).unwrap();
        assert!(quotient.rank < full.rank);
        let m = induced_map(&full, &quotient).unwrap();
        let image = taut_polynomial(&tt, &[]).unwrap().substitute(&m).unwrap();
        let reduced = taut_polynomial(&tt, &cycles).unwrap();
        assert!(image.divides(&reduced), "{sig}: {image} does not divide {reduced}");
    }
}

#[test]
fn reversal_swaps_veering_polynomials() {
    for sig in fixtures() {
        let v = veering(&sig);
        let r = v.reversed();
        let (l, u) = (lower_veering_polynomial(&v).unwrap(), upper_veering_polynomial(&v).unwrap());
        assert!(lower_veering_polynomial(&r).unwrap().unit_equal(&u), "{sig}");
        assert!(upper_veering_polynomial(&r).unwrap().unit_equal(&l), "{sig}");
    }
}
