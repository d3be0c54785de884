mod common;

use common::{poly, reference_sign, same_coefficients_up_to_sign, u, veering};
use veering::equivalence::basis_change_to;
use veering::invariants::{lower_veering_matrix, taut_matrix, taut_polynomial_with};
use veering::{
    lower_veering_polynomial, lp_gcd, taut_polynomial, triangulation_cover, upper_veering_polynomial, LaurentMatrix,
    LaurentPoly, Monomial, Track, Veering,
};

fn rows(m: &LaurentMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|p| p.to_string()).collect()).collect()
}

#[test]
fn figure_eight_face_laurents() {
    for tt in [reference_sign("cPcbbbiht_12"), veering("cPcbbbiht_12").transverse().clone()] {
        let lam = triangulation_cover(&tt, &[]).unwrap();
        assert_eq!(lam.rank, 1);
        assert_eq!(lam.tree, [0]);
        assert_eq!(lam.laurents, [Monomial(vec![0]), Monomial(vec![1]), Monomial(vec![0]), Monomial(vec![1])]);
    }
}

#[test]
fn figure_eight_presentation_matrices() {
    let tt = reference_sign("cPcbbbiht_12");
    let lam = triangulation_cover(&tt, &[]).unwrap();
    let links = tt.edge_links().unwrap();
    let dy = taut_matrix(&tt, &links, &lam, Track::Lower).delete_columns(&lam.tree);
    assert_eq!(
        rows(&dy),
        [["-1", "1 - u^-1", "-1"], ["1 - u^-1", "-u^-1", "1 - u^-1"]]
    );
    // Columns ordered by top diagonal: edge 0 is the top diagonal of t1.
    assert_eq!((tt.top_edge(0), tt.top_edge(1)), (1, 0));
    let n = lower_veering_matrix(&tt, &links, &lam).unwrap();
    assert_eq!(rows(&n), [["1 - 2*u^-1", "-u^-1"], ["-u^-2", "1 - 2*u^-1"]]);
}

#[test]
fn figure_eight_polynomials() {
    let v = veering("cPcbbbiht_12");
    assert_eq!(taut_polynomial(v.transverse(), &[]).unwrap(), u("u^2 - 3*u + 1"));
    // -(u^-3 - 4u^-2 + 4u^-1 - 1)
    let exact = u("-u^-3 + 4*u^-2 - 4*u^-1 + 1");
    assert_eq!(lower_veering_polynomial(&v).unwrap(), exact);
    assert_eq!(lower_veering_polynomial(&v.reversed()).unwrap(), exact);
    let vu = upper_veering_polynomial(&v).unwrap();
    assert!(vu.unit_equal(&(&u("u - 1") * &u("u^2 - 3*u + 1"))));
}

#[test]
fn reference_coefficient_lists() {
    let cases: [(&str, &[i64]); 4] = [
        ("cPcbbbiht_12", &[-4, -1, 1, 4]),
        ("eLMkbcddddedde_2100", &[-2, -2, -2, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 2, 2]),
        ("gLLAQbecdfffhhnkqnc_120012", &[-1, -1, -1, -1, 1, 1, 1, 1]),
        ("gLLPQcdfefefuoaaauo_022110", &[-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1]),
    ];
    for (sig, want) in cases {
        let v = lower_veering_polynomial(&veering(sig)).unwrap();
        assert!(same_coefficients_up_to_sign(&v, want), "{sig}: {v}");
    }
    let taut: [(&str, &[i64]); 3] = [
        ("cPcbbbiht_12", &[-3, 1, 1]),
        ("eLMkbcddddedde_2100", &[-1, -1, -1, 1, 1]),
        ("iLLAwQcccedfghhhlnhcqeesr_12001122", &[]),
    ];
    for (sig, want) in taut {
        let t = taut_polynomial(veering(sig).transverse(), &[]).unwrap();
        assert!(same_coefficients_up_to_sign(&t, want), "{sig}: {t}");
    }
}

#[test]
fn fully_punctured_table() {
    let cases = [
        ("eLMkbcddddedde_2100", "a^2*b - a^2 - a*b - b^2 + b", &["a", "b"][..]),
        ("ivvPQQcfghghfhgfaddddaaaa_20000222", "a*b^4 - a^2*b^2 + a*b^3 + a*b^2 + a*b - b^2 + a", &["a", "b"]),
        ("gvLQQcdeffeffffaafa_201102", "a^2*b*c^2 - a*b*c - a*c^2 - a*b - a*c + 1", &["a", "b", "c"]),
    ];
    for (sig, want, vars) in cases {
        let t = taut_polynomial(veering(sig).transverse(), &[]).unwrap();
        assert_eq!(t.rank(), vars.len(), "{sig}");
        let m = basis_change_to(&t, &poly(want, vars), 3).unwrap_or_else(|| panic!("{sig}: {t}"));
        assert!(t.substitute(&m).unwrap().unit_equal(&poly(want, vars)));
    }
}

fn p_q() -> LaurentPoly {
    &u("1 - u + u^2 - u^3 + u^4 - u^5 + u^6") * &u("1 - u^2 - u^7 - u^12 + u^14")
}

#[test]
fn asymmetric_veering_polynomials() {
    let v = veering("iLLLAQccdffgfhhhqgdatgqdm_21012210");
    let vl = lower_veering_polynomial(&v).unwrap();
    let vu = upper_veering_polynomial(&v).unwrap();
    let one_minus = u("1 - u");
    let a = &(&u("1 - u^25") * &u("1 - u^13")) * &p_q();
    let b = &(&u("1 - u^29") * &u("1 - u^9")) * &p_q();
    // The canonical sign is opposite to the one used for the displayed pair.
    assert!((&vl * &one_minus).unit_equal(&b));
    assert!((&vu * &one_minus).unit_equal(&a));
    assert!(!vl.unit_equal(&vu));
    let theta = taut_polynomial(v.transverse(), &[]).unwrap();
    assert!(theta.unit_equal(&p_q()));
    // Both displayed products keep one factor 1 - u, so does their gcd.
    assert!(lp_gcd(&vl, &vu).unwrap().unit_equal(&(&one_minus * &p_q())));
}

#[test]
fn symmetric_veering_polynomials() {
    let v = veering("hLMzMkbcdefggghhhqxqkc_1221002");
    let want = &u("1 + u") * &u("1 - 20*u + u^2");
    assert!(lower_veering_polynomial(&v).unwrap().unit_equal(&want));
    assert!(upper_veering_polynomial(&v).unwrap().unit_equal(&want));
}

#[test]
fn one_veering_polynomial_vanishes() {
    let v = veering("lLLLAPAMcbcfeggihijkktshhxfpikaqj_20102220020");
    let want = [u("u - 1").pow(2), u("u + 1").pow(3), u("u^2 - u + 1"), u("u^4 + 1")]
        .iter()
        .fold(LaurentPoly::one(1), |acc, f| &acc * f);
    assert!(lower_veering_polynomial(&v).unwrap().is_zero());
    assert!(upper_veering_polynomial(&v).unwrap().unit_equal(&want));
    assert!(!taut_polynomial(v.transverse(), &[]).unwrap().is_zero());
    // With the reference sign the roles swap.
    let r = Veering::new(reference_sign("lLLLAPAMcbcfeggihijkktshhxfpikaqj_20102220020")).unwrap();
    assert!(upper_veering_polynomial(&r).unwrap().is_zero());
}

#[test]
fn upper_track_matrix_gives_same_taut_polynomial() {
    let tt = reference_sign("eLMkbcddddedde_2100");
    let lam = triangulation_cover(&tt, &[]).unwrap();
    let links = tt.edge_links().unwrap();
    let lower = taut_polynomial_with(&tt, &links, &lam, Track::Lower).unwrap();
    let upper = taut_polynomial_with(&tt, &links, &lam, Track::Upper).unwrap();
    assert!(lower.unit_equal(&upper));
}

type CycleCase = (&'static str, Vec<Vec<i64>>, &'static [i64]);

#[test]
fn taut_polynomials_with_reference_cycles() {
    let cases: [CycleCase; 3] = [
        ("eLMkbcddddedde_2100", vec![vec![7, 7, 0, 0, -4, 3, -7, 0]], &[-1, -1, -1, 1, 1]),
        (
            "iLLLQPcbeegefhhhhhhahahha_01110221",
            vec![vec![0, 0, 1, -1, -1, 0, -1, -1, 1, 0, 0, 0, 0, -1, 0, -1]],
            &[1, 1, 2],
        ),
        (
            "ivvPQQcfhghgfghfaaaaaaaaa_01122000",
            vec![
                vec![1, 1, 2, 0, -1, 2, 1, -3, 0, -1, 0, -2, -1, 0, 3, -2],
                vec![1, 1, 0, 2, -1, 0, -3, 1, 2, -1, -2, 0, 3, -2, -1, 0],
            ],
            &[-4, -1, -1, 1, 1],
        ),
    ];
    for (sig, cycles, want) in cases {
        let t = taut_polynomial(&reference_sign(sig), &cycles).unwrap();
        assert!(same_coefficients_up_to_sign(&t, want), "{sig}: {t}");
    }
    let t = taut_polynomial(&reference_sign("eLMkbcddddedde_2100"), &[vec![7, 7, 0, 0, -4, 3, -7, 0]]).unwrap();
    assert!(t.unit_equal(&u("u^14 - u^8 - u^7 - u^6 + 1")));
}

#[test]
fn non_cycle_rejected() {
    let tt = reference_sign("cPcbbbiht_12");
    assert!(taut_polynomial(&tt, &[vec![1, 0, 0, 0]]).is_err());
    assert!(taut_polynomial(&tt, &[vec![1, 1, 1]]).is_err());
}
