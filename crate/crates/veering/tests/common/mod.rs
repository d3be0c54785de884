#![allow(dead_code)]

use veering::{parse_census_string, LaurentPoly, TransverseTaut, Veering};

pub fn fixtures() -> Vec<String> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/census.txt");
    veering::io::read_census_list(&std::fs::read_to_string(path).unwrap())
}

pub fn veering(sig: &str) -> Veering {
    Veering::from_census(sig).unwrap_or_else(|e| panic!("{sig}: {e}"))
}

/// Coorientation used by the reference census tools.
pub fn reference_sign(sig: &str) -> TransverseTaut {
    let (tri, taut) = parse_census_string(sig).unwrap();
    TransverseTaut::recover_with(tri, taut, true).unwrap()
}

pub fn u(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s, 1).unwrap()
}

pub fn poly(s: &str, vars: &[&str]) -> LaurentPoly {
    LaurentPoly::parse_with(s, vars).unwrap()
}

pub fn sorted_coefficients(p: &LaurentPoly) -> Vec<i64> {
    let mut c: Vec<i64> = p.to_pairs().into_iter().map(|(_, c)| i64::try_from(c).unwrap()).collect();
    c.sort_unstable();
    c
}

/// Coefficient lists as the reference tools compare them: sorted, up to sign.
pub fn same_coefficients_up_to_sign(p: &LaurentPoly, want: &[i64]) -> bool {
    let c = sorted_coefficients(p);
    let mut neg: Vec<i64> = c.iter().map(|x| -x).collect();
    neg.sort_unstable();
    c == want || neg == want
}
