//! Gcd in the Laurent ring via recursive primitive polynomial remainder
//! sequences on ordinary polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::AlgebraError;
use crate::laurent::{LaurentPoly, Monomial};

/// Normalized gcd of two Laurent polynomials. `gcd(p, 0)` is `p` normalized.
pub fn lp_gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    if p.rank() != q.rank() {
        return Err(AlgebraError::RankMismatch { left: p.rank(), right: q.rank() });
    }
    if p.is_zero() {
        return Ok(q.normalize());
    }
    if q.is_zero() {
        return Ok(p.normalize());
    }
    // Normalizing clears monomial factors, so both are genuine polynomials
    // not divisible by any variable.
    let g = poly_gcd(&p.normalize(), &q.normalize(), 0);
    Ok(g.normalize())
}

/// Gcd of a list; zero entries are ignored, all-zero gives zero.
pub fn lp_gcd_all<'a, I>(rank: usize, polys: I) -> Result<LaurentPoly, AlgebraError>
where
    I: IntoIterator<Item = &'a LaurentPoly>,
{
    let mut acc = LaurentPoly::zero(rank);
    for p in polys {
        acc = lp_gcd(&acc, p)?;
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

/// Splits `p` into coefficients of powers of variable `var`.
/// Coefficients have exponent 0 at `var`.
fn coefficients_in(p: &LaurentPoly, var: usize) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let d = m.0[var];
        let mut rest = m.0.clone();
        rest[var] = 0;
        out.entry(d)
            .or_insert_with(|| LaurentPoly::zero(p.rank()))
            .add_term(Monomial(rest), c.clone());
    }
    out
}

fn degree_in(p: &LaurentPoly, var: usize) -> i64 {
    p.terms().map(|(m, _)| m.0[var]).max().unwrap_or(-1)
}

fn lead_coeff_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    coefficients_in(p, var)
        .into_iter()
        .next_back()
        .map(|(_, c)| c)
        .unwrap_or_else(|| LaurentPoly::zero(p.rank()))
}

fn shift_var(p: &LaurentPoly, var: usize, k: i64) -> LaurentPoly {
    let mut e = vec![0; p.rank()];
    e[var] = k;
    p.mul_monomial(&Monomial(e))
}

/// Content of `p` with respect to `var`: the gcd of its coefficients,
/// computed in the variables after `var`.
fn content_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.rank());
    for c in coefficients_in(p, var).values() {
        g = poly_gcd(&g, c, var + 1);
        if is_unit_constant(&g) {
            break;
        }
    }
    g
}

fn is_unit_constant(p: &LaurentPoly) -> bool {
    p.len() == 1 && p.terms().all(|(m, c)| m.is_one() && c.abs() == BigInt::from(1))
}

fn primitive_part_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides polynomial")
}

/// Gcd of ordinary polynomials that only involve variables `var..`.
/// Result is defined up to sign.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> LaurentPoly {
    let rank = a.rank();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if var >= rank {
        let g = a.coeff(&Monomial::one(rank)).gcd(&b.coeff(&Monomial::one(rank)));
        return LaurentPoly::constant(rank, g);
    }
    // Skip variables absent from both arguments.
    if degree_in(a, var) == 0 && degree_in(b, var) == 0 {
        return poly_gcd(a, b, var + 1);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = poly_gcd(&ca, &cb, var + 1);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if degree_in(&f, var) < degree_in(&g, var) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            break;
        }
        if degree_in(&g, var) == 0 {
            f = LaurentPoly::one(rank);
            break;
        }
        let r = pseudo_remainder(&f, &g, var);
        f = g;
        g = primitive_part_in(&r, var);
    }
    let pp = primitive_part_in(&f, var);
    &c * &pp
}

/// A multiple of the pseudo-remainder of `f` by `g` in variable `var`.
fn pseudo_remainder(f: &LaurentPoly, g: &LaurentPoly, var: usize) -> LaurentPoly {
    let dg = degree_in(g, var);
    let lg = lead_coeff_in(g, var);
    let mut r = f.clone();
    while !r.is_zero() && degree_in(&r, var) >= dg {
        let dr = degree_in(&r, var);
        let lr = lead_coeff_in(&r, var);
        // Cancel leading coefficients through their gcd to limit growth.
        let (mul_r, mul_g) = match polynomial_quotient(&lr, &lg) {
            Some(q) => (LaurentPoly::one(r.rank()), q),
            None => {
                let common = scalar_gcd(&lr, &lg);
                (lg.div_scalar_exact(&common), lr.div_scalar_exact(&common))
            }
        };
        r = &(&mul_r * &r) - &shift_var(&(&mul_g * g), var, dr - dg);
        let cont = r.content();
        if !cont.is_zero() && cont != BigInt::from(1) {
            r = r.div_scalar_exact(&cont);
        }
    }
    r
}

/// `a / b` when the quotient has no negative exponents.
fn polynomial_quotient(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let q = a.div_exact(b)?;
    q.min_exponents().is_none_or(|e| e.iter().all(|&x| x >= 0)).then_some(q)
}

fn scalar_gcd(a: &LaurentPoly, b: &LaurentPoly) -> BigInt {
    let g = a.content().gcd(&b.content());
    if g.is_zero() {
        BigInt::from(1)
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse_with(s, &["a", "b", "c"]).unwrap()
    }

    #[test]
    fn univariate_common_factor() {
        let a = LaurentPoly::parse("1 - u^2", 1).unwrap();
        let b = LaurentPoly::parse("1 - u", 1).unwrap();
        assert_eq!(lp_gcd(&a, &b).unwrap(), LaurentPoly::parse("u - 1", 1).unwrap());
    }

    #[test]
    fn multivariate_common_factor() {
        let f = p("a*b - c + 2");
        let g = p("a^2 + b*c^3");
        let h = p("a - b^2*c + 1");
        let got = lp_gcd(&(&f * &g), &(&f * &h)).unwrap();
        assert_eq!(got, f.normalize());
    }

    #[test]
    fn leading_coefficient_not_a_polynomial_divisor() {
        let a = p("a^2 - 1");
        let b = &p("a*b + 1") * &p("a + 1");
        assert_eq!(lp_gcd(&a, &b).unwrap(), p("a + 1"));
    }

    #[test]
    fn coprime_gives_one() {
        let got = lp_gcd(&p("a + b"), &p("a - b")).unwrap();
        assert!(got.is_one());
    }

    #[test]
    fn integer_content_kept() {
        let got = lp_gcd(&p("6*a + 4"), &p("9*a + 6")).unwrap();
        assert_eq!(got, p("3*a + 2"));
    }
}
