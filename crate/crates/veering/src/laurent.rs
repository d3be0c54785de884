//! Multivariate Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Exponent vector of a monomial. The derived order is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.rank(), other.rank());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }
}

/// Element of Z[u1^±1, ..., ur^±1]. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(rank), c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m.rank());
        p.add_term(m, c.into());
        p
    }

    /// The variable `u_{i+1}` in a ring of the given rank.
    pub fn var(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Self::monomial(Monomial(e))
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing repeats.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "exponent vector has wrong length");
            p.add_term(Monomial(e), c.into());
        }
        p
    }

    /// Univariate convenience: coefficients listed from exponent `low` upwards.
    pub fn univariate(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            1,
            coeffs.iter().enumerate().map(|(i, &c)| (vec![low + i as i64], c)),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.rank(), self.rank, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Componentwise minimum of the exponents. `None` for zero.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |mut acc, m| {
            for (a, &e) in acc.iter_mut().zip(&m.0) {
                *a = (*a).min(e);
            }
            acc
        }))
    }

    pub fn max_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |mut acc, m| {
            for (a, &e) in acc.iter_mut().zip(&m.0) {
                *a = (*a).max(e);
            }
            acc
        }))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Inverse of a unit `±u^v`; `None` if the polynomial is not a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Self::term(m.inverse(), c.clone()))
        } else {
            None
        }
    }

    /// Substitutes `u_i -> u_i^{-1}` for every variable.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, c)| (k.inverse(), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v / c)).collect(),
        }
    }

    /// Canonical representative of the class of `self` up to units `±u^v`:
    /// every variable has minimal exponent 0 and the lexicographically greatest
    /// term has a positive coefficient.
    pub fn normalize(&self) -> Self {
        let Some(min) = self.min_exponents() else {
            return self.clone();
        };
        let shifted = self.mul_monomial(&Monomial(min.iter().map(|e| -e).collect()));
        match shifted.leading() {
            Some((_, c)) if c.is_negative() => -shifted,
            _ => shifted,
        }
    }

    pub fn unit_equal(&self, other: &Self) -> bool {
        self.rank == other.rank && self.normalize() == other.normalize()
    }

    /// Ring homomorphism sending the monomial with exponents `v` to `v^T M`.
    pub fn substitute(&self, m: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        if m.len() != self.rank {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.rank,
                found: m.len(),
            });
        }
        let target = m.first().map_or(0, Vec::len);
        if m.iter().any(|row| row.len() != target) {
            return Err(AlgebraError::Ragged);
        }
        let mut out = Self::zero(target);
        for (k, c) in &self.terms {
            let mut img = vec![0i64; target];
            for (e, row) in k.0.iter().zip(m) {
                for (o, x) in img.iter_mut().zip(row) {
                    *o += e * x;
                }
            }
            out.add_term(Monomial(img), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / other` in the Laurent ring, or `None` when
    /// `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.rank));
        }
        if let Some(inv) = other.unit_inverse() {
            return Some(self * &inv);
        }
        let amin = Monomial(self.min_exponents()?);
        let bmin = Monomial(other.min_exponents()?);
        let a = self.mul_monomial(&amin.inverse());
        let b = other.mul_monomial(&bmin.inverse());
        let q = poly_div_exact(&a, &b)?;
        Some(q.mul_monomial(&amin.mul(&bmin.inverse())))
    }

    /// Whether `other` divides `self` in the Laurent ring.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// (exponents, coefficient) pairs in descending lexicographic order.
    pub fn to_pairs(&self) -> Vec<(Vec<i64>, BigInt)> {
        self.terms
            .iter()
            .rev()
            .map(|(k, c)| (k.0.clone(), c.clone()))
            .collect()
    }

    /// Formats with the given variable names.
    pub fn display_with(&self, vars: &[String]) -> String {
        assert_eq!(vars.len(), self.rank);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .zip(vars)
                .filter(|(e, _)| **e != 0)
                .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses text such as `u^2 - 3*u + 1` or `a^2*b - a^-1`. No parentheses.
    pub fn parse_with(s: &str, vars: &[&str]) -> Result<Self, AlgebraError> {
        let rank = vars.len();
        let bad = || AlgebraError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut p = Self::zero(rank);
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let sign_here = (ch == '+' || ch == '-') && prev != Some('^');
            if sign_here {
                if !cur.is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let mut coeff = BigInt::one();
            let mut exps = vec![0i64; rank];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(bad());
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|_| bad())?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let idx = vars.iter().position(|v| *v == name).ok_or_else(bad)?;
                exps[idx] += e;
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(Monomial(exps), coeff);
        }
        Ok(p)
    }

    /// Parses using the default variable names for `rank`.
    pub fn parse(s: &str, rank: usize) -> Result<Self, AlgebraError> {
        let names = variable_names(rank);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::parse_with(s, &refs)
    }
}

/// `u` for rank one, `u1 .. ur` otherwise.
pub fn variable_names(rank: usize) -> Vec<String> {
    if rank == 1 {
        vec!["u".to_string()]
    } else {
        (1..=rank).map(|i| format!("u{i}")).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&variable_names(self.rank)))
    }
}

/// Division of ordinary polynomials (nonnegative exponents) by the
/// lexicographic leading-term algorithm.
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let rank = a.rank;
    let amax = a.max_exponents()?;
    let bmax = b.max_exponents()?;
    let bound: Vec<i64> = amax.iter().zip(&bmax).map(|(x, y)| x - y).collect();
    if bound.iter().any(|&e| e < 0) {
        return None;
    }
    let (bl, bc) = b.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut r = a.clone();
    let mut q = LaurentPoly::zero(rank);
    while let Some((rl, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let e: Vec<i64> = rl.0.iter().zip(&bl.0).map(|(x, y)| x - y).collect();
        if e.iter().zip(&bound).any(|(&x, &hi)| x < 0 || x > hi) {
            return None;
        }
        let (c, rem) = rc.div_rem(&bc);
        if !rem.is_zero() {
            return None;
        }
        let t = LaurentPoly::term(Monomial(e), c);
        r -= &(&t * b);
        q += &t;
    }
    Some(q)
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = LaurentPoly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
