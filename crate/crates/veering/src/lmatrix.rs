//! Matrices over the Laurent ring: determinants and minors.

use crate::error::AlgebraError;
use crate::gcd::lp_gcd_all;
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rank: usize,
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rank: usize, rows: usize, cols: usize) -> Self {
        LaurentMatrix { rank, rows, cols, data: vec![LaurentPoly::zero(rank); rows * cols] }
    }

    pub fn identity(rank: usize, n: usize) -> Self {
        let mut m = Self::zeros(rank, n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one(rank);
        }
        m
    }

    pub fn from_rows(rank: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Ragged);
        }
        if let Some(p) = rows.iter().flatten().find(|p| p.rank() != rank) {
            return Err(AlgebraError::RankMismatch { left: rank, right: p.rank() });
        }
        Ok(LaurentMatrix { rank, rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(self.rank, self.rows, keep.len());
        for i in 0..self.rows {
            for (jj, &j) in keep.iter().enumerate() {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn delete_columns(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !drop.contains(j)).collect();
        self.select_columns(&keep)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let data: Vec<LaurentPoly> = self.data.iter().map(f).collect();
        let rank = data.first().map_or(self.rank, LaurentPoly::rank);
        LaurentMatrix { rank, rows: self.rows, cols: self.cols, data }
    }

    fn check_square(&self) -> Result<(), AlgebraError> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant (no normalization).
    pub fn det(&self) -> Result<LaurentPoly, AlgebraError> {
        self.check_square()?;
        if self.rows < 4 {
            Ok(self.det_cofactor_unchecked())
        } else {
            Ok(self.det_bareiss_unchecked())
        }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det_cofactor(&self) -> Result<LaurentPoly, AlgebraError> {
        self.check_square()?;
        Ok(self.det_cofactor_unchecked())
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det_bareiss(&self) -> Result<LaurentPoly, AlgebraError> {
        self.check_square()?;
        Ok(self.det_bareiss_unchecked())
    }

    fn det_cofactor_unchecked(&self) -> LaurentPoly {
        let idx: Vec<usize> = (0..self.cols).collect();
        cofactor(self, 0, &idx)
    }

    fn det_bareiss_unchecked(&self) -> LaurentPoly {
        let n = self.rows;
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one(self.rank);
        for k in 0..n {
            // Sparsest nonzero pivot keeps intermediate products small.
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| (a[i][k].len(), i));
            let Some(p) = pivot else { return LaurentPoly::zero(self.rank) };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in rest.iter_mut() {
                for j in k + 1..n {
                    let num = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                    row[j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                row[k] = LaurentPoly::zero(self.rank);
            }
            prev = a[k][k].clone();
        }
        let d = if n == 0 { LaurentPoly::one(self.rank) } else { a[n - 1][n - 1].clone() };
        if negate {
            -d
        } else {
            d
        }
    }

    /// All `k x k` minors, columns chosen in lexicographic order of subsets.
    pub fn minors(&self, k: usize) -> Vec<LaurentPoly> {
        let mut out = Vec::new();
        for rs in subsets(self.rows, k) {
            for cs in subsets(self.cols, k) {
                let sub = self.submatrix(&rs, &cs);
                out.push(sub.det().expect("square"));
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rank, rows.len(), cols.len());
        for (ii, &i) in rows.iter().enumerate() {
            for (jj, &j) in cols.iter().enumerate() {
                m[(ii, jj)] = self[(i, j)].clone();
            }
        }
        m
    }
}

fn cofactor(m: &LaurentMatrix, row: usize, cols: &[usize]) -> LaurentPoly {
    if cols.is_empty() {
        return LaurentPoly::one(m.rank);
    }
    let mut acc = LaurentPoly::zero(m.rank);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[(row, c)];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &cofactor(m, row + 1, &rest);
        if pos % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl std::ops::Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

/// Free-function form of [`LaurentMatrix::det`].
pub fn laurent_det(m: &LaurentMatrix) -> Result<LaurentPoly, AlgebraError> {
    m.det()
}

/// Normalized gcd of the `n + 1` maximal minors of an `n x (n+1)` matrix.
pub fn maximal_minors_gcd(m: &LaurentMatrix) -> Result<LaurentPoly, AlgebraError> {
    if m.cols != m.rows + 1 {
        return Err(AlgebraError::WrongShape { rows: m.rows, cols: m.cols });
    }
    let minors: Vec<LaurentPoly> = (0..m.cols)
        .map(|j| m.delete_columns(&[j]).det())
        .collect::<Result<_, _>>()?;
    lp_gcd_all(m.rank, &minors)
}

/// Normalized gcd of all `k x k` minors.
pub fn minors_gcd(m: &LaurentMatrix, k: usize) -> Result<LaurentPoly, AlgebraError> {
    lp_gcd_all(m.rank, &m.minors(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 1).unwrap()
    }

    #[test]
    fn bareiss_matches_cofactor_on_five_by_five() {
        let entries = [
            "u - 1", "2", "u^-1", "0", "3*u^2", "1", "u", "-u^-2 + 4", "u + 1", "0", "7", "-1",
            "u^3", "2*u", "u^-1 - u", "0", "1 - u", "5", "u^2", "-2", "1", "1", "1", "u", "u^-1",
        ];
        let rows: Vec<Vec<LaurentPoly>> =
            entries.chunks(5).map(|r| r.iter().map(|s| u(s)).collect()).collect();
        let m = LaurentMatrix::from_rows(1, rows).unwrap();
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 3), Vec::<Vec<usize>>::new());
    }
}
