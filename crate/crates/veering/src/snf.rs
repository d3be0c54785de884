//! Integer matrices and Smith normal form.

use crate::error::AlgebraError;

/// Dense integer matrix stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Ragged);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let rows: Vec<Vec<i64>> = keep.iter().map(|&i| self.row(i).to_vec()).collect();
        let mut m = IntMatrix::from_rows(&rows).expect("rows share a length");
        m.cols = self.cols;
        m
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<Self, AlgebraError> {
        if self.rows != other.rows {
            return Err(AlgebraError::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)];
            }
        }
        Ok(m)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a.checked_mul(other[(k, j)]).ok_or(AlgebraError::Overflow)?;
                    m[(i, j)] = m[(i, j)].checked_add(v).ok_or(AlgebraError::Overflow)?;
                }
            }
        }
        Ok(m)
    }

    /// Rank over the rationals, by fraction-free elimination in i128.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| a[i][c] != 0) else { continue };
            a.swap(rank, p);
            for i in rank + 1..self.rows {
                if a[i][c] != 0 {
                    let (x, y) = (a[rank][c], a[i][c]);
                    let g = gcd_i128(x, y);
                    for j in 0..self.cols {
                        a[i][j] = a[i][j] * (x / g) - a[rank][j] * (y / g);
                    }
                    let cont = a[i].iter().fold(0, |acc, &v| gcd_i128(acc, v));
                    if cont > 1 {
                        a[i].iter_mut().for_each(|v| *v /= cont);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Determinant of a square matrix via i128 Bareiss elimination.
    pub fn det(&self) -> Result<i128, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| a[i][k] != 0) else { return Ok(0) };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        Ok(sign * if n == 0 { 1 } else { a[n - 1][n - 1] })
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `S = U * A * V` with `S` diagonal, diagonal entries nonnegative and each
/// dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s[(i, i)])
            .filter(|&d| d != 0)
            .collect()
    }

    /// Number of zero rows of `S`.
    pub fn zero_rows(&self) -> usize {
        (0..self.s.rows)
            .filter(|&i| self.s.row(i).iter().all(|&x| x == 0))
            .count()
    }
}

/// Row-major scratch matrix with wide entries; elimination can grow
/// intermediate values well past the final ones.
struct Wide {
    cols: usize,
    data: Vec<i128>,
}

impl Wide {
    fn from(m: &IntMatrix) -> Self {
        Wide { cols: m.cols, data: m.data.iter().map(|&x| i128::from(x)).collect() }
    }

    fn at(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    fn rows(&self) -> usize {
        self.data.len() / self.cols.max(1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows() {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, q: i128) -> Result<(), AlgebraError> {
        for j in 0..self.cols {
            let v = q.checked_mul(self.at(src, j)).ok_or(AlgebraError::Overflow)?;
            let d = &mut self.data[dst * self.cols + j];
            *d = d.checked_add(v).ok_or(AlgebraError::Overflow)?;
        }
        Ok(())
    }

    /// col[dst] += q * col[src]
    fn axpy_col(&mut self, dst: usize, src: usize, q: i128) -> Result<(), AlgebraError> {
        for i in 0..self.rows() {
            let v = q.checked_mul(self.at(i, src)).ok_or(AlgebraError::Overflow)?;
            let d = &mut self.data[i * self.cols + dst];
            *d = d.checked_add(v).ok_or(AlgebraError::Overflow)?;
        }
        Ok(())
    }

    fn narrow(self, rows: usize) -> Result<IntMatrix, AlgebraError> {
        let data = self
            .data
            .into_iter()
            .map(|x| i64::try_from(x).map_err(|_| AlgebraError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(IntMatrix { rows, cols: self.cols, data })
    }
}

struct Work {
    s: Wide,
    u: Wide,
    v: Wide,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.s.swap_rows(a, b);
            self.u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            self.s.swap_cols(a, b);
            self.v.swap_cols(a, b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: i128) -> Result<(), AlgebraError> {
        self.s.axpy_row(dst, src, q)?;
        self.u.axpy_row(dst, src, q)
    }

    fn add_col(&mut self, dst: usize, src: usize, q: i128) -> Result<(), AlgebraError> {
        self.s.axpy_col(dst, src, q)?;
        self.v.axpy_col(dst, src, q)
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.s, &mut self.u] {
            for j in 0..m.cols {
                m.data[i * m.cols + j] = -m.data[i * m.cols + j];
            }
        }
    }
}

/// Smith normal form with deterministic pivoting: at each stage the pivot is
/// the nonzero entry of least absolute value, ties broken by lowest row and
/// then lowest column.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SnfResult, AlgebraError> {
    let (m, n) = (a.rows, a.cols);
    let mut w = Work {
        s: Wide::from(a),
        u: Wide::from(&IntMatrix::identity(m)),
        v: Wide::from(&IntMatrix::identity(n)),
    };
    for t in 0..m.min(n) {
        let mut best: Option<(u128, usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = w.s.at(i, j).unsigned_abs();
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.s.at(t, t);
            let mut clean = true;
            for i in t + 1..m {
                let x = w.s.at(i, t);
                if x != 0 {
                    w.add_row(i, t, -(x / p))?;
                    clean &= w.s.at(i, t) == 0;
                }
            }
            for j in t + 1..n {
                let x = w.s.at(t, j);
                if x != 0 {
                    w.add_col(j, t, -(x / p))?;
                    clean &= w.s.at(t, j) == 0;
                }
            }
            if !clean {
                // A remainder smaller than the pivot survived: move it in.
                let mut best = (w.s.at(t, t).unsigned_abs(), t, t);
                for i in t + 1..m {
                    let x = w.s.at(i, t).unsigned_abs();
                    if x != 0 && x < best.0 {
                        best = (x, i, t);
                    }
                }
                for j in t + 1..n {
                    let x = w.s.at(t, j).unsigned_abs();
                    if x != 0 && x < best.0 {
                        best = (x, t, j);
                    }
                }
                w.swap_rows(t, best.1);
                w.swap_cols(t, best.2);
                continue;
            }
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| w.s.at(i, j) % p != 0);
            match bad {
                Some((i, _)) => w.add_row(t, i, 1)?,
                None => break,
            }
        }
        if w.s.at(t, t) < 0 {
            w.negate_row(t);
        }
    }
    Ok(SnfResult { s: w.s.narrow(m)?, u: w.u.narrow(m)?, v: w.v.narrow(n)? })
}
