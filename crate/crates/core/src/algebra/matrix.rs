//! Dense integer matrices and the Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub d: IntegerMatrix,
    /// Diagonal of `D`, `min(rows, cols)` entries, zeros last.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero invariant factors that are not units.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// A basis of the kernel of `A` (as column vectors): the last
    /// `cols - rank` columns of `V`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.v.cols())
            .map(|j| (0..self.v.rows()).map(|i| self.v.get(i, j).clone()).collect())
            .collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    /// row[i] -= q * row[k]
    fn row_axpy(&mut self, i: usize, k: usize, q: &BigInt, from: usize) {
        let (ri, rk) = pair_mut(&mut self.a, i, k);
        for (x, y) in ri[from..].iter_mut().zip(&rk[from..]) {
            if !y.is_zero() {
                *x -= q * y;
            }
        }
        if let Some(u) = &mut self.u {
            let (ri, rk) = pair_mut(u, i, k);
            for (x, y) in ri.iter_mut().zip(rk.iter()) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
    }

    /// col[j] -= q * col[k]
    fn col_axpy(&mut self, j: usize, k: usize, q: &BigInt, from: usize) {
        for row in &mut self.a[from..] {
            if !row[k].is_zero() {
                let t = q * &row[k];
                row[j] -= t;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                if !row[k].is_zero() {
                    let t = q * &row[k];
                    row[j] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, k: usize) {
        for x in &mut self.a[k] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[k] {
                *x = -&*x;
            }
        }
    }
}

fn pair_mut<T>(v: &mut [T], i: usize, k: usize) -> (&mut T, &T) {
    assert_ne!(i, k);
    if i < k {
        let (a, b) = v.split_at_mut(k);
        (&mut a[i], &b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &a[k])
    }
}

fn to_rows(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntegerMatrix {
    let r = rows.len();
    let mut data = Vec::with_capacity(r * cols);
    for row in rows {
        data.extend(row);
    }
    IntegerMatrix {
        rows: r,
        cols,
        data,
    }
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn reduce(w: &mut Work, rows: usize, cols: usize) -> Vec<BigInt> {
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                let x = &w.a[i][j];
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs())
                {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
            if let Some((bi, bj)) = best {
                if w.a[bi][bj].abs().is_one() {
                    break;
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if w.a[i][k].is_zero() {
                    continue;
                }
                let q = w.a[i][k].div_floor(&w.a[k][k]);
                w.row_axpy(i, k, &q, k);
                if !w.a[i][k].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if w.a[k][j].is_zero() {
                    continue;
                }
                let q = w.a[k][j].div_floor(&w.a[k][k]);
                w.col_axpy(j, k, &q, k);
                if !w.a[k][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // Move the smallest remaining entry of row/column k to the pivot.
                let mut best = (k, k);
                for i in k + 1..rows {
                    if !w.a[i][k].is_zero() && w.a[i][k].abs() < w.a[best.0][best.1].abs() {
                        best = (i, k);
                    }
                }
                for j in k + 1..cols {
                    if !w.a[k][j].is_zero() && w.a[k][j].abs() < w.a[best.0][best.1].abs() {
                        best = (k, j);
                    }
                }
                if best.0 != k {
                    w.swap_rows(k, best.0);
                }
                if best.1 != k {
                    w.swap_cols(k, best.1);
                }
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            let p = w.a[k][k].clone();
            let bad = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    w.row_axpy(k, i, &minus_one, k);
                }
                None => break,
            }
        }
        if w.a[k][k].is_negative() {
            w.negate_row(k);
        }
        diag.push(w.a[k][k].clone());
        k += 1;
    }
    diag
}

/// Smith normal form with both transforms.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: to_rows(m),
        u: Some(identity_rows(rows)),
        v: Some(identity_rows(cols)),
    };
    let nonzero = reduce(&mut w, rows, cols);
    let rank = nonzero.len();
    let mut diagonal = nonzero;
    diagonal.resize(rows.min(cols), BigInt::zero());
    SmithForm {
        u: from_rows(w.u.take().unwrap(), rows),
        v: from_rows(w.v.take().unwrap(), cols),
        d: from_rows(w.a, cols),
        diagonal,
        rank,
    }
}

/// Nonzero invariant factors only, without tracking transforms.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut w = Work {
        a: to_rows(m),
        u: None,
        v: None,
    };
    reduce(&mut w, m.rows(), m.cols())
}

/// Row Hermite normal form of the lattice spanned by `rows`: pivots
/// positive, entries above each pivot reduced into `[0, pivot)`, zero rows
/// dropped.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut done = 0usize;
    for c in 0..cols {
        // Euclid on column c among rows done.. until one nonzero entry is left.
        loop {
            let nz: Vec<usize> = (done..rows.len()).filter(|&r| !rows[r][c].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&r) = nz.first() {
                    rows.swap(done, r);
                    if rows[done][c].is_negative() {
                        for x in rows[done].iter_mut() {
                            *x = -&*x;
                        }
                    }
                    let piv = rows[done].clone();
                    for r in 0..done {
                        let q = rows[r][c].div_floor(&piv[c]);
                        if !q.is_zero() {
                            for (x, y) in rows[r].iter_mut().zip(&piv) {
                                *x -= &q * y;
                            }
                        }
                    }
                    done += 1;
                }
                break;
            }
            let small = *nz.iter().min_by_key(|&&r| rows[r][c].abs()).unwrap();
            let piv = rows[small].clone();
            for &r in &nz {
                if r == small {
                    continue;
                }
                let q = rows[r][c].div_floor(&piv[c]);
                for (x, y) in rows[r].iter_mut().zip(&piv) {
                    *x -= &q * y;
                }
            }
        }
    }
    rows.truncate(done);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &[Vec<i64>]) -> Vec<i64> {
        let f = smith_normal_form(&IntegerMatrix::from_rows(m));
        f.diagonal.iter().map(|d| d.try_into().unwrap()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(diag(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(diag(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let f = smith_normal_form(&a);
        assert_eq!(f.u.mul(&a).mul(&f.v), f.d);
        let d: Vec<i64> = f.diagonal.iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        assert!(f.u.determinant().abs().is_one());
        assert!(f.v.determinant().abs().is_one());
    }

    #[test]
    fn kernel_columns() {
        let a = IntegerMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let f = smith_normal_form(&a);
        assert_eq!(f.rank, 1);
        for k in f.kernel_basis() {
            let col = IntegerMatrix {
                rows: 3,
                cols: 1,
                data: k,
            };
            assert!(a.mul(&col).is_zero());
        }
    }
}
