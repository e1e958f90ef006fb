//! Linear algebra over prime fields and the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeff::{invmod, BaseRing, Coefficient};

pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn from_coefficient(&self, c: &Coefficient) -> Self::Elem {
        self.from_bigint(&c.to_bigint())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField(pub u64);

impl Field for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        invmod(*a, self.0).expect("inverse of zero")
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        n.mod_floor(&BigInt::from(self.0)).to_u64().unwrap()
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// Either field, chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl FieldKind {
    /// The coefficient ring used to carry polynomial data before coercion.
    pub fn carrier(self) -> BaseRing {
        match self {
            FieldKind::Rationals => BaseRing::Integers,
            FieldKind::Prime(p) => BaseRing::Prime(p),
        }
    }
}

impl std::fmt::Display for FieldKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// A subspace of `F^n` held as fully reduced row-echelon rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        self.insert_with_pivot(v).is_some()
    }

    /// Adds `v` and returns the new pivot column, if any.
    pub fn insert_with_pivot(&mut self, v: &[F::Elem]) -> Option<usize> {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !f.is_zero(x))?;
        let inv = f.inv(&r[p]);
        for x in r.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        Some(p)
    }

    /// Columns that are not pivots: the standard coordinates of the quotient.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// A subspace of `F_2^n` with bit-packed, fully reduced rows.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Gf2Basis {
    pub fn new(dim: usize) -> Self {
        Gf2Basis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; dim],
        }
    }

    pub fn words(dim: usize) -> usize {
        dim.div_ceil(64)
    }

    pub fn from_bits(dim: usize, bits: &[usize]) -> Vec<u64> {
        let mut v = vec![0u64; Self::words(dim)];
        for &b in bits {
            v[b / 64] ^= 1 << (b % 64);
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x ^= y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let r = self.reduce(v);
        let Some(p) = first_bit(&r) else {
            return false;
        };
        for row in self.rows.iter_mut() {
            if row[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&r) {
                    *x ^= y;
                }
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c].is_some()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|&c| !self.is_pivot(c)).collect()
    }
}

pub fn first_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Left kernel over F_2 of bit-packed rows of length `cols`. Kernel vectors
/// come back bit-packed over the row indices, reduced so that no two share
/// a leading bit.
pub fn gf2_left_kernel(rows: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let n = rows.len();
    let mut e = Gf2Basis::new(cols + n);
    for (i, r) in rows.iter().enumerate() {
        let mut v = vec![0u64; Gf2Basis::words(cols + n)];
        for c in 0..cols {
            if r[c / 64] >> (c % 64) & 1 == 1 {
                v[c / 64] ^= 1 << (c % 64);
            }
        }
        let b = cols + i;
        v[b / 64] ^= 1 << (b % 64);
        e.insert(&v);
    }
    let mut out = Vec::new();
    for (r, &p) in e.rows().iter().zip(e.pivots()) {
        if p < cols {
            continue;
        }
        let mut k = vec![0u64; Gf2Basis::words(n)];
        for i in 0..n {
            let b = cols + i;
            if r[b / 64] >> (b % 64) & 1 == 1 {
                k[i / 64] ^= 1 << (i % 64);
            }
        }
        out.push(k);
    }
    out
}

/// A subspace over a field chosen at run time, fed sparse integer vectors
/// (reduced into the field on entry).
#[derive(Clone, Debug)]
pub enum Subspace {
    Gf2(Gf2Basis),
    Fp(EchelonBasis<PrimeField>),
    Q(EchelonBasis<Rationals>),
}

impl Subspace {
    pub fn new(kind: FieldKind, dim: usize) -> Self {
        match kind {
            FieldKind::Prime(2) => Subspace::Gf2(Gf2Basis::new(dim)),
            FieldKind::Prime(p) => Subspace::Fp(EchelonBasis::new(PrimeField(p), dim)),
            FieldKind::Rationals => Subspace::Q(EchelonBasis::new(Rationals, dim)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Subspace::Gf2(b) => b.rank(),
            Subspace::Fp(b) => b.rank(),
            Subspace::Q(b) => b.rank(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Subspace::Gf2(b) => b.ambient_dim(),
            Subspace::Fp(b) => b.ambient_dim(),
            Subspace::Q(b) => b.ambient_dim(),
        }
    }

    fn dense<F: Field>(f: &F, dim: usize, v: &[(usize, BigInt)]) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); dim];
        for (i, c) in v {
            out[*i] = f.add(&out[*i], &f.from_bigint(c));
        }
        out
    }

    fn bits(dim: usize, v: &[(usize, BigInt)]) -> Vec<u64> {
        use num_integer::Integer;
        let odd: Vec<usize> = v
            .iter()
            .filter(|(_, c)| c.is_odd())
            .map(|(i, _)| *i)
            .collect();
        Gf2Basis::from_bits(dim, &odd)
    }

    pub fn insert(&mut self, v: &[(usize, BigInt)]) -> bool {
        match self {
            Subspace::Gf2(b) => {
                let w = Self::bits(b.ambient_dim(), v);
                b.insert(&w)
            }
            Subspace::Fp(b) => {
                let w = Self::dense(&b.field.clone(), b.ambient_dim(), v);
                b.insert(&w)
            }
            Subspace::Q(b) => {
                let w = Self::dense(&Rationals, b.ambient_dim(), v);
                b.insert(&w)
            }
        }
    }

    pub fn contains(&self, v: &[(usize, BigInt)]) -> bool {
        match self {
            Subspace::Gf2(b) => b.contains(&Self::bits(b.ambient_dim(), v)),
            Subspace::Fp(b) => b.contains(&Self::dense(&b.field, b.ambient_dim(), v)),
            Subspace::Q(b) => b.contains(&Self::dense(&Rationals, b.ambient_dim(), v)),
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        match self {
            Subspace::Gf2(b) => b.free_columns(),
            Subspace::Fp(b) => b.free_columns(),
            Subspace::Q(b) => b.free_columns(),
        }
    }
}

/// Rank of a matrix given as rows.
pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], cols: usize) -> usize {
    let mut e = EchelonBasis::new(field.clone(), cols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : x * M = 0}` for `M` given as rows, i.e. the left kernel.
pub fn left_kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let n = rows.len();
    // Augment each row with the identity and reduce; rows whose left part
    // vanishes record kernel vectors.
    let mut e = EchelonBasis::new(field.clone(), cols + n);
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        v.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
        e.insert(&v);
    }
    e.rows()
        .iter()
        .zip(e.pivots())
        .filter(|(_, &p)| p >= cols)
        .map(|(r, _)| r[cols..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_over_f3() {
        let f = PrimeField(3);
        let mut e = EchelonBasis::new(f, 3);
        assert!(e.insert(&[1, 2, 0]));
        assert!(e.insert(&[2, 1, 1]));
        assert!(!e.insert(&[0, 0, 1]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 2, 1]));
    }

    #[test]
    fn gf2_kernel() {
        // rows 0 and 1 agree, row 2 is independent
        let rows = vec![vec![0b011], vec![0b011], vec![0b100]];
        let k = gf2_left_kernel(&rows, 3);
        assert_eq!(k, vec![vec![0b011]]);
    }

    #[test]
    fn left_kernel_over_q() {
        let q = Rationals;
        let rows: Vec<Vec<BigRational>> = [[1, 2], [2, 4], [0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| q.from_i64(x)).collect())
            .collect();
        let k = left_kernel(&q, &rows, 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        for c in 0..2 {
            let s = (0..3).fold(q.zero(), |acc, i| q.add(&acc, &q.mul(&v[i], &rows[i][c])));
            assert!(s.is_zero());
        }
    }
}
