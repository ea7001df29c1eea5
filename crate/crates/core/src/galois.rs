//! Prime fields `GF(q)` and the row reduction needed to build and check codes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus (largest prime below 2^16).
pub const MAX_MODULUS: u32 = 65521;

/// A prime `q` with `2 <= q <= 65521`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(q: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS as u64).contains(&q) || !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self(q as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn element(self, value: u64) -> Result<FieldElement> {
        if value >= self.0 as u64 {
            return Err(Error::NotInField { value, q: self.0 });
        }
        Ok(FieldElement {
            value: value as u32,
            q: self,
        })
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.0) {
            return Err(Error::ZeroInverse(self.0));
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `GF(q)` that remembers its field.
///
/// Mixing elements of different fields in an arithmetic operator panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    q: PrimeModulus,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Self> {
        Ok(Self {
            value: self.q.inv(self.value)?,
            q: self.q,
        })
    }

    #[inline]
    fn same_field(self, rhs: Self) -> PrimeModulus {
        assert_eq!(self.q, rhs.q, "field elements from different fields");
        self.q
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let q = self.same_field(rhs);
        Self {
            value: q.add(self.value, rhs.value),
            q,
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let q = self.same_field(rhs);
        Self {
            value: q.sub(self.value, rhs.value),
            q,
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let q = self.same_field(rhs);
        Self {
            value: q.mul(self.value, rhs.value),
            q,
        }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: self.q.neg(self.value),
            q: self.q,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over `GF(q)`. Zero rows are allowed, zero columns are not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    q: PrimeModulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FieldMatrix {
    pub fn new(q: PrimeModulus, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::Shape("matrix needs at least one column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries given for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= q.get()) {
            return Err(Error::NotInField {
                value: bad as u64,
                q: q.get(),
            });
        }
        Ok(Self {
            q,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows<R: AsRef<[u32]>>(q: PrimeModulus, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::new(q, rows.len(), cols, data)
    }

    pub fn zeros(q: PrimeModulus, rows: usize, cols: usize) -> Self {
        assert!(cols > 0);
        Self {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(q: PrimeModulus, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.q
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        // chunks_exact panics on 0, cols is never 0
        self.data.chunks_exact(self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    ///
    /// The returned matrix keeps the original row count; rows past the rank are zero.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let q = self.q;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pr, lead);
            let inv = q.inv(m.get(lead, col)).expect("pivot is nonzero");
            m.scale_row(lead, inv);
            for r in 0..self.rows {
                let factor = m.get(r, col);
                if r != lead && factor != 0 {
                    m.sub_scaled_row(r, lead, factor);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : self · xᵀ = 0}`, one vector per row.
    ///
    /// The result has `cols - rank` rows. The basis is the one read off the
    /// reduced echelon form and is not otherwise canonical.
    pub fn nullspace_basis(&self) -> FieldMatrix {
        let q = self.q;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = FieldMatrix::zeros(q, free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            out.data[i * self.cols + f] = 1;
            for (row, &p) in pivots.iter().enumerate() {
                out.data[i * self.cols + p] = q.neg(r.get(row, f));
            }
        }
        out
    }

    /// `self · otherᵀ`.
    pub fn mul_transpose(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.q != other.q || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} over {} by transpose of {}x{} over {}",
                self.rows, self.cols, self.q, other.rows, other.cols, other.q
            )));
        }
        let q = self.q;
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for a in self.row_iter() {
            for b in other.row_iter() {
                data.push(dot(q, a, b));
            }
        }
        FieldMatrix::new(q, self.rows, other.rows, data)
    }

    /// True when every row of `self` is orthogonal to every row of `other`.
    pub fn orthogonal_to(&self, other: &FieldMatrix) -> bool {
        self.q == other.q
            && self.cols == other.cols
            && self
                .row_iter()
                .all(|a| other.row_iter().all(|b| dot(self.q, a, b) == 0))
    }

    /// True when both matrices span the same row space.
    pub fn same_row_space(&self, other: &FieldMatrix) -> bool {
        if self.q != other.q || self.cols != other.cols {
            return false;
        }
        let (a, pa) = self.rref();
        let (b, pb) = other.rref();
        pa == pb && (0..pa.len()).all(|i| a.row(i) == b.row(i))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let q = self.q;
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = q.mul(*v, s);
        }
    }

    // row[dst] -= factor * row[src]
    fn sub_scaled_row(&mut self, dst: usize, src: usize, factor: u32) {
        let q = self.q;
        for c in 0..self.cols {
            let s = q.mul(factor, self.data[src * self.cols + c]);
            let d = &mut self.data[dst * self.cols + c];
            *d = q.sub(*d, s);
        }
    }
}

/// Inner product of two vectors over `GF(q)`.
pub fn dot(q: PrimeModulus, a: &[u32], b: &[u32]) -> u32 {
    let m = q.get() as u64;
    let s = a
        .iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % m);
    s as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> PrimeModulus {
        PrimeModulus::new(q).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(65521).is_ok());
        assert_eq!(PrimeModulus::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeModulus::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeModulus::new(65537), Err(Error::NotPrime(65537)));
        assert!(gf(5).element(5).is_err());
    }

    #[test]
    fn small_arithmetic() {
        let q2 = gf(2);
        assert_eq!((q2.element(1).unwrap() + q2.element(1).unwrap()).value(), 0);
        let q5 = gf(5);
        assert_eq!(q5.element(2).unwrap().inv().unwrap().value(), 3);
        let q3 = gf(3);
        assert_eq!((q3.element(2).unwrap() * q3.element(2).unwrap()).value(), 1);
        assert_eq!(q3.element(0).unwrap().inv(), Err(Error::ZeroInverse(3)));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_fields_panic() {
        let _ = gf(3).element(1).unwrap() + gf(5).element(1).unwrap();
    }

    #[test]
    fn exhaustive_field_laws_small_q() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let f = gf(q);
            for a in 0..q as u32 {
                for b in 0..q as u32 {
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    assert_eq!(f.add(a, f.neg(a)), 0);
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn rref_examples() {
        let q = gf(2);
        let id = FieldMatrix::identity(q, 4);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2, 3]));

        let m = FieldMatrix::from_rows(q, &[[1, 1, 0], [0, 1, 1]]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(
            r,
            FieldMatrix::from_rows(q, &[[1, 0, 1], [0, 1, 1]]).unwrap()
        );
        assert_eq!(p, vec![0, 1]);

        let z = FieldMatrix::zeros(gf(3), 2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn nullspace_examples() {
        let q = gf(2);
        let m = FieldMatrix::from_rows(q, &[[1, 1, 1]]).unwrap();
        let n = m.nullspace_basis();
        assert_eq!(n.rows(), 2);
        assert_eq!(n.rank(), 2);
        assert!(m.mul_transpose(&n).unwrap().is_zero());

        let full = FieldMatrix::from_rows(gf(3), &[[1, 2], [0, 1]]).unwrap();
        assert_eq!(full.nullspace_basis().rows(), 0);

        let q3 = gf(3);
        let m = FieldMatrix::from_rows(q3, &[[1, 2]]).unwrap();
        let n = m.nullspace_basis();
        assert_eq!(n.rows(), 1);
        let r = n.row(0);
        assert_eq!((r[0] + 2 * r[1]) % 3, 0);
        assert_ne!(r, &[0, 0]);
    }

    #[test]
    fn shape_errors() {
        let q = gf(2);
        assert!(FieldMatrix::new(q, 1, 0, vec![]).is_err());
        assert!(FieldMatrix::new(q, 2, 2, vec![0; 3]).is_err());
        assert!(FieldMatrix::new(q, 1, 2, vec![0, 2]).is_err());
        let a = FieldMatrix::zeros(q, 1, 2);
        let b = FieldMatrix::zeros(q, 1, 3);
        assert!(a.mul_transpose(&b).is_err());
    }

    fn matrix_strategy() -> impl Strategy<Value = FieldMatrix> {
        (
            prop::sample::select(vec![2u64, 3, 5, 7, 251]),
            0usize..7,
            1usize..9,
        )
            .prop_flat_map(|(q, rows, cols)| {
                prop::collection::vec(0..q as u32, rows * cols)
                    .prop_map(move |data| FieldMatrix::new(gf(q), rows, cols, data).unwrap())
            })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            let n = m.nullspace_basis();
            prop_assert_eq!(m.rank() + n.rows(), m.cols());
            prop_assert_eq!(n.rank(), n.rows());
            prop_assert!(m.orthogonal_to(&n));
        }

        #[test]
        fn rref_preserves_row_space(m in matrix_strategy()) {
            let (r, pivots) = m.rref();
            prop_assert!(m.same_row_space(&r));
            for (i, &p) in pivots.iter().enumerate() {
                prop_assert_eq!(r.get(i, p), 1);
                for j in 0..r.rows() {
                    if j != i {
                        prop_assert_eq!(r.get(j, p), 0);
                    }
                }
            }
        }

        #[test]
        fn random_field_laws(a in 0u32..65521, b in 1u32..65521) {
            let f = gf(65521);
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            prop_assert_eq!(f.mul(b, f.inv(b).unwrap()), 1);
        }
    }
}
