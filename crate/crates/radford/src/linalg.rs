//! Dense exact linear algebra over F_p.
//!
//! Everything here is deterministic: pivots are the first nonzero entry in
//! scan order, free variables are set to zero, and nullspace bases are
//! emitted with free columns ascending, so outputs are bit-reproducible
//! across runs and platforms. Storage is dense row-major `u64` residues;
//! at the dimensions this crate works with (a few hundred at most) dense
//! beats any sparse cleverness.

use crate::field::{Fp, PrimeModulus};

/// Accumulator threshold for lazy reduction: a reduced product is < 2^62,
/// so accumulators stay below 2^64 as long as we fold before 2^63.
const LAZY_LIMIT: u64 = 1 << 63;

#[inline]
pub(crate) fn lazy_acc(acc: &mut u64, term: u64, p: u64) {
    *acc += term;
    if *acc >= LAZY_LIMIT {
        *acc %= p;
    }
}

/// A vector over F_p with entries stored as reduced residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorFp {
    data: Vec<u64>,
    modulus: PrimeModulus,
}

impl VectorFp {
    pub fn zeros(len: usize, modulus: PrimeModulus) -> Self {
        VectorFp {
            data: vec![0; len],
            modulus,
        }
    }

    /// Build from raw residues, reducing each entry.
    pub fn from_raw(data: Vec<u64>, modulus: PrimeModulus) -> Self {
        let p = modulus.get();
        VectorFp {
            data: data.into_iter().map(|v| v % p).collect(),
            modulus,
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize) -> Fp {
        self.modulus.element(self.data[i])
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: Fp) {
        assert_eq!(value.modulus(), self.modulus, "modulus mismatch");
        self.data[i] = value.value();
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &VectorFp) -> VectorFp {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.len(), other.len(), "length mismatch");
        let m = self.modulus;
        VectorFp {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| m.add_raw(a, b))
                .collect(),
            modulus: m,
        }
    }

    pub fn sub(&self, other: &VectorFp) -> VectorFp {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.len(), other.len(), "length mismatch");
        let m = self.modulus;
        VectorFp {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| m.sub_raw(a, b))
                .collect(),
            modulus: m,
        }
    }

    pub fn scale(&self, c: Fp) -> VectorFp {
        assert_eq!(c.modulus(), self.modulus, "modulus mismatch");
        let m = self.modulus;
        VectorFp {
            data: self.data.iter().map(|&a| m.mul_raw(a, c.value())).collect(),
            modulus: m,
        }
    }

    /// Dot product sum_i a_i b_i.
    pub fn dot(&self, other: &VectorFp) -> Fp {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.len(), other.len(), "length mismatch");
        let p = self.modulus.get();
        let mut acc = 0u64;
        for (&a, &b) in self.data.iter().zip(&other.data) {
            lazy_acc(&mut acc, a * b, p);
        }
        self.modulus.element(acc)
    }

    /// Rescale so the first nonzero coordinate becomes 1; zero vectors are
    /// returned unchanged. This is the deterministic line representative
    /// used everywhere a one-dimensional space must be reported.
    pub fn normalized_leading(&self) -> VectorFp {
        match self.data.iter().position(|&v| v != 0) {
            None => self.clone(),
            Some(i) => self.scale(self.modulus.element(self.data[i]).inv()),
        }
    }
}

/// A dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixFp {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    modulus: PrimeModulus,
}

/// Result of reduced row echelon form: the reduced matrix, the pivot
/// columns in scan order, and the rank.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: MatrixFp,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl MatrixFp {
    pub fn zeros(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        MatrixFp {
            rows,
            cols,
            data: vec![0; rows * cols],
            modulus,
        }
    }

    pub fn identity(n: usize, modulus: PrimeModulus) -> Self {
        let mut m = MatrixFp::zeros(n, n, modulus);
        let one = 1 % modulus.get();
        for i in 0..n {
            m.data[i * n + i] = one;
        }
        m
    }

    /// Build from raw residues in row-major order, reducing each entry.
    pub fn from_raw(rows: usize, cols: usize, data: Vec<u64>, modulus: PrimeModulus) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows*cols");
        let p = modulus.get();
        MatrixFp {
            rows,
            cols,
            data: data.into_iter().map(|v| v % p).collect(),
            modulus,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fp {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.modulus.element(self.data[i * self.cols + j])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Fp) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        assert_eq!(value.modulus(), self.modulus, "modulus mismatch");
        self.data[i * self.cols + j] = value.value();
    }

    #[inline]
    pub(crate) fn raw(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn raw_mut(&mut self, i: usize, j: usize) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> VectorFp {
        let data = (0..self.rows).map(|i| self.data[i * self.cols + j]).collect();
        VectorFp {
            data,
            modulus: self.modulus,
        }
    }

    pub fn transpose(&self) -> MatrixFp {
        let mut out = MatrixFp::zeros(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn matmul(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let p = self.modulus.get();
        let mut out = MatrixFp::zeros(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    lazy_acc(d, a * b, p);
                }
            }
        }
        for v in &mut out.data {
            *v %= p;
        }
        out
    }

    pub fn matvec(&self, v: &VectorFp) -> VectorFp {
        assert_eq!(self.modulus, v.modulus, "modulus mismatch");
        assert_eq!(self.cols, v.len(), "dimension mismatch in matvec");
        let p = self.modulus.get();
        let mut out = VectorFp::zeros(self.rows, self.modulus);
        for i in 0..self.rows {
            let mut acc = 0u64;
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (&a, &b) in row.iter().zip(&v.data) {
                lazy_acc(&mut acc, a * b, p);
            }
            out.data[i] = acc % p;
        }
        out
    }

    pub fn trace(&self) -> Fp {
        assert_eq!(self.rows, self.cols, "trace requires a square matrix");
        let p = self.modulus.get();
        let mut acc = 0u64;
        for i in 0..self.rows {
            lazy_acc(&mut acc, self.data[i * self.cols + i], p);
        }
        self.modulus.element(acc)
    }

    pub fn add(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let m = self.modulus;
        MatrixFp {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| m.add_raw(a, b))
                .collect(),
            modulus: m,
        }
    }

    pub fn scale(&self, c: Fp) -> MatrixFp {
        assert_eq!(c.modulus(), self.modulus, "modulus mismatch");
        let m = self.modulus;
        MatrixFp {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| m.mul_raw(a, c.value())).collect(),
            modulus: m,
        }
    }

    /// Kronecker product with the convention
    /// `(A (x) B)[(i*rB + k), (j*cB + l)] = A[i,j] * B[k,l]`.
    pub fn kron(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        let m = self.modulus;
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        let mut out = MatrixFp::zeros(ra * rb, ca * cb, m);
        for i in 0..ra {
            for j in 0..ca {
                let a = self.data[i * ca + j];
                if a == 0 {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = other.data[k * cb + l];
                        if b != 0 {
                            out.data[(i * rb + k) * (ca * cb) + (j * cb + l)] = m.mul_raw(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form with deterministic pivoting: for each
    /// column in order, the pivot is the first row (top to bottom) with a
    /// nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = self.modulus.get();
        let modulus = self.modulus;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let mut found = None;
            for r in pivot_row..m.rows {
                if m.data[r * m.cols + col] != 0 {
                    found = Some(r);
                    break;
                }
            }
            let Some(r) = found else { continue };
            if r != pivot_row {
                for c in 0..m.cols {
                    m.data.swap(r * m.cols + c, pivot_row * m.cols + c);
                }
            }
            let inv = modulus.inv_raw(m.data[pivot_row * m.cols + col]);
            for c in col..m.cols {
                let v = &mut m.data[pivot_row * m.cols + c];
                *v = modulus.mul_raw(*v, inv);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.data[r * m.cols + col];
                if factor == 0 {
                    continue;
                }
                let neg = modulus.neg_raw(factor);
                for c in col..m.cols {
                    let add = neg * m.data[pivot_row * m.cols + c];
                    let v = &mut m.data[r * m.cols + c];
                    *v = (*v + add) % p;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    /// Basis of `{v : A v = 0}`, one vector per free column, free columns
    /// ascending. Empty when the kernel is trivial.
    pub fn nullspace(&self) -> Vec<VectorFp> {
        let r = self.rref();
        let pivot_set: std::collections::HashSet<usize> = r.pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = VectorFp::zeros(self.cols, self.modulus);
            v.data[free] = 1 % self.modulus.get();
            for (row, &pc) in r.pivots.iter().enumerate() {
                let coeff = r.matrix.data[row * self.cols + free];
                v.data[pc] = self.modulus.neg_raw(coeff);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b` when the system is consistent (free
    /// variables set to zero), `None` when it is inconsistent.
    pub fn solve(&self, b: &VectorFp) -> Option<VectorFp> {
        assert_eq!(self.modulus, b.modulus, "modulus mismatch");
        assert_eq!(self.rows, b.len(), "dimension mismatch in solve");
        let mut aug = MatrixFp::zeros(self.rows, self.cols + 1, self.modulus);
        for i in 0..self.rows {
            aug.data[i * (self.cols + 1)..i * (self.cols + 1) + self.cols]
                .copy_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
            aug.data[i * (self.cols + 1) + self.cols] = b.data[i];
        }
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = VectorFp::zeros(self.cols, self.modulus);
        for (row, &pc) in r.pivots.iter().enumerate() {
            x.data[pc] = r.matrix.data[row * (self.cols + 1) + self.cols];
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let m = fp(5);
        let id = MatrixFp::identity(3, m);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let z = MatrixFp::zeros(2, 2, m);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one_over_f2() {
        let m = fp(2);
        let a = MatrixFp::from_raw(2, 2, vec![1, 1, 1, 1], m);
        let r = a.rref();
        assert_eq!(r.matrix.as_slice(), &[1, 1, 0, 0]);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn nullspace_cases() {
        let m = fp(3);
        assert!(MatrixFp::identity(4, m).nullspace().is_empty());

        let z = MatrixFp::zeros(2, 2, m);
        let basis = z.nullspace();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].as_slice(), &[1, 0]);
        assert_eq!(basis[1].as_slice(), &[0, 1]);

        // Exhaustive oracle over F_2^2: the kernel of [[1,1],[1,1]] is {0,(1,1)}.
        let m2 = fp(2);
        let a = MatrixFp::from_raw(2, 2, vec![1, 1, 1, 1], m2);
        let mut kernel = Vec::new();
        for v0 in 0..2u64 {
            for v1 in 0..2u64 {
                let v = VectorFp::from_raw(vec![v0, v1], m2);
                if a.matvec(&v).is_zero() && !v.is_zero() {
                    kernel.push(v);
                }
            }
        }
        assert_eq!(kernel.len(), 1);
        let basis = a.nullspace();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], kernel[0]);
        assert_eq!(basis[0].as_slice(), &[1, 1]);
    }

    #[test]
    fn solve_cases() {
        let m = fp(3);
        let id = MatrixFp::identity(3, m);
        let b = VectorFp::from_raw(vec![2, 0, 1], m);
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = MatrixFp::zeros(2, 2, m);
        let b = VectorFp::from_raw(vec![1, 0], m);
        assert!(z.solve(&b).is_none());

        // Exhaustive oracle over F_3^2: solutions of x0 + x1 = 2 are
        // (2,0), (1,1), (0,2); the deterministic choice sets the free
        // variable to zero, picking (2,0).
        let a = MatrixFp::from_raw(2, 2, vec![1, 1, 0, 0], m);
        let b = VectorFp::from_raw(vec![2, 0], m);
        let mut solutions = Vec::new();
        for v0 in 0..3u64 {
            for v1 in 0..3u64 {
                let v = VectorFp::from_raw(vec![v0, v1], m);
                if a.matvec(&v) == b {
                    solutions.push(v);
                }
            }
        }
        assert_eq!(solutions.len(), 3);
        let x = a.solve(&b).unwrap();
        assert!(solutions.contains(&x));
        assert_eq!(x.as_slice(), &[2, 0]);
    }

    #[test]
    fn trace_and_kron_basics() {
        let m = fp(5);
        assert_eq!(MatrixFp::identity(7, m).trace().value(), 2); // 7 mod 5
        let k = MatrixFp::identity(2, m).kron(&MatrixFp::identity(3, m));
        assert_eq!(k, MatrixFp::identity(6, m));
    }

    #[test]
    fn normalized_leading_representative() {
        let m = fp(7);
        let v = VectorFp::from_raw(vec![0, 3, 5], m);
        let n = v.normalized_leading();
        assert_eq!(n.as_slice()[1], 1);
        assert_eq!(n.as_slice(), &[0, 1, 4]); // 5 * 3^{-1} = 5*5 = 25 = 4
    }

    fn arb_matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = MatrixFp> {
        prop::collection::vec(0..p, rows * cols)
            .prop_map(move |data| MatrixFp::from_raw(rows, cols, data, fp(p)))
    }

    proptest! {
        #[test]
        fn rank_nullity(a in (2usize..=6, 2usize..=6).prop_flat_map(|(r, c)| arb_matrix(7, r, c))) {
            let rank = a.rref().rank;
            let nullity = a.nullspace().len();
            prop_assert_eq!(rank + nullity, a.cols());
        }

        #[test]
        fn nullspace_vectors_are_in_kernel(a in arb_matrix(5, 4, 6)) {
            for v in a.nullspace() {
                prop_assert!(a.matvec(&v).is_zero());
            }
        }

        #[test]
        fn trace_commutes(a in arb_matrix(7, 5, 5), b in arb_matrix(7, 5, 5)) {
            prop_assert_eq!(a.matmul(&b).trace(), b.matmul(&a).trace());
        }

        #[test]
        fn kron_mixed_product(
            a in arb_matrix(3, 2, 3),
            b in arb_matrix(3, 3, 2),
            c in arb_matrix(3, 2, 2),
            d in arb_matrix(3, 2, 3),
        ) {
            // (A (x) C)(B (x) D) = AB (x) CD
            let lhs = a.kron(&c).matmul(&b.kron(&d));
            let rhs = a.matmul(&b).kron(&c.matmul(&d));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_bilinear(
            a in arb_matrix(5, 2, 2),
            b in arb_matrix(5, 2, 2),
            c in arb_matrix(5, 3, 3),
            s in 0u64..5,
        ) {
            let m = fp(5);
            let s = m.element(s);
            let lhs = a.scale(s).add(&b).kron(&c);
            let rhs = a.kron(&c).scale(s).add(&b.kron(&c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn solve_finds_solutions(a in arb_matrix(5, 4, 4), xs in prop::collection::vec(0..5u64, 4)) {
            let x = VectorFp::from_raw(xs, fp(5));
            let b = a.matvec(&x);
            // a solution must exist (x is one); the solver's answer must solve
            let sol = a.solve(&b).expect("consistent by construction");
            prop_assert_eq!(a.matvec(&sol), b);
        }
    }
}
