//! Structure-constant representation of a finite-dimensional Hopf algebra
//! (H, m, u, Δ, ε, S) over F_p.
//!
//! The multiplication tensor stores `e_i · e_j = Σ_k M[i][j][k] e_k` and the
//! comultiplication tensor stores `Δ(e_i) = Σ_{j,k} D[i][j][k] e_j ⊗ e_k`.
//! The antipode matrix uses the column convention: column `j` holds the
//! coordinates of `S(e_j)`. Tensors are kept dense (dimensions stay small),
//! with sparse nonzero lists precomputed once per algebra because the
//! convolution loop must skip zeros.
//!
//! An algebra is either `verified` (all eight axiom checks passed at
//! construction) or explicitly unverified; invariant-computing operations
//! require the verified flag.

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::field::{Fp, PrimeModulus};
use crate::linalg::{lazy_acc, MatrixFp, VectorFp};

/// Dense 3-index tensor over F_p with all three indices of size `dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<u64>,
    modulus: PrimeModulus,
}

impl Tensor3 {
    pub fn zeros(dim: usize, modulus: PrimeModulus) -> Self {
        Tensor3 {
            dim,
            data: vec![0; dim * dim * dim],
            modulus,
        }
    }

    pub fn from_raw(dim: usize, data: Vec<u64>, modulus: PrimeModulus) -> Self {
        assert_eq!(data.len(), dim * dim * dim, "tensor data length must be dim^3");
        let p = modulus.get();
        Tensor3 {
            dim,
            data: data.into_iter().map(|v| v % p).collect(),
            modulus,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.dim + j) * self.dim + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: u64) {
        self.data[(i * self.dim + j) * self.dim + k] = value % self.modulus.get();
    }

    /// Nonzero entries as sorted `(i, j, k, value)` quadruples.
    pub fn nonzeros(&self) -> Vec<(u32, u32, u32, u64)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = self.get(i, j, k);
                    if v != 0 {
                        out.push((i as u32, j as u32, k as u32, v));
                    }
                }
            }
        }
        out
    }
}

/// An element of H: a coefficient vector in the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    coeffs: VectorFp,
}

impl AlgebraElement {
    pub fn new(coeffs: VectorFp) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &VectorFp {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> VectorFp {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.add(&other.coeffs),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.sub(&other.coeffs),
        }
    }

    pub fn scale(&self, c: Fp) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.scale(c),
        }
    }
}

/// A linear functional on H: its values on the basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualElement {
    coeffs: VectorFp,
}

impl DualElement {
    pub fn new(coeffs: VectorFp) -> Self {
        DualElement { coeffs }
    }

    pub fn coeffs(&self) -> &VectorFp {
        &self.coeffs
    }

    pub fn scale(&self, c: Fp) -> DualElement {
        DualElement {
            coeffs: self.coeffs.scale(c),
        }
    }
}

/// An element of H ⊗ H; the pair (j, k) is flattened as `j*dim + k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSquareElement {
    dim: usize,
    coeffs: VectorFp,
}

impl TensorSquareElement {
    pub fn new(dim: usize, coeffs: VectorFp) -> Self {
        assert_eq!(coeffs.len(), dim * dim, "tensor square length must be dim^2");
        TensorSquareElement { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &VectorFp {
        &self.coeffs
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize) -> Fp {
        self.coeffs.get(j * self.dim + k)
    }
}

/// Names of the eight axiom checks, in the order they are run.
pub const AXIOM_CHECK_NAMES: [&str; 8] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comult-algebra-map",
    "counit-algebra-map",
    "antipode-left",
    "antipode-right",
];

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Basis labels of the first failing witness, e.g. `(g, x)`.
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// A finite-dimensional Hopf algebra over F_p given by structure constants.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    modulus: PrimeModulus,
    dim: usize,
    basis_labels: Vec<String>,
    mult: Tensor3,
    unit: VectorFp,
    comult: Tensor3,
    counit: VectorFp,
    antipode: MatrixFp,
    // Sparse iteration caches, rebuilt deterministically from the tensors.
    mult_pairs: Vec<Vec<(u32, u64)>>,      // (i*dim + j) -> [(k, M[i][j][k])]
    comult_rows: Vec<Vec<(u32, u32, u64)>>, // i -> [(j, k, D[i][j][k])]
    verified: bool,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
            && self.basis_labels == other.basis_labels
            && self.same_tensors(other)
    }
}

pub(crate) fn build_mult_pairs(mult: &Tensor3) -> Vec<Vec<(u32, u64)>> {
    let dim = mult.dim();
    let mut pairs = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let list = &mut pairs[i * dim + j];
            for k in 0..dim {
                let v = mult.get(i, j, k);
                if v != 0 {
                    list.push((k as u32, v));
                }
            }
        }
    }
    pairs
}

fn build_comult_rows(comult: &Tensor3) -> Vec<Vec<(u32, u32, u64)>> {
    let dim = comult.dim();
    let mut rows = vec![Vec::new(); dim];
    for i in 0..dim {
        let row = &mut rows[i];
        for j in 0..dim {
            for k in 0..dim {
                let v = comult.get(i, j, k);
                if v != 0 {
                    row.push((j as u32, k as u32, v));
                }
            }
        }
    }
    rows
}

impl HopfAlgebra {
    /// Assemble and verify. The antipode is derived by solving the
    /// convolution-inverse system when not supplied. Fails with the first
    /// failing axiom check.
    pub fn from_parts(
        modulus: PrimeModulus,
        basis_labels: Vec<String>,
        mult: Tensor3,
        unit: VectorFp,
        comult: Tensor3,
        counit: VectorFp,
        antipode: Option<MatrixFp>,
    ) -> Result<HopfAlgebra, Error> {
        let mut h =
            HopfAlgebra::assemble(modulus, basis_labels, mult, unit, comult, counit, antipode)?;
        let report = h.verify_axioms();
        if let Some(fail) = report.first_failure() {
            return Err(Error::AxiomFailure {
                check: fail.name,
                witness: fail.witness.clone().unwrap_or_default(),
            });
        }
        h.verified = true;
        Ok(h)
    }

    /// Assemble without running the axiom checks. Used for negative tests
    /// and mutation studies; invariant-computing operations will refuse to
    /// run on the result.
    pub fn from_parts_unverified(
        modulus: PrimeModulus,
        basis_labels: Vec<String>,
        mult: Tensor3,
        unit: VectorFp,
        comult: Tensor3,
        counit: VectorFp,
        antipode: MatrixFp,
    ) -> Result<HopfAlgebra, Error> {
        HopfAlgebra::assemble(modulus, basis_labels, mult, unit, comult, counit, Some(antipode))
    }

    fn assemble(
        modulus: PrimeModulus,
        basis_labels: Vec<String>,
        mult: Tensor3,
        unit: VectorFp,
        comult: Tensor3,
        counit: VectorFp,
        antipode: Option<MatrixFp>,
    ) -> Result<HopfAlgebra, Error> {
        let dim = mult.dim();
        assert!(dim > 0, "algebra dimension must be positive");
        assert_eq!(basis_labels.len(), dim, "one label per basis element");
        assert_eq!(comult.dim(), dim, "comult tensor dimension mismatch");
        assert_eq!(unit.len(), dim, "unit vector length mismatch");
        assert_eq!(counit.len(), dim, "counit covector length mismatch");
        assert_eq!(mult.modulus(), modulus, "mult tensor modulus mismatch");
        assert_eq!(comult.modulus(), modulus, "comult tensor modulus mismatch");
        assert_eq!(unit.modulus(), modulus, "unit modulus mismatch");
        assert_eq!(counit.modulus(), modulus, "counit modulus mismatch");

        let mult_pairs = build_mult_pairs(&mult);
        let comult_rows = build_comult_rows(&comult);

        let antipode = match antipode {
            Some(s) => {
                assert_eq!((s.rows(), s.cols()), (dim, dim), "antipode shape mismatch");
                assert_eq!(s.modulus(), modulus, "antipode modulus mismatch");
                s
            }
            None => {
                let data = antipode_from_tables(
                    dim,
                    modulus,
                    &mult_pairs,
                    &comult_rows,
                    unit.as_slice(),
                    counit.as_slice(),
                )?;
                MatrixFp::from_raw(dim, dim, data, modulus)
            }
        };

        Ok(HopfAlgebra {
            modulus,
            dim,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            mult_pairs,
            comult_rows,
            verified: false,
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn mult_tensor(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn unit_vector(&self) -> &VectorFp {
        &self.unit
    }

    pub fn counit_vector(&self) -> &VectorFp {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &MatrixFp {
        &self.antipode
    }

    fn assert_verified(&self) {
        assert!(
            self.verified,
            "operation requires a verified Hopf algebra; run the axiom checks first"
        );
    }

    /// Tensor-for-tensor equality, ignoring labels and the verified flag.
    pub fn same_tensors(&self, other: &HopfAlgebra) -> bool {
        self.modulus == other.modulus
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Short hex digest of the canonical byte encoding; used as a stable
    /// algebra identifier in reports.
    pub fn canonical_id(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.modulus.get().to_le_bytes());
        hasher.update((self.dim as u64).to_le_bytes());
        for label in &self.basis_labels {
            hasher.update((label.len() as u64).to_le_bytes());
            hasher.update(label.as_bytes());
        }
        for t in [&self.mult, &self.comult] {
            for (i, j, k, v) in t.nonzeros() {
                for x in [i as u64, j as u64, k as u64, v] {
                    hasher.update(x.to_le_bytes());
                }
            }
            hasher.update(u64::MAX.to_le_bytes()); // section separator
        }
        for &v in self.unit.as_slice() {
            hasher.update(v.to_le_bytes());
        }
        for &v in self.counit.as_slice() {
            hasher.update(v.to_le_bytes());
        }
        for &v in self.antipode.as_slice() {
            hasher.update(v.to_le_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    // ---- Elements ----

    pub fn element_from_raw(&self, coeffs: Vec<u64>) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.dim, "coefficient length mismatch");
        AlgebraElement::new(VectorFp::from_raw(coeffs, self.modulus))
    }

    pub fn dual_from_raw(&self, coeffs: Vec<u64>) -> DualElement {
        assert_eq!(coeffs.len(), self.dim, "coefficient length mismatch");
        DualElement::new(VectorFp::from_raw(coeffs, self.modulus))
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement::new(VectorFp::zeros(self.dim, self.modulus))
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut v = VectorFp::zeros(self.dim, self.modulus);
        v.set(i, self.modulus.one());
        AlgebraElement::new(v)
    }

    /// The characteristic functional of basis element `i`.
    pub fn dual_basis_element(&self, i: usize) -> DualElement {
        let mut v = VectorFp::zeros(self.dim, self.modulus);
        v.set(i, self.modulus.one());
        DualElement::new(v)
    }

    pub fn unit_element(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    pub fn counit_functional(&self) -> DualElement {
        DualElement::new(self.counit.clone())
    }

    fn check_element(&self, a: &AlgebraElement) {
        assert_eq!(a.coeffs.len(), self.dim, "element belongs to a different algebra");
        assert_eq!(a.coeffs.modulus(), self.modulus, "modulus mismatch");
    }

    /// Render an element as a combination of basis labels, e.g. `1·x + 2·g x`.
    pub fn format_element(&self, coeffs: &VectorFp) -> String {
        let terms: Vec<String> = (0..self.dim)
            .filter(|&i| !coeffs.get(i).is_zero())
            .map(|i| format!("{}·{}", coeffs.get(i), self.basis_labels[i]))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    // ---- Structure maps on elements ----

    /// Product of two elements: bilinear contraction against the
    /// multiplication tensor.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.check_element(a);
        self.check_element(b);
        let p = self.modulus.get();
        let av = a.coeffs.as_slice();
        let bv = b.coeffs.as_slice();
        let mut out = vec![0u64; self.dim];
        for i in 0..self.dim {
            let ai = av[i];
            if ai == 0 {
                continue;
            }
            for j in 0..self.dim {
                let bj = bv[j];
                if bj == 0 {
                    continue;
                }
                let c = (ai * bj) % p;
                for &(k, v) in &self.mult_pairs[i * self.dim + j] {
                    lazy_acc(&mut out[k as usize], c * v, p);
                }
            }
        }
        self.element_from_raw(out.into_iter().map(|v| v % p).collect())
    }

    /// Comultiplication: linear expansion against the comult tensor.
    pub fn comultiply(&self, a: &AlgebraElement) -> TensorSquareElement {
        self.check_element(a);
        let p = self.modulus.get();
        let av = a.coeffs.as_slice();
        let mut out = vec![0u64; self.dim * self.dim];
        for i in 0..self.dim {
            let ai = av[i];
            if ai == 0 {
                continue;
            }
            for &(j, k, v) in &self.comult_rows[i] {
                lazy_acc(&mut out[j as usize * self.dim + k as usize], ai * v, p);
            }
        }
        TensorSquareElement::new(
            self.dim,
            VectorFp::from_raw(out.into_iter().map(|v| v % p).collect(), self.modulus),
        )
    }

    /// The elementary tensor a ⊗ b.
    pub fn tensor_of(&self, a: &AlgebraElement, b: &AlgebraElement) -> TensorSquareElement {
        self.check_element(a);
        self.check_element(b);
        let p = self.modulus.get();
        let mut out = vec![0u64; self.dim * self.dim];
        for j in 0..self.dim {
            let aj = a.coeffs.as_slice()[j];
            if aj == 0 {
                continue;
            }
            for k in 0..self.dim {
                out[j * self.dim + k] = (aj * b.coeffs.as_slice()[k]) % p;
            }
        }
        TensorSquareElement::new(self.dim, VectorFp::from_raw(out, self.modulus))
    }

    /// Componentwise product in H ⊗ H: (a⊗b)(c⊗d) = ac ⊗ bd, extended
    /// bilinearly.
    pub fn tensor_multiply(
        &self,
        s: &TensorSquareElement,
        t: &TensorSquareElement,
    ) -> TensorSquareElement {
        assert_eq!(s.dim, self.dim, "tensor square belongs to a different algebra");
        assert_eq!(t.dim, self.dim, "tensor square belongs to a different algebra");
        let data = tensor_square_product(
            self.dim,
            self.modulus,
            &self.mult_pairs,
            s.coeffs.as_slice(),
            t.coeffs.as_slice(),
        );
        TensorSquareElement::new(self.dim, VectorFp::from_raw(data, self.modulus))
    }

    /// Evaluation pairing f(a) = Σ_i f_i a_i.
    pub fn apply_dual(&self, f: &DualElement, a: &AlgebraElement) -> Fp {
        assert_eq!(f.coeffs.len(), self.dim, "functional belongs to a different algebra");
        self.check_element(a);
        f.coeffs.dot(&a.coeffs)
    }

    pub fn counit_of(&self, a: &AlgebraElement) -> Fp {
        self.check_element(a);
        self.counit.dot(&a.coeffs)
    }

    pub fn antipode_of(&self, a: &AlgebraElement) -> AlgebraElement {
        self.check_element(a);
        AlgebraElement::new(self.antipode.matvec(&a.coeffs))
    }

    /// Left multiplication operator L_i : v ↦ e_i · v.
    pub fn left_mult_operator(&self, i: usize) -> MatrixFp {
        let mut m = MatrixFp::zeros(self.dim, self.dim, self.modulus);
        for j in 0..self.dim {
            for &(k, v) in &self.mult_pairs[i * self.dim + j] {
                *m.raw_mut(k as usize, j) = v;
            }
        }
        m
    }

    /// Right multiplication operator R_i : v ↦ v · e_i.
    pub fn right_mult_operator(&self, i: usize) -> MatrixFp {
        let mut m = MatrixFp::zeros(self.dim, self.dim, self.modulus);
        for j in 0..self.dim {
            for &(k, v) in &self.mult_pairs[j * self.dim + i] {
                *m.raw_mut(k as usize, j) = v;
            }
        }
        m
    }

    // ---- Axiom verification ----

    /// Run the eight axiom checks, each exact and exhaustive over basis
    /// tuples. Failures carry the first witness in scan order.
    pub fn verify_axioms(&self) -> AxiomReport {
        let witnesses = [
            self.check_associativity(),
            self.check_unit(),
            self.check_coassociativity(),
            self.check_counit(),
            self.check_comult_algebra_map(),
            self.check_counit_algebra_map(),
            self.check_antipode(true),
            self.check_antipode(false),
        ];
        let checks = AXIOM_CHECK_NAMES
            .iter()
            .zip(witnesses)
            .map(|(&name, witness)| AxiomCheck {
                name,
                passed: witness.is_none(),
                witness,
            })
            .collect();
        AxiomReport { checks }
    }

    fn check_associativity(&self) -> Option<String> {
        let dim = self.dim;
        let p = self.modulus.get();
        let mut lhs = vec![0u64; dim];
        let mut rhs = vec![0u64; dim];
        for i in 0..dim {
            for j in 0..dim {
                let sij = &self.mult_pairs[i * dim + j];
                for k in 0..dim {
                    lhs.fill(0);
                    rhs.fill(0);
                    // (e_i e_j) e_k
                    for &(r, vr) in sij {
                        for &(l, v) in &self.mult_pairs[r as usize * dim + k] {
                            lazy_acc(&mut lhs[l as usize], vr * v, p);
                        }
                    }
                    // e_i (e_j e_k)
                    for &(s, vs) in &self.mult_pairs[j * dim + k] {
                        for &(l, v) in &self.mult_pairs[i * dim + s as usize] {
                            lazy_acc(&mut rhs[l as usize], vs * v, p);
                        }
                    }
                    for l in 0..dim {
                        if lhs[l] % p != rhs[l] % p {
                            return Some(format!(
                                "({}, {}, {})",
                                self.basis_labels[i], self.basis_labels[j], self.basis_labels[k]
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    fn check_unit(&self) -> Option<String> {
        for i in 0..self.dim {
            let e = self.basis_element(i);
            let one = self.unit_element();
            if self.multiply(&one, &e) != e || self.multiply(&e, &one) != e {
                return Some(self.basis_labels[i].clone());
            }
        }
        None
    }

    fn check_coassociativity(&self) -> Option<String> {
        let dim = self.dim;
        let p = self.modulus.get();
        let mut lhs = vec![0u64; dim * dim * dim];
        let mut rhs = vec![0u64; dim * dim * dim];
        for i in 0..dim {
            lhs.fill(0);
            rhs.fill(0);
            for &(j, k, v1) in &self.comult_rows[i] {
                // (Δ ⊗ id) Δ
                for &(a, b, v2) in &self.comult_rows[j as usize] {
                    let idx = (a as usize * dim + b as usize) * dim + k as usize;
                    lazy_acc(&mut lhs[idx], v1 * v2, p);
                }
                // (id ⊗ Δ) Δ
                for &(a, b, v2) in &self.comult_rows[k as usize] {
                    let idx = (j as usize * dim + a as usize) * dim + b as usize;
                    lazy_acc(&mut rhs[idx], v1 * v2, p);
                }
            }
            if lhs.iter().zip(&rhs).any(|(&l, &r)| l % p != r % p) {
                return Some(self.basis_labels[i].clone());
            }
        }
        None
    }

    fn check_counit(&self) -> Option<String> {
        let p = self.modulus.get();
        for i in 0..self.dim {
            let mut left = vec![0u64; self.dim];
            let mut right = vec![0u64; self.dim];
            for &(j, k, v) in &self.comult_rows[i] {
                let ej = self.counit.as_slice()[j as usize];
                let ek = self.counit.as_slice()[k as usize];
                lazy_acc(&mut left[k as usize], v * ej, p);
                lazy_acc(&mut right[j as usize], v * ek, p);
            }
            for l in 0..self.dim {
                let expected = if l == i { 1 } else { 0 };
                if left[l] % p != expected || right[l] % p != expected {
                    return Some(self.basis_labels[i].clone());
                }
            }
        }
        None
    }

    fn check_comult_algebra_map(&self) -> Option<String> {
        let dim = self.dim;
        let p = self.modulus.get();
        // Δ(1) = 1 ⊗ 1
        let unit_elem = self.unit_element();
        if self.comultiply(&unit_elem) != self.tensor_of(&unit_elem, &unit_elem) {
            return Some("1".to_string());
        }
        let mut lhs = vec![0u64; dim * dim];
        let mut rhs = vec![0u64; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                lhs.fill(0);
                rhs.fill(0);
                // Δ(e_i e_j)
                for &(r, vr) in &self.mult_pairs[i * dim + j] {
                    for &(a, b, v) in &self.comult_rows[r as usize] {
                        let c = (vr * v) % p;
                        lazy_acc(&mut lhs[a as usize * dim + b as usize], c, p);
                    }
                }
                // Δ(e_i) Δ(e_j)
                for &(a, b, v1) in &self.comult_rows[i] {
                    for &(c, d, v2) in &self.comult_rows[j] {
                        let t = (v1 * v2) % p;
                        for &(k1, w1) in &self.mult_pairs[a as usize * dim + c as usize] {
                            let u = (t * w1) % p;
                            for &(k2, w2) in &self.mult_pairs[b as usize * dim + d as usize] {
                                lazy_acc(&mut rhs[k1 as usize * dim + k2 as usize], u * w2, p);
                            }
                        }
                    }
                }
                if lhs.iter().zip(&rhs).any(|(&l, &r)| l % p != r % p) {
                    return Some(format!("({}, {})", self.basis_labels[i], self.basis_labels[j]));
                }
            }
        }
        None
    }

    fn check_counit_algebra_map(&self) -> Option<String> {
        let p = self.modulus.get();
        if self.counit.dot(&self.unit).value() != 1 % p {
            return Some("1".to_string());
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = 0u64;
                for &(k, v) in &self.mult_pairs[i * self.dim + j] {
                    lazy_acc(&mut acc, v * self.counit.as_slice()[k as usize], p);
                }
                let prod =
                    (self.counit.as_slice()[i] * self.counit.as_slice()[j]) % p;
                if acc % p != prod {
                    return Some(format!("({}, {})", self.basis_labels[i], self.basis_labels[j]));
                }
            }
        }
        None
    }

    /// Antipode axiom m ∘ (S⊗id) ∘ Δ = uε (left = true) or
    /// m ∘ (id⊗S) ∘ Δ = uε (left = false).
    fn check_antipode(&self, left: bool) -> Option<String> {
        let dim = self.dim;
        let p = self.modulus.get();
        let mut acc = vec![0u64; dim];
        for i in 0..dim {
            acc.fill(0);
            for &(j, k, v) in &self.comult_rows[i] {
                if left {
                    // S(e_j) · e_k
                    for r in 0..dim {
                        let s = self.antipode.raw(r, j as usize);
                        if s == 0 {
                            continue;
                        }
                        let c = (v * s) % p;
                        for &(l, w) in &self.mult_pairs[r * dim + k as usize] {
                            lazy_acc(&mut acc[l as usize], c * w, p);
                        }
                    }
                } else {
                    // e_j · S(e_k)
                    for r in 0..dim {
                        let s = self.antipode.raw(r, k as usize);
                        if s == 0 {
                            continue;
                        }
                        let c = (v * s) % p;
                        for &(l, w) in &self.mult_pairs[j as usize * dim + r] {
                            lazy_acc(&mut acc[l as usize], c * w, p);
                        }
                    }
                }
            }
            let eps = self.counit.as_slice()[i];
            for l in 0..dim {
                let expected = (eps * self.unit.as_slice()[l]) % p;
                if acc[l] % p != expected {
                    return Some(self.basis_labels[i].clone());
                }
            }
        }
        None
    }

    // ---- Dual ----

    /// The dual Hopf algebra on the dual basis. Structure tensors are the
    /// transposes: M*[a][b][i] = D[i][a][b], D*[k][i][j] = M[i][j][k],
    /// unit* = counit, counit* = unit, S* = S^T. The result is verified.
    pub fn dualize(&self) -> Result<HopfAlgebra, Error> {
        self.assert_verified();
        let dim = self.dim;
        let mut mult = Tensor3::zeros(dim, self.modulus);
        let mut comult = Tensor3::zeros(dim, self.modulus);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    mult.set(j, k, i, self.comult.get(i, j, k));
                    comult.set(k, i, j, self.mult.get(i, j, k));
                }
            }
        }
        let labels = self
            .basis_labels
            .iter()
            .map(|l| format!("δ({l})"))
            .collect();
        HopfAlgebra::from_parts(
            self.modulus,
            labels,
            mult,
            self.counit.clone(),
            comult,
            self.unit.clone(),
            Some(self.antipode.transpose()),
        )
    }

    // ---- Convolution and Sweedler powers ----

    /// The operator uε : h ↦ ε(h) 1_H, the two-sided identity of the
    /// convolution algebra.
    pub fn uepsilon_operator(&self) -> MatrixFp {
        let p = self.modulus.get();
        let mut m = MatrixFp::zeros(self.dim, self.dim, self.modulus);
        for r in 0..self.dim {
            let u = self.unit.as_slice()[r];
            if u == 0 {
                continue;
            }
            for j in 0..self.dim {
                *m.raw_mut(r, j) = (u * self.counit.as_slice()[j]) % p;
            }
        }
        m
    }

    pub fn identity_operator(&self) -> MatrixFp {
        MatrixFp::identity(self.dim, self.modulus)
    }

    /// Convolution product of two operators:
    /// (F * G)(h) = Σ F(h_(1)) · G(h_(2)).
    pub fn convolve(&self, f: &MatrixFp, g: &MatrixFp) -> MatrixFp {
        let dim = self.dim;
        assert_eq!((f.rows(), f.cols()), (dim, dim), "operator shape mismatch");
        assert_eq!((g.rows(), g.cols()), (dim, dim), "operator shape mismatch");
        assert_eq!(f.modulus(), self.modulus, "modulus mismatch");
        assert_eq!(g.modulus(), self.modulus, "modulus mismatch");
        let p = self.modulus.get();
        let mut out = MatrixFp::zeros(dim, dim, self.modulus);
        // T = F · D_j · G^T per column j, then contract with the mult tensor.
        let mut t = vec![0u64; dim * dim];
        for j in 0..dim {
            t.fill(0);
            for &(a, b, v) in &self.comult_rows[j] {
                for r in 0..dim {
                    let fa = f.raw(r, a as usize);
                    if fa == 0 {
                        continue;
                    }
                    let c = (v * fa) % p;
                    let row = &mut t[r * dim..(r + 1) * dim];
                    for (s, slot) in row.iter_mut().enumerate() {
                        lazy_acc(slot, c * g.raw(s, b as usize), p);
                    }
                }
            }
            for (rs, list) in self.mult_pairs.iter().enumerate() {
                let c = t[rs] % p;
                if c == 0 {
                    continue;
                }
                for &(k, w) in list {
                    let slot = out.raw_mut(k as usize, j);
                    lazy_acc(slot, c * w, p);
                }
            }
        }
        for r in 0..dim {
            for c in 0..dim {
                let slot = out.raw_mut(r, c);
                *slot %= p;
            }
        }
        out
    }

    /// Fast path for F * id, the step of the Sweedler power iteration.
    fn convolve_with_identity(&self, f: &MatrixFp) -> MatrixFp {
        let dim = self.dim;
        let p = self.modulus.get();
        let mut out = MatrixFp::zeros(dim, dim, self.modulus);
        let mut t = vec![0u64; dim * dim];
        for j in 0..dim {
            t.fill(0);
            // T[r][b] = Σ_a D[j][a][b] F[r][a]
            for &(a, b, v) in &self.comult_rows[j] {
                let b = b as usize;
                for r in 0..dim {
                    let fa = f.raw(r, a as usize);
                    if fa != 0 {
                        lazy_acc(&mut t[r * dim + b], v * fa, p);
                    }
                }
            }
            for (rb, list) in self.mult_pairs.iter().enumerate() {
                let c = t[rb] % p;
                if c == 0 {
                    continue;
                }
                for &(k, w) in list {
                    let slot = out.raw_mut(k as usize, j);
                    lazy_acc(slot, c * w, p);
                }
            }
        }
        for r in 0..dim {
            for c in 0..dim {
                let slot = out.raw_mut(r, c);
                *slot %= p;
            }
        }
        out
    }

    /// Matrix of the n-th Sweedler power operator P_n, with P_0 = uε and
    /// P_{k+1} = P_k * id.
    pub fn sweedler_power_operator(&self, n: usize) -> MatrixFp {
        let mut it = self.sweedler_powers();
        for _ in 0..n {
            it.advance();
        }
        it.current().clone()
    }

    /// Stateful iterator over P_0, P_1, P_2, ... advancing one convolution
    /// per step; computing indicators for all n ≤ N costs N convolutions
    /// total.
    pub fn sweedler_powers(&self) -> SweedlerPowers<'_> {
        SweedlerPowers {
            algebra: self,
            n: 0,
            current: self.uepsilon_operator(),
        }
    }

    /// Reference implementation of P_n as m^(n) ∘ Δ^(n): the n-fold
    /// coproduct is materialized in dim^n dimensions and then multiplied
    /// out left to right. Exponential in n; kept as an independent
    /// cross-check for the convolution-power path on small cases.
    pub fn sweedler_power_direct(&self, n: usize) -> MatrixFp {
        let mut out = MatrixFp::zeros(self.dim, self.dim, self.modulus);
        for j in 0..self.dim {
            let col = self.sweedler_power_direct_element(&self.basis_element(j), n);
            for r in 0..self.dim {
                *out.raw_mut(r, j) = col.coeffs().as_slice()[r];
            }
        }
        out
    }

    /// Direct n-th Sweedler power of a single element.
    pub fn sweedler_power_direct_element(&self, h: &AlgebraElement, n: usize) -> AlgebraElement {
        self.check_element(h);
        let p = self.modulus.get();
        if n == 0 {
            return self.unit_element().scale(self.counit_of(h));
        }
        let dim = self.dim;
        let size = dim
            .checked_pow(n as u32)
            .filter(|&s| s <= 1 << 24)
            .expect("direct Sweedler power is a small-case oracle; dim^n too large");
        let _ = size;
        // Δ^(n): expand the first tensor leg n-1 times.
        let mut legs = 1usize;
        let mut cur = h.coeffs().as_slice().to_vec();
        for _ in 1..n {
            let stride = dim.pow((legs - 1) as u32);
            let mut next = vec![0u64; dim.pow((legs + 1) as u32)];
            for (flat, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let i1 = flat / stride;
                let rest = flat % stride;
                for &(a, b, v) in &self.comult_rows[i1] {
                    let idx = (a as usize * dim + b as usize) * stride + rest;
                    lazy_acc(&mut next[idx], c * v, p);
                }
            }
            for v in &mut next {
                *v %= p;
            }
            cur = next;
            legs += 1;
        }
        // m^(n): contract the two leading legs until one remains.
        while legs > 1 {
            let stride = dim.pow((legs - 2) as u32);
            let mut next = vec![0u64; dim.pow((legs - 1) as u32)];
            for (flat, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let i1 = flat / (stride * dim);
                let i2 = (flat / stride) % dim;
                let rest = flat % stride;
                for &(k, w) in &self.mult_pairs[i1 * dim + i2] {
                    let term = (c * w) % p;
                    lazy_acc(&mut next[k as usize * stride + rest], term, p);
                }
            }
            for v in &mut next {
                *v %= p;
            }
            cur = next;
            legs -= 1;
        }
        self.element_from_raw(cur.into_iter().map(|v| v % p).collect())
    }
}

/// Iterator over the Sweedler power operators of one algebra.
pub struct SweedlerPowers<'a> {
    algebra: &'a HopfAlgebra,
    n: usize,
    current: MatrixFp,
}

impl SweedlerPowers<'_> {
    /// Index n of the operator currently held (starts at 0).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The operator P_n.
    pub fn current(&self) -> &MatrixFp {
        &self.current
    }

    /// Step to P_{n+1}.
    pub fn advance(&mut self) {
        self.current = self.algebra.convolve_with_identity(&self.current);
        self.n += 1;
    }
}

/// Componentwise product on flattened tensor squares, against a given
/// multiplication table. Standalone so builders can power coproducts
/// before the full algebra object exists.
pub(crate) fn tensor_square_product(
    dim: usize,
    modulus: PrimeModulus,
    mult_pairs: &[Vec<(u32, u64)>],
    s: &[u64],
    t: &[u64],
) -> Vec<u64> {
    let p = modulus.get();
    let mut out = vec![0u64; dim * dim];
    for (st, &vs) in s.iter().enumerate() {
        if vs == 0 {
            continue;
        }
        let (a, b) = (st / dim, st % dim);
        for (tt, &vt) in t.iter().enumerate() {
            if vt == 0 {
                continue;
            }
            let (c, d) = (tt / dim, tt % dim);
            let coeff = (vs * vt) % p;
            for &(k1, w1) in &mult_pairs[a * dim + c] {
                let u = (coeff * w1) % p;
                for &(k2, w2) in &mult_pairs[b * dim + d] {
                    lazy_acc(&mut out[k1 as usize * dim + k2 as usize], u * w2, p);
                }
            }
        }
    }
    for v in &mut out {
        *v %= p;
    }
    out
}

/// Solve for the antipode: the convolution inverse of the identity map.
///
/// The Krylov sequence of "convolve with id" applied to uε is exactly the
/// Sweedler power sequence P_0, P_1, ..., so the minimal polynomial of the
/// identity in the convolution algebra is found by the first linear
/// dependence among those operators (incremental elimination, exact and
/// deterministic). A nonzero constant term c_0 yields
/// S = -c_0^{-1} (c_1 P_0 + c_2 P_1 + ... + c_m P_{m-1}); a zero constant
/// term means the identity is a zero divisor and no antipode exists.
///
/// Requires the bialgebra axioms to hold for the input tensors.
pub fn derive_antipode(
    mult: &Tensor3,
    unit: &VectorFp,
    comult: &Tensor3,
    counit: &VectorFp,
) -> Result<MatrixFp, Error> {
    let dim = mult.dim();
    let modulus = mult.modulus();
    let mult_pairs = build_mult_pairs(mult);
    let comult_rows = build_comult_rows(comult);
    let data = antipode_from_tables(
        dim,
        modulus,
        &mult_pairs,
        &comult_rows,
        unit.as_slice(),
        counit.as_slice(),
    )?;
    Ok(MatrixFp::from_raw(dim, dim, data, modulus))
}

fn step_identity_raw(
    dim: usize,
    p: u64,
    mult_pairs: &[Vec<(u32, u64)>],
    comult_rows: &[Vec<(u32, u32, u64)>],
    f: &[u64],
) -> Vec<u64> {
    let mut out = vec![0u64; dim * dim];
    let mut t = vec![0u64; dim * dim];
    for j in 0..dim {
        t.fill(0);
        for &(a, b, v) in &comult_rows[j] {
            let b = b as usize;
            for r in 0..dim {
                let fa = f[r * dim + a as usize];
                if fa != 0 {
                    lazy_acc(&mut t[r * dim + b], v * fa, p);
                }
            }
        }
        for (rb, list) in mult_pairs.iter().enumerate() {
            let c = t[rb] % p;
            if c == 0 {
                continue;
            }
            for &(k, w) in list {
                lazy_acc(&mut out[k as usize * dim + j], c * w, p);
            }
        }
    }
    for v in &mut out {
        *v %= p;
    }
    out
}

fn antipode_from_tables(
    dim: usize,
    modulus: PrimeModulus,
    mult_pairs: &[Vec<(u32, u64)>],
    comult_rows: &[Vec<(u32, u32, u64)>],
    unit: &[u64],
    counit: &[u64],
) -> Result<Vec<u64>, Error> {
    let p = modulus.get();
    let n2 = dim * dim;

    let mut uepsilon = vec![0u64; n2];
    for r in 0..dim {
        for j in 0..dim {
            uepsilon[r * dim + j] = (unit[r] * counit[j]) % p;
        }
    }

    // Krylov vectors P_0 = uε, P_{k+1} = P_k * id, with a fully reduced
    // elimination basis; combo rows express each basis row in terms of the
    // original P_i.
    let mut powers: Vec<Vec<u64>> = vec![uepsilon];
    let mut rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new(); // (pivot, vec, combo)

    for k in 0..=n2 {
        let mut v = powers[k].clone();
        let mut combo = vec![0u64; k + 1];
        combo[k] = 1 % p;
        for (pivot, rvec, rcombo) in &rows {
            let c = v[*pivot] % p;
            if c == 0 {
                continue;
            }
            let neg = modulus.neg_raw(c);
            for (slot, &rv) in v.iter_mut().zip(rvec) {
                *slot = (*slot + neg * rv) % p;
            }
            for (slot, &rv) in combo.iter_mut().zip(rcombo) {
                *slot = (*slot + neg * rv) % p;
            }
        }
        for slot in &mut v {
            *slot %= p;
        }

        match v.iter().position(|&x| x != 0) {
            None => {
                // Dependence: Σ combo[i] P_i = 0 with combo[k] = 1.
                let c0 = combo[0] % p;
                if c0 == 0 {
                    return Err(Error::NoAntipode);
                }
                let scale = modulus.neg_raw(modulus.inv_raw(c0));
                let mut s = vec![0u64; n2];
                for (i, &ci) in combo.iter().enumerate().skip(1) {
                    if ci % p == 0 {
                        continue;
                    }
                    let c = modulus.mul_raw(scale, ci % p);
                    for (slot, &pv) in s.iter_mut().zip(&powers[i - 1]) {
                        *slot = (*slot + c * pv) % p;
                    }
                }
                // The axioms are rechecked downstream; still confirm the
                // defining property here so standalone callers get a
                // correct matrix or a loud failure.
                let left = step_identity_raw(dim, p, mult_pairs, comult_rows, &s);
                assert_eq!(
                    left, powers[0],
                    "derived antipode fails S * id = uε (non-bialgebra input?)"
                );
                return Ok(s);
            }
            Some(pivot) => {
                let inv = modulus.inv_raw(v[pivot]);
                for slot in &mut v {
                    *slot = modulus.mul_raw(*slot, inv);
                }
                for slot in &mut combo {
                    *slot = modulus.mul_raw(*slot, inv);
                }
                // Back-eliminate the new pivot from the stored rows so a
                // single forward pass fully reduces future vectors.
                for (_, rvec, rcombo) in &mut rows {
                    let c = rvec[pivot] % p;
                    if c == 0 {
                        continue;
                    }
                    let neg = modulus.neg_raw(c);
                    for (slot, &nv) in rvec.iter_mut().zip(&v) {
                        *slot = (*slot + neg * nv) % p;
                    }
                    if rcombo.len() < combo.len() {
                        rcombo.resize(combo.len(), 0);
                    }
                    for (slot, &nv) in rcombo.iter_mut().zip(&combo) {
                        *slot = (*slot + neg * nv) % p;
                    }
                }
                rows.push((pivot, v, combo));
                let next = step_identity_raw(dim, p, mult_pairs, comult_rows, &powers[k]);
                powers.push(next);
            }
        }
    }
    Err(Error::InvariantViolation(
        "no linear dependence among dim^2 + 1 convolution powers".to_string(),
    ))
}
