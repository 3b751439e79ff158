//! Left/right integral spaces of a Hopf algebra and of its dual, and the
//! normalized pair (λ, Λ) with λ(Λ) = 1 that feeds the integral-formula
//! indicator computation.
//!
//! A left integral is an element Λ with hΛ = ε(h)Λ for all h; a right
//! integral satisfies Λh = ε(h)Λ. On the dual side the defining property
//! translates, without materializing the dual algebra, into the covector
//! criterion Σ h_(1) λ(h_(2)) = λ(h)·1 (left) or Σ λ(h_(1)) h_(2) = λ(h)·1
//! (right). Both integral spaces are one-dimensional for every verified
//! finite-dimensional Hopf algebra; a different dimension here means the
//! algebra data is corrupted, not a user error.
//!
//! The direct covector system is authoritative; the dualize-then-primal
//! route is computed as a permanent cross-check, because a silent tensor
//! transposition bug is the most likely failure mode in this kind of code.

use crate::error::Error;
use crate::hopf::{AlgebraElement, DualElement, HopfAlgebra};
use crate::linalg::{MatrixFp, VectorFp};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Location {
    Primal,
    Dual,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Primal => write!(f, "primal"),
            Location::Dual => write!(f, "dual"),
        }
    }
}

/// A computed integral space: always dimension one, carrying the
/// deterministic representative (first nonzero coordinate scaled to 1).
#[derive(Clone, Debug)]
pub struct IntegralSpace {
    pub side: Side,
    pub location: Location,
    pub basis: Vec<VectorFp>,
}

impl IntegralSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn representative(&self) -> &VectorFp {
        &self.basis[0]
    }
}

/// Joint-kernel solve of {(L_{e_i} - ε(e_i)·I) v = 0} over a
/// multiplication table given as an entry accessor, so the same code
/// serves the algebra itself and the transposed (dual) structure.
fn integral_representative(
    dim: usize,
    modulus: crate::field::PrimeModulus,
    mult_entry: &dyn Fn(usize, usize, usize) -> u64,
    counit: &[u64],
    side: Side,
) -> Result<VectorFp, Error> {
    let mut stacked = MatrixFp::zeros(dim * dim, dim, modulus);
    for i in 0..dim {
        let eps = modulus.element(counit[i]);
        for k in 0..dim {
            for j in 0..dim {
                // L_i[k][j] = M[i][j][k]; R_i[k][j] = M[j][i][k]
                let raw = match side {
                    Side::Left => mult_entry(i, j, k),
                    Side::Right => mult_entry(j, i, k),
                };
                let mut v = modulus.element(raw);
                if k == j {
                    v = v - eps;
                }
                stacked.set(i * dim + k, j, v);
            }
        }
    }
    let basis = stacked.nullspace();
    if basis.len() != 1 {
        return Err(Error::IntegralSpaceDimension { found: basis.len() });
    }
    Ok(basis[0].normalized_leading())
}

/// The space of left (right) integrals in H, as the joint kernel of the
/// operators L_{e_i} - ε(e_i)·I (right multiplications for side = right).
pub fn integral_space(h: &HopfAlgebra, side: Side) -> Result<IntegralSpace, Error> {
    assert!(h.is_verified(), "integral_space requires a verified algebra");
    let mult = h.mult_tensor();
    let representative = integral_representative(
        h.dim(),
        h.modulus(),
        &|i, j, k| mult.get(i, j, k),
        h.counit_vector().as_slice(),
        side,
    )?;
    Ok(IntegralSpace {
        side,
        location: Location::Primal,
        basis: vec![representative],
    })
}

/// The space of left (right) integrals of the dual, computed directly on
/// covectors and cross-checked against `integral_space(h.dualize(), side)`.
pub fn dual_integral_space(h: &HopfAlgebra, side: Side) -> Result<IntegralSpace, Error> {
    assert!(h.is_verified(), "dual_integral_space requires a verified algebra");
    let dim = h.dim();
    let modulus = h.modulus();
    let comult = h.comult_tensor();
    let unit = h.unit_vector();

    // Left:  rows (j,a):  Σ_b D[j][a][b] λ_b - u_a λ_j = 0
    // Right: rows (j,b):  Σ_a D[j][a][b] λ_a - u_b λ_j = 0
    let mut system = MatrixFp::zeros(dim * dim, dim, modulus);
    for j in 0..dim {
        for a in 0..dim {
            for b in 0..dim {
                let d = comult.get(j, a, b);
                if d == 0 {
                    continue;
                }
                let (row, col) = match side {
                    Side::Left => (j * dim + a, b),
                    Side::Right => (j * dim + b, a),
                };
                let v = system.get(row, col) + modulus.element(d);
                system.set(row, col, v);
            }
        }
        // the -u λ_j term: row (j,t) gets -u_t at column j on either side
        for t in 0..dim {
            let row = j * dim + t;
            let v = system.get(row, j) - unit.get(t);
            system.set(row, j, v);
        }
    }
    let basis = system.nullspace();
    if basis.len() != 1 {
        return Err(Error::IntegralSpaceDimension { found: basis.len() });
    }
    let representative = basis[0].normalized_leading();

    // Permanent cross-check against the dual-structure route: the dual's
    // multiplication table is the transposed comultiplication tensor
    // (M*[a][b][i] = D[i][a][b]) and its counit is the unit.
    let via_dual = integral_representative(
        dim,
        modulus,
        &|a, b, i| comult.get(i, a, b),
        unit.as_slice(),
        side,
    )?;
    if via_dual != representative {
        return Err(Error::InvariantViolation(format!(
            "dual integral mismatch ({side}): direct covector system and transposed structure disagree"
        )));
    }

    Ok(IntegralSpace {
        side,
        location: Location::Dual,
        basis: vec![representative],
    })
}

/// A pair of integrals of the same side with λ(Λ) = 1.
#[derive(Clone, Debug)]
pub struct NormalizedIntegralPair {
    pub dual_integral: DualElement,
    pub integral: AlgebraElement,
    pub side: Side,
}

/// Take the deterministic representatives Λ and λ and rescale λ so that
/// λ(Λ) = 1. Fails with `UnnormalizablePair` when the pairing is zero, in
/// which case the integral indicator formula is inapplicable on this side.
pub fn normalized_pair(h: &HopfAlgebra, side: Side) -> Result<NormalizedIntegralPair, Error> {
    let primal = integral_space(h, side)?;
    let dual = dual_integral_space(h, side)?;
    let integral = AlgebraElement::new(primal.representative().clone());
    let lambda = DualElement::new(dual.representative().clone());
    let pairing = h.apply_dual(&lambda, &integral);
    if pairing.is_zero() {
        return Err(Error::UnnormalizablePair);
    }
    Ok(NormalizedIntegralPair {
        dual_integral: lambda.scale(pairing.inv()),
        integral,
        side,
    })
}
