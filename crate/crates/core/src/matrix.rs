//! Matrix arithmetic over a finite involutive ring.
//!
//! The involution extends entrywise-with-transpose: `(B*)_{ij} = (B_{ji})*`,
//! an anti-automorphism of the matrix ring.  Two constrained shapes carry the
//! group structure downstream:
//!
//! - [`HermitianMatrix`]: `S* = S` (diagonal entries in the fixed set), the
//!   additive part of the group;
//! - [`UnitriangularMatrix`]: upper triangular with unit diagonal, the
//!   multiplicative part, acting on hermitian matrices by `S ↦ Y S Y*`.
//!
//! Both wrappers validate on construction and preserve their invariants
//! through the exposed operations, so downstream code never re-checks shape.

use std::fmt;

use thiserror::Error;

use crate::ring::{format_element, InvolutiveRing, RingElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not hermitian at ({i}, {j})")]
    NotHermitian { i: usize, j: usize },
    #[error("matrix is not unitriangular at ({i}, {j})")]
    NotUnitriangular { i: usize, j: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
}

/// Dense row-major n×n matrix of ring elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<RingElement>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            entries: vec![RingElement::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, RingElement::ONE);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> RingElement {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, ring: &InvolutiveRing, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&x, &y)| ring.add(x, y))
                .collect(),
        }
    }

    pub fn neg(&self, ring: &InvolutiveRing) -> Self {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&x| ring.neg(x)).collect(),
        }
    }

    pub fn mul(&self, ring: &InvolutiveRing, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = other.get(k, j);
                    if y.is_zero() {
                        continue;
                    }
                    out.set(i, j, ring.add(out.get(i, j), ring.mul(x, y)));
                }
            }
        }
        out
    }

    /// Conjugate transpose `M*`: `(M*)_{ij} = (M_{ji})*`.
    pub fn involve(&self, ring: &InvolutiveRing) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, ring.involve(self.get(j, i)));
            }
        }
        out
    }

    pub fn is_hermitian(&self, ring: &InvolutiveRing) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.get(i, j) == ring.involve(self.get(j, i))))
    }

    pub fn is_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            self.get(i, i) == RingElement::ONE
                && (0..i).all(|j| self.get(i, j).is_zero())
        })
    }

    pub fn render(&self, ring: &InvolutiveRing) -> String {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| format_element(ring, self.get(i, j)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Coordinates only; ring-aware rendering goes through `render`.
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                let e = self.get(i, j);
                if e.gamma_coord() == 0 {
                    write!(f, "{}", e.base_coord())?;
                } else {
                    write!(f, "{}+{}g", e.base_coord(), e.gamma_coord())?;
                }
            }
        }
        Ok(())
    }
}

/// A hermitian matrix `S = S*`.  Construction is checked; arithmetic keeps
/// the invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermitianMatrix(SquareMatrix);

impl HermitianMatrix {
    pub fn new(ring: &InvolutiveRing, m: SquareMatrix) -> Result<Self, MatrixError> {
        for i in 0..m.n() {
            for j in i..m.n() {
                if m.get(i, j) != ring.involve(m.get(j, i)) {
                    return Err(MatrixError::NotHermitian { i, j });
                }
            }
        }
        Ok(HermitianMatrix(m))
    }

    pub fn zero(n: usize) -> Self {
        HermitianMatrix(SquareMatrix::zeros(n))
    }

    /// Set the mirrored pair `(i, j) = v`, `(j, i) = v*`.  For `i = j` the
    /// entry must be fixed by the involution.
    pub fn set_pair(
        &mut self,
        ring: &InvolutiveRing,
        i: usize,
        j: usize,
        v: RingElement,
    ) -> Result<(), MatrixError> {
        if i == j && !ring.is_fixed(v) {
            return Err(MatrixError::NotHermitian { i, j });
        }
        self.0.set(i, j, v);
        self.0.set(j, i, ring.involve(v));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, ring: &InvolutiveRing, other: &Self) -> Self {
        HermitianMatrix(self.0.add(ring, &other.0))
    }

    pub fn neg(&self, ring: &InvolutiveRing) -> Self {
        HermitianMatrix(self.0.neg(ring))
    }

    /// The congruence action `S ↦ Y S Y*`, which preserves hermitian shape.
    pub fn congruence(&self, ring: &InvolutiveRing, y: &UnitriangularMatrix) -> Self {
        let m = y.as_matrix().mul(ring, &self.0).mul(ring, &y.as_matrix().involve(ring));
        debug_assert!(m.is_hermitian(ring));
        HermitianMatrix(m)
    }
}

/// An upper unitriangular matrix (unit diagonal, zeros below).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitriangularMatrix(SquareMatrix);

impl UnitriangularMatrix {
    pub fn new(m: SquareMatrix) -> Result<Self, MatrixError> {
        for i in 0..m.n() {
            if m.get(i, i) != RingElement::ONE {
                return Err(MatrixError::NotUnitriangular { i, j: i });
            }
            for j in 0..i {
                if !m.get(i, j).is_zero() {
                    return Err(MatrixError::NotUnitriangular { i, j });
                }
            }
        }
        Ok(UnitriangularMatrix(m))
    }

    pub fn identity(n: usize) -> Self {
        UnitriangularMatrix(SquareMatrix::identity(n))
    }

    /// The transvection `1 + a·e_{kl}`, `k < l` (0-based).
    pub fn transvection(n: usize, k: usize, l: usize, a: RingElement) -> Self {
        assert!(k < l && l < n, "transvection needs k < l < n");
        let mut m = SquareMatrix::identity(n);
        m.set(k, l, a);
        UnitriangularMatrix(m)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        self.0.get(i, j)
    }

    /// Set an above-diagonal entry.
    pub fn set_entry(&mut self, i: usize, j: usize, v: RingElement) {
        assert!(i < j, "only above-diagonal entries are free");
        self.0.set(i, j, v);
    }

    pub fn as_matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        let n = self.0.n();
        (0..n).all(|i| ((i + 1)..n).all(|j| self.0.get(i, j).is_zero()))
    }

    pub fn mul(&self, ring: &InvolutiveRing, other: &Self) -> Self {
        UnitriangularMatrix(self.0.mul(ring, &other.0))
    }

    /// Inverse via the nilpotent series: `(1 + Z)⁻¹ = Σ_k (−Z)^k`, which
    /// terminates because `Z` is strictly upper triangular.
    pub fn inverse(&self, ring: &InvolutiveRing) -> Self {
        let n = self.0.n();
        let mut z = self.0.clone();
        for i in 0..n {
            z.set(i, i, RingElement::ZERO);
        }
        let minus_z = z.neg(ring);
        let mut out = SquareMatrix::identity(n);
        let mut power = SquareMatrix::identity(n);
        for _ in 1..n {
            power = power.mul(ring, &minus_z);
            out = out.add(ring, &power);
        }
        debug_assert!(out.is_unitriangular());
        UnitriangularMatrix(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_matrices(ring: &InvolutiveRing, n: usize) -> Vec<SquareMatrix> {
        let size = ring.size();
        let total = size.pow((n * n) as u32);
        (0..total)
            .map(|mut code| {
                let mut m = SquareMatrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        m.set(i, j, ring.element_at(code % size));
                        code /= size;
                    }
                }
                m
            })
            .collect()
    }

    #[test]
    fn conjugate_transpose_is_an_antiautomorphism_exhaustive_z3() {
        let ring = InvolutiveRing::residue(3).unwrap();
        let mats = all_matrices(&ring, 2);
        for m in &mats {
            assert_eq!(&m.involve(&ring).involve(&ring), m);
            for n_ in &mats {
                assert_eq!(
                    m.mul(&ring, n_).involve(&ring),
                    n_.involve(&ring).mul(&ring, &m.involve(&ring)),
                    "(MN)* = N*M* fails"
                );
            }
        }
    }

    #[test]
    fn conjugate_transpose_antiautomorphism_sampled_f9() {
        let ring = InvolutiveRing::quadratic_extension(3, 0, 1).unwrap();
        // Deterministic stride sample of 3×3 matrix pairs.
        let size = ring.size();
        let total = size.pow(9);
        let pick = |seed: u64| {
            let mut code = (seed.wrapping_mul(0x9e3779b97f4a7c15)) % total;
            let mut m = SquareMatrix::zeros(3);
            for i in 0..3 {
                for j in 0..3 {
                    m.set(i, j, ring.element_at(code % size));
                    code /= size;
                }
            }
            m
        };
        for s in 0..200u64 {
            let m = pick(2 * s);
            let n_ = pick(2 * s + 1);
            assert_eq!(
                m.mul(&ring, &n_).involve(&ring),
                n_.involve(&ring).mul(&ring, &m.involve(&ring))
            );
        }
    }

    #[test]
    fn hermitian_construction_checks_shape() {
        let ring = InvolutiveRing::quadratic_extension(3, 0, 1).unwrap();
        let g = ring.gamma().unwrap();
        // Diagonal γ is not fixed, so this is not hermitian.
        let mut m = SquareMatrix::zeros(2);
        m.set(0, 0, g);
        assert!(HermitianMatrix::new(&ring, m).is_err());
        // Off-diagonal pair (γ, γ*) is fine.
        let mut s = HermitianMatrix::zero(2);
        s.set_pair(&ring, 0, 1, g).unwrap();
        assert_eq!(s.entry(1, 0), ring.involve(g));
        assert!(s.as_matrix().is_hermitian(&ring));
        // Diagonal entries must be fixed.
        assert!(s.set_pair(&ring, 0, 0, g).is_err());
        assert!(s.set_pair(&ring, 0, 0, ring.from_int(2)).is_ok());
    }

    #[test]
    fn congruence_preserves_hermitian_shape_exhaustive() {
        // All hermitian S and unitriangular Y at n = 2 over the order-9 field.
        let ring = InvolutiveRing::quadratic_extension(3, 0, 1).unwrap();
        let mut hermitians = Vec::new();
        for r1 in ring.fixed_set() {
            for r2 in ring.fixed_set() {
                for x in ring.elements() {
                    let mut s = HermitianMatrix::zero(2);
                    s.set_pair(&ring, 0, 0, *r1).unwrap();
                    s.set_pair(&ring, 1, 1, *r2).unwrap();
                    s.set_pair(&ring, 0, 1, x).unwrap();
                    hermitians.push(s);
                }
            }
        }
        assert_eq!(hermitians.len(), 81, "|H_2(A)| = |R|²·|A| = 3·3·9");
        for y_entry in ring.elements() {
            let y = UnitriangularMatrix::transvection(2, 0, 1, y_entry);
            for s in &hermitians {
                assert!(s.congruence(&ring, &y).as_matrix().is_hermitian(&ring));
            }
        }
    }

    #[test]
    fn unitriangular_inverse_and_product() {
        let ring = InvolutiveRing::residue(9).unwrap();
        // Exhaustive over n = 3 unitriangular matrices would be 9³ = 729; do all.
        let mut all = Vec::new();
        for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    let mut y = UnitriangularMatrix::identity(3);
                    y.set_entry(0, 1, a);
                    y.set_entry(0, 2, b);
                    y.set_entry(1, 2, c);
                    all.push(y);
                }
            }
        }
        for y in &all {
            let inv = y.inverse(&ring);
            assert!(y.mul(&ring, &inv).is_identity());
            assert!(inv.mul(&ring, y).is_identity());
        }
        // Products stay unitriangular (spot the closure on a few pairs).
        for (i, y) in all.iter().enumerate().step_by(97) {
            for z in all.iter().skip(i % 13).step_by(101) {
                assert!(y.mul(&ring, z).as_matrix().is_unitriangular());
            }
        }
    }
}
