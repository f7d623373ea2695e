//! The unipotent group `P = H_n(A) ⋊ U_n(A)` over a finite involutive ring.
//!
//! Elements are pairs `(S, Y)` with `S` hermitian (`S* = S`) and `Y` upper
//! unitriangular, multiplied by
//!
//! ```text
//! (S₁, Y₁)(S₂, Y₂) = (S₁ + Y₁ S₂ Y₁*, Y₁ Y₂),
//! (S, Y)⁻¹        = (−Y⁻¹ S (Y⁻¹)*, Y⁻¹).
//! ```
//!
//! `P` embeds into `2n × 2n` matrices preserving the hermitian form
//! `h(w, w') = Σ_k (w_k)* w'_{n+k} − (w_{n+k})* w'_k` on the free module with
//! basis `u₁..u_n, v₁..v_n`, via `(S, Y) ↦ [[Y, S(Y⁻¹)*], [0, (Y⁻¹)*]]`.
//!
//! Every subgroup the character theory needs is a [`Shape`]: a pair of a
//! *hermitian level* `s` (entries of `S` with both coordinates ≥ s vanish)
//! and a set of *free rows* of `Y` (all other rows equal the identity row).
//! Both constraints are preserved by the group law for **every** choice of
//! level and row set — congruence by any unitriangular matrix keeps the
//! leading-level support, and pinned rows stay pinned under products and
//! inverses — so membership, enumeration, mixed-radix indexing, generators,
//! transversals, and coset keys are implemented once and shared by the whole
//! lattice (`C_i`, `L_j`, `N_{i,j}`, vector stabilizers, `M_D`, row groups).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::matrix::{HermitianMatrix, SquareMatrix, UnitriangularMatrix};
use crate::ring::{InvolutiveRing, RingElement};

/// Default bound on the order of a group we are willing to enumerate.
pub const DEFAULT_ORDER_CAP: u128 = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    OrderExceedsCap { order: u128, cap: u128 },
    #[error("rank must be between 1 and 31, got {n}")]
    BadRank { n: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("level {level} out of range 0..={n}")]
    LevelOutOfRange { level: usize, n: usize },
    #[error("matrix dimension {got} does not match the group rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the first subgroup is not contained in the second")]
    NotNested,
}

// ---------------------------------------------------------------------------
// Shapes: the unified subgroup description
// ---------------------------------------------------------------------------

/// A subgroup of `P` cut out by a hermitian level and a set of free rows:
/// `(S, Y)` belongs to the shape iff `S_{kl} = 0` whenever both `k, l ≥
/// s_level` (0-based) and every row of `Y` outside `free_rows` equals the
/// corresponding identity row.
///
/// Stored canonically: bits for rows with no strictly-upper entries (the last
/// row) are cleared, so shape equality is subgroup equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    n: usize,
    s_level: usize,
    free_rows: u32,
}

impl Shape {
    /// Rows that actually carry strictly-upper entries: `0..n-1`.
    fn row_mask(n: usize) -> u32 {
        if n <= 1 {
            0
        } else {
            (1u32 << (n - 1)) - 1
        }
    }

    pub fn new(n: usize, s_level: usize, free_rows: u32) -> Self {
        assert!(s_level <= n, "hermitian level at most the rank");
        Shape {
            n,
            s_level,
            free_rows: free_rows & Self::row_mask(n),
        }
    }

    pub fn s_level(&self) -> usize {
        self.s_level
    }

    pub fn free_rows(&self) -> u32 {
        self.free_rows
    }

    pub fn row_is_free(&self, k: usize) -> bool {
        k < self.n && (self.free_rows >> k) & 1 == 1
    }

    /// Componentwise containment — equivalent to containment of the
    /// subgroups the shapes describe.
    pub fn contains_shape(&self, other: &Shape) -> bool {
        self.n == other.n
            && other.s_level <= self.s_level
            && other.free_rows & !self.free_rows == 0
    }

    /// The shape of the intersection of the two subgroups.
    pub fn intersect(&self, other: &Shape) -> Shape {
        assert_eq!(self.n, other.n);
        Shape {
            n: self.n,
            s_level: self.s_level.min(other.s_level),
            free_rows: self.free_rows & other.free_rows,
        }
    }

    /// The shape of the subgroup generated by the two subgroups (their
    /// generators combine coordinatewise, so the join is again a shape).
    pub fn join(&self, other: &Shape) -> Shape {
        assert_eq!(self.n, other.n);
        Shape {
            n: self.n,
            s_level: self.s_level.max(other.s_level),
            free_rows: self.free_rows | other.free_rows,
        }
    }
}

// ---------------------------------------------------------------------------
// Named subgroups
// ---------------------------------------------------------------------------

/// The named subgroups of `P` used throughout, all 1-based in the
/// distinguished basis.  Each is a [`Shape`]; the enum records intent and
/// provides stable labels for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// The whole group `P`.
    Full,
    /// `C = {(S, 1)}`: the hermitian normal subgroup.
    Hermitian,
    /// `C_i = {(S, 1) : S supported in the leading i rows and columns}`,
    /// `0 ≤ i ≤ n`.
    HermitianLevel(usize),
    /// `L_j = {(0, Y) : only the first j rows of Y are free}`, `0 ≤ j ≤ n`.
    UnipotentRows(usize),
    /// `N_{i,j} = C_i ⋊ L_j`: hermitian level `i`, first `j` rows free.
    Pattern { s_level: usize, row_count: usize },
    /// `L_{v_i} = {(0, Y) : Y v_i = v_i}`, equivalently row `i` of `Y` is the
    /// identity row (1-based `i`).
    VectorStabilizer(usize),
    /// `C ⋊ L_{v_i}`: full hermitian part, row `i` of `Y` pinned.
    HermitianVectorStabilizer(usize),
    /// `L_D`: all rows in `D` pinned (1-based indices).
    SetStabilizer(BTreeSet<usize>),
    /// `M_D = C ⋊ L_D`.
    HermitianSetStabilizer(BTreeSet<usize>),
    /// `B_i`: only row `i` of `Y` free and no hermitian part — the group of
    /// a single row of root subgroups.
    SingleRow(usize),
}

impl SubgroupSpec {
    /// Resolve to a shape over rank `n`, validating all indices.
    pub fn shape(&self, n: usize) -> Result<Shape, GroupError> {
        let all = !0u32;
        let level = |i: usize| -> Result<usize, GroupError> {
            if i <= n {
                Ok(i)
            } else {
                Err(GroupError::LevelOutOfRange { level: i, n })
            }
        };
        let row_bit = |i: usize| -> Result<u32, GroupError> {
            if (1..=n).contains(&i) {
                Ok(1u32 << (i - 1))
            } else {
                Err(GroupError::IndexOutOfRange { index: i, n })
            }
        };
        let leading = |j: usize| -> u32 {
            if j == 0 {
                0
            } else {
                (1u32 << j.min(31)) - 1
            }
        };
        Ok(match self {
            SubgroupSpec::Full => Shape::new(n, n, all),
            SubgroupSpec::Hermitian => Shape::new(n, n, 0),
            SubgroupSpec::HermitianLevel(i) => Shape::new(n, level(*i)?, 0),
            SubgroupSpec::UnipotentRows(j) => Shape::new(n, 0, leading(level(*j)?)),
            SubgroupSpec::Pattern { s_level, row_count } => {
                Shape::new(n, level(*s_level)?, leading(level(*row_count)?))
            }
            SubgroupSpec::VectorStabilizer(i) => Shape::new(n, 0, all & !row_bit(*i)?),
            SubgroupSpec::HermitianVectorStabilizer(i) => {
                Shape::new(n, n, all & !row_bit(*i)?)
            }
            SubgroupSpec::SetStabilizer(d) => {
                let mut rows = all;
                for &i in d {
                    rows &= !row_bit(i)?;
                }
                Shape::new(n, 0, rows)
            }
            SubgroupSpec::HermitianSetStabilizer(d) => {
                let mut rows = all;
                for &i in d {
                    rows &= !row_bit(i)?;
                }
                Shape::new(n, n, rows)
            }
            SubgroupSpec::SingleRow(i) => Shape::new(n, 0, row_bit(*i)?),
        })
    }

    /// Stable report label (`P`, `C`, `C_2`, `L_1`, `N_{2,1}`, `L_{v_1}`,
    /// `C:L_{v_1}`, `L_{1,3}`, `M_{1,3}`, `B_2`).
    pub fn label(&self) -> String {
        let set = |d: &BTreeSet<usize>| {
            d.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            SubgroupSpec::Full => "P".into(),
            SubgroupSpec::Hermitian => "C".into(),
            SubgroupSpec::HermitianLevel(i) => format!("C_{i}"),
            SubgroupSpec::UnipotentRows(j) => format!("L_{j}"),
            SubgroupSpec::Pattern { s_level, row_count } => {
                format!("N_{{{s_level},{row_count}}}")
            }
            SubgroupSpec::VectorStabilizer(i) => format!("L_{{v_{i}}}"),
            SubgroupSpec::HermitianVectorStabilizer(i) => format!("C:L_{{v_{i}}}"),
            SubgroupSpec::SetStabilizer(d) => format!("L_{{{}}}", set(d)),
            SubgroupSpec::HermitianSetStabilizer(d) => format!("M_{{{}}}", set(d)),
            SubgroupSpec::SingleRow(i) => format!("B_{i}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Group elements
// ---------------------------------------------------------------------------

/// An element `(S, Y)` of `P` (or of any shape subgroup).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub(crate) s: HermitianMatrix,
    pub(crate) y: UnitriangularMatrix,
}

impl GroupElement {
    pub fn from_parts(s: HermitianMatrix, y: UnitriangularMatrix) -> Self {
        assert_eq!(s.n(), y.n(), "hermitian and unipotent parts share the rank");
        GroupElement { s, y }
    }

    pub fn s_part(&self) -> &HermitianMatrix {
        &self.s
    }

    pub fn y_part(&self) -> &UnitriangularMatrix {
        &self.y
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_zero() && self.y.is_identity()
    }

    pub fn render(&self, ring: &InvolutiveRing) -> String {
        format!(
            "S = {}, Y = {}",
            self.s.as_matrix().render(ring),
            self.y.as_matrix().render(ring)
        )
    }
}

// ---------------------------------------------------------------------------
// Vectors and the hermitian form
// ---------------------------------------------------------------------------

/// A vector in the rank-`2n` module with basis `u₁..u_n, v₁..v_n`
/// (coordinates `0..n` are the `u`-part, `n..2n` the `v`-part).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    coords: Vec<RingElement>,
}

impl ModuleVector {
    pub fn zero(n: usize) -> Self {
        ModuleVector {
            coords: vec![RingElement::ZERO; 2 * n],
        }
    }

    /// The basis vector `u_i`, 1-based.
    pub fn basis_u(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut w = Self::zero(n);
        w.coords[i - 1] = RingElement::ONE;
        w
    }

    /// The basis vector `v_i`, 1-based.
    pub fn basis_v(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut w = Self::zero(n);
        w.coords[n + i - 1] = RingElement::ONE;
        w
    }

    pub fn from_coords(coords: Vec<RingElement>) -> Self {
        assert!(coords.len() % 2 == 0, "module rank is even");
        ModuleVector { coords }
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.coords
    }

    /// Number of hyperbolic pairs `n` (half the module rank).
    pub fn pairs(&self) -> usize {
        self.coords.len() / 2
    }
}

/// The hermitian form `h(w, w') = Σ_k (w_k)* w'_{n+k} − (w_{n+k})* w'_k`.
#[derive(Debug, Clone, Copy)]
pub struct GramForm {
    n: usize,
}

impl GramForm {
    pub fn new(n: usize) -> Self {
        GramForm { n }
    }

    pub fn eval(&self, ring: &InvolutiveRing, w: &ModuleVector, wp: &ModuleVector) -> RingElement {
        assert_eq!(w.pairs(), self.n);
        assert_eq!(wp.pairs(), self.n);
        let n = self.n;
        let mut acc = RingElement::ZERO;
        for k in 0..n {
            let plus = ring.mul(ring.involve(w.coords[k]), wp.coords[n + k]);
            let minus = ring.mul(ring.involve(w.coords[n + k]), wp.coords[k]);
            acc = ring.add(acc, ring.sub(plus, minus));
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Mixed-radix coordinates for shape subgroups
// ---------------------------------------------------------------------------

/// One free coordinate of a shape: a diagonal hermitian entry (ranging over
/// the fixed set), a strictly-upper hermitian entry (with its mirror), or a
/// strictly-upper unipotent entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Coord {
    SDiag(usize),
    SOff(usize, usize),
    Y(usize, usize),
}

/// Mixed-radix enumeration of a set of free coordinates, most significant
/// digit first; index 0 is the identity.
#[derive(Debug, Clone)]
struct CoordSystem {
    n: usize,
    coords: Vec<Coord>,
    radices: Vec<u64>,
    order: u128,
}

impl CoordSystem {
    fn radix_of(ring: &InvolutiveRing, c: Coord) -> u64 {
        match c {
            Coord::SDiag(_) => ring.fixed_set().len() as u64,
            Coord::SOff(_, _) | Coord::Y(_, _) => ring.size(),
        }
    }

    fn from_coords(ring: &InvolutiveRing, n: usize, coords: Vec<Coord>) -> Result<Self, GroupError> {
        let radices: Vec<u64> = coords.iter().map(|&c| Self::radix_of(ring, c)).collect();
        let mut order: u128 = 1;
        for &r in &radices {
            order = order
                .checked_mul(r as u128)
                .ok_or(GroupError::OrderExceedsCap {
                    order: u128::MAX,
                    cap: u128::MAX,
                })?;
        }
        Ok(CoordSystem {
            n,
            coords,
            radices,
            order,
        })
    }

    /// The free coordinates of `shape`: hermitian entries `(k, l)`, `k ≤ l`,
    /// with `k` below the level (row-major), then unipotent entries row by
    /// row over the free rows.
    fn for_shape(ring: &InvolutiveRing, shape: &Shape) -> Result<Self, GroupError> {
        let n = shape.n;
        let mut coords = Vec::new();
        for k in 0..shape.s_level {
            for l in k..n {
                coords.push(if l == k { Coord::SDiag(k) } else { Coord::SOff(k, l) });
            }
        }
        for k in 0..n {
            if shape.row_is_free(k) {
                for l in k + 1..n {
                    coords.push(Coord::Y(k, l));
                }
            }
        }
        Self::from_coords(ring, n, coords)
    }

    /// The coordinates of `amb` that are not coordinates of `sub`
    /// (`sub ⊆ amb` required): the index set of the structural transversal.
    fn complement(ring: &InvolutiveRing, sub: &Shape, amb: &Shape) -> Result<Self, GroupError> {
        debug_assert!(amb.contains_shape(sub));
        let n = amb.n;
        let mut coords = Vec::new();
        for k in sub.s_level..amb.s_level {
            for l in k..n {
                coords.push(if l == k { Coord::SDiag(k) } else { Coord::SOff(k, l) });
            }
        }
        for k in 0..n {
            if amb.row_is_free(k) && !sub.row_is_free(k) {
                for l in k + 1..n {
                    coords.push(Coord::Y(k, l));
                }
            }
        }
        Self::from_coords(ring, n, coords)
    }

    fn order(&self) -> u128 {
        self.order
    }

    fn element_at(&self, ring: &InvolutiveRing, index: u128) -> GroupElement {
        debug_assert!(index < self.order);
        let mut digits = vec![0u64; self.coords.len()];
        let mut rest = index;
        for (slot, &radix) in digits.iter_mut().zip(&self.radices).rev() {
            *slot = (rest % radix as u128) as u64;
            rest /= radix as u128;
        }
        let mut s = HermitianMatrix::zero(self.n);
        let mut y = UnitriangularMatrix::identity(self.n);
        for (&coord, &digit) in self.coords.iter().zip(&digits) {
            match coord {
                Coord::SDiag(k) => {
                    let v = ring.fixed_set()[digit as usize];
                    s.set_pair(ring, k, k, v).expect("fixed-set entries are fixed");
                }
                Coord::SOff(k, l) => {
                    s.set_pair(ring, k, l, ring.element_at(digit))
                        .expect("off-diagonal pairs are unconstrained");
                }
                Coord::Y(k, l) => y.set_entry(k, l, ring.element_at(digit)),
            }
        }
        GroupElement { s, y }
    }

    /// Mixed-radix index of an element, reading its digits off the free
    /// coordinates.  `None` when a diagonal entry falls outside the fixed
    /// set (the element then lies outside every shape over this ring).
    fn index_of(&self, ring: &InvolutiveRing, g: &GroupElement) -> Option<u128> {
        let mut index: u128 = 0;
        for (&coord, &radix) in self.coords.iter().zip(&self.radices) {
            let digit = match coord {
                Coord::SDiag(k) => ring.fixed_index(g.s.entry(k, k))? as u64,
                Coord::SOff(k, l) => ring.element_index(g.s.entry(k, l)),
                Coord::Y(k, l) => ring.element_index(g.y.entry(k, l)),
            };
            index = index * radix as u128 + digit as u128;
        }
        Some(index)
    }
}

// ---------------------------------------------------------------------------
// The ambient group
// ---------------------------------------------------------------------------

/// The group `P = H_n(A) ⋊ U_n(A)` over an involutive ring, with an
/// enumeration cap guarding every exhaustive computation.
#[derive(Debug, Clone)]
pub struct UnipotentGroup {
    ring: InvolutiveRing,
    n: usize,
    order: u128,
}

impl UnipotentGroup {
    pub fn new(ring: InvolutiveRing, n: usize, cap: u128) -> Result<Self, GroupError> {
        if n == 0 || n >= 32 {
            return Err(GroupError::BadRank { n });
        }
        let full = Shape::new(n, n, !0);
        let coords = CoordSystem::for_shape(&ring, &full)?;
        let order = coords.order();
        if order > cap {
            return Err(GroupError::OrderExceedsCap { order, cap });
        }
        Ok(UnipotentGroup { ring, n, order })
    }

    pub fn with_default_cap(ring: InvolutiveRing, n: usize) -> Result<Self, GroupError> {
        Self::new(ring, n, DEFAULT_ORDER_CAP)
    }

    pub fn ring(&self) -> &InvolutiveRing {
        &self.ring
    }

    /// The rank `n` (number of hyperbolic pairs).
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn form(&self) -> GramForm {
        GramForm::new(self.n)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            s: HermitianMatrix::zero(self.n),
            y: UnitriangularMatrix::identity(self.n),
        }
    }

    /// Build an element from parts, checking the dimension.
    pub fn element(
        &self,
        s: HermitianMatrix,
        y: UnitriangularMatrix,
    ) -> Result<GroupElement, GroupError> {
        if s.n() != self.n || y.n() != self.n {
            return Err(GroupError::DimensionMismatch {
                expected: self.n,
                got: if s.n() != self.n { s.n() } else { y.n() },
            });
        }
        Ok(GroupElement { s, y })
    }

    /// `(S₁, Y₁)(S₂, Y₂) = (S₁ + Y₁ S₂ Y₁*, Y₁ Y₂)`.
    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            s: a.s.add(&self.ring, &b.s.congruence(&self.ring, &a.y)),
            y: a.y.mul(&self.ring, &b.y),
        }
    }

    /// `(S, Y)⁻¹ = (−Y⁻¹ S (Y⁻¹)*, Y⁻¹)`.
    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        let y_inv = a.y.inverse(&self.ring);
        GroupElement {
            s: a.s.congruence(&self.ring, &y_inv).neg(&self.ring),
            y: y_inv,
        }
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.multiply(&self.multiply(g, h), &self.inverse(g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let lhs = self.multiply(&self.inverse(a), &self.inverse(b));
        self.multiply(&lhs, &self.multiply(a, b))
    }

    /// The faithful `2n × 2n` matrix model `[[Y, S(Y⁻¹)*], [0, (Y⁻¹)*]]`,
    /// which preserves the hermitian form.
    pub fn embed(&self, g: &GroupElement) -> SquareMatrix {
        let n = self.n;
        let y_inv_star = g.y.inverse(&self.ring).as_matrix().involve(&self.ring);
        let top_right = g.s.as_matrix().mul(&self.ring, &y_inv_star);
        let mut x = SquareMatrix::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                x.set(i, j, g.y.entry(i, j));
                x.set(i, n + j, top_right.get(i, j));
                x.set(n + i, n + j, y_inv_star.get(i, j));
            }
        }
        x
    }

    /// The action of `g` on the module: `w ↦ embed(g) · w`.
    pub fn apply(&self, g: &GroupElement, w: &ModuleVector) -> ModuleVector {
        assert_eq!(w.pairs(), self.n);
        let x = self.embed(g);
        let two_n = 2 * self.n;
        let mut out = vec![RingElement::ZERO; two_n];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = RingElement::ZERO;
            for (j, &wj) in w.coords.iter().enumerate() {
                if !wj.is_zero() {
                    acc = self.ring.add(acc, self.ring.mul(x.get(i, j), wj));
                }
            }
            *slot = acc;
        }
        ModuleVector { coords: out }
    }

    pub fn subgroup(&self, spec: SubgroupSpec) -> Result<Subgroup<'_>, GroupError> {
        let shape = spec.shape(self.n)?;
        let coords = CoordSystem::for_shape(&self.ring, &shape)?;
        Ok(Subgroup {
            group: self,
            spec,
            shape,
            coords,
        })
    }

    pub fn full(&self) -> Subgroup<'_> {
        self.subgroup(SubgroupSpec::Full)
            .expect("the full subgroup always resolves")
    }
}

impl fmt::Display for UnipotentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(n={}) over {}", self.n, self.ring)
    }
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

/// A shape subgroup with its mixed-radix enumeration.
#[derive(Debug, Clone)]
pub struct Subgroup<'g> {
    group: &'g UnipotentGroup,
    spec: SubgroupSpec,
    shape: Shape,
    coords: CoordSystem,
}

impl<'g> Subgroup<'g> {
    pub fn group(&self) -> &'g UnipotentGroup {
        self.group
    }

    pub fn spec(&self) -> &SubgroupSpec {
        &self.spec
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn label(&self) -> String {
        self.spec.label()
    }

    pub fn order(&self) -> u128 {
        self.coords.order()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        let n = self.shape.n;
        if g.s.n() != n || g.y.n() != n {
            return false;
        }
        // Hermitian support above the level vanishes (mirror entries follow
        // by hermitian symmetry), and pinned rows are identity rows.
        for k in self.shape.s_level..n {
            for l in k..n {
                if !g.s.entry(k, l).is_zero() {
                    return false;
                }
            }
        }
        for k in 0..n {
            if !self.shape.row_is_free(k) {
                for l in k + 1..n {
                    if !g.y.entry(k, l).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The element with the given mixed-radix index; index 0 is the identity.
    pub fn element_at(&self, index: u128) -> GroupElement {
        self.coords.element_at(&self.group.ring, index)
    }

    /// Inverse of [`element_at`](Self::element_at); `None` when the element
    /// is not a member.
    pub fn index_of(&self, g: &GroupElement) -> Option<u128> {
        if !self.contains(g) {
            return None;
        }
        self.coords.index_of(&self.group.ring, g)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// A generating set: one hermitian generator per free `S` coordinate and
    /// additive generator, one transvection per free `Y` coordinate and
    /// additive generator.  Row reduction writes any member as a product of
    /// these, so they generate.
    pub fn generators(&self) -> Vec<GroupElement> {
        let ring = &self.group.ring;
        let n = self.shape.n;
        let mut gens = Vec::new();
        for &coord in &self.coords.coords {
            match coord {
                Coord::SDiag(k) => {
                    for &r in ring.fixed_additive_generators() {
                        let mut s = HermitianMatrix::zero(n);
                        s.set_pair(ring, k, k, r).expect("generators are fixed");
                        gens.push(GroupElement {
                            s,
                            y: UnitriangularMatrix::identity(n),
                        });
                    }
                }
                Coord::SOff(k, l) => {
                    for a in ring.additive_generators() {
                        let mut s = HermitianMatrix::zero(n);
                        s.set_pair(ring, k, l, a).expect("off-diagonal pair");
                        gens.push(GroupElement {
                            s,
                            y: UnitriangularMatrix::identity(n),
                        });
                    }
                }
                Coord::Y(k, l) => {
                    for a in ring.additive_generators() {
                        gens.push(GroupElement {
                            s: HermitianMatrix::zero(n),
                            y: UnitriangularMatrix::transvection(n, k, l, a),
                        });
                    }
                }
            }
        }
        gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        other.shape.contains_shape(&self.shape)
    }

    /// Normality of `self` in `amb` by conjugating generators: conjugation
    /// by each generator of `amb` must keep every generator of `self`
    /// inside `self` (enough, by finiteness, for full normality).
    pub fn is_normal_in(&self, amb: &Subgroup<'_>) -> bool {
        if !self.is_subgroup_of(amb) {
            return false;
        }
        let g = self.group;
        let own = self.generators();
        amb.generators()
            .iter()
            .all(|a| own.iter().all(|h| self.contains(&g.conjugate(a, h))))
    }

    pub fn index_in(&self, amb: &Subgroup<'_>) -> u128 {
        debug_assert!(self.is_subgroup_of(amb));
        amb.order() / self.order()
    }

    /// The structural left transversal of `self` in `amb`: elements
    /// `(S'', Y_t)` with `S''` supported on the hermitian coordinates of
    /// `amb` missing from `self` and `Y_t` supported on the rows of `amb`
    /// missing from `self`.  Every `g ∈ amb` factors uniquely as
    /// `g = t · h` with `t` in this set and `h ∈ self`.
    pub fn transversal_in(&self, amb: &Subgroup<'_>) -> Result<Vec<GroupElement>, GroupError> {
        if !self.is_subgroup_of(amb) {
            return Err(GroupError::NotNested);
        }
        let ring = &self.group.ring;
        let system = CoordSystem::complement(ring, &self.shape, &amb.shape)?;
        Ok((0..system.order())
            .map(|i| system.element_at(ring, i))
            .collect())
    }

    /// A key identifying the coset `g · self` inside `amb`: the hermitian
    /// digits of `g` at the complement coordinates (invariant because right
    /// multiplication only disturbs `S` below the level of `self`) together
    /// with the rows of `Y⁻¹` free in `amb` but pinned in `self` (invariant
    /// because `(Y Y_h)⁻¹ = Y_h⁻¹ Y⁻¹ agrees with `Y⁻¹` on pinned rows).
    pub fn coset_key(&self, amb: &Subgroup<'_>, g: &GroupElement) -> Vec<u64> {
        debug_assert!(amb.contains(g), "coset keys index cosets inside the ambient");
        let ring = &self.group.ring;
        let n = self.shape.n;
        let mut key = Vec::new();
        for k in self.shape.s_level..amb.shape.s_level {
            for l in k..n {
                key.push(ring.element_index(g.s.entry(k, l)));
            }
        }
        let y_inv = g.y.inverse(ring);
        for k in 0..n {
            if amb.shape.row_is_free(k) && !self.shape.row_is_free(k) {
                for l in k + 1..n {
                    key.push(ring.element_index(y_inv.entry(k, l)));
                }
            }
        }
        key
    }

    /// Map from coset key to the position of the corresponding
    /// representative in [`transversal_in`](Self::transversal_in).
    pub fn coset_index_map(
        &self,
        amb: &Subgroup<'_>,
    ) -> Result<HashMap<Vec<u64>, u32>, GroupError> {
        let transversal = self.transversal_in(amb)?;
        let mut map = HashMap::with_capacity(transversal.len());
        for (i, t) in transversal.iter().enumerate() {
            let prior = map.insert(self.coset_key(amb, t), i as u32);
            debug_assert!(prior.is_none(), "coset keys are injective on the transversal");
        }
        Ok(map)
    }
}
