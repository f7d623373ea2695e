//! Linear characters of the additive group `A⁺` of a finite involutive ring.
//!
//! `A⁺` is free of exponent `N = m` over the generating set `{1}` (residue
//! rings) or `{1, γ}` (quadratic extensions), so a character is a tuple of
//! exponents: `λ(a·1 + b·γ) = ζ_N^{k₁ a + k₂ b}`.  Everything downstream can
//! therefore evaluate characters as integer exponent arithmetic and only
//! materialize cyclotomic values at the edges.
//!
//! The distinguished notions:
//!
//! - the *sharp* character `λ^♯(a) = λ(a + a*)`, which factors through the
//!   trace-like map `Λ(a) = a + a*`;
//! - *left admissibility*: `ker λ^♯` contains no nonzero left ideal, decided
//!   by the principal-ideal criterion (for every `a ≠ 0` some `e` has
//!   `λ^♯(ea) ≠ 1`) — the hypothesis making the induced modules downstream
//!   irreducible;
//! - surjectivity of `Λ` onto the fixed set, the hypothesis of the
//!   classification theorem;
//! - restriction of `λ` to the fixed set, the classifying invariant.

use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::ring::{InvolutiveRing, RingElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("expected {expected} exponent(s) for this ring, got {got}")]
    ExponentCount { expected: usize, got: usize },
}

/// A linear character of `A⁺`, stored as exponents on the additive
/// generating set.  `exps[1]` is unused (zero) over residue rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearCharacter {
    conductor: u64,
    exps: [u64; 2],
}

impl LinearCharacter {
    /// Build from explicit exponents, one per additive generator
    /// (`[k₁]` for `Z/m`, `[k₁, k₂]` for quadratic rings); reduced mod `N`.
    pub fn new(ring: &InvolutiveRing, exps: &[u64]) -> Result<Self, CharError> {
        let expected = if ring.is_quadratic() { 2 } else { 1 };
        if exps.len() != expected {
            return Err(CharError::ExponentCount {
                expected,
                got: exps.len(),
            });
        }
        let n = ring.exponent();
        Ok(LinearCharacter {
            conductor: n,
            exps: [exps[0] % n, if expected == 2 { exps[1] % n } else { 0 }],
        })
    }

    pub fn trivial(ring: &InvolutiveRing) -> Self {
        LinearCharacter {
            conductor: ring.exponent(),
            exps: [0, 0],
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Exponents on the generating set (second entry meaningful only for
    /// quadratic rings).
    pub fn exponents(&self) -> [u64; 2] {
        self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps == [0, 0]
    }

    /// The exponent `e` with `λ(x) = ζ_N^e`.
    #[inline]
    pub fn exponent_of(&self, x: RingElement) -> u64 {
        let n = self.conductor as u128;
        ((self.exps[0] as u128 * x.base_coord() as u128
            + self.exps[1] as u128 * x.gamma_coord() as u128)
            % n) as u64
    }

    pub fn eval(&self, x: RingElement) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.conductor, self.exponent_of(x) as i64)
    }

    /// `λ^♯(a) = λ(a + a*)`, expressed again as a linear character by
    /// evaluating on the generators.
    pub fn sharp(&self, ring: &InvolutiveRing) -> Self {
        let gens = ring.additive_generators();
        let mut exps = [0u64; 2];
        for (slot, g) in exps.iter_mut().zip(gens) {
            *slot = self.exponent_of(ring.trace(g));
        }
        LinearCharacter {
            conductor: self.conductor,
            exps,
        }
    }

    /// Left admissibility: `ker λ^♯` contains no nonzero left ideal.  Since
    /// any nonzero left ideal contains a nonzero principal one, it suffices
    /// that every `a ≠ 0` admits `e` with `λ^♯(ea) ≠ 1`.
    pub fn is_left_admissible(&self, ring: &InvolutiveRing) -> bool {
        self.sharp(ring).is_left_primitive(ring)
    }

    /// `ker λ` itself contains no nonzero left ideal (the admissibility
    /// analogue for a character used directly, e.g. base characters being
    /// lifted to a quadratic extension).
    pub fn is_left_primitive(&self, ring: &InvolutiveRing) -> bool {
        ring.elements().filter(|a| !a.is_zero()).all(|a| {
            ring.elements()
                .any(|e| self.exponent_of(ring.mul(e, a)) != 0)
        })
    }

    /// Restriction to the fixed set, in fixed-set enumeration order.
    pub fn restrict_to_fixed(&self, ring: &InvolutiveRing) -> Vec<(RingElement, Cyclotomic)> {
        ring.fixed_set()
            .iter()
            .map(|&r| (r, self.eval(r)))
            .collect()
    }

    /// Exponent vector of the restriction to the fixed set — the classifying
    /// invariant of the main family (cheap to compare).
    pub fn fixed_restriction_exponents(&self, ring: &InvolutiveRing) -> Vec<u64> {
        ring.fixed_set()
            .iter()
            .map(|&r| self.exponent_of(r))
            .collect()
    }

    /// CLI rendering, e.g. `lambda[1]=2 lambda[gamma]=1 (zeta_3)`.
    pub fn describe(&self, ring: &InvolutiveRing) -> String {
        let mut parts = vec![format!("lambda[1]={}", self.exps[0])];
        if ring.is_quadratic() {
            parts.push(format!("lambda[gamma]={}", self.exps[1]));
        }
        format!("{} (zeta_{})", parts.join(" "), self.conductor)
    }
}

/// All `|A|` linear characters of `A⁺`, trivial first, lexicographic in the
/// exponent tuple.
pub fn enumerate_linear_characters(ring: &InvolutiveRing) -> Vec<LinearCharacter> {
    let n = ring.exponent();
    let mut out = Vec::with_capacity(ring.size() as usize);
    if ring.is_quadratic() {
        for k1 in 0..n {
            for k2 in 0..n {
                out.push(LinearCharacter {
                    conductor: n,
                    exps: [k1, k2],
                });
            }
        }
    } else {
        for k1 in 0..n {
            out.push(LinearCharacter {
                conductor: n,
                exps: [k1, 0],
            });
        }
    }
    out
}

/// The admissible characters, in enumeration order.
pub fn admissible_characters(ring: &InvolutiveRing) -> Vec<LinearCharacter> {
    enumerate_linear_characters(ring)
        .into_iter()
        .filter(|ch| ch.is_left_admissible(ring))
        .collect()
}

/// Whether the trace-like map `Λ(a) = a + a*` maps `A` onto the fixed set —
/// the hypothesis of the classification theorem.
pub fn lambda_surjective(ring: &InvolutiveRing) -> bool {
    let mut hit = vec![false; ring.size() as usize];
    for a in ring.elements() {
        hit[ring.element_index(ring.trace(a)) as usize] = true;
    }
    ring.fixed_set()
        .iter()
        .all(|&r| hit[ring.element_index(r) as usize])
}

/// Lift a character `μ` of the base `Z/m` through `a + bγ ↦ a` to a
/// character of a quadratic extension (the admissible lift construction).
pub fn lift_to_quadratic(
    ext: &InvolutiveRing,
    mu: &LinearCharacter,
) -> Result<LinearCharacter, CharError> {
    if !ext.is_quadratic() {
        return Err(CharError::ExponentCount {
            expected: 2,
            got: 1,
        });
    }
    assert_eq!(
        mu.conductor,
        ext.exponent(),
        "base and extension share the additive exponent"
    );
    Ok(LinearCharacter {
        conductor: ext.exponent(),
        exps: [mu.exps[0], 0],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rings() -> Vec<InvolutiveRing> {
        vec![
            InvolutiveRing::residue(2).unwrap(),
            InvolutiveRing::residue(3).unwrap(),
            InvolutiveRing::residue(4).unwrap(),
            InvolutiveRing::residue(5).unwrap(),
            InvolutiveRing::residue(9).unwrap(),
            InvolutiveRing::quadratic_extension(3, 0, 1).unwrap(),
            InvolutiveRing::quadratic_extension(3, 0, 2).unwrap(),
            InvolutiveRing::quadratic_extension(4, 1, 1).unwrap(),
        ]
    }

    #[test]
    fn enumeration_is_complete_and_trivial_first() {
        for ring in rings() {
            let chars = enumerate_linear_characters(&ring);
            assert_eq!(chars.len() as u64, ring.size());
            assert!(chars[0].is_trivial());
            // All distinct as exponent tuples.
            let mut seen = chars.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), chars.len());
        }
    }

    #[test]
    fn characters_are_homomorphisms_exhaustively() {
        for ring in rings() {
            let n = ring.exponent();
            for ch in enumerate_linear_characters(&ring) {
                for x in ring.elements() {
                    for y in ring.elements() {
                        assert_eq!(
                            ch.exponent_of(ring.add(x, y)),
                            (ch.exponent_of(x) + ch.exponent_of(y)) % n,
                            "λ(x+y) = λ(x)λ(y) fails in {ring}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sharp_factors_through_the_trace() {
        for ring in rings() {
            for ch in enumerate_linear_characters(&ring) {
                let sharp = ch.sharp(&ring);
                for x in ring.elements() {
                    assert_eq!(
                        sharp.exponent_of(x),
                        ch.exponent_of(ring.trace(x)),
                        "λ^♯ ≠ λ∘Λ in {ring}"
                    );
                }
            }
        }
    }

    #[test]
    fn sharp_doubles_over_residue_rings() {
        let r5 = InvolutiveRing::residue(5).unwrap();
        for k in 0..5 {
            let ch = LinearCharacter::new(&r5, &[k]).unwrap();
            assert_eq!(ch.sharp(&r5).exponents(), [(2 * k) % 5, 0]);
        }
        // Over the order-9 field with γ* = −γ: λ^♯(a+bγ) = λ(2a), so a pure
        // γ-character sharpens to the trivial character.
        let f9 = InvolutiveRing::quadratic_extension(3, 0, 1).unwrap();
        let ch = LinearCharacter::new(&f9, &[0, 1]).unwrap();
        assert!(ch.sharp(&f9).is_trivial());
        assert!(!ch.is_left_admissible(&f9));
    }

    #[test]
    fn admissible_counts_are_stable() {
        let expect = [
            ("Z/2", 0u64),
            ("Z/3", 2),
            ("Z/4", 0),
            ("Z/5", 4),
            ("Z/9", 6),
            ("Z/3[t^2+1]", 6),
            ("Z/3[t^2+2]", 6),
            ("Z/4[t^2+t+1]", 8),
        ];
        for (spec, want) in expect {
            let ring = InvolutiveRing::parse(spec).unwrap();
            let got = admissible_characters(&ring).len() as u64;
            assert_eq!(got, want, "admissible count for {spec}");
        }
    }

    #[test]
    fn identity_involution_admissibility_cross_route() {
        // With the identity involution, left admissibility is equivalent to
        // "2 is a unit and ker λ contains no nonzero ideal".
        for spec in ["Z/2", "Z/3", "Z/4", "Z/5", "Z/9"] {
            let ring = InvolutiveRing::parse(spec).unwrap();
            for ch in enumerate_linear_characters(&ring) {
                let direct = ch.is_left_admissible(&ring);
                let via_kernel = ring.two_is_unit() && ch.is_left_primitive(&ring);
                assert_eq!(direct, via_kernel, "cross-route mismatch for {spec}");
            }
        }
    }

    #[test]
    fn primitive_base_characters_lift_admissibly() {
        for spec in ["Z/3[t^2+1]", "Z/3[t^2+2]", "Z/4[t^2+t+1]"] {
            let ext = InvolutiveRing::parse(spec).unwrap();
            let base = InvolutiveRing::residue(ext.modulus()).unwrap();
            let mut primitive_seen = 0;
            for mu in enumerate_linear_characters(&base) {
                if !mu.is_left_primitive(&base) {
                    continue;
                }
                primitive_seen += 1;
                let lift = lift_to_quadratic(&ext, &mu).unwrap();
                // The lift restricts back to μ on the base copy...
                for a in base.elements() {
                    assert_eq!(lift.exponent_of(ext.from_coords(a.base_coord(), 0)),
                               mu.exponent_of(a));
                }
                // ...and is left admissible.
                assert!(lift.is_left_admissible(&ext), "lift of primitive μ in {spec}");
            }
            assert!(primitive_seen > 0, "base of {spec} has primitive characters");
        }
    }

    #[test]
    fn trace_surjectivity_cases() {
        let expect = [
            ("Z/2", false),
            ("Z/3", true),
            ("Z/4", false),
            ("Z/5", true),
            ("Z/9", true),
            ("Z/3[t^2+1]", true),
            ("Z/4[t^2+t+1]", true),
        ];
        for (spec, want) in expect {
            let ring = InvolutiveRing::parse(spec).unwrap();
            assert_eq!(lambda_surjective(&ring), want, "Λ surjectivity for {spec}");
        }
    }

    #[test]
    fn restriction_to_the_fixed_set() {
        let f9 = InvolutiveRing::quadratic_extension(3, 0, 1).unwrap();
        let ch = LinearCharacter::new(&f9, &[1, 0]).unwrap();
        let table = ch.restrict_to_fixed(&f9);
        assert_eq!(table.len(), 3);
        for (k, (r, value)) in table.iter().enumerate() {
            assert_eq!(*r, f9.from_int(k as i64));
            assert_eq!(*value, Cyclotomic::root_of_unity(3, k as i64));
        }
        assert_eq!(ch.fixed_restriction_exponents(&f9), vec![0, 1, 2]);
    }

    #[test]
    fn exponent_tuple_validation_and_rendering() {
        let r5 = InvolutiveRing::residue(5).unwrap();
        assert!(LinearCharacter::new(&r5, &[1, 2]).is_err());
        let ch = LinearCharacter::new(&r5, &[3]).unwrap();
        assert_eq!(ch.describe(&r5), "lambda[1]=3 (zeta_5)");

        let f9 = InvolutiveRing::quadratic_extension(3, 0, 1).unwrap();
        assert!(LinearCharacter::new(&f9, &[1]).is_err());
        let ch = LinearCharacter::new(&f9, &[2, 1]).unwrap();
        assert_eq!(ch.describe(&f9), "lambda[1]=2 lambda[gamma]=1 (zeta_3)");
        // Exponents reduce mod N.
        assert_eq!(LinearCharacter::new(&f9, &[5, 3]).unwrap().exponents(), [2, 0]);
    }
}
