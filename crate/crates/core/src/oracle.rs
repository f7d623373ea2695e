//! An independent monomial-matrix model of the induced family.
//!
//! A module induced from a linear character has a basis indexed by the
//! cosets of the inducing subgroup; every group element permutes that basis
//! and scales each vector by a root of unity.  This module materializes
//! those matrices directly from the coset action — `g·t_k = t_{σ(k)}·m`
//! with twist `χ(m)` — and derives characters from their traces.  It never
//! goes through the Frobenius character formula, so its output is an
//! independent cross-check of the tables built in [`crate::reps`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cyclo::Cyclotomic;
use crate::group::{GroupElement, Subgroup, SubgroupSpec, UnipotentGroup};
use crate::reps::{RepError, RepLabel};

// ---------------------------------------------------------------------------
// Monomial matrices
// ---------------------------------------------------------------------------

/// A square matrix with exactly one nonzero entry per row and column, every
/// nonzero entry a root of unity `ζ_N^e`.  Column `k` holds its entry in
/// row `perm[k]` with exponent `twist[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    conductor: u64,
    perm: Vec<u32>,
    twist: Vec<u64>,
}

impl MonomialMatrix {
    pub fn new(conductor: u64, perm: Vec<u32>, twist: Vec<u64>) -> Self {
        assert_eq!(perm.len(), twist.len());
        let mut seen = vec![false; perm.len()];
        for &r in &perm {
            assert!(!seen[r as usize], "rows must be hit exactly once");
            seen[r as usize] = true;
        }
        assert!(twist.iter().all(|&e| e < conductor));
        MonomialMatrix {
            conductor,
            perm,
            twist,
        }
    }

    pub fn identity(dimension: u32, conductor: u64) -> Self {
        MonomialMatrix {
            conductor,
            perm: (0..dimension).collect(),
            twist: vec![0; dimension as usize],
        }
    }

    pub fn dimension(&self) -> u32 {
        self.perm.len() as u32
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &r)| r as usize == k)
            && self.twist.iter().all(|&e| e == 0)
    }

    /// Row index and root-of-unity exponent of the single nonzero entry in
    /// the given column.
    pub fn column_entry(&self, col: u32) -> (u32, u64) {
        (self.perm[col as usize], self.twist[col as usize])
    }

    /// Matrix product `self · other`: columns of `other` feed into `self`.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.dimension(), other.dimension());
        assert_eq!(self.conductor, other.conductor);
        let dim = other.perm.len();
        let mut perm = vec![0u32; dim];
        let mut twist = vec![0u64; dim];
        for k in 0..dim {
            let mid = other.perm[k] as usize;
            perm[k] = self.perm[mid];
            twist[k] = (other.twist[k] + self.twist[mid]) % self.conductor;
        }
        MonomialMatrix {
            conductor: self.conductor,
            perm,
            twist,
        }
    }

    /// Exact trace: the sum of the diagonal roots of unity.
    pub fn trace(&self) -> Cyclotomic {
        let mut counts = vec![0u64; self.conductor as usize];
        for (k, &r) in self.perm.iter().enumerate() {
            if r as usize == k {
                counts[self.twist[k] as usize] += 1;
            }
        }
        Cyclotomic::from_root_counts(self.conductor, &counts)
    }

    /// Sparse dump `(row, column, exponent)`, one triple per column.
    pub fn triples(&self) -> Vec<(u32, u32, u64)> {
        (0..self.perm.len())
            .map(|k| (self.perm[k], k as u32, self.twist[k]))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// The coset model
// ---------------------------------------------------------------------------

/// The full monomial realization of one family member: a matrix for every
/// element of the group, built from the coset action alone.
#[derive(Debug)]
pub struct MonomialRep<'g> {
    full: Subgroup<'g>,
    label: RepLabel,
    transversal: Vec<GroupElement>,
    matrices: Vec<MonomialMatrix>,
}

impl<'g> MonomialRep<'g> {
    /// Build the matrix model.  For each group element `g` and coset
    /// representative `t_k`, write `g·t_k = t_{σ(k)}·m` with `m` in the
    /// inducing subgroup and twist the linear character's value at `m`,
    /// evaluated directly through the hermitian form.
    pub fn build(group: &'g UnipotentGroup, label: &RepLabel) -> Result<Self, RepError> {
        let ring = group.ring();
        let n = group.rank();
        let conductor = ring.exponent();
        let full = group.full();
        let m_d = group.subgroup(SubgroupSpec::HermitianSetStabilizer(label.index_set()))?;
        let transversal = m_d.transversal_in(&full)?;
        let coset_of = m_d.coset_index_map(&full)?;
        let inverses: Vec<GroupElement> =
            transversal.iter().map(|t| group.inverse(t)).collect();
        let vectors: Vec<crate::group::ModuleVector> = label
            .indices()
            .iter()
            .map(|&i| crate::group::ModuleVector::basis_v(n, i))
            .collect();
        let form = group.form();
        let matrices: Vec<MonomialMatrix> = (0..full.order() as u64)
            .into_par_iter()
            .map(|gi| {
                let g = full.element_at(gi as u128);
                let dim = transversal.len();
                let mut perm = vec![0u32; dim];
                let mut twist = vec![0u64; dim];
                for (k, t) in transversal.iter().enumerate() {
                    let moved = group.multiply(&g, t);
                    let target = coset_of[&m_d.coset_key(&full, &moved)];
                    let m = group.multiply(&inverses[target as usize], &moved);
                    debug_assert!(m_d.contains(&m), "the residue lies in the inducing subgroup");
                    let mut exp: u64 = 0;
                    for (lam, w) in label.characters().iter().zip(vectors.iter()) {
                        let value = form.eval(ring, &group.apply(&m, w), w);
                        exp = (exp + lam.exponent_of(value)) % conductor;
                    }
                    perm[k] = target;
                    twist[k] = exp;
                }
                MonomialMatrix {
                    conductor,
                    perm,
                    twist,
                }
            })
            .collect();
        Ok(MonomialRep {
            full,
            label: label.clone(),
            transversal,
            matrices,
        })
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    pub fn dimension(&self) -> u32 {
        self.transversal.len() as u32
    }

    pub fn transversal(&self) -> &[GroupElement] {
        &self.transversal
    }

    /// The matrix of a group element, or `None` outside the group.
    pub fn matrix(&self, g: &GroupElement) -> Option<&MonomialMatrix> {
        self.full.index_of(g).map(|i| &self.matrices[i as usize])
    }

    pub fn matrices(&self) -> &[MonomialMatrix] {
        &self.matrices
    }

    /// The per-element traces as a character table on the full group.
    pub fn trace_character(&self) -> crate::reps::CharacterTable<'g> {
        let values: Vec<Cyclotomic> = self
            .matrices
            .par_iter()
            .map(MonomialMatrix::trace)
            .collect();
        crate::reps::CharacterTable::new(self.full.clone(), values)
            .expect("one trace per element")
    }

    /// Check `ρ(g₁g₂) = ρ(g₁)ρ(g₂)` on every generator pair and on
    /// `samples` deterministically seeded random pairs.
    pub fn check_homomorphism(&self, samples: usize) -> bool {
        let group = self.full.group();
        let gens = self.full.generators();
        let pair_ok = |a: &GroupElement, b: &GroupElement| -> bool {
            let product = group.multiply(a, b);
            let lhs = self.matrix(&product).expect("products stay in the group");
            let rhs = self
                .matrix(a)
                .expect("left factor")
                .multiply(self.matrix(b).expect("right factor"));
            *lhs == rhs
        };
        let generators_ok = gens
            .par_iter()
            .all(|a| gens.iter().all(|b| pair_ok(a, b)));
        if !generators_ok {
            return false;
        }
        let order = self.full.order() as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let pairs: Vec<(u64, u64)> = (0..samples)
            .map(|_| (rng.gen_range(0..order), rng.gen_range(0..order)))
            .collect();
        pairs.par_iter().all(|&(i, j)| {
            pair_ok(
                &self.full.element_at(i as u128),
                &self.full.element_at(j as u128),
            )
        })
    }

    /// Forgetting the twists must leave a transitive permutation action on
    /// the cosets: breadth-first search over the generator permutations
    /// reaches every index from 0.
    pub fn permutation_transitive(&self) -> bool {
        let dim = self.transversal.len();
        let gen_perms: Vec<&MonomialMatrix> = self
            .full
            .generators()
            .iter()
            .map(|g| self.matrix(g).expect("generators lie in the group"))
            .collect();
        let mut reached = vec![false; dim];
        let mut queue = vec![0usize];
        reached[0] = true;
        while let Some(k) = queue.pop() {
            for m in &gen_perms {
                let next = m.perm[k] as usize;
                if !reached[next] {
                    reached[next] = true;
                    queue.push(next);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// True when every element of `sub` is represented by the identity
    /// matrix — the matrix-level form of "acts trivially".
    pub fn identity_on(&self, sub: &Subgroup<'_>) -> bool {
        (0..sub.order() as u64).into_par_iter().all(|i| {
            let g = sub.element_at(i as u128);
            self.matrix(&g).is_some_and(MonomialMatrix::is_identity)
        })
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::admissible_characters;
    use crate::group::SubgroupSpec;
    use crate::reps::{all_labels, induce, product_point_character};
    use crate::ring::InvolutiveRing;

    fn group(spec: &str, n: usize) -> UnipotentGroup {
        let ring = InvolutiveRing::parse(spec).unwrap();
        UnipotentGroup::with_default_cap(ring, n).unwrap()
    }

    #[test]
    fn monomial_matrix_arithmetic() {
        // two-cycle with a twist, composed with itself: the twists add up
        let a = MonomialMatrix::new(3, vec![1, 0], vec![1, 2]);
        let sq = a.multiply(&a);
        // a e_0 = ζ e_1, a (ζ e_1) = ζ·ζ² e_0 = e_0
        assert!(sq.is_identity());
        assert_eq!(a.trace(), Cyclotomic::zero(3));
        assert_eq!(
            MonomialMatrix::identity(4, 3).trace(),
            Cyclotomic::from_integer(3, 4)
        );
        let triples = a.triples();
        assert_eq!(triples, vec![(1, 0, 1), (0, 1, 2)]);
    }

    #[test]
    fn the_identity_element_gets_the_identity_matrix() {
        let g = group("Z/3", 2);
        let adm = admissible_characters(g.ring());
        let label = crate::reps::RepLabel::new(g.ring(), 2, &[1], &[adm[0]]).unwrap();
        let rep = MonomialRep::build(&g, &label).unwrap();
        assert_eq!(rep.dimension(), 3);
        assert!(rep.matrix(&g.identity()).unwrap().is_identity());
    }

    #[test]
    fn traces_match_the_frobenius_tables() {
        let g = group("Z/3", 2);
        for label in all_labels(g.ring(), 2) {
            let rep = MonomialRep::build(&g, &label).unwrap();
            let m_d = g
                .subgroup(SubgroupSpec::HermitianSetStabilizer(label.index_set()))
                .unwrap();
            let chi = product_point_character(&m_d, &label).unwrap();
            let induced = induce(&chi, &g.full()).unwrap();
            assert!(
                rep.trace_character().equal_values(&induced),
                "trace table for {}",
                label.describe(g.ring())
            );
        }
    }

    #[test]
    fn the_model_is_a_homomorphism_on_all_pairs() {
        let g = group("Z/3", 2);
        let adm = admissible_characters(g.ring());
        let label = crate::reps::RepLabel::new(g.ring(), 2, &[1, 2], &[adm[0], adm[1]]).unwrap();
        let rep = MonomialRep::build(&g, &label).unwrap();
        let full = g.full();
        let elements: Vec<GroupElement> = full.elements().collect();
        for a in &elements {
            for b in &elements {
                let product = g.multiply(a, b);
                assert_eq!(
                    *rep.matrix(&product).unwrap(),
                    rep.matrix(a).unwrap().multiply(rep.matrix(b).unwrap()),
                    "homomorphism at all 81×81 pairs"
                );
            }
        }
        assert!(rep.check_homomorphism(500));
        assert!(rep.permutation_transitive());
    }

    #[test]
    fn lower_subgroups_act_by_identity_matrices_on_higher_labels() {
        let g = group("Z/3", 2);
        let adm = admissible_characters(g.ring());
        let label = crate::reps::RepLabel::new(g.ring(), 2, &[2], &[adm[0]]).unwrap();
        let rep = MonomialRep::build(&g, &label).unwrap();
        let n_1 = g
            .subgroup(SubgroupSpec::Pattern {
                s_level: 1,
                row_count: 1,
            })
            .unwrap();
        assert!(rep.identity_on(&n_1));
        // but the full group does not act by identity matrices
        assert!(!rep.identity_on(&g.full()));
    }
}
