//! Characters of the induced family.
//!
//! Everything here is exact: a character is a dense table of cyclotomic
//! values indexed by a subgroup's canonical enumeration.  The pipeline
//! starts from the linear point characters `x ↦ λ(h(x·v, v))` on the
//! stabilizer `C ⋊ L_v`, induces them to the full group with the Frobenius
//! formula, tensors the results over an index set `D`, and finally sorts
//! the family into isomorphism classes — which, for complex characters of a
//! finite group, is plain equality of tables.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, BigRational};
use rayon::prelude::*;
use thiserror::Error;

use crate::chars::{admissible_characters, lambda_surjective, LinearCharacter};
use crate::cyclo::Cyclotomic;
use crate::group::{
    GroupElement, GroupError, ModuleVector, Subgroup, SubgroupSpec, UnipotentGroup,
};
use crate::matrix::HermitianMatrix;
use crate::ring::InvolutiveRing;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("table length {got} does not match the subgroup order {expected}")]
    TableLength { expected: u128, got: usize },
    #[error("tables live on different domains: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error("{domain} does not stabilize the point vector")]
    NotStabilized { domain: String },
    #[error("the point vector must lie in the span of the v-basis")]
    PointOutsideSpan,
    #[error("character conductor {got} does not match the ring exponent {expected}")]
    ConductorMismatch { expected: u64, got: u64 },
    #[error("{sub} is not normal in {amb}")]
    NotNormal { sub: String, amb: String },
    #[error("the character in position {position} is not left admissible")]
    NotAdmissible { position: usize },
    #[error("the index set must be nonempty, strictly increasing, and within 1..=n")]
    BadIndexSet,
    #[error("expected {expected} characters for the index set, got {got}")]
    LambdaCount { expected: usize, got: usize },
    #[error("expected a linear character (degree 1), got degree {got}")]
    NotLinear { got: u64 },
    #[error("inner product is not rational; the operands are not genuine characters")]
    NotRational,
    #[error("classification requires a ↦ a + a* to reach every fixed element; {ring} fails this")]
    TraceNotSurjective { ring: String },
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

/// A class-function table on a subgroup: one cyclotomic value per element,
/// stored in the subgroup's canonical enumeration order (identity first).
#[derive(Debug, Clone)]
pub struct CharacterTable<'g> {
    domain: Subgroup<'g>,
    values: Vec<Cyclotomic>,
}

impl<'g> CharacterTable<'g> {
    pub fn new(domain: Subgroup<'g>, values: Vec<Cyclotomic>) -> Result<Self, RepError> {
        if values.len() as u128 != domain.order() {
            return Err(RepError::TableLength {
                expected: domain.order(),
                got: values.len(),
            });
        }
        Ok(CharacterTable { domain, values })
    }

    /// Evaluate `f` on every element, in parallel, in enumeration order.
    pub fn from_fn<F>(domain: Subgroup<'g>, f: F) -> Self
    where
        F: Fn(&GroupElement) -> Cyclotomic + Sync,
    {
        let values = (0..domain.order() as u64)
            .into_par_iter()
            .map(|i| f(&domain.element_at(i as u128)))
            .collect();
        CharacterTable { domain, values }
    }

    pub fn domain(&self) -> &Subgroup<'g> {
        &self.domain
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at(&self, index: u128) -> &Cyclotomic {
        &self.values[index as usize]
    }

    /// Value at `g`, or `None` when `g` lies outside the domain.
    pub fn value(&self, g: &GroupElement) -> Option<&Cyclotomic> {
        self.domain.index_of(g).map(|i| self.value_at(i))
    }

    /// The value at the identity, which for a genuine character is the
    /// dimension of the underlying module.
    pub fn degree(&self) -> u64 {
        self.values[0]
            .as_u64()
            .expect("the identity value of a character is a nonnegative integer")
    }

    /// Smallest common conductor of the stored values.
    pub fn conductor(&self) -> u64 {
        self.values.iter().map(Cyclotomic::conductor).max().unwrap_or(1)
    }

    fn check_same_domain(&self, other: &Self) -> Result<(), RepError> {
        if !std::ptr::eq(self.domain.group(), other.domain.group())
            || self.domain.shape() != other.domain.shape()
        {
            return Err(RepError::DomainMismatch {
                left: self.domain.label(),
                right: other.domain.label(),
            });
        }
        Ok(())
    }

    /// Restriction to a smaller subgroup of the same group.
    pub fn restrict(&self, sub: &Subgroup<'g>) -> Result<CharacterTable<'g>, RepError> {
        if !std::ptr::eq(sub.group(), self.domain.group()) || !sub.is_subgroup_of(&self.domain) {
            return Err(RepError::DomainMismatch {
                left: sub.label(),
                right: self.domain.label(),
            });
        }
        let values = (0..sub.order() as u64)
            .into_par_iter()
            .map(|i| {
                let g = sub.element_at(i as u128);
                let idx = self
                    .domain
                    .index_of(&g)
                    .expect("members of a subgroup lie in the ambient domain");
                self.values[idx as usize].clone()
            })
            .collect();
        Ok(CharacterTable {
            domain: sub.clone(),
            values,
        })
    }

    /// Pointwise product — the character of the tensor product of the
    /// underlying modules.
    pub fn tensor(&self, other: &Self) -> Result<CharacterTable<'g>, RepError> {
        self.check_same_domain(other)?;
        let values = self
            .values
            .par_iter()
            .zip(other.values.par_iter())
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(CharacterTable {
            domain: self.domain.clone(),
            values,
        })
    }

    /// `⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g)·conj(ψ(g))`, exactly.  For genuine
    /// characters this is a nonnegative integer (the multiplicity).
    pub fn inner_product(&self, other: &Self) -> Result<BigRational, RepError> {
        self.check_same_domain(other)?;
        let sum = self
            .values
            .par_iter()
            .zip(other.values.par_iter())
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a.mul(&b.conjugate()))
            .reduce(|| Cyclotomic::zero(1), |x, y| x.add(&y));
        let total = sum.as_rational().ok_or(RepError::NotRational)?;
        let order = BigRational::from_integer(BigInt::from(self.domain.order()));
        Ok(total / order)
    }

    /// True when both tables sit on the same subgroup and agree pointwise.
    pub fn equal_values(&self, other: &Self) -> bool {
        self.check_same_domain(other).is_ok()
            && self
                .values
                .iter()
                .zip(other.values.iter())
                .all(|(a, b)| a == b)
    }

    /// A canonical string form of the whole table, usable as a hash key for
    /// grouping tables by equality.
    pub fn fingerprint(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        parts.join(";")
    }
}

// ---------------------------------------------------------------------------
// Labels (D, λ)
// ---------------------------------------------------------------------------

/// A member of the family: a nonempty index set `D ⊆ {1..n}` together with
/// one left-admissible linear character per index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepLabel {
    d: Vec<usize>,
    lambdas: Vec<LinearCharacter>,
}

impl RepLabel {
    pub fn new(
        ring: &InvolutiveRing,
        rank: usize,
        d: &[usize],
        lambdas: &[LinearCharacter],
    ) -> Result<Self, RepError> {
        if d.is_empty()
            || d.windows(2).any(|w| w[0] >= w[1])
            || d.iter().any(|&i| i == 0 || i > rank)
        {
            return Err(RepError::BadIndexSet);
        }
        if lambdas.len() != d.len() {
            return Err(RepError::LambdaCount {
                expected: d.len(),
                got: lambdas.len(),
            });
        }
        for (position, lam) in lambdas.iter().enumerate() {
            if lam.conductor() != ring.exponent() {
                return Err(RepError::ConductorMismatch {
                    expected: ring.exponent(),
                    got: lam.conductor(),
                });
            }
            if !lam.is_left_admissible(ring) {
                return Err(RepError::NotAdmissible { position });
            }
        }
        Ok(RepLabel {
            d: d.to_vec(),
            lambdas: lambdas.to_vec(),
        })
    }

    pub fn indices(&self) -> &[usize] {
        &self.d
    }

    pub fn characters(&self) -> &[LinearCharacter] {
        &self.lambdas
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, &LinearCharacter)> {
        self.d.iter().copied().zip(self.lambdas.iter())
    }

    pub fn index_set(&self) -> BTreeSet<usize> {
        self.d.iter().copied().collect()
    }

    /// `D={1,3} lambda_1=[2] lambda_3=[1,0]` — exponents on the additive
    /// generating set of the ring.
    pub fn describe(&self, ring: &InvolutiveRing) -> String {
        let count = if ring.is_quadratic() { 2 } else { 1 };
        let set: Vec<String> = self.d.iter().map(usize::to_string).collect();
        let mut out = format!("D={{{}}}", set.join(","));
        for (i, lam) in self.pairs() {
            let shown: Vec<String> = lam.exponents()[..count]
                .iter()
                .map(u64::to_string)
                .collect();
            out.push_str(&format!(" lambda_{}=[{}]", i, shown.join(",")));
        }
        out
    }
}

/// Every valid label over the given ring and rank: index sets in bitmask
/// order, then choice functions lexicographically (last index varies
/// fastest).  Empty when the ring has no admissible characters.
pub fn all_labels(ring: &InvolutiveRing, rank: usize) -> Vec<RepLabel> {
    let adm = admissible_characters(ring);
    let mut out = Vec::new();
    if adm.is_empty() {
        return out;
    }
    for mask in 1u32..(1u32 << rank) {
        let d: Vec<usize> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let k = d.len();
        let total = (adm.len() as u64).pow(k as u32);
        for idx in 0..total {
            let mut digits = vec![0usize; k];
            let mut rem = idx;
            for pos in (0..k).rev() {
                digits[pos] = (rem % adm.len() as u64) as usize;
                rem /= adm.len() as u64;
            }
            let lambdas: Vec<LinearCharacter> = digits.iter().map(|&j| adm[j]).collect();
            out.push(RepLabel { d: d.clone(), lambdas });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Point characters
// ---------------------------------------------------------------------------

/// Check that the unipotent part of every generator of `dom` fixes `w`.
/// The elements whose unipotent part fixes `w` form a subgroup, so checking
/// generators settles the whole domain.
fn domain_stabilizes(dom: &Subgroup<'_>, w: &ModuleVector) -> bool {
    let group = dom.group();
    let n = group.rank();
    dom.generators().iter().all(|g| {
        let unipotent =
            GroupElement::from_parts(HermitianMatrix::zero(n), g.y_part().clone());
        group.apply(&unipotent, w) == *w
    })
}

fn check_point_inputs(
    dom: &Subgroup<'_>,
    w: &ModuleVector,
    lam: &LinearCharacter,
) -> Result<(), RepError> {
    let ring = dom.group().ring();
    if lam.conductor() != ring.exponent() {
        return Err(RepError::ConductorMismatch {
            expected: ring.exponent(),
            got: lam.conductor(),
        });
    }
    let n = dom.group().rank();
    if w.pairs() != n || w.coords()[..n].iter().any(|c| !c.is_zero()) {
        return Err(RepError::PointOutsideSpan);
    }
    if !domain_stabilizes(dom, w) {
        return Err(RepError::NotStabilized { domain: dom.label() });
    }
    Ok(())
}

/// The linear character `x ↦ λ(h(x·w, w))` on a subgroup of the stabilizer
/// `C ⋊ L_w` of a vector `w` in the span of the v-basis.
pub fn point_character<'g>(
    dom: &Subgroup<'g>,
    w: &ModuleVector,
    lam: &LinearCharacter,
) -> Result<CharacterTable<'g>, RepError> {
    check_point_inputs(dom, w, lam)?;
    let group = dom.group();
    let ring = group.ring();
    let form = group.form();
    Ok(CharacterTable::from_fn(dom.clone(), |g| {
        let moved = group.apply(g, w);
        let t = form.eval(ring, &moved, w);
        debug_assert!(ring.is_fixed(t), "point values land in the fixed set");
        lam.eval(t)
    }))
}

/// The product character `x ↦ Π_{i∈D} λ_i(h(x·v_i, v_i))` on a subgroup of
/// `M_D = ∩_{i∈D} C ⋊ L_{v_i}`.
pub fn product_point_character<'g>(
    dom: &Subgroup<'g>,
    label: &RepLabel,
) -> Result<CharacterTable<'g>, RepError> {
    let group = dom.group();
    let ring = group.ring();
    let n = group.rank();
    let mut vectors = Vec::with_capacity(label.d.len());
    for (i, lam) in label.pairs() {
        let w = ModuleVector::basis_v(n, i);
        check_point_inputs(dom, &w, lam)?;
        vectors.push(w);
    }
    let conductor = ring.exponent();
    Ok(CharacterTable::from_fn(dom.clone(), |g| {
        let mut exp: u64 = 0;
        for (lam, w) in label.lambdas.iter().zip(vectors.iter()) {
            let moved = group.apply(g, w);
            let t = dom.group().form().eval(ring, &moved, w);
            exp = (exp + lam.exponent_of(t)) % conductor;
        }
        Cyclotomic::root_of_unity(conductor, exp as i64)
    }))
}

// ---------------------------------------------------------------------------
// Induction, inertia
// ---------------------------------------------------------------------------

/// Frobenius induction along the structural transversal:
/// `(ind χ)(g) = Σ_{t : t⁻¹gt ∈ H} χ(t⁻¹ g t)`.
pub fn induce<'g>(
    chi: &CharacterTable<'g>,
    amb: &Subgroup<'g>,
) -> Result<CharacterTable<'g>, RepError> {
    let sub = chi.domain();
    if !std::ptr::eq(sub.group(), amb.group()) {
        return Err(RepError::DomainMismatch {
            left: sub.label(),
            right: amb.label(),
        });
    }
    let transversal = sub.transversal_in(amb)?;
    let group = amb.group();
    let inverses: Vec<GroupElement> = transversal.iter().map(|t| group.inverse(t)).collect();
    let conductor = chi.conductor();
    Ok(CharacterTable::from_fn(amb.clone(), |g| {
        let mut acc = Cyclotomic::zero(conductor);
        for (t, t_inv) in transversal.iter().zip(inverses.iter()) {
            let x = group.multiply(&group.multiply(t_inv, g), t);
            if let Some(idx) = sub.index_of(&x) {
                acc = acc.add(chi.value_at(idx));
            }
        }
        acc
    }))
}

/// The stabilizer in `amb` of a linear character living on a normal
/// subgroup: all `g` with `χ(g⁻¹ x g) = χ(x)`.  Because conjugation by a
/// fixed `g` sends homomorphisms to homomorphisms, agreement on the
/// generators of the domain settles agreement everywhere.
pub fn inertia_group<'g>(
    chi: &CharacterTable<'g>,
    amb: &Subgroup<'g>,
) -> Result<Vec<GroupElement>, RepError> {
    let dom = chi.domain();
    if !std::ptr::eq(dom.group(), amb.group()) {
        return Err(RepError::DomainMismatch {
            left: dom.label(),
            right: amb.label(),
        });
    }
    if chi.degree() != 1 {
        return Err(RepError::NotLinear { got: chi.degree() });
    }
    if !dom.is_normal_in(amb) {
        return Err(RepError::NotNormal {
            sub: dom.label(),
            amb: amb.label(),
        });
    }
    let group = amb.group();
    let gens = dom.generators();
    let gen_values: Vec<&Cyclotomic> = gens
        .iter()
        .map(|x| chi.value(x).expect("generators lie in the domain"))
        .collect();
    let flags: Vec<bool> = (0..amb.order() as u64)
        .into_par_iter()
        .map(|i| {
            let g = amb.element_at(i as u128);
            let g_inv = group.inverse(&g);
            gens.iter().zip(gen_values.iter()).all(|(x, val)| {
                let conj = group.multiply(&group.multiply(&g_inv, x), &g);
                let idx = dom
                    .index_of(&conj)
                    .expect("a normal domain is closed under ambient conjugation");
                chi.value_at(idx) == *val
            })
        })
        .collect();
    Ok(flags
        .into_iter()
        .enumerate()
        .filter(|(_, keep)| *keep)
        .map(|(i, _)| amb.element_at(i as u128))
        .collect())
}

// ---------------------------------------------------------------------------
// The induced family
// ---------------------------------------------------------------------------

/// The character of the tensor product `⊗_{i∈D} ind(χ_{v_i, λ_i})`, each
/// factor induced from its stabilizer `C ⋊ L_{v_i}` to the full group.
pub fn character_of_v<'g>(
    group: &'g UnipotentGroup,
    label: &RepLabel,
) -> Result<CharacterTable<'g>, RepError> {
    let full = group.full();
    let n = group.rank();
    let mut acc: Option<CharacterTable<'g>> = None;
    for (i, lam) in label.pairs() {
        let dom = group.subgroup(SubgroupSpec::HermitianVectorStabilizer(i))?;
        let w = ModuleVector::basis_v(n, i);
        let chi = point_character(&dom, &w, lam)?;
        let induced = induce(&chi, &full)?;
        acc = Some(match acc {
            None => induced,
            Some(t) => t.tensor(&induced)?,
        });
    }
    Ok(acc.expect("labels carry a nonempty index set"))
}

/// Compare the tensor-product table against the one-shot induction of the
/// product point character from `M_D`.  Equality certifies that the family
/// member is monomial: induced from a linear character.
pub fn verify_monomial<'g>(
    group: &'g UnipotentGroup,
    label: &RepLabel,
) -> Result<bool, RepError> {
    let lhs = character_of_v(group, label)?;
    let m_d = group.subgroup(SubgroupSpec::HermitianSetStabilizer(label.index_set()))?;
    let chi_d = product_point_character(&m_d, label)?;
    let rhs = induce(&chi_d, &group.full())?;
    Ok(lhs.equal_values(&rhs))
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// The outcome of sorting a family of labels into isomorphism classes.
///
/// Both partitions are reported with first-occurrence class ids, so the two
/// partitions coincide exactly when the id vectors are equal.
#[derive(Debug, Clone)]
pub struct Classification {
    labels: Vec<RepLabel>,
    actual: Vec<usize>,
    predicted: Vec<usize>,
}

impl Classification {
    pub fn labels(&self) -> &[RepLabel] {
        &self.labels
    }

    /// Class ids by pointwise character equality.
    pub fn actual_classes(&self) -> &[usize] {
        &self.actual
    }

    /// Class ids by the invariant (D, restriction of each λ_i to the fixed
    /// set).
    pub fn predicted_classes(&self) -> &[usize] {
        &self.predicted
    }

    pub fn class_count(&self) -> usize {
        self.actual.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn partitions_agree(&self) -> bool {
        self.actual == self.predicted
    }
}

/// Partition the labels into isomorphism classes by character equality and
/// compare against the predicted invariant (D, λ_i restricted to the fixed
/// set).  Requires `a ↦ a + a*` to be surjective onto the fixed set — the
/// hypothesis under which the invariant is complete.
pub fn classify<'g>(
    group: &'g UnipotentGroup,
    labels: &[RepLabel],
) -> Result<Classification, RepError> {
    let ring = group.ring();
    if !lambda_surjective(ring) {
        return Err(RepError::TraceNotSurjective {
            ring: ring.spec_string(),
        });
    }
    let mut actual = Vec::with_capacity(labels.len());
    let mut seen: HashMap<String, usize> = HashMap::new();
    for label in labels {
        let table = character_of_v(group, label)?;
        let next = seen.len();
        let id = *seen.entry(table.fingerprint()).or_insert(next);
        actual.push(id);
    }
    let mut predicted = Vec::with_capacity(labels.len());
    let mut seen_keys: HashMap<(Vec<usize>, Vec<Vec<u64>>), usize> = HashMap::new();
    for label in labels {
        let key = (
            label.d.clone(),
            label
                .lambdas
                .iter()
                .map(|lam| lam.fixed_restriction_exponents(ring))
                .collect::<Vec<_>>(),
        );
        let next = seen_keys.len();
        let id = *seen_keys.entry(key).or_insert(next);
        predicted.push(id);
    }
    Ok(Classification {
        labels: labels.to_vec(),
        actual,
        predicted,
    })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn group(spec: &str, n: usize) -> UnipotentGroup {
        let ring = InvolutiveRing::parse(spec).unwrap();
        UnipotentGroup::with_default_cap(ring, n).unwrap()
    }

    fn trivial_table<'g>(dom: Subgroup<'g>) -> CharacterTable<'g> {
        let conductor = dom.group().ring().exponent();
        CharacterTable::from_fn(dom, |_| Cyclotomic::one(conductor))
    }

    #[test]
    fn induction_from_the_whole_group_changes_nothing() {
        let g = group("Z/3", 2);
        let full = g.full();
        let adm = admissible_characters(g.ring());
        let w = ModuleVector::basis_v(2, 2);
        // C ⋊ L_{v_2} is all of P when n = 2, so the point character lives
        // on the full group and induction is the identity on tables.
        let chi = point_character(&full, &w, &adm[0]).unwrap();
        let ind = induce(&chi, &full).unwrap();
        assert!(chi.equal_values(&ind));
        assert_eq!(chi.degree(), 1);
    }

    #[test]
    fn trivial_character_facts() {
        let g = group("Z/3", 2);
        let full = g.full();
        let triv = trivial_table(full.clone());
        assert_eq!(triv.inner_product(&triv).unwrap(), BigRational::one());
        let adm = admissible_characters(g.ring());
        let label = RepLabel::new(g.ring(), 2, &[1], &[adm[0]]).unwrap();
        let table = character_of_v(&g, &label).unwrap();
        // tensoring with the trivial character changes nothing
        assert!(table.tensor(&triv).unwrap().equal_values(&table));
        // the inertia group of the trivial character is everything
        let c = g.subgroup(SubgroupSpec::Hermitian).unwrap();
        let triv_c = trivial_table(c);
        let inertia = inertia_group(&triv_c, &full).unwrap();
        assert_eq!(inertia.len() as u128, full.order());
    }

    #[test]
    fn point_characters_are_multiplicative() {
        let g = group("Z/3", 2);
        let ring = g.ring();
        let dom = g
            .subgroup(SubgroupSpec::HermitianVectorStabilizer(1))
            .unwrap();
        let adm = admissible_characters(ring);
        let w = ModuleVector::basis_v(2, 1);
        let chi = point_character(&dom, &w, &adm[0]).unwrap();
        let elements: Vec<GroupElement> = dom.elements().collect();
        for a in &elements {
            for b in &elements {
                let ab = g.multiply(a, b);
                let lhs = chi.value(&ab).unwrap();
                let rhs = chi.value(a).unwrap().mul(chi.value(b).unwrap());
                assert_eq!(*lhs, rhs, "multiplicativity on all pairs");
            }
        }
        // a singleton index set gives the same table as the plain point
        // character
        let label = RepLabel::new(ring, 2, &[1], &[adm[0]]).unwrap();
        let product = product_point_character(&dom, &label).unwrap();
        assert!(product.equal_values(&chi));
    }

    #[test]
    fn point_character_rejects_bad_inputs() {
        let g = group("Z/3", 2);
        let adm = admissible_characters(g.ring());
        let full = g.full();
        // the full group moves v_1
        let w = ModuleVector::basis_v(2, 1);
        assert!(matches!(
            point_character(&full, &w, &adm[0]),
            Err(RepError::NotStabilized { .. })
        ));
        // a vector with a u-component is outside the allowed span
        let bad = ModuleVector::basis_u(2, 1);
        let dom = g
            .subgroup(SubgroupSpec::HermitianVectorStabilizer(1))
            .unwrap();
        assert!(matches!(
            point_character(&dom, &bad, &adm[0]),
            Err(RepError::PointOutsideSpan)
        ));
    }

    #[test]
    fn induced_degrees_follow_the_index() {
        for (spec, n) in [("Z/3", 2), ("Z/5", 2), ("Z/3", 3)] {
            let g = group(spec, n);
            let ring = g.ring();
            let size = ring.size();
            let adm = admissible_characters(ring);
            let full = g.full();
            for i in 1..=n {
                let dom = g
                    .subgroup(SubgroupSpec::HermitianVectorStabilizer(i))
                    .unwrap();
                let w = ModuleVector::basis_v(n, i);
                let chi = point_character(&dom, &w, &adm[0]).unwrap();
                let induced = induce(&chi, &full).unwrap();
                assert_eq!(
                    induced.degree(),
                    size.pow((n - i) as u32),
                    "degree |A|^(n-i) over {spec}, i={i}"
                );
            }
        }
    }

    #[test]
    fn the_family_is_irreducible_at_the_smallest_case() {
        let g = group("Z/3", 2);
        let ring = g.ring();
        let one = BigRational::one();
        for label in all_labels(ring, 2) {
            let table = character_of_v(&g, &label).unwrap();
            assert_eq!(
                table.inner_product(&table).unwrap(),
                one,
                "norm one for {}",
                label.describe(ring)
            );
            let expected: u64 = label
                .indices()
                .iter()
                .map(|&i| ring.size().pow((2 - i) as u32))
                .product();
            assert_eq!(table.degree(), expected);
        }
        // the two-step inductions have norm one as well
        let adm = admissible_characters(ring);
        for i in 1..=2usize {
            let inner = g
                .subgroup(SubgroupSpec::Pattern {
                    s_level: i,
                    row_count: i - 1,
                })
                .unwrap();
            let mid = g
                .subgroup(SubgroupSpec::Pattern {
                    s_level: i,
                    row_count: i,
                })
                .unwrap();
            let w = ModuleVector::basis_v(2, i);
            for lam in &adm {
                let chi = point_character(&inner, &w, lam).unwrap();
                let u = induce(&chi, &mid).unwrap();
                assert_eq!(u.inner_product(&u).unwrap(), one);
                assert_eq!(u.degree(), ring.size().pow((2 - i) as u32));
            }
        }
    }

    #[test]
    fn restriction_to_the_middle_group_matches_the_inner_induction() {
        let g = group("Z/3", 2);
        let ring = g.ring();
        let adm = admissible_characters(ring);
        let full = g.full();
        for i in 1..=2usize {
            let inner = g
                .subgroup(SubgroupSpec::Pattern {
                    s_level: i,
                    row_count: i - 1,
                })
                .unwrap();
            let mid = g
                .subgroup(SubgroupSpec::Pattern {
                    s_level: i,
                    row_count: i,
                })
                .unwrap();
            let stab = g
                .subgroup(SubgroupSpec::HermitianVectorStabilizer(i))
                .unwrap();
            let w = ModuleVector::basis_v(2, i);
            for lam in &adm {
                let u = induce(&point_character(&inner, &w, lam).unwrap(), &mid).unwrap();
                let v = induce(&point_character(&stab, &w, lam).unwrap(), &full).unwrap();
                let restricted = v.restrict(&mid).unwrap();
                assert!(
                    restricted.equal_values(&u),
                    "restriction equals the two-step induction, i={i}"
                );
            }
        }
    }

    #[test]
    fn inertia_of_the_point_character_is_the_predicted_subgroup() {
        let g = group("Z/3", 2);
        let ring = g.ring();
        let adm = admissible_characters(ring);
        for i in 1..=2usize {
            let c_i = g.subgroup(SubgroupSpec::HermitianLevel(i)).unwrap();
            let n_i = g
                .subgroup(SubgroupSpec::Pattern {
                    s_level: i,
                    row_count: i,
                })
                .unwrap();
            let n_i0 = g
                .subgroup(SubgroupSpec::Pattern {
                    s_level: i,
                    row_count: i - 1,
                })
                .unwrap();
            let w = ModuleVector::basis_v(2, i);
            for lam in &adm {
                let chi = point_character(&c_i, &w, lam).unwrap();
                let inertia = inertia_group(&chi, &n_i).unwrap();
                let expected: std::collections::HashSet<GroupElement> =
                    n_i0.elements().collect();
                let got: std::collections::HashSet<GroupElement> =
                    inertia.into_iter().collect();
                assert_eq!(got, expected, "inertia at i={i}");
            }
            // a character that is NOT left admissible stabilizes more: the
            // trivial character is fixed by everything
            let triv = LinearCharacter::trivial(ring);
            let chi = point_character(&c_i, &w, &triv).unwrap();
            let inertia = inertia_group(&chi, &n_i).unwrap();
            assert_eq!(inertia.len() as u128, n_i.order());
        }
    }

    #[test]
    fn tensor_products_certify_the_monomial_model() {
        let g = group("Z/3", 2);
        for label in all_labels(g.ring(), 2) {
            assert!(
                verify_monomial(&g, &label).unwrap(),
                "monomial model for {}",
                label.describe(g.ring())
            );
        }
    }

    #[test]
    fn lower_groups_act_trivially_on_higher_labels() {
        let g = group("Z/3", 3);
        let ring = g.ring();
        let adm = admissible_characters(ring);
        // the table for D = {2} restricted to N_1 is constant at its degree
        let label = RepLabel::new(ring, 3, &[2], &[adm[0]]).unwrap();
        let table = character_of_v(&g, &label).unwrap();
        let n_1 = g
            .subgroup(SubgroupSpec::Pattern {
                s_level: 1,
                row_count: 1,
            })
            .unwrap();
        let restricted = table.restrict(&n_1).unwrap();
        let degree = Cyclotomic::from_integer(ring.exponent(), table.degree() as i64);
        assert!(restricted.values().iter().all(|v| *v == degree));
    }

    #[test]
    fn classification_matches_the_fixed_restriction_invariant() {
        let g = group("Z/5", 2);
        let ring = g.ring();
        let adm = admissible_characters(ring);
        // D = {2} fixed, λ ranging: four distinct classes
        let labels: Vec<RepLabel> = adm
            .iter()
            .map(|lam| RepLabel::new(ring, 2, &[2], &[*lam]).unwrap())
            .collect();
        let cls = classify(&g, &labels).unwrap();
        assert!(cls.partitions_agree());
        assert_eq!(cls.class_count(), 4);
        // the full family over Z/5: identity involution separates everything
        let labels = all_labels(ring, 2);
        let cls = classify(&g, &labels).unwrap();
        assert!(cls.partitions_agree());
        assert_eq!(cls.class_count(), labels.len());
        // the hypothesis of the invariant fails over Z/2
        let g2 = group("Z/2", 2);
        assert!(matches!(
            classify(&g2, &[]),
            Err(RepError::TraceNotSurjective { .. })
        ));
    }

    #[test]
    fn labels_enumerate_choice_functions() {
        let g = group("Z/3", 2);
        let ring = g.ring();
        let labels = all_labels(ring, 2);
        // 2 admissible characters: 2 + 2 + 4 labels over the three subsets
        assert_eq!(labels.len(), 8);
        let adm = admissible_characters(ring);
        assert!(matches!(
            RepLabel::new(ring, 2, &[], &[]),
            Err(RepError::BadIndexSet)
        ));
        assert!(matches!(
            RepLabel::new(ring, 2, &[2, 1], &[adm[0], adm[1]]),
            Err(RepError::BadIndexSet)
        ));
        assert!(matches!(
            RepLabel::new(ring, 2, &[3], &[adm[0]]),
            Err(RepError::BadIndexSet)
        ));
        assert!(matches!(
            RepLabel::new(ring, 2, &[1, 2], &[adm[0]]),
            Err(RepError::LambdaCount { .. })
        ));
        assert!(matches!(
            RepLabel::new(ring, 2, &[1], &[LinearCharacter::trivial(ring)]),
            Err(RepError::NotAdmissible { position: 0 })
        ));
    }
}
