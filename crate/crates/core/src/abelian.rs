//! Finite abelian groups in cyclic-factor form, their characters and the
//! group-algebra idempotents attached to characters and character cosets.

use crate::cyclo::{Cyclo, CycloField};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic factor orders must be positive")]
    BadFactor,
    #[error("expected {expected} exponents, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(pub Vec<u32>);

/// `chi(g_j) = zeta_{m_j}^{c_j}` on the j-th cyclic generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character(pub Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self, GroupError> {
        if factors.iter().any(|&m| m == 0) {
            return Err(GroupError::BadFactor);
        }
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(n: u32) -> Self {
        AbelianGroup { factors: vec![n] }
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&m| m as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1, |a, &m| a.lcm(&m))
    }

    fn check(&self, len: usize) -> Result<(), GroupError> {
        if len != self.rank() {
            return Err(GroupError::ShapeMismatch {
                expected: self.rank(),
                got: len,
            });
        }
        Ok(())
    }

    /// Reduce raw integers into a group element.
    pub fn element(&self, exps: &[i64]) -> Result<GroupElement, GroupError> {
        self.check(exps.len())?;
        Ok(GroupElement(
            exps.iter()
                .zip(&self.factors)
                .map(|(&e, &m)| e.rem_euclid(m as i64) as u32)
                .collect(),
        ))
    }

    pub fn character(&self, exps: &[i64]) -> Result<Character, GroupError> {
        self.element(exps).map(|g| Character(g.0))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn trivial_character(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    /// Mixed-radix index, first coordinate most significant (lexicographic).
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.0.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&e, &m)| acc * m as usize + e as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut v = vec![0u32; self.rank()];
        for j in (0..self.rank()).rev() {
            let m = self.factors[j] as usize;
            v[j] = (idx % m) as u32;
            idx /= m;
        }
        GroupElement(v)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    /// All characters in lexicographic order.
    pub fn characters(&self) -> Vec<Character> {
        (0..self.order())
            .map(|i| Character(self.element_at(i).0))
            .collect()
    }

    pub fn char_index(&self, c: &Character) -> usize {
        self.index_of(&GroupElement(c.0.clone()))
    }

    fn combine(&self, a: &[u32], b: &[u32], sign: i64) -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &m)| (x as i64 + sign * y as i64).rem_euclid(m as i64) as u32)
            .collect()
    }

    fn scale(&self, a: &[u32], k: i64) -> Vec<u32> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &m)| (x as i64 * k).rem_euclid(m as i64) as u32)
            .collect()
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(self.combine(&g.0, &h.0, 1))
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        GroupElement(self.scale(&g.0, -1))
    }

    pub fn pow(&self, g: &GroupElement, k: i64) -> GroupElement {
        GroupElement(self.scale(&g.0, k))
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        g.0.iter().all(|&e| e == 0)
    }

    pub fn element_order(&self, g: &GroupElement) -> u32 {
        g.0.iter()
            .zip(&self.factors)
            .fold(1, |acc, (&e, &m)| acc.lcm(&(m / m.gcd(&e))))
    }

    pub fn char_mul(&self, a: &Character, b: &Character) -> Character {
        Character(self.combine(&a.0, &b.0, 1))
    }

    pub fn char_inv(&self, a: &Character) -> Character {
        Character(self.scale(&a.0, -1))
    }

    pub fn char_pow(&self, a: &Character, k: i64) -> Character {
        Character(self.scale(&a.0, k))
    }

    pub fn is_trivial(&self, c: &Character) -> bool {
        c.0.iter().all(|&e| e == 0)
    }

    pub fn char_order(&self, c: &Character) -> u32 {
        self.element_order(&GroupElement(c.0.clone()))
    }

    /// `t` with `chi(g) = zeta_E^t`, `E = exp(G)`.
    pub fn value_exponent(&self, chi: &Character, g: &GroupElement) -> u32 {
        let e = self.exponent() as u64;
        let mut t = 0u64;
        for ((&c, &x), &m) in chi.0.iter().zip(&g.0).zip(&self.factors) {
            t += (c as u64 * x as u64 % m as u64) * (e / m as u64);
        }
        (t % e) as u32
    }

    /// Order of the root of unity `chi(g)`.
    pub fn value_order(&self, chi: &Character, g: &GroupElement) -> u32 {
        let e = self.exponent();
        let t = self.value_exponent(chi, g);
        e / e.gcd(&t)
    }

    /// `chi(g)` in a field whose conductor is a multiple of `exp(G)`.
    pub fn evaluate(&self, chi: &Character, g: &GroupElement, field: &Arc<CycloField>) -> Cyclo {
        let m = field.conductor();
        let e = self.exponent();
        assert!(m % e == 0, "conductor {m} not a multiple of exp(G) = {e}");
        Cyclo::zeta_pow(field, (m / e) as i64 * self.value_exponent(chi, g) as i64)
    }

    /// Subgroup of `G` generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        let mut frontier = vec![self.identity()];
        seen.insert(self.identity());
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `{g : chi(g) = 1 for all chi in chars}`.
    pub fn perp_of_characters(&self, chars: &[Character]) -> Vec<GroupElement> {
        self.elements()
            .into_iter()
            .filter(|g| chars.iter().all(|c| self.value_exponent(c, g) == 0))
            .collect()
    }

    /// `{chi : chi(h) = 1 for all h in elems}`.
    pub fn perp_of_elements(&self, elems: &[GroupElement]) -> Vec<Character> {
        self.characters()
            .into_iter()
            .filter(|c| elems.iter().all(|h| self.value_exponent(c, h) == 0))
            .collect()
    }

    /// Values of `lambda` on the elements of `sub`, as exponents of `zeta_E`.
    pub fn restrict_character(&self, lambda: &Character, sub: &[GroupElement]) -> Vec<(GroupElement, u32)> {
        sub.iter()
            .map(|h| (h.clone(), self.value_exponent(lambda, h)))
            .collect()
    }

    /// `e_lambda = |G|^-1 sum_g lambda(g^-1) g`, indexed by element index.
    pub fn idempotent(&self, lambda: &Character, field: &Arc<CycloField>) -> Vec<Cyclo> {
        let inv_order = Cyclo::from_ratio(field, 1, self.order() as i64);
        self.elements()
            .iter()
            .map(|g| &self.evaluate(lambda, &self.inv(g), field) * &inv_order)
            .collect()
    }

    /// `e_{lambda X} = sum_{mu in lambda X} e_mu`.
    pub fn coset_idempotent(
        &self,
        lambda: &Character,
        x: &CharSubgroupData,
        field: &Arc<CycloField>,
    ) -> Vec<Cyclo> {
        let mut acc = vec![Cyclo::zero(field); self.order()];
        for chi in &x.elements {
            let mu = self.char_mul(lambda, chi);
            for (a, b) in acc.iter_mut().zip(self.idempotent(&mu, field)) {
                *a += &b;
            }
        }
        acc
    }

    /// Product in the group algebra, elements indexed by element index.
    pub fn group_algebra_mul(&self, u: &[Cyclo], v: &[Cyclo]) -> Vec<Cyclo> {
        let field = u[0].field().clone();
        let elems = self.elements();
        let mut out = vec![Cyclo::zero(&field); self.order()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = self.index_of(&self.mul(&elems[i], &elems[j]));
                out[k] += &(a * b);
            }
        }
        out
    }
}

/// A subgroup of the character group with its cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSubgroupData {
    pub generators: Vec<Character>,
    pub elements: Vec<Character>,
    /// Each coset sorted; cosets ordered by their least member.
    pub cosets: Vec<Vec<Character>>,
    /// Least member of each coset.
    pub transversal: Vec<Character>,
}

impl CharSubgroupData {
    pub fn generated(group: &AbelianGroup, generators: &[Character]) -> Self {
        let as_elems: Vec<GroupElement> = generators
            .iter()
            .map(|c| GroupElement(c.0.clone()))
            .collect();
        let elements: Vec<Character> = group
            .subgroup(&as_elems)
            .into_iter()
            .map(|g| Character(g.0))
            .collect();
        let mut assigned = vec![false; group.order()];
        let mut cosets = Vec::new();
        for lambda in group.characters() {
            if assigned[group.char_index(&lambda)] {
                continue;
            }
            let mut coset: Vec<Character> = elements
                .iter()
                .map(|chi| group.char_mul(&lambda, chi))
                .collect();
            coset.sort();
            for c in &coset {
                assigned[group.char_index(c)] = true;
            }
            cosets.push(coset);
        }
        let transversal = cosets.iter().map(|c| c[0].clone()).collect();
        CharSubgroupData {
            generators: generators.to_vec(),
            elements,
            cosets,
            transversal,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, c: &Character) -> bool {
        self.elements.binary_search(c).is_ok()
    }

    /// Index of the coset containing `c`.
    pub fn coset_of(&self, c: &Character) -> usize {
        self.cosets
            .iter()
            .position(|co| co.binary_search(c).is_ok())
            .expect("character outside the group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(m: u32) -> Arc<CycloField> {
        CycloField::new(m).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let g = AbelianGroup::cyclic(4);
        let k = field(4);
        let chi = Character(vec![1]);
        assert_eq!(g.evaluate(&chi, &GroupElement(vec![2]), &k), Cyclo::from_int(&k, -1));
        let g2 = AbelianGroup::new(vec![3, 3]).unwrap();
        let k3 = field(3);
        assert!(g2
            .evaluate(&Character(vec![1, 0]), &GroupElement(vec![0, 2]), &k3)
            .is_one());
    }

    #[test]
    fn perp_examples() {
        let g = AbelianGroup::cyclic(4);
        let x = CharSubgroupData::generated(&g, &[Character(vec![2])]);
        assert_eq!(
            g.perp_of_characters(&x.elements),
            vec![GroupElement(vec![0]), GroupElement(vec![2])]
        );
        let all = CharSubgroupData::generated(&g, &[Character(vec![1])]);
        assert_eq!(g.perp_of_characters(&all.elements), vec![g.identity()]);
    }

    #[test]
    fn coset_idempotent_example() {
        let g = AbelianGroup::cyclic(4);
        let k = field(4);
        let x = CharSubgroupData::generated(&g, &[Character(vec![2])]);
        let e = g.coset_idempotent(&g.trivial_character(), &x, &k);
        let half = Cyclo::from_ratio(&k, 1, 2);
        assert_eq!(e, vec![half.clone(), Cyclo::zero(&k), half, Cyclo::zero(&k)]);
    }

    #[test]
    fn idempotent_eigen_property() {
        let g = AbelianGroup::cyclic(3);
        let k = field(3);
        let lambda = Character(vec![1]);
        let e = g.idempotent(&lambda, &k);
        let mut gen = vec![Cyclo::zero(&k); 3];
        gen[1] = Cyclo::one(&k);
        let lhs = g.group_algebra_mul(&gen, &e);
        let z = Cyclo::zeta_pow(&k, 1);
        let rhs: Vec<Cyclo> = e.iter().map(|c| c * &z).collect();
        assert_eq!(lhs, rhs);
    }

    fn small_group() -> impl Strategy<Value = AbelianGroup> {
        prop::collection::vec(1u32..=4, 1..=2).prop_map(|f| AbelianGroup::new(f).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn idempotents_orthogonal_and_complete(g in small_group()) {
            let k = field(g.exponent().max(1));
            let chars = g.characters();
            let es: Vec<Vec<Cyclo>> = chars.iter().map(|c| g.idempotent(c, &k)).collect();
            let mut sum = vec![Cyclo::zero(&k); g.order()];
            for (i, ei) in es.iter().enumerate() {
                for (a, b) in sum.iter_mut().zip(ei) { *a += b; }
                for (j, ej) in es.iter().enumerate() {
                    let p = g.group_algebra_mul(ei, ej);
                    if i == j { prop_assert_eq!(&p, ei); }
                    else { prop_assert!(p.iter().all(|c| c.is_zero())); }
                }
            }
            prop_assert!(sum[0].is_one());
            prop_assert!(sum[1..].iter().all(|c| c.is_zero()));
        }

        #[test]
        fn double_perp_is_identity(g in small_group(), gens in prop::collection::vec(prop::collection::vec(0u32..4, 2), 0..3)) {
            let gens: Vec<Character> = gens.iter()
                .map(|v| g.character(&v[..g.rank()].iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap())
                .collect();
            let x = CharSubgroupData::generated(&g, &gens);
            let p = g.perp_of_characters(&x.elements);
            prop_assert_eq!(x.order() * p.len(), g.order());
            prop_assert_eq!(g.perp_of_elements(&p), x.elements.clone());
        }

        #[test]
        fn coset_idempotents_partition_unity(g in small_group(), c in prop::collection::vec(0u32..4, 2)) {
            let k = field(g.exponent().max(1));
            let chi = g.character(&c[..g.rank()].iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
            let x = CharSubgroupData::generated(&g, &[chi]);
            prop_assert_eq!(x.order() * x.cosets.len(), g.order());
            let mut sum = vec![Cyclo::zero(&k); g.order()];
            let es: Vec<Vec<Cyclo>> = x.transversal.iter().map(|l| g.coset_idempotent(l, &x, &k)).collect();
            for (i, ei) in es.iter().enumerate() {
                for (a, b) in sum.iter_mut().zip(ei) { *a += b; }
                prop_assert_eq!(&g.group_algebra_mul(ei, ei), ei);
                for ej in &es[i + 1..] {
                    prop_assert!(g.group_algebra_mul(ei, ej).iter().all(|c| c.is_zero()));
                }
            }
            prop_assert!(sum[0].is_one());
            // every member of a coset gives the same idempotent
            for (l, e) in x.cosets.iter().zip(&es) {
                for mu in l {
                    prop_assert_eq!(&g.coset_idempotent(mu, &x, &k), e);
                }
            }
        }

        #[test]
        fn coset_idempotent_lives_on_perp(g in small_group(), c in prop::collection::vec(0u32..4, 2), l in prop::collection::vec(0u32..4, 2)) {
            // e_{lambda X} is supported on X-perp, with coefficients |X-perp|^-1 lambda(h^-1)
            let k = field(g.exponent().max(1));
            let to = |v: &Vec<u32>| v[..g.rank()].iter().map(|&x| x as i64).collect::<Vec<_>>();
            let chi = g.character(&to(&c)).unwrap();
            let lambda = g.character(&to(&l)).unwrap();
            let x = CharSubgroupData::generated(&g, &[chi]);
            let p = g.perp_of_characters(&x.elements);
            let e = g.coset_idempotent(&lambda, &x, &k);
            let scale = Cyclo::from_ratio(&k, 1, p.len() as i64);
            for (i, h) in g.elements().iter().enumerate() {
                let expected = if p.contains(h) {
                    &g.evaluate(&lambda, &g.inv(h), &k) * &scale
                } else {
                    Cyclo::zero(&k)
                };
                prop_assert_eq!(&e[i], &expected);
            }
        }
    }
}
