//! Liftings of the quantum plane: datum validation, the algebra on its PBW
//! basis, class subalgebras, antipode, integral and identity checks.

mod datum;
mod hopf;
mod pbw;

pub use datum::{CaseTag, DatumError, DatumParams, ExactScalar, LiftingDatum, Potency, ScalarTerm, Violation};
pub use hopf::{CommutatorFailure, IntegralChecks, RelationFailure};
pub use pbw::{Monomial, PbwEngine};

use crate::abelian::{AbelianGroup, Character, GroupElement};
use crate::cyclo::{Cyclo, CycloField};
use crate::structalg::{StructAlgebra, Vector};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

pub fn char_label(c: &Character) -> String {
    let parts: Vec<String> = c.0.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn elem_label(g: &GroupElement) -> String {
    let parts: Vec<String> = g.0.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// The lifting `H` of a valid datum.
#[derive(Debug)]
pub struct LiftingAlgebra {
    pub datum: LiftingDatum,
    pub params: DatumParams,
    engine: PbwEngine,
    elements: Vec<GroupElement>,
    full: OnceLock<StructAlgebra>,
}

impl LiftingAlgebra {
    pub fn build(datum: &LiftingDatum) -> Result<Self, DatumError> {
        let params = datum.params()?;
        let g = &datum.group;
        let engine = PbwEngine::new(pbw::EngineInput {
            group: g,
            field: &params.field,
            a: g.index_of(&datum.a),
            b: g.index_of(&datum.b),
            chi1: &datum.chi1,
            chi2: &datum.chi2,
            n1: params.n1 as usize,
            n2: params.n2 as usize,
            eps1: datum.eps1,
            eps2: datum.eps2,
            gamma: &params.gamma,
        });
        Ok(LiftingAlgebra {
            datum: datum.clone(),
            elements: g.elements(),
            params,
            engine,
            full: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.datum.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.params.field
    }

    pub fn tag(&self) -> CaseTag {
        self.params.tag
    }

    pub fn n1(&self) -> usize {
        self.params.n1 as usize
    }

    pub fn n2(&self) -> usize {
        self.params.n2 as usize
    }

    pub fn gamma(&self) -> &Cyclo {
        &self.params.gamma
    }

    pub fn engine(&self) -> &PbwEngine {
        &self.engine
    }

    pub fn dim(&self) -> usize {
        self.elements.len() * self.n1() * self.n2()
    }

    /// `chi(g)` in the working field.
    pub fn value(&self, chi: &Character, g: &GroupElement) -> Cyclo {
        self.group().evaluate(chi, g, self.field())
    }

    pub fn index(&self, g: usize, i: usize, j: usize) -> usize {
        (g * self.n1() + i) * self.n2() + j
    }

    pub fn monomial(&self, idx: usize) -> Monomial {
        let (n1, n2) = (self.n1(), self.n2());
        (idx / (n1 * n2), (idx / n2) % n1, idx % n2)
    }

    /// The full algebra, built on first use.
    pub fn algebra(&self) -> &StructAlgebra {
        self.full.get_or_init(|| {
            let field = self.field().clone();
            let labels = (0..self.dim())
                .map(|k| {
                    let (g, i, j) = self.monomial(k);
                    format!("{}x^{}y^{}", elem_label(&self.elements[g]), i, j)
                })
                .collect();
            let unit = Vector::unit(0, &field);
            StructAlgebra::from_fn(&field, labels, unit, |p, q| {
                let terms = self.engine.product(self.monomial(p), self.monomial(q));
                Vector::from_pairs(terms.into_iter().map(|((g, i, j), c)| (self.index(g, i, j), c)))
            })
            .expect("PBW products stay in range")
        })
    }

    pub fn group_element(&self, g: &GroupElement) -> Vector {
        Vector::unit(self.index(self.group().index_of(g), 0, 0), self.field())
    }

    pub fn x(&self) -> Vector {
        Vector::unit(self.index(0, 1, 0), self.field())
    }

    pub fn y(&self) -> Vector {
        Vector::unit(self.index(0, 0, 1), self.field())
    }

    /// Basis indices of `x`, `y` and the standard generators of `G`.
    pub fn generator_indices(&self) -> Vec<usize> {
        let g = self.group();
        let mut out: Vec<usize> = (0..g.rank())
            .filter(|&t| g.factors()[t] > 1)
            .map(|t| {
                let mut e = vec![0i64; g.rank()];
                e[t] = 1;
                self.index(g.index_of(&g.element(&e).expect("in range")), 0, 0)
            })
            .collect();
        out.push(self.index(0, 1, 0));
        out.push(self.index(0, 0, 1));
        out
    }

    /// Number of classes `lambda X`.
    pub fn class_count(&self) -> usize {
        self.params.chars.cosets.len()
    }

    pub fn class(&self, k: usize) -> ClassSubalgebra {
        ClassSubalgebra::build(self, k)
    }

    /// One subalgebra per coset of `X`, built directly from the straightened words.
    pub fn class_decomposition(&self) -> Vec<ClassSubalgebra> {
        crate::par::map_range(self.class_count(), |k| self.class(k))
    }

    /// `e_mu = |G|^-1 sum_g mu(g^-1) g` in `H`.
    pub fn weight_idempotent(&self, mu: &Character) -> Vector {
        let coeffs = self.group().idempotent(mu, self.field());
        Vector::from_pairs(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(g, c)| (self.index(g, 0, 0), c)),
        )
    }

    /// Image in `H` of an element of a class subalgebra.
    pub fn embed(&self, class: &ClassSubalgebra, v: &Vector) -> Vector {
        let mut acc = crate::structalg::Accumulator::new(self.dim());
        for (idx, c) in v.iter() {
            let (mk, i, j) = class.monomial(*idx);
            let e = self.weight_idempotent(&class.coset[mk]);
            for (gidx, w) in e.iter() {
                let (g, _, _) = self.monomial(*gidx);
                acc.add(self.index(g, i, j), &(c * w));
            }
        }
        acc.take()
    }
}

/// The subalgebra `H e_{lambda X}`, on the basis `e_mu x^i y^j`.
#[derive(Clone, Debug)]
pub struct ClassSubalgebra {
    pub coset_index: usize,
    /// The characters of `lambda X`, sorted; `coset[0]` is the representative.
    pub coset: Vec<Character>,
    pub algebra: StructAlgebra,
    n1: usize,
    n2: usize,
    // mu(g) for each coset member and group element, as exponents of zeta_E
    values: Vec<Vec<u32>>,
    exponent: u32,
}

impl ClassSubalgebra {
    fn build(h: &LiftingAlgebra, k: usize) -> Self {
        let g = h.group();
        let coset = h.params.chars.cosets[k].clone();
        let (n1, n2) = (h.n1(), h.n2());
        let field = h.field().clone();
        let pos: HashMap<usize, usize> = coset
            .iter()
            .enumerate()
            .map(|(p, c)| (g.char_index(c), p))
            .collect();
        let values: Vec<Vec<u32>> = coset
            .iter()
            .map(|mu| h.elements.iter().map(|e| g.value_exponent(mu, e)).collect())
            .collect();
        // position of nu chi1^i chi2^j
        let shift: Vec<usize> = coset
            .iter()
            .flat_map(|nu| {
                let pos = &pos;
                (0..n1).flat_map(move |i| {
                    (0..n2).map(move |j| {
                        let t = g.char_mul(
                            &g.char_mul(nu, &g.char_pow(&h.datum.chi1, i as i64)),
                            &g.char_pow(&h.datum.chi2, j as i64),
                        );
                        pos[&g.char_index(&t)]
                    })
                })
            })
            .collect();
        let r = coset.len();
        let dim = r * n1 * n2;
        let idx = |mk: usize, i: usize, j: usize| (mk * n1 + i) * n2 + j;
        let labels = (0..dim)
            .map(|t| {
                let (mk, i, j) = (t / (n1 * n2), (t / n2) % n1, t % n2);
                format!("e{}x^{}y^{}", char_label(&coset[mk]), i, j)
            })
            .collect();
        let unit = Vector::from_pairs((0..r).map(|mk| (idx(mk, 0, 0), Cyclo::one(&field))));
        let engine = &h.engine;
        let algebra = StructAlgebra::from_fn(&field, labels, unit, |p, q| {
            let (mk, i, j) = (p / (n1 * n2), (p / n2) % n1, p % n2);
            let (nk, kk, l) = (q / (n1 * n2), (q / n2) % n1, q % n2);
            if shift[(nk * n1 + i) * n2 + j] != mk {
                return Vector::zero();
            }
            let mut acc = crate::structalg::Accumulator::new(dim);
            for ((t, c, d), v) in engine.word(i, j, kk, l) {
                acc.add(idx(mk, *c, *d), &(v * &engine.root(values[mk][*t] as i64)));
            }
            acc.take()
        })
        .expect("class products stay in range");
        ClassSubalgebra {
            coset_index: k,
            coset,
            algebra,
            n1,
            n2,
            values,
            exponent: g.exponent(),
        }
    }

    pub fn representative(&self) -> &Character {
        &self.coset[0]
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn index(&self, mk: usize, i: usize, j: usize) -> usize {
        (mk * self.n1 + i) * self.n2 + j
    }

    pub fn monomial(&self, t: usize) -> Monomial {
        let (n1, n2) = (self.n1, self.n2);
        (t / (n1 * n2), (t / n2) % n1, t % n2)
    }

    pub fn position(&self, mu: &Character) -> Option<usize> {
        self.coset.iter().position(|c| c == mu)
    }

    /// `e_mu` for the `mk`-th member of the coset.
    pub fn weight_idempotent(&self, mk: usize) -> Vector {
        Vector::unit(self.index(mk, 0, 0), self.field())
    }

    /// Labelled weight idempotents, for Loewy censuses.
    pub fn weights(&self) -> Vec<(String, Vector)> {
        (0..self.coset.len())
            .map(|mk| (char_label(&self.coset[mk]), self.weight_idempotent(mk)))
            .collect()
    }

    /// The image of the group element with index `g`: `sum_mu mu(g) e_mu`.
    pub fn group_element(&self, g: usize) -> Vector {
        let field = self.field();
        let scale = (field.conductor() / self.exponent) as i64;
        Vector::from_pairs((0..self.coset.len()).map(|mk| {
            (
                self.index(mk, 0, 0),
                Cyclo::zeta_pow(field, scale * self.values[mk][g] as i64),
            )
        }))
    }

    pub fn x(&self) -> Vector {
        let f = self.field();
        Vector::from_pairs((0..self.coset.len()).map(|mk| (self.index(mk, 1, 0), Cyclo::one(f))))
    }

    pub fn y(&self) -> Vector {
        let f = self.field();
        Vector::from_pairs((0..self.coset.len()).map(|mk| (self.index(mk, 0, 1), Cyclo::one(f))))
    }

    /// Basis indices whose left-normed products span the algebra.
    pub fn generator_indices(&self) -> Vec<usize> {
        (0..self.coset.len())
            .flat_map(|mk| [self.index(mk, 0, 0), self.index(mk, 1, 0), self.index(mk, 0, 1)])
            .collect()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn datum_a() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(3),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![1]),
            chi2: Character(vec![2]),
            eps1: false,
            eps2: false,
            gamma: ExactScalar::int(1),
        }
    }

    pub fn datum_b() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(4),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![2]),
            chi2: Character(vec![2]),
            eps1: true,
            eps2: true,
            gamma: ExactScalar::zero(),
        }
    }

    /// `Z_3 x Z_3`, `chi_i(g_j) = delta_ij zeta_3`, `a = g_1`, `b = g_2`.
    pub fn z3_squared() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::new(vec![3, 3]).unwrap(),
            a: GroupElement(vec![1, 0]),
            b: GroupElement(vec![0, 1]),
            chi1: Character(vec![1, 0]),
            chi2: Character(vec![0, 1]),
            eps1: false,
            eps2: false,
            gamma: ExactScalar::zero(),
        }
    }

    /// A linked unipotent datum on `Z_6`: `x^3 = a^3 - 1`, `y^3 = b^3 - 1`.
    pub fn linked_unipotent() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(6),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![2]),
            chi2: Character(vec![4]),
            eps1: true,
            eps2: true,
            gamma: ExactScalar::int(1),
        }
    }
}
