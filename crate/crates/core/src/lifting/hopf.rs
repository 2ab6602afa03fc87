use super::LiftingAlgebra;
use crate::abelian::GroupElement;
use crate::cyclo::{q_int, Cyclo};
use crate::structalg::Vector;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("defining relation ({relation}) fails: {detail}")]
pub struct RelationFailure {
    pub relation: u8,
    pub detail: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("braided commutator identity fails at s = {s} ({side})")]
pub struct CommutatorFailure {
    pub s: u32,
    pub side: &'static str,
}

/// Which of the annihilation and invariance properties the integral has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralChecks {
    pub x_left: bool,
    pub x_right: bool,
    pub y_left: bool,
    pub y_right: bool,
    pub group_left: bool,
    pub group_right: bool,
}

impl IntegralChecks {
    pub fn all(&self) -> bool {
        self.x_left && self.x_right && self.y_left && self.y_right && self.group_left && self.group_right
    }
}

fn fail(relation: u8, detail: impl Into<String>) -> Result<(), RelationFailure> {
    Err(RelationFailure {
        relation,
        detail: detail.into(),
    })
}

impl LiftingAlgebra {
    fn generators_of_group(&self) -> Vec<GroupElement> {
        let g = self.group();
        (0..g.rank())
            .map(|t| {
                let mut e = vec![0i64; g.rank()];
                e[t] = 1;
                g.element(&e).expect("in range")
            })
            .collect()
    }

    fn eps_scalar(&self, on: bool) -> Cyclo {
        Cyclo::from_int(self.field(), on as i64)
    }

    /// Checks the five defining relations as element identities in `H`.
    pub fn check_relations(&self) -> Result<(), RelationFailure> {
        let alg = self.algebra();
        let g = self.group();
        let d = &self.datum;
        let one = alg.unit().clone();
        let (x, y) = (self.x(), self.y());

        let xn = alg.pow(&x, self.n1() as u32);
        let an = self.group_element(&g.pow(&d.a, self.n1() as i64));
        if xn != an.sub(&one).scale(&self.eps_scalar(d.eps1)) {
            return fail(1, "x^n1 != eps1 (a^n1 - 1)");
        }
        let yn = alg.pow(&y, self.n2() as u32);
        let bn = self.group_element(&g.pow(&d.b, self.n2() as i64));
        if yn != bn.sub(&one).scale(&self.eps_scalar(d.eps2)) {
            return fail(2, "y^n2 != eps2 (b^n2 - 1)");
        }
        for h in g.elements() {
            let hv = self.group_element(&h);
            let lhs = alg.mul(&hv, &x);
            let rhs = alg.mul(&x, &hv).scale(&self.value(&d.chi1, &h));
            if lhs != rhs {
                return fail(3, format!("g x != chi1(g) x g at g = {:?}", h.0));
            }
            let lhs = alg.mul(&hv, &y);
            let rhs = alg.mul(&y, &hv).scale(&self.value(&d.chi2, &h));
            if lhs != rhs {
                return fail(4, format!("g y != chi2(g) y g at g = {:?}", h.0));
            }
        }
        let q = self.value(&d.chi2, &d.a);
        let lhs = alg.mul(&x, &y).sub(&alg.mul(&y, &x).scale(&q));
        let ab = self.group_element(&g.mul(&d.a, &d.b));
        if lhs != ab.sub(&one).scale(self.gamma()) {
            return fail(5, "xy - chi2(a) yx != gamma (ab - 1)");
        }
        Ok(())
    }

    /// `S` on every basis element: `S(g x^i y^j) = S(y)^j S(x)^i g^-1`.
    pub fn antipode_table(&self) -> Vec<Vector> {
        let alg = self.algebra();
        let g = self.group();
        let d = &self.datum;
        let minus = Cyclo::from_int(self.field(), -1);
        let sx = alg.mul(&self.group_element(&g.inv(&d.a)), &self.x()).scale(&minus);
        let sy = alg.mul(&self.group_element(&g.inv(&d.b)), &self.y()).scale(&minus);
        let elems = g.elements();
        crate::par::map_range(self.dim(), |k| {
            let (gi, i, j) = self.monomial(k);
            let mut acc = alg.pow(&sy, j as u32);
            acc = alg.mul(&acc, &alg.pow(&sx, i as u32));
            alg.mul(&acc, &self.group_element(&g.inv(&elems[gi])))
        })
    }

    pub fn antipode(&self, u: &Vector) -> Vector {
        apply(&self.antipode_table(), u)
    }

    /// `S(u v) = S(v) S(u)` for every basis `u` and generator `v`.
    pub fn antipode_is_antimultiplicative(&self) -> bool {
        let alg = self.algebra();
        let s = self.antipode_table();
        let gens = self.generator_indices();
        (0..self.dim()).all(|u| {
            gens.iter().all(|&v| {
                let lhs = apply(&s, alg.product(u, v));
                let rhs = alg.mul(&s[v], &s[u]);
                lhs == rhs
            })
        })
    }

    /// Some `g` with `S^2(u) = g u g^-1` on the generators, if one exists.
    pub fn antipode_square_conjugator(&self) -> Option<GroupElement> {
        let alg = self.algebra();
        let s = self.antipode_table();
        let g = self.group();
        let gens = self.generator_indices();
        let squares: Vec<Vector> = gens.iter().map(|&v| apply(&s, &s[v])).collect();
        g.elements().into_iter().find(|c| {
            let cv = self.group_element(c);
            let ci = self.group_element(&g.inv(c));
            gens.iter().zip(&squares).all(|(&v, sq)| {
                &alg.mul(&alg.mul(&cv, &alg.basis(v)), &ci) == sq
            })
        })
    }

    /// `I = e x^(n1-1) y^(n2-1)` with `e = |G|^-1 sum_g g`.
    pub fn integral(&self) -> Vector {
        let alg = self.algebra();
        let e = self.weight_idempotent(&self.group().trivial_character());
        let xy = Vector::unit(self.index(0, self.n1() - 1, self.n2() - 1), self.field());
        alg.mul(&e, &xy)
    }

    pub fn integral_checks(&self) -> IntegralChecks {
        let alg = self.algebra();
        let i = self.integral();
        let (x, y) = (self.x(), self.y());
        let gens = self.generators_of_group();
        IntegralChecks {
            x_left: alg.mul(&x, &i).is_zero(),
            x_right: alg.mul(&i, &x).is_zero(),
            y_left: alg.mul(&y, &i).is_zero(),
            y_right: alg.mul(&i, &y).is_zero(),
            group_left: gens.iter().all(|g| alg.mul(&self.group_element(g), &i) == i),
            group_right: gens.iter().all(|g| alg.mul(&i, &self.group_element(g)) == i),
        }
    }

    /// For `1 <= s <= s_max`, with `q = chi2(a)`:
    /// `x y^s - q^s y^s x = gamma (s)_q y^(s-1) (q^(s-1) ab - 1)` and
    /// `y x^s - q^-s x^s y = -gamma q^-s (s)_q x^(s-1) (q^-(s-1) ab - 1)`.
    pub fn check_braided_commutators(&self, s_max: u32) -> Result<(), CommutatorFailure> {
        let alg = self.algebra();
        let g = self.group();
        let d = &self.datum;
        let q = self.value(&d.chi2, &d.a);
        let q_inv = q.inv().expect("root of unity");
        let gamma = self.gamma();
        let ab = self.group_element(&g.mul(&d.a, &d.b));
        let one = alg.unit().clone();
        let (x, y) = (self.x(), self.y());
        let mut ys = one.clone();
        let mut xs = one.clone();
        for s in 1..=s_max {
            let ys_prev = ys.clone();
            let xs_prev = xs.clone();
            ys = alg.mul(&ys, &y);
            xs = alg.mul(&xs, &x);
            let qs = q.pow_u(s as u64);
            let qs_inv = q_inv.pow_u(s as u64);
            let qi = q_int(s, &q);

            let lhs = alg.mul(&x, &ys).sub(&alg.mul(&ys, &x).scale(&qs));
            let tail = ab.scale(&q.pow_u(s as u64 - 1)).sub(&one);
            let rhs = alg.mul(&ys_prev, &tail).scale(&(gamma * &qi));
            if lhs != rhs {
                return Err(CommutatorFailure { s, side: "x against y^s" });
            }

            let lhs = alg.mul(&y, &xs).sub(&alg.mul(&xs, &y).scale(&qs_inv));
            let tail = ab.scale(&q_inv.pow_u(s as u64 - 1)).sub(&one);
            let coef = -&(&(gamma * &qs_inv) * &qi);
            let rhs = alg.mul(&xs_prev, &tail).scale(&coef);
            if lhs != rhs {
                return Err(CommutatorFailure { s, side: "y against x^s" });
            }
        }
        Ok(())
    }
}

fn apply(table: &[Vector], u: &Vector) -> Vector {
    let dim = table.len();
    let mut acc = crate::structalg::Accumulator::new(dim);
    for (k, c) in u.iter() {
        acc.add_scaled(c, &table[*k]);
    }
    acc.take()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{ExactScalar, LiftingDatum};
    use crate::abelian::{AbelianGroup, Character};
    use super::*;

    #[test]
    fn antipode_basics() {
        for d in [datum_a(), datum_b(), linked_unipotent()] {
            let h = LiftingAlgebra::build(&d).unwrap();
            let alg = h.algebra();
            assert_eq!(&h.antipode(alg.unit()), alg.unit());
            let g = h.group_element(&d.a);
            assert_eq!(&alg.mul(&h.antipode(&g), &g), alg.unit());
            assert!(h.antipode_is_antimultiplicative());
        }
    }

    /// `S^2` is conjugation by `a^-1` on linked data, with no sign.
    #[test]
    fn antipode_square_is_inner() {
        for d in [datum_a(), linked_unipotent()] {
            let h = LiftingAlgebra::build(&d).unwrap();
            let alg = h.algebra();
            let c = h.antipode_square_conjugator().expect("inner");
            let gr = h.group();
            let conj = |u: &Vector, g: &GroupElement| {
                alg.mul(&alg.mul(&h.group_element(g), u), &h.group_element(&gr.inv(g)))
            };
            let a_inv = gr.inv(&d.a);
            let x = h.x();
            let s2x = h.antipode(&h.antipode(&x));
            assert_eq!(s2x, conj(&x, &a_inv));
            assert_ne!(s2x, conj(&x, &a_inv).neg());
            assert_eq!(conj(&x, &c), s2x);
        }
    }

    /// Unlinked, chi1 = chi2 on Z_3 with b = a^2: x and y are scaled by
    /// different roots, which no group element does.
    #[test]
    fn antipode_square_can_be_outer_when_unlinked() {
        let d = LiftingDatum {
            group: AbelianGroup::cyclic(3),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![2]),
            chi1: Character(vec![1]),
            chi2: Character(vec![1]),
            eps1: false,
            eps2: false,
            gamma: ExactScalar::zero(),
        };
        assert!(!d.validate().unwrap().linked);
        let h = LiftingAlgebra::build(&d).unwrap();
        assert!(h.antipode_is_antimultiplicative());
        assert_eq!(h.antipode_square_conjugator(), None);
    }

    #[test]
    fn integral_on_linked_data() {
        for d in [datum_a(), linked_unipotent()] {
            let h = LiftingAlgebra::build(&d).unwrap();
            let checks = h.integral_checks();
            assert!(checks.all(), "{checks:?}");
            assert!(!h.integral().is_zero());
        }
    }

    #[test]
    fn braided_commutators() {
        for d in [datum_a(), datum_b(), linked_unipotent()] {
            let h = LiftingAlgebra::build(&d).unwrap();
            let n = h.n1().min(h.n2()) as u32;
            h.check_braided_commutators(n).unwrap();
        }
    }

    #[test]
    fn datum_a_top_commutator_vanishes() {
        let h = LiftingAlgebra::build(&datum_a()).unwrap();
        let alg = h.algebra();
        let q = h.value(&h.datum.chi2, &h.datum.a);
        let y3 = alg.pow(&h.y(), 3);
        let lhs = alg.mul(&h.x(), &y3).sub(&alg.mul(&y3, &h.x()).scale(&q.pow_u(3)));
        assert!(lhs.is_zero());
    }
}
