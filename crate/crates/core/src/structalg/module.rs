use super::{left_kernel, AlgebraError, StructAlgebra, Subspace, Vector};
use crate::cyclo::CycloField;
use crate::par;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A left module given by the action of every algebra basis element.
#[derive(Clone, Debug)]
pub struct LeftModule {
    field: Arc<CycloField>,
    dim: usize,
    // action[k][c]: image of the c-th module basis vector under b_k
    action: Vec<Vec<Vector>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoewyReport {
    pub layer_dims: Vec<usize>,
    /// Per layer, the multiplicity of each labelled weight that occurs.
    pub layer_weights: Vec<Vec<(String, usize)>>,
}

impl LeftModule {
    pub fn new(field: &Arc<CycloField>, dim: usize, action: Vec<Vec<Vector>>) -> Self {
        LeftModule {
            field: field.clone(),
            dim,
            action,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn basis_image(&self, k: usize, c: usize) -> &Vector {
        &self.action[k][c]
    }

    /// `a . m` for an algebra element `a`.
    pub fn act(&self, a: &Vector, m: &Vector) -> Vector {
        let mut acc = super::Accumulator::new(self.dim);
        for (k, x) in a.iter() {
            for (c, y) in m.iter() {
                acc.add_scaled(&(x * y), &self.action[*k][*c]);
            }
        }
        acc.take()
    }

    /// Checks `rho(b_i) rho(g) = rho(b_i g)` for `g` in `generators` (all
    /// basis elements when `None`) and that the unit acts as the identity.
    pub fn validate(&self, a: &StructAlgebra, generators: Option<&[usize]>) -> Result<(), AlgebraError> {
        let d = a.dim();
        for c in 0..self.dim {
            let e = Vector::unit(c, &self.field);
            if self.act(a.unit(), &e) != e {
                return Err(AlgebraError::BadAction(format!("unit moves basis vector {c}")));
            }
        }
        let gens: Vec<usize> = generators.map(|g| g.to_vec()).unwrap_or_else(|| (0..d).collect());
        let bad: Vec<Option<String>> = par::map_range(d, |i| {
            for &g in &gens {
                let prod = a.product(i, g);
                for c in 0..self.dim {
                    let e = Vector::unit(c, &self.field);
                    let lhs = self.act(&a.basis(i), &self.act(&a.basis(g), &e));
                    let rhs = self.act(prod, &e);
                    if lhs != rhs {
                        return Some(format!(
                            "{} * {} on basis vector {c}",
                            a.labels()[i],
                            a.labels()[g]
                        ));
                    }
                }
            }
            None
        });
        match bad.into_iter().flatten().next() {
            Some(msg) => Err(AlgebraError::BadAction(msg)),
            None => Ok(()),
        }
    }

    fn full(&self) -> Subspace {
        Subspace::from_owned((0..self.dim).map(|c| Vector::unit(c, &self.field)))
    }

    /// `span{a . m : a in S, m in W}`.
    pub fn image(&self, s: &Subspace, w: &Subspace) -> Subspace {
        let parts: Vec<Vec<Vector>> = par::map(s.basis(), |x| {
            w.basis().iter().map(|m| self.act(x, m)).collect()
        });
        Subspace::from_owned(parts.into_iter().flatten())
    }

    /// Radical filtration `M, JM, J^2 M, ...` down to zero.
    pub fn radical_filtration(&self, j: &Subspace) -> Vec<Subspace> {
        let mut chain = vec![self.full()];
        loop {
            let next = self.image(j, chain.last().unwrap());
            let done = next.dim() == 0;
            chain.push(next);
            if done {
                break;
            }
            if chain[chain.len() - 1].dim() == chain[chain.len() - 2].dim() {
                break;
            }
        }
        chain
    }

    /// `{m : J m = 0}`.
    pub fn socle(&self, j: &Subspace) -> Subspace {
        let jb = j.basis();
        let rows: Vec<Vector> = par::map_range(self.dim, |c| {
            let e = Vector::unit(c, &self.field);
            jb.iter().enumerate().fold(Vector::zero(), |acc, (t, x)| {
                acc.add(&self.act(x, &e).shifted(t * self.dim))
            })
        });
        if jb.is_empty() {
            return self.full();
        }
        Subspace::from_owned(left_kernel(&rows, self.dim * jb.len(), &self.field))
    }

    /// Multiplicity of each labelled idempotent weight in `upper / lower`.
    pub fn weight_census(
        &self,
        upper: &Subspace,
        lower: &Subspace,
        weights: &[(String, Vector)],
    ) -> Vec<(String, usize)> {
        weights
            .iter()
            .filter_map(|(label, e)| {
                let eu = Subspace::from_owned(upper.basis().iter().map(|m| self.act(e, m)));
                let el = Subspace::from_owned(lower.basis().iter().map(|m| self.act(e, m)));
                let k = eu.dim() - el.dim();
                (k > 0).then(|| (label.clone(), k))
            })
            .collect()
    }
}

/// The left ideal `A e` as a module, on the semi-echelon basis of `A e`.
pub fn principal_module(a: &StructAlgebra, e: &Vector) -> Result<(LeftModule, Subspace), AlgebraError> {
    if !a.is_idempotent(e) {
        return Err(AlgebraError::NotIdempotent);
    }
    let span = Subspace::from_owned((0..a.dim()).map(|k| a.mul(&a.basis(k), e)));
    let basis = span.basis().to_vec();
    let action: Vec<Vec<Vector>> = par::map_range(a.dim(), |k| {
        basis
            .iter()
            .map(|m| {
                span.coordinates(&a.mul(&a.basis(k), m))
                    .expect("left ideal is closed")
            })
            .collect()
    });
    Ok((LeftModule::new(a.field(), basis.len(), action), span))
}

/// Loewy layers of `m` with respect to the radical `j`.
pub fn loewy_series(m: &LeftModule, j: &Subspace, weights: Option<&[(String, Vector)]>) -> LoewyReport {
    let chain = m.radical_filtration(j);
    let mut layer_dims = Vec::new();
    let mut layer_weights = Vec::new();
    for w in chain.windows(2) {
        let d = w[0].dim() - w[1].dim();
        if d == 0 {
            break;
        }
        layer_dims.push(d);
        layer_weights.push(match weights {
            Some(ws) => m.weight_census(&w[0], &w[1], ws),
            None => vec![],
        });
    }
    LoewyReport {
        layer_dims,
        layer_weights,
    }
}

#[cfg(test)]
mod tests {
    use super::super::radical;
    use super::super::test_algebras::*;
    use super::*;

    #[test]
    fn regular_module_of_truncated_polynomials() {
        let f = CycloField::new(1).unwrap();
        let t = truncated(&f, 4);
        let j = radical(&t);
        let (m, _) = principal_module(&t, t.unit()).unwrap();
        m.validate(&t, None).unwrap();
        let rep = loewy_series(&m, &j, None);
        assert_eq!(rep.layer_dims, vec![1, 1, 1, 1]);
        assert_eq!(m.socle(&j).dim(), 1);
    }

    #[test]
    fn arrow_projectives() {
        let f = CycloField::new(1).unwrap();
        let ar = arrow(&f);
        let j = radical(&ar);
        let (p1, _) = principal_module(&ar, &ar.basis(0)).unwrap();
        let (p2, _) = principal_module(&ar, &ar.basis(1)).unwrap();
        assert_eq!(p1.dim(), 2);
        assert_eq!(p2.dim(), 1);
        let weights = vec![("1".to_string(), ar.basis(0)), ("2".to_string(), ar.basis(1))];
        let rep = loewy_series(&p1, &j, Some(&weights));
        assert_eq!(rep.layer_dims, vec![1, 1]);
        assert_eq!(rep.layer_weights[0], vec![("1".to_string(), 1)]);
        assert_eq!(rep.layer_weights[1], vec![("2".to_string(), 1)]);
        let (z, _) = principal_module(&ar, &Vector::zero()).unwrap();
        assert_eq!(z.dim(), 0);
    }
}
