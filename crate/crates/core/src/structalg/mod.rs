//! Finite-dimensional associative algebras given by structure constants, and
//! the brute-force structure analysis used as an independent oracle.

mod analysis;
mod idempotents;
mod linalg;
mod module;
mod radical;

pub use analysis::{analyze, AnalysisDepth, OracleArrow, OracleBlock, OracleReport, OracleSimple};
pub use idempotents::{
    center, central_idempotents, corner, eval_poly, linkage_classes, min_poly,
    primitive_idempotents,
};
pub use linalg::{left_kernel, Accumulator, DependencyTracker, Subspace, Vector};
pub use module::{loewy_series, principal_module, LeftModule, LoewyReport};
pub use radical::{radical, radical_power, span_products, trace_vector};

use crate::cyclo::{Cyclo, CycloField};
use crate::par;
use std::sync::Arc;
use thiserror::Error;

pub type AlgebraElement = Vector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    OutOfRange { index: usize, dim: usize },
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("unit is not a two-sided identity on basis element {0}")]
    BadUnit(String),
    #[error("the listed generators do not span the algebra")]
    GeneratorsDoNotSpan,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("could not split idempotent over Q(zeta_{0}): corner has semisimple dimension {1}")]
    NonSplit(u32, usize),
    #[error("module action fails: {0}")]
    BadAction(String),
}

/// An algebra with basis `b_0..b_{d-1}` and products `b_i b_j`.
#[derive(Clone, Debug)]
pub struct StructAlgebra {
    field: Arc<CycloField>,
    labels: Vec<String>,
    table: Vec<Vector>,
    unit: Vector,
}

impl StructAlgebra {
    pub fn new(
        field: &Arc<CycloField>,
        labels: Vec<String>,
        table: Vec<Vector>,
        unit: Vector,
    ) -> Result<Self, AlgebraError> {
        let d = labels.len();
        if table.len() != d * d {
            return Err(AlgebraError::TableSize {
                expected: d * d,
                got: table.len(),
            });
        }
        for v in table.iter().chain(std::iter::once(&unit)) {
            if let Some((i, _)) = v.entries().last() {
                if *i >= d {
                    return Err(AlgebraError::OutOfRange { index: *i, dim: d });
                }
            }
        }
        Ok(StructAlgebra {
            field: field.clone(),
            labels,
            table,
            unit,
        })
    }

    /// Builds the table from `product(i, j) = b_i b_j`, rows in parallel.
    pub fn from_fn<F>(
        field: &Arc<CycloField>,
        labels: Vec<String>,
        unit: Vector,
        product: F,
    ) -> Result<Self, AlgebraError>
    where
        F: Fn(usize, usize) -> Vector + Sync + Send,
    {
        let d = labels.len();
        let rows: Vec<Vec<Vector>> = par::map_range(d, |i| (0..d).map(|j| product(i, j)).collect());
        let table = rows.into_iter().flatten().collect();
        StructAlgebra::new(field, labels, table, unit)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(i, &self.field)
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    /// Replaces one structure constant; used to build negative controls.
    pub fn with_corrupted_product(&self, i: usize, j: usize, v: Vector) -> StructAlgebra {
        let mut out = self.clone();
        let d = self.dim();
        out.table[i * d + j] = v;
        out
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.dim());
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let p = self.product(*i, *j);
                if p.is_zero() {
                    continue;
                }
                acc.add_scaled(&(a * b), p);
            }
        }
        acc.take()
    }

    pub fn scalar(&self, c: &Cyclo) -> Vector {
        self.unit.scale(c)
    }

    pub fn pow(&self, u: &Vector, e: u32) -> Vector {
        (0..e).fold(self.unit.clone(), |acc, _| self.mul(&acc, u))
    }

    pub fn commutator(&self, u: &Vector, v: &Vector) -> Vector {
        self.mul(u, v).sub(&self.mul(v, u))
    }

    pub fn is_idempotent(&self, e: &Vector) -> bool {
        &self.mul(e, e) == e
    }

    pub fn is_central(&self, z: &Vector) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis(i);
            self.mul(z, &b) == self.mul(&b, z)
        })
    }

    pub fn check_unit(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim() {
            let b = self.basis(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(AlgebraError::BadUnit(self.labels[i].clone()));
            }
        }
        Ok(())
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` for all basis triples.
    pub fn check_associativity_full(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        let failures: Vec<Option<(usize, usize, usize)>> = par::map_range(d, |i| {
            for j in 0..d {
                for k in 0..d {
                    if !self.associates(i, j, k) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        self.first_failure(failures)
    }

    /// Checks associativity on triples `(b_i, b_j, g)` with `g` among
    /// `generators`, after verifying that left-normed products of the
    /// generators span the algebra. Together these imply associativity.
    pub fn check_associativity(&self, generators: &[usize]) -> Result<(), AlgebraError> {
        let mut span = Subspace::new();
        span.insert(self.unit.clone());
        let mut frontier = vec![self.unit.clone()];
        while !frontier.is_empty() && span.dim() < self.dim() {
            let mut next = Vec::new();
            for w in &frontier {
                for &g in generators {
                    let p = self.mul(w, &self.basis(g));
                    if span.insert(p.clone()) {
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        if span.dim() < self.dim() {
            return Err(AlgebraError::GeneratorsDoNotSpan);
        }
        let d = self.dim();
        let failures: Vec<Option<(usize, usize, usize)>> = par::map_range(d, |i| {
            for j in 0..d {
                for &g in generators {
                    if !self.associates(i, j, g) {
                        return Some((i, j, g));
                    }
                }
            }
            None
        });
        self.first_failure(failures)
    }

    fn associates(&self, i: usize, j: usize, k: usize) -> bool {
        let left = self.mul(self.product(i, j), &self.basis(k));
        let right = self.mul(&self.basis(i), self.product(j, k));
        left == right
    }

    fn first_failure(&self, f: Vec<Option<(usize, usize, usize)>>) -> Result<(), AlgebraError> {
        match f.into_iter().flatten().next() {
            None => Ok(()),
            Some((i, j, k)) => Err(AlgebraError::NotAssociative(
                self.labels[i].clone(),
                self.labels[j].clone(),
                self.labels[k].clone(),
            )),
        }
    }
}

#[cfg(test)]
pub(crate) mod test_algebras {
    use super::*;

    /// `K[t]/(t^n)`.
    pub fn truncated(field: &Arc<CycloField>, n: usize) -> StructAlgebra {
        let labels = (0..n).map(|i| format!("t^{i}")).collect();
        StructAlgebra::from_fn(field, labels, Vector::unit(0, field), |i, j| {
            if i + j < n {
                Vector::unit(i + j, field)
            } else {
                Vector::zero()
            }
        })
        .unwrap()
    }

    /// `M_n(K)` on matrix units `e_{ij}` at index `i*n + j`.
    pub fn matrices(field: &Arc<CycloField>, n: usize) -> StructAlgebra {
        let labels = (0..n * n).map(|k| format!("e{}{}", k / n, k % n)).collect();
        let unit = Vector::from_pairs((0..n).map(|i| (i * n + i, Cyclo::one(field))));
        StructAlgebra::from_fn(field, labels, unit, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            if j == k {
                Vector::unit(i * n + l, field)
            } else {
                Vector::zero()
            }
        })
        .unwrap()
    }

    /// Path algebra of `1 -> 2` (upper triangular 2x2): basis e1, e2, a.
    pub fn arrow(field: &Arc<CycloField>) -> StructAlgebra {
        let labels = vec!["e1".into(), "e2".into(), "a".into()];
        let unit = Vector::from_pairs([(0, Cyclo::one(field)), (1, Cyclo::one(field))]);
        StructAlgebra::from_fn(field, labels, unit, |i, j| match (i, j) {
            (0, 0) => Vector::unit(0, field),
            (1, 1) => Vector::unit(1, field),
            // a = e2 a e1
            (2, 0) => Vector::unit(2, field),
            (1, 2) => Vector::unit(2, field),
            _ => Vector::zero(),
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_algebras::*;
    use super::*;

    #[test]
    fn unit_and_associativity() {
        let f = CycloField::new(1).unwrap();
        for a in [truncated(&f, 3), matrices(&f, 2), arrow(&f)] {
            a.check_unit().unwrap();
            a.check_associativity_full().unwrap();
        }
        let m = matrices(&f, 2);
        // e01, e10 generate together with the unit
        m.check_associativity(&[1, 2]).unwrap();
    }

    #[test]
    fn corrupted_table_is_caught() {
        let f = CycloField::new(1).unwrap();
        let m = matrices(&f, 2);
        let bad = m.with_corrupted_product(1, 2, Vector::unit(3, &f));
        assert!(matches!(
            bad.check_associativity_full(),
            Err(AlgebraError::NotAssociative(..))
        ));
    }

    #[test]
    fn group_algebra_of_z2() {
        let f = CycloField::new(2).unwrap();
        let a = StructAlgebra::from_fn(&f, vec!["1".into(), "g".into()], Vector::unit(0, &f), |i, j| {
            Vector::unit((i + j) % 2, &f)
        })
        .unwrap();
        let g = a.basis(1);
        assert_eq!(a.mul(&g, &g), a.basis(0));
    }
}
