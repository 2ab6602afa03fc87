//! Standard cyclic modules `Z(rho)` (induced from `E, K`) and `Z'(rho)`
//! (induced from `F, K`) as explicit matrices.

use super::efk::EfkPresentation;
use super::LinkedError;
use crate::cyclo::{q_int, Cyclo, CycloField};
use crate::lifting::{ClassSubalgebra, LiftingAlgebra};
use crate::report::CheckResult;
use crate::structalg::{LeftModule, Vector};
use std::sync::Arc;

/// Dense square matrix, `rows[r][c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat(pub Vec<Vec<Cyclo>>);

impl Mat {
    pub fn zero(field: &Arc<CycloField>, n: usize) -> Mat {
        Mat(vec![vec![Cyclo::zero(field); n]; n])
    }

    pub fn identity(field: &Arc<CycloField>, n: usize) -> Mat {
        let mut m = Mat::zero(field, n);
        for i in 0..n {
            m.0[i][i] = Cyclo::one(field);
        }
        m
    }

    pub fn diag(field: &Arc<CycloField>, d: &[Cyclo]) -> Mat {
        let mut m = Mat::zero(field, d.len());
        for (i, c) in d.iter().enumerate() {
            m.0[i][i] = c.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.size();
        let field = self.0[0][0].field().clone();
        let mut out = Mat::zero(&field, n);
        for r in 0..n {
            for k in 0..n {
                if self.0[r][k].is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !other.0[k][c].is_zero() {
                        out.0[r][c] += &(&self.0[r][k] * &other.0[k][c]);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Mat {
        let field = self.0[0][0].field().clone();
        (0..e).fold(Mat::identity(&field, self.size()), |acc, _| acc.mul(self))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        Mat(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect())
    }

    pub fn scale(&self, c: &Cyclo) -> Mat {
        Mat(self.0.iter().map(|row| row.iter().map(|x| x * c).collect()).collect())
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::from_pairs(self.0.iter().enumerate().map(|(r, row)| (r, row[c].clone())))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Induced from `E.1 = 0`, basis `w_i = F^i 1`.
    Z,
    /// Induced from `F.1 = 0`, basis `v_i = E^i 1`.
    ZPrime,
}

#[derive(Clone, Debug)]
pub struct StandardModule {
    pub side: Side,
    pub rho: Cyclo,
    pub e: Mat,
    pub f: Mat,
    pub k: Mat,
    /// `K`-weight of each basis vector.
    pub weights: Vec<Cyclo>,
    /// Least `s > 0` with `E w_s = 0` (resp. `F v_s = 0`); the radical is
    /// spanned by the basis vectors from there on.
    pub radical_start: Option<usize>,
}

impl StandardModule {
    pub fn new(p: &EfkPresentation, rho: &Cyclo, side: Side) -> Result<Self, LinkedError> {
        let field = p.q.field().clone();
        let n = p.n;
        if rho.pow_u(p.big_n as u64) != p.kappa {
            return Err(LinkedError::NotARoot(rho.to_string()));
        }
        let (shift, wrap) = match side {
            Side::Z => (p.theta.inv().expect("root of unity"), &p.f_power),
            Side::ZPrime => (p.theta.clone(), &p.e_power),
        };
        let (killed_power, killed) = match side {
            Side::Z => (&p.e_power, "E"),
            Side::ZPrime => (&p.f_power, "F"),
        };
        if !killed_power.is_zero() {
            return Err(LinkedError::Construction(format!("{killed}^n is not zero")));
        }
        let mut weights = Vec::with_capacity(n);
        let mut w = rho.clone();
        for _ in 0..n {
            weights.push(w.clone());
            w = &w * &shift;
        }
        let k = Mat::diag(&field, &weights);
        // the lowering operator: basis i -> i + 1, wrapping by the n-th power
        let mut lower = Mat::zero(&field, n);
        for i in 0..n - 1 {
            lower.0[i + 1][i] = Cyclo::one(&field);
        }
        lower.0[0][n - 1] = wrap.clone();
        // the raising operator from the commutator with powers
        let rm = rho.pow_u(p.m as u64);
        let rm_inv = rm.inv().expect("nonzero");
        let mut raise = Mat::zero(&field, n);
        for s in 1..n {
            let qs = p.q.pow(-(s as i64 - 1)).expect("root of unity");
            let bracket = match side {
                Side::Z => &rm_inv - &(&qs * &rm),
                Side::ZPrime => &rm - &(&qs * &rm_inv),
            };
            raise.0[s - 1][s] = &(&p.eta * &q_int(s as u32, &p.q)) * &bracket;
        }
        let (e, f) = match side {
            Side::Z => (raise, lower),
            Side::ZPrime => (lower, raise),
        };
        let raising = match side {
            Side::Z => &e,
            Side::ZPrime => &f,
        };
        let radical_start = (1..n).find(|&s| (0..n).all(|r| raising.0[r][s].is_zero()));
        Ok(StandardModule {
            side,
            rho: rho.clone(),
            e,
            f,
            k,
            weights,
            radical_start,
        })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Dimension of the simple top.
    pub fn top_dim(&self) -> usize {
        self.radical_start.unwrap_or(self.dim())
    }

    /// The defining relations, matrix-wise.
    pub fn check_relations(&self, p: &EfkPresentation) -> Vec<CheckResult> {
        let field = p.q.field().clone();
        let n = self.dim();
        let id = Mat::identity(&field, n);
        let k_inv = Mat::diag(&field, &self.weights.iter().map(|w| w.inv().expect("nonzero")).collect::<Vec<_>>());
        let m = p.m;
        let comm = self.e.mul(&self.f).sub(&self.f.mul(&self.e));
        let rhs = k_inv.pow(m).sub(&self.k.pow(m)).scale(&p.eta);
        let theta_inv = p.theta.inv().expect("root of unity");
        let rows = [
            ("E^n", self.e.pow(n) == id.scale(&p.e_power)),
            ("F^n", self.f.pow(n) == id.scale(&p.f_power)),
            ("K^N", self.k.pow(p.big_n) == id.scale(&p.kappa)),
            ("EF - FE", comm == rhs),
            ("KE", self.k.mul(&self.e) == self.e.mul(&self.k).scale(&p.theta)),
            ("KF", self.k.mul(&self.f) == self.f.mul(&self.k).scale(&theta_inv)),
        ];
        rows.into_iter()
            .map(|(name, ok)| CheckResult {
                name: format!("standard module {name}"),
                passed: ok,
                detail: String::new(),
            })
            .collect()
    }

    /// Coset position of the character carried by each basis vector.
    pub fn characters(&self, p: &EfkPresentation) -> Result<Vec<usize>, LinkedError> {
        self.weights
            .iter()
            .map(|w| p.weight_index(w).ok_or_else(|| LinkedError::NotARoot(w.to_string())))
            .collect()
    }

    /// The module over the class subalgebra: `e_nu x^i y^j` acts as
    /// `P_nu X^i Y^j`, where `x = a E` and `y = F` (swapped when mirrored).
    pub fn to_left_module(
        &self,
        h: &LiftingAlgebra,
        class: &ClassSubalgebra,
        p: &EfkPresentation,
    ) -> Result<LeftModule, LinkedError> {
        let field = h.field().clone();
        let chars = self.characters(p)?;
        let a_vals: Vec<Cyclo> = chars.iter().map(|&c| h.value(&class.coset[c], &h.datum.a)).collect();
        let a_mat = Mat::diag(&field, &a_vals);
        let (xe, ye) = if p.mirrored { (&self.f, &self.e) } else { (&self.e, &self.f) };
        let x = a_mat.mul(xe);
        let (n1, n2) = (h.n1(), h.n2());
        let xp: Vec<Mat> = (0..n1).map(|i| x.pow(i)).collect();
        let yp: Vec<Mat> = (0..n2).map(|j| ye.pow(j)).collect();
        let dim = self.dim();
        let action = (0..class.dim())
            .map(|t| {
                let (mk, i, j) = class.monomial(t);
                let proj: Vec<Cyclo> = chars
                    .iter()
                    .map(|&c| Cyclo::from_int(&field, (c == mk) as i64))
                    .collect();
                let mat = Mat::diag(&field, &proj).mul(&xp[i]).mul(&yp[j]);
                (0..dim).map(|c| mat.column(c)).collect()
            })
            .collect();
        Ok(LeftModule::new(&field, dim, action))
    }
}
