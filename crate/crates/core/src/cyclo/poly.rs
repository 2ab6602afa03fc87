use super::{Cyclo, CycloField};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Dense univariate polynomial over `Q(zeta_M)`, low degree first, trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Arc<CycloField>,
    coeffs: Vec<Cyclo>,
}

impl Poly {
    pub fn new(field: &Arc<CycloField>, mut coeffs: Vec<Cyclo>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<CycloField>) -> Self {
        Poly::new(field, vec![])
    }

    pub fn constant(c: Cyclo) -> Self {
        let field = c.field().clone();
        Poly::new(&field, vec![c])
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Poly::constant(Cyclo::one(field))
    }

    /// `t - r`.
    pub fn linear(r: &Cyclo) -> Self {
        let field = r.field().clone();
        Poly::new(&field, vec![-r, Cyclo::one(&field)])
    }

    /// `c * t^k`.
    pub fn monomial(c: Cyclo, k: usize) -> Self {
        let field = c.field().clone();
        let mut v = vec![Cyclo::zero(&field); k];
        v.push(c);
        Poly::new(&field, v)
    }

    pub fn from_roots(field: &Arc<CycloField>, roots: &[Cyclo]) -> Self {
        roots
            .iter()
            .fold(Poly::one(field), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Cyclo {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Cyclo::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Cyclo> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Cyclo) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        self.coeffs
            .iter()
            .rev()
            .fold(Cyclo::zero(&self.field), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_int(i as i64))
                .collect(),
        )
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(&self.field), self.clone());
        }
        let mut q = vec![Cyclo::zero(&self.field); r.len() - dd];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * dj);
                }
            }
            q[k] = c;
            r.pop();
        }
        (Poly::new(&self.field, q), Poly::new(&self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(&self.field), |acc, _| &acc * self)
    }

    /// Monic squarefree part (characteristic zero).
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's squarefree factorization: `self = c * prod a_i^i`, returned as
    /// `(a_i, i)` pairs with nonconstant monic `a_i`.
    pub fn squarefree_factorization(&self) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.exact_div(&a0);
        let mut c = d.exact_div(&a0);
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.exact_div(&a);
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Cyclo) -> u32 {
        let lin = Poly::linear(r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.exact_div(&lin);
            k += 1;
        }
        k
    }

    /// Idempotent interpolants for pairwise coprime `moduli`: `e_i = 1 mod
    /// moduli[i]` and `0 mod moduli[j]`, reduced mod the product.
    pub fn crt_idempotents(moduli: &[Poly]) -> Vec<Poly> {
        let field = moduli[0].field().clone();
        let prod = moduli.iter().fold(Poly::one(&field), |a, m| &a * m);
        moduli
            .iter()
            .map(|m| {
                let cof = prod.exact_div(m);
                let (g, s, _) = cof.ext_gcd(m);
                assert_eq!(g.degree(), Some(0), "moduli not coprime");
                (&s * &cof).rem(&prod)
            })
            .collect()
    }
}

fn zip_with(a: &Poly, b: &Poly, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let z = Cyclo::zero(&a.field);
    Poly::new(
        &a.field,
        (0..n)
            .map(|i| f(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect(),
    )
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![Cyclo::zero(&self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(&self.field, out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})t^{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> Arc<CycloField> {
        CycloField::new(8).unwrap()
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let k = field();
        let r1 = Cyclo::zeta_pow(&k, 1);
        let r2 = Cyclo::from_int(&k, 3);
        let r3 = Cyclo::zeta_pow(&k, 2) + Cyclo::one(&k);
        let p = &(&Poly::linear(&r1) * &Poly::linear(&r2).pow(2)) * &Poly::linear(&r3).pow(3);
        let fac = p.squarefree_factorization();
        let degs: Vec<(usize, u32)> = fac.iter().map(|(a, i)| (a.degree().unwrap(), *i)).collect();
        assert_eq!(degs, vec![(1, 1), (1, 2), (1, 3)]);
        assert_eq!(p.root_multiplicity(&r3), 3);
        assert_eq!(p.squarefree_part().degree(), Some(3));
    }

    #[test]
    fn crt_idempotents_are_orthogonal() {
        let k = field();
        let m1 = Poly::linear(&Cyclo::one(&k)).pow(2);
        let m2 = Poly::linear(&Cyclo::zeta_pow(&k, 3));
        let es = Poly::crt_idempotents(&[m1.clone(), m2.clone()]);
        assert!((&es[0] - &Poly::one(&k)).rem(&m1).is_zero());
        assert!(es[0].rem(&m2).is_zero());
        assert!(es[1].rem(&m1).is_zero());
        assert!((&es[1] - &Poly::one(&k)).rem(&m2).is_zero());
    }
}
