//! Exact arithmetic in cyclotomic fields `Q(zeta_M)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi-1)` as an
//! integer numerator vector over a common positive denominator.

mod poly;
mod qcalc;
mod roots;

pub use poly::Poly;
pub use qcalc::{q_binomial, q_factorial, q_int};
pub use roots::{find_roots, RootError};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("Q(zeta_{conductor}) has no primitive {order}-th roots of unity")]
    MissingRootsOfUnity { conductor: u32, order: u32 },
    #[error("conductor must be positive")]
    BadConductor,
}

/// The field `Q(zeta_M)` with precomputed reduction data.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    degree: usize,
    modulus: Vec<i64>,
    // x^k mod Phi_M for k < max(M, 2*phi - 1)
    pow_table: Vec<Vec<i64>>,
}

/// Integer coefficients of the cyclotomic polynomial `Phi_n`, low degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n > 0);
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_int(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CycloField {}

impl CycloField {
    pub fn new(conductor: u32) -> Result<Arc<Self>, CycloError> {
        if conductor == 0 {
            return Err(CycloError::BadConductor);
        }
        let modulus = cyclotomic_poly(conductor);
        let degree = modulus.len() - 1;
        let table_len = (conductor as usize).max(2 * degree).max(1);
        let mut pow_table = Vec::with_capacity(table_len);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        if degree == 0 {
            unreachable!("cyclotomic polynomials have positive degree");
        }
        for _ in 0..table_len {
            pow_table.push(cur.clone());
            // multiply by x and reduce
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] -= top * modulus[j];
                }
            }
        }
        Ok(Arc::new(CycloField {
            conductor,
            degree,
            modulus,
            pow_table,
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub(crate) fn pow_row(&self, k: usize) -> &[i64] {
        &self.pow_table[k]
    }
}

pub fn zero(field: &Arc<CycloField>) -> Cyclo {
    Cyclo::zero(field)
}

pub fn one(field: &Arc<CycloField>) -> Cyclo {
    Cyclo::one(field)
}

/// `zeta_M^k` for any integer `k`.
pub fn root_of_unity(field: &Arc<CycloField>, k: i64) -> Cyclo {
    Cyclo::zeta_pow(field, k)
}

/// The multiplicative order of `x` if it is a root of unity.
pub fn multiplicative_order(x: &Cyclo) -> Option<u32> {
    x.root_of_unity_exponent().map(|j| {
        let m = x.field.conductor as u64;
        let j = j as u64;
        (m / m.gcd(&j)) as u32
    })
    .or_else(|| {
        // -zeta^j when M is odd
        let neg = -x;
        neg.root_of_unity_exponent().map(|j| {
            let m = x.field.conductor as u64;
            let ord = m / m.gcd(&(j as u64));
            (ord.lcm(&2)) as u32
        })
    })
}

/// Exponents `j` (relative to `zeta_M`) of all `n`-th roots of unity, sorted
/// ascending. Fails unless `n` divides the conductor.
pub fn nth_roots_of_unity(field: &Arc<CycloField>, n: u32) -> Result<Vec<u32>, CycloError> {
    let m = field.conductor;
    if n == 0 || m % n != 0 {
        return Err(CycloError::MissingRootsOfUnity {
            conductor: m,
            order: n,
        });
    }
    let step = m / n;
    Ok((0..n).map(|i| i * step).collect())
}

/// Exponents of the primitive `n`-th roots of unity, sorted ascending.
pub fn primitive_roots_of_unity(field: &Arc<CycloField>, n: u32) -> Result<Vec<u32>, CycloError> {
    let step = field.conductor / n.max(1);
    Ok(nth_roots_of_unity(field, n)?
        .into_iter()
        .filter(|&j| (j / step).gcd(&n) == 1)
        .collect())
}

/// An element of `Q(zeta_M)`.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Cyclo {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycloField>, n: i64) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_rational(field: &Arc<CycloField>, r: &BigRational) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    pub fn from_ratio(field: &Arc<CycloField>, p: i64, q: i64) -> Self {
        Self::from_rational(field, &BigRational::new(p.into(), q.into()))
    }

    /// `zeta_M^k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let m = field.conductor as i64;
        let k = k.rem_euclid(m) as usize;
        let row = &field.pow_table[k];
        Cyclo {
            field: field.clone(),
            num: row.iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Build from rational coordinates in the power basis.
    pub fn from_coords(field: &Arc<CycloField>, coords: &[BigRational]) -> Self {
        assert!(coords.len() <= field.degree);
        let mut den = BigInt::one();
        for c in coords {
            den = den.lcm(c.denom());
        }
        let mut num = vec![BigInt::zero(); field.degree];
        for (i, c) in coords.iter().enumerate() {
            num[i] = c.numer() * (&den / c.denom());
        }
        let mut z = Cyclo {
            field: field.clone(),
            num,
            den,
        };
        z.normalize();
        z
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// `j` with `self == zeta_M^j`, if any.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        let m = self.field.conductor as usize;
        (0..m).find_map(|j| {
            let row = &self.field.pow_table[j];
            row.iter()
                .zip(&self.num)
                .all(|(&r, c)| c == &BigInt::from(r))
                .then_some(j as u32)
        })
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    fn monomial(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn inv(&self) -> Result<Cyclo, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let field = &self.field;
        if let Some(i) = self.monomial() {
            // (c/d) z^i  ->  (d/c) z^(M - i)
            let c = &self.num[i];
            let mut out = Cyclo::zeta_pow(field, -(i as i64));
            let scale = BigRational::new(self.den.clone(), c.clone());
            out.scale_rational(&scale);
            return Ok(out);
        }
        let a: Vec<BigRational> = self.coords();
        let m: Vec<BigRational> = field
            .modulus
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let u = rat_poly_inverse_mod(&a, &m);
        Ok(Cyclo::from_coords(field, &u))
    }

    pub fn scale_rational(&mut self, r: &BigRational) {
        for c in &mut self.num {
            *c = &*c * r.numer();
        }
        self.den = &self.den * r.denom();
        self.normalize();
    }

    pub fn scale_int(&self, k: i64) -> Cyclo {
        let mut out = self.clone();
        out.scale_rational(&BigRational::from_integer(k.into()));
        out
    }

    pub fn pow(&self, e: i64) -> Result<Cyclo, CycloError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_u(e.unsigned_abs()))
    }

    pub fn pow_u(&self, mut e: u64) -> Cyclo {
        let mut result = Cyclo::one(&self.field);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        result
    }

    /// Power-basis terms `(j, c)` with `c != 0`.
    pub fn terms(&self) -> Vec<(u32, BigRational)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as u32, BigRational::new(c.clone(), self.den.clone())))
            .collect()
    }

    /// The image under the Galois automorphism `zeta -> zeta^k`.
    pub fn galois(&self, k: i64) -> Cyclo {
        let mut acc = Cyclo::zero(&self.field);
        for (j, c) in self.terms() {
            let mut t = Cyclo::zeta_pow(&self.field, k * j as i64);
            t.scale_rational(&c);
            acc += &t;
        }
        acc
    }

    fn same_field(&self, other: &Cyclo) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor,
            "mixing cyclotomic fields"
        );
    }

    fn add_signed(&self, other: &Cyclo, negate: bool) -> Cyclo {
        self.same_field(other);
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let l = self.den.lcm(&other.den);
            let fa = &l / &self.den;
            let fb = &l / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let x = a * &fa;
                    let y = b * &fb;
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, l)
        };
        let mut out = Cyclo {
            field: self.field.clone(),
            num,
            den,
        };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Cyclo) -> Cyclo {
        self.same_field(other);
        let d = self.field.degree;
        if self.is_zero() || other.is_zero() {
            return Cyclo::zero(&self.field);
        }
        if other.is_rational() {
            let mut out = self.clone();
            out.scale_rational(&BigRational::new(other.num[0].clone(), other.den.clone()));
            return out;
        }
        if self.is_rational() {
            return other.mul_impl(self);
        }
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = wide.drain(..d).collect();
        for (k, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &r) in self.field.pow_table[k + d].iter().enumerate() {
                if r != 0 {
                    num[j] += &c * r;
                }
            }
        }
        let mut out = Cyclo {
            field: self.field.clone(),
            num,
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }
}

fn rat_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    rat_trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        r.pop();
        rat_trim(&mut r);
    }
    (q, r)
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    rat_trim(&mut out);
    out
}

// u with u*a = 1 mod m, assuming gcd(a, m) = 1
fn rat_poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    rat_trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while r1.len() > 1 {
        let (q, r) = rat_divrem(&r0, &r1);
        let s2 = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    assert!(r1.len() == 1, "element not invertible");
    let c = r1[0].clone();
    let mut u: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
    let (_, rem) = rat_divrem(&u, m);
    u = rem;
    u
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(j) = self.root_of_unity_exponent() {
            return match j {
                0 => write!(f, "1"),
                _ => write!(f, "z{}^{}", self.field.conductor, j),
            };
        }
        let mut first = true;
        for (j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*z{}^{}", self.field.conductor, j)?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                let f: fn(&Cyclo, &Cyclo) -> Cyclo = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
        impl $tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, rhs: &Cyclo) {
        *self = &*self * rhs;
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

/// Exact integer value of a rational, if it fits in `i64`.
pub fn rational_to_pair(r: &BigRational) -> Option<(i64, i64)> {
    Some((r.numer().to_i64()?, r.denom().to_i64()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(9).len(), 7);
    }

    #[test]
    fn zeta_has_exact_order() {
        for m in [1u32, 2, 3, 4, 5, 8, 9, 12, 18] {
            let k = CycloField::new(m).unwrap();
            let z = Cyclo::zeta_pow(&k, 1);
            assert!(z.pow_u(m as u64).is_one());
            assert_eq!(multiplicative_order(&z), Some(if m == 1 { 1 } else { m }));
        }
    }

    #[test]
    fn inverse_of_generic_element() {
        let k = CycloField::new(12).unwrap();
        let a = Cyclo::from_int(&k, 2) + Cyclo::zeta_pow(&k, 1) + Cyclo::zeta_pow(&k, 5);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn odd_conductor_negative_unit_order() {
        let k = CycloField::new(3).unwrap();
        assert_eq!(multiplicative_order(&Cyclo::from_int(&k, -1)), Some(2));
        let w = -Cyclo::zeta_pow(&k, 1);
        assert_eq!(multiplicative_order(&w), Some(6));
    }

    #[test]
    fn galois_action_is_multiplicative() {
        let k = CycloField::new(8).unwrap();
        let a = Cyclo::from_ratio(&k, 3, 2) + Cyclo::zeta_pow(&k, 3);
        let b = Cyclo::zeta_pow(&k, 1) - Cyclo::from_int(&k, 5);
        assert_eq!((&a * &b).galois(3), a.galois(3) * b.galois(3));
    }
}
