//! Roots in `Q(zeta_M)` of polynomials over `Q(zeta_M)`.
//!
//! The squarefree part is scaled to a monic polynomial with algebraic integer
//! coefficients, its roots are found in the residue fields of a prime `p` that
//! is inert up to the Carmichael exponent, and each combination of residues is
//! lifted p-adically and checked exactly.

use super::{Cyclo, CycloField, Poly};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("the zero polynomial has every element as a root")]
    ZeroPolynomial,
    #[error("no usable prime found below {0}")]
    NoPrime(u64),
}

const FIRST_PRIME: u64 = 1009;
const PRIME_LIMIT: u64 = 200_000;

/// All roots of `p` lying in its coefficient field, with multiplicities,
/// in a canonical order.
pub fn find_roots(p: &Poly) -> Result<Vec<(Cyclo, u32)>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let field = p.field().clone();
    let g = p.squarefree_part();
    let d = g.degree().unwrap();
    let simple: Vec<Cyclo> = match d {
        0 => vec![],
        1 => vec![-&g.coeff(0)],
        _ => squarefree_roots(&field, &g)?,
    };
    let mut out: Vec<(Cyclo, u32)> = simple
        .into_iter()
        .map(|r| {
            let k = p.root_multiplicity(&r);
            (r, k)
        })
        .collect();
    out.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok(out)
}

/// Lexicographic order on power-basis coordinates.
pub fn canonical_cmp(a: &Cyclo, b: &Cyclo) -> Ordering {
    for (x, y) in a.coords().iter().zip(b.coords().iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn squarefree_roots(field: &Arc<CycloField>, g: &Poly) -> Result<Vec<Cyclo>, RootError> {
    let d = g.degree().unwrap();
    // h(s) = D^d g(s / D) has algebraic integer coefficients
    let mut den = BigInt::one();
    for c in g.coeffs() {
        den = den.lcm(c.denominator());
    }
    let h: Vec<Vec<BigInt>> = (0..=d)
        .map(|i| {
            let c = g.coeff(i);
            let scale = num_traits::pow(den.clone(), d - i);
            let f = &scale / c.denominator();
            c.numerators().iter().map(|n| n * &f).collect()
        })
        .collect();
    let h_cyclo: Vec<Cyclo> = h
        .iter()
        .map(|v| {
            let coords: Vec<_> = v
                .iter()
                .map(|n| num_rational::BigRational::from_integer(n.clone()))
                .collect();
            Cyclo::from_coords(field, &coords)
        })
        .collect();
    let h_poly = Poly::new(field, h_cyclo);

    let m = field.conductor() as u64;
    let target = carmichael(m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_7007);
    let mut p = FIRST_PRIME;
    while p < PRIME_LIMIT {
        p += 1;
        if !is_prime(p) || m % p == 0 || mult_order(p % m.max(1), m) != target {
            continue;
        }
        let fp = Fp { p };
        let phi_mod: Vec<u64> = field
            .modulus()
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        let factors = equal_degree_factors(&fp, &phi_mod, target as usize, &mut rng);
        let exts: Vec<Fq> = factors
            .iter()
            .map(|f| Fq {
                fp,
                modulus: f.clone(),
            })
            .collect();
        let mut ok = true;
        let mut residue_roots = Vec::with_capacity(exts.len());
        for fq in &exts {
            let hq: Vec<Vec<u64>> = h.iter().map(|c| fq.reduce_int(c)).collect();
            let hq = trim(fq, hq);
            let dh = derivative(fq, &hq);
            if degree(&gcd(fq, &hq, &dh)) != Some(0) {
                ok = false;
                break;
            }
            residue_roots.push(roots_in_field(fq, &hq, &mut rng));
        }
        if !ok {
            continue;
        }
        return Ok(lift_all(field, &h, &h_poly, &den, p, &exts, &residue_roots, d));
    }
    Err(RootError::NoPrime(PRIME_LIMIT))
}

#[allow(clippy::too_many_arguments)]
fn lift_all(
    field: &Arc<CycloField>,
    h: &[Vec<BigInt>],
    h_poly: &Poly,
    den: &BigInt,
    p: u64,
    exts: &[Fq],
    residue_roots: &[Vec<Vec<u64>>],
    d: usize,
) -> Vec<Cyclo> {
    let phi = field.degree();
    let fp = Fp { p };
    let full_mod: Vec<u64> = field
        .modulus()
        .iter()
        .map(|&c| c.rem_euclid(p as i64) as u64)
        .collect();
    let crt = crt_basis(&fp, &full_mod, exts);

    // coefficient bound for roots of h in the power basis
    let r_bits = h
        .iter()
        .map(|v| v.iter().map(|c| c.abs()).sum::<BigInt>().bits())
        .max()
        .unwrap_or(0)
        + 1;
    let m_bits = 64 - (field.conductor() as u64).leading_zeros() as u64;
    let bits = r_bits + phi as u64 * (m_bits + 1) + 16;
    let p_bits = 64 - p.leading_zeros() as u64 - 1;
    let e = (bits / p_bits + 2) as u32;
    let modulus = num_traits::pow(BigInt::from(p), e as usize);

    let ring = HenselRing {
        field: field.clone(),
        modulus,
    };
    let dh: Vec<Vec<BigInt>> = (1..h.len())
        .map(|i| h[i].iter().map(|c| c * BigInt::from(i as u64)).collect())
        .collect();

    let mut found: Vec<Cyclo> = Vec::new();
    let counts: Vec<usize> = residue_roots.iter().map(|r| r.len()).collect();
    if counts.iter().any(|&c| c == 0) {
        return found;
    }
    let mut idx = vec![0usize; counts.len()];
    loop {
        // residue of the candidate in F_p[x]/Phi
        let mut s0 = vec![0u64; phi];
        let mut u0 = vec![0u64; phi];
        for (i, fq) in exts.iter().enumerate() {
            let r = &residue_roots[i][idx[i]];
            let dhq: Vec<Vec<u64>> = dh.iter().map(|c| fq.reduce_int(c)).collect();
            let dval = eval_poly(fq, &dhq, r);
            let dinv = fq.inv(&dval);
            let rl = lift_to(&fp, r, &crt[i], &full_mod);
            let ul = lift_to(&fp, &dinv, &crt[i], &full_mod);
            for j in 0..phi {
                s0[j] = (s0[j] + rl[j]) % p;
                u0[j] = (u0[j] + ul[j]) % p;
            }
        }
        let mut s: Vec<BigInt> = s0.iter().map(|&c| BigInt::from(c)).collect();
        let u: Vec<BigInt> = u0.iter().map(|&c| BigInt::from(c)).collect();
        for _ in 0..e {
            let hv = ring.eval(h, &s);
            let corr = ring.mul(&hv, &u);
            s = s
                .iter()
                .zip(&corr)
                .map(|(a, b)| (a - b).mod_floor(&ring.modulus))
                .collect();
        }
        let half = &ring.modulus >> 1;
        let coords: Vec<num_rational::BigRational> = s
            .iter()
            .map(|c| {
                let c = if c > &half { c - &ring.modulus } else { c.clone() };
                num_rational::BigRational::new(c, den.clone())
            })
            .collect();
        let root = Cyclo::from_coords(field, &coords);
        let scaled = &root * &Cyclo::from_rational(field, &num_rational::BigRational::from_integer(den.clone()));
        if h_poly.eval(&scaled).is_zero() && !found.contains(&root) {
            found.push(root);
            if found.len() == d {
                break;
            }
        }
        // next combination
        let mut k = 0;
        loop {
            if k == idx.len() {
                return found;
            }
            idx[k] += 1;
            if idx[k] < counts[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    found
}

struct HenselRing {
    field: Arc<CycloField>,
    modulus: BigInt,
}

impl HenselRing {
    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.field.degree();
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                wide[i + j] += x * y;
            }
        }
        let mut out: Vec<BigInt> = wide[..d].to_vec();
        for k in d..2 * d - 1 {
            let c = &wide[k];
            if c.is_zero() {
                continue;
            }
            for (j, &r) in self.field.pow_row(k).iter().enumerate() {
                if r != 0 {
                    out[j] += c * r;
                }
            }
        }
        out.iter().map(|c| c.mod_floor(&self.modulus)).collect()
    }

    fn eval(&self, h: &[Vec<BigInt>], s: &[BigInt]) -> Vec<BigInt> {
        let d = self.field.degree();
        let mut acc = vec![BigInt::zero(); d];
        for c in h.iter().rev() {
            acc = self.mul(&acc, s);
            for j in 0..d {
                acc[j] = (&acc[j] + &c[j]).mod_floor(&self.modulus);
            }
        }
        acc
    }
}

fn carmichael(m: u64) -> u64 {
    if m <= 2 {
        return 1;
    }
    (1..m)
        .filter(|a| a.gcd(&m) == 1)
        .map(|a| mult_order(a, m))
        .max()
        .unwrap_or(1)
}

fn mult_order(a: u64, m: u64) -> u64 {
    if m <= 1 {
        return 1;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
        if k > m {
            return 0;
        }
    }
    k
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- finite field arithmetic ----

trait FiniteField {
    type E: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn from_u64(&self, n: u64) -> Self::E;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::E;
    fn order(&self) -> BigUint;
}

#[derive(Clone, Copy, Debug)]
struct Fp {
    p: u64,
}

impl FiniteField for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0);
        let mut r = 1u64;
        let mut b = *a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
    fn random<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.p)
    }
}

#[derive(Clone, Debug)]
struct Fq {
    fp: Fp,
    modulus: Vec<u64>,
}

impl Fq {
    fn deg(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, a: Vec<u64>) -> Vec<u64> {
        let r = rem(&self.fp, &trim(&self.fp, a), &self.modulus);
        let mut r = r;
        r.resize(self.deg(), 0);
        r
    }

    fn reduce_int(&self, c: &[BigInt]) -> Vec<u64> {
        let p = BigInt::from(self.fp.p);
        let v: Vec<u64> = c
            .iter()
            .map(|x| x.mod_floor(&p).to_u64().unwrap())
            .collect();
        self.reduce(v)
    }
}

impl FiniteField for Fq {
    type E = Vec<u64>;
    fn zero(&self) -> Vec<u64> {
        vec![0; self.deg()]
    }
    fn one(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.fp.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.fp.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        self.reduce(mul(&self.fp, a, b))
    }
    fn inv(&self, a: &Vec<u64>) -> Vec<u64> {
        let (g, s, _) = ext_gcd(&self.fp, &trim(&self.fp, a.clone()), &self.modulus);
        assert_eq!(g.len(), 1, "noninvertible residue");
        self.reduce(s)
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn from_u64(&self, n: u64) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = n % self.fp.p;
        v
    }
    fn random<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.deg()).map(|_| self.fp.random(rng)).collect()
    }
    fn order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.fp.p), self.deg())
    }
}

// ---- polynomials over a finite field, low degree first, trimmed ----

fn trim<F: FiniteField>(f: &F, mut a: Vec<F::E>) -> Vec<F::E> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}


fn sub<F: FiniteField>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let n = a.len().max(b.len());
    let z = f.zero();
    trim(
        f,
        (0..n)
            .map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect(),
    )
}

fn mul<F: FiniteField>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

fn divrem<F: FiniteField>(f: &F, a: &[F::E], b: &[F::E]) -> (Vec<F::E>, Vec<F::E>) {
    let db = degree(b).expect("division by zero");
    let inv = f.inv(&b[db]);
    let mut r = trim(f, a.to_vec());
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = f.mul(r.last().unwrap(), &inv);
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = f.sub(&r[k + j], &f.mul(&c, bj));
        }
        q[k] = c;
        r.pop();
    }
    (trim(f, q), trim(f, r))
}

fn rem<F: FiniteField>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    divrem(f, a, b).1
}

fn monic<F: FiniteField>(f: &F, a: Vec<F::E>) -> Vec<F::E> {
    match a.last() {
        None => a,
        Some(l) => {
            let li = f.inv(l);
            a.iter().map(|c| f.mul(c, &li)).collect()
        }
    }
}

fn gcd<F: FiniteField>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    monic(f, x)
}

fn ext_gcd<F: FiniteField>(f: &F, a: &[F::E], b: &[F::E]) -> (Vec<F::E>, Vec<F::E>, Vec<F::E>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![f.one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let li = f.inv(r0.last().expect("gcd of zeros"));
    let sc = |v: Vec<F::E>| v.iter().map(|c| f.mul(c, &li)).collect::<Vec<_>>();
    (sc(r0), sc(s0), sc(t0))
}

fn derivative<F: FiniteField>(f: &F, a: &[F::E]) -> Vec<F::E> {
    trim(
        f,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_u64(i as u64)))
            .collect(),
    )
}

fn powmod<F: FiniteField>(f: &F, base: &[F::E], e: &BigUint, m: &[F::E]) -> Vec<F::E> {
    let mut result = vec![f.one()];
    let b = rem(f, base, m);
    for i in (0..e.bits()).rev() {
        result = rem(f, &mul(f, &result, &result), m);
        if e.bit(i) {
            result = rem(f, &mul(f, &result, &b), m);
        }
    }
    result
}

fn eval_poly<F: FiniteField>(f: &F, a: &[F::E], x: &F::E) -> F::E {
    a.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

/// Roots of a squarefree polynomial lying in the field itself.
fn roots_in_field<F: FiniteField, R: Rng>(f: &F, h: &[F::E], rng: &mut R) -> Vec<F::E> {
    let q = f.order();
    let t = vec![f.zero(), f.one()];
    let tq = powmod(f, &t, &q, h);
    let g = gcd(f, h, &sub(f, &tq, &t));
    let mut out = Vec::new();
    split_linear(f, g, &q, rng, &mut out);
    out
}

fn split_linear<F: FiniteField, R: Rng>(
    f: &F,
    g: Vec<F::E>,
    q: &BigUint,
    rng: &mut R,
    out: &mut Vec<F::E>,
) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => {
            let r = f.mul(&g[0], &f.inv(&g[1]));
            out.push(f.sub(&f.zero(), &r));
        }
        Some(dg) => {
            let half = (q - 1u32) >> 1;
            loop {
                let shift = vec![f.random(rng), f.one()];
                let w = powmod(f, &shift, &half, &g);
                let w = sub(f, &w, &[f.one()]);
                let d = gcd(f, &g, &w);
                let dd = degree(&d).unwrap_or(0);
                if dd > 0 && dd < dg {
                    let other = divrem(f, &g, &d).0;
                    split_linear(f, d, q, rng, out);
                    split_linear(f, monic(f, other), q, rng, out);
                    return;
                }
            }
        }
    }
}

/// Irreducible factors of a squarefree product of degree-`k` irreducibles.
fn equal_degree_factors<R: Rng>(fp: &Fp, g: &[u64], k: usize, rng: &mut R) -> Vec<Vec<u64>> {
    let g = monic(fp, trim(fp, g.to_vec()));
    let mut out = Vec::new();
    edf(fp, g, k, rng, &mut out);
    out.sort();
    out
}

fn edf<R: Rng>(fp: &Fp, g: Vec<u64>, k: usize, rng: &mut R, out: &mut Vec<Vec<u64>>) {
    let dg = degree(&g).unwrap();
    if dg == k {
        out.push(g);
        return;
    }
    let e = (num_traits::pow(BigUint::from(fp.p), k) - 1u32) >> 1;
    loop {
        let r: Vec<u64> = trim(fp, (0..dg).map(|_| fp.random(rng)).collect());
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let w = sub(fp, &powmod(fp, &r, &e, &g), &[1]);
        let d = gcd(fp, &g, &w);
        let dd = degree(&d).unwrap_or(0);
        if dd > 0 && dd < dg {
            let other = monic(fp, divrem(fp, &g, &d).0);
            edf(fp, d, k, rng, out);
            edf(fp, other, k, rng, out);
            return;
        }
    }
}

/// `E_i` in `F_p[x]/Phi` with `E_i = 1 mod f_i` and `0 mod f_j`.
fn crt_basis(fp: &Fp, full: &[u64], exts: &[Fq]) -> Vec<Vec<u64>> {
    exts.iter()
        .map(|fq| {
            let cof = divrem(fp, full, &fq.modulus).0;
            let (_, s, _) = ext_gcd(fp, &cof, &fq.modulus);
            rem(fp, &mul(fp, &s, &cof), full)
        })
        .collect()
}

fn lift_to(fp: &Fp, r: &[u64], basis: &[u64], full: &[u64]) -> Vec<u64> {
    let mut v = rem(fp, &mul(fp, &trim(fp, r.to_vec()), basis), full);
    v.resize(full.len() - 1, 0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32) -> Arc<CycloField> {
        CycloField::new(m).unwrap()
    }

    #[test]
    fn roots_of_unity_found() {
        let f = k(12);
        // t^4 - 1
        let mut c = vec![Cyclo::zero(&f); 5];
        c[0] = Cyclo::from_int(&f, -1);
        c[4] = Cyclo::one(&f);
        let roots = find_roots(&Poly::new(&f, c)).unwrap();
        assert_eq!(roots.len(), 4);
        for (r, mult) in &roots {
            assert_eq!(*mult, 1);
            assert!(r.pow_u(4).is_one());
        }
    }

    #[test]
    fn nonunit_roots_with_multiplicity() {
        let f = k(8);
        let r1 = Cyclo::from_ratio(&f, 3, 7) + Cyclo::zeta_pow(&f, 1);
        let r2 = Cyclo::zeta_pow(&f, 3).scale_int(5) - Cyclo::zeta_pow(&f, 2);
        let p = &(&Poly::linear(&r1).pow(2) * &Poly::linear(&r2))
            * &Poly::new(&f, vec![Cyclo::from_int(&f, 3), Cyclo::zero(&f), Cyclo::one(&f)]);
        let roots = find_roots(&p).unwrap();
        let mut got: Vec<(Cyclo, u32)> = roots;
        got.sort_by(|a, b| b.1.cmp(&a.1));
        assert_eq!(got.len(), 2);
        assert_eq!(got[0], (r1, 2));
        assert_eq!(got[1], (r2, 1));
    }

    #[test]
    fn irreducible_has_no_roots() {
        let f = k(3);
        // t^2 - 2 over Q(zeta_3)
        let p = Poly::new(&f, vec![Cyclo::from_int(&f, -2), Cyclo::zero(&f), Cyclo::one(&f)]);
        assert!(find_roots(&p).unwrap().is_empty());
    }

    #[test]
    fn rational_field() {
        let f = k(1);
        let p = Poly::from_roots(
            &f,
            &[Cyclo::from_ratio(&f, -5, 3), Cyclo::from_int(&f, 2), Cyclo::from_int(&f, 2)],
        );
        let roots = find_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], (Cyclo::from_ratio(&f, -5, 3), 1));
        assert_eq!(roots[1], (Cyclo::from_int(&f, 2), 2));
    }

    #[test]
    fn larger_conductor() {
        let f = k(54);
        let a = Cyclo::zeta_pow(&f, 7) + Cyclo::from_int(&f, 2);
        let b = Cyclo::zeta_pow(&f, 20).scale_int(-3);
        let p = Poly::from_roots(&f, &[a.clone(), b.clone()]);
        let p = &p * &Poly::new(&f, vec![Cyclo::from_int(&f, 5), Cyclo::zero(&f), Cyclo::one(&f)]);
        let roots: Vec<Cyclo> = find_roots(&p).unwrap().into_iter().map(|r| r.0).collect();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&a) && roots.contains(&b));
    }
}
