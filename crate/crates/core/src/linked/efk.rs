//! The `E, F, K` presentation of a linked class subalgebra, its Casimir
//! element and the commutator identities between powers of `E` and `F`.

use super::LinkedError;
use crate::abelian::GroupElement;
use crate::cyclo::{find_roots, q_binomial, q_int, Cyclo, Poly};
use crate::lifting::{ClassSubalgebra, LiftingAlgebra};
use crate::report::CheckResult;
use crate::structalg::{eval_poly, min_poly, StructAlgebra, Vector};

/// `E = a^-1 x`, `F = y`, `K = mu g0` inside `H e_{lambda X}` together with
/// the constants of the presentation and the choices made to reach it.
#[derive(Clone, Debug)]
pub struct EfkPresentation {
    pub e: Vector,
    pub f: Vector,
    pub k: Vector,
    pub k_inv: Vector,
    /// `chi2(a)`, of order `n`.
    pub q: Cyclo,
    /// `chi1(g0)`, a primitive `N`-th root with `theta^m = q`.
    pub theta: Cyclo,
    pub kappa: Cyclo,
    pub eta: Cyclo,
    pub n: usize,
    pub m: usize,
    pub big_n: usize,
    pub g0: GroupElement,
    pub h1: GroupElement,
    pub h2: GroupElement,
    pub alpha: Cyclo,
    pub beta: Cyclo,
    pub mu: Cyclo,
    /// Scalars with `E^n = e_power` and `F^n = f_power`.
    pub e_power: Cyclo,
    pub f_power: Cyclo,
    /// Set after exchanging `(E, F, K)` for `(F, E, K^-1)`.
    pub mirrored: bool,
    /// Eigenvalue of `K` on `e_nu`, by position of `nu` in the coset.
    pub weights: Vec<Cyclo>,
}

/// `s` with `u = s * unit`, if `u` is a scalar.
pub(crate) fn scalar_of(a: &StructAlgebra, u: &Vector) -> Option<Cyclo> {
    let unit = a.unit();
    if u.is_zero() {
        return Some(Cyclo::zero(a.field()));
    }
    let (k, c) = unit.leading()?;
    let s = &u.get(k)?.clone() * &c.inv().ok()?;
    (u == &unit.scale(&s)).then_some(s)
}

pub fn efk_normal_form(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<EfkPresentation, LinkedError> {
    if !h.tag().linked {
        return Err(LinkedError::NotLinked);
    }
    let g = h.group();
    let d = &h.datum;
    let a = &class.algebra;
    let field = h.field();
    let chi = &d.chi1;
    let lambda = class.representative();
    let big_n = g.char_order(chi) as usize;
    let q = h.value(&d.chi2, &d.a);
    let n = h.n1();
    let m = big_n / n;

    let g0 = (0..g.order())
        .map(|i| g.element_at(i))
        .find(|el| {
            g.value_order(chi, el) as usize == big_n && h.value(chi, el).pow_u(m as u64) == q
        })
        .ok_or_else(|| LinkedError::Construction("no g0 with chi(g0)^m = q".into()))?;
    let theta = h.value(chi, &g0);
    let h1 = g.mul(&g.inv(&d.a), &g.pow(&g0, -(m as i64)));
    let h2 = g.mul(&d.b, &g.pow(&g0, m as i64));
    for (name, el) in [("h1", &h1), ("h2", &h2)] {
        if g.value_exponent(chi, el) != 0 {
            return Err(LinkedError::Construction(format!("{name} is not in the kernel of chi")));
        }
    }
    let alpha = h.value(lambda, &h1);
    let beta = h.value(lambda, &h2);
    let ratio = &alpha * &beta.inv().expect("root of unity");
    let conductor = field.conductor() as usize;
    let t = ratio
        .root_of_unity_exponent()
        .ok_or_else(|| LinkedError::Construction("alpha/beta is not a root of unity".into()))?
        as usize;
    let e_mu = (0..conductor)
        .find(|e| (2 * m * e) % conductor == t)
        .ok_or_else(|| LinkedError::Construction(format!("alpha/beta has no {}-th root", 2 * m)))?;
    let mu = Cyclo::zeta_pow(field, e_mu as i64);
    let mu_inv = mu.inv().expect("root of unity");

    let g0_idx = g.index_of(&g0);
    let g0_inv = g.index_of(&g.inv(&g0));
    let k = class.group_element(g0_idx).scale(&mu);
    let k_inv = class.group_element(g0_inv).scale(&mu_inv);
    let eta = &(h.gamma() * &beta) * &mu.pow_u(m as u64);
    let kappa = &mu.pow_u(big_n as u64) * &h.value(lambda, &g.pow(&g0, big_n as i64));

    let a_inv = g.index_of(&g.inv(&d.a));
    let e = a.mul(&class.group_element(a_inv), &class.x());
    let f = class.y();
    let e_power = scalar_of(a, &a.pow(&e, n as u32))
        .ok_or_else(|| LinkedError::Construction("E^n is not a scalar".into()))?;
    let f_power = scalar_of(a, &a.pow(&f, n as u32))
        .ok_or_else(|| LinkedError::Construction("F^n is not a scalar".into()))?;
    let weights = class.coset.iter().map(|nu| &mu * &h.value(nu, &g0)).collect();

    Ok(EfkPresentation {
        e,
        f,
        k,
        k_inv,
        q,
        theta,
        kappa,
        eta,
        n,
        m,
        big_n,
        g0,
        h1,
        h2,
        alpha,
        beta,
        mu,
        e_power,
        f_power,
        mirrored: false,
        weights,
    })
}

/// Closed forms `E^n = eps1 q^-(n choose 2) (1 - lambda(a^-n))` and
/// `F^n = eps2 (lambda(b^n) - 1)` for the unmirrored presentation.
pub fn expected_powers(h: &LiftingAlgebra, class: &ClassSubalgebra) -> (Cyclo, Cyclo) {
    let g = h.group();
    let d = &h.datum;
    let lambda = class.representative();
    let n = h.n1() as i64;
    let one = Cyclo::one(h.field());
    let q = h.value(&d.chi2, &d.a);
    let e = if d.eps1 {
        &q.pow(-(n * (n - 1) / 2)).expect("root of unity") * &(&one - &h.value(lambda, &g.pow(&d.a, -n)))
    } else {
        Cyclo::zero(h.field())
    };
    let f = if d.eps2 {
        &h.value(lambda, &g.pow(&d.b, n)) - &one
    } else {
        Cyclo::zero(h.field())
    };
    (e, f)
}

fn check(name: &str, ok: bool, detail: impl FnOnce() -> String) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed: ok,
        detail: if ok { String::new() } else { detail() },
    }
}

impl EfkPresentation {
    /// `(E, F, K) -> (F, E, K^-1)`: the same relations with `kappa` inverted.
    pub fn mirror(&self) -> EfkPresentation {
        EfkPresentation {
            e: self.f.clone(),
            f: self.e.clone(),
            k: self.k_inv.clone(),
            k_inv: self.k.clone(),
            kappa: self.kappa.inv().expect("nonzero"),
            e_power: self.f_power.clone(),
            f_power: self.e_power.clone(),
            mirrored: !self.mirrored,
            weights: self.weights.iter().map(|w| w.inv().expect("nonzero")).collect(),
            ..self.clone()
        }
    }

    pub fn k_pow(&self, a: &StructAlgebra, e: i64) -> Vector {
        if e >= 0 {
            a.pow(&self.k, e as u32)
        } else {
            a.pow(&self.k_inv, (-e) as u32)
        }
    }

    /// Position of the weight `w` among the `K`-eigenvalues of the coset.
    pub fn weight_index(&self, w: &Cyclo) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }

    /// The six defining relations, each checked by multiplication.
    pub fn check_relations(&self, a: &StructAlgebra) -> Vec<CheckResult> {
        let (n, m) = (self.n as u32, self.m as i64);
        let theta_inv = self.theta.inv().expect("root of unity");
        let unit = a.unit();
        let ef = a.commutator(&self.e, &self.f);
        let rhs = self.k_pow(a, -m).sub(&self.k_pow(a, m)).scale(&self.eta);
        let ke = a.mul(&self.k, &self.e);
        let kf = a.mul(&self.k, &self.f);
        vec![
            check("E^n scalar", a.pow(&self.e, n) == unit.scale(&self.e_power), || {
                format!("E^n != {}", self.e_power)
            }),
            check("F^n scalar", a.pow(&self.f, n) == unit.scale(&self.f_power), || {
                format!("F^n != {}", self.f_power)
            }),
            check("K^N = kappa", self.k_pow(a, self.big_n as i64) == unit.scale(&self.kappa), || {
                format!("kappa = {}", self.kappa)
            }),
            check("EF - FE = eta (K^-m - K^m)", ef == rhs, || "commutator differs".into()),
            check("KE = theta EK", ke == a.mul(&self.e, &self.k).scale(&self.theta), || {
                "KE differs".into()
            }),
            check("KF = theta^-1 FK", kf == a.mul(&self.f, &self.k).scale(&theta_inv), || {
                "KF differs".into()
            }),
            check("K K^-1 = 1", &a.mul(&self.k, &self.k_inv) == unit, || "K is not inverted".into()),
        ]
    }

    pub fn eta_prime(&self) -> Cyclo {
        let one = Cyclo::one(self.q.field());
        &self.eta * &(&self.q - &one).inv().expect("q != 1")
    }

    /// `D(rho) = rho^-m + q rho^m`.
    pub fn d_value(&self, rho: &Cyclo) -> Cyclo {
        let rm = rho.pow_u(self.m as u64);
        &rm.inv().expect("nonzero") + &(&self.q * &rm)
    }

    /// `prod_{i<n} (t + eta' D(theta^i rho)) - E^n F^n` for any weight `rho`.
    pub fn casimir_polynomial(&self) -> Poly {
        let field = self.q.field();
        let ep = self.eta_prime();
        let mut rho = self.weights[0].clone();
        let mut p = Poly::one(field);
        for _ in 0..self.n {
            let c = &ep * &self.d_value(&rho);
            p = &p * &Poly::new(field, vec![c, Cyclo::one(field)]);
            rho = &rho * &self.theta;
        }
        &p - &Poly::constant(&self.e_power * &self.f_power)
    }

    pub fn casimir(&self, a: &StructAlgebra) -> CasimirData {
        let m = self.m as i64;
        let ep = self.eta_prime();
        let d = self.k_pow(a, -m).add(&self.k_pow(a, m).scale(&self.q));
        let c = a
            .mul(&self.e, &self.f)
            .sub(&self.k_pow(a, m).add(&self.k_pow(a, -m).scale(&self.q)).scale(&ep));
        let minpoly = self.casimir_polynomial();
        let roots = find_roots(&minpoly).unwrap_or_default();
        CasimirData {
            c,
            eta_prime: ep,
            d,
            minpoly,
            roots,
        }
    }

    /// The `i`-th summand `eta^i F^(r-i) H_i E^(s-i)` of `[E^s, F^r]`, with
    /// `H_i = (r)_q ... (r-i+1)_q [s, i]_q prod_{j=1}^{i} (K^-m - q^(i+j-r-s) K^m)`.
    pub fn kac_term(&self, a: &StructAlgebra, s: usize, r: usize, i: usize) -> Vector {
        let q = &self.q;
        let m = self.m as i64;
        let km = self.k_pow(a, m);
        let kmi = self.k_pow(a, -m);
        let mut coeff = q_binomial(s as u32, i as u32, q);
        for t in 0..i {
            coeff = &coeff * &q_int((r - t) as u32, q);
        }
        coeff = &coeff * &self.eta.pow_u(i as u64);
        let mut hi = a.unit().scale(&coeff);
        for j in 1..=i {
            let e = i as i64 + j as i64 - r as i64 - s as i64;
            let factor = kmi.sub(&km.scale(&q.pow(e).expect("root of unity")));
            hi = a.mul(&hi, &factor);
        }
        a.mul(&a.mul(&a.pow(&self.f, (r - i) as u32), &hi), &a.pow(&self.e, (s - i) as u32))
    }

    pub fn kac_rhs(&self, a: &StructAlgebra, s: usize, r: usize) -> Vector {
        (1..=s.min(r)).fold(Vector::zero(), |acc, i| acc.add(&self.kac_term(a, s, r, i)))
    }

    /// First `(s, r)` with `1 <= s, r < n` where the commutator identity fails.
    pub fn check_kac(&self, a: &StructAlgebra) -> Result<usize, (usize, usize)> {
        let mut count = 0;
        for s in 1..self.n {
            for r in 1..self.n {
                let es = a.pow(&self.e, s as u32);
                let fr = a.pow(&self.f, r as u32);
                if a.commutator(&es, &fr) != self.kac_rhs(a, s, r) {
                    return Err((s, r));
                }
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Casimir element of a class and its minimal polynomial.
#[derive(Clone, Debug)]
pub struct CasimirData {
    pub c: Vector,
    pub eta_prime: Cyclo,
    /// `K^-m + q K^m`.
    pub d: Vector,
    pub minpoly: Poly,
    /// Roots in the working field, with multiplicity.
    pub roots: Vec<(Cyclo, u32)>,
}

impl CasimirData {
    /// Both expressions, the image of the Casimir of `H`, centrality against
    /// every basis element, `f(C) = 0` and minimality of `f`.
    pub fn checks(
        &self,
        p: &EfkPresentation,
        h: &LiftingAlgebra,
        class: &ClassSubalgebra,
    ) -> Vec<CheckResult> {
        let a = &class.algebra;
        let m = p.m as i64;
        let second = a
            .mul(&p.f, &p.e)
            .sub(&p.k_pow(a, -m).add(&p.k_pow(a, m).scale(&p.q)).scale(&self.eta_prime));
        let image = casimir_image(h, class);
        let unit = a.unit();
        let vanishes = eval_poly(a, &self.minpoly, &self.c, unit).is_zero();
        let mp = min_poly(a, &self.c, unit);
        vec![
            check("Casimir: EF and FE forms agree", second == self.c, || "forms differ".into()),
            check("Casimir: image of C", image == self.c, || "differs from a^-1 x y - ...".into()),
            check("Casimir: central", a.is_central(&self.c), || "fails to commute".into()),
            check("Casimir: f(C) = 0", vanishes, || format!("f = {:?}", self.minpoly)),
            check(
                "Casimir: f minimal of degree n",
                mp == self.minpoly.monic() && mp.degree() == Some(p.n),
                || format!("minimal polynomial {mp:?}"),
            ),
        ]
    }
}

/// `(a^-1 x) y - gamma/(q-1) (a^-1 + q b)` in the class, built from `x`, `y`
/// and group elements only.
pub fn casimir_image(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Vector {
    let g = h.group();
    let d = &h.datum;
    let a = &class.algebra;
    let q = h.value(&d.chi2, &d.a);
    let one = Cyclo::one(h.field());
    let a_inv = class.group_element(g.index_of(&g.inv(&d.a)));
    let b = class.group_element(g.index_of(&d.b));
    let c = &h.gamma().clone() * &(&q - &one).inv().expect("q != 1");
    a.mul(&a.mul(&a_inv, &class.x()), &class.y())
        .sub(&a_inv.add(&b.scale(&q)).scale(&c))
}

/// `rho` together with `e(rho)`, `e'(rho)` and exceptionality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    pub rho: Cyclo,
    /// Position of `rho` among the `K`-weights of the coset.
    pub index: usize,
    /// `rho^(2m) = q^e`, when `rho^(2m)` is a power of `q`.
    pub e: Option<usize>,
    pub e_prime: Option<usize>,
    pub exceptional: bool,
}

impl EfkPresentation {
    pub fn root_data(&self, index: usize) -> RootData {
        let rho = self.weights[index].clone();
        let p = rho.pow_u(2 * self.m as u64);
        let n = self.n;
        let e = (0..n).find(|&e| self.q.pow_u(e as u64) == p);
        RootData {
            e_prime: e.map(|e| (n - e) % n),
            exceptional: e == Some(n - 1),
            e,
            rho,
            index,
        }
    }

    /// `sigma(rho) = theta^-(e+1) rho`, fixing exceptional roots.
    pub fn sigma(&self, index: usize) -> Option<usize> {
        let rd = self.root_data(index);
        let e = rd.e?;
        if rd.exceptional {
            return Some(index);
        }
        let shift = self.theta.pow(-(e as i64 + 1)).expect("root of unity");
        self.weight_index(&(&shift * &rd.rho))
    }

    /// Orbits `rho, sigma rho, sigma^2 rho, ...`, in order of first member.
    pub fn sigma_orbits(&self) -> Option<Vec<Vec<usize>>> {
        let mut seen = vec![false; self.weights.len()];
        let mut out = Vec::new();
        for start in 0..self.weights.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cur = self.sigma(start)?;
            while cur != start {
                if seen[cur] {
                    return None;
                }
                seen[cur] = true;
                orbit.push(cur);
                cur = self.sigma(cur)?;
            }
            out.push(orbit);
        }
        Some(out)
    }
}
