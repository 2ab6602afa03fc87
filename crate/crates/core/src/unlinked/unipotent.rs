use super::{class_units, UnlinkedError};
use crate::cyclo::{find_roots, Cyclo, Poly};
use crate::lifting::{ClassSubalgebra, LiftingAlgebra};
use crate::structalg::{corner, Subspace, Vector};
use num_integer::Integer;
use std::collections::BTreeMap;

/// Character idempotents of the group generated by the rescaled `x` and
/// `y b^-1` inside a unipotent class subalgebra.
#[derive(Clone, Debug)]
pub struct UnipotentIdempotents {
    /// `alpha = (s, t)` with `alpha(x'^i y'^j) = zeta_n1^(s i) zeta_n2^(t j)`.
    pub characters: Vec<(usize, usize)>,
    pub idempotents: Vec<Vector>,
    /// Index of the restriction `alpha_W` among the distinct restrictions.
    pub restriction_class: Vec<usize>,
    /// The kernel `W` of `U -> X`, as exponent pairs.
    pub kernel: Vec<(usize, usize)>,
    /// Scalars with `x^n1 = c1` and `(y b^-1)^n2 = c2` on the class.
    pub c1: Cyclo,
    pub c2: Cyclo,
}

impl UnipotentIdempotents {
    pub fn class_count(&self) -> usize {
        self.restriction_class.iter().max().map_or(0, |m| m + 1)
    }

    /// `W` followed by the restriction exponents, e.g. `W[0,2]`.
    pub fn class_labels(&self) -> Vec<String> {
        (0..self.class_count())
            .map(|k| {
                let a = self.restriction_class.iter().position(|&c| c == k).unwrap();
                let (s, t) = self.characters[a];
                format!("W({s},{t})")
            })
            .collect()
    }

    /// Sum of the `f_alpha` with the given restriction class.
    pub fn block_idempotent(&self, k: usize) -> Vector {
        self.idempotents
            .iter()
            .zip(&self.restriction_class)
            .filter(|(_, &c)| c == k)
            .fold(Vector::zero(), |acc, (f, _)| acc.add(f))
    }
}

/// The scalar `s` with `u^n = s * 1`, if `u^n` is scalar.
fn power_scalar(class: &ClassSubalgebra, u: &Vector, n: usize) -> Option<Cyclo> {
    let a = &class.algebra;
    let p = a.pow(u, n as u32);
    let unit = a.unit();
    let (k, c) = unit.leading()?;
    let s = match p.get(k) {
        Some(v) => &(v.clone()) * &c.inv().ok()?,
        None => return None,
    };
    (p == unit.scale(&s)).then_some(s)
}

fn nth_root(c: &Cyclo, n: usize) -> Option<Cyclo> {
    let field = c.field();
    let mut coeffs = vec![Cyclo::zero(field); n + 1];
    coeffs[0] = -c;
    coeffs[n] = Cyclo::one(field);
    let roots = find_roots(&Poly::new(field, coeffs)).ok()?;
    roots.into_iter().next().map(|(r, _)| r)
}

pub fn unipotent_idempotents(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
) -> Result<UnipotentIdempotents, UnlinkedError> {
    if class_units(h, class) != (true, true) {
        return Err(UnlinkedError::CaseMismatch {
            expected: crate::lifting::Potency::Unipotent,
            found: super::class_potency(h, class),
        });
    }
    let g = h.group();
    let d = &h.datum;
    let a = &class.algebra;
    let field = h.field().clone();
    let (n1, n2) = (h.n1(), h.n2());
    let b_inv = g.index_of(&g.inv(&d.b));
    let x = class.x();
    let y_hat = a.mul(&class.y(), &class.group_element(b_inv));
    let c1 = power_scalar(class, &x, n1).ok_or_else(|| UnlinkedError::NotSplit("x^n1 is not scalar".into()))?;
    let c2 = power_scalar(class, &y_hat, n2)
        .ok_or_else(|| UnlinkedError::NotSplit("(y b^-1)^n2 is not scalar".into()))?;
    let r1 = nth_root(&c1, n1).ok_or_else(|| UnlinkedError::NotSplit(format!("t^{n1} - ({c1})")))?;
    let r2 = nth_root(&c2, n2).ok_or_else(|| UnlinkedError::NotSplit(format!("t^{n2} - ({c2})")))?;
    let xs = x.scale(&r1.inv().expect("nonzero"));
    let ys = y_hat.scale(&r2.inv().expect("nonzero"));

    let xp: Vec<Vector> = (0..n1).map(|i| a.pow(&xs, i as u32)).collect();
    let yp: Vec<Vector> = (0..n2).map(|j| a.pow(&ys, j as u32)).collect();
    let u: Vec<Vec<Vector>> = xp.iter().map(|xi| yp.iter().map(|yj| a.mul(xi, yj)).collect()).collect();

    let m = field.conductor() as usize;
    let scale = Cyclo::from_ratio(&field, 1, (n1 * n2) as i64);
    let mut characters = Vec::new();
    let mut idempotents = Vec::new();
    for s in 0..n1 {
        for t in 0..n2 {
            let mut f = Vector::zero();
            for i in 0..n1 {
                for j in 0..n2 {
                    // alpha(z)^-1
                    let e = -((s * i * (m / n1) + t * j * (m / n2)) as i64);
                    f = f.axpy(&Cyclo::zeta_pow(&field, e), &u[i][j]);
                }
            }
            characters.push((s, t));
            idempotents.push(f.scale(&scale));
        }
    }

    let kernel = kernel_pairs(h);
    let l = n1.lcm(&n2);
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let restriction_class = characters
        .iter()
        .map(|&(s, t)| {
            let key: Vec<usize> = kernel
                .iter()
                .map(|&(i, j)| (s * i * (l / n1) + t * j * (l / n2)) % l)
                .collect();
            let next = seen.len();
            *seen.entry(key).or_insert(next)
        })
        .collect();
    Ok(UnipotentIdempotents {
        characters,
        idempotents,
        restriction_class,
        kernel,
        c1,
        c2,
    })
}

/// `W`, the exponent pairs `(i, j)` with `chi1^i chi2^j` trivial.
pub fn kernel_pairs(h: &LiftingAlgebra) -> Vec<(usize, usize)> {
    let g = h.group();
    let d = &h.datum;
    (0..h.n1())
        .flat_map(|i| (0..h.n2()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let c = g.char_mul(&g.char_pow(&d.chi1, i as i64), &g.char_pow(&d.chi2, j as i64));
            g.is_trivial(&c)
        })
        .collect()
}

/// Generators `w1, w2` of `W` with `W = <w1> x <w2>`, with their orders.
/// An element of maximal order spans a direct summand, and `W` has rank at
/// most two, so a cyclic complement exists.
fn kernel_generators(kernel: &[(usize, usize)], n1: usize, n2: usize) -> Vec<((usize, usize), usize)> {
    let order = |(i, j): (usize, usize)| (n1 / i.gcd(&n1)).lcm(&(n2 / j.gcd(&n2)));
    let multiples = |w: (usize, usize)| -> Vec<(usize, usize)> {
        (0..order(w)).map(|k| (k * w.0 % n1, k * w.1 % n2)).collect()
    };
    let w1 = *kernel.iter().max_by_key(|&&w| order(w)).expect("W contains 0");
    let r1 = order(w1);
    if r1 == kernel.len() {
        return vec![(w1, r1)];
    }
    let h1 = multiples(w1);
    let r2 = kernel.len() / r1;
    let w2 = *kernel
        .iter()
        .find(|&&w| order(w) == r2 && multiples(w).iter().skip(1).all(|v| !h1.contains(v)))
        .expect("a cyclic complement");
    vec![(w1, r1), (w2, r2)]
}

/// Block idempotents of a unipotent class from the central subalgebra
/// spanned by `x^i (y b^-1)^j`, `(i, j)` in `W`. Only roots of the scalars
/// `z_w^ord(w)` for the generators of `W` are needed.
pub fn center_idempotents(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<Vec<Vector>, UnlinkedError> {
    if class_units(h, class) != (true, true) {
        return Err(UnlinkedError::CaseMismatch {
            expected: crate::lifting::Potency::Unipotent,
            found: super::class_potency(h, class),
        });
    }
    let g = h.group();
    let a = &class.algebra;
    let field = h.field().clone();
    let (n1, n2) = (h.n1(), h.n2());
    let b_inv = g.index_of(&g.inv(&h.datum.b));
    let y_hat = a.mul(&class.y(), &class.group_element(b_inv));
    let x = class.x();
    let kernel = kernel_pairs(h);
    let m = field.conductor() as usize;

    // per generator: z, its order r and the values phi(z) over all characters
    let mut gens = Vec::new();
    for ((i, j), r) in kernel_generators(&kernel, n1, n2) {
        let z = a.mul(&a.pow(&x, i as u32), &a.pow(&y_hat, j as u32));
        let c = power_scalar(class, &z, r).ok_or_else(|| UnlinkedError::NotSplit(format!("z^{r} is not scalar")))?;
        if m % r != 0 {
            return Err(UnlinkedError::NotSplit(format!("t^{r} - ({c})")));
        }
        let rho = nth_root(&c, r).ok_or_else(|| UnlinkedError::NotSplit(format!("t^{r} - ({c})")))?;
        let values: Vec<Cyclo> = (0..r).map(|s| &rho * &Cyclo::zeta_pow(&field, (s * m / r) as i64)).collect();
        gens.push((z, r, values));
    }
    // e_phi = |W|^-1 sum_e prod_k phi(z_k)^-e_k z_k^e_k, built one generator at a time
    let mut parts: Vec<Vector> = vec![a.unit().clone()];
    for (z, r, values) in &gens {
        let powers: Vec<Vector> = (0..*r).map(|e| a.pow(z, e as u32)).collect();
        let scale = Cyclo::from_ratio(&field, 1, *r as i64);
        let factors: Vec<Vector> = values
            .iter()
            .map(|v| {
                let v_inv = v.inv().expect("nonzero");
                let sum = powers
                    .iter()
                    .enumerate()
                    .fold(Vector::zero(), |acc, (e, p)| acc.axpy(&v_inv.pow_u(e as u64), p));
                sum.scale(&scale)
            })
            .collect();
        parts = parts.iter().flat_map(|p| factors.iter().map(move |f| a.mul(p, f))).collect();
    }
    Ok(parts)
}

/// Checks that block idempotents are central, orthogonal, sum to one and cut
/// out corners `e A e` of dimension `|X|^2`.
pub fn check_block_idempotents(class: &ClassSubalgebra, es: &[Vector]) -> Result<usize, String> {
    let a = &class.algebra;
    let total = es.iter().fold(Vector::zero(), |acc, e| acc.add(e));
    if &total != a.unit() {
        return Err("block idempotents do not sum to 1".into());
    }
    let m = class.coset.len();
    for (p, e) in es.iter().enumerate() {
        for (q, f) in es.iter().enumerate() {
            let ef = a.mul(e, f);
            if (p == q && &ef != e) || (p != q && !ef.is_zero()) {
                return Err(format!("e{p} e{q} is not as expected"));
            }
        }
        if (0..a.dim()).any(|k| a.mul(e, &a.basis(k)) != a.mul(&a.basis(k), e)) {
            return Err(format!("e{p} is not central"));
        }
        let dim = corner(a, e, e).dim();
        if dim != m * m {
            return Err(format!("e{p} A e{p} has dimension {dim}, expected {}", m * m));
        }
    }
    Ok(es.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerCheck {
    pub pairs_checked: usize,
    pub ideal_dim: usize,
}

/// Checks that the `f_alpha` are orthogonal idempotents summing to one, that
/// each left ideal `A f_alpha` has dimension `|X|`, and that
/// `f_beta A f_alpha != 0` exactly when `alpha` and `beta` agree on `W`.
pub fn check_intertwiners(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
    u: &UnipotentIdempotents,
) -> Result<IntertwinerCheck, String> {
    let _ = h;
    let a = &class.algebra;
    let fs = &u.idempotents;
    let total = fs.iter().fold(Vector::zero(), |acc, f| acc.add(f));
    if &total != a.unit() {
        return Err("f_alpha do not sum to 1".into());
    }
    for (p, f) in fs.iter().enumerate() {
        for (q, e) in fs.iter().enumerate() {
            let fe = a.mul(f, e);
            let ok = if p == q { &fe == f } else { fe.is_zero() };
            if !ok {
                return Err(format!("f{:?} f{:?} is not as expected", u.characters[p], u.characters[q]));
            }
        }
    }
    let m = class.coset.len();
    let mut ideal_dim = 0;
    for (p, f) in fs.iter().enumerate() {
        let ideal = Subspace::from_owned((0..a.dim()).map(|k| a.mul(&a.basis(k), f)));
        if ideal.dim() != m {
            return Err(format!("A f{:?} has dimension {}", u.characters[p], ideal.dim()));
        }
        ideal_dim = m;
    }
    let mut pairs = 0;
    for (p, fa) in fs.iter().enumerate() {
        for (q, fb) in fs.iter().enumerate() {
            let nonzero = corner(a, fb, fa).dim() > 0;
            let same = u.restriction_class[p] == u.restriction_class[q];
            if nonzero != same {
                return Err(format!(
                    "f{:?} A f{:?}: nonzero = {nonzero}, same restriction = {same}",
                    u.characters[q], u.characters[p]
                ));
            }
            pairs += 1;
        }
    }
    Ok(IntertwinerCheck {
        pairs_checked: pairs,
        ideal_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::fixtures::datum_b;

    /// `c1 = lambda(a^n1) - 1` and
    /// `c2 = chi2(b)^-(n2 choose 2) (lambda(b^n2) - 1) lambda(b^-n2)`.
    #[test]
    fn scalars_match_closed_form() {
        let d = datum_b();
        let h = LiftingAlgebra::build(&d).unwrap();
        let class = h.class(1);
        let u = unipotent_idempotents(&h, &class).unwrap();
        let g = h.group();
        let lambda = class.representative();
        let one = Cyclo::one(h.field());
        let an = g.pow(&d.a, 2);
        let bn = g.pow(&d.b, 2);
        let c1 = &h.value(lambda, &an) - &one;
        let q2 = h.value(&d.chi2, &d.b);
        let c2 = &(&q2.pow(-1).unwrap() * &(&h.value(lambda, &bn) - &one)) * &h.value(lambda, &g.inv(&bn));
        assert_eq!(u.c1, c1);
        assert_eq!(u.c2, c2);
        assert_eq!(c1, Cyclo::from_int(h.field(), -2));
        assert_eq!(u.class_count(), 2);
        assert_eq!(u.kernel.len(), 2);
    }
}
