use super::{left_kernel, AlgebraError, DependencyTracker, StructAlgebra, Subspace, Vector};
use crate::cyclo::{find_roots, Cyclo, Poly};
use crate::par;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_TRIES: usize = 48;

/// `span{u b_k v}`.
pub fn corner(a: &StructAlgebra, u: &Vector, v: &Vector) -> Subspace {
    let right: Vec<Vector> = (0..a.dim()).map(|k| a.mul(&a.basis(k), v)).collect();
    let av = Subspace::from_owned(right);
    Subspace::from_owned(av.basis().iter().map(|w| a.mul(u, w)))
}

/// Minimal polynomial of `z` inside the unital subalgebra with identity `unit`.
pub fn min_poly(a: &StructAlgebra, z: &Vector, unit: &Vector) -> Poly {
    let field = a.field();
    let mut tracker = DependencyTracker::new(a.dim(), field);
    let mut p = unit.clone();
    loop {
        if let Some(d) = tracker.push(&p) {
            let k = d.len();
            let mut coeffs: Vec<Cyclo> = d.iter().map(|c| -c).collect();
            coeffs.push(Cyclo::one(field));
            debug_assert_eq!(coeffs.len(), k + 1);
            return Poly::new(field, coeffs);
        }
        p = a.mul(&p, z);
    }
}

/// `p(z)` with constant term `p_0 * unit`.
pub fn eval_poly(a: &StructAlgebra, p: &Poly, z: &Vector, unit: &Vector) -> Vector {
    let mut acc = Vector::zero();
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc, z).axpy(c, unit);
    }
    acc
}

/// Splits `z`'s minimal polynomial into pairwise coprime parts: one
/// `(t - r)^k` per root in the field and the rootless remainder.
fn coprime_parts(mp: &Poly) -> Vec<Poly> {
    let roots = match find_roots(mp) {
        Ok(r) => r,
        Err(_) => return vec![mp.clone()],
    };
    let mut parts = Vec::new();
    let mut rest = mp.clone();
    for (r, k) in roots {
        let f = Poly::linear(&r).pow(k);
        rest = rest.exact_div(&f);
        parts.push(f);
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(rest.monic());
    }
    parts
}

fn try_split(a: &StructAlgebra, z: &Vector, u: &Vector) -> Option<Vec<Vector>> {
    let mp = min_poly(a, z, u);
    let parts = coprime_parts(&mp);
    if parts.len() < 2 {
        return None;
    }
    Some(
        Poly::crt_idempotents(&parts)
            .iter()
            .map(|p| eval_poly(a, p, z, u))
            .collect(),
    )
}

fn split(a: &StructAlgebra, j: &Subspace, u: &Vector) -> Result<Vec<Vector>, AlgebraError> {
    let cu = corner(a, u, u);
    let semisimple = cu.dim() - cu.intersection_dim(j);
    if semisimple <= 1 {
        return Ok(vec![u.clone()]);
    }
    let basis: Vec<Vector> = cu.basis().to_vec();
    let mut candidates: Box<dyn Iterator<Item = Vector>> = Box::new(basis.clone().into_iter());
    let pair_limit = basis.len().min(12);
    let pairs: Vec<Vector> = (0..pair_limit)
        .flat_map(|i| (i + 1..pair_limit).map(move |k| (i, k)))
        .map(|(i, k)| basis[i].add(&basis[k]))
        .collect();
    candidates = Box::new(candidates.chain(pairs));
    let mut rng = ChaCha8Rng::seed_from_u64(0x1de_a11);
    let field = a.field().clone();
    let randoms: Vec<Vector> = (0..RANDOM_TRIES)
        .map(|_| {
            basis.iter().fold(Vector::zero(), |acc, b| {
                let c: i64 = rng.gen_range(-3..=3);
                acc.axpy(&Cyclo::from_int(&field, c), b)
            })
        })
        .collect();
    candidates = Box::new(candidates.chain(randoms));
    for z in candidates {
        if let Some(pieces) = try_split(a, &z, u) {
            let mut out = Vec::new();
            for p in pieces {
                out.extend(split(a, j, &p)?);
            }
            return Ok(out);
        }
    }
    Err(AlgebraError::NonSplit(field.conductor(), semisimple))
}

/// Refines a complete family of orthogonal idempotents into primitive ones.
pub fn primitive_idempotents(
    a: &StructAlgebra,
    j: &Subspace,
    start: &[Vector],
) -> Result<Vec<Vector>, AlgebraError> {
    for e in start {
        if !a.is_idempotent(e) {
            return Err(AlgebraError::NotIdempotent);
        }
    }
    let nested: Vec<Result<Vec<Vector>, AlgebraError>> = par::map(start, |e| split(a, j, e));
    let mut out = Vec::new();
    for r in nested {
        out.extend(r?);
    }
    Ok(out)
}

/// Center, computed as the common kernel of `z -> z g - g z` over
/// `generators` (all basis elements when `None`).
pub fn center(a: &StructAlgebra, generators: Option<&[usize]>) -> Subspace {
    let d = a.dim();
    let gens: Vec<usize> = match generators {
        Some(g) => g.to_vec(),
        None => (0..d).collect(),
    };
    let rows: Vec<Vector> = par::map_range(d, |i| {
        let b = a.basis(i);
        gens.iter().enumerate().fold(Vector::zero(), |acc, (t, &g)| {
            let bg = a.basis(g);
            acc.add(&a.commutator(&b, &bg).shifted(t * d))
        })
    });
    Subspace::from_owned(left_kernel(&rows, d * gens.len(), a.field()))
}

/// Groups primitive idempotents into blocks by the linkage relation
/// `u_j A u_i != 0`; returns index groups.
pub fn linkage_classes(a: &StructAlgebra, prims: &[Vector]) -> Vec<Vec<usize>> {
    let n = prims.len();
    let left: Vec<Subspace> = par::map(prims, |v| {
        Subspace::from_owned((0..a.dim()).map(|k| a.mul(&a.basis(k), v)))
    });
    let linked: Vec<Vec<bool>> = par::map_range(n, |i| {
        (0..n)
            .map(|jx| left[i].basis().iter().any(|w| !a.mul(&prims[jx], w).is_zero()))
            .collect()
    });
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..n {
        for jx in 0..n {
            if linked[i][jx] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, jx));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of = std::collections::BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        let g = *root_of.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}

/// Block idempotents: sums of primitive idempotents over linkage classes.
pub fn central_idempotents(
    a: &StructAlgebra,
    j: &Subspace,
    start: &[Vector],
) -> Result<Vec<Vector>, AlgebraError> {
    let prims = primitive_idempotents(a, j, start)?;
    Ok(linkage_classes(a, &prims)
        .into_iter()
        .map(|g| g.iter().fold(Vector::zero(), |acc, &i| acc.add(&prims[i])))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::radical;
    use super::super::test_algebras::*;
    use super::*;
    use crate::cyclo::CycloField;

    #[test]
    fn matrix_unit_splits_into_rank_one_pieces() {
        let f = CycloField::new(1).unwrap();
        let m = matrices(&f, 3);
        let j = radical(&m);
        let prims = primitive_idempotents(&m, &j, &[m.unit().clone()]).unwrap();
        assert_eq!(prims.len(), 3);
        let sum = prims.iter().fold(Vector::zero(), |acc, p| acc.add(p));
        assert_eq!(&sum, m.unit());
        for (i, p) in prims.iter().enumerate() {
            for (k, q) in prims.iter().enumerate() {
                let pq = m.mul(p, q);
                if i == k {
                    assert_eq!(&pq, p);
                } else {
                    assert!(pq.is_zero());
                }
            }
        }
        assert_eq!(central_idempotents(&m, &j, &[m.unit().clone()]).unwrap().len(), 1);
        assert_eq!(center(&m, None).dim(), 1);
    }

    #[test]
    fn commutative_semisimple_splits_fully() {
        // K Z_3 over Q(zeta_3) is K^3
        let f = CycloField::new(3).unwrap();
        let a = StructAlgebra::from_fn(
            &f,
            vec!["1".into(), "g".into(), "g2".into()],
            Vector::unit(0, &f),
            |i, k| Vector::unit((i + k) % 3, &f),
        )
        .unwrap();
        let j = radical(&a);
        let blocks = central_idempotents(&a, &j, &[a.unit().clone()]).unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(center(&a, Some(&[1])).dim(), 3);
    }

    #[test]
    fn arrow_algebra_is_one_block() {
        let f = CycloField::new(1).unwrap();
        let ar = arrow(&f);
        let j = radical(&ar);
        let prims = primitive_idempotents(&ar, &j, &[ar.unit().clone()]).unwrap();
        assert_eq!(prims.len(), 2);
        assert_eq!(linkage_classes(&ar, &prims).len(), 1);
    }
}
