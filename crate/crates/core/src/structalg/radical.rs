use super::{left_kernel, StructAlgebra, Subspace, Vector};
use crate::cyclo::Cyclo;
use crate::par;

/// `t_k = tr(L_{b_k})` for the left regular representation.
pub fn trace_vector(a: &StructAlgebra) -> Vec<Cyclo> {
    let d = a.dim();
    par::map_range(d, |k| {
        let mut acc = Cyclo::zero(a.field());
        for l in 0..d {
            if let Some(c) = a.product(k, l).get(l) {
                acc += c;
            }
        }
        acc
    })
}

/// Jacobson radical as the kernel of the trace form `(u, v) -> tr(L_{uv})`,
/// valid in characteristic zero.
pub fn radical(a: &StructAlgebra) -> Subspace {
    let d = a.dim();
    let t = trace_vector(a);
    let rows: Vec<Vector> = par::map_range(d, |i| {
        Vector::from_pairs((0..d).filter_map(|j| {
            let p = a.product(i, j);
            if p.is_zero() {
                return None;
            }
            let v = p.dot_dense(&t);
            (!v.is_zero()).then_some((j, v))
        }))
    });
    Subspace::from_owned(left_kernel(&rows, d, a.field()))
}

/// `span{u v : u in U, v in V}`.
pub fn span_products(a: &StructAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let parts: Vec<Vec<Vector>> = par::map(u.basis(), |x| {
        v.basis().iter().map(|y| a.mul(x, y)).collect()
    });
    Subspace::from_owned(parts.into_iter().flatten())
}

/// `J^k`, with `J^0` the whole algebra.
pub fn radical_power(a: &StructAlgebra, j: &Subspace, k: usize) -> Subspace {
    if k == 0 {
        return Subspace::from_owned((0..a.dim()).map(|i| a.basis(i)));
    }
    let mut p = j.clone();
    for _ in 1..k {
        if p.dim() == 0 {
            break;
        }
        p = span_products(a, &p, j);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::super::test_algebras::*;
    use super::*;
    use crate::cyclo::CycloField;

    #[test]
    fn radical_examples() {
        let f = CycloField::new(1).unwrap();
        let t2 = truncated(&f, 2);
        let j = radical(&t2);
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&t2.basis(1)));
        assert_eq!(radical(&matrices(&f, 2)).dim(), 0);
        let ar = arrow(&f);
        let j = radical(&ar);
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&ar.basis(2)));
        assert_eq!(radical_power(&ar, &j, 2).dim(), 0);
        let t4 = truncated(&f, 4);
        let j = radical(&t4);
        assert_eq!(radical_power(&t4, &j, 2).dim(), 2);
        assert_eq!(radical_power(&t4, &j, 4).dim(), 0);
    }
}
