//! Theory-free structure analysis of a split algebra: simples, projective
//! covers, blocks, Gabriel quiver, Loewy layers and socles.

use super::{
    center, linkage_classes, primitive_idempotents, radical, span_products, AlgebraError,
    StructAlgebra, Subspace, Vector,
};
use crate::par;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalysisDepth {
    /// Radical, simples, blocks, quiver, Loewy layers.
    Regular,
    /// Additionally socle and top census of every projective.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSimple {
    pub dim: usize,
    pub projective_dim: usize,
    pub block: usize,
    /// Multiplicity of each labelled weight idempotent in the simple module.
    pub weights: Vec<(String, usize)>,
    /// Per Loewy layer of the projective cover, multiplicity of each simple.
    pub pim_layers: Vec<Vec<usize>>,
    pub pim_top: Vec<usize>,
    /// Present at `Full` depth.
    pub pim_socle: Option<Vec<usize>>,
    /// Weight census of the socle and of the top, at `Full` depth.
    pub socle_weights: Option<Vec<(String, usize)>>,
    pub top_weights: Option<Vec<(String, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBlock {
    pub simples: Vec<usize>,
    pub dim: usize,
    pub radical_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleArrow {
    pub from: usize,
    pub to: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub dim: usize,
    pub radical_dim: usize,
    pub loewy_length: usize,
    pub center_dim: usize,
    /// `dim Z - dim (Z cap J)`, an independent count of blocks.
    pub center_block_count: usize,
    pub simples: Vec<OracleSimple>,
    pub blocks: Vec<OracleBlock>,
    pub arrows: Vec<OracleArrow>,
}

impl OracleReport {
    pub fn simple_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.simples.iter().map(|s| s.dim).collect();
        v.sort_unstable();
        v
    }

    pub fn projective_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.simples.iter().map(|s| s.projective_dim).collect();
        v.sort_unstable();
        v
    }

    pub fn block_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks.iter().map(|b| b.dim).collect();
        v.sort_unstable();
        v
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.multiplicity).sum()
    }
}

fn left_span(a: &StructAlgebra, elems: &[Vector], v: &Vector) -> Subspace {
    Subspace::from_owned(elems.iter().map(|x| a.mul(x, v)))
}

fn left_mult(a: &StructAlgebra, e: &Vector, s: &Subspace) -> Subspace {
    Subspace::from_owned(s.basis().iter().map(|m| a.mul(e, m)))
}

/// Full oracle analysis. `start` must be orthogonal idempotents summing to
/// one; `weights` are labelled idempotents used only to describe modules.
pub fn analyze(
    a: &StructAlgebra,
    start: &[Vector],
    weights: &[(String, Vector)],
    depth: AnalysisDepth,
) -> Result<OracleReport, AlgebraError> {
    let d = a.dim();
    let j = radical(a);
    let prims = primitive_idempotents(a, &j, start)?;
    let all: Vec<Vector> = (0..d).map(|k| a.basis(k)).collect();
    let jb: Vec<Vector> = j.basis().to_vec();

    let proj: Vec<Subspace> = par::map(&prims, |u| left_span(a, &all, u));
    let rad_proj: Vec<Subspace> = par::map(&prims, |u| left_span(a, &jb, u));

    // isomorphism classes of primitive idempotents
    let top_sig: Vec<(usize, Vec<usize>)> = par::map_range(prims.len(), |i| {
        let census = weights
            .iter()
            .map(|(_, e)| left_mult(a, e, &proj[i]).dim() - left_mult(a, e, &rad_proj[i]).dim())
            .collect();
        (proj[i].dim(), census)
    });
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![usize::MAX; prims.len()];
    for i in 0..prims.len() {
        let found = reps.iter().position(|&r| {
            top_sig[r] == top_sig[i] && isomorphic(a, &j, &prims, &proj, r, i)
        });
        match found {
            Some(c) => class_of[i] = c,
            None => {
                class_of[i] = reps.len();
                reps.push(i);
            }
        }
    }
    let ns = reps.len();
    let simple_dim: Vec<usize> = (0..ns)
        .map(|c| class_of.iter().filter(|&&x| x == c).count())
        .collect();
    let rep_idem: Vec<Vector> = reps.iter().map(|&r| prims[r].clone()).collect();

    // blocks
    let groups = linkage_classes(a, &rep_idem);
    let mut block_of = vec![0; ns];
    for (b, g) in groups.iter().enumerate() {
        for &c in g {
            block_of[c] = b;
        }
    }
    let blocks: Vec<OracleBlock> = groups
        .iter()
        .map(|g| {
            let dim: usize = g.iter().map(|&c| simple_dim[c] * proj[reps[c]].dim()).sum();
            let ss: usize = g.iter().map(|&c| simple_dim[c] * simple_dim[c]).sum();
            OracleBlock {
                simples: g.clone(),
                dim,
                radical_dim: dim - ss,
            }
        })
        .collect();

    // quiver: arrows c -> t with multiplicity dim u_t (J/J^2) u_c
    let j2 = span_products(a, &j, &j);
    let j2b: Vec<Vector> = j2.basis().to_vec();
    let arrows: Vec<OracleArrow> = par::map_range(ns, |c| {
        let u = &rep_idem[c];
        let ju = &rad_proj[reps[c]];
        let j2u = left_span(a, &j2b, u);
        (0..ns)
            .filter_map(|t| {
                let e = &rep_idem[t];
                let k = left_mult(a, e, ju).dim() - left_mult(a, e, &j2u).dim();
                (k > 0).then_some(OracleArrow {
                    from: c,
                    to: t,
                    multiplicity: k,
                })
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    // Loewy layers of projectives in terms of simples
    let simples: Vec<OracleSimple> = par::map_range(ns, |c| {
        let p = &proj[reps[c]];
        let mut chain = vec![p.clone()];
        while chain.last().unwrap().dim() > 0 {
            let next = span_products(a, &j, chain.last().unwrap());
            chain.push(next);
        }
        let census = |upper: &Subspace, lower: &Subspace| -> Vec<usize> {
            rep_idem
                .iter()
                .map(|e| left_mult(a, e, upper).dim() - left_mult(a, e, lower).dim())
                .collect()
        };
        let wcensus = |upper: &Subspace, lower: &Subspace| -> Vec<(String, usize)> {
            weights
                .iter()
                .filter_map(|(l, e)| {
                    let k = left_mult(a, e, upper).dim() - left_mult(a, e, lower).dim();
                    (k > 0).then(|| (l.clone(), k))
                })
                .collect()
        };
        let pim_layers: Vec<Vec<usize>> = chain.windows(2).map(|w| census(&w[0], &w[1])).collect();
        let zero = Subspace::new();
        let (pim_socle, socle_weights, top_weights) = match depth {
            AnalysisDepth::Regular => (None, None, None),
            AnalysisDepth::Full => {
                let soc = socle_of(a, &jb, p);
                (
                    Some(census(&soc, &zero)),
                    Some(wcensus(&soc, &zero)),
                    Some(wcensus(p, &chain[1])),
                )
            }
        };
        OracleSimple {
            dim: simple_dim[c],
            projective_dim: p.dim(),
            block: block_of[c],
            weights: wcensus(p, &chain[1]),
            pim_top: pim_layers[0].clone(),
            pim_layers,
            pim_socle,
            socle_weights,
            top_weights,
        }
    });

    let z = center(a, None);
    let center_block_count = z.dim() - z.intersection_dim(&j);
    let mut loewy_length = 0;
    let mut power = Subspace::from_owned(all.iter().cloned());
    while power.dim() > 0 {
        loewy_length += 1;
        power = span_products(a, &power, &j);
    }

    Ok(OracleReport {
        dim: d,
        radical_dim: j.dim(),
        loewy_length,
        center_dim: z.dim(),
        center_block_count,
        simples,
        blocks,
        arrows,
    })
}

/// `u_i ~ u_k` iff some product in `u_i A u_k . u_k A u_i` escapes `J`.
fn isomorphic(
    a: &StructAlgebra,
    j: &Subspace,
    prims: &[Vector],
    proj: &[Subspace],
    i: usize,
    k: usize,
) -> bool {
    let ik = left_mult(a, &prims[i], &proj[k]);
    if ik.dim() == 0 {
        return false;
    }
    let ki = left_mult(a, &prims[k], &proj[i]);
    ik.basis()
        .iter()
        .any(|x| ki.basis().iter().any(|y| !j.contains(&a.mul(x, y))))
}

/// `{m in P : J m = 0}` for a left ideal `P`.
fn socle_of(a: &StructAlgebra, jb: &[Vector], p: &Subspace) -> Subspace {
    let d = a.dim();
    if jb.is_empty() {
        return p.clone();
    }
    let rows: Vec<Vector> = par::map(p.basis(), |m| {
        jb.iter().enumerate().fold(Vector::zero(), |acc, (t, x)| {
            acc.add(&a.mul(x, m).shifted(t * d))
        })
    });
    let ker = super::left_kernel(&rows, d * jb.len(), a.field());
    Subspace::from_owned(ker.iter().map(|coeffs| {
        coeffs
            .iter()
            .fold(Vector::zero(), |acc, (r, c)| acc.axpy(c, &p.basis()[*r]))
    }))
}

#[cfg(test)]
mod tests {
    use super::super::test_algebras::*;
    use super::*;
    use crate::cyclo::CycloField;

    #[test]
    fn matrix_algebra_report() {
        let f = CycloField::new(1).unwrap();
        let m = matrices(&f, 3);
        let r = analyze(&m, &[m.unit().clone()], &[], AnalysisDepth::Full).unwrap();
        assert_eq!(r.radical_dim, 0);
        assert_eq!(r.simple_dims(), vec![3]);
        assert_eq!(r.projective_dims(), vec![3]);
        assert_eq!(r.block_dims(), vec![9]);
        assert_eq!(r.center_block_count, 1);
        assert!(r.arrows.is_empty());
    }

    #[test]
    fn arrow_algebra_report() {
        let f = CycloField::new(1).unwrap();
        let ar = arrow(&f);
        let start = vec![ar.basis(0), ar.basis(1)];
        let r = analyze(&ar, &start, &[], AnalysisDepth::Full).unwrap();
        assert_eq!(r.simple_dims(), vec![1, 1]);
        assert_eq!(r.projective_dims(), vec![1, 2]);
        assert_eq!(r.blocks.len(), 1);
        assert_eq!(r.center_block_count, 1);
        assert_eq!(r.arrow_count(), 1);
        assert_eq!(r.loewy_length, 2);
        // the two-dimensional projective has socle = the other simple
        let big = r.simples.iter().find(|s| s.projective_dim == 2).unwrap();
        assert_ne!(big.pim_socle.as_ref().unwrap(), &big.pim_top);
    }

    #[test]
    fn truncated_polynomial_report() {
        let f = CycloField::new(1).unwrap();
        let t = truncated(&f, 3);
        let r = analyze(&t, &[t.unit().clone()], &[], AnalysisDepth::Full).unwrap();
        assert_eq!(r.simples.len(), 1);
        assert_eq!(r.simples[0].pim_layers, vec![vec![1], vec![1], vec![1]]);
        assert_eq!(r.arrows, vec![OracleArrow { from: 0, to: 0, multiplicity: 1 }]);
        assert_eq!(r.simples[0].pim_socle, Some(vec![1]));
    }
}
