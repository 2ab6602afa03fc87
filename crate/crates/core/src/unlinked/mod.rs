//! Closed-form classification of class subalgebras when `gamma = 0`.

mod unipotent;

pub use unipotent::{
    center_idempotents, check_block_idempotents, check_intertwiners, kernel_pairs, unipotent_idempotents,
    IntertwinerCheck, UnipotentIdempotents,
};

use crate::abelian::{AbelianGroup, Character};
use crate::lifting::{char_label, ClassSubalgebra, LiftingAlgebra, Potency};
use crate::report::{census, Arrow, Block, ClassReport, Projective, Quiver, RepType, SimpleModule};
use crate::structalg::Vector;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnlinkedError {
    #[error("classifier for {expected:?} classes applied to a {found:?} class")]
    CaseMismatch { expected: Potency, found: Potency },
    #[error("the datum is linked")]
    Linked,
    #[error("{0} has no root in the working field")]
    NotSplit(String),
}

/// Whether `x^n1` and `y^n2` act as nonzero scalars on the class, i.e.
/// `eps_i = 1` and `lambda(a^n1) != 1` (resp. `lambda(b^n2) != 1`).
pub fn class_units(h: &LiftingAlgebra, class: &ClassSubalgebra) -> (bool, bool) {
    let g = h.group();
    let d = &h.datum;
    let lambda = class.representative();
    let an = g.pow(&d.a, h.n1() as i64);
    let bn = g.pow(&d.b, h.n2() as i64);
    (
        d.eps1 && g.value_exponent(lambda, &an) != 0,
        d.eps2 && g.value_exponent(lambda, &bn) != 0,
    )
}

pub fn class_potency(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Potency {
    match class_units(h, class) {
        (false, false) => Potency::Nilpotent,
        (true, true) => Potency::Unipotent,
        _ => Potency::Seminilpotent,
    }
}

/// Dispatches on the potency of the class.
pub fn classify_class(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<ClassReport, UnlinkedError> {
    if h.tag().linked {
        return Err(UnlinkedError::Linked);
    }
    match class_potency(h, class) {
        Potency::Nilpotent => classify_nilpotent(h, class),
        Potency::Seminilpotent => classify_seminilpotent(h, class),
        Potency::Unipotent => classify_unipotent(h, class),
    }
}

fn mismatch(h: &LiftingAlgebra, class: &ClassSubalgebra, expected: Potency) -> Result<(), UnlinkedError> {
    let found = class_potency(h, class);
    if found != expected {
        return Err(UnlinkedError::CaseMismatch { expected, found });
    }
    Ok(())
}

fn shifted(g: &AbelianGroup, mu: &Character, chi: &Character, k: usize) -> Character {
    g.char_mul(mu, &g.char_pow(chi, k as i64))
}

pub(crate) fn base_report(class: &ClassSubalgebra, potency: Potency, swapped: bool) -> ClassReport {
    ClassReport {
        coset: class.coset.iter().map(char_label).collect(),
        dim: class.dim(),
        potency,
        swapped,
        simples: vec![],
        projectives: vec![],
        blocks: vec![],
        constants: BTreeMap::new(),
        notes: vec![],
    }
}

fn wild_unless_small(n1: usize, n2: usize) -> RepType {
    if n1 == 2 && n2 == 2 {
        RepType::Tame
    } else {
        RepType::Wild
    }
}

/// Both `x` and `y` nilpotent on the class: one-dimensional simples indexed
/// by the coset, arrows `mu -> mu chi1` and `mu -> mu chi2`.
pub fn classify_nilpotent(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<ClassReport, UnlinkedError> {
    mismatch(h, class, Potency::Nilpotent)?;
    let g = h.group();
    let d = &h.datum;
    let (n1, n2) = (h.n1(), h.n2());
    let mut r = base_report(class, Potency::Nilpotent, false);
    let mut arrows = Vec::new();
    for mu in &class.coset {
        let l = char_label(mu);
        r.simples.push(SimpleModule {
            label: l.clone(),
            dim: 1,
            weights: vec![(l.clone(), 1)],
            endo_dim: 1,
        });
        let layers = (0..n1 + n2 - 1)
            .map(|deg| {
                census((0..n1).flat_map(|i| {
                    (0..n2)
                        .filter(move |&j| i + j == deg)
                        .map(move |j| char_label(&shifted(g, &shifted(g, mu, &d.chi1, i), &d.chi2, j)))
                }))
            })
            .collect();
        r.projectives.push(Projective {
            simple: l.clone(),
            dim: n1 * n2,
            layers,
        });
        for (chi, name) in [(&d.chi1, "chi1"), (&d.chi2, "chi2")] {
            arrows.push(Arrow {
                from: l.clone(),
                to: char_label(&g.char_mul(mu, chi)),
                multiplicity: 1,
                generator: name.into(),
            });
        }
    }
    let simples: Vec<String> = r.simples.iter().map(|s| s.label.clone()).collect();
    let k = simples.len();
    r.blocks.push(Block {
        label: char_label(class.representative()),
        simples: simples.clone(),
        dim: class.dim(),
        radical_dim: class.dim() - k,
        rep_type: wild_unless_small(n1, n2),
        description: format!("basic algebra with {k} one-dimensional simples"),
        quiver: Quiver {
            vertices: simples,
            arrows,
            relations: vec![
                "chi1 chi2 = chi2(a) chi2 chi1 (paths through either corner agree up to the scalar)".into(),
                format!("chi1^{n1} = 0"),
                format!("chi2^{n2} = 0"),
            ],
        },
        idempotent: Some(crate::report::ElementExpr::from_vector(
            class.algebra.unit(),
            class.algebra.labels(),
        )),
    });
    if d.chi1 == d.chi2 {
        r.notes.push("chi1 = chi2, so every arrow is doubled".into());
    }
    Ok(r)
}

/// Exactly one of `x`, `y` acts invertibly: a Nakayama block whose simples
/// have dimension `n` of the invertible generator.
pub fn classify_seminilpotent(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
) -> Result<ClassReport, UnlinkedError> {
    mismatch(h, class, Potency::Seminilpotent)?;
    let g = h.group();
    let d = &h.datum;
    let (xu, _) = class_units(h, class);
    // normalize so that the invertible generator plays the role of x
    let swapped = !xu;
    let (chi_u, chi_n, nu, nn, gen_n) = if swapped {
        (&d.chi2, &d.chi1, h.n2(), h.n1(), "chi1")
    } else {
        (&d.chi1, &d.chi2, h.n1(), h.n2(), "chi2")
    };
    let mut r = base_report(class, Potency::Seminilpotent, swapped);

    // cosets mu X_1 inside the class, labelled by their least member
    let orbit = |mu: &Character| -> Vec<Character> {
        let mut o: Vec<Character> = (0..nu).map(|i| shifted(g, mu, chi_u, i)).collect();
        o.sort();
        o.dedup();
        o
    };
    let mut cosets: Vec<Vec<Character>> = Vec::new();
    for mu in &class.coset {
        let o = orbit(mu);
        if !cosets.contains(&o) {
            cosets.push(o);
        }
    }
    cosets.sort();
    let label_of = |mu: &Character| char_label(&orbit(mu)[0]);

    let mut arrows = Vec::new();
    for o in &cosets {
        let l = char_label(&o[0]);
        r.simples.push(SimpleModule {
            label: l.clone(),
            dim: o.len(),
            weights: census(o.iter().map(char_label)),
            endo_dim: 1,
        });
        let layers = (0..nn)
            .map(|i| vec![(label_of(&shifted(g, &o[0], chi_n, i)), 1)])
            .collect();
        r.projectives.push(Projective {
            simple: l.clone(),
            dim: nu * nn,
            layers,
        });
        arrows.push(Arrow {
            from: l.clone(),
            to: label_of(&g.char_mul(&o[0], chi_n)),
            multiplicity: 1,
            generator: gen_n.into(),
        });
    }
    let simples: Vec<String> = r.simples.iter().map(|s| s.label.clone()).collect();
    let ss: usize = r.simples.iter().map(|s| s.dim * s.dim).sum();
    r.blocks.push(Block {
        label: char_label(class.representative()),
        simples: simples.clone(),
        dim: class.dim(),
        radical_dim: class.dim() - ss,
        rep_type: RepType::Finite,
        description: "Nakayama algebra with uniserial projectives".into(),
        quiver: Quiver {
            vertices: simples,
            arrows,
            relations: vec![format!("paths of length {nn} vanish")],
        },
        idempotent: Some(crate::report::ElementExpr::from_vector(
            class.algebra.unit(),
            class.algebra.labels(),
        )),
    });
    if swapped {
        r.notes.push("x nilpotent and y invertible on this class; roles of (x, a, chi1) and (y, b, chi2) exchanged".into());
    }
    Ok(r)
}

/// Both generators invertible: `r = n1 n2 / |X|` copies of `M_|X|`.
pub fn classify_unipotent(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<ClassReport, UnlinkedError> {
    mismatch(h, class, Potency::Unipotent)?;
    let m = class.coset.len();
    let (n1, n2) = (h.n1(), h.n2());
    let count = n1 * n2 / m;
    let mut r = base_report(class, Potency::Unipotent, false);
    let weights = census(class.coset.iter().map(char_label));
    let idem: Result<(Vec<String>, Vec<Vector>), UnlinkedError> = match unipotent_idempotents(h, class) {
        Ok(u) => Ok((u.class_labels(), (0..u.class_count()).map(|k| u.block_idempotent(k)).collect())),
        Err(e) => {
            r.notes.push(format!("idempotents f_alpha not constructed: {e}"));
            center_idempotents(h, class).map(|es| ((0..es.len()).map(|k| format!("W{k}")).collect(), es))
        }
    };
    let (labels, idempotents) = match idem {
        Ok(li) => li,
        Err(e) => {
            // the center part over W does not split: one block, not factored further
            r.notes.push(format!("the center over W does not split: {e}"));
            let label = "W".to_string();
            r.simples.push(SimpleModule {
                label: label.clone(),
                dim: m * count,
                weights: weights.iter().map(|(l, c)| (l.clone(), c * count)).collect(),
                endo_dim: count,
            });
            r.projectives.push(Projective {
                simple: label.clone(),
                dim: m * count,
                layers: vec![vec![(label.clone(), 1)]],
            });
            r.blocks.push(semisimple_block(&label, m * m * count, format!("M_{m}(K), [K : k] = {count}"), None));
            return Ok(r);
        }
    };
    for (l, e) in labels.iter().zip(&idempotents) {
        r.simples.push(SimpleModule {
            label: l.clone(),
            dim: m,
            weights: weights.clone(),
            endo_dim: 1,
        });
        r.projectives.push(Projective {
            simple: l.clone(),
            dim: m,
            layers: vec![vec![(l.clone(), 1)]],
        });
        let expr = crate::report::ElementExpr::from_vector(e, class.algebra.labels());
        r.blocks.push(semisimple_block(l, m * m, format!("M_{m}(k)"), Some(expr)));
    }
    Ok(r)
}

fn semisimple_block(label: &str, dim: usize, description: String, idempotent: Option<crate::report::ElementExpr>) -> Block {
    Block {
        label: label.into(),
        simples: vec![label.into()],
        dim,
        radical_dim: 0,
        rep_type: RepType::Semisimple,
        description,
        quiver: Quiver {
            vertices: vec![label.into()],
            arrows: vec![],
            relations: vec![],
        },
        idempotent,
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::abelian::{AbelianGroup, Character, GroupElement};
    use crate::lifting::{ExactScalar, LiftingDatum};

    /// `Z_4`, `a = b = g`, `chi1 = chi2 = -1`, `x^2 = a^2 - 1`, `y^2 = 0`.
    pub fn datum_c() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(4),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![2]),
            chi2: Character(vec![2]),
            eps1: true,
            eps2: false,
            gamma: ExactScalar::zero(),
        }
    }

    /// `Z_2 x Z_2` with `chi_i(g_j) = delta_ij (-1)`, nilpotent.
    pub fn klein_nilpotent() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::new(vec![2, 2]).unwrap(),
            a: GroupElement(vec![1, 0]),
            b: GroupElement(vec![0, 1]),
            chi1: Character(vec![1, 0]),
            chi2: Character(vec![0, 1]),
            eps1: false,
            eps2: false,
            gamma: ExactScalar::zero(),
        }
    }

    /// `Z_9 x Z_9`, `a = g1`, `b = g2`, `chi1 = (3,0)`, `chi2 = (0,3)`, unipotent.
    pub fn z9_unipotent() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::new(vec![9, 9]).unwrap(),
            a: GroupElement(vec![1, 0]),
            b: GroupElement(vec![0, 1]),
            chi1: Character(vec![3, 0]),
            chi2: Character(vec![0, 3]),
            eps1: true,
            eps2: true,
            gamma: ExactScalar::zero(),
        }
    }
    /// `Z_m`, `chi1 = chi2 = zeta_m^c`, `eps1 = eps2 = 1`.
    pub fn cyclic_unipotent(m: u32, a: u32, b: u32, c: u32) -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(m),
            a: GroupElement(vec![a]),
            b: GroupElement(vec![b]),
            chi1: Character(vec![c]),
            chi2: Character(vec![c]),
            eps1: true,
            eps2: true,
            gamma: ExactScalar::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::lifting::fixtures::{datum_b, z3_squared};
    use crate::report::ClassSummary;
    use crate::structalg::{analyze, AnalysisDepth};

    fn against_oracle(h: &LiftingAlgebra, class: &ClassSubalgebra) -> ClassReport {
        let r = classify_class(h, class).unwrap();
        assert_eq!(r.regular_dimension(), class.dim());
        let start: Vec<_> = (0..class.coset.len()).map(|k| class.weight_idempotent(k)).collect();
        let o = analyze(&class.algebra, &start, &class.weights(), AnalysisDepth::Full).unwrap();
        let diff = ClassSummary::from_theory(&r).diff(&ClassSummary::from_oracle(&o), true);
        assert!(diff.is_empty(), "{diff:#?}");
        assert_eq!(o.center_block_count, r.blocks.len());
        r
    }

    #[test]
    fn nilpotent_z3_squared() {
        let h = LiftingAlgebra::build(&z3_squared()).unwrap();
        let class = h.class(0);
        let r = against_oracle(&h, &class);
        assert_eq!(r.simples.len(), 9);
        assert!(r.projectives.iter().all(|p| p.dim == 9));
        assert_eq!(r.blocks[0].rep_type, RepType::Wild);
        assert_eq!(r.blocks[0].quiver.arrows.len(), 18);
    }

    #[test]
    fn nilpotent_klein_is_tame() {
        let h = LiftingAlgebra::build(&klein_nilpotent()).unwrap();
        let class = h.class(0);
        let r = against_oracle(&h, &class);
        assert_eq!(r.blocks[0].rep_type, RepType::Tame);
        assert_eq!(r.blocks[0].quiver.arrows.len(), 8);
    }

    #[test]
    fn seminilpotent_datum_c() {
        let h = LiftingAlgebra::build(&datum_c()).unwrap();
        let classes = h.class_decomposition();
        assert_eq!(classes.len(), 2);
        // trivial character lies in N = <a^2>^perp
        let inside = against_oracle(&h, &classes[0]);
        assert_eq!(inside.potency, Potency::Nilpotent);
        assert_eq!(inside.simples.len(), 2);
        assert!(inside.simples.iter().all(|s| s.dim == 1));
        let arrows: usize = inside.blocks[0].quiver.arrows.iter().map(|a| a.multiplicity).sum();
        assert_eq!(arrows, 4);
        assert_eq!(inside.blocks[0].rep_type, RepType::Tame);
        let outside = against_oracle(&h, &classes[1]);
        assert_eq!(outside.potency, Potency::Seminilpotent);
        assert_eq!(outside.simples.len(), 1);
        assert_eq!(outside.simples[0].dim, 2);
        assert_eq!(outside.projectives[0].dim, 4);
        assert_eq!(outside.projectives[0].layers.len(), 2);
        assert_eq!(outside.blocks[0].rep_type, RepType::Finite);
    }

    #[test]
    fn seminilpotent_swapped() {
        let mut d = datum_c();
        d.eps1 = false;
        d.eps2 = true;
        let h = LiftingAlgebra::build(&d).unwrap();
        let r = against_oracle(&h, &h.class(1));
        assert!(r.swapped);
        assert_eq!(r.simples[0].dim, 2);
    }

    #[test]
    fn unipotent_datum_b() {
        let h = LiftingAlgebra::build(&datum_b()).unwrap();
        let classes = h.class_decomposition();
        let mut eligible = 0;
        for c in &classes {
            let r = against_oracle(&h, c);
            if r.potency == Potency::Unipotent {
                eligible += 1;
                assert_eq!(r.blocks.len(), 2);
                assert!(r.blocks.iter().all(|b| b.dim == 4 && b.radical_dim == 0));
                let u = unipotent_idempotents(&h, c).unwrap();
                let chk = check_intertwiners(&h, c, &u).unwrap();
                assert_eq!(chk.pairs_checked, 16);
            }
        }
        assert_eq!(eligible, 1);
    }

    #[test]
    fn unipotent_z9_is_one_matrix_block() {
        let h = LiftingAlgebra::build(&z9_unipotent()).unwrap();
        // lambda = (1, 1): lambda(g1^3) = zeta_3 != 1
        let g = h.group();
        let lambda = Character(vec![1, 1]);
        let k = h.params.chars.coset_of(&lambda);
        let _ = g;
        let class = h.class(k);
        assert_eq!(class.dim(), 81);
        let r = against_oracle(&h, &class);
        assert_eq!(r.potency, Potency::Unipotent);
        assert_eq!(r.blocks.len(), 1);
        assert_eq!(r.simples[0].dim, 9);
    }

    /// `Z_6`, `b = a^5`: `x^3 = -2` has no cube root in the field, but the
    /// center over `W` still splits into three `M_3(k)`.
    #[test]
    fn unipotent_split_without_global_roots() {
        let h = LiftingAlgebra::build(&cyclic_unipotent(6, 1, 5, 2)).unwrap();
        let class = h.class(1);
        assert!(unipotent_idempotents(&h, &class).is_err());
        let es = center_idempotents(&h, &class).unwrap();
        assert_eq!(check_block_idempotents(&class, &es), Ok(3));
        let r = against_oracle(&h, &class);
        assert_eq!(r.blocks.len(), 3);
        assert!(r.blocks.iter().all(|b| b.dim == 9 && b.idempotent.is_some()));
    }

    /// `Z_10`, `b = a^3`, `chi = -1`: `W = <(1,1)>` and `(x y b^-1)^2` is a
    /// non-square, so the class is `M_2(K)` with `[K : k] = 2`.
    #[test]
    fn unipotent_center_does_not_split() {
        let h = LiftingAlgebra::build(&cyclic_unipotent(10, 1, 3, 5)).unwrap();
        let class = h.class(1);
        assert!(center_idempotents(&h, &class).is_err());
        let r = classify_class(&h, &class).unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert_eq!((r.simples[0].dim, r.simples[0].endo_dim), (4, 2));
        assert_eq!(r.regular_dimension(), class.dim());
        let start: Vec<_> = (0..class.coset.len()).map(|k| class.weight_idempotent(k)).collect();
        let o = analyze(&class.algebra, &start, &class.weights(), AnalysisDepth::Regular);
        assert!(matches!(o, Err(crate::structalg::AlgebraError::NonSplit(..))));
    }
}
