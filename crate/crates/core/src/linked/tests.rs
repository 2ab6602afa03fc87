use super::fixtures::*;
use super::*;
use crate::lifting::fixtures::{datum_a, linked_unipotent};
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
    for s in &o.simples {
        assert_eq!(s.socle_weights, s.top_weights);
    }
    r
}

fn all_pass(h: &LiftingAlgebra, class: &ClassSubalgebra) {
    let checks = identity_checks(h, class).unwrap();
    let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

#[test]
fn datum_a_presentation() {
    let h = LiftingAlgebra::build(&datum_a()).unwrap();
    let class = h.class(0);
    let p = presentation(&h, &class).unwrap();
    let f = h.field();
    let q = Cyclo::zeta_pow(f, 4);
    assert_eq!(p.q, q);
    assert_eq!(p.theta, q);
    assert_eq!(p.g0.0, vec![2]);
    assert!(p.alpha.is_one() && p.beta.is_one() && p.mu.is_one());
    assert!(p.kappa.is_one() && p.eta.is_one());
    assert_eq!((p.n, p.m, p.big_n), (3, 1, 3));
    all_pass(&h, &class);
}

#[test]
fn datum_a_classification() {
    let h = LiftingAlgebra::build(&datum_a()).unwrap();
    let class = h.class(0);
    let r = against_oracle(&h, &class);
    assert_eq!(sorted(r.simples.iter().map(|s| s.dim).collect()), vec![1, 2, 3]);
    assert_eq!(sorted(r.projectives.iter().map(|s| s.dim).collect()), vec![3, 6, 6]);
    assert_eq!(sorted(r.blocks.iter().map(|b| b.dim).collect()), vec![9, 18]);
    let rad: usize = r.blocks.iter().map(|b| b.radical_dim).sum();
    assert_eq!(rad, 13);
    let big = r.blocks.iter().find(|b| b.dim == 18).unwrap();
    assert_eq!(big.quiver.vertices.len(), 2);
    assert_eq!(big.quiver.arrows.len(), 4);
    assert!(r.blocks.iter().all(|b| b.idempotent.is_some()));
}

#[test]
fn datum_a_roots_and_orbits() {
    let h = LiftingAlgebra::build(&datum_a()).unwrap();
    let class = h.class(0);
    let p = presentation(&h, &class).unwrap();
    let f = h.field();
    let one = Cyclo::one(f);
    let q = p.q.clone();
    let idx = |w: &Cyclo| p.weight_index(w).unwrap();
    assert_eq!(p.root_data(idx(&one)).e, Some(0));
    assert!(p.root_data(idx(&q)).exceptional);
    assert_eq!(p.root_data(idx(&q.pow_u(2))).e, Some(1));
    let orbits = p.sigma_orbits().unwrap();
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2]);
    assert_eq!(p.sigma(idx(&one)), Some(idx(&q.pow_u(2))));

    let z = StandardModule::new(&p, &q, Side::Z).unwrap();
    assert_eq!(z.radical_start, None);
    assert_eq!(z.top_dim(), 3);
    let z1 = StandardModule::new(&p, &one, Side::Z).unwrap();
    assert_eq!(z1.radical_start, Some(1));
    let zp = StandardModule::new(&p, &one, Side::ZPrime).unwrap();
    assert!(zp.check_relations(&p).iter().all(|c| c.passed));
    zp.to_left_module(&h, &class, &p)
        .unwrap()
        .validate(&class.algebra, None)
        .unwrap();
}

#[test]
fn kac_identity_needs_powers_of_eta() {
    let mut d = datum_a();
    d.gamma = crate::lifting::ExactScalar::int(2);
    let h = LiftingAlgebra::build(&d).unwrap();
    let class = h.class(0);
    let p = presentation(&h, &class).unwrap();
    assert_eq!(p.eta, Cyclo::from_int(h.field(), 2));
    assert_eq!(p.check_kac(&class.algebra), Ok(4));
    // with eta = 2 a single factor of eta would change the nonzero i = 2 term
    assert!(!p.kac_term(&class.algebra, 2, 2, 2).is_zero());
    all_pass(&h, &class);
}

#[test]
fn z9_nilpotent_census() {
    let h = LiftingAlgebra::build(&z9_nilpotent()).unwrap();
    assert_eq!(h.class_count(), 1);
    let class = h.class(0);
    let p = presentation(&h, &class).unwrap();
    assert_eq!((p.n, p.m, p.big_n), (3, 3, 9));
    all_pass(&h, &class);
    let r = against_oracle(&h, &class);
    let one = Cyclo::one(h.field());
    assert_eq!(p.kappa.pow_u(2), one);
    for d in 1..=3 {
        assert_eq!(r.simples.iter().filter(|s| s.dim == d).count(), 3);
    }
}

#[test]
fn datum_d_seminilpotent() {
    let h = LiftingAlgebra::build(&datum_d()).unwrap();
    assert_eq!(h.dim(), 128);
    let mut seen_semi = 0;
    for class in h.class_decomposition() {
        all_pass(&h, &class);
        let r = against_oracle(&h, &class);
        if r.potency == Potency::Seminilpotent {
            seen_semi += 1;
            assert!(!r.notes.iter().any(|n| n.contains("clause predicts")), "{:?}", r.notes);
        }
    }
    assert!(seen_semi > 0);
}

/// The unipotent class of this datum does not split: `f` is an irreducible
/// cubic over the working field, so the class is `M_3(K)` with `[K:k] = 3`.
#[test]
fn linked_unipotent_unsplit_class() {
    let h = LiftingAlgebra::build(&linked_unipotent()).unwrap();
    let mut unipotent = 0;
    for class in h.class_decomposition() {
        all_pass(&h, &class);
        let r = classify_class(&h, &class).unwrap();
        assert_eq!(r.regular_dimension(), class.dim());
        if r.potency == Potency::Unipotent {
            unipotent += 1;
            assert_eq!(r.blocks.len(), 1);
            assert_eq!(r.simples[0].endo_dim, 3);
            assert!(r.notes.iter().any(|n| n.contains("without roots")));
            let start: Vec<_> = (0..class.coset.len()).map(|k| class.weight_idempotent(k)).collect();
            assert!(analyze(&class.algebra, &start, &class.weights(), AnalysisDepth::Regular).is_err());
        } else {
            against_oracle(&h, &class);
        }
    }
    assert_eq!(unipotent, 1);
}

#[test]
fn mirrored_seminilpotent() {
    let mut d = datum_d();
    d.eps1 = true;
    d.eps2 = false;
    let h = LiftingAlgebra::build(&d).unwrap();
    for class in h.class_decomposition() {
        all_pass(&h, &class);
        let r = against_oracle(&h, &class);
        if r.potency == Potency::Seminilpotent {
            assert!(r.swapped);
        }
    }
}

/// The Casimir polynomial here is `t^4 + 2t^2 - 4`, whose roots need
/// `sqrt(-1 + sqrt 5)`; no cyclotomic field contains them.
#[test]
fn z8_unipotent_does_not_split() {
    let h = LiftingAlgebra::build(&z8_unipotent()).unwrap();
    let mut unipotent = 0;
    for class in h.class_decomposition() {
        all_pass(&h, &class);
        let r = classify_class(&h, &class).unwrap();
        assert_eq!(r.regular_dimension(), class.dim());
        if r.potency == Potency::Unipotent {
            unipotent += 1;
            let p = presentation(&h, &class).unwrap();
            let cas = p.casimir(&class.algebra);
            assert!(cas.roots.is_empty());
            assert_eq!(r.blocks.len(), 1);
            assert_eq!(r.simples[0].dim, 16);
            assert_eq!(r.simples[0].endo_dim, 4);
            let start: Vec<_> = (0..class.coset.len()).map(|k| class.weight_idempotent(k)).collect();
            assert!(analyze(&class.algebra, &start, &class.weights(), AnalysisDepth::Regular).is_err());
        } else {
            against_oracle(&h, &class);
        }
    }
    assert!(unipotent > 0);
}

#[test]
fn z12_unipotent_matches_oracle() {
    let h = LiftingAlgebra::build(&z12_unipotent()).unwrap();
    let mut unipotent = 0;
    for class in h.class_decomposition() {
        all_pass(&h, &class);
        let r = against_oracle(&h, &class);
        if r.potency == Potency::Unipotent {
            unipotent += 1;
            let p = presentation(&h, &class).unwrap();
            assert_eq!(p.n, 6);
            let cas = p.casimir(&class.algebra);
            assert_eq!(cas.roots.iter().map(|r| r.1).collect::<Vec<_>>(), vec![2, 2, 2]);
            assert!(r.simples.iter().all(|s| s.dim == 6));
            assert_eq!(r.blocks.len(), 3);
            for b in &r.blocks {
                assert_eq!((b.dim, b.radical_dim), (72, 36));
                assert_eq!(b.quiver.arrows.len(), 1);
            }
        }
    }
    assert!(unipotent > 0);
}
