//! Closed-form classification of class subalgebras when `gamma != 0`.

mod efk;
mod standard;

pub use efk::{casimir_image, efk_normal_form, expected_powers, CasimirData, EfkPresentation, RootData};
pub use standard::{Mat, Side, StandardModule};

use crate::cyclo::{q_factorial, Cyclo, Poly};
use crate::lifting::{char_label, ClassSubalgebra, LiftingAlgebra, Potency};
use crate::report::{
    census, scalar_terms, Arrow, Block, CheckResult, ClassReport, ElementExpr, Projective, Quiver, RepType,
    SimpleModule,
};
use crate::lifting::ExactScalar;
use crate::structalg::{eval_poly, Subspace, Vector};
use crate::unlinked::base_report;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkedError {
    #[error("the datum is not linked")]
    NotLinked,
    #[error("classifier for {expected:?} classes applied to a {found:?} class")]
    CaseMismatch { expected: Potency, found: Potency },
    #[error("presentation: {0}")]
    Construction(String),
    #[error("{0} is not an N-th root of kappa")]
    NotARoot(String),
    #[error("relation check failed: {0}")]
    Relation(String),
}

/// Potency read off the presentation: which of `E^n`, `F^n` are nonzero.
pub fn presentation_potency(p: &EfkPresentation) -> Potency {
    match (p.e_power.is_zero(), p.f_power.is_zero()) {
        (true, true) => Potency::Nilpotent,
        (false, false) => Potency::Unipotent,
        _ => Potency::Seminilpotent,
    }
}

/// Builds the presentation and insists on its relations.
pub fn presentation(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<EfkPresentation, LinkedError> {
    let p = efk_normal_form(h, class)?;
    if let Some(bad) = p.check_relations(&class.algebra).into_iter().find(|c| !c.passed) {
        return Err(LinkedError::Relation(bad.name));
    }
    Ok(p)
}

pub fn classify_class(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<ClassReport, LinkedError> {
    let p = presentation(h, class)?;
    match presentation_potency(&p) {
        Potency::Nilpotent => classify_nilpotent(h, class, &p),
        Potency::Seminilpotent => classify_seminilpotent(h, class, &p),
        Potency::Unipotent => classify_unipotent(h, class, &p),
    }
}

fn require(p: &EfkPresentation, expected: Potency) -> Result<(), LinkedError> {
    let found = presentation_potency(p);
    if found != expected {
        return Err(LinkedError::CaseMismatch { expected, found });
    }
    Ok(())
}

fn constants(p: &EfkPresentation) -> std::collections::BTreeMap<String, ExactScalar> {
    let mut c = std::collections::BTreeMap::new();
    for (k, v) in [
        ("q", &p.q),
        ("theta", &p.theta),
        ("kappa", &p.kappa),
        ("eta", &p.eta),
        ("mu", &p.mu),
        ("alpha", &p.alpha),
        ("beta", &p.beta),
        ("E^n", &p.e_power),
        ("F^n", &p.f_power),
    ] {
        c.insert(k.to_string(), scalar_terms(v));
    }
    for (k, v) in [("n", p.n), ("m", p.m), ("N", p.big_n)] {
        c.insert(k.to_string(), ExactScalar::int(v as i64));
    }
    c
}

fn base(class: &ClassSubalgebra, p: &EfkPresentation, potency: Potency) -> ClassReport {
    let mut r = base_report(class, potency, p.mirrored);
    r.constants = constants(p);
    r.notes.push(format!(
        "K = mu g0 with g0 = {:?}; h1 = {:?}, h2 = {:?}",
        p.g0.0, p.h1.0, p.h2.0
    ));
    r
}

/// Characters carried by `theta^-i rho`, `i < len`.
fn weight_labels(class: &ClassSubalgebra, p: &EfkPresentation, index: usize, len: usize) -> Vec<String> {
    let step = p.theta.inv().expect("root of unity");
    let mut w = p.weights[index].clone();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let k = p.weight_index(&w).expect("weights closed under theta");
        out.push(char_label(&class.coset[k]));
        w = &w * &step;
    }
    out
}

/// `-eta' D(rho)`, the scalar by which the Casimir acts on `Z(rho)`.
pub fn casimir_value(p: &EfkPresentation, index: usize) -> Cyclo {
    -&(&p.eta_prime() * &p.d_value(&p.weights[index]))
}

/// Primary idempotents of the Casimir, one per root of `f` in the field,
/// plus one for the rootless remainder (if any).
pub fn casimir_idempotents(class: &ClassSubalgebra, cas: &CasimirData) -> Vec<(Option<Cyclo>, u32, Poly, Vector)> {
    let a = &class.algebra;
    let mut moduli = Vec::new();
    let mut keys: Vec<(Option<Cyclo>, u32)> = Vec::new();
    let mut rest = cas.minpoly.monic();
    for (r, k) in &cas.roots {
        let f = Poly::linear(r).pow(*k);
        rest = rest.exact_div(&f);
        moduli.push(f);
        keys.push((Some(r.clone()), *k));
    }
    if rest.degree().unwrap_or(0) > 0 {
        moduli.push(rest.clone());
        keys.push((None, 1));
    }
    let polys = Poly::crt_idempotents(&moduli);
    keys.into_iter()
        .zip(moduli)
        .zip(polys)
        .map(|(((r, k), modulus), e)| {
            let v = eval_poly(a, &e, &cas.c, a.unit());
            (r, k, modulus, v)
        })
        .collect()
}

fn matrix_block(label: &str, n: usize, k: usize, deg: usize, idem: &Vector, class: &ClassSubalgebra) -> Block {
    let dim = n * n * k * deg;
    let description = match (k, deg) {
        (1, 1) => format!("M_{n}(k)"),
        (2, 1) => format!("M_{n}(V), V = k[v]/(v^2)"),
        (_, 1) => format!("M_{n}(k[v]/(v^{k}))"),
        _ => format!("M_{n}(K) over a degree {deg} extension K"),
    };
    let (arrows, relations) = if k > 1 {
        (
            vec![Arrow {
                from: label.into(),
                to: label.into(),
                multiplicity: 1,
                generator: "a".into(),
            }],
            vec![format!("a^{k} = 0 (a = C - c)")],
        )
    } else {
        (vec![], vec![])
    };
    Block {
        label: label.into(),
        simples: vec![label.into()],
        dim,
        radical_dim: dim - n * n * deg,
        rep_type: if k == 1 { RepType::Semisimple } else { RepType::Finite },
        description,
        quiver: Quiver {
            vertices: vec![label.into()],
            arrows,
            relations,
        },
        idempotent: Some(ElementExpr::from_vector(idem, class.algebra.labels())),
    }
}

/// `M_n(k[C])` split along the primary decomposition of `k[t]/(f)`.
fn casimir_matrix_report(
    class: &ClassSubalgebra,
    p: &EfkPresentation,
    potency: Potency,
    label_of: impl Fn(usize, Option<&Cyclo>) -> String,
) -> ClassReport {
    let a = &class.algebra;
    let n = p.n;
    let cas = p.casimir(a);
    let mut r = base(class, p, potency);
    let weights = census(class.coset.iter().map(char_label));
    for (t, (root, k, modulus, idem)) in casimir_idempotents(class, &cas).into_iter().enumerate() {
        let deg = if root.is_some() { 1 } else { modulus.degree().unwrap_or(1) };
        let k = k as usize;
        let label = label_of(t, root.as_ref());
        if root.is_none() {
            r.notes.push(format!("f has a factor of degree {deg} without roots in the field"));
        }
        r.simples.push(SimpleModule {
            label: label.clone(),
            dim: n * deg,
            weights: weights.iter().map(|(l, c)| (l.clone(), c * deg)).collect(),
            endo_dim: deg,
        });
        r.projectives.push(Projective {
            simple: label.clone(),
            dim: n * deg * k,
            layers: vec![vec![(label.clone(), 1)]; k],
        });
        r.blocks.push(matrix_block(&label, n, k, deg, &idem, class));
    }
    r
}

/// `E^n F^n != 0`: `M_n(k[C])`, one block per primary component of `f`.
pub fn classify_unipotent(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
    p: &EfkPresentation,
) -> Result<ClassReport, LinkedError> {
    let _ = h;
    require(p, Potency::Unipotent)?;
    Ok(casimir_matrix_report(class, p, Potency::Unipotent, |t, _| format!("C{t}")))
}

/// Number of `M_n(k)` and of `M_n(V)` summands predicted from `kappa` and `n`.
pub fn seminilpotent_clause(p: &EfkPresentation) -> (usize, usize, &'static str) {
    let one = Cyclo::one(p.q.field());
    let n = p.n;
    if p.kappa.pow_u(2) != one {
        (n, 0, "kappa^2 != 1: M_n(k)^n")
    } else if n % 2 == 1 {
        (1, (n - 1) / 2, "n odd: M_n(k) + M_n(V)^((n-1)/2)")
    } else if p.kappa == one {
        (0, n / 2, "n even, kappa = 1: M_n(V)^(n/2)")
    } else {
        (2, (n - 2) / 2, "n even, kappa = -1: M_n(k)^2 + M_n(V)^((n-2)/2)")
    }
}

/// Exactly one of `E^n`, `F^n` nonzero. The presentation is mirrored first
/// when `E^n != 0`.
pub fn classify_seminilpotent(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
    p: &EfkPresentation,
) -> Result<ClassReport, LinkedError> {
    let _ = h;
    require(p, Potency::Seminilpotent)?;
    let p = if p.f_power.is_zero() { p.mirror() } else { p.clone() };
    let values: Vec<Cyclo> = (0..p.weights.len()).map(|i| casimir_value(&p, i)).collect();
    let mut r = casimir_matrix_report(class, &p, Potency::Seminilpotent, |t, root| match root {
        Some(c) => values
            .iter()
            .position(|v| v == c)
            .map(|i| format!("Z{}", char_label(&class.coset[i])))
            .unwrap_or_else(|| format!("C{t}")),
        None => format!("C{t}"),
    });
    let (simple, double, clause) = seminilpotent_clause(&p);
    let got_simple = r.blocks.iter().filter(|b| b.radical_dim == 0).count();
    let got_double = r.blocks.len() - got_simple;
    r.notes.push(format!("decomposition clause {clause}"));
    if (simple, double) != (got_simple, got_double) {
        r.notes.push(format!(
            "Casimir roots give {got_simple} + {got_double} summands, clause predicts {simple} + {double}"
        ));
    }
    if p.mirrored {
        r.notes.push("E^n != 0 = F^n: presentation mirrored to (F, E, K^-1)".into());
    }
    Ok(r)
}

/// Characters labelling a root: the coset member carrying weight `rho`.
fn root_label(class: &ClassSubalgebra, index: usize) -> String {
    char_label(&class.coset[index])
}

/// Block idempotent from the Casimir when the Casimir value of `members`
/// is shared with no other root.
fn orbit_idempotent(
    class: &ClassSubalgebra,
    p: &EfkPresentation,
    idems: &[(Option<Cyclo>, u32, Poly, Vector)],
    members: &[usize],
) -> Option<Vector> {
    let c = casimir_value(p, members[0]);
    let sharing = (0..p.weights.len()).filter(|&i| casimir_value(p, i) == c).count();
    if sharing != members.len() {
        return None;
    }
    let _ = class;
    idems.iter().find(|(r, ..)| r.as_ref() == Some(&c)).map(|(.., v)| v.clone())
}

/// `E^n = F^n = 0`.
pub fn classify_nilpotent(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
    p: &EfkPresentation,
) -> Result<ClassReport, LinkedError> {
    let _ = h;
    require(p, Potency::Nilpotent)?;
    let n = p.n;
    let a = &class.algebra;
    let cas = p.casimir(a);
    let idems = casimir_idempotents(class, &cas);
    let mut r = base(class, p, Potency::Nilpotent);
    let orbits = match p.sigma_orbits() {
        Some(o) => o,
        None => {
            // kappa^2 != 1: every Z(rho) is simple and projective
            for i in 0..p.weights.len() {
                let l = root_label(class, i);
                r.simples.push(SimpleModule {
                    label: l.clone(),
                    dim: n,
                    weights: census(weight_labels(class, p, i, n)),
                    endo_dim: 1,
                });
                r.projectives.push(Projective {
                    simple: l.clone(),
                    dim: n,
                    layers: vec![vec![(l.clone(), 1)]],
                });
                let idem = orbit_idempotent(class, p, &idems, &[i]);
                r.blocks.push(Block {
                    label: l.clone(),
                    simples: vec![l.clone()],
                    dim: n * n,
                    radical_dim: 0,
                    rep_type: RepType::Semisimple,
                    description: format!("M_{n}(k)"),
                    quiver: Quiver {
                        vertices: vec![l.clone()],
                        arrows: vec![],
                        relations: vec![],
                    },
                    idempotent: idem.map(|v| ElementExpr::from_vector(&v, a.labels())),
                });
            }
            r.notes.push("kappa^2 != 1: semisimple, M_n(k)^N".into());
            return Ok(r);
        }
    };
    let data: Vec<RootData> = (0..p.weights.len()).map(|i| p.root_data(i)).collect();
    let dim_l = |i: usize| data[i].e.expect("kappa^2 = 1") + 1;
    for i in 0..p.weights.len() {
        let l = root_label(class, i);
        r.simples.push(SimpleModule {
            label: l.clone(),
            dim: dim_l(i),
            weights: census(weight_labels(class, p, i, dim_l(i))),
            endo_dim: 1,
        });
        if data[i].exceptional {
            r.projectives.push(Projective {
                simple: l.clone(),
                dim: n,
                layers: vec![vec![(l.clone(), 1)]],
            });
        } else {
            let fwd = p.sigma(i).expect("kappa^2 = 1");
            let back = p.sigma(fwd).and_then(|_| {
                (0..p.weights.len()).find(|&j| p.sigma(j) == Some(i))
            });
            let back = back.expect("sigma is a permutation");
            r.projectives.push(Projective {
                simple: l.clone(),
                dim: 2 * n,
                layers: vec![
                    vec![(l.clone(), 1)],
                    census([root_label(class, fwd), root_label(class, back)]),
                    vec![(l.clone(), 1)],
                ],
            });
        }
    }
    let mut shared = 0;
    for orbit in &orbits {
        let labels: Vec<String> = orbit.iter().map(|&i| root_label(class, i)).collect();
        let dim: usize = orbit
            .iter()
            .map(|&i| dim_l(i) * if data[i].exceptional { n } else { 2 * n })
            .sum();
        let semisimple: usize = orbit.iter().map(|&i| dim_l(i) * dim_l(i)).sum();
        let idem = orbit_idempotent(class, p, &idems, orbit);
        if idem.is_none() {
            shared += 1;
        }
        let exceptional = data[orbit[0]].exceptional;
        let (arrows, relations, rep_type, description) = if exceptional {
            (vec![], vec![], RepType::Semisimple, format!("M_{n}(k), exceptional root"))
        } else {
            let len = orbit.len();
            let mut arrows = Vec::new();
            let mut relations = Vec::new();
            for t in 0..len {
                let u = (t + 1) % len;
                arrows.push(Arrow {
                    from: labels[t].clone(),
                    to: labels[u].clone(),
                    multiplicity: 1,
                    generator: "a".into(),
                });
                arrows.push(Arrow {
                    from: labels[u].clone(),
                    to: labels[t].clone(),
                    multiplicity: 1,
                    generator: "b".into(),
                });
                relations.push(format!("a{t} b{t} = b{u} a{u}"));
            }
            relations.push("all other paths of length 2 vanish".into());
            (
                arrows,
                relations,
                RepType::Tame,
                format!("special biserial, cyclic double quiver on {len} vertices"),
            )
        };
        r.blocks.push(Block {
            label: labels[0].clone(),
            simples: labels.clone(),
            dim,
            radical_dim: dim - semisimple,
            rep_type,
            description,
            quiver: Quiver {
                vertices: labels,
                arrows,
                relations,
            },
            idempotent: idem.map(|v| ElementExpr::from_vector(&v, a.labels())),
        });
    }
    if shared > 0 {
        r.notes.push(format!(
            "{shared} blocks share their Casimir value with another block; no idempotent reported for them"
        ));
    }
    Ok(r)
}

/// `f = e_rho E^(n-1) F^(n-1)` for an exceptional root, with the scalar
/// `c` such that `f^2 = c f`.
pub fn exceptional_generator(class: &ClassSubalgebra, p: &EfkPresentation, index: usize) -> (Vector, Option<Cyclo>) {
    let a = &class.algebra;
    let n = p.n as u32;
    let f = a.mul(
        &a.mul(&class.weight_idempotent(index), &a.pow(&p.e, n - 1)),
        &a.pow(&p.f, n - 1),
    );
    let f2 = a.mul(&f, &f);
    let c = match f.leading() {
        Some((k, lead)) => {
            let c = &f2.get(k).cloned().unwrap_or_else(|| Cyclo::zero(a.field())) * &lead.inv().expect("nonzero");
            (f2 == f.scale(&c)).then_some(c)
        }
        None => None,
    };
    (f, c)
}

/// `eta^(n-1) (n-1)_q! prod_{j=1}^{n-1} (rho^-m - q^(j-n+1) rho^m)`.
pub fn exceptional_scalar(p: &EfkPresentation, rho: &Cyclo) -> Cyclo {
    let n = p.n as i64;
    let rm = rho.pow_u(p.m as u64);
    let rmi = rm.inv().expect("nonzero");
    let mut c = &p.eta.pow_u((n - 1) as u64) * &q_factorial((n - 1) as u32, &p.q);
    for j in 1..n {
        let t = &rmi - &(&p.q.pow(j - n + 1).expect("root of unity") * &rm);
        c = &c * &t;
    }
    c
}

/// Every executable identity of the linked theory on one class.
pub fn identity_checks(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<Vec<CheckResult>, LinkedError> {
    let a = &class.algebra;
    let p = efk_normal_form(h, class)?;
    let mut out = p.check_relations(a);
    let (ee, fe) = expected_powers(h, class);
    out.push(CheckResult {
        name: "E^n, F^n closed forms".into(),
        passed: ee == p.e_power && fe == p.f_power,
        detail: String::new(),
    });
    out.push(CheckResult {
        name: "dim = N n^2".into(),
        passed: class.dim() == p.big_n * p.n * p.n,
        detail: format!("{} vs {}", class.dim(), p.big_n * p.n * p.n),
    });
    let cas = p.casimir(a);
    out.extend(cas.checks(&p, h, class));
    out.push(match p.check_kac(a) {
        Ok(k) => CheckResult {
            name: "Kac commutator identity".into(),
            passed: true,
            detail: format!("{k} pairs"),
        },
        Err((s, r)) => CheckResult {
            name: "Kac commutator identity".into(),
            passed: false,
            detail: format!("fails at s = {s}, r = {r}"),
        },
    });
    // the presentation with E^n = 0, for standard modules
    let zp = if p.e_power.is_zero() { Some(p.clone()) } else if p.f_power.is_zero() { Some(p.mirror()) } else { None };
    if let Some(zp) = zp {
        let mut ok = true;
        let mut detail = String::new();
        for i in 0..zp.weights.len() {
            let rho = zp.weights[i].clone();
            let z = StandardModule::new(&zp, &rho, Side::Z)?;
            let bad: Vec<String> = z.check_relations(&zp).into_iter().filter(|c| !c.passed).map(|c| c.name).collect();
            let module = z.to_left_module(h, class, &zp)?;
            if !bad.is_empty() || module.validate(a, Some(&class.generator_indices())).is_err() {
                ok = false;
                detail = format!("Z(rho) for weight {i}: {bad:?}");
                break;
            }
            let rd = zp.root_data(i);
            let expected = match rd.e {
                Some(e) if e + 1 < zp.n => Some(e + 1),
                _ => None,
            };
            if zp.f_power.is_zero() && z.radical_start != expected {
                ok = false;
                detail = format!("Z(rho) for weight {i}: radical at {:?}, e = {:?}", z.radical_start, rd.e);
                break;
            }
        }
        out.push(CheckResult {
            name: "standard modules".into(),
            passed: ok,
            detail,
        });
    }
    if presentation_potency(&p) == Potency::Nilpotent {
        out.extend(nilpotent_checks(class, &p, &cas));
    }
    Ok(out)
}

fn nilpotent_checks(class: &ClassSubalgebra, p: &EfkPresentation, cas: &CasimirData) -> Vec<CheckResult> {
    let a = &class.algebra;
    let mut out = Vec::new();
    if let Some(orbits) = p.sigma_orbits() {
        let two_m = 2 * p.m;
        let sizes_ok = orbits.iter().all(|o| {
            let exc = p.root_data(o[0]).exceptional;
            (exc && o.len() == 1) || (!exc && o.len() == two_m)
        });
        let pairing = (0..p.weights.len()).all(|i| {
            let rd = p.root_data(i);
            rd.exceptional || {
                let s = p.root_data(p.sigma(i).expect("permutation"));
                rd.e.unwrap() + s.e.unwrap() + 2 == p.n
            }
        });
        out.push(CheckResult {
            name: "sigma orbits of size 2m or 1".into(),
            passed: sizes_ok,
            detail: String::new(),
        });
        out.push(CheckResult {
            name: "e(rho) + e(sigma rho) = n - 2".into(),
            passed: pairing,
            detail: String::new(),
        });
        let total: usize = (0..p.weights.len())
            .map(|i| {
                let rd = p.root_data(i);
                let l = rd.e.unwrap() + 1;
                l * if rd.exceptional { p.n } else { 2 * p.n }
            })
            .sum();
        out.push(CheckResult {
            name: "sum dim P dim L = N n^2".into(),
            passed: total == p.big_n * p.n * p.n,
            detail: format!("{total}"),
        });
        for (i, rd) in (0..p.weights.len()).map(|i| (i, p.root_data(i))) {
            if !rd.exceptional {
                continue;
            }
            let (f, c) = exceptional_generator(class, p, i);
            let expected = exceptional_scalar(p, &rd.rho);
            let ok = match &c {
                Some(c) if !c.is_zero() => {
                    let u = f.scale(&c.inv().expect("nonzero"));
                    let ideal = Subspace::from_owned((0..a.dim()).map(|k| a.mul(&a.basis(k), &u)));
                    a.is_idempotent(&u) && ideal.dim() == p.n && *c == expected
                }
                _ => false,
            };
            out.push(CheckResult {
                name: format!("exceptional idempotent at {}", root_label(class, i)),
                passed: ok,
                detail: format!("c = {c:?}"),
            });
        }
    }
    let idems = casimir_idempotents(class, cas);
    let ok = idems.iter().all(|(.., v)| a.is_idempotent(v) && a.is_central(v));
    out.push(CheckResult {
        name: "Casimir block idempotents".into(),
        passed: ok,
        detail: String::new(),
    });
    out
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::abelian::{AbelianGroup, Character, GroupElement};
    use crate::lifting::{ExactScalar, LiftingDatum};

    /// `Z_8`, `a = b = g`, `chi(g) = zeta_4`, `x^4 = 0`, `y^4 = b^4 - 1`.
    pub fn datum_d() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(8),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![2]),
            chi2: Character(vec![6]),
            eps1: false,
            eps2: true,
            gamma: ExactScalar::int(1),
        }
    }

    /// `Z_8`, `a = b = g`, `chi(g) = zeta_4`, both powers invertible on
    /// classes with `lambda(g^4) != 1`.
    pub fn z8_unipotent() -> LiftingDatum {
        LiftingDatum {
            eps1: true,
            ..datum_d()
        }
    }

    /// `Z_12`, `a = b = g`, `chi(g) = zeta_6`, both powers invertible; the
    /// unipotent class has `n = 6` and a Casimir polynomial with three
    /// double roots.
    pub fn z12_unipotent() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(12),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![2]),
            chi2: Character(vec![10]),
            eps1: true,
            eps2: true,
            gamma: ExactScalar::int(1),
        }
    }

    /// `Z_9`, `a = b = g^3`, `chi(g) = zeta_9`: nilpotent with `n = 3`, `m = 3`.
    pub fn z9_nilpotent() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(9),
            a: GroupElement(vec![3]),
            b: GroupElement(vec![3]),
            chi1: Character(vec![1]),
            chi2: Character(vec![8]),
            eps1: false,
            eps2: false,
            gamma: ExactScalar::int(1),
        }
    }
}

#[cfg(test)]
mod tests;
