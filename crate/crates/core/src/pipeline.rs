//! End-to-end runs: classify every class subalgebra of a datum, and verify
//! identities and theory-versus-oracle agreement at a chosen depth.

use crate::lifting::{ClassSubalgebra, DatumError, LiftingAlgebra, LiftingDatum, Potency};
use crate::linked::{self, LinkedError};
use crate::par;
use crate::report::{CheckResult, ClassReport, ClassSummary, Report};
use crate::structalg::{analyze, AlgebraError, AnalysisDepth};
use crate::unlinked::{self, UnlinkedError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error("class {class}: {source}")]
    Linked { class: usize, source: LinkedError },
    #[error("class {class}: {source}")]
    Unlinked { class: usize, source: UnlinkedError },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Commutator, Casimir, Kac, integral and antipode identities.
    Identities,
    /// Adds the oracle's radical, blocks and Loewy layers per class.
    #[default]
    Regular,
    /// Adds the quiver comparison and the socle/top census of every PIM.
    Full,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identities" => Ok(Level::Identities),
            "regular" => Ok(Level::Regular),
            "full" => Ok(Level::Full),
            _ => Err(format!("unknown level {s:?} (identities, regular, full)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Identities => "identities",
            Level::Regular => "regular",
            Level::Full => "full",
        })
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// Theory report for one class, dispatching on whether the datum is linked.
pub fn classify_class(h: &LiftingAlgebra, class: &ClassSubalgebra) -> Result<ClassReport, PipelineError> {
    let k = class.coset_index;
    if h.tag().linked {
        linked::classify_class(h, class).map_err(|source| PipelineError::Linked { class: k, source })
    } else {
        unlinked::classify_class(h, class).map_err(|source| PipelineError::Unlinked { class: k, source })
    }
}

/// Classification of every class subalgebra, with the identity checks.
pub fn classify(datum: &LiftingDatum) -> Result<Report, PipelineError> {
    let h = LiftingAlgebra::build(datum)?;
    let classes = h.class_decomposition();
    classify_built(&h, &classes)
}

pub fn classify_built(h: &LiftingAlgebra, classes: &[ClassSubalgebra]) -> Result<Report, PipelineError> {
    let reports = par::map(classes, |c| classify_class(h, c));
    let classes_out = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    let checks = identity_checks(h, classes)?;
    Ok(Report {
        datum: h.datum.clone(),
        case: h.tag(),
        conductor: h.params.conductor,
        n1: h.n1() as u32,
        n2: h.n2() as u32,
        dim: h.dim(),
        classes: classes_out,
        checks,
    })
}

/// Identities on `H` itself.
pub fn algebra_checks(h: &LiftingAlgebra) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let rel = h.check_relations();
    out.push(check(
        "defining relations",
        rel.is_ok(),
        rel.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    let assoc = h.algebra().check_associativity(&h.generator_indices());
    out.push(check(
        "associativity of H",
        assoc.is_ok(),
        assoc.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    let s_max = h.n1().min(h.n2()) as u32;
    let comm = h.check_braided_commutators(s_max);
    out.push(check(
        format!("braided commutators, 1 <= s <= {s_max}"),
        comm.is_ok(),
        comm.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    out.push(check("antipode is anti-multiplicative", h.antipode_is_antimultiplicative(), ""));
    // S^2 scales x by chi1(a)^-1 and y by chi2(b)^-1. Some group element must
    // realize both; linked data have a^-1 (chi1(a) = chi1(b)), unlinked data
    // may have none, e.g. Z_3 with a = g, b = g^2, chi1 = chi2.
    if h.tag().linked {
        let conj = h.antipode_square_conjugator();
        let a_inv = h.group().inv(&h.datum.a);
        out.push(check(
            "S^2 is conjugation by a group element",
            conj.is_some(),
            match &conj {
                Some(g) if *g == a_inv => format!("by a^-1 = {:?}, with no sign", g.0),
                Some(g) => format!("by {:?}", g.0),
                None => "no conjugating group element".into(),
            },
        ));
        let ic = h.integral_checks();
        out.push(check(
            "integral: xI = Ix = yI = Iy = 0, gI = Ig = I",
            ic.all() && !h.integral().is_zero(),
            if ic.all() { String::new() } else { format!("{ic:?}") },
        ));
    }
    out
}

/// Identities on one class subalgebra.
pub fn class_identity_checks(
    h: &LiftingAlgebra,
    class: &ClassSubalgebra,
) -> Result<Vec<CheckResult>, PipelineError> {
    let k = class.coset_index;
    let tag = format!("class {k}");
    let mut out = Vec::new();
    let assoc = class.algebra.check_associativity(&class.generator_indices());
    out.push(check(
        format!("{tag}: associativity"),
        assoc.is_ok(),
        assoc.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    if h.tag().linked {
        let checks =
            linked::identity_checks(h, class).map_err(|source| PipelineError::Linked { class: k, source })?;
        out.extend(checks.into_iter().map(|c| CheckResult {
            name: format!("{tag}: {}", c.name),
            ..c
        }));
    } else if unlinked::class_potency(h, class) == Potency::Unipotent {
        // the f_alpha need n-th roots of x^n1 and (y b^-1)^n2; the block
        // idempotents only need roots over W
        if let Ok(u) = unlinked::unipotent_idempotents(h, class) {
            let name = format!("{tag}: intertwiners f_b A f_a != 0 iff a = b on W");
            out.push(match unlinked::check_intertwiners(h, class, &u) {
                Ok(c) => check(name, true, format!("{} pairs", c.pairs_checked)),
                Err(e) => check(name, false, e),
            });
        } else if let Ok(es) = unlinked::center_idempotents(h, class) {
            let name = format!("{tag}: block idempotents over W are central, orthogonal, complete, e A e = M_|X|(k)");
            out.push(match unlinked::check_block_idempotents(class, &es) {
                Ok(n) => check(name, true, format!("{n} blocks")),
                Err(e) => check(name, false, e),
            });
        }
    }
    Ok(out)
}

/// All identity-level checks: `H`, then every class.
pub fn identity_checks(h: &LiftingAlgebra, classes: &[ClassSubalgebra]) -> Result<Vec<CheckResult>, PipelineError> {
    let mut out = algebra_checks(h);
    let total: usize = classes.iter().map(|c| c.dim()).sum();
    out.push(check(
        "class dimensions sum to dim H",
        total == h.dim(),
        format!("{total} vs {}", h.dim()),
    ));
    for per in par::map(classes, |c| class_identity_checks(h, c)) {
        out.extend(per?);
    }
    Ok(out)
}

/// Compares the theory report of one class with the oracle.
/// The socle/top comparison at `Full` is made only when `symmetric`: linked
/// liftings are symmetric algebras, unlinked ones in general are not.
pub fn oracle_checks(class: &ClassSubalgebra, report: &ClassReport, level: Level, symmetric: bool) -> Vec<CheckResult> {
    let tag = format!("class {}", class.coset_index);
    let mut out = vec![check(
        format!("{tag}: sum dim P dim L / dim End L = dim A"),
        report.regular_dimension() == class.dim(),
        format!("{} vs {}", report.regular_dimension(), class.dim()),
    )];
    let depth = if level == Level::Full {
        AnalysisDepth::Full
    } else {
        AnalysisDepth::Regular
    };
    let start: Vec<_> = (0..class.coset.len()).map(|k| class.weight_idempotent(k)).collect();
    let split = report.simples.iter().all(|s| s.endo_dim == 1);
    let oracle = analyze(&class.algebra, &start, &class.weights(), depth);
    let o = match (oracle, split) {
        (Ok(o), true) => o,
        (Err(AlgebraError::NonSplit(m, d)), false) => {
            out.push(check(
                format!("{tag}: oracle agrees the class does not split"),
                true,
                format!("no split idempotent over Q(zeta_{m}); semisimple corner of dim {d}"),
            ));
            return out;
        }
        (Ok(_), false) => {
            out.push(check(
                format!("{tag}: oracle"),
                false,
                "theory reports a non-split class but the oracle splits it",
            ));
            return out;
        }
        (Err(e), _) => {
            out.push(check(format!("{tag}: oracle"), false, e.to_string()));
            return out;
        }
    };
    let diff = ClassSummary::from_theory(report).diff(&ClassSummary::from_oracle(&o), level == Level::Full);
    out.push(check(
        format!("{tag}: theory matches oracle"),
        diff.is_empty(),
        diff.join("\n"),
    ));
    let rad: usize = report.blocks.iter().map(|b| b.radical_dim).sum();
    out.push(check(
        format!("{tag}: radical dimension"),
        rad == o.radical_dim,
        format!("theory {rad}, oracle {}", o.radical_dim),
    ));
    out.push(check(
        format!("{tag}: block count from the center"),
        o.center_block_count == report.blocks.len(),
        format!("theory {}, center {}", report.blocks.len(), o.center_block_count),
    ));
    if level == Level::Full && symmetric {
        let bad: Vec<usize> = o
            .simples
            .iter()
            .enumerate()
            .filter(|(_, s)| s.socle_weights != s.top_weights)
            .map(|(i, _)| i)
            .collect();
        out.push(check(
            format!("{tag}: socle census = top census for every PIM"),
            bad.is_empty(),
            if bad.is_empty() { String::new() } else { format!("fails for oracle simples {bad:?}") },
        ));
    }
    out
}

/// Outcome of [`verify`]: every check in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub fn verify(datum: &LiftingDatum, level: Level) -> Result<Verification, PipelineError> {
    let h = LiftingAlgebra::build(datum)?;
    let classes = h.class_decomposition();
    verify_built(&h, &classes, level)
}

/// Verification over given class subalgebras (which a test may have altered).
pub fn verify_built(
    h: &LiftingAlgebra,
    classes: &[ClassSubalgebra],
    level: Level,
) -> Result<Verification, PipelineError> {
    let mut checks = identity_checks(h, classes)?;
    // a broken class would make the classifiers meaningless
    if level > Level::Identities && checks.iter().all(|c| c.passed) {
        let per = par::map(classes, |c| {
            classify_class(h, c).map(|r| oracle_checks(c, &r, level, h.tag().linked))
        });
        for c in per {
            checks.extend(c?);
        }
    }
    Ok(Verification { level, checks })
}

/// Replaces one structure constant of a class subalgebra by a wrong value
/// (adds the unit to `b_i b_j`); a negative control for verification.
pub fn corrupt_class(class: &mut ClassSubalgebra, i: usize, j: usize) {
    let a = &class.algebra;
    let wrong = a.product(i, j).add(a.unit());
    class.algebra = a.with_corrupted_product(i, j, wrong);
}
