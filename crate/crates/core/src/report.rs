//! Report types shared by the classifiers, exact scalar serialization, and
//! the comparison of a theory report with the brute-force oracle.

use crate::cyclo::{rational_to_pair, Cyclo, CycloField};
use crate::lifting::{CaseTag, ExactScalar, Potency, ScalarTerm};
use crate::structalg::{OracleReport, Vector};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Scalar as a sum of `(p/q) zeta_M^j` in the report's conductor.
pub fn scalar_terms(c: &Cyclo) -> ExactScalar {
    ExactScalar(
        c.terms()
            .into_iter()
            .map(|(j, r)| {
                let (p, q) = rational_to_pair(&r).expect("coefficient fits in 64 bits");
                ScalarTerm {
                    zeta_pow: j as i64,
                    rational: [p, q],
                    order: None,
                }
            })
            .collect(),
    )
}

/// Reads back a scalar written by [`scalar_terms`].
pub fn scalar_from_terms(s: &ExactScalar, field: &Arc<CycloField>) -> Cyclo {
    s.to_cyclo(field, field.conductor()).expect("terms relative to the conductor")
}

/// Sparse element of a class subalgebra, keyed by basis label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementExpr(pub Vec<(String, ExactScalar)>);

impl ElementExpr {
    pub fn from_vector(v: &Vector, labels: &[String]) -> Self {
        ElementExpr(
            v.iter()
                .map(|(i, c)| (labels[*i].clone(), scalar_terms(c)))
                .collect(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Semisimple,
    Finite,
    Tame,
    Wild,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleModule {
    pub label: String,
    pub dim: usize,
    /// Weight census: how often each character of the class occurs.
    pub weights: Vec<(String, usize)>,
    /// `dim End(L)`; above one only when the class does not split.
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub endo_dim: usize,
}

fn one() -> usize {
    1
}

fn is_one(k: &usize) -> bool {
    *k == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projective {
    pub simple: String,
    pub dim: usize,
    /// Simple composition factors of each radical layer.
    pub layers: Vec<Vec<(String, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: String,
    pub to: String,
    pub multiplicity: usize,
    /// One of `chi1`, `chi2`, `a`, `b`.
    pub generator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub label: String,
    pub simples: Vec<String>,
    pub dim: usize,
    pub radical_dim: usize,
    pub rep_type: RepType,
    pub description: String,
    pub quiver: Quiver,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<ElementExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub coset: Vec<String>,
    pub dim: usize,
    /// Potency of this class after re-tagging.
    pub potency: Potency,
    /// Set when the roles of `x` and `y` were exchanged.
    pub swapped: bool,
    pub simples: Vec<SimpleModule>,
    pub projectives: Vec<Projective>,
    pub blocks: Vec<Block>,
    /// Case-specific constants (e.g. kappa, m), exact.
    pub constants: BTreeMap<String, ExactScalar>,
    pub notes: Vec<String>,
}

impl ClassReport {
    pub fn simple(&self, label: &str) -> Option<&SimpleModule> {
        self.simples.iter().find(|s| s.label == label)
    }

    /// `sum dim P dim L / dim End(L)`, which must equal the class dimension.
    pub fn regular_dimension(&self) -> usize {
        self.projectives
            .iter()
            .map(|p| {
                self.simple(&p.simple)
                    .map_or(0, |s| p.dim * s.dim / s.endo_dim)
            })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub datum: crate::lifting::LiftingDatum,
    pub case: CaseTag,
    pub conductor: u32,
    pub n1: u32,
    pub n2: u32,
    pub dim: usize,
    pub classes: Vec<ClassReport>,
    pub checks: Vec<CheckResult>,
}

// ---------------------------------------------------------------------------
// Comparison with the oracle

/// Numerical invariants of one class, keyed by simple weight census so that
/// theory and oracle can be compared without matching labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub simples: Vec<(String, usize, usize)>,
    pub layers: Vec<(String, Vec<Vec<(String, usize)>>)>,
    pub blocks: Vec<(Vec<String>, usize, usize)>,
    pub arrows: Vec<(String, String, usize)>,
}

fn weight_key(w: &[(String, usize)]) -> String {
    let mut w = w.to_vec();
    w.sort();
    w.iter()
        .map(|(l, k)| if *k == 1 { l.clone() } else { format!("{k}*{l}") })
        .collect::<Vec<_>>()
        .join("+")
}

fn keyed_layers(layers: &[Vec<(String, usize)>]) -> Vec<Vec<(String, usize)>> {
    layers
        .iter()
        .map(|l| {
            let mut m: BTreeMap<String, usize> = BTreeMap::new();
            for (k, c) in l {
                *m.entry(k.clone()).or_default() += c;
            }
            m.into_iter().collect()
        })
        .collect()
}

fn finish(
    mut simples: Vec<(String, usize, usize)>,
    mut layers: Vec<(String, Vec<Vec<(String, usize)>>)>,
    mut blocks: Vec<(Vec<String>, usize, usize)>,
    arrows: BTreeMap<(String, String), usize>,
) -> ClassSummary {
    simples.sort();
    layers.sort();
    for b in blocks.iter_mut() {
        b.0.sort();
    }
    blocks.sort();
    ClassSummary {
        simples,
        layers,
        blocks,
        arrows: arrows.into_iter().map(|((f, t), k)| (f, t, k)).collect(),
    }
}

impl ClassSummary {
    pub fn from_theory(r: &ClassReport) -> Self {
        let key: BTreeMap<&str, String> = r
            .simples
            .iter()
            .map(|s| (s.label.as_str(), weight_key(&s.weights)))
            .collect();
        let k = |l: &str| key.get(l).cloned().unwrap_or_else(|| format!("?{l}"));
        let simples = r
            .projectives
            .iter()
            .map(|p| (k(&p.simple), r.simple(&p.simple).map_or(0, |s| s.dim), p.dim))
            .collect();
        let layers = r
            .projectives
            .iter()
            .map(|p| {
                let ls: Vec<Vec<(String, usize)>> = p
                    .layers
                    .iter()
                    .map(|l| l.iter().map(|(s, c)| (k(s), *c)).collect())
                    .collect();
                (k(&p.simple), keyed_layers(&ls))
            })
            .collect();
        let blocks = r
            .blocks
            .iter()
            .map(|b| (b.simples.iter().map(|s| k(s)).collect(), b.dim, b.radical_dim))
            .collect();
        let mut arrows = BTreeMap::new();
        for b in &r.blocks {
            for a in &b.quiver.arrows {
                *arrows.entry((k(&a.from), k(&a.to))).or_default() += a.multiplicity;
            }
        }
        finish(simples, layers, blocks, arrows)
    }

    pub fn from_oracle(o: &OracleReport) -> Self {
        let keys: Vec<String> = o.simples.iter().map(|s| weight_key(&s.weights)).collect();
        let simples = o
            .simples
            .iter()
            .zip(&keys)
            .map(|(s, k)| (k.clone(), s.dim, s.projective_dim))
            .collect();
        let layers = o
            .simples
            .iter()
            .zip(&keys)
            .map(|(s, k)| {
                let ls: Vec<Vec<(String, usize)>> = s
                    .pim_layers
                    .iter()
                    .map(|l| {
                        l.iter()
                            .enumerate()
                            .filter(|(_, c)| **c > 0)
                            .map(|(t, c)| (keys[t].clone(), *c))
                            .collect()
                    })
                    .collect();
                (k.clone(), keyed_layers(&ls))
            })
            .collect();
        let blocks = o
            .blocks
            .iter()
            .map(|b| (b.simples.iter().map(|&c| keys[c].clone()).collect(), b.dim, b.radical_dim))
            .collect();
        let mut arrows = BTreeMap::new();
        for a in &o.arrows {
            *arrows
                .entry((keys[a.from].clone(), keys[a.to].clone()))
                .or_default() += a.multiplicity;
        }
        finish(simples, layers, blocks, arrows)
    }

    /// Human-readable differences; empty when the summaries agree.
    /// Without `with_quiver` the arrow lists are not compared.
    pub fn diff(&self, oracle: &ClassSummary, with_quiver: bool) -> Vec<String> {
        let mut out = Vec::new();
        if self.simples != oracle.simples {
            out.push(format!(
                "simples (key, dim L, dim P): theory {:?} oracle {:?}",
                self.simples, oracle.simples
            ));
        }
        if self.layers != oracle.layers {
            out.push(format!(
                "projective Loewy layers: theory {:?} oracle {:?}",
                self.layers, oracle.layers
            ));
        }
        if self.blocks != oracle.blocks {
            out.push(format!(
                "blocks (simples, dim, radical dim): theory {:?} oracle {:?}",
                self.blocks, oracle.blocks
            ));
        }
        if with_quiver && self.arrows != oracle.arrows {
            out.push(format!(
                "arrows: theory {:?} oracle {:?}",
                self.arrows, oracle.arrows
            ));
        }
        out
    }
}

/// Adds `(label, 1)` to a census, merging repeats.
pub(crate) fn census<I: IntoIterator<Item = String>>(labels: I) -> Vec<(String, usize)> {
    let mut m: BTreeMap<String, usize> = BTreeMap::new();
    for l in labels {
        *m.entry(l).or_default() += 1;
    }
    m.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let f = CycloField::new(12).unwrap();
        let c = &Cyclo::zeta_pow(&f, 5) + &Cyclo::from_ratio(&f, -3, 7);
        let s = scalar_terms(&c);
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("zeta_pow"));
        let back: ExactScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(scalar_from_terms(&back, &f), c);
    }

    #[test]
    fn weight_keys_are_order_independent() {
        let a = vec![("[1]".to_string(), 1), ("[0]".to_string(), 2)];
        let b = vec![("[0]".to_string(), 2), ("[1]".to_string(), 1)];
        assert_eq!(weight_key(&a), weight_key(&b));
        assert_eq!(weight_key(&a), "2*[0]+[1]");
    }
}
