use crate::abelian::{AbelianGroup, CharSubgroupData, Character, GroupElement};
use crate::cyclo::{Cyclo, CycloField};
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

/// One summand `(p/q) * zeta^zeta_pow`, where `zeta` is a primitive root of
/// unity of order `order` (default: the exponent of the group).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarTerm {
    #[serde(default)]
    pub zeta_pow: i64,
    #[serde(default = "unit_ratio")]
    pub rational: [i64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
}

fn unit_ratio() -> [i64; 2] {
    [1, 1]
}

impl ScalarTerm {
    pub fn rational(p: i64, q: i64) -> Self {
        ScalarTerm {
            zeta_pow: 0,
            rational: [p, q],
            order: None,
        }
    }

    pub fn zeta(pow: i64) -> Self {
        ScalarTerm {
            zeta_pow: pow,
            rational: [1, 1],
            order: None,
        }
    }
}

/// A scalar written as a finite sum of rational multiples of roots of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ExactScalar(pub Vec<ScalarTerm>);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(vec![])
    }

    pub fn int(n: i64) -> Self {
        ExactScalar(vec![ScalarTerm::rational(n, 1)])
    }

    /// Least conductor in which every term lives, given the group exponent.
    pub fn conductor(&self, exponent: u32) -> u32 {
        self.0
            .iter()
            .fold(1u32, |acc, t| acc.lcm(&t.order.unwrap_or(exponent).max(1)))
    }

    pub fn to_cyclo(&self, field: &Arc<CycloField>, exponent: u32) -> Result<Cyclo, DatumError> {
        let m = field.conductor();
        let mut acc = Cyclo::zero(field);
        for t in &self.0 {
            let order = t.order.unwrap_or(exponent).max(1);
            if m % order != 0 {
                return Err(DatumError::Shape(format!(
                    "scalar term of order {order} does not embed in conductor {m}"
                )));
            }
            if t.rational[1] == 0 {
                return Err(DatumError::Shape("zero denominator in scalar".into()));
            }
            let r = BigRational::new(t.rational[0].into(), t.rational[1].into());
            let mut z = Cyclo::zeta_pow(field, (m / order) as i64 * t.zeta_pow);
            z.scale_rational(&r);
            acc += &z;
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftingDatum {
    pub group: AbelianGroup,
    pub a: GroupElement,
    pub b: GroupElement,
    pub chi1: Character,
    pub chi2: Character,
    pub eps1: bool,
    pub eps2: bool,
    pub gamma: ExactScalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Potency {
    Nilpotent,
    Seminilpotent,
    Unipotent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTag {
    pub linked: bool,
    pub potency: Potency,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub number: u8,
    pub detail: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatumError {
    #[error("malformed datum: {0}")]
    Shape(String),
    #[error("{}", describe(.0))]
    Conditions(Vec<Violation>),
}

fn describe(v: &[Violation]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|c| format!("condition ({}) violated: {}", c.number, c.detail))
        .collect();
    parts.join("; ")
}

impl DatumError {
    /// Numbers of all violated conditions, in increasing order.
    pub fn conditions(&self) -> Vec<u8> {
        match self {
            DatumError::Conditions(v) => v.iter().map(|c| c.number).collect(),
            DatumError::Shape(_) => vec![],
        }
    }
}

/// Numbers derived from a valid datum.
#[derive(Clone, Debug)]
pub struct DatumParams {
    pub n1: u32,
    pub n2: u32,
    /// `X = <chi1, chi2>`.
    pub chars: CharSubgroupData,
    pub conductor: u32,
    pub field: Arc<CycloField>,
    pub gamma: Cyclo,
    pub tag: CaseTag,
}

impl LiftingDatum {
    fn check_shapes(&self) -> Result<(), DatumError> {
        let r = self.group.rank();
        let f = self.group.factors();
        let ok = |v: &[u32]| v.len() == r && v.iter().zip(f).all(|(&e, &m)| e < m);
        for (name, v) in [
            ("a", &self.a.0),
            ("b", &self.b.0),
            ("chi1", &self.chi1.0),
            ("chi2", &self.chi2.0),
        ] {
            if !ok(v) {
                return Err(DatumError::Shape(format!(
                    "{name} must have {r} entries reduced modulo the factor orders"
                )));
            }
        }
        Ok(())
    }

    pub fn gamma_is_zero(&self) -> Result<bool, DatumError> {
        let e = self.group.exponent();
        let field = CycloField::new(self.gamma.conductor(e)).map_err(|e| DatumError::Shape(e.to_string()))?;
        Ok(self.gamma.to_cyclo(&field, e)?.is_zero())
    }

    /// Checks the lifting conditions and returns the case tag; on failure
    /// every violated condition is listed.
    pub fn validate(&self) -> Result<CaseTag, DatumError> {
        self.check_shapes()?;
        let g = &self.group;
        let mut bad = Vec::new();
        let mut violated = |number: u8, detail: &str| {
            bad.push(Violation {
                number,
                detail: detail.to_string(),
            })
        };
        let n1 = g.value_order(&self.chi1, &self.a);
        if n1 <= 1 {
            violated(9, "chi1(a) must have order greater than 1");
        }
        let n2 = g.value_order(&self.chi2, &self.b);
        if n2 <= 1 {
            violated(10, "chi2(b) must have order greater than 1");
        }
        let e = g.exponent();
        if (g.value_exponent(&self.chi1, &self.b) + g.value_exponent(&self.chi2, &self.a)) % e != 0 {
            violated(11, "chi1(b) chi2(a) must equal 1");
        }
        if self.eps1 && !g.is_trivial(&g.char_pow(&self.chi1, n1 as i64)) {
            violated(12, "chi1^n1 must be trivial when eps1 = 1");
        }
        if self.eps2 && !g.is_trivial(&g.char_pow(&self.chi2, n2 as i64)) {
            violated(12, "chi2^n2 must be trivial when eps2 = 1");
        }
        let linked = !self.gamma_is_zero()?;
        if linked {
            if !g.is_trivial(&g.char_mul(&self.chi1, &self.chi2)) {
                violated(13, "gamma != 0 requires chi1 chi2 = trivial");
            }
            if g.is_identity(&g.mul(&self.a, &self.b)) {
                violated(13, "gamma != 0 requires ab != 1");
            }
        }
        if !bad.is_empty() {
            return Err(DatumError::Conditions(bad));
        }
        let potency = match (self.eps1, self.eps2) {
            (false, false) => Potency::Nilpotent,
            (true, true) => Potency::Unipotent,
            _ => Potency::Seminilpotent,
        };
        Ok(CaseTag { linked, potency })
    }

    /// Validates and fixes the working field.
    ///
    /// Linked data use conductor `2 m exp(G)` with `m = |X| / |chi2(a)|`,
    /// unlinked data `2 exp(G)`; both are enlarged to hold `gamma`.
    pub fn params(&self) -> Result<DatumParams, DatumError> {
        let tag = self.validate()?;
        let g = &self.group;
        let n1 = g.value_order(&self.chi1, &self.a);
        let n2 = g.value_order(&self.chi2, &self.b);
        let chars = CharSubgroupData::generated(g, &[self.chi1.clone(), self.chi2.clone()]);
        let e = g.exponent();
        let base = if tag.linked {
            let m = chars.order() as u32 / g.value_order(&self.chi2, &self.a);
            2 * m * e
        } else {
            2 * e
        };
        let conductor = base.lcm(&self.gamma.conductor(e));
        let field = CycloField::new(conductor).map_err(|e| DatumError::Shape(e.to_string()))?;
        let gamma = self.gamma.to_cyclo(&field, e)?;
        Ok(DatumParams {
            n1,
            n2,
            chars,
            conductor,
            field,
            gamma,
            tag,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn datum_a() -> LiftingDatum {
        LiftingDatum {
            group: AbelianGroup::cyclic(3),
            a: GroupElement(vec![1]),
            b: GroupElement(vec![1]),
            chi1: Character(vec![1]),
            chi2: Character(vec![2]),
            eps1: false,
            eps2: false,
            gamma: ExactScalar::int(1),
        }
    }

    #[test]
    fn datum_a_is_linked_nilpotent() {
        let d = datum_a();
        let tag = d.validate().unwrap();
        assert!(tag.linked);
        assert_eq!(tag.potency, Potency::Nilpotent);
        let p = d.params().unwrap();
        assert_eq!((p.n1, p.n2), (3, 3));
        assert_eq!(p.conductor, 6);
    }

    #[test]
    fn each_condition_is_reported() {
        let base = datum_a();
        let mut d = base.clone();
        d.a = GroupElement(vec![0]);
        assert!(d.validate().unwrap_err().conditions().contains(&9));
        let mut d = base.clone();
        d.b = GroupElement(vec![0]);
        assert!(d.validate().unwrap_err().conditions().contains(&10));
        let mut d = base.clone();
        d.chi2 = Character(vec![1]);
        assert_eq!(d.validate().unwrap_err().conditions(), vec![11, 13]);
        // Z_9, a = b = g^3, chi1(g) = zeta_9: chi1(a) has order 3 but chi1^3 != 1
        let d = LiftingDatum {
            group: AbelianGroup::cyclic(9),
            a: GroupElement(vec![3]),
            b: GroupElement(vec![3]),
            chi1: Character(vec![1]),
            chi2: Character(vec![8]),
            eps1: true,
            eps2: false,
            gamma: ExactScalar::zero(),
        };
        assert_eq!(d.validate().unwrap_err().conditions(), vec![12]);
        let mut ok = d.clone();
        ok.a = GroupElement(vec![1]);
        ok.b = GroupElement(vec![1]);
        ok.chi1 = Character(vec![3]);
        ok.chi2 = Character(vec![6]);
        assert!(ok.validate().is_ok());
        // b = a^-1 makes ab = 1 (and also breaks the pairing condition)
        let mut d = base;
        d.b = GroupElement(vec![2]);
        assert!(d.validate().unwrap_err().conditions().contains(&13));
    }

    #[test]
    fn gamma_zeta_power_is_relative_to_exponent() {
        let mut d = datum_a();
        d.gamma = ExactScalar(vec![ScalarTerm::zeta(1)]);
        let p = d.params().unwrap();
        let z3 = Cyclo::zeta_pow(&p.field, 2);
        assert_eq!(p.gamma, z3);
        d.gamma = ExactScalar(vec![ScalarTerm { zeta_pow: 1, rational: [1, 2], order: Some(4) }]);
        let p = d.params().unwrap();
        assert_eq!(p.conductor, 12);
    }
}
