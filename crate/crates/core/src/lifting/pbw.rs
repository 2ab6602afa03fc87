//! Straightening of words in `x`, `y` into the normal form `g x^i y^j`.

use crate::abelian::AbelianGroup;
use crate::cyclo::{Cyclo, CycloField};
use std::collections::BTreeMap;
use std::sync::Arc;

/// `(group index, x power, y power)`.
pub type Monomial = (usize, usize, usize);

/// A sparse combination of normal monomials.
pub type Normal = BTreeMap<Monomial, Cyclo>;

fn add_term(w: &mut Normal, m: Monomial, c: Cyclo) {
    if c.is_zero() {
        return;
    }
    match w.get_mut(&m) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                w.remove(&m);
            }
        }
        None => {
            w.insert(m, c);
        }
    }
}

/// Precomputed data for multiplying normal monomials.
#[derive(Clone, Debug)]
pub struct PbwEngine {
    pub(crate) field: Arc<CycloField>,
    pub(crate) order: usize,
    pub(crate) n1: usize,
    pub(crate) n2: usize,
    // group multiplication on element indices
    mul: Vec<usize>,
    // chi_k(g) as exponents of zeta_E
    chi1_exp: Vec<u32>,
    chi2_exp: Vec<u32>,
    exponent: u32,
    // x^i y^j x^k y^l, indexed ((i*n2+j)*n1+k)*n2+l
    words: Vec<Vec<(Monomial, Cyclo)>>,
}

pub(crate) struct EngineInput<'a> {
    pub group: &'a AbelianGroup,
    pub field: &'a Arc<CycloField>,
    pub a: usize,
    pub b: usize,
    pub chi1: &'a crate::abelian::Character,
    pub chi2: &'a crate::abelian::Character,
    pub n1: usize,
    pub n2: usize,
    pub eps1: bool,
    pub eps2: bool,
    pub gamma: &'a Cyclo,
}

impl PbwEngine {
    pub(crate) fn new(inp: EngineInput<'_>) -> Self {
        let g = inp.group;
        let elems = g.elements();
        let order = elems.len();
        let mul: Vec<usize> = elems
            .iter()
            .flat_map(|u| elems.iter().map(move |v| g.index_of(&g.mul(u, v))))
            .collect();
        let chi1_exp = elems.iter().map(|e| g.value_exponent(inp.chi1, e)).collect();
        let chi2_exp = elems.iter().map(|e| g.value_exponent(inp.chi2, e)).collect();
        let mut engine = PbwEngine {
            field: inp.field.clone(),
            order,
            n1: inp.n1,
            n2: inp.n2,
            mul,
            chi1_exp,
            chi2_exp,
            exponent: g.exponent(),
            words: Vec::new(),
        };
        engine.words = engine.straighten_all(&inp);
        engine
    }

    pub(crate) fn group_mul(&self, u: usize, v: usize) -> usize {
        self.mul[u * self.order + v]
    }

    /// `zeta_E^t` in the working field.
    pub(crate) fn root(&self, t: i64) -> Cyclo {
        let scale = (self.field.conductor() / self.exponent) as i64;
        Cyclo::zeta_pow(&self.field, scale * t)
    }

    /// `chi1(h)^-i chi2(h)^-j`, the scalar picked up by `x^i y^j h = c h x^i y^j`.
    pub(crate) fn commute_scalar(&self, h: usize, i: usize, j: usize) -> Cyclo {
        let t = self.chi1_exp[h] as i64 * i as i64 + self.chi2_exp[h] as i64 * j as i64;
        self.root(-t)
    }

    fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.group_mul(acc, g))
    }

    fn straighten_all(&self, inp: &EngineInput<'_>) -> Vec<Vec<(Monomial, Cyclo)>> {
        let (n1, n2) = (self.n1, self.n2);
        let f = &self.field;
        let one = Cyclo::one(f);
        let a_n1 = self.power(inp.a, n1);
        let b_n2 = self.power(inp.b, n2);
        let ab = self.group_mul(inp.a, inp.b);

        let left_x = |w: &Normal| -> Normal {
            let mut out = Normal::new();
            for (&(h, c, d), coef) in w {
                let s = coef * &self.root(-(self.chi1_exp[h] as i64));
                if c + 1 < n1 {
                    add_term(&mut out, (h, c + 1, d), s);
                } else if inp.eps1 {
                    add_term(&mut out, (self.group_mul(h, a_n1), 0, d), s.clone());
                    add_term(&mut out, (h, 0, d), -&s);
                }
            }
            out
        };
        let right_y = |w: &Normal| -> Normal {
            let mut out = Normal::new();
            for (&(g, i, j), coef) in w {
                if j + 1 < n2 {
                    add_term(&mut out, (g, i, j + 1), coef.clone());
                } else if inp.eps2 {
                    // x^i b^n2 = chi1(b^n2)^-i b^n2 x^i
                    let s = coef * &self.commute_scalar(b_n2, i, 0);
                    add_term(&mut out, (self.group_mul(g, b_n2), i, 0), s);
                    add_term(&mut out, (g, i, 0), -coef);
                }
            }
            out
        };

        // y^j x from yx = chi2(a)^-1 (xy - gamma(ab - 1))
        let q_inv = self.root(-(self.chi2_exp[inp.a] as i64));
        let mut y_then_x: Vec<Normal> = Vec::with_capacity(n2);
        y_then_x.push(Normal::from([((0, 1, 0), one.clone())]));
        for j in 1..n2 {
            let mut w = right_y(&y_then_x[j - 1]);
            if !inp.gamma.is_zero() {
                let ab_shift = self.root(-(self.chi2_exp[ab] as i64) * (j as i64 - 1));
                add_term(&mut w, (ab, 0, j - 1), -&(inp.gamma * &ab_shift));
                add_term(&mut w, (0, 0, j - 1), inp.gamma.clone());
            }
            for v in w.values_mut() {
                *v = &*v * &q_inv;
            }
            y_then_x.push(w);
        }
        // x^i y^j x
        let mut xyx: Vec<Vec<Normal>> = Vec::with_capacity(n1);
        xyx.push(y_then_x);
        for i in 1..n1 {
            let row = xyx[i - 1].iter().map(&left_x).collect();
            xyx.push(row);
        }
        let right_x = |w: &Normal| -> Normal {
            let mut out = Normal::new();
            for (&(g, i, j), coef) in w {
                for (&(h, c, d), t) in &xyx[i][j] {
                    add_term(&mut out, (self.group_mul(g, h), c, d), coef * t);
                }
            }
            out
        };

        let mut words = vec![Vec::new(); n1 * n2 * n1 * n2];
        for i in 0..n1 {
            for j in 0..n2 {
                let mut wx = Normal::from([((0, i, j), one.clone())]);
                for k in 0..n1 {
                    if k > 0 {
                        wx = right_x(&wx);
                    }
                    let mut w = wx.clone();
                    for l in 0..n2 {
                        if l > 0 {
                            w = right_y(&w);
                        }
                        words[((i * n2 + j) * n1 + k) * n2 + l] =
                            w.iter().map(|(m, c)| (*m, c.clone())).collect();
                    }
                }
            }
        }
        words
    }

    /// Normal form of `x^i y^j x^k y^l`.
    pub fn word(&self, i: usize, j: usize, k: usize, l: usize) -> &[(Monomial, Cyclo)] {
        let (n1, n2) = (self.n1, self.n2);
        &self.words[((i * n2 + j) * n1 + k) * n2 + l]
    }

    /// `(g x^i y^j)(h x^k y^l)` in normal form.
    pub fn product(&self, left: Monomial, right: Monomial) -> Vec<(Monomial, Cyclo)> {
        let (g, i, j) = left;
        let (h, k, l) = right;
        let s = self.commute_scalar(h, i, j);
        let gh = self.group_mul(g, h);
        self.word(i, j, k, l)
            .iter()
            .map(|&((t, c, d), ref v)| ((self.group_mul(gh, t), c, d), &s * v))
            .collect()
    }
}
