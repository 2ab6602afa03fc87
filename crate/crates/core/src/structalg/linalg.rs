//! Sparse exact vectors and semi-echelon subspaces over `Q(zeta_M)`.

use crate::cyclo::{Cyclo, CycloField};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Vector {
    entries: Vec<(usize, Cyclo)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { entries: vec![] }
    }

    pub fn unit(i: usize, field: &Arc<CycloField>) -> Self {
        Vector {
            entries: vec![(i, Cyclo::one(field))],
        }
    }

    pub fn single(i: usize, c: Cyclo) -> Self {
        if c.is_zero() {
            Vector::zero()
        } else {
            Vector {
                entries: vec![(i, c)],
            }
        }
    }

    /// From arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Cyclo)>) -> Self {
        let mut map: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (i, c) in pairs {
            match map.get_mut(&i) {
                Some(v) => *v += &c,
                None => {
                    map.insert(i, c);
                }
            }
        }
        Vector {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Cyclo]) -> Self {
        Vector {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, field: &Arc<CycloField>) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(field); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Cyclo)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Cyclo)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Option<&Cyclo> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Cyclo)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &Cyclo) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Cyclo, other: &Vector) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (Some((i, _)), Some((j, _))) => {
                    if i < j {
                        out.push(a.next().unwrap().clone());
                    } else if j < i {
                        let (j, y) = b.next().unwrap();
                        out.push((*j, c * y));
                    } else {
                        let (i, x) = a.next().unwrap();
                        let (_, y) = b.next().unwrap();
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                    }
                }
            }
        }
        Vector { entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&Cyclo::one(c.field()), other),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&Cyclo::from_int(c.field(), -1), other),
        }
    }

    /// Indices shifted by `offset`.
    pub fn shifted(&self, offset: usize) -> Vector {
        Vector {
            entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect(),
        }
    }

    /// Entries with index in `[lo, hi)`, re-based to start at 0.
    pub fn window(&self, lo: usize, hi: usize) -> Vector {
        Vector {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, c)| (i - lo, c.clone()))
                .collect(),
        }
    }

    pub fn dot_dense(&self, dense: &[Cyclo]) -> Cyclo {
        let field = match self.entries.first() {
            None => return Cyclo::zero(dense[0].field()),
            Some((_, c)) => c.field().clone(),
        };
        let mut acc = Cyclo::zero(&field);
        for (i, c) in &self.entries {
            if !dense[*i].is_zero() {
                acc += &(c * &dense[*i]);
            }
        }
        acc
    }
}

/// Dense scratch space for summing many sparse contributions.
pub struct Accumulator {
    slots: Vec<Option<Cyclo>>,
    touched: Vec<usize>,
}

impl Accumulator {
    pub fn new(dim: usize) -> Self {
        Accumulator {
            slots: vec![None; dim],
            touched: Vec::new(),
        }
    }

    pub fn add(&mut self, i: usize, c: &Cyclo) {
        match &mut self.slots[i] {
            Some(v) => *v += c,
            slot @ None => {
                *slot = Some(c.clone());
                self.touched.push(i);
            }
        }
    }

    /// `acc += c * v`.
    pub fn add_scaled(&mut self, c: &Cyclo, v: &Vector) {
        if c.is_one() {
            for (i, x) in v.iter() {
                self.add(*i, x);
            }
        } else {
            for (i, x) in v.iter() {
                self.add(*i, &(c * x));
            }
        }
    }

    pub fn take(&mut self) -> Vector {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(c) = self.slots[i].take() {
                if !c.is_zero() {
                    entries.push((i, c));
                }
            }
        }
        self.touched.clear();
        Vector { entries }
    }
}

/// A subspace held as semi-echelon rows: each row has leading coefficient 1
/// at its pivot and no entries below the pivot index.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: Vec<Vector>,
    pivots: HashMap<usize, usize>,
}

impl Subspace {
    pub fn new() -> Self {
        Subspace::default()
    }

    pub fn spanned_by<'a>(vs: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut s = Subspace::new();
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn from_owned(vs: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = Subspace::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// Remainder after eliminating every pivot, plus the multipliers used
    /// per row: `v = sum coeffs[r] * rows[r] + remainder`.
    pub fn reduce_tracked(&self, v: &Vector) -> (Vector, Vec<(usize, Cyclo)>) {
        let mut work: BTreeMap<usize, Cyclo> = v.entries.iter().cloned().collect();
        let mut rest = Vec::new();
        let mut coeffs = Vec::new();
        while let Some((k, c)) = work.pop_first() {
            match self.pivots.get(&k) {
                Some(&r) => {
                    for (idx, val) in &self.rows[r].entries[1..] {
                        let t = &c * val;
                        match work.get_mut(idx) {
                            Some(w) => {
                                *w -= &t;
                                if w.is_zero() {
                                    work.remove(idx);
                                }
                            }
                            None => {
                                work.insert(*idx, -t);
                            }
                        }
                    }
                    coeffs.push((r, c));
                }
                None => rest.push((k, c)),
            }
        }
        (Vector { entries: rest }, coeffs)
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        if self.rows.is_empty() {
            return v.clone();
        }
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` relative to `basis()`, if `v` lies in the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let (rest, coeffs) = self.reduce_tracked(v);
        rest.is_zero().then(|| Vector::from_pairs(coeffs))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let rem = self.reduce(&v);
        self.push_reduced(rem)
    }

    fn push_reduced(&mut self, rem: Vector) -> bool {
        match rem.leading() {
            None => false,
            Some((p, c)) => {
                let inv = c.inv().expect("nonzero pivot");
                let row = rem.scale(&inv);
                self.pivots.insert(p, self.rows.len());
                self.rows.push(row);
                true
            }
        }
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Fully reduced basis sorted by pivot.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].leading().unwrap().0);
        let mut out: Vec<Vector> = Vec::with_capacity(order.len());
        for &r in order.iter().rev() {
            let mut v = self.rows[r].clone();
            for w in &out {
                let (p, _) = w.leading().unwrap();
                if let Some(c) = v.get(p).cloned() {
                    v = v.axpy(&-c, w);
                }
            }
            out.push(v);
        }
        out.reverse();
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }
}

/// All `x` with `sum_i x_i rows[i] = 0`, where rows live in `K^ncols`.
pub fn left_kernel(rows: &[Vector], ncols: usize, field: &Arc<CycloField>) -> Vec<Vector> {
    let mut s = Subspace::new();
    for (i, r) in rows.iter().enumerate() {
        let aug = r.add(&Vector::unit(ncols + i, field));
        s.insert(aug);
    }
    s.reduced_basis()
        .into_iter()
        .filter(|v| v.leading().unwrap().0 >= ncols)
        .map(|v| v.window(ncols, ncols + rows.len()))
        .collect()
}

/// Detects the first linear dependency in a growing list of vectors.
pub struct DependencyTracker {
    space: Subspace,
    ambient: usize,
    count: usize,
    field: Arc<CycloField>,
}

impl DependencyTracker {
    pub fn new(ambient: usize, field: &Arc<CycloField>) -> Self {
        DependencyTracker {
            space: Subspace::new(),
            ambient,
            count: 0,
            field: field.clone(),
        }
    }

    /// Pushes `v_k`; if it lies in the span of the earlier vectors, returns
    /// `d` with `v_k = sum_{i<k} d_i v_i` and leaves the tracker unchanged.
    pub fn push(&mut self, v: &Vector) -> Option<Vec<Cyclo>> {
        let k = self.count;
        let aug = v.add(&Vector::unit(self.ambient + k, &self.field));
        let rem = self.space.reduce(&aug);
        let lead = rem.leading().unwrap().0;
        if lead >= self.ambient {
            let mut d = vec![Cyclo::zero(&self.field); k];
            let scale = rem.get(self.ambient + k).unwrap().inv().unwrap();
            for (i, c) in rem.iter() {
                let j = i - self.ambient;
                if j < k {
                    d[j] = -&(c * &scale);
                }
            }
            return Some(d);
        }
        self.space.push_reduced(rem);
        self.count += 1;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Arc<CycloField> {
        CycloField::new(4).unwrap()
    }

    fn v(f: &Arc<CycloField>, xs: &[i64]) -> Vector {
        Vector::from_dense(&xs.iter().map(|&x| Cyclo::from_int(f, x)).collect::<Vec<_>>())
    }

    #[test]
    fn subspace_rank_and_membership() {
        let f = k();
        let mut s = Subspace::new();
        assert!(s.insert(v(&f, &[1, 2, 0])));
        assert!(s.insert(v(&f, &[0, 1, 1])));
        assert!(!s.insert(v(&f, &[2, 5, 1])));
        assert!(s.contains(&v(&f, &[1, 3, 1])));
        assert!(!s.contains(&v(&f, &[0, 0, 1])));
        let c = s.coordinates(&v(&f, &[2, 5, 1])).unwrap();
        let back = s.basis().iter().enumerate().fold(Vector::zero(), |acc, (r, b)| {
            acc.axpy(c.get(r).cloned().as_ref().unwrap_or(&Cyclo::zero(&f)), b)
        });
        assert_eq!(back, v(&f, &[2, 5, 1]));
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = k();
        let rows = vec![v(&f, &[1, 1]), v(&f, &[2, 2]), v(&f, &[0, 0])];
        let ker = left_kernel(&rows, 2, &f);
        assert_eq!(ker.len(), 2);
        for x in &ker {
            let mut acc = Vector::zero();
            for (i, c) in x.iter() {
                acc = acc.axpy(c, &rows[*i]);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn dependency_detection() {
        let f = k();
        let mut t = DependencyTracker::new(2, &f);
        assert!(t.push(&v(&f, &[1, 0])).is_none());
        assert!(t.push(&v(&f, &[1, 1])).is_none());
        let d = t.push(&v(&f, &[3, 5])).unwrap();
        assert_eq!(d, vec![Cyclo::from_int(&f, -2), Cyclo::from_int(&f, 5)]);
    }
}
