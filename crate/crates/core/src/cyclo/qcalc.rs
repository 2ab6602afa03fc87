use super::Cyclo;

/// `(s)_q = 1 + q + ... + q^(s-1)`.
pub fn q_int(s: u32, q: &Cyclo) -> Cyclo {
    let mut acc = Cyclo::zero(q.field());
    let mut p = Cyclo::one(q.field());
    for _ in 0..s {
        acc += &p;
        p = &p * q;
    }
    acc
}

/// `(s)_q! = (1)_q (2)_q ... (s)_q`.
pub fn q_factorial(s: u32, q: &Cyclo) -> Cyclo {
    (1..=s).fold(Cyclo::one(q.field()), |acc, i| acc * q_int(i, q))
}

/// Gaussian binomial via the recursion
/// `[s, i] = [s-1, i-1] + q^i [s-1, i]`, which never divides.
pub fn q_binomial(s: u32, i: u32, q: &Cyclo) -> Cyclo {
    if i > s {
        return Cyclo::zero(q.field());
    }
    let field = q.field();
    let mut row = vec![Cyclo::one(field)];
    for t in 1..=s {
        let mut next = Vec::with_capacity(t as usize + 1);
        for k in 0..=t {
            let left = if k == 0 {
                Cyclo::zero(field)
            } else {
                row[k as usize - 1].clone()
            };
            let right = if k == t {
                Cyclo::zero(field)
            } else {
                &q.pow_u(k as u64) * &row[k as usize]
            };
            next.push(left + right);
        }
        row = next;
    }
    row[i as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloField;

    #[test]
    fn integers_at_q_one() {
        let k = CycloField::new(1).unwrap();
        let one = Cyclo::one(&k);
        assert_eq!(q_int(5, &one), Cyclo::from_int(&k, 5));
        assert_eq!(q_factorial(4, &one), Cyclo::from_int(&k, 24));
        assert_eq!(q_binomial(6, 2, &one), Cyclo::from_int(&k, 15));
    }

    #[test]
    fn vanishes_at_order() {
        let k = CycloField::new(5).unwrap();
        let q = Cyclo::zeta_pow(&k, 2);
        assert!(q_int(5, &q).is_zero());
        assert!(!q_int(4, &q).is_zero());
        assert!(q_factorial(5, &q).is_zero());
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        let k = CycloField::new(7).unwrap();
        let q = Cyclo::zeta_pow(&k, 1);
        for s in 0..7u32 {
            for i in 0..=s {
                let lhs = q_binomial(s, i, &q) * q_factorial(i, &q) * q_factorial(s - i, &q);
                assert_eq!(lhs, q_factorial(s, &q));
            }
        }
    }
}
