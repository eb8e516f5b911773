use std::collections::HashMap;

use crate::algebra::{Monomial, Multidegree, PrimeField, RingConfig, TermOrder};

/// Sparse multivariate polynomial over F_p.
///
/// Terms are stored sorted descending under the canonical row-major lex order
/// (the derived `Ord` of [`Monomial`]); coefficients are nonzero residues.
/// Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(ring: &RingConfig) -> Self {
        Polynomial {
            terms: vec![(Monomial::one(ring), 1)],
        }
    }

    pub fn monomial(m: Monomial, c: u64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (monomial, coefficient) pairs: collects like
    /// terms, reduces mod p, drops zeros, sorts canonically.
    pub fn from_terms(field: PrimeField, pairs: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in pairs {
            let c = c % field.p();
            if c == 0 {
                continue;
            }
            let e = map.entry(m).or_insert(0);
            *e = field.add(*e, c);
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    /// Builds from pairs already known to be combined and nonzero.
    pub(crate) fn from_distinct_terms(mut terms: Vec<(Monomial, u64)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under an arbitrary order.
    pub fn leading_term<'p>(&'p self, order: &TermOrder) -> Option<(&'p Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, *c))
    }

    pub fn add(&self, other: &Polynomial, field: PrimeField) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: PrimeField) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, field: PrimeField) -> Polynomial {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: u64, field: PrimeField) -> Polynomial {
        let c = c % field.p();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(*k, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), *c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, field: PrimeField) -> Polynomial {
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(*ca, *cb);
                let e = map.entry(m).or_insert(0);
                *e = field.add(*e, c);
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    /// Substitutes each variable position by a polynomial.
    pub fn substitute(
        &self,
        ring: &RingConfig,
        image: impl Fn(usize) -> Polynomial,
        field: PrimeField,
    ) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::monomial(Monomial::one(ring), *c);
            for (pos, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&image(pos), field);
                }
            }
            acc = acc.add(&term, field);
        }
        acc
    }

    /// Multidegree shared by all terms, if the polynomial is ℤⁿ-homogeneous.
    pub fn homogeneous_multidegree(&self, ring: &RingConfig) -> Option<Multidegree> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.multidegree(ring);
        for (m, _) in it {
            if m.multidegree(ring) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Makes the leading coefficient 1 under the given order.
    pub fn monic(&self, order: &TermOrder, field: PrimeField) -> Polynomial {
        match self.leading_term(order) {
            None => Polynomial::zero(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(field.inv(c), field),
        }
    }

    pub fn render(&self, ring: &RingConfig) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&c.to_string());
            } else if *c == 1 {
                out.push_str(&m.render(ring));
            } else {
                out.push_str(&format!("{}*{}", c, m.render(ring)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Variable;

    fn ring() -> RingConfig {
        RingConfig::uniform(2, 2, 32003).unwrap()
    }

    fn var(r: &RingConfig, i: usize, j: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(r, Variable::new(i, j)).unwrap(), 1)
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let f = r.field();
        let x11 = var(&r, 1, 1);
        let x22 = var(&r, 2, 2);
        let det = x11.mul(&x22, f).sub(&var(&r, 2, 1).mul(&var(&r, 1, 2), f), f);
        assert_eq!(det.num_terms(), 2);
        assert!(det.sub(&det, f).is_zero());
        assert_eq!(det.homogeneous_multidegree(&r), Some(vec![1, 1]));
        let inhom = det.add(&x11, f);
        assert_eq!(inhom.homogeneous_multidegree(&r), None);
    }

    #[test]
    fn leading_term_by_order() {
        let r = ring();
        let f = r.field();
        let det = var(&r, 1, 1).mul(&var(&r, 2, 2), f).sub(
            &var(&r, 2, 1).mul(&var(&r, 1, 2), f),
            f,
        );
        let lex_lt = det.leading_term(&TermOrder::lex()).unwrap();
        assert_eq!(lex_lt.0.render(&r), "x[1,1]*x[2,2]");
        let drl_lt = det.leading_term(&TermOrder::degrevlex()).unwrap();
        assert_eq!(drl_lt.0.render(&r), "x[1,2]*x[2,1]");
    }
}
