use std::cmp::Ordering;

use crate::algebra::{Monomial, RingConfig, Variable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            other => Err(Error::InvalidParameter(format!(
                "unknown order {other:?} (expected lex or degrevlex)"
            ))),
        }
    }
}

/// A block-respecting monomial order.
///
/// The variable priority is a total order on variables; within every column
/// the rows must appear top-down, i.e. `x[1,j]` > `x[2,j]` > ... . The default
/// priority is row-major (`x[1,1]` > `x[1,2]` > ... > `x[2,1]` > ...), identical to
/// the flat position order of [`RingConfig`], so `perm` is `None` in the
/// common case.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermOrder {
    kind: OrderKind,
    // priority rank -> flat position; None means identity (row-major)
    perm: Option<Vec<usize>>,
}

impl TermOrder {
    pub fn row_major(kind: OrderKind) -> Self {
        TermOrder { kind, perm: None }
    }

    pub fn lex() -> Self {
        Self::row_major(OrderKind::Lex)
    }

    pub fn degrevlex() -> Self {
        Self::row_major(OrderKind::DegRevLex)
    }

    /// Order with an explicit variable priority (most significant first).
    pub fn with_priority(ring: &RingConfig, kind: OrderKind, priority: &[Variable]) -> Result<Self> {
        if priority.len() != ring.var_count() {
            return Err(Error::InvalidParameter(format!(
                "priority lists {} variables, ring has {}",
                priority.len(),
                ring.var_count()
            )));
        }
        let mut perm = Vec::with_capacity(priority.len());
        let mut seen = vec![false; ring.var_count()];
        for &v in priority {
            let pos = ring.position(v)?;
            if seen[pos] {
                return Err(Error::InvalidParameter(format!("duplicate variable {v}")));
            }
            seen[pos] = true;
            perm.push(pos);
        }
        // within-column constraint: row i must rank above row i+1
        let mut rank = vec![0usize; ring.var_count()];
        for (r, &pos) in perm.iter().enumerate() {
            rank[pos] = r;
        }
        for col in 1..=ring.cols() {
            let ps = ring.column_positions(col);
            for w in ps.windows(2) {
                if rank[w[0]] > rank[w[1]] {
                    return Err(Error::InvalidParameter(format!(
                        "priority violates x[1,{col}] > x[2,{col}] > ... within column {col}"
                    )));
                }
            }
        }
        let identity = perm.iter().enumerate().all(|(i, &p)| i == p);
        Ok(TermOrder {
            kind,
            perm: if identity { None } else { Some(perm) },
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Compares monomials; `Greater` means `a` is the larger term.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match (&self.perm, self.kind) {
            (None, OrderKind::Lex) => a.exps().cmp(b.exps()),
            (None, OrderKind::DegRevLex) => {
                let da = a.total_degree();
                let db = b.total_degree();
                da.cmp(&db).then_with(|| {
                    for (&ea, &eb) in a.exps().iter().zip(b.exps()).rev() {
                        if ea != eb {
                            // smaller exponent in the least significant slot wins
                            return eb.cmp(&ea);
                        }
                    }
                    Ordering::Equal
                })
            }
            (Some(perm), OrderKind::Lex) => {
                for &pos in perm {
                    let c = a.exp(pos).cmp(&b.exp(pos));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }
            (Some(perm), OrderKind::DegRevLex) => {
                let da = a.total_degree();
                let db = b.total_degree();
                da.cmp(&db).then_with(|| {
                    for &pos in perm.iter().rev() {
                        let (ea, eb) = (a.exp(pos), b.exp(pos));
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Variable;
    use proptest::prelude::*;

    fn ring(rows: usize, cols: usize) -> RingConfig {
        RingConfig::uniform(cols, rows, 32003).unwrap()
    }

    fn mono(ring: &RingConfig, vars: &[(usize, usize)]) -> Monomial {
        let mut m = Monomial::one(ring);
        for &(i, j) in vars {
            m = m
                .mul(&Monomial::var(ring, Variable::new(i, j)).unwrap());
        }
        m
    }

    #[test]
    fn row_major_priority() {
        let r = ring(2, 2);
        let x11 = mono(&r, &[(1, 1)]);
        let x12 = mono(&r, &[(1, 2)]);
        let x21 = mono(&r, &[(2, 1)]);
        for order in [TermOrder::lex(), TermOrder::degrevlex()] {
            assert_eq!(order.compare(&x11, &x12), Ordering::Greater);
            assert_eq!(order.compare(&x12, &x21), Ordering::Greater);
            assert_eq!(order.compare(&x11, &x11), Ordering::Equal);
            // within-column constraint
            assert_eq!(order.compare(&x11, &x21), Ordering::Greater);
        }
    }

    #[test]
    fn determinant_leading_terms() {
        // the 2x2 determinant has terms x11*x22 and x21*x12
        let r = ring(2, 2);
        let diag = mono(&r, &[(1, 1), (2, 2)]);
        let anti = mono(&r, &[(2, 1), (1, 2)]);
        assert_eq!(TermOrder::lex().compare(&diag, &anti), Ordering::Greater);
        // degrevlex prefers the antidiagonal
        assert_eq!(
            TermOrder::degrevlex().compare(&diag, &anti),
            Ordering::Less
        );
    }

    #[test]
    fn custom_priority_validation() {
        let r = ring(2, 2);
        // column-major priority is fine (rows still descend within columns)
        let colmajor = [
            Variable::new(1, 1),
            Variable::new(2, 1),
            Variable::new(1, 2),
            Variable::new(2, 2),
        ];
        assert!(TermOrder::with_priority(&r, OrderKind::Lex, &colmajor).is_ok());
        // swapping rows within a column violates the constraint
        let bad = [
            Variable::new(2, 1),
            Variable::new(1, 1),
            Variable::new(1, 2),
            Variable::new(2, 2),
        ];
        assert!(TermOrder::with_priority(&r, OrderKind::Lex, &bad).is_err());
    }

    proptest! {
        #[test]
        fn multiplicative_and_total(
            a in proptest::collection::vec(0u8..4, 6),
            b in proptest::collection::vec(0u8..4, 6),
            c in proptest::collection::vec(0u8..3, 6),
        ) {
            let r = ring(2, 3);
            let ma = Monomial::from_exps(a);
            let mb = Monomial::from_exps(b);
            let mc = Monomial::from_exps(c);
            for order in [TermOrder::lex(), TermOrder::degrevlex()] {
                let base = order.compare(&ma, &mb);
                prop_assert_eq!(order.compare(&ma.mul(&mc), &mb.mul(&mc)), base);
                // 1 is minimal
                let one = Monomial::one(&r);
                prop_assert_ne!(order.compare(&ma.mul(&mc), &one), Ordering::Less);
            }
        }
    }
}
