use crate::algebra::{RingConfig, Variable};
use crate::error::{Error, Result};

/// ℤⁿ-multidegree: one non-negative entry per column.
pub type Multidegree = Vec<u32>;

/// A monomial as an exponent vector indexed by ring position (row-major).
///
/// The derived `Ord` is lexicographic on the exponent vector, which is exactly
/// the default row-major lex term order; it doubles as the canonical storage
/// order for polynomial terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn one(ring: &RingConfig) -> Self {
        Monomial {
            exps: vec![0; ring.var_count()],
        }
    }

    pub fn from_exps(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    pub fn var(ring: &RingConfig, v: Variable) -> Result<Self> {
        let mut m = Self::one(ring);
        m.exps[ring.position(v)?] = 1;
        Ok(m)
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn exp(&self, pos: usize) -> u8 {
        self.exps[pos]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Positions with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn multidegree(&self, ring: &RingConfig) -> Multidegree {
        let mut d = vec![0u32; ring.cols()];
        for (pos, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                d[ring.col_of(pos) - 1] += e as u32;
            }
        }
        d
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .ok_or_else(|| Error::Internal("monomial exponent overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Variables of the monomial with multiplicity, as (Variable, exponent).
    pub fn factors<'r>(
        &'r self,
        ring: &'r RingConfig,
    ) -> impl Iterator<Item = (Variable, u8)> + 'r {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(move |(pos, &e)| (ring.var_at(pos), e))
    }

    pub fn render(&self, ring: &RingConfig) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.factors(ring)
            .map(|(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
