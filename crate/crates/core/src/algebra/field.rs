use crate::error::{Error, Result};

/// Arithmetic context for the prime field F_p.
///
/// Elements are plain `u64` residues in `[0, p)`; the context supplies the
/// modulus. Products fit in `u64` because supported primes stay below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 {
            return Err(Error::InvalidRing(format!("prime must exceed 2, got {p}")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidRing(format!(
                "prime {p} too large (must be < 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer to its residue.
    pub fn reduce_i64(&self, a: i64) -> u64 {
        let p = self.p as i64;
        let r = a.rem_euclid(p);
        r as u64
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(1000003).is_ok());
    }

    #[test]
    fn reduce_signed() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.reduce_i64(-1), 32002);
        assert_eq!(f.reduce_i64(32003), 0);
        assert_eq!(f.reduce_i64(-32003), 0);
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u64..32003, b in 0u64..32003, c in 0u64..32003) {
            let f = PrimeField::new(32003).unwrap();
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }
}
