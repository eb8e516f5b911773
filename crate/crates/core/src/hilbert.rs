//! K-polynomials (multigraded Hilbert numerators), polarization, Alexander
//! duality, the polarize-then-dualize bijection with its inverse, and the
//! numerator identity linking a radical Borel-fixed ideal to its bounded
//! preimage.

use std::collections::BTreeMap;

use crate::algebra::{Monomial, RingConfig, TermOrder, Variable};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal_with, EngineLimits, Ideal, MonomialIdeal};

/// Integer polynomial in Z_1..Z_n, the numerator of the multigraded Hilbert
/// series over prod (1 - Z_i)^{m_i}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl KPolynomial {
    pub fn zero(n: usize) -> Self {
        KPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; n], c);
        }
        KPolynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exps: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &KPolynomial) -> KPolynomial {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn sub(&self, other: &KPolynomial) -> KPolynomial {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> KPolynomial {
        if c == 0 {
            return KPolynomial::zero(self.n);
        }
        KPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, &k)| (e.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &KPolynomial) -> KPolynomial {
        debug_assert_eq!(self.n, other.n);
        let mut out = KPolynomial::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(exps).or_insert(0);
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    /// Multiplication by the monomial Z^exps.
    pub fn shift(&self, exps: &[u32]) -> KPolynomial {
        KPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c))
                .collect(),
        }
    }

    /// Exact substitution Z_i -> 1 - Z_i via binomial expansion.
    pub fn substitute_one_minus(&self) -> KPolynomial {
        let mut out = KPolynomial::zero(self.n);
        for (exps, &c) in &self.terms {
            // expand prod_i (1 - Z_i)^{a_i}
            let mut partial: Vec<(Vec<u32>, i64)> = vec![(vec![0; self.n], c)];
            for (i, &a) in exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * (a as usize + 1));
                for (e, k) in &partial {
                    for b in 0..=a {
                        let mut e2 = e.clone();
                        e2[i] += b;
                        let sign = if b % 2 == 0 { 1 } else { -1 };
                        next.push((e2, k * sign * binomial_i64(a, b)));
                    }
                }
                partial = next;
            }
            for (e, k) in partial {
                let entry = out.terms.entry(e).or_insert(0);
                *entry += k;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    /// Evaluation at an integer point.
    pub fn eval(&self, point: &[i64]) -> i64 {
        self.terms
            .iter()
            .map(|(e, &c)| {
                c * e
                    .iter()
                    .zip(point)
                    .map(|(&a, &z)| z.pow(a))
                    .product::<i64>()
            })
            .sum()
    }
}

fn binomial_i64(n: u32, k: u32) -> i64 {
    let mut acc = 1i64;
    for i in 0..k as i64 {
        acc = acc * (n as i64 - i) / (i + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// pivot recursion on generic monomial generators

/// K-polynomial of S/J from monomial generators over variables with the given
/// column degrees: K_{S/J} = K_{S/(J+(x))} + Z^{deg x} K_{S/(J:x)}, pivoting
/// on a variable occurring in a maximal number of generators.
fn k_from_generators(gens: Vec<Vec<u32>>, var_col: &[usize], n: usize) -> KPolynomial {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return KPolynomial::constant(n, 1);
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return KPolynomial::zero(n);
    }
    // pivot: a variable with a maximal number of occurrences among the
    // generators of total degree >= 2 (ties to the smallest position)
    let mut counts = vec![0usize; var_col.len()];
    let mut candidate = None;
    for g in &gens {
        let deg: u32 = g.iter().sum();
        for (v, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
                if deg >= 2 {
                    candidate = Some(());
                }
            }
        }
    }
    if candidate.is_none() {
        // every generator is a single variable: complete intersection
        let mut acc = KPolynomial::constant(n, 1);
        for g in &gens {
            let v = g.iter().position(|&e| e > 0).expect("nonunit generator");
            let mut lin = KPolynomial::constant(n, 1);
            let mut z = vec![0u32; n];
            z[var_col[v] - 1] = 1;
            lin.insert(z, -1);
            acc = acc.mul(&lin);
        }
        return acc;
    }
    let pivot = {
        let mut best: Option<usize> = None;
        for g in &gens {
            let deg: u32 = g.iter().sum();
            if deg < 2 {
                continue;
            }
            for (v, &e) in g.iter().enumerate() {
                if e > 0 && best.is_none_or(|b| counts[v] > counts[b]) {
                    best = Some(v);
                }
            }
        }
        best.expect("candidate exists")
    };

    // J + (x_pivot): the pivot variable plus the generators it misses
    let mut plus: Vec<Vec<u32>> = gens
        .iter()
        .filter(|g| g[pivot] == 0)
        .cloned()
        .collect();
    let mut unit = vec![0u32; var_col.len()];
    unit[pivot] = 1;
    plus.push(unit);

    // J : x_pivot
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            if h[pivot] > 0 {
                h[pivot] -= 1;
            }
            h
        })
        .collect();

    let mut z = vec![0u32; n];
    z[var_col[pivot] - 1] = 1;
    k_from_generators(plus, var_col, n)
        .add(&k_from_generators(colon, var_col, n).shift(&z))
}

fn minimalize(gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut sorted = gens;
    sorted.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
    sorted.dedup();
    let mut minimal: Vec<Vec<u32>> = Vec::new();
    for g in sorted {
        if !minimal
            .iter()
            .any(|m| m.iter().zip(&g).all(|(a, b)| a <= b))
        {
            minimal.push(g);
        }
    }
    minimal
}

/// K-polynomial of S/J for a monomial ideal J in S.
pub fn k_polynomial_monomial(j: &MonomialIdeal) -> KPolynomial {
    let ring = j.ring();
    let var_col: Vec<usize> = (0..ring.var_count()).map(|p| ring.col_of(p)).collect();
    let gens: Vec<Vec<u32>> = j
        .gens()
        .iter()
        .map(|m| m.exps().iter().map(|&e| e as u32).collect())
        .collect();
    k_from_generators(gens, &var_col, ring.cols())
}

/// K-polynomial of S/I via any initial ideal (order-independent).
pub fn k_polynomial(ideal: &Ideal, order: &TermOrder) -> Result<KPolynomial> {
    k_polynomial_with(ideal, order, &EngineLimits::none())
}

pub fn k_polynomial_with(
    ideal: &Ideal,
    order: &TermOrder,
    limits: &EngineLimits,
) -> Result<KPolynomial> {
    Ok(k_polynomial_monomial(&initial_ideal_with(
        ideal, order, limits,
    )?))
}

// ---------------------------------------------------------------------------
// bounded monomial ideals in T = K[y_1..y_n]

/// Monomial ideal of T = K[y_1..y_n] whose minimal generators have exponent
/// vectors bounded above by the block sizes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedMonomialIdeal {
    bounds: Vec<u32>,
    gens: Vec<Vec<u32>>,
}

impl BoundedMonomialIdeal {
    pub fn new(bounds: Vec<u32>, gens: Vec<Vec<u32>>) -> Result<Self> {
        for g in &gens {
            if g.len() != bounds.len() {
                return Err(Error::InvalidParameter(format!(
                    "exponent vector {g:?} has wrong length for bounds {bounds:?}"
                )));
            }
            if g.iter().zip(&bounds).any(|(e, b)| e > b) {
                return Err(Error::BoundViolation(format!(
                    "generator {g:?} exceeds the bounds {bounds:?}"
                )));
            }
        }
        Ok(BoundedMonomialIdeal {
            bounds,
            gens: minimalize(gens),
        })
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn n(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// K-polynomial of T/I.
    pub fn k_of_quotient(&self) -> KPolynomial {
        let n = self.n();
        let var_col: Vec<usize> = (1..=n).collect();
        k_from_generators(self.gens.clone(), &var_col, n)
    }

    /// K_I := 1 - K_{T/I}, the numerator attached to the ideal itself.
    pub fn k_of_ideal(&self) -> KPolynomial {
        KPolynomial::constant(self.n(), 1).sub(&self.k_of_quotient())
    }

    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                if g.iter().all(|&e| e == 0) {
                    return "1".to_string();
                }
                g.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("y{}", i + 1)
                        } else {
                            format!("y{}^{}", i + 1, e)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Polarization into S: y_j^{a_j} becomes `x[1,j]` `x[2,j]` ... `x[a_j,j]`.
pub fn polarize(ideal: &BoundedMonomialIdeal, ring: &RingConfig) -> Result<MonomialIdeal> {
    if ideal.n() != ring.cols() {
        return Err(Error::InvalidParameter(format!(
            "ideal lives in {} columns, ring has {}",
            ideal.n(),
            ring.cols()
        )));
    }
    for (j, (&b, &m)) in ideal
        .bounds()
        .iter()
        .zip(ring.blocks())
        .enumerate()
    {
        if b as usize > m {
            return Err(Error::BoundViolation(format!(
                "bound {b} for column {} exceeds block size {m}",
                j + 1
            )));
        }
    }
    let mut gens = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        let mut exps = vec![0u8; ring.var_count()];
        for (j, &a) in g.iter().enumerate() {
            for row in 1..=a as usize {
                exps[ring.position(Variable::new(row, j + 1))?] = 1;
            }
        }
        gens.push(Monomial::from_exps(exps));
    }
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

/// Alexander dual of a squarefree monomial ideal: the intersection of the
/// variable primes of the generator supports, i.e. the ideal of minimal
/// transversals.
pub fn alexander_dual(j: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !crate::multigrading::is_radical_monomial(j) {
        return Err(Error::InvalidParameter(
            "Alexander dual requires a squarefree monomial ideal".into(),
        ));
    }
    let ring = j.ring().clone();
    // start from the unit ideal and intersect one support prime at a time
    let mut acc = MonomialIdeal::new(ring.clone(), vec![Monomial::one(&ring)]);
    for u in j.gens() {
        let prime_gens: Vec<Monomial> = u
            .support()
            .map(|pos| {
                let mut exps = vec![0u8; ring.var_count()];
                exps[pos] = 1;
                Monomial::from_exps(exps)
            })
            .collect();
        let prime = MonomialIdeal::new(ring.clone(), prime_gens);
        acc = acc.intersection(&prime);
    }
    Ok(acc)
}

/// Inverse of polarization on Borel-prefix squarefree monomials: a block-j
/// support {`x[1,j]`, ..., `x[a,j]`} maps back to y_j^a; anything else is
/// rejected.
pub fn depolarize(j: &MonomialIdeal) -> Result<BoundedMonomialIdeal> {
    let ring = j.ring();
    let mut gens = Vec::with_capacity(j.gens().len());
    for u in j.gens() {
        let mut exps = vec![0u32; ring.cols()];
        for (v, e) in u.factors(ring) {
            if e > 1 {
                return Err(Error::NotDepolarizable(format!(
                    "{} is not squarefree",
                    u.render(ring)
                )));
            }
            exps[v.col - 1] += 1;
        }
        // supports must be row prefixes 1..a within each column
        for (j_col, &a) in exps.iter().enumerate() {
            for row in 1..=a as usize {
                let pos = ring.position(Variable::new(row, j_col + 1))?;
                if u.exp(pos) == 0 {
                    return Err(Error::NotDepolarizable(format!(
                        "{} does not use rows 1..{} of column {}",
                        u.render(ring),
                        a,
                        j_col + 1
                    )));
                }
            }
        }
        gens.push(exps);
    }
    let bounds: Vec<u32> = ring.blocks().iter().map(|&m| m as u32).collect();
    BoundedMonomialIdeal::new(bounds, gens)
}

/// The bijection from bounded monomial ideals of T onto radical Borel-fixed
/// ideals of S: polarize, then take the Alexander dual.
pub fn psi(ideal: &BoundedMonomialIdeal, ring: &RingConfig) -> Result<MonomialIdeal> {
    alexander_dual(&polarize(ideal, ring)?)
}

/// Inverse bijection: Alexander dual, then depolarize. The input must be
/// radical and Borel-fixed.
pub fn psi_inverse(j: &MonomialIdeal) -> Result<BoundedMonomialIdeal> {
    if !crate::multigrading::is_radical_monomial(j) {
        return Err(Error::NotRadicalBorelFixed("not radical".into()));
    }
    if !crate::multigrading::is_borel_fixed(j)? {
        return Err(Error::NotRadicalBorelFixed("not Borel-fixed".into()));
    }
    depolarize(&alexander_dual(j)?)
}

/// Numerator identity: K_{S/J}(1-Z) equals K_I(Z) = 1 - K_{T/I}(Z) exactly
/// when J is the image of I under the bijection.
pub fn verify_numerator_identity(ideal: &BoundedMonomialIdeal, j: &MonomialIdeal) -> bool {
    let left = k_polynomial_monomial(j).substitute_one_minus();
    let right = ideal.k_of_ideal();
    left == right
}

/// For variable-disjoint ideals, checks K_{S/(I+J)} = K_{S/I} * K_{S/J}.
pub fn k_multiplicativity_check(a: &Ideal, b: &Ideal, order: &TermOrder) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::InvalidParameter(
            "ideals live in different rings".into(),
        ));
    }
    let used = |ideal: &Ideal| -> std::collections::BTreeSet<usize> {
        ideal
            .gens()
            .iter()
            .flat_map(|g| {
                g.terms()
                    .iter()
                    .flat_map(|(m, _)| m.support().collect::<Vec<_>>())
            })
            .collect()
    };
    let sa = used(a);
    let sb = used(b);
    if let Some(&shared) = sa.intersection(&sb).next() {
        return Err(Error::DisjointnessViolation(format!(
            "both ideals use {}",
            a.ring().var_at(shared)
        )));
    }
    let sum = Ideal::new(
        a.ring().clone(),
        a.gens().iter().chain(b.gens()).cloned().collect(),
    );
    let k_sum = k_polynomial(&sum, order)?;
    let k_prod = k_polynomial(a, order)?.mul(&k_polynomial(b, order)?);
    Ok(k_sum == k_prod)
}
