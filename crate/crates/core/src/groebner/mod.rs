//! Buchberger's algorithm, normal forms, initial ideals, ideal membership,
//! and graded-component bases.
//!
//! The engine keeps S-pairs pruned with the Gebauer-Moeller criteria
//! (product and chain) and processes them in the normal strategy: lowest lcm
//! total degree first, ties broken by the term order on the lcms. Reduction
//! picks the first divisor in the working basis sorted by leading term, so
//! runs are reproducible bit for bit.

mod monomial_ideal;

pub use monomial_ideal::MonomialIdeal;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use crate::algebra::linalg::MatFp;
use crate::algebra::{Monomial, Polynomial, PrimeField, RingConfig, TermOrder};
use crate::error::{Error, Result};

/// Wall-clock budget for engine runs; `None` means unbounded.
#[derive(Clone, Copy, Debug, Default)]
pub struct EngineLimits {
    pub deadline: Option<Instant>,
}

impl EngineLimits {
    pub fn none() -> Self {
        EngineLimits { deadline: None }
    }

    pub fn with_deadline(deadline: Instant) -> Self {
        EngineLimits {
            deadline: Some(deadline),
        }
    }

    fn check(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::Timeout);
            }
        }
        Ok(())
    }
}

/// A ℤⁿ-graded ideal: generators plus a cache of reduced Groebner bases
/// keyed by term order.
#[derive(Debug)]
pub struct Ideal {
    ring: RingConfig,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<TermOrder, std::sync::Arc<Vec<Polynomial>>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: RingConfig, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring,
            gens,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &RingConfig {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Errors unless every generator is ℤⁿ-homogeneous.
    pub fn assert_homogeneous(&self) -> Result<()> {
        for (k, g) in self.gens.iter().enumerate() {
            if g.homogeneous_multidegree(&self.ring).is_none() {
                return Err(Error::DegreeMismatch(format!(
                    "generator {} is not ℤⁿ-homogeneous: {}",
                    k + 1,
                    g.render(&self.ring)
                )));
            }
        }
        Ok(())
    }

    pub fn groebner_basis(&self, order: &TermOrder) -> std::sync::Arc<Vec<Polynomial>> {
        self.groebner_basis_with(order, &EngineLimits::none())
            .expect("unbounded run cannot time out")
    }

    pub fn groebner_basis_with(
        &self,
        order: &TermOrder,
        limits: &EngineLimits,
    ) -> Result<std::sync::Arc<Vec<Polynomial>>> {
        if let Some(found) = self.cache.lock().unwrap().get(order) {
            return Ok(found.clone());
        }
        let basis = std::sync::Arc::new(buchberger_with(&self.ring, &self.gens, order, limits)?);
        self.cache
            .lock()
            .unwrap()
            .insert(order.clone(), basis.clone());
        Ok(basis)
    }
}

/// Remainder of `f` on division by `basis` (full normal form): no term of the
/// result is divisible by any leading term of `basis`. The divisor is the
/// first match in the given list order.
pub fn normal_form(
    ring: &RingConfig,
    f: &Polynomial,
    basis: &[Polynomial],
    order: &TermOrder,
) -> Polynomial {
    Reducer::new(ring, order, basis.iter()).normal_form(f)
}

/// True iff the normal form of `f` against the reduced basis of `ideal`
/// vanishes.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal, order: &TermOrder) -> bool {
    let gb = ideal.groebner_basis(order);
    normal_form(ideal.ring(), f, &gb, order).is_zero()
}

/// Minimal monomial generators of the leading-term ideal of `ideal`.
pub fn initial_ideal(ideal: &Ideal, order: &TermOrder) -> MonomialIdeal {
    initial_ideal_with(ideal, order, &EngineLimits::none()).expect("unbounded")
}

pub fn initial_ideal_with(
    ideal: &Ideal,
    order: &TermOrder,
    limits: &EngineLimits,
) -> Result<MonomialIdeal> {
    let gb = ideal.groebner_basis_with(order, limits)?;
    let gens = gb
        .iter()
        .map(|g| g.leading_term(order).expect("basis elements nonzero").0.clone())
        .collect();
    Ok(MonomialIdeal::new(ideal.ring().clone(), gens))
}

/// Reduced Groebner basis of the given generators.
pub fn buchberger(ring: &RingConfig, gens: &[Polynomial], order: &TermOrder) -> Vec<Polynomial> {
    buchberger_with(ring, gens, order, &EngineLimits::none()).expect("unbounded")
}

pub fn buchberger_with(
    ring: &RingConfig,
    gens: &[Polynomial],
    order: &TermOrder,
    limits: &EngineLimits,
) -> Result<Vec<Polynomial>> {
    let mut engine = Engine::new(ring, order, *limits);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let terms = engine.sort_terms(g);
        let reduced = engine.reduce(terms)?;
        if !reduced.is_empty() {
            engine.add_element(reduced);
        }
    }
    engine.run()?;
    Ok(engine.finish())
}

// ---------------------------------------------------------------------------
// engine internals

type Terms = Vec<(Monomial, u64)>; // sorted strictly descending under the active order

struct Elem {
    lt: Monomial,
    terms: Terms, // monic: coefficient of lt is 1
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
}

struct Engine<'a> {
    order: &'a TermOrder,
    field: PrimeField,
    limits: EngineLimits,
    elems: Vec<Elem>,
    // indices of elements sorted ascending by leading term (reduction scan order)
    by_lt: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn new(ring: &RingConfig, order: &'a TermOrder, limits: EngineLimits) -> Self {
        Engine {
            order,
            field: ring.field(),
            limits,
            elems: Vec::new(),
            by_lt: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn sort_terms(&self, f: &Polynomial) -> Terms {
        let mut terms: Terms = f.terms().to_vec();
        terms.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        terms
    }

    /// Full normal form of descending-sorted terms against the current basis.
    fn reduce(&self, mut work: Terms) -> Result<Terms> {
        let mut remainder: Terms = Vec::new();
        let mut steps = 0usize;
        while let Some((lt, lc)) = work.first().cloned() {
            steps += 1;
            if steps.is_multiple_of(256) {
                self.limits.check()?;
            }
            let divisor = self
                .by_lt
                .iter()
                .map(|&k| &self.elems[k])
                .find(|e| e.lt.divides(&lt));
            match divisor {
                Some(e) => {
                    let quot = e.lt.divide_into(&lt);
                    work = sub_scaled(self.field, self.order, &work, &e.terms, &quot, lc);
                }
                None => {
                    remainder.push((lt, lc));
                    work.remove(0);
                }
            }
        }
        Ok(remainder)
    }

    fn add_element(&mut self, terms: Terms) {
        let field = self.field;
        let lc = terms[0].1;
        let terms: Terms = if lc == 1 {
            terms
        } else {
            let inv = field.inv(lc);
            terms
                .into_iter()
                .map(|(m, c)| (m, field.mul(c, inv)))
                .collect()
        };
        let lt = terms[0].0.clone();
        let t = self.elems.len();

        // Gebauer-Moeller update of the pair set.
        let cand: Vec<(usize, Monomial)> = (0..t)
            .map(|i| (i, self.elems[i].lt.lcm(&lt)))
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for k in 0..cand.len() {
            let (i, ref lcm_i) = cand[k];
            let coprime = self.elems[i].lt.coprime(&lt);
            let dominated = cand[k + 1..]
                .iter()
                .any(|(_, l)| l.divides(lcm_i))
                || kept.iter().any(|&k2| cand[k2].1.divides(lcm_i));
            if coprime || !dominated {
                kept.push(k);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&k| !self.elems[cand[k].0].lt.coprime(&lt))
            .map(|k| {
                let (i, ref lcm) = cand[k];
                Pair {
                    i,
                    j: t,
                    lcm: lcm.clone(),
                    deg: lcm.total_degree(),
                }
            })
            .collect();
        self.pairs.retain(|pr| {
            !(lt.divides(&pr.lcm)
                && self.elems[pr.i].lt.lcm(&lt) != pr.lcm
                && self.elems[pr.j].lt.lcm(&lt) != pr.lcm)
        });
        self.pairs.extend(new_pairs);

        self.elems.push(Elem { lt, terms });
        let pos = self
            .by_lt
            .binary_search_by(|&k| {
                self.order
                    .compare(&self.elems[k].lt, &self.elems[t].lt)
                    .then(Ordering::Less)
            })
            .unwrap_err();
        self.by_lt.insert(pos, t);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.deg.cmp(&b.deg) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match self.order.compare(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.i, a.j) < (b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.select_pair() {
            self.limits.check()?;
            let spoly = {
                let (ei, ej) = (&self.elems[pair.i], &self.elems[pair.j]);
                let mi = ei.lt.divide_into(&pair.lcm);
                let mj = ej.lt.divide_into(&pair.lcm);
                // both monic: S = mi * ei - mj * ej
                let left: Terms = ei.terms.iter().map(|(m, c)| (m.mul(&mi), *c)).collect();
                sub_scaled(self.field, self.order, &left, &ej.terms, &mj, 1)
            };
            let reduced = self.reduce(spoly)?;
            if !reduced.is_empty() {
                self.add_element(reduced);
            }
        }
        Ok(())
    }

    /// Minimalizes and tail-reduces into the reduced basis, sorted by
    /// descending leading term.
    fn finish(mut self) -> Vec<Polynomial> {
        let mut minimal: Vec<usize> = Vec::new();
        for &k in &self.by_lt {
            if !minimal
                .iter()
                .any(|&m| self.elems[m].lt.divides(&self.elems[k].lt))
            {
                minimal.push(k);
            }
        }
        // tail-reduce each against the others, in ascending lt order
        for idx in 0..minimal.len() {
            let k = minimal[idx];
            let work = self.elems[k].terms.clone();
            let others: Vec<usize> = minimal.iter().copied().filter(|&m| m != k).collect();
            let reduced = reduce_against(self.field, self.order, work, &self.elems, &others);
            self.elems[k].terms = reduced;
        }
        let mut out: Vec<Polynomial> = minimal
            .iter()
            .map(|&k| Polynomial::from_distinct_terms(self.elems[k].terms.clone()))
            .collect();
        out.reverse(); // descending leading term
        out
    }
}

fn reduce_against(
    field: PrimeField,
    order: &TermOrder,
    mut work: Terms,
    elems: &[Elem],
    scan: &[usize],
) -> Terms {
    let mut remainder: Terms = Vec::new();
    while let Some((lt, lc)) = work.first().cloned() {
        let divisor = scan.iter().map(|&k| &elems[k]).find(|e| e.lt.divides(&lt));
        match divisor {
            Some(e) => {
                let quot = e.lt.divide_into(&lt);
                work = sub_scaled(field, order, &work, &e.terms, &quot, lc);
            }
            None => {
                remainder.push((lt, lc));
                work.remove(0);
            }
        }
    }
    remainder
}

/// `f - c * (m * g)`, all term lists sorted descending under `order`.
fn sub_scaled(
    field: PrimeField,
    order: &TermOrder,
    f: &Terms,
    g: &Terms,
    m: &Monomial,
    c: u64,
) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match order.compare(&f[i].0, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, field.neg(field.mul(c, g[j].1))));
                j += 1;
            }
            Ordering::Equal => {
                let coeff = field.sub(f[i].1, field.mul(c, g[j].1));
                if coeff != 0 {
                    out.push((f[i].0.clone(), coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push((g[j].0.mul(m), field.neg(field.mul(c, g[j].1))));
        j += 1;
    }
    out
}

/// Repeated reduction against a fixed basis, preserving the caller's list
/// order for divisor choice.
pub struct Reducer<'a> {
    ring: &'a RingConfig,
    order: &'a TermOrder,
    field: PrimeField,
    elems: Vec<Elem>,
}

impl<'a> Reducer<'a> {
    /// Divisors are scaled monic up front, which leaves the normal form
    /// unchanged while keeping reduction steps coefficient-free.
    pub fn new<'p>(
        ring: &'a RingConfig,
        order: &'a TermOrder,
        basis: impl Iterator<Item = &'p Polynomial>,
    ) -> Self {
        let field = ring.field();
        let elems = basis
            .filter(|g| !g.is_zero())
            .map(|g| {
                let mut terms: Terms = g.terms().to_vec();
                terms.sort_by(|a, b| order.compare(&b.0, &a.0));
                let lc = terms[0].1;
                if lc != 1 {
                    let inv = field.inv(lc);
                    for t in &mut terms {
                        t.1 = field.mul(t.1, inv);
                    }
                }
                Elem {
                    lt: terms[0].0.clone(),
                    terms,
                }
            })
            .collect();
        Reducer {
            ring,
            order,
            field,
            elems,
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut work: Terms = f.terms().to_vec();
        work.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        let scan: Vec<usize> = (0..self.elems.len()).collect();
        let remainder = reduce_against(self.field, self.order, work, &self.elems, &scan);
        Polynomial::from_distinct_terms(remainder)
    }

    pub fn ring(&self) -> &RingConfig {
        self.ring
    }
}

/// Basis of the vector space I_A of ideal elements of squarefree multidegree
/// `A` (a set of columns): enumerates the ∏ m_j monomials of that degree,
/// solves for kernel combinations of their normal forms, and returns an
/// echelonized basis with pairwise distinct leading monomials.
pub fn component_basis(
    ideal: &Ideal,
    cols: &[usize],
    order: &TermOrder,
) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let mut a: Vec<usize> = cols.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.is_empty() {
        return Err(Error::InvalidParameter(
            "component degree must be a nonempty set of columns".into(),
        ));
    }
    if let Some(&bad) = a.iter().find(|&&j| j == 0 || j > ring.cols()) {
        return Err(Error::InvalidParameter(format!(
            "column {bad} out of range for ring with {} columns",
            ring.cols()
        )));
    }

    // all monomials of multidegree sum_{j in A} e_j, in deterministic order
    let mut monomials: Vec<Monomial> = vec![Monomial::one(ring)];
    for &j in &a {
        let mut next = Vec::with_capacity(monomials.len() * ring.block_size(j));
        for m in &monomials {
            for &pos in ring.column_positions(j) {
                let mut exps = m.exps().to_vec();
                exps[pos] = 1;
                next.push(Monomial::from_exps(exps));
            }
        }
        monomials = next;
    }

    let gb = ideal.groebner_basis(order);
    let reducer = Reducer::new(ring, order, gb.iter());
    let nfs: Vec<Polynomial> = monomials
        .iter()
        .map(|m| reducer.normal_form(&Polynomial::monomial(m.clone(), 1)))
        .collect();

    // index the monomials appearing across normal forms
    let mut nf_monomials: Vec<Monomial> = nfs
        .iter()
        .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
        .collect();
    nf_monomials.sort();
    nf_monomials.dedup();
    let index: HashMap<&Monomial, usize> = nf_monomials
        .iter()
        .enumerate()
        .map(|(k, m)| (m, k))
        .collect();

    // kernel of the coefficient map: rows = nf monomials, cols = inputs
    let field = ring.field();
    let mut mat = MatFp::zeros(field, nf_monomials.len(), monomials.len());
    for (i, nf) in nfs.iter().enumerate() {
        for (m, c) in nf.terms() {
            mat.set(index[m], i, *c);
        }
    }
    let kernel = if nf_monomials.is_empty() {
        // every normal form vanished: the whole component lies in the ideal
        (0..monomials.len())
            .map(|i| {
                let mut v = vec![0u64; monomials.len()];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        mat.kernel_basis()
    };
    if kernel.is_empty() {
        return Ok(Vec::new());
    }

    // echelonize the kernel combinations over the degree-A monomials sorted
    // descending under the order, so leading monomials are distinct
    let mut cols_sorted: Vec<usize> = (0..monomials.len()).collect();
    cols_sorted.sort_by(|&x, &y| order.compare(&monomials[y], &monomials[x]));
    let rows: Vec<Vec<u64>> = kernel
        .iter()
        .map(|v| cols_sorted.iter().map(|&c| v[c]).collect())
        .collect();
    let mut ech = MatFp::from_rows(field, rows);
    let pivots = ech.rref();
    let mut basis = Vec::with_capacity(pivots.len());
    for r in 0..pivots.len() {
        let terms: Vec<(Monomial, u64)> = (0..monomials.len())
            .filter(|&c| ech.get(r, c) != 0)
            .map(|c| (monomials[cols_sorted[c]].clone(), ech.get(r, c)))
            .collect();
        basis.push(Polynomial::from_distinct_terms(terms));
    }
    Ok(basis)
}
