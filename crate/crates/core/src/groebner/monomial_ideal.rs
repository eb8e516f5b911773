use std::collections::BTreeSet;

use crate::algebra::{Monomial, RingConfig};

/// A monomial ideal given by its minimal generators (an antichain under
/// divisibility), stored sorted for structural equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ring: RingConfig,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the given generators.
    pub fn new(ring: RingConfig, gens: Vec<Monomial>) -> Self {
        let mut sorted = gens;
        sorted.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| a.cmp(b))
        });
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in sorted {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        MonomialIdeal {
            ring,
            gens: minimal,
        }
    }

    pub fn zero(ring: RingConfig) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingConfig {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the ideal is all of S (generated by 1).
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn union(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.ring, other.ring);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// Intersection via pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.ring, other.ring);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// Height of the ideal (= height of its radical): the minimum size of a
    /// set of variables meeting the support of every generator. `None` for
    /// the unit ideal, 0 for the zero ideal.
    pub fn codim(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        if self.is_zero() {
            return Some(0);
        }
        // supports, pruned to inclusion-minimal ones
        let mut supports: Vec<BTreeSet<usize>> = self
            .gens
            .iter()
            .map(|g| g.support().collect::<BTreeSet<_>>())
            .collect();
        supports.sort_by_key(|s| s.len());
        let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
        for s in supports {
            if !minimal.iter().any(|t| t.is_subset(&s)) {
                minimal.push(s);
            }
        }
        let mut best = minimal.len();
        let mut chosen = Vec::new();
        min_hitting(&minimal, &mut chosen, &mut best);
        Some(best)
    }
}

fn min_hitting(supports: &[BTreeSet<usize>], chosen: &mut Vec<usize>, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    let Some(first) = supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)))
    else {
        *best = chosen.len();
        return;
    };
    for &v in first {
        chosen.push(v);
        min_hitting(supports, chosen, best);
        chosen.pop();
    }
}
