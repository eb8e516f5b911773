//! Self-contained JSON reports: configuration echo, result payloads, and
//! re-checkable witnesses. Reports with identical run configuration are byte
//! identical; timings are opt-in so the default output stays deterministic.

use serde::Serialize;

use crate::algebra::{Monomial, RingConfig};
use crate::groebner::MonomialIdeal;
use crate::hilbert::{BoundedMonomialIdeal, KPolynomial};

pub const SCHEMA: &str = "csgin/report/1";

/// A monomial as a list of [row, col] pairs, one per variable occurrence.
pub type MonomialJson = Vec<[usize; 2]>;

pub fn monomial_json(ring: &RingConfig, m: &Monomial) -> MonomialJson {
    let mut out = Vec::new();
    for (v, e) in m.factors(ring) {
        for _ in 0..e {
            out.push([v.row, v.col]);
        }
    }
    out
}

pub fn ideal_json(j: &MonomialIdeal) -> Vec<MonomialJson> {
    j.gens()
        .iter()
        .map(|m| monomial_json(j.ring(), m))
        .collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct KTermJson {
    pub exponents: Vec<u32>,
    pub coeff: i64,
}

/// Terms sorted lexicographically by exponent vector.
pub fn k_polynomial_json(k: &KPolynomial) -> Vec<KTermJson> {
    k.terms()
        .map(|(e, c)| KTermJson {
            exponents: e.clone(),
            coeff: c,
        })
        .collect()
}

pub fn t_ideal_json(i: &BoundedMonomialIdeal) -> Vec<Vec<u32>> {
    i.gens().to_vec()
}

#[derive(Serialize, Clone, Debug)]
pub struct ConfigEcho {
    pub blocks: Vec<usize>,
    pub prime: u64,
    pub order: String,
    pub grading: String,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check_prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Timings {
    pub total_ms: u128,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub config: ConfigEcho,
    pub result: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    pub fn new(command: &str, config: ConfigEcho, result: serde_json::Value) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            config,
            result,
            timings: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
