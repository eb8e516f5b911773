use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::algebra::linalg::MatFp;
use crate::algebra::{Monomial, Polynomial, RingConfig};
use crate::error::{Error, Result};

const SINGULAR_RETRY_CAP: usize = 64;

/// A ℤⁿ-graded change of coordinates: one invertible m_j x m_j matrix per
/// column block, acting by `x_ij -> sum_k g[j][i][k] * x_kj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockChange {
    // per column: m_j x m_j row-major entries
    mats: Vec<Vec<u64>>,
}

impl BlockChange {
    pub fn identity(ring: &RingConfig) -> Self {
        let mats = ring
            .blocks()
            .iter()
            .map(|&m| {
                let mut mat = vec![0u64; m * m];
                for i in 0..m {
                    mat[i * m + i] = 1;
                }
                mat
            })
            .collect();
        BlockChange { mats }
    }

    /// Draws dense invertible blocks deterministically from the seed,
    /// resampling a block on a singular draw.
    pub fn random(ring: &RingConfig, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = ring.prime();
        let field = ring.field();
        let mut mats = Vec::with_capacity(ring.cols());
        for &m in ring.blocks() {
            let mut attempts = 0;
            let mat = loop {
                attempts += 1;
                if attempts > SINGULAR_RETRY_CAP {
                    return Err(Error::Internal(
                        "exceeded retry cap drawing an invertible block".into(),
                    ));
                }
                let entries: Vec<u64> = (0..m * m).map(|_| uniform_below(&mut rng, p)).collect();
                let rows: Vec<Vec<u64>> =
                    entries.chunks(m).map(|chunk| chunk.to_vec()).collect();
                if MatFp::from_rows(field, rows).inverse().is_some() {
                    break entries;
                }
            };
            mats.push(mat);
        }
        Ok(BlockChange { mats })
    }

    pub fn inverse(&self, ring: &RingConfig) -> Result<BlockChange> {
        let field = ring.field();
        let mut mats = Vec::with_capacity(self.mats.len());
        for (j, &m) in ring.blocks().iter().enumerate() {
            let rows: Vec<Vec<u64>> = self.mats[j].chunks(m).map(|c| c.to_vec()).collect();
            let inv = MatFp::from_rows(field, rows)
                .inverse()
                .ok_or_else(|| Error::Internal("block change not invertible".into()))?;
            mats.push(inv.into_iter().flatten().collect());
        }
        Ok(BlockChange { mats })
    }

    /// Image of the variable at a flat position: a linear form in its column.
    fn image(&self, ring: &RingConfig, pos: usize) -> Polynomial {
        let v = ring.var_at(pos);
        let m = ring.block_size(v.col);
        let mat = &self.mats[v.col - 1];
        let col_positions = ring.column_positions(v.col);
        let terms = (0..m).filter_map(|k| {
            let c = mat[(v.row - 1) * m + k];
            if c == 0 {
                None
            } else {
                let mut exps = vec![0u8; ring.var_count()];
                exps[col_positions[k]] = 1;
                Some((Monomial::from_exps(exps), c))
            }
        });
        Polynomial::from_terms(ring.field(), terms)
    }

    pub fn apply(&self, ring: &RingConfig, f: &Polynomial) -> Polynomial {
        f.substitute(ring, |pos| self.image(ring, pos), ring.field())
    }

    pub fn apply_all(&self, ring: &RingConfig, gens: &[Polynomial]) -> Vec<Polynomial> {
        gens.iter().map(|g| self.apply(ring, g)).collect()
    }
}

/// Uniform draw in [0, bound) by rejection, deterministic for a fixed stream.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    let zone = u64::MAX - (u64::MAX % bound);
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}
