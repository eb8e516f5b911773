use crate::algebra::PrimeField;
use crate::error::{Error, Result};

/// A variable `x[i,j]` of the generic matrix: row `i` within the block of
/// column `j`, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    pub row: usize,
    pub col: usize,
}

impl Variable {
    pub fn new(row: usize, col: usize) -> Self {
        Variable { row, col }
    }
}

impl std::fmt::Display for Variable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// The ambient polynomial ring S = K[x_ij | 1 <= j <= n, 1 <= i <= m_j] with
/// the ℤⁿ-grading deg x_ij = e_j.
///
/// Variables are flattened in row-major priority order (`x[1,1]`, `x[1,2]`, ...,
/// `x[2,1]`, ...), which is also the default variable priority of term orders;
/// monomial exponent vectors are indexed by that position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingConfig {
    n: usize,
    blocks: Vec<usize>,
    field: PrimeField,
    // position -> variable, in row-major priority order
    vars: Vec<Variable>,
    // per column: list of positions indexed by row-1
    positions: Vec<Vec<usize>>,
}

pub const DEFAULT_PRIME: u64 = 32003;

impl RingConfig {
    pub fn new(blocks: Vec<usize>, prime: u64) -> Result<Self> {
        let n = blocks.len();
        if n == 0 {
            return Err(Error::InvalidRing("need at least one column".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidRing("every block size must be >= 1".into()));
        }
        let field = PrimeField::new(prime)?;
        let max_rows = *blocks.iter().max().unwrap();
        let mut vars = Vec::new();
        let mut positions = vec![Vec::new(); n];
        for row in 1..=max_rows {
            for (j, &mj) in blocks.iter().enumerate() {
                if row <= mj {
                    positions[j].push(vars.len());
                    vars.push(Variable::new(row, j + 1));
                }
            }
        }
        // positions[j] was filled in increasing row order
        Ok(RingConfig {
            n,
            blocks,
            field,
            vars,
            positions,
        })
    }

    /// Uniform block sizes: an m x n generic matrix graded by columns.
    pub fn uniform(cols: usize, rows: usize, prime: u64) -> Result<Self> {
        Self::new(vec![rows; cols], prime)
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_size(&self, col: usize) -> usize {
        self.blocks[col - 1]
    }

    pub fn prime(&self) -> u64 {
        self.field.p()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    /// Variable at a flat position.
    pub fn var_at(&self, pos: usize) -> Variable {
        self.vars[pos]
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    /// Flat position of a variable, if within bounds.
    pub fn position(&self, v: Variable) -> Result<usize> {
        if v.col == 0 || v.col > self.n || v.row == 0 || v.row > self.blocks[v.col - 1] {
            return Err(Error::VariableOutOfBounds {
                row: v.row,
                col: v.col,
                context: format!("ring has blocks {:?}", self.blocks),
            });
        }
        Ok(self.positions[v.col - 1][v.row - 1])
    }

    /// Column (1-based) of the variable at a flat position.
    pub fn col_of(&self, pos: usize) -> usize {
        self.vars[pos].col
    }

    /// Flat positions of the variables in a column, by increasing row.
    pub fn column_positions(&self, col: usize) -> &[usize] {
        &self.positions[col - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_flattening() {
        let ring = RingConfig::new(vec![2, 3, 1], 32003).unwrap();
        assert_eq!(ring.var_count(), 6);
        let order: Vec<_> = ring.vars().iter().map(|v| (v.row, v.col)).collect();
        assert_eq!(
            order,
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 2)]
        );
        assert_eq!(ring.position(Variable::new(2, 2)).unwrap(), 4);
        assert!(ring.position(Variable::new(2, 3)).is_err());
        assert!(ring.position(Variable::new(0, 1)).is_err());
        assert_eq!(ring.column_positions(2), &[1, 4, 5]);
    }

    #[test]
    fn invalid_rings() {
        assert!(RingConfig::new(vec![], 32003).is_err());
        assert!(RingConfig::new(vec![2, 0], 32003).is_err());
        assert!(RingConfig::new(vec![2], 4).is_err());
    }
}
