use crate::algebra::{Monomial, Polynomial, RingConfig, Variable};
use crate::error::{Error, Result};

/// Parses a generator expression: a signed sum of terms, where a term is an
/// optional integer coefficient and `*`-separated powers `x[i,j]^e` (the
/// exponent defaults to 1). Whitespace is ignored; coefficients are reduced
/// mod p.
pub fn parse_polynomial(text: &str, ring: &RingConfig) -> Result<Polynomial> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a RingConfig,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut terms: Vec<(Monomial, u64)> = Vec::new();
        self.skip_ws();
        if self.at_end() {
            return Err(self.err("empty expression"));
        }
        let mut sign = 1i64;
        if let Some(s) = self.try_sign() {
            sign = s;
        }
        loop {
            let (m, c) = self.term()?;
            let coeff = field.reduce_i64(sign * c);
            terms.push((m, coeff));
            self.skip_ws();
            if self.at_end() {
                break;
            }
            match self.try_sign() {
                Some(s) => sign = s,
                None => return Err(self.err("expected '+', '-', or end of input")),
            }
        }
        Ok(Polynomial::from_terms(field, terms))
    }

    fn term(&mut self) -> Result<(Monomial, i64)> {
        let mut coeff: i64 = 1;
        let mut mono = Monomial::one(self.ring);
        loop {
            self.skip_ws();
            if self.peek() == Some(b'x') {
                let (v, e) = self.power()?;
                let pos = self.ring.position(v)?;
                let mut exps = mono.exps().to_vec();
                for _ in 0..e {
                    exps[pos] = exps[pos]
                        .checked_add(1)
                        .ok_or_else(|| Error::Internal("monomial exponent overflow".into()))?;
                }
                mono = Monomial::from_exps(exps);
            } else if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                let n = self.integer()?;
                coeff = coeff
                    .checked_mul(n)
                    .ok_or_else(|| self.err("coefficient overflow"))?
                    % self.ring.prime() as i64;
            } else {
                return Err(self.err("expected a coefficient or x[i,j]"));
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn power(&mut self) -> Result<(Variable, u32)> {
        self.expect(b'x')?;
        self.skip_ws();
        self.expect(b'[')?;
        self.skip_ws();
        let row = self.integer()?;
        self.skip_ws();
        self.expect(b',')?;
        self.skip_ws();
        let col = self.integer()?;
        self.skip_ws();
        self.expect(b']')?;
        self.skip_ws();
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            if e < 0 || e > u32::MAX as i64 {
                return Err(self.err("exponent out of range"));
            }
            exp = e as u32;
        }
        if row < 1 || col < 1 {
            return Err(self.err("variable indices are 1-based"));
        }
        Ok((Variable::new(row as usize, col as usize), exp))
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse::<i64>()
            .map_err(|_| Error::Parse {
                offset: start,
                message: "integer too large".into(),
            })
    }

    fn try_sign(&mut self) -> Option<i64> {
        self.skip_ws();
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {:?}", byte as char)))
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }
}

/// Parses a comma-separated list of monomials in T = K[y_1..y_n], e.g.
/// `"y1*y2^2, y3"`, into exponent vectors of length `n`.
pub fn parse_t_monomials(text: &str, n: usize) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for chunk in text.split(',') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut exps = vec![0u32; n];
        if chunk == "1" {
            out.push(exps);
            continue;
        }
        for factor in chunk.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('y').ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("expected y<index>[^e], got {factor:?}"),
            })?;
            let (idx_str, exp) = match rest.split_once('^') {
                Some((i, e)) => {
                    let e: u32 = e.trim().parse().map_err(|_| Error::Parse {
                        offset: 0,
                        message: format!("bad exponent in {factor:?}"),
                    })?;
                    (i.trim(), e)
                }
                None => (rest.trim(), 1),
            };
            let idx: usize = idx_str.parse().map_err(|_| Error::Parse {
                offset: 0,
                message: format!("bad variable index in {factor:?}"),
            })?;
            if idx < 1 || idx > n {
                return Err(Error::Parse {
                    offset: 0,
                    message: format!("y{idx} out of range for n = {n}"),
                });
            }
            exps[idx - 1] += exp;
        }
        out.push(exps);
    }
    if out.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "no monomials given".into(),
        });
    }
    Ok(out)
}
