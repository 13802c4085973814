//! Truncated power-series arithmetic over exact integer coefficients.
//!
//! Sequences here start at index 1 (the constant term is implicitly zero),
//! matching the counting series of compositions: a color sequence `w` and
//! the counts `W` of the colored compositions it generates are related by
//! `W = w / (1 - w)`, i.e. `W` is the INVERT transform of `w`.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Coefficients `c_1..c_N` of a series with zero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeq {
    coeffs: Vec<BigInt>,
}

impl CoeffSeq {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(CoeffSeq { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        CoeffSeq::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Truncation length N.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^n`, 1-based; zero outside the stored range.
    pub fn get(&self, n: usize) -> BigInt {
        if n == 0 || n > self.coeffs.len() {
            BigInt::from(0)
        } else {
            self.coeffs[n - 1].clone()
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// The INVERT transform: coefficients of `W = w / (1 - w)` at the same
/// truncation, via `W_n = w_n + sum_{j=1}^{n-1} w_j W_{n-j}`.
pub fn invert_transform(w: &CoeffSeq) -> CoeffSeq {
    let n = w.len();
    let mut big = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = w.get(k);
        for j in 1..k {
            let wj = w.get(j);
            let prev: &BigInt = &big[k - j - 1];
            acc += wj * prev;
        }
        big.push(acc);
    }
    CoeffSeq { coeffs: big }
}

/// First `n` coefficients (indices 1..=n) of `numer / denom`, where both
/// polynomials are given as dense coefficient slices with index 0 the
/// constant term.
///
/// The division runs over exact integers; a step that does not divide
/// evenly by the denominator's constant term is an error, as is a quotient
/// with a nonzero constant coefficient.
pub fn rational_coeffs(numer: &[i64], denom: &[i64], n: usize) -> Result<CoeffSeq> {
    if n == 0 {
        return Err(Error::EmptySeries);
    }
    let d0 = BigInt::from(*denom.first().ok_or(Error::ZeroConstantTerm)?);
    if d0 == BigInt::from(0) {
        return Err(Error::ZeroConstantTerm);
    }
    let mut quotient: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = BigInt::from(numer.get(k).copied().unwrap_or(0));
        for j in 1..=k.min(denom.len().saturating_sub(1)) {
            acc -= BigInt::from(denom[j]) * &quotient[k - j];
        }
        if &acc % &d0 != BigInt::from(0) {
            return Err(Error::NonIntegerCoefficient(k));
        }
        quotient.push(acc / &d0);
    }
    if quotient[0] != BigInt::from(0) {
        return Err(Error::NonzeroConstantTerm);
    }
    CoeffSeq::new(quotient[1..].to_vec())
}
