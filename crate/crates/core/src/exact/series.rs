//! Truncated power series with exact rational coefficients.
//!
//! A series of order `P` stores the coefficients of `t^0 .. t^P`. All
//! operations are exact; nothing is ever rounded. Binary operations truncate
//! to the smaller order of the two operands.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPowerSeries {
    order: usize,
    coeffs: Vec<BigRational>, // length order + 1
}

/// Wire form: `{"order":P,"coeffs":["num/den",...]}`.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl RationalPowerSeries {
    pub fn zero(order: usize) -> Self {
        RationalPowerSeries {
            order,
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds a series from explicit coefficients, padding with zeros or
    /// truncating beyond `order`.
    pub fn from_coeffs(order: usize, coeffs: Vec<BigRational>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigRational::zero());
        RationalPowerSeries { order, coeffs }
    }

    /// Truncates an integer polynomial to a series of the given order.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| BigRational::from_integer(p.coeff(i)))
            .collect();
        RationalPowerSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: BigRational) {
        self.coeffs[i] = c;
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when every stored coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        RationalPowerSeries { order, coeffs }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        RationalPowerSeries { order, coeffs }
    }

    /// exp of a series with zero constant term, via the recurrence
    /// `n * e_n = sum_{k=1..n} k * s_k * e_{n-k}` coming from (exp S)' = S' exp S.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidParameter(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let mut e = vec![BigRational::zero(); self.order + 1];
        e[0] = BigRational::one();
        for n in 1..=self.order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += BigRational::from_integer(BigInt::from(k)) * &self.coeffs[k] * &e[n - k];
            }
            e[n] = acc / BigRational::from_integer(BigInt::from(n));
        }
        Ok(RationalPowerSeries {
            order: self.order,
            coeffs: e,
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(SeriesJson {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        })
        .expect("series serialization cannot fail")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let raw: SeriesJson = serde_json::from_value(v.clone())?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(Error::InvalidParameter(format!(
                "series of order {} must carry {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for c in &raw.coeffs {
            let parsed: BigRational = c
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad rational literal `{}`", c)))?;
            coeffs.push(parsed);
        }
        Ok(RationalPowerSeries {
            order: raw.order,
            coeffs,
        })
    }
}

impl fmt::Display for RationalPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order + 1)
    }
}
