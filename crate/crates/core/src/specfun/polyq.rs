// Copyright 2026 the zetaforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact rational polynomials with an optional parity tag.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use super::bernoulli::rational_to_f64;

/// Parity tag for [`PolyQ`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    #[default]
    None,
}

#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("coefficient {index} violates declared {parity:?} parity")]
    ParityViolation { index: usize, parity: Parity },
    #[error("cannot parse rational coefficient `{0}`")]
    BadCoefficient(String),
}

/// Polynomial with exact rational coefficients, ascending degree, plus a
/// parity flag. The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
    parity: Parity,
}

impl PolyQ {
    pub fn new(coeffs: Vec<BigRational>, parity: Parity) -> Result<Self, PolyError> {
        let mut p = PolyQ { coeffs, parity };
        p.trim();
        p.check_parity()?;
        Ok(p)
    }

    /// Builds from integer coefficients, inferring no parity.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let mut p = PolyQ {
            coeffs,
            parity: Parity::None,
        };
        p.trim();
        p
    }

    pub fn from_ints_with_parity(coeffs: &[i64], parity: Parity) -> Result<Self, PolyError> {
        let coeffs = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Self::new(coeffs, parity)
    }

    pub fn zero() -> Self {
        PolyQ {
            coeffs: Vec::new(),
            parity: Parity::None,
        }
    }

    pub fn one() -> Self {
        PolyQ {
            coeffs: vec![BigRational::one()],
            parity: Parity::Even,
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        PolyQ {
            coeffs: vec![BigRational::zero(), BigRational::one()],
            parity: Parity::Odd,
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = PolyQ {
            coeffs: vec![c],
            parity: Parity::Even,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn check_parity(&self) -> Result<(), PolyError> {
        for (i, c) in self.coeffs.iter().enumerate() {
            let bad = match self.parity {
                Parity::Odd => i % 2 == 0 && !c.is_zero(),
                Parity::Even => i % 2 == 1 && !c.is_zero(),
                Parity::None => false,
            };
            if bad {
                return Err(PolyError::ParityViolation {
                    index: i,
                    parity: self.parity,
                });
            }
        }
        Ok(())
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn set_parity(&mut self, parity: Parity) -> Result<(), PolyError> {
        self.parity = parity;
        self.check_parity()
    }

    /// Degree as `Option`: `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        let mut p = PolyQ {
            coeffs,
            parity: combine_parity(self.parity, other.parity),
        };
        p.trim();
        p
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            parity: self.parity,
        }
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let parity = match (self.parity, other.parity) {
            (Parity::Even, Parity::Even) | (Parity::Odd, Parity::Odd) => Parity::Even,
            (Parity::Even, Parity::Odd) | (Parity::Odd, Parity::Even) => Parity::Odd,
            _ => Parity::None,
        };
        let mut p = PolyQ { coeffs, parity };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> PolyQ {
        let mut p = PolyQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            parity: self.parity,
        };
        p.trim();
        p
    }

    /// Composition with the shift `x -> x + h`, re-expanded exactly.
    pub fn shift_variable(&self, h: &BigRational) -> PolyQ {
        // Horner in (x + h).
        let mut acc = PolyQ::zero();
        let xh = PolyQ {
            coeffs: vec![h.clone(), BigRational::one()],
            parity: Parity::None,
        };
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xh);
            acc = acc.add(&PolyQ::constant(c.clone()));
        }
        acc
    }

    /// Derivative.
    pub fn derivative(&self) -> PolyQ {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        let parity = match self.parity {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        };
        let mut p = PolyQ { coeffs, parity };
        p.trim();
        p
    }

    /// Exact antiderivative with zero constant term.
    pub fn antiderivative(&self) -> PolyQ {
        let mut coeffs = vec![BigRational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / BigRational::from_integer(BigInt::from(k + 1)));
        }
        let parity = match self.parity {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        };
        let mut p = PolyQ { coeffs, parity };
        p.trim();
        p
    }

    /// Serializes coefficients for the JSON formats: integers stay plain JSON
    /// numbers, everything else becomes a `"p/q"` string.
    pub fn coeffs_to_json(&self) -> Vec<serde_json::Value> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    let n = c.to_integer();
                    if let Ok(v) = i64::from_str(&n.to_string()) {
                        return serde_json::Value::from(v);
                    }
                }
                serde_json::Value::from(c.to_string())
            })
            .collect()
    }

    pub fn coeffs_from_json(values: &[serde_json::Value]) -> Result<Vec<BigRational>, PolyError> {
        values
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => {
                    if let Some(i) = n.as_i64() {
                        Ok(BigRational::from_integer(BigInt::from(i)))
                    } else {
                        Err(PolyError::BadCoefficient(n.to_string()))
                    }
                }
                serde_json::Value::String(s) => parse_rational(s),
                other => Err(PolyError::BadCoefficient(other.to_string())),
            })
            .collect()
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| PolyError::BadCoefficient(s.into()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| PolyError::BadCoefficient(s.into()))?;
        if d.is_zero() {
            return Err(PolyError::BadCoefficient(s.into()));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(s.trim()).map_err(|_| PolyError::BadCoefficient(s.into()))?;
        Ok(BigRational::from_integer(n))
    }
}

fn combine_parity(a: Parity, b: Parity) -> Parity {
    if a == b {
        a
    } else {
        Parity::None
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{a}*x")?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{k}")?
                    } else {
                        write!(f, "{a}*x^{k}")?
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
