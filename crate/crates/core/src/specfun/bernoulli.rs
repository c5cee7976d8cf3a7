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

//! Exact Bernoulli numbers with the `B_1 = -1/2` convention.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Table of exact Bernoulli numbers `B_0..B_N`.
///
/// Convention: `B_1 = -1/2`, matching the Euler-Maclaurin form used by the
/// Hurwitz zeta continuation. Odd-index entries above 1 vanish.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    /// Computes `B_0..B_n` with the defining recurrence
    /// `sum_{k=0}^{n} binom(n+1, k) B_k = 0` for `n >= 1`.
    pub fn up_to(n: usize) -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(n + 1);
        values.push(BigRational::one());
        for m in 1..=n {
            // B_m = -1/(m+1) * sum_{k=0}^{m-1} binom(m+1, k) B_k
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // binom(m+1, 0)
            for (k, b) in values.iter().enumerate().take(m) {
                acc += BigRational::from_integer(binom.clone()) * b;
                // binom(m+1, k+1) = binom(m+1, k) * (m+1-k)/(k+1)
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            let bm = -acc / BigRational::from_integer(BigInt::from(m + 1));
            values.push(bm);
        }
        BernoulliTable { values }
    }

    pub fn get(&self, k: usize) -> &BigRational {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_f64(&self, k: usize) -> f64 {
        rational_to_f64(&self.values[k])
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // Scale through f64 conversion of numerator and denominator; values in the
    // shared table are well within range.
    let num = r.numer();
    let den = r.denom();
    big_to_f64(num) / big_to_f64(den)
}

fn big_to_f64(x: &BigInt) -> f64 {
    // BigInt -> f64 with truncation toward zero; adequate for table sizes here.
    let s = x.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}

/// Shared table `B_0..B_60`, computed once.
pub fn shared_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::up_to(60))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_values_match_convention() {
        let t = BernoulliTable::up_to(12);
        assert_eq!(t.get(0), &q(1, 1));
        assert_eq!(t.get(1), &q(-1, 2));
        assert_eq!(t.get(2), &q(1, 6));
        assert_eq!(t.get(4), &q(-1, 30));
        assert_eq!(t.get(6), &q(1, 42));
        assert_eq!(t.get(8), &q(-1, 30));
        assert_eq!(t.get(10), &q(5, 66));
        assert_eq!(t.get(12), &q(-691, 2730));
    }

    #[test]
    fn odd_entries_vanish() {
        let t = BernoulliTable::up_to(21);
        for k in (3..=21).step_by(2) {
            assert!(t.get(k).is_zero(), "B_{k} should vanish");
        }
    }
}
