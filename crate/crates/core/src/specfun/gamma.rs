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

//! Digamma and principal-branch log-gamma on the half plane the crate needs.

use num_complex::Complex64;

use super::bernoulli::shared_table;
use crate::error::SpecialFunctionError;

/// Digamma for complex arguments away from the poles at `0, -1, -2, ...`.
///
/// Recurrence up the real axis into the asymptotic region, then the Bernoulli
/// series; 1e-12 relative error on `|x| <= 100`.
pub fn digamma(x: Complex64) -> Result<Complex64, SpecialFunctionError> {
    let near_int = x.re <= 0.5 && x.im.abs() < 1e-9 && (x.re - x.re.round()).abs() < 1e-9;
    if near_int && x.re.round() <= 0.0 {
        return Err(SpecialFunctionError::DigammaPole { x });
    }
    if x.re < 0.5 {
        // Reflection: psi(x) = psi(1-x) - pi cot(pi x)
        let pix = std::f64::consts::PI * x;
        let cot = pix.cos() / pix.sin();
        return Ok(digamma(Complex64::new(1.0, 0.0) - x)? - std::f64::consts::PI * cot);
    }
    let mut shift = Complex64::new(0.0, 0.0);
    let mut z = x;
    while z.re < 16.0 {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2j}/(2j z^{2j})
    let table = shared_table();
    let mut acc = z.ln() - 0.5 / z;
    let z2 = 1.0 / (z * z);
    let mut zp = z2;
    for j in 1..=20 {
        let term = table.as_f64(2 * j) / (2 * j) as f64 * zp;
        acc -= term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        zp *= z2;
    }
    Ok(acc + shift)
}

/// Principal-branch log-gamma for `Re(x) > 0`, by Lanczos approximation.
///
/// Kept deliberately distinct from the Stirling-series route so the two can
/// serve as independent cross-checks in the test suites.
pub fn log_gamma(x: Complex64) -> Result<Complex64, SpecialFunctionError> {
    if x.re <= 0.0 {
        return Err(SpecialFunctionError::Domain {
            what: format!("log_gamma requires Re(x) > 0, got {x}"),
        });
    }
    // Lanczos, g = 7, n = 9 (Godfrey coefficients).
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    let z = x - 1.0;
    let mut a = Complex64::new(C[0], 0.0);
    for (i, &c) in C.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    Ok(half_log_2pi + (z + 0.5) * t.ln() - t + a.ln())
}

/// Gamma on `Re(x) > 0` through [`log_gamma`].
pub fn gamma(x: Complex64) -> Result<Complex64, SpecialFunctionError> {
    Ok(log_gamma(x)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        // psi(1) = -gamma, oracle from the limit definition H_n - log n.
        let v = digamma(c(1.0, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA).abs() < 1e-13);
    }

    #[test]
    fn digamma_at_half() {
        // psi(1/2) = -gamma - 2 log 2 (duplication formula oracle).
        let v = digamma(c(0.5, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA + 2.0 * 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn digamma_complex_difference_is_tanh() {
        // psi((1+i)/2) - psi((1-i)/2) = pi i tanh(pi/2)  (reflection formula)
        let d = digamma(c(0.5, 0.5)).unwrap() - digamma(c(0.5, -0.5)).unwrap();
        let expect = std::f64::consts::PI * (std::f64::consts::PI / 2.0).tanh();
        assert!(d.re.abs() < 1e-12);
        assert!((d.im - expect).abs() < 1e-11, "got {d}");
    }

    #[test]
    fn digamma_pole_detected() {
        assert!(digamma(c(0.0, 0.0)).is_err());
        assert!(digamma(c(-3.0, 0.0)).is_err());
    }

    #[test]
    fn digamma_reflection_random() {
        for &(re, im) in &[(0.3, 0.7), (-2.4, 0.1), (0.9, -3.0), (-0.2, 0.01)] {
            let x = c(re, im);
            let lhs = digamma(c(1.0 - re, -im)).unwrap() - digamma(x).unwrap();
            let pix = std::f64::consts::PI * x;
            let rhs = std::f64::consts::PI * pix.cos() / pix.sin();
            assert!((lhs - rhs).norm() < 1e-11, "x = {x}");
        }
    }

    #[test]
    fn log_gamma_known_values() {
        let v = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((v.re - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-12);
        let v = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((v.re - 24.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn gamma_recurrence() {
        for &(re, im) in &[(1.3, 0.4), (0.2, -2.0), (7.5, 1.0)] {
            let x = c(re, im);
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert!((lhs - rhs).norm() < 1e-10 * rhs.norm().max(1.0));
        }
    }
}
