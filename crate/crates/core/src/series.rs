//! Truncated formal power series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Coefficient;

/// A power series known through `x^precision`.
///
/// Binary operations truncate to the smaller precision of the operands.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> PowerSeries<T> {
    /// Series with the given leading coefficients, zero-padded through
    /// `x^precision` and truncated beyond it.
    pub fn from_coeffs(mut coeffs: Vec<T>, precision: usize) -> Self {
        coeffs.resize(precision + 1, T::zero());
        Self { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_coeffs(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::from_coeffs(vec![T::one()], precision)
    }

    /// `x^j`.
    pub fn monomial(j: usize, precision: usize) -> Self {
        Self::one(precision).shift(j)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[x^i]`, or zero past the precision.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::from_coeffs(
            self.coeffs[..=precision.min(self.precision())].to_vec(),
            precision.min(self.precision()),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `x^j`.
    pub fn shift(&self, j: usize) -> Self {
        let p = self.precision();
        let mut coeffs = vec![T::zero(); j.min(p + 1)];
        coeffs.extend(self.coeffs.iter().take((p + 1).saturating_sub(j)).cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.precision());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; `None` unless the constant term is 1.
    pub fn reciprocal(&self) -> Option<Self> {
        if !self.coeffs[0].is_one() {
            return None;
        }
        let p = self.precision();
        let mut inv: Vec<T> = Vec::with_capacity(p + 1);
        inv.push(T::one());
        for m in 1..=p {
            let mut acc = T::zero();
            for i in 1..=m {
                acc = acc + self.coeffs[i].clone() * inv[m - i].clone();
            }
            inv.push(T::zero() - acc);
        }
        Some(Self { coeffs: inv })
    }

    /// Catalan generating function, from `C = 1 + x C^2`.
    pub fn catalan(precision: usize) -> Self {
        let mut c: Vec<T> = vec![T::one()];
        for m in 1..=precision {
            let mut acc = T::zero();
            for i in 0..m {
                acc = acc + c[i].clone() * c[m - 1 - i].clone();
            }
            c.push(acc);
        }
        Self { coeffs: c }
    }

    /// Fine generating function `1 / (1 - x^2 C^2)`, unrolled as
    /// `F = 1 + x^2 C^2 F` so no subtraction is needed.
    pub fn fine(precision: usize) -> Self {
        let c = Self::catalan(precision);
        let c2 = &c * &c;
        let mut f: Vec<T> = vec![T::one()];
        for m in 1..=precision {
            let mut acc = T::zero();
            for j in 0..m.saturating_sub(1) {
                acc = acc + c2.coeffs[m - 2 - j].clone() * f[j].clone();
            }
            f.push(acc);
        }
        Self { coeffs: f }
    }
}

impl<T: Coefficient> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn add(self, rhs: Self) -> PowerSeries<T> {
        let p = self.precision().min(rhs.precision());
        let coeffs = (0..=p)
            .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
            .collect();
        PowerSeries { coeffs }
    }
}

impl<T: Coefficient> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn sub(self, rhs: Self) -> PowerSeries<T> {
        let p = self.precision().min(rhs.precision());
        let coeffs = (0..=p)
            .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
            .collect();
        PowerSeries { coeffs }
    }
}

impl<T: Coefficient> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn mul(self, rhs: Self) -> PowerSeries<T> {
        let p = self.precision().min(rhs.precision());
        let mut coeffs = vec![T::zero(); p + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(p + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(p + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs }
    }
}

impl<T: Coefficient> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn neg(self) -> PowerSeries<T> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| T::zero() - a.clone()).collect(),
        }
    }
}

impl<T: Coefficient> fmt::Debug for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(x^{})", self.coeffs, self.precision() + 1)
    }
}
