//! Coefficient traits shared by the series and counting code.
//!
//! Everything in [`crate::series`] and [`crate::enumeration`] is written
//! against these traits so the same recurrences run over `BigInt` (the
//! default, see the aliases at the crate root), fixed-width integers, or
//! `f64` when an approximate magnitude is all that is wanted.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::Num;

/// A commutative ring element usable as a series coefficient or a count.
pub trait Coefficient: Num + Clone + Debug + From<u32> {}

impl<T> Coefficient for T where T: Num + Clone + Debug + From<u32> {}

/// Coefficients with exact Euclidean division, needed by the closed forms.
pub trait ExactInteger: Coefficient + Integer {}

impl<T> ExactInteger for T where T: Coefficient + Integer {}

pub(crate) fn from_usize<T: Coefficient>(v: usize) -> T {
    let v = u32::try_from(v).expect("index does not fit in u32");
    T::from(v)
}

/// Divides `num` by `den`, returning `None` unless the division is exact.
pub fn exact_div<T: ExactInteger>(num: &T, den: &T) -> Option<T> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

/// Binomial coefficient with the combinatorial convention: zero whenever
/// `k < 0`, `n < 0` or `k > n`.
pub fn binomial<T: Coefficient>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // Pascal row, additions only.
    let mut row = vec![T::zero(); k + 1];
    row[0] = T::one();
    for _ in 0..n {
        for col in (1..=k).rev() {
            row[col] = row[col].clone() + row[col - 1].clone();
        }
    }
    row.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial::<u64>(5, 2), 10);
        assert_eq!(binomial::<u64>(5, 6), 0);
        assert_eq!(binomial::<u64>(-1, 0), 0);
        assert_eq!(binomial::<u64>(4, -1), 0);
        assert_eq!(binomial::<u64>(0, 0), 1);
        assert_eq!(binomial::<BigInt>(14, 10), BigInt::from(1001));
        assert_eq!(binomial::<f64>(10, 5), 252.0);
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            exact_div(&BigInt::from(3003), &BigInt::from(7)),
            Some(BigInt::from(429))
        );
        assert_eq!(exact_div(&10u64, &3u64), None);
        assert_eq!(exact_div(&10u64, &0u64), None);
    }
}
