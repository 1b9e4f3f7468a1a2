//! Exact counts of monotone k-Naples preferences.
//!
//! `I(n, k)` counts ascending k-Naples preferences of length `n` and
//! `U(n, k)` those that also start with 1. Both satisfy
//!
//! ```text
//! I(n, k) = I(n, k-1) + C_k * sum_{i=0}^{n-k} I(i, k-1) U(n-k-i, k)
//! U(n, k) = U(n, k-1) + C_k * sum_{i=0}^{n-k} U(i, k-1) U(n-k-i, k)
//! ```
//!
//! with `I(n, 0) = C_n`, `U(n, 0) = C_n` for `n > 0` and `U(0, k) = 0`.
//! Descending counts have closed binomial forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{binomial, exact_div, from_usize, Coefficient, ExactInteger};
use crate::series::PowerSeries;

/// Catalan number `C_n` by the convolution recurrence.
pub fn catalan<T: Coefficient>(n: usize) -> T {
    PowerSeries::<T>::catalan(n).coeff(n)
}

/// Memo table of `I(n, k)` and `U(n, k)` for `n <= n_max`, `k <= k_max`.
#[derive(Debug, Clone)]
pub struct CountTable<T> {
    n_max: usize,
    k_max: usize,
    // Indexed [k][n].
    ascending: Vec<Vec<T>>,
    starts_one: Vec<Vec<T>>,
}

impl<T: Coefficient> CountTable<T> {
    pub fn new(n_max: usize, k_max: usize) -> Self {
        let cat = PowerSeries::<T>::catalan(n_max.max(k_max)).coeffs().to_vec();
        // U first: its recurrence never reads I.
        let mut starts_one: Vec<Vec<T>> = Vec::with_capacity(k_max + 1);
        let mut col0 = cat[..=n_max].to_vec();
        col0[0] = T::zero();
        starts_one.push(col0);
        for k in 1..=k_max {
            let col = Self::fill_column(&starts_one[k - 1], None, &cat[k], k, n_max);
            starts_one.push(col);
        }
        let mut ascending: Vec<Vec<T>> = vec![cat[..=n_max].to_vec()];
        for k in 1..=k_max {
            let col = Self::fill_column(&ascending[k - 1], Some(&starts_one[k]), &cat[k], k, n_max);
            ascending.push(col);
        }
        Self {
            n_max,
            k_max,
            ascending,
            starts_one,
        }
    }

    /// Column `k` from column `k - 1` of the same family. `u_col` is the
    /// finished `U(., k)`; when absent the column being built is itself `U`.
    fn fill_column(prev: &[T], u_col: Option<&Vec<T>>, c_k: &T, k: usize, n_max: usize) -> Vec<T> {
        let mut col: Vec<T> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut sum = T::zero();
            if n >= k {
                for i in 0..=n - k {
                    let u = match u_col {
                        Some(u) => u[n - k - i].clone(),
                        None => col[n - k - i].clone(),
                    };
                    sum = sum + prev[i].clone() * u;
                }
            }
            col.push(prev[n].clone() + c_k.clone() * sum);
        }
        col
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `I(n, k)`, or `None` outside the table.
    pub fn ascending(&self, n: usize, k: usize) -> Option<&T> {
        self.ascending.get(k)?.get(n)
    }

    /// `U(n, k)`, or `None` outside the table.
    pub fn ascending_starts_one(&self, n: usize, k: usize) -> Option<&T> {
        self.starts_one.get(k)?.get(n)
    }

    /// `sum_n I(n, k) x^n` through `x^n_max`.
    pub fn ascending_series(&self, k: usize) -> PowerSeries<T> {
        PowerSeries::from_coeffs(self.ascending[k].clone(), self.n_max)
    }

    /// `sum_n U(n, k) x^n` through `x^n_max`.
    pub fn starts_one_series(&self, k: usize) -> PowerSeries<T> {
        PowerSeries::from_coeffs(self.starts_one[k].clone(), self.n_max)
    }
}

/// Number of ascending k-Naples preferences of length `n`.
pub fn count_ascending<T: Coefficient>(n: usize, k: usize) -> T {
    CountTable::<T>::new(n, k).ascending(n, k).unwrap().clone()
}

/// Number of ascending k-Naples preferences of length `n` starting with 1.
pub fn count_ascending_starts_one<T: Coefficient>(n: usize, k: usize) -> T {
    CountTable::<T>::new(n, k).ascending_starts_one(n, k).unwrap().clone()
}

/// Fine number: `[x^n] 1 / (1 - x^2 C(x)^2)`, so `1, 0, 1, 2, 6, 18, ...`.
pub fn fine<T: Coefficient>(n: usize) -> T {
    PowerSeries::<T>::fine(n).coeff(n)
}

/// `[x^n] C(x) F(x)`.
pub fn catalan_fine_convolution<T: Coefficient>(n: usize) -> T {
    let cf = &PowerSeries::<T>::catalan(n) * &PowerSeries::fine(n);
    cf.coeff(n)
}

/// Descending preferences of length `n` whose minimal backup is exactly `k`:
/// `(k+1)/n * binom(2n, n+k+1)`. For `n = 0` only `k = 0` counts.
pub fn count_descending_strict<T: ExactInteger>(n: usize, k: usize) -> T {
    if n == 0 {
        return if k == 0 { T::one() } else { T::zero() };
    }
    let num = from_usize::<T>(k + 1) * binomial::<T>(2 * n as i64, (n + k + 1) as i64);
    exact_div(&num, &from_usize(n)).expect("closed form divides exactly")
}

/// Descending k-Naples preferences of length `n`:
/// `binom(2n-1, n) - binom(2n-1, n+k+1)`. For `n = 0` this is 1.
pub fn count_descending_total<T: ExactInteger>(n: usize, k: usize) -> T {
    if n == 0 {
        return T::one();
    }
    let top = 2 * n as i64 - 1;
    binomial::<T>(top, n as i64) - binomial::<T>(top, (n + k + 1) as i64)
}

/// `[x^m] (x C(x))^r = r/(2m-r) * binom(2m-r, m)` for `1 <= r <= m`; the
/// `r = 0` case is the direct convolution (1 at `m = 0`, else 0).
pub fn catalan_convolution_term<T: ExactInteger>(m: usize, r: usize) -> Result<T> {
    if r > m {
        return Err(Error::OutOfRange(format!("need r <= m, got m={m}, r={r}")));
    }
    if r == 0 {
        return Ok(if m == 0 { T::one() } else { T::zero() });
    }
    let num = from_usize::<T>(r) * binomial::<T>((2 * m - r) as i64, m as i64);
    Ok(exact_div(&num, &from_usize(2 * m - r)).expect("closed form divides exactly"))
}

/// Outcome of checking one identity family coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl FamilyCheck {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, what: impl FnOnce() -> String, got: &T, want: &T) {
        self.checked += 1;
        if got != want {
            self.failures
                .push(format!("{}: got {got:?}, expected {want:?}", what()));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Results of [`verify_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: usize,
    pub families: Vec<FamilyCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyCheck::passed)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyCheck> {
        self.families.iter().find(|f| f.name == name)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fam in &self.families {
            let status = if fam.passed() { "ok" } else { "FAIL" };
            writeln!(f, "{status} {} ({} coefficients)", fam.name, fam.checked)?;
            for line in &fam.failures {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

/// Largest backup bound used by [`verify_identities`].
pub const IDENTITY_K_MAX: usize = 4;

/// Checks the generating-function identities behind the counts through
/// order `order`, for `k <= IDENTITY_K_MAX`:
///
/// * `functional-equations`: `I_k = I_{k-1} + C_k x^k I_{k-1} U_k` and the
///   same with `U_{k-1}` for the table series.
/// * `binomial-sum`: `sum_i C_i binom(p-1-2i, q-1-i) = binom(p, q)` for
///   `1 <= q <= p <= 2q-1`, `p <= 2 * order`.
/// * `g-series`: `[x^n] G (C-1)^k = binom(2n+1, n+k+1)`, `G = C^2/(1-xC^2)`.
/// * `d-series`: `x G - x^{k+2} G C^{2k+2}` has the descending totals as
///   coefficients.
/// * `convolution-term`: the closed form for `[x^m] (xC)^r`.
/// * `strict-series`: strict descending counts are the coefficients of
///   `x^{k+1} C^{2k+2}`.
/// * `fine`: `U(n, 1) = F_{n+1}` and `I(n, 1) = [x^n] C F`.
pub fn verify_identities(order: usize) -> IdentityReport {
    verify_identities_to(order, IDENTITY_K_MAX)
}

/// [`verify_identities`] with a chosen largest backup bound.
pub fn verify_identities_to(order: usize, kmax: usize) -> IdentityReport {
    type Z = num_bigint::BigInt;
    let n = order;
    let one = PowerSeries::<Z>::one(n);
    let c = PowerSeries::<Z>::catalan(n);
    let table = CountTable::<Z>::new(n, kmax);
    let mut families = Vec::new();

    let mut fe = FamilyCheck::new("functional-equations");
    for k in 1..=kmax {
        let ck = c.coeff(k);
        let u_k = table.starts_one_series(k);
        for (label, prev, cur) in [
            ("I", table.ascending_series(k - 1), table.ascending_series(k)),
            ("U", table.starts_one_series(k - 1), u_k.clone()),
        ] {
            let rhs = &prev + &(&prev * &u_k).shift(k).scale(&ck);
            for i in 0..=n {
                fe.expect(|| format!("{label}_{k} [x^{i}]"), &cur.coeff(i), &rhs.coeff(i));
            }
        }
    }
    families.push(fe);

    let mut bs = FamilyCheck::new("binomial-sum");
    let cat2 = PowerSeries::<Z>::catalan(2 * n);
    for p in 1..=2 * n as i64 {
        for q in (p + 1) / 2..=p {
            if q < 1 || p > 2 * q - 1 {
                continue;
            }
            let mut sum = Z::from(0);
            for i in 0..q {
                sum += cat2.coeff(i as usize) * binomial::<Z>(p - 1 - 2 * i, q - 1 - i);
            }
            bs.expect(|| format!("p={p}, q={q}"), &sum, &binomial(p, q));
        }
    }
    families.push(bs);

    let c2 = &c * &c;
    let g = &c2 * &(&one - &c2.shift(1)).reciprocal().expect("unit constant term");
    let c_minus_one = &c - &one;
    let mut gs = FamilyCheck::new("g-series");
    for k in 0..=kmax {
        let lhs = &g * &c_minus_one.pow(k as u32);
        for i in 0..=n {
            let want = binomial::<Z>(2 * i as i64 + 1, (i + k + 1) as i64);
            gs.expect(|| format!("k={k} [x^{i}]"), &lhs.coeff(i), &want);
        }
    }
    families.push(gs);

    let mut ds = FamilyCheck::new("d-series");
    for k in 0..=kmax {
        let d = &g.shift(1) - &(&g * &c.pow(2 * k as u32 + 2)).shift(k + 2);
        for i in 1..=n {
            let closed: Z = count_descending_total(i, k);
            ds.expect(|| format!("k={k} [x^{i}]"), &d.coeff(i), &closed);
            let mut by_strict: Z = catalan(i);
            for j in 1..=k {
                by_strict += count_descending_strict::<Z>(i, j);
            }
            ds.expect(|| format!("k={k} n={i} strict sum"), &by_strict, &closed);
        }
    }
    families.push(ds);

    let mut ct = FamilyCheck::new("convolution-term");
    let xc = c.shift(1);
    let mut power = one.clone();
    for r in 0..=n {
        for m in r..=n {
            let closed: Z = catalan_convolution_term(m, r).expect("r <= m");
            ct.expect(|| format!("m={m}, r={r}"), &closed, &power.coeff(m));
        }
        power = &power * &xc;
    }
    families.push(ct);

    let mut ss = FamilyCheck::new("strict-series");
    for k in 0..=kmax {
        let gf = c.pow(2 * k as u32 + 2).shift(k + 1);
        for i in 1..=n {
            let closed: Z = count_descending_strict(i, k);
            ss.expect(|| format!("k={k} [x^{i}]"), &closed, &gf.coeff(i));
        }
    }
    families.push(ss);

    let mut fi = FamilyCheck::new("fine");
    let f = PowerSeries::<Z>::fine(n + 1);
    let cf = &c * &f.truncate(n);
    for i in 0..=n {
        fi.expect(
            || format!("U({i},1)"),
            table.ascending_starts_one(i, 1).unwrap(),
            &f.coeff(i + 1),
        );
        fi.expect(|| format!("I({i},1)"), table.ascending(i, 1).unwrap(), &cf.coeff(i));
    }
    families.push(fi);

    IdentityReport { order, families }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_values() {
        assert_eq!(catalan::<u64>(0), 1);
        assert_eq!(catalan::<u64>(4), 14);
        assert_eq!(catalan::<u64>(10), 16796);
        assert_eq!(count_ascending::<u64>(2, 1), 3);
        assert_eq!(count_ascending::<u64>(3, 1), 8);
        assert_eq!(count_ascending_starts_one::<u64>(3, 1), 6);
        assert_eq!(fine::<u64>(0), 1);
        assert_eq!(fine::<u64>(1), 0);
        assert_eq!(fine::<u64>(5), 18);
        assert_eq!(catalan_fine_convolution::<u64>(0), 1);
        assert_eq!(catalan_fine_convolution::<u64>(2), 3);
        assert_eq!(catalan_fine_convolution::<u64>(3), 8);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(count_descending_strict::<u64>(7, 2), 429);
        assert_eq!(count_descending_strict::<u64>(3, 1), 4);
        assert_eq!(count_descending_strict::<u64>(2, 2), 0);
        assert_eq!(count_descending_total::<u64>(3, 1), 9);
        assert_eq!(count_descending_total::<u64>(4, 1), 28);
        assert_eq!(count_descending_total::<u64>(5, 9), 126);
        assert_eq!(catalan_convolution_term::<u64>(7, 7).unwrap(), 1);
        assert_eq!(catalan_convolution_term::<u64>(5, 1).unwrap(), 14);
        assert!(catalan_convolution_term::<u64>(2, 3).is_err());
    }

    #[test]
    fn table_shape() {
        let t = CountTable::<BigInt>::new(20, 4);
        for n in 0..=20 {
            assert_eq!(t.ascending(n, 0).unwrap(), &catalan::<BigInt>(n));
            for k in 1..=4 {
                assert!(t.ascending(n, k) >= t.ascending(n, k - 1));
                assert!(t.ascending(n, k) >= t.ascending_starts_one(n, k));
            }
        }
        for k in 0..=4 {
            assert_eq!(t.ascending_starts_one(0, k).unwrap(), &BigInt::from(0));
        }
        assert!(t.ascending(21, 0).is_none());
    }

    #[test]
    fn identities_hold_through_order_30() {
        let report = verify_identities(30);
        assert!(report.passed(), "{report}");
        assert_eq!(report.family("binomial-sum").unwrap().failures.len(), 0);
    }
}
