//! Exhaustive enumeration of preferences, filtered by direct simulation.
//!
//! Everything here is decided by [`parking::park`] alone, so the counts
//! stay independent of the path, tree and series code they are used to
//! check.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{parse_err, Error, Result};
use crate::parking::{self, ParkingPreference};

/// Which preferences of length `n` are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    All,
    Ascending,
    Descending,
}

/// Which generated preferences are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Any,
    KNaples,
    /// k-Naples but not (k-1)-Naples.
    StrictlyKNaples,
    /// Every distinct rearrangement is k-Naples.
    RearrangementClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumerationSpec {
    pub n: usize,
    pub shape: Shape,
    pub k: usize,
    pub predicate: Predicate,
}

impl EnumerationSpec {
    pub fn new(n: usize, shape: Shape, k: usize, predicate: Predicate) -> Self {
        Self { n, shape, k, predicate }
    }

    /// Every preference of the given shape.
    pub fn unfiltered(n: usize, shape: Shape) -> Self {
        Self::new(n, shape, 0, Predicate::Any)
    }

    pub fn accepts(&self, pref: &ParkingPreference) -> bool {
        match self.predicate {
            Predicate::Any => true,
            Predicate::KNaples => parking::park(pref, self.k).is_success(),
            Predicate::StrictlyKNaples => {
                parking::park(pref, self.k).is_success()
                    && (self.k == 0 || !parking::park(pref, self.k - 1).is_success())
            }
            Predicate::RearrangementClosed => {
                distinct_rearrangements(pref.entries()).all(|p| parking::park(&p, self.k).is_success())
            }
        }
    }
}

/// Largest `n` the oracle will sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Sweeps over all `n^n` preferences.
    pub all: usize,
    /// Sweeps over ascending or descending preferences.
    pub monotone: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { all: 7, monotone: 12 }
    }
}

impl Caps {
    /// Name of the environment variable that overrides both caps.
    pub const ENV: &'static str = "NAPLES_MAX_N";

    /// Default caps, or `NAPLES_MAX_N` for both when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV) {
            Ok(v) => {
                let n = v
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(&v, format!("{} must be a number", Self::ENV)))?;
                Ok(Self { all: n, monotone: n })
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn limit(&self, shape: Shape) -> usize {
        match shape {
            Shape::All => self.all,
            Shape::Ascending | Shape::Descending => self.monotone,
        }
    }

    pub fn check(&self, spec: &EnumerationSpec) -> Result<()> {
        let cap = self.limit(spec.shape);
        if spec.n > cap {
            return Err(Error::CapExceeded { n: spec.n, cap });
        }
        Ok(())
    }
}

/// Lexicographic walk over the preferences of one shape.
#[derive(Debug, Clone)]
pub struct Preferences {
    n: usize,
    shape: Shape,
    current: Option<Vec<usize>>,
}

impl Preferences {
    pub fn new(n: usize, shape: Shape) -> Self {
        Self {
            n,
            shape,
            current: Some(vec![1; n]),
        }
    }

    fn upper(&self, v: &[usize], i: usize) -> usize {
        match self.shape {
            Shape::Descending if i > 0 => v[i - 1],
            _ => self.n,
        }
    }
}

impl Iterator for Preferences {
    type Item = ParkingPreference;

    fn next(&mut self) -> Option<ParkingPreference> {
        let out = self.current.clone()?;
        let mut v = out.clone();
        let pivot = (0..v.len()).rev().find(|&i| v[i] < self.upper(&v, i));
        self.current = pivot.map(|i| {
            v[i] += 1;
            for j in i + 1..v.len() {
                v[j] = if self.shape == Shape::Ascending { v[i] } else { 1 };
            }
            v
        });
        Some(ParkingPreference::new_unchecked(out))
    }
}

/// Distinct orderings of a multiset, in lexicographic order.
pub fn distinct_rearrangements(entries: &[usize]) -> impl Iterator<Item = ParkingPreference> {
    let mut next = Some({
        let mut v = entries.to_vec();
        v.sort_unstable();
        v
    });
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut v = cur.clone();
        if next_permutation(&mut v) {
            next = Some(v);
        }
        Some(ParkingPreference::new_unchecked(cur))
    })
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Preferences matching `spec`, in lexicographic order, under the default
/// caps.
pub fn enumerate(spec: &EnumerationSpec) -> Result<impl Iterator<Item = ParkingPreference>> {
    enumerate_with(spec, &Caps::default())
}

pub fn enumerate_with(spec: &EnumerationSpec, caps: &Caps) -> Result<impl Iterator<Item = ParkingPreference>> {
    caps.check(spec)?;
    let spec = *spec;
    Ok(Preferences::new(spec.n, spec.shape).filter(move |p| spec.accepts(p)))
}

/// Number of preferences matching `spec`, under the default caps.
pub fn brute_count(spec: &EnumerationSpec) -> Result<u64> {
    brute_count_with(spec, &Caps::default())
}

pub fn brute_count_with(spec: &EnumerationSpec, caps: &Caps) -> Result<u64> {
    caps.check(spec)?;
    let spec = *spec;
    Ok(Preferences::new(spec.n, spec.shape)
        .par_bridge()
        .filter(|p| spec.accepts(p))
        .count() as u64)
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::All => "all",
            Shape::Ascending => "ascending",
            Shape::Descending => "descending",
        })
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Shape::All),
            "ascending" | "asc" => Ok(Shape::Ascending),
            "descending" | "desc" => Ok(Shape::Descending),
            _ => Err(parse_err(s, "expected all, ascending or descending")),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Predicate::Any => "any",
            Predicate::KNaples => "k-naples",
            Predicate::StrictlyKNaples => "strictly-k-naples",
            Predicate::RearrangementClosed => "rearrangement-closed",
        })
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Predicate::Any),
            "k-naples" => Ok(Predicate::KNaples),
            "strictly-k-naples" | "strict" => Ok(Predicate::StrictlyKNaples),
            "rearrangement-closed" => Ok(Predicate::RearrangementClosed),
            _ => Err(parse_err(
                s,
                "expected any, k-naples, strictly-k-naples or rearrangement-closed",
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(spec: EnumerationSpec) -> Vec<String> {
        enumerate(&spec).unwrap().map(|p| p.to_string()).collect()
    }

    #[test]
    fn orders() {
        assert_eq!(
            lists(EnumerationSpec::unfiltered(2, Shape::All)),
            ["1,1", "1,2", "2,1", "2,2"]
        );
        assert_eq!(
            lists(EnumerationSpec::unfiltered(3, Shape::Descending)),
            ["1,1,1", "2,1,1", "2,2,1", "2,2,2", "3,1,1", "3,2,1", "3,2,2", "3,3,1", "3,3,2", "3,3,3"]
        );
        assert_eq!(lists(EnumerationSpec::unfiltered(3, Shape::Ascending)).len(), 10);
        assert_eq!(lists(EnumerationSpec::unfiltered(0, Shape::All)), [""]);
    }

    #[test]
    fn counts() {
        let count = |n, shape, k, predicate| brute_count(&EnumerationSpec::new(n, shape, k, predicate)).unwrap();
        assert_eq!(count(3, Shape::Descending, 1, Predicate::KNaples), 9);
        assert_eq!(count(4, Shape::Descending, 1, Predicate::KNaples), 28);
        assert_eq!(count(7, Shape::Descending, 2, Predicate::StrictlyKNaples), 429);
        assert_eq!(count(0, Shape::All, 0, Predicate::KNaples), 1);
        assert_eq!(count(3, Shape::All, 0, Predicate::KNaples), 16);
        assert_eq!(count(2, Shape::Ascending, 1, Predicate::KNaples), 3);
    }

    #[test]
    fn caps() {
        let spec = EnumerationSpec::unfiltered(8, Shape::All);
        assert_eq!(brute_count(&spec), Err(Error::CapExceeded { n: 8, cap: 7 }));
        assert!(enumerate(&EnumerationSpec::unfiltered(13, Shape::Ascending)).is_err());
        assert!(enumerate(&EnumerationSpec::unfiltered(12, Shape::Ascending)).is_ok());
    }

    #[test]
    fn multiset_permutations() {
        let all: Vec<String> = distinct_rearrangements(&[2, 1, 2]).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1,2,2", "2,1,2", "2,2,1"]);
        assert_eq!(distinct_rearrangements(&[]).count(), 1);
        assert_eq!(distinct_rearrangements(&[1, 2, 3, 4]).count(), 24);
    }
}
