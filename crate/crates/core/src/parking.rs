//! The k-Naples parking process.
//!
//! Cars arrive in order. A car whose preferred spot is taken first backs up,
//! checking at most `k` spots behind its preference nearest-first, and only
//! then drives forward. `k = 0` is the classical parking rule. Spots and cars
//! are 1-based everywhere, including the text forms.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// A sequence of preferred spots `a_1..a_n`, each in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParkingPreference(Vec<usize>);

impl ParkingPreference {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (i, &a) in entries.iter().enumerate() {
            if a == 0 || a > n {
                return Err(Error::EntryOutOfRange {
                    position: i + 1,
                    value: a,
                    n,
                });
            }
        }
        Ok(Self(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(entries.iter().all(|&a| a >= 1 && a <= entries.len()));
        Self(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    pub fn is_ascending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_descending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sorted_ascending(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable();
        Self(v)
    }

    pub fn sorted_descending(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for ParkingPreference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for ParkingPreference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| parse_err(s, format!("entry {:?}: {e}", part.trim())))
        })
        .collect()
}

/// Result of running the parking process.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParkingOutcome {
    /// Every car parked; entry `i` is the spot taken by car `i + 1`.
    Success(Vec<usize>),
    /// The simulation halted at the first car (1-based) that found no spot.
    Failure { failed_car: usize },
}

impl ParkingOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, Self::Success(_))
    }

    pub fn assignment(&self) -> Option<&[usize]> {
        match self {
            Self::Success(d) => Some(d),
            Self::Failure { .. } => None,
        }
    }

    pub fn failed_car(&self) -> Option<usize> {
        match self {
            Self::Success(_) => None,
            Self::Failure { failed_car } => Some(*failed_car),
        }
    }
}

impl fmt::Display for ParkingOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Success(d) if d.is_empty() => f.write_str("ok:"),
            Self::Success(d) => {
                f.write_str("ok: ")?;
                write_list(f, d)
            }
            Self::Failure { failed_car } => write!(f, "fail@{failed_car}"),
        }
    }
}

impl FromStr for ParkingOutcome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("fail@") {
            let failed_car = rest.parse().map_err(|_| parse_err(s, "bad car index"))?;
            return Ok(Self::Failure { failed_car });
        }
        match t.strip_prefix("ok:") {
            Some(rest) => Ok(Self::Success(parse_list(rest)?)),
            None => Err(parse_err(s, "expected \"ok: ...\" or \"fail@i\"")),
        }
    }
}

/// A lot in which the first `i` cars have already parked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilledPreference {
    parked: Vec<usize>,
    remaining: Vec<usize>,
}

impl FilledPreference {
    pub fn new(parked: Vec<usize>, remaining: Vec<usize>) -> Result<Self> {
        let n = parked.len() + remaining.len();
        let mut seen = vec![false; n + 1];
        for (i, &p) in parked.iter().enumerate() {
            if p == 0 || p > n {
                return Err(Error::EntryOutOfRange {
                    position: i + 1,
                    value: p,
                    n,
                });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(parse_err(&format!("{parked:?}"), format!("spot {p} is occupied twice")));
            }
        }
        for (i, &a) in remaining.iter().enumerate() {
            if a == 0 || a > n {
                return Err(Error::EntryOutOfRange {
                    position: parked.len() + i + 1,
                    value: a,
                    n,
                });
            }
        }
        Ok(Self { parked, remaining })
    }

    pub fn parked(&self) -> &[usize] {
        &self.parked
    }

    pub fn remaining(&self) -> &[usize] {
        &self.remaining
    }

    pub fn len(&self) -> usize {
        self.parked.len() + self.remaining.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Spot chosen by a car preferring `pref` under the k-Naples rule, if any.
#[inline]
fn choose_spot(occupied: &[bool], pref: usize, k: usize) -> Option<usize> {
    let n = occupied.len() - 1;
    if !occupied[pref] {
        return Some(pref);
    }
    let lowest = pref.saturating_sub(k).max(1);
    (lowest..pref).rev().chain(pref + 1..=n).find(|&s| !occupied[s])
}

fn run(occupied: &mut [bool], assignment: &mut Vec<usize>, prefs: &[usize], k: usize) -> ParkingOutcome {
    for &a in prefs {
        match choose_spot(occupied, a, k) {
            Some(s) => {
                occupied[s] = true;
                assignment.push(s);
            }
            None => {
                return ParkingOutcome::Failure {
                    failed_car: assignment.len() + 1,
                }
            }
        }
    }
    ParkingOutcome::Success(std::mem::take(assignment))
}

/// Runs the k-Naples process for `pref`.
pub fn park(pref: &ParkingPreference, k: usize) -> ParkingOutcome {
    let n = pref.len();
    let mut occupied = vec![false; n + 1];
    let mut assignment = Vec::with_capacity(n);
    run(&mut occupied, &mut assignment, pref.entries(), k)
}

/// Continues the process from a partially filled lot. On success the
/// assignment lists the pre-parked spots followed by the new ones.
pub fn park_filled(fp: &FilledPreference, k: usize) -> ParkingOutcome {
    let n = fp.len();
    let mut occupied = vec![false; n + 1];
    for &p in fp.parked() {
        occupied[p] = true;
    }
    let mut assignment = Vec::with_capacity(n);
    assignment.extend_from_slice(fp.parked());
    run(&mut occupied, &mut assignment, fp.remaining(), k)
}

/// Success test without building the assignment.
pub fn is_k_naples(pref: &ParkingPreference, k: usize) -> bool {
    let n = pref.len();
    let mut occupied = vec![false; n + 1];
    pref.entries().iter().all(|&a| match choose_spot(&occupied, a, k) {
        Some(s) => {
            occupied[s] = true;
            true
        }
        None => false,
    })
}

/// Smallest `k` for which `pref` parks. Always at most `n - 1`.
pub fn minimal_k(pref: &ParkingPreference) -> Result<usize> {
    let n = pref.len();
    if n == 0 {
        return Err(Error::OutOfRange("minimal k of an empty preference".into()));
    }
    // Success is monotone in k, so binary search over 0..=n-1.
    let (mut lo, mut hi) = (0, n - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if is_k_naples(pref, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// Whether `pref` is k-Naples but not (k-1)-Naples.
pub fn is_strictly_k_naples(pref: &ParkingPreference, k: usize) -> bool {
    is_k_naples(pref, k) && (k == 0 || !is_k_naples(pref, k - 1))
}

/// Whether every rearrangement of `pref` is k-Naples. Only the ascending
/// rearrangement is simulated.
pub fn rearrangements_all_k_naples(pref: &ParkingPreference, k: usize) -> bool {
    is_k_naples(&pref.sorted_ascending(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> ParkingPreference {
        ParkingPreference::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classical_rule() {
        assert_eq!(park(&p(&[2, 2, 1, 4]), 0), ParkingOutcome::Success(vec![2, 3, 1, 4]));
    }

    #[test]
    fn running_example() {
        let pref = p(&[6, 6, 6, 5, 5, 2, 1]);
        assert_eq!(park(&pref, 2), ParkingOutcome::Success(vec![6, 5, 4, 3, 7, 2, 1]));
        assert_eq!(park(&pref, 1), ParkingOutcome::Failure { failed_car: 5 });
        assert_eq!(minimal_k(&pref), Ok(2));
        assert!(is_strictly_k_naples(&pref, 2));
    }

    #[test]
    fn empty_lot() {
        let empty = p(&[]);
        assert_eq!(park(&empty, 0), ParkingOutcome::Success(vec![]));
        assert!(is_k_naples(&empty, 0));
        assert!(minimal_k(&empty).is_err());
        assert_eq!(park(&empty, 0).to_string(), "ok:");
    }

    #[test]
    fn membership() {
        assert!(is_k_naples(&p(&[1, 2, 5, 5, 6, 6, 6]), 3));
        assert!(!is_k_naples(&p(&[1, 2, 5, 5, 6, 6, 6]), 2));
        assert!(is_k_naples(&p(&[1, 1, 1]), 0));
    }

    #[test]
    fn minimal_k_values() {
        assert_eq!(minimal_k(&p(&[1, 2, 3, 4])), Ok(0));
        assert_eq!(minimal_k(&p(&[1, 3, 5, 5, 6, 6])), Ok(4));
    }

    #[test]
    fn rearrangement_closure() {
        assert!(!rearrangements_all_k_naples(&p(&[6, 6, 5, 5, 3, 1]), 2));
        assert!(rearrangements_all_k_naples(&p(&[1, 3, 3, 5, 6, 6]), 2));
        assert!(rearrangements_all_k_naples(&p(&[1]), 0));
        // The descending order parks while a shuffle of it does not.
        assert!(is_k_naples(&p(&[6, 6, 5, 5, 3, 1]), 2));
        assert!(!is_k_naples(&p(&[3, 5, 1, 6, 6, 5]), 2));
    }

    #[test]
    fn filled_lot() {
        let fp = FilledPreference::new(vec![6, 5, 4, 3], vec![5, 2, 1]).unwrap();
        assert_eq!(park_filled(&fp, 2), ParkingOutcome::Success(vec![6, 5, 4, 3, 7, 2, 1]));
        let fp = FilledPreference::new(vec![1], vec![]).unwrap();
        assert!(park_filled(&fp, 0).is_success());
        let fp = FilledPreference::new(vec![2, 3], vec![3]).unwrap();
        assert_eq!(park_filled(&fp, 0), ParkingOutcome::Failure { failed_car: 3 });
    }

    #[test]
    fn filled_validation() {
        assert!(FilledPreference::new(vec![2, 2], vec![1]).is_err());
        assert!(FilledPreference::new(vec![4], vec![1]).is_err());
        assert!(FilledPreference::new(vec![1], vec![3]).is_err());
    }

    #[test]
    fn k_beyond_n_is_clamped() {
        let pref = p(&[3, 3, 3]);
        assert_eq!(park(&pref, 2), park(&pref, 50));
    }

    #[test]
    fn text_forms() {
        let pref: ParkingPreference = "6, 6,6,5,5,2,1".parse().unwrap();
        assert_eq!(pref.to_string(), "6,6,6,5,5,2,1");
        assert!("0,1".parse::<ParkingPreference>().is_err());
        assert!("1,x".parse::<ParkingPreference>().is_err());
        assert_eq!("".parse::<ParkingPreference>().unwrap().len(), 0);
        let out = park(&pref, 2);
        assert_eq!(out.to_string(), "ok: 6,5,4,3,7,2,1");
        assert_eq!(out.to_string().parse::<ParkingOutcome>().unwrap(), out);
        assert_eq!(
            "fail@5".parse::<ParkingOutcome>().unwrap(),
            ParkingOutcome::Failure { failed_car: 5 }
        );
    }
}
