//! Up/down lattice paths: Dyck paths, k-Dyck paths and the maps between
//! them and monotone parking preferences.
//!
//! Heights follow one convention throughout: `height(t)` is `#U - #D` over
//! the first `t` steps, so `height(0) = 0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::parking::ParkingPreference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flipped(self) -> Self {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A word over `{U, D}`. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        Self(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ups(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::Up).count()
    }

    /// `heights()[t]` is the height after `t` steps; length is `len() + 1`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.0.len() + 1);
        let mut cur = 0;
        h.push(cur);
        for s in &self.0 {
            cur += s.delta();
            h.push(cur);
        }
        h
    }

    pub fn min_height(&self) -> i64 {
        self.heights().into_iter().min().unwrap_or(0)
    }

    fn is_balanced(&self) -> bool {
        2 * self.ups() == self.len()
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(parse_err(s, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StepWord)
    }
}

impl FromIterator<Step> for StepWord {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// A balanced word whose every prefix has height at least zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath(StepWord);

impl DyckPath {
    pub fn new(word: StepWord) -> Result<Self> {
        if !word.is_balanced() {
            return Err(Error::InvalidPath(format!("{word} has unequal U and D counts")));
        }
        if word.min_height() < 0 {
            return Err(Error::InvalidPath(format!("{word} goes below height 0")));
        }
        Ok(Self(word))
    }

    pub fn word(&self) -> &StepWord {
        &self.0
    }

    /// Number of up steps.
    pub fn len(&self) -> usize {
        self.0.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Step index (1-based) of the first return to height 0, if it happens
    /// strictly before the final step.
    pub fn first_interior_return(&self) -> Option<usize> {
        let h = self.0.heights();
        let last = self.0.len();
        (1..last).find(|&t| h[t] == 0)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

/// A balanced word ending in `D` (when non-empty). Its geometric bound is the
/// deepest point reached below the axis; it is a k-Dyck path for every
/// `k >= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KDyckPath {
    word: StepWord,
    bound: usize,
}

impl KDyckPath {
    pub fn new(word: StepWord) -> Result<Self> {
        if !word.is_balanced() {
            return Err(Error::InvalidPath(format!("{word} has unequal U and D counts")));
        }
        if word.steps().last() == Some(&Step::Up) {
            return Err(Error::InvalidPath(format!("{word} does not end with a down step")));
        }
        let bound = (-word.min_height()) as usize;
        Ok(Self { word, bound })
    }

    /// Like [`KDyckPath::new`] but also rejects paths dipping below `-k`.
    pub fn with_bound(word: StepWord, k: usize) -> Result<Self> {
        let p = Self::new(word)?;
        p.check_bound(k)?;
        Ok(p)
    }

    pub fn check_bound(&self, k: usize) -> Result<()> {
        if self.bound > k {
            return Err(Error::BoundExceeded { deficit: self.bound, k });
        }
        Ok(())
    }

    pub fn word(&self) -> &StepWord {
        &self.word
    }

    /// Maximum depth below the axis.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.word.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for KDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl FromStr for KDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

/// `a_i = 1 + (number of D steps before the i-th U step)`.
pub fn ascending_pref_from_path(p: &KDyckPath) -> ParkingPreference {
    let mut downs = 0;
    let mut entries = Vec::with_capacity(p.len());
    for s in p.word().steps() {
        match s {
            Step::Up => entries.push(downs + 1),
            Step::Down => downs += 1,
        }
    }
    ParkingPreference::new_unchecked(entries)
}

/// Inverse of [`ascending_pref_from_path`].
pub fn path_from_ascending_pref(pref: &ParkingPreference) -> Result<KDyckPath> {
    if !pref.is_ascending() {
        return Err(Error::NotMonotone("increasing"));
    }
    let n = pref.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut downs = 0;
    for &a in pref.entries() {
        while downs + 1 < a {
            steps.push(Step::Down);
            downs += 1;
        }
        steps.push(Step::Up);
    }
    steps.resize(2 * n, Step::Down);
    KDyckPath::new(StepWord(steps))
}

/// Reverse of the ascending preference read off the path.
pub fn descending_pref_from_path(p: &KDyckPath) -> ParkingPreference {
    ascending_pref_from_path(p).reversed()
}

/// Inverse of [`descending_pref_from_path`].
pub fn path_from_descending_pref(pref: &ParkingPreference) -> Result<KDyckPath> {
    if !pref.is_descending() {
        return Err(Error::NotMonotone("decreasing"));
    }
    path_from_ascending_pref(&pref.reversed())
}

/// Recovery test on the k-Dyck path of an ascending preference: every down
/// step that takes the path from height `>= 0` to below zero must be
/// followed, within the half-open window `(s, s + 2k]`, by a point at
/// height `>= 1`.
pub fn ascending_is_k_naples_path(p: &KDyckPath, k: usize) -> bool {
    recovers_within(p.word(), 0, k, p.word().len())
}

/// Shared scan: crossing below `axis` at step `s <= last_checked` must be
/// answered by height `>= axis + 1` within `2k` steps.
fn recovers_within(word: &StepWord, axis: i64, k: usize, last_checked: usize) -> bool {
    let h = word.heights();
    let len = word.len();
    (1..=last_checked.min(len)).all(|s| {
        let crosses = h[s - 1] >= axis && h[s] < axis;
        !crosses || (s + 1..=(s + 2 * k).min(len)).any(|t| h[t] > axis)
    })
}

/// Same criterion read on the embedded Dyck path: the axis is the line
/// `y = k`, and the final `k + 1` down steps are exempt.
pub fn embedded_ascending_criterion(d: &DyckPath, k: usize) -> bool {
    let len = d.word().len();
    recovers_within(d.word(), k as i64, k, len.saturating_sub(k + 1))
}

/// Prepends `k` up steps and appends `k` down steps.
pub fn embed(p: &KDyckPath, k: usize) -> Result<DyckPath> {
    p.check_bound(k)?;
    let mut steps = Vec::with_capacity(p.word().len() + 2 * k);
    steps.extend(std::iter::repeat_n(Step::Up, k));
    steps.extend_from_slice(p.word().steps());
    steps.extend(std::iter::repeat_n(Step::Down, k));
    Ok(DyckPath(StepWord(steps)))
}

/// Whether `d` starts with `k` up steps and ends with `k + 1` down steps
/// (only `k` when `d` has length exactly `k`).
pub fn has_embedding_margins(d: &DyckPath, k: usize) -> bool {
    let s = d.word().steps();
    let tail = if d.len() == k { k } else { k + 1 };
    s.len() >= k + tail && s[..k].iter().all(|&x| x == Step::Up) && s[s.len() - tail..].iter().all(|&x| x == Step::Down)
}

/// Inverse of [`embed`].
pub fn unembed(d: &DyckPath, k: usize) -> Result<KDyckPath> {
    if d.len() < k || !has_embedding_margins(d, k) {
        return Err(Error::InvalidPath(format!(
            "{d} lacks the {k} leading U and {} trailing D steps",
            k + 1
        )));
    }
    let s = d.word().steps();
    KDyckPath::with_bound(StepWord(s[k..s.len() - k].to_vec()), k)
}

/// Whether the path touches `y = -k`, i.e. is k-Dyck but not (k-1)-Dyck.
pub fn is_strictly_k(p: &KDyckPath, k: usize) -> bool {
    p.bound() == k
}

/// Keeps the path up to its first return to the axis, then reverses the
/// remaining suffix and swaps U with D. An involution on Dyck paths that
/// start with `k` up steps and return to the axis before their end.
pub fn reflect_after_first_return(d: &DyckPath, k: usize) -> Result<DyckPath> {
    let s = d.word().steps();
    if s.len() < k || s[..k].iter().any(|&x| x != Step::Up) {
        return Err(Error::InvalidPath(format!("{d} does not start with {k} up steps")));
    }
    let r = d
        .first_interior_return()
        .ok_or_else(|| Error::InvalidPath(format!("{d} has no return to the axis before its end")))?;
    let mut out = s[..r].to_vec();
    out.extend(s[r..].iter().rev().map(|x| x.flipped()));
    Ok(DyckPath(StepWord(out)))
}

/// ASCII staircase, top row first. `/` is an up step, `\` a down step.
/// When the path dips below the axis, the first row under it is marked
/// with `>` in the margin.
pub fn render_ascii(word: &StepWord) -> String {
    if word.is_empty() {
        return String::from("(empty path)\n");
    }
    let h = word.heights();
    let top = *h.iter().max().unwrap();
    let bottom = *h.iter().min().unwrap();
    let rows = (top - bottom).max(1) as usize;
    let mut grid = vec![vec![' '; word.len()]; rows];
    for (t, s) in word.steps().iter().enumerate() {
        // a step between heights y and y+1 lives in row (top - 1 - y)
        let (y, c) = match s {
            Step::Up => (h[t], '/'),
            Step::Down => (h[t + 1], '\\'),
        };
        grid[(top - 1 - y) as usize][t] = c;
    }
    let mut out = String::new();
    for (r, row) in grid.iter().enumerate() {
        let y = top - 1 - r as i64;
        out.push(if bottom < 0 && y == -1 { '>' } else { ' ' });
        out.extend(row.iter());
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}

/// Minimal SVG document with the path drawn as a polyline and the axis as a
/// dashed line.
pub fn render_svg(word: &StepWord) -> String {
    const CELL: i64 = 20;
    let h = word.heights();
    let top = *h.iter().max().unwrap();
    let bottom = *h.iter().min().unwrap();
    let width = (word.len() as i64).max(1) * CELL + 2 * CELL;
    let height = (top - bottom).max(1) * CELL + 2 * CELL;
    let pt = |t: usize, y: i64| (CELL + t as i64 * CELL, CELL + (top - y) * CELL);
    let points: Vec<String> = h
        .iter()
        .enumerate()
        .map(|(t, &y)| {
            let (px, py) = pt(t, y);
            format!("{px},{py}")
        })
        .collect();
    let (ax0, ay) = pt(0, 0);
    let (ax1, _) = pt(word.len(), 0);
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\">\n\
         <line x1=\"{ax0}\" y1=\"{ay}\" x2=\"{ax1}\" y2=\"{ay}\" stroke=\"red\" stroke-dasharray=\"4\"/>\n\
         <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n\
         </svg>\n",
        points.join(" ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kd(s: &str) -> KDyckPath {
        s.parse().unwrap()
    }

    fn dy(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn pref(v: &[usize]) -> ParkingPreference {
        ParkingPreference::new(v.to_vec()).unwrap()
    }

    #[test]
    fn preference_from_path() {
        assert_eq!(ascending_pref_from_path(&kd("UDDUUDDUDUUD")), pref(&[1, 3, 3, 5, 6, 6]));
        assert_eq!(
            ascending_pref_from_path(&kd("UDUDDDUUDUUUDD")),
            pref(&[1, 2, 5, 5, 6, 6, 6])
        );
        assert_eq!(ascending_pref_from_path(&kd("UUDD")), pref(&[1, 1]));
    }

    #[test]
    fn path_from_preference() {
        let p = path_from_ascending_pref(&pref(&[1, 3, 3, 5, 6, 6])).unwrap();
        assert_eq!(p.to_string(), "UDDUUDDUDUUD");
        assert_eq!(p.bound(), 1);
        let p = path_from_ascending_pref(&pref(&[1, 1, 2])).unwrap();
        assert_eq!(p.to_string(), "UUDUDD");
        assert_eq!(p.bound(), 0);
        assert_eq!(path_from_ascending_pref(&pref(&[1])).unwrap().to_string(), "UD");
        assert!(path_from_ascending_pref(&pref(&[2, 1])).is_err());
    }

    #[test]
    fn recovery_criterion() {
        let p = kd("UDDUUDDUDUUD");
        assert!(ascending_is_k_naples_path(&p, 2));
        assert!(!ascending_is_k_naples_path(&p, 1));
        assert!(!ascending_is_k_naples_path(&kd("UDDUDDUUDUUD"), 2));
        for k in 0..4 {
            assert!(ascending_is_k_naples_path(&kd("UUDUDD"), k));
        }
    }

    #[test]
    fn embedding() {
        let p = kd("UDUDDDUUDUUUDD");
        let d = embed(&p, 2).unwrap();
        assert_eq!(d.to_string(), "UUUDUDDDUUDUUUDDDD");
        assert_eq!(unembed(&d, 2).unwrap(), p);
        assert_eq!(embed(&kd(""), 1).unwrap().to_string(), "UD");
        assert_eq!(embed(&kd("UD"), 1).unwrap().to_string(), "UUDD");
        assert!(embed(&p, 1).is_err());
    }

    #[test]
    fn unembedding() {
        assert_eq!(unembed(&dy("UUUDDD"), 3).unwrap().to_string(), "");
        // U^k D^k is the image of the empty path, so it must unembed.
        assert_eq!(unembed(&dy("UUDD"), 2).unwrap().to_string(), "");
        assert!(unembed(&dy("UUDUDD"), 2).is_err());
        assert!(unembed(&dy("UDUD"), 1).is_err());
    }

    #[test]
    fn strictness() {
        let p = kd("UDUDDDUUDUUUDD");
        assert!(is_strictly_k(&p, 2));
        assert!(!is_strictly_k(&p, 3));
        for k in 1..4 {
            assert!(!is_strictly_k(&kd("UUDD"), k));
        }
    }

    #[test]
    fn reflection() {
        let d = dy("UUUDUDDDUUDUUUDDDD");
        let r = reflect_after_first_return(&d, 2).unwrap();
        assert_eq!(r.to_string(), "UUUDUDDDUUUUDDDUDD");
        assert_eq!(reflect_after_first_return(&r, 2).unwrap(), d);
        let fixed = dy("UUDDUUDD");
        assert_eq!(reflect_after_first_return(&fixed, 1).unwrap(), fixed);
        assert!(reflect_after_first_return(&dy("UUDD"), 1).is_err());
    }

    #[test]
    fn descending_preferences() {
        assert_eq!(
            descending_pref_from_path(&kd("UDUDDDUUDUUUDD")),
            pref(&[6, 6, 6, 5, 5, 2, 1])
        );
        assert_eq!(descending_pref_from_path(&kd("UUDD")), pref(&[1, 1]));
        assert_eq!(descending_pref_from_path(&kd("UDUD")), pref(&[2, 1]));
        assert_eq!(
            path_from_descending_pref(&pref(&[6, 6, 6, 5, 5, 2, 1])).unwrap(),
            kd("UDUDDDUUDUUUDD")
        );
    }

    #[test]
    fn kdyck_validation() {
        assert!("UDU".parse::<KDyckPath>().is_err());
        assert!("DU".parse::<KDyckPath>().is_err());
        assert!("UXD".parse::<StepWord>().is_err());
        assert!(KDyckPath::with_bound("DDUU D".replace(' ', "").parse().unwrap(), 1).is_err());
        assert_eq!("DUDU".parse::<StepWord>().unwrap().min_height(), -1);
    }

    #[test]
    fn ascii_render() {
        let art = render_ascii(&"UUDD".parse().unwrap());
        assert_eq!(
            art,
            "  /\\
 /  \\
"
        );
        let art = render_ascii(&"DU".parse().unwrap());
        assert_eq!(
            art,
            ">\\/
"
        );
        assert!(render_svg(&"UD".parse().unwrap()).contains("polyline"));
    }
}
