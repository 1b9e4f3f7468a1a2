//! Text-level conversion between every encoding of a monotone k-Naples
//! preference. All conversions pass through the k-Dyck path, so any pair of
//! representations round-trips.

use std::fmt;
use std::str::FromStr;

use crate::catalan_objects::{self, Dissection, RootedNonCrossingPartition};
use crate::error::{parse_err, Error, Result};
use crate::parking::ParkingPreference;
use crate::paths::{self, DyckPath, KDyckPath, StepWord};
use crate::trees::{self, BinaryTree, FullBinaryTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Representation {
    /// Weakly decreasing preference, e.g. `6,6,6,5,5,2,1`.
    PrefDesc,
    /// Weakly increasing preference.
    PrefAsc,
    /// k-Dyck word.
    KDyck,
    /// Dyck word of the path with `k`-step margins.
    Dyck,
    /// Full binary tree of the margined Dyck word.
    FullTree,
    /// Binary tree of the margined Dyck word.
    Tree,
    /// Margined Dyck word reflected after its first return (strict only).
    StrictDyck,
    /// Tree of the reflected word (strict only).
    StrictTree,
    /// `(2k+2)`-in-`(n+k+1)` dissection (strict only).
    Dissection,
    /// `(2k+2)`-rooted non-crossing partition of `[n+k+1]` (strict only).
    Ncp,
}

impl Representation {
    pub const ALL: [Representation; 10] = [
        Representation::PrefDesc,
        Representation::PrefAsc,
        Representation::KDyck,
        Representation::Dyck,
        Representation::FullTree,
        Representation::Tree,
        Representation::StrictDyck,
        Representation::StrictTree,
        Representation::Dissection,
        Representation::Ncp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::PrefDesc => "pref-desc",
            Representation::PrefAsc => "pref-asc",
            Representation::KDyck => "kdyck",
            Representation::Dyck => "dyck",
            Representation::FullTree => "full-tree",
            Representation::Tree => "tree",
            Representation::StrictDyck => "strict-dyck",
            Representation::StrictTree => "strict-tree",
            Representation::Dissection => "dissection",
            Representation::Ncp => "ncp",
        }
    }

    /// Whether only strictly k-Naples preferences have this form.
    pub fn strict_only(self) -> bool {
        matches!(
            self,
            Representation::StrictDyck | Representation::StrictTree | Representation::Dissection | Representation::Ncp
        )
    }

    /// Parses `text` and returns its k-Dyck path.
    pub fn decode(self, text: &str, k: usize) -> Result<KDyckPath> {
        let text = text.trim();
        let path = match self {
            Representation::PrefDesc => paths::path_from_descending_pref(&text.parse::<ParkingPreference>()?)?,
            Representation::PrefAsc => paths::path_from_ascending_pref(&text.parse::<ParkingPreference>()?)?,
            Representation::KDyck => KDyckPath::new(text.parse::<StepWord>()?)?,
            Representation::Dyck => paths::unembed(&DyckPath::new(text.parse()?)?, k)?,
            Representation::FullTree => {
                paths::unembed(&trees::dyck_from_full_tree(&text.parse::<FullBinaryTree>()?), k)?
            }
            Representation::Tree => paths::unembed(&trees::dyck_from_tree(&text.parse::<BinaryTree>()?), k)?,
            Representation::StrictDyck => {
                let d = DyckPath::new(text.parse()?)?;
                strict_from_tree(&trees::tree_from_dyck(&d), k)?
            }
            Representation::StrictTree => strict_from_tree(&text.parse()?, k)?,
            Representation::Dissection => {
                let d: Dissection = text.parse()?;
                let n = (d.sides()).checked_sub(k + 1).ok_or_else(|| strict_size_err(k))?;
                trees::kdyck_from_strict_tree(&catalan_objects::strict_from_dissection(&d, n, k)?, n, k)?
            }
            Representation::Ncp => {
                let p: RootedNonCrossingPartition = text.parse()?;
                let n = p.ground_size().checked_sub(k + 1).ok_or_else(|| strict_size_err(k))?;
                trees::kdyck_from_strict_tree(&catalan_objects::strict_from_ncp(&p, n, k)?, n, k)?
            }
        };
        path.check_bound(k)?;
        Ok(path)
    }

    /// Writes the form of `path` (a k-Dyck path for this `k`).
    pub fn encode(self, path: &KDyckPath, k: usize) -> Result<String> {
        path.check_bound(k)?;
        let n = path.len();
        let strict_tree = || trees::strict_tree_from_kdyck(path, k);
        Ok(match self {
            Representation::PrefDesc => paths::descending_pref_from_path(path).to_string(),
            Representation::PrefAsc => paths::ascending_pref_from_path(path).to_string(),
            Representation::KDyck => path.word().to_string(),
            Representation::Dyck => paths::embed(path, k)?.word().to_string(),
            Representation::FullTree => trees::full_tree_from_dyck(&paths::embed(path, k)?).to_string(),
            Representation::Tree => trees::tree_from_dyck(&paths::embed(path, k)?).to_string(),
            Representation::StrictDyck => trees::dyck_from_tree(&strict_tree()?).word().to_string(),
            Representation::StrictTree => strict_tree()?.to_string(),
            Representation::Dissection => catalan_objects::dissection_from_strict(&strict_tree()?, n, k)?.to_string(),
            Representation::Ncp => catalan_objects::ncp_from_strict(&strict_tree()?, n, k)?.to_string(),
        })
    }
}

fn strict_size_err(k: usize) -> Error {
    Error::OutOfRange(format!("object too small for k = {k}"))
}

fn strict_from_tree(b: &BinaryTree, k: usize) -> Result<KDyckPath> {
    let n = b.size().checked_sub(k).ok_or_else(|| strict_size_err(k))?;
    trees::kdyck_from_strict_tree(b, n, k)
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| parse_err(s, "unknown representation"))
    }
}

/// Converts `text` from one representation to another.
pub fn convert(from: Representation, to: Representation, text: &str, k: usize) -> Result<String> {
    to.encode(&from.decode(text, k)?, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Representation::*;

    #[test]
    fn running_example() {
        let pref = "6,6,6,5,5,2,1";
        assert_eq!(convert(PrefDesc, KDyck, pref, 2).unwrap(), "UDUDDDUUDUUUDD");
        assert_eq!(convert(PrefDesc, PrefAsc, pref, 2).unwrap(), "1,2,5,5,6,6,6");
        assert_eq!(convert(PrefDesc, Dyck, pref, 2).unwrap(), "UUUDUDDDUUDUUUDDDD");
        assert_eq!(convert(PrefDesc, StrictDyck, pref, 2).unwrap(), "UUUDUDDDUUUUDDDUDD");
        assert!(convert(PrefDesc, KDyck, pref, 1).is_err());
    }

    #[test]
    fn every_pair_round_trips() {
        let k = 2;
        let path = PrefDesc.decode("6,6,6,5,5,2,1", k).unwrap();
        for from in Representation::ALL {
            let text = from.encode(&path, k).unwrap();
            assert_eq!(from.decode(&text, k).unwrap(), path, "{from}");
            for to in Representation::ALL {
                let there = convert(from, to, &text, k).unwrap();
                assert_eq!(convert(to, from, &there, k).unwrap(), text, "{from} -> {to}");
            }
        }
    }

    #[test]
    fn strict_forms_reject_non_strict() {
        // Parking function, so 0-Naples: not strictly 1-Naples.
        assert!(convert(PrefDesc, Ncp, "2,1", 1).is_err());
        assert_eq!(convert(PrefDesc, Tree, "2,1", 1).unwrap(), "((∅(∅∅))∅)");
        assert!("knot".parse::<Representation>().is_err());
    }
}
