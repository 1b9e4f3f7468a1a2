//! Registry of exhaustive checks: each entry compares one structural or
//! counting statement against direct simulation at a chosen scale.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::catalan_objects::{self, Dissection, RootedNonCrossingPartition};
use crate::enumeration::{self, CountTable};
use crate::error::{Error, Result};
use crate::oracle::{self, Caps, EnumerationSpec, Predicate, Preferences, Shape};
use crate::parking::{self, FilledPreference, ParkingPreference};
use crate::paths::{self, DyckPath, KDyckPath, Step, StepWord};
use crate::trees::{self, BinaryTree};

/// A registered check and the scale it runs at by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub default_n: usize,
    pub default_k: usize,
}

const fn info(id: &'static str, statement: &'static str, default_n: usize, default_k: usize) -> TheoremInfo {
    TheoremInfo {
        id,
        statement,
        default_n,
        default_k,
    }
}

pub const THEOREMS: &[TheoremInfo] = &[
    info(
        "rearrangement",
        "all rearrangements park iff the ascending one does",
        6,
        3,
    ),
    info(
        "filled-modification",
        "moving one parked car to an earlier free spot keeps the rest parkable",
        6,
        3,
    ),
    info(
        "descending-path-bijection",
        "descending k-Naples preferences are the k-Dyck paths",
        8,
        3,
    ),
    info(
        "ascending-path",
        "ascending preferences park iff their path recovers within 2k steps",
        8,
        3,
    ),
    info(
        "embedding",
        "k-Dyck paths embed into Dyck paths with k-step margins",
        8,
        3,
    ),
    info(
        "embedded-ascending",
        "the recovery test reads the same on the embedded path",
        8,
        3,
    ),
    info(
        "strict-path",
        "a descending preference is strictly k-Naples iff its path touches -k",
        8,
        3,
    ),
    info(
        "tree-bijection",
        "Dyck paths, full binary trees and binary trees correspond",
        8,
        0,
    ),
    info(
        "traversal-heights",
        "path heights along the tree traversal follow diagonal depth",
        8,
        0,
    ),
    info(
        "ascending-tree",
        "the recovery test read on the tree of the embedded path",
        8,
        3,
    ),
    info(
        "strict-tree",
        "strict descending preferences are the trees with the strict spine",
        8,
        3,
    ),
    info(
        "ascending-recurrence",
        "I(n,k) and U(n,k) recurrences match simulation",
        8,
        4,
    ),
    info("fine", "U(n,1) is a Fine number", 12, 1),
    info("catalan-fine", "I(n,1) is the Catalan-Fine convolution", 12, 1),
    info("strict-count", "strict descending count (k+1)/n binom(2n, n+k+1)", 8, 4),
    info(
        "total-count",
        "descending count binom(2n-1, n) - binom(2n-1, n+k+1)",
        8,
        4,
    ),
    info("identities", "generating-function identities, coefficientwise", 30, 4),
    info(
        "dissection",
        "strict descending preferences are (2k+2)-in-(n+k+1) dissections",
        7,
        2,
    ),
    info(
        "noncrossing",
        "strict descending preferences are (2k+2)-rooted non-crossing partitions",
        7,
        2,
    ),
];

pub fn theorem_info(id: &str) -> Result<&'static TheoremInfo> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: &'static str,
    pub n_max: usize,
    pub k_max: usize,
    pub checked: u64,
    /// Sorted.
    pub counterexamples: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} n<={} k<={} checked={}",
            self.id, self.n_max, self.k_max, self.checked
        )?;
        const SHOWN: usize = 10;
        for c in self.counterexamples.iter().take(SHOWN) {
            write!(f, "\n  {c}")?;
        }
        if self.counterexamples.len() > SHOWN {
            write!(f, "\n  ... {} more", self.counterexamples.len() - SHOWN)?;
        }
        Ok(())
    }
}

/// Runs a registered check under the default caps.
pub fn check_theorem(id: &str, n_max: usize, k_max: usize) -> Result<TheoremReport> {
    check_theorem_with(id, n_max, k_max, &Caps::default())
}

/// Runs a registered check at its default scale.
pub fn check_theorem_default(id: &str, caps: &Caps) -> Result<TheoremReport> {
    let t = theorem_info(id)?;
    check_theorem_with(id, t.default_n, t.default_k, caps)
}

pub fn check_theorem_with(id: &str, n_max: usize, k_max: usize, caps: &Caps) -> Result<TheoremReport> {
    let t = theorem_info(id)?;
    let c = Ctx { n_max, k_max, caps };
    let (checked, mut counterexamples) = match t.id {
        "rearrangement" => c.rearrangement()?,
        "filled-modification" => c.filled_modification()?,
        "descending-path-bijection" => c.descending_path_bijection()?,
        "ascending-path" => c.ascending_path()?,
        "embedding" => c.embedding(),
        "embedded-ascending" => c.embedded_ascending(),
        "strict-path" => c.strict_path()?,
        "tree-bijection" => c.tree_bijection(),
        "traversal-heights" => c.traversal_heights(),
        "ascending-tree" => c.ascending_tree()?,
        "strict-tree" => c.strict_tree()?,
        "ascending-recurrence" => c.ascending_recurrence()?,
        "fine" => c.fine()?,
        "catalan-fine" => c.catalan_fine()?,
        "strict-count" => c.descending_counts(true)?,
        "total-count" => c.descending_counts(false)?,
        "identities" => c.identities(),
        "dissection" => c.dissection()?,
        "noncrossing" => c.noncrossing()?,
        _ => unreachable!("registry and dispatch disagree"),
    };
    counterexamples.sort();
    Ok(TheoremReport {
        id: t.id,
        n_max,
        k_max,
        checked,
        counterexamples,
    })
}

type Outcome = (u64, Vec<String>);

/// Applies `f` to every item in parallel; `f` returns the number of cases
/// it checked and a message per failing case.
fn sweep<I: Sync>(items: &[I], f: impl Fn(&I) -> Outcome + Sync + Send) -> Outcome {
    items.par_iter().map(f).reduce(
        || (0, Vec::new()),
        |(a, mut x), (b, y)| {
            x.extend(y);
            (a + b, x)
        },
    )
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    (1, if ok { Vec::new() } else { vec![msg()] })
}

fn merge(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    parts.into_iter().fold((0, Vec::new()), |(a, mut x), (b, y)| {
        x.extend(y);
        (a + b, x)
    })
}

/// Every k-Dyck word with `n` up steps, built step by step.
pub fn kdyck_paths(n: usize, k: usize) -> Vec<KDyckPath> {
    fn go(ups: usize, downs: usize, h: i64, k: i64, n: usize, word: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if ups == n && downs == n {
            if word.last() != Some(&Step::Up) {
                out.push(word.clone());
            }
            return;
        }
        if ups < n {
            word.push(Step::Up);
            go(ups + 1, downs, h + 1, k, n, word, out);
            word.pop();
        }
        if downs < n && h > -k {
            word.push(Step::Down);
            go(ups, downs + 1, h - 1, k, n, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, 0, k as i64, n, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|w| KDyckPath::with_bound(StepWord::new(w), k).expect("generated within the bound"))
        .collect()
}

struct Ctx<'a> {
    n_max: usize,
    k_max: usize,
    caps: &'a Caps,
}

impl Ctx<'_> {
    fn prefs(&self, n: usize, shape: Shape) -> Result<Vec<ParkingPreference>> {
        self.caps.check(&EnumerationSpec::unfiltered(n, shape))?;
        Ok(Preferences::new(n, shape).collect())
    }

    fn brute(&self, n: usize, shape: Shape, k: usize, predicate: Predicate) -> Result<u64> {
        oracle::brute_count_with(&EnumerationSpec::new(n, shape, k, predicate), self.caps)
    }

    fn rearrangement(&self) -> Result<Outcome> {
        self.caps.check(&EnumerationSpec::unfiltered(self.n_max, Shape::All))?;
        let mut parts = Vec::new();
        for n in 1..=self.n_max {
            let prefs = self.prefs(n, Shape::All)?;
            parts.push(sweep(&prefs, |p| {
                merge((0..=self.k_max).map(|k| {
                    let fast = parking::rearrangements_all_k_naples(p, k);
                    let spec = EnumerationSpec::new(n, Shape::All, k, Predicate::RearrangementClosed);
                    let slow = spec.accepts(p);
                    expect(fast == slow, || {
                        format!("{p} k={k}: ascending test {fast}, full sweep {slow}")
                    })
                }))
            }));
        }
        Ok(merge(parts))
    }

    fn filled_modification(&self) -> Result<Outcome> {
        self.caps.check(&EnumerationSpec::unfiltered(self.n_max, Shape::All))?;
        let mut parts = Vec::new();
        for n in 1..=self.n_max {
            let prefs = self.prefs(n, Shape::All)?;
            parts.push(sweep(&prefs, |p| {
                let mut out = (0, Vec::new());
                for k in 0..=self.k_max {
                    let Some(d) = parking::park(p, k).assignment().map(<[usize]>::to_vec) else {
                        continue;
                    };
                    for i in 1..=n {
                        for l in 0..i {
                            for q in (1..d[l]).filter(|q| !d[..i].contains(q)) {
                                let mut parked = d[..i].to_vec();
                                parked[l] = q;
                                let fp = FilledPreference::new(parked.clone(), p.entries()[i..].to_vec())
                                    .expect("modified prefix stays distinct");
                                let ok = parking::park_filled(&fp, k).is_success();
                                let r = expect(ok, || {
                                    format!("{p} k={k}: parked {parked:?} then {:?} fails", &p.entries()[i..])
                                });
                                out = merge([out, r]);
                            }
                        }
                    }
                }
                out
            }));
        }
        Ok(merge(parts))
    }

    fn descending_path_bijection(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for n in 0..=self.n_max {
            for k in 0..=self.k_max {
                let words = kdyck_paths(n, k);
                let brute = self.brute(n, Shape::Descending, k, Predicate::KNaples)?;
                parts.push(expect(brute == words.len() as u64, || {
                    format!("n={n} k={k}: {} paths, {brute} descending k-Naples", words.len())
                }));
                let mut seen = BTreeSet::new();
                for w in &words {
                    let pref = paths::descending_pref_from_path(w);
                    let back = paths::path_from_descending_pref(&pref).map(|q| q.word().clone());
                    let asc =
                        paths::path_from_ascending_pref(&paths::ascending_pref_from_path(w)).map(|q| q.word().clone());
                    let ok = parking::is_k_naples(&pref, k)
                        && back.as_ref() == Ok(w.word())
                        && asc.as_ref() == Ok(w.word())
                        && seen.insert(pref.clone());
                    parts.push(expect(ok, || format!("{} k={k}: preference {pref}", w.word())));
                }
            }
        }
        Ok(merge(parts))
    }

    fn ascending_path(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for n in 0..=self.n_max {
            let prefs = self.prefs(n, Shape::Ascending)?;
            parts.push(sweep(&prefs, |p| {
                let path = paths::path_from_ascending_pref(p).expect("ascending input");
                merge((0..=self.k_max).map(|k| {
                    let sim = parking::is_k_naples(p, k);
                    let crit = paths::ascending_is_k_naples_path(&path, k);
                    expect(sim == crit, || format!("{p} k={k}: simulator {sim}, path test {crit}"))
                }))
            }));
        }
        Ok(merge(parts))
    }

    fn embedding(&self) -> Outcome {
        let mut parts = Vec::new();
        for n in 0..=self.n_max {
            for k in 0..=self.k_max {
                for p in kdyck_paths(n, k) {
                    let d = paths::embed(&p, k).expect("within bound");
                    let back = paths::unembed(&d, k);
                    let ok = d.len() == n + k
                        && paths::has_embedding_margins(&d, k)
                        && back.as_ref().map(KDyckPath::word) == Ok(p.word());
                    parts.push(expect(ok, || format!("{} k={k}: embeds to {}", p.word(), d.word())));
                }
            }
        }
        merge(parts)
    }

    fn embedded_ascending(&self) -> Outcome {
        let mut parts = Vec::new();
        for n in 0..=self.n_max {
            for k in 0..=self.k_max {
                for p in kdyck_paths(n, k) {
                    let d = paths::embed(&p, k).expect("within bound");
                    let inner = paths::ascending_is_k_naples_path(&p, k);
                    let outer = paths::embedded_ascending_criterion(&d, k);
                    parts.push(expect(inner == outer, || {
                        format!("{} k={k}: inner {inner}, embedded {outer}", p.word())
                    }));
                }
            }
        }
        merge(parts)
    }

    fn strict_path(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for n in 1..=self.n_max {
            let prefs = self.prefs(n, Shape::Descending)?;
            parts.push(sweep(&prefs, |p| {
                let path = paths::path_from_descending_pref(p).expect("descending input");
                let min_k = parking::minimal_k(p).expect("n >= 1");
                merge((0..=self.k_max).map(|k| {
                    let parks = parking::is_k_naples(p, k);
                    let fits = path.bound() <= k;
                    let strict = fits && paths::is_strictly_k(&path, k);
                    expect(parks == fits && strict == (min_k == k), || {
                        format!("{p} k={k}: parks {parks}, bound {}, minimal k {min_k}", path.bound())
                    })
                }))
            }));
        }
        Ok(merge(parts))
    }

    fn tree_bijection(&self) -> Outcome {
        let mut parts = Vec::new();
        for n in 0..=self.n_max {
            let words = kdyck_paths(n, 0);
            let trees = BinaryTree::all_with_nodes(n);
            let catalan: BigInt = enumeration::catalan(n);
            parts.push(expect(
                BigInt::from(trees.len()) == catalan && trees.len() == words.len(),
                || {
                    format!(
                        "n={n}: {} trees, {} Dyck paths, Catalan {catalan}",
                        trees.len(),
                        words.len()
                    )
                },
            ));
            for w in &words {
                let d = DyckPath::new(w.word().clone()).expect("0-Dyck word");
                let full = trees::full_tree_from_dyck(&d);
                let b = trees::prune(&full);
                let ok = trees::dyck_from_full_tree(&full) == d
                    && trees::graft(&b) == full
                    && trees::dyck_from_tree(&b) == d
                    && b.size() == n;
                parts.push(expect(ok, || format!("{}: tree {b}", d.word())));
            }
        }
        merge(parts)
    }

    fn traversal_heights(&self) -> Outcome {
        let trees: Vec<BinaryTree> = (1..=self.n_max).flat_map(BinaryTree::all_with_nodes).collect();
        sweep(&trees, |b| {
            let v = trees::traversal_height_violations(b);
            (1, v.into_iter().map(|m| format!("{b}: {m}")).collect())
        })
    }

    fn ascending_tree(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for n in 0..=self.n_max {
            let prefs = self.prefs(n, Shape::Ascending)?;
            parts.push(sweep(&prefs, |p| {
                let path = paths::path_from_ascending_pref(p).expect("ascending input");
                merge((1..=self.k_max).map(|k| {
                    let sim = parking::is_k_naples(p, k);
                    let tree_says = match paths::embed(&path, k) {
                        Ok(d) => trees::ascending_tree_criterion(&trees::tree_from_dyck(&d), k),
                        Err(_) => false,
                    };
                    expect(sim == tree_says, || {
                        format!("{p} k={k}: simulator {sim}, tree test {tree_says}")
                    })
                }))
            }));
        }
        Ok(merge(parts))
    }

    fn strict_tree(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for k in 1..=self.k_max {
            for n in 1..=self.n_max {
                let shaped: Vec<BinaryTree> = BinaryTree::all_with_nodes(n + k)
                    .into_iter()
                    .filter(|b| trees::is_strict_descending_tree(b, n, k))
                    .collect();
                let brute = self.brute(n, Shape::Descending, k, Predicate::StrictlyKNaples)?;
                parts.push(expect(shaped.len() as u64 == brute, || {
                    format!("n={n} k={k}: {} shaped trees, {brute} strict preferences", shaped.len())
                }));
                let strict: Vec<ParkingPreference> = oracle::enumerate_with(
                    &EnumerationSpec::new(n, Shape::Descending, k, Predicate::StrictlyKNaples),
                    self.caps,
                )?
                .collect();
                let images: Vec<(Outcome, Option<BinaryTree>)> = strict
                    .par_iter()
                    .map(|p| {
                        let path = paths::path_from_descending_pref(p).expect("descending input");
                        let tree = trees::strict_tree_from_kdyck(&path, k);
                        let ok = tree.as_ref().is_ok_and(|b| {
                            let slots = trees::strict_tree_slots(b, k);
                            trees::is_strict_descending_tree(b, n, k)
                                && trees::kdyck_from_strict_tree(b, n, k).as_ref().map(KDyckPath::word)
                                    == Ok(path.word())
                                && slots.as_ref().is_ok_and(|s| {
                                    s.iter().map(BinaryTree::size).sum::<usize>() == n - k - 1
                                        && trees::strict_tree_from_slots(s, k).as_ref() == Ok(b)
                                })
                        });
                        (expect(ok, || format!("{p} k={k}: tree {tree:?}")), tree.ok())
                    })
                    .collect();
                let distinct: BTreeSet<&BinaryTree> = images.iter().filter_map(|(_, t)| t.as_ref()).collect();
                parts.push(expect(distinct.len() == strict.len(), || {
                    format!("n={n} k={k}: tree map not injective")
                }));
                parts.extend(images.into_iter().map(|(o, _)| o));
            }
        }
        Ok(merge(parts))
    }

    fn ascending_recurrence(&self) -> Result<Outcome> {
        let table = CountTable::<BigInt>::new(self.n_max.max(20), self.k_max);
        let mut parts = Vec::new();
        for n in 0..=20 {
            let c: BigInt = enumeration::catalan(n);
            parts.push(expect(table.ascending(n, 0) == Some(&c), || {
                format!("I({n},0) != C_{n}")
            }));
        }
        for n in 0..=self.n_max {
            for k in 0..=self.k_max {
                let kept: Vec<ParkingPreference> = oracle::enumerate_with(
                    &EnumerationSpec::new(n, Shape::Ascending, k, Predicate::KNaples),
                    self.caps,
                )?
                .collect();
                let i = kept.len();
                let u = kept.iter().filter(|p| p.entries().first() == Some(&1)).count();
                let (ti, tu) = (
                    table.ascending(n, k).unwrap(),
                    table.ascending_starts_one(n, k).unwrap(),
                );
                parts.push(expect(&BigInt::from(i) == ti, || {
                    format!("I({n},{k}): table {ti}, simulation {i}")
                }));
                parts.push(expect(&BigInt::from(u) == tu, || {
                    format!("U({n},{k}): table {tu}, simulation {u}")
                }));
            }
        }
        Ok(merge(parts))
    }

    fn ascending_brute(&self, n: usize, k: usize, starts_one: bool) -> Result<usize> {
        let it = oracle::enumerate_with(
            &EnumerationSpec::new(n, Shape::Ascending, k, Predicate::KNaples),
            self.caps,
        )?;
        Ok(it.filter(|p| !starts_one || p.entries().first() == Some(&1)).count())
    }

    fn fine(&self) -> Result<Outcome> {
        let top = self.n_max.max(30);
        let table = CountTable::<BigInt>::new(top, 1);
        let f = crate::Series::fine(top + 1);
        let mut parts = Vec::new();
        for n in 0..=top {
            let want = f.coeff(n + 1);
            let got = table.ascending_starts_one(n, 1).unwrap();
            parts.push(expect(got == &want, || {
                format!("U({n},1) = {got}, F_{} = {want}", n + 1)
            }));
            if n <= self.n_max {
                let brute = BigInt::from(self.ascending_brute(n, 1, true)?);
                parts.push(expect(brute == want, || {
                    format!("simulated U({n},1) = {brute}, F_{} = {want}", n + 1)
                }));
            }
        }
        Ok(merge(parts))
    }

    fn catalan_fine(&self) -> Result<Outcome> {
        let top = self.n_max.max(30);
        let table = CountTable::<BigInt>::new(top, 1);
        let cf = &crate::Series::catalan(top) * &crate::Series::fine(top);
        let mut parts = Vec::new();
        for n in 0..=top {
            let want = cf.coeff(n);
            let got = table.ascending(n, 1).unwrap();
            parts.push(expect(got == &want, || format!("I({n},1) = {got}, CF_{n} = {want}")));
            if n <= self.n_max {
                let brute = BigInt::from(self.ascending_brute(n, 1, false)?);
                parts.push(expect(brute == want, || {
                    format!("simulated I({n},1) = {brute}, CF_{n} = {want}")
                }));
            }
        }
        Ok(merge(parts))
    }

    fn descending_counts(&self, strict: bool) -> Result<Outcome> {
        let mut parts = Vec::new();
        for n in 1..=self.n_max {
            for k in 0..=self.k_max {
                let (closed, predicate): (BigInt, _) = if strict {
                    (enumeration::count_descending_strict(n, k), Predicate::StrictlyKNaples)
                } else {
                    (enumeration::count_descending_total(n, k), Predicate::KNaples)
                };
                let brute = BigInt::from(self.brute(n, Shape::Descending, k, predicate)?);
                parts.push(expect(closed == brute, || {
                    format!("n={n} k={k}: closed form {closed}, simulation {brute}")
                }));
            }
        }
        Ok(merge(parts))
    }

    fn identities(&self) -> Outcome {
        let report = enumeration::verify_identities_to(self.n_max, self.k_max);
        let checked = report.families.iter().map(|f| f.checked as u64).sum();
        let failures = report
            .families
            .iter()
            .flat_map(|f| f.failures.iter().map(move |m| format!("{}: {m}", f.name)))
            .collect();
        (checked, failures)
    }

    fn strict_trees(n: usize, k: usize) -> Vec<BinaryTree> {
        BinaryTree::all_with_nodes(n + k)
            .into_iter()
            .filter(|b| trees::is_strict_descending_tree(b, n, k))
            .collect()
    }

    fn dissection(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for k in 1..=self.k_max {
            for n in 1..=self.n_max {
                let strict = Self::strict_trees(n, k);
                let mut images = BTreeSet::new();
                for b in &strict {
                    let d = catalan_objects::dissection_from_strict(b, n, k);
                    let back = d.as_ref().map(|d| catalan_objects::strict_from_dissection(d, n, k));
                    let ok = matches!(back, Ok(Ok(ref t)) if t == b);
                    parts.push(expect(ok, || format!("{b} n={n} k={k}: dissection {d:?}")));
                    if let Ok(d) = d {
                        images.insert(d);
                    }
                }
                let all = all_dissections(n + k + 1, 2 * k + 2);
                for d in &all {
                    let ok = catalan_objects::strict_from_dissection(d, n, k)
                        .and_then(|b| catalan_objects::dissection_from_strict(&b, n, k))
                        .as_ref()
                        == Ok(d);
                    parts.push(expect(ok, || {
                        format!("n={n} k={k}: dissection {d} does not round trip")
                    }));
                }
                let closed: BigInt = enumeration::count_descending_strict(n, k);
                let brute = self.brute(n, Shape::Descending, k, Predicate::StrictlyKNaples)?;
                let sizes = [strict.len(), images.len(), all.len()];
                parts.push(expect(
                    sizes.iter().all(|&s| BigInt::from(s) == closed && s as u64 == brute),
                    || format!("n={n} k={k}: trees/images/dissections {sizes:?}, closed {closed}, simulation {brute}"),
                ));
            }
        }
        Ok(merge(parts))
    }

    fn noncrossing(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for k in 1..=self.k_max {
            for n in 1..=self.n_max {
                let strict = Self::strict_trees(n, k);
                let mut images = BTreeSet::new();
                for b in &strict {
                    let p = catalan_objects::ncp_from_strict(b, n, k);
                    let back = p.as_ref().map(|p| catalan_objects::strict_from_ncp(p, n, k));
                    let ok = matches!(back, Ok(Ok(ref t)) if t == b);
                    parts.push(expect(ok, || format!("{b} n={n} k={k}: partition {p:?}")));
                    if let Ok(p) = p {
                        images.insert(p.to_string());
                    }
                }
                let all = all_rooted_noncrossing(n + k + 1, 2 * k + 2);
                for p in &all {
                    let ok = catalan_objects::strict_from_ncp(p, n, k)
                        .and_then(|b| catalan_objects::ncp_from_strict(&b, n, k))
                        .as_ref()
                        == Ok(p);
                    parts.push(expect(ok, || format!("n={n} k={k}: partition {p} does not round trip")));
                }
                let closed: BigInt = enumeration::count_descending_strict(n, k);
                let brute = self.brute(n, Shape::Descending, k, Predicate::StrictlyKNaples)?;
                let sizes = [strict.len(), images.len(), all.len()];
                parts.push(expect(
                    sizes.iter().all(|&s| BigInt::from(s) == closed && s as u64 == brute),
                    || format!("n={n} k={k}: trees/images/partitions {sizes:?}, closed {closed}, simulation {brute}"),
                ));
            }
        }
        Ok(merge(parts))
    }
}

/// Every canonically labelled `r`-in-`s` dissection, found by trying all
/// non-crossing sets of `s - r` diagonals.
pub fn all_dissections(s: usize, r: usize) -> Vec<Dissection> {
    if r < 4 || r > s {
        return Vec::new();
    }
    let diagonals: Vec<(usize, usize)> = (0..s)
        .flat_map(|a| (a + 2..s).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == s - 1))
        .collect();
    let crosses =
        |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    fn go(
        start: usize,
        need: usize,
        chosen: &mut Vec<(usize, usize)>,
        diagonals: &[(usize, usize)],
        crosses: &dyn Fn((usize, usize), (usize, usize)) -> bool,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if need == 0 {
            out.push(chosen.clone());
            return;
        }
        for i in start..diagonals.len() {
            if chosen.iter().all(|&c| !crosses(c, diagonals[i])) {
                chosen.push(diagonals[i]);
                go(i + 1, need - 1, chosen, diagonals, crosses, out);
                chosen.pop();
            }
        }
    }
    let mut sets = Vec::new();
    go(0, s - r, &mut Vec::new(), &diagonals, &crosses, &mut sets);
    sets.into_iter()
        .filter_map(|set| Dissection::new(s, r, set).ok())
        .collect()
}

/// Every non-crossing partition of `1..=m` whose block containing 1 has
/// `r` elements, found from all set partitions via restricted growth
/// strings and a pairwise crossing test.
pub fn all_rooted_noncrossing(m: usize, r: usize) -> Vec<RootedNonCrossingPartition> {
    fn go(i: usize, m: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == m {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(i + 1, m, labels, blocks.max(b + 1), out);
            labels.pop();
        }
    }
    if m == 0 {
        return Vec::new();
    }
    let mut strings = Vec::new();
    go(1, m, &mut vec![0], 1, &mut strings);
    strings
        .into_iter()
        .filter_map(|labels| {
            let count = labels.iter().max().unwrap() + 1;
            let mut blocks = vec![Vec::new(); count];
            for (x, &b) in labels.iter().enumerate() {
                blocks[b].push(x + 1);
            }
            if blocks[0].len() != r {
                return None;
            }
            for (i, a) in blocks.iter().enumerate() {
                if blocks[i + 1..].iter().any(|b| catalan_objects::blocks_cross(a, b)) {
                    return None;
                }
            }
            let root = blocks.remove(0);
            RootedNonCrossingPartition::new(m, root, blocks).ok()
        })
        .collect()
}
