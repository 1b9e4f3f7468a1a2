use naples::paths::{self, DyckPath, KDyckPath, Step, StepWord};
use naples::theorems::{check_theorem, kdyck_paths};
use naples::{is_k_naples, ParkingPreference};
use proptest::prelude::*;

fn ascending(max_n: usize) -> impl Strategy<Value = ParkingPreference> {
    (0..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(1..=n.max(1), n))
        .prop_map(|mut v| {
            v.sort_unstable();
            ParkingPreference::new(v).unwrap()
        })
}

/// A random k-Dyck path: an ascending preference, conditioned on the bound.
fn kdyck(max_n: usize, k: usize) -> impl Strategy<Value = KDyckPath> {
    ascending(max_n)
        .prop_map(|p| paths::path_from_ascending_pref(&p).unwrap())
        .prop_filter("within bound", move |p| p.bound() <= k)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ascending_round_trip(pref in ascending(12)) {
        let path = paths::path_from_ascending_pref(&pref).unwrap();
        prop_assert_eq!(path.len(), pref.len());
        prop_assert_eq!(paths::ascending_pref_from_path(&path), pref);
    }

    #[test]
    fn path_text_round_trip(pref in ascending(12)) {
        let word = paths::path_from_ascending_pref(&pref).unwrap().word().clone();
        prop_assert_eq!(word.to_string().parse::<StepWord>().unwrap(), word);
    }

    #[test]
    fn embedding_margins(p in kdyck(10, 3), extra in 0usize..3) {
        let k = p.bound() + extra;
        let d = paths::embed(&p, k).unwrap();
        let s = d.word().steps();
        prop_assert!(s[..k].iter().all(|&x| x == Step::Up));
        let tail = if p.is_empty() { k } else { k + 1 };
        prop_assert!(s[s.len() - tail..].iter().all(|&x| x == Step::Down));
        prop_assert_eq!(paths::unembed(&d, k).unwrap(), p);
    }

    #[test]
    fn reflection_is_an_involution(p in kdyck(10, 3)) {
        let k = p.bound();
        prop_assume!(k >= 1);
        let d = paths::embed(&p, k).unwrap();
        let r = paths::reflect_after_first_return(&d, k).unwrap();
        prop_assert_eq!(paths::reflect_after_first_return(&r, k).unwrap(), d);
    }

    #[test]
    fn descending_preference_parks_at_its_bound(p in kdyck(10, 4)) {
        let pref = paths::descending_pref_from_path(&p);
        prop_assert!(pref.is_descending());
        prop_assert!(is_k_naples(&pref, p.bound()));
    }

    #[test]
    fn embedded_and_inner_criteria_agree(p in kdyck(10, 3), extra in 0usize..2) {
        let k = p.bound() + extra;
        let d = paths::embed(&p, k).unwrap();
        prop_assert_eq!(
            paths::embedded_ascending_criterion(&d, k),
            paths::ascending_is_k_naples_path(&p, k)
        );
    }
}

#[test]
fn path_criterion_matches_simulation() {
    let report = check_theorem("ascending-path", 8, 3).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn kdyck_paths_count_descending_k_naples() {
    let report = check_theorem("descending-path-bijection", 8, 3).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn strictness_matches_minimal_k() {
    let report = check_theorem("strict-path", 8, 3).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn embedding_and_embedded_criterion() {
    for id in ["embedding", "embedded-ascending"] {
        let report = check_theorem(id, 8, 3).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn generated_path_counts() {
    // Descending totals binom(2n-1, n) - binom(2n-1, n+k+1).
    assert_eq!(kdyck_paths(3, 1).len(), 9);
    assert_eq!(kdyck_paths(4, 1).len(), 28);
    assert_eq!(kdyck_paths(4, 3).len(), 35);
}

#[test]
fn sample_paths() {
    let p = KDyckPath::new("UDDUUDDUDUUD".parse().unwrap()).unwrap();
    assert_eq!(paths::ascending_pref_from_path(&p).to_string(), "1,3,3,5,6,6");
    assert!(paths::ascending_is_k_naples_path(&p, 2));
    assert!(!paths::ascending_is_k_naples_path(&p, 1));
    let running = KDyckPath::new("UDUDDDUUDUUUDD".parse().unwrap()).unwrap();
    let d = paths::embed(&running, 2).unwrap();
    assert_eq!(d.word().to_string(), "UUUDUDDDUUDUUUDDDD");
    assert!(DyckPath::new(d.word().clone()).is_ok());
    assert!(paths::is_strictly_k(&running, 2));
    assert!(!paths::is_strictly_k(&running, 3));
}
