use std::collections::HashSet;

use naples::oracle::{
    brute_count, brute_count_with, distinct_rearrangements, enumerate, enumerate_with, Caps, EnumerationSpec,
    Predicate, Preferences, Shape,
};
use naples::{Error, ParkingPreference};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn generators_are_complete_and_duplicate_free() {
    for n in 1..=6 {
        for (shape, expected) in [
            (Shape::All, (n as u64).pow(n as u32)),
            (Shape::Ascending, binomial(2 * n as u64 - 1, n as u64)),
            (Shape::Descending, binomial(2 * n as u64 - 1, n as u64)),
        ] {
            let all: Vec<ParkingPreference> = Preferences::new(n, shape).collect();
            assert_eq!(all.len() as u64, expected, "{shape} n={n}");
            let set: HashSet<Vec<usize>> = all.iter().map(|p| p.entries().to_vec()).collect();
            assert_eq!(set.len(), all.len());
            assert!(
                all.windows(2).all(|w| w[0].entries() < w[1].entries()),
                "{shape} not lexicographic"
            );
            assert!(all.iter().all(|p| p.entries().iter().all(|&a| (1..=n).contains(&a))));
            match shape {
                Shape::Ascending => assert!(all.iter().all(ParkingPreference::is_ascending)),
                Shape::Descending => assert!(all.iter().all(ParkingPreference::is_descending)),
                Shape::All => {}
            }
        }
    }
    assert_eq!(Preferences::new(0, Shape::All).count(), 1);
}

#[test]
fn parallel_count_is_deterministic() {
    let spec = EnumerationSpec::new(6, Shape::All, 1, Predicate::KNaples);
    let first = brute_count(&spec).unwrap();
    for _ in 0..3 {
        assert_eq!(brute_count(&spec).unwrap(), first);
    }
    assert_eq!(enumerate(&spec).unwrap().count() as u64, first);
}

#[test]
fn parking_functions_are_zero_naples() {
    // (n+1)^(n-1) classical parking functions.
    for n in 1..=6u32 {
        let spec = EnumerationSpec::new(n as usize, Shape::All, 0, Predicate::KNaples);
        assert_eq!(brute_count(&spec).unwrap(), (n as u64 + 1).pow(n - 1));
    }
}

#[test]
fn strict_counts_partition_the_total() {
    let n = 5;
    let total: u64 = (0..n)
        .map(|k| brute_count(&EnumerationSpec::new(n, Shape::All, k, Predicate::StrictlyKNaples)).unwrap())
        .sum();
    assert_eq!(total, 5u64.pow(5));
}

#[test]
fn rearrangement_closed_matches_ascending() {
    for k in 0..=2 {
        let closed: Vec<_> = enumerate(&EnumerationSpec::new(
            5,
            Shape::Ascending,
            k,
            Predicate::RearrangementClosed,
        ))
        .unwrap()
        .collect();
        let asc: Vec<_> = enumerate(&EnumerationSpec::new(5, Shape::Ascending, k, Predicate::KNaples))
            .unwrap()
            .collect();
        assert_eq!(closed, asc, "k={k}");
    }
}

#[test]
fn rearrangements_are_distinct() {
    let all: Vec<_> = distinct_rearrangements(&[2, 1, 2, 3]).collect();
    assert_eq!(all.len(), 12);
    assert_eq!(all[0].entries(), &[1, 2, 2, 3]);
    assert_eq!(
        all.iter().map(|p| p.entries().to_vec()).collect::<HashSet<_>>().len(),
        12
    );
}

#[test]
fn caps_are_enforced() {
    let big_all = EnumerationSpec::unfiltered(8, Shape::All);
    assert!(matches!(
        brute_count(&big_all),
        Err(Error::CapExceeded { n: 8, cap: 7 })
    ));
    assert!(enumerate(&EnumerationSpec::unfiltered(13, Shape::Ascending)).is_err());
    let tight = Caps { all: 2, monotone: 3 };
    assert!(brute_count_with(&EnumerationSpec::unfiltered(3, Shape::All), &tight).is_err());
    assert_eq!(
        brute_count_with(&EnumerationSpec::unfiltered(3, Shape::Ascending), &tight).unwrap(),
        10
    );
    assert!(enumerate_with(&EnumerationSpec::unfiltered(4, Shape::Descending), &tight).is_err());
    assert_eq!(Caps::default().limit(Shape::Descending), 12);
}

#[test]
fn spec_text_forms() {
    for s in ["all", "ascending", "descending"] {
        assert_eq!(s.parse::<Shape>().unwrap().to_string(), s);
    }
    assert!("sideways".parse::<Shape>().is_err());
    assert!("nope".parse::<Predicate>().is_err());
}
