use greenforge_phiorbit::{enumerate_admissible, free_table_associativity_witness, is_admissible, Admissibility, AdmissibleSet, PhiError};

/// Reference written against a membership table over a padded window.
fn reference(members: &[i64]) -> bool {
    const OFF: i64 = 12;
    let mut table = [false; 25];
    for &m in members {
        table[(m + OFF) as usize] = true;
    }
    let has = |v: i64| (-OFF..=OFF).contains(&v) && table[(v + OFF) as usize];
    if !has(0) {
        return false;
    }
    for i in -4..=4 {
        for j in -4..=4 {
            for k in -4..=4 {
                if has(i) && has(j) && has(k) && has(i + j + k) && has(i + j) != has(j + k) {
                    return false;
                }
            }
        }
    }
    true
}

fn subsets_with_zero() -> Vec<Vec<i64>> {
    let others = [-3, -2, -1, 1, 2, 3];
    (0..64u32)
        .map(|m| {
            let mut s = vec![0];
            s.extend(others.iter().enumerate().filter(|(b, _)| m >> b & 1 == 1).map(|(_, &v)| v));
            s
        })
        .collect()
}

#[test]
fn agrees_with_reference_on_all_64_subsets() {
    let all = subsets_with_zero();
    assert_eq!(all.len(), 64);
    let mut count = 0;
    for s in &all {
        let ours = is_admissible(s) == Admissibility::Admissible;
        assert_eq!(ours, reference(s), "{s:?}");
        count += ours as usize;
    }
    assert_eq!(count, 27);
    assert_eq!(enumerate_admissible(-3, 3).unwrap().len(), 27);
}

#[test]
fn named_examples() {
    assert_eq!(is_admissible(&[0]), Admissibility::Admissible);
    assert_eq!(is_admissible(&[0, 1, 2]), Admissibility::Admissible);
    for n in 1..=6 {
        assert_eq!(is_admissible(&[0, n]), Admissibility::Admissible);
    }
    assert_eq!(is_admissible(&[0, 1, 2, 4]), Admissibility::Witness(1, 1, 2));
    assert_eq!(is_admissible(&[1, 2]), Admissibility::MissingZero);
    assert_eq!(AdmissibleSet::new(&[0, 1, 2, 4]), Err(PhiError::NotAdmissible(1, 1, 2)));
}

#[test]
fn enumeration() {
    let e = enumerate_admissible(0, 1).unwrap();
    assert_eq!(e.iter().map(|s| s.to_string()).collect::<Vec<_>>(), vec!["{0}", "{0,1}"]);
    assert_eq!(enumerate_admissible(0, 0).unwrap().len(), 1);
    assert!(matches!(enumerate_admissible(1, 3), Err(PhiError::RangeWithoutZero { .. })));
    assert!(matches!(enumerate_admissible(-3, -1), Err(PhiError::RangeWithoutZero { .. })));
}

#[test]
fn free_table_fails_exactly_off_admissible_sets() {
    assert_eq!(free_table_associativity_witness(&[0, 1, 2, 4]), Some((1, 1, 2)));
    assert_eq!(free_table_associativity_witness(&[0, 1, 2, 3]), None);
    for s in subsets_with_zero() {
        let adm = is_admissible(&s) == Admissibility::Admissible;
        assert_eq!(free_table_associativity_witness(&s).is_none(), adm, "{s:?}");
    }
}

#[test]
fn parse_lists() {
    assert_eq!(AdmissibleSet::parse("0, 1,-2").unwrap(), vec![0, 1, -2]);
    assert!(AdmissibleSet::parse("0,a").is_err());
}
