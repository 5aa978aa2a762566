mod common;

use common::{naive_dhhf, naive_fractal, random_family, rng};
use hashfam::catalog::{table1_dhf, table1_phf};
use hashfam::construct::{dhhf3, easy_product, extend_strength, two_row_grid};
use hashfam::text::{parse_family, serialize_family};
use hashfam::verify::{
    check_column_bound, check_singleton_cover, count_separating_rows, sample_verify, verify_dhhf,
    verify_fractal, verify_phf,
};
use hashfam::{concat_disjoint, HashFamily};
use proptest::prelude::*;

fn family_strategy(
    max_rows: usize,
    max_cols: usize,
    max_w: usize,
) -> impl Strategy<Value = HashFamily> {
    (1..=max_rows, 1..=max_cols, 1..=max_w).prop_flat_map(|(n, k, w)| {
        prop::collection::vec(prop::collection::vec(0..w as u32, k), n)
            .prop_map(move |rows| HashFamily::new(rows, vec![w; n]).unwrap())
    })
}

fn same_rows(rows: usize) -> impl Strategy<Value = HashFamily> {
    (1..=5usize, 1..=4usize).prop_flat_map(move |(k, w)| {
        prop::collection::vec(prop::collection::vec(0..w as u32, k), rows)
            .prop_map(move |r| HashFamily::new(r, vec![w; rows]).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trip(a in family_strategy(4, 8, 5), t in 1..5usize, p in 1..5usize) {
        let a = if p <= t { a.with_claim(t, p) } else { a };
        prop_assert_eq!(parse_family(&serialize_family(&a)).unwrap(), a);
    }

    #[test]
    fn concat_is_associative(a in same_rows(3), b in same_rows(3), c in same_rows(3)) {
        let ab = concat_disjoint(&[a.clone(), b.clone()]).unwrap();
        let bc = concat_disjoint(&[b.clone(), c.clone()]).unwrap();
        let left = concat_disjoint(&[ab, c.clone()]).unwrap();
        let right = concat_disjoint(&[a.clone(), bc]).unwrap();
        prop_assert_eq!(&left, &right);
        let widths: Vec<usize> = (0..3).map(|r| a.widths()[r] + b.widths()[r] + c.widths()[r]).collect();
        prop_assert_eq!(left.widths(), widths.as_slice());
    }

    #[test]
    fn exhaustive_matches_brute_force(a in family_strategy(4, 6, 4), t in 2..=4usize, p in 2..=4usize) {
        prop_assume!(t <= a.cols());
        let p = p.min(t);
        let report = verify_dhhf(&a, t, p).unwrap();
        prop_assert_eq!(report.passed(), naive_dhhf(&a, t, p));
        if let Some(w) = report.partition_witness() {
            prop_assert_eq!(w.support().len(), t);
            prop_assert!(w.num_classes() >= 2 && w.num_classes() <= p);
            prop_assert_eq!(count_separating_rows(&a, w).unwrap(), 0);
        }
    }

    #[test]
    fn fractal_matches_brute_force(a in family_strategy(4, 6, 4), p in 2..=4usize) {
        let t = a.rows();
        prop_assume!(t >= 2 && t <= a.cols());
        prop_assert_eq!(verify_fractal(&a, t, p).unwrap().passed(), naive_fractal(&a, p));
    }

    #[test]
    fn fewer_parts_is_weaker(a in family_strategy(4, 7, 4), t in 2..=4usize, p in 3..=4usize) {
        prop_assume!(t <= a.cols() && p <= t);
        if verify_dhhf(&a, t, p).unwrap().passed() {
            prop_assert!(verify_dhhf(&a, t, p - 1).unwrap().passed());
        }
    }

    #[test]
    fn sampling_never_contradicts_a_pass(a in family_strategy(4, 7, 5), t in 2..=4usize, seed in any::<u64>()) {
        prop_assume!(t <= a.cols());
        if verify_dhhf(&a, t, t).unwrap().passed() {
            prop_assert!(sample_verify(&a, t, t, 2_000, seed).unwrap().passed());
        }
    }

    #[test]
    fn necessary_conditions_are_sound(a in family_strategy(3, 7, 4), d in 1..=2usize, p in 2..=4usize) {
        let t = a.rows() + d;
        prop_assume!(t <= a.cols() && p <= t);
        if verify_dhhf(&a, t, p).unwrap().passed() {
            prop_assert!(check_column_bound(&a, t).unwrap().holds);
            if p > d {
                prop_assert!(check_singleton_cover(&a, d).unwrap().holds);
            }
        }
    }
}

/// Below `C(p+1, 2)` rows-worth of strength, distributing with `p` parts
/// already forces perfection: 4 < C(4, 2).
#[test]
fn three_parts_at_strength_four_means_perfect() {
    let mut rng = rng(11);
    for i in 0..1000 {
        let a = random_family(&mut rng, 4, 8, 4);
        let d = verify_dhhf(&a, 4, 3).unwrap().passed();
        assert_eq!(d, verify_phf(&a, 4).unwrap().passed(), "array {i}");
        if i < 50 {
            assert_eq!(d, naive_dhhf(&a, 4, 4), "array {i}");
        }
    }
    assert!(verify_dhhf(&table1_phf(), 4, 3).unwrap().passed());
    // two parts do not force perfection
    assert!(verify_dhhf(&table1_dhf(), 4, 2).unwrap().passed());
    assert!(!verify_phf(&table1_dhf(), 4).unwrap().passed());
}

/// Small fractal families from the constructors, with their part counts.
pub fn small_fractals() -> Vec<(&'static str, HashFamily, usize)> {
    let mut out = vec![
        ("table1-phf", table1_phf(), 4),
        ("table1-dhf", table1_dhf(), 2),
        ("grid(4;2,2)", two_row_grid(4, 2, 2).unwrap(), 2),
        ("grid(6;2,3)", two_row_grid(6, 2, 3).unwrap(), 2),
        ("easy(2,2,2)", easy_product(&[2, 2, 2]).unwrap(), 3),
        ("easy(2,3,2)", easy_product(&[2, 3, 2]).unwrap(), 3),
        ("dhhf3(3,2)", dhhf3(3, 2).unwrap(), 2),
        ("dhhf3(3,3)", dhhf3(3, 3).unwrap(), 2),
    ];
    if let Ok(e) = extend_strength(&two_row_grid(4, 2, 2).unwrap(), 3) {
        out.push(("extend(grid(4;2,2),3)", e, 3));
    }
    out
}

fn deletions_stay_distributing(a: &HashFamily, t: usize, p: usize, name: &str) {
    if t < 2 {
        return;
    }
    for r in 0..a.rows() {
        let rest = a.without_row(r).unwrap();
        let (t1, p1) = (t - 1, p.min(t - 1));
        if t1 >= 2 && t1 <= rest.cols() {
            assert!(
                verify_dhhf(&rest, t1, p1).unwrap().passed(),
                "{name} minus row {r}"
            );
        }
        deletions_stay_distributing(&rest, t1, p1, name);
    }
}

#[test]
fn fractal_families_survive_row_deletion() {
    let mut checked = 0;
    for (name, a, p) in small_fractals() {
        let t = a.rows();
        if t > 5 || a.cols() > 12 || !verify_fractal(&a, t, p).unwrap().passed() {
            continue;
        }
        deletions_stay_distributing(&a, t, p, name);
        checked += 1;
    }
    assert_eq!(checked, small_fractals().len());
}
