//! Randomized structural properties complementing the deterministic suites.

use proptest::prelude::*;

use cdkit::analysis::{realizable_as_colored_complex, Realizability, SearchBudget};
use cdkit::cdindex::{cd_from_h, CdPolynomial, CdWord, MultiDegree};
use cdkit::paths::{enumerate_admissible, enumerate_weighted, is_admissible, HVector};
use cdkit::shelling::{eval_word, opword_from_cd, FanTerm};

#[test]
fn word_counts_follow_the_fibonacci_recurrence() {
    let counts: Vec<usize> = (0..=14).map(|n| CdWord::words_of_degree(n).len()).collect();
    assert_eq!(counts[0], 1);
    assert_eq!(counts[1], 1);
    for n in 2..=14 {
        assert_eq!(counts[n], counts[n - 1] + counts[n - 2], "degree {n}");
    }
}

#[test]
fn every_word_round_trips_through_its_multidegree() {
    for n in 0..=10 {
        for w in CdWord::words_of_degree(n) {
            let v = w.mdeg();
            assert!(v.is_valid(), "{w}");
            assert_eq!(CdWord::from_mdeg(&v), Some(w.clone()));
        }
    }
}

#[test]
fn all_c_words_evaluate_to_one() {
    for n in 0..=9 {
        let w = CdWord::all_c(n);
        let count = eval_word(&opword_from_cd(&w), &FanTerm::complete(n)).unwrap();
        assert_eq!(count, 1, "degree {n}");
    }
}

fn arb_word(max_degree: usize) -> impl Strategy<Value = CdWord> {
    (0..=max_degree).prop_flat_map(|n| {
        let words = CdWord::words_of_degree(n);
        let len = words.len();
        (Just(words), 0..len).prop_map(|(words, i)| words[i].clone())
    })
}

proptest! {
    #[test]
    fn zero_one_vectors_are_word_multidegrees_exactly_when_valid(
        v in proptest::collection::vec(0u8..=1, 0..=10)
    ) {
        let m = MultiDegree::new(v).expect("entries are 0 or 1");
        prop_assert_eq!(CdWord::from_mdeg(&m).is_some(), m.is_valid());
    }

    #[test]
    fn solving_inverts_word_expansion(
        (n, coeffs) in (0usize..=6).prop_flat_map(|n| {
            let count = CdWord::words_of_degree(n).len();
            (Just(n), proptest::collection::vec(-9i64..=9, count))
        })
    ) {
        let mut p = CdPolynomial::new(n);
        for (w, c) in CdWord::words_of_degree(n).into_iter().zip(coeffs) {
            p.set(w, c).expect("degree matches");
        }
        let back = cd_from_h(&p.expand()).expect("expansions are expressible");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn enumeration_is_sorted_unique_admissible_with_matching_weighted_count(
        w in arb_word(8),
        h_entries in proptest::collection::vec(1i64..=3, 9)
    ) {
        let paths = enumerate_admissible(&w);
        let mut sorted = paths.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(&paths, &sorted, "order or duplicates for {}", w);
        for p in &paths {
            prop_assert!(is_admissible(p, &w).expect("lengths match"), "{} for {}", p, w);
        }

        let n = w.degree();
        let h = HVector::new(h_entries[..=n].to_vec()).expect("positive entries");
        let weighted = enumerate_weighted(&w, &h).expect("weights match degree");
        let expected: i64 = if n == 0 {
            1
        } else {
            paths.iter().map(|p| h.get(p.get(n - 1) as usize + 1)).sum()
        };
        prop_assert_eq!(weighted.len() as i64, expected);
        for lp in &weighted {
            let cap = if n == 0 {
                1
            } else {
                h.get(lp.path.get(n - 1) as usize + 1)
            };
            prop_assert!(lp.label >= 1 && lp.label <= cap, "label {} over cap {}", lp.label, cap);
        }
    }

    #[test]
    fn realizability_search_matches_the_single_block_closed_form(
        c1 in 0usize..=5,
        c2 in 0usize..=5,
        c3 in 0usize..=5,
        q in 0usize..=30
    ) {
        // At degree 4 the only block on two or more colors is {1,3}, so a
        // table is realizable exactly when its quota fits in the grid of
        // vertex pairs.  The search must reproduce that closed form.
        let mut p = CdPolynomial::new(4);
        p.set("cccc".parse().unwrap(), 1).unwrap();
        p.set("dcc".parse().unwrap(), c1 as i64).unwrap();
        p.set("cdc".parse().unwrap(), c2 as i64).unwrap();
        p.set("ccd".parse().unwrap(), c3 as i64).unwrap();
        p.set("dd".parse().unwrap(), q as i64).unwrap();
        let got = realizable_as_colored_complex(&p, &SearchBudget::default())
            .expect("nonnegative table");
        match got {
            Realizability::Realizable(w) => {
                prop_assert!(q <= c1 * c3, "found a witness for q {} > {}", q, c1 * c3);
                prop_assert!(w.verify(&p), "witness fails the recount");
            }
            Realizability::Unrealizable => prop_assert!(q > c1 * c3, "refused q {} <= {}", q, c1 * c3),
            Realizability::Exhausted => prop_assert!(false, "the default budget must suffice"),
        }
    }
}
