//! Frozen cross-module oracle values: exhaustive counts and sweep outcomes
//! that were computed once, checked against independent hand derivations
//! where feasible, and pinned here so regressions surface as exact-count
//! mismatches.

use novikov::constructions::verify_pairing_constraints;
use novikov::laws::{check_gd, classify_type, is_lie_superalgebra, super_commutator, AlgebraType};
use novikov::modules::{catalog_tags_gf, verify_catalog_completeness, CatalogTag};
use novikov::scalar::FieldDescriptor;
use novikov::search::{search, SearchSpec};
use novikov::SuperAlgebra;

fn gf(p: u64) -> FieldDescriptor {
    FieldDescriptor::gf(p).unwrap()
}

#[test]
fn exhaustive_search_counts_are_stable() {
    // (d0, d1, p, candidates, novikov_super); every hit in every cell is
    // type N
    let expected = [
        (1usize, 0usize, 2u64, 2u64, 2u64),
        (1, 1, 2, 16, 9),
        (1, 1, 3, 81, 13),
        (2, 0, 2, 256, 52),
        (1, 2, 2, 8192, 105),
        (2, 1, 2, 16384, 184),
        (1, 2, 3, 1_594_323, 469),
    ];
    for (d0, d1, p, candidates, ns) in expected {
        let report = search(&SearchSpec::exhaustive(d0, d1, gf(p))).unwrap();
        assert_eq!(report.candidates, candidates, "candidates at ({d0}, {d1}) over GF({p})");
        assert_eq!(report.novikov_super, ns, "hits at ({d0}, {d1}) over GF({p})");
        assert_eq!(report.type_n, ns, "type N at ({d0}, {d1}) over GF({p})");
        assert_eq!(report.type_s, 0, "type S at ({d0}, {d1}) over GF({p})");
    }
}

#[test]
fn every_novikov_super_hit_supports_the_expected_bracket_structure() {
    // for each (1,1) and (1,2) hit over GF(3): the graded commutator is a
    // Lie superalgebra and the product satisfies the compatibility
    // identity with its own bracket
    for (d0, d1) in [(1usize, 1usize), (1, 2)] {
        let mut spec = SearchSpec::exhaustive(d0, d1, gf(3));
        spec.collect_novikov_hits = true;
        if (d0, d1) == (1, 2) {
            // keep runtime modest: the (1,2) hit list is small but the
            // candidate space is 3^13; reuse the short-circuit path
            spec.short_circuit = true;
        }
        let report = search(&spec).unwrap();
        assert_eq!(report.novikov_hits.len() as u64, report.novikov_super);
        for hit in &report.novikov_hits {
            let bracket = super_commutator(hit);
            assert!(is_lie_superalgebra(&bracket).pass);
            assert!(check_gd(hit, &bracket).unwrap().pass);
            assert_eq!(classify_type(hit).unwrap(), AlgebraType::N);
        }
    }
}

#[test]
fn catalog_completeness_over_gf3_has_exactly_36_orphans() {
    let report = verify_catalog_completeness(3, false).unwrap();
    assert!(!report.pass);
    assert_eq!(report.violations.len(), 36);
    assert!(report
        .notes
        .iter()
        .any(|n| n == "ee = 0: 105 solutions over GF(3), 87 matched to catalog rows, 18 orphans"));
    assert!(report
        .notes
        .iter()
        .any(|n| n == "ee = e: 142 solutions over GF(3), 124 matched to catalog rows, 18 orphans"));
}

#[test]
fn pairing_sweep_outcomes_for_the_whole_catalog_over_gf5() {
    // T1 admits every pairing, T6 admits none (it is not a module), and
    // every other row admits exactly the zero pairing.
    for tag in catalog_tags_gf(gf(5)).unwrap() {
        let report = verify_pairing_constraints(&tag, 5).unwrap();
        match tag.name() {
            "T1" => {
                assert!(report.pass, "{tag}");
                assert!(report.notes[0].contains("625 of 625"), "{tag}: {}", report.notes[0]);
            }
            "T6" => {
                assert!(!report.pass, "{tag}");
                assert!(report.notes[0].contains("0 of 625"), "{tag}: {}", report.notes[0]);
            }
            _ => {
                assert!(report.pass, "{tag}");
                assert!(report.notes[0].contains("1 of 625"), "{tag}: {}", report.notes[0]);
            }
        }
    }
}

#[test]
fn odd_square_zero_hits_classify_n() {
    // hits whose odd-times-odd block vanishes have equal graded and
    // ungraded brackets, hence are type N; cross-check on the concrete
    // (1,2) GF(2) hit list
    let mut spec = SearchSpec::exhaustive(1, 2, gf(2));
    spec.collect_novikov_hits = true;
    let report = search(&spec).unwrap();
    let mut with_zero_square = 0;
    for hit in &report.novikov_hits {
        if hit.odd_square_is_zero() {
            with_zero_square += 1;
            assert_eq!(classify_type(hit).unwrap(), AlgebraType::N);
        }
    }
    assert!(with_zero_square > 0);
}

#[test]
fn catalog_names_are_stable() {
    assert_eq!(
        CatalogTag::all_names(),
        ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12"]
    );
    let f3 = gf(3);
    // parameter sweep sizes over GF(3): 4 bare rows + 6 single-parameter
    // rows with 3 values each + 6 ordered distinct pairs + 2 nonzero b
    assert_eq!(catalog_tags_gf(f3).unwrap().len(), 4 + 6 * 3 + 6 + 2);
}

#[test]
fn witness_shape_would_be_reported_faithfully() {
    // no type-S witness exists in dimension <= 3, but the report plumbing
    // must keep type counts consistent in every cell
    for p in [2u64, 3] {
        for (d0, d1) in [(1usize, 1usize), (1, 2), (2, 0)] {
            if (d0, d1) == (1, 2) && p == 3 {
                continue;
            }
            let report = search(&SearchSpec::exhaustive(d0, d1, gf(p))).unwrap();
            assert_eq!(report.type_n + report.type_s, report.novikov_super);
            assert_eq!(report.graded, report.candidates);
            assert_eq!(report.witnesses.len() as u64, report.type_s);
        }
    }
}

#[test]
fn odd_pair_example_is_found_by_search() {
    // the (1,2) algebra with uv = -vu = e (over GF(3): -1 = 2) appears
    // among the GF(3) hits
    let f3 = gf(3);
    let target = SuperAlgebra::from_entries(
        1,
        2,
        f3,
        &[(1, 2, 0, f3.one()), (2, 1, 0, f3.integer(2))],
    )
    .unwrap();
    let mut spec = SearchSpec::exhaustive(1, 2, f3);
    spec.collect_novikov_hits = true;
    let report = search(&spec).unwrap();
    assert!(report.novikov_hits.contains(&target));
}
