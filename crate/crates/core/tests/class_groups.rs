mod common;

use std::collections::HashSet;

use attainable_core::class_group::{class_group_structure_any, factorize, reduced_forms_any};
use attainable_core::*;

const SMALL: [i64; 5] = [-23, -47, -71, -199, -479];

fn fundamental_in(from: i64, to: i64) -> impl Iterator<Item = i64> {
    (from..=to).filter(|&d| is_fundamental_discriminant(d).unwrap())
}

#[test]
fn reduced_forms_are_reduced_and_distinct() {
    for d in fundamental_in(-40_000, -3) {
        let forms = reduced_forms(d).unwrap();
        assert!(forms.iter().all(|f| f.is_reduced() && f.discriminant() == d && f.is_primitive()));
        let distinct: HashSet<_> = forms.iter().collect();
        assert_eq!(distinct.len(), forms.len(), "D = {d}");
        assert_eq!(forms[0], QuadForm::principal(d).unwrap());
    }
}

#[test]
fn class_numbers_match_dirichlet_formula() {
    for d in fundamental_in(-3000, -5) {
        assert_eq!(class_number(d).unwrap(), common::dirichlet_class_number(d), "D = {d}");
    }
}

#[test]
fn group_laws_on_small_discriminants() {
    for d in SMALL {
        let forms = reduced_forms(d).unwrap();
        let h = forms.len() as u64;
        let one = QuadForm::principal(d).unwrap();
        for f in &forms {
            assert_eq!(one.compose(f).unwrap(), *f);
            assert_eq!(f.compose(&f.opposite()).unwrap(), one);
            assert_eq!(f.pow(h), one);
            for g in &forms {
                let fg = f.compose(g).unwrap();
                assert_eq!(fg, g.compose(f).unwrap());
                assert!(fg.is_reduced());
                for k in &forms {
                    assert_eq!(fg.compose(k).unwrap(), f.compose(&g.compose(k).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn composition_is_a_latin_square() {
    // each row of the multiplication table is a permutation of the classes
    for d in [-3299i64, -4027, -5923] {
        let forms = reduced_forms(d).unwrap();
        let all: HashSet<_> = forms.iter().copied().collect();
        for f in forms.iter().take(20) {
            let row: HashSet<_> = forms.iter().map(|g| f.compose(g).unwrap()).collect();
            assert_eq!(row, all, "D = {d}, f = {f}");
        }
    }
}

#[test]
fn unreduced_inputs_compose_to_the_same_class() {
    let d = -479;
    let forms = reduced_forms(d).unwrap();
    for f in &forms {
        for g in &forms {
            // (a, b, c) -> (a, b + 2ka, ...) is a proper equivalence
            let k = 3;
            let shifted = QuadForm::new(g.a, g.b + 2 * k * g.a, g.a * k * k + g.b * k + g.c).unwrap();
            assert_eq!(f.compose(&shifted).unwrap(), f.compose(g).unwrap());
        }
    }
}

#[test]
fn sylow_structure_matches_order_statistics() {
    let mut checked = 0;
    for d in fundamental_in(-6000, -3).chain([-3299, -4027, -3896, -11651]) {
        let forms = reduced_forms(d).unwrap();
        let s = class_group_structure(d).unwrap();
        if s.class_number < 8 {
            continue;
        }
        let orders = common::element_orders(&forms);
        for (q, e) in factorize(s.class_number) {
            let expected = common::sylow_by_order_statistics(&orders, q, e);
            assert_eq!(s.sylow[&q].parts(), expected.as_slice(), "D = {d}, q = {q}");
        }
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn known_structures() {
    let s = class_group_structure(-3299).unwrap();
    assert_eq!(s.class_number, 27);
    assert_eq!(s.sylow[&3], Partition::new(vec![2, 1]).unwrap());

    let s = class_group_structure(-4027).unwrap();
    assert_eq!(s.class_number, 9);
    assert_eq!(s.sylow[&3], Partition::new(vec![1, 1]).unwrap());

    assert_eq!(class_number(-47), Ok(5));
    assert_eq!(class_group_structure(-47).unwrap().sylow[&5], Partition::single(1).unwrap());
}

#[test]
fn large_discriminant_has_order_5_to_the_5() {
    let s = class_group_structure(-145_367_147).unwrap();
    assert_eq!(s.class_number, 3125);
    assert_eq!(s.sylow.len(), 1);
    assert_eq!(s.sylow[&5].parts(), &[3, 1, 1]);
    assert_eq!(s.invariant_factors(), vec![125, 5, 5]);
}

#[test]
fn structure_consistency_and_size_bound() {
    for d in fundamental_in(-20_000, -3) {
        let s = class_group_structure(d).unwrap();
        let product: u64 = s.sylow.iter().map(|(&q, l)| q.pow(l.size() as u32)).product();
        assert_eq!(product, s.class_number, "D = {d}");
        let abs = d.unsigned_abs() as f64;
        assert!((s.class_number as f64) < abs.sqrt() * (abs.ln() + 2.0), "D = {d}");
    }
}

#[test]
fn non_fundamental_discriminants_with_flag() {
    // h(-12) = 1, h(-16) = 1, h(-27) = 1, h(-28) = 1, h(-36) = 2, h(-44) = 3
    let expected = [(-12, 1), (-16, 1), (-27, 1), (-28, 1), (-36, 2), (-44, 3), (-108, 3)];
    for (d, h) in expected {
        assert_eq!(reduced_forms_any(d).unwrap().len(), h, "D = {d}");
        assert_eq!(class_group_structure_any(d).unwrap().class_number, h as u64);
    }
}

#[test]
fn survey_counts_and_attributions() {
    let r = survey(-100, -3, &[3], 4).unwrap();
    let fundamental = fundamental_in(-100, -3).count() as u64;
    assert_eq!(r.scanned, fundamental);
    assert_eq!(r.scanned, 31);
    let three: u64 = r.tallies.iter().filter(|t| t.p == 3).map(|t| t.count).sum();
    let summary = &r.prime_summaries[0];
    assert_eq!(three + summary.trivial + summary.beyond_nmax, r.scanned);
    assert_eq!(three, 5);
    let hist: u64 = r.class_number_histogram.iter().map(|e| e.count).sum();
    assert_eq!(hist, r.scanned);

    let around = survey(-30, -20, &[3], 2).unwrap();
    assert!(around.tallies.iter().any(|t| t.p == 3 && t.lambda == "1" && t.count >= 1));
}

#[test]
fn survey_is_deterministic() {
    let a = survey(-5000, -3, &[3, 5, 7], 4).unwrap();
    let b = survey(-5000, -3, &[7, 5, 3, 3], 4).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_tsv(), b.to_tsv());
    for s in &a.prime_summaries {
        let tallied: u64 = a.tallies.iter().filter(|t| t.p == s.p).map(|t| t.count).sum();
        assert_eq!(tallied + s.trivial + s.beyond_nmax, a.scanned);
    }
}
