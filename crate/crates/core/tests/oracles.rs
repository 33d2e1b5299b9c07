use std::collections::BTreeMap;

use avgorder::analysis::{self, BoundVariant, CheckStatus, SearchFamilies};
use avgorder::arith::gcd;
use avgorder::census::{self, avg_elem_power, psi_cyclic, psi_elem_power};
use avgorder::perm::direct_product;
use avgorder::structure;
use avgorder::{average_order, order_census, psi, realize, Catalog, ExactRational, FiniteGroup, GroupRecipe};

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

fn group(text: &str) -> FiniteGroup {
    realize(&text.parse().unwrap()).unwrap()
}

fn avg(text: &str) -> ExactRational {
    average_order(&order_census(&group(text)).unwrap())
}

#[test]
fn psi_cyclic_matches_gcd_sum() {
    for n in 1..=2000u64 {
        let direct: u128 = (0..n).map(|k| (n / gcd(k, n)) as u128).sum();
        assert_eq!(psi_cyclic(n), direct, "n = {n}");
    }
}

#[test]
fn psi_elem_power_matches_enumeration() {
    for p in [2u64, 3, 5] {
        for k in 1..=2u32 {
            for m in 1..=3u32 {
                let recipe = GroupRecipe::product_of((0..m).map(|_| GroupRecipe::Cyclic(p.pow(k)))).unwrap();
                let direct = psi(&order_census(&realize(&recipe).unwrap()).unwrap());
                assert_eq!(psi_elem_power(p, k, m), direct.into(), "p={p} k={k} m={m}");
            }
        }
    }
}

#[test]
fn frozen_censuses() {
    let cases: [(&str, &[(u64, u64)]); 6] = [
        ("S(3)", &[(1, 1), (2, 3), (3, 2)]),
        ("A(4)", &[(1, 1), (2, 3), (3, 8)]),
        ("A(5)", &[(1, 1), (2, 15), (3, 20), (5, 24)]),
        ("Dic(8)", &[(1, 1), (2, 1), (4, 6)]),
        ("D(8)", &[(1, 1), (2, 5), (4, 2)]),
        ("SD(7,3)", &[(1, 1), (3, 14), (7, 6)]),
    ];
    for (text, counts) in cases {
        let want: BTreeMap<u64, u64> = counts.iter().copied().collect();
        assert_eq!(order_census(&group(text)).unwrap().counts(), &want, "{text}");
    }
}

#[test]
fn every_catalog_fixture_holds() {
    let catalog = Catalog::embedded();
    for entry in catalog.entries() {
        assert_eq!(entry.fixture_mismatches().unwrap(), Vec::<String>::new());
    }
}

#[test]
fn average_order_is_multiplicative_on_coprime_pairs() {
    let pieces = ["C(2)", "C(3)", "C(4)", "C(5)", "S(3)", "SD(7,3)"];
    for (i, a) in pieces.iter().enumerate() {
        for b in &pieces[i + 1..] {
            let (ga, gb) = (group(a), group(b));
            if gcd(ga.order().unwrap() as u64, gb.order().unwrap() as u64) != 1 {
                continue;
            }
            let product = avg(&format!("{a} x {b}"));
            assert_eq!(product, avg(a) * avg(b), "{a} x {b}");
            let direct = average_order(&order_census(&direct_product(&ga, &gb).unwrap()).unwrap());
            assert_eq!(product, direct);
        }
    }
}

#[test]
fn product_identity_examples() {
    assert_eq!(analysis::elementary_product_check(3, 1, &group("C(2)")).unwrap().formula, q(7, 2));
    assert_eq!(avg("C(6)"), q(7, 2));
    for m in 1..=3u32 {
        for k in 1..=3u32 {
            let check = analysis::elementary_product_check(2, m, &group(&format!("E(2,{k})"))).unwrap();
            let want = q(2, 1) - ExactRational::ratio(1, 1u64 << (m + k));
            assert_eq!(check.formula, want);
            assert_eq!(check.direct, want);
        }
    }
    let a5 = analysis::elementary_product_check(2, 1, &group("A(5)")).unwrap();
    assert_eq!((a5.formula, a5.direct), (q(201, 40), q(201, 40)));
}

#[test]
fn bound_checks() {
    let s3 = analysis::order_bound_check(&group("S(3)"), &q(13, 6)).unwrap();
    assert_eq!(s3.status, CheckStatus::Vacuous);
    assert_eq!(s3.bound, q(3, 1));
    assert!(!s3.hypothesis_holds);

    let a4 = analysis::order_bound_check(&group("A(4)"), &q(11, 4)).unwrap();
    assert!(a4.hypothesis_holds);
    assert_eq!((a4.bound.clone(), a4.n_d2, a4.status), (q(1, 1), 3, CheckStatus::Confirmed));
    let census = order_census(&group("E(2,3) x C(3)")).unwrap();
    assert_eq!(average_order(&census), q(35, 8));
    let check = analysis::order_bound_check_census(&census, &q(9, 2), BoundVariant::Standard).unwrap();
    assert!(check.hypothesis_holds);
    assert_eq!(check.status, CheckStatus::Confirmed);
    assert_eq!(check.n_d2, 7);
    let strong = analysis::order_bound_check_census(&census, &q(9, 2), BoundVariant::Strengthened).unwrap();
    assert_eq!((check.bound.clone(), strong.bound), (q(-38, 1), q(-37, 1)));
    let s3 = order_census(&group("S(3)")).unwrap();
    assert!(analysis::order_bound_check_census(&s3, &q(3, 1), BoundVariant::Strengthened).is_err());
    assert!(analysis::order_bound_check(&group("C(3)"), &q(3, 1)).is_err());
}

#[test]
fn min_table_examples() {
    let catalog = Catalog::embedded();
    let (a6, ids) = analysis::min_average_order(&catalog, 6).unwrap();
    assert_eq!((a6, ids), (q(13, 6), vec!["S3".to_string()]));
    assert_eq!(analysis::min_average_order(&catalog, 12).unwrap().0, q(31, 12));
    let (a23, ids) = analysis::min_average_order(&catalog, 23).unwrap();
    assert_eq!((a23, ids), (q(507, 23), vec!["C23".to_string()]));
    let (a16, ids) = analysis::min_average_order(&catalog, 16).unwrap();
    assert_eq!((a16, ids), (q(31, 16), vec!["C2^4".to_string()]));
}

#[test]
fn threshold_examples() {
    let catalog = Catalog::embedded();
    let report = analysis::verify_thresholds(&catalog, 2).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    let row = |id: &str| report.rows.iter().find(|r| r.id == id).unwrap();
    assert!(row("C2^4").below_elementary && row("C2^4").elementary_abelian_2);
    assert!(!row("D8").below_elementary && row("D8").below_solvable);
    assert!(!row("A(5)").solvable && !row("A(5)").below_solvable);
}

#[test]
fn involution_criteria() {
    let v = structure::n2_criteria_check(&group("E(2,4)")).unwrap();
    assert!(v.dense_hypothesis && v.dense_conclusion_holds());
    let v = structure::n2_criteria_check(&group("E(2,2) x A(5)")).unwrap();
    assert_eq!(v.involutions, 63);
    assert!(v.sparse_hypothesis && !v.solvable);
    assert_eq!(v.c2_power_times_a5, Some(2));
    assert!(v.sparse_conclusion_holds());
}

#[test]
fn limit_examples() {
    let trace = analysis::limit_sequence(6, 40).unwrap();
    assert_eq!(trace.terms[0].avg_order, q(7, 2));
    assert!(trace.strictly_decreasing_gaps());
    assert!(*trace.last_gap().unwrap() < q(1, 1_000_000));
    for term in analysis::limit_sequence(2, 10).unwrap().terms {
        assert_eq!(term.avg_order, q(2, 1) - ExactRational::ratio(1, 1u64 << term.m));
    }
    for n in 2..=12 {
        for m in 1..=6 {
            assert_eq!(analysis::limit_term(n, m).unwrap(), analysis::limit_term_rearranged(n, m).unwrap());
        }
    }
    assert_eq!(avg_elem_power(3, 1, 1), q(7, 3));
    assert!(analysis::limit_sequence(1, 5).is_err());
    assert!(analysis::limit_sequence(4, 0).is_err());
}

#[test]
fn density_examples() {
    let catalog = Catalog::embedded();
    let subjects = analysis::small_value_subjects(&catalog, 20, 97).unwrap();
    let scan = analysis::density_scan(&subjects, &q(1, 24)).unwrap();
    let labels: Vec<&str> = scan.occupants.iter().map(|s| s.label.as_str()).collect();
    assert_eq!(labels, vec!["S3"]);
    assert!(scan.all_below_n0);
    for eps in [q(1, 13), q(1, 1000), q(1, 25)] {
        let scan = analysis::density_scan(&subjects, &eps).unwrap();
        let labels: Vec<&str> = scan.occupants.iter().map(|s| s.label.as_str()).collect();
        assert!(!labels.contains(&"C4") && !labels.contains(&"D8"));
    }
}

#[test]
fn integer_hits_reenumerate() {
    let search = analysis::integer_search(5000, SearchFamilies::ALL).unwrap();
    assert_eq!(search.hits.len(), 6);
    for hit in &search.hits {
        assert_eq!(analysis::enumerate_hit(hit).unwrap(), hit.avg_order * hit.order as u128);
    }
    let g4 = &search.hits[3];
    assert_eq!(g4.recipe.to_string(), "C(13) x C(299)");
    assert_eq!(g4.psi, 1_107_795);
    let abelian_only = analysis::integer_search(5000, SearchFamilies {
        abelian: true,
        frobenius_products: false,
    })
    .unwrap();
    assert_eq!(abelian_only.pairs(), vec![(3887, 285)]);
}

#[test]
fn ratio_criteria_witnesses_sit_on_their_thresholds() {
    for criterion in census::CRITERIA {
        let report = census::psi_ratios(&group(&witness_recipe(criterion.witness))).unwrap();
        assert_eq!(*report.statistic(criterion.statistic), criterion.threshold(), "{}", criterion.id());
    }
}

fn witness_recipe(name: &str) -> String {
    match name {
        "C2^2" => "E(2,2)".into(),
        "S3" => "S(3)".into(),
        "A4" => "A(4)".into(),
        "A5" => "A(5)".into(),
        "Q8" => "Dic(8)".into(),
        "C4" => "C(4)".into(),
        other => panic!("unknown witness {other}"),
    }
}
