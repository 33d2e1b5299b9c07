//! The verification suite: every check as a [`CheckRecord`], grouped under
//! selectors.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::analysis::{self, BoundVariant, CheckStatus, SearchFamilies};
use crate::catalog::Catalog;
use crate::census::{self, order_census, psi};
use crate::error::{Error, Result};
use crate::perm::direct_product;
use crate::rational::ExactRational;
use crate::recipe::{realize, GroupRecipe};
use crate::report::{CheckRecord, SuiteReport};
use crate::structure;

/// Published minimum average orders `a_n` for `n = 1..=23`, as `(num, den)`.
pub const MIN_AVERAGE_TABLE: [(i64, i64); 23] = [
    (1, 1),
    (3, 2),
    (7, 3),
    (7, 4),
    (21, 5),
    (13, 6),
    (43, 7),
    (15, 8),
    (25, 9),
    (31, 10),
    (111, 11),
    (31, 12),
    (157, 13),
    (57, 14),
    (147, 15),
    (31, 16),
    (273, 17),
    (43, 18),
    (343, 19),
    (71, 20),
    (85, 21),
    (133, 22),
    (507, 23),
];

/// Average orders quoted for specific groups: `(recipe, num, den)`.
pub const NAMED_AVERAGE_ORDERS: [(&str, i64, i64); 7] = [
    ("S(3)", 13, 6),
    ("C(4)", 11, 4),
    ("A(5)", 211, 60),
    ("D(8)", 19, 8),
    ("Dic(8)", 27, 8),
    ("C(8)", 43, 8),
    ("C(2) x C(4)", 23, 8),
];

/// Quoted ψ′ values `ψ(G)/ψ(C_|G|)`.
pub const NAMED_PSI_PRIME: [(&str, i64, i64); 3] = [("S(3)", 13, 21), ("A(4)", 31, 77), ("A(5)", 211, 1617)];

/// Quoted ψ″ values `ψ(G)/|G|²`.
pub const NAMED_PSI_DOUBLE_PRIME: [(&str, i64, i64); 3] = [("E(2,2)", 7, 16), ("Dic(8)", 27, 64), ("A(5)", 211, 3600)];

/// Groups of integer average order and order at most 5000: `(order, o)`.
pub const INTEGER_EXAMPLES: [(u64, u128); 6] = [(105, 17), (357, 65), (1785, 273), (3887, 285), (4515, 413), (4641, 785)];

pub const LIMIT_TARGETS: [u64; 6] = [2, 3, 4, 6, 10, 12];
pub const LIMIT_M: u32 = 40;

/// Groups `G` of the product-identity grid, run with `p` in {2, 3, 5} and
/// `m <= 3`; `A(5)` joins for `p = 2`, `m <= 2`.
pub const PRODUCT_GRID: [&str; 7] = ["C(2)", "C(3)", "C(6)", "S(3)", "D(8)", "Dic(8)", "A(4)"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Fixtures,
    NamedValues,
    MinTable,
    OrderBound,
    ElementaryProduct,
    Thresholds,
    SmallValues,
    Limits,
    Integers,
    Oracles,
    Structure,
    Density,
}

impl Suite {
    pub const SELECTORS: [Suite; 13] = [
        Suite::All,
        Suite::Fixtures,
        Suite::NamedValues,
        Suite::MinTable,
        Suite::OrderBound,
        Suite::ElementaryProduct,
        Suite::Thresholds,
        Suite::SmallValues,
        Suite::Limits,
        Suite::Integers,
        Suite::Oracles,
        Suite::Structure,
        Suite::Density,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Fixtures => "fixtures",
            Suite::NamedValues => "named-values",
            Suite::MinTable => "min-table",
            Suite::OrderBound => "order-bound",
            Suite::ElementaryProduct => "elementary-product",
            Suite::Thresholds => "thresholds",
            Suite::SmallValues => "small-values",
            Suite::Limits => "limits",
            Suite::Integers => "integers",
            Suite::Oracles => "oracles",
            Suite::Structure => "structure",
            Suite::Density => "density",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::SELECTORS
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::out_of_range("suite", format!("unknown selector `{s}`")))
    }
}

fn rational(pair: (i64, i64)) -> ExactRational {
    ExactRational::ratio(pair.0, pair.1)
}

fn recipe(text: &str) -> GroupRecipe {
    text.parse().expect("built-in recipe parses")
}

/// Runs one check; an error becomes a failing record carrying the message.
fn guarded(out: &mut Vec<CheckRecord>, suite: &'static str, id: &str, f: impl FnOnce(&mut Vec<CheckRecord>) -> Result<()>) {
    if let Err(e) = f(out) {
        out.push(CheckRecord::new(suite, id, "check ran to completion", false, json!({ "error": e.to_string() })));
    }
}

pub fn run_suite(suite: Suite, catalog: &Catalog) -> SuiteReport {
    let selected: Vec<Suite> = if suite == Suite::All {
        Suite::SELECTORS[1..].to_vec()
    } else {
        vec![suite]
    };
    let mut records = Vec::new();
    for s in selected {
        let out = &mut records;
        match s {
            Suite::All => unreachable!(),
            Suite::Fixtures => fixtures(out, catalog),
            Suite::NamedValues => named_values(out),
            Suite::MinTable => min_table(out, catalog),
            Suite::OrderBound => order_bound(out, catalog),
            Suite::ElementaryProduct => elementary_product(out),
            Suite::Thresholds => thresholds(out, catalog),
            Suite::SmallValues => small_values(out, catalog),
            Suite::Limits => limits(out),
            Suite::Integers => integers(out),
            Suite::Oracles => oracles(out, catalog),
            Suite::Structure => structure_checks(out, catalog),
            Suite::Density => density(out, catalog),
        }
    }
    SuiteReport { records }
}

fn fixtures(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "fixtures";
    let mismatches = catalog.class_count_mismatches();
    out.push(CheckRecord::new(
        S,
        "class-counts",
        "catalog lists every isomorphism class of order 1..=23",
        mismatches.is_empty(),
        json!({ "classes": catalog.classes().count(), "mismatches": mismatches }),
    ));
    for entry in catalog.entries() {
        let id = format!("fixture/{}", entry.id);
        guarded(out, S, &id, |out| {
            let bad = entry.fixture_mismatches()?;
            out.push(CheckRecord::new(
                S,
                &id,
                format!("{} = {} matches its recorded values", entry.id, entry.recipe),
                bad.is_empty(),
                json!({ "entry": entry.id, "mismatches": bad }),
            ));
            Ok(())
        });
    }
}

fn named_values(out: &mut Vec<CheckRecord>) {
    const S: &str = "named-values";
    let tables: [(&str, census::Statistic, &[(&str, i64, i64)]); 3] = [
        ("o", census::Statistic::AverageOrder, &NAMED_AVERAGE_ORDERS),
        ("psi_prime", census::Statistic::PsiPrime, &NAMED_PSI_PRIME),
        ("psi_double_prime", census::Statistic::PsiDoublePrime, &NAMED_PSI_DOUBLE_PRIME),
    ];
    for (label, statistic, rows) in tables {
        for &(text, num, den) in rows {
            let id = format!("{label}/{text}");
            guarded(out, S, &id, |out| {
                let report = census::psi_ratios(&realize(&recipe(text))?)?;
                let got = report.statistic(statistic);
                let want = ExactRational::ratio(num, den);
                out.push(CheckRecord::new(
                    S,
                    &id,
                    format!("{label}({text}) = {want}"),
                    *got == want,
                    json!({ "computed": got, "expected": want }),
                ));
                Ok(())
            });
        }
    }
}

fn min_table(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "min-table";
    for (i, &pair) in MIN_AVERAGE_TABLE.iter().enumerate() {
        let n = i as u64 + 1;
        let id = format!("a/{n}");
        guarded(out, S, &id, |out| {
            let (min, ids) = analysis::min_average_order(catalog, n)?;
            let want = rational(pair);
            out.push(CheckRecord::new(
                S,
                &id,
                format!("minimum average order at order {n} is {want}"),
                min == want,
                json!({ "computed": min, "expected": want, "attained_by": ids }),
            ));
            Ok(())
        });
    }
}

fn order_bound(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "order-bound";
    let thresholds = [(13, 6), (11, 4), (3, 1)];
    for entry in catalog.entries() {
        guarded(out, S, &format!("bound/{}", entry.id), |out| {
            let census = order_census(&entry.realize()?)?;
            if census.orders().len() < 3 {
                return Ok(());
            }
            for c in thresholds.map(rational) {
                let check = analysis::order_bound_check_census(&census, &c, BoundVariant::Standard)?;
                let record = CheckRecord::new(
                    S,
                    format!("bound/{}/{c}", entry.id),
                    format!("o < {c} forces n_d2 > bound"),
                    check.status != CheckStatus::Violated,
                    serde_json::to_value(&check).expect("serializes"),
                );
                out.push(if check.status == CheckStatus::Vacuous { record.vacuous() } else { record });
            }
            Ok(())
        });
    }
}

fn elementary_product(out: &mut Vec<CheckRecord>) {
    const S: &str = "elementary-product";
    let mut grid: Vec<(u64, u32, &str)> = Vec::new();
    for p in [2u64, 3, 5] {
        for m in 1..=3 {
            for g in PRODUCT_GRID {
                grid.push((p, m, g));
            }
        }
    }
    grid.extend([(2, 1, "A(5)"), (2, 2, "A(5)")]);
    for (p, m, text) in grid {
        let id = format!("product/{p}/{m}/{text}");
        guarded(out, S, &id, |out| {
            let g = realize(&recipe(text))?;
            let check = analysis::elementary_product_check(p, m, &g)?;
            out.push(CheckRecord::new(
                S,
                &id,
                format!("o(E({p},{m}) x {text}) by formula equals enumeration"),
                check.holds(),
                serde_json::to_value(&check).expect("serializes"),
            ));
            Ok(())
        });
    }
    guarded(out, S, "odd-part/A(5)", |out| {
        let sum = census::odd_part_sum(&realize(&GroupRecipe::Alternating(5))?, 2)?;
        out.push(CheckRecord::new(
            S,
            "odd-part/A(5)",
            "sum of odd element orders of A(5) is 181",
            sum == 181,
            json!({ "computed": sum }),
        ));
        Ok(())
    });
}

fn thresholds(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "thresholds";
    guarded(out, S, "thresholds", |out| {
        let report = analysis::verify_thresholds(catalog, 2)?;
        for row in &report.rows {
            let id = format!("thresholds/{}", row.id);
            let bad: Vec<&String> = report
                .violations
                .iter()
                .filter(|v| v.starts_with(&format!("{}:", row.id)))
                .collect();
            out.push(CheckRecord::new(
                S,
                id,
                "o < 13/6 iff elementary abelian 2-group; o < 11/4 implies solvable; ratio criteria hold",
                bad.is_empty(),
                json!({ "row": row, "violations": bad }),
            ));
        }
        Ok(())
    });
    let mut subjects: Vec<(String, GroupRecipe)> = catalog.classes().map(|e| (e.id.clone(), e.recipe.clone())).collect();
    for m in 0..=2 {
        let r = analysis::c2_power_times_a5_recipe(m);
        subjects.push((r.to_string(), r));
    }
    for (name, r) in subjects {
        let id = format!("involutions/{name}");
        guarded(out, S, &id, |out| {
            let verdict = structure::n2_criteria_check(&realize(&r)?)?;
            let ok = verdict.dense_conclusion_holds() && verdict.sparse_conclusion_holds();
            let record = CheckRecord::new(
                S,
                &id,
                "n2 >= 3n/4 forces elementary abelian; n2 > n/4 - 1 forces solvable or C2^m x A5",
                ok,
                serde_json::to_value(&verdict).expect("serializes"),
            );
            let vacuous = !verdict.dense_hypothesis && !verdict.sparse_hypothesis;
            out.push(if vacuous { record.vacuous() } else { record });
            Ok(())
        });
    }
}

fn small_values(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "small-values";
    guarded(out, S, "small-values", |out| {
        let subjects = analysis::small_value_subjects(catalog, 20, 97)?;
        let report = analysis::verify_small_values(&subjects);
        out.push(CheckRecord::new(
            S,
            "small-values",
            "no o in [2, 13/6), no o = 3, psi odd, 2-group and odd p-group lower bounds",
            report.passed(),
            serde_json::to_value(&report).expect("serializes"),
        ));
        Ok(())
    });
}

fn limits(out: &mut Vec<CheckRecord>) {
    const S: &str = "limits";
    let tolerance = ExactRational::ratio(1, 1_000_000);
    for n in 2..=12u64 {
        let id = format!("limit/{n}");
        guarded(out, S, &id, |out| {
            let trace = analysis::limit_sequence(n, LIMIT_M)?;
            let gap = trace.last_gap().expect("non-empty").clone();
            out.push(CheckRecord::new(
                S,
                format!("{id}/decreasing"),
                format!("|o(G_m) - {n}| strictly decreases for m <= {LIMIT_M}"),
                trace.strictly_decreasing_gaps(),
                json!({ "final_gap": gap, "final_gap_decimal": gap.to_decimal() }),
            ));
            if LIMIT_TARGETS.contains(&n) {
                out.push(CheckRecord::new(
                    S,
                    format!("{id}/tolerance"),
                    format!("|o(G_{LIMIT_M}) - {n}| < 1e-6"),
                    gap < tolerance,
                    json!({ "final_gap": gap, "final_gap_decimal": gap.to_decimal() }),
                ));
            }
            let mismatched: Vec<u32> = trace
                .terms
                .iter()
                .filter(|t| analysis::limit_term_rearranged(n, t.m).map(|v| v != t.avg_order).unwrap_or(true))
                .map(|t| t.m)
                .collect();
            out.push(CheckRecord::new(
                S,
                format!("{id}/closed-forms"),
                "both closed forms agree",
                mismatched.is_empty(),
                json!({ "mismatched_m": mismatched }),
            ));
            for m in 1..=3 {
                let direct = analysis::limit_term_by_enumeration(n, m)?;
                let closed = &trace.terms[m as usize - 1].avg_order;
                out.push(CheckRecord::new(
                    S,
                    format!("{id}/enumeration/{m}"),
                    "closed form equals enumeration",
                    *closed == direct,
                    json!({ "closed_form": closed, "enumerated": direct }),
                ));
            }
            Ok(())
        });
    }
}

fn integers(out: &mut Vec<CheckRecord>) {
    const S: &str = "integers";
    guarded(out, S, "integers", |out| {
        let search = analysis::integer_search(5000, SearchFamilies::ALL)?;
        let pairs = search.pairs();
        out.push(CheckRecord::new(
            S,
            "integers/pairs",
            "family-restricted search up to order 5000 finds exactly the six integer examples",
            pairs == INTEGER_EXAMPLES,
            json!({ "found": pairs, "scope": search.scope }),
        ));
        for hit in &search.hits {
            let enumerated = analysis::enumerate_hit(hit)?;
            out.push(CheckRecord::new(
                S,
                format!("integers/{}", hit.recipe),
                "o times order equals psi by enumeration",
                enumerated == hit.avg_order * hit.order as u128,
                json!({ "hit": hit, "enumerated_psi": enumerated }),
            ));
        }
        Ok(())
    });
}

fn oracles(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "oracles";
    guarded(out, S, "oracles/psi-cyclic", |out| {
        let mut bad = Vec::new();
        for n in 1..=200u64 {
            let direct = psi(&order_census(&realize(&GroupRecipe::Cyclic(n))?)?);
            if direct != census::psi_cyclic(n) {
                bad.push(n);
            }
        }
        out.push(CheckRecord::new(
            S,
            "oracles/psi-cyclic",
            "psi_cyclic(n) equals enumeration for n <= 200",
            bad.is_empty(),
            json!({ "mismatched": bad }),
        ));
        Ok(())
    });
    guarded(out, S, "oracles/psi-elem-power", |out| {
        let mut bad = Vec::new();
        for p in [2u64, 3, 5] {
            for k in 1..=2u32 {
                for m in 1..=3u32 {
                    let g = realize(&GroupRecipe::product_of((0..m).map(|_| GroupRecipe::Cyclic(p.pow(k)))).expect("m >= 1"))?;
                    let direct = psi(&order_census(&g)?);
                    if num_bigint::BigUint::from(direct) != census::psi_elem_power(p, k, m) {
                        bad.push((p, k, m));
                    }
                }
            }
        }
        out.push(CheckRecord::new(
            S,
            "oracles/psi-elem-power",
            "psi_elem_power(p, k, m) equals enumeration for p in {2,3,5}, k <= 2, m <= 3",
            bad.is_empty(),
            json!({ "mismatched": bad }),
        ));
        Ok(())
    });
    guarded(out, S, "oracles/multiplicative", |out| {
        let mut realized = Vec::new();
        for e in catalog.entries().iter().filter(|e| e.order > 1) {
            let g = e.realize()?;
            let s = psi(&order_census(&g)?);
            realized.push((e, g, s));
        }
        let mut checked = 0usize;
        let mut bad = Vec::new();
        for (i, (a, ga, sa)) in realized.iter().enumerate() {
            for (b, gb, sb) in &realized[i + 1..] {
                if crate::arith::gcd(a.order, b.order) != 1 || a.order * b.order > 10_000 {
                    continue;
                }
                let direct = psi(&order_census(&direct_product(ga, gb)?)?);
                checked += 1;
                if direct != sa * sb {
                    bad.push(format!("{} x {}", a.id, b.id));
                }
            }
        }
        out.push(CheckRecord::new(
            S,
            "oracles/multiplicative",
            "psi(G x H) = psi(G) psi(H) by enumeration for coprime catalog pairs up to order 10000",
            bad.is_empty(),
            json!({ "pairs": checked, "mismatched": bad }),
        ));
        Ok(())
    });
}

fn structure_checks(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "structure";
    for entry in catalog.classes() {
        let id = format!("structure/{}", entry.id);
        guarded(out, S, &id, |out| {
            let g = entry.realize()?;
            let solvable = structure::is_solvable(&g)?;
            out.push(CheckRecord::new(
                S,
                format!("{id}/solvable"),
                "derived series reaches the trivial group",
                solvable,
                json!({ "derived_length": structure::derived_length(&g)? }),
            ));
            if crate::arith::prime_power_base(entry.order).is_some() {
                let nilpotent = structure::is_nilpotent(&g)?;
                out.push(CheckRecord::new(
                    S,
                    format!("{id}/nilpotent"),
                    "p-groups are nilpotent",
                    nilpotent,
                    json!({ "order": entry.order }),
                ));
            }
            Ok(())
        });
    }
    for text in ["A(5)", "C(2) x A(5)"] {
        let id = format!("structure/{text}");
        guarded(out, S, &id, |out| {
            let solvable = structure::is_solvable(&realize(&recipe(text))?)?;
            out.push(CheckRecord::new(S, &id, "not solvable", !solvable, json!({ "solvable": solvable })));
            Ok(())
        });
    }
    guarded(out, S, "structure/S(3)", |out| {
        let nilpotent = structure::is_nilpotent(&realize(&GroupRecipe::Symmetric(3))?)?;
        out.push(CheckRecord::new(
            S,
            "structure/S(3)",
            "S(3) is not nilpotent",
            !nilpotent,
            json!({ "nilpotent": nilpotent }),
        ));
        Ok(())
    });
}

fn density(out: &mut Vec<CheckRecord>, catalog: &Catalog) {
    const S: &str = "density";
    for eps in [(1, 24), (1, 13), (1, 100)] {
        let eps = rational(eps);
        let id = format!("density/{eps}");
        guarded(out, S, &id, |out| {
            let subjects = analysis::small_value_subjects(catalog, 20, 97)?;
            let scan = analysis::density_scan(&subjects, &eps)?;
            let labels: Vec<&str> = scan.occupants.iter().map(|s| s.label.as_str()).collect();
            let ok = scan.all_below_n0
                && labels.contains(&"S3")
                && !labels.contains(&"C4")
                && !labels.contains(&"D8");
            out.push(CheckRecord::new(
                S,
                &id,
                format!("groups with o in [13/6, {}) have order below n0 = {}", scan.upper, scan.n0),
                ok,
                serde_json::to_value(&scan).expect("serializes"),
            ));
            Ok(())
        });
    }
}
