//! Executable checks and searches over the catalog and a few infinite
//! families: element-count bounds, the `C_p^m × G` product identity, the
//! minimum average order per group order, threshold implications, the
//! prime-power limit sequences, the gap above 13/6, and integer average
//! orders.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith;
use crate::catalog::{Catalog, CatalogEntry, EntryKind, MAX_CLASS_ORDER};
use crate::census::{self, average_order, order_census, psi, psi_cyclic, OrderCensus};
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;
use crate::rational::ExactRational;
use crate::recipe::{realize, GroupRecipe};
use crate::structure;

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

/// Below this average order a group is elementary abelian of exponent 2.
pub fn elementary_threshold() -> ExactRational {
    q(13, 6)
}

/// Below this average order a group is solvable.
pub fn solvable_threshold() -> ExactRational {
    q(11, 4)
}

// ---------------------------------------------------------------------------
// element-count bound

/// `Standard` subtracts `(d₃ - 1)/(d₃ - d₂)`; `Strengthened` subtracts
/// `(d₃ - 2)/(d₃ - d₂)` and needs at least four distinct element orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVariant {
    Standard,
    Strengthened,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Confirmed,
    Vacuous,
    Violated,
}

/// Lower bound on the number of elements of the second-smallest order
/// `d₂` in a group of order `n` whose average order is below `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub c: ExactRational,
    pub variant: BoundVariant,
    pub d2: u64,
    pub d3: u64,
    pub n: u64,
    pub bound: ExactRational,
    pub n_d2: u64,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub status: CheckStatus,
}

/// `((d₃ - c)/(d₃ - d₂))·n - (d₃ - s)/(d₃ - d₂)` with `s = 1` or `2`.
pub fn order_bound(c: &ExactRational, d2: u64, d3: u64, n: u64, variant: BoundVariant) -> ExactRational {
    assert!(d3 > d2, "d3 must exceed d2");
    let gap = ExactRational::from(d3 - d2);
    let slack = match variant {
        BoundVariant::Standard => 1,
        BoundVariant::Strengthened => 2,
    };
    let slope = (ExactRational::from(d3) - c) / gap.clone();
    &slope * &ExactRational::from(n) - ExactRational::from(d3 - slack) / gap
}

pub fn order_bound_check_census(
    census: &OrderCensus,
    c: &ExactRational,
    variant: BoundVariant,
) -> Result<BoundCheck> {
    let orders = census.orders();
    let needed = match variant {
        BoundVariant::Standard => 3,
        BoundVariant::Strengthened => 4,
    };
    if orders.len() < needed {
        return Err(Error::Hypothesis(format!(
            "{} distinct element orders, need at least {needed}",
            orders.len()
        )));
    }
    let (d2, d3, n) = (orders[1], orders[2], census.group_order());
    let bound = order_bound(c, d2, d3, n, variant);
    let n_d2 = census.count(d2);
    let hypothesis_holds = average_order(census) < *c;
    let conclusion_holds = ExactRational::from(n_d2) > bound;
    let status = match (hypothesis_holds, conclusion_holds) {
        (false, _) => CheckStatus::Vacuous,
        (true, true) => CheckStatus::Confirmed,
        (true, false) => CheckStatus::Violated,
    };
    Ok(BoundCheck {
        c: c.clone(),
        variant,
        d2,
        d3,
        n,
        bound,
        n_d2,
        hypothesis_holds,
        conclusion_holds,
        status,
    })
}

pub fn order_bound_check(g: &FiniteGroup, c: &ExactRational) -> Result<BoundCheck> {
    order_bound_check_census(&order_census(g)?, c, BoundVariant::Standard)
}

// ---------------------------------------------------------------------------
// o(C_p^m × G)

/// `o(G) + (o(C_p^m) - 1)/|G| · Σ_{p ∤ o(x)} o(x)`, from the census of `G`.
pub fn elementary_product_formula(p: u64, m: u32, census: &OrderCensus) -> ExactRational {
    let avg_cp = census::avg_elem_power(p, 1, m);
    let n = ExactRational::from(census.group_order());
    let coprime = ExactRational::from(census.coprime_part_sum(p));
    average_order(census) + (avg_cp - ExactRational::one()) / n * coprime
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductIdentity {
    pub p: u64,
    pub m: u32,
    pub formula: ExactRational,
    pub direct: ExactRational,
}

impl ProductIdentity {
    pub fn holds(&self) -> bool {
        self.formula == self.direct
    }
}

/// Both sides of the product identity for `C_p^m × g`; the direct side
/// enumerates the product group.
pub fn elementary_product_check(p: u64, m: u32, g: &FiniteGroup) -> Result<ProductIdentity> {
    let census = order_census(g)?;
    let formula = elementary_product_formula(p, m, &census);
    let factor = realize(&GroupRecipe::ElementaryAbelian { p, m })?;
    let product = crate::perm::direct_product(&factor, g)?;
    let direct = average_order(&order_census(&product)?);
    Ok(ProductIdentity { p, m, formula, direct })
}

// ---------------------------------------------------------------------------
// catalog statistics

/// Census-level and structural data for one catalog entry.
#[derive(Clone, Debug)]
pub struct EntryStats<'a> {
    pub entry: &'a CatalogEntry,
    pub census: OrderCensus,
    pub psi: u128,
    pub avg_order: ExactRational,
    pub elementary_abelian_2: bool,
    pub solvable: bool,
    pub nilpotent: bool,
}

pub fn entry_stats(entry: &CatalogEntry) -> Result<EntryStats<'_>> {
    let g = entry.realize()?;
    let census = order_census(&g)?;
    Ok(EntryStats {
        entry,
        psi: psi(&census),
        avg_order: average_order(&census),
        elementary_abelian_2: structure::is_elementary_abelian_2(&census),
        solvable: structure::is_solvable(&g)?,
        nilpotent: structure::is_nilpotent(&g)?,
        census,
    })
}

pub fn class_stats(catalog: &Catalog) -> Result<Vec<EntryStats<'_>>> {
    catalog.classes().map(entry_stats).collect()
}

/// Minimum average order over the classes of order `n`, with every entry
/// attaining it.
pub fn min_average_order(catalog: &Catalog, n: u64) -> Result<(ExactRational, Vec<String>)> {
    let entries = catalog.all_groups_of_order(n)?;
    let mut values = Vec::with_capacity(entries.len());
    for entry in &entries {
        let g = entry.realize()?;
        values.push((average_order(&order_census(&g)?), entry.id.clone()));
    }
    let min = values
        .iter()
        .map(|(v, _)| v.clone())
        .min()
        .ok_or_else(|| Error::out_of_range("group order", format!("no catalog entries of order {n}")))?;
    let ids = values
        .into_iter()
        .filter(|(v, _)| *v == min)
        .map(|(_, id)| id)
        .collect();
    Ok((min, ids))
}

/// The minimum-average-order table for `1..=max_n`.
pub fn min_average_table(catalog: &Catalog, max_n: u64) -> Result<Vec<(u64, ExactRational, Vec<String>)>> {
    if !(1..=MAX_CLASS_ORDER).contains(&max_n) {
        return Err(Error::out_of_range(
            "table size",
            format!("{max_n} is outside 1..={MAX_CLASS_ORDER}"),
        ));
    }
    (1..=max_n)
        .map(|n| min_average_order(catalog, n).map(|(v, ids)| (n, v, ids)))
        .collect()
}

// ---------------------------------------------------------------------------
// threshold implications

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdRow {
    pub id: String,
    pub order: u64,
    pub avg_order: ExactRational,
    pub elementary_abelian_2: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    pub below_elementary: bool,
    pub below_solvable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub rows: Vec<ThresholdRow>,
    pub violations: Vec<String>,
}

impl ThresholdReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Non-solvable witnesses checked alongside the catalog: `C₂^m × A₅`.
pub fn c2_power_times_a5_recipe(m: u32) -> GroupRecipe {
    if m == 0 {
        GroupRecipe::Alternating(5)
    } else {
        GroupRecipe::product(GroupRecipe::ElementaryAbelian { p: 2, m }, GroupRecipe::Alternating(5))
    }
}

/// For every class entry and for `C₂^m × A₅` (`m <= extra_a5_power`):
/// average order below 13/6 iff elementary abelian of exponent 2, below
/// 13/6 implies nilpotent, below 11/4 implies solvable, and every ratio
/// criterion that fires has a true conclusion.
pub fn verify_thresholds(catalog: &Catalog, extra_a5_power: u32) -> Result<ThresholdReport> {
    let mut subjects: Vec<(String, GroupRecipe, FiniteGroup)> = Vec::new();
    for entry in catalog.classes() {
        subjects.push((entry.id.clone(), entry.recipe.clone(), entry.realize()?));
    }
    for m in 0..=extra_a5_power {
        let recipe = c2_power_times_a5_recipe(m);
        subjects.push((recipe.to_string(), recipe.clone(), realize(&recipe)?));
    }

    let low = elementary_threshold();
    let mid = solvable_threshold();
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for (id, _, g) in &subjects {
        let report = census::psi_ratios(g)?;
        let row = ThresholdRow {
            id: id.clone(),
            order: report.group_order,
            below_elementary: report.avg_order < low,
            below_solvable: report.avg_order < mid,
            avg_order: report.avg_order.clone(),
            elementary_abelian_2: report.flags.elementary_abelian_2,
            solvable: report.flags.solvable,
            nilpotent: report.flags.nilpotent,
        };
        if row.below_elementary && !row.elementary_abelian_2 {
            violations.push(format!("{id}: o = {} < 13/6 but not elementary abelian", row.avg_order));
        }
        if row.elementary_abelian_2 && !row.below_elementary {
            violations.push(format!("{id}: elementary abelian but o = {} >= 13/6", row.avg_order));
        }
        if row.below_elementary && !row.nilpotent {
            violations.push(format!("{id}: o = {} < 13/6 but not nilpotent", row.avg_order));
        }
        if row.below_solvable && !row.solvable {
            violations.push(format!("{id}: o = {} < 11/4 but not solvable", row.avg_order));
        }
        for v in report.verdicts.iter().filter(|v| !v.consistent()) {
            violations.push(format!("{id}: criterion {} fired but conclusion fails", v.id));
        }
        rows.push(row);
    }
    Ok(ThresholdReport { rows, violations })
}

// ---------------------------------------------------------------------------
// small values

/// A group known by its census-level data, possibly without enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subject {
    pub label: String,
    pub order: u64,
    pub psi: u128,
    pub avg_order: ExactRational,
    pub elementary_abelian_2: bool,
}

impl Subject {
    fn from_census(label: String, census: &OrderCensus) -> Self {
        Subject {
            label,
            order: census.group_order(),
            psi: psi(census),
            avg_order: average_order(census),
            elementary_abelian_2: structure::is_elementary_abelian_2(census),
        }
    }
}

/// Every catalog entry (classes and named groups), then `C₂^m` for
/// `1 <= m <= max_m` and `C_p` for primes `p <= max_p`, the families by
/// closed forms.
pub fn small_value_subjects(catalog: &Catalog, max_m: u32, max_p: u64) -> Result<Vec<Subject>> {
    let mut out = Vec::new();
    for entry in catalog.entries() {
        let census = order_census(&entry.realize()?)?;
        out.push(Subject::from_census(entry.id.clone(), &census));
    }
    for m in 1..=max_m {
        let order = 1u64 << m;
        let total = census::psi_elem_power(2, 1, m).to_u128().expect("fits");
        out.push(Subject {
            label: format!("E(2,{m})"),
            order,
            psi: total,
            avg_order: ExactRational::ratio(total, order),
            elementary_abelian_2: true,
        });
    }
    for p in arith::primes_up_to(max_p) {
        let total = psi_cyclic(p);
        out.push(Subject {
            label: format!("C({p})"),
            order: p,
            psi: total,
            avg_order: ExactRational::ratio(total, p),
            elementary_abelian_2: p == 2,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallValueReport {
    pub subjects: usize,
    pub violations: Vec<String>,
}

impl SmallValueReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// No average order in `[2, 13/6)`, none equal to 3, ψ always odd, the
/// minimum for non-elementary 2-groups is 19/8 and for odd `p`-groups is
/// `(p² - p + 1)/p`.
pub fn verify_small_values(subjects: &[Subject]) -> SmallValueReport {
    let two = ExactRational::from(2u32);
    let three = ExactRational::from(3u32);
    let low = elementary_threshold();
    let mut violations = Vec::new();
    for s in subjects {
        let o = &s.avg_order;
        if *o >= two && *o < low {
            violations.push(format!("{}: o = {o} lies in [2, 13/6)", s.label));
        }
        if *o == three {
            violations.push(format!("{}: o = 3", s.label));
        }
        if s.psi % 2 == 0 {
            violations.push(format!("{}: psi = {} is even", s.label, s.psi));
        }
        match arith::prime_power_base(s.order) {
            Some(2) if !s.elementary_abelian_2 => {
                if *o < q(19, 8) {
                    violations.push(format!("{}: 2-group with o = {o} < 19/8", s.label));
                }
            }
            Some(p) if p != 2 => {
                let floor = ExactRational::ratio(p * p - p + 1, p);
                if *o < floor {
                    violations.push(format!("{}: {p}-group with o = {o} < {floor}", s.label));
                }
            }
            _ => {}
        }
    }
    SmallValueReport {
        subjects: subjects.len(),
        violations,
    }
}

// ---------------------------------------------------------------------------
// limit sequences

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitTerm {
    pub m: u32,
    pub avg_order: ExactRational,
    pub gap: ExactRational,
}

/// Average orders of `G_m = Π_i (C_{p_i^{k_i}})^m` for `n = Π p_i^{k_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitTrace {
    pub n: u64,
    pub terms: Vec<LimitTerm>,
}

impl LimitTrace {
    pub fn strictly_decreasing_gaps(&self) -> bool {
        self.terms.windows(2).all(|w| w[1].gap < w[0].gap)
    }

    pub fn last_gap(&self) -> Option<&ExactRational> {
        self.terms.last().map(|t| &t.gap)
    }
}

fn check_limit_target(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::out_of_range("limit target", format!("{n} must be at least 2")));
    }
    Ok(())
}

/// `o(G_m)` as the product of the prime-power factors' closed forms; the
/// factors have coprime orders, so average orders multiply.
pub fn limit_term(n: u64, m: u32) -> Result<ExactRational> {
    check_limit_target(n)?;
    Ok(arith::factorize(n)
        .into_iter()
        .map(|(p, k)| census::avg_elem_power(p, k, m))
        .fold(ExactRational::one(), |acc, x| acc * x))
}

/// The same term through the rearranged closed form
/// `p^k (1 - p^-m)/(1 - p^-(m+1)) + (p - 1)/(p^{mk}(p^{m+1} - 1))`.
pub fn limit_term_rearranged(n: u64, m: u32) -> Result<ExactRational> {
    check_limit_target(n)?;
    let mut acc = ExactRational::one();
    for (p, k) in arith::factorize(n) {
        let pm = ExactRational::from(BigUint::from(p).pow(m));
        let pm1 = ExactRational::from(BigUint::from(p).pow(m + 1));
        let pk = ExactRational::from(BigUint::from(p).pow(k));
        let pmk = ExactRational::from(BigUint::from(p).pow(m * k));
        let one = ExactRational::one();
        let num = one.clone() - one.clone() / pm;
        let den = one.clone() - one.clone() / pm1.clone();
        let main = pk * (num / den);
        let tail = ExactRational::from(p - 1) / (pmk * (pm1 - one));
        acc = acc * (main + tail);
    }
    Ok(acc)
}

/// Recipe for `G_m`: `m` copies of `C(p^k)` for each prime power `p^k || n`.
pub fn limit_group_recipe(n: u64, m: u32) -> Result<GroupRecipe> {
    check_limit_target(n)?;
    if m == 0 {
        return Err(Error::out_of_range("limit index", "m must be at least 1"));
    }
    let factors = arith::factorize(n)
        .into_iter()
        .flat_map(|(p, k)| std::iter::repeat(GroupRecipe::Cyclic(p.pow(k))).take(m as usize));
    Ok(GroupRecipe::product_of(factors).expect("n >= 2 has a prime factor"))
}

/// `o(G_m)` by enumerating the realised group.
pub fn limit_term_by_enumeration(n: u64, m: u32) -> Result<ExactRational> {
    let g = realize(&limit_group_recipe(n, m)?)?;
    Ok(average_order(&order_census(&g)?))
}

pub fn limit_sequence(n: u64, m_max: u32) -> Result<LimitTrace> {
    check_limit_target(n)?;
    if m_max == 0 {
        return Err(Error::out_of_range("m range", "m_max must be at least 1"));
    }
    let target = ExactRational::from(n);
    let terms = (1..=m_max)
        .map(|m| {
            let avg = limit_term(n, m)?;
            Ok(LimitTerm {
                m,
                gap: (&avg - &target).abs(),
                avg_order: avg,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LimitTrace { n, terms })
}

// ---------------------------------------------------------------------------
// the gap above 13/6

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityScan {
    pub epsilon: ExactRational,
    /// `9/4 - ε`
    pub upper: ExactRational,
    /// Least `n` with `(3/4 + ε)n - 2 >= (3/4)n`, i.e. `⌈2/ε⌉`.
    pub n0: u64,
    pub occupants: Vec<Subject>,
    pub all_below_n0: bool,
    pub note: String,
}

pub const DENSITY_NOTE: &str = "n0 = ceil(2/eps), the least n with (3/4 + eps)n - 2 >= (3/4)n; \
the count bound is taken as (3/4 + eps)n - 2, not (3/4 n + eps)n - 2";

/// Groups among `subjects` whose average order lies in `[13/6, 9/4 - ε)`,
/// and whether all of them have order below `n₀`.
pub fn density_scan(subjects: &[Subject], epsilon: &ExactRational) -> Result<DensityScan> {
    if *epsilon <= ExactRational::zero() || *epsilon >= q(1, 12) {
        return Err(Error::out_of_range("epsilon", format!("{epsilon} is not in (0, 1/12)")));
    }
    let upper = q(9, 4) - epsilon;
    let n0 = (ExactRational::from(2u32) / epsilon.clone())
        .ceil()
        .to_u64()
        .ok_or_else(|| Error::out_of_range("epsilon", "2/eps exceeds u64"))?;
    let low = elementary_threshold();
    let occupants: Vec<Subject> = subjects
        .iter()
        .filter(|s| s.avg_order >= low && s.avg_order < upper)
        .cloned()
        .collect();
    let all_below_n0 = occupants.iter().all(|s| s.order < n0);
    Ok(DensityScan {
        epsilon: epsilon.clone(),
        upper,
        n0,
        occupants,
        all_below_n0,
        note: DENSITY_NOTE.to_string(),
    })
}

// ---------------------------------------------------------------------------
// integer average orders

/// An abelian group by its primary decomposition: for each prime, the
/// exponents of its cyclic `p`-power factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianType {
    pub primary: Vec<(u64, Vec<u32>)>,
}

impl AbelianType {
    pub fn order(&self) -> u64 {
        self.primary
            .iter()
            .map(|(p, parts)| p.pow(parts.iter().sum()))
            .product()
    }

    /// ψ as the product of the Sylow parts; in a `p`-part with exponents
    /// `e_i`, `Π p^min(e_i, j)` elements have order dividing `p^j`.
    pub fn psi(&self) -> u128 {
        self.primary
            .iter()
            .map(|(p, parts)| {
                let p = *p as u128;
                let top = parts.iter().copied().max().unwrap_or(0);
                let mut total = 1u128;
                let mut prev = 1u128;
                for j in 1..=top {
                    let dividing: u128 = parts.iter().map(|&e| p.pow(e.min(j))).product();
                    total += p.pow(j) * (dividing - prev);
                    prev = dividing;
                }
                total
            })
            .product()
    }

    /// Invariant factors `d₁ | d₂ | ...`, smallest first.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let width = self.primary.iter().map(|(_, parts)| parts.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for (p, parts) in &self.primary {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in sorted.iter().enumerate() {
                factors[i] *= p.pow(*e);
            }
        }
        factors.reverse();
        factors
    }

    pub fn recipe(&self) -> GroupRecipe {
        GroupRecipe::product_of(self.invariant_factors().into_iter().map(GroupRecipe::Cyclic))
            .unwrap_or(GroupRecipe::Cyclic(1))
    }
}

fn partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max_part)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order `n`, one per isomorphism type.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianType> {
    let mut out = vec![AbelianType { primary: vec![] }];
    for (p, e) in arith::factorize(n) {
        let mut next = Vec::new();
        for base in &out {
            for parts in partitions(e, e) {
                let mut t = base.clone();
                t.primary.push((p, parts));
                next.push(t);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Abelian,
    FrobeniusProduct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchFamilies {
    pub abelian: bool,
    pub frobenius_products: bool,
}

impl SearchFamilies {
    pub const ALL: SearchFamilies = SearchFamilies {
        abelian: true,
        frobenius_products: true,
    };
}

/// Largest prime modulus of a `C_q ⋊ C_r` factor in the search.
pub const FROBENIUS_MAX_Q: u64 = 200;
/// Largest (prime) acting order `r` of a factor in the search.
pub const FROBENIUS_MAX_R: u64 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerHit {
    #[serde(serialize_with = "crate::report::serialize_display")]
    pub recipe: GroupRecipe,
    pub family: Family,
    pub order: u64,
    pub psi: u128,
    pub avg_order: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerSearch {
    pub max_order: u64,
    pub families: SearchFamilies,
    pub scope: String,
    pub hits: Vec<IntegerHit>,
}

impl IntegerSearch {
    pub fn pairs(&self) -> Vec<(u64, u128)> {
        self.hits.iter().map(|h| (h.order, h.avg_order)).collect()
    }
}

/// `C_q ⋊ C_r` factors of the search with their ψ, computed by enumeration.
pub fn frobenius_factors() -> Result<Vec<(u64, u64, u128)>> {
    let mut out = Vec::new();
    for q in arith::primes_up_to(FROBENIUS_MAX_Q) {
        for r in arith::primes_up_to(FROBENIUS_MAX_R) {
            if (q - 1) % r != 0 {
                continue;
            }
            let g = realize(&GroupRecipe::SemidirectCyclic { q, r, k: None })?;
            out.push((q, r, psi(&order_census(&g)?)));
        }
    }
    Ok(out)
}

/// Groups of order `2..=max_order` with integer average order inside the
/// selected families:
///
/// * every abelian group, ψ from the Sylow decomposition;
/// * `A × (C_q ⋊ C_r)` with `A` abelian of order prime to `qr`, `q` prime
///   up to [`FROBENIUS_MAX_Q`], `r` prime up to [`FROBENIUS_MAX_R`]
///   dividing `q - 1`; ψ multiplies across the coprime factors.
///
/// This is not a search over all groups of a given order.
pub fn integer_search(max_order: u64, families: SearchFamilies) -> Result<IntegerSearch> {
    let mut hits = Vec::new();
    let mut abelian_cache: BTreeMap<u64, Vec<(AbelianType, u128)>> = BTreeMap::new();
    let mut abelian_of = |n: u64| -> Vec<(AbelianType, u128)> {
        abelian_cache
            .entry(n)
            .or_insert_with(|| {
                abelian_groups_of_order(n)
                    .into_iter()
                    .map(|t| {
                        let s = t.psi();
                        (t, s)
                    })
                    .collect()
            })
            .clone()
    };

    if families.abelian {
        for n in 2..=max_order {
            for (t, s) in abelian_of(n) {
                if s % n as u128 == 0 {
                    hits.push(IntegerHit {
                        recipe: t.recipe(),
                        family: Family::Abelian,
                        order: n,
                        psi: s,
                        avg_order: s / n as u128,
                    });
                }
            }
        }
    }
    if families.frobenius_products {
        for (q, r, psi_f) in frobenius_factors()? {
            let size = q * r;
            for k in 1..=max_order / size {
                if arith::gcd(k, size) != 1 {
                    continue;
                }
                let n = k * size;
                for (t, s) in abelian_of(k) {
                    let total = s * psi_f;
                    if total % n as u128 != 0 {
                        continue;
                    }
                    let frob = GroupRecipe::SemidirectCyclic { q, r, k: None };
                    let recipe = if k == 1 { frob } else { GroupRecipe::product(t.recipe(), frob) };
                    hits.push(IntegerHit {
                        recipe,
                        family: Family::FrobeniusProduct,
                        order: n,
                        psi: total,
                        avg_order: total / n as u128,
                    });
                }
            }
        }
    }
    hits.sort_by_key(|h| (h.order, h.avg_order));
    let mut scope = vec![format!("orders 2..={max_order}")];
    if families.abelian {
        scope.push("all abelian groups".into());
    }
    if families.frobenius_products {
        scope.push(format!(
            "A x (C_q : C_r), A abelian of coprime order, q prime <= {FROBENIUS_MAX_Q}, r prime <= {FROBENIUS_MAX_R} dividing q-1"
        ));
    }
    scope.push("family-restricted, not exhaustive over all groups".into());
    Ok(IntegerSearch {
        max_order,
        families,
        scope: scope.join("; "),
        hits,
    })
}

/// Re-derives ψ of a hit by enumerating its realised group.
pub fn enumerate_hit(hit: &IntegerHit) -> Result<u128> {
    Ok(psi(&order_census(&realize(&hit.recipe)?)?))
}

/// Named entries whose kind is [`EntryKind::Named`], as used by scans.
pub fn named_entries(catalog: &Catalog) -> impl Iterator<Item = &CatalogEntry> {
    catalog.entries().iter().filter(|e| e.kind == EntryKind::Named)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_specialisations() {
        // d2 = 2, d3 = 3: c = 13/6 gives (5/6)n - 2; c = 11/4 strengthened gives n/4 - 1
        for n in [6u64, 24, 100] {
            let standard = order_bound(&q(13, 6), 2, 3, n, BoundVariant::Standard);
            assert_eq!(standard, &q(5, 6) * &ExactRational::from(n) - q(2, 1));
            let strong = order_bound(&q(11, 4), 2, 3, n, BoundVariant::Strengthened);
            assert_eq!(strong, &q(1, 4) * &ExactRational::from(n) - q(1, 1));
        }
    }

    #[test]
    fn bound_check_statuses() {
        let s3 = realize(&GroupRecipe::Symmetric(3)).unwrap();
        let check = order_bound_check(&s3, &q(13, 6)).unwrap();
        assert_eq!(check.status, CheckStatus::Vacuous);
        let check = order_bound_check(&s3, &q(5, 2)).unwrap();
        assert_eq!(check.status, CheckStatus::Confirmed);
        let c2 = realize(&GroupRecipe::Cyclic(2)).unwrap();
        assert!(matches!(order_bound_check(&c2, &q(2, 1)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn product_identity_small_cases() {
        let c2 = realize(&GroupRecipe::Cyclic(2)).unwrap();
        let id = elementary_product_check(3, 1, &c2).unwrap();
        assert_eq!(id.formula, q(7, 2));
        assert!(id.holds());
        let a5 = realize(&GroupRecipe::Alternating(5)).unwrap();
        let id = elementary_product_check(2, 1, &a5).unwrap();
        assert_eq!(id.formula, q(201, 40));
        assert!(id.holds());
    }

    #[test]
    fn abelian_types() {
        assert_eq!(abelian_groups_of_order(16).len(), 5);
        assert_eq!(abelian_groups_of_order(72).len(), 6);
        assert_eq!(abelian_groups_of_order(1).len(), 1);
        let g4 = AbelianType {
            primary: vec![(13, vec![1, 1]), (23, vec![1])],
        };
        assert_eq!(g4.invariant_factors(), vec![13, 299]);
        assert_eq!(g4.psi(), 1_107_795);
        assert_eq!(g4.order(), 3887);
        let c4xc2 = AbelianType {
            primary: vec![(2, vec![2, 1])],
        };
        assert_eq!(c4xc2.psi(), 23);
    }

    #[test]
    fn limit_terms() {
        assert_eq!(limit_term(6, 1).unwrap(), q(7, 2));
        for m in 1..6 {
            assert_eq!(
                limit_term(2, m).unwrap(),
                ExactRational::from(2u32) - ExactRational::ratio(1, 1u64 << m)
            );
        }
        assert!(limit_term(1, 3).is_err());
        assert_eq!(limit_group_recipe(12, 2).unwrap().to_string(), "C(4) x C(4) x C(3) x C(3)");
    }

    #[test]
    fn density_range() {
        assert!(density_scan(&[], &q(1, 12)).is_err());
        assert!(density_scan(&[], &q(0, 1)).is_err());
        let scan = density_scan(&[], &q(1, 24)).unwrap();
        assert_eq!(scan.n0, 48);
        assert_eq!(scan.upper, q(53, 24));
        let scan = density_scan(&[], &q(1, 7)).err();
        assert!(scan.is_some());
        assert_eq!(density_scan(&[], &q(2, 25)).unwrap().n0, 25);
    }
}
