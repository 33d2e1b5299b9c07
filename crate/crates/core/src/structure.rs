//! Elementary-abelian, solvable and nilpotent tests.
//!
//! Series are built from normal closures: a subgroup is closed under
//! conjugation by the parent's generators, re-closing under multiplication
//! after each new conjugate, until nothing changes.

use indexmap::IndexSet;
use serde::Serialize;

use crate::census::{order_census, OrderCensus};
use crate::error::{Error, Result};
use crate::perm::{extend_closure, FiniteGroup, Permutation, MAX_GROUP_SIZE};
use crate::rational::ExactRational;

/// Hard limit on series length.
pub const MAX_SERIES_DEPTH: usize = 64;

/// Every non-identity element has order 2. Such a group is abelian, so the
/// census decides it.
pub fn is_elementary_abelian_2(census: &OrderCensus) -> bool {
    census.counts().keys().all(|&d| d <= 2)
}

/// Smallest subgroup of `parent` containing `seeds` and normalised by every
/// generator of `parent`.
pub fn normal_closure(parent: &FiniteGroup, seeds: &[Permutation]) -> Result<FiniteGroup> {
    let degree = parent.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut set = IndexSet::new();
    set.insert(Permutation::identity(degree));

    let mut pending: Vec<Permutation> = seeds.to_vec();
    while let Some(candidate) = pending.pop() {
        if candidate.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: candidate.degree(),
            });
        }
        if set.contains(&candidate) {
            continue;
        }
        gens.push(candidate.clone());
        extend_closure(&mut set, &gens, 0, MAX_GROUP_SIZE)?;
        for g in parent.generators() {
            pending.push(candidate.conjugate_by(g));
        }
    }
    // Conjugates of the chosen generators all lie in the subgroup, so it is
    // normalised by the parent's generators and hence normal.

    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    let mut elements: Vec<Permutation> = set.into_iter().collect();
    elements.sort_unstable();
    Ok(FiniteGroup::with_elements(degree, gens, elements))
}

fn generator_commutators(a: &[Permutation], b: &[Permutation]) -> Vec<Permutation> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let c = x.commutator(y);
            if !c.is_identity() {
                out.push(c);
            }
        }
    }
    out
}

/// `[G, G]`: the normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &FiniteGroup) -> Result<FiniteGroup> {
    normal_closure(g, &generator_commutators(g.generators(), g.generators()))
}

/// `G, G', G'', ...` down to the first repeated term.
pub fn derived_series(g: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    let mut series = vec![g.clone()];
    for _ in 0..MAX_SERIES_DEPTH {
        let last = series.last().expect("series is never empty");
        let next = derived_subgroup(last)?;
        if next.order()? == last.order()? {
            return Ok(series);
        }
        series.push(next);
    }
    Err(Error::SeriesDepth(MAX_SERIES_DEPTH))
}

/// `G, [G,G], [[G,G],G], ...` down to the first repeated term. For normal
/// `H`, `[H, G]` is the normal closure of `[h, g]` over generators.
pub fn lower_central_series(g: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    let mut series = vec![g.clone()];
    for _ in 0..MAX_SERIES_DEPTH {
        let last = series.last().expect("series is never empty");
        let next = normal_closure(g, &generator_commutators(last.generators(), g.generators()))?;
        if next.order()? == last.order()? {
            return Ok(series);
        }
        series.push(next);
    }
    Err(Error::SeriesDepth(MAX_SERIES_DEPTH))
}

pub fn is_solvable(g: &FiniteGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().expect("non-empty").order()? == 1)
}

pub fn is_nilpotent(g: &FiniteGroup) -> Result<bool> {
    Ok(lower_central_series(g)?.last().expect("non-empty").order()? == 1)
}

/// Number of steps for the derived series to reach its last term.
pub fn derived_length(g: &FiniteGroup) -> Result<usize> {
    Ok(derived_series(g)?.len() - 1)
}

pub fn center_order(g: &FiniteGroup) -> Result<usize> {
    let gens = g.generators();
    Ok(g
        .elements()?
        .iter()
        .filter(|x| gens.iter().all(|y| x.then(y) == y.then(x)))
        .count())
}

/// Number of distinct squares `x²`.
pub fn distinct_squares(g: &FiniteGroup) -> Result<usize> {
    let squares: std::collections::HashSet<Permutation> =
        g.elements()?.iter().map(|x| x.then(x)).collect();
    Ok(squares.len())
}

/// Evaluation of the two involution-count criteria on one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionVerdict {
    pub group_order: u64,
    pub involutions: u64,
    /// `n₂ >= (3/4)|G|`
    pub dense_hypothesis: bool,
    pub elementary_abelian_2: bool,
    /// `n₂ > (1/4)|G| - 1`
    pub sparse_hypothesis: bool,
    pub solvable: bool,
    /// Census-level match with `C₂^m × A₅` (see [`c2_power_times_a5_exponent`]).
    pub c2_power_times_a5: Option<u32>,
}

impl InvolutionVerdict {
    pub fn dense_conclusion_holds(&self) -> bool {
        !self.dense_hypothesis || self.elementary_abelian_2
    }

    pub fn sparse_conclusion_holds(&self) -> bool {
        !self.sparse_hypothesis || self.solvable || self.c2_power_times_a5.is_some()
    }
}

/// Census of `C₂^m × A₅`.
pub fn c2_power_times_a5_census(m: u32) -> OrderCensus {
    let a5 = OrderCensus::from_counts([(1, 1), (2, 15), (3, 20), (5, 24)].into_iter().collect())
        .expect("valid census");
    // m = 0 leaves a zero count for order 2, which from_counts drops
    let c2m = OrderCensus::from_counts([(1, 1), (2, (1u64 << m) - 1)].into_iter().collect())
        .expect("valid census");
    c2m.product(&a5)
}

/// `Some(m)` when `g` is non-solvable of order `60·2^m` with the census of
/// `C₂^m × A₅`. No isomorphism test is attempted.
pub fn c2_power_times_a5_exponent(g: &FiniteGroup, census: &OrderCensus) -> Result<Option<u32>> {
    let n = census.group_order();
    if n % 60 != 0 || !(n / 60).is_power_of_two() {
        return Ok(None);
    }
    let m = (n / 60).trailing_zeros();
    if *census != c2_power_times_a5_census(m) || is_solvable(g)? {
        return Ok(None);
    }
    Ok(Some(m))
}

pub fn n2_criteria_check(g: &FiniteGroup) -> Result<InvolutionVerdict> {
    let census = order_census(g)?;
    let n = census.group_order();
    let n2 = census.involutions();
    let n2_q = ExactRational::from(n2);
    let n_q = ExactRational::from(n);
    let dense = n2_q >= &ExactRational::ratio(3, 4) * &n_q;
    let sparse = n2_q > &ExactRational::ratio(1, 4) * &n_q - ExactRational::one();
    Ok(InvolutionVerdict {
        group_order: n,
        involutions: n2,
        dense_hypothesis: dense,
        elementary_abelian_2: is_elementary_abelian_2(&census),
        sparse_hypothesis: sparse,
        solvable: is_solvable(g)?,
        c2_power_times_a5: c2_power_times_a5_exponent(g, &census)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::direct_product;

    fn group(degree: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
        FiniteGroup::new(
            gens.iter()
                .map(|cycles| {
                    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
                    Permutation::from_cycles(degree, &cycles).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    fn s3() -> FiniteGroup {
        group(3, &[&[&[0, 1]], &[&[0, 1, 2]]])
    }

    fn a5() -> FiniteGroup {
        group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]])
    }

    fn d8() -> FiniteGroup {
        group(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]])
    }

    #[test]
    fn derived_subgroups() {
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert_eq!(derived_subgroup(&c6).unwrap().order().unwrap(), 1);
        assert_eq!(derived_subgroup(&s3()).unwrap().order().unwrap(), 3);
        assert_eq!(derived_subgroup(&a5()).unwrap().order().unwrap(), 60);
    }

    #[test]
    fn derived_subgroup_is_normal() {
        for g in [s3(), a5(), d8()] {
            let dg = derived_subgroup(&g).unwrap();
            for h in dg.generators() {
                for x in g.generators() {
                    assert!(dg.contains(&h.conjugate_by(x)).unwrap());
                }
            }
        }
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&s3()).unwrap());
        let orders: Vec<usize> = derived_series(&s3())
            .unwrap()
            .iter()
            .map(|h| h.order().unwrap())
            .collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert!(!is_solvable(&a5()).unwrap());
        let c2 = group(2, &[&[&[0, 1]]]);
        assert!(!is_solvable(&direct_product(&c2, &a5()).unwrap()).unwrap());
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&d8()).unwrap());
        assert!(!is_nilpotent(&s3()).unwrap());
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert!(is_nilpotent(&c6).unwrap());
        assert!(is_nilpotent(&FiniteGroup::trivial(1)).unwrap());
    }

    #[test]
    fn elementary_abelian() {
        let c2_4 = group(8, &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]], &[&[6, 7]]]);
        assert!(is_elementary_abelian_2(&order_census(&c2_4).unwrap()));
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        assert!(!is_elementary_abelian_2(&order_census(&c4).unwrap()));
        assert!(!is_elementary_abelian_2(&order_census(&s3()).unwrap()));
    }

    #[test]
    fn involution_criteria() {
        let c2_4 = group(8, &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]], &[&[6, 7]]]);
        let v = n2_criteria_check(&c2_4).unwrap();
        assert_eq!(v.involutions, 15);
        assert!(v.dense_hypothesis && v.dense_conclusion_holds());

        let v = n2_criteria_check(&s3()).unwrap();
        assert_eq!(v.involutions, 3);
        assert!(!v.dense_hypothesis);
        assert!(v.sparse_hypothesis && v.solvable);

        let c2 = group(2, &[&[&[0, 1]]]);
        let c2_a5 = direct_product(&c2, &a5()).unwrap();
        let v = n2_criteria_check(&c2_a5).unwrap();
        assert_eq!(v.involutions, 31);
        assert!(v.sparse_hypothesis && !v.solvable);
        assert_eq!(v.c2_power_times_a5, Some(1));
        assert!(v.sparse_conclusion_holds());

        // A5 itself: 15 > 14 fires, and A5 is the m = 0 member
        let v = n2_criteria_check(&a5()).unwrap();
        assert!(v.sparse_hypothesis);
        assert_eq!(v.c2_power_times_a5, Some(0));
    }

    #[test]
    fn centre_and_squares() {
        assert_eq!(center_order(&d8()).unwrap(), 2);
        assert_eq!(distinct_squares(&d8()).unwrap(), 2);
        assert_eq!(center_order(&a5()).unwrap(), 1);
    }
}
