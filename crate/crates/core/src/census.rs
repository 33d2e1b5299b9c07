//! Element-order statistics and the quantities built from them: the sum of
//! element orders ψ, the average order ψ/|G|, and the normalised ratios
//! ψ/ψ(C_|G|) and ψ/|G|².

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;
use crate::rational::ExactRational;
use crate::structure;

/// Number of elements of each order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCensus {
    counts: BTreeMap<u64, u64>,
    group_order: u64,
}

impl OrderCensus {
    /// Validates: identity counted once, orders divide |G|, and each count
    /// is a multiple of φ(d).
    pub fn from_counts(counts: BTreeMap<u64, u64>) -> Result<Self> {
        let counts: BTreeMap<u64, u64> = counts.into_iter().filter(|&(_, n)| n > 0).collect();
        let group_order: u64 = counts.values().sum();
        let census = OrderCensus {
            counts,
            group_order,
        };
        census.validate()?;
        Ok(census)
    }

    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for d in orders {
            *counts.entry(d).or_insert(0) += 1;
        }
        OrderCensus::from_counts(counts)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRecipe(format!("inconsistent census: {msg}")));
        if self.counts.get(&1) != Some(&1) {
            return bad("identity must be counted exactly once".into());
        }
        for (&d, &n) in &self.counts {
            if d == 0 || self.group_order % d != 0 {
                return bad(format!("order {d} does not divide {}", self.group_order));
            }
            if n % arith::euler_phi(d) != 0 {
                return bad(format!("{n} elements of order {d} is not a multiple of phi({d})"));
            }
        }
        Ok(())
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// The distinct element orders `1 = d_1 < d_2 < ... < d_r`.
    pub fn orders(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn involutions(&self) -> u64 {
        self.count(2)
    }

    pub fn exponent(&self) -> u64 {
        self.counts.keys().fold(1, |acc, &d| arith::lcm(acc, d))
    }

    pub fn has_element_of_full_order(&self) -> bool {
        self.count(self.group_order) > 0
    }

    /// Sum of `d * n_d` over orders `d` not divisible by `p`.
    pub fn coprime_part_sum(&self, p: u64) -> u128 {
        self.counts
            .iter()
            .filter(|(&d, _)| d % p != 0)
            .map(|(&d, &n)| d as u128 * n as u128)
            .sum()
    }

    /// Census of the direct product: `(a, b)` has order `lcm(o(a), o(b))`.
    pub fn product(&self, other: &OrderCensus) -> OrderCensus {
        let mut counts = BTreeMap::new();
        for (&a, &na) in &self.counts {
            for (&b, &nb) in &other.counts {
                *counts.entry(arith::lcm(a, b)).or_insert(0) += na * nb;
            }
        }
        OrderCensus {
            counts,
            group_order: self.group_order * other.group_order,
        }
    }

    /// Merges two partial tallies (e.g. from disjoint element ranges).
    pub fn merge_counts(a: &BTreeMap<u64, u64>, b: &BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
        let mut out = a.clone();
        for (&d, &n) in b {
            *out.entry(d).or_insert(0) += n;
        }
        out
    }
}

impl fmt::Display for OrderCensus {
    /// `{1:1, 2:3, 3:2}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, n)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{n}")?;
        }
        f.write_str("}")
    }
}

pub fn order_census(g: &FiniteGroup) -> Result<OrderCensus> {
    OrderCensus::from_orders(g.elements()?.iter().map(|x| x.order()))
}

/// Sum of element orders.
pub fn psi(census: &OrderCensus) -> u128 {
    census
        .counts
        .iter()
        .map(|(&d, &n)| d as u128 * n as u128)
        .sum()
}

pub fn average_order(census: &OrderCensus) -> ExactRational {
    ExactRational::ratio(psi(census), census.group_order)
}

/// ψ of the cyclic group of order `n`: the sum of `d * φ(d)` over `d | n`.
pub fn psi_cyclic(n: u64) -> u128 {
    assert!(n >= 1, "cyclic groups have order at least 1");
    arith::divisors(n)
        .into_iter()
        .map(|d| d as u128 * arith::euler_phi(d) as u128)
        .sum()
}

/// ψ of `(C_{p^k})^m` by the closed form
/// `(p^{(m+1)(k+1)} - p^{(m+1)k+1} + p - 1) / (p^{m+1} - 1)`.
pub fn psi_elem_power(p: u64, k: u32, m: u32) -> BigUint {
    assert!(arith::is_prime(p), "{p} is not prime");
    assert!(k >= 1 && m >= 1);
    let p = BigUint::from(p);
    let top = p.pow((m + 1) * (k + 1)) + &p - 1u32;
    let numerator = top - p.pow((m + 1) * k + 1);
    let denominator = p.pow(m + 1) - 1u32;
    let (quotient, remainder) = numerator.div_rem(&denominator);
    debug_assert!(remainder.is_zero());
    quotient
}

/// Average order of `(C_{p^k})^m` from [`psi_elem_power`].
pub fn avg_elem_power(p: u64, k: u32, m: u32) -> ExactRational {
    let order = BigUint::from(p).pow(k * m);
    ExactRational::from(psi_elem_power(p, k, m)) / ExactRational::from(order)
}

/// Sum of `o(x)` over elements whose order is prime to `p`.
pub fn odd_part_sum(g: &FiniteGroup, p: u64) -> Result<u128> {
    Ok(order_census(g)?.coprime_part_sum(p))
}

/// Which statistic a criterion thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    /// ψ(G) / ψ(C_|G|)
    PsiPrime,
    /// ψ(G) / |G|²
    PsiDoublePrime,
    AverageOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Above,
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Cyclic,
    Abelian,
    Nilpotent,
    Supersolvable,
    Solvable,
    ElementaryAbelian2,
}

/// "statistic strictly above/below threshold implies property", sharp at
/// `witness`, whose statistic equals the threshold.
#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub statistic: Statistic,
    pub direction: Direction,
    pub threshold: (i64, i64),
    pub conclusion: Property,
    pub witness: &'static str,
}

impl Criterion {
    pub fn threshold(&self) -> ExactRational {
        ExactRational::ratio(self.threshold.0, self.threshold.1)
    }

    pub fn id(&self) -> String {
        let stat = match self.statistic {
            Statistic::PsiPrime => "psi_prime",
            Statistic::PsiDoublePrime => "psi_double_prime",
            Statistic::AverageOrder => "avg_order",
        };
        let cmp = match self.direction {
            Direction::Above => ">",
            Direction::Below => "<",
        };
        format!(
            "{stat}{cmp}{}/{}=>{:?}",
            self.threshold.0, self.threshold.1, self.conclusion
        )
    }

    fn fires(&self, value: &ExactRational) -> bool {
        match self.direction {
            Direction::Above => *value > self.threshold(),
            Direction::Below => *value < self.threshold(),
        }
    }
}

const fn crit(
    statistic: Statistic,
    direction: Direction,
    threshold: (i64, i64),
    conclusion: Property,
    witness: &'static str,
) -> Criterion {
    Criterion {
        statistic,
        direction,
        threshold,
        conclusion,
        witness,
    }
}

pub const CRITERIA: [Criterion; 11] = {
    use Direction::*;
    use Property::*;
    use Statistic::*;
    [
        crit(PsiPrime, Above, (7, 11), Cyclic, "C2^2"),
        crit(PsiPrime, Above, (13, 21), Nilpotent, "S3"),
        crit(PsiPrime, Above, (31, 77), Supersolvable, "A4"),
        crit(PsiPrime, Above, (211, 1617), Solvable, "A5"),
        crit(PsiDoublePrime, Above, (7, 16), Cyclic, "C2^2"),
        crit(PsiDoublePrime, Above, (27, 64), Abelian, "Q8"),
        crit(PsiDoublePrime, Above, (13, 36), Nilpotent, "S3"),
        crit(PsiDoublePrime, Above, (31, 144), Supersolvable, "A4"),
        crit(PsiDoublePrime, Above, (211, 3600), Solvable, "A5"),
        crit(AverageOrder, Below, (13, 6), ElementaryAbelian2, "S3"),
        crit(AverageOrder, Below, (11, 4), Solvable, "C4"),
    ]
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub elementary_abelian_2: bool,
    pub abelian: bool,
    pub cyclic: bool,
    pub solvable: bool,
    pub nilpotent: bool,
}

impl Flags {
    /// `None` where no independent oracle exists.
    pub fn holds(&self, property: Property) -> Option<bool> {
        match property {
            Property::Cyclic => Some(self.cyclic),
            Property::Abelian => Some(self.abelian),
            Property::Nilpotent => Some(self.nilpotent),
            Property::Supersolvable => None,
            Property::Solvable => Some(self.solvable),
            Property::ElementaryAbelian2 => Some(self.elementary_abelian_2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub id: String,
    pub statistic: Statistic,
    pub threshold: ExactRational,
    pub conclusion: Property,
    pub fired: bool,
    pub conclusion_holds: Option<bool>,
}

impl CriterionVerdict {
    /// False only when the hypothesis fired and the conclusion is known to
    /// fail.
    pub fn consistent(&self) -> bool {
        !(self.fired && self.conclusion_holds == Some(false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group_order: u64,
    pub psi: u128,
    pub avg_order: ExactRational,
    pub psi_prime: ExactRational,
    pub psi_double_prime: ExactRational,
    pub census: OrderCensus,
    pub flags: Flags,
    pub verdicts: Vec<CriterionVerdict>,
}

impl AnalysisReport {
    pub fn statistic(&self, statistic: Statistic) -> &ExactRational {
        match statistic {
            Statistic::PsiPrime => &self.psi_prime,
            Statistic::PsiDoublePrime => &self.psi_double_prime,
            Statistic::AverageOrder => &self.avg_order,
        }
    }
}

/// Full report for one group: census, ψ and its ratios, structural flags
/// and the verdict of every threshold criterion.
pub fn psi_ratios(g: &FiniteGroup) -> Result<AnalysisReport> {
    let census = order_census(g)?;
    let n = census.group_order();
    let total = psi(&census);
    let flags = Flags {
        elementary_abelian_2: structure::is_elementary_abelian_2(&census),
        abelian: g.is_abelian(),
        cyclic: census.has_element_of_full_order(),
        solvable: structure::is_solvable(g)?,
        nilpotent: structure::is_nilpotent(g)?,
    };
    let mut report = AnalysisReport {
        group_order: n,
        psi: total,
        avg_order: ExactRational::ratio(total, n),
        psi_prime: ExactRational::ratio(total, psi_cyclic(n)),
        psi_double_prime: ExactRational::ratio(total, n as u128 * n as u128),
        census,
        flags,
        verdicts: Vec::new(),
    };
    report.verdicts = CRITERIA
        .iter()
        .map(|c| CriterionVerdict {
            id: c.id(),
            statistic: c.statistic,
            threshold: c.threshold(),
            conclusion: c.conclusion,
            fired: c.fires(report.statistic(c.statistic)),
            conclusion_holds: flags.holds(c.conclusion),
        })
        .collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

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

    fn census(pairs: &[(u64, u64)]) -> OrderCensus {
        OrderCensus::from_counts(pairs.iter().copied().collect()).unwrap()
    }

    #[test]
    fn censuses_by_enumeration() {
        let s3 = group(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        assert_eq!(order_census(&s3).unwrap(), census(&[(1, 1), (2, 3), (3, 2)]));
        let a5 = group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]);
        assert_eq!(
            order_census(&a5).unwrap(),
            census(&[(1, 1), (2, 15), (3, 20), (5, 24)])
        );
        let c2_cubed = group(6, &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]]]);
        assert_eq!(order_census(&c2_cubed).unwrap(), census(&[(1, 1), (2, 7)]));
    }

    #[test]
    fn census_validation() {
        assert!(OrderCensus::from_counts([(1, 2)].into_iter().collect()).is_err());
        // 3 elements of order 3 is not a multiple of phi(3) = 2
        assert!(OrderCensus::from_counts([(1, 1), (3, 3)].into_iter().collect()).is_err());
        // order 3 does not divide 5
        assert!(OrderCensus::from_counts([(1, 1), (3, 2), (2, 2)].into_iter().collect()).is_err());
    }

    #[test]
    fn psi_and_average() {
        assert_eq!(psi(&census(&[(1, 1), (2, 3), (3, 2)])), 13);
        assert_eq!(psi(&census(&[(1, 1), (2, 1), (4, 2)])), 11);
        assert_eq!(psi(&census(&[(1, 1), (2, 5), (4, 2)])), 19);
        assert_eq!(
            average_order(&census(&[(1, 1), (2, 1), (4, 6)])),
            ExactRational::ratio(27, 8)
        );
        assert_eq!(
            average_order(&census(&[(1, 1), (2, 3), (4, 4)])),
            ExactRational::ratio(23, 8)
        );
        for m in 1..=10u32 {
            let c = census(&[(1, 1), (2, (1 << m) - 1)]);
            let expected = ExactRational::integer(2) - ExactRational::ratio(1, 1u64 << m);
            assert_eq!(average_order(&c), expected);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(psi_cyclic(1), 1);
        assert_eq!(psi_cyclic(6), 21);
        assert_eq!(psi_cyclic(4), 11);
        assert_eq!(psi_elem_power(2, 1, 3), BigUint::from(15u32));
        assert_eq!(psi_elem_power(2, 1, 4), BigUint::from(31u32));
        assert_eq!(psi_elem_power(3, 1, 2), BigUint::from(25u32));
    }

    #[test]
    fn coprime_sums() {
        let a5 = group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]);
        assert_eq!(odd_part_sum(&a5, 2).unwrap(), 181);
        let c2_cubed = group(6, &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]]]);
        assert_eq!(odd_part_sum(&c2_cubed, 2).unwrap(), 1);
        let s3 = group(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        assert_eq!(odd_part_sum(&s3, 3).unwrap(), 7);
    }

    #[test]
    fn product_census() {
        let c2 = census(&[(1, 1), (2, 1)]);
        let c3 = census(&[(1, 1), (3, 2)]);
        assert_eq!(c2.product(&c3), census(&[(1, 1), (2, 1), (3, 2), (6, 2)]));
    }

    #[test]
    fn ratio_report() {
        let s3 = group(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        let report = psi_ratios(&s3).unwrap();
        assert_eq!(report.psi_prime, ExactRational::ratio(13, 21));
        assert_eq!(report.psi_double_prime, ExactRational::ratio(13, 36));
        assert!(report.flags.solvable && !report.flags.nilpotent);
        assert!(report.verdicts.iter().all(CriterionVerdict::consistent));
        // equality at the witness: the strict inequality does not fire
        let nil = report
            .verdicts
            .iter()
            .find(|v| v.id == "psi_prime>13/21=>Nilpotent")
            .unwrap();
        assert!(!nil.fired);
    }
}
