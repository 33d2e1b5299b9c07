//! Permutations and permutation groups built by closure.
//!
//! Composition applies the left operand first: `p.then(&q)` maps `i` to
//! `q(p(i))`. Every group in the crate is a [`FiniteGroup`] given by
//! generators; its element list is materialised on first use by a
//! breadth-first closure and cached.

use std::fmt;
use std::sync::OnceLock;

use indexmap::IndexSet;

use crate::arith;
use crate::error::{Error, Result};

/// Largest group the element engine will list exhaustively.
pub const MAX_GROUP_SIZE: usize = 2_000_000;

/// Largest supported degree (points are stored as `u16`).
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A bijection on `0..degree`, stored as its image sequence.
///
/// The derived ordering compares image sequences lexicographically, which
/// is the order element lists are sorted in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(Error::NotAPermutation(format!(
                "degree {degree} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(Error::NotAPermutation(format!(
                    "image {x} outside 0..{degree}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree).map(|x| x as u16).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles. Points not mentioned are
    /// fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::NotAPermutation(format!(
                        "point {x} outside 0..{degree}"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotAPermutation(format!(
                        "point {x} appears in more than one cycle position"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// The `length`-cycle `offset -> offset+1 -> ... -> offset` inside a
    /// permutation of the given degree.
    pub fn cycle(degree: usize, offset: usize, length: usize) -> Result<Self> {
        let cycle: Vec<usize> = (offset..offset + length).collect();
        Permutation::from_cycles(degree, &[cycle])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`. Panics on a degree mismatch; use
    /// [`compose`] for the checked form.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// `self^-1 * other^-1 * self * other`, applied left to right.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    /// `by^-1 * self * by`.
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        by.inverse().then(self).then(by)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k >= 1` with `self^k = id`: the lcm of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u64`, which needs a degree in
    /// the hundreds with a contrived cycle type.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            order = arith::lcm_checked(order, len).expect("element order overflows u64");
        }
        order
    }

    /// Embeds `self` into a larger degree, shifting its points by `offset`.
    pub(crate) fn embed(&self, offset: usize, degree: usize) -> Permutation {
        debug_assert!(offset + self.degree() <= degree);
        let mut images: Vec<u16> = (0..degree).map(|x| x as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset + x as usize) as u16;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with comma-separated points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

/// `p` then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(p.then(q))
}

pub fn perm_order(p: &Permutation) -> u64 {
    p.order()
}

/// A permutation group given by generators, with a lazily listed element set.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<Vec<Permutation>>,
}

impl FiniteGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidRecipe("a group needs at least one generator".into()))?;
        let degree = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        Ok(FiniteGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        FiniteGroup::with_elements(
            degree,
            vec![Permutation::identity(degree)],
            vec![Permutation::identity(degree)],
        )
    }

    /// Group whose (sorted, closed) element list is already known.
    pub(crate) fn with_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let cell = OnceLock::new();
        let _ = cell.set(elements);
        FiniteGroup {
            degree,
            generators,
            elements: cell,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image sequence. Generated on first call.
    pub fn elements(&self) -> Result<&[Permutation]> {
        if let Some(elements) = self.elements.get() {
            return Ok(elements);
        }
        let elements = closure(self.degree, &self.generators, MAX_GROUP_SIZE)?;
        let _ = self.elements.set(elements);
        Ok(self.elements.get().expect("just initialised"))
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        Ok(p.degree() == self.degree && self.elements()?.binary_search(p).is_ok())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.elements.get().map(Vec::len))
            .finish()
    }
}

/// The element list of `group`, generating it if needed.
pub fn generate(group: &FiniteGroup) -> Result<&[Permutation]> {
    group.elements()
}

/// Breadth-first closure of the identity under right multiplication by
/// `generators`, sorted by image sequence.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let mut set = IndexSet::new();
    set.insert(Permutation::identity(degree));
    extend_closure(&mut set, generators, 0, cap)?;
    let mut elements: Vec<Permutation> = set.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

/// Continues a closure: every element at index `>= from` is multiplied by
/// every generator until no new elements appear.
pub(crate) fn extend_closure(
    set: &mut IndexSet<Permutation>,
    generators: &[Permutation],
    from: usize,
    cap: usize,
) -> Result<()> {
    let mut cursor = from;
    while cursor < set.len() {
        let x = set[cursor].clone();
        for g in generators {
            set.insert(x.then(g));
            if set.len() > cap {
                return Err(Error::SizeCap { limit: cap });
            }
        }
        cursor += 1;
    }
    Ok(())
}

/// `g x h` acting on `deg(g) + deg(h)` points, `g` on the first block.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let degree = g.degree() + h.degree();
    if degree > MAX_DEGREE {
        return Err(Error::InvalidRecipe(format!(
            "product degree {degree} exceeds {MAX_DEGREE}"
        )));
    }
    let left = g.elements()?;
    let right = h.elements()?;
    if left.len().saturating_mul(right.len()) > MAX_GROUP_SIZE {
        return Err(Error::SizeCap {
            limit: MAX_GROUP_SIZE,
        });
    }
    let mut generators: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|x| x.embed(0, degree))
        .chain(h.generators().iter().map(|y| y.embed(g.degree(), degree)))
        .filter(|p| !p.is_identity())
        .collect();
    if generators.is_empty() {
        generators.push(Permutation::identity(degree));
    }

    // The first block dominates the lexicographic order, so pairing two
    // sorted lists in nested order yields a sorted list.
    let lifted_right: Vec<Permutation> = right.iter().map(|y| y.embed(g.degree(), degree)).collect();
    let mut elements = Vec::with_capacity(left.len() * right.len());
    for x in left {
        let lx = x.embed(0, degree);
        for ly in &lifted_right {
            elements.push(lx.then(ly));
        }
    }
    Ok(FiniteGroup::with_elements(degree, generators, elements))
}

/// `C_q ⋊ C_r` where the generator of `C_r` acts by `x -> kx mod q`.
///
/// Realised on `q + r` points: a `q`-cycle on `0..q`, and the multiplier
/// map on `0..q` combined with an `r`-cycle on `q..q+r`.
pub fn semidirect_cyclic(q: u64, r: u64, k: u64) -> Result<FiniteGroup> {
    if !arith::is_prime(q) {
        return Err(Error::InvalidAction(format!("modulus {q} is not prime")));
    }
    if r < 2 {
        return Err(Error::InvalidAction(format!("acting order {r} must exceed 1")));
    }
    let k = k % q;
    if k == 1 % q || k == 0 {
        return Err(Error::InvalidAction(format!("multiplier {k} is trivial mod {q}")));
    }
    if arith::pow_mod(k, r, q) != 1 {
        return Err(Error::InvalidAction(format!("{k}^{r} is not 1 mod {q}")));
    }
    multiplier_extension(q, r, k)
}

/// The cycle-plus-multiplier construction without the primality and
/// non-triviality checks. `gcd(k, modulus)` must be 1 and `k^r = 1`.
pub(crate) fn multiplier_extension(modulus: u64, r: u64, k: u64) -> Result<FiniteGroup> {
    let (q, r) = (modulus as usize, r as usize);
    let degree = q + r;
    if degree > MAX_DEGREE {
        return Err(Error::InvalidRecipe(format!("degree {degree} exceeds {MAX_DEGREE}")));
    }
    let rotation = Permutation::cycle(degree, 0, q)?;
    let mut images: Vec<usize> = (0..q).map(|x| (k as usize * x) % q).collect();
    images.extend((0..r).map(|j| q + (j + 1) % r));
    let twist = Permutation::new(images)?;
    FiniteGroup::new(vec![rotation, twist])
}

/// Right regular representation of a group given by its multiplication
/// table on `0..order`: generator `g` acts by `x -> x * g`.
pub fn regular_representation(
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    generators: &[usize],
) -> Result<FiniteGroup> {
    let gens = generators
        .iter()
        .map(|&g| Permutation::new((0..order).map(|x| mul(x, g)).collect()))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn composition_applies_left_first() {
        let a = p(3, &[&[0, 1]]);
        let b = p(3, &[&[1, 2]]);
        // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
        assert_eq!(compose(&a, &b).unwrap(), p(3, &[&[0, 2, 1]]));
        assert_eq!(compose(&b, &a).unwrap(), p(3, &[&[0, 1, 2]]));
    }

    #[test]
    fn identity_and_inverse() {
        let x = p(5, &[&[0, 3, 1], &[2, 4]]);
        let id = Permutation::identity(5);
        assert_eq!(compose(&id, &x).unwrap(), x);
        assert!(compose(&x, &x.inverse()).unwrap().is_identity());
        assert_eq!(
            compose(&x, &Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn element_orders() {
        assert_eq!(perm_order(&Permutation::identity(4)), 1);
        assert_eq!(perm_order(&p(7, &[&[0, 1, 2, 3, 4], &[5, 6]])), 10);
        // x -> 2x mod 7 fixes 0 and has cycles (1 2 4)(3 6 5)
        let doubling = Permutation::new((0..7).map(|x| 2 * x % 7).collect()).unwrap();
        assert_eq!(perm_order(&doubling), 3);
        assert!(doubling.pow(3).is_identity());
    }

    #[test]
    fn display_is_cycle_notation() {
        assert_eq!(p(5, &[&[3, 4], &[0, 2]]).to_string(), "(0,2)(3,4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn small_closures() {
        let c6 = FiniteGroup::new(vec![Permutation::cycle(6, 0, 6).unwrap()]).unwrap();
        assert_eq!(c6.order().unwrap(), 6);
        let s3 = FiniteGroup::new(vec![p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(s3.order().unwrap(), 6);
        let a5 = FiniteGroup::new(vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(a5.order().unwrap(), 60);
        let elements = a5.elements().unwrap();
        assert!(elements.windows(2).all(|w| w[0] < w[1]));
        assert!(elements[0].is_identity());
    }

    #[test]
    fn closure_respects_cap() {
        let gens = vec![p(7, &[&[0, 1]]), Permutation::cycle(7, 0, 7).unwrap()];
        assert_eq!(closure(7, &gens, 1000), Err(Error::SizeCap { limit: 1000 }));
        assert_eq!(closure(7, &gens, 5040).unwrap().len(), 5040);
    }

    #[test]
    fn products() {
        let c2 = FiniteGroup::new(vec![Permutation::cycle(2, 0, 2).unwrap()]).unwrap();
        let c3 = FiniteGroup::new(vec![Permutation::cycle(3, 0, 3).unwrap()]).unwrap();
        let c6 = direct_product(&c2, &c3).unwrap();
        assert_eq!(c6.order().unwrap(), 6);
        assert!(c6.elements().unwrap().iter().any(|x| x.order() == 6));
        // prefilled list matches a fresh closure
        let fresh = closure(c6.degree(), c6.generators(), MAX_GROUP_SIZE).unwrap();
        assert_eq!(fresh, c6.elements().unwrap());

        let trivial = FiniteGroup::trivial(1);
        let same = direct_product(&trivial, &c3).unwrap();
        assert_eq!(same.order().unwrap(), 3);
    }

    #[test]
    fn semidirect_examples() {
        let f21 = semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(f21.order().unwrap(), 21);
        assert_eq!(f21.degree(), 10);
        assert!(!f21.is_abelian());
        let f129 = semidirect_cyclic(43, 3, 6).unwrap();
        assert_eq!(f129.order().unwrap(), 129);
        assert!(matches!(semidirect_cyclic(7, 3, 1), Err(Error::InvalidAction(_))));
        assert!(matches!(semidirect_cyclic(7, 3, 3), Err(Error::InvalidAction(_))));
        assert!(matches!(semidirect_cyclic(8, 2, 3), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn regular_representation_of_c4() {
        let c4 = regular_representation(4, |a, b| (a + b) % 4, &[1]).unwrap();
        assert_eq!(c4.order().unwrap(), 4);
        assert_eq!(c4.generators()[0].order(), 4);
    }
}
