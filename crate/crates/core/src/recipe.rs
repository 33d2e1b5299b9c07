//! Group construction recipes and their text form.
//!
//! ```text
//! expr  := term ( "x" term )*          direct product, left-associative
//! term  := "C(" n ")"                  cyclic of order n
//!        | "E(" p "," m ")"            elementary abelian p^m
//!        | "D(" 2n ")"                 dihedral of order 2n
//!        | "Dic(" 4n ")"               dicyclic of order 4n (Dic(8) = Q8)
//!        | "S(" n ")" | "A(" n ")"     symmetric / alternating on n points
//!        | "SD(" q "," r [ "," k ] ")" C_q ⋊ C_r, k derived when omitted
//!        | "Gens(" deg ( ";" perm )+ ")"
//!        | "(" expr ")"
//! perm  := "()" | ( "(" int ( "," int )* ")" )+
//! ```
//!
//! Whitespace is ignored everywhere; `×` is accepted for `x`.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::{self, FiniteGroup, Permutation, MAX_DEGREE, MAX_GROUP_SIZE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRecipe {
    Cyclic(u64),
    ElementaryAbelian { p: u64, m: u32 },
    /// Dihedral group of the given order.
    Dihedral(u64),
    /// Dicyclic group of the given order.
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    DirectProduct(Box<GroupRecipe>, Box<GroupRecipe>),
    SemidirectCyclic { q: u64, r: u64, k: Option<u64> },
    ExplicitGenerators { degree: usize, generators: Vec<Permutation> },
}

impl GroupRecipe {
    pub fn product(a: GroupRecipe, b: GroupRecipe) -> GroupRecipe {
        GroupRecipe::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Left-nested product of several factors.
    pub fn product_of(factors: impl IntoIterator<Item = GroupRecipe>) -> Option<GroupRecipe> {
        factors.into_iter().reduce(GroupRecipe::product)
    }

    /// The order implied by the recipe's parameters, `None` for explicit
    /// generators or on overflow.
    pub fn declared_order(&self) -> Option<u128> {
        use GroupRecipe::*;
        match self {
            Cyclic(n) | Dihedral(n) | Dicyclic(n) => Some(*n as u128),
            ElementaryAbelian { p, m } => (*p as u128).checked_pow(*m),
            Symmetric(n) => (1..=*n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)),
            Alternating(n) => {
                let full = Symmetric(*n).declared_order()?;
                Some(if *n >= 2 { full / 2 } else { full })
            }
            DirectProduct(a, b) => a.declared_order()?.checked_mul(b.declared_order()?),
            SemidirectCyclic { q, r, .. } => Some(*q as u128 * *r as u128),
            ExplicitGenerators { .. } => None,
        }
    }

    /// Factors of a (possibly nested) direct product, left to right.
    pub fn factors(&self) -> Vec<&GroupRecipe> {
        match self {
            GroupRecipe::DirectProduct(a, b) => {
                let mut out = a.factors();
                out.extend(b.factors());
                out
            }
            other => vec![other],
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::InvalidRecipe(msg.into())
}

fn check_degree(degree: u64) -> Result<usize> {
    if degree as usize > MAX_DEGREE || degree > MAX_DEGREE as u64 {
        return Err(malformed(format!("degree {degree} exceeds {MAX_DEGREE}")));
    }
    Ok(degree as usize)
}

fn cyclic(n: u64) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(malformed("C(0) is not a group"));
    }
    let n = check_degree(n)?;
    FiniteGroup::new(vec![Permutation::cycle(n, 0, n)?])
}

fn dihedral(order: u64) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(malformed(format!("dihedral order {order} must be even and positive")));
    }
    let n = check_degree(order / 2)?;
    match n {
        1 => cyclic(2),
        2 => FiniteGroup::new(vec![
            Permutation::from_cycles(4, &[vec![0, 1]])?,
            Permutation::from_cycles(4, &[vec![2, 3]])?,
        ]),
        _ => {
            let rotation = Permutation::cycle(n, 0, n)?;
            let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
            FiniteGroup::new(vec![rotation, reflection])
        }
    }
}

/// Right regular representation of `<a, x | a^{2n}, x² = a^n, a^x = a^-1>`
/// with `a^i x^j` numbered `2i + j`.
fn dicyclic(order: u64) -> Result<FiniteGroup> {
    if order < 4 || order % 4 != 0 {
        return Err(malformed(format!("dicyclic order {order} must be a positive multiple of 4")));
    }
    let size = check_degree(order)?;
    let n = size / 4;
    let half = 2 * n;
    let mul = |u: usize, v: usize| {
        let (i, j) = (u / 2, u % 2);
        let (k, l) = (v / 2, v % 2);
        let (exp, flip) = match (j, l) {
            (0, _) => ((i + k) % half, l),
            (1, 0) => ((i + half - k) % half, 1),
            _ => ((i + half - k + n) % half, 0),
        };
        2 * exp + flip
    };
    perm::regular_representation(size, mul, &[2, 1])
}

fn symmetric(n: u64) -> Result<FiniteGroup> {
    let degree = check_degree(n.max(1))?;
    if n <= 1 {
        return Ok(FiniteGroup::trivial(degree));
    }
    FiniteGroup::new(vec![
        Permutation::from_cycles(degree, &[vec![0, 1]])?,
        Permutation::cycle(degree, 0, degree)?,
    ])
}

fn alternating(n: u64) -> Result<FiniteGroup> {
    let degree = check_degree(n.max(1))?;
    if n <= 2 {
        return Ok(FiniteGroup::trivial(degree));
    }
    let gens = (2..degree)
        .map(|i| Permutation::from_cycles(degree, &[vec![0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(gens)
}

fn elementary_abelian(p: u64, m: u32) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(malformed(format!("E({p},{m}): {p} is not prime")));
    }
    if m == 0 {
        return Err(malformed("E(p,0): exponent must be positive"));
    }
    let p = p as usize;
    let degree = check_degree(p as u64 * m as u64)?;
    let gens = (0..m as usize)
        .map(|block| Permutation::cycle(degree, block * p, p))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(gens)
}

/// Multiplier used by `SD(q, r)` when none is given: the least unit of
/// multiplicative order exactly `r` mod `q`.
pub fn default_multiplier(q: u64, r: u64) -> Result<u64> {
    if !arith::is_prime(q) {
        return Err(Error::InvalidAction(format!("modulus {q} is not prime")));
    }
    arith::unit_of_order(q, r)
        .ok_or_else(|| Error::InvalidAction(format!("no unit of order {r} modulo {q}")))
}

/// Builds the permutation group described by `recipe`.
pub fn realize(recipe: &GroupRecipe) -> Result<FiniteGroup> {
    if let Some(order) = recipe.declared_order() {
        if order > MAX_GROUP_SIZE as u128 {
            return Err(Error::SizeCap {
                limit: MAX_GROUP_SIZE,
            });
        }
    }
    use GroupRecipe::*;
    let group = match recipe {
        Cyclic(n) => cyclic(*n)?,
        ElementaryAbelian { p, m } => elementary_abelian(*p, *m)?,
        Dihedral(order) => dihedral(*order)?,
        Dicyclic(order) => dicyclic(*order)?,
        Symmetric(n) => symmetric(*n)?,
        Alternating(n) => alternating(*n)?,
        DirectProduct(a, b) => perm::direct_product(&realize(a)?, &realize(b)?)?,
        SemidirectCyclic { q, r, k } => {
            let k = match k {
                Some(k) => *k,
                None => default_multiplier(*q, *r)?,
            };
            perm::semidirect_cyclic(*q, *r, k)?
        }
        ExplicitGenerators { degree, generators } => {
            if let Some(bad) = generators.iter().find(|g| g.degree() != *degree) {
                return Err(Error::DegreeMismatch {
                    left: *degree,
                    right: bad.degree(),
                });
            }
            FiniteGroup::new(generators.clone())?
        }
    };
    if let Some(expected) = recipe.declared_order() {
        let actual = group.order()?;
        if actual as u128 != expected {
            return Err(malformed(format!(
                "{recipe} realised with order {actual}, expected {expected}"
            )));
        }
    }
    Ok(group)
}

impl fmt::Display for GroupRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupRecipe::*;
        match self {
            Cyclic(n) => write!(f, "C({n})"),
            ElementaryAbelian { p, m } => write!(f, "E({p},{m})"),
            Dihedral(n) => write!(f, "D({n})"),
            Dicyclic(n) => write!(f, "Dic({n})"),
            Symmetric(n) => write!(f, "S({n})"),
            Alternating(n) => write!(f, "A({n})"),
            SemidirectCyclic { q, r, k: None } => write!(f, "SD({q},{r})"),
            SemidirectCyclic { q, r, k: Some(k) } => write!(f, "SD({q},{r},{k})"),
            ExplicitGenerators { degree, generators } => {
                write!(f, "Gens({degree}")?;
                for g in generators {
                    write!(f, "; {g}")?;
                }
                f.write_str(")")
            }
            DirectProduct(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(**b, DirectProduct(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

impl FromStr for GroupRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_recipe(s)
    }
}

pub fn parse_recipe(input: &str) -> Result<GroupRecipe> {
    let mut parser = Parser::new(input);
    let recipe = parser.expr()?;
    parser.skip_ws();
    if let Some((pos, c)) = parser.peek() {
        return Err(Error::Parse {
            pos,
            msg: format!("unexpected `{c}` after expression"),
        });
    }
    Ok(recipe)
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn new(input: &str) -> Self {
        Parser {
            chars: input.char_indices().collect(),
            at: 0,
            len: input.len(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.get(self.at).copied()
    }

    fn pos(&mut self) -> usize {
        self.peek().map_or(self.len, |(p, _)| p)
    }

    fn error<T>(&mut self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek().is_some_and(|(_, c)| c == want) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            match self.peek() {
                Some((_, c)) => self.error(format!("expected `{want}`, found `{c}`")),
                None => self.error(format!("expected `{want}`, found end of input")),
            }
        }
    }

    fn eat_product(&mut self) -> bool {
        self.eat('x') || self.eat('×')
    }

    fn expr(&mut self) -> Result<GroupRecipe> {
        let mut left = self.term()?;
        while self.eat_product() {
            let right = self.term()?;
            left = GroupRecipe::product(left, right);
        }
        Ok(left)
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let mut name = String::new();
        while let Some(&(_, c)) = self.chars.get(self.at) {
            // `x` is always the product operator
            if c.is_ascii_alphabetic() && c != 'x' {
                name.push(c);
                self.at += 1;
            } else {
                break;
            }
        }
        name
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.get(self.at) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.at += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return self.error("expected a number");
        }
        digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("number `{digits}` too large"),
        })
    }

    fn numbers(&mut self) -> Result<Vec<u64>> {
        let mut out = vec![self.number()?];
        while self.eat(',') {
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<GroupRecipe> {
        if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let start = self.pos();
        let name = self.ident();
        if name.is_empty() {
            return match self.peek() {
                Some((_, c)) => self.error(format!("expected a group name, found `{c}`")),
                None => self.error("expected a group name, found end of input"),
            };
        }
        self.expect('(')?;
        if name == "Gens" {
            let recipe = self.explicit()?;
            self.expect(')')?;
            return Ok(recipe);
        }
        let args_at = self.pos();
        let args = self.numbers()?;
        self.expect(')')?;
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::Parse {
                    pos: args_at,
                    msg: format!("{name} takes {n} argument(s), got {}", args.len()),
                })
            }
        };
        use GroupRecipe::*;
        Ok(match name.as_str() {
            "C" => {
                arity(1)?;
                Cyclic(args[0])
            }
            "E" => {
                arity(2)?;
                let m = u32::try_from(args[1]).map_err(|_| Error::Parse {
                    pos: args_at,
                    msg: "exponent too large".into(),
                })?;
                ElementaryAbelian { p: args[0], m }
            }
            "D" => {
                arity(1)?;
                Dihedral(args[0])
            }
            "Dic" => {
                arity(1)?;
                Dicyclic(args[0])
            }
            "S" => {
                arity(1)?;
                Symmetric(args[0])
            }
            "A" => {
                arity(1)?;
                Alternating(args[0])
            }
            "SD" => match args.as_slice() {
                [q, r] => SemidirectCyclic { q: *q, r: *r, k: None },
                [q, r, k] => SemidirectCyclic {
                    q: *q,
                    r: *r,
                    k: Some(*k),
                },
                _ => {
                    return Err(Error::Parse {
                        pos: args_at,
                        msg: format!("SD takes 2 or 3 arguments, got {}", args.len()),
                    })
                }
            },
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unknown group constructor `{name}`"),
                })
            }
        })
    }

    fn explicit(&mut self) -> Result<GroupRecipe> {
        let degree = self.number()? as usize;
        let mut generators = Vec::new();
        while self.eat(';') {
            let at = self.pos();
            let cycles = self.cycles()?;
            let g = Permutation::from_cycles(degree, &cycles).map_err(|e| Error::Parse {
                pos: at,
                msg: e.to_string(),
            })?;
            generators.push(g);
        }
        if generators.is_empty() {
            return self.error("Gens needs at least one generator");
        }
        Ok(GroupRecipe::ExplicitGenerators { degree, generators })
    }

    fn cycles(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        if !self.peek().is_some_and(|(_, c)| c == '(') {
            return self.error("expected a cycle");
        }
        while self.eat('(') {
            if self.eat(')') {
                continue; // the identity "()"
            }
            let points = self.numbers()?;
            self.expect(')')?;
            cycles.push(points.into_iter().map(|p| p as usize).collect());
        }
        Ok(cycles)
    }
}
