//! The group catalog: one recipe per isomorphism class of order 1..23, plus
//! named groups used elsewhere. Stored as a small text file (format in
//! `data/catalog.txt`), embedded at build time.

use std::collections::BTreeMap;
use std::path::Path;

use crate::census::{average_order, order_census, psi};
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;
use crate::rational::ExactRational;
use crate::recipe::{realize, GroupRecipe};
use crate::structure;

pub const EMBEDDED_CATALOG: &str = include_str!("../data/catalog.txt");

/// Largest order for which the catalog lists every class.
pub const MAX_CLASS_ORDER: u64 = 23;

/// Number of isomorphism classes of each order 1..=23.
pub const CLASS_COUNTS: [(u64, usize); 23] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 2),
    (5, 1),
    (6, 2),
    (7, 1),
    (8, 5),
    (9, 2),
    (10, 2),
    (11, 1),
    (12, 5),
    (13, 1),
    (14, 2),
    (15, 1),
    (16, 14),
    (17, 1),
    (18, 5),
    (19, 1),
    (20, 5),
    (21, 2),
    (22, 2),
    (23, 1),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Class,
    Named,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub psi: Option<u128>,
    pub avg_order: Option<ExactRational>,
    pub census: Option<BTreeMap<u64, u64>>,
    pub abelian: Option<bool>,
    pub squares: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub kind: EntryKind,
    pub id: String,
    pub order: u64,
    pub recipe: GroupRecipe,
    pub expected: Expected,
}

impl CatalogEntry {
    /// Realises the recipe and checks the realised order.
    pub fn realize(&self) -> Result<FiniteGroup> {
        let g = realize(&self.recipe)?;
        let order = g.order()? as u64;
        if order != self.order {
            return Err(Error::InvalidRecipe(format!(
                "{}: realised order {order}, catalog says {}",
                self.id, self.order
            )));
        }
        Ok(g)
    }

    /// Compares every recorded fixture with freshly computed values and
    /// returns one message per mismatch.
    pub fn fixture_mismatches(&self) -> Result<Vec<String>> {
        let g = self.realize()?;
        let census = order_census(&g)?;
        let mut out = Vec::new();
        let e = &self.expected;
        if let Some(want) = e.psi {
            let got = psi(&census);
            if got != want {
                out.push(format!("{}: psi {got}, expected {want}", self.id));
            }
        }
        if let Some(want) = &e.avg_order {
            let got = average_order(&census);
            if &got != want {
                out.push(format!("{}: o {got}, expected {want}", self.id));
            }
        }
        if let Some(want) = &e.census {
            if census.counts() != want {
                out.push(format!("{}: census {census}, expected {want:?}", self.id));
            }
        }
        if let Some(want) = e.abelian {
            if g.is_abelian() != want {
                out.push(format!("{}: abelian {}, expected {want}", self.id, !want));
            }
        }
        if let Some(want) = e.squares {
            let got = structure::distinct_squares(&g)?;
            if got != want {
                out.push(format!("{}: {got} distinct squares, expected {want}", self.id));
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn embedded() -> Self {
        Catalog::parse(EMBEDDED_CATALOG).expect("embedded catalog is well-formed")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
        Catalog::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let entry = parse_entry(content).map_err(|msg| Error::Catalog { line, msg })?;
            if entries.iter().any(|e| e.id == entry.id) {
                return Err(Error::Catalog {
                    line,
                    msg: format!("duplicate id `{}`", entry.id),
                });
            }
            entries.push(entry);
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Entries of kind `class`, in file order.
    pub fn classes(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.kind == EntryKind::Class)
    }

    pub fn all_groups_of_order(&self, n: u64) -> Result<Vec<&CatalogEntry>> {
        if !(1..=MAX_CLASS_ORDER).contains(&n) {
            return Err(Error::out_of_range(
                "group order",
                format!("{n} is outside 1..={MAX_CLASS_ORDER}"),
            ));
        }
        Ok(self.classes().filter(|e| e.order == n).collect())
    }

    pub fn named_group(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.id == name)
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    /// Orders whose class count differs from [`CLASS_COUNTS`], as
    /// `(order, expected, found)`.
    pub fn class_count_mismatches(&self) -> Vec<(u64, usize, usize)> {
        CLASS_COUNTS
            .iter()
            .filter_map(|&(n, want)| {
                let got = self.classes().filter(|e| e.order == n).count();
                (got != want).then_some((n, want, got))
            })
            .collect()
    }
}

fn parse_entry(line: &str) -> std::result::Result<CatalogEntry, String> {
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    let [kind, id, order, recipe, expected] = fields.as_slice() else {
        return Err(format!("expected 5 `|`-separated fields, found {}", fields.len()));
    };
    let kind = match *kind {
        "class" => EntryKind::Class,
        "named" => EntryKind::Named,
        other => return Err(format!("unknown kind `{other}`")),
    };
    if id.is_empty() || id.contains(char::is_whitespace) {
        return Err(format!("bad id `{id}`"));
    }
    let order: u64 = order.parse().map_err(|_| format!("bad order `{order}`"))?;
    let recipe: GroupRecipe = recipe.parse().map_err(|e| format!("recipe: {e}"))?;
    if let Some(declared) = recipe.declared_order() {
        if declared != order as u128 {
            return Err(format!("recipe {recipe} has order {declared}, not {order}"));
        }
    }
    Ok(CatalogEntry {
        kind,
        id: id.to_string(),
        order,
        recipe,
        expected: parse_expected(expected)?,
    })
}

fn parse_expected(text: &str) -> std::result::Result<Expected, String> {
    let mut out = Expected::default();
    for item in text.split_whitespace() {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| format!("fixture `{item}` is not key=value"))?;
        let bad = || format!("bad value for `{key}`: `{value}`");
        match key {
            "psi" => out.psi = Some(value.parse().map_err(|_| bad())?),
            "o" => out.avg_order = Some(value.parse().map_err(|_| bad())?),
            "abelian" => out.abelian = Some(value.parse().map_err(|_| bad())?),
            "squares" => out.squares = Some(value.parse().map_err(|_| bad())?),
            "census" => {
                let mut counts = BTreeMap::new();
                for pair in value.split(',') {
                    let (d, n) = pair.split_once(':').ok_or_else(bad)?;
                    counts.insert(d.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?);
                }
                out.census = Some(counts);
            }
            _ => return Err(format!("unknown fixture key `{key}`")),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_catalog_has_the_right_class_counts() {
        let catalog = Catalog::embedded();
        assert_eq!(catalog.class_count_mismatches(), vec![]);
        assert_eq!(catalog.classes().count(), 59);
    }

    #[test]
    fn lookups() {
        let catalog = Catalog::embedded();
        let a5 = catalog.named_group("A5").unwrap();
        assert_eq!(a5.recipe, GroupRecipe::Alternating(5));
        assert_eq!(a5.expected.avg_order, Some(ExactRational::ratio(211, 60)));
        let g1 = catalog.named_group("G1").unwrap();
        assert_eq!(g1.order, 105);
        assert_eq!(g1.recipe.to_string(), "C(5) x SD(7,3)");
        assert!(matches!(catalog.named_group("G7"), Err(Error::UnknownGroup(_))));
        let ids: Vec<&str> = catalog
            .all_groups_of_order(6)
            .unwrap()
            .iter()
            .map(|e| e.id.as_str())
            .collect();
        assert_eq!(ids, vec!["C6", "S3"]);
        assert!(catalog.all_groups_of_order(24).is_err());
        assert!(catalog.all_groups_of_order(0).is_err());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let text = "# header\nclass | C2 | 2 | C(2) | psi=3\nclass | C3 | 4 | C(3) |\n";
        assert!(matches!(Catalog::parse(text), Err(Error::Catalog { line: 3, .. })));
        let dup = "class | C2 | 2 | C(2) |\nnamed | C2 | 2 | C(2) |\n";
        assert!(matches!(Catalog::parse(dup), Err(Error::Catalog { line: 2, .. })));
        let bad_key = "class | C2 | 2 | C(2) | phi=3\n";
        assert!(matches!(Catalog::parse(bad_key), Err(Error::Catalog { line: 1, .. })));
        let short = "class | C2 | 2\n";
        assert!(matches!(Catalog::parse(short), Err(Error::Catalog { line: 1, .. })));
    }

    #[test]
    fn corrupted_fixture_is_reported() {
        let catalog = Catalog::parse("class | S3 | 6 | S(3) | psi=14\n").unwrap();
        let mismatches = catalog.entries()[0].fixture_mismatches().unwrap();
        assert_eq!(mismatches, vec!["S3: psi 13, expected 14".to_string()]);
    }
}
