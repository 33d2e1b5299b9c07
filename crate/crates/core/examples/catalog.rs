//! Browsing the group catalog: class counts, the order-16 groups and the
//! invariants that separate the ones sharing a census.

use avgorder::catalog::{Catalog, CLASS_COUNTS};
use avgorder::structure::{center_order, distinct_squares};
use avgorder::{average_order, order_census};

fn main() -> avgorder::Result<()> {
    let catalog = Catalog::embedded();
    println!("{} classes, {} entries", catalog.classes().count(), catalog.entries().len());
    let counts: Vec<String> = CLASS_COUNTS.iter().map(|(n, c)| format!("{n}:{c}")).collect();
    println!("per order {}", counts.join(" "));

    for entry in catalog.all_groups_of_order(16)? {
        let g = entry.realize()?;
        let census = order_census(&g)?;
        println!(
            "{:8} {:50} o = {:6} abelian {:5} squares {} centre {:2}  {}",
            entry.id,
            entry.recipe.to_string(),
            average_order(&census).to_string(),
            g.is_abelian(),
            distinct_squares(&g)?,
            center_order(&g)?,
            census
        );
    }

    let g4 = catalog.named_group("G4")?;
    println!("{} = {}: fixtures ok {}", g4.id, g4.recipe, g4.fixture_mismatches()?.is_empty());

    // a catalog can also come from text
    let custom = Catalog::parse("class | S3 | 6 | S(3) | psi=14\nnamed | X | 12 | C(2) x S(3) |\n")?;
    for entry in custom.entries() {
        println!("{}: {:?}", entry.id, entry.fixture_mismatches()?);
    }
    Ok(())
}
