//! The smallest average order among groups of each order 1..=23.

use avgorder::analysis::min_average_table;
use avgorder::Catalog;

fn main() -> avgorder::Result<()> {
    let catalog = Catalog::embedded();
    for (n, min, ids) in min_average_table(&catalog, 23)? {
        println!("{n:3}  {:>8}  {:>14}  {}", min.to_string(), min.to_decimal(), ids.join(", "));
    }
    Ok(())
}
