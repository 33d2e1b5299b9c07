//! Groups with integer average order, within the searched families.
//!
//!     cargo run --release --example integer_search -- 5000

use avgorder::analysis::{enumerate_hit, integer_search, SearchFamilies};

fn main() -> avgorder::Result<()> {
    let max_order = std::env::args().nth(1).map_or(5000, |s| s.parse().expect("integer bound"));
    let search = integer_search(max_order, SearchFamilies::ALL)?;
    println!("{}", search.scope);
    for hit in &search.hits {
        let check = enumerate_hit(hit)?;
        println!(
            "{:5} o = {:4} psi = {:8} {:20} enumeration {}",
            hit.order,
            hit.avg_order,
            hit.psi,
            hit.recipe.to_string(),
            if check == hit.psi { "agrees" } else { "DISAGREES" }
        );
    }
    Ok(())
}
