//! Groups with average order just above 13/6.

use avgorder::analysis::{density_scan, small_value_subjects};
use avgorder::{Catalog, ExactRational};

fn main() -> avgorder::Result<()> {
    let catalog = Catalog::embedded();
    let subjects = small_value_subjects(&catalog, 20, 97)?;
    for eps in ["1/13", "1/24", "1/1000"] {
        let eps: ExactRational = eps.parse()?;
        let scan = density_scan(&subjects, &eps)?;
        let found: Vec<String> = scan
            .occupants
            .iter()
            .map(|s| format!("{} ({})", s.label, s.avg_order))
            .collect();
        println!(
            "eps = {eps}: [13/6, {}) holds {:?}, n0 = {}, all below n0 {}",
            scan.upper, found, scan.n0, scan.all_below_n0
        );
    }
    Ok(())
}
