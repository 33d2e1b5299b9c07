//! Element-order statistics of a few groups given as recipe expressions.
//!
//!     cargo run --example compute -- "C(5) x SD(7,3)"

use avgorder::{psi_ratios, realize, GroupRecipe};

fn main() -> avgorder::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec!["S(3)".to_string(), "A(5)".into(), "Dic(8)".into(), "C(5) x SD(7,3)".into()]
    } else {
        args
    };

    for text in inputs {
        let recipe: GroupRecipe = text.parse()?;
        let g = realize(&recipe)?;
        let report = psi_ratios(&g)?;
        println!("{recipe}");
        println!("  |G| = {}, psi = {}", report.group_order, report.psi);
        println!("  o    = {} ~ {}", report.avg_order, report.avg_order.to_decimal());
        println!("  psi' = {}, psi'' = {}", report.psi_prime, report.psi_double_prime);
        println!("  census {}", report.census);
        for v in report.verdicts.iter().filter(|v| v.fired) {
            println!("  fired {}", v.id);
        }
    }
    Ok(())
}
