//! Which threshold criteria fire on which groups, and the witnesses sitting
//! exactly on each threshold.

use avgorder::analysis::verify_thresholds;
use avgorder::census::CRITERIA;
use avgorder::{psi_ratios, realize, Catalog};

fn main() -> avgorder::Result<()> {
    for c in CRITERIA {
        println!("{:35} witness {}", c.id(), c.witness);
    }

    for text in ["C(12)", "C(2) x C(6)", "Dic(8)", "A(4)", "S(4)", "A(5)"] {
        let report = psi_ratios(&realize(&text.parse()?)?)?;
        let fired: Vec<&str> = report.verdicts.iter().filter(|v| v.fired).map(|v| v.id.as_str()).collect();
        println!("{text:12} {:?}", fired);
    }

    let report = verify_thresholds(&Catalog::embedded(), 3)?;
    let low: Vec<&str> = report.rows.iter().filter(|r| r.below_elementary).map(|r| r.id.as_str()).collect();
    println!("below 13/6: {low:?}");
    println!("{} groups checked, violations {:?}", report.rows.len(), report.violations);
    Ok(())
}
