//! Derived and lower central series, and the involution-count criteria.

use avgorder::realize;
use avgorder::structure::{derived_series, is_nilpotent, is_solvable, lower_central_series, n2_criteria_check};

fn main() -> avgorder::Result<()> {
    for text in ["S(4)", "D(16)", "SD(7,3)", "A(5)", "C(2) x A(5)", "E(2,4)"] {
        let g = realize(&text.parse()?)?;
        let derived: Vec<usize> = derived_series(&g)?.iter().map(|h| h.order()).collect::<Result<_, _>>()?;
        let central: Vec<usize> = lower_central_series(&g)?.iter().map(|h| h.order()).collect::<Result<_, _>>()?;
        println!(
            "{text:12} derived {derived:?} lower central {central:?} solvable {} nilpotent {}",
            is_solvable(&g)?,
            is_nilpotent(&g)?
        );
        let v = n2_criteria_check(&g)?;
        println!(
            "{:12} n2 = {} of {}; dense {} sparse {} C2^m x A5 {:?}",
            "",
            v.involutions,
            v.group_order,
            v.dense_hypothesis,
            v.sparse_hypothesis,
            v.c2_power_times_a5
        );
    }
    Ok(())
}
