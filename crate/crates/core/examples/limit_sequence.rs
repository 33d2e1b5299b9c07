//! Products of cyclic prime-power groups whose average orders converge to
//! a given integer.
//!
//!     cargo run --example limit_sequence -- 12 40

use avgorder::analysis::{limit_group_recipe, limit_sequence, limit_term_by_enumeration};

fn main() -> avgorder::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(6, |s| s.parse().expect("integer n"));
    let m_max: u32 = args.next().map_or(40, |s| s.parse().expect("integer m"));

    let trace = limit_sequence(n, m_max)?;
    for t in &trace.terms {
        if t.m <= 5 || t.m % 5 == 0 {
            println!("m = {:2}  o = {:>16}  gap = {}", t.m, t.avg_order.to_decimal(), t.gap.to_decimal());
        }
    }
    println!("gaps strictly decreasing: {}", trace.strictly_decreasing_gaps());

    for m in 1..=2 {
        let recipe = limit_group_recipe(n, m)?;
        println!("G_{m} = {recipe}: enumerated o = {}", limit_term_by_enumeration(n, m)?);
    }
    Ok(())
}
