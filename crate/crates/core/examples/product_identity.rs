//! o(C_p^m x G) from the census of G alone, against direct enumeration.

use avgorder::analysis::elementary_product_check;
use avgorder::census::odd_part_sum;
use avgorder::realize;

fn main() -> avgorder::Result<()> {
    let a5 = realize(&"A(5)".parse()?)?;
    println!("sum of odd orders in A5: {}", odd_part_sum(&a5, 2)?);

    for (p, m, text) in [(2, 1, "A(5)"), (2, 2, "A(5)"), (3, 1, "C(2)"), (5, 2, "S(3)"), (2, 3, "Dic(8)")] {
        let g = realize(&text.parse()?)?;
        let check = elementary_product_check(p, m, &g)?;
        println!(
            "E({p},{m}) x {text:7} formula {:>12} direct {:>12} {}",
            check.formula.to_string(),
            check.direct.to_string(),
            if check.holds() { "equal" } else { "DIFFERENT" }
        );
    }
    Ok(())
}
