//! Parsing recipes, realising them as permutation groups, and what the
//! parser says about bad input.

use avgorder::perm::{direct_product, semidirect_cyclic, Permutation};
use avgorder::{order_census, parse_recipe, realize, FiniteGroup};

fn main() -> avgorder::Result<()> {
    // products associate to the left and print back the same way
    let r = parse_recipe("C(2)x(D(8) × E(3,2))")?;
    println!("{r}  declared order {:?}", r.declared_order());
    let g = realize(&r)?;
    println!("realised on {} points, {} elements", g.degree(), g.order()?);

    // SD(q,r) picks the smallest multiplier of order r mod q unless one is given
    for text in ["SD(7,3)", "SD(7,3,4)", "SD(43,3)"] {
        let g = realize(&text.parse()?)?;
        println!("{text:10} {}", order_census(&g)?);
    }
    let g = semidirect_cyclic(13, 4, 5)?;
    println!("C13 : C4 via k = 5 has order {}", g.order()?);

    // explicit generators, points numbered from 0
    let m16 = realize(&"Gens(10; (0,1,2,3,4,5,6,7); (1,5)(3,7)(8,9))".parse()?)?;
    println!("M16 abelian: {}  census {}", m16.is_abelian(), order_census(&m16)?);

    let a = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]])?;
    let b = Permutation::from_cycles(4, &[vec![1, 3]])?;
    let d8 = FiniteGroup::new(vec![a, b])?;
    let c3 = realize(&"C(3)".parse()?)?;
    let p = direct_product(&d8, &c3)?;
    println!("D8 x C3 by hand: {}", order_census(&p)?);

    for bad in ["C(5) x Q(3)", "C(5", "E(2)", "SD(7,3,3)", "S(10)"] {
        match parse_recipe(bad).and_then(|r| realize(&r)) {
            Ok(_) => println!("{bad:12} ok"),
            Err(e) => println!("{bad:12} {e}"),
        }
    }
    Ok(())
}
