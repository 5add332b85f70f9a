// Irreps of Z₂ ≀ G: the census and a check of the θ characters against the
// generic character table.

use hsp_powers::group::{make_cyclic, make_dihedral};
use hsp_powers::repr::character_table;
use hsp_powers::wreath::{iterated_wreath, wreath_census, wreath_dihedral};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tower2 = iterated_wreath(2)?;
    let bases = [
        make_cyclic(2)?,
        make_dihedral(5)?,
        tower2.as_finite_group().ok_or("tower not materialised")?.clone(),
    ];
    for base in &bases {
        let census = wreath_census(base)?;
        println!("Z2 wr {} (order {}):", census.base, census.order);
        for e in &census.entries {
            println!("  {:>2} x {:<7} of dimension {}", e.count, e.kind, e.dimension);
        }
        println!("  sum of squares {}", census.sum_of_squares);
    }

    let w = wreath_dihedral(3)?;
    let base_table = character_table(w.base())?;
    let theta = w.theta_character_table(&base_table)?;
    let generic = character_table(w.as_finite_group().ok_or("not materialised")?)?;
    let mut a: Vec<usize> = theta.irreps().iter().map(|r| r.dim).collect();
    let mut b: Vec<usize> = generic.irreps().iter().map(|r| r.dim).collect();
    a.sort_unstable();
    b.sort_unstable();
    println!("{}: θ dims {:?}", w.name(), a);
    assert_eq!(a, b);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
