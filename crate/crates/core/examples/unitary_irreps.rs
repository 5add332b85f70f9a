// Explicit unitary irreps: dihedral closed forms and a generic decomposition.

use hsp_powers::group::{make_dihedral, make_symmetric};
use hsp_powers::repr::irreps::homomorphism_test_pairs;
use hsp_powers::repr::{character_table, unitary_irreps};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for group in [make_dihedral(5)?, make_symmetric(4)?] {
        let table = character_table(&group)?;
        let irreps = unitary_irreps(&group, &table)?;
        let pairs = homomorphism_test_pairs(&group, 400, 1);
        println!("{}", group.name());
        for irrep in &irreps {
            let hom = irrep.rep().homomorphism_error(&group, &pairs);
            let unit = irrep.rep().max_unitarity_error();
            println!("  {:>5} d={} homomorphism {:.1e} unitarity {:.1e}", irrep.label, irrep.dim(), hom, unit);
            assert!(hom < 1e-9 && unit < 1e-9);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
