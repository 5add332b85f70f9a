// Character table and Plancherel distribution of A5.

use hsp_powers::group::make_alternating;
use hsp_powers::repr::character_table;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = make_alternating(5)?;
    let table = character_table(&a5)?;
    let sizes = table.class_sizes();
    println!("{} ({} classes, sizes {:?})", a5.name(), sizes.len(), sizes);
    for (i, row) in table.irreps().iter().enumerate() {
        let values: Vec<String> = row.values.iter().map(|z| format!("{:+.4}", z.re)).collect();
        println!("{:>5} d={} [{}]", table.label(i), row.dim, values.join(", "));
    }
    let plancherel = table.plancherel();
    println!("Plancherel numerators {:?} / {}", plancherel.numerators, plancherel.order);
    println!("Exp log d = {:.6}", plancherel.expected_log_dim());
    assert!(table.row_orthogonality_error() < 1e-9);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
