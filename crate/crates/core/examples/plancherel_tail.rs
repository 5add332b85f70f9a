// Monte Carlo tail of the Plancherel dimension on A5ⁿ against the
// large-dimension bound.

use hsp_powers::bounds::{compute_rates, dimension_tail_csv, plancherel_dimension_mc, DEFAULT_BETA_FRACTION};
use hsp_powers::group::make_alternating;
use hsp_powers::repr::{character_table, InvolutionProfile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = make_alternating(5)?;
    let table = character_table(&a5)?;
    let profile = InvolutionProfile::from_table(&a5, &table, a5.default_involution().ok_or("no involution")?)?;
    let rates = compute_rates(&profile, DEFAULT_BETA_FRACTION)?;
    let rows = [50u64, 100, 200, 400]
        .iter()
        .map(|&n| plancherel_dimension_mc(&profile, &rates, n, 5_000, 2, 3))
        .collect::<Result<Vec<_>, _>>()?;
    print!("{}", dimension_tail_csv(&rows).render());
    assert!(rows.iter().all(|r| r.holds));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
