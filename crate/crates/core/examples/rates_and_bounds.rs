// Rate constants, Λ mass and the assembled distance bound for A5.

use hsp_powers::bounds::{compute_rates, lambda_mass, theorem_bound_assembly, tv_threshold_n, DEFAULT_BETA_FRACTION};
use hsp_powers::group::make_alternating;
use hsp_powers::repr::{character_table, InvolutionProfile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = make_alternating(5)?;
    let table = character_table(&a5)?;
    let profile = InvolutionProfile::from_table(&a5, &table, a5.default_involution().ok_or("no involution")?)?;
    let rates = compute_rates(&profile, DEFAULT_BETA_FRACTION)?;
    println!("{}", serde_json::to_string_pretty(&rates)?);
    for n in [4u64, 12, 100, 1000] {
        let l = lambda_mass(&profile, n, rates.epsilon)?;
        println!(
            "n={n:<5} s={:<3} ln Λ-mass {:>10.3} ≤ ln bound {:>10.3}  P(Λ) {:.3e}",
            l.s, l.log_lambda_mass, l.log_binomial_bound, l.plancherel_lambda_prob
        );
    }
    let n0 = tv_threshold_n(&rates)?;
    let b = theorem_bound_assembly(&rates, n0)?;
    println!("distance bound first below 1 at n = {n0}: {:.4} (failure {:.4})", b.tv_bound, b.failure_bound);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
