// Which base groups satisfy the Δ-mass condition at their involution.

use hsp_powers::group::{make_alternating, make_dihedral, make_symmetric};
use hsp_powers::repr::{character_table, ConditionReport, InvolutionProfile, Tolerances};
use hsp_powers::wreath::{iterated_wreath, wreath_dihedral};

fn show(r: &ConditionReport) {
    println!(
        "{:<12} μ={:<10} Δ-mass {:>3}  exp(Exp log d) {:>8.4}  holds {}",
        r.group,
        r.mu_label,
        r.delta_mass,
        r.exp_log_dim.exp(),
        r.condition_holds
    );
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    for g in [make_symmetric(3)?, make_dihedral(5)?, make_alternating(5)?, make_alternating(6)?] {
        let table = character_table(&g)?;
        let mu = g.default_involution().ok_or("no non-central involution")?;
        show(&ConditionReport::from_profile(&InvolutionProfile::from_table(&g, &table, mu)?, &tol));
    }
    for w in [wreath_dihedral(5)?, iterated_wreath(3)?, iterated_wreath(4)?] {
        let base = character_table(w.base())?;
        let profile = w.involution_profile(&base, w.canonical_involution())?;
        show(&ConditionReport::from_profile(&profile, &tol));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
