// Weak Fourier sampling: distributions for small hidden subgroups and the
// exact L1 distance on Gⁿ.

use hsp_powers::group::make_symmetric;
use hsp_powers::repr::character_table;
use hsp_powers::sampling::{weak_distribution, weak_l1_csv, weak_l1_curve};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = make_symmetric(3)?;
    let table = character_table(&s3)?;
    let mu = s3.default_involution().ok_or("no involution")?;
    let h = s3.subgroup(&[s3.identity(), mu])?;
    for (name, sub) in [("{1}", s3.trivial_subgroup()), ("{1,m}", h), ("G", s3.whole())] {
        let d = weak_distribution(&table, &sub)?;
        println!("H = {name:<6} numerators {:?} / {}", d.numerators.unwrap_or_default(), table.order());
    }
    let ns: Vec<u32> = (1..=8).collect();
    let rows = weak_l1_curve(&s3, &table, mu, &ns)?;
    print!("{}", weak_l1_csv(&rows).render());
    assert!(rows.iter().all(|r| r.l1 <= r.centralizer_bound && r.centralizer_bound <= r.universal_bound));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
