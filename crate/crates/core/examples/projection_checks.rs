// Class averages of ‖Π_m b‖² and the frame projection inequality.

use hsp_powers::group::make_alternating;
use hsp_powers::linalg::random_unit_vector;
use hsp_powers::repr::isotypic_projector;
use hsp_powers::sampling::{frame_projection_bound_check, ExpVarChecker, Frame, RepresentationData};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let data = RepresentationData::new(make_alternating(5)?)?;
    let mu = data.group.default_involution().ok_or("no involution")?;
    let class = data.group.class_of(mu);
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for irrep in 0..data.table.num_irreps() {
        let checker = ExpVarChecker::new(&data, irrep, class)?;
        let b = random_unit_vector(&mut rng, checker.dim());
        let r = checker.check(&b);
        println!(
            "{:>5}: E = {:.6} (closed form {:.6}), Var = {:.3e} ≤ {:.3e}",
            data.table.label(irrep),
            r.expectation,
            r.closed_form,
            r.variance,
            r.variance_bound
        );
        assert!(r.holds(1e-9));
    }
    let rho = &data.irreps[data.table.num_irreps() - 1];
    let dual = rho.rep().tensor_with_dual();
    let frame = Frame::random_overcomplete(&mut rng, rho.dim(), 40)?;
    for sigma in 0..data.table.num_irreps() {
        let l = isotypic_projector(&data.table, sigma, &dual);
        let c = frame_projection_bound_check(&frame, &l);
        println!("L = {}-isotypic: lhs {:.4} ≤ dim L {}", data.table.label(sigma), c.lhs, c.dim_l);
        assert!(c.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
