mod character_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/character_table.rs"));
}

mod unitary_irreps {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/unitary_irreps.rs"));
}

mod base_condition {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/base_condition.rs"));
}

mod wreath_products {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wreath_products.rs"));
}

mod weak_sampling {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/weak_sampling.rs"));
}

mod strong_sampling {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/strong_sampling.rs"));
}

mod projection_checks {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/projection_checks.rs"));
}

mod rates_and_bounds {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rates_and_bounds.rs"));
}

mod plancherel_tail {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/plancherel_tail.rs"));
}

mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn character_table_example_runs() {
    character_table::run_example().expect("character table example should run");
}

#[test]
fn unitary_irreps_example_runs() {
    unitary_irreps::run_example().expect("unitary irreps example should run");
}

#[test]
fn base_condition_example_runs() {
    base_condition::run_example().expect("base condition example should run");
}

#[test]
fn wreath_products_example_runs() {
    wreath_products::run_example().expect("wreath products example should run");
}

#[test]
fn weak_sampling_example_runs() {
    weak_sampling::run_example().expect("weak sampling example should run");
}

#[test]
fn strong_sampling_example_runs() {
    strong_sampling::run_example().expect("strong sampling example should run");
}

#[test]
fn projection_checks_example_runs() {
    projection_checks::run_example().expect("projection checks example should run");
}

#[test]
fn rates_and_bounds_example_runs() {
    rates_and_bounds::run_example().expect("rates and bounds example should run");
}

#[test]
fn plancherel_tail_example_runs() {
    plancherel_tail::run_example().expect("plancherel tail example should run");
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command line example should run");
}
