// Driving the command-line interface in-process.

use hsp_powers::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["hsp-powers", "wreath-census", "--tower", "3", "--format", "csv"], &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    if code != 0 {
        return Err(String::from_utf8(err)?.into());
    }
    let mut out = Vec::new();
    let code = run(["hsp-powers", "weak-tv", "--group", "A5", "--n-max", "5"], &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    assert_eq!(code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
