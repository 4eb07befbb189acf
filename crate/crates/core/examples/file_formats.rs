// JSON files and the command-line entry point.

use abelcx::catalog::by_id;
use abelcx::cli;
use abelcx::io::{emit_algebra, emit_structure, parse_algebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = by_id("S11")?;
    let text = emit_algebra(&e.algebra)?;
    print!("{text}");
    print!("{}", emit_structure(e.j().expect("catalog structure"))?);
    assert_eq!(emit_algebra(&parse_algebra(&text)?)?, text);

    let dir = tempfile::tempdir()?;
    let out = dir.path().to_str().expect("utf-8 temp path");
    let emitted = cli::run(["abelcx", "catalog", "emit", "S10", "--out", out]);
    print!("{}", emitted.stdout);
    let algebra = dir.path().join("S10.algebra.json");
    let j = dir.path().join("S10.J.json");
    let decomposed = cli::run(["abelcx".as_ref(), "decompose".as_ref(), algebra.as_os_str(), j.as_os_str()]);
    print!("{}", decomposed.stdout);
    println!("exit code {}", decomposed.code);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
