//! h(t,d), η closed forms, brute-force η and the upper bound on η.
//!
//! `cargo run --release --example bounds_table`

use tolcomplex::bounds::{eta_bruteforce, eta_closed, tuza_upper, HFunctionTable};

fn main() -> tolcomplex::Result<()> {
    let mut table = HFunctionTable::new();
    print!("t\\d");
    for d in 0..=6 {
        print!("{d:>10}");
    }
    println!();
    for t in 0..=4 {
        print!("{t:>3}");
        for d in 0..=6 {
            print!("{:>10}", table.get(t, d)?);
        }
        println!();
    }
    println!();
    for t in 1..=3 {
        let brute = eta_bruteforce(2, t, 8)?;
        println!("eta(2,{t}): closed {} brute {brute} upper {}", eta_closed(2, t).unwrap(), tuza_upper(2, t)?);
    }
    for r in 3..=6 {
        println!("eta({r},2): closed {} upper {}", eta_closed(r, 2).unwrap(), tuza_upper(r, 2)?);
    }
    Ok(())
}
