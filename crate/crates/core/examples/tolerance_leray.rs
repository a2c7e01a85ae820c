//! Leray numbers of tolerance complexes against the h(t,d) bound.
//!
//! `cargo run --release --example tolerance_leray`

use tolcomplex::bounds::h_value;
use tolcomplex::collapse::collapsibility_number;
use tolcomplex::geometry::random_complex;
use tolcomplex::leray::leray_number;
use tolcomplex::tolerance::tolerance_complex;

fn main() -> tolcomplex::Result<()> {
    println!("{:>4} {:>3} {:>3} {:>9} {:>7}", "seed", "C", "t", "L(T_t)", "h(t,d)");
    for seed in 0..12 {
        let k = random_complex(7, 0.5, seed);
        let d = collapsibility_number(&k).max(1);
        for t in 1..=2 {
            let l = leray_number(&tolerance_complex(&k, t));
            let h = h_value(t, d)?;
            assert!(l as u128 <= h);
            println!("{seed:>4} {d:>3} {t:>3} {l:>9} {h:>7}");
        }
    }
    Ok(())
}
