//! Nerves of random boxes and points in common with tolerance.
//!
//! `cargo run --example box_nerves`

use tolcomplex::collapse::collapsibility_number;
use tolcomplex::geometry::{has_common_point_with_tolerance, nerve_of_boxes, random_boxes};
use tolcomplex::leray::leray_number;

fn main() -> tolcomplex::Result<()> {
    for d in 1..=2 {
        let family = random_boxes(d, 7, 2024 + d as u64, 10)?;
        let n = nerve_of_boxes(&family);
        println!("{d}-dimensional boxes:\n{family}");
        println!("nerve maximal faces: {:?}", n.maximal_faces());
        println!("C = {}, L = {}", collapsibility_number(&n), leray_number(&n));
        for t in 0..=3 {
            match has_common_point_with_tolerance(&family, t) {
                Some(kept) => println!("tolerance {t}: boxes {kept} share a point"),
                None => println!("tolerance {t}: no common point"),
            }
        }
        println!();
    }
    Ok(())
}
