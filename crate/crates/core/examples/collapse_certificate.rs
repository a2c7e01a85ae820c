//! Finds a collapse sequence and replays it.
//!
//! `cargo run --example collapse_certificate`

use tolcomplex::collapse::{collapsibility_with_certificate, free_faces, is_d_collapsible};
use tolcomplex::{SimplicialComplex, VertexSet};

fn main() -> tolcomplex::Result<()> {
    // two triangles sharing an edge, plus a pendant edge
    let k = SimplicialComplex::from_maximal_faces(
        [VertexSet::from([0, 1, 2]), VertexSet::from([1, 2, 3]), VertexSet::from([3, 4])],
        VertexSet::range(5),
    )?;
    println!("free faces of size <= 1: {:?}", free_faces(&k, 1));
    println!("1-collapsible: {}", is_d_collapsible(&k, 1));

    let (c, cert) = collapsibility_with_certificate(&k);
    println!("C(K) = {c}, {} steps:", cert.len());
    for step in &cert.steps {
        println!("  remove everything above {} (inside {})", step.sigma, step.unique_max);
    }
    cert.replay(&k, c)?;
    println!("certificate replays to the void complex");
    Ok(())
}
