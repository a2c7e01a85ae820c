//! Invariants of a few small complexes.
//!
//! `cargo run --example analyze_complex`

use tolcomplex::geometry::two_block_complex;
use tolcomplex::report::analyze;
use tolcomplex::{SimplicialComplex, VertexSet};

fn main() -> tolcomplex::Result<()> {
    let octahedron = SimplicialComplex::from_maximal_faces(
        [[0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]].map(VertexSet::from),
        VertexSet::range(6),
    )?;
    let examples = [
        ("two blocks, t = 1", two_block_complex(1)?),
        ("triangle boundary", SimplicialComplex::simplex_boundary(VertexSet::range(3))),
        ("octahedral sphere", octahedron),
    ];
    for (name, k) in examples {
        println!("== {name}\n{}", analyze(&k).to_text());
    }
    Ok(())
}
