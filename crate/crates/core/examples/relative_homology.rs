//! Relative homology of tolerance pairs and the shift by |σ|.
//!
//! `cargo run --example relative_homology`

use tolcomplex::homology::{relative_betti, verify_shift_isomorphism};
use tolcomplex::tolerance::{free_extension, prop43_components, shifted_pairs};
use tolcomplex::{betti_numbers, BettiVector, SimplicialComplex, VertexSet};

fn main() -> tolcomplex::Result<()> {
    let k = SimplicialComplex::from_maximal_faces(
        [VertexSet::from([0, 1, 2]), VertexSet::from([2, 3]), VertexSet::from([3, 4])],
        VertexSet::range(5),
    )?;
    let sigma = VertexSet::from([0]);
    let t = 1;
    println!("σ = {sigma}, unique maximal face σ ∪ {}", free_extension(&k, sigma)?);

    let (upper, lower) = shifted_pairs(&k, t, sigma)?;
    let bu = relative_betti(&upper);
    let bl = relative_betti(&lower);
    println!("H(T_1(K), T_1(cost)) = {:?}", bu.values());
    println!("H(T_1(lk), inner)     = {:?}  (shifted by |σ| = 1)", bl.values());
    println!("chain isomorphism: {}", verify_shift_isomorphism(upper.x(), upper.y(), lower.x(), lower.y(), sigma)?);

    let pieces = prop43_components(&k, t, sigma)?
        .iter()
        .map(|(_, y)| betti_numbers(y))
        .collect::<tolcomplex::Result<Vec<_>>>()?;
    let sum = BettiVector::sum(&pieces).shifted(sigma.len() as isize + 1);
    println!("direct sum over W: {:?} (matches: {})", sum.values(), sum == bu);
    Ok(())
}
