//! Colorful Helly witnesses on a box nerve.
//!
//! `cargo run --example colorful_witness`

use tolcomplex::colorful::{verify_tolerant_colorful, ColorfulMode, PartitionMatroid};
use tolcomplex::geometry::{nerve_of_boxes, AxisBox, BoxFamily};
use tolcomplex::VertexSet;

fn main() -> tolcomplex::Result<()> {
    let boxes = [[(0, 6), (0, 6)], [(2, 8), (1, 5)], [(4, 9), (3, 9)], [(0, 3), (4, 9)], [(5, 9), (0, 2)], [(1, 7), (2, 7)]]
        .iter()
        .map(|c| AxisBox::from_ints(c))
        .collect::<tolcomplex::Result<Vec<_>>>()?;
    let family = BoxFamily::new(boxes)?;
    let k = nerve_of_boxes(&family);
    let m = PartitionMatroid::new(vec![VertexSet::from([0, 1]), VertexSet::from([2, 3]), VertexSet::from([4, 5])], k.ambient())?;

    for (mode, t, d) in [(ColorfulMode::Tolerant, 1, 2), (ColorfulMode::D2t1, 1, 2)] {
        match verify_tolerant_colorful(&k, &m, t, d, mode, false) {
            Ok(r) => println!("{mode:?}: witness {:?} with complement rank {:?} <= {}", r.witness, r.rank, r.bound),
            Err(e) => println!("{mode:?}: {e}"),
        }
    }
    Ok(())
}
