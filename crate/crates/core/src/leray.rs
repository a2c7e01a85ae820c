//! Leray numbers by sweeping every induced subcomplex.
//!
//! Only subsets of the vertices that actually lie in faces are swept: adding
//! an ambient vertex that is in no face does not change an induced
//! subcomplex. The sweep runs on the rayon pool.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::homology::CellComplex;
use crate::vertex_set::VertexSet;

/// An induced subcomplex `K[subset]` with `β̃_dim ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LerayWitness {
    pub subset: VertexSet,
    pub dim: usize,
}

/// Subsets of `vertices`, largest first, ties by ascending bitmask.
fn sweep_order(vertices: VertexSet) -> Vec<VertexSet> {
    (0..=vertices.len()).rev().flat_map(|k| vertices.subsets_of_size(k)).collect()
}

/// Highest `i >= lowest` with `β̃_i(K[u]) ≠ 0`.
fn top_homology_from(k: &SimplicialComplex, u: VertexSet, lowest: usize) -> Option<usize> {
    let sub = k.induced(u);
    if sub.dim().is_none_or(|dim| dim < lowest as isize) {
        return None;
    }
    let betti = CellComplex::reduced(&sub).betti_from(lowest as isize);
    betti.top_nonzero().filter(|&i| i >= lowest as isize).map(|i| i as usize)
}

/// `None` when `k` is `d`-Leray; otherwise the first failing induced
/// subcomplex in sweep order, reported with its highest offending dimension.
pub fn leray_witness(k: &SimplicialComplex, d: usize) -> Option<LerayWitness> {
    if k.is_void() {
        return None;
    }
    sweep_order(k.vertices())
        .into_par_iter()
        .map(|u| top_homology_from(k, u, d).map(|dim| LerayWitness { subset: u, dim }))
        .find_first(Option::is_some)
        .flatten()
}

pub fn is_d_leray(k: &SimplicialComplex, d: usize) -> bool {
    leray_witness(k, d).is_none()
}

/// `1 + max{i ≥ 0 : β̃_i(K[U]) ≠ 0 for some U}`, or 0 when no induced
/// subcomplex has homology in a non-negative dimension. The void complex
/// gets 0.
pub fn leray_number(k: &SimplicialComplex) -> usize {
    if k.is_void() {
        return 0;
    }
    let best = AtomicUsize::new(0);
    sweep_order(k.vertices()).into_par_iter().for_each(|u| {
        let floor = best.load(Ordering::Relaxed);
        if let Some(i) = top_homology_from(k, u, floor) {
            best.fetch_max(i + 1, Ordering::Relaxed);
        }
    });
    best.into_inner()
}

/// Leray number together with a witness for its lower bound.
pub fn leray_number_with_witness(k: &SimplicialComplex) -> (usize, Option<LerayWitness>) {
    let l = leray_number(k);
    if l == 0 {
        return (0, None);
    }
    (l, leray_witness(k, l - 1))
}
