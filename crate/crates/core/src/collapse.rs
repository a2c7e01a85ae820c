//! Elementary `d`-collapses and the collapsibility number.
//!
//! Decisions use the recursive characterization: `K` is `d`-collapsible iff
//! `dim K < d`, or some `σ` with `|σ| = d` lies in a unique maximal face
//! `τ ≠ σ` and `cost(K, σ)` is `d`-collapsible. The search backtracks over
//! every such `σ` (ascending bitmask order) and remembers complexes already
//! known to fail.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::Face;

/// One elementary collapse: remove every face containing `sigma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub sigma: Face,
    pub unique_max: Face,
}

/// A sequence of elementary collapses ending at the void complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CollapseCertificate {
    pub steps: Vec<CollapseStep>,
}

impl CollapseCertificate {
    /// Replays the steps from `k`, checking that each removed face has at
    /// most `d` vertices, is free with the recorded maximal face, and that
    /// the run ends at the void complex.
    pub fn replay(&self, k: &SimplicialComplex, d: usize) -> Result<()> {
        let mut cur = k.clone();
        for step in &self.steps {
            if step.sigma.len() > d {
                return Err(Error::precondition(format!("step removes {} with more than {d} vertices", step.sigma)));
            }
            let owners: Vec<Face> = cur.maximal_faces().iter().copied().filter(|m| step.sigma.is_subset(*m)).collect();
            if owners != [step.unique_max] {
                return Err(Error::NotFree(step.sigma));
            }
            cur = cur.costar(step.sigma);
        }
        if !cur.is_void() {
            return Err(Error::precondition(format!("replay stops at {cur}, not the void complex")));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Faces with at most `d` vertices lying in exactly one maximal face,
/// paired with that face, in ascending bitmask order of the free face.
pub fn free_faces(k: &SimplicialComplex, d: usize) -> Vec<(Face, Face)> {
    let maximal = k.maximal_faces();
    let mut out = Vec::new();
    for (i, &m) in maximal.iter().enumerate() {
        for size in 0..=d.min(m.len()) {
            for s in m.subsets_of_size(size) {
                let shared = maximal.iter().enumerate().any(|(j, o)| j != i && s.is_subset(*o));
                if !shared {
                    out.push((s, m));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Removes all faces containing the free face `sigma`.
pub fn elementary_collapse(k: &SimplicialComplex, sigma: Face) -> Result<SimplicialComplex> {
    if !k.contains(sigma) {
        return Err(Error::NotAFace(sigma));
    }
    if k.containing_maximal(sigma) != 1 {
        return Err(Error::NotFree(sigma));
    }
    Ok(k.costar(sigma))
}

/// Candidate faces for the recursive step: `|σ| = d`, unique maximal face
/// strictly larger than `σ`.
fn recursive_candidates(k: &SimplicialComplex, d: usize) -> Vec<CollapseStep> {
    let maximal = k.maximal_faces();
    let mut out = Vec::new();
    for (i, &m) in maximal.iter().enumerate() {
        if m.len() <= d {
            continue;
        }
        for s in m.subsets_of_size(d) {
            if !maximal.iter().enumerate().any(|(j, o)| j != i && s.is_subset(*o)) {
                out.push(CollapseStep { sigma: s, unique_max: m });
            }
        }
    }
    out.sort_unstable_by_key(|s| s.sigma);
    out
}

fn max_size(k: &SimplicialComplex) -> usize {
    k.maximal_faces().iter().map(|m| m.len()).max().unwrap_or(0)
}

/// Removes the maximal faces of a complex of dimension below `d` one at a
/// time, largest first, until nothing is left.
fn sweep(k: &SimplicialComplex, steps: &mut Vec<CollapseStep>) {
    let mut cur = k.clone();
    while let Some(&m) = cur.maximal_faces().iter().min_by_key(|m| (std::cmp::Reverse(m.len()), **m)) {
        steps.push(CollapseStep { sigma: m, unique_max: m });
        cur = cur.costar(m);
    }
}

struct Search {
    d: usize,
    failed: HashSet<Vec<Face>>,
    greedy: bool,
}

impl Search {
    fn run(&mut self, k: &SimplicialComplex, steps: &mut Vec<CollapseStep>) -> bool {
        if k.is_void() || max_size(k) <= self.d {
            sweep(k, steps);
            return true;
        }
        if self.failed.contains(k.maximal_faces()) {
            return false;
        }
        for cand in recursive_candidates(k, self.d) {
            steps.push(cand);
            let mark = steps.len();
            if self.run(&k.costar(cand.sigma), steps) {
                return true;
            }
            steps.truncate(mark - 1);
            if self.greedy {
                break;
            }
        }
        if !self.greedy {
            self.failed.insert(k.maximal_faces().to_vec());
        }
        false
    }
}

/// Greedy first-candidate run. A certificate proves collapsibility; `None`
/// proves nothing.
pub fn greedy_collapse(k: &SimplicialComplex, d: usize) -> Option<CollapseCertificate> {
    let mut search = Search { d, failed: HashSet::new(), greedy: true };
    let mut steps = Vec::new();
    search.run(k, &mut steps).then_some(CollapseCertificate { steps })
}

/// A certificate that `k` is `d`-collapsible, or `None` if it is not.
///
/// The void complex is vacuously collapsible with an empty certificate.
pub fn find_collapse(k: &SimplicialComplex, d: usize) -> Option<CollapseCertificate> {
    if let Some(cert) = greedy_collapse(k, d) {
        return Some(cert);
    }
    let mut search = Search { d, failed: HashSet::new(), greedy: false };
    let mut steps = Vec::new();
    search.run(k, &mut steps).then_some(CollapseCertificate { steps })
}

pub fn is_d_collapsible(k: &SimplicialComplex, d: usize) -> bool {
    find_collapse(k, d).is_some()
}

/// The least `d` for which `k` is `d`-collapsible, with a certificate.
///
/// The search starts at the Helly number, a lower bound. Void complexes
/// get 0.
pub fn collapsibility_with_certificate(k: &SimplicialComplex) -> (usize, CollapseCertificate) {
    let top = max_size(k);
    let start = if k.is_void() { 0 } else { k.helly_number().min(top) };
    for d in start..=top {
        if let Some(cert) = find_collapse(k, d) {
            return (d, cert);
        }
    }
    unreachable!("every complex is (dim + 1)-collapsible")
}

pub fn collapsibility_number(k: &SimplicialComplex) -> usize {
    collapsibility_with_certificate(k).0
}
