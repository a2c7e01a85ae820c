//! Summary of the invariants of one complex.

use std::fmt::Write as _;

use serde::Serialize;

use crate::collapse::collapsibility_number;
use crate::complex::SimplicialComplex;
use crate::homology::{betti_numbers, BettiVector};
use crate::leray::{leray_number_with_witness, LerayWitness};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub vertices: VertexSet,
    pub void: bool,
    pub dim: Option<isize>,
    /// `f_{-1}, f_0, …`.
    pub f_vector: Vec<usize>,
    pub maximal_faces: Vec<VertexSet>,
    pub betti: Option<BettiVector>,
    #[serde(rename = "h")]
    pub helly_number: usize,
    #[serde(rename = "L")]
    pub leray_number: usize,
    pub leray_witness: Option<LerayWitness>,
    #[serde(rename = "C")]
    pub collapsibility_number: usize,
    pub missing_faces: Vec<VertexSet>,
}

pub fn analyze(k: &SimplicialComplex) -> Analysis {
    let (leray_number, leray_witness) = leray_number_with_witness(k);
    Analysis {
        vertices: k.ambient(),
        void: k.is_void(),
        dim: k.dim(),
        f_vector: k.f_vector(),
        maximal_faces: k.maximal_faces().to_vec(),
        betti: betti_numbers(k).ok(),
        helly_number: k.helly_number(),
        leray_number,
        leray_witness,
        collapsibility_number: collapsibility_number(k),
        missing_faces: k.missing_faces(),
    }
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices: {}", self.vertices);
        if self.void {
            let _ = writeln!(out, "void complex (no faces)");
            return out;
        }
        let dim = self.dim.expect("non-void complexes have a dimension");
        let _ = writeln!(out, "dimension: {dim}");
        let _ = writeln!(out, "maximal faces: {}", self.maximal_faces.len());
        let f: Vec<String> = self.f_vector.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "f-vector (from dim -1): {}", f.join(" "));
        if let Some(b) = &self.betti {
            let nz: Vec<String> = b.iter().filter(|(_, v)| *v != 0).map(|(d, v)| format!("b{d}={v}")).collect();
            let shown = if nz.is_empty() { "all zero".to_string() } else { nz.join(" ") };
            let _ = writeln!(out, "reduced betti: {shown}");
        }
        let _ = writeln!(out, "helly number h: {}", self.helly_number);
        match &self.leray_witness {
            Some(w) => {
                let _ = writeln!(out, "leray number L: {} (homology in dim {} on {})", self.leray_number, w.dim, w.subset);
            }
            None => {
                let _ = writeln!(out, "leray number L: {}", self.leray_number);
            }
        }
        let _ = writeln!(out, "collapsibility number C: {}", self.collapsibility_number);
        let missing: Vec<String> = self.missing_faces.iter().map(|m| m.to_string()).collect();
        let _ = writeln!(out, "missing faces: {}", if missing.is_empty() { "none".to_string() } else { missing.join(" ") });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::two_block_complex;

    #[test]
    fn two_blocks_report() {
        let a = analyze(&two_block_complex(1).unwrap());
        assert_eq!((a.collapsibility_number, a.leray_number, a.helly_number), (1, 1, 1));
        let json = serde_json::to_value(&a).unwrap();
        assert_eq!(json["C"], 1);
        assert_eq!(json["L"], 1);
        assert_eq!(json["h"], 1);
    }

    #[test]
    fn triangle_boundary_report() {
        let a = analyze(&SimplicialComplex::simplex_boundary(VertexSet::range(3)));
        assert_eq!((a.leray_number, a.helly_number), (2, 2));
        assert_eq!(a.betti.as_ref().unwrap().get(1), 1);
        let json = serde_json::to_value(&a).unwrap();
        assert_eq!(json["betti"]["1"], 1);
        assert!(a.to_text().contains("b1=1"));
    }

    #[test]
    fn void_report() {
        let a = analyze(&SimplicialComplex::void(VertexSet::EMPTY));
        assert!(a.void);
        assert!(a.betti.is_none());
        assert!(a.to_text().contains("void"));
    }
}
