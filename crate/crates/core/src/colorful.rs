//! Partition matroids and witness searches for colorful Helly statements.
//!
//! For a matroid `M ⊆ K` the search looks for `σ ∈ K` (or `σ ∈ T_t(K)`)
//! with `ρ(V ∖ σ)` at most a bound. Since `ρ(V ∖ σ)` only drops as `σ`
//! grows, the first hit among faces ordered by descending size and then
//! ascending bitmask is always a maximal face, so only maximal faces are
//! scanned.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::h_value;
use crate::collapse::is_d_collapsible;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::leray::is_d_leray;
use crate::tolerance::tolerance_complex;
use crate::vertex_set::{Face, VertexSet};

/// Disjoint color classes on a vertex set; vertices in no class are loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionMatroid {
    ambient: VertexSet,
    classes: Vec<VertexSet>,
}

impl PartitionMatroid {
    pub fn new(classes: Vec<VertexSet>, ambient: VertexSet) -> Result<Self> {
        for (i, a) in classes.iter().enumerate() {
            if !a.is_subset(ambient) {
                return Err(Error::FaceOutsideAmbient { face: *a, ambient });
            }
            if let Some(b) = classes[i + 1..].iter().find(|b| !a.is_disjoint(**b)) {
                return Err(Error::OverlappingVertexSets(*a, *b));
            }
        }
        Ok(PartitionMatroid { ambient, classes })
    }

    /// Parses a JSON list of classes such as `[[0,1],[2,3]]`.
    pub fn from_json(text: &str, ambient: VertexSet) -> Result<Self> {
        let classes: Vec<VertexSet> = serde_json::from_str(text)?;
        Self::new(classes, ambient)
    }

    pub fn ambient(&self) -> VertexSet {
        self.ambient
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// `ρ(W)`: the number of classes meeting `W`.
    pub fn rank(&self, w: VertexSet) -> usize {
        self.classes.iter().filter(|c| !c.is_disjoint(w)).count()
    }

    pub fn is_independent(&self, w: VertexSet) -> bool {
        w.is_subset(self.ambient) && self.classes.iter().all(|c| c.intersection(w).len() <= 1) && self.rank(w) == w.len()
    }

    /// Full transversals: one vertex from every nonempty class.
    pub fn transversals(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY];
        for class in self.classes.iter().filter(|c| !c.is_empty()) {
            out = out.iter().flat_map(|t| class.iter().map(move |v| t.with(v))).collect();
        }
        out
    }
}

/// `ρ(W)` for a partition matroid.
pub fn rank(m: &PartitionMatroid, w: VertexSet) -> usize {
    m.rank(w)
}

/// The first full transversal (in generation order) that is not a face.
pub fn missing_transversal(m: &PartitionMatroid, k: &SimplicialComplex) -> Option<VertexSet> {
    m.transversals().into_iter().find(|t| !k.contains(*t))
}

/// Every independent set of `m` is a face of `k`. Faces are closed under
/// subsets, so full transversals suffice.
pub fn matroid_subset_of_complex(m: &PartitionMatroid, k: &SimplicialComplex) -> bool {
    !k.is_void() && missing_transversal(m, k).is_none()
}

/// Which colorful statement a search targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorfulMode {
    /// `K` is `d`-Leray, `M ⊆ K`, bound `d`.
    Plain,
    /// `K` is `d`-collapsible, `M ⊆ T_t(K)`, bound `h(t, d)`.
    Tolerant,
    /// `K` is 2-collapsible, `M ⊆ T_1(K)`, bound 5.
    D2t1,
}

impl FromStr for ColorfulMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(ColorfulMode::Plain),
            "tolerant" | "general" => Ok(ColorfulMode::Tolerant),
            "d2t1" => Ok(ColorfulMode::D2t1),
            other => Err(Error::precondition(format!("unknown mode `{other}` (expected plain, tolerant or d2t1)"))),
        }
    }
}

/// Outcome of a witness search. `witness == None` on an instance whose
/// hypotheses hold contradicts the statement being checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorfulReport {
    pub mode: ColorfulMode,
    pub bound: u128,
    pub witness: Option<Face>,
    /// `ρ(V ∖ witness)`.
    pub rank: Option<usize>,
}

fn search(k: &SimplicialComplex, m: &PartitionMatroid, bound: u128) -> Option<(Face, usize)> {
    let mut faces: Vec<Face> = k.maximal_faces().to_vec();
    faces.sort_unstable_by_key(|f| (std::cmp::Reverse(f.len()), *f));
    faces
        .into_iter()
        .map(|f| (f, m.rank(k.ambient().difference(f))))
        .find(|&(_, r)| r as u128 <= bound)
}

fn same_ambient(k: &SimplicialComplex, m: &PartitionMatroid) -> Result<()> {
    if k.ambient() != m.ambient() {
        return Err(Error::AmbientMismatch(k.ambient(), m.ambient()));
    }
    Ok(())
}

/// Searches `σ ∈ K` with `ρ(V ∖ σ) ≤ d`.
///
/// Unless `assume` is set, first checks that `K` is `d`-Leray and
/// `M ⊆ K`, refusing the instance otherwise.
pub fn verify_topological_colorful_helly(
    k: &SimplicialComplex,
    m: &PartitionMatroid,
    d: usize,
    assume: bool,
) -> Result<ColorfulReport> {
    same_ambient(k, m)?;
    if !assume {
        if !is_d_leray(k, d) {
            return Err(Error::Refused(format!("the complex is not {d}-Leray")));
        }
        if let Some(t) = missing_transversal(m, k) {
            return Err(Error::Refused(format!("transversal {t} is not a face")));
        }
    }
    let found = search(k, m, d as u128);
    Ok(ColorfulReport { mode: ColorfulMode::Plain, bound: d as u128, witness: found.map(|f| f.0), rank: found.map(|f| f.1) })
}

/// Searches `σ ∈ T_t(K)` with `ρ(V ∖ σ)` at most `h(t, d)`
/// ([`ColorfulMode::Tolerant`]) or 5 ([`ColorfulMode::D2t1`], which needs
/// `t = 1`, `d = 2`). [`ColorfulMode::Plain`] is accepted for `t = 0` only.
///
/// Unless `assume` is set, checks that `K` is `d`-collapsible and that
/// `M ⊆ T_t(K)`.
pub fn verify_tolerant_colorful(
    k: &SimplicialComplex,
    m: &PartitionMatroid,
    t: usize,
    d: usize,
    mode: ColorfulMode,
    assume: bool,
) -> Result<ColorfulReport> {
    same_ambient(k, m)?;
    let bound = match mode {
        ColorfulMode::Tolerant => h_value(t, d)?,
        ColorfulMode::D2t1 if t == 1 && d == 2 => 5,
        ColorfulMode::D2t1 => return Err(Error::precondition(format!("d2t1 mode needs t = 1 and d = 2, got t = {t}, d = {d}"))),
        ColorfulMode::Plain if t == 0 => d as u128,
        ColorfulMode::Plain => return Err(Error::precondition("plain mode has no tolerance; use t = 0")),
    };
    let tk = tolerance_complex(k, t);
    if !assume {
        if !is_d_collapsible(k, d) {
            return Err(Error::Refused(format!("the complex is not {d}-collapsible")));
        }
        if let Some(tr) = missing_transversal(m, &tk) {
            return Err(Error::Refused(format!("transversal {tr} is not a face of the tolerance complex")));
        }
    }
    let found = search(&tk, m, bound);
    Ok(ColorfulReport { mode, bound, witness: found.map(|f| f.0), rank: found.map(|f| f.1) })
}

/// Some subfamily of `class` of size at least `|class| - t` is a face of
/// `nerve`; returns the largest such subfamily. `t ≥ |class|` succeeds with
/// the empty subfamily.
pub fn tolerant_point_in_common(class: VertexSet, nerve: &SimplicialComplex, t: usize) -> Option<VertexSet> {
    if t >= class.len() {
        return Some(VertexSet::EMPTY);
    }
    nerve
        .maximal_faces()
        .iter()
        .map(|f| class.intersection(*f))
        .min_by_key(|s| (std::cmp::Reverse(s.len()), *s))
        .filter(|s| s.len() + t >= class.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{nerve_of_boxes, AxisBox, BoxFamily};
    use proptest::prelude::*;

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    #[test]
    fn rank_examples() {
        let m = PartitionMatroid::new(vec![vs([0, 1]), vs([2])], VertexSet::range(4)).unwrap();
        assert_eq!(m.rank(VertexSet::EMPTY), 0);
        assert_eq!(m.rank(vs([0, 1])), 1);
        assert_eq!(m.rank(VertexSet::range(4)), 2);
        assert_eq!(m.rank(vs([3])), 0);
        assert!(m.is_independent(vs([0, 2])));
        assert!(!m.is_independent(vs([0, 1])));
        assert!(!m.is_independent(vs([3])));
        assert!(PartitionMatroid::new(vec![vs([0, 1]), vs([1])], VertexSet::range(2)).is_err());
    }

    #[test]
    fn containment_examples() {
        let m = PartitionMatroid::new(vec![vs([0]), vs([1])], VertexSet::range(2)).unwrap();
        assert!(matroid_subset_of_complex(&m, &SimplicialComplex::simplex(VertexSet::range(2))));
        let k = SimplicialComplex::from_maximal_faces([vs([0]), vs([1])], VertexSet::range(2)).unwrap();
        assert!(!matroid_subset_of_complex(&m, &k));
        assert_eq!(missing_transversal(&m, &k), Some(vs([0, 1])));
    }

    #[test]
    fn plain_search_on_complete_complex() {
        let k = SimplicialComplex::simplex(VertexSet::range(4));
        let m = PartitionMatroid::new(vec![vs([0, 1]), vs([2, 3])], VertexSet::range(4)).unwrap();
        let r = verify_topological_colorful_helly(&k, &m, 0, false).unwrap();
        assert_eq!(r.witness, Some(VertexSet::range(4)));
        assert_eq!(r.rank, Some(0));
    }

    #[test]
    fn plain_search_refuses_bad_premises() {
        let k = SimplicialComplex::simplex_boundary(VertexSet::range(3));
        let m = PartitionMatroid::new(vec![vs([0]), vs([1]), vs([2])], VertexSet::range(3)).unwrap();
        assert!(matches!(verify_topological_colorful_helly(&k, &m, 1, false), Err(Error::Refused(_))));
        assert!(verify_topological_colorful_helly(&k, &m, 0, true).unwrap().witness.is_none());
    }

    #[test]
    fn interval_colorful_helly() {
        // two colors of intervals on a line; every colorful pair meets
        let f = BoxFamily::new(
            [(0, 4), (1, 5), (3, 6), (2, 9)].iter().map(|&(a, b)| AxisBox::interval(a, b).unwrap()).collect(),
        )
        .unwrap();
        let nerve = nerve_of_boxes(&f);
        let m = PartitionMatroid::new(vec![vs([0, 1]), vs([2, 3])], VertexSet::range(4)).unwrap();
        let r = verify_topological_colorful_helly(&nerve, &m, 1, false).unwrap();
        assert!(r.rank.unwrap() <= 1);
    }

    #[test]
    fn tolerant_modes() {
        let k = SimplicialComplex::from_maximal_faces([vs([0, 1]), vs([2, 3])], VertexSet::range(4)).unwrap();
        let m = PartitionMatroid::new(vec![vs([0, 2]), vs([1, 3])], VertexSet::range(4)).unwrap();
        let r = verify_tolerant_colorful(&k, &m, 1, 1, ColorfulMode::Tolerant, false).unwrap();
        assert_eq!(r.bound, 3);
        assert!(r.witness.is_some());
        assert!(verify_tolerant_colorful(&k, &m, 1, 1, ColorfulMode::D2t1, false).is_err());
        let r = verify_tolerant_colorful(&k, &m, 1, 2, ColorfulMode::D2t1, false).unwrap();
        assert_eq!(r.bound, 5);
        let plain = verify_tolerant_colorful(&k, &m, 0, 1, ColorfulMode::Plain, true).unwrap();
        assert_eq!(plain.bound, 1);
        assert!("bogus".parse::<ColorfulMode>().is_err());
        assert_eq!("d2t1".parse::<ColorfulMode>().unwrap(), ColorfulMode::D2t1);
    }

    #[test]
    fn tolerant_point_examples() {
        let apart = nerve_of_boxes(
            &BoxFamily::new([(0, 1), (2, 3), (4, 5)].iter().map(|&(a, b)| AxisBox::interval(a, b).unwrap()).collect()).unwrap(),
        );
        assert!(tolerant_point_in_common(VertexSet::range(3), &apart, 1).is_none());
        assert_eq!(tolerant_point_in_common(VertexSet::range(3), &apart, 3), Some(VertexSet::EMPTY));
        let nested = nerve_of_boxes(
            &BoxFamily::new([(0, 9), (1, 8), (2, 7)].iter().map(|&(a, b)| AxisBox::interval(a, b).unwrap()).collect()).unwrap(),
        );
        assert_eq!(tolerant_point_in_common(VertexSet::range(3), &nested, 0), Some(VertexSet::range(3)));
    }

    #[test]
    fn classes_json() {
        let m = PartitionMatroid::from_json("[[0,1],[2]]", VertexSet::range(3)).unwrap();
        assert_eq!(m.classes(), &[vs([0, 1]), vs([2])]);
        assert!(PartitionMatroid::from_json("[[0,1],[1]]", VertexSet::range(3)).is_err());
        assert!(PartitionMatroid::from_json("{", VertexSet::range(3)).is_err());
    }

    proptest! {
        #[test]
        fn rank_axioms(labels in proptest::collection::vec(0usize..5, 8), a in 0u64..256, b in 0u64..256) {
            let mut classes = vec![VertexSet::EMPTY; 4];
            for (v, &c) in labels.iter().enumerate() {
                if c < 4 {
                    classes[c] = classes[c].with(v);
                }
            }
            let m = PartitionMatroid::new(classes, VertexSet::range(8)).unwrap();
            let (a, b) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert!(m.rank(a) <= a.len());
            prop_assert!(m.rank(a.intersection(b)) <= m.rank(a));
            prop_assert!(m.rank(a) <= m.rank(a.union(b)));
            prop_assert!(m.rank(a.union(b)) + m.rank(a.intersection(b)) <= m.rank(a) + m.rank(b));
            let independent = VertexSet::range(8).subsets().filter(|s| s.is_subset(a) && m.is_independent(*s)).map(|s| s.len()).max().unwrap_or(0);
            prop_assert_eq!(m.rank(a), independent);
        }
    }
}
