//! Finite simplicial complexes stored by their maximal faces.
//!
//! A [`SimplicialComplex`] is the downward closure of an antichain of
//! [`VertexSet`]s, together with an explicit ambient vertex set. The ambient
//! set may contain vertices that lie in no face; tolerance complexes and
//! costars depend on it, so every operation documents the ambient set of
//! its result.
//!
//! Two degenerate states are kept apart:
//!
//! * the *void* complex has no faces at all (no maximal faces);
//! * the *empty* complex `{∅}` has exactly one face, the empty set.
//!
//! Collapses end at the void complex, while reduced homology of `{∅}` is
//! non-trivial in dimension −1.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::vertex_set::{Face, VertexSet};

pub struct SimplicialComplex {
    ambient: VertexSet,
    /// Antichain, sorted by ascending bitmask. Empty for the void complex.
    maximal: Vec<Face>,
    /// Faces bucketed by cardinality, each bucket in ascending bitmask order.
    faces_by_size: OnceLock<Vec<Vec<Face>>>,
}

impl SimplicialComplex {
    /// Builds the downward closure of `faces` on vertex set `ambient`.
    pub fn from_maximal_faces<I>(faces: I, ambient: VertexSet) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        let faces: Vec<Face> = faces.into_iter().collect();
        if let Some(&face) = faces.iter().find(|f| !f.is_subset(ambient)) {
            return Err(Error::FaceOutsideAmbient { face, ambient });
        }
        Ok(Self::from_generators(faces, ambient))
    }

    /// Like [`from_maximal_faces`](Self::from_maximal_faces) with the ambient
    /// set taken as `{0, …, max id}`.
    pub fn from_faces<I>(faces: I) -> Self
    where
        I: IntoIterator<Item = Face>,
    {
        let faces: Vec<Face> = faces.into_iter().collect();
        let span = faces.iter().map(|f| f.span()).max().unwrap_or(0);
        Self::from_generators(faces, VertexSet::range(span))
    }

    /// Antichain-reduces `faces`; callers guarantee `faces ⊆ 2^ambient`.
    pub(crate) fn from_generators(mut faces: Vec<Face>, ambient: VertexSet) -> Self {
        debug_assert!(faces.iter().all(|f| f.is_subset(ambient)));
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|k| f.is_subset(*k)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { ambient, maximal: kept, faces_by_size: OnceLock::new() }
    }

    pub fn void(ambient: VertexSet) -> Self {
        Self::from_generators(Vec::new(), ambient)
    }

    /// The complex `{∅}`.
    pub fn empty(ambient: VertexSet) -> Self {
        Self::from_generators(vec![VertexSet::EMPTY], ambient)
    }

    /// The complete complex `2^U` on vertex set `U`.
    pub fn simplex(vertices: VertexSet) -> Self {
        Self::from_generators(vec![vertices], vertices)
    }

    /// The boundary of the simplex on `vertices`: all proper subsets.
    pub fn simplex_boundary(vertices: VertexSet) -> Self {
        let facets = vertices.iter().map(|v| vertices.without(v)).collect();
        Self::from_generators(facets, vertices)
    }

    pub fn ambient(&self) -> VertexSet {
        self.ambient
    }

    pub fn maximal_faces(&self) -> &[Face] {
        &self.maximal
    }

    pub fn is_void(&self) -> bool {
        self.maximal.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.maximal.len() == 1 && self.maximal[0].is_empty()
    }

    /// Vertices that lie in at least one face.
    pub fn vertices(&self) -> VertexSet {
        self.maximal.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// `max dim σ`; `-1` for `{∅}` and `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.maximal.iter().map(|f| f.dim()).max()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.maximal.iter().any(|m| face.is_subset(*m))
    }

    /// Number of maximal faces containing `face`.
    pub fn containing_maximal(&self, face: Face) -> usize {
        self.maximal.iter().filter(|m| face.is_subset(**m)).count()
    }

    /// Same complex, recorded on a different vertex set.
    pub fn with_ambient(&self, ambient: VertexSet) -> Result<Self> {
        Self::from_maximal_faces(self.maximal.iter().copied(), ambient)
    }

    fn face_buckets(&self) -> &Vec<Vec<Face>> {
        self.faces_by_size.get_or_init(|| {
            let top = self.maximal.iter().map(|f| f.len()).max().map_or(0, |m| m + 1);
            let mut buckets = vec![Vec::new(); top];
            for (i, m) in self.maximal.iter().enumerate() {
                let earlier = &self.maximal[..i];
                for s in m.subsets() {
                    if !earlier.iter().any(|e| s.is_subset(*e)) {
                        buckets[s.len()].push(s);
                    }
                }
            }
            for b in &mut buckets {
                b.sort_unstable();
            }
            buckets
        })
    }

    /// All `k`-dimensional faces in ascending bitmask order. `k = -1` yields
    /// `[∅]` for any non-void complex; out-of-range `k` yields nothing.
    pub fn faces_of_dim(&self, k: isize) -> &[Face] {
        let size = k + 1;
        if size < 0 {
            return &[];
        }
        self.face_buckets().get(size as usize).map_or(&[], |b| b.as_slice())
    }

    /// Every face, ordered by dimension and then bitmask.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.face_buckets().iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.face_buckets().iter().map(Vec::len).sum()
    }

    /// `f_k` for `k = -1, 0, …, dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.face_buckets().iter().map(Vec::len).collect()
    }

    /// Induced subcomplex `K[U] = {σ ∈ K : σ ⊆ U}`, on vertex set `U ∩ V`.
    pub fn induced(&self, subset: VertexSet) -> Self {
        let ambient = self.ambient.intersection(subset);
        let faces = self.maximal.iter().map(|m| m.intersection(subset)).collect();
        if self.is_void() {
            return Self::void(ambient);
        }
        Self::from_generators(faces, ambient)
    }

    /// `lk(K, τ) = {σ : σ ∩ τ = ∅, σ ∪ τ ∈ K}`, on vertex set `V ∖ τ`.
    pub fn link(&self, tau: Face) -> Result<Self> {
        if !self.contains(tau) {
            return Err(Error::NotAFace(tau));
        }
        let faces = self.maximal.iter().filter(|m| tau.is_subset(**m)).map(|m| m.difference(tau)).collect();
        Ok(Self::from_generators(faces, self.ambient.difference(tau)))
    }

    /// `st(K, τ) = {σ : σ ∪ τ ∈ K}`, on vertex set `V`.
    pub fn star(&self, tau: Face) -> Result<Self> {
        if !self.contains(tau) {
            return Err(Error::NotAFace(tau));
        }
        let faces = self.maximal.iter().filter(|m| tau.is_subset(**m)).copied().collect();
        Ok(Self::from_generators(faces, self.ambient))
    }

    /// `cost(K, τ) = {σ ∈ K : τ ⊄ σ}`, on vertex set `V`.
    ///
    /// `cost(K, ∅)` is the void complex.
    pub fn costar(&self, tau: Face) -> Self {
        let mut faces = Vec::with_capacity(self.maximal.len() + tau.len());
        for &m in &self.maximal {
            if tau.is_subset(m) {
                faces.extend(tau.iter().map(|v| m.without(v)));
            } else {
                faces.push(m);
            }
        }
        Self::from_generators(faces, self.ambient)
    }

    /// `X ∗ Y = {σ ∪ τ : σ ∈ X, τ ∈ Y}` on the union of the vertex sets,
    /// which must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if !self.ambient.is_disjoint(other.ambient) {
            return Err(Error::OverlappingVertexSets(self.ambient, other.ambient));
        }
        let faces = self
            .maximal
            .iter()
            .flat_map(|a| other.maximal.iter().map(move |b| a.union(*b)))
            .collect();
        Ok(Self::from_generators(faces, self.ambient.union(other.ambient)))
    }

    /// Union of two complexes on the same vertex set.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let faces = self.maximal.iter().chain(other.maximal.iter()).copied().collect();
        Ok(Self::from_generators(faces, self.ambient))
    }

    /// Intersection of two complexes on the same vertex set.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let faces = self
            .maximal
            .iter()
            .flat_map(|a| other.maximal.iter().map(move |b| a.intersection(*b)))
            .collect();
        Ok(Self::from_generators(faces, self.ambient))
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.maximal.iter().all(|m| other.contains(*m))
    }

    /// Some vertex lying in every maximal face (the lowest such id).
    pub fn is_cone(&self) -> Option<usize> {
        let mut maximal = self.maximal.iter();
        let first = *maximal.next()?;
        maximal.fold(first, |acc, m| acc.intersection(*m)).first()
    }

    /// Minimal non-faces inside the ambient vertex set, by increasing size
    /// and then bitmask.
    ///
    /// A candidate of size `k` is generated from a `(k-1)`-face by adding a
    /// vertex above its maximum, and kept when all its facets are faces.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        if self.is_void() {
            return Vec::new();
        }
        let mut missing = Vec::new();
        let mut level: Vec<Face> = vec![VertexSet::EMPTY];
        while !level.is_empty() {
            let mut next = Vec::new();
            let mut found = Vec::new();
            for &sigma in &level {
                let above = self.ambient.difference(VertexSet::range(sigma.span()));
                for v in above.iter() {
                    let cand = sigma.with(v);
                    if self.contains(cand) {
                        next.push(cand);
                    } else if cand.iter().all(|u| self.contains(cand.without(u))) {
                        found.push(cand);
                    }
                }
            }
            found.sort_unstable();
            missing.extend(found);
            next.sort_unstable();
            level = next;
        }
        missing
    }

    /// Largest dimension of a missing face; 0 when there are none.
    pub fn helly_number(&self) -> usize {
        self.missing_faces().iter().map(|m| m.len().saturating_sub(1)).max().unwrap_or(0)
    }

    /// Σ (-1)^k f_k over k ≥ -1 (the reduced Euler characteristic).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(size, &f)| if size % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            ambient: self.ambient,
            maximal: self.maximal.clone(),
            faces_by_size: self.faces_by_size.clone(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.maximal == other.maximal
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.maximal.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("ambient", &self.ambient)
            .field("maximal", &self.maximal)
            .finish()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void on {}", self.ambient);
        }
        f.write_str("<")?;
        for (i, m) in self.maximal.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "> on {}", self.ambient)
    }
}
