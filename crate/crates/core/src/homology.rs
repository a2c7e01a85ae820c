//! Reduced and relative simplicial homology with rational coefficients.
//!
//! Chains live on a *cell set*: all faces of `K` (including `∅`, which makes
//! the homology reduced) or the faces of `X ∖ Y` for a pair `Y ⊆ X`. The
//! boundary of a cell keeps only the facets that are themselves cells, which
//! is exactly the quotient boundary of the relative chain complex. Cells are
//! oriented by ascending vertex order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rank::{rank, SparseColumn};
use crate::vertex_set::{Face, VertexSet};

/// Betti numbers indexed from dimension −1 upward.
///
/// Trailing zeros are insignificant: two vectors are equal when they agree
/// in every dimension.
#[derive(Clone, Default)]
pub struct BettiVector {
    /// `values[i]` is the Betti number in dimension `i - 1`.
    values: Vec<usize>,
}

impl BettiVector {
    /// Builds a vector from values for dimensions `-1, 0, 1, …`.
    pub fn from_values(values: Vec<usize>) -> Self {
        BettiVector { values }
    }

    pub fn get(&self, dim: isize) -> usize {
        if dim < -1 {
            return 0;
        }
        self.values.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    /// Values for dimensions `-1, 0, …` as stored.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `(dim, betti)` pairs for all stored dimensions.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values.iter().enumerate().map(|(i, &b)| (i as isize - 1, b))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// Highest dimension with a nonzero entry.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.values.iter().rposition(|&b| b != 0).map(|i| i as isize - 1)
    }

    /// Highest stored dimension.
    pub fn max_dim(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// Entry-wise sum.
    pub fn sum<'a, I: IntoIterator<Item = &'a BettiVector>>(vectors: I) -> BettiVector {
        let mut values: Vec<usize> = Vec::new();
        for v in vectors {
            if v.values.len() > values.len() {
                values.resize(v.values.len(), 0);
            }
            for (acc, b) in values.iter_mut().zip(&v.values) {
                *acc += b;
            }
        }
        BettiVector { values }
    }

    /// The vector with every dimension moved up by `shift` (entries pushed
    /// below −1 are dropped).
    pub fn shifted(&self, shift: isize) -> BettiVector {
        let top = self.max_dim() + shift;
        let values = (-1..=top.max(-1)).map(|d| self.get(d - shift)).collect();
        BettiVector { values }
    }

    /// `Σ (-1)^k β_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(d, b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    fn significant(&self) -> &[usize] {
        let end = self.values.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
        &self.values[..end]
    }
}

impl PartialEq for BettiVector {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl Eq for BettiVector {}

impl fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (d, b)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{b}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for BettiVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for (d, b) in self.iter() {
            map.serialize_entry(&d.to_string(), &b)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(deserializer)?;
        let mut entries = BTreeMap::new();
        for (k, v) in raw {
            let d: isize = k.parse().map_err(serde::de::Error::custom)?;
            if d < -1 {
                return Err(serde::de::Error::custom(format!("dimension {d} below -1")));
            }
            entries.insert(d, v);
        }
        let top = entries.keys().next_back().copied().unwrap_or(-1);
        let values = (-1..=top).map(|d| entries.get(&d).copied().unwrap_or(0)).collect();
        Ok(BettiVector { values })
    }
}

/// The matrix of `∂_k` between two canonically ordered cell lists.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    /// Row cells (size `k`), ascending bitmask order.
    pub rows: Vec<Face>,
    /// Column cells (size `k + 1`), ascending bitmask order.
    pub cols: Vec<Face>,
    columns: Vec<SparseColumn>,
}

impl BoundaryMatrix {
    /// Boundary matrix from `cols` to `rows`: the facet `σ ∖ v_i` of
    /// `σ = [v_0 < … < v_k]` enters with sign `(-1)^i` when it is a row cell.
    pub fn new(cols: &[Face], rows: &[Face]) -> Self {
        let columns = cols
            .iter()
            .map(|&sigma| {
                let mut col: SparseColumn = sigma
                    .iter()
                    .enumerate()
                    .filter_map(|(i, v)| {
                        let facet = sigma.without(v);
                        rows.binary_search(&facet).ok().map(|r| (r, if i % 2 == 0 { 1 } else { -1 }))
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        BoundaryMatrix { rows: rows.to_vec(), cols: cols.to_vec(), columns }
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.columns[col].iter().find(|&&(r, _)| r == row).map_or(0, |&(_, v)| v)
    }

    pub fn column(&self, col: usize) -> &[(usize, i64)] {
        &self.columns[col]
    }

    pub fn rank(&self) -> usize {
        rank(&self.columns, self.rows.len())
    }

    /// True when `self ∘ upper = 0`, where `upper` maps into `self`'s columns.
    pub fn composes_to_zero(&self, upper: &BoundaryMatrix) -> bool {
        assert_eq!(self.cols, upper.rows, "matrices are not composable");
        upper.columns.iter().all(|col| {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(mid, a) in col {
                for &(row, b) in &self.columns[mid] {
                    *acc.entry(row).or_insert(0) += a * b;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }
}

/// A family of oriented cells, bucketed by cardinality and sorted.
#[derive(Clone, Debug, Default)]
pub struct CellComplex {
    by_size: Vec<Vec<Face>>,
}

impl CellComplex {
    /// All faces of `k`, including `∅`.
    pub fn reduced(k: &SimplicialComplex) -> Self {
        let mut by_size: Vec<Vec<Face>> = Vec::new();
        for f in k.faces() {
            if by_size.len() <= f.len() {
                by_size.resize(f.len() + 1, Vec::new());
            }
            by_size[f.len()].push(f);
        }
        CellComplex { by_size }
    }

    /// Faces of `x` that are not faces of `y`.
    pub fn relative(x: &SimplicialComplex, y: &SimplicialComplex) -> Self {
        let mut by_size: Vec<Vec<Face>> = Vec::new();
        for f in x.faces().filter(|f| !y.contains(*f)) {
            if by_size.len() <= f.len() {
                by_size.resize(f.len() + 1, Vec::new());
            }
            by_size[f.len()].push(f);
        }
        CellComplex { by_size }
    }

    /// Cells of dimension `k`.
    pub fn cells(&self, k: isize) -> &[Face] {
        if k < -1 {
            return &[];
        }
        self.by_size.get((k + 1) as usize).map_or(&[], Vec::as_slice)
    }

    pub fn is_empty(&self) -> bool {
        self.by_size.iter().all(Vec::is_empty)
    }

    /// `∂_k : C_k → C_{k-1}`.
    pub fn boundary(&self, k: isize) -> BoundaryMatrix {
        BoundaryMatrix::new(self.cells(k), self.cells(k - 1))
    }

    /// Highest dimension holding a cell, or -2 when there are none.
    pub fn top_dim(&self) -> isize {
        self.by_size.iter().rposition(|b| !b.is_empty()).map_or(-2, |i| i as isize - 1)
    }

    /// Betti numbers of this chain complex in every dimension.
    pub fn betti(&self) -> BettiVector {
        self.betti_from(-1)
    }

    /// Betti numbers, computing only dimensions `>= lowest` (lower entries
    /// are reported as 0).
    pub fn betti_from(&self, lowest: isize) -> BettiVector {
        let top = self.top_dim();
        if top < -1 {
            return BettiVector::default();
        }
        let lowest = lowest.max(-1);
        // ranks[k + 1] = rank ∂_k for k in lowest..=top+1
        let mut ranks = vec![0usize; (top + 3) as usize];
        for k in lowest.max(0)..=top {
            ranks[(k + 1) as usize] = self.boundary(k).rank();
        }
        let values = (-1..=top)
            .map(|k| {
                if k < lowest {
                    return 0;
                }
                let n = self.cells(k).len();
                let rk = if k >= 0 { ranks[(k + 1) as usize] } else { 0 };
                let rk1 = ranks[(k + 2) as usize];
                n - rk - rk1
            })
            .collect();
        BettiVector { values }
    }
}

/// Reduced Betti numbers of `k` over ℚ.
pub fn betti_numbers(k: &SimplicialComplex) -> Result<BettiVector> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(CellComplex::reduced(k).betti())
}

/// All reduced Betti numbers vanish, including dimension −1. False for the
/// void complex.
pub fn is_acyclic(k: &SimplicialComplex) -> bool {
    betti_numbers(k).is_ok_and(|b| b.is_zero())
}

/// A subcomplex `Y ⊆ X`.
#[derive(Clone, Debug)]
pub struct RelativePair {
    x: SimplicialComplex,
    y: SimplicialComplex,
}

impl RelativePair {
    pub fn new(x: SimplicialComplex, y: SimplicialComplex) -> Result<Self> {
        if let Some(&bad) = y.maximal_faces().iter().find(|f| !x.contains(**f)) {
            return Err(Error::NotASubcomplex(bad));
        }
        Ok(RelativePair { x, y })
    }

    pub fn x(&self) -> &SimplicialComplex {
        &self.x
    }

    pub fn y(&self) -> &SimplicialComplex {
        &self.y
    }

    pub fn cells(&self) -> CellComplex {
        CellComplex::relative(&self.x, &self.y)
    }
}

/// Betti numbers of `H_k(X, Y)`, from the chains on `X ∖ Y` with the
/// `Y`-censored boundary.
pub fn relative_betti(pair: &RelativePair) -> BettiVector {
    pair.cells().betti()
}

/// Convenience wrapper around [`RelativePair::new`] and [`relative_betti`].
pub fn relative_betti_of(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<BettiVector> {
    Ok(relative_betti(&RelativePair::new(x.clone(), y.clone())?))
}

/// Nerve of a family of complexes on `{0, …, m-1}`: `I` is a face when the
/// members indexed by `I` share a vertex.
pub fn nerve(family: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    if family.len() > crate::vertex_set::MAX_VERTICES {
        return Err(Error::Refused(format!("family of {} complexes exceeds 64 members", family.len())));
    }
    if let Some(other) = family.iter().find(|x| x.ambient() != first.ambient()) {
        return Err(Error::AmbientMismatch(first.ambient(), other.ambient()));
    }
    let vertex_sets: Vec<VertexSet> = family.iter().map(|x| x.vertices()).collect();
    let all = vertex_sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
    let mut faces = vec![VertexSet::EMPTY];
    for v in all.iter() {
        faces.push(vertex_sets.iter().enumerate().filter(|(_, s)| s.contains(v)).map(|(i, _)| i).collect());
    }
    Ok(SimplicialComplex::from_generators(faces, VertexSet::range(family.len())))
}

/// Sign of the permutation sorting the concatenation `(η, σ)` of two
/// disjoint sets, each listed in ascending order.
pub fn concat_sign(eta: VertexSet, sigma: VertexSet) -> i64 {
    let inversions: usize = eta.iter().map(|a| sigma.intersection(VertexSet::range(a)).len()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Checks, cell by cell, that `η ∪ σ ↦ ε(η, σ)·η` is an isomorphism of
/// chain complexes `C_•(X, Y) → C_{•-|σ|}(Z, W)`.
///
/// Requires `Y ⊆ X`, `σ ∈ X` and `W ⊆ Z ⊆ X[V ∖ σ]`. Returns `Ok(false)`
/// when `X ∖ Y ≠ {η ∪ σ : η ∈ Z ∖ W}` or the map fails to commute with
/// the boundaries.
pub fn verify_shift_isomorphism(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    z: &SimplicialComplex,
    w: &SimplicialComplex,
    sigma: Face,
) -> Result<bool> {
    if !y.is_subcomplex_of(x) {
        return Err(Error::precondition("Y is not a subcomplex of X"));
    }
    if !x.contains(sigma) {
        return Err(Error::NotAFace(sigma));
    }
    let off_sigma = x.induced(x.ambient().difference(sigma));
    if !w.is_subcomplex_of(z) || !z.is_subcomplex_of(&off_sigma) {
        return Err(Error::precondition("need W ⊆ Z ⊆ X[V ∖ σ]"));
    }
    let upper = CellComplex::relative(x, y);
    let lower = CellComplex::relative(z, w);

    // the cell map must be a bijection
    let mut count_upper = 0usize;
    for k in -1..=upper.top_dim() {
        for &c in upper.cells(k) {
            count_upper += 1;
            if !sigma.is_subset(c) {
                return Ok(false);
            }
            let eta = c.difference(sigma);
            if lower.cells(eta.dim()).binary_search(&eta).is_err() {
                return Ok(false);
            }
        }
    }
    let count_lower: usize = (-1..=lower.top_dim()).map(|k| lower.cells(k).len()).sum();
    if count_lower != count_upper {
        return Ok(false);
    }

    // φ ∘ ∂ = ∂' ∘ φ on every cell
    let shift = sigma.len() as isize;
    for k in 0..=upper.top_dim() {
        let d = upper.boundary(k);
        let d_low = lower.boundary(k - shift);
        for (ci, &c) in d.cols.iter().enumerate() {
            let eta = c.difference(sigma);
            let mut lhs: BTreeMap<Face, i64> = BTreeMap::new();
            for &(ri, coeff) in d.column(ci) {
                let facet = d.rows[ri];
                let image = facet.difference(sigma);
                *lhs.entry(image).or_insert(0) += coeff * concat_sign(image, sigma);
            }
            let eps = concat_sign(eta, sigma);
            let col = d_low.cols.binary_search(&eta).expect("bijection checked above");
            let mut rhs: BTreeMap<Face, i64> = BTreeMap::new();
            for &(ri, coeff) in d_low.column(col) {
                *rhs.entry(d_low.rows[ri]).or_insert(0) += eps * coeff;
            }
            lhs.retain(|_, v| *v != 0);
            rhs.retain(|_, v| *v != 0);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
