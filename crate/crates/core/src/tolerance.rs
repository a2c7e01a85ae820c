//! `t`-tolerance complexes `T_t(K) = {η ∪ τ : η ∈ K, τ ⊆ V, |τ| ≤ t}` and
//! the decompositions used to bound their homology.
//!
//! The ambient vertex set matters: `T_t` adds arbitrary vertices of `V`,
//! including ones that lie in no face. Throughout, `K[U]` lives on `U`,
//! `cost(K, σ)` on `V` and `lk(K, σ)` on `V ∖ σ`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::RelativePair;
use crate::vertex_set::{Face, VertexSet};

/// `T_t(K)` on the same ambient set.
///
/// Generated from maximal faces only: each `η ∪ τ` with `η ∈ K` lies below
/// some `η' ∪ τ'` with `η'` maximal and `τ'` a `t`-subset of `V ∖ η'` (or
/// all of it).
pub fn tolerance_complex(k: &SimplicialComplex, t: usize) -> SimplicialComplex {
    let ambient = k.ambient();
    let mut gens = Vec::new();
    for &m in k.maximal_faces() {
        let rest = ambient.difference(m);
        let extra = t.min(rest.len());
        gens.extend(rest.subsets_of_size(extra).map(|tau| m.union(tau)));
    }
    SimplicialComplex::from_generators(gens, ambient)
}

/// Whether `sigma ∈ T_t(K)`, with a largest `η ⊆ σ`, `η ∈ K`, as witness.
///
/// `η` is `σ ∩ F` for the maximal face `F` meeting `σ` most (lowest
/// bitmask on ties); `σ` is a member iff `|σ ∖ η| ≤ t`.
pub fn tolerance_membership(k: &SimplicialComplex, t: usize, sigma: Face) -> Result<Option<Face>> {
    if !sigma.is_subset(k.ambient()) {
        return Err(Error::FaceOutsideAmbient { face: sigma, ambient: k.ambient() });
    }
    let best = k
        .maximal_faces()
        .iter()
        .map(|m| sigma.intersection(*m))
        .min_by_key(|eta| (std::cmp::Reverse(eta.len()), *eta));
    Ok(best.filter(|eta| sigma.len() - eta.len() <= t))
}

/// `∪_{σ' ⊆ σ, 1 ≤ |σ'| ≤ t} T_{t-|σ'|}(lk(K[V∖σ'], σ∖σ'))` on `V ∖ σ`.
pub fn link_union(k: &SimplicialComplex, t: usize, sigma: Face) -> Result<SimplicialComplex> {
    if !k.contains(sigma) {
        return Err(Error::NotAFace(sigma));
    }
    let ambient = k.ambient().difference(sigma);
    let mut acc = SimplicialComplex::void(ambient);
    for size in 1..=t.min(sigma.len()) {
        for sub in sigma.subsets_of_size(size) {
            let piece = k.induced(k.ambient().difference(sub)).link(sigma.difference(sub))?;
            acc = acc.union(&tolerance_complex(&piece, t - size))?;
        }
    }
    Ok(acc)
}

fn check_nonempty_face(k: &SimplicialComplex, sigma: Face) -> Result<()> {
    if !k.contains(sigma) {
        return Err(Error::NotAFace(sigma));
    }
    if sigma.is_empty() {
        return Err(Error::precondition("σ must be a nonempty face"));
    }
    Ok(())
}

/// Both sides of the set identity
/// `T_t(K) ∖ T_t(cost(K,σ)) = {σ ∪ η : η ∈ T_t(lk(K,σ)) ∖ link_union(K,t,σ)}`,
/// each as a sorted face list.
pub fn lemma41_decomposition(k: &SimplicialComplex, t: usize, sigma: Face) -> Result<(Vec<Face>, Vec<Face>)> {
    check_nonempty_face(k, sigma)?;
    let full = tolerance_complex(k, t);
    let cost = tolerance_complex(&k.costar(sigma), t);
    let mut left: Vec<Face> = full.faces().filter(|f| !cost.contains(*f)).collect();
    left.sort_unstable();

    let link = tolerance_complex(&k.link(sigma)?, t);
    let removed = link_union(k, t, sigma)?;
    let mut right: Vec<Face> = link.faces().filter(|f| !removed.contains(*f)).map(|eta| eta.union(sigma)).collect();
    right.sort_unstable();
    Ok((left, right))
}

/// The pairs `(T_t(K), T_t(cost(K,σ)))` and
/// `(T_t(lk(K,σ)), T_t(lk(K,σ)) ∩ link_union(K,t,σ))`, whose relative
/// homologies agree after a shift by `|σ|`.
pub fn shifted_pairs(k: &SimplicialComplex, t: usize, sigma: Face) -> Result<(RelativePair, RelativePair)> {
    check_nonempty_face(k, sigma)?;
    let upper = RelativePair::new(tolerance_complex(k, t), tolerance_complex(&k.costar(sigma), t))?;
    let link = tolerance_complex(&k.link(sigma)?, t);
    let inner = link.intersection(&link_union(k, t, sigma)?)?;
    let lower = RelativePair::new(link, inner)?;
    Ok((upper, lower))
}

/// `U` with `σ ∪ U` the unique maximal face containing `σ`, provided that
/// face is strictly larger than `σ`.
pub fn free_extension(k: &SimplicialComplex, sigma: Face) -> Result<VertexSet> {
    check_nonempty_face(k, sigma)?;
    let owners: Vec<Face> = k.maximal_faces().iter().copied().filter(|m| sigma.is_subset(*m)).collect();
    match owners.as_slice() {
        [m] if *m != sigma => Ok(m.difference(sigma)),
        [_] => Err(Error::precondition(format!("{sigma} is itself a maximal face"))),
        _ => Err(Error::NotFree(sigma)),
    }
}

/// `∪_{σ' ⊆ σ, 1 ≤ |σ'| ≤ t} T_{t-|σ'|}(lk(K, σ∖σ')[U ∪ W])` on `U ∪ W`.
///
/// Requires `σ` nonempty and free in `K` with unique maximal face `σ ∪ U`,
/// `U ≠ ∅`, `t ≥ 1`, and `W` a `t`-subset of `V ∖ (σ ∪ U)`.
pub fn prop43_union(k: &SimplicialComplex, t: usize, sigma: Face, u: VertexSet, w: VertexSet) -> Result<SimplicialComplex> {
    if t == 0 {
        return Err(Error::precondition("t must be at least 1"));
    }
    let actual_u = free_extension(k, sigma)?;
    if actual_u != u {
        return Err(Error::precondition(format!("the maximal face over {sigma} is {}, not {}", sigma.union(actual_u), sigma.union(u))));
    }
    if w.len() != t || !w.is_subset(k.ambient().difference(sigma.union(u))) {
        return Err(Error::precondition(format!("W = {w} must be a {t}-subset of V ∖ (σ ∪ U)")));
    }
    let uw = u.union(w);
    let mut acc = SimplicialComplex::void(uw);
    for size in 1..=t.min(sigma.len()) {
        for sub in sigma.subsets_of_size(size) {
            let piece = k.link(sigma.difference(sub))?.induced(uw);
            acc = acc.union(&tolerance_complex(&piece, t - size))?;
        }
    }
    Ok(acc)
}

/// Every `(W, prop43_union(K, t, σ, U, W))` for `W` ranging over the
/// `t`-subsets of `V ∖ (σ ∪ U)` in ascending bitmask order.
pub fn prop43_components(k: &SimplicialComplex, t: usize, sigma: Face) -> Result<Vec<(VertexSet, SimplicialComplex)>> {
    let u = free_extension(k, sigma)?;
    let outside = k.ambient().difference(sigma.union(u));
    outside.subsets_of_size(t).map(|w| Ok((w, prop43_union(k, t, sigma, u, w)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_numbers, relative_betti, BettiVector};
    use proptest::prelude::*;

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    fn two_blocks(t: usize) -> SimplicialComplex {
        let a = VertexSet::range(t + 1);
        let b = VertexSet::range(2 * t + 2).difference(a);
        SimplicialComplex::from_maximal_faces([a, b], a.union(b)).unwrap()
    }

    /// Definition-level oracle: every subset of `V` that is a face of `K`
    /// after deleting at most `t` of its vertices.
    fn tolerance_oracle(k: &SimplicialComplex, t: usize) -> Vec<Face> {
        let mut out: Vec<Face> = k
            .ambient()
            .subsets()
            .filter(|s| s.subsets().any(|eta| s.len() - eta.len() <= t && k.contains(eta)))
            .collect();
        out.sort_unstable();
        out
    }

    fn sorted_faces(k: &SimplicialComplex) -> Vec<Face> {
        let mut f: Vec<Face> = k.faces().collect();
        f.sort_unstable();
        f
    }

    fn complex_on(n: usize) -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(0u64..(1 << n), 1..6).prop_map(move |faces| {
            SimplicialComplex::from_maximal_faces(faces.into_iter().map(VertexSet::from_bits), VertexSet::range(n)).unwrap()
        })
    }

    #[test]
    fn zero_tolerance_is_identity() {
        let k = SimplicialComplex::from_maximal_faces([vs([0, 1]), vs([1, 2, 3])], VertexSet::range(5)).unwrap();
        assert_eq!(tolerance_complex(&k, 0), k);
    }

    #[test]
    fn two_blocks_become_sphere() {
        for t in 1..=3 {
            let k = two_blocks(t);
            let tk = tolerance_complex(&k, t);
            assert_eq!(tk, SimplicialComplex::simplex_boundary(VertexSet::range(2 * t + 2)));
        }
    }

    #[test]
    fn isolated_ambient_vertex_gets_filled() {
        let k = SimplicialComplex::from_maximal_faces([vs([0, 1])], vs([0, 1, 2])).unwrap();
        assert_eq!(tolerance_complex(&k, 1), SimplicialComplex::simplex(vs([0, 1, 2])));
    }

    #[test]
    fn membership_examples() {
        let k = two_blocks(1);
        assert_eq!(tolerance_membership(&k, 1, vs([0, 1])).unwrap(), Some(vs([0, 1])));
        assert_eq!(tolerance_membership(&k, 1, vs([0, 1, 2])).unwrap(), Some(vs([0, 1])));
        assert_eq!(tolerance_membership(&k, 1, vs([0, 1, 2, 3])).unwrap(), None);
        let e = SimplicialComplex::empty(VertexSet::range(3));
        assert_eq!(tolerance_membership(&e, 2, vs([0, 2])).unwrap(), Some(VertexSet::EMPTY));
        assert!(tolerance_membership(&k, 1, vs([9])).is_err());
    }

    #[test]
    fn lemma41_on_two_blocks() {
        let k = two_blocks(1);
        let (left, right) = lemma41_decomposition(&k, 1, vs([0, 1])).unwrap();
        assert_eq!(left, right);
        assert!(!left.is_empty());
        assert!(lemma41_decomposition(&k, 1, VertexSet::EMPTY).is_err());
        assert!(matches!(lemma41_decomposition(&k, 1, vs([0, 2])), Err(Error::NotAFace(_))));
    }

    #[test]
    fn prop43_matches_union_of_two_links_for_edges() {
        // σ = {0,1} free in the tetrahedron face {0,1,2}, plus extra faces
        let k = SimplicialComplex::from_maximal_faces([vs([0, 1, 2]), vs([1, 3]), vs([2, 3, 4]), vs([0, 4])], VertexSet::range(5))
            .unwrap();
        let sigma = vs([0, 1]);
        let u = free_extension(&k, sigma).unwrap();
        assert_eq!(u, vs([2]));
        for w in [3usize, 4] {
            let uw = u.with(w);
            let union = prop43_union(&k, 1, sigma, u, VertexSet::singleton(w)).unwrap();
            let expected = k.link(vs([1])).unwrap().induced(uw).union(&k.link(vs([0])).unwrap().induced(uw)).unwrap();
            assert_eq!(union, expected);
            assert_eq!(union.ambient(), uw);
        }
    }

    #[test]
    fn prop43_preconditions() {
        let k = SimplicialComplex::from_maximal_faces([vs([0, 1, 2]), vs([1, 2, 3])], VertexSet::range(5)).unwrap();
        assert!(prop43_union(&k, 0, vs([0]), vs([1, 2]), VertexSet::EMPTY).is_err());
        assert!(prop43_union(&k, 1, vs([1, 2]), vs([0]), vs([4])).is_err());
        assert!(prop43_union(&k, 1, vs([0]), vs([1, 2]), vs([2])).is_err());
        assert!(prop43_union(&k, 1, vs([0]), vs([1, 2]), vs([3, 4])).is_err());
        assert!(prop43_union(&k, 1, vs([0]), vs([1, 2]), vs([3])).is_ok());
    }

    #[test]
    fn prop43_pieces_over_a_simplex_have_complete_intersections() {
        let sigma = vs([0, 1]);
        let k = SimplicialComplex::simplex(vs([0, 1, 2])).with_ambient(VertexSet::range(6)).unwrap();
        let comps = prop43_components(&k, 2, sigma).unwrap();
        assert_eq!(comps.len(), 3);
        let u = vs([2]);
        for (i, (wa, a)) in comps.iter().enumerate() {
            for (wb, b) in &comps[i + 1..] {
                let both = a.with_ambient(VertexSet::range(6)).unwrap().intersection(&b.with_ambient(VertexSet::range(6)).unwrap()).unwrap();
                assert_eq!(both.maximal_faces(), &[u.union(wa.intersection(*wb))]);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn construction_matches_definition(k in complex_on(6), t in 0usize..4) {
            let tk = tolerance_complex(&k, t);
            prop_assert_eq!(tk.ambient(), k.ambient());
            prop_assert_eq!(sorted_faces(&tk), tolerance_oracle(&k, t));
            for s in k.ambient().subsets() {
                prop_assert_eq!(tolerance_membership(&k, t, s).unwrap().is_some(), tk.contains(s));
            }
        }

        #[test]
        fn nesting_and_induced_commutation(k in complex_on(6), t in 0usize..3, w in 0u64..(1 << 6)) {
            let tk = tolerance_complex(&k, t);
            prop_assert!(k.is_subcomplex_of(&tk));
            prop_assert!(tk.is_subcomplex_of(&tolerance_complex(&k, t + 1)));
            let w = VertexSet::from_bits(w);
            prop_assert_eq!(tk.induced(w), tolerance_complex(&k.induced(w), t));
        }

        #[test]
        fn lemma41_holds(k in complex_on(6), t in 0usize..3, pick in 0usize..64) {
            let faces: Vec<Face> = k.faces().filter(|f| !f.is_empty()).collect();
            prop_assume!(!faces.is_empty());
            let sigma = faces[pick % faces.len()];
            let (left, right) = lemma41_decomposition(&k, t, sigma).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn corollary_shift_holds(k in complex_on(6), t in 1usize..3, pick in 0usize..64) {
            let faces: Vec<Face> = k.faces().filter(|f| !f.is_empty()).collect();
            prop_assume!(!faces.is_empty());
            let sigma = faces[pick % faces.len()];
            let (upper, lower) = shifted_pairs(&k, t, sigma).unwrap();
            prop_assert_eq!(relative_betti(&upper), relative_betti(&lower).shifted(sigma.len() as isize));
        }

        #[test]
        fn proposition_direct_sum_holds(k in complex_on(6), t in 1usize..3, pick in 0usize..64) {
            let free: Vec<Face> = k.faces().filter(|f| !f.is_empty() && free_extension(&k, *f).is_ok()).collect();
            prop_assume!(!free.is_empty());
            let sigma = free[pick % free.len()];
            let (upper, _) = shifted_pairs(&k, t, sigma).unwrap();
            let comps = prop43_components(&k, t, sigma).unwrap();
            let parts: Vec<BettiVector> = comps.iter().map(|(_, y)| betti_numbers(y).unwrap()).collect();
            let sum = BettiVector::sum(&parts).shifted(sigma.len() as isize + 1);
            prop_assert_eq!(relative_betti(&upper), sum);
        }
    }
}
