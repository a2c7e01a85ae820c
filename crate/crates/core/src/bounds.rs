//! The bound functions `h(t, d)` and `η(r, t)`, Tuza's bound, and covering
//! numbers of uniform hypergraphs.

use std::collections::HashMap;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::{parse_set_list, SetList};
use crate::vertex_set::VertexSet;

/// `C(n, k)` with overflow checking.
pub fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at each step
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Memo table for `h(0, d) = d` and
/// `h(t, d) = Σ_{s=1}^{min(t,d)} C(d,s)·(h(t-s, d) + 1) + d`.
#[derive(Debug, Default, Clone)]
pub struct HFunctionTable {
    memo: HashMap<(usize, usize), u128>,
}

impl HFunctionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, t: usize, d: usize) -> Result<u128> {
        if let Some(&v) = self.memo.get(&(t, d)) {
            return Ok(v);
        }
        let overflow = || Error::Overflow(format!("h({t},{d})"));
        // fill bottom-up in t so the recursion never nests deeply
        for tt in 0..=t {
            if self.memo.contains_key(&(tt, d)) {
                continue;
            }
            let value = if tt == 0 {
                d as u128
            } else {
                let mut acc = d as u128;
                for s in 1..=tt.min(d) {
                    let term = binomial(d as u128, s as u128)
                        .ok_or_else(overflow)?
                        .checked_mul(self.memo[&(tt - s, d)].checked_add(1).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                    acc = acc.checked_add(term).ok_or_else(overflow)?;
                }
                acc
            };
            self.memo.insert((tt, d), value);
        }
        Ok(self.memo[&(t, d)])
    }
}

pub fn h_value(t: usize, d: usize) -> Result<u128> {
    HFunctionTable::new().get(t, d)
}

/// `η(2, t) = 2t` and `η(r, 2) = ⌊(r+2)²/4⌋`; `None` elsewhere or for
/// `r < 2`, `t < 1`.
pub fn eta_closed(r: usize, t: usize) -> Option<u128> {
    if r < 2 || t < 1 {
        return None;
    }
    if r == 2 {
        Some(2 * t as u128)
    } else if t == 2 {
        let r = r as u128;
        Some((r + 2) * (r + 2) / 4)
    } else {
        None
    }
}

/// `C(r+t-1, r-1) + C(r+t-2, r-1)`, a strict upper bound on `η(r, t)`.
pub fn tuza_upper(r: usize, t: usize) -> Result<u128> {
    if r < 2 || t < 1 {
        return Err(Error::precondition("Tuza's bound needs r >= 2 and t >= 1"));
    }
    let (r, t) = (r as u128, t as u128);
    let overflow = || Error::Overflow(format!("tuza({r},{t})"));
    let a = binomial(r + t - 1, r - 1).ok_or_else(overflow)?;
    let b = binomial(r + t - 2, r - 1).ok_or_else(overflow)?;
    a.checked_add(b).ok_or_else(overflow)
}

/// A uniform hypergraph. `r` is 0 when there are no edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ambient: VertexSet,
    edges: Vec<VertexSet>,
    r: usize,
}

impl Hypergraph {
    pub fn new(edges: Vec<VertexSet>, ambient: VertexSet) -> Result<Self> {
        let r = edges.first().map_or(0, |e| e.len());
        for &e in &edges {
            if e.len() != r {
                return Err(Error::NonUniform { edge: e, expected: r, found: e.len() });
            }
            if !e.is_subset(ambient) {
                return Err(Error::FaceOutsideAmbient { face: e, ambient });
            }
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { ambient, edges, r })
    }

    pub fn from_set_list(list: &SetList) -> Result<Self> {
        Self::new(list.sets.clone(), list.resolved_ambient())
    }

    /// Parses the `.hg` format (same layout as `.scx`, one edge per line).
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_set_list(&parse_set_list(text)?)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn ambient(&self) -> VertexSet {
        self.ambient
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    /// Vertices lying in some edge.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e))
    }

    pub fn without_edge(&self, index: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Hypergraph { ambient: self.ambient, edges, r: self.r }
    }
}

fn covers(s: VertexSet, edges: &[VertexSet]) -> bool {
    edges.iter().all(|e| !e.is_disjoint(s))
}

/// A smallest vertex set meeting every edge (lowest bitmask among the
/// smallest).
pub fn minimum_cover(h: &Hypergraph) -> VertexSet {
    let pool = h.covered();
    (0..=pool.len())
        .find_map(|k| pool.subsets_of_size(k).find(|s| covers(*s, &h.edges)))
        .expect("the union of all edges is a cover")
}

/// `τ(H)`.
pub fn covering_number(h: &Hypergraph) -> usize {
    minimum_cover(h).len()
}

/// `τ(H) = t` and deleting any single edge lowers `τ`.
pub fn is_t_critical(h: &Hypergraph, t: usize) -> bool {
    covering_number(h) == t && (0..h.edges.len()).all(|i| covering_number(&h.without_edge(i)) < t)
}

/// Largest `n ≤ n_max` such that some graph on `n` vertices without
/// isolated vertices is `t`-critical; 0 if none.
///
/// Only `r = 2`, `1 ≤ t ≤ 3`, `n_max ≤ 8` are accepted. Every such graph
/// has a minimum cover of size `t`, which may be relabelled `{0, …, t-1}`,
/// so only edges meeting that set are enumerated.
pub fn eta_bruteforce(r: usize, t: usize, n_max: usize) -> Result<usize> {
    if r != 2 || !(1..=3).contains(&t) || n_max > 8 {
        return Err(Error::Refused(format!(
            "brute-force η is limited to r = 2, 1 <= t <= 3, n_max <= 8 (got r = {r}, t = {t}, n_max = {n_max})"
        )));
    }
    for n in (t..=n_max).rev() {
        if critical_graph_exists(t, n) {
            return Ok(n);
        }
    }
    Ok(0)
}

fn critical_graph_exists(t: usize, n: usize) -> bool {
    let cover = VertexSet::range(t);
    let pool: Vec<VertexSet> = VertexSet::range(n).subsets_of_size(2).filter(|e| !e.is_disjoint(cover)).collect();
    let small: Vec<VertexSet> = VertexSet::range(n).subsets_of_size(t - 1).collect();
    let all = VertexSet::range(n);
    (0u64..1 << pool.len()).into_par_iter().any(|mask| {
        let edges: Vec<VertexSet> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
        if edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e)) != all {
            return false;
        }
        // τ = t exactly when no (t-1)-set covers; an edge is critical when
        // some (t-1)-set misses it and nothing else
        let mut critical = 0u64;
        for &s in &small {
            let mut missed = edges.iter().enumerate().filter(|(_, e)| e.is_disjoint(s));
            match (missed.next(), missed.next()) {
                (None, _) => return false,
                (Some((i, _)), None) => critical |= 1 << i,
                _ => {}
            }
        }
        critical.count_ones() as usize == edges.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    /// Re-derivation of `h` straight from the recursion, no memo.
    fn h_naive(t: usize, d: usize) -> u128 {
        if t == 0 {
            return d as u128;
        }
        let mut acc = d as u128;
        for s in 1..=t.min(d) {
            acc += binomial(d as u128, s as u128).unwrap() * (h_naive(t - s, d) + 1);
        }
        acc
    }

    #[test]
    fn h_examples() {
        for d in 0..=5 {
            assert_eq!(h_value(0, d).unwrap(), d as u128);
        }
        assert_eq!(h_value(3, 1).unwrap(), 7);
        assert_eq!(h_value(1, 3).unwrap(), 15);
        assert_eq!(h_value(2, 2).unwrap(), 23);
    }

    #[test]
    fn h_closed_forms_and_naive_agree() {
        let mut table = HFunctionTable::new();
        for t in 0..=6 {
            for d in 0..=6 {
                assert_eq!(table.get(t, d).unwrap(), h_naive(t, d));
            }
        }
        for x in 0..=10u128 {
            assert_eq!(table.get(x as usize, 1).unwrap(), 2 * x + 1);
            assert_eq!(table.get(1, x as usize).unwrap(), x * x + 2 * x);
        }
    }

    #[test]
    fn h_monotone() {
        let mut table = HFunctionTable::new();
        for t in 0..6 {
            for d in 0..6 {
                let v = table.get(t, d).unwrap();
                assert!(table.get(t + 1, d).unwrap() >= v);
                assert!(table.get(t, d + 1).unwrap() >= v);
            }
        }
    }

    #[test]
    fn h_overflow_is_reported() {
        assert!(matches!(h_value(60, 60), Err(Error::Overflow(_))));
    }

    #[test]
    fn eta_and_tuza() {
        assert_eq!(eta_closed(2, 3), Some(6));
        assert_eq!(eta_closed(3, 2), Some(6));
        assert_eq!(eta_closed(4, 3), None);
        assert_eq!(eta_closed(2, 2), Some(4));
        assert_eq!(tuza_upper(2, 2).unwrap(), 5);
        assert_eq!(tuza_upper(2, 3).unwrap(), 7);
        assert_eq!(tuza_upper(3, 2).unwrap(), 9);
        for t in 1..=10 {
            assert_eq!(h_value(t, 1).unwrap(), eta_closed(2, t + 1).unwrap() - 1);
        }
    }

    #[test]
    fn covering_examples() {
        let empty = Hypergraph::new(vec![], VertexSet::range(3)).unwrap();
        assert_eq!(covering_number(&empty), 0);
        let single = Hypergraph::new(vec![vs([0, 1])], VertexSet::range(2)).unwrap();
        assert_eq!(covering_number(&single), 1);
        let triangle = Hypergraph::new(vec![vs([0, 1]), vs([1, 2]), vs([0, 2])], VertexSet::range(3)).unwrap();
        assert_eq!(covering_number(&triangle), 2);
        assert_eq!(minimum_cover(&triangle), vs([0, 1]));
    }

    #[test]
    fn criticality_examples() {
        let matching = Hypergraph::new(vec![vs([0, 1]), vs([2, 3]), vs([4, 5])], VertexSet::range(6)).unwrap();
        assert!(is_t_critical(&matching, 3));
        let triangle = Hypergraph::new(vec![vs([0, 1]), vs([1, 2]), vs([0, 2])], VertexSet::range(3)).unwrap();
        assert!(is_t_critical(&triangle, 2));
        let single = Hypergraph::new(vec![vs([0, 1])], VertexSet::range(2)).unwrap();
        assert!(!is_t_critical(&single, 2));
        let path = Hypergraph::new(vec![vs([0, 1]), vs([1, 2])], VertexSet::range(3)).unwrap();
        assert!(!is_t_critical(&path, 1));
    }

    #[test]
    fn non_uniform_rejected() {
        let err = Hypergraph::new(vec![vs([0, 1]), vs([2])], VertexSet::range(3)).unwrap_err();
        assert!(matches!(err, Error::NonUniform { expected: 2, found: 1, .. }));
        assert!(Hypergraph::parse("0 1\n1 2 3\n").is_err());
        let h = Hypergraph::parse("vertices: 5\n0 1\n3 4\n").unwrap();
        assert_eq!(h.uniformity(), 2);
        assert_eq!(h.ambient(), VertexSet::range(5));
    }

    #[test]
    fn eta_bruteforce_examples() {
        assert_eq!(eta_bruteforce(2, 2, 6).unwrap(), 4);
        assert_eq!(eta_bruteforce(2, 3, 7).unwrap(), 6);
        assert_eq!(eta_bruteforce(2, 1, 4).unwrap(), 2);
        assert!(matches!(eta_bruteforce(3, 2, 6), Err(Error::Refused(_))));
        assert!(matches!(eta_bruteforce(2, 4, 8), Err(Error::Refused(_))));
        assert!(matches!(eta_bruteforce(2, 2, 9), Err(Error::Refused(_))));
    }

    #[test]
    fn bruteforce_criticality_agrees_with_definition() {
        // every graph on 5 vertices with a fixed 2-cover, checked both ways
        let cover = VertexSet::range(2);
        let pool: Vec<VertexSet> = VertexSet::range(5).subsets_of_size(2).filter(|e| !e.is_disjoint(cover)).collect();
        let mut found = false;
        for mask in 0u64..1 << pool.len() {
            let edges: Vec<VertexSet> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
            let h = Hypergraph::new(edges, VertexSet::range(5)).unwrap();
            if h.covered() == VertexSet::range(5) && is_t_critical(&h, 2) {
                found = true;
            }
        }
        assert_eq!(found, critical_graph_exists(2, 5));
        assert!(!found);
    }
}
