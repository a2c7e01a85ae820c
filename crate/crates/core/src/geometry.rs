//! Axis-parallel boxes with rational corners, their nerves, and random
//! generators for complexes and box families.
//!
//! `.boxes` files hold one box per line as `lo1 hi1 lo2 hi2 …`, optionally
//! followed by `color: i`. Coordinates are integers or fractions `p/q`.
//! Comments and `# @key value` parameters work as in `.scx` files.

use std::fmt::{self, Write as _};
use std::path::Path;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Closed box `Π [lo_i, hi_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxisBox {
    intervals: Vec<(Rational64, Rational64)>,
}

impl AxisBox {
    pub fn new(intervals: Vec<(Rational64, Rational64)>) -> Result<Self> {
        if let Some((lo, hi)) = intervals.iter().find(|(lo, hi)| lo > hi) {
            return Err(Error::precondition(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(AxisBox { intervals })
    }

    /// A box from integer corners.
    pub fn from_ints(corners: &[(i64, i64)]) -> Result<Self> {
        Self::new(corners.iter().map(|&(a, b)| (Rational64::from_integer(a), Rational64::from_integer(b))).collect())
    }

    /// The closed interval `[lo, hi]` as a one-dimensional box.
    pub fn interval(lo: i64, hi: i64) -> Result<Self> {
        Self::from_ints(&[(lo, hi)])
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(Rational64, Rational64)] {
        &self.intervals
    }

    pub fn intersects(&self, other: &AxisBox) -> bool {
        self.intervals.iter().zip(&other.intervals).all(|((a, b), (c, d))| a.max(c) <= b.min(d))
    }
}

impl fmt::Display for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{lo} {hi}")?;
        }
        Ok(())
    }
}

/// A family of boxes of one dimension, optionally colored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxFamily {
    dim: usize,
    boxes: Vec<AxisBox>,
    colors: Option<Vec<usize>>,
}

impl BoxFamily {
    pub fn new(boxes: Vec<AxisBox>) -> Result<Self> {
        let dim = boxes.first().ok_or(Error::EmptyFamily)?.dim();
        if let Some(b) = boxes.iter().find(|b| b.dim() != dim) {
            return Err(Error::precondition(format!("box of dimension {} in a family of dimension {dim}", b.dim())));
        }
        if boxes.len() > MAX_VERTICES {
            return Err(Error::Refused(format!("{} boxes exceed the 64-member limit", boxes.len())));
        }
        Ok(BoxFamily { dim, boxes, colors: None })
    }

    pub fn with_colors(mut self, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != self.boxes.len() {
            return Err(Error::precondition("one color per box is required"));
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn colors(&self) -> Option<&[usize]> {
        self.colors.as_deref()
    }

    /// Indices of each color class, classes ordered by color.
    pub fn color_classes(&self) -> Vec<VertexSet> {
        let Some(colors) = &self.colors else { return vec![VertexSet::range(self.len())] };
        let top = colors.iter().copied().max().map_or(0, |c| c + 1);
        let mut classes = vec![VertexSet::EMPTY; top];
        for (i, &c) in colors.iter().enumerate() {
            classes[c] = classes[c].with(i);
        }
        classes
    }

    /// The boxes indexed by `members` share a point. True for no members.
    pub fn has_common_point(&self, members: VertexSet) -> bool {
        (0..self.dim).all(|axis| {
            let mut it = members.iter().map(|i| self.boxes[i].intervals[axis]);
            let Some((mut lo, mut hi)) = it.next() else { return true };
            for (a, b) in it {
                lo = lo.max(a);
                hi = hi.min(b);
            }
            lo <= hi
        })
    }

    pub fn parse(text: &str) -> Result<(Self, Vec<(String, String)>)> {
        let mut boxes = Vec::new();
        let mut colors = Vec::new();
        let mut params = Vec::new();
        let mut any_color = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let (body, comment) = match raw.find('#') {
                Some(i) => (&raw[..i], Some(&raw[i + 1..])),
                None => (raw, None),
            };
            if let Some(rest) = comment.and_then(|c| c.trim_start().strip_prefix('@')) {
                let mut parts = rest.splitn(2, char::is_whitespace);
                let key = parts.next().unwrap_or("").to_string();
                if !key.is_empty() {
                    params.push((key, parts.next().unwrap_or("").trim().to_string()));
                }
            }
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            let (coords, color) = match body.find("color:") {
                Some(i) => {
                    let c: usize = body[i + 6..]
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line, "expected `color: <non-negative integer>`"))?;
                    any_color = true;
                    (&body[..i], Some(c))
                }
                None => (body, None),
            };
            let values = coords
                .split_whitespace()
                .map(|tok| tok.parse::<Rational64>().map_err(|_| Error::parse(line, format!("invalid coordinate `{tok}`"))))
                .collect::<Result<Vec<_>>>()?;
            if values.is_empty() || values.len() % 2 != 0 {
                return Err(Error::parse(line, "a box needs an even, nonzero number of coordinates"));
            }
            let intervals: Vec<_> = values.chunks(2).map(|c| (c[0], c[1])).collect();
            let b = AxisBox::new(intervals).map_err(|e| Error::parse(line, e.to_string()))?;
            if let Some(first) = boxes.first() {
                let first: &AxisBox = first;
                if first.dim() != b.dim() {
                    return Err(Error::parse(line, format!("box has dimension {}, expected {}", b.dim(), first.dim())));
                }
            }
            boxes.push(b);
            colors.push(color);
        }
        let mut family = BoxFamily::new(boxes)?;
        if any_color {
            let colors = colors
                .into_iter()
                .enumerate()
                .map(|(i, c)| c.ok_or_else(|| Error::precondition(format!("box {i} has no color while others do"))))
                .collect::<Result<Vec<_>>>()?;
            family = family.with_colors(colors)?;
        }
        Ok((family, params))
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Ok(Self::parse(&std::fs::read_to_string(path)?)?.0)
    }

    pub fn format_with_params(&self, params: &[(String, String)]) -> String {
        let mut out = String::new();
        for (k, v) in params {
            let _ = writeln!(out, "# @{k} {v}");
        }
        for (i, b) in self.boxes.iter().enumerate() {
            let _ = match &self.colors {
                Some(c) => writeln!(out, "{b} color: {}", c[i]),
                None => writeln!(out, "{b}"),
            };
        }
        out
    }
}

impl fmt::Display for BoxFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with_params(&[]))
    }
}

/// Nerve on `{0, …, n-1}`. Boxes meet iff they meet pairwise, so this is
/// the clique complex of the intersection graph, listed by Bron–Kerbosch.
pub fn nerve_of_boxes(family: &BoxFamily) -> SimplicialComplex {
    let n = family.len();
    let adj: Vec<VertexSet> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && family.boxes[i].intersects(&family.boxes[j])).collect())
        .collect();
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, VertexSet::EMPTY, VertexSet::range(n), VertexSet::EMPTY, &mut cliques);
    SimplicialComplex::from_generators(cliques, VertexSet::range(n))
}

fn bron_kerbosch(adj: &[VertexSet], r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(adj[u]).len()).expect("p is nonempty");
    let (mut p, mut x) = (p, x);
    for v in p.difference(adj[pivot]).iter() {
        bron_kerbosch(adj, r.with(v), p.intersection(adj[v]), x.intersection(adj[v]), out);
        p = p.without(v);
        x = x.with(v);
    }
}

/// Some subfamily missing at most `t` members has a common point; the
/// witness is the kept index set. Removal sets are tried by size, then
/// bitmask, and never remove every member, so a nonempty family with
/// `t ≥ n - 1` succeeds with a single box. The empty family succeeds with
/// an empty witness.
pub fn has_common_point_with_tolerance(family: &BoxFamily, t: usize) -> Option<VertexSet> {
    common_point_with_tolerance_among(family, VertexSet::range(family.len()), t)
}

/// [`has_common_point_with_tolerance`] for the subfamily indexed by `members`.
pub fn common_point_with_tolerance_among(family: &BoxFamily, members: VertexSet, t: usize) -> Option<VertexSet> {
    if members.is_empty() {
        return Some(VertexSet::EMPTY);
    }
    let max_removed = t.min(members.len() - 1);
    (0..=max_removed)
        .flat_map(|k| members.subsets_of_size(k))
        .map(|removed| members.difference(removed))
        .find(|kept| family.has_common_point(*kept))
}

/// Two disjoint blocks `{0..t}` and `{t+1..2t+1}` as maximal faces.
pub fn two_block_complex(t: usize) -> Result<SimplicialComplex> {
    if t == 0 {
        return Err(Error::precondition("two-block complex needs t >= 1"));
    }
    if 2 * t + 2 > MAX_VERTICES {
        return Err(Error::Refused(format!("two-block complex for t = {t} exceeds 64 vertices")));
    }
    let a = VertexSet::range(t + 1);
    let all = VertexSet::range(2 * t + 2);
    SimplicialComplex::from_maximal_faces([a, all.difference(a)], all)
}

/// Between 1 and `n` faces drawn independently, each vertex kept with
/// probability `density`, on vertex set `{0, …, n-1}`.
pub fn random_complex_with<R: Rng>(rng: &mut R, n: usize, density: f64) -> SimplicialComplex {
    assert!(n <= MAX_VERTICES, "at most 64 vertices");
    let count = rng.gen_range(1..=n.max(1));
    let faces = (0..count).map(|_| (0..n).filter(|_| rng.gen_bool(density)).collect()).collect();
    SimplicialComplex::from_generators(faces, VertexSet::range(n))
}

pub fn random_complex(n: usize, density: f64, seed: u64) -> SimplicialComplex {
    random_complex_with(&mut ChaCha8Rng::seed_from_u64(seed), n, density)
}

/// `n` boxes in dimension `d` with integer corners in `[0, coord_range]`.
pub fn random_boxes_with<R: Rng>(rng: &mut R, d: usize, n: usize, coord_range: i64) -> Result<BoxFamily> {
    let boxes = (0..n)
        .map(|_| {
            let corners: Vec<(i64, i64)> = (0..d)
                .map(|_| {
                    let a = rng.gen_range(0..=coord_range);
                    let b = rng.gen_range(0..=coord_range);
                    (a.min(b), a.max(b))
                })
                .collect();
            AxisBox::from_ints(&corners)
        })
        .collect::<Result<Vec<_>>>()?;
    BoxFamily::new(boxes)
}

pub fn random_boxes(d: usize, n: usize, seed: u64, coord_range: i64) -> Result<BoxFamily> {
    random_boxes_with(&mut ChaCha8Rng::seed_from_u64(seed), d, n, coord_range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::collapsibility_number;
    use crate::leray::leray_number;
    use proptest::prelude::*;

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    fn intervals(spans: &[(i64, i64)]) -> BoxFamily {
        BoxFamily::new(spans.iter().map(|&(a, b)| AxisBox::interval(a, b).unwrap()).collect()).unwrap()
    }

    /// Brute force: every subfamily tested for a common point directly.
    fn nerve_oracle(f: &BoxFamily) -> SimplicialComplex {
        let faces = VertexSet::range(f.len()).subsets().filter(|s| f.has_common_point(*s)).collect();
        SimplicialComplex::from_generators(faces, VertexSet::range(f.len()))
    }

    #[test]
    fn nerve_examples() {
        let all = intervals(&[(0, 5), (1, 4), (2, 3)]);
        assert_eq!(nerve_of_boxes(&all), SimplicialComplex::simplex(VertexSet::range(3)));
        let apart = intervals(&[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(nerve_of_boxes(&apart).maximal_faces(), &[vs([0]), vs([1]), vs([2])]);
        let path = intervals(&[(0, 2), (1, 3), (2, 4)]);
        // boxes 0 and 2 touch at the point 2, so this is a triangle
        assert_eq!(nerve_of_boxes(&path).maximal_faces(), &[vs([0, 1, 2])]);
        let path = intervals(&[(0, 2), (1, 3), (3, 4)]);
        assert_eq!(nerve_of_boxes(&path).maximal_faces(), &[vs([0, 1]), vs([1, 2])]);
    }

    #[test]
    fn tolerance_examples() {
        let f = intervals(&[(0, 1), (2, 3), (0, 3)]);
        assert_eq!(has_common_point_with_tolerance(&f, 1), Some(vs([1, 2])));
        let g = intervals(&[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(has_common_point_with_tolerance(&g, 1), None);
        assert_eq!(has_common_point_with_tolerance(&g, 2), Some(vs([2])));
        assert_eq!(has_common_point_with_tolerance(&g, 7), Some(vs([2])));
        assert_eq!(common_point_with_tolerance_among(&g, VertexSet::EMPTY, 0), Some(VertexSet::EMPTY));
    }

    #[test]
    fn two_blocks() {
        let k = two_block_complex(1).unwrap();
        assert_eq!(k.maximal_faces(), &[vs([0, 1]), vs([2, 3])]);
        assert_eq!(k.ambient(), VertexSet::range(4));
        assert!(two_block_complex(0).is_err());
    }

    #[test]
    fn boxes_round_trip_and_parse_errors() {
        let f = BoxFamily::new(vec![
            AxisBox::new(vec![(Rational64::new(1, 2), Rational64::from_integer(2)), (0.into(), 3.into())]).unwrap(),
            AxisBox::from_ints(&[(0, 1), (2, 2)]).unwrap(),
        ])
        .unwrap()
        .with_colors(vec![1, 0])
        .unwrap();
        let text = f.format_with_params(&[("seed".into(), "4".into())]);
        let (back, params) = BoxFamily::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(params, vec![("seed".to_string(), "4".to_string())]);
        assert_eq!(back.color_classes(), vec![vs([1]), vs([0])]);

        assert!(matches!(BoxFamily::parse("0 1\n2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(BoxFamily::parse("0 1\n0 1 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(BoxFamily::parse("3 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BoxFamily::parse("0 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BoxFamily::parse(""), Err(Error::EmptyFamily)));
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_complex(8, 0.5, 3), random_complex(8, 0.5, 3));
        assert_eq!(random_boxes(2, 10, 3, 20).unwrap(), random_boxes(2, 10, 3, 20).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn clique_nerve_matches_brute_force(seed in any::<u64>(), d in 1usize..4, n in 1usize..11) {
            let f = random_boxes(d, n, seed, 12).unwrap();
            let nerve = nerve_of_boxes(&f);
            prop_assert_eq!(&nerve, &nerve_oracle(&f));
            prop_assert!(nerve.helly_number() <= 1);
        }

        #[test]
        fn interval_nerves_are_one_collapsible(seed in any::<u64>(), n in 1usize..9) {
            let nerve = nerve_of_boxes(&random_boxes(1, n, seed, 10).unwrap());
            prop_assert!(leray_number(&nerve) <= 1);
            prop_assert!(collapsibility_number(&nerve) <= 1);
        }

        #[test]
        fn planar_box_nerves_are_two_collapsible(seed in any::<u64>(), n in 1usize..8) {
            let nerve = nerve_of_boxes(&random_boxes(2, n, seed, 10).unwrap());
            prop_assert!(collapsibility_number(&nerve) <= 2);
        }
    }
}
