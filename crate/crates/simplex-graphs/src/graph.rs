//! The adjacency graph of simplex lines: distances, cliques, spreads, and
//! the distance-2 stratification around a base line.
//!
//! Vertices are line ids; two lines are adjacent when they meet in a point.
//! Adjacency is kept as bitset rows, built from the point→lines incidence
//! (distinct lines share at most one point, so every shared point is an
//! edge).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::projective::Hyperplane;
use crate::simplex::SimplexUniverse;
use crate::{Error, LineId, PointId, Result};

/// Undirected graph on the simplex lines of a universe.
pub struct SimplexGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    degrees: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl SimplexGraph {
    pub fn build(u: &SimplexUniverse) -> Self {
        let n = u.line_count();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for &p in u.simplex_points() {
            let through = u.lines_through(p);
            for (i, &a) in through.iter().enumerate() {
                for &b in &through[i + 1..] {
                    bits[a as usize * words + b as usize / 64] |= 1 << (b % 64);
                    bits[b as usize * words + a as usize / 64] |= 1 << (a % 64);
                }
            }
        }
        let degrees = (0..n)
            .map(|v| bits[v * words..(v + 1) * words].iter().map(|w| w.count_ones()).sum())
            .collect();
        SimplexGraph {
            n,
            words,
            bits,
            degrees,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge(&self, a: LineId, b: LineId) -> bool {
        self.bits[a as usize * self.words + b as usize / 64] & (1 << (b % 64)) != 0
    }

    pub fn degree(&self, v: LineId) -> u32 {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn edge_count(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum::<u64>() / 2
    }

    pub fn neighbors(&self, v: LineId) -> impl Iterator<Item = LineId> + '_ {
        let row = &self.bits[v as usize * self.words..(v as usize + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            let base = (w * 64) as LineId;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros();
                    word &= word - 1;
                    Some(base + bit)
                }
            })
        })
    }

    pub fn common_neighbors(&self, a: LineId, b: LineId) -> Vec<LineId> {
        let ra = &self.bits[a as usize * self.words..(a as usize + 1) * self.words];
        let rb = &self.bits[b as usize * self.words..(b as usize + 1) * self.words];
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut word = ra[w] & rb[w];
            while word != 0 {
                let bit = word.trailing_zeros();
                word &= word - 1;
                out.push((w * 64) as LineId + bit);
            }
        }
        out
    }

    /// BFS distances from a source; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, source: LineId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source as usize] = 0;
        let mut frontier = vec![source];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.neighbors(v) {
                    if dist[w as usize] == UNREACHABLE {
                        dist[w as usize] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0
            || self
                .bfs_distances(0)
                .iter()
                .all(|&d| d != UNREACHABLE)
    }

    /// Largest finite distance, or None when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let per_source: Vec<Option<u32>> = (0..self.n as LineId)
            .into_par_iter()
            .map(|v| {
                let dist = self.bfs_distances(v);
                let mut max = 0;
                for &d in &dist {
                    if d == UNREACHABLE {
                        return None;
                    }
                    max = max.max(d);
                }
                Some(max)
            })
            .collect();
        per_source.into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// If the graph is complete bipartite, returns the two parts.
    pub fn complete_bipartition(&self) -> Option<(Vec<LineId>, Vec<LineId>)> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        let dist = self.bfs_distances(0);
        let mut parts: (Vec<LineId>, Vec<LineId>) = (Vec::new(), Vec::new());
        for (v, &d) in dist.iter().enumerate() {
            if d % 2 == 0 {
                parts.0.push(v as LineId);
            } else {
                parts.1.push(v as LineId);
            }
        }
        for &a in &parts.0 {
            for &b in &parts.0 {
                if a != b && self.edge(a, b) {
                    return None;
                }
            }
            for &b in &parts.1 {
                if !self.edge(a, b) {
                    return None;
                }
            }
        }
        for &a in &parts.1 {
            for &b in &parts.1 {
                if a != b && self.edge(a, b) {
                    return None;
                }
            }
        }
        Some(parts)
    }
}

/// The distance classification around a base line (q = 4): the 25 adjacent
/// lines, the 130 lines at distance 2 split by how many of the six
/// distance-3 lines they meet, and the six themselves.
#[derive(Clone, Debug)]
pub struct Stratification {
    pub base: LineId,
    /// Lines adjacent to the base (distance 1); size 25.
    pub adjacent: Vec<LineId>,
    /// The six lines at distance 3.
    pub six: Vec<LineId>,
    /// Distance-2 lines meeting exactly three of the six; size 20.
    pub x3: Vec<LineId>,
    /// Distance-2 lines meeting exactly one of the six; size 90.
    pub x1: Vec<LineId>,
    /// Distance-2 lines disjoint from all six; size 20.
    pub x0: Vec<LineId>,
    /// For each distance-2 line, the number of the six it meets.
    pub n_values: BTreeMap<LineId, u8>,
}

impl Stratification {
    /// Class label for rendering: base/adjacent/x3/x1/x0/six.
    pub fn class_of(&self, v: LineId) -> &'static str {
        if v == self.base {
            "base"
        } else if self.adjacent.binary_search(&v).is_ok() {
            "adjacent"
        } else if self.six.binary_search(&v).is_ok() {
            "six"
        } else if self.x3.binary_search(&v).is_ok() {
            "x3"
        } else if self.x1.binary_search(&v).is_ok() {
            "x1"
        } else {
            "x0"
        }
    }
}

fn expect_count(what: &str, expected: u64, actual: u64) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::CountMismatch {
            what: what.into(),
            expected,
            actual,
        })
    }
}

/// Classifies every line by distance from `base` and, at distance 2, by the
/// number of distance-3 lines it meets. Any deviation from the expected
/// q = 4 counts (25 / 20+90+20 / 6) is a hard error.
pub fn stratify(g: &SimplexGraph, base: LineId) -> Result<Stratification> {
    if base as usize >= g.vertex_count() {
        return Err(Error::NoSuchLine(base));
    }
    let dist = g.bfs_distances(base);
    let mut adjacent = Vec::new();
    let mut two = Vec::new();
    let mut six = Vec::new();
    for (v, &d) in dist.iter().enumerate() {
        match d {
            0 => {}
            1 => adjacent.push(v as LineId),
            2 => two.push(v as LineId),
            3 => six.push(v as LineId),
            _ => {
                return Err(Error::CountMismatch {
                    what: format!("distance of line {v} from {base}"),
                    expected: 3,
                    actual: d as u64,
                })
            }
        }
    }
    expect_count("lines adjacent to the base", 25, adjacent.len() as u64)?;
    expect_count("lines at distance 2", 130, two.len() as u64)?;
    expect_count("lines at distance 3", 6, six.len() as u64)?;

    let mut x3 = Vec::new();
    let mut x1 = Vec::new();
    let mut x0 = Vec::new();
    let mut n_values = BTreeMap::new();
    for &v in &two {
        let n = six.iter().filter(|&&s| g.edge(v, s)).count() as u8;
        n_values.insert(v, n);
        match n {
            3 => x3.push(v),
            1 => x1.push(v),
            0 => x0.push(v),
            other => {
                return Err(Error::CountMismatch {
                    what: format!("six-lines met by distance-2 line {v}"),
                    expected: 3,
                    actual: other as u64,
                })
            }
        }
    }
    expect_count("distance-2 lines meeting three of the six", 20, x3.len() as u64)?;
    expect_count("distance-2 lines meeting one of the six", 90, x1.len() as u64)?;
    expect_count("distance-2 lines meeting none of the six", 20, x0.len() as u64)?;
    Ok(Stratification {
        base,
        adjacent,
        six,
        x3,
        x1,
        x0,
        n_values,
    })
}

/// Whether every maximal clique is a point-star: no three mutually adjacent
/// lines with three distinct pairwise intersection points, and the lines
/// through any point are pairwise adjacent.
pub fn verify_clique_structure(g: &SimplexGraph, u: &SimplexUniverse) -> bool {
    for &p in u.simplex_points() {
        let star = u.lines_through(p);
        for (i, &a) in star.iter().enumerate() {
            for &b in &star[i + 1..] {
                if !g.edge(a, b) {
                    return false;
                }
            }
        }
    }
    for a in 0..g.vertex_count() as LineId {
        for b in g.neighbors(a) {
            if b <= a {
                continue;
            }
            for c in g.common_neighbors(a, b) {
                if c <= b {
                    continue;
                }
                if triangle_intersections(u, a, b, c).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// For a triangle of pairwise adjacent lines, returns its three pairwise
/// intersection points when they are mutually distinct (the star-violating
/// configuration), or None when the triangle has a common point.
pub fn triangle_intersections(
    u: &SimplexUniverse,
    a: LineId,
    b: LineId,
    c: LineId,
) -> Option<[PointId; 3]> {
    let la = u.line(a).ok()?;
    let lb = u.line(b).ok()?;
    let lc = u.line(c).ok()?;
    let ab = *la.common_points(lb).first()?;
    let ac = *la.common_points(lc).first()?;
    let bc = *lb.common_points(lc).first()?;
    if ab != ac && ab != bc && ac != bc {
        Some([ab, ac, bc])
    } else {
        None
    }
}

/// Whether the given lines are pairwise disjoint and cover every simplex
/// point exactly once.
pub fn verify_spread(u: &SimplexUniverse, lines: &[LineId]) -> bool {
    let mut covered = vec![false; u.space().point_count()];
    let mut total = 0usize;
    for &lid in lines {
        let Ok(line) = u.line(lid) else {
            return false;
        };
        for &p in line.point_ids() {
            if covered[p as usize] {
                return false; // two of the lines meet
            }
            covered[p as usize] = true;
            total += 1;
        }
    }
    total == u.simplex_point_count()
        && u.simplex_points().iter().all(|&p| covered[p as usize])
}

/// For each pair of the (pairwise disjoint) given lines, checks that the
/// 4-dimensional subspace they span contains none of the other lines.
pub fn verify_spanned_hyperplanes(u: &SimplexUniverse, lines: &[LineId]) -> Result<bool> {
    let f = u.field();
    for (i, &a) in lines.iter().enumerate() {
        for &b in lines.iter().skip(i + 1) {
            let la = u.line(a)?;
            let lb = u.line(b)?;
            let mut span = Vec::with_capacity(4);
            span.extend_from_slice(&la.basis());
            span.extend_from_slice(&lb.basis());
            if crate::projective::rank(f, &span) != 4 {
                return Ok(false); // not disjoint
            }
            for &c in lines {
                if c == a || c == b {
                    continue;
                }
                let lc = u.line(c)?;
                if lc
                    .basis()
                    .iter()
                    .all(|&v| crate::projective::in_span(f, &span, v))
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// How a line meets a hyperplane.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Section {
    Point(PointId),
    Contained,
}

/// The intersection of a line with a hyperplane: either a single point or
/// the whole line (dimension counting rules out emptiness for n = q+1 ≥ 3).
pub fn line_hyperplane_section(
    u: &SimplexUniverse,
    line: LineId,
    h: &Hyperplane,
) -> Result<Section> {
    let f = u.field();
    let l = u.line(line)?;
    let mut hits = Vec::new();
    for &p in l.point_ids() {
        if h.contains_vector(f, u.space().points()[p as usize].rep()) {
            hits.push(p);
        }
    }
    match hits.len() {
        1 => Ok(Section::Point(hits[0])),
        k if k == l.point_ids().len() => Ok(Section::Contained),
        _ => Err(Error::CountMismatch {
            what: format!("points of line {line} on a hyperplane"),
            expected: 1,
            actual: hits.len() as u64,
        }),
    }
}

/// The base line's geometry: its points ordered by zero coordinate and their
/// adjacency hyperplanes.
pub struct BaseFrame {
    pub base: LineId,
    /// Entry i is the base point with zero at coordinate i.
    pub points: Vec<PointId>,
    /// Entry i is the adjacency hyperplane of `points[i]`.
    pub hyperplanes: Vec<Hyperplane>,
}

impl BaseFrame {
    pub fn new(u: &SimplexUniverse, base: LineId) -> Result<Self> {
        let points = u.line_points_by_zero(base)?;
        let hyperplanes = points
            .iter()
            .map(|&p| u.adjacency_hyperplane(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(BaseFrame {
            base,
            points,
            hyperplanes,
        })
    }

    /// The distance-3 criterion: the line meets every adjacency hyperplane
    /// H_i in a single point that lies in the coordinate hyperplane x_i = 0
    /// and differs from the base point there.
    pub fn distance3_criterion(&self, u: &SimplexUniverse, line: LineId) -> Result<bool> {
        for (i, h) in self.hyperplanes.iter().enumerate() {
            match line_hyperplane_section(u, line, h)? {
                Section::Contained => return Ok(false),
                Section::Point(p) => {
                    let rep = u.space().points()[p as usize].rep();
                    if !rep.get(i).is_zero() || p == self.points[i] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// For a line disjoint from the base: its intersection points with the
    /// hyperplanes H_1..H_n (each a single point by the non-adjacency), and
    /// the count of indices i where that point lies in x_i = 0.
    pub fn hyperplane_profile(
        &self,
        u: &SimplexUniverse,
        line: LineId,
    ) -> Result<(Vec<PointId>, u8)> {
        let mut pts = Vec::with_capacity(self.hyperplanes.len());
        let mut n = 0u8;
        for (i, h) in self.hyperplanes.iter().enumerate() {
            match line_hyperplane_section(u, line, h)? {
                Section::Contained => {
                    return Err(Error::CountMismatch {
                        what: format!("line {line} inside an adjacency hyperplane"),
                        expected: 1,
                        actual: u.q() as u64 + 1,
                    })
                }
                Section::Point(p) => {
                    if u.space().points()[p as usize].rep().get(i).is_zero() {
                        n += 1;
                    }
                    pts.push(p);
                }
            }
        }
        Ok((pts, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::GfVector;
    use std::collections::BTreeSet;
    use std::sync::LazyLock;

    static U3: LazyLock<(SimplexUniverse, SimplexGraph)> = LazyLock::new(|| {
        let u = SimplexUniverse::for_order(3).unwrap();
        let g = SimplexGraph::build(&u);
        (u, g)
    });
    static U4: LazyLock<(SimplexUniverse, SimplexGraph)> = LazyLock::new(|| {
        let u = SimplexUniverse::for_order(4).unwrap();
        let g = SimplexGraph::build(&u);
        (u, g)
    });

    fn base_line(u: &SimplexUniverse) -> LineId {
        let a = u
            .space()
            .point_id(GfVector::parse("01111", u.field()).unwrap())
            .unwrap();
        let b = u
            .space()
            .point_id(GfVector::parse("101ab", u.field()).unwrap())
            .unwrap();
        u.line_id(u.space().span_line(a, b).unwrap().point_ids())
            .unwrap()
    }

    #[test]
    fn q4_graph_shape() {
        let (u, g) = &*U4;
        assert_eq!(g.vertex_count(), 162);
        assert!(g.degrees().iter().all(|&d| d == 25));
        assert_eq!(g.edge_count(), 162 * 25 / 2);
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(u.line_count(), 162);
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let (_, g) = &*U4;
        for a in 0..g.vertex_count() as LineId {
            assert!(!g.edge(a, a));
            for b in g.neighbors(a) {
                assert!(g.edge(b, a));
            }
        }
    }

    #[test]
    fn q3_graph_is_k44() {
        let (_, g) = &*U3;
        assert_eq!(g.vertex_count(), 8);
        assert!(g.degrees().iter().all(|&d| d == 4));
        let (a, b) = g.complete_bipartition().expect("grid graph");
        assert_eq!(a.len(), 4);
        assert_eq!(b.len(), 4);
        // Bipartite graphs have no triangles, so the star property is vacuous.
        let (u, g) = &*U3;
        assert!(verify_clique_structure(g, u));
    }

    #[test]
    fn stratification_of_the_reference_base() {
        let (u, g) = &*U4;
        let base = base_line(u);
        let s = stratify(g, base).unwrap();
        assert_eq!(s.adjacent.len(), 25);
        assert_eq!(s.six.len(), 6);
        assert_eq!(s.x3.len(), 20);
        assert_eq!(s.x1.len(), 90);
        assert_eq!(s.x0.len(), 20);
        // the strata partition the vertex set
        let mut all: Vec<LineId> = vec![base];
        all.extend_from_slice(&s.adjacent);
        all.extend_from_slice(&s.six);
        all.extend_from_slice(&s.x3);
        all.extend_from_slice(&s.x1);
        all.extend_from_slice(&s.x0);
        all.sort_unstable();
        assert_eq!(all, (0..162).collect::<Vec<_>>());
        for (&l, &n) in &s.n_values {
            let count = s.six.iter().filter(|&&sx| g.edge(l, sx)).count() as u8;
            assert_eq!(count, n);
            assert!(matches!(n, 0 | 1 | 3));
        }
    }

    #[test]
    fn stratification_is_base_independent() {
        let (_, g) = &*U4;
        for base in 0..162 as LineId {
            let s = stratify(g, base).expect("counts must match for every base");
            assert_eq!(
                (s.adjacent.len(), s.x3.len(), s.x1.len(), s.x0.len(), s.six.len()),
                (25, 20, 90, 20, 6)
            );
        }
    }

    #[test]
    fn spread_from_the_stratification() {
        let (u, g) = &*U4;
        let base = base_line(u);
        let s = stratify(g, base).unwrap();
        let mut spread = vec![base];
        spread.extend_from_slice(&s.six);
        spread.extend_from_slice(&s.x0);
        assert_eq!(spread.len(), 27);
        assert!(verify_spread(u, &spread));
        // x3 members meet the six, so swapping them in breaks the spread.
        let mut not_spread = vec![base];
        not_spread.extend_from_slice(&s.six);
        not_spread.extend_from_slice(&s.x3);
        assert!(!verify_spread(u, &not_spread));
    }

    #[test]
    fn six_lines_span_no_third(){
        let (u, g) = &*U4;
        let s = stratify(g, base_line(u)).unwrap();
        // sanity: disjoint pairs span a hyperplane (rank 4), base lines included
        assert!(verify_spanned_hyperplanes(u, &s.six).unwrap());
    }

    #[test]
    fn clique_structure_q4() {
        let (u, g) = &*U4;
        assert!(verify_clique_structure(g, u));
    }

    #[test]
    fn distance3_hyperplane_criterion_matches_bfs() {
        let (u, g) = &*U4;
        let base = base_line(u);
        let frame = BaseFrame::new(u, base).unwrap();
        let dist = g.bfs_distances(base);
        for v in 0..162 as LineId {
            if v == base {
                continue;
            }
            let criterion = frame.distance3_criterion(u, v).unwrap();
            assert_eq!(criterion, dist[v as usize] >= 3, "line {v}");
        }
    }

    #[test]
    fn nonadjacent_lines_meet_hyperplanes_in_distinct_points() {
        let (u, g) = &*U4;
        let base = base_line(u);
        let frame = BaseFrame::new(u, base).unwrap();
        let dist = g.bfs_distances(base);
        for v in 0..162 as LineId {
            if dist[v as usize] < 2 {
                continue;
            }
            let (pts, n) = frame.hyperplane_profile(u, v).unwrap();
            let distinct: BTreeSet<PointId> = pts.iter().copied().collect();
            assert_eq!(distinct.len(), 5, "line {v}");
            // base points never appear on a disjoint line
            assert!(pts.iter().all(|p| !frame.points.contains(p)));
            if dist[v as usize] == 2 {
                assert!(matches!(n, 0 | 1 | 3));
            } else {
                assert_eq!(n, 5);
            }
        }
    }

    /// Each of the 30 off-base points in the hyperplane sections lies on
    /// exactly one of the six distance-3 lines.
    #[test]
    fn hyperplane_section_points_lie_on_unique_six_line() {
        let (u, g) = &*U4;
        let base = base_line(u);
        let frame = BaseFrame::new(u, base).unwrap();
        let s = stratify(g, base).unwrap();
        let mut section_points = BTreeSet::new();
        for (i, h) in frame.hyperplanes.iter().enumerate() {
            for &p in u.simplex_points() {
                let rep = u.space().points()[p as usize].rep();
                if p != frame.points[i]
                    && rep.get(i).is_zero()
                    && h.contains_vector(u.field(), rep)
                {
                    section_points.insert(p);
                }
            }
        }
        assert_eq!(section_points.len(), 30);
        for p in section_points {
            let on_six = s
                .six
                .iter()
                .filter(|&&l| u.line(l).unwrap().contains(p))
                .count();
            assert_eq!(on_six, 1, "point {p}");
        }
    }

    /// For every triple of the six there is exactly one transversal simplex
    /// line, and the 20 transversals are exactly the x3 stratum.
    #[test]
    fn unique_transversal_per_triple() {
        let (u, g) = &*U4;
        let s = stratify(g, base_line(u)).unwrap();
        let mut transversals = BTreeSet::new();
        let mut triples = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    triples += 1;
                    let hits: Vec<LineId> = (0..162 as LineId)
                        .filter(|&l| !s.six.contains(&l))
                        .filter(|&l| {
                            [s.six[i], s.six[j], s.six[k]]
                                .iter()
                                .all(|&sx| g.edge(l, sx))
                        })
                        .collect();
                    assert_eq!(hits.len(), 1, "triple ({i},{j},{k})");
                    transversals.insert(hits[0]);
                }
            }
        }
        assert_eq!(triples, 20);
        let x3: BTreeSet<LineId> = s.x3.iter().copied().collect();
        assert_eq!(transversals, x3);
    }

    #[test]
    fn stratify_rejects_unknown_base() {
        let (_, g) = &*U4;
        assert!(stratify(g, 500).is_err());
    }
}
