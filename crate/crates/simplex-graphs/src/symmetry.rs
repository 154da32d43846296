//! Monomial semilinear automorphisms, their projective actions, line
//! stabilizers, and orbit decompositions.
//!
//! A [`MonomialMap`] sends e_i to `scalars[i]`·e_{σ(i)} after first applying
//! the field automorphism x ↦ x^(p^frob) to every coordinate; that is, for a
//! vector v the image has `out[σ(i)] = scalars[i] · v[i]^(p^frob)`. The
//! composition order is fixed as "Frobenius, then scale, then permute", and
//! `compose`/`apply` consistency is enforced by tests. Two maps induce the
//! same transformation of the projective space exactly when one is a global
//! scalar multiple of the other; [`ProjectiveMap`] canonicalizes by dividing
//! all scalars by the scalar applied to e_1's image, making projective
//! actions hashable values.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::field::{FieldTable, GfElem};
use crate::projective::{GfVector, MAX_N};
use crate::simplex::SimplexUniverse;
use crate::{Error, LineId, PointId, Result};

/// A permutation of {0, …, n−1}; `map[i]` is the image of i.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    n: u8,
    map: [u8; MAX_N],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N);
        let mut map = [0u8; MAX_N];
        for (i, slot) in map.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Permutation { n: n as u8, map }
    }

    /// Builds a permutation from images: `images[i]` is the image of i.
    pub fn from_images(images: &[usize]) -> Self {
        assert!(images.len() <= MAX_N);
        let mut seen = [false; MAX_N];
        let mut map = [0u8; MAX_N];
        for (i, &img) in images.iter().enumerate() {
            assert!(img < images.len() && !seen[img], "not a permutation");
            seen[img] = true;
            map[i] = img as u8;
        }
        for (i, slot) in map.iter_mut().enumerate().skip(images.len()) {
            *slot = i as u8;
        }
        Permutation {
            n: images.len() as u8,
            map,
        }
    }

    /// Builds a permutation of {0, …, n−1} from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut p = Permutation::identity(n);
        for cycle in cycles {
            for w in 0..cycle.len() {
                p.map[cycle[w]] = cycle[(w + 1) % cycle.len()] as u8;
            }
        }
        p
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n, other.n);
        let mut map = [0u8; MAX_N];
        for (i, slot) in map.iter_mut().enumerate() {
            *slot = if i < self.len() {
                self.map[other.map[i] as usize]
            } else {
                i as u8
            };
        }
        Permutation { n: self.n, map }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = [0u8; MAX_N];
        for i in 0..MAX_N {
            map[self.map[i] as usize] = i as u8;
        }
        Permutation { n: self.n, map }
    }

    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.map[i] > self.map[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    /// 1-indexed image list, e.g. `(2,1,3,5,4)`.
    pub fn text(&self) -> String {
        let images: Vec<String> = (0..self.len())
            .map(|i| (self.apply(i) + 1).to_string())
            .collect();
        format!("({})", images.join(","))
    }
}

/// A monomial semilinear automorphism of GF(q)^n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialMap {
    n: u8,
    frob: u8,
    perm: Permutation,
    scalars: [u8; MAX_N],
}

impl MonomialMap {
    /// `scalars[i]` is the factor applied to e_i's image; all must be nonzero.
    pub fn new(perm: Permutation, scalars: &[GfElem], frob: usize) -> Result<Self> {
        if scalars.iter().any(|s| s.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let mut sc = [1u8; MAX_N];
        for (i, &s) in scalars.iter().enumerate() {
            sc[i] = s.0;
        }
        Ok(MonomialMap {
            n: perm.len() as u8,
            frob: frob as u8,
            perm,
            scalars: sc,
        })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            n: n as u8,
            frob: 0,
            perm: Permutation::identity(n),
            scalars: [1; MAX_N],
        }
    }

    /// The linear map d(a_1..a_n)·p_σ: first permute e_i to e_{σ(i)}, then
    /// scale coordinate j by a_j. In the internal convention this means
    /// `scalars[i] = a_{σ(i)}`.
    pub fn diag_perm(diag: &[GfElem], perm: Permutation) -> Result<Self> {
        let scalars: Vec<GfElem> = (0..perm.len()).map(|i| diag[perm.apply(i)]).collect();
        MonomialMap::new(perm, &scalars, 0)
    }

    /// A coordinate-permutation map p_σ.
    pub fn permutation(n: usize, perm: Permutation) -> Self {
        MonomialMap {
            n: n as u8,
            frob: 0,
            perm,
            scalars: [1; MAX_N],
        }
    }

    /// Builds the map from its output formula: `out[j] = coeffs[j] ·
    /// φ^frob(v[source[j]])`, the way explicit images are usually written.
    pub fn from_output_form(coeffs: &[GfElem], source: &[usize], frob: usize) -> Result<Self> {
        let n = coeffs.len();
        let perm = Permutation::from_images(source).inverse();
        let scalars: Vec<GfElem> = (0..n).map(|i| coeffs[perm.apply(i)]).collect();
        MonomialMap::new(perm, &scalars, frob)
    }

    pub fn with_frobenius(mut self, frob: usize) -> Self {
        self.frob = frob as u8;
        self
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn frob(&self) -> usize {
        self.frob as usize
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn scalar(&self, i: usize) -> GfElem {
        GfElem(self.scalars[i])
    }

    pub fn is_linear(&self) -> bool {
        self.frob == 0
    }

    pub fn apply(&self, f: &FieldTable, v: GfVector) -> GfVector {
        debug_assert_eq!(v.len(), self.n());
        let mut out = GfVector::zero(self.n());
        for i in 0..self.n() {
            let x = f.frobenius(v.get(i), self.frob as usize);
            out.set(self.perm.apply(i), f.mul(GfElem(self.scalars[i]), x));
        }
        out
    }

    /// self ∘ other: apply `other` first, so that
    /// `compose(a, b).apply(v) == a.apply(b.apply(v))`.
    pub fn compose(&self, f: &FieldTable, other: &MonomialMap) -> MonomialMap {
        debug_assert_eq!(self.n, other.n);
        let m = f.degree();
        let perm = self.perm.compose(&other.perm);
        let frob = (self.frob as usize + other.frob as usize) % m;
        let mut scalars = [1u8; MAX_N];
        for (i, slot) in scalars.iter_mut().enumerate().take(self.n()) {
            let s_other = f.frobenius(GfElem(other.scalars[i]), self.frob as usize);
            let s_self = GfElem(self.scalars[other.perm.apply(i)]);
            *slot = f.mul(s_self, s_other).0;
        }
        MonomialMap {
            n: self.n,
            frob: frob as u8,
            perm,
            scalars,
        }
    }

    pub fn inverse(&self, f: &FieldTable) -> MonomialMap {
        let m = f.degree();
        let perm = self.perm.inverse();
        let frob = (m - self.frob as usize) % m;
        let mut scalars = [1u8; MAX_N];
        for (j, slot) in scalars.iter_mut().enumerate().take(self.n()) {
            let s = GfElem(self.scalars[perm.apply(j)]);
            let inv = f.inv(s).expect("scalars are nonzero");
            *slot = f.frobenius(inv, frob).0;
        }
        MonomialMap {
            n: self.n,
            frob: frob as u8,
            perm,
            scalars,
        }
    }

    /// Report form: `frob=j; perm=(...); scalars=[...]`.
    pub fn text(&self, f: &FieldTable) -> String {
        let mut s = String::new();
        write!(s, "frob={}; perm={}; scalars=[", self.frob, self.perm.text()).unwrap();
        for i in 0..self.n() {
            if i > 0 {
                s.push(',');
            }
            s.push(f.symbol(GfElem(self.scalars[i])));
        }
        s.push(']');
        s
    }
}

/// A monomial semilinear map up to global nonzero scalars: the induced
/// transformation of the projective space. Canonical form has `scalars[0]` = 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjectiveMap(MonomialMap);

impl ProjectiveMap {
    pub fn from_monomial(f: &FieldTable, m: &MonomialMap) -> Self {
        let lead = f.inv(GfElem(m.scalars[0])).expect("scalars are nonzero");
        let mut canon = *m;
        for i in 0..m.n() {
            canon.scalars[i] = f.mul(GfElem(m.scalars[i]), lead).0;
        }
        ProjectiveMap(canon)
    }

    pub fn representative(&self) -> &MonomialMap {
        &self.0
    }

    pub fn is_linear(&self) -> bool {
        self.0.is_linear()
    }

    pub fn apply_to_point(&self, u: &SimplexUniverse, p: PointId) -> Result<PointId> {
        let rep = u.space().point(p)?.rep();
        u.space().point_id(self.0.apply(u.field(), rep))
    }

    pub fn apply_to_line(&self, u: &SimplexUniverse, line: LineId) -> Result<LineId> {
        let l = u.line(line)?;
        let mut ids: Vec<PointId> = l
            .point_ids()
            .iter()
            .map(|&p| self.apply_to_point(u, p))
            .collect::<Result<_>>()?;
        ids.sort_unstable();
        u.line_id(&ids)
            .ok_or_else(|| Error::ActionNotWellDefined(format!("image of line {line} is not simplex")))
    }

    pub fn compose(&self, f: &FieldTable, other: &ProjectiveMap) -> ProjectiveMap {
        ProjectiveMap::from_monomial(f, &self.0.compose(f, &other.0))
    }

    pub fn inverse(&self, f: &FieldTable) -> ProjectiveMap {
        ProjectiveMap::from_monomial(f, &self.0.inverse(f))
    }

    pub fn text(&self, f: &FieldTable) -> String {
        self.0.text(f)
    }
}

/// All n!·(q−1)^n·m monomial semilinear automorphisms, in a deterministic
/// order (permutations lexicographic, then scalar tuples, then Frobenius
/// exponents). Guarded against orders too large to enumerate.
pub fn enumerate_monomial_maps(f: &FieldTable, n: usize) -> Result<Vec<MonomialMap>> {
    let q = f.q();
    let m = f.degree();
    let factorial: u64 = (1..=n as u64).product();
    let size = factorial * (q as u64 - 1).pow(n as u32) * m as u64;
    const LIMIT: u64 = 10_000_000;
    if size > LIMIT {
        return Err(Error::EnumerationTooLarge {
            what: format!("monomial semilinear group of GF({q})^{n}"),
            size,
            limit: LIMIT,
        });
    }
    let mut maps = Vec::new();
    for perm in all_permutations(n) {
        // scalar tuples over the nonzero elements, odometer order
        let mut scalars = vec![GfElem::ONE; n];
        loop {
            for frob in 0..m {
                maps.push(MonomialMap::new(perm, &scalars, frob).unwrap());
            }
            let mut i = n;
            while i > 0 && scalars[i - 1].0 as usize == q - 1 {
                scalars[i - 1] = GfElem::ONE;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            scalars[i - 1] = GfElem(scalars[i - 1].0 + 1);
        }
    }
    Ok(maps)
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::from_images(&images)];
    // lexicographic next-permutation
    while let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) {
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
        out.push(Permutation::from_images(&images));
    }
    out
}

/// The induced group of projective transformations: monomial maps modulo
/// global scalars, deduplicated and sorted. Its size is n!·(q−1)^(n−1)·m.
pub fn projective_monomial_group(f: &FieldTable, n: usize) -> Result<Vec<ProjectiveMap>> {
    let mut group: Vec<ProjectiveMap> = enumerate_monomial_maps(f, n)?
        .iter()
        .map(|m| ProjectiveMap::from_monomial(f, m))
        .collect();
    group.sort_unstable();
    group.dedup();
    Ok(group)
}

/// Elements of `group` that fix the given line setwise.
pub fn stabilizer_of_line(
    u: &SimplexUniverse,
    group: &[ProjectiveMap],
    line: LineId,
) -> Result<Vec<ProjectiveMap>> {
    let mut out = Vec::new();
    for g in group {
        if g.apply_to_line(u, line)? == line {
            out.push(*g);
        }
    }
    Ok(out)
}

/// Elements of `group` preserving the given set of lines (as a set).
pub fn setwise_stabilizer(
    u: &SimplexUniverse,
    group: &[ProjectiveMap],
    lines: &[LineId],
) -> Result<Vec<ProjectiveMap>> {
    let set: HashSet<LineId> = lines.iter().copied().collect();
    let mut out = Vec::new();
    for g in group {
        let mut ok = true;
        for &l in lines {
            if !set.contains(&g.apply_to_line(u, l)?) {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(*g);
        }
    }
    Ok(out)
}

/// A group acting on all simplex lines of a universe through a full
/// element × line table. Rows are verified to be permutations.
pub struct LineAction {
    elements: Vec<ProjectiveMap>,
    table: Vec<Vec<LineId>>,
}

impl LineAction {
    pub fn build(u: &SimplexUniverse, elements: Vec<ProjectiveMap>) -> Result<Self> {
        let n_lines = u.line_count();
        let mut table = Vec::with_capacity(elements.len());
        for g in &elements {
            // point images once per element, line images from them
            let mut point_image: HashMap<PointId, PointId> = HashMap::new();
            for &p in u.simplex_points() {
                point_image.insert(p, g.apply_to_point(u, p)?);
            }
            let mut row = Vec::with_capacity(n_lines);
            let mut seen = vec![false; n_lines];
            for line in 0..n_lines as LineId {
                let mut ids: Vec<PointId> = u
                    .line(line)?
                    .point_ids()
                    .iter()
                    .map(|p| point_image[p])
                    .collect();
                ids.sort_unstable();
                let image = u.line_id(&ids).ok_or_else(|| {
                    Error::ActionNotWellDefined(format!("image of line {line} is not simplex"))
                })?;
                if seen[image as usize] {
                    return Err(Error::ActionNotWellDefined(format!(
                        "two lines map to {image}"
                    )));
                }
                seen[image as usize] = true;
                row.push(image);
            }
            table.push(row);
        }
        Ok(LineAction { elements, table })
    }

    pub fn elements(&self) -> &[ProjectiveMap] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn image(&self, element: usize, line: LineId) -> LineId {
        self.table[element][line as usize]
    }

    /// Orbit partition of the full line set: each orbit sorted, orbits
    /// ordered by their minimum.
    pub fn orbits(&self) -> Vec<Vec<LineId>> {
        let n = self.table.first().map_or(0, Vec::len);
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], x: u32) -> u32 {
            let mut root = x;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut cur = x;
            while parent[cur as usize] != root {
                let next = parent[cur as usize];
                parent[cur as usize] = root;
                cur = next;
            }
            root
        }
        for row in &self.table {
            for (line, &image) in row.iter().enumerate() {
                let a = find(&mut parent, line as u32);
                let b = find(&mut parent, image);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let mut buckets: std::collections::BTreeMap<u32, Vec<LineId>> = Default::default();
        for line in 0..n as u32 {
            buckets.entry(find(&mut parent, line)).or_default().push(line);
        }
        buckets.into_values().collect()
    }

    /// The orbit of one line.
    pub fn orbit_of(&self, line: LineId) -> Vec<LineId> {
        let mut orbit: HashSet<LineId> = HashSet::from([line]);
        let mut frontier = vec![line];
        while let Some(l) = frontier.pop() {
            for row in &self.table {
                let img = row[l as usize];
                if orbit.insert(img) {
                    frontier.push(img);
                }
            }
        }
        let mut orbit: Vec<LineId> = orbit.into_iter().collect();
        orbit.sort_unstable();
        orbit
    }

    /// Indices of elements fixing the line.
    pub fn stabilizer_indices(&self, line: LineId) -> Vec<usize> {
        (0..self.order())
            .filter(|&e| self.image(e, line) == line)
            .collect()
    }
}

/// Whether the action is sharply 3-transitive on the given lines: one orbit
/// on ordered triples of distinct elements, with trivial triple stabilizer.
/// For |set| = 6 this forces exactly 120 = 6·5·4 group elements.
pub fn is_sharply_3_transitive(action: &LineAction, set: &[LineId]) -> bool {
    if set.len() < 3 {
        return false;
    }
    let members: HashSet<LineId> = set.iter().copied().collect();
    let base = (set[0], set[1], set[2]);
    let mut images = HashSet::new();
    let mut fixers = 0;
    for e in 0..action.order() {
        let triple = (
            action.image(e, base.0),
            action.image(e, base.1),
            action.image(e, base.2),
        );
        if !members.contains(&triple.0)
            || !members.contains(&triple.1)
            || !members.contains(&triple.2)
        {
            return false; // the set is not even invariant
        }
        if triple == base {
            fixers += 1;
        }
        images.insert(triple);
    }
    let n = set.len();
    images.len() == n * (n - 1) * (n - 2) && fixers == 1 && action.order() == images.len()
}

/// The permutation a group element induces on a line's points, with the
/// points ordered by their zero coordinate.
pub fn induced_point_permutation(
    u: &SimplexUniverse,
    g: &ProjectiveMap,
    line: LineId,
) -> Result<Permutation> {
    let points = u.line_points_by_zero(line)?;
    let mut images = Vec::with_capacity(points.len());
    for &p in &points {
        let img = g.apply_to_point(u, p)?;
        let pos = points
            .iter()
            .position(|&x| x == img)
            .ok_or_else(|| Error::ActionNotWellDefined(format!("point {p} leaves line {line}")))?;
        images.push(pos);
    }
    Ok(Permutation::from_images(&images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;
    use std::sync::LazyLock;

    static U4: LazyLock<SimplexUniverse> = LazyLock::new(|| SimplexUniverse::for_order(4).unwrap());

    fn gf4() -> FieldTable {
        FieldTable::new(2, 2).unwrap()
    }

    fn v(s: &str) -> GfVector {
        GfVector::parse(s, &gf4()).unwrap()
    }

    const A: GfElem = GfElem(2); // α
    const B: GfElem = GfElem(3); // α²
    const ONE: GfElem = GfElem::ONE;

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_cycles(5, &[&[2, 3, 4]]);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.apply(4), 2);
        assert_eq!(p.apply(0), 0);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(5));
        assert!(p.is_even());
        assert!(!Permutation::from_cycles(5, &[&[0, 1]]).is_even());
        assert_eq!(Permutation::from_cycles(3, &[&[0, 1]]).text(), "(2,1,3)");
    }

    #[test]
    fn identity_map_fixes_vectors() {
        let f = gf4();
        let id = MonomialMap::identity(5);
        let x = v("1ab01");
        assert_eq!(id.apply(&f, x), x);
    }

    /// The semilinear map sending (x₁,…,x₅) to (x₁²,x₂²,x₃²,x₅²,x₄²)
    /// transposes coordinates 4 and 5 after squaring.
    #[test]
    fn frobenius_swap_map_formula() {
        let f = gf4();
        let w = MonomialMap::permutation(5, Permutation::from_cycles(5, &[&[3, 4]]))
            .with_frobenius(1);
        let x = GfVector::new(&[ONE, A, B, A, ONE]);
        // squares: (1, α², α, α², 1), then swap the last two
        assert_eq!(w.apply(&f, x), GfVector::new(&[ONE, B, A, ONE, B]));

        // Same map written through its output formula.
        let w2 = MonomialMap::from_output_form(
            &[ONE; 5],
            &[0, 1, 2, 4, 3],
            1,
        )
        .unwrap();
        assert_eq!(w, w2);
    }

    /// d(α²,1,1,1,1)·p_(3,4,5) fixes the first two reference points, so it
    /// preserves the reference line.
    #[test]
    fn diag_perm_convention() {
        let f = gf4();
        let u = MonomialMap::diag_perm(
            &[B, ONE, ONE, ONE, ONE],
            Permutation::from_cycles(5, &[&[2, 3, 4]]),
        )
        .unwrap();
        let p1 = v("01111");
        let p2 = v("101ab");
        assert_eq!(u.apply(&f, p1), p1);
        // image of P₂ is α²·P₂
        let img = u.apply(&f, p2);
        let pp = crate::projective::ProjPoint::normalize(&f, img).unwrap();
        assert_eq!(pp.rep(), p2);
    }

    #[test]
    fn compose_and_apply_are_consistent() {
        let f = gf4();
        let maps = [
            MonomialMap::diag_perm(&[B, ONE, A, ONE, B], Permutation::from_cycles(5, &[&[0, 2], &[1, 3, 4]])).unwrap().with_frobenius(1),
            MonomialMap::diag_perm(&[ONE, A, A, B, ONE], Permutation::from_cycles(5, &[&[1, 4]])).unwrap(),
            MonomialMap::permutation(5, Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]])).with_frobenius(1),
        ];
        let vectors = [v("1ab01"), v("01111"), v("b0a1b"), v("11111")];
        for m1 in &maps {
            for m2 in &maps {
                let c = m1.compose(&f, m2);
                for &x in &vectors {
                    assert_eq!(c.apply(&f, x), m1.apply(&f, m2.apply(&f, x)));
                }
            }
        }
        for m in &maps {
            let inv = m.inverse(&f);
            assert_eq!(m.compose(&f, &inv), MonomialMap::identity(5));
            assert_eq!(inv.compose(&f, m), MonomialMap::identity(5));
        }
    }

    proptest! {
        /// compose/apply consistency and inverse round-trips on random maps.
        #[test]
        fn monomial_map_algebra(
            perm1 in proptest::sample::select(all_permutations(5)),
            perm2 in proptest::sample::select(all_permutations(5)),
            s1 in proptest::collection::vec(1u8..4, 5),
            s2 in proptest::collection::vec(1u8..4, 5),
            f1 in 0usize..2,
            f2 in 0usize..2,
            coords in proptest::collection::vec(0u8..4, 5),
        ) {
            let f = gf4();
            let m1 = MonomialMap::new(perm1, &s1.iter().map(|&c| GfElem(c)).collect::<Vec<_>>(), f1).unwrap();
            let m2 = MonomialMap::new(perm2, &s2.iter().map(|&c| GfElem(c)).collect::<Vec<_>>(), f2).unwrap();
            let x = GfVector::from_codes(&coords);
            let c = m1.compose(&f, &m2);
            prop_assert_eq!(c.apply(&f, x), m1.apply(&f, m2.apply(&f, x)));
            let inv = m1.inverse(&f);
            prop_assert_eq!(inv.apply(&f, m1.apply(&f, x)), x);
            prop_assert_eq!(m1.compose(&f, &inv), MonomialMap::identity(5));
        }
    }

    #[test]
    fn permutation_maps_compose_as_permutations() {
        let f = gf4();
        let sigma = Permutation::from_cycles(5, &[&[0, 1, 2]]);
        let tau = Permutation::from_cycles(5, &[&[2, 4]]);
        let ps = MonomialMap::permutation(5, sigma);
        let pt = MonomialMap::permutation(5, tau);
        assert_eq!(
            ps.compose(&f, &pt),
            MonomialMap::permutation(5, sigma.compose(&tau))
        );
    }

    #[test]
    fn group_sizes() {
        let f = gf4();
        let maps = enumerate_monomial_maps(&f, 5).unwrap();
        assert_eq!(maps.len(), 58_320); // 5!·3⁵·2
        let distinct: BTreeSet<_> = maps.iter().copied().collect();
        assert_eq!(distinct.len(), maps.len());
        let group = projective_monomial_group(&f, 5).unwrap();
        assert_eq!(group.len(), 19_440); // quotient by the 3 global scalars

        let f3 = FieldTable::new(3, 1).unwrap();
        assert_eq!(enumerate_monomial_maps(&f3, 4).unwrap().len(), 384); // 4!·2⁴·1
        assert_eq!(projective_monomial_group(&f3, 4).unwrap().len(), 192);

        // linear maps make up one of the two Frobenius classes
        let linear = maps.iter().filter(|m| m.is_linear()).count();
        assert_eq!(linear * 2, maps.len());

        // size guard on hopeless enumerations
        let f25 = FieldTable::new(5, 2).unwrap();
        assert!(matches!(
            enumerate_monomial_maps(&f25, 8),
            Err(crate::Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn projectivization_identifies_scalar_multiples() {
        let f = gf4();
        let m = MonomialMap::diag_perm(&[A, B, ONE, A, ONE], Permutation::from_cycles(5, &[&[1, 2]]))
            .unwrap()
            .with_frobenius(1);
        for c in [A, B] {
            let scalars: Vec<GfElem> = (0..5).map(|i| f.mul(c, m.scalar(i))).collect();
            let scaled = MonomialMap::new(*m.perm(), &scalars, m.frob()).unwrap();
            assert_eq!(
                ProjectiveMap::from_monomial(&f, &m),
                ProjectiveMap::from_monomial(&f, &scaled)
            );
        }
    }

    fn pid(u: &SimplexUniverse, text: &str) -> PointId {
        u.space()
            .point_id(GfVector::parse(text, u.field()).unwrap())
            .unwrap()
    }

    fn lid(u: &SimplexUniverse, text: &str) -> LineId {
        u.parse_line(text).unwrap()
    }

    /// The two generators used for the non-adjacent points Q₁..Q₆ of the
    /// reference line induce the permutations (Q₁Q₂Q₃)(Q₄Q₅Q₆) and
    /// (Q₁Q₄)(Q₂Q₅).
    #[test]
    fn q_point_permutations() {
        let u = &*U4;
        let f = u.field();
        let base = lid(u, "01111|101ab|110ba|1ab01|1ba10");
        let qs: Vec<PointId> = ["011aa", "01a1a", "01aa1", "011bb", "01b1b", "01bb1"]
            .iter()
            .map(|t| pid(u, t))
            .collect();

        let g1 = ProjectiveMap::from_monomial(
            f,
            &MonomialMap::diag_perm(
                &[B, ONE, ONE, ONE, ONE],
                Permutation::from_cycles(5, &[&[2, 3, 4]]),
            )
            .unwrap(),
        );
        assert_eq!(g1.apply_to_line(u, base).unwrap(), base);
        let images: Vec<PointId> = qs.iter().map(|&q| g1.apply_to_point(u, q).unwrap()).collect();
        assert_eq!(images, vec![qs[1], qs[2], qs[0], qs[4], qs[5], qs[3]]);

        let g2 = ProjectiveMap::from_monomial(
            f,
            &MonomialMap::permutation(5, Permutation::from_cycles(5, &[&[1, 4], &[2, 3]])),
        );
        assert_eq!(g2.apply_to_line(u, base).unwrap(), base);
        let images: Vec<PointId> = qs.iter().map(|&q| g2.apply_to_point(u, q).unwrap()).collect();
        assert_eq!(images, vec![qs[3], qs[4], qs[2], qs[0], qs[1], qs[5]]);
    }

    /// The Frobenius-plus-swap map transposes the two marked transversal
    /// lines of the reference stratification.
    #[test]
    fn frobenius_swap_transposes_transversals() {
        let u = &*U4;
        let w = ProjectiveMap::from_monomial(
            u.field(),
            &MonomialMap::permutation(5, Permutation::from_cycles(5, &[&[3, 4]])).with_frobenius(1),
        );
        let l136 = lid(u, "011aa|101b1|1101b|1ab0a|1baa0");
        let l245 = lid(u, "011bb|1011a|110a1|1ab0b|1bab0");
        assert_eq!(w.apply_to_line(u, l136).unwrap(), l245);
        assert_eq!(w.apply_to_line(u, l245).unwrap(), l136);
        let base = lid(u, "01111|101ab|110ba|1ab01|1ba10");
        assert_eq!(w.apply_to_line(u, base).unwrap(), base);
    }

    /// Two semilinear maps preserving both the reference line and one of the
    /// six distance-3 lines induce a 4-cycle and another 4-cycle whose
    /// composition is a 5-cycle on the points of that line.
    #[test]
    fn point_cycles_on_a_distance3_line() {
        let u = &*U4;
        let f = u.field();
        let l1 = lid(u, "011aa|10aa1|1a01a|11b0b|1b1b0");
        let base = lid(u, "01111|101ab|110ba|1ab01|1ba10");

        // out = (x₁², x₄², x₅², x₃², x₂²)
        let fmap = ProjectiveMap::from_monomial(
            f,
            &MonomialMap::from_output_form(&[ONE; 5], &[0, 3, 4, 2, 1], 1).unwrap(),
        );
        // out = (α²x₅², α²x₂², x₁², αx₃², x₄²)
        let gmap = ProjectiveMap::from_monomial(
            f,
            &MonomialMap::from_output_form(&[B, B, ONE, A, ONE], &[4, 1, 0, 2, 3], 1).unwrap(),
        );
        for g in [&fmap, &gmap] {
            assert_eq!(g.apply_to_line(u, l1).unwrap(), l1);
            assert_eq!(g.apply_to_line(u, base).unwrap(), base);
        }
        let pf = induced_point_permutation(u, &fmap, l1).unwrap();
        assert_eq!(pf, Permutation::from_cycles(5, &[&[1, 4, 2, 3]]));
        let pg = induced_point_permutation(u, &gmap, l1).unwrap();
        assert_eq!(pg, Permutation::from_cycles(5, &[&[0, 2, 3, 4]]));
        let fg = fmap.compose(f, &gmap);
        let pfg = induced_point_permutation(u, &fg, l1).unwrap();
        assert_eq!(pfg, Permutation::from_cycles(5, &[&[0, 3, 2, 1, 4]]));
        assert_eq!(pfg, pf.compose(&pg));
    }

    #[test]
    fn line_stabilizer_is_s5() {
        let u = &*U4;
        let f = u.field();
        let group = projective_monomial_group(f, 5).unwrap();
        let base = lid(u, "01111|101ab|110ba|1ab01|1ba10");
        let stab = stabilizer_of_line(u, &group, base).unwrap();
        assert_eq!(stab.len(), 120);
        // Faithful action on the five points, hitting all of S₅.
        let mut perms = BTreeSet::new();
        for g in &stab {
            let p = induced_point_permutation(u, g, base).unwrap();
            assert_eq!(g.is_linear(), p.is_even());
            perms.insert(p);
        }
        assert_eq!(perms.len(), 120);
        let linear = stab.iter().filter(|g| g.is_linear()).count();
        assert_eq!(linear, 60);
    }

    #[test]
    fn full_group_acts_transitively_q3_q4() {
        for q in [3u64, 4] {
            let u = SimplexUniverse::for_order(q).unwrap();
            let group = projective_monomial_group(u.field(), u.n()).unwrap();
            let p0 = u.simplex_points()[0];
            let point_orbit: BTreeSet<PointId> = group
                .iter()
                .map(|g| g.apply_to_point(&u, p0).unwrap())
                .collect();
            assert_eq!(point_orbit.len(), u.simplex_point_count());
            let line_orbit: BTreeSet<LineId> = group
                .iter()
                .map(|g| g.apply_to_line(&u, 0).unwrap())
                .collect();
            assert_eq!(line_orbit.len(), u.line_count());
        }
    }

    /// Every projective monomial map permutes the simplex lines and
    /// preserves adjacency (exhaustive for q = 4).
    #[test]
    fn maps_preserve_lines_and_adjacency() {
        let u = &*U4;
        let g = crate::graph::SimplexGraph::build(u);
        let group = projective_monomial_group(u.field(), 5).unwrap();
        let edges: Vec<(LineId, LineId)> = (0..162)
            .flat_map(|a| g.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b)))
            .collect();
        for pm in &group {
            let mut image = vec![0 as LineId; 162];
            let mut point_image = std::collections::HashMap::new();
            for &p in u.simplex_points() {
                point_image.insert(p, pm.apply_to_point(u, p).unwrap());
            }
            let mut seen = [false; 162];
            for line in 0..162 as LineId {
                let mut ids: Vec<PointId> = u
                    .line(line)
                    .unwrap()
                    .point_ids()
                    .iter()
                    .map(|p| point_image[p])
                    .collect();
                ids.sort_unstable();
                let img = u.line_id(&ids).expect("simplex lines map to simplex lines");
                assert!(!seen[img as usize]);
                seen[img as usize] = true;
                image[line as usize] = img;
            }
            for &(a, b) in &edges {
                assert!(g.edge(image[a as usize], image[b as usize]));
            }
        }
    }

    #[test]
    fn element_text_form() {
        let f = gf4();
        let m = MonomialMap::diag_perm(&[A, ONE, ONE, ONE, B], Permutation::from_cycles(5, &[&[0, 4]]))
            .unwrap()
            .with_frobenius(1);
        assert_eq!(m.text(&f), "frob=1; perm=(5,2,3,4,1); scalars=[b,1,1,1,a]");
    }
}
