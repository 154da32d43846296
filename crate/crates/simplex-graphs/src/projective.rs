//! Vectors, points and lines of GF(q)^n with canonical forms and incidence.
//!
//! A projective point is stored through its canonical representative: the
//! spanning vector scaled so that its first nonzero coordinate is 1. Points
//! are globally indexed by the lexicographic order (on element codes) of
//! their representatives, and lines store the sorted list of their point
//! ids, so line identity is plain integer-list equality.

use std::collections::HashMap;
use std::fmt;

use crate::field::{FieldTable, GfElem};
use crate::{Error, PointId, Result};

/// Largest supported ambient dimension.
pub const MAX_N: usize = 8;

/// A fixed-length vector over GF(q), n ≤ [`MAX_N`]. Copyable; unused slots
/// stay zero so derived ordering and hashing see only the live prefix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GfVector {
    n: u8,
    coords: [u8; MAX_N],
}

impl GfVector {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N);
        GfVector {
            n: n as u8,
            coords: [0; MAX_N],
        }
    }

    pub fn new(coords: &[GfElem]) -> Self {
        let mut v = GfVector::zero(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            v.coords[i] = c.0;
        }
        v
    }

    /// Builds a vector directly from element codes.
    pub fn from_codes(codes: &[u8]) -> Self {
        let mut v = GfVector::zero(codes.len());
        v.coords[..codes.len()].copy_from_slice(codes);
        v
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> GfElem {
        debug_assert!(i < self.len());
        GfElem(self.coords[i])
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: GfElem) {
        debug_assert!(i < self.len());
        self.coords[i] = x.0;
    }

    pub fn iter(&self) -> impl Iterator<Item = GfElem> + '_ {
        self.coords[..self.len()].iter().map(|&c| GfElem(c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords[..self.len()].iter().all(|&c| c == 0)
    }

    pub fn zero_count(&self) -> usize {
        self.coords[..self.len()].iter().filter(|&&c| c == 0).count()
    }

    /// Indices of zero coordinates.
    pub fn zero_support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.coords[i] == 0).collect()
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.coords[i] != 0)
    }

    /// Renders the vector with the field's element symbols, e.g. `101ab`.
    pub fn text(&self, f: &FieldTable) -> String {
        self.iter().map(|x| f.symbol(x)).collect()
    }

    /// Parses a vector from element symbols.
    pub fn parse(s: &str, f: &FieldTable) -> Result<Self> {
        let mut coords = Vec::with_capacity(s.len());
        for c in s.chars() {
            coords.push(f.parse_symbol(c)?);
        }
        if coords.len() > MAX_N {
            return Err(Error::VectorLength {
                expected: MAX_N,
                got: coords.len(),
            });
        }
        Ok(GfVector::new(&coords))
    }
}

impl fmt::Debug for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords[..self.len()].iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn vec_add(f: &FieldTable, a: GfVector, b: GfVector) -> GfVector {
    debug_assert_eq!(a.len(), b.len());
    let mut out = GfVector::zero(a.len());
    for i in 0..a.len() {
        out.set(i, f.add(a.get(i), b.get(i)));
    }
    out
}

pub fn vec_scale(f: &FieldTable, c: GfElem, a: GfVector) -> GfVector {
    let mut out = GfVector::zero(a.len());
    for i in 0..a.len() {
        out.set(i, f.mul(c, a.get(i)));
    }
    out
}

/// x·a + y·b.
pub fn vec_combine(f: &FieldTable, x: GfElem, a: GfVector, y: GfElem, b: GfVector) -> GfVector {
    vec_add(f, vec_scale(f, x, a), vec_scale(f, y, b))
}

pub fn dot(f: &FieldTable, a: GfVector, b: GfVector) -> GfElem {
    debug_assert_eq!(a.len(), b.len());
    let mut s = GfElem::ZERO;
    for i in 0..a.len() {
        s = f.add(s, f.mul(a.get(i), b.get(i)));
    }
    s
}

/// A 1-dimensional subspace, stored through its canonical representative
/// (first nonzero coordinate scaled to 1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjPoint {
    rep: GfVector,
}

impl ProjPoint {
    /// Canonicalizes a nonzero vector; the zero vector is rejected.
    pub fn normalize(f: &FieldTable, v: GfVector) -> Result<ProjPoint> {
        let lead = v.first_nonzero().ok_or(Error::ZeroVector)?;
        let scale = f.inv(v.get(lead))?;
        Ok(ProjPoint {
            rep: vec_scale(f, scale, v),
        })
    }

    pub fn rep(&self) -> GfVector {
        self.rep
    }

    pub fn zero_support(&self) -> Vec<usize> {
        self.rep.zero_support()
    }

    /// The unique zero coordinate of a simplex point, if there is exactly one.
    pub fn single_zero(&self) -> Option<usize> {
        let z = self.rep.zero_support();
        if z.len() == 1 {
            Some(z[0])
        } else {
            None
        }
    }

    pub fn text(&self, f: &FieldTable) -> String {
        self.rep.text(f)
    }
}

/// Coefficients of a linear form; membership is Σ `coeffs[j]·x[j]` = 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Hyperplane {
    coeffs: GfVector,
}

impl Hyperplane {
    pub fn new(coeffs: GfVector) -> Result<Self> {
        if coeffs.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Hyperplane { coeffs })
    }

    /// The coordinate hyperplane x_i = 0.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut coeffs = GfVector::zero(n);
        coeffs.set(i, GfElem::ONE);
        Hyperplane { coeffs }
    }

    pub fn coeffs(&self) -> GfVector {
        self.coeffs
    }

    pub fn contains_vector(&self, f: &FieldTable, v: GfVector) -> bool {
        dot(f, self.coeffs, v).is_zero()
    }

    pub fn contains(&self, f: &FieldTable, p: &ProjPoint) -> bool {
        self.contains_vector(f, p.rep())
    }
}

/// Number of 1-dimensional subspaces of GF(q)^m: (q^m − 1)/(q − 1).
pub fn gaussian_count(q: u64, m: u32) -> u64 {
    (q.pow(m) - 1) / (q - 1)
}

/// A 2-dimensional subspace, identified by the sorted ids of its q+1 points.
#[derive(Clone, Debug)]
pub struct Line {
    point_ids: Vec<PointId>,
    basis: [GfVector; 2],
}

impl Line {
    pub fn point_ids(&self) -> &[PointId] {
        &self.point_ids
    }

    pub fn basis(&self) -> [GfVector; 2] {
        self.basis
    }

    pub fn contains(&self, p: PointId) -> bool {
        self.point_ids.binary_search(&p).is_ok()
    }

    /// Ids shared with another line (0 or 1 for distinct lines).
    pub fn common_points(&self, other: &Line) -> Vec<PointId> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.point_ids.len() && j < other.point_ids.len() {
            match self.point_ids[i].cmp(&other.point_ids[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.point_ids[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        self.point_ids == other.point_ids
    }
}
impl Eq for Line {}
impl PartialOrd for Line {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Line {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.point_ids.cmp(&other.point_ids)
    }
}
impl std::hash::Hash for Line {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.point_ids.hash(state);
    }
}

/// All points of GF(q)^n, canonically enumerated and indexed.
pub struct ProjectiveSpace {
    field: FieldTable,
    n: usize,
    points: Vec<ProjPoint>,
    index: HashMap<GfVector, PointId>,
}

impl ProjectiveSpace {
    pub fn new(field: FieldTable, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::VectorLength {
                expected: MAX_N,
                got: n,
            });
        }
        let q = field.q();
        let size = (q as u64).pow(n as u32);
        const LIMIT: u64 = 1 << 24;
        if size > LIMIT {
            return Err(Error::EnumerationTooLarge {
                what: format!("GF({q})^{n}"),
                size,
                limit: LIMIT,
            });
        }
        // Walk all q^n vectors in lexicographic order and keep the ones that
        // are already canonical, so ids follow the canonical-rep order.
        let mut points = Vec::new();
        let mut index = HashMap::new();
        let mut coords = vec![0u8; n];
        loop {
            let v = GfVector::from_codes(&coords);
            if let Some(lead) = v.first_nonzero() {
                if v.get(lead) == GfElem::ONE {
                    let id = points.len() as PointId;
                    index.insert(v, id);
                    points.push(ProjPoint { rep: v });
                }
            }
            // next vector
            let mut i = n;
            while i > 0 && coords[i - 1] as usize == q - 1 {
                coords[i - 1] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            coords[i - 1] += 1;
        }
        debug_assert_eq!(points.len() as u64, gaussian_count(q as u64, n as u32));
        Ok(ProjectiveSpace {
            field,
            n,
            points,
            index,
        })
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn point(&self, id: PointId) -> Result<&ProjPoint> {
        self.points.get(id as usize).ok_or(Error::NoSuchPoint(id))
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Id of the point spanned by a (not necessarily canonical) vector.
    pub fn point_id(&self, v: GfVector) -> Result<PointId> {
        let p = ProjPoint::normalize(&self.field, v)?;
        self.index
            .get(&p.rep())
            .copied()
            .ok_or(Error::VectorLength {
                expected: self.n,
                got: v.len(),
            })
    }

    /// The q+1 points {⟨x·P + y·Q⟩ : (x,y) ≠ (0,0)}, sorted by id.
    pub fn span_line(&self, a: PointId, b: PointId) -> Result<Line> {
        if a == b {
            return Err(Error::CoincidentPoints);
        }
        let pa = self.point(a)?.rep();
        let pb = self.point(b)?.rep();
        self.span_line_of_vectors(pa, pb)
    }

    /// Same as [`ProjectiveSpace::span_line`] from two independent vectors.
    pub fn span_line_of_vectors(&self, x: GfVector, y: GfVector) -> Result<Line> {
        let f = &self.field;
        if ProjPoint::normalize(f, x)? == ProjPoint::normalize(f, y)? {
            return Err(Error::CoincidentPoints);
        }
        let mut ids = Vec::with_capacity(f.q() + 1);
        ids.push(self.point_id(y)?);
        for c in f.elements() {
            ids.push(self.point_id(vec_combine(f, GfElem::ONE, x, c, y))?);
        }
        ids.sort_unstable();
        ids.dedup();
        debug_assert_eq!(ids.len(), f.q() + 1);
        Ok(Line {
            point_ids: ids,
            basis: [x, y],
        })
    }

    /// The unique common point of two distinct lines, if any; identical
    /// lines are rejected.
    pub fn intersect_lines(&self, l1: &Line, l2: &Line) -> Result<Option<PointId>> {
        if l1 == l2 {
            return Err(Error::CoincidentLines);
        }
        let common = l1.common_points(l2);
        debug_assert!(common.len() <= 1);
        Ok(common.first().copied())
    }

    pub fn hyperplane_contains(&self, h: &Hyperplane, p: &ProjPoint) -> bool {
        h.contains(&self.field, p)
    }

    /// All nonzero vectors of the plane spanned by three independent basis
    /// vectors, one representative per point.
    pub fn plane_points(&self, basis: [GfVector; 3]) -> Vec<PointId> {
        let f = &self.field;
        let mut ids = Vec::new();
        for c0 in f.elements() {
            for c1 in f.elements() {
                for c2 in f.elements() {
                    if c0.is_zero() && c1.is_zero() && c2.is_zero() {
                        continue;
                    }
                    let v = vec_add(
                        f,
                        vec_combine(f, c0, basis[0], c1, basis[1]),
                        vec_scale(f, c2, basis[2]),
                    );
                    ids.push(self.point_id(v).expect("nonzero combination"));
                }
            }
        }
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// In-place row reduction over GF(q); returns the rank. Rows end up in
/// reduced echelon form with zero rows dropped.
pub fn row_reduce(f: &FieldTable, rows: &mut Vec<GfVector>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n = rows[0].len();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r].get(col).is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = f.inv(rows[rank].get(col)).expect("pivot is nonzero");
        rows[rank] = vec_scale(f, scale, rows[rank]);
        for r in 0..rows.len() {
            if r != rank && !rows[r].get(col).is_zero() {
                let factor = f.neg(rows[r].get(col));
                rows[r] = vec_combine(f, GfElem::ONE, rows[r], factor, rows[rank]);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

pub fn rank(f: &FieldTable, rows: &[GfVector]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(f, &mut m)
}

/// Whether v lies in the row space of `rows`.
pub fn in_span(f: &FieldTable, rows: &[GfVector], v: GfVector) -> bool {
    let mut m = rows.to_vec();
    let r = row_reduce(f, &mut m);
    m.push(v);
    row_reduce(f, &mut m) == r
}

/// Basis of {y : Σ_j `rows[i][j]·y[j]` = 0 for all i}.
pub fn kernel_basis(f: &FieldTable, rows: &[GfVector], n: usize) -> Vec<GfVector> {
    let mut m = rows.to_vec();
    row_reduce(f, &mut m);
    let mut pivot_col = vec![None; n];
    for (r, row) in m.iter().enumerate() {
        if let Some(c) = row.first_nonzero() {
            pivot_col[c] = Some(r);
        }
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_col[free].is_some() {
            continue;
        }
        let mut y = GfVector::zero(n);
        y.set(free, GfElem::ONE);
        for (c, pivot) in pivot_col.iter().enumerate() {
            if let Some(r) = *pivot {
                // pivot coordinate solves row·y = 0
                y.set(c, f.neg(m[r].get(free)));
            }
        }
        basis.push(y);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldTable {
        FieldTable::new(2, 2).unwrap()
    }

    fn v4(s: &str) -> GfVector {
        GfVector::parse(s, &gf4()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = gf4();
        // (0,α,α,α,α) scales by α⁻¹ to (0,1,1,1,1)
        let p = ProjPoint::normalize(&f, v4("0aaaa")).unwrap();
        assert_eq!(p.text(&f), "01111");
        // already canonical
        let p = ProjPoint::normalize(&f, v4("101ab")).unwrap();
        assert_eq!(p.text(&f), "101ab");
        // (α²,0,1,1,α²) · α = (1,0,α,α,1)
        let p = ProjPoint::normalize(&f, v4("b011b")).unwrap();
        assert_eq!(p.text(&f), "10aa1");
        assert!(ProjPoint::normalize(&f, GfVector::zero(5)).is_err());
    }

    /// Brute-force oracle: of all scalar multiples, exactly one has leading
    /// coordinate 1, and normalize returns it.
    #[test]
    fn normalize_matches_scalar_scan() {
        let f = gf4();
        for v in ["b011b", "0aaaa", "1ba10", "00b0a"] {
            let v = v4(v);
            let mut canonical = Vec::new();
            for c in f.nonzero_elements() {
                let w = vec_scale(&f, c, v);
                let lead = w.first_nonzero().unwrap();
                if w.get(lead) == GfElem::ONE {
                    canonical.push(w);
                }
            }
            assert_eq!(canonical.len(), 1);
            assert_eq!(ProjPoint::normalize(&f, v).unwrap().rep(), canonical[0]);
        }
    }

    #[test]
    fn point_counts() {
        let f = gf4();
        let space = ProjectiveSpace::new(f, 5).unwrap();
        assert_eq!(space.point_count(), 341);
        assert_eq!(gaussian_count(4, 5), 341);

        let space3 = ProjectiveSpace::new(FieldTable::new(3, 1).unwrap(), 4).unwrap();
        assert_eq!(space3.point_count(), 40);
        assert_eq!(gaussian_count(3, 4), 40);

        let space42 = ProjectiveSpace::new(FieldTable::new(2, 2).unwrap(), 2).unwrap();
        assert_eq!(space42.point_count(), 5);
    }

    #[test]
    fn oversized_spaces_are_rejected() {
        let f25 = FieldTable::new(5, 2).unwrap();
        assert!(matches!(
            ProjectiveSpace::new(f25, 8),
            Err(crate::Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn gaussian_count_examples() {
        assert_eq!(gaussian_count(4, 2), 5);
        assert_eq!(gaussian_count(3, 3), 13);
        assert_eq!(gaussian_count(5, 2), 6);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let space = ProjectiveSpace::new(gf4(), 5).unwrap();
        for p in space.points() {
            let again = ProjPoint::normalize(space.field(), p.rep()).unwrap();
            assert_eq!(&again, p);
        }
    }

    #[test]
    fn span_contains_generators_and_matches_reference_line() {
        let space = ProjectiveSpace::new(gf4(), 5).unwrap();
        let a = space.point_id(v4("01111")).unwrap();
        let b = space.point_id(v4("101ab")).unwrap();
        let line = space.span_line(a, b).unwrap();
        assert!(line.contains(a) && line.contains(b));
        assert_eq!(line.point_ids().len(), 5);
        for text in ["110ba", "1ab01", "1ba10"] {
            let id = space.point_id(v4(text)).unwrap();
            assert!(line.contains(id), "missing {text}");
        }
        assert!(space.span_line(a, a).is_err());
    }

    #[test]
    fn span_is_independent_of_the_spanning_pair() {
        let space = ProjectiveSpace::new(gf4(), 5).unwrap();
        let a = space.point_id(v4("01111")).unwrap();
        let b = space.point_id(v4("101ab")).unwrap();
        let line = space.span_line(a, b).unwrap();
        let ids = line.point_ids().to_vec();
        for &x in &ids {
            for &y in &ids {
                if x != y {
                    assert_eq!(space.span_line(x, y).unwrap(), line);
                }
            }
        }
    }

    /// q = 3 span: 8 nonzero coefficient pairs collapse to 4 points.
    #[test]
    fn span_point_count_q3_oracle() {
        let f = FieldTable::new(3, 1).unwrap();
        let space = ProjectiveSpace::new(f, 4).unwrap();
        let f = space.field();
        let x = GfVector::parse("0111", f).unwrap();
        let y = GfVector::parse("1012", f).unwrap();
        let mut reps = std::collections::BTreeSet::new();
        let mut combos = 0;
        for cx in f.elements() {
            for cy in f.elements() {
                if cx.is_zero() && cy.is_zero() {
                    continue;
                }
                combos += 1;
                let v = vec_combine(f, cx, x, cy, y);
                reps.insert(ProjPoint::normalize(f, v).unwrap());
            }
        }
        assert_eq!(combos, 8);
        assert_eq!(reps.len(), 4);
        let a = space.point_id(x).unwrap();
        let b = space.point_id(y).unwrap();
        assert_eq!(space.span_line(a, b).unwrap().point_ids().len(), 4);
    }

    #[test]
    fn intersecting_a_line_with_itself_is_rejected() {
        let space = ProjectiveSpace::new(gf4(), 5).unwrap();
        let a = space.point_id(v4("01111")).unwrap();
        let b = space.point_id(v4("101ab")).unwrap();
        let line = space.span_line(a, b).unwrap();
        assert!(space.intersect_lines(&line, &line.clone()).is_err());
    }

    #[test]
    fn hyperplane_membership_examples() {
        let f = gf4();
        let h1 = Hyperplane::new(v4("01111")).unwrap();
        assert!(h1.contains_vector(&f, v4("01aa1"))); // 1+α+α+1 = 0
        assert!(h1.contains_vector(&f, v4("01111"))); // 1+1+1+1 = 0
        let h2 = Hyperplane::new(v4("101ba")).unwrap();
        assert!(h2.contains_vector(&f, v4("101ab"))); // 1+1+α²·α+α·α² = 0
        assert!(!h1.contains_vector(&f, v4("011a1")));
    }

    #[test]
    fn row_reduction_rank_and_kernel() {
        let f = gf4();
        let rows = vec![v4("01111"), v4("101ab")];
        assert_eq!(rank(&f, &rows), 2);
        let ker = kernel_basis(&f, &rows, 5);
        assert_eq!(ker.len(), 3);
        for y in &ker {
            for r in &rows {
                assert!(dot(&f, *r, *y).is_zero());
            }
        }
        // Dependent rows collapse.
        let dep = vec![v4("01111"), v4("0aaaa")];
        assert_eq!(rank(&f, &dep), 1);
        assert!(in_span(&f, &rows, v4("110ba")));
        assert!(!in_span(&f, &rows, v4("10000")));
    }
}
