//! Simplex vectors, points, and lines over GF(q)^(q+1), with incidence.
//!
//! Here k = 2 throughout: a vector is simplex when exactly one coordinate is
//! zero, a point is simplex when its representative is, and a line is simplex
//! when all of its q+1 points are. Lines are enumerated by spanning every
//! pair of simplex points, filtering the spans, and deduplicating by the
//! sorted point-id lists; the result is canonically ordered before line ids
//! are assigned, so enumeration is deterministic regardless of parallelism.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::field::{FieldTable, GfElem};
use crate::projective::{
    gaussian_count, kernel_basis, rank, vec_combine, GfVector, Hyperplane, Line, ProjectiveSpace,
};
use crate::{Error, LineId, PointId, Result};

/// Code dimension; the whole crate works with 2-dimensional codes.
pub const K: usize = 2;

/// Whether v spans a simplex point of a dimension-k code universe: exactly
/// (q^(k−1) − 1)/(q − 1) zero coordinates.
pub fn is_simplex_vector(f: &FieldTable, v: &GfVector, k: u32) -> bool {
    !v.is_zero() && v.zero_count() as u64 == gaussian_count(f.q() as u64, k - 1)
}

/// Polynomial test for simplex vectors: for every j in [0, m(k−1)) the sum
/// over all (p^j)-subsets of coordinates of the products of their (q−1)-th
/// powers must vanish. The zero vector passes; callers exclude it when
/// needed.
pub fn polynomial_check(f: &FieldTable, v: &GfVector, k: u32) -> bool {
    let n = v.len();
    let q = f.q() as u64;
    let powers: Vec<GfElem> = (0..n).map(|i| f.pow(v.get(i), q - 1)).collect();
    for j in 0..(f.degree() as u32 * (k - 1)) {
        let t = (f.p() as u32).pow(j) as usize;
        if t > n {
            continue;
        }
        let mut sum = GfElem::ZERO;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != t {
                continue;
            }
            let mut term = GfElem::ONE;
            for (i, &p) in powers.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    term = f.mul(term, p);
                }
            }
            sum = f.add(sum, term);
        }
        if !sum.is_zero() {
            return false;
        }
    }
    true
}

/// Simplex points and lines of GF(q)^(q+1), with incidence indexes.
/// Immutable once built.
pub struct SimplexUniverse {
    space: ProjectiveSpace,
    simplex_points: Vec<PointId>,
    simplex_mask: Vec<bool>,
    lines: Vec<Line>,
    line_index: HashMap<Vec<PointId>, LineId>,
    point_to_lines: Vec<Vec<LineId>>,
}

impl SimplexUniverse {
    /// Builds the universe for the field's order q, in dimension n = q + 1.
    pub fn build(field: FieldTable) -> Result<Self> {
        let q = field.q();
        let n = q + 1;
        let space = ProjectiveSpace::new(field, n)?;

        let simplex_points: Vec<PointId> = (0..space.point_count() as PointId)
            .filter(|&id| {
                is_simplex_vector(space.field(), &space.points()[id as usize].rep(), K as u32)
            })
            .collect();
        let mut simplex_mask = vec![false; space.point_count()];
        for &id in &simplex_points {
            simplex_mask[id as usize] = true;
        }

        // Span every pair of simplex points and keep the spans all of whose
        // points are simplex. Pairs are scanned in parallel; dedup plus the
        // final canonical sort keep the output independent of scheduling.
        let found: HashSet<Line> = simplex_points
            .par_iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut local = HashSet::new();
                for &b in &simplex_points[i + 1..] {
                    if let Some(line) = simplex_span(&space, a, b) {
                        local.insert(line);
                    }
                }
                local
            })
            .reduce(HashSet::new, |mut acc, local| {
                acc.extend(local);
                acc
            });
        let mut lines: Vec<Line> = found.into_iter().collect();
        lines.sort_unstable();

        let mut line_index = HashMap::with_capacity(lines.len());
        let mut point_to_lines = vec![Vec::new(); space.point_count()];
        for (id, line) in lines.iter().enumerate() {
            line_index.insert(line.point_ids().to_vec(), id as LineId);
            for &p in line.point_ids() {
                point_to_lines[p as usize].push(id as LineId);
            }
        }

        Ok(SimplexUniverse {
            space,
            simplex_points,
            simplex_mask,
            lines,
            line_index,
            point_to_lines,
        })
    }

    /// Convenience constructor from the field order.
    pub fn for_order(q: u64) -> Result<Self> {
        let field = match q {
            3 => FieldTable::new(3, 1),
            4 => FieldTable::new(2, 2),
            5 => FieldTable::new(5, 1),
            _ => Err(Error::UnsupportedOrder(q)),
        }?;
        Self::build(field)
    }

    pub fn field(&self) -> &FieldTable {
        self.space.field()
    }

    pub fn space(&self) -> &ProjectiveSpace {
        &self.space
    }

    pub fn q(&self) -> usize {
        self.field().q()
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    /// Ids of all simplex points, ascending.
    pub fn simplex_points(&self) -> &[PointId] {
        &self.simplex_points
    }

    pub fn is_simplex_point(&self, id: PointId) -> bool {
        self.simplex_mask
            .get(id as usize)
            .copied()
            .unwrap_or(false)
    }

    pub fn simplex_point_count(&self) -> usize {
        self.simplex_points.len()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn line(&self, id: LineId) -> Result<&Line> {
        self.lines.get(id as usize).ok_or(Error::NoSuchLine(id))
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Looks a line up by its sorted point ids.
    pub fn line_id(&self, point_ids: &[PointId]) -> Option<LineId> {
        self.line_index.get(point_ids).copied()
    }

    /// Simplex lines through a point, ascending.
    pub fn lines_through(&self, p: PointId) -> &[LineId] {
        &self.point_to_lines[p as usize]
    }

    /// Whether two distinct simplex points are joined by a simplex line.
    pub fn points_adjacent(&self, a: PointId, b: PointId) -> Result<bool> {
        if a == b {
            return Err(Error::CoincidentPoints);
        }
        self.require_simplex(a)?;
        self.require_simplex(b)?;
        Ok(simplex_span(&self.space, a, b).is_some())
    }

    fn require_simplex(&self, p: PointId) -> Result<()> {
        if self.is_simplex_point(p) {
            Ok(())
        } else {
            Err(Error::NotSimplexPoint(p))
        }
    }

    /// All simplex points adjacent to p.
    pub fn adjacent_simplex_points(&self, p: PointId) -> Result<Vec<PointId>> {
        self.require_simplex(p)?;
        Ok(self
            .simplex_points
            .iter()
            .copied()
            .filter(|&b| b != p && simplex_span(&self.space, p, b).is_some())
            .collect())
    }

    /// The hyperplane carrying every simplex point adjacent to p: for a
    /// representative with zero at coordinate i, the form has coefficient 0
    /// at i and x_j⁻¹ elsewhere.
    pub fn adjacency_hyperplane(&self, p: PointId) -> Result<Hyperplane> {
        self.require_simplex(p)?;
        let rep = self.space.point(p)?.rep();
        let f = self.field();
        let mut coeffs = GfVector::zero(rep.len());
        for j in 0..rep.len() {
            let x = rep.get(j);
            if !x.is_zero() {
                coeffs.set(j, f.inv(x)?);
            }
        }
        Hyperplane::new(coeffs)
    }

    /// Simplex points in the adjacency hyperplane of p that are not adjacent
    /// to p (and differ from it). For q = 4 these are exactly the 6 points
    /// sharing p's zero coordinate; for q ≥ 5 points with other zero
    /// positions appear as well.
    pub fn nonadjacent_in_hyperplane(&self, p: PointId) -> Result<Vec<PointId>> {
        let h = self.adjacency_hyperplane(p)?;
        let f = self.field();
        let mut out = Vec::new();
        for &t in &self.simplex_points {
            if t == p {
                continue;
            }
            let rep = self.space.point(t)?.rep();
            if h.contains_vector(f, rep) && simplex_span(&self.space, p, t).is_none() {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// Basis of the dual code {y : Σ_j x_j y_j = 0 for all x in the line};
    /// its dimension is n − 2.
    pub fn dual_basis(&self, line: LineId) -> Result<Vec<GfVector>> {
        let l = self.line(line)?;
        Ok(kernel_basis(self.field(), &l.basis(), self.n()))
    }

    /// Dimension of the intersection of the dual codes of two lines.
    pub fn duals_meet_in_dim(&self, l1: LineId, l2: LineId) -> Result<usize> {
        let d1 = self.dual_basis(l1)?;
        let d2 = self.dual_basis(l2)?;
        let mut stacked = d1.clone();
        stacked.extend_from_slice(&d2);
        // dim(D1 ∩ D2) = dim D1 + dim D2 − dim(D1 + D2)
        Ok(d1.len() + d2.len() - rank(self.field(), &stacked))
    }

    /// The points of a simplex line ordered by their zero coordinate, so
    /// entry i is the line's intersection with the hyperplane x_i = 0.
    pub fn line_points_by_zero(&self, line: LineId) -> Result<Vec<PointId>> {
        let l = self.line(line)?;
        let mut by_zero = vec![None; self.n()];
        for &p in l.point_ids() {
            let zero = self
                .space
                .point(p)?
                .single_zero()
                .ok_or(Error::NotSimplexPoint(p))?;
            by_zero[zero] = Some(p);
        }
        by_zero
            .into_iter()
            .map(|slot| slot.ok_or(Error::NoSuchLine(line)))
            .collect()
    }

    /// Text form of a simplex line: q+1 rows of element symbols separated by
    /// '|', row i being the canonical representative with zero at
    /// coordinate i. Example: `01111|101ab|110ba|1ab01|1ba10`.
    pub fn line_text(&self, line: LineId) -> Result<String> {
        let rows = self.line_points_by_zero(line)?;
        let f = self.field();
        Ok(rows
            .iter()
            .map(|&p| self.space.points()[p as usize].text(f))
            .collect::<Vec<_>>()
            .join("|"))
    }

    /// Parses a line in the [`SimplexUniverse::line_text`] format and resolves it against the
    /// enumeration. The rows must be canonical representatives that really
    /// form one line of this universe.
    pub fn parse_line(&self, text: &str) -> Result<LineId> {
        let rows: Vec<&str> = text.split('|').collect();
        if rows.len() != self.n() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {} rows, got {}", self.n(), rows.len()),
            });
        }
        let mut ids = Vec::with_capacity(rows.len());
        for row in rows {
            let v = GfVector::parse(row, self.field())?;
            if v.len() != self.n() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("expected {} symbols per row, got {}", self.n(), v.len()),
                });
            }
            ids.push(self.space.point_id(v)?);
        }
        ids.sort_unstable();
        ids.dedup();
        let span = self.space.span_line(ids[0], ids[1])?;
        if span.point_ids() != ids {
            return Err(Error::Parse {
                line: 0,
                msg: "rows do not span a single line".into(),
            });
        }
        self.line_id(&ids).ok_or_else(|| Error::Parse {
            line: 0,
            msg: "line is not simplex".into(),
        })
    }

    /// JSON dump of the universe: field, simplex point reps, line point ids.
    pub fn dump_json(&self) -> Value {
        let f = self.field();
        json!({
            "q": f.q(),
            "p": f.p(),
            "m": f.degree(),
            "n": self.n(),
            "simplex_point_count": self.simplex_point_count(),
            "simplex_line_count": self.line_count(),
            "points": self
                .simplex_points
                .iter()
                .map(|&id| json!({ "id": id, "rep": self.space.points()[id as usize].text(f) }))
                .collect::<Vec<_>>(),
            "lines": self
                .lines
                .iter()
                .enumerate()
                .map(|(id, line)| {
                    json!({
                        "id": id,
                        "points": line.point_ids(),
                        "text": self.line_text(id as LineId).unwrap(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Spans two simplex points and returns the line when it is simplex, i.e.
/// when each of its q+1 points has exactly one zero coordinate.
fn simplex_span(space: &ProjectiveSpace, a: PointId, b: PointId) -> Option<Line> {
    let f = space.field();
    let x = space.points()[a as usize].rep();
    let y = space.points()[b as usize].rep();
    // Points of the span: ⟨y⟩ and ⟨x + c·y⟩ for each c; bail out on the
    // first non-simplex combination.
    for c in f.elements() {
        let v = vec_combine(f, GfElem::ONE, x, c, y);
        if v.zero_count() != 1 {
            return None;
        }
    }
    if y.zero_count() != 1 {
        return None;
    }
    let line = space.span_line(a, b).expect("distinct simplex points");
    debug_assert!(distinct_zero_positions(space, &line));
    Some(line)
}

fn distinct_zero_positions(space: &ProjectiveSpace, line: &Line) -> bool {
    let mut seen = 0u32;
    for &p in line.point_ids() {
        match space.points()[p as usize].single_zero() {
            Some(z) if seen & (1 << z) == 0 => seen |= 1 << z,
            _ => return false,
        }
    }
    true
}

/// Closed-form count of 2-dimensional simplex codes in GF(q)^(q+1):
/// n!(q−1)^n / ((q²−1)(q²−q)) with n = q+1.
pub fn line_count_formula(q: u64) -> u64 {
    let n = q + 1;
    let fact: u64 = (1..=n).product();
    let numerator = fact * (q - 1).pow(n as u32);
    numerator / ((q * q - 1) * (q * q - q))
}
