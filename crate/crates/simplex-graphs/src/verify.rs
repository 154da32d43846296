//! Named verification suites. Every quantitative claim about the simplex
//! line graphs is recomputed from scratch and reported as a pass/fail check.
//!
//! All checks are exact (integer/combinatorial; tolerance 0). Reports are
//! deterministic: checks are sorted by id and the per-check runtimes are
//! optional so that emitted bytes match across runs and thread counts when
//! timings are suppressed.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use serde_json::{json, Value};

use crate::appendix::{triple_of_name, AppendixTable, TableLine};
use crate::field::{FieldTable, GfElem};
use crate::graph::{
    stratify, verify_clique_structure, verify_spanned_hyperplanes, verify_spread, BaseFrame,
    SimplexGraph, Stratification,
};
use crate::projective::GfVector;
use crate::simplex::{is_simplex_vector, line_count_formula, polynomial_check, SimplexUniverse};
use crate::symmetry::{
    induced_point_permutation, is_sharply_3_transitive, projective_monomial_group,
    setwise_stabilizer, stabilizer_of_line, LineAction, ProjectiveMap,
};
use crate::{Error, LineId, PointId, Result};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub paper_claim: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub runtime_ms: Option<u64>,
}

/// A suite's worth of checks, ordered by id.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report {
            suite: suite.to_string(),
            checks,
        }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// JSON form; timings are emitted only on request so default output is
    /// byte-identical across runs.
    pub fn to_json(&self, include_timings: bool) -> Value {
        json!({
            "suite": self.suite,
            "checks": self.checks.iter().map(|c| {
                let mut obj = json!({
                    "id": c.id,
                    "paper_claim": c.paper_claim,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.pass,
                });
                if include_timings {
                    obj["runtime_ms"] = json!(c.runtime_ms.unwrap_or(0));
                }
                obj
            }).collect::<Vec<_>>(),
            "summary": { "passed": self.passed(), "failed": self.failed() },
        })
    }

    pub fn to_text(&self, include_timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {}\n", self.suite));
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}  {}", c.id, c.paper_claim));
            if !c.pass {
                out.push_str(&format!("  [expected {} got {}]", c.expected, c.actual));
            }
            if include_timings {
                out.push_str(&format!("  ({} ms)", c.runtime_ms.unwrap_or(0)));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.passed(),
            self.failed()
        ));
        out
    }
}

struct Checker {
    checks: Vec<CheckResult>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: Vec::new() }
    }

    fn run(&mut self, id: &str, claim: &str, expected: Value, actual: impl FnOnce() -> Value) {
        let start = Instant::now();
        let actual = actual();
        let runtime_ms = start.elapsed().as_millis() as u64;
        self.checks.push(CheckResult {
            id: id.to_string(),
            paper_claim: claim.to_string(),
            pass: expected == actual,
            expected,
            actual,
            runtime_ms: Some(runtime_ms),
        });
    }
}

/// The canonical q = 4 base line: the span of (0,1,1,1,1) and (1,0,1,α,α²),
/// which is the line the bundled reference tables describe.
pub fn reference_base_line(u: &SimplexUniverse) -> Result<LineId> {
    let a = u.space().point_id(GfVector::parse("01111", u.field())?)?;
    let b = u.space().point_id(GfVector::parse("101ab", u.field())?)?;
    let line = u.space().span_line(a, b)?;
    u.line_id(line.point_ids())
        .ok_or_else(|| Error::ActionNotWellDefined("reference base line is not simplex".into()))
}

/// Everything the q = 4 suites need: universe, graph, the reference base
/// line with its stratification, and the parsed reference tables.
pub struct Q4Context {
    pub universe: SimplexUniverse,
    pub graph: SimplexGraph,
    pub base: LineId,
    pub strat: Stratification,
    pub table: AppendixTable,
}

impl Q4Context {
    /// Builds the context with the embedded reference tables.
    pub fn build() -> Result<Self> {
        let field = FieldTable::new(2, 2)?;
        let table = AppendixTable::embedded(&field)?;
        Self::build_with_table(table)
    }

    pub fn build_with_table(table: AppendixTable) -> Result<Self> {
        let universe = SimplexUniverse::for_order(4)?;
        let graph = SimplexGraph::build(&universe);
        let base = reference_base_line(&universe)?;
        let strat = stratify(&graph, base)?;
        Ok(Q4Context {
            universe,
            graph,
            base,
            strat,
            table,
        })
    }

    /// Resolves a table entry against the enumeration: its five rows must be
    /// canonical simplex points forming exactly one enumerated simplex line.
    pub fn resolve(&self, entry: &TableLine) -> Option<LineId> {
        let u = &self.universe;
        let mut ids: Vec<PointId> = entry
            .rows
            .iter()
            .map(|&v| u.space().point_id(v).ok())
            .collect::<Option<_>>()?;
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != 5 {
            return None;
        }
        let span = u.space().span_line(ids[0], ids[1]).ok()?;
        if span.point_ids() != ids {
            return None;
        }
        u.line_id(&ids)
    }

    /// Line ids of the six table entries, index i holding L_{i+1}.
    pub fn six_labels(&self) -> Option<Vec<LineId>> {
        self.table.six.iter().map(|e| self.resolve(e)).collect()
    }
}

/// The projective monomial group of GF(4)^5 and the base line's stabilizer
/// with its action on all 162 lines.
pub struct GroupContext {
    pub full_group: Vec<ProjectiveMap>,
    pub stabilizer: Vec<ProjectiveMap>,
    pub action: LineAction,
}

impl GroupContext {
    pub fn build(u: &SimplexUniverse, base: LineId) -> Result<Self> {
        let full_group = projective_monomial_group(u.field(), u.n())?;
        let stabilizer = stabilizer_of_line(u, &full_group, base)?;
        let action = LineAction::build(u, stabilizer.clone())?;
        Ok(GroupContext {
            full_group,
            stabilizer,
            action,
        })
    }
}

/// Foundational q = 4 checks: the polynomial characterization, the adjacency
/// criterion, duality transfer, and the base line's hyperplane geometry.
pub fn verify_foundations(cx: &Q4Context) -> Vec<CheckResult> {
    let u = &cx.universe;
    let g = &cx.graph;
    let f = u.field();
    let mut ck = Checker::new();

    ck.run(
        "f_01_polynomial_equivalence",
        "a vector of GF(4)^5 is simplex (exactly one zero coordinate) iff it is nonzero and satisfies the two power-sum equations",
        json!({ "vectors": 1024, "agree": 1024 }),
        || {
            let mut agree = 0;
            let mut total = 0;
            let mut coords = [0u8; 5];
            loop {
                let v = GfVector::from_codes(&coords);
                total += 1;
                let direct = is_simplex_vector(f, &v, 2);
                let poly = !v.is_zero() && polynomial_check(f, &v, 2);
                if direct == poly {
                    agree += 1;
                }
                let mut i = 5;
                while i > 0 && coords[i - 1] == 3 {
                    coords[i - 1] = 0;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                coords[i - 1] += 1;
            }
            json!({ "vectors": total, "agree": agree })
        },
    );

    ck.run(
        "f_02_adjacency_criterion",
        "for q = 4, simplex points P (zero at i) and Q are adjacent iff Q lies on P's adjacency hyperplane and Q's i-th coordinate is nonzero",
        json!({ "pairs": 9045, "agree": 9045 }),
        || {
            let pts = u.simplex_points();
            let mut pairs = 0;
            let mut agree = 0;
            for (i, &a) in pts.iter().enumerate() {
                let h = u.adjacency_hyperplane(a).unwrap();
                let zero = u.space().points()[a as usize].single_zero().unwrap();
                for &b in &pts[i + 1..] {
                    pairs += 1;
                    let rep = u.space().points()[b as usize].rep();
                    let criterion = h.contains_vector(f, rep) && !rep.get(zero).is_zero();
                    if criterion == u.points_adjacent(a, b).unwrap() {
                        agree += 1;
                    }
                }
            }
            json!({ "pairs": pairs, "agree": agree })
        },
    );

    ck.run(
        "f_03_nonadjacent_in_hyperplane",
        "each adjacency hyperplane carries exactly 6 simplex points non-adjacent to its point, all sharing that point's zero coordinate",
        json!({ "points": 135, "with_six_nonadjacent": 135, "all_share_zero": true }),
        || {
            let mut with_six = 0;
            let mut share = true;
            for &p in u.simplex_points() {
                let zero = u.space().points()[p as usize].single_zero().unwrap();
                let non = u.nonadjacent_in_hyperplane(p).unwrap();
                if non.len() == 6 {
                    with_six += 1;
                }
                share &= non
                    .iter()
                    .all(|&t| u.space().points()[t as usize].single_zero() == Some(zero));
            }
            json!({ "points": 135, "with_six_nonadjacent": with_six, "all_share_zero": share })
        },
    );

    ck.run(
        "f_04_duality_transfer",
        "two simplex lines are adjacent iff their dual (Hamming) codes intersect in dimension n − 3",
        json!({ "pairs": 13041, "agree": 13041 }),
        || {
            let n = u.line_count() as LineId;
            let mut pairs = 0;
            let mut agree = 0;
            for a in 0..n {
                for b in a + 1..n {
                    pairs += 1;
                    let adjacent = g.edge(a, b);
                    let dim = u.duals_meet_in_dim(a, b).unwrap();
                    if adjacent == (dim == u.n() - 3) {
                        agree += 1;
                    }
                }
            }
            json!({ "pairs": pairs, "agree": agree })
        },
    );

    let frame = BaseFrame::new(u, cx.base).expect("base frame");
    let dist = g.bfs_distances(cx.base);

    ck.run(
        "f_05_distance3_criterion",
        "a line lies at distance ≥ 3 from the base iff it meets every adjacency hyperplane H_i in a point of H_i ∩ C_i other than the base point",
        json!({ "lines": 161, "agree": 161, "criterion_true": 6 }),
        || {
            let mut agree = 0;
            let mut crit_true = 0;
            for v in 0..161 + 1 as LineId {
                if v == cx.base {
                    continue;
                }
                let crit = frame.distance3_criterion(u, v).unwrap();
                if crit {
                    crit_true += 1;
                }
                if crit == (dist[v as usize] >= 3) {
                    agree += 1;
                }
            }
            json!({ "lines": 161, "agree": agree, "criterion_true": crit_true })
        },
    );

    ck.run(
        "f_06_distinct_hyperplane_sections",
        "every line non-adjacent to the base meets the hyperplanes H_1..H_5 in five mutually distinct points",
        json!({ "lines": 136, "distinct": 136 }),
        || {
            let mut lines = 0;
            let mut distinct = 0;
            for v in 0..162 as LineId {
                if dist[v as usize] < 2 {
                    continue;
                }
                lines += 1;
                if let Ok((pts, _)) = frame.hyperplane_profile(u, v) {
                    let set: BTreeSet<PointId> = pts.iter().copied().collect();
                    if set.len() == 5 {
                        distinct += 1;
                    }
                }
            }
            json!({ "lines": lines, "distinct": distinct })
        },
    );

    ck.run(
        "f_07_section_points_on_unique_six_line",
        "the 30 simplex points in the sections H_i ∩ C_i (base points excluded) each lie on exactly one of the six distance-3 lines",
        json!({ "points": 30, "on_unique_six_line": 30 }),
        || {
            let mut section_points = BTreeSet::new();
            for (i, h) in frame.hyperplanes.iter().enumerate() {
                for &p in u.simplex_points() {
                    let rep = u.space().points()[p as usize].rep();
                    if p != frame.points[i] && rep.get(i).is_zero() && h.contains_vector(f, rep) {
                        section_points.insert(p);
                    }
                }
            }
            let unique = section_points
                .iter()
                .filter(|&&p| {
                    cx.strat
                        .six
                        .iter()
                        .filter(|&&l| u.line(l).unwrap().contains(p))
                        .count()
                        == 1
                })
                .count();
            json!({ "points": section_points.len(), "on_unique_six_line": unique })
        },
    );

    ck.run(
        "f_08_disjoint_pair_spans",
        "any two of the six span a hyperplane containing none of the other four",
        json!(true),
        || json!(verify_spanned_hyperplanes(u, &cx.strat.six).unwrap()),
    );

    ck.run(
        "f_09_meet_counts_match_hyperplane_counts",
        "for lines at distance 2 the number of the six they meet equals the count of hyperplane sections falling into H_i ∩ C_i, and only 0, 1, 3 occur",
        json!({ "lines": 130, "agree": 130, "values": [0, 1, 3] }),
        || {
            let mut agree = 0;
            let mut values = BTreeSet::new();
            for (&l, &n) in &cx.strat.n_values {
                if let Ok((_, n_geom)) = frame.hyperplane_profile(u, l) {
                    if n_geom == n {
                        agree += 1;
                    }
                }
                values.insert(n);
            }
            json!({
                "lines": cx.strat.n_values.len(),
                "agree": agree,
                "values": values.into_iter().collect::<Vec<_>>(),
            })
        },
    );

    ck.run(
        "f_10_unique_transversals",
        "each of the 20 triples of the six has exactly one simplex line meeting all three, and those transversals are the 20 lines meeting three of the six",
        json!({ "triples": 20, "with_unique_transversal": 20, "transversals_match": true }),
        || {
            let six = &cx.strat.six;
            let mut transversals = BTreeSet::new();
            let mut unique = 0;
            let mut triples = 0;
            for i in 0..6 {
                for j in i + 1..6 {
                    for k in j + 1..6 {
                        triples += 1;
                        let hits: Vec<LineId> = (0..162 as LineId)
                            .filter(|l| !six.contains(l))
                            .filter(|&l| {
                                g.edge(l, six[i]) && g.edge(l, six[j]) && g.edge(l, six[k])
                            })
                            .collect();
                        if hits.len() == 1 {
                            unique += 1;
                            transversals.insert(hits[0]);
                        }
                    }
                }
            }
            let x3: BTreeSet<LineId> = cx.strat.x3.iter().copied().collect();
            json!({
                "triples": triples,
                "with_unique_transversal": unique,
                "transversals_match": transversals == x3,
            })
        },
    );

    ck.run(
        "f_11_point_incidences",
        "every simplex point lies on exactly (q−1)! = 6 simplex lines and is adjacent to exactly q! = 24 simplex points",
        json!({ "points": 135, "with_6_lines": 135, "with_24_adjacent": 135 }),
        || {
            let mut six_lines = 0;
            let mut adj24 = 0;
            for &p in u.simplex_points() {
                if u.lines_through(p).len() == 6 {
                    six_lines += 1;
                }
                if u.adjacent_simplex_points(p).unwrap().len() == 24 {
                    adj24 += 1;
                }
            }
            json!({ "points": 135, "with_6_lines": six_lines, "with_24_adjacent": adj24 })
        },
    );

    ck.run(
        "f_12_maximal_cliques_are_stars",
        "for q = 4 every maximal clique consists of the simplex lines through one point: point stars are cliques and no triangle has three distinct intersection points",
        json!(true),
        || json!(verify_clique_structure(g, u)),
    );

    ck.checks
}

/// The distance classification: counts, regularity, diameter, the
/// stratification of every base, and the spread.
pub fn verify_theorem1(cx: &Q4Context) -> Vec<CheckResult> {
    let u = &cx.universe;
    let g = &cx.graph;
    let mut ck = Checker::new();

    ck.run(
        "t1_01_line_count",
        "there are exactly 162 simplex lines in GF(4)^5",
        json!(162),
        || json!(u.line_count()),
    );
    ck.run(
        "t1_02_point_count",
        "there are exactly 135 simplex points in GF(4)^5",
        json!(135),
        || json!(u.simplex_point_count()),
    );
    ck.run(
        "t1_03_regularity",
        "every vertex of the line graph has degree 25",
        json!({ "vertices": 162, "degrees": [25] }),
        || {
            let degrees: BTreeSet<u32> = g.degrees().iter().copied().collect();
            json!({ "vertices": g.vertex_count(), "degrees": degrees })
        },
    );
    ck.run(
        "t1_04_connected",
        "the line graph is connected",
        json!(true),
        || json!(g.is_connected()),
    );
    ck.run(
        "t1_05_diameter",
        "the line graph has diameter 3",
        json!(3),
        || json!(g.diameter()),
    );
    ck.run(
        "t1_06_edge_count",
        "handshake: 162·25/2 = 2025 edges",
        json!(2025),
        || json!(g.edge_count()),
    );
    ck.run(
        "t1_07_stratification_counts",
        "around the base line: 25 adjacent lines, 130 at distance 2 split 20/90/20 by the number of the six they meet, and 6 at distance 3",
        json!({ "adjacent": 25, "x3": 20, "x1": 90, "x0": 20, "six": 6 }),
        || {
            json!({
                "adjacent": cx.strat.adjacent.len(),
                "x3": cx.strat.x3.len(),
                "x1": cx.strat.x1.len(),
                "x0": cx.strat.x0.len(),
                "six": cx.strat.six.len(),
            })
        },
    );
    ck.run(
        "t1_08_stratification_every_base",
        "the same distance partition (1, 25, 130, 6) with the 20/90/20 split holds for every choice of base line",
        json!({ "bases": 162, "with_canonical_counts": 162 }),
        || {
            let ok = (0..162 as LineId)
                .filter(|&b| stratify(g, b).is_ok())
                .count();
            json!({ "bases": 162, "with_canonical_counts": ok })
        },
    );
    ck.run(
        "t1_09_meet_counts",
        "distance-2 lines meet exactly three, one, or none of the six; never two or more than three",
        json!({ "x3_meets": [3], "x1_meets": [1], "x0_meets": [0] }),
        || {
            let meets = |set: &[LineId]| -> BTreeSet<usize> {
                set.iter()
                    .map(|&l| cx.strat.six.iter().filter(|&&s| g.edge(l, s)).count())
                    .collect()
            };
            json!({
                "x3_meets": meets(&cx.strat.x3),
                "x1_meets": meets(&cx.strat.x1),
                "x0_meets": meets(&cx.strat.x0),
            })
        },
    );
    ck.run(
        "t1_10_spread",
        "the base, the six, and the 20 off-six lines form a spread: 27 pairwise disjoint lines covering all 135 simplex points",
        json!({ "lines": 27, "is_spread": true }),
        || {
            let mut lines = vec![cx.base];
            lines.extend_from_slice(&cx.strat.six);
            lines.extend_from_slice(&cx.strat.x0);
            json!({ "lines": lines.len(), "is_spread": verify_spread(u, &lines) })
        },
    );
    ck.run(
        "t1_11_x3_is_not_a_spread",
        "substituting the transversal stratum for the off-six stratum breaks the spread (transversals meet the six)",
        json!(false),
        || {
            let mut lines = vec![cx.base];
            lines.extend_from_slice(&cx.strat.six);
            lines.extend_from_slice(&cx.strat.x3);
            json!(verify_spread(u, &lines))
        },
    );
    ck.run(
        "t1_12_spread_every_base",
        "the spread construction succeeds for every base line",
        json!({ "bases": 162, "spreads": 162 }),
        || {
            let spreads = (0..162 as LineId)
                .filter(|&b| {
                    let Ok(s) = stratify(g, b) else { return false };
                    let mut lines = vec![b];
                    lines.extend_from_slice(&s.six);
                    lines.extend_from_slice(&s.x0);
                    verify_spread(u, &lines)
                })
                .count();
            json!({ "bases": 162, "spreads": spreads })
        },
    );

    ck.checks
}

/// The symmetry classification: the base stabilizer as S₅, its orbits, the
/// sharply 3-transitive action on the six, and named stabilizer orders.
pub fn verify_theorem2(cx: &Q4Context, gx: &GroupContext) -> Vec<CheckResult> {
    let u = &cx.universe;
    let g = &cx.graph;
    let f = u.field();
    let mut ck = Checker::new();

    ck.run(
        "t2_01_full_group_sizes",
        "GF(4)^5 has 5!·3⁵·2 = 58320 monomial semilinear automorphisms inducing 19440 projective transformations",
        json!({ "monomial": 58320, "projective": 19440 }),
        || {
            json!({
                "monomial": crate::symmetry::enumerate_monomial_maps(f, 5).map_or(0, |m| m.len()),
                "projective": gx.full_group.len(),
            })
        },
    );
    ck.run(
        "t2_02_stabilizer_order",
        "the projective monomial maps preserving a simplex line form a group of order 120",
        json!(120),
        || json!(gx.stabilizer.len()),
    );
    ck.run(
        "t2_03_point_action_is_s5",
        "restriction to the base line's five points is a bijection onto the 120 permutations, with the linear elements numbering 60",
        json!({ "distinct_permutations": 120, "linear": 60 }),
        || {
            let mut perms = BTreeSet::new();
            for el in &gx.stabilizer {
                perms.insert(induced_point_permutation(u, el, cx.base).unwrap());
            }
            json!({
                "distinct_permutations": perms.len(),
                "linear": gx.stabilizer.iter().filter(|e| e.is_linear()).count(),
            })
        },
    );
    ck.run(
        "t2_04_linear_iff_even",
        "a stabilizer element is induced by a linear map iff it permutes the base line's points evenly",
        json!({ "elements": 120, "agree": 120 }),
        || {
            let agree = gx
                .stabilizer
                .iter()
                .filter(|el| {
                    let p = induced_point_permutation(u, el, cx.base).unwrap();
                    el.is_linear() == p.is_even()
                })
                .count();
            json!({ "elements": gx.stabilizer.len(), "agree": agree })
        },
    );
    ck.run(
        "t2_05_orbit_sizes",
        "the stabilizer's orbits on the 162 lines have sizes 1, 6, 10, 15, 20, 20, 30, 60",
        json!([1, 6, 10, 15, 20, 20, 30, 60]),
        || {
            let mut sizes: Vec<usize> = gx.action.orbits().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            json!(sizes)
        },
    );
    ck.run(
        "t2_06_named_orbits",
        "the six, the 20 transversals, and the 20 off-six lines are each a single orbit",
        json!({ "six": true, "x3": true, "x0": true }),
        || {
            let orbit_set = |l: LineId| -> BTreeSet<LineId> {
                gx.action.orbit_of(l).into_iter().collect()
            };
            let as_set = |v: &[LineId]| -> BTreeSet<LineId> { v.iter().copied().collect() };
            json!({
                "six": orbit_set(cx.strat.six[0]) == as_set(&cx.strat.six),
                "x3": orbit_set(cx.strat.x3[0]) == as_set(&cx.strat.x3),
                "x0": orbit_set(cx.strat.x0[0]) == as_set(&cx.strat.x0),
            })
        },
    );
    ck.run(
        "t2_07_sharply_3_transitive",
        "the stabilizer acts sharply 3-transitively on the six distance-3 lines (120 ordered triples, trivial triple stabilizer)",
        json!(true),
        || json!(is_sharply_3_transitive(&gx.action, &cx.strat.six)),
    );

    let x3_set: BTreeSet<LineId> = cx.strat.x3.iter().copied().collect();
    let meets_x3 = |l: LineId| x3_set.iter().any(|&t| g.edge(l, t));

    ck.run(
        "t2_08_adjacent_split",
        "the 25 lines adjacent to the base split into an orbit of 10 (those meeting a transversal) and an orbit of 15 (those meeting none)",
        json!({ "sizes": [10, 15], "ten_meet_transversals": true, "fifteen_avoid_transversals": true }),
        || {
            let adjacent: BTreeSet<LineId> = cx.strat.adjacent.iter().copied().collect();
            let mut orbits: Vec<Vec<LineId>> = gx
                .action
                .orbits()
                .into_iter()
                .filter(|o| adjacent.contains(&o[0]))
                .collect();
            orbits.sort_by_key(Vec::len);
            let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
            let ten_ok = orbits.first().map(|o| o.iter().all(|&l| meets_x3(l)));
            let fifteen_ok = orbits.last().map(|o| o.iter().all(|&l| !meets_x3(l)));
            json!({
                "sizes": sizes,
                "ten_meet_transversals": ten_ok == Some(true) && sizes == vec![10, 15],
                "fifteen_avoid_transversals": fifteen_ok == Some(true) && sizes == vec![10, 15],
            })
        },
    );
    ck.run(
        "t2_09_x1_split",
        "the 90 distance-2 lines meeting one of the six split into an orbit of 60 (those also meeting a transversal in a point off the six) and an orbit of 30 (those whose only transversal contacts are the two through their point on the six)",
        json!({ "sizes": [30, 60], "sixty_meet_off_six": true, "thirty_meet_only_on_six": true }),
        || {
            // Every line of this stratum touches one of the six in a point
            // that two transversals pass through, so plain adjacency to a
            // transversal cannot separate the orbits; contact off the six can.
            let mut on_six = vec![false; u.space().point_count()];
            for &s in &cx.strat.six {
                for &p in u.line(s).unwrap().point_ids() {
                    on_six[p as usize] = true;
                }
            }
            let off_six_contacts = |l: LineId| -> usize {
                let line = u.line(l).unwrap();
                x3_set
                    .iter()
                    .filter(|&&t| g.edge(l, t))
                    .filter(|&&t| {
                        let common = line.common_points(u.line(t).unwrap());
                        !on_six[common[0] as usize]
                    })
                    .count()
            };
            let x1: BTreeSet<LineId> = cx.strat.x1.iter().copied().collect();
            let mut orbits: Vec<Vec<LineId>> = gx
                .action
                .orbits()
                .into_iter()
                .filter(|o| x1.contains(&o[0]))
                .collect();
            orbits.sort_by_key(Vec::len);
            let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
            let sixty_ok = orbits.last().map(|o| o.iter().all(|&l| off_six_contacts(l) > 0));
            let thirty_ok = orbits.first().map(|o| o.iter().all(|&l| off_six_contacts(l) == 0));
            json!({
                "sizes": sizes,
                "sixty_meet_off_six": sixty_ok == Some(true) && sizes == vec![30, 60],
                "thirty_meet_only_on_six": thirty_ok == Some(true) && sizes == vec![30, 60],
            })
        },
    );

    // Stabilizers of the two marked transversals need the table labels.
    let l136 = cx.table.x3_by_name("L_136").and_then(|e| cx.resolve(e));
    let l245 = cx.table.x3_by_name("L_245").and_then(|e| cx.resolve(e));

    ck.run(
        "t2_10_transversal_stabilizer_order",
        "the stabilizer elements also preserving the marked transversal line form a group of order 6",
        json!(6),
        || match l136 {
            Some(l) => json!(setwise_stabilizer(u, &gx.stabilizer, &[l]).unwrap().len()),
            None => json!("unresolved L_136"),
        },
    );
    ck.run(
        "t2_11_pair_stabilizer_order",
        "the stabilizer elements preserving the marked transversal pair as a set form a group of order 12",
        json!(12),
        || match (l136, l245) {
            (Some(a), Some(b)) => {
                json!(setwise_stabilizer(u, &gx.stabilizer, &[a, b]).unwrap().len())
            }
            _ => json!("unresolved pair"),
        },
    );
    ck.run(
        "t2_12_partner_stabilizers_coincide",
        "the two marked transversals have the same stabilizer inside the base stabilizer",
        json!(true),
        || match (l136, l245) {
            (Some(a), Some(b)) => {
                let sa = setwise_stabilizer(u, &gx.stabilizer, &[a]).unwrap();
                let sb = setwise_stabilizer(u, &gx.stabilizer, &[b]).unwrap();
                json!(sa == sb)
            }
            _ => json!("unresolved pair"),
        },
    );
    ck.run(
        "t2_13_orbit_stabilizer_consistency",
        "for every orbit, orbit size times the stabilizer order of a representative equals 120",
        json!({ "orbits": 8, "consistent": 8 }),
        || {
            let orbits = gx.action.orbits();
            let consistent = orbits
                .iter()
                .filter(|o| {
                    let stab = gx.action.stabilizer_indices(o[0]).len();
                    o.len() * stab == 120
                })
                .count();
            json!({ "orbits": orbits.len(), "consistent": consistent })
        },
    );
    ck.run(
        "t2_14_monomial_transitivity",
        "the projectivized monomial linear group acts transitively on simplex points and on simplex lines",
        json!({ "point_orbit": 135, "line_orbit": 162 }),
        || {
            let linear: Vec<&ProjectiveMap> =
                gx.full_group.iter().filter(|g| g.is_linear()).collect();
            let p0 = u.simplex_points()[0];
            let point_orbit: HashSet<PointId> = linear
                .iter()
                .map(|g| g.apply_to_point(u, p0).unwrap())
                .collect();
            let line_orbit: HashSet<LineId> = linear
                .iter()
                .map(|g| g.apply_to_line(u, 0).unwrap())
                .collect();
            json!({ "point_orbit": point_orbit.len(), "line_orbit": line_orbit.len() })
        },
    );

    ck.checks
}

/// Cross-checks of the bundled reference tables against enumeration.
pub fn verify_appendix(cx: &Q4Context) -> Vec<CheckResult> {
    let u = &cx.universe;
    let g = &cx.graph;
    let t = &cx.table;
    let mut ck = Checker::new();

    let six_ids: Option<Vec<LineId>> = cx.six_labels();
    let resolve_section = |entries: &[TableLine]| -> Vec<Option<LineId>> {
        entries.iter().map(|e| cx.resolve(e)).collect()
    };
    let x3_ids = resolve_section(&t.x3);
    let x0_ids = resolve_section(&t.x0);

    ck.run(
        "a_01_entries_are_simplex_lines",
        "all 40 transcribed matrices (20 transversal, 20 off-six) are valid simplex lines found by enumeration",
        json!({ "entries": 40, "valid": 40 }),
        || {
            let valid = x3_ids.iter().chain(x0_ids.iter()).filter(|o| o.is_some()).count();
            json!({ "entries": x3_ids.len() + x0_ids.len(), "valid": valid })
        },
    );
    ck.run(
        "a_02_six_match",
        "the six tabulated distance-3 lines are exactly the computed ones",
        json!(true),
        || match &six_ids {
            Some(ids) => {
                let set: BTreeSet<LineId> = ids.iter().copied().collect();
                let computed: BTreeSet<LineId> = cx.strat.six.iter().copied().collect();
                json!(set == computed && ids.len() == 6)
            }
            None => json!("unresolved six"),
        },
    );
    ck.run(
        "a_03_x3_match",
        "the 20 tabulated transversal lines are exactly the computed distance-2 lines meeting three of the six",
        json!(true),
        || {
            let Some(ids) = x3_ids.iter().copied().collect::<Option<Vec<LineId>>>() else {
                return json!("unresolved entries");
            };
            let set: BTreeSet<LineId> = ids.into_iter().collect();
            let computed: BTreeSet<LineId> = cx.strat.x3.iter().copied().collect();
            json!(set == computed)
        },
    );
    ck.run(
        "a_04_x3_incidence_triples",
        "each tabulated transversal L_ijk meets exactly the lines labelled i, j, k among the six",
        json!({ "entries": 20, "with_matching_triple": 20 }),
        || {
            let Some(six) = &six_ids else {
                return json!("unresolved six");
            };
            let mut good = 0;
            for (entry, id) in t.x3.iter().zip(&x3_ids) {
                let (Some(id), Some(triple)) = (id, triple_of_name(&entry.name)) else {
                    continue;
                };
                let met: BTreeSet<usize> = (0..6)
                    .filter(|&i| g.edge(*id, six[i]))
                    .map(|i| i + 1)
                    .collect();
                let want: BTreeSet<usize> = triple.into_iter().collect();
                if met == want {
                    good += 1;
                }
            }
            json!({ "entries": 20, "with_matching_triple": good })
        },
    );
    ck.run(
        "a_05_bold_rows",
        "the bolded rows of each transversal are exactly its points lying on none of the six",
        json!({ "entries": 20, "matching": 20 }),
        || {
            let Some(six) = &six_ids else {
                return json!("unresolved six");
            };
            let six_lines: Vec<_> = six.iter().map(|&l| u.line(l).unwrap()).collect();
            let mut matching = 0;
            for entry in &t.x3 {
                let off_six: Vec<usize> = entry
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(_, &row)| {
                        let pid = u.space().point_id(row).unwrap();
                        six_lines.iter().all(|l| !l.contains(pid))
                    })
                    .map(|(i, _)| i)
                    .collect();
                if off_six == entry.bold {
                    matching += 1;
                }
            }
            json!({ "entries": 20, "matching": matching })
        },
    );
    ck.run(
        "a_06_x0_match",
        "the 20 tabulated off-six lines are exactly the computed distance-2 lines meeting none of the six",
        json!(true),
        || {
            let Some(ids) = x0_ids.iter().copied().collect::<Option<Vec<LineId>>>() else {
                return json!("unresolved entries");
            };
            let set: BTreeSet<LineId> = ids.into_iter().collect();
            let computed: BTreeSet<LineId> = cx.strat.x0.iter().copied().collect();
            json!(set == computed)
        },
    );
    ck.run(
        "a_07_x0_pairwise_disjoint",
        "the 20 off-six lines are pairwise disjoint",
        json!(true),
        || {
            let Some(ids) = x0_ids.iter().copied().collect::<Option<Vec<LineId>>>() else {
                return json!("unresolved entries");
            };
            for (i, &a) in ids.iter().enumerate() {
                for &b in &ids[i + 1..] {
                    if !u
                        .line(a)
                        .unwrap()
                        .common_points(u.line(b).unwrap())
                        .is_empty()
                    {
                        return json!(false);
                    }
                }
            }
            json!(true)
        },
    );
    ck.run(
        "a_08_pair_rows_partition",
        "the 10 table rows list each complementary pair of index triples exactly once",
        json!({ "rows": 10, "distinct_partitions": 10 }),
        || {
            let mut seen = BTreeSet::new();
            for p in &t.pairs {
                let mut key = [p.first, p.second];
                key.sort();
                seen.insert(key);
            }
            json!({ "rows": t.pairs.len(), "distinct_partitions": seen.len() })
        },
    );
    ck.run(
        "a_09_pair_joins_reproduce_x0",
        "joining row s of L_ijk with row t of L_i'j'k' (and row t with row s) yields the tabulated lines L_st and L_ts, and all 20 off-six lines arise this way",
        json!({ "rows": 10, "joins_match": 10, "covers_x0": true }),
        || {
            let mut joins_match = 0;
            let mut produced = BTreeSet::new();
            for p in &t.pairs {
                let name_a = format!("L_{}{}{}", p.first[0], p.first[1], p.first[2]);
                let name_b = format!("L_{}{}{}", p.second[0], p.second[1], p.second[2]);
                let (Some(ea), Some(eb)) = (t.x3_by_name(&name_a), t.x3_by_name(&name_b)) else {
                    continue;
                };
                let join = |ra: GfVector, rb: GfVector| -> Option<LineId> {
                    let line = u.space().span_line_of_vectors(ra, rb).ok()?;
                    u.line_id(line.point_ids())
                };
                let st = join(ea.rows[p.s], eb.rows[p.t]);
                let ts = join(ea.rows[p.t], eb.rows[p.s]);
                let name_st = format!("L_{}{}", p.s + 1, p.t + 1);
                let name_ts = format!("L_{}{}", p.t + 1, p.s + 1);
                let want_st = t.x0_by_name(&name_st).and_then(|e| cx.resolve(e));
                let want_ts = t.x0_by_name(&name_ts).and_then(|e| cx.resolve(e));
                if let (Some(st), Some(ts)) = (st, ts) {
                    if Some(st) == want_st && Some(ts) == want_ts && st != ts {
                        joins_match += 1;
                        produced.insert(st);
                        produced.insert(ts);
                    }
                }
            }
            let x0: BTreeSet<LineId> = cx.strat.x0.iter().copied().collect();
            json!({
                "rows": t.pairs.len(),
                "joins_match": joins_match,
                "covers_x0": produced == x0,
            })
        },
    );
    ck.run(
        "a_10_bold_rows_are_the_pair_indices",
        "for each pair row the bolded rows of both transversals are exactly {s, t}",
        json!({ "rows": 10, "matching": 10 }),
        || {
            let mut matching = 0;
            for p in &t.pairs {
                let name_a = format!("L_{}{}{}", p.first[0], p.first[1], p.first[2]);
                let name_b = format!("L_{}{}{}", p.second[0], p.second[1], p.second[2]);
                let (Some(ea), Some(eb)) = (t.x3_by_name(&name_a), t.x3_by_name(&name_b)) else {
                    continue;
                };
                let mut want = vec![p.s, p.t];
                want.sort_unstable();
                if ea.bold == want && eb.bold == want {
                    matching += 1;
                }
            }
            json!({ "rows": t.pairs.len(), "matching": matching })
        },
    );

    ck.checks
}

/// The q = 3 grid description and the q = 5 counterexamples.
pub fn verify_small_q(
    u3: &SimplexUniverse,
    g3: &SimplexGraph,
    u5: &SimplexUniverse,
    g5: &SimplexGraph,
) -> Vec<CheckResult> {
    let mut ck = Checker::new();

    ck.run(
        "s3_01_point_count",
        "GF(3)^4 has exactly 16 simplex points",
        json!(16),
        || json!(u3.simplex_point_count()),
    );
    ck.run(
        "s3_02_line_count",
        "GF(3)^4 has exactly 8 simplex lines",
        json!(8),
        || json!(u3.line_count()),
    );
    ck.run(
        "s3_03_lines_per_point",
        "each simplex point lies on exactly two simplex lines",
        json!({ "points": 16, "with_two_lines": 16 }),
        || {
            let two = u3
                .simplex_points()
                .iter()
                .filter(|&&p| u3.lines_through(p).len() == 2)
                .count();
            json!({ "points": 16, "with_two_lines": two })
        },
    );
    ck.run(
        "s3_04_grid",
        "the 8 lines form a grid: the graph is the complete bipartite graph K_{4,4}",
        json!({ "bipartite": true, "parts": [4, 4], "degrees": [4] }),
        || match g3.complete_bipartition() {
            Some((a, b)) => {
                let degrees: BTreeSet<u32> = g3.degrees().iter().copied().collect();
                let mut parts = [a.len(), b.len()];
                parts.sort_unstable();
                json!({ "bipartite": true, "parts": parts, "degrees": degrees })
            }
            None => json!({ "bipartite": false }),
        },
    );
    ck.run(
        "s3_05_quadratic_characterization",
        "a nonzero vector of GF(3)^4 is simplex iff x₁²+x₂²+x₃²+x₄² = 0",
        json!({ "vectors": 81, "agree": 81 }),
        || {
            let f = u3.field();
            let mut agree = 0;
            let mut total = 0;
            let mut coords = [0u8; 4];
            loop {
                let v = GfVector::from_codes(&coords);
                total += 1;
                let mut sum = GfElem::ZERO;
                for x in v.iter() {
                    sum = f.add(sum, f.mul(x, x));
                }
                let quadratic = !v.is_zero() && sum.is_zero();
                if quadratic == is_simplex_vector(f, &v, 2) {
                    agree += 1;
                }
                let mut i = 4;
                while i > 0 && coords[i - 1] == 2 {
                    coords[i - 1] = 0;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                coords[i - 1] += 1;
            }
            json!({ "vectors": total, "agree": agree })
        },
    );

    ck.run(
        "s5_01_point_count",
        "GF(5)^6 has 1536 simplex points (brute-force scan over all 15625 vectors)",
        json!({ "enumerated": 1536, "scan": 1536 }),
        || {
            let f = u5.field();
            let mut reps = HashSet::new();
            let mut coords = [0u8; 6];
            loop {
                let v = GfVector::from_codes(&coords);
                if v.zero_count() == 1 {
                    reps.insert(crate::projective::ProjPoint::normalize(f, v).unwrap());
                }
                let mut i = 6;
                while i > 0 && coords[i - 1] == 4 {
                    coords[i - 1] = 0;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                coords[i - 1] += 1;
            }
            json!({ "enumerated": u5.simplex_point_count(), "scan": reps.len() })
        },
    );
    ck.run(
        "s5_02_line_count",
        "GF(5)^6 has 6!·4⁶/((25−1)(25−5)) = 6144 simplex lines",
        json!({ "enumerated": 6144, "formula": 6144 }),
        || json!({ "enumerated": u5.line_count(), "formula": line_count_formula(5) }),
    );
    ck.run(
        "s5_03_regularity",
        "the q = 5 line graph is (q+1)·((q−1)!−1) = 138-regular on 6144 vertices",
        json!({ "vertices": 6144, "degrees": [138] }),
        || {
            let degrees: BTreeSet<u32> = g5.degrees().iter().copied().collect();
            json!({ "vertices": g5.vertex_count(), "degrees": degrees })
        },
    );
    ck.run(
        "s5_04_star_clique_counterexample",
        "the simplex vectors (0,1,1,1,1,1), (1,0,1,2,4,3), (4,3,1,4,2,0) span three pairwise adjacent simplex lines with three distinct intersection points",
        json!({ "lines_simplex": true, "pairwise_adjacent": true, "distinct_intersections": true }),
        || {
            let f = u5.field();
            let x = GfVector::parse("011111", f).unwrap();
            let y = GfVector::parse("101243", f).unwrap();
            let z = GfVector::parse("431420", f).unwrap();
            let mut line_ids = Vec::new();
            for (a, b) in [(x, y), (x, z), (y, z)] {
                let Ok(span) = u5.space().span_line_of_vectors(a, b) else {
                    return json!({ "lines_simplex": false });
                };
                match u5.line_id(span.point_ids()) {
                    Some(id) => line_ids.push(id),
                    None => return json!({ "lines_simplex": false }),
                }
            }
            let adjacent = g5.edge(line_ids[0], line_ids[1])
                && g5.edge(line_ids[0], line_ids[2])
                && g5.edge(line_ids[1], line_ids[2]);
            let violation =
                crate::graph::triangle_intersections(u5, line_ids[0], line_ids[1], line_ids[2]);
            json!({
                "lines_simplex": true,
                "pairwise_adjacent": adjacent,
                "distinct_intersections": violation.is_some(),
            })
        },
    );
    ck.run(
        "s5_05_hyperplane_witness",
        "for q = 5 the adjacency hyperplane of ⟨0,1,1,1,1,1⟩ contains a non-adjacent simplex point with a different zero coordinate",
        json!(true),
        || {
            let f = u5.field();
            let p = u5
                .space()
                .point_id(GfVector::parse("011111", f).unwrap())
                .unwrap();
            let witnesses = u5.nonadjacent_in_hyperplane(p).unwrap();
            json!(witnesses.iter().any(|&t| {
                u5.space().points()[t as usize].single_zero() != Some(0)
            }))
        },
    );
    ck.run(
        "s5_06_repeated_sum_witness",
        "GF(5) has four nonzero elements with a repetition summing to zero (so the distinctness criterion fails)",
        json!(true),
        || {
            let f = u5.field();
            for a in f.nonzero_elements() {
                for b in f.nonzero_elements() {
                    for c in f.nonzero_elements() {
                        let d = f.neg(f.add(f.add(a, b), c));
                        if d.is_zero() {
                            continue;
                        }
                        let mut all = [a.0, b.0, c.0, d.0];
                        all.sort_unstable();
                        if all.windows(2).any(|w| w[0] == w[1]) {
                            return json!(true);
                        }
                    }
                }
            }
            json!(false)
        },
    );

    ck.checks
}

/// Suite selection for reports and the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Foundations,
    Theorem1,
    Theorem2,
    Appendix,
    SmallQ,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Foundations => "foundations",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Appendix => "appendix",
            Suite::SmallQ => "smallq",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "foundations" => Ok(Suite::Foundations),
            "theorem1" => Ok(Suite::Theorem1),
            "theorem2" => Ok(Suite::Theorem2),
            "appendix" => Ok(Suite::Appendix),
            "smallq" => Ok(Suite::SmallQ),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown suite '{other}'"),
            }),
        }
    }
}

/// Runs a suite, building whatever contexts it needs. `table` overrides the
/// embedded reference tables (used when verifying an external data file).
pub fn run_suite(suite: Suite, table: Option<AppendixTable>) -> Result<Report> {
    let q4 = |table: Option<AppendixTable>| -> Result<Q4Context> {
        match table {
            Some(t) => Q4Context::build_with_table(t),
            None => Q4Context::build(),
        }
    };
    let checks = match suite {
        Suite::Foundations => verify_foundations(&q4(table)?),
        Suite::Theorem1 => verify_theorem1(&q4(table)?),
        Suite::Theorem2 => {
            let cx = q4(table)?;
            let gx = GroupContext::build(&cx.universe, cx.base)?;
            verify_theorem2(&cx, &gx)
        }
        Suite::Appendix => verify_appendix(&q4(table)?),
        Suite::SmallQ => {
            let u3 = SimplexUniverse::for_order(3)?;
            let g3 = SimplexGraph::build(&u3);
            let u5 = SimplexUniverse::for_order(5)?;
            let g5 = SimplexGraph::build(&u5);
            verify_small_q(&u3, &g3, &u5, &g5)
        }
        Suite::All => {
            let cx = q4(table)?;
            let gx = GroupContext::build(&cx.universe, cx.base)?;
            let mut checks = verify_foundations(&cx);
            checks.extend(verify_theorem1(&cx));
            checks.extend(verify_theorem2(&cx, &gx));
            checks.extend(verify_appendix(&cx));
            let u3 = SimplexUniverse::for_order(3)?;
            let g3 = SimplexGraph::build(&u3);
            let u5 = SimplexUniverse::for_order(5)?;
            let g5 = SimplexGraph::build(&u5);
            checks.extend(verify_small_q(&u3, &g3, &u5, &g5));
            checks
        }
    };
    Ok(Report::new(suite.name(), checks))
}
