//! Class-membership tests with certificates.
//!
//! Each predicate rejects the graph on zero vertices with
//! [`SolverError::EmptyGraph`]. Where a class has both a definition and a
//! cheaper characterization, both are exposed so they can be cross-checked.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    self, adjacency_masks, full_mask, mask_to_set, require_vertices, Matching, SolverBudget, SolverError,
};

/// `alpha(G) + mu(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph, budget: &SolverBudget) -> Result<bool, SolverError> {
    require_vertices(g)?;
    let (a, _) = invariants::alpha(g, budget)?;
    Ok(a + invariants::mu(g).0 == g.order())
}

/// Outcome of the well-covered test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WellCovered {
    Yes {
        alpha: usize,
    },
    /// `smaller` is maximal stable with fewer than `alpha` vertices.
    No {
        alpha: usize,
        smaller: VertexSet,
    },
}

impl WellCovered {
    pub fn holds(&self) -> bool {
        matches!(self, WellCovered::Yes { .. })
    }

    pub fn alpha(&self) -> usize {
        match *self {
            WellCovered::Yes { alpha } | WellCovered::No { alpha, .. } => alpha,
        }
    }
}

/// Every maximal stable set is maximum.
pub fn is_well_covered(g: &Graph, budget: &SolverBudget) -> Result<WellCovered, SolverError> {
    require_vertices(g)?;
    let (alpha, _) = invariants::alpha(g, budget)?;
    well_covered_given_alpha(g, alpha, budget)
}

pub(crate) fn well_covered_given_alpha(
    g: &Graph,
    alpha: usize,
    budget: &SolverBudget,
) -> Result<WellCovered, SolverError> {
    Ok(match invariants::smaller_maximal_stable_set(g, alpha, budget)? {
        None => WellCovered::Yes { alpha },
        Some(smaller) => WellCovered::No { alpha, smaller },
    })
}

/// Well-covered, no isolated vertices, and `|V| = 2 alpha`.
pub fn is_very_well_covered(g: &Graph, budget: &SolverBudget) -> Result<bool, SolverError> {
    let wc = is_well_covered(g, budget)?;
    Ok(wc.holds() && g.isolated_vertices().is_empty() && g.order() == 2 * wc.alpha())
}

/// `alpha(G) = alpha(G^2)`.
pub fn is_square_stable(g: &Graph, budget: &SolverBudget) -> Result<bool, SolverError> {
    require_vertices(g)?;
    let (a, _) = invariants::alpha(g, budget)?;
    let (a2, _) = invariants::alpha(&g.square(), budget)?;
    Ok(a == a2)
}

/// Scans the maximum stable sets of `G` in lexicographic order for one whose
/// members are pairwise at distance at least 3. Works on `G` and its
/// distance matrix only; the second power is never built.
pub fn has_distance3_maximum_stable_set(g: &Graph, budget: &SolverBudget) -> Result<Option<VertexSet>, SolverError> {
    require_vertices(g)?;
    let adj = adjacency_masks(g)?;
    let all = full_mask(g.order());
    let (a, _) = invariants::alpha(g, budget)?;
    let dist = g.distances();
    let mut meter = budget.meter();
    let mut found = None;
    invariants::visit_maximum_stable(&adj, all, a, &mut meter, &mut |m| {
        let members = invariants::bits(m).collect::<Vec<_>>();
        let spread = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| dist.at_least(u, v, 3)));
        if spread {
            found = Some(m);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found.map(|m| mask_to_set(g.order(), m)))
}

/// Pendant vertices with one representative (the smaller id) per `K_2`
/// component. This is the stable set a pendant perfect matching leaves
/// behind, and its size is what "number of pendant vertices" means in the
/// characterizations checked by the harness.
pub fn pendant_stable_set(g: &Graph) -> VertexSet {
    let mut s = g.pendant_vertices();
    for &(u, v) in g.edges() {
        if g.degree(u) == 1 && g.degree(v) == 1 {
            s.remove(v);
        }
    }
    s
}

/// Pairs every pendant vertex with its neighbor and returns the resulting
/// edges iff they form a perfect matching. Linear time.
pub fn has_pendant_perfect_matching(g: &Graph) -> Result<Option<Matching>, SolverError> {
    require_vertices(g)?;
    let n = g.order();
    if n % 2 == 1 {
        return Ok(None);
    }
    let mut covered = vec![false; n];
    let mut edges = Vec::with_capacity(n / 2);
    for v in pendant_stable_set(g).iter() {
        let w = g.neighbors(v)[0];
        if covered[v] || covered[w] {
            return Ok(None);
        }
        covered[v] = true;
        covered[w] = true;
        edges.push((v, w));
    }
    Ok((2 * edges.len() == n).then(|| Matching::new(edges)))
}

/// First vertex that is neither simplicial nor adjacent to a simplicial vertex.
fn unreached_by_simplicial(g: &Graph) -> Option<usize> {
    let simp = invariants::simplicial_vertices(g);
    (0..g.order()).find(|&v| !simp.contains(v) && !g.neighbors(v).iter().any(|&w| simp.contains(w)))
}

/// Every vertex is simplicial or adjacent to a simplicial vertex.
pub fn is_simplicial_graph(g: &Graph) -> Result<bool, SolverError> {
    require_vertices(g)?;
    Ok(unreached_by_simplicial(g).is_none())
}

/// The simplexes partition the vertex set.
pub fn vertex_in_exactly_one_simplex(g: &Graph) -> Result<bool, SolverError> {
    require_vertices(g)?;
    let mut hits = vec![0usize; g.order()];
    for simplex in invariants::simplexes(g)? {
        for v in simplex.iter() {
            hits[v] += 1;
        }
    }
    Ok(hits.iter().all(|&h| h == 1))
}

/// A stable set and a matching whose sizes add up to the order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoenigEgervaryCertificate {
    pub stable_set: VertexSet,
    pub matching: Matching,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub koenig_egervary: Option<KoenigEgervaryCertificate>,
    pub smaller_maximal_stable_set: Option<VertexSet>,
    pub distance3_maximum_stable_set: Option<VertexSet>,
    pub pendant_perfect_matching: Option<Matching>,
    pub simplicial_vertices: Option<VertexSet>,
    pub unreached_vertex: Option<usize>,
}

/// Class flags of one graph. `None` marks a flag whose solver ran out of
/// budget; its name is also listed in `exhausted`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionProfile {
    pub n: usize,
    pub alpha: Option<usize>,
    pub alpha_square: Option<usize>,
    pub mu: usize,
    pub ke: Option<bool>,
    pub well_covered: Option<bool>,
    pub very_well_covered: Option<bool>,
    pub square_stable: Option<bool>,
    pub simplicial: bool,
    pub pendant_perfect_matching: bool,
    pub certificates: Certificates,
    pub exhausted: Vec<String>,
}

impl RecognitionProfile {
    /// Re-validates every certificate that backs a decided flag.
    pub fn certify(&self, g: &Graph) -> Result<(), String> {
        let c = &self.certificates;
        if self.ke == Some(true) {
            let ke = c.koenig_egervary.as_ref().ok_or("ke flag without certificate")?;
            if !g.is_stable(&ke.stable_set)
                || !ke.matching.is_valid_in(g)
                || ke.stable_set.len() + ke.matching.len() != g.order()
            {
                return Err("invalid Koenig-Egervary certificate".into());
            }
        }
        if self.well_covered == Some(false) {
            let s = c
                .smaller_maximal_stable_set
                .as_ref()
                .ok_or("missing smaller maximal set")?;
            if !invariants::is_maximal_stable(g, s) || Some(s.len()) >= self.alpha {
                return Err("invalid well-covered refutation".into());
            }
        }
        if self.square_stable == Some(true) {
            let s = c
                .distance3_maximum_stable_set
                .as_ref()
                .ok_or("missing distance-3 set")?;
            let d = g.distances();
            let members = s.to_vec();
            let spread = members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| d.at_least(u, v, 3)));
            if !spread || !g.is_stable(s) || Some(s.len()) != self.alpha {
                return Err("invalid distance-3 certificate".into());
            }
        }
        if self.pendant_perfect_matching {
            let m = c.pendant_perfect_matching.as_ref().ok_or("missing pendant matching")?;
            if !m.is_perfect_in(g) || !m.edges().iter().all(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1) {
                return Err("invalid pendant perfect matching".into());
            }
        }
        if !self.simplicial && c.unreached_vertex.is_none() {
            return Err("missing simplicial refutation".into());
        }
        Ok(())
    }
}

fn absorb<T>(r: Result<T, SolverError>, field: &str, exhausted: &mut Vec<String>) -> Result<Option<T>, SolverError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(SolverError::BudgetExhausted { .. }) => {
            exhausted.push(field.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Computes every flag. A pendant perfect matching settles the
/// Koenig-Egervary and square-stable flags without any exponential solve.
pub fn recognize(g: &Graph, budget: &SolverBudget) -> Result<RecognitionProfile, SolverError> {
    profile(g, budget, true)
}

/// Same flags, each computed from its definition only.
pub fn recognize_by_definition(g: &Graph, budget: &SolverBudget) -> Result<RecognitionProfile, SolverError> {
    profile(g, budget, false)
}

fn profile(g: &Graph, budget: &SolverBudget, shortcuts: bool) -> Result<RecognitionProfile, SolverError> {
    require_vertices(g)?;
    let n = g.order();
    let mut exhausted = Vec::new();
    let mut certs = Certificates::default();

    let pendant_pm = has_pendant_perfect_matching(g)?;
    let simp = invariants::simplicial_vertices(g);
    let unreached = unreached_by_simplicial(g);
    certs.simplicial_vertices = Some(simp);
    certs.unreached_vertex = unreached;
    let (mu, matching) = invariants::mu(g);

    let (alpha, alpha_square, ke, square_stable);
    if let (true, Some(pm)) = (shortcuts, &pendant_pm) {
        let s0 = pendant_stable_set(g);
        alpha = Some(n / 2);
        alpha_square = Some(n / 2);
        ke = Some(true);
        square_stable = Some(true);
        certs.koenig_egervary = Some(KoenigEgervaryCertificate {
            stable_set: s0.clone(),
            matching: pm.clone(),
        });
        certs.distance3_maximum_stable_set = Some(s0);
    } else {
        let a = absorb(invariants::alpha(g, budget), "alpha", &mut exhausted)?;
        let a2 = absorb(invariants::alpha(&g.square(), budget), "alpha_square", &mut exhausted)?;
        alpha = a.as_ref().map(|(k, _)| *k);
        alpha_square = a2.as_ref().map(|(k, _)| *k);
        ke = alpha.map(|k| k + mu == n);
        if ke == Some(true) {
            let (_, s) = a.clone().expect("alpha known");
            certs.koenig_egervary = Some(KoenigEgervaryCertificate {
                stable_set: s,
                matching: matching.clone(),
            });
        }
        if shortcuts {
            square_stable = alpha.zip(alpha_square).map(|(x, y)| x == y);
            if square_stable == Some(true) {
                // a maximum stable set of the square with alpha(G) members
                certs.distance3_maximum_stable_set = a2.map(|(_, s)| s);
            }
        } else {
            let d3 = absorb(
                has_distance3_maximum_stable_set(g, budget),
                "square_stable",
                &mut exhausted,
            )?;
            square_stable = d3.as_ref().map(Option::is_some);
            certs.distance3_maximum_stable_set = d3.flatten();
        }
    }

    let wc = match alpha {
        Some(a) => absorb(well_covered_given_alpha(g, a, budget), "well_covered", &mut exhausted)?,
        None => {
            exhausted.push("well_covered".into());
            None
        }
    };
    if let Some(WellCovered::No { smaller, .. }) = &wc {
        certs.smaller_maximal_stable_set = Some(smaller.clone());
    }
    let well_covered = wc.as_ref().map(WellCovered::holds);
    let very_well_covered = well_covered
        .zip(alpha)
        .map(|(w, a)| w && g.isolated_vertices().is_empty() && n == 2 * a);
    if very_well_covered.is_none() {
        exhausted.push("very_well_covered".into());
    }
    certs.pendant_perfect_matching = pendant_pm.clone();

    Ok(RecognitionProfile {
        n,
        alpha,
        alpha_square,
        mu,
        ke,
        well_covered,
        very_well_covered,
        square_stable,
        simplicial: unreached.is_none(),
        pendant_perfect_matching: pendant_pm.is_some(),
        certificates: certs,
        exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn b() -> SolverBudget {
        SolverBudget::default()
    }

    #[test]
    fn koenig_egervary_examples() {
        assert!(!is_koenig_egervary(&fixtures::not_ke_triangle_with_tail().graph, &b()).unwrap());
        assert!(is_koenig_egervary(&Graph::path(5), &b()).unwrap());
        assert!(!is_koenig_egervary(&fixtures::apex_over_path().graph, &b()).unwrap());
        assert!(is_koenig_egervary(&Graph::complete(1), &b()).unwrap());
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(&Graph::cycle(4), &b()).unwrap().holds());
        assert_eq!(
            is_well_covered(&Graph::path(3), &b()).unwrap(),
            WellCovered::No {
                alpha: 2,
                smaller: VertexSet::from_members(3, [1])
            }
        );
        assert!(is_well_covered(&Graph::path(4), &b()).unwrap().holds());
    }

    #[test]
    fn very_well_covered_examples() {
        assert!(is_very_well_covered(&Graph::path(4), &b()).unwrap());
        let g = fixtures::very_well_covered_bipartite().graph;
        assert!(is_very_well_covered(&g, &b()).unwrap());
        assert!(!is_square_stable(&g, &b()).unwrap());
        assert!(!is_very_well_covered(&Graph::complete(3), &b()).unwrap());
        // K1 has an isolated vertex
        assert!(!is_very_well_covered(&Graph::complete(1), &b()).unwrap());
    }

    #[test]
    fn square_stable_examples() {
        assert!(is_square_stable(&Graph::path(4), &b()).unwrap());
        for leaves in 2..7 {
            assert!(!is_square_stable(&Graph::star(leaves), &b()).unwrap());
        }
        assert!(!is_square_stable(&Graph::path(6), &b()).unwrap());
        assert!(!is_square_stable(&Graph::cycle(4), &b()).unwrap());
        assert!(is_square_stable(&Graph::complete(1), &b()).unwrap());
    }

    #[test]
    fn distance3_examples() {
        assert_eq!(
            has_distance3_maximum_stable_set(&Graph::path(4), &b())
                .unwrap()
                .unwrap()
                .to_vec(),
            vec![0, 3]
        );
        assert_eq!(has_distance3_maximum_stable_set(&Graph::cycle(4), &b()).unwrap(), None);
        assert_eq!(
            has_distance3_maximum_stable_set(&Graph::complete(4), &b())
                .unwrap()
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn pendant_matching_examples() {
        let m = has_pendant_perfect_matching(&Graph::path(4)).unwrap().unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(has_pendant_perfect_matching(&Graph::path(6)).unwrap(), None);
        assert_eq!(has_pendant_perfect_matching(&Graph::cycle(4)).unwrap(), None);
        assert_eq!(
            has_pendant_perfect_matching(&Graph::complete(2))
                .unwrap()
                .unwrap()
                .edges(),
            &[(0, 1)]
        );
        assert_eq!(has_pendant_perfect_matching(&Graph::complete(1)).unwrap(), None);
        assert_eq!(
            has_pendant_perfect_matching(&Graph::empty(0)),
            Err(SolverError::EmptyGraph)
        );
        assert_eq!(pendant_stable_set(&Graph::complete(2)).to_vec(), vec![0]);
    }

    #[test]
    fn simplicial_graph_and_simplex_partition() {
        assert!(is_simplicial_graph(&Graph::path(4)).unwrap());
        assert!(!is_simplicial_graph(&Graph::cycle(4)).unwrap());
        assert!(is_simplicial_graph(&Graph::complete(5)).unwrap());
        assert!(vertex_in_exactly_one_simplex(&Graph::path(4)).unwrap());
        assert!(!vertex_in_exactly_one_simplex(&Graph::cycle(4)).unwrap());
        assert!(vertex_in_exactly_one_simplex(&Graph::complete(5)).unwrap());
    }

    #[test]
    fn profiles() {
        let c4 = recognize(&Graph::cycle(4), &b()).unwrap();
        assert_eq!(
            (c4.ke, c4.well_covered, c4.very_well_covered, c4.square_stable),
            (Some(true), Some(true), Some(true), Some(false))
        );
        let p4 = recognize(&Graph::path(4), &b()).unwrap();
        assert_eq!(
            (
                p4.ke,
                p4.well_covered,
                p4.very_well_covered,
                p4.square_stable,
                p4.simplicial,
                p4.pendant_perfect_matching
            ),
            (Some(true), Some(true), Some(true), Some(true), true, true)
        );
        let g = fixtures::unique_matching_not_only_pendant().graph;
        let p = recognize(&g, &b()).unwrap();
        assert_eq!((p.square_stable, p.ke), (Some(true), Some(false)));
        for g in [Graph::cycle(4), Graph::path(4), g, Graph::complete(1)] {
            let fast = recognize(&g, &b()).unwrap();
            let def = recognize_by_definition(&g, &b()).unwrap();
            fast.certify(&g).unwrap();
            def.certify(&g).unwrap();
            assert_eq!(
                (fast.ke, fast.well_covered, fast.very_well_covered, fast.square_stable),
                (def.ke, def.well_covered, def.very_well_covered, def.square_stable)
            );
        }
    }

    #[test]
    fn exhaustion_is_reported_per_flag() {
        let tiny = SolverBudget::new(2, 10.0).unwrap();
        let p = recognize(&Graph::cycle(9), &tiny).unwrap();
        assert_eq!(p.ke, None);
        assert!(p.exhausted.contains(&"alpha".to_string()));
        assert!(!p.pendant_perfect_matching);
        assert_eq!(p.mu, 4);
    }
}
