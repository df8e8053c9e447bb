use std::collections::BTreeMap;
use std::fmt;

use super::facts::Facts;
use crate::graph::{Girth, Graph, VertexSet};
use crate::invariants::{self, SolverError};
use crate::recognizers;

/// Truth values and invariant values gathered while evaluating a claim on
/// one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Evaluation {
    pub holds: bool,
    pub conditions: BTreeMap<String, bool>,
    pub values: BTreeMap<String, usize>,
}

impl Evaluation {
    fn new() -> Evaluation {
        Evaluation::default()
    }

    fn cond(mut self, name: &str, value: bool) -> Self {
        self.conditions.insert(name.to_string(), value);
        self
    }

    fn value(mut self, name: &str, value: usize) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    /// The claim is that all recorded conditions are equivalent.
    fn equivalent(mut self) -> Self {
        let mut it = self.conditions.values();
        let first = it.next().copied();
        self.holds = it.all(|&c| Some(c) == first);
        self
    }

    /// The claim is carried by the single condition `key`.
    fn all_true_on(mut self, key: &str) -> Self {
        self.holds = self.conditions[key];
        self
    }

    /// The claim is that every recorded condition is true.
    fn all_true(mut self) -> Self {
        self.holds = self.conditions.values().all(|&c| c);
        self
    }
}

/// A statement about graphs, restricted to the graphs satisfying its
/// hypotheses.
pub trait Claim: Sync {
    fn id(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Hypothesis filter. Must be decided before `evaluate` is called.
    fn applies(&self, f: &Facts) -> Result<bool, SolverError>;
    fn evaluate(&self, f: &Facts) -> Result<Evaluation, SolverError>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    NotApplicable,
    Holds,
    Violated(Evaluation),
}

pub fn check(claim: &dyn Claim, f: &Facts) -> Result<Outcome, SolverError> {
    if !claim.applies(f)? {
        return Ok(Outcome::NotApplicable);
    }
    let e = claim.evaluate(f)?;
    Ok(if e.holds { Outcome::Holds } else { Outcome::Violated(e) })
}

/// The statements checked by the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    InequalityChain,
    SimplexPartition,
    SquareMaximumSets,
    PendantMatching,
    KoenigEgervarySquareStable,
    Trees,
    AlphaAtMostMu,
    SquareKoenigEgervary,
    PendantCount,
    KoenigEgervaryDichotomy,
    GirthSix,
    VeryWellCovered,
    ConnectedKoenigEgervary,
    NeighborhoodDeletion,
    Componentwise,
}

impl Statement {
    pub const ALL: [Statement; 15] = [
        Statement::InequalityChain,
        Statement::SimplexPartition,
        Statement::SquareMaximumSets,
        Statement::PendantMatching,
        Statement::KoenigEgervarySquareStable,
        Statement::Trees,
        Statement::AlphaAtMostMu,
        Statement::SquareKoenigEgervary,
        Statement::PendantCount,
        Statement::KoenigEgervaryDichotomy,
        Statement::GirthSix,
        Statement::VeryWellCovered,
        Statement::ConnectedKoenigEgervary,
        Statement::NeighborhoodDeletion,
        Statement::Componentwise,
    ];

    pub fn from_id(id: &str) -> Option<Statement> {
        Statement::ALL.into_iter().find(|s| s.id() == id)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The stable sets that pick every pendant vertex outside `K_2` components
/// and one endpoint of every `K_2` component, in lexicographic order.
pub fn pendant_transversals(g: &Graph) -> Vec<VertexSet> {
    let base = recognizers::pendant_stable_set(g);
    let k2: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
        .collect();
    let mut out = Vec::with_capacity(1 << k2.len());
    for choice in 0u64..1 << k2.len() {
        let mut s = base.clone();
        for (i, &(u, v)) in k2.iter().enumerate() {
            if choice >> i & 1 == 1 {
                s.remove(u);
                s.insert(v);
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

fn ke_with_alpha_pendants(f: &Facts) -> Result<bool, SolverError> {
    Ok(f.ke()? && f.pendant_count() == f.alpha()?)
}

impl Claim for Statement {
    fn id(&self) -> &'static str {
        match self {
            Statement::InequalityChain => "inequality-chain",
            Statement::SimplexPartition => "simplex-partition",
            Statement::SquareMaximumSets => "square-maximum-sets",
            Statement::PendantMatching => "pendant-matching",
            Statement::KoenigEgervarySquareStable => "ke-square-stable",
            Statement::Trees => "trees",
            Statement::AlphaAtMostMu => "alpha-at-most-mu",
            Statement::SquareKoenigEgervary => "square-ke",
            Statement::PendantCount => "pendant-count",
            Statement::KoenigEgervaryDichotomy => "ke-dichotomy",
            Statement::GirthSix => "girth-six",
            Statement::VeryWellCovered => "very-well-covered",
            Statement::ConnectedKoenigEgervary => "connected-ke-well-covered",
            Statement::NeighborhoodDeletion => "neighborhood-deletion",
            Statement::Componentwise => "componentwise",
        }
    }

    fn summary(&self) -> &'static str {
        match self {
            Statement::InequalityChain => "alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta",
            Statement::SimplexPartition => {
                "connected G: simplex partition, square-stable, theta(G)=theta(G^2), six-way equality, \
                 simplicial and well-covered, distance-3 maximum stable set are equivalent"
            }
            Statement::SquareMaximumSets => {
                "connected square-stable G: v lies in some maximum stable set of G^2 iff simplicial; \
                 v lies in all of them iff it is the only simplicial vertex of its simplex"
            }
            Statement::PendantMatching => {
                "pendant perfect matching => square-stable, and the maximum stable sets of G^2 are \
                 exactly the pendant transversals"
            }
            Statement::KoenigEgervarySquareStable => {
                "connected KE G, n >= 2: square-stable <=> pendant perfect matching <=> very \
                 well-covered with alpha pendant vertices"
            }
            Statement::Trees => {
                "trees, n >= 2: well-covered <=> very well-covered <=> pendant perfect matching <=> square-stable"
            }
            Statement::AlphaAtMostMu => "connected square-stable G, n >= 2: alpha <= mu",
            Statement::SquareKoenigEgervary => {
                "connected G with KE square, n >= 2: square-stable <=> KE with a perfect matching"
            }
            Statement::PendantCount => {
                "connected G, n >= 2: square-stable and very well-covered <=> KE with alpha pendant vertices"
            }
            Statement::KoenigEgervaryDichotomy => "connected square-stable G: G is KE <=> G^2 is KE",
            Statement::GirthSix => {
                "connected G of girth >= 6, not C7 or K1: well-covered <=> pendant perfect matching <=> very \
                 well-covered <=> KE with alpha pendant vertices and empty core <=> KE square-stable"
            }
            Statement::VeryWellCovered => "n >= 2, no isolated vertices: very well-covered <=> well-covered KE",
            Statement::ConnectedKoenigEgervary => "connected KE G, n >= 2: well-covered <=> very well-covered",
            Statement::NeighborhoodDeletion => {
                "non-complete well-covered G: every G - N[v] is well-covered with stability number alpha - 1"
            }
            Statement::Componentwise => "disconnected G: square-stable <=> every component square-stable",
        }
    }

    fn applies(&self, f: &Facts) -> Result<bool, SolverError> {
        let n = f.n();
        if n == 0 {
            return Ok(false);
        }
        Ok(match self {
            Statement::InequalityChain => true,
            Statement::PendantMatching => f.pendant_perfect_matching().is_some(),
            Statement::SimplexPartition => f.connected(),
            Statement::SquareMaximumSets | Statement::KoenigEgervaryDichotomy => f.connected() && f.square_stable()?,
            Statement::KoenigEgervarySquareStable | Statement::ConnectedKoenigEgervary => {
                n >= 2 && f.connected() && f.ke()?
            }
            Statement::Trees => n >= 2 && f.is_tree(),
            Statement::AlphaAtMostMu => n >= 2 && f.connected() && f.square_stable()?,
            Statement::SquareKoenigEgervary => n >= 2 && f.connected() && f.square_ke()?,
            Statement::PendantCount => n >= 2 && f.connected(),
            Statement::GirthSix => {
                let g = f.graph();
                f.connected() && f.girth().at_least(6) && n != 1 && !g.is_cycle_of_length(7)
            }
            Statement::VeryWellCovered => n >= 2 && f.graph().isolated_vertices().is_empty(),
            Statement::NeighborhoodDeletion => !f.graph().is_complete() && f.well_covered()?,
            Statement::Componentwise => !f.connected(),
        })
    }

    fn evaluate(&self, f: &Facts) -> Result<Evaluation, SolverError> {
        Ok(match self {
            Statement::InequalityChain => {
                let (a2, t2, gm, i, a, t) = (
                    f.alpha_sq()?,
                    f.theta_sq()?,
                    f.gamma()?,
                    f.ind_dom()?,
                    f.alpha()?,
                    f.theta()?,
                );
                Evaluation::new()
                    .value("alpha_square", a2)
                    .value("theta_square", t2)
                    .value("gamma", gm)
                    .value("ind_dom", i)
                    .value("alpha", a)
                    .value("theta", t)
                    .cond("alpha_square<=theta_square", a2 <= t2)
                    .cond("theta_square<=gamma", t2 <= gm)
                    .cond("gamma<=ind_dom", gm <= i)
                    .cond("ind_dom<=alpha", i <= a)
                    .cond("alpha<=theta", a <= t)
                    .all_true()
            }
            Statement::SimplexPartition => {
                let (a2, t2, gm, i, a, t) = (
                    f.alpha_sq()?,
                    f.theta_sq()?,
                    f.gamma()?,
                    f.ind_dom()?,
                    f.alpha()?,
                    f.theta()?,
                );
                let six = [a2, t2, gm, i, a, t].windows(2).all(|w| w[0] == w[1]);
                Evaluation::new()
                    .value("alpha_square", a2)
                    .value("theta_square", t2)
                    .value("gamma", gm)
                    .value("ind_dom", i)
                    .value("alpha", a)
                    .value("theta", t)
                    .cond("each_vertex_in_one_simplex", f.simplex_partition()?)
                    .cond("square_stable", a == a2)
                    .cond("theta_equals_theta_square", t == t2)
                    .cond("six_invariants_equal", six)
                    .cond("simplicial_and_well_covered", f.simplicial_graph() && f.well_covered()?)
                    .cond("distance3_maximum_stable_set", f.distance3_maximum_stable_set()?)
                    .equivalent()
            }
            Statement::SquareMaximumSets => {
                let omega = f.omega_sq()?;
                let simp = f.simplicial_vertices();
                let g = f.graph();
                let mut e = Evaluation::new()
                    .value("square_maximum_sets", omega.len())
                    .cond("vertex_rules_hold", true);
                for v in 0..f.n() {
                    let in_some = omega.iter().any(|s| s.contains(v));
                    let in_all = omega.iter().all(|s| s.contains(v));
                    let simplicial = simp.contains(v);
                    let sole = simplicial && g.closed_neighborhood(v).iter().filter(|&w| simp.contains(w)).count() == 1;
                    if in_some != simplicial || in_all != sole {
                        e = e
                            .value("vertex", v)
                            .cond("in_some_square_maximum_set", in_some)
                            .cond("simplicial", simplicial)
                            .cond("in_square_core", in_all)
                            .cond("sole_simplicial_in_simplex", sole)
                            .cond("vertex_rules_hold", false);
                        break;
                    }
                }
                e.all_true_on("vertex_rules_hold")
            }
            Statement::PendantMatching => {
                let omega = f.omega_sq()?;
                let expected = pendant_transversals(f.graph());
                Evaluation::new()
                    .value("square_maximum_sets", omega.len())
                    .value("pendant_transversals", expected.len())
                    .cond("square_stable", f.square_stable()?)
                    .cond("square_maximum_sets_are_pendant_transversals", omega == expected)
                    .all_true()
            }
            Statement::KoenigEgervarySquareStable => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("pendant_vertices", f.pendant_count())
                .cond("square_stable", f.square_stable()?)
                .cond("pendant_perfect_matching", f.pendant_perfect_matching().is_some())
                .cond(
                    "very_well_covered_with_alpha_pendants",
                    f.very_well_covered()? && f.pendant_count() == f.alpha()?,
                )
                .equivalent(),
            Statement::Trees => Evaluation::new()
                .value("alpha", f.alpha()?)
                .cond("well_covered", f.well_covered()?)
                .cond("very_well_covered", f.very_well_covered()?)
                .cond("pendant_perfect_matching", f.pendant_perfect_matching().is_some())
                .cond("square_stable", f.square_stable()?)
                .equivalent(),
            Statement::AlphaAtMostMu => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("mu", f.mu())
                .cond("alpha<=mu", f.alpha()? <= f.mu())
                .all_true(),
            Statement::SquareKoenigEgervary => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("mu", f.mu())
                .value("alpha_square", f.alpha_sq()?)
                .value("mu_square", f.mu_sq())
                .cond("square_stable", f.square_stable()?)
                .cond("ke_with_perfect_matching", f.ke()? && f.has_perfect_matching())
                .equivalent(),
            Statement::PendantCount => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("mu", f.mu())
                .value("pendant_vertices", f.pendant_count())
                .cond(
                    "square_stable_and_very_well_covered",
                    f.square_stable()? && f.very_well_covered()?,
                )
                .cond("ke_with_alpha_pendants", ke_with_alpha_pendants(f)?)
                .equivalent(),
            Statement::KoenigEgervaryDichotomy => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("mu", f.mu())
                .value("alpha_square", f.alpha_sq()?)
                .value("mu_square", f.mu_sq())
                .cond("ke", f.ke()?)
                .cond("square_ke", f.square_ke()?)
                .equivalent(),
            Statement::GirthSix => {
                let girth = match f.girth() {
                    Girth::Acyclic => 0,
                    Girth::Cycle(k) => k,
                };
                Evaluation::new()
                    .value("girth", girth)
                    .value("alpha", f.alpha()?)
                    .value("pendant_vertices", f.pendant_count())
                    .cond("well_covered", f.well_covered()?)
                    .cond("pendant_perfect_matching", f.pendant_perfect_matching().is_some())
                    .cond("very_well_covered", f.very_well_covered()?)
                    .cond(
                        "ke_alpha_pendants_empty_core",
                        ke_with_alpha_pendants(f)? && f.core()?.is_empty(),
                    )
                    .cond("ke_square_stable", f.ke()? && f.square_stable()?)
                    .equivalent()
            }
            Statement::VeryWellCovered => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("mu", f.mu())
                .cond("very_well_covered", f.very_well_covered()?)
                .cond("well_covered_ke", f.well_covered()? && f.ke()?)
                .equivalent(),
            Statement::ConnectedKoenigEgervary => Evaluation::new()
                .value("alpha", f.alpha()?)
                .cond("well_covered", f.well_covered()?)
                .cond("very_well_covered", f.very_well_covered()?)
                .equivalent(),
            Statement::NeighborhoodDeletion => {
                let g = f.graph();
                let alpha = f.alpha()?;
                let mut e = Evaluation::new().value("alpha", alpha).cond("every_deletion_ok", true);
                for v in 0..f.n() {
                    let h = g.delete_closed_neighborhood(v).expect("vertex in range").graph;
                    let (ah, wc) = if h.order() == 0 {
                        (0, true)
                    } else {
                        let wc = recognizers::is_well_covered(&h, f.budget())?;
                        (wc.alpha(), wc.holds())
                    };
                    if !wc || ah + 1 != alpha {
                        e = e
                            .value("vertex", v)
                            .value("alpha_after_deletion", ah)
                            .cond("deletion_well_covered", wc)
                            .cond("every_deletion_ok", false);
                        break;
                    }
                }
                e.all_true_on("every_deletion_ok")
            }
            Statement::Componentwise => {
                let parts = f.graph().components();
                let mut all = true;
                for c in &parts {
                    all &= recognizers::is_square_stable(&c.graph, f.budget())?;
                }
                Evaluation::new()
                    .value("components", parts.len())
                    .cond("square_stable", f.square_stable()?)
                    .cond("components_square_stable", all)
                    .equivalent()
            }
        })
    }
}

/// Known-false claims that the harness must refute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Control {
    WellCoveredIsSquareStable,
    UniquePerfectMatchingIsSquareStable,
    UniqueSquareMaximumIsSquareStable,
    IndependentDominationAtMostGamma,
}

impl Control {
    pub const ALL: [Control; 4] = [
        Control::WellCoveredIsSquareStable,
        Control::UniquePerfectMatchingIsSquareStable,
        Control::UniqueSquareMaximumIsSquareStable,
        Control::IndependentDominationAtMostGamma,
    ];

    pub fn from_id(id: &str) -> Option<Control> {
        Control::ALL.into_iter().find(|c| c.id() == id)
    }
}

impl Claim for Control {
    fn id(&self) -> &'static str {
        match self {
            Control::WellCoveredIsSquareStable => "control-well-covered",
            Control::UniquePerfectMatchingIsSquareStable => "control-unique-perfect-matching",
            Control::UniqueSquareMaximumIsSquareStable => "control-unique-square-maximum",
            Control::IndependentDominationAtMostGamma => "control-ind-dom-at-most-gamma",
        }
    }

    fn summary(&self) -> &'static str {
        match self {
            Control::WellCoveredIsSquareStable => "planted: well-covered => square-stable",
            Control::UniquePerfectMatchingIsSquareStable => "planted: unique perfect matching => square-stable",
            Control::UniqueSquareMaximumIsSquareStable => {
                "planted: G^2 has exactly one maximum stable set => square-stable"
            }
            Control::IndependentDominationAtMostGamma => "planted: i <= gamma",
        }
    }

    fn applies(&self, f: &Facts) -> Result<bool, SolverError> {
        if f.n() == 0 {
            return Ok(false);
        }
        Ok(match self {
            Control::WellCoveredIsSquareStable => f.well_covered()?,
            Control::UniquePerfectMatchingIsSquareStable => f.perfect_matchings() == 1,
            Control::UniqueSquareMaximumIsSquareStable => invariants::omega_family(f.square(), f.budget())?.len() == 1,
            Control::IndependentDominationAtMostGamma => true,
        })
    }

    fn evaluate(&self, f: &Facts) -> Result<Evaluation, SolverError> {
        Ok(match self {
            Control::IndependentDominationAtMostGamma => Evaluation::new()
                .value("gamma", f.gamma()?)
                .value("ind_dom", f.ind_dom()?)
                .cond("ind_dom<=gamma", f.ind_dom()? <= f.gamma()?)
                .all_true(),
            _ => Evaluation::new()
                .value("alpha", f.alpha()?)
                .value("alpha_square", f.alpha_sq()?)
                .cond("square_stable", f.square_stable()?)
                .all_true(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::invariants::SolverBudget;

    fn outcome(s: &dyn Claim, g: &Graph) -> Outcome {
        check(s, &Facts::new(g, &SolverBudget::default())).unwrap()
    }

    fn applies(s: &dyn Claim, g: &Graph) -> bool {
        s.applies(&Facts::new(g, &SolverBudget::default())).unwrap()
    }

    fn k1_plus_k1() -> Graph {
        Graph::empty(2)
    }

    #[test]
    fn ids_round_trip() {
        for s in Statement::ALL {
            assert_eq!(Statement::from_id(s.id()), Some(s));
        }
        for c in Control::ALL {
            assert_eq!(Control::from_id(c.id()), Some(c));
        }
    }

    #[test]
    fn hypothesis_filters() {
        use Statement::*;
        let empty = Graph::empty(0);
        for s in Statement::ALL {
            assert!(!applies(&s, &empty), "{s}");
        }
        // connectivity
        let split = Graph::path(4).disjoint_union(&Graph::path(4));
        for s in [
            SimplexPartition,
            SquareMaximumSets,
            KoenigEgervarySquareStable,
            AlphaAtMostMu,
            GirthSix,
            PendantCount,
        ] {
            assert!(!applies(&s, &split), "{s}");
        }
        assert!(applies(&Componentwise, &split));
        assert!(!applies(&Componentwise, &Graph::path(4)));
        // order at least two
        let k1 = Graph::complete(1);
        for s in [
            KoenigEgervarySquareStable,
            Trees,
            AlphaAtMostMu,
            SquareKoenigEgervary,
            VeryWellCovered,
            GirthSix,
        ] {
            assert!(!applies(&s, &k1), "{s}");
        }
        assert!(applies(&SimplexPartition, &k1));
        // Koenig-Egervary
        assert!(!applies(&KoenigEgervarySquareStable, &fixtures::apex_over_path().graph));
        assert!(applies(&KoenigEgervarySquareStable, &Graph::path(6)));
        // square-stable
        assert!(!applies(&AlphaAtMostMu, &Graph::cycle(4)));
        assert!(applies(&AlphaAtMostMu, &Graph::path(4)));
        // KE square: C4 squares to K4, which is not KE
        assert!(!applies(&SquareKoenigEgervary, &Graph::cycle(4)));
        assert!(applies(&SquareKoenigEgervary, &Graph::path(4)));
        // trees
        assert!(applies(&Trees, &Graph::star(4)));
        assert!(!applies(&Trees, &Graph::cycle(5)));
        // girth and exclusions
        assert!(applies(&GirthSix, &Graph::cycle(6)));
        assert!(applies(&GirthSix, &Graph::cycle(8)));
        assert!(!applies(&GirthSix, &Graph::cycle(7)));
        assert!(!applies(&GirthSix, &Graph::cycle(5)));
        assert!(applies(&GirthSix, &Graph::path(5)));
        // isolated vertices
        assert!(!applies(
            &VeryWellCovered,
            &Graph::complete(1).disjoint_union(&Graph::complete(2))
        ));
        // non-complete well-covered
        assert!(!applies(&NeighborhoodDeletion, &Graph::complete(4)));
        assert!(applies(&NeighborhoodDeletion, &Graph::cycle(4)));
        assert!(!applies(&NeighborhoodDeletion, &Graph::path(3)));
        // pendant perfect matching
        assert!(applies(&PendantMatching, &Graph::complete(2)));
        assert!(!applies(&PendantMatching, &Graph::path(6)));
    }

    #[test]
    fn statements_on_small_graphs() {
        use Statement::*;
        let star5 = Graph::star(5);
        let f = Facts::new(&star5, &SolverBudget::default());
        let e = InequalityChain.evaluate(&f).unwrap();
        assert!(e.holds);
        let chain = ["alpha_square", "theta_square", "gamma", "ind_dom", "alpha", "theta"].map(|k| e.values[k]);
        assert_eq!(chain, [1, 1, 1, 1, 5, 5]);

        let p4 = SimplexPartition
            .evaluate(&Facts::new(&Graph::path(4), &SolverBudget::default()))
            .unwrap();
        assert!(p4.holds && p4.conditions.values().all(|&c| c));
        let c4 = SimplexPartition
            .evaluate(&Facts::new(&Graph::cycle(4), &SolverBudget::default()))
            .unwrap();
        assert!(c4.holds && c4.conditions.values().all(|&c| !c));

        let p6 = KoenigEgervarySquareStable
            .evaluate(&Facts::new(&Graph::path(6), &SolverBudget::default()))
            .unwrap();
        assert!(p6.holds && p6.conditions.values().all(|&c| !c));
        let p6t = Trees
            .evaluate(&Facts::new(&Graph::path(6), &SolverBudget::default()))
            .unwrap();
        assert!(p6t.holds && p6t.conditions.values().all(|&c| !c));

        for g in [
            Graph::path(4),
            fixtures::simplicial_core_eight().graph,
            Graph::complete(4),
        ] {
            assert_eq!(outcome(&SquareMaximumSets, &g), Outcome::Holds);
        }
        assert_eq!(outcome(&PendantMatching, &Graph::complete(2)), Outcome::Holds);
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(pendant_transversals(&two_k2).len(), 4);
        assert_eq!(outcome(&PendantMatching, &two_k2), Outcome::Holds);
        assert_eq!(
            outcome(&KoenigEgervaryDichotomy, &fixtures::apex_over_path().graph),
            Outcome::Holds
        );
        for g in [Graph::cycle(4), Graph::cycle(7)] {
            assert_eq!(outcome(&NeighborhoodDeletion, &g), Outcome::Holds);
        }
        let p4c4 = Graph::path(4).disjoint_union(&Graph::cycle(4));
        let e = Componentwise
            .evaluate(&Facts::new(&p4c4, &SolverBudget::default()))
            .unwrap();
        assert!(e.holds && !e.conditions["square_stable"]);
        assert_eq!(outcome(&Componentwise, &k1_plus_k1()), Outcome::Holds);
    }

    #[test]
    fn pendant_count_is_refuted_by_the_three_vertex_path() {
        // P3 is KE with two pendant vertices and alpha = 2, yet not well-covered.
        let Outcome::Violated(e) = outcome(&Statement::PendantCount, &Graph::path(3)) else {
            panic!("expected a violation");
        };
        assert!(e.conditions["ke_with_alpha_pendants"]);
        assert!(!e.conditions["square_stable_and_very_well_covered"]);
    }

    #[test]
    fn isolated_vertices_break_the_unfiltered_very_well_covered_equivalence() {
        // K1 + K2 is well-covered and KE but has an isolated vertex
        let g = Graph::complete(1).disjoint_union(&Graph::complete(2));
        let e = Statement::VeryWellCovered
            .evaluate(&Facts::new(&g, &SolverBudget::default()))
            .unwrap();
        assert!(!e.holds);
        assert!(!applies(&Statement::VeryWellCovered, &g));
    }

    #[test]
    fn disconnected_graphs_break_alpha_at_most_mu() {
        let g = k1_plus_k1();
        let e = Statement::AlphaAtMostMu
            .evaluate(&Facts::new(&g, &SolverBudget::default()))
            .unwrap();
        assert!(!e.holds);
        assert!(!applies(&Statement::AlphaAtMostMu, &g));
    }

    #[test]
    fn controls_are_refuted_by_their_witnesses() {
        let refuted = |c: Control, g: &Graph| matches!(outcome(&c, g), Outcome::Violated(_));
        assert!(refuted(Control::WellCoveredIsSquareStable, &Graph::cycle(4)));
        assert!(refuted(Control::UniquePerfectMatchingIsSquareStable, &Graph::path(6)));
        assert!(refuted(
            Control::UniquePerfectMatchingIsSquareStable,
            &fixtures::triangle_with_pendant().graph
        ));
        assert!(refuted(
            Control::UniqueSquareMaximumIsSquareStable,
            &fixtures::unique_square_maximum().graph
        ));
        assert!(!refuted(Control::IndependentDominationAtMostGamma, &Graph::path(3)));
    }
}
