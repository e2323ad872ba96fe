//! The quantized Hopf structure on loop graphs: the `∗_h` product, the `Δ_h`
//! coproduct, counit, antipode, and exhaustive axiom checks.
//!
//! Both operations recurse on the root decomposition of a graph. For
//! `x = x' ∘ x''` and `y = y' • y''` (each of `∘`, `•` is `v` or the bridge):
//!
//! ```text
//! x ∗_h y = (x ∗_h y') • y''  +  x' ∘ (x'' ∗_h y)
//! Δ_h(x)  = Σ (a' ∗_h a'') ⊗ (b' ∘ b'')  +  x ⊗ |
//! ```
//!
//! where the sum runs over all terms `a'⊗b'` of `Δ_h(x')` and `a''⊗b''` of
//! `Δ_h(x'')`, and `Δ_h(|) = |⊗|`. On unmarked trees these reduce to the
//! classical Loday–Ronco operations.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::freemodule::{bilinear, tensor2_mul, LinComb, Pair, Rational, Tensor2, Triple};
use crate::loopgraphs::{graphs_up_to_total_order, LoopGraph};
use crate::trees::{graft, PlanarBinaryTree};

pub type GraphSum = LinComb<LoopGraph>;
pub type TreeSum = LinComb<PlanarBinaryTree>;

fn join(a: LoopGraph, looped: bool, b: LoopGraph) -> LoopGraph {
    LoopGraph::Node {
        left: Box::new(a),
        looped,
        right: Box::new(b),
    }
}

/// Applies `x ↦ left ∘ x` (or `x ∘ right`) to every term of a sum.
fn join_left(left: &LoopGraph, looped: bool, sum: &GraphSum) -> GraphSum {
    sum.map_basis(|g| join(left.clone(), looped, g.clone()))
}

fn join_right(sum: &GraphSum, looped: bool, right: &LoopGraph) -> GraphSum {
    sum.map_basis(|g| join(g.clone(), looped, right.clone()))
}

/// Classical Loday–Ronco product of two trees.
pub fn star(t: &PlanarBinaryTree, u: &PlanarBinaryTree) -> TreeSum {
    match (t, u) {
        (PlanarBinaryTree::Leaf, _) => TreeSum::basis(u.clone()),
        (_, PlanarBinaryTree::Leaf) => TreeSum::basis(t.clone()),
        (PlanarBinaryTree::Node(t1, t2), PlanarBinaryTree::Node(u1, u2)) => {
            let mut out = star(t2, u).map_basis(|x| graft((**t1).clone(), x.clone()));
            out += star(t, u1).map_basis(|x| graft(x.clone(), (**u2).clone()));
            out
        }
    }
}

pub fn star_trees(x: &TreeSum, y: &TreeSum) -> TreeSum {
    bilinear(x, y, star)
}

/// Lifts a tree sum into the graph algebra (all vertices unmarked).
pub fn lift(x: &TreeSum) -> GraphSum {
    x.map_basis(LoopGraph::from_tree)
}

thread_local! {
    static STAR_CACHE: RefCell<HashMap<(LoopGraph, LoopGraph), GraphSum>> = RefCell::new(HashMap::new());
    static DELTA_CACHE: RefCell<HashMap<LoopGraph, Tensor2<LoopGraph>>> = RefCell::new(HashMap::new());
    static ANTIPODE_CACHE: RefCell<HashMap<LoopGraph, GraphSum>> = RefCell::new(HashMap::new());
}

/// The quantum product `t ∗_h u` on basis graphs.
pub fn star_h(t: &LoopGraph, u: &LoopGraph) -> GraphSum {
    let (
        LoopGraph::Node {
            left: t1,
            looped: m1,
            right: t2,
        },
        LoopGraph::Node {
            left: u1,
            looped: m2,
            right: u2,
        },
    ) = (t, u)
    else {
        return GraphSum::basis(if t.is_leaf() { u.clone() } else { t.clone() });
    };
    let key = (t.clone(), u.clone());
    if let Some(hit) = STAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut out = join_right(&star_h(t, u1), *m2, u2);
    out += join_left(t1, *m1, &star_h(t2, u));
    STAR_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

pub fn star_h_sums(x: &GraphSum, y: &GraphSum) -> GraphSum {
    bilinear(x, y, star_h)
}

/// The quantum coproduct `Δ_h` on a basis graph.
pub fn delta_h(t: &LoopGraph) -> Tensor2<LoopGraph> {
    let LoopGraph::Node { left, looped, right } = t else {
        return Tensor2::basis(Pair(LoopGraph::Leaf, LoopGraph::Leaf));
    };
    if let Some(hit) = DELTA_CACHE.with(|c| c.borrow().get(t).cloned()) {
        return hit;
    }
    let dl = delta_h(left);
    let dr = delta_h(right);
    let mut out = Tensor2::zero();
    for (Pair(a1, b1), c1) in dl.iter() {
        for (Pair(a2, b2), c2) in dr.iter() {
            let front = star_h(a1, a2);
            let back = join(b1.clone(), *looped, b2.clone());
            let c = c1 * c2;
            for (a, ca) in front.iter() {
                out.add_term(&c * ca, Pair(a.clone(), back.clone()));
            }
        }
    }
    out.add_term(Rational::one(), Pair(t.clone(), LoopGraph::Leaf));
    DELTA_CACHE.with(|c| c.borrow_mut().insert(t.clone(), out.clone()));
    out
}

pub fn delta_h_sum(x: &GraphSum) -> Tensor2<LoopGraph> {
    x.map_linear(delta_h)
}

/// Coefficient of the unit graph `|`.
pub fn counit(x: &GraphSum) -> Rational {
    x.coeff(&LoopGraph::Leaf)
}

/// The antipode on a basis graph, from `Σ S(a) ∗_h b = ε(t)·|` over the terms
/// `a⊗b` of `Δ_h(t)`.
pub fn antipode_basis(t: &LoopGraph) -> GraphSum {
    if t.is_leaf() {
        return GraphSum::basis(LoopGraph::Leaf);
    }
    if let Some(hit) = ANTIPODE_CACHE.with(|c| c.borrow().get(t).cloned()) {
        return hit;
    }
    let mut acc = GraphSum::zero();
    for (Pair(a, b), c) in delta_h(t).iter() {
        if a == t && b.is_leaf() {
            continue;
        }
        acc.add_scaled(c, &star_h_sums(&antipode_basis(a), &GraphSum::basis(b.clone())));
    }
    let out = -acc;
    ANTIPODE_CACHE.with(|c| c.borrow_mut().insert(t.clone(), out.clone()));
    out
}

pub fn antipode(x: &GraphSum) -> GraphSum {
    x.map_linear(antipode_basis)
}

/// Multiplication map applied to a two-fold tensor.
pub fn multiply(x: &Tensor2<LoopGraph>) -> GraphSum {
    x.map_linear(|Pair(a, b)| star_h(a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Assoc,
    Coassoc,
    Compat,
    Counit,
    Antipode,
}

impl std::str::FromStr for Axiom {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "assoc" => Ok(Axiom::Assoc),
            "coassoc" => Ok(Axiom::Coassoc),
            "compat" => Ok(Axiom::Compat),
            "counit" => Ok(Axiom::Counit),
            "antipode" => Ok(Axiom::Antipode),
            other => Err(format!("unknown axiom {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass { cases: usize },
    Counterexample(String),
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomOutcome::Pass { .. })
    }
}

impl fmt::Display for AxiomOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomOutcome::Pass { cases } => write!(f, "pass ({cases} cases)"),
            AxiomOutcome::Counterexample(s) => write!(f, "counterexample: {s}"),
        }
    }
}

fn tensor3_left(x: &Tensor2<LoopGraph>) -> Tensor3Graph {
    x.map_linear(|Pair(a, b)| delta_h(a).map_basis(|Pair(p, q)| Triple(p.clone(), q.clone(), b.clone())))
}

fn tensor3_right(x: &Tensor2<LoopGraph>) -> Tensor3Graph {
    x.map_linear(|Pair(a, b)| delta_h(b).map_basis(|Pair(p, q)| Triple(a.clone(), p.clone(), q.clone())))
}

type Tensor3Graph = LinComb<Triple<LoopGraph, LoopGraph, LoopGraph>>;

/// Checks one Hopf axiom on every basis graph (or pair, or triple) whose
/// total orders sum to at most `max_total_order`.
pub fn check_axiom(axiom: Axiom, max_total_order: usize) -> AxiomOutcome {
    let graphs = graphs_up_to_total_order(max_total_order);
    let mut cases = 0;
    let unit = GraphSum::basis(LoopGraph::Leaf);
    match axiom {
        Axiom::Assoc => {
            for a in &graphs {
                for b in &graphs {
                    for c in &graphs {
                        if a.total_order() + b.total_order() + c.total_order() > max_total_order {
                            continue;
                        }
                        cases += 1;
                        let lhs = star_h_sums(&star_h(a, b), &GraphSum::basis(c.clone()));
                        let rhs = star_h_sums(&GraphSum::basis(a.clone()), &star_h(b, c));
                        if lhs != rhs {
                            return AxiomOutcome::Counterexample(format!(
                                "({a} * {b}) * {c} = {lhs} but {a} * ({b} * {c}) = {rhs}"
                            ));
                        }
                    }
                }
            }
        }
        Axiom::Coassoc => {
            for t in &graphs {
                cases += 1;
                let d = delta_h(t);
                let (lhs, rhs) = (tensor3_left(&d), tensor3_right(&d));
                if lhs != rhs {
                    return AxiomOutcome::Counterexample(format!("(D@id)D({t}) = {lhs} but (id@D)D({t}) = {rhs}"));
                }
            }
        }
        Axiom::Compat => {
            for a in &graphs {
                for b in &graphs {
                    if a.total_order() + b.total_order() > max_total_order {
                        continue;
                    }
                    cases += 1;
                    let lhs = delta_h_sum(&star_h(a, b));
                    let rhs = tensor2_mul(&delta_h(a), &delta_h(b), star_h);
                    if lhs != rhs {
                        return AxiomOutcome::Counterexample(format!(
                            "D({a} * {b}) = {lhs} but D({a}) * D({b}) = {rhs}"
                        ));
                    }
                }
            }
        }
        Axiom::Counit => {
            for t in &graphs {
                cases += 1;
                let d = delta_h(t);
                let left = d.map_linear(|Pair(a, b)| GraphSum::term(counit(&GraphSum::basis(a.clone())), b.clone()));
                let right = d.map_linear(|Pair(a, b)| GraphSum::term(counit(&GraphSum::basis(b.clone())), a.clone()));
                let expected = GraphSum::basis(t.clone());
                if left != expected || right != expected {
                    return AxiomOutcome::Counterexample(format!("counit on {t}: (e@id)D = {left}, (id@e)D = {right}"));
                }
            }
        }
        Axiom::Antipode => {
            for t in &graphs {
                cases += 1;
                let d = delta_h(t);
                let expected = unit.scale(&counit(&GraphSum::basis(t.clone())));
                let left = d.map_linear(|Pair(a, b)| star_h_sums(&antipode_basis(a), &GraphSum::basis(b.clone())));
                let right = d.map_linear(|Pair(a, b)| star_h_sums(&GraphSum::basis(a.clone()), &antipode_basis(b)));
                if left != expected || right != expected {
                    return AxiomOutcome::Counterexample(format!(
                        "antipode on {t}: m(S@id)D = {left}, m(id@S)D = {right}"
                    ));
                }
            }
        }
    }
    AxiomOutcome::Pass { cases }
}

/// True when `x` is primitive: `Δ_h(x) = |⊗x + x⊗|`.
pub fn is_primitive(x: &GraphSum) -> bool {
    let unit = GraphSum::basis(LoopGraph::Leaf);
    let expected = &crate::freemodule::tensor(&unit, x) + &crate::freemodule::tensor(x, &unit);
    delta_h_sum(x) == expected && !x.is_zero() && counit(x).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{parse_graph, parse_graph_sum};
    use crate::loopgraphs::{enumerate_graphs, is_regular};
    use crate::trees::enumerate_trees;

    fn g(s: &str) -> LoopGraph {
        parse_graph(s).unwrap()
    }

    fn sum(s: &str) -> GraphSum {
        parse_graph_sum(s).unwrap()
    }

    fn t(s: &str) -> PlanarBinaryTree {
        crate::cli::parse_tree(s).unwrap()
    }

    #[test]
    fn classical_star_examples() {
        let gen = t("(|v|)");
        assert_eq!(star(&gen, &gen), TreeSum::sum_of([t("(|v(|v|))"), t("((|v|)v|)")]));
        let cube = star_trees(&star(&gen, &gen), &TreeSum::basis(gen.clone()));
        assert_eq!(cube, TreeSum::sum_of(enumerate_trees(3)));
        for x in enumerate_trees(3) {
            assert_eq!(star(&x, &PlanarBinaryTree::Leaf), TreeSum::basis(x.clone()));
            assert_eq!(star(&PlanarBinaryTree::Leaf, &x), TreeSum::basis(x.clone()));
        }
    }

    #[test]
    fn star_h_examples() {
        let l = LoopGraph::one_loop();
        let tg = LoopGraph::tree_generator();
        let ll = star_h(&l, &l);
        assert_eq!(ll, sum("(|o(|o|)) + ((|o|)o|)"));
        assert!(ll.support().all(|x| !is_regular(x)));
        assert_eq!(star_h(&tg, &l), sum("((|v|)o|) + (|v(|o|))"));
        assert_eq!(
            star_h(&g("(|o(|v|))"), &l),
            sum("((|o(|v|))o|) + (|o((|v|)o|)) + (|o(|v(|o|)))")
        );
    }

    #[test]
    fn star_h_bigrading_and_units() {
        let graphs = graphs_up_to_total_order(4);
        for a in &graphs {
            assert_eq!(star_h(a, &LoopGraph::Leaf), GraphSum::basis(a.clone()));
            assert_eq!(star_h(&LoopGraph::Leaf, a), GraphSum::basis(a.clone()));
            for b in &graphs {
                for x in star_h(a, b).support() {
                    assert_eq!(x.order(), a.order() + b.order());
                    assert_eq!(x.genus(), a.genus() + b.genus());
                }
            }
        }
    }

    #[test]
    fn star_h_restricts_to_classical_star() {
        let trees: Vec<_> = (0..=6).flat_map(enumerate_trees).collect();
        for a in &trees {
            for b in &trees {
                if a.order() + b.order() > 6 {
                    continue;
                }
                assert_eq!(star_h(&a.into(), &b.into()), lift(&star(a, b)));
            }
        }
    }

    #[test]
    fn delta_h_examples() {
        let unit = LoopGraph::Leaf;
        let l = LoopGraph::one_loop();
        assert_eq!(
            delta_h(&l),
            Tensor2::sum_of([Pair(unit.clone(), l.clone()), Pair(l.clone(), unit.clone())])
        );
        let x = g("(|o(|v|))");
        assert_eq!(
            delta_h(&x),
            Tensor2::sum_of([
                Pair(unit.clone(), x.clone()),
                Pair(x.clone(), unit.clone()),
                Pair(LoopGraph::tree_generator(), l.clone()),
            ])
        );
        let y = g("(|o(|o|))");
        assert_eq!(
            delta_h(&y),
            Tensor2::sum_of([
                Pair(unit.clone(), y.clone()),
                Pair(y.clone(), unit.clone()),
                Pair(l.clone(), l.clone()),
            ])
        );
        assert_eq!(delta_h(&unit), Tensor2::basis(Pair(unit.clone(), unit)));
    }

    #[test]
    fn classical_order_two_coproduct() {
        let unit = LoopGraph::Leaf;
        let tg = LoopGraph::tree_generator();
        for x in enumerate_graphs(2, 0, false) {
            assert_eq!(
                delta_h(&x),
                Tensor2::sum_of([
                    Pair(unit.clone(), x.clone()),
                    Pair(x.clone(), unit.clone()),
                    Pair(tg.clone(), tg.clone()),
                ])
            );
        }
    }

    #[test]
    fn delta_h_is_bigraded() {
        for t in graphs_up_to_total_order(5) {
            for (Pair(a, b), _) in delta_h(&t).iter() {
                assert_eq!(a.order() + b.order(), t.order());
                assert_eq!(a.genus() + b.genus(), t.genus());
            }
        }
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&sum("|")), Rational::one());
        assert_eq!(counit(&sum("(|o|)")), Rational::zero());
        assert_eq!(counit(&sum("2*| + 3*(|v|)")), crate::freemodule::int(2));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&sum("(|v|)")), sum("-(|v|)"));
        assert_eq!(antipode(&sum("(|o|)")), sum("-(|o|)"));
        assert_eq!(antipode(&sum("|")), sum("|"));
        let x = g("(|o(|v|))");
        let m = delta_h(&x).map_linear(|Pair(a, b)| star_h_sums(&antipode_basis(a), &GraphSum::basis(b.clone())));
        assert!(m.is_zero());
    }

    #[test]
    fn primitives() {
        assert!(is_primitive(&sum("(|v|)")));
        assert!(is_primitive(&sum("(|o|)")));
        assert!(!is_primitive(&sum("(|o(|v|))")));
    }

    #[test]
    fn small_axiom_checks() {
        for axiom in [
            Axiom::Assoc,
            Axiom::Coassoc,
            Axiom::Compat,
            Axiom::Counit,
            Axiom::Antipode,
        ] {
            let outcome = check_axiom(axiom, 3);
            assert!(outcome.passed(), "{axiom:?}: {outcome}");
        }
    }
}
