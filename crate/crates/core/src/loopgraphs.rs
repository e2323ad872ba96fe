//! Loop graphs: planar binary trees whose vertices may carry a loop mark.
//!
//! A loop joining the consecutive leaves `i` and `i+1` is stored on the
//! unique vertex that is their lowest common ancestor. That vertex is said to
//! sit at *slot* `i`; slots of a graph of order `n` are `0..n`, read off by an
//! in-order traversal. With this encoding `t' v t''` and `t' ⋈ t''` (the
//! bridge) are the two ways a graph decomposes at its root.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::trees::{enumerate_trees, PlanarBinaryTree};

/// The derived ordering matches the printed form compared with
/// `| < ( < ) < v < o`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LoopGraph {
    Leaf,
    Node {
        left: Box<LoopGraph>,
        looped: bool,
        right: Box<LoopGraph>,
    },
}

/// `(genus, legs, euler characteristic)` of a regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub genus: usize,
    pub legs: usize,
    pub euler: i64,
}

pub fn vee(a: LoopGraph, b: LoopGraph) -> LoopGraph {
    LoopGraph::Node {
        left: Box::new(a),
        looped: false,
        right: Box::new(b),
    }
}

pub fn bridge(a: LoopGraph, b: LoopGraph) -> LoopGraph {
    LoopGraph::Node {
        left: Box::new(a),
        looped: true,
        right: Box::new(b),
    }
}

impl LoopGraph {
    /// The generator tree `T = (|v|)`.
    pub fn tree_generator() -> Self {
        vee(LoopGraph::Leaf, LoopGraph::Leaf)
    }

    /// The elementary one-loop graph `L = (|o|)`.
    pub fn one_loop() -> Self {
        bridge(LoopGraph::Leaf, LoopGraph::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, LoopGraph::Leaf)
    }

    pub fn order(&self) -> usize {
        match self {
            LoopGraph::Leaf => 0,
            LoopGraph::Node { left, right, .. } => left.order() + right.order() + 1,
        }
    }

    pub fn genus(&self) -> usize {
        match self {
            LoopGraph::Leaf => 0,
            LoopGraph::Node { left, looped, right } => left.genus() + right.genus() + usize::from(*looped),
        }
    }

    pub fn total_order(&self) -> usize {
        self.order() + self.genus()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.order(), self.genus())
    }

    pub fn from_tree(t: &PlanarBinaryTree) -> Self {
        match t {
            PlanarBinaryTree::Leaf => LoopGraph::Leaf,
            PlanarBinaryTree::Node(l, r) => vee(Self::from_tree(l), Self::from_tree(r)),
        }
    }

    pub fn underlying_tree(&self) -> PlanarBinaryTree {
        match self {
            LoopGraph::Leaf => PlanarBinaryTree::Leaf,
            LoopGraph::Node { left, right, .. } => crate::trees::graft(left.underlying_tree(), right.underlying_tree()),
        }
    }

    fn collect_slots(&self, offset: usize, out: &mut BTreeSet<usize>) {
        if let LoopGraph::Node { left, looped, right } = self {
            let slot = offset + left.order();
            if *looped {
                out.insert(slot);
            }
            left.collect_slots(offset, out);
            right.collect_slots(slot + 1, out);
        }
    }

    fn with_mark(&self, slot: usize, offset: usize) -> Option<LoopGraph> {
        let LoopGraph::Node { left, looped, right } = self else {
            return None;
        };
        let here = offset + left.order();
        if slot < here {
            Some(LoopGraph::Node {
                left: Box::new(left.with_mark(slot, offset)?),
                looped: *looped,
                right: right.clone(),
            })
        } else if slot > here {
            Some(LoopGraph::Node {
                left: left.clone(),
                looped: *looped,
                right: Box::new(right.with_mark(slot, here + 1)?),
            })
        } else if *looped {
            None
        } else {
            Some(bridge((**left).clone(), (**right).clone()))
        }
    }
}

impl From<&PlanarBinaryTree> for LoopGraph {
    fn from(t: &PlanarBinaryTree) -> Self {
        LoopGraph::from_tree(t)
    }
}

impl fmt::Display for LoopGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopGraph::Leaf => f.write_str("|"),
            LoopGraph::Node { left, looped, right } => {
                write!(f, "({left}{}{right})", if *looped { 'o' } else { 'v' })
            }
        }
    }
}

/// Splits a graph at its root into `(left, right, root_looped)`.
pub fn decompose(t: &LoopGraph) -> Result<(LoopGraph, LoopGraph, bool)> {
    match t {
        LoopGraph::Leaf => Err(Error::LeafDecomposition),
        LoopGraph::Node { left, looped, right } => Ok(((**left).clone(), (**right).clone(), *looped)),
    }
}

pub fn loop_slots(t: &LoopGraph) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    t.collect_slots(0, &mut out);
    out
}

/// True when no leaf is shared by two loops, i.e. no two looped slots are
/// adjacent.
pub fn is_regular(t: &LoopGraph) -> bool {
    let slots = loop_slots(t);
    slots.iter().all(|i| !slots.contains(&(i + 1)))
}

/// Joins leaves `i` and `i+1` by a loop. Returns `None` (the zero element)
/// when slot `i` does not exist or already carries a loop.
pub fn contract(i: usize, t: &LoopGraph) -> Option<LoopGraph> {
    if i >= t.order() {
        return None;
    }
    t.with_mark(i, 0)
}

/// All graphs of order `n` and genus `g`, optionally only the regular ones,
/// in canonical order.
pub fn enumerate_graphs(n: usize, g: usize, regular_only: bool) -> Vec<LoopGraph> {
    let mut out = Vec::new();
    if g > n {
        return out;
    }
    for tree in enumerate_trees(n) {
        let base = LoopGraph::from_tree(&tree);
        for_each_subset(n, g, &mut |slots| {
            let graph = slots
                .iter()
                .try_fold(base.clone(), |acc, &s| contract(s, &acc))
                .expect("distinct slots are unlooped");
            if !regular_only || is_regular(&graph) {
                out.push(graph);
            }
        });
    }
    out.sort();
    out
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Every graph with total order at most `max`, in canonical order.
pub fn graphs_up_to_total_order(max: usize) -> Vec<LoopGraph> {
    let mut out = Vec::new();
    for n in 0..=max {
        for g in 0..=(max - n).min(n) {
            out.extend(enumerate_graphs(n, g, false));
        }
    }
    out.sort();
    out
}

pub fn signature(t: &LoopGraph) -> Result<Signature> {
    if !is_regular(t) {
        return Err(Error::Irregular(t.to_string()));
    }
    let (n, g) = t.bidegree();
    Ok(Signature {
        genus: g,
        legs: n + 2 - 2 * g,
        euler: -(n as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_graph;

    fn g(s: &str) -> LoopGraph {
        parse_graph(s).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn vee_examples() {
        let leaf = LoopGraph::Leaf;
        assert_eq!(vee(leaf.clone(), leaf.clone()).to_string(), "(|v|)");
        let x = vee(leaf.clone(), g("(|o|)"));
        assert_eq!(x.to_string(), "(|v(|o|))");
        assert_eq!(x.bidegree(), (2, 1));
        let y = vee(g("(|o|)"), g("(|o|)"));
        assert_eq!(y.to_string(), "((|o|)v(|o|))");
        assert_eq!(y.genus(), 2);
        assert!(is_regular(&y));
    }

    #[test]
    fn bridge_examples() {
        let leaf = LoopGraph::Leaf;
        assert_eq!(bridge(leaf.clone(), leaf.clone()), LoopGraph::one_loop());
        let x = bridge(leaf.clone(), g("(|v|)"));
        assert_eq!(x.to_string(), "(|o(|v|))");
        assert_eq!(x.bidegree(), (2, 1));
        let y = bridge(leaf, g("(|o|)"));
        assert_eq!(y.to_string(), "(|o(|o|))");
        assert!(!is_regular(&y));
    }

    #[test]
    fn decompose_examples() {
        let leaf = LoopGraph::Leaf;
        assert_eq!(decompose(&g("(|o|)")).unwrap(), (leaf.clone(), leaf.clone(), true));
        assert_eq!(decompose(&g("(|v|)")).unwrap(), (leaf.clone(), leaf.clone(), false));
        assert_eq!(decompose(&g("(|o(|v|))")).unwrap(), (leaf.clone(), g("(|v|)"), true));
        assert!(decompose(&leaf).is_err());
    }

    #[test]
    fn slot_examples() {
        assert_eq!(loop_slots(&g("(|o|)")), BTreeSet::from([0]));
        assert_eq!(loop_slots(&g("((|v|)o|)")), BTreeSet::from([1]));
        assert_eq!(loop_slots(&g("((|o|)v(|o|))")), BTreeSet::from([0, 2]));
    }

    #[test]
    fn regularity_examples() {
        assert!(!is_regular(&g("(|o(|o|))")));
        assert!(is_regular(&g("((|o|)v(|o|))")));
        for n in 0..=4 {
            assert!(enumerate_graphs(n, 0, false).iter().all(is_regular));
        }
    }

    #[test]
    fn contract_examples() {
        assert_eq!(contract(0, &g("(|v|)")), Some(g("(|o|)")));
        assert_eq!(contract(0, &g("(|o|)")), None);
        assert_eq!(contract(1, &g("(|v(|v|))")), Some(g("(|v(|o|))")));
        assert_eq!(contract(5, &g("(|v|)")), None);
        // next to an existing loop the result is irregular but nonzero
        assert_eq!(contract(0, &g("(|v(|o|))")), Some(g("(|o(|o|))")));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(3, 1, true).len(), 15);
        let total: usize = (0..=2).map(|k| enumerate_graphs(3, k, true).len()).sum();
        assert_eq!(total, 25);
        assert_eq!(enumerate_graphs(3, 0, true).len(), 5);
        assert_eq!(enumerate_graphs(3, 2, true).len(), 5);
        assert_eq!(enumerate_graphs(1, 1, false), vec![g("(|o|)")]);
        let catalan = [1, 1, 2, 5, 14, 42];
        for (n, c) in catalan.into_iter().enumerate() {
            for k in 0..=n {
                assert_eq!(enumerate_graphs(n, k, false).len(), c * binomial(n, k));
            }
        }
    }

    #[test]
    fn signature_examples() {
        let s = signature(&g("(|o|)")).unwrap();
        assert_eq!((s.genus, s.legs, s.euler), (1, 1, -1));
        for t in enumerate_graphs(3, 0, false) {
            let s = signature(&t).unwrap();
            assert_eq!((s.genus, s.legs, s.euler), (0, 5, -3));
        }
        for t in enumerate_graphs(3, 2, true) {
            let s = signature(&t).unwrap();
            assert_eq!((s.genus, s.legs, s.euler), (2, 1, -3));
            assert_eq!(s.euler, 2 - 2 * s.genus as i64 - s.legs as i64);
        }
        assert!(matches!(signature(&g("(|o(|o|))")), Err(Error::Irregular(_))));
    }

    #[test]
    fn structural_invariants() {
        for t in graphs_up_to_total_order(6) {
            assert_eq!(t.genus(), loop_slots(&t).len());
            if let Ok((a, b, m)) = decompose(&t) {
                let back = if m { bridge(a, b) } else { vee(a, b) };
                assert_eq!(back, t);
            }
            for i in 0..t.order() {
                if let Some(c) = contract(i, &t) {
                    assert_eq!(c.genus(), t.genus() + 1);
                    assert_eq!(c.underlying_tree(), t.underlying_tree());
                    let slots = loop_slots(&t);
                    let free = (i == 0 || !slots.contains(&(i - 1))) && !slots.contains(&(i + 1));
                    if is_regular(&t) {
                        assert_eq!(is_regular(&c), free, "contract {i} of {t}");
                    }
                }
            }
        }
    }
}
