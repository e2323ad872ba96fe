//! Planar binary trees, grafting, enumeration and the almost-simplicial
//! face / degeneracy operators.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutations::Permutation;

/// A planar binary tree: the leaf `|` or a vertex with ordered left and
/// right subtrees, printed `(leftvright)`.
///
/// The derived ordering is the canonical one: it agrees with comparing the
/// printed forms lexicographically with `|` before `(`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

use PlanarBinaryTree::{Leaf, Node};

impl PlanarBinaryTree {
    /// The generator `(|v|)`.
    pub fn generator() -> Self {
        graft(Leaf, Leaf)
    }

    /// Number of internal vertices.
    pub fn order(&self) -> usize {
        match self {
            Leaf => 0,
            Node(l, r) => l.order() + r.order() + 1,
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.order() + 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Leaf)
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => f.write_str("|"),
            Node(l, r) => write!(f, "({l}v{r})"),
        }
    }
}

pub fn graft(left: PlanarBinaryTree, right: PlanarBinaryTree) -> PlanarBinaryTree {
    Node(Box::new(left), Box::new(right))
}

pub fn ungraft(t: &PlanarBinaryTree) -> Result<(PlanarBinaryTree, PlanarBinaryTree)> {
    match t {
        Leaf => Err(Error::LeafDecomposition),
        Node(l, r) => Ok(((**l).clone(), (**r).clone())),
    }
}

/// All trees of order `n`, sorted canonically.
pub fn enumerate_trees(n: usize) -> Vec<PlanarBinaryTree> {
    let mut table: Vec<Vec<PlanarBinaryTree>> = vec![vec![Leaf]];
    for m in 1..=n {
        let mut level = Vec::new();
        for p in 0..m {
            for a in &table[p] {
                for b in &table[m - 1 - p] {
                    level.push(graft(a.clone(), b.clone()));
                }
            }
        }
        level.sort();
        table.push(level);
    }
    table.swap_remove(n)
}

fn check_leaf_index(i: usize, t: &PlanarBinaryTree) -> Result<()> {
    if i > t.order() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: t.order(),
        });
    }
    Ok(())
}

/// Erases leaf `i` and fuses the remaining edge through its parent vertex.
pub fn face(i: usize, t: &PlanarBinaryTree) -> Result<PlanarBinaryTree> {
    if t.is_leaf() {
        return Err(Error::LeafDecomposition);
    }
    check_leaf_index(i, t)?;
    Ok(erase_leaf(i, t))
}

fn erase_leaf(i: usize, t: &PlanarBinaryTree) -> PlanarBinaryTree {
    let Node(l, r) = t else {
        unreachable!("erase_leaf on a leaf")
    };
    let left_leaves = l.leaf_count();
    if i < left_leaves {
        match &**l {
            Leaf => (**r).clone(),
            _ => graft(erase_leaf(i, l), (**r).clone()),
        }
    } else {
        match &**r {
            Leaf => (**l).clone(),
            _ => graft((**l).clone(), erase_leaf(i - left_leaves, r)),
        }
    }
}

/// Replaces leaf `i` by the generator `(|v|)`.
pub fn degeneracy(i: usize, t: &PlanarBinaryTree) -> Result<PlanarBinaryTree> {
    check_leaf_index(i, t)?;
    Ok(bifurcate(i, t))
}

fn bifurcate(i: usize, t: &PlanarBinaryTree) -> PlanarBinaryTree {
    match t {
        Leaf => PlanarBinaryTree::generator(),
        Node(l, r) => {
            let left_leaves = l.leaf_count();
            if i < left_leaves {
                graft(bifurcate(i, l), (**r).clone())
            } else {
                graft((**l).clone(), bifurcate(i - left_leaves, r))
            }
        }
    }
}

/// The extra degeneracy `h(t) = | v t`, a contracting homotopy for the
/// border operator in positive degrees.
pub fn extra_degeneracy(t: &PlanarBinaryTree) -> PlanarBinaryTree {
    graft(Leaf, t.clone())
}

/// Tree of a permutation read as a level word: the vertex slot holding the
/// largest value is the root, and the two sides recurse.
pub fn perm_to_tree(sigma: &Permutation) -> PlanarBinaryTree {
    fn split_max(word: &[usize]) -> PlanarBinaryTree {
        match word.iter().enumerate().max_by_key(|&(_, v)| *v) {
            None => Leaf,
            Some((pos, _)) => graft(split_max(&word[..pos]), split_max(&word[pos + 1..])),
        }
    }
    split_max(sigma.word())
}
