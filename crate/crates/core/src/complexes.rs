//! The border operator on trees, the quantum differential `d_h` on loop
//! graphs, and exact (co)homology dimensions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freemodule::{LinComb, Rational};
use crate::hopfops::{star_h_sums, GraphSum, TreeSum};
use crate::loopgraphs::{contract, enumerate_graphs, loop_slots, LoopGraph};
use crate::subalgebras::{enumerate_words, project_regular, psi_word};
use crate::trees::{enumerate_trees, face, PlanarBinaryTree};

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn homogeneous_order<B: Ord + Clone, K: PartialEq, F: Fn(&B) -> K>(x: &LinComb<B>, order: F) -> Result<Option<K>> {
    let mut orders = x.support().map(order);
    let first = orders.next();
    if orders.any(|o| Some(o) != first) {
        return Err(Error::NotHomogeneous("mixed orders".into()));
    }
    Ok(first)
}

fn border_basis(t: &PlanarBinaryTree) -> TreeSum {
    TreeSum::from_terms((0..=t.order()).map(|i| (sign(i), face(i, t).expect("index in range"))))
}

/// `d = Σ (-1)^i d_i` on a homogeneous tree sum of order `n >= 1`.
pub fn border(x: &TreeSum) -> Result<TreeSum> {
    if homogeneous_order(x, PlanarBinaryTree::order)? == Some(0) {
        return Err(Error::NotHomogeneous("border needs order >= 1".into()));
    }
    Ok(x.map_linear(border_basis))
}

/// `(-1)^{g_i} ↔_i` where `g_i` counts the looped slots strictly below `i`.
pub fn signed_contract(i: usize, t: &LoopGraph) -> GraphSum {
    let below = loop_slots(t).range(..i).count();
    match contract(i, t) {
        Some(c) => GraphSum::term(sign(below), c),
        None => GraphSum::zero(),
    }
}

fn d_h_basis(t: &LoopGraph) -> GraphSum {
    let mut out = GraphSum::zero();
    for i in 0..t.order() {
        out.add_scaled(&sign(i), &signed_contract(i, t));
    }
    out
}

/// The quantum differential, extended linearly.
pub fn d_h(x: &GraphSum) -> GraphSum {
    x.map_linear(d_h_basis)
}

/// `d_h` followed by the projection to regular graphs.
pub fn d_h_reg(x: &GraphSum) -> GraphSum {
    project_regular(&d_h(x))
}

/// A graph sum homogeneous in (order, genus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub order: usize,
    pub genus: usize,
    pub value: GraphSum,
}

impl Cochain {
    /// Fails if the support mixes bidegrees. The zero sum needs an explicit
    /// bidegree, see [`Cochain::zero`].
    pub fn new(value: GraphSum) -> Result<Cochain> {
        let (order, genus) = homogeneous_order(&value, LoopGraph::bidegree)?.unwrap_or((0, 0));
        Ok(Cochain { order, genus, value })
    }

    pub fn zero(order: usize, genus: usize) -> Cochain {
        Cochain {
            order,
            genus,
            value: GraphSum::zero(),
        }
    }

    pub fn d_h(&self) -> Cochain {
        Cochain {
            order: self.order,
            genus: self.genus + 1,
            value: d_h(&self.value),
        }
    }

    pub fn d_h_reg(&self) -> Cochain {
        Cochain {
            order: self.order,
            genus: self.genus + 1,
            value: d_h_reg(&self.value),
        }
    }
}

/// Rank of a rational matrix given as rows, by fraction-free (Bareiss)
/// elimination after clearing denominators row by row.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Coordinates of sums against an indexed basis; one row per sum.
fn coordinates<B: Ord + Clone>(sums: &[LinComb<B>], basis: &BTreeMap<B, usize>) -> Vec<Vec<Rational>> {
    sums.iter()
        .map(|x| {
            let mut row = vec![Rational::zero(); basis.len()];
            for (b, c) in x.iter() {
                row[basis[b]] = c.clone();
            }
            row
        })
        .collect()
}

fn index<B: Ord + Clone>(items: impl IntoIterator<Item = B>) -> BTreeMap<B, usize> {
    items.into_iter().enumerate().map(|(i, b)| (b, i)).collect()
}

/// Which complex a cohomology computation runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// All graphs, differential `d_h`.
    Full,
    /// Regular graphs, differential `π∘d_h`.
    Reg,
    /// The span of word images inside the regular graphs, differential `π∘d_h`.
    TopRec,
}

impl std::str::FromStr for Space {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(Space::Full),
            "reg" => Ok(Space::Reg),
            "toprec" => Ok(Space::TopRec),
            other => Err(format!("unknown space {other:?}")),
        }
    }
}

/// Spanning set of the cochain space at bidegree `(n, g)`.
fn cochain_generators(n: usize, g: usize, space: Space) -> Vec<GraphSum> {
    match space {
        Space::Full => enumerate_graphs(n, g, false).into_iter().map(GraphSum::basis).collect(),
        Space::Reg => enumerate_graphs(n, g, true).into_iter().map(GraphSum::basis).collect(),
        Space::TopRec => enumerate_words(n, g)
            .iter()
            .map(|w| psi_word(w).expect("enumerated words are valid"))
            .collect(),
    }
}

fn differential(space: Space, x: &GraphSum) -> GraphSum {
    match space {
        Space::Full => d_h(x),
        Space::Reg | Space::TopRec => d_h_reg(x),
    }
}

/// `dim Z^{n,g} - dim B^{n,g}`, with `Z` the cocycles inside the chosen
/// space and `B` the image of the space one genus lower, intersected with
/// the space at genus `g`.
pub fn cohomology_dim(n: usize, g: usize, space: Space) -> usize {
    let here = cochain_generators(n, g, space);
    let ambient = index(enumerate_graphs(n, g, false));
    let above = index(enumerate_graphs(n, g + 1, false));

    let dim_here = rank(&coordinates(&here, &ambient));
    let images: Vec<_> = here.iter().map(|x| differential(space, x)).collect();
    let cocycles = dim_here - rank(&coordinates(&images, &above));

    let boundaries = if g == 0 {
        0
    } else {
        let below: Vec<_> = cochain_generators(n, g - 1, space)
            .iter()
            .map(|x| differential(space, x))
            .collect();
        let b_rows = coordinates(&below, &ambient);
        let h_rows = coordinates(&here, &ambient);
        let joint: Vec<_> = b_rows.iter().chain(&h_rows).cloned().collect();
        rank(&b_rows) + dim_here - rank(&joint)
    };
    cocycles - boundaries
}

/// Homology of `(k[Y^n], d)` at order `n`.
pub fn tree_homology_dim(n: usize) -> usize {
    let here = enumerate_trees(n);
    let chains_here: Vec<_> = here.iter().cloned().map(TreeSum::basis).collect();
    let cycles = if n == 0 {
        here.len()
    } else {
        let lower = index(enumerate_trees(n - 1));
        let images: Vec<_> = chains_here.iter().map(|x| border(x).expect("order >= 1")).collect();
        here.len() - rank(&coordinates(&images, &lower))
    };
    let hi = enumerate_trees(n + 1)
        .into_iter()
        .map(|t| border(&TreeSum::basis(t)).expect("order >= 1"))
        .collect::<Vec<_>>();
    cycles - rank(&coordinates(&hi, &index(here)))
}

/// Result of testing `d_h(x ∗ y) = d_h(x) ∗ y + s · x ∗ d_h(y)` for `s = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizReport {
    pub plus_holds: bool,
    pub minus_holds: bool,
    /// `(-1)^{genus(x)}`, the sign of the genus-graded rule.
    pub genus_sign: i32,
    /// `(-1)^{order(x)}`, the sign of the order-graded rule.
    pub order_sign: i32,
}

impl LeibnizReport {
    pub fn holds(&self) -> bool {
        self.plus_holds || self.minus_holds
    }

    pub fn holds_with(&self, s: i32) -> bool {
        if s > 0 {
            self.plus_holds
        } else {
            self.minus_holds
        }
    }
}

pub fn leibniz_probe(x: &GraphSum, y: &GraphSum) -> Result<LeibnizReport> {
    let (nx, gx) = homogeneous_order(x, LoopGraph::bidegree)?.unwrap_or((0, 0));
    homogeneous_order(y, LoopGraph::bidegree)?;
    let lhs = d_h(&star_h_sums(x, y));
    let first = star_h_sums(&d_h(x), y);
    let second = star_h_sums(x, &d_h(y));
    let parity = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    Ok(LeibnizReport {
        plus_holds: lhs == &first + &second,
        minus_holds: lhs == &first - &second,
        genus_sign: parity(gx),
        order_sign: parity(nx),
    })
}
