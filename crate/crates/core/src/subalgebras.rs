//! The regular quotient, the word algebra on `T` and `L` with `L² = 0`, and
//! its representation as sums of regular graphs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freemodule::{tensor2_mul, LinComb, Pair, Rational, Tensor2};
use crate::hopfops::{delta_h_sum, lift, star_h, star_h_sums, star_trees, GraphSum, TreeSum};
use crate::loopgraphs::{is_regular, LoopGraph};
use crate::trees::PlanarBinaryTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The elementary one-loop graph `(|o|)`.
    L,
    /// The generator tree `(|v|)`.
    T,
}

impl Letter {
    pub fn graph(self) -> LoopGraph {
        match self {
            Letter::T => LoopGraph::tree_generator(),
            Letter::L => LoopGraph::one_loop(),
        }
    }
}

/// A word over `{T, L}`. Words containing `LL` are representable (the word
/// algebra multiplies freely) but are zero; [`Word::is_valid`] tells them apart.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

pub type WordSum = LinComb<Word>;

impl Word {
    pub fn parse(s: &str) -> Result<Word> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'T' => Ok(Letter::T),
                'L' => Ok(Letter::L),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn loops(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::L).count()
    }

    pub fn is_valid(&self) -> bool {
        self.0.windows(2).all(|w| w != [Letter::L, Letter::L])
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::T => "T",
                Letter::L => "L",
            })?;
        }
        Ok(())
    }
}

/// Sends every irregular graph to zero.
pub fn project_regular(x: &GraphSum) -> GraphSum {
    x.filter(is_regular)
}

/// Product in the regular quotient.
pub fn star_reg(x: &GraphSum, y: &GraphSum) -> GraphSum {
    project_regular(&star_h_sums(x, y))
}

/// Left fold of `∗_h` over the letters, projected to regular graphs.
pub fn psi_word(w: &Word) -> Result<GraphSum> {
    if !w.is_valid() {
        return Err(Error::InvalidWord(w.to_string()));
    }
    let acc = w.0.iter().fold(GraphSum::basis(LoopGraph::Leaf), |acc, l| {
        star_h_sums(&acc, &GraphSum::basis(l.graph()))
    });
    Ok(project_regular(&acc))
}

/// `n`-th power of the generator under the classical product.
pub fn psi_genus0(n: usize) -> GraphSum {
    let gen = TreeSum::basis(PlanarBinaryTree::generator());
    let power = (0..n).fold(TreeSum::basis(PlanarBinaryTree::Leaf), |acc, _| star_trees(&acc, &gen));
    lift(&power)
}

/// Valid words of length `n` with `g` letters `L`, sorted.
pub fn enumerate_words(n: usize, g: usize) -> Vec<Word> {
    fn rec(n: usize, g: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        let used = cur.iter().filter(|&&l| l == Letter::L).count();
        if cur.len() == n {
            if used == g {
                out.push(Word(cur.clone()));
            }
            return;
        }
        if used < g && cur.last() != Some(&Letter::L) {
            cur.push(Letter::L);
            rec(n, g, cur, out);
            cur.pop();
        }
        cur.push(Letter::T);
        rec(n, g, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(n, g, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A formal expansion `Σ h^g x_g`; the key is the power of `h`.
pub type QuantumExpansion = BTreeMap<usize, GraphSum>;

/// `ψ(W^(n))`: for each genus `g`, the sum of `psi_word` over all valid words
/// of length `n` with `g` loops.
pub fn full_correlator(n: usize) -> QuantumExpansion {
    (0..=n.div_ceil(2))
        .map(|g| {
            let mut total = GraphSum::zero();
            for w in enumerate_words(n, g) {
                total += psi_word(&w).expect("enumerated words are valid");
            }
            (g, total)
        })
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Coefficients of `a1^i a2^j` in `exp(a1 T + a2 L)` for `i + j <= max_degree`,
/// computed in the word algebra modulo `L² = 0`.
pub fn generating_function(max_degree: usize) -> BTreeMap<(usize, usize), WordSum> {
    let mut out = BTreeMap::new();
    // power of (a1 T + a2 L); each word carries its own (i, j) bidegree
    let mut power = WordSum::basis(Word::default());
    for m in 0..=max_degree {
        let inv = Rational::new(BigInt::one(), factorial(m));
        for i in 0..=m {
            out.insert((i, m - i), WordSum::zero());
        }
        for (w, c) in power.iter() {
            let key = (w.len() - w.loops(), w.loops());
            out.get_mut(&key)
                .expect("key inserted above")
                .add_term(c * &inv, w.clone());
        }
        let step = WordSum::sum_of([Word(vec![Letter::T]), Word(vec![Letter::L])]);
        power = crate::freemodule::bilinear(&power, &step, |a, b| {
            let w = a.concat(b);
            if w.is_valid() {
                WordSum::basis(w)
            } else {
                WordSum::zero()
            }
        });
    }
    out
}

/// A pair of regular graphs on which `Δ_h` fails to be multiplicative once
/// irregular graphs are sent to zero.
#[derive(Clone, Debug)]
pub struct CompatFailure {
    pub left: LoopGraph,
    pub right: LoopGraph,
    pub coproduct_of_product: Tensor2<LoopGraph>,
    pub product_of_coproducts: Tensor2<LoopGraph>,
}

/// Searches regular basis pairs (total order sum at most `max_total_order`)
/// for a failure of `Δ_h(x ∗ y) = Δ_h(x) ∗ Δ_h(y)` in the regular quotient.
pub fn regular_compat_counterexample(max_total_order: usize) -> Option<CompatFailure> {
    let graphs: Vec<_> = crate::loopgraphs::graphs_up_to_total_order(max_total_order)
        .into_iter()
        .filter(is_regular)
        .collect();
    let project2 = |x: &Tensor2<LoopGraph>| x.filter(|Pair(a, b)| is_regular(a) && is_regular(b));
    let mut pairs: Vec<_> = graphs
        .iter()
        .flat_map(|a| graphs.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.total_order() + b.total_order() <= max_total_order)
        .collect();
    pairs.sort_by_key(|(a, b)| a.total_order() + b.total_order());
    for (a, b) in pairs {
        let ga = GraphSum::basis(a.clone());
        let gb = GraphSum::basis(b.clone());
        let lhs = project2(&delta_h_sum(&star_reg(&ga, &gb)));
        let rhs = project2(&tensor2_mul(&delta_h_sum(&ga), &delta_h_sum(&gb), |x, y| {
            project_regular(&star_h(x, y))
        }));
        if lhs != rhs {
            return Some(CompatFailure {
                left: a.clone(),
                right: b.clone(),
                coproduct_of_product: lhs,
                product_of_coproducts: rhs,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_graph_sum;
    use crate::freemodule::{rat, tensor};
    use crate::loopgraphs::{enumerate_graphs, graphs_up_to_total_order, signature};
    use crate::trees::enumerate_trees;
    use std::collections::BTreeSet;

    fn sum(s: &str) -> GraphSum {
        parse_graph_sum(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn letter(l: Letter) -> GraphSum {
        GraphSum::basis(l.graph())
    }

    #[test]
    fn projection_examples() {
        assert!(project_regular(&sum("(|o(|o|)) + ((|o|)o|)")).is_zero());
        let x = sum("2*(|v(|o|)) - ((|o|)v(|o|))");
        assert_eq!(project_regular(&x), x);
        let l = letter(Letter::L);
        assert!(project_regular(&star_h_sums(&l, &l)).is_zero());
    }

    #[test]
    fn star_reg_examples() {
        let (t, l) = (letter(Letter::T), letter(Letter::L));
        assert!(star_reg(&l, &l).is_zero());
        assert_eq!(star_reg(&t, &l), sum("((|v|)o|) + (|v(|o|))"));
        assert_eq!(star_reg(&star_reg(&t, &l), &t), star_reg(&t, &star_reg(&l, &t)));
    }

    #[test]
    fn psi_word_examples() {
        assert_eq!(psi_word(&w("T")).unwrap(), sum("(|v|)"));
        assert_eq!(psi_word(&w("L")).unwrap(), sum("(|o|)"));
        let ltl = psi_word(&w("LTL")).unwrap();
        assert_eq!(ltl.len(), 5);
        assert!(ltl.support().all(|x| is_regular(x) && x.bidegree() == (3, 2)));
        let regular_g2: BTreeSet<_> = enumerate_graphs(3, 2, true).into_iter().collect();
        assert_eq!(ltl.support().cloned().collect::<BTreeSet<_>>(), regular_g2);
        assert_eq!(psi_word(&w("TTT")).unwrap(), psi_genus0(3));
        assert!(matches!(psi_word(&w("TLL")), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn psi_genus0_examples() {
        assert_eq!(psi_genus0(0), sum("|"));
        assert_eq!(psi_genus0(1), sum("(|v|)"));
        let expected = GraphSum::sum_of(enumerate_trees(3).iter().map(LoopGraph::from_tree));
        assert_eq!(psi_genus0(3), expected);
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(enumerate_words(3, 1), vec![w("LTT"), w("TLT"), w("TTL")]);
        assert!(enumerate_words(2, 2).is_empty());
        assert_eq!(enumerate_words(3, 2), vec![w("LTL")]);
    }

    #[test]
    fn full_correlator_examples() {
        let one = full_correlator(1);
        assert_eq!(one.len(), 2);
        assert_eq!(one[&0], sum("(|v|)"));
        assert_eq!(one[&1], sum("(|o|)"));
        let three = full_correlator(3);
        assert_eq!(three[&1].len(), 15);
        let distinct: usize = three.values().map(|x| x.len()).sum();
        assert_eq!(distinct, 25);
    }

    #[test]
    fn generating_function_examples() {
        let f = generating_function(3);
        assert_eq!(f[&(1, 0)], WordSum::basis(w("T")));
        assert_eq!(f[&(0, 1)], WordSum::basis(w("L")));
        assert_eq!(
            f[&(1, 1)],
            WordSum::from_terms([(rat(1, 2), w("TL")), (rat(1, 2), w("LT"))])
        );
        assert!(f[&(0, 2)].is_zero());
        assert_eq!(f[&(1, 2)], WordSum::term(rat(1, 6), w("LTL")));
        assert_eq!(f[&(0, 0)], WordSum::basis(Word::default()));
    }

    #[test]
    fn psi_words_are_regular_with_right_genus() {
        for n in 0..=5usize {
            for g in 0..=n.div_ceil(2) {
                for word in enumerate_words(n, g) {
                    let x = psi_word(&word).unwrap();
                    assert!(!x.is_zero(), "{word}");
                    for t in x.support() {
                        assert!(is_regular(t));
                        assert_eq!(t.bidegree(), (n, g));
                        let s = signature(t).unwrap();
                        assert_eq!((s.genus, s.legs, s.euler), (g, n + 2 - 2 * g, -(n as i64)));
                    }
                }
            }
        }
    }

    #[test]
    fn fold_order_is_irrelevant() {
        for n in 1..=4usize {
            for g in 0..=n.div_ceil(2) {
                for word in enumerate_words(n, g) {
                    let right = word.0.iter().rev().fold(GraphSum::basis(LoopGraph::Leaf), |acc, l| {
                        star_h_sums(&letter(*l), &acc)
                    });
                    assert_eq!(project_regular(&right), psi_word(&word).unwrap());
                }
            }
        }
    }

    #[test]
    fn irregular_span_is_an_ideal() {
        let graphs = graphs_up_to_total_order(5);
        for x in &graphs {
            for y in &graphs {
                if x.total_order() + y.total_order() > 5 {
                    continue;
                }
                let (px, py) = (
                    project_regular(&GraphSum::basis(x.clone())),
                    project_regular(&GraphSum::basis(y.clone())),
                );
                assert_eq!(project_regular(&star_h(x, y)), star_reg(&px, &py));
            }
        }
    }

    #[test]
    fn coproduct_is_not_multiplicative_on_the_quotient() {
        let irregular = sum("(|o(|o|))");
        let ll = Pair(LoopGraph::one_loop(), LoopGraph::one_loop());
        assert!(delta_h_sum(&irregular).contains(&ll));
        match regular_compat_counterexample(4) {
            Some(c) => {
                assert_eq!(
                    (c.left.clone(), c.right.clone()),
                    (LoopGraph::one_loop(), LoopGraph::one_loop())
                );
                assert!(c.coproduct_of_product.is_zero());
                assert_eq!(c.product_of_coproducts, Tensor2::term(crate::freemodule::int(2), ll));
            }
            None => panic!("expected a counterexample"),
        }
        let _ = tensor(&sum("|"), &sum("|"));
    }
}
