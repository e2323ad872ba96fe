//! The permutation Hopf algebra `k[S∞]`: shuffles, block product, the
//! shuffle-sum `∗` product and the split coproduct.

use std::fmt;

use crate::error::{Error, Result};
use crate::freemodule::{LinComb, Pair, Tensor2};

/// A permutation in one-line notation; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

pub type PermSum = LinComb<Permutation>;

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// Image of `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1]
    }

    /// `(self · other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// All `(p,q)` shuffles, sorted.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    // choose the image set of 1..p, increasing
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if chosen.len() == p {
            let rest = (1..=n).filter(|v| !chosen.contains(v));
            let word = chosen.iter().copied().chain(rest).collect();
            out.push(Permutation(word));
            return;
        }
        for v in start..=n {
            chosen.push(v);
            rec(v + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, p, &mut chosen, &mut out);
    out.sort();
    out
}

/// Block product: `rho` acts on the first `p` letters, `sigma` on the last `q`.
pub fn times(rho: &Permutation, sigma: &Permutation) -> Permutation {
    let p = rho.len();
    Permutation(rho.0.iter().copied().chain(sigma.0.iter().map(|v| v + p)).collect())
}

/// `rho ∗ sigma = Σ α · (rho × sigma)` over the `(p,q)` shuffles `α`.
pub fn star_perm(rho: &Permutation, sigma: &Permutation) -> PermSum {
    let block = times(rho, sigma);
    PermSum::sum_of(
        shuffles(rho.len(), sigma.len())
            .iter()
            .map(|alpha| alpha.compose(&block)),
    )
}

pub fn star_perm_sums(x: &PermSum, y: &PermSum) -> PermSum {
    crate::freemodule::bilinear(x, y, star_perm)
}

/// The unique `(σ_i, σ'_{n-i}, w)` with `σ = (σ_i × σ'_{n-i}) · w⁻¹` and `w`
/// an `(i, n-i)` shuffle, found by searching all shuffles.
pub fn split(sigma: &Permutation, i: usize) -> Result<(Permutation, Permutation, Permutation)> {
    let n = sigma.len();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let mut found = None;
    for w in shuffles(i, n - i) {
        let block = sigma.compose(&w);
        if block.0[..i].iter().all(|&v| v <= i) {
            let left = Permutation(block.0[..i].to_vec());
            let right = Permutation(block.0[i..].iter().map(|v| v - i).collect());
            debug_assert_eq!(times(&left, &right).compose(&w.inverse()), *sigma);
            assert!(found.is_none(), "split of {sigma} at {i} is not unique");
            found = Some((left, right, w));
        }
    }
    Ok(found.expect("every permutation splits at every index"))
}

pub fn coproduct_perm(sigma: &Permutation) -> Tensor2<Permutation> {
    Tensor2::sum_of((0..=sigma.len()).map(|i| {
        let (a, b, _) = split(sigma, i).expect("index within range");
        Pair(a, b)
    }))
}

pub fn coproduct_perm_sum(x: &PermSum) -> Tensor2<Permutation> {
    x.map_linear(coproduct_perm)
}

/// All permutations of `1..=n` in canonical order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation(prefix.clone()));
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
