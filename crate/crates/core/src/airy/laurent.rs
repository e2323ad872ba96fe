use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Signed, Zero};

use crate::freemodule::{fmt_rational, Rational};

/// A Laurent polynomial in the variables `p, p1, p2, ...` (indexed from 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

/// Printed name of variable `i`: `p`, then `p1`, `p2`, ...
pub fn var_name(i: usize) -> String {
    if i == 0 {
        "p".to_string()
    } else {
        format!("p{i}")
    }
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    pub fn monomial(c: Rational, exponents: Vec<i32>) -> Self {
        let mut out = Self::zero(exponents.len());
        out.add_term(exponents, c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, c: Rational) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Sum of exponents, if every monomial has the same one.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "multiplying polynomials in different rings");
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let g = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c * d);
            }
        }
        out
    }
}

/// `c * p^a * p1^b`, zero exponents omitted, terms joined by ` + ` / ` - `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&fmt_rational(&c.abs()))?;
            for (v, &x) in e.iter().enumerate() {
                if x != 0 {
                    write!(f, " * {}^{x}", var_name(v))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemodule::{int, rat};

    #[test]
    fn arithmetic() {
        let a = LaurentPoly::monomial(rat(1, 2), vec![-2, 0]);
        let b = LaurentPoly::monomial(int(3), vec![1, -2]);
        let ab = &a * &b;
        assert_eq!(ab, LaurentPoly::monomial(rat(3, 2), vec![-1, -2]));
        assert!((&a + &-&a).is_zero());
        assert_eq!((&a + &b).len(), 2);
        assert_eq!((&a + &b).homogeneous_degree(), None);
        assert_eq!(ab.homogeneous_degree(), Some(-3));
    }

    #[test]
    fn display() {
        let a = LaurentPoly::monomial(rat(1, 16), vec![-4]);
        assert_eq!(a.to_string(), "1/16 * p^-4");
        let b = LaurentPoly::monomial(rat(-1, 2), vec![-2, 0, -2]);
        assert_eq!(b.to_string(), "-1/2 * p^-2 * p2^-2");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(LaurentPoly::constant(1, int(3)).to_string(), "3");
    }

    #[test]
    fn permute_swaps_variables() {
        let a = LaurentPoly::monomial(int(1), vec![-2, -4, 0]);
        assert_eq!(a.permute(&[1, 0, 2]), LaurentPoly::monomial(int(1), vec![-4, -2, 0]));
    }
}
