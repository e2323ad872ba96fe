//! Formal linear combinations with exact rational coefficients.
//!
//! Every algebraic object in the crate (tree sums, graph sums, tensors,
//! permutation sums, word sums) is a [`LinComb`] over some canonically
//! ordered basis type. Zero coefficients are never stored, so two values are
//! equal exactly when their term maps are equal.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

/// A two-fold tensor basis element, printed `a@b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair<A, B>(pub A, pub B);

/// A three-fold tensor basis element, printed `a@b@c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple<A, B, C>(pub A, pub B, pub C);

pub type Tensor2<B> = LinComb<Pair<B, B>>;
pub type Tensor3<B> = LinComb<Triple<B, B, B>>;

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.0, self.1)
    }
}

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for Triple<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}@{}", self.0, self.1, self.2)
    }
}

impl<B: Ord + Clone> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// The basis element `b` with coefficient 1.
    pub fn basis(b: B) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn term(c: Rational, b: B) -> Self {
        let mut x = Self::zero();
        x.add_term(c, b);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, B)>>(iter: I) -> Self {
        let mut x = Self::zero();
        for (c, b) in iter {
            x.add_term(c, b);
        }
        x
    }

    /// Sum of the given basis elements, each with coefficient 1 (repeats add up).
    pub fn sum_of<I: IntoIterator<Item = B>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|b| (Rational::one(), b)))
    }

    pub fn add_term(&mut self, c: Rational, b: B) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<B>) {
        if c.is_zero() {
            return;
        }
        for (b, d) in &other.terms {
            self.add_term(c * d, b.clone());
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

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, b: &B) -> bool {
        self.terms.contains_key(b)
    }

    /// Terms in canonical basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, d)| (b.clone(), c * d)).collect(),
        }
    }

    /// Keeps only the terms whose basis element satisfies `keep`.
    pub fn filter<F: FnMut(&B) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a basis map.
    pub fn map_linear<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Linear extension of a fallible basis map.
    pub fn try_map_linear<C, E, F>(&self, mut f: F) -> Result<LinComb<C>, E>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<LinComb<C>, E>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b)?);
        }
        Ok(out)
    }

    /// Relabels basis elements through `f` (terms landing on the same element add up).
    pub fn map_basis<C: Ord + Clone, F: FnMut(&B) -> C>(&self, mut f: F) -> LinComb<C> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (c.clone(), f(b))))
    }

    pub fn into_terms(self) -> BTreeMap<B, Rational> {
        self.terms
    }
}

/// Bilinear extension of an operation defined on basis pairs.
pub fn bilinear<A, B, C, F>(x: &LinComb<A>, y: &LinComb<B>, mut f: F) -> LinComb<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> LinComb<C>,
{
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&(ca * cb), &f(a, b));
        }
    }
    out
}

pub fn try_bilinear<A, B, C, E, F>(x: &LinComb<A>, y: &LinComb<B>, mut f: F) -> Result<LinComb<C>, E>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> Result<LinComb<C>, E>,
{
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&(ca * cb), &f(a, b)?);
        }
    }
    Ok(out)
}

pub fn tensor<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<Pair<A, B>> {
    bilinear(x, y, |a, b| LinComb::basis(Pair(a.clone(), b.clone())))
}

/// Componentwise product on two-fold tensors: `(a@b)(c@d) = ac @ bd`.
pub fn tensor2_mul<B, F>(x: &Tensor2<B>, y: &Tensor2<B>, mut mul: F) -> Tensor2<B>
where
    B: Ord + Clone,
    F: FnMut(&B, &B) -> LinComb<B>,
{
    bilinear(x, y, |Pair(a, b), Pair(c, d)| tensor(&mul(a, c), &mul(b, d)))
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(c, b);
        }
    }
}

impl<B: Ord + Clone> SubAssign for LinComb<B> {
    fn sub_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(-c, b);
        }
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Mul<&LinComb<B>> for &Rational {
    type Output = LinComb<B>;
    fn mul(self, rhs: &LinComb<B>) -> LinComb<B> {
        rhs.scale(self)
    }
}

impl<B: Ord + Clone> FromIterator<(Rational, B)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (Rational, B)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Canonical text form: `t1 + 2*t2 - 1/3*t3`, coefficient 1 elided, `0` for
/// the empty sum.
impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{}*{b}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
