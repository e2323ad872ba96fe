use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};
use crate::freemodule::{rat, Rational};

/// A Laurent series in `q` whose coefficients are Laurent polynomials in the
/// leg variables. `precision` is the highest power of `q` that is known
/// (`None` for an exact, finite series).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    nvars: usize,
    low: i64,
    coeffs: Vec<LaurentPoly>,
    precision: Option<i64>,
}

impl QSeries {
    pub fn zero(nvars: usize, precision: Option<i64>) -> Self {
        QSeries {
            nvars,
            low: 0,
            coeffs: Vec::new(),
            precision,
        }
    }

    /// The exact series `c * q^k`.
    pub fn monomial(k: i64, c: LaurentPoly) -> Self {
        let nvars = c.nvars();
        QSeries::from_terms(nvars, [(k, c)], None)
    }

    pub fn from_terms<I>(nvars: usize, terms: I, precision: Option<i64>) -> Self
    where
        I: IntoIterator<Item = (i64, LaurentPoly)>,
    {
        let mut out = QSeries::zero(nvars, precision);
        for (k, c) in terms {
            out.add_at(k, &c);
        }
        out.normalize();
        out
    }

    fn add_at(&mut self, k: i64, c: &LaurentPoly) {
        if let Some(p) = self.precision {
            if k > p {
                return;
            }
        }
        if self.coeffs.is_empty() {
            self.low = k;
        }
        if k < self.low {
            let pad = (self.low - k) as usize;
            let mut v = vec![LaurentPoly::zero(self.nvars); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = k;
        }
        let i = (k - self.low) as usize;
        if i >= self.coeffs.len() {
            self.coeffs.resize(i + 1, LaurentPoly::zero(self.nvars));
        }
        self.coeffs[i] = &self.coeffs[i] + c;
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(LaurentPoly::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() {
            0
        } else {
            self.low + lead as i64
        };
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Lowest power of `q` with a nonzero coefficient, `None` for zero.
    pub fn low(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> LaurentPoly {
        if k < self.low || k >= self.low + self.coeffs.len() as i64 {
            return LaurentPoly::zero(self.nvars);
        }
        self.coeffs[(k - self.low) as usize].clone()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c))
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let precision = match (self.precision, other.precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = QSeries::zero(self.nvars, precision);
        for (k, c) in self.terms().chain(other.terms()) {
            out.add_at(k, c);
        }
        out.normalize();
        out
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        // a known term q^k of one factor pairs with the unknown tail of the other
        let bound = |a: &QSeries, b: &QSeries| b.precision.map(|p| a.low().map_or(i64::MAX, |l| l + p));
        let precision = match (bound(self, other), bound(other, self)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = QSeries::zero(self.nvars, precision);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                if precision.is_some_and(|p| i + j > p) {
                    continue;
                }
                out.add_at(i + j, &(a * b));
            }
        }
        out.normalize();
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> QSeries {
        let mut out = QSeries::zero(self.nvars, self.precision);
        for (k, a) in self.terms() {
            out.add_at(k, &(a * c));
        }
        out.normalize();
        out
    }
}

/// `1/(q - p_leg)^2 = Σ (m+1) q^m p_leg^{-m-2}`, kept up to `q^order`.
pub fn bergman_series(nvars: usize, leg: usize, order: i64) -> QSeries {
    let terms = (0..=order).map(|m| {
        let mut e = vec![0; nvars];
        e[leg] = -(m as i32) - 2;
        (m, LaurentPoly::monomial(Rational::from_integer(BigInt::from(m + 1)), e))
    });
    QSeries::from_terms(nvars, terms, Some(order))
}

/// The recursion kernel `1/(4q(q^2 - p^2)) = -1/(4p^2) q^{-1} Σ (q/p)^{2m}`,
/// expanded in `p = variable 0` and kept up to `q^order`.
pub fn kernel_series(nvars: usize, order: i64) -> QSeries {
    let terms = (0..).map(|m: i64| 2 * m - 1).take_while(|&k| k <= order).map(|k| {
        let mut e = vec![0; nvars];
        e[0] = -(k as i32) - 3;
        (k, LaurentPoly::monomial(rat(-1, 4), e))
    });
    QSeries::from_terms(nvars, terms, Some(order))
}

/// `q -> -q` together with the `-1` from `d(-q) = -dq`.
pub fn conjugate_leg(s: &QSeries) -> QSeries {
    let mut out = QSeries::zero(s.nvars, s.precision);
    for (k, c) in s.terms() {
        let sign = if k % 2 == 0 { -Rational::one() } else { Rational::one() };
        out.add_at(k, &c.scale(&sign));
    }
    out.normalize();
    out
}

pub fn residue_at_zero(s: &QSeries) -> Result<LaurentPoly> {
    match s.precision {
        Some(p) if p < -1 => Err(Error::TruncationInsufficient { precision: p }),
        _ => Ok(s.coeff(-1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemodule::int;

    fn mono(c: Rational, e: Vec<i32>) -> LaurentPoly {
        LaurentPoly::monomial(c, e)
    }

    #[test]
    fn bergman_examples() {
        let b0 = bergman_series(2, 1, 0);
        assert_eq!(b0, QSeries::from_terms(2, [(0, mono(int(1), vec![0, -2]))], Some(0)));
        let b1 = bergman_series(2, 1, 1);
        assert_eq!(b1.coeff(1), mono(int(2), vec![0, -3]));
        assert_eq!(bergman_series(2, 1, 7).coeff(0), b0.coeff(0));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_series(1, 5);
        assert_eq!(k.low(), Some(-1));
        assert_eq!(k.coeff(-1), mono(rat(-1, 4), vec![-2]));
        assert_eq!(k.coeff(1), mono(rat(-1, 4), vec![-4]));
        assert!(k.coeff(0).is_zero() && k.coeff(2).is_zero());
    }

    #[test]
    fn kernel_times_conjugate_cylinder() {
        // W^0_2(q, -q) with the conjugation sign is -1/(4q^2)
        let w = QSeries::monomial(-2, LaurentPoly::constant(1, rat(-1, 4)));
        let r = residue_at_zero(&kernel_series(1, 3).mul(&w)).unwrap();
        assert_eq!(r, mono(rat(1, 16), vec![-4]));
    }

    #[test]
    fn conjugation_is_an_involution() {
        let b = bergman_series(2, 1, 4);
        assert_eq!(conjugate_leg(&conjugate_leg(&b)), b);
        // 1/(q-p1)^2 becomes -1/(q+p1)^2
        let c = conjugate_leg(&b);
        assert_eq!(c.coeff(0), mono(int(-1), vec![0, -2]));
        assert_eq!(c.coeff(1), mono(int(2), vec![0, -3]));
    }

    #[test]
    fn residues() {
        let one = LaurentPoly::constant(1, int(1));
        assert_eq!(residue_at_zero(&QSeries::monomial(-1, one.clone())).unwrap(), one);
        for m in [-3, -2, 0, 1, 2] {
            assert!(residue_at_zero(&QSeries::monomial(m, one.clone())).unwrap().is_zero());
        }
        assert!(residue_at_zero(&bergman_series(1, 0, 3)).unwrap().is_zero());
        let short = QSeries::from_terms(1, [(-3, one.clone())], Some(-2));
        assert!(residue_at_zero(&short).is_err());
    }

    #[test]
    fn truncated_products_track_precision() {
        let b = bergman_series(2, 1, 4);
        let pole = QSeries::monomial(-3, LaurentPoly::constant(2, int(1)));
        let prod = pole.mul(&b);
        assert_eq!(prod.precision(), Some(1));
        assert_eq!(prod.coeff(-1), mono(int(3), vec![0, -4]));
        let sum = prod.add(&b);
        assert_eq!(sum.precision(), Some(1));
    }
}
