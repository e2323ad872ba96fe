//! Topological recursion on the Airy curve `x = z^2, y = z`, computed with
//! exact Laurent series around the single branch point `z = 0`.
//!
//! Correlators are stored as scalar coefficients; the differentials
//! `dp dp1 ...` are implicit. Every conjugated leg `q̄ = -q` carries the sign
//! of `d(-q) = -dq`.

mod laurent;
mod series;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde_json::{json, Value};

pub use laurent::{var_name, LaurentPoly};
pub use series::{bergman_series, conjugate_leg, kernel_series, residue_at_zero, QSeries};

use crate::error::{Error, Result};
use crate::freemodule::rat;

/// `W^g_k(p, p1, ..., p_{k-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correlator {
    pub genus: u32,
    pub legs: u32,
    pub coefficient: LaurentPoly,
}

impl Correlator {
    /// `-(6g - 6 + 4k)`.
    pub fn expected_degree(g: u32, k: u32) -> i32 {
        -(6 * g as i32 - 6 + 4 * k as i32)
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.legs as usize;
        // adjacent transpositions generate the symmetric group
        (0..k.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..k).collect();
            perm.swap(i, i + 1);
            self.coefficient.permute(&perm) == self.coefficient
        })
    }

    /// Every exponent even and at most `-2`.
    pub fn has_even_poles(&self) -> bool {
        self.coefficient
            .iter()
            .all(|(e, _)| e.iter().all(|&x| x % 2 == 0 && x <= -2))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.coefficient.homogeneous_degree() == Some(Self::expected_degree(self.genus, self.legs))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coefficient
            .iter()
            .map(|(e, c)| {
                json!({
                    "exponents": e,
                    "numerator": c.numer().to_string(),
                    "denominator": c.denom().to_string(),
                })
            })
            .collect();
        json!({ "genus": self.genus, "legs": self.legs, "terms": terms })
    }
}

impl fmt::Display for Correlator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.coefficient, f)
    }
}

fn is_stable(g: u32, k: u32) -> bool {
    2 * g + k >= 3 && k >= 1
}

/// Default number of kept `q` powers for `(g, k)`.
pub fn default_order(g: u32, k: u32) -> i64 {
    2 * (3 * g as i64 - 2 + k as i64) + 4
}

/// Memoized recursion. The table only ever receives final, exact values, so
/// a key computed twice by racing threads gets the same entry.
#[derive(Default)]
pub struct AiryRecursion {
    memo: Mutex<HashMap<(u32, u32), Correlator>>,
}

impl AiryRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn correlator(&self, g: u32, k: u32) -> Result<Correlator> {
        if !is_stable(g, k) {
            return Err(Error::Unstable { g, k });
        }
        if let Some(c) = self.memo.lock().expect("memo lock").get(&(g, k)) {
            return Ok(c.clone());
        }
        let mut order = default_order(g, k);
        let coefficient = loop {
            match self.residue(g, k, order) {
                Ok(r) if self.residue(g, k, order + 4)? == r => break r,
                Ok(_) | Err(Error::TruncationInsufficient { .. }) => order *= 2,
                Err(e) => return Err(e),
            }
        };
        let c = Correlator {
            genus: g,
            legs: k,
            coefficient,
        };
        self.memo
            .lock()
            .expect("memo lock")
            .entry((g, k))
            .or_insert_with(|| c.clone());
        Ok(c)
    }

    /// One step of the recursion with series kept up to `q^order`; lower
    /// correlators come from the memo table.
    pub fn residue(&self, g: u32, k: u32, order: i64) -> Result<LaurentPoly> {
        if !is_stable(g, k) {
            return Err(Error::Unstable { g, k });
        }
        let n = k as usize;
        let rest: Vec<usize> = (1..n).collect();
        let mut bracket = QSeries::zero(n, None);

        if g >= 1 {
            let term = if (g - 1, k + 1) == (0, 2) {
                QSeries::monomial(-2, LaurentPoly::constant(n, rat(-1, 4)))
            } else {
                let w = self.correlator(g - 1, k + 1)?;
                let mut targets = vec![Slot::Q, Slot::QBar];
                targets.extend(rest.iter().map(|&v| Slot::Var(v)));
                embed(&w.coefficient, &targets, n)
            };
            bracket = bracket.add(&term);
        }

        for mask in 0..(1u32 << rest.len()) {
            let (left, right): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&v| mask & (1 << (v - 1)) != 0);
            for h in 0..=g {
                if (h == 0 && left.is_empty()) || (h == g && right.is_empty()) {
                    continue;
                }
                let a = self.factor(h, &left, false, n, order)?;
                let b = self.factor(g - h, &right, true, n, order)?;
                bracket = bracket.add(&a.mul(&b));
            }
        }
        residue_at_zero(&kernel_series(n, order).mul(&bracket))
    }

    /// `W^h_{|legs|+1}(q or q̄, legs)` as a series in the ring of `n` variables.
    fn factor(&self, h: u32, legs: &[usize], conjugate: bool, n: usize, order: i64) -> Result<QSeries> {
        let s = if (h, legs.len()) == (0, 1) {
            bergman_series(n, legs[0], order)
        } else {
            let w = self.correlator(h, legs.len() as u32 + 1)?;
            let mut targets = vec![Slot::Q];
            targets.extend(legs.iter().map(|&v| Slot::Var(v)));
            embed(&w.coefficient, &targets, n)
        };
        Ok(if conjugate { conjugate_leg(&s) } else { s })
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Q,
    QBar,
    Var(usize),
}

/// Substitutes each variable of `w` by `q`, `q̄ = -q` (with the differential
/// sign) or a leg variable of the target ring.
fn embed(w: &LaurentPoly, targets: &[Slot], n: usize) -> QSeries {
    let mut terms = Vec::new();
    for (e, c) in w.iter() {
        let mut out = vec![0; n];
        let mut power = 0i64;
        let mut c = c.clone();
        for (slot, &x) in targets.iter().zip(e) {
            match *slot {
                Slot::Q => power += x as i64,
                Slot::QBar => {
                    power += x as i64;
                    if x % 2 == 0 {
                        c = -c;
                    }
                }
                Slot::Var(v) => out[v] += x,
            }
        }
        terms.push((power, LaurentPoly::monomial(c, out)));
    }
    QSeries::from_terms(n, terms, None)
}

fn global() -> &'static AiryRecursion {
    static TABLE: OnceLock<AiryRecursion> = OnceLock::new();
    TABLE.get_or_init(AiryRecursion::new)
}

/// `W^g_k` on the Airy curve, memoized process-wide.
pub fn airy_correlator(g: u32, k: u32) -> Result<Correlator> {
    global().correlator(g, k)
}

/// True if recomputing the top recursion step with `extra` more kept powers
/// of `q` gives the same coefficient.
pub fn truncation_stable(g: u32, k: u32, extra: i64) -> Result<bool> {
    let c = airy_correlator(g, k)?;
    let again = global().residue(g, k, default_order(g, k) + extra)?;
    Ok(again == c.coefficient)
}
