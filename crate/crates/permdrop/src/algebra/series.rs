//! Exact truncated power series in `p`, `q`, `z`.
//!
//! Truncation keeps every monomial with all three exponents at most the
//! order `N`; ring operations drop anything beyond. For the series of
//! interest every term satisfies `deg_q <= deg_z` and `deg_p < deg_z`
//! (for positive z-degree), so coefficients with `deg_z <= N` are exact.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// (z exponent, q exponent, p exponent) -> coefficient
    terms: BTreeMap<(u32, u32, u32), i64>,
    order: u32,
}

impl TruncatedSeries {
    pub fn zero(order: u32) -> Self {
        TruncatedSeries {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(0, 0, 0, 1);
        s
    }

    pub fn monomial(order: u32, c: i64, z_deg: u32, q_deg: u32, p_deg: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(z_deg, q_deg, p_deg, c);
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, z_deg: u32, q_deg: u32, p_deg: u32, c: i64) {
        if c == 0 || z_deg > self.order || q_deg > self.order || p_deg > self.order {
            return;
        }
        let entry = self.terms.entry((z_deg, q_deg, p_deg)).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&(z_deg, q_deg, p_deg));
        }
    }

    pub fn coefficient(&self, z_deg: u32, q_deg: u32, p_deg: u32) -> i64 {
        self.terms.get(&(z_deg, q_deg, p_deg)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    fn assert_same_order(&self, other: &TruncatedSeries) {
        assert_eq!(self.order, other.order, "mixed truncation orders");
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(other);
        let mut out = self.clone();
        for ((z, q, p), c) in other.terms() {
            out.add_term(z, q, p, c);
        }
        out
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(other);
        let mut out = self.clone();
        for ((z, q, p), c) in other.terms() {
            out.add_term(z, q, p, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(other);
        let mut out = TruncatedSeries::zero(self.order);
        for ((z1, q1, p1), c1) in self.terms() {
            for ((z2, q2, p2), c2) in other.terms() {
                if z1 + z2 > self.order || q1 + q2 > self.order || p1 + p2 > self.order {
                    continue;
                }
                out.add_term(
                    z1 + z2,
                    q1 + q2,
                    p1 + p2,
                    c1.checked_mul(c2).expect("coefficient overflow"),
                );
            }
        }
        out
    }

    /// Multiplicative inverse through the truncation order, for series with
    /// constant term 1: geometric iteration on `R = 1 - self`.
    ///
    /// Panics if the constant term is not 1.
    pub fn inverse(&self) -> TruncatedSeries {
        assert_eq!(self.coefficient(0, 0, 0), 1, "constant term must be 1");
        let one = TruncatedSeries::one(self.order);
        let r = one.sub(self);
        assert_eq!(r.coefficient(0, 0, 0), 0);
        let mut out = one.clone();
        let mut power = one;
        // each factor of r raises total degree, so this terminates
        for _ in 0..=3 * self.order {
            power = power.mul(&r);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        assert!(
            power.is_zero(),
            "inverse did not converge within the truncation"
        );
        out
    }

    /// Floating-point evaluation, for numeric cross-checks.
    pub fn eval_f64(&self, z: f64, q: f64, p: f64) -> f64 {
        self.terms()
            .map(|((zd, qd, pd), c)| {
                c as f64 * z.powi(zd as i32) * q.powi(qd as i32) * p.powi(pd as i32)
            })
            .sum()
    }
}

impl fmt::Display for TruncatedSeries {
    /// Canonical form: graded-lex on `(z, q, p)` descending, terms printed
    /// as `c*p^a*q^b*z^c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<((u32, u32, u32), i64)> = self.terms().collect();
        keys.sort_by(|((z1, q1, p1), _), ((z2, q2, p2), _)| {
            (z2 + q2 + p2, z2, q2, p2).cmp(&(z1 + q1 + p1, z1, q1, p1))
        });
        let mut first = true;
        for ((z_deg, q_deg, p_deg), c) in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || (z_deg == 0 && q_deg == 0 && p_deg == 0) {
                factors.push(c.to_string());
            }
            for (sym, deg) in [("p", p_deg), ("q", q_deg), ("z", z_deg)] {
                match deg {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    d => factors.push(format!("{sym}^{d}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        // 1/(1 - z) = 1 + z + z^2 + ..
        let mut d = TruncatedSeries::one(5);
        d.add_term(1, 0, 0, -1);
        let inv = d.inverse();
        for z in 0..=5 {
            assert_eq!(inv.coefficient(z, 0, 0), 1);
        }
        assert_eq!(d.mul(&inv), TruncatedSeries::one(5));
    }

    #[test]
    fn inverse_with_pure_q_part() {
        // 1/((1-q) - z) has q powers at every z order
        let mut d = TruncatedSeries::one(4);
        d.add_term(0, 1, 0, -1);
        d.add_term(1, 0, 0, -1);
        let inv = d.inverse();
        assert_eq!(d.mul(&inv).coefficient(0, 0, 0), 1);
        // [z^1] 1/((1-q)-z) = 1/(1-q)^2 = 1 + 2q + 3q^2 + ..
        assert_eq!(inv.coefficient(1, 0, 0), 1);
        assert_eq!(inv.coefficient(1, 1, 0), 2);
        assert_eq!(inv.coefficient(1, 2, 0), 3);
    }

    #[test]
    fn truncation_commutes_with_multiplication() {
        let a = TruncatedSeries::monomial(3, 2, 1, 1, 0);
        let b =
            TruncatedSeries::monomial(3, 5, 2, 0, 1).add(&TruncatedSeries::monomial(3, 1, 3, 0, 0));
        let ab = a.mul(&b);
        assert_eq!(ab.coefficient(3, 1, 1), 10);
        // z^4 term dropped
        assert_eq!(ab.terms().count(), 1);
    }

    #[test]
    fn canonical_string() {
        let s =
            TruncatedSeries::monomial(4, 1, 1, 1, 0).add(&TruncatedSeries::monomial(4, 3, 2, 0, 1));
        assert_eq!(s.to_string(), "3*p*z^2 + q*z");
    }
}
