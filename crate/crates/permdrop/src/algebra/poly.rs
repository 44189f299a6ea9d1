//! Exact integer polynomials in `q` and `t`.

use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `q`, `t` with `i64` coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtPoly {
    /// (q exponent, t exponent) -> coefficient
    terms: BTreeMap<(u32, u32), i64>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = QtPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        QtPoly::constant(1)
    }

    /// The monomial `c * q^a * t^b`.
    pub fn monomial(c: i64, q_deg: u32, t_deg: u32) -> Self {
        let mut p = QtPoly::zero();
        p.add_term(q_deg, t_deg, c);
        p
    }

    pub fn add_term(&mut self, q_deg: u32, t_deg: u32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((q_deg, t_deg)).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&(q_deg, t_deg));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, q_deg: u32, t_deg: u32) -> i64 {
        self.terms.get(&(q_deg, t_deg)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&self, other: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term(
                    a1 + a2,
                    b1 + b2,
                    c1.checked_mul(c2).expect("coefficient overflow"),
                );
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> QtPoly {
        let mut out = QtPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at integer `q`, `t`.
    pub fn eval(&self, q: i64, t: i64) -> i64 {
        let mut total: i64 = 0;
        for ((a, b), c) in self.terms() {
            let mut v = c;
            for _ in 0..a {
                v = v.checked_mul(q).expect("overflow");
            }
            for _ in 0..b {
                v = v.checked_mul(t).expect("overflow");
            }
            total = total.checked_add(v).expect("overflow");
        }
        total
    }
}

impl fmt::Display for QtPoly {
    /// Canonical form: terms in graded-lex order on `(t, q)` descending,
    /// each printed as `c*q^a*t^b` with unit coefficients and exponents
    /// elided, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<((u32, u32), i64)> = self.terms().collect();
        keys.sort_by(|((q1, t1), _), ((q2, t2), _)| (t2 + q2, t2, q2).cmp(&(t1 + q1, t1, q1)));
        let mut first = true;
        for ((q_deg, t_deg), c) in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || (q_deg == 0 && t_deg == 0) {
                factors.push(c.to_string());
            }
            for (sym, deg) in [("q", q_deg), ("t", t_deg)] {
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
    fn arithmetic_basics() {
        let q = QtPoly::monomial(1, 1, 0);
        let t = QtPoly::monomial(1, 0, 1);
        let p = q.add(&t).mul(&q.add(&t));
        assert_eq!(p.coefficient(2, 0), 1);
        assert_eq!(p.coefficient(1, 1), 2);
        assert_eq!(p.coefficient(0, 2), 1);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.eval(1, 1), 4);
    }

    #[test]
    fn canonical_string() {
        let q = QtPoly::monomial(1, 1, 0);
        let t = QtPoly::monomial(1, 0, 1);
        let p = t.pow(2).add(&q.mul(&t));
        assert_eq!(p.to_string(), "t^2 + q*t");
        assert_eq!(QtPoly::zero().to_string(), "0");
        assert_eq!(QtPoly::constant(3).to_string(), "3");
        let m = QtPoly::monomial(2, 3, 1);
        assert_eq!(m.to_string(), "2*q^3*t");
    }
}
