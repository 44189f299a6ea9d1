//! Closed forms and generating functions: q-integers, the joint
//! distribution product formula, ballot and Narayana numbers, and the
//! descent generating function `G(p,q,z)` over 213-avoiding bounded
//! permutations.

mod poly;
mod series;

pub use poly::QtPoly;
pub use series::TruncatedSeries;

use crate::Error;

/// `[i]_q = 1 + q + .. + q^{i-1}`.
pub fn q_integer(i: u32) -> Result<QtPoly, Error> {
    if i < 1 {
        return Err(Error::OutOfRange(format!(
            "q_integer needs i >= 1, got {i}"
        )));
    }
    let mut p = QtPoly::zero();
    for j in 0..i {
        p.add_term(j, 0, 1);
    }
    Ok(p)
}

/// `[k]_q! = [1]_q [2]_q .. [k]_q`, with the empty product equal to 1.
pub fn q_factorial(k: u32) -> QtPoly {
    let mut p = QtPoly::one();
    for i in 1..=k {
        p = p.mul(&q_integer(i).expect("i >= 1"));
    }
    p
}

/// `(t + [k+1]_q - 1)^{n-k} * prod_{i=1..k} (t + [i]_q - 1)`: the joint
/// distribution of `(inv, lmax)` and of `(DIS, cyc)` over `A(n,k)`.
pub fn joint_gf_product(n: u32, k: u32) -> Result<QtPoly, Error> {
    if k > n {
        return Err(Error::BadBound {
            n: n as usize,
            k: k as usize,
        });
    }
    let t = QtPoly::monomial(1, 0, 1);
    let one = QtPoly::one();
    let mut out = t
        .add(&q_integer(k + 1).expect("k+1 >= 1"))
        .sub(&one)
        .pow(n - k);
    for i in 1..=k {
        out = out.mul(&t.add(&q_integer(i).expect("i >= 1")).sub(&one));
    }
    Ok(out)
}

/// `[k+1]_q^{n-k} [k]_q!`: the distribution of `inv` over `A(n,k)`.
pub fn inv_gf(n: u32, k: u32) -> Result<QtPoly, Error> {
    if k > n {
        return Err(Error::BadBound {
            n: n as usize,
            k: k as usize,
        });
    }
    Ok(q_integer(k + 1)
        .expect("k+1 >= 1")
        .pow(n - k)
        .mul(&q_factorial(k)))
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Ballot number `C_{n,k} = (n-k+1)/(n+1) * binom(n+k, k)`.
pub fn ballot_number(n: u64, k: u64) -> Result<u64, Error> {
    if k > n {
        return Err(Error::BadBound {
            n: n as usize,
            k: k as usize,
        });
    }
    let num = (n - k + 1) as u128 * binomial(n + k, k);
    debug_assert_eq!(num % (n + 1) as u128, 0);
    u64::try_from(num / (n + 1) as u128)
        .map_err(|_| Error::OutOfRange("ballot number overflow".into()))
}

/// Narayana number `N_{n,m} = binom(n,m) binom(n,m-1) / n`.
pub fn narayana(n: u64, m: u64) -> Result<u64, Error> {
    if m < 1 || m > n {
        return Err(Error::OutOfRange(format!(
            "narayana needs 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let num = binomial(n, m) * binomial(n, m - 1);
    debug_assert_eq!(num % n as u128, 0);
    u64::try_from(num / n as u128).map_err(|_| Error::OutOfRange("narayana overflow".into()))
}

/// The series `F~_0 = sum_{1<=m<=n} N_{n,m} (zq)^n p^{m-1}` through z-order
/// `N`, i.e. the Narayana expansion of the radical closed form.
pub fn f0_tilde_series(order: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in 1..=order {
        for m in 1..=n {
            let c = narayana(n as u64, m as u64).expect("in range");
            s.add_term(n, n, m - 1, i64::try_from(c).expect("fits i64"));
        }
    }
    s
}

/// Radical closed form of `F~_0`, evaluated in floating point; the series
/// expansion above is cross-checked against this numerically.
pub fn f0_tilde_radical(p: f64, q: f64, z: f64) -> f64 {
    let zq = z * q;
    (1.0 - zq * (1.0 + p) - ((1.0 + zq * (1.0 - p)).powi(2) - 4.0 * zq).sqrt()) / (2.0 * p * q * z)
}

/// `G(p,q,z)`: the coefficient of `p^d q^k z^n` counts 213-avoiding
/// permutations in `A(n,k)` with `d` descents, exact for `deg_z <= order`.
pub fn g_series(order: u32) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let z = TruncatedSeries::monomial(order, 1, 1, 0, 0);
    let q = TruncatedSeries::monomial(order, 1, 0, 1, 0);
    let zq = TruncatedSeries::monomial(order, 1, 1, 1, 0);
    let pqz = TruncatedSeries::monomial(order, 1, 1, 1, 1);
    let f0 = f0_tilde_series(order);
    // (1 - z)q = q - zq
    let numerator = one
        .sub(&pqz)
        .sub(&q)
        .add(&zq)
        .add(&zq.sub(&pqz).sub(&q).mul(&f0));
    let denominator = one.sub(&z).sub(&pqz).sub(&q).add(&zq);
    numerator.mul(&denominator.inverse())
}
