//! Exhaustive distribution engine and theorem-checking harness.
//!
//! Every check enumerates the finite objects in range and compares exact
//! integers; a failing check carries the first witness in canonical
//! enumeration order, replayable through the public operations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{self, QtPoly, TruncatedSeries};
use crate::ballot::{self, BallotSequence};
use crate::codes;
use crate::enumerate::{count, enumerate, Family, SetSpec};
use crate::pattern::PatternSpec;
use crate::perm::{marker_sets, Permutation};
use crate::Error;

/// Default exhaustive budget; `HARD_CAP` bounds what the harness accepts.
pub const DEFAULT_MAX_N: usize = 8;
pub const HARD_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StatName {
    Inv,
    Des,
    Maxdrop,
    Maxlift,
    Lmax,
    Rmin,
    Rmax,
    Cyc,
    Sor,
    Dis,
    Vnw,
    Vpk,
}

impl StatName {
    pub fn as_str(&self) -> &'static str {
        match self {
            StatName::Inv => "inv",
            StatName::Des => "des",
            StatName::Maxdrop => "maxdrop",
            StatName::Maxlift => "maxlift",
            StatName::Lmax => "lmax",
            StatName::Rmin => "rmin",
            StatName::Rmax => "rmax",
            StatName::Cyc => "cyc",
            StatName::Sor => "sor",
            StatName::Dis => "dis",
            StatName::Vnw => "vnw",
            StatName::Vpk => "vpk",
        }
    }

    pub fn eval(&self, p: &Permutation) -> Result<u64, Error> {
        Ok(match self {
            StatName::Inv => p.inv_count() as u64,
            StatName::Des => p.des_count() as u64,
            StatName::Maxdrop => p.maxdrop() as u64,
            StatName::Maxlift => p.maxlift() as u64,
            StatName::Lmax => p.lmax() as u64,
            StatName::Rmin => p.rmin() as u64,
            StatName::Rmax => p.rmax() as u64,
            StatName::Cyc => p.cyc() as u64,
            StatName::Sor => p.sorting_index() as u64,
            StatName::Dis => p.dis() as u64,
            StatName::Vnw => p.vnw()? as u64,
            StatName::Vpk => {
                return Err(Error::FamilyMismatch(
                    "vpk applies to ballot sequences only".into(),
                ))
            }
        })
    }
}

impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "inv" => StatName::Inv,
            "des" => StatName::Des,
            "maxdrop" => StatName::Maxdrop,
            "maxlift" => StatName::Maxlift,
            "lmax" => StatName::Lmax,
            "rmin" => StatName::Rmin,
            "rmax" => StatName::Rmax,
            "cyc" => StatName::Cyc,
            "sor" => StatName::Sor,
            "dis" => StatName::Dis,
            "vnw" => StatName::Vnw,
            "vpk" => StatName::Vpk,
            other => return Err(Error::UnknownStatistic(other.into())),
        })
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Exact joint distribution of statistics over an enumerated family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub keys: Vec<StatName>,
    pub table: BTreeMap<Vec<u64>, u64>,
    pub total: u64,
}

pub fn distribution(spec: &SetSpec, stats: &[StatName]) -> Result<Distribution, Error> {
    let mut table: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    let mut total = 0;
    if spec.family == Family::Ballot {
        for s in stats {
            if *s != StatName::Vpk {
                return Err(Error::FamilyMismatch(format!(
                    "statistic {s} applies to permutations, not ballot sequences"
                )));
            }
        }
        spec.validate()?;
        for a in ballot::enumerate_ballot(spec.n, spec.k)? {
            let key = stats.iter().map(|_| a.vpk() as u64).collect();
            *table.entry(key).or_default() += 1;
            total += 1;
        }
    } else {
        for p in enumerate(spec)? {
            let key = stats.iter().map(|s| s.eval(&p)).collect::<Result<_, _>>()?;
            *table.entry(key).or_default() += 1;
            total += 1;
        }
    }
    Ok(Distribution {
        keys: stats.to_vec(),
        table,
        total,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    Theorem1,
    Theorem2,
    Theorem3,
    Gamma,
    Codes,
    Bijections,
    Counts,
    Genre,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::Theorem1,
        CheckId::Theorem2,
        CheckId::Theorem3,
        CheckId::Gamma,
        CheckId::Codes,
        CheckId::Bijections,
        CheckId::Counts,
        CheckId::Genre,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::Theorem1 => "theorem1",
            CheckId::Theorem2 => "theorem2",
            CheckId::Theorem3 => "theorem3",
            CheckId::Gamma => "gamma",
            CheckId::Codes => "codes",
            CheckId::Bijections => "bijections",
            CheckId::Counts => "counts",
            CheckId::Genre => "genre",
        }
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CheckId::ALL
            .iter()
            .find(|c| c.as_str() == s)
            .copied()
            .ok_or_else(|| Error::UnknownCheck(s.into()))
    }
}

/// First counterexample found, replayable through the public operations.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub k: usize,
    pub object: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub range: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn witness(
    n: usize,
    k: usize,
    object: impl fmt::Display,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Witness {
    Witness {
        n,
        k,
        object: object.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn pat(letters: &[i64]) -> PatternSpec {
    PatternSpec::classical(letters).expect("valid pattern")
}

/// Runs one check over all instances with `n <= max_n`.
pub fn run_check(id: CheckId, max_n: usize) -> Result<Report, Error> {
    if max_n > HARD_CAP {
        return Err(Error::BudgetExceeded {
            requested: max_n,
            cap: HARD_CAP,
        });
    }
    let wit = match id {
        CheckId::Theorem1 => check_theorem1(max_n)?,
        CheckId::Theorem2 => check_theorem2(max_n)?,
        CheckId::Theorem3 => check_theorem3(max_n)?,
        CheckId::Gamma => check_gamma(max_n),
        CheckId::Codes => check_codes(max_n),
        CheckId::Bijections => check_bijections(max_n)?,
        CheckId::Counts => check_counts(max_n)?,
        CheckId::Genre => check_genre(max_n)?,
    };
    Ok(Report {
        check: id.as_str().to_string(),
        range: format!("n <= {max_n}"),
        status: if wit.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        witness: wit,
    })
}

/// Runs every check; reports come back in the fixed `CheckId::ALL` order.
pub fn run_all(max_n: usize) -> Result<Vec<Report>, Error> {
    CheckId::ALL
        .iter()
        .map(|&id| run_check(id, max_n))
        .collect()
}

fn poly_of_distribution(
    perms: &[Permutation],
    q_stat: StatName,
    t_stat: StatName,
) -> Result<QtPoly, Error> {
    let mut poly = QtPoly::zero();
    for p in perms {
        poly.add_term(q_stat.eval(p)? as u32, t_stat.eval(p)? as u32, 1);
    }
    Ok(poly)
}

fn check_theorem1(max_n: usize) -> Result<Option<Witness>, Error> {
    for n in 0..=max_n {
        for k in 0..=n {
            let perms = enumerate(&SetSpec::new(Family::BoundedDrop, n, k))?;
            let inv_lmax = poly_of_distribution(&perms, StatName::Inv, StatName::Lmax)?;
            let dis_cyc = poly_of_distribution(&perms, StatName::Dis, StatName::Cyc)?;
            let product = algebra::joint_gf_product(n as u32, k as u32)?;
            if inv_lmax != product {
                return Ok(Some(witness(
                    n,
                    k,
                    "(inv,lmax) over A(n,k)",
                    &product,
                    &inv_lmax,
                )));
            }
            if dis_cyc != product {
                return Ok(Some(witness(
                    n,
                    k,
                    "(DIS,cyc) over A(n,k)",
                    &product,
                    &dis_cyc,
                )));
            }
        }
    }
    Ok(None)
}

fn check_theorem2(max_n: usize) -> Result<Option<Witness>, Error> {
    for n in 0..=max_n {
        for k in 0..=n {
            let des = distribution(
                &SetSpec::new(Family::BoundedDrop, n, k).avoiding(pat(&[2, 1, 3])),
                &[StatName::Des],
            )?;
            let vpk = distribution(&SetSpec::new(Family::Ballot, n, k), &[StatName::Vpk])?;
            let vnw = distribution(&SetSpec::new(Family::EndsIn321, n + 1, k), &[StatName::Vnw])?;
            if des.table != vpk.table {
                return Ok(Some(witness(
                    n,
                    k,
                    "des over A_{n,k}(213) vs vpk over Gamma_{n,k}",
                    format!("{:?}", vpk.table),
                    format!("{:?}", des.table),
                )));
            }
            if des.table != vnw.table {
                return Ok(Some(witness(
                    n,
                    k,
                    "des over A_{n,k}(213) vs vnw over S^k_{n+1}(321)",
                    format!("{:?}", vnw.table),
                    format!("{:?}", des.table),
                )));
            }
        }
    }
    Ok(None)
}

fn check_theorem3(max_n: usize) -> Result<Option<Witness>, Error> {
    let g = algebra::g_series(max_n as u32);
    for n in 0..=max_n {
        for k in 0..=n {
            let mut by_des: BTreeMap<u32, i64> = BTreeMap::new();
            let spec = SetSpec::new(Family::BoundedDrop, n, k).avoiding(pat(&[2, 1, 3]));
            for p in enumerate(&spec)? {
                *by_des.entry(p.des_count() as u32).or_default() += 1;
            }
            for d in 0..=max_n as u32 {
                let expected = by_des.get(&d).copied().unwrap_or(0);
                let actual = g.coefficient(n as u32, k as u32, d);
                if expected != actual {
                    return Ok(Some(witness(
                        n,
                        k,
                        format!("[p^{d} q^{k} z^{n}] G"),
                        expected,
                        actual,
                    )));
                }
            }
        }
    }
    // numeric cross-check of the radical form
    let (p, q, z) = (0.5, 1.0 / 3.0, 0.2);
    let series = algebra::f0_tilde_series(20).eval_f64(z, q, p);
    let radical = algebra::f0_tilde_radical(p, q, z);
    if (series - radical).abs() >= 1e-6 {
        return Ok(Some(witness(
            20,
            0,
            "F~_0 at (p,q,z)=(1/2,1/3,1/5)",
            radical,
            series,
        )));
    }
    Ok(None)
}

fn check_gamma(max_n: usize) -> Option<Witness> {
    use std::collections::BTreeSet;
    // worked example first
    let sigma = Permutation::build(&[5, 7, 1, 4, 9, 2, 6, 3, 8]).expect("valid");
    let image = Permutation::build(&[5, 7, 3, 2, 9, 1, 4, 8, 6]).expect("valid");
    if codes::gamma(&sigma) != image {
        let got = codes::gamma(&sigma);
        return Some(witness(9, 0, sigma, image, got));
    }
    if codes::a_code(&sigma).entries() != [1, 2, 3, 2, 1, 5, 2, 8, 5] {
        return Some(witness(
            9,
            0,
            "A-code(571492638)",
            "(1,2,3,2,1,5,2,8,5)",
            codes::a_code(&sigma),
        ));
    }
    for n in 0..=max_n {
        let mut images = BTreeSet::new();
        for s in all_perms(n) {
            let g = codes::gamma(&s);
            if s.inv_count() != g.sorting_index()
                || s.marker_sets().rmil != g.cycle_decomposition().cyc_set()
                || s.marker_sets().lmap != g.marker_sets().lmap
                || s.maxlift() != g.maxlift()
            {
                return Some(witness(n, 0, &s, "(inv,Rmil,Lmap,maxlift) transported", g));
            }
            images.insert(g);
        }
        if images.len() != factorial(n) {
            return Some(witness(
                n,
                0,
                "gamma image count",
                factorial(n),
                images.len(),
            ));
        }
    }
    None
}

fn check_codes(max_n: usize) -> Option<Witness> {
    for n in 0..=max_n {
        for s in all_perms(n) {
            let lmal = s.marker_sets().lmal;
            let a = codes::a_code(&s);
            let b = codes::b_code(&s);
            if lmal != marker_sets(a.entries()).rmip || lmal != marker_sets(b.entries()).rmip {
                return Some(witness(
                    n,
                    0,
                    &s,
                    "Lmal = Rmip(A-code) = Rmip(B-code)",
                    "mismatch",
                ));
            }
            if codes::b_decode(&b) != s || codes::lehmer_decode(&codes::lehmer_code(&s)) != s {
                return Some(witness(n, 0, &s, "code round-trip", "mismatch"));
            }
        }
        // decode-then-encode over all subexcedent sequences
        for c in all_subexc(n) {
            let c = codes::SubexcedentSequence::new(c).expect("subexcedent");
            if codes::b_code(&codes::b_decode(&c)) != c {
                return Some(witness(n, 0, &c, "b_code(b_decode(c)) = c", "mismatch"));
            }
        }
    }
    None
}

fn check_bijections(max_n: usize) -> Result<Option<Witness>, Error> {
    // worked examples
    let pi = Permutation::build(&[8, 3, 4, 7, 5, 6, 1, 2]).expect("valid");
    let sigma = Permutation::build(&[3, 1, 4, 5, 2, 7, 6, 9, 8]).expect("valid");
    let a = BallotSequence::parse("+-+++-++----++-").expect("valid");
    if ballot::alpha(&pi, Some(7))? != a {
        return Ok(Some(witness(8, 7, &pi, &a, ballot::alpha(&pi, Some(7))?)));
    }
    if ballot::beta(&sigma, Some(7))? != a {
        return Ok(Some(witness(
            8,
            7,
            &sigma,
            &a,
            ballot::beta(&sigma, Some(7))?,
        )));
    }
    if ballot::delta(&pi, Some(7))? != sigma {
        return Ok(Some(witness(
            8,
            7,
            &pi,
            &sigma,
            ballot::delta(&pi, Some(7))?,
        )));
    }
    for n in 0..=max_n {
        for k in 0..=n {
            for seq in ballot::enumerate_ballot(n, k)? {
                let pi = ballot::alpha_inverse(&seq);
                if ballot::alpha(&pi, Some(k))? != seq {
                    return Ok(Some(witness(
                        n,
                        k,
                        &seq,
                        "alpha(alpha_inverse(a)) = a",
                        &pi,
                    )));
                }
                if pi.des_count() != seq.vpk() {
                    return Ok(Some(witness(n, k, &pi, seq.vpk(), pi.des_count())));
                }
                let sig = ballot::beta_inverse(&seq);
                if ballot::beta(&sig, Some(k))? != seq {
                    return Ok(Some(witness(n, k, &seq, "beta(beta_inverse(a)) = a", &sig)));
                }
                if sig.vnw()? != seq.vpk() {
                    return Ok(Some(witness(n, k, &sig, seq.vpk(), sig.vnw()?)));
                }
                if ballot::delta(&pi, Some(k))? != sig {
                    return Ok(Some(witness(n, k, &pi, &sig, ballot::delta(&pi, Some(k))?)));
                }
            }
        }
    }
    Ok(None)
}

fn check_counts(max_n: usize) -> Result<Option<Witness>, Error> {
    for n in 0..=max_n {
        for k in 0..=n {
            let expected = algebra::ballot_number(n as u64, k as u64)?;
            let families: [(&str, SetSpec); 6] = [
                (
                    "A_{n,k}(213)",
                    SetSpec::new(Family::BoundedDrop, n, k).avoiding(pat(&[2, 1, 3])),
                ),
                (
                    "A_{n,k}(132)",
                    SetSpec::new(Family::BoundedDrop, n, k).avoiding(pat(&[1, 3, 2])),
                ),
                (
                    "A_{n,k}(2_13)",
                    SetSpec::new(Family::BoundedDrop, n, k)
                        .avoiding(PatternSpec::vincular(&[2, 1, 3], &[2]).expect("valid")),
                ),
                (
                    "A_{n,k}(_13_2)",
                    SetSpec::new(Family::BoundedDrop, n, k)
                        .avoiding(PatternSpec::vincular(&[1, 3, 2], &[1]).expect("valid")),
                ),
                ("S^k_{n+1}(321)", SetSpec::new(Family::EndsIn321, n + 1, k)),
                ("Gamma_{n,k}", SetSpec::new(Family::Ballot, n, k)),
            ];
            for (name, spec) in families {
                let actual = count(&spec)?;
                if actual != expected {
                    return Ok(Some(witness(n, k, name, expected, actual)));
                }
            }
        }
    }
    Ok(None)
}

fn check_genre(max_n: usize) -> Result<Option<Witness>, Error> {
    let order = max_n as u32;
    // F^u, F^d over Gamma_{n,k} split by last step, with weight p^vpk q^(n-k) z^n
    let mut f_up = TruncatedSeries::zero(order);
    let mut f_down = TruncatedSeries::zero(order);
    let mut f_zero = TruncatedSeries::zero(order); // F_0(p,z): k = n, weight p^vpk z^n
    for n in 1..=max_n {
        for k in 0..=n {
            for a in ballot::enumerate_ballot(n, k)? {
                let (zd, qd, pd) = (n as u32, (n - k) as u32, a.vpk() as u32);
                match a.steps().last() {
                    Some(1) => f_up.add_term(zd, qd, pd, 1),
                    Some(-1) => f_down.add_term(zd, qd, pd, 1),
                    _ => unreachable!("n >= 1"),
                }
                if k == n {
                    f_zero.add_term(zd, 0, pd, 1);
                }
            }
        }
    }
    let q = TruncatedSeries::monomial(order, 1, 0, 1, 0);
    let qz = TruncatedSeries::monomial(order, 1, 1, 1, 0);
    let pqz = TruncatedSeries::monomial(order, 1, 1, 1, 1);
    // F^u - qz = qz F^u + pqz F^d
    let lhs1 = f_up.sub(&qz);
    let rhs1 = qz.mul(&f_up).add(&pqz.mul(&f_down));
    if let Some(w) = first_series_difference(&lhs1, &rhs1, order) {
        return Ok(Some(witness(
            max_n,
            0,
            "F^u - qz = qz F^u + pqz F^d",
            w.0,
            w.1,
        )));
    }
    // q F^d = F^u + F^d - F_0  (the q->q^{-1} free form of the second recurrence)
    let lhs2 = q.mul(&f_down);
    let rhs2 = f_up.add(&f_down).sub(&f_zero);
    if let Some(w) = first_series_difference(&lhs2, &rhs2, order) {
        return Ok(Some(witness(max_n, 0, "q F^d = F^u + F^d - F_0", w.0, w.1)));
    }
    Ok(None)
}

/// First coefficient (by key order) where the two series disagree within
/// `deg_z <= order`, as (expected, actual) strings.
fn first_series_difference(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    order: u32,
) -> Option<(String, String)> {
    let keys: std::collections::BTreeSet<_> = lhs
        .terms()
        .chain(rhs.terms())
        .map(|(k, _)| k)
        .filter(|&(z, _, _)| z <= order)
        .collect();
    for (z, qd, pd) in keys {
        let l = lhs.coefficient(z, qd, pd);
        let r = rhs.coefficient(z, qd, pd);
        if l != r {
            return Some((
                format!("[p^{pd} q^{qd} z^{z}] = {r}"),
                format!("[p^{pd} q^{qd} z^{z}] = {l}"),
            ));
        }
    }
    None
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn all_perms(n: usize) -> Vec<Permutation> {
    enumerate(&SetSpec::new(Family::All, n, 0)).expect("valid spec")
}

fn all_subexc(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|seq| {
                (1..=i).map(move |v| {
                    let mut s = seq.clone();
                    s.push(v);
                    s
                })
            })
            .collect();
    }
    out
}
