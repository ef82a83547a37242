//! Matrix term orders and weight vectors.
//!
//! A term order is given by a rational matrix `M` of full column rank:
//! `x^a > x^b` iff `M a` is lexicographically greater than `M b`. Rows are
//! rescaled to integers internally, which leaves the order unchanged.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{format_rational, format_terms, Exponent, Polynomial, Rational, Term};

/// A weight vector in the closed positive orthant, not identically zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".into()));
        }
        if entries.iter().any(Signed::is_negative) {
            return Err(Error::InvalidWeight("negative entry".into()));
        }
        if entries.iter().all(Zero::is_zero) {
            return Err(Error::InvalidWeight("all entries are zero".into()));
        }
        Ok(WeightVector(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weighted degree `w . a` of a monomial.
    pub fn degree(&self, e: &Exponent) -> Rational {
        let mut acc = Rational::zero();
        for (w, &k) in self.0.iter().zip(e.entries()) {
            if k != 0 && !w.is_zero() {
                acc += w * Rational::from_integer(k.into());
            }
        }
        acc
    }

    pub fn dot(&self, v: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (w, &k) in self.0.iter().zip(v) {
            if k != 0 && !w.is_zero() {
                acc += w * Rational::from_integer(k.into());
            }
        }
        acc
    }

    /// Positive multiple with coprime integer entries; induces the same
    /// weighted degree comparisons.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        integer_row(&self.0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Scales a rational row to a primitive integer row with the same direction.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = row.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &g).collect()
    }
}

#[derive(Clone, Debug)]
enum ScaledRows {
    Small(Vec<Vec<i64>>),
    Big(Vec<Vec<BigInt>>),
}

/// A global-or-not monomial order defined by a rational matrix.
#[derive(Clone, Debug)]
pub struct TermOrder {
    rows: Vec<Vec<Rational>>,
    scaled: ScaledRows,
    nvars: usize,
    global: bool,
}

impl PartialEq for TermOrder {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for TermOrder {}

impl TermOrder {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nvars = rows.first().map(Vec::len).unwrap_or(0);
        if nvars == 0 {
            return Err(Error::InvalidOrder("empty matrix".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, found: r.len() });
        }
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return Err(Error::InvalidOrder("zero row".into()));
        }
        if rank(&rows) != nvars {
            return Err(Error::InvalidOrder(format!("matrix does not have rank {nvars}")));
        }
        let global = (0..nvars).all(|j| {
            rows.iter()
                .map(|r| &r[j])
                .find(|v| !v.is_zero())
                .is_some_and(Signed::is_positive)
        });
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
        let small: Option<Vec<Vec<i64>>> = big
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().filter(|x| x.abs() < (1 << 40))).collect())
            .collect();
        let scaled = match small {
            Some(s) => ScaledRows::Small(s),
            None => ScaledRows::Big(big),
        };
        Ok(TermOrder { rows, scaled, nvars, global })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Lexicographic order with `x_{priority[0]} > x_{priority[1]} > ...`.
    pub fn lex(nvars: usize, priority: &[usize]) -> Result<Self> {
        check_permutation(nvars, priority)?;
        let rows = priority.iter().map(|&i| unit_row(nvars, i, 1)).collect::<Vec<_>>();
        Self::from_int_rows(&rows)
    }

    /// Degree then lex by `priority`.
    pub fn deglex(nvars: usize, priority: &[usize]) -> Result<Self> {
        check_permutation(nvars, priority)?;
        let mut rows = vec![vec![1; nvars]];
        rows.extend(priority[..nvars - 1].iter().map(|&i| unit_row(nvars, i, 1)));
        Self::from_int_rows(&rows)
    }

    /// Degree then reverse lex by `priority`.
    pub fn degrevlex(nvars: usize, priority: &[usize]) -> Result<Self> {
        check_permutation(nvars, priority)?;
        let mut rows = vec![vec![1; nvars]];
        rows.extend(priority[1..].iter().rev().map(|&i| unit_row(nvars, i, -1)));
        Self::from_int_rows(&rows)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// True iff `x^a > 1` for every `a != 0`.
    pub fn is_global(&self) -> bool {
        self.global
    }

    /// True iff every entry of the first row is positive.
    pub fn is_weighted_degree(&self) -> bool {
        self.rows[0].iter().all(Signed::is_positive)
    }

    pub fn first_row(&self) -> Result<WeightVector> {
        WeightVector::new(self.rows[0].clone())
    }

    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars);
        debug_assert_eq!(b.len(), self.nvars);
        if a == b {
            return Ordering::Equal;
        }
        match &self.scaled {
            ScaledRows::Small(rows) => {
                for row in rows {
                    let mut acc: i128 = 0;
                    for ((r, &x), &y) in row.iter().zip(a.entries()).zip(b.entries()) {
                        if *r != 0 && x != y {
                            acc += *r as i128 * (x as i128 - y as i128);
                        }
                    }
                    match acc.cmp(&0) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
            }
            ScaledRows::Big(rows) => {
                for row in rows {
                    let mut acc = BigInt::zero();
                    for ((r, &x), &y) in row.iter().zip(a.entries()).zip(b.entries()) {
                        if x != y {
                            acc += r * BigInt::from(x as i64 - y as i64);
                        }
                    }
                    match acc.sign() {
                        num_bigint::Sign::NoSign => continue,
                        num_bigint::Sign::Plus => return Ordering::Greater,
                        num_bigint::Sign::Minus => return Ordering::Less,
                    }
                }
            }
        }
        // full rank: distinct exponents never tie on every row
        unreachable!("full-rank order compared two distinct exponents as equal")
    }

    /// Dimension-checked comparison.
    pub fn try_compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        for e in [a, b] {
            if e.len() != self.nvars {
                return Err(Error::DimensionMismatch { expected: self.nvars, found: e.len() });
            }
        }
        Ok(self.compare(a, b))
    }

    /// Maximal term of `f`, or `None` for the zero polynomial.
    pub fn lead<'a>(&self, f: &'a Polynomial) -> Option<(&'a Exponent, &'a Rational)> {
        let mut it = f.terms();
        let mut best = it.next()?;
        for t in it {
            if self.compare(t.0, best.0) == Ordering::Greater {
                best = t;
            }
        }
        Some(best)
    }

    pub fn leading_term(&self, f: &Polynomial) -> Result<Term> {
        self.lead(f)
            .map(|(e, c)| Term { coefficient: c.clone(), exponent: e.clone() })
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_exponent(&self, f: &Polynomial) -> Result<Exponent> {
        self.lead(f).map(|(e, _)| e.clone()).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self, f: &Polynomial) -> Result<Rational> {
        self.lead(f).map(|(_, c)| c.clone()).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, f: &Polynomial) -> Result<Polynomial> {
        let e = self.leading_exponent(f)?;
        Ok(Polynomial::monomial(f.ring(), Rational::one(), e))
    }

    /// Scales `f` so its leading coefficient is one. Zero stays zero.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match self.lead(f) {
            Some((_, c)) if !c.is_one() => f.scale(&c.recip()),
            _ => f.clone(),
        }
    }

    /// Terms of `f`, largest first.
    pub fn sorted_terms<'a>(&self, f: &'a Polynomial) -> Vec<(&'a Exponent, &'a Rational)> {
        let mut terms: Vec<_> = f.terms().collect();
        terms.sort_by(|a, b| self.compare(b.0, a.0));
        terms
    }

    /// Prints `f` with terms in descending order.
    pub fn format(&self, f: &Polynomial) -> String {
        format_terms(f.ring(), self.sorted_terms(f))
    }

    /// The order that compares `w`-degree first and breaks ties with `self`.
    pub fn refine(&self, w: &WeightVector) -> Result<TermOrder> {
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: w.len() });
        }
        let mut rows = vec![w.entries().to_vec()];
        for row in &self.rows {
            if rows.len() == self.nvars {
                break;
            }
            let mut candidate = rows.clone();
            candidate.push(row.clone());
            if rank(&candidate) == candidate.len() {
                rows = candidate;
            }
        }
        TermOrder::new(rows)
    }

    /// An integer weight `w` with `w.a > w.b` for every pair where `a > b`
    /// under this order (pairs in the other direction are flipped, equal
    /// pairs ignored). The result is strictly positive when the order is
    /// global.
    pub fn separating_weight(&self, pairs: &[(Exponent, Exponent)]) -> Result<WeightVector> {
        if !self.global {
            return Err(Error::NonGlobalOrder);
        }
        let mut diffs: Vec<Vec<i64>> = Vec::new();
        for (a, b) in pairs {
            match self.try_compare(a, b)? {
                Ordering::Greater => diffs.push(a.diff(b)),
                Ordering::Less => diffs.push(b.diff(a)),
                Ordering::Equal => {}
            }
        }
        if diffs.is_empty() {
            return WeightVector::from_ints(&vec![1; self.nvars]);
        }
        // x_j > 1 in a global order, so positivity is just more constraints
        for j in 0..self.nvars {
            let mut e = vec![0; self.nvars];
            e[j] = 1;
            diffs.push(e);
        }
        let rows: Vec<Vec<BigInt>> = self.rows.iter().map(|r| integer_row(r)).collect();
        let mut base = BigInt::from(2);
        for _ in 0..256 {
            let mut w = vec![BigInt::zero(); self.nvars];
            for row in &rows {
                for (wj, rj) in w.iter_mut().zip(row) {
                    *wj = &*wj * &base + rj;
                }
            }
            let ok = diffs.iter().all(|d| {
                let dot: BigInt = w.iter().zip(d).map(|(wj, &dj)| wj * BigInt::from(dj)).sum();
                dot.is_positive()
            });
            if ok {
                return WeightVector::new(w.into_iter().map(Rational::from_integer).collect());
            }
            base *= 2;
        }
        Err(Error::Infeasible("weight search did not converge".into()))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(format_rational).collect();
                format!("[{}]", parts.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

fn unit_row(n: usize, i: usize, v: i64) -> Vec<i64> {
    let mut r = vec![0; n];
    r[i] = v;
    r
}

fn check_permutation(n: usize, priority: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if priority.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: priority.len() });
    }
    for &i in priority {
        if i >= n || seen[i] {
            return Err(Error::InvalidOrder("priority is not a permutation of the variables".into()));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Rank by exact Gaussian elimination.
pub(crate) fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map(Vec::len).unwrap_or(0);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for k in c..ncols {
                let sub = &f * &m[r][k];
                m[i][k] -= sub;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}
