//! Sparse multivariate polynomials over the rationals.
//!
//! Term maps carry no ordering of their own: iteration order of the
//! underlying `BTreeMap` is only used for determinism, every
//! order-sensitive query goes through a [`TermOrder`](crate::order::TermOrder).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exponent vector of a monomial `x^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    /// `self - other` if every entry stays nonnegative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Signed difference `self - other`.
    pub fn diff(&self, other: &Exponent) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect()
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

/// Variable names of a polynomial ring `Q[x_1, ..., x_n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Ring>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Ring { names }))
    }

    /// Auxiliary ring `Q[t1, ..., ts]` used for representations over generators.
    /// A ring with zero generators still gets one (unused) variable.
    pub fn auxiliary(s: usize) -> Arc<Ring> {
        let names = (1..=s.max(1)).map(|i| format!("t{i}")).collect();
        Arc::new(Ring { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A term `c * x^a` with `c != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coefficient: Rational,
    pub exponent: Exponent,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, c, Exponent::zero(ring.nvars()))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Rational::one(), Exponent::unit(ring.nvars(), i))
    }

    pub fn monomial(ring: &Arc<Ring>, c: Rational, e: Exponent) -> Self {
        assert_eq!(e.len(), ring.nvars(), "exponent length does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent length does not match ring");
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Option<&Rational> {
        self.terms.get(e)
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::total_degree).max()
    }

    /// Checks the normalization invariants (used by tests).
    pub fn is_normalized(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| !c.is_zero() && e.len() == self.ring.nvars())
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, e: &Exponent) -> Option<Rational> {
        self.terms.remove(e)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self * c * x^e`
    pub fn mul_term(&self, c: &Rational, e: &Exponent) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(f, a)| (f.add(e), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        debug_assert!(self.ring == other.ring);
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a * c);
        }
    }

    fn ensure_same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                out.add_term(e.add(f), a * b);
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `gens[i]` for the i-th variable of `self` and expands.
    ///
    /// `self` typically lives in an auxiliary ring `Q[t1..ts]`; the result
    /// lives in the ring of the generators.
    pub fn evaluate(&self, gens: &[Polynomial], target: &Arc<Ring>) -> Result<Polynomial> {
        if gens.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), found: gens.len() });
        }
        if gens.iter().any(|g| **g.ring() != **target) {
            return Err(Error::RingMismatch);
        }
        let mut powers = PowerCache::new(gens);
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let m = powers.product(e);
            out.add_scaled(c, &m);
        }
        Ok(out)
    }

    /// Moves this polynomial into another ring with the same variable count.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() })
    }
}

/// Substitutes `gens` into the auxiliary polynomial `rep`.
pub fn evaluate_representation(rep: &Polynomial, gens: &[Polynomial]) -> Result<Polynomial> {
    let target = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(Error::ArityMismatch { expected: rep.nvars(), found: 0 }),
    };
    rep.evaluate(gens, &target)
}

/// Memoizes powers of a fixed generator list, for evaluating many
/// power products `g_1^a_1 ... g_s^a_s`.
pub(crate) struct PowerCache<'a> {
    gens: &'a [Polynomial],
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    pub(crate) fn new(gens: &'a [Polynomial]) -> Self {
        let powers = gens
            .iter()
            .map(|g| vec![Polynomial::one(g.ring())])
            .collect();
        PowerCache { gens, powers }
    }

    pub(crate) fn power(&mut self, i: usize, k: u32) -> &Polynomial {
        let k = k as usize;
        while self.powers[i].len() <= k {
            let next = &self.powers[i][self.powers[i].len() - 1] * &self.gens[i];
            self.powers[i].push(next);
        }
        &self.powers[i][k]
    }

    pub(crate) fn product(&mut self, e: &Exponent) -> Polynomial {
        let ring = self.gens[0].ring().clone();
        let mut acc = Polynomial::one(&ring);
        for (i, &k) in e.entries().iter().enumerate() {
            if k > 0 {
                acc = &acc * self.power(i, k);
            }
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes terms in the given sequence as `c*x^a*y^b + ...`.
pub(crate) fn format_terms<'a>(
    ring: &Ring,
    terms: impl IntoIterator<Item = (&'a Exponent, &'a Rational)>,
) -> String {
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || e.is_zero() {
            factors.push(format_rational(&abs));
        }
        for (name, &k) in ring.names().iter().zip(e.entries()) {
            match k {
                0 => {}
                1 => factors.push(name.clone()),
                k => factors.push(format!("{name}^{k}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    /// Terms in descending order of the underlying map (reverse lexicographic
    /// on exponents). Use [`TermOrder::format`](crate::order::TermOrder::format)
    /// for order-aware printing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.ring, self.terms.iter().rev()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
