//! Sagbi cones and crossing to the next cone along a straight path.
//!
//! The cone of a basis `S` under an order is cut out by `w . v >= 0` for every
//! difference `v = LE(g) - b`, `b` a non-leading exponent of `g` in `S`.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::{TermOrder, WeightVector};
use crate::poly::{Polynomial, Rational};

/// Primitive, deduplicated difference vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConeSystem {
    vectors: Vec<Vec<i64>>,
}

impl ConeSystem {
    pub fn new(vectors: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let set: BTreeSet<Vec<i64>> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|&x| x != 0))
            .map(primitive)
            .collect();
        ConeSystem { vectors: set.into_iter().collect() }
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.vectors.iter().all(|v| !w.dot(v).is_negative())
    }

    pub fn contains_in_interior(&self, w: &WeightVector) -> bool {
        self.vectors.iter().all(|v| w.dot(v).is_positive())
    }
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

pub fn cone_vectors(basis: &[Polynomial], order: &TermOrder) -> Result<ConeSystem> {
    let mut out = Vec::new();
    for g in basis {
        let lead = order.leading_exponent(g)?;
        out.extend(g.support().filter(|b| **b != lead).map(|b| lead.diff(b)));
    }
    Ok(ConeSystem::new(out))
}

pub fn in_cone(w: &WeightVector, cone: &ConeSystem) -> bool {
    cone.contains(w)
}

pub fn in_interior(w: &WeightVector, cone: &ConeSystem) -> bool {
    cone.contains_in_interior(w)
}

/// Largest `u` in `(0, 1]` such that `(1-u) w_old + u w_target` stays in
/// the cone.
pub fn next_cone(w_old: &WeightVector, w_target: &WeightVector, cone: &ConeSystem) -> Result<Rational> {
    if w_old.len() != w_target.len() {
        return Err(Error::DimensionMismatch { expected: w_old.len(), found: w_target.len() });
    }
    if !cone.contains(w_old) {
        return Err(Error::OutsideCone);
    }
    let mut last = Rational::one();
    for v in cone.vectors() {
        let at_target = w_target.dot(v);
        if at_target.is_negative() {
            let at_old = w_old.dot(v);
            let u = &at_old / (&at_old - &at_target);
            if u < last {
                last = u;
            }
        }
    }
    Ok(last)
}

/// `(1 - u) w_old + u w_target`, exactly.
pub fn advance(w_old: &WeightVector, w_target: &WeightVector, u: &Rational) -> Result<WeightVector> {
    if u.is_negative() || *u > Rational::one() {
        return Err(Error::InvalidWeight(format!("path parameter {u} outside [0, 1]")));
    }
    let keep = Rational::one() - u;
    let entries = w_old
        .entries()
        .iter()
        .zip(w_target.entries())
        .map(|(a, b)| {
            let v = &keep * a + u * b;
            if v.is_zero() { Rational::zero() } else { v }
        })
        .collect();
    WeightVector::new(entries)
}
