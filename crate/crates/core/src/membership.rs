//! Monomial subalgebra membership and subduction.
//!
//! A monomial `x^a` lies in `K[x^g_1, ..., x^g_s]` iff `a` is a nonnegative
//! integer combination of the `g_i`. Subduction repeatedly cancels the
//! leading term of the working polynomial with a scaled product of
//! generators until nothing cancellable is left.

use std::collections::HashSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::{Exponent, Polynomial, PowerCache, Rational, Ring};

pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

/// Multiplicities `a` with `sum a_i * gen_i = target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemigroupWitness {
    pub multiplicities: Vec<u32>,
}

impl SemigroupWitness {
    pub fn as_exponent(&self) -> Exponent {
        Exponent::new(self.multiplicities.clone())
    }
}

/// `f = representation(G) + remainder`, with `remainder` reduced w.r.t. `G`.
#[derive(Clone, PartialEq, Debug)]
pub struct SubductionResult {
    pub remainder: Polynomial,
    pub representation: Polynomial,
}

/// Finds the lexicographically greatest multiplicity vector expressing
/// `target` over `gens`, if any.
pub fn semigroup_member(target: &Exponent, gens: &[Exponent]) -> Option<SemigroupWitness> {
    let n = target.len();
    if gens.iter().any(|g| g.len() != n) {
        return None;
    }
    // reachable[i][j]: does some generator at index >= i have a positive j-th entry
    let mut reachable = vec![vec![false; n]; gens.len() + 1];
    for i in (0..gens.len()).rev() {
        for j in 0..n {
            reachable[i][j] = reachable[i + 1][j] || gens[i].entries()[j] > 0;
        }
    }
    let mut search = Search { gens, reachable, failed: HashSet::new(), mult: vec![0; gens.len()] };
    if search.run(0, target.clone()) {
        Some(SemigroupWitness { multiplicities: search.mult })
    } else {
        None
    }
}

struct Search<'a> {
    gens: &'a [Exponent],
    reachable: Vec<Vec<bool>>,
    failed: HashSet<(usize, Exponent)>,
    mult: Vec<u32>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, rest: Exponent) -> bool {
        if rest.is_zero() {
            for m in &mut self.mult[i..] {
                *m = 0;
            }
            return true;
        }
        if i == self.gens.len() {
            return false;
        }
        if rest.entries().iter().zip(&self.reachable[i]).any(|(&r, &ok)| r > 0 && !ok) {
            return false;
        }
        if self.failed.contains(&(i, rest.clone())) {
            return false;
        }
        let g = &self.gens[i];
        let max = if g.is_zero() {
            0
        } else {
            g.entries()
                .iter()
                .zip(rest.entries())
                .filter(|(&gj, _)| gj > 0)
                .map(|(&gj, &rj)| rj / gj)
                .min()
                .unwrap_or(0)
        };
        for k in (0..=max).rev() {
            let next = rest.checked_sub(&g.scale(k)).expect("bounded by max");
            self.mult[i] = k;
            if self.run(i + 1, next) {
                return true;
            }
        }
        self.failed.insert((i, rest));
        false
    }
}

fn leading_exponents(gens: &[Polynomial], order: &TermOrder) -> Result<Vec<Exponent>> {
    gens.iter().map(|g| order.leading_exponent(g)).collect()
}

/// Sagbi normal form of `f` with respect to `gens`.
pub fn subduct(f: &Polynomial, gens: &[Polynomial], order: &TermOrder) -> Result<SubductionResult> {
    subduct_with_limit(f, gens, order, DEFAULT_MAX_STEPS)
}

pub fn subduct_with_limit(
    f: &Polynomial,
    gens: &[Polynomial],
    order: &TermOrder,
    max_steps: usize,
) -> Result<SubductionResult> {
    if !order.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    if gens.iter().any(|g| **g.ring() != **f.ring()) {
        return Err(Error::RingMismatch);
    }
    let lms = leading_exponents(gens, order)?;
    let aux = Ring::auxiliary(gens.len());
    let mut cache = (!gens.is_empty()).then(|| PowerCache::new(gens));
    let mut work = f.clone();
    let mut remainder = Polynomial::zero(f.ring());
    let mut representation = Polynomial::zero(&aux);
    let mut steps = 0usize;
    while let Some((lead, coeff)) = order.lead(&work).map(|(e, c)| (e.clone(), c.clone())) {
        steps += 1;
        if steps > max_steps {
            return Err(Error::GuardExceeded(format!("subduction exceeded {max_steps} steps")));
        }
        match (semigroup_member(&lead, &lms), cache.as_mut()) {
            (Some(w), Some(cache)) => {
                let product = cache.product(&w.as_exponent());
                let lc = product.coefficient(&lead).expect("witness matches leading exponent");
                let scale = &coeff / lc;
                work.add_scaled(&-scale.clone(), &product);
                debug_assert!(work.coefficient(&lead).is_none());
                representation.add_term(w.as_exponent(), scale);
            }
            (Some(_), None) => {
                // only the constant monomial is generated by an empty set
                debug_assert!(lead.is_zero());
                work.remove_term(&lead);
                representation.add_term(Exponent::zero(aux.nvars()), coeff);
            }
            (None, _) => {
                work.remove_term(&lead);
                remainder.add_term(lead, coeff);
            }
        }
    }
    Ok(SubductionResult { remainder, representation })
}

/// True iff no term of `f` lies in the monomial algebra of `LM(gens)`.
pub fn is_reduced(f: &Polynomial, gens: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let lms = leading_exponents(gens, order)?;
    Ok(f.support().all(|e| semigroup_member(e, &lms).is_none()))
}

/// Sum of the representation evaluated at `gens` and the remainder.
pub fn reconstruct(result: &SubductionResult, gens: &[Polynomial]) -> Result<Polynomial> {
    if gens.is_empty() {
        let c = result
            .representation
            .coefficient(&Exponent::zero(result.representation.nvars()))
            .cloned()
            .unwrap_or_else(Rational::zero);
        return Ok(&Polynomial::constant(result.remainder.ring(), c) + &result.remainder);
    }
    let evaluated = crate::poly::evaluate_representation(&result.representation, gens)?;
    evaluated.checked_add(&result.remainder)
}
