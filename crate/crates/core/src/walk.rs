//! Conversion of a Sagbi basis between two term orders by following the
//! straight segment from the start weight to the target weight.
//!
//! Each pass works at the current weight `w`: take initial forms of the
//! current basis, complete them to a Sagbi basis under `(w, M_t)`, lift the
//! result back through the recorded representations, interreduce, and
//! move `w` to the last point of the segment that stays in the new cone.

use num_traits::{One, Signed};

use crate::cone::{advance, cone_vectors, next_cone};
use crate::error::{Error, Result};
use crate::initial::initial_set;
use crate::order::{TermOrder, WeightVector};
use crate::poly::{Polynomial, Rational};
use crate::sagbi::{interreduce_with_limit, is_sagbi, sagbi_construct, SagbiGuards, TrackedBasis, TrackedElement};

pub const DEFAULT_MAX_WALK_STEPS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkOptions {
    pub guards: SagbiGuards,
    pub max_walk_steps: usize,
    /// Check that the input is a Sagbi basis under the start order.
    pub validate_input: bool,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions { guards: SagbiGuards::default(), max_walk_steps: DEFAULT_MAX_WALK_STEPS, validate_input: true }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkStep {
    pub step_index: usize,
    pub weight: WeightVector,
    /// `(weight, M_t)`, the order used during this pass.
    pub order: TermOrder,
    pub initials: Vec<Polynomial>,
    /// Sagbi basis of the initials; representations are over `initials`.
    pub h: TrackedBasis,
    pub lifted: Vec<Polynomial>,
    pub interreduced: Vec<Polynomial>,
    pub u_last: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkStatus {
    Converged,
    GuardExceeded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkReport {
    pub steps: Vec<WalkStep>,
    pub final_basis: Vec<Polynomial>,
    pub status: WalkStatus,
    /// Set when `status` is `GuardExceeded`.
    pub guard_message: Option<String>,
}

/// Replaces the initial forms in each representation by the polynomials
/// they came from.
pub fn lift(h: &TrackedBasis, previous: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if h.generator_count() != previous.len() {
        return Err(Error::ArityMismatch { expected: h.generator_count(), found: previous.len() });
    }
    let Some(first) = previous.first() else {
        return Ok(Vec::new());
    };
    h.elements()
        .iter()
        .map(|el| el.representation.evaluate(previous, first.ring()))
        .collect()
}

pub fn walk(start_basis: &[Polynomial], start: &TermOrder, target: &TermOrder, options: &WalkOptions) -> Result<WalkReport> {
    if !start.is_global() || !target.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    if start.nvars() != target.nvars() {
        return Err(Error::DimensionMismatch { expected: start.nvars(), found: target.nvars() });
    }
    if let Some(p) = start_basis.iter().find(|p| p.nvars() != start.nvars()) {
        return Err(Error::DimensionMismatch { expected: start.nvars(), found: p.nvars() });
    }
    if start_basis.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    if options.validate_input && !is_sagbi(start_basis, start, &options.guards)? {
        return Err(Error::NotSagbiBasis);
    }
    let w_target = target.first_row()?;
    let mut weight = start.first_row()?;
    let mut current: Vec<Polynomial> = start_basis.to_vec();
    let mut steps: Vec<WalkStep> = Vec::new();

    loop {
        if steps.len() >= options.max_walk_steps {
            let msg = format!("walk exceeded {} steps", options.max_walk_steps);
            return Ok(stopped(steps, current, msg));
        }
        match walk_pass(steps.len(), &weight, &current, target, &w_target, &options.guards) {
            Ok(step) => {
                let reached = weight == w_target;
                let u = step.u_last.clone();
                current = step.interreduced.clone();
                steps.push(step);
                if reached {
                    break;
                }
                weight = advance(&weight, &w_target, &u)?;
            }
            Err(Error::GuardExceeded(msg)) => return Ok(stopped(steps, current, msg)),
            Err(e) => return Err(e),
        }
    }
    Ok(WalkReport { steps, final_basis: current, status: WalkStatus::Converged, guard_message: None })
}

fn stopped(steps: Vec<WalkStep>, current: Vec<Polynomial>, msg: String) -> WalkReport {
    WalkReport { steps, final_basis: current, status: WalkStatus::GuardExceeded, guard_message: Some(msg) }
}

fn walk_pass(
    index: usize,
    weight: &WeightVector,
    previous: &[Polynomial],
    target: &TermOrder,
    w_target: &WeightVector,
    guards: &SagbiGuards,
) -> Result<WalkStep> {
    let order = target.refine(weight)?;
    let initials = initial_set(weight, previous);
    let h = sagbi_construct(&initials, &order, guards)?;
    let lifted = lift(&h, previous)?;
    let tracked = TrackedBasis::from_parts(
        lifted
            .iter()
            .zip(h.elements())
            .map(|(p, el)| TrackedElement { polynomial: p.clone(), representation: el.representation.clone() })
            .collect(),
        previous.len(),
    );
    let interreduced = interreduce_with_limit(&tracked, &order, guards.max_steps)?.polynomials();
    let cone = cone_vectors(&interreduced, &order)?;
    let u_last = next_cone(weight, w_target, &cone)?;
    if !u_last.is_positive() || u_last > Rational::one() {
        return Err(Error::Internal(format!("path parameter {u_last} outside (0, 1]")));
    }
    Ok(WalkStep { step_index: index, weight: weight.clone(), order, initials, h, lifted, interreduced, u_last })
}
