//! Sagbi basis construction, the Sagbi criterion and interreduction.
//!
//! Every basis element carries its representation as a polynomial in the
//! original generators, so callers can replay it on other arguments.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{toric_relations_with_guards, GroebnerGuards};
use crate::membership::{semigroup_member, subduct_with_limit, DEFAULT_MAX_STEPS};
use crate::order::TermOrder;
use crate::poly::{Exponent, Polynomial, PowerCache, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SagbiGuards {
    /// Outer passes of the construction loop.
    pub max_passes: usize,
    /// Total degree cap for new basis elements.
    pub max_degree: u64,
    /// Reduction steps per subduction.
    pub max_steps: usize,
    pub groebner: GroebnerGuards,
}

impl Default for SagbiGuards {
    fn default() -> Self {
        SagbiGuards {
            max_passes: 64,
            max_degree: 40,
            max_steps: DEFAULT_MAX_STEPS,
            groebner: GroebnerGuards::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrackedElement {
    pub polynomial: Polynomial,
    /// Polynomial in `t1..ts`, one variable per original generator.
    pub representation: Polynomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrackedBasis {
    elements: Vec<TrackedElement>,
    aux: Arc<Ring>,
    generators: usize,
}

impl TrackedBasis {
    /// Each polynomial represented by its own variable `t_i`.
    pub fn identity(polys: &[Polynomial]) -> Self {
        let aux = Ring::auxiliary(polys.len());
        let elements = polys
            .iter()
            .enumerate()
            .map(|(i, p)| TrackedElement { polynomial: p.clone(), representation: Polynomial::var(&aux, i) })
            .collect();
        TrackedBasis { elements, aux, generators: polys.len() }
    }

    pub fn from_parts(elements: Vec<TrackedElement>, generators: usize) -> Self {
        TrackedBasis { elements, aux: Ring::auxiliary(generators), generators }
    }

    pub fn elements(&self) -> &[TrackedElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn auxiliary_ring(&self) -> &Arc<Ring> {
        &self.aux
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.polynomial.clone()).collect()
    }

    pub fn representations(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.representation.clone()).collect()
    }

    /// Checks `representation(originals) == polynomial` for every element.
    pub fn verify(&self, originals: &[Polynomial]) -> Result<bool> {
        for el in &self.elements {
            let value = el.representation.evaluate(originals, el.polynomial.ring())?;
            if value != el.polynomial {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn push_monic(&mut self, poly: Polynomial, rep: Polynomial, order: &TermOrder) {
        let lc = order.leading_coefficient(&poly).expect("nonzero").recip();
        self.elements.push(TrackedElement { polynomial: poly.scale(&lc), representation: rep.scale(&lc) });
    }
}

/// Evaluates `rel` (in one variable per basis element) at the basis
/// polynomials and at their representations. The ratio is chosen so the
/// two leading terms cancel.
fn tete_a_tete(
    rel: &Polynomial,
    polys: &[Polynomial],
    reps: &[Polynomial],
    aux: &Arc<Ring>,
    order: &TermOrder,
) -> Result<(Polynomial, Polynomial)> {
    let terms: Vec<(&Exponent, _)> = rel.terms().collect();
    if terms.len() != 2 {
        return Err(Error::Internal(format!("relation {rel} is not a binomial")));
    }
    let mut cache = PowerCache::new(polys);
    let plus = cache.product(terms[0].0);
    let minus = cache.product(terms[1].0);
    let lc_plus = order.leading_coefficient(&plus)?;
    let lc_minus = order.leading_coefficient(&minus)?;
    let ratio = &lc_plus / &lc_minus;
    let mut tete = plus;
    tete.add_scaled(&-ratio.clone(), &minus);

    let mut rep_cache = PowerCache::new(reps);
    let mut rep = rep_cache.product(terms[0].0);
    rep.add_scaled(&-ratio, &rep_cache.product(terms[1].0));
    debug_assert!(rep.ring() == aux || **rep.ring() == **aux);
    Ok((tete, rep))
}

fn check_inputs(polys: &[Polynomial], order: &TermOrder) -> Result<()> {
    if !order.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    if polys.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(p) = polys.iter().find(|p| p.nvars() != order.nvars()) {
        return Err(Error::DimensionMismatch { expected: order.nvars(), found: p.nvars() });
    }
    Ok(())
}

/// Extends monic copies of `gens` until every tete-a-tete subducts to zero.
pub fn sagbi_construct(gens: &[Polynomial], order: &TermOrder, guards: &SagbiGuards) -> Result<TrackedBasis> {
    check_inputs(gens, order)?;
    let mut basis = TrackedBasis { elements: Vec::new(), aux: Ring::auxiliary(gens.len()), generators: gens.len() };
    for (i, g) in gens.iter().enumerate() {
        let t = Polynomial::var(&basis.aux, i);
        basis.push_monic(g.clone(), t, order);
    }
    if gens.is_empty() {
        return Ok(basis);
    }
    for _ in 0..guards.max_passes {
        let lms: Vec<Exponent> = basis
            .elements
            .iter()
            .map(|e| order.leading_exponent(&e.polynomial))
            .collect::<Result<_>>()?;
        let relations = toric_relations_with_guards(&lms, &guards.groebner)?;
        let start = basis.len();
        // relations index into the basis as it was at the start of the pass
        let polys_at_start = basis.polynomials();
        let reps_at_start = basis.representations();
        for rel in &relations {
            let (tete, tete_rep) = tete_a_tete(rel, &polys_at_start, &reps_at_start, &basis.aux, order)?;
            let current = basis.polynomials();
            let sub = subduct_with_limit(&tete, &current, order, guards.max_steps)?;
            if sub.remainder.is_zero() {
                continue;
            }
            let degree = sub.remainder.total_degree().unwrap_or(0);
            if degree > guards.max_degree {
                return Err(Error::GuardExceeded(format!(
                    "possibly infinite Sagbi basis: element of degree {degree} exceeds {}",
                    guards.max_degree
                )));
            }
            let used = sub.representation.evaluate(&basis.representations(), &basis.aux)?;
            let rep = &tete_rep - &used;
            basis.push_monic(sub.remainder, rep, order);
        }
        if basis.len() == start {
            return Ok(basis);
        }
    }
    Err(Error::GuardExceeded(format!(
        "possibly infinite Sagbi basis: no completion within {} passes",
        guards.max_passes
    )))
}

/// Sagbi criterion: every tete-a-tete of `polys` subducts to zero.
pub fn is_sagbi(polys: &[Polynomial], order: &TermOrder, guards: &SagbiGuards) -> Result<bool> {
    check_inputs(polys, order)?;
    if polys.is_empty() {
        return Ok(true);
    }
    let monic: Vec<Polynomial> = polys.iter().map(|p| order.monic(p)).collect();
    let lms: Vec<Exponent> = monic.iter().map(|p| order.leading_exponent(p)).collect::<Result<_>>()?;
    let aux = Ring::auxiliary(monic.len());
    let idents: Vec<Polynomial> = (0..monic.len()).map(|i| Polynomial::var(&aux, i)).collect();
    for rel in toric_relations_with_guards(&lms, &guards.groebner)? {
        let (tete, _) = tete_a_tete(&rel, &monic, &idents, &aux, order)?;
        if !subduct_with_limit(&tete, &monic, order, guards.max_steps)?.remainder.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drops elements whose leading monomial is generated by the others, makes
/// the rest monic and fully reduces their tails.
pub fn interreduce(basis: &TrackedBasis, order: &TermOrder) -> Result<TrackedBasis> {
    interreduce_with_limit(basis, order, DEFAULT_MAX_STEPS)
}

pub fn interreduce_with_limit(basis: &TrackedBasis, order: &TermOrder, max_steps: usize) -> Result<TrackedBasis> {
    if !order.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    let mut out = TrackedBasis { elements: Vec::new(), aux: basis.aux.clone(), generators: basis.generators };
    for el in &basis.elements {
        if !el.polynomial.is_zero() {
            out.push_monic(el.polynomial.clone(), el.representation.clone(), order);
        }
    }
    let lms: Vec<Exponent> =
        out.elements.iter().map(|e| order.leading_exponent(&e.polynomial)).collect::<Result<_>>()?;
    let mut alive = vec![true; out.len()];
    for i in 0..out.len() {
        let others: Vec<Exponent> = (0..out.len())
            .filter(|&j| j != i && alive[j])
            .map(|j| lms[j].clone())
            .collect();
        if semigroup_member(&lms[i], &others).is_some() {
            alive[i] = false;
        }
    }
    let mut kept: Vec<TrackedElement> =
        out.elements.into_iter().zip(alive).filter(|(_, a)| *a).map(|(e, _)| e).collect();

    for i in 0..kept.len() {
        let polys: Vec<Polynomial> = kept.iter().map(|e| e.polynomial.clone()).collect();
        let reps: Vec<Polynomial> = kept.iter().map(|e| e.representation.clone()).collect();
        let lead = order.leading_exponent(&polys[i])?;
        let mut tail = polys[i].clone();
        let lc = tail.remove_term(&lead).expect("leading term");
        let sub = subduct_with_limit(&tail, &polys, order, max_steps)?;
        if sub.representation.is_zero() {
            continue;
        }
        let mut reduced = sub.remainder;
        reduced.add_term(lead, lc);
        let used = sub.representation.evaluate(&reps, &basis.aux)?;
        kept[i] = TrackedElement { polynomial: reduced, representation: &reps[i] - &used };
    }
    debug_assert!(kept.iter().all(|e| !e.polynomial.is_zero()));
    debug_assert!(kept
        .iter()
        .all(|e| order.leading_coefficient(&e.polynomial).is_ok_and(|c| !c.is_zero())));
    Ok(TrackedBasis { elements: kept, aux: basis.aux.clone(), generators: basis.generators })
}

/// Interreduces plain polynomials (representations over themselves).
pub fn interreduce_polys(polys: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>> {
    Ok(interreduce(&TrackedBasis::identity(polys), order)?.polynomials())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::subduct;
    use crate::order::WeightVector;
    use crate::poly::rat;

    fn ring() -> Arc<Ring> {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    fn p(terms: &[([u32; 3], (i64, i64))]) -> Polynomial {
        Polynomial::from_terms(
            &ring(),
            terms.iter().map(|(e, (n, d))| (Exponent::new(e.to_vec()), rat(*n, *d))),
        )
    }

    fn second_pass() -> TermOrder {
        let w = WeightVector::new(vec![rat(2, 3), rat(0, 1), rat(1, 3)]).unwrap();
        TermOrder::lex(3, &[0, 1, 2]).unwrap().refine(&w).unwrap()
    }

    fn f1() -> Polynomial {
        p(&[([0, 0, 2], (1, 1)), ([1, 1, 0], (1, 1))])
    }

    #[test]
    fn construct_second_pass_example() {
        let gens = vec![f1(), p(&[([2, 2, 0], (1, 1))])];
        let h = sagbi_construct(&gens, &second_pass(), &SagbiGuards::default()).unwrap();
        let h3 = p(&[([1, 1, 2], (1, 1)), ([0, 0, 4], (1, 2))]);
        assert_eq!(h.polynomials(), vec![gens[0].clone(), gens[1].clone(), h3]);
        let aux = Ring::auxiliary(2);
        let t1 = Polynomial::var(&aux, 0);
        let t2 = Polynomial::var(&aux, 1);
        let p3 = (&t1.pow(2) - &t2).scale(&rat(1, 2));
        assert_eq!(h.representations(), vec![t1, t2, p3]);
        assert!(h.verify(&gens).unwrap());
    }

    #[test]
    fn construct_single_generator() {
        let g = p(&[([1, 0, 0], (3, 1)), ([0, 1, 0], (1, 1))]);
        let order = TermOrder::lex(3, &[0, 1, 2]).unwrap();
        let h = sagbi_construct(std::slice::from_ref(&g), &order, &SagbiGuards::default()).unwrap();
        assert_eq!(h.polynomials(), vec![g.scale(&rat(1, 3))]);
        assert_eq!(h.representations(), vec![Polynomial::var(&Ring::auxiliary(1), 0).scale(&rat(1, 3))]);
    }

    #[test]
    fn construct_symmetric_pair() {
        // K[x+y, xy] under lex x > y: both LMs are x and xy, no relations
        let r = Ring::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gens = vec![&x + &y, &x * &y];
        let order = TermOrder::lex(2, &[0, 1]).unwrap();
        let h = sagbi_construct(&gens, &order, &SagbiGuards::default()).unwrap();
        assert_eq!(h.polynomials(), gens);
        assert!(is_sagbi(&gens, &order, &SagbiGuards::default()).unwrap());
    }

    #[test]
    fn is_sagbi_examples() {
        let start = TermOrder::lex(3, &[2, 1, 0]).unwrap();
        let s = vec![f1(), p(&[([0, 3, 0], (1, 1)), ([2, 2, 0], (1, 1))])];
        assert!(is_sagbi(&s, &start, &SagbiGuards::default()).unwrap());
        let not = vec![f1(), p(&[([2, 2, 0], (1, 1))])];
        assert!(!is_sagbi(&not, &second_pass(), &SagbiGuards::default()).unwrap());
        let monos = vec![p(&[([1, 0, 0], (1, 1))]), p(&[([2, 0, 0], (1, 1))])];
        assert!(is_sagbi(&monos, &start, &SagbiGuards::default()).unwrap());
    }

    #[test]
    fn interreduce_example() {
        let lifted = vec![
            f1(),
            p(&[([2, 2, 0], (1, 1)), ([0, 3, 0], (1, 1))]),
            p(&[([1, 1, 2], (1, 1)), ([0, 0, 4], (1, 2)), ([0, 3, 0], (-1, 2))]),
        ];
        let out = interreduce_polys(&lifted, &second_pass()).unwrap();
        assert_eq!(out, vec![lifted[0].clone(), lifted[2].clone()]);
        let again = interreduce_polys(&out, &second_pass()).unwrap();
        assert_eq!(again, out);
    }

    #[test]
    fn interreduce_drops_powers() {
        let x = p(&[([1, 0, 0], (1, 1))]);
        let x2 = p(&[([2, 0, 0], (1, 1))]);
        let order = TermOrder::lex(3, &[0, 1, 2]).unwrap();
        assert_eq!(interreduce_polys(&[x.clone(), x2], &order).unwrap(), vec![x]);
    }

    #[test]
    fn interreduce_keeps_representations_valid() {
        let order = TermOrder::deglex(3, &[0, 1, 2]).unwrap();
        let gens = vec![
            p(&[([1, 0, 0], (2, 1)), ([0, 0, 1], (1, 1))]),
            p(&[([2, 0, 0], (1, 1)), ([0, 1, 0], (1, 1)), ([0, 0, 1], (1, 1))]),
        ];
        let basis = sagbi_construct(&gens, &order, &SagbiGuards::default()).unwrap();
        let reduced = interreduce(&basis, &order).unwrap();
        assert!(reduced.verify(&gens).unwrap());
        for el in basis.elements() {
            assert!(subduct(&el.polynomial, &reduced.polynomials(), &order).unwrap().remainder.is_zero());
        }
    }

    #[test]
    fn guard_on_infinite_basis() {
        // K[x + y, xy, xy^2] has no finite Sagbi basis under lex x > y
        let r = Ring::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gens = vec![&x + &y, &x * &y, &(&x * &y) * &y];
        let order = TermOrder::lex(2, &[0, 1]).unwrap();
        let guards = SagbiGuards { max_passes: 6, max_degree: 12, ..Default::default() };
        assert!(matches!(sagbi_construct(&gens, &order, &guards), Err(Error::GuardExceeded(_))));
    }
}
