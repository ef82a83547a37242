//! Weighted degrees and initial forms.

use std::cmp::Ordering;

use crate::order::WeightVector;
use crate::poly::{Polynomial, Rational};

/// `w`-degree of a polynomial. The zero polynomial sits below every
/// finite degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum WeightedDegree {
    MinusInfinity,
    Finite(Rational),
}

pub fn wdeg(w: &WeightVector, f: &Polynomial) -> WeightedDegree {
    f.support()
        .map(|e| w.degree(e))
        .max()
        .map_or(WeightedDegree::MinusInfinity, WeightedDegree::Finite)
}

/// Sum of the terms of `f` of maximal `w`-degree.
pub fn initial_form(w: &WeightVector, f: &Polynomial) -> Polynomial {
    let mut best: Option<Rational> = None;
    let mut top = Vec::new();
    for (e, c) in f.terms() {
        let d = w.degree(e);
        match best.as_ref().map(|b| d.cmp(b)) {
            None | Some(Ordering::Greater) => {
                best = Some(d);
                top.clear();
                top.push((e.clone(), c.clone()));
            }
            Some(Ordering::Equal) => top.push((e.clone(), c.clone())),
            Some(Ordering::Less) => {}
        }
    }
    Polynomial::from_terms(f.ring(), top)
}

pub fn initial_set(w: &WeightVector, gens: &[Polynomial]) -> Vec<Polynomial> {
    gens.iter().map(|g| initial_form(w, g)).collect()
}

pub fn is_w_homogeneous(w: &WeightVector, f: &Polynomial) -> bool {
    let mut degrees = f.support().map(|e| w.degree(e));
    match degrees.next() {
        None => true,
        Some(d) => degrees.all(|x| x == d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::TermOrder;
    use crate::poly::{rat, Exponent, Ring};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    fn p(terms: &[([u32; 3], (i64, i64))]) -> Polynomial {
        Polynomial::from_terms(
            &ring(),
            terms.iter().map(|(e, (n, d))| (Exponent::new(e.to_vec()), rat(*n, *d))),
        )
    }

    fn w(v: [(i64, i64); 3]) -> WeightVector {
        WeightVector::new(v.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn wdeg_examples() {
        let f = p(&[([0, 0, 2], (1, 1)), ([1, 1, 0], (1, 1))]);
        assert_eq!(wdeg(&w([(0, 1), (0, 1), (1, 1)]), &f), WeightedDegree::Finite(rat(2, 1)));
        let g = p(&[([2, 2, 0], (1, 1))]);
        assert_eq!(wdeg(&w([(2, 3), (0, 1), (1, 3)]), &g), WeightedDegree::Finite(rat(4, 3)));
        let zero = Polynomial::zero(&ring());
        assert_eq!(wdeg(&w([(1, 1), (1, 1), (1, 1)]), &zero), WeightedDegree::MinusInfinity);
        assert!(WeightedDegree::MinusInfinity < WeightedDegree::Finite(rat(0, 1)));
    }

    #[test]
    fn initial_form_examples() {
        let f = p(&[([0, 0, 2], (1, 1)), ([1, 1, 0], (1, 1))]);
        assert_eq!(initial_form(&w([(0, 1), (0, 1), (1, 1)]), &f), p(&[([0, 0, 2], (1, 1))]));
        assert_eq!(initial_form(&w([(2, 3), (0, 1), (1, 3)]), &f), f);
        let m = p(&[([3, 0, 1], (-5, 7))]);
        assert_eq!(initial_form(&w([(1, 1), (2, 1), (3, 1)]), &m), m);
        let zero = Polynomial::zero(&ring());
        assert!(initial_form(&w([(1, 1), (1, 1), (1, 1)]), &zero).is_zero());
    }

    #[test]
    fn initial_set_examples() {
        let gens = vec![
            p(&[([0, 0, 2], (1, 1)), ([1, 1, 0], (1, 1))]),
            p(&[([2, 2, 0], (1, 1)), ([0, 3, 0], (1, 1))]),
        ];
        let second = initial_set(&w([(2, 3), (0, 1), (1, 3)]), &gens);
        assert_eq!(second, vec![gens[0].clone(), p(&[([2, 2, 0], (1, 1))])]);
        assert!(initial_set(&w([(1, 1), (0, 1), (0, 1)]), &[]).is_empty());
        // x^2 y^2 and y^3 both have degree 0 under (0, 0, 1)
        let first = initial_set(&w([(0, 1), (0, 1), (1, 1)]), &gens);
        assert_eq!(first, vec![p(&[([0, 0, 2], (1, 1))]), gens[1].clone()]);
    }

    #[test]
    fn homogeneity_examples() {
        let f = p(&[([2, 1, 0], (1, 1)), ([0, 0, 3], (1, 1))]);
        assert!(is_w_homogeneous(&w([(1, 1), (1, 1), (1, 1)]), &f));
        let g = p(&[([0, 0, 2], (1, 1)), ([1, 1, 0], (1, 1))]);
        assert!(!is_w_homogeneous(&w([(0, 1), (0, 1), (1, 1)]), &g));
        assert!(is_w_homogeneous(&w([(0, 1), (0, 1), (1, 1)]), &Polynomial::zero(&ring())));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -5i64..=5), 0..6).prop_map(|terms| {
            Polynomial::from_terms(
                &ring(),
                terms.into_iter().map(|((a, b, c), k)| (Exponent::new(vec![a, b, c]), rat(k, 1))),
            )
        })
    }

    fn arb_weight() -> impl Strategy<Value = WeightVector> {
        prop::collection::vec((0i64..5, 1i64..4), 3)
            .prop_filter("nonzero", |v| v.iter().any(|(n, _)| *n > 0))
            .prop_map(|v| WeightVector::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn multiplicative(f in arb_poly(), g in arb_poly(), w in arb_weight()) {
            let lhs = initial_form(&w, &(&f * &g));
            let rhs = &initial_form(&w, &f) * &initial_form(&w, &g);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn degree_additive(f in arb_poly(), g in arb_poly(), w in arb_weight()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let (WeightedDegree::Finite(a), WeightedDegree::Finite(b)) = (wdeg(&w, &f), wdeg(&w, &g)) else {
                unreachable!()
            };
            prop_assert_eq!(wdeg(&w, &(&f * &g)), WeightedDegree::Finite(a + b));
        }

        #[test]
        fn idempotent(f in arb_poly(), w in arb_weight()) {
            let i = initial_form(&w, &f);
            prop_assert!(is_w_homogeneous(&w, &i));
            prop_assert_eq!(initial_form(&w, &i), i);
        }

        #[test]
        fn leading_term_lies_in_initial_form(
            f in arb_poly(),
            w in arb_weight(),
            prio in Just(vec![0usize, 1, 2]).prop_shuffle(),
        ) {
            prop_assume!(!f.is_zero());
            let order = TermOrder::lex(3, &prio).unwrap().refine(&w).unwrap();
            let lt = order.leading_term(&f).unwrap();
            let init = initial_form(&w, &f);
            prop_assert_eq!(init.coefficient(&lt.exponent), Some(&lt.coefficient));
        }
    }
}
