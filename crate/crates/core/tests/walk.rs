mod common;

use common::*;
use num_traits::{One, Signed};
use proptest::prelude::*;
use sagbi_walk::cone::{advance, cone_vectors, in_cone};
use sagbi_walk::groebner::{buchberger, normal_form, GroebnerGuards, IdealBasis};
use sagbi_walk::membership::{is_reduced, subduct};
use sagbi_walk::poly::{evaluate_representation, rat};
use sagbi_walk::sagbi::{interreduce_polys, is_sagbi};
use sagbi_walk::{walk, Polynomial, Rational, TermOrder, WalkOptions, WalkReport, WalkStatus, WeightVector};

fn example_walk() -> WalkReport {
    walk(&example_start(), &example_start_order(), &example_target_order(), &WalkOptions::default()).unwrap()
}

#[test]
fn worked_example_end_to_end() {
    let report = example_walk();
    let target = example_target_order();
    assert_eq!(report.status, WalkStatus::Converged);
    assert_eq!(report.final_basis, example_final());
    let weights: Vec<&WeightVector> = report.steps.iter().map(|s| &s.weight).collect();
    assert_eq!(weights[0], &WeightVector::from_ints(&[0, 0, 1]).unwrap());
    assert_eq!(weights[1], &WeightVector::new(vec![rat(2, 3), rat(0, 1), rat(1, 3)]).unwrap());
    assert_eq!(weights[2], &WeightVector::from_ints(&[1, 0, 0]).unwrap());
    let printed: Vec<String> = report.final_basis.iter().map(|p| target.format(p)).collect();
    assert_eq!(printed, ["x*y + z^2", "x*y*z^2 - 1/2*y^3 + 1/2*z^4"]);
}

#[test]
fn worked_example_first_pass() {
    let report = example_walk();
    let first = &report.steps[0];
    let r = example_ring();
    // y^3 and x^2*y^2 both have weight 0 under (0, 0, 1)
    assert_eq!(first.initials, vec![poly(&r, &[(&[0, 0, 2], 1, 1)]), example_start()[1].clone()]);
    assert_eq!(first.u_last, rat(2, 3));
    assert_eq!(first.interreduced, example_start());
}

#[test]
fn final_basis_is_a_reduced_sagbi_basis() {
    let report = example_walk();
    let target = example_target_order();
    assert!(is_sagbi(&report.final_basis, &target, &Default::default()).unwrap());
    assert_eq!(interreduce_polys(&report.final_basis, &target).unwrap(), report.final_basis);
    for g in &report.final_basis {
        assert!(target.leading_coefficient(g).unwrap().is_one());
    }
}

fn check_walk(report: &WalkReport, target: &TermOrder) -> Result<(), TestCaseError> {
    let w_t = target.first_row().unwrap();
    let mut previous_u: Option<Rational> = None;
    for (k, step) in report.steps.iter().enumerate() {
        // the lifted set is a Sagbi basis under the refined order
        prop_assert!(is_sagbi(&step.interreduced, &step.order, &small_guards()).unwrap());
        // leading monomials survive lifting
        for (h, lifted) in step.h.polynomials().iter().zip(&step.lifted) {
            prop_assert_eq!(step.order.leading_exponent(h).unwrap(), step.order.leading_exponent(lifted).unwrap());
        }
        prop_assert!(step.u_last.is_positive() && step.u_last <= Rational::one());
        let cone = cone_vectors(&step.interreduced, &step.order).unwrap();
        prop_assert!(in_cone(&step.weight, &cone));
        prop_assert!(in_cone(&advance(&step.weight, &w_t, &step.u_last).unwrap(), &cone));
        if let Some(u) = previous_u {
            prop_assert_eq!(step.weight.clone(), advance(&report.steps[k - 1].weight, &w_t, &u).unwrap());
            prop_assert!(step.weight != report.steps[k - 1].weight);
        }
        previous_u = Some(step.u_last.clone());
    }
    prop_assert_eq!(&report.steps.last().unwrap().weight, &w_t);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_walks_match_direct_construction(seed in 1000u64..2000) {
        let guards = small_guards();
        let Generated::Ready(inst) = instance(seed, &guards) else { return Ok(()) };
        let report = walk(&inst.start_basis, &inst.start, &inst.target, &WalkOptions { guards, ..Default::default() }).unwrap();
        prop_assume!(report.status == WalkStatus::Converged);
        check_walk(&report, &inst.target)?;
        let direct = sagbi_walk::sagbi::sagbi_construct(&inst.generators, &inst.target, &guards)
            .and_then(|b| sagbi_walk::sagbi::interreduce(&b, &inst.target));
        if let Ok(direct) = direct {
            prop_assert!(same_monic_set(&report.final_basis, &direct.polynomials(), &inst.target));
        }
    }

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = ring(3);
        let f = random_poly(&mut rng, &r, 4, 3);
        let g = random_poly(&mut rng, &r, 4, 3);
        let h = random_poly(&mut rng, &r, 4, 3);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(&r), f.clone());
        prop_assert_eq!(f.pow(3), &(&f * &f) * &f);
    }

    #[test]
    fn subduction_reconstructs(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = ring(3);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
        let f = random_poly(&mut rng, &r, 5, 6);
        let order = random_global_order(&mut rng, 3);
        let res = subduct(&f, &gens, &order).unwrap();
        prop_assert_eq!(&evaluate_representation(&res.representation, &gens).unwrap() + &res.remainder, f);
        prop_assert!(is_reduced(&res.remainder, &gens, &order).unwrap());
    }

    #[test]
    fn groebner_bases_are_sound(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = ring(2);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
        let order = random_lex(&mut rng, 2);
        let gb = buchberger(&IdealBasis::new(gens.clone()), &order, &GroebnerGuards::default()).unwrap();
        for g in &gens {
            prop_assert!(normal_form(g, gb.generators(), &order).is_zero());
        }
        for g in gb.generators() {
            prop_assert!(order.leading_coefficient(g).unwrap().is_one());
        }
    }

    #[test]
    fn separating_weight_agrees_with_the_order(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let order = random_global_order(&mut rng, 3);
        let pairs: Vec<_> = (0..4)
            .map(|_| (random_exponent(&mut rng, 3, 5), random_exponent(&mut rng, 3, 5)))
            .filter(|(a, b)| a != b)
            .collect();
        let w = order.separating_weight(&pairs).unwrap();
        for (a, b) in &pairs {
            let (da, db) = (w.degree(a), w.degree(b));
            prop_assert_eq!(da.cmp(&db), order.compare(a, b));
        }
    }
}
