//! Seeded random instances shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sagbi_walk::poly::rat;
use sagbi_walk::sagbi::{interreduce, sagbi_construct};
use sagbi_walk::{Error, Exponent, Polynomial, Ring, SagbiGuards, TermOrder, WeightVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(n: usize) -> Arc<Ring> {
    let names = ["x", "y", "z", "u", "v"];
    Ring::new(names[..n].iter().copied()).unwrap()
}

pub fn example_ring() -> Arc<Ring> {
    ring(3)
}

/// Terms given as `(exponent, numerator, denominator)`.
pub fn poly(ring: &Arc<Ring>, terms: &[(&[u32], i64, i64)]) -> Polynomial {
    Polynomial::from_terms(ring, terms.iter().map(|(e, n, d)| (Exponent::new(e.to_vec()), rat(*n, *d))))
}

pub fn example_start() -> Vec<Polynomial> {
    let r = example_ring();
    vec![
        poly(&r, &[(&[0, 0, 2], 1, 1), (&[1, 1, 0], 1, 1)]),
        poly(&r, &[(&[0, 3, 0], 1, 1), (&[2, 2, 0], 1, 1)]),
    ]
}

pub fn example_final() -> Vec<Polynomial> {
    let r = example_ring();
    vec![
        poly(&r, &[(&[1, 1, 0], 1, 1), (&[0, 0, 2], 1, 1)]),
        poly(&r, &[(&[1, 1, 2], 1, 1), (&[0, 0, 4], 1, 2), (&[0, 3, 0], -1, 2)]),
    ]
}

/// lex z > y > x
pub fn example_start_order() -> TermOrder {
    TermOrder::lex(3, &[2, 1, 0]).unwrap()
}

/// lex x > y > z
pub fn example_target_order() -> TermOrder {
    TermOrder::lex(3, &[0, 1, 2]).unwrap()
}

pub fn random_exponent(rng: &mut impl Rng, n: usize, max_degree: u32) -> Exponent {
    loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_degree)).collect();
        let d: u32 = e.iter().sum();
        if d >= 1 && d <= max_degree {
            return Exponent::new(e);
        }
    }
}

pub fn random_coefficient(rng: &mut impl Rng) -> sagbi_walk::Rational {
    let mut n = rng.gen_range(1..=5i64);
    if rng.gen_bool(0.4) {
        n = -n;
    }
    rat(n, rng.gen_range(1..=3))
}

/// Nonzero polynomial without constant term.
pub fn random_poly(rng: &mut impl Rng, ring: &Arc<Ring>, max_terms: usize, max_degree: u32) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let f = Polynomial::from_terms(
            ring,
            (0..k).map(|_| (random_exponent(rng, ring.nvars(), max_degree), random_coefficient(rng))),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

/// Full-rank integer matrix whose columns start with a positive entry.
pub fn random_global_order(rng: &mut impl Rng, n: usize) -> TermOrder {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|_| if i == 0 { rng.gen_range(0..=3) } else { rng.gen_range(-2..=3) })
                    .collect()
            })
            .collect();
        if let Ok(order) = TermOrder::from_int_rows(&rows) {
            if order.is_global() {
                return order;
            }
        }
    }
}

pub fn random_lex(rng: &mut impl Rng, n: usize) -> TermOrder {
    let mut prio: Vec<usize> = (0..n).collect();
    prio.shuffle(rng);
    TermOrder::lex(n, &prio).unwrap()
}

pub fn random_weight(rng: &mut impl Rng, n: usize) -> WeightVector {
    loop {
        let w: Vec<_> = (0..n).map(|_| rat(rng.gen_range(0..=6), rng.gen_range(1..=3))).collect();
        if let Ok(w) = WeightVector::new(w) {
            return w;
        }
    }
}

pub fn small_guards() -> SagbiGuards {
    SagbiGuards { max_passes: 12, max_degree: 16, max_steps: 20_000, ..SagbiGuards::default() }
}

/// A random walk instance: the start basis is already a reduced Sagbi basis
/// under the start order.
pub struct Instance {
    pub seed: u64,
    pub generators: Vec<Polynomial>,
    pub start_basis: Vec<Polynomial>,
    pub start: TermOrder,
    pub target: TermOrder,
}

pub enum Generated {
    Ready(Instance),
    /// The start basis could not be completed within the guards.
    Excluded(u64),
}

pub fn instance(seed: u64, guards: &SagbiGuards) -> Generated {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=3);
    let r = ring(n);
    let k = rng.gen_range(2..=3);
    let generators: Vec<Polynomial> = (0..k).map(|_| random_poly(&mut rng, &r, 3, 4)).collect();
    let start = random_global_order(&mut rng, n);
    let target = random_global_order(&mut rng, n);
    match sagbi_construct(&generators, &start, guards).and_then(|b| interreduce(&b, &start)) {
        Ok(b) => Generated::Ready(Instance { seed, generators, start_basis: b.polynomials(), start, target }),
        Err(Error::GuardExceeded(_)) => Generated::Excluded(seed),
        Err(e) => panic!("seed {seed}: {e}"),
    }
}

/// Same polynomials regardless of order and scaling.
pub fn same_monic_set(a: &[Polynomial], b: &[Polynomial], order: &TermOrder) -> bool {
    let monic = |v: &[Polynomial]| {
        let mut out: Vec<String> = v.iter().map(|p| order.format(&order.monic(p))).collect();
        out.sort();
        out.dedup();
        out
    };
    monic(a) == monic(b)
}
