//! A small Buchberger engine, used to find the binomial relations among a
//! list of monomials (generators of their toric ideal).

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::{rank, TermOrder};
use crate::poly::{Exponent, Polynomial, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerGuards {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for GroebnerGuards {
    fn default() -> Self {
        GroebnerGuards { max_pairs: 100_000, max_basis: 100_000 }
    }
}

/// Generators of an ideal; never contains zero.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    generators: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(generators: Vec<Polynomial>) -> Self {
        IdealBasis { generators: generators.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }
}

/// Full reduction of `f` modulo `basis` (multivariate division remainder).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let leads: Vec<(Exponent, Rational)> = basis
        .iter()
        .filter_map(|g| order.lead(g).map(|(e, c)| (e.clone(), c.clone())))
        .collect();
    reduce_with_leads(f, basis, &leads, order)
}

fn reduce_with_leads(
    f: &Polynomial,
    basis: &[Polynomial],
    leads: &[(Exponent, Rational)],
    order: &TermOrder,
) -> Polynomial {
    let mut work = f.clone();
    let mut rem = Polynomial::zero(f.ring());
    while let Some((e, c)) = order.lead(&work).map(|(e, c)| (e.clone(), c.clone())) {
        match leads.iter().position(|(le, _)| le.divides(&e)) {
            Some(i) => {
                let shift = e.checked_sub(&leads[i].0).expect("divisible");
                let scale = -(&c / &leads[i].1);
                let sub = basis[i].mul_term(&scale, &shift);
                for (se, sc) in sub.terms() {
                    work.add_term(se.clone(), sc.clone());
                }
            }
            None => {
                work.remove_term(&e);
                rem.add_term(e, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (fe, fc) = order.lead(f).expect("nonzero");
    let (ge, gc) = order.lead(g).expect("nonzero");
    let l = fe.lcm(ge);
    let a = f.mul_term(&fc.recip(), &l.checked_sub(fe).expect("lcm"));
    let b = g.mul_term(&gc.recip(), &l.checked_sub(ge).expect("lcm"));
    &a - &b
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
}

fn coprime(a: &Exponent, b: &Exponent) -> bool {
    a.entries().iter().zip(b.entries()).all(|(&x, &y)| x == 0 || y == 0)
}

/// Gebauer-Moeller update: adds the pairs of the new element `h` that survive
/// the product and chain criteria, drops old pairs made redundant by `h`, and
/// retires generators whose leading exponent `h` divides.
fn update(pairs: &mut Vec<Pair>, active: &mut [bool], leads: &[(Exponent, Rational)], h: usize) {
    let lh = &leads[h].0;
    let mut candidates: Vec<(usize, Exponent)> =
        (0..h).filter(|&g| active[g]).map(|g| (g, lh.lcm(&leads[g].0))).collect();
    let mut kept: Vec<(usize, Exponent)> = Vec::new();
    while let Some((g, l)) = candidates.pop() {
        let dominated = candidates.iter().chain(&kept).any(|(_, other)| other.divides(&l));
        if coprime(lh, &leads[g].0) || !dominated {
            kept.push((g, l));
        }
    }
    pairs.retain(|p| {
        !lh.divides(&p.lcm)
            || lh.lcm(&leads[p.i].0) == p.lcm
            || lh.lcm(&leads[p.j].0) == p.lcm
    });
    pairs.extend(
        kept.into_iter()
            .filter(|(g, _)| !coprime(lh, &leads[*g].0))
            .map(|(g, lcm)| Pair { i: g, j: h, lcm }),
    );
    for g in 0..h {
        if active[g] && lh.divides(&leads[g].0) {
            active[g] = false;
        }
    }
}

struct State<'a> {
    order: &'a TermOrder,
    guards: &'a GroebnerGuards,
    basis: Vec<Polynomial>,
    leads: Vec<(Exponent, Rational)>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    /// Reduces `f` and keeps it if the remainder is nonzero.
    fn insert(&mut self, f: &Polynomial) -> Result<()> {
        let r = reduce_with_leads(f, &self.basis, &self.leads, self.order);
        let Some((e, c)) = self.order.lead(&r).map(|(e, c)| (e.clone(), c.clone())) else {
            return Ok(());
        };
        if self.basis.len() + 1 > self.guards.max_basis {
            return Err(Error::GuardExceeded(format!("Groebner basis exceeded {} elements", self.guards.max_basis)));
        }
        self.basis.push(r);
        self.leads.push((e, c));
        self.active.push(true);
        update(&mut self.pairs, &mut self.active, &self.leads, self.basis.len() - 1);
        if self.pairs.len() > self.guards.max_pairs {
            return Err(Error::GuardExceeded(format!("Groebner pair queue exceeded {}", self.guards.max_pairs)));
        }
        Ok(())
    }

    /// Normal selection: smallest lcm first.
    fn next_pair(&mut self) -> Option<Pair> {
        let pairs = &self.pairs;
        let pick = (0..pairs.len()).min_by(|&a, &b| {
            self.order
                .compare(&pairs[a].lcm, &pairs[b].lcm)
                .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
        })?;
        Some(self.pairs.swap_remove(pick))
    }
}

/// Reduced, monic Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &IdealBasis, order: &TermOrder, guards: &GroebnerGuards) -> Result<IdealBasis> {
    if !order.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    let mut state =
        State { order, guards, basis: Vec::new(), leads: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in gens.generators() {
        state.insert(g)?;
    }
    while let Some(Pair { i, j, .. }) = state.next_pair() {
        let s = s_polynomial(&state.basis[i], &state.basis[j], order);
        state.insert(&s)?;
    }
    let survivors = state.basis.into_iter().zip(state.active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    Ok(IdealBasis::new(reduce_basis(survivors, order)))
}

/// Minimal, monic, fully reduced form of a Groebner basis.
fn reduce_basis(basis: Vec<Polynomial>, order: &TermOrder) -> Vec<Polynomial> {
    let mut items: Vec<(Exponent, Polynomial)> = basis
        .into_iter()
        .map(|g| (order.leading_exponent(&g).expect("nonzero"), order.monic(&g)))
        .collect();
    items.sort_by(|a, b| order.compare(&a.0, &b.0));
    let mut minimal: Vec<(Exponent, Polynomial)> = Vec::new();
    for (e, g) in items {
        if !minimal.iter().any(|(m, _)| m.divides(&e)) {
            minimal.push((e, g));
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let (e, g) = &minimal[idx];
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, (_, p))| p.clone())
            .collect();
        let mut tail = g.clone();
        let lc = tail.remove_term(e).expect("leading term present");
        debug_assert!(lc.is_one());
        let reduced = normal_form(&tail, &others, order);
        let mut h = reduced;
        h.add_term(e.clone(), Rational::one());
        out.push(h);
    }
    out
}

/// Binomial generators of the kernel of `t_i -> x^{m_i}`, as polynomials in
/// `Q[t1..ts]`.
pub fn toric_relations(monomials: &[Exponent]) -> Result<Vec<Polynomial>> {
    toric_relations_with_guards(monomials, &GroebnerGuards::default())
}

pub fn toric_relations_with_guards(monomials: &[Exponent], guards: &GroebnerGuards) -> Result<Vec<Polynomial>> {
    let s = monomials.len();
    let aux = Ring::auxiliary(s);
    if s == 0 {
        return Ok(Vec::new());
    }
    let n = monomials[0].len();
    if let Some(m) = monomials.iter().find(|m| m.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.len() });
    }
    // linearly independent exponents admit no relation
    let as_rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| m.entries().iter().map(|&v| Rational::from_integer(v.into())).collect())
        .collect();
    if rank(&as_rows) == s {
        return Ok(Vec::new());
    }

    let names = (0..n).map(|i| format!("_x{i}")).chain((1..=s).map(|i| format!("t{i}")));
    let ext = Ring::new(names)?;
    let gens: Vec<Polynomial> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let mut t = vec![0; n + s];
            t[n + i] = 1;
            let mut x = m.entries().to_vec();
            x.extend(std::iter::repeat_n(0, s));
            Polynomial::from_terms(
                &ext,
                [(Exponent::new(t), Rational::one()), (Exponent::new(x), -Rational::one())],
            )
        })
        .collect();
    let order = elimination_order(n, s)?;
    let gb = buchberger(&IdealBasis::new(gens), &order, guards)?;

    let mut out = Vec::new();
    for g in gb.generators() {
        if g.support().any(|e| e.entries()[..n].iter().any(|&v| v > 0)) {
            continue;
        }
        let projected = Polynomial::from_terms(
            &aux,
            g.terms().map(|(e, c)| (Exponent::new(e.entries()[n..].to_vec()), c.clone())),
        );
        check_relation(&projected, monomials)?;
        out.push(projected);
    }
    Ok(out)
}

/// Block order: x-block by degree then lex, then the t-block by degrevlex.
fn elimination_order(n: usize, s: usize) -> Result<TermOrder> {
    let width = n + s;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut row = vec![0; width];
    row[..n].iter_mut().for_each(|v| *v = 1);
    rows.push(row);
    for i in 0..n - 1 {
        let mut r = vec![0; width];
        r[i] = 1;
        rows.push(r);
    }
    let mut row = vec![0; width];
    row[n..].iter_mut().for_each(|v| *v = 1);
    rows.push(row);
    for i in (1..s).rev() {
        let mut r = vec![0; width];
        r[n + i] = -1;
        rows.push(r);
    }
    TermOrder::from_int_rows(&rows)
}

/// Every term's image monomial must coincide and the coefficients cancel.
fn check_relation(rel: &Polynomial, monomials: &[Exponent]) -> Result<()> {
    let n = monomials[0].len();
    let mut image: std::collections::BTreeMap<Exponent, Rational> = Default::default();
    for (e, c) in rel.terms() {
        let mut x = Exponent::zero(n);
        for (k, m) in e.entries().iter().zip(monomials) {
            x = x.add(&m.scale(*k));
        }
        *image.entry(x).or_insert_with(Rational::zero) += c;
    }
    if image.values().all(Zero::is_zero) {
        Ok(())
    } else {
        Err(Error::Internal(format!("toric relation {rel} does not vanish")))
    }
}

/// Substitutes `t_i -> x^{m_i}` into `rel`; zero for a genuine relation.
pub fn substitute_monomials(rel: &Polynomial, monomials: &[Exponent], ring: &Arc<Ring>) -> Polynomial {
    Polynomial::from_terms(
        ring,
        rel.terms().map(|(e, c)| {
            let x = e
                .entries()
                .iter()
                .zip(monomials)
                .fold(Exponent::zero(ring.nvars()), |acc, (k, m)| acc.add(&m.scale(*k)));
            (x, c.clone())
        }),
    )
}

/// Leading-term order used to present relations (largest term first).
pub fn sort_by_lead(polys: &mut [Polynomial], order: &TermOrder) {
    polys.sort_by(|a, b| match (order.lead(a), order.lead(b)) {
        (Some((ea, _)), Some((eb, _))) => order.compare(eb, ea),
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (None, None) => Ordering::Equal,
    });
}
