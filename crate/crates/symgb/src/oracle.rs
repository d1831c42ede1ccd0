//! Classical Buchberger over a fixed finite variable range, kept deliberately
//! naive and fully separate from the main engine's reduction machinery so it
//! can serve as an independent cross-check.

use crate::engine::{BasisSet, Minimality};
use crate::error::Error;
use crate::orbit;
use crate::poly::{Polynomial, Term};
use crate::Result;
use std::collections::VecDeque;

/// An ideal of the polynomial ring on `x1..x_var_bound`, given by literal
/// generators.  Symmetrized ideals are expressed by expanding the orbit into
/// the generator list first (see [`TruncatedIdeal::symmetrized`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedIdeal {
    pub generators: Vec<Polynomial>,
    pub var_bound: u32,
}

impl TruncatedIdeal {
    pub fn new(generators: Vec<Polynomial>, var_bound: u32) -> Result<TruncatedIdeal> {
        for g in &generators {
            if g.max_index() > var_bound {
                return Err(Error::IndexAboveOrder {
                    index: g.max_index(),
                    order: var_bound,
                });
            }
        }
        Ok(TruncatedIdeal {
            generators,
            var_bound,
        })
    }

    /// The ideal generated by every image of `generators` under permutations
    /// of `1..=var_bound`.
    pub fn symmetrized(generators: &[Polynomial], var_bound: u32) -> Result<TruncatedIdeal> {
        let mut budget = orbit::DEFAULT_WORK_CAP;
        let mut expanded: Vec<Polynomial> = Vec::new();
        for g in generators {
            for (_, image) in orbit::polynomial_orbit(g, var_bound, &mut budget)? {
                if !expanded.contains(&image) {
                    expanded.push(image);
                }
            }
        }
        TruncatedIdeal::new(expanded, var_bound)
    }
}

/// Plain multivariate division: repeatedly clear the leading term by the
/// first generator whose leading monomial divides it, or move it to the
/// remainder.  No permutations anywhere.
fn classical_remainder(f: &Polynomial, gs: &[Polynomial]) -> Result<Polynomial> {
    let mut p = f.clone();
    let mut remainder = Polynomial::zero();
    'outer: while !p.is_zero() {
        let lt = p.leading_term()?.clone();
        for g in gs {
            let lmg = g.leading_monomial()?;
            if lmg.divides(&lt.monomial) {
                let u = Term::new(
                    lt.coeff.div(g.leading_coeff()?)?,
                    lt.monomial.quotient(lmg)?,
                );
                p = p.sub(&g.mul_term(&u)?)?;
                continue 'outer;
            }
        }
        let (head, rest) = p.split_leading()?;
        remainder = remainder.add(&Polynomial::from_terms([head])?)?;
        p = rest;
    }
    Ok(remainder)
}

fn classical_s_polynomial(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let (lma, lmb) = (a.leading_monomial()?, b.leading_monomial()?);
    let lcm = lma.lcm(lmb);
    let ua = Term::new(a.leading_coeff()?.inverse()?, lcm.quotient(lma)?);
    let ub = Term::new(b.leading_coeff()?.inverse()?, lcm.quotient(lmb)?);
    a.mul_term(&ua)?.sub(&b.mul_term(&ub)?)
}

/// Reduced Groebner basis of `I` by textbook critical-pair completion, with
/// no pair pruning at all.  Deterministic.
pub fn classical_gb(ideal: &TruncatedIdeal) -> Result<BasisSet> {
    if ideal.generators.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut working: Vec<Polynomial> = Vec::new();
    for g in &ideal.generators {
        if g.is_zero() {
            return Err(Error::ZeroElement("generator"));
        }
        if g.max_index() > ideal.var_bound {
            return Err(Error::IndexAboveOrder {
                index: g.max_index(),
                order: ideal.var_bound,
            });
        }
        let monic = g.make_monic()?;
        if !working.contains(&monic) {
            working.push(monic);
        }
    }

    if !working.iter().any(|g| g.is_constant()) {
        let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
        for j in 0..working.len() {
            for i in 0..j {
                pairs.push_back((i, j));
            }
        }
        while let Some((i, j)) = pairs.pop_front() {
            let s = classical_s_polynomial(&working[i], &working[j])?;
            if s.is_zero() {
                continue;
            }
            let r = classical_remainder(&s, &working)?;
            if r.is_zero() {
                continue;
            }
            let r = r.make_monic()?;
            if r.is_constant() {
                working = vec![r];
                break;
            }
            let k = working.len();
            working.push(r);
            for i in 0..k {
                pairs.push_back((i, k));
            }
        }
    } else {
        let field = working[0].field().expect("constant generator has a field");
        working = vec![Polynomial::constant(field.one())];
    }

    // Minimalize: keep only generators whose leading monomial no retained
    // generator's leading monomial divides.
    let mut order: Vec<usize> = (0..working.len()).collect();
    order.sort_by(|&a, &b| {
        working[a]
            .leading_monomial()
            .unwrap()
            .cmp(working[b].leading_monomial().unwrap())
    });
    let mut retained: Vec<Polynomial> = Vec::new();
    for idx in order {
        let lm = working[idx].leading_monomial()?;
        if !retained
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            retained.push(working[idx].clone());
        }
    }

    // Tail-reduce each element against the others until nothing changes.
    'outer: loop {
        for i in 0..retained.len() {
            let others: Vec<Polynomial> = retained
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = classical_remainder(&retained[i], &others)?;
            if r.is_zero() {
                retained.remove(i);
                continue 'outer;
            }
            let r = r.make_monic()?;
            if r != retained[i] {
                retained[i] = r;
                continue 'outer;
            }
        }
        break;
    }

    let mut out = BasisSet::new(retained, ideal.var_bound)?;
    out.groebner = true;
    out.minimality = Minimality::Unknown;
    Ok(out)
}

/// True iff the classical normal form of `f` against a reduced basis of `I`
/// is zero.
pub fn classical_membership(f: &Polynomial, ideal: &TruncatedIdeal) -> Result<bool> {
    if f.max_index() > ideal.var_bound {
        return Err(Error::IndexAboveOrder {
            index: f.max_index(),
            order: ideal.var_bound,
        });
    }
    if f.is_zero() {
        return Ok(true);
    }
    let basis = classical_gb(ideal)?;
    Ok(classical_remainder(f, &basis.elements)?.is_zero())
}
