//! Division with respect to a set of reducers, in two flavors: against the
//! infinite orbit of a basis through cancellation-order witnesses, and
//! against the finite orbit of a basis inside a fixed truncation.
//!
//! Every reduction returns a certificate `input = remainder + sum of
//! multiplier * sigma(generator)` that can be replayed independently.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::orbit;
use crate::perm::Permutation;
use crate::poly::{Polynomial, Term};
use crate::scalar::Scalar;
use crate::symorder::sym_compare;
use crate::Result;

/// One recorded step: `multiplier * sigma(generator)` was subtracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub multiplier: Polynomial,
    pub permutation: Permutation,
    pub generator: Polynomial,
}

impl Summand {
    /// The polynomial this summand contributes.
    pub fn value(&self) -> Result<Polynomial> {
        self.multiplier
            .mul(&self.generator.apply_permutation(&self.permutation))
    }
}

/// Outcome of a reduction: `input = remainder + sum(summands)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub remainder: Polynomial,
    pub summands: Vec<Summand>,
}

/// One elimination step `f - (lt(f) / sigma(lt(g))) * sigma(g)`.
///
/// The designated term of the subtrahend equals `lt(f)` exactly, so the
/// leading term cancels; whether nothing larger sneaks in depends on `sigma`
/// being a genuine cancellation witness, which callers ensure.
pub fn sg_step(f: &Polynomial, g: &Polynomial, sigma: &Permutation) -> Result<Polynomial> {
    let f_lt = f.leading_term()?;
    if g.is_zero() {
        return Err(Error::ZeroElement("reducer"));
    }
    let g_lt = g.leading_term().expect("nonzero");
    let shifted_lm = sigma.apply_monomial(&g_lt.monomial);
    if !shifted_lm.divides(&f_lt.monomial) {
        return Err(Error::BadSgStep(format!(
            "{} does not divide {}",
            shifted_lm, f_lt.monomial
        )));
    }
    let factor = Term::new(
        f_lt.coeff.div(&g_lt.coeff)?,
        f_lt.monomial.quotient(&shifted_lm)?,
    );
    f.sub(&g.apply_permutation(sigma).mul_term(&factor)?)
}

/// Reduces `f` against `reducers`, scanned in order; the first reducer whose
/// leading monomial sits below the current leading monomial in the
/// cancellation order fires an [`sg_step`] with the comparison witness.
/// Irreducible leading terms migrate to the remainder.
pub fn reduce_full(f: &Polynomial, reducers: &[Polynomial]) -> Result<Certificate> {
    let lms: Vec<&Monomial> = reducers
        .iter()
        .map(|g| {
            g.leading_monomial()
                .map_err(|_| Error::ZeroElement("reducer"))
        })
        .collect::<Result<_>>()?;
    let mut p = f.clone();
    let mut remainder_terms: Vec<Term> = Vec::new();
    let mut summands: Vec<Summand> = Vec::new();
    while !p.is_zero() {
        let p_lt = p.leading_term().expect("nonzero").clone();
        let hit = reducers
            .iter()
            .zip(&lms)
            .find_map(|(g, lm)| sym_compare(lm, &p_lt.monomial).map(|wit| (g, wit)));
        match hit {
            Some((g, wit)) => {
                let shifted_lm = wit.sigma.apply_monomial(g.leading_monomial().unwrap());
                let multiplier = Polynomial::from_terms([Term::new(
                    p_lt.coeff.div(g.leading_coeff().unwrap())?,
                    p_lt.monomial.quotient(&shifted_lm)?,
                )])?;
                summands.push(Summand {
                    multiplier,
                    permutation: wit.sigma.clone(),
                    generator: g.clone(),
                });
                p = sg_step(&p, g, &wit.sigma)?;
                if let Ok(new_lm) = p.leading_monomial() {
                    if *new_lm >= p_lt.monomial {
                        return Err(Error::Internal(format!(
                            "sg step failed to shrink the leading monomial \
                             ({} to {new_lm})",
                            p_lt.monomial
                        )));
                    }
                }
            }
            None => {
                let (lt, tail) = p.split_leading().expect("nonzero");
                remainder_terms.push(lt);
                p = tail;
            }
        }
    }
    Ok(Certificate {
        remainder: Polynomial::from_terms(remainder_terms)?,
        summands,
    })
}

/// A reducer drawn from the orbit of a basis element inside a truncation.
struct PoolEntry {
    /// Index into the originating basis.
    src: usize,
    perm: Permutation,
    /// `perm(basis[src])` scaled monic.
    monic: Polynomial,
    /// Leading coefficient of `perm(basis[src])` before scaling.
    scale: Scalar,
}

/// The distinct images of a basis under the symmetric group on `1..=n`,
/// normalized monic, in deterministic order.  Shared by the completion loop
/// and the stand-alone orbit reduction.
pub(crate) struct OrbitPool {
    n: u32,
    entries: Vec<PoolEntry>,
    budget: u64,
}

impl OrbitPool {
    pub(crate) fn build(basis: &[Polynomial], n: u32, budget: u64) -> Result<OrbitPool> {
        let mut pool = OrbitPool {
            n,
            entries: Vec::new(),
            budget,
        };
        for (k, g) in basis.iter().enumerate() {
            pool.extend(k, g)?;
        }
        Ok(pool)
    }

    /// Adds the orbit of `basis[src] = g`; returns the range of new entries.
    pub(crate) fn extend(&mut self, src: usize, g: &Polynomial) -> Result<std::ops::Range<usize>> {
        if g.is_zero() {
            return Err(Error::ZeroElement("reducer"));
        }
        let start = self.entries.len();
        for (perm, image) in orbit::polynomial_orbit(g, self.n, &mut self.budget)? {
            let scale = image.leading_coeff().expect("nonzero").clone();
            let monic = image.make_monic().expect("nonzero");
            if self
                .entries
                .iter()
                .any(|e| e.monic == monic)
            {
                continue;
            }
            self.entries.push(PoolEntry {
                src,
                perm,
                monic,
                scale,
            });
        }
        Ok(start..self.entries.len())
    }

    pub(crate) fn len(&self) -> usize {
        self.entries.len()
    }

    pub(crate) fn monic_at(&self, k: usize) -> &Polynomial {
        &self.entries[k].monic
    }

    /// Classical division of `p` by the pool, using plain leading-monomial
    /// divisibility; summands are expressed against the original basis.
    pub(crate) fn reduce(&self, p: &Polynomial, basis: &[Polynomial]) -> Result<Certificate> {
        let mut p = p.clone();
        let mut remainder_terms: Vec<Term> = Vec::new();
        let mut summands: Vec<Summand> = Vec::new();
        while !p.is_zero() {
            let p_lt = p.leading_term().expect("nonzero").clone();
            let hit = self
                .entries
                .iter()
                .find(|e| e.monic.leading_monomial().unwrap().divides(&p_lt.monomial));
            match hit {
                Some(entry) => {
                    let u = p_lt
                        .monomial
                        .quotient(entry.monic.leading_monomial().unwrap())?;
                    p = p.sub(&entry.monic.mul_term(&Term::new(p_lt.coeff.clone(), u.clone()))?)?;
                    summands.push(Summand {
                        multiplier: Polynomial::from_terms([Term::new(
                            p_lt.coeff.div(&entry.scale)?,
                            u,
                        )])?,
                        permutation: entry.perm.clone(),
                        generator: basis[entry.src].clone(),
                    });
                }
                None => {
                    let (lt, tail) = p.split_leading().expect("nonzero");
                    remainder_terms.push(lt);
                    p = tail;
                }
            }
        }
        Ok(Certificate {
            remainder: Polynomial::from_terms(remainder_terms)?,
            summands,
        })
    }
}

/// Reduces `p` by every image of `basis` under the symmetric group on
/// `1..=n`.  All variables in play must lie within the truncation.  The
/// orbit enumeration is capped at `work_cap` candidate assignments.
pub fn reduce_by_orbit(
    p: &Polynomial,
    basis: &[Polynomial],
    n: u32,
    work_cap: u64,
) -> Result<Certificate> {
    if p.max_index() > n {
        return Err(Error::IndexAboveOrder {
            index: p.max_index(),
            order: n,
        });
    }
    let pool = OrbitPool::build(basis, n, work_cap)?;
    pool.reduce(p, basis)
}

/// Replays a certificate: exact reconstruction of `input`, and no summand
/// reaching above `input`'s leading monomial.
pub fn certificate_check(input: &Polynomial, cert: &Certificate) -> bool {
    let mut acc = cert.remainder.clone();
    for s in &cert.summands {
        let Ok(v) = s.value() else {
            return false;
        };
        match input.leading_monomial() {
            Ok(input_lm) => {
                if let Ok(v_lm) = v.leading_monomial() {
                    if v_lm > input_lm {
                        return false;
                    }
                }
            }
            Err(_) => {
                // Zero input admits only the trivial certificate.
                if !v.is_zero() {
                    return false;
                }
            }
        }
        let Ok(next) = acc.add(&v) else {
            return false;
        };
        acc = next;
    }
    acc == *input
}
