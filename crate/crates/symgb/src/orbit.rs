//! Enumeration of the distinct images of monomials and polynomials under the
//! symmetric group on `1..=n`.
//!
//! An image is determined by where the finitely many used variables go, so
//! the search walks injective assignments of the used-variable set into
//! `1..=n` instead of all `n!` permutations.  Every generated assignment is
//! charged against a caller-supplied budget; exceeding it is a hard error so
//! runaway searches fail loudly instead of spinning.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::Result;
use std::collections::BTreeSet;

/// Default work cap: candidate assignments examined per operation.
pub const DEFAULT_WORK_CAP: u64 = 1_000_000;

/// Distinct images `sigma(f)` for `sigma` in the symmetric group on
/// `1..=n`, each with one permutation producing it, in a deterministic
/// order.  All variables of `f` must lie within `1..=n`.
pub fn polynomial_orbit(
    f: &Polynomial,
    n: u32,
    budget: &mut u64,
) -> Result<Vec<(Permutation, Polynomial)>> {
    let mut vars: Vec<u32> = BTreeSet::from_iter(f.terms().flat_map(|t| t.monomial.support()))
        .into_iter()
        .collect();
    if let Some(&top) = vars.last() {
        if top > n {
            return Err(Error::IndexAboveOrder { index: top, order: n });
        }
    }
    vars.sort_unstable();
    let mut out: Vec<(Permutation, Polynomial)> = Vec::new();
    let mut seen: BTreeSet<Polynomial> = BTreeSet::new();
    for_each_assignment(&vars, n, budget, &mut |images| {
        let sigma = Permutation::from_partial(
            vars.iter().copied().zip(images.iter().copied()),
            n,
        )
        .expect("injective assignment completes");
        let image = f.apply_permutation(&sigma);
        if seen.insert(image.clone()) {
            out.push((sigma, image));
        }
        Ok(())
    })?;
    Ok(out)
}

/// Distinct images of a monomial under the symmetric group on `1..=n`.
pub fn monomial_orbit(m: &Monomial, n: u32, budget: &mut u64) -> Result<Vec<Monomial>> {
    if m.max_index() > n {
        return Err(Error::IndexAboveOrder {
            index: m.max_index(),
            order: n,
        });
    }
    let vars: Vec<u32> = m.support().collect();
    let mut out: Vec<Monomial> = Vec::new();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    for_each_assignment(&vars, n, budget, &mut |images| {
        let sigma = Permutation::from_partial(
            vars.iter().copied().zip(images.iter().copied()),
            n,
        )
        .expect("injective assignment completes");
        let image = sigma.apply_monomial(m);
        if seen.insert(image.clone()) {
            out.push(image);
        }
        Ok(())
    })?;
    Ok(out)
}

/// Walks every injective assignment of `vars` into `1..=n`, ascending in
/// each coordinate, charging one unit of budget per assignment.
fn for_each_assignment(
    vars: &[u32],
    n: u32,
    budget: &mut u64,
    visit: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    fn recurse(
        k: usize,
        vars: &[u32],
        n: u32,
        taken: &mut Vec<bool>,
        images: &mut Vec<u32>,
        budget: &mut u64,
        visit: &mut dyn FnMut(&[u32]) -> Result<()>,
    ) -> Result<()> {
        if k == vars.len() {
            if *budget == 0 {
                return Err(Error::OrbitSearchExceeded {
                    cap: DEFAULT_WORK_CAP,
                });
            }
            *budget -= 1;
            return visit(images);
        }
        for j in 1..=n {
            if !taken[j as usize] {
                taken[j as usize] = true;
                images.push(j);
                let r = recurse(k + 1, vars, n, taken, images, budget, visit);
                images.pop();
                taken[j as usize] = false;
                r?;
            }
        }
        Ok(())
    }
    let mut taken = vec![false; n as usize + 1];
    let mut images = Vec::with_capacity(vars.len());
    recurse(0, vars, n, &mut taken, &mut images, budget, visit)
}
