//! The symmetric cancellation partial order on monomials.
//!
//! `v` sits below `w` when some strictly increasing relocation of `v`'s
//! variables (never moving an index down) turns `v` into a divisor of `w`.
//! Reduction steps rely on witnesses of this relation: permutations that
//! realize the relocation inside the symmetric group on `1..=max_index(w)`.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::Result;

/// Successful comparison outcome: a permutation placing `v` under `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Permutation of `1..=order` with `sigma(v) | w`.
    pub sigma: Permutation,
    /// The greedy support matching `(i, j)`: variable `i` of `v` is sent to
    /// slot `j` of `w`.  Ascending in both coordinates.
    pub match_pairs: Vec<(u32, u32)>,
    /// The group order used: the highest variable index of `w`.
    pub order: u32,
}

impl Witness {
    /// The full graph `(i, sigma(i))` for `i = 1..=order`, support matches
    /// and completion pairs alike.
    pub fn full_graph(&self) -> Vec<(u32, u32)> {
        (1..=self.order).map(|i| (i, self.sigma.apply(i))).collect()
    }
}

/// Decides whether `v` lies below `w` in the cancellation order and if so
/// returns a witness.
///
/// The scan keeps a cursor `t` and, for each variable of `v` in ascending
/// order, greedily grabs the first remaining slot of `w` (at or beyond the
/// variable's own index) with a large enough exponent.  If every support
/// variable of `v` is matched, the partial matching is completed to a
/// permutation by walking `j` from the top down and pairing each unused slot
/// with the largest unused source index.
pub fn sym_compare(v: &Monomial, w: &Monomial) -> Option<Witness> {
    let n = w.max_index();
    let wd = w.to_dense(n);
    let vd = v.to_dense(n);
    let mut t: u32 = 1;
    let mut match_pairs: Vec<(u32, u32)> = Vec::new();
    for i in 1..=n {
        let vi = vd[i as usize - 1];
        if vi != 0 {
            for j in t..=n {
                if vi <= wd[j as usize - 1] {
                    match_pairs.push((i, j));
                    t = j + 1;
                    break;
                }
            }
        }
        t = t.max(i + 1);
    }
    // Support indices of v above n can never be matched; the count check
    // covers them.
    if match_pairs.len() < v.support_size() {
        return None;
    }

    let mut target_used = vec![false; n as usize + 1];
    let mut source_used = vec![false; n as usize + 1];
    for &(i, j) in &match_pairs {
        source_used[i as usize] = true;
        target_used[j as usize] = true;
    }
    let mut free_sources: Vec<u32> = (1..=n).filter(|&i| !source_used[i as usize]).collect();
    let mut pairs = match_pairs.clone();
    for j in (1..=n).rev() {
        if !target_used[j as usize] {
            let i = free_sources.pop().expect("as many free sources as free targets");
            pairs.push((i, j));
        }
    }
    let sigma = Permutation::from_mapping(pairs).expect("completion yields a bijection");
    debug_assert!(sigma.apply_monomial(v).divides(w));
    Some(Witness {
        sigma,
        match_pairs,
        order: n,
    })
}

/// Checks that `sigma` is an upward shift for `v` — strictly increasing on
/// `v`'s support and never moving a support index down — and that the
/// relocated `v` divides `w`.
pub fn validate_witness(sigma: &Permutation, v: &Monomial, w: &Monomial) -> bool {
    let mut prev: Option<u32> = None;
    for i in v.support() {
        let image = sigma.apply(i);
        if image < i {
            return false;
        }
        if let Some(p) = prev {
            if image <= p {
                return false;
            }
        }
        prev = Some(image);
    }
    sigma.apply_monomial(v).divides(w)
}

/// Witnessed relation `shift(source) = target` by an upward shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftRelation {
    pub source: Monomial,
    pub target: Monomial,
    pub shift: Permutation,
}

/// Detects whether `target` is an upward shift of `source`: identical
/// exponent sequences along ascending support, with each support index of
/// `target` at or above its counterpart in `source`.  The returned
/// permutation maps the k-th support index of `source` onto the k-th of
/// `target` and relocates the remaining indices order-preservingly.
pub fn upward_shift_between(source: &Monomial, target: &Monomial) -> Option<ShiftRelation> {
    let s: Vec<(u32, u32)> = source.pairs().collect();
    let t: Vec<(u32, u32)> = target.pairs().collect();
    if s.len() != t.len() {
        return None;
    }
    for (&(si, se), &(ti, te)) in s.iter().zip(&t) {
        if se != te || ti < si {
            return None;
        }
    }
    let top = source.max_index().max(target.max_index());
    let pairs: Vec<(u32, u32)> = s.iter().zip(&t).map(|(&(si, _), &(ti, _))| (si, ti)).collect();
    let shift =
        Permutation::from_partial(pairs, top).expect("support map completes to a bijection");
    debug_assert_eq!(shift.apply_monomial(source), *target);
    Some(ShiftRelation {
        source: source.clone(),
        target: target.clone(),
        shift,
    })
}

/// Reference decision procedure: enumerates every strictly increasing
/// placement of `v`'s support into `1..=max_index(w)` that never moves an
/// index down, and checks exponent fit.  Refuses to run when `w` involves an
/// index above 12 — the enumeration is for auditing small cases only.
pub fn brute_force_sym_compare(v: &Monomial, w: &Monomial) -> Result<bool> {
    const LIMIT: u32 = 12;
    let n = w.max_index();
    if n > LIMIT {
        return Err(Error::OracleScale {
            max_index: n,
            limit: LIMIT,
        });
    }
    let wd = w.to_dense(n);
    let supp: Vec<(u32, u32)> = v.pairs().collect();
    fn place(k: usize, lo: u32, supp: &[(u32, u32)], wd: &[u32], n: u32) -> bool {
        if k == supp.len() {
            return true;
        }
        let (i, e) = supp[k];
        let start = lo.max(i);
        for j in start..=n {
            if e <= wd[j as usize - 1] && place(k + 1, j + 1, supp, wd, n) {
                return true;
            }
        }
        false
    }
    Ok(place(0, 1, &supp, &wd, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn dense(exps: &[u32]) -> Monomial {
        Monomial::from_dense(exps)
    }

    #[test]
    fn worked_failure_trace() {
        // v = (1,2,0,2), w = (0,3,4,1): only two of three support indices
        // match, so the comparison fails.
        let v = dense(&[1, 2, 0, 2]);
        let w = dense(&[0, 3, 4, 1]);
        assert!(sym_compare(&v, &w).is_none());
        assert!(!brute_force_sym_compare(&v, &w).unwrap());
    }

    #[test]
    fn worked_success_trace() {
        // v = (3,2,0,0,5), w = (5,1,4,6,9): matched and completed to (23).
        let v = dense(&[3, 2, 0, 0, 5]);
        let w = dense(&[5, 1, 4, 6, 9]);
        let wit = sym_compare(&v, &w).expect("comparable");
        assert_eq!(wit.order, 5);
        assert_eq!(wit.match_pairs, vec![(1, 1), (2, 3), (5, 5)]);
        assert_eq!(
            wit.full_graph(),
            vec![(1, 1), (2, 3), (3, 2), (4, 4), (5, 5)]
        );
        assert_eq!(wit.sigma, Permutation::from_cycles("(23)").unwrap());
        assert!(validate_witness(&wit.sigma, &v, &w));
        assert!(brute_force_sym_compare(&v, &w).unwrap());
    }

    #[test]
    fn ascending_chain_examples() {
        // x1^3 under x1^2*x2^3 via (12).
        let wit = sym_compare(&m(&[(1, 3)]), &m(&[(1, 2), (2, 3)])).expect("comparable");
        assert_eq!(wit.sigma, Permutation::from_cycles("(12)").unwrap());

        // x1^2*x2^3 under x1*x2^2*x3^3 with support matches (1,2), (2,3).
        let wit = sym_compare(&m(&[(1, 2), (2, 3)]), &m(&[(1, 1), (2, 2), (3, 3)]))
            .expect("comparable");
        assert_eq!(wit.match_pairs, vec![(1, 2), (2, 3)]);
        assert_eq!(wit.sigma, Permutation::from_cycles("(123)").unwrap());
    }

    #[test]
    fn trivial_monomial_cases() {
        // 1 is below everything, with the identity as witness.
        let w = m(&[(2, 2), (4, 1)]);
        let wit = sym_compare(&Monomial::one(), &w).expect("1 is minimal");
        assert!(wit.sigma.is_identity() || validate_witness(&wit.sigma, &Monomial::one(), &w));
        assert!(wit.match_pairs.is_empty());

        let wit = sym_compare(&Monomial::one(), &Monomial::one()).expect("1 vs 1");
        assert!(wit.sigma.is_identity());
        assert_eq!(wit.order, 0);

        // Nothing besides 1 sits below 1.
        assert!(sym_compare(&m(&[(1, 1)]), &Monomial::one()).is_none());
        // Support beyond the target's top index can never match.
        assert!(sym_compare(&m(&[(2, 1)]), &m(&[(1, 3)])).is_none());
    }

    #[test]
    fn reflexivity_spot_checks() {
        for mm in [
            m(&[(1, 1)]),
            m(&[(2, 3)]),
            m(&[(1, 2), (3, 1)]),
            m(&[(2, 1), (4, 2), (5, 1)]),
        ] {
            let wit = sym_compare(&mm, &mm).expect("reflexive");
            assert!(validate_witness(&wit.sigma, &mm, &mm));
        }
    }

    #[test]
    fn plain_divisibility_is_accepted() {
        let u = m(&[(1, 1), (3, 2)]);
        let w = m(&[(1, 2), (2, 1), (3, 2)]);
        assert!(u.divides(&w));
        let wit = sym_compare(&u, &w).expect("divisor is below");
        assert!(validate_witness(&wit.sigma, &u, &w));
    }

    #[test]
    fn witness_validation() {
        // The upward-shift criterion only constrains the support: a
        // permutation scrambling other points still validates.
        let sigma = Permutation::from_cycles("(14)(23)").unwrap();
        assert!(validate_witness(&sigma, &m(&[(2, 1)]), &m(&[(3, 1)])));

        // Moves the support index down.
        let down = Permutation::from_cycles("(12)").unwrap();
        assert!(!validate_witness(&down, &m(&[(2, 1)]), &m(&[(3, 1)])));

        // Not increasing along the support.
        let cross = Permutation::from_mapping([(1, 3), (3, 1)]).unwrap();
        assert!(!validate_witness(&cross, &m(&[(1, 1), (2, 1)]), &m(&[(2, 1), (3, 1)])));

        // Relocated monomial fails to divide.
        assert!(!validate_witness(
            &Permutation::identity(),
            &m(&[(1, 2)]),
            &m(&[(1, 1)])
        ));
    }

    #[test]
    fn upward_shift_detection() {
        let g = m(&[(2, 3), (3, 1), (5, 2)]);
        let h = m(&[(3, 3), (4, 1), (6, 2)]);
        let rel = upward_shift_between(&g, &h).expect("shift exists");
        assert_eq!(rel.shift.apply_monomial(&g), h);
        assert!(validate_witness(&rel.shift, &g, &h));

        // Downward moves are rejected.
        assert!(upward_shift_between(&m(&[(2, 2)]), &m(&[(1, 2)])).is_none());
        // Exponent sequences must agree exactly.
        assert!(upward_shift_between(&m(&[(1, 1)]), &m(&[(1, 2)])).is_none());
        assert!(upward_shift_between(&m(&[(1, 1), (2, 2)]), &m(&[(2, 2), (3, 1)])).is_none());
        // Equal monomials shift by the identity.
        let rel = upward_shift_between(&g, &g).expect("identity shift");
        assert!(rel.shift.is_identity());
    }

    #[test]
    fn brute_force_guard() {
        let w = m(&[(13, 1)]);
        assert!(matches!(
            brute_force_sym_compare(&Monomial::one(), &w),
            Err(Error::OracleScale { max_index: 13, .. })
        ));
        assert!(brute_force_sym_compare(&Monomial::one(), &m(&[(12, 1)])).unwrap());
    }

    #[test]
    fn agreement_on_a_small_grid() {
        // All monomials with max index <= 3 and exponents <= 2.
        let mut all = Vec::new();
        for a in 0..=2u32 {
            for b in 0..=2u32 {
                for c in 0..=2u32 {
                    all.push(dense(&[a, b, c]));
                }
            }
        }
        for v in &all {
            for w in &all {
                let fast = sym_compare(v, w);
                let slow = brute_force_sym_compare(v, w).unwrap();
                assert_eq!(fast.is_some(), slow, "disagree on {v} vs {w}");
                if let Some(wit) = fast {
                    assert!(validate_witness(&wit.sigma, v, w), "bad witness for {v} vs {w}");
                }
            }
        }
    }
}
