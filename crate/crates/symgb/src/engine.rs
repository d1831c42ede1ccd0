//! The basis engine: completion at a fixed truncation order, the escalation
//! loop that raises the order until the basis stops changing, interreduction,
//! the closed-form construction for monomial generators, and membership
//! testing against a finished basis.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::orbit;
use crate::poly::Polynomial;
use crate::reduce::{reduce_full, Certificate, OrbitPool};
use crate::scalar::FieldKind;
use crate::symorder::{sym_compare, upward_shift_between};
use crate::Result;
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;

/// How strong a minimality claim travels with a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Minimality {
    /// No claim.
    Unknown,
    /// Pairwise incomparable leading monomials.
    Minimal,
    /// Best-effort filtering only; the closed-form minimality argument
    /// needs generators of a single degree.
    Heuristic,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Minimality::Unknown => write!(f, "unknown"),
            Minimality::Minimal => write!(f, "minimal"),
            Minimality::Heuristic => write!(f, "heuristic"),
        }
    }
}

/// A finite set of polynomials with provenance flags.  Elements are monic,
/// nonzero, deduplicated, and deterministically ordered: decreasing leading
/// monomial, then term count, then the full term sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    pub elements: Vec<Polynomial>,
    /// The truncation order the elements were produced at.
    pub order_used: u32,
    /// Whether this set was certified as a Groebner basis of the symmetric
    /// ideal it generates.
    pub groebner: bool,
    pub minimality: Minimality,
}

impl BasisSet {
    /// Normalizes: monic, dropped zeros rejected, duplicates removed,
    /// canonical order.
    pub fn new(elements: Vec<Polynomial>, order_used: u32) -> Result<BasisSet> {
        let mut normalized: Vec<Polynomial> = Vec::with_capacity(elements.len());
        for f in elements {
            if f.is_zero() {
                return Err(Error::ZeroElement("basis element"));
            }
            let monic = f.make_monic()?;
            if !normalized.contains(&monic) {
                normalized.push(monic);
            }
        }
        normalized.sort_by(basis_order);
        Ok(BasisSet {
            elements: normalized,
            order_used,
            groebner: false,
            minimality: Minimality::Unknown,
        })
    }

    pub fn field(&self) -> Option<FieldKind> {
        self.elements.first().and_then(|f| f.field())
    }

    pub fn max_index(&self) -> u32 {
        self.elements.iter().map(|f| f.max_index()).max().unwrap_or(0)
    }
}

fn basis_order(a: &Polynomial, b: &Polynomial) -> Ordering {
    let alm = a.leading_monomial().expect("basis elements are nonzero");
    let blm = b.leading_monomial().expect("basis elements are nonzero");
    blm.cmp(alm)
        .then_with(|| a.num_terms().cmp(&b.num_terms()))
        .then_with(|| a.cmp(b))
}

/// Knobs for the basis computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbConfig {
    pub field: FieldKind,
    /// First truncation order to try; defaults to the highest variable
    /// index among the generators, and at least 2.
    pub start_order: Option<u32>,
    /// Hard stop for the escalation loop.
    pub max_order: u32,
    /// Extra consecutive stable orders demanded beyond the first.
    pub confirm_iterations: u32,
    /// Skip S-pairs with coprime leading monomials.
    pub pair_pruning: bool,
    /// Cap on orbit-search work per operation, in candidate assignments.
    pub work_cap: u64,
}

impl GbConfig {
    pub fn new(field: FieldKind) -> Self {
        GbConfig {
            field,
            start_order: None,
            max_order: 20,
            confirm_iterations: 0,
            pair_pruning: true,
            work_cap: orbit::DEFAULT_WORK_CAP,
        }
    }
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig::new(FieldKind::Rational)
    }
}

/// What a full run did and produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbReport {
    pub basis: BasisSet,
    pub orders_visited: Vec<u32>,
    /// Per order: S-pairs examined (including pruned ones).
    pub pair_counts: Vec<(u32, u64)>,
    /// Per order: S-polynomial reductions actually performed.
    pub reduction_counts: Vec<(u32, u64)>,
    pub stabilized: bool,
}

impl fmt::Display for GbReport {
    /// Structured text: a `#`-commented header followed by the basis, one
    /// polynomial per line, in corpus syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# stabilized: {}", self.stabilized)?;
        let orders: Vec<String> = self.orders_visited.iter().map(|o| o.to_string()).collect();
        writeln!(f, "# orders-visited: {}", orders.join(" "))?;
        for (k, &(order, pairs)) in self.pair_counts.iter().enumerate() {
            let reductions = self
                .reduction_counts
                .get(k)
                .map(|&(_, r)| r)
                .unwrap_or(0);
            writeln!(f, "# order {order}: pairs={pairs} reductions={reductions}")?;
        }
        writeln!(f, "# order-used: {}", self.basis.order_used)?;
        writeln!(f, "# groebner: {}", self.basis.groebner)?;
        writeln!(f, "# minimality: {}", self.basis.minimality)?;
        writeln!(f, "# basis-size: {}", self.basis.elements.len())?;
        for g in &self.basis.elements {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

struct TruncStats {
    pairs: u64,
    reductions: u64,
}

fn validate_generators(
    generators: &[Polynomial],
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    if generators.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut cleaned: Vec<Polynomial> = Vec::with_capacity(generators.len());
    for f in generators {
        if f.is_zero() {
            return Err(Error::ZeroElement("generator"));
        }
        if let Some(k) = f.field() {
            if k != cfg.field {
                return Err(Error::DomainMismatch(format!("{k} vs {}", cfg.field)));
            }
        }
        let monic = f.make_monic()?;
        if !cleaned.contains(&monic) {
            cleaned.push(monic);
        }
    }
    Ok(cleaned)
}

/// Completes `generators` to a basis of the ideal generated by all images
/// of the generators under the symmetric group on `1..=n`, inside the
/// polynomial ring on `x1..xn`:  S-polynomials of all pairs of orbit images
/// are reduced against the orbit of the working basis until closure, then
/// the result is interreduced.
pub fn truncated_gb(generators: &[Polynomial], n: u32, cfg: &GbConfig) -> Result<BasisSet> {
    truncated_gb_with_stats(generators, n, cfg).map(|(b, _)| b)
}

fn truncated_gb_with_stats(
    generators: &[Polynomial],
    n: u32,
    cfg: &GbConfig,
) -> Result<(BasisSet, TruncStats)> {
    let cleaned = validate_generators(generators, cfg)?;
    let mut stats = TruncStats {
        pairs: 0,
        reductions: 0,
    };
    for f in &cleaned {
        if f.max_index() > n {
            return Err(Error::IndexAboveOrder {
                index: f.max_index(),
                order: n,
            });
        }
    }
    if cleaned.iter().any(|f| f.is_constant()) {
        let unit = BasisSet::new(vec![Polynomial::constant(cfg.field.one())], n)?;
        return Ok((interreduce_minimize(unit)?, stats));
    }

    let mut basis: Vec<Polynomial> = cleaned;
    let mut pool = OrbitPool::build(&basis, n, cfg.work_cap)?;

    // Min-heap over (lcm of the pair's leading monomials, insertion seq).
    let mut queue: BinaryHeap<std::cmp::Reverse<(Monomial, u64, usize, usize)>> =
        BinaryHeap::new();
    let mut seq: u64 = 0;
    let push_pairs =
        |queue: &mut BinaryHeap<std::cmp::Reverse<(Monomial, u64, usize, usize)>>,
         pool: &OrbitPool,
         seq: &mut u64,
         range: std::ops::Range<usize>| {
            for k in range {
                for j in 0..k {
                    let lcm = pool
                        .monic_at(j)
                        .leading_monomial()
                        .unwrap()
                        .lcm(pool.monic_at(k).leading_monomial().unwrap());
                    queue.push(std::cmp::Reverse((lcm, *seq, j, k)));
                    *seq += 1;
                }
            }
        };
    push_pairs(&mut queue, &pool, &mut seq, 0..pool.len());

    while let Some(std::cmp::Reverse((_, _, a, b))) = queue.pop() {
        stats.pairs += 1;
        let (qa, qb) = (pool.monic_at(a), pool.monic_at(b));
        let (lma, lmb) = (
            qa.leading_monomial().unwrap(),
            qb.leading_monomial().unwrap(),
        );
        if cfg.pair_pruning && lma.is_coprime_with(lmb) {
            continue;
        }
        let s = s_polynomial(qa, qb)?;
        if s.is_zero() {
            continue;
        }
        stats.reductions += 1;
        let remainder = pool.reduce(&s, &basis)?.remainder;
        if remainder.is_zero() {
            continue;
        }
        let r = remainder.make_monic()?;
        if r.is_constant() {
            // The truncated ideal is the whole ring; nothing else matters.
            basis = vec![Polynomial::constant(cfg.field.one())];
            break;
        }
        basis.push(r.clone());
        let fresh = pool.extend(basis.len() - 1, &r)?;
        push_pairs(&mut queue, &pool, &mut seq, fresh);
    }

    let out = interreduce_minimize(BasisSet::new(basis, n)?)?;
    Ok((out, stats))
}

/// Classical S-polynomial of two monic polynomials.
fn s_polynomial(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let (lma, lmb) = (a.leading_monomial()?, b.leading_monomial()?);
    let lcm = lma.lcm(lmb);
    let ta = crate::poly::Term::new(
        a.leading_coeff()?.inverse()?,
        lcm.quotient(lma)?,
    );
    let tb = crate::poly::Term::new(
        b.leading_coeff()?.inverse()?,
        lcm.quotient(lmb)?,
    );
    a.mul_term(&ta)?.sub(&b.mul_term(&tb)?)
}

/// Interreduces a basis: elements reducing to zero against the rest are
/// dropped, others are replaced by their reduced forms until stable; a final
/// sweep removes any element whose leading monomial sits above another's in
/// the cancellation order.
pub fn interreduce_minimize(basis: BasisSet) -> Result<BasisSet> {
    let mut elems = BasisSet::new(basis.elements, basis.order_used)?.elements;
    'outer: loop {
        for i in 0..elems.len() {
            let others: Vec<Polynomial> = elems
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let remainder = reduce_full(&elems[i], &others)?.remainder;
            if remainder.is_zero() {
                elems.remove(i);
                continue 'outer;
            }
            let r = remainder.make_monic()?;
            if r != elems[i] {
                elems[i] = r;
                continue 'outer;
            }
        }
        break;
    }
    // Normally a no-op after the loop above; kept as a safety net so the
    // minimality flag is honest.
    let mut keep = vec![true; elems.len()];
    let mut by_descending: Vec<usize> = (0..elems.len()).collect();
    by_descending.sort_by(|&i, &j| basis_order(&elems[i], &elems[j]));
    for &i in &by_descending {
        let lm_i = elems[i].leading_monomial()?.clone();
        let dominated = (0..elems.len()).any(|j| {
            j != i
                && keep[j]
                && sym_compare(elems[j].leading_monomial().unwrap(), &lm_i).is_some()
        });
        if dominated {
            keep[i] = false;
        }
    }
    let kept: Vec<Polynomial> = elems
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(f, _)| f)
        .collect();
    let mut out = BasisSet::new(kept, basis.order_used)?;
    out.groebner = basis.groebner;
    out.minimality = Minimality::Minimal;
    Ok(out)
}

/// Raises the truncation order until completion adds nothing new: at each
/// order `i` the basis of the previous round is completed, and stability
/// means every element of the result reduces to zero against the orbit of
/// the previous basis.  What gets returned is the orbit of the stable basis
/// at the stable order, interreduced — the orbit is the set the stability
/// test certifies, and keeping its surviving members is what makes plain
/// reduction against the returned elements complete (a permuted image of a
/// basis element is generally not reachable from the element's own leading
/// monomial, which can only shift upward).  Stability is only trusted at an
/// order strictly above the working basis's top index — at the basis's own
/// order the test is vacuous, since completion had no fresh variables to
/// shift into.  `max_order` bounds the loop; on exhaustion the error
/// carries the last computed basis.
pub fn symmetric_gb(generators: &[Polynomial], cfg: &GbConfig) -> Result<GbReport> {
    let cleaned = validate_generators(generators, cfg)?;
    if cleaned.iter().any(|f| f.is_constant()) {
        let mut unit = BasisSet::new(
            vec![Polynomial::constant(cfg.field.one())],
            cleaned.iter().map(|f| f.max_index()).max().unwrap_or(0),
        )?;
        unit.groebner = true;
        unit.minimality = Minimality::Minimal;
        return Ok(GbReport {
            basis: unit,
            orders_visited: Vec::new(),
            pair_counts: Vec::new(),
            reduction_counts: Vec::new(),
            stabilized: true,
        });
    }

    let start = cfg.start_order.unwrap_or_else(|| {
        cleaned
            .iter()
            .map(|f| f.max_index())
            .max()
            .unwrap_or(0)
            .max(2)
    });
    let mut current: Vec<Polynomial> = cleaned;
    let mut orders_visited: Vec<u32> = Vec::new();
    let mut pair_counts: Vec<(u32, u64)> = Vec::new();
    let mut reduction_counts: Vec<(u32, u64)> = Vec::new();
    let mut confirmed: u32 = 0;
    let mut i = start;
    while i <= cfg.max_order {
        orders_visited.push(i);
        let (fprime, stats) = truncated_gb_with_stats(&current, i, cfg)?;
        pair_counts.push((i, stats.pairs));
        reduction_counts.push((i, stats.reductions));
        let pool = OrbitPool::build(&current, i, cfg.work_cap)?;
        let mut stable = true;
        for b in &fprime.elements {
            if !pool.reduce(b, &current)?.remainder.is_zero() {
                stable = false;
                break;
            }
        }
        // The test only probes anything when the order leaves room above the
        // basis's own indices; at order = max index it passes vacuously
        // (completion had no new slots to shift into), and trusting it there
        // returns non-bases for inputs already closed at their own order.
        let meaningful = i > current.iter().map(|f| f.max_index()).max().unwrap_or(0);
        if stable && meaningful {
            confirmed += 1;
            if confirmed > cfg.confirm_iterations {
                let expanded = expand_images(&current, i, cfg.work_cap)?;
                let mut basis = interreduce_minimize(BasisSet::new(expanded, i)?)?;
                basis.groebner = true;
                return Ok(GbReport {
                    basis,
                    orders_visited,
                    pair_counts,
                    reduction_counts,
                    stabilized: true,
                });
            }
        } else {
            if !stable {
                confirmed = 0;
            }
            current = fprime.elements;
        }
        i += 1;
    }
    let basis = BasisSet::new(current, cfg.max_order)?;
    Err(Error::MaxOrderExceeded(Box::new(GbReport {
        basis,
        orders_visited,
        pair_counts,
        reduction_counts,
        stabilized: false,
    })))
}

/// Every image of every element under permutations of `1..=n`, first seen
/// first kept.
fn expand_images(basis: &[Polynomial], n: u32, work_cap: u64) -> Result<Vec<Polynomial>> {
    let mut budget = work_cap;
    let mut out: Vec<Polynomial> = Vec::new();
    for f in basis {
        for (_, image) in orbit::polynomial_orbit(f, n, &mut budget)? {
            if !out.contains(&image) {
                out.push(image);
            }
        }
    }
    Ok(out)
}

/// Closed-form bases for ideals generated by the orbit of finitely many
/// monomials: the full orbit at the generators' top index is a Groebner
/// basis, and dropping every orbit member that is an upward shift of
/// another yields the minimal one — guaranteed minimal when all generators
/// share one total degree, best-effort (flagged heuristic) otherwise.
pub fn monomial_orbit_gb(
    generators: &[Monomial],
    field: FieldKind,
) -> Result<(BasisSet, BasisSet)> {
    if generators.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = generators.iter().map(|m| m.max_index()).max().unwrap_or(0);
    let mut budget = orbit::DEFAULT_WORK_CAP;
    let mut full: Vec<Monomial> = Vec::new();
    for g in generators {
        for image in orbit::monomial_orbit(g, n, &mut budget)? {
            if !full.contains(&image) {
                full.push(image);
            }
        }
    }
    let single_degree = full
        .windows(2)
        .all(|w| w[0].total_degree() == w[1].total_degree());

    let mut keep: Vec<bool> = vec![true; full.len()];
    for (k, h) in full.iter().enumerate() {
        if full
            .iter()
            .enumerate()
            .any(|(j, g)| j != k && upward_shift_between(g, h).is_some())
        {
            keep[k] = false;
        }
    }
    if !single_degree {
        // Mixed degrees: additionally drop anything above a retained
        // member in the cancellation order, scanning from the top down.
        let mut by_descending: Vec<usize> = (0..full.len()).filter(|&k| keep[k]).collect();
        by_descending.sort_by(|&a, &b| full[b].cmp(&full[a]));
        for &k in &by_descending {
            let dominated = (0..full.len()).any(|j| {
                j != k && keep[j] && sym_compare(&full[j], &full[k]).is_some()
            });
            if dominated {
                keep[k] = false;
            }
        }
    }

    let as_polys = |ms: &[Monomial]| -> Vec<Polynomial> {
        ms.iter()
            .map(|m| Polynomial::from_monomial(m.clone(), field))
            .collect()
    };
    let mut full_basis = BasisSet::new(as_polys(&full), n)?;
    full_basis.groebner = true;
    let minimal_mons: Vec<Monomial> = full
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(m, _)| m.clone())
        .collect();
    let mut minimal_basis = BasisSet::new(as_polys(&minimal_mons), n)?;
    minimal_basis.groebner = true;
    minimal_basis.minimality = if single_degree {
        Minimality::Minimal
    } else {
        Minimality::Heuristic
    };
    Ok((full_basis, minimal_basis))
}

/// Membership in the symmetric ideal generated by a finished basis: reduce
/// and test the remainder for zero.  The certificate ties the verdict to an
/// explicit combination.
pub fn is_member(f: &Polynomial, basis: &BasisSet) -> Result<(bool, Certificate)> {
    if !basis.groebner {
        return Err(Error::NotGroebner);
    }
    if let (Some(a), Some(b)) = (f.field(), basis.field()) {
        if a != b {
            return Err(Error::DomainMismatch(format!("{a} vs {b}")));
        }
    }
    let cert = reduce_full(f, &basis.elements)?;
    Ok((cert.remainder.is_zero(), cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_monomial, parse_polynomial};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, FieldKind::Rational).unwrap()
    }

    fn m(s: &str) -> Monomial {
        parse_monomial(s, FieldKind::Rational).unwrap()
    }

    fn polys(ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| p(s)).collect()
    }

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn truncation_at_order_two() {
        let basis = truncated_gb(&polys(&["x1 + x2", "x1*x2"]), 2, &cfg()).unwrap();
        assert_eq!(basis.elements, polys(&["x1 + x2", "x1^2"]));
        assert_eq!(basis.order_used, 2);
    }

    #[test]
    fn truncation_of_a_single_variable() {
        let basis = truncated_gb(&polys(&["x1"]), 2, &cfg()).unwrap();
        assert_eq!(basis.elements, polys(&["x1"]));
    }

    #[test]
    fn truncation_at_order_three_collapses() {
        let basis = truncated_gb(&polys(&["x1 + x2", "x1^2"]), 3, &cfg()).unwrap();
        assert_eq!(basis.elements, polys(&["x1"]));
    }

    #[test]
    fn truncation_validations() {
        assert!(matches!(
            truncated_gb(&[], 2, &cfg()),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            truncated_gb(&polys(&["x3"]), 2, &cfg()),
            Err(Error::IndexAboveOrder { .. })
        ));
        assert!(matches!(
            truncated_gb(&[Polynomial::zero()], 2, &cfg()),
            Err(Error::ZeroElement(_))
        ));
        let basis = truncated_gb(&polys(&["7", "x1"]), 2, &cfg()).unwrap();
        assert_eq!(basis.elements, polys(&["1"]));
    }

    #[test]
    fn full_run_on_the_motivating_pair() {
        let report = symmetric_gb(&polys(&["x1 + x2", "x1*x2"]), &cfg()).unwrap();
        assert!(report.stabilized);
        assert_eq!(report.basis.elements, polys(&["x1"]));
        assert_eq!(report.orders_visited, vec![2, 3, 4]);
        assert!(report.basis.groebner);
        assert_eq!(report.basis.minimality, Minimality::Minimal);
    }

    #[test]
    fn full_run_trivial_generator() {
        let report = symmetric_gb(&polys(&["x1"]), &cfg()).unwrap();
        assert!(report.stabilized);
        assert_eq!(report.basis.elements, polys(&["x1"]));
        assert_eq!(report.orders_visited, vec![2]);
    }

    #[test]
    fn constant_generators_collapse_instantly() {
        let report = symmetric_gb(&polys(&["3", "x1*x2"]), &cfg()).unwrap();
        assert!(report.stabilized);
        assert_eq!(report.basis.elements, polys(&["1"]));
        assert!(report.orders_visited.is_empty());
    }

    #[test]
    fn max_order_exhaustion_carries_the_last_basis() {
        let mut tight = cfg();
        tight.max_order = 2;
        match symmetric_gb(&polys(&["x1 + x2", "x1*x2"]), &tight) {
            Err(Error::MaxOrderExceeded(report)) => {
                assert!(!report.stabilized);
                assert_eq!(report.basis.elements, polys(&["x1 + x2", "x1^2"]));
                assert_eq!(report.orders_visited, vec![2]);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn confirm_iterations_extend_the_run() {
        let mut confirming = cfg();
        confirming.confirm_iterations = 2;
        let report = symmetric_gb(&polys(&["x1 + x2", "x1*x2"]), &confirming).unwrap();
        assert!(report.stabilized);
        assert_eq!(report.basis.elements, polys(&["x1"]));
        // Stable at 4, confirmed again at 5 and 6.
        assert_eq!(report.orders_visited, vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn interreduction_examples() {
        let basis = BasisSet::new(polys(&["x1 + x2", "x1*x2", "x1^2"]), 2).unwrap();
        let reduced = interreduce_minimize(basis).unwrap();
        assert_eq!(reduced.elements, polys(&["x1 + x2", "x1^2"]));
        assert_eq!(reduced.minimality, Minimality::Minimal);

        // The orbit of x1^2*x2 at order 3 interreduces to the two minimal
        // orbit members.
        let orbit = polys(&[
            "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x3^2", "x2^2*x3", "x2*x3^2",
        ]);
        let reduced = interreduce_minimize(BasisSet::new(orbit, 3).unwrap()).unwrap();
        assert_eq!(reduced.elements, polys(&["x1*x2^2", "x1^2*x2"]));
    }

    #[test]
    fn monomial_orbit_worked_example() {
        let (full, minimal) = monomial_orbit_gb(&[m("x1^2*x3")], FieldKind::Rational).unwrap();
        assert_eq!(full.elements.len(), 6);
        assert_eq!(minimal.elements, polys(&["x1*x2^2", "x1^2*x2"]));
        assert_eq!(minimal.minimality, Minimality::Minimal);
        assert!(full.groebner && minimal.groebner);
    }

    #[test]
    fn monomial_orbit_mixed_degrees_is_heuristic() {
        let (_, minimal) =
            monomial_orbit_gb(&[m("x1"), m("x2^2")], FieldKind::Rational).unwrap();
        assert_eq!(minimal.elements, polys(&["x1"]));
        assert_eq!(minimal.minimality, Minimality::Heuristic);
    }

    #[test]
    fn membership_basics() {
        let report = symmetric_gb(&polys(&["x1 + x2", "x1*x2"]), &cfg()).unwrap();
        let (yes, cert) = is_member(&p("x1"), &report.basis).unwrap();
        assert!(yes);
        assert!(crate::reduce::certificate_check(&p("x1"), &cert));

        let (yes, _) = is_member(&Polynomial::zero(), &report.basis).unwrap();
        assert!(yes);

        let single = symmetric_gb(&polys(&["x1"]), &cfg()).unwrap();
        let (no, cert) = is_member(&p("1"), &single.basis).unwrap();
        assert!(!no);
        assert_eq!(cert.remainder, p("1"));

        let raw = BasisSet::new(polys(&["x1 + x2"]), 2).unwrap();
        assert!(matches!(
            is_member(&p("x1"), &raw),
            Err(Error::NotGroebner)
        ));
    }

    #[test]
    fn report_renders_and_round_trips() {
        let report = symmetric_gb(&polys(&["x1 + x2", "x1*x2"]), &cfg()).unwrap();
        let text = report.to_string();
        assert!(text.contains("# stabilized: true"));
        assert!(text.contains("# orders-visited: 2 3 4"));
        let parsed =
            crate::text::parse_corpus(&text, FieldKind::Rational).unwrap();
        assert_eq!(parsed, report.basis.elements);
    }
}
