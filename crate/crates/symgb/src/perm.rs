use crate::error::Error;
use crate::monomial::Monomial;
use crate::Result;
use std::fmt;

/// A permutation of the positive integers moving only finitely many points.
/// Both directions are kept so inverse application is a lookup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    /// `(point, image)` for the non-fixed points, sorted by point.
    forward: Vec<(u32, u32)>,
    /// Same data for the inverse permutation.
    backward: Vec<(u32, u32)>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// Builds from explicit `point -> image` pairs; points not listed are
    /// fixed.  The listed points and images must form the same set.
    pub fn from_mapping<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self> {
        let mut forward: Vec<(u32, u32)> = pairs.into_iter().filter(|&(i, j)| i != j).collect();
        forward.sort_by_key(|&(i, _)| i);
        for w in forward.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::BadPermutation(format!(
                    "point {} mapped twice",
                    w[0].0
                )));
            }
        }
        if forward.iter().any(|&(i, _)| i == 0) {
            return Err(Error::BadPermutation("points must be positive".into()));
        }
        let mut backward: Vec<(u32, u32)> = forward.iter().map(|&(i, j)| (j, i)).collect();
        backward.sort_by_key(|&(j, _)| j);
        for w in backward.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::BadPermutation(format!(
                    "image {} hit twice",
                    w[0].0
                )));
            }
        }
        let points: Vec<u32> = forward.iter().map(|&(i, _)| i).collect();
        let images: Vec<u32> = backward.iter().map(|&(j, _)| j).collect();
        if points != images {
            return Err(Error::BadPermutation(
                "moved points and images differ; not a bijection".into(),
            ));
        }
        Ok(Permutation { forward, backward })
    }

    /// Extends `point -> image` pairs to a permutation of `1..=top` by
    /// sending the unlisted points onto the unused images in ascending order.
    pub fn from_partial<I: IntoIterator<Item = (u32, u32)>>(pairs: I, top: u32) -> Result<Self> {
        let pairs: Vec<(u32, u32)> = pairs.into_iter().collect();
        let mut source_used = vec![false; top as usize + 1];
        let mut target_used = vec![false; top as usize + 1];
        for &(i, j) in &pairs {
            if i == 0 || j == 0 || i > top || j > top {
                return Err(Error::BadPermutation(format!(
                    "pair ({i}, {j}) outside 1..={top}"
                )));
            }
            if source_used[i as usize] || target_used[j as usize] {
                return Err(Error::BadPermutation("partial map is not injective".into()));
            }
            source_used[i as usize] = true;
            target_used[j as usize] = true;
        }
        let free_targets = (1..=top).filter(|&j| !target_used[j as usize]);
        let completed = (1..=top)
            .filter(|&i| !source_used[i as usize])
            .zip(free_targets);
        Self::from_mapping(pairs.into_iter().chain(completed))
    }

    pub fn transposition(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Ok(Self::identity());
        }
        Self::from_mapping([(a, b), (b, a)])
    }

    /// Parses products of cycles, applied right to left: `"(32)(56)(341)"`.
    /// A parenthesized group of bare digits is read digit by digit; indices
    /// with more than one digit need separators, as in `"(3 12)"` or
    /// `"(3,12)"`.  `""`, `"(1)"` and other singleton cycles are the identity.
    pub fn from_cycles(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::BadPermutation(format!("{msg} in {text:?}"));
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = &rest[1..close];
            rest = rest[close + 1..].trim_start();
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            let entries: Vec<u32> = if body.contains(|c: char| c.is_whitespace() || c == ',') {
                body.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<u32>().map_err(|_| bad("bad index")))
                    .collect::<Result<_>>()?
            } else if body.chars().all(|c| c.is_ascii_digit()) {
                body.chars().map(|c| c.to_digit(10).unwrap()).collect()
            } else {
                return Err(bad("bad cycle body"));
            };
            if entries.contains(&0) {
                return Err(bad("cycle entries must be positive"));
            }
            cycles.push(entries);
        }
        // Rightmost cycle acts first.
        let mut acc = Permutation::identity();
        for cycle in cycles.iter().rev() {
            let mut seen = cycle.clone();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(bad("repeated entry inside a cycle"));
            }
            let mut pairs = Vec::with_capacity(cycle.len());
            for k in 0..cycle.len() {
                pairs.push((cycle[k], cycle[(k + 1) % cycle.len()]));
            }
            let sigma = Permutation::from_mapping(pairs)?;
            acc = sigma.compose(&acc);
        }
        Ok(acc)
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.forward
            .binary_search_by_key(&point, |&(i, _)| i)
            .map(|k| self.forward[k].1)
            .unwrap_or(point)
    }

    pub fn apply_inv(&self, point: u32) -> u32 {
        self.backward
            .binary_search_by_key(&point, |&(i, _)| i)
            .map(|k| self.backward[k].1)
            .unwrap_or(point)
    }

    /// `(self o other)(i) = self(other(i))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut domain: Vec<u32> = self
            .forward
            .iter()
            .chain(other.forward.iter())
            .map(|&(i, _)| i)
            .collect();
        domain.sort_unstable();
        domain.dedup();
        let pairs: Vec<(u32, u32)> = domain
            .into_iter()
            .map(|i| (i, self.apply(other.apply(i))))
            .collect();
        Permutation::from_mapping(pairs).expect("composition of bijections is a bijection")
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_empty()
    }

    /// Moved points, ascending.
    pub fn moved_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.forward.iter().map(|&(i, _)| i)
    }

    pub fn max_moved(&self) -> u32 {
        self.forward.iter().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Relocates the variables of a monomial: the exponent of `x_i` becomes
    /// the exponent of `x_sigma(i)`.
    pub fn apply_monomial(&self, m: &Monomial) -> Monomial {
        let pairs: Vec<(u32, u32)> = m.pairs().map(|(i, e)| (self.apply(i), e)).collect();
        Monomial::from_pairs(pairs).expect("permuting a valid monomial stays valid")
    }

    /// Disjoint cycle decomposition; each cycle starts at its smallest
    /// point and cycles are sorted by that point.  Identity gives none.
    pub fn to_cycles(&self) -> Vec<Vec<u32>> {
        let mut cycles = Vec::new();
        let mut seen: Vec<u32> = Vec::new();
        for &(start, _) in &self.forward {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            let mut next = self.apply(start);
            while next != start {
                cycle.push(next);
                next = self.apply(next);
            }
            seen.extend(cycle.iter().copied());
            cycles.push(cycle);
        }
        cycles
    }

    /// One-line notation `[s(1) s(2) ... s(n)]`.
    pub fn one_line(&self, n: u32) -> String {
        let images: Vec<String> = (1..=n).map(|i| self.apply(i).to_string()).collect();
        format!("[{}]", images.join(" "))
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, compact for single-digit indices (`(23)`), spaced
    /// otherwise (`(3 12)`); the identity prints as `(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.to_cycles();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        for cycle in cycles {
            if cycle.iter().all(|&i| i <= 9) {
                let digits: String = cycle.iter().map(|i| i.to_string()).collect();
                write!(f, "({digits})")?;
            } else {
                let parts: Vec<String> = cycle.iter().map(|i| i.to_string()).collect();
                write!(f, "({})", parts.join(" "))?;
            }
        }
        Ok(())
    }
}
