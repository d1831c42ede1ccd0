use crate::error::Error;
use crate::Result;
use std::cmp::Ordering;
use std::fmt;

/// A monomial in finitely many of the variables `x1, x2, ...`, stored as a
/// sparse exponent map sorted by variable index.  The empty map is `1`.
///
/// `Ord` is the term order used everywhere in this crate: variables are
/// ordered `x1 < x2 < ...` and monomials lexicographically *by highest index
/// first*, so `x2 > x1^3` and `1` is the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    /// `(index, exponent)` pairs, indices ascending, exponents nonzero.
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: u32) -> Result<Self> {
        Self::from_pairs([(index, 1)])
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order;
    /// repeated indices accumulate.  Index 0 or exponent 0 is rejected.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self> {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for (i, e) in pairs {
            if i == 0 {
                return Err(Error::Parse {
                    position: 0,
                    message: "variable index must be positive".into(),
                });
            }
            if e == 0 {
                return Err(Error::Parse {
                    position: 0,
                    message: "exponent must be positive".into(),
                });
            }
            exps.push((i, e));
        }
        exps.sort_by_key(|&(i, _)| i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (i, e) in exps {
            match merged.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => merged.push((i, e)),
            }
        }
        Ok(Monomial { exps: merged })
    }

    /// Builds from a dense exponent vector where position `k` holds the
    /// exponent of `x(k+1)`.
    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial {
            exps: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| (k as u32 + 1, e))
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    /// Largest variable index appearing, or 0 for the monomial `1`.
    pub fn max_index(&self) -> u32 {
        self.exps.last().map(|&(i, _)| i).unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Variable indices with nonzero exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exps.len()
    }

    /// `(index, exponent)` pairs, ascending by index.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Exponents listed along ascending support.
    pub fn exponent_sequence(&self) -> Vec<u32> {
        self.exps.iter().map(|&(_, e)| e).collect()
    }

    /// Dense exponent vector of length `n` (1-based index `i` at slot `i-1`).
    /// Indices above `n` are dropped; callers guard for that when it matters.
    pub fn to_dense(&self, n: u32) -> Vec<u32> {
        let mut v = vec![0u32; n as usize];
        for &(i, e) in &self.exps {
            if i <= n {
                v[i as usize - 1] = e;
            }
        }
        v
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        out.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(i, e)| e <= other.exponent(i))
    }

    /// Componentwise quotient `self / divisor`; errors when not divisible.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        let mut out = Vec::with_capacity(self.exps.len());
        for &(i, e) in &self.exps {
            let r = e - divisor.exponent(i);
            if r > 0 {
                out.push((i, r));
            }
        }
        Ok(Monomial { exps: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(u32, u32)> = self.exps.clone();
        for &(i, e) in &other.exps {
            match pairs.binary_search_by_key(&i, |&(j, _)| j) {
                Ok(k) => pairs[k].1 = pairs[k].1.max(e),
                Err(k) => pairs.insert(k, (i, e)),
            }
        }
        Monomial { exps: pairs }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(i, _)| other.exponent(i) == 0)
    }

    /// Sorted multiset of exponents — the "type" of the monomial, invariant
    /// under every permutation of the variables.
    pub fn exponent_type(&self) -> Vec<u32> {
        let mut t = self.exponent_sequence();
        t.sort_unstable();
        t
    }

    /// Lexicographic comparison scanning from the highest variable index
    /// down; the first differing exponent decides and more is greater.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let mut a = self.exps.iter().rev().peekable();
        let mut b = other.exps.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => {
                        match e.cmp(&f) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Canonical syntax: variables by descending index, `^` only for
    /// exponents above 1, `*` separators; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(i, e) in self.exps.iter().rev() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}
