use crate::error::Error;
use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::scalar::{FieldKind, Scalar};
use crate::Result;
use std::cmp::Ordering;
use std::fmt;

/// One coefficient-monomial pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Scalar, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

/// A polynomial in finitely many of the `x_i`, kept as terms with nonzero
/// coefficients in strictly decreasing monomial order, so the first term is
/// the leading term and representation equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![Term::new(c, Monomial::one())],
            }
        }
    }

    pub fn from_monomial(m: Monomial, field: FieldKind) -> Self {
        Polynomial {
            terms: vec![Term::new(field.one(), m)],
        }
    }

    /// Normalizes an arbitrary list of terms: checks the coefficients share
    /// one domain, combines equal monomials, drops zeros, sorts decreasing.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Result<Self> {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        for pair in terms.windows(2) {
            if pair[0].coeff.field() != pair[1].coeff.field() {
                return Err(Error::DomainMismatch(format!(
                    "{} vs {}",
                    pair[0].coeff.field(),
                    pair[1].coeff.field()
                )));
            }
        }
        terms.sort_by(|a, b| b.monomial.cmp(&a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(prev) if prev.monomial == t.monomial => {
                    prev.coeff = prev.coeff.add(&t.coeff)?;
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial { terms: out })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = &Term> + '_ {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.monomial)
    }

    /// Splits off the leading term, leaving the tail.
    pub fn split_leading(&self) -> Result<(Term, Polynomial)> {
        let lt = self.leading_term()?.clone();
        Ok((
            lt,
            Polynomial {
                terms: self.terms[1..].to_vec(),
            },
        ))
    }

    pub fn leading_coeff(&self) -> Result<&Scalar> {
        Ok(&self.leading_term()?.coeff)
    }

    /// Largest variable index appearing in any term; 0 for constants.
    pub fn max_index(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.monomial.max_index())
            .max()
            .unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    /// Coefficient domain, when the polynomial has any terms to tell.
    pub fn field(&self) -> Option<FieldKind> {
        self.terms.first().map(|t| t.coeff.field())
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        match (self.field(), other.field()) {
            (Some(a), Some(b)) if a != b => {
                Err(Error::DomainMismatch(format!("{a} vs {b}")))
            }
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&s), Some(&t)) => match s.monomial.cmp(&t.monomial) {
                    Ordering::Greater => {
                        out.push(s.clone());
                        a.next();
                    }
                    Ordering::Less => {
                        out.push(t.clone());
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = s.coeff.add(&t.coeff)?;
                        if !c.is_zero() {
                            out.push(Term::new(c, s.monomial.clone()));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&s), None) => {
                    out.push(s.clone());
                    a.next();
                }
                (None, Some(&t)) => {
                    out.push(t.clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Polynomial { terms: out })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.neg(), t.monomial.clone()))
                .collect(),
        }
    }

    /// Multiplies by a single term.  Order is preserved because multiplying
    /// by a fixed monomial is monotone for the term order.
    pub fn mul_term(&self, t: &Term) -> Result<Polynomial> {
        if t.coeff.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for s in &self.terms {
            out.push(Term::new(
                s.coeff.mul(&t.coeff)?,
                s.monomial.mul(&t.monomial),
            ));
        }
        Ok(Polynomial { terms: out })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(&self.mul_term(t)?)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for s in &self.terms {
            out.push(Term::new(s.coeff.mul(c)?, s.monomial.clone()));
        }
        Ok(Polynomial { terms: out })
    }

    /// Scales so the leading coefficient becomes 1; errors on zero.
    pub fn make_monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        self.scale(&lc.inverse()?)
    }

    /// Relocates variables through `sigma`.  Distinct monomials stay
    /// distinct, but their relative order can change, so terms are re-sorted.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Polynomial {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), sigma.apply_monomial(&t.monomial)))
            .collect();
        terms.sort_by(|a, b| b.monomial.cmp(&a.monomial));
        Polynomial { terms }
    }
}

// Canonical total order for deduplication: lexicographic over the term
// sequence, terms compared by monomial then coefficient.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        loop {
            match (a.next(), b.next()) {
                (Some(s), Some(t)) => {
                    match s
                        .monomial
                        .cmp(&t.monomial)
                        .then_with(|| s.coeff.cmp(&t.coeff))
                    {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Polynomial {
    /// Canonical syntax: terms in decreasing order, `-` folded into the
    /// separators, unit coefficients and exponents suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k == 0 {
                if t.coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if t.coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{mag}*{}", t.monomial)?;
            }
        }
        Ok(())
    }
}
