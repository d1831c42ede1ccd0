use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Coefficient domain selected for a computation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    /// Arbitrary-precision rationals.
    Rational,
    /// Integers modulo a prime.
    Mod(u64),
}

impl FieldKind {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::zero()),
            FieldKind::Mod(p) => Scalar::Mod { value: 0, prime: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::one()),
            FieldKind::Mod(p) => Scalar::Mod { value: 1, prime: *p },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Mod(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::Mod {
                    value: digits.first().copied().unwrap_or(0),
                    prime: *p,
                }
            }
        }
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    /// Builds `numer / denom` in this field.  Fails when `denom` maps to zero.
    pub fn fraction(&self, numer: &BigInt, denom: &BigInt) -> Result<Scalar> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldKind::Rational => Ok(Scalar::Rational(BigRational::new(
                numer.clone(),
                denom.clone(),
            ))),
            FieldKind::Mod(_) => self.from_bigint(numer).div(&self.from_bigint(denom)),
        }
    }

    pub fn describes(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldKind::Rational, Scalar::Rational(_))
        ) || matches!((self, s), (FieldKind::Mod(p), Scalar::Mod { prime, .. }) if p == prime)
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Mod(p) => write!(f, "fp:{p}"),
        }
    }
}

/// A field element: an exact rational or a residue modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, prime: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Mod { prime, .. } => FieldKind::Mod(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            // Residues are canonical representatives in [0, p); no sign.
            Scalar::Mod { .. } => false,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => Ok(()),
            (Scalar::Mod { prime: p, .. }, Scalar::Mod { prime: q, .. }) if p == q => Ok(()),
            _ => Err(Error::DomainMismatch(format!(
                "{} vs {}",
                self.field(),
                other.field()
            ))),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *prime as u128) as u64,
                prime: *prime,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: if *value == 0 { 0 } else { prime - value },
                prime: *prime,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *prime as u128) as u64,
                prime: *prime,
            },
            _ => unreachable!(),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: mod_inverse(*value, *prime),
                prime: *prime,
            },
        })
    }

    /// Magnitude used when printing: rationals lose their sign, residues are
    /// already canonical.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.abs()),
            m @ Scalar::Mod { .. } => m.clone(),
        }
    }
}

// A canonical total order so orbit pools and bases can be deduplicated and
// sorted deterministically.  Cross-domain comparisons order by domain tag.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Rational(_), Scalar::Mod { .. }) => Ordering::Less,
            (Scalar::Mod { .. }, Scalar::Rational(_)) => Ordering::Greater,
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p) with p prime and a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of a multiple of the modulus");
    (s0.rem_euclid(p as i128)) as u64
}

/// Deterministic Miller-Rabin, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}
