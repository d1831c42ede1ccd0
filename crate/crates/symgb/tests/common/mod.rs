//! Seeded random generators shared by the integration suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symgb::scalar::FieldKind;
use symgb::{Monomial, Permutation, Polynomial, Scalar, Term};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monomial with indices in `1..=max_index` and exponents in `0..=max_exp`
/// per variable; may come out as `1`.
pub fn random_monomial(r: &mut ChaCha8Rng, max_index: u32, max_exp: u32) -> Monomial {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for i in 1..=max_index {
        if r.gen_bool(0.4) {
            let e = r.gen_range(1..=max_exp);
            pairs.push((i, e));
        }
    }
    Monomial::from_pairs(pairs).unwrap()
}

pub fn random_nonunit_monomial(r: &mut ChaCha8Rng, max_index: u32, max_exp: u32) -> Monomial {
    loop {
        let m = random_monomial(r, max_index, max_exp);
        if !m.is_one() {
            return m;
        }
    }
}

pub fn random_nonzero_scalar(r: &mut ChaCha8Rng, field: FieldKind) -> Scalar {
    match field {
        FieldKind::Rational => loop {
            let numer: i64 = r.gen_range(-9..=9);
            if numer != 0 {
                let denom: i64 = r.gen_range(1..=9);
                return field
                    .from_integer(numer)
                    .div(&field.from_integer(denom))
                    .unwrap();
            }
        },
        FieldKind::Mod(p) => {
            let v = r.gen_range(1..p);
            field.from_integer(v as i64)
        }
    }
}

/// A nonzero polynomial with up to `max_terms` terms.
pub fn random_polynomial(
    r: &mut ChaCha8Rng,
    field: FieldKind,
    max_index: u32,
    max_exp: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let count = r.gen_range(1..=max_terms);
        let terms: Vec<Term> = (0..count)
            .map(|_| {
                Term::new(
                    random_nonzero_scalar(r, field),
                    random_monomial(r, max_index, max_exp),
                )
            })
            .collect();
        let p = Polynomial::from_terms(terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Image of `m` under a random upward shift: each support index moves to a
/// weakly larger one, order preserved.
pub fn random_upward_shift_image(r: &mut ChaCha8Rng, m: &Monomial, slack: u32) -> Monomial {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut prev: u32 = 0;
    for (i, e) in m.pairs() {
        let lo = (prev + 1).max(i);
        let j = r.gen_range(lo..=lo + slack);
        pairs.push((j, e));
        prev = j;
    }
    Monomial::from_pairs(pairs).unwrap()
}

/// Everything shifted one slot up: `x_i` becomes `x_{i+1}`.
pub fn shift_up(m: &Monomial) -> Monomial {
    let pairs: Vec<(u32, u32)> = m.pairs().map(|(i, e)| (i + 1, e)).collect();
    Monomial::from_pairs(pairs).unwrap()
}

pub fn with_x1_power(m: &Monomial, c: u32) -> Monomial {
    if c == 0 {
        return m.clone();
    }
    m.mul(&Monomial::from_pairs([(1, c)]).unwrap())
}

/// A product of up to three random transpositions on `1..=max_index`.
pub fn random_permutation(r: &mut ChaCha8Rng, max_index: u32) -> Permutation {
    let mut sigma = Permutation::identity();
    for _ in 0..r.gen_range(0..=3) {
        let a = r.gen_range(1..=max_index);
        let b = r.gen_range(1..=max_index);
        if a != b {
            sigma = sigma.compose(&Permutation::transposition(a, b).unwrap());
        }
    }
    sigma
}
