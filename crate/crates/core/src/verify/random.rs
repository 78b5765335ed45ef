//! Seeded generators for coefficients, words and polynomials.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeffs::monomial::{H, S, T};
use crate::coeffs::{Coefficient, GaussRational};
use crate::ncpoly::{Alphabet, NCPoly, Word};

pub type SuiteRng = ChaCha8Rng;

/// Stable seed derived from a case id (FNV-1a), so that each case draws the
/// same samples regardless of scheduling.
pub fn seed_for(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn rng_for(id: &str) -> SuiteRng {
    SuiteRng::seed_from_u64(seed_for(id))
}

fn small_gauss(rng: &mut impl Rng) -> GaussRational {
    loop {
        let re = rng.gen_range(-3..=3);
        let im = if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 };
        let den = rng.gen_range(1..=3);
        let g = &GaussRational::from_ratio(re, den) + &(&GaussRational::from_ratio(im, den) * &GaussRational::i());
        if !g.is_zero() {
            return g;
        }
    }
}

/// Nonzero coefficient mixing Gaussian rationals, powers of `q^(1/2)`, `p`
/// and `hbar`, and occasionally a non-monomial denominator.
pub fn random_coefficient(rng: &mut impl Rng) -> Coefficient {
    let mut c = Coefficient::from_gauss(small_gauss(rng))
        .mul(&Coefficient::q_half(rng.gen_range(-3..=3)))
        .mul(&Coefficient::hbar(rng.gen_range(0..=2)));
    if rng.gen_bool(0.25) {
        c = c.mul(&Coefficient::p(rng.gen_range(-2..=2)));
    }
    if rng.gen_bool(0.3) {
        c = c.add(&Coefficient::from_gauss(small_gauss(rng)).mul(&Coefficient::q(rng.gen_range(-1..=2))));
    }
    if rng.gen_bool(0.2) {
        let den = Coefficient::q(1).add(&Coefficient::from_int(rng.gen_range(1..=3)));
        c = c.div(&den).expect("q + k is nonzero");
    }
    if c.is_zero() {
        Coefficient::one()
    } else {
        c
    }
}

pub fn random_word(alphabet: &Alphabet, rng: &mut impl Rng, len: usize) -> Word {
    Word((0..len).map(|_| rng.gen_range(0..alphabet.len()) as u16).collect())
}

/// Up to `max_terms` terms with word lengths in `0..=max_len`. When a
/// generator is spelled `p` the second deformation parameter cannot be
/// written over this alphabet, so it is set to 1.
pub fn random_poly(
    alphabet: &Arc<Alphabet>,
    rng: &mut impl Rng,
    max_len: usize,
    max_terms: usize,
) -> NCPoly {
    let shadowed = alphabet.lookup("p").is_some();
    let mut out = NCPoly::zero(alphabet);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let len = rng.gen_range(0..=max_len);
        let w = random_word(alphabet, rng, len);
        let mut c = random_coefficient(rng);
        if shadowed {
            c = c.substitute(T, &GaussRational::one()).expect("no pole at p = 1");
        }
        out.add_term(w, c);
    }
    out
}

/// A point for the central variables `q^(1/2)`, `p^(1/2)`, `hbar` and any
/// extra names, drawn from small nonzero rationals away from `q = 1`.
pub fn random_point(rng: &mut impl Rng, extra: &[String]) -> BTreeMap<String, GaussRational> {
    let mut pt = BTreeMap::new();
    for name in [S, T, H].iter().map(|s| s.to_string()).chain(extra.iter().cloned()) {
        let v = loop {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=7);
            if num != 0 && num.abs() != den {
                break GaussRational::from_ratio(num, den);
            }
        };
        pt.insert(name, v);
    }
    pt
}
