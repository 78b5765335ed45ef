#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use qheis_core::coeffs::GaussRational;
use qheis_core::families::{catalog, catalog_default, CATALOG_IDS};
use qheis_core::verify::SuiteRng;
use qheis_core::{Coefficient, Presentation};
use rand::SeedableRng;

pub fn rng(seed: u64) -> SuiteRng {
    SuiteRng::seed_from_u64(seed)
}

pub fn family(id: &str) -> Presentation {
    catalog_default(id).unwrap()
}

pub fn with_params(id: &str, params: &[(&str, &str)]) -> Presentation {
    let map: BTreeMap<String, String> = params
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    catalog(id, &map).unwrap()
}

/// Every catalog family at its defaults.
pub fn catalog_families() -> Vec<Presentation> {
    CATALOG_IDS.iter().map(|id| family(id)).collect()
}

/// Catalog defaults plus the parameter variants that change the relations.
pub fn all_variants() -> Vec<Presentation> {
    let mut out = catalog_families();
    out.push(with_params("classical", &[("dim", "1")]));
    out.push(with_params("wess", &[("form", "rearranged")]));
    out.push(with_params("schmudgen", &[("relations", "solved")]));
    out.push(with_params("gaddis", &[("p", "q")]));
    out.push(with_params("q_gha", &[("f", "q*h + 1"), ("g", "h^2 - hbar")]));
    out.push(with_params("qhbar", &[("j", "2"), ("k", "3")]));
    out.push(with_params("unified", &[("dim", "2")]));
    out.push(with_params("unified", &[("n", "2"), ("m", "0"), ("l", "-1"), ("psi", "hbar*y_1"), ("phi", "x_1")]));
    out
}

pub fn gauss(re: i64, im: i64, den: i64) -> GaussRational {
    &GaussRational::from_ratio(re, den) + &(&GaussRational::from_ratio(im, den) * &GaussRational::i())
}

/// Sums of Gaussian multiples of `q^(a/2) p^b hbar^c`, sometimes divided by
/// `q + k` or `hbar - k`.
pub fn coefficient() -> impl Strategy<Value = Coefficient> {
    let term = (-4i64..=4, -2i64..=2, 1i64..=4, -4i32..=4, -2i32..=2, 0i32..=2);
    (prop::collection::vec(term, 1..=3), 0u8..=2, 1i64..=3).prop_map(|(terms, den, k)| {
        let num = terms.into_iter().fold(Coefficient::zero(), |acc, (re, im, d, a, b, c)| {
            acc.add(
                &Coefficient::from_gauss(gauss(re, im, d))
                    .mul(&Coefficient::q_half(a))
                    .mul(&Coefficient::p(b))
                    .mul(&Coefficient::hbar(c)),
            )
        });
        let d = match den {
            0 => Coefficient::one(),
            1 => Coefficient::q(1).add(&Coefficient::from_int(k)),
            _ => Coefficient::hbar(1).sub(&Coefficient::from_int(k)),
        };
        num.div(&d).unwrap()
    })
}
