mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use qheis_core::coeffs::{monomial, qnumber, qnumber_closed_form, GaussRational};
use qheis_core::verify::random_point;
use qheis_core::{Coefficient, Error};

use common::{coefficient, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in coefficient(), b in coefficient(), c in coefficient()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&Coefficient::zero()), a.clone());
        prop_assert_eq!(a.mul(&Coefficient::one()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div(&a).unwrap().mul(&a), b.clone());
        }
    }

    /// Evaluation at a numeric point is a ring homomorphism; this checks the
    /// symbolic arithmetic against plain Gaussian-rational arithmetic.
    #[test]
    fn evaluation_is_a_homomorphism(a in coefficient(), b in coefficient(), seed in any::<u64>()) {
        let pt = random_point(&mut rng(seed), &[]);
        let (Ok(ea), Ok(eb)) = (a.eval(&pt), b.eval(&pt)) else { return Ok(()) };
        prop_assert_eq!(a.add(&b).eval(&pt).unwrap(), &ea + &eb);
        prop_assert_eq!(a.mul(&b).eval(&pt).unwrap(), &ea * &eb);
    }

    #[test]
    fn integer_powers(a in coefficient(), k in 0i32..4) {
        let mut acc = Coefficient::one();
        for _ in 0..k {
            acc = acc.mul(&a);
        }
        prop_assert_eq!(a.pow(k).unwrap(), acc);
    }
}

fn point(q: i64, p: i64) -> BTreeMap<String, GaussRational> {
    // s = q^(1/2), so evaluate at perfect squares to keep q, p rational.
    [
        (monomial::S.to_string(), GaussRational::from_int(q)),
        (monomial::T.to_string(), GaussRational::from_int(p)),
        (monomial::H.to_string(), GaussRational::one()),
    ]
    .into_iter()
    .collect()
}

#[test]
fn qnumber_sum_matches_closed_form() {
    for k in 1..=25 {
        assert_eq!(qnumber(k), qnumber_closed_form(k), "k = {k}");
    }
}

#[test]
fn qnumber_numeric_values() {
    // [k] at q = s^2, p = t^2 via the geometric series evaluated in plain
    // rational arithmetic.
    for (s, t) in [(2, 3), (3, 2), (-2, 5)] {
        let q = GaussRational::from_int(s * s);
        let pinv = GaussRational::from_int(t * t).inv().unwrap();
        for k in 1..=12u32 {
            let mut expected = GaussRational::zero();
            for i in 0..k as i32 {
                expected = &expected + &(&q.pow(i).unwrap() * &pinv.pow(k as i32 - 1 - i).unwrap());
            }
            assert_eq!(qnumber(k).eval(&point(s, t)).unwrap(), expected, "k = {k}");
        }
    }
}

#[test]
fn small_qnumbers() {
    let p_inv = Coefficient::p(-1);
    assert_eq!(qnumber(1), Coefficient::one());
    assert_eq!(qnumber(2), Coefficient::q(1).add(&p_inv));
    assert_eq!(
        qnumber(3),
        Coefficient::q(2).add(&Coefficient::q(1).mul(&p_inv)).add(&p_inv.pow(2).unwrap())
    );
}

#[test]
fn division_by_zero_and_poles() {
    assert_eq!(Coefficient::one().div(&Coefficient::zero()), Err(Error::DivisionByZero));
    let c = Coefficient::one().div(&Coefficient::q(1).sub(&Coefficient::one())).unwrap();
    assert!(matches!(c.eval(&point(1, 2)), Err(Error::PoleAtPoint(_))));
    assert!(matches!(c.eval(&point(-1, 2)), Err(Error::PoleAtPoint(_))));
}

#[test]
fn equal_fractions_in_different_forms() {
    // (q^2 - 1)/(q - 1) and q + 1 are the same function.
    let q = Coefficient::q(1);
    let one = Coefficient::one();
    let a = q.mul(&q).sub(&one).div(&q.sub(&one)).unwrap();
    assert_eq!(a, q.add(&one));
}
