mod common;

use qheis_core::families::{extract_ore, Relation};
use qheis_core::interface::format_plain;
use qheis_core::rewrite::check_confluence;
use qheis_core::verify::{random_coefficient, random_poly, random_word};
use qheis_core::{NCPoly, Presentation, Word};
use rand::Rng;

use common::{all_variants, catalog_families, family, rng, with_params};

fn confluent(p: &Presentation) -> bool {
    check_confluence(&p.rewrite_system().unwrap(), 6).unwrap().confluent
}

#[test]
fn relations_normalize_to_zero() {
    for p in all_variants() {
        let sys = p.rewrite_system().unwrap();
        for r in &p.relations {
            assert!(sys.normalize(&r.poly).unwrap().is_zero(), "{}: {}", p.name, r.label);
        }
    }
}

#[test]
fn normalization_is_idempotent() {
    for (k, p) in all_variants().iter().enumerate() {
        let sys = p.rewrite_system().unwrap();
        let mut r = rng(k as u64);
        for _ in 0..200 {
            let a = random_poly(&p.alphabet, &mut r, 4, 3);
            let n = sys.normalize(&a).unwrap();
            assert_eq!(sys.normalize(&n).unwrap(), n, "{}", p.name);
            for (w, _) in n.terms() {
                assert!(sys.is_irreducible(w), "{}: {}", p.name, w.render(&p.alphabet));
            }
        }
    }
}

#[test]
fn normalization_is_linear() {
    for (k, p) in all_variants().iter().enumerate() {
        let sys = p.rewrite_system().unwrap();
        let mut r = rng(100 + k as u64);
        for _ in 0..50 {
            let a = random_poly(&p.alphabet, &mut r, 4, 3);
            let b = random_poly(&p.alphabet, &mut r, 4, 3);
            let (al, be) = (random_coefficient(&mut r), random_coefficient(&mut r));
            let lhs = sys.normalize(&(&a.scale(&al) + &b.scale(&be))).unwrap();
            let rhs = &sys.normalize(&a).unwrap().scale(&al) + &sys.normalize(&b).unwrap().scale(&be);
            assert_eq!(lhs, rhs, "{}", p.name);
        }
    }
}

#[test]
fn products_of_normal_forms() {
    for (k, p) in all_variants().iter().enumerate() {
        if !confluent(p) {
            continue;
        }
        let sys = p.rewrite_system().unwrap();
        let mut r = rng(200 + k as u64);
        for _ in 0..50 {
            let a = random_poly(&p.alphabet, &mut r, 3, 2);
            let b = random_poly(&p.alphabet, &mut r, 3, 2);
            let na = sys.normalize(&a).unwrap();
            let nb = sys.normalize(&b).unwrap();
            assert_eq!(
                sys.normalize(&(&a * &b)).unwrap(),
                sys.normalize(&(&na * &nb)).unwrap(),
                "{}",
                p.name
            );
        }
    }
}

/// `b = a + sum c * u * rel * v` is equal to `a` in the quotient by
/// construction, so both must share a normal form when the system is
/// confluent.
#[test]
fn ideal_elements_vanish() {
    for (k, p) in all_variants().iter().enumerate() {
        if !confluent(p) {
            continue;
        }
        let sys = p.rewrite_system().unwrap();
        let mut r = rng(300 + k as u64);
        for _ in 0..30 {
            let a = random_poly(&p.alphabet, &mut r, 3, 3);
            let mut b = a.clone();
            for _ in 0..r.gen_range(1..=3) {
                let rel = &p.relations[r.gen_range(0..p.relations.len())].poly;
                let (lu, lv) = (r.gen_range(0..=2), r.gen_range(0..=2));
                let u = random_word(&p.alphabet, &mut r, lu);
                let v = random_word(&p.alphabet, &mut r, lv);
                b.add_scaled(&rel.sandwich(&u, &v), &random_coefficient(&mut r));
            }
            assert_eq!(sys.normalize(&a).unwrap(), sys.normalize(&b).unwrap(), "{}", p.name);
        }
    }
}

#[test]
fn long_words_terminate() {
    for (k, p) in all_variants().iter().enumerate() {
        let sys = p.rewrite_system().unwrap();
        let mut r = rng(400 + k as u64);
        for _ in 0..100 {
            let len = r.gen_range(6..=8);
            let w = NCPoly::word(&p.alphabet, random_word(&p.alphabet, &mut r, len));
            if let Err(e) = sys.normalize(&w) {
                panic!("{}: {} does not normalize: {e}", p.name, format_plain(&w));
            }
        }
    }
}

#[test]
fn inverse_pairs_cancel() {
    for p in all_variants() {
        let sys = p.rewrite_system().unwrap();
        for (g, h) in &p.inverse_pairs {
            for w in [vec![*g, *h], vec![*h, *g]] {
                let n = sys.normalize(&NCPoly::word(&p.alphabet, Word(w))).unwrap();
                assert_eq!(n, NCPoly::one(&p.alphabet), "{}", p.name);
            }
        }
    }
}

#[test]
fn catalog_confluence() {
    for p in catalog_families() {
        let rep = check_confluence(&p.rewrite_system().unwrap(), 6).unwrap();
        if p.name == "gaddis" {
            let overlaps: Vec<_> = rep.unresolved.iter().map(|c| c.overlap.render(&p.alphabet)).collect();
            assert_eq!(overlaps, ["y*z*x"]);
            let cp = &rep.unresolved[0];
            assert_eq!(
                &cp.left_normal - &cp.right_normal,
                p.parse("hbar*(p^-1 - q^-1)*z^2").unwrap()
            );
        } else {
            assert!(rep.confluent, "{}: {} unresolved", p.name, rep.unresolved.len());
        }
    }
}

#[test]
fn gaddis_readings_are_confluent() {
    assert!(confluent(&with_params("gaddis", &[("p", "q")])));
    let edited = Presentation::new("gaddis-edited", &["x", "z", "y"])
        .unwrap()
        .relation("zx", "z*x - p^-1*x*z")
        .unwrap()
        .relation("zy", "z*y - p*y*z")
        .unwrap()
        .relation("yx", "y*x - q*x*y - hbar*z")
        .unwrap();
    assert!(confluent(&edited));
}

#[test]
fn dropping_a_commutation_relation_breaks_confluence() {
    let mut p = family("wess");
    p.relations.retain(|r| r.label != "Lambda_x");
    let rep = check_confluence(&p.rewrite_system().unwrap(), 6).unwrap();
    assert!(!rep.confluent);
    assert!(rep
        .unresolved
        .iter()
        .any(|c| c.overlap.render(&p.alphabet) == "x*p*Lambda"));
}

#[test]
fn schmudgen_irreducible_words_separate_x_and_p() {
    for p in [family("schmudgen"), with_params("schmudgen", &[("relations", "solved")])] {
        let sys = p.rewrite_system().unwrap();
        let (x, pp) = (p.gen("x").unwrap(), p.gen("p").unwrap());
        for len in 0..=6 {
            for w in sys.irreducible_words(len) {
                let l = w.letters();
                assert!(!(l.contains(&x) && l.contains(&pp)), "{}", w.render(&p.alphabet));
            }
        }
    }
}

#[test]
fn ore_data_rebuilds_the_presentation() {
    for (id, tower) in [
        ("wess", &["Lambda", "p", "x"][..]),
        ("wess_schwenk", &["x", "xbar", "p"][..]),
        ("gaddis", &["x", "z", "y"][..]),
        ("classical", &["x_1", "x_2", "x_3", "p_1", "p_2", "p_3"][..]),
    ] {
        let p = family(id);
        let ore = extract_ore(&p, tower).unwrap();
        let rebuilt = ore.rebuild(&p).unwrap();
        let (s1, s2) = (p.rewrite_system().unwrap(), rebuilt.rewrite_system().unwrap());
        let mut r = rng(500);
        for _ in 0..100 {
            let a = random_poly(&p.alphabet, &mut r, 4, 3);
            assert_eq!(s1.normalize(&a).unwrap(), s2.normalize(&a).unwrap(), "{id}");
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(200))]

    #[test]
    fn jacobi_identity(seed in proptest::prelude::any::<u64>()) {
        let p = family("wess");
        let mut r = rng(seed);
        let a = random_poly(&p.alphabet, &mut r, 2, 2);
        let b = random_poly(&p.alphabet, &mut r, 2, 2);
        let c = random_poly(&p.alphabet, &mut r, 2, 2);
        let br = |u: &NCPoly, v: &NCPoly| u.commutator(v).unwrap();
        let j = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
        proptest::prop_assert!(j.is_zero());
        let sys = p.rewrite_system().unwrap();
        let nj = &(&sys.normalize(&br(&a, &br(&b, &c))).unwrap()
            + &sys.normalize(&br(&b, &br(&c, &a))).unwrap())
            + &sys.normalize(&br(&c, &br(&a, &b))).unwrap();
        proptest::prop_assert!(nj.is_zero());
    }
}

#[test]
fn hand_computed_normal_forms() {
    let cases = [
        ("classical", "p_1*x_1", "x_1*p_1 - i*hbar"),
        ("classical", "p_2*x_1", "x_1*p_2"),
        ("schmudgen", "u*u_inv*x", "x"),
        ("wess_schwenk", "p*x", "q*x*p - i*hbar"),
        // y*x -> q*x*y + hbar*z twice, then z*x -> q^-1*x*z.
        ("gaddis", "y*x*x", "q^2*x^2*y + hbar*(q + q^-1)*x*z"),
    ];
    for (id, input, expected) in cases {
        let p = family(id);
        let n = p.rewrite_system().unwrap().normalize(&p.parse(input).unwrap()).unwrap();
        assert_eq!(n, p.parse(expected).unwrap(), "{id}: {input}");
    }
}

#[test]
fn trace_replays_to_the_normal_form() {
    let p = family("gaddis");
    let sys = p.rewrite_system().unwrap();
    let a = p.parse("y*x*x").unwrap();
    let steps = sys.reduce_trace(&a).unwrap();
    let origins: Vec<_> = steps.iter().map(|s| s.origin.as_str()).collect();
    assert_eq!(origins, ["yx", "yx", "zx"]);
    assert_eq!(steps.last().unwrap().result, sys.normalize(&a).unwrap());
    let mut cur = a;
    for s in &steps {
        let c = cur.coeff(&s.word);
        let mut next = cur.clone();
        next.add_term(s.word.clone(), c.neg());
        next = &next + &sys.apply_at(&s.word, s.rule, s.position, &c);
        assert_eq!(next, s.result);
        cur = next;
    }
}

#[test]
fn relation_soundness_survives_renaming_of_labels() {
    let mut p = family("wess_schwenk");
    let first = p.relations.remove(0);
    p.push_relation(Relation::new("renamed", first.poly.clone())).unwrap();
    let sys = p.rewrite_system().unwrap();
    assert!(sys.normalize(&first.poly).unwrap().is_zero());
}
