//! The built-in verification cases.

use std::collections::BTreeMap;

use rand::Rng;

use super::checks::{
    power_identity_sides, verify_ore, verify_poly_identity, verify_relation_set_equivalence,
    verify_specialization, CheckOutcome, OreExpectation, PowerSide, Specialization,
};
use super::report::Expected;
use crate::coeffs::{qnumber, Coefficient};
use crate::error::Result;
use crate::families::{catalog, Presentation, Relation, NH};

/// Where a case's presentation comes from.
#[derive(Clone, Debug)]
pub enum Source {
    Catalog(&'static str, Vec<(&'static str, &'static str)>),
    /// A catalog presentation with some relations rewritten, by label.
    Edited {
        base: Box<Source>,
        name: &'static str,
        replace: Vec<(&'static str, &'static str)>,
    },
}

impl Source {
    pub fn catalog(id: &'static str) -> Self {
        Source::Catalog(id, Vec::new())
    }

    pub fn with(id: &'static str, params: &[(&'static str, &'static str)]) -> Self {
        Source::Catalog(id, params.to_vec())
    }

    pub fn build(&self) -> Result<Presentation> {
        match self {
            Source::Catalog(id, params) => {
                let map: BTreeMap<String, String> = params
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect();
                catalog(id, &map)
            }
            Source::Edited {
                base,
                name,
                replace,
            } => {
                let mut p = base.build()?;
                p.name = name.to_string();
                for (label, text) in replace {
                    let poly = p.parse(text)?;
                    match p.relations.iter_mut().find(|r| r.label == *label) {
                        Some(r) => *r = Relation::new(label, poly),
                        None => p.push_relation(Relation::new(label, poly))?,
                    }
                }
                Ok(p)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum Claim {
    PolyIdentity {
        source: Source,
        lhs: &'static str,
        rhs: &'static str,
    },
    RelationSetEquivalence {
        left: Source,
        right: Source,
        depth: usize,
        samples: usize,
    },
    Specialization {
        target: Source,
        spec: Specialization,
    },
    PowerIdentity {
        source: Source,
        side: PowerSide,
        k: u32,
        /// Use `[k]` with `p` set equal to `q`.
        p_equals_q: bool,
    },
    OreMatch {
        source: Source,
        tower: Vec<&'static str>,
        expected: Vec<OreExpectation>,
    },
}

/// `[k]_{q,q} = sum_{i<k} q^(2i-k+1)`.
fn bracket_p_equals_q(k: u32) -> Coefficient {
    let k = k as i32;
    (0..k).fold(Coefficient::zero(), |acc, i| acc.add(&Coefficient::q(2 * i - k + 1)))
}

impl Claim {
    pub fn kind(&self) -> &'static str {
        match self {
            Claim::PolyIdentity { .. } => "poly_identity",
            Claim::RelationSetEquivalence { .. } => "relation_set_equivalence",
            Claim::Specialization { .. } => "specialization",
            Claim::PowerIdentity { .. } => "power_identity",
            Claim::OreMatch { .. } => "ore_match",
        }
    }

    pub fn check(&self, rng: &mut impl Rng) -> Result<CheckOutcome> {
        match self {
            Claim::PolyIdentity { source, lhs, rhs } => {
                let p = source.build()?;
                let sys = p.rewrite_system()?;
                verify_poly_identity(&p.parse(lhs)?, &p.parse(rhs)?, &sys, rng)
            }
            Claim::RelationSetEquivalence {
                left,
                right,
                depth,
                samples,
            } => verify_relation_set_equivalence(&left.build()?, &right.build()?, *depth, *samples, rng),
            Claim::Specialization { target, spec } => verify_specialization(spec, &target.build()?),
            Claim::PowerIdentity {
                source,
                side,
                k,
                p_equals_q,
            } => {
                let p = source.build()?;
                let sys = p.rewrite_system()?;
                let bracket = if *p_equals_q {
                    bracket_p_equals_q(*k)
                } else {
                    qnumber(*k)
                };
                let (lhs, rhs) = power_identity_sides(&p, *side, *k, &bracket)?;
                verify_poly_identity(&lhs, &rhs, &sys, rng)
            }
            Claim::OreMatch {
                source,
                tower,
                expected,
            } => verify_ore(&source.build()?, tower, expected),
        }
    }
}

/// An alternative claim tried when the literal one fails, or evaluated
/// purely for information.
#[derive(Clone, Debug)]
pub struct Reading {
    pub name: String,
    pub claim: Claim,
}

impl Reading {
    fn new(name: &str, claim: Claim) -> Self {
        Self {
            name: name.to_string(),
            claim,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationCase {
    pub id: String,
    pub family: &'static str,
    pub claim: Claim,
    pub expected: Expected,
    pub notes: Vec<String>,
    /// Tried in order when the claim fails; the first that passes turns the
    /// status into a discrepancy.
    pub readings: Vec<Reading>,
    /// Always evaluated; outcomes become annotations.
    pub probes: Vec<Reading>,
}

impl VerificationCase {
    fn new(id: &str, family: &'static str, claim: Claim) -> Self {
        Self {
            id: id.to_string(),
            family,
            claim,
            expected: Expected::Pass,
            notes: Vec::new(),
            readings: Vec::new(),
            probes: Vec::new(),
        }
    }

    fn discrepancy(mut self) -> Self {
        self.expected = Expected::Discrepancy;
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.notes.push(text.to_string());
        self
    }

    fn reading(mut self, name: &str, claim: Claim) -> Self {
        self.readings.push(Reading::new(name, claim));
        self
    }

    fn probe(mut self, name: &str, claim: Claim) -> Self {
        self.probes.push(Reading::new(name, claim));
        self
    }
}

fn wess() -> Source {
    Source::catalog("wess")
}

fn schmudgen() -> Source {
    Source::catalog("schmudgen")
}

fn wess_schwenk() -> Source {
    Source::catalog("wess_schwenk")
}

fn gaddis() -> Source {
    Source::catalog("gaddis")
}

fn gaddis_zx_p() -> Source {
    Source::Edited {
        base: Box::new(gaddis()),
        name: "gaddis (z*x = p^-1*x*z)",
        replace: vec![("zx", "z*x - p^-1*x*z")],
    }
}

fn identity(source: Source, lhs: &'static str, rhs: &'static str) -> Claim {
    Claim::PolyIdentity { source, lhs, rhs }
}

fn equivalence(left: Source, right: Source) -> Claim {
    Claim::RelationSetEquivalence {
        left,
        right,
        depth: 5,
        samples: 100,
    }
}

fn special(target: Source, spec: Specialization) -> Claim {
    Claim::Specialization { target, spec }
}

/// Relations a table row speaks about: those whose exponent is nonzero, or
/// all three when the exponents are all zero or all nonzero.
fn claimed(n: i32, m: i32, l: i32) -> Vec<NH> {
    let picked: Vec<NH> = [(n, NH::XP), (m, NH::XY), (l, NH::YP)]
        .into_iter()
        .filter(|(e, _)| *e != 0)
        .map(|(_, r)| r)
        .collect();
    if picked.is_empty() {
        NH::ALL.to_vec()
    } else {
        picked
    }
}

fn negated(text: &str) -> String {
    format!("-({text})")
}

/// Alternative readings for a table row, in the order they are tried.
fn table_readings(target: &Source, spec: &Specialization) -> Vec<Reading> {
    let variant = |name: &str, f: &dyn Fn(&mut Specialization)| {
        let mut s = spec.clone();
        f(&mut s);
        Reading::new(name, special(target.clone(), s))
    };
    vec![
        variant("passes-with-column-swap (Psi <-> Pi)", &|s| std::mem::swap(&mut s.psi, &mut s.pi)),
        variant("passes-with-column-swap (Psi <-> Phi)", &|s| std::mem::swap(&mut s.psi, &mut s.phi)),
        variant("passes-with-column-swap (Pi <-> Phi)", &|s| std::mem::swap(&mut s.pi, &mut s.phi)),
        variant("index-role swap (l <-> m)", &|s| std::mem::swap(&mut s.l, &mut s.m)),
        variant("sign of Psi flipped", &|s| s.psi = negated(&s.psi)),
        variant("sign of Pi flipped", &|s| s.pi = negated(&s.pi)),
        variant("exponent n negated", &|s| s.n = -s.n),
        variant("q = 1", &|s| s.at_q_one = true),
        variant("classical-limit values (n = m = l = 1, Psi = 1, Pi = Phi = 0, q = 1)", &|s| {
            s.n = 1;
            s.m = 1;
            s.l = 1;
            s.psi = "1".into();
            s.pi = "0".into();
            s.phi = "0".into();
            s.at_q_one = true;
        }),
    ]
}

#[allow(clippy::too_many_arguments)]
fn table_row(
    row: u32,
    family: &'static str,
    target: Source,
    (n, l, m): (i32, i32, i32),
    (psi, pi, phi): (&str, &str, &str),
    rename: (&str, Option<&str>, &str),
    at_q_one: bool,
    expected: Expected,
) -> VerificationCase {
    let mut spec = Specialization::new(n, m, l, psi, pi, phi)
        .rename(rename.0, rename.1, rename.2)
        .claiming(&claimed(n, m, l));
    spec.at_q_one = at_q_one;
    let mut case = VerificationCase::new(
        &format!("unified-row{row:02}-{family}"),
        family,
        special(target.clone(), spec.clone()),
    );
    case.expected = expected;
    case.readings = table_readings(&target, &spec);
    case
}

/// The x-y relation checked under the opposite sign for `Pi`.
fn pi_sign_probe(case: VerificationCase) -> VerificationCase {
    let Claim::Specialization { target, spec } = &case.claim else {
        return case;
    };
    if !spec.relations.contains(&NH::XY) {
        return case;
    }
    let mut s = spec.clone().claiming(&[NH::XY]);
    s.pi = negated(&s.pi);
    let claim = special(target.clone(), s);
    case.probe("x-y relation with the opposite sign convention for Pi", claim)
}

fn examples() -> Vec<VerificationCase> {
    use NH::*;
    let schm = |n, m, l, psi: &str, which: NH| {
        Specialization::new(n, m, l, psi, "0", "0")
            .rename("x", Some("u"), "p")
            .claiming(&[which])
    };
    let sw = |l| {
        Specialization::new(-1, -1, l, "q*hbar^2", "0", "q^-1*hbar^2").rename("x", Some("xbar"), "p")
    };
    vec![
        VerificationCase::new(
            "example-wess",
            "wess",
            special(
                wess(),
                Specialization::new(-1, -1, -1, "hbar^2*Lambda*q^(3/2)", "0", "0")
                    .rename("x", Some("Lambda"), "p"),
            ),
        ),
        VerificationCase::new(
            "example-schmudgen-n1",
            "schmudgen",
            special(schmudgen(), schm(1, 1, 1, "(q^(-1/2) - q^(3/2))*u_inv", XP)),
        )
        .note("the derivation equates with the p-x relation; the instantiated relation is a multiple of the x-p relation"),
        VerificationCase::new(
            "example-schmudgen-n-1",
            "schmudgen",
            special(schmudgen(), schm(-1, 1, 1, "(q^(1/2) - q^(5/2))*hbar^2*u", XP)),
        )
        .note("the derivation equates with the x-p relation; the instantiated relation is a multiple of the p-x relation"),
        VerificationCase::new(
            "example-schmudgen-l0",
            "schmudgen",
            special(schmudgen(), schm(1, 1, 0, "0", YP)),
        ),
        VerificationCase::new(
            "example-schmudgen-m-1",
            "schmudgen",
            special(schmudgen(), schm(1, -1, 1, "0", XY)),
        ),
        VerificationCase::new(
            "example-schmudgen-m1-as-headed",
            "schmudgen",
            special(schmudgen(), schm(1, 1, 1, "0", XY)),
        )
        .discrepancy()
        .note("the example lists Pi = 0 under m = 1 but derives it with m = -1")
        .reading("m = -1 as in the derivation", special(schmudgen(), schm(1, -1, 1, "0", XY))),
        VerificationCase::new("example-wess-schwenk", "wess_schwenk", special(wess_schwenk(), sw(-1))),
        VerificationCase::new(
            "example-wess-schwenk-l0-as-headed",
            "wess_schwenk",
            special(wess_schwenk(), sw(0).claiming(&[YP])),
        )
        .discrepancy()
        .note("the example states l = 0 but derives Phi with l = -1")
        .reading(
            "l = -1 as in the derivation",
            special(wess_schwenk(), sw(-1).claiming(&[YP])),
        ),
        VerificationCase::new(
            "example-qhbar",
            "qhbar",
            special(
                Source::catalog("qhbar"),
                Specialization::new(-1, 1, 1, "hbar^2*q^(3/2)", "0", "0")
                    .rename("x_1", None, "p_1")
                    .claiming(&[XP]),
            ),
        ),
        VerificationCase::new(
            "example-qhbar-quantization",
            "qhbar_quantization",
            special(
                Source::catalog("qhbar_quantization"),
                Specialization::new(1, 1, 1, "D_11", "0", "0")
                    .rename("x_1", None, "p_1")
                    .claiming(&[XP]),
            ),
        ),
        VerificationCase::new(
            "classical-limit-default",
            "classical",
            special(
                Source::catalog("classical"),
                Specialization::new(1, 1, 1, "1", "0", "0")
                    .rename("x_1", Some("x_2"), "p_1")
                    .at_q_one(),
            ),
        )
        .note("y_1 is played by the second position coordinate"),
    ]
    .into_iter()
    .map(pi_sign_probe)
    .collect()
}

fn table() -> Vec<VerificationCase> {
    use Expected::{Discrepancy as D, Pass as P};
    let cl = || Source::catalog("classical");
    let w = ("x", Some("Lambda"), "p");
    let s = ("x", Some("u"), "p");
    let sw = ("x", Some("xbar"), "p");
    let qh = ("x_1", None, "p_1");
    let mut rows = vec![
        table_row(1, "classical", cl(), (1, 1, 1), ("1", "0", "1"), ("x_1", Some("x_2"), "p_1"), true, D),
        table_row(2, "classical", cl(), (0, 0, 0), ("0", "0", "0"), ("x_1", Some("x_2"), "p_3"), false, D),
        table_row(3, "wess", wess(), (-1, 0, 0), ("0", "hbar^2*Lambda*q^(3/2)", "0"), w, false, D),
        table_row(4, "wess", wess(), (0, 0, -1), ("0", "0", "0"), w, false, P),
        table_row(5, "wess", wess(), (0, -1, 0), ("0", "0", "0"), w, false, P),
        table_row(6, "schmudgen", schmudgen(), (0, -1, 0), ("0", "0", "0"), s, false, P),
        table_row(7, "schmudgen", schmudgen(), (0, 0, -1), ("0", "0", "0"), s, false, P),
        table_row(8, "schmudgen", schmudgen(), (-1, 0, 0), ("hbar^2*u*(q^(1/2) - q^(5/2))", "0", "0"), s, false, P),
        table_row(9, "schmudgen", schmudgen(), (1, 0, 0), ("(q^(3/2) - q^(-1/2))*u_inv", "0", "0"), s, false, D),
        table_row(10, "wess_schwenk", wess_schwenk(), (-1, 0, 0), ("q*hbar^2", "0", "0"), sw, false, P),
        table_row(11, "wess_schwenk", wess_schwenk(), (0, -1, 0), ("0", "0", "q^-1*hbar^2"), sw, false, P),
        table_row(12, "wess_schwenk", wess_schwenk(), (0, 0, -1), ("0", "0", "0"), sw, false, P),
        table_row(13, "qhbar", Source::catalog("qhbar"), (-1, 0, 0), ("hbar^2*q^(3/2)", "0", "0"), qh, false, P),
        table_row(
            14,
            "qhbar_quantization",
            Source::catalog("qhbar_quantization"),
            (-1, 0, 0),
            ("D_11", "0", "0"),
            qh,
            false,
            D,
        ),
    ];
    rows[10] = rows[10].clone().probe(
        "q^-1*hbar^2 read as Pi in the x-y relation with m = -1",
        special(
            wess_schwenk(),
            Specialization::new(0, -1, 0, "0", "q^-1*hbar^2", "0")
                .rename("x", Some("xbar"), "p")
                .claiming(&[NH::XY]),
        ),
    );
    rows
}

fn identities() -> Vec<VerificationCase> {
    let px_proof = identity(schmudgen(), "p*x", "-i*q^(-1/2)*u*hbar + i*q^(1/2)*u_inv*hbar");
    let xp_proof = identity(schmudgen(), "x*p", "-i*q^(1/2)*u*hbar + i*q^(-1/2)*u_inv*hbar");
    vec![
        VerificationCase::new(
            "wess-rearranged-identity",
            "wess",
            identity(wess(), "x*p - q^-1*p*x", "i*hbar*Lambda*q^(-1/2)"),
        ),
        VerificationCase::new("schmudgen-px-from-definition", "schmudgen", px_proof.clone()),
        VerificationCase::new("schmudgen-xp-from-definition", "schmudgen", xp_proof.clone()),
        VerificationCase::new(
            "classical-offdiagonal-commute",
            "classical",
            identity(Source::catalog("classical"), "x_1*p_2", "p_2*x_1"),
        ),
        VerificationCase::new(
            "schmudgen-px-as-printed",
            "schmudgen",
            identity(schmudgen(), "p*x", "i*q^(1/2)*u - i*q^(-1/2)*u_inv*hbar"),
        )
        .discrepancy()
        .note("the stated form differs from the derived one in sign and in the placement of hbar")
        .reading("proof-derived form", px_proof),
        VerificationCase::new(
            "schmudgen-xp-as-printed",
            "schmudgen",
            identity(schmudgen(), "x*p", "i*q^(-1/2)*u_inv - i*q^(1/2)*u*hbar"),
        )
        .discrepancy()
        .note("the stated form differs from the derived one in sign and in the placement of hbar")
        .reading("proof-derived form", xp_proof),
    ]
}

fn equivalences() -> Vec<VerificationCase> {
    let solved = Source::with("schmudgen", &[("relations", "solved")]);
    let hq = Source::Edited {
        base: Box::new(gaddis()),
        name: "one-parameter quantum Heisenberg",
        replace: vec![("zx", "q*z*x - x*z"), ("zy", "z*y - q*y*z")],
    };
    vec![
        VerificationCase::new("schmudgen-equivalence", "schmudgen", equivalence(schmudgen(), solved.clone()))
            .note("the replacement relations are taken in their proof-derived form"),
        VerificationCase::new(
            "schmudgen-equivalence-as-printed",
            "schmudgen",
            equivalence(schmudgen(), Source::with("schmudgen", &[("relations", "printed")])),
        )
        .discrepancy()
        .reading("proof-derived forms", equivalence(schmudgen(), solved)),
        VerificationCase::new(
            "wess-rearranged-equivalence",
            "wess",
            equivalence(wess(), Source::with("wess", &[("form", "rearranged")])),
        ),
        VerificationCase::new(
            "gaddis-one-parameter",
            "gaddis",
            equivalence(Source::with("gaddis", &[("p", "q")]), hq),
        ),
    ]
}

fn power_identities(k_max: u32) -> Vec<VerificationCase> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        let claim = |source: Source, side, p_equals_q| Claim::PowerIdentity {
            source,
            side,
            k,
            p_equals_q,
        };
        let mut left = VerificationCase::new(
            &format!("gaddis-power-left-k{k:02}"),
            "gaddis",
            claim(gaddis(), PowerSide::Left, false),
        );
        if k >= 2 {
            left = left
                .discrepancy()
                .note("z*x = q^-1*x*z contributes q^-1 where [k]_{p,q} needs p^-1")
                .reading(
                    "p = q (one-parameter algebra)",
                    claim(Source::with("gaddis", &[("p", "q")]), PowerSide::Left, true),
                )
                .probe(
                    "z*x = p^-1*x*z in place of z*x = q^-1*x*z",
                    claim(gaddis_zx_p(), PowerSide::Left, false),
                );
        }
        out.push(left);
        out.push(VerificationCase::new(
            &format!("gaddis-power-right-k{k:02}"),
            "gaddis",
            claim(gaddis(), PowerSide::Right, false),
        ));
    }
    out
}

fn ore() -> Vec<VerificationCase> {
    let wess_tower = vec!["Lambda", "p", "x"];
    let wess_ore = |delta: &str| Claim::OreMatch {
        source: wess(),
        tower: wess_tower.clone(),
        expected: vec![OreExpectation::new("x", "p", "q^-1*p", delta)],
    };
    vec![
        VerificationCase::new(
            "wess-ore",
            "wess",
            Claim::OreMatch {
                source: wess(),
                tower: wess_tower.clone(),
                expected: vec![
                    OreExpectation::new("x", "Lambda", "q*Lambda", "0"),
                    OreExpectation::twist_only("x", "p", "q^-1*p"),
                    OreExpectation::new("p", "Lambda", "q^-1*Lambda", "0"),
                ],
            },
        ),
        VerificationCase::new("wess-ore-proof-delta", "wess", wess_ore("i*hbar*q^(-1/2)*hbar*Lambda"))
            .discrepancy()
            .note("the proof's derivation for x*p carries hbar twice")
            .reading("single hbar, as read off the x-p relation", wess_ore("i*hbar*q^(-1/2)*Lambda")),
        VerificationCase::new(
            "wess-schwenk-ore",
            "wess_schwenk",
            Claim::OreMatch {
                source: wess_schwenk(),
                tower: vec!["x", "xbar", "p"],
                expected: vec![
                    OreExpectation::new("xbar", "x", "q^-1*x", "0"),
                    OreExpectation::new("p", "xbar", "q^-1*xbar", "-i*hbar*q^-1"),
                    OreExpectation::new("p", "x", "q*x", "-i*hbar"),
                ],
            },
        ),
        VerificationCase::new(
            "gaddis-ore",
            "gaddis",
            Claim::OreMatch {
                source: gaddis(),
                tower: vec!["x", "z", "y"],
                expected: vec![
                    OreExpectation::new("y", "x", "q*x", "hbar*z"),
                    OreExpectation::new("z", "y", "p*y", "0"),
                    OreExpectation::new("z", "x", "q^-1*x", "0"),
                ],
            },
        ),
    ]
}

/// Every built-in case, power identities up to `k_max`.
pub fn corpus(k_max: u32) -> Vec<VerificationCase> {
    let mut all = Vec::new();
    all.extend(identities());
    all.extend(equivalences());
    all.extend(examples());
    all.extend(table());
    all.extend(power_identities(k_max));
    all.extend(ore());
    all
}
