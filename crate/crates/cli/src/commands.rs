use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use qheis_core::families::{catalog, extract_ore, FAMILIES};
use qheis_core::interface::{format_expr, format_plain, load_presentation, Style};
use qheis_core::rewrite::check_confluence;
use qheis_core::{Error, ErrorCategory, Presentation};

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    Engine(Error),
    Usage(String),
    /// The command ran but the property it checks does not hold; the
    /// accompanying text is the normal report.
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Engine(e) => match e.category() {
                ErrorCategory::Usage => 1,
                ErrorCategory::Parse => 2,
                ErrorCategory::Engine => 3,
            },
            Failure::Verification(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

pub type Outcome = Result<String, Failure>;

pub fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, Failure> {
    let mut out = BTreeMap::new();
    for kv in raw {
        let Some((k, v)) = kv.split_once('=') else {
            return Err(Failure::Usage(format!("parameter `{kv}` is not of the form name=value")));
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

/// A catalog id, or a path to a presentation file.
pub fn load_algebra(spec: &str, params: &BTreeMap<String, String>) -> Result<Presentation, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        if !params.is_empty() {
            return Err(Failure::Usage(
                "--param applies to catalog families, not presentation files".into(),
            ));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {spec}: {e}")))?;
        return Ok(load_presentation(&text)?);
    }
    Ok(catalog(spec, params)?)
}

pub fn normalize(p: &Presentation, expr: &str, trace: bool, style: Style) -> Outcome {
    let a = p.parse(expr)?;
    let sys = p.rewrite_system()?;
    let mut out = String::new();
    if trace {
        let steps = sys.reduce_trace(&a)?;
        writeln!(out, "   {}", format_plain(&a)).unwrap();
        for (k, s) in steps.iter().enumerate() {
            writeln!(
                out,
                "{:>2} {} at {}[{}]: {}",
                k + 1,
                s.origin,
                s.word.render(&p.alphabet),
                s.position,
                format_plain(&s.result)
            )
            .unwrap();
        }
    }
    writeln!(out, "{}", format_expr(&sys.normalize(&a)?, style)).unwrap();
    Ok(out)
}

pub fn commutator(p: &Presentation, a: &str, b: &str, style: Style) -> Outcome {
    let c = p.parse(a)?.commutator(&p.parse(b)?)?;
    let nf = p.rewrite_system()?.normalize(&c)?;
    Ok(format!("{}\n", format_expr(&nf, style)))
}

pub fn confluence(p: &Presentation, max_overlap: usize) -> Outcome {
    let sys = p.rewrite_system()?;
    let report = check_confluence(&sys, max_overlap)?;
    if report.confluent {
        return Ok(format!(
            "confluent up to overlap length {} ({} critical pairs resolved)\n",
            report.bound, report.pairs_checked
        ));
    }
    let rules = sys.rules();
    let al = sys.alphabet();
    let mut out = format!(
        "not confluent: {} of {} critical pairs unresolved up to overlap length {}\n",
        report.unresolved.len(),
        report.pairs_checked,
        report.bound
    );
    for cp in &report.unresolved {
        writeln!(out, "\noverlap {}", cp.overlap.render(al)).unwrap();
        for (side, (ri, pos), once, nf) in [
            ("left ", cp.left_rule, &cp.left, &cp.left_normal),
            ("right", cp.right_rule, &cp.right, &cp.right_normal),
        ] {
            writeln!(
                out,
                "  {side} {} at {pos}: {} => {}",
                rules[ri].origin,
                format_plain(once),
                format_plain(nf)
            )
            .unwrap();
        }
        writeln!(out, "  difference: {}", format_plain(&(&cp.left_normal - &cp.right_normal)))
            .unwrap();
    }
    Err(Failure::Verification(out))
}

pub fn ore(p: &Presentation, tower: &str) -> Outcome {
    let gens: Vec<&str> = tower.split(',').map(str::trim).filter(|g| !g.is_empty()).collect();
    if gens.len() < 2 {
        return Err(Failure::Usage("--tower needs at least two generators".into()));
    }
    let data = extract_ore(p, &gens)?;
    let mut out = format!("tower {}\n", gens.join(" < "));
    let rows: Vec<[String; 3]> = data
        .entries
        .iter()
        .map(|e| {
            [
                format!("{}*{}", e.adjoined, e.earlier),
                format_plain(&e.sigma),
                format_plain(&e.delta),
            ]
        })
        .collect();
    let w0 = rows.iter().map(|r| r[0].len()).max().unwrap_or(0).max(4);
    let w1 = rows.iter().map(|r| r[1].len()).max().unwrap_or(0).max(5);
    writeln!(out, "{:<w0$}  {:<w1$}  delta", "pair", "sigma").unwrap();
    for [a, b, c] in rows {
        writeln!(out, "{a:<w0$}  {b:<w1$}  {c}").unwrap();
    }
    Ok(out)
}

pub fn families() -> String {
    let mut out = String::new();
    for f in FAMILIES {
        writeln!(out, "{:<20} {}", f.id, f.summary).unwrap();
        for (name, default, meaning) in f.params {
            let sig = format!("{name} = {default}");
            writeln!(out, "    {sig:<20} {meaning}").unwrap();
        }
    }
    out
}

pub fn show(p: &Presentation) -> String {
    qheis_core::interface::save_presentation(p)
}
