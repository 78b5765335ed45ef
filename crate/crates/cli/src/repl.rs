use std::collections::BTreeMap;
use std::io::{self, BufRead, IsTerminal, Write};

use qheis_core::interface::Style;
use qheis_core::Presentation;

use crate::commands::{self, Failure, Outcome};

const HELP: &str = "\
commands:
  algebra <id|file> [name=value ...]   switch the session algebra
  show                                 print the current presentation
  normalize <expr>                     normal form
  trace <expr>                         normal form with every rule application
  commutator <a> ; <b>                 normal form of [a, b]
  confluence [max-overlap]             critical pair report (default 6)
  ore <g1,g2,...>                      twist/derivation table
  format plain|latex|json              output style
  families                             catalog listing
  help, quit
";

struct Session {
    algebra: Presentation,
    style: Style,
}

impl Session {
    fn execute(&mut self, line: &str) -> Option<Outcome> {
        let (cmd, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let out = match cmd {
            "" => return Some(Ok(String::new())),
            "quit" | "exit" => return None,
            "help" => Ok(HELP.to_string()),
            "families" => Ok(commands::families()),
            "show" => Ok(commands::show(&self.algebra)),
            "algebra" => {
                let mut words = rest.split_whitespace();
                match words.next() {
                    None => Ok(format!("{}\n", self.algebra.name)),
                    Some(id) => {
                        let raw: Vec<String> = words.map(str::to_string).collect();
                        commands::parse_params(&raw)
                            .and_then(|p| commands::load_algebra(id, &p))
                            .map(|p| {
                                let msg = format!("algebra {}\n", p.name);
                                self.algebra = p;
                                msg
                            })
                    }
                }
            }
            "format" => rest
                .parse::<Style>()
                .map(|s| {
                    self.style = s;
                    String::new()
                })
                .map_err(Failure::from),
            "normalize" => commands::normalize(&self.algebra, rest, false, self.style),
            "trace" => commands::normalize(&self.algebra, rest, true, self.style),
            "commutator" => match rest.split_once(';') {
                Some((a, b)) => commands::commutator(&self.algebra, a, b, self.style),
                None => Err(Failure::Usage("usage: commutator <a> ; <b>".into())),
            },
            "confluence" => {
                let n = if rest.is_empty() { Ok(6) } else { rest.parse::<usize>() };
                match n {
                    Ok(n) => commands::confluence(&self.algebra, n),
                    Err(_) => Err(Failure::Usage(format!("bad overlap bound `{rest}`"))),
                }
            }
            "ore" => commands::ore(&self.algebra, rest),
            other => Err(Failure::Usage(format!("unknown command `{other}`; try help"))),
        };
        Some(out)
    }
}

/// Reads commands from stdin until EOF or `quit`. Errors are reported and
/// the session continues.
pub fn run(algebra: &str, params: BTreeMap<String, String>) -> Outcome {
    let mut session = Session {
        algebra: commands::load_algebra(algebra, &params)?,
        style: Style::Plain,
    };
    let interactive = io::stdin().is_terminal();
    let stdout = io::stdout();
    let prompt = |s: &Session| {
        if interactive {
            let mut o = stdout.lock();
            let _ = write!(o, "{}> ", s.algebra.name);
            let _ = o.flush();
        }
    };
    prompt(&session);
    for line in io::stdin().lock().lines() {
        let line = line.map_err(|e| Failure::Usage(format!("reading input: {e}")))?;
        match session.execute(line.trim()) {
            None => break,
            Some(Ok(out)) | Some(Err(Failure::Verification(out))) => print!("{out}"),
            Some(Err(Failure::Usage(msg))) => eprintln!("error: {msg}"),
            Some(Err(Failure::Engine(e))) => eprintln!("error: {e}"),
        }
        prompt(&session);
    }
    Ok(String::new())
}
