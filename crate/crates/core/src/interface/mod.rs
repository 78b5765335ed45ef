//! Expression parsing, printing and the presentation file format.

mod doc;
mod format;
mod parse;

pub use doc::{load_presentation, save_presentation};
pub use format::{format_coefficient, format_expr, format_latex, format_plain, machine_json, Style};
pub use parse::{parse_ast, parse_expr, Exponent, Expr, Symbols};
