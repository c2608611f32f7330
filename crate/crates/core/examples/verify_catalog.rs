//! Runs a tagged group of catalog checks and prints the text and JSON reports.

use qtsym::identities::{render_json, render_text, run_all, Bounds};

fn main() {
    let tag = std::env::args().nth(1).unwrap_or_else(|| "q-lemmas".into());
    let summary = run_all(&Bounds::new(2, 6), Some(&tag), 4, false).unwrap();
    println!("{}", render_text(&summary, true));
    println!("{}", render_json(&summary, false));
}
