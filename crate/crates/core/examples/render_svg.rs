//! Writes a tree diagram and a proportion-bar diagram as SVG.
//!
//! `cargo run --example render_svg -- [output-dir]`

use std::path::PathBuf;

use legal_bayes::{build_tree, render_proportion_bars_svg, render_tree_svg, RenderStyle, RoundingPolicy, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let scenario = Scenario::parse("33%", "0.6", "0.2")?.with_labels("hit-and-run by the blue company", "witness says blue");
    let style = RenderStyle { width: 800, height: 480, ..RenderStyle::default() };

    let tree = build_tree(&scenario, 500, RoundingPolicy::default())?;
    for (name, bytes) in [
        ("tree.svg", render_tree_svg(&tree, &style)?),
        ("bars.svg", render_proportion_bars_svg(&scenario, &style)?),
    ] {
        let path = dir.join(name);
        std::fs::write(&path, &bytes)?;
        println!("wrote {} ({} bytes)", path.display(), bytes.len());
    }
    Ok(())
}
