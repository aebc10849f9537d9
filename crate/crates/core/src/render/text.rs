use num_rational::BigRational;
use num_traits::Signed;

use crate::probability::{exact_repr, format_significant};
use crate::tree::{posterior_from_tree, FrequencyTree};

const LEAF_ROLES: [&str; 4] = ["hits", "H, not E", "false alarms", "not H, not E"];

fn count(value: &BigRational) -> String {
    exact_repr(value)
}

fn signed(value: &BigRational) -> String {
    if value.is_negative() {
        exact_repr(value)
    } else {
        format!("+{}", exact_repr(value))
    }
}

fn centered(text: &str, width: usize) -> String {
    let len = text.chars().count();
    if len >= width {
        return format!("{text} ");
    }
    let left = (width - len) / 2;
    format!("{}{}{}", " ".repeat(left), text, " ".repeat(width - len - left))
}

fn row(cells: &[String], cell_width: usize) -> String {
    cells
        .iter()
        .map(|c| centered(c, cell_width))
        .collect::<String>()
        .trim_end()
        .to_string()
}

/// Fixed-width drawing of the tree: a legend, the three rows (each a line of
/// counts over a line of labels) and the hits / (hits + false alarms) line.
///
/// Lines end with `\n`; trailing spaces are trimmed.
pub fn render_tree_text(tree: &FrequencyTree) -> String {
    let leaves: Vec<String> = tree.leaves().iter().map(|c| count(c)).collect();
    let longest = leaves
        .iter()
        .map(String::len)
        .chain(LEAF_ROLES.iter().map(|r| r.len()))
        .chain([count(&tree.hypothesis_count).len(), count(&tree.complement_count).len()])
        .max()
        .unwrap_or(0);
    let cell = (longest + 2).max(14);

    let mut lines = vec![
        format!("H = {}", tree.hypothesis_label),
        format!("E = {}", tree.evidence_label),
        String::new(),
        row(&[tree.population.to_string()], cell * 4),
        row(&["population".to_string()], cell * 4),
        row(&[count(&tree.hypothesis_count), count(&tree.complement_count)], cell * 2),
        row(&["H".to_string(), "not H".to_string()], cell * 2),
        row(&leaves, cell),
        row(&LEAF_ROLES.map(String::from), cell),
        String::new(),
    ];

    match posterior_from_tree(tree) {
        Ok(posterior) => lines.push(format!(
            "p(H | E) = hits / (hits + false alarms) = {} / ({} + {}) = {}",
            leaves[0],
            leaves[0],
            leaves[2],
            format_significant(posterior.value(), 6)
        )),
        Err(_) => lines.push("p(H | E) undefined: no hits and no false alarms".to_string()),
    }

    if tree.is_rounded() {
        let residuals: Vec<String> = tree.rounding_residuals.iter().map(signed).collect();
        lines.push(format!(
            "counts rounded ({}); leaf residuals: {}",
            tree.rounding,
            residuals.join(", ")
        ));
    } else if !tree.counts_exact {
        lines.push("counts are expected values, not whole numbers".to_string());
    }

    let mut out = lines.join("\n");
    out.push('\n');
    out
}
