use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;

use super::{xml_escape, RenderStyle};
use crate::bayes::{compute_posterior, Scenario};
use crate::error::Result;
use crate::probability::{exact_repr, format_fixed, format_significant};
use crate::tree::{posterior_from_tree, FrequencyTree};

const INK: &str = "#333333";
const NEUTRAL_FILL: &str = "#eeeeee";
const GUIDE: &str = "#999999";

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `percent` % of `extent`. With an integral extent and an integral percent
/// this has at most two decimals, so scaling the extent scales it exactly.
fn pct(extent: u32, percent: i64) -> BigRational {
    BigRational::new((i64::from(extent) * percent).into(), 100.into())
}

fn px(value: &BigRational) -> String {
    format_fixed(value, 2)
}

struct Doc {
    body: String,
}

impl Doc {
    fn new(style: &RenderStyle, title: &str) -> Self {
        let mut body = String::new();
        body.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            body,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" \
             viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"{fs}\">",
            w = style.width,
            h = style.height,
            fs = style.font_size
        );
        let _ = writeln!(body, "  <title>{}</title>", xml_escape(title));
        let _ = writeln!(
            body,
            "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
            style.width, style.height
        );
        Doc { body }
    }

    #[allow(clippy::too_many_arguments)]
    fn rect(
        &mut self,
        id: &str,
        x: &BigRational,
        y: &BigRational,
        width: &BigRational,
        height: &BigRational,
        fill: &str,
        opacity: &str,
        stroke: &str,
    ) {
        let _ = writeln!(
            self.body,
            "  <rect id=\"{id}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{fill}\" \
             fill-opacity=\"{opacity}\" stroke=\"{stroke}\"/>",
            px(x),
            px(y),
            px(width),
            px(height)
        );
    }

    fn line(&mut self, id: Option<&str>, from: (&BigRational, &BigRational), to: (&BigRational, &BigRational), stroke: &str, extra: &str) {
        let id = id.map(|i| format!("id=\"{i}\" ")).unwrap_or_default();
        let _ = writeln!(
            self.body,
            "  <line {id}x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\"{extra}/>",
            px(from.0),
            px(from.1),
            px(to.0),
            px(to.1)
        );
    }

    fn text(&mut self, x: &BigRational, y: &BigRational, anchor: &str, size: Option<u32>, content: &str) {
        let size = size.map(|s| format!(" font-size=\"{s}\"")).unwrap_or_default();
        let _ = writeln!(
            self.body,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"{anchor}\" fill=\"{INK}\"{size}>{}</text>",
            px(x),
            px(y),
            xml_escape(content)
        );
    }

    fn finish(mut self) -> Vec<u8> {
        self.body.push_str("</svg>\n");
        self.body.into_bytes()
    }
}

struct Node<'a> {
    id: &'a str,
    center_pct: i64,
    count: &'a BigRational,
    label: &'a str,
    fill: &'a str,
    opacity: &'a str,
    stroke: &'a str,
}

/// Node boxes sit on three rows; horizontal positions are fixed percentages of
/// the width (root 50, row two 25/75, leaves 12/37/63/88) so x coordinates are
/// linear in `style.width`.
pub fn render_tree_svg(tree: &FrequencyTree, style: &RenderStyle) -> Result<Vec<u8>> {
    style.validate()?;
    let hyp = style.hypothesis_color.as_str();
    let comp = style.complement_color.as_str();
    let fs = rat(i64::from(style.font_size));
    let box_height = &fs * BigRational::new(13.into(), 5.into());
    let half_box_pct = 10;

    let title = format!("Frequency tree of {} ({})", tree.population, tree.rounding);
    let mut doc = Doc::new(style, &title);
    doc.text(
        &pct(style.width, 50),
        &pct(style.height, 8),
        "middle",
        None,
        &format!("H: {}    E: {}", tree.hypothesis_label, tree.evidence_label),
    );

    let rows = [22, 50, 78];
    let root = [Node {
        id: "node-root",
        center_pct: 50,
        count: &BigRational::from_integer(tree.population.into()),
        label: "population",
        fill: NEUTRAL_FILL,
        opacity: "1",
        stroke: INK,
    }];
    let middle = [
        Node { id: "node-hypothesis", center_pct: 25, count: &tree.hypothesis_count, label: "H", fill: hyp, opacity: "0.25", stroke: hyp },
        Node { id: "node-complement", center_pct: 75, count: &tree.complement_count, label: "not H", fill: comp, opacity: "0.25", stroke: comp },
    ];
    let leaves = [
        Node { id: "leaf-hits", center_pct: 12, count: &tree.hits, label: "hits", fill: hyp, opacity: "0.55", stroke: hyp },
        Node { id: "leaf-quiet-hypothesis", center_pct: 37, count: &tree.quiet_hypothesis, label: "H, not E", fill: hyp, opacity: "0.12", stroke: hyp },
        Node { id: "leaf-false-alarms", center_pct: 63, count: &tree.false_alarms, label: "false alarms", fill: comp, opacity: "0.55", stroke: comp },
        Node { id: "leaf-quiet-complement", center_pct: 88, count: &tree.quiet_complement, label: "not H, not E", fill: comp, opacity: "0.12", stroke: comp },
    ];

    let half = BigRational::new(1.into(), 2.into());
    let top_of = |row: usize| pct(style.height, rows[row]) - &box_height * &half;
    let bottom_of = |row: usize| pct(style.height, rows[row]) + &box_height * &half;

    // edges first so boxes paint over their ends
    let edges: [(i64, i64, usize, &str); 6] = [
        (50, 25, 0, hyp),
        (50, 75, 0, comp),
        (25, 12, 1, hyp),
        (25, 37, 1, hyp),
        (75, 63, 1, comp),
        (75, 88, 1, comp),
    ];
    for (from, to, row, color) in edges {
        doc.line(
            None,
            (&pct(style.width, from), &bottom_of(row)),
            (&pct(style.width, to), &top_of(row + 1)),
            color,
            " stroke-width=\"2\"",
        );
    }

    let small = (style.font_size * 4 / 5).max(1);
    for (row, nodes) in [&root[..], &middle[..], &leaves[..]].into_iter().enumerate() {
        let top = top_of(row);
        for node in nodes {
            let center = pct(style.width, node.center_pct);
            let left = pct(style.width, node.center_pct - half_box_pct);
            doc.rect(node.id, &left, &top, &pct(style.width, 2 * half_box_pct), &box_height, node.fill, node.opacity, node.stroke);
            doc.text(&center, &(&top + &fs * BigRational::new(11.into(), 10.into())), "middle", None, &exact_repr(node.count));
            doc.text(&center, &(&top + &fs * BigRational::new(22.into(), 10.into())), "middle", Some(small), node.label);
        }
    }

    if style.show_residuals && tree.is_rounded() {
        let y = bottom_of(2) + &fs;
        for (node, residual) in leaves.iter().zip(&tree.rounding_residuals) {
            let sign = if *residual >= BigRational::from_integer(0.into()) { "+" } else { "" };
            doc.text(&pct(style.width, node.center_pct), &y, "middle", Some(small), &format!("({sign}{})", exact_repr(residual)));
        }
    }

    let footer = match posterior_from_tree(tree) {
        Ok(p) => format!(
            "p(H | E) = hits / (hits + false alarms) = {}/{} = {}",
            exact_repr(&tree.hits),
            exact_repr(&(&tree.hits + &tree.false_alarms)),
            format_significant(p.value(), 6)
        ),
        Err(_) => "p(H | E) undefined: no hits and no false alarms".to_string(),
    };
    doc.text(&pct(style.width, 50), &pct(style.height, 95), "middle", None, &footer);
    Ok(doc.finish())
}

/// Two stacked bars. The top bar is the whole population split at the base
/// rate. The bottom bar is the part showing the evidence: its width is
/// `p(E)` of the top bar and it is split into `p(E and H)` and
/// `p(E and not H)`, so its split falls at the posterior.
///
/// The bottom bar is offset by `base_rate * (1 - p(E))` of the top bar. With
/// that offset the connector between the two split points is vertical exactly
/// when the hit and false-alarm rates agree, and leans right when the hit rate
/// is higher.
pub fn render_proportion_bars_svg(scenario: &Scenario, style: &RenderStyle) -> Result<Vec<u8>> {
    style.validate()?;
    let breakdown = compute_posterior(scenario)?;
    let hyp = style.hypothesis_color.as_str();
    let comp = style.complement_color.as_str();
    let fs = rat(i64::from(style.font_size));

    let left = pct(style.width, 10);
    let span = pct(style.width, 80);
    let bar_height = pct(style.height, 12);
    let top_y = pct(style.height, 28);
    let bottom_y = pct(style.height, 68);

    let base = scenario.base_rate.value();
    let marginal = breakdown.evidence_marginal.value();
    let top_split = &left + &span * base;
    let top_right = &left + &span;
    let bottom_left = &left + &span * base * (BigRational::one() - marginal);
    let bottom_split = &bottom_left + &span * breakdown.joint_hit.value();
    let bottom_right = &bottom_left + &span * marginal;

    let mut doc = Doc::new(style, "Prior and posterior proportions");
    doc.text(
        &pct(style.width, 50),
        &pct(style.height, 8),
        "middle",
        None,
        &format!("H: {}    E: {}", scenario.hypothesis_label, scenario.evidence_label),
    );

    doc.rect("top-hypothesis", &left, &top_y, &(&top_split - &left), &bar_height, hyp, "0.6", hyp);
    doc.rect("top-complement", &top_split, &top_y, &(&top_right - &top_split), &bar_height, comp, "0.6", comp);
    doc.rect("bottom-hit", &bottom_left, &bottom_y, &(&bottom_split - &bottom_left), &bar_height, hyp, "0.6", hyp);
    doc.rect("bottom-false-alarm", &bottom_split, &bottom_y, &(&bottom_right - &bottom_split), &bar_height, comp, "0.6", comp);

    let top_bottom_edge = &top_y + &bar_height;
    let dashed = " stroke-dasharray=\"4 3\"";
    doc.line(Some("edge-left"), (&left, &top_bottom_edge), (&bottom_left, &bottom_y), GUIDE, dashed);
    doc.line(Some("edge-right"), (&top_right, &top_bottom_edge), (&bottom_right, &bottom_y), GUIDE, dashed);
    doc.line(Some("split-connector"), (&top_split, &top_bottom_edge), (&bottom_split, &bottom_y), INK, " stroke-width=\"2\"");

    let above = &top_y - &fs / rat(2);
    doc.text(&left, &above, "start", None, &format!("p(H) = {}", scenario.base_rate));
    doc.text(&top_right, &above, "end", None, &format!("p(not H) = {}", scenario.base_rate.complement()));
    let below = &bottom_y + &bar_height + &fs * BigRational::new(3.into(), 2.into());
    doc.text(&bottom_left, &below, "start", None, &format!("p(E & H) = {}", breakdown.joint_hit));
    doc.text(&bottom_right, &below, "end", None, &format!("p(E & not H) = {}", breakdown.joint_false_alarm));

    doc.text(
        &pct(style.width, 50),
        &pct(style.height, 95),
        "middle",
        None,
        &format!(
            "p(H | E) = {} / {} = {}",
            breakdown.joint_hit,
            breakdown.evidence_marginal,
            format_significant(breakdown.posterior.value(), 6)
        ),
    );
    Ok(doc.finish())
}
