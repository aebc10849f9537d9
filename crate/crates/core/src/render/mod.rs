//! Deterministic text and SVG drawings.
//!
//! All SVG geometry is computed with exact rationals and written with two
//! decimals, so output bytes never depend on float formatting.

mod svg;
mod text;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use svg::{render_proportion_bars_svg, render_tree_svg};
pub use text::render_tree_text;

/// A `#rrggbb` color literal, stored lowercase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HexColor(String);

impl HexColor {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for HexColor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('#')
            .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_hexdigit()));
        match digits {
            Some(d) => Ok(HexColor(format!("#{}", d.to_ascii_lowercase()))),
            None => Err(Error::Invalid(format!("`{s}` is not a #rrggbb color"))),
        }
    }
}

impl fmt::Display for HexColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderStyle {
    /// Pixels.
    pub width: u32,
    /// Pixels.
    pub height: u32,
    /// Points.
    pub font_size: u32,
    pub hypothesis_color: HexColor,
    pub complement_color: HexColor,
    /// Annotate rounded leaves with `count - expected`.
    pub show_residuals: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            width: 640,
            height: 400,
            font_size: 14,
            hypothesis_color: HexColor("#1f77b4".into()),
            complement_color: HexColor("#d95f02".into()),
            show_residuals: true,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 || self.font_size == 0 {
            return Err(Error::Invalid("render dimensions and font size must be positive".into()));
        }
        Ok(())
    }
}

/// What the `render` subcommand should draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvgKind {
    Tree,
    Bars,
}

impl FromStr for SvgKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg-tree" => Ok(SvgKind::Tree),
            "svg-bars" => Ok(SvgKind::Bars),
            other => Err(Error::Invalid(format!("unknown format `{other}` (expected svg-tree or svg-bars)"))),
        }
    }
}

pub(crate) fn xml_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
