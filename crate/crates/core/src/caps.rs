//! Cap diagrams c_λ, cap codiagrams co_μ, overlays and the dagger involution.

use std::fmt::Write as _;

use crate::diagrams::{arrow_diagram, preceq, ArrowDiagram, DiagramString, Symbol};
use crate::error::{invalid, Error, Result};
use crate::weights::{in_lambda_s1s2, DominantWeight};

/// c_λ joins ∨ (left) to ∧ (right); co_μ joins ∧ (left) to ∨ (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CapKind {
    Cap,
    Cocap,
}

/// A cap between two linear positions on one side of the distinguished wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cap {
    pub left: usize,
    pub right: usize,
    /// 0 for the segment left of the wall, 1 for the right one.
    pub segment: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    AntiClockwise,
    Unoriented,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapDiagram {
    pub base: DiagramString,
    pub caps: Vec<Cap>,
    pub kind: CapKind,
}

impl CapDiagram {
    /// Caps as label pairs (left label, right label).
    pub fn label_pairs(&self) -> Vec<(usize, usize)> {
        self.caps.iter().map(|c| (self.base.label_at(c.left), self.base.label_at(c.right))).collect()
    }

    pub fn is_capless(&self) -> bool {
        self.caps.is_empty()
    }

    /// Positions that are an endpoint of some cap.
    pub fn endpoints(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.caps.iter().flat_map(|c| [c.left, c.right]).collect();
        v.sort_unstable();
        v
    }

    /// Single arrows not joined by any cap.
    pub fn uncapped_singles(&self) -> Vec<usize> {
        let ends = self.endpoints();
        (0..self.base.p())
            .filter(|k| self.base.symbols[*k].is_single() && ends.binary_search(k).is_err())
            .collect()
    }
}

/// Left-to-right stack matching on each side of the wall: `opener` is pushed,
/// `closer` pops the most recent unmatched opener.
fn match_caps(base: &DiagramString, opener: Symbol, closer: Symbol) -> Vec<Cap> {
    let mut caps = Vec::new();
    for (segment, range) in base.segments().into_iter().enumerate() {
        let mut stack = Vec::new();
        for k in range {
            let s = base.symbols[k];
            if s == opener {
                stack.push(k);
            } else if s == closer {
                if let Some(left) = stack.pop() {
                    caps.push(Cap { left, right: k, segment });
                }
            }
        }
    }
    caps.sort();
    caps
}

pub fn caps_of_string(base: &DiagramString, kind: CapKind) -> CapDiagram {
    let caps = match kind {
        CapKind::Cap => match_caps(base, Symbol::Down, Symbol::Up),
        CapKind::Cocap => match_caps(base, Symbol::Up, Symbol::Down),
    };
    CapDiagram { base: base.clone(), caps, kind }
}

/// c_λ for λ ∈ Λ(s1, s2).
pub fn cap_diagram(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<CapDiagram> {
    let d = arrow_diagram(lambda, s1, s2, p)?;
    Ok(caps_of_string(&d.linearise()?, CapKind::Cap))
}

/// co_μ for μ ∈ Λ(s1, s2).
pub fn co_diagram(mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<CapDiagram> {
    let d = arrow_diagram(mu, s1, s2, p)?;
    Ok(caps_of_string(&d.linearise()?, CapKind::Cocap))
}

/// The caps of one diagram placed on the arrows of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlay {
    pub caps: CapDiagram,
    pub arrows: DiagramString,
}

impl Overlay {
    pub fn orientation(&self, cap: &Cap) -> Orientation {
        match (self.arrows.symbols[cap.left], self.arrows.symbols[cap.right]) {
            (Symbol::Down, Symbol::Up) => Orientation::AntiClockwise,
            (Symbol::Up, Symbol::Down) => Orientation::Clockwise,
            _ => Orientation::Unoriented,
        }
    }

    pub fn orientations(&self) -> Vec<Orientation> {
        self.caps.caps.iter().map(|c| self.orientation(c)).collect()
    }
}

/// Puts the caps of `caps` on top of `arrows`; both must share their single/×/o pattern.
pub fn overlay(caps: &CapDiagram, arrows: &DiagramString) -> Result<Overlay> {
    let same_frame = caps.base.shift == arrows.shift && caps.base.wall == arrows.wall;
    let same_pattern = caps.base.p() == arrows.p()
        && caps
            .base
            .symbols
            .iter()
            .zip(&arrows.symbols)
            .all(|(a, b)| a.is_single() == b.is_single() && (a.is_single() || a == b));
    if !same_frame || !same_pattern {
        return Err(Error::IncompatibleDiagrams);
    }
    Ok(Overlay { caps: caps.clone(), arrows: arrows.clone() })
}

/// True iff every cap has opposite single arrows at its endpoints.
pub fn is_oriented(o: &Overlay) -> bool {
    o.caps.caps.iter().all(|c| o.orientation(c) != Orientation::Unoriented)
}

fn string_of(w: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<DiagramString> {
    arrow_diagram(w, s1, s2, p)?.linearise()
}

/// c_{λμ}: caps of c_λ on the arrows of μ, for μ ≼ λ.
pub fn cap_overlay(lambda: &DominantWeight, mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<Overlay> {
    if !preceq(mu, lambda, s1, s2, p)? {
        return Err(Error::IncompatibleDiagrams);
    }
    overlay(&cap_diagram(lambda, s1, s2, p)?, &string_of(mu, s1, s2, p)?)
}

/// co_{μλ}: caps of co_μ on the arrows of λ, for μ ≼ λ.
pub fn cocap_overlay(mu: &DominantWeight, lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<Overlay> {
    if !preceq(mu, lambda, s1, s2, p)? {
        return Err(Error::IncompatibleDiagrams);
    }
    overlay(&co_diagram(mu, s1, s2, p)?, &string_of(lambda, s1, s2, p)?)
}

/// λ†: the weight whose diagram has every single arrow of λ's reversed.
pub fn dagger(lambda: &DominantWeight, s: usize, p: u32) -> Result<DominantWeight> {
    if 2 * s > lambda.n() {
        return Err(invalid(format!("dagger needs 2s <= n, got s = {s}, n = {}", lambda.n())));
    }
    let d = arrow_diagram(lambda, s, s, p)?;
    let flipped: Vec<Symbol> = d.linearise()?.symbols.iter().map(|s| s.flipped()).collect();
    d.with_symbols(&flipped)?.to_weight()
}

/// [`dagger`] with separate wall parameters; only s1 = s2 is allowed.
pub fn dagger_s1s2(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<DominantWeight> {
    if s1 != s2 {
        return Err(invalid(format!("dagger is defined on Λ(s, s) only, got s1 = {s1}, s2 = {s2}")));
    }
    dagger(lambda, s1, p)
}

/// Text rendering: a bracket row with cap indices over the symbol row,
/// labels underneath.
pub fn render_caps(c: &CapDiagram, arrows: Option<&DiagramString>, unicode: bool) -> String {
    let base = arrows.unwrap_or(&c.base);
    let p = base.p();
    let mut brackets = vec![String::new(); p];
    for (idx, cap) in c.caps.iter().enumerate() {
        brackets[cap.left] = format!("({idx}");
        brackets[cap.right] = format!("{idx})");
    }
    let width = brackets.iter().map(String::len).chain([3, (p - 1).to_string().len() + 1]).max().unwrap();
    let mut rows = [String::new(), String::new(), String::new()];
    for k in 0..p {
        let sym = if unicode { base.symbols[k].unicode() } else { base.symbols[k].ascii() };
        let sep = if k + 1 == base.wall { '!' } else { ' ' };
        let _ = write!(rows[0], "{:^width$} ", brackets[k]);
        let _ = write!(rows[1], "{:^width$}{sep}", sym.to_string());
        let _ = write!(rows[2], "{:^width$} ", base.label_at(k));
    }
    rows.iter().map(|r| r.trim_end()).collect::<Vec<_>>().join("\n")
}

/// SVG drawing: nodes on a horizontal line, caps as arcs above it, the
/// distinguished wall as a vertical bar above the line and the boundary wall
/// as a bar below it.
pub fn render_svg(c: &CapDiagram, arrows: Option<&DiagramString>) -> String {
    let base = arrows.unwrap_or(&c.base);
    let p = base.p();
    let step = 40.0;
    let x = |k: usize| 30.0 + step * k as f64;
    let width = x(p - 1) + 30.0;
    let line_y = 110.0;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"160\" viewBox=\"0 0 {width} 160\">\n"
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{}\" y1=\"{line_y}\" x2=\"{}\" y2=\"{line_y}\" stroke=\"black\"/>",
        x(0),
        x(p - 1)
    );
    for cap in &c.caps {
        let (a, b) = (x(cap.left), x(cap.right));
        let r = (b - a) / 2.0;
        let _ = writeln!(
            svg,
            "  <path d=\"M {a} {line_y} A {r} {r} 0 0 1 {b} {line_y}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>"
        );
    }
    for k in 0..p {
        let cx = x(k);
        let _ = writeln!(svg, "  <circle cx=\"{cx}\" cy=\"{line_y}\" r=\"3\"/>");
        let glyph = match base.symbols[k] {
            Symbol::Empty => "o",
            Symbol::Up => "∧",
            Symbol::Down => "∨",
            Symbol::Cross => "×",
        };
        let _ = writeln!(svg, "  <text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\">{glyph}</text>", line_y + 22.0);
        let _ = writeln!(
            svg,
            "  <text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\" font-size=\"10\">{}</text>",
            line_y + 40.0,
            base.label_at(k)
        );
    }
    if base.wall != 0 {
        let wx = (x(base.wall - 1) + x(base.wall)) / 2.0;
        let _ = writeln!(svg, "  <line x1=\"{wx}\" y1=\"{}\" x2=\"{wx}\" y2=\"{line_y}\" stroke=\"black\" stroke-width=\"2\"/>", line_y - 30.0);
    }
    let bx = x(p - 1) + 20.0;
    let _ = writeln!(svg, "  <line x1=\"{bx}\" y1=\"{line_y}\" x2=\"{bx}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>", line_y + 30.0);
    svg.push_str("</svg>\n");
    svg
}

/// Number of caps, crosses and uncapped single arrows account for all s1 + s2 arrows.
pub fn arrow_bookkeeping(c: &CapDiagram) -> (usize, usize, usize) {
    let crosses = c.base.symbols.iter().filter(|s| **s == Symbol::Cross).count();
    (c.caps.len(), crosses, c.uncapped_singles().len())
}

/// Whether `w` can carry an (s1, s2)-cap diagram at all.
pub fn admits_caps(w: &DominantWeight, s1: usize, s2: usize, p: u32) -> bool {
    in_lambda_s1s2(w, s1, s2, p)
}

#[doc(hidden)]
pub fn diagram_string(d: &ArrowDiagram) -> Result<DiagramString> {
    d.linearise()
}
