//! Arrow diagrams: p cyclically ordered nodes carrying ∧ arrows below the
//! line (from λ¹) and ∨ arrows above it (from λ²), separated by two walls.
//!
//! Nodes are stored by label, so two diagrams are equal exactly when they
//! agree as cyclic objects. For cap formation and the order ≼ a diagram is
//! linearised starting at the node just right of the wall below the line;
//! the wall above the line is then the distinguished wall that splits the
//! line into a left and a right segment.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::weights::{check_wall_params, dot_sort, in_lambda_s1s2, rho, AffineReflection, DominantWeight, Partition};

/// Content of a node in a diagram whose counts are all ≤ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// o
    Empty,
    /// ∧, an arrow below the line
    Up,
    /// ∨, an arrow above the line
    Down,
    /// ×, one arrow of each kind
    Cross,
}

impl Symbol {
    pub fn ascii(self) -> char {
        match self {
            Symbol::Empty => 'O',
            Symbol::Up => 'A',
            Symbol::Down => 'V',
            Symbol::Cross => 'X',
        }
    }

    pub fn unicode(self) -> char {
        match self {
            Symbol::Empty => 'o',
            Symbol::Up => '∧',
            Symbol::Down => '∨',
            Symbol::Cross => '×',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            'O' | 'o' => Some(Symbol::Empty),
            'A' | '∧' | '^' => Some(Symbol::Up),
            'V' | '∨' | 'v' => Some(Symbol::Down),
            'X' | '×' | 'x' => Some(Symbol::Cross),
            _ => None,
        }
    }

    pub fn is_single(self) -> bool {
        matches!(self, Symbol::Up | Symbol::Down)
    }

    /// Swaps ∧ and ∨; leaves o and × alone.
    pub fn flipped(self) -> Symbol {
        match self {
            Symbol::Up => Symbol::Down,
            Symbol::Down => Symbol::Up,
            s => s,
        }
    }
}

/// An (s1, s2)-arrow diagram with per-label arrow counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowDiagram {
    p: u32,
    n: usize,
    s1: usize,
    s2: usize,
    /// number of ∧ at each label
    up: Vec<u32>,
    /// number of ∨ at each label
    down: Vec<u32>,
}

fn label(v: i64, p: u32) -> usize {
    v.rem_euclid(p as i64) as usize
}

impl ArrowDiagram {
    fn build(w: &DominantWeight, s1: usize, s2: usize, p: u32) -> Self {
        let n = w.n();
        let x = w.shifted();
        let mut up = vec![0; p as usize];
        let mut down = vec![0; p as usize];
        for &v in &x[..s1] {
            up[label(v, p)] += 1;
        }
        for &v in &x[n - s2..] {
            down[label(v, p)] += 1;
        }
        ArrowDiagram { p, n, s1, s2, up, down }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s1(&self) -> usize {
        self.s1
    }

    pub fn s2(&self) -> usize {
        self.s2
    }

    pub fn up_counts(&self) -> &[u32] {
        &self.up
    }

    pub fn down_counts(&self) -> &[u32] {
        &self.down
    }

    /// Label of the node immediately right of the wall below the line (ρ_{s1} mod p).
    pub fn below_gap(&self) -> usize {
        label(rho(self.n)[self.s1 - 1], self.p)
    }

    /// Label of the node immediately right of the wall above the line (s2 + 1 mod p).
    pub fn above_gap(&self) -> usize {
        label(self.s2 as i64 + 1, self.p)
    }

    /// True when no node carries two arrows of the same kind.
    pub fn is_single_form(&self) -> bool {
        self.up.iter().chain(&self.down).all(|&c| c <= 1)
    }

    /// Total number of arrows at each label.
    pub fn node_totals(&self) -> Vec<u32> {
        self.up.iter().zip(&self.down).map(|(a, b)| a + b).collect()
    }

    /// Symbol at a label; `None` in the multiset form.
    pub fn symbol(&self, lab: usize) -> Option<Symbol> {
        match (self.up[lab], self.down[lab]) {
            (0, 0) => Some(Symbol::Empty),
            (1, 0) => Some(Symbol::Up),
            (0, 1) => Some(Symbol::Down),
            (1, 1) => Some(Symbol::Cross),
            _ => None,
        }
    }

    /// Index of the distinguished wall in the linearised order.
    fn wall_index(&self) -> usize {
        (self.above_gap() + self.p as usize - self.below_gap()) % self.p as usize
    }

    /// The deterministic linearisation used for cap formation and ≼.
    pub fn linearise(&self) -> Result<DiagramString> {
        if !self.is_single_form() {
            return Err(invalid("multiset diagrams have no string form"));
        }
        let p = self.p as usize;
        let shift = self.below_gap();
        let symbols = (0..p).map(|k| self.symbol((shift + k) % p).unwrap()).collect();
        Ok(DiagramString { shift, symbols, wall: self.wall_index() })
    }

    /// Rebuilds a diagram with the same parameters from linearised symbols.
    pub fn with_symbols(&self, symbols: &[Symbol]) -> Result<ArrowDiagram> {
        let p = self.p as usize;
        if symbols.len() != p {
            return Err(invalid(format!("expected {p} symbols, got {}", symbols.len())));
        }
        let shift = self.below_gap();
        let mut up = vec![0; p];
        let mut down = vec![0; p];
        for (k, s) in symbols.iter().enumerate() {
            let lab = (shift + k) % p;
            match s {
                Symbol::Up => up[lab] = 1,
                Symbol::Down => down[lab] = 1,
                Symbol::Cross => {
                    up[lab] = 1;
                    down[lab] = 1;
                }
                Symbol::Empty => {}
            }
        }
        let (ups, downs): (u32, u32) = (up.iter().sum(), down.iter().sum());
        if ups as usize != self.s1 || downs as usize != self.s2 {
            return Err(invalid(format!(
                "string has {ups} ∧ and {downs} ∨ but s1 = {}, s2 = {}",
                self.s1, self.s2
            )));
        }
        Ok(ArrowDiagram { up, down, ..self.clone() })
    }

    /// Reads back the weight of a single-form diagram.
    pub fn to_weight(&self) -> Result<DominantWeight> {
        if !self.is_single_form() {
            return Err(invalid("multiset diagrams do not determine a weight"));
        }
        let p = self.p as i64;
        let n = self.n;
        let base = rho(n)[self.s1 - 1];
        let mut below: Vec<i64> = (0..self.p as usize)
            .filter(|&x| self.up[x] == 1)
            .map(|x| base + (x as i64 - base).rem_euclid(p))
            .collect();
        below.sort_unstable_by(|a, b| b.cmp(a));
        let lambda1: Vec<u32> = below.iter().enumerate().map(|(i, v)| (v - (n - i) as i64) as u32).collect();

        let top = self.s2 as i64;
        let mut above: Vec<i64> = (0..self.p as usize)
            .filter(|&x| self.down[x] == 1)
            .map(|x| top - (top - x as i64).rem_euclid(p))
            .collect();
        above.sort_unstable();
        let lambda2: Vec<u32> = above.iter().enumerate().map(|(i, v)| (i as i64 + 1 - v) as u32).collect();
        DominantWeight::new(n, Partition::new(lambda1)?, Partition::new(lambda2)?)
    }
}

/// A linearised single-form diagram: symbols read left to right starting at
/// label `shift`, and the distinguished wall sitting before index `wall`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramString {
    pub shift: usize,
    pub symbols: Vec<Symbol>,
    /// Segments are `[0, wall)` and `[wall, p)`; `wall == 0` means one segment.
    pub wall: usize,
}

impl DiagramString {
    pub fn p(&self) -> usize {
        self.symbols.len()
    }

    /// Label of the node at linear position `k`.
    pub fn label_at(&self, k: usize) -> usize {
        (self.shift + k) % self.p()
    }

    /// Index ranges on either side of the distinguished wall.
    pub fn segments(&self) -> Vec<std::ops::Range<usize>> {
        if self.wall == 0 {
            vec![0..self.p()]
        } else {
            vec![0..self.wall, self.wall..self.p()]
        }
    }

    pub fn segment_of(&self, k: usize) -> usize {
        usize::from(self.wall != 0 && k >= self.wall)
    }

    pub fn ascii(&self) -> String {
        self.symbols.iter().map(|s| s.ascii()).collect()
    }

    pub fn unicode(&self) -> String {
        self.symbols.iter().map(|s| s.unicode()).collect()
    }
}

impl fmt::Display for DiagramString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

/// The arrow diagram of λ ∈ Λ(s1, s2).
pub fn arrow_diagram(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<ArrowDiagram> {
    check_wall_params(lambda.n(), s1, s2, p)?;
    if !in_lambda_s1s2(lambda, s1, s2, p) {
        return Err(invalid(format!("{lambda} is not in Λ({s1},{s2}) for p = {p}")));
    }
    Ok(ArrowDiagram::build(lambda, s1, s2, p))
}

/// The diagram with repeated arrows allowed; needs only l(λ^h) ≤ s_h.
pub fn arrow_diagram_multiset(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<ArrowDiagram> {
    let n = lambda.n();
    if p < 2 || s1 == 0 || s2 == 0 || s1 + s2 > n {
        return Err(invalid(format!("need p >= 2, s1, s2 >= 1 and s1 + s2 <= n; got p = {p}, s1 = {s1}, s2 = {s2}, n = {n}")));
    }
    if lambda.lambda1().len() > s1 || lambda.lambda2().len() > s2 {
        return Err(invalid(format!("{lambda} needs l(λ¹) <= {s1} and l(λ²) <= {s2}")));
    }
    Ok(ArrowDiagram::build(lambda, s1, s2, p))
}

/// Inverse of [`arrow_diagram`].
pub fn diagram_to_weight(d: &ArrowDiagram) -> Result<DominantWeight> {
    d.to_weight()
}

/// Linearisation of a single-form diagram.
pub fn normalise_shift(d: &ArrowDiagram) -> Result<DiagramString> {
    d.linearise()
}

/// Dot-action conjugacy under the affine Weyl group, read off the multiset diagrams.
pub fn is_dot_conjugate(lambda: &DominantWeight, mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<bool> {
    if lambda.n() != mu.n() {
        return Ok(false);
    }
    let a = arrow_diagram_multiset(lambda, s1, s2, p)?;
    let b = arrow_diagram_multiset(mu, s1, s2, p)?;
    Ok(lambda.degree() == mu.degree() && a.node_totals() == b.node_totals())
}

/// Every string reachable from `start` by reversing a ∨…∧ pair of single
/// arrows lying on one side of the distinguished wall.
pub(crate) fn reversal_closure(start: &DiagramString) -> HashSet<Vec<Symbol>> {
    let mut seen: HashSet<Vec<Symbol>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.symbols.clone());
    queue.push_back(start.symbols.clone());
    let segments = start.segments();
    while let Some(cur) = queue.pop_front() {
        for seg in &segments {
            for i in seg.clone() {
                if cur[i] != Symbol::Down {
                    continue;
                }
                for j in i + 1..seg.end {
                    if cur[j] == Symbol::Up {
                        let mut next = cur.clone();
                        next[i] = Symbol::Up;
                        next[j] = Symbol::Down;
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    seen
}

/// Weights obtained from λ by reversing a single ∨…∧ pair on one side of the
/// distinguished wall; these are the targets of the reduced Jantzen sum.
pub fn arrow_pair_targets(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<BTreeSet<DominantWeight>> {
    let d = arrow_diagram(lambda, s1, s2, p)?;
    let lin = d.linearise()?;
    let mut out = BTreeSet::new();
    for seg in lin.segments() {
        for i in seg.clone().filter(|i| lin.symbols[*i] == Symbol::Down) {
            for j in (i + 1..seg.end).filter(|j| lin.symbols[*j] == Symbol::Up) {
                let mut syms = lin.symbols.clone();
                syms.swap(i, j);
                out.insert(d.with_symbols(&syms)?.to_weight()?);
            }
        }
    }
    Ok(out)
}

/// All μ ≼ λ, computed by arrow-pair reversals. Includes λ.
pub fn order_ideal(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<Vec<DominantWeight>> {
    let d = arrow_diagram(lambda, s1, s2, p)?;
    let lin = d.linearise()?;
    let mut out: Vec<DominantWeight> = reversal_closure(&lin)
        .into_iter()
        .map(|syms| d.with_symbols(&syms).and_then(|e| e.to_weight()))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// μ ≼ λ, decided in the arrow diagram of λ.
pub fn preceq(mu: &DominantWeight, lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<bool> {
    let d = arrow_diagram(lambda, s1, s2, p)?;
    if mu.n() != lambda.n() || !in_lambda_s1s2(mu, s1, s2, p) || mu.degree() != lambda.degree() {
        return Ok(false);
    }
    let target = ArrowDiagram::build(mu, s1, s2, p).linearise()?;
    let start = d.linearise()?;
    if target.symbols == start.symbols {
        return Ok(true);
    }
    Ok(reversal_closure(&start).contains(&target.symbols))
}

/// One step of ≼ from its reflection-based definition: dominant sorts of
/// s_{α,l}(λ+ρ) for i ≤ l(λ¹), j > n - l(λ²) and ⟨λ+ρ,α∨⟩ - lp ≥ 1.
pub fn reflection_successors(lambda: &DominantWeight, p: u32) -> Vec<DominantWeight> {
    let n = lambda.n();
    let x = lambda.shifted();
    let (l1, l2) = (lambda.lambda1().len(), lambda.lambda2().len());
    let mut out = Vec::new();
    for i in 1..=l1 {
        for j in n - l2 + 1..=n {
            let gap = x[i - 1] - x[j - 1];
            for level in 1..=(gap - 1).div_euclid(p as i64) {
                let s = AffineReflection { i, j, level };
                if let Some((m, _)) = dot_sort(&s.apply(&x, p)) {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// The set {μ : μ ≼ λ} generated by affine reflections directly.
pub fn oracle_ideal(lambda: &DominantWeight, p: u32) -> BTreeSet<DominantWeight> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(cur) = queue.pop_front() {
        for m in reflection_successors(&cur, p) {
            if seen.insert(m.clone()) {
                queue.push_back(m);
            }
        }
    }
    seen
}

/// μ ≼ λ via chains of affine reflections; independent of arrow diagrams.
pub fn preceq_oracle(mu: &DominantWeight, lambda: &DominantWeight, p: u32) -> bool {
    mu.n() == lambda.n() && mu.degree() == lambda.degree() && oracle_ideal(lambda, p).contains(mu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wall {
    Below,
    Above,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Moves one wall by a node, changing s1 or s2 but not the weight.
pub fn wall_move(d: &ArrowDiagram, which: Wall, dir: Direction) -> Option<ArrowDiagram> {
    if !d.is_single_form() {
        return None;
    }
    let p = d.p as usize;
    let cap = d.n.min(p);
    let mut e = d.clone();
    match (which, dir) {
        (Wall::Below, Direction::Right) => {
            let g = d.below_gap();
            if d.up[g] != 1 || d.s1 == 1 {
                return None;
            }
            e.up[g] = 0;
            e.s1 -= 1;
        }
        (Wall::Below, Direction::Left) => {
            let g = (d.below_gap() + p - 1) % p;
            if d.up[g] != 0 || d.s1 + d.s2 >= d.n || d.s1 + 1 > cap {
                return None;
            }
            e.up[g] = 1;
            e.s1 += 1;
        }
        (Wall::Above, Direction::Left) => {
            let g = (d.above_gap() + p - 1) % p;
            if d.down[g] != 1 || d.s2 == 1 {
                return None;
            }
            e.down[g] = 0;
            e.s2 -= 1;
        }
        (Wall::Above, Direction::Right) => {
            let g = d.above_gap();
            if d.down[g] != 0 || d.s1 + d.s2 >= d.n || d.s2 + 1 > cap {
                return None;
            }
            e.down[g] = 1;
            e.s2 += 1;
        }
    }
    Some(e)
}

/// Header line plus two-row rendering: ∨ and the `!` wall above the node
/// line, ∧ and the `|` wall below it, labels underneath.
pub fn render_two_rows(d: &ArrowDiagram, unicode: bool) -> Result<String> {
    let lin = d.linearise()?;
    let p = lin.p();
    let width = (p - 1).to_string().len().max(1);
    let mut top = String::from(" ");
    let mut line = String::from(" ");
    let mut bottom = String::from("|");
    let mut labels = String::from(" ");
    for (k, s) in lin.symbols.iter().enumerate() {
        let (t, b) = match s {
            Symbol::Empty => ('.', '.'),
            Symbol::Up => ('.', if unicode { '∧' } else { 'A' }),
            Symbol::Down => (if unicode { '∨' } else { 'V' }, '.'),
            Symbol::Cross => (if unicode { '∨' } else { 'V' }, if unicode { '∧' } else { 'A' }),
        };
        top.push_str(&format!("{t:>width$}"));
        top.push(if k + 1 == lin.wall { '!' } else { ' ' });
        line.push_str(&format!("{:>width$} ", "-"));
        bottom.push_str(&format!("{b:>width$} "));
        labels.push_str(&format!("{:>width$} ", lin.label_at(k)));
    }
    Ok(format!(
        "{}\n{}\n{}\n{}\n{}",
        header(d, &lin),
        top.trim_end(),
        line.trim_end(),
        bottom.trim_end(),
        labels.trim_end()
    ))
}

pub fn header(d: &ArrowDiagram, lin: &DiagramString) -> String {
    format!(
        "# p={} n={} s1={} s2={} shift={} below-wall-gap={} above-wall-gap={} wall-index={}",
        d.p,
        d.n,
        d.s1,
        d.s2,
        lin.shift,
        d.below_gap(),
        d.above_gap(),
        lin.wall
    )
}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.linearise() {
            Ok(lin) => write!(f, "{lin}"),
            Err(_) => write!(f, "up={:?} down={:?}", self.up, self.down),
        }
    }
}

/// Parses a linearised ASCII/Unicode string back into a diagram with the
/// given parameters.
pub fn parse_diagram(s: &str, n: usize, s1: usize, s2: usize, p: u32) -> Result<ArrowDiagram> {
    check_wall_params(n, s1, s2, p)?;
    let symbols = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '|' && *c != '!')
        .map(|c| Symbol::from_char(c).ok_or_else(|| Error::Parse(format!("bad diagram symbol {c:?}"))))
        .collect::<Result<Vec<_>>>()?;
    let template = ArrowDiagram { p, n, s1, s2, up: vec![0; p as usize], down: vec![0; p as usize] };
    template.with_symbols(&symbols)
}
