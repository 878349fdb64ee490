//! The walled Brauer algebra B_{r,s}(δ): its diagram basis, multiplication,
//! the bases and ranks of the quotients Z_t, cell module dimensions, and
//! decomposition numbers obtained from the GL_n side.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::caps::cap_overlay;
use crate::characters::{binomial, factorial, specht_dim};
use crate::diagrams::preceq;
use crate::error::{Error, Result};
use crate::multiplicities::tilting_mult;
use crate::scalar::Coefficient;
use crate::weights::{check_wall_params, DominantWeight, Partition};

/// A polynomial in δ with coefficients in `C`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// c·δ^k
    pub fn monomial(k: usize, c: C) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, delta: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * delta.clone() + c.clone())
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[C], i: usize| v.get(i).cloned().unwrap_or_else(C::zero);
        Polynomial::from_coeffs((0..len).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "δ")?,
                1 => write!(f, "{abs}δ")?,
                _ if unit => write!(f, "δ^{k}")?,
                _ => write!(f, "{abs}δ^{k}")?,
            }
        }
        Ok(())
    }
}

/// A walled Brauer diagram on top nodes T1..T(r+s) and bottom nodes
/// B1..B(r+s), the wall sitting after node r in both rows.
///
/// Vertex `i < r+s` is T(i+1), vertex `r+s+i` is B(i+1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalledDiagram {
    r: usize,
    s: usize,
    partner: Vec<usize>,
}

impl WalledDiagram {
    fn m(&self) -> usize {
        self.r + self.s
    }

    fn is_left(&self, v: usize) -> bool {
        v % self.m() < self.r
    }

    fn is_top(&self, v: usize) -> bool {
        v < self.m()
    }

    pub fn identity(r: usize, s: usize) -> Self {
        let m = r + s;
        let partner = (0..2 * m).map(|v| if v < m { v + m } else { v - m }).collect();
        WalledDiagram { r, s, partner }
    }

    /// Builds a diagram from its edges, checking that it is a perfect matching
    /// whose vertical edges stay on one side and whose horizontal edges cross the wall.
    pub fn from_pairs(r: usize, s: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let m = r + s;
        let mut partner = vec![usize::MAX; 2 * m];
        for &(a, b) in pairs {
            if a >= 2 * m || b >= 2 * m || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::Parse(format!("not a perfect matching on {} vertices", 2 * m)));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::Parse("some vertex has no edge".into()));
        }
        let d = WalledDiagram { r, s, partner };
        for v in 0..2 * m {
            let w = d.partner[v];
            let vertical = d.is_top(v) != d.is_top(w);
            let same_side = d.is_left(v) == d.is_left(w);
            if vertical != same_side {
                return Err(Error::Parse(format!(
                    "edge {}-{} violates the wall",
                    d.vertex_name(v),
                    d.vertex_name(w)
                )));
            }
        }
        Ok(d)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// Edges as vertex pairs (a, b) with a < b, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|v| *v < self.partner[*v]).map(|v| (v, self.partner[v])).collect()
    }

    pub fn vertex_name(&self, v: usize) -> String {
        let m = self.m();
        if v < m {
            format!("T{}", v + 1)
        } else {
            format!("B{}", v - m + 1)
        }
    }

    /// Number of horizontal edges in the bottom row.
    pub fn bottom_horizontal(&self) -> usize {
        self.pairs().iter().filter(|(a, b)| !self.is_top(*a) && !self.is_top(*b)).count()
    }

    /// Stacks `self` on top of `other`, returning the composite and the number of closed loops.
    pub fn compose(&self, other: &WalledDiagram) -> Result<(WalledDiagram, usize)> {
        if self.r != other.r || self.s != other.s {
            return Err(Error::ShapeMismatch(self.r, self.s, other.r, other.s));
        }
        let m = self.m();
        // composite nodes: 0..m top of self, m..2m middle, 2m..3m bottom of other
        let via_upper = |x: usize| self.partner[x];
        let via_lower = |x: usize| other.partner[x - m] + m;
        let mut visited_mid = vec![false; m];
        let mut partner = vec![0; 2 * m];
        let to_result = |x: usize| if x < m { x } else { x - m };
        for start in (0..m).chain(2 * m..3 * m) {
            let mut upper = start < m;
            let mut cur = start;
            loop {
                cur = if upper { via_upper(cur) } else { via_lower(cur) };
                if (m..2 * m).contains(&cur) {
                    visited_mid[cur - m] = true;
                    upper = !upper;
                } else {
                    break;
                }
            }
            partner[to_result(start)] = to_result(cur);
        }
        let mut loops = 0;
        for k in 0..m {
            if visited_mid[k] {
                continue;
            }
            loops += 1;
            let mut cur = k + m;
            let mut upper = true;
            loop {
                visited_mid[cur - m] = true;
                cur = if upper { via_upper(cur) } else { via_lower(cur) };
                upper = !upper;
                if cur == k + m {
                    break;
                }
            }
        }
        Ok((WalledDiagram { r: self.r, s: self.s, partner }, loops))
    }
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.pairs().iter().map(|(a, b)| format!("{}-{}", self.vertex_name(*a), self.vertex_name(*b))).collect();
        write!(f, "{} {} | {}", self.r, self.s, edges.join(","))
    }
}

fn parse_vertex(tok: &str, m: usize) -> Result<usize> {
    let bad = || Error::Parse(format!("bad vertex '{tok}'"));
    let (row, idx) = tok.split_at(tok.char_indices().nth(1).map_or(tok.len(), |(i, _)| i));
    let k: usize = idx.parse().map_err(|_| bad())?;
    if k == 0 || k > m {
        return Err(bad());
    }
    match row {
        "T" | "t" => Ok(k - 1),
        "B" | "b" => Ok(m + k - 1),
        _ => Err(bad()),
    }
}

impl FromStr for WalledDiagram {
    type Err = Error;

    /// Parses `r s | T1-B1,T2-T3,...`.
    fn from_str(text: &str) -> Result<Self> {
        let (head, body) = text.split_once('|').ok_or_else(|| Error::Parse("expected 'r s | pairs'".into()))?;
        let nums: Vec<usize> = head
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad count '{t}'"))))
            .collect::<Result<_>>()?;
        let [r, s] = nums[..] else {
            return Err(Error::Parse("expected two counts before '|'".into()));
        };
        let m = r + s;
        let pairs = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|edge| {
                let (a, b) = edge.split_once('-').ok_or_else(|| Error::Parse(format!("bad edge '{edge}'")))?;
                Ok((parse_vertex(a.trim(), m)?, parse_vertex(b.trim(), m)?))
            })
            .collect::<Result<Vec<_>>>()?;
        WalledDiagram::from_pairs(r, s, &pairs)
    }
}

/// All (r+s)! walled diagrams: bijections from {T1..Tr} ∪ {B(r+1)..B(r+s)}
/// onto {B1..Br} ∪ {T(r+1)..T(r+s)}.
pub fn enumerate_diagrams(r: usize, s: usize) -> Vec<WalledDiagram> {
    let m = r + s;
    let sources: Vec<usize> = (0..r).chain(m + r..2 * m).collect();
    let targets: Vec<usize> = (m..m + r).chain(r..m).collect();
    (0..m)
        .permutations(m)
        .map(|perm| {
            let mut partner = vec![0; 2 * m];
            for (i, j) in perm.into_iter().enumerate() {
                partner[sources[i]] = targets[j];
                partner[targets[j]] = sources[i];
            }
            WalledDiagram { r, s, partner }
        })
        .collect()
}

/// A linear combination of walled diagrams with coefficients in Z[δ].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalledElement<C> {
    pub r: usize,
    pub s: usize,
    terms: BTreeMap<WalledDiagram, Polynomial<C>>,
}

impl<C: Coefficient> WalledElement<C> {
    pub fn zero(r: usize, s: usize) -> Self {
        WalledElement { r, s, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: WalledDiagram) -> Self {
        let mut e = Self::zero(d.r, d.s);
        e.add_term(d, Polynomial::one());
        e
    }

    pub fn add_term(&mut self, d: WalledDiagram, c: Polynomial<C>) {
        let slot = self.terms.entry(d).or_insert_with(Polynomial::zero);
        *slot = &*slot + &c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WalledDiagram, &Polynomial<C>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &WalledDiagram) -> Polynomial<C> {
        self.terms.get(d).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if (self.r, self.s) != (other.r, other.s) {
            return Err(Error::ShapeMismatch(self.r, self.s, other.r, other.s));
        }
        let mut out = Self::zero(self.r, self.s);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (d, loops) = a.compose(b)?;
                out.add_term(d, &(ca * cb) * &Polynomial::monomial(loops, C::one()));
            }
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Display for WalledElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})·[{d}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The product a·b: a stacked on top of b, one factor δ per closed loop.
pub fn multiply<C: Coefficient>(a: &WalledDiagram, b: &WalledDiagram) -> Result<WalledElement<C>> {
    let (d, loops) = a.compose(b)?;
    let mut e = WalledElement::zero(a.r, a.s);
    e.add_term(d, Polynomial::monomial(loops, C::one()));
    Ok(e)
}

/// Rank of Z_{t,i} as a free right module over the group algebra of
/// Sym_{r-t} × Sym_{s-t}; only i = 0 (that is, Z_t) has a closed form.
pub fn ideal_rank(r: usize, s: usize, t: usize, i: usize) -> Result<BigInt> {
    if t + i > r.min(s) {
        return Ok(BigInt::zero());
    }
    if i != 0 {
        return Err(Error::NotApplicable(format!("rank of Z_(t,i) is only tabulated for i = 0, got i = {i}")));
    }
    Ok(binomial(r, t) * binomial(s, t) * factorial(t))
}

/// Diagrams whose vertical edges do not cross and whose bottom row has exactly
/// t horizontal edges, the j-th joining the j-th nodes to the left and right
/// of the wall counted outwards from it.
pub fn z_t_basis(r: usize, s: usize, t: usize) -> Vec<WalledDiagram> {
    let m = r + s;
    enumerate_diagrams(r, s)
        .into_iter()
        .filter(|d| {
            let bottom_ok = d.bottom_horizontal() == t
                && (1..=t).all(|j| r >= j && d.partner(m + r - j) == m + r + j - 1);
            let verticals: Vec<(usize, usize)> =
                (0..m).filter(|v| d.partner(*v) >= m).map(|v| (v, d.partner(v) - m)).collect();
            let uncrossed = verticals.windows(2).all(|w| w[0].1 < w[1].1);
            bottom_ok && uncrossed
        })
        .collect()
}

fn label_t(lambda1: &Partition, lambda2: &Partition, r: usize, s: usize) -> Option<usize> {
    let (a, b) = (lambda1.size() as usize, lambda2.size() as usize);
    (a <= r && b <= s && r - a == s - b).then(|| r - a)
}

/// dim 𝒮(λ¹, λ²) = C(r,t) C(s,t) t! dim S(λ¹) dim S(λ²).
pub fn specht_dim_walled(lambda1: &Partition, lambda2: &Partition, r: usize, s: usize) -> Result<BigInt> {
    let t = label_t(lambda1, lambda2, r, s)
        .ok_or_else(|| Error::NotInLambdaRS(format!("({lambda1}, {lambda2})"), r, s))?;
    Ok(ideal_rank(r, s, t, 0)? * BigInt::from(specht_dim(lambda1)) * BigInt::from(specht_dim(lambda2)))
}

/// All cell labels (λ¹, λ²) with |λ¹| = r - t and |λ²| = s - t for some t.
pub fn cell_labels(r: usize, s: usize) -> Vec<(Partition, Partition)> {
    (0..=r.min(s))
        .flat_map(|t| {
            let left = Partition::all_of_size((r - t) as u32);
            let right = Partition::all_of_size((s - t) as u32);
            left.into_iter().cartesian_product(right).collect::<Vec<_>>()
        })
        .collect()
}

/// Σ_i n_i² (r-i)! (s-i)! = (r+s)! with n_i = C(r,i) C(s,i) i!.
pub fn dimension_identity_check(r: usize, s: usize) -> bool {
    let lhs: BigInt = (0..=r.min(s))
        .map(|i| {
            let n_i = binomial(r, i) * binomial(s, i) * factorial(i);
            &n_i * &n_i * factorial(r - i) * factorial(s - i)
        })
        .sum();
    lhs == factorial(r + s)
}

/// Σ over cell labels of (dim 𝒮)² = (r+s)!.
pub fn cellular_identity_check(r: usize, s: usize) -> bool {
    let total: BigInt = cell_labels(r, s)
        .iter()
        .map(|(a, b)| {
            let d = specht_dim_walled(a, b, r, s).expect("labels are valid");
            &d * &d
        })
        .sum();
    total == factorial(r + s)
}

/// A request for [𝒮(μ¹,μ²) : 𝒟(λ¹,λ²)] in B_{r,s}(δ) over characteristic p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalledQuery {
    pub mu1: Partition,
    pub mu2: Partition,
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub r: usize,
    pub s: usize,
    pub delta: i64,
    pub p: u32,
}

/// The GL_n data a walled query was transported to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub n: usize,
    pub s1: usize,
    pub s2: usize,
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
}

fn check_query(q: &WalledQuery) -> Result<()> {
    let na = |m: String| Err(Error::NotApplicable(m));
    if !crate::jantzen::is_prime(q.p) {
        return Err(crate::error::invalid(format!("characteristic p = {} is not prime", q.p)));
    }
    if label_t(&q.lambda1, &q.lambda2, q.r, q.s).is_none() {
        return na(format!("r - |λ¹| = s - |λ²| >= 0 fails for λ = ({}, {})", q.lambda1, q.lambda2));
    }
    if label_t(&q.mu1, &q.mu2, q.r, q.s).is_none() {
        return na(format!("r - |μ¹| = s - |μ²| >= 0 fails for μ = ({}, {})", q.mu1, q.mu2));
    }
    for (h, part) in [(1, &q.lambda1), (2, &q.lambda2)] {
        if part.first() as usize + part.len() > q.p as usize {
            return na(format!("λ^{h}_1 + l(λ^{h}) <= p fails for λ^{h} = {part}"));
        }
    }
    if q.lambda1.is_empty() && q.lambda2.is_empty() && q.r == q.s && q.r >= 1 && q.delta.rem_euclid(q.p as i64) == 0 {
        return na("λ = (∅, ∅) with r = s >= 1 needs δ ≢ 0 mod p".into());
    }
    Ok(())
}

/// Wall parameters for rank n, following s_h = max(l(λ^h), l(μ^h), 1).
fn walls_at(q: &WalledQuery, n: usize) -> Option<(usize, usize)> {
    let s1 = q.lambda1.len().max(q.mu1.len()).max(1);
    let s2 = q.lambda2.len().max(q.mu2.len()).max(1);
    let p = q.p as usize;
    let fits = |s: usize, a: &Partition, b: &Partition| s + a.first() as usize <= p && s + b.first() as usize <= p;
    (fits(s1, &q.lambda1, &q.mu1) && fits(s2, &q.lambda2, &q.mu2) && s1 + s2 <= n && check_wall_params(n, s1, s2, q.p).is_ok())
        .then_some((s1, s2))
}

fn embed_at(q: &WalledQuery, n: usize, s1: usize, s2: usize) -> Result<Embedding> {
    let lambda = DominantWeight::new(n, q.lambda1.clone(), q.lambda2.clone())?;
    let mu = DominantWeight::new(n, q.mu1.clone(), q.mu2.clone())?;
    Ok(Embedding { n, s1, s2, lambda, mu })
}

/// Picks the smallest admissible n ≥ r+s with n ≡ δ mod p, stepping by p up to r+s+3p.
pub fn embed(q: &WalledQuery) -> Result<Embedding> {
    check_query(q)?;
    let p = q.p as i64;
    let base = (q.r + q.s) as i64;
    let first = base + (q.delta - base).rem_euclid(p);
    let mut n = first as usize;
    while n as i64 <= base + 3 * p {
        if let Some((s1, s2)) = walls_at(q, n) {
            return embed_at(q, n, s1, s2);
        }
        n += q.p as usize;
    }
    Err(Error::NotApplicable(format!(
        "no n <= r + s + 3p with n ≡ δ mod p admits walls s1, s2 containing λ and μ"
    )))
}

/// [𝒮(μ¹,μ²) : 𝒟(λ¹,λ²)], read off as the tilting multiplicity (T(λ):∇(μ)) for GL_n.
pub fn walled_decomp_number(q: &WalledQuery) -> Result<u8> {
    let e = embed(q)?;
    tilting_mult(&e.lambda, &e.mu, e.s1, e.s2, q.p)
}

/// The same number computed at a caller-chosen rank n.
pub fn walled_decomp_number_at(q: &WalledQuery, n: usize) -> Result<u8> {
    check_query(q)?;
    if n < q.r + q.s || (n as i64 - q.delta).rem_euclid(q.p as i64) != 0 {
        return Err(Error::NotApplicable(format!("n = {n} needs n >= r + s and n ≡ δ mod p")));
    }
    let (s1, s2) = walls_at(q, n).ok_or_else(|| Error::NotApplicable(format!("no admissible walls at n = {n}")))?;
    let e = embed_at(q, n, s1, s2)?;
    tilting_mult(&e.lambda, &e.mu, e.s1, e.s2, q.p)
}

/// The ≼ relation and cap orientations behind a walled decomposition number.
pub fn explain_walled(q: &WalledQuery) -> Result<(Embedding, bool, Option<bool>)> {
    let e = embed(q)?;
    let below = preceq(&e.mu, &e.lambda, e.s1, e.s2, q.p)?;
    let oriented = if below {
        Some(crate::caps::is_oriented(&cap_overlay(&e.lambda, &e.mu, e.s1, e.s2, q.p)?))
    } else {
        None
    };
    Ok((e, below, oriented))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    type P = Polynomial<i64>;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_diagrams(1, 0).len(), 1);
        assert_eq!(enumerate_diagrams(1, 1).len(), 2);
        assert_eq!(enumerate_diagrams(2, 2).len(), 24);
        let all = enumerate_diagrams(2, 2);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn contraction_squares_to_delta() {
        let e: WalledDiagram = "1 1 | T1-T2,B1-B2".parse().unwrap();
        let sq = multiply::<i64>(&e, &e).unwrap();
        assert_eq!(sq.coefficient(&e), P::monomial(1, 1));
        assert_eq!(sq.len(), 1);
        let id = WalledDiagram::identity(1, 1);
        assert_eq!(multiply::<i64>(&id, &e).unwrap(), WalledElement::from_diagram(e.clone()));
    }

    #[test]
    fn text_roundtrip_and_wall_rule() {
        for d in enumerate_diagrams(2, 1) {
            assert_eq!(d.to_string().parse::<WalledDiagram>().unwrap(), d);
        }
        assert!("1 1 | T1-B2,T2-B1".parse::<WalledDiagram>().is_err());
        assert!("2 0 | T1-T2,B1-B2".parse::<WalledDiagram>().is_err());
        assert!("1 1 | T1-T2".parse::<WalledDiagram>().is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(ideal_rank(3, 2, 0, 0).unwrap(), BigInt::one());
        assert_eq!(ideal_rank(2, 1, 1, 0).unwrap(), BigInt::from(2));
        assert_eq!(ideal_rank(2, 2, 2, 0).unwrap(), BigInt::from(2));
        assert_eq!(ideal_rank(2, 2, 2, 1).unwrap(), BigInt::zero());
        assert!(ideal_rank(3, 3, 1, 1).is_err());
        for r in 0..=3 {
            for s in 0..=3 {
                for t in 0..=r.min(s) {
                    assert_eq!(BigInt::from(z_t_basis(r, s, t).len()), ideal_rank(r, s, t, 0).unwrap(), "{r} {s} {t}");
                }
            }
        }
    }

    #[test]
    fn specht_dimensions() {
        let e = Partition::empty();
        assert_eq!(specht_dim_walled(&e, &e, 1, 1).unwrap(), BigInt::one());
        assert_eq!(specht_dim_walled(&part("1"), &e, 2, 1).unwrap(), BigInt::from(2));
        assert_eq!(specht_dim_walled(&part("2"), &part("1"), 2, 1).unwrap(), BigInt::one());
        assert!(matches!(specht_dim_walled(&part("2"), &e, 2, 1), Err(Error::NotInLambdaRS(..))));
    }

    #[test]
    fn dimension_identities() {
        assert!(dimension_identity_check(1, 1));
        assert!(dimension_identity_check(2, 1));
        assert!(dimension_identity_check(0, 5));
        assert!(cellular_identity_check(2, 2));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(P::from_coeffs(vec![0, 2, -1]).to_string(), "-δ^2 + 2δ");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_coeffs(vec![3, 0, 0]).degree(), Some(0));
    }

    fn query(mu: &str, lambda: &str) -> WalledQuery {
        let (m1, m2) = mu.split_once('/').unwrap();
        let (l1, l2) = lambda.split_once('/').unwrap();
        WalledQuery { mu1: part(m1), mu2: part(m2), lambda1: part(l1), lambda2: part(l2), r: 5, s: 4, delta: 7, p: 5 }
    }

    #[test]
    fn transported_example() {
        let q = query("3,1/2,1", "3,2/2,1,1");
        assert_eq!(embed(&q).unwrap().n, 12);
        assert_eq!(walled_decomp_number(&q).unwrap(), 1);
        assert_eq!(walled_decomp_number_at(&q, 17).unwrap(), 1);
        assert_eq!(walled_decomp_number(&query("3/2", "3,2/2,1,1")).unwrap(), 0);
        assert_eq!(walled_decomp_number(&query("3,2/2,1,1", "3,2/2,1,1")).unwrap(), 1);
        assert!(matches!(walled_decomp_number(&query("3,2/2", "3,2/2,1,1")), Err(Error::NotApplicable(_))));
        assert!(matches!(walled_decomp_number(&query("3/2", "5/4")), Err(Error::NotApplicable(_))));
        let q0 = WalledQuery { mu1: part("-"), mu2: part("-"), lambda1: part("-"), lambda2: part("-"), r: 2, s: 2, delta: 5, p: 5 };
        assert!(matches!(walled_decomp_number(&q0), Err(Error::NotApplicable(_))));
    }
}
