//! Partitions, dominant weights of GL_n written as bipartitions, the dot
//! action and the weight sets used throughout the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from weakly decreasing parts; zeros at the end are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// l(ξ)
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |ξ|
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// ξ_1, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// ξ_1 + l(ξ) - 1, the greatest hook length (0 for ∅).
    pub fn greatest_hook(&self) -> u32 {
        if self.is_empty() {
            0
        } else {
            self.first() + self.len() as u32 - 1
        }
    }

    /// Containment of Young diagrams, ξ ⊆ η.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        Partition((0..cols).map(|c| self.0.iter().filter(|&&r| r as usize > c).count() as u32).collect())
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let arm = self.0[i] - j as u32 - 1;
        let leg = self.0[i + 1..].iter().filter(|&&r| r as usize > j).count() as u32;
        arm + leg + 1
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Partitions obtained by removing one box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `rows` parts, each at most `cols`.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for part in 1..=max {
                cur.push(part);
                rec(rows, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size` with at most `rows` parts.
    pub fn all_up_to(max_size: u32, rows: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(Partition::all_of_size)
            .filter(|p| p.len() <= rows)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse(format!("{s:?} is not weakly decreasing")))
    }
}

impl From<&[u32]> for Partition {
    /// Panics if the slice is not a partition; for literals in tests and examples.
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("literal partition")
    }
}

/// p-core test via beta numbers: with θ = (m-1, ..., 0) and m = l(ξ)+1, every
/// (ξ+θ)_i - lp that is ≥ 0 must itself be a beta number.
pub fn is_p_core(xi: &Partition, p: u32) -> bool {
    assert!(p >= 2, "p must be at least 2");
    let m = xi.len() + 1;
    let beta: Vec<i64> = (0..m).map(|i| xi.part(i) as i64 + (m - 1 - i) as i64).collect();
    beta.iter().all(|&b| {
        let mut v = b - p as i64;
        while v >= 0 {
            if !beta.contains(&v) {
                return false;
            }
            v -= p as i64;
        }
        true
    })
}

/// A dominant weight of GL_n written as [λ¹, λ²].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    n: usize,
    lambda1: Partition,
    lambda2: Partition,
}

impl DominantWeight {
    pub fn new(n: usize, lambda1: Partition, lambda2: Partition) -> Result<Self> {
        if n == 0 {
            return Err(invalid("rank n must be at least 1"));
        }
        if lambda1.len() + lambda2.len() > n {
            return Err(invalid(format!(
                "l({lambda1}) + l({lambda2}) = {} exceeds n = {n}",
                lambda1.len() + lambda2.len()
            )));
        }
        Ok(DominantWeight { n, lambda1, lambda2 })
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight { n, lambda1: Partition::empty(), lambda2: Partition::empty() }
    }

    /// Parses the "a,b/c,d" bipartition format.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let (a, b) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        DominantWeight::new(n, a.parse()?, b.parse()?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda1(&self) -> &Partition {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &Partition {
        &self.lambda2
    }

    /// λ^h for h ∈ {1, 2}.
    pub fn part(&self, h: usize) -> &Partition {
        match h {
            1 => &self.lambda1,
            2 => &self.lambda2,
            _ => panic!("bipartition component must be 1 or 2"),
        }
    }

    /// (λ¹_1, λ¹_2, ..., 0, ..., 0, ..., -λ²_2, -λ²_1)
    pub fn to_tuple(&self) -> Vec<i64> {
        let mut t = vec![0i64; self.n];
        for (i, &x) in self.lambda1.parts().iter().enumerate() {
            t[i] = x as i64;
        }
        for (i, &x) in self.lambda2.parts().iter().enumerate() {
            t[self.n - 1 - i] = -(x as i64);
        }
        t
    }

    pub fn from_tuple(t: &[i64]) -> Result<Self> {
        if t.is_empty() {
            return Err(invalid("empty tuple"));
        }
        if t.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(t.to_vec()));
        }
        let pos: Vec<u32> = t.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
        let neg: Vec<u32> = t.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as u32).collect();
        Ok(DominantWeight { n: t.len(), lambda1: Partition(pos), lambda2: Partition(neg) })
    }

    /// λ + ρ
    pub fn shifted(&self) -> Vec<i64> {
        self.to_tuple().iter().zip(rho(self.n)).map(|(a, b)| a + b).collect()
    }

    /// |λ| = |λ¹| - |λ²|
    pub fn degree(&self) -> i64 {
        self.lambda1.size() as i64 - self.lambda2.size() as i64
    }

    /// |λ¹| + |λ²|
    pub fn total_boxes(&self) -> u32 {
        self.lambda1.size() + self.lambda2.size()
    }

    /// Same weight viewed in a different rank, if it fits.
    pub fn with_rank(&self, n: usize) -> Result<Self> {
        DominantWeight::new(n, self.lambda1.clone(), self.lambda2.clone())
    }

    pub fn bipartition(&self) -> String {
        format!("{}/{}", self.lambda1, self.lambda2)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda1, self.lambda2)
    }
}

impl Serialize for DominantWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.bipartition())
    }
}

/// ρ = (n, n-1, ..., 1)
pub fn rho(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

/// The affine reflection s_{α,l} for α = ε_i - ε_j, with 1-based positions i < j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffineReflection {
    pub i: usize,
    pub j: usize,
    pub level: i64,
}

impl AffineReflection {
    pub fn new(i: usize, j: usize, level: i64) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(invalid(format!("need 1 <= i < j, got i = {i}, j = {j}")));
        }
        Ok(AffineReflection { i, j, level })
    }

    /// a = <x, α∨> - lp
    pub fn shift(&self, x: &[i64], p: u32) -> i64 {
        x[self.i - 1] - x[self.j - 1] - self.level * p as i64
    }

    /// s_{α,l}(x) = x - aα
    pub fn apply(&self, x: &[i64], p: u32) -> Vec<i64> {
        let a = self.shift(x, p);
        let mut y = x.to_vec();
        y[self.i - 1] -= a;
        y[self.j - 1] += a;
        y
    }
}

/// Sorts a shifted weight x = μ + ρ into the dominant chamber.
///
/// Returns `None` when x has a repeated entry (χ(μ) = 0), otherwise the
/// dominant weight sort(x) - ρ and the sign of the sorting permutation.
pub fn dot_sort(x: &[i64]) -> Option<(DominantWeight, i8)> {
    let mut v = x.to_vec();
    let mut sign = 1i8;
    // insertion sort into strictly decreasing order, counting swaps
    for k in 1..v.len() {
        let mut m = k;
        while m > 0 && v[m - 1] < v[m] {
            v.swap(m - 1, m);
            sign = -sign;
            m -= 1;
        }
        if m > 0 && v[m - 1] == v[m] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let n = v.len();
    let t: Vec<i64> = v.iter().zip(rho(n)).map(|(a, b)| a - b).collect();
    Some((DominantWeight::from_tuple(&t).expect("sorted tuple is dominant"), sign))
}

/// λ ∈ Λ_p: λ^h_1 + l(λ^h) ≤ p for h = 1, 2.
pub fn in_lambda_p(w: &DominantWeight, p: u32) -> bool {
    [w.lambda1(), w.lambda2()].iter().all(|x| x.first() + x.len() as u32 <= p)
}

/// Checks s1, s2 ∈ {1, ..., min(n, p)} and s1 + s2 ≤ n.
pub fn check_wall_params(n: usize, s1: usize, s2: usize, p: u32) -> Result<()> {
    let cap = n.min(p as usize);
    if s1 == 0 || s2 == 0 || s1 > cap || s2 > cap {
        return Err(invalid(format!("s1 = {s1}, s2 = {s2} must lie in 1..={cap} (min(n, p))")));
    }
    if s1 + s2 > n {
        return Err(invalid(format!("s1 + s2 = {} exceeds n = {n}", s1 + s2)));
    }
    Ok(())
}

/// λ ∈ Λ(s1, s2): l(λ^h) ≤ s_h ≤ p - λ^h_1.
pub fn in_lambda_s1s2(w: &DominantWeight, s1: usize, s2: usize, p: u32) -> bool {
    [(w.lambda1(), s1), (w.lambda2(), s2)]
        .iter()
        .all(|(x, s)| x.len() <= *s && *s as u32 + x.first() <= p)
}

/// The unique t ≥ 0 with |λ¹| = r - t and |λ²| = s - t, if any.
pub fn in_lambda_rs(w: &DominantWeight, r: usize, s: usize) -> Option<usize> {
    let (a, b) = (w.lambda1().size() as usize, w.lambda2().size() as usize);
    if a > r || b > s || r - a != s - b {
        return None;
    }
    Some(r - a)
}

/// Every weight in Λ(s1, s2) for the given rank, in a fixed order.
pub fn enumerate_lambda_s1s2(n: usize, s1: usize, s2: usize, p: u32) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    if s1 as u32 > p || s2 as u32 > p || s1 + s2 > n {
        return out;
    }
    for a in Partition::all_in_box(s1, p - s1 as u32) {
        for b in Partition::all_in_box(s2, p - s2 as u32) {
            out.push(DominantWeight { n, lambda1: a.clone(), lambda2: b });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::from(v)
    }

    fn w(n: usize, a: &[u32], b: &[u32]) -> DominantWeight {
        DominantWeight::new(n, part(a), part(b)).unwrap()
    }

    #[test]
    fn to_tuple_examples() {
        assert_eq!(w(4, &[3, 1], &[1]).to_tuple(), vec![3, 1, 0, -1]);
        assert_eq!(w(3, &[], &[]).to_tuple(), vec![0, 0, 0]);
        assert_eq!(w(7, &[3, 2], &[2, 1, 1]).to_tuple(), vec![3, 2, 0, 0, -1, -1, -2]);
    }

    #[test]
    fn from_tuple_examples() {
        assert_eq!(DominantWeight::from_tuple(&[3, 1, 0, -1]).unwrap(), w(4, &[3, 1], &[1]));
        assert_eq!(DominantWeight::from_tuple(&[0, 0, 0]).unwrap(), w(3, &[], &[]));
        assert_eq!(DominantWeight::from_tuple(&[2, 1, -3]).unwrap(), w(3, &[2, 1], &[3]));
        assert_eq!(DominantWeight::from_tuple(&[1, 2]), Err(Error::NotDominant(vec![1, 2])));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(4), vec![4, 3, 2, 1]);
        assert_eq!(rho(1), vec![1]);
        assert_eq!(rho(7), vec![7, 6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn reflection_examples() {
        let x = [7, 4, 2, 0];
        assert_eq!(AffineReflection::new(1, 4, 2).unwrap().apply(&x, 3), vec![6, 4, 2, 1]);
        assert_eq!(AffineReflection::new(2, 4, 1).unwrap().apply(&x, 3), vec![7, 3, 2, 1]);
        // a = 7 - 4 - 3 = 0
        let fixed = AffineReflection::new(1, 2, 1).unwrap();
        assert_eq!(fixed.shift(&x, 3), 0);
        assert_eq!(fixed.apply(&x, 3), x.to_vec());
        assert!(AffineReflection::new(2, 2, 0).is_err());
    }

    #[test]
    fn dot_sort_examples() {
        assert_eq!(dot_sort(&[3, 4, 2, 4]), None);
        assert_eq!(dot_sort(&[5, 3, 2, 1]), Some((w(4, &[1], &[]), 1)));
        assert_eq!(dot_sort(&[4, 6, 2, 1]), Some((w(4, &[2, 1], &[]), -1)));
    }

    #[test]
    fn p_core_examples() {
        assert!(is_p_core(&part(&[3, 1]), 3));
        assert!(is_p_core(&part(&[1]), 3));
        assert!(is_p_core(&Partition::empty(), 2));
        assert!(is_p_core(&Partition::empty(), 7));
        assert!(!is_p_core(&part(&[3]), 3));
        assert!(is_p_core(&part(&[2, 1]), 2));
        assert!(!is_p_core(&part(&[2]), 2));
    }

    #[test]
    fn greatest_hook_examples() {
        assert_eq!(part(&[3, 1]).greatest_hook(), 4);
        assert_eq!(Partition::empty().greatest_hook(), 0);
        assert_eq!(part(&[9, 6, 5, 4, 4, 2]).greatest_hook(), 14);
    }

    #[test]
    fn weight_set_predicates() {
        assert!(in_lambda_p(&w(7, &[3, 2], &[2, 1, 1]), 5));
        assert!(!in_lambda_p(&w(4, &[3, 1], &[1]), 3));
        assert!(in_lambda_p(&w(2, &[], &[]), 2));

        assert!(in_lambda_s1s2(&w(7, &[3, 2], &[2, 1, 1]), 2, 3, 5));
        assert!(in_lambda_s1s2(&w(5, &[4], &[4]), 1, 1, 5));
        assert!(!in_lambda_s1s2(&w(7, &[3, 2], &[2, 1, 1]), 1, 3, 5));

        assert_eq!(in_lambda_rs(&w(3, &[1], &[]), 2, 1), Some(1));
        assert_eq!(in_lambda_rs(&w(3, &[], &[]), 3, 3), Some(3));
        assert_eq!(in_lambda_rs(&w(3, &[2], &[2]), 2, 1), None);
    }

    #[test]
    fn parsing_and_display() {
        let x = DominantWeight::parse(7, "3,2/2,1,1").unwrap();
        assert_eq!(x, w(7, &[3, 2], &[2, 1, 1]));
        assert_eq!(x.to_string(), "3,2/2,1,1");
        assert_eq!(DominantWeight::parse(3, "-/-").unwrap(), DominantWeight::zero(3));
        assert_eq!(DominantWeight::parse(3, "2").unwrap(), w(3, &[2], &[]));
        assert!(DominantWeight::parse(2, "1,1/1").is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn box_moves_and_enumeration() {
        assert_eq!(part(&[2, 1]).add_box(), vec![part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1])]);
        assert_eq!(part(&[2, 1]).remove_box(), vec![part(&[1, 1]), part(&[2])]);
        assert_eq!(Partition::all_of_size(4).len(), 5);
        // 2x3 box holds C(5, 2) partitions
        assert_eq!(Partition::all_in_box(2, 3).len(), 10);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[3, 1]).hook(0, 0), 4);
    }
}
