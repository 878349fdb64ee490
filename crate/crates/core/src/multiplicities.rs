//! Tilting multiplicities (T(λ):∇(μ)), decomposition numbers [Δ(λ):L(μ)],
//! the dagger duality between them, and decomposition matrices of blocks.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::{cap_overlay, cocap_overlay, dagger, is_oriented, Cap, Orientation, Overlay};
use crate::diagrams::{arrow_diagram, order_ideal, preceq, Symbol};
use crate::error::Result;
use crate::jantzen::reduced_jsf;
use crate::weights::DominantWeight;

/// ⟨μ, ρ⟩ up to a constant; strictly decreases along ≼.
fn rho_pairing(w: &DominantWeight) -> i64 {
    let n = w.n() as i64;
    w.to_tuple().iter().enumerate().map(|(i, x)| (n - i as i64) * x).sum()
}

/// Sorts so that μ ≼ ν puts ν first; ties broken by descending `to_tuple`.
pub fn sort_by_order(weights: &mut [DominantWeight]) {
    weights.sort_by_cached_key(|w| (std::cmp::Reverse(rho_pairing(w)), std::cmp::Reverse(w.to_tuple())));
}

/// All μ ≼ λ, with λ first and every weight before the weights below it.
pub fn block_below(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<Vec<DominantWeight>> {
    let mut ws = order_ideal(lambda, s1, s2, p)?;
    sort_by_order(&mut ws);
    Ok(ws)
}

/// (T(λ):∇(μ)): 1 iff μ ≼ λ and c_λ on top of μ is oriented.
pub fn tilting_mult(lambda: &DominantWeight, mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<u8> {
    if !preceq(mu, lambda, s1, s2, p)? {
        return Ok(0);
    }
    Ok(u8::from(is_oriented(&cap_overlay(lambda, mu, s1, s2, p)?)))
}

/// [Δ(λ):L(μ)]: 1 iff μ ≼ λ and co_μ on top of λ is oriented.
pub fn decomp_number(lambda: &DominantWeight, mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<u8> {
    if !preceq(mu, lambda, s1, s2, p)? {
        return Ok(0);
    }
    Ok(u8::from(is_oriented(&cocap_overlay(mu, lambda, s1, s2, p)?)))
}

/// [Δ(λ):L(μ)] == (T(μ†):∇(λ†)) on Λ(s, s).
pub fn dagger_duality_check(lambda: &DominantWeight, mu: &DominantWeight, s: usize, p: u32) -> Result<bool> {
    let left = decomp_number(lambda, mu, s, s, p)?;
    let (ld, md) = (dagger(lambda, s, p)?, dagger(mu, s, p)?);
    let right = tilting_mult(&md, &ld, s, s, p)?;
    Ok(left == right)
}

/// A chain λ = ν₀, ν₁, …, μ where each step reverses one ∨…∧ pair.
pub fn order_witness(
    mu: &DominantWeight,
    lambda: &DominantWeight,
    s1: usize,
    s2: usize,
    p: u32,
) -> Result<Option<Vec<DominantWeight>>> {
    if !preceq(mu, lambda, s1, s2, p)? {
        return Ok(None);
    }
    let d = arrow_diagram(lambda, s1, s2, p)?;
    let start = d.linearise()?;
    let target = arrow_diagram(mu, s1, s2, p)?.linearise()?.symbols;
    let mut parent: HashMap<Vec<Symbol>, Vec<Symbol>> = HashMap::new();
    let mut queue = VecDeque::from([start.symbols.clone()]);
    parent.insert(start.symbols.clone(), start.symbols.clone());
    let segments = start.segments();
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            break;
        }
        for seg in &segments {
            for i in seg.clone().filter(|i| cur[*i] == Symbol::Down) {
                for j in (i + 1..seg.end).filter(|j| cur[*j] == Symbol::Up) {
                    let mut next = cur.clone();
                    next.swap(i, j);
                    if !parent.contains_key(&next) {
                        parent.insert(next.clone(), cur.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    let mut chain = vec![target.clone()];
    while chain.last() != Some(&start.symbols) {
        let prev = parent[chain.last().unwrap()].clone();
        chain.push(prev);
    }
    chain.reverse();
    chain.iter().map(|syms| d.with_symbols(syms)?.to_weight()).collect::<Result<_>>().map(Some)
}

/// The value of a multiplicity together with the data that decides it.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub value: u8,
    pub witness: Option<Vec<DominantWeight>>,
    /// Per cap: the two endpoint labels and whether it is oriented.
    pub caps: Vec<CapVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CapVerdict {
    pub left_label: usize,
    pub right_label: usize,
    pub orientation: &'static str,
}

fn cap_verdicts(o: &Overlay) -> Vec<CapVerdict> {
    o.caps
        .caps
        .iter()
        .map(|c: &Cap| CapVerdict {
            left_label: o.arrows.label_at(c.left),
            right_label: o.arrows.label_at(c.right),
            orientation: match o.orientation(c) {
                Orientation::Clockwise => "clockwise",
                Orientation::AntiClockwise => "anticlockwise",
                Orientation::Unoriented => "unoriented",
            },
        })
        .collect()
}

pub fn explain_tilting(lambda: &DominantWeight, mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<Verdict> {
    let witness = order_witness(mu, lambda, s1, s2, p)?;
    if witness.is_none() {
        return Ok(Verdict { value: 0, witness, caps: Vec::new() });
    }
    let o = cap_overlay(lambda, mu, s1, s2, p)?;
    Ok(Verdict { value: u8::from(is_oriented(&o)), witness, caps: cap_verdicts(&o) })
}

pub fn explain_decomp(lambda: &DominantWeight, mu: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<Verdict> {
    let witness = order_witness(mu, lambda, s1, s2, p)?;
    if witness.is_none() {
        return Ok(Verdict { value: 0, witness, caps: Vec::new() });
    }
    let o = cocap_overlay(mu, lambda, s1, s2, p)?;
    Ok(Verdict { value: u8::from(is_oriented(&o)), witness, caps: cap_verdicts(&o) })
}

/// Rows and columns indexed by `weights`; `entries[i][j] = [Δ(wᵢ):L(wⱼ)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub weights: Vec<DominantWeight>,
    pub entries: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixEntry {
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    pub value: u8,
}

impl DecompositionMatrix {
    pub fn size(&self) -> usize {
        self.weights.len()
    }

    pub fn entry(&self, lambda: &DominantWeight, mu: &DominantWeight) -> Option<u8> {
        let i = self.weights.iter().position(|w| w == lambda)?;
        let j = self.weights.iter().position(|w| w == mu)?;
        Some(self.entries[i][j])
    }

    /// Ones on the diagonal, zeros below it (rows run from λ downwards), everything in {0, 1}.
    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| match j.cmp(&i) {
                std::cmp::Ordering::Equal => *v == 1,
                std::cmp::Ordering::Less => *v == 0,
                std::cmp::Ordering::Greater => *v <= 1,
            })
        })
    }

    pub fn rows(&self) -> Vec<MatrixEntry> {
        let mut out = Vec::with_capacity(self.size() * self.size());
        for (i, l) in self.weights.iter().enumerate() {
            for (j, m) in self.weights.iter().enumerate() {
                out.push(MatrixEntry { lambda: l.clone(), mu: m.clone(), value: self.entries[i][j] });
            }
        }
        out
    }
}

impl fmt::Display for DecompositionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        let width = names.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        for (i, name) in names.iter().enumerate() {
            let pad = width - name.chars().count();
            write!(f, "{}{name} |", " ".repeat(pad))?;
            for v in &self.entries[i] {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The decomposition matrix of the ≼-ideal below λ; entries are filled in parallel.
pub fn decomposition_matrix(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<DecompositionMatrix> {
    let weights = block_below(lambda, s1, s2, p)?;
    let entries = weights
        .par_iter()
        .map(|row| weights.iter().map(|col| decomp_number(row, col, s1, s2, p)).collect::<Result<Vec<u8>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionMatrix { weights, entries })
}

/// The reduced Jantzen sum of λ rewritten in the basis of simple characters,
/// using ch Δ(ν) = Σ_μ [Δ(ν):L(μ)] ch L(μ) inside the block below λ.
pub fn jsf_in_simple_basis(lambda: &DominantWeight, s1: usize, s2: usize, p: u32) -> Result<BTreeMap<DominantWeight, BigInt>> {
    let jsf = reduced_jsf::<BigInt>(lambda, p)?;
    let m = decomposition_matrix(lambda, s1, s2, p)?;
    let mut out: BTreeMap<DominantWeight, BigInt> = BTreeMap::new();
    for (nu, c) in jsf.sum.iter() {
        let i = m.weights.iter().position(|w| w == nu).expect("Jantzen targets lie below λ");
        for (j, mu) in m.weights.iter().enumerate() {
            if m.entries[i][j] == 1 {
                *out.entry(mu.clone()).or_default() += c;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::cap_diagram;
    use crate::weights::enumerate_lambda_s1s2;

    fn w(s: &str) -> DominantWeight {
        DominantWeight::parse(7, s).unwrap()
    }

    #[test]
    fn block_of_the_five_seven_example() {
        let block = block_below(&w("3,2/2,1,1"), 2, 3, 5).unwrap();
        let expected: Vec<DominantWeight> =
            ["3,2/2,1,1", "3,1/2,1", "2,2/1,1,1", "3/2", "2,1/1,1", "2/1"].iter().map(|s| w(s)).collect();
        assert_eq!(block.len(), 6);
        assert_eq!(block[0], expected[0]);
        let mut a = block.clone();
        let mut b = expected.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn tilting_row() {
        let lambda = w("3,2/2,1,1");
        for (m, v) in [("3,2/2,1,1", 1), ("2,2/1,1,1", 1), ("3,1/2,1", 1), ("2,1/1,1", 1), ("3/2", 0), ("2/1", 0), ("1/-", 0)] {
            assert_eq!(tilting_mult(&lambda, &w(m), 2, 3, 5).unwrap(), v, "μ = {m}");
        }
        assert!(tilting_mult(&w("4,1/-"), &lambda, 2, 3, 5).is_err());
    }

    #[test]
    fn decomposition_numbers() {
        let mu = w("2/1");
        assert_eq!(decomp_number(&w("3,1/2,1"), &mu, 2, 3, 5).unwrap(), 1);
        assert_eq!(decomp_number(&w("3,2/2,1,1"), &mu, 2, 3, 5).unwrap(), 0);
        assert_eq!(decomp_number(&mu, &mu, 2, 3, 5).unwrap(), 1);
        assert_eq!(decomp_number(&mu, &w("3,1/2,1"), 2, 3, 5).unwrap(), 0);
    }

    #[test]
    fn matrix_is_sorted_and_unitriangular() {
        for p in [3u32, 5] {
            for (s1, s2) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
                for lambda in enumerate_lambda_s1s2(6, s1, s2, p) {
                    let m = decomposition_matrix(&lambda, s1, s2, p).unwrap();
                    assert!(m.is_unitriangular(), "{lambda} p={p}");
                    let capless = cap_diagram(&lambda, s1, s2, p).unwrap().is_capless();
                    assert_eq!(capless, m.size() == 1);
                    for (i, a) in m.weights.iter().enumerate() {
                        for b in &m.weights[i + 1..] {
                            assert!(!preceq(a, b, s1, s2, p).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn witness_chain() {
        let lambda = w("3,2/2,1,1");
        let chain = order_witness(&w("2/1"), &lambda, 2, 3, 5).unwrap().unwrap();
        assert_eq!(chain.first(), Some(&lambda));
        assert_eq!(chain.last(), Some(&w("2/1")));
        for pair in chain.windows(2) {
            assert!(preceq(&pair[1], &pair[0], 2, 3, 5).unwrap());
        }
        assert_eq!(order_witness(&lambda, &w("2/1"), 2, 3, 5).unwrap(), None);
        let v = explain_tilting(&lambda, &w("3/2"), 2, 3, 5).unwrap();
        assert_eq!(v.value, 0);
        assert!(v.caps.iter().any(|c| c.orientation == "unoriented"));
    }

    #[test]
    fn jantzen_layer_positivity() {
        for p in [3u32, 5] {
            for (s1, s2) in [(1, 1), (2, 2), (2, 3)] {
                for lambda in enumerate_lambda_s1s2(7, s1, s2, p) {
                    let l = jsf_in_simple_basis(&lambda, s1, s2, p).unwrap();
                    assert!(l.values().all(|v| *v > BigInt::zero()));
                    assert!(!l.contains_key(&lambda));
                    for mu in block_below(&lambda, s1, s2, p).unwrap().iter().skip(1) {
                        if decomp_number(&lambda, mu, s1, s2, p).unwrap() == 1 {
                            assert!(l.contains_key(mu), "{lambda} {mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn duality_on_example_block() {
        let s = 2;
        for lambda in enumerate_lambda_s1s2(6, s, s, 5) {
            for mu in block_below(&lambda, s, s, 5).unwrap() {
                assert!(dagger_duality_check(&lambda, &mu, s, 5).unwrap());
            }
        }
    }
}
