//! Integer combinations of Weyl characters χ(μ), Brauer's formula for
//! tensoring with V and V*, Specht dimensions and the ψ_{rs} aggregates.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{coeff, Coefficient};
use crate::weights::{DominantWeight, Partition};

/// A finitely supported Z-combination of Weyl characters of GL_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterCombination<C> {
    n: usize,
    coeffs: BTreeMap<DominantWeight, C>,
}

impl<C: Coefficient> CharacterCombination<C> {
    pub fn zero(n: usize) -> Self {
        CharacterCombination { n, coeffs: BTreeMap::new() }
    }

    /// χ(w) with coefficient one.
    pub fn basis(w: DominantWeight) -> Self {
        let mut c = Self::zero(w.n());
        c.add_term(w, C::one());
        c
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (DominantWeight, C)>) -> Self {
        let mut c = Self::zero(n);
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, w: DominantWeight, k: C) {
        assert_eq!(w.n(), self.n, "weight of rank {} added to a rank-{} combination", w.n(), self.n);
        if k.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(slot) => {
                *slot = slot.clone() + k;
                if slot.is_zero() {
                    self.coeffs.remove(&w);
                }
            }
            None => {
                self.coeffs.insert(w, k);
            }
        }
    }

    pub fn coefficient(&self, w: &DominantWeight) -> C {
        self.coeffs.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &DominantWeight> {
        self.coeffs.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, &C)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        CharacterCombination {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(w, v)| (w.clone(), v.clone() * k.clone())).collect(),
        }
    }

    /// Σ coefficient · dim χ(μ), using the Weyl dimension formula.
    pub fn dimension(&self) -> BigInt {
        self.coeffs.iter().map(|(w, k)| k.to_bigint() * weyl_dimension(w)).sum()
    }

    /// The combination in another coefficient ring, if every value fits.
    pub fn convert<D: Coefficient>(&self) -> Option<CharacterCombination<D>> {
        let mut out = CharacterCombination::zero(self.n);
        for (w, k) in &self.coeffs {
            out.add_term(w.clone(), D::from_bigint(&k.to_bigint())?);
        }
        Some(out)
    }
}

impl<C: Coefficient> Add for CharacterCombination<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (w, k) in rhs.coeffs {
            self.add_term(w, k);
        }
        self
    }
}

impl<C: Coefficient> Neg for CharacterCombination<C> {
    type Output = Self;
    fn neg(self) -> Self {
        CharacterCombination { n: self.n, coeffs: self.coeffs.into_iter().map(|(w, k)| (w, -k)).collect() }
    }
}

impl<C: Coefficient> Sub for CharacterCombination<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

struct Record<'a, C>(&'a DominantWeight, &'a C);

impl<C: Coefficient> Serialize for Record<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("weight", &self.0.bipartition())?;
        let big = self.1.to_bigint();
        match big.to_i64() {
            Some(v) => st.serialize_field("coefficient", &v)?,
            None => st.serialize_field("coefficient", &big.to_string())?,
        }
        st.end()
    }
}

/// Serialises as a list of `{weight, coefficient}` records.
impl<C: Coefficient> Serialize for CharacterCombination<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (w, k) in &self.coeffs {
            seq.serialize_element(&Record(w, k))?;
        }
        seq.end()
    }
}

impl<C: Coefficient> std::fmt::Display for CharacterCombination<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, k)) in self.coeffs.iter().enumerate() {
            let neg = k.is_negative();
            let abs = k.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "χ[{w}]")?;
            } else {
                write!(f, "{abs}·χ[{w}]")?;
            }
        }
        Ok(())
    }
}

/// Which factor a tensor step multiplies by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// The natural module V.
    Natural,
    /// Its dual V*.
    Dual,
}

fn unit_steps(w: &DominantWeight, delta: i64) -> Vec<DominantWeight> {
    let t = w.to_tuple();
    let mut out = Vec::new();
    for i in 0..t.len() {
        let mut u = t.clone();
        u[i] += delta;
        if let Ok(m) = DominantWeight::from_tuple(&u) {
            out.push(m);
        }
    }
    out
}

/// Supp₁(λ): add a box to λ¹ or remove a box from λ², keeping l(μ¹)+l(μ²) ≤ n.
pub fn supp1(w: &DominantWeight) -> Vec<DominantWeight> {
    unit_steps(w, 1)
}

/// Supp₂(λ): remove a box from λ¹ or add a box to λ².
pub fn supp2(w: &DominantWeight) -> Vec<DominantWeight> {
    unit_steps(w, -1)
}

/// Multiplies by ch V or ch V* using Brauer's formula.
pub fn tensor_step<C: Coefficient>(c: &CharacterCombination<C>, factor: Factor) -> CharacterCombination<C> {
    let mut out = CharacterCombination::zero(c.n());
    for (w, k) in c.iter() {
        let targets = match factor {
            Factor::Natural => supp1(w),
            Factor::Dual => supp2(w),
        };
        for m in targets {
            out.add_term(m, k.clone());
        }
    }
    out
}

/// ch V^{⊗r} ⊗ (V*)^{⊗s} in the χ-basis.
pub fn mixed_tensor_character<C: Coefficient>(n: usize, r: usize, s: usize) -> CharacterCombination<C> {
    let mut c = CharacterCombination::basis(DominantWeight::zero(n));
    for _ in 0..r {
        c = tensor_step(&c, Factor::Natural);
    }
    for _ in 0..s {
        c = tensor_step(&c, Factor::Dual);
    }
    c
}

/// Weyl's dimension formula ∏_{i<j} ((λ+ρ)_i - (λ+ρ)_j) / (j - i).
pub fn weyl_dimension(w: &DominantWeight) -> BigInt {
    let x = w.shifted();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            num *= x[i] - x[j];
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// dim S(μ) = |μ|! / ∏ hooks.
pub fn specht_dim(mu: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for k in 1..=mu.size() {
        num *= k;
    }
    let mut den = BigUint::one();
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row as usize {
            den *= mu.hook(i, j);
        }
    }
    num / den
}

/// ψ_{rs} = Σ_{λ¹⊢r, λ²⊢s} d_{λ¹} d_{λ²} χ([λ¹, λ²]).
pub fn psi<C: Coefficient>(r: usize, s: usize, n: usize) -> Result<CharacterCombination<C>> {
    if r + s > n {
        return Err(Error::RankTooSmall { r, s, n });
    }
    let mut out = CharacterCombination::zero(n);
    for a in Partition::all_of_size(r as u32) {
        let da = specht_dim(&a);
        for b in Partition::all_of_size(s as u32) {
            let d = BigInt::from(da.clone() * specht_dim(&b));
            let k = C::from_bigint(&d).ok_or_else(|| Error::InvalidParams("coefficient overflow".into()))?;
            out.add_term(DominantWeight::new(n, a.clone(), b)?, k);
        }
    }
    Ok(out)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// C(r,t) C(s,t) t!
pub fn mixed_multiplicity(r: usize, s: usize, t: usize) -> BigInt {
    binomial(r, t) * binomial(s, t) * factorial(t)
}

/// Σ_t C(r,t) C(s,t) t! ψ_{r-t,s-t}, the right-hand side of the mixed tensor identity.
pub fn psi_expansion<C: Coefficient>(r: usize, s: usize, n: usize) -> Result<CharacterCombination<C>> {
    let mut out = CharacterCombination::zero(n);
    for t in 0..=r.min(s) {
        let k = C::from_bigint(&mixed_multiplicity(r, s, t)).ok_or_else(|| Error::InvalidParams("coefficient overflow".into()))?;
        out = out + psi::<C>(r - t, s - t, n)?.scale(&k);
    }
    Ok(out)
}

/// r·ψ_{r-1,s} + ψ_{r,s+1}, the image of ψ_{rs} under tensoring with V*.
pub fn psi_recursion_rhs<C: Coefficient>(r: usize, s: usize, n: usize) -> Result<CharacterCombination<C>> {
    let up = psi::<C>(r, s + 1, n)?;
    if r == 0 {
        return Ok(up);
    }
    Ok(up + psi::<C>(r - 1, s, n)?.scale(&coeff(r as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, a: &[u32], b: &[u32]) -> DominantWeight {
        DominantWeight::new(n, Partition::from(a), Partition::from(b)).unwrap()
    }

    type Ch = CharacterCombination<BigInt>;

    #[test]
    fn supp_examples() {
        assert_eq!(supp1(&DominantWeight::zero(2)), vec![w(2, &[1], &[])]);
        let mut got = supp1(&w(2, &[1], &[1]));
        got.sort();
        let mut want = vec![w(2, &[2], &[1]), w(2, &[1], &[])];
        want.sort();
        assert_eq!(got, want);

        assert_eq!(supp2(&DominantWeight::zero(3)), vec![w(3, &[], &[1])]);
        let mut got = supp2(&w(3, &[1], &[]));
        got.sort();
        let mut want = vec![DominantWeight::zero(3), w(3, &[1], &[1])];
        want.sort();
        assert_eq!(got, want);
        // n = 1: [1] = (1); only removal of the box survives
        assert_eq!(supp2(&w(1, &[1], &[])), vec![DominantWeight::zero(1)]);
    }

    #[test]
    fn tensor_step_from_trivial() {
        let c: Ch = tensor_step(&Ch::basis(DominantWeight::zero(3)), Factor::Natural);
        assert_eq!(c, Ch::basis(w(3, &[1], &[])));
    }

    #[test]
    fn specht_dims() {
        assert_eq!(specht_dim(&Partition::from(&[1u32, 1, 1][..])), BigUint::from(1u32));
        assert_eq!(specht_dim(&Partition::from(&[2u32, 1][..])), BigUint::from(2u32));
        assert_eq!(specht_dim(&Partition::empty()), BigUint::from(1u32));
        assert_eq!(specht_dim(&Partition::from(&[3u32, 2][..])), BigUint::from(5u32));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi::<BigInt>(0, 0, 2).unwrap(), Ch::basis(DominantWeight::zero(2)));
        assert_eq!(psi::<BigInt>(1, 0, 2).unwrap(), Ch::basis(w(2, &[1], &[])));
        let want = Ch::from_terms(
            3,
            [(w(3, &[2], &[1]), BigInt::from(1)), (w(3, &[1, 1], &[1]), BigInt::from(1))],
        );
        assert_eq!(psi::<BigInt>(2, 1, 3).unwrap(), want);
        assert_eq!(psi::<BigInt>(2, 2, 3), Err(Error::RankTooSmall { r: 2, s: 2, n: 3 }));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&w(3, &[1], &[])), BigInt::from(3));
        assert_eq!(weyl_dimension(&w(3, &[1], &[1])), BigInt::from(8));
        assert_eq!(weyl_dimension(&w(4, &[2], &[])), BigInt::from(10));
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = Ch::basis(w(2, &[1], &[]));
        let z = a.clone() - a.clone();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        let b = a.clone() + a.scale(&BigInt::from(-3));
        assert_eq!(b.to_string(), "-2·χ[1/-]");
    }

    #[test]
    fn serialises_as_records() {
        let a = Ch::from_terms(3, [(w(3, &[2], &[1]), BigInt::from(-2))]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[{"weight":"2/1","coefficient":-2}]"#);
    }
}
