//! The Jantzen sum formula for GL_n, in full and in the reduced form where
//! only roots ε_i - ε_j with i ≤ l(λ¹) and j > n - l(λ²) contribute.

use serde::Serialize;

use crate::characters::CharacterCombination;
use crate::error::{invalid, Result};
use crate::scalar::{coeff, Coefficient};
use crate::weights::{dot_sort, AffineReflection, DominantWeight};

/// One surviving term ν_p(lp)·sign·χ(target) of the sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JsfTerm {
    pub reflection: AffineReflection,
    /// ⟨λ+ρ, α∨⟩ - lp, always ≥ 1.
    pub a: i64,
    /// ν_p(lp) = 1 + ν_p(l)
    pub valuation: u32,
    pub sign: i8,
    pub target: DominantWeight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsfResult<C> {
    pub sum: CharacterCombination<C>,
    pub terms: Vec<JsfTerm>,
}

pub fn p_adic_valuation(mut x: u64, p: u32) -> u32 {
    assert!(x > 0, "valuation of zero");
    let mut v = 0;
    while x % p as u64 == 0 {
        x /= p as u64;
        v += 1;
    }
    v
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(invalid(format!("characteristic p = {p} is not prime")))
    }
}

fn accumulate<C: Coefficient>(
    lambda: &DominantWeight,
    p: u32,
    roots: impl Iterator<Item = (usize, usize)>,
) -> JsfResult<C> {
    let x = lambda.shifted();
    let mut sum = CharacterCombination::zero(lambda.n());
    let mut terms = Vec::new();
    for (i, j) in roots {
        let gap = x[i - 1] - x[j - 1];
        // a = gap - lp ≥ 1
        let max_level = (gap - 1).div_euclid(p as i64);
        for level in 1..=max_level {
            let reflection = AffineReflection { i, j, level };
            let a = reflection.shift(&x, p);
            let Some((target, sign)) = dot_sort(&reflection.apply(&x, p)) else {
                continue;
            };
            let valuation = 1 + p_adic_valuation(level as u64, p);
            sum.add_term(target.clone(), coeff::<C>(sign as i64 * valuation as i64));
            terms.push(JsfTerm { reflection, a, valuation, sign, target });
        }
    }
    JsfResult { sum, terms }
}

/// Σ ν_p(lp) χ(s_{α,l}·λ) over every positive root α and l ≥ 1 with a > 0.
pub fn full_jsf<C: Coefficient>(lambda: &DominantWeight, p: u32) -> Result<JsfResult<C>> {
    check_prime(p)?;
    let n = lambda.n();
    let roots = (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    Ok(accumulate(lambda, p, roots))
}

/// The same sum restricted to 1 ≤ i ≤ l(λ¹) and n - l(λ²) < j ≤ n.
///
/// Agrees with [`full_jsf`] whenever λ¹ and λ² are p-cores.
pub fn reduced_jsf<C: Coefficient>(lambda: &DominantWeight, p: u32) -> Result<JsfResult<C>> {
    check_prime(p)?;
    let n = lambda.n();
    let (l1, l2) = (lambda.lambda1().len(), lambda.lambda2().len());
    let roots = (1..=l1).flat_map(move |i| (n - l2 + 1..=n).map(move |j| (i, j)));
    Ok(accumulate(lambda, p, roots))
}
