//! Exhaustive cross-checks between modules over ranges of small parameters.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::{cap_diagram, dagger};
use crate::characters::{mixed_tensor_character, psi, psi_expansion, psi_recursion_rhs, tensor_step, Factor};
use crate::diagrams::{arrow_pair_targets, oracle_ideal, preceq};
use crate::jantzen::{full_jsf, is_prime, reduced_jsf};
use crate::multiplicities::{decomp_number, decomposition_matrix, tilting_mult};
use crate::walled_brauer::{
    cell_labels, cellular_identity_check, dimension_identity_check, enumerate_diagrams, walled_decomp_number,
    walled_decomp_number_at, WalledDiagram, WalledElement, WalledQuery, embed,
};
use crate::weights::{check_wall_params, enumerate_lambda_s1s2, is_p_core, DominantWeight, Partition};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, (cases, failures): (usize, Vec<String>)) {
        self.cases += cases;
        self.failures.extend(failures);
    }
}

fn primes_up_to(p_max: u32) -> Vec<u32> {
    (2..=p_max).filter(|p| is_prime(*p)).collect()
}

/// Every (n, s1, s2, p) with valid wall parameters inside the given bounds.
pub fn wall_parameters(p_max: u32, n_max: usize, s_max: usize) -> Vec<(usize, usize, usize, u32)> {
    let mut out = Vec::new();
    for p in primes_up_to(p_max) {
        for n in 2..=n_max {
            for s1 in 1..=s_max {
                for s2 in 1..=s_max {
                    if check_wall_params(n, s1, s2, p).is_ok() {
                        out.push((n, s1, s2, p));
                    }
                }
            }
        }
    }
    out
}

fn par_check<T: Sync>(items: &[T], f: impl Fn(&T) -> (usize, Vec<String>) + Sync + Send) -> (usize, Vec<String>) {
    items
        .par_iter()
        .map(f)
        .reduce(|| (0, Vec::new()), |mut a, b| {
            a.0 += b.0;
            a.1.extend(b.1);
            a
        })
}

/// Bipartitions [λ¹, λ²] of p-cores with l(λ¹) + l(λ²) ≤ n and |λ¹| + |λ²| ≤ max_size.
pub fn core_bipartitions(n: usize, p: u32, max_size: u32) -> Vec<DominantWeight> {
    let cores: Vec<Partition> =
        Partition::all_up_to(max_size, n).into_iter().filter(|c| is_p_core(c, p)).collect();
    let mut out = Vec::new();
    for a in &cores {
        for b in &cores {
            if a.size() + b.size() <= max_size && a.len() + b.len() <= n {
                out.push(DominantWeight::new(n, a.clone(), b.clone()).expect("lengths checked"));
            }
        }
    }
    out
}

/// Full and reduced Jantzen sums agree on bipartitions of p-cores.
pub fn jsf_reduced_suite(primes: &[u32], n_max: usize, max_size: u32) -> SuiteReport {
    let mut report = SuiteReport::new("jsf-reduced");
    for &p in primes {
        for n in 1..=n_max {
            let ws = core_bipartitions(n, p, max_size);
            report.absorb(par_check(&ws, |w| {
                let full = full_jsf::<BigInt>(w, p).map(|r| r.sum);
                let red = reduced_jsf::<BigInt>(w, p).map(|r| r.sum);
                match (full, red) {
                    (Ok(a), Ok(b)) if a == b => (1, vec![]),
                    (a, b) => (1, vec![format!("p={p} n={n} λ={w}: full {a:?} vs reduced {b:?}")]),
                }
            }));
        }
    }
    report
}

/// The support of the reduced Jantzen sum is the set of single ∨…∧ reversals.
pub fn arrow_pairs_suite(p_max: u32, n_max: usize, s_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("arrow-pairs");
    for (n, s1, s2, p) in wall_parameters(p_max, n_max, s_max) {
        let ws = enumerate_lambda_s1s2(n, s1, s2, p);
        report.absorb(par_check(&ws, |w| {
            let support: BTreeSet<DominantWeight> = match reduced_jsf::<BigInt>(w, p) {
                Ok(r) => r.sum.support().cloned().collect(),
                Err(e) => return (1, vec![format!("{w}: {e}")]),
            };
            match arrow_pair_targets(w, s1, s2, p) {
                Ok(t) if t == support => (1, vec![]),
                Ok(t) => (1, vec![format!("p={p} n={n} s=({s1},{s2}) λ={w}: support {support:?} vs arrow pairs {t:?}")]),
                Err(e) => (1, vec![format!("{w}: {e}")]),
            }
        }));
    }
    report
}

/// `preceq` agrees with the reflection-generated order on all pairs of Λ(s1, s2).
pub fn order_suite(p_max: u32, n_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("order");
    for (n, s1, s2, p) in wall_parameters(p_max, n_max, n_max) {
        let ws = enumerate_lambda_s1s2(n, s1, s2, p);
        report.absorb(par_check(&ws, |lambda| {
            let oracle = oracle_ideal(lambda, p);
            let mut fails = Vec::new();
            for mu in &ws {
                match preceq(mu, lambda, s1, s2, p) {
                    Ok(v) if v == oracle.contains(mu) => {}
                    other => fails.push(format!("p={p} n={n} s=({s1},{s2}) {mu} ≼ {lambda}: {other:?}")),
                }
            }
            (ws.len(), fails)
        }));
    }
    report
}

/// Unitriangular 0/1 decomposition matrices, dagger duality on Λ(s, s), and
/// irreducible ⟺ capless ⟺ empty reduced Jantzen sum.
pub fn structural_suite(p_max: u32, n_max: usize, s_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("structural");
    for (n, s1, s2, p) in wall_parameters(p_max, n_max, s_max) {
        let ws = enumerate_lambda_s1s2(n, s1, s2, p);
        report.absorb(par_check(&ws, |lambda| {
            let mut fails = Vec::new();
            let tag = format!("p={p} n={n} s=({s1},{s2}) λ={lambda}");
            let m = match decomposition_matrix(lambda, s1, s2, p) {
                Ok(m) => m,
                Err(e) => return (1, vec![format!("{tag}: {e}")]),
            };
            if !m.is_unitriangular() {
                fails.push(format!("{tag}: matrix not unitriangular"));
            }
            let capless = cap_diagram(lambda, s1, s2, p).map(|c| c.is_capless()).unwrap_or(false);
            let jsf_empty = reduced_jsf::<BigInt>(lambda, p).map(|r| r.sum.is_zero()).unwrap_or(false);
            let identity_row = m.entries[0].iter().skip(1).all(|v| *v == 0);
            if capless != jsf_empty || capless != identity_row {
                fails.push(format!("{tag}: capless {capless}, empty JSF {jsf_empty}, identity row {identity_row}"));
            }
            let mut cases = 1;
            if s1 == s2 {
                let s = s1;
                let lambda_d = dagger(lambda, s, p);
                for mu in &ws {
                    cases += 1;
                    let left = decomp_number(lambda, mu, s, s, p);
                    let right = dagger(mu, s, p)
                        .and_then(|md| lambda_d.clone().and_then(|ld| tilting_mult(&md, &ld, s, s, p)));
                    match (left, right) {
                        (Ok(a), Ok(b)) if a == b => {}
                        (a, b) => fails.push(format!("{tag} μ={mu}: [Δ(λ):L(μ)] = {a:?}, (T(μ†):∇(λ†)) = {b:?}")),
                    }
                }
            }
            (cases, fails)
        }));
    }
    report
}

/// ch V^{r,s} = Σ_t C(r,t) C(s,t) t! ψ_{r-t,s-t} at n = r+s, the ψ recursion at
/// n = r+s+1, and dim V^{r,s} = n^{r+s}.
pub fn characters_suite(max_rs: usize) -> SuiteReport {
    let mut report = SuiteReport::new("characters");
    for total in 0..=max_rs {
        for r in 0..=total {
            let s = total - r;
            let n = total.max(1);
            report.cases += 1;
            let lhs = mixed_tensor_character::<BigInt>(n, r, s);
            match psi_expansion::<BigInt>(r, s, n) {
                Ok(rhs) if rhs == lhs => {}
                other => report.failures.push(format!("r={r} s={s} n={n}: mixed tensor identity {other:?}")),
            }
            if lhs.dimension() != BigInt::from(n).pow(total as u32) {
                report.failures.push(format!("r={r} s={s} n={n}: dimension {}", lhs.dimension()));
            }
            if total < max_rs {
                report.cases += 1;
                let n = total + 1;
                let left = psi::<BigInt>(r, s, n).map(|c| tensor_step(&c, Factor::Dual));
                let right = psi_recursion_rhs::<BigInt>(r, s, n);
                match (left, right) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (a, b) => report.failures.push(format!("r={r} s={s} n={n}: ψ recursion {a:?} vs {b:?}")),
                }
            }
        }
    }
    report
}

/// Bounds for [`brauer_suite`].
#[derive(Clone, Copy, Debug)]
pub struct BrauerBounds {
    pub count_max: usize,
    pub triples: usize,
    pub assoc_max: usize,
    pub dims_max: usize,
    pub independence_max: usize,
    pub seed: u64,
}

impl Default for BrauerBounds {
    fn default() -> Self {
        BrauerBounds { count_max: 7, triples: 1000, assoc_max: 5, dims_max: 8, independence_max: 3, seed: 2024 }
    }
}

fn factorial_usize(k: usize) -> usize {
    (1..=k).product()
}

/// Diagram counts, the cellular and block dimension identities, associativity
/// on random triples, and independence of walled decomposition numbers from n.
pub fn brauer_suite(b: BrauerBounds) -> SuiteReport {
    let mut report = SuiteReport::new("brauer");
    for total in 0..=b.count_max {
        for r in 0..=total {
            let s = total - r;
            report.cases += 2;
            let ds = enumerate_diagrams(r, s);
            let distinct: BTreeSet<&WalledDiagram> = ds.iter().collect();
            if ds.len() != factorial_usize(total) || distinct.len() != ds.len() {
                report.failures.push(format!("r={r} s={s}: {} diagrams, {} distinct", ds.len(), distinct.len()));
            }
            if !cellular_identity_check(r, s) {
                report.failures.push(format!("r={r} s={s}: cell dimensions do not square-sum to (r+s)!"));
            }
        }
    }
    for r in 0..=b.dims_max {
        for s in 0..=b.dims_max {
            report.cases += 1;
            if !dimension_identity_check(r, s) {
                report.failures.push(format!("r={r} s={s}: dimension identity fails"));
            }
        }
    }

    let shapes: Vec<(usize, usize)> =
        (1..=b.assoc_max).flat_map(|t| (0..=t).map(move |r| (r, t - r))).collect();
    let bases: Vec<Vec<WalledDiagram>> = shapes.iter().map(|&(r, s)| enumerate_diagrams(r, s)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    for _ in 0..b.triples {
        let k = rng.gen_range(0..shapes.len());
        let basis = &bases[k];
        let pick = |rng: &mut ChaCha8Rng| WalledElement::<i64>::from_diagram(basis[rng.gen_range(0..basis.len())].clone());
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        report.cases += 1;
        let left = x.checked_mul(&y).and_then(|xy| xy.checked_mul(&z));
        let right = y.checked_mul(&z).and_then(|yz| x.checked_mul(&yz));
        let id = WalledElement::from_diagram(WalledDiagram::identity(shapes[k].0, shapes[k].1));
        let neutral = id.checked_mul(&x).ok() == Some(x.clone()) && x.checked_mul(&id).ok() == Some(x.clone());
        if left.is_err() || left != right || !neutral {
            report.failures.push(format!("({x})·({y})·({z}) not associative or identity not neutral"));
        }
    }

    report.absorb(independence_check(b.independence_max));
    report
}

/// Compares walled decomposition numbers at the chosen rank with the next two
/// admissible ranks, over all label pairs with r, s ≤ `max_rs`.
fn independence_check(max_rs: usize) -> (usize, Vec<String>) {
    let mut queries = Vec::new();
    for p in [3u32, 5] {
        for r in 0..=max_rs {
            for s in 0..=max_rs {
                let labels = cell_labels(r, s);
                for delta in 0..p as i64 {
                    for (l1, l2) in &labels {
                        for (m1, m2) in &labels {
                            queries.push(WalledQuery {
                                mu1: m1.clone(),
                                mu2: m2.clone(),
                                lambda1: l1.clone(),
                                lambda2: l2.clone(),
                                r,
                                s,
                                delta,
                                p,
                            });
                        }
                    }
                }
            }
        }
    }
    par_check(&queries, |q| {
        let Ok(e) = embed(q) else { return (0, vec![]) };
        let base = walled_decomp_number(q);
        let mut fails = Vec::new();
        let mut cases = 0;
        for k in 1..=2 {
            let n = e.n + k * q.p as usize;
            if let Ok(v) = walled_decomp_number_at(q, n) {
                cases += 1;
                if base.as_ref().ok() != Some(&v) {
                    fails.push(format!("{q:?}: {base:?} at n={} but {v} at n={n}", e.n));
                }
            }
        }
        (cases, fails)
    })
}
