use glcaps::caps::dagger;
use glcaps::characters::{supp1, supp2, tensor_step, weyl_dimension, CharacterCombination, Factor};
use glcaps::diagrams::{arrow_diagram, parse_diagram};
use glcaps::walled_brauer::{enumerate_diagrams, Polynomial, WalledElement};
use glcaps::weights::enumerate_lambda_s1s2;
use glcaps::DominantWeight;
use num_bigint::BigInt;
use proptest::prelude::*;

fn dominant_tuple() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 1..=6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

/// (n, s1, s2, p) with at least one weight in Λ(s1, s2), and an index into it.
fn lambda_case() -> impl Strategy<Value = (usize, usize, usize, u32, usize)> {
    (prop::sample::select(vec![3u32, 5, 7]), 2usize..=7)
        .prop_flat_map(|(p, n)| (Just(p), Just(n), 1..=n.min(p as usize).min(3)))
        .prop_flat_map(|(p, n, s1)| {
            let hi = (n - s1).min(p as usize).min(3).max(1);
            (Just(p), Just(n), Just(s1), 1..=hi, any::<prop::sample::Index>())
        })
        .prop_filter_map("walls must fit", |(p, n, s1, s2, idx)| {
            if s1 + s2 > n {
                return None;
            }
            let ws = enumerate_lambda_s1s2(n, s1, s2, p);
            (!ws.is_empty()).then(|| (n, s1, s2, p, idx.index(ws.len())))
        })
}

proptest! {
    #[test]
    fn tuple_roundtrip(t in dominant_tuple()) {
        let w = DominantWeight::from_tuple(&t).unwrap();
        prop_assert_eq!(w.to_tuple(), t.clone());
        prop_assert_eq!(DominantWeight::parse(t.len(), &w.bipartition()).unwrap(), w);
    }

    #[test]
    fn supports_are_adjoint(t in dominant_tuple()) {
        let w = DominantWeight::from_tuple(&t).unwrap();
        for m in supp1(&w) {
            prop_assert!(supp2(&m).contains(&w));
        }
        for m in supp2(&w) {
            prop_assert!(supp1(&m).contains(&w));
        }
    }

    #[test]
    fn tensoring_scales_dimension(t in dominant_tuple(), dual in any::<bool>()) {
        let w = DominantWeight::from_tuple(&t).unwrap();
        let c = CharacterCombination::<BigInt>::basis(w.clone());
        let f = if dual { Factor::Dual } else { Factor::Natural };
        prop_assert_eq!(tensor_step(&c, f).dimension(), weyl_dimension(&w) * BigInt::from(t.len()));
    }

    #[test]
    fn arrow_diagram_roundtrip((n, s1, s2, p, i) in lambda_case()) {
        let lambda = enumerate_lambda_s1s2(n, s1, s2, p)[i].clone();
        let d = arrow_diagram(&lambda, s1, s2, p).unwrap();
        prop_assert_eq!(d.to_weight().unwrap(), lambda.clone());
        let lin = d.linearise().unwrap();
        let mut text = lin.ascii();
        if lin.wall != 0 {
            text.insert(lin.wall, '!');
        }
        prop_assert_eq!(parse_diagram(&text, n, s1, s2, p).unwrap(), d);
    }

    #[test]
    fn dagger_is_an_involution((n, s1, _s2, p, _i) in lambda_case(), pick in any::<prop::sample::Index>()) {
        prop_assume!(2 * s1 <= n);
        let ws = enumerate_lambda_s1s2(n, s1, s1, p);
        prop_assume!(!ws.is_empty());
        let lambda = &ws[pick.index(ws.len())];
        let d = dagger(lambda, s1, p).unwrap();
        prop_assert!(ws.contains(&d));
        prop_assert_eq!(&dagger(&d, s1, p).unwrap(), lambda);
    }

    #[test]
    fn walled_multiplication_is_associative(total in 1usize..=4, r_frac in 0usize..=4, picks in prop::array::uniform3(any::<prop::sample::Index>())) {
        let r = r_frac.min(total);
        let basis = enumerate_diagrams(r, total - r);
        let e = |k: usize| WalledElement::<i64>::from_diagram(basis[picks[k].index(basis.len())].clone());
        let (a, b, c) = (e(0), e(1), e(2));
        let left = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let right = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn polynomial_evaluation_is_multiplicative(a in prop::collection::vec(-5i64..=5, 0..4), b in prop::collection::vec(-5i64..=5, 0..4), x in -4i64..=4) {
        let (pa, pb) = (Polynomial::from_coeffs(a), Polynomial::from_coeffs(b));
        prop_assert_eq!((&pa * &pb).eval(&x), pa.eval(&x) * pb.eval(&x));
        prop_assert_eq!((&pa + &pb).eval(&x), pa.eval(&x) + pb.eval(&x));
    }
}
