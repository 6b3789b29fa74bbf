//! Property tests for the polynomial arithmetic and the bound polynomials.

use std::collections::BTreeMap;

use chern_bounds::bounds::{build_q, BoundTable};
use chern_bounds::partitions::{all_partitions_up_to, Partition};
use chern_bounds::poly::{int, MultiPoly, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn coeff() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1u64..=u64::MAX).prop_map(|(n, d)| Rational::new(BigInt::from(n) * 2 + 1, BigInt::from(d)))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=4, 3), coeff()), 0..6).prop_map(|terms| {
        let terms = terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= 4);
        MultiPoly::from_terms(&VARS, terms).unwrap()
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-50i64..=50, 1i64..=7).prop_map(|(a, b)| Rational::new(a.into(), b.into())), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(&VARS), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        let ea = a.eval_at(&p).unwrap();
        let eb = b.eval_at(&p).unwrap();
        prop_assert_eq!((&a * &b).eval_at(&p).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_at(&p).unwrap(), ea + eb);
    }

    #[test]
    fn eval_after_substitute(a in poly(), images in prop::collection::vec(poly(), 3), p in point()) {
        let bindings: BTreeMap<String, MultiPoly> =
            VARS.iter().map(|v| v.to_string()).zip(images.iter().cloned()).collect();
        let inner: Vec<Rational> = images.iter().map(|q| q.eval_at(&p).unwrap()).collect();
        prop_assert_eq!(a.substitute(&bindings).unwrap().eval_at(&p).unwrap(), a.eval_at(&inner).unwrap());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(MultiPoly::parse(&a.to_string(), &VARS).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        let back: MultiPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn partition_text_round_trip(parts in prop::collection::vec(1u32..=9, 0..8)) {
        let p = Partition::new(parts.clone());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.weight(), parts.iter().sum::<u32>());
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// `Q_λ` dominates both one-sided bounds on the admissible region.
    #[test]
    fn symmetric_bound_majorizes(n in 1u32..=3, x in 1i64..=200, t in 0i64..=400) {
        let x = int(x);
        let y = int(t) - int(n as i64 + 1) * &x;
        let xy = [x, y];
        for lambda in all_partitions_up_to(n) {
            let b = build_q(&lambda, n).unwrap();
            let q = b.symmetric.eval_at(&xy).unwrap();
            prop_assert!(q >= b.upper.eval_at(&xy).unwrap());
            prop_assert!(q >= -b.lower.eval_at(&xy).unwrap());
        }
    }
}

#[test]
fn table_is_deterministic() {
    for n in 1..=3 {
        let a = BoundTable::build(n).unwrap();
        let b = BoundTable::build(n).unwrap();
        for (lambda, m) in &a.main {
            assert_eq!(m.symmetric.to_string(), b.main[lambda].symmetric.to_string());
        }
    }
}
