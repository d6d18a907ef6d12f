//! Randomized algebraic invariants, proptest-style.

use proptest::prelude::*;

use stsp::steinberg::{AbsGen, AbsWord, Sign};
use stsp::{form, split_pm, FormIdeal, GammaMode, HVector, Idx, RingSpec, Scalar};

fn rings() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(RingSpec::Integers),
        (2u64..=16).prop_map(|m| RingSpec::modulo(m).unwrap()),
    ]
}

fn vector(ring: RingSpec, rank: usize) -> impl Strategy<Value = HVector> {
    proptest::collection::vec(-9i128..=9, 2 * rank).prop_map(move |coords| {
        HVector::from_coords(
            rank,
            ring,
            coords.into_iter().map(|c| Scalar::new(ring, c)).collect(),
        )
        .unwrap()
    })
}

fn letters(ring: RingSpec, rank: usize) -> impl Strategy<Value = Vec<(AbsGen, Sign)>> {
    let l = rank as i32;
    let idx = move |raw: i32| Idx::new(raw, rank).unwrap();
    proptest::collection::vec(
        (1..=2 * l, 1..=2 * l - 1, -4i128..=4, proptest::bool::ANY).prop_map(
            move |(i_raw, j_off, r, neg)| {
                // Two independent nonzero indices with i ≠ j.
                let i = if i_raw <= l { i_raw } else { l - i_raw };
                let mut j = i_raw + j_off;
                while j > l {
                    j -= 2 * l;
                }
                let j = if j == 0 { -l } else { j };
                let j = if j == i {
                    if i == l {
                        1 - l
                    } else {
                        i + 1
                    }
                } else {
                    j
                };
                let j = if j == 0 { -l } else { j };
                (
                    AbsGen::new(idx(i), idx(j), Scalar::new(ring, r)).unwrap(),
                    if neg { Sign::Neg } else { Sign::Pos },
                )
            },
        ),
        0..6,
    )
}

proptest! {
    #[test]
    fn ring_axioms_hold_on_random_triples(
        ring in rings(),
        a in -60i128..=60, b in -60i128..=60, c in -60i128..=60,
    ) {
        let (a, b, c) = (Scalar::new(ring, a), Scalar::new(ring, b), Scalar::new(ring, c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + Scalar::zero(ring), a.clone());
        prop_assert_eq!(&a * Scalar::one(ring), a.clone());
        prop_assert_eq!(&a + (-&a), Scalar::zero(ring));
    }

    #[test]
    fn bilinear_antisymmetric_alternating(
        a in -9i128..=9,
        u in vector(RingSpec::Integers, 3),
        u2 in vector(RingSpec::Integers, 3),
        v in vector(RingSpec::Integers, 3),
    ) {
        let ring = RingSpec::Integers;
        let a = Scalar::new(ring, a);
        let lhs = form(&u.scale(&a).add(&u2), &v).unwrap();
        let rhs = &a * form(&u, &v).unwrap() + form(&u2, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(form(&u, &v).unwrap(), -form(&v, &u).unwrap());
        prop_assert!(form(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn split_reconstructs(v in vector(RingSpec::Integers, 4)) {
        let (minus, plus) = split_pm(&v);
        prop_assert_eq!(minus.add(&plus), v);
    }

    #[test]
    fn ideal_membership_is_additively_closed(
        x in -60i128..=60, y in -60i128..=60, r in -9i128..=9,
    ) {
        let ring = RingSpec::modulo(12).unwrap();
        let f = FormIdeal::new(ring, vec![Scalar::new(ring, 4)], GammaMode::Maximal).unwrap();
        let (x, y, r) = (Scalar::new(ring, x), Scalar::new(ring, y), Scalar::new(ring, r));
        if f.ideal_member(&x).unwrap() && f.ideal_member(&y).unwrap() {
            prop_assert!(f.ideal_member(&(&x + &y)).unwrap());
            prop_assert!(f.ideal_member(&(&r * &x)).unwrap());
        }
        // Maximal Γ is pointwise the ideal.
        prop_assert_eq!(f.gamma_member(&x).unwrap(), f.ideal_member(&x).unwrap());
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        ring in rings(),
        w1 in proptest::sample::select(vec![0usize, 1, 2]).prop_flat_map(|_| letters(RingSpec::Integers, 3)),
        w2 in letters(RingSpec::Integers, 3),
    ) {
        // Words over ℤ, evaluated in the chosen ring by reduction of the
        // parameters, which commutes with everything in sight; simplest to
        // just test over ℤ and one modular ring.
        let _ = ring;
        let w1 = AbsWord::from_letters(3, RingSpec::Integers, w1);
        let w2 = AbsWord::from_letters(3, RingSpec::Integers, w2);
        prop_assert_eq!(w1.mul(&w2).eval(), w1.eval().mul(&w2.eval()));
        prop_assert!(w1.mul(&w1.inv()).eval().is_identity());
        // Free reduction never changes the image.
        prop_assert_eq!(w1.reduced().eval(), w1.eval());
        prop_assert_eq!(w1.inv().inv().reduced(), w1.reduced());
    }
}
