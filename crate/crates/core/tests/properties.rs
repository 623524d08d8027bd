use std::collections::BTreeSet;

use csm_exact::operator::{self, diagonal_energy};
use csm_exact::oracle::LaurentPoly;
use csm_exact::partitions::{partitions_of, partitions_with_max_len, Dominance};
use csm_exact::scalars::rational::{frac, int};
use csm_exact::scalars::{Poly, RatFunc};
use csm_exact::spectrum;
use csm_exact::states::enumerate_sector;
use csm_exact::{Coupling, Partition, Rational, SectorState};
use num_traits::Zero;
use proptest::prelude::*;

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(v).unwrap()
    })
}

fn state(max_part: usize, n: usize) -> impl Strategy<Value = SectorState> {
    partition(max_part, n).prop_map(move |p| SectorState::from_partition(&p, n).unwrap())
}

fn dominates(hi: &[i64], lo: &[i64]) -> bool {
    let (mut a, mut b) = (0, 0);
    hi.iter().zip(lo).all(|(x, y)| {
        a += x;
        b += y;
        a >= b
    })
}

fn poly(coeffs: Vec<i64>) -> Poly {
    Poly::new(coeffs.into_iter().map(int).collect())
}

fn laurent(n: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, n), -5i64..=5), 1..6).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(n), |acc, (e, c)| acc.add(&LaurentPoly::monomial(&e, int(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reachable_family_is_the_dominance_down_set(root in state(5, 4)) {
        let n = root.n_particles();
        let family: BTreeSet<SectorState> =
            enumerate_sector(n, root.total(), Some(&root)).unwrap().into_iter().collect();
        let down: BTreeSet<SectorState> = partitions_with_max_len(root.total() as usize, n)
            .iter()
            .map(|p| SectorState::from_partition(p, n).unwrap())
            .filter(|s| dominates(&root.quantum_numbers(), &s.quantum_numbers()))
            .collect();
        prop_assert_eq!(family, down);
    }

    #[test]
    fn conjugation_reverses_dominance(w in 1usize..=10, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let all = partitions_of(w);
        let (a, b) = (i.get(&all).clone(), j.get(&all).clone());
        let flipped = match a.dominance_compare(&b).unwrap() {
            Dominance::Less => Dominance::Greater,
            Dominance::Greater => Dominance::Less,
            d => d,
        };
        prop_assert_eq!(a.conjugate().dominance_compare(&b.conjugate()).unwrap(), flipped);
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        let (lhs, rhs) = a.conjugation_identity();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_function_evaluation_is_a_homomorphism(
        n1 in prop::collection::vec(-4i64..=4, 1..4),
        d1 in prop::collection::vec(-4i64..=4, 1..3),
        n2 in prop::collection::vec(-4i64..=4, 1..4),
        d2 in prop::collection::vec(-4i64..=4, 1..3),
        x in -6i64..=6,
        q in 1i64..=4,
    ) {
        let (d1, d2) = (poly(d1), poly(d2));
        prop_assume!(!d1.is_zero() && !d2.is_zero());
        let a = frac(x, q);
        prop_assume!(!d1.eval(&a).is_zero() && !d2.eval(&a).is_zero());
        let f = RatFunc::new(poly(n1), d1).unwrap();
        let g = RatFunc::new(poly(n2), d2).unwrap();
        let (fa, ga) = (f.eval(&a).unwrap(), g.eval(&a).unwrap());
        prop_assert_eq!(f.add(&g).eval(&a).unwrap(), &fa + &ga);
        prop_assert_eq!(f.sub(&g).eval(&a).unwrap(), &fa - &ga);
        prop_assert_eq!(f.mul(&g).eval(&a).unwrap(), &fa * &ga);
        if !ga.is_zero() {
            prop_assert_eq!(f.div(&g).unwrap().eval(&a).unwrap(), fa / ga);
        }
    }

    #[test]
    fn division_by_a_variable_difference_round_trips(f in laurent(3), j in 0usize..3, k in 0usize..3) {
        prop_assume!(j != k);
        let diff = LaurentPoly::variable(3, j).sub(&LaurentPoly::variable(3, k));
        let product = f.mul(&diff);
        prop_assert_eq!(product.divide_by_difference(j, k).unwrap(), f);
    }

    #[test]
    fn back_substitution_leaves_no_residual(root in state(4, 3), x in 1i64..=5, q in 1i64..=3) {
        let a = frac(x, q);
        let basis = enumerate_sector(root.n_particles(), root.total(), Some(&root)).unwrap();
        let m = operator::h_matrix(&basis, &Coupling::fixed(a)).unwrap();
        for pair in spectrum::all_eigenpairs(&m) {
            let pair = pair.unwrap();
            prop_assert!(spectrum::residual(&m, &pair).iter().all(|r| r.is_zero()));
        }
    }

    #[test]
    fn interaction_term_commutes_with_galilean_shift(s in state(4, 3), shift in -3i64..=3) {
        let shifted = SectorState::new(s.shape().clone(), s.shift() + shift, s.n_particles()).unwrap();
        let image = operator::monomial_image(&s).unwrap().h1;
        let moved: Vec<(Vec<i64>, Rational)> = image
            .into_iter()
            .map(|(t, c)| (t.quantum_numbers().iter().map(|v| v + shift).collect(), c))
            .collect();
        let direct: Vec<(Vec<i64>, Rational)> = operator::monomial_image(&shifted)
            .unwrap()
            .h1
            .into_iter()
            .map(|(t, c)| (t.quantum_numbers(), c))
            .collect();
        prop_assert_eq!(moved, direct);
    }

    #[test]
    fn pseudo_momentum_offset_is_state_independent(s in state(6, 4), x in 0i64..=6, q in 1i64..=3) {
        let a = frac(x, q);
        let pm = spectrum::pseudo_momenta(&s, &a).unwrap();
        let e0 = diagonal_energy(&s, &Coupling::fixed(a.clone())).eval(&a).unwrap();
        prop_assert_eq!(pm.energy - e0, spectrum::predicted_offset(s.n_particles(), &a));
    }
}
