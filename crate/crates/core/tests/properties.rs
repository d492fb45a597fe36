use gl3cg::agkz::{act_e, scalar_product};
use gl3cg::alphabet::Letter;
use gl3cg::gamma::{gamma_poly, GammaSeriesSpec};
use gl3cg::lattice::{lattice_solve, IntegerLattice};
use gl3cg::oracle::{e_action, entry, ActionTarget, NE};
use gl3cg::pattern::{pattern_from_shift, pattern_shift_vector, same_coset, V_GEN};
use gl3cg::poly::Monomial;
use gl3cg::{GtPattern, QPoly, Rational};
use proptest::prelude::*;

fn small_poly(nvars: usize, max_exp: u32) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 1..5).prop_map(move |terms| {
        QPoly::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), Rational::from_integer(c.into()))),
        )
    })
}

/// A polynomial in the entries of one letter and one row, scattered into the 27 variables.
fn entry_poly() -> impl Strategy<Value = QPoly> {
    (small_poly(6, 2), 0usize..3).prop_map(|(p, l)| {
        let letter = Letter::ALL[l];
        let images: Vec<QPoly> = (0..6).map(|k| QPoly::var(NE, entry(letter, k % 3 + 1, k / 3 + 1))).collect();
        p.substitute(&images)
    })
}

fn pattern() -> impl Strategy<Value = GtPattern> {
    (0i64..4, 0i64..4)
        .prop_flat_map(|(a, b)| {
            let (m1, m2) = (a.max(b), a.min(b));
            (Just(m1), Just(m2), m2..=m1, 0..=m2)
        })
        .prop_flat_map(|(m1, m2, k1, k2)| (Just((m1, m2, k1, k2)), k2..=k1))
        .prop_map(|((m1, m2, k1, k2), s)| GtPattern::new([m1, m2, 0], [k1, k2], s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lattice_round_trip(
        gens in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..4),
        coeffs in prop::collection::vec(-3i64..=3, 4),
    ) {
        let l = IntegerLattice::from_generators(5, &gens).unwrap();
        let point = l.combination(&coeffs[..l.rank()]);
        prop_assert!(l.contains(&point));
        let c = lattice_solve(&l, &point).unwrap();
        prop_assert_eq!(l.combination(&c), point);
        for g in &gens {
            prop_assert!(l.contains(g));
        }
    }

    #[test]
    fn contravariance(f in small_poly(6, 2), h in small_poly(6, 2), i in 1usize..=3, j in 1usize..=3) {
        prop_assert_eq!(scalar_product(&act_e(i, j, &f), &h), scalar_product(&f, &act_e(j, i, &h)));
    }

    #[test]
    fn gamma_coset_invariance(p in pattern(), k in -3i64..=3) {
        let mu = pattern_shift_vector(&p).unwrap();
        let moved = mu.add_scaled(&V_GEN, k);
        prop_assert!(same_coset(&mu, &moved));
        prop_assert_eq!(pattern_from_shift(&moved), Some(p));
        let a: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&mu));
        let b: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&moved));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn commutation_relations(f in entry_poly(), ij in (1usize..=3, 1usize..=3), kl in (1usize..=3, 1usize..=3)) {
        let ((i, j), (k, l)) = (ij, kl);
        let e = |a, b, p: &QPoly| e_action(ActionTarget::Diagonal, a, b, p);
        let lhs = &e(i, j, &e(k, l, &f)) - &e(k, l, &e(i, j, &f));
        let mut rhs = QPoly::zero(NE);
        if j == k {
            rhs = &rhs + &e(i, l, &f);
        }
        if l == i {
            rhs = &rhs - &e(k, j, &f);
        }
        prop_assert_eq!(lhs, rhs);
    }
}
