//! Property-based checks of the structural invariants: simplicial
//! operator algebra, epi–mono factorisation, operator actions on
//! simplicial sets, and Smith normal form.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use retracta::homalg::{snf, IntMatrix};
use retracta::sset::op::binomial;
use retracta::sset::{build, DeltaOp, Simplex};

/// A random monotone map [m] → [n] for small m, n.
fn delta_op() -> impl Strategy<Value = DeltaOp> {
    (0usize..=4, 0usize..=4).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0usize..=n, m + 1)
            .prop_map(move |mut vals| {
                vals.sort_unstable();
                DeltaOp::new(vals, n).unwrap()
            })
    })
}

/// A pair (f, g) with matching codomain/domain so that f ∘ g exists.
fn composable_pair() -> impl Strategy<Value = (DeltaOp, DeltaOp)> {
    delta_op().prop_flat_map(|f| {
        let n = f.dom();
        (0usize..=4)
            .prop_flat_map(move |m| proptest::collection::vec(0usize..=n, m + 1))
            .prop_map(move |mut vals| {
                vals.sort_unstable();
                (f.clone(), DeltaOp::new(vals, f.dom()).unwrap())
            })
    })
}

fn composable_triple() -> impl Strategy<Value = (DeltaOp, DeltaOp, DeltaOp)> {
    composable_pair().prop_flat_map(|(f, g)| {
        let n = g.dom();
        (0usize..=4)
            .prop_flat_map(move |m| proptest::collection::vec(0usize..=n, m + 1))
            .prop_map(move |mut vals| {
                vals.sort_unstable();
                (f.clone(), g.clone(), DeltaOp::new(vals, g.dom()).unwrap())
            })
    })
}

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-20i64..=20, r * c).prop_map(move |es| {
            IntMatrix::from_fn(r, c, |i, j| BigInt::from(es[i * c + j]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_is_associative((f, g, h) in composable_triple()) {
        let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
        let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn identities_are_neutral(f in delta_op()) {
        prop_assert_eq!(f.compose(&DeltaOp::identity(f.dom())).unwrap(), f.clone());
        prop_assert_eq!(DeltaOp::identity(f.cod()).compose(&f).unwrap(), f);
    }

    #[test]
    fn epi_mono_reconstructs(f in delta_op()) {
        let (mono, epi) = f.epi_mono();
        prop_assert!(mono.is_injective());
        prop_assert!(epi.is_surjective());
        prop_assert_eq!(mono.compose(&epi).unwrap(), f);
    }

    #[test]
    fn degeneracy_words_round_trip(f in delta_op()) {
        let (_, epi) = f.epi_mono();
        let word = epi.degeneracy_word();
        prop_assert!(word.windows(2).all(|w| w[0] > w[1]));
        let back = DeltaOp::from_degeneracy_word(&word, epi.dom()).unwrap();
        prop_assert_eq!(back, epi);
    }

    #[test]
    fn operator_action_is_functorial((f, g) in composable_pair()) {
        // x · f · g = x · (f ∘ g) for simplices of Δ[cod f]
        let x = build::standard_simplex(f.cod()).unwrap();
        let top = Simplex::gen(x.find_gen(
            &(0..=f.cod()).map(|v| v.to_string()).collect::<Vec<_>>().join(".")
        ).unwrap(), f.cod());
        let step = x.apply(&x.apply(&top, &f).unwrap(), &g).unwrap();
        let once = x.apply(&top, &f.compose(&g).unwrap()).unwrap();
        prop_assert_eq!(step, once);
    }

    #[test]
    fn surjection_counts_match_binomials(n in 0usize..=6, m in 0usize..=6) {
        let count = DeltaOp::all_surjections(n, m).len();
        let expected = if m > n { 0 } else { binomial(n, n - m) };
        prop_assert_eq!(count, expected);
    }

    #[test]
    fn smith_normal_form_is_coherent(a in int_matrix()) {
        let s = snf(&a);
        prop_assert_eq!(s.u.mul(&s.d).mul(&s.v), a.clone());
        prop_assert_eq!(s.p.mul(&a).mul(&s.q), s.d.clone());
        prop_assert_eq!(s.u.mul(&s.p), IntMatrix::identity(a.rows()));
        prop_assert_eq!(s.q.mul(&s.v), IntMatrix::identity(a.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let fac = s.invariant_factors();
        prop_assert_eq!(fac.len(), s.rank);
        for w in fac.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }
}
