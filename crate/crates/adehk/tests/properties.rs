//! Randomized property suites: δ/τ scaling laws, rank-2 split identities,
//! series algebra, and Gröbner basics.

use adehk::delta::{delta, odd_lattice_distance, tau};
use adehk::field::Field;
use adehk::groebner::{buchberger, normal_form, quotient_dimension};
use adehk::poly::{Poly, WeightedOrder};
use adehk::rat::{rat, rat_int, Rat};
use adehk::series::{IntPoly, RationalSeries};
use adehk::syzygy::{split_degrees_rank2, RingModel};
use num_traits::Zero;
use proptest::prelude::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (0i64..200, 1i64..16).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// δ(p·t) = p·δ(t) — the defining self-similarity.
    #[test]
    fn delta_scales_under_p(
        t1 in rat_strategy(),
        t2 in rat_strategy(),
        t3 in rat_strategy(),
        p_idx in 0usize..4,
    ) {
        let p = [3u64, 5, 7, 61][p_idx];
        let t = [t1, t2, t3];
        let scaled = [
            t[0].clone() * rat_int(p as i64),
            t[1].clone() * rat_int(p as i64),
            t[2].clone() * rat_int(p as i64),
        ];
        let lhs = delta(p, &scaled).unwrap();
        let rhs = delta(p, &t).unwrap() * rat_int(p as i64);
        prop_assert_eq!(lhs, rhs);
    }

    /// τ inherits the scaling law from δ.
    #[test]
    fn tau_scales_under_p(
        t1 in rat_strategy(),
        t2 in rat_strategy(),
        t3 in rat_strategy(),
        p_idx in 0usize..4,
    ) {
        let p = [3u64, 5, 7, 61][p_idx];
        let t = [t1, t2, t3];
        let scaled = [
            t[0].clone() * rat_int(p as i64),
            t[1].clone() * rat_int(p as i64),
            t[2].clone() * rat_int(p as i64),
        ];
        let lhs = tau(p, 10, 6, 3, 5, &scaled).unwrap();
        let rhs = tau(p, 10, 6, 3, 5, &t).unwrap() * rat_int(p as i64);
        prop_assert_eq!(lhs, rhs);
    }

    /// The nearest odd lattice point is within taxicab distance 3/2 + small
    /// slack of any nonnegative triple, and the distance is exact.
    #[test]
    fn odd_lattice_distance_is_a_distance(
        t1 in rat_strategy(),
        t2 in rat_strategy(),
        t3 in rat_strategy(),
    ) {
        let t = [t1, t2, t3];
        let (u, d) = odd_lattice_distance(&t);
        prop_assert_eq!((u[0] + u[1] + u[2]).rem_euclid(2), 1);
        let recomputed: Rat = (0..3)
            .map(|i| {
                let diff = t[i].clone() - rat_int(u[i]);
                if diff < Rat::zero() { -diff } else { diff }
            })
            .sum();
        prop_assert_eq!(recomputed, d.clone());
        // any point has an odd point within 3/2 in taxicab distance unless
        // pinned near the origin boundary; 2 is always a safe bound
        prop_assert!(d <= rat_int(2));
    }

    /// Series addition commutes and shifting adds exponents.
    #[test]
    fn series_algebra(
        exps_a in proptest::collection::vec(0i64..40, 1..5),
        exps_b in proptest::collection::vec(0i64..40, 1..5),
        shift in 0i64..30,
    ) {
        let a = RationalSeries::new(IntPoly::from_exponents(&exps_a), &[6, 10]);
        let b = RationalSeries::new(IntPoly::from_exponents(&exps_b), &[15]);
        prop_assert_eq!(a.add(&b), b.add(&a));
        let shifted = a.mul_poly(&IntPoly::monomial(shift, 1));
        prop_assert_eq!(shifted.equal_up_to_shift(&a), Some(shift));
        // coefficients of the sum match the sums of coefficients
        let n = 60usize;
        let ca = a.coefficients(n);
        let cb = b.coefficients(n);
        let cs = a.add(&b).coefficients(n);
        for i in 0..=n {
            prop_assert_eq!(cs[i], ca[i] + cb[i]);
        }
    }
}

/// m + n = sum of the generator degrees, and n - m = τ, on random rank-2
/// splits over k[Y,Z] for the three E-type binomials.
#[test]
fn degree_sum_and_gap_identities() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(11);
    let setups: [(i64, i64); 3] = [(3, 5), (2, 3), (3, 4)];
    let primes = [3u64, 5, 7];
    let mut checked = 0;
    while checked < 200 {
        let (a, b) = setups[rng.gen_range(0..3)];
        let p = primes[rng.gen_range(0..3)];
        // weights (β, γ) = (b, a) make Y^a and Z^b the same degree ab
        let (beta, gamma) = (b, a);
        let e1 = rng.gen_range(1..5u32);
        let e2 = rng.gen_range(1..8u32);
        let e3 = rng.gen_range(1..8u32);
        let field = Field::prime(p);
        let order = WeightedOrder::new(&[beta, gamma]);
        let model = RingModel::free(&[beta, gamma]);
        let one = field.one();
        let binom = Poly::from_terms(
            vec![([a as u32, 0, 0], one), ([0, b as u32, 0], one)],
            &field,
            &order,
        )
        .pow(e1, &field, &order);
        let gens = vec![
            binom,
            Poly::term([e2, 0, 0], one, &field),
            Poly::term([0, e3, 0], one, &field),
        ];
        let (m, n) = split_degrees_rank2(&model, &gens, &field).unwrap();
        let dsum = e1 as i64 * a * b + e2 as i64 * beta + e3 as i64 * gamma;
        assert_eq!(m + n, dsum, "degree sum failed for ({a},{b}) p={p}");
        let gap = tau(
            p,
            beta,
            gamma,
            a,
            b,
            &[rat_int(e1 as i64), rat_int(e2 as i64), rat_int(e3 as i64)],
        )
        .unwrap();
        assert_eq!(rat_int(n - m), gap, "gap != τ for ({a},{b}) p={p} exps ({e1},{e2},{e3})");
        checked += 1;
    }
}

/// Colength of a monomial-plus-binomial ideal does not depend on the chosen
/// weights of the term order.
#[test]
fn quotient_dimension_is_order_invariant() {
    let field = Field::prime(7);
    let one = field.one();
    for weights in [[15i64, 10, 6], [1, 1, 1], [3, 7, 2]] {
        let order = WeightedOrder::new(&weights);
        let f = Poly::from_terms(
            vec![([2, 0, 0], one), ([0, 3, 0], one), ([0, 0, 5], one)],
            &field,
            &order,
        );
        let gens = vec![
            f,
            Poly::term([7, 0, 0], one, &field),
            Poly::term([0, 7, 0], one, &field),
            Poly::term([0, 0, 7], one, &field),
        ];
        let gb = buchberger(&gens, &field, &order);
        assert_eq!(quotient_dimension(&gb), Some(96), "weights {weights:?}");
    }
}

/// Every input generator reduces to zero against the computed basis.
#[test]
fn buchberger_reduces_generators_to_zero() {
    let field = Field::prime(13);
    let one = field.one();
    let order = WeightedOrder::new(&[4, 2, 3]);
    let f = Poly::from_terms(
        vec![([2, 0, 0], one), ([0, 4, 0], one), ([0, 1, 2], one)],
        &field,
        &order,
    );
    let gens = vec![
        f,
        Poly::term([5, 0, 0], one, &field),
        Poly::term([0, 5, 0], one, &field),
        Poly::term([0, 0, 5], one, &field),
    ];
    let gb = buchberger(&gens, &field, &order);
    for g in &gens {
        assert!(normal_form(g, &gb.gens, &field, &order).is_zero());
    }
}
