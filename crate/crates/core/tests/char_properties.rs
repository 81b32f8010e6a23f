//! Group laws, normal forms against a brute-force lattice oracle, and exact
//! division of Tate-factor products.

mod support;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lspin::chars::{Character, LFactorProduct};
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = random_system(&mut rng);
        let (a, b, c) = (random_char(&mut rng, &sys), random_char(&mut rng, &sys), random_char(&mut rng, &sys));
        if let Err(e) = group_law_check(&sys, &a, &b, &c) {
            prop_assert!(false, "{}", e);
        }
    }

    #[test]
    fn normal_form_agrees_with_brute_force(seed in any::<u64>(), pick in 0usize..10_000) {
        let lattices = sublattices(64);
        let basis = lattices[pick % lattices.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = lattice_system(basis, &mut rng);
        let oracle = LatticeOracle::new(basis);
        for _ in 0..20 {
            let x = [rng.random_range(-80..=80), rng.random_range(-80..=80)];
            let free = [rng.random_range(-2..=2), rng.random_range(-2..=2)];
            let c = Character::from_parts(vec![x[0], x[1], free[0], free[1]], 0.into());
            prop_assert_eq!(sys.is_trivial(&c), oracle.contains(x) && free == [0, 0]);
        }
    }

    #[test]
    fn divide_exact_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = random_system(&mut rng);
        let draw = |rng: &mut ChaCha8Rng| {
            let xs: Vec<Character> = (0..rng.random_range(0..5)).map(|_| random_unramified_char(rng, &sys)).collect();
            sys.tate_product(&xs, &Character::trivial())
        };
        let (p, q) = (draw(&mut rng), draw(&mut rng));
        let pq = p.mul(&q);
        prop_assert_eq!(pq.divide_exact(&q).unwrap(), p.clone());
        prop_assert_eq!(pq.divide_exact(&p).unwrap(), q.clone());
        prop_assert_eq!(pq.degree(), p.degree() + q.degree());
        prop_assert_eq!(q.divide_exact(&pq).is_ok(), p.is_one());
        prop_assert_eq!(pq.divide_exact(&LFactorProduct::one()).unwrap(), pq.clone());
    }
}

#[test]
fn oracle_counts_match_the_index() {
    for basis in sublattices(64) {
        let o = LatticeOracle::new(basis);
        assert_eq!(o.quotient_order() as i64, o.index(), "{basis:?}");
    }
}
