//! Random character systems and brute-force oracles shared by the property
//! tests and the acceptance run.
#![allow(dead_code)]

use num_rational::Rational64;
use rand::Rng;

use lspin::chars::{CharSystem, Character, Ramification};

/// Up to six generators, a mix of ramified, unramified and finite-order ones,
/// with a few random relations that keep ramified and unramified apart.
pub fn random_system<R: Rng>(rng: &mut R) -> CharSystem {
    loop {
        let mut b = CharSystem::builder();
        let n = rng.random_range(2..=6);
        let mut gens = Vec::new();
        for i in 0..n {
            let ram = if rng.random_bool(0.3) { Ramification::Ramified } else { Ramification::Unramified };
            let order = if rng.random_bool(0.25) { Some(rng.random_range(2..=4)) } else { None };
            gens.push((b.generator(&format!("g{i}"), ram, order).unwrap(), ram));
        }
        for _ in 0..rng.random_range(0..=2) {
            let ram = gens[rng.random_range(0..n)].1;
            let pool: Vec<&Character> = gens.iter().filter(|g| g.1 == ram).map(|g| &g.0).collect();
            let mut lhs = Character::trivial();
            for g in &pool {
                lhs = lhs.times(&g.pow(rng.random_range(-2..=2)));
            }
            let rhs = if ram == Ramification::Unramified && rng.random_bool(0.5) {
                Character::nu(Rational64::new(rng.random_range(-3..=3), 2))
            } else {
                Character::trivial()
            };
            b.relation(lhs, rhs);
        }
        if let Ok(s) = b.build() {
            return s;
        }
    }
}

pub fn random_char<R: Rng>(rng: &mut R, sys: &CharSystem) -> Character {
    let exps: Vec<i64> = (0..sys.generators().len()).map(|_| rng.random_range(-3..=3)).collect();
    Character::from_parts(exps, Rational64::new(rng.random_range(-4..=4), 2))
}

pub fn random_unramified_char<R: Rng>(rng: &mut R, sys: &CharSystem) -> Character {
    let exps: Vec<i64> = sys
        .generators()
        .iter()
        .map(|g| if g.ramification == Ramification::Unramified { rng.random_range(-2..=2) } else { 0 })
        .collect();
    Character::from_parts(exps, Rational64::new(rng.random_range(-4..=4), 2))
}

/// Associativity, commutativity, identity, inverses, powers and twists for
/// one random triple.
pub fn group_law_check(sys: &CharSystem, a: &Character, b: &Character, c: &Character) -> Result<(), String> {
    let r = |x: &Character| sys.render(x);
    let one = Character::trivial();
    let ab_c = sys.mul(&sys.mul(a, b), c);
    let a_bc = sys.mul(a, &sys.mul(b, c));
    if ab_c != a_bc {
        return Err(format!("associativity: {} vs {}", r(&ab_c), r(&a_bc)));
    }
    if sys.mul(a, b) != sys.mul(b, a) {
        return Err(format!("commutativity for {} and {}", r(a), r(b)));
    }
    if sys.mul(a, &one) != sys.normalize(a) {
        return Err(format!("identity for {}", r(a)));
    }
    if !sys.is_trivial(&sys.mul(a, &sys.inv(a))) {
        return Err(format!("inverse for {}", r(a)));
    }
    let n = sys.normalize(a);
    if sys.normalize(&n) != n || !sys.equals(a, &n) {
        return Err(format!("normal form of {} is not idempotent", r(a)));
    }
    if sys.pow(a, 3) != sys.mul(a, &sys.mul(a, a)) || !sys.is_trivial(&sys.pow(a, 0)) {
        return Err(format!("powers of {}", r(a)));
    }
    let h = Rational64::new(1, 2);
    if sys.twist(a, h) != sys.mul(a, &Character::nu(h)) {
        return Err(format!("twist of {}", r(a)));
    }
    if sys.equals(a, b) != (sys.div(a, b) == sys.normalize(&one)) {
        return Err(format!("equals vs quotient for {} and {}", r(a), r(b)));
    }
    Ok(())
}

/// Every sublattice of `Z²` of index at most `max_index`, as HNF bases
/// `(d1, k), (0, d2)` with `0 ≤ k < d2`.
pub fn sublattices(max_index: i64) -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    for d1 in 1..=max_index {
        for d2 in 1..=max_index / d1 {
            for k in 0..d2 {
                out.push([[d1, k], [0, d2]]);
            }
        }
    }
    out
}

/// Brute-force membership: with `N` the index, `N·Z² ⊆ L`, so `v ∈ L` iff
/// `v mod N` lies in the subgroup of `(Z/N)²` generated by the basis.
pub struct LatticeOracle {
    n: i64,
    members: Vec<bool>,
}

impl LatticeOracle {
    pub fn new(basis: [[i64; 2]; 2]) -> Self {
        let n = (basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]).abs();
        let idx = |x: i64, y: i64| (x.rem_euclid(n) * n + y.rem_euclid(n)) as usize;
        let mut members = vec![false; (n * n) as usize];
        let mut stack = vec![(0i64, 0i64)];
        members[0] = true;
        while let Some((x, y)) = stack.pop() {
            for r in basis {
                let (u, v) = ((x + r[0]).rem_euclid(n), (y + r[1]).rem_euclid(n));
                if !members[idx(u, v)] {
                    members[idx(u, v)] = true;
                    stack.push((u, v));
                }
            }
        }
        LatticeOracle { n, members }
    }

    pub fn index(&self) -> i64 {
        self.n
    }

    pub fn contains(&self, v: [i64; 2]) -> bool {
        self.members[(v[0].rem_euclid(self.n) * self.n + v[1].rem_euclid(self.n)) as usize]
    }

    /// Quotient size by counting cosets of `(Z/N)²`.
    pub fn quotient_order(&self) -> usize {
        (self.n * self.n) as usize / self.members.iter().filter(|m| **m).count()
    }
}

/// A system on `a, b` (relations from a scrambled lattice basis) and two free
/// generators `c, d`: the quotient is `Z²/L × Z²`.
pub fn lattice_system<R: Rng>(basis: [[i64; 2]; 2], rng: &mut R) -> CharSystem {
    let mut rows = basis;
    for _ in 0..4 {
        let (i, j) = if rng.random_bool(0.5) { (0, 1) } else { (1, 0) };
        let k = rng.random_range(-2..=2);
        rows[i] = [rows[i][0] + k * rows[j][0], rows[i][1] + k * rows[j][1]];
    }
    let mut b = CharSystem::builder();
    let a = b.unramified("a").unwrap();
    let bb = b.unramified("b").unwrap();
    b.unramified("c").unwrap();
    b.unramified("d").unwrap();
    for r in rows {
        b.relation(a.pow(r[0]).times(&bb.pow(r[1])), Character::trivial());
    }
    b.build().unwrap()
}
