//! Hermite normal form of a relation lattice with a rational ν column.
//!
//! A relation row `(v, a)` asserts `∏ g_j^{v_j} · ν^{a} = 1`. Rows are kept in
//! echelon form with positive pivots; entries above each pivot are reduced
//! into `[0, pivot)`, which makes reduction of a vector canonical.

use num_rational::Rational64;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LatticeRow {
    pub pivot: usize,
    pub exps: Vec<i64>,
    pub nu: Rational64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct HermiteLattice {
    width: usize,
    rows: Vec<LatticeRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum HnfError {
    /// Some integer combination of the relations is a nontrivial power of ν.
    Degenerate(Rational64),
    Overflow,
}

fn axpy(dst: &mut [i64], dst_nu: &mut Rational64, q: i64, src: &[i64], src_nu: Rational64) -> Result<(), HnfError> {
    for (d, s) in dst.iter_mut().zip(src) {
        let prod = q.checked_mul(*s).ok_or(HnfError::Overflow)?;
        *d = d.checked_sub(prod).ok_or(HnfError::Overflow)?;
    }
    *dst_nu -= src_nu * Rational64::from_integer(q);
    Ok(())
}

impl HermiteLattice {
    pub fn new(width: usize, relations: &[(Vec<i64>, Rational64)]) -> Result<Self, HnfError> {
        let mut m: Vec<(Vec<i64>, Rational64)> = relations
            .iter()
            .map(|(v, a)| {
                let mut row = v.clone();
                row.resize(width, 0);
                (row, *a)
            })
            .collect();

        let mut r = 0;
        let mut pivots = Vec::new();
        for col in 0..width {
            loop {
                // smallest nonzero entry at or below r becomes the pivot candidate
                let cand = (r..m.len())
                    .filter(|&i| m[i].0[col] != 0)
                    .min_by_key(|&i| m[i].0[col].unsigned_abs());
                let Some(best) = cand else { break };
                m.swap(r, best);
                let mut done = true;
                for i in r + 1..m.len() {
                    if m[i].0[col] != 0 {
                        let q = m[i].0[col] / m[r].0[col];
                        let (head, tail) = m.split_at_mut(i);
                        let src = &head[r];
                        let dst = &mut tail[0];
                        axpy(&mut dst.0, &mut dst.1, q, &src.0, src.1)?;
                        if dst.0[col] != 0 {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if r < m.len() && m[r].0[col] != 0 {
                if m[r].0[col] < 0 {
                    for x in m[r].0.iter_mut() {
                        *x = -*x;
                    }
                    m[r].1 = -m[r].1;
                }
                pivots.push(col);
                r += 1;
            }
        }
        for row in &m[r..] {
            if !row.1.is_zero() {
                return Err(HnfError::Degenerate(row.1));
            }
        }
        m.truncate(r);

        // back-substitute so that entries above each pivot lie in [0, pivot)
        for k in 0..r {
            let col = pivots[k];
            let d = m[k].0[col];
            for i in 0..k {
                let q = m[i].0[col].div_euclid(d);
                if q != 0 {
                    let (head, tail) = m.split_at_mut(k);
                    let src = &tail[0];
                    let dst = &mut head[i];
                    axpy(&mut dst.0, &mut dst.1, q, &src.0, src.1)?;
                }
            }
        }

        let rows = m
            .into_iter()
            .zip(pivots)
            .map(|((exps, nu), pivot)| LatticeRow { pivot, exps, nu })
            .collect();
        Ok(HermiteLattice { width, rows })
    }

    pub fn rows(&self) -> &[LatticeRow] {
        &self.rows
    }

    /// Reduce `(x, nu)` modulo the lattice. The result is canonical:
    /// two vectors differ by a lattice element iff they reduce identically.
    pub fn reduce(&self, x: &mut Vec<i64>, nu: &mut Rational64) {
        x.resize(self.width.max(x.len()), 0);
        for row in &self.rows {
            let d = row.exps[row.pivot];
            let q = x[row.pivot].div_euclid(d);
            if q != 0 {
                for (xi, ri) in x.iter_mut().zip(&row.exps) {
                    *xi -= q * ri;
                }
                *nu -= row.nu * Rational64::from_integer(q);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn order_two_reduction() {
        let l = HermiteLattice::new(2, &[(vec![2, 0], r(0, 1))]).unwrap();
        let mut x = vec![3, 1];
        let mut nu = r(0, 1);
        l.reduce(&mut x, &mut nu);
        assert_eq!(x, vec![1, 1]);
    }

    #[test]
    fn nu_is_folded_in() {
        // chi = nu, i.e. chi * nu^{-1} = 1
        let l = HermiteLattice::new(2, &[(vec![1, 0], r(-1, 1))]).unwrap();
        let mut x = vec![1, 1];
        let mut nu = r(0, 1);
        l.reduce(&mut x, &mut nu);
        assert_eq!(x, vec![0, 1]);
        assert_eq!(nu, r(1, 1));
    }

    #[test]
    fn degenerate_system_rejected() {
        // g^2 = nu and g^2 = 1 together force nu = 1
        let err = HermiteLattice::new(1, &[(vec![2], r(-1, 1)), (vec![2], r(0, 1))]).unwrap_err();
        assert_eq!(err, HnfError::Degenerate(r(1, 1)));
    }

    #[test]
    fn back_substitution_is_canonical() {
        // g0^2 g1 = 1, g1^3 = 1
        let l = HermiteLattice::new(2, &[(vec![2, 1], r(0, 1)), (vec![0, 3], r(0, 1))]).unwrap();
        let a = {
            let mut x = vec![2, 1];
            let mut n = r(0, 1);
            l.reduce(&mut x, &mut n);
            x
        };
        assert_eq!(a, vec![0, 0]);
        let mut x = vec![0, 4];
        let mut n = r(0, 1);
        l.reduce(&mut x, &mut n);
        assert_eq!(x, vec![0, 1]);
    }
}
