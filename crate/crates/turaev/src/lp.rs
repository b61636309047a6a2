//! Exact linear programming over the rationals.
//!
//! Two-phase primal simplex on the standard form `min c.x, A x = b,
//! x >= 0`, with Bland's rule throughout, so the solver terminates on
//! degenerate problems. Everything is `BigRational`; there is no
//! floating point anywhere.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: BigRational, x: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// m rows of n+1 entries; the last entry is the right-hand side.
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c].clone();
        for v in &mut self.rows[r] {
            *v /= &piv;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..=self.ncols {
                let t = &self.rows[r][j] * &f;
                self.rows[i][j] -= t;
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[BigRational], j: usize) -> BigRational {
        let mut z = cost[j].clone();
        for (i, row) in self.rows.iter().enumerate() {
            if !cost[self.basis[i]].is_zero() {
                z -= &cost[self.basis[i]] * &row[j];
            }
        }
        z
    }

    fn objective(&self, cost: &[BigRational]) -> BigRational {
        let mut z = BigRational::zero();
        for (i, _) in self.rows.iter().enumerate() {
            z += &cost[self.basis[i]] * self.rhs(i);
        }
        z
    }

    /// Simplex iterations with Bland's rule: entering column is the
    /// lowest-index one with negative reduced cost, leaving row breaks
    /// ratio ties by the lowest basis index. Returns false on an
    /// unbounded ray.
    fn run(&mut self, cost: &[BigRational], usable: usize) -> bool {
        loop {
            let mut entering = None;
            for j in 0..usable {
                if self.reduced_cost(cost, j).is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else { return true };
            let mut leaving: Option<usize> = None;
            let mut best: Option<BigRational> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.rows[i][j];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b && self.basis[i] < self.basis[leaving.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leaving = Some(i);
                }
            }
            let Some(r) = leaving else { return false };
            self.pivot(r, j);
        }
    }
}

/// Minimize `c.x` subject to `A x = b`, `x >= 0`.
pub fn solve_min(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m);
    for row in a {
        assert_eq!(row.len(), n);
    }

    // phase 1 tableau: original columns, artificial per row, rhs >= 0
    let total = n + m;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        let mut row: Vec<BigRational> = Vec::with_capacity(total + 1);
        for j in 0..n {
            row.push(if neg { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { BigRational::one() } else { BigRational::zero() });
        }
        row.push(if neg { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau { rows, basis: (n..total).collect(), ncols: total };

    let mut phase1 = vec![BigRational::zero(); total];
    for j in n..total {
        phase1[j] = BigRational::one();
    }
    let bounded = t.run(&phase1, total);
    assert!(bounded, "phase one objective is bounded below by zero");
    if !t.objective(&phase1).is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive leftover artificials out of the basis; a row with no real
    // pivot candidate is a redundant constraint and gets dropped
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    debug_assert!(t.rhs(i).is_zero());
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2 = c.to_vec();
    phase2.extend(std::iter::repeat(BigRational::zero()).take(m));
    if !t.run(&phase2, n) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![BigRational::zero(); n];
    for (i, &bi) in t.basis.iter().enumerate() {
        if bi < n {
            x[bi] = t.rhs(i).clone();
        }
    }
    LpOutcome::Optimal { value: t.objective(&phase2), x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn ratf(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn simplex_basics() {
        // min x + y on the segment x + y = 1
        let out = solve_min(&[rat(1), rat(1)], &[vec![rat(1), rat(1)]], &[rat(1)]);
        assert_eq!(out, LpOutcome::Optimal { value: rat(1), x: vec![rat(1), rat(0)] });

        // max x + y over x + 2y <= 4, 3x + y <= 6 (slacks added by hand)
        let a = vec![
            vec![rat(1), rat(2), rat(1), rat(0)],
            vec![rat(3), rat(1), rat(0), rat(1)],
        ];
        let c = [rat(-1), rat(-1), rat(0), rat(0)];
        let out = solve_min(&c, &a, &[rat(4), rat(6)]);
        match out {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, ratf(-14, 5));
                assert_eq!(x[0], ratf(8, 5));
                assert_eq!(x[1], ratf(6, 5));
            }
            other => panic!("expected an optimum, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x + y = -1 has no nonnegative solution
        let out = solve_min(&[rat(0), rat(0)], &[vec![rat(1), rat(1)]], &[rat(-1)]);
        assert_eq!(out, LpOutcome::Infeasible);

        // min -x with x - y = 0 rides the diagonal forever
        let out = solve_min(&[rat(-1), rat(0)], &[vec![rat(1), rat(-1)]], &[rat(0)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_harmless() {
        // the same constraint three times over
        let row = vec![rat(2), rat(1)];
        let a = vec![row.clone(), row.clone(), row];
        let out = solve_min(&[rat(1), rat(1)], &a, &[rat(4), rat(4), rat(4)]);
        assert_eq!(out, LpOutcome::Optimal { value: rat(2), x: vec![rat(2), rat(0)] });
    }

    #[test]
    fn negative_rhs_normalization() {
        // -x - y = -3 is the segment x + y = 3
        let out = solve_min(&[rat(1), rat(2)], &[vec![rat(-1), rat(-1)]], &[rat(-3)]);
        assert_eq!(out, LpOutcome::Optimal { value: rat(3), x: vec![rat(3), rat(0)] });
    }

    /// Gaussian solve of a square system, used only by the oracle below.
    fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
        let m = a.len();
        let mut aug: Vec<Vec<BigRational>> = a
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        for col in 0..m {
            let piv = (col..m).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, piv);
            let p = aug[col][col].clone();
            for v in &mut aug[col] {
                *v /= &p;
            }
            for r in 0..m {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for j in 0..=m {
                        let t = &aug[col][j] * &f;
                        aug[r][j] -= t;
                    }
                }
            }
        }
        Some(aug.iter().map(|r| r[m].clone()).collect())
    }

    /// Enumerate every basic feasible solution and take the best. The
    /// optimum of a bounded LP is attained at one of them. Redundant
    /// constraints are eliminated first so the bases are square.
    fn brute_min(
        c: &[BigRational],
        a: &[Vec<BigRational>],
        b: &[BigRational],
    ) -> Option<BigRational> {
        let n = c.len();
        let mut aug: Vec<Vec<BigRational>> = a
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..aug.len()).find(|&i| !aug[i][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, p);
            let piv = aug[rank][col].clone();
            for v in &mut aug[rank] {
                *v /= &piv;
            }
            for i in 0..aug.len() {
                if i != rank && !aug[i][col].is_zero() {
                    let f = aug[i][col].clone();
                    for j in 0..=n {
                        let t = &aug[rank][j] * &f;
                        aug[i][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        for row in &aug[rank..] {
            assert!(row[n].is_zero(), "inconsistent system in a feasible instance");
        }
        let a: Vec<Vec<BigRational>> = aug[..rank].iter().map(|r| r[..n].to_vec()).collect();
        let b: Vec<BigRational> = aug[..rank].iter().map(|r| r[n].clone()).collect();
        let a = &a;
        let b = &b;
        let m = rank;
        let mut best: Option<BigRational> = None;
        for cols in (0..n).combinations(m) {
            let sub: Vec<Vec<BigRational>> =
                a.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
            let Some(xb) = solve_square(&sub, b) else { continue };
            if xb.iter().any(|v| v.is_negative()) {
                continue;
            }
            let mut val = BigRational::zero();
            for (k, &j) in cols.iter().enumerate() {
                val += &c[j] * &xb[k];
            }
            if best.as_ref().map_or(true, |b| val < *b) {
                best = Some(val);
            }
        }
        best
    }

    #[test]
    fn random_lps_match_basic_solution_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut optima = 0;
        for _ in 0..200 {
            let m = rng.gen_range(1..4);
            let n = rng.gen_range(m..7);
            // build around a known feasible point so phase one succeeds
            let xstar: Vec<BigRational> =
                (0..n).map(|_| rat(rng.gen_range(0..4))).collect();
            let a: Vec<Vec<BigRational>> = (0..m)
                .map(|_| (0..n).map(|_| rat(rng.gen_range(-3..4))).collect())
                .collect();
            let b: Vec<BigRational> = a
                .iter()
                .map(|row| row.iter().zip(&xstar).map(|(r, x)| r * x).sum())
                .collect();
            let c: Vec<BigRational> = (0..n).map(|_| rat(rng.gen_range(-3..4))).collect();
            match solve_min(&c, &a, &b) {
                LpOutcome::Optimal { value, x } => {
                    optima += 1;
                    // exact feasibility of the reported point
                    for (row, bi) in a.iter().zip(&b) {
                        let lhs: BigRational =
                            row.iter().zip(&x).map(|(r, v)| r * v).sum();
                        assert_eq!(&lhs, bi);
                    }
                    assert!(x.iter().all(|v| !v.is_negative()));
                    assert_eq!(Some(value), brute_min(&c, &a, &b));
                }
                LpOutcome::Unbounded => {}
                LpOutcome::Infeasible => panic!("a feasible point exists by construction"),
            }
        }
        assert!(optima > 50, "too few bounded instances ({optima}) to trust the check");
    }
}
