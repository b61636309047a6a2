//! Smith normal form over the integers, with transformation matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

pub fn zeros(rows: usize, cols: usize) -> IMat {
    vec![vec![BigInt::zero(); cols]; rows]
}

pub fn identity(n: usize) -> IMat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    m
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let rows = a.len();
    let inner = if rows > 0 { a[0].len() } else { 0 };
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let t = &a[i][k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

/// `p * a * q = d` with `p`, `q` unimodular and `d` diagonal, entries
/// nonnegative and each dividing the next. `p_inv` and `q_inv` are the
/// inverses of `p` and `q`.
pub struct Smith {
    pub d: IMat,
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub p: IMat,
    pub p_inv: IMat,
    pub q: IMat,
    pub q_inv: IMat,
}

struct Work {
    d: IMat,
    p: IMat,
    p_inv: IMat,
    q: IMat,
    q_inv: IMat,
    rows: usize,
    cols: usize,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.d.swap(i, j);
        self.p.swap(i, j);
        for r in &mut self.p_inv {
            r.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in &mut self.d {
            r.swap(i, j);
        }
        for r in &mut self.q {
            r.swap(i, j);
        }
        self.q_inv.swap(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.d[i] {
            *x = -std::mem::take(x);
        }
        for x in &mut self.p[i] {
            *x = -std::mem::take(x);
        }
        for r in &mut self.p_inv {
            r[i] = -std::mem::take(&mut r[i]);
        }
    }

    /// row i += c * row j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let t = c * &self.d[j][k];
            self.d[i][k] += t;
        }
        let pc = self.p[j].clone();
        for (x, y) in self.p[i].iter_mut().zip(pc.iter()) {
            *x += c * y;
        }
        // inverse picks up column j -= c * column i
        for r in &mut self.p_inv {
            let t = c * &r[i];
            r[j] -= t;
        }
    }

    /// col i += c * col j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for r in &mut self.d {
            let t = c * &r[j];
            r[i] += t;
        }
        for r in &mut self.q {
            let t = c * &r[j];
            r[i] += t;
        }
        let qr = self.q_inv[i].clone();
        for (x, y) in self.q_inv[j].iter_mut().zip(qr.iter()) {
            *x -= c * y;
        }
    }
}

pub fn smith(a: &IMat) -> Smith {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut w = Work {
        d: a.clone(),
        p: identity(rows),
        p_inv: identity(rows),
        q: identity(cols),
        q_inv: identity(cols),
        rows,
        cols,
    };

    let mut k = 0;
    while k < w.rows && k < w.cols {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..w.rows {
            for j in k..w.cols {
                if w.d[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if w.d[i][j].abs() < w.d[pi][pj].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        loop {
            let mut clean = true;
            for i in k + 1..w.rows {
                if !w.d[i][k].is_zero() {
                    let c = -(&w.d[i][k] / &w.d[k][k]);
                    w.add_row(i, k, &c);
                    if !w.d[i][k].is_zero() {
                        w.swap_rows(k, i);
                        clean = false;
                    }
                }
            }
            for j in k + 1..w.cols {
                if !w.d[k][j].is_zero() {
                    let c = -(&w.d[k][j] / &w.d[k][k]);
                    w.add_col(j, k, &c);
                    if !w.d[k][j].is_zero() {
                        w.swap_cols(k, j);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }

        if w.d[k][k].is_negative() {
            w.negate_row(k);
        }
        k += 1;
    }

    // enforce the divisibility chain d[k] | d[k+1]
    let n = k;
    loop {
        let mut changed = false;
        for i in 0..n.saturating_sub(1) {
            let a_ = w.d[i][i].clone();
            let b_ = w.d[i + 1][i + 1].clone();
            if (&b_ % &a_).is_zero() {
                continue;
            }
            changed = true;
            let g = a_.gcd(&b_);
            // diag(a, b) -> diag(gcd, lcm) by elementary moves:
            // fold column i+1 into column i, run Euclid down column i,
            // then clear the stray entry in row i (all entries in column
            // i+1 stay multiples of b, hence of the new pivot g).
            w.add_col(i, i + 1, &BigInt::from(1));
            while !w.d[i + 1][i].is_zero() {
                let c = -(&w.d[i + 1][i] / &w.d[i][i]);
                w.add_row(i + 1, i, &c);
                if !w.d[i + 1][i].is_zero() {
                    w.swap_rows(i, i + 1);
                }
            }
            if !w.d[i][i + 1].is_zero() {
                let c = -(&w.d[i][i + 1] / &w.d[i][i]);
                w.add_col(i + 1, i, &c);
            }
            if w.d[i][i].is_negative() {
                w.negate_row(i);
            }
            if w.d[i + 1][i + 1].is_negative() {
                w.negate_row(i + 1);
            }
            debug_assert_eq!(w.d[i][i], g);
        }
        if !changed {
            break;
        }
    }

    let diag: Vec<BigInt> = (0..std::cmp::min(rows, cols)).map(|i| w.d[i][i].clone()).collect();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    Smith { d: w.d, diag, rank, p: w.p, p_inv: w.p_inv, q: w.q, q_inv: w.q_inv }
}

/// Kernel of `a` as a list of basis columns (the kernel of an integer
/// matrix is a direct summand, so this is an honest lattice basis).
pub fn kernel_basis(a: &IMat) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    if rows == 0 {
        return (0..cols)
            .map(|j| {
                let mut v = vec![BigInt::zero(); cols];
                v[j] = BigInt::from(1);
                v
            })
            .collect();
    }
    let s = smith(a);
    (s.rank..cols).map(|j| (0..cols).map(|i| s.q[i][j].clone()).collect()).collect()
}
