//! Homology with coefficients in `Q[t, t^-1]`, twisted by an integral
//! class: the chain complex of the presentation 2-complex with the group
//! ring pushed along `g -> t^phi(g)`. Since `Q[t,t^-1]` is a PID, the
//! first homology splits into a free part and cyclic torsion modules,
//! both computed exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::alexander;
use crate::presentation::{CohomClass, Presentation};
use crate::{Error, Result};

/// Laurent polynomial in one variable over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `t^a - 1`, the recurring boundary entry.
    pub fn t_power_minus_one(a: i64) -> Self {
        let mut p = Self::monomial(a, BigRational::one());
        p.add_term(0, -BigRational::one());
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of `Q[t,t^-1]` are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Exponent spread; the Euclidean size in this ring.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Division with remainder: `self = q * d + r` with `r` either zero
    /// or of strictly smaller span than `d`.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let alpha = self.min_exp().unwrap();
        let beta = d.min_exp().unwrap();
        let dn = d.span().unwrap();
        // dense coefficient arrays with the minimum exponent shifted to 0
        let an = self.span().unwrap();
        let mut a = vec![BigRational::zero(); an as usize + 1];
        for (e, c) in &self.terms {
            a[(e - alpha) as usize] = c.clone();
        }
        let mut b = vec![BigRational::zero(); dn as usize + 1];
        for (e, c) in &d.terms {
            b[(e - beta) as usize] = c.clone();
        }
        let lead = b[dn as usize].clone();
        let mut q = Self::zero();
        for deg in (dn..=an).rev() {
            let coeff = a[deg as usize].clone();
            if coeff.is_zero() {
                continue;
            }
            let factor = coeff / &lead;
            for k in 0..=dn {
                let t = &factor * &b[k as usize];
                a[(deg - dn + k) as usize] -= t;
            }
            q.add_term(deg - dn + alpha - beta, factor);
        }
        let mut r = Self::zero();
        for (i, c) in a.into_iter().enumerate() {
            r.add_term(i as i64 + alpha, c);
        }
        debug_assert!(r.is_zero() || r.span().unwrap() < dn);
        debug_assert_eq!(q.mul(d).add(&r), *self);
        (q, r)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.divmod(self).1.is_zero()
    }

    /// The canonical associate: lowest exponent zero, leading
    /// coefficient one.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shift = self.min_exp().unwrap();
        let lead = self.terms[&self.max_exp().unwrap()].clone();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e - shift, c / &lead);
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

pub type PMat = Vec<Vec<QPoly>>;

pub fn pidentity(n: usize) -> PMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { QPoly::one() } else { QPoly::zero() })
                .collect()
        })
        .collect()
}

pub fn pmat_mul(a: &PMat, b: &PMat) -> PMat {
    let rows = a.len();
    let inner = if rows > 0 { a[0].len() } else { 0 };
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out: PMat = vec![vec![QPoly::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

/// Smith form over `Q[t,t^-1]`: `p * a * q = d` diagonal, each entry
/// dividing the next, nonzero entries in canonical associate form.
pub struct PSmith {
    pub d: PMat,
    pub diag: Vec<QPoly>,
    pub rank: usize,
    pub p: PMat,
    pub p_inv: PMat,
    pub q: PMat,
    pub q_inv: PMat,
}

struct PWork {
    d: PMat,
    p: PMat,
    p_inv: PMat,
    q: PMat,
    q_inv: PMat,
    rows: usize,
    cols: usize,
}

impl PWork {
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

    /// row i *= the unit u
    fn scale_row(&mut self, i: usize, u: &QPoly) {
        assert!(u.is_unit());
        let (e, c) = u.terms.iter().next().unwrap();
        let inv = QPoly::monomial(-e, BigRational::one() / c);
        for x in &mut self.d[i] {
            *x = x.mul(u);
        }
        for x in &mut self.p[i] {
            *x = x.mul(u);
        }
        for r in &mut self.p_inv {
            r[i] = r[i].mul(&inv);
        }
    }

    /// row i += c * row j
    fn add_row(&mut self, i: usize, j: usize, c: &QPoly) {
        for k in 0..self.cols {
            self.d[i][k] = self.d[i][k].add(&c.mul(&self.d[j][k]));
        }
        let pj = self.p[j].clone();
        for (x, y) in self.p[i].iter_mut().zip(pj.iter()) {
            *x = x.add(&c.mul(y));
        }
        for r in &mut self.p_inv {
            let t = c.mul(&r[i]);
            r[j] = r[j].sub(&t);
        }
    }

    /// col i += c * col j
    fn add_col(&mut self, i: usize, j: usize, c: &QPoly) {
        for r in &mut self.d {
            let t = c.mul(&r[j]);
            r[i] = r[i].add(&t);
        }
        for r in &mut self.q {
            let t = c.mul(&r[j]);
            r[i] = r[i].add(&t);
        }
        let qi = self.q_inv[i].clone();
        for (x, y) in self.q_inv[j].iter_mut().zip(qi.iter()) {
            *x = x.sub(&c.mul(y));
        }
    }
}

pub fn psmith(a: &PMat) -> PSmith {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut w = PWork {
        d: a.clone(),
        p: pidentity(rows),
        p_inv: pidentity(rows),
        q: pidentity(cols),
        q_inv: pidentity(cols),
        rows,
        cols,
    };

    let mut k = 0;
    while k < w.rows && k < w.cols {
        // pivot of minimal span in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..w.rows {
            for j in k..w.cols {
                if w.d[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if w.d[i][j].span() < w.d[pi][pj].span() {
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
                    let c = w.d[i][k].divmod(&w.d[k][k]).0.neg();
                    w.add_row(i, k, &c);
                    if !w.d[i][k].is_zero() {
                        w.swap_rows(k, i);
                        clean = false;
                    }
                }
            }
            for j in k + 1..w.cols {
                if !w.d[k][j].is_zero() {
                    let c = w.d[k][j].divmod(&w.d[k][k]).0.neg();
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

        let unit = unit_to_normalize(&w.d[k][k]);
        w.scale_row(k, &unit);
        k += 1;
    }

    // enforce the divisibility chain
    let n = k;
    loop {
        let mut changed = false;
        for i in 0..n.saturating_sub(1) {
            let a_ = w.d[i][i].clone();
            let b_ = w.d[i + 1][i + 1].clone();
            if a_.divides(&b_) {
                continue;
            }
            changed = true;
            // fold column i+1 into column i, run Euclid down column i,
            // then clear the stray entry in row i; entries of column i+1
            // stay multiples of the old pair, hence of the new pivot
            w.add_col(i, i + 1, &QPoly::one());
            while !w.d[i + 1][i].is_zero() {
                let c = w.d[i + 1][i].divmod(&w.d[i][i]).0.neg();
                w.add_row(i + 1, i, &c);
                if !w.d[i + 1][i].is_zero() {
                    w.swap_rows(i, i + 1);
                }
            }
            if !w.d[i][i + 1].is_zero() {
                let (c, r) = w.d[i][i + 1].divmod(&w.d[i][i]);
                debug_assert!(r.is_zero());
                w.add_col(i + 1, i, &c.neg());
            }
            let u = unit_to_normalize(&w.d[i][i]);
            w.scale_row(i, &u);
            let u = unit_to_normalize(&w.d[i + 1][i + 1]);
            w.scale_row(i + 1, &u);
        }
        if !changed {
            break;
        }
    }

    let diag: Vec<QPoly> =
        (0..std::cmp::min(rows, cols)).map(|i| w.d[i][i].clone()).collect();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    for pair in diag.windows(2) {
        debug_assert!(pair[1].is_zero() || pair[0].divides(&pair[1]));
    }
    PSmith { d: w.d, diag, rank, p: w.p, p_inv: w.p_inv, q: w.q, q_inv: w.q_inv }
}

fn unit_to_normalize(d: &QPoly) -> QPoly {
    if d.is_zero() {
        return QPoly::one();
    }
    let lead = d.terms[&d.max_exp().unwrap()].clone();
    QPoly::monomial(-d.min_exp().unwrap(), BigRational::one() / lead)
}

/// Push a free-group-ring element along `g -> t^phi(g)`.
fn push_ring(e: &alexander::GroupRingElem, phi: &[BigInt]) -> QPoly {
    let mut out = QPoly::zero();
    for (word, coeff) in &e.terms {
        let mut exp = BigInt::zero();
        for l in &word.letters {
            if l.inv {
                exp -= &phi[l.gen];
            } else {
                exp += &phi[l.gen];
            }
        }
        let exp = i64::try_from(&exp).expect("twisted exponent fits in i64");
        out.add_term(exp, BigRational::from(coeff.clone()));
    }
    out
}

/// The Fox chain complex of the presentation complex with `Q[t,t^-1]`
/// coefficients: `d2` is generators-by-relators, `d1` the column of
/// `t^phi(x_i) - 1`. The contraction `d1 . d2 = 0` restates the
/// fundamental identity of Fox calculus and is verified on every build.
pub fn fox_chain_complex(p: &Presentation, phi: &CohomClass) -> Result<(PMat, Vec<QPoly>)> {
    let ints = phi
        .integral_values()
        .ok_or_else(|| Error::Parse("twisted coefficients need an integral class".into()))?;
    if ints.iter().all(|v| v.is_zero()) {
        return Err(Error::ZeroClass);
    }
    let m = p.gens.len();
    let n = p.rels.len();
    let d1: Vec<QPoly> = (0..m)
        .map(|i| {
            let e = i64::try_from(&ints[i]).expect("class value fits in i64");
            QPoly::t_power_minus_one(e)
        })
        .collect();
    let mut d2: PMat = vec![vec![QPoly::zero(); n]; m];
    for (j, r) in p.rels.iter().enumerate() {
        for i in 0..m {
            d2[i][j] = push_ring(&alexander::fox_derivative(r, i), &ints);
        }
        let mut total = QPoly::zero();
        for i in 0..m {
            total = total.add(&d1[i].mul(&d2[i][j]));
        }
        if !total.is_zero() {
            return Err(Error::Internal(format!(
                "fox identity fails over Q[t,t^-1] on relator {j}"
            )));
        }
    }
    Ok((d2, d1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedH1 {
    pub free_rank: usize,
    /// Invariant factors of the torsion part, canonically normalized,
    /// each dividing the next.
    pub torsion: Vec<QPoly>,
    pub min_generators: usize,
}

/// `H_1` of the presentation complex with coefficients twisted by an
/// integral class: kernel of `d1` modulo image of `d2`, decomposed by
/// the Smith form over the PID `Q[t,t^-1]`.
pub fn h1_qt(p: &Presentation, phi: &CohomClass) -> Result<TwistedH1> {
    let (d2, d1) = fox_chain_complex(p, phi)?;
    let m = p.gens.len();
    let n = p.rels.len();

    // column-reduce the 1 x m matrix d1; the kernel is spanned by the
    // images of the last m-1 coordinates
    let s1 = psmith(&vec![d1.clone()]);
    debug_assert_eq!(s1.rank, 1, "a nonzero class kills some generator direction");
    let coords = pmat_mul(&s1.q_inv, &d2);
    for j in 0..n {
        debug_assert!(
            coords[0][j].is_zero(),
            "boundaries must lie in the kernel of d1"
        );
    }
    let relations: PMat = coords[1..].to_vec();

    let s2 = psmith(&relations);
    let free_rank = (m - 1) - s2.rank;
    let torsion: Vec<QPoly> = s2
        .diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_unit())
        .cloned()
        .collect();
    let min_generators = free_rank + torsion.len();
    Ok(TwistedH1 { free_rank, torsion, min_generators })
}
