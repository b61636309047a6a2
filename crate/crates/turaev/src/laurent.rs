//! Multivariable Laurent polynomials over the integers.
//!
//! Terms are keyed by exponent vectors. Polynomials that differ by a unit
//! (a sign and a monomial) share a canonical form: exponents shifted so
//! the componentwise minimum is zero, and the graded-lex leading
//! coefficient positive. Gcds are computed up to units, by recursing on
//! the number of variables with content and primitive-part reduction and
//! a rational Euclidean algorithm at the univariate base.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn monomial(exp: Vec<i64>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let nvars = exp.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The single variable `t` as a one-variable polynomial.
    pub fn var() -> Self {
        Self::monomial(vec![1], 1)
    }

    pub fn from_terms(nvars: usize, terms: &[(Vec<i64>, i64)]) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e.clone(), BigInt::from(*c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Integer content: the gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut min = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in min.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        Some(min)
    }

    fn graded_lex_leading(&self) -> Option<&Vec<i64>> {
        self.terms.keys().max_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        })
    }

    /// Canonical representative of the unit class: componentwise minimum
    /// exponent zero, graded-lex leading coefficient positive.
    pub fn canonical(&self) -> Self {
        let Some(min) = self.min_exponents() else {
            return Self::zero(self.nvars);
        };
        let shift: Vec<i64> = min.iter().map(|x| -x).collect();
        let mut p = self.mul_monomial(&shift);
        if let Some(lead) = p.graded_lex_leading() {
            if p.terms[lead].is_negative() {
                p = p.neg();
            }
        }
        p
    }

    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    /// Exponent vectors of the nonzero terms, sorted.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    /// Push forward along an integral class: each exponent vector `v`
    /// becomes the single exponent `<phi, v>`. Terms may cancel.
    pub fn specialize(&self, phi: &[BigInt]) -> LaurentPoly {
        assert_eq!(phi.len(), self.nvars);
        let mut out = LaurentPoly::zero(1);
        for (e, c) in &self.terms {
            let exp: BigInt = e.iter().zip(phi).map(|(x, p)| p * BigInt::from(*x)).sum();
            let exp = i64::try_from(&exp).expect("specialized exponent fits in i64");
            out.add_term(vec![exp], c.clone());
        }
        out
    }

    /// For one-variable polynomials: the breadth `s - r` of the exponent
    /// range `[r, s]`. Errors on the zero polynomial.
    pub fn span(&self) -> Result<i64> {
        assert_eq!(self.nvars, 1);
        if self.is_zero() {
            return Err(Error::DegreeOfZero);
        }
        let lo = self.terms.keys().map(|e| e[0]).min().unwrap();
        let hi = self.terms.keys().map(|e| e[0]).max().unwrap();
        Ok(hi - lo)
    }

    /// Exact division; errors when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return Err(Error::Internal("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let smin = self.min_exponents().unwrap();
        let dmin = d.min_exponents().unwrap();
        let f = self.mul_monomial(&smin.iter().map(|x| -x).collect::<Vec<_>>());
        let g = d.mul_monomial(&dmin.iter().map(|x| -x).collect::<Vec<_>>());
        let q = poly_exact_div(&f, &g)?;
        let shift: Vec<i64> = smin.iter().zip(&dmin).map(|(a, b)| a - b).collect();
        Ok(q.mul_monomial(&shift))
    }

    /// Gcd up to units, returned in canonical form.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let f = self.canonical();
        let g = other.canonical();
        if f.is_zero() {
            return g;
        }
        if g.is_zero() {
            return f;
        }
        poly_gcd(&f, &g).canonical()
    }

    pub fn display(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        // descending graded-lex reads like a knot polynomial
        let mut exps: Vec<&Vec<i64>> = self.terms.keys().collect();
        exps.sort_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, e) in exps.iter().enumerate() {
            let c = &self.terms[*e];
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(x, _)| **x != 0)
                .map(|(x, n)| if *x == 1 { n.to_string() } else { format!("{n}^{x}") })
                .collect();
            let mono = mono.join("*");
            let abs = c.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

/// Split off the last variable: degree in the main variable maps to the
/// coefficient polynomial in the remaining variables.
fn as_univar(p: &LaurentPoly) -> BTreeMap<i64, LaurentPoly> {
    let k = p.nvars - 1;
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (e, c) in &p.terms {
        let d = e[k];
        let rest = e[..k].to_vec();
        out.entry(d).or_insert_with(|| LaurentPoly::zero(k)).add_term(rest, c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn main_degree(p: &LaurentPoly) -> i64 {
    p.terms.keys().map(|e| e[p.nvars - 1]).max().unwrap()
}

fn main_lead(p: &LaurentPoly) -> LaurentPoly {
    let d = main_degree(p);
    let k = p.nvars - 1;
    let mut out = LaurentPoly::zero(k);
    for (e, c) in &p.terms {
        if e[k] == d {
            out.add_term(e[..k].to_vec(), c.clone());
        }
    }
    out
}

/// Division of polynomials (all exponents nonnegative), exact or error.
fn poly_exact_div(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    if f.is_zero() {
        return Ok(LaurentPoly::zero(f.nvars));
    }
    if f.nvars == 0 {
        let fc = f.terms.values().next().unwrap();
        let gc = g.terms.values().next().unwrap();
        let (q, r) = fc.div_rem(gc);
        if !r.is_zero() {
            return Err(Error::Internal("inexact constant division".into()));
        }
        return Ok(LaurentPoly::constant(0, q));
    }
    let mut rem = f.clone();
    let mut quot = LaurentPoly::zero(f.nvars);
    let dg = main_degree(g);
    let lead_g = main_lead(g);
    while !rem.is_zero() {
        let dr = main_degree(&rem);
        if dr < dg {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        let c = poly_exact_div(&main_lead(&rem), &lead_g)?;
        let mut shift = vec![0i64; f.nvars];
        shift[f.nvars - 1] = dr - dg;
        let mut c_full = LaurentPoly::zero(f.nvars);
        for (e, k) in &c.terms {
            let mut exp = e.clone();
            exp.push(0);
            c_full.add_term(exp, k.clone());
        }
        let piece = c_full.mul_monomial(&shift);
        quot = quot.add(&piece);
        rem = rem.sub(&piece.mul(g));
    }
    Ok(quot)
}

/// Content with respect to the last variable: the recursive gcd of the
/// univariate coefficients.
fn main_content(p: &LaurentPoly) -> LaurentPoly {
    let parts = as_univar(p);
    let k = p.nvars - 1;
    let mut g = LaurentPoly::zero(k);
    for coeff in parts.values() {
        g = g.gcd(coeff);
        if g.is_unit() {
            break;
        }
    }
    g
}

fn lift(p: &LaurentPoly) -> LaurentPoly {
    // add a trailing variable with exponent zero
    let mut out = LaurentPoly::zero(p.nvars + 1);
    for (e, c) in &p.terms {
        let mut exp = e.clone();
        exp.push(0);
        out.add_term(exp, c.clone());
    }
    out
}

fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = main_content(p);
    p.exact_div(&lift(&c)).expect("content divides")
}

/// Pseudo-remainder in the last variable.
fn prem(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let dg = main_degree(g);
    let lead_g = lift(&main_lead(g));
    let mut r = f.clone();
    while !r.is_zero() && main_degree(&r) >= dg {
        let dr = main_degree(&r);
        let lead_r = lift(&main_lead(&r));
        let mut shift = vec![0i64; f.nvars];
        shift[f.nvars - 1] = dr - dg;
        r = r.mul(&lead_g).sub(&g.mul(&lead_r).mul_monomial(&shift));
    }
    r
}

fn poly_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if f.nvars == 0 {
        let a = f.terms.values().next().cloned().unwrap_or_else(BigInt::zero);
        let b = g.terms.values().next().cloned().unwrap_or_else(BigInt::zero);
        return LaurentPoly::constant(0, a.gcd(&b));
    }
    if f.nvars == 1 {
        return univar_gcd(f, g);
    }
    let cf = main_content(f);
    let cg = main_content(g);
    let mut a = primitive_part(f);
    let mut b = primitive_part(g);
    if main_degree(&a) < main_degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b);
        if r.is_zero() {
            break;
        }
        a = b;
        b = primitive_part(&r);
    }
    lift(&cf.gcd(&cg)).mul(&b)
}

fn univar_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let content = f.content().gcd(&g.content());
    let to_rational = |p: &LaurentPoly| -> Vec<BigRational> {
        let deg = p.terms.keys().map(|e| e[0]).max().unwrap() as usize;
        let mut v = vec![BigRational::zero(); deg + 1];
        for (e, c) in &p.terms {
            v[e[0] as usize] = BigRational::from(c.clone());
        }
        v
    };
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    let mut a = to_rational(f);
    let mut b = to_rational(g);
    while !b.is_empty() {
        // a mod b
        while a.len() >= b.len() && !a.is_empty() {
            let k = a.len() - b.len();
            let q = a.last().unwrap() / b.last().unwrap();
            for i in 0..b.len() {
                let t = &q * &b[i];
                a[i + k] -= t;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.is_empty() {
        return LaurentPoly::zero(1);
    }
    // clear denominators and strip content to land back in Z[t]
    let mut lcm = BigInt::one();
    for c in &a {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = a.iter().map(|c| (c * BigRational::from(lcm.clone())).numer().clone()).collect();
    let mut gc = BigInt::zero();
    for c in &ints {
        gc = gc.gcd(c);
    }
    let mut out = LaurentPoly::zero(1);
    for (i, c) in ints.iter().enumerate() {
        out.add_term(vec![i as i64], c / &gc);
    }
    out.mul_scalar(&content)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p1(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(1, &terms.iter().map(|&(e, c)| (vec![e], c)).collect::<Vec<_>>())
    }

    fn p2(terms: &[((i64, i64), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            2,
            &terms.iter().map(|&((a, b), c)| (vec![a, b], c)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn arithmetic() {
        let t = LaurentPoly::var();
        let one = LaurentPoly::one(1);
        let f = t.sub(&one); // t - 1
        let g = f.mul(&f);
        assert_eq!(g, p1(&[(0, 1), (1, -2), (2, 1)]));
        assert!(f.sub(&f).is_zero());
        // cancellation drops terms entirely
        let h = t.add(&one).mul(&f); // t^2 - 1
        assert_eq!(h, p1(&[(0, -1), (2, 1)]));
    }

    #[test]
    fn canonical_form() {
        // t^-2 - t^-1 shifts to 1 - t, then flips sign to t - 1
        let f = p1(&[(-2, 1), (-1, -1)]);
        assert_eq!(f.canonical(), p1(&[(0, -1), (1, 1)]));
        assert!(f.eq_up_to_unit(&p1(&[(0, 1), (1, -1)])));
        assert!(!f.eq_up_to_unit(&p1(&[(0, 1), (1, 1)])));
        assert!(LaurentPoly::zero(1).canonical().is_zero());

        let g = p2(&[((0, -1), 2), ((1, 0), -2)]);
        let c = g.canonical();
        assert_eq!(c.min_exponents().unwrap(), vec![0, 0]);
    }

    #[test]
    fn spans_and_degrees() {
        assert_eq!(p1(&[(0, 1), (2, 1)]).span().unwrap(), 2);
        assert_eq!(p1(&[(-3, 1), (1, 2)]).span().unwrap(), 4);
        assert_eq!(p1(&[(5, 7)]).span().unwrap(), 0);
        assert!(LaurentPoly::zero(1).span().is_err());
    }

    #[test]
    fn specialization() {
        // 1 - u under phi = (1, 0) collapses to zero
        let f = p2(&[((0, 0), 1), ((0, 1), -1)]);
        let phi = [BigInt::from(1), BigInt::from(0)];
        assert!(f.specialize(&phi).is_zero());
        // (s - 1)(u - 1) under (1, 1) becomes (t - 1)^2
        let g = p2(&[((0, 0), 1), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)]);
        let phi = [BigInt::from(1), BigInt::from(1)];
        assert_eq!(g.specialize(&phi), p1(&[(0, 1), (1, -2), (2, 1)]));
    }

    #[test]
    fn exact_division() {
        let f = p1(&[(0, -1), (2, 1)]); // t^2 - 1
        let g = p1(&[(0, 1), (1, 1)]); // t + 1
        assert_eq!(f.exact_div(&g).unwrap(), p1(&[(0, -1), (1, 1)]));
        assert!(f.exact_div(&p1(&[(0, 1), (1, 3)])).is_err());

        // Laurent shifts divide out
        let f = p1(&[(-1, 1), (0, -1)]); // t^-1 - 1
        let g = p1(&[(3, 1)]); // t^3
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, p1(&[(-4, 1), (-3, -1)]));

        let f = p2(&[((1, 1), 1), ((1, 0), -1), ((0, 1), -1), ((0, 0), 1)]);
        let g = p2(&[((1, 0), 1), ((0, 0), -1)]);
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, p2(&[((0, 1), 1), ((0, 0), -1)]));
    }

    #[test]
    fn gcd_univariate() {
        let f = p1(&[(0, 1), (1, -2), (2, 1)]); // (t-1)^2
        let g = p1(&[(0, -1), (2, 1)]); // (t-1)(t+1)
        assert!(f.gcd(&g).eq_up_to_unit(&p1(&[(0, -1), (1, 1)])));

        // integer contents participate
        let f = p1(&[(0, 6)]);
        let g = p1(&[(0, 4), (1, 4)]);
        assert_eq!(f.gcd(&g), p1(&[(0, 2)]));

        // coprime polynomials have unit gcd
        let f = p1(&[(0, 1), (1, 1)]);
        let g = p1(&[(0, -1), (1, 1)]);
        assert!(f.gcd(&g).is_unit());

        assert_eq!(LaurentPoly::zero(1).gcd(&f), f.canonical());
        assert!(LaurentPoly::zero(1).gcd(&LaurentPoly::zero(1)).is_zero());
    }

    #[test]
    fn gcd_multivariate() {
        let s_minus_1 = p2(&[((1, 0), 1), ((0, 0), -1)]);
        let u_minus_1 = p2(&[((0, 1), 1), ((0, 0), -1)]);
        let f = s_minus_1.mul(&u_minus_1);
        let g = s_minus_1.mul(&s_minus_1);
        assert!(f.gcd(&g).eq_up_to_unit(&s_minus_1));

        let h = u_minus_1.mul(&p2(&[((0, 0), 3)]));
        let k = u_minus_1.mul(&p2(&[((1, 0), 6)]));
        assert!(h.gcd(&k).eq_up_to_unit(&u_minus_1.mul_scalar(&BigInt::from(3))));
    }

    #[test]
    fn gcd_random_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let rand_poly = |rng: &mut ChaCha8Rng, nvars: usize| -> LaurentPoly {
            let mut p = LaurentPoly::zero(nvars);
            for _ in 0..rng.gen_range(1..4) {
                let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-2i64..=2)).collect();
                p.add_term(e, BigInt::from(rng.gen_range(-3i64..=3)));
            }
            p
        };
        for trial in 0..120 {
            let nvars = 1 + (trial % 2);
            let a = rand_poly(&mut rng, nvars);
            let b = rand_poly(&mut rng, nvars);
            let c = rand_poly(&mut rng, nvars);
            if c.is_zero() {
                continue;
            }
            let g = a.mul(&c).gcd(&b.mul(&c));
            // c divides the gcd, and the gcd divides both products
            assert!(g.exact_div(&c).is_ok(), "c should divide gcd");
            if !a.is_zero() {
                assert!(a.mul(&c).exact_div(&g).is_ok(), "gcd should divide a*c");
            }
            if !b.is_zero() {
                assert!(b.mul(&c).exact_div(&g).is_ok(), "gcd should divide b*c");
            }
        }
    }

    #[test]
    fn gcd_matches_univariate_euclid_after_shift() {
        // Laurent inputs normalize before the Euclidean pass
        let f = p1(&[(-3, 2), (-1, -2)]); // 2 t^-3 (1 - t^2)
        let g = p1(&[(2, 4), (3, 4)]); // 4 t^2 (1 + t)
        let got = f.gcd(&g);
        assert!(got.eq_up_to_unit(&p1(&[(0, 2), (1, 2)])));
    }

    #[test]
    fn display_strings() {
        let f = p1(&[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(f.display(&["t"]), "t^2 - t + 1");
        let g = p2(&[((0, 0), 1), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)]);
        assert_eq!(g.display(&["s", "u"]), "s*u - s - u + 1");
        assert_eq!(LaurentPoly::zero(1).display(&["t"]), "0");
        assert_eq!(p1(&[(0, -2)]).display(&["t"]), "-2");
        assert_eq!(p1(&[(-1, 1)]).display(&["t"]), "t^-1");
    }

    #[test]
    fn support_points() {
        let g = p2(&[((0, 0), 1), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)]);
        assert_eq!(
            g.support(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }
}
