//! Fox calculus and Alexander polynomials.
//!
//! The free derivative obeys `d(uv)/dx = du/dx + u dv/dx` with
//! `dx/dx = 1` and `dx^-1/dx = -x^-1`. Pushing the derivatives of the
//! relators through an abelianization map gives the Alexander matrix,
//! and the gcd of its `(m-1) x (m-1)` minors is the Alexander
//! polynomial, defined up to units.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::presentation::{CohomClass, Presentation};
use crate::snf;
use crate::word::Word;
use crate::{Error, Result};

/// A finite integer combination of free-group elements.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupRingElem {
    pub terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut e = Self::zero();
        e.add_word(Word::empty(), BigInt::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_word(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let w = w.reduce();
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Right multiplication by a single group element.
    pub fn mul_word_right(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (u, c) in &self.terms {
            out.add_word(u.concat(w), c.clone());
        }
        out
    }
}

/// `dr/dx` for a word `r` and generator `gen`.
pub fn fox_derivative(r: &Word, gen: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = Word::empty();
    for &l in &r.letters {
        if l.gen == gen {
            if l.inv {
                // d(x^-1)/dx = -x^-1, translated by the prefix
                out.add_word(prefix.concat(&Word::from_letters(vec![l])), -BigInt::one());
            } else {
                out.add_word(prefix.clone(), BigInt::one());
            }
        }
        prefix.push(l);
    }
    out
}

/// The identity `sum_i dr/dx_i (x_i - 1) = r - 1`, checked in the free
/// group ring itself.
pub fn fox_identity_holds(p: &Presentation, r: &Word) -> bool {
    let mut lhs = GroupRingElem::zero();
    for i in 0..p.gens.len() {
        let d = fox_derivative(r, i);
        let xi = Word::gen(i);
        lhs = lhs.add(&d.mul_word_right(&xi).sub(&d));
    }
    let mut rhs = GroupRingElem::zero();
    rhs.add_word(r.clone(), BigInt::one());
    rhs.add_word(Word::empty(), -BigInt::one());
    lhs == rhs
}

/// A homomorphism from the free group onto `Z^rank`, recorded by the
/// image of each generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbMap {
    pub rank: usize,
    pub images: Vec<Vec<i64>>,
}

impl AbMap {
    pub fn new(rank: usize, images: Vec<Vec<i64>>) -> Self {
        for im in &images {
            assert_eq!(im.len(), rank);
        }
        AbMap { rank, images }
    }

    /// The map onto the free part of the abelianization, with basis drawn
    /// from the Smith form of the relator matrix. Errors when the free
    /// rank is zero.
    pub fn canonical(p: &Presentation) -> Result<Self> {
        let m = p.gens.len();
        if p.rels.is_empty() {
            let images = (0..m)
                .map(|i| {
                    let mut v = vec![0i64; m];
                    v[i] = 1;
                    v
                })
                .collect();
            if m == 0 {
                return Err(Error::BettiZero);
            }
            return Ok(AbMap { rank: m, images });
        }
        let a: Vec<Vec<BigInt>> = (0..m)
            .map(|i| p.rels.iter().map(|r| BigInt::from(r.exponent_sum(i))).collect())
            .collect();
        let s = snf::smith(&a);
        let rank = m - s.rank;
        if rank == 0 {
            return Err(Error::BettiZero);
        }
        let images = (0..m)
            .map(|i| {
                (s.rank..m)
                    .map(|j| i64::try_from(&s.p[j][i]).expect("basis coefficient fits in i64"))
                    .collect()
            })
            .collect();
        Ok(AbMap { rank, images })
    }

    /// Rank-one map induced by a nonzero integral class.
    pub fn from_class(p: &Presentation, phi: &CohomClass) -> Result<Self> {
        let vals = phi
            .integral_values()
            .ok_or_else(|| Error::Internal("class must be integral here".into()))?;
        if vals.iter().all(|v| v.is_zero()) {
            return Err(Error::ZeroClass);
        }
        assert_eq!(vals.len(), p.gens.len());
        let images = vals
            .iter()
            .map(|v| vec![i64::try_from(v).expect("class value fits in i64")])
            .collect();
        Ok(AbMap { rank: 1, images })
    }

    pub fn word_exponent(&self, w: &Word) -> Vec<i64> {
        let mut e = vec![0i64; self.rank];
        for l in &w.letters {
            let im = &self.images[l.gen];
            for (x, y) in e.iter_mut().zip(im) {
                *x += l.exponent() * y;
            }
        }
        e
    }

    pub fn word_image(&self, w: &Word) -> LaurentPoly {
        LaurentPoly::monomial(self.word_exponent(w), 1)
    }

    pub fn ring_image(&self, elem: &GroupRingElem) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (w, c) in &elem.terms {
            out.add_term(self.word_exponent(w), c.clone());
        }
        out
    }
}

/// The Fox matrix of a presentation under an abelianization map: one row
/// per relator, one column per generator.
#[derive(Clone, Debug)]
pub struct AlexanderMatrix {
    pub entries: Vec<Vec<LaurentPoly>>,
    pub nrows: usize,
    pub ncols: usize,
    pub nvars: usize,
}

pub fn alexander_matrix(p: &Presentation, psi: &AbMap) -> Result<AlexanderMatrix> {
    assert_eq!(psi.images.len(), p.gens.len());
    let nrows = p.rels.len();
    let ncols = p.gens.len();
    let mut entries = Vec::with_capacity(nrows);
    for r in &p.rels {
        let row: Vec<LaurentPoly> =
            (0..ncols).map(|i| psi.ring_image(&fox_derivative(r, i))).collect();
        // fundamental identity: sum_i row[i] (psi(x_i) - 1) = psi(r) - 1 = 0
        let mut check = LaurentPoly::zero(psi.rank);
        for (i, entry) in row.iter().enumerate() {
            let xi = psi.word_image(&Word::gen(i));
            check = check.add(&entry.mul(&xi.sub(&LaurentPoly::one(psi.rank))));
        }
        if !check.is_zero() {
            return Err(Error::Internal(format!(
                "Fox identity fails on relator `{}`",
                r.display(&p.gens)
            )));
        }
        entries.push(row);
    }
    Ok(AlexanderMatrix { entries, nrows, ncols, nvars: psi.rank })
}

/// Determinant by Laplace expansion with memoization over column subsets.
pub fn determinant(m: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let s = m.len();
    if s == 0 {
        return LaurentPoly::one(nvars);
    }
    assert!(s <= 20, "determinant size out of range");
    let full: u32 = (1u32 << s) - 1;
    let mut memo: Vec<Option<LaurentPoly>> = vec![None; 1usize << s];
    memo[0] = Some(LaurentPoly::one(nvars));
    for mask in 1..=full {
        let k = mask.count_ones() as usize; // rows 0..k against columns in mask
        let mut acc = LaurentPoly::zero(nvars);
        let mut idx = 0;
        for j in 0..s {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = &m[k - 1][j];
            if !entry.is_zero() {
                let sub = memo[(mask & !(1 << j)) as usize].as_ref().unwrap();
                let term = entry.mul(sub);
                if (k - 1 + idx) % 2 == 0 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            idx += 1;
        }
        memo[mask as usize] = Some(acc);
    }
    memo[full as usize].take().unwrap()
}

/// Gcd of all `(m-1) x (m-1)` minors of the Fox matrix, canonical up to
/// units. With one generator the empty determinant makes this 1; with
/// fewer than `m-1` relators it is 0.
pub fn alexander_polynomial(p: &Presentation, psi: &AbMap) -> Result<LaurentPoly> {
    let mat = alexander_matrix(p, psi)?;
    let m = mat.ncols;
    let n = mat.nrows;
    if m == 0 {
        return Ok(LaurentPoly::one(psi.rank));
    }
    let s = m - 1;
    if s == 0 {
        return Ok(LaurentPoly::one(psi.rank));
    }
    if n < s {
        return Ok(LaurentPoly::zero(psi.rank));
    }
    let mut g = LaurentPoly::zero(psi.rank);
    for rows in (0..n).combinations(s) {
        for cols in (0..m).combinations(s) {
            let sub: Vec<Vec<LaurentPoly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| mat.entries[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub, psi.rank);
            g = g.gcd(&d);
            if g.is_unit() {
                return Ok(g.canonical());
            }
        }
    }
    Ok(g.canonical())
}

/// The multivariable Alexander polynomial over the free part of the
/// abelianization. Errors when the first Betti number is zero.
pub fn alexander_polynomial_canonical(p: &Presentation) -> Result<(LaurentPoly, AbMap)> {
    let psi = AbMap::canonical(p)?;
    let delta = alexander_polynomial(p, &psi)?;
    Ok((delta, psi))
}

/// The one-variable Alexander polynomial of a nonzero integral class.
pub fn alexander_polynomial_class(p: &Presentation, phi: &CohomClass) -> Result<LaurentPoly> {
    let psi = AbMap::from_class(p, phi)?;
    alexander_polynomial(p, &psi)
}
