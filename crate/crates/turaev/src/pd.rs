//! Planar diagram codes and Wirtinger presentations.
//!
//! A crossing `X(a,b,c,d)` lists the four edge labels counterclockwise
//! starting from the incoming under-strand: the under-strand runs
//! `a -> c`, the over-strand occupies `b` and `d`. Edges are numbered
//! consecutively along each link component, so orientation is recovered
//! from the labels: the successor of an edge is the next label in its
//! component, cyclically.

use num_rational::BigRational;
use num_traits::One;

use crate::alexander::AbMap;
use crate::presentation::{CohomClass, Presentation};
use crate::word::{Letter, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    /// `[a, b, c, d]` per crossing, labels 1-based.
    pub crossings: Vec<[usize; 4]>,
}

pub fn parse_pd(text: &str) -> Result<PdCode> {
    let mut crossings = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Parse("empty diagram".into()));
    }
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(Error::Parse(format!("expected `X(...)`, found `{rest}`")));
        };
        let head = rest[..open].trim();
        if head != "X" {
            return Err(Error::Parse(format!("expected `X`, found `{head}`")));
        }
        let Some(close) = rest.find(')') else {
            return Err(Error::Parse("unterminated crossing tuple".into()));
        };
        let body = &rest[open + 1..close];
        let nums: Vec<usize> = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad edge label `{}`", t.trim())))
            })
            .collect::<Result<_>>()?;
        if nums.len() != 4 {
            return Err(Error::Parse(format!(
                "crossing needs 4 labels, got {}",
                nums.len()
            )));
        }
        crossings.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = rest[close + 1..].trim_start_matches([' ', ',', '\n', '\t']);
    }
    let pd = PdCode { crossings };
    pd.validate()?;
    Ok(pd)
}

impl PdCode {
    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.edge_count();
        let mut count = vec![0usize; n + 1];
        for x in &self.crossings {
            for &e in x {
                if e == 0 || e > n {
                    return Err(Error::Parse(format!(
                        "edge label {e} out of range 1..={n}"
                    )));
                }
                count[e] += 1;
            }
        }
        for (e, &c) in count.iter().enumerate().skip(1) {
            if c != 2 {
                return Err(Error::Parse(format!(
                    "edge {e} appears {c} times, expected 2"
                )));
            }
        }
        Ok(())
    }
}

/// An analyzed diagram: oriented components, arcs, crossing signs, and
/// the Wirtinger presentation with one generator per arc.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub pd: PdCode,
    /// Edge labels of each component, in order of traversal.
    pub components: Vec<Vec<usize>>,
    /// Edge labels of each arc; arcs are sorted by smallest label.
    pub arcs: Vec<Vec<usize>>,
    /// Component index of each arc.
    pub arc_component: Vec<usize>,
    /// +1 or -1 per crossing.
    pub signs: Vec<i8>,
    pub presentation: Presentation,
}

struct Uf(Vec<usize>);

impl Uf {
    fn new(n: usize) -> Self {
        Uf((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

pub fn analyze(pd: &PdCode) -> Result<Diagram> {
    let n = pd.edge_count();

    // group labels into components: under-passages join a to c, the two
    // over edges belong to one strand, and consecutive labels with a
    // forward under-passage are consecutive on their component
    let mut comp = Uf::new(n + 1);
    for x in &pd.crossings {
        comp.union(x[0], x[2]);
        comp.union(x[1], x[3]);
    }
    // wrap constraints a -> c with c <= a close a component range; the
    // labels in between are all part of it
    for x in &pd.crossings {
        let (a, c) = (x[0], x[2]);
        if c <= a {
            for e in c..a {
                comp.union(e, e + 1);
            }
        }
    }
    let mut ranges: Vec<(usize, usize)> = Vec::new(); // (start, end) inclusive
    {
        let mut by_root: std::collections::BTreeMap<usize, (usize, usize)> =
            std::collections::BTreeMap::new();
        for e in 1..=n {
            let r = comp.find(e);
            let entry = by_root.entry(r).or_insert((e, e));
            entry.0 = entry.0.min(e);
            entry.1 = entry.1.max(e);
        }
        for (_, (lo, hi)) in by_root {
            ranges.push((lo, hi));
        }
        ranges.sort();
        // contiguity: ranges must tile 1..=n without overlap
        let mut expect = 1;
        for &(lo, hi) in &ranges {
            if lo != expect {
                return Err(Error::Parse(format!(
                    "component labels are not consecutive near edge {expect}"
                )));
            }
            expect = hi + 1;
        }
        if expect != n + 1 {
            return Err(Error::Parse("component labels do not cover the diagram".into()));
        }
    }
    let component_of = |e: usize| ranges.iter().position(|&(lo, hi)| lo <= e && e <= hi).unwrap();
    let next = |e: usize| {
        let (lo, hi) = ranges[component_of(e)];
        if e == hi { lo } else { e + 1 }
    };

    // every under-passage must respect the orientation
    for x in &pd.crossings {
        if next(x[0]) != x[2] {
            return Err(Error::Parse(format!(
                "under-strand {} -> {} contradicts edge ordering",
                x[0], x[2]
            )));
        }
    }

    // arcs: over-pairs continue the same arc across a crossing; an arc
    // is broken exactly where its strand goes under
    let mut arc_uf = Uf::new(n + 1);
    for x in &pd.crossings {
        arc_uf.union(x[1], x[3]);
    }
    let mut arc_sets: std::collections::BTreeMap<usize, Vec<usize>> =
        std::collections::BTreeMap::new();
    for e in 1..=n {
        let r = arc_uf.find(e);
        arc_sets.entry(r).or_default().push(e);
    }
    let mut arcs: Vec<Vec<usize>> = arc_sets.into_values().collect();
    arcs.sort_by_key(|labels| labels[0]);
    let arc_of = |e: usize, arcs: &[Vec<usize>]| -> usize {
        arcs.iter().position(|labels| labels.contains(&e)).unwrap()
    };

    // crossing signs from the direction of the over-strand
    let mut signs = Vec::with_capacity(pd.crossings.len());
    for x in &pd.crossings {
        let (b, d) = (x[1], x[3]);
        let fwd = next(b) == d;
        let bwd = next(d) == b;
        // the tuple is counterclockwise from the incoming under-edge, so
        // an over-strand running b -> d crosses right-to-left: negative
        let positive = match (fwd, bwd) {
            (true, false) => false,
            (false, true) => true,
            // a two-edge component is consecutive both ways; read the
            // lower label as the incoming side
            (true, true) => d < b,
            (false, false) => {
                return Err(Error::Parse(format!(
                    "over-strand {b}, {d} is not consecutive in its component"
                )))
            }
        };
        signs.push(if positive { 1 } else { -1 });
    }

    // Wirtinger: at each crossing the outgoing meridian is the incoming
    // one conjugated by the over-strand, with the sign in the exponent
    let gens: Vec<String> = arcs.iter().map(|labels| format!("x{}", labels[0])).collect();
    let mut rels = Vec::with_capacity(pd.crossings.len());
    for (x, &sign) in pd.crossings.iter().zip(&signs) {
        let over = arc_of(x[1], &arcs);
        let inc = arc_of(x[0], &arcs);
        let out = arc_of(x[2], &arcs);
        let neg = sign < 0;
        rels.push(Word::from_letters(vec![
            Letter::new(over, neg),
            Letter::new(inc, false),
            Letter::new(over, !neg),
            Letter::new(out, true),
        ]));
    }
    let presentation = Presentation::new(gens, rels);

    let arc_component: Vec<usize> = arcs.iter().map(|labels| component_of(labels[0])).collect();
    let components: Vec<Vec<usize>> =
        ranges.iter().map(|&(lo, hi)| (lo..=hi).collect()).collect();

    Ok(Diagram { pd: pd.clone(), components, arcs, arc_component, signs, presentation })
}

impl Diagram {
    /// The class sending every meridian of one component to 1.
    pub fn meridian_class(&self, component: usize) -> CohomClass {
        let values: Vec<BigRational> = self
            .arc_component
            .iter()
            .map(|&c| {
                if c == component {
                    BigRational::one()
                } else {
                    BigRational::from_integer(0.into())
                }
            })
            .collect();
        CohomClass::from_values(&self.presentation, values)
            .expect("meridian classes vanish on Wirtinger relators")
    }

    /// The total meridian class, summing over all components.
    pub fn total_meridian_class(&self) -> CohomClass {
        let values = vec![BigRational::one(); self.presentation.gens.len()];
        CohomClass::from_values(&self.presentation, values)
            .expect("the total meridian class vanishes on Wirtinger relators")
    }

    /// Meridian coordinates on homology: each arc generator maps to the
    /// basis vector of its component, one variable per component.
    pub fn meridian_ab_map(&self) -> AbMap {
        let rank = self.components.len();
        let images = self
            .arc_component
            .iter()
            .map(|&c| {
                let mut v = vec![0i64; rank];
                v[c] = 1;
                v
            })
            .collect();
        AbMap::new(rank, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander;
    use crate::laurent::LaurentPoly;
    use num_bigint::BigInt;

    fn trefoil() -> Diagram {
        analyze(&parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        let pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(pd.crossings.len(), 3);
        assert_eq!(pd.edge_count(), 6);

        // whitespace and commas between crossings are all fine
        let pd2 = parse_pd("X(1,4,2,5), X(3,6,4,1),\n X(5,2,6,3)").unwrap();
        assert_eq!(pd, pd2);

        assert!(parse_pd("").is_err());
        assert!(parse_pd("X(1,2,3)").is_err());
        assert!(parse_pd("Y(1,2,3,4)").is_err());
        assert!(parse_pd("X(1,4,2,5)").is_err()); // labels appear once
        assert!(parse_pd("X(1,1,1,2)").is_err()); // label 1 three times

        // the 1-crossing kink passes the label count check
        parse_pd("X(1,1,2,2)").unwrap();
        // so does a split pair of kinks
        analyze(&parse_pd("X(1,1,2,2) X(3,3,4,4)").unwrap()).unwrap();
    }

    #[test]
    fn trefoil_structure() {
        let d = trefoil();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.arcs, vec![vec![1, 6], vec![2, 3], vec![4, 5]]);
        assert_eq!(d.signs, vec![-1, -1, -1], "left-handed table code");
        assert_eq!(d.presentation.gens, vec!["x1", "x2", "x4"]);
        assert_eq!(d.presentation.rels.len(), 3);
        for r in &d.presentation.rels {
            assert_eq!(r.len(), 4);
        }
        // every generator occurs four times: t_P = 3 at the meridian
        let phi = d.total_meridian_class();
        assert_eq!(
            d.presentation.t_p(&phi).unwrap(),
            BigRational::from(BigInt::from(3))
        );
    }

    #[test]
    fn trefoil_alexander_polynomial() {
        let d = trefoil();
        let delta =
            alexander::alexander_polynomial_class(&d.presentation, &d.total_meridian_class())
                .unwrap();
        let mut expect = LaurentPoly::zero(1);
        expect.add_term(vec![2], BigInt::from(1));
        expect.add_term(vec![1], BigInt::from(-1));
        expect.add_term(vec![0], BigInt::from(1));
        assert_eq!(delta, expect);
    }

    #[test]
    fn figure_eight_alexander_polynomial() {
        let d = analyze(&parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap())
            .unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.presentation.gens.len(), 4);
        let phi = d.total_meridian_class();
        assert_eq!(d.presentation.t_p(&phi).unwrap(), BigRational::from(BigInt::from(4)));
        // mixed signs distinguish this from the torus knots
        assert_eq!(d.signs.iter().filter(|&&s| s > 0).count(), 2);
        let delta = alexander::alexander_polynomial_class(&d.presentation, &phi).unwrap();
        let mut expect = LaurentPoly::zero(1);
        expect.add_term(vec![2], BigInt::from(1));
        expect.add_term(vec![1], BigInt::from(-3));
        expect.add_term(vec![0], BigInt::from(1));
        assert_eq!(delta, expect);
    }

    #[test]
    fn whitehead_link_alexander_polynomial() {
        let d = analyze(
            &parse_pd("X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)").unwrap(),
        )
        .unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0], vec![1, 2, 3, 4]);
        assert_eq!(d.presentation.gens.len(), 5);
        // linking number zero: the four crossings between the components
        // cancel in pairs, the remaining one is the clasp
        let inter: i32 = d
            .pd
            .crossings
            .iter()
            .zip(&d.signs)
            .filter(|(x, _)| {
                let under = d.arc_component[d.arcs.iter().position(|a| a.contains(&x[0])).unwrap()];
                let over = d.arc_component[d.arcs.iter().position(|a| a.contains(&x[1])).unwrap()];
                under != over
            })
            .map(|(_, &s)| s as i32)
            .sum();
        assert_eq!(inter, 0);

        // two meridian variables s, u; the polynomial is (s-1)(u-1) up to units
        let psi = d.meridian_ab_map();
        assert_eq!(psi.rank, 2);
        let delta = alexander::alexander_polynomial(&d.presentation, &psi).unwrap();
        let s_minus_1 = LaurentPoly::monomial(vec![1, 0], 1).sub(&LaurentPoly::one(2));
        let u_minus_1 = LaurentPoly::monomial(vec![0, 1], 1).sub(&LaurentPoly::one(2));
        assert!(delta.eq_up_to_unit(&s_minus_1.mul(&u_minus_1)));
    }

    #[test]
    fn meridian_classes_split_by_component() {
        let d = trefoil();
        let phi = d.meridian_class(0);
        assert!(phi.values.iter().all(|v| v.is_one()));
        let psi = d.meridian_ab_map();
        assert_eq!(psi.rank, 1);
        assert!(psi.images.iter().all(|v| v == &vec![1]));
    }

    #[test]
    fn under_passages_must_chain() {
        // swap the under outputs of two crossings: labels stop chaining
        assert!(analyze(&parse_pd("X(1,4,6,5) X(3,6,4,1) X(5,2,2,3)").unwrap()).is_err());
    }
}
