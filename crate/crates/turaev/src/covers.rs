//! Finite covers of presentation complexes, described by a permutation
//! of the sheets for each generator. Relators must act trivially (the
//! monodromy factors through the group) and the action must be
//! transitive (the cover is connected).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::complex::{Edge, TwoComplex};
use crate::norm::{self, Method};
use crate::presentation::{CohomClass, Presentation};
use crate::word::Word;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    pub degree: usize,
    /// `perms[g][s]` is the sheet reached from sheet `s` along
    /// generator `g`.
    pub perms: Vec<Vec<usize>>,
}

impl CoverSpec {
    pub fn new(degree: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("a cover needs at least one sheet".into()));
        }
        for (g, p) in perms.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree {
                return Err(Error::Parse(format!(
                    "permutation {g} moves {} sheets, expected {degree}",
                    p.len()
                )));
            }
            for &t in p {
                if t >= degree || seen[t] {
                    return Err(Error::Parse(format!("permutation {g} is not a bijection")));
                }
                seen[t] = true;
            }
        }
        Ok(CoverSpec { degree, perms })
    }

    /// The cyclic cover of degree `n` induced by reducing an integral
    /// class mod `n`: each generator rotates the sheets by its value.
    pub fn cyclic(p: &Presentation, phi: &CohomClass, n: usize) -> Result<Self> {
        let ints = phi
            .integral_values()
            .ok_or_else(|| Error::Parse("cyclic covers need an integral class".into()))?;
        let nn = BigInt::from(n);
        let perms = ints
            .iter()
            .map(|v| {
                let shift = v.mod_floor(&nn).to_usize().unwrap();
                (0..n).map(|s| (s + shift) % n).collect()
            })
            .collect();
        let spec = CoverSpec::new(n, perms)?;
        spec.validate(p)?;
        Ok(spec)
    }

    fn inverse_perms(&self) -> Vec<Vec<usize>> {
        self.perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; self.degree];
                for (s, &t) in p.iter().enumerate() {
                    inv[t] = s;
                }
                inv
            })
            .collect()
    }

    /// Track a sheet along a word, left to right.
    pub fn act(&self, w: &Word, sheet: usize) -> usize {
        let inv = self.inverse_perms();
        let mut s = sheet;
        for l in &w.letters {
            s = if l.inv { inv[l.gen][s] } else { self.perms[l.gen][s] };
        }
        s
    }

    /// Check that this is a connected cover of the group presented by
    /// `p`: relators act trivially on every sheet and the generators
    /// reach every sheet from sheet 0.
    pub fn validate(&self, p: &Presentation) -> Result<()> {
        if self.perms.len() != p.gens.len() {
            return Err(Error::Parse(format!(
                "{} permutations for {} generators",
                self.perms.len(),
                p.gens.len()
            )));
        }
        for r in &p.rels {
            for s in 0..self.degree {
                if self.act(r, s) != s {
                    return Err(Error::NotACover(r.display(&p.gens), s));
                }
            }
        }
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut stack = vec![0usize];
        let inv = self.inverse_perms();
        while let Some(s) = stack.pop() {
            for g in 0..self.perms.len() {
                for t in [self.perms[g][s], inv[g][s]] {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        if seen.iter().any(|&v| !v) {
            return Err(Error::CoverNotTransitive);
        }
        Ok(())
    }
}

/// The induced cover of the presentation complex: one vertex per sheet,
/// the lift of each loop generator starting on each sheet, and the lift
/// of each relator disc starting on each sheet. Cover edges keep the
/// base generator, so classes pull back through the edge labels.
pub fn cover_complex(x: &TwoComplex, spec: &CoverSpec) -> Result<TwoComplex> {
    if x.vertices != 1 {
        return Err(Error::NotAPresentationComplex(
            "covers are built over one-vertex complexes".into(),
        ));
    }
    for e in &x.edges {
        if e.gen.is_none() {
            return Err(Error::NotAPresentationComplex(format!(
                "edge `{}` lies over no generator",
                e.label
            )));
        }
    }
    if spec.perms.len() != x.edges.len() {
        return Err(Error::Parse(format!(
            "{} permutations for {} edges",
            spec.perms.len(),
            x.edges.len()
        )));
    }
    let d = spec.degree;
    let inv = spec.inverse_perms();
    let edges: Vec<Edge> = x
        .edges
        .iter()
        .enumerate()
        .flat_map(|(g, e)| {
            (0..d).map(move |s| Edge {
                from: s,
                to: spec.perms[g][s],
                label: format!("{}.{s}", e.label),
                gen: e.gen,
            })
        })
        .collect();
    let mut faces = Vec::with_capacity(x.faces.len() * d);
    for walk in &x.faces {
        for start in 0..d {
            let mut s = start;
            let mut lifted = Vec::with_capacity(walk.len());
            for &(g, dir) in walk {
                if dir == 1 {
                    lifted.push((g * d + s, 1));
                    s = spec.perms[g][s];
                } else {
                    s = inv[g][s];
                    lifted.push((g * d + s, -1));
                }
            }
            if s != start {
                return Err(Error::NotACover(format!("face walk {walk:?}"), start));
            }
            faces.push(lifted);
        }
    }
    TwoComplex::new(d, edges, faces)
}

/// Both sides of the covering inequality for the norm: the lifted class
/// on the cover against the degree times the base value.
#[derive(Clone, Debug)]
pub struct CoverComparison {
    pub cover_value: BigRational,
    pub base_value: BigRational,
    pub degree: usize,
    pub holds: bool,
}

pub fn verify_cover_inequality(
    p: &Presentation,
    phi: &CohomClass,
    spec: &CoverSpec,
    method: Method,
) -> Result<CoverComparison> {
    spec.validate(p)?;
    let base = TwoComplex::from_presentation(p);
    let cover = cover_complex(&base, spec)?;
    let base_value = norm::turaev_norm_of_class(&base, phi, method)?.value;
    let cover_value = norm::turaev_norm_of_class(&cover, phi, method)?.value;
    let holds =
        cover_value <= BigRational::from(BigInt::from(spec.degree)) * &base_value;
    Ok(CoverComparison { cover_value, base_value, degree: spec.degree, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse;
    use num_traits::{Signed, Zero};

    fn pres(text: &str) -> Presentation {
        parse(text).unwrap()
    }

    #[test]
    fn cyclic_cover_of_torus_is_a_torus() {
        let p = pres("gens: a x ; rels: [x,a]");
        let phi = CohomClass::from_integers(&p, &[0, 1]).unwrap();
        let spec = CoverSpec::cyclic(&p, &phi, 3).unwrap();
        let x = TwoComplex::from_presentation(&p);
        let cover = cover_complex(&x, &spec).unwrap();
        assert_eq!(cover.vertices, 3);
        assert_eq!(cover.edges.len(), 6);
        assert_eq!(cover.faces.len(), 3);
        assert_eq!(cover.euler_characteristic(), 3 * x.euler_characteristic());
        assert_eq!(cover.h1_structure(), (2, vec![]));
        assert!(cover.is_boundary_empty());
    }

    #[test]
    fn double_cover_of_trefoil_complex() {
        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        let phi = CohomClass::from_integers(&p, &[1, 1]).unwrap();
        let spec = CoverSpec::cyclic(&p, &phi, 2).unwrap();
        let x = TwoComplex::from_presentation(&p);
        let cover = cover_complex(&x, &spec).unwrap();
        assert_eq!(cover.euler_characteristic(), 0);
        // the classical homology of the 2-fold cyclic cover of the
        // trefoil exterior
        assert_eq!(
            cover.h1_structure(),
            (1, vec![BigInt::from(3)]),
            "Z + Z/3 for the double cover"
        );
        // each cover edge is traversed once per base occurrence
        assert!(cover.edge_multiplicities().iter().all(|&n| n == 3));
    }

    #[test]
    fn monodromy_must_kill_relators() {
        let p = pres("gens: a ; rels: a^3");
        // a transposition has order 2, so a^3 acts nontrivially
        let spec = CoverSpec::new(2, vec![vec![1, 0]]).unwrap();
        assert!(matches!(spec.validate(&p), Err(Error::NotACover(_, _))));
        // but it is fine for a^2
        let p = pres("gens: a ; rels: a^2");
        let spec = CoverSpec::new(2, vec![vec![1, 0]]).unwrap();
        spec.validate(&p).unwrap();
    }

    #[test]
    fn disconnected_actions_are_rejected() {
        let p = pres("gens: a ; rels: a a^-1");
        let spec = CoverSpec::new(2, vec![vec![0, 1]]).unwrap();
        assert!(matches!(spec.validate(&p), Err(Error::CoverNotTransitive)));

        // an even class mod 2 rotates by nothing
        let torus = pres("gens: a x ; rels: [x,a]");
        let phi = CohomClass::from_integers(&torus, &[2, 0]).unwrap();
        assert!(matches!(
            CoverSpec::cyclic(&torus, &phi, 2),
            Err(Error::CoverNotTransitive)
        ));
    }

    #[test]
    fn malformed_permutations_are_rejected() {
        assert!(CoverSpec::new(2, vec![vec![0, 0]]).is_err());
        assert!(CoverSpec::new(2, vec![vec![0, 2]]).is_err());
        assert!(CoverSpec::new(2, vec![vec![0]]).is_err());
        assert!(CoverSpec::new(0, vec![]).is_err());
    }

    #[test]
    fn lifted_classes_are_cocycles() {
        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        let phi = CohomClass::from_integers(&p, &[1, 1]).unwrap();
        for n in [2usize, 3, 5] {
            let spec = CoverSpec::cyclic(&p, &phi, n).unwrap();
            let cover = cover_complex(&TwoComplex::from_presentation(&p), &spec).unwrap();
            let k = cover.class_cochain(&phi).unwrap();
            assert!(cover.is_cocycle(&k));
            let normalized = cover.cocycle_from_class(&phi).unwrap();
            assert!(cover.is_cocycle(&normalized));
            // the tree edges carry nothing after normalization
            let tree = cover.spanning_tree();
            for (i, in_tree) in tree.iter().enumerate() {
                if *in_tree {
                    assert!(normalized[i].is_zero());
                }
            }
        }
    }

    #[test]
    fn cover_inequality_on_fixtures() {
        let trefoil = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        let phi = CohomClass::from_integers(&trefoil, &[1, 1]).unwrap();
        for n in [2usize, 3] {
            let spec = CoverSpec::cyclic(&trefoil, &phi, n).unwrap();
            let c = verify_cover_inequality(&trefoil, &phi, &spec, Method::Auto).unwrap();
            assert!(c.holds, "degree {n}: {} vs {} * {}", c.cover_value, n, c.base_value);
        }

        let torus = pres("gens: a x ; rels: [x,a]");
        let phi = CohomClass::from_integers(&torus, &[1, 1]).unwrap();
        let spec = CoverSpec::cyclic(&torus, &phi, 4).unwrap();
        let c = verify_cover_inequality(&torus, &phi, &spec, Method::Auto).unwrap();
        assert!(c.holds);
        assert!(c.cover_value.is_zero() && c.base_value.is_zero());
    }

    #[test]
    fn lp_and_brute_agree_on_cover_norms() {
        let trefoil = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        let phi = CohomClass::from_integers(&trefoil, &[1, 1]).unwrap();
        let spec = CoverSpec::cyclic(&trefoil, &phi, 3).unwrap();
        let cover = cover_complex(&TwoComplex::from_presentation(&trefoil), &spec).unwrap();
        let lp = norm::turaev_norm_of_class(&cover, &phi, Method::Lp).unwrap();
        let brute = norm::turaev_norm_of_class(&cover, &phi, Method::Brute).unwrap();
        assert_eq!(lp.value, brute.value);
        assert!(!lp.value.is_negative());
    }
}
