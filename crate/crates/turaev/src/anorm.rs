//! The Alexander norm: the width of the Newton polytope of the
//! Alexander polynomial in the direction of a class. Together with the
//! single-variable degree bound this produces the lower half of the
//! certification sandwich.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::alexander::{self, AbMap};
use crate::laurent::LaurentPoly;
use crate::lp::{self, LpOutcome};
use crate::presentation::{CohomClass, Presentation};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonSupport {
    pub points: Vec<Vec<i64>>,
}

impl NewtonSupport {
    pub fn of(p: &LaurentPoly) -> Self {
        NewtonSupport { points: p.support() }
    }
}

/// `max φ(h) - φ(g)` over pairs of support points of Δ; zero for the
/// zero polynomial (a vacuous bound) and for a single monomial.
pub fn alexander_norm(delta: &LaurentPoly, phi: &[BigRational]) -> BigRational {
    let support = delta.support();
    let mut best = BigRational::zero();
    for h in &support {
        for g in &support {
            let mut diff = BigRational::zero();
            for ((hi, gi), c) in h.iter().zip(g).zip(phi) {
                diff += c * BigRational::from(BigInt::from(hi - gi));
            }
            if diff > best {
                best = diff;
            }
        }
    }
    best
}

/// Rewrite a class on the generators as a covector on the free part of
/// the abelianization, so it can be paired with exponents of Δ.
pub fn class_on_free_part(psi: &AbMap, phi: &CohomClass) -> Result<Vec<BigRational>> {
    let m = psi.images.len();
    if phi.values.len() != m {
        return Err(Error::Internal("class and map disagree on generator count".into()));
    }
    // phi.values[i] = sum_j coeffs[j] * psi.images[i][j]; solve the
    // overdetermined system and insist on exact consistency.
    let rank = psi.rank;
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..rank)
                .map(|j| BigRational::from(BigInt::from(psi.images[i][j])))
                .collect();
            row.push(phi.values[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..rank {
        let Some(p) = (r..m).find(|&i| !aug[i][col].is_zero()) else { continue };
        aug.swap(r, p);
        let piv = aug[r][col].clone();
        for v in &mut aug[r] {
            *v /= &piv;
        }
        for i in 0..m {
            if i != r && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in 0..=rank {
                    let t = &aug[r][j] * &f;
                    aug[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    for row in &aug[r..] {
        if !row[rank].is_zero() {
            return Err(Error::Internal(
                "class does not factor through the free part of homology".into(),
            ));
        }
    }
    let mut coeffs = vec![BigRational::zero(); rank];
    for (i, &col) in pivots.iter().enumerate() {
        coeffs[col] = aug[i][rank].clone();
    }
    Ok(coeffs)
}

/// The two lower bounds of the sandwich, each present only when its
/// hypotheses hold.
#[derive(Clone, Debug)]
pub struct LowerBounds {
    /// Alexander-norm bound; requires first Betti number at least 2.
    pub a_bound: Option<BigRational>,
    /// The multivariable Δ vanished, so the a-bound is a vacuous zero.
    pub a_degenerate: bool,
    /// `deg Δ_φ - 1`; requires φ primitive integral and Δ_φ nonzero.
    pub deg_bound: Option<BigRational>,
    pub betti: usize,
    /// Divisibility of φ when it is integral and nonzero.
    pub divisibility: Option<BigInt>,
}

impl LowerBounds {
    pub fn best(&self) -> Option<BigRational> {
        match (&self.a_bound, &self.deg_bound) {
            (Some(a), Some(d)) => Some(a.clone().max(d.clone())),
            (Some(a), None) => Some(a.clone()),
            (None, Some(d)) => Some(d.clone()),
            (None, None) => None,
        }
    }
}

pub fn lower_bounds(p: &Presentation, phi: &CohomClass) -> Result<LowerBounds> {
    let (betti, _) = p.abelianization();
    let mut out = LowerBounds {
        a_bound: None,
        a_degenerate: false,
        deg_bound: None,
        betti,
        divisibility: None,
    };

    if betti >= 2 {
        let (delta, psi) = alexander::alexander_polynomial_canonical(p)?;
        if delta.is_zero() {
            out.a_bound = Some(BigRational::zero());
            out.a_degenerate = true;
        } else {
            let phi_h = class_on_free_part(&psi, phi)?;
            out.a_bound = Some(alexander_norm(&delta, &phi_h));
        }
    }

    if let Some(ints) = phi.integral_values() {
        if ints.iter().any(|v| !v.is_zero()) {
            let div = crate::presentation::vector_divisibility(&ints);
            let primitive = div.is_one();
            out.divisibility = Some(div);
            if primitive {
                let delta_phi = alexander::alexander_polynomial_class(p, phi)?;
                if !delta_phi.is_zero() {
                    let deg = delta_phi.span()?;
                    out.deg_bound =
                        Some(BigRational::from(BigInt::from(deg)) - BigRational::one());
                }
            }
        }
    }

    Ok(out)
}

/// Vertices of the Newton polytope, by linear-programming membership
/// tests: a support point is a vertex exactly when it is not a convex
/// combination of the others. Intended for low rank where the list is
/// readable; exact in any rank.
pub fn polytope_vertices(support: &NewtonSupport) -> Vec<Vec<i64>> {
    let pts = &support.points;
    if pts.len() <= 2 {
        return pts.clone();
    }
    let dim = pts[0].len();
    let mut vertices = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<&Vec<i64>> =
            pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q).collect();
        // feasibility: lambda >= 0, sum lambda = 1, sum lambda q = p
        let n = others.len();
        let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(dim + 1);
        for d in 0..dim {
            a.push(others.iter().map(|q| BigRational::from(BigInt::from(q[d]))).collect());
        }
        a.push(vec![BigRational::one(); n]);
        let mut b: Vec<BigRational> =
            p.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
        b.push(BigRational::one());
        let c = vec![BigRational::zero(); n];
        if matches!(lp::solve_min(&c, &a, &b), LpOutcome::Infeasible) {
            vertices.push(p.clone());
        }
    }
    vertices
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse;
    use num_bigint::BigInt;
    use num_traits::Signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn poly(nvars: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn norm_of_small_supports() {
        // 1 + s + u against φ = (1,0)
        let p = poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(alexander_norm(&p, &[rat(1), rat(0)]), rat(1));
        // the square support of (s-1)(u-1) has width 2 along (1,1)
        let q = poly(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], 1)]);
        assert_eq!(alexander_norm(&q, &[rat(1), rat(1)]), rat(2));
        assert_eq!(alexander_norm(&q, &[rat(1), rat(0)]), rat(1));
        assert_eq!(alexander_norm(&q, &[rat(1), rat(-1)]), rat(2));
        // degenerate cases
        assert_eq!(alexander_norm(&LaurentPoly::zero(2), &[rat(5), rat(5)]), rat(0));
        assert_eq!(alexander_norm(&LaurentPoly::one(2), &[rat(5), rat(5)]), rat(0));
    }

    #[test]
    fn norm_is_translation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..60 {
            let nvars = rng.gen_range(1..4);
            let nterms = rng.gen_range(1..6);
            let mut p = LaurentPoly::zero(nvars);
            for _ in 0..nterms {
                let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-4..5)).collect();
                p.add_term(e, BigInt::from(rng.gen_range(1..5)));
            }
            let shift: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-3..4)).collect();
            let unit = LaurentPoly::monomial(shift, 1);
            let phi: Vec<BigRational> = (0..nvars).map(|_| rat(rng.gen_range(-3..4))).collect();
            assert_eq!(alexander_norm(&p, &phi), alexander_norm(&p.mul(&unit), &phi));
        }
    }

    #[test]
    fn norm_is_a_seminorm() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..500 {
            let nvars = rng.gen_range(1..4);
            let nterms = rng.gen_range(0..6);
            let mut p = LaurentPoly::zero(nvars);
            for _ in 0..nterms {
                let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-4..5)).collect();
                p.add_term(e, BigInt::from(rng.gen_range(1..5)));
            }
            let phi: Vec<BigRational> = (0..nvars)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(-6..7)), BigInt::from(rng.gen_range(1..4))))
                .collect();
            let psi: Vec<BigRational> = (0..nvars)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(-6..7)), BigInt::from(rng.gen_range(1..4))))
                .collect();
            let c = BigRational::new(BigInt::from(rng.gen_range(-5..6)), BigInt::from(rng.gen_range(1..4)));

            let scaled: Vec<BigRational> = phi.iter().map(|v| v * &c).collect();
            assert_eq!(alexander_norm(&p, &scaled), c.abs() * alexander_norm(&p, &phi));

            let sum: Vec<BigRational> = phi.iter().zip(&psi).map(|(a, b)| a + b).collect();
            assert!(
                alexander_norm(&p, &sum)
                    <= alexander_norm(&p, &phi) + alexander_norm(&p, &psi)
            );
        }
    }

    #[test]
    fn free_part_coordinates() {
        // torus: psi is the identity on two generators
        let p = parse("gens: a x ; rels: [x,a]").unwrap();
        let psi = AbMap::canonical(&p).unwrap();
        let phi = CohomClass::from_integers(&p, &[2, 3]).unwrap();
        let coords = class_on_free_part(&psi, &phi).unwrap();
        // reconstruct the class from the coordinates
        for i in 0..2 {
            let mut v = BigRational::zero();
            for (j, cj) in coords.iter().enumerate() {
                v += cj * BigRational::from(BigInt::from(psi.images[i][j]));
            }
            assert_eq!(v, phi.values[i]);
        }
    }

    #[test]
    fn trefoil_bounds_gate_on_betti() {
        let p = parse("gens: u v ; rels: u v u v^-1 u^-1 v^-1").unwrap();
        let phi = CohomClass::from_integers(&p, &[1, 1]).unwrap();
        let lb = lower_bounds(&p, &phi).unwrap();
        assert_eq!(lb.betti, 1);
        assert!(lb.a_bound.is_none(), "a-bound needs betti >= 2");
        assert_eq!(lb.deg_bound, Some(rat(1)));
        assert_eq!(lb.divisibility, Some(BigInt::from(1)));
        assert_eq!(lb.best(), Some(rat(1)));
    }

    #[test]
    fn imprimitive_class_gets_no_degree_bound() {
        let p = parse("gens: u v ; rels: u v u v^-1 u^-1 v^-1").unwrap();
        let phi = CohomClass::from_integers(&p, &[2, 2]).unwrap();
        let lb = lower_bounds(&p, &phi).unwrap();
        assert!(lb.deg_bound.is_none());
        assert_eq!(lb.divisibility, Some(BigInt::from(2)));
        assert_eq!(lb.best(), None);
    }

    #[test]
    fn wedge_of_tori_bounds_are_degenerate() {
        let p = parse("gens: a1 x1 a2 x2 ; rels: [x1,a1] , [x2,a2]").unwrap();
        let phi = CohomClass::from_integers(&p, &[0, 1, 0, 1]).unwrap();
        let lb = lower_bounds(&p, &phi).unwrap();
        assert_eq!(lb.betti, 4);
        // multivariable Δ vanishes, so the a-bound is a vacuous zero
        assert_eq!(lb.a_bound, Some(rat(0)));
        assert!(lb.a_degenerate);
        // Δ_φ = 0 as well: no degree bound despite primitivity
        assert!(lb.deg_bound.is_none());
        assert_eq!(lb.best(), Some(rat(0)));
    }

    #[test]
    fn torus_has_unit_delta_and_zero_norm() {
        let p = parse("gens: a x ; rels: [x,a]").unwrap();
        let phi = CohomClass::from_integers(&p, &[1, 0]).unwrap();
        let lb = lower_bounds(&p, &phi).unwrap();
        assert_eq!(lb.betti, 2);
        assert_eq!(lb.a_bound, Some(rat(0)));
        assert!(!lb.a_degenerate);
        // the one-variable polynomial picks up a t-1 factor: bound 0,
        // matching t_P = 0 for the standard torus presentation
        assert_eq!(lb.deg_bound, Some(rat(0)));
    }

    #[test]
    fn polytope_vertices_drop_interior_points() {
        // square with its center and an edge midpoint
        let s = NewtonSupport {
            points: vec![
                vec![0, 0],
                vec![2, 0],
                vec![0, 2],
                vec![2, 2],
                vec![1, 1],
                vec![1, 0],
            ],
        };
        let mut v = polytope_vertices(&s);
        v.sort();
        assert_eq!(v, vec![vec![0, 0], vec![0, 2], vec![2, 0], vec![2, 2]]);

        // a segment keeps only its ends
        let s = NewtonSupport { points: vec![vec![0], vec![3], vec![1], vec![2]] };
        let mut v = polytope_vertices(&s);
        v.sort();
        assert_eq!(v, vec![vec![0], vec![3]]);
    }

    #[test]
    fn norm_agrees_with_vertex_width() {
        // the width over the full support equals the width over hull vertices
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..40 {
            let nvars = rng.gen_range(1..4);
            let nterms = rng.gen_range(1..7);
            let mut p = LaurentPoly::zero(nvars);
            for _ in 0..nterms {
                let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-3..4)).collect();
                p.add_term(e, BigInt::from(1));
            }
            let phi: Vec<BigRational> = (0..nvars).map(|_| rat(rng.gen_range(-3..4))).collect();
            let full = alexander_norm(&p, &phi);
            let hull = NewtonSupport { points: polytope_vertices(&NewtonSupport::of(&p)) };
            let mut best = BigRational::zero();
            for h in &hull.points {
                for g in &hull.points {
                    let mut diff = BigRational::zero();
                    for ((hi, gi), c) in h.iter().zip(g).zip(&phi) {
                        diff += c * BigRational::from(BigInt::from(hi - gi));
                    }
                    best = best.max(diff);
                }
            }
            assert_eq!(full, best);
        }
    }
}
