//! The Turaev norm of a class on a 2-complex with empty boundary:
//! the minimum of `sum_e (n_e/2 - 1) |k(e)|` over cocycles `k` in the
//! class. Since any two representatives differ by a coboundary, this is
//! a piecewise-linear convex minimization over vertex potentials, solved
//! exactly by rational linear programming or by enumeration over a
//! provably sufficient box.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::anorm::{self, LowerBounds};
use crate::complex::{Cochain, TwoComplex};
use crate::lp::{self, LpOutcome};
use crate::presentation::{CohomClass, Presentation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Lp,
    Brute,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "lp" => Ok(Method::Lp),
            "brute" => Ok(Method::Brute),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    LpIntegral,
    BruteForce,
}

#[derive(Clone, Debug)]
pub struct NormResult {
    pub value: BigRational,
    pub optimal_cochain: Cochain,
    pub certificate: Certificate,
    /// Set when the LP vertex came back non-integral and the value had
    /// to be confirmed by enumeration. Should never happen.
    pub lp_fallback: bool,
}

/// Per-edge weights `n_e/2 - 1`; nonnegative exactly when the boundary
/// is empty.
pub fn weights(x: &TwoComplex) -> Vec<BigRational> {
    x.edge_multiplicities()
        .iter()
        .map(|&n| {
            BigRational::new(BigInt::from(n as i64 - 2), BigInt::from(2))
        })
        .collect()
}

pub fn weight(x: &TwoComplex, k: &Cochain) -> BigRational {
    weights(x).iter().zip(k).map(|(w, v)| w * v.abs()).sum()
}

/// Norm of the class of a given cocycle.
pub fn turaev_norm(x: &TwoComplex, k0: &Cochain, method: Method) -> Result<NormResult> {
    x.boundary_empty_check()?;
    x.cocycle_check(k0)?;

    // scale to an integral cocycle; the norm is homogeneous
    let mut scale = BigInt::one();
    for v in k0 {
        scale = scale.lcm(v.denom());
    }
    let scaled: Vec<BigInt> = k0
        .iter()
        .map(|v| {
            let s = v * BigRational::from(scale.clone());
            debug_assert!(s.is_integer());
            s.to_integer()
        })
        .collect();

    let w = weights(x);
    let mut result = match method {
        Method::Lp | Method::Auto => match lp_norm(x, &scaled, &w)? {
            Some(r) => r,
            None => {
                // non-integral LP vertex; cross-check by enumeration
                let mut r = brute_norm(x, &scaled, &w)?;
                r.lp_fallback = true;
                r
            }
        },
        Method::Brute => brute_norm(x, &scaled, &w)?,
    };

    let scale = BigRational::from(scale);
    result.value /= &scale;
    for v in &mut result.optimal_cochain {
        *v /= &scale;
    }
    debug_assert_eq!(result.value, weight(x, &result.optimal_cochain));
    debug_assert!(x.is_cocycle(&result.optimal_cochain));
    Ok(result)
}

/// Norm of a class given on presentation generators.
pub fn turaev_norm_of_class(
    x: &TwoComplex,
    phi: &CohomClass,
    method: Method,
) -> Result<NormResult> {
    let k0 = x.cocycle_from_class(phi)?;
    turaev_norm(x, &k0, method)
}

/// LP formulation: minimize `sum w_e mu_e` subject to
/// `mu_e >= +-(k0(e) + f(head) - f(tail))`, with `f(v0) = 0` and `f`
/// split into nonnegative parts. Returns None when the optimal vertex
/// is non-integral, which the structure of the polyhedron rules out.
fn lp_norm(x: &TwoComplex, k0: &[BigInt], w: &[BigRational]) -> Result<Option<NormResult>> {
    let positive: Vec<usize> =
        (0..x.edges.len()).filter(|&e| w[e].is_positive()).collect();
    let nv = x.vertices;
    let np = positive.len();
    // columns: mu (np) | f+,f- per vertex 1.. | two slacks per constraint
    let nf = 2 * (nv - 1);
    let ncols = np + nf + 2 * np;
    let fcol = |v: usize| np + 2 * (v - 1);
    let mut a = Vec::with_capacity(2 * np);
    let mut b = Vec::with_capacity(2 * np);
    for (i, &e) in positive.iter().enumerate() {
        let edge = &x.edges[e];
        for sign in [1i64, -1] {
            let mut row = vec![BigRational::zero(); ncols];
            row[i] = BigRational::one();
            // -sign * (f(to) - f(from))
            if edge.to != 0 {
                row[fcol(edge.to)] -= BigRational::from(BigInt::from(sign));
                row[fcol(edge.to) + 1] += BigRational::from(BigInt::from(sign));
            }
            if edge.from != 0 {
                row[fcol(edge.from)] += BigRational::from(BigInt::from(sign));
                row[fcol(edge.from) + 1] -= BigRational::from(BigInt::from(sign));
            }
            row[np + nf + 2 * i + (sign == -1) as usize] = -BigRational::one();
            a.push(row);
            b.push(BigRational::from(&k0[e] * BigInt::from(sign)));
        }
    }
    let mut c = vec![BigRational::zero(); ncols];
    for (i, &e) in positive.iter().enumerate() {
        c[i] = w[e].clone();
    }
    let LpOutcome::Optimal { value, x: sol } = lp::solve_min(&c, &a, &b) else {
        return Err(Error::Internal(
            "the norm program is feasible and bounded by construction".into(),
        ));
    };
    let mut f = vec![BigRational::zero(); nv];
    for v in 1..nv {
        f[v] = &sol[fcol(v)] - &sol[fcol(v) + 1];
    }
    if f.iter().any(|v| !v.is_integer()) || sol[..np].iter().any(|v| !v.is_integer()) {
        return Ok(None);
    }
    let df = x.coboundary(&f);
    let k: Cochain = k0
        .iter()
        .zip(&df)
        .map(|(k, d)| BigRational::from(k.clone()) + d)
        .collect();
    debug_assert_eq!(weight(x, &k), value);
    Ok(Some(NormResult {
        value,
        optimal_cochain: k,
        certificate: Certificate::LpIntegral,
        lp_fallback: false,
    }))
}

/// Enumerate integer potentials over a box that provably contains an
/// optimum. Two sound bounds, take the smaller:
///
/// * any optimum can be normalized, by shifting blocks of vertices
///   across value gaps wider than `max|k0|`, until every value is within
///   `(V' - 1) max|k0|` of zero, where `V'` counts vertices touching a
///   positive-weight edge;
/// * the total climb of the potential is at most `2 W0 / w_min`, since
///   each unit level cut is crossed by a positive edge and
///   `sum w|df| <= opt + W0 <= 2 W0`.
///
/// Vertices touching only weight-zero edges never affect the objective
/// and stay pinned at zero.
fn brute_norm(x: &TwoComplex, k0: &[BigInt], w: &[BigRational]) -> Result<NormResult> {
    let positive: Vec<usize> =
        (0..x.edges.len()).filter(|&e| w[e].is_positive()).collect();
    let base: Cochain = k0.iter().map(|v| BigRational::from(v.clone())).collect();
    if positive.is_empty() {
        return Ok(NormResult {
            value: BigRational::zero(),
            optimal_cochain: base,
            certificate: Certificate::BruteForce,
            lp_fallback: false,
        });
    }
    let mut relevant = vec![false; x.vertices];
    relevant[0] = true;
    for &e in &positive {
        relevant[x.edges[e].from] = true;
        relevant[x.edges[e].to] = true;
    }
    let free: Vec<usize> = (1..x.vertices).filter(|&v| relevant[v]).collect();

    let kmax = positive.iter().map(|&e| k0[e].abs()).max().unwrap();
    let w0: BigRational = positive
        .iter()
        .map(|&e| &w[e] * BigRational::from(k0[e].abs()))
        .sum();
    let wmin = positive.iter().map(|&e| w[e].clone()).min().unwrap();
    let forest_bound = BigInt::from(free.len()) * &kmax;
    let cut_bound = (BigRational::from(BigInt::from(2)) * &w0 / &wmin).ceil().to_integer();
    let bound = forest_bound.min(cut_bound);
    let bound = bound.to_i64().ok_or_else(|| {
        Error::BruteTooLarge(format!("potential box radius {bound} is out of range"))
    })?;

    let span = 2 * bound as u128 + 1;
    let mut count: u128 = 1;
    for _ in &free {
        count = count.saturating_mul(span);
        if count > 4_000_000 {
            return Err(Error::BruteTooLarge(format!(
                "{} potentials to scan (box radius {bound}, {} free vertices); try the lp method",
                count,
                free.len()
            )));
        }
    }

    let mut f = vec![-bound; free.len()];
    let mut best_val: Option<BigRational> = None;
    let mut best_k = base.clone();
    loop {
        let mut fv = vec![BigRational::zero(); x.vertices];
        for (i, &v) in free.iter().enumerate() {
            fv[v] = BigRational::from(BigInt::from(f[i]));
        }
        let df = x.coboundary(&fv);
        let k: Cochain = base.iter().zip(&df).map(|(a, b)| a + b).collect();
        let val = weight(x, &k);
        if best_val.as_ref().map_or(true, |b| val < *b) {
            best_val = Some(val);
            best_k = k;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == f.len() {
                return Ok(NormResult {
                    value: best_val.unwrap(),
                    optimal_cochain: best_k,
                    certificate: Certificate::BruteForce,
                    lp_fallback: false,
                });
            }
            if f[i] < bound {
                f[i] += 1;
                break;
            }
            f[i] = -bound;
            i += 1;
        }
    }
}

/// The certification sandwich for the minimal Turaev complexity over all
/// presentations of a group.
#[derive(Clone, Debug)]
pub struct Sandwich {
    pub lower: BigRational,
    pub upper: BigRational,
    pub certified: bool,
    pub bounds: Vec<LowerBounds>,
    /// `t_P` of each supplied presentation after making it good.
    pub uppers: Vec<BigRational>,
}

/// Squeeze the minimal complexity between the Alexander-theoretic lower
/// bounds and presentation complexities. Each entry pairs a presentation
/// with the class written in its own generators.
pub fn certify_tbar(entries: &[(Presentation, CohomClass)]) -> Result<Sandwich> {
    if entries.is_empty() {
        return Err(Error::Parse("certification needs at least one presentation".into()));
    }
    let ab = entries[0].0.abelianization();
    for (p, _) in &entries[1..] {
        let other = p.abelianization();
        if other != ab {
            return Err(Error::InconsistentAbelianizations(format!(
                "H1 = Z^{} + {:?} vs Z^{} + {:?}",
                ab.0, ab.1, other.0, other.1
            )));
        }
    }

    let mut bounds = Vec::new();
    let mut uppers = Vec::new();
    for (p, phi) in entries {
        bounds.push(anorm::lower_bounds(p, phi)?);
        let good = p.make_good();
        // surviving generators keep their names, so the class restricts
        let pairs: Vec<(String, BigRational)> = good
            .gens
            .iter()
            .map(|name| {
                let i = p.gen_index(name).expect("make_good introduces no generators");
                (name.clone(), phi.values[i].clone())
            })
            .collect();
        let restricted = CohomClass::from_pairs(&good, &pairs)?;
        uppers.push(good.t_p(&restricted)?);
    }

    // the complexity is a sum of nonnegative terms, so zero is always a
    // valid floor even when every refined bound is inapplicable
    let mut lower = BigRational::zero();
    for b in &bounds {
        if let Some(v) = b.best() {
            if v > lower {
                lower = v;
            }
        }
    }
    let upper = uppers.iter().min().unwrap().clone();
    let certified = lower == upper;
    Ok(Sandwich { lower, upper, certified, bounds, uppers })
}
