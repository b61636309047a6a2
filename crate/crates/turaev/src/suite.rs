//! The built-in reproduction suite: every numbered check the crate
//! promises, runnable from the command line and from the integration
//! tests. Each criterion is self-contained and deterministic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alexander::{self, AbMap};
use crate::anorm;
use crate::complex::TwoComplex;
use crate::covers::{self, CoverSpec};
use crate::fixtures;
use crate::laurent::LaurentPoly;
use crate::norm::{self, Certificate, Method};
use crate::pd;
use crate::presentation::{div_counterexample, CohomClass, Presentation};
use crate::twisted::{self, QPoly};
use crate::word::{Letter, Word};
use crate::Error;

pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

fn criterion(id: usize, name: &'static str, f: impl FnOnce() -> Check) -> CriterionResult {
    match f() {
        Ok(detail) => CriterionResult { id, name, pass: true, detail },
        Err(detail) => CriterionResult { id, name, pass: false, detail },
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

macro_rules! expect {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion(1, "Wirtinger complexity counts crossings", c1_wirtinger_counts),
        criterion(2, "trefoil certifies to 1", c2_trefoil_certified),
        criterion(3, "wedges of tori: zero norm, known homology", c3_wedges),
        criterion(4, "Alexander polynomial fixtures and minor oracle", c4_alexander),
        criterion(5, "LP matches brute force, optimum integral", c5_optimizer_oracle),
        criterion(6, "cover norms bounded by degree times base", c6_cover_inequality),
        criterion(7, "Fox fundamental identity", c7_fox_identity),
        criterion(8, "divisibility is not subadditive", c8_divisibility),
        criterion(9, "Alexander norm is a seminorm", c9_seminorm),
        criterion(10, "bounds respect their hypotheses", c10_gating),
    ]
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

// ---- 1 ----------------------------------------------------------------

fn c1_wirtinger_counts() -> Check {
    let mut seen = Vec::new();
    for (name, code, crossings) in
        [("trefoil", fixtures::TREFOIL_PD, 3i64), ("fig8", fixtures::FIG8_PD, 4)]
    {
        let d = lib(pd::analyze(&lib(pd::parse_pd(code))?))?;
        let t = lib(d.presentation.t_p(&d.total_meridian_class()))?;
        expect!(t == rat(crossings), "t_P({name}) = {t}, wanted {crossings}");
        seen.push(format!("t_P({name}) = {crossings}"));
    }
    Ok(seen.join(", "))
}

// ---- 2 ----------------------------------------------------------------

fn c2_trefoil_certified() -> Check {
    let (p, phi) = fixtures::trefoil_2gen();
    let s = lib(norm::certify_tbar(&[(p, phi)]))?;
    expect!(s.certified, "interval [{}, {}] did not close", s.lower, s.upper);
    expect!(s.lower == rat(1), "certified value {} instead of 1", s.lower);
    let b = &s.bounds[0];
    expect!(b.deg_bound == Some(rat(1)), "degree bound {:?}", b.deg_bound);
    expect!(b.a_bound.is_none(), "a-norm bound appeared with first Betti number 1");
    Ok("lower = upper = 1, from the degree bound and the 2-generator t_P".into())
}

// ---- 3 ----------------------------------------------------------------

fn c3_wedges() -> Check {
    let t_minus_1 = QPoly::t_power_minus_one(1);
    for n in 1..=4usize {
        let (p, phi) = fixtures::wedge_tori(n);
        let t = lib(p.t_p(&phi))?;
        expect!(t.is_zero(), "wedge of {n} tori has t_P = {t}");

        let x = TwoComplex::from_presentation(&p);
        let r = lib(norm::turaev_norm_of_class(&x, &phi, Method::Auto))?;
        expect!(r.value.is_zero(), "wedge of {n} tori has norm {}", r.value);

        let h = lib(twisted::h1_qt(&p, &phi))?;
        expect!(h.free_rank == n - 1, "wedge of {n}: free rank {}", h.free_rank);
        expect!(h.torsion.len() == n, "wedge of {n}: {} factors", h.torsion.len());
        for f in &h.torsion {
            expect!(*f == t_minus_1, "wedge of {n}: factor {f}");
        }
    }
    Ok("n = 1..4: t_P = 0, norm = 0, H1 = free rank n-1 plus n factors of t - 1".into())
}

// ---- 4 ----------------------------------------------------------------

/// Plain cofactor expansion, no memoization: an independent check on the
/// determinant used by the library.
fn naive_det(m: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let s = m.len();
    if s == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut acc = LaurentPoly::zero(nvars);
    for j in 0..s {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect()
            })
            .collect();
        let term = m[0][j].mul(&naive_det(&minor, nvars));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Gcd over every `(m-1)`-subset of rows and columns, enumerated in the
/// opposite order to the library and with no early exit.
fn all_minors_gcd(p: &Presentation, psi: &AbMap) -> std::result::Result<LaurentPoly, String> {
    let mat = lib(alexander::alexander_matrix(p, psi))?;
    let s = mat.ncols.saturating_sub(1);
    if s == 0 {
        return Ok(LaurentPoly::one(psi.rank));
    }
    if mat.nrows < s {
        return Ok(LaurentPoly::zero(psi.rank));
    }
    let subsets = |n: usize| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for mask in (0u32..1 << n).rev() {
            if mask.count_ones() as usize == s {
                out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
            }
        }
        out
    };
    let mut g = LaurentPoly::zero(psi.rank);
    for rows in subsets(mat.nrows) {
        for cols in subsets(mat.ncols) {
            let sub: Vec<Vec<LaurentPoly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| mat.entries[r][c].clone()).collect())
                .collect();
            g = g.gcd(&naive_det(&sub, psi.rank));
        }
    }
    Ok(g.canonical())
}

fn c4_alexander() -> Check {
    let poly1 = |terms: &[(i64, i64)]| {
        let mut p = LaurentPoly::zero(1);
        for &(e, c) in terms {
            p.add_term(vec![e], BigInt::from(c));
        }
        p
    };

    // knot fixtures through the Wirtinger pipeline
    let mut details = Vec::new();
    for (name, code, expect_poly) in [
        ("trefoil", fixtures::TREFOIL_PD, poly1(&[(2, 1), (1, -1), (0, 1)])),
        ("fig8", fixtures::FIG8_PD, poly1(&[(2, 1), (1, -3), (0, 1)])),
    ] {
        let d = lib(pd::analyze(&lib(pd::parse_pd(code))?))?;
        let psi = lib(AbMap::from_class(&d.presentation, &d.total_meridian_class()))?;
        let delta = lib(alexander::alexander_polynomial(&d.presentation, &psi))?;
        expect!(delta.eq_up_to_unit(&expect_poly), "{name}: got {}", delta.display(&["t"]));
        let oracle = all_minors_gcd(&d.presentation, &psi)?;
        expect!(delta.eq_up_to_unit(&oracle), "{name}: gcd depends on the minor order");
        details.push(format!("{name} = {}", delta.display(&["t"])));
    }

    // Z^2 has trivial polynomial
    let (p, _) = fixtures::wedge_tori(1);
    let (delta, psi) = lib(alexander::alexander_polynomial_canonical(&p))?;
    expect!(delta.is_unit(), "Z^2: got {}", delta.display(&["s", "u"]));
    let oracle = all_minors_gcd(&p, &psi)?;
    expect!(delta.eq_up_to_unit(&oracle), "Z^2: gcd depends on the minor order");
    details.push("Z^2 = 1".into());

    // Whitehead link in meridian coordinates
    let d = lib(pd::analyze(&lib(pd::parse_pd(fixtures::WHITEHEAD_PD))?))?;
    let psi = d.meridian_ab_map();
    let delta = lib(alexander::alexander_polynomial(&d.presentation, &psi))?;
    let s1 = LaurentPoly::monomial(vec![1, 0], 1).sub(&LaurentPoly::one(2));
    let u1 = LaurentPoly::monomial(vec![0, 1], 1).sub(&LaurentPoly::one(2));
    expect!(
        delta.eq_up_to_unit(&s1.mul(&u1)),
        "whitehead: got {}",
        delta.display(&["s", "u"])
    );
    let oracle = all_minors_gcd(&d.presentation, &psi)?;
    expect!(delta.eq_up_to_unit(&oracle), "whitehead: gcd depends on the minor order");
    details.push("whitehead = (s - 1)(u - 1)".into());

    Ok(details.join(", "))
}

// ---- 5 and 6 ----------------------------------------------------------

pub fn random_good_presentation(rng: &mut ChaCha8Rng) -> Presentation {
    loop {
        let ngens = rng.gen_range(1..5);
        let nrels = rng.gen_range(1..5);
        let gens: Vec<String> = (0..ngens).map(|i| format!("g{i}")).collect();
        let rels: Vec<Word> = (0..nrels)
            .map(|_| {
                let len = rng.gen_range(1..9);
                Word::from_letters(
                    (0..len)
                        .map(|_| Letter::new(rng.gen_range(0..ngens), rng.gen_bool(0.5)))
                        .collect(),
                )
            })
            .collect();
        let p = Presentation::new(gens, rels).make_good();
        if p.abelianization().0 >= 1 {
            return p;
        }
    }
}

pub fn random_class(rng: &mut ChaCha8Rng, p: &Presentation) -> Option<CohomClass> {
    let basis = p.class_lattice_basis();
    if basis.is_empty() {
        return None;
    }
    for _ in 0..10 {
        let mut values = vec![BigRational::zero(); p.gens.len()];
        for b in &basis {
            let c = rng.gen_range(-2..3);
            for (v, bv) in values.iter_mut().zip(b) {
                *v += BigRational::from(BigInt::from(c) * bv);
            }
        }
        if values.iter().any(|v| !v.is_zero()) {
            return CohomClass::from_values(p, values).ok();
        }
    }
    None
}

struct CoverInstance {
    base: Presentation,
    phi: CohomClass,
    cover: TwoComplex,
    lifted: crate::complex::Cochain,
    degree: usize,
}

/// A deterministic batch of cyclic covers over random good presentations.
fn cover_instances(target: usize) -> std::result::Result<Vec<CoverInstance>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(271);
    let mut out = Vec::new();
    while out.len() < target {
        let p = random_good_presentation(&mut rng);
        let Some(phi) = random_class(&mut rng, &p) else { continue };
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let spec = match CoverSpec::cyclic(&p, &phi, n) {
            Ok(s) => s,
            Err(Error::CoverNotTransitive) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let base = TwoComplex::from_presentation(&p);
        let cover = lib(covers::cover_complex(&base, &spec))?;
        let lifted = lib(cover.cocycle_from_class(&phi))?;
        out.push(CoverInstance { base: p, phi, cover, lifted, degree: n });
    }
    Ok(out)
}

fn c5_optimizer_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(137);
    let mut checked = 0usize;
    while checked < 200 {
        let p = random_good_presentation(&mut rng);
        let Some(phi) = random_class(&mut rng, &p) else { continue };
        let x = TwoComplex::from_presentation(&p);
        let lp = lib(norm::turaev_norm_of_class(&x, &phi, Method::Lp))?;
        let brute = lib(norm::turaev_norm_of_class(&x, &phi, Method::Brute))?;
        expect!(
            lp.value == brute.value,
            "presentation {}: lp {} vs brute {}",
            p.display(),
            lp.value,
            brute.value
        );
        expect!(lp.certificate == Certificate::LpIntegral, "non-LP certificate");
        expect!(!lp.lp_fallback, "LP vertex came back non-integral on {}", p.display());
        checked += 1;
    }
    let mut covers_checked = 0usize;
    for inst in cover_instances(50)? {
        let lp = lib(norm::turaev_norm(&inst.cover, &inst.lifted, Method::Lp))?;
        let brute = lib(norm::turaev_norm(&inst.cover, &inst.lifted, Method::Brute))?;
        expect!(
            lp.value == brute.value,
            "cover of {}: lp {} vs brute {}",
            inst.base.display(),
            lp.value,
            brute.value
        );
        expect!(!lp.lp_fallback, "cover LP vertex came back non-integral");
        covers_checked += 1;
    }
    Ok(format!("{checked} presentations and {covers_checked} covers agree"))
}

fn c6_cover_inequality() -> Check {
    let instances = cover_instances(50)?;
    let total = instances.len();
    for inst in instances {
        let cover_value = lib(norm::turaev_norm(&inst.cover, &inst.lifted, Method::Auto))?.value;
        let base_complex = inst.base.clone();
        let base_value = lib(norm::turaev_norm_of_class(
            &TwoComplex::from_presentation(&base_complex),
            &inst.phi,
            Method::Auto,
        ))?
        .value;
        let bound = &base_value * rat(inst.degree as i64);
        expect!(
            cover_value <= bound,
            "cover of {} (degree {}): {} > {} = {} x {}",
            inst.base.display(),
            inst.degree,
            cover_value,
            bound,
            inst.degree,
            base_value
        );
    }
    Ok(format!("{total} cyclic covers satisfy the degree bound"))
}

// ---- 7 ----------------------------------------------------------------

fn c7_fox_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    let mut relators = 0usize;
    for _ in 0..120 {
        let p = random_good_presentation(&mut rng);
        let psi = match AbMap::canonical(&p) {
            Ok(psi) => psi,
            Err(Error::BettiZero) => continue,
            Err(e) => return Err(e.to_string()),
        };
        for r in &p.rels {
            let mut sum = LaurentPoly::zero(psi.rank);
            for i in 0..p.gens.len() {
                let di = psi.ring_image(&alexander::fox_derivative(r, i));
                let xi = psi.word_image(&Word::gen(i));
                sum = sum.add(&di.mul(&xi.sub(&LaurentPoly::one(psi.rank))));
            }
            expect!(
                sum.is_zero(),
                "sum_i psi(dr/dx_i)(psi(x_i) - 1) != 0 on `{}` in {}",
                r.display(&p.gens),
                p.display()
            );
            relators += 1;
        }
    }
    Ok(format!("identity holds on {relators} relators"))
}

// ---- 8 ----------------------------------------------------------------

fn c8_divisibility() -> Check {
    // the smallest instance first: psi = (1,1) gives p = 3, beta = (5,3)
    let c = lib(div_counterexample(1, 1))?;
    expect!(c.p == 3, "psi=(1,1): p = {}", c.p);
    expect!(
        c.beta == (BigInt::from(5), BigInt::from(3)),
        "psi=(1,1): beta = ({}, {})",
        c.beta.0,
        c.beta.1
    );
    expect!(
        &c.div_alpha + &c.div_beta < c.div_sum,
        "psi=(1,1): {} + {} !< {}",
        c.div_alpha,
        c.div_beta,
        c.div_sum
    );

    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let mut checked = 0usize;
    while checked < 100 {
        let x = rng.gen_range(-40i64..=40);
        let y = rng.gen_range(-40i64..=40);
        if y == 0 || num_integer::gcd(x, y) != 1 {
            continue;
        }
        let c = lib(div_counterexample(x, y))?;
        expect!(
            &c.div_alpha + &c.div_beta < c.div_sum,
            "psi=({x},{y}): div {} + {} !< {}",
            c.div_alpha,
            c.div_beta,
            c.div_sum
        );
        checked += 1;
    }
    Ok(format!("strict on ({}, {}) and {checked} random primitive pairs", 1, 1))
}

// ---- 9 ----------------------------------------------------------------

fn c9_seminorm() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    let rand_rat = |rng: &mut ChaCha8Rng| {
        BigRational::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=4)))
    };
    for _ in 0..500 {
        let nvars = rng.gen_range(1..=3);
        let mut delta = LaurentPoly::zero(nvars);
        for _ in 0..rng.gen_range(1..=5) {
            let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-3i64..=3)).collect();
            delta.add_term(e, BigInt::from(rng.gen_range(-3i64..=3)));
        }
        let phi: Vec<BigRational> = (0..nvars).map(|_| rand_rat(&mut rng)).collect();
        let psi: Vec<BigRational> = (0..nvars).map(|_| rand_rat(&mut rng)).collect();
        let c = rand_rat(&mut rng);

        let a_phi = anorm::alexander_norm(&delta, &phi);
        let scaled: Vec<BigRational> = phi.iter().map(|v| v * &c).collect();
        let homog = anorm::alexander_norm(&delta, &scaled);
        expect!(homog == c.abs() * &a_phi, "homogeneity fails: a(c phi) = {homog}");

        let a_psi = anorm::alexander_norm(&delta, &psi);
        let summed: Vec<BigRational> = phi.iter().zip(&psi).map(|(a, b)| a + b).collect();
        let a_sum = anorm::alexander_norm(&delta, &summed);
        expect!(a_sum <= &a_phi + &a_psi, "triangle fails: {a_sum} > {a_phi} + {a_psi}");
    }
    Ok("homogeneity and triangle inequality on 500 random triples".into())
}

// ---- 10 ---------------------------------------------------------------

fn c10_gating() -> Check {
    // first Betti number 1: no Alexander-norm bound, but the degree bound
    let (p, phi) = fixtures::trefoil_2gen();
    let b = lib(anorm::lower_bounds(&p, &phi))?;
    expect!(b.betti == 1, "trefoil Betti {}", b.betti);
    expect!(b.a_bound.is_none(), "a-norm bound emitted with Betti 1");
    expect!(b.deg_bound == Some(rat(1)), "trefoil degree bound {:?}", b.deg_bound);

    // vanishing multivariable polynomial: the a-bound is a flagged zero,
    // and the one-variable polynomial vanishes too, killing the degree bound
    let (p, phi) = fixtures::wedge_tori(2);
    let b = lib(anorm::lower_bounds(&p, &phi))?;
    expect!(b.betti >= 2, "wedge Betti {}", b.betti);
    expect!(b.a_degenerate, "wedge a-bound not flagged degenerate");
    expect!(b.a_bound == Some(rat(0)), "wedge a-bound {:?}", b.a_bound);
    expect!(b.deg_bound.is_none(), "wedge degree bound {:?}", b.deg_bound);

    // imprimitive class: no degree bound even though the polynomial is fine
    let (p, phi) = fixtures::trefoil_2gen();
    let doubled = CohomClass::from_values(
        &p,
        phi.values.iter().map(|v| v * rat(2)).collect(),
    )
    .map_err(|e| e.to_string())?;
    let b = lib(anorm::lower_bounds(&p, &doubled))?;
    expect!(b.divisibility == Some(BigInt::from(2)), "div {:?}", b.divisibility);
    expect!(b.deg_bound.is_none(), "degree bound emitted for an imprimitive class");
    Ok("a-bound needs Betti >= 2; degree bound needs a nonzero polynomial and a primitive class"
        .into())
}
