//! Finite group presentations and their complexity.
//!
//! A presentation is good when every generator occurs at least twice in
//! the relators, counting both `g` and `g^-1`. Good presentations are the
//! ones whose presentation complexes have no boundary, and they are the
//! domain of the complexity function `t_P`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::snf::{self, IMat};
use crate::word::{Letter, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Vec<String>,
    pub rels: Vec<Word>,
}

impl Presentation {
    pub fn new(gens: Vec<String>, rels: Vec<Word>) -> Self {
        Presentation { gens, rels }
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    /// Total number of occurrences of generator `i` across all relators.
    pub fn occurrence_count(&self, i: usize) -> usize {
        self.rels.iter().map(|r| r.occurrences(i)).sum()
    }

    pub fn is_good(&self) -> bool {
        (0..self.gens.len()).all(|i| self.occurrence_count(i) >= 2)
    }

    pub fn good_check(&self) -> Result<()> {
        for i in 0..self.gens.len() {
            let c = self.occurrence_count(i);
            if c < 2 {
                return Err(Error::NotGood(self.gens[i].clone(), c));
            }
        }
        Ok(())
    }

    /// Tietze-transform into a good presentation of the same group:
    /// repeatedly eliminate the lowest-indexed generator occurring exactly
    /// once, then pad each unused generator with a trivial relator
    /// `x x^-1`. Idempotent on presentations that are already good.
    pub fn make_good(&self) -> Presentation {
        let mut p = self.clone();
        loop {
            let Some(gen) = (0..p.gens.len()).find(|&i| p.occurrence_count(i) == 1) else {
                break;
            };
            let ri = p
                .rels
                .iter()
                .position(|r| r.occurrences(gen) == 1)
                .expect("occurrence count said so");
            let r = &p.rels[ri];
            let pos = r.letters.iter().position(|l| l.gen == gen).unwrap();
            let u = Word::from_letters(r.letters[..pos].to_vec());
            let v = Word::from_letters(r.letters[pos + 1..].to_vec());
            // u x v = 1 solves to x = u^-1 v^-1; u x^-1 v = 1 to x = v u
            let replacement = if r.letters[pos].inv {
                v.concat(&u).reduce()
            } else {
                u.inverse().concat(&v.inverse()).reduce()
            };
            let mut rels = Vec::with_capacity(p.rels.len() - 1);
            for (j, rel) in p.rels.iter().enumerate() {
                if j == ri {
                    continue;
                }
                rels.push(rel.substitute(gen, &replacement).reduce().renumber_after_removal(gen));
            }
            let mut gens = p.gens;
            gens.remove(gen);
            p = Presentation { gens, rels };
        }
        for i in 0..p.gens.len() {
            if p.occurrence_count(i) == 0 {
                p.rels.push(Word::from_letters(vec![
                    Letter::new(i, false),
                    Letter::new(i, true),
                ]));
            }
        }
        p
    }

    /// The complexity `t_P(phi) = sum_i (#(x_i)/2 - 1) |phi(x_i)|`,
    /// defined for good presentations only.
    pub fn t_p(&self, phi: &CohomClass) -> Result<BigRational> {
        self.good_check()?;
        let mut total = BigRational::zero();
        for i in 0..self.gens.len() {
            let count = BigInt::from(self.occurrence_count(i));
            let w = BigRational::new(count, BigInt::from(2)) - BigRational::one();
            total += w * phi.values[i].abs();
        }
        Ok(total)
    }

    /// Exponent-sum matrix, one row per relator, one column per generator.
    pub fn ab_relator_matrix(&self) -> IMat {
        self.rels
            .iter()
            .map(|r| (0..self.gens.len()).map(|i| BigInt::from(r.exponent_sum(i))).collect())
            .collect()
    }

    /// Basis of the lattice of integral cohomology classes, i.e. of the
    /// kernel of the exponent-sum matrix.
    pub fn class_lattice_basis(&self) -> Vec<Vec<BigInt>> {
        if self.rels.is_empty() {
            return snf::kernel_basis(&vec![vec![BigInt::zero(); self.gens.len()]; 0]);
        }
        snf::kernel_basis(&self.ab_relator_matrix())
    }

    /// Betti number and torsion of the abelianization.
    pub fn abelianization(&self) -> (usize, Vec<BigInt>) {
        let m = self.gens.len();
        // columns are abelianized relators; the cokernel is H_1
        let a: IMat = (0..m)
            .map(|i| self.rels.iter().map(|r| BigInt::from(r.exponent_sum(i))).collect())
            .collect();
        if self.rels.is_empty() {
            return (m, Vec::new());
        }
        let s = snf::smith(&a);
        let torsion: Vec<BigInt> =
            s.diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
        (m - s.rank, torsion)
    }

    /// Divisibility of a nonzero integral class: the gcd of its values on
    /// a basis of the free part of the abelianization. The basis comes
    /// from the Smith form of the abelianized relator matrix.
    pub fn divisibility(&self, phi: &CohomClass) -> Result<BigInt> {
        let vals = phi.integral_values().ok_or_else(|| {
            Error::Internal("divisibility needs an integral class".into())
        })?;
        if vals.iter().all(|v| v.is_zero()) {
            return Err(Error::ZeroClass);
        }
        let m = self.gens.len();
        if self.rels.is_empty() {
            return Ok(gcd_of(&vals));
        }
        let a: IMat = (0..m)
            .map(|i| self.rels.iter().map(|r| BigInt::from(r.exponent_sum(i))).collect())
            .collect();
        let s = snf::smith(&a);
        // phi * P^-1 vanishes on the torsion coordinates; its free-part
        // entries are the coefficients in the induced basis
        let mut free = Vec::new();
        for j in 0..m {
            let coeff: BigInt = (0..m).map(|i| &vals[i] * &s.p_inv[i][j]).sum();
            if j < s.rank {
                debug_assert!(coeff.is_zero());
            } else {
                free.push(coeff);
            }
        }
        let g = gcd_of(&free);
        if g.is_zero() {
            return Err(Error::ZeroClass);
        }
        Ok(g)
    }

    pub fn display(&self) -> String {
        let rels: Vec<String> = self.rels.iter().map(|r| r.display(&self.gens)).collect();
        format!("gens: {} ; rels: {}", self.gens.join(" "), rels.join(" , "))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

fn gcd_of(vals: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in vals {
        g = g.gcd(v);
    }
    g
}

fn valid_gen_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

/// Split on commas, but not on the comma inside a commutator `[g,h]`.
fn split_outside_brackets(body: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&body[start..]);
    parts
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse `gens: a b ; rels: w , w`. Relator words come out freely
/// reduced. A trailing empty section is allowed.
pub fn parse(text: &str) -> Result<Presentation> {
    let (p, phi) = parse_file(text)?;
    if phi.is_some() {
        return Err(Error::Parse("unexpected `phi:` section".into()));
    }
    Ok(p)
}

/// Like [`parse`], but also accepts an optional `phi: g=1, h=0` section
/// naming a cohomology class alongside the presentation.
pub fn parse_file(text: &str) -> Result<(Presentation, Option<CohomClass>)> {
    let text = strip_comments(text);
    let mut gens: Option<Vec<String>> = None;
    let mut rels: Option<Vec<Word>> = None;
    let mut phi_pairs: Option<Vec<(String, BigRational)>> = None;

    for chunk in text.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let (key, body) = chunk
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `key: ...`, got `{chunk}`")))?;
        match key.trim() {
            "gens" => {
                if gens.is_some() {
                    return Err(Error::Parse("duplicate `gens:` section".into()));
                }
                let names: Vec<String> = body.split_whitespace().map(String::from).collect();
                for n in &names {
                    if !valid_gen_name(n) {
                        return Err(Error::Parse(format!("bad generator name `{n}`")));
                    }
                }
                let mut seen = std::collections::HashSet::new();
                for n in &names {
                    if !seen.insert(n.clone()) {
                        return Err(Error::Parse(format!("duplicate generator `{n}`")));
                    }
                }
                gens = Some(names);
            }
            "rels" => {
                if rels.is_some() {
                    return Err(Error::Parse("duplicate `rels:` section".into()));
                }
                let names = gens
                    .as_ref()
                    .ok_or_else(|| Error::Parse("`rels:` before `gens:`".into()))?;
                let lookup = |s: &str| names.iter().position(|g| g == s);
                let mut out = Vec::new();
                for part in split_outside_brackets(body) {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    out.push(Word::parse(part, &lookup)?.reduce());
                }
                rels = Some(out);
            }
            "phi" => {
                if phi_pairs.is_some() {
                    return Err(Error::Parse("duplicate `phi:` section".into()));
                }
                phi_pairs = Some(parse_class_pairs(body)?);
            }
            other => return Err(Error::Parse(format!("unknown section `{other}`"))),
        }
    }

    let gens = gens.ok_or_else(|| Error::Parse("missing `gens:` section".into()))?;
    let p = Presentation::new(gens, rels.unwrap_or_default());
    let phi = match phi_pairs {
        None => None,
        Some(pairs) => Some(CohomClass::from_pairs(&p, &pairs)?),
    };
    Ok((p, phi))
}

/// Parse `g=1, h=-2/3` into name-value pairs.
pub fn parse_class_pairs(body: &str) -> Result<Vec<(String, BigRational)>> {
    let mut out = Vec::new();
    for part in body.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected `gen=value`, got `{part}`")))?;
        out.push((name.trim().to_string(), parse_rational(val.trim())?));
    }
    Ok(out)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad number `{s}`")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from(parse_int(s)?)),
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(parse_int(num)?, d))
        }
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A class in `H^1` with rational values, one per generator, vanishing on
/// every relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomClass {
    pub values: Vec<BigRational>,
}

impl CohomClass {
    pub fn from_values(p: &Presentation, values: Vec<BigRational>) -> Result<Self> {
        assert_eq!(values.len(), p.gens.len());
        let phi = CohomClass { values };
        phi.validate(p)?;
        Ok(phi)
    }

    /// Build from `(name, value)` pairs; unnamed generators get 0.
    pub fn from_pairs(p: &Presentation, pairs: &[(String, BigRational)]) -> Result<Self> {
        let mut values = vec![BigRational::zero(); p.gens.len()];
        for (name, v) in pairs {
            let i = p
                .gen_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            values[i] = v.clone();
        }
        Self::from_values(p, values)
    }

    pub fn from_integers(p: &Presentation, values: &[i64]) -> Result<Self> {
        Self::from_values(
            p,
            values.iter().map(|&v| BigRational::from(BigInt::from(v))).collect(),
        )
    }

    /// Every generator mapped to 1; the meridian class of a knot group.
    pub fn all_ones(p: &Presentation) -> Result<Self> {
        Self::from_values(p, vec![BigRational::one(); p.gens.len()])
    }

    fn validate(&self, p: &Presentation) -> Result<()> {
        for r in &p.rels {
            let mut sum = BigRational::zero();
            for i in 0..p.gens.len() {
                sum += BigRational::from(BigInt::from(r.exponent_sum(i))) * &self.values[i];
            }
            if !sum.is_zero() {
                return Err(Error::NotAClass {
                    relator: r.display(&p.gens),
                    value: format_rational(&sum),
                });
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn integral_values(&self) -> Option<Vec<BigInt>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.values.iter().map(|v| v.numer().clone()).collect())
    }

    /// Write the class as `c * phi0` with `phi0` primitive integral and
    /// `c > 0` rational. Errors on the zero class.
    pub fn primitive_integral(&self) -> Result<(Vec<BigInt>, BigRational)> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        let mut lcm = BigInt::one();
        for v in &self.values {
            lcm = lcm.lcm(v.denom());
        }
        let scaled: Vec<BigInt> =
            self.values.iter().map(|v| (v * BigRational::from(lcm.clone())).numer().clone()).collect();
        let g = gcd_of(&scaled);
        let prim: Vec<BigInt> = scaled.iter().map(|v| v / &g).collect();
        let c = BigRational::new(g, lcm);
        Ok((prim, c))
    }

    /// Value of the class on a word, by exponent sums.
    pub fn eval(&self, w: &Word) -> BigRational {
        let mut sum = BigRational::zero();
        for l in &w.letters {
            let v = &self.values[l.gen];
            if l.inv {
                sum -= v;
            } else {
                sum += v;
            }
        }
        sum
    }

    pub fn display(&self, p: &Presentation) -> String {
        let parts: Vec<String> = p
            .gens
            .iter()
            .zip(&self.values)
            .map(|(g, v)| format!("{g}={}", format_rational(v)))
            .collect();
        parts.join(", ")
    }
}

/// The divisibility of a raw integer vector: the gcd of its entries.
pub fn vector_divisibility(v: &[BigInt]) -> BigInt {
    gcd_of(v)
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn smallest_prime_above(n: i64) -> i64 {
    let mut p = n + 1;
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// Two classes on `Z^2` witnessing that divisibility is not subadditive.
#[derive(Clone, Debug)]
pub struct DivCounterexample {
    pub psi: (i64, i64),
    pub p: i64,
    pub alpha: (BigInt, BigInt),
    pub beta: (BigInt, BigInt),
    pub div_alpha: BigInt,
    pub div_beta: BigInt,
    pub div_sum: BigInt,
}

/// For a primitive `psi = (x, y)` with `y != 0`, produce `alpha = (1, 0)`
/// and `beta` with `alpha + beta` proportional to `psi` and
/// `div(alpha) + div(beta) < div(alpha + beta)`. Take the smallest prime
/// `p > 1 + |y|` and set `beta = (p x + (p - 1), p y)`; then
/// `div(beta) <= |y|` while `div(alpha + beta) >= p`.
pub fn div_counterexample(x: i64, y: i64) -> Result<DivCounterexample> {
    if y == 0 {
        return Err(Error::Parse("psi needs y != 0".into()));
    }
    if x.unsigned_abs().gcd(&y.unsigned_abs()) != 1 {
        return Err(Error::Parse(format!("({x}, {y}) is not primitive")));
    }
    let p = smallest_prime_above(1 + y.abs());
    let alpha = (BigInt::one(), BigInt::zero());
    let beta = (BigInt::from(p) * x + (p - 1), BigInt::from(p) * y);
    let div_alpha = vector_divisibility(&[alpha.0.clone(), alpha.1.clone()]);
    let div_beta = vector_divisibility(&[beta.0.clone(), beta.1.clone()]);
    let sum = (&alpha.0 + &beta.0, &alpha.1 + &beta.1);
    let div_sum = vector_divisibility(&[sum.0, sum.1]);
    Ok(DivCounterexample { psi: (x, y), p, alpha, beta, div_alpha, div_beta, div_sum })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        parse(text).unwrap()
    }

    fn class(p: &Presentation, vals: &[i64]) -> CohomClass {
        CohomClass::from_integers(p, vals).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn parse_basics() {
        let p = pres("gens: a b ; rels: a b a^-1 b^-1");
        assert_eq!(p.gens, vec!["a", "b"]);
        assert_eq!(p.rels.len(), 1);
        assert_eq!(p.rels[0].display(&p.gens), "a b a^-1 b^-1");

        let p = pres("gens: a x ; rels: [x,a]");
        assert_eq!(p.rels[0].display(&p.gens), "x a x^-1 a^-1");

        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        assert_eq!(p.rels[0].len(), 6);

        // free group: empty relator list
        let p = pres("gens: a ; rels:");
        assert!(p.rels.is_empty());

        // comments and newlines
        let p = pres("# trefoil\ngens: u v ;\nrels: u v u v^-1 u^-1 v^-1\n");
        assert_eq!(p.gens.len(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(parse("rels: a").is_err());
        assert!(parse("gens: a a ; rels:").is_err());
        assert!(parse("gens: a ; rels: b").is_err());
        assert!(parse("gens: a ; stuff: x").is_err());
        assert!(parse("gens: a^b ; rels:").is_err());
    }

    #[test]
    fn parse_file_with_class() {
        let (p, phi) = parse_file("gens: u v ; rels: u v u v^-1 u^-1 v^-1 ; phi: u=1, v=1").unwrap();
        let phi = phi.unwrap();
        assert_eq!(phi.values, vec![rat(1), rat(1)]);
        assert_eq!(p.gens.len(), 2);
    }

    #[test]
    fn occurrence_counts() {
        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        assert_eq!(p.occurrence_count(0), 3);
        assert_eq!(p.occurrence_count(1), 3);
        assert!(p.is_good());

        let p = pres("gens: a b ; rels: a b");
        assert_eq!(p.occurrence_count(0), 1);
        assert!(!p.is_good());
    }

    #[test]
    fn make_good_eliminates_and_pads() {
        // <a, b | a b>: eliminate a = b^-1, then pad b
        let p = pres("gens: a b ; rels: a b").make_good();
        assert_eq!(p.gens, vec!["b"]);
        assert_eq!(p.rels.len(), 1);
        assert_eq!(p.rels[0].display(&p.gens), "b b^-1");
        assert_eq!(p.occurrence_count(0), 2);
        assert!(p.is_good());
    }

    #[test]
    fn make_good_pads_free_generators() {
        let p = pres("gens: a ; rels:").make_good();
        assert_eq!(p.rels.len(), 1);
        assert_eq!(p.rels[0].len(), 2);
        assert!(p.is_good());
    }

    #[test]
    fn make_good_is_idempotent_on_good_input() {
        let good = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        assert_eq!(good.make_good(), good);
    }

    #[test]
    fn make_good_chains_elimination_and_padding() {
        // <a, b, c | a b c, b^5>: a occurs once and is eliminated with its
        // relator; that leaves c unused, so c gets the trivial pad
        let p = pres("gens: a b c ; rels: a b c , b^5").make_good();
        assert_eq!(p.gens, vec!["b", "c"]);
        assert_eq!(p.rels.len(), 2);
        assert_eq!(p.rels[0].display(&p.gens), "b^5");
        assert_eq!(p.rels[1].display(&p.gens), "c c^-1");
    }

    #[test]
    fn make_good_preserves_abelianization() {
        let cases = [
            "gens: a b ; rels: a b",
            "gens: a b c ; rels: a b c , b^5",
            "gens: a ; rels:",
            "gens: a b ; rels: a b a^-1 b^-1 , a^3",
            "gens: x y z ; rels: x y^2 z , z^2",
        ];
        for text in cases {
            let p = pres(text);
            let q = p.make_good();
            assert_eq!(p.abelianization(), q.abelianization(), "case `{text}`");
            assert!(q.is_good());
        }
    }

    #[test]
    fn class_validation() {
        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        // exponent sums are (1, -1), so u = v = 1 works
        assert!(CohomClass::from_integers(&p, &[1, 1]).is_ok());
        assert!(CohomClass::from_integers(&p, &[1, 2]).is_err());

        let p = pres("gens: a ; rels: a^3");
        assert!(CohomClass::from_integers(&p, &[1]).is_err());
        assert!(CohomClass::from_integers(&p, &[0]).is_ok());
    }

    #[test]
    fn t_p_values() {
        // braid presentation of the trefoil: both generators occur three
        // times, so the abelianizer has complexity 1/2 + 1/2 = 1
        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        let phi = class(&p, &[1, 1]);
        assert_eq!(p.t_p(&phi).unwrap(), rat(1));

        // torus: both counts are 2, so every class has complexity 0
        let p = pres("gens: a x ; rels: [x,a]");
        let phi = class(&p, &[0, 1]);
        assert_eq!(p.t_p(&phi).unwrap(), rat(0));

        // not good: a free generator has no complexity until padded
        let p = pres("gens: a ; rels:");
        let phi = class(&p, &[1]);
        assert!(p.t_p(&phi).is_err());
        let padded = p.make_good();
        let phi = class(&padded, &[1]);
        assert_eq!(padded.t_p(&phi).unwrap(), rat(0));
    }

    #[test]
    fn t_p_scales_linearly() {
        let p = pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
        for c in [-3i64, -1, 0, 2, 7] {
            let phi = class(&p, &[c, c]);
            assert_eq!(p.t_p(&phi).unwrap(), rat(c.abs()));
        }
        // a half-integral class has half-integral complexity
        let phi = CohomClass::from_values(
            &p,
            vec![BigRational::new(BigInt::one(), BigInt::from(2)); 2],
        )
        .unwrap();
        assert_eq!(p.t_p(&phi).unwrap(), BigRational::new(BigInt::one(), BigInt::from(2)));
    }

    #[test]
    fn abelianizations() {
        assert_eq!(pres("gens: a x ; rels: [x,a]").abelianization(), (2, vec![]));
        assert_eq!(
            pres("gens: u v ; rels: u v u v^-1 u^-1 v^-1").abelianization(),
            (1, vec![])
        );
        assert_eq!(pres("gens: a ; rels: a^4").abelianization(), (0, vec![BigInt::from(4)]));
        assert_eq!(pres("gens: a b ; rels:").abelianization(), (2, vec![]));
    }

    #[test]
    fn divisibility_through_abelianization() {
        let free2 = pres("gens: a b ; rels:");
        let phi = class(&free2, &[1, 0]);
        assert_eq!(free2.divisibility(&phi).unwrap(), BigInt::one());
        let phi = class(&free2, &[6, 3]);
        assert_eq!(free2.divisibility(&phi).unwrap(), BigInt::from(3));
        let phi = class(&free2, &[5, -3]);
        assert_eq!(free2.divisibility(&phi).unwrap(), BigInt::one());

        // torsion is invisible to integral classes
        let p = pres("gens: a b ; rels: a^4");
        let phi = class(&p, &[0, 6]);
        assert_eq!(p.divisibility(&phi).unwrap(), BigInt::from(6));

        let zero = class(&free2, &[0, 0]);
        assert!(free2.divisibility(&zero).is_err());
    }

    #[test]
    fn counterexample_values() {
        // psi = (0, 1): p = 3, beta = (2, 3)
        let c = div_counterexample(0, 1).unwrap();
        assert_eq!(c.p, 3);
        assert_eq!(c.beta, (BigInt::from(2), BigInt::from(3)));
        assert_eq!(c.div_alpha, BigInt::one());
        assert_eq!(c.div_beta, BigInt::one());
        assert_eq!(c.div_sum, BigInt::from(3));

        // psi = (1, -1): beta = (5, -3), alpha + beta = (6, -3)
        let c = div_counterexample(1, -1).unwrap();
        assert_eq!(c.beta, (BigInt::from(5), BigInt::from(-3)));
        assert_eq!(c.div_sum, BigInt::from(3));
        assert!(c.div_alpha.clone() + c.div_beta.clone() < c.div_sum);

        assert!(div_counterexample(1, 0).is_err());
        assert!(div_counterexample(2, 4).is_err());
    }

    #[test]
    fn primitive_scaling() {
        let p = pres("gens: a b ; rels:");
        let phi = CohomClass::from_values(
            &p,
            vec![BigRational::new(BigInt::from(3), BigInt::from(2)), rat(3)],
        )
        .unwrap();
        let (prim, c) = phi.primitive_integral().unwrap();
        assert_eq!(prim, vec![BigInt::one(), BigInt::from(2)]);
        assert_eq!(c, BigRational::new(BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn display_round_trip() {
        let texts = [
            "gens: a b ; rels: a b a^-1 b^-1",
            "gens: u v ; rels: u v u v^-1 u^-1 v^-1 , u^3",
        ];
        for t in texts {
            let p = pres(t);
            assert_eq!(pres(&p.display()), p);
        }
    }
}
