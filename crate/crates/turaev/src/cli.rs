//! Command-line front end. Every subcommand reads plain-text inputs,
//! prints a small report, and with `--json` emits the same data as a
//! machine-readable object instead.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::alexander;
use crate::anorm::{self, NewtonSupport};
use crate::complex::TwoComplex;
use crate::covers::{self, CoverSpec};
use crate::fixtures;
use crate::norm::{self, Method};
use crate::pd;
use crate::presentation::{
    self, format_rational, parse_class_pairs, CohomClass, Presentation,
};
use crate::report;
use crate::suite;
use crate::twisted;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "turaev",
    version,
    about = "Exact Turaev norms, Alexander invariants and certified complexity bounds"
)]
pub struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Optimizer backend: auto, lp, or brute.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_method)]
    pub method: Method,

    #[command(subcommand)]
    pub cmd: Cmd,
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse::<Method>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Turaev norm of a class on a 2-complex or presentation complex.
    Norm {
        /// Complex file (`vertices:`/`edge`/`face` lines) or presentation
        /// file (`gens: ... ; rels: ...`).
        file: PathBuf,
        /// Class values, e.g. "x=1,a=0" (rationals as p/q). Keys are edge
        /// labels for a complex, generator names for a presentation.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Certified two-sided bounds for the complexity of a class, from one
    /// or more presentations of the same group.
    Certify {
        /// Comma-separated presentation files; each may carry its own
        /// `phi:` section naming the class in its generators.
        files: String,
        /// Class values for files without an embedded `phi:` section.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Alexander polynomial of a presentation.
    Alex {
        file: PathBuf,
        /// Specialize along a class: one variable t.
        #[arg(long, conflicts_with = "multivariable")]
        phi: Option<String>,
        /// Full polynomial over the free part of homology.
        #[arg(long)]
        multivariable: bool,
    },
    /// Alexander norm of a class, with the Newton support behind it.
    Anorm {
        file: PathBuf,
        #[arg(long)]
        phi: Option<String>,
        /// Also list the Newton polytope vertices.
        #[arg(long)]
        polytope: bool,
    },
    /// Finite cyclic cover of a presentation complex.
    Cover {
        file: PathBuf,
        #[arg(long)]
        phi: Option<String>,
        /// Degree of the cyclic cover.
        #[arg(long)]
        order: usize,
        /// Compare the cover norm against degree times the base norm.
        #[arg(long)]
        check_inequality: bool,
    },
    /// Homology of the infinite cyclic cover with Q[t,t^-1] coefficients.
    Homology {
        file: PathBuf,
        #[arg(long)]
        phi: Option<String>,
    },
    /// Wirtinger presentation from a planar diagram code; the output is a
    /// presentation file every other command accepts.
    Knot {
        /// Diagram code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
        #[arg(long, conflicts_with = "fixture")]
        pd: Option<String>,
        /// Built-in diagram: trefoil, fig8, or whitehead.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Witnesses that divisibility is not subadditive on classes.
    Divtest {
        /// A primitive pair "x,y" with y nonzero; omit for random pairs.
        #[arg(long)]
        psi: Option<String>,
        #[arg(long, default_value_t = 25)]
        count: usize,
        #[arg(long, default_value_t = 11)]
        seed: u64,
    },
    /// Run the built-in reproduction suite and print a pass/fail table.
    PaperSuite,
}

pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            if out.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

enum Input {
    Complex(TwoComplex),
    Presentation(Presentation, Option<CohomClass>),
}

fn load_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path)?;
    let is_complex = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .any(|l| l.starts_with("vertices:"));
    if is_complex {
        Ok(Input::Complex(TwoComplex::parse(&text)?))
    } else {
        let (p, phi) = presentation::parse_file(&text)?;
        Ok(Input::Presentation(p, phi))
    }
}

fn load_presentation(path: &Path) -> Result<(Presentation, Option<CohomClass>)> {
    match load_input(path)? {
        Input::Presentation(p, phi) => Ok((p, phi)),
        Input::Complex(_) => Err(Error::Parse(format!(
            "{} is a complex file; this command needs a presentation",
            path.display()
        ))),
    }
}

/// The class for a presentation command: `--phi` wins, then the file's
/// own `phi:` section.
fn resolve_class(
    p: &Presentation,
    embedded: Option<CohomClass>,
    flag: &Option<String>,
) -> Result<CohomClass> {
    match (flag, embedded) {
        (Some(body), _) => CohomClass::from_pairs(p, &parse_class_pairs(body)?),
        (None, Some(phi)) => Ok(phi),
        (None, None) => Err(Error::Parse(
            "no class given: pass --phi or add a `phi:` section to the file".into(),
        )),
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Norm { file, phi } => cmd_norm(cli, file, phi),
        Cmd::Certify { files, phi } => cmd_certify(cli, files, phi),
        Cmd::Alex { file, phi, multivariable } => cmd_alex(cli, file, phi, *multivariable),
        Cmd::Anorm { file, phi, polytope } => cmd_anorm(cli, file, phi, *polytope),
        Cmd::Cover { file, phi, order, check_inequality } => {
            cmd_cover(cli, file, phi, *order, *check_inequality)
        }
        Cmd::Homology { file, phi } => cmd_homology(cli, file, phi),
        Cmd::Knot { pd, fixture } => cmd_knot(cli, pd, fixture),
        Cmd::Divtest { psi, count, seed } => cmd_divtest(cli, psi, *count, *seed),
        Cmd::PaperSuite => cmd_suite(cli),
    }
}

fn cmd_norm(cli: &Cli, file: &Path, phi: &Option<String>) -> Result<Output> {
    let (x, result) = match load_input(file)? {
        Input::Complex(x) => {
            let body = phi.as_ref().ok_or_else(|| {
                Error::Parse("complex input needs --phi with edge-label values".into())
            })?;
            let k0 = x.cochain_from_pairs(&parse_class_pairs(body)?)?;
            let r = norm::turaev_norm(&x, &k0, cli.method)?;
            (x, r)
        }
        Input::Presentation(p, embedded) => {
            let class = resolve_class(&p, embedded, phi)?;
            let x = TwoComplex::from_presentation(&p);
            let r = norm::turaev_norm_of_class(&x, &class, cli.method)?;
            (x, r)
        }
    };
    if cli.json {
        return Ok(Output::ok(report::to_json_string(&report::norm_json(&x, &result))));
    }
    let cochain: Vec<String> = x
        .edges
        .iter()
        .zip(&result.optimal_cochain)
        .map(|(e, v)| format!("{}={}", e.label, format_rational(v)))
        .collect();
    let rows = vec![
        ("value", format_rational(&result.value)),
        ("certificate", report::certificate_name(&result.certificate).to_string()),
        ("optimal cochain", cochain.join(", ")),
    ];
    Ok(Output::ok(report::render_table(&rows)))
}

fn cmd_certify(cli: &Cli, files: &str, phi: &Option<String>) -> Result<Output> {
    let mut entries = Vec::new();
    for name in files.split(',').filter(|s| !s.trim().is_empty()) {
        let (p, embedded) = load_presentation(Path::new(name.trim()))?;
        let class = resolve_class(&p, embedded, phi)?;
        entries.push((p, class));
    }
    let s = norm::certify_tbar(&entries)?;
    if cli.json {
        return Ok(Output::ok(report::to_json_string(&report::sandwich_json(&s))));
    }
    let mut rows = vec![(
        "interval",
        format!("[{}, {}]", format_rational(&s.lower), format_rational(&s.upper)),
    )];
    if s.certified {
        rows.push(("value", format_rational(&s.lower)));
    }
    rows.push(("certified", s.certified.to_string()));
    for (i, (b, u)) in s.bounds.iter().zip(&s.uppers).enumerate() {
        let lower = match (&b.a_bound, &b.deg_bound) {
            (None, None) => "none".to_string(),
            _ => {
                let mut parts = Vec::new();
                if let Some(a) = &b.a_bound {
                    let tag = if b.a_degenerate { " (degenerate)" } else { "" };
                    parts.push(format!("a-norm {}{tag}", format_rational(a)));
                }
                if let Some(d) = &b.deg_bound {
                    parts.push(format!("degree {}", format_rational(d)));
                }
                parts.join(", ")
            }
        };
        rows.push(("presentation", format!("#{i}: lower {lower}; t_P {}", format_rational(u))));
    }
    Ok(Output::ok(report::render_table(
        &rows.iter().map(|(k, v)| (*k, v.clone())).collect::<Vec<_>>(),
    )))
}

fn cmd_alex(
    cli: &Cli,
    file: &Path,
    phi: &Option<String>,
    multivariable: bool,
) -> Result<Output> {
    let (p, embedded) = load_presentation(file)?;
    let (delta, names) = if multivariable || (phi.is_none() && embedded.is_none()) {
        let (delta, psi) = alexander::alexander_polynomial_canonical(&p)?;
        (delta, report::var_names(psi.rank))
    } else {
        let class = resolve_class(&p, embedded, phi)?;
        (alexander::alexander_polynomial_class(&p, &class)?, report::var_names(1))
    };
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let text = delta.display(&name_refs);
    if cli.json {
        return Ok(Output::ok(report::to_json_string(&json!({
            "polynomial": text,
            "variables": names,
            "convention": "gcd of the (n-1)-minors of the Fox matrix",
        }))));
    }
    Ok(Output::ok(text))
}

fn cmd_anorm(cli: &Cli, file: &Path, phi: &Option<String>, polytope: bool) -> Result<Output> {
    let (p, embedded) = load_presentation(file)?;
    let class = resolve_class(&p, embedded.clone(), phi)?;
    let (delta, psi) = alexander::alexander_polynomial_canonical(&p)?;
    let phi_free = anorm::class_on_free_part(&psi, &class)?;
    let value = anorm::alexander_norm(&delta, &phi_free);
    let support = NewtonSupport::of(&delta);
    let bounds = anorm::lower_bounds(&p, &class)?;
    let names = report::var_names(psi.rank);
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();

    if cli.json {
        let vertices = polytope.then(|| anorm::polytope_vertices(&support));
        return Ok(Output::ok(report::to_json_string(&json!({
            "value": report::rat(&value),
            "degenerate": delta.is_zero(),
            "polynomial": delta.display(&name_refs),
            "support": support.points,
            "polytope": vertices,
            "bounds": report::bounds_json(&bounds),
        }))));
    }
    let mut rows = vec![
        ("value", format_rational(&value)),
        ("polynomial", delta.display(&name_refs)),
        (
            "support",
            support
                .points
                .iter()
                .map(|pt| format!("({})", pt.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                .collect::<Vec<_>>()
                .join(" "),
        ),
    ];
    if delta.is_zero() {
        rows.push(("degenerate", "true (the polynomial vanishes)".into()));
    }
    if polytope {
        rows.push((
            "polytope",
            anorm::polytope_vertices(&support)
                .iter()
                .map(|pt| format!("({})", pt.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                .collect::<Vec<_>>()
                .join(" "),
        ));
    }
    Ok(Output::ok(report::render_table(&rows)))
}

fn cmd_cover(
    cli: &Cli,
    file: &Path,
    phi: &Option<String>,
    order: usize,
    check_inequality: bool,
) -> Result<Output> {
    let (p, embedded) = load_presentation(file)?;
    let class = resolve_class(&p, embedded, phi)?;
    let spec = CoverSpec::cyclic(&p, &class, order)?;
    let base = TwoComplex::from_presentation(&p);
    let cover = covers::cover_complex(&base, &spec)?;
    let (betti, torsion) = cover.h1_structure();
    let comparison = check_inequality
        .then(|| covers::verify_cover_inequality(&p, &class, &spec, cli.method))
        .transpose()?;

    if cli.json {
        let mut v = json!({
            "degree": order,
            "vertices": cover.vertices,
            "edges": cover.edges.len(),
            "faces": cover.faces.len(),
            "euler_characteristic": cover.euler_characteristic(),
            "h1_free_rank": betti,
            "h1_torsion": torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "complex": cover.serialize(),
        });
        if let Some(c) = &comparison {
            v["inequality"] = report::cover_json(c);
        }
        return Ok(Output::ok(report::to_json_string(&v)));
    }
    let torsion_text = if torsion.is_empty() {
        String::new()
    } else {
        format!(
            " + torsion {}",
            torsion.iter().map(|t| format!("Z/{t}")).collect::<Vec<_>>().join(" + ")
        )
    };
    let mut rows = vec![
        ("degree", order.to_string()),
        (
            "cover",
            format!(
                "{} vertices, {} edges, {} faces, chi = {}",
                cover.vertices,
                cover.edges.len(),
                cover.faces.len(),
                cover.euler_characteristic()
            ),
        ),
        ("H1", format!("Z^{betti}{torsion_text}")),
    ];
    if let Some(c) = &comparison {
        rows.push((
            "inequality",
            format!(
                "cover norm {} <= {} x base norm {}: {}",
                format_rational(&c.cover_value),
                c.degree,
                format_rational(&c.base_value),
                if c.holds { "holds" } else { "VIOLATED" }
            ),
        ));
    }
    let failed = comparison.as_ref().is_some_and(|c| !c.holds);
    Ok(Output { text: report::render_table(&rows), failed })
}

fn cmd_homology(cli: &Cli, file: &Path, phi: &Option<String>) -> Result<Output> {
    let (p, embedded) = load_presentation(file)?;
    let class = resolve_class(&p, embedded, phi)?;
    let h = twisted::h1_qt(&p, &class)?;
    if cli.json {
        return Ok(Output::ok(report::to_json_string(&report::homology_json(&h))));
    }
    Ok(Output::ok(report::homology_text(&h)))
}

fn cmd_knot(cli: &Cli, pd_code: &Option<String>, fixture: &Option<String>) -> Result<Output> {
    let code = match (pd_code, fixture) {
        (Some(c), None) => c.clone(),
        (None, Some(name)) => fixtures::pd_fixture(name)
            .ok_or_else(|| {
                Error::Parse(format!("unknown fixture `{name}`; try trefoil, fig8, whitehead"))
            })?
            .to_string(),
        _ => return Err(Error::Parse("pass exactly one of --pd or --fixture".into())),
    };
    let d = pd::analyze(&pd::parse_pd(&code)?)?;
    let p = &d.presentation;
    let phi = d.total_meridian_class();

    if cli.json {
        return Ok(Output::ok(report::to_json_string(&json!({
            "crossings": d.pd.crossings.len(),
            "components": d.components,
            "arcs": d.arcs,
            "signs": d.signs,
            "gens": p.gens,
            "rels": p.rels.iter().map(|r| r.display(&p.gens)).collect::<Vec<_>>(),
            "phi": phi.display(p),
            "presentation_file": format!("{} ; phi: {}", p.display(), phi.display(p)),
        }))));
    }
    let mut out = String::new();
    out.push_str(&format!("# {} crossings, {} component(s)\n", d.pd.crossings.len(), d.components.len()));
    out.push_str(&format!(
        "# signs: {}\n",
        d.signs.iter().map(|s| if *s > 0 { "+" } else { "-" }).collect::<Vec<_>>().join("")
    ));
    for (arc, comp) in d.arcs.iter().zip(&d.arc_component) {
        out.push_str(&format!(
            "# arc x{}: edges {:?} on component {}\n",
            arc[0], arc, comp
        ));
    }
    out.push_str(&format!("{} ; phi: {}\n", p.display(), phi.display(p)));
    Ok(Output::ok(out))
}

fn cmd_divtest(cli: &Cli, psi: &Option<String>, count: usize, seed: u64) -> Result<Output> {
    let pairs: Vec<(i64, i64)> = match psi {
        Some(body) => {
            let parts: Vec<&str> = body.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(Error::Parse(format!("expected `x,y`, got `{body}`")));
            }
            let parse = |s: &str| {
                s.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
            };
            vec![(parse(parts[0])?, parse(parts[1])?)]
        }
        None => {
            // always include the smallest interesting pair, then sample
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = vec![(1i64, 1i64)];
            while out.len() < count.max(1) {
                let x = rng.gen_range(-30i64..=30);
                let y = rng.gen_range(-30i64..=30);
                if y != 0 && num_integer::gcd(x, y) == 1 {
                    out.push((x, y));
                }
            }
            out
        }
    };

    let mut cases = Vec::new();
    let mut all_strict = true;
    for (x, y) in pairs {
        let c = presentation::div_counterexample(x, y)?;
        all_strict &= &c.div_alpha + &c.div_beta < c.div_sum;
        cases.push(c);
    }

    if cli.json {
        let list: Vec<Value> = cases
            .iter()
            .map(|c| {
                json!({
                    "psi": [c.psi.0, c.psi.1],
                    "p": c.p,
                    "alpha": [report::int(&c.alpha.0), report::int(&c.alpha.1)],
                    "beta": [report::int(&c.beta.0), report::int(&c.beta.1)],
                    "div_alpha": report::int(&c.div_alpha),
                    "div_beta": report::int(&c.div_beta),
                    "div_sum": report::int(&c.div_sum),
                })
            })
            .collect();
        return Ok(Output {
            text: report::to_json_string(&json!({ "strict": all_strict, "cases": list })),
            failed: !all_strict,
        });
    }
    let mut lines = Vec::new();
    for c in &cases {
        lines.push(format!(
            "psi=({}, {})  p={}  alpha=({}, {})  beta=({}, {})  div {} + {} < {}",
            c.psi.0, c.psi.1, c.p, c.alpha.0, c.alpha.1, c.beta.0, c.beta.1, c.div_alpha,
            c.div_beta, c.div_sum
        ));
    }
    lines.push(format!(
        "divisibility is {}subadditive on all {} case(s)",
        if all_strict { "not " } else { "?? " },
        cases.len()
    ));
    Ok(Output { text: lines.join("\n"), failed: !all_strict })
}

fn cmd_suite(cli: &Cli) -> Result<Output> {
    let results = suite::run_all();
    let failed = results.iter().any(|r| !r.pass);
    if cli.json {
        let list: Vec<Value> = results
            .iter()
            .map(|r| json!({ "id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail }))
            .collect();
        return Ok(Output { text: report::to_json_string(&Value::Array(list)), failed });
    }
    let mut lines = Vec::new();
    for r in &results {
        lines.push(format!(
            "{:>2}. {} {:<44} {}",
            r.id,
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        ));
    }
    lines.push(if failed { "some criteria FAILED".into() } else { "all criteria pass".into() });
    Ok(Output { text: lines.join("\n"), failed })
}
