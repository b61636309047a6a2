//! Fox derivatives and Alexander polynomials: single-variable along a
//! class, multivariable over the free part of homology.

use turaev::alexander::{
    alexander_polynomial, alexander_polynomial_canonical, alexander_polynomial_class,
    fox_derivative, GroupRingElem,
};
use turaev::fixtures;
use turaev::pd;
use turaev::presentation::parse;

fn ring_text(e: &GroupRingElem, names: &[String]) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.terms
        .iter()
        .map(|(w, c)| format!("({c}) {}", w.display(names)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() {
    // the derivative of a product: d(uv) = du + u dv; inverses
    // contribute -w^-1 d w
    let p = parse("gens: u v ; rels: u v u v^-1 u^-1 v^-1").unwrap();
    let r = &p.rels[0];
    for (i, name) in p.gens.iter().enumerate() {
        println!("d r / d {name} = {}", ring_text(&fox_derivative(r, i), &p.gens));
    }

    let (tref, phi) = fixtures::trefoil_2gen();
    let delta = alexander_polynomial_class(&tref, &phi).unwrap();
    println!("\ntrefoil   {}", delta.display(&["t"]));

    let d = pd::analyze(&pd::parse_pd(fixtures::FIG8_PD).unwrap()).unwrap();
    let delta =
        alexander_polynomial_class(&d.presentation, &d.total_meridian_class()).unwrap();
    println!("fig8      {}", delta.display(&["t"]));

    // two meridian variables for the two components of the Whitehead link
    let d = pd::analyze(&pd::parse_pd(fixtures::WHITEHEAD_PD).unwrap()).unwrap();
    let delta = alexander_polynomial(&d.presentation, &d.meridian_ab_map()).unwrap();
    println!("whitehead {}", delta.display(&["s", "u"]));

    // free abelian groups have unit polynomial
    let (z2, _) = fixtures::wedge_tori(1);
    let (delta, psi) = alexander_polynomial_canonical(&z2).unwrap();
    println!("Z^2       {} ({} variables)", delta.display(&["s", "u"]), psi.rank);
}
