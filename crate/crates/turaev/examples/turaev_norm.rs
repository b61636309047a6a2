//! The Turaev norm of a class on a 2-complex: minimize the weighted
//! l1-size of a cocycle over its cohomology class, exactly.

use turaev::complex::{Edge, TwoComplex};
use turaev::fixtures;
use turaev::norm::{turaev_norm, turaev_norm_of_class, weight, weights, Method};
use turaev::presentation::{parse, parse_rational, CohomClass};

fn main() {
    // on the torus every edge lies on the face boundary twice, so all
    // weights vanish and so does the norm
    let torus = TwoComplex::parse(fixtures::TORUS_COMPLEX).unwrap();
    let k0 = torus
        .cochain_from_pairs(&[("x".into(), parse_rational("1").unwrap())])
        .unwrap();
    let r = turaev_norm(&torus, &k0, Method::Auto).unwrap();
    println!(
        "torus weights  {:?}",
        weights(&torus).iter().map(|w| w.to_string()).collect::<Vec<_>>()
    );
    println!("torus norm     {}", r.value);

    // the trefoil complex has all multiplicities 4: each unit of the
    // class on an edge costs one
    let p = parse("gens: u v ; rels: u v u v^-1 u^-1 v^-1").unwrap();
    let x = TwoComplex::from_presentation(&p);
    let phi = CohomClass::from_integers(&p, &[1, 1]).unwrap();
    let lp = turaev_norm_of_class(&x, &phi, Method::Lp).unwrap();
    let brute = turaev_norm_of_class(&x, &phi, Method::Brute).unwrap();
    println!("\ntrefoil norm   {} (lp) = {} (brute)", lp.value, brute.value);

    // the minimum runs over all representatives k0 - delta(f); the
    // optimizer finds vertex potentials that cancel a poorly chosen k0
    let e = |from, to, label: &str| Edge { from, to, label: label.into(), gen: None };
    let theta = TwoComplex::new(
        2,
        vec![e(0, 1, "p"), e(0, 1, "q"), e(0, 1, "r")],
        vec![
            vec![(0, 1), (1, -1)],
            vec![(1, 1), (2, -1)],
            vec![(2, 1), (0, -1)],
            vec![(0, 1), (1, -1)],
            vec![(1, 1), (2, -1)],
            vec![(2, 1), (0, -1)],
            vec![(0, 1), (1, -1)],
            vec![(1, 1), (2, -1)],
            vec![(2, 1), (0, -1)],
        ],
    )
    .unwrap();
    let k = vec![
        parse_rational("4").unwrap(),
        parse_rational("4").unwrap(),
        parse_rational("4").unwrap(),
    ];
    let r = turaev_norm(&theta, &k, Method::Auto).unwrap();
    println!("\nstarting weight  {}", weight(&theta, &k));
    println!("optimal value    {}", r.value);
    let cochain: Vec<String> = theta
        .edges
        .iter()
        .zip(&r.optimal_cochain)
        .map(|(edge, v)| format!("{}={v}", edge.label))
        .collect();
    println!("optimal cochain  {}", cochain.join(", "));
}
