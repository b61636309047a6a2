//! The Alexander norm: the width of the Newton polytope of the
//! Alexander polynomial in the direction of a class, and the lower
//! bounds it yields for the Turaev complexity.

use turaev::alexander::alexander_polynomial_canonical;
use turaev::anorm::{alexander_norm, class_on_free_part, lower_bounds, polytope_vertices, NewtonSupport};
use turaev::fixtures;
use turaev::pd;
use turaev::presentation::parse_rational;

fn main() {
    // the Whitehead link has Betti number 2, so the norm varies with
    // the direction of the class
    let d = pd::analyze(&pd::parse_pd(fixtures::WHITEHEAD_PD).unwrap()).unwrap();
    let p = &d.presentation;
    let (delta, psi) = alexander_polynomial_canonical(p).unwrap();
    println!("polynomial   {}", delta.display(&["s", "u"]));
    let support = NewtonSupport::of(&delta);
    println!("support      {:?}", support.points);
    println!("vertices     {:?}", polytope_vertices(&support));

    for (a, b) in [(1i64, 0i64), (0, 1), (1, 1), (1, -1), (2, 3)] {
        let phi = vec![
            parse_rational(&a.to_string()).unwrap(),
            parse_rational(&b.to_string()).unwrap(),
        ];
        println!("  a({a}, {b}) = {}", alexander_norm(&delta, &phi));
    }

    // the per-component meridian classes, pulled back to the free part
    for c in 0..2 {
        let phi = d.meridian_class(c);
        let free = class_on_free_part(&psi, &phi).unwrap();
        println!(
            "meridian {c}   free coordinates {:?}, norm {}",
            free.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            alexander_norm(&delta, &free)
        );
    }

    // the wired-up bounds check their own hypotheses
    let b = lower_bounds(p, &d.total_meridian_class()).unwrap();
    println!(
        "\nbounds       betti {}, a-bound {:?}, degree bound {:?}",
        b.betti,
        b.a_bound.as_ref().map(|v| v.to_string()),
        b.deg_bound.as_ref().map(|v| v.to_string())
    );
}
