//! Finite cyclic covers of presentation complexes, and the inequality
//! bounding the cover norm by the degree times the base norm.

use turaev::complex::TwoComplex;
use turaev::covers::{cover_complex, verify_cover_inequality, CoverSpec};
use turaev::fixtures;
use turaev::norm::Method;

fn main() {
    let (p, phi) = fixtures::trefoil_2gen();
    let base = TwoComplex::from_presentation(&p);
    println!(
        "base   chi = {}, H1 = {:?}",
        base.euler_characteristic(),
        base.h1_structure()
    );

    for n in 2..=5 {
        let spec = CoverSpec::cyclic(&p, &phi, n).unwrap();
        let cover = cover_complex(&base, &spec).unwrap();
        let (betti, torsion) = cover.h1_structure();
        let c = verify_cover_inequality(&p, &phi, &spec, Method::Auto).unwrap();
        println!(
            "n = {n}  chi = {:>2}, H1 = Z^{betti} + {:?}, norm {} <= {} = {n} x {}  {}",
            cover.euler_characteristic(),
            torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            c.cover_value,
            c.base_value.clone() * num_rational::BigRational::from_integer(n.into()),
            c.base_value,
            if c.holds { "ok" } else { "VIOLATED" }
        );
    }

    // a cover is any permutation action where the relators act trivially;
    // the cyclic one sends each generator to rotation by its class value
    let spec = CoverSpec::cyclic(&p, &phi, 3).unwrap();
    println!("\ndegree-3 permutations: {:?}", spec.perms);
}
