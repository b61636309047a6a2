//! Built-in diagrams and presentations shared by the command-line
//! tools, the examples, and the reproduction suite.

use crate::presentation::{parse_file, CohomClass, Presentation};

/// Left-handed trefoil, standard 3-crossing table code.
pub const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

/// Figure-eight knot, 4 crossings.
pub const FIG8_PD: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

/// Whitehead link, 5 crossings, two components.
pub const WHITEHEAD_PD: &str = "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)";

/// Two-generator trefoil presentation `<u, v | uvu = vuv>` with the
/// meridian class `u = v = 1`.
pub const TREFOIL_2GEN: &str = "gens: u v ; rels: u v u v^-1 u^-1 v^-1 ; phi: u=1, v=1";

/// One torus as a 2-complex: one vertex, two loops, one square face.
pub const TORUS_COMPLEX: &str = "vertices: 1\nedge 0: 0 0 x\nedge 1: 0 0 a\nface: +0 +1 -0 -1\n";

/// Look up a named diagram for `--fixture`.
pub fn pd_fixture(name: &str) -> Option<&'static str> {
    match name {
        "trefoil" => Some(TREFOIL_PD),
        "fig8" | "figure8" | "figure-eight" => Some(FIG8_PD),
        "whitehead" => Some(WHITEHEAD_PD),
        _ => None,
    }
}

pub fn trefoil_2gen() -> (Presentation, CohomClass) {
    let (p, phi) = parse_file(TREFOIL_2GEN).expect("fixture parses");
    (p, phi.expect("fixture carries a class"))
}

/// Wedge of `n` tori: generators `a1 x1 .. an xn`, relators `[xi, ai]`,
/// and the class dual to the `x` directions.
pub fn wedge_tori_text(n: usize) -> String {
    assert!(n >= 1, "need at least one torus");
    let gens: Vec<String> = (1..=n).flat_map(|i| [format!("a{i}"), format!("x{i}")]).collect();
    let rels: Vec<String> = (1..=n).map(|i| format!("[x{i},a{i}]")).collect();
    let phi: Vec<String> =
        (1..=n).flat_map(|i| [format!("a{i}=0"), format!("x{i}=1")]).collect();
    format!("gens: {} ; rels: {} ; phi: {}", gens.join(" "), rels.join(" , "), phi.join(", "))
}

pub fn wedge_tori(n: usize) -> (Presentation, CohomClass) {
    let (p, phi) = parse_file(&wedge_tori_text(n)).expect("fixture parses");
    (p, phi.expect("fixture carries a class"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::TwoComplex;
    use crate::pd;
    use num_traits::{One, Zero};

    #[test]
    fn fixtures_parse() {
        for name in ["trefoil", "fig8", "whitehead"] {
            let code = pd_fixture(name).unwrap();
            pd::analyze(&pd::parse_pd(code).unwrap()).unwrap();
        }
        assert!(pd_fixture("unknot").is_none());

        let (p, phi) = trefoil_2gen();
        assert_eq!(p.gens, vec!["u", "v"]);
        assert_eq!(p.abelianization(), (1, vec![]));
        assert!(phi.values.iter().all(|v| v.is_one()));

        let x = TwoComplex::parse(TORUS_COMPLEX).unwrap();
        assert_eq!(x.euler_characteristic(), 0);
        assert_eq!(x.serialize(), TORUS_COMPLEX);
    }

    #[test]
    fn wedge_fixture_shape() {
        for n in 1..=4 {
            let (p, phi) = wedge_tori(n);
            assert_eq!(p.gens.len(), 2 * n);
            assert_eq!(p.rels.len(), n);
            assert_eq!(p.abelianization(), (2 * n, vec![]));
            for (i, v) in phi.values.iter().enumerate() {
                // a-generators sit at even positions, x-generators odd
                assert_eq!(v.is_zero(), i % 2 == 0);
            }
        }
    }
}
