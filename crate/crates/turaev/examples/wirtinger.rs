//! From a planar diagram code to a group presentation: arcs become
//! generators, crossings become conjugation relators, and the
//! complexity of the meridian class counts the crossings.

use turaev::fixtures;
use turaev::pd::{analyze, parse_pd};

fn main() {
    for (name, code) in [
        ("trefoil", fixtures::TREFOIL_PD),
        ("fig8", fixtures::FIG8_PD),
        ("whitehead", fixtures::WHITEHEAD_PD),
    ] {
        let d = analyze(&parse_pd(code).unwrap()).unwrap();
        let p = &d.presentation;
        println!("{name}: {code}");
        println!("  components {:?}", d.components);
        println!("  arcs       {:?}", d.arcs);
        println!(
            "  signs      {}",
            d.signs.iter().map(|s| if *s > 0 { '+' } else { '-' }).collect::<String>()
        );
        println!("  group      {}", p.display());
        let phi = d.total_meridian_class();
        println!("  t_P        {}", p.t_p(&phi).unwrap());
        println!();
    }

    // one crossing on an unknot: a single arc conjugated by itself
    let d = analyze(&parse_pd("X(1,1,2,2)").unwrap()).unwrap();
    println!("kink: {}", d.presentation.display());
}
