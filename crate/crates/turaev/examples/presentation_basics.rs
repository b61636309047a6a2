//! Parsing presentations, making them good, and reading off the
//! complexity t_P of a cohomology class.

use turaev::presentation::{parse, CohomClass};

fn main() {
    // a presentation is good when every generator appears at least
    // twice among the relators; each occurrence beyond the second costs
    // half a unit, weighted by the class
    let p = parse("gens: u v ; rels: u v u v^-1 u^-1 v^-1").unwrap();
    let phi = CohomClass::from_integers(&p, &[1, 1]).unwrap();
    println!("presentation  {}", p.display());
    let (rank, torsion) = p.abelianization();
    println!("homology      rank {rank}, torsion {torsion:?}");
    println!("t_P           {}", p.t_p(&phi).unwrap());

    // a generator occurring once is eliminated by a Tietze move (here
    // b = 1), and any generator left unused is padded with x x^-1
    let q = parse("gens: a b ; rels: a b a^-1").unwrap();
    let good = q.make_good();
    println!("\nbefore        {}", q.display());
    println!("after         {}", good.display());
    let psi = CohomClass::from_integers(&good, &[1]).unwrap();
    println!("t_P           {}", good.t_p(&psi).unwrap());

    // classes must vanish on relators: phi(a) + phi(b) = 0 here
    let r = parse("gens: a b ; rels: a b a b").unwrap();
    assert!(CohomClass::from_integers(&r, &[1, 1]).is_err());
    let ok = CohomClass::from_integers(&r, &[1, -1]).unwrap();
    println!("\nclass on {}:  {}", r.display(), ok.display(&r));
}
