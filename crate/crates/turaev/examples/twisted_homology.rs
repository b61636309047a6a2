//! Homology of the infinite cyclic cover: modules over Q[t, t^-1]
//! decomposed by Smith normal form over the Laurent PID.

use turaev::fixtures;
use turaev::report::homology_text;
use turaev::twisted::h1_qt;

fn main() {
    // knot exteriors: H1 of the infinite cyclic cover is torsion, cut
    // out by the Alexander polynomial
    let (p, phi) = fixtures::trefoil_2gen();
    let h = h1_qt(&p, &phi).unwrap();
    println!("trefoil      {}", homology_text(&h));

    // wedges of tori: free rank n-1 plus n copies of Q[t±]/(t-1)
    for n in 1..=4 {
        let (p, phi) = fixtures::wedge_tori(n);
        let h = h1_qt(&p, &phi).unwrap();
        println!(
            "wedge n={n}    {}  (min generators {})",
            homology_text(&h),
            h.min_generators
        );
    }

    // a free group: no relators, free module of rank m-1
    let p = turaev::presentation::parse("gens: a b c ; rels:").unwrap();
    let phi = turaev::presentation::CohomClass::from_integers(&p, &[1, 0, 2]).unwrap();
    let h = h1_qt(&p, &phi).unwrap();
    println!("free rank 3  {}", homology_text(&h));
}
