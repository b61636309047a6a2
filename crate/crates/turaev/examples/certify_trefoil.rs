//! Squeezing the minimal complexity of a group between Alexander-type
//! lower bounds and presentation complexities.

use turaev::fixtures;
use turaev::norm::certify_tbar;
use turaev::pd;
use turaev::presentation::format_rational;

fn main() {
    // the Wirtinger presentation alone leaves a gap: its t_P is the
    // crossing number 3, the degree bound gives 1
    let d = pd::analyze(&pd::parse_pd(fixtures::TREFOIL_PD).unwrap()).unwrap();
    let wirtinger = (d.presentation.clone(), d.total_meridian_class());
    let s = certify_tbar(std::slice::from_ref(&wirtinger)).unwrap();
    println!(
        "wirtinger only   [{}, {}]  certified: {}",
        format_rational(&s.lower),
        format_rational(&s.upper),
        s.certified
    );

    // adding the 2-generator presentation closes the sandwich at 1
    let s = certify_tbar(&[wirtinger, fixtures::trefoil_2gen()]).unwrap();
    println!(
        "with 2-gen form  [{}, {}]  certified: {}",
        format_rational(&s.lower),
        format_rational(&s.upper),
        s.certified
    );
    for (i, (b, u)) in s.bounds.iter().zip(&s.uppers).enumerate() {
        println!(
            "  presentation {i}: degree bound {:?}, t_P {}",
            b.deg_bound.as_ref().map(format_rational),
            format_rational(u)
        );
    }

    // the certified value is what every presentation of the group must
    // pay: no complex presenting this group does better
    assert!(s.certified);
    assert_eq!(format_rational(&s.lower), "1");
}
