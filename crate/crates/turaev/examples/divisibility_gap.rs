//! Divisibility of integral classes is not subadditive: explicit
//! witnesses with div(alpha) + div(beta) < div(alpha + beta).

use turaev::presentation::{div_counterexample, vector_divisibility};

fn main() {
    // the construction: for primitive (x, y) with y != 0, take the
    // smallest prime p > 1 + |y| and set alpha = (1, 0),
    // beta = (p x + p - 1, p y); the sum is p (x + 1, y)
    for (x, y) in [(1i64, 1i64), (0, 1), (1, -1), (3, 2), (-5, 7)] {
        let c = div_counterexample(x, y).unwrap();
        println!(
            "psi=({x:>2},{y:>2})  p={}  alpha=({}, {})  beta=({:>3}, {:>3})  {} + {} < {}",
            c.p, c.alpha.0, c.alpha.1, c.beta.0, c.beta.1, c.div_alpha, c.div_beta, c.div_sum
        );
        assert!(&c.div_alpha + &c.div_beta < c.div_sum);
    }

    // divisibility itself is just the gcd of the coordinates
    let v = [6.into(), 3.into()];
    println!("\ndiv(6, 3) = {}", vector_divisibility(&v));
}
