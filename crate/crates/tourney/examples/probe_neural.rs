//! Scratch probe: braided tourney construction across the full size range.
use std::time::Instant;
use tourney::generators::braided_tourney;

fn main() {
    for n in (4..=60).step_by(2) {
        let t0 = Instant::now();
        match braided_tourney(n) {
            Ok(g) => {
                let k = g.validate(false).unwrap();
                assert_eq!(k, 4 * (n / 4), "size law failed at n={n}");
                eprintln!("n={n}: k={k} ({:?})", t0.elapsed());
            }
            Err(e) => eprintln!("n={n}: FAILED {e}"),
        }
    }
}
