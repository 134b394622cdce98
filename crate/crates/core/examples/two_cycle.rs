//! Generator weights on the two-vertex cycle.

use kha::categories::{magic_generators, Ranks};
use kha::quiver::Quiver;

fn main() -> kha::Result<()> {
    let quiver = Quiver::two_cycle();
    let mut ranks = Ranks::new(&quiver)?;
    for d in [[1u32, 0], [1, 1], [2, 1], [2, 2]] {
        for w in -1..=1 {
            let gens = magic_generators(&quiver, &d, w)?;
            let chis: Vec<String> = gens.iter().map(|g| format!("{:?}", g.chi.iter().map(|x| x.to_string()).collect::<Vec<_>>())).collect();
            println!("d={d:?} w={w:>2} n={} magic={}", ranks.n_rank(&d, w)?, chis.join(" "));
        }
    }
    Ok(())
}
