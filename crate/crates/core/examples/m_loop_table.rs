//! Generator counts in dimension 2 for the m-loop quivers.

use kha::categories::Ranks;
use kha::quiver::Quiver;

fn main() -> kha::Result<()> {
    println!("{:>3} {:>6} {:>6}", "m", "n(2,0)", "n(2,1)");
    for m in 1..=8 {
        let mut ranks = Ranks::new(&Quiver::loops(m))?;
        println!("{:>3} {:>6} {:>6}", m, ranks.n_rank(&[2], 0)?, ranks.n_rank(&[2], 1)?);
    }
    Ok(())
}
