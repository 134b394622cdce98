//! Normal forms in the deformed symmetric algebra.

use kha::dsym::{dsym_normal_form, parse_word, random_word, Strategy};
use kha::quiver::Quiver;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kha::Result<()> {
    let quiver = Quiver::loops(3);
    let word = parse_word("1:2:0 1:0:0 2:1:0")?;
    println!("{word}  ->  {}", dsym_normal_form(&quiver, &word, Strategy::Leftmost)?);
    let quiver = Quiver::two_cycle();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..4 {
        let word = random_word(&quiver, &mut rng, 4, 2, 2);
        let left = dsym_normal_form(&quiver, &word, Strategy::Leftmost)?;
        let right = dsym_normal_form(&quiver, &word, Strategy::Rightmost)?;
        println!("{word}  ->  {left}  (strategies agree: {})", left == right);
    }
    Ok(())
}
