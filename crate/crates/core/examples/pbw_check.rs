//! Checks the PBW bijection on the loop quivers.

use kha::categories::pbw_bijection_check;
use kha::quiver::Quiver;

fn main() -> kha::Result<()> {
    for (m, d, bound) in [(2usize, 2u32, 4i64), (3, 2, 3), (3, 3, 3)] {
        let rep = pbw_bijection_check(&Quiver::loops(m), &[d], bound)?;
        println!(
            "m={m} d={d} bound={bound}: checked {}, failures {}, fractional shifts {}",
            rep.checked,
            rep.failures.len(),
            rep.fractional_shifts
        );
        if let Some(e) = rep.entries.first() {
            println!("  e.g. tuple {:?} with r values {:?}", e.tuple, e.r_values.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        }
    }
    Ok(())
}
