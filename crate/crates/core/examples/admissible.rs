//! Classifies tuples of (dimension, weight) pairs on the three-loop quiver.

use kha::polytope::{classify_admissible, AdmissibleVerdict};
use kha::quiver::Quiver;

fn main() -> kha::Result<()> {
    let quiver = Quiver::loops(3);
    let tuples: Vec<Vec<(Vec<u32>, i64)>> = vec![
        vec![(vec![1], 0), (vec![1], 0)],
        vec![(vec![1], 0), (vec![1], 1)],
        vec![(vec![1], 2), (vec![1], -2)],
        vec![(vec![1], 0), (vec![1], 0), (vec![1], 0)],
    ];
    for pairs in tuples {
        let verdict = match classify_admissible(&quiver, &pairs)? {
            AdmissibleVerdict::NotAdmissible { levi } => format!("not admissible (levi {levi:?})"),
            AdmissibleVerdict::Admissible(a) => {
                format!("admissible, all-half {}, all-big {}, levi {:?}", a.all_half, a.all_big, a.levi)
            }
        };
        println!("{pairs:?}: {verdict}");
    }
    Ok(())
}
