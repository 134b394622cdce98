//! Both sides of the mutation identity for two one-dimensional classes.

use kha::quiver::Quiver;
use kha::rational::q;
use kha::shuffle::bbw::{det_normal_exponents, mutation_sides, KClassSum};

fn show(k: &KClassSum) -> String {
    let parts: Vec<String> = k
        .iter()
        .map(|(w, c)| format!("{c:+}[{}]", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn main() -> kha::Result<()> {
    let quiver = Quiver::loops(3);
    for (a, b) in [(0, 0), (2, -1), (-3, 3)] {
        let rep = mutation_sides(&quiver, &[1], &[1], &[q(a)], &[q(b)])?;
        println!("chi = ({a}, {b})  holds {}", rep.holds());
        println!("  lhs {}", show(&rep.lhs));
        println!("  rhs {}", show(&rep.rhs));
    }
    for (d, e) in [(1, 2), (2, 1), (3, 3)] {
        let n = det_normal_exponents(&quiver, &[d], &[e])?;
        println!("det N_({d},{e}): sign {:+}, exponents {:?} / {:?}", n.sign, n.f_exp, n.g_exp);
    }
    Ok(())
}
