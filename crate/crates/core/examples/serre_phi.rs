//! Serre relations in the quantum loop shuffle algebra and the two comparison maps.

use kha::io::pretty_element;
use kha::shuffle::phi;
use kha::shuffle::relations::serre;
use kha::shuffle::Kernel;

fn main() -> kha::Result<()> {
    let ql = Kernel::quantum_loop(2)?;
    for (i, j) in [(0, 1), (1, 0)] {
        println!("serre({i}, {j}) vanishes: {}", serre(&ql, i, j)?.is_zero());
    }
    let src = phi::an_source(2)?;
    let tgt = phi::an_target(2, true)?;
    let gens = phi::generators(2, &[-1, 0, 1]);
    let mut bad = 0;
    for f in &gens {
        for g in &gens {
            if !phi::homomorphism_defect(&src, &tgt, |x| phi::phi_an(2, x), f, g)?.is_zero() {
                bad += 1;
            }
        }
    }
    println!("A_2 map: {} products, {bad} defects", gens.len() * gens.len());
    let one = kha::shuffle::ShuffleElement::generator(1, 0, 0);
    println!("Jordan map on 1: {}", pretty_element(&phi::phi_jordan3(&one)?));
    let src = phi::jordan3_source();
    let tgt = phi::jordan3_target(true)?;
    let d = phi::homomorphism_defect(&src, &tgt, phi::phi_jordan3, &one, &one)?;
    println!("Jordan map defect on 1 * 1: {}", d.is_zero());
    Ok(())
}
