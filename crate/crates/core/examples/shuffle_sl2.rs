//! The Jordan shuffle algebra and the loop relation of its generators.

use kha::io::pretty_element;
use kha::shuffle::relations::{pin_sl2_convention, sl2_failures};
use kha::shuffle::{shuffle_mul, shuffle_word, Kernel, ShuffleElement};

fn main() -> kha::Result<()> {
    let kernel = Kernel::jordan();
    let e = |k| ShuffleElement::generator(1, 0, k);
    println!("e0 * e0 = {}", pretty_element(&shuffle_mul(&kernel, &e(0), &e(0))?));
    println!("e1 * e0 = {}", pretty_element(&shuffle_mul(&kernel, &e(1), &e(0))?));
    println!("e0 * e1 = {}", pretty_element(&shuffle_mul(&kernel, &e(0), &e(1))?));
    println!("e0^3 = {}", pretty_element(&shuffle_word(&kernel, &[e(0), e(0), e(0)])?));
    let conv = pin_sl2_convention(&kernel)?;
    println!("pinned: {conv}");
    println!("failures on [-2,2]^2: {:?}", sl2_failures(&kernel, conv, -2, 2)?);
    let fo = Kernel::feigin_odeskii();
    println!("FO e0 * e0 = {}", pretty_element(&shuffle_mul(&fo, &e(0), &e(0))?));
    Ok(())
}
