//! r-invariant, face character and standard form of a few weights.

use kha::polytope::{self, PolytopeSpec};
use kha::quiver::Quiver;
use kha::rational::{frac, q};

fn main() -> kha::Result<()> {
    let quiver = Quiver::loops(2);
    let d = [3u32];
    let spec = PolytopeSpec::new(&quiver, &d)?;
    for chi in [vec![q(2), q(0), q(-2)], vec![q(1), q(0), q(0)], vec![frac(1, 2), q(0), frac(-1, 2)]] {
        let r = spec.r_invariant(&chi)?;
        let shown: Vec<String> = chi.iter().map(|x| x.to_string()).collect();
        println!("chi = {shown:?}  r = {r}  p = {}", spec.p_invariant(&chi)?);
        if r.finite().is_some_and(|x| *x > q(0)) {
            let face = spec.face_character(&chi)?;
            println!("  face levels {:?}, tight subsets {:?}", face.levels, face.tight);
        }
        let sf = polytope::standard_form(&quiver, &d, &chi)?;
        for node in sf.nodes() {
            println!("  node on {:?}: r = {}", node.coords, node.r);
        }
        for leaf in sf.leaves() {
            let res: Vec<String> = leaf.residual.iter().map(|x| x.to_string()).collect();
            println!("  leaf on {:?}: residual {res:?}, r = {}", leaf.coords, leaf.r);
        }
        assert_eq!(sf.reconstruct(), chi);
    }
    Ok(())
}
