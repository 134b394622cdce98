//! Acceptance checks, one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use kha::categories::{self, Ranks};
use kha::dsym::{self, Strategy};
use kha::polytope::{PolytopeSpec, RValue};
use kha::quiver::Quiver;
use kha::rational::{frac, q};
use kha::shuffle::bbw;
use kha::shuffle::phi;
use kha::shuffle::product::{denominator, random_element};
use kha::shuffle::relations::{pin_sl2_convention, serre, sl2_failures};
use kha::shuffle::{shuffle_mul, Kernel, ShuffleElement};
use kha::weights::{self, Layout};
use kha::Q;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let t = Instant::now();
    let out = f();
    let el = t.elapsed();
    let (ok, detail) = match out {
        Ok(d) if el <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the {:.0?} budget", limit)),
        Err(e) => (false, e),
    };
    println!("{} {:>2} {:<28} {:>8.2?}  {}", if ok { "PASS" } else { "FAIL" }, id, name, el, detail);
    ok
}

fn m_loop_table() -> Check {
    let expect = [0u64, 1, 1, 2, 2, 3, 3, 4];
    let mut got = Vec::new();
    for m in 1..=8 {
        let mut r = Ranks::new(&Quiver::loops(m)).map_err(|e| e.to_string())?;
        got.push(r.n_rank(&[2], 0).map_err(|e| e.to_string())?);
    }
    ensure(got == expect, || format!("got {got:?}"))?;
    Ok(format!("n_rank(2, 0) = {got:?}"))
}

fn two_cycle_generators() -> Check {
    let gens = categories::magic_generators(&Quiver::two_cycle(), &[1, 1], 0).map_err(|e| e.to_string())?;
    let chis: Vec<Vec<Q>> = gens.iter().map(|g| g.chi.clone()).collect();
    ensure(chis == vec![vec![Q::zero(), Q::zero()]], || format!("got {chis:?}"))?;
    Ok("exactly chi = (0, 0)".into())
}

fn mutation_grids() -> Check {
    let q3 = Quiver::loops(3);
    let mut n3 = 0;
    for a in -3..=3 {
        for b in -3..=3 {
            let rep = bbw::mutation_sides(&q3, &[1], &[1], &[q(a)], &[q(b)]).map_err(|e| e.to_string())?;
            ensure(rep.holds(), || format!("m=3 fails at ({a}, {b})"))?;
            n3 += 1;
        }
    }
    let q2 = Quiver::loops(2);
    let mut n2 = 0;
    for a in -2..=2 {
        for b in -2..=a {
            for c in -2..=2 {
                let rep = bbw::mutation_sides(&q2, &[2], &[1], &[q(a), q(b)], &[q(c)]).map_err(|e| e.to_string())?;
                ensure(rep.holds(), || format!("m=2 fails at ({a}, {b}; {c})"))?;
                n2 += 1;
            }
        }
    }
    ensure(n3 == 49 && n2 == 75, || format!("grid sizes {n3}, {n2}"))?;
    Ok(format!("{n3} + {n2} weights, 0 failures"))
}

/// Three nonzero dimension vectors with total at most 4.
fn random_dims(rng: &mut ChaCha8Rng, colours: usize) -> [Vec<u32>; 3] {
    loop {
        let mut ds: [Vec<u32>; 3] = Default::default();
        for d in ds.iter_mut() {
            *d = (0..colours).map(|_| rng.gen_range(0..=2)).collect();
        }
        let tot: u32 = ds.iter().flatten().sum();
        if tot <= 4 && ds.iter().all(|d| d.iter().any(|&x| x > 0)) {
            return ds;
        }
    }
}

fn associativity() -> Check {
    let sym2 = Quiver::new(2, &[(0, 1), (1, 0), (0, 0)]).map_err(|e| e.to_string())?;
    let kernels = vec![
        Kernel::plain(&Quiver::loops(2)).map_err(|e| e.to_string())?,
        Kernel::plain(&sym2).map_err(|e| e.to_string())?,
        Kernel::jordan(),
        Kernel::tripled_an(2).map_err(|e| e.to_string())?,
        Kernel::feigin_odeskii(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    for k in &kernels {
        for _ in 0..100 {
            let [a, b, c] = random_dims(&mut rng, k.colours());
            let f = random_element(&mut rng, &a, 2, 1, [false; 3]);
            let g = random_element(&mut rng, &b, 2, 1, [false; 3]);
            let h = random_element(&mut rng, &c, 2, 1, [false; 3]);
            let err = |e: kha::Error| format!("{k}: {e}");
            let left = shuffle_mul(k, &shuffle_mul(k, &f, &g).map_err(err)?, &h).map_err(err)?;
            let right = shuffle_mul(k, &f, &shuffle_mul(k, &g, &h).map_err(err)?).map_err(err)?;
            ensure(left == right, || format!("{k}: ({f} * {g}) * {h}"))?;
            done += 1;
        }
    }
    Ok(format!("{done} triples over {} kernels", kernels.len()))
}

/// `f(z1) g(z2) zeta(z1/z2) + f(z2) g(z1) zeta(z2/z1)` for `f = g = 1`, at a rational point.
fn brute_square(kernel: &Kernel, z: [Q; 2], params: [Q; 3]) -> Q {
    let at = |x: Q| {
        let pt = [x, params[0].clone(), params[1].clone(), params[2].clone()];
        kernel.eval_zeta(0, 0, &pt)
    };
    at(&z[0] / &z[1]) + at(&z[1] / &z[0])
}

fn jordan_and_sl2() -> Check {
    let jordan = Kernel::jordan();
    let one = ShuffleElement::generator(1, 0, 0);
    let sq = shuffle_mul(&jordan, &one, &one).map_err(|e| e.to_string())?;
    let shown = kha::io::pretty_element(&sq);
    ensure(shown == "1 + q", || format!("1 * 1 = {shown}"))?;
    for kernel in [Kernel::jordan(), Kernel::feigin_odeskii()] {
        let sq = shuffle_mul(&kernel, &one, &one).map_err(|e| e.to_string())?;
        let den = denominator(&kernel, sq.dims());
        for (z, p) in [
            ([frac(2, 3), frac(5, 7)], [frac(3, 11), frac(2, 5), frac(7, 4)]),
            ([q(3), frac(-1, 2)], [frac(5, 2), q(-3), frac(1, 6)]),
        ] {
            let pt: Vec<Q> = z.iter().chain(p.iter()).cloned().collect();
            let val = sq.num().eval(&pt) / den.eval(&pt);
            let expect = brute_square(&kernel, z.clone(), p.clone());
            ensure(val == expect, || format!("{kernel}: point value {val} vs {expect}"))?;
        }
    }
    let conv = pin_sl2_convention(&jordan).map_err(|e| e.to_string())?;
    let bad = sl2_failures(&jordan, conv, 0, 2).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), || format!("loop relation fails at {bad:?}"))?;
    Ok(format!("1 * 1 = {shown}; loop relation on [0,2]^2 with {conv}"))
}

fn serre_and_phi() -> Check {
    let ql = Kernel::quantum_loop(2).map_err(|e| e.to_string())?;
    for (i, j) in [(0, 1), (1, 0)] {
        let s = serre(&ql, i, j).map_err(|e| e.to_string())?;
        ensure(s.is_zero(), || format!("Serre ({i}, {j}) = {s}"))?;
    }
    let err = |e: kha::Error| e.to_string();
    let src = phi::an_source(2).map_err(err)?;
    let tgt = phi::an_target(2, true).map_err(err)?;
    let gens = phi::generators(2, &[-1, 0, 1]);
    let mut n = 0;
    for f in &gens {
        for g in &gens {
            let d = phi::homomorphism_defect(&src, &tgt, |x| phi::phi_an(2, x), f, g).map_err(err)?;
            ensure(d.is_zero(), || format!("A_2 map fails on {f} * {g}"))?;
            n += 1;
        }
    }
    let src = phi::jordan3_source();
    let tgt = phi::jordan3_target(true).map_err(err)?;
    let gens = phi::generators(1, &[-2, -1, 0, 1, 2]);
    for f in &gens {
        for g in &gens {
            let d = phi::homomorphism_defect(&src, &tgt, phi::phi_jordan3, f, g).map_err(err)?;
            ensure(d.is_zero(), || format!("Jordan map fails on {f} * {g}"))?;
            n += 1;
        }
    }
    Ok(format!("Serre both orientations; {n} generator products"))
}

fn pbw() -> Check {
    let mut out = Vec::new();
    for (m, d, bound) in [(2usize, 2u32, 4i64), (3, 3, 3)] {
        let rep = categories::pbw_bijection_check(&Quiver::loops(m), &[d], bound).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("m={m} d={d}: {:?}", rep.failures.first()))?;
        out.push(format!("m={m} d={d}: {} checked", rep.checked));
    }
    Ok(out.join(", "))
}

/// `r` as the maximum of `-<1_S, chi0> / h(1_S)` over coordinate subsets, `h` counting the
/// weights leaving `S`.
fn r_by_subsets(quiver: &Quiver, d: &[u32], chi: &[Q]) -> RValue {
    let n = Layout::new(d).len();
    let rw: Vec<_> = weights::r_weights(quiver, d).into_iter().filter(|w| !w.is_zero()).collect();
    let w: Q = chi.iter().sum();
    let beta = weights::beta_diag(d);
    let chi0: Vec<Q> = chi.iter().zip(&beta).map(|(c, b)| c - &w * b).collect();
    let mut best = Q::zero();
    for mask in 1u32..(1 << n) - 1 {
        let inside = |a: usize| mask >> a & 1 == 1;
        let num: Q = -(0..n).filter(|&a| inside(a)).map(|a| chi0[a].clone()).sum::<Q>();
        let h = rw.iter().filter(|x| inside(x.plus) && !inside(x.minus)).count();
        if h == 0 {
            if num > Q::zero() {
                return RValue::Infinite;
            }
        } else if num.clone() / q(h as i64) > best {
            best = num / q(h as i64);
        }
    }
    RValue::Finite(best)
}

fn random_quiver(rng: &mut ChaCha8Rng) -> (Quiver, Vec<u32>) {
    let nv = rng.gen_range(1..=2);
    let edges: Vec<(usize, usize)> =
        (0..rng.gen_range(0..=3)).map(|_| (rng.gen_range(0..nv), rng.gen_range(0..nv))).collect();
    let quiver = Quiver::new(nv, &edges).expect("valid quiver");
    loop {
        let d: Vec<u32> = (0..nv).map(|_| rng.gen_range(0..=3)).collect();
        let t: u32 = d.iter().sum();
        if (1..=4).contains(&t) {
            return (quiver, d);
        }
    }
}

fn r_invariant() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut infinite = 0;
    for i in 0..200 {
        let (quiver, d) = random_quiver(&mut rng);
        let layout = Layout::new(&d);
        let chi: Vec<Q> = (0..layout.len()).map(|_| frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
        let spec = PolytopeSpec::new(&quiver, &d).map_err(|e| e.to_string())?;
        let r = spec.r_invariant(&chi).map_err(|e| e.to_string())?;
        let expect = r_by_subsets(&quiver, &d, &chi);
        ensure(r == expect, || format!("case {i}: d={d:?} chi={chi:?}: {r} vs {expect}"))?;
        if r == RValue::Infinite {
            infinite += 1;
        }
        let c = frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let shifted: Vec<Q> = chi.iter().zip(&weights::beta_diag(&d)).map(|(x, b)| x + &c * b).collect();
        let rs = spec.r_invariant(&shifted).map_err(|e| e.to_string())?;
        ensure(rs == r, || format!("case {i}: diagonal shift changes r: {rs} vs {r}"))?;
        let mut permuted = chi.clone();
        for v in 0..d.len() {
            permuted[layout.block(v)].shuffle(&mut rng);
        }
        let rp = spec.r_invariant(&permuted).map_err(|e| e.to_string())?;
        ensure(rp == r, || format!("case {i}: Weyl permutation changes r: {rp} vs {r}"))?;
    }
    Ok(format!("200 weights ({infinite} infinite), shift and Weyl invariant"))
}

fn dsym_confluence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut n = 0;
    for quiver in [Quiver::loops(3), Quiver::two_cycle()] {
        for _ in 0..100 {
            let word = dsym::random_word(&quiver, &mut rng, 5, 3, 2);
            for a in &word.letters {
                for b in &word.letters {
                    let (d1, d2) = categories::weight_shift(&quiver, &a.d, &b.d).map_err(|e| e.to_string())?;
                    ensure(d1 + d2 == 0, || format!("shift ({d1}, {d2}) for {:?}, {:?}", a.d, b.d))?;
                }
            }
            let err = |e: kha::Error| format!("{word}: {e}");
            let left = dsym::dsym_normal_form(&quiver, &word, Strategy::Leftmost).map_err(err)?;
            let right = dsym::dsym_normal_form(&quiver, &word, Strategy::Rightmost).map_err(err)?;
            let seeded = dsym::dsym_normal_form(&quiver, &word, Strategy::Seeded(n)).map_err(err)?;
            ensure(left == right && left == seeded, || format!("{word}: {left} / {right} / {seeded}"))?;
            ensure(dsym::is_normal(&quiver, &left), || format!("{left} is not normal"))?;
            ensure(dsym::total_weight(&left) == dsym::total_weight(&word), || format!("{word}: weight changed"))?;
            ensure(dsym::total_dim(&left) == dsym::total_dim(&word), || format!("{word}: dimension changed"))?;
            n += 1;
        }
    }
    Ok(format!("{n} words, three strategies agree"))
}

fn det_normal() -> Check {
    let q3 = Quiver::loops(3);
    let mut n = 0;
    for d in 1..=4u32 {
        for e in 1..=4u32 {
            let t = d + e;
            let mut exps = vec![0i64; t as usize];
            let mut count = 0i64;
            for w in weights::r_weights(&q3, &[t]) {
                if (w.plus as u32) < d && (w.minus as u32) >= d {
                    exps[w.plus] += 1;
                    exps[w.minus] -= 1;
                    count += 1;
                }
            }
            for i in 0..d as usize {
                for j in d as usize..t as usize {
                    exps[i] -= 1;
                    exps[j] += 1;
                    count += 1;
                }
            }
            let sign = if count % 2 == 0 { 1 } else { -1 };
            let got = bbw::det_normal_exponents(&q3, &[d], &[e]).map_err(|e| e.to_string())?;
            let (f, g) = (exps[0], exps[t as usize - 1]);
            ensure(exps[..d as usize].iter().all(|&x| x == f), || format!("({d}, {e}): uneven d-block"))?;
            ensure(exps[d as usize..].iter().all(|&x| x == g), || format!("({d}, {e}): uneven e-block"))?;
            ensure(got.sign == sign && sign == 1, || format!("({d}, {e}): sign {} vs {sign}", got.sign))?;
            ensure(got.f_exp == vec![f] && got.g_exp == vec![g], || format!("({d}, {e}): {got:?} vs ({f}, {g})"))?;
            let diag = 2 * (e as i64 - d as i64);
            ensure(got.diagonal() == vec![diag], || format!("({d}, {e}): diagonal {:?}", got.diagonal()))?;
            n += 1;
        }
    }
    Ok(format!("{n} pairs, sign +1, diagonal 2(e - d)"))
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        run(1, "m-loop table", s(5), m_loop_table),
        run(2, "two-cycle generators", s(1), two_cycle_generators),
        run(3, "mutation grids", s(30), mutation_grids),
        run(4, "shuffle associativity", s(60), associativity),
        run(5, "jordan square and sl2", s(5), jordan_and_sl2),
        run(6, "serre and phi maps", s(10), serre_and_phi),
        run(7, "pbw bijection", s(120), pbw),
        run(8, "r-invariant oracle", s(30), r_invariant),
        run(9, "dsym confluence", s(10), dsym_confluence),
        run(10, "det normal", s(1), det_normal),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
