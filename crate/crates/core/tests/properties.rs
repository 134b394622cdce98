use kha::polytope::{PolytopeSpec, RValue};
use kha::quiver::Quiver;
use kha::rational::{frac, q};
use kha::shuffle::product::random_element;
use kha::shuffle::{shuffle_mul, Kernel, LaurentPoly, ShuffleElement};
use kha::weights;
use kha::Q;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=3, prop::collection::vec((0usize..3, 0usize..3), 0..5)).prop_map(|(n, es)| {
        let es: Vec<(usize, usize)> = es.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        Quiver::new(n, &es).unwrap()
    })
}

fn poly(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, nvars), -4i64..=4), 0..5)
        .prop_map(move |ts| LaurentPoly::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, q(c)))))
}

/// `q -> 1` on a one-colour element with `m` slots.
fn at_q_one(f: &ShuffleElement) -> LaurentPoly {
    let m = f.slots();
    let n = m + 3;
    let rows: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            if i != m {
                r[i] = 1;
            }
            r
        })
        .collect();
    f.num().linear_substitution(n, &rows)
}

proptest! {
    #[test]
    fn euler_form_is_additive(quiver in quiver(), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = quiver.vertex_count();
        let mut v = || (0..n).map(|_| rng.gen_range(0..4)).collect::<Vec<u32>>();
        let (a, b, e) = (v(), v(), v());
        let ab = kha::quiver::add(&a, &b);
        prop_assert_eq!(
            quiver.euler_form(&ab, &e).unwrap(),
            quiver.euler_form(&a, &e).unwrap() + quiver.euler_form(&b, &e).unwrap()
        );
        prop_assert_eq!(
            quiver.euler_form(&e, &ab).unwrap(),
            quiver.euler_form(&e, &a).unwrap() + quiver.euler_form(&e, &b).unwrap()
        );
    }

    #[test]
    fn dominant_shift_is_idempotent(chi in prop::collection::vec(-4i64..=4, 4)) {
        let d = [3u32, 1];
        let chi: Vec<Q> = chi.into_iter().map(q).collect();
        if let Some(s) = weights::dominant_shift(&d, &chi).unwrap() {
            prop_assert!(weights::is_dominant(&d, &s.weight));
            let again = weights::dominant_shift(&d, &s.weight).unwrap().unwrap();
            prop_assert_eq!(&again.weight, &s.weight);
            prop_assert_eq!(again.sign, 1);
            prop_assert_eq!(s.sign, if s.length % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn r_invariant_is_homogeneous(
        chi in prop::collection::vec((-6i64..=6, 1i64..=3), 3),
        c in (1i64..=4, 1i64..=3),
    ) {
        let spec = PolytopeSpec::new(&Quiver::loops(2), &[3]).unwrap();
        let chi: Vec<Q> = chi.into_iter().map(|(n, d)| frac(n, d)).collect();
        let c = frac(c.0, c.1);
        let scaled: Vec<Q> = chi.iter().map(|x| x * &c).collect();
        match (spec.r_invariant(&chi).unwrap(), spec.r_invariant(&scaled).unwrap()) {
            (RValue::Finite(a), RValue::Finite(b)) => prop_assert_eq!(a * &c, b),
            (a, b) => prop_assert_eq!(a, b),
        }
    }

    #[test]
    fn laurent_ring_laws(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_round_trips(a in poly(3), c in -3i64..=3) {
        let cz = LaurentPoly::constant(3, q(c));
        let lin = &LaurentPoly::var(3, 0) - &(&cz * &LaurentPoly::var(3, 1));
        let p = &a * &lin;
        prop_assert_eq!(p.div_by_difference(0, 1, &cz).unwrap(), a);
    }

    #[test]
    fn shuffle_products_are_symmetric(seed in any::<u64>(), k in 1u32..=2, l in 1u32..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&mut rng, &[k], 2, 2, [false; 3]);
        let g = random_element(&mut rng, &[l], 2, 2, [false; 3]);
        for kernel in [Kernel::jordan(), Kernel::feigin_odeskii(), Kernel::plain(&Quiver::loops(3)).unwrap()] {
            let p = shuffle_mul(&kernel, &f, &g).unwrap();
            prop_assert!(p.is_symmetric());
            prop_assert_eq!(p.dims(), &[k + l][..]);
        }
    }

    #[test]
    fn generator_products_are_homogeneous(a in -3i32..=3, b in -3i32..=3) {
        for kernel in [Kernel::jordan(), Kernel::feigin_odeskii()] {
            let e = |k| ShuffleElement::generator(1, 0, k);
            let base = shuffle_mul(&kernel, &e(0), &e(0)).unwrap().z_degree().unwrap();
            let p = shuffle_mul(&kernel, &e(a), &e(b)).unwrap();
            if let Some((lo, hi)) = p.z_degree() {
                prop_assert_eq!(lo, hi);
                prop_assert_eq!(lo, base.0 + a + b);
            }
        }
    }

    #[test]
    fn jordan_commutes_at_q_one(seed in any::<u64>(), k in 1u32..=2, l in 1u32..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kernel = Kernel::jordan();
        let f = random_element(&mut rng, &[k], 2, 2, [true, false, false]);
        let g = random_element(&mut rng, &[l], 2, 2, [true, false, false]);
        let fg = shuffle_mul(&kernel, &f, &g).unwrap();
        let gf = shuffle_mul(&kernel, &g, &f).unwrap();
        prop_assert_eq!(at_q_one(&fg), at_q_one(&gf));
    }
}

#[test]
fn jordan_is_not_commutative_generically() {
    let kernel = Kernel::jordan();
    let e = |k| ShuffleElement::generator(1, 0, k);
    let fg = shuffle_mul(&kernel, &e(1), &e(0)).unwrap();
    let gf = shuffle_mul(&kernel, &e(0), &e(1)).unwrap();
    assert_ne!(fg, gf);
    assert_eq!(at_q_one(&fg), at_q_one(&gf));
}
