use altsieve::blocks::{can_hide_trivials, HidingVerdict};
use altsieve::exactlinalg::{field_make, kernel_basis, rank, Field, Mat};
use altsieve::gmod::hom_space;
use altsieve::gmod::{direct_sum, dual, ext_square, perm_module, radical_wrt, residual_wrt, socle_series, tensor, GModule};
use altsieve::groups::{alt_group, perm_matrix, Perm};
use altsieve::jordan::{jordan_type, jordan_type_of_nilpotent, JordanType};
use altsieve::meataxe::{chop_labels, Cyclo};
use altsieve::repdata::{brauer_trees, realize, simple, simples};
use altsieve::sieve::{multiset_trace, pressure};
use altsieve::CompFactorMultiset;
use proptest::prelude::*;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn small_field() -> impl Strategy<Value = &'static Field> {
    prop::sample::select(vec![(2, 2), (3, 2), (5, 2), (7, 2), (2, 1), (5, 1)])
        .prop_map(|(p, k)| field_make(p, k).unwrap())
}

fn matrix(f: &'static Field, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(0..f.q(), rows * cols).prop_map(move |d| Mat::from_data(f, rows, cols, d.into_iter().map(|x| x as u16).collect()))
}

fn even_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(move |v| {
        let mut p = Perm::from_images(v);
        if !p.is_even() {
            p = p.mul(&Perm::from_cycles(n, &[&[1, 2]]));
        }
        p
    })
}

/// (n, p, label) for catalogued simples of Alt(5) and Alt(6) in odd characteristic.
fn small_simple() -> impl Strategy<Value = (usize, u32, String)> {
    let mut v = Vec::new();
    for (n, p) in [(5, 3), (5, 5), (6, 5), (5, 2), (6, 2)] {
        for s in simples(n, p).unwrap() {
            if s.dim <= 10 {
                v.push((n, p, s.label.clone()));
            }
        }
    }
    prop::sample::select(v)
}

fn pair_of_simples() -> impl Strategy<Value = (GModule, GModule)> {
    small_simple().prop_flat_map(|(n, p, a)| {
        let same: Vec<String> = simples(n, p).unwrap().iter().filter(|s| s.dim <= 10).map(|s| s.label.clone()).collect();
        (Just((n, p, a)), prop::sample::select(same))
    })
    .prop_map(|((n, p, a), b)| (realize(n, p, &a).unwrap(), realize(n, p, &b).unwrap()))
}

#[test]
fn field_axioms_exhaustive() {
    for (p, k) in [(2, 2), (3, 2), (5, 2), (7, 2)] {
        let f = field_make(p, k).unwrap();
        let q = f.q();
        for a in 0..q {
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "{}", f.name());
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                for c in 0..q {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
        prop_assert!(rank(&m) <= m.rows().min(m.cols()));
    }

    #[test]
    fn rank_of_product((x, y) in matrix_pair()) {
        prop_assert!(x.mul(&y).rank() <= x.rank().min(y.rank()));
    }

    #[test]
    fn perm_matrix_is_a_homomorphism(g in even_perm(7), h in even_perm(7)) {
        let f = field_make(3, 1).unwrap();
        prop_assert_eq!(perm_matrix(&g.mul(&h), f), perm_matrix(&g, f).mul(&perm_matrix(&h, f)));
    }
}

fn sized_matrix() -> impl Strategy<Value = Mat> {
    (small_field(), 1usize..9, 1usize..9).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

fn matrix_pair() -> impl Strategy<Value = (Mat, Mat)> {
    (small_field(), 1usize..7, 1usize..7, 1usize..7).prop_flat_map(|(f, a, b, c)| (matrix(f, a, b), matrix(f, b, c)))
}

proptest! {
    #![proptest_config(cfg(12))]

    #[test]
    fn ext_square_of_sum((a, b) in pair_of_simples()) {
        let lhs = chop_labels(&ext_square(&direct_sum(&a, &b).unwrap()), 0);
        let rhs = chop_labels(&ext_square(&a), 0)
            .union(&chop_labels(&ext_square(&b), 0))
            .union(&chop_labels(&tensor(&a, &b).unwrap(), 0));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chop_is_additive_and_dualizes((a, b) in pair_of_simples()) {
        let t = tensor(&a, &b).unwrap();
        let s = direct_sum(&t, &a).unwrap();
        prop_assert_eq!(chop_labels(&s, 0), chop_labels(&t, 0).union(&chop_labels(&a, 0)));
        let n = a.group().n;
        let p = a.field().p();
        let dualized = chop_labels(&t, 0).map_labels(|l| simple(n, p, l).map(|s| s.dual_label.clone()).unwrap());
        prop_assert_eq!(chop_labels(&dual(&t), 0), dualized);
    }

    #[test]
    fn brauer_characters_add_up((a, b) in pair_of_simples()) {
        let t = tensor(&a, &b).unwrap();
        let (n, p) = (a.group().n, a.field().p());
        let factors = chop_labels(&t, 0);
        let f = t.field();
        for c in &t.group().classes {
            if c.order % p as u64 != 0 && c.order > 1 && f.root_of_unity(c.order).is_some() {
                // the trace of the rep is the image of the Brauer character value
                let want = t.action(&c.rep).trace();
                let z = f.root_of_unity(c.order).unwrap();
                let br = multiset_trace(&factors, simples(n, p).unwrap(), &c.label, c.order).unwrap();
                let got = eval_cyclo(f, &br, z);
                prop_assert_eq!(got, want, "class {}", c.label);
            }
        }
    }

    #[test]
    fn radical_residual_duality((a, b) in pair_of_simples()) {
        let m = tensor(&a, &b).unwrap();
        let (n, p) = (m.group().n, m.field().p());
        let present: Vec<String> = chop_labels(&m, 0).labels().map(|s| s.to_string()).collect();
        let i: Vec<&str> = present.iter().take(1).map(|s| s.as_str()).collect();
        let i_dual: Vec<String> = i.iter().map(|l| simple(n, p, l).unwrap().dual_label.clone()).collect();
        let i_dual: Vec<&str> = i_dual.iter().map(|s| s.as_str()).collect();
        let res = residual_wrt(&m, &i).unwrap();
        let rad = radical_wrt(&dual(&m), &i_dual).unwrap();
        prop_assert_eq!(m.dim() - res.dim(), rad.dim());
    }

    #[test]
    fn socle_layers_partition((a, b) in pair_of_simples()) {
        let m = tensor(&a, &b).unwrap();
        let s = socle_series(&m).unwrap();
        prop_assert_eq!(s.dim(), m.dim());
        prop_assert!(s.layers.iter().all(|l| !l.is_empty()));
    }

    #[test]
    fn hom_dual_symmetry((a, b) in pair_of_simples()) {
        let m = tensor(&a, &b).unwrap();
        prop_assert_eq!(hom_space(&a, &m).unwrap().len(), hom_space(&dual(&m), &dual(&a)).unwrap().len());
    }

    #[test]
    fn jordan_type_additive_and_dual((a, b) in pair_of_simples(), k in 0usize..3) {
        let g = a.group().clone();
        let c = &g.classes[k % g.classes.len()];
        let ja = jordan_type(&a, &c.rep);
        if let Ok(ja) = ja {
            let jb = jordan_type(&b, &c.rep).unwrap();
            prop_assert_eq!(jordan_type(&direct_sum(&a, &b).unwrap(), &c.rep).unwrap(), ja.union(&jb));
            prop_assert_eq!(jordan_type(&dual(&a), &c.rep).unwrap(), ja);
        }
    }
}

fn eval_cyclo(f: &'static Field, c: &Cyclo, z: u32) -> u32 {
    c.coeffs.iter().enumerate().fold(0, |acc, (i, &x)| f.add(acc, f.mul(f.from_int(x), f.pow(z, i as u64))))
}

/// Nilpotent matrices built from a known block structure in a random basis.
fn conjugated_nilpotent(f: &'static Field, blocks: &[usize], seed: u64) -> Mat {
    use rand::{Rng, SeedableRng};
    let n: usize = blocks.iter().sum();
    let mut j = Mat::zero(f, n, n);
    let mut at = 0;
    for &b in blocks {
        for i in 0..b - 1 {
            j.set(at + i, at + i + 1, 1);
        }
        at += b;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let d: Vec<u16> = (0..n * n).map(|_| rng.gen_range(0..f.q()) as u16).collect();
        let s = Mat::from_data(f, n, n, d);
        if let Some(si) = s.inverse() {
            return si.mul(&j).mul(&s);
        }
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn nilpotent_rank_sequence(blocks in prop::collection::vec(1usize..6, 1..5), seed in any::<u64>()) {
        let f = field_make(5, 1).unwrap();
        let m = conjugated_nilpotent(f, &blocks, seed);
        prop_assert_eq!(jordan_type_of_nilpotent(&m).unwrap(), JordanType::from_blocks(&blocks));
    }

    #[test]
    fn pressure_is_additive(a in factor_set(), b in factor_set()) {
        let cat = simples(9, 2).unwrap();
        let (pa, pb) = (pressure(&a, cat).unwrap(), pressure(&b, cat).unwrap());
        prop_assert_eq!(pressure(&a.union(&b), cat).unwrap().value, pa.value + pb.value);
    }

    #[test]
    fn hiding_is_monotone(ones in 0usize..4, eights in 0usize..12, extra in 0usize..6) {
        let trees: Vec<_> = brauer_trees().into_iter().filter(|(n, _)| n.starts_with("6_5_")).map(|(_, t)| t).collect();
        let base = CompFactorMultiset::from_pairs(&[("1", ones), ("8", eights)]);
        let more = base.union(&CompFactorMultiset::from_pairs(&[("8", extra), ("10", extra)]));
        let before = can_hide_trivials(&base, &trees).unwrap().verdict;
        let after = can_hide_trivials(&more, &trees).unwrap().verdict;
        prop_assert!(!(before == HidingVerdict::CanHide && after == HidingVerdict::MustFixLine));
    }
}

fn factor_set() -> impl Strategy<Value = CompFactorMultiset> {
    let labels: Vec<String> = simples(9, 2).unwrap().iter().map(|s| s.label.clone()).collect();
    prop::collection::vec((prop::sample::select(labels), 0usize..4), 0..5).prop_map(|v| {
        let mut m = CompFactorMultiset::new();
        for (l, k) in v {
            m.add(&l, k);
        }
        m
    })
}

#[test]
fn permutation_modules_of_small_groups() {
    let f = field_make(3, 1).unwrap();
    let m = perm_module(6, f).unwrap();
    assert_eq!(m.dim(), 6);
    assert_eq!(chop_labels(&m, 0).total(), socle_series(&m).unwrap().layers.iter().map(|l| l.total()).sum::<usize>());
    assert!(alt_group(6).unwrap().classes.iter().all(|c| c.rep.is_even()));
}
