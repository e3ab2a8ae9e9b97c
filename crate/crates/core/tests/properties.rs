use loopmu::diagrams::{verify_cojacobi, verify_coskew, verify_factorization, LabeledDiagram};
use loopmu::freegroup::{
    are_conjugate, brute_force_conjugator, cyclic_reduce, primitive_root, simultaneous_conjugacy,
};
use loopmu::loopops::{
    cobracket_via_mu, goldman_bracket, has_swap_structure, is_power_of_simple,
    minimal_self_intersection, mu, reduce_classes, turaev_cobracket,
};
use loopmu::{ClassTerm, CyclicWord, Letter, SurfaceModel, Word};
use proptest::prelude::*;

fn word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(|raw| {
        Word::from_letters(raw.into_iter().map(|(g, inv)| {
            if inv {
                Letter::inv_gen(g)
            } else {
                Letter::gen(g)
            }
        }))
    })
}

fn nontrivial(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    word(rank, max_len).prop_filter("nontrivial", |w| !w.is_identity())
}

fn surfaces() -> Vec<SurfaceModel> {
    [
        "genus:1,boundary:1",
        "genus:2,boundary:1",
        "spheres:3",
        "spheres:4",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

fn surface() -> impl Strategy<Value = SurfaceModel> {
    prop::sample::select(surfaces())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclic_reduce_recovers_the_word(w in word(3, 12)) {
        let (core, c) = cyclic_reduce(&w);
        prop_assert_eq!(core.to_word().conjugate_by(&c), w);
    }

    #[test]
    fn conjugacy_witnesses_are_correct(w in word(3, 8), g in word(3, 5)) {
        let v = w.conjugate_by(&g);
        let d = are_conjugate(&w, &v).unwrap();
        prop_assert_eq!(w.conjugate_by(&d), v);
    }

    #[test]
    fn roots_power_back(w in nontrivial(3, 5), n in 1i64..4, g in word(3, 3)) {
        let x = w.pow(n).conjugate_by(&g);
        let (root, e) = primitive_root(&x).unwrap();
        prop_assert_eq!(root.pow(i64::from(e)), x);
        prop_assert!(CyclicWord::of(&root).is_primitive());
    }

    #[test]
    fn simultaneous_conjugacy_matches_brute_force(
        x in nontrivial(2, 5),
        y in nontrivial(2, 5),
        g in word(2, 4),
        planted in any::<bool>(),
        x3 in nontrivial(2, 5),
        y3 in nontrivial(2, 5),
    ) {
        let (x2, y2) = if planted { (x.conjugate_by(&g), y.conjugate_by(&g)) } else { (x3, y3) };
        let fast = simultaneous_conjugacy(&x, &y, &x2, &y2).unwrap();
        let slow = brute_force_conjugator(&x, &y, &x2, &y2, 2, 6);
        if planted {
            prop_assert!(fast.is_some());
        }
        if let Some(f) = &fast {
            prop_assert_eq!(&x.conjugate_by(f), &x2);
            prop_assert_eq!(&y.conjugate_by(f), &y2);
        }
        // a short conjugator exists only if some conjugator does
        if slow.is_some() {
            prop_assert!(fast.is_some());
        }
        if fast.as_ref().is_some_and(|f| f.len() <= 6) {
            prop_assert!(slow.is_some());
        }
    }

    #[test]
    fn mu_structure(w in nontrivial(2, 9), m in surface()) {
        let r = mu(&w, &m, false).unwrap();
        prop_assert_eq!(r.term_count() % 2, 0);
        prop_assert!(has_swap_structure(&r.terms).unwrap());
        prop_assert_eq!(turaev_cobracket(&w, &m).unwrap(), cobracket_via_mu(&w, &m).unwrap());
        prop_assert_eq!(r.terms.is_empty(), is_power_of_simple(&w, &m).unwrap());
    }

    #[test]
    fn invariance(w in nontrivial(2, 8), g in word(2, 4), k in 0usize..8, m in surface()) {
        let base = minimal_self_intersection(&w, &m).unwrap();
        let core = CyclicWord::of(&w);
        let rotated = core.rotation(k % core.len());
        for v in [w.conjugate_by(&g), rotated, w.inverse()] {
            prop_assert_eq!(minimal_self_intersection(&v, &m).unwrap(), base);
            prop_assert_eq!(
                mu(&v, &m, false).unwrap().term_count(),
                mu(&w, &m, false).unwrap().term_count()
            );
        }
        prop_assert_eq!(turaev_cobracket(&w.conjugate_by(&g), &m).unwrap(), turaev_cobracket(&w, &m).unwrap());
    }

    #[test]
    fn bracket_is_antisymmetric(a in nontrivial(2, 6), b in nontrivial(2, 6), m in surface()) {
        let ab = goldman_bracket(&a, &b, &m).unwrap();
        let ba = goldman_bracket(&b, &a, &m).unwrap();
        let sum = reduce_classes(ab.into_iter().chain(ba).collect::<Vec<ClassTerm>>());
        prop_assert!(sum.is_empty());
    }

    #[test]
    fn bracket_of_a_class_with_itself_vanishes(a in nontrivial(2, 6), m in surface()) {
        prop_assert!(goldman_bracket(&a, &a, &m).unwrap().is_empty());
    }

    #[test]
    fn diagram_identities(w in nontrivial(2, 8), m in surface()) {
        prop_assume!(CyclicWord::of(&w).is_primitive());
        let d = LabeledDiagram::from_loop(&w, &m).unwrap();
        prop_assert!(verify_coskew(&d, 1).unwrap().holds());
        prop_assert!(verify_cojacobi(&d, 1).unwrap().holds());
        prop_assert!(verify_factorization(&d, 1, &m).unwrap().holds());
    }
}

#[test]
fn power_formula_on_short_primitive_words() {
    let m: SurfaceModel = "genus:1,boundary:1".parse().unwrap();
    for w in [
        "a1.a2",
        "a1.a1.a2",
        "a1.a2.A1.A2",
        "a1.a2.a2.A1.a2",
        "a1.a1.a2.a2",
    ] {
        let beta: Word = w.parse().unwrap();
        let mb = minimal_self_intersection(&beta, &m).unwrap();
        for n in 2..=3u64 {
            let m_n = minimal_self_intersection(&beta.pow(n as i64), &m).unwrap();
            assert_eq!(m_n, n * n * mb + n - 1, "{w}^{n}");
        }
    }
}
