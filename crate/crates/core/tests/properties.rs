mod common;

use coverforge::braid::{
    conjugate, cyclic_rotate, flip_indices, free_reduce, is_positive, negative_stabilize, positive_stabilize,
    reverse_word, self_linking, verify_quasipositive, BraidLetter, BraidWord, ConjugateFactor,
    QuasipositivityCertificate, Sign,
};
use coverforge::invariants::{analyze, analyze_with, d3_invariant, signature, smith_normal_form, Flag, Rational};
use coverforge::matrix::IntMatrix;
use coverforge::openbook::{
    homology_action, lift_monodromy, lifted_page, page_intersection, variation_matrix, CoverParams, CurveLabel,
};
use coverforge::oracle::{alexander_poly, int_det};
use coverforge::surgery::{build_diagram, linking_rule, prefix_normalize, ContactCoeff, SurgeryComponent};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn letter(strands: usize) -> impl Strategy<Value = BraidLetter> {
    (1..strands, any::<bool>()).prop_map(|(index, pos)| BraidLetter { index, sign: if pos { Sign::Pos } else { Sign::Neg } })
}

fn word_on(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(strands), 0..=max_len).prop_map(move |ls| BraidWord::new(strands, ls).unwrap())
}

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| word_on(n, max_len))
}

fn knot(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_strands, max_len).prop_filter("closure must be a knot", |b| b.is_knot())
}

fn quarter_integer(r: &Rational) -> bool {
    (r.clone() * Rational::from_integer(4)).is_integer()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn stabilization_changes_sl(b in word(5, 12)) {
        prop_assert_eq!(self_linking(&positive_stabilize(&b)), self_linking(&b));
        prop_assert_eq!(self_linking(&negative_stabilize(&b)), self_linking(&b) - 2);
    }

    #[test]
    fn free_reduce_idempotent_and_keeps_sl(b in word(5, 14)) {
        let r = free_reduce(&b);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert_eq!(self_linking(&r), self_linking(&b));
        prop_assert!(r.letters().windows(2).all(|w| !w[0].is_inverse_of(w[1])));
    }

    #[test]
    fn involutions(b in word(5, 12)) {
        prop_assert_eq!(reverse_word(&reverse_word(&b)), b.clone());
        prop_assert_eq!(flip_indices(&flip_indices(&b)), b.clone());
        prop_assert_eq!(b.inverse().inverse(), b);
    }

    #[test]
    fn positive_words_are_quasipositive(b in word(5, 10).prop_filter("positive", is_positive)) {
        let cert = QuasipositivityCertificate::trivial(&b).unwrap();
        prop_assert!(verify_quasipositive(&b, &cert).unwrap());
    }

    #[test]
    fn quasipositive_products_classify_stein(
        n in 2usize..5,
        raw in prop::collection::vec((prop::collection::vec((1usize..4, any::<bool>()), 0..4), 1usize..4), 1..4),
        p in 2usize..4,
    ) {
        let factors: Vec<ConjugateFactor> = raw
            .into_iter()
            .map(|(conj, k)| {
                let letters = conj
                    .into_iter()
                    .map(|(i, pos)| BraidLetter { index: 1 + (i - 1) % (n - 1), sign: if pos { Sign::Pos } else { Sign::Neg } })
                    .collect();
                ConjugateFactor { conjugator: BraidWord::new(n, letters).unwrap(), generator: 1 + (k - 1) % (n - 1) }
            })
            .collect();
        let cert = QuasipositivityCertificate { strands: n, factors };
        let b = cert.product().unwrap();
        let r = analyze_with(&b, p, Some(&cert)).unwrap();
        prop_assert_eq!(r.flags.into_iter().collect::<Vec<_>>(), vec![Flag::SteinFillable]);
    }

    #[test]
    fn conjugate_then_reduce_is_rotation(b in word(4, 8), g in letter(4)) {
        prop_assume!(g.index < b.strands());
        let c = conjugate(&b, g).unwrap();
        prop_assert_eq!(c.len(), b.len() + 2);
        prop_assert_eq!(cyclic_rotate(&c, 1).letters()[..b.len()].to_vec(), b.letters().to_vec());
    }

    #[test]
    fn page_rank_matches_curve_count(p in 2usize..7, n in 2usize..7) {
        let params = CoverParams::new(p, n).unwrap();
        let page = lifted_page(params);
        prop_assert_eq!(page.curves.len() as i64, 1 - page.euler_char);
        prop_assert_eq!(page.curves.len(), (p - 1) * (n - 1));
    }

    #[test]
    fn intersection_antisymmetric_on_adjacent_pairs(
        s1 in 1usize..6, j1 in 1usize..6, s2 in 1usize..6, j2 in 1usize..6,
    ) {
        let (a, b) = (CurveLabel::new(s1, j1), CurveLabel::new(s2, j2));
        prop_assert_eq!(page_intersection(a, b), -page_intersection(b, a));
        let d = (s2 as i64 - s1 as i64, j2 as i64 - j1 as i64);
        let adjacent = matches!(d, (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, -1) | (-1, 1));
        prop_assert_eq!(page_intersection(a, b) != 0, adjacent);
    }

    #[test]
    fn homology_action_unimodular(b in word(4, 8), p in 2usize..5) {
        let params = CoverParams::new(p, b.strands()).unwrap();
        let w = lift_monodromy(&b, p).unwrap();
        let m = homology_action(&w, params).unwrap();
        prop_assert!(int_det(&m).abs().is_one());
        let round = homology_action(&w.then(&w.inverse()), params).unwrap();
        prop_assert_eq!(round, IntMatrix::identity(params.curve_count()));
    }

    #[test]
    fn diagram_shape(b in word(5, 10), p in 2usize..6) {
        let d = build_diagram(&b, p).unwrap();
        let (_, rest) = prefix_normalize(&b).unwrap();
        prop_assert_eq!(d.len(), (p - 1) * rest.len());
        prop_assert!(d.linking_matrix().is_symmetric());
        for (i, c) in d.components.iter().enumerate() {
            let letter = rest.letters()[d.letter_of(c)];
            let want = match letter.sign { Sign::Pos => -2, Sign::Neg => 0 };
            prop_assert_eq!(d.linking[i][i], want);
            prop_assert_eq!(c.contact == ContactCoeff::Plus, letter.sign == Sign::Neg);
        }
    }

    #[test]
    fn distant_strands_never_link(
        k in 1usize..5, l in 1usize..5, i in 1usize..8, j in 1usize..8, plus in any::<bool>(),
    ) {
        prop_assume!(i.abs_diff(j) >= 2);
        let contact = if plus { ContactCoeff::Plus } else { ContactCoeff::Minus };
        let a = SurgeryComponent { curve: CurveLabel::new(k, i), time: 0, contact };
        let b = SurgeryComponent { curve: CurveLabel::new(l, j), time: 1, contact };
        prop_assert_eq!(linking_rule(&a, &b).unwrap(), 0);
        prop_assert_eq!(linking_rule(&b, &SurgeryComponent { time: 2, ..a }).unwrap(), 0);
    }

    #[test]
    fn d3_quarter_integral(b in word(4, 8), p in 2usize..5) {
        let r = analyze(&b, p).unwrap();
        prop_assert!(quarter_integer(&r.d3));
        if r.b1 == 0 && r.h1_factors.is_empty() {
            prop_assert!((r.d3.clone() + Rational::new(1, 2)).is_integer(), "homology sphere with d3 = {}", r.d3);
        }
    }

    #[test]
    fn signature_negation_and_blocks(
        seed in any::<u64>(), a in 1usize..6, b in 1usize..6,
    ) {
        let mut rng = common::rng(seed);
        let x = common::random_symmetric(&mut rng, a, 4);
        let y = common::random_symmetric(&mut rng, b, 4);
        prop_assert_eq!(signature(&x.neg()), -signature(&x));
        let sum = IntMatrix::from_fn(a + b, a + b, |i, j| match (i < a, j < a) {
            (true, true) => x[(i, j)].clone(),
            (false, false) => y[(i - a, j - a)].clone(),
            _ => BigInt::from(0),
        });
        prop_assert_eq!(signature(&sum), signature(&x) + signature(&y));
    }

    #[test]
    fn snf_unimodular_invariance(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..6) {
        let mut rng = common::rng(seed);
        let m = common::random_matrix(&mut rng, rows, cols, 5);
        let u = common::random_unimodular(&mut rng, rows, 10);
        let v = common::random_unimodular(&mut rng, cols, 10);
        let moved = &(&u * &m) * &v;
        prop_assert_eq!(smith_normal_form(&moved), smith_normal_form(&m));
    }

    #[test]
    fn snf_divisibility_chain(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..6) {
        let mut rng = common::rng(seed);
        let s = smith_normal_form(&common::random_matrix(&mut rng, rows, cols, 7));
        prop_assert!(s.diagonal.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        prop_assert!(s.diagonal.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn split_law(b in word(4, 9), p in 2usize..5) {
        let d = build_diagram(&b, p).unwrap();
        let blocks = d.blocks();
        prop_assume!(!blocks.is_empty());
        let whole = d3_invariant(&d, signature(&d.linking_matrix()));
        let mut sum = Rational::new(blocks.len() as i64 - 1, 2);
        for idx in &blocks {
            let part = d.restrict(idx);
            sum = sum + d3_invariant(&part, signature(&part.linking_matrix()));
        }
        prop_assert_eq!(whole, sum);
    }

    #[test]
    fn open_book_and_surgery_agree_on_h1(b in word(4, 8), p in 2usize..5) {
        let params = CoverParams::new(p, b.strands()).unwrap();
        let var = smith_normal_form(&variation_matrix(&lift_monodromy(&b, p).unwrap(), params).unwrap());
        let r = analyze(&b, p).unwrap();
        prop_assert_eq!(var.factors, r.h1_factors);
        prop_assert_eq!(var.corank, r.b1);
    }

    #[test]
    fn fox_matches_snf(b in knot(4, 9), p in 2usize..6) {
        let r = analyze(&b, p).unwrap();
        match coverforge::oracle::h1_order_fox(&b, p).unwrap() {
            coverforge::oracle::FoxOrder::Finite(n) => prop_assert_eq!(Some(n), r.h1_order()),
            coverforge::oracle::FoxOrder::Infinite => prop_assert!(r.b1 > 0),
        }
    }

    #[test]
    fn alexander_invariance(b in knot(4, 8), shift in 0i64..8, g in letter(4)) {
        let delta = alexander_poly(&b).unwrap();
        prop_assert_eq!(alexander_poly(&cyclic_rotate(&b, shift)).unwrap(), delta.clone());
        if g.index < b.strands() {
            prop_assert_eq!(alexander_poly(&conjugate(&b, g).unwrap()).unwrap(), delta.clone());
        }
        prop_assert_eq!(alexander_poly(&positive_stabilize(&b)).unwrap(), delta.clone());
        prop_assert_eq!(alexander_poly(&negative_stabilize(&b)).unwrap(), delta.clone());
        prop_assert_eq!(delta.mirror(), delta);
    }

    #[test]
    fn rotation_and_reduction_keep_invariants(b in word(4, 8), shift in 0i64..8, p in 2usize..4) {
        let r = analyze(&b, p).unwrap();
        for other in [cyclic_rotate(&b, shift), free_reduce(&b)] {
            let o = analyze(&other, p).unwrap();
            prop_assert_eq!((&o.h1_factors, o.b1, &o.d3, o.sl), (&r.h1_factors, r.b1, &r.d3, r.sl));
        }
    }
}
