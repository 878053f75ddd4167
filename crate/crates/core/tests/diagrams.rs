mod common;

use bmw::algebra::verify::random_word;
use bmw::connector::enumerate_connectors;
use bmw::diagram::{canonical_word, close_diagram, reduce_term, trace};
use bmw::{AlgebraElement, Connector, Engine, RingElem, SliceWord};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn reduce_sorted(word: &SliceWord) -> Vec<(RingElem, Connector)> {
    let mut v = reduce_term(&RingElem::one(), word);
    v.sort_by(|a, b| a.1.cmp(&b.1));
    v
}

#[test]
fn traced_connector_matches_letter_stacking() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = r.gen_range(1..=5);
        let len = r.gen_range(0..=10);
        let word = random_word(&mut r, n, len, true);
        let d = trace(&word, n);
        let (c, loops) = word_connector(&word);
        assert_eq!(d.connector, c, "{word}");
        assert_eq!(d.loop_count(), loops, "{word}");
        // reduction keeps the Brauer shadow: one term survives e, the stacked connector
        let x = Engine::new().normalize(&word);
        let img = x.brauer_image();
        assert_eq!(img.terms().count(), 1, "{word}");
        assert_eq!(
            img.coeff(&c),
            bmw::DeltaPoly::monomial(loops as u32, 1.into()),
            "{word}"
        );
    }
}

#[test]
fn rewrites_leave_reduction_unchanged() {
    let mut r = rng(12);
    for _ in 0..150 {
        let n = r.gen_range(2..=4);
        let len = r.gen_range(0..=7);
        let (a, b) = rewrite_instance(&mut r, n, len, true);
        assert_eq!(reduce_sorted(&a), reduce_sorted(&b), "{a} vs {b}");
    }
}

#[test]
fn rewrites_leave_writhe_unchanged() {
    let mut r = rng(13);
    for _ in 0..500 {
        let n = r.gen_range(2..=4);
        let len = r.gen_range(0..=8);
        let (a, b) = rewrite_instance(&mut r, n, len, true);
        assert_eq!(trace(&a, n).writhe(), trace(&b, n).writhe(), "{a} vs {b}");
    }
}

#[test]
fn canonical_words_are_fixed_points() {
    for n in 0..=4 {
        for c in enumerate_connectors(n) {
            let w = canonical_word(&c);
            assert_eq!(
                reduce_term(&RingElem::one(), &w),
                vec![(RingElem::one(), c.clone())],
                "{c}: {w}"
            );
            let d = trace(&w, n);
            assert!(d.is_descending() && d.self_crossings() == 0 && d.loop_count() == 0);
            assert_eq!(w.crossing_count(), c.interlocking_pairs());
        }
    }
}

#[test]
fn closure_values() {
    assert_eq!(close_diagram(&SliceWord::empty(0)), RingElem::one());
    assert_eq!(close_diagram(&SliceWord::empty(1)), RingElem::delta());
    assert_eq!(close_diagram(&w(2, "g1")), RingElem::lambda_delta(-1, 1));
    assert_eq!(close_diagram(&w(2, "g1^-1")), RingElem::lambda_delta(1, 1));
    // n unlinked circles
    assert_eq!(close_diagram(&SliceWord::empty(3)), RingElem::delta_pow(3));
}

#[test]
fn epsilon_absorbs_into_e_m() {
    let eng = Engine::new();
    let mut r = rng(14);
    let m = 2;
    let e_m = eng.normalize(&SliceWord::e(m + 1, m).unwrap());
    for _ in 0..50 {
        let len = r.gen_range(0..=6);
        let t = random_word(&mut r, m + 1, len, true);
        let eps = eng.widen(&eng.epsilon(&t).unwrap(), m + 1).unwrap();
        let lhs = eng.multiply(&eps, &e_m).unwrap();
        assert_eq!(
            lhs,
            eng.normalize(&t.concat(&SliceWord::e(m + 1, m).unwrap()).unwrap()),
            "{t}"
        );
        // the partial trace satisfies E_m x E_m = tr(x) E_m for x on m strands
        let x = random_word(&mut r, m, len, true);
        let tr = eng
            .widen(&eng.close_last_strand(&x).unwrap(), m + 1)
            .unwrap();
        let x_wide = eng.normalize(&x.widen(m + 1).unwrap());
        let sandwich = eng
            .multiply_all(&[e_m.clone(), x_wide, e_m.clone()])
            .unwrap();
        assert_eq!(sandwich, eng.multiply(&tr, &e_m).unwrap(), "{x}");
    }
}

#[test]
fn closing_the_last_strand() {
    let eng = Engine::new();
    let id1 = AlgebraElement::identity(1);
    assert_eq!(
        eng.close_last_strand(&SliceWord::empty(2)).unwrap(),
        id1.scale(&RingElem::delta())
    );
    assert_eq!(
        eng.close_last_strand(&w(2, "g1")).unwrap(),
        id1.scale(&RingElem::lambda_pow(-1))
    );
    assert_eq!(eng.epsilon(&SliceWord::empty(2)).unwrap(), id1);
}

#[test]
fn out_of_range_indices_are_rejected() {
    let err = SliceWord::parse(2, "g5").unwrap_err().to_string();
    assert!(err.contains("index 5 out of range for n=2"), "{err}");
    let err = SliceWord::parse(3, "g1 e2 g0").unwrap_err().to_string();
    assert!(err.contains("offset 6"), "{err}");
    assert!(SliceWord::parse(3, "g1 x2").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_text_round_trips(seed in any::<u64>(), n in 2usize..=5, len in 0usize..=10) {
        let word = random_word(&mut rng(seed), n, len, true);
        prop_assert_eq!(SliceWord::parse(n, &word.to_string()).unwrap(), word);
    }

    #[test]
    fn inverse_word_cancels(seed in any::<u64>(), n in 2usize..=4, len in 0usize..=5) {
        let word = random_word(&mut rng(seed), n, len, false);
        let both = word.concat(&word.inverse()).unwrap();
        prop_assert_eq!(reduce_sorted(&both), vec![(RingElem::one(), Connector::identity(n))]);
    }
}
