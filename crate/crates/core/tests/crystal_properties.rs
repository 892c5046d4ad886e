//! Randomized checks of the realization-independent machinery on finite types.

use demazure_core::crystal::character::demazure_character;
use demazure_core::crystal::demazure::{character_of, demazure_enumerate, demazure_membership};
use demazure_core::crystal::key::{keys, KeyConfig};
use demazure_core::crystal::{is_extremal, orbit_word, weyl_act_word, Crystal, CrystalGraph};
use demazure_core::type_a::{self, ls_key_left, ls_key_right};
use demazure_core::weyl::{bruhat_leq, word_reduce};
use demazure_core::{CartanDatum, Node};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, 1..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_words_act_like_their_letters(letters in prop::collection::vec(1i64..=3, 0..8)) {
        let d = CartanDatum::finite_a(3).unwrap();
        let w = word_reduce(&d, &letters).unwrap();
        prop_assert!(w.length() <= letters.len());
        prop_assert_eq!(w.length() % 2, letters.len() % 2);
        let c = type_a::crystal(3).unwrap();
        let hw = c.highest_of_shape(&[2, 1]);
        for b in CrystalGraph::generate(&c, &hw, None).vertices.iter().step_by(5) {
            prop_assert_eq!(weyl_act_word(&c, &letters, b), weyl_act_word(&c, w.letters(), b));
        }
    }

    #[test]
    fn keys_are_extremal_and_bracket_the_vertex(sh in shape(), pick in 0usize..1000) {
        let c = type_a::crystal(3).unwrap();
        let hw = c.highest_of_shape(&sh);
        let all = CrystalGraph::generate(&c, &hw, None).vertices;
        let b = &all[pick % all.len()];
        let (l, r) = keys(&c, &hw, b, &KeyConfig::default()).unwrap();
        let lambda = c.weight(&hw);
        prop_assert!(is_extremal(&c, &lambda, &l) && is_extremal(&c, &lambda, &r));
        prop_assert_eq!(&l, &ls_key_left(b).unwrap());
        prop_assert_eq!(&r, &ls_key_right(b).unwrap());
        let wl = orbit_word(&c, &hw, &l).unwrap();
        let wr = orbit_word(&c, &hw, &r).unwrap();
        prop_assert!(bruhat_leq(c.datum(), &wl, &wr).unwrap());
        prop_assert!(demazure_membership(&c, &hw, b, &wr, &KeyConfig::default()).unwrap());
        prop_assert!(demazure_enumerate(&c, &hw, wr.letters()).contains(b));
    }

    #[test]
    fn demazure_characters_count_demazure_crystals(sh in shape(), letters in prop::collection::vec(1i64..=3, 0..7)) {
        let c = type_a::crystal(3).unwrap();
        let hw = c.highest_of_shape(&sh);
        let set = demazure_enumerate(&c, &hw, &letters);
        let ch = demazure_character(c.datum(), &c.weight(&hw), &letters).unwrap();
        prop_assert_eq!(ch, character_of(&c, &set));
    }

    #[test]
    fn demazure_crystals_grow_along_words(sh in shape(), letters in prop::collection::vec(1i64..=3, 1..7)) {
        let c = type_a::crystal(3).unwrap();
        let hw = c.highest_of_shape(&sh);
        let short: Vec<Node> = letters[1..].to_vec();
        let small = demazure_enumerate(&c, &hw, &short);
        let big = demazure_enumerate(&c, &hw, &letters);
        prop_assert!(small.is_subset(&big));
    }
}
