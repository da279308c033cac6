//! Randomised invariants, checked against the permutation oracle.

use std::collections::HashSet;

use atilde::hecke::{hr_embed, HeckeElement};
use atilde::tower::embed;
use atilde::{AffinePermutation, Element, FiniteElement, Generator, Rank, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word_strategy(
    ranks: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = Word> {
    ranks.prop_flat_map(move |n| {
        prop::collection::vec(0..=n, 0..=max_len).prop_map(move |ks| {
            let rank = Rank::new(n).unwrap();
            Word::new(
                rank,
                ks.into_iter()
                    .map(|k| Generator::from_index(rank, k))
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn word_pair(
    ranks: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = (Word, Word)> {
    ranks.prop_flat_map(move |n| {
        let one = move || {
            prop::collection::vec(0..=n, 0..=max_len).prop_map(move |ks| {
                let rank = Rank::new(n).unwrap();
                Word::new(
                    rank,
                    ks.into_iter()
                        .map(|k| Generator::from_index(rank, k))
                        .collect(),
                )
                .unwrap()
            })
        };
        (one(), one())
    })
}

fn perm(w: &Word) -> AffinePermutation {
    AffinePermutation::from_word(w)
}

/// Longest reduced prefix plus one more letter, if the word is long enough.
fn reduced_prefix_plus_one(w: &Word) -> Option<Word> {
    let letters = w.letters();
    (1..=letters.len()).find_map(|k| {
        let prefix = Word::new(w.rank(), letters[..k].to_vec()).unwrap();
        (!prefix.is_reduced()).then_some(prefix)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduced_iff_length_matches(w in word_strategy(2..=6, 16)) {
        let l = perm(&w).length();
        prop_assert!(l <= w.len());
        prop_assert_eq!(w.is_reduced(), l == w.len());
    }

    #[test]
    fn parse_format_round_trip(w in word_strategy(2..=9, 20)) {
        prop_assert_eq!(Word::parse(&w.to_string(), w.rank()).unwrap(), w);
    }

    #[test]
    fn rotation_preserves_reducedness(w in word_strategy(2..=6, 16), steps in -7i64..7) {
        let r = w.rotate(steps);
        prop_assert_eq!(r.len(), w.len());
        prop_assert_eq!(r.is_reduced(), w.is_reduced());
        prop_assert_eq!(perm(&r).length(), perm(&w).length());
    }

    #[test]
    fn hat_partner_deletion(w in word_strategy(2..=5, 18)) {
        match reduced_prefix_plus_one(&w) {
            None => prop_assert_eq!(w.hat_partner().unwrap(), None),
            Some(v) => {
                let j = v.hat_partner().unwrap().expect("non-reduced word has a partner");
                let cut = v.without_positions(&[j, v.len() - 1]);
                prop_assert_eq!(perm(&cut), perm(&v));
            }
        }
    }

    #[test]
    fn permutation_is_homomorphism((u, v) in word_pair(2..=6, 12)) {
        prop_assert_eq!(perm(&u.concat(&v).unwrap()), perm(&u).compose(&perm(&v)));
    }

    #[test]
    fn canonical_form_is_reduced_and_equal(w in word_strategy(2..=6, 18)) {
        let e = Element::canonicalize(&w);
        let cw = e.word();
        prop_assert!(cw.is_reduced());
        prop_assert_eq!(perm(&cw), perm(&w));
        prop_assert_eq!(Element::canonicalize(&cw), e.clone());
        prop_assert_eq!(cw.affine_count(), e.affine_length());
    }

    #[test]
    fn canonical_text_and_json_round_trip(w in word_strategy(2..=6, 18)) {
        let e = Element::canonicalize(&w);
        prop_assert_eq!(Element::parse_canonical(&e.to_canonical_string(), w.rank()).unwrap(), e.clone());
        let text = serde_json::to_string(&e.to_json()).unwrap();
        let back = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Element::from_json(&back, w.rank()).unwrap(), e);
    }

    #[test]
    fn left_mul_is_an_involution(w in word_strategy(2..=6, 16), k in 0usize..=6) {
        let e = Element::canonicalize(&w);
        let s = Generator::from_index(w.rank(), k % w.rank().generator_count());
        let se = e.left_mul(s);
        prop_assert_eq!(se.left_mul(s), e.clone());
        prop_assert_eq!(se.length().abs_diff(e.length()), 1);
        prop_assert_eq!(e.has_left_descent(s), se.length() < e.length());
        prop_assert_eq!(e.right_mul(s).right_mul(s), e);
    }

    #[test]
    fn multiplication_and_inverse_match_oracle((u, v) in word_pair(2..=5, 12)) {
        let eu = Element::canonicalize(&u);
        let ev = Element::canonicalize(&v);
        let uv = eu.mul(&ev).unwrap();
        prop_assert_eq!(perm(&uv.word()), perm(&u).compose(&perm(&v)));
        prop_assert!(eu.mul(&eu.inverse()).unwrap().is_identity());
        prop_assert_eq!(perm(&eu.inverse().word()), perm(&u).inverse());
        // affine length is subadditive and satisfies the reverse inequality
        let (lu, lv, luv) = (eu.affine_length(), ev.affine_length(), uv.affine_length());
        prop_assert!(luv <= lu + lv);
        prop_assert!(lu.abs_diff(lv) <= luv);
    }

    #[test]
    fn descent_sandwich(w in word_strategy(2..=6, 18)) {
        let e = Element::canonicalize(&w);
        let x = Element::new(atilde::AffineBlock::empty(w.rank()), e.finite().clone()).unwrap();
        let rx: HashSet<Generator> = x.right_descents().into_iter().collect();
        let rw: HashSet<Generator> = e.right_descents().into_iter().collect();
        prop_assert!(rx.is_subset(&rw));
        prop_assert!(rw.iter().all(|s| rx.contains(s) || *s == Generator::Affine));
        for s in w.rank().generators() {
            prop_assert_eq!(e.has_right_descent(s), perm(&e.word()).has_right_descent(s));
        }
    }

    #[test]
    fn finite_canonical_form(w in (2usize..=6).prop_flat_map(|n| prop::collection::vec(1..=n, 0..20).prop_map(move |v| (n, v)))) {
        let (n, ks) = w;
        let rank = Rank::new(n).unwrap();
        let word = Word::new(rank, ks.into_iter().map(Generator::Sigma).collect()).unwrap();
        let x = FiniteElement::canonicalize(&word).unwrap();
        let xw = x.word();
        prop_assert_eq!(xw.len(), perm(&xw).length());
        prop_assert_eq!(perm(&xw), perm(&word));
        let (h, p) = x.peel_h();
        prop_assert!(p.is_in_parabolic());
        prop_assert_eq!(h.to_finite().mul(&p).unwrap(), x.clone());
        prop_assert_eq!(h.length() + p.length(), x.length());
        prop_assert_eq!(x.is_extremal(), (h.r == 1 && h.i == 0) || (h.i >= 1 && h.r <= n));
    }

    #[test]
    fn embedding_is_homomorphism((u, v) in word_pair(2..=4, 10)) {
        let eu = Element::canonicalize(&u);
        let ev = Element::canonicalize(&v);
        let lhs = embed(&eu.mul(&ev).unwrap());
        let rhs = embed(&eu).mul(&embed(&ev)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn hecke_word(w: &Word) -> HeckeElement<i64> {
    let mut h = HeckeElement::one(w.rank());
    for &g in w.letters().iter().rev() {
        h = h.left_mul_gen(g).unwrap();
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hecke_specialises_to_group_ring((u, v) in word_pair(2..=3, 6)) {
        let eu = Element::canonicalize(&u);
        let ev = Element::canonicalize(&v);
        let prod = HeckeElement::<i64>::basis(eu.clone()).mul(&HeckeElement::basis(ev.clone())).unwrap();
        let at_one = prod.eval_at_one();
        let nonzero: Vec<_> = at_one.iter().filter(|(_, c)| **c != 0).collect();
        prop_assert_eq!(nonzero.len(), 1);
        prop_assert_eq!(nonzero[0], (&eu.mul(&ev).unwrap(), &1i64));
    }

    #[test]
    fn hecke_product_is_associative_with_unit((u, v) in word_pair(2..=3, 5), k in 0usize..4) {
        let a = HeckeElement::<i64>::basis(Element::canonicalize(&u));
        let b = HeckeElement::<i64>::basis(Element::canonicalize(&v));
        let c = HeckeElement::<i64>::generator(u.rank(), Generator::from_index(u.rank(), k % u.rank().generator_count())).unwrap();
        let one = HeckeElement::<i64>::one(u.rank());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(one.mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn degree_bound_for_generator_products(w in word_strategy(2..=3, 8)) {
        let h = hecke_word(&w);
        for (_, c) in h.terms() {
            prop_assert!(c.max_degree().unwrap() <= w.len() as i32);
        }
    }

    #[test]
    fn wide_coefficients_agree(w in word_strategy(2..=3, 8)) {
        let mut big = HeckeElement::<BigInt>::one(w.rank());
        for &g in w.letters().iter().rev() {
            big = big.left_mul_gen(g).unwrap();
        }
        prop_assert_eq!(big.to_string(), hecke_word(&w).to_string());
    }

    #[test]
    fn hr_embed_is_homomorphism((u, v) in word_pair(2..=2, 5)) {
        let a = hecke_word(&u);
        let b = hecke_word(&v);
        let lhs = hr_embed(&a.mul(&b).unwrap()).unwrap();
        let rhs = hr_embed(&a).unwrap().mul(&hr_embed(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
