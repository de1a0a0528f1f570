use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ocrlab::classify::{is_selfdual, selfdual_closure, sl_component, EmeryNode, RbPart, SlPart};
use ocrlab::decompose::{nb_word_problem, NbElement};
use ocrlab::io::{parse_semigroup, to_canonical_json, to_pretty_json};
use ocrlab::terms::{parse_relation, parse_term, random_term, OmegaTerm, Relation};
use ocrlab::varieties::satisfies;
use ocrlab::verify::{random_cr, random_nocr};
use ocrlab::{is_stable_quasiorder, OrderedSemigroup};

fn term(seed: u64, letters: usize, depth: usize) -> OmegaTerm {
    random_term(&mut ChaCha8Rng::seed_from_u64(seed), letters, depth)
}

fn all_assignments(n: usize, vars: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(vars as u32)).map(move |mut code| {
        (0..vars)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(seed in any::<u64>()) {
        let t = term(seed, 4, 4);
        let shown = t.to_string();
        let back = parse_term(&shown).unwrap();
        prop_assert_eq!(back.to_string(), shown);
        prop_assert_eq!(back.content(), t.content());
    }

    #[test]
    fn splits_rebuild_the_term(seed in any::<u64>(), sample in 0u64..1000) {
        let t = term(seed, 3, 3);
        let a = random_cr(6, sample);
        let vars = t.content().iter().max().unwrap() + 1;
        for split in [t.zero_split(), t.one_split()] {
            let rebuilt = split.rebuild();
            prop_assert_eq!(rebuilt.content(), t.content());
            for s in all_assignments(a.size(), vars).take(200) {
                prop_assert_eq!(rebuilt.eval(a.sgp(), &s).unwrap(), t.eval(a.sgp(), &s).unwrap());
            }
        }
        let z = t.zero_split();
        prop_assert!(z.prefix.is_none_or(|p| !p.content().contains(&z.marker)));
        let o = t.one_split();
        prop_assert!(o.suffix.is_none_or(|s| !s.content().contains(&o.marker)));
    }

    #[test]
    fn samples_are_stable_and_reproducible(seed in any::<u64>()) {
        let a = random_cr(8, seed);
        prop_assert!(a.sgp().is_completely_regular());
        prop_assert!(is_stable_quasiorder(a.sgp(), a.order()));
        prop_assert_eq!(&random_cr(8, seed), &a);
        prop_assert_eq!(random_nocr(8, seed), random_nocr(8, seed));
    }

    #[test]
    fn file_roundtrip(seed in any::<u64>()) {
        let a = random_cr(8, seed);
        prop_assert_eq!(&parse_semigroup(&to_canonical_json(&a)).unwrap(), &a);
        prop_assert_eq!(&parse_semigroup(&to_pretty_json(&a)).unwrap(), &a);
        let twice = to_canonical_json(&parse_semigroup(&to_canonical_json(&a)).unwrap());
        prop_assert_eq!(twice, to_canonical_json(&a));
    }

    #[test]
    fn dual_flips_inequalities(seed in any::<u64>(), tseed in any::<u64>()) {
        let a = random_cr(6, seed);
        let r = Relation::less_eq(term(tseed, 2, 2), term(tseed ^ 1, 2, 2));
        let flipped = Relation::less_eq(r.rhs.clone(), r.lhs.clone());
        prop_assert_eq!(
            satisfies(&a, &r).unwrap().holds,
            satisfies(&a.dual(), &flipped).unwrap().holds
        );
        let back = a.dual().dual();
        prop_assert_eq!(back.order(), a.order());
    }

    #[test]
    fn selfdual_closure_is_a_closure(s1 in any::<u64>(), s2 in any::<u64>()) {
        let gens = vec![random_nocr(6, s1), random_nocr(6, s2)];
        let closed = selfdual_closure(&gens).unwrap();
        prop_assert!(closed.len() >= gens.len());
        prop_assert_eq!(&closed[..gens.len()], &gens[..]);
        prop_assert!(is_selfdual(&closed).unwrap());
        prop_assert_eq!(selfdual_closure(&closed).unwrap().len(), closed.len());
        let duals: Vec<OrderedSemigroup> = gens.iter().map(OrderedSemigroup::dual).collect();
        prop_assert_eq!(is_selfdual(&gens).unwrap(), is_selfdual(&duals).unwrap());
        let sl = sl_component(&gens[0]).unwrap();
        prop_assert_eq!(sl_component(&duals[0]).unwrap(), sl.dual());
    }

    #[test]
    fn nb_words_agree_with_evaluation(s1 in any::<u64>(), s2 in any::<u64>()) {
        let u = term(s1, 3, 3);
        let v = term(s2, 3, 3);
        prop_assert_eq!(nb_word_problem(&u, &v), NbElement::eval(&u) == NbElement::eval(&v));
        prop_assert!(nb_word_problem(&u, &u));
    }
}

fn lattice_axioms<T: Copy + PartialEq + std::fmt::Debug>(
    all: &[T],
    join: impl Fn(T, T) -> T,
    meet: impl Fn(T, T) -> T,
    leq: impl Fn(T, T) -> bool,
) {
    for &a in all {
        assert_eq!(join(a, a), a);
        assert_eq!(meet(a, a), a);
        for &b in all {
            assert_eq!(join(a, b), join(b, a));
            assert_eq!(meet(a, b), meet(b, a));
            assert_eq!(join(a, meet(a, b)), a);
            assert_eq!(meet(a, join(a, b)), a);
            assert_eq!(leq(a, b), join(a, b) == b);
            for &c in all {
                assert_eq!(join(a, join(b, c)), join(join(a, b), c));
                assert_eq!(meet(a, meet(b, c)), meet(meet(a, b), c));
            }
        }
    }
}

#[test]
fn coordinate_lattices() {
    lattice_axioms(&EmeryNode::all(), EmeryNode::join, EmeryNode::meet, EmeryNode::leq);
    lattice_axioms(&SlPart::ALL, SlPart::join, SlPart::meet, SlPart::leq);
    lattice_axioms(&RbPart::ALL, RbPart::join, RbPart::meet, RbPart::leq);
    for s in SlPart::ALL {
        assert_eq!(s.dual().dual(), s);
    }
}

#[test]
fn relation_text_roundtrip() {
    for text in ["x^w y^w x^w <= x^w", "x y z = x z y", "(x y)^(w+1) = x y", "x^(w-1) x = x^w"] {
        let r = parse_relation(text).unwrap();
        assert_eq!(parse_relation(&r.to_string()).unwrap(), r);
    }
}
