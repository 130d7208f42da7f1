//! Brute-force cross-checks for the free-group quotient predicates and roots.

use proptest::prelude::*;
use tangle_core::group::{free_search_bound, EqualityVerdict, SurfacePresentation, Word};

// Independent reduction on plain strings: case-swapped neighbours cancel.
fn reduce(s: &str) -> String {
    let mut out: Vec<char> = Vec::new();
    for c in s.chars() {
        match out.last() {
            Some(&p) if p != c && p.eq_ignore_ascii_case(&c) => {
                out.pop();
            }
            _ => out.push(c),
        }
    }
    out.into_iter().collect()
}

fn inv(s: &str) -> String {
    s.chars()
        .rev()
        .map(|c| if c.is_ascii_lowercase() { c.to_ascii_uppercase() } else { c.to_ascii_lowercase() })
        .collect()
}

fn power(s: &str, n: i64) -> String {
    let base = if n < 0 { inv(s) } else { s.to_string() };
    reduce(&base.repeat(n.unsigned_abs() as usize))
}

fn brute_power_conj(x: &str, y: &str, k: &str, bound: i64) -> bool {
    (-bound..=bound).any(|n| reduce(&format!("{}{}{}", power(k, n), x, power(k, -n))) == reduce(y))
}

fn brute_double_coset(x: &str, y: &str, ki: &str, kj: &str, bound: i64) -> bool {
    let y = reduce(y);
    (-bound..=bound).any(|p| (-bound..=bound).any(|q| reduce(&format!("{}{}{}", power(ki, p), x, power(kj, q))) == y))
}

fn cyclic_len(s: &str) -> usize {
    Word::parse(s).unwrap().cyclic_reduction().len().max(1)
}

fn f2() -> SurfacePresentation {
    SurfacePresentation::new(1, 1).unwrap()
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

#[test]
fn frozen_brute_force_values() {
    let f = f2();
    // exhaustive |n| <= 10 finds no witness
    assert!(!brute_power_conj("a", "b", "ab", 10));
    assert_eq!(f.equal_mod_power_conj(&w("a"), &w("b"), &w("ab")).unwrap(), EqualityVerdict::NotEqual);
    // exhaustive |p|,|q| <= 10 finds no witness
    assert!(!brute_double_coset("b", "B", "a", "a", 10));
    assert_eq!(f.equal_double_coset(&w("b"), &w("B"), &w("a"), &w("a")).unwrap(), EqualityVerdict::NotEqual);
    assert!(!f.has_square_root(&w("ab")).unwrap());
    assert_eq!(f.primitive_root(&w("abab")).unwrap(), (w("ab"), 2));
}

/// Every word of length <= 3 over a,b,A,B squared never gives "ab".
#[test]
fn ab_has_no_square_root_by_enumeration() {
    let letters = ['a', 'A', 'b', 'B'];
    let mut words = vec![String::new()];
    for _ in 0..3 {
        let next: Vec<String> = words.iter().flat_map(|s| letters.iter().map(move |c| format!("{s}{c}"))).collect();
        words.extend(next);
    }
    assert!(words.iter().all(|s| reduce(&format!("{s}{s}")) != "ab"));
}

fn brute_root(k: &str) -> (String, u64) {
    // every root candidate is a cyclic subword of the cyclic reduction
    let kw = Word::parse(k).unwrap();
    let (u, c) = kw.cyclic_decomposition();
    let c = c.to_string();
    let mut best = (c.clone(), 1u64);
    for len in 1..=c.len() {
        for start in 0..c.len() {
            let cand: String = c.chars().cycle().skip(start).take(len).collect();
            for e in 1..=(c.len() / len) as u64 {
                if power(&cand, e as i64) == c && e > best.1 {
                    best = (cand.clone(), e);
                }
            }
        }
    }
    let u = u.to_string().replace('1', "");
    (reduce(&format!("{}{}{}", u, best.0, inv(&u))), best.1)
}

#[test]
fn primitive_root_exhaustive_to_length_eight() {
    let f = f2();
    let letters = ['a', 'A', 'b', 'B'];
    let mut layer = vec![String::new()];
    for _ in 0..8 {
        layer = layer
            .iter()
            .flat_map(|s| letters.iter().map(move |c| format!("{s}{c}")))
            .filter(|s| reduce(s) == *s)
            .collect();
        for k in &layer {
            let (root, e) = f.primitive_root(&w(k)).unwrap();
            let (broot, be) = brute_root(k);
            assert_eq!(e, be, "{k}");
            assert_eq!(root.pow(e as i64), w(k));
            assert_eq!(root.to_string(), broot, "{k}");
        }
    }
}

fn word_strategy(max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['a', 'A', 'b', 'B']), 0..=max)
        .prop_map(|v| reduce(&v.into_iter().collect::<String>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn power_conj_matches_brute_force(x in word_strategy(6), y in word_strategy(6), k in word_strategy(4), n in -3i64..=3) {
        let f = f2();
        // half the time make y a genuine conjugate
        let y = if n % 2 == 0 { reduce(&format!("{}{}{}", power(&k, n), x, power(&k, -n))) } else { y };
        let bound = 3 * free_search_bound(x.len() + 2 * k.len(), y.len() + 2 * k.len(), cyclic_len(&k));
        let brute = k.is_empty() && reduce(&x) == reduce(&y) || !k.is_empty() && brute_power_conj(&x, &y, &k, bound);
        let got = f.equal_mod_power_conj(&w(&x), &w(&y), &w(&k)).unwrap();
        prop_assert_eq!(got, EqualityVerdict::from_bool(brute));
    }

    #[test]
    fn double_coset_matches_brute_force(x in word_strategy(5), y in word_strategy(5), ki in word_strategy(3), kj in word_strategy(3), p in -2i64..=2, q in -2i64..=2) {
        let f = f2();
        let y = if (p + q) % 2 == 0 { reduce(&format!("{}{}{}", power(&ki, p), x, power(&kj, q))) } else { y };
        let slack = 2 * (ki.len() + kj.len());
        let bound = 3 * free_search_bound(x.len() + slack, y.len() + slack, cyclic_len(&ki).min(cyclic_len(&kj)));
        let brute = brute_double_coset(&x, &y, &ki, &kj, bound);
        let got = f.equal_double_coset(&w(&x), &w(&y), &w(&ki), &w(&kj)).unwrap();
        prop_assert_eq!(got, EqualityVerdict::from_bool(brute));
    }

    #[test]
    fn conjugacy_canonical_is_class_invariant(x in word_strategy(10), c in word_strategy(10)) {
        let f = f2();
        let y = reduce(&format!("{}{}{}", c, x, inv(&c)));
        prop_assert_eq!(f.conjugacy_canonical(&w(&x)).unwrap(), f.conjugacy_canonical(&w(&y)).unwrap());
    }

    #[test]
    fn power_conj_respects_kappa_conjugation(x in word_strategy(6), k in word_strategy(4)) {
        let f = f2();
        let kx = reduce(&format!("{}{}{}", k, x, inv(&k)));
        prop_assert!(f.equal_mod_power_conj(&w(&x), &w(&kx), &w(&k)).unwrap().is_equal());
        prop_assert_eq!(f.canonical_power_conj(&w(&x), &w(&k)).unwrap(), f.canonical_power_conj(&w(&kx), &w(&k)).unwrap());
    }

    #[test]
    fn canonical_double_coset_is_coset_invariant(x in word_strategy(5), ki in word_strategy(3), kj in word_strategy(3), p in -3i64..=3, q in -3i64..=3) {
        let f = f2();
        let y = reduce(&format!("{}{}{}", power(&ki, p), x, power(&kj, q)));
        prop_assert_eq!(
            f.canonical_double_coset(&w(&x), &w(&ki), &w(&kj)).unwrap(),
            f.canonical_double_coset(&w(&y), &w(&ki), &w(&kj)).unwrap()
        );
    }

    #[test]
    fn normal_form_idempotent(x in word_strategy(12)) {
        for p in [f2(), SurfacePresentation::torus(), SurfacePresentation::new(2, 0).unwrap()] {
            let alpha: Vec<u8> = p.generators().to_vec();
            if x.bytes().all(|b| alpha.contains(&b.to_ascii_lowercase())) {
                let once = p.normal_form(&w(&x)).unwrap();
                prop_assert_eq!(p.normal_form(&once).unwrap(), once.clone());
                prop_assert!(once.len() <= reduce(&x).len());
            }
        }
    }
}
