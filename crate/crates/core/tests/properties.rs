#![allow(clippy::needless_range_loop)]

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use sturm_meander::{
    enumerate_sturm, parse_permutation, render_svg, suspend, window_z, z_matrix, AttractorModel,
    IndexBase, MeanderWindow, SturmPermutation, SvgStyle,
};

fn family() -> &'static [SturmPermutation] {
    static FAMILY: OnceLock<Vec<SturmPermutation>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        (1..=11)
            .step_by(2)
            .flat_map(|n| enumerate_sturm(n).unwrap())
            .collect()
    })
}

fn any_sturm() -> impl Strategy<Value = SturmPermutation> {
    (0..family().len()).prop_map(|i| family()[i].clone())
}

fn sturm_up_to_nine() -> impl Strategy<Value = SturmPermutation> {
    let count = family().iter().take_while(|p| p.len() <= 9).count();
    (0..count).prop_map(|i| family()[i].clone())
}

/// Arbitrary permutation of odd size fixing `1` and `n`.
fn endpoint_fixing() -> impl Strategy<Value = Vec<usize>> {
    (1usize..=8)
        .prop_map(|h| 2 * h + 1)
        .prop_flat_map(|n| {
            Just((2..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(move |mid| (n, mid))
        })
        .prop_map(|(n, mid)| {
            let mut map = vec![1];
            map.extend(mid);
            map.push(n);
            map
        })
}

/// Arbitrary permutation of odd size.
fn any_odd_permutation() -> impl Strategy<Value = Vec<usize>> {
    (0usize..=7)
        .prop_map(|h| 2 * h + 1)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(map in any_odd_permutation()) {
        let p = SturmPermutation::from_map(map).unwrap();
        for base in [IndexBase::One, IndexBase::Zero] {
            prop_assert_eq!(parse_permutation(&p.to_text(base), base).unwrap(), p.clone());
        }
    }

    #[test]
    fn morse_recursion_matches_oracle(map in any_odd_permutation()) {
        let p = SturmPermutation::from_map(map.clone()).unwrap();
        let oracle = common::morse(&map);
        let morse = p.morse_indices();
        prop_assert_eq!(morse.as_slice(), &oracle[1..]);
    }

    #[test]
    fn meander_test_matches_semicircles(map in endpoint_fixing()) {
        let p = SturmPermutation::from_map(map.clone()).unwrap();
        prop_assert_eq!(p.is_meander(), common::is_meander_geometric(&map));
        prop_assert_eq!(p.is_sturm(), common::is_sturm(&map));
    }

    #[test]
    fn crossing_number_is_winding(p in any_sturm(), seed in any::<(usize, usize, usize)>()) {
        let n = p.len();
        let (j, k, l) = (seed.0 % n + 1, seed.1 % n + 1, seed.2 % n + 1);
        prop_assume!(j != k);
        let c = p.crossing_number(j, k, l).unwrap();
        prop_assert_eq!(c.value, common::winding(p.map(), j, k, l));
        prop_assert_eq!(c.value, -p.crossing_number(k, j, l).unwrap().value);
    }

    #[test]
    fn crossing_number_additive(p in any_sturm(), seed in any::<[usize; 4]>()) {
        let n = p.len();
        let [a, b, c, l] = seed.map(|s| s % n + 1);
        prop_assume!(a != b && b != c && a != c);
        let ab = p.crossing_number(a, b, l).unwrap().value;
        let bc = p.crossing_number(b, c, l).unwrap().value;
        prop_assert_eq!(ab + bc, p.crossing_number(a, c, l).unwrap().value);
    }

    #[test]
    fn klein_group_preserves_sturm(p in any_sturm()) {
        let tau = p.apply_tau().unwrap();
        let kappa = p.apply_kappa().unwrap();
        prop_assert!(tau.is_sturm() && kappa.is_sturm());
        prop_assert_eq!(tau.apply_tau().unwrap(), p.clone());
        prop_assert_eq!(kappa.apply_kappa().unwrap(), p.clone());
        prop_assert_eq!(tau.apply_kappa().unwrap(), kappa.apply_tau().unwrap());
        let orbit = p.klein_orbit().unwrap();
        prop_assert!(matches!(orbit.size(), 1 | 2 | 4));
    }

    #[test]
    fn zero_matrix_matches_oracle(p in any_sturm()) {
        let z = z_matrix(&p).unwrap();
        let oracle = common::zero_numbers(p.map());
        let n = p.len();
        for j in 1..=n {
            for k in 1..=n {
                prop_assert_eq!(z.get(j, k), oracle[j][k]);
            }
        }
    }

    #[test]
    fn connections_match_oracle(p in any_sturm()) {
        let model = AttractorModel::build(&p).unwrap();
        let oracle = common::Oracle::new(p.map());
        prop_assert_eq!(model.connections(), &oracle.edges);
        for &(j, k) in model.connections() {
            prop_assert!(model.morse().get(j) > model.morse().get(k));
        }
    }

    #[test]
    fn target_sets_and_extremes_match_oracle(p in any_sturm()) {
        let model = AttractorModel::build(&p).unwrap();
        let oracle = common::Oracle::new(p.map());
        for o in (1..=p.len()).filter(|&o| model.morse().get(o) > 0) {
            for k in 0..model.morse().get(o) {
                for (sign, plus) in [(sturm_meander::Sign::Minus, false), (sturm_meander::Sign::Plus, true)] {
                    let set = model.target_set(o, k, sign).unwrap();
                    prop_assert_eq!(&set, &oracle.target(o, k, plus));
                    if set.is_empty() {
                        continue;
                    }
                    let m = model.minimax(o, k, sign).unwrap();
                    prop_assert_eq!(m.closest_x0, oracle.closest(o, &set, false));
                    prop_assert_eq!(m.closest_x1, oracle.closest(o, &set, true));
                    prop_assert_eq!(m.distant_x0, oracle.most_distant(o, &set, false));
                    prop_assert_eq!(m.distant_x1, oracle.most_distant(o, &set, true));
                }
            }
        }
    }

    #[test]
    fn windows_are_faithful(p in any_sturm(), seed in any::<(usize, usize)>()) {
        let n = p.len();
        prop_assume!(n >= 3);
        let len = 2 + seed.0 % (n - 1);
        let first = 1 + seed.1 % (n + 1 - len);
        let win = MeanderWindow::from_permutation(&p, first, len).unwrap();
        prop_assert_eq!(window_z(&win).unwrap(), z_matrix(&p).unwrap().block(first, len));
    }

    #[test]
    fn suspension_matches_oracle(p in sturm_up_to_nine()) {
        let s = suspend(&p).unwrap().suspended;
        let oracle = common::suspension(p.map());
        prop_assert_eq!(s.map(), oracle.as_slice());
        prop_assert!(common::is_sturm(s.map()));
    }

    #[test]
    fn svg_is_deterministic_and_complete(p in any_sturm(), scale in 5u32..80) {
        let style = SvgStyle { scale, show_morse: scale % 2 == 0 };
        let a = render_svg(&p, &style).unwrap();
        prop_assert_eq!(&a, &render_svg(&p, &style).unwrap());
        prop_assert_eq!(a.matches("class=\"crossing\"").count(), p.len());
        prop_assert_eq!(a.matches("class=\"arc\"").count(), p.len() - 1);
    }
}

#[test]
fn meander_test_exhaustive_up_to_nine() {
    for n in [3, 5, 7, 9] {
        let mut mid: Vec<usize> = (2..n).collect();
        let mut checked = 0;
        loop {
            let mut map = vec![1];
            map.extend(&mid);
            map.push(n);
            let p = SturmPermutation::from_map(map.clone()).unwrap();
            assert_eq!(
                p.is_meander(),
                common::is_meander_geometric(&map),
                "{map:?}"
            );
            checked += 1;
            // next permutation in lexicographic order
            let Some(i) = mid.windows(2).rposition(|w| w[0] < w[1]) else {
                break;
            };
            let j = mid.iter().rposition(|&x| x > mid[i]).unwrap();
            mid.swap(i, j);
            mid[i + 1..].reverse();
        }
        assert_eq!(checked, (1..=n - 2).product::<usize>());
    }
}

#[test]
fn eleven_crossings_pinned_count() {
    let backtracked = enumerate_sturm(11).unwrap();
    assert!(backtracked.iter().all(|p| common::is_sturm(p.map())));
    assert_eq!(backtracked.len(), 175);
}
