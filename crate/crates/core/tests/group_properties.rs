use std::collections::{BTreeSet, HashMap, VecDeque};

use proptest::prelude::*;
use rd_core::group::{CayleyAction, LengthFunction};
use rd_core::{Element, GroupHandle, GroupSpec};

const FAMILIES: [&str; 6] = ["zd:2", "free:2", "heisenberg", "lamplighter", "raag:path:3", "raag:cycle:4"];

fn group(s: &str) -> GroupHandle {
    GroupHandle::new(GroupSpec::parse(s).unwrap()).unwrap()
}

fn word(g: &GroupHandle, picks: &[usize]) -> Element {
    let gens = g.generators();
    picks
        .iter()
        .fold(g.identity(), |acc, &i| g.multiply(&acc, &gens[i % gens.len()]))
}

fn picks() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(fam in 0usize..6, a in picks(), b in picks(), c in picks()) {
        let g = group(FAMILIES[fam]);
        let (x, y, z) = (word(&g, &a), word(&g, &b), word(&g, &c));
        let e = g.identity();
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
        prop_assert_eq!(g.multiply(&x, &e), x.clone());
        prop_assert_eq!(g.multiply(&e, &x), x.clone());
        prop_assert_eq!(g.multiply(&x, &g.invert(&x)), e.clone());
        prop_assert_eq!(g.invert(&g.invert(&x)), x);
    }

    #[test]
    fn length_axioms(fam in 0usize..6, a in picks(), b in picks()) {
        let g = group(FAMILIES[fam]);
        let (x, y) = (word(&g, &a), word(&g, &b));
        prop_assert_eq!(g.word_length(&g.identity()).unwrap(), 0);
        prop_assert_eq!(g.word_length(&g.invert(&x)).unwrap(), g.word_length(&x).unwrap());
        let xy = g.word_length(&g.multiply(&x, &y)).unwrap();
        prop_assert!(xy <= g.word_length(&x).unwrap() + g.word_length(&y).unwrap());
        prop_assert!(g.word_length(&x).unwrap() as usize <= a.len());
    }

    #[test]
    fn raag_normal_form_ignores_commuting_swaps(a in picks()) {
        // in raag(path a-b-c), b commutes with everything: moving it to the
        // front gives the same element
        let g = group("raag:path:3");
        let gens = g.generators();
        let letters: Vec<usize> = a.iter().map(|i| i % gens.len()).collect();
        let (bs, rest): (Vec<usize>, Vec<usize>) = letters.iter().partition(|&&i| i / 2 == 1);
        let moved: Vec<usize> = bs.into_iter().chain(rest).collect();
        prop_assert_eq!(word(&g, &letters), word(&g, &moved));
    }
}

fn heis_matrix(x: [i64; 3]) -> [[i64; 3]; 3] {
    [[1, x[0], x[2]], [0, 1, x[1]], [0, 0, 1]]
}

fn matmul(a: [[i64; 3]; 3], b: [[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

#[test]
fn heisenberg_matches_matrix_product() {
    let g = group("heisenberg");
    let ball = g.enumerate_ball(3).unwrap();
    for x in ball.elements() {
        for y in ball.elements() {
            let (Element::Heisenberg(a), Element::Heisenberg(b)) = (x, y) else {
                unreachable!()
            };
            let Element::Heisenberg(p) = g.multiply(x, y) else {
                unreachable!()
            };
            assert_eq!(heis_matrix(p), matmul(heis_matrix(*a), heis_matrix(*b)));
        }
    }
    let a = g.parse_word("a").unwrap();
    let b = g.parse_word("b").unwrap();
    let (Element::Heisenberg(ab), Element::Heisenberg(ba)) = (g.multiply(&a, &b), g.multiply(&b, &a)) else {
        unreachable!()
    };
    assert_eq!((ab[0], ab[1]), (ba[0], ba[1]));
    assert_eq!((ab[2] - ba[2]).abs(), 1);
}

#[test]
fn heisenberg_center_has_length_four() {
    // BFS over unipotent matrices
    let gens = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]].map(heis_matrix);
    let start = heis_matrix([0, 0, 0]);
    let target = heis_matrix([0, 0, 1]);
    let mut dist = HashMap::from([(start, 0u32)]);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        if m == target {
            break;
        }
        for s in gens {
            let next = matmul(m, s);
            if !dist.contains_key(&next) {
                dist.insert(next, dist[&m] + 1);
                queue.push_back(next);
            }
        }
    }
    let g = group("heisenberg");
    assert_eq!(dist[&target], 4);
    assert_eq!(g.word_length(&Element::Heisenberg([0, 0, 1])).unwrap(), 4);
}

/// Lamplighter elements acting on (lit lamps, cursor) states.
fn lamplighter_state(letters: &[&str]) -> (BTreeSet<i64>, i64) {
    let mut lamps = BTreeSet::new();
    let mut cursor = 0i64;
    for l in letters {
        match *l {
            "a" => {
                if !lamps.remove(&cursor) {
                    lamps.insert(cursor);
                }
            }
            "t" => cursor += 1,
            "t'" => cursor -= 1,
            _ => unreachable!(),
        }
    }
    (lamps, cursor)
}

#[test]
fn lamplighter_matches_state_machine() {
    let g = group("lamplighter");
    let sequences: [&[&str]; 4] = [
        &["a", "t"],
        &["t", "a", "t'", "t'", "a"],
        &["t'", "t'", "a", "t", "a", "t", "t", "t", "a"],
        &["a", "t", "a", "t'", "a"],
    ];
    for seq in sequences {
        let (lamps, pos) = lamplighter_state(seq);
        let text: String = seq.concat();
        let element = g.parse_word(&text).unwrap();
        assert_eq!(
            element,
            Element::Lamplighter {
                lamps: lamps.into_iter().collect(),
                pos
            },
            "{text}"
        );
    }
    let x = Element::Lamplighter { lamps: vec![0], pos: 1 };
    assert_eq!(g.invert(&x), Element::Lamplighter { lamps: vec![-1], pos: -1 });
}

#[test]
fn ball_lengths_match_closed_forms() {
    for s in ["zd:3", "free:3", "raag:path:3", "raag:cycle:5"] {
        let g = group(s);
        let ball = g.enumerate_ball(4).unwrap();
        for (x, &len) in ball.elements().iter().zip(ball.lengths()) {
            assert_eq!(g.word_length(x).unwrap(), len, "{s}: {x}");
        }
    }
}

#[test]
fn sub_balls_are_prefixes() {
    for s in FAMILIES {
        let g = group(s);
        let big = g.enumerate_ball(5).unwrap();
        let small = g.enumerate_ball(4).unwrap();
        assert_eq!(&big.elements()[..small.len()], small.elements(), "{s}");
        let growth = big.growth();
        assert!(growth.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(growth[0], 1);
    }
}

#[test]
fn growth_is_submultiplicative() {
    for s in FAMILIES {
        let gamma = group(s).growth(8).unwrap();
        for m in 0..=4 {
            for n in 0..=4 {
                assert!(gamma[m + n] <= gamma[m] * gamma[n], "{s}: {m}+{n}");
            }
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn lattice_growth_matches_l1_ball_counts() {
    for d in 1..=3u64 {
        let gamma = group(&format!("zd:{d}")).growth(6).unwrap();
        for n in 0..=6u64 {
            let closed: u64 = (0..=d).map(|k| (1 << k) * binomial(d, k) * binomial(n, k)).sum();
            assert_eq!(gamma[n as usize], closed, "d={d} n={n}");
        }
    }
}

#[test]
fn word_length_dominates_action_length() {
    for s in ["zd:2", "free:2", "raag:path:3"] {
        let g = group(s);
        let act = CayleyAction::new(&g, 8).unwrap();
        let p = g.parse_word("ab").unwrap();
        let orbit = LengthFunction::Action {
            action: &act,
            basepoint: p,
        };
        let word = LengthFunction::Word(&g);
        let scale = g
            .generators()
            .iter()
            .map(|s| orbit.eval(s).unwrap())
            .max()
            .unwrap();
        for x in g.enumerate_ball(3).unwrap().elements() {
            let ol = orbit.eval(x).unwrap();
            assert!(ol <= word.eval(x).unwrap() * scale, "{s}: {x}");
            assert_eq!(orbit.eval(&g.invert(x)).unwrap(), ol);
        }
    }
}
