use proptest::prelude::*;

use leaperforge::a1::a1_tour_unchecked;
use leaperforge::ab23::{corner_check, CornerPermutation};
use leaperforge::ab25::decompose;
use leaperforge::board::legal_moves;
use leaperforge::format::{from_json, from_text, to_json, to_text};
use leaperforge::multidim::{grid_ham_path, FloorLabel};
use leaperforge::solver::{grid_ham_path_between, is_ham_path, two_factor};
use leaperforge::{merge_all, verify_tour, BoardSpec, Coord, EdgeSet, MoveSpec, Symmetry, Tour};

fn board_and_move() -> impl Strategy<Value = (Vec<u32>, u32, u32)> {
    (prop::collection::vec(1u32..9, 2..4), 1u32..5, 1u32..5)
}

fn permutation() -> impl Strategy<Value = CornerPermutation> {
    Just((0u8..12).collect::<Vec<u8>>()).prop_shuffle().prop_map(|v| {
        let mut a = [0u8; 12];
        a.copy_from_slice(&v);
        CornerPermutation(a)
    })
}

fn small_a1_tour() -> impl Strategy<Value = Tour> {
    prop_oneof![Just(14u32), Just(18), Just(22), Just(28)].prop_map(|n| a1_tour_unchecked(2, n).unwrap())
}

fn symmetry() -> impl Strategy<Value = Symmetry> {
    (any::<bool>(), any::<bool>(), any::<bool>())
        .prop_map(|(transpose, flip_x, flip_y)| Symmetry { transpose, flip_x, flip_y })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moves_are_symmetric_and_bounded((dims, a, b) in board_and_move(), seed in any::<u64>()) {
        let board = BoardSpec::new(dims.clone()).unwrap();
        let mv = MoveSpec::new(a, b).unwrap();
        let c: Vec<i64> = dims.iter().enumerate().map(|(i, &d)| ((seed >> (8 * i)) % d as u64) as i64).collect();
        let c = Coord(c);
        let nb = legal_moves(&c, &board, mv).unwrap();
        let d = dims.len();
        prop_assert!(nb.len() <= 4 * d * (d - 1));
        prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
        for q in &nb {
            prop_assert!(legal_moves(q, &board, mv).unwrap().contains(&c));
        }
    }

    #[test]
    fn interior_points_have_eight_moves(a in 1u32..5, b in 1u32..5) {
        prop_assume!(a != b);
        let n = 2 * a.max(b) + 1;
        let board = BoardSpec::square(n, 2).unwrap();
        let m = a.max(b) as i64;
        let nb = legal_moves(&Coord::xy(m, m), &board, MoveSpec::new(a, b).unwrap()).unwrap();
        prop_assert_eq!(nb.len(), 8);
    }

    #[test]
    fn tours_alternate_parity(t in small_a1_tour()) {
        let parity: Vec<i64> = t.coords().map(|c| c.0.iter().sum::<i64>().rem_euclid(2)).collect();
        prop_assert!(parity.len() % 2 == 0);
        for i in 0..parity.len() {
            prop_assert_ne!(parity[i], parity[(i + 1) % parity.len()]);
        }
    }

    #[test]
    fn symmetric_images_stay_tours(t in small_a1_tour(), s in symmetry()) {
        let u = t.transformed(s);
        prop_assert!(verify_tour(&u).is_valid_tour());
        prop_assert_eq!(u.len(), t.len());
    }

    #[test]
    fn formats_round_trip(t in small_a1_tour(), s in symmetry()) {
        let t = t.transformed(s);
        let a = from_text(&to_text(&t)).unwrap();
        let b = from_json(&to_json(&t).unwrap()).unwrap();
        prop_assert_eq!(a.vertices(), t.vertices());
        prop_assert_eq!(b.vertices(), t.vertices());
        prop_assert_eq!(to_text(&b), to_text(&t));
    }

    #[test]
    fn permutation_algebra(f in permutation(), g in permutation(), h in permutation(), k in 0u32..30) {
        prop_assert!(f.compose(&g).is_permutation());
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        prop_assert!(f.compose(&CornerPermutation::identity()) == f);
        prop_assert_eq!(f.pow(k + 1), f.pow(k).compose(&f));
    }

    #[test]
    fn lap_condition_depends_on_n_mod_4(f in permutation(), n in 11u32..60) {
        let n = 2 * n;
        prop_assert_eq!(corner_check(&f, n), corner_check(&f, n + 4));
        if n % 4 == 2 {
            prop_assert_eq!(corner_check(&f, n), f.pow(4).is_identity());
        }
    }

    #[test]
    fn decompositions_are_exact(k in 0u32..400, p in 2u32..30, q in 2u32..30) {
        let reachable = (0..=k / p).any(|x| (k - x * p) % q == 0);
        match decompose(k, &[p, q]) {
            Some(parts) => {
                prop_assert!(reachable);
                prop_assert_eq!(parts.iter().sum::<u32>(), k);
                prop_assert!(parts.iter().all(|x| *x == p || *x == q));
                let fewest = (0..=k / p).filter(|x| (k - x * p) % q == 0).map(|x| x + (k - x * p) / q).min().unwrap();
                prop_assert_eq!(parts.len() as u32, fewest);
            }
            None => prop_assert!(!reachable),
        }
    }

    #[test]
    fn snake_paths_cover_the_grid(dims in prop::collection::vec(1u32..6, 1..5)) {
        let path = grid_ham_path(&dims);
        let total: usize = dims.iter().map(|&d| d as usize).product();
        prop_assert_eq!(path.len(), total);
        let mut seen = std::collections::HashSet::new();
        for p in &path {
            prop_assert!(p.iter().zip(&dims).all(|(x, d)| x < d));
            prop_assert!(seen.insert(p.clone()));
        }
        for w in path.windows(2) {
            let dist: u32 = w[0].iter().zip(&w[1]).map(|(a, b)| a.abs_diff(*b)).sum();
            prop_assert_eq!(dist, 1);
        }
    }

    #[test]
    fn grid_paths_respect_colouring(w in 1u32..7, h in 1u32..7, s in any::<(u32, u32)>(), e in any::<(u32, u32)>()) {
        let (s, e) = ((s.0 % w, s.1 % h), (e.0 % w, e.1 % h));
        if let Some(p) = grid_ham_path_between(w, h, s, e) {
            prop_assert!(is_ham_path(w, h, s, e, &p));
            let colour = |c: (u32, u32)| (c.0 + c.1) % 2;
            if (w * h) % 2 == 0 {
                prop_assert!(colour(s) != colour(e));
            } else {
                prop_assert!(colour(s) == 0 && colour(e) == 0);
            }
        }
    }

    #[test]
    fn residues_are_canonical(p in prop::collection::vec(0u32..200, 1..4), a in 1u32..7) {
        let r = FloorLabel::new(p.clone()).residue(a);
        prop_assert!(r.p.iter().all(|&x| x < a));
        prop_assert!(r.p.iter().zip(&p).all(|(x, y)| (y - x) % a == 0));
        prop_assert_eq!(r.residue(a), r.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn merged_covers_are_tours(w in 3u32..7, h in 3u32..7) {
        let (w, h) = (2 * w, 2 * h);
        let board = BoardSpec::rect(w, h).unwrap();
        let mv = MoveSpec::new(2, 1).unwrap();
        if let Some(cs) = two_factor(&board, mv).unwrap() {
            prop_assert!(cs.is_valid() && cs.is_spanning());
            if let Ok(t) = merge_all(&cs, &EdgeSet::new()) {
                prop_assert!(verify_tour(&t).is_valid_tour());
                prop_assert_eq!(t.len(), (w * h) as usize);
            }
        }
    }
}
