use braidsys_core::crossing::{crossing_matrix, permutation_equivalent};
use braidsys_core::garside::{braids_equal, is_identity, NormalForm};
use braidsys_core::invariants::{braid_invariants, system_invariants, BraidInvariantReport, SystemInvariantReport};
use braidsys_core::linalg::{determinant, rank, SquareMatrix};
use braidsys_core::moves::{
    canonical_key, euler_fission_check, euler_fuse, global_conjugate, hurwitz_act, hurwitz_move,
    hurwitz_move_on, HurwitzMove,
};
use braidsys_core::orbit::{hurwitz_orbit, replay, OrbitLimits, OrbitStatus};
use braidsys_core::system::BraidSystem;
use braidsys_core::{BraidWord, Permutation};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn word_in(m: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    proptest::collection::vec((1..m as i32, any::<bool>()), 0..=max_len).prop_map(move |v| {
        BraidWord::new(m, v.into_iter().map(|(i, p)| if p { i } else { -i }).collect()).unwrap()
    })
}

fn system_strategy() -> impl Strategy<Value = BraidSystem> {
    (2usize..=4, 2usize..=4).prop_flat_map(|(m, n)| {
        proptest::collection::vec(word_in(m, 5), n)
            .prop_map(move |comps| BraidSystem::new(m, comps).unwrap())
    })
}

fn nonidentity_system() -> impl Strategy<Value = BraidSystem> {
    system_strategy().prop_filter("components must be non-trivial", |s| {
        s.components().iter().all(|c| !is_identity(c))
    })
}

// Rank and determinant by Gaussian elimination over the rationals.
fn rational_rank_det(m: &SquareMatrix) -> (usize, BigInt) {
    let n = m.size();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(m.get(i, j).clone())).collect())
        .collect();
    let mut rank = 0;
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            det = BigRational::zero();
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            det = -det;
        }
        let pivot = a[rank][col].clone();
        det *= &pivot;
        for r in rank + 1..n {
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
    }
    if rank < n {
        det = BigRational::zero();
    }
    assert!(det.is_integer());
    (rank, det.to_integer())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_matches_rational_elimination(rows in (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, n), n)
    })) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = SquareMatrix::from_i64_rows(&refs).unwrap();
        let (r, d) = rational_rank_det(&m);
        prop_assert_eq!(rank(&m), r);
        prop_assert_eq!(determinant(&m), d);
    }

    #[test]
    fn braid_relations_act_identically(s in system_strategy(), pick in 0usize..8) {
        let n = s.len();
        if n >= 3 {
            let i = (pick % (n - 2)) as i32 + 1;
            let lhs = BraidWord::new(n, vec![i, i + 1, i]).unwrap();
            let rhs = BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap();
            let a = hurwitz_act(&s, &lhs).unwrap();
            let b = hurwitz_act(&s, &rhs).unwrap();
            prop_assert!(a.braids_equal(&b));
        }
        if n >= 4 {
            // far commutation
            let far = BraidWord::new(n, vec![1, 3]).unwrap();
            let swapped = BraidWord::new(n, vec![3, 1]).unwrap();
            prop_assert!(hurwitz_act(&s, &far).unwrap().braids_equal(&hurwitz_act(&s, &swapped).unwrap()));
        }
    }

    #[test]
    fn acting_by_a_word_and_its_inverse(s in system_strategy(), seed in any::<u64>()) {
        let n = s.len();
        let letters: Vec<i32> = (0..6)
            .map(|k| {
                let x = (seed >> (k * 8)) as i32 & 0xff;
                let i = x % (n as i32 - 1) + 1;
                if x & 0x80 == 0 { i } else { -i }
            })
            .collect();
        let beta = BraidWord::new(n, letters).unwrap();
        let there = hurwitz_act(&s, &beta).unwrap();
        let back = hurwitz_act(&there, &beta.inverse()).unwrap();
        prop_assert!(back.braids_equal(&s));
    }

    #[test]
    fn shadows_follow_the_action(s in system_strategy(), i in 1usize..4, forward in any::<bool>()) {
        let n = s.len();
        let mv = if forward { HurwitzMove::forward((i - 1) % (n - 1) + 1) } else { HurwitzMove::inverse((i - 1) % (n - 1) + 1) };
        let moved = hurwitz_move(&s, mv).unwrap();
        let perms: Vec<Permutation> = s.components().iter().map(|c| c.permutation()).collect();
        let moved_perms: Vec<Permutation> = moved.components().iter().map(|c| c.permutation()).collect();
        prop_assert_eq!(hurwitz_move_on(&perms, mv).unwrap(), moved_perms);
        let sums: Vec<i64> = s.components().iter().map(|c| c.exponent_sum()).collect();
        let moved_sums: Vec<i64> = moved.components().iter().map(|c| c.exponent_sum()).collect();
        prop_assert_eq!(hurwitz_move_on(&sums, mv).unwrap(), moved_sums);
        let nfs = canonical_key(&s);
        prop_assert_eq!(hurwitz_move_on(&nfs, mv).unwrap(), canonical_key(&moved));
    }

    #[test]
    fn nontrivial_components_stay_nontrivial(s in nonidentity_system(), picks in proptest::collection::vec((0usize..3, any::<bool>()), 1..8)) {
        let mut cur = s.clone();
        for (i, forward) in picks {
            let index = i % (cur.len() - 1) + 1;
            let mv = if forward { HurwitzMove::forward(index) } else { HurwitzMove::inverse(index) };
            cur = hurwitz_move(&cur, mv).unwrap();
            prop_assert!(cur.normal_forms().iter().all(|nf| !nf.is_identity()));
        }
    }

    #[test]
    fn global_conjugation_moves_the_trace(s in system_strategy(), a_seed in proptest::collection::vec((1i32..4, any::<bool>()), 0..5)) {
        let m = s.degree();
        let letters = a_seed.into_iter().map(|(i, p)| {
            let i = (i - 1) % (m as i32 - 1) + 1;
            if p { i } else { -i }
        }).collect();
        let a = BraidWord::new(m, letters).unwrap();
        let g = global_conjugate(&s, &a).unwrap();
        prop_assert!(braids_equal(&g.trace(), &s.trace().conjugate(&a).unwrap()).unwrap());
        prop_assert_eq!(
            system_invariants(&g).invariants.charpoly_multiset,
            system_invariants(&s).invariants.charpoly_multiset
        );
    }

    #[test]
    fn fusion_then_fission_round_trips(s in nonidentity_system(), l in 1usize..4, q in 1usize..4) {
        let n = s.len();
        let l = (l - 1) % (n - 1) + 1;
        let q = (q - 1) % (n - l) + 1;
        let (fused, tau_check) = euler_fuse(&s, l, q).unwrap();
        prop_assert_eq!(fused.len(), n - q);
        let pieces = &s.components()[l - 1..l + q];
        let whole = &fused.components()[l - 1];
        prop_assert_eq!(euler_fission_check(whole, pieces).unwrap(), tau_check);
    }

    #[test]
    fn canonical_keys_decide_equality(s in system_strategy(), t in system_strategy()) {
        let same_shape = s.degree() == t.degree() && s.len() == t.len();
        if same_shape {
            let equal = s.components().iter().zip(t.components()).all(|(a, b)| braids_equal(a, b).unwrap());
            prop_assert_eq!(canonical_key(&s) == canonical_key(&t), equal);
        }
        let scrambled = BraidSystem::new(
            s.degree(),
            s.components().iter().map(|c| NormalForm::from_word(c).to_word()).collect(),
        ).unwrap();
        prop_assert_eq!(canonical_key(&scrambled), canonical_key(&s));
    }

    #[test]
    fn orbit_witnesses_replay(s in system_strategy(), picks in proptest::collection::vec((0usize..3, any::<bool>()), 0..4)) {
        let mut target = s.clone();
        for (i, forward) in picks {
            let index = i % (s.len() - 1) + 1;
            let mv = if forward { HurwitzMove::forward(index) } else { HurwitzMove::inverse(index) };
            target = hurwitz_move(&target, mv).unwrap();
        }
        let r = hurwitz_orbit(&s, OrbitLimits { max_states: 20_000, ..OrbitLimits::default() }, Some(&target), None).unwrap();
        prop_assert_eq!(r.status, OrbitStatus::TargetFound);
        let w = r.witness.unwrap();
        prop_assert!(w.len() <= 3);
        prop_assert!(replay(&s, &w).unwrap().braids_equal(&target));
    }

    #[test]
    fn reports_round_trip_through_json(b in word_in(5, 10), s in system_strategy()) {
        let rep = braid_invariants(&b);
        let back: BraidInvariantReport = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        prop_assert_eq!(back, rep);
        let rep = system_invariants(&s);
        let back: SystemInvariantReport = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        prop_assert_eq!(back, rep);
        let back: BraidSystem = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn conjugate_crossing_matrices_match(b in word_in(4, 8), a in word_in(4, 4)) {
        let conj = b.conjugate(&a).unwrap();
        let (r1, c1) = braidsys_core::pure_power_matrix(&b);
        let (r2, c2) = braidsys_core::pure_power_matrix(&conj);
        prop_assert_eq!(r1, r2);
        prop_assert!(permutation_equivalent(c1.matrix(), c2.matrix()).unwrap().is_some());
        // the raw matrix is additive over concatenation
        let doubled = b.product(&b).unwrap();
        let once = crossing_matrix(&b);
        let twice = crossing_matrix(&doubled);
        let pb = b.permutation();
        for i in 0..4 {
            for j in 0..4 {
                let expected = once.get(i, j) + once.get(pb.apply(i), pb.apply(j));
                prop_assert_eq!(twice.get(i, j), &expected);
            }
        }
    }
}

#[test]
fn stabilization_keeps_the_essential_core() {
    let s = BraidSystem::parse(4, &["1,-2,3", "-3", "2", "-1"]).unwrap();
    let up = braidsys_core::moves::stabilize(&s).unwrap();
    let (a, b) = (system_invariants(&s).invariants, system_invariants(&up).invariants);
    assert_eq!(a.essential.core, b.essential.core);
    assert_eq!(a.degree_plus_length_mod3, b.degree_plus_length_mod3);
    assert_eq!(up.degree(), 5);
    assert_eq!(up.len(), 6);
}
