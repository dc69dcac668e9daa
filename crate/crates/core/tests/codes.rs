use qrm_core::css_quantum::{
    coset_leaders, css_from_rm, encode_basis1, encode_basis2, hadamard_amplitude, quantum_table,
    LeaderCap,
};
use qrm_core::gf2::{BitVec, EnumerationCap};
use qrm_core::reed_muller::{
    check_dual_partition_orthogonality, check_nesting, partition, rm_code, rm_dual_spec,
    rm_generator, squaring_construct, RmSpec,
};
use qrm_core::Error;

const CAP: EnumerationCap = EnumerationCap::DEFAULT;

fn spec(r: i64, m: i64) -> RmSpec {
    RmSpec::new(r, m).unwrap()
}

#[test]
fn generator_rank_equals_dimension_formula() {
    for m in 0..=10 {
        for r in 0..=m {
            let s = spec(r, m);
            assert_eq!(rm_generator(s).unwrap().rank() as u64, s.k(), "{s}");
        }
    }
}

#[test]
fn consecutive_orders_nest() {
    for m in 1..=10 {
        for r in 0..m {
            assert!(check_nesting(spec(r, m), spec(r + 1, m)).unwrap());
        }
    }
}

#[test]
fn dual_specs_are_orthogonal_complements() {
    for m in 1..=10 {
        for r in 0..m {
            let s = spec(r, m);
            let d = rm_dual_spec(s);
            assert!(rm_generator(s)
                .unwrap()
                .is_orthogonal_to(&rm_generator(d).unwrap())
                .unwrap());
            assert_eq!(s.k() + d.k(), s.n());
        }
    }
}

#[test]
fn squaring_reproduces_next_length() {
    for m in 0..=6 {
        for r in 0..=m {
            let sq = squaring_construct(&partition(spec(r, m)).unwrap()).unwrap();
            let target = rm_code(spec(r, m + 1)).unwrap();
            assert!(sq.same_code(&target).unwrap(), "r={r} m={m}");
            assert_eq!(sq.distance(), target.distance());
        }
    }
}

#[test]
fn dual_partition_chains_are_orthogonal() {
    for m in 0..=6 {
        for r in 0..=m {
            assert!(
                check_dual_partition_orthogonality(r, m).unwrap(),
                "r={r} m={m}"
            );
        }
    }
}

#[test]
fn brute_force_distance_for_small_codes() {
    for m in 0..=10 {
        for r in 0..=m {
            let s = spec(r, m);
            if s.k() > 16 {
                continue;
            }
            let code = rm_code(s).unwrap();
            assert_eq!(
                code.min_weight_bruteforce(CAP).unwrap() as u64,
                s.d().unwrap(),
                "{s}"
            );
        }
    }
}

#[test]
fn quantum_k_matches_rank_computation() {
    for row in quantum_table(8).unwrap() {
        let code = css_from_rm(i64::from(row.r), i64::from(row.m)).unwrap();
        let c1 = code.c1_code().unwrap();
        let c2 = code.c1_dual_code().unwrap();
        let c2_perp = c2.generator().nullspace_generator().rank();
        let c1_perp = c1.generator().nullspace_generator().rank();
        assert_eq!((c2_perp - c1_perp) as u64, code.k(), "{code}");
        assert!(c2.is_subcode_of(&c1).unwrap());
        assert_eq!(code.d(), (1u64 << (row.m - row.r)).min(1 << (row.r + 1)));
    }
}

#[test]
fn css_requires_nested_dual() {
    for m in 1..=8 {
        for r in 0..=m {
            let result = css_from_rm(r, m);
            if m - r - 1 > r {
                assert!(
                    matches!(result, Err(Error::NotSelfDualNested { .. })),
                    "r={r} m={m}"
                );
            } else {
                assert!(result.is_ok(), "r={r} m={m}");
            }
        }
    }
}

#[test]
fn states_agree_under_hadamard_for_small_codes() {
    for (r, m) in [(1, 2), (1, 3), (2, 3), (2, 4)] {
        let code = css_from_rm(r, m).unwrap();
        let leaders = coset_leaders(&code, LeaderCap::default(), CAP).unwrap();
        assert_eq!(leaders.len() as u64, 1 << code.k());
        assert!(leaders[0].is_zero());
        let c1_size = 1i64 << code.c1().k();
        let n = code.n() as usize;
        for w in &leaders {
            let s1 = encode_basis1(&code, w, CAP).unwrap();
            let s2 = encode_basis2(&code, w, CAP).unwrap();
            assert_eq!(s1.len() as u64, 1 << code.c1().k());
            assert_eq!(s2.len() as u64, 1 << (code.n() - code.c1().k()));
            if n <= 8 {
                for x in 0u32..(1 << n) {
                    let u: BitVec = format!("{x:0n$b}").parse().unwrap();
                    let expected = if s2.sign(&u).is_some() { c1_size } else { 0 };
                    assert_eq!(hadamard_amplitude(&s1, &u), expected, "{code} w={w} u={u}");
                }
            } else {
                for u in s2.terms().keys() {
                    assert_eq!(hadamard_amplitude(&s1, u), c1_size);
                }
            }
        }
    }
}

#[test]
fn leaders_are_minimum_weight_in_their_coset() {
    let code = css_from_rm(2, 4).unwrap();
    let dual = code.c1_dual_code().unwrap();
    let dual_words: Vec<BitVec> = dual.codewords(CAP).unwrap().collect();
    let leaders = coset_leaders(&code, LeaderCap::default(), CAP).unwrap();
    let mut sorted = leaders.clone();
    sorted.sort();
    assert_eq!(leaders, sorted);
    for w in &leaders {
        let coset_min = dual_words
            .iter()
            .map(|v| v.xor(w))
            .min_by_key(|x| (x.weight(), x.clone()))
            .unwrap();
        assert_eq!(&coset_min, w);
    }
}

#[test]
fn same_coset_gives_same_basis2_state() {
    let code = css_from_rm(2, 4).unwrap();
    let dual = code.c1_dual_code().unwrap();
    let leaders = coset_leaders(&code, LeaderCap::default(), CAP).unwrap();
    let w = &leaders[7];
    let base = encode_basis2(&code, w, CAP).unwrap();
    for v in dual.codewords(CAP).unwrap().take(8) {
        let shifted = encode_basis2(&code, &w.xor(&v), CAP).unwrap();
        assert_eq!(shifted.terms(), base.terms());
    }
}
