use proptest::prelude::*;
use qrm_core::gf2::{
    macwilliams_transform, weight_enumerator, BitMatrix, BitVec, EnumerationCap, LinearCode,
};
use qrm_core::reed_muller::{rm_code, RmSpec};
use std::collections::HashSet;

fn matrix(rows: usize, cols: usize, bits: &[bool]) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, bits[i * cols + j]);
        }
    }
    m
}

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (0..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c).prop_map(move |bits| matrix(r, c, &bits))
    })
}

proptest! {
    #[test]
    fn rref_preserves_rank_and_row_space(m in arb_matrix(8, 70)) {
        let (rank, rref) = m.rank_and_rref();
        prop_assert_eq!(rref.rank(), rank);
        prop_assert!(m.same_row_space(&rref).unwrap());
        prop_assert!(rank <= m.num_rows().min(m.num_cols()));
    }

    #[test]
    fn dual_of_dual_is_the_original(m in arb_matrix(8, 70)) {
        let dual = m.nullspace_generator();
        prop_assert_eq!(dual.rank(), dual.num_rows());
        prop_assert_eq!(dual.num_rows() + m.rank(), m.num_cols());
        prop_assert!(m.is_orthogonal_to(&dual).unwrap());
        let back = dual.nullspace_generator();
        prop_assert!(back.same_row_space(&m).unwrap());
    }

    #[test]
    fn enumeration_is_complete_and_orthogonal(m in arb_matrix(7, 20)) {
        let code = LinearCode::from_spanning_rows(&m);
        let dual = code.dual();
        let words: HashSet<BitVec> = code.codewords(EnumerationCap::DEFAULT).unwrap().collect();
        prop_assert_eq!(words.len(), 1usize << code.k());
        for w in &words {
            for h in dual.generator().rows() {
                prop_assert!(!w.dot(&h));
            }
        }
    }

    #[test]
    fn macwilliams_matches_enumerated_dual(m in arb_matrix(8, 12)) {
        let code = LinearCode::from_spanning_rows(&m);
        let dual = code.dual();
        let w = weight_enumerator(&code, EnumerationCap::DEFAULT).unwrap();
        let w_dual = weight_enumerator(&dual, EnumerationCap::DEFAULT).unwrap();
        prop_assert_eq!(macwilliams_transform(&w, code.k()).unwrap(), w_dual.clone());
        prop_assert_eq!(macwilliams_transform(&w_dual, dual.k()).unwrap(), w);
    }

    #[test]
    fn bitvec_text_round_trip(bits in prop::collection::vec(any::<bool>(), 0..200)) {
        let s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        let v: BitVec = s.parse().unwrap();
        prop_assert_eq!(v.to_string(), s);
        prop_assert_eq!(v.weight(), bits.iter().filter(|&&b| b).count());
    }

    #[test]
    fn rm_codewords_have_weight_at_least_d(m in 1i64..=6, r_frac in 0.0f64..1.0, seed in any::<u64>()) {
        let r = ((m + 1) as f64 * r_frac).floor() as i64;
        let spec = RmSpec::new(r.min(m), m).unwrap();
        let code = rm_code(spec).unwrap();
        // One random codeword from a random message.
        let mut w = BitVec::zeros(code.n());
        for (i, row) in code.generator().rows().enumerate() {
            if seed.rotate_left(i as u32) & 1 == 1 {
                w.xor_assign(&row);
            }
        }
        prop_assert!(code.contains(&w));
        if !w.is_zero() {
            prop_assert!(w.weight() as u64 >= spec.d().unwrap());
        }
    }
}
