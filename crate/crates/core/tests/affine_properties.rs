//! Randomized checks on partitions, cores and multisegments.

use demazure_core::affine::cores::{is_es_core, transpose_core};
use demazure_core::affine::partition::{Multipartition, Partition};
use demazure_core::affine::symbol::{is_e_core_by, Modulus, CORE_TESTS};
use demazure_core::binfinity::{orbit_membership, pi_embed, preimages, Multisegment};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted")
    })
}

fn bipartition() -> impl Strategy<Value = Multipartition> {
    (partition(4, 5), partition(4, 5)).prop_map(|(a, b)| vec![a, b])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn core_tests_agree(p in partition(8, 9), e in 2usize..=5) {
        let v = is_e_core_by(&p, e, CORE_TESTS[0]);
        for t in CORE_TESTS {
            prop_assert_eq!(is_e_core_by(&p, e, t), v, "{:?}", t);
        }
        prop_assert_eq!(is_e_core_by(&p.transpose(), e, CORE_TESTS[0]), v);
    }

    #[test]
    fn embedding_round_trips(m in bipartition(), a in -3i64..4, b in -3i64..4) {
        let s = [a, b];
        let ms = pi_embed(&m, &s).unwrap();
        prop_assert_eq!(ms.len(), m.iter().map(Partition::len).sum::<usize>());
        prop_assert!(preimages(&ms, &s).contains(&m));
        let text = ms.to_string();
        prop_assert_eq!(text.parse::<Multisegment>().unwrap(), ms.clone());
        let json = serde_json::to_string(&ms).unwrap();
        prop_assert_eq!(serde_json::from_str::<Multisegment>(&json).unwrap(), ms);
    }

    #[test]
    fn accepted_multisegments_come_from_cores(m in bipartition(), gap in 0i64..5) {
        let s = [0, gap];
        let ms = pi_embed(&m, &s).unwrap();
        match orbit_membership(&ms, Modulus::Infinite, &s) {
            Ok(got) => {
                prop_assert!(is_es_core(&got.lambda, Modulus::Infinite, &got.charges).unwrap());
                prop_assert_eq!(pi_embed(&got.lambda, &got.charges).unwrap(), ms);
            }
            Err(_) => prop_assert!(!is_es_core(&m, Modulus::Infinite, &s).unwrap()),
        }
    }

    #[test]
    fn transposed_cores_are_cores(m in bipartition(), a in 0i64..3, b in 0i64..3) {
        let s = [a.min(b), a.max(b)];
        if is_es_core(&m, Modulus::Finite(3), &s).unwrap() {
            let (t, ts) = transpose_core(&m, Modulus::Finite(3), &s).unwrap();
            prop_assert!(is_es_core(&t, Modulus::Finite(3), &ts).unwrap());
        }
    }
}
