use proptest::prelude::*;
use rankfour::families::{params_closed_form, FamilyId};
use rankfour::geometry::Eps;
use rankfour::graph::io::{from_graph6, to_graph6};
use rankfour::graph::{check_srg, Graph, SrgParams};
use rankfour::orbitals::PairPartition;
use rankfour::schemes::symbolic::grassmann_array;
use rankfour::schemes::{srg_union_criterion, tensor_from_int_array, IntersectionTensor};

fn prime_power() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16])
}

fn odd_prime_power() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7, 9, 11, 13])
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn closed_forms_are_feasible(q in prime_power(), n in 3u32..7, m in 2u32..4, oq in odd_prime_power(), plus in any::<bool>()) {
        let eps = if plus { Eps::Plus } else { Eps::Minus };
        let ids = [
            FamilyId::Nu { n, q },
            FamilyId::No { m, q: oq, eps },
            FamilyId::DualPolarSp6Dist3 { q },
        ];
        for id in ids {
            let p = params_closed_form(&id).unwrap();
            prop_assert!(p.is_feasible(), "{} {}", id, p);
            prop_assert_eq!(p.v as u128, id.order());
            let c = p.complement();
            prop_assert!(c.is_feasible());
        }
    }

    #[test]
    fn family_ids_round_trip(n in 3u32..9, q in prime_power(), class in 1usize..4, d in 2u32..9) {
        for id in [
            FamilyId::Nu { n, q },
            FamilyId::Flags { q, class },
            FamilyId::Hamming { d, i: class as u32 },
            FamilyId::Grassmann { n: n + 3, q },
            FamilyId::DualPolarSp6 { q },
        ] {
            prop_assert_eq!(id.to_string().parse::<FamilyId>().unwrap(), id);
        }
    }

    #[test]
    fn grassmann_arrays_give_schemes(n in 6u32..10, q in prop::sample::select(vec![2i64, 3, 4, 5])) {
        let (b, c) = grassmann_array(n, q).unwrap();
        let t = tensor_from_int_array(&b, &c).unwrap();
        prop_assert!(t.audit().is_ok());
        // v is the Gaussian binomial [n choose 3]_q
        let g = |m: u32| -> i128 { ((q as i128).pow(m) - 1) / (q as i128 - 1) };
        let v = g(n) * g(n - 1) * g(n - 2) / (g(1) * g(2) * g(3));
        prop_assert_eq!(t.v.to_integer(), v.into());
        let u = srg_union_criterion(&t, 2).unwrap();
        prop_assert!(!u.strongly_regular);
    }

    #[test]
    fn hamming_arrays_match_counts(d in 2usize..6) {
        let e = d as i64 - 1;
        let from_array = tensor_from_int_array(&[3 * e, 2 * e, e], &[1, 2, 3]).unwrap();
        let words: Vec<[usize; 3]> = (0..d.pow(3)).map(|x| [x % d, x / d % d, x / (d * d)]).collect();
        let p = PairPartition::from_fn(words.len(), |x, y| {
            words[x].iter().zip(&words[y]).filter(|(a, b)| a != b).count()
        }).unwrap();
        prop_assert_eq!(IntersectionTensor::from(&p.intersection_numbers().unwrap()), from_array);
    }

    #[test]
    fn complement_of_srg_is_srg(n in 5usize..9) {
        // triangular graphs T(n) = J(n, 2)
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut edges = Vec::new();
        for (i, x) in pairs.iter().enumerate() {
            for (j, y) in pairs.iter().enumerate().skip(i + 1) {
                if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(pairs.len(), &edges).unwrap();
        let p = check_srg(&g).unwrap();
        let v = (n * (n - 1) / 2) as u64;
        prop_assert_eq!(p, SrgParams::new(v, 2 * (n as u64 - 2), n as u64 - 2, 4));
        prop_assert_eq!(check_srg(&g.complement()).unwrap(), p.complement());
    }
}
