use lapmult_core::spectrum::{complement_charpoly, join_charpoly};
use lapmult_core::structure::components;
use lapmult_core::{
    canonical_form, classify, from_graph6, is_isomorphic, laplacian_spectrum, to_graph6, Class,
    Graph,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn relabeled(g: &Graph, seed: u64) -> Graph {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    g.permuted(&perm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trace_and_zero_multiplicity(g in graph(10)) {
        let (p, s) = laplacian_spectrum(&g);
        // -c_{n-1} is the trace, which is twice the edge count
        let n = g.order();
        prop_assert_eq!(-p.coeff(n - 1), BigInt::from(2 * g.edge_count()));
        prop_assert_eq!(s.multiplicity(0), components(&g).count());
        prop_assert_eq!(s.to_charpoly(), p);
    }

    #[test]
    fn spectrum_and_form_are_relabeling_invariant(g in graph(9), seed in any::<u64>()) {
        let h = relabeled(&g, seed);
        prop_assert_eq!(laplacian_spectrum(&g).0, laplacian_spectrum(&h).0);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn polynomial_formulas(g in graph(7), h in graph(6)) {
        let pg = laplacian_spectrum(&g).0;
        let ph = laplacian_spectrum(&h).0;
        prop_assert_eq!(complement_charpoly(&pg), laplacian_spectrum(&g.complement()).0);
        prop_assert_eq!(join_charpoly(&pg, &ph), laplacian_spectrum(&g.join(&h)).0);
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn class_implies_shape(g in graph(9)) {
        if g.order() >= 6 && components(&g).count() == 1 {
            let r = classify(&g).unwrap();
            if let Class::Member(_) = r.class {
                prop_assert_eq!(r.k_max, g.order() - 3);
                prop_assert!(r.distinct_count == 3 || r.distinct_count == 4);
                prop_assert!(r.matched_family.is_some());
            }
        }
    }
}
