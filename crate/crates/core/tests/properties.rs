use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;
use resreg_core::graph::{double_graph, lexicographic_k2};
use resreg_core::linalg::{laplacian_pinv, one_inverse_schur, resistance_from_one_inverse, ratio};
use resreg_core::resistance::{closed_form_resistance, resistance_matrix, ClosedForm};
use resreg_core::{Graph, Rational, RationalMatrix};

/// Connected graphs on 2..=max_n vertices: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let pairs = n * (n - 1) / 2;
        (parents, prop::collection::vec(any::<bool>(), pairs)).prop_map(move |(parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1));
            let others = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(extra)
                .filter_map(|(e, keep)| keep.then_some(e));
            let edges: BTreeSet<(usize, usize)> = tree.chain(others).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn without_edge(g: &Graph, edge: (usize, usize)) -> Graph {
    Graph::new(g.order(), g.edges().filter(|&e| e != edge)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn penrose_identities(g in connected_graph(8)) {
        let l = g.laplacian();
        let x = laplacian_pinv(&g).unwrap();
        prop_assert_eq!(&(&(&l * &x) * &l), &l);
        prop_assert_eq!(&(&(&x * &l) * &x), &x);
        prop_assert!((&l * &x).is_symmetric());
        prop_assert!((&x * &l).is_symmetric());
        let n = g.order() as i64;
        let projector = RationalMatrix::from_fn(g.order(), g.order(), |i, j| {
            let jn = ratio(1, n);
            if i == j { Rational::one() - jn } else { -jn }
        });
        prop_assert_eq!(&l * &x, projector);
    }

    #[test]
    fn resistance_is_a_metric(g in connected_graph(8)) {
        let r = resistance_matrix(&g).unwrap();
        let n = g.order();
        prop_assert!(r.is_symmetric());
        for i in 0..n {
            prop_assert!(r[(i, i)].is_zero());
            for j in 0..n {
                if i != j {
                    prop_assert!(r[(i, j)] > Rational::zero());
                }
                for k in 0..n {
                    prop_assert!(r[(i, j)] <= &r[(i, k)] + &r[(k, j)]);
                }
            }
        }
    }

    #[test]
    fn edge_resistance_at_most_one_with_equality_for_bridges(g in connected_graph(8)) {
        let r = resistance_matrix(&g).unwrap();
        for (u, v) in g.edges() {
            let bridge = !without_edge(&g, (u, v)).is_connected();
            prop_assert!(r[(u, v)] <= Rational::one());
            prop_assert_eq!(r[(u, v)] == Rational::one(), bridge);
        }
    }

    #[test]
    fn product_closed_forms_match(g in connected_graph(7)) {
        let double = closed_form_resistance(&ClosedForm::Double(g.clone())).unwrap().into_matrix().unwrap();
        prop_assert_eq!(double, resistance_matrix(&double_graph(&g).unwrap()).unwrap());
        let lexico = closed_form_resistance(&ClosedForm::LexicoK2(g.clone())).unwrap().into_matrix().unwrap();
        prop_assert_eq!(lexico, resistance_matrix(&lexicographic_k2(&g).unwrap()).unwrap());
    }

    #[test]
    fn schur_one_inverse_agrees_with_pinv(g in connected_graph(7), cut in 1usize..7) {
        let split = 1 + cut % (g.order() - 1);
        let m = one_inverse_schur(&g.laplacian(), split).unwrap();
        prop_assert_eq!(resistance_from_one_inverse(&m), resistance_matrix(&g).unwrap());
    }
}

#[test]
fn trees_have_path_length_resistance() {
    // the caterpillar 0-1-2-3 with leaves 4 on 1 and 5 on 2
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
    let r = resistance_matrix(&g).unwrap();
    let d = g.distance_matrix();
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(r[(i, j)], Rational::from_integer((d[i][j] as i64).into()));
        }
    }
}
