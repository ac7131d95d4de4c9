mod common;

use std::collections::BTreeSet;

use common::strategies::graph_and_target;
use hcmin::digraph::{parse_edge_list_str, restrict};
use hcmin::{EdgeSubset, GraphView, VertexId};
use proptest::prelude::*;

proptest! {
    #[test]
    fn write_then_parse_keeps_edges(
        pairs in proptest::collection::vec((0u64..50, 0u64..50), 1..60),
        offset in 0u64..1_000_000,
    ) {
        let text: String = pairs.iter().map(|(u, v)| format!("{} {}\n", u + offset, v + offset)).collect();
        let parsed = parse_edge_list_str(&text).unwrap();
        let back = parse_edge_list_str(&parsed.to_edge_list_string()).unwrap();
        prop_assert_eq!(parsed.labeled_edges(), back.labeled_edges());

        let want: BTreeSet<(u64, u64)> = pairs
            .iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u + offset, v + offset))
            .collect();
        let got: BTreeSet<(u64, u64)> = parsed.labeled_edges().into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn adjacency_lists_agree((g, _) in graph_and_target(15)) {
        let mut from_out = Vec::new();
        for u in g.vertices() {
            for w in g.out_neighbors(u) {
                from_out.push((u, w));
                prop_assert!(g.in_neighbors(w).contains(&u));
            }
        }
        let from_in: Vec<_> = g.edges().collect();
        from_out.sort();
        prop_assert_eq!(&from_out, &from_in);
        prop_assert_eq!(from_in.len(), g.edge_count());
        for v in g.vertices() {
            let preds = g.in_neighbors(v);
            prop_assert!(preds.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!preds.contains(&v));
            for (p, &w) in preds.iter().enumerate() {
                prop_assert_eq!(g.in_position(v, w), Some(p));
            }
        }
    }

    #[test]
    fn restricted_view_drops_exactly_the_subset(
        (g, v) in graph_and_target(12),
        bits in proptest::collection::vec(any::<bool>(), 48),
    ) {
        let m = g.in_degree(v);
        let subset = EdgeSubset::from_mask(v, bits[..m].to_vec());
        let view = restrict(&g, &subset).unwrap();
        prop_assert_eq!(view.edge_count(), g.edge_count() - subset.len());
        let removed = subset.predecessors(&g);
        for (u, w) in g.edges() {
            let gone = w == v && removed.contains(&u);
            prop_assert_eq!(view.has_edge(u, w), !gone);
        }
        let full = GraphView::full(&g);
        for u in g.vertices() {
            if u != v {
                prop_assert_eq!(view.in_neighbors(u), full.in_neighbors(u));
            }
        }
    }
}

#[test]
fn subset_rejects_foreign_edges() {
    let g = hcmin::DiGraph::from_edges(4, [(1, 0), (2, 0), (3, 1)]);
    assert!(EdgeSubset::from_predecessors(&g, VertexId(0), [VertexId(3)]).is_err());
    let wrong_len = EdgeSubset::from_mask(VertexId(0), vec![true]);
    assert!(restrict(&g, &wrong_len).is_err());
}
