use artin_randlab::format::{decode_graph, encode_graph};
use artin_randlab_core::{DefiningGraph, Label};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = DefiningGraph> {
    (1usize..=12, 2u32..=1000).prop_flat_map(|(n, m)| {
        prop::collection::vec(0..m, n * (n - 1) / 2).prop_map(move |idx| {
            DefiningGraph::from_pair_labels(n, idx.into_iter().map(Label::from_index)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn encode_then_decode_is_identity(g in graph()) {
        let text = encode_graph(&g);
        prop_assert_eq!(decode_graph(&text).unwrap(), g.clone());
        prop_assert!(!text.contains("inf"));
        prop_assert!(!text.contains(' '));
    }

    /// Listing infinite pairs explicitly, in any order and with any spacing,
    /// decodes to the same graph.
    #[test]
    fn verbose_forms_decode_alike(g in graph(), rotate in 0usize..64) {
        let mut entries: Vec<String> = g
            .pairs()
            .map(|(i, j, l)| match l {
                Label::Infinite => format!("[{i}, {j}, \"inf\"]"),
                Label::Finite(m) => format!("[ {i} ,{j}, {m} ]"),
            })
            .collect();
        if !entries.is_empty() {
            let k = rotate % entries.len();
            entries.rotate_left(k);
        }
        let text = format!("{{\n  \"edges\": [{}],\n  \"n\": {}\n}}", entries.join(",\n"), g.n());
        prop_assert_eq!(decode_graph(&text).unwrap(), g);
    }
}
