//! Pins the on-the-wire JSON and text formats.

use fibtile_core::colorings::{enumerate_colored, ColorScheme};
use fibtile_core::ladder::LadderSpanningTree;
use fibtile_core::ocps::CommaSlashString;
use fibtile_core::{Board, ColoredComposition, Composition, Ocps, SetPartition, UnimodalSeq};
use serde_json::json;

#[test]
fn composition_is_a_flat_array() {
    let c = Composition::new(vec![1, 2, 3]).unwrap();
    assert_eq!(serde_json::to_value(&c).unwrap(), json!([1, 2, 3]));
    let back: Composition = serde_json::from_value(json!([2, 1])).unwrap();
    assert_eq!(back.parts(), &[2, 1]);
    assert!(serde_json::from_value::<Composition>(json!([0])).is_err());
}

#[test]
fn board_keys_are_decimal_strings() {
    let cc = enumerate_colored(ColorScheme::FibPlus1, 3).nth(1).unwrap();
    let board = fibtile_core::colorings::to_board(&cc);
    let value = serde_json::to_value(&board).unwrap();
    let obj = value.as_object().unwrap();
    assert_eq!(obj["n"], json!(3));
    assert!(obj["sep"].as_object().unwrap().keys().all(|k| k.parse::<usize>().is_ok()));
    let back: Board = serde_json::from_value(value).unwrap();
    assert_eq!(back, board);
}

#[test]
fn colored_composition_shapes() {
    // secondary payloads are flat arrays
    let cc = enumerate_colored(ColorScheme::Fib, 3).next().unwrap();
    let v = serde_json::to_value(&cc).unwrap();
    assert_eq!(v["scheme"], json!("fib"));
    assert!(v["parts"][0]["color"].is_array());

    // spotted payloads are [len, spot] pairs
    let cc = enumerate_colored(ColorScheme::FibEven, 2).last().unwrap();
    let v = serde_json::to_value(&cc).unwrap();
    assert_eq!(v["parts"][0]["color"], json!([[2, 2]]));

    // decorated payloads carry partitions with the last junction omitted
    let text = r#"{
        "scheme": "fib-odd",
        "parts": [
            {"size": 3, "color": [
                {"partition": [[1]], "junction": "dotted"},
                {"partition": [[1, 2]]}
            ]}
        ]
    }"#;
    let cc: ColoredComposition = serde_json::from_str(text).unwrap();
    assert_eq!(cc.n(), 3);
    let round = serde_json::to_string(&cc).unwrap();
    let again: ColoredComposition = serde_json::from_str(&round).unwrap();
    assert_eq!(again, cc);

    // a solid junction inside one color payload is rejected
    let bad = text.replace("dotted", "solid");
    assert!(serde_json::from_str::<ColoredComposition>(&bad).is_err());
}

#[test]
fn tree_edges_are_sorted_strings() {
    let cc = enumerate_colored(ColorScheme::FibEven, 3).next().unwrap();
    let tree = fibtile_core::ladder::colored_to_tree(&cc).unwrap();
    let v = serde_json::to_value(&tree).unwrap();
    let edges: Vec<String> = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap().to_string())
        .collect();
    assert!(edges.iter().all(|e| e.starts_with(['T', 'B', 'V'])));
    let back: LadderSpanningTree = serde_json::from_value(v).unwrap();
    assert_eq!(back, tree);
}

#[test]
fn partition_and_ocps_are_nested_arrays() {
    let p = SetPartition::parse("14|236|5|78").unwrap();
    assert_eq!(
        serde_json::to_value(&p).unwrap(),
        json!([[1, 4], [2, 3, 6], [5], [7, 8]])
    );
    let o = Ocps::new(3, vec![vec![2], vec![3], vec![1]]).unwrap();
    assert_eq!(serde_json::to_value(&o).unwrap(), json!([[2], [3], [1]]));
    // ordered blocks survive the round trip in order
    let back: Ocps = serde_json::from_value(json!([[2], [3], [1]])).unwrap();
    assert_eq!(back, o);
}

#[test]
fn unimodal_and_comma_slash_text() {
    let u = UnimodalSeq::new(vec![1, 2, 2, 1]).unwrap();
    assert_eq!(serde_json::to_value(&u).unwrap(), json!([1, 2, 2, 1]));

    let s = CommaSlashString::parse("12,/3,45/,6/78,9/").unwrap();
    assert_eq!(serde_json::to_value(&s).unwrap(), json!("12,/3,45/,6/78,9/"));
    let back: CommaSlashString = serde_json::from_value(json!("12,/3,45/,6/78,9/")).unwrap();
    assert_eq!(back, s);
}
