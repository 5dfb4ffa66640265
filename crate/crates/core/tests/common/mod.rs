#![allow(dead_code)]

use fflab_core::io::parse_graph6_stream;
use fflab_core::Graph;

pub const ALL_UPTO7: &str = include_str!("../../fixtures/graphs_upto7.g6");
pub const CONNECTED_UPTO7: &str = include_str!("../../fixtures/connected_upto7.g6");

pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    parse_graph6_stream(ALL_UPTO7)
        .expect("fixture parses")
        .into_iter()
        .filter(|g| g.n() <= max_n)
        .collect()
}

pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    parse_graph6_stream(CONNECTED_UPTO7)
        .expect("fixture parses")
        .into_iter()
        .filter(|g| g.n() <= max_n)
        .collect()
}
