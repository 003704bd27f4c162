//! Deciding equality in an Artin group loaded from JSON.
//!
//! Run with `cargo run --example word_problem -- examples/data/triangle.json`.

use std::sync::Arc;

use artin_tits::artin_words::ArtinWord;
use artin_tits::coxeter::CoxeterGraph;
use artin_tits::cubepath::{artin_equal, is_trivial, OracleRegistry};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/free_triangle.json").into());
    let g = Arc::new(CoxeterGraph::from_json(&std::fs::read_to_string(&path)?)?);
    let reg = OracleRegistry::new(g.clone());
    reg.check_all()?;
    println!("graph {path}: maximal free-of-infinity subsets {:?}",
             g.maximal_free_of_infinity().into_iter().map(|s| g.format_subset(s)).collect::<Vec<_>>());

    let pairs = [
        ("a b a", "b a b"),
        ("a c a c", "c a c a"),
        ("a b c", "c b a"),
        ("a b a^-1 c b a b^-1", "b^-1 a b c b a b^-1"),
    ];
    for (u, v) in pairs {
        let (wu, wv) = (ArtinWord::parse(&g, u)?, ArtinWord::parse(&g, v)?);
        println!("{u:24} = {v:24} : {}", artin_equal(&reg, &wu, &wv)?);
    }
    let rel = ArtinWord::parse(&g, "a c a c a^-1 c^-1 a^-1 c^-1")?;
    println!("relator trivial: {}", is_trivial(&reg, &rel)?);
    Ok(())
}
