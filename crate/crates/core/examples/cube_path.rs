//! Normal cube paths of words and the prepath JSON format.

use std::sync::Arc;

use artin_tits::artin_words::ArtinWord;
use artin_tits::coxeter::{CoxeterGraph, Label};
use artin_tits::cubepath::{is_normal, normalize, word_to_prepath, CubePrepath, OracleRegistry};

fn main() -> artin_tits::Result<()> {
    let g = Arc::new(CoxeterGraph::from_edges(
        &["a", "b", "c"],
        &[("a", "b", Label::Finite(3)), ("b", "c", Label::Infinity), ("a", "c", Label::Finite(4))],
    )?);
    let reg = OracleRegistry::new(g.clone());

    let w = ArtinWord::parse(&g, "a b a^-1 c b^-1 a b a c^-1")?;
    let p = word_to_prepath(&w);
    let (q, mu) = normalize(&reg, &p)?;
    println!("prepath of length {} normalizes to length {}", p.len(), q.len());
    println!("{}", q.display(&g));
    println!("correction word: [{}]", mu.display(&g));
    assert!(is_normal(&reg, &q)?);

    let json = q.to_json(&g);
    println!("{json}");
    assert_eq!(CubePrepath::from_json(&g, &json)?, q);
    Ok(())
}
