//! The word oracle for a triangle of 3-labels, via its embedding in type B.

use artin_tits::artin_words::{ArtinWord, WordOracle};
use artin_tits::coxeter::CoxeterGraph;
use artin_tits::garside::affine_a_oracle;

fn main() -> artin_tits::Result<()> {
    let g = CoxeterGraph::affine_a(2);
    let oracle = affine_a_oracle(2)?;
    println!("cycle order: {:?}", oracle.cycle().iter().map(|&s| g.name(s)).collect::<Vec<_>>());

    for text in ["a1 a2 a1 a2^-1 a1^-1 a2^-1", "a1 a2 a3 a1^-1 a2^-1 a3^-1", "a1 a2 a3 a2^-1 a3^-1 a2^-1 a1^-1 a2"] {
        let w = ArtinWord::parse(&g, text)?;
        let image = oracle.embed(&w)?;
        println!("{text}\n  image length {}, trivial: {}", image.len(), oracle.is_trivial(&w)?);
    }
    Ok(())
}
