//! Left-weighted normal forms in a spherical Artin group.

use std::sync::Arc;

use artin_tits::artin_words::{ArtinWord, WordOracle};
use artin_tits::coxeter::CoxeterGraph;
use artin_tits::garside::{build_garside, GarsideOracle};

fn main() -> artin_tits::Result<()> {
    let a3 = Arc::new(CoxeterGraph::type_a(3));
    let gs = Arc::new(build_garside(&a3, a3.all())?);
    println!("A_3 has {} simple elements, Delta = {}", gs.simple_count(), gs.delta());

    for text in ["s1 s2 s1 s2^-1 s1^-1 s2^-1", "s1 s3 s2^-1 s1", "s2^-1 s1^-1 s3 s2 s1 s2"] {
        let w = ArtinWord::parse(&a3, text)?;
        let nf = gs.to_normal_form(&w)?;
        let factors: Vec<String> = nf.canon.iter().map(ToString::to_string).collect();
        println!("{text:30} -> Delta^{} [{}]", nf.inf, factors.join(" | "));
        assert!(gs.is_left_weighted(&nf)?);
    }

    let oracle = GarsideOracle::new(gs);
    let u = ArtinWord::parse(&a3, "s1 s2 s1 s3")?;
    let v = ArtinWord::parse(&a3, "s2 s1 s3 s2")?;
    println!("s1 s2 s1 s3 = s2 s1 s3 s2 ? {}", oracle.equal(&u, &v)?);
    Ok(())
}
