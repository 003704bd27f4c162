//! Bounded derivation search from the defining relators.

use artin_tits::artin_words::ArtinWord;
use artin_tits::coxeter::CoxeterGraph;
use artin_tits::refcheck::{bfs_equal, Bounds, Presentation};
use artin_tits::virtual_braids::{vb_presentation, VbWord};

fn main() -> artin_tits::Result<()> {
    let g = CoxeterGraph::type_a(3);
    let pres = Presentation::artin(&g);
    let u = ArtinWord::parse(&g, "s1 s2 s3 s1 s2 s1")?;
    let v = ArtinWord::parse(&g, "s3 s2 s1 s3 s2 s3")?;
    println!("A_3: {:?}", bfs_equal(&pres, &u, &v, Bounds::default()));

    let vb = vb_presentation(3)?;
    let u = VbWord::parse(3, "t1 s2 t1")?.to_presentation_word();
    let v = VbWord::parse(3, "t2 s1 t2")?.to_presentation_word();
    println!("VB_3: {:?}", bfs_equal(&vb, &u, &v, Bounds { depth: 4, ..Bounds::default() }));
    Ok(())
}
