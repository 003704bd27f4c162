//! Reduced words and parabolic decompositions in Coxeter groups.

use std::sync::Arc;

use artin_tits::coxeter::{CoxeterGraph, Engine};

fn main() -> artin_tits::Result<()> {
    let b3 = Arc::new(CoxeterGraph::type_b(3));
    println!("B_3 generators: {:?}", b3.names());

    let all = b3.all();
    let w = b3.reduce_names(&["t", "s1", "t", "s1", "s2", "s1", "s2"])?;
    println!("canonical word: {w} (length {})", w.length());
    println!("right descents: {}", b3.format_subset(w.right_descents()));

    let t = b3.subset("t s1")?;
    let (w0, w1) = w.parabolic_decompose_left(t);
    println!("w = {w0} * {w1} with the first factor in W_{{t, s1}}");

    let slow = b3.reduce_with(&[0, 1, 0, 1, 2, 1, 2], Engine::Combinatorial)?;
    assert_eq!(slow, w);

    let order = b3.enumerate_parabolic(all, 1_000)?.len();
    println!("|W(B_3)| = {order}, classified as {:?}", b3.classify_finite(all));

    let affine = Arc::new(CoxeterGraph::affine_a(2));
    let long = affine.parse_element("a1 a2 a3 a1 a2 a3 a1 a2 a3 a3 a2 a1")?;
    println!("in the affine triangle group: {long} (length {})", long.length());
    Ok(())
}
