//! Equality in virtual braid groups through the pure kernel.

use artin_tits::virtual_braids::{rewrite_to_semidirect, spherical_dimension, VbSolver, VbWord};

fn main() -> artin_tits::Result<()> {
    let solver = VbSolver::new(3)?;
    println!("Gamma_VB3 has {} vertices", solver.graph().rank());

    let w = VbWord::parse(3, "t1 s2 t1")?;
    let (kappa, p) = rewrite_to_semidirect(&w);
    println!("{w} = ({kappa}) . {p}");

    let cases = [("t1 s2 t1", "t2 s1 t2"), ("s1 t2 t1", "t2 t1 s2"), ("s1 s2 s1", "s2 s1 s2"), ("s1 t1", "t1 s1")];
    for (u, v) in cases {
        let (u, v) = (VbWord::parse(3, u)?, VbWord::parse(3, v)?);
        println!("{u:10} = {v:10} : {}", solver.equal(&u, &v)?);
    }

    for n in 2..=5 {
        println!("largest spherical subset of Gamma_VB{n}: {}", spherical_dimension(n)?);
    }
    Ok(())
}
