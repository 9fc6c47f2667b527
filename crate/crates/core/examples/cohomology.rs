//! Cohomology dimensions with adjoint coefficients.

use bihom::catalog::{abelian, nilpotent, upper_triangular};
use bihom::linalg::rat;
use bihom::{adjoint_rep, coboundary_matrix, cohomology_dims, BiHomPreLieAlgebra};

fn show(name: &str, a: &BiHomPreLieAlgebra) -> bihom::Result<()> {
    let r = adjoint_rep(a);
    for n in 1..=3 {
        let h = cohomology_dims(a, &r, n)?;
        println!("{name}: H^{n} = {} (C {}, Z {}, B {})", h.dim_h, h.dim_c, h.dim_z, h.dim_b);
    }
    let d1 = coboundary_matrix(a, &r, 1)?;
    let d2 = coboundary_matrix(a, &r, 2)?;
    println!("{name}: ∂∂ = 0 is {}", (&d2 * &d1).is_zero());
    Ok(())
}

fn main() -> bihom::Result<()> {
    show("abelian plane", &abelian(2).algebra())?;
    show("nilpotent plane", &nilpotent().algebra())?;
    show("nilpotent plane twisted", &nilpotent().twisted(&rat(2), &rat(3))?)?;
    show("upper triangular twisted", &upper_triangular().twisted(&rat(-1), &rat(2))?)?;
    Ok(())
}
