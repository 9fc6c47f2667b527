//! Representations: twisting, semidirect products, induced and tensor
//! representations.

use bihom::catalog::{affine, nilpotent};
use bihom::linalg::rat;
use bihom::representation::semidirect_prelie_unchecked;
use bihom::{
    adjoint_rep, check_lie_rep, check_prelie, check_prelie_rep, induced_lie_rep, semidirect_prelie, tensor_rep,
    trivial_rep, twist_rep, InducedVariant, Matrix,
};

fn main() -> bihom::Result<()> {
    let fx = nilpotent();
    let (alpha, beta) = (Matrix::diag_ints(&[2, 4]), Matrix::diag_ints(&[3, 9]));
    let r = twist_rep(&adjoint_rep(&fx.algebra()), alpha.clone(), beta.clone(), alpha, beta)?;
    println!("twisted adjoint: {}", check_prelie_rep(&r).passed());

    let s = semidirect_prelie(&r)?;
    println!("semidirect product of dim {}: {}", s.dim(), check_prelie(&s).passed());

    // on the affine plane, doubling R breaks the representation and with it
    // the semidirect product
    let aff = adjoint_rep(&affine().algebra());
    let doubled = aff.right().iter().map(|m| m.scale(&rat(2))).collect();
    let bad = aff.with_actions(aff.left().to_vec(), doubled)?;
    println!("doubled right action:\n{}", check_prelie_rep(&bad));
    let semi = semidirect_prelie_unchecked(&bad)?;
    println!("its semidirect product passes: {}", check_prelie(&semi).passed());

    for v in [InducedVariant::Full, InducedVariant::LeftOnly] {
        let lie = induced_lie_rep(&r, v)?;
        println!("induced {v:?}: {}", check_lie_rep(&lie).passed());
    }

    let t = tensor_rep(&r, &trivial_rep(r.algebra()))?;
    let tt = tensor_rep(&r, &r)?;
    println!("V⊗k: {}, V⊗V (dim {}): {}", check_prelie_rep(&t).passed(), tt.vdim(), check_prelie_rep(&tt).passed());
    Ok(())
}
