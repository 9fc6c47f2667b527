//! O-operators and Rota-Baxter operators on a sub-adjacent BiHom-Lie algebra.

use bihom::catalog::affine;
use bihom::linalg::format_vector;
use bihom::{
    adjoint_rep, check_o_operator, check_prelie, check_rota_baxter, induced_lie_rep, induced_prelie_from_o,
    lie_adjoint_rep, rb_induced_prelie, subadjacent, InducedVariant, LinearOperator, Matrix,
};

fn main() -> bihom::Result<()> {
    let a = affine().twisted(&bihom::linalg::rat(-1), &bihom::linalg::rat(2))?;
    let g = subadjacent(&a);
    let left = induced_lie_rep(&adjoint_rep(&a), InducedVariant::LeftOnly)?;

    let id = LinearOperator::identity(2);
    println!("id w.r.t. ρ = L: {}", check_o_operator(&id, &left)?.passed());
    println!("recovers the algebra: {}", induced_prelie_from_o(&id, &left)? == a);
    println!("id w.r.t. ad:\n{}", check_o_operator(&id, &lie_adjoint_rep(&g))?);

    let rb = LinearOperator::new(Matrix::from_ints(&[[1, 0], [0, 0]]));
    println!("E11 is Rota-Baxter: {}", check_rota_baxter(&rb, &g)?.passed());
    let star = rb_induced_prelie(&rb, &g)?;
    println!("x∗y = [R(x),y] is BiHom-pre-Lie: {}", check_prelie(&star).passed());
    println!("e1∗e2 = {}", format_vector(star.product().basis_product(0, 1)));
    Ok(())
}
