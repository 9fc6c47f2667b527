//! Build a Yau-twisted algebra, check it, and print its sub-adjacent bracket.

use bihom::catalog::witt2;
use bihom::linalg::{format_vector, frac, rat};
use bihom::{check_bihom_lie, check_prelie, subadjacent, BiHomPreLieAlgebra, BilinearProduct, Matrix};

fn main() -> bihom::Result<()> {
    // xⁱ·xʲ = j x^{i+j−1} on x, x², twisted by diag(λ^deg)
    let a = witt2().twisted(&rat(2), &frac(1, 3))?;
    println!("twisted Witt plane: {}", if check_prelie(&a).passed() { "PASS" } else { "FAIL" });

    let g = subadjacent(&a);
    println!("sub-adjacent bracket passes BiHom-Lie: {}", check_bihom_lie(&g).passed());
    for i in 0..2 {
        for j in 0..2 {
            println!("  [e{},e{}] = {}", i + 1, j + 1, format_vector(g.bracket().basis_product(i, j)));
        }
    }

    // twists that do not commute are reported, not rejected
    let bad = BiHomPreLieAlgebra::new(
        BilinearProduct::zero(2),
        bihom::TwistPair::new(Matrix::from_ints(&[[1, 1], [0, 1]]), Matrix::diag_ints(&[1, 2]))?,
    );
    match bad {
        Ok(b) => println!("{}", check_prelie(&b)),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
