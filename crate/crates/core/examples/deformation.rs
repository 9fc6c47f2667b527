//! Nijenhuis operators, the trivial deformations they generate, and their
//! images on the sub-adjacent algebra.

use bihom::catalog::upper_triangular;
use bihom::linalg::{format_vector, rat};
use bihom::{
    check_lie_linear_deformation, check_nijenhuis_lie, nijenhuis_trivial_deformation, push_deformation_to_lie,
    search_nijenhuis, subadjacent,
};

fn main() -> bihom::Result<()> {
    let a = upper_triangular().twisted(&rat(2), &rat(3))?;
    let found = search_nijenhuis(&a, &[rat(-1), rat(0), rat(1)]);
    println!("{} Nijenhuis operators with entries in {{-1, 0, 1}}", found.len());

    let g = subadjacent(&a);
    let mut all = true;
    for n_op in &found {
        let (pi, report) = nijenhuis_trivial_deformation(&a, n_op)?;
        let pushed = push_deformation_to_lie(&a, &pi)?;
        all &= report.passed()
            && check_nijenhuis_lie(&g, n_op)?.passed()
            && check_lie_linear_deformation(&g, &pushed)?.passed();
    }
    println!("every one gives a trivial deformation that descends: {all}");
    if let Some(n_op) = found.iter().find(|m| !m.is_zero() && !m.is_identity()) {
        let (pi, _) = nijenhuis_trivial_deformation(&a, n_op)?;
        println!("N = {n_op:?}");
        println!("π = ∂N has e1·e1 ↦ {}", format_vector(pi.pi().basis_product(0, 0)));
    }
    Ok(())
}
