//! Linear deformations `Π_t = Π + tπ`, their equivalences, and Nijenhuis
//! operators. Conditions "for all t" are checked coefficient by coefficient.

use crate::algebra::{
    check_multiplicative, jacobi_residual, left_symmetry_residual, skew_residual, subadjacent_bracket, BasisImages,
    BiHomLieAlgebra, BiHomPreLieAlgebra, BilinearProduct, TwistPair,
};
use crate::cohomology::{Cochain, CochainComplex};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, frac, rat, vec_add, vec_scale, vec_sub, Matrix, Rational, Vector};
use crate::report::{Axiom, AxiomReport};
use crate::representation::adjoint_rep;

/// The infinitesimal part `π` of a linear deformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationCandidate {
    pi: BilinearProduct,
}

impl DeformationCandidate {
    pub fn new(pi: BilinearProduct) -> Self {
        Self { pi }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(BilinearProduct::zero(dim))
    }

    pub fn pi(&self) -> &BilinearProduct {
        &self.pi
    }

    pub fn dim(&self) -> usize {
        self.pi.dim()
    }

    /// `Π + tπ` at a given `t`.
    pub fn at(&self, base: &BilinearProduct, t: &Rational) -> BilinearProduct {
        base.add(&self.pi.scale(t))
    }
}

impl From<BilinearProduct> for DeformationCandidate {
    fn from(pi: BilinearProduct) -> Self {
        Self::new(pi)
    }
}

fn expect_dim(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Shape(format!("{what} has dimension {got}, algebra has {want}")));
    }
    Ok(())
}

fn check_equivariant(pi: &BilinearProduct, twists: &TwistPair) -> AxiomReport {
    let mut report = AxiomReport::new();
    check_multiplicative(pi, twists.alpha(), Axiom::DeformationAlpha, &mut report);
    check_multiplicative(pi, twists.beta(), Axiom::DeformationBeta, &mut report);
    report
}

/// Coefficients `c₀, c₁, c₂` of a quadratic vector polynomial from its
/// values at `t = 0, 1, 2`.
fn quadratic_coefficients(r0: &[Rational], r1: &[Rational], r2: &[Rational]) -> [Vector; 3] {
    let c2 = vec_scale(&vec_add(&vec_sub(r2, &vec_scale(r1, &rat(2))), r0), &frac(1, 2));
    let c1 = vec_sub(&vec_sub(r1, r0), &c2);
    [r0.to_vec(), c1, c2]
}

/// Checks that `(A, Π + tπ, α, β)` is BiHom-pre-Lie for every `t`.
///
/// `π` must commute with the twists; if it does not, only those violations are
/// reported. Otherwise the report covers the mixed identity
/// `LS(Π,π) + LS(π,Π)`, the closure `LS(π,π)`, and, as an independent
/// recomputation, every `t`-coefficient of the left-symmetry identity of
/// `Π_t` obtained by interpolation at `t = 0, 1, 2`.
pub fn check_linear_deformation(a: &BiHomPreLieAlgebra, pi: &DeformationCandidate) -> Result<AxiomReport> {
    let n = a.dim();
    expect_dim("pi", pi.dim(), n)?;
    let report = check_equivariant(pi.pi(), a.twists());
    if !report.passed() {
        return Ok(report);
    }
    let mut report = report;
    let imgs = BasisImages::new(a.twists());
    let (p, q) = (a.product(), pi.pi());
    let samples: Vec<BilinearProduct> = (0..3).map(|t| pi.at(p, &rat(t))).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let idx = [i, j, k];
                let mixed = vec_add(
                    &left_symmetry_residual(p, q, &imgs, i, j, k),
                    &left_symmetry_residual(q, p, &imgs, i, j, k),
                );
                report.check(Axiom::DeformationCocycle, &idx, mixed);
                report.check(Axiom::DeformationClosure, &idx, left_symmetry_residual(q, q, &imgs, i, j, k));
                let r: Vec<Vector> =
                    samples.iter().map(|s| left_symmetry_residual(s, s, &imgs, i, j, k)).collect();
                for (deg, c) in quadratic_coefficients(&r[0], &r[1], &r[2]).into_iter().enumerate() {
                    report.check(Axiom::DeformedIdentity(deg as u8), &idx, c);
                }
            }
        }
    }
    Ok(report)
}

fn check_commutes(n_op: &Matrix, twists: &TwistPair, report: &mut AxiomReport) {
    report.check_matrices(Axiom::NijenhuisAlpha, &[], &(n_op * twists.alpha()), &(twists.alpha() * n_op));
    report.check_matrices(Axiom::NijenhuisBeta, &[], &(n_op * twists.beta()), &(twists.beta() * n_op));
}

fn expect_square(n_op: &Matrix, n: usize) -> Result<()> {
    if n_op.shape() != (n, n) {
        return Err(Error::Shape(format!("operator is {:?}, expected {n}x{n}", n_op.shape())));
    }
    Ok(())
}

/// Checks that `T_t = Id + tN` is a morphism `(A, Π + tπ₂) → (A, Π + tπ₁)` for
/// every `t`, order by order:
///
/// - `t¹`: `π₂(x,y) − π₁(x,y) = N(x)·y + x·N(y) − N(x·y)`
/// - `t²`: `N(π₂(x,y)) = π₁(N(x),y) + π₁(x,N(y)) + N(x)·N(y)`
/// - `t³`: `π₁(N(x),N(y)) = 0`
///
/// together with `N∘α = α∘N` and `N∘β = β∘N`.
pub fn check_equivalence(
    a: &BiHomPreLieAlgebra,
    pi1: &DeformationCandidate,
    pi2: &DeformationCandidate,
    n_op: &Matrix,
) -> Result<AxiomReport> {
    let n = a.dim();
    expect_dim("pi1", pi1.dim(), n)?;
    expect_dim("pi2", pi2.dim(), n)?;
    expect_square(n_op, n)?;
    let mut report = AxiomReport::new();
    check_commutes(n_op, a.twists(), &mut report);
    let (p, q1, q2) = (a.product(), pi1.pi(), pi2.pi());
    for i in 0..n {
        let (x, nx) = (basis_vector(n, i), n_op.column(i));
        for j in 0..n {
            let (y, ny) = (basis_vector(n, j), n_op.column(j));
            let first = vec_sub(
                &vec_sub(&q2.apply(&x, &y), &q1.apply(&x, &y)),
                &deformed_at(p, n_op, &x, &nx, &y, &ny),
            );
            report.check(Axiom::EquivalenceFirstOrder, &[i, j], first);
            let rhs = vec_add(&vec_add(&q1.apply(&nx, &y), &q1.apply(&x, &ny)), &p.apply(&nx, &ny));
            report.check(Axiom::EquivalenceSecondOrder, &[i, j], vec_sub(&n_op.apply(&q2.apply(&x, &y)), &rhs));
            report.check(Axiom::EquivalenceThirdOrder, &[i, j], q1.apply(&nx, &ny));
        }
    }
    Ok(report)
}

/// `N(x)·y + x·N(y) − N(x·y)`
fn deformed_at(p: &BilinearProduct, n_op: &Matrix, x: &[Rational], nx: &[Rational], y: &[Rational], ny: &[Rational]) -> Vector {
    vec_sub(&vec_add(&p.apply(nx, y), &p.apply(x, ny)), &n_op.apply(&p.apply(x, y)))
}

/// Checks `N∘α = α∘N`, `N∘β = β∘N` and `N(x)·N(y) = N(x ·_N y)`.
pub fn check_nijenhuis_prelie(a: &BiHomPreLieAlgebra, n_op: &Matrix) -> Result<AxiomReport> {
    let n = a.dim();
    expect_square(n_op, n)?;
    let mut report = AxiomReport::new();
    check_commutes(n_op, a.twists(), &mut report);
    let deformed = deformed_product_unchecked(a.product(), n_op);
    for i in 0..n {
        for j in 0..n {
            let lhs = a.mul(&n_op.column(i), &n_op.column(j));
            let rhs = n_op.apply(deformed.basis_product(i, j));
            report.check(Axiom::NijenhuisIdentity, &[i, j], vec_sub(&lhs, &rhs));
        }
    }
    Ok(report)
}

fn deformed_product_unchecked(p: &BilinearProduct, n_op: &Matrix) -> BilinearProduct {
    BilinearProduct::from_fn(p.dim(), |x, y| deformed_at(p, n_op, x, &n_op.apply(x), y, &n_op.apply(y)))
}

/// `x ·_N y = N(x)·y + x·N(y) − N(x·y)`; `N` must commute with the twists.
pub fn deformed_product(a: &BiHomPreLieAlgebra, n_op: &Matrix) -> Result<BilinearProduct> {
    expect_square(n_op, a.dim())?;
    let mut report = AxiomReport::new();
    check_commutes(n_op, a.twists(), &mut report);
    if !report.passed() {
        return Err(Error::Invalid { what: "operator", report });
    }
    Ok(deformed_product_unchecked(a.product(), n_op))
}

/// The trivial deformation generated by a Nijenhuis operator: `π = ∂¹N = ·_N`.
///
/// `π` is computed both as `·_N` and as the coboundary of `N` in the adjoint
/// complex; the two must agree. The returned report merges
/// [`check_linear_deformation`] for `π` and [`check_equivalence`] between the
/// zero deformation and `π` via `N`.
pub fn nijenhuis_trivial_deformation(
    a: &BiHomPreLieAlgebra,
    n_op: &Matrix,
) -> Result<(DeformationCandidate, AxiomReport)> {
    let report = check_nijenhuis_prelie(a, n_op)?;
    if !report.passed() {
        return Err(Error::Invalid { what: "Nijenhuis operator", report });
    }
    let pi = deformed_product_unchecked(a.product(), n_op);
    let complex = CochainComplex::new(a, &adjoint_rep(a))?;
    let d1 = complex.coboundary(&Cochain::from_linear(n_op))?;
    if d1 != Cochain::from_bilinear(&pi) {
        return Err(Error::Defect("coboundary of N differs from the deformed product".into()));
    }
    let pi = DeformationCandidate::new(pi);
    let mut report = check_linear_deformation(a, &pi)?;
    report.merge(check_equivalence(a, &DeformationCandidate::zero(a.dim()), &pi, n_op)?);
    Ok((pi, report))
}

/// `π_C(x,y) = π(x,y) − π(α⁻¹β(y), αβ⁻¹(x))`; `π` must be a linear deformation.
pub fn push_deformation_to_lie(a: &BiHomPreLieAlgebra, pi: &DeformationCandidate) -> Result<DeformationCandidate> {
    let report = check_linear_deformation(a, pi)?;
    if !report.passed() {
        return Err(Error::Invalid { what: "deformation", report });
    }
    Ok(DeformationCandidate::new(subadjacent_bracket(pi.pi(), a.twists())))
}

/// Checks `N∘α = α∘N`, `N∘β = β∘N` (reported separately) and
/// `[N(x),N(y)] = N([x,y]_N)` with `[x,y]_N = [N(x),y] + [x,N(y)] − N[x,y]`.
pub fn check_nijenhuis_lie(g: &BiHomLieAlgebra, n_op: &Matrix) -> Result<AxiomReport> {
    let n = g.dim();
    expect_square(n_op, n)?;
    let mut report = AxiomReport::new();
    check_commutes(n_op, g.twists(), &mut report);
    let br = g.bracket();
    for i in 0..n {
        let (x, nx) = (basis_vector(n, i), n_op.column(i));
        for j in 0..n {
            let (y, ny) = (basis_vector(n, j), n_op.column(j));
            let lhs = br.apply(&nx, &ny);
            let rhs = n_op.apply(&deformed_at(br, n_op, &x, &nx, &y, &ny));
            report.check(Axiom::NijenhuisIdentity, &[i, j], vec_sub(&lhs, &rhs));
        }
    }
    Ok(report)
}

/// Checks that `(𝔤, [·,·] + tπ, α, β)` is BiHom-Lie for every `t`.
///
/// `π` must commute with the twists and be BiHom-skew; otherwise only those
/// violations are reported. The `t¹` coefficient of BiHom-Jacobi is reported
/// as the cocycle condition, the `t²` coefficient as closure, and all three
/// coefficients are recomputed by interpolation.
pub fn check_lie_linear_deformation(g: &BiHomLieAlgebra, pi: &DeformationCandidate) -> Result<AxiomReport> {
    let n = g.dim();
    expect_dim("pi", pi.dim(), n)?;
    let mut report = check_equivariant(pi.pi(), g.twists());
    let imgs = BasisImages::new(g.twists());
    let (br, q) = (g.bracket(), pi.pi());
    for i in 0..n {
        for j in i..n {
            report.check(Axiom::DeformationSkew, &[i, j], skew_residual(q, &imgs, i, j));
        }
    }
    if !report.passed() {
        return Ok(report);
    }
    let samples: Vec<BilinearProduct> = (0..3).map(|t| pi.at(br, &rat(t))).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let idx = [i, j, k];
                let mixed = vec_add(
                    &jacobi_residual(br, q, &imgs, i, j, k),
                    &jacobi_residual(q, br, &imgs, i, j, k),
                );
                report.check(Axiom::DeformationCocycle, &idx, mixed);
                report.check(Axiom::DeformationClosure, &idx, jacobi_residual(q, q, &imgs, i, j, k));
                let r: Vec<Vector> = samples.iter().map(|s| jacobi_residual(s, s, &imgs, i, j, k)).collect();
                for (deg, c) in quadratic_coefficients(&r[0], &r[1], &r[2]).into_iter().enumerate() {
                    report.check(Axiom::DeformedIdentity(deg as u8), &idx, c);
                }
            }
        }
    }
    Ok(report)
}

/// Every `n×n` matrix with entries drawn from `values` that is a Nijenhuis
/// operator on `a`, in lexicographic order of row-major entries.
pub fn search_nijenhuis(a: &BiHomPreLieAlgebra, values: &[Rational]) -> Vec<Matrix> {
    let n = a.dim();
    let cells = n * n;
    let mut found = Vec::new();
    if values.is_empty() {
        return found;
    }
    let mut choice = vec![0usize; cells];
    loop {
        let m = Matrix::from_fn(n, n, |i, j| values[choice[i * n + j]].clone());
        let commutes = m.commutes_with(a.alpha()) && m.commutes_with(a.beta());
        if commutes && check_nijenhuis_prelie(a, &m).is_ok_and(|r| r.passed()) {
            found.push(m);
        }
        let mut slot = cells;
        loop {
            if slot == 0 {
                return found;
            }
            slot -= 1;
            choice[slot] += 1;
            if choice[slot] < values.len() {
                break;
            }
            choice[slot] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_prelie, is_prelie_morphism, subadjacent};

    fn nilpotent() -> BiHomPreLieAlgebra {
        BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(2, &[(0, 0, 1, 1)]))
    }

    // e1·e1 = e1, e1·e2 = e2
    fn affine() -> BiHomPreLieAlgebra {
        BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]))
    }

    #[test]
    fn zero_and_self_deformations() {
        for a in [nilpotent(), affine()] {
            assert!(check_linear_deformation(&a, &DeformationCandidate::zero(2)).unwrap().passed());
            let own = DeformationCandidate::new(a.product().clone());
            assert!(check_linear_deformation(&a, &own).unwrap().passed());
        }
    }

    #[test]
    fn non_equivariant_pi_short_circuits() {
        let a = BiHomPreLieAlgebra::new(
            BilinearProduct::from_entries(2, &[(0, 0, 1, 1)]),
            TwistPair::new(Matrix::diag_ints(&[2, 4]), Matrix::diag_ints(&[3, 9])).unwrap(),
        )
        .unwrap();
        let pi = DeformationCandidate::new(BilinearProduct::from_entries(2, &[(0, 0, 0, 1)]));
        let report = check_linear_deformation(&a, &pi).unwrap();
        assert!(report.has(Axiom::DeformationAlpha));
        assert!(!report.has(Axiom::DeformationCocycle));
    }

    #[test]
    fn deformed_product_basics() {
        let a = affine();
        assert!(deformed_product(&a, &Matrix::zeros(2, 2)).unwrap().is_zero());
        assert_eq!(&deformed_product(&a, &Matrix::identity(2)).unwrap(), a.product());
        let nil = nilpotent();
        let e21 = Matrix::from_ints(&[[0, 0], [1, 0]]);
        assert!(deformed_product(&nil, &e21).unwrap().is_zero());
    }

    #[test]
    fn nilpotent_nijenhuis_examples() {
        let a = nilpotent();
        let e21 = Matrix::from_ints(&[[0, 0], [1, 0]]);
        assert!(check_nijenhuis_prelie(&a, &e21).unwrap().passed());
        // N = E11: N(e1)·N(e1) = e2, but e1 ·_N e1 = 2e2 − N(e2) = 2e2 and N(2e2) = 0
        let e11 = Matrix::from_ints(&[[1, 0], [0, 0]]);
        let report = check_nijenhuis_prelie(&a, &e11).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].indices, vec![0, 0]);
        assert_eq!(report.violations[0].residual, vec![rat(0), rat(1)]);
    }

    #[test]
    fn scalar_operators_give_rescaled_deformations() {
        let a = affine();
        for l in [-2, 0, 3] {
            let n_op = Matrix::scalar(2, rat(l));
            let (pi, report) = nijenhuis_trivial_deformation(&a, &n_op).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(pi.pi(), &a.product().scale(&rat(l)));
            assert!(check_nijenhuis_lie(&subadjacent(&a), &n_op).unwrap().passed());
        }
    }

    #[test]
    fn searched_operators_satisfy_the_pipeline() {
        let a = affine();
        let found = search_nijenhuis(&a, &[rat(-1), rat(0), rat(1)]);
        assert!(found.len() > 3);
        for n_op in &found {
            let (pi, report) = nijenhuis_trivial_deformation(&a, n_op).unwrap();
            assert!(report.passed(), "{report}");
            let deformed = BiHomPreLieAlgebra::new(pi.pi().clone(), a.twists().clone()).unwrap();
            assert!(check_prelie(&deformed).passed());
            assert!(is_prelie_morphism(n_op, &deformed, &a).unwrap().passed());
            let g = subadjacent(&a);
            assert!(check_nijenhuis_lie(&g, n_op).unwrap().passed());
            let pc = push_deformation_to_lie(&a, &pi).unwrap();
            assert!(check_lie_linear_deformation(&g, &pc).unwrap().passed());
        }
    }

    #[test]
    fn equivalence_failures_are_located() {
        let a = affine();
        let zero = DeformationCandidate::zero(2);
        assert!(check_equivalence(&a, &zero, &zero, &Matrix::zeros(2, 2)).unwrap().passed());
        let report = check_equivalence(&a, &zero, &zero, &Matrix::identity(2)).unwrap();
        assert!(report.has(Axiom::EquivalenceFirstOrder));
    }

    #[test]
    fn push_down_of_product_is_subadjacent_bracket() {
        let a = affine();
        let pc = push_deformation_to_lie(&a, &DeformationCandidate::new(a.product().clone())).unwrap();
        assert_eq!(pc.pi(), subadjacent(&a).bracket());
        let g = subadjacent(&a);
        assert!(check_lie_linear_deformation(&g, &pc).unwrap().passed());
        assert!(check_lie_linear_deformation(&g, &DeformationCandidate::zero(2)).unwrap().passed());
    }

    #[test]
    fn non_skew_lie_deformation_short_circuits() {
        let g = subadjacent(&affine());
        let pi = DeformationCandidate::new(BilinearProduct::from_entries(2, &[(0, 0, 0, 1)]));
        let report = check_lie_linear_deformation(&g, &pi).unwrap();
        assert!(report.has(Axiom::DeformationSkew));
        assert!(!report.has(Axiom::DeformationCocycle));
    }
}
