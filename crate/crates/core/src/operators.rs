//! O-operators and Rota-Baxter operators of weight zero, and the pre-Lie
//! products they induce.

use crate::algebra::{
    check_prelie, is_lie_morphism, subadjacent, BiHomLieAlgebra, BiHomPreLieAlgebra, BilinearProduct, TwistPair,
};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, vec_add, vec_sub, Matrix};
use crate::report::{Axiom, AxiomReport};
use crate::representation::{lie_adjoint_rep, LieRep};

/// A linear map `source → target` given by its matrix (target × source).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn zero(target: usize, source: usize) -> Self {
        Self::new(Matrix::zeros(target, source))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target(&self) -> usize {
        self.matrix.rows()
    }

    fn expect_shape(&self, target: usize, source: usize) -> Result<()> {
        if self.matrix.shape() != (target, source) {
            return Err(Error::Shape(format!(
                "operator is {:?}, expected {target}x{source}",
                self.matrix.shape()
            )));
        }
        Ok(())
    }
}

impl From<Matrix> for LinearOperator {
    fn from(m: Matrix) -> Self {
        Self::new(m)
    }
}

/// Checks `T∘φ = α∘T`, `T∘ψ = β∘T` and
/// `[T(u),T(v)] = T(ρ(T(u))v − ρ(T(φ⁻¹ψ(v)))φψ⁻¹(u))` on basis pairs of `V`.
pub fn check_o_operator(t: &LinearOperator, r: &LieRep) -> Result<AxiomReport> {
    let g = r.algebra();
    let (n, m) = (g.dim(), r.vdim());
    t.expect_shape(n, m)?;
    let tm = t.matrix();
    let phi_inv_psi = r.phi_inv()? * r.psi();
    let phi_psi_inv = r.phi() * r.psi_inv()?;
    let mut report = AxiomReport::new();
    report.check_matrices(Axiom::OperatorPhi, &[], &(tm * r.phi()), &(g.alpha() * tm));
    report.check_matrices(Axiom::OperatorPsi, &[], &(tm * r.psi()), &(g.beta() * tm));
    let images: Vec<_> = (0..m).map(|j| tm.column(j)).collect();
    for i in 0..m {
        let u = basis_vector(m, i);
        let twisted_u = phi_psi_inv.apply(&u);
        for j in 0..m {
            let v = basis_vector(m, j);
            let lhs = g.br(&images[i], &images[j]);
            let inner = vec_sub(
                &r.rho_at(&images[i]).apply(&v),
                &r.rho_at(&tm.apply(&phi_inv_psi.apply(&v))).apply(&twisted_u),
            );
            report.check(Axiom::OperatorIdentity, &[i, j], vec_sub(&lhs, &tm.apply(&inner)));
        }
    }
    Ok(report)
}

fn require_o_operator(t: &LinearOperator, r: &LieRep) -> Result<()> {
    let report = check_o_operator(t, r)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Invalid { what: "O-operator", report })
    }
}

fn defect_unless(report: AxiomReport, what: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Defect(format!("{what}:\n{report}")))
    }
}

/// `u∗v = ρ(T(u))v` on `V` with twists `φ, ψ`. The result is checked to be
/// BiHom-pre-Lie and `T` to be a morphism from its sub-adjacent algebra to `𝔤`.
pub fn induced_prelie_from_o(t: &LinearOperator, r: &LieRep) -> Result<BiHomPreLieAlgebra> {
    require_o_operator(t, r)?;
    let tm = t.matrix();
    let product = BilinearProduct::from_fn(r.vdim(), |u, v| r.rho_at(&tm.apply(u)).apply(v));
    let a = BiHomPreLieAlgebra::new(product, TwistPair::new(r.phi().clone(), r.psi().clone())?)?;
    defect_unless(check_prelie(&a), "O-operator induced product is not BiHom-pre-Lie")?;
    defect_unless(
        is_lie_morphism(tm, &subadjacent(&a), r.algebra())?,
        "O-operator is not a morphism of the induced BiHom-Lie algebras",
    )?;
    Ok(a)
}

/// The induced product carried to `T(V) ⊆ 𝔤`, `T(u)∘T(v) = T(u∗v)`, in the
/// basis `T(v_1), …, T(v_m)`. `T` must be injective.
pub fn induced_prelie_on_image(t: &LinearOperator, r: &LieRep) -> Result<BiHomPreLieAlgebra> {
    let star = induced_prelie_from_o(t, r)?;
    let tm = t.matrix();
    let m = r.vdim();
    if tm.rank() != m {
        return Err(Error::NotInjective("T"));
    }
    let coords = |w: &[_]| tm.solve(w).map_err(|_| Error::Defect("image is not closed".into()));
    let mut c = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            let w = tm.apply(star.product().basis_product(i, j));
            c.extend(coords(&w)?);
        }
    }
    let restrict = |map: &Matrix| -> Result<Matrix> {
        let cols = (0..m).map(|j| coords(&map.apply(&tm.column(j)))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(m, &cols))
    };
    let g = r.algebra();
    let twists = TwistPair::new(restrict(g.alpha())?, restrict(g.beta())?)?;
    BiHomPreLieAlgebra::new(BilinearProduct::new(m, c)?, twists)
}

/// Checks `R∘α = α∘R`, `R∘β = β∘R` and `[R(x),R(y)] = R([R(x),y] + [x,R(y)])`.
pub fn check_rota_baxter(rb: &LinearOperator, g: &BiHomLieAlgebra) -> Result<AxiomReport> {
    let n = g.dim();
    rb.expect_shape(n, n)?;
    let rm = rb.matrix();
    let mut report = AxiomReport::new();
    report.check_matrices(Axiom::RotaBaxterAlpha, &[], &(rm * g.alpha()), &(g.alpha() * rm));
    report.check_matrices(Axiom::RotaBaxterBeta, &[], &(rm * g.beta()), &(g.beta() * rm));
    for i in 0..n {
        let x = basis_vector(n, i);
        let rx = rm.column(i);
        for j in 0..n {
            let y = basis_vector(n, j);
            let ry = rm.column(j);
            let lhs = g.br(&rx, &ry);
            let rhs = rm.apply(&vec_add(&g.br(&rx, &y), &g.br(&x, &ry)));
            report.check(Axiom::RotaBaxterIdentity, &[i, j], vec_sub(&lhs, &rhs));
        }
    }
    Ok(report)
}

/// `x∗y = [R(x),y]` on `𝔤` with twists `α, β`.
pub fn rb_induced_prelie(rb: &LinearOperator, g: &BiHomLieAlgebra) -> Result<BiHomPreLieAlgebra> {
    let report = check_rota_baxter(rb, g)?;
    if !report.passed() {
        return Err(Error::Invalid { what: "Rota-Baxter operator", report });
    }
    let rm = rb.matrix();
    let product = BilinearProduct::from_fn(g.dim(), |x, y| g.br(&rm.apply(x), y));
    let a = BiHomPreLieAlgebra::new(product, g.twists().clone())?;
    defect_unless(check_prelie(&a), "Rota-Baxter induced product is not BiHom-pre-Lie")?;
    Ok(a)
}

/// Rota-Baxter operators of weight zero are the O-operators of the adjoint
/// representation; this runs the general construction on that special case.
pub fn rb_as_o_operator(rb: &LinearOperator, g: &BiHomLieAlgebra) -> Result<BiHomPreLieAlgebra> {
    induced_prelie_from_o(rb, &lie_adjoint_rep(g))
}

/// `x∘y = T(ρ(x)T⁻¹(y))` on `𝔤`; its sub-adjacent bracket is checked to be
/// the bracket of `𝔤`.
pub fn compatible_prelie_from_invertible_o(t: &LinearOperator, r: &LieRep) -> Result<BiHomPreLieAlgebra> {
    let g = r.algebra();
    t.expect_shape(g.dim(), r.vdim())?;
    let t_inv = t.matrix().inverse().map_err(|_| Error::NotInvertible("T"))?;
    require_o_operator(t, r)?;
    let tm = t.matrix();
    let product = BilinearProduct::from_fn(g.dim(), |x, y| tm.apply(&r.rho_at(x).apply(&t_inv.apply(y))));
    let a = BiHomPreLieAlgebra::new(product, g.twists().clone())?;
    defect_unless(check_prelie(&a), "compatible product is not BiHom-pre-Lie")?;
    if subadjacent(&a).bracket() != g.bracket() {
        return Err(Error::Defect("compatible product does not recover the bracket".into()));
    }
    Ok(a)
}
