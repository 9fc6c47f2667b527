//! Representations of BiHom-pre-Lie and BiHom-Lie algebras and the
//! constructions built from them.
//!
//! Action tensors are stored per basis element: `left[i]` is the `m×m`
//! matrix of `L(e_i)`, and `L(x) = Σ x_i L(e_i)`. Semidirect products put
//! the algebra basis first and the carrier basis after it. Tensor products
//! order `v_i ⊗ w_j` lexicographically.

use num_traits::Zero;

use crate::algebra::{
    check_multiplicative, subadjacent, yau_twist_unchecked, BasisImages, BiHomLieAlgebra,
    BiHomPreLieAlgebra, BilinearProduct, TwistPair,
};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, vec_add, vec_sub, Matrix, Rational};
use crate::report::{Axiom, AxiomReport};

/// `Σ x_i M_i`
pub(crate) fn combine(mats: &[Matrix], x: &[Rational], m: usize) -> Matrix {
    let mut acc = Matrix::zeros(m, m);
    for (mi, xi) in mats.iter().zip(x) {
        if !xi.is_zero() {
            acc = &acc + &mi.scale(xi);
        }
    }
    acc
}

fn check_square(name: &str, mats: &[Matrix], count: usize, m: usize) -> Result<()> {
    if mats.len() != count {
        return Err(Error::Shape(format!("{name} has {} matrices, expected {count}", mats.len())));
    }
    for (i, a) in mats.iter().enumerate() {
        if a.shape() != (m, m) {
            return Err(Error::Shape(format!("{name}[{i}] is {:?}, expected {m}x{m}", a.shape())));
        }
    }
    Ok(())
}

fn invert(m: &Matrix, name: &'static str) -> Option<Matrix> {
    let _ = name;
    m.inverse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieRep {
    algebra: BiHomPreLieAlgebra,
    vdim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    phi: Matrix,
    psi: Matrix,
    phi_inv: Option<Matrix>,
    psi_inv: Option<Matrix>,
}

impl PreLieRep {
    /// Regular representation: `φ` and `ψ` must be invertible.
    pub fn new(
        algebra: BiHomPreLieAlgebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
        phi: Matrix,
        psi: Matrix,
    ) -> Result<Self> {
        let r = Self::new_relaxed(algebra, left, right, phi, psi)?;
        if r.phi_inv.is_none() {
            return Err(Error::NotInvertible("phi"));
        }
        if r.psi_inv.is_none() {
            return Err(Error::NotInvertible("psi"));
        }
        Ok(r)
    }

    /// Allows singular `φ, ψ`. Such a representation can be checked and used
    /// for semidirect-free constructions, but anything needing `φ⁻¹` or `ψ⁻¹`
    /// reports [`Error::NotInvertible`].
    pub fn new_relaxed(
        algebra: BiHomPreLieAlgebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
        phi: Matrix,
        psi: Matrix,
    ) -> Result<Self> {
        let m = phi.rows();
        let n = algebra.dim();
        if !phi.is_square() || psi.shape() != (m, m) {
            return Err(Error::Shape(format!(
                "phi and psi must be square of equal size, got {:?} and {:?}",
                phi.shape(),
                psi.shape()
            )));
        }
        check_square("L", &left, n, m)?;
        check_square("R", &right, n, m)?;
        let phi_inv = invert(&phi, "phi");
        let psi_inv = invert(&psi, "psi");
        Ok(Self { algebra, vdim: m, left, right, phi, psi, phi_inv, psi_inv })
    }

    pub fn algebra(&self) -> &BiHomPreLieAlgebra {
        &self.algebra
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn phi_inv(&self) -> Result<&Matrix> {
        self.phi_inv.as_ref().ok_or(Error::NotInvertible("phi"))
    }

    pub fn psi_inv(&self) -> Result<&Matrix> {
        self.psi_inv.as_ref().ok_or(Error::NotInvertible("psi"))
    }

    pub fn is_regular(&self) -> bool {
        self.phi_inv.is_some() && self.psi_inv.is_some()
    }

    /// `L(x)`
    pub fn left_at(&self, x: &[Rational]) -> Matrix {
        combine(&self.left, x, self.vdim)
    }

    /// `R(x)`
    pub fn right_at(&self, x: &[Rational]) -> Matrix {
        combine(&self.right, x, self.vdim)
    }

    /// Same representation with `L, R` replaced; used to build corrupted
    /// instances in tests and demos.
    pub fn with_actions(&self, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        Self::new_relaxed(self.algebra.clone(), left, right, self.phi.clone(), self.psi.clone())
    }

    /// Rewrites the algebra in the basis given by the columns of `p` and the
    /// carrier in the basis given by the columns of `q`.
    pub fn change_basis(&self, p: &Matrix, q: &Matrix) -> Result<Self> {
        let algebra = self.algebra.change_basis(p)?;
        let q_inv = q.inverse().map_err(|_| Error::NotInvertible("carrier change of basis"))?;
        let n = self.algebra.dim();
        let conj = |m: &Matrix| &(&q_inv * m) * q;
        let left = (0..n).map(|i| conj(&self.left_at(&p.column(i)))).collect();
        let right = (0..n).map(|i| conj(&self.right_at(&p.column(i)))).collect();
        Self::new_relaxed(algebra, left, right, conj(&self.phi), conj(&self.psi))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRep {
    algebra: BiHomLieAlgebra,
    vdim: usize,
    rho: Vec<Matrix>,
    phi: Matrix,
    psi: Matrix,
    phi_inv: Option<Matrix>,
    psi_inv: Option<Matrix>,
}

impl LieRep {
    pub fn new(algebra: BiHomLieAlgebra, rho: Vec<Matrix>, phi: Matrix, psi: Matrix) -> Result<Self> {
        let r = Self::new_relaxed(algebra, rho, phi, psi)?;
        if r.phi_inv.is_none() {
            return Err(Error::NotInvertible("phi"));
        }
        if r.psi_inv.is_none() {
            return Err(Error::NotInvertible("psi"));
        }
        Ok(r)
    }

    pub fn new_relaxed(algebra: BiHomLieAlgebra, rho: Vec<Matrix>, phi: Matrix, psi: Matrix) -> Result<Self> {
        let m = phi.rows();
        if !phi.is_square() || psi.shape() != (m, m) {
            return Err(Error::Shape(format!(
                "phi and psi must be square of equal size, got {:?} and {:?}",
                phi.shape(),
                psi.shape()
            )));
        }
        check_square("rho", &rho, algebra.dim(), m)?;
        let phi_inv = invert(&phi, "phi");
        let psi_inv = invert(&psi, "psi");
        Ok(Self { algebra, vdim: m, rho, phi, psi, phi_inv, psi_inv })
    }

    pub fn algebra(&self) -> &BiHomLieAlgebra {
        &self.algebra
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn phi_inv(&self) -> Result<&Matrix> {
        self.phi_inv.as_ref().ok_or(Error::NotInvertible("phi"))
    }

    pub fn psi_inv(&self) -> Result<&Matrix> {
        self.psi_inv.as_ref().ok_or(Error::NotInvertible("psi"))
    }

    /// `ρ(x)`
    pub fn rho_at(&self, x: &[Rational]) -> Matrix {
        combine(&self.rho, x, self.vdim)
    }

    pub fn with_rho(&self, rho: Vec<Matrix>) -> Result<Self> {
        Self::new_relaxed(self.algebra.clone(), rho, self.phi.clone(), self.psi.clone())
    }
}

/// Checks the intertwining identities, the left-action identity
/// `L(β(x)·α(y))ψ − L(αβ(x))L(α(y))` symmetric in `x, y`, and the mixed identity
/// `R(β(x))L(β(y))φ − L(αβ(y))R(x)φ = R(β(x))R(α(y))ψ − R(α(y)·x)φψ`.
pub fn check_prelie_rep(r: &PreLieRep) -> AxiomReport {
    let a = r.algebra();
    let n = a.dim();
    let (phi, psi) = (r.phi(), r.psi());
    let imgs = BasisImages::new(a.twists());
    let mut report = AxiomReport::new();
    report.check_matrices(Axiom::PhiPsiCommute, &[], &(phi * psi), &(psi * phi));

    let left_at = |x: &[Rational]| r.left_at(x);
    let right_at = |x: &[Rational]| r.right_at(x);
    for i in 0..n {
        let (l, rr) = (&r.left[i], &r.right[i]);
        report.check_matrices(Axiom::PhiLeft, &[i], &(phi * l), &(&left_at(&imgs.alpha[i]) * phi));
        report.check_matrices(Axiom::PsiLeft, &[i], &(psi * l), &(&left_at(&imgs.beta[i]) * psi));
        report.check_matrices(Axiom::PhiRight, &[i], &(phi * rr), &(&right_at(&imgs.alpha[i]) * phi));
        report.check_matrices(Axiom::PsiRight, &[i], &(psi * rr), &(&right_at(&imgs.beta[i]) * psi));
    }

    let left_term = |i: usize, j: usize| {
        let prod = a.mul(&imgs.beta[i], &imgs.alpha[j]);
        &(&left_at(&prod) * psi) - &(&left_at(&imgs.alpha_beta[i]) * &left_at(&imgs.alpha[j]))
    };
    for i in 0..n {
        for j in (i + 1)..n {
            report.check_matrices(Axiom::LeftActionIdentity, &[i, j], &left_term(i, j), &left_term(j, i));
        }
    }

    let phi_psi = phi * psi;
    for i in 0..n {
        for j in 0..n {
            let rbx = right_at(&imgs.beta[i]);
            let lhs = &(&(&rbx * &left_at(&imgs.beta[j])) * phi)
                - &(&(&left_at(&imgs.alpha_beta[j]) * &r.right[i]) * phi);
            let ay_x = a.mul(&imgs.alpha[j], &imgs.e[i]);
            let rhs = &(&(&rbx * &right_at(&imgs.alpha[j])) * psi) - &(&right_at(&ay_x) * &phi_psi);
            report.check_matrices(Axiom::RightActionIdentity, &[i, j], &lhs, &rhs);
        }
    }
    report
}

/// Checks `ρ(α(x))φ = φρ(x)`, `ρ(β(x))ψ = ψρ(x)` and
/// `ρ([β(x),y])ψ = ρ(αβ(x))ρ(y) − ρ(β(y))ρ(α(x))`.
pub fn check_lie_rep(r: &LieRep) -> AxiomReport {
    let g = r.algebra();
    let n = g.dim();
    let (phi, psi) = (r.phi(), r.psi());
    let imgs = BasisImages::new(g.twists());
    let mut report = AxiomReport::new();
    report.check_matrices(Axiom::PhiPsiCommute, &[], &(phi * psi), &(psi * phi));
    for i in 0..n {
        report.check_matrices(Axiom::PhiRho, &[i], &(&r.rho_at(&imgs.alpha[i]) * phi), &(phi * &r.rho[i]));
        report.check_matrices(Axiom::PsiRho, &[i], &(&r.rho_at(&imgs.beta[i]) * psi), &(psi * &r.rho[i]));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = &r.rho_at(&g.br(&imgs.beta[i], &imgs.e[j])) * psi;
            let rhs = &(&r.rho_at(&imgs.alpha_beta[i]) * &r.rho[j])
                - &(&r.rho_at(&imgs.beta[j]) * &r.rho_at(&imgs.alpha[i]));
            report.check_matrices(Axiom::RhoBracket, &[i, j], &lhs, &rhs);
        }
    }
    report
}

/// `ℓ_x(y) = x·y`, `r_x(y) = y·x` with `φ = α`, `ψ = β`.
pub fn adjoint_rep(a: &BiHomPreLieAlgebra) -> PreLieRep {
    let n = a.dim();
    let p = a.product();
    let left = (0..n).map(|i| p.left_mult(&basis_vector(n, i))).collect();
    let right = (0..n).map(|i| p.right_mult(&basis_vector(n, i))).collect();
    PreLieRep::new(a.clone(), left, right, a.alpha().clone(), a.beta().clone())
        .expect("algebra twists are invertible")
}

/// One-dimensional carrier, zero actions, `φ = ψ = 1`.
pub fn trivial_rep(a: &BiHomPreLieAlgebra) -> PreLieRep {
    let zeros = vec![Matrix::zeros(1, 1); a.dim()];
    PreLieRep::new(a.clone(), zeros.clone(), zeros, Matrix::identity(1), Matrix::identity(1))
        .expect("identity is invertible")
}

/// `ad_x(y) = [x,y]` with `φ = α`, `ψ = β`.
pub fn lie_adjoint_rep(g: &BiHomLieAlgebra) -> LieRep {
    let n = g.dim();
    let rho = (0..n).map(|i| g.bracket().left_mult(&basis_vector(n, i))).collect();
    LieRep::new(g.clone(), rho, g.alpha().clone(), g.beta().clone()).expect("algebra twists are invertible")
}

/// Zero action on an `m`-dimensional carrier with the given twists.
pub fn zero_lie_rep(g: &BiHomLieAlgebra, phi: Matrix, psi: Matrix) -> Result<LieRep> {
    let m = phi.rows();
    LieRep::new(g.clone(), vec![Matrix::zeros(m, m); g.dim()], phi, psi)
}

fn split(v: &[Rational], n: usize) -> (&[Rational], &[Rational]) {
    v.split_at(n)
}

fn join(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let mut out = a;
    out.extend(b);
    out
}

/// `(x+u)·(y+v) = x·y + L(x)v + R(y)u` on `A⊕V` with twists `α⊕φ`, `β⊕ψ`,
/// built without checking the representation axioms first.
pub fn semidirect_prelie_unchecked(r: &PreLieRep) -> Result<BiHomPreLieAlgebra> {
    let a = r.algebra();
    let n = a.dim();
    let twists = TwistPair::new(a.alpha().direct_sum(r.phi()), a.beta().direct_sum(r.psi()))?;
    let product = BilinearProduct::from_fn(n + r.vdim(), |p, q| {
        let (x, u) = split(p, n);
        let (y, v) = split(q, n);
        let top = a.mul(x, y);
        let bottom = vec_add(&r.left_at(x).apply(v), &r.right_at(y).apply(u));
        join(top, bottom)
    });
    BiHomPreLieAlgebra::new(product, twists)
}

/// Semidirect product `A ⋉_(L,R) V`; rejects invalid representations.
pub fn semidirect_prelie(r: &PreLieRep) -> Result<BiHomPreLieAlgebra> {
    let report = check_prelie_rep(r);
    if !report.passed() {
        return Err(Error::Invalid { what: "representation", report });
    }
    semidirect_prelie_unchecked(r)
}

/// `[x+u,y+v] = [x,y] + ρ(x)v − ρ(α⁻¹β(y))φψ⁻¹u`, without checking `ρ` first.
pub fn semidirect_lie_unchecked(r: &LieRep) -> Result<BiHomLieAlgebra> {
    let g = r.algebra();
    let n = g.dim();
    let phi_psi_inv = r.phi() * r.psi_inv()?;
    let aib = g.twists().alpha_inv_beta();
    let twists = TwistPair::new(g.alpha().direct_sum(r.phi()), g.beta().direct_sum(r.psi()))?;
    let bracket = BilinearProduct::from_fn(n + r.vdim(), |p, q| {
        let (x, u) = split(p, n);
        let (y, v) = split(q, n);
        let top = g.br(x, y);
        let bottom = vec_sub(
            &r.rho_at(x).apply(v),
            &(&r.rho_at(&aib.apply(y)) * &phi_psi_inv).apply(u),
        );
        join(top, bottom)
    });
    BiHomLieAlgebra::new(bracket, twists)
}

/// Semidirect product `𝔤 ⋉_ρ V`; rejects invalid representations.
pub fn semidirect_lie(r: &LieRep) -> Result<BiHomLieAlgebra> {
    let report = check_lie_rep(r);
    if !report.passed() {
        return Err(Error::Invalid { what: "representation", report });
    }
    semidirect_lie_unchecked(r)
}

/// Which induced representation of the sub-adjacent algebra to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedVariant {
    /// `ρ = L`
    LeftOnly,
    /// `ρ(x) = L(x) − R(αβ⁻¹(x))φ⁻¹ψ`
    Full,
}

/// Representation of the sub-adjacent BiHom-Lie algebra on the same carrier.
pub fn induced_lie_rep(r: &PreLieRep, variant: InducedVariant) -> Result<LieRep> {
    let a = r.algebra();
    let n = a.dim();
    let rho = match variant {
        InducedVariant::LeftOnly => r.left().to_vec(),
        InducedVariant::Full => {
            let twist = r.phi_inv()? * r.psi();
            let abi = a.twists().alpha_beta_inv();
            (0..n)
                .map(|i| &r.left[i] - &(&r.right_at(&abi.column(i)) * &twist))
                .collect()
        }
    };
    LieRep::new(subadjacent(a), rho, r.phi().clone(), r.psi().clone())
}

/// Hypotheses under which a classical representation twists into a
/// representation of the Yau-twisted algebra.
pub fn check_twist_hypotheses(
    classical: &PreLieRep,
    alpha: &Matrix,
    beta: &Matrix,
    phi: &Matrix,
    psi: &Matrix,
) -> Result<AxiomReport> {
    let a = classical.algebra();
    let (n, m) = (a.dim(), classical.vdim());
    if alpha.shape() != (n, n) || beta.shape() != (n, n) || phi.shape() != (m, m) || psi.shape() != (m, m) {
        return Err(Error::Shape("twist maps do not match algebra/carrier dimensions".into()));
    }
    let mut report = AxiomReport::new();
    if !a.twists().is_identity() || !classical.phi().is_identity() || !classical.psi().is_identity() {
        report.check(Axiom::ClassicalTwists, &[], vec![Rational::from_integer(1.into())]);
    }
    report.check_matrices(Axiom::AlphaBetaCommute, &[], &(alpha * beta), &(beta * alpha));
    report.check_matrices(Axiom::PhiPsiCommute, &[], &(phi * psi), &(psi * phi));
    check_multiplicative(a.product(), alpha, Axiom::AlphaMultiplicative, &mut report);
    check_multiplicative(a.product(), beta, Axiom::BetaMultiplicative, &mut report);
    for i in 0..n {
        let (ai, bi) = (alpha.column(i), beta.column(i));
        let (l, r) = (&classical.left[i], &classical.right[i]);
        report.check_matrices(Axiom::PhiLeft, &[i], &(phi * l), &(&classical.left_at(&ai) * phi));
        report.check_matrices(Axiom::PsiLeft, &[i], &(psi * l), &(&classical.left_at(&bi) * psi));
        report.check_matrices(Axiom::PhiRight, &[i], &(phi * r), &(&classical.right_at(&ai) * phi));
        report.check_matrices(Axiom::PsiRight, &[i], &(psi * r), &(&classical.right_at(&bi) * psi));
    }
    Ok(report)
}

/// Twists a classical representation `(V, L, R)` of `(A, ·)` into the
/// representation `𝔏(x) = L(α(x))ψ`, `ℜ(x) = R(β(x))φ` of `(A, ·_{α,β}, α, β)`.
pub fn twist_rep(classical: &PreLieRep, alpha: Matrix, beta: Matrix, phi: Matrix, psi: Matrix) -> Result<PreLieRep> {
    let report = check_twist_hypotheses(classical, &alpha, &beta, &phi, &psi)?;
    if !report.passed() {
        return Err(Error::Invalid { what: "twist hypotheses", report });
    }
    let n = classical.algebra().dim();
    let left = (0..n).map(|i| &classical.left_at(&alpha.column(i)) * &psi).collect();
    let right = (0..n).map(|i| &classical.right_at(&beta.column(i)) * &phi).collect();
    let algebra = yau_twist_unchecked(classical.algebra().product(), TwistPair::new(alpha, beta)?);
    PreLieRep::new(algebra, left, right, phi, psi)
}

/// `V ⊗ W` with `L = L_V⊗ψ_W + ψ_V⊗(L_W − R_W(αβ⁻¹(·))φ_W⁻¹ψ_W)`,
/// `R = R_V⊗φ_W`, `φ = φ_V⊗φ_W`, `ψ = ψ_V⊗ψ_W`.
pub fn tensor_rep(rv: &PreLieRep, rw: &PreLieRep) -> Result<PreLieRep> {
    if rv.algebra() != rw.algebra() {
        return Err(Error::Mismatch("representations are over different algebras".into()));
    }
    let a = rv.algebra();
    let n = a.dim();
    let abi = a.twists().alpha_beta_inv();
    let w_twist = rw.phi_inv()? * rw.psi();
    let left = (0..n)
        .map(|i| {
            let w_part = &rw.left[i] - &(&rw.right_at(&abi.column(i)) * &w_twist);
            &rv.left[i].kron(rw.psi()) + &rv.psi().kron(&w_part)
        })
        .collect();
    let right = (0..n).map(|i| rv.right[i].kron(rw.phi())).collect();
    PreLieRep::new(a.clone(), left, right, rv.phi().kron(rw.phi()), rv.psi().kron(rw.psi()))
}

/// `V ⊕ W` with block-diagonal actions and twists.
pub fn direct_sum_rep(rv: &PreLieRep, rw: &PreLieRep) -> Result<PreLieRep> {
    if rv.algebra() != rw.algebra() {
        return Err(Error::Mismatch("representations are over different algebras".into()));
    }
    let n = rv.algebra().dim();
    let left = (0..n).map(|i| rv.left[i].direct_sum(&rw.left[i])).collect();
    let right = (0..n).map(|i| rv.right[i].direct_sum(&rw.right[i])).collect();
    PreLieRep::new_relaxed(
        rv.algebra().clone(),
        left,
        right,
        rv.phi().direct_sum(rw.phi()),
        rv.psi().direct_sum(rw.psi()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_bihom_lie, check_prelie};
    use crate::linalg::rat;

    fn nilpotent() -> BiHomPreLieAlgebra {
        BiHomPreLieAlgebra::new(
            BilinearProduct::from_entries(2, &[(0, 0, 1, 1)]),
            TwistPair::new(Matrix::diag_ints(&[2, 4]), Matrix::diag_ints(&[3, 9])).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn adjoint_of_unit_line() {
        let a = BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(1, &[(0, 0, 0, 1)]));
        let r = adjoint_rep(&a);
        assert_eq!(r.left()[0], Matrix::identity(1));
        assert_eq!(r.right()[0], Matrix::identity(1));
        assert!(check_prelie_rep(&r).passed());
    }

    #[test]
    fn adjoint_of_nilpotent_reads_structure_constants() {
        let r = adjoint_rep(&nilpotent());
        let e21 = Matrix::from_ints(&[[0, 0], [1, 0]]);
        assert_eq!(r.left()[0], e21);
        assert_eq!(r.right()[0], e21);
        assert!(r.left()[1].is_zero() && r.right()[1].is_zero());
        assert!(check_prelie_rep(&r).passed());
    }

    #[test]
    fn trivial_rep_passes_and_semidirect_adds_abelian_line() {
        let a = nilpotent();
        let t = trivial_rep(&a);
        assert!(check_prelie_rep(&t).passed());
        let s = semidirect_prelie(&t).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(check_prelie(&s).passed());
        for i in 0..3 {
            assert!(s.product().basis_product(i, 2).iter().all(Zero::is_zero));
            assert!(s.product().basis_product(2, i).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn induced_full_variant_vanishes_on_nilpotent() {
        let r = adjoint_rep(&nilpotent());
        let rho = induced_lie_rep(&r, InducedVariant::Full).unwrap();
        assert!(rho.rho().iter().all(Matrix::is_zero));
        assert!(check_lie_rep(&rho).passed());
        assert!(check_lie_rep(&induced_lie_rep(&r, InducedVariant::LeftOnly).unwrap()).passed());
    }

    #[test]
    fn corrupted_right_action_fails_right_identity() {
        // e1·e1 = e1, e1·e2 = e2 with identity twists
        let a = BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]));
        let r = adjoint_rep(&a);
        let doubled = r.right().iter().map(|m| m.scale(&rat(2))).collect();
        let bad = r.with_actions(r.left().to_vec(), doubled).unwrap();
        let report = check_prelie_rep(&bad);
        assert!(report.has(Axiom::RightActionIdentity));
        assert!(!check_prelie(&semidirect_prelie_unchecked(&bad).unwrap()).passed());
        assert!(matches!(semidirect_prelie(&bad), Err(Error::Invalid { .. })));
    }

    #[test]
    fn lie_adjoint_and_zero_reps_pass() {
        let g = subadjacent(&BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(
            2,
            &[(0, 0, 0, 1), (0, 1, 1, 1)],
        )));
        let ad = lie_adjoint_rep(&g);
        assert!(check_lie_rep(&ad).passed());
        assert!(check_bihom_lie(&semidirect_lie(&ad).unwrap()).passed());
        let z = zero_lie_rep(&g, Matrix::identity(2), Matrix::identity(2)).unwrap();
        assert!(check_lie_rep(&z).passed());
    }

    #[test]
    fn twist_rep_identity_is_noop() {
        let a = BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]));
        let r = adjoint_rep(&a);
        let id = Matrix::identity(2);
        let t = twist_rep(&r, id.clone(), id.clone(), id.clone(), id).unwrap();
        assert_eq!(t, r);
    }

    #[test]
    fn twist_rep_rejects_non_multiplicative_alpha() {
        let a = BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(2, &[(0, 0, 1, 1)]));
        let r = adjoint_rep(&a);
        let alpha = Matrix::diag_ints(&[2, 3]);
        let err = twist_rep(&r, alpha.clone(), Matrix::identity(2), alpha, Matrix::identity(2)).unwrap_err();
        match err {
            Error::Invalid { report, .. } => assert!(report.has(Axiom::AlphaMultiplicative)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tensor_with_trivial() {
        let a = nilpotent();
        let t = trivial_rep(&a);
        assert_eq!(tensor_rep(&t, &t).unwrap(), t);
        let adj = adjoint_rep(&a);
        let at = tensor_rep(&adj, &t).unwrap();
        // trivial factor: L = L_V ⊗ 1, R = R_V ⊗ 1
        assert_eq!(at.left(), adj.left());
        assert!(check_prelie_rep(&at).passed());
        let aa = tensor_rep(&adj, &adj).unwrap();
        assert_eq!(aa.vdim(), 4);
        assert!(check_prelie_rep(&aa).passed());
    }

    #[test]
    fn relaxed_rep_reports_missing_inverse() {
        let a = nilpotent();
        let r = PreLieRep::new_relaxed(
            a.clone(),
            vec![Matrix::zeros(1, 1); 2],
            vec![Matrix::zeros(1, 1); 2],
            Matrix::zeros(1, 1),
            Matrix::identity(1),
        )
        .unwrap();
        assert!(check_prelie_rep(&r).passed());
        assert!(matches!(induced_lie_rep(&r, InducedVariant::Full), Err(Error::NotInvertible("phi"))));
        assert!(PreLieRep::new(a, vec![Matrix::zeros(1, 1); 2], vec![Matrix::zeros(1, 1); 2], Matrix::zeros(1, 1), Matrix::identity(1)).is_err());
    }
}
