//! BiHom-left-symmetric (BiHom-pre-Lie) and BiHom-Lie algebras given by
//! structure constants, with their axiom checks, the sub-adjacent
//! BiHom-Lie algebra and morphism checks.
//!
//! A product on an `n`-dimensional space is the rank-3 tensor `c` with
//! `e_i ∘ e_j = Σ_k c[i][j][k] e_k`. Every identity is multilinear, so all
//! checks run over basis tuples only.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, basis_vector, vec_add, vec_sub, zero_vector, Matrix, Rational, Vector};
use crate::report::{Axiom, AxiomReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearProduct {
    dim: usize,
    c: Vec<Rational>,
}

impl BilinearProduct {
    pub fn new(dim: usize, c: Vec<Rational>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "product tensor has {} entries, expected {dim}^3",
                c.len()
            )));
        }
        Ok(Self { dim, c })
    }

    pub fn zero(dim: usize) -> Self {
        Self { dim, c: vec![Rational::zero(); dim * dim * dim] }
    }

    /// From `c[i][j][k]` nested as `[i][j][k]`.
    pub fn from_nested(nested: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = nested.len();
        let mut c = Vec::with_capacity(n * n * n);
        for (i, plane) in nested.into_iter().enumerate() {
            if plane.len() != n {
                return Err(Error::Shape(format!("product[{i}] has {} rows, expected {n}", plane.len())));
            }
            for (j, row) in plane.into_iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Shape(format!(
                        "product[{i}][{j}] has {} entries, expected {n}",
                        row.len()
                    )));
                }
                c.extend(row);
            }
        }
        Ok(Self { dim: n, c })
    }

    /// Sparse integer constructor: each `(i, j, k, v)` sets `c[i][j][k] = v`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut p = Self::zero(dim);
        for &(i, j, k, v) in entries {
            p.c[(i * dim + j) * dim + k] = Rational::from_integer(v.into());
        }
        p
    }

    /// Tabulates a bilinear map given on vectors by evaluating it on basis pairs.
    pub fn from_fn(dim: usize, mut f: impl FnMut(&[Rational], &[Rational]) -> Vector) -> Self {
        let basis: Vec<Vector> = (0..dim).map(|i| basis_vector(dim, i)).collect();
        let mut c = Vec::with_capacity(dim * dim * dim);
        for x in &basis {
            for y in &basis {
                let v = f(x, y);
                debug_assert_eq!(v.len(), dim);
                c.extend(v);
            }
        }
        Self { dim, c }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.c
    }

    /// `e_i ∘ e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// Matrix of `y ↦ x ∘ y`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim).map(|j| self.apply(x, &basis_vector(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `x ↦ x ∘ y`.
    pub fn right_mult(&self, y: &[Rational]) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim).map(|i| self.apply(&basis_vector(self.dim, i), y)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self { dim: self.dim, c: vec_add(&self.c, &other.c) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self { dim: self.dim, c: vec_sub(&self.c, &other.c) }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { dim: self.dim, c: self.c.iter().map(|x| x * s).collect() }
    }

    /// The same product written in the basis given by the columns of `p`:
    /// `x ∘' y = p⁻¹(p x ∘ p y)`.
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> Self {
        Self::from_fn(self.dim, |x, y| p_inv.apply(&self.apply(&p.apply(x), &p.apply(y))))
    }
}

/// The commuting, invertible twist maps `(α, β)` of a regular BiHom structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistPair {
    alpha: Matrix,
    beta: Matrix,
    alpha_inv: Matrix,
    beta_inv: Matrix,
}

impl TwistPair {
    /// Fails unless both maps are square of the same size and invertible.
    /// Commutation is not enforced here; the axiom checks report it.
    pub fn new(alpha: Matrix, beta: Matrix) -> Result<Self> {
        if !alpha.is_square() || !beta.is_square() || alpha.rows() != beta.rows() {
            return Err(Error::Shape(format!(
                "twists must be square of equal size, got {:?} and {:?}",
                alpha.shape(),
                beta.shape()
            )));
        }
        let alpha_inv = alpha.inverse().map_err(|_| Error::NotInvertible("alpha"))?;
        let beta_inv = beta.inverse().map_err(|_| Error::NotInvertible("beta"))?;
        Ok(Self { alpha, beta, alpha_inv, beta_inv })
    }

    pub fn identity(n: usize) -> Self {
        let id = Matrix::identity(n);
        Self { alpha: id.clone(), beta: id.clone(), alpha_inv: id.clone(), beta_inv: id }
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn alpha_inv(&self) -> &Matrix {
        &self.alpha_inv
    }

    pub fn beta_inv(&self) -> &Matrix {
        &self.beta_inv
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    /// `α⁻¹β`
    pub fn alpha_inv_beta(&self) -> Matrix {
        &self.alpha_inv * &self.beta
    }

    /// `αβ⁻¹`
    pub fn alpha_beta_inv(&self) -> Matrix {
        &self.alpha * &self.beta_inv
    }

    pub fn direct_sum(&self, other: &TwistPair) -> TwistPair {
        TwistPair {
            alpha: self.alpha.direct_sum(&other.alpha),
            beta: self.beta.direct_sum(&other.beta),
            alpha_inv: self.alpha_inv.direct_sum(&other.alpha_inv),
            beta_inv: self.beta_inv.direct_sum(&other.beta_inv),
        }
    }

    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> TwistPair {
        let conj = |m: &Matrix| &(p_inv * m) * p;
        TwistPair {
            alpha: conj(&self.alpha),
            beta: conj(&self.beta),
            alpha_inv: conj(&self.alpha_inv),
            beta_inv: conj(&self.beta_inv),
        }
    }
}

fn check_dims(what: &str, product: usize, twists: usize) -> Result<()> {
    if product != twists {
        return Err(Error::Shape(format!(
            "{what} has dimension {product} but its twists act on dimension {twists}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiHomPreLieAlgebra {
    product: BilinearProduct,
    twists: TwistPair,
}

impl BiHomPreLieAlgebra {
    pub fn new(product: BilinearProduct, twists: TwistPair) -> Result<Self> {
        check_dims("product", product.dim(), twists.dim())?;
        Ok(Self { product, twists })
    }

    /// Classical left-symmetric algebra: both twists are the identity.
    pub fn untwisted(product: BilinearProduct) -> Self {
        let n = product.dim();
        Self { product, twists: TwistPair::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product(&self) -> &BilinearProduct {
        &self.product
    }

    pub fn twists(&self) -> &TwistPair {
        &self.twists
    }

    pub fn alpha(&self) -> &Matrix {
        self.twists.alpha()
    }

    pub fn beta(&self) -> &Matrix {
        self.twists.beta()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.product.apply(x, y)
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let p_inv = p.inverse().map_err(|_| Error::NotInvertible("change of basis"))?;
        Ok(Self {
            product: self.product.change_basis(p, &p_inv),
            twists: self.twists.change_basis(p, &p_inv),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiHomLieAlgebra {
    bracket: BilinearProduct,
    twists: TwistPair,
}

impl BiHomLieAlgebra {
    pub fn new(bracket: BilinearProduct, twists: TwistPair) -> Result<Self> {
        check_dims("bracket", bracket.dim(), twists.dim())?;
        Ok(Self { bracket, twists })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &BilinearProduct {
        &self.bracket
    }

    pub fn twists(&self) -> &TwistPair {
        &self.twists
    }

    pub fn alpha(&self) -> &Matrix {
        self.twists.alpha()
    }

    pub fn beta(&self) -> &Matrix {
        self.twists.beta()
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket.apply(x, y)
    }
}

/// Images of the basis under a fixed list of maps, cached for identity checks.
pub(crate) struct BasisImages {
    pub e: Vec<Vector>,
    pub alpha: Vec<Vector>,
    pub beta: Vec<Vector>,
    pub alpha_beta: Vec<Vector>,
    pub beta2: Vec<Vector>,
}

impl BasisImages {
    pub fn new(twists: &TwistPair) -> Self {
        let n = twists.dim();
        let ab = twists.alpha() * twists.beta();
        let b2 = twists.beta() * twists.beta();
        let cols = |m: &Matrix| (0..n).map(|j| m.column(j)).collect::<Vec<_>>();
        Self {
            e: (0..n).map(|i| basis_vector(n, i)).collect(),
            alpha: cols(twists.alpha()),
            beta: cols(twists.beta()),
            alpha_beta: cols(&ab),
            beta2: cols(&b2),
        }
    }
}

fn check_commuting_twists(twists: &TwistPair, report: &mut AxiomReport) {
    report.check_matrices(
        Axiom::AlphaBetaCommute,
        &[],
        &(twists.alpha() * twists.beta()),
        &(twists.beta() * twists.alpha()),
    );
}

/// `M(x∘y) - M(x)∘M(y)` on every basis pair.
pub(crate) fn check_multiplicative(
    product: &BilinearProduct,
    map: &Matrix,
    axiom: Axiom,
    report: &mut AxiomReport,
) {
    let n = product.dim();
    let images: Vec<Vector> = (0..n).map(|j| map.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = map.apply(product.basis_product(i, j));
            let rhs = product.apply(&images[i], &images[j]);
            report.check(axiom, &[i, j], vec_sub(&lhs, &rhs));
        }
    }
}

/// `(β(x)·α(y))·β(z) − αβ(x)·(α(y)·z)`, the expression that must be symmetric in `x, y`.
pub(crate) fn left_symmetry_term(
    outer: &BilinearProduct,
    inner: &BilinearProduct,
    imgs: &BasisImages,
    i: usize,
    j: usize,
    k: usize,
) -> Vector {
    let first = outer.apply(&inner.apply(&imgs.beta[i], &imgs.alpha[j]), &imgs.beta[k]);
    let second = outer.apply(&imgs.alpha_beta[i], &inner.apply(&imgs.alpha[j], &imgs.e[k]));
    vec_sub(&first, &second)
}

/// Left-symmetry residual for a mixed pair of products: the identity is
/// evaluated with `outer` applied last and `inner` first. Passing the same
/// product twice gives the ordinary identity.
pub(crate) fn left_symmetry_residual(
    outer: &BilinearProduct,
    inner: &BilinearProduct,
    imgs: &BasisImages,
    i: usize,
    j: usize,
    k: usize,
) -> Vector {
    vec_sub(
        &left_symmetry_term(outer, inner, imgs, i, j, k),
        &left_symmetry_term(outer, inner, imgs, j, i, k),
    )
}

/// Verifies every BiHom-left-symmetric axiom on basis triples.
pub fn check_prelie(a: &BiHomPreLieAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let n = a.dim();
    check_commuting_twists(a.twists(), &mut report);
    check_multiplicative(a.product(), a.alpha(), Axiom::AlphaMultiplicative, &mut report);
    check_multiplicative(a.product(), a.beta(), Axiom::BetaMultiplicative, &mut report);
    let imgs = BasisImages::new(a.twists());
    let p = a.product();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                report.check(
                    Axiom::LeftSymmetry,
                    &[i, j, k],
                    left_symmetry_residual(p, p, &imgs, i, j, k),
                );
            }
        }
    }
    report
}

/// `[β(x),α(y)] + [β(y),α(x)]`
pub(crate) fn skew_residual(br: &BilinearProduct, imgs: &BasisImages, i: usize, j: usize) -> Vector {
    vec_add(&br.apply(&imgs.beta[i], &imgs.alpha[j]), &br.apply(&imgs.beta[j], &imgs.alpha[i]))
}

/// Cyclic sum of `outer(β²(x), inner(β(y), α(z)))`.
pub(crate) fn jacobi_residual(
    outer: &BilinearProduct,
    inner: &BilinearProduct,
    imgs: &BasisImages,
    i: usize,
    j: usize,
    k: usize,
) -> Vector {
    let term = |x: usize, y: usize, z: usize| {
        outer.apply(&imgs.beta2[x], &inner.apply(&imgs.beta[y], &imgs.alpha[z]))
    };
    let mut s = term(i, j, k);
    s = vec_add(&s, &term(j, k, i));
    vec_add(&s, &term(k, i, j))
}

/// Verifies the BiHom-Lie axioms: commuting twists, twists are bracket
/// morphisms, BiHom-skew-symmetry and the cyclic BiHom-Jacobi identity
/// `Σ_cyc [β²(x),[β(y),α(z)]] = 0`.
pub fn check_bihom_lie(g: &BiHomLieAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let n = g.dim();
    let br = g.bracket();
    check_commuting_twists(g.twists(), &mut report);
    check_multiplicative(br, g.alpha(), Axiom::AlphaMultiplicative, &mut report);
    check_multiplicative(br, g.beta(), Axiom::BetaMultiplicative, &mut report);
    let imgs = BasisImages::new(g.twists());
    for i in 0..n {
        for j in i..n {
            report.check(Axiom::SkewSymmetry, &[i, j], skew_residual(br, &imgs, i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                report.check(Axiom::Jacobi, &[i, j, k], jacobi_residual(br, br, &imgs, i, j, k));
            }
        }
    }
    report
}

/// `[x,y]_C = x·y − α⁻¹β(y)·αβ⁻¹(x)` for an arbitrary product with the given twists.
pub fn subadjacent_bracket(product: &BilinearProduct, twists: &TwistPair) -> BilinearProduct {
    let aib = twists.alpha_inv_beta();
    let abi = twists.alpha_beta_inv();
    BilinearProduct::from_fn(product.dim(), |x, y| {
        vec_sub(&product.apply(x, y), &product.apply(&aib.apply(y), &abi.apply(x)))
    })
}

/// The sub-adjacent BiHom-Lie algebra `A^C`, with the same twists.
pub fn subadjacent(a: &BiHomPreLieAlgebra) -> BiHomLieAlgebra {
    BiHomLieAlgebra { bracket: subadjacent_bracket(a.product(), a.twists()), twists: a.twists().clone() }
}

fn check_morphism(
    f: &Matrix,
    src: (&BilinearProduct, &TwistPair),
    dst: (&BilinearProduct, &TwistPair),
) -> Result<AxiomReport> {
    let (n, m) = (src.0.dim(), dst.0.dim());
    if f.shape() != (m, n) {
        return Err(Error::Shape(format!(
            "morphism must be {m}x{n} to map dimension {n} into {m}, got {:?}",
            f.shape()
        )));
    }
    let mut report = AxiomReport::new();
    let images: Vec<Vector> = (0..n).map(|j| f.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(src.0.basis_product(i, j));
            let rhs = dst.0.apply(&images[i], &images[j]);
            report.check(Axiom::PreservesProduct, &[i, j], vec_sub(&lhs, &rhs));
        }
    }
    report.check_matrices(Axiom::PreservesAlpha, &[], &(f * src.1.alpha()), &(dst.1.alpha() * f));
    report.check_matrices(Axiom::PreservesBeta, &[], &(f * src.1.beta()), &(dst.1.beta() * f));
    Ok(report)
}

/// Checks `f(x·y) = f(x)·′f(y)`, `f∘α = α′∘f` and `f∘β = β′∘f`.
pub fn is_prelie_morphism(
    f: &Matrix,
    a: &BiHomPreLieAlgebra,
    a2: &BiHomPreLieAlgebra,
) -> Result<AxiomReport> {
    check_morphism(f, (a.product(), a.twists()), (a2.product(), a2.twists()))
}

/// Checks `f[x,y] = [f(x),f(y)]′` and the twist intertwinings.
pub fn is_lie_morphism(f: &Matrix, g: &BiHomLieAlgebra, g2: &BiHomLieAlgebra) -> Result<AxiomReport> {
    check_morphism(f, (g.bracket(), g.twists()), (g2.bracket(), g2.twists()))
}

/// Yau twist of a classical product: `x ·_{α,β} y = α(x)·β(y)`.
///
/// The result is BiHom-left-symmetric whenever the input is left-symmetric
/// and `α, β` are commuting automorphisms of it; those hypotheses are
/// checked and reported as [`Error::Invalid`].
pub fn yau_twist(classical: &BilinearProduct, alpha: Matrix, beta: Matrix) -> Result<BiHomPreLieAlgebra> {
    let twists = TwistPair::new(alpha, beta)?;
    check_dims("product", classical.dim(), twists.dim())?;
    let mut report = AxiomReport::new();
    check_commuting_twists(&twists, &mut report);
    check_multiplicative(classical, twists.alpha(), Axiom::AlphaMultiplicative, &mut report);
    check_multiplicative(classical, twists.beta(), Axiom::BetaMultiplicative, &mut report);
    if !report.passed() {
        return Err(Error::Invalid { what: "Yau twist hypotheses", report });
    }
    Ok(yau_twist_unchecked(classical, twists))
}

pub(crate) fn yau_twist_unchecked(classical: &BilinearProduct, twists: TwistPair) -> BiHomPreLieAlgebra {
    let (a, b) = (twists.alpha().clone(), twists.beta().clone());
    let product = BilinearProduct::from_fn(classical.dim(), |x, y| classical.apply(&a.apply(x), &b.apply(y)));
    BiHomPreLieAlgebra { product, twists }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn nilpotent(alpha: &[i64], beta: &[i64]) -> BiHomPreLieAlgebra {
        let p = BilinearProduct::from_entries(2, &[(0, 0, 1, 1)]);
        BiHomPreLieAlgebra::new(p, TwistPair::new(Matrix::diag_ints(alpha), Matrix::diag_ints(beta)).unwrap())
            .unwrap()
    }

    #[test]
    fn one_dim_unit_passes() {
        let a = BiHomPreLieAlgebra::untwisted(BilinearProduct::from_entries(1, &[(0, 0, 0, 1)]));
        assert!(check_prelie(&a).passed());
        assert!(subadjacent(&a).bracket().is_zero());
    }

    #[test]
    fn nilpotent_with_diagonal_twists_passes() {
        let a = nilpotent(&[2, 4], &[3, 9]);
        assert!(check_prelie(&a).passed());
        let g = subadjacent(&a);
        // [e1,e1]_C = e2 − (3/2)(2/3) e2 = 0
        assert!(g.bracket().is_zero());
        assert!(check_bihom_lie(&g).passed());
    }

    #[test]
    fn non_multiplicative_alpha_is_reported() {
        let p = BilinearProduct::from_entries(2, &[(0, 1, 0, 1), (1, 0, 0, -1)]);
        let bad = BiHomPreLieAlgebra::new(
            p,
            TwistPair::new(Matrix::diag_ints(&[1, 2]), Matrix::identity(2)).unwrap(),
        )
        .unwrap();
        let r = check_prelie(&bad);
        assert!(r.has(Axiom::AlphaMultiplicative));
        // α(e1·e2) = e1 but α(e1)·α(e2) = 2e1
        let v = r.violations.iter().find(|v| v.indices == vec![0, 1]).unwrap();
        assert_eq!(v.residual, vec![rat(-1), rat(0)]);
    }

    #[test]
    fn non_commuting_twists_reported() {
        let a = BiHomPreLieAlgebra::new(
            BilinearProduct::zero(2),
            TwistPair::new(Matrix::from_ints(&[[1, 1], [0, 1]]), Matrix::diag_ints(&[1, 2])).unwrap(),
        )
        .unwrap();
        assert_eq!(check_prelie(&a).failed_axioms(), vec![Axiom::AlphaBetaCommute]);
    }

    #[test]
    fn singular_twist_rejected() {
        let e = TwistPair::new(Matrix::diag_ints(&[1, 0]), Matrix::identity(2));
        assert!(matches!(e, Err(Error::NotInvertible("alpha"))));
    }

    #[test]
    fn abelian_bracket_passes() {
        let g = BiHomLieAlgebra::new(
            BilinearProduct::zero(3),
            TwistPair::new(Matrix::diag_ints(&[2, 3, 5]), Matrix::diag_ints(&[1, -1, 7])).unwrap(),
        )
        .unwrap();
        assert!(check_bihom_lie(&g).passed());
    }

    #[test]
    fn symmetric_bracket_fails_skew() {
        let g = BiHomLieAlgebra::new(
            BilinearProduct::from_entries(2, &[(0, 1, 0, 1), (1, 0, 0, 1)]),
            TwistPair::identity(2),
        )
        .unwrap();
        assert!(check_bihom_lie(&g).has(Axiom::SkewSymmetry));
    }

    #[test]
    fn identity_twists_give_commutator() {
        // e1·e1 = e1, e1·e2 = e2 (the affine line algebra)
        let p = BilinearProduct::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]);
        let g = subadjacent(&BiHomPreLieAlgebra::untwisted(p.clone()));
        let commutator = BilinearProduct::from_fn(2, |x, y| vec_sub(&p.apply(x, y), &p.apply(y, x)));
        assert_eq!(g.bracket(), &commutator);
    }

    #[test]
    fn zero_and_identity_morphisms() {
        let a = nilpotent(&[2, 4], &[3, 9]);
        assert!(is_prelie_morphism(&Matrix::identity(2), &a, &a).unwrap().passed());
        assert!(is_prelie_morphism(&Matrix::zeros(2, 2), &a, &a).unwrap().passed());
        assert!(is_prelie_morphism(&Matrix::zeros(3, 2), &a, &a).is_err());
    }

    #[test]
    fn dimension_zero_is_vacuous() {
        let a = BiHomPreLieAlgebra::untwisted(BilinearProduct::zero(0));
        assert!(check_prelie(&a).passed());
        assert!(check_bihom_lie(&subadjacent(&a)).passed());
    }

    #[test]
    fn change_basis_preserves_validity() {
        let a = nilpotent(&[2, 4], &[3, 9]);
        let p = Matrix::from_rows(vec![vec![rat(1), frac(1, 2)], vec![rat(-1), rat(3)]]).unwrap();
        let b = a.change_basis(&p).unwrap();
        assert!(check_prelie(&b).passed());
        assert!(is_prelie_morphism(&p, &b, &a).unwrap().passed());
    }
}
