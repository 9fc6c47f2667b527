//! Cochain complex of a BiHom-pre-Lie algebra with coefficients in a
//! representation.
//!
//! An `n`-cochain is stored as its full value tensor `t[i₁]…[iₙ][k]` on basis
//! tuples. Cochain spaces are solved in skew-canonical coordinates: tuples
//! whose first `n−1` indices are strictly increasing.

use num_traits::{One, Zero};

use crate::algebra::{check_prelie, subadjacent_bracket, BiHomPreLieAlgebra, BilinearProduct};
use crate::error::{Error, Result};
use crate::linalg::{axpy, basis_vector, is_zero_vector, vec_sub, zero_vector, Matrix, Rational, Vector};
use crate::report::{Axiom, AxiomReport};
use crate::representation::{check_prelie_rep, PreLieRep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    adim: usize,
    vdim: usize,
    data: Vec<Rational>,
}

fn digits(mut flat: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in (0..len).rev() {
        out[slot] = flat % base;
        flat /= base;
    }
    out
}

fn flat_index(tuple: &[usize], base: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * base + i)
}

impl Cochain {
    pub fn zero(degree: usize, adim: usize, vdim: usize) -> Self {
        let len = adim.pow(degree as u32) * vdim;
        Self { degree, adim, vdim, data: zero_vector(len) }
    }

    /// `data` lists `f(e_{i₁},…,e_{iₙ})` for tuples in lexicographic order,
    /// each as a `vdim`-vector.
    pub fn new(degree: usize, adim: usize, vdim: usize, data: Vec<Rational>) -> Result<Self> {
        let len = adim.pow(degree as u32) * vdim;
        if data.len() != len {
            return Err(Error::Shape(format!("cochain tensor has {} entries, expected {len}", data.len())));
        }
        Ok(Self { degree, adim, vdim, data })
    }

    pub fn from_fn(degree: usize, adim: usize, vdim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut c = Self::zero(degree, adim, vdim);
        for t in 0..adim.pow(degree as u32) {
            let v = f(&digits(t, adim, degree));
            debug_assert_eq!(v.len(), vdim);
            c.data[t * vdim..(t + 1) * vdim].clone_from_slice(&v);
        }
        c
    }

    /// Degree-1 cochain of a linear map `A → V` (matrix `V × A`).
    pub fn from_linear(m: &Matrix) -> Self {
        Self::from_fn(1, m.cols(), m.rows(), |t| m.column(t[0]))
    }

    /// Degree-2 cochain of a bilinear map `A × A → A`.
    pub fn from_bilinear(p: &BilinearProduct) -> Self {
        Self::from_fn(2, p.dim(), p.dim(), |t| p.basis_product(t[0], t[1]).to_vec())
    }

    pub fn to_linear(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::Shape(format!("degree {} cochain is not a linear map", self.degree)));
        }
        Ok(Matrix::from_fn(self.vdim, self.adim, |k, i| self.data[i * self.vdim + k].clone()))
    }

    pub fn to_bilinear(&self) -> Result<BilinearProduct> {
        if self.degree != 2 || self.adim != self.vdim {
            return Err(Error::Shape("only degree-2 cochains with values in A are bilinear products".into()));
        }
        BilinearProduct::new(self.adim, self.data.clone())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    /// `f(e_{i₁},…,e_{iₙ})`
    pub fn at(&self, tuple: &[usize]) -> &[Rational] {
        let t = flat_index(tuple, self.adim);
        &self.data[t * self.vdim..(t + 1) * self.vdim]
    }

    /// `f(x₁,…,xₙ)` on arbitrary vectors, by multilinearity.
    pub fn eval(&self, args: &[&[Rational]]) -> Vector {
        assert_eq!(args.len(), self.degree, "cochain arity");
        let mut out = zero_vector(self.vdim);
        let supports: Vec<Vec<(usize, &Rational)>> = args
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut pos = vec![0usize; self.degree];
        loop {
            let mut coef = Rational::one();
            let mut flat = 0;
            for (s, &p) in supports.iter().zip(&pos) {
                coef *= s[p].1;
                flat = flat * self.adim + s[p].0;
            }
            axpy(&mut out, &coef, &self.data[flat * self.vdim..(flat + 1) * self.vdim]);
            let mut slot = self.degree;
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                pos[slot] += 1;
                if pos[slot] < supports[slot].len() {
                    break;
                }
                pos[slot] = 0;
            }
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain { data: self.data.iter().map(|x| x * s).collect(), ..self.clone() }
    }

    fn zip(&self, other: &Cochain, f: impl Fn(&Rational, &Rational) -> Rational) -> Cochain {
        assert_eq!(
            (self.degree, self.adim, self.vdim),
            (other.degree, other.adim, other.vdim),
            "cochain shapes"
        );
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Cochain { data, ..self.clone() }
    }
}

/// Position of a full tuple in skew-canonical coordinates.
#[derive(Debug, Clone)]
struct SkewLayout {
    degree: usize,
    adim: usize,
    vdim: usize,
    canonical: Vec<Vec<usize>>,
    /// For each full tuple: `None` if the skew slots repeat an index, else the
    /// sign of the sorting permutation and the canonical tuple index.
    lookup: Vec<Option<(bool, usize)>>,
}

impl SkewLayout {
    fn new(degree: usize, adim: usize, vdim: usize) -> Self {
        let total = adim.pow(degree as u32);
        let skew = degree.saturating_sub(1);
        let mut canonical = Vec::new();
        let mut canon_pos = vec![usize::MAX; total];
        for (t, pos) in canon_pos.iter_mut().enumerate() {
            let tuple = digits(t, adim, degree);
            if tuple[..skew].windows(2).all(|w| w[0] < w[1]) {
                *pos = canonical.len();
                canonical.push(tuple);
            }
        }
        let lookup = (0..total)
            .map(|t| {
                let mut tuple = digits(t, adim, degree);
                let mut negative = false;
                // bubble sort the skew slots, tracking the sign
                for pass in 0..skew {
                    for p in 0..skew - 1 - pass {
                        if tuple[p] > tuple[p + 1] {
                            tuple.swap(p, p + 1);
                            negative = !negative;
                        }
                    }
                }
                if tuple[..skew].windows(2).any(|w| w[0] == w[1]) {
                    return None;
                }
                Some((negative, canon_pos[flat_index(&tuple, adim)]))
            })
            .collect();
        Self { degree, adim, vdim, canonical, lookup }
    }

    fn coords(&self) -> usize {
        self.canonical.len() * self.vdim
    }

    fn expand(&self, coords: &[Rational]) -> Cochain {
        let mut c = Cochain::zero(self.degree, self.adim, self.vdim);
        let m = self.vdim;
        for (t, slot) in self.lookup.iter().enumerate() {
            if let Some((negative, ci)) = *slot {
                for k in 0..m {
                    let v = &coords[ci * m + k];
                    c.data[t * m + k] = if negative { -v } else { v.clone() };
                }
            }
        }
        c
    }

    fn restrict(&self, f: &Cochain) -> Vector {
        let mut out = Vec::with_capacity(self.coords());
        for tuple in &self.canonical {
            out.extend_from_slice(f.at(tuple));
        }
        out
    }
}

/// Basis of `Cⁿ(A;V)`.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    degree: usize,
    layout: SkewLayout,
    /// Basis vectors in canonical coordinates, as columns.
    coords: Matrix,
    basis: Vec<Cochain>,
    pivot_rows: Vec<usize>,
    pivot_inv: Matrix,
}

impl CochainSpace {
    fn from_coords(degree: usize, layout: SkewLayout, columns: Vec<Vector>) -> Self {
        let coords = Matrix::from_columns(layout.coords(), &columns);
        let basis = columns.iter().map(|c| layout.expand(c)).collect();
        let (_, pivot_rows) = coords.transpose().rref();
        let d = columns.len();
        let square = Matrix::from_fn(d, d, |i, j| coords.get(pivot_rows[i], j).clone());
        let pivot_inv = square.inverse().expect("basis columns are independent");
        Self { degree, layout, coords, basis, pivot_rows, pivot_inv }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    /// The same space with its basis reordered: new element `i` is old
    /// element `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let columns: Vec<Vector> = order.iter().map(|&j| self.coords.column(j)).collect();
        Self::from_coords(self.degree, self.layout.clone(), columns)
    }

    /// Linear combination of the basis.
    pub fn combine(&self, coeffs: &[Rational]) -> Cochain {
        self.layout.expand(&self.coords.apply(coeffs))
    }

    /// Coordinates of `f` in this basis, or `None` if `f` is not in the space.
    pub fn coordinates(&self, f: &Cochain) -> Option<Vector> {
        if f.degree != self.degree || f.adim != self.layout.adim || f.vdim != self.layout.vdim {
            return None;
        }
        let w = self.layout.restrict(f);
        let picked: Vector = self.pivot_rows.iter().map(|&r| w[r].clone()).collect();
        let c = self.pivot_inv.apply(&picked);
        (self.combine(&c) == *f).then_some(c)
    }

    pub fn contains(&self, f: &Cochain) -> bool {
        self.coordinates(f).is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// A validated pair (algebra, representation) with the data the coboundary
/// needs cached.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    algebra: BiHomPreLieAlgebra,
    rep: PreLieRep,
    bracket: BilinearProduct,
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

impl CochainComplex {
    /// Rejects invalid algebras and representations so that a cochain
    /// leaving the complex can only mean a defect.
    pub fn new(a: &BiHomPreLieAlgebra, r: &PreLieRep) -> Result<Self> {
        if r.algebra() != a {
            return Err(Error::Mismatch("representation is over a different algebra".into()));
        }
        let report = check_prelie(a);
        if !report.passed() {
            return Err(Error::Invalid { what: "algebra", report });
        }
        let report = check_prelie_rep(r);
        if !report.passed() {
            return Err(Error::Invalid { what: "representation", report });
        }
        let bracket = subadjacent_bracket(a.product(), a.twists());
        Ok(Self { algebra: a.clone(), rep: r.clone(), bracket })
    }

    pub fn algebra(&self) -> &BiHomPreLieAlgebra {
        &self.algebra
    }

    pub fn rep(&self) -> &PreLieRep {
        &self.rep
    }

    fn require_degree(n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Unsupported("cochains start in degree 1".into()));
        }
        Ok(())
    }

    /// Skew-symmetry in the first `n−1` slots, `φ∘f = f∘α^{⊗n}` and `ψ∘f = f∘β^{⊗n}`.
    pub fn check_cochain(&self, f: &Cochain) -> Result<AxiomReport> {
        let (n, m) = (self.algebra.dim(), self.rep.vdim());
        if f.adim != n || f.vdim != m {
            return Err(Error::Shape(format!(
                "cochain on {}→{} dims, complex is {n}→{m}",
                f.adim, f.vdim
            )));
        }
        let deg = f.degree;
        let alpha = columns(self.algebra.alpha());
        let beta = columns(self.algebra.beta());
        let mut report = AxiomReport::new();
        for t in 0..n.pow(deg as u32) {
            let tuple = digits(t, n, deg);
            let value = f.at(&tuple);
            for p in 0..deg.saturating_sub(2) {
                let mut swapped = tuple.clone();
                swapped.swap(p, p + 1);
                let sum: Vector = value.iter().zip(f.at(&swapped)).map(|(a, b)| a + b).collect();
                report.check(Axiom::CochainSkew, &tuple, sum);
            }
            for (axiom, twist, images) in
                [(Axiom::CochainPhi, self.rep.phi(), &alpha), (Axiom::CochainPsi, self.rep.psi(), &beta)]
            {
                let args: Vec<&[Rational]> = tuple.iter().map(|&i| images[i].as_slice()).collect();
                report.check(axiom, &tuple, vec_sub(&twist.apply(value), &f.eval(&args)));
            }
        }
        Ok(report)
    }

    pub fn space(&self, degree: usize) -> Result<CochainSpace> {
        Self::require_degree(degree)?;
        let layout = SkewLayout::new(degree, self.algebra.dim(), self.rep.vdim());
        let alpha = columns(self.algebra.alpha());
        let beta = columns(self.algebra.beta());
        let (phi, psi) = (self.rep.phi(), self.rep.psi());
        // column j: the equivariance residual of the j-th canonical unit cochain
        let cols: Vec<Vector> = (0..layout.coords())
            .map(|j| {
                let f = layout.expand(&basis_vector(layout.coords(), j));
                let mut res = Vec::with_capacity(2 * layout.coords());
                for (twist, images) in [(phi, &alpha), (psi, &beta)] {
                    for tuple in &layout.canonical {
                        let args: Vec<&[Rational]> = tuple.iter().map(|&i| images[i].as_slice()).collect();
                        res.extend(vec_sub(&twist.apply(f.at(tuple)), &f.eval(&args)));
                    }
                }
                res
            })
            .collect();
        let constraints = Matrix::from_columns(2 * layout.coords(), &cols);
        Ok(CochainSpace::from_coords(degree, layout, constraints.kernel_basis()))
    }

    /// `∂ⁿf` evaluated term by term on every basis `(n+1)`-tuple:
    ///
    /// ```text
    /// Σ_i (−1)^{i+1} L(αⁿ⁻¹βⁿ⁻¹(x_i)) f(α(x_1),…,x̂_i,…,α(x_n), x_{n+1})
    /// + Σ_i (−1)^{i+1} R(βⁿ⁻¹(x_{n+1})) f(β(x_1),…,x̂_i,…,β(x_n), αⁿ⁻¹(x_i))
    /// − Σ_i (−1)^{i+1} f(αβ(x_1),…,x̂_i,…,αβ(x_n), αⁿ⁻¹(x_i)·x_{n+1})
    /// + Σ_{i<j} (−1)^{i+j} f([β(x_i),α(x_j)]_C, αβ(x_1),…,x̂_i,…,x̂_j,…,αβ(x_n), β(x_{n+1}))
    /// ```
    ///
    /// The result is checked to lie in `Cⁿ⁺¹`.
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        let n = f.degree;
        Self::require_degree(n)?;
        let report = self.check_cochain(f)?;
        if !report.passed() {
            return Err(Error::Invalid { what: "cochain", report });
        }
        let g = self.coboundary_unchecked(f);
        let out = self.check_cochain(&g)?;
        if !out.passed() {
            return Err(Error::Defect(format!("coboundary left the cochain space:\n{out}")));
        }
        Ok(g)
    }

    fn coboundary_unchecked(&self, f: &Cochain) -> Cochain {
        let n = f.degree;
        let d = self.algebra.dim();
        let r = &self.rep;
        let (alpha, beta) = (self.algebra.alpha(), self.algebra.beta());
        let k = (n - 1) as u32;
        let an = alpha.pow(k);
        let bn = beta.pow(k);
        let left: Vec<Matrix> = (0..d).map(|i| r.left_at(&(&an * &bn).column(i))).collect();
        let right: Vec<Matrix> = (0..d).map(|i| r.right_at(&bn.column(i))).collect();
        let e: Vec<Vector> = (0..d).map(|i| basis_vector(d, i)).collect();
        let a1 = columns(alpha);
        let b1 = columns(beta);
        let ab = columns(&(alpha * beta));
        let an_cols = columns(&an);
        let prod: Vec<Vec<Vector>> =
            (0..d).map(|i| (0..d).map(|j| self.algebra.mul(&an_cols[i], &e[j])).collect()).collect();
        let br: Vec<Vec<Vector>> =
            (0..d).map(|i| (0..d).map(|j| self.bracket.apply(&b1[i], &a1[j])).collect()).collect();

        Cochain::from_fn(n + 1, d, r.vdim(), |x| {
            let last = x[n];
            let mut acc = zero_vector(r.vdim());
            for i in 0..n {
                let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
                let others = (0..n).filter(|&p| p != i);

                let mut args: Vec<&[Rational]> = others.clone().map(|p| a1[x[p]].as_slice()).collect();
                args.push(&e[last]);
                axpy(&mut acc, &sign, &left[x[i]].apply(&f.eval(&args)));

                let mut args: Vec<&[Rational]> = others.clone().map(|p| b1[x[p]].as_slice()).collect();
                args.push(&an_cols[x[i]]);
                axpy(&mut acc, &sign, &right[last].apply(&f.eval(&args)));

                let mut args: Vec<&[Rational]> = others.map(|p| ab[x[p]].as_slice()).collect();
                args.push(&prod[x[i]][last]);
                axpy(&mut acc, &-sign, &f.eval(&args));
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let sign = if (i + j) % 2 == 0 { Rational::one() } else { -Rational::one() };
                    let mut args: Vec<&[Rational]> = vec![&br[x[i]][x[j]]];
                    args.extend((0..n).filter(|&p| p != i && p != j).map(|p| ab[x[p]].as_slice()));
                    args.push(&b1[last]);
                    axpy(&mut acc, &sign, &f.eval(&args));
                }
            }
            acc
        })
    }

    /// Matrix of `∂ⁿ` from the basis of `src` (degree `n`) to the basis of `dst`
    /// (degree `n+1`).
    pub fn coboundary_matrix_in(&self, src: &CochainSpace, dst: &CochainSpace) -> Result<Matrix> {
        if dst.degree != src.degree + 1 {
            return Err(Error::Shape("target space must have degree one higher".into()));
        }
        let cols = src
            .basis()
            .iter()
            .map(|f| {
                let g = self.coboundary(f)?;
                dst.coordinates(&g).ok_or_else(|| Error::Defect("coboundary has no expansion in the target basis".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(dst.dim(), &cols))
    }

    pub fn coboundary_matrix(&self, n: usize) -> Result<Matrix> {
        self.coboundary_matrix_in(&self.space(n)?, &self.space(n + 1)?)
    }

    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport> {
        Self::require_degree(n)?;
        let c_n = self.space(n)?;
        let c_next = self.space(n + 1)?;
        let dn = self.coboundary_matrix_in(&c_n, &c_next)?;
        let dim_z = c_n.dim() - dn.rank();
        let dim_b = if n == 1 { 0 } else { self.coboundary_matrix_in(&self.space(n - 1)?, &c_n)?.rank() };
        if dim_b > dim_z {
            return Err(Error::Defect(format!("dim B^{n} = {dim_b} exceeds dim Z^{n} = {dim_z}")));
        }
        Ok(CohomologyReport { degree: n, dim_c: c_n.dim(), dim_z, dim_b, dim_h: dim_z - dim_b })
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        Ok(self.coboundary(f)?.is_zero())
    }

    /// A cochain `g` with `∂g = f`, if one exists. Degree-1 cochains are
    /// coboundaries only when zero, with no witness.
    pub fn coboundary_witness(&self, f: &Cochain) -> Result<Option<Cochain>> {
        let n = f.degree;
        if n <= 1 {
            return Err(Error::Unsupported("B^1 is zero and has no degree-0 witness".into()));
        }
        let c_n = self.space(n)?;
        let Some(target) = c_n.coordinates(f) else {
            let report = self.check_cochain(f)?;
            return Err(Error::Invalid { what: "cochain", report });
        };
        let c_prev = self.space(n - 1)?;
        let d = self.coboundary_matrix_in(&c_prev, &c_n)?;
        let Ok(x) = d.solve(&target) else {
            return Ok(None);
        };
        let witness = c_prev.combine(&x);
        if self.coboundary(&witness)? != *f {
            return Err(Error::Defect("coboundary witness does not reproduce the cochain".into()));
        }
        Ok(Some(witness))
    }

    pub fn is_coboundary(&self, f: &Cochain) -> Result<bool> {
        if f.degree == 1 {
            let report = self.check_cochain(f)?;
            if !report.passed() {
                return Err(Error::Invalid { what: "cochain", report });
            }
            return Ok(f.is_zero());
        }
        Ok(self.coboundary_witness(f)?.is_some())
    }
}

pub fn cochain_space(a: &BiHomPreLieAlgebra, r: &PreLieRep, n: usize) -> Result<CochainSpace> {
    CochainComplex::new(a, r)?.space(n)
}

pub fn check_cochain(f: &Cochain, a: &BiHomPreLieAlgebra, r: &PreLieRep) -> Result<AxiomReport> {
    CochainComplex::new(a, r)?.check_cochain(f)
}

pub fn coboundary(f: &Cochain, a: &BiHomPreLieAlgebra, r: &PreLieRep) -> Result<Cochain> {
    CochainComplex::new(a, r)?.coboundary(f)
}

pub fn coboundary_matrix(a: &BiHomPreLieAlgebra, r: &PreLieRep, n: usize) -> Result<Matrix> {
    CochainComplex::new(a, r)?.coboundary_matrix(n)
}

pub fn cohomology_dims(a: &BiHomPreLieAlgebra, r: &PreLieRep, n: usize) -> Result<CohomologyReport> {
    CochainComplex::new(a, r)?.cohomology(n)
}

pub fn is_cocycle(f: &Cochain, a: &BiHomPreLieAlgebra, r: &PreLieRep) -> Result<bool> {
    CochainComplex::new(a, r)?.is_cocycle(f)
}

pub fn is_coboundary(f: &Cochain, a: &BiHomPreLieAlgebra, r: &PreLieRep) -> Result<bool> {
    CochainComplex::new(a, r)?.is_coboundary(f)
}
