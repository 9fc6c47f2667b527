//! Small named algebras and representations used by the examples, the test
//! suites and the CLI.
//!
//! Every classical algebra here is graded, so `diag(λ^deg)` is an
//! automorphism for any nonzero `λ` and Yau twists by such pairs stay valid.

use crate::algebra::{yau_twist, BiHomPreLieAlgebra, BilinearProduct};
use crate::error::Result;
use crate::linalg::{frac, rat, Matrix, Rational};
use crate::representation::{adjoint_rep, twist_rep, PreLieRep};

/// A left-symmetric algebra with a grading of its basis.
#[derive(Debug, Clone)]
pub struct ClassicalFixture {
    pub name: &'static str,
    pub product: BilinearProduct,
    pub degrees: Vec<i32>,
}

impl ClassicalFixture {
    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn algebra(&self) -> BiHomPreLieAlgebra {
        BiHomPreLieAlgebra::untwisted(self.product.clone())
    }

    /// `diag(λ^deg)`
    pub fn grading_map(&self, lambda: &Rational) -> Matrix {
        let powers: Vec<Rational> = self.degrees.iter().map(|&d| pow(lambda, d)).collect();
        Matrix::diag(&powers)
    }

    /// Yau twist by `α = diag(λ^deg)`, `β = diag(μ^deg)`.
    pub fn twisted(&self, lambda: &Rational, mu: &Rational) -> Result<BiHomPreLieAlgebra> {
        yau_twist(&self.product, self.grading_map(lambda), self.grading_map(mu))
    }
}

fn pow(x: &Rational, d: i32) -> Rational {
    if d >= 0 {
        num_traits::pow(x.clone(), d as usize)
    } else {
        num_traits::pow(x.recip(), (-d) as usize)
    }
}

/// `e₁·e₁ = e₂`
pub fn nilpotent() -> ClassicalFixture {
    ClassicalFixture { name: "nilpotent", product: BilinearProduct::from_entries(2, &[(0, 0, 1, 1)]), degrees: vec![1, 2] }
}

/// Upper triangular 2×2 matrices on `E₁₁, E₁₂, E₂₂`.
pub fn upper_triangular() -> ClassicalFixture {
    ClassicalFixture {
        name: "upper-triangular",
        product: BilinearProduct::from_entries(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]),
        degrees: vec![0, 1, 0],
    }
}

/// `x, x², x³` with `x⁴ = 0`.
pub fn truncated_polynomials() -> ClassicalFixture {
    ClassicalFixture {
        name: "truncated-polynomials",
        product: BilinearProduct::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 2, 1)]),
        degrees: vec![1, 2, 3],
    }
}

/// `xⁱ·xʲ = j x^{i+j−1}` on `x, x², x³`, higher powers dropped.
pub fn witt3() -> ClassicalFixture {
    ClassicalFixture {
        name: "witt3",
        product: BilinearProduct::from_entries(
            3,
            &[(0, 0, 0, 1), (0, 1, 1, 2), (0, 2, 2, 3), (1, 0, 1, 1), (1, 1, 2, 2), (2, 0, 2, 1)],
        ),
        degrees: vec![0, 1, 2],
    }
}

/// `xⁱ·xʲ = j x^{i+j−1}` on `x, x²`.
pub fn witt2() -> ClassicalFixture {
    ClassicalFixture {
        name: "witt2",
        product: BilinearProduct::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 2), (1, 0, 1, 1)]),
        degrees: vec![0, 1],
    }
}

/// `e₁·e₁ = e₁`, `e₁·e₂ = e₂`
pub fn affine() -> ClassicalFixture {
    ClassicalFixture {
        name: "affine",
        product: BilinearProduct::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]),
        degrees: vec![0, 1],
    }
}

/// `e·e = e`
pub fn unit_line() -> ClassicalFixture {
    ClassicalFixture { name: "unit", product: BilinearProduct::from_entries(1, &[(0, 0, 0, 1)]), degrees: vec![0] }
}

pub fn abelian(n: usize) -> ClassicalFixture {
    ClassicalFixture { name: "abelian", product: BilinearProduct::zero(n), degrees: (1..=n as i32).collect() }
}

pub fn classical_fixtures() -> Vec<ClassicalFixture> {
    vec![
        unit_line(),
        abelian(2),
        nilpotent(),
        affine(),
        witt2(),
        upper_triangular(),
        truncated_polynomials(),
        witt3(),
    ]
}

/// `(λ, μ)` pairs for Yau twists, identity first.
pub fn twist_parameters() -> Vec<(Rational, Rational)> {
    vec![(rat(1), rat(1)), (rat(2), rat(3)), (rat(-1), rat(2)), (frac(1, 2), rat(3))]
}

/// Every classical fixture under every twist parameter pair.
pub fn twisted_fixtures() -> Vec<(String, BiHomPreLieAlgebra)> {
    let mut out = Vec::new();
    for fx in classical_fixtures() {
        for (l, m) in twist_parameters() {
            let a = fx.twisted(&l, &m).expect("grading maps are automorphisms");
            out.push((format!("{}[{l},{m}]", fx.name), a));
        }
    }
    out
}

/// Upper triangular matrices acting on column vectors, `L(x)v = xv`, `R = 0`,
/// twisted by `α = diag(1,λ,1)`, `β = diag(1,μ,1)`,
/// `φ = c·diag(λ,1)`, `ψ = d·diag(μ,1)`.
pub fn column_vector_rep(lambda: &Rational, mu: &Rational, c: &Rational, d: &Rational) -> Result<PreLieRep> {
    let fx = upper_triangular();
    let unit = |i: usize, j: usize| Matrix::from_fn(2, 2, |r, s| if (r, s) == (i, j) { rat(1) } else { rat(0) });
    let left = vec![unit(0, 0), unit(0, 1), unit(1, 1)];
    let right = vec![Matrix::zeros(2, 2); 3];
    let classical = PreLieRep::new(fx.algebra(), left, right, Matrix::identity(2), Matrix::identity(2))?;
    let phi = Matrix::diag(&[lambda.clone(), rat(1)]).scale(c);
    let psi = Matrix::diag(&[mu.clone(), rat(1)]).scale(d);
    twist_rep(&classical, fx.grading_map(lambda), fx.grading_map(mu), phi, psi)
}

/// Adjoint representation of the classical algebra twisted with `φ = cα`, `ψ = dβ`.
pub fn twisted_adjoint(
    fx: &ClassicalFixture,
    lambda: &Rational,
    mu: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<PreLieRep> {
    let alpha = fx.grading_map(lambda);
    let beta = fx.grading_map(mu);
    let phi = alpha.scale(c);
    let psi = beta.scale(d);
    twist_rep(&adjoint_rep(&fx.algebra()), alpha, beta, phi, psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_prelie;
    use crate::representation::check_prelie_rep;

    #[test]
    fn every_twisted_fixture_is_bihom_pre_lie() {
        for (name, a) in twisted_fixtures() {
            assert!(check_prelie(&a).passed(), "{name}");
        }
    }

    #[test]
    fn representation_builders_pass() {
        for (l, m) in twist_parameters() {
            let r = column_vector_rep(&l, &m, &rat(2), &frac(-1, 3)).unwrap();
            assert!(check_prelie_rep(&r).passed());
            for fx in classical_fixtures() {
                let r = twisted_adjoint(&fx, &l, &m, &rat(3), &rat(-2)).unwrap();
                assert!(check_prelie_rep(&r).passed(), "{}", fx.name);
            }
        }
    }

    #[test]
    fn negative_degrees_invert() {
        assert_eq!(pow(&rat(2), -2), frac(1, 4));
    }
}
