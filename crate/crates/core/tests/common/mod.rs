#![allow(dead_code)]
// Fixture generators shared by the integration and acceptance tests.

use bihom::catalog::{classical_fixtures, column_vector_rep, twist_parameters, twisted_adjoint, ClassicalFixture};
use bihom::linalg::{frac, rat};
use bihom::{
    adjoint_rep, check_lie_rep, check_prelie_rep, induced_lie_rep, trivial_rep, BiHomPreLieAlgebra,
    BilinearProduct, InducedVariant, LieRep, Matrix, PreLieRep, Rational,
};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound))
}

/// Unit lower times unit upper triangular, so the determinant is 1.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Greater => small_int(rng, 2),
        std::cmp::Ordering::Less => rat(0),
    });
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Less => small_int(rng, 2),
        std::cmp::Ordering::Greater => rat(0),
    });
    &lower * &upper
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_int(rng, bound))
}

/// Zero actions on a 2-dimensional carrier with non-identity diagonal twists.
pub fn zero_rep(a: &BiHomPreLieAlgebra) -> PreLieRep {
    let zeros = vec![Matrix::zeros(2, 2); a.dim()];
    PreLieRep::new(a.clone(), zeros.clone(), zeros, Matrix::diag_ints(&[2, -1]), Matrix::diag_ints(&[3, 5])).unwrap()
}

/// Valid representations with `dim A ≤ 3` and `dim V ≤ 2`, many with
/// non-identity twists; the last block is rewritten in random bases so the
/// twists are no longer diagonal.
pub fn small_reps() -> Vec<(String, PreLieRep)> {
    let mut out = Vec::new();
    for fx in classical_fixtures() {
        for (l, m) in twist_parameters() {
            let a = fx.twisted(&l, &m).unwrap();
            let tag = format!("{}[{l},{m}]", fx.name);
            out.push((format!("{tag} trivial"), trivial_rep(&a)));
            if fx.dim() <= 2 {
                out.push((format!("{tag} adjoint"), adjoint_rep(&a)));
                out.push((format!("{tag} twisted adjoint"), twisted_adjoint(&fx, &l, &m, &rat(2), &frac(-1, 3)).unwrap()));
            } else {
                out.push((format!("{tag} zero"), zero_rep(&a)));
            }
        }
    }
    for (l, m) in twist_parameters() {
        out.push((format!("column[{l},{m}]"), column_vector_rep(&l, &m, &rat(1), &rat(1)).unwrap()));
        out.push((format!("column[{l},{m}] scaled"), column_vector_rep(&l, &m, &rat(-2), &frac(1, 3)).unwrap()));
    }
    let mut r = rng(7);
    let base: Vec<(String, PreLieRep)> = out.iter().step_by(5).cloned().collect();
    for (name, rep) in base {
        let p = random_unimodular(&mut r, rep.algebra().dim());
        let q = random_unimodular(&mut r, rep.vdim());
        out.push((format!("{name} rebased"), rep.change_basis(&p, &q).unwrap()));
    }
    out
}

/// Valid representations paired with every other one on the same algebra.
pub fn rep_pairs(reps: &[(String, PreLieRep)]) -> Vec<(String, PreLieRep, PreLieRep)> {
    let mut out = Vec::new();
    for (n1, r1) in reps {
        for (n2, r2) in reps {
            if r1.algebra() == r2.algebra() && r1.vdim() * r2.vdim() <= 4 {
                out.push((format!("{n1} ⊗ {n2}"), r1.clone(), r2.clone()));
            }
        }
    }
    out
}

/// Perturbations of valid representations that the checker rejects.
pub fn corrupted_reps(reps: &[(String, PreLieRep)]) -> Vec<(String, PreLieRep)> {
    let mut out = Vec::new();
    for (name, rep) in reps {
        let m = rep.vdim();
        let mut left = rep.left().to_vec();
        let mut right = rep.right().to_vec();
        let bump = Matrix::from_fn(m, m, |i, j| if i == 0 && j == m - 1 { rat(1) } else { rat(0) });
        if out.len() % 2 == 0 {
            left[0] = &left[0] + &bump;
        } else {
            right[rep.algebra().dim() - 1] = &right[rep.algebra().dim() - 1] + &bump;
        }
        let bad = rep.with_actions(left, right).unwrap();
        if !check_prelie_rep(&bad).passed() {
            out.push((format!("{name} corrupted"), bad));
        }
    }
    out
}

pub fn lie_reps(reps: &[(String, PreLieRep)]) -> Vec<(String, LieRep)> {
    let mut out = Vec::new();
    for (name, rep) in reps {
        for v in [InducedVariant::Full, InducedVariant::LeftOnly] {
            if let Ok(l) = induced_lie_rep(rep, v) {
                if check_lie_rep(&l).passed() {
                    out.push((format!("{name} {v:?}"), l));
                }
            }
        }
    }
    out
}

pub fn corrupted_lie_reps(reps: &[(String, LieRep)]) -> Vec<(String, LieRep)> {
    let mut out = Vec::new();
    for (name, rep) in reps {
        let m = rep.vdim();
        let mut rho = rep.rho().to_vec();
        let k = out.len() % rho.len();
        rho[k] = &rho[k] + &Matrix::from_fn(m, m, |i, j| if i == m - 1 && j == 0 { rat(1) } else { rat(0) });
        let bad = rep.with_rho(rho).unwrap();
        if !check_lie_rep(&bad).passed() {
            out.push((format!("{name} corrupted"), bad));
        }
    }
    out
}

/// Classical left-symmetric algebras in random bases, product rescaled.
pub fn random_classical(rng: &mut ChaCha8Rng) -> BiHomPreLieAlgebra {
    let fixtures: Vec<ClassicalFixture> = classical_fixtures();
    let fx = &fixtures[rng.gen_range(0..fixtures.len())];
    let p = random_unimodular(rng, fx.dim());
    let s = loop {
        let s = small_int(rng, 2);
        if s != rat(0) {
            break s;
        }
    };
    let product: BilinearProduct = fx.product.scale(&s);
    BiHomPreLieAlgebra::untwisted(product).change_basis(&p).unwrap()
}

/// The classical left-symmetric coboundary written with plain vectors and
/// loops, for identity twists only.
pub struct Classical {
    d: usize,
    m: usize,
    c: Vec<Vec<Vec<Rational>>>,
    l: Vec<Vec<Vec<Rational>>>,
    r: Vec<Vec<Vec<Rational>>>,
}

impl Classical {
    pub fn new(rep: &PreLieRep) -> Self {
        let a = rep.algebra();
        let (d, m) = (a.dim(), rep.vdim());
        let c = (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| a.product().coeff(i, j, k).clone()).collect()).collect()).collect();
        let grab = |ms: &[Matrix]| -> Vec<Vec<Vec<Rational>>> {
            ms.iter().map(|x| (0..m).map(|i| (0..m).map(|j| x.get(i, j).clone()).collect()).collect()).collect()
        };
        Classical { d, m, c, l: grab(rep.left()), r: grab(rep.right()) }
    }

    fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.d];
        for (xi, plane) in x.iter().zip(&self.c) {
            for (yj, row) in y.iter().zip(plane) {
                let s = xi * yj;
                if s.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(row) {
                    *o += &s * c;
                }
            }
        }
        out
    }

    fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.mul(x, y).iter().zip(self.mul(y, x)).map(|(p, q)| p - q).collect()
    }

    fn act(&self, ops: &[Vec<Vec<Rational>>], x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.m];
        for (xi, op) in x.iter().zip(ops) {
            for p in 0..self.m {
                for q in 0..self.m {
                    out[p] += xi * &op[p][q] * &v[q];
                }
            }
        }
        out
    }

    /// `f(args)` with `f` given on basis tuples, extended multilinearly.
    pub fn apply(&self, f: &dyn Fn(&[usize]) -> Vec<Rational>, args: &[Vec<Rational>]) -> Vec<Rational> {
        let k = args.len();
        let mut out = vec![Rational::zero(); self.m];
        for code in 0..self.d.pow(k as u32) {
            let mut t = vec![0; k];
            let mut rest = code;
            for s in (0..k).rev() {
                t[s] = rest % self.d;
                rest /= self.d;
            }
            let coef = t.iter().enumerate().fold(Rational::one(), |acc, (s, &i)| acc * &args[s][i]);
            if coef.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(f(&t)) {
                *o += &coef * v;
            }
        }
        out
    }

    /// The classical left-symmetric coboundary of an `n`-cochain at basis
    /// vectors `x_1, …, x_{n+1}`.
    pub fn delta(&self, f: &dyn Fn(&[usize]) -> Vec<Rational>, n: usize, x: &[Vec<Rational>]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.m];
        let mut add = |sign: i64, v: Vec<Rational>| {
            for (o, t) in out.iter_mut().zip(v) {
                *o += t * Rational::from_integer(sign.into());
            }
        };
        let last = &x[n];
        for i in 0..n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let without_i: Vec<Vec<Rational>> = (0..n).filter(|&p| p != i).map(|p| x[p].clone()).collect();
            let mut args = without_i.clone();
            args.push(last.clone());
            add(sign, self.act(&self.l, &x[i], &self.apply(f, &args)));
            let mut args = without_i.clone();
            args.push(x[i].clone());
            add(sign, self.act(&self.r, last, &self.apply(f, &args)));
            let mut args = without_i;
            args.push(self.mul(&x[i], last));
            add(-sign, self.apply(f, &args));
        }
        for i in 0..n {
            for j in i + 1..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let mut args = vec![self.bracket(&x[i], &x[j])];
                args.extend((0..=n).filter(|&p| p != i && p != j).map(|p| x[p].clone()));
                add(sign, self.apply(f, &args));
            }
        }
        out
    }
}
