//! Axiom-check reports shared by every verification routine.

use std::fmt;

use crate::linalg::{format_vector, is_zero_vector, Matrix, Rational};

/// Every identity the crate knows how to check, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    AlphaBetaCommute,
    AlphaMultiplicative,
    BetaMultiplicative,
    LeftSymmetry,
    SkewSymmetry,
    Jacobi,
    PreservesProduct,
    PreservesAlpha,
    PreservesBeta,
    PhiPsiCommute,
    PhiLeft,
    PsiLeft,
    PhiRight,
    PsiRight,
    LeftActionIdentity,
    RightActionIdentity,
    PhiRho,
    PsiRho,
    RhoBracket,
    OperatorPhi,
    OperatorPsi,
    OperatorIdentity,
    RotaBaxterAlpha,
    RotaBaxterBeta,
    RotaBaxterIdentity,
    ClassicalTwists,
    CochainSkew,
    CochainPhi,
    CochainPsi,
    DeformationAlpha,
    DeformationBeta,
    DeformationSkew,
    DeformationCocycle,
    DeformationClosure,
    /// Coefficient of `t^k` in the identity of the deformed structure.
    DeformedIdentity(u8),
    NijenhuisAlpha,
    NijenhuisBeta,
    NijenhuisIdentity,
    EquivalenceFirstOrder,
    EquivalenceSecondOrder,
    EquivalenceThirdOrder,
}

impl Axiom {
    pub fn name(&self) -> String {
        let s = match self {
            Axiom::AlphaBetaCommute => "alpha-beta commutation",
            Axiom::AlphaMultiplicative => "alpha multiplicative",
            Axiom::BetaMultiplicative => "beta multiplicative",
            Axiom::LeftSymmetry => "BiHom-left-symmetry",
            Axiom::SkewSymmetry => "BiHom-skew-symmetry",
            Axiom::Jacobi => "BiHom-Jacobi",
            Axiom::PreservesProduct => "preserves product",
            Axiom::PreservesAlpha => "intertwines alpha",
            Axiom::PreservesBeta => "intertwines beta",
            Axiom::PhiPsiCommute => "phi-psi commutation",
            Axiom::PhiLeft => "phi-L intertwining",
            Axiom::PsiLeft => "psi-L intertwining",
            Axiom::PhiRight => "phi-R intertwining",
            Axiom::PsiRight => "psi-R intertwining",
            Axiom::LeftActionIdentity => "left action identity",
            Axiom::RightActionIdentity => "right action identity",
            Axiom::PhiRho => "phi-rho intertwining",
            Axiom::PsiRho => "psi-rho intertwining",
            Axiom::RhoBracket => "rho bracket identity",
            Axiom::OperatorPhi => "T-phi intertwining",
            Axiom::OperatorPsi => "T-psi intertwining",
            Axiom::OperatorIdentity => "O-operator identity",
            Axiom::RotaBaxterAlpha => "R-alpha commutation",
            Axiom::RotaBaxterBeta => "R-beta commutation",
            Axiom::RotaBaxterIdentity => "Rota-Baxter identity",
            Axiom::ClassicalTwists => "classical input has identity twists",
            Axiom::CochainSkew => "cochain skew-symmetry",
            Axiom::CochainPhi => "cochain phi-equivariance",
            Axiom::CochainPsi => "cochain psi-equivariance",
            Axiom::DeformationAlpha => "pi alpha-equivariance",
            Axiom::DeformationBeta => "pi beta-equivariance",
            Axiom::DeformationSkew => "pi BiHom-skew-symmetry",
            Axiom::DeformationCocycle => "deformation cocycle condition",
            Axiom::DeformationClosure => "deformation self-closure",
            Axiom::DeformedIdentity(k) => return format!("deformed identity t^{k} coefficient"),
            Axiom::NijenhuisAlpha => "N-alpha commutation",
            Axiom::NijenhuisBeta => "N-beta commutation",
            Axiom::NijenhuisIdentity => "Nijenhuis identity",
            Axiom::EquivalenceFirstOrder => "equivalence first order",
            Axiom::EquivalenceSecondOrder => "equivalence second order",
            Axiom::EquivalenceThirdOrder => "equivalence third order",
        };
        s.to_string()
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// One failed instance of an identity: which identity, on which basis
/// indices, and the (nonzero) residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: residual {}", self.axiom, self.indices, format_vector(&self.residual))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a violation if `residual` is not identically zero.
    pub fn check(&mut self, axiom: Axiom, indices: &[usize], residual: Vec<Rational>) {
        if !is_zero_vector(&residual) {
            self.violations.push(Violation { axiom, indices: indices.to_vec(), residual });
        }
    }

    /// Matrix identity `lhs = rhs`; the residual is `lhs - rhs` flattened row-major.
    pub fn check_matrices(&mut self, axiom: Axiom, indices: &[usize], lhs: &Matrix, rhs: &Matrix) {
        if lhs != rhs {
            let diff = lhs - rhs;
            self.violations.push(Violation {
                axiom,
                indices: indices.to_vec(),
                residual: diff.entries().to_vec(),
            });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn count(&self, axiom: Axiom) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }

    /// Distinct axioms that failed, in first-failure order.
    pub fn failed_axioms(&self) -> Vec<Axiom> {
        let mut out: Vec<Axiom> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom) {
                out.push(v.axiom);
            }
        }
        out
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {v}")?;
        }
        Ok(())
    }
}
