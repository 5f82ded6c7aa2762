use thiserror::Error;

/// Every failure the kernel can report. Validation errors carry a witness: the
/// basis indices at which the offending equation was observed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no solution")]
    NoSolution,
    #[error("map is not bijective: rank {rank}, domain {domain}, codomain {codomain}")]
    NotBijective { rank: usize, domain: usize, codomain: usize },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("module {module} has no action {action}")]
    MissingAction { module: String, action: String },
    #[error("{context} does not descend to the quotient; witness {witness:?}")]
    NotWellDefined { context: String, witness: Vec<usize> },
    #[error("bad space expression {0}")]
    BadSpace(String),
    #[error("algebra {algebra}: {law} fails at {witness:?}")]
    AlgebraAxiom { algebra: String, law: String, witness: Vec<usize> },
    #[error("zero-dimensional algebra")]
    ZeroAlgebra,
    #[error("not an algebra map ({map}) at {witness:?}")]
    NotAlgebraMap { map: String, witness: Vec<usize> },
    #[error("module axiom for action {action} fails at {witness:?}")]
    ModuleAxiom { action: String, witness: Vec<usize> },
    #[error("images of s and t do not commute at {witness:?}")]
    NonCommutingImages { witness: Vec<usize> },
    #[error("coproduct of basis element {witness:?} is not in the Takeuchi product")]
    CoproductNotInTakeuchi { witness: Vec<usize> },
    #[error("coproduct is not B-bilinear at {witness:?}")]
    CoproductNotBilinear { witness: Vec<usize> },
    #[error("counit is not B-bilinear at {witness:?}")]
    CounitNotBilinear { witness: Vec<usize> },
    #[error("not coassociative at {witness:?}")]
    NotCoassociative { witness: Vec<usize> },
    #[error("counit law fails ({side}) at {witness:?}")]
    CounitLawFails { side: String, witness: Vec<usize> },
    #[error("comparison map {0} is not bijective")]
    AlphaNotBijective(String),
    #[error("not a left Hopf algebroid: lambda has rank {rank} of {dim}")]
    NotLeftHopf { rank: usize, dim: usize },
    #[error("not an anti-left Hopf algebroid: mu has rank {rank} of {dim}")]
    NotAntiLeftHopf { rank: usize, dim: usize },
    #[error("not a comodule ({law}) at {witness:?}")]
    NotComodule { law: String, witness: Vec<usize> },
    #[error("coaction is not multiplicative at {witness:?}")]
    NotComoduleAlgebra { witness: Vec<usize> },
    #[error("not skew regular: phi has rank {rank} of {dim}")]
    NotSkewRegular { rank: usize, dim: usize },
    #[error("not regular: psi has rank {rank} of {dim}")]
    NotRegular { rank: usize, dim: usize },
    #[error("coinvariants are not a subalgebra at {witness:?}")]
    NotSubalgebra { witness: Vec<usize> },
    #[error("not Galois: canonical map {domain} -> {codomain} has rank {rank}")]
    NotGalois { rank: usize, domain: usize, codomain: usize },
    #[error("round trip fails ({what}) at {witness:?}")]
    RoundTripFails { what: String, witness: Vec<usize> },
    #[error("cocycle is not normalised at {witness:?}")]
    NotNormalized { witness: Vec<usize> },
    #[error("cocycle law ({law}) fails at {witness:?}")]
    CocycleLawFails { law: String, witness: Vec<usize> },
    #[error("not convolution invertible: {what} at {witness:?}")]
    NotConvolutionInvertible { what: String, witness: Vec<usize> },
    #[error("pairing axiom {axiom} fails at {witness:?}")]
    AxiomFails { axiom: String, witness: Vec<usize> },
    #[error("ring is not associative at {witness:?}")]
    NotAssociative { witness: Vec<usize> },
    #[error("B-bar is not contained in the coinvariants (basis element {witness:?})")]
    BbarNotInCoinvariants { witness: Vec<usize> },
    #[error("cleaving map fails {law} at {witness:?}")]
    GammaNotColinear { law: String, witness: Vec<usize> },
    #[error("j has rank {rank} of {dim}")]
    JNotBijective { rank: usize, dim: usize },
    #[error("measuring condition {law} fails at {witness:?}")]
    MeasuringFails { law: String, witness: Vec<usize> },
    #[error("twisted module law fails at {witness:?}")]
    TwistedModuleFails { witness: Vec<usize> },
    #[error("not an isomorphism: {property} fails at {witness:?}")]
    NotIsomorphism { property: String, witness: Vec<usize> },
    #[error("not gauge equivalent: {what} {witness:?}")]
    NotEquivalent { what: String, witness: Vec<usize> },
    #[error("gauge element invalid: {law} fails at {witness:?}")]
    NotGauge { law: String, witness: Vec<usize> },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("group table invalid: {0}")]
    NotAGroup(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error in {field}: {message}")]
    Schema { field: String, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable class name used by the CLI and the negative fixtures.
    pub fn class(&self) -> &'static str {
        use Error::*;
        match self {
            NoSolution => "NoSolution",
            NotBijective { .. } => "NotBijective",
            DimMismatch(_) => "DimMismatch",
            AmbientMismatch(..) => "AmbientMismatch",
            MissingAction { .. } => "MissingAction",
            NotWellDefined { .. } => "NotWellDefined",
            BadSpace(_) => "BadSpace",
            AlgebraAxiom { .. } => "AlgebraAxiom",
            ZeroAlgebra => "ZeroAlgebra",
            NotAlgebraMap { .. } => "NotAlgebraMap",
            ModuleAxiom { .. } => "ModuleAxiom",
            NonCommutingImages { .. } => "NonCommutingImages",
            CoproductNotInTakeuchi { .. } => "CoproductNotInTakeuchi",
            CoproductNotBilinear { .. } => "CoproductNotBilinear",
            CounitNotBilinear { .. } => "CounitNotBilinear",
            NotCoassociative { .. } => "NotCoassociative",
            CounitLawFails { .. } => "CounitLawFails",
            AlphaNotBijective(_) => "AlphaNotBijective",
            NotLeftHopf { .. } => "NotLeftHopf",
            NotAntiLeftHopf { .. } => "NotAntiLeftHopf",
            NotComodule { .. } => "NotComodule",
            NotComoduleAlgebra { .. } => "NotComoduleAlgebra",
            NotSkewRegular { .. } => "NotSkewRegular",
            NotRegular { .. } => "NotRegular",
            NotSubalgebra { .. } => "NotSubalgebra",
            NotGalois { .. } => "NotGalois",
            RoundTripFails { .. } => "RoundTripFails",
            NotNormalized { .. } => "NotNormalized",
            CocycleLawFails { .. } => "CocycleLawFails",
            NotConvolutionInvertible { .. } => "NotConvolutionInvertible",
            AxiomFails { .. } => "AxiomFails",
            NotAssociative { .. } => "NotAssociative",
            BbarNotInCoinvariants { .. } => "BbarNotInCoinvariants",
            GammaNotColinear { .. } => "GammaNotColinear",
            JNotBijective { .. } => "JNotBijective",
            MeasuringFails { .. } => "MeasuringFails",
            TwistedModuleFails { .. } => "TwistedModuleFails",
            NotIsomorphism { .. } => "NotIsomorphism",
            NotEquivalent { .. } => "NotEquivalent",
            NotGauge { .. } => "NotGauge",
            Undecided(_) => "Undecided",
            NotAGroup(_) => "NotAGroup",
            Syntax { .. } => "SyntaxError",
            Schema { .. } => "SchemaError",
            Io(_) => "IoError",
        }
    }

    /// Witness indices: basis indices of the offending instance, or the
    /// observed rank and dimensions for rank failures (for an inconsistent
    /// convolution system, the ranks of the system and of its augmentation),
    /// or the line and column of a syntax error.
    /// The error for a convolution-inverse system `m x = rhs` with no solution.
    pub fn inconsistent_convolution<F: crate::field::Field>(what: &str, m: &crate::linalg::Matrix<F>, rhs: &[F]) -> Self {
        let aug = m.hstack(&crate::linalg::Matrix::from_cols(rhs.len(), &[rhs.to_vec()]));
        Error::NotConvolutionInvertible { what: what.into(), witness: vec![m.rank(), aug.rank()] }
    }

    pub fn witness(&self) -> Vec<usize> {
        use Error::*;
        match self {
            NotWellDefined { witness, .. }
            | AlgebraAxiom { witness, .. }
            | NotAlgebraMap { witness, .. }
            | ModuleAxiom { witness, .. }
            | NonCommutingImages { witness }
            | CoproductNotInTakeuchi { witness }
            | CoproductNotBilinear { witness }
            | CounitNotBilinear { witness }
            | NotCoassociative { witness }
            | CounitLawFails { witness, .. }
            | NotComodule { witness, .. }
            | NotComoduleAlgebra { witness }
            | NotSubalgebra { witness }
            | RoundTripFails { witness, .. }
            | NotNormalized { witness }
            | CocycleLawFails { witness, .. }
            | AxiomFails { witness, .. }
            | NotAssociative { witness }
            | BbarNotInCoinvariants { witness }
            | GammaNotColinear { witness, .. }
            | MeasuringFails { witness, .. }
            | TwistedModuleFails { witness }
            | NotIsomorphism { witness, .. }
            | NotGauge { witness, .. }
            | NotConvolutionInvertible { witness, .. }
            | NotEquivalent { witness, .. } => witness.clone(),
            NotBijective { rank, domain, codomain } | NotGalois { rank, domain, codomain } => vec![*rank, *domain, *codomain],
            NotLeftHopf { rank, dim } | NotAntiLeftHopf { rank, dim } | NotSkewRegular { rank, dim } | NotRegular { rank, dim } | JNotBijective { rank, dim } => vec![*rank, *dim],
            Syntax { line, column, .. } => vec![*line, *column],
            _ => Vec::new(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
