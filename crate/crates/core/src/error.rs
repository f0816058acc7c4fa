use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element is not in the left subalgebra")]
    NotInLeftSubalgebra,
    #[error("element is not left grouplike")]
    NotGrouplike,
    #[error("functional is degenerate (singular Gram matrix)")]
    DegenerateFunctional,
    #[error("functional does not have index 1: sum of e_i e^i is {0}")]
    IndexNotOne(String),
    #[error("trace form is degenerate: the polynomial is not separable")]
    DegenerateTrace,
    #[error("base algebra admits no separability idempotent")]
    NotSeparable,
    #[error(
        "canonical map A⊗_R A → Hom(M⊗_N M, M) is not bijective: rank {rank}, \
         quotient dimension {quotient_dim}, target dimension {hom_dim}"
    )]
    NotLiftable {
        rank: usize,
        quotient_dim: usize,
        hom_dim: usize,
    },
    #[error("numeric root isolation did not resolve within {bits} bits of precision")]
    PrecisionExhausted { bits: u32 },
    #[error("action does not factor through the extracted map: {0}")]
    FactorizationFailure(String),
    #[error("tensor quotient of dimension {0} is too large to reduce without a separable base")]
    QuotientTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
